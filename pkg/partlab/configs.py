# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
The ``configs`` module holds every setting that changes how much work the library is
willing to do and how it reports on it.  The convention for this file is as follows:

1. Things that are **not** supposed to change, because their value is expected to be
   constant, are declared in ``ALL_CAPS``.  See

   - :data:`~partlab.configs.SECTION_HEADING_CHAR`
   - :data:`~partlab.configs.DEFAULT_ENUMERATION_MAX_N`

2. Internal / private variables that are **not** supposed to changed except for by this
   package are declared as ``_lower_case_with_single_leading_underscore``.

3. Every other variable is declared as ``camelCase``, indicating that it can be
   configured **indirectly** by using it as a key in a dictionary given to
   :func:`~partlab.configs.apply_configurations`.  The command line maps its flags onto
   these keys, and the Sphinx extension reads them from ``partlab_args`` in ``conf.py``:

   .. code-block:: py

      partlab_args = {
          "containmentFolder": "./tables",
          "rootFileName":      "tables_root.rst",
          "rootFileTitle":     "Value Tables",
          "termBudget":        10 ** 7,
          # ...
      }
'''

from __future__ import annotations

import os
import textwrap
from difflib import SequenceMatcher
from io import StringIO
from pathlib import Path

from sphinx.errors import ConfigError, ExtensionError
from sphinx.util import logging


logger = logging.getLogger(__name__)
"""
The Sphinx logger adapter used for warnings emitted during a documentation build.
"""

########################################################################################
# Work guards                                                                          #
########################################################################################
DEFAULT_ENUMERATION_MAX_N = 80
''' Default value of :data:`~partlab.configs.enumerationMaxN`. '''

DEFAULT_CLOSED_FORM_MAX_PARTS = 16
''' Default value of :data:`~partlab.configs.closedFormMaxParts`. '''

DEFAULT_TERM_BUDGET = 10 ** 8
''' Default value of :data:`~partlab.configs.termBudget`. '''

enumerationMaxN = DEFAULT_ENUMERATION_MAX_N
'''
**Optional**
    The brute-force oracles in :mod:`~partlab.enumeration` visit every partition they
    count.  Any request estimated to visit more partitions than there are partitions
    of ``enumerationMaxN`` is refused with a
    :class:`~partlab.exceptions.BudgetExceededError`.

**Value** (int)
    Positive integer, default ``80`` (that is, roughly sixteen million partitions).
'''

closedFormMaxParts = DEFAULT_CLOSED_FORM_MAX_PARTS
'''
**Optional**
    The nested closed form for ``p(n, k)`` evaluates one summand per assignment of the
    inner indices, which grows quickly with ``k``.  For ``k`` above this guard
    :func:`~partlab.partition_fn.p_closed` refuses to run when the exact summand count
    exceeds :data:`~partlab.configs.termBudget`.

**Value** (int)
    Integer ``>= 3``, default ``16``.
'''

termBudget = DEFAULT_TERM_BUDGET
'''
**Optional**
    The number of summand evaluations a single closed-form evaluation is allowed.

**Value** (int)
    Positive integer, default ``10 ** 8``.
'''

jobs = None
'''
**Optional**
    Worker processes used by command line sweeps.  ``None`` means one per core as
    reported by :func:`python:os.cpu_count`.

**Value** (int or None)
'''

########################################################################################
# Logging and colors                                                                   #
########################################################################################
verboseBuild = False
'''
**Optional**
    Set to ``True`` to print colored diagnostics (memo sizes, guard decisions, sweep
    timing) as work progresses.

    .. warning::

       There is only one level of verbosity.  **All logging is written to**
       ``sys.stderr``.  See :data:`~partlab.configs.alwaysColorize`.
'''

alwaysColorize = True
'''
**Optional**
    Colorize messages even when the output stream is not a TTY.  Set to ``False`` when
    redirecting to a file you intend to read without a pager that understands ANSI.
'''

########################################################################################
# Sphinx table generation (only read from ``partlab_args``)                            #
########################################################################################
containmentFolder = None
'''
**Required** (Sphinx only)
    The folder the value tables are generated in, relative to ``conf.py``.  It must be
    a subdirectory of the Sphinx source directory.  The path is made absolute when the
    configuration is applied.
'''

rootFileName = None
'''
**Required** (Sphinx only)
    Name of the generated document that holds the ``toctree`` of all tables, e.g.
    ``"tables_root.rst"``.  It is created inside
    :data:`~partlab.configs.containmentFolder`.
'''

rootFileTitle = None
''' **Required** (Sphinx only) The title of :data:`~partlab.configs.rootFileName`. '''

tables = []
'''
**Optional** (Sphinx only)
    A list of dictionaries, one per table to generate.  See
    :func:`~partlab.deploy.explode` for the keys each dictionary accepts.
'''

SECTION_HEADING_CHAR = "="
''' The restructured text H1 heading character used to underline sections. '''

TABLE_KEYS = {
    "fn":       (str,        True),
    "n_lo":     (int,        True),
    "n_hi":     (int,        True),
    "k":        (int,        False),
    "a":        (int,        False),
    "b":        (int,        False),
    "strategy": (str,        False),
    "title":    (str,        False),
    "name":     (str,        False),
}
''' ``key: (type, required)`` for every dictionary in :data:`~partlab.configs.tables`. '''

########################################################################################
# Internal book keeping                                                                #
########################################################################################
_on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
''' Whether the documentation is being built on Read the Docs (no colors there). '''

_applied = False
''' Set once :func:`~partlab.configs.apply_sphinx_configurations` has completed. '''


def _is_int(val):
    # bool is an int subclass, but True is never a sensible budget
    return isinstance(val, int) and not isinstance(val, bool)


def _check_positive(key, val, minimum=1):
    if not _is_int(val):
        raise ConfigError(_val_error.format(key=key, exp=int, got=type(val)))
    if val < minimum:
        raise ConfigError("The value for key `{key}` must be at least {minimum}, but was {val}.".format(
            key=key, minimum=minimum, val=val
        ))


_val_error = "The type of the value for key `{key}` must be `{exp}`, but was `{got}`."

_GUARD_KEYS = [
    ("enumerationMaxN",    1),
    ("closedFormMaxParts", 3),
    ("termBudget",         1),
]

_BOOL_KEYS = [
    "verboseBuild",
    "alwaysColorize",
]

_SPHINX_KEYS = [
    "containmentFolder",
    "rootFileName",
    "rootFileTitle",
    "tables",
]


def available_keys(include_sphinx=False):
    '''
    Return the set of keys :func:`~partlab.configs.apply_configurations` understands.

    **Parameters**
        ``include_sphinx`` (bool)
            Whether the keys only meaningful inside ``partlab_args`` are included.
    '''
    keys = {key for key, _ in _GUARD_KEYS} | set(_BOOL_KEYS) | {"jobs"}
    if include_sphinx:
        keys |= set(_SPHINX_KEYS)
    return keys


def _unexpected_keys_error(extras, potential_keys, source):
    # Convert everything to lower case for better matching success
    potential_keys_lower = {key.lower(): key for key in potential_keys}
    extra_error = StringIO()
    extra_error.write("partlab found unexpected keys in `{0}`:\n".format(source))
    for key in sorted(extras):
        extra_error.write("  - Extra key: {0}\n".format(key))
        potentials = []
        for mate in potential_keys_lower:
            similarity = SequenceMatcher(None, key.lower(), mate).ratio() * 100.0
            if similarity > 50.0:
                potentials.append((similarity, potential_keys_lower[mate]))
        for rank, mate in sorted(potentials, reverse=True):
            extra_error.write("    - {0:2.2f}% match with: {1}\n".format(rank, mate))
    extra_error_str = extra_error.getvalue()
    extra_error.close()
    return ConfigError(extra_error_str)


def apply_configurations(args, source="configuration", include_sphinx=False):
    '''
    Validate ``args`` and assign each entry to the module global of the same name.

    Nothing is assigned unless every key validates, so a failed call leaves the
    configuration untouched.

    **Parameters**
        ``args`` (dict)
            Mapping of ``camelCase`` configuration names to values.

        ``source`` (str)
            What to call ``args`` in error messages (e.g. ``"partlab_args"``).

        ``include_sphinx`` (bool)
            Whether the Sphinx only keys are accepted.  Only
            :func:`~partlab.configs.apply_sphinx_configurations` sets this.

    **Raises**
        ``sphinx.errors.ConfigError``
            For the wrong type, an out of range value, or an unknown key.
    '''
    if not isinstance(args, dict):
        raise ConfigError("The type of `{0}` must be a dictionary, but was `{1}`.".format(source, type(args)))

    keys_available = available_keys(include_sphinx)
    extras = set(args) - keys_available
    if extras:
        raise _unexpected_keys_error(extras, keys_available - set(args), source)

    staged = {}
    for key, minimum in _GUARD_KEYS:
        if key in args:
            _check_positive(key, args[key], minimum)
            staged[key] = args[key]

    for key in _BOOL_KEYS:
        if key in args:
            val = args[key]
            if not isinstance(val, bool):
                raise ConfigError(_val_error.format(key=key, exp=bool, got=type(val)))
            staged[key] = val

    if "jobs" in args:
        val = args["jobs"]
        if val is not None:
            _check_positive("jobs", val)
        staged["jobs"] = val

    if include_sphinx:
        for key in ("containmentFolder", "rootFileName", "rootFileTitle"):
            if key in args:
                val = args[key]
                if not isinstance(val, str):
                    raise ConfigError(_val_error.format(key=key, exp=str, got=type(val)))
                if not val:
                    raise ConfigError("Non-empty value for key [{0}] required.".format(key))
                staged[key] = val
        if "tables" in args:
            staged["tables"] = _validate_tables(args["tables"])

    configs_globals = globals()
    for key, val in staged.items():
        configs_globals[key] = val


def _validate_tables(value):
    # Import local to function to prevent circular imports.
    from . import compute

    if not isinstance(value, list):
        raise ConfigError(_val_error.format(key="tables", exp=list, got=type(value)))
    validated = []
    for idx, spec in enumerate(value):
        where = "tables[{0}]".format(idx)
        if not isinstance(spec, dict):
            raise ConfigError(_val_error.format(key=where, exp=dict, got=type(spec)))
        extras = set(spec) - set(TABLE_KEYS)
        if extras:
            raise _unexpected_keys_error(extras, set(TABLE_KEYS) - set(spec), where)
        for key, (expected_type, required) in TABLE_KEYS.items():
            if key not in spec:
                if required:
                    raise ConfigError("Did not find required key `{key}` in `{where}`.".format(
                        key=key, where=where
                    ))
                continue
            val = spec[key]
            ok = _is_int(val) if expected_type is int else isinstance(val, expected_type)
            if not ok:
                raise ConfigError(_val_error.format(
                    key="{0}.{1}".format(where, key), exp=expected_type, got=type(val)
                ))
        if spec["fn"] not in compute.FUNCTIONS:
            raise ConfigError(textwrap.dedent('''
                Unknown function `{fn}` in `{where}`.  Available functions:

                {choices}
            ''').format(fn=spec["fn"], where=where, choices=", ".join(sorted(compute.FUNCTIONS))))
        if not 0 <= spec["n_lo"] <= spec["n_hi"]:
            raise ConfigError("`{where}` requires 0 <= n_lo <= n_hi, but got n_lo={lo} and n_hi={hi}.".format(
                where=where, lo=spec["n_lo"], hi=spec["n_hi"]
            ))
        validated.append(dict(spec))
    return validated


########################################################################################
##                                                                                     #
## Sphinx Entry Point                                                                  #
## Called from partlab/__init__.py:environment_ready during the sphinx build process. #
##                                                                                     #
########################################################################################
def apply_sphinx_configurations(app):
    '''
    Apply the ``partlab_args`` dictionary from ``conf.py``.

    .. danger::

       This method is **not** supposed to be called directly.  See
       ``partlab/__init__.py`` for how this function is called indirectly via the Sphinx
       API.

    **Parameters**
        ``app`` (:class:`sphinx.application.Sphinx`)
            The Sphinx Application running the documentation build.
    '''
    partlab_args = app.config.partlab_args
    if not partlab_args:
        raise ConfigError("You must set the `partlab_args` dictionary in `conf.py`.")
    elif type(partlab_args) is not dict:
        raise ConfigError("The type of `partlab_args` in `conf.py` must be a dictionary.")

    key_error = "Did not find required key `{key}` in `partlab_args`."
    for key in ("containmentFolder", "rootFileName", "rootFileTitle"):
        if key not in partlab_args:
            raise ConfigError(key_error.format(key=key))

    apply_configurations(partlab_args, source="partlab_args", include_sphinx=True)

    global containmentFolder
    global _applied
    if not os.path.isabs(containmentFolder):
        containmentFolder = os.path.abspath(os.path.join(os.path.abspath(app.confdir), containmentFolder))

    # Require that containmentFolder is a subpath of the sphinx application source
    # directory (otherwise Sphinx will not process the generated documents).
    containment = Path(containmentFolder).absolute()
    app_srcdir = Path(app.srcdir).absolute()
    try:
        containment.relative_to(app_srcdir)
        if containment == app_srcdir:
            raise ValueError
    except ValueError:
        raise ConfigError(textwrap.dedent('''
            The given `containmentFolder` [{0}] must be a *SUBDIRECTORY* of [{1}].
        ''').format(containmentFolder, app_srcdir))

    if "/" in rootFileName or os.sep in rootFileName:
        raise ConfigError("`rootFileName` [{0}] must be a file name, not a path.".format(rootFileName))
    if not rootFileName.endswith(".rst"):
        raise ConfigError("`rootFileName` [{0}] must end with '.rst'.".format(rootFileName))

    names = [spec.get("name") for spec in tables if spec.get("name")]
    if len(names) != len(set(names)):
        raise ExtensionError("Table names in `partlab_args['tables']` must be unique: {0}".format(names))

    if not tables:
        logger.warning("partlab: `tables` is empty, only the root document will be generated.")

    _applied = True
