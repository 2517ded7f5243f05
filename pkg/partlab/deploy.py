# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
Generates reStructuredText value tables during a Sphinx build.

Every entry of :data:`~partlab.configs.tables` becomes one document in
:data:`~partlab.configs.containmentFolder`, and
:data:`~partlab.configs.rootFileName` gathers them in a ``toctree``.  A table of a
function with a number of parts (``pk``, ``lambda``, ``ppsi``) that does not fix ``k``
is laid out as a triangle with a row per ``n`` and a column per ``k``; every other table
has the two columns ``n`` and the value.
'''

from __future__ import annotations

import codecs
import os
import sys
import textwrap
from typing import Dict, List, Sequence

from sphinx.errors import ExtensionError

from . import compute
from . import configs
from . import utils
from .exceptions import PartlabError


def table_name(spec: Dict[str, object], idx: int) -> str:
    ''' The document name of ``tables[idx]``, ``name`` if given. '''
    return spec.get("name") or "table_{0}_{1}".format(spec["fn"], idx)


def table_title(spec: Dict[str, object]) -> str:
    if spec.get("title"):
        return spec["title"]
    fn = spec["fn"]
    details = []
    for key in ("k", "a", "b", "strategy"):
        if spec.get(key) is not None:
            details.append("{0}={1}".format(key, spec[key]))
    title = "``{0}`` for {1} <= n <= {2}".format(fn, spec["n_lo"], spec["n_hi"])
    if details:
        title = "{0} ({1})".format(title, ", ".join(details))
    return title


def _list_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = [
        ".. list-table::",
        "   :header-rows: 1",
        "",
    ]
    for row in [header] + list(rows):
        cells = ["" if cell is None else str(cell) for cell in row]
        lines.append("   * - {0}".format(cells[0]))
        for cell in cells[1:]:
            lines.append("     - {0}".format(cell))
    return "\n".join(lines)


def table_document(spec: Dict[str, object], title: str) -> str:
    '''
    The full reStructuredText document for one table specification.

    **Parameters**
        ``spec`` (dict)
            An already validated entry of :data:`~partlab.configs.tables`.

        ``title`` (str)
            The document title.

    **Raises**
        :class:`~partlab.exceptions.PartlabError`
            Whatever evaluating the table raises (e.g. a refused budget).
    '''
    fn = spec["fn"]
    info = compute.function_info(fn)
    points = compute.expand(fn, spec["n_lo"], spec["n_hi"], spec.get("k"), spec.get("a"), spec.get("b"),
                            spec.get("strategy"))
    records = compute.run(points)
    triangle = info.k_mode == "required" and spec.get("k") is None

    if triangle:
        widest = max(record.k for record in records)
        values = {(record.n, record.k): record.value for record in records}
        header = ["n"] + ["k={0}".format(k) for k in range(1, widest + 1)]
        rows = []
        for n in range(spec["n_lo"], spec["n_hi"] + 1):
            rows.append([n] + [values.get((n, k)) for k in range(1, widest + 1)])
    else:
        header = ["n", "value"]
        rows = [[record.n, record.value] for record in records]

    return textwrap.dedent('''
        {title}
        {heading}

        {description}.

        {table}
    ''').lstrip().format(
        title=title,
        heading=utils.heading_mark(title, configs.SECTION_HEADING_CHAR),
        description=info.description[0].upper() + info.description[1:],
        table=_list_table(header, rows),
    )


def root_document(title: str, names: List[str]) -> str:
    ''' The document holding the ``toctree`` of every generated table. '''
    toctree = "\n".join("   {0}".format(name) for name in names)
    return "{title}\n{heading}\n\n.. toctree::\n   :maxdepth: 1\n\n{toctree}\n".format(
        title=title, heading=utils.heading_mark(title, configs.SECTION_HEADING_CHAR), toctree=toctree
    )


def _write(path, contents):
    with codecs.open(path, "w", "utf-8") as generated:
        generated.write(contents)


def explode():
    '''
    This method **assumes** that :func:`~partlab.configs.apply_sphinx_configurations`
    has already been applied.  It creates :data:`~partlab.configs.containmentFolder`,
    writes one document per table and then the root document.

    **Keys of a table dictionary**
        ``fn`` (**required**)
            One of the :data:`~partlab.compute.FUNCTIONS` selectors.

        ``n_lo``, ``n_hi`` (**required**)
            The inclusive range of ``n``.

        ``k``, ``a``, ``b``, ``strategy`` (optional)
            As on the command line.

        ``title``, ``name`` (optional)
            The document title and file name (without ``.rst``).

    **Raises**
        ``RuntimeError``
            When the configuration has not been applied.

        ``sphinx.errors.ExtensionError``
            When a table cannot be evaluated.
    '''
    # Quick sanity check to make sure the bare minimum have been set in the configs
    if not configs._applied:
        raise RuntimeError(
            "The partlab configuration has not been applied.  Do not call `deploy.explode` directly."
        )

    os.makedirs(configs.containmentFolder, exist_ok=True)

    sys.stdout.write("{0}\n".format(utils.info("partlab: generating {0} value table(s).".format(
        len(configs.tables)
    ))))
    start = utils.get_time()

    names = []
    for idx, spec in enumerate(configs.tables):
        name = table_name(spec, idx)
        try:
            document = table_document(spec, table_title(spec))
        except PartlabError as e:
            raise ExtensionError("partlab: could not generate `{0}`: {1}".format(name, e))
        _write(os.path.join(configs.containmentFolder, "{0}.rst".format(name)), document)
        names.append(name)
        # << verboseBuild
        utils.verbose_log("partlab: wrote {0}.rst".format(name), utils.AnsiColors.DIM_CYAN)

    _write(os.path.join(configs.containmentFolder, configs.rootFileName),
           root_document(configs.rootFileTitle, names))

    end = utils.get_time()
    sys.stdout.write("{0}\n".format(
        utils.progress("partlab: generated value tables in {0}.".format(utils.time_string(start, end)))
    ))
