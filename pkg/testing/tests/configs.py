# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
"""
Tests for validating error handling with configs, both from the command line overrides
and from ``partlab_args`` in ``conf.py``.
"""
import logging
import os
import re

import pytest
from sphinx.errors import ConfigError, ExtensionError

from partlab import configs

minimal_args = {
    "containmentFolder": "./tables",
    "rootFileName": "tables_root.rst",
    "rootFileTitle": "Value Tables",
}
"""The three keys ``partlab_args`` cannot do without."""


def with_minimal(**kwargs):
    args = dict(minimal_args)
    args.update(kwargs)
    return args


def test_defaults():
    """Every test starts from the module defaults (see ``testing/conftest.py``)."""
    assert configs.enumerationMaxN == configs.DEFAULT_ENUMERATION_MAX_N == 80
    assert configs.closedFormMaxParts == configs.DEFAULT_CLOSED_FORM_MAX_PARTS == 16
    assert configs.termBudget == configs.DEFAULT_TERM_BUDGET == 10 ** 8
    assert configs.jobs is None
    assert configs.verboseBuild is False
    assert configs.alwaysColorize is True
    assert configs.tables == []
    assert not configs._applied
    assert configs.available_keys() == {
        "enumerationMaxN", "closedFormMaxParts", "termBudget", "jobs", "verboseBuild", "alwaysColorize"
    }
    assert configs.available_keys(include_sphinx=True) - configs.available_keys() == {
        "containmentFolder", "rootFileName", "rootFileTitle", "tables"
    }


def test_apply_configurations():
    configs.apply_configurations({"termBudget": 5, "closedFormMaxParts": 3, "jobs": 4, "verboseBuild": True})
    assert configs.termBudget == 5
    assert configs.closedFormMaxParts == 3
    assert configs.jobs == 4
    assert configs.verboseBuild is True
    configs.apply_configurations({"jobs": None})
    assert configs.jobs is None


@pytest.mark.raises(exception=ConfigError, match=re.escape(
    "The type of the value for key `termBudget` must be `<class 'int'>`, but was `<class 'str'>`."
))
def test_wrong_type():
    configs.apply_configurations({"termBudget": "10"})


@pytest.mark.raises(exception=ConfigError, match=r"The type of the value for key `enumerationMaxN`")
def test_bool_is_not_an_int():
    configs.apply_configurations({"enumerationMaxN": True})


@pytest.mark.raises(exception=ConfigError, match=re.escape(
    "The value for key `closedFormMaxParts` must be at least 3, but was 2."
))
def test_out_of_range():
    configs.apply_configurations({"closedFormMaxParts": 2})


@pytest.mark.raises(exception=ConfigError, match=r"The value for key `jobs` must be at least 1, but was 0.")
def test_jobs_positive():
    configs.apply_configurations({"jobs": 0})


@pytest.mark.raises(exception=ConfigError, match=r"The type of `command line` must be a dictionary")
def test_not_a_dict():
    configs.apply_configurations([("termBudget", 5)], source="command line")


def test_unknown_key_suggestions():
    with pytest.raises(ConfigError) as exc_info:
        configs.apply_configurations({"termBudgt": 5}, source="overrides")
    exc_info.match(re.escape("partlab found unexpected keys in `overrides`:"))
    exc_info.match(r"  - Extra key: termBudgt\n    - \d+\.\d+% match with: termBudget")

    # the Sphinx only keys are unknown outside of partlab_args
    with pytest.raises(ConfigError) as exc_info:
        configs.apply_configurations({"tables": []})
    exc_info.match("Extra key: tables")


def test_nothing_applied_on_error():
    with pytest.raises(ConfigError):
        configs.apply_configurations({"termBudget": 5, "verboseBuild": "yes"})
    assert configs.termBudget == configs.DEFAULT_TERM_BUDGET
    assert configs.verboseBuild is False


########################################################################################
# partlab_args                                                                         #
########################################################################################
@pytest.mark.partlab_args(with_minimal(termBudget=1000))
def test_sphinx_configuration(applied_sphinx_app):
    """``containmentFolder`` is made absolute relative to ``conf.py``."""
    assert configs._applied
    assert configs.containmentFolder == os.path.join(applied_sphinx_app.confdir, "tables")
    assert configs.rootFileName == "tables_root.rst"
    assert configs.rootFileTitle == "Value Tables"
    assert configs.termBudget == 1000


@pytest.mark.setup_raises(
    exception=ConfigError, match=r"You must set the `partlab_args` dictionary in `conf.py`."
)
@pytest.mark.partlab_args({})
@pytest.mark.usefixtures("applied_sphinx_app")
def test_missing_args():
    pass


@pytest.mark.setup_raises(
    exception=ConfigError, match=r"The type of `partlab_args` in `conf.py` must be a dictionary."
)
@pytest.mark.partlab_args([("rootFileName", "x.rst")])
@pytest.mark.usefixtures("applied_sphinx_app")
def test_args_not_dict():
    pass


@pytest.mark.parametrize("key", sorted(minimal_args))
def test_required_keys(sphinx_app, key):
    sphinx_app.config.partlab_args = {k: v for k, v in minimal_args.items() if k != key}
    with pytest.raises(ConfigError) as exc_info:
        configs.apply_sphinx_configurations(sphinx_app)
    exc_info.match(re.escape("Did not find required key `{0}` in `partlab_args`.".format(key)))


@pytest.mark.setup_raises(exception=ConfigError, match=r"Non-empty value for key \[rootFileTitle\] required.")
@pytest.mark.partlab_args(with_minimal(rootFileTitle=""))
@pytest.mark.usefixtures("applied_sphinx_app")
def test_empty_title():
    pass


@pytest.mark.setup_raises(exception=ConfigError, match=r"must be a \*SUBDIRECTORY\* of")
@pytest.mark.partlab_args(with_minimal(containmentFolder="."))
@pytest.mark.usefixtures("applied_sphinx_app")
def test_containment_is_srcdir():
    pass


@pytest.mark.setup_raises(exception=ConfigError, match=r"must be a \*SUBDIRECTORY\* of")
@pytest.mark.partlab_args(with_minimal(containmentFolder="../elsewhere"))
@pytest.mark.usefixtures("applied_sphinx_app")
def test_containment_outside_srcdir():
    pass


@pytest.mark.setup_raises(exception=ConfigError, match=r"must be a file name, not a path.")
@pytest.mark.partlab_args(with_minimal(rootFileName="sub/tables_root.rst"))
@pytest.mark.usefixtures("applied_sphinx_app")
def test_root_file_is_path():
    pass


@pytest.mark.setup_raises(exception=ConfigError, match=r"must end with '.rst'.")
@pytest.mark.partlab_args(with_minimal(rootFileName="tables_root.md"))
@pytest.mark.usefixtures("applied_sphinx_app")
def test_root_file_extension():
    pass


@pytest.mark.parametrize("tables,message", [
    ({"fn": "p"}, "The type of the value for key `tables` must be `<class 'list'>`"),
    (["p"], "The type of the value for key `tables[0]` must be `<class 'dict'>`"),
    ([{"fn": "p", "n_lo": 1}], "Did not find required key `n_hi` in `tables[0]`."),
    ([{"fn": "p", "n_lo": 1, "n_hi": "5"}], "The type of the value for key `tables[0].n_hi` must be"),
    ([{"fn": "p", "n_lo": 1, "n_hi": 5, "k": True}], "The type of the value for key `tables[0].k` must be"),
    ([{"fn": "zeta", "n_lo": 1, "n_hi": 5}], "Unknown function `zeta` in `tables[0]`."),
    ([{"fn": "p", "n_lo": 6, "n_hi": 5}],
     "`tables[0]` requires 0 <= n_lo <= n_hi, but got n_lo=6 and n_hi=5."),
    ([{"fn": "p", "n_lo": 0, "n_hi": 5}, {"fn": "p", "n_lo": 0, "n_hi": 5, "nmae": "x"}],
     "partlab found unexpected keys in `tables[1]`:"),
])
def test_bad_tables(sphinx_app, tables, message):
    sphinx_app.config.partlab_args = with_minimal(tables=tables)
    with pytest.raises(ConfigError) as exc_info:
        configs.apply_sphinx_configurations(sphinx_app)
    exc_info.match(re.escape(message))
    assert not configs._applied


@pytest.mark.setup_raises(
    exception=ExtensionError, match=r"Table names in `partlab_args\['tables'\]` must be unique"
)
@pytest.mark.partlab_args(with_minimal(tables=[
    {"fn": "p", "n_lo": 0, "n_hi": 5, "name": "twice"},
    {"fn": "pk", "n_lo": 0, "n_hi": 5, "name": "twice"},
]))
@pytest.mark.usefixtures("applied_sphinx_app")
def test_duplicate_table_names():
    pass


def test_empty_tables_warning(sphinx_app, caplog):
    sphinx_app.config.partlab_args = dict(minimal_args)
    with caplog.at_level(logging.WARNING):
        configs.apply_sphinx_configurations(sphinx_app)
    assert configs._applied
    assert "`tables` is empty" in caplog.text
