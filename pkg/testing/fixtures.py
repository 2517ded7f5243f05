# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
"""
Provides fixtures to be available for all test cases.
"""
import os
from types import SimpleNamespace

import pytest

from partlab import partition_fn


@pytest.fixture
def corrupted_p_closed():
    """
    Temporarily replace :func:`partlab.partition_fn.p_closed` with a version that is off
    by one at ``(n, k) = (7, 3)``, restoring the original function after the test.

    Strategies are resolved on the library modules at call time, so anything that
    dispatches to the closed form (e.g. ``oracle-diff``) sees the corrupted function.
    Sweeps must run in-process (``--jobs 1``) for the replacement to be visible.
    """
    p_closed = partition_fn.p_closed

    def broken(n, k):
        value = p_closed(n, k)
        return value + 1 if (n, k) == (7, 3) else value

    partition_fn.p_closed = broken
    yield (7, 3)
    partition_fn.p_closed = p_closed


@pytest.fixture
def fresh_memo():
    """Empty the shared ``p(n, k)`` memo before and after the test."""
    partition_fn._memo.clear()
    yield partition_fn._memo
    partition_fn._memo.clear()


@pytest.fixture
def sphinx_app(tmp_path):
    """
    A stand-in for :class:`sphinx.application.Sphinx` with the three attributes
    :func:`partlab.configs.apply_sphinx_configurations` reads: ``confdir``, ``srcdir``
    and ``config.partlab_args``.  Both directories are ``tmp_path``.

    Tests fill in ``app.config.partlab_args`` themselves.
    """
    srcdir = str(tmp_path)
    return SimpleNamespace(
        confdir=srcdir,
        srcdir=srcdir,
        config=SimpleNamespace(partlab_args={}),
    )


@pytest.fixture
def table_args():
    """A minimal valid ``partlab_args`` with one two-column and one triangle table."""
    return {
        "containmentFolder": os.path.join(".", "tables"),
        "rootFileName": "tables_root.rst",
        "rootFileTitle": "Value Tables",
        "tables": [
            {"fn": "p", "n_lo": 0, "n_hi": 5, "name": "p_small"},
            {"fn": "pk", "n_lo": 1, "n_hi": 4, "title": "Partitions into k parts"},
        ],
    }


@pytest.fixture
def applied_sphinx_app(sphinx_app, request):
    """
    ``sphinx_app`` with the ``partlab_args`` of the test's ``@pytest.mark.partlab_args``
    marker applied through :func:`partlab.configs.apply_sphinx_configurations`.

    Errors surface during setup, so tests expecting one mark themselves with
    ``@pytest.mark.setup_raises``.
    """
    from partlab import configs

    marker = request.node.get_closest_marker("partlab_args")
    if marker is None:
        raise RuntimeError("`applied_sphinx_app` needs a `@pytest.mark.partlab_args({...})` marker.")
    sphinx_app.config.partlab_args = marker.args[0]
    configs.apply_sphinx_configurations(sphinx_app)
    return sphinx_app
