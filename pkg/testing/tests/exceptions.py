# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
"""
Tests for :mod:`partlab.exceptions`.

Errors raised in :func:`partlab.compute.run` worker processes are pickled back to the
parent, so every class must rebuild itself from its ``args``.
"""
import pickle

import pytest

from partlab.exceptions import (
    BudgetExceededError, DomainError, HalfIntegerError, PartlabError, SeriesError, SeriesOrderError,
    UnknownSelectorError
)


@pytest.mark.parametrize("error", [
    PartlabError("base"),
    DomainError("`n` must be at least 0, but was -1."),
    HalfIntegerError("5/2 is a half-integer."),
    BudgetExceededError("enumerationMaxN", 10, 5),
    BudgetExceededError("termBudget", 1200, 1000, "Raise `termBudget`."),
    UnknownSelectorError("strategy", "mobius", ["recursive", "closed"]),
    SeriesError("Orders differ."),
    SeriesOrderError("Coefficient 9 is beyond order 8."),
])
def test_pickle(error):
    clone = pickle.loads(pickle.dumps(error))
    assert type(clone) is type(error)
    assert clone.args == error.args
    assert str(clone) == str(error)
    assert vars(clone) == vars(error)


def test_budget_message():
    error = BudgetExceededError("enumerationMaxN", 10, 5)
    assert (error.guard, error.estimate, error.limit, error.detail) == ("enumerationMaxN", 10, 5, None)
    assert str(error) == "Refusing work estimated at 10 against a limit of 5 (guard: `enumerationMaxN`)."
    assert str(BudgetExceededError("termBudget", 2, 1, "Try fewer parts.")).endswith(
        "(guard: `termBudget`).  Try fewer parts."
    )
    assert isinstance(error, RuntimeError)


def test_unknown_selector_message():
    error = UnknownSelectorError("identity", "NOPE", iter(["A", "B"]))
    assert error.choices == ("A", "B")
    assert str(error) == "Unknown identity `NOPE`, expected one of: A, B."
    assert isinstance(error, LookupError)
