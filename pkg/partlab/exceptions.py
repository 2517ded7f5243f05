# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
Exceptions raised by the library modules.

Everything derives from :class:`PartlabError`, and additionally from the builtin
exception a caller would naturally expect (``ValueError`` for bad input,
``LookupError`` for unknown names, ...), so ``except ValueError`` keeps working for
code that does not know about this package.

Configuration problems are **not** reported with these classes, see
:mod:`partlab.configs` (``sphinx.errors.ConfigError``).
'''

from __future__ import annotations

from typing import Iterable, Optional


class PartlabError(Exception):
    ''' Base class of every error raised by :mod:`partlab`. '''


class DomainError(PartlabError, ValueError):
    ''' The input lies outside the domain of the requested operation. '''


class HalfIntegerError(DomainError):
    '''
    Raised by :func:`~partlab.numtheory.nearest_int` for an exact half-integer.

    The nearest integer function is left undefined at halves, none of the formulas in
    this package ever produce one.
    '''


class BudgetExceededError(PartlabError, RuntimeError):
    '''
    A configured guard refused the work because it would be too expensive.

    **Parameters**
        ``guard`` (str)
            Name of the :mod:`~partlab.configs` variable that triggered the refusal.

        ``estimate`` (int)
            The estimated amount of work (partitions visited, summands evaluated).

        ``limit`` (int)
            The limit that ``estimate`` exceeded.

        ``detail`` (str)
            Optional extra explanation appended to the message.
    '''

    def __init__(self, guard: str, estimate: int, limit: int, detail: Optional[str] = None):
        self.guard = guard
        self.estimate = estimate
        self.limit = limit
        self.detail = detail
        # ``args`` mirrors the signature, unpickling calls ``cls(*args)``
        super(BudgetExceededError, self).__init__(guard, estimate, limit, detail)

    def __str__(self) -> str:
        msg = "Refusing work estimated at {estimate} against a limit of {limit} (guard: `{guard}`).".format(
            estimate=self.estimate, limit=self.limit, guard=self.guard
        )
        if self.detail:
            msg = "{0}  {1}".format(msg, self.detail)
        return msg


class UnknownSelectorError(PartlabError, LookupError):
    ''' An unknown form, strategy, variant or identity identifier was requested. '''

    def __init__(self, kind: str, selector: object, choices: Iterable[object]):
        self.kind = kind
        self.selector = selector
        self.choices = tuple(choices)
        super(UnknownSelectorError, self).__init__(kind, selector, self.choices)

    def __str__(self) -> str:
        return "Unknown {kind} `{selector}`, expected one of: {choices}.".format(
            kind=self.kind, selector=self.selector, choices=", ".join(str(c) for c in self.choices)
        )


class SeriesError(PartlabError, ArithmeticError):
    ''' Misuse of a :class:`~partlab.qseries.TruncatedSeries`. '''


class SeriesOrderError(SeriesError, IndexError):
    ''' A coefficient beyond the truncation order was read. '''
