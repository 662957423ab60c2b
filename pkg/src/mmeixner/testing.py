"""Fault injection for exercising the failure paths of the checkers."""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

from . import meixner


@contextmanager
def corrupt_recurrence(delta=Fraction(1, 7)):
    """Add ``delta`` to the diagonal recurrence coefficient b_{n,i} at |n| = 1.

    Every polynomial of degree >= 2 built inside the block is wrong, while
    the generating-function oracle is unaffected.
    """
    previous = meixner._RECURRENCE_DEFECT
    meixner._RECURRENCE_DEFECT = Fraction(delta)
    try:
        yield
    finally:
        meixner._RECURRENCE_DEFECT = previous
