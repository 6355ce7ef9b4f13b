# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
Errors raised by the separability toolkit.

Every error derives from :class:`SeparabilityError` so callers can catch the whole family at once.
"""


class SeparabilityError(Exception):
    """Base class for all the errors raised by this package."""


class InvalidInput(SeparabilityError, ValueError):
    """Raised when an argument is malformed or outside of its allowed range."""


class NotAState(SeparabilityError):
    """Raised when a covariance matrix cannot describe a state (non positive-definite blocks)."""


class NotPhysical(SeparabilityError):
    """Raised when a covariance matrix violates the uncertainty principle."""


class BracketError(SeparabilityError):
    """Raised when a root search is given an interval without a sign change."""


class NoBracket(BracketError):
    """Raised when the DGCZ matching function cannot be bracketed on ``[1, n]``.

    This signals that the state fails the separability-derived bound.
    """


class PoleError(SeparabilityError):
    """Raised when a function is evaluated at its pole."""


class BranchError(SeparabilityError):
    """Raised when a quadratic branch has no real solution."""


class DomainError(SeparabilityError):
    """Raised when a construction is evaluated outside of its domain of validity."""
