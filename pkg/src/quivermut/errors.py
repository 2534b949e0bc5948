"""Exception types shared across the package.

Every domain error derives from QuivermutError so callers (and the CLI)
can distinguish computation failures from plain bugs.
"""


class QuivermutError(Exception):
    """Base class for all domain errors raised by this package."""


# --- quiver construction / indexing ---------------------------------------

class LoopForbidden(QuivermutError):
    """An arrow from a vertex to itself was supplied."""


class TwoCycleForbidden(QuivermutError):
    """Arrows in both directions between the same pair of vertices."""


class IndexOutOfRange(QuivermutError):
    """A vertex or edge index outside the valid range."""


class EmptySubset(QuivermutError):
    """A vertex subset that must be non-empty was empty."""


class EntryOverflow(QuivermutError):
    """A matrix entry left the signed 64-bit range."""


# --- class enumeration ------------------------------------------------------

class BudgetZero(QuivermutError):
    """enumerate_class called with a class budget below 1."""


class ClassNotExhausted(QuivermutError):
    """A whole-class property was asked of a truncated or infinite report."""


# --- surfaces and triangulations -------------------------------------------

class ArcMultiplicityError(QuivermutError):
    """An arc not used exactly twice, or a boundary segment not exactly once."""


class SelfFoldedForbidden(QuivermutError):
    """A triangle repeats one of its edges."""


class EulerMismatch(QuivermutError):
    """Triangulation data has the wrong Euler characteristic for its surface."""


class CountMismatch(QuivermutError):
    """Edge/triangle counts disagree with the surface signature."""


class NotAnArc(QuivermutError):
    """A flip or classification was requested at a boundary segment."""


class EdgeNotFound(QuivermutError):
    """An edge id that does not occur in the triangulation."""


class CaseConstraintViolated(QuivermutError):
    """An arc neighborhood does not satisfy its case's arrow constraints."""


class SpadeViolated(QuivermutError):
    """The chosen triangle does not have exactly one boundary side."""


# --- generators -------------------------------------------------------------

class TooFewPoints(QuivermutError):
    """A polygon generator needs at least 3 boundary points."""


class UnsupportedSignature(QuivermutError):
    """A (genus, boundary) signature outside the generator's domain."""


class UnknownName(QuivermutError):
    """An exceptional-quiver name that is not in the catalog."""


# --- verification -----------------------------------------------------------

class UnsupportedSurface(QuivermutError):
    """A check that only applies to some surfaces was asked of another."""


# --- service ----------------------------------------------------------------

class PortInUse(QuivermutError):
    """The requested service port is already bound."""
