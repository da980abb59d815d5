"""Exception types raised by validation, search, and construction routines.

Every failure carries an optional ``witness`` — the first tuple of elements
at which the violated law was observed — so callers (and the CLI report
writer) can show exactly where a structure broke.
"""


class AlgebraError(Exception):
    """Base class for all structural failures reported by this package."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BoundExceeded(AlgebraError):
    """A search or enumeration was asked to exceed its configured bound."""


class OrderTooLarge(BoundExceeded):
    pass


class SearchTooLarge(BoundExceeded):
    pass


# --- group table validation -------------------------------------------------

class NotClosed(AlgebraError):
    """A table entry falls outside the carrier 0..n-1."""


class NoIdentityAtZero(AlgebraError):
    """Row or column 0 is not the identity row/column."""


class NotAssociative(AlgebraError):
    pass


class MissingInverse(AlgebraError):
    pass


# --- actions ------------------------------------------------------------------

class ImageNotAutomorphism(AlgebraError):
    """An action image is not an automorphism of the space."""


class NotHomomorphic(AlgebraError):
    """Action images fail to compose along the actor's products."""


class ActionInvalid(AlgebraError):
    pass


# --- braces -------------------------------------------------------------------

class AddNotGroup(AlgebraError):
    pass


class MulNotGroup(AlgebraError):
    pass


class BraceAxiomFails(AlgebraError):
    """The two operations fail a o (b . c) = (a o b) . a^-1 . (a o c)."""


class NotBraceHom(AlgebraError):
    pass


# --- Rota-Baxter structures -----------------------------------------------------

class RBAxiomFails(AlgebraError):
    """R(x)R(y) differs from R(x R(x) y R(x)^-1) somewhere."""


class RRBAxiomFails(AlgebraError):
    pass


class NotRRBHom(AlgebraError):
    """A pair of maps violates one of the two relative operator-morphism laws."""


class PreconditionFails(AlgebraError):
    """The composition identity required by the double construction fails."""


# --- cohomology ------------------------------------------------------------------

class CoeffNotAbelian(AlgebraError):
    pass


class NotGoodTriplet(AlgebraError):
    """The triplet of coefficient actions fails a compatibility equation."""


class NotCocycle(AlgebraError):
    pass


class NotASection(AlgebraError):
    """A claimed section does not split the projection or is not normalized."""


class NotEndomorphism(AlgebraError):
    pass


class NotAntiAction(AlgebraError):
    pass


class ModuleLawFails(AlgebraError):
    """Coefficient operator and action violate the module compatibility law."""


class NotRBExtension(AlgebraError):
    pass


class DiagramFails(AlgebraError):
    """The two transported cocycles are not cohomologous.

    This cannot happen for valid inputs; raising it signals an
    implementation defect rather than a property of the data.
    """


# --- isoclinism ----------------------------------------------------------------

class NotAnIdeal(AlgebraError):
    pass


class HypothesisFails(AlgebraError):
    """One side of a pair fails the annihilator-product hypothesis."""


class LiftFails(AlgebraError):
    """The lifted isoclinism witness failed verification (defect alarm)."""


# --- input files -----------------------------------------------------------------

class BadPayload(AlgebraError):
    """A serialized object is malformed: wrong kind, shape, or field types.

    Distinct from the structural errors above, which report that a
    well-formed object fails an algebraic law.
    """
