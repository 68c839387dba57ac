"""Exception hierarchy shared by all chevelem modules."""


class ChevelemError(Exception):
    """Base class for every library-specific error."""


class DescriptorMismatch(ChevelemError):
    """Two operands live over different ring descriptors."""


class NotAUnit(ChevelemError):
    """Inversion was requested for a non-invertible element."""


class NegativeValuation(ChevelemError):
    """An operation required a power-series element (valuation >= 0)."""


class ExponentOverflow(ChevelemError):
    """A monomial exponent left the supported 64-bit window."""


class UnsupportedType(ChevelemError):
    """Root-system family/rank combination outside A_l (l>=1), C_l (l>=2)."""


class InvalidRoot(ChevelemError):
    """Root index or vector not present in the root system."""


class ConstantSolveFailure(ChevelemError):
    """Commutator constants could not be solved; indicates a bug."""


class NotInBigCell(ChevelemError):
    """A leading principal minor is not a unit, so Gauss decomposition fails."""


class SymplecticFactorViolation(ChevelemError):
    """Internal guard: a Gauss factor of a symplectic matrix left the group."""


class NotCongruentToIdentity(ChevelemError):
    """Input matrix is not congruent to the identity modulo the series variable."""


class NonUnitLowestCoefficient(ChevelemError):
    """A torus unit's lowest series coefficient is not a unit of the base ring."""


class TailEscapedSeries(ChevelemError):
    """Documented partial-domain failure of the Laurent splitting: the
    positive-valuation tail could not be separated from the polynomial part."""


class PolyPartNotPolynomial(ChevelemError):
    """Internal guard: the polynomial factor of a Laurent split has denominators."""


class OracleStuck(ChevelemError):
    """A division oracle failed to make progress; impossible for a true
    Euclidean oracle, kept as a loud guard."""


class DepthExhausted(ChevelemError):
    """Documented partial-domain failure: the valuation-raising elimination
    loop hit its depth cap without reaching a unit pivot."""


class UnknownProvenance(ChevelemError):
    """A special-PID declaration used an unrecognised or unjustified rule."""


class RankTooLow(ChevelemError):
    """The pipeline requires isotropic rank >= 2; rank-1 input was rejected."""


class InternalError(ChevelemError):
    """A condition that the calling contract makes impossible actually
    happened; always a bug, never a user error."""
