"""Exception types shared across the package."""


class CoxcellsError(Exception):
    """Base class for all errors raised by this package."""


class NonFiniteType(CoxcellsError):
    """The Coxeter graph does not define a finite group."""


class UnsupportedType(CoxcellsError):
    """The Coxeter graph is finite but outside the supported classification."""


class IndexOutOfRange(CoxcellsError):
    """A generator index in a word is out of range."""


class EnumerationBoundExceeded(CoxcellsError):
    """The group order exceeds the configured enumeration bound."""


class OracleScaleExceeded(CoxcellsError):
    """The brute-force oracle was asked about a group beyond its scale limit."""


class TableMismatch(CoxcellsError):
    """A character table file does not match the group it was loaded for."""


class SpecialNotUnique(CoxcellsError):
    """A family does not contain exactly one member with b = a (signals a bug)."""


class CellWithoutDistinguished(CoxcellsError):
    """A left cell contains no distinguished involution (signals a bug)."""


class CellWithMultipleDistinguished(CoxcellsError):
    """A left cell contains more than one distinguished involution (signals a bug)."""


class NotInDomain(CoxcellsError):
    """The element is outside the domain of the requested star/string operation."""


class BadOrder(CoxcellsError):
    """The generator pair has the wrong braid order for this operation."""


class CellNotInDomain(CoxcellsError):
    """The cell is not contained in the domain of the star operation."""


class VerificationMismatch(CoxcellsError):
    """A pipeline-emitted block failed re-verification against ground truth."""


class IncompleteClosure(CoxcellsError):
    """Star closure of representative cells failed to cover the whole group."""


class IndexMiss(CoxcellsError):
    """A cell lookup index did not contain a representative for the query."""


class NotInvolutionClass(CoxcellsError):
    """The conjugacy class is not a class of involutions."""
