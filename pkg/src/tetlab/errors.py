"""Typed errors raised by tetlab.

Every error carries a stable ``code`` so command-line callers can match on it
without parsing messages.
"""


class TetlabError(Exception):
    code = "TETLAB_ERROR"

    def to_json(self) -> dict:
        return {"error": {"code": self.code, "message": str(self)}}


class IntegerOverflowError(TetlabError, OverflowError):
    code = "INTEGER_OVERFLOW"


class NotInvertible(TetlabError, ArithmeticError):
    code = "NOT_INVERTIBLE"


class NotALatticePoint(TetlabError, ValueError):
    code = "NOT_A_LATTICE_POINT"


class DegenerateTetrahedron(TetlabError, ValueError):
    code = "DEGENERATE"


class NoCleanFace(TetlabError, ValueError):
    code = "NO_CLEAN_FACE"


class NotClean(TetlabError, ValueError):
    code = "NOT_CLEAN"


class PreconditionError(TetlabError, ValueError):
    code = "PRECONDITION"


class InternalInconsistency(TetlabError, AssertionError):
    """Two independent routes to the same answer disagreed."""

    code = "INTERNAL_INCONSISTENCY"


class CatalogViolation(TetlabError, AssertionError):
    """A clean 1-point tetrahedron fell outside the eight known classes."""

    code = "CATALOG_VIOLATION"
