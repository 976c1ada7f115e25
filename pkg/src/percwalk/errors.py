"""Exception hierarchy.

Every error carries a short ``category`` string that the command line
front end prints as a machine-readable tag.
"""


class PercwalkError(Exception):
    category = "error"


class DimensionMismatchError(PercwalkError, ValueError):
    category = "dimension_mismatch"


class NotHermitianError(PercwalkError, ValueError):
    category = "not_hermitian"


class NoConvergenceError(PercwalkError, ArithmeticError):
    category = "no_convergence"


class NotInvolutionError(PercwalkError, ValueError):
    category = "not_involution"


class GraphError(PercwalkError, ValueError):
    category = "invalid_graph"


class UnknownEdgeIdError(GraphError, KeyError):
    category = "unknown_edge_id"

    def __str__(self):
        return Exception.__str__(self)


class IsolatedVertexError(GraphError):
    category = "isolated_vertex"


class CoinError(PercwalkError, ValueError):
    category = "invalid_coin"


class NonOrthonormalAlphasError(CoinError):
    category = "non_orthonormal_alphas"


class NotReflectionCoinError(CoinError):
    """The coin is unitary but not a reflection (it has a non-real eigenvalue
    or is not Hermitian), so no percolated continuous-time counterpart exists."""

    category = "not_reflection_coin"


class MissingCoinError(CoinError):
    category = "missing_coin"


class NotRegularError(GraphError):
    category = "not_regular"


class NotAllGroverError(CoinError):
    category = "not_all_grover"


class SpecError(PercwalkError, ValueError):
    """Malformed instance file. ``field`` names the offending location."""

    category = "invalid_spec"

    def __init__(self, message, field=None, line=None, category=None):
        if category is not None:
            self.category = category
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
