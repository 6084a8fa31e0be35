# src/conetensor/exceptions.py


class ConeTensorError(Exception):
    """Base class for every error raised by this package."""

    pass


class DimensionMismatchError(ConeTensorError):
    """Raised when vectors, matrices or cones do not share the expected dimension."""

    def __init__(self, expected, got, what="vector"):
        self.expected = expected
        self.got = got
        super().__init__(f"Dimension mismatch for {what}: expected {expected}, got {got}")


class EmptyRepresentationError(ConeTensorError):
    """Raised when a cone is requested without any representation."""

    def __init__(self):
        super().__init__("A cone needs rays/lineality or inequalities/equations (one side may be empty lists).")


class InconsistentRepresentationError(ConeTensorError):
    """Raised when both representations are given and they describe different cones."""

    def __init__(self, witness=None):
        self.witness = witness
        msg = "The V- and H-representations describe different cones"
        if witness is not None:
            msg += f" (witness: {list(witness)})"
        super().__init__(msg + ".")


class DoubleDescriptionLimitError(ConeTensorError):
    """Raised when double description exceeds the configured number of rays."""

    def __init__(self, limit, reached):
        self.limit = limit
        self.reached = reached
        super().__init__(
            f"Double description produced {reached} rays, above the limit of {limit}. "
            "Raise CONETENSOR_MAX_DD_ROWS to allow larger runs."
        )


class NotInConeError(ConeTensorError):
    """Raised when a vector is required to lie in a cone (often a dual cone) and does not."""

    def __init__(self, vector, what="cone"):
        self.vector = tuple(vector)
        super().__init__(f"Vector {[str(x) for x in vector]} does not lie in the {what}.")


class NotASubsetError(ConeTensorError):
    """Raised when a candidate subcone is not contained in its parent cone."""

    def __init__(self, witness=None):
        self.witness = witness
        msg = "The candidate is not a subset of the cone"
        if witness is not None:
            msg += f" (witness: {[str(x) for x in witness]})"
        super().__init__(msg + ".")


class NotAFaceError(ConeTensorError):
    """Raised when an input that must be a face is not one."""

    def __init__(self, what="candidate"):
        super().__init__(f"The {what} is not a face of its cone.")


class NotAnIdealError(ConeTensorError):
    """Raised when a subspace that must be an order ideal has a non-proper quotient cone."""

    def __init__(self, basis=()):
        self.basis = [tuple(v) for v in basis]
        super().__init__(f"The subspace spanned by {self.basis} is not an order ideal (quotient cone is not proper).")


class PreconditionError(ConeTensorError):
    """Raised when an operation's documented precondition does not hold."""

    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"Precondition violated: {reason}")


class ImproperFaceError(PreconditionError):
    """Raised when a proper (non-empty, not whole) face is required."""

    def __init__(self, what="face"):
        super().__init__(f"the {what} must be a non-empty proper face")


class NotSymmetricError(PreconditionError):
    """Raised when a polytope must be symmetric (C = -C) and is not."""

    def __init__(self, what="polytope"):
        super().__init__(f"the {what} must be symmetric under negation")


class IdentityViolationError(ConeTensorError):
    """Raised when an identity the library guarantees fails to hold; carries a witness."""

    def __init__(self, identity, witness=None):
        self.identity = identity
        self.witness = witness
        msg = f"Identity violated: {identity}"
        if witness is not None:
            msg += f" (witness: {[str(x) for x in witness]})"
        super().__init__(msg)


class DocumentError(ConeTensorError):
    """Raised when a cone or polytope document cannot be parsed."""

    def __init__(self, detail, source=""):
        self.detail = detail
        where = f" in {source}" if source else ""
        super().__init__(f"Invalid document{where}: {detail}")


class UnknownSuiteError(ConeTensorError):
    """Raised when a verification suite name is not known."""

    def __init__(self, name, known=()):
        super().__init__(f"Unknown suite '{name}'. Known suites: {', '.join(known)}")


class RunCancelledError(ConeTensorError):
    """Raised when a suite run is stopped through its stop event."""

    def __init__(self):
        super().__init__("The verification run was cancelled.")
