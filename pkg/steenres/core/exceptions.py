class ParamError(ValueError):
    """
    Param of interface is illegal
    """


class NotAdmissible(ParamError):
    """
    Position set does not describe an admissible subalgebra
    """


class NoBockstein(ParamError):
    """
    Subalgebra contains no position of shape (0, t)
    """


class WrongContainment(ParamError):
    """
    Subalgebra is not contained in the algebra a predicate is stated for
    """


class NotHomogeneous(ValueError):
    """
    Element terms do not share one bidegree
    """


class LinAlgError(ArithmeticError):
    """
    Linear algebra precondition broken
    """


class ImageNotInKernel(LinAlgError):
    """
    A column of the image matrix is outside the span of the kernel basis
    """


class EngineError(RuntimeError):
    """
    Resolution engine failure
    """


class FrontierViolation(EngineError):
    """
    Extension requested before its prerequisites were computed
    """


class NotApplicable(EngineError):
    """
    Applicability predicate fails for the chosen subalgebra
    """


class LiftFailed(EngineError):
    """
    A per-signature lifting problem had no solution
    """

    def __init__(self, message, s=None, t=None, rank=None):
        super().__init__(message)
        self.s = s
        self.t = t
        self.rank = rank


class ResidualNonzero(EngineError):
    """
    Corrected differential still nonzero after the signature loop
    """


class NotACycle(EngineError):
    """
    Element handed to lifting has nonzero boundary
    """


class CheckpointError(IOError):
    """
    Checkpoint is corrupt or has an unsupported version
    """
