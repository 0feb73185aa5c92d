"""Exception hierarchy shared by every module in the package."""


class BredonError(ValueError):
    """Base class for all validation and input errors raised by bredon."""

    def __str__(self):
        # KeyError subclasses would otherwise repr() their message
        return str(self.args[0]) if self.args else ""


# posets
class CycleError(BredonError):
    pass


class UnknownElement(BredonError, KeyError):
    pass


# simplicial complexes
class UnknownVertex(BredonError, KeyError):
    pass


class NotAFace(BredonError):
    pass


class DuplicateVertex(BredonError):
    pass


class NotASubcomplex(BredonError):
    pass


# cohomology
class DegreeOutOfRange(BredonError, IndexError):
    pass


class ComplexNotExact(BredonError):
    """delta composed with delta is nonzero, or matrix shapes disagree."""


# coxeter systems
class InvalidCoxeterMatrix(BredonError):
    pass


class UnknownGenerator(BredonError, KeyError):
    pass


class InvalidOrder(BredonError):
    pass


# permutation groups
class InvalidPermutation(BredonError):
    pass


class SizeCapExceeded(BredonError):
    pass


class DegreeMismatch(BredonError):
    pass


class NotASubgroup(BredonError):
    pass


# complexes of groups
class NotStrict(BredonError):
    pass


class NotASubgroupAlongEdge(BredonError):
    pass


class ClassNotAntichain(BredonError):
    pass


class EmptyClass(BredonError):
    pass


class NotRelative(BredonError):
    pass


class InputError(BredonError):
    """Malformed input document."""
