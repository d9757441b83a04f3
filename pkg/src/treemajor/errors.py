"""Exception hierarchy shared by all treemajor modules."""


class TreeMajorError(Exception):
    """Base class for every domain error raised by this package."""


class ParseError(TreeMajorError):
    """Malformed text input (sequence, tree file, plan, trace)."""


class NonPositiveDegree(TreeMajorError):
    """A degree value was zero or negative."""


class NotTreeFeasible(TreeMajorError):
    """Positive degrees whose total is not 2(n-1)."""


class LengthMismatch(TreeMajorError):
    """Two sequences of different lengths where equal lengths are required."""


class SameRank(TreeMajorError):
    """A transfer named the same rank as both receiver and donor."""


class DonorWouldVanish(TreeMajorError):
    """A transfer would drive the donor value below 1."""


class NotMajorized(TreeMajorError):
    """Transfer planning requested between sequences that are not ordered."""


class InvalidPlan(TreeMajorError):
    """A transfer plan whose steps cannot be replayed as recorded."""


class WouldDisconnect(TreeMajorError):
    """A branch move whose target lies inside the moved branch."""


class DegreeRuleViolation(TreeMajorError):
    """A branch move onto a node of strictly smaller degree than the donor."""


class DonorIsLeaf(TreeMajorError):
    """A branch move that would strip the last edge off the donor node."""


class NotConnected(TreeMajorError):
    """An edge set that does not connect all nodes."""


class BoundExceeded(TreeMajorError):
    """A node count beyond the supported bound of an exhaustive operation."""
