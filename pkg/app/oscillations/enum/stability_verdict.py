from enum import Enum


class LagrangeVerdict(str, Enum):
    """Verdict of the 1766 criterion: repeated roots are read as secular growth."""

    STABLE = "stable"
    CONDITIONAL = "conditional"
    UNSTABLE = "unstable"

    def describe(self) -> str:
        match self:
            case LagrangeVerdict.STABLE:
                return "all roots positive and simple: bounded motion"
            case LagrangeVerdict.CONDITIONAL:
                return "a repeated or zero root: motion treated as unbounded in t"
            case LagrangeVerdict.UNSTABLE:
                return "a negative or non-real root: exponential growth"
            case _:
                raise ValueError("LagrangeVerdict:describe: Invalid verdict")


class WeierstrassVerdict(str, Enum):
    """Verdict of the 1858 criterion: multiplicity alone never destabilizes."""

    STABLE = "stable"
    MARGINAL = "marginal"
    UNSTABLE = "unstable"

    def describe(self) -> str:
        match self:
            case WeierstrassVerdict.STABLE:
                return "all roots positive: bounded motion, whatever the multiplicities"
            case WeierstrassVerdict.MARGINAL:
                return "a zero root and no negative root: affine drift along the null modes"
            case WeierstrassVerdict.UNSTABLE:
                return "a negative root: exponential growth"
            case _:
                raise ValueError("WeierstrassVerdict:describe: Invalid verdict")
