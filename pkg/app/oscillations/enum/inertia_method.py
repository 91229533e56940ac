from enum import Enum


class InertiaMethod(str, Enum):
    LEADING_MINORS = "leading-minors"
    CONGRUENCE = "congruence"
