from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    INPUT_ERROR = 1
    REFUSED = 2
    VERIFICATION_FAILED = 3
