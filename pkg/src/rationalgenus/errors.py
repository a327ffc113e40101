"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class InputError(ValueError):
    """Malformed or out-of-range input (CLI exit code 2)."""


class InconsistencyError(InputError):
    """Inputs that are individually well formed but contradict each other."""


class TruncationError(InputError):
    """Requested truncation depth is too shallow for a sound oracle verdict."""


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree (exit code 3)."""
