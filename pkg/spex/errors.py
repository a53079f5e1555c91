# errors.py
# Purpose: Exception hierarchy shared by the library and the CLI.
#          Every error carries the process exit code the CLI should use.

from __future__ import annotations


class SpexError(Exception):
    """Base class for every error raised by spex."""
    exit_code = 1


# ---- Usage / input errors (exit 2) ----
class UsageError(SpexError):
    exit_code = 2

class InvalidEdge(UsageError):
    pass

class FormatError(UsageError):
    pass

class InvalidInput(UsageError):
    pass

class InvalidParameter(UsageError):
    pass

class InvalidSwitch(UsageError):
    pass

class InvalidContraction(UsageError):
    pass

class InvalidWitness(UsageError):
    pass

class ResourceLimit(UsageError):
    pass

class OutsideTheoremRange(UsageError):
    pass

class EmptyRange(UsageError):
    pass


# ---- Failures (exit 1): a proved statement did not check out, or the solver gave up ----
class ConvergenceError(SpexError):
    pass

class CertificateFailure(SpexError):
    pass

class EmptyFamily(SpexError):
    pass

class AuditFailure(SpexError):
    pass
