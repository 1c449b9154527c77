"""
Exception hierarchy.

Every error raised on purpose derives from DetourError. Errors caused by bad
caller input also derive from ValueError.
"""


class DetourError(Exception):
    pass


class RejectedLoop(DetourError, ValueError):
    pass


class BadVertex(DetourError, ValueError):
    pass


class TooLarge(DetourError):
    pass


class BadGraph6(DetourError, ValueError):
    pass


class BadFormat(DetourError, ValueError):
    pass


class BudgetExceeded(DetourError):
    pass


class BadStart(DetourError, ValueError):
    pass


class BadSequence(DetourError, ValueError):
    pass


class Empty(DetourError, ValueError):
    pass


class BadParams(DetourError, ValueError):
    pass


class Unrealizable(DetourError, ValueError):
    pass


class NotPathUnicyclic(DetourError, ValueError):
    pass


class Refuted(DetourError):
    """A verified property does not hold."""

    def __init__(self, condition: str, vertex: int | None = None, detail: str = ""):
        self.condition = condition
        self.vertex = vertex
        self.detail = detail
        msg = f"condition {condition} fails"
        if vertex is not None:
            msg += f" at vertex {vertex}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotHypohamiltonian(DetourError):
    pass


class BadMatching(DetourError, ValueError):
    pass


class BadBlock(DetourError, ValueError):
    pass


class BadBase(DetourError, ValueError):
    pass


class DropMismatch(DetourError, ValueError):
    pass


class BadRecipe(DetourError, ValueError):
    pass


class NotInCatalog(DetourError, KeyError):
    pass


class CorruptCatalog(DetourError):
    pass
