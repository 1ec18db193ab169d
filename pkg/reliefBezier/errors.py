# reliefBezier/errors.py
from __future__ import annotations
from typing import List, Sequence, Tuple


class ReliefError(Exception):
    """Base class for every failure raised by reliefBezier.

    exit_code is what the CLI returns when the error escapes a command:
    1 for input/domain problems, 2 for numerical failures.
    """
    exit_code = 1


class DomainError(ReliefError, ValueError):
    pass


class InvalidMap(ReliefError):
    pass


class NeutralPlaneSingularity(ReliefError):
    pass


class VanishingPlaneSingularity(ReliefError):
    pass


class EvaluationSingularity(ReliefError):
    pass


class DegenerateSplit(ReliefError):
    pass


class EmptyInterval(ReliefError):
    pass


class WeightOutOfRange(ReliefError):
    pass


class ControlOnSingularPlane(ReliefError):
    pass


class ControlThroughCenter(ReliefError):
    pass


class NotFormEight(ReliefError):
    pass


class DegenerateCurve(ReliefError):
    pass


class NonPositiveProjectedWeights(ReliefError):
    pass


class CurveFileError(ReliefError):
    pass


Box = Tuple[Tuple[float, float], Tuple[float, float]]


class UnresolvedRegion(ReliefError):
    """Clipping hit max_depth or closed on a tangential crossing; usually a
    tangency or overlapping curves.

    boxes holds the ((t0, t1), (u0, u1)) parameter boxes that did not
    converge, records the roots found elsewhere before giving up.
    """
    exit_code = 2

    def __init__(self, boxes: Sequence[Box], records: Sequence = ()):
        self.boxes: List[Box] = list(boxes)
        self.records = list(records)
        first = self.boxes[0] if self.boxes else None
        super().__init__(
            f"{len(self.boxes)} unresolved parameter region(s) "
            f"(tangency or coincident curves?), first: {first}"
        )


class ConfigError(ReliefError):
    pass
