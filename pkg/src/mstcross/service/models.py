"""Request/response schemas for the HTTP service.

Coordinates travel as exact fraction strings ("3/7", "-1", "255/256"),
never floats, so a round trip through the service is bit-exact. Point
sets ride in the same text wire format the CLI files use; responses
echo both the structured coordinates and the canonical text.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..geom import PointSet, _format_coord, format_pointset, parse_pointset


class GridLabelsModel(BaseModel):
    """Two-row grid bookkeeping: point indices of the bottom (v) and top
    (w) rows, left to right."""

    v: list[int]
    w: list[int]

    def label_strings(self) -> list[str]:
        labels = [""] * (len(self.v) + len(self.w))
        for col, i in enumerate(self.v):
            labels[i] = f"v{col + 1}"
        for col, i in enumerate(self.w):
            labels[i] = f"w{col + 1}"
        return labels


class PointsIn(BaseModel):
    """A point set as sent by clients: the text wire format (count line,
    then one 'x y' fraction pair per line, '#' comments allowed) plus
    optional grid labels when a strategy needs the two-row structure."""

    text: str
    grid_labels: GridLabelsModel | None = None

    def to_pointset(self) -> PointSet:
        ps = parse_pointset(self.text)
        if self.grid_labels is None:
            return ps
        labels = self.grid_labels.label_strings()
        if len(labels) != len(ps) or "" in labels:
            raise ValueError("grid labels do not cover the point set")
        return PointSet(ps.points, labels=labels)


class PointsOut(BaseModel):
    n: int
    points: list[tuple[str, str]]
    labels: list[str] | None = None
    text: str

    @classmethod
    def from_pointset(cls, ps: PointSet) -> "PointsOut":
        return cls(
            n=len(ps),
            points=[(_format_coord(p.x), _format_coord(p.y)) for p in ps],
            labels=list(ps.labels) if ps.labels is not None else None,
            text=format_pointset(ps),
        )


class GenerateRequest(BaseModel):
    generator: str
    n: int | None = None
    n1: int | None = None
    n2: int | None = None
    k: int | None = None
    alpha: str = "2"
    jitter: str = "1/64"
    wedge_deg: str = "18/5"
    min_radius: str = "3"
    seed: int = 0


class GenerateResponse(BaseModel):
    generator: str
    points: PointsOut
    grid_labels: GridLabelsModel | None = None
    coloring: str | None = None


class TreeModel(BaseModel):
    vertices: list[int]
    edges: list[tuple[int, int]]
    tie: bool


class MstRequest(BaseModel):
    points: PointsIn
    subset: list[int] | None = None


class CrossRequest(BaseModel):
    points: PointsIn
    coloring: str
    min_over_msts: bool = False
    cap: int = 100_000


class ProfileModel(BaseModel):
    max_red: int
    max_blue: int


class CrossResponse(BaseModel):
    count: int
    pairs: list[tuple[tuple[int, int], tuple[int, int]]]
    red_tree: TreeModel
    blue_tree: TreeModel
    profile: ProfileModel


class ColorRequest(BaseModel):
    points: PointsIn
    strategy: str
    seed: int = 0
    wedge_count: int = 100
    alpha: str = "2"
    r: int | None = None
    k: int | None = None
    inner: list[int] | None = None


class ColorResponse(BaseModel):
    strategy: str
    coloring: str
    guarantee: int | None = None
    realized: int
    trace: list[str] = Field(default_factory=list)


class OracleRequest(BaseModel):
    points: PointsIn
    max_n: int | None = None
    nongeneric: bool = False
    cap: int = 100_000
    workers: int = 1


class OracleResponse(BaseModel):
    value: int
    witness: str
    colorings: int
    elapsed_ms: float


class VerifyRequest(BaseModel):
    lemma: str
    trials: int | None = None
    seed: int = 0


class VerifyResponse(BaseModel):
    lemma: str
    trials: int
    seed: int
    ok: bool
    report: dict


class ExperimentRequest(BaseModel):
    name: str
    ns: list[int] | None = None
    trials: int | None = None
    seed: int = 0
    workers: int = 1


class ExperimentRowModel(BaseModel):
    experiment: str
    n: int
    trial: int
    seed: int
    realized: int | None = None
    guarantee: int | None = None
    status: str = ""


class ExperimentResponse(BaseModel):
    name: str
    ns: list[int]
    trials: int
    seed: int
    ok: bool
    rows: list[ExperimentRowModel]
    per_n: dict[str, dict]
    failures: list[str]
    csv_text: str
    json_text: str
    elapsed_ms: float


class ExperimentInfo(BaseModel):
    name: str
    description: str
    check: str
    default_ns: list[int]
    default_trials: int


class StrategyInfo(BaseModel):
    name: str
    description: str
