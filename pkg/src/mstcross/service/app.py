"""HTTP facade over the library.

Every endpoint is a stateless wrapper around one library call, so the
CLI (and any other client) can stay a thin transport shim. Domain
errors surface as 422 responses carrying the exception class name;
nothing here owns business logic beyond registry lookups.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..crossing import (Coloring, cross_rb, cross_rb_min,
                        longer_edge_crossing_profile)
from ..errors import MstCrossError
from ..generators import (GridLabels, dense_set, equidistant_convex_grid,
                          figure9_configuration, flat_convex_set,
                          grid_fill_fixture, island_fixture,
                          perturbed_grid_p0, perturbed_regular_polygon,
                          random_perturbed_grid, uniform_square)
from ..geom import PointSet
from ..oracle import exact_cross_number, exact_cross_number_nongeneric
from ..experiments import REGISTRY, ExperimentSpec, run_experiment
from ..spanning import mst
from ..strategies import (alternate_convex, dense_coloring,
                          flat_convex_coloring, grid_fill_coloring,
                          grid_five_eighths_coloring, island_wedge_coloring,
                          one_crossing_coloring, random_coloring)
from ..verifiers import (profile_crossing_constant, profile_sweep_instances,
                         verify_good_cell_lemma, verify_island_lemma,
                         verify_small_angle_lemma)
from .models import (ColorRequest, ColorResponse, CrossRequest, CrossResponse,
                     ExperimentInfo, ExperimentRequest, ExperimentResponse,
                     ExperimentRowModel, GenerateRequest, GenerateResponse,
                     GridLabelsModel, MstRequest, OracleRequest,
                     OracleResponse, PointsOut, ProfileModel, StrategyInfo,
                     TreeModel, VerifyRequest, VerifyResponse)

_STRATEGIES: dict[str, str] = {
    "alternate-convex": "alternate colors along the convex hull",
    "flat-convex": "split a flat convex set at its widest gap",
    "one-crossing": "force one crossing on any generic set of 4 or more",
    "island-wedge": "recursive wedge islands on any generic set",
    "grid-five-eighths": "the 5/8 coloring of a labeled two-row grid",
    "grid-fill": "two window reds inside a grid-filling subset",
    "dense": "rich-cell windows of a dense set",
    "random": "i.i.d. fair coin per point",
}

_VERIFY_DEFAULT_TRIALS = {
    "small-angle": 10_000,
    "island": 500,
    "profile": 50,
    "good-cell": 20,
}


def _tree_model(tree) -> TreeModel:
    return TreeModel(vertices=list(tree.vertices),
                     edges=[tuple(e) for e in tree.edges], tie=tree.tie)


def _generate(req: GenerateRequest):
    """Dispatch to a generator; returns (PointSet, labels, coloring)."""
    g = req.generator
    def need(value, what):
        if value is None:
            raise ValueError(f"generator {g!r} needs {what}")
        return value
    if g == "perturbed-regular-polygon":
        return (perturbed_regular_polygon(need(req.n, "n"), jitter=req.jitter,
                                          seed=req.seed), None, None)
    if g == "flat-convex-set":
        return flat_convex_set(need(req.n, "n"), seed=req.seed), None, None
    if g == "perturbed-grid-p0":
        ps, labels = perturbed_grid_p0(need(req.n, "n"), seed=req.seed)
        return ps, labels, None
    if g == "random-perturbed-grid":
        ps, labels = random_perturbed_grid(need(req.n, "n"), seed=req.seed)
        return ps, labels, None
    if g == "equidistant-convex-grid":
        ps, labels = equidistant_convex_grid(need(req.n, "n"))
        return ps, labels, None
    if g == "uniform-square":
        return uniform_square(need(req.n, "n"), seed=req.seed), None, None
    if g == "dense-set":
        return (dense_set(need(req.n, "n"), alpha=req.alpha, seed=req.seed),
                None, None)
    if g == "island-fixture":
        return (island_fixture(need(req.n1, "n1"), need(req.n2, "n2"),
                               wedge_deg=req.wedge_deg,
                               min_radius=req.min_radius, seed=req.seed),
                None, None)
    if g == "grid-fill-fixture":
        return grid_fill_fixture(need(req.k, "k")), None, None
    if g == "figure9":
        ps, coloring = figure9_configuration()
        return ps, None, coloring
    raise ValueError(f"unknown generator {g!r}; known: "
                     f"{', '.join(sorted(GENERATORS))}")


GENERATORS = (
    "perturbed-regular-polygon", "flat-convex-set", "perturbed-grid-p0",
    "random-perturbed-grid", "equidistant-convex-grid", "uniform-square",
    "dense-set", "island-fixture", "grid-fill-fixture", "figure9",
)


def _color(ps: PointSet, req: ColorRequest):
    """Dispatch to a strategy; returns (Coloring, guarantee, trace)."""
    s = req.strategy
    if s == "alternate-convex":
        out = alternate_convex(ps)
    elif s == "flat-convex":
        out = flat_convex_coloring(ps)
    elif s == "one-crossing":
        out = one_crossing_coloring(ps)
    elif s == "island-wedge":
        out = island_wedge_coloring(ps, wedge_count=req.wedge_count)
    elif s == "grid-five-eighths":
        out = grid_five_eighths_coloring(ps)
    elif s == "grid-fill":
        out = grid_fill_coloring(ps, req.inner, k=req.k or 101)
    elif s == "dense":
        out = dense_coloring(ps, req.alpha, r=req.r, k=req.k or 11)
    elif s == "random":
        return random_coloring(ps, req.seed), None, ()
    else:
        raise ValueError(f"unknown strategy {s!r}; known: "
                         f"{', '.join(sorted(_STRATEGIES))}")
    return out.coloring, out.guarantee, out.trace


def _verify(req: VerifyRequest) -> VerifyResponse:
    lemma = req.lemma
    if lemma not in _VERIFY_DEFAULT_TRIALS:
        raise ValueError(f"unknown lemma {lemma!r}; known: "
                         f"{', '.join(sorted(_VERIFY_DEFAULT_TRIALS))}")
    trials = req.trials if req.trials else _VERIFY_DEFAULT_TRIALS[lemma]
    if lemma == "small-angle":
        report = verify_small_angle_lemma(trials, seed=req.seed)
        ok = report["violations"] == 0
    elif lemma == "island":
        report = verify_island_lemma(trials, seed=req.seed)
        ok = report["violations"] == 0
    elif lemma == "good-cell":
        report = verify_good_cell_lemma(trials, seed=req.seed)
        ok = report["violations"] == 0
    else:
        try:
            report = profile_crossing_constant(
                profile_sweep_instances(trials, seed=req.seed))
            ok = True
        except AssertionError as exc:
            report = {"error": str(exc)}
            ok = False
        else:
            # JSON object keys must be strings
            report["histogram"] = {str(k): v
                                   for k, v in report["histogram"].items()}
    return VerifyResponse(lemma=lemma, trials=trials, seed=req.seed,
                          ok=ok, report=report)


def create_app() -> FastAPI:
    app = FastAPI(title="mstcross", version=__version__,
                  description="Bicolored MST crossing numbers of planar "
                              "point sets, with exact rational arithmetic.")

    @app.exception_handler(MstCrossError)
    async def _domain_error(request: Request, exc: MstCrossError):
        return JSONResponse(status_code=422, content={
            "error": type(exc).__name__, "detail": str(exc)})

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=422, content={
            "error": "ValueError", "detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/generators")
    def generators() -> list[str]:
        return list(GENERATORS)

    @app.get("/strategies")
    def strategies() -> list[StrategyInfo]:
        return [StrategyInfo(name=k, description=v)
                for k, v in sorted(_STRATEGIES.items())]

    @app.get("/experiments")
    def experiments() -> list[ExperimentInfo]:
        return [ExperimentInfo(name=name, description=reg.description,
                               check=reg.check,
                               default_ns=list(reg.default_ns),
                               default_trials=reg.default_trials)
                for name, reg in sorted(REGISTRY.items())]

    @app.post("/generate")
    def generate(req: GenerateRequest) -> GenerateResponse:
        ps, labels, coloring = _generate(req)
        grid = None
        if isinstance(labels, GridLabels):
            grid = GridLabelsModel(v=list(labels.v), w=list(labels.w))
        return GenerateResponse(
            generator=req.generator, points=PointsOut.from_pointset(ps),
            grid_labels=grid,
            coloring=coloring.assignment if coloring else None)

    @app.post("/mst")
    def mst_endpoint(req: MstRequest) -> TreeModel:
        ps = req.points.to_pointset()
        return _tree_model(mst(ps, subset=req.subset))

    @app.post("/cross")
    def cross(req: CrossRequest) -> CrossResponse:
        ps = req.points.to_pointset()
        coloring = Coloring(req.coloring)
        if req.min_over_msts:
            rep = cross_rb_min(ps, coloring, cap=req.cap)
        else:
            rep = cross_rb(ps, coloring)
        max_red, max_blue = longer_edge_crossing_profile(rep)
        return CrossResponse(
            count=rep.count, pairs=list(rep.pairs),
            red_tree=_tree_model(rep.red_tree),
            blue_tree=_tree_model(rep.blue_tree),
            profile=ProfileModel(max_red=max_red, max_blue=max_blue))

    @app.post("/color")
    def color(req: ColorRequest) -> ColorResponse:
        ps = req.points.to_pointset()
        coloring, guarantee, trace = _color(ps, req)
        realized = cross_rb(ps, coloring).count
        return ColorResponse(strategy=req.strategy,
                             coloring=coloring.assignment,
                             guarantee=guarantee, realized=realized,
                             trace=list(trace))

    @app.post("/oracle")
    def oracle(req: OracleRequest) -> OracleResponse:
        ps = req.points.to_pointset()
        if req.nongeneric:
            kwargs = {} if req.max_n is None else {"max_n": req.max_n}
            result = exact_cross_number_nongeneric(ps, cap=req.cap, **kwargs)
        else:
            kwargs = {} if req.max_n is None else {"max_n": req.max_n}
            result = exact_cross_number(ps, workers=req.workers, **kwargs)
        return OracleResponse(value=result.value,
                              witness=result.witness.assignment,
                              colorings=result.colorings,
                              elapsed_ms=result.elapsed_ms)

    @app.post("/verify")
    def verify(req: VerifyRequest) -> VerifyResponse:
        return _verify(req)

    @app.post("/experiment")
    def experiment(req: ExperimentRequest) -> ExperimentResponse:
        spec = ExperimentSpec(name=req.name,
                              ns=tuple(req.ns) if req.ns else (),
                              trials=req.trials or 0, seed=req.seed,
                              workers=req.workers)
        report = run_experiment(spec)
        return ExperimentResponse(
            name=req.name, ns=sorted({r.n for r in report.rows}),
            trials=req.trials or REGISTRY[req.name].default_trials,
            seed=req.seed, ok=report.ok,
            rows=[ExperimentRowModel(experiment=r.experiment, n=r.n,
                                     trial=r.trial, seed=r.seed,
                                     realized=r.realized,
                                     guarantee=r.guarantee, status=r.status)
                  for r in report.rows],
            per_n={str(n): stats for n, stats in report.per_n.items()},
            failures=list(report.failures),
            csv_text=report.csv_text, json_text=report.json_text,
            elapsed_ms=report.elapsed_ms)

    return app


app = create_app()
