import json

import pytest
from starlette.testclient import TestClient

from mstcross.experiments import REGISTRY, ExperimentSpec, run_experiment
from mstcross.generators import perturbed_grid_p0
from mstcross.geom import format_pointset, from_coords, parse_pointset
from mstcross.service import create_app

pytestmark = pytest.mark.filterwarnings("ignore::DeprecationWarning")

QUAD_TEXT = "4\n0 0\n10 1\n9 11\n-1 9\n"


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    payload = client.get("/health").json()
    assert payload["status"] == "ok"
    assert payload["version"]


def test_listings(client):
    generators = client.get("/generators").json()
    assert "uniform-square" in generators and "figure9" in generators
    strategies = client.get("/strategies").json()
    assert len(strategies) == 8
    assert all(s["description"] for s in strategies)
    experiments = client.get("/experiments").json()
    assert len(experiments) == len(REGISTRY)
    assert {e["name"] for e in experiments} == set(REGISTRY)


def test_generate_round_trips_exact_fractions(client):
    r = client.post("/generate", json={
        "generator": "uniform-square", "n": 9, "seed": 4})
    assert r.status_code == 200
    payload = r.json()
    pts = payload["points"]
    assert pts["n"] == 9
    parsed = parse_pointset(pts["text"])
    for (xs, ys), p in zip(pts["points"], parsed):
        assert xs == str(p.x) or "/" not in xs and xs == str(p.x.numerator)
    # feeding the text back through /mst must be lossless
    tree = client.post("/mst", json={"points": {"text": pts["text"]}}).json()
    assert len(tree["edges"]) == 8


def test_generate_grid_carries_labels(client):
    payload = client.post("/generate", json={
        "generator": "perturbed-grid-p0", "n": 8}).json()
    grid = payload["grid_labels"]
    assert grid is not None
    assert len(grid["v"]) == len(grid["w"]) == 4
    assert payload["points"]["labels"][grid["v"][0]] == "v1"
    assert payload["points"]["labels"][grid["w"][3]] == "w4"


def test_figure9_ships_its_coloring(client):
    payload = client.post("/generate", json={"generator": "figure9"}).json()
    assert payload["coloring"] == "R" * 12 + "BB"
    assert payload["points"]["n"] == 14


def test_generate_missing_parameter_is_422(client):
    r = client.post("/generate", json={"generator": "uniform-square"})
    assert r.status_code == 422
    assert r.json()["error"] == "ValueError"


def test_mst_known_triangle(client):
    text = "3\n0 0\n3 0\n0 4\n"
    tree = client.post("/mst", json={"points": {"text": text}}).json()
    assert sorted(map(tuple, tree["edges"])) == [(0, 1), (0, 2)]
    assert tree["tie"] is False


def test_cross_diagonal_quad(client):
    payload = client.post("/cross", json={
        "points": {"text": QUAD_TEXT}, "coloring": "RBRB"}).json()
    assert payload["count"] == 1
    assert payload["pairs"] == [[[0, 2], [1, 3]]]
    assert payload["profile"] == {"max_red": 1, "max_blue": 1}
    assert payload["red_tree"]["vertices"] == [0, 2]


def test_cross_min_over_msts_on_tied_input(client):
    ps, _ = perturbed_grid_p0(6)
    r = client.post("/cross", json={
        "points": {"text": format_pointset(ps)},
        "coloring": "RBRBRB", "min_over_msts": True})
    assert r.status_code == 200
    assert r.json()["count"] >= 0


def test_cross_rejects_wrong_length_coloring(client):
    r = client.post("/cross", json={
        "points": {"text": QUAD_TEXT}, "coloring": "RB"})
    assert r.status_code == 422


def test_color_alternate_convex(client):
    payload = client.post("/color", json={
        "points": {"text": QUAD_TEXT}, "strategy": "alternate-convex"}).json()
    assert payload["guarantee"] == 1
    assert payload["realized"] >= 1
    assert sorted(payload["coloring"]) == ["B", "B", "R", "R"]
    assert payload["trace"]


def test_color_grid_labels_flow(client):
    gen = client.post("/generate", json={
        "generator": "perturbed-grid-p0", "n": 8}).json()
    payload = client.post("/color", json={
        "points": {"text": gen["points"]["text"],
                   "grid_labels": gen["grid_labels"]},
        "strategy": "grid-five-eighths"}).json()
    assert payload["guarantee"] == 3
    assert payload["realized"] >= 3


def test_color_without_labels_is_422(client):
    gen = client.post("/generate", json={
        "generator": "perturbed-grid-p0", "n": 8}).json()
    r = client.post("/color", json={
        "points": {"text": gen["points"]["text"]},
        "strategy": "grid-five-eighths"})
    assert r.status_code == 422
    assert r.json()["error"] == "NotLabeledGrid"


def test_color_random_has_no_guarantee(client):
    payload = client.post("/color", json={
        "points": {"text": QUAD_TEXT}, "strategy": "random", "seed": 5}).json()
    assert payload["guarantee"] is None
    assert set(payload["coloring"]) <= {"R", "B"}


def test_unknown_strategy_is_422(client):
    r = client.post("/color", json={
        "points": {"text": QUAD_TEXT}, "strategy": "nope"})
    assert r.status_code == 422


def test_oracle_convex_quad(client):
    payload = client.post("/oracle", json={
        "points": {"text": QUAD_TEXT}}).json()
    assert payload["value"] == 1
    assert payload["colorings"] == 7
    assert len(payload["witness"]) == 4


def test_oracle_nongeneric_default_cap_guard(client):
    # 13 unlabeled points exceed the stricter non-generic size limit
    ps = from_coords([(i, i * i) for i in range(13)])
    r = client.post("/oracle", json={
        "points": {"text": format_pointset(ps)}, "nongeneric": True})
    assert r.status_code == 422
    assert r.json()["error"] == "TooLarge"


def test_verify_small_angle(client):
    payload = client.post("/verify", json={
        "lemma": "small-angle", "trials": 120}).json()
    assert payload == {"lemma": "small-angle", "trials": 120, "seed": 0,
                       "ok": True,
                       "report": {"samples": 120, "violations": 0}}


def test_verify_profile_histogram_keys_are_strings(client):
    payload = client.post("/verify", json={
        "lemma": "profile", "trials": 2}).json()
    assert payload["ok"] is True
    assert all(isinstance(k, str) for k in payload["report"]["histogram"])


def test_verify_unknown_lemma_is_422(client):
    assert client.post("/verify", json={"lemma": "nope"}).status_code == 422


def test_experiment_matches_direct_run(client):
    payload = client.post("/experiment", json={
        "name": "equidistant-min", "seed": 0}).json()
    direct = run_experiment(ExperimentSpec(name="equidistant-min", seed=0))
    assert payload["ok"] is True
    assert payload["csv_text"] == direct.csv_text
    assert payload["json_text"] == direct.json_text
    assert len(payload["rows"]) == len(direct.rows)
    assert json.loads(payload["json_text"])["experiment"] == "equidistant-min"


def test_experiment_unknown_name_is_422(client):
    r = client.post("/experiment", json={"name": "nope"})
    assert r.status_code == 422
