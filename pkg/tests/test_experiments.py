import csv
import io
import json

import pytest

from mstcross.experiments import (CSV_HEADER, REGISTRY, ExperimentSpec,
                                  child_seed, estimate_random_expectation,
                                  run_experiment)


def test_child_seed_trial_zero_passes_through():
    assert child_seed(42, 100, 0) == 42
    assert child_seed(7, 8, 0) == 7


def test_child_seed_spreads_across_trials_and_sizes():
    # trial 0 collapses to the sweep seed at every n; all others distinct
    seen = {child_seed(5, n, t) for n in (10, 20) for t in range(50)}
    assert len(seen) == 99
    assert all(0 <= s < (1 << 63) for s in seen)


def test_unknown_name_rejected():
    with pytest.raises(ValueError):
        ExperimentSpec(name="no-such-experiment")


def test_registry_entries_are_complete():
    for name, reg in REGISTRY.items():
        assert reg.check in ("ge", "eq", "le", "none"), name
        assert reg.default_ns, name
        assert reg.default_trials >= 1, name
        assert reg.description, name


def test_run_experiment_rows_and_csv_schema():
    spec = ExperimentSpec(name="convex-alternating", ns=(6, 9), trials=3)
    report = run_experiment(spec)
    assert len(report.rows) == 6
    assert report.ok
    parsed = list(csv.reader(io.StringIO(report.csv_text)))
    assert tuple(parsed[0]) == CSV_HEADER
    assert len(parsed) == 7
    for line, row in zip(parsed[1:], report.rows):
        assert line[0] == "convex-alternating"
        assert int(line[1]) == row.n
        assert int(line[2]) == row.trial
        assert int(line[4]) == row.realized
        assert int(line[5]) == row.guarantee
        assert line[7] == ""
    payload = json.loads(report.json_text)
    assert payload["per_n"]["6"]["rows"] == 3
    assert payload["failures"] == []


def test_trial_zero_probes_the_sweep_seed_instance():
    from mstcross.crossing import cross_rb
    from mstcross.generators import perturbed_regular_polygon
    from mstcross.strategies import alternate_convex

    report = run_experiment(ExperimentSpec(
        name="convex-alternating", ns=(8,), trials=1, seed=31))
    ps = perturbed_regular_polygon(8, seed=31)
    out = alternate_convex(ps)
    row = report.rows[0]
    assert row.seed == 31
    assert row.realized == cross_rb(ps, out.coloring).count
    assert row.guarantee == out.guarantee


def test_workers_do_not_change_the_bytes():
    serial = run_experiment(ExperimentSpec(
        name="one-crossing", ns=(6, 7), trials=8, seed=3, workers=1))
    parallel = run_experiment(ExperimentSpec(
        name="one-crossing", ns=(6, 7), trials=8, seed=3, workers=2))
    assert serial.csv_text == parallel.csv_text
    assert serial.json_text == parallel.json_text


def test_failure_rows_are_recorded_not_raised():
    report = run_experiment(ExperimentSpec(
        name="flat-exact", ns=(3,), trials=2))
    assert not report.ok
    assert len(report.failures) == 2
    assert "ValueError" in report.rows[0].status
    assert report.per_n[3]["failed"] == 2
    assert report.per_n[3]["mean"] is None


def test_out_dir_receives_both_files(tmp_path):
    report = run_experiment(ExperimentSpec(
        name="equidistant-min", out_dir=str(tmp_path)))
    assert (tmp_path / "equidistant-min.csv").read_text() == report.csv_text
    assert (tmp_path / "equidistant-min.json").read_text() == report.json_text


def test_default_ns_and_trials_apply():
    reg = REGISTRY["equidistant-min"]
    report = run_experiment(ExperimentSpec(name="equidistant-min"))
    assert len(report.rows) == len(reg.default_ns) * reg.default_trials


def test_estimates_shape_and_determinism():
    est = estimate_random_expectation([30], trials=5, seed=2)
    assert set(est) == {30}
    stats = est[30]
    assert stats["trials"] == 5
    assert stats["mean"] >= 0
    assert stats["stderr"] >= 0
    assert stats["mean_over_n"] == pytest.approx(stats["mean"] / 30)
    again = estimate_random_expectation([30], trials=5, seed=2)
    assert again == est


def test_estimate_rejects_zero_trials():
    with pytest.raises(ValueError):
        estimate_random_expectation([20], trials=0)
