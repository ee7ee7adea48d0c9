"""Smoke tests for the python bindings; run by ctest with PYTHONPATH set to
the built extension and the package sources."""

import os
import sys

import repsplit


def data(name):
    with open(os.path.join(os.environ["REPSPLIT_TEST_DATA_DIR"], name)) as fh:
        return fh.read()


def test_split_petersen():
    artifact = repsplit.split(data("petersen.cycles"))
    assert artifact["degree"] == 10
    assert artifact["rank"] == 3
    dims = sorted(c["dimension"] for c in artifact["components"])
    assert dims == [1, 4, 5]
    assert artifact["field"] is None
    lengths = sorted(s["length"] for s in artifact["suborbits"])
    assert lengths == [1, 3, 6]
    # trivial projector: all coefficients 1/10
    triv = next(c for c in artifact["components"] if c["dimension"] == 1)
    assert all(c["coords"] == ["1/10"] for c in triv["coefficients"])


def test_verify_round_trip():
    gens = data("m11.cycles")
    artifact_json = repsplit.split_json(gens)
    result = repsplit.verify(artifact_json, gens)
    assert result["ok"], result["checks"]


def test_tables():
    t = repsplit.tables(data("m11.cycles"))
    assert t["rank"] == 2
    assert t["commutative"] is True
    assert [1, 1, 1, 1] in t["tensor"]


def test_field_artifact():
    artifact = repsplit.split(data("c5.cycles"))
    assert artifact["field"] is not None
    assert len(artifact["field"]["minpoly"]) == 5  # quartic minimal polynomial
    conj_linked = [c for c in artifact["components"] if c["conjugate_of"] is not None]
    assert len(conj_linked) == 4


def test_intransitive_rejected():
    try:
        repsplit.split(data("intransitive.cycles"))
    except repsplit.NotTransitiveError:
        return
    raise AssertionError("intransitive action was not rejected")


def test_report_text():
    text = repsplit.report(data("petersen.cycles"))
    assert "Rank: 3" in text
    assert "Suborbit lengths: 1, 3, 6." in text


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok {name}")
            except Exception as exc:  # noqa: BLE001
                failures += 1
                print(f"FAIL {name}: {exc}")
    sys.exit(1 if failures else 0)
