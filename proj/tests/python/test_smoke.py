"""Smoke tests for the tempered_lie module; runnable directly or via pytest."""

import cmath

import tempered_lie as tl


def test_groups():
    assert tl.groups() == {"groups": ["a1a1", "sl2r", "su11", "su2", "su21"]}


def test_cartans():
    info = tl.cartans("su21")
    assert info["group"] == "su21"
    labels = [c["label"] for c in info["cartans"]]
    assert labels == ["compact", "split"]
    compact = info["cartans"][0]
    assert compact["dim_a"] == 0
    assert compact["series"] == "relative-discrete"
    assert compact["grading"]["1,0"] == "compact"


def test_orbit_report():
    report = tl.orbit_report("su21", cartan="split")
    assert report["codim"] == 1
    assert report["open"] is False
    assert report["measurable"] == "no"
    assert report["v_minus"] == ["-1,-1", "-1,0"]


def test_open_orbits():
    assert tl.open_orbits("su21") == 3
    assert tl.open_orbits("su21", flag=[0]) == 2
    assert tl.open_orbits("sl2r") == 2


def test_bbw():
    result = tl.bbw("su2", beta="3/2")
    assert result == {"vanishes": False, "q0": 0, "nu": "2", "dim": "4"}
    assert tl.bbw("su2", beta="-1/2") == {"vanishes": True}


def test_character():
    value = tl.character("sl2r", nu="1/2", at=[1.0])
    assert isinstance(value, complex)
    assert abs(value - (-1.0)) < 1e-9


def test_realize():
    result = tl.realize("sl2r", beta="-3/2")
    assert result == {
        "vanishes": False,
        "degree": 0,
        "nu_plus_rho": "-1",
        "series": "relative-discrete",
    }


def test_catalog():
    families = tl.catalog("su21")["families"]
    assert [f["series"] for f in families] == ["relative-discrete", "principal"]


def test_domain_error_is_value_error():
    try:
        tl.character("sl2r", nu="1/3", at=[1.0])
    except ValueError as err:
        assert "not an H-series parameter" in str(err)
    else:
        raise AssertionError("expected a DomainError")
    assert issubclass(tl.DomainError, ValueError)


def test_check_suite():
    result = tl.check(quadrature=64)
    assert result["ok"] is True
    names = {row["name"] for row in result["checks"]}
    assert "schur-orthogonality" in names
    assert all(row["ok"] for row in result["checks"])


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"[ok]  {name}")
            except AssertionError as err:
                failures += 1
                print(f"[FAIL] {name}: {err}")
    if failures:
        raise SystemExit(1)
    print("all smoke tests passed")
