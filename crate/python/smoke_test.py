"""Smoke test for the `bihom` extension module.

Build and install first, e.g. `pip install ./crates/py` or `maturin develop -m crates/py/Cargo.toml`.
"""

import json

import bihom


def passed(report_json):
    report = json.loads(report_json)
    return all(e["status"] != "fail" for e in report["entries"]), report


def main():
    b = bihom.Scalar("b")
    assert (b * (bihom.Scalar("1") / b)) == bihom.Scalar("1")
    assert (bihom.Scalar("1/2") + bihom.Scalar("1/3")) == bihom.Scalar("5/6")
    assert str(bihom.Scalar("2*b").substitute({"b": "3"})) == "6"
    try:
        bihom.Scalar("1") / bihom.Scalar("0")
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("division by zero accepted")

    assert "example24" in bihom.catalog_names()
    for name in bihom.catalog_names():
        ok, report = passed(bihom.load_catalog(name).check())
        assert ok, (name, report)
        assert report["schema"] == "bihom-report/1"

    heis = bihom.load_catalog("example25-heisenberg")
    twisted = heis.construct("twist", "heisenberg")
    assert '"l1*l2p"' in twisted.to_text() and '"l1p*l2"' in twisted.to_text()
    assert passed(twisted.check("bihom-lie"))[0]

    center = json.loads(heis.structure("center", "heisenberg"))
    assert center["results"]["span"] == "span(x3)", center["results"]
    series = json.loads(heis.structure("derived-series", "heisenberg"))
    assert series["results"]["terms"] == ["L", "span(x3)", "0"], series["results"]
    ok, _ = passed(heis.structure("ideal-check", "heisenberg", [["x1"]]))
    assert not ok

    try:
        bihom.load_catalog("example24").substitute({"b": "0"}).construct("commutator")
    except bihom.RefusedError as e:
        assert "not bijective" in str(e)
    else:
        raise AssertionError("singular beta accepted")

    text = bihom.load_catalog("kZ2").to_text()
    assert bihom.AlgebraFile.parse(text).to_text() == text
    print("smoke test ok")


if __name__ == "__main__":
    main()
