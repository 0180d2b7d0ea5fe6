#!/usr/bin/env python3
"""Smoke test for the seidel_py extension module.

Builds nothing itself: run `cargo build -p seidel-py` (or --release) first,
then `python3 python/smoke.py`. The script locates the freshly built cdylib,
copies it next to a temp directory under an importable name, and exercises
the bindings end to end.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_cdylib() -> pathlib.Path:
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libseidel_py.so", "seidel_py.so", "libseidel_py.dylib")
    ]
    for path in candidates:
        if path.exists():
            return path
    raise SystemExit(
        "seidel_py cdylib not found; run `cargo build -p seidel-py` first"
    )


def import_module():
    lib = locate_cdylib()
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="seidel-py-"))
    shutil.copy2(lib, tmp / "seidel_py.so")
    sys.path.insert(0, str(tmp))
    import seidel_py

    return seidel_py


def main() -> None:
    sp = import_module()

    # Construction and verification.
    t5 = sp.construct("triangular", 5)
    assert t5.n == 10
    info = t5.verify()
    assert info["class"] == "primitive-srg"
    assert info["params"] == (10, 6, 3, 4)

    spec = t5.spectrum()
    assert spec["theta1"] == 1 and spec["theta2"] == -2
    assert spec["switchable"] is True
    assert spec["rho"] == 3

    # graph6 round trip.
    line = t5.graph6()
    back = sp.Graph.from_graph6(line)
    assert back.graph6() == line

    # Switching by a qualifying 4-clique keeps the parameters and the
    # isomorphism class (SRG(10,6,3,4) is unique).
    sets = sp.find_sets(t5, strategy="cliques")
    assert len(sets) == 5
    clique = sets[0]
    assert t5.check_thm1(clique) is True
    assert t5.check_thm1([0, 1]) is False
    switched = t5.switch(clique)
    assert switched.verify()["params"] == (10, 6, 3, 4)
    assert t5.is_isomorphic(switched)
    assert t5.canonical_digest() == switched.canonical_digest()

    # Shifted parameters: switching T(5) by a qualifying 5-subset yields
    # Petersen.
    result = sp.closure_thm2(t5)
    assert result["classes"], "shifted-parameters search found no classes"
    petersen = t5.complement()
    found = sp.Graph.from_graph6(result["classes"][0])
    assert found.verify()["params"] == (10, 3, 0, 1)
    assert petersen.is_isomorphic(found)

    # Closure fixpoint at v = 10 is a single class.
    run = sp.closure(t5, strategy="cliques")
    assert len(run["classes"]) == 1
    assert run["truncated"] is None

    # Catalog and the clique-size rule.
    catalog = sp.catalog_params()
    assert len(catalog) == 32
    assert (276, 140, 58, 84) in catalog
    assert sp.clique_switch_size(276, 140, 58, 84) == 6
    assert sp.clique_switch_size(10, 6, 3, 4) == 4

    # Embedding certification numbers for T(5).
    report = t5.embedding_report()
    assert report["rank"] == 5
    assert report["design2"] is True
    assert report["inner_values"] == [(-1, 3), (1, 3)]
    assert report["relative_bound"] == (10, 1)

    # Two-graph of T(5) is regular with a = 4.
    tg = t5.two_graph()
    assert tg["triples"] == 60 and tg["regular"] == 4

    # Automorphisms of the pentagon.
    c5 = sp.construct("paley", 5)
    assert c5.automorphism_order() == 10

    print("seidel_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
