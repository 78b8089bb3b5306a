#!/usr/bin/env python3
"""Smoke test for the rcng Python extension module.

Builds nothing itself: expects `cargo build --release -p rcng-python`
(or the debug equivalent) to have produced target/.../librcng.so. The
shared library is copied next to a temp directory as rcng.so and
imported from there.
"""

import os
import shutil
import sys
import tempfile

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def load_module():
    candidates = [
        os.path.join(REPO, "target", "release", "librcng.so"),
        os.path.join(REPO, "target", "debug", "librcng.so"),
    ]
    lib = next((p for p in candidates if os.path.exists(p)), None)
    if lib is None:
        sys.exit(
            "librcng.so not found; run `cargo build --release -p rcng-python` first"
        )
    stage = tempfile.mkdtemp(prefix="rcng-py-")
    shutil.copy(lib, os.path.join(stage, "rcng.so"))
    sys.path.insert(0, stage)
    import rcng  # noqa: E402

    return rcng


def main():
    rcng = load_module()
    fixtures = os.path.join(REPO, "fixtures")

    # Graph basics and graph6 round-trip.
    p4 = rcng.Graph.from_graph6("Ch")
    assert p4.n == 4 and p4.m == 3
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert rcng.Graph.from_graph6(p4.to_graph6()) == p4
    assert p4.diameter() == 3
    assert p4.complement().complement() == p4
    print("graph basics: ok")

    # Exact solver.
    cert = rcng.rc_exact(p4)
    assert cert.value == 3 and cert.evidence == "tree-rule"
    assert rcng.is_rainbow_connected(p4, cert.witness)
    k4 = rcng.Graph.from_graph6("C~")
    assert rcng.rc_exact(k4).value == 1
    c6 = rcng.Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    assert rcng.has_rainbow_k_coloring(c6, 2) is None
    assert rcng.rc_exact(c6).value == 3
    print("solver: ok")

    # Paths under an explicit coloring.
    coloring = rcng.Coloring(p4, 3, [(0, 1, 1), (1, 2, 2), (2, 3, 3)])
    path = rcng.find_rainbow_path(p4, coloring, 0, 3)
    assert path == [(0, 1), (1, 2), (2, 3)]
    doc = coloring.to_doc()
    assert rcng.Coloring.from_doc(doc).to_doc() == doc
    print("colorings and paths: ok")

    # Coloring extension over an attached vertex.
    tree = rcng.rc_upper_tree(c6)
    g7, c7 = rcng.extend_rainbow_coloring(c6, tree, [0, 2, 4])
    assert g7.n == 7 and c7.k == tree.k
    assert rcng.is_rainbow_connected(g7, c7)
    print("extension: ok")

    # Constructions.
    ds = rcng.double_star(3, 3)
    assert ds.rc_sum() == 8 and ds.n == 6
    lf = rcng.lower_family(12, fixture_dir=fixtures)
    assert lf.rc_sum() == 4
    assert rcng.is_rainbow_connected(lf.g, lf.coloring_g)
    assert rcng.is_rainbow_connected(lf.g_bar, lf.coloring_gbar)
    small = rcng.small_case_pairs(fixture_dir=fixtures)
    assert [p.rc_sum() for p in small] == [6, 7, 5, 5]
    print("constructions: ok")

    # Census and verification.
    report = rcng.ng_census(4)
    assert (report["min_sum"], report["max_sum"]) == (6, 6)
    report = rcng.ng_census(5)
    assert (report["min_sum"], report["max_sum"]) == (6, 7)
    assert len(rcng.enumerate_both_connected(5)) == 5
    assert rcng.verify_no_2_2(5)["holds"] is True
    verdict = rcng.two_two_filter(rcng.Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]))
    assert verdict["passes"] is True
    print("census: ok")

    print("smoke test passed")


if __name__ == "__main__":
    main()
