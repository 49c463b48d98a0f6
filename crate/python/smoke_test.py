"""Smoke test for the compiled `forestry` extension module.

Build and install it first, e.g. `maturin develop -m crates/python/Cargo.toml`,
then run `python python/smoke_test.py`.
"""

import json

import forestry as fo


def main():
    c4 = fo.Graph.generate("cycle:4")
    assert fo.t21(c4) == fo.forests(c4) == 15
    assert len(fo.degree_sequences(c4)) == 15
    assert fo.degree_sequence_counts(c4)[(1, 1, 1, 1)] == 2
    assert fo.tutte(c4) == {(0, 1): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1}

    tri = fo.Graph(3, [(1, 2), (2, 3), (3, 1)])
    report = fo.verify(tri)
    assert (report.forest_count, report.degseq_count) == (7, 8)
    assert report.verdict == "strict_inequality_holds"
    assert json.loads(report.json)["verdict"] == report.verdict

    chain = fo.chain(c4)
    assert chain.common_value == 15 and chain.exhaustive

    reports = fo.sweep("random_bipartite_multi:3,4,10", 25, seed=1)
    assert all(r.verdict == "equality_holds" for r in reports)

    o = fo.Orientation(c4)
    assert o.reverse_path(1, 4).outdegrees() == [1, 1, 1, 1]
    assert fo.t21(fo.Graph.generate("complete_bipartite:5,6")) == 15450912

    try:
        fo.forests(fo.Graph.generate("complete:7"), cap=12)
    except fo.CapExceededError:
        pass
    else:
        raise AssertionError("cap not enforced")

    print("smoke test passed")


if __name__ == "__main__":
    main()
