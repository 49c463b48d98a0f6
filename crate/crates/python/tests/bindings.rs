use std::ffi::CString;
use std::sync::Once;

use forestry_py::forestry_py;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn python<R>(f: impl for<'py> FnOnce(Python<'py>) -> R) -> R {
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        pyo3::append_to_inittab!(forestry_py);
        Python::initialize();
    });
    Python::attach(f)
}

/// Runs a snippet with the module imported as `fo`; assertion failures
/// surface as a Rust panic carrying the Python traceback.
fn run(code: &str) {
    python(|py| {
        let globals = PyDict::new(py);
        let module = py.import("forestry").unwrap();
        globals.set_item("fo", module).unwrap();
        let src = CString::new(code).unwrap();
        if let Err(err) = py.run(&src, Some(&globals), None) {
            err.display(py);
            panic!("python snippet failed: {err}");
        }
    });
}

#[test]
fn graph_uses_one_based_vertices() {
    run(r#"
g = fo.Graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
assert g.num_vertices == 4 and g.num_edges == 4 and len(g) == 4
assert g.edges == [(1, 2), (2, 3), (3, 4), (1, 4)]
assert g.degrees() == [2, 2, 2, 2]
assert g.is_bipartite() and g.is_connected()
assert g.bipartition() == [1, 3]
assert g == fo.Graph.generate("cycle:4")
assert g.contract_edge(0).num_vertices == 3
assert not g.is_bridge(0)
try:
    fo.Graph(3, [(0, 1)])
    raise AssertionError("vertex 0 accepted")
except ValueError:
    pass
"#);
}

#[test]
fn counts_on_c4() {
    run(r#"
g = fo.Graph.generate("cycle:4")
assert fo.t21(g) == 15
assert fo.forests(g) == 15
assert len(fo.degree_sequences(g)) == 15
assert fo.degree_sequence_counts(g)[(1, 1, 1, 1)] == 2
assert fo.orientation_counts(g) == {"indegree": 15, "outdegree": 15, "score": 15}
assert fo.tutte(g) == {(0, 1): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1}
assert fo.tutte_eval(g, 2, 1) == 15
assert fo.tutte_eval(g, 1, 1) == 4
"#);
}

#[test]
fn big_counts_are_python_ints() {
    run(r#"
g = fo.Graph.generate("complete_bipartite:5,6")
assert fo.t21(g) == 15450912
assert isinstance(fo.t21(fo.Graph.generate("complete:8")), int)
"#);
}

#[test]
fn reports() {
    run(r#"
import json
r = fo.verify(fo.Graph.generate("cycle:3"))
assert (r.forest_count, r.degseq_count, r.verdict) == (7, 8, "strict_inequality_holds")
assert json.loads(r.json)["forest_count"] == "7"
c = fo.chain(fo.Graph.generate("cycle:4"))
assert c.common_value == 15 and c.orientations_checked == 16 and c.exhaustive
reports = fo.sweep("random_bipartite:3,3,0.5", 20, seed=3)
assert len(reports) == 20
assert all(r.verdict == "equality_holds" for r in reports)
assert [r.seed for r in reports] == [r.seed for r in fo.sweep("random_bipartite:3,3,0.5", 20, seed=3)]
"#);
}

#[test]
fn orientations() {
    run(r#"
g = fo.Graph.generate("cycle:4")
o = fo.Orientation(g)
assert o.bits == "0000"
assert o.arcs() == [(1, 2), (2, 3), (3, 4), (1, 4)]
assert o.outdegrees() == [2, 1, 1, 0]
assert o.scores() == [2, 0, 0, -2]
assert o.reachable(1) == [1, 2, 3, 4]
p = o.reverse_path(1, 4)
assert p.outdegrees() == [1, 1, 1, 1]
f = o.flip([0, 1])
assert f.bits == "1100"
assert o.count_subdigraph_scores() == 15
assert len(fo.Orientation.enumerate(g)) == 16
lr = fo.Orientation.left_to_right(g)
assert lr.outdegrees() == [2, 0, 2, 0]
"#);
}

#[test]
fn error_classes() {
    run(r#"
g = fo.Graph.generate("complete:6")
try:
    fo.forests(g, cap=10)
    raise AssertionError("cap ignored")
except fo.CapExceededError:
    pass
assert issubclass(fo.CapExceededError, ValueError)
assert issubclass(fo.InvariantError, RuntimeError)
try:
    fo.Graph.generate("nope:1")
    raise AssertionError("bad family accepted")
except ValueError:
    pass
try:
    fo.Graph.from_edge_list("2 1\n1 3\n")
    raise AssertionError("bad vertex accepted")
except ValueError as e:
    assert "line 2" in str(e)
"#);
}

#[test]
fn edge_list_round_trip() {
    run(r#"
g = fo.Graph.generate("random_multigraph:5,9,true", seed=8)
assert fo.Graph.from_edge_list(g.to_edge_list()) == g
"#);
}
