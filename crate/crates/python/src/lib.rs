//! Python bindings: trees, pair sets and the main cover operations.

use std::collections::HashMap;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use tripcover::oracle::{count_minimum_covers_up_to, verify_theorems_up_to, DEFAULT_MAX_LEAVES};
use tripcover::shelling::shelling_closure_unchecked;
use tripcover::{DistanceMap, PhyloTree, TripletCover, DEFAULT_TOLERANCE};

create_exception!(tripcover_py, TripcoverError, PyValueError);

fn err(e: tripcover::Error) -> PyErr {
    TripcoverError::new_err(e.to_string())
}

#[pyclass(name = "Tree", module = "tripcover_py", frozen)]
struct Tree {
    inner: PhyloTree,
}

#[pymethods]
impl Tree {
    #[new]
    fn new(newick: &str) -> PyResult<Self> {
        let inner = tripcover::parse_newick(newick).map_err(err)?;
        Ok(Self { inner })
    }

    /// Uniformly random topology on `n` leaves, with optional edge lengths
    /// drawn from `(lo, hi)`.
    #[staticmethod]
    #[pyo3(signature = (n, seed=0, lengths=None))]
    fn random(n: usize, seed: u64, lengths: Option<(f64, f64)>) -> PyResult<Self> {
        let inner = tripcover::random_tree(n, seed, lengths).map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn leaves(&self) -> Vec<String> {
        self.inner.taxa().to_vec()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.leaf_count()
    }

    fn newick(&self) -> String {
        tripcover::serialize_newick(&self.inner)
    }

    /// Quartet on four leaves, as `"ab|cd"`.
    fn quartet(&self, a: &str, b: &str, c: &str, d: &str) -> PyResult<String> {
        Ok(self.inner.quartet_topology([a, b, c, d]).map_err(err)?.to_string())
    }

    /// Path-length distances between all leaf pairs, keyed by `(a, b)`, `a < b`.
    fn distances(&self) -> PyResult<HashMap<(String, String), f64>> {
        let d = self.inner.all_leaf_distances().map_err(err)?;
        Ok(to_dict(&d))
    }

    fn is_isomorphic(&self, other: &Tree) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }

    fn max_length_error(&self, other: &Tree) -> Option<f64> {
        self.inner.max_length_error(&other.inner)
    }

    fn __repr__(&self) -> String {
        format!("Tree('{}')", self.newick())
    }
}

#[pyclass(name = "Cover", module = "tripcover_py", frozen)]
struct Cover {
    inner: TripletCover,
}

#[pymethods]
impl Cover {
    #[new]
    fn new(tree: &Tree, pairs: Vec<(String, String)>) -> PyResult<Self> {
        let inner = TripletCover::for_tree(&tree.inner, pairs).map_err(err)?;
        Ok(Self { inner })
    }

    fn pairs(&self) -> Vec<(String, String)> {
        self.inner
            .pairs()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn multiplicity(&self, x: &str) -> PyResult<usize> {
        self.inner.multiplicity(x).map_err(err)
    }

    fn min_multiplicity(&self) -> usize {
        self.inner.min_multiplicity()
    }

    fn is_two_tree(&self) -> PyResult<bool> {
        Ok(tripcover::is_two_tree(&self.inner.cover_graph())
            .map_err(err)?
            .is_some())
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __contains__(&self, pair: (String, String)) -> bool {
        self.inner.contains(&pair.0, &pair.1)
    }

    fn __repr__(&self) -> String {
        let words: Vec<String> = self.inner.pairs().map(|(a, b)| format!("{a}{b}")).collect();
        format!("Cover({})", words.join(" "))
    }
}

fn to_dict(d: &DistanceMap) -> HashMap<(String, String), f64> {
    d.iter()
        .map(|(a, b, v)| ((a.to_string(), b.to_string()), v))
        .collect()
}

fn from_dict(d: HashMap<(String, String), f64>) -> PyResult<DistanceMap> {
    let mut map = DistanceMap::new();
    for ((a, b), v) in d {
        map.insert(&a, &b, v).map_err(err)?;
    }
    Ok(map)
}

#[pyfunction]
fn is_triplet_cover(tree: &Tree, cover: &Cover) -> PyResult<bool> {
    tripcover::is_triplet_cover(&tree.inner, &cover.inner).map_err(err)
}

#[pyfunction]
fn is_minimal(tree: &Tree, cover: &Cover) -> PyResult<bool> {
    tripcover::is_minimal(&tree.inner, &cover.inner).map_err(err)
}

#[pyfunction]
fn is_minimum(tree: &Tree, cover: &Cover) -> PyResult<bool> {
    tripcover::is_minimum(&tree.inner, &cover.inner).map_err(err)
}

#[pyfunction]
fn minimum_cover(tree: &Tree) -> Cover {
    Cover {
        inner: tripcover::minimum_cover(&tree.inner),
    }
}

#[pyfunction]
fn per_vertex_cover(tree: &Tree) -> Cover {
    Cover {
        inner: tripcover::per_vertex_cover(&tree.inner),
    }
}

#[pyfunction]
fn minimalize(tree: &Tree, cover: &Cover) -> PyResult<Cover> {
    let inner = tripcover::minimalize(&tree.inner, &cover.inner).map_err(err)?;
    Ok(Cover { inner })
}

/// Shelling closure. Returns a dict with `shellable`, `trace` (tuples
/// `(a, b, x, y, quartet)`) and `residual`.
#[pyfunction]
#[pyo3(signature = (tree, cover, force=false))]
fn shell<'py>(py: Python<'py>, tree: &Tree, cover: &Cover, force: bool) -> PyResult<Bound<'py, PyDict>> {
    let out = if force {
        shelling_closure_unchecked(&tree.inner, &cover.inner)
    } else {
        tripcover::shelling_closure(&tree.inner, &cover.inner)
    }
    .map_err(err)?;
    let trace: Vec<(String, String, String, String, String)> = out
        .trace
        .steps()
        .iter()
        .map(|s| (s.pair.0.clone(), s.pair.1.clone(), s.x.clone(), s.y.clone(), s.quartet()))
        .collect();
    let dict = PyDict::new(py);
    dict.set_item("shellable", out.is_shellable())?;
    dict.set_item("trace", trace)?;
    dict.set_item("residual", out.residual)?;
    Ok(dict)
}

#[pyfunction]
fn complete_distances(
    tree: &Tree,
    cover: &Cover,
    partial: HashMap<(String, String), f64>,
) -> PyResult<HashMap<(String, String), f64>> {
    let full = tripcover::complete_distances(&tree.inner, &cover.inner, &from_dict(partial)?).map_err(err)?;
    Ok(to_dict(&full))
}

#[pyfunction]
#[pyo3(signature = (distances, tolerance=DEFAULT_TOLERANCE))]
fn reconstruct_tree(distances: HashMap<(String, String), f64>, tolerance: f64) -> PyResult<Tree> {
    let inner = tripcover::reconstruct_tree(&from_dict(distances)?, tolerance).map_err(err)?;
    Ok(Tree { inner })
}

#[pyfunction]
#[pyo3(signature = (tree, max_n=DEFAULT_MAX_LEAVES))]
fn count_minimum_covers(tree: &Tree, max_n: usize) -> PyResult<u64> {
    count_minimum_covers_up_to(&tree.inner, max_n).map_err(err)
}

/// Exhaustive theorem check; returns the headline numbers of the report.
#[pyfunction]
#[pyo3(signature = (tree, max_n=DEFAULT_MAX_LEAVES))]
fn verify_theorems<'py>(py: Python<'py>, tree: &Tree, max_n: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = verify_theorems_up_to(&tree.inner, max_n).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("tree", &r.tree)?;
    dict.set_item("n", r.n)?;
    dict.set_item("sweep", &r.sweep)?;
    dict.set_item("subsets_examined", r.subsets_examined)?;
    dict.set_item("covers_found", r.covers_found)?;
    dict.set_item("minimum_covers", r.minimum_covers)?;
    dict.set_item("min_cover_size", r.min_cover_size)?;
    dict.set_item("violations", r.violations)?;
    let props: Vec<String> = r.counterexamples.iter().map(|c| c.property.clone()).collect();
    dict.set_item("counterexample_properties", props)?;
    Ok(dict)
}

#[pymodule]
fn tripcover_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TripcoverError", m.py().get_type::<TripcoverError>())?;
    m.add_class::<Tree>()?;
    m.add_class::<Cover>()?;
    m.add_function(wrap_pyfunction!(is_triplet_cover, m)?)?;
    m.add_function(wrap_pyfunction!(is_minimal, m)?)?;
    m.add_function(wrap_pyfunction!(is_minimum, m)?)?;
    m.add_function(wrap_pyfunction!(minimum_cover, m)?)?;
    m.add_function(wrap_pyfunction!(per_vertex_cover, m)?)?;
    m.add_function(wrap_pyfunction!(minimalize, m)?)?;
    m.add_function(wrap_pyfunction!(shell, m)?)?;
    m.add_function(wrap_pyfunction!(complete_distances, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct_tree, m)?)?;
    m.add_function(wrap_pyfunction!(count_minimum_covers, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorems, m)?)?;
    Ok(())
}
