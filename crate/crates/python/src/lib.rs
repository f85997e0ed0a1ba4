//! Python bindings. Weights cross the boundary as lists of ints; weights on the
//! `h` side are in h-units, i.e. multiplied by `Embedding.scale`.

use gkrs_core::chars::{freudenthal_character, tensor_decompose, weyl_dimension};
use gkrs_core::embed::{build_embedding, restrict_character, spin_module};
use gkrs_core::gkrs::{dirac_induce, euler_restriction, gkrs_multiplet, verify_adjointness};
use gkrs_core::rootdata::build_root_system;
use gkrs_core::superring::{classify_clifford, CliffordKind};
use gkrs_core::{Error, VirtualDecomposition, Weight, WeightMultiset};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

type Coords = Vec<i64>;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coords(w: &Weight) -> Coords {
    w.coords().to_vec()
}

/// `{weight tuple: multiplicity}`; lists are unhashable so keys become tuples.
fn weight_dict<'py, 'a>(
    py: Python<'py>,
    entries: impl Iterator<Item = (&'a Weight, i64)>,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    for (w, k) in entries {
        dict.set_item(PyTuple::new(py, w.coords())?, k)?;
    }
    Ok(dict)
}

fn multiset<'py>(py: Python<'py>, m: &WeightMultiset) -> PyResult<Bound<'py, PyDict>> {
    weight_dict(py, m.iter())
}

fn decomposition<'py>(py: Python<'py>, d: &VirtualDecomposition) -> PyResult<Bound<'py, PyDict>> {
    weight_dict(py, d.iter())
}

#[pyclass(frozen, name = "RootSystem", module = "gkrs")]
struct PyRootSystem {
    inner: gkrs_core::RootSystem,
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(label: &str) -> PyResult<Self> {
        Ok(PyRootSystem {
            inner: build_root_system(label).map_err(err)?,
        })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn cartan(&self) -> Vec<Vec<i64>> {
        self.inner.cartan().to_vec()
    }

    #[getter]
    fn positive_roots(&self) -> Vec<Coords> {
        self.inner.positive_roots().iter().map(coords).collect()
    }

    #[getter]
    fn rho(&self) -> Coords {
        coords(self.inner.rho())
    }

    fn weyl_order(&self) -> PyResult<usize> {
        self.inner.weyl_order().map_err(err)
    }

    /// Weight multiplicities of the irreducible with highest weight `lam`.
    fn character<'py>(&self, py: Python<'py>, lam: Coords) -> PyResult<Bound<'py, PyDict>> {
        freudenthal_character(self.inner.chamber(), &Weight::new(lam))
            .map_err(err)
            .and_then(|m| multiset(py, &m))
    }

    fn dimension(&self, lam: Coords) -> PyResult<i64> {
        weyl_dimension(self.inner.chamber(), &Weight::new(lam)).map_err(err)
    }

    fn tensor<'py>(
        &self,
        py: Python<'py>,
        lam: Coords,
        mu: Coords,
    ) -> PyResult<Bound<'py, PyDict>> {
        tensor_decompose(self.inner.chamber(), &Weight::new(lam), &Weight::new(mu))
            .map_err(err)
            .and_then(|d| decomposition(py, &d))
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.label())
    }
}

#[pyclass(frozen, name = "Embedding", module = "gkrs")]
struct PyEmbedding {
    inner: gkrs_core::Embedding,
}

#[pymethods]
impl PyEmbedding {
    /// `h_roots` are simple roots of `h` in fundamental-weight coordinates of `g`;
    /// an empty list gives the maximal torus.
    #[new]
    fn new(g: &str, h_roots: Vec<Coords>) -> PyResult<Self> {
        let rs = build_root_system(g).map_err(err)?;
        let roots: Vec<Weight> = h_roots.into_iter().map(Weight::new).collect();
        Ok(PyEmbedding {
            inner: build_embedding(&rs, &roots).map_err(err)?,
        })
    }

    #[getter]
    fn scale(&self) -> i64 {
        self.inner.scale()
    }

    #[getter]
    fn rho_h(&self) -> Coords {
        coords(self.inner.rho_h())
    }

    #[getter]
    fn complement_roots(&self) -> Vec<Coords> {
        self.inner.complement_roots().iter().map(coords).collect()
    }

    fn is_torus(&self) -> bool {
        self.inner.is_torus()
    }

    /// Human-readable form of an h-unit weight, e.g. `(1,-1/2)`.
    fn display_h(&self, w: Coords) -> String {
        self.inner.display_h(&Weight::new(w))
    }

    /// `(S0, S1)` weight multisets of the spinor module.
    fn spin_module<'py>(
        &self,
        py: Python<'py>,
    ) -> PyResult<(Bound<'py, PyDict>, Bound<'py, PyDict>)> {
        let s = spin_module(&self.inner);
        Ok((multiset(py, &s.s0)?, multiset(py, &s.s1)?))
    }

    fn restrict<'py>(&self, py: Python<'py>, lam: Coords) -> PyResult<Bound<'py, PyDict>> {
        restrict_character(&self.inner, &Weight::new(lam))
            .map_err(err)
            .and_then(|m| multiset(py, &m))
    }

    /// List of `(sign, h-weight)` pairs.
    fn multiplet(&self, lam: Coords) -> PyResult<Vec<(i8, Coords)>> {
        let m = gkrs_multiplet(&self.inner, &Weight::new(lam)).map_err(err)?;
        Ok(m.members.iter().map(|(s, w)| (*s, coords(w))).collect())
    }

    fn euler_restriction<'py>(&self, py: Python<'py>, lam: Coords) -> PyResult<Bound<'py, PyDict>> {
        euler_restriction(&self.inner, &Weight::new(lam))
            .map_err(err)
            .and_then(|d| decomposition(py, &d))
    }

    /// `(sign, g-weight)` or `None` when the result vanishes.
    fn dirac(&self, mu: Coords) -> PyResult<Option<(i8, Coords)>> {
        dirac_induce(&self.inner, &Weight::new(mu))
            .map(|r| r.map(|(s, w)| (s, coords(&w))))
            .map_err(err)
    }

    /// Both sides of the induction/restriction adjunction for `(mu, lam)`.
    fn adjointness(&self, mu: Coords, lam: Coords) -> PyResult<(i64, i64)> {
        verify_adjointness(&self.inner, &Weight::new(mu), &Weight::new(lam)).map_err(err)
    }

    fn __repr__(&self) -> String {
        let roots: Vec<Coords> = self.inner.h_simple_roots().iter().map(coords).collect();
        format!("Embedding('{}', {:?})", self.inner.ambient().label(), roots)
    }
}

/// `("M" | "Q", rank of SR(Cl(n)))`.
#[pyfunction]
fn clifford_type(n: usize) -> PyResult<(&'static str, usize)> {
    let c = classify_clifford(n).map_err(err)?;
    let kind = match c.kind {
        CliffordKind::MPair => "M",
        CliffordKind::Q => "Q",
    };
    Ok((kind, c.rank_of_sr))
}

#[pymodule]
fn gkrs(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<PyEmbedding>()?;
    m.add_function(wrap_pyfunction!(clifford_type, m)?)?;
    Ok(())
}
