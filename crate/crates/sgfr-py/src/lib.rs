//! Python bindings: a `Semigroup` class over the core library plus the
//! family constructors and the bound-table renderers. Spec strings accept
//! the same grammar as the CLI ("4,6,9", "hermitian:q=2,r=3",
//! "2*(2,3)+9*(1)", nested gluings included).

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sgfr::bounds;
use sgfr::cli::{parse_spec, SpecError};
use sgfr::error::Error;
use sgfr::semigroup::{make_semigroup, NumericalSemigroup};

fn domain_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn spec_err(e: SpecError) -> PyErr {
    match e {
        SpecError::Syntax(msg) => PyValueError::new_err(msg),
        SpecError::Domain(err) => domain_err(err),
    }
}

/// A numerical semigroup: a cofinite subset of the naturals containing 0 and
/// closed under addition, held by its minimal generating set.
#[pyclass(frozen)]
struct Semigroup {
    inner: NumericalSemigroup,
}

impl Semigroup {
    fn wrap(inner: NumericalSemigroup) -> Self {
        Semigroup { inner }
    }
}

#[pymethods]
impl Semigroup {
    #[new]
    fn new(generators: Vec<i64>) -> PyResult<Self> {
        make_semigroup(&generators).map(Self::wrap).map_err(domain_err)
    }

    /// Builds from a spec string: "4,6,9", "hermitian:q=2,r=3",
    /// "suzuki:p=2,n=1", "suzuki-gamma1:p=2,n=1", or a gluing expression
    /// such as "2*(2*(2,3)+5*(1))+13*(1)".
    #[staticmethod]
    fn from_spec(text: &str) -> PyResult<Self> {
        parse_spec(text)
            .map(|p| Self::wrap(p.semigroup().clone()))
            .map_err(spec_err)
    }

    #[staticmethod]
    fn hermitian(q: i64, r: i64) -> PyResult<Self> {
        sgfr::families::hermitian(q, r)
            .map(|f| Self::wrap(f.expanded))
            .map_err(domain_err)
    }

    #[staticmethod]
    fn suzuki(p: i64, n: i64) -> PyResult<Self> {
        sgfr::families::suzuki(p, n)
            .map(|f| Self::wrap(f.expanded))
            .map_err(domain_err)
    }

    #[staticmethod]
    fn suzuki_gamma1(p: i64, n: i64) -> PyResult<Self> {
        sgfr::families::suzuki_gamma1(p, n)
            .map(|f| Self::wrap(f.expanded))
            .map_err(domain_err)
    }

    fn generators(&self) -> Vec<i64> {
        self.inner.generators().to_vec()
    }

    fn embedding_dimension(&self) -> usize {
        self.inner.embedding_dimension()
    }

    fn multiplicity(&self) -> i64 {
        self.inner.multiplicity()
    }

    fn frobenius(&self) -> i64 {
        self.inner.frobenius()
    }

    fn conductor(&self) -> i64 {
        self.inner.conductor()
    }

    fn genus(&self) -> i64 {
        self.inner.genus()
    }

    fn contains(&self, z: i64) -> bool {
        self.inner.contains(z)
    }

    /// ρ_r, the r-th smallest member (ρ₁ = 0, ρ₂ = m).
    fn rho(&self, r: i64) -> PyResult<i64> {
        if r < 1 {
            return Err(PyValueError::new_err("rho takes r >= 1"));
        }
        Ok(self.inner.rho(r))
    }

    /// Ap(Γ, x) = {a in Γ : a − x not in Γ}, ascending, for any integer x.
    fn apery(&self, x: i64) -> Vec<i64> {
        sgfr::apery::apery(&self.inner, x).elements().to_vec()
    }

    fn apery_size(&self, x: i64) -> i64 {
        sgfr::apery::apery_size(&self.inner, x)
    }

    /// D(z) = {s in Γ : z − s in Γ}, ascending.
    fn divisors(&self, z: i64) -> Vec<i64> {
        sgfr::apery::divisors(&self.inner, z).elements().to_vec()
    }

    fn divisor_count(&self, z: i64) -> i64 {
        sgfr::apery::divisor_count(&self.inner, z)
    }

    fn feng_rao_distance(&self, a: i64) -> i64 {
        sgfr::fengrao::feng_rao_distance(&self.inner, a)
    }

    fn generalized_feng_rao_distance(&self, a: i64, r: usize) -> PyResult<i64> {
        sgfr::fengrao::generalized_feng_rao_distance(&self.inner, a, r).map_err(domain_err)
    }

    fn second_feng_rao_number(&self) -> PyResult<i64> {
        sgfr::fengrao::second_feng_rao_number(&self.inner).map_err(domain_err)
    }

    fn feng_rao_number(&self, r: usize) -> PyResult<i64> {
        sgfr::fengrao::feng_rao_number(&self.inner, r).map_err(domain_err)
    }

    fn is_free(&self) -> bool {
        sgfr::fengrao::is_free(&self.inner)
    }

    fn is_telescopic(&self) -> bool {
        sgfr::fengrao::is_telescopic(&self.inner)
    }

    /// Bound-table rows for a in [a_from, a_to] over a field of size q,
    /// as a list of dicts (keys a, kp, gob, e2_bound, exact, exact_certified).
    fn bounds_table(&self, py: Python<'_>, q: i64, a_from: i64, a_to: i64) -> PyResult<Py<PyAny>> {
        let rows = bounds::bounds_table(&self.inner, a_from, a_to, q).map_err(domain_err)?;
        let out = pyo3::types::PyList::empty(py);
        for row in &rows {
            let d = pyo3::types::PyDict::new(py);
            d.set_item("a", row.a)?;
            d.set_item("kp", row.kp)?;
            d.set_item("gob", row.gob)?;
            d.set_item("e2_bound", row.e2_bound)?;
            d.set_item("exact", row.exact)?;
            d.set_item("exact_certified", row.exact_certified)?;
            out.append(d)?;
        }
        Ok(out.into_any().unbind())
    }

    /// The same table rendered as markdown; `paper_layout` transposes to one
    /// row per bound.
    #[pyo3(signature = (q, a_from, a_to, paper_layout = false))]
    fn bounds_markdown(&self, q: i64, a_from: i64, a_to: i64, paper_layout: bool) -> PyResult<String> {
        let rows = bounds::bounds_table(&self.inner, a_from, a_to, q).map_err(domain_err)?;
        Ok(bounds::to_markdown(&rows, paper_layout))
    }

    fn __contains__(&self, z: i64) -> bool {
        self.inner.contains(z)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.generators().hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Semigroup(\"{}\")", self.inner)
    }
}

/// Every telescopic numerical semigroup with genus in [1, max_genus].
#[pyfunction]
fn telescopic_up_to_genus(max_genus: i64) -> Vec<Semigroup> {
    sgfr::fengrao::telescopic_up_to_genus(max_genus)
        .into_iter()
        .map(Semigroup::wrap)
        .collect()
}

#[pymodule]
fn sgfr_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Semigroup>()?;
    m.add_function(wrap_pyfunction!(telescopic_up_to_genus, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
