//! Python bindings. Build with `maturin develop` from this directory, then
//! `import convexica_py`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use convexica::colattice::{co_lattice, is_completely_si};
use convexica::corpus::{corpus, run_corpus as run_corpus_entries};
use convexica::experiment::{run_growth as run_growth_report, Reconstruction};
use convexica::lattice::{
    from_colattice, lattice_from_join_presentation, FinLattice as CoreLattice, Presentation,
};
use convexica::poset::Poset as CorePoset;
use convexica::terms::{
    build_identity, check_identity_with, CheckOptions, Identity, IdentityKind, DEFAULT_BUDGET,
};
use convexica::variety::{
    decide_sub as core_decide_sub, decide_sub2 as core_decide_sub2,
    decide_subn as core_decide_subn, gamma_embedding_with, DecideOptions,
    MembershipReport as CoreReport, Method, Preconditions, Witness,
};

fn py_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json<T: serde::Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(py_err)
}

/// A finite poset, at most 64 elements.
#[pyclass(name = "Poset", module = "convexica_py", frozen)]
struct Poset {
    inner: CorePoset,
}

#[pymethods]
impl Poset {
    /// Parses the `elements: ...` / `covers: x<y ...` text format.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        CorePoset::parse(text)
            .map(|inner| Poset { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn from_covers(labels: Vec<String>, covers: Vec<(String, String)>) -> PyResult<Self> {
        convexica::poset::poset_from_covers(&labels, &covers)
            .map(|inner| Poset { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn chain(m: usize) -> PyResult<Self> {
        convexica::poset::chain(m)
            .map(|inner| Poset { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn pij(i: usize, j: usize) -> PyResult<Self> {
        convexica::poset::pij(i, j)
            .map(|inner| Poset { inner })
            .map_err(py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Poset({:?})", self.inner.labels())
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn covers(&self) -> Vec<(String, String)> {
        let p = &self.inner;
        p.covers()
            .into_iter()
            .map(|(x, y)| (p.label(x).to_string(), p.label(y).to_string()))
            .collect()
    }

    fn length(&self) -> PyResult<usize> {
        self.inner.length().map_err(py_err)
    }

    fn is_tree_like(&self) -> bool {
        self.inner.is_tree_like()
    }

    /// `(holds, witness sets)`: the least nonempty D-closed set, or two minimal ones.
    fn is_completely_si(&self) -> PyResult<(bool, Vec<String>)> {
        let v = is_completely_si(&self.inner).map_err(py_err)?;
        let sets = v
            .witness
            .iter()
            .map(|s| self.inner.set_name(s.members))
            .collect();
        Ok((v.holds, sets))
    }

    fn is_isomorphic(&self, other: &Poset) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }

    /// The lattice of order-convex subsets, elements labelled `{x,y}`.
    fn co_lattice(&self) -> PyResult<Lattice> {
        let co = co_lattice(&self.inner).map_err(py_err)?;
        Ok(Lattice {
            inner: from_colattice(&co),
        })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }
}

/// A finite lattice given by its join and meet tables.
#[pyclass(name = "Lattice", module = "convexica_py", frozen)]
struct Lattice {
    inner: CoreLattice,
}

impl Lattice {
    fn el(&self, label: &str) -> PyResult<usize> {
        self.inner.element(label).map_err(py_err)
    }

    fn names(&self, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
        xs.into_iter()
            .map(|x| self.inner.label(x).to_string())
            .collect()
    }
}

#[pymethods]
impl Lattice {
    /// Parses the `elements:` / `leq:` or `jointable:` / `meettable:` text format.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        CoreLattice::parse(text)
            .map(|inner| Lattice { inner })
            .map_err(py_err)
    }

    /// The lattice of a finite join-presentation (`generators:` / `rel: a <= b|c`).
    #[staticmethod]
    fn from_presentation(text: &str) -> PyResult<Self> {
        let pres = Presentation::parse(text).map_err(py_err)?;
        lattice_from_join_presentation(&pres)
            .map(|inner| Lattice { inner })
            .map_err(py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Lattice(<{} elements>)", self.inner.len())
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn join(&self, a: &str, b: &str) -> PyResult<String> {
        Ok(self
            .inner
            .label(self.inner.join(self.el(a)?, self.el(b)?))
            .to_string())
    }

    fn meet(&self, a: &str, b: &str) -> PyResult<String> {
        Ok(self
            .inner
            .label(self.inner.meet(self.el(a)?, self.el(b)?))
            .to_string())
    }

    fn leq(&self, a: &str, b: &str) -> PyResult<bool> {
        Ok(self.inner.leq(self.el(a)?, self.el(b)?))
    }

    fn join_irreducibles(&self) -> Vec<String> {
        self.names(self.inner.join_irreducibles())
    }

    fn d_related(&self, p: &str, q: &str) -> PyResult<bool> {
        Ok(self.inner.d_related(self.el(p)?, self.el(q)?))
    }

    fn d_relation(&self) -> Vec<(String, String)> {
        self.inner
            .d_relation()
            .into_iter()
            .map(|(p, q)| {
                (
                    self.inner.label(p).to_string(),
                    self.inner.label(q).to_string(),
                )
            })
            .collect()
    }

    fn d_cycles(&self) -> Vec<Vec<String>> {
        self.inner
            .d_cycles()
            .into_iter()
            .map(|c| self.names(c))
            .collect()
    }

    fn is_subdirectly_irreducible(&self) -> PyResult<bool> {
        Ok(self
            .inner
            .is_subdirectly_irreducible()
            .map_err(py_err)?
            .holds)
    }

    fn is_distributive(&self) -> bool {
        self.inner.is_distributive()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }
}

/// Outcome of a variety-membership decision.
#[pyclass(name = "MembershipReport", module = "convexica_py", frozen)]
struct MembershipReport {
    inner: CoreReport,
}

#[pymethods]
impl MembershipReport {
    #[getter]
    fn member(&self) -> bool {
        self.inner.member
    }

    #[getter]
    fn variety(&self) -> String {
        self.inner.variety.to_string()
    }

    #[getter]
    fn method(&self) -> String {
        self.inner.method.to_string()
    }

    /// The rendered witness for a non-member.
    #[getter]
    fn witness(&self) -> Option<String> {
        self.inner.witness.as_ref().map(Witness::to_string)
    }

    /// Re-checks the witness against the embedded lattice.
    fn revalidate(&self) -> PyResult<bool> {
        self.inner.revalidate().map_err(py_err)
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        let verdict = if self.inner.member {
            "member"
        } else {
            "non-member"
        };
        format!(
            "MembershipReport({} {verdict}, {})",
            self.inner.variety, self.inner.method
        )
    }
}

fn options(method: &str, budget: Option<u128>) -> PyResult<DecideOptions> {
    Ok(DecideOptions {
        method: method.parse::<Method>().map_err(py_err)?,
        preconditions: Preconditions::Verify,
        budget: budget.unwrap_or(DEFAULT_BUDGET),
    })
}

/// Membership in SUB, by checking (S), (U), (B).
#[pyfunction]
#[pyo3(signature = (lattice, budget=None))]
fn decide_sub(
    py: Python<'_>,
    lattice: &Lattice,
    budget: Option<u128>,
) -> PyResult<MembershipReport> {
    let l = &lattice.inner;
    let inner = py
        .detach(|| core_decide_sub(l, budget.unwrap_or(DEFAULT_BUDGET)))
        .map_err(py_err)?;
    Ok(MembershipReport { inner })
}

#[pyfunction]
#[pyo3(signature = (lattice, method="structural", budget=None))]
fn decide_sub2(
    py: Python<'_>,
    lattice: &Lattice,
    method: &str,
    budget: Option<u128>,
) -> PyResult<MembershipReport> {
    let opts = options(method, budget)?;
    let l = &lattice.inner;
    let inner = py.detach(|| core_decide_sub2(l, &opts)).map_err(py_err)?;
    Ok(MembershipReport { inner })
}

#[pyfunction]
#[pyo3(signature = (lattice, n, method="structural", budget=None))]
fn decide_subn(
    py: Python<'_>,
    lattice: &Lattice,
    n: usize,
    method: &str,
    budget: Option<u128>,
) -> PyResult<MembershipReport> {
    let opts = options(method, budget)?;
    let l = &lattice.inner;
    let inner = py
        .detach(|| core_decide_subn(l, n, &opts))
        .map_err(py_err)?;
    Ok(MembershipReport { inner })
}

/// Checks an identity by exhaustive evaluation.
///
/// `identity` is a name (`S`, `U`, `B`, `L2`, `D2D`, `H:n`, `Hmn:m,n`) or an
/// identity in text format. Returns `(holds, witness)`.
#[pyfunction]
#[pyo3(signature = (lattice, identity, budget=None))]
fn check_identity(
    py: Python<'_>,
    lattice: &Lattice,
    identity: &str,
    budget: Option<u128>,
) -> PyResult<(bool, Option<String>)> {
    let id = match identity.parse::<IdentityKind>() {
        Ok(kind) => build_identity(kind),
        Err(_) => Identity::parse(identity),
    }
    .map_err(py_err)?;
    let l = &lattice.inner;
    let opts = CheckOptions {
        budget: budget.unwrap_or(DEFAULT_BUDGET),
        prune: true,
    };
    let v = py
        .detach(|| check_identity_with(l, &id, &opts))
        .map_err(py_err)?;
    let witness = v
        .witness
        .map(|w| Witness::from_counterexample(l, &id, &w).to_string());
    Ok((v.holds, witness))
}

type GammaParts = (Poset, Vec<(String, String)>, Vec<(String, Option<bool>)>);

/// The embedding of a SUB2 member into `Co(Gamma)`.
///
/// Returns `(gamma, phi, flags)`: the poset, the image of each lattice element
/// and the verified properties.
#[pyfunction]
#[pyo3(signature = (lattice, assume_preconditions=false))]
fn gamma_embedding(lattice: &Lattice, assume_preconditions: bool) -> PyResult<GammaParts> {
    let pre = if assume_preconditions {
        Preconditions::Assume
    } else {
        Preconditions::Verify
    };
    let g = gamma_embedding_with(&lattice.inner, pre).map_err(py_err)?;
    let report = g.report();
    let f = g.flags;
    let flags = vec![
        ("is_embedding".to_string(), Some(f.is_embedding)),
        ("bounds_preserved".to_string(), Some(f.bounds_preserved)),
        ("length_le_2".to_string(), Some(f.length_le_2)),
        ("tree_like".to_string(), Some(f.tree_like)),
        ("atom_preserving".to_string(), f.atom_preserving),
    ];
    Ok((Poset { inner: g.gamma }, report.phi, flags))
}

/// Re-derives the built-in corpus facts. Returns `(entry, fact, passed)` triples.
#[pyfunction]
#[pyo3(signature = (filter=None))]
fn run_corpus(py: Python<'_>, filter: Option<&str>) -> Vec<(String, String, bool)> {
    py.detach(|| run_corpus_entries(&corpus(), filter))
        .results
        .into_iter()
        .map(|r| (r.entry, r.fact, r.pass))
        .collect()
}

/// The growth experiment as a JSON report, for the shipped candidate or a template text.
#[pyfunction]
#[pyo3(signature = (k_max=4, template=None))]
fn run_growth(py: Python<'_>, k_max: usize, template: Option<&str>) -> PyResult<String> {
    let rec = match template {
        Some(t) => Reconstruction::parse(t).map_err(py_err)?,
        None => Reconstruction::candidate(),
    };
    let report = py
        .detach(|| run_growth_report(&rec, k_max))
        .map_err(py_err)?;
    to_json(&report)
}

#[pymodule]
fn convexica_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poset>()?;
    m.add_class::<Lattice>()?;
    m.add_class::<MembershipReport>()?;
    m.add_function(wrap_pyfunction!(decide_sub, m)?)?;
    m.add_function(wrap_pyfunction!(decide_sub2, m)?)?;
    m.add_function(wrap_pyfunction!(decide_subn, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_embedding, m)?)?;
    m.add_function(wrap_pyfunction!(run_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(run_growth, m)?)?;
    Ok(())
}
