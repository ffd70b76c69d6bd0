//! Python module `ncl`: partitions, trees, transforms and verification from
//! `ncl-core`. Rationals cross the boundary as `fractions.Fraction`; inputs
//! may be ints, Fractions or `"p/q"` strings.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use ncl_core::partitions::{self as parts, NcPartition as CoreNc, NclPartition as CoreNcl};
use ncl_core::rational::{self, Rational};
use ncl_core::render;
use ncl_core::transforms::{self, CumulantSequence, MomentSequence, TCoeffSequence};
use ncl_core::trees::{self, BicolorPlanarTree as CoreBicolor, PlanarTree as CoreTree};
use ncl_core::verify::{self, Suite, VerifyConfig};
use ncl_core::Error;

create_exception!(ncl, NclError, PyValueError);
create_exception!(ncl, LimitExceeded, NclError);
create_exception!(ncl, ZeroFirstMoment, NclError);
create_exception!(ncl, DomainError, NclError);

fn err(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::LimitExceeded { .. } => LimitExceeded::new_err(msg),
        Error::ZeroFirstMoment | Error::ZeroT0 => ZeroFirstMoment::new_err(msg),
        Error::NotConnected | Error::NotNclS { .. } | Error::LetterNotInDomain { .. } => {
            DomainError::new_err(msg)
        }
        _ => NclError::new_err(msg),
    }
}

fn json_err(e: serde_json::Error) -> PyErr {
    NclError::new_err(e.to_string())
}

fn to_rational(v: &Bound<'_, PyAny>) -> PyResult<Rational> {
    rational::parse(&v.str()?.to_cow()?).map_err(err)
}

fn to_rationals(values: &Bound<'_, PyAny>) -> PyResult<Vec<Rational>> {
    values.try_iter()?.map(|v| to_rational(&v?)).collect()
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((rational::format(r),))
}

fn fractions<'py>(py: Python<'py>, values: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = values
        .iter()
        .map(|r| fraction(py, r))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn from_json<'py>(py: Python<'py>, s: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.getattr("loads")?.call1((s,))
}

/// A non-crossing partition of `{1..n}`.
#[pyclass(
    name = "NcPartition",
    module = "ncl",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyNc(CoreNc);

#[pymethods]
impl PyNc {
    #[new]
    fn new(n: usize, blocks: Vec<Vec<usize>>) -> PyResult<Self> {
        parts::validate_nc(n, &blocks).map(PyNc).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<usize>> {
        self.0.to_raw().blocks
    }

    fn kreweras(&self) -> PyNc {
        PyNc(parts::kreweras(&self.0))
    }

    fn is_ncs(&self) -> PyResult<bool> {
        parts::is_ncs(&self.0).map_err(err)
    }

    fn to_ncl(&self) -> PyNcl {
        PyNcl(self.0.to_ncl())
    }

    fn render(&self) -> String {
        render::render_nc(&self.0)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(json_err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(PyNc).map_err(json_err)
    }

    fn __repr__(&self) -> String {
        format!("NcPartition({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A non-crossing linked partition of `{1..n}`.
#[pyclass(
    name = "NclPartition",
    module = "ncl",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyNcl(CoreNcl);

#[pymethods]
impl PyNcl {
    #[new]
    fn new(n: usize, blocks: Vec<Vec<usize>>) -> PyResult<Self> {
        parts::validate_ncl(n, &blocks).map(PyNcl).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<usize>> {
        self.0.to_raw().blocks
    }

    fn connected_components(&self) -> PyNc {
        PyNc(self.0.connected_components())
    }

    fn exterior_blocks(&self) -> Vec<Vec<usize>> {
        self.0
            .exterior_blocks()
            .iter()
            .map(|b| b.elements().to_vec())
            .collect()
    }

    fn non_minimal_elements(&self) -> Vec<usize> {
        self.0.non_minimal_elements().into_iter().collect()
    }

    fn restrict(&self, elements: Vec<usize>) -> PyResult<PyNcl> {
        self.0.restrict(&elements).map(PyNcl).map_err(err)
    }

    fn leq(&self, other: &PyNcl) -> PyResult<bool> {
        parts::leq(&self.0, &other.0).map_err(err)
    }

    fn render(&self) -> String {
        render::render_ncl(&self.0)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(json_err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(PyNcl).map_err(json_err)
    }

    fn __repr__(&self) -> String {
        format!("NclPartition({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A rooted planar tree.
#[pyclass(
    name = "PlanarTree",
    module = "ncl",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTree(CoreTree);

#[pymethods]
impl PyTree {
    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn render(&self) -> String {
        render::render_tree(&self.0)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(json_err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(PyTree).map_err(json_err)
    }

    fn __repr__(&self) -> PyResult<String> {
        Ok(format!("PlanarTree({})", self.to_json()?))
    }
}

/// A planar tree whose edges are colored 1 (solid) or 0 (dashed).
#[pyclass(
    name = "BicolorPlanarTree",
    module = "ncl",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyBicolor(CoreBicolor);

#[pymethods]
impl PyBicolor {
    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn render(&self) -> String {
        render::render_bicolor(&self.0)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(json_err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(PyBicolor).map_err(json_err)
    }

    fn __repr__(&self) -> PyResult<String> {
        Ok(format!("BicolorPlanarTree({})", self.to_json()?))
    }
}

#[pyfunction]
fn enumerate_nc(n: usize) -> PyResult<Vec<PyNc>> {
    Ok(parts::enumerate_nc(n)
        .map_err(err)?
        .into_iter()
        .map(PyNc)
        .collect())
}

#[pyfunction]
fn enumerate_ncl(n: usize) -> PyResult<Vec<PyNcl>> {
    Ok(parts::enumerate_ncl(n)
        .map_err(err)?
        .into_iter()
        .map(PyNcl)
        .collect())
}

/// `NC_S(2n)`.
#[pyfunction]
fn enumerate_ncs(n: usize) -> PyResult<Vec<PyNc>> {
    Ok(parts::enumerate_ncs(n)
        .map_err(err)?
        .into_iter()
        .map(PyNc)
        .collect())
}

/// `NCL_S(2n)`.
#[pyfunction]
fn enumerate_ncls(n: usize) -> PyResult<Vec<PyNcl>> {
    Ok(parts::enumerate_ncls(n)
        .map_err(err)?
        .into_iter()
        .map(PyNcl)
        .collect())
}

#[pyfunction]
fn enumerate_planar_trees(n: usize) -> PyResult<Vec<PyTree>> {
    Ok(trees::enumerate_planar_trees(n)
        .map_err(err)?
        .into_iter()
        .map(PyTree)
        .collect())
}

#[pyfunction]
fn enumerate_bicolor(n: usize) -> PyResult<Vec<PyBicolor>> {
    Ok(trees::enumerate_bicolor(n)
        .map_err(err)?
        .into_iter()
        .map(PyBicolor)
        .collect())
}

#[pyfunction]
fn theta(p: &PyNcl) -> PyResult<PyTree> {
    trees::theta(&p.0).map(PyTree).map_err(err)
}

#[pyfunction]
fn theta_inv(t: &PyTree) -> PyNcl {
    PyNcl(trees::theta_inv(&t.0))
}

#[pyfunction]
fn lambda_(p: &PyNcl) -> PyResult<PyBicolor> {
    trees::lambda(&p.0).map(PyBicolor).map_err(err)
}

#[pyfunction]
fn lambda_inv(t: &PyBicolor) -> PyNcl {
    PyNcl(trees::lambda_inv(&t.0))
}

#[pyfunction]
fn moments_to_cumulants<'py>(
    py: Python<'py>,
    m: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyList>> {
    let k = transforms::moments_to_cumulants(&MomentSequence::new(to_rationals(m)?));
    fractions(py, k.values())
}

#[pyfunction]
fn cumulants_to_moments<'py>(
    py: Python<'py>,
    k: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyList>> {
    let m = transforms::cumulants_to_moments(&CumulantSequence::new(to_rationals(k)?));
    fractions(py, m.values())
}

#[pyfunction]
fn moments_to_tcoeffs<'py>(py: Python<'py>, m: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyList>> {
    let t = transforms::moments_to_tcoeffs(&MomentSequence::new(to_rationals(m)?)).map_err(err)?;
    fractions(py, t.values())
}

#[pyfunction]
fn tcoeffs_to_moments<'py>(py: Python<'py>, t: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyList>> {
    let m = transforms::tcoeffs_to_moments(&TCoeffSequence::new(to_rationals(t)?)).map_err(err)?;
    fractions(py, m.values())
}

#[pyfunction]
fn t_convolve<'py>(
    py: Python<'py>,
    x: &Bound<'py, PyAny>,
    y: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyList>> {
    let t = transforms::t_convolve(
        &TCoeffSequence::new(to_rationals(x)?),
        &TCoeffSequence::new(to_rationals(y)?),
    )
    .map_err(err)?;
    fractions(py, t.values())
}

/// `kappa_1..kappa_order` of `XY` for free `X, Y` given their cumulants.
#[pyfunction]
fn free_multiplicative<'py>(
    py: Python<'py>,
    x: &Bound<'py, PyAny>,
    y: &Bound<'py, PyAny>,
    order: usize,
) -> PyResult<Bound<'py, PyList>> {
    let (x, y) = (
        CumulantSequence::new(to_rationals(x)?),
        CumulantSequence::new(to_rationals(y)?),
    );
    let k = (1..=order)
        .map(|n| transforms::free_multiplicative(&x, &y, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    fractions(py, &k)
}

/// Both routes to `t(XY)`; returns the report as a dict.
#[pyfunction]
fn verify_t_multiplicativity<'py>(
    py: Python<'py>,
    mx: &Bound<'py, PyAny>,
    my: &Bound<'py, PyAny>,
    order: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let report = transforms::verify_t_multiplicativity(
        &MomentSequence::new(to_rationals(mx)?),
        &MomentSequence::new(to_rationals(my)?),
        order,
    )
    .map_err(err)?;
    from_json(py, &serde_json::to_string(&report).map_err(json_err)?)
}

/// Runs a verification suite (or `"all"`); returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (suite = "all", order = 6, seed = 0, corpus = 12))]
fn run_verification<'py>(
    py: Python<'py>,
    suite: &str,
    order: usize,
    seed: u64,
    corpus: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let suites = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>().map_err(err)?]
    };
    let cfg = VerifyConfig {
        order,
        seed,
        corpus,
        ..VerifyConfig::default()
    };
    let report = py.detach(|| verify::run(&suites, &cfg)).map_err(err)?;
    from_json(py, &serde_json::to_string(&report).map_err(json_err)?)
}

#[pymodule]
fn ncl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("NclError", py.get_type::<NclError>())?;
    m.add("LimitExceeded", py.get_type::<LimitExceeded>())?;
    m.add("ZeroFirstMoment", py.get_type::<ZeroFirstMoment>())?;
    m.add("DomainError", py.get_type::<DomainError>())?;
    m.add_class::<PyNc>()?;
    m.add_class::<PyNcl>()?;
    m.add_class::<PyTree>()?;
    m.add_class::<PyBicolor>()?;
    m.add_function(wrap_pyfunction!(enumerate_nc, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_ncl, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_ncs, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_ncls, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_planar_trees, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_bicolor, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(theta_inv, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_inv, m)?)?;
    m.add_function(wrap_pyfunction!(moments_to_cumulants, m)?)?;
    m.add_function(wrap_pyfunction!(cumulants_to_moments, m)?)?;
    m.add_function(wrap_pyfunction!(moments_to_tcoeffs, m)?)?;
    m.add_function(wrap_pyfunction!(tcoeffs_to_moments, m)?)?;
    m.add_function(wrap_pyfunction!(t_convolve, m)?)?;
    m.add_function(wrap_pyfunction!(free_multiplicative, m)?)?;
    m.add_function(wrap_pyfunction!(verify_t_multiplicativity, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    Ok(())
}
