//! Python bindings: `Scalar`, `Sequence`, `Matrix` plus the factorization,
//! determinant, identity and minor-sequence entry points.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use pascal_toeplitz::determinant::det_cofactor;
use pascal_toeplitz::identities::ParamGrid;
use pascal_toeplitz::matrix::{build_kind, leading_principal, matmul};
use pascal_toeplitz::minors::{self as family, principal_minor_sequence};
use pascal_toeplitz::{
    det_exact, factorize_pascal, toeplitz_to_pascal, verify_identity, Epsilon, ExactMatrix, QuadScalar,
    SequenceSpec, SequenceView,
};

create_exception!(pascal_toeplitz, PascalToeplitzError, PyValueError);

fn err(e: pascal_toeplitz::Error) -> PyErr {
    PascalToeplitzError::new_err(e.to_string())
}

/// An element of Q(i, sqrt D).
#[pyclass(name = "Scalar", module = "pascal_toeplitz", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyScalar(QuadScalar);

#[derive(FromPyObject)]
enum ScalarLike {
    Scalar(PyScalar),
    Int(i64),
    Text(String),
}

impl ScalarLike {
    fn into_scalar(self) -> PyResult<QuadScalar> {
        match self {
            ScalarLike::Scalar(s) => Ok(s.0),
            ScalarLike::Int(n) => Ok(QuadScalar::from_integer(n)),
            ScalarLike::Text(t) => t.parse().map_err(err),
        }
    }
}

#[pymethods]
impl PyScalar {
    #[new]
    fn new(value: ScalarLike) -> PyResult<Self> {
        value.into_scalar().map(PyScalar)
    }

    #[staticmethod]
    fn golden_ratio() -> Self {
        PyScalar(QuadScalar::golden_ratio())
    }

    #[getter]
    fn radicand(&self) -> u64 {
        self.0.radicand()
    }

    /// `(a, b, c, d)` as strings, for `a + b*sqrt(D) + c*i + d*i*sqrt(D)`.
    fn components(&self) -> (String, String, String, String) {
        let s = &self.0;
        (s.a().to_string(), s.b().to_string(), s.c().to_string(), s.d().to_string())
    }

    fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    #[pyo3(signature = (digits = 20))]
    fn to_decimal(&self, digits: usize) -> String {
        self.0.to_decimal_string(digits)
    }

    fn __add__(&self, other: ScalarLike) -> PyResult<Self> {
        self.0.checked_add(&other.into_scalar()?).map(PyScalar).map_err(err)
    }

    fn __radd__(&self, other: ScalarLike) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: ScalarLike) -> PyResult<Self> {
        self.0.checked_sub(&other.into_scalar()?).map(PyScalar).map_err(err)
    }

    fn __rsub__(&self, other: ScalarLike) -> PyResult<Self> {
        other.into_scalar()?.checked_sub(&self.0).map(PyScalar).map_err(err)
    }

    fn __mul__(&self, other: ScalarLike) -> PyResult<Self> {
        self.0.checked_mul(&other.into_scalar()?).map(PyScalar).map_err(err)
    }

    fn __rmul__(&self, other: ScalarLike) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __truediv__(&self, other: ScalarLike) -> PyResult<Self> {
        self.0.checked_div(&other.into_scalar()?).map(PyScalar).map_err(err)
    }

    fn __rtruediv__(&self, other: ScalarLike) -> PyResult<Self> {
        other.into_scalar()?.checked_div(&self.0).map(PyScalar).map_err(err)
    }

    fn __pow__(&self, exp: i64, _modulo: Option<i64>) -> PyResult<Self> {
        self.0.powi(exp).map(PyScalar).map_err(err)
    }

    fn __neg__(&self) -> Self {
        PyScalar(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Scalar('{}')", self.0)
    }
}

/// A lazily evaluated sequence given in the spec mini-language.
#[pyclass(name = "Sequence", module = "pascal_toeplitz", frozen)]
struct PySequence(SequenceView);

fn sequence(spec: SequenceSpec) -> PyResult<PySequence> {
    SequenceView::new(spec).map(PySequence).map_err(err)
}

#[pymethods]
impl PySequence {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        sequence(spec.parse().map_err(err)?)
    }

    fn __getitem__(&self, i: usize) -> PyResult<PyScalar> {
        self.0.eval(i).map(PyScalar).map_err(err)
    }

    fn prefix(&self, n: usize) -> PyResult<Vec<PyScalar>> {
        Ok(self.0.prefix(n).map_err(err)?.into_iter().map(PyScalar).collect())
    }

    fn hat(&self) -> PyResult<Self> {
        sequence(self.0.spec().clone().hat())
    }

    fn check(&self) -> PyResult<Self> {
        sequence(self.0.spec().clone().check())
    }

    fn tilde(&self) -> PyResult<Self> {
        sequence(self.0.spec().clone().tilde())
    }

    fn __str__(&self) -> String {
        self.0.spec().to_string()
    }

    fn __repr__(&self) -> String {
        format!("Sequence('{}')", self.0.spec())
    }
}

/// An exact matrix over Q(i, sqrt D).
#[pyclass(name = "Matrix", module = "pascal_toeplitz", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMatrix(ExactMatrix);

/// A `Sequence` or a spec string.
struct SeqArg(SequenceView);

impl<'a, 'py> FromPyObject<'a, 'py> for SeqArg {
    type Error = PyErr;

    fn extract(ob: Borrowed<'a, 'py, PyAny>) -> PyResult<Self> {
        if let Ok(s) = ob.cast::<PySequence>() {
            return Ok(SeqArg(s.get().0.clone()));
        }
        let text: String = ob.extract()?;
        Ok(SeqArg(SequenceView::new(text.parse().map_err(err)?).map_err(err)?))
    }
}

impl SeqArg {
    fn view(self) -> SequenceView {
        self.0
    }
}

#[pymethods]
impl PyMatrix {
    #[staticmethod]
    fn pascal(alpha: SeqArg, beta: SeqArg, n: usize) -> PyResult<Self> {
        build_kind("pascal", &alpha.view(), &beta.view(), n).map(PyMatrix).map_err(err)
    }

    #[staticmethod]
    fn toeplitz(alpha: SeqArg, beta: SeqArg, n: usize) -> PyResult<Self> {
        build_kind("toeplitz", &alpha.view(), &beta.view(), n).map(PyMatrix).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| PascalToeplitzError::new_err(e.to_string()))?;
        ExactMatrix::from_json(&v).map(PyMatrix).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.0.rows(), self.0.cols())
    }

    #[getter]
    fn provenance(&self) -> &'static str {
        self.0.provenance().as_str()
    }

    fn rows(&self) -> Vec<Vec<PyScalar>> {
        self.0
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(PyScalar).collect())
            .collect()
    }

    fn __getitem__(&self, idx: (usize, usize)) -> PyResult<PyScalar> {
        let (i, j) = idx;
        if i >= self.0.rows() || j >= self.0.cols() {
            return Err(pyo3::exceptions::PyIndexError::new_err("matrix index out of range"));
        }
        Ok(PyScalar(self.0.get(i, j).clone()))
    }

    fn leading(&self, k: usize) -> PyResult<Self> {
        leading_principal(&self.0, k).map(PyMatrix).map_err(err)
    }

    /// `method` is "oracle" or "cofactor".
    #[pyo3(signature = (method = "oracle"))]
    fn det(&self, method: &str) -> PyResult<PyScalar> {
        let value = match method {
            "oracle" => det_exact(&self.0),
            "cofactor" => det_cofactor(&self.0),
            other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
        };
        value.map(PyScalar).map_err(err)
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<Self> {
        matmul(&self.0, &other.0).map(PyMatrix).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Matrix({}x{}, {})", self.0.rows(), self.0.cols(), self.0.provenance().as_str())
    }
}

/// `(L, T, U)` with `L @ T @ U` equal to the source matrix.
#[pyfunction]
#[pyo3(signature = (alpha, beta, n, direction = "pascal-to-toeplitz"))]
fn factorize(alpha: SeqArg, beta: SeqArg, n: usize, direction: &str) -> PyResult<(PyMatrix, PyMatrix, PyMatrix)> {
    let (a, b) = (alpha.view(), beta.view());
    let triple = match direction {
        "pascal-to-toeplitz" => factorize_pascal(&a, &b, n),
        "toeplitz-to-pascal" => toeplitz_to_pascal(&a, &b, n),
        other => return Err(PyValueError::new_err(format!("unknown direction `{other}`"))),
    }
    .map_err(err)?;
    Ok((PyMatrix(triple.l), PyMatrix(triple.t), PyMatrix(triple.u)))
}

#[pyfunction]
fn det(m: &PyMatrix) -> PyResult<PyScalar> {
    det_exact(&m.0).map(PyScalar).map_err(err)
}

/// Checks one registered identity; returns a dict report.
#[pyfunction]
#[pyo3(signature = (id, max_n = None, grid = None))]
fn verify<'py>(py: Python<'py>, id: &str, max_n: Option<usize>, grid: Option<&str>) -> PyResult<Bound<'py, PyDict>> {
    let grid: Option<ParamGrid> = grid.map(str::parse).transpose().map_err(err)?;
    let range = match max_n {
        Some(hi) => {
            let lo = pascal_toeplitz::identities::find_identity(&pascal_toeplitz::register_identities(), id)
                .map_err(err)?
                .n_range
                .start()
                .to_owned();
            Some(lo..=hi)
        }
        None => None,
    };
    let report = verify_identity(id, grid.as_ref(), range).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("id", &report.id)?;
    d.set_item("cases_run", report.cases_run)?;
    d.set_item("passed", report.passed())?;
    d.set_item("first_failure", report.first_failure.as_ref().map(ToString::to_string))?;
    Ok(d)
}

/// Leading principal minors `d_1, ..., d_max_n` of a named family.
#[pyfunction]
#[pyo3(signature = (family, max_n, r = None, s = None, eps = None, t = None, k = None, lam = None))]
#[allow(clippy::too_many_arguments)]
fn minors(
    family: &str,
    max_n: usize,
    r: Option<u64>,
    s: Option<u64>,
    eps: Option<&str>,
    t: Option<i8>,
    k: Option<u8>,
    lam: Option<&str>,
) -> PyResult<Vec<PyScalar>> {
    let f = family::parse_family(family, r, s, eps, t, k, lam).map_err(err)?;
    Ok(principal_minor_sequence(&f, max_n).map_err(err)?.into_iter().map(PyScalar).collect())
}

#[pyfunction]
fn fib(n: u64) -> num_bigint::BigInt {
    family::fib(n)
}

#[pyfunction]
fn lucas(n: u64) -> num_bigint::BigInt {
    family::lucas(n)
}

#[pyfunction]
#[pyo3(signature = (r, s, eps = "+"))]
fn phi_rs(r: u64, s: u64, eps: &str) -> PyResult<num_bigint::BigInt> {
    family::phi_rs(r, s, Epsilon::parse(eps).map_err(err)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (r, s, eps = "+"))]
fn psi_rs(r: u64, s: u64, eps: &str) -> PyResult<PyScalar> {
    family::psi_rs(r, s, Epsilon::parse(eps).map_err(err)?).map(PyScalar).map_err(err)
}

#[pymodule(name = "pascal_toeplitz")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PascalToeplitzError", m.py().get_type::<PascalToeplitzError>())?;
    m.add_class::<PyScalar>()?;
    m.add_class::<PySequence>()?;
    m.add_class::<PyMatrix>()?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(det, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(minors, m)?)?;
    m.add_function(wrap_pyfunction!(fib, m)?)?;
    m.add_function(wrap_pyfunction!(lucas, m)?)?;
    m.add_function(wrap_pyfunction!(phi_rs, m)?)?;
    m.add_function(wrap_pyfunction!(psi_rs, m)?)?;
    Ok(())
}
