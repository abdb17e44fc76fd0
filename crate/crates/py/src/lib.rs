//! Python bindings: exact scalars, algebra files, suites and constructions.
//! Reports are returned as JSON strings in the same schema as the CLI.

use std::collections::BTreeMap;

use bihom::catalog::{catalog_names as names, load_catalog as load_named};
use bihom::format::{parse_algebra_file, print_algebra_file, AlgebraFile as File, FormatError};
use bihom::suite::{run_construction, run_structure, run_suite, Options, SuiteError};
use bihom::{CheckReport, Rational};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

create_exception!(bihom, RefusedError, PyException, "The operation's preconditions do not hold.");

fn suite_err(e: SuiteError) -> PyErr {
    match e {
        SuiteError::Precondition(_) => RefusedError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn format_err(e: FormatError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = String>>(s: &str) -> PyResult<T> {
    s.parse().map_err(PyValueError::new_err)
}

fn bindings(values: BTreeMap<String, String>) -> PyResult<BTreeMap<String, Rational>> {
    values
        .into_iter()
        .map(|(k, v)| {
            let q: Rational = v
                .trim()
                .parse()
                .map_err(|_| PyValueError::new_err(format!("`{v}` is not a rational number")))?;
            Ok((k, q))
        })
        .collect()
}

/// An element of the fraction field Q(parameters).
#[pyclass(frozen, eq, skip_from_py_object, module = "bihom")]
#[derive(Clone, PartialEq)]
struct Scalar(bihom::Scalar);

#[pymethods]
impl Scalar {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Scalar).map_err(|e: bihom::ScalarError| PyValueError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Scalar('{}')", self.0)
    }

    fn __add__(&self, other: &Scalar) -> Scalar {
        Scalar(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Scalar) -> Scalar {
        Scalar(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Scalar) -> Scalar {
        Scalar(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &Scalar) -> PyResult<Scalar> {
        self.0
            .checked_div(&other.0)
            .map(Scalar)
            .map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn __neg__(&self) -> Scalar {
        Scalar(-&self.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn variables(&self) -> Vec<String> {
        self.0.variables().into_iter().collect()
    }

    /// Substitutes rationals (given as strings, e.g. `{"b": "1/2"}`) for every parameter.
    fn substitute(&self, values: BTreeMap<String, String>) -> PyResult<Scalar> {
        self.0
            .substitute(&bindings(values)?)
            .map(Scalar)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

/// A parsed algebra file: Hopf data, R-matrix and named objects.
#[pyclass(frozen, module = "bihom")]
struct AlgebraFile(File);

#[pymethods]
impl AlgebraFile {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_algebra_file(text).map(AlgebraFile).map_err(format_err)
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| PyValueError::new_err(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    #[getter]
    fn parameters(&self) -> Vec<String> {
        self.0.parameters.clone()
    }

    #[getter]
    fn objects(&self) -> Vec<String> {
        self.0.objects.iter().map(|o| o.name.clone()).collect()
    }

    fn to_text(&self) -> String {
        print_algebra_file(&self.0)
    }

    fn substitute(&self, values: BTreeMap<String, String>) -> PyResult<AlgebraFile> {
        self.0.substitute(&bindings(values)?).map(AlgebraFile).map_err(format_err)
    }

    /// Runs a verification suite and returns the report as JSON.
    #[pyo3(signature = (suite = "all", object = None, probe_seed = 0))]
    fn check(&self, suite: &str, object: Option<String>, probe_seed: u64) -> PyResult<String> {
        let opts = Options {
            object,
            probe_seed,
            ..Options::default()
        };
        run_suite(&self.0, parse(suite)?, &opts)
            .map(|r| r.to_json())
            .map_err(suite_err)
    }

    /// Builds the commutator or twisted bracket as a new file.
    #[pyo3(signature = (what, object = None))]
    fn construct(&self, what: &str, object: Option<&str>) -> PyResult<AlgebraFile> {
        run_construction(&self.0, parse(what)?, object)
            .map(AlgebraFile)
            .map_err(suite_err)
    }

    /// Structure computation; `vectors` are coordinate lists or single basis names.
    #[pyo3(signature = (what, object = None, vectors = Vec::new(), probe_seed = 0))]
    fn structure(
        &self,
        what: &str,
        object: Option<String>,
        vectors: Vec<Vec<String>>,
        probe_seed: u64,
    ) -> PyResult<String> {
        let opts = Options {
            object,
            probe_seed,
            vectors,
            ..Options::default()
        };
        run_structure(&self.0, parse(what)?, &opts)
            .map(|r: CheckReport| r.to_json())
            .map_err(suite_err)
    }

    fn __repr__(&self) -> String {
        format!("AlgebraFile(objects={:?})", self.objects())
    }
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    names()
}

#[pyfunction]
fn load_catalog(name: &str) -> PyResult<AlgebraFile> {
    load_named(name).map(AlgebraFile).map_err(format_err)
}

#[pymodule]
#[pyo3(name = "bihom")]
fn bihom_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Scalar>()?;
    m.add_class::<AlgebraFile>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(load_catalog, m)?)?;
    m.add("RefusedError", m.py().get_type::<RefusedError>())?;
    Ok(())
}
