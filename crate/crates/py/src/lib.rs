//! Python module `pyhecke`.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hecke_reptype::cartan::RootVec;
use hecke_reptype::checks::acceptance as run_acceptance;
use hecke_reptype::classify::{self, ClassifierConfig};
use hecke_reptype::fock::{enumerate_standard, tableau_stats, Bipartition, FockContext};
use hecke_reptype::gdim::{self, ResidueSeq};
use hecke_reptype::orbits::{self, Family};
use hecke_reptype::Error;

create_exception!(pyhecke, NotAWeightError, PyValueError);

/// Growth sequence of `(component, row, col)` nodes, degree, residues.
type TableauRow = (Vec<(u8, usize, usize)>, i64, Vec<usize>);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NotAWeight(_) => NotAWeightError::new_err(e.to_string()),
        Error::IterationCap { .. } | Error::NoRepresentative(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn config(char2: bool, char_odd: bool, lambda_sign: bool) -> PyResult<ClassifierConfig> {
    ClassifierConfig::new(char2, char_odd, lambda_sign).map_err(to_py)
}

/// Classification result for one block.
#[pyclass(module = "pyhecke", frozen)]
struct BlockReport {
    inner: classify::BlockReport,
}

#[pymethods]
impl BlockReport {
    /// One of "simple", "finite", "tame", "wild".
    #[getter]
    fn rep_type(&self) -> String {
        self.inner.rep_type.tag.to_string()
    }

    /// `(family, s, i, k)` or None for tensor-product blocks.
    #[getter]
    fn canonical(&self) -> Option<(String, usize, usize, u64)> {
        self.inner.canonical.map(|c| {
            let fam = match c.family {
                Family::Lambda => "lambda",
                Family::Mu => "mu",
            };
            (fam.to_string(), c.s, c.i, c.k)
        })
    }

    #[getter]
    fn brauer_edges(&self) -> Option<usize> {
        self.inner.rep_type.structure.as_ref().map(|b| b.edges)
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.inner.notes.clone()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("BlockReport({})", self.inner.rep_type)
    }
}

/// A level-two context `Λ = Λ_0 + Λ_s` of rank `ℓ`, or level one with `level_one=True`.
#[pyclass(module = "pyhecke", frozen)]
struct Context {
    inner: FockContext,
}

impl Context {
    fn root(&self, beta: Vec<i64>) -> PyResult<RootVec> {
        RootVec::new(self.inner.rank(), beta).map_err(to_py)
    }

    fn seq(&self, nu: Vec<i64>) -> ResidueSeq {
        ResidueSeq::new(self.inner.rank(), &nu)
    }
}

#[pymethods]
impl Context {
    #[new]
    #[pyo3(signature = (ell, s=0, level_one=false))]
    fn new(ell: i64, s: usize, level_one: bool) -> PyResult<Self> {
        let inner = if level_one {
            FockContext::level_one(ell)
        } else {
            FockContext::level_two(ell, s)
        };
        inner.map(|inner| Context { inner }).map_err(to_py)
    }

    #[getter]
    fn ell(&self) -> u32 {
        self.inner.ell()
    }

    #[getter]
    fn s(&self) -> usize {
        self.inner.s()
    }

    fn is_weight(&self, beta: Vec<i64>) -> PyResult<bool> {
        orbits::is_weight(&self.inner, &self.root(beta)?).map_err(to_py)
    }

    fn canonical_rep(&self, beta: Vec<i64>) -> PyResult<(String, usize, usize, u64)> {
        let c = orbits::canonical_rep(&self.inner, &self.root(beta)?).map_err(to_py)?;
        let fam = match c.family {
            Family::Lambda => "lambda",
            Family::Mu => "mu",
        };
        Ok((fam.to_string(), c.s, c.i, c.k))
    }

    #[pyo3(signature = (beta, char2=false, char_odd=false, lambda_sign=false))]
    fn classify(
        &self,
        beta: Vec<i64>,
        char2: bool,
        char_odd: bool,
        lambda_sign: bool,
    ) -> PyResult<BlockReport> {
        let cfg = config(char2, char_odd, lambda_sign)?;
        let beta = self.root(beta)?;
        if self.inner.level() == hecke_reptype::fock::Level::One {
            let t = classify::classify_typeA_levelone(&self.inner, &beta).map_err(to_py)?;
            return Ok(BlockReport {
                inner: classify::BlockReport {
                    input: classify::BlockInput::LevelOne {
                        ell: self.inner.ell(),
                        beta,
                    },
                    hecke: None,
                    canonical: None,
                    rep_type: t,
                    quiver: None,
                    notes: Vec::new(),
                },
            });
        }
        classify::classify_block(&self.inner, &beta, &cfg)
            .map(|inner| BlockReport { inner })
            .map_err(to_py)
    }

    /// `dim_q e(ν′) R e(ν)` as a string such as "1+q^2+q^4".
    fn graded_dim(&self, nu_prime: Vec<i64>, nu: Vec<i64>) -> String {
        gdim::graded_dim(&self.inner, &self.seq(nu_prime), &self.seq(nu)).to_string()
    }

    /// `(degree, coefficient)` pairs of `dim_q e(ν′) R e(ν)`.
    fn graded_dim_terms(&self, nu_prime: Vec<i64>, nu: Vec<i64>) -> Vec<(i32, i64)> {
        gdim::graded_dim(&self.inner, &self.seq(nu_prime), &self.seq(nu))
            .terms()
            .collect()
    }

    #[pyo3(signature = (beta, idems=None))]
    fn dim_matrix(
        &self,
        beta: Vec<i64>,
        idems: Option<Vec<Vec<i64>>>,
    ) -> PyResult<Vec<Vec<String>>> {
        let beta = self.root(beta)?;
        let idems: Vec<ResidueSeq> = match idems {
            Some(list) => list.into_iter().map(|v| self.seq(v)).collect(),
            None => gdim::nonzero_idempotents(&self.inner, &beta),
        };
        let m = gdim::dim_matrix(&self.inner, &beta, &idems).map_err(to_py)?;
        Ok(m.entries
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect())
            .collect())
    }

    fn nonzero_idempotents(&self, beta: Vec<i64>) -> PyResult<Vec<Vec<usize>>> {
        let beta = self.root(beta)?;
        Ok(gdim::nonzero_idempotents(&self.inner, &beta)
            .iter()
            .map(|nu| nu.residues().iter().map(|r| r.value()).collect())
            .collect())
    }

    /// Standard tableaux of a shape like "2,1|1" as `(nodes, degree, residues)`.
    fn tableaux(&self, shape: &str) -> PyResult<Vec<TableauRow>> {
        let lam: Bipartition = shape.parse().map_err(to_py)?;
        let mut out = Vec::new();
        for t in enumerate_standard(&self.inner, &lam) {
            let (deg, res) = tableau_stats(&self.inner, &t).map_err(to_py)?;
            let nodes = t
                .growth()
                .iter()
                .map(|x| (x.component, x.row, x.col))
                .collect();
            out.push((nodes, deg, res.iter().map(|r| r.value()).collect()));
        }
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("Context(ell={}, s={})", self.inner.ell(), self.inner.s())
    }
}

/// Blocks of the type B (or D) Hecke algebra of rank `n` at an `e`-th root of unity.
#[pyfunction]
#[pyo3(signature = (e, n, s=None, type_d=false, char2=false, char_odd=false, lambda_sign=false))]
#[allow(clippy::too_many_arguments)]
fn hecke_blocks(
    e: usize,
    n: usize,
    s: Option<i64>,
    type_d: bool,
    char2: bool,
    char_odd: bool,
    lambda_sign: bool,
) -> PyResult<Vec<BlockReport>> {
    let cfg = config(char2, char_odd, lambda_sign)?;
    let reports = if type_d {
        classify::classify_heckeD(e, n, &cfg)
    } else {
        classify::classify_heckeB(e, s, n, &cfg)
    };
    Ok(reports
        .map_err(to_py)?
        .into_iter()
        .map(|inner| BlockReport { inner })
        .collect())
}

/// The acceptance checks as `(id, passed, detail)`.
#[pyfunction]
fn acceptance() -> Vec<(String, bool, String)> {
    run_acceptance()
        .into_iter()
        .map(|c| (c.id, c.passed, c.detail))
        .collect()
}

#[pymodule]
pub fn pyhecke(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Context>()?;
    m.add_class::<BlockReport>()?;
    m.add_function(wrap_pyfunction!(hecke_blocks, m)?)?;
    m.add_function(wrap_pyfunction!(acceptance, m)?)?;
    m.add("NotAWeightError", m.py().get_type::<NotAWeightError>())?;
    Ok(())
}
