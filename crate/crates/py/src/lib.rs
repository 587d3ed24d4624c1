//! Python bindings: rational functions, signed permutations, bipartitions,
//! crystal operators, decompositions, LR multiplicities, cells and the
//! verification suite.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use jcrystal::crystal::{self, Dir, Half};
use jcrystal::hecke::HeckeAlgebra;
use jcrystal::tableaux::{pi_inverse, pi_map, Bipartition as CoreBipartition, ClassificationData, Partition};
use jcrystal::weyl::SignedPerm as CoreSignedPerm;
use jcrystal::{cells, jcrystal as jc, lr, verify, Error};

const DEFAULT_GUARD: u64 = 2_000_000;

fn err(e: Error) -> PyErr {
    match e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn dir(s: &str) -> PyResult<Dir> {
    match s {
        "e" | "E" => Ok(Dir::E),
        "f" | "F" => Ok(Dir::F),
        _ => Err(PyValueError::new_err(format!("direction must be 'e' or 'f', got {s:?}"))),
    }
}

/// An element of Q(p, q).
#[pyclass(frozen, skip_from_py_object, eq, hash, module = "jcrystal_py")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct RatFunc(jcrystal::RatFunc);

#[pymethods]
impl RatFunc {
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        s.parse().map(RatFunc).map_err(err)
    }

    fn __add__(&self, o: &Self) -> Self {
        RatFunc(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        RatFunc(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        RatFunc(&self.0 * &o.0)
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_div(&o.0).map(RatFunc).map_err(err)
    }

    fn __neg__(&self) -> Self {
        RatFunc(-&self.0)
    }

    /// `p ↦ p⁻¹, q ↦ q⁻¹`.
    fn bar(&self) -> Self {
        RatFunc(self.0.bar())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RatFunc('{}')", self.0)
    }
}

/// `[n]` in the variable `q`.
#[pyfunction]
fn qint(n: i32) -> RatFunc {
    RatFunc(jcrystal::qint(n))
}

/// `{n}`, the `p`-deformed integer.
#[pyfunction]
fn brace(n: i32) -> RatFunc {
    RatFunc(jcrystal::brace(n))
}

/// A signed permutation given by its window.
#[pyclass(frozen, skip_from_py_object, eq, hash, module = "jcrystal_py")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct SignedPerm(CoreSignedPerm);

#[pymethods]
impl SignedPerm {
    #[new]
    fn new(window: Vec<i32>) -> PyResult<Self> {
        CoreSignedPerm::from_window(&window).map(SignedPerm).map_err(err)
    }

    #[getter]
    fn window(&self) -> Vec<i32> {
        self.0.window()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn reduced_word(&self) -> Vec<usize> {
        self.0.reduced_word()
    }

    fn inverse(&self) -> Self {
        SignedPerm(self.0.inverse())
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        if o.0.rank() != self.0.rank() {
            return Err(PyValueError::new_err("ranks differ"));
        }
        Ok(SignedPerm(self.0.mul(&o.0)))
    }

    /// The right action `(t w)_k = sign(w_k) t_{|w_k|}`.
    fn act(&self, t: Vec<i32>) -> PyResult<Vec<i32>> {
        if t.len() != self.0.rank() {
            return Err(PyValueError::new_err(format!("expected {} entries", self.0.rank())));
        }
        Ok(self.0.act(&t))
    }

    /// Insertion and recording bitableaux, each as `(minus rows, plus rows)`.
    fn signed_rs(&self) -> ((Vec<Vec<i32>>, Vec<Vec<i32>>), (Vec<Vec<i32>>, Vec<Vec<i32>>)) {
        let (p, q) = jcrystal::tableaux::signed_rs(&self.0);
        let rows = |t: &jcrystal::tableaux::Bitableau| (t.minus.rows().to_vec(), t.plus.rows().to_vec());
        (rows(&p), rows(&q))
    }

    fn __repr__(&self) -> String {
        format!("SignedPerm({:?})", self.0.window())
    }
}

/// A bipartition `(λ⁻; λ⁺)` of rank `r`.
#[pyclass(frozen, skip_from_py_object, eq, hash, ord, module = "jcrystal_py")]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Bipartition(CoreBipartition);

#[pymethods]
impl Bipartition {
    #[new]
    #[pyo3(signature = (s, r=None))]
    fn new(s: &str, r: Option<usize>) -> PyResult<Self> {
        match r {
            Some(r) => CoreBipartition::parse_with_rank(s, r),
            None => s.parse(),
        }
        .map(Bipartition)
        .map_err(err)
    }

    #[getter]
    fn minus(&self) -> Vec<u32> {
        self.0.minus.parts().to_vec()
    }

    #[getter]
    fn plus(&self) -> Vec<u32> {
        self.0.plus.parts().to_vec()
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn count_sst(&self) -> usize {
        jcrystal::tableaux::Bitableau::enumerate_sst(&self.0).len()
    }

    fn count_standard(&self) -> u128 {
        self.0.count_standard()
    }

    /// Highest-weight data `(a, b)`.
    fn pi(&self) -> (Vec<i64>, Vec<i64>) {
        let d = pi_map(&self.0);
        (d.a, d.b)
    }

    /// The bipartition with a zero row whose highest-weight data is `(a, b)`.
    #[staticmethod]
    fn from_pi(a: Vec<i64>, b: Vec<i64>) -> PyResult<Self> {
        let d = ClassificationData::new(a, b).map_err(err)?;
        Ok(Bipartition(pi_inverse(&d)))
    }

    #[staticmethod]
    fn all(n: usize, r: usize) -> Vec<Self> {
        CoreBipartition::all(n, r).into_iter().map(Bipartition).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Bipartition('{}')", self.0)
    }
}

/// `Ẽ`/`F̃` for the type A index `h - ½`; `None` for zero.
#[pyfunction]
fn crystal_op(word: Vec<i32>, h: i32, direction: &str) -> PyResult<Option<Vec<i32>>> {
    Ok(crystal::crystal_op(&word, Half(h), dir(direction)?))
}

/// `ẽ_i`/`f̃_i`, or `ẽ_{i'}`/`f̃_{i'}` when `primed`; `None` for zero.
#[pyfunction]
#[pyo3(signature = (word, i, direction, primed=false))]
fn jop(word: Vec<i32>, i: usize, direction: &str, primed: bool) -> PyResult<Option<Vec<i32>>> {
    if i == 0 || (primed && i < 2) {
        return Err(PyValueError::new_err("operators are indexed by i >= 1, primed ones by i >= 2"));
    }
    Ok(jc::apply(&word, (i, primed), dir(direction)?))
}

#[pyfunction]
fn is_yamanouchi(word: Vec<i32>, r: usize) -> bool {
    jc::is_yamanouchi_biword(&word, r)
}

/// `{shape: multiplicity}` for the components of `B^{⊗d}`.
#[pyfunction]
#[pyo3(signature = (r, d, guard=DEFAULT_GUARD))]
fn decompose(py: Python<'_>, r: usize, d: usize, guard: u64) -> PyResult<BTreeMap<String, usize>> {
    let dec = py.detach(|| jc::decompose_tensor_power(r, d, guard)).map_err(err)?;
    Ok(dec.shapes.into_iter().map(|s| (s.shape.to_string(), s.multiplicity)).collect())
}

/// `{ν: LR^ν_{λ,μ}}`, nonzero entries only.
#[pyfunction]
fn lr_coefficients(lambda: &Bipartition, mu: Vec<u32>) -> PyResult<BTreeMap<String, u64>> {
    let mu = Partition::new(mu).map_err(err)?;
    let out = lr::lr_j_all(&lambda.0, &mu).map_err(err)?;
    Ok(out.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

/// Branching multiplicities of `L(μ)` for `U ⊃ Uʲ` at rank `r`.
#[pyfunction]
fn branching(mu: Vec<u32>, r: usize) -> PyResult<BTreeMap<String, u64>> {
    let mu = Partition::new(mu).map_err(err)?;
    let out = lr::branching_all(&mu, r).map_err(err)?;
    Ok(out.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

/// Left cells of `W_d` as lists of windows, and whether they agree with the
/// recording-bitableau classes.
#[pyfunction]
#[pyo3(signature = (d, guard=DEFAULT_GUARD))]
fn left_cells(py: Python<'_>, d: usize, guard: u64) -> PyResult<(Vec<Vec<Vec<i32>>>, bool)> {
    let rep = py.detach(|| cells::left_cells(d, guard)).map_err(err)?;
    Ok((rep.cells.into_iter().map(|c| c.elements).collect(), rep.agree))
}

/// `C_w` as `[(window, coefficient)]`.
#[pyfunction]
fn kl_basis(w: &SignedPerm) -> PyResult<Vec<(Vec<i32>, RatFunc)>> {
    let alg = HeckeAlgebra::new(w.0.rank());
    let k = alg.index(&w.0).map_err(err)?;
    let g = alg.group();
    Ok(alg
        .kl_basis(k)
        .iter()
        .map(|(y, c)| (g.elem(y).window(), RatFunc(c.clone())))
        .collect())
}

/// Runs the symbolic suite; returns `(passed, report text)`.
#[pyfunction]
#[pyo3(signature = (r, d, only=None))]
fn verify_suite(py: Python<'_>, r: usize, d: usize, only: Option<Vec<String>>) -> PyResult<(bool, String)> {
    let only = only
        .unwrap_or_default()
        .iter()
        .map(|s| s.parse::<verify::Family>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let rep = py
        .detach(|| verify::verify_suite(r, d, &only, verify::default_guard()))
        .map_err(err)?;
    Ok((rep.passed(), rep.to_string()))
}

#[pymodule]
fn jcrystal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RatFunc>()?;
    m.add_class::<SignedPerm>()?;
    m.add_class::<Bipartition>()?;
    m.add_function(wrap_pyfunction!(qint, m)?)?;
    m.add_function(wrap_pyfunction!(brace, m)?)?;
    m.add_function(wrap_pyfunction!(crystal_op, m)?)?;
    m.add_function(wrap_pyfunction!(jop, m)?)?;
    m.add_function(wrap_pyfunction!(is_yamanouchi, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(branching, m)?)?;
    m.add_function(wrap_pyfunction!(left_cells, m)?)?;
    m.add_function(wrap_pyfunction!(kl_basis, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
