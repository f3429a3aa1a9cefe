//! Exact Hermitian-adjacency matrices over the Gaussian integers and the
//! algebraic optimality criterion H^2 = D*I.
//!
//! Everything here is integer arithmetic; floating point lives in
//! [`crate::spectra`] only.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mixed::{EdgeState, MixedGraph};

/// A Gaussian integer `re + im*i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: Self = Self { re: 0, im: 0 };
    pub const ONE: Self = Self { re: 1, im: 0 };
    pub const I: Self = Self { re: 0, im: 1 };
    pub const MINUS_I: Self = Self { re: 0, im: -1 };

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub const fn conj(self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    pub const fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// True for the four units 1, -1, i, -i.
    pub const fn is_unit(self) -> bool {
        self.re * self.re + self.im * self.im == 1
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for GaussianInt {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im > 0 => write!(f, "{re}+{im}i"),
            (re, im) => write!(f, "{re}{im}i"),
        }
    }
}

/// A dense square matrix of Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianMatrix {
    n: usize,
    entries: Vec<GaussianInt>,
}

impl GaussianMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![GaussianInt::ZERO; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> GaussianInt {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianInt) {
        self.entries[i * self.n + j] = v;
    }

    /// True iff this equals `c * I`.
    pub fn is_scalar_identity(&self, c: i64) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                let want = if i == j { GaussianInt::new(c, 0) } else { GaussianInt::ZERO };
                if self.get(i, j) != want {
                    return false;
                }
            }
        }
        true
    }
}

/// The Hermitian-adjacency matrix of a mixed graph: zero diagonal,
/// off-diagonal entries in {0, 1, i, -i}, conjugate-symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianMatrix {
    mat: GaussianMatrix,
}

impl HermitianMatrix {
    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> GaussianInt {
        self.mat.get(i, j)
    }

    pub fn as_matrix(&self) -> &GaussianMatrix {
        &self.mat
    }
}

/// Hermitian entry for an edge in state `s`, as seen from the stored
/// orientation: returns `(h_uv, h_vu)` for the pair `(u, v)` with `u < v`.
pub(crate) fn entry_pair(s: EdgeState) -> (GaussianInt, GaussianInt) {
    match s {
        EdgeState::Undirected => (GaussianInt::ONE, GaussianInt::ONE),
        EdgeState::Forward => (GaussianInt::I, GaussianInt::MINUS_I),
        EdgeState::Backward => (GaussianInt::MINUS_I, GaussianInt::I),
    }
}

/// Builds H(m): h_uv = 1 for an undirected edge, h_uv = i and h_vu = -i for
/// the arc u -> v, 0 otherwise. Conjugate symmetry and the zero diagonal are
/// checked on every construction.
pub fn build_hermitian(m: &MixedGraph) -> HermitianMatrix {
    let n = m.graph().vertex_count();
    let mut mat = GaussianMatrix::zero(n);
    for (&(u, v), &s) in m.graph().edges().iter().zip(m.states()) {
        let (huv, hvu) = entry_pair(s);
        mat.set(u, v, huv);
        mat.set(v, u, hvu);
    }
    for i in 0..n {
        debug_assert!(mat.get(i, i).is_zero());
        for j in i + 1..n {
            let (a, b) = (mat.get(i, j), mat.get(j, i));
            assert_eq!(a, b.conj(), "conjugate symmetry violated at ({i}, {j})");
            assert!(a.is_zero() || a.is_unit(), "entry out of alphabet at ({i}, {j})");
        }
    }
    HermitianMatrix { mat }
}

/// Exact H*H by the dense triple loop. Reference route for
/// [`hermitian_square`]; quadratic-space, cubic-time.
pub fn hermitian_square_dense(h: &HermitianMatrix) -> GaussianMatrix {
    let n = h.dim();
    let mut out = GaussianMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = GaussianInt::ZERO;
            for k in 0..n {
                acc += h.get(i, k) * h.get(k, j);
            }
            out.set(i, j, acc);
        }
    }
    out
}

/// Exact H(m)^2 accumulated over the edge list: entry (u, v), u != v, is the
/// sum of h_ux * h_xv over common neighbors x; the diagonal is the degree.
pub fn hermitian_square_sparse(m: &MixedGraph) -> GaussianMatrix {
    let g = m.graph();
    let n = g.vertex_count();
    let mut out = GaussianMatrix::zero(n);
    for u in 0..n {
        out.set(u, u, GaussianInt::new(g.degree(u) as i64, 0));
    }
    for x in 0..n {
        let nb = g.neighbors(x);
        for (i, &u) in nb.iter().enumerate() {
            for &v in &nb[i + 1..] {
                let term = m.hermitian_entry(u, x) * m.hermitian_entry(x, v);
                let cur = out.get(u, v);
                out.set(u, v, cur + term);
                out.set(v, u, (cur + term).conj());
            }
        }
    }
    out
}

/// Dense-representation threshold: above this order H^2 goes through the
/// edge-list accumulation instead of the cubic product.
const DENSE_LIMIT: usize = 64;

/// Exact matrix square of the Hermitian-adjacency matrix of `m`.
pub fn hermitian_square(m: &MixedGraph) -> GaussianMatrix {
    if m.graph().vertex_count() <= DENSE_LIMIT {
        hermitian_square_dense(&build_hermitian(m))
    } else {
        hermitian_square_sparse(m)
    }
}

/// Exact optimality: true iff H(m)^2 = D*I with D the maximum degree.
/// No floating point is involved in this decision.
pub fn is_optimum(m: &MixedGraph) -> bool {
    let g = m.graph();
    let delta = g.max_degree() as i64;
    // H^2 has deg(u) on the diagonal, so irregular graphs fail immediately.
    if !g.is_regular() {
        return false;
    }
    if g.vertex_count() <= DENSE_LIMIT {
        hermitian_square_dense(&build_hermitian(m)).is_scalar_identity(delta)
    } else {
        is_optimum_sparse(m)
    }
}

fn is_optimum_sparse(m: &MixedGraph) -> bool {
    use std::collections::HashMap;
    let g = m.graph();
    let mut acc: HashMap<(usize, usize), GaussianInt> = HashMap::new();
    for x in 0..g.vertex_count() {
        let nb = g.neighbors(x);
        for (i, &u) in nb.iter().enumerate() {
            for &v in &nb[i + 1..] {
                let term = m.hermitian_entry(u, x) * m.hermitian_entry(x, v);
                *acc.entry((u, v)).or_insert(GaussianInt::ZERO) += term;
            }
        }
    }
    acc.values().all(|v| v.is_zero())
}

/// A dense square matrix of plain integers (for the skew matrix).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![0; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
    }
}

/// Skew-adjacency matrix S = -i * H of an oriented graph: +1 at (u, v) for
/// the arc u -> v, antisymmetric. Errors if any edge is undirected.
pub fn skew_matrix(m: &MixedGraph) -> Result<IntMatrix> {
    if let Some(&(u, v)) = m
        .graph()
        .edges()
        .iter()
        .zip(m.states())
        .find(|(_, &s)| s == EdgeState::Undirected)
        .map(|(e, _)| e)
    {
        return Err(Error::NotOriented(u, v));
    }
    let n = m.graph().vertex_count();
    let mut s = IntMatrix::zero(n);
    for (&(u, v), &st) in m.graph().edges().iter().zip(m.states()) {
        // -i * i = 1, -i * (-i) = -1
        let (suv, svu) = match st {
            EdgeState::Forward => (1, -1),
            EdgeState::Backward => (-1, 1),
            EdgeState::Undirected => unreachable!(),
        };
        s.set(u, v, suv);
        s.set(v, u, svu);
    }
    Ok(s)
}

/// Parity filter: true iff every vertex pair has an even number of common
/// neighbors. A necessary condition for any optimum edge-state assignment
/// to exist on `g` (pairs at distance > 2 have zero common neighbors, so
/// checking all pairs is equivalent to checking those at distance <= 2).
pub fn even_common_neighbors(g: &Graph) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if !g.common_neighbors(u, v).len().is_multiple_of(2) {
                return false;
            }
        }
    }
    true
}
