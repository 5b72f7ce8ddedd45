//! Positive roots of `sp(2n)`, their root-vector matrices and weights.

use crate::matrix::{Matrix, Q};
use crate::{bar, Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

/// A positive root `α_{i,j}` or `α_{i,j̄}`.
///
/// `j` is the unbarred base index; `α_{i,n̄}` is stored as `α_{i,n}` with
/// `barred = false`. The ordering is the canonical one: by `i`, then `j` in
/// the order `1 < … < n < (n-1)‾ < … < 1̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
    pub barred: bool,
}

impl Root {
    /// Builds a root, folding `α_{i,n̄}` onto `α_{i,n}`.
    pub fn new(n: usize, i: usize, j: usize, barred: bool) -> Result<Root> {
        let barred = barred && j != n;
        let r = Root { i, j, barred };
        r.validate(n)?;
        Ok(r)
    }

    pub fn unbarred(i: usize, j: usize) -> Root {
        Root { i, j, barred: false }
    }

    pub fn barred(i: usize, j: usize) -> Root {
        Root { i, j, barred: true }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let ok =
            n >= 1 && (1..=n).contains(&self.i) && self.i <= self.j && self.j <= n && !(self.barred && self.j == n);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidRoot { n, i: self.i, j: self.j, barred: self.barred })
        }
    }

    /// Position of `j` in the alphabet encoding: `j` or `2n+1-j`.
    pub fn j_code(&self, n: usize) -> usize {
        if self.barred {
            bar(n, self.j)
        } else {
            self.j
        }
    }

    /// Inverse of [`Root::j_code`]; the code `n+1` folds onto `n`.
    pub fn from_code(n: usize, i: usize, code: usize) -> Result<Root> {
        if code == n + 1 {
            Root::new(n, i, n, false)
        } else if code > n && code <= 2 * n {
            Root::new(n, i, bar(n, code), true)
        } else {
            Root::new(n, i, code, false)
        }
    }

    fn key(&self) -> (usize, usize) {
        // barred roots follow all unbarred ones, with decreasing base index
        let jk = if self.barred { 2 * usize::from(u16::MAX) - self.j } else { self.j };
        (self.i, jk)
    }

    pub fn pretty(&self, ascii: bool) -> String {
        if self.barred {
            let b = if ascii { format!("{}'", self.j) } else { format!("{}\u{305}", self.j) };
            format!("a({},{})", self.i, b)
        } else {
            format!("a({},{})", self.i, self.j)
        }
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty(true))
    }
}

/// All `n²` positive roots in canonical order.
pub fn positive_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        out.extend((i..=n).map(|j| Root::unbarred(i, j)));
        out.extend((i..n).rev().map(|j| Root::barred(i, j)));
    }
    out
}

/// The roots reachable from `α` by one step of the Dyck-path recursion:
/// `α_{p,q} → α_{p,q+1}` or `α_{p+1,q}`, in the order of `J`.
pub fn successors(n: usize, a: Root) -> Vec<Root> {
    let mut out = Vec::new();
    let code = a.j_code(n);
    let next = if code == n { n + 2 } else { code + 1 };
    if next <= bar(n, a.i) {
        out.push(Root::from_code(n, a.i, next).expect("in range"));
    }
    let p = a.i + 1;
    if p <= n && code >= p && code <= bar(n, p) {
        out.push(Root::from_code(n, p, code).expect("in range"));
    }
    out
}

/// Matrix `E_{r,c}` (one-based) of size `2n`.
fn unit(n: usize, r: usize, c: usize) -> Matrix<i64> {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    m.set(r - 1, c - 1, 1);
    m
}

/// The root vector `f_α` as an integer `2n × 2n` matrix.
pub fn root_vector_matrix(n: usize, a: Root) -> Result<Matrix<i64>> {
    a.validate(n)?;
    let (i, j) = (a.i, a.j);
    let ib = bar(n, i);
    Ok(if a.barred || j == n {
        if i == j {
            unit(n, ib, i)
        } else {
            unit(n, bar(n, j), i).add(&unit(n, ib, j))
        }
    } else {
        unit(n, j + 1, i).sub(&unit(n, ib, bar(n, j + 1)))
    })
}

/// The symplectic form `[[0, J], [-J, 0]]` with `J` the anti-diagonal identity.
pub fn symplectic_form(n: usize) -> Matrix<i64> {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for r in 0..n {
        m.set(r, 2 * n - 1 - r, 1);
        m.set(2 * n - 1 - r, r, -1);
    }
    m
}

/// Weight vector in the `ε` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    /// `sign · ε_i` with one-based `i`.
    pub fn epsilon(n: usize, i: usize, sign: i64) -> Self {
        let mut w = vec![0; n];
        w[i - 1] = sign;
        WeightVector(w)
    }
}

impl Add for WeightVector {
    type Output = WeightVector;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for WeightVector {
    fn add_assign(&mut self, rhs: Self) {
        assert_eq!(self.0.len(), rhs.0.len(), "weight length mismatch");
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Neg for WeightVector {
    type Output = WeightVector;
    fn neg(self) -> Self {
        WeightVector(self.0.into_iter().map(|x| -x).collect())
    }
}

impl Sub for WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// Weight of the root vector `f_α`, i.e. its eigenvalue under the diagonal torus.
///
/// `f_{i,j}` for `j < n` sends `w_i` to `w_{j+1}` and has weight `ε_{j+1} − ε_i`;
/// barred roots have weight `−ε_i − ε_j`.
pub fn root_vector_weight(n: usize, a: Root) -> WeightVector {
    if a.barred || a.j == n {
        WeightVector::epsilon(n, a.i, -1) + WeightVector::epsilon(n, a.j, -1)
    } else {
        WeightVector::epsilon(n, a.j + 1, 1) + WeightVector::epsilon(n, a.i, -1)
    }
}

/// A dominant integral weight `λ = Σ m_k ω_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominantWeight {
    pub m: Vec<u32>,
}

impl DominantWeight {
    pub fn new(m: Vec<u32>) -> Self {
        DominantWeight { m }
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight { m: vec![0; n] }
    }

    /// The fundamental weight `ω_k`.
    pub fn fundamental(n: usize, k: usize) -> Self {
        let mut m = vec![0; n];
        m[k - 1] = 1;
        DominantWeight { m }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        if self.m.len() == n {
            Ok(())
        } else {
            Err(Error::WeightLength { got: self.m.len(), expected: n })
        }
    }

    /// `λ_i = m_i + … + m_n`.
    pub fn partition(&self) -> Vec<u32> {
        let mut p = self.m.clone();
        for i in (0..p.len().saturating_sub(1)).rev() {
            p[i] += p[i + 1];
        }
        p
    }

    pub fn from_partition(p: &[u32]) -> Result<Self> {
        if p.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedTableau(format!("{p:?} is not a partition")));
        }
        let m = (0..p.len()).map(|i| p[i] - p.get(i + 1).copied().unwrap_or(0)).collect();
        Ok(DominantWeight { m })
    }

    /// Column lengths `μ_1 ≥ μ_2 ≥ …` of the Young diagram.
    pub fn column_lengths(&self) -> Vec<usize> {
        let mut cols = Vec::new();
        for k in (1..=self.m.len()).rev() {
            cols.extend(std::iter::repeat_n(k, self.m[k - 1] as usize));
        }
        cols
    }

    pub fn add(&self, other: &Self) -> Self {
        DominantWeight { m: self.m.iter().zip(&other.m).map(|(a, b)| a + b).collect() }
    }

    /// `Σ λ_i ε_i`.
    pub fn weight(&self) -> WeightVector {
        WeightVector(self.partition().into_iter().map(i64::from).collect())
    }
}

/// Dimension of the irreducible `sp(2n)` module of highest weight `λ` by the
/// Weyl dimension formula, in exact rational arithmetic.
pub fn weyl_dimension(n: usize, lambda: &DominantWeight) -> Result<u128> {
    lambda.check_rank(n)?;
    let part = lambda.partition();
    let rho: Vec<i64> = (1..=n as i64).rev().collect();
    let l: Vec<i64> = part.iter().zip(&rho).map(|(&p, &r)| i64::from(p) + r).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from((l[i] - l[j]) * (l[i] + l[j]));
            den *= BigInt::from((rho[i] - rho[j]) * (rho[i] + rho[j]));
        }
        num *= BigInt::from(l[i]);
        den *= BigInt::from(rho[i]);
    }
    let d = Q::new(num, den);
    if !d.is_integer() {
        return Err(Error::NonIntegral);
    }
    let (q, r) = d.numer().div_rem(d.denom());
    debug_assert!(r == BigInt::from(0));
    q.to_u128().ok_or(Error::NonIntegral)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for n in 1..=8 {
            assert_eq!(positive_roots(n).len(), n * n);
        }
        let r2 = positive_roots(2);
        assert_eq!(r2, vec![Root::unbarred(1, 1), Root::unbarred(1, 2), Root::barred(1, 1), Root::unbarred(2, 2)]);
    }

    #[test]
    fn canonical_order_is_sorted() {
        for n in 1..=6 {
            let r = positive_roots(n);
            assert!(r.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn folding_of_n_bar() {
        assert_eq!(Root::new(3, 2, 3, true).unwrap(), Root::unbarred(2, 3));
        assert!(Root::new(3, 3, 2, false).is_err());
        assert!(Root::new(3, 0, 2, false).is_err());
    }

    #[test]
    fn matrices_n2() {
        assert_eq!(root_vector_matrix(2, Root::barred(1, 1)).unwrap(), unit(2, 4, 1));
        assert_eq!(root_vector_matrix(2, Root::unbarred(1, 1)).unwrap(), unit(2, 2, 1).sub(&unit(2, 4, 3)));
        assert_eq!(root_vector_matrix(2, Root::unbarred(1, 2)).unwrap(), unit(2, 3, 1).add(&unit(2, 4, 2)));
        assert_eq!(root_vector_matrix(2, Root::unbarred(2, 2)).unwrap(), unit(2, 3, 2));
    }

    #[test]
    fn root_vectors_are_symplectic() {
        for n in 1..=5 {
            let psi = symplectic_form(n);
            for a in positive_roots(n) {
                let f = root_vector_matrix(n, a).unwrap();
                assert!(f.transpose().mul(&psi).add(&psi.mul(&f)).is_zero(), "{a} at n={n}");
            }
        }
    }

    #[test]
    fn weights_follow_adjoint_action() {
        for n in 1..=4 {
            for a in positive_roots(n) {
                let f = root_vector_matrix(n, a).unwrap();
                let wt = root_vector_weight(n, a);
                for k in 0..n {
                    // h = diag(e_k, -e_k reversed)
                    let mut h = Matrix::zeros(2 * n, 2 * n);
                    h.set(k, k, 1);
                    h.set(2 * n - 1 - k, 2 * n - 1 - k, -1);
                    let comm = h.mul(&f).sub(&f.mul(&h));
                    assert_eq!(comm, f.map(|x| x * wt.0[k]), "{a} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn weight_examples() {
        assert_eq!(root_vector_weight(3, Root::barred(2, 2)).0, vec![0, -2, 0]);
        assert_eq!(root_vector_weight(3, Root::unbarred(3, 3)).0, vec![0, 0, -2]);
        assert_eq!(root_vector_weight(3, Root::unbarred(1, 2)).0, vec![-1, 0, 1]);
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(3, &DominantWeight::fundamental(3, 3)).unwrap(), 14);
        assert_eq!(weyl_dimension(2, &DominantWeight::new(vec![1, 1])).unwrap(), 16);
        assert_eq!(weyl_dimension(2, &DominantWeight::zero(2)).unwrap(), 1);
        // standard representation and the adjoint
        for n in 1..=6 {
            assert_eq!(weyl_dimension(n, &DominantWeight::fundamental(n, 1)).unwrap(), 2 * n as u128);
            let mut m = vec![0; n];
            m[0] = 2;
            assert_eq!(weyl_dimension(n, &DominantWeight::new(m)).unwrap(), (n * (2 * n + 1)) as u128);
        }
    }

    #[test]
    fn fundamental_dimensions_match_binomials() {
        // dim V_{ω_k} = C(2n,k) - C(2n,k-2)
        fn binom(a: u128, b: u128) -> u128 {
            (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
        }
        for n in 1..=6usize {
            for k in 1..=n {
                let expected =
                    binom(2 * n as u128, k as u128) - if k >= 2 { binom(2 * n as u128, k as u128 - 2) } else { 0 };
                assert_eq!(weyl_dimension(n, &DominantWeight::fundamental(n, k)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn partition_roundtrip() {
        let w = DominantWeight::new(vec![2, 0, 3]);
        assert_eq!(w.partition(), vec![5, 3, 3]);
        assert_eq!(DominantWeight::from_partition(&w.partition()).unwrap(), w);
        assert_eq!(w.column_lengths(), vec![3, 3, 3, 1, 1]);
    }
}
