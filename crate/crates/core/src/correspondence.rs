//! The weight-preserving bijection between FFLV lattice points and symplectic
//! PBW-semistandard tableaux.

use crate::fflv::{require_contains, MultiExponent};
use crate::liealg::{DominantWeight, Root};
use crate::tableaux::{is_symplectic_pbw_column, is_symplectic_pbw_semistandard, Tableau};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Factors of `f^p`, expanded and sorted descending in the operator order
/// (`f_{i1,j1} > f_{i2,j2}` iff `i1 < i2`, or `i1 = i2` and `j1 < j2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedMonomial {
    pub factors: Vec<Root>,
}

pub fn order_monomial(p: &MultiExponent) -> OrderedMonomial {
    // the operator order is the reverse of the canonical root order, so
    // "descending" is canonical ascending
    let factors = p.iter().flat_map(|(r, e)| std::iter::repeat_n(r, e as usize)).collect();
    OrderedMonomial { factors }
}

/// New entry produced by `f_{i,j}` acting on `i`: `j+1` for unbarred `j`
/// (with `n+1 = n̄`), and `j` itself for barred `j`.
fn image_entry(n: usize, a: Root) -> usize {
    let code = a.j_code(n);
    if code <= n {
        code + 1
    } else {
        code
    }
}

/// The map `φ`: `f^p · t_λ`.
pub fn monomial_to_tableau(n: usize, lambda: &DominantWeight, p: &MultiExponent) -> Result<Tableau> {
    require_contains(n, lambda, p)?;
    let mut t = Tableau::highest_weight(lambda);
    for a in order_monomial(p).factors.into_iter().rev() {
        let code = a.j_code(n);
        let e = image_entry(n, a);
        // the entry must still be untouched, and the operators acting in one
        // column must produce entries decreasing from top to bottom
        let col = t
            .columns
            .iter()
            .position(|c| code >= c.len() && c.len() >= a.i && c[a.i - 1] == a.i && c[a.i..].iter().all(|&b| b < e))
            .ok_or(Error::NoAdmissibleColumn { i: a.i, j: code })?;
        t.columns[col][a.i - 1] = e;
    }
    Ok(t)
}

/// Root vector read off from entry `h` at row `r` of a column of length `mu`,
/// or `None` if the entry sits at its position.
fn entry_root(n: usize, r: usize, h: usize, mu: usize) -> Result<Option<Root>> {
    if h <= mu {
        return Ok(None);
    }
    let code = if h <= n + 1 { h - 1 } else { h };
    Root::from_code(n, r, code).map(Some)
}

/// The map `π`: tableau to `(λ, p)`.
pub fn tableau_to_monomial(n: usize, t: &Tableau) -> Result<(DominantWeight, MultiExponent)> {
    if !is_symplectic_pbw_semistandard(n, t)? {
        return Err(Error::NotSemistandard);
    }
    let lambda = t.shape().weight(n)?;
    let mut p = MultiExponent::new();
    for col in &t.columns {
        for (r, &h) in col.iter().enumerate() {
            if let Some(a) = entry_root(n, r + 1, h, col.len())? {
                p.add(a, 1);
            }
        }
    }
    Ok((lambda, p))
}

/// `θ₁` for `λ = ω_k`: each factor rewrites its own row of `t_{ω_k}`.
pub fn theta1(n: usize, k: usize, p: &MultiExponent) -> Result<Vec<usize>> {
    require_contains(n, &DominantWeight::fundamental(n, k), p)?;
    let mut col: Vec<usize> = (1..=k).collect();
    for (a, e) in p.iter() {
        if e != 1 || a.i > k || col[a.i - 1] != a.i || a.j_code(n) < k {
            return Err(Error::NoAdmissibleColumn { i: a.i, j: a.j_code(n) });
        }
        col[a.i - 1] = image_entry(n, a);
    }
    Ok(col)
}

/// `θ₂` for a single symplectic PBW column.
pub fn theta2(n: usize, col: &[usize]) -> Result<MultiExponent> {
    if !is_symplectic_pbw_column(n, col) {
        return Err(Error::MalformedTableau(format!("{col:?} is not a symplectic PBW column")));
    }
    let mut p = MultiExponent::new();
    for (r, &h) in col.iter().enumerate() {
        if let Some(a) = entry_root(n, r + 1, h, col.len())? {
            p.add(a, 1);
        }
    }
    Ok(p)
}
