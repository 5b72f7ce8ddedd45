//! Symplectic Dyck paths, the FFLV polytope and its lattice points.

use crate::liealg::{positive_roots, successors, DominantWeight, Root};
use crate::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DyckPath {
    pub roots: Vec<Root>,
}

impl DyckPath {
    pub fn first(&self) -> Root {
        self.roots[0]
    }

    pub fn last(&self) -> Root {
        *self.roots.last().expect("non-empty path")
    }

    /// Checks the three defining conditions of a symplectic Dyck path.
    pub fn is_valid(&self, n: usize) -> bool {
        let Some(&first) = self.roots.first() else { return false };
        if first.validate(n).is_err() || first.barred || first.i != first.j {
            return false;
        }
        let ok_steps = self.roots.windows(2).all(|w| successors(n, w[0]).contains(&w[1]));
        ok_steps && is_endpoint(self.last())
    }
}

/// `α_{j,j}` (any `j`) or `α_{j,j̄}` with `j < n`.
fn is_endpoint(a: Root) -> bool {
    a.i == a.j
}

/// All symplectic Dyck paths of rank `n` in lexicographic order.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn extend(n: usize, path: &mut Vec<Root>, out: &mut Vec<DyckPath>) {
        let last = *path.last().expect("non-empty");
        if is_endpoint(last) {
            out.push(DyckPath { roots: path.clone() });
        }
        for s in successors(n, last) {
            path.push(s);
            extend(n, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for i in 1..=n {
        extend(n, &mut vec![Root::unbarred(i, i)], &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// Exponent vector `p = (p_α)`; only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiExponent {
    exps: BTreeMap<Root, u32>,
}

#[derive(Serialize, Deserialize)]
struct RootExp {
    root: Root,
    exp: u32,
}

impl Serialize for MultiExponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<RootExp> = self.iter().map(|(root, exp)| RootExp { root, exp }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiExponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<RootExp>::deserialize(d)?;
        let mut m = MultiExponent::default();
        for RootExp { root, exp } in v {
            m.add(root, exp);
        }
        Ok(m)
    }
}

impl MultiExponent {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, a: Root) -> u32 {
        self.exps.get(&a).copied().unwrap_or(0)
    }

    pub fn add(&mut self, a: Root, e: u32) {
        if e > 0 {
            *self.exps.entry(a).or_insert(0) += e;
        }
    }

    pub fn with(mut self, a: Root, e: u32) -> Self {
        self.add(a, e);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (Root, u32)> + '_ {
        self.exps.iter().map(|(&r, &e)| (r, e))
    }

    pub fn is_zero(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        self.exps.keys().try_for_each(|r| r.validate(n))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, e) in other.iter() {
            out.add(r, e);
        }
        out
    }

    /// Dense vector over `positive_roots(n)`.
    pub fn to_dense(&self, n: usize) -> Vec<u32> {
        positive_roots(n).into_iter().map(|r| self.get(r)).collect()
    }

    pub fn from_dense(n: usize, v: &[u32]) -> Self {
        let mut m = MultiExponent::default();
        for (r, &e) in positive_roots(n).into_iter().zip(v) {
            m.add(r, e);
        }
        m
    }

    pub fn pretty(&self, ascii: bool) -> String {
        if self.is_zero() {
            return "1".into();
        }
        self.iter()
            .map(|(r, e)| {
                let f = r.pretty(ascii).replacen('a', "f", 1);
                if e == 1 {
                    f
                } else {
                    format!("{f}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FflvInequality {
    pub support: Vec<Root>,
    pub rhs: u32,
}

impl FflvInequality {
    pub fn holds(&self, p: &MultiExponent) -> bool {
        self.support.iter().map(|&r| p.get(r)).sum::<u32>() <= self.rhs
    }
}

/// One inequality per Dyck path, identical ones merged.
pub fn fflv_inequalities(n: usize, lambda: &DominantWeight) -> Result<Vec<FflvInequality>> {
    lambda.check_rank(n)?;
    let m = &lambda.m;
    let mut out: Vec<FflvInequality> = dyck_paths(n)
        .into_iter()
        .map(|d| {
            let i = d.first().i;
            let last = d.last();
            let upto = if last.barred { n } else { last.j };
            FflvInequality { support: d.roots, rhs: m[i - 1..upto].iter().sum() }
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn contains(n: usize, lambda: &DominantWeight, p: &MultiExponent) -> Result<bool> {
    p.validate(n)?;
    Ok(fflv_inequalities(n, lambda)?.iter().all(|q| q.holds(p)))
}

/// Exact enumeration of the lattice points `S(λ)` in lexicographic order of
/// the dense coordinate vector.
pub fn lattice_points(n: usize, lambda: &DominantWeight) -> Result<Vec<MultiExponent>> {
    let ineqs = fflv_inequalities(n, lambda)?;
    let roots = positive_roots(n);
    // for each coordinate, the inequalities it appears in
    let member: Vec<Vec<usize>> =
        roots.iter().map(|r| (0..ineqs.len()).filter(|&q| ineqs[q].support.contains(r)).collect()).collect();
    let mut slack: Vec<u32> = ineqs.iter().map(|q| q.rhs).collect();
    let mut coords = vec![0u32; roots.len()];
    let mut out = Vec::new();

    fn rec(pos: usize, member: &[Vec<usize>], slack: &mut [u32], coords: &mut [u32], out: &mut Vec<Vec<u32>>) {
        if pos == coords.len() {
            out.push(coords.to_vec());
            return;
        }
        let bound = member[pos].iter().map(|&q| slack[q]).min().unwrap_or(0);
        for v in 0..=bound {
            for &q in &member[pos] {
                slack[q] -= v;
            }
            coords[pos] = v;
            rec(pos + 1, member, slack, coords, out);
            for &q in &member[pos] {
                slack[q] += v;
            }
        }
        coords[pos] = 0;
    }

    let mut dense = Vec::new();
    rec(0, &member, &mut slack, &mut coords, &mut dense);
    out.extend(dense.iter().map(|v| MultiExponent::from_dense(n, v)));
    Ok(out)
}

/// Rejects `p` unless it lies in the polytope.
pub fn require_contains(n: usize, lambda: &DominantWeight, p: &MultiExponent) -> Result<()> {
    if contains(n, lambda, p)? {
        Ok(())
    } else {
        Err(Error::OutsidePolytope)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::weyl_dimension;

    fn r(i: usize, j: usize) -> Root {
        Root::unbarred(i, j)
    }

    #[test]
    fn paths_small_rank() {
        assert_eq!(dyck_paths(1), vec![DyckPath { roots: vec![r(1, 1)] }]);
        let p2: Vec<Vec<Root>> = dyck_paths(2).into_iter().map(|d| d.roots).collect();
        assert_eq!(
            p2,
            vec![
                vec![r(1, 1)],
                vec![r(1, 1), r(1, 2), Root::barred(1, 1)],
                vec![r(1, 1), r(1, 2), r(2, 2)],
                vec![r(2, 2)],
            ]
        );
        for n in 1..=5 {
            assert!(dyck_paths(n).iter().all(|d| d.is_valid(n)));
        }
    }

    #[test]
    fn n2_inequalities() {
        let ineq = fflv_inequalities(2, &DominantWeight::new(vec![1, 1])).unwrap();
        let rhs: Vec<(usize, u32)> = ineq.iter().map(|q| (q.support.len(), q.rhs)).collect();
        assert_eq!(rhs, vec![(1, 1), (3, 2), (3, 2), (1, 1)]);
    }

    #[test]
    fn counts_match_dimension() {
        assert_eq!(lattice_points(2, &DominantWeight::new(vec![1, 1])).unwrap().len(), 16);
        assert_eq!(lattice_points(3, &DominantWeight::fundamental(3, 3)).unwrap().len(), 14);
        assert_eq!(lattice_points(3, &DominantWeight::zero(3)).unwrap(), vec![MultiExponent::new()]);
        for m1 in 0..=2 {
            for m2 in 0..=2 {
                for m3 in 0..=1 {
                    let w = DominantWeight::new(vec![m1, m2, m3]);
                    assert_eq!(lattice_points(3, &w).unwrap().len() as u128, weyl_dimension(3, &w).unwrap());
                }
            }
        }
    }

    #[test]
    fn contains_examples() {
        let w = DominantWeight::new(vec![1, 1]);
        assert!(contains(2, &w, &MultiExponent::new().with(Root::barred(1, 1), 2)).unwrap());
        assert!(!contains(2, &w, &MultiExponent::new().with(r(1, 1), 2)).unwrap());
        assert!(contains(2, &DominantWeight::fundamental(2, 2), &MultiExponent::new()).unwrap());
    }

    #[test]
    fn json_shape() {
        let p = MultiExponent::new().with(r(1, 2), 1);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[{"root":{"i":1,"j":2,"barred":false},"exp":1}]"#);
        assert_eq!(serde_json::from_str::<MultiExponent>(&s).unwrap(), p);
    }
}
