//! Symplectic PBW tableaux and their semistandard predicates.

use crate::liealg::{DominantWeight, WeightVector};
use crate::{bar, letter, Error, Result};
use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Column lengths `μ_1 ≥ μ_2 ≥ …` of a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    pub columns: Vec<usize>,
}

impl Shape {
    pub fn of(lambda: &DominantWeight) -> Self {
        Shape { columns: lambda.column_lengths() }
    }

    /// Row lengths `λ_1 ≥ λ_2 ≥ …`, without trailing zeros.
    pub fn partition(&self) -> Vec<u32> {
        let rows = self.columns.first().copied().unwrap_or(0);
        (1..=rows).map(|r| self.columns.iter().filter(|&&c| c >= r).count() as u32).collect()
    }

    pub fn weight(&self, n: usize) -> Result<DominantWeight> {
        let mut p = self.partition();
        if p.len() > n {
            return Err(Error::MalformedTableau(format!("column longer than {n}")));
        }
        p.resize(n, 0);
        DominantWeight::from_partition(&p)
    }

    pub fn is_valid(&self, n: usize) -> bool {
        self.columns.windows(2).all(|w| w[0] >= w[1]) && self.columns.iter().all(|&c| c >= 1 && c <= n)
    }
}

/// A filling stored column-major; entries are encoded `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub columns: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<u32>,
    columns: Vec<Vec<usize>>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson { shape: self.shape().partition(), columns: self.columns.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        let t = Tableau { columns: j.columns };
        if t.shape().partition() != j.shape.iter().copied().filter(|&x| x > 0).collect::<Vec<_>>() {
            return Err(serde::de::Error::custom("shape does not match columns"));
        }
        Ok(t)
    }
}

impl Tableau {
    pub fn new(columns: Vec<Vec<usize>>) -> Self {
        Tableau { columns }
    }

    pub fn shape(&self) -> Shape {
        Shape { columns: self.columns.iter().map(Vec::len).collect() }
    }

    /// Tableau with every row `i` filled by `i`.
    pub fn highest_weight(lambda: &DominantWeight) -> Self {
        Tableau { columns: lambda.column_lengths().into_iter().map(|k| (1..=k).collect()).collect() }
    }

    /// Builds a tableau from its rows (top to bottom).
    pub fn from_rows(rows: &[Vec<usize>]) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        let columns = (0..width).map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()).collect();
        Tableau { columns }
    }

    pub fn check_entries(&self, n: usize) -> Result<()> {
        for &e in self.columns.iter().flatten() {
            if e == 0 || e > 2 * n {
                return Err(Error::EntryOutOfRange { entry: e, max: 2 * n });
            }
        }
        if !self.shape().is_valid(n) {
            return Err(Error::MalformedTableau(format!("invalid shape {:?}", self.shape().columns)));
        }
        Ok(())
    }

    pub fn pretty(&self, n: usize, ascii: bool) -> String {
        let rows = self.columns.first().map_or(0, Vec::len);
        let cells: Vec<Vec<String>> =
            self.columns.iter().map(|c| c.iter().map(|&e| letter(n, e, ascii)).collect()).collect();
        let w = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        (0..rows).map(|r| cells.iter().filter_map(|c| c.get(r)).map(|s| format!("{s:>w$}")).join(" ")).join("\n")
    }
}

/// Conditions (i) and (ii): positioned small entries, free entries decreasing below.
pub fn is_pbw_column(col: &[usize]) -> bool {
    let k = col.len();
    for (r, &e) in col.iter().enumerate() {
        let row = r + 1;
        if e <= k && e != row {
            return false;
        }
        if e != row && col[r + 1..].iter().any(|&below| below >= e) {
            return false;
        }
    }
    true
}

/// Condition (iii): if `i` sits at row `i` and `ī` occurs, `ī` lies above it.
pub fn satisfies_symplectic_condition(n: usize, col: &[usize]) -> bool {
    col.iter().enumerate().all(|(r, &e)| {
        let row = r + 1;
        if e != row || e > n {
            return true;
        }
        match col.iter().position(|&x| x == bar(n, e)) {
            Some(p) => p < r,
            None => true,
        }
    })
}

pub fn is_symplectic_pbw_column(n: usize, col: &[usize]) -> bool {
    !col.is_empty()
        && col.len() <= n
        && col.iter().all(|&e| e >= 1 && e <= 2 * n)
        && is_pbw_column(col)
        && satisfies_symplectic_condition(n, col)
}

/// Condition (iv) for an adjacent pair: every entry of `right` at row `i` is
/// bounded by some entry of `left` at a row `≥ i`.
pub fn columns_compatible(left: &[usize], right: &[usize]) -> bool {
    if right.len() > left.len() {
        return false;
    }
    // suffix maxima of the left column
    let mut sm = left.to_vec();
    for r in (0..sm.len().saturating_sub(1)).rev() {
        sm[r] = sm[r].max(sm[r + 1]);
    }
    right.iter().zip(&sm).all(|(d, m)| m >= d)
}

/// First row (one-based) where condition (iv) fails for the pair.
pub fn first_incompatible_row(left: &[usize], right: &[usize]) -> Option<usize> {
    let mut sm = left.to_vec();
    for r in (0..sm.len().saturating_sub(1)).rev() {
        sm[r] = sm[r].max(sm[r + 1]);
    }
    (0..right.len()).find(|&r| sm.get(r).is_none_or(|m| *m < right[r])).map(|r| r + 1)
}

pub fn is_symplectic_pbw(n: usize, t: &Tableau) -> Result<bool> {
    t.check_entries(n)?;
    Ok(t.columns.iter().all(|c| is_symplectic_pbw_column(n, c)))
}

pub fn is_symplectic_pbw_semistandard(n: usize, t: &Tableau) -> Result<bool> {
    Ok(is_symplectic_pbw(n, t)? && t.columns.windows(2).all(|w| columns_compatible(&w[0], &w[1])))
}

/// Type A PBW-semistandard: column conditions (i), (ii) and condition (iv),
/// over the alphabet `1..=n2`.
pub fn is_pbw_semistandard_type_a(n2: usize, t: &Tableau) -> Result<bool> {
    for &e in t.columns.iter().flatten() {
        if e == 0 || e > n2 {
            return Err(Error::EntryOutOfRange { entry: e, max: n2 });
        }
    }
    if t.columns.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Err(Error::MalformedTableau("column lengths increase".into()));
    }
    Ok(t.columns.iter().all(|c| is_pbw_column(c)) && t.columns.windows(2).all(|w| columns_compatible(&w[0], &w[1])))
}

/// The unique column of length `k` satisfying (i) and (ii) with the given
/// entry set: small entries at their rows, the others decreasing in the gaps.
pub fn pbw_column_from_set(k: usize, set: &[usize]) -> Vec<usize> {
    let mut col = vec![0; k];
    let mut free: Vec<usize> = Vec::new();
    for &e in set {
        if e <= k {
            col[e - 1] = e;
        } else {
            free.push(e);
        }
    }
    free.sort_unstable_by(|a, b| b.cmp(a));
    let mut it = free.into_iter();
    for slot in col.iter_mut().filter(|x| **x == 0) {
        *slot = it.next().expect("set has k elements");
    }
    col
}

/// All symplectic PBW columns of length `k`, in lexicographic order.
pub fn symplectic_columns(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1..=2 * n)
        .combinations(k)
        .map(|s| pbw_column_from_set(k, &s))
        .filter(|c| satisfies_symplectic_condition(n, c))
        .collect();
    out.sort();
    out
}

/// All symplectic PBW-semistandard tableaux of shape `λ`, lexicographic in
/// column-major order.
pub fn enumerate_tableaux(n: usize, lambda: &DominantWeight) -> Result<Vec<Tableau>> {
    lambda.check_rank(n)?;
    let lengths = lambda.column_lengths();
    let cols_by_len: Vec<Vec<Vec<usize>>> =
        (0..=n).map(|k| if k == 0 { vec![] } else { symplectic_columns(n, k) }).collect();
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::with_capacity(lengths.len());

    fn rec(lengths: &[usize], cols_by_len: &[Vec<Vec<usize>>], current: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        let pos = current.len();
        if pos == lengths.len() {
            out.push(Tableau { columns: current.clone() });
            return;
        }
        for c in &cols_by_len[lengths[pos]] {
            if pos > 0 && !columns_compatible(&current[pos - 1], c) {
                continue;
            }
            current.push(c.clone());
            rec(lengths, cols_by_len, current, out);
            current.pop();
        }
    }

    rec(&lengths, &cols_by_len, &mut current, &mut out);
    Ok(out)
}

/// `Σ ε_i` over unbarred entries minus `Σ ε_j` over barred entries.
pub fn tableau_weight(n: usize, t: &Tableau) -> WeightVector {
    let mut w = WeightVector::zero(n);
    for &e in t.columns.iter().flatten() {
        if e <= n {
            w.0[e - 1] += 1;
        } else {
            w.0[bar(n, e) - 1] -= 1;
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_examples() {
        // n = 3: 2̄ = 5, 3̄ = 4
        assert!(is_symplectic_pbw_column(3, &[1, 5, 4]));
        assert!(is_symplectic_pbw_column(3, &[1, 4, 3]));
        assert!(!is_symplectic_pbw_column(3, &[1, 3, 4]));
        assert!(is_symplectic_pbw_column(2, &[1, 3]));
        // (1, 1̄) violates (iii) at n = 2
        assert!(!is_symplectic_pbw_column(2, &[1, 4]));
        assert!(is_symplectic_pbw_column(2, &[4, 2]));
    }

    #[test]
    fn single_column_counts() {
        // dim V_{ω_k} = C(2n,k) - C(2n,k-2)
        assert_eq!(symplectic_columns(3, 3).len(), 14);
        assert_eq!(symplectic_columns(2, 2).len(), 5);
        assert_eq!(symplectic_columns(4, 2).len(), 27);
    }

    #[test]
    fn semistandard_examples() {
        // rows (1̄, 2̄) / (2̄): columns (4,3), (3)
        let t = Tableau::from_rows(&[vec![4, 3], vec![3]]);
        assert!(is_symplectic_pbw_semistandard(2, &t).unwrap());
        let bad = Tableau::from_rows(&[vec![1, 4], vec![2]]);
        assert!(!is_symplectic_pbw_semistandard(2, &bad).unwrap());
        assert_eq!(tableau_weight(2, &t).0, vec![-1, -2]);
    }

    #[test]
    fn n2_census() {
        let all = enumerate_tableaux(2, &DominantWeight::new(vec![1, 1])).unwrap();
        assert_eq!(all.len(), 16);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_tableaux(2, &DominantWeight::zero(2)).unwrap(), vec![Tableau::new(vec![])]);
    }

    #[test]
    fn json_roundtrip() {
        let t = Tableau::from_rows(&[vec![4, 3], vec![3]]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"shape":[2,1],"columns":[[4,3],[3]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&s).unwrap(), t);
        assert!(serde_json::from_str::<Tableau>(r#"{"shape":[1,1],"columns":[[4,3],[3]]}"#).is_err());
    }

    #[test]
    fn pretty_bars() {
        let t = Tableau::from_rows(&[vec![4, 3], vec![3]]);
        assert_eq!(t.pretty(2, true), "1' 2'\n2'");
    }
}
