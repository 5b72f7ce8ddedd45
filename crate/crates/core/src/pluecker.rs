//! Pluecker indices, minors `(I₂, I₁)` and exact sparse polynomials in
//! Pluecker variables.

use crate::matrix::Q;
use crate::tableaux::{is_symplectic_pbw_column, pbw_column_from_set};
use crate::{bar, letter, Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A variable `X_J`: strictly increasing entries, level `k = |J|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlueckerIndex {
    entries: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct IndexJson {
    k: usize,
    #[serde(rename = "J")]
    j: Vec<usize>,
}

impl Serialize for PlueckerIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IndexJson { k: self.level(), j: self.entries.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlueckerIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = IndexJson::deserialize(d)?;
        if v.k != v.j.len() {
            return Err(serde::de::Error::custom("level does not match index length"));
        }
        PlueckerIndex::new(v.j).map_err(serde::de::Error::custom)
    }
}

impl PlueckerIndex {
    /// Requires a strictly increasing sequence of positive values.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() || entries[0] == 0 || entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndex(format!("{entries:?} is not strictly increasing")));
        }
        Ok(PlueckerIndex { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn level(&self) -> usize {
        self.entries.len()
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        match self.entries.last() {
            Some(&m) if m > 2 * n => Err(Error::EntryOutOfRange { entry: m, max: 2 * n }),
            _ if self.level() > n => Err(Error::InvalidIndex(format!("level {} exceeds {n}", self.level()))),
            _ => Ok(()),
        }
    }

    /// `#{r : j_r > k}`.
    pub fn pbw_degree(&self) -> usize {
        pbw_degree_index(self.level(), self)
    }

    pub fn pretty(&self, n: usize, ascii: bool) -> String {
        self.entries.iter().map(|&e| letter(n, e, ascii)).join(",")
    }
}

impl fmt::Display for PlueckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(","))
    }
}

/// Sorts `seq`, returning the index and `(-1)^{inversions}`, or `None` when a
/// value repeats (the alternating variable vanishes).
pub fn normalize_index(seq: &[usize]) -> Result<Option<(PlueckerIndex, i32)>> {
    if seq.is_empty() || seq.contains(&0) {
        return Err(Error::InvalidIndex(format!("{seq:?}")));
    }
    let mut inv = 0usize;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            match seq[a].cmp(&seq[b]) {
                std::cmp::Ordering::Equal => return Ok(None),
                std::cmp::Ordering::Greater => inv += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    let sign = if inv.is_multiple_of(2) { 1 } else { -1 };
    Ok(Some((PlueckerIndex { entries: sorted }, sign)))
}

/// `#{r : j_r > k}` for an index read at level `k`.
pub fn pbw_degree_index(k: usize, j: &PlueckerIndex) -> usize {
    j.entries.iter().filter(|&&e| e > k).count()
}

/// A minor `(I₂, I₁)`: `I₂` collects the bases of barred rows, `I₁` the
/// unbarred rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Minor {
    pub i2: Vec<usize>,
    pub i1: Vec<usize>,
}

impl Minor {
    pub fn new(n: usize, mut i2: Vec<usize>, mut i1: Vec<usize>) -> Result<Self> {
        i2.sort_unstable();
        i1.sort_unstable();
        let bad = |v: &[usize]| v.windows(2).any(|w| w[0] == w[1]) || v.iter().any(|&x| x == 0 || x > n);
        if bad(&i1) || bad(&i2) {
            return Err(Error::InvalidMinor(format!("({i2:?}, {i1:?}) is not a pair of subsets of 1..={n}")));
        }
        if i1.len() + i2.len() > n || i1.len() + i2.len() == 0 {
            return Err(Error::InvalidMinor(format!("size {} outside 1..={n}", i1.len() + i2.len())));
        }
        Ok(Minor { i2, i1 })
    }

    pub fn size(&self) -> usize {
        self.i1.len() + self.i2.len()
    }

    /// `Γ = I₁ ∩ I₂`, ascending.
    pub fn gamma(&self) -> Vec<usize> {
        self.i1.iter().copied().filter(|x| self.i2.contains(x)).collect()
    }

    /// `{1..n} \ (I₁ ∪ I₂)`, ascending.
    pub fn available(&self, n: usize) -> Vec<usize> {
        (1..=n).filter(|x| !self.i1.contains(x) && !self.i2.contains(x)).collect()
    }

    pub fn pretty(&self) -> String {
        format!("({{{}}},{{{}}})", self.i2.iter().join(","), self.i1.iter().join(","))
    }
}

/// Row sequence `(b̄₁,…, a_last,…,a₁, γ̄_λ, γ_λ, …, γ̄₁, γ₁)` of the computed minor.
pub fn computed_minor(n: usize, m: &Minor) -> Result<Vec<usize>> {
    let m = Minor::new(n, m.i2.clone(), m.i1.clone())?;
    let gamma = m.gamma();
    let a: Vec<usize> = m.i1.iter().copied().filter(|x| !gamma.contains(x)).collect();
    let b: Vec<usize> = m.i2.iter().copied().filter(|x| !gamma.contains(x)).collect();
    let mut seq: Vec<usize> = b.iter().map(|&x| bar(n, x)).collect();
    seq.extend(a.iter().rev());
    for &g in gamma.iter().rev() {
        seq.push(bar(n, g));
        seq.push(g);
    }
    Ok(seq)
}

/// Componentwise `h < g` on equal-length ascending sequences (`≤` everywhere,
/// not all equal).
pub fn seq_less(h: &[usize], g: &[usize]) -> bool {
    h.len() == g.len() && h.iter().zip(g).all(|(a, b)| a <= b) && h != g
}

fn witness_exists(n: usize, m: &Minor, reverse: bool) -> bool {
    let gamma = m.gamma();
    m.available(n).into_iter().combinations(gamma.len()).any(|t| {
        if reverse {
            seq_less(&t, &gamma)
        } else {
            seq_less(&gamma, &t)
        }
    }) || gamma.is_empty()
}

/// There is `T ⊂ {1..n} \ (I₁ ∪ I₂)` with `|T| = |Γ|` and `T < Γ`.
pub fn is_reverse_admissible(n: usize, m: &Minor) -> bool {
    witness_exists(n, m, true)
}

/// There is `T ⊂ {1..n} \ (I₁ ∪ I₂)` with `|T| = |Γ|` and `T > Γ`.
pub fn is_admissible(n: usize, m: &Minor) -> bool {
    witness_exists(n, m, false)
}

/// The PBW column on the entries of the computed minor (not necessarily
/// symplectic).
pub fn minor_to_pbw_column(n: usize, m: &Minor) -> Result<Vec<usize>> {
    let seq = computed_minor(n, m)?;
    Ok(pbw_column_from_set(seq.len(), &seq))
}

/// The symplectic PBW column of a reverse-admissible minor.
pub fn minor_to_column(n: usize, m: &Minor) -> Result<Vec<usize>> {
    if !is_reverse_admissible(n, m) {
        return Err(Error::NotReverseAdmissible);
    }
    minor_to_pbw_column(n, m)
}

/// Filling from the minimal witness: `γ̄_i` at row `ν_i`, `γ_i` at row `γ_i`,
/// `a_i` at row `a_i`, the `b̄_i` descending in the free rows. `None` when a
/// prescribed row exceeds the column length.
pub fn witness_filling(n: usize, m: &Minor) -> Option<Vec<usize>> {
    let k = m.size();
    let gamma = m.gamma();
    let nu = m
        .available(n)
        .into_iter()
        .combinations(gamma.len())
        .filter(|t| seq_less(t, &gamma) || gamma.is_empty())
        .min()?;
    let mut col = vec![0usize; k];
    let mut place = |row: usize, v: usize| -> Option<()> {
        let slot = col.get_mut(row.checked_sub(1)?)?;
        (*slot == 0).then(|| *slot = v)
    };
    for (&g, &v) in gamma.iter().zip(&nu) {
        place(v, bar(n, g))?;
        place(g, g)?;
    }
    for &a in m.i1.iter().filter(|x| !gamma.contains(x)) {
        place(a, a)?;
    }
    let mut bs: Vec<usize> = m.i2.iter().filter(|x| !gamma.contains(x)).map(|&b| bar(n, b)).collect();
    bs.sort_unstable_by(|x, y| y.cmp(x));
    let mut it = bs.into_iter();
    for slot in col.iter_mut().filter(|s| **s == 0) {
        *slot = it.next()?;
    }
    Some(col)
}

/// Barred entries give `I₂`, unbarred ones `I₁`.
pub fn column_to_minor(n: usize, col: &[usize]) -> Result<Minor> {
    let i2 = col.iter().filter(|&&e| e > n).map(|&e| bar(n, e)).collect();
    let i1 = col.iter().filter(|&&e| e <= n).copied().collect();
    Minor::new(n, i2, i1)
}

/// `|I₂| + #{i ∈ I₁ : i > k}`.
pub fn pbw_degree_minor(m: &Minor) -> usize {
    let k = m.size();
    m.i2.len() + m.i1.iter().filter(|&&i| i > k).count()
}

/// Whether a column is symplectic, phrased through its minor.
pub fn column_is_symplectic(n: usize, col: &[usize]) -> bool {
    is_symplectic_pbw_column(n, col)
}

/// Which coordinate ring a polynomial lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ring {
    Classical,
    Degenerate,
    SFamily,
}

/// A monomial: sorted multiset of variables plus an exponent of `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub vars: Vec<PlueckerIndex>,
    pub s_deg: u32,
}

impl Monomial {
    pub fn new(mut vars: Vec<PlueckerIndex>) -> Self {
        vars.sort();
        Monomial { vars, s_deg: 0 }
    }

    pub fn one() -> Self {
        Monomial { vars: vec![], s_deg: 0 }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().cloned());
        vars.sort();
        Monomial { vars, s_deg: self.s_deg + other.s_deg }
    }

    /// Total PBW-degree of the variables.
    pub fn pbw_degree(&self) -> usize {
        self.vars.iter().map(PlueckerIndex::pbw_degree).sum()
    }

    /// Number of variables at each level `1..=n`.
    pub fn multidegree(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for v in &self.vars {
            d[v.level() - 1] += 1;
        }
        d
    }
}

/// Exact sparse polynomial in Pluecker variables with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    pub ring: Ring,
    terms: BTreeMap<Monomial, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    s_deg: Option<u32>,
    vars: Vec<PlueckerIndex>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                s_deg: (self.ring == Ring::SFamily).then_some(m.s_deg),
                vars: m.vars.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial { ring, terms: BTreeMap::new() }
    }

    pub fn constant(ring: Ring, c: BigInt) -> Self {
        let mut p = Polynomial::zero(ring);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(ring: Ring, j: PlueckerIndex) -> Self {
        Polynomial::monomial(ring, Monomial::new(vec![j]), BigInt::one())
    }

    pub fn monomial(ring: Ring, m: Monomial, c: BigInt) -> Self {
        let mut p = Polynomial::zero(ring);
        p.add_term(m, c);
        p
    }

    /// Signed variable for an arbitrary sequence; zero on repeated entries.
    pub fn var_seq(ring: Ring, seq: &[usize]) -> Result<Self> {
        Ok(match normalize_index(seq)? {
            None => Polynomial::zero(ring),
            Some((j, s)) => Polynomial::monomial(ring, Monomial::new(vec![j]), BigInt::from(s)),
        })
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let mut out = Polynomial::zero(self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Polynomial::zero(self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn with_ring(&self, ring: Ring) -> Self {
        Polynomial { ring, terms: self.terms.clone() }
    }

    /// Map each monomial, keeping coefficients.
    pub fn map_monomials<F: Fn(&Monomial) -> Monomial>(&self, ring: Ring, f: F) -> Self {
        let mut out = Polynomial::zero(ring);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        let mut out = Polynomial::zero(self.ring);
        for (m, c) in self.terms.iter().filter(|(m, _)| keep(m)) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Leading (first in the term order) coefficient.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    /// Sign-normalized copy: the leading coefficient is positive.
    pub fn normalized_sign(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Exact evaluation; `s` is ignored (use with `s_deg = 0` polynomials or
    /// evaluate the s-family elsewhere).
    pub fn eval(&self, point: &BTreeMap<PlueckerIndex, Q>) -> Result<Q> {
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut v = Q::from_integer(c.clone());
            for x in &m.vars {
                let val = point.get(x).ok_or_else(|| Error::MissingVariable(x.to_string()))?;
                v *= val;
            }
            total += v;
        }
        Ok(total)
    }

    /// Text form in the `X_{…}` notation.
    pub fn pretty(&self, n: usize, ascii: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sup = if self.ring == Ring::Degenerate { "^a" } else { "" };
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut body: Vec<String> = Vec::new();
            if !abs.is_one() || (m.vars.is_empty() && m.s_deg == 0) {
                body.push(abs.to_string());
            }
            if m.s_deg > 0 {
                body.push(if m.s_deg == 1 { "s".into() } else { format!("s^{}", m.s_deg) });
            }
            body.extend(m.vars.iter().map(|v| format!("X{sup}_{{{}}}", v.pretty(n, ascii))));
            out.push_str(&body.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(v: &[usize]) -> PlueckerIndex {
        PlueckerIndex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_index(&[3, 1]).unwrap(), Some((idx(&[1, 3]), -1)));
        assert_eq!(normalize_index(&[7, 2, 8, 1]).unwrap(), Some((idx(&[1, 2, 7, 8]), 1)));
        assert_eq!(normalize_index(&[2, 2]).unwrap(), None);
    }

    #[test]
    fn computed_minor_examples() {
        let m = Minor::new(4, vec![1, 2], vec![1, 2]).unwrap();
        assert_eq!(computed_minor(4, &m).unwrap(), vec![7, 2, 8, 1]);
        let m = Minor::new(4, vec![1, 3], vec![1, 3]).unwrap();
        assert_eq!(computed_minor(4, &m).unwrap(), vec![6, 3, 8, 1]);
        let m = Minor::new(4, vec![], vec![1, 2, 3]).unwrap();
        assert_eq!(computed_minor(4, &m).unwrap(), vec![3, 2, 1]);
        assert!(Minor::new(2, vec![1, 2], vec![1]).is_err());
    }

    #[test]
    fn admissibility_examples() {
        let m = |i2: Vec<usize>, i1: Vec<usize>, n| Minor::new(n, i2, i1).unwrap();
        assert!(!is_reverse_admissible(4, &m(vec![1, 2], vec![1, 2], 4)));
        // γ₁ = 1 admits no smaller witness
        assert!(!is_reverse_admissible(4, &m(vec![1, 3], vec![1, 3], 4)));
        assert!(is_reverse_admissible(4, &m(vec![2], vec![2], 4)));
        assert!(is_reverse_admissible(3, &m(vec![1], vec![2], 3)));
        assert!(is_admissible(2, &m(vec![1], vec![1], 2)));
        assert!(!is_admissible(2, &m(vec![2], vec![2], 2)));
        assert!(is_admissible(2, &m(vec![], vec![1, 2], 2)));
    }

    #[test]
    fn pbw_column_display() {
        let m = |g: Vec<usize>| Minor::new(4, g.clone(), g).unwrap();
        // (1, 1̄, 3, 3̄) and (1, 1̄, 4̄, 4) top to bottom
        assert_eq!(minor_to_pbw_column(4, &m(vec![1, 3])).unwrap(), vec![1, 8, 3, 6]);
        assert_eq!(minor_to_pbw_column(4, &m(vec![1, 4])).unwrap(), vec![1, 8, 5, 4]);
        assert_eq!(minor_to_column(4, &m(vec![1, 3])), Err(Error::NotReverseAdmissible));
        let hw = Minor::new(4, vec![], vec![1, 2, 3]).unwrap();
        assert_eq!(minor_to_column(4, &hw).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(pbw_degree_index(2, &idx(&[1, 2])), 0);
        assert_eq!(pbw_degree_index(2, &idx(&[2, 3])), 1);
        assert_eq!(pbw_degree_index(4, &idx(&[1, 2, 7, 8])), 2);
        assert_eq!(pbw_degree_minor(&Minor::new(4, vec![1, 2], vec![1, 2]).unwrap()), 2);
        assert_eq!(pbw_degree_minor(&Minor::new(4, vec![], vec![1, 2]).unwrap()), 0);
        assert_eq!(pbw_degree_minor(&Minor::new(4, vec![1], vec![3]).unwrap()), 2);
    }

    #[test]
    fn polynomial_basics() {
        let r = Ring::Classical;
        let a = Polynomial::var(r, idx(&[1, 2]));
        let b = Polynomial::var(r, idx(&[4]));
        let p = a.mul(&b).unwrap();
        let mut pt = BTreeMap::new();
        pt.insert(idx(&[1, 2]), crate::matrix::q(1));
        pt.insert(idx(&[4]), crate::matrix::q(2));
        assert_eq!(p.eval(&pt).unwrap(), crate::matrix::q(2));
        assert_eq!(p.add(&Polynomial::zero(r)).unwrap(), p);
        assert!(Polynomial::var_seq(r, &[2, 2]).unwrap().is_zero());
        assert_eq!(Polynomial::var_seq(r, &[3, 1]).unwrap(), Polynomial::var(r, idx(&[1, 3])).neg());
        assert!(matches!(Polynomial::var(r, idx(&[3])).eval(&pt), Err(Error::MissingVariable(_))));
        assert!(a.add(&Polynomial::zero(Ring::Degenerate)).is_err());
    }

    #[test]
    fn polynomial_json() {
        let p = Polynomial::var(Ring::Classical, idx(&[1, 3])).neg();
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"[{"coeff":"-1","s_deg":null,"vars":[{"k":2,"J":[1,3]}]}]"#);
    }
}
