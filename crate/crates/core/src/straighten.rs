//! Rewriting Pluecker monomials into the basis of symplectic
//! PBW-semistandard tableau monomials.
//!
//! Termination measure: a monomial `X_T` of fixed multidegree is ranked by
//! `(PBW-degree, reading word)`, where a larger PBW-degree ranks lower and
//! reading words compare lexicographically. The reading word lists the
//! columns of the canonical arrangement from right to left, each from bottom
//! to top. Every accepted rewrite replaces a term by terms of strictly lower
//! rank, which is checked as the rewrite is built. The PBW-degree of a fixed
//! multidegree is bounded, so the measure is well founded.

use crate::pluecker::{column_to_minor, Minor, Monomial, PlueckerIndex, Polynomial, Ring};
use crate::relations::{
    degenerate_component, exchange_relation, symplectic_relation, RelationId, RelationKind, RelationParams,
};
use crate::tableaux::{
    columns_compatible, first_incompatible_row, is_symplectic_pbw_column, pbw_column_from_set, Tableau,
};
use crate::{Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

/// A product `X_T` of column variables. Each column is read as a set, so
/// `X_T` carries no sign from the order of entries inside a column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableauMonomial {
    columns: Vec<PlueckerIndex>,
}

#[derive(Serialize, Deserialize)]
struct TableauMonomialJson {
    columns: Vec<Vec<usize>>,
}

impl Serialize for TableauMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauMonomialJson { columns: self.columns.iter().map(|c| c.entries().to_vec()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TableauMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableauMonomialJson::deserialize(d)?;
        TableauMonomial::from_columns(&j.columns).map_err(serde::de::Error::custom)
    }
}

fn reversed(c: &PlueckerIndex) -> Vec<usize> {
    let mut v = pbw_column_from_set(c.level(), c.entries());
    v.reverse();
    v
}

/// Longer columns first; equal lengths by descending bottom-up reading of
/// their PBW columns.
fn arrange(columns: &mut [PlueckerIndex]) {
    columns.sort_by(|a, b| b.level().cmp(&a.level()).then_with(|| reversed(b).cmp(&reversed(a))));
}

impl TableauMonomial {
    pub fn new(mut columns: Vec<PlueckerIndex>) -> Self {
        arrange(&mut columns);
        TableauMonomial { columns }
    }

    /// Columns given as entry lists in any order; repeated entries are an
    /// error.
    pub fn from_columns(columns: &[Vec<usize>]) -> Result<Self> {
        let cols = columns
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                PlueckerIndex::new(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(cols))
    }

    pub fn from_tableau(t: &Tableau) -> Result<Self> {
        Self::from_columns(&t.columns)
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        Self::new(m.vars.clone())
    }

    pub fn columns(&self) -> &[PlueckerIndex] {
        &self.columns
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        self.columns.iter().try_for_each(|c| c.check_rank(n))
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::new(self.columns.clone())
    }

    /// The canonical arrangement as a filling with PBW columns.
    pub fn tableau(&self) -> Tableau {
        Tableau::new(self.columns.iter().map(|c| pbw_column_from_set(c.level(), c.entries())).collect())
    }

    pub fn pbw_degree(&self) -> usize {
        self.columns.iter().map(PlueckerIndex::pbw_degree).sum()
    }

    pub fn measure(&self) -> Measure {
        Measure { pbw_degree: self.pbw_degree(), reading_word: reading_word(&self.tableau()) }
    }

    /// Symplectic PBW-semistandard in the canonical arrangement.
    pub fn is_standard(&self, n: usize) -> bool {
        let t = self.tableau();
        t.columns.iter().all(|c| is_symplectic_pbw_column(n, c))
            && t.columns.windows(2).all(|w| columns_compatible(&w[0], &w[1]))
    }

    pub fn pretty(&self, n: usize, ascii: bool) -> String {
        self.to_monomial().vars.iter().map(|v| format!("X_{{{}}}", v.pretty(n, ascii))).join(" ")
    }
}

fn reading_word(t: &Tableau) -> Vec<usize> {
    t.columns.iter().rev().flat_map(|c| c.iter().rev().copied()).collect()
}

/// Rank of a monomial in the termination order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Measure {
    pub pbw_degree: usize,
    pub reading_word: Vec<usize>,
}

impl Ord for Measure {
    fn cmp(&self, other: &Self) -> Ordering {
        other.pbw_degree.cmp(&self.pbw_degree).then_with(|| self.reading_word.cmp(&other.reading_word))
    }
}

impl PartialOrd for Measure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `T⁽¹⁾ > T⁽²⁾` when some entry `(i₀, j₀)` is larger while the entries to
/// its right in row `i₀` and below it in column `j₀` agree.
pub fn tableau_dominates(t1: &Tableau, t2: &Tableau) -> Result<bool> {
    if t1.shape() != t2.shape() {
        return Err(Error::MalformedTableau("tableaux of different shapes".into()));
    }
    let c = &t1.columns;
    let d = &t2.columns;
    for j0 in 0..c.len() {
        for i0 in 0..c[j0].len() {
            if c[j0][i0] > d[j0][i0]
                && (j0 + 1..c.len()).filter(|&j| c[j].len() > i0).all(|j| c[j][i0] == d[j][i0])
                && (i0 + 1..c[j0].len()).all(|i| c[j0][i] == d[j0][i])
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Lexicographic comparison of reading words (columns right to left, each
/// bottom to top). A strictly larger reading word implies
/// [`tableau_dominates`].
pub fn tableau_order_compare(t1: &Tableau, t2: &Tableau) -> Result<Ordering> {
    if t1.shape() != t2.shape() {
        return Err(Error::MalformedTableau("tableaux of different shapes".into()));
    }
    Ok(reading_word(t1).cmp(&reading_word(t2)))
}

/// `L ⊴ J`: smaller entry sum, or equal sums and the last nonzero entry of
/// `L − J` positive.
pub fn minor_order_compare(l: &[usize], j: &[usize]) -> Result<Ordering> {
    if l.len() != j.len() {
        return Err(Error::InvalidIndex(format!("{l:?} and {j:?} differ in length")));
    }
    let sl: usize = l.iter().sum();
    let sj: usize = j.iter().sum();
    if sl != sj {
        return Ok(sl.cmp(&sj));
    }
    Ok(match l.iter().zip(j).rev().find(|(a, b)| a != b) {
        None => Ordering::Equal,
        Some((a, b)) if a > b => Ordering::Less,
        Some(_) => Ordering::Greater,
    })
}

/// The vector a minor is compared by under `⊴`: codes of `Ī₂` ascending, then
/// `I₁` ascending. Listing computed minors verbatim does not make expansion
/// targets smaller in general, e.g. `({2,3},{2,3})` at `n = 4`.
pub fn minor_order_vector(n: usize, m: &Minor) -> Vec<usize> {
    let mut bars: Vec<usize> = m.i2.iter().map(|&i| crate::bar(n, i)).collect();
    bars.sort_unstable();
    bars.into_iter().chain(m.i1.iter().copied()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    pub from: TableauMonomial,
    pub relation: String,
    /// Whether the relation is the one prescribed (first non-symplectic
    /// column, or first incompatible pair at its first bad row) rather than
    /// one found by the fallback search.
    pub prescribed: bool,
    pub replacement: Vec<(String, TableauMonomial)>,
    pub measure_before: Measure,
    pub measure_after_max: Option<Measure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Straightened {
    pub ring: Ring,
    pub terms: Vec<(Tableau, String)>,
    pub steps: usize,
    pub trace: Vec<RewriteStep>,
}

struct Rewrite {
    relation: String,
    prescribed: bool,
    terms: Vec<(BigInt, TableauMonomial)>,
}

/// Number of monomials with the multidegree of `m`. With memoization each
/// monomial is rewritten at most once, so this bounds the number of steps.
pub fn step_bound(n: usize, m: &Monomial) -> u128 {
    m.multidegree(n)
        .iter()
        .enumerate()
        .map(|(i, &mult)| {
            let vars = binomial(2 * n as u128, i as u128 + 1);
            binomial(vars + mult as u128 - 1, mult as u128)
        })
        .fold(1u128, |a, b| a.saturating_mul(b))
}

/// Straightening in one ring with a shared memo of straightened monomials.
pub struct Straightener {
    n: usize,
    ring: Ring,
    memo: RwLock<HashMap<TableauMonomial, Polynomial>>,
}

impl Straightener {
    pub fn new(n: usize, ring: Ring) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if ring == Ring::SFamily {
            return Err(Error::RingMismatch("straightening is defined for the classical and degenerate rings".into()));
        }
        Ok(Straightener { n, ring, memo: RwLock::new(HashMap::new()) })
    }

    fn relation(&self, p: Polynomial) -> Result<Polynomial> {
        match self.ring {
            Ring::Degenerate => degenerate_component(&p),
            _ => Ok(p),
        }
    }

    /// Accepts relation `p` as a rewrite of the factor `head` inside `m` when
    /// `head` has coefficient `±1` and every other term lands strictly below
    /// `m` in the termination order.
    fn accept(
        &self,
        m: &TableauMonomial,
        head: &[PlueckerIndex],
        p: &Polynomial,
    ) -> Option<Vec<(BigInt, TableauMonomial)>> {
        let hm = Monomial::new(head.to_vec());
        let c = p.coeff(&hm);
        if !c.abs().is_one() {
            return None;
        }
        let mut rest = m.columns.clone();
        for h in head {
            let pos = rest.iter().position(|x| x == h)?;
            rest.remove(pos);
        }
        let before = m.measure();
        let mut out = Vec::new();
        for (mono, coeff) in p.terms() {
            if *mono == hm {
                continue;
            }
            let mut cols = rest.clone();
            cols.extend(mono.vars.iter().cloned());
            let t = TableauMonomial::new(cols);
            if t.measure() >= before {
                return None;
            }
            out.push((-coeff * &c, t));
        }
        Some(out)
    }

    fn symplectic_candidate(&self, m: &TableauMonomial, col: &PlueckerIndex) -> Result<Option<Rewrite>> {
        let pbw = pbw_column_from_set(col.level(), col.entries());
        let minor = column_to_minor(self.n, &pbw)?;
        let p = self.relation(symplectic_relation(self.n, &minor)?)?;
        let kind = match self.ring {
            Ring::Degenerate => RelationKind::SymplecticDegenerate,
            _ => RelationKind::Symplectic,
        };
        let id = RelationId { kind, params: RelationParams::Minor { i2: minor.i2.clone(), i1: minor.i1.clone() } };
        Ok(self.accept(m, std::slice::from_ref(col), &p).map(|terms| Rewrite {
            relation: id.label(self.n, true),
            prescribed: false,
            terms,
        }))
    }

    fn exchange_candidate(
        &self,
        m: &TableauMonomial,
        l: &PlueckerIndex,
        j: &PlueckerIndex,
        swap: &[usize],
    ) -> Result<Option<Rewrite>> {
        let ls = pbw_column_from_set(l.level(), l.entries());
        let js = pbw_column_from_set(j.level(), j.entries());
        let full = exchange_relation(Ring::Classical, &ls, &js, swap)?;
        if full.is_zero() {
            return Ok(None);
        }
        let p = self.relation(full)?;
        let kind = match self.ring {
            Ring::Degenerate => RelationKind::PlueckerDegenerate,
            _ => RelationKind::Pluecker,
        };
        let label =
            RelationId { kind, params: RelationParams::Exchange { l: ls, j: js, t: swap.len() } }.label(self.n, true);
        let label = if swap.iter().copied().eq(0..swap.len()) {
            label
        } else {
            format!("{label}[{}]", swap.iter().map(|s| s + 1).join(","))
        };
        Ok(self.accept(m, &[l.clone(), j.clone()], &p).map(|terms| Rewrite {
            relation: label,
            prescribed: false,
            terms,
        }))
    }

    fn find_rewrite(&self, m: &TableauMonomial) -> Result<Rewrite> {
        let t = m.tableau();
        let cols = &m.columns;
        // Prescribed choice first.
        if let Some(i) = t.columns.iter().position(|c| !is_symplectic_pbw_column(self.n, c)) {
            if let Some(mut r) = self.symplectic_candidate(m, &cols[i])? {
                r.prescribed = true;
                return Ok(r);
            }
        } else if let Some(i) = t.columns.windows(2).position(|w| !columns_compatible(&w[0], &w[1])) {
            let row = first_incompatible_row(&t.columns[i], &t.columns[i + 1]).expect("incompatible pair");
            let swap: Vec<usize> = (0..row).collect();
            if let Some(mut r) = self.exchange_candidate(m, &cols[i], &cols[i + 1], &swap)? {
                r.prescribed = true;
                return Ok(r);
            }
        }
        // Fallback: every symplectic relation on a non-symplectic column, then
        // every exchange between two columns.
        for (i, c) in t.columns.iter().enumerate() {
            if !is_symplectic_pbw_column(self.n, c) {
                if let Some(r) = self.symplectic_candidate(m, &cols[i])? {
                    return Ok(r);
                }
            }
        }
        for (a, b) in (0..cols.len()).tuple_combinations() {
            for (x, y) in [(a, b), (b, a)] {
                if cols[x].level() < cols[y].level()
                    || (x > y && cols[x].level() == cols[y].level() && cols[x] == cols[y])
                {
                    continue;
                }
                for size in 1..=cols[y].level() {
                    for swap in (0..cols[y].level()).combinations(size) {
                        if let Some(r) = self.exchange_candidate(m, &cols[x], &cols[y], &swap)? {
                            return Ok(r);
                        }
                    }
                }
            }
        }
        Err(Error::NoRewrite(m.pretty(self.n, true)))
    }

    fn straighten_monomial(
        &self,
        m: &TableauMonomial,
        budget: usize,
        steps: &mut usize,
        trace: &mut Option<Vec<RewriteStep>>,
    ) -> Result<Polynomial> {
        if let Some(p) = self.memo.read().expect("memo lock").get(m) {
            return Ok(p.clone());
        }
        let result = if m.is_standard(self.n) {
            Polynomial::monomial(self.ring, m.to_monomial(), BigInt::one())
        } else {
            *steps += 1;
            if *steps > budget {
                return Err(Error::BudgetExhausted(budget));
            }
            let r = self.find_rewrite(m)?;
            if let Some(tr) = trace.as_mut() {
                tr.push(RewriteStep {
                    from: m.clone(),
                    relation: r.relation.clone(),
                    prescribed: r.prescribed,
                    replacement: r.terms.iter().map(|(c, t)| (c.to_string(), t.clone())).collect(),
                    measure_before: m.measure(),
                    measure_after_max: r.terms.iter().map(|(_, t)| t.measure()).max(),
                });
            }
            let mut acc = Polynomial::zero(self.ring);
            for (c, t) in &r.terms {
                acc = acc.add(&self.straighten_monomial(t, budget, steps, trace)?.scale(c))?;
            }
            acc
        };
        self.memo.write().expect("memo lock").insert(m.clone(), result.clone());
        Ok(result)
    }

    /// Straightens `p` (in this ring) into a combination of standard
    /// monomials. `budget` defaults to [`step_bound`] summed over terms.
    pub fn straighten_polynomial(
        &self,
        p: &Polynomial,
        budget: Option<usize>,
        trace: bool,
    ) -> Result<(Polynomial, Straightened)> {
        if p.ring != self.ring {
            return Err(Error::RingMismatch(format!("{:?} polynomial in the {:?} ring", p.ring, self.ring)));
        }
        let budget = budget.unwrap_or_else(|| {
            p.terms()
                .map(|(m, _)| step_bound(self.n, m))
                .fold(0u128, |a, b| a.saturating_add(b))
                .min(usize::MAX as u128) as usize
        });
        let mut steps = 0;
        let mut tr = trace.then(Vec::new);
        let mut out = Polynomial::zero(self.ring);
        for (m, c) in p.terms() {
            for v in &m.vars {
                v.check_rank(self.n)?;
            }
            let tm = TableauMonomial::from_monomial(m);
            out = out.add(&self.straighten_monomial(&tm, budget, &mut steps, &mut tr)?.scale(c))?;
        }
        let terms =
            out.terms().map(|(m, c)| (TableauMonomial::from_monomial(m).tableau(), c.to_string())).sorted().collect();
        Ok((out.clone(), Straightened { ring: self.ring, terms, steps, trace: tr.unwrap_or_default() }))
    }

    pub fn straighten(&self, m: &TableauMonomial, trace: bool) -> Result<(Polynomial, Straightened)> {
        m.check_rank(self.n)?;
        self.straighten_polynomial(&Polynomial::monomial(self.ring, m.to_monomial(), BigInt::one()), None, trace)
    }
}

/// One-shot straightening of a single monomial into a map from standard
/// tableaux to coefficients.
pub fn straighten(n: usize, m: &TableauMonomial, ring: Ring) -> Result<BTreeMap<Tableau, BigInt>> {
    let (p, _) = Straightener::new(n, ring)?.straighten(m, false)?;
    Ok(p.terms().map(|(mono, c)| (TableauMonomial::from_monomial(mono).tableau(), c.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::DominantWeight;
    use crate::tableaux::{enumerate_tableaux, is_symplectic_pbw_semistandard};

    fn tm(cols: &[&[usize]]) -> TableauMonomial {
        TableauMonomial::from_columns(&cols.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn canonical_arrangement_matches_enumerated_tableaux() {
        for n in 1..=3 {
            for lam in [
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![1, 1, 0],
                vec![2, 0, 0],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![1, 0, 1],
            ] {
                let m: Vec<u32> = lam[..n].to_vec();
                if m.iter().all(|&x| x == 0) {
                    continue;
                }
                let lambda = DominantWeight::new(m);
                for t in enumerate_tableaux(n, &lambda).unwrap() {
                    let x = TableauMonomial::from_tableau(&t).unwrap();
                    assert_eq!(x.tableau(), t);
                    assert!(x.is_standard(n));
                }
            }
        }
    }

    #[test]
    fn order_examples() {
        let a = Tableau::new(vec![vec![1, 3]]);
        let b = Tableau::new(vec![vec![1, 2]]);
        assert_eq!(tableau_order_compare(&a, &b).unwrap(), Ordering::Greater);
        assert!(tableau_dominates(&a, &b).unwrap());
        assert_eq!(tableau_order_compare(&a, &a).unwrap(), Ordering::Equal);
        assert!(tableau_order_compare(&a, &Tableau::new(vec![vec![1]])).is_err());
        // (3̄,3,1̄,1) ⊲ (2̄,2,1̄,1) at n = 4
        assert_eq!(minor_order_compare(&[6, 3, 8, 1], &[7, 2, 8, 1]).unwrap(), Ordering::Less);
        assert_eq!(minor_order_compare(&[1, 2], &[1, 3]).unwrap(), Ordering::Less);
        assert!(minor_order_compare(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn standard_monomial_is_fixed() {
        let s = Straightener::new(2, Ring::Classical).unwrap();
        let m = tm(&[&[1, 2], &[1]]);
        let (p, r) = s.straighten(&m, true).unwrap();
        assert_eq!(p, Polynomial::monomial(Ring::Classical, m.to_monomial(), BigInt::one()));
        assert_eq!(r.steps, 0);
    }

    #[test]
    fn degenerate_non_symplectic_column() {
        let out = straighten(2, &tm(&[&[1, 4]]), Ring::Degenerate).unwrap();
        assert_eq!(out, BTreeMap::from([(Tableau::new(vec![vec![3, 2]]), BigInt::from(-1))]));
    }

    #[test]
    fn budget_guard() {
        let s = Straightener::new(2, Ring::Classical).unwrap();
        let p = Polynomial::monomial(Ring::Classical, tm(&[&[1, 4]]).to_monomial(), BigInt::one());
        assert_eq!(s.straighten_polynomial(&p, Some(0), false).unwrap_err(), Error::BudgetExhausted(0));
        assert!(Straightener::new(2, Ring::SFamily).is_err());
        assert!(Straightener::new(0, Ring::Classical).is_err());
    }

    #[test]
    fn outputs_are_semistandard() {
        for ring in [Ring::Classical, Ring::Degenerate] {
            let s = Straightener::new(2, ring).unwrap();
            for a in (1..=4).combinations(2) {
                for b in 1..=4 {
                    let out = s.straighten(&tm(&[&a, &[b]]), false).unwrap().1;
                    for (t, _) in out.terms {
                        assert!(is_symplectic_pbw_semistandard(2, &t).unwrap());
                    }
                }
            }
        }
    }
}
