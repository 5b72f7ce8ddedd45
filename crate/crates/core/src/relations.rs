//! Pluecker and symplectic relations, their degenerate components and the
//! s-deformation family.

use crate::pluecker::{computed_minor, is_reverse_admissible, Minor, Monomial, Polynomial, Ring};
use crate::{bar, Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    Pluecker,
    Symplectic,
    PlueckerDegenerate,
    SymplecticDegenerate,
    SFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationParams {
    Exchange { l: Vec<usize>, j: Vec<usize>, t: usize },
    Minor { i2: Vec<usize>, i1: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RelationId {
    pub kind: RelationKind,
    pub params: RelationParams,
}

impl RelationId {
    pub fn label(&self, n: usize, ascii: bool) -> String {
        let sup = match self.kind {
            RelationKind::PlueckerDegenerate | RelationKind::SymplecticDegenerate => ";a",
            RelationKind::SFamily => ";s",
            _ => "",
        };
        let l = |v: &[usize]| v.iter().map(|&e| crate::letter(n, e, ascii)).join(",");
        match &self.params {
            RelationParams::Exchange { l: a, j, t } => format!("R^{{{t}{sup}}}_{{({}),({})}}", l(a), l(j)),
            RelationParams::Minor { i2, i1 } => {
                let seq: Vec<usize> = i1.iter().copied().chain(i2.iter().map(|&x| bar(n, x))).sorted().collect();
                format!("S{}_{{({})}}", if sup.is_empty() { String::new() } else { format!("^{}", &sup[1..]) }, l(&seq))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub id: RelationId,
    pub polynomial: Polynomial,
}

fn check_seq(n: usize, v: &[usize], name: &str) -> Result<()> {
    if v.is_empty() || v.len() > n || v.windows(2).any(|w| w[0] >= w[1]) || v.iter().any(|&x| x == 0 || x > 2 * n) {
        return Err(Error::InvalidRelation(format!(
            "{name} = {v:?} must be strictly increasing in 1..={} of length ≤ {n}",
            2 * n
        )));
    }
    Ok(())
}

/// `X_L X_J − Σ X_{L'} X_{J'}`, exchanging the entries of `J` at positions
/// `swap` (ascending) with every same-size tuple of positions of `L`, slot by
/// slot. Variables are sign-normalized; repeated-entry terms vanish.
pub fn exchange_relation(ring: Ring, l: &[usize], j: &[usize], swap: &[usize]) -> Result<Polynomial> {
    let head = Polynomial::var_seq(ring, l)?.mul(&Polynomial::var_seq(ring, j)?)?;
    let mut sum = Polynomial::zero(ring);
    for rs in (0..l.len()).combinations(swap.len()) {
        let mut l2 = l.to_vec();
        let mut j2 = j.to_vec();
        for (&r, &s) in rs.iter().zip(swap) {
            std::mem::swap(&mut l2[r], &mut j2[s]);
        }
        sum = sum.add(&Polynomial::var_seq(ring, &l2)?.mul(&Polynomial::var_seq(ring, &j2)?)?)?;
    }
    head.sub(&sum)
}

/// The Pluecker relation `R^t_{L,J}`.
pub fn pluecker_relation(n: usize, l: &[usize], j: &[usize], t: usize) -> Result<Polynomial> {
    check_seq(n, l, "L")?;
    check_seq(n, j, "J")?;
    if j.len() > l.len() {
        return Err(Error::InvalidRelation(format!("|J| = {} exceeds |L| = {}", j.len(), l.len())));
    }
    if t == 0 || t > j.len() {
        return Err(Error::InvalidRelation(format!("t = {t} outside 1..={}", j.len())));
    }
    exchange_relation(Ring::Classical, l, j, &(0..t).collect::<Vec<_>>())
}

fn le(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Data of the expansion of a non reverse-admissible minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub h0: usize,
    pub witness: Vec<usize>,
    pub b: usize,
    pub gamma_tilde: Vec<usize>,
    pub f: Vec<usize>,
    /// `(sign, minor)` pairs with `X_{(I₂,I₁)} = Σ sign · X_minor`.
    pub terms: Vec<(i32, Minor)>,
}

/// Choice of `h₀`, the maximal witness `T_{h₀+1}`, `b`, `Γ̃` and `F`.
pub fn expansion(n: usize, m: &Minor) -> Result<Expansion> {
    let m = Minor::new(n, m.i2.clone(), m.i1.clone())?;
    if is_reverse_admissible(n, &m) {
        return Err(Error::ReverseAdmissible);
    }
    let gamma = m.gamma();
    let t = gamma.len();
    let avail = m.available(n);
    let candidates = |h: usize| -> Vec<Vec<usize>> {
        avail.iter().copied().combinations(t - h).filter(|c| le(c, &gamma[h..])).collect()
    };
    let h0 = (1..=t).find(|&h| !candidates(h).is_empty()).expect("h = t always qualifies");
    let cands = candidates(h0);
    let maximal: Vec<&Vec<usize>> = cands.iter().filter(|c| !cands.iter().any(|d| d != *c && le(c, d))).collect();
    if maximal.len() != 1 {
        return Err(Error::AmbiguousWitness(format!("{maximal:?}")));
    }
    let witness = maximal[0].clone();
    // one-based: witness[e - h0 - 1] = λ_e, gamma[e - 1] = γ_e
    let mut b = h0;
    for e in h0 + 1..=t {
        if witness[e - h0 - 1] < gamma[e - 2] {
            b = e;
        } else {
            break;
        }
    }
    let gamma_tilde: Vec<usize> = gamma[h0 - 1..b].to_vec();
    let f: Vec<usize> = gamma.iter().copied().filter(|g| !gamma_tilde.contains(g)).collect();
    let i1t: Vec<usize> = m.i1.iter().copied().filter(|x| !gamma.contains(x)).collect();
    let i2t: Vec<usize> = m.i2.iter().copied().filter(|x| !gamma.contains(x)).collect();
    let sign = if gamma_tilde.len().is_multiple_of(2) { 1 } else { -1 };
    let mut terms = Vec::new();
    for g in avail.iter().copied().combinations(gamma_tilde.len()) {
        let extra: Vec<usize> = f.iter().chain(&g).copied().collect();
        let i2 = i2t.iter().chain(&extra).copied().collect();
        let i1 = i1t.iter().chain(&extra).copied().collect();
        terms.push((sign, Minor::new(n, i2, i1)?));
    }
    Ok(Expansion { h0, witness, b, gamma_tilde, f, terms })
}

fn minor_var(n: usize, ring: Ring, m: &Minor) -> Result<Polynomial> {
    Polynomial::var_seq(ring, &computed_minor(n, m)?)
}

/// The symplectic relation `S_{(I₂,I₁)} = X_{(I₂,I₁)} − Σ (−1)^{|Γ'|} X_{(Ĩ₂∪F∪Γ', Ĩ₁∪F∪Γ')}`.
pub fn symplectic_relation(n: usize, m: &Minor) -> Result<Polynomial> {
    let e = expansion(n, m)?;
    let mut p = minor_var(n, Ring::Classical, m)?;
    for (sign, t) in &e.terms {
        p = p.sub(&minor_var(n, Ring::Classical, t)?.scale(&BigInt::from(*sign)))?;
    }
    Ok(p)
}

/// The expansion written with computed minors, e.g.
/// `(2̄,2,1̄,1) = −(3̄,3,1̄,1) − (4̄,4,1̄,1)`.
pub fn expansion_string(n: usize, m: &Minor, ascii: bool) -> Result<String> {
    let e = expansion(n, m)?;
    let show = |mm: &Minor| -> Result<String> {
        Ok(format!("({})", computed_minor(n, mm)?.iter().map(|&x| crate::letter(n, x, ascii)).join(",")))
    };
    let mut s = format!("{} =", show(m)?);
    for (i, (sign, t)) in e.terms.iter().enumerate() {
        let minus = if ascii { "-" } else { "\u{2212}" };
        let op = match (i, *sign) {
            (0, 1) => " ".to_string(),
            (0, _) => format!(" {minus}"),
            (_, 1) => " + ".to_string(),
            _ => format!(" {minus} "),
        };
        s.push_str(&op);
        s.push_str(&show(t)?);
    }
    if e.terms.is_empty() {
        s.push_str(" 0");
    }
    Ok(s)
}

/// Lowest PBW-degree part, re-tagged as degenerate.
pub fn degenerate_component(p: &Polynomial) -> Result<Polynomial> {
    let min = p
        .terms()
        .map(|(m, _)| m.pbw_degree())
        .min()
        .ok_or_else(|| Error::InvalidRelation("degenerate component of the zero polynomial".into()))?;
    Ok(p.filter(|m| m.pbw_degree() == min).with_ring(Ring::Degenerate))
}

/// Multiplies every term by `s^{deg − min deg}`.
pub fn s_deformed_relation(p: &Polynomial) -> Polynomial {
    let min = p.terms().map(|(m, _)| m.pbw_degree()).min().unwrap_or(0);
    p.map_monomials(Ring::SFamily, |m| Monomial { vars: m.vars.clone(), s_deg: (m.pbw_degree() - min) as u32 })
}

/// Specialization of an s-family member at `s = 0` (degenerate ring) or
/// `s = 1` (classical ring).
pub fn specialize_s(p: &Polynomial, s: u32) -> Result<Polynomial> {
    if p.ring != Ring::SFamily {
        return Err(Error::RingMismatch(format!("{:?} is not an s-family polynomial", p.ring)));
    }
    Ok(match s {
        0 => p.filter(|m| m.s_deg == 0).map_monomials(Ring::Degenerate, |m| Monomial::new(m.vars.clone())),
        1 => p.map_monomials(Ring::Classical, |m| Monomial::new(m.vars.clone())),
        _ => return Err(Error::InvalidRelation(format!("specialization at s = {s}"))),
    })
}

/// All minors of rank `n` in canonical order.
pub fn all_minors(n: usize) -> Vec<Minor> {
    let subsets: Vec<Vec<usize>> = (0..=n).flat_map(|s| (1..=n).combinations(s)).collect();
    let mut out = Vec::new();
    for i2 in &subsets {
        for i1 in &subsets {
            if i1.len() + i2.len() >= 1 && i1.len() + i2.len() <= n {
                out.push(Minor { i2: i2.clone(), i1: i1.clone() });
            }
        }
    }
    out.sort_by_key(|m| (m.size(), m.i2.clone(), m.i1.clone()));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    Classical,
    Degenerate,
    SFamily,
}

/// Generators: every `R^t_{L,J}` over sorted `L`, `J` with `|L| ≥ |J|` and
/// every `S_{(I₂,I₁)}` over non reverse-admissible minors (or their
/// degenerate components, or their s-deformations), zero relations dropped
/// and duplicates up to sign merged. Order: Pluecker relations by
/// `(|L|, |J|, L, J, t)`, then symplectic relations by minor.
pub fn generate_ideal(n: usize, kind: IdealKind) -> Result<Vec<Relation>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut out = Vec::new();
    let mut seen: HashSet<Polynomial> = HashSet::new();
    let mut push = |id: RelationId, p: Polynomial| -> Result<()> {
        if p.is_zero() {
            return Ok(());
        }
        let p = match kind {
            IdealKind::Classical => p,
            IdealKind::Degenerate => degenerate_component(&p)?,
            IdealKind::SFamily => s_deformed_relation(&p),
        };
        let id = RelationId {
            kind: match (kind, &id.kind) {
                (IdealKind::Degenerate, RelationKind::Pluecker) => RelationKind::PlueckerDegenerate,
                (IdealKind::Degenerate, RelationKind::Symplectic) => RelationKind::SymplecticDegenerate,
                (IdealKind::SFamily, _) => RelationKind::SFamily,
                (_, k) => *k,
            },
            params: id.params,
        };
        if seen.insert(p.normalized_sign()) {
            out.push(Relation { id, polynomial: p.normalized_sign() });
        }
        Ok(())
    };
    let letters: Vec<usize> = (1..=2 * n).collect();
    for p in 1..=n {
        for q in 1..=p {
            for l in letters.iter().copied().combinations(p) {
                for j in letters.iter().copied().combinations(q) {
                    for t in 1..=q {
                        let poly = pluecker_relation(n, &l, &j, t)?;
                        let params = RelationParams::Exchange { l: l.clone(), j: j.clone(), t };
                        push(RelationId { kind: RelationKind::Pluecker, params }, poly)?;
                    }
                }
            }
        }
    }
    for m in all_minors(n) {
        if is_reverse_admissible(n, &m) {
            continue;
        }
        let poly = symplectic_relation(n, &m)?;
        let params = RelationParams::Minor { i2: m.i2.clone(), i1: m.i1.clone() };
        push(RelationId { kind: RelationKind::Symplectic, params }, poly)?;
    }
    Ok(out)
}

/// Convenience: the head variable coefficient is `±1` for every relation
/// produced here.
pub fn unit(p: &Polynomial, m: &Monomial) -> bool {
    let c = p.coeff(m);
    c.is_one() || (-c).is_one()
}
