//! Exact point sampling on the classical and degenerate flag varieties and
//! the cross-checks built on it.

use crate::correspondence::{monomial_to_tableau, tableau_to_monomial};
use crate::fflv::{contains, lattice_points};
use crate::liealg::{
    positive_roots, root_vector_matrix, root_vector_weight, symplectic_form, weyl_dimension, DominantWeight, Root,
};
use crate::matrix::{q, Matrix, Q};
use crate::pluecker::{normalize_index, PlueckerIndex, Polynomial, Ring};
use crate::relations::Relation;
use crate::tableaux::{enumerate_tableaux, is_symplectic_pbw_semistandard, tableau_weight};
use crate::{Error, Result};
use itertools::Itertools;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Classical,
    Degenerate,
}

impl Provenance {
    pub fn ring(self) -> Ring {
        match self {
            Provenance::Classical => Ring::Classical,
            Provenance::Degenerate => Ring::Degenerate,
        }
    }
}

/// A point of `∏_k P(Λ^k C^{2n})` with exact coordinates and the frames
/// `U_k` it was built from.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagPoint {
    pub n: usize,
    pub provenance: Provenance,
    pub seed: Option<u64>,
    pub coefficients: Vec<(Root, i64)>,
    /// Level `k` frame as a `2n × k` matrix, index `k - 1`.
    pub frames: Vec<Matrix<Q>>,
    pub coords: BTreeMap<PlueckerIndex, Q>,
}

#[derive(Serialize)]
struct CoeffJson {
    root: Root,
    c: i64,
}

#[derive(Serialize)]
struct CoordJson {
    k: usize,
    #[serde(rename = "J")]
    j: Vec<usize>,
    value: String,
}

#[derive(Serialize)]
struct PointJson {
    n: usize,
    provenance: Provenance,
    seed: Option<u64>,
    coefficients: Vec<CoeffJson>,
    coordinates: Vec<CoordJson>,
}

impl Serialize for FlagPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointJson {
            n: self.n,
            provenance: self.provenance,
            seed: self.seed,
            coefficients: self.coefficients.iter().map(|&(root, c)| CoeffJson { root, c }).collect(),
            coordinates: self
                .coords
                .iter()
                .map(|(j, v)| CoordJson { k: j.level(), j: j.entries().to_vec(), value: v.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl FlagPoint {
    pub fn coordinate(&self, j: &PlueckerIndex) -> Q {
        self.coords.get(j).cloned().unwrap_or_else(Q::zero)
    }
}

/// All `k`-subsets of `1..=2n`, the wedge basis of `Λ^k`.
pub fn wedge_basis(n: usize, k: usize) -> Vec<PlueckerIndex> {
    (1..=2 * n).combinations(k).map(|v| PlueckerIndex::new(v).expect("sorted")).collect()
}

/// Seeded coefficients `c_α ∈ [−9, 9]` in canonical root order.
pub fn random_coefficients(n: usize, seed: u64) -> Vec<(Root, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    positive_roots(n).into_iter().map(|a| (a, rng.gen_range(-9..=9))).collect()
}

fn coords_from_frames(n: usize, frames: &[Matrix<Q>]) -> BTreeMap<PlueckerIndex, Q> {
    let mut coords = BTreeMap::new();
    for (idx, f) in frames.iter().enumerate() {
        let k = idx + 1;
        let cols: Vec<usize> = (0..k).collect();
        for j in wedge_basis(n, k) {
            let rows: Vec<usize> = j.entries().iter().map(|e| e - 1).collect();
            coords.insert(j, f.submatrix(&rows, &cols).det());
        }
    }
    coords
}

/// `M = ∏_α exp(c_α f_α)` in canonical root order.
pub fn classical_group_element(n: usize, coefficients: &[(Root, i64)]) -> Matrix<Q> {
    let mut m = Matrix::identity(2 * n);
    for &(a, c) in coefficients {
        let f: Matrix<Q> = (&root_vector_matrix(n, a).expect("valid root")).into();
        m = m.mul(&f.scale(&q(c)).exp_nilpotent());
    }
    m
}

/// Big-cell point from explicit coefficients: `X_J` at level `k` is the minor
/// of `M` on rows `J` and columns `1..k`.
pub fn classical_flag_from(n: usize, coefficients: Vec<(Root, i64)>, seed: Option<u64>) -> FlagPoint {
    let m = classical_group_element(n, &coefficients);
    let frames: Vec<Matrix<Q>> =
        (1..=n).map(|k| m.submatrix(&(0..2 * n).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>())).collect();
    let coords = coords_from_frames(n, &frames);
    FlagPoint { n, provenance: Provenance::Classical, seed, coefficients, frames, coords }
}

pub fn sample_classical_flag(n: usize, seed: u64) -> FlagPoint {
    classical_flag_from(n, random_coefficients(n, seed), Some(seed))
}

/// The part of `f_α` raising the PBW-degree at level `k`: entries `E_{p,q}`
/// with `q ≤ k < p`.
pub fn truncated_root_matrix(n: usize, k: usize, a: Root) -> Matrix<Q> {
    let f = root_vector_matrix(n, a).expect("valid root");
    let mut t = Matrix::zeros(2 * n, 2 * n);
    for p in 0..2 * n {
        for c in 0..2 * n {
            if c < k && p >= k && *f.get(p, c) != 0 {
                t.set(p, c, q(*f.get(p, c)));
            }
        }
    }
    t
}

/// Action of `f_α` on the wedge basis `{w_J}` of `Λ^k` by the derivation
/// rule, keeping only outputs whose PBW-degree is one more than the input's.
pub fn degenerate_operator(n: usize, k: usize, a: Root) -> Result<Matrix<Q>> {
    a.validate(n)?;
    let f = root_vector_matrix(n, a)?;
    let basis = wedge_basis(n, k);
    let pos: BTreeMap<&PlueckerIndex, usize> = basis.iter().enumerate().map(|(i, j)| (j, i)).collect();
    let mut op = Matrix::zeros(basis.len(), basis.len());
    for (col, j) in basis.iter().enumerate() {
        let deg = j.pbw_degree();
        for r in 0..k {
            let src = j.entries()[r];
            for tgt in 1..=2 * n {
                let c = *f.get(tgt - 1, src - 1);
                if c == 0 {
                    continue;
                }
                let mut seq = j.entries().to_vec();
                seq[r] = tgt;
                if let Some((j2, sign)) = normalize_index(&seq)? {
                    if j2.pbw_degree() == deg + 1 {
                        let row = pos[&j2];
                        let v = op.get(row, col) + q(c * i64::from(sign));
                        op.set(row, col, v);
                    }
                }
            }
        }
    }
    Ok(op)
}

/// Checks `[D_α, D_β] = 0` for all pairs at every level.
pub fn check_commutativity(n: usize) -> Result<()> {
    let roots = positive_roots(n);
    for k in 1..=n {
        let ops: Vec<Matrix<Q>> = roots.iter().map(|&a| degenerate_operator(n, k, a)).collect::<Result<_>>()?;
        for (x, y) in (0..ops.len()).tuple_combinations() {
            if !ops[x].mul(&ops[y]).sub(&ops[y].mul(&ops[x])).is_zero() {
                return Err(Error::NonCommuting(format!("{} and {} at level {k}", roots[x], roots[y])));
            }
        }
    }
    Ok(())
}

/// Degenerate point from explicit coefficients: `v_k = ∏ exp(c_α D_α) w_{1..k}`
/// on the wedge basis. The frame of `U_k` is the first `k` columns of
/// `I + Σ c_α f_α^{(k)}`.
pub fn degenerate_flag_from(n: usize, coefficients: Vec<(Root, i64)>, seed: Option<u64>) -> Result<FlagPoint> {
    check_commutativity(n)?;
    let mut coords = BTreeMap::new();
    let mut frames = Vec::new();
    for k in 1..=n {
        let basis = wedge_basis(n, k);
        let mut v: Matrix<Q> = Matrix::zeros(basis.len(), 1);
        v.set(0, 0, q(1));
        let mut nk: Matrix<Q> = Matrix::zeros(2 * n, 2 * n);
        for &(a, c) in &coefficients {
            let d = degenerate_operator(n, k, a)?.scale(&q(c));
            v = d.exp_nilpotent().mul(&v);
            nk = nk.add(&truncated_root_matrix(n, k, a).scale(&q(c)));
        }
        for (i, j) in basis.into_iter().enumerate() {
            coords.insert(j, v.get(i, 0).clone());
        }
        let g = Matrix::identity(2 * n).add(&nk);
        frames.push(g.submatrix(&(0..2 * n).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>()));
    }
    Ok(FlagPoint { n, provenance: Provenance::Degenerate, seed, coefficients, frames, coords })
}

pub fn sample_degenerate_point(n: usize, seed: u64) -> Result<FlagPoint> {
    degenerate_flag_from(n, random_coefficients(n, seed), Some(seed))
}

/// Samples one point per seed on `workers` threads; the result is in seed
/// order whatever the worker count.
pub fn sample_points(n: usize, provenance: Provenance, seeds: &[u64], workers: usize) -> Result<Vec<FlagPoint>> {
    let one = |s: u64| match provenance {
        Provenance::Classical => Ok(sample_classical_flag(n, s)),
        Provenance::Degenerate => sample_degenerate_point(n, s),
    };
    let workers = workers.max(1).min(seeds.len().max(1));
    if workers == 1 {
        return seeds.iter().map(|&s| one(s)).collect();
    }
    let chunk = seeds.len().div_ceil(workers);
    std::thread::scope(|sc| {
        let handles: Vec<_> = seeds
            .chunks(chunk)
            .map(|c| sc.spawn(move || c.iter().map(|&s| one(s)).collect::<Result<Vec<_>>>()))
            .collect();
        let mut out = Vec::with_capacity(seeds.len());
        for h in handles {
            out.extend(h.join().expect("sampler thread panicked")?);
        }
        Ok(out)
    })
}

/// Pluecker coordinates recomputed as minors of the stored frames.
pub fn frame_coordinates(p: &FlagPoint) -> BTreeMap<PlueckerIndex, Q> {
    coords_from_frames(p.n, &p.frames)
}

/// `M^T Ψ M = Ψ`.
pub fn is_symplectic_matrix(n: usize, m: &Matrix<Q>) -> bool {
    let psi: Matrix<Q> = (&symplectic_form(n)).into();
    m.transpose().mul(&psi).mul(m) == psi
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotropyReport {
    pub isotropic: Vec<bool>,
    pub chain: Vec<bool>,
    pub passed: bool,
}

/// `pr_{1,3}(U_k)` is isotropic for every `k`, and `pr_{k+1} U_k ⊂ U_{k+1}`.
pub fn check_isotropy_projection(p: &FlagPoint) -> IsotropyReport {
    let n = p.n;
    let psi: Matrix<Q> = (&symplectic_form(n)).into();
    let mut isotropic = Vec::new();
    let mut chain = Vec::new();
    for k in 1..=n {
        let mut u = p.frames[k - 1].clone();
        for r in k..2 * n - k {
            for c in 0..k {
                u.set(r, c, Q::zero());
            }
        }
        isotropic.push(u.transpose().mul(&psi).mul(&u).is_zero());
        if k < n {
            let mut pr = p.frames[k - 1].clone();
            for c in 0..k {
                pr.set(k, c, Q::zero());
            }
            let next = &p.frames[k];
            chain.push(next.hcat(&pr).rank() == next.rank());
        }
    }
    let passed = isotropic.iter().chain(&chain).all(|&b| b);
    IsotropyReport { isotropic, chain, passed }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingFailure {
    pub relation: String,
    pub seed: Option<u64>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub ring: Ring,
    pub relations: usize,
    pub points: usize,
    pub seeds: Vec<Option<u64>>,
    pub evaluations: usize,
    pub failures: Vec<VanishingFailure>,
    pub passed: bool,
}

/// Evaluates every relation at every point; nonzero values are reported.
pub fn check_vanishing(n: usize, relations: &[Relation], points: &[FlagPoint]) -> Result<VanishingReport> {
    let ring = relations.first().map_or(Ring::Classical, |r| r.polynomial.ring);
    let mut failures = Vec::new();
    let mut evaluations = 0;
    for p in points {
        for r in relations {
            if r.polynomial.ring != p.provenance.ring() {
                return Err(Error::RingMismatch(format!(
                    "{:?} relation at a {:?} point",
                    r.polynomial.ring, p.provenance
                )));
            }
            let v = r.polynomial.eval(&p.coords)?;
            evaluations += 1;
            if !v.is_zero() {
                failures.push(VanishingFailure { relation: r.id.label(n, true), seed: p.seed, value: v.to_string() });
            }
        }
    }
    Ok(VanishingReport {
        ring,
        relations: relations.len(),
        points: points.len(),
        seeds: points.iter().map(|p| p.seed).collect(),
        evaluations,
        passed: failures.is_empty(),
        failures,
    })
}

/// Value of an s-family polynomial at `y_J = s^{−deg J} x_J`, as a Laurent
/// polynomial `exponent ↦ coefficient` with zero coefficients removed.
pub fn eval_s_family(p: &Polynomial, x: &BTreeMap<PlueckerIndex, Q>) -> Result<BTreeMap<i64, Q>> {
    if p.ring != Ring::SFamily {
        return Err(Error::RingMismatch(format!("{:?} is not an s-family polynomial", p.ring)));
    }
    let mut out: BTreeMap<i64, Q> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut v = Q::from_integer(c.clone());
        for var in &m.vars {
            v *= x.get(var).ok_or_else(|| Error::MissingVariable(var.to_string()))?;
        }
        let e = i64::from(m.s_deg) - m.pbw_degree() as i64;
        *out.entry(e).or_insert_with(Q::zero) += v;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountsReport {
    pub n: usize,
    pub m: Vec<u32>,
    pub partition: Vec<u32>,
    pub lattice_points: usize,
    pub tableaux: usize,
    pub weyl_dimension: u128,
    pub passed: bool,
}

/// `|S(λ)| = |SyST_λ| = dim V_λ`.
pub fn check_counts(n: usize, lambda: &DominantWeight) -> Result<CountsReport> {
    let lp = lattice_points(n, lambda)?.len();
    let tb = enumerate_tableaux(n, lambda)?.len();
    let wd = weyl_dimension(n, lambda)?;
    Ok(CountsReport {
        n,
        m: lambda.m.clone(),
        partition: lambda.partition(),
        lattice_points: lp,
        tableaux: tb,
        weyl_dimension: wd,
        passed: lp as u128 == wd && tb as u128 == wd,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub n: usize,
    pub m: Vec<u32>,
    pub checked: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// `π ∘ φ = id`, `φ ∘ π = id`, semistandardness of images and weight
/// preservation, exhaustively over `S(λ)` and `SyST_λ`.
pub fn check_roundtrip(n: usize, lambda: &DominantWeight) -> Result<RoundtripReport> {
    let mut failures = Vec::new();
    let points = lattice_points(n, lambda)?;
    for p in &points {
        let t = match monomial_to_tableau(n, lambda, p) {
            Ok(t) => t,
            Err(e) => {
                failures.push(format!("phi({}) failed: {e}", p.pretty(true)));
                continue;
            }
        };
        if !is_symplectic_pbw_semistandard(n, &t)? {
            failures.push(format!("phi({}) is not semistandard", p.pretty(true)));
        }
        match tableau_to_monomial(n, &t) {
            Ok((l2, p2)) if &l2 == lambda && &p2 == p => {}
            _ => failures.push(format!("pi(phi({})) differs", p.pretty(true))),
        }
        let mut wt = lambda.weight();
        for (a, e) in p.iter() {
            for _ in 0..e {
                wt += root_vector_weight(n, a);
            }
        }
        if tableau_weight(n, &t) != wt {
            failures.push(format!("weight of phi({}) differs", p.pretty(true)));
        }
    }
    let tabs = enumerate_tableaux(n, lambda)?;
    for t in &tabs {
        let ok = tableau_to_monomial(n, t)
            .and_then(|(l2, p)| Ok(contains(n, &l2, &p)? && &monomial_to_tableau(n, &l2, &p)? == t));
        if !matches!(ok, Ok(true)) {
            failures.push(format!("phi(pi({:?})) differs", t.columns));
        }
    }
    Ok(RoundtripReport {
        n,
        m: lambda.m.clone(),
        checked: points.len() + tabs.len(),
        passed: failures.is_empty(),
        failures,
    })
}
