use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use std::cmp::Ordering;
use sympbw_core::liealg::DominantWeight;
use sympbw_core::pluecker::{PlueckerIndex, Polynomial, Ring};
use sympbw_core::straighten::{tableau_dominates, tableau_order_compare, Straightener, TableauMonomial};
use sympbw_core::tableaux::{enumerate_tableaux, is_symplectic_pbw_semistandard};
use sympbw_core::verify::{
    check_isotropy_projection, classical_group_element, frame_coordinates, is_symplectic_matrix, sample_classical_flag,
    sample_degenerate_point,
};

fn variables(n: usize) -> Vec<PlueckerIndex> {
    (1..=n).flat_map(|k| (1..=2 * n).combinations(k)).map(|v| PlueckerIndex::new(v).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classical_samples_are_symplectic_and_consistent(n in 1usize..=3, seed in any::<u64>()) {
        let p = sample_classical_flag(n, seed);
        prop_assert!(is_symplectic_matrix(n, &classical_group_element(n, &p.coefficients)));
        prop_assert_eq!(frame_coordinates(&p), p.coords);
    }

    #[test]
    fn degenerate_samples_are_realized(n in 1usize..=3, seed in any::<u64>()) {
        let p = sample_degenerate_point(n, seed).unwrap();
        prop_assert!(check_isotropy_projection(&p).passed);
        prop_assert_eq!(frame_coordinates(&p), p.coords.clone());
    }

    #[test]
    fn straightening_preserves_values(
        picks in proptest::collection::vec(0usize..10, 1..=3),
        seed in any::<u64>(),
        degenerate in any::<bool>(),
    ) {
        let n = 2;
        let vars = variables(n);
        let m = TableauMonomial::new(picks.iter().map(|&i| vars[i].clone()).collect());
        let ring = if degenerate { Ring::Degenerate } else { Ring::Classical };
        let x = if degenerate { sample_degenerate_point(n, seed).unwrap() } else { sample_classical_flag(n, seed) };
        let (out, rep) = Straightener::new(n, ring).unwrap().straighten(&m, true).unwrap();
        let input = Polynomial::monomial(ring, m.to_monomial(), BigInt::one());
        prop_assert_eq!(input.eval(&x.coords).unwrap(), out.eval(&x.coords).unwrap());
        for (t, _) in &rep.terms {
            prop_assert!(is_symplectic_pbw_semistandard(n, t).unwrap());
        }
        for s in &rep.trace {
            prop_assert!(s.measure_after_max.as_ref().is_none_or(|a| *a < s.measure_before));
        }
    }

    #[test]
    fn reading_order_refines_dominance(i in 0usize..16, j in 0usize..16) {
        let ts = enumerate_tableaux(2, &DominantWeight::new(vec![1, 1])).unwrap();
        let (a, b) = (&ts[i], &ts[j]);
        match tableau_order_compare(a, b).unwrap() {
            Ordering::Greater => prop_assert!(tableau_dominates(a, b).unwrap()),
            Ordering::Less => prop_assert!(tableau_dominates(b, a).unwrap()),
            Ordering::Equal => prop_assert_eq!(a, b),
        }
    }
}

#[test]
fn shared_memo_across_threads() {
    let n = 3;
    let vars = variables(n);
    let monos: Vec<TableauMonomial> = vars
        .iter()
        .tuple_combinations()
        .take(200)
        .map(|(a, b)| TableauMonomial::new(vec![a.clone(), b.clone()]))
        .collect();
    let seq: Vec<Polynomial> =
        monos.iter().map(|m| Straightener::new(n, Ring::Classical).unwrap().straighten(m, false).unwrap().0).collect();
    let shared = Straightener::new(n, Ring::Classical).unwrap();
    let par: Vec<Polynomial> = std::thread::scope(|sc| {
        let hs: Vec<_> = monos
            .chunks(50)
            .map(|c| {
                let s = &shared;
                sc.spawn(move || c.iter().map(|m| s.straighten(m, false).unwrap().0).collect::<Vec<_>>())
            })
            .collect();
        hs.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    assert_eq!(seq, par);
}
