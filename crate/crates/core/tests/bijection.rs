use std::collections::BTreeSet;
use sympbw_core::correspondence::{monomial_to_tableau, tableau_to_monomial};
use sympbw_core::fflv::{contains, lattice_points};
use sympbw_core::liealg::{root_vector_weight, weyl_dimension, DominantWeight};
use sympbw_core::tableaux::{enumerate_tableaux, is_symplectic_pbw_semistandard, tableau_weight, Tableau};

/// All dominant weights of rank `n` with `λ_1 ≤ bound`.
fn weights(n: usize, bound: u32) -> Vec<DominantWeight> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|m: Vec<u32>| (0..=bound).map(move |x| [m.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().filter(|m| m.iter().sum::<u32>() <= bound).map(DominantWeight::new).collect()
}

#[test]
fn counts_agree() {
    for n in 2..=3 {
        for w in weights(n, 3) {
            let d = weyl_dimension(n, &w).unwrap() as usize;
            assert_eq!(lattice_points(n, &w).unwrap().len(), d, "{w:?}");
            assert_eq!(enumerate_tableaux(n, &w).unwrap().len(), d, "{w:?}");
        }
    }
}

#[test]
fn phi_and_pi_are_inverse_and_weight_preserving() {
    for n in 2..=3 {
        for w in weights(n, 3) {
            let tabs: BTreeSet<Tableau> = enumerate_tableaux(n, &w).unwrap().into_iter().collect();
            let mut seen = BTreeSet::new();
            for p in lattice_points(n, &w).unwrap() {
                let t = monomial_to_tableau(n, &w, &p).unwrap();
                assert!(is_symplectic_pbw_semistandard(n, &t).unwrap());
                assert!(tabs.contains(&t));
                let (w2, p2) = tableau_to_monomial(n, &t).unwrap();
                assert_eq!((&w2, &p2), (&w, &p));
                let mut expected = w.weight();
                for (a, e) in p.iter() {
                    for _ in 0..e {
                        expected += root_vector_weight(n, a);
                    }
                }
                assert_eq!(tableau_weight(n, &t), expected);
                assert!(seen.insert(t));
            }
            for t in &tabs {
                let (w2, p) = tableau_to_monomial(n, t).unwrap();
                assert!(contains(n, &w2, &p).unwrap());
                assert_eq!(&monomial_to_tableau(n, &w2, &p).unwrap(), t);
            }
        }
    }
}
