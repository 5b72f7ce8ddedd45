use sympbw_core::fflv::{lattice_points, MultiExponent};
use sympbw_core::liealg::DominantWeight;
use sympbw_core::pluecker::PlueckerIndex;
use sympbw_core::straighten::TableauMonomial;
use sympbw_core::tableaux::{enumerate_tableaux, Tableau};

#[test]
fn tableaux_and_exponents_round_trip() {
    let lam = DominantWeight::new(vec![1, 1]);
    for t in enumerate_tableaux(2, &lam).unwrap() {
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<Tableau>(&s).unwrap(), t);
    }
    for p in lattice_points(2, &lam).unwrap() {
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<MultiExponent>(&s).unwrap(), p);
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(serde_json::from_str::<Tableau>(r#"{"shape":[2],"columns":[[1,2]]}"#).is_err());
    assert!(serde_json::from_str::<PlueckerIndex>(r#"{"k":2,"J":[2,1]}"#).is_err());
    assert!(serde_json::from_str::<PlueckerIndex>(r#"{"k":1,"J":[1,2]}"#).is_err());
    assert!(serde_json::from_str::<TableauMonomial>(r#"{"columns":[[1,1]]}"#).is_err());
}

#[test]
fn tableau_monomial_reads_columns_as_sets() {
    let a: TableauMonomial = serde_json::from_str(r#"{"columns":[[3],[4,1]]}"#).unwrap();
    let b: TableauMonomial = serde_json::from_str(r#"{"columns":[[1,4],[3]]}"#).unwrap();
    assert_eq!(a, b);
    assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"columns":[[1,4],[3]]}"#);
}
