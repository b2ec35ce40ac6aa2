use proptest::prelude::*;
use serde_json::Value;

use qtwist::presentation::{
    emit_presentation, relation_census, relation_residual, twisted_relation, untwisted_relation, CrossedPoly, RelationKind,
    TauScalar,
};

#[test]
fn census_matches_emitted_count() {
    for n in 2..=5 {
        let p = emit_presentation(n, None).unwrap();
        let by_family: usize = RelationKind::ALL.iter().map(|k| k.index_tuples(n).len()).sum();
        assert_eq!(p.relations.len(), by_family);
        assert_eq!(p.relations.len(), relation_census(n));
        assert_eq!(p.relation_count(), relation_census(n) + 1);
    }
}

#[test]
fn trivial_tau_gives_untwisted_relations() {
    for n in 2..=4 {
        let p = emit_presentation(n, Some(&vec![0; n - 1])).unwrap();
        let plain = emit_presentation(n, Some(&vec![0; n - 1])).unwrap().to_json();
        for (k, rel) in p.relations.iter().enumerate() {
            let t = (rel.indices[0], rel.indices[1], rel.indices[2], rel.indices[3]);
            let u = untwisted_relation(n, rel.kind.unwrap(), t).unwrap();
            // specialized at τ = 1 the coefficients agree
            for (a, b) in rel.lhs.iter().zip(&u.lhs).chain(rel.rhs.iter().zip(&u.rhs)) {
                assert_eq!(a.word, b.word);
                assert_eq!(a.coeff.specialize(&vec![0; n - 1]), b.coeff.specialize(&vec![0; n - 1]));
            }
            assert!(plain["relations"][k]["lhs"].is_array());
        }
    }
}

#[test]
fn json_schema() {
    let j = emit_presentation(3, Some(&[2, 1])).unwrap().to_json();
    let rels = j["relations"].as_array().unwrap();
    assert_eq!(rels.len(), 37);
    for r in rels {
        for side in ["lhs", "rhs"] {
            for term in r[side].as_array().unwrap() {
                let c = &term["coeff"];
                assert!(c["int"].is_i64() && c["qexp"].is_i64() && c["zeta"].is_i64(), "{term}");
                assert!(term["word"].as_array().unwrap().iter().all(|p| p.as_array().map(|x| x.len()) == Some(2)));
            }
        }
    }
    let formal = emit_presentation(3, None).unwrap().to_json();
    let c = &formal["relations"][0]["rhs"][0]["coeff"];
    assert_eq!(c["tauexp"], Value::from(vec![2, 0]));
    assert_eq!(c["qexp"], Value::from(1));
    // round trip through text
    let back: Value = serde_json::from_str(&formal.to_string()).unwrap();
    assert_eq!(back, formal);
}

#[test]
fn su_minus_q_two() {
    let p = emit_presentation(2, Some(&[1])).unwrap();
    let text = p.to_text();
    for line in [
        "[row] v11 v12 = -q v12 v11",
        "[column] v11 v21 = -q v21 v11",
        "[commute] v21 v12 = v12 v21",
        "[determinant] v11 v22 + q v12 v21 = 1",
    ] {
        assert!(text.contains(line), "{line}\n{text}");
    }
}

fn kind() -> impl Strategy<Value = RelationKind> {
    prop_oneof![
        Just(RelationKind::Row),
        Just(RelationKind::Column),
        Just(RelationKind::Commute),
        Just(RelationKind::Cross)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wrong_tau_prefactor_is_detected(n in 3usize..=5, k in kind(), pick in 0usize..10_000, p in 1usize..5, s in 1i64..5) {
        let tuples = k.index_tuples(n);
        let t = tuples[pick % tuples.len()];
        let p = 1 + (p - 1) % (n - 1);
        let s = 1 + (s - 1) % (n as i64 - 1);
        let mut rel = twisted_relation(n, k, t).unwrap();
        rel.rhs[0].coeff = rel.rhs[0].coeff.mul(&TauScalar::tau_p(n, p, s));
        prop_assert!(!relation_residual(&rel).unwrap().is_zero());
    }

    #[test]
    fn chi_power_reduces(n in 2usize..=5, extra in 0usize..12) {
        let w = (0..n + extra).fold(CrossedPoly::one(n), |acc, _| acc.mul(&CrossedPoly::chi(n)));
        let terms = w.normalize().terms();
        prop_assert_eq!(terms.len(), 1);
        prop_assert_eq!(terms[0].chi_power, extra % n);
    }
}
