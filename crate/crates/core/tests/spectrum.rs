use proptest::prelude::*;

use qtwist::abelian::CircleValue;
use qtwist::spectrum::{psi_tilde, spectrum_report, theta_w, weyl_group, TauSubgroupDual, TorusPoint};

#[test]
fn a2_table() {
    let r = spectrum_report(3, &[1, 0]).unwrap();
    assert_eq!(r.rows.len(), 6);
    assert_eq!(r.tau_group_order, 3);
    // χ_1(τ_1) = 1/3, χ_1(τ_2) = 0: z^3 = -1/3, z = 2/9 and ψ̃ = (2/9, -1/9, -1/9)
    let d = TauSubgroupDual::new(3, &[1, 0]).unwrap();
    assert_eq!(psi_tilde(&d, 1, 0).coords(), &[CircleValue::new(2, 9), CircleValue::new(8, 9), CircleValue::new(8, 9)]);
    for row in &r.rows {
        // every θ_w(χ) is (a, b, c) with entries in (1/3)Z
        for p in &row.image {
            assert!(p.coords().iter().all(|c| 3 % c.denom() == 0), "{p}");
        }
        assert_eq!(row.image.len() * row.kernel_order, 3);
    }
    let transposition = r.rows.iter().find(|row| row.w == vec![2, 1, 3]).unwrap();
    assert_eq!(transposition.image.len(), 3);
    assert_eq!(transposition.stabilizer.order, 1);
}

#[test]
fn json_rows() {
    let r = spectrum_report(2, &[1]).unwrap();
    let j = serde_json::to_value(&r).unwrap();
    assert_eq!(j["rows"][1]["image"][1], serde_json::json!(["1/2", "1/2"]));
    assert_eq!(j["q"], "q ≠ 1");
}

fn case() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (2usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(0..n as i64, n - 1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stabilizer_is_a_subgroup((n, t) in case()) {
        let d = TauSubgroupDual::new(n, &t).unwrap();
        let m = d.order();
        for w in weyl_group(n) {
            let stab: Vec<usize> = (0..m).filter(|&a| d.contains(&theta_w(&d, &w, a, 0))).collect();
            prop_assert!(stab.contains(&0));
            for &a in &stab {
                for &b in &stab {
                    prop_assert!(stab.contains(&d.chi_mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn psi_is_a_lift_up_to_center((n, t) in case(), branch in 0usize..4) {
        let d = TauSubgroupDual::new(n, &t).unwrap();
        for a in 0..d.order() {
            for b in 0..d.order() {
                // ψ̃ is multiplicative modulo the center
                let x = psi_tilde(&d, d.chi_mul(a, b), branch % n);
                let y = psi_tilde(&d, a, 0).mul(&psi_tilde(&d, b, 0));
                let q = x.mul(&y.inv());
                let c = q.coords();
                prop_assert!(c.iter().all(|v| *v == c[0]));
                prop_assert!(c[0].pow(n as i64).is_zero());
            }
        }
        prop_assert!(TorusPoint::new(psi_tilde(&d, d.order() - 1, branch % n).coords().to_vec()).is_ok());
    }
}
