//! Built-in smoke checks on embedded presentations, runnable without a
//! monoid file.

use artin_core::cliques::{clique_polynomial, pinf};
use artin_core::kms::{self, Family, KmsOptions};
use artin_core::reversing::{self, SetLcm};
use artin_core::word::{self, Word};
use artin_core::{fixtures, IntPoly};

pub fn run() -> u8 {
    let mut failures = 0usize;
    let mut check = |name: &str, ok: bool| {
        println!("{}: {}", name, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    let b3 = fixtures::b3();
    let b4 = fixtures::b4();
    let cap = 1_000_000;

    check(
        "B3 clique polynomial is 1 - 2t + t^3",
        clique_polynomial(&b3, cap) == Ok(IntPoly::from_i64(&[1, -2, 0, 1])),
    );
    check(
        "B4 clique polynomial is 1 - 3t + t^2 + 2t^3 - t^6",
        clique_polynomial(&b4, cap) == Ok(IntPoly::from_i64(&[1, -3, 1, 2, 0, 0, -1])),
    );

    let atoms: Vec<Word> = b4.atoms().map(Word::single).collect();
    let delta_ok = match reversing::lcm_set(&b4, &atoms, cap) {
        SetLcm::Lcm(delta) => {
            delta.len() == 6
                && word::equal(
                    &b4,
                    &delta,
                    &b4.parse_word("s3.s2.s1.s3.s2.s3").unwrap(),
                    100_000,
                )
                .unwrap_or(false)
        }
        _ => false,
    };
    check("B4 atom lcm is s3s2s1s3s2s3", delta_ok);

    let p3 = pinf(&b3, 64, cap);
    check(
        "B3 minimal set is {s1, s2, s1s2, s2s1}",
        p3.as_ref()
            .map(|p| p.saturated && p.len() == 4)
            .unwrap_or(false),
    );

    let raam = fixtures::raam_rank3();
    let praam = pinf(&raam, 64, cap);
    check(
        "right-angled minimal set is the atoms",
        praam
            .map(|p| p.saturated && p.elements.iter().all(|w| w.len() == 1))
            .unwrap_or(false),
    );

    let growth = word::growth_coefficients(&b3, 6, 100_000, 1_000_000).unwrap_or_default();
    check(
        "B3 growth starts 1, 2, 4, 7, 12, 20, 33",
        growth == vec![1, 2, 4, 7, 12, 20, 33],
    );

    let space = kms::temperature_space(&b3, Family::Atoms, &KmsOptions::default());
    let space_ok = space
        .map(|s| {
            s.components.len() == 2
                && s.beta_zero_included
                && s.includes_plus_infinity
                && matches!(s.components[0], kms::BetaComponent::Point(_))
        })
        .unwrap_or(false);
    check("B3 temperature space is {0} plus a closed ray", space_ok);

    let gap = kms::detect_gap(&b4, Family::Atoms, &KmsOptions::default());
    check(
        "B4 has a KMS gap with a negative witness",
        gap.map(|g| {
            g.has_gap
                && g.gaps
                    .iter()
                    .all(|x| x.witness_value < num_traits::Zero::zero())
        })
        .unwrap_or(false),
    );

    if failures == 0 {
        println!("selftest: all checks passed");
        0
    } else {
        println!("selftest: {failures} check(s) failed");
        1
    }
}
