//! Cross-module agreement checks: the closed-form packing numbers, the
//! subset-clique packing oracle, and the codeword-clique search are three
//! independent routes to overlapping quantities. Where two routes reach the
//! same quantity they must agree exactly; where they reach different
//! quantities the counting sandwich must hold. Expected constants below were
//! produced by the exact searches themselves (which certify every answer
//! with a verified clique) and are frozen here as regression pins.

use twodist::bounds::barg_upper;
use twodist::clique::Unbudgeted;
use twodist::packings::{packing_number_formula, quadruple_packing_number};
use twodist::search::{exact_a2, packing_number_oracle, SearchLimits};
use twodist::TwoDistanceParams;

fn limits() -> SearchLimits {
    SearchLimits::default()
}

fn params(n: u32, d1: u32, d2: u32) -> TwoDistanceParams {
    TwoDistanceParams::new(n, d1, d2).unwrap()
}

/// The four small orders where the quadruple closed form declines: the
/// subset search pins the true packing numbers, each strictly below both
/// counting caps (the pair cap C(v,2)/6 and the degree cap
/// `⌊v·⌊(v-1)/3⌋/4⌋`), which is exactly why no residue formula covers them.
#[test]
fn exceptional_quadruple_orders_have_search_pinned_values() {
    for (v, expected) in [(8u32, 2u64), (9, 3), (10, 5), (11, 6)] {
        assert_eq!(quadruple_packing_number(u64::from(v)), None, "v={v}");
        let r = packing_number_oracle(v, 4, &limits(), &mut Unbudgeted).unwrap();
        assert!(r.exact, "v={v}");
        assert_eq!(r.value, expected, "v={v}");
        assert!(r.certificate.verify().valid, "v={v}");
        let pair_cap = u64::from(v) * u64::from(v - 1) / 2 / 6;
        let degree_cap = u64::from(v) * u64::from((v - 1) / 3) / 4;
        assert!(
            r.value < pair_cap.min(degree_cap),
            "v={v}: {} should fall short of caps {pair_cap}/{degree_cap}",
            r.value
        );
    }
}

/// At thirteen points both counting caps coincide with the closed form and
/// the search meets them: a tight order right after the exceptional run.
#[test]
fn thirteen_points_meet_both_quadruple_caps() {
    let r = packing_number_oracle(13, 4, &limits(), &mut Unbudgeted).unwrap();
    assert!(r.exact);
    assert_eq!(Some(r.value), quadruple_packing_number(13));
    assert_eq!(r.value, 13);
    assert!(r.certificate.verify().valid);
}

/// For distances {d, d+2} the family of block characteristic vectors is a
/// code with exactly those distances, so the packing number bounds the code
/// size from below; the pair-counting bound caps it from above. Both sides
/// are computed, not assumed: the formula and the subset oracle must agree
/// on the lower end, and the exact code search must land in between.
#[test]
fn packing_code_pair_cap_sandwich() {
    for (n, d, expected) in [(6u32, 4u32, 4u32), (7, 4, 8), (8, 4, 10), (9, 4, 16)] {
        let k = d / 2 + 1;
        let formula = packing_number_formula(u64::from(n), k).unwrap().unwrap();
        let oracle = packing_number_oracle(n, k, &limits(), &mut Unbudgeted).unwrap();
        assert!(oracle.exact, "n={n}");
        assert_eq!(oracle.value, formula, "n={n}");

        let r = exact_a2(&params(n, d, d + 2), false, &limits(), &mut Unbudgeted).unwrap();
        assert!(r.exact, "n={n}");
        assert_eq!(r.value, expected, "n={n}");
        assert!(u64::from(r.value) >= formula, "n={n}: lower end");
        assert!(
            u64::from(r.value) <= barg_upper(n).unwrap(),
            "n={n}: upper end"
        );
        assert_eq!(r.certificate.size(), r.value as usize, "n={n}");
    }
}

/// Where the best code is a constant-weight family (plus nothing else of
/// help), the code search and the subset search return the same number by
/// entirely different graph constructions.
#[test]
fn code_and_subset_searches_agree_where_constant_weight_wins() {
    for (n, d) in [(6u32, 4u32), (8, 6)] {
        let k = d / 2 + 1;
        let code_side = exact_a2(&params(n, d, d + 2), false, &limits(), &mut Unbudgeted).unwrap();
        let subset_side = packing_number_oracle(n, k, &limits(), &mut Unbudgeted).unwrap();
        assert!(code_side.exact && subset_side.exact, "n={n}");
        assert_eq!(u64::from(code_side.value), subset_side.value, "n={n}");
    }
}

/// With minimum distance two the pair-counting cap is achieved exactly:
/// the optimum is 1 + C(n,2), realized by the weight-two words plus zero
/// and one heavier word to witness the larger distance.
#[test]
fn pair_counting_cap_is_achieved_at_minimum_distance_two() {
    for n in 6u32..=8 {
        let r = exact_a2(&params(n, 2, 4), true, &limits(), &mut Unbudgeted).unwrap();
        assert!(r.exact, "n={n}");
        assert_eq!(u64::from(r.value), barg_upper(n).unwrap(), "n={n}");
        assert!(r.both_distances_realized, "n={n}");
        let dists = r.certificate.distance_set();
        assert!(dists.contains(&2) && dists.contains(&4), "n={n}");
    }
}
