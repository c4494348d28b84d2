use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use perioddomain::chevalley::WeylBasis;
use perioddomain::classify::{classify, Catalog};
use perioddomain::cohomology::symmetric_pairs;
use perioddomain::curvature::{
    commuting_pairs, diagonal_coefficient_idx, xi_eval_commuting, xi_eval_commuting_ordered, xi_eval_direct, HorizontalVector,
    PairStrategy,
};
use perioddomain::hodge::HodgeDatum;
use perioddomain::rootsys::{CartanType, RootSystem};
use perioddomain::scalar::{q, qi, Scalar};
use perioddomain::suite::canonical_json;

fn small_types() -> Vec<CartanType> {
    CartanType::all_up_to(4)
}

fn any_type(max_rank: usize) -> impl Strategy<Value = CartanType> {
    let types = CartanType::all_up_to(max_rank);
    (0..types.len()).prop_map(move |i| types[i])
}

/// A small type with a nonzero marking of entries in `0..=2`.
fn any_datum() -> impl Strategy<Value = (CartanType, Vec<i64>)> {
    (0..small_types().len())
        .prop_flat_map(|i| {
            let t = small_types()[i];
            (Just(t), proptest::collection::vec(0i64..=2, t.rank))
        })
        .prop_filter("nonzero marking", |(_, m)| m.iter().any(|&x| x != 0))
}

fn datum(t: CartanType, m: &[i64]) -> (Arc<WeylBasis>, HodgeDatum) {
    let rs = Arc::new(RootSystem::new(t));
    let wb = Arc::new(WeylBasis::new(Arc::clone(&rs)));
    let hd = HodgeDatum::from_marking(rs, m).unwrap();
    (wb, hd)
}

fn gaussian_vector(n: usize, seed: &[(i8, i8)]) -> HorizontalVector {
    HorizontalVector {
        components: (0..n).map(|i| {
            let (a, b) = seed[i % seed.len()];
            Scalar::gaussian(a as i64, b as i64)
        }).collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn reflections_permute_roots(t in any_type(8), k in any::<prop::sample::Index>()) {
        let rs = RootSystem::new(t);
        let b = rs.root(k.index(rs.num_roots())).clone();
        let all: BTreeSet<_> = rs.roots().iter().cloned().collect();
        let image: BTreeSet<_> = rs.roots().iter().map(|a| rs.reflect(a, &b)).collect();
        prop_assert_eq!(all, image);
    }

    #[test]
    fn cartan_integers_and_invariant_form(t in any_type(8), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let rs = RootSystem::new(t);
        let n = rs.num_roots();
        let (a, b, s) = (rs.root(i.index(n)), rs.root(j.index(n)), rs.root(k.index(n)));
        let c = qi(2) * rs.inner_product(a, b) / rs.inner_product(b, b);
        prop_assert!(c.is_integer());
        prop_assert_eq!(rs.inner_product(&rs.reflect(a, s), &rs.reflect(b, s)), rs.inner_product(a, b));
    }

    #[test]
    fn grading_is_additive_and_signs_flip((t, m) in any_datum()) {
        let (_, hd) = datum(t, &m);
        let rs = hd.root_system();
        for a in 0..rs.num_roots() {
            prop_assert_eq!(hd.is_compact(a), hd.degree(a) % 2 == 0);
            for b in 0..rs.num_roots() {
                if let Some(s) = rs.sum_index(a, b) {
                    prop_assert_eq!(hd.degree(s), hd.degree(a) + hd.degree(b));
                    prop_assert_eq!(hd.epsilon(s), -hd.epsilon(a) * hd.epsilon(b));
                }
            }
        }
        let mut covered: Vec<usize> = hd.blocks().into_iter().flat_map(|b| b.roots).collect();
        covered.sort_unstable();
        let mut horizontal = hd.horizontal().to_vec();
        horizontal.sort_unstable();
        let ones_only = m.iter().all(|&x| x <= 1);
        if ones_only {
            prop_assert_eq!(covered, horizontal);
        }
    }

    #[test]
    fn horizontal_brackets_land_in_degree_zero((t, m) in any_datum(), seed in proptest::collection::vec((-3i8..=3, -3i8..=3), 1..6)) {
        let (wb, hd) = datum(t, &m);
        let n = hd.horizontal().len();
        prop_assume!(n > 0);
        let x = gaussian_vector(n, &seed).to_lie(&hd);
        let eps = |a: usize| hd.epsilon(a);
        for y in [wb.tau(&x), wb.sigma(&x, &eps)] {
            let br = wb.bracket(&x, &y);
            for a in br.roots.keys() {
                prop_assert_eq!(hd.degree(*a), 0);
            }
        }
    }

    #[test]
    fn direct_form_is_real((t, m) in any_datum(), s1 in proptest::collection::vec((-3i8..=3, -3i8..=3), 1..6), s2 in proptest::collection::vec((-3i8..=3, -3i8..=3), 1..6)) {
        let (wb, hd) = datum(t, &m);
        let n = hd.horizontal().len();
        prop_assume!(n > 0);
        let v = xi_eval_direct(&wb, &hd, &gaussian_vector(n, &s1), &gaussian_vector(n, &s2)).unwrap();
        prop_assert!(v.is_real());
    }

    #[test]
    fn commuting_form_ignores_order_and_is_nonnegative((t, m) in any_datum(), seed in any::<u64>(), perm in any::<u64>()) {
        let (wb, hd) = datum(t, &m);
        let n = hd.horizontal().len();
        let mut order: Vec<usize> = (0..n).collect();
        // Deterministic shuffle driven by `perm`.
        let mut state = perm;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        for (x, y) in commuting_pairs(&hd, &wb, PairStrategy::Mixed, seed, 8) {
            let v = xi_eval_commuting(&wb, &hd, &x, &y).unwrap();
            prop_assert_eq!(&xi_eval_commuting_ordered(&wb, &hd, &x, &y, &order).unwrap(), &v);
            prop_assert!(v.is_real());
            prop_assert!(v.real_sign() != Some(std::cmp::Ordering::Less), "{} on {}", v, hd.label());
            let c = Scalar::gaussian(2, -1);
            let scaled = xi_eval_commuting(&wb, &hd, &x.scale(&c), &y).unwrap();
            prop_assert_eq!(scaled, v.scale(&qi(5)));
            prop_assert!(xi_eval_commuting(&wb, &hd, &x, &x.scale(&c)).unwrap().is_zero());
        }
    }

    #[test]
    fn diagonal_coefficients_are_nonnegative((t, m) in any_datum()) {
        let (wb, hd) = datum(t, &m);
        for &a in hd.horizontal() {
            for &b in hd.horizontal() {
                prop_assert!(diagonal_coefficient_idx(&wb, a, b) >= q(0, 1));
            }
        }
    }
}

#[test]
fn equal_rank_poincare_polynomials_are_palindromic() {
    for pair in symmetric_pairs(8).iter().filter(|p| p.is_equal_rank()) {
        let p = pair.poincare().unwrap();
        assert!(p.is_palindromic() && p.odd_vanishes(), "{}: {p}", pair.name);
        assert_eq!(p.degree(), pair.dim(), "{}", pair.name);
    }
}

#[test]
fn classification_json_round_trips() {
    for f in &Catalog::builtin().forms {
        let s = canonical_json(&classify(f));
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap(), s);
    }
}
