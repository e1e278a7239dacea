//! Property tests for the spec-level invariants: membership semantics of the
//! ideal operations, filtration laws of the closure cache, oracle agreement,
//! and the transform round trips.

use num_bigint::{BigInt, BigUint};
use proptest::collection::vec;
use proptest::prelude::*;

use monocle_core::closure::{ClosureCache, OracleTable};
use monocle_core::exponent::ExponentVector;
use monocle_core::filtration::{quotient_length_by_colength, reduction_number};
use monocle_core::graded::{f_from_h, h_vector, HilbertSeries, SimplicialComplex};
use monocle_core::hilbert::{colength, fit, HilbertTable};
use monocle_core::ideal::MonomialIdeal;
use monocle_core::lattice;
use monocle_core::newton::NewtonPolyhedron;
use monocle_core::theorems::{e1_sum_check, hspoly_bound_check};

fn raw_gens(dim: usize, max_gens: usize, max_exp: u64) -> impl Strategy<Value = Vec<Vec<u64>>> {
    vec(vec(0..=max_exp, dim), 1..=max_gens)
}

fn ideal_from(raw: &[Vec<u64>], dim: usize) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        raw.iter().map(|g| ExponentVector::from_u64s(g)).collect(),
        dim,
    )
    .unwrap()
}

fn box_points(dim: usize, bound: u64) -> Vec<ExponentVector> {
    let bounds = vec![BigUint::from(bound); dim];
    lattice::points_in_box(&bounds).unwrap()
}

/// Membership in the ideal generated by a raw (possibly non-minimal) set.
fn raw_membership(raw: &[Vec<u64>], point: &ExponentVector) -> bool {
    raw.iter()
        .any(|g| ExponentVector::from_u64s(g).divides(point))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_preserves_membership_and_is_idempotent(raw in raw_gens(2, 5, 4)) {
        let ideal = ideal_from(&raw, 2);
        let again = MonomialIdeal::minimalize(ideal.gens().to_vec(), 2).unwrap();
        prop_assert!(ideal.equals(&again).unwrap());
        for point in box_points(2, 6) {
            prop_assert_eq!(
                ideal.contains_monomial(&point).unwrap(),
                raw_membership(&raw, &point)
            );
        }
    }

    #[test]
    fn product_membership_means_a_split_exists(
        raw_a in raw_gens(2, 3, 3),
        raw_b in raw_gens(2, 3, 3),
    ) {
        let a = ideal_from(&raw_a, 2);
        let b = ideal_from(&raw_b, 2);
        let product = a.multiply(&b).unwrap();
        for point in box_points(2, 6) {
            let in_product = product.contains_monomial(&point).unwrap();
            let coords: Vec<u64> = point
                .coords()
                .iter()
                .map(|c| u64::try_from(c).unwrap())
                .collect();
            let mut split = false;
            'outer: for x in 0..=coords[0] {
                for y in 0..=coords[1] {
                    let part = ExponentVector::from_u64s(&[x, y]);
                    let rest = ExponentVector::from_u64s(&[coords[0] - x, coords[1] - y]);
                    if a.contains_monomial(&part).unwrap() && b.contains_monomial(&rest).unwrap() {
                        split = true;
                        break 'outer;
                    }
                }
            }
            prop_assert_eq!(in_product, split);
        }
    }

    #[test]
    fn intersection_membership_is_conjunction(
        raw_a in raw_gens(2, 4, 4),
        raw_b in raw_gens(2, 4, 4),
    ) {
        let a = ideal_from(&raw_a, 2);
        let b = ideal_from(&raw_b, 2);
        let meet = a.intersect(&b).unwrap();
        for point in box_points(2, 8) {
            prop_assert_eq!(
                meet.contains_monomial(&point).unwrap(),
                a.contains_monomial(&point).unwrap() && b.contains_monomial(&point).unwrap()
            );
        }
    }

    #[test]
    fn powers_multiply_additively(raw in raw_gens(2, 3, 3), m in 0u32..=3, n in 0u32..=3) {
        let ideal = ideal_from(&raw, 2);
        let lhs = ideal.power(m).multiply(&ideal.power(n)).unwrap();
        prop_assert!(lhs.equals(&ideal.power(m + n)).unwrap());
    }

    #[test]
    fn ideal_json_round_trips(raw in raw_gens(3, 4, 6)) {
        let ideal = ideal_from(&raw, 3);
        let text = serde_json::to_string(&ideal).unwrap();
        let back: MonomialIdeal = serde_json::from_str(&text).unwrap();
        prop_assert!(ideal.equals(&back).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closure_cache_filtration_laws(raw in raw_gens(2, 4, 3)) {
        let ideal = ideal_from(&raw, 2);
        let mut cache = ClosureCache::new(ideal).unwrap();
        for n in 1..=4 {
            cache.closure(n).unwrap();
        }
        cache.verify_filtration().unwrap();
    }

    #[test]
    fn closure_membership_is_monotone(raw in raw_gens(2, 4, 3), n in 1u32..=3) {
        let ideal = ideal_from(&raw, 2);
        let np = NewtonPolyhedron::of(&ideal).unwrap();
        for point in box_points(2, 6) {
            if np.membership_level(&point, n).unwrap() {
                for axis in 0..2 {
                    let mut coords: Vec<u64> = point
                        .coords()
                        .iter()
                        .map(|c| u64::try_from(c).unwrap())
                        .collect();
                    coords[axis] += 1;
                    let above = ExponentVector::from_u64s(&coords);
                    prop_assert!(np.membership_level(&above, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn quotient_lengths_telescope_against_colengths(exps in vec(1u64..=3, 2)) {
        let ideal = MonomialIdeal::parameter(&exps);
        let mut cache = ClosureCache::new(ideal.clone()).unwrap();
        let report = reduction_number(&mut cache, None, 6).unwrap();
        if let Some(r) = report.r_bar {
            // Beyond the certified reduction number the filtration telescopes:
            // closure(n+1) = I * closure(n), so colengths differ by exactly
            // l(R/I * closure(n)) - l(R/closure(n)).
            for n in r..5 {
                let product = ideal.multiply(&cache.closure(n).unwrap()).unwrap();
                let cl = cache.closure(n + 1).unwrap();
                prop_assert!(product.equals(&cl).unwrap());
                prop_assert_eq!(quotient_length_by_colength(&product, &cl).unwrap(), 0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    // Exact two-route agreement on the small family: the polyhedral verdict
    // and the power oracle coincide, with the oracle conclusive at k <= 12.
    #[test]
    fn oracle_and_polyhedron_agree(raw in raw_gens(3, 4, 4), n in 1u32..=4) {
        let ideal = ideal_from(&raw, 3);
        let np = NewtonPolyhedron::of(&ideal).unwrap();
        let n_big = BigUint::from(n);
        let bounds: Vec<BigUint> = ideal
            .max_coord_per_axis()
            .iter()
            .map(|m| m * &n_big)
            .collect();
        let table = OracleTable::build(&ideal, n, 12).unwrap();
        for point in lattice::points_in_box(&bounds).unwrap() {
            let polyhedral = np.membership_level(&point, n).unwrap();
            let oracle = table.witness(&point).unwrap().is_some();
            prop_assert_eq!(polyhedral, oracle, "at {:?}, n = {}", point, n);
        }
    }

    #[test]
    fn coefficient_checks_never_contradict_on_parameter_ideals(exps in vec(1u64..=3, 2..=3)) {
        let ideal = MonomialIdeal::parameter(&exps);
        let d = ideal.dim();
        let mut cache = ClosureCache::new(ideal).unwrap();
        let table = monocle_core::hilbert::normal_table(&mut cache, 2 * d as u32 + 2).unwrap();
        let fitted = fit(&table).unwrap();
        for k in 2..=d as u32 {
            // A contradiction with verified hypotheses surfaces as an
            // internal error; reports themselves may be unconfirmed.
            hspoly_bound_check(&mut cache, &fitted, k, 2 * d as u32 + 2).unwrap();
            e1_sum_check(&mut cache, &fitted, k, 2 * d as u32 + 2).unwrap();
        }
    }
}

fn subsets_of_size(vertices: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(start: usize, vertices: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in start..=vertices {
            current.push(v);
            recurse(v + 1, vertices, size, current, out);
            current.pop();
        }
    }
    recurse(1, vertices, size, &mut current, &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn f_h_round_trip_and_facet_count(
        size in 2usize..=4,
        picks in vec(any::<prop::sample::Index>(), 1..=6),
    ) {
        let vertices = 7;
        let all = subsets_of_size(vertices, size);
        let facets: Vec<Vec<usize>> = picks.iter().map(|i| all[i.index(all.len())].clone()).collect();
        let complex = SimplicialComplex::new(vertices, facets).unwrap();
        // Keep only pure samples (every facet file the same size by
        // construction, but containment pruning cannot change sizes here).
        let facet_size = complex.check_pure().unwrap();
        prop_assert_eq!(facet_size, size);

        let f = complex.f_vector();
        let h = h_vector(&f);
        let f_back = f_from_h(&h);
        let f_as_big: Vec<BigInt> = f.iter().map(|&x| BigInt::from(x)).collect();
        prop_assert_eq!(f_back, f_as_big);

        let h_sum: BigInt = h.iter().sum();
        prop_assert_eq!(h_sum, BigInt::from(complex.facets().len() as u64));
    }

    #[test]
    fn series_expansion_fits_to_the_same_coefficients(
        d in 2usize..=4,
        tail in vec(0i64..=5, 0..=3),
    ) {
        // Numerator (1, tail...) truncated to at most d+1 entries keeps the
        // function polynomial from n = 0 on, so the fit must recover the
        // series coefficients exactly.
        let mut h = vec![BigInt::from(1)];
        h.extend(tail.iter().take(d).map(|&x| BigInt::from(x)));
        let series = HilbertSeries::from_h(h, d);
        let n_max = 2 * d + 3;
        let values: Vec<u64> = series
            .hilbert_function(n_max)
            .iter()
            .map(|v| u64::try_from(v).unwrap())
            .collect();
        let table = HilbertTable {
            base: MonomialIdeal::maximal(d),
            values,
        };
        let fitted = fit(&table).unwrap();
        prop_assert_eq!(fitted.coeffs, series.coefficients());
        // The tabulated mismatches must stop exactly at the postulation
        // number the series predicts (deg numerator - d, when tabulated).
        let (postulation, _) = series.postulation_and_reduction(true).unwrap();
        let expected = if postulation >= 0 { Some(postulation) } else { None };
        prop_assert_eq!(fitted.postulation, expected);
    }
}

#[test]
fn closures_of_maximal_ideal_powers_are_fixed_points() {
    for d in 1..=3 {
        let m = MonomialIdeal::maximal(d);
        for n in 1..=4u32 {
            let power = m.power(n);
            let mut cache = ClosureCache::new(power.clone()).unwrap();
            assert!(cache.closure(1).unwrap().equals(&power).unwrap());
        }
    }
}

#[test]
fn colength_respects_containment() {
    let pairs = [
        (MonomialIdeal::parameter(&[3, 3]), MonomialIdeal::parameter(&[2, 2])),
        (MonomialIdeal::parameter(&[2, 4]), MonomialIdeal::parameter(&[2, 3])),
    ];
    for (inner, outer) in pairs {
        assert!(outer.contains_ideal(&inner).unwrap());
        assert!(colength(&inner).unwrap() >= colength(&outer).unwrap());
    }
}
