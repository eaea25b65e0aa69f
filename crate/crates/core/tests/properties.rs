//! Randomized invariants over the public surface: the extended-real
//! algebra, convexity of every generated spec, infimum/sublevel coherence,
//! monotonicity symmetries, and byte-stable JSON round trips.

use infstab::extreal::{ext_add, ext_inf, ext_scale, rat, rat_int};
use infstab::{
    grid_points, parse_spec, spec_to_json, ExtReal, MonotonicityClass, SpecGen, SublevelSet,
};
use proptest::prelude::*;

fn ext_real() -> impl Strategy<Value = ExtReal> {
    prop_oneof![
        1 => Just(ExtReal::NegInf),
        6 => (-400i64..=400, 1i64..=20).prop_map(|(n, d)| ExtReal::Finite(rat(n, d))),
        1 => Just(ExtReal::PosInf),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 10_000, ..ProptestConfig::default() })]

    #[test]
    fn extended_order_is_total_transitive_and_antisymmetric(
        a in ext_real(),
        b in ext_real(),
        c in ext_real(),
    ) {
        prop_assert!(a <= b || b <= a);
        if a <= b && b <= a {
            prop_assert_eq!(&a, &b);
        }
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }
}

proptest! {
    #[test]
    fn extended_addition_commutes_and_associates_when_defined(
        a in ext_real(),
        b in ext_real(),
        c in ext_real(),
    ) {
        if let (Ok(ab), Ok(ba)) = (ext_add(&a, &b), ext_add(&b, &a)) {
            prop_assert_eq!(ab, ba);
        }
        let left = ext_add(&a, &b).and_then(|ab| ext_add(&ab, &c));
        let right = ext_add(&b, &c).and_then(|bc| ext_add(&a, &bc));
        if let (Ok(l), Ok(r)) = (left, right) {
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn the_infimum_of_a_union_is_the_smaller_infimum(
        s in prop::collection::vec(ext_real(), 0..8),
        t in prop::collection::vec(ext_real(), 0..8),
    ) {
        let both: Vec<ExtReal> = s.iter().chain(&t).cloned().collect();
        let split = ext_inf([ext_inf(s), ext_inf(t)]);
        prop_assert_eq!(ext_inf(both), split);
    }

    #[test]
    fn generated_specs_satisfy_the_convexity_inequality(seed in any::<u64>(), k in 1i64..16) {
        let f = SpecGen::new(seed).arbitrary();
        let lam = rat(k, 16);
        let co = rat_int(1) - &lam;
        let pts = grid_points(&f.domain, 7);
        for x in &pts {
            for y in &pts {
                let mix = &co * x + &lam * y;
                let lhs = f.eval(&mix).expect("intervals are closed under convex mixes");
                let fx = f.eval(x).expect("grid point lies in C");
                let fy = f.eval(y).expect("grid point lies in C");
                // Skip the one undefined combination of opposite infinities.
                if let Ok(rhs) = ext_add(&ext_scale(&fx, &co), &ext_scale(&fy, &lam)) {
                    prop_assert!(
                        lhs <= rhs,
                        "f({mix}) = {lhs} exceeds the chord {rhs} between x = {x} and y = {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn the_infimum_bounds_every_sampled_value(seed in any::<u64>()) {
        let f = SpecGen::new(seed).arbitrary();
        let m = f.infimum();
        for x in grid_points(&f.domain, 17) {
            let v = f.eval(&x).expect("grid point lies in C");
            prop_assert!(m <= v, "f({x}) = {v} undercuts the infimum {m}");
        }
    }

    #[test]
    fn monotonicity_survives_vertical_shift_and_flips_horizontally(
        seed in any::<u64>(),
        c in -20i64..=20,
    ) {
        let f = SpecGen::new(seed).arbitrary();
        let m = f.monotonicity_class();
        prop_assert_eq!(f.shift_values(&rat(c, 3)).monotonicity_class(), m);
        let expected = match m {
            MonotonicityClass::NondecreasingOnly => MonotonicityClass::NonincreasingOnly,
            MonotonicityClass::NonincreasingOnly => MonotonicityClass::NondecreasingOnly,
            other => other,
        };
        prop_assert_eq!(f.flip_x().monotonicity_class(), expected);
    }

    #[test]
    fn sublevel_sets_agree_with_membership_and_the_infimum_dichotomy(
        seed in any::<u64>(),
        bump in -3i64..=3,
    ) {
        let f = SpecGen::new(seed).arbitrary();
        let pts = grid_points(&f.domain, 11);
        let mut levels = vec![ExtReal::NegInf, ExtReal::PosInf, ExtReal::Finite(rat_int(bump))];
        if let ExtReal::Finite(m) = f.infimum() {
            levels.push(ExtReal::Finite(m.clone() + rat(bump, 2)));
            levels.push(ExtReal::Finite(m));
        }
        for c in &levels {
            let set = f.sublevel_interval(c);
            for x in &pts {
                let inside = match &set {
                    SublevelSet::Empty => false,
                    SublevelSet::Point(p) => x == p,
                    SublevelSet::Interval(iv) => iv.contains(x),
                };
                let holds = f.eval(x).expect("grid point lies in C") <= *c;
                prop_assert_eq!(inside, holds, "x = {}, level = {}", x, c);
            }
            let nonempty = !matches!(set, SublevelSet::Empty);
            let m = f.infimum();
            if m > *c {
                prop_assert!(!nonempty, "level {} below the infimum {}", c, m);
            } else if m < *c {
                prop_assert!(nonempty, "level {} above the infimum {}", c, m);
            } else {
                prop_assert_eq!(nonempty, f.infimum_attained(), "level = infimum = {}", m);
            }
        }
    }

    #[test]
    fn specs_round_trip_through_json_bytes(seed in any::<u64>()) {
        let f = SpecGen::new(seed).arbitrary();
        let text = spec_to_json(&f);
        let back = parse_spec(&text).expect("serialized specs parse back");
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(spec_to_json(&back), text);
    }
}
