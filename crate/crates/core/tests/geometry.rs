use dt4_core::geometry::*;
use dt4_core::partitions::*;
use dt4_core::*;

#[test]
fn local_curve_values_are_axis_independent() {
    let ins = Insertion::unit(DtMode::Cohomological);
    for m in NormalDegrees::test_set() {
        let g = ToricGeometry::local_curve(m);
        for n in min_chi(&g, &[1])..=2 {
            let base = dt_invariant(&g, n, &[1], &ins, &AxisChoices::default_for(&g), false).unwrap();
            for i0 in 1..=4 {
                for i1 in 1..=4 {
                    for j in 2..=4 {
                        let axes = AxisChoices { vertex: vec![i0, i1], edge: vec![j] };
                        let r = dt_invariant(&g, n, &[1], &ins, &axes, false).unwrap();
                        assert!(r.value.equals(&base.value), "m={m:?} n={n} axes={axes:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn local_curve_single_fixed_point_value() {
    let g = ToricGeometry::local_curve(NormalDegrees::new([-1, -1, 0]).unwrap());
    let ins = Insertion::unit(DtMode::KTheoretic);
    let r = dt_invariant(&g, 1, &[1], &ins, &AxisChoices::default_for(&g), false).unwrap();
    assert_eq!(r.terms, 1);
    for j in 2..=4 {
        let axes = AxisChoices { vertex: vec![4, 4], edge: vec![j] };
        assert!(dt_invariant(&g, 1, &[1], &ins, &axes, false).unwrap().value.equals(&r.value));
    }
}

#[test]
fn tvir_is_movable_everywhere() {
    let c4 = ToricGeometry::c4();
    for n in 1..=4 {
        for fp in enumerate_fixed_points(&c4, n, &[]).unwrap() {
            let t = assemble_tvir(&c4, &fp).unwrap();
            assert_eq!(t.fixed_part(), 0);
            assert_eq!(t.rank(), 2 * n);
        }
    }
    for m in NormalDegrees::test_set() {
        let g = ToricGeometry::local_curve(m);
        for d in 0..=2 {
            for n in series_start(&g, &[d])..=3 {
                for fp in enumerate_fixed_points(&g, n, &[d]).unwrap() {
                    assert_eq!(assemble_tvir(&g, &fp).unwrap().fixed_part(), 0, "{fp:?}");
                }
            }
        }
    }
    let k = ToricGeometry::kp3();
    for d in degree_vectors(6, 1) {
        for n in 1..=2 {
            for fp in enumerate_fixed_points(&k, n, &d).unwrap() {
                assert_eq!(assemble_tvir(&k, &fp).unwrap().fixed_part(), 0);
            }
        }
    }
}

#[test]
fn square_roots_assemble_to_tvir() {
    let g = ToricGeometry::local_curve(NormalDegrees::new([1, -2, -1]).unwrap());
    for n in min_chi(&g, &[2])..=2 {
        for fp in enumerate_fixed_points(&g, n, &[2]).unwrap() {
            let (_, v) = signed_square_root(&g, &fp, &AxisChoices::uniform(&g, 2, 3)).unwrap();
            assert_eq!(&v + &v.bar(), assemble_tvir(&g, &fp).unwrap());
        }
    }
}

#[test]
fn below_minimal_chi_is_empty() {
    let g = ToricGeometry::local_curve(NormalDegrees::new([0, 0, -2]).unwrap());
    let lo = min_chi(&g, &[2]);
    assert!(enumerate_fixed_points(&g, lo - 1, &[2]).unwrap().is_empty());
    assert!(!enumerate_fixed_points(&g, lo, &[2]).unwrap().is_empty());
}

#[test]
fn kp3_sign_patching_examples() {
    let k = ToricGeometry::kp3();
    for (n, d) in [(1, 0), (1, 1), (2, 0), (2, 1)] {
        let r = sign_patching_check(&k, n, d).unwrap();
        assert!(r.checked > 0 && r.failures.is_empty(), "n={n} d={d}");
    }
    assert_eq!(sign_patching_check(&k, 1, 0).unwrap().checked, 4);
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let g = ToricGeometry::c4();
    let ins = Insertion::mass_tautological(Weight::mass(), DtMode::KTheoretic);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| dt_invariant(&g, 2, &[], &ins, &AxisChoices::default_for(&g), true).unwrap())
            .to_json()
            .to_string()
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(4));
}

#[test]
fn elliptic_series_shape() {
    let g = ToricGeometry::c4();
    let r = dt_invariant(&g, 2, &[], &Insertion::unit(DtMode::Elliptic { order: 1 }), &AxisChoices::default_for(&g), false)
        .unwrap();
    let s = r.value.as_series().unwrap();
    assert_eq!(s.len(), 2);
    assert!(s[0].exponent < s[1].exponent);
}

#[test]
fn geometry_and_fixed_point_json() {
    let spec: GeometrySpec = serde_json::from_str(r#"{"kind":"KP3"}"#).unwrap();
    let k = ToricGeometry::from_spec(&spec).unwrap();
    let lc = ToricGeometry::local_curve(NormalDegrees::new([-1, -1, 0]).unwrap());
    let custom = serde_json::json!({
        "kind": "custom",
        "vertices": lc.frames(),
        "edges": lc.edges(),
    });
    let spec: GeometrySpec = serde_json::from_value(custom).unwrap();
    assert_eq!(ToricGeometry::from_spec(&spec).unwrap().frames(), lc.frames());
    for fp in enumerate_fixed_points(&k, 1, &[1, 0, 0, 0, 0, 0]).unwrap() {
        let s = serde_json::to_string(&fp).unwrap();
        let back: FixedPoint = serde_json::from_str(&s).unwrap();
        assert_eq!(back, fp);
        back.validate(&k).unwrap();
    }
}

#[test]
fn c4_unit_series_is_exponential() {
    // DT_n = DT_1^n / n! for the unit insertion on C4
    let g = ToricGeometry::c4();
    let rs = dt_series(&g, &Insertion::unit(DtMode::Cohomological), 3, &[]).unwrap();
    let one = rs[0].value.as_rational().unwrap().clone();
    let mut power = one.clone();
    for (k, r) in rs.iter().enumerate().skip(1) {
        power = power.mul(&one);
        let fact: i64 = (1..=k as i64 + 1).product();
        let expect = power.scale(&num_rational::BigRational::new(1.into(), fact.into()));
        assert!(r.value.as_rational().unwrap().equals(&expect), "n = {}", k + 1);
    }
}
