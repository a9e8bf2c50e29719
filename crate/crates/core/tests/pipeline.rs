use ambitoric_core::ambitoric::{condition_report, validate_data};
use ambitoric_core::catalog::{bachflat_search, bisect_toward_seed, extremal_search, random_extremal, wpp_from_beta};
use ambitoric_core::exactmath::{frac, int, Rational};
use ambitoric_core::numcheck::{fd_closedness, interior_points, FDConfig};
use ambitoric_core::polytope::{build_polytope, lattice_check, moments};
use ambitoric_core::stability::{extremal_field, stability_verdict, Verdict};
use ambitoric_core::{AmbitoricData, AmbitoricType, Side};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn b1234() -> [Rational; 4] {
    [1, 2, 3, 4].map(int)
}

#[test]
fn catalog_to_verdict() {
    for search in [extremal_search, bachflat_search] {
        let r = bisect_toward_seed(search, b1234(), [frac(21, 10), frac(29, 10)]).unwrap();
        assert!(r.success, "{:?}", r.violations);
        let d = &r.data;
        assert!(condition_report(d).extremal);
        let p = build_polytope(d).unwrap();
        let ef = extremal_field(&moments(&p).unwrap()).unwrap();
        let rep = stability_verdict(d).unwrap();
        assert_eq!(rep.extremal_field, ef);
        assert_eq!(rep.verdict, Verdict::Polystable);
    }
}

#[test]
fn json_round_trip() {
    let d = AmbitoricData::bach_flat_example();
    let s = serde_json::to_string(&d).unwrap();
    assert!(s.contains(r#""type":"hyperbolic""#));
    assert_eq!(serde_json::from_str::<AmbitoricData>(&s).unwrap(), d);
    let w = wpp_from_beta(b1234()).unwrap();
    let v: serde_json::Value = serde_json::to_value(&w).unwrap();
    assert_eq!(v["s_avg"], "26");
}

#[test]
fn random_data_are_closed_and_labelled() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let cfg = FDConfig::new(1e-5, false, 1e-7).unwrap();
    for kind in AmbitoricType::ALL {
        let d = random_extremal(&mut rng, kind, false, 50_000).unwrap();
        validate_data(&d).unwrap();
        let p = build_polytope(&d).unwrap();
        assert_eq!(p.facets.len(), 4);
        assert!(lattice_check(&p).unwrap().vertex_condition);
        let pts = interior_points(&d, 30, 1, 0.02);
        assert!(fd_closedness(&d, Side::Minus, &pts, &cfg).unwrap().within(1e-7), "{kind}");
    }
}
