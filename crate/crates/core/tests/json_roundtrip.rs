use proptest::prelude::*;
use riesz::approx::LatticeExpr;
use riesz::duality::{FiniteSpace, SpaceMap, SpectrumPoint};
use riesz::ideals::{FinHom, SupportIdeal};
use riesz::spaces::{FinVec, Lex, PlFunction};
use riesz::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..200).prop_map(|(p, q)| Rational::new(p, q))
}

fn round_trip<T>(v: &T) -> T
where
    T: serde::Serialize + serde::de::DeserializeOwned,
{
    serde_json::from_str(&serde_json::to_string(v).unwrap()).unwrap()
}

fn expr() -> impl Strategy<Value = LatticeExpr> {
    let leaf = prop_oneof![(0usize..3).prop_map(LatticeExpr::gen), rational().prop_map(LatticeExpr::constant),];
    leaf.prop_recursive(4, 32, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| LatticeExpr::plus(a, b)),
            (rational(), inner.clone()).prop_map(|(l, e)| LatticeExpr::scale(l, e)),
            proptest::collection::vec(inner.clone(), 2..4).prop_map(LatticeExpr::join),
            proptest::collection::vec(inner, 2..4).prop_map(LatticeExpr::meet),
        ]
    })
}

proptest! {
    #[test]
    fn rationals_and_vectors(v in proptest::collection::vec(rational(), 1..6)) {
        let x = FinVec::new(v.clone());
        prop_assert_eq!(round_trip(&x), x);
        let l = Lex::new(v[0].clone(), v[v.len() - 1].clone());
        prop_assert_eq!(round_trip(&l), l);
    }

    #[test]
    fn pl_functions(vals in proptest::collection::vec(rational(), 2..6)) {
        let n = vals.len() as i64;
        let t = (0..n).map(|k| Rational::new(k, n - 1)).collect();
        let f = PlFunction::new(t, vals).unwrap();
        prop_assert_eq!(round_trip(&f), f);
    }

    #[test]
    fn expressions(e in expr()) {
        prop_assert_eq!(round_trip(&e), e);
    }

    #[test]
    fn homs_and_ideals(assign in proptest::collection::vec((0usize..4, 1i64..50, 1i64..50), 1..5),
                       mask in 0u32..16) {
        let h = FinHom::new(4, assign.into_iter().map(|(i, p, q)| (i, Rational::new(p, q))).collect()).unwrap();
        prop_assert_eq!(round_trip(&h), h);
        let d = SupportIdeal::new(4, (0..4).filter(|i| mask & (1 << i) != 0)).unwrap();
        prop_assert_eq!(round_trip(&d), d);
        let p = SpectrumPoint::new(2, Rational::new(1, 3)).unwrap();
        prop_assert_eq!(round_trip(&p), p);
    }

    #[test]
    fn spaces_and_maps(assign in proptest::collection::vec(0usize..3, 1..5)) {
        let x = FiniteSpace::numbered(assign.len()).unwrap();
        let y = FiniteSpace::new(["a", "b", "c"]).unwrap();
        prop_assert_eq!(round_trip(&x), x.clone());
        let f = SpaceMap::new(x.clone(), y.clone(), assign).unwrap();
        prop_assert_eq!(SpaceMap::from_json(x, y, &f.to_json()).unwrap(), f);
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(serde_json::from_str::<Rational>("\"1.5\"").is_err());
    assert!(serde_json::from_str::<PlFunction>(r#"{"t":["0","1/2"],"v":["1","2"]}"#).is_err());
    assert!(serde_json::from_str::<PlFunction>(r#"{"t":["0","1/2","1/2","1"],"v":["1","2","3","4"]}"#).is_err());
    assert!(serde_json::from_str::<FiniteSpace>(r#"{"points":["a","a"]}"#).is_err());
    assert!(serde_json::from_str::<FinHom>(r#"{"source":2,"assign":[{"from":5,"coeff":"1"}]}"#).is_err());
    assert!(serde_json::from_str::<FinHom>(r#"{"source":2,"assign":[{"from":0,"coeff":"-1"}]}"#).is_err());
}
