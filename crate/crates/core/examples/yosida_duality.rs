//! Spectra, the Yosida transform and the duality between finite discrete
//! spaces and unital R^n.
//!
//!     cargo run --example yosida_duality

use rand::SeedableRng;
use riesz::duality::{
    c_of_map, check_naturality_hom, check_naturality_map, phi_of_hom, random_unit_hom, roundtrip_algebra,
    roundtrip_space, spectrum, unit_change_iso, yosida_transform, FiniteSpace, SpaceMap,
};
use riesz::lattice::SeededRng;
use riesz::spaces::FinVec;

fn main() {
    let u = FinVec::from_ints(&[1, 2, 4]);
    for p in spectrum(3, &u).unwrap() {
        println!("spectrum point: {} · x_{}", p.coeff, p.index);
    }
    let x = FinVec::from_ints(&[3, -2, 1]);
    println!("x̂ for x = {x:?}: {:?}", yosida_transform(&x, &u).unwrap());
    println!("û = {:?}", yosida_transform(&u, &u).unwrap());

    let e = FinVec::from_ints(&[1, 1, 1]);
    for (a, b) in unit_change_iso(3, &e, &u).unwrap().pairs {
        println!("unit change: {}·x_{} ↦ {}·x_{}", a.coeff, a.index, b.coeff, b.index);
    }

    let rt = roundtrip_algebra(3, &u, 100, 5).unwrap();
    println!("\nCΦ ≅ id on (R^3, u): checked on {} samples", rt.samples);

    let x = FiniteSpace::new(["a", "b", "c"]).unwrap();
    for (label, d) in roundtrip_space(&x).unwrap() {
        println!("δ_{label} = evaluation at index {}", d.index);
    }

    let y = FiniteSpace::new(["p", "q"]).unwrap();
    let f = SpaceMap::from_json(x.clone(), y.clone(), r#"{"map":{"a":"p","b":"p","c":"q"}}"#).unwrap();
    println!("\nf = {}", f.to_json());
    println!("C(f) = {:?}", c_of_map(&f).assignment());
    println!("{}", check_naturality_map(&f, 20, 1).unwrap().law);

    let mut rng = SeededRng::seed_from_u64(9);
    let v = FinVec::from_ints(&[2, 3]);
    let h = random_unit_hom(&u, &v, &mut rng);
    let phi_h = phi_of_hom(&h, &u, &v).unwrap();
    println!("h = {:?}, Φ(h) sends spectrum point j to {:?}", h.assignment(), phi_h.assign);
    let rep = check_naturality_hom(&h, &u, &v, 50, 2).unwrap();
    println!("{}: {}", rep.law, if rep.passed() { "ok" } else { "FAILED" });
}
