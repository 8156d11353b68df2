//! Support ideals of R^n, quotients, maximal ideals and separating
//! homomorphisms.
//!
//!     cargo run --example ideals

use riesz::ideals::{
    enumerate_ideals, is_riesz_ideal, maximal_ideals, perp_ideal, quotient, separating_hom, SupportIdeal,
};
use riesz::spaces::FinVec;

fn main() {
    let n = 3;
    for ideal in enumerate_ideals(n).unwrap() {
        let ok = is_riesz_ideal(&ideal, 200, 1).unwrap().passed();
        println!("D with zero set {:?}: dim {}, solid: {ok}", ideal.zero_set, ideal.dim());
    }

    let unit = FinVec::from_ints(&[1, 2, 4]);
    let d = SupportIdeal::new(n, [0, 2]).unwrap();
    let q = quotient(n, &unit, &d).unwrap();
    let x = FinVec::from_ints(&[5, 0, -1]);
    println!("\nR^3 / D{:?}: q({x:?}) = {:?}, unit {:?}", d.zero_set, q.map.apply(&x).unwrap(), q.unit);
    println!("kernel of q = zero set {:?}", q.map.kernel().zero_set);
    println!("quotient by the whole space: {}", quotient(n, &unit, &SupportIdeal::whole(n)).unwrap_err());

    for m in maximal_ideals(n).unwrap() {
        let line = quotient(n, &unit, &m).unwrap();
        println!("maximal {:?} -> quotient of dimension {}", m.zero_set, line.space.dim());
    }

    let a = FinVec::from_ints(&[0, 3, 0]);
    println!("\n{a:?}⊥ has zero set {:?}", perp_ideal(&a).zero_set);
    let phi = separating_hom(&a, &unit).unwrap();
    println!("φ = {} · x_{} separates it: φ(a) = {}, φ(u) = {}", phi.coeff, phi.index, phi.eval(&a), phi.eval(&unit));
}
