//! Riesz decomposition, unit norms and the non-Archimedean lexicographic plane.
//!
//!     cargo run --example decomposition_and_norms

use riesz::lattice::ops;
use riesz::rational::q;
use riesz::spaces::{FinDim, FinVec, Lex, LexPlane};
use riesz::Rational;

fn main() {
    let r3 = FinDim::new(3).unwrap();
    let x = FinVec::from_ints(&[3, 1, 0]);
    let a = FinVec::from_ints(&[2, 0, 1]);
    let b = FinVec::from_ints(&[2, 2, 0]);
    let (ap, bp) = ops::riesz_decompose(&r3, &x, &a, &b).unwrap();
    println!("x = {x:?} splits as {ap:?} + {bp:?}");

    // 0 <= x fails, so there is nothing to decompose.
    let bad = FinVec::from_ints(&[-1, 0, 0]);
    println!("decompose({bad:?}): {}", ops::riesz_decompose(&r3, &bad, &a, &b).unwrap_err());

    let u = FinVec::new(vec![q(1, 1), q(2, 1), q(1, 2)]);
    let y = FinVec::new(vec![q(-3, 2), q(1, 1), q(1, 4)]);
    println!("‖{y:?}‖ with unit {u:?} = {}", ops::unit_norm(&r3, &y, &u).unwrap());
    println!("‖{y:?}‖ with unit 𝟙 = {}", ops::unit_norm(&r3, &y, &r3.ones()).unwrap());
    let (pos, neg) = ops::parts(&r3, &y).unwrap();
    println!("y⁺ = {pos:?}, y⁻ = {neg:?}, |y| = {:?}", ops::abs(&r3, &y).unwrap());

    // In the lexicographic plane (0, 1) is infinitely small against (1, 0).
    let w = ops::find_infinitesimal(&LexPlane).unwrap();
    println!("\nlex plane: ε = {:?}, bound = {:?}", w.epsilon, w.bound);
    println!("  {}", w.certificate);
    for n in [1, 1_000, 1_000_000_000] {
        println!("  {n}·ε <= bound: {}", ops::infinitesimal_holds_at(&LexPlane, &w, n));
    }
    let unit = Lex::ints(1, 0);
    let norm = ops::unit_norm(&LexPlane, &w.epsilon, &unit).unwrap();
    println!("  ‖ε‖ = {norm}, so the unit norm is only a seminorm here");
    println!("  (0, 1) is a unit: {}", ops::is_unit(&LexPlane, &Lex::ints(0, 1)).unwrap());
    let z = Lex::new(Rational::zero(), q(5, 1));
    println!("  ‖{z:?}‖ = {}", ops::unit_norm(&LexPlane, &z, &unit).unwrap());
}
