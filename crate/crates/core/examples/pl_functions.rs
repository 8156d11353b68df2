//! Exact piecewise-linear functions on [0, 1].
//!
//!     cargo run --example pl_functions

use riesz::rational::{q, z};
use riesz::spaces::PlFunction;

fn main() {
    let id = PlFunction::identity();
    let half = PlFunction::constant(q(1, 2));
    let hat = PlFunction::new(vec![z(0), q(1, 2), z(1)], vec![z(0), z(1), z(0)]).unwrap();

    // The join picks up the crossing at t = 1/2 as a new breakpoint.
    println!("id ∨ 1/2      = {:?}", id.join(&half));
    println!("hat ∧ id      = {:?}", hat.meet(&id));
    println!("hat - id      = {:?}", hat.sub(&id));
    println!("|hat - 1/2|   = {:?}", hat.sub(&half).abs());

    // Collinear breakpoints are dropped.
    let redundant = PlFunction::new(vec![z(0), q(1, 3), z(1)], vec![z(0), q(1, 3), z(1)]).unwrap();
    println!("canonical form of a straight line: {redundant:?}");

    for t in [z(0), q(1, 4), q(2, 3)] {
        println!("hat({t}) = {}", hat.eval(&t).unwrap());
    }
    println!("hat(3/2): {}", hat.eval(&q(3, 2)).unwrap_err());

    let u = PlFunction::constant(z(1)).add(&id);
    println!("\n‖id‖ w.r.t. 1 + id = {}", id.unit_norm(&u).unwrap());
    println!("‖hat‖ w.r.t. 1     = {}", hat.unit_norm(&PlFunction::constant(z(1))).unwrap());
    println!("id as a unit: {}", hat.unit_norm(&id).unwrap_err());

    println!("\nJSON: {}", serde_json::to_string(&hat).unwrap());
}
