//! Lattice Stone–Weierstrass: approximating a target by joins and meets of
//! affine functions.
//!
//!     cargo run --example stone_weierstrass

use riesz::approx::{
    expr_error, expr_to_pl, sw_approximate, sw_approximate_pl, sw_approximate_with, CoverStrategy, Domain,
    GeneratorSet, SampledTarget, SwOptions,
};
use riesz::rational::{q, z};
use riesz::spaces::PlFunction;

fn main() {
    let grid = Domain::uniform_grid(11).unwrap();
    let gens = GeneratorSet::unital_affine(grid.clone()).unwrap();
    let square = SampledTarget::from_fn(grid.clone(), |t| t * t).unwrap();

    for eps in [q(1, 10), q(1, 40)] {
        let all = sw_approximate(&square, &gens, &eps).unwrap();
        let greedy = sw_approximate_with(&square, &gens, &eps, &SwOptions { cover: CoverStrategy::Greedy }).unwrap();
        println!(
            "t², ε = {eps}: all covers size {} error {}; greedy size {} error {}",
            all.expr.size(),
            expr_error(&all.expr, &gens, &square).unwrap(),
            greedy.expr.size(),
            expr_error(&greedy.expr, &gens, &square).unwrap(),
        );
    }

    // Grid-only covers say nothing about the points in between.
    let affine = [PlFunction::constant(z(1)), PlFunction::identity()];
    let h = PlFunction::new(vec![z(0), q(3, 10), q(7, 10), z(1)], vec![z(0), z(1), q(-1, 3), q(2, 3)]).unwrap();
    let sampled = SampledTarget::from_pl(grid, &h).unwrap();
    let on_grid = sw_approximate(&sampled, &gens, &q(1, 10)).unwrap();
    let sup = |e| expr_to_pl(e, &affine).unwrap().sub(&h).unit_norm(&affine[0]).unwrap();
    println!("\nPL target, grid covers:      sup error on [0,1] = {}", sup(&on_grid.expr));
    let continuum = sw_approximate_pl(&h, &gens, &affine, &q(1, 10)).unwrap();
    println!("PL target, continuum covers: sup error on [0,1] = {}", sup(&continuum.expr));

    let small = SampledTarget::from_fn(Domain::uniform_grid(3).unwrap(), |t| (t - &q(1, 2)).abs()).unwrap();
    let gens3 = GeneratorSet::unital_affine(small.domain.clone()).unwrap();
    let e = sw_approximate(&small, &gens3, &q(1, 4)).unwrap().expr;
    println!("\n|t - 1/2| on 3 points: {}", serde_json::to_string(&e).unwrap());
}
