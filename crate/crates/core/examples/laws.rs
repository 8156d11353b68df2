//! Seeded law checking on the three space instances, and what a failing
//! report looks like.
//!
//!     cargo run --example laws

use riesz::ideals::{check_ideal_candidate, LinearSpan};
use riesz::lattice::{check_laws, RieszSpace};
use riesz::spaces::{FinDim, FinVec, LexPlane, PlSpace};

fn summarize<S: RieszSpace>(space: &S, cases: usize, seed: u64) {
    let reports = check_laws(space, cases, seed);
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    println!(
        "{:<10} {} laws x {} cases, {} failed{}",
        space.describe(),
        reports.len(),
        cases,
        failed.len(),
        if space.is_archimedean() { "" } else { " (Archimedean-only laws skipped)" }
    );
}

fn main() {
    for n in 1..=4 {
        summarize(&FinDim::new(n).unwrap(), 300, 7);
    }
    summarize(&LexPlane, 300, 7);
    summarize(&PlSpace, 300, 7);

    // A linear subspace that is not solid: span{(1, 1)} in R^2.
    let r2 = FinDim::new(2).unwrap();
    let diagonal = LinearSpan::new(2, vec![FinVec::from_ints(&[1, 1])]).unwrap();
    let report = check_ideal_candidate(&r2, &diagonal, 100, 1);
    let cx = report.counterexample.as_ref().expect("the diagonal is not an ideal");
    println!("\n{} fails after {} case(s):", report.law, report.cases);
    println!("  elements {:?}", cx.case.elems);
    println!("  {} {}", cx.lhs, cx.rhs);
}
