//! Seeded law checking for Riesz spaces.
//!
//! Every law is checked by exact equality on pseudo-random cases. A failing
//! [`LawReport`] carries the generating [`Case`] so that [`replay`] can re-run
//! it through the public trait methods.

use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::lattice::space::{RieszSpace, SeededRng};
use crate::rational::Rational;

/// Inputs of one law instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Case<E> {
    pub elems: Vec<E>,
    pub scalars: Vec<Rational>,
}

/// The two sides of a violated law, rendered for display.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample<E> {
    pub case: Case<E>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LawReport<E> {
    pub law: String,
    pub cases: usize,
    pub counterexample: Option<Counterexample<E>>,
}

impl<E> LawReport<E> {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn pass(law: impl Into<String>, cases: usize) -> Self {
        LawReport { law: law.into(), cases, counterexample: None }
    }
}

type Outcome = Result<(), (String, String)>;
type Generator<S> = fn(&S, &mut SeededRng) -> Case<<S as RieszSpace>::Elem>;
type Checker<S> = fn(&S, &Case<<S as RieszSpace>::Elem>) -> Outcome;

/// A named law with its case generator and exact check.
pub struct Law<S: RieszSpace> {
    pub name: &'static str,
    /// Only meaningful on Archimedean spaces.
    pub archimedean_only: bool,
    pub generate: Generator<S>,
    pub check: Checker<S>,
}

fn eq<S: RieszSpace>(lhs: S::Elem, rhs: S::Elem) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err((format!("{lhs:?}"), format!("{rhs:?}")))
    }
}

fn le<S: RieszSpace>(space: &S, lhs: S::Elem, rhs: S::Elem) -> Outcome {
    if space.leq(&lhs, &rhs) {
        Ok(())
    } else {
        Err((format!("{lhs:?}"), format!("not <= {rhs:?}")))
    }
}

fn le_q(lhs: Rational, rhs: Rational) -> Outcome {
    if lhs <= rhs {
        Ok(())
    } else {
        Err((lhs.to_string(), format!("not <= {rhs}")))
    }
}

fn elems<S: RieszSpace>(space: &S, rng: &mut SeededRng, n: usize) -> Vec<S::Elem> {
    (0..n).map(|_| space.random_element(rng)).collect()
}

fn gen_xy<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    Case { elems: elems(space, rng, 2), scalars: vec![] }
}

fn gen_xya<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    Case { elems: elems(space, rng, 3), scalars: vec![] }
}

/// One element, zero a quarter of the time so implications get exercised.
fn gen_x_sometimes_zero<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    let x = if rng.gen_ratio(1, 4) { space.zero() } else { space.random_element(rng) };
    Case { elems: vec![x], scalars: vec![] }
}

fn gen_x<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    Case { elems: elems(space, rng, 1), scalars: vec![] }
}

fn gen_x_scalar<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    Case { elems: elems(space, rng, 1), scalars: vec![Rational::random(rng, 100, 10)] }
}

fn gen_xy_nonneg_scalar<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    Case { elems: elems(space, rng, 2), scalars: vec![Rational::random(rng, 100, 10).abs()] }
}

/// A pair where `x <= y` holds half of the time by construction.
fn gen_order_pair<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    let x = space.random_element(rng);
    let y = if rng.gen_bool(0.5) {
        let r = space.random_element(rng);
        space.add(&x, &space.abs(&r))
    } else {
        space.random_element(rng)
    };
    Case { elems: vec![x, y], scalars: vec![] }
}

/// A valid decomposition triple: `a, b >= 0` and `0 <= x <= a + b`.
fn gen_decomposition<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    let a = space.abs(&space.random_element(rng));
    let b = space.abs(&space.random_element(rng));
    let r = space.abs(&space.random_element(rng));
    let x = space.meet(&r, &space.add(&a, &b));
    Case { elems: vec![x, a, b], scalars: vec![] }
}

fn gen_norm_pair<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    let x = space.random_element(rng);
    let y = space.random_element(rng);
    let u = space.random_unit(rng);
    Case { elems: vec![x, y, u], scalars: vec![] }
}

fn gen_norm_scalar<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    let x = space.random_element(rng);
    let u = space.random_unit(rng);
    Case { elems: vec![x, u], scalars: vec![Rational::random(rng, 100, 10)] }
}

fn gen_norm_single<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    let x = if rng.gen_ratio(1, 4) { space.zero() } else { space.random_element(rng) };
    let u = space.random_unit(rng);
    Case { elems: vec![x, u], scalars: vec![] }
}

fn gen_two_units<S: RieszSpace>(space: &S, rng: &mut SeededRng) -> Case<S::Elem> {
    let x = space.random_element(rng);
    let e = space.random_unit(rng);
    let u = space.random_unit(rng);
    Case { elems: vec![x, e, u], scalars: vec![] }
}

/// All laws the harness knows, in a fixed order.
pub fn laws<S: RieszSpace>() -> Vec<Law<S>> {
    vec![
        Law {
            name: "λ(x ∨ y) = (λx) ∨ (λy) for λ ≥ 0",
            archimedean_only: false,
            generate: gen_xy_nonneg_scalar,
            check: |s, c| {
                let (x, y, l) = (&c.elems[0], &c.elems[1], &c.scalars[0]);
                eq::<S>(s.scale(l, &s.join(x, y)), s.join(&s.scale(l, x), &s.scale(l, y)))
            },
        },
        Law {
            name: "−(x ∨ y) = (−x) ∧ (−y)",
            archimedean_only: false,
            generate: gen_xy,
            check: |s, c| {
                let (x, y) = (&c.elems[0], &c.elems[1]);
                eq::<S>(s.neg(&s.join(x, y)), s.meet(&s.neg(x), &s.neg(y)))
            },
        },
        Law {
            name: "(x + a) ∨ (y + a) = (x ∨ y) + a",
            archimedean_only: false,
            generate: gen_xya,
            check: |s, c| {
                let (x, y, a) = (&c.elems[0], &c.elems[1], &c.elems[2]);
                eq::<S>(s.join(&s.add(x, a), &s.add(y, a)), s.add(&s.join(x, y), a))
            },
        },
        Law {
            name: "x ∨ y + x ∧ y = x + y",
            archimedean_only: false,
            generate: gen_xy,
            check: |s, c| {
                let (x, y) = (&c.elems[0], &c.elems[1]);
                eq::<S>(s.add(&s.join(x, y), &s.meet(x, y)), s.add(x, y))
            },
        },
        Law {
            name: "(x ∧ y) ∨ a = (x ∨ a) ∧ (y ∨ a)",
            archimedean_only: false,
            generate: gen_xya,
            check: |s, c| {
                let (x, y, a) = (&c.elems[0], &c.elems[1], &c.elems[2]);
                eq::<S>(s.join(&s.meet(x, y), a), s.meet(&s.join(x, a), &s.join(y, a)))
            },
        },
        Law {
            name: "x = x⁺ − x⁻",
            archimedean_only: false,
            generate: gen_x,
            check: |s, c| {
                let x = &c.elems[0];
                eq::<S>(x.clone(), s.sub(&s.pos_part(x), &s.neg_part(x)))
            },
        },
        Law {
            name: "|x| = x⁺ + x⁻",
            archimedean_only: false,
            generate: gen_x,
            check: |s, c| {
                let x = &c.elems[0];
                eq::<S>(s.abs(x), s.add(&s.pos_part(x), &s.neg_part(x)))
            },
        },
        Law {
            name: "|x| ≥ 0",
            archimedean_only: false,
            generate: gen_x,
            check: |s, c| le(s, s.zero(), s.abs(&c.elems[0])),
        },
        Law {
            name: "|x| = x⁺ ∨ x⁻",
            archimedean_only: false,
            generate: gen_x,
            check: |s, c| {
                let x = &c.elems[0];
                eq::<S>(s.abs(x), s.join(&s.pos_part(x), &s.neg_part(x)))
            },
        },
        Law {
            name: "x⁺ ⊥ x⁻",
            archimedean_only: false,
            generate: gen_x,
            check: |s, c| {
                let x = &c.elems[0];
                let (p, n) = (s.pos_part(x), s.neg_part(x));
                eq::<S>(s.meet(&s.abs(&p), &s.abs(&n)), s.zero())
            },
        },
        Law {
            name: "|λx| = |λ||x|",
            archimedean_only: false,
            generate: gen_x_scalar,
            check: |s, c| {
                let (x, l) = (&c.elems[0], &c.scalars[0]);
                eq::<S>(s.abs(&s.scale(l, x)), s.scale(&l.abs(), &s.abs(x)))
            },
        },
        Law {
            name: "|x| = 0 ⇒ x = 0",
            archimedean_only: false,
            generate: gen_x_sometimes_zero,
            check: |s, c| {
                let x = &c.elems[0];
                if s.abs(x) == s.zero() {
                    eq::<S>(x.clone(), s.zero())
                } else {
                    Ok(())
                }
            },
        },
        Law {
            name: "(x + y)⁺ ≤ x⁺ + y⁺",
            archimedean_only: false,
            generate: gen_xy,
            check: |s, c| {
                let (x, y) = (&c.elems[0], &c.elems[1]);
                le(s, s.pos_part(&s.add(x, y)), s.add(&s.pos_part(x), &s.pos_part(y)))
            },
        },
        Law {
            name: "|x + y| ≤ |x| + |y|",
            archimedean_only: false,
            generate: gen_xy,
            check: |s, c| {
                let (x, y) = (&c.elems[0], &c.elems[1]);
                le(s, s.abs(&s.add(x, y)), s.add(&s.abs(x), &s.abs(y)))
            },
        },
        Law {
            name: "x ∨ y = (x + y)/2 + |(x − y)/2|",
            archimedean_only: false,
            generate: gen_xy,
            check: |s, c| {
                let (x, y) = (&c.elems[0], &c.elems[1]);
                let half = Rational::new(1, 2);
                let mean = s.scale(&half, &s.add(x, y));
                let dev = s.abs(&s.scale(&half, &s.sub(x, y)));
                eq::<S>(s.join(x, y), s.add(&mean, &dev))
            },
        },
        Law {
            name: "x ≤ y ⇔ x ∨ y = y ⇔ x ∧ y = x",
            archimedean_only: false,
            generate: gen_order_pair,
            check: |s, c| {
                let (x, y) = (&c.elems[0], &c.elems[1]);
                let by_meet = s.meet(x, y) == *x;
                let by_join = s.join(x, y) == *y;
                if by_meet == by_join && s.leq(x, y) == by_meet {
                    Ok(())
                } else {
                    Err((format!("x ∧ y = x: {by_meet}"), format!("x ∨ y = y: {by_join}")))
                }
            },
        },
        Law {
            name: "Riesz decomposition: x = a′ + b′, 0 ≤ a′ ≤ a, 0 ≤ b′ ≤ b",
            archimedean_only: false,
            generate: gen_decomposition,
            check: |s, c| {
                let (x, a, b) = (&c.elems[0], &c.elems[1], &c.elems[2]);
                let (a1, b1) =
                    crate::lattice::ops::riesz_decompose(s, x, a, b).map_err(|e| (e.to_string(), String::new()))?;
                let zero = s.zero();
                eq::<S>(s.add(&a1, &b1), x.clone())?;
                le(s, zero.clone(), a1.clone())?;
                le(s, a1, a.clone())?;
                le(s, zero, b1.clone())?;
                le(s, b1, b.clone())
            },
        },
        Law {
            name: "‖x + y‖_u ≤ ‖x‖_u + ‖y‖_u",
            archimedean_only: false,
            generate: gen_norm_pair,
            check: |s, c| {
                let (x, y, u) = (&c.elems[0], &c.elems[1], &c.elems[2]);
                let n = |e: &S::Elem| s.unit_norm_formula(e, u);
                le_q(n(&s.add(x, y)), &n(x) + &n(y))
            },
        },
        Law {
            name: "‖λx‖_u = |λ|‖x‖_u",
            archimedean_only: false,
            generate: gen_norm_scalar,
            check: |s, c| {
                let (x, u, l) = (&c.elems[0], &c.elems[1], &c.scalars[0]);
                let lhs = s.unit_norm_formula(&s.scale(l, x), u);
                let rhs = &l.abs() * &s.unit_norm_formula(x, u);
                if lhs == rhs {
                    Ok(())
                } else {
                    Err((lhs.to_string(), rhs.to_string()))
                }
            },
        },
        Law {
            name: "‖x‖_u/‖e‖_u ≤ ‖x‖_e ≤ ‖u‖_e·‖x‖_u",
            archimedean_only: false,
            generate: gen_two_units,
            check: |s, c| {
                let (x, e, u) = (&c.elems[0], &c.elems[1], &c.elems[2]);
                let x_e = s.unit_norm_formula(x, e);
                let x_u = s.unit_norm_formula(x, u);
                let e_u = s.unit_norm_formula(e, u);
                let u_e = s.unit_norm_formula(u, e);
                le_q(&x_u / &e_u, x_e.clone())?;
                le_q(x_e, &u_e * &x_u)
            },
        },
        Law {
            name: "|x| ≤ ‖x‖_u·u",
            archimedean_only: true,
            generate: gen_norm_single,
            check: |s, c| {
                let (x, u) = (&c.elems[0], &c.elems[1]);
                le(s, s.abs(x), s.scale(&s.unit_norm_formula(x, u), u))
            },
        },
        Law {
            name: "‖x‖_u = 0 ⇒ x = 0",
            archimedean_only: true,
            generate: gen_norm_single,
            check: |s, c| {
                let (x, u) = (&c.elems[0], &c.elems[1]);
                if s.unit_norm_formula(x, u).is_zero() {
                    eq::<S>(x.clone(), s.zero())
                } else {
                    Ok(())
                }
            },
        },
    ]
}

/// Names of the laws applicable to a space of the given kind.
pub fn law_names<S: RieszSpace>(archimedean: bool) -> Vec<&'static str> {
    laws::<S>().into_iter().filter(|l| archimedean || !l.archimedean_only).map(|l| l.name).collect()
}

/// Runs one law on `case_count` seeded cases and stops at the first failure.
pub fn check_law<S: RieszSpace>(space: &S, law: &Law<S>, case_count: usize, rng: &mut SeededRng) -> LawReport<S::Elem> {
    for i in 0..case_count {
        let case = (law.generate)(space, rng);
        if let Err((lhs, rhs)) = (law.check)(space, &case) {
            return LawReport {
                law: law.name.to_string(),
                cases: i + 1,
                counterexample: Some(Counterexample { case, lhs, rhs }),
            };
        }
    }
    LawReport::pass(law.name, case_count)
}

/// Checks every applicable law on `case_count` cases each.
///
/// Law `k` draws from stream `k` of a ChaCha generator seeded with `seed`, so
/// reports are reproducible and independent of evaluation order.
pub fn check_laws<S: RieszSpace>(space: &S, case_count: usize, seed: u64) -> Vec<LawReport<S::Elem>> {
    let archimedean = space.is_archimedean();
    laws::<S>()
        .into_par_iter()
        .enumerate()
        .filter(|(_, law)| archimedean || !law.archimedean_only)
        .map(|(k, law)| {
            let mut rng = SeededRng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            check_law(space, &law, case_count.max(1), &mut rng)
        })
        .collect()
}

/// Re-evaluates a failing report's counterexample. Returns `Some(true)` when
/// the law still fails on it, `None` when there is nothing to replay.
pub fn replay<S: RieszSpace>(space: &S, report: &LawReport<S::Elem>) -> Option<bool> {
    let cx = report.counterexample.as_ref()?;
    let law = laws::<S>().into_iter().find(|l| l.name == report.law)?;
    Some((law.check)(space, &cx.case).is_err())
}
