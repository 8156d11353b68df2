//! Continuous piecewise-linear functions on `[0, 1]` with rational breakpoints.
//!
//! The family is closed under pointwise max and min because two segments with
//! rational endpoints cross at a rational parameter, so every lattice operation
//! stays exact. Results are kept in canonical form (no interior breakpoint where
//! the slope does not change), which makes `==` agree with pointwise equality.
//!
//! This space is unital and separates points, but it is not uniformly complete:
//! sup-norm limits of piecewise-linear functions (e.g. `t²`) leave it.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Result, RieszError};
use crate::lattice::space::{Infinitesimal, RieszSpace, SeededRng};
use crate::rational::Rational;

#[derive(Deserialize)]
struct PlRaw {
    t: Vec<Rational>,
    v: Vec<Rational>,
}

/// A canonical continuous piecewise-linear function on `[0, 1]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PlRaw")]
pub struct PlFunction {
    t: Vec<Rational>,
    v: Vec<Rational>,
}

impl TryFrom<PlRaw> for PlFunction {
    type Error = RieszError;
    fn try_from(raw: PlRaw) -> Result<Self> {
        PlFunction::new(raw.t, raw.v)
    }
}

impl PlFunction {
    /// Validates and canonicalizes the interpolant of `(breakpoints, values)`.
    ///
    /// Breakpoints must start at 0, end at 1 and increase strictly.
    pub fn new(breakpoints: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if breakpoints.len() != values.len() {
            return Err(RieszError::InvalidPl(format!(
                "{} breakpoints but {} values",
                breakpoints.len(),
                values.len()
            )));
        }
        if breakpoints.len() < 2 {
            return Err(RieszError::InvalidPl("need at least the breakpoints 0 and 1".into()));
        }
        if !breakpoints[0].is_zero() || breakpoints[breakpoints.len() - 1] != Rational::one() {
            return Err(RieszError::InvalidPl("breakpoints must start at 0 and end at 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(RieszError::InvalidPl("breakpoints must increase strictly".into()));
        }
        Ok(Self::canonical(breakpoints, values))
    }

    pub fn constant(c: Rational) -> Self {
        PlFunction { t: vec![Rational::zero(), Rational::one()], v: vec![c.clone(), c] }
    }

    /// The identity `t ↦ t`.
    pub fn identity() -> Self {
        PlFunction { t: vec![Rational::zero(), Rational::one()], v: vec![Rational::zero(), Rational::one()] }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.t
    }

    pub fn values(&self) -> &[Rational] {
        &self.v
    }

    /// Drops interior points whose neighbouring slopes agree.
    fn canonical(t: Vec<Rational>, v: Vec<Rational>) -> Self {
        let mut ct: Vec<Rational> = Vec::with_capacity(t.len());
        let mut cv: Vec<Rational> = Vec::with_capacity(v.len());
        for (ti, vi) in t.into_iter().zip(v) {
            while ct.len() >= 2 {
                let k = ct.len();
                let (t0, v0, t1, v1) = (&ct[k - 2], &cv[k - 2], &ct[k - 1], &cv[k - 1]);
                // Collinear iff (v1 - v0)(ti - t1) == (vi - v1)(t1 - t0).
                let lhs = &(v1 - v0) * &(&ti - t1);
                let rhs = &(&vi - v1) * &(t1 - t0);
                if lhs == rhs {
                    ct.pop();
                    cv.pop();
                } else {
                    break;
                }
            }
            ct.push(ti);
            cv.push(vi);
        }
        PlFunction { t: ct, v: cv }
    }

    /// Exact value at `t ∈ [0, 1]`.
    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if t.is_negative() || *t > Rational::one() {
            return Err(RieszError::OutsideDomain(t.to_string()));
        }
        Ok(self.eval_unchecked(t))
    }

    fn eval_unchecked(&self, t: &Rational) -> Rational {
        match self.t.binary_search(t) {
            Ok(i) => self.v[i].clone(),
            Err(i) => {
                // 0 < i < len because t lies strictly inside [0, 1] here.
                let (t0, t1) = (&self.t[i - 1], &self.t[i]);
                let (v0, v1) = (&self.v[i - 1], &self.v[i]);
                let w = &(t - t0) / &(t1 - t0);
                v0 + &(&w * &(v1 - v0))
            }
        }
    }

    pub fn min_value(&self) -> Rational {
        self.v.iter().cloned().reduce(Rational::min).unwrap_or_default()
    }

    pub fn max_value(&self) -> Rational {
        self.v.iter().cloned().reduce(Rational::max).unwrap_or_default()
    }

    fn merged_breakpoints(&self, other: &PlFunction) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.t.len() + other.t.len());
        let (mut i, mut j) = (0, 0);
        while i < self.t.len() || j < other.t.len() {
            let next = match (self.t.get(i), other.t.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    i += 1;
                    j += 1;
                    a
                }
                (Some(a), Some(b)) if a < b => {
                    i += 1;
                    a
                }
                (Some(_), Some(b)) => {
                    j += 1;
                    b
                }
                (Some(a), None) => {
                    i += 1;
                    a
                }
                (None, Some(b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            out.push(next.clone());
        }
        out
    }

    /// Pointwise combination on the common refinement; `op` must be linear.
    fn combine_linear(&self, other: &PlFunction, op: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let t = self.merged_breakpoints(other);
        let v = t.iter().map(|s| op(&self.eval_unchecked(s), &other.eval_unchecked(s))).collect();
        Self::canonical(t, v)
    }

    /// Common refinement of `self` and `other` plus every parameter where
    /// `self - other` changes sign strictly inside a segment.
    fn refinement_with_crossings(&self, other: &PlFunction) -> Vec<Rational> {
        let base = self.merged_breakpoints(other);
        let diffs: Vec<Rational> = base.iter().map(|s| &self.eval_unchecked(s) - &other.eval_unchecked(s)).collect();
        let mut out = Vec::with_capacity(base.len() * 2);
        for k in 0..base.len() {
            out.push(base[k].clone());
            if k + 1 < base.len() {
                let (d0, d1) = (&diffs[k], &diffs[k + 1]);
                if (d0.is_negative() && d1.is_positive()) || (d0.is_positive() && d1.is_negative()) {
                    // Root of the linear interpolant of the difference.
                    let w = d0 / &(d0 - d1);
                    out.push(&base[k] + &(&w * &(&base[k + 1] - &base[k])));
                }
            }
        }
        out
    }

    fn combine_lattice(&self, other: &PlFunction, pick_max: bool) -> Self {
        let t = self.refinement_with_crossings(other);
        let v = t
            .iter()
            .map(|s| {
                let (a, b) = (self.eval_unchecked(s), other.eval_unchecked(s));
                if pick_max {
                    a.max(b)
                } else {
                    a.min(b)
                }
            })
            .collect();
        Self::canonical(t, v)
    }

    pub fn join(&self, other: &PlFunction) -> Self {
        self.combine_lattice(other, true)
    }

    pub fn meet(&self, other: &PlFunction) -> Self {
        self.combine_lattice(other, false)
    }

    pub fn add(&self, other: &PlFunction) -> Self {
        self.combine_linear(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PlFunction) -> Self {
        self.combine_linear(other, |a, b| a - b)
    }

    pub fn scale(&self, lambda: &Rational) -> Self {
        let v = self.v.iter().map(|x| lambda * x).collect();
        Self::canonical(self.t.clone(), v)
    }

    pub fn negate(&self) -> Self {
        let v = self.v.iter().map(|x| -x).collect();
        PlFunction { t: self.t.clone(), v }
    }

    pub fn abs(&self) -> Self {
        self.join(&self.negate())
    }

    /// `‖f‖_u = max |f|(t) / u(t)` over the breakpoints of `|f|` and `u`.
    ///
    /// On a segment where both are linear and `u > 0`, the ratio
    /// `(a + bt)/(c + dt)` has derivative `(bc - ad)/(c + dt)²` of constant
    /// sign, so it is monotone and its maximum sits at an endpoint. Breakpoints
    /// of `|f|` already include the zero crossings of `f`.
    pub fn unit_norm(&self, u: &PlFunction) -> Result<Rational> {
        if !u.min_value().is_positive() {
            return Err(RieszError::NotAUnit(format!("{u:?}")));
        }
        Ok(self.unit_norm_unchecked(u))
    }

    fn unit_norm_unchecked(&self, u: &PlFunction) -> Rational {
        let a = self.abs();
        a.merged_breakpoints(u)
            .iter()
            .map(|s| &a.eval_unchecked(s) / &u.eval_unchecked(s))
            .fold(Rational::zero(), Rational::max)
    }

    /// Random function with up to three interior breakpoints of denominator
    /// at most 10 and values `p/q`, `|p| <= 100`, `q <= 10`.
    pub fn random(rng: &mut SeededRng) -> Self {
        Self::random_with(rng, |rng| Rational::random(rng, 100, 10))
    }

    pub fn random_positive(rng: &mut SeededRng) -> Self {
        Self::random_with(rng, |rng| Rational::random_positive(rng, 100, 10))
    }

    fn random_with(rng: &mut SeededRng, mut value: impl FnMut(&mut SeededRng) -> Rational) -> Self {
        let interior = rng.gen_range(0..=3);
        let mut t: Vec<Rational> = (0..interior)
            .map(|_| {
                let d = rng.gen_range(2..=10);
                Rational::new(rng.gen_range(1..d), d)
            })
            .collect();
        t.push(Rational::zero());
        t.push(Rational::one());
        t.sort();
        t.dedup();
        let v = t.iter().map(|_| value(rng)).collect();
        Self::canonical(t, v)
    }
}

impl fmt::Debug for PlFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PL[")?;
        for (i, (t, v)) in self.t.iter().zip(&self.v).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}↦{v}")?;
        }
        write!(f, "]")
    }
}

/// Piecewise-linear functions on `[0, 1]` under the pointwise order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PlSpace;

impl RieszSpace for PlSpace {
    type Elem = PlFunction;

    fn describe(&self) -> String {
        "PL[0,1]".into()
    }

    fn check_member(&self, _x: &PlFunction) -> Result<()> {
        Ok(())
    }

    fn zero(&self) -> PlFunction {
        PlFunction::constant(Rational::zero())
    }

    fn add(&self, x: &PlFunction, y: &PlFunction) -> PlFunction {
        x.add(y)
    }

    fn neg(&self, x: &PlFunction) -> PlFunction {
        x.negate()
    }

    fn scale(&self, lambda: &Rational, x: &PlFunction) -> PlFunction {
        x.scale(lambda)
    }

    fn join(&self, x: &PlFunction, y: &PlFunction) -> PlFunction {
        x.join(y)
    }

    fn meet(&self, x: &PlFunction, y: &PlFunction) -> PlFunction {
        x.meet(y)
    }

    fn is_archimedean(&self) -> bool {
        true
    }

    /// Minimum value positive. The minimum of a piecewise-linear function is
    /// attained at a breakpoint.
    fn is_unit(&self, u: &PlFunction) -> bool {
        u.min_value().is_positive()
    }

    fn unit_norm_formula(&self, x: &PlFunction, u: &PlFunction) -> Rational {
        x.unit_norm_unchecked(u)
    }

    fn infinitesimal(&self) -> Option<Infinitesimal<PlFunction>> {
        // n·ε <= b for all n forces ε = 0 at every breakpoint, hence everywhere.
        None
    }

    fn standard_unit(&self) -> PlFunction {
        PlFunction::constant(Rational::one())
    }

    fn random_element(&self, rng: &mut SeededRng) -> PlFunction {
        PlFunction::random(rng)
    }

    fn random_unit(&self, rng: &mut SeededRng) -> PlFunction {
        PlFunction::random_positive(rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::laws::check_laws;
    use crate::rational::{q, z};
    use rand::SeedableRng;

    fn pl(t: &[(i64, i64)], v: &[(i64, i64)]) -> PlFunction {
        PlFunction::new(t.iter().map(|&(a, b)| q(a, b)).collect(), v.iter().map(|&(a, b)| q(a, b)).collect()).unwrap()
    }

    fn one_minus_id() -> PlFunction {
        PlSpace.add(&PlFunction::constant(z(1)), &PlFunction::identity().negate())
    }

    #[test]
    fn join_inserts_crossing() {
        let f = PlFunction::identity();
        let g = one_minus_id();
        let j = f.join(&g);
        assert_eq!(j.breakpoints(), &[z(0), q(1, 2), z(1)]);
        assert_eq!(j.values(), &[z(1), q(1, 2), z(1)]);
        assert_eq!(f.join(&f), f);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(PlFunction::identity().eval(&q(3, 7)).unwrap(), q(3, 7));
        let hat = pl(&[(0, 1), (1, 2), (1, 1)], &[(0, 1), (1, 1), (0, 1)]);
        assert_eq!(hat.eval(&q(3, 4)).unwrap(), q(1, 2));
        assert_eq!(PlFunction::constant(z(1)).eval(&q(5, 9)).unwrap(), z(1));
        assert!(matches!(hat.eval(&q(3, 2)), Err(RieszError::OutsideDomain(_))));
        assert!(hat.eval(&q(-1, 2)).is_err());
    }

    #[test]
    fn rejects_malformed() {
        assert!(PlFunction::new(vec![z(0), z(1)], vec![z(0)]).is_err());
        assert!(PlFunction::new(vec![q(1, 2), z(1)], vec![z(0), z(0)]).is_err());
        assert!(PlFunction::new(vec![z(0), q(1, 2), q(1, 2), z(1)], vec![z(0); 4]).is_err());
        assert!(serde_json::from_str::<PlFunction>(r#"{"t":["0","2"],"v":["1","1"]}"#).is_err());
    }

    #[test]
    fn canonicalization_removes_collinear_points() {
        let f = pl(&[(0, 1), (1, 3), (2, 3), (1, 1)], &[(0, 1), (1, 3), (2, 3), (1, 1)]);
        assert_eq!(f, PlFunction::identity());
    }

    #[test]
    fn norm_examples() {
        let one = PlFunction::constant(z(1));
        assert_eq!(PlFunction::identity().unit_norm(&one).unwrap(), z(1));
        let hat = pl(&[(0, 1), (1, 2), (1, 1)], &[(0, 1), (1, 1), (0, 1)]);
        assert_eq!(hat.unit_norm(&one).unwrap(), z(1));
        let u = pl(&[(0, 1), (1, 1)], &[(1, 1), (2, 1)]);
        assert_eq!(PlFunction::identity().unit_norm(&u).unwrap(), q(1, 2));
        assert!(PlFunction::identity().unit_norm(&PlFunction::identity()).is_err());
    }

    /// Dense rational sampling never exceeds the exact norm and touches it at
    /// the maximizing breakpoint.
    #[test]
    fn norm_dominates_dense_sampling() {
        let mut rng = SeededRng::seed_from_u64(21);
        for _ in 0..100 {
            let f = PlFunction::random(&mut rng);
            let u = PlFunction::random_positive(&mut rng);
            let exact = f.unit_norm(&u).unwrap();
            let sampled = (0..=2520)
                .map(|k| {
                    let t = q(k, 2520);
                    &f.eval(&t).unwrap().abs() / &u.eval(&t).unwrap()
                })
                .fold(Rational::zero(), Rational::max);
            assert!(sampled <= exact);
            // Breakpoints have denominators dividing 2520 unless a crossing was
            // inserted, and crossings are zeros of |f|, so the max is sampled.
            assert_eq!(sampled, exact);
        }
    }

    #[test]
    fn join_matches_pointwise_max() {
        let mut rng = SeededRng::seed_from_u64(8);
        for _ in 0..50 {
            let (f, g) = (PlFunction::random(&mut rng), PlFunction::random(&mut rng));
            let (j, m) = (f.join(&g), f.meet(&g));
            for _ in 0..1000 {
                let t = Rational::random_in(&mut rng, &z(0), &z(1), 97);
                let (a, b) = (f.eval(&t).unwrap(), g.eval(&t).unwrap());
                assert_eq!(j.eval(&t).unwrap(), a.clone().max(b.clone()));
                assert_eq!(m.eval(&t).unwrap(), a.min(b));
            }
        }
    }

    #[test]
    fn laws_hold() {
        for r in check_laws(&PlSpace, 200, 4) {
            assert!(r.passed(), "{} failed: {:?}", r.law, r.counterexample);
        }
    }

    #[test]
    fn json_shape() {
        let f = pl(&[(0, 1), (1, 2), (1, 1)], &[(0, 1), (1, 1), (0, 1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"t":["0","1/2","1"],"v":["0","1","0"]}"#);
        assert_eq!(serde_json::from_str::<PlFunction>(&s).unwrap(), f);
    }

    proptest::proptest! {
        #[test]
        fn canonical_form_preserves_values(
            raw in proptest::collection::vec((1i64..20, -50i64..50), 0..6),
            probe in 0i64..=60,
        ) {
            let mut pts: Vec<(Rational, Rational)> =
                raw.iter().map(|&(k, v)| (q(k, 20), z(v))).collect();
            pts.push((z(0), z(3)));
            pts.push((z(1), z(-2)));
            pts.sort_by(|a, b| a.0.cmp(&b.0));
            pts.dedup_by(|a, b| a.0 == b.0);
            let (t, v): (Vec<_>, Vec<_>) = pts.into_iter().unzip();
            // Reference interpolation on the raw, uncanonicalized data.
            let s = q(probe, 60);
            let i = t.partition_point(|x| *x <= s);
            let expected = if i == t.len() {
                v[v.len() - 1].clone()
            } else {
                let (t0, t1, v0, v1) = (&t[i - 1], &t[i], &v[i - 1], &v[i]);
                v0 + &(&(&(&s - t0) / &(t1 - t0)) * &(v1 - v0))
            };
            let f = PlFunction::new(t, v).unwrap();
            proptest::prop_assert_eq!(f.eval(&s).unwrap(), expected);
        }
    }
}
