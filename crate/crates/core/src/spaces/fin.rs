use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Result, RieszError};
use crate::lattice::space::{Infinitesimal, RieszSpace, SeededRng};
use crate::rational::Rational;

/// A point of `R^n` with rational coordinates; equivalently a function on an
/// `n`-point discrete space.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FinVec(Vec<Rational>);

impl FinVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        FinVec(coords)
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        FinVec(xs.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        FinVec(vec![c; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// Indices of non-zero coordinates.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    fn zip_with(&self, other: &FinVec, f: impl Fn(&Rational, &Rational) -> Rational) -> FinVec {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        FinVec(self.0.iter().zip(&other.0).map(|(a, b)| f(a, b)).collect())
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> FinVec {
        FinVec(self.0.iter().map(f).collect())
    }
}

impl fmt::Debug for FinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<Rational>> for FinVec {
    fn from(v: Vec<Rational>) -> Self {
        FinVec(v)
    }
}

/// `R^n` with the pointwise order, i.e. `C(X)` for an `n`-point discrete `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinDim {
    n: usize,
}

impl FinDim {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(RieszError::InvalidSpace("R^n needs n >= 1".into()));
        }
        Ok(FinDim { n })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// The all-ones vector.
    pub fn ones(&self) -> FinVec {
        FinVec::constant(self.n, Rational::one())
    }

    /// Random vector whose coordinates all lie in `(0, 100]`.
    pub fn random_positive(&self, rng: &mut SeededRng) -> FinVec {
        FinVec((0..self.n).map(|_| Rational::random_positive(rng, 100, 10)).collect())
    }
}

impl RieszSpace for FinDim {
    type Elem = FinVec;

    fn describe(&self) -> String {
        format!("R^{}", self.n)
    }

    fn check_member(&self, x: &FinVec) -> Result<()> {
        if x.len() == self.n {
            Ok(())
        } else {
            Err(RieszError::SpaceMismatch {
                space: self.describe(),
                detail: format!("expected {} coordinates, got {}", self.n, x.len()),
            })
        }
    }

    fn zero(&self) -> FinVec {
        FinVec::constant(self.n, Rational::zero())
    }

    fn add(&self, x: &FinVec, y: &FinVec) -> FinVec {
        x.zip_with(y, |a, b| a + b)
    }

    fn neg(&self, x: &FinVec) -> FinVec {
        x.map(|a| -a)
    }

    fn scale(&self, lambda: &Rational, x: &FinVec) -> FinVec {
        x.map(|a| lambda * a)
    }

    fn join(&self, x: &FinVec, y: &FinVec) -> FinVec {
        x.zip_with(y, |a, b| a.clone().max(b.clone()))
    }

    fn meet(&self, x: &FinVec, y: &FinVec) -> FinVec {
        x.zip_with(y, |a, b| a.clone().min(b.clone()))
    }

    fn is_archimedean(&self) -> bool {
        true
    }

    /// Every coordinate strictly positive: then `n·u` dominates `|x|` once
    /// `n > max |x_i| / u_i`, while a zero coordinate leaves the matching basis
    /// vector undominated.
    fn is_unit(&self, u: &FinVec) -> bool {
        u.len() == self.n && u.0.iter().all(Rational::is_positive)
    }

    /// `max_i |x_i| / u_i`; the infimum is attained.
    fn unit_norm_formula(&self, x: &FinVec, u: &FinVec) -> Rational {
        x.0.iter().zip(&u.0).map(|(a, w)| &a.abs() / w).fold(Rational::zero(), Rational::max)
    }

    fn infinitesimal(&self) -> Option<Infinitesimal<FinVec>> {
        // n·ε <= b for all n forces every coordinate of ε to vanish.
        None
    }

    fn standard_unit(&self) -> FinVec {
        self.ones()
    }

    fn random_element(&self, rng: &mut SeededRng) -> FinVec {
        FinVec((0..self.n).map(|_| Rational::random(rng, 100, 10)).collect())
    }

    fn random_unit(&self, rng: &mut SeededRng) -> FinVec {
        if rng.gen_ratio(1, 8) {
            self.ones()
        } else {
            self.random_positive(rng)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::laws::check_laws;
    use crate::rational::{q, z};
    use rand::SeedableRng;

    #[test]
    fn pointwise_lattice() {
        let r2 = FinDim::new(2).unwrap();
        let (x, y) = (FinVec::from_ints(&[1, 5]), FinVec::from_ints(&[2, 3]));
        assert_eq!(r2.join(&x, &y), FinVec::from_ints(&[2, 5]));
        assert_eq!(r2.meet(&x, &y), FinVec::from_ints(&[1, 3]));
        let lhs = r2.add(&r2.join(&x, &y), &r2.meet(&x, &y));
        assert_eq!(lhs, FinVec::from_ints(&[3, 8]));
        assert_eq!(lhs, r2.add(&x, &y));
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(FinDim::new(0).is_err());
    }

    #[test]
    fn not_totally_ordered() {
        let r2 = FinDim::new(2).unwrap();
        let (a, b) = (FinVec::from_ints(&[1, 0]), FinVec::from_ints(&[0, 1]));
        assert!(!r2.leq(&a, &b) && !r2.leq(&b, &a));
        let r1 = FinDim::new(1).unwrap();
        let mut rng = SeededRng::seed_from_u64(3);
        for _ in 0..200 {
            let (x, y) = (r1.random_element(&mut rng), r1.random_element(&mut rng));
            assert!(r1.leq(&x, &y) || r1.leq(&y, &x));
        }
    }

    /// Brute force: the smallest candidate λ from `{|x_i|/u_i}` with
    /// `|x| <= λu`, compared against the closed form.
    #[test]
    fn norm_matches_candidate_search() {
        let r4 = FinDim::new(4).unwrap();
        let mut rng = SeededRng::seed_from_u64(11);
        for _ in 0..300 {
            let x = r4.random_element(&mut rng);
            let u = r4.random_unit(&mut rng);
            let ax = r4.abs(&x);
            let mut candidates: Vec<Rational> = x.coords().iter().zip(u.coords()).map(|(a, w)| &a.abs() / w).collect();
            candidates.push(Rational::zero());
            candidates.sort();
            let best = candidates.into_iter().find(|l| r4.leq(&ax, &r4.scale(l, &u))).unwrap();
            assert_eq!(best, r4.unit_norm_formula(&x, &u));
        }
    }

    #[test]
    fn norm_with_ones_is_max_abs() {
        let r3 = FinDim::new(3).unwrap();
        let x = FinVec::new(vec![z(1), z(-2), q(1, 2)]);
        assert_eq!(r3.unit_norm_formula(&x, &r3.ones()), z(2));
    }

    #[test]
    fn all_laws_hold() {
        for n in 1..=4 {
            let space = FinDim::new(n).unwrap();
            for report in check_laws(&space, 200, n as u64) {
                assert!(report.passed(), "{} failed: {:?}", report.law, report.counterexample);
            }
        }
    }

    #[test]
    fn json_is_array_of_strings() {
        let x = FinVec::new(vec![z(1), q(-1, 2)]);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"["1","-1/2"]"#);
    }
}
