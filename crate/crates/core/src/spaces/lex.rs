use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::space::{Infinitesimal, RieszSpace, SeededRng};
use crate::rational::Rational;

/// A point of the lexicographically ordered plane.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct Lex {
    pub first: Rational,
    pub second: Rational,
}

impl Lex {
    pub fn new(first: Rational, second: Rational) -> Self {
        Lex { first, second }
    }

    pub fn ints(first: i64, second: i64) -> Self {
        Lex::new(Rational::from_integer(first), Rational::from_integer(second))
    }

    /// `(x, y) <= (x', y')` iff `x < x'`, or `x = x'` and `y <= y'`.
    pub fn lex_cmp(&self, other: &Lex) -> Ordering {
        self.first.cmp(&other.first).then_with(|| self.second.cmp(&other.second))
    }
}

impl From<[Rational; 2]> for Lex {
    fn from([first, second]: [Rational; 2]) -> Self {
        Lex { first, second }
    }
}

impl From<Lex> for [Rational; 2] {
    fn from(x: Lex) -> Self {
        [x.first, x.second]
    }
}

impl fmt::Debug for Lex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// `R^2` under the lexicographic order: a totally ordered Riesz space that is
/// not Archimedean.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LexPlane;

impl RieszSpace for LexPlane {
    type Elem = Lex;

    fn describe(&self) -> String {
        "lex plane".into()
    }

    fn check_member(&self, _x: &Lex) -> Result<()> {
        Ok(())
    }

    fn zero(&self) -> Lex {
        Lex::ints(0, 0)
    }

    fn add(&self, x: &Lex, y: &Lex) -> Lex {
        Lex::new(&x.first + &y.first, &x.second + &y.second)
    }

    fn neg(&self, x: &Lex) -> Lex {
        Lex::new(-&x.first, -&x.second)
    }

    fn scale(&self, lambda: &Rational, x: &Lex) -> Lex {
        Lex::new(lambda * &x.first, lambda * &x.second)
    }

    fn join(&self, x: &Lex, y: &Lex) -> Lex {
        match x.lex_cmp(y) {
            Ordering::Less => y.clone(),
            _ => x.clone(),
        }
    }

    fn meet(&self, x: &Lex, y: &Lex) -> Lex {
        match x.lex_cmp(y) {
            Ordering::Greater => y.clone(),
            _ => x.clone(),
        }
    }

    fn is_archimedean(&self) -> bool {
        false
    }

    /// Units are exactly the elements with positive first coordinate.
    ///
    /// If `u.first > 0`, pick `n > |x.first| / u.first`; then
    /// `|x| <_lex n·u` on the first coordinate alone. If `u.first = 0`, every
    /// multiple `n·u` has first coordinate 0 and cannot exceed `(1, 0)`.
    fn is_unit(&self, u: &Lex) -> bool {
        u.first.is_positive()
    }

    /// `|x.first| / u.first`.
    ///
    /// `|x| <= λu` holds for every `λ > |x.first| / u.first` and fails for every
    /// smaller `λ`, so the infimum is that ratio. At the infimum itself the
    /// inequality may fail (e.g. `x = (0, 1)`, `u = (1, 0)`), which is where
    /// `|x| <= ‖x‖_u·u` breaks down on this space.
    fn unit_norm_formula(&self, x: &Lex, u: &Lex) -> Rational {
        &self.abs(x).first / &u.first
    }

    fn infinitesimal(&self) -> Option<Infinitesimal<Lex>> {
        Some(Infinitesimal {
            epsilon: Lex::ints(0, 1),
            bound: Lex::ints(1, 0),
            certificate: "n·(0, 1) = (0, n) and 0 < 1 in the first coordinate, so (0, n) <_lex (1, 0) \
                          for every integer n"
                .into(),
        })
    }

    fn standard_unit(&self) -> Lex {
        Lex::ints(1, 0)
    }

    fn random_element(&self, rng: &mut SeededRng) -> Lex {
        // Equal first coordinates are common enough to exercise the tie rule.
        let first = if rng.gen_ratio(1, 5) {
            Rational::from_integer(rng.gen_range(-2..=2))
        } else {
            Rational::random(rng, 100, 10)
        };
        Lex::new(first, Rational::random(rng, 100, 10))
    }

    fn random_unit(&self, rng: &mut SeededRng) -> Lex {
        Lex::new(Rational::random_positive(rng, 100, 10), Rational::random(rng, 100, 10))
    }
}
