use std::fmt;

use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::rational::Rational;

/// Deterministic generator used for every randomized check.
pub type SeededRng = ChaCha8Rng;

/// A witness that a space is not Archimedean: `n·epsilon <= bound` for every
/// integer `n`, although `epsilon != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Infinitesimal<E> {
    pub epsilon: E,
    pub bound: E,
    /// Closed-form argument for why the inequality holds for all `n`.
    pub certificate: String,
}

/// A lattice-ordered rational vector space with exact operations.
///
/// Implementors supply the linear structure, the two lattice operations, and
/// the exact per-instance facts about units and the unit norm. The order is
/// never stored: `x <= y` is decided as `x ∧ y == x`.
///
/// The primitive operations assume their arguments belong to the space (see
/// [`RieszSpace::check_member`]); the checked entry points live in
/// [`crate::lattice::ops`].
pub trait RieszSpace: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    /// Short human-readable name, e.g. `R^3`.
    fn describe(&self) -> String;

    fn check_member(&self, x: &Self::Elem) -> Result<()>;

    fn zero(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn scale(&self, lambda: &Rational, x: &Self::Elem) -> Self::Elem;
    fn join(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn meet(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn is_archimedean(&self) -> bool;

    /// Exact decision of whether `u` is a (strong order) unit.
    fn is_unit(&self, u: &Self::Elem) -> bool;

    /// `inf { λ >= 0 : |x| <= λu }`, evaluated by the instance's closed form.
    /// Only meaningful when `u` is a unit.
    fn unit_norm_formula(&self, x: &Self::Elem, u: &Self::Elem) -> Rational;

    /// A certified non-zero infinitesimal, or `None` for Archimedean spaces.
    fn infinitesimal(&self) -> Option<Infinitesimal<Self::Elem>>;

    /// The distinguished unit (the constant one function where that makes sense).
    fn standard_unit(&self) -> Self::Elem;

    fn random_element(&self, rng: &mut SeededRng) -> Self::Elem;
    fn random_unit(&self, rng: &mut SeededRng) -> Self::Elem;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.meet(x, y) == *x
    }

    fn abs(&self, x: &Self::Elem) -> Self::Elem {
        self.join(x, &self.neg(x))
    }

    fn pos_part(&self, x: &Self::Elem) -> Self::Elem {
        self.join(x, &self.zero())
    }

    fn neg_part(&self, x: &Self::Elem) -> Self::Elem {
        self.join(&self.neg(x), &self.zero())
    }

    fn is_orthogonal(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.meet(&self.abs(x), &self.abs(y)) == self.zero()
    }

    fn join_all<'a, I>(&self, items: I) -> Option<Self::Elem>
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut it = items.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, x| self.join(&acc, x)))
    }

    fn meet_all<'a, I>(&self, items: I) -> Option<Self::Elem>
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut it = items.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, x| self.meet(&acc, x)))
    }
}
