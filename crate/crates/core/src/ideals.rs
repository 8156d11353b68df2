//! Riesz ideals of `R^n`, quotients, maximal ideals and separating
//! homomorphisms.
//!
//! Every Riesz ideal of `R^n` is a support ideal `D_S = { x : x_i = 0, i ∈ S }`
//! (a standard fact, assumed here; the code only checks that each `D_S` is an
//! ideal). The quotient `R^n / D_S` is realized as the projection onto the
//! coordinates outside `S`. For support ideals this agrees with ordering the
//! quotient by representatives (`q(a) >= 0` iff `a >= d` for some `d ∈ D`),
//! which is not mechanized.

use std::collections::BTreeSet;

use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::duality::SpectrumPoint;
use crate::error::{Result, RieszError};
use crate::lattice::laws::{Case, Counterexample, LawReport};
use crate::lattice::space::{RieszSpace, SeededRng};
use crate::rational::Rational;
use crate::spaces::{FinDim, FinVec, Lex, LexPlane};

/// Largest `n` accepted by [`enumerate_ideals`].
pub const MAX_ENUMERATION_DIM: usize = 12;

/// The ideal `D_S` of `R^n` of vectors vanishing on `zero_set`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SupportIdeal {
    pub n: usize,
    pub zero_set: BTreeSet<usize>,
}

impl SupportIdeal {
    pub fn new(n: usize, zero_set: impl IntoIterator<Item = usize>) -> Result<Self> {
        let zero_set: BTreeSet<usize> = zero_set.into_iter().collect();
        if let Some(&bad) = zero_set.iter().find(|&&i| i >= n) {
            return Err(RieszError::Precondition(format!("index {bad} out of range for R^{n}")));
        }
        Ok(SupportIdeal { n, zero_set })
    }

    /// `{0}`.
    pub fn zero(n: usize) -> Self {
        SupportIdeal { n, zero_set: (0..n).collect() }
    }

    /// The whole space.
    pub fn whole(n: usize) -> Self {
        SupportIdeal { n, zero_set: BTreeSet::new() }
    }

    pub fn contains(&self, x: &FinVec) -> bool {
        x.len() == self.n && self.zero_set.iter().all(|&i| x.get(i).is_zero())
    }

    /// Coordinates outside the zero set, in increasing order.
    pub fn free_coords(&self) -> Vec<usize> {
        (0..self.n).filter(|i| !self.zero_set.contains(i)).collect()
    }

    /// Linear dimension of `D_S`.
    pub fn dim(&self) -> usize {
        self.n - self.zero_set.len()
    }

    pub fn is_proper(&self) -> bool {
        !self.zero_set.is_empty()
    }
}

/// A Riesz homomorphism `R^n → R^m` in normal form
/// `x ↦ (c_j · x_{σ(j)})_j` with every `c_j > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinHom {
    source: usize,
    assign: Vec<(usize, Rational)>,
}

#[derive(Serialize, Deserialize)]
struct AssignJson {
    from: usize,
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct FinHomJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<usize>,
    assign: Vec<AssignJson>,
}

impl Serialize for FinHom {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FinHomJson {
            source: Some(self.source),
            assign: self.assign.iter().map(|(from, coeff)| AssignJson { from: *from, coeff: coeff.clone() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FinHom {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = FinHomJson::deserialize(deserializer)?;
        let assign: Vec<(usize, Rational)> = raw.assign.into_iter().map(|a| (a.from, a.coeff)).collect();
        let source = raw.source.unwrap_or_else(|| assign.iter().map(|(i, _)| i + 1).max().unwrap_or(0));
        FinHom::new(source, assign).map_err(serde::de::Error::custom)
    }
}

impl FinHom {
    pub fn new(source: usize, assign: Vec<(usize, Rational)>) -> Result<Self> {
        if source == 0 {
            return Err(RieszError::InvalidHom("source dimension must be at least 1".into()));
        }
        for (j, (i, c)) in assign.iter().enumerate() {
            if *i >= source {
                return Err(RieszError::InvalidHom(format!("output {j} reads coordinate {i} of R^{source}")));
            }
            if !c.is_positive() {
                return Err(RieszError::InvalidHom(format!("output {j} has coefficient {c} <= 0")));
            }
        }
        Ok(FinHom { source, assign })
    }

    pub fn identity(n: usize) -> Self {
        FinHom { source: n, assign: (0..n).map(|i| (i, Rational::one())).collect() }
    }

    /// Coordinate projection with unit coefficients.
    pub fn projection(source: usize, coords: &[usize]) -> Result<Self> {
        FinHom::new(source, coords.iter().map(|&i| (i, Rational::one())).collect())
    }

    pub fn source_dim(&self) -> usize {
        self.source
    }

    pub fn target_dim(&self) -> usize {
        self.assign.len()
    }

    pub fn assignment(&self) -> &[(usize, Rational)] {
        &self.assign
    }

    pub fn apply(&self, x: &FinVec) -> Result<FinVec> {
        if x.len() != self.source {
            return Err(RieszError::SpaceMismatch {
                space: format!("R^{}", self.source),
                detail: format!("got {} coordinates", x.len()),
            });
        }
        Ok(FinVec::new(self.assign.iter().map(|(i, c)| c * x.get(*i)).collect()))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FinHom) -> Result<FinHom> {
        if next.source != self.target_dim() {
            return Err(RieszError::InvalidHom(format!(
                "cannot compose R^{} → R^{} with a map from R^{}",
                self.source,
                self.target_dim(),
                next.source
            )));
        }
        let assign = next
            .assign
            .iter()
            .map(|(k, c2)| {
                let (i, c1) = &self.assign[*k];
                (*i, c2 * c1)
            })
            .collect();
        Ok(FinHom { source: self.source, assign })
    }

    /// `c_j · u_{σ(j)} = u'_j` for every output `j`.
    pub fn is_unit_preserving(&self, u: &FinVec, u_target: &FinVec) -> bool {
        u.len() == self.source
            && u_target.len() == self.target_dim()
            && self.assign.iter().zip(u_target.coords()).all(|((i, c), w)| &(c * u.get(*i)) == w)
    }

    /// The kernel: vectors vanishing on every coordinate that is read.
    pub fn kernel(&self) -> SupportIdeal {
        SupportIdeal { n: self.source, zero_set: self.assign.iter().map(|(i, _)| *i).collect() }
    }
}

/// `a⊥ = { x : x ⊥ a }`, the support ideal vanishing on the support of `a`.
pub fn perp_ideal(a: &FinVec) -> SupportIdeal {
    SupportIdeal { n: a.len(), zero_set: a.support().collect() }
}

/// Spaces that can produce elements `x` with `|x| <= |a|` for a given `a`.
pub trait DominatedSampler: RieszSpace {
    fn dominated(&self, a: &Self::Elem, rng: &mut SeededRng) -> Vec<Self::Elem>;
}

impl DominatedSampler for FinDim {
    /// The restrictions of `a` to single coordinates of its support, followed
    /// by a random coordinatewise shrink `x_i = r_i a_i`, `r_i ∈ [-1, 1]`.
    fn dominated(&self, a: &FinVec, rng: &mut SeededRng) -> Vec<FinVec> {
        let mut out: Vec<FinVec> = a
            .support()
            .map(|i| {
                let mut c = vec![Rational::zero(); a.len()];
                c[i] = a.get(i).clone();
                FinVec::new(c)
            })
            .collect();
        let (lo, hi) = (Rational::from_integer(-1), Rational::one());
        out.push(FinVec::new(a.coords().iter().map(|c| c * &Rational::random_in(rng, &lo, &hi, 10)).collect()));
        out
    }
}

impl DominatedSampler for LexPlane {
    fn dominated(&self, a: &Lex, rng: &mut SeededRng) -> Vec<Lex> {
        let m = self.abs(a);
        let (lo, hi) = (Rational::from_integer(-1), Rational::one());
        let mut out = vec![Lex::new(Rational::zero(), &m.second * &Rational::random_in(rng, &lo, &hi, 10))];
        if m.first.is_positive() {
            let r = Rational::random_in(rng, &Rational::new(-9, 10), &Rational::new(9, 10), 10);
            out.push(Lex::new(&m.first * &r, Rational::random(rng, 100, 10)));
        }
        out
    }
}

/// A subset of a Riesz space to be tested for the ideal conditions.
pub trait IdealCandidate<S: RieszSpace> {
    fn contains(&self, x: &S::Elem) -> bool;
    /// The `index`-th sample member; early indices may be fixed probes.
    fn member(&self, index: usize, rng: &mut SeededRng) -> S::Elem;
}

impl IdealCandidate<FinDim> for SupportIdeal {
    fn contains(&self, x: &FinVec) -> bool {
        SupportIdeal::contains(self, x)
    }

    fn member(&self, _index: usize, rng: &mut SeededRng) -> FinVec {
        FinVec::new(
            (0..self.n)
                .map(|i| if self.zero_set.contains(&i) { Rational::zero() } else { Rational::random(rng, 100, 10) })
                .collect(),
        )
    }
}

/// The linear span of a list of vectors; membership is decided by exact rank.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSpan {
    pub n: usize,
    pub basis: Vec<FinVec>,
}

impl LinearSpan {
    pub fn new(n: usize, basis: Vec<FinVec>) -> Result<Self> {
        if basis.iter().any(|b| b.len() != n) {
            return Err(RieszError::Precondition("basis vectors must lie in R^n".into()));
        }
        Ok(LinearSpan { n, basis })
    }
}

/// Rank of a list of rational row vectors by Gaussian elimination.
pub fn rank(rows: &[FinVec]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        r += 1;
    }
    r
}

impl IdealCandidate<FinDim> for LinearSpan {
    fn contains(&self, x: &FinVec) -> bool {
        if x.len() != self.n {
            return false;
        }
        let mut rows = self.basis.clone();
        let before = rank(&rows);
        rows.push(x.clone());
        rank(&rows) == before
    }

    /// The basis vectors first, then random combinations.
    fn member(&self, index: usize, rng: &mut SeededRng) -> FinVec {
        if let Some(b) = self.basis.get(index) {
            return b.clone();
        }
        let space = FinDim::new(self.n).expect("n >= 1");
        self.basis.iter().fold(space.zero(), |acc, b| space.add(&acc, &space.scale(&Rational::random(rng, 100, 10), b)))
    }
}

/// The axis `{(0, t)}` of the lexicographic plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LexAxis;

impl IdealCandidate<LexPlane> for LexAxis {
    fn contains(&self, x: &Lex) -> bool {
        x.first.is_zero()
    }

    fn member(&self, _index: usize, rng: &mut SeededRng) -> Lex {
        Lex::new(Rational::zero(), Rational::random(rng, 100, 10))
    }
}

fn violation<E: Clone>(law: &str, cases: usize, what: String, elems: Vec<E>) -> LawReport<E> {
    LawReport {
        law: law.to_string(),
        cases,
        counterexample: Some(Counterexample { case: Case { elems, scalars: vec![] }, lhs: what, rhs: "∉ D".into() }),
    }
}

/// Checks, on `samples` members, that a candidate is a linear subspace, a Riesz
/// subspace, solid (`|x| <= |a|`, `a ∈ D` implies `x ∈ D`), and that
/// `0 <= x <= a` with `a ∈ D⁺` implies `x ∈ D`.
///
/// Counterexamples list `[x, a]` (or `[a, b]` for closure failures).
pub fn check_ideal_candidate<S, C>(space: &S, cand: &C, samples: usize, seed: u64) -> LawReport<S::Elem>
where
    S: DominatedSampler,
    C: IdealCandidate<S>,
{
    const LAW: &str = "Riesz ideal (solid linear subspace)";
    let mut rng = SeededRng::seed_from_u64(seed);
    let zero = space.zero();
    if !cand.contains(&zero) {
        return violation(LAW, 0, "0".into(), vec![zero]);
    }
    for k in 0..samples {
        let a = cand.member(k, &mut rng);
        let b = cand.member(samples + k, &mut rng);
        let lambda = Rational::random(&mut rng, 100, 10);
        let sum = space.add(&a, &b);
        if !cand.contains(&sum) {
            return violation(LAW, k + 1, format!("linear closure: a + b = {sum:?}"), vec![a, b]);
        }
        let scaled = space.scale(&lambda, &a);
        if !cand.contains(&scaled) {
            return violation(LAW, k + 1, format!("linear closure: λa = {scaled:?}"), vec![a, b]);
        }
        for (label, e) in [("a ∨ b", space.join(&a, &b)), ("a ∧ b", space.meet(&a, &b))] {
            if !cand.contains(&e) {
                return violation(LAW, k + 1, format!("Riesz subspace: {label} = {e:?}"), vec![a, b]);
            }
        }
        let abs_a = space.abs(&a);
        for x in space.dominated(&a, &mut rng) {
            if !space.leq(&space.abs(&x), &abs_a) {
                continue;
            }
            if !cand.contains(&x) {
                return violation(LAW, k + 1, format!("|x| ≤ |a| but x = {x:?}"), vec![x, a]);
            }
            // x⁺ and x⁻ lie in [0, |a|] and |a| ∈ D⁺ whenever D is a Riesz subspace.
            for p in [space.pos_part(&x), space.neg_part(&x)] {
                if !cand.contains(&p) {
                    return violation(LAW, k + 1, format!("0 ≤ x ≤ |a| but x = {p:?}"), vec![p, abs_a]);
                }
            }
        }
    }
    LawReport::pass(LAW, samples)
}

/// Ideal check for a support ideal of `R^n`.
pub fn is_riesz_ideal(ideal: &SupportIdeal, samples: usize, seed: u64) -> Result<LawReport<FinVec>> {
    let space = FinDim::new(ideal.n)?;
    Ok(check_ideal_candidate(&space, ideal, samples, seed))
}

/// The quotient of a unital `R^n` by a support ideal, as a projection.
#[derive(Clone, Debug, PartialEq)]
pub struct Quotient {
    pub space: FinDim,
    pub unit: FinVec,
    pub map: FinHom,
}

/// `R^n / D_S ≅ R^S`: `q` projects onto the zero set `S` (so its kernel is
/// exactly `D_S`) and the unit becomes `u` restricted to `S`.
pub fn quotient(n: usize, unit: &FinVec, ideal: &SupportIdeal) -> Result<Quotient> {
    let space = FinDim::new(n)?;
    space.check_member(unit)?;
    if !space.is_unit(unit) {
        return Err(RieszError::NotAUnit(format!("{unit:?}")));
    }
    if ideal.n != n {
        return Err(RieszError::Precondition(format!("ideal lives in R^{}, not R^{n}", ideal.n)));
    }
    let keep: Vec<usize> = ideal.zero_set.iter().copied().collect();
    if keep.is_empty() {
        return Err(RieszError::ZeroQuotient);
    }
    let map = FinHom::projection(n, &keep)?;
    let unit = map.apply(unit)?;
    Ok(Quotient { space: FinDim::new(keep.len())?, unit, map })
}

/// All `2^n` support ideals, ordered by the bitmask of their zero sets.
pub fn enumerate_ideals(n: usize) -> Result<Vec<SupportIdeal>> {
    if n == 0 {
        return Err(RieszError::InvalidSpace("R^n needs n >= 1".into()));
    }
    if n > MAX_ENUMERATION_DIM {
        return Err(RieszError::TooLarge(n, MAX_ENUMERATION_DIM));
    }
    Ok((0u32..1 << n)
        .map(|mask| SupportIdeal { n, zero_set: (0..n).filter(|i| mask & (1 << i) != 0).collect() })
        .collect())
}

/// The `n` maximal ideals `{ x : x_i = 0 }`, i.e. zero set `{i}`; their
/// supports are the co-singletons and each quotient is a line.
pub fn maximal_ideals(n: usize) -> Result<Vec<SupportIdeal>> {
    if n == 0 {
        return Err(RieszError::InvalidSpace("R^n needs n >= 1".into()));
    }
    Ok((0..n).map(|i| SupportIdeal { n, zero_set: BTreeSet::from([i]) }).collect())
}

/// A unit-preserving functional `φ` with `φ(a) != 0`: evaluation at the first
/// non-zero coordinate of `a`, normalized by the unit there.
pub fn separating_hom(a: &FinVec, unit: &FinVec) -> Result<SpectrumPoint> {
    let space = FinDim::new(unit.len())?;
    space.check_member(a)?;
    if !space.is_unit(unit) {
        return Err(RieszError::NotAUnit(format!("{unit:?}")));
    }
    let i = a.support().next().ok_or_else(|| RieszError::Precondition("a must be non-zero".into()))?;
    SpectrumPoint::new(i, unit.get(i).recip().expect("unit coordinates are positive"))
}
