//! Spectra, the Yosida transform and the two functors between finite discrete
//! spaces and unital `R^n`, with executable round-trip and naturality checks.
//!
//! Compact Hausdorff spaces are restricted to finite discrete ones. Every map
//! out of such a space is continuous, points are separated by indicator
//! functions, and compactness of a spectrum is just its finiteness, so every
//! statement below is decided exactly rather than through nets or limits.
//!
//! A linear functional on `R^n` is determined by its values on the standard
//! basis; [`identify_point`] uses this to recognise a functional as a spectrum
//! point without sampling.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Result, RieszError};
use crate::ideals::{separating_hom, FinHom};
use crate::lattice::laws::{Case, Counterexample, LawReport};
use crate::lattice::space::{RieszSpace, SeededRng};
use crate::rational::Rational;
use crate::spaces::{FinDim, FinVec};

/// A unit-preserving Riesz homomorphism `R^n → R`, `x ↦ coeff · x_index`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpectrumPoint {
    pub index: usize,
    pub coeff: Rational,
}

impl SpectrumPoint {
    pub fn new(index: usize, coeff: Rational) -> Result<Self> {
        if !coeff.is_positive() {
            return Err(RieszError::InvalidHom(format!("spectrum coefficient {coeff} must be positive")));
        }
        Ok(SpectrumPoint { index, coeff })
    }

    pub fn eval(&self, x: &FinVec) -> Rational {
        &self.coeff * x.get(self.index)
    }
}

/// Basis values `(f(e_0), …, f(e_{n-1}))` of a linear functional.
pub fn functional_coeffs(n: usize, f: impl Fn(&FinVec) -> Rational) -> Vec<Rational> {
    (0..n)
        .map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            f(&FinVec::new(e))
        })
        .collect()
}

/// Recognises a linear functional, given by its basis values, as the point of
/// `Φ(R^n, u)` it equals: exactly one positive coefficient `c` at index `i`,
/// and `c · u_i = 1`.
pub fn identify_point(coeffs: &[Rational], unit: &FinVec) -> Option<SpectrumPoint> {
    let mut nonzero = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let (i, c) = nonzero.next()?;
    if nonzero.next().is_some() || !c.is_positive() || (c * unit.get(i)) != Rational::one() {
        return None;
    }
    Some(SpectrumPoint { index: i, coeff: c.clone() })
}

fn unit_space(n: usize, unit: &FinVec) -> Result<FinDim> {
    let space = FinDim::new(n)?;
    space.check_member(unit)?;
    if !space.is_unit(unit) {
        return Err(RieszError::NotAUnit(format!("{unit:?}")));
    }
    Ok(space)
}

/// `Φ(R^n, u)`: the `n` points `(i, 1/u_i)` in index order.
pub fn spectrum(n: usize, unit: &FinVec) -> Result<Vec<SpectrumPoint>> {
    unit_space(n, unit)?;
    Ok(unit
        .coords()
        .iter()
        .enumerate()
        .map(|(i, w)| SpectrumPoint { index: i, coeff: w.recip().expect("positive") })
        .collect())
}

/// The bijection `Φ_e(E) → Φ_u(E)`, `φ ↦ (x ↦ φ(x)/φ(u))`, as index-aligned pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitChange {
    pub pairs: Vec<(SpectrumPoint, SpectrumPoint)>,
}

impl UnitChange {
    pub fn forward(&self, p: &SpectrumPoint) -> Option<&SpectrumPoint> {
        self.pairs.iter().find(|(a, _)| a == p).map(|(_, b)| b)
    }

    pub fn backward(&self, p: &SpectrumPoint) -> Option<&SpectrumPoint> {
        self.pairs.iter().find(|(_, b)| b == p).map(|(a, _)| a)
    }
}

/// Builds the unit-change map from the formula and verifies that each image is
/// a point of `Φ_u` and that the map is a bijection.
pub fn unit_change_iso(n: usize, e: &FinVec, u: &FinVec) -> Result<UnitChange> {
    let from = spectrum(n, e)?;
    let to = spectrum(n, u)?;
    let mut pairs = Vec::with_capacity(n);
    let mut hit = HashSet::new();
    for phi in from {
        let scale = phi.eval(u);
        let coeffs = functional_coeffs(n, |x| &phi.eval(x) / &scale);
        let image = identify_point(&coeffs, u)
            .ok_or_else(|| RieszError::Verification(format!("φ(x)/φ(u) for {phi:?} is not a point of Φ_u")))?;
        if !to.contains(&image) || !hit.insert(image.clone()) {
            return Err(RieszError::Verification(format!("unit change is not injective at {image:?}")));
        }
        pairs.push((phi, image));
    }
    if hit.len() != to.len() {
        return Err(RieszError::Verification("unit change is not surjective".into()));
    }
    Ok(UnitChange { pairs })
}

/// `x̂(φ) = φ(x)` tabulated over `Φ(R^n, u)` in index order: `(x_i/u_i)_i`.
pub fn yosida_transform(x: &FinVec, unit: &FinVec) -> Result<FinVec> {
    let space = unit_space(unit.len(), unit)?;
    space.check_member(x)?;
    let points = spectrum(unit.len(), unit)?;
    Ok(FinVec::new(points.iter().map(|phi| phi.eval(x)).collect()))
}

/// Inverse of [`yosida_transform`]: multiply coordinatewise by the unit.
pub fn inverse_transform(xhat: &FinVec, unit: &FinVec) -> Result<FinVec> {
    let space = unit_space(unit.len(), unit)?;
    space.check_member(xhat)?;
    Ok(FinVec::new(xhat.coords().iter().zip(unit.coords()).map(|(a, w)| a * w).collect()))
}

/// A finite discrete space given by distinct point labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FiniteSpaceJson", into = "FiniteSpaceJson")]
pub struct FiniteSpace {
    points: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct FiniteSpaceJson {
    points: Vec<String>,
}

impl TryFrom<FiniteSpaceJson> for FiniteSpace {
    type Error = RieszError;
    fn try_from(raw: FiniteSpaceJson) -> Result<Self> {
        FiniteSpace::new(raw.points)
    }
}

impl From<FiniteSpace> for FiniteSpaceJson {
    fn from(x: FiniteSpace) -> Self {
        FiniteSpaceJson { points: x.points }
    }
}

impl FiniteSpace {
    pub fn new<S: Into<String>>(points: impl IntoIterator<Item = S>) -> Result<Self> {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        if points.is_empty() {
            return Err(RieszError::InvalidSpace("a finite space needs at least one point".into()));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = points.iter().find(|p| !seen.insert(p.as_str())) {
            return Err(RieszError::InvalidSpace(format!("duplicate point label `{dup}`")));
        }
        Ok(FiniteSpace { points })
    }

    /// Points labelled `p0, p1, …`.
    pub fn numbered(n: usize) -> Result<Self> {
        FiniteSpace::new((0..n).map(|i| format!("p{i}")))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.points.iter().position(|p| p == label).ok_or_else(|| RieszError::UnknownPoint(label.to_string()))
    }
}

/// A map between finite spaces, stored as target indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap {
    source: FiniteSpace,
    target: FiniteSpace,
    assign: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SpaceMapJson {
    map: BTreeMap<String, String>,
}

impl SpaceMap {
    pub fn new(source: FiniteSpace, target: FiniteSpace, assign: Vec<usize>) -> Result<Self> {
        if assign.len() != source.len() {
            return Err(RieszError::InvalidSpace(format!("map assigns {} of {} points", assign.len(), source.len())));
        }
        if let Some(bad) = assign.iter().find(|&&j| j >= target.len()) {
            return Err(RieszError::InvalidSpace(format!("target index {bad} out of range")));
        }
        Ok(SpaceMap { source, target, assign })
    }

    /// Builds a map from a label association, which must be total on `source`.
    pub fn from_labels(source: FiniteSpace, target: FiniteSpace, map: &BTreeMap<String, String>) -> Result<Self> {
        if let Some(extra) = map.keys().find(|k| source.index_of(k).is_err()) {
            return Err(RieszError::UnknownPoint(extra.clone()));
        }
        let assign = source
            .points()
            .iter()
            .map(|p| {
                let img = map.get(p).ok_or_else(|| RieszError::InvalidSpace(format!("map is not defined at `{p}`")))?;
                target.index_of(img)
            })
            .collect::<Result<Vec<_>>>()?;
        SpaceMap::new(source, target, assign)
    }

    /// Parses `{"map": {"p": "r", …}}`.
    pub fn from_json(source: FiniteSpace, target: FiniteSpace, json: &str) -> Result<Self> {
        let raw: SpaceMapJson = serde_json::from_str(json).map_err(|e| RieszError::InvalidSpace(e.to_string()))?;
        SpaceMap::from_labels(source, target, &raw.map)
    }

    pub fn to_json(&self) -> String {
        let map = self
            .source
            .points()
            .iter()
            .zip(&self.assign)
            .map(|(p, &j)| (p.clone(), self.target.points()[j].clone()))
            .collect();
        serde_json::to_string(&SpaceMapJson { map }).expect("string map serializes")
    }

    pub fn identity(space: FiniteSpace) -> Self {
        let assign = (0..space.len()).collect();
        SpaceMap { source: space.clone(), target: space, assign }
    }

    pub fn random(source: FiniteSpace, target: FiniteSpace, rng: &mut SeededRng) -> Self {
        let assign = (0..source.len()).map(|_| rng.gen_range(0..target.len())).collect();
        SpaceMap { source, target, assign }
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.assign[i]
    }

    pub fn apply(&self, label: &str) -> Result<&str> {
        let i = self.source.index_of(label)?;
        Ok(&self.target.points()[self.assign[i]])
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SpaceMap) -> Result<SpaceMap> {
        if next.source != self.target {
            return Err(RieszError::InvalidSpace("maps are not composable".into()));
        }
        let assign = self.assign.iter().map(|&j| next.assign[j]).collect();
        Ok(SpaceMap { source: self.source.clone(), target: next.target.clone(), assign })
    }
}

/// `C(X) = R^{|X|}` with unit `𝟙`, coordinates in label order.
pub fn c_of_space(x: &FiniteSpace) -> (FinDim, FinVec) {
    let space = FinDim::new(x.len()).expect("finite spaces are non-empty");
    let ones = space.ones();
    (space, ones)
}

/// `C(f): C(Y) → C(X)`, `g ↦ g ∘ f`.
pub fn c_of_map(f: &SpaceMap) -> FinHom {
    FinHom::new(f.target.len(), f.assign.iter().map(|&j| (j, Rational::one())).collect())
        .expect("indices are in range and coefficients positive")
}

/// `Φ(h): Φ(E') → Φ(E)`, `φ ↦ φ ∘ h`, stored as index images
/// (`assign[j]` is the index in `Φ(E)` of the image of the `j`-th point of `Φ(E')`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumMap {
    pub source: Vec<SpectrumPoint>,
    pub target: Vec<SpectrumPoint>,
    pub assign: Vec<usize>,
}

impl SpectrumMap {
    pub fn identity(points: Vec<SpectrumPoint>) -> Self {
        let assign = (0..points.len()).collect();
        SpectrumMap { source: points.clone(), target: points, assign }
    }

    pub fn apply(&self, p: &SpectrumPoint) -> Option<&SpectrumPoint> {
        let j = self.source.iter().position(|s| s == p)?;
        Some(&self.target[self.assign[j]])
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SpectrumMap) -> Result<SpectrumMap> {
        if next.source != self.target {
            return Err(RieszError::InvalidHom("spectrum maps are not composable".into()));
        }
        let assign = self.assign.iter().map(|&j| next.assign[j]).collect();
        Ok(SpectrumMap { source: self.source.clone(), target: next.target.clone(), assign })
    }
}

/// `Φ(h)` for a unit-preserving `h: (R^n, u) → (R^m, u')`. Each `φ ∘ h` is
/// identified exactly as a point of `Φ(R^n, u)`; in normal form index `j`
/// lands on `σ(j)`.
pub fn phi_of_hom(h: &FinHom, unit: &FinVec, unit_target: &FinVec) -> Result<SpectrumMap> {
    let target = spectrum(h.source_dim(), unit)?;
    let source = spectrum(h.target_dim(), unit_target)?;
    if !h.is_unit_preserving(unit, unit_target) {
        return Err(RieszError::Precondition(format!("homomorphism does not map {unit:?} to {unit_target:?}")));
    }
    let n = h.source_dim();
    let assign = source
        .iter()
        .map(|phi| {
            let coeffs = functional_coeffs(n, |x| phi.eval(&h.apply(x).expect("dimension checked")));
            let p = identify_point(&coeffs, unit)
                .ok_or_else(|| RieszError::Verification(format!("{phi:?} ∘ h is not in Φ(E)")))?;
            Ok(p.index)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumMap { source, target, assign })
}

/// `δ_x ∈ Φ(C(X))`, `f ↦ f(x)`.
pub fn delta(space: &FiniteSpace, label: &str) -> Result<SpectrumPoint> {
    Ok(SpectrumPoint { index: space.index_of(label)?, coeff: Rational::one() })
}

/// Verifies that `x ↦ δ_x` is a bijection `X → Φ(C(X))` and returns it.
pub fn roundtrip_space(space: &FiniteSpace) -> Result<Vec<(String, SpectrumPoint)>> {
    let (c, ones) = c_of_space(space);
    let spec = spectrum(c.dim(), &ones)?;
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(space.len());
    for label in space.points() {
        let d = delta(space, label)?;
        if !spec.contains(&d) {
            return Err(RieszError::Verification(format!("δ_{label} is not in Φ(C(X))")));
        }
        if !seen.insert(d.clone()) {
            return Err(RieszError::Verification(format!("δ is not injective at `{label}`")));
        }
        out.push((label.clone(), d));
    }
    if seen.len() != spec.len() {
        return Err(RieszError::Verification(format!("δ hits {} of {} spectrum points", seen.len(), spec.len())));
    }
    Ok(out)
}

/// Outcome of [`roundtrip_algebra`].
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraRoundTrip {
    pub spectrum: Vec<SpectrumPoint>,
    pub samples: usize,
}

/// Verifies that `x ↦ x̂` is a unit-preserving Riesz isomorphism
/// `(R^n, u) → C(Φ(R^n, u))`, on `samples` random elements.
///
/// Injectivity goes through [`separating_hom`]: a non-zero `x` has a spectrum
/// point with `φ(x) != 0`, i.e. `x̂ != 0`. Surjectivity is the dimension count
/// `|Φ| = n` together with an exact two-sided inverse.
pub fn roundtrip_algebra(n: usize, unit: &FinVec, samples: usize, seed: u64) -> Result<AlgebraRoundTrip> {
    let space = unit_space(n, unit)?;
    let spec = spectrum(n, unit)?;
    let hat_space = FinDim::new(spec.len())?;
    let fail = |what: String| Err(RieszError::Verification(what));
    let hat = |x: &FinVec| yosida_transform(x, unit);

    if hat(unit)? != hat_space.ones() {
        return fail("û != 𝟙".into());
    }
    if spec.len() != n {
        return fail(format!("|Φ| = {} but n = {n}", spec.len()));
    }
    let mut rng = SeededRng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = space.random_element(&mut rng);
        let y = space.random_element(&mut rng);
        let l = Rational::random(&mut rng, 100, 10);
        let (hx, hy) = (hat(&x)?, hat(&y)?);
        if hat(&space.add(&x, &y))? != hat_space.add(&hx, &hy) {
            return fail(format!("(x + y)^ != x̂ + ŷ at x = {x:?}, y = {y:?}"));
        }
        if hat(&space.scale(&l, &x))? != hat_space.scale(&l, &hx) {
            return fail(format!("(λx)^ != λx̂ at x = {x:?}, λ = {l}"));
        }
        if hat(&space.join(&x, &y))? != hat_space.join(&hx, &hy) {
            return fail(format!("(x ∨ y)^ != x̂ ∨ ŷ at x = {x:?}, y = {y:?}"));
        }
        if hat(&space.meet(&x, &y))? != hat_space.meet(&hx, &hy) {
            return fail(format!("(x ∧ y)^ != x̂ ∧ ŷ at x = {x:?}, y = {y:?}"));
        }
        if !x.is_zero() {
            let phi = separating_hom(&x, unit)?;
            let k = spec.iter().position(|p| *p == phi);
            match k {
                Some(k) if !hx.get(k).is_zero() => {}
                _ => return fail(format!("no spectrum point separates {x:?} from 0")),
            }
        }
        if inverse_transform(&hx, unit)? != x {
            return fail(format!("inverse transform does not recover {x:?}"));
        }
        if hat(&inverse_transform(&y, unit)?)? != y {
            return fail(format!("{y:?} is not in the image of the transform"));
        }
    }
    Ok(AlgebraRoundTrip { spectrum: spec, samples })
}

fn square_failure(law: &str, cases: usize, elems: Vec<FinVec>, lhs: String, rhs: String) -> LawReport<FinVec> {
    LawReport {
        law: law.into(),
        cases,
        counterexample: Some(Counterexample { case: Case { elems, scalars: vec![] }, lhs, rhs }),
    }
}

/// Checks `CΦ(h) ∘ (·)^ = (·)^ ∘ h` for a unit-preserving `h` on `samples`
/// random elements, at every spectrum point.
pub fn check_naturality_hom(
    h: &FinHom,
    unit: &FinVec,
    unit_target: &FinVec,
    samples: usize,
    seed: u64,
) -> Result<LawReport<FinVec>> {
    const LAW: &str = "CΦ(h) ∘ (·)^ = (·)^ ∘ h";
    let phi_h = phi_of_hom(h, unit, unit_target)?;
    // CΦ(h) = C(Φ(h)): precomposition with Φ(h).
    let c_phi_h = FinHom::new(phi_h.target.len(), phi_h.assign.iter().map(|&k| (k, Rational::one())).collect())?;
    let space = FinDim::new(h.source_dim())?;
    let mut rng = SeededRng::seed_from_u64(seed);
    for k in 0..samples {
        let x = space.random_element(&mut rng);
        let lhs = c_phi_h.apply(&yosida_transform(&x, unit)?)?;
        let rhs = yosida_transform(&h.apply(&x)?, unit_target)?;
        if lhs != rhs {
            return Ok(square_failure(LAW, k + 1, vec![x], format!("{lhs:?}"), format!("{rhs:?}")));
        }
    }
    Ok(LawReport::pass(LAW, samples))
}

/// Checks `ΦC(f) ∘ δ = δ ∘ f` at every point, and that both sides agree as
/// functionals on `samples` random `g ∈ C(Y)`.
pub fn check_naturality_map(f: &SpaceMap, samples: usize, seed: u64) -> Result<LawReport<FinVec>> {
    const LAW: &str = "ΦC(f) ∘ δ = δ ∘ f";
    let cf = c_of_map(f);
    let (_, ones_x) = c_of_space(f.source());
    let (cy, ones_y) = c_of_space(f.target());
    let phi_cf = phi_of_hom(&cf, &ones_y, &ones_x)?;
    let mut rng = SeededRng::seed_from_u64(seed);
    for (i, label) in f.source().points().iter().enumerate() {
        let d = delta(f.source(), label)?;
        let lhs = phi_cf.apply(&d).cloned();
        let rhs = delta(f.target(), &f.target().points()[f.apply_index(i)])?;
        if lhs.as_ref() != Some(&rhs) {
            return Ok(square_failure(LAW, i + 1, vec![], format!("{lhs:?}"), format!("{rhs:?}")));
        }
        for _ in 0..samples {
            let g = cy.random_element(&mut rng);
            let via_c = d.eval(&cf.apply(&g)?);
            let via_f = rhs.eval(&g);
            if via_c != via_f {
                return Ok(square_failure(LAW, i + 1, vec![g], via_c.to_string(), via_f.to_string()));
            }
        }
    }
    Ok(LawReport::pass(LAW, f.source().len()))
}

/// A random unit-preserving homomorphism `(R^n, u) → (R^m, u')`: random
/// indices, coefficients forced by `c_j = u'_j / u_{σ(j)}`.
pub fn random_unit_hom(unit: &FinVec, unit_target: &FinVec, rng: &mut SeededRng) -> FinHom {
    let assign = unit_target
        .coords()
        .iter()
        .map(|w| {
            let i = rng.gen_range(0..unit.len());
            (i, w / unit.get(i))
        })
        .collect();
    FinHom::new(unit.len(), assign).expect("positive coefficients, valid indices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, z};

    fn v(xs: &[i64]) -> FinVec {
        FinVec::from_ints(xs)
    }

    #[test]
    fn spectrum_examples() {
        let s = spectrum(2, &v(&[1, 1])).unwrap();
        assert_eq!(s, vec![SpectrumPoint::new(0, z(1)).unwrap(), SpectrumPoint::new(1, z(1)).unwrap()]);
        let s = spectrum(1, &v(&[3])).unwrap();
        assert_eq!(s[0].coeff, q(1, 3));
        let s = spectrum(3, &v(&[1, 2, 4])).unwrap();
        let cs: Vec<_> = s.iter().map(|p| p.coeff.clone()).collect();
        assert_eq!(cs, vec![z(1), q(1, 2), q(1, 4)]);
        assert!(spectrum(2, &v(&[1, 0])).is_err());
    }

    #[test]
    fn spectrum_points_are_unital_riesz_homs() {
        let mut rng = SeededRng::seed_from_u64(2);
        for n in 1..=5 {
            let space = FinDim::new(n).unwrap();
            let u = space.random_unit(&mut rng);
            for phi in spectrum(n, &u).unwrap() {
                assert_eq!(phi.eval(&u), z(1));
                for _ in 0..100 {
                    let (x, y) = (space.random_element(&mut rng), space.random_element(&mut rng));
                    assert_eq!(phi.eval(&space.join(&x, &y)), phi.eval(&x).max(phi.eval(&y)));
                    assert_eq!(phi.eval(&space.meet(&x, &y)), phi.eval(&x).min(phi.eval(&y)));
                }
            }
        }
    }

    #[test]
    fn unit_change_examples() {
        let e = v(&[1, 1]);
        let u = v(&[2, 3]);
        let iso = unit_change_iso(2, &e, &u).unwrap();
        let p0 = SpectrumPoint::new(0, z(1)).unwrap();
        assert_eq!(iso.forward(&p0).unwrap(), &SpectrumPoint::new(0, q(1, 2)).unwrap());
        let same = unit_change_iso(2, &u, &u).unwrap();
        assert!(same.pairs.iter().all(|(a, b)| a == b));
        let back = unit_change_iso(2, &u, &e).unwrap();
        for (a, b) in &iso.pairs {
            assert_eq!(back.forward(b).unwrap(), a);
        }
    }

    #[test]
    fn transform_examples() {
        assert_eq!(yosida_transform(&v(&[2, 6]), &v(&[1, 2])).unwrap(), v(&[2, 3]));
        let u = v(&[1, 2, 4]);
        assert_eq!(yosida_transform(&u, &u).unwrap(), v(&[1, 1, 1]));
        assert_eq!(yosida_transform(&v(&[0, 0, 0]), &u).unwrap(), v(&[0, 0, 0]));
    }

    #[test]
    fn transform_is_isometric() {
        let mut rng = SeededRng::seed_from_u64(4);
        let space = FinDim::new(4).unwrap();
        for _ in 0..200 {
            let u = space.random_unit(&mut rng);
            let x = space.random_element(&mut rng);
            let xhat = yosida_transform(&x, &u).unwrap();
            assert_eq!(space.unit_norm_formula(&xhat, &space.ones()), space.unit_norm_formula(&x, &u));
        }
    }

    #[test]
    fn c_of_examples() {
        let x = FiniteSpace::new(["p", "q"]).unwrap();
        let (c, ones) = c_of_space(&x);
        assert_eq!((c.dim(), ones), (2, v(&[1, 1])));
        let y = FiniteSpace::new(["r"]).unwrap();
        let f = SpaceMap::from_json(x.clone(), y.clone(), r#"{"map":{"p":"r","q":"r"}}"#).unwrap();
        let cf = c_of_map(&f);
        assert_eq!(cf.apply(&v(&[7])).unwrap(), v(&[7, 7]));
        assert_eq!(c_of_map(&SpaceMap::identity(x.clone())), FinHom::identity(2));
        assert!(cf.is_unit_preserving(&v(&[1]), &v(&[1, 1])));
        assert_eq!(f.to_json(), r#"{"map":{"p":"r","q":"r"}}"#);
    }

    #[test]
    fn malformed_maps_and_spaces() {
        assert!(FiniteSpace::new(Vec::<String>::new()).is_err());
        assert!(FiniteSpace::new(["a", "a"]).is_err());
        let x = FiniteSpace::new(["p", "q"]).unwrap();
        let y = FiniteSpace::new(["r"]).unwrap();
        assert!(SpaceMap::from_json(x.clone(), y.clone(), r#"{"map":{"p":"r"}}"#).is_err());
        assert!(SpaceMap::from_json(x.clone(), y.clone(), r#"{"map":{"p":"r","q":"s"}}"#).is_err());
        assert!(SpaceMap::from_json(x, y, r#"{"map":{"p":"r","q":"r","z":"r"}}"#).is_err());
        let fs: FiniteSpace = serde_json::from_str(r#"{"points":["a","b"]}"#).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(serde_json::from_str::<FiniteSpace>(r#"{"points":[]}"#).is_err());
    }

    #[test]
    fn phi_of_constant_map_is_constant() {
        let x = FiniteSpace::new(["p", "q"]).unwrap();
        let y = FiniteSpace::new(["r"]).unwrap();
        let f = SpaceMap::new(x, y, vec![0, 0]).unwrap();
        let h = c_of_map(&f);
        let m = phi_of_hom(&h, &v(&[1]), &v(&[1, 1])).unwrap();
        assert_eq!(m.assign, vec![0, 0]);
        assert_eq!(m.target.len(), 1);
        let id = phi_of_hom(&FinHom::identity(3), &v(&[1, 2, 3]), &v(&[1, 2, 3])).unwrap();
        assert_eq!(id, SpectrumMap::identity(spectrum(3, &v(&[1, 2, 3])).unwrap()));
        let bad = FinHom::new(1, vec![(0, z(2))]).unwrap();
        assert!(matches!(phi_of_hom(&bad, &v(&[1]), &v(&[1])), Err(RieszError::Precondition(_))));
    }

    #[test]
    fn delta_examples() {
        let x = FiniteSpace::new(["p", "q"]).unwrap();
        let d = delta(&x, "q").unwrap();
        assert_eq!((d.index, d.coeff.clone()), (1, z(1)));
        assert_eq!(d.eval(&v(&[1, 1])), z(1));
        assert_eq!(d.eval(&v(&[5, -9])), z(-9));
        assert_eq!(delta(&x, "zz").unwrap_err(), RieszError::UnknownPoint("zz".into()));
    }

    #[test]
    fn roundtrips() {
        for n in 1..=6 {
            let x = FiniteSpace::numbered(n).unwrap();
            assert_eq!(roundtrip_space(&x).unwrap().len(), n);
        }
        let r = roundtrip_algebra(3, &v(&[1, 2, 4]), 300, 1).unwrap();
        assert_eq!(r.spectrum.len(), 3);
    }

    #[test]
    fn naturality() {
        let id = FinHom::identity(3);
        let u = v(&[1, 2, 3]);
        assert!(check_naturality_hom(&id, &u, &u, 50, 0).unwrap().passed());
        let mut rng = SeededRng::seed_from_u64(10);
        let r3 = FinDim::new(3).unwrap();
        let r2 = FinDim::new(2).unwrap();
        for _ in 0..20 {
            let (u, w) = (r3.random_unit(&mut rng), r2.random_unit(&mut rng));
            let h = random_unit_hom(&u, &w, &mut rng);
            assert!(check_naturality_hom(&h, &u, &w, 200, 3).unwrap().passed());
        }
        for _ in 0..20 {
            let a = FiniteSpace::numbered(rng.gen_range(1..=5)).unwrap();
            let b = FiniteSpace::numbered(rng.gen_range(1..=5)).unwrap();
            let f = SpaceMap::random(a, b, &mut rng);
            assert!(check_naturality_map(&f, 20, 4).unwrap().passed());
        }
    }

    /// Applying the algebra round trip to `C(X)` and the space round trip to
    /// `X` lines up: `δ_x` is the spectrum point at the position of `x`, and
    /// the transform of `f ∈ C(X)` (unit `𝟙`) is `f` itself read through `δ`.
    #[test]
    fn triangle_identities() {
        let mut rng = SeededRng::seed_from_u64(6);
        for n in 1..=5 {
            let x = FiniteSpace::numbered(n).unwrap();
            let (c, ones) = c_of_space(&x);
            let alg = roundtrip_algebra(n, &ones, 50, n as u64).unwrap();
            let pts = roundtrip_space(&x).unwrap();
            for (k, (label, d)) in pts.iter().enumerate() {
                assert_eq!(&alg.spectrum[k], d);
                assert_eq!(x.index_of(label).unwrap(), d.index);
            }
            for _ in 0..50 {
                let f = c.random_element(&mut rng);
                let fhat = yosida_transform(&f, &ones).unwrap();
                for (k, (_, d)) in pts.iter().enumerate() {
                    assert_eq!(fhat.get(k), &d.eval(&f));
                }
                assert_eq!(inverse_transform(&fhat, &ones).unwrap(), f);
            }
        }
    }

    #[test]
    fn spectrum_point_json() {
        let p = SpectrumPoint::new(2, q(1, 4)).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"index":2,"coeff":"1/4"}"#);
    }
}
