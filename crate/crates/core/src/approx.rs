//! Lattice Stone–Weierstrass approximation on a finite domain.
//!
//! Given a target `g`, a unital point-separating generator set `D` and a budget
//! `ε`, [`sw_approximate`] builds an explicit [`LatticeExpr`] over `D` using only
//! affine combinations, finite meets and finite joins:
//!
//! 1. split `g = g⁺ − g⁻` and treat each part (which is `>= 0`) with budget `ε/2`;
//! 2. for a part `h` with budget `δ`, and each pair `y != z`, the separator
//!    `f_y = h(z)/(f(z) − f(y)) · (f − f(y)𝟙)` vanishes at `y` and equals `h(z)`
//!    at `z`, where `f` is the first generator with `f(y) != f(z)`;
//! 3. `f'_z` is the meet of separators whose sets `{ f_y < h + δ/2 }` cover the
//!    domain, so `f'_z(z) = h(z)` and `f'_z <= h + δ/2`;
//! 4. `h₀` is the join of those `f'_z` whose sets `{ h − δ/2 < f'_z }` cover the
//!    domain, giving `h − δ/2 <= h₀ <= h + δ/2`.
//!
//! On a finite domain the full families are already finite covers, so by
//! default every `y` and every `z` is kept ([`CoverStrategy::All`]); a greedy
//! pass picking a smaller cover is available. The error bound holds on the
//! sampled domain only. Extending it to the continuum needs a modulus of
//! continuity for `g`; for piecewise-linear targets whose breakpoints lie in the
//! grid, [`expr_to_pl`] turns the output into an exact [`PlFunction`] whose sup
//! distance can be measured directly.
//!
//! Grid-only covers do not control the error between grid points (a join of
//! narrow tents can dip far below the target there). [`sw_approximate_pl`]
//! runs the same construction with `X = [0, 1]`: the covers are decided over
//! the whole interval, so its output is within `ε` in the exact sup norm, or
//! the call fails when the grid is too coarse.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::duality::FiniteSpace;
use crate::error::{Result, RieszError};
use crate::rational::Rational;
use crate::spaces::PlFunction;

/// A term over a generator set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum LatticeExpr {
    Gen { index: usize },
    Const { value: Rational },
    Add { left: Box<LatticeExpr>, right: Box<LatticeExpr> },
    Scale { factor: Rational, child: Box<LatticeExpr> },
    Join { children: Vec<LatticeExpr> },
    Meet { children: Vec<LatticeExpr> },
}

impl LatticeExpr {
    pub fn gen(index: usize) -> Self {
        LatticeExpr::Gen { index }
    }

    pub fn constant(value: Rational) -> Self {
        LatticeExpr::Const { value }
    }

    pub fn plus(left: LatticeExpr, right: LatticeExpr) -> Self {
        LatticeExpr::Add { left: Box::new(left), right: Box::new(right) }
    }

    pub fn scale(factor: Rational, child: LatticeExpr) -> Self {
        LatticeExpr::Scale { factor, child: Box::new(child) }
    }

    /// Join of the children; a single child is returned as is. Panics on an
    /// empty list.
    pub fn join(mut children: Vec<LatticeExpr>) -> Self {
        assert!(!children.is_empty(), "empty join");
        if children.len() == 1 {
            children.pop().expect("one child")
        } else {
            LatticeExpr::Join { children }
        }
    }

    /// Meet of the children; a single child is returned as is. Panics on an
    /// empty list.
    pub fn meet(mut children: Vec<LatticeExpr>) -> Self {
        assert!(!children.is_empty(), "empty meet");
        if children.len() == 1 {
            children.pop().expect("one child")
        } else {
            LatticeExpr::Meet { children }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            LatticeExpr::Gen { .. } | LatticeExpr::Const { .. } => 1,
            LatticeExpr::Add { left, right } => 1 + left.size() + right.size(),
            LatticeExpr::Scale { child, .. } => 1 + child.size(),
            LatticeExpr::Join { children } | LatticeExpr::Meet { children } => {
                1 + children.iter().map(LatticeExpr::size).sum::<usize>()
            }
        }
    }

    /// Checks generator indices against `generators` and the arity of joins
    /// and meets.
    pub fn validate(&self, generators: usize) -> Result<()> {
        match self {
            LatticeExpr::Gen { index } if *index >= generators => {
                Err(RieszError::InvalidExpr(format!("generator index {index} out of range ({generators} generators)")))
            }
            LatticeExpr::Gen { .. } | LatticeExpr::Const { .. } => Ok(()),
            LatticeExpr::Add { left, right } => {
                left.validate(generators)?;
                right.validate(generators)
            }
            LatticeExpr::Scale { child, .. } => child.validate(generators),
            LatticeExpr::Join { children } | LatticeExpr::Meet { children } => {
                if children.len() < 2 {
                    return Err(RieszError::InvalidExpr("joins and meets need at least two children".into()));
                }
                children.iter().try_for_each(|c| c.validate(generators))
            }
        }
    }

    /// Generic bottom-up evaluation in any structure with the lattice-affine
    /// operations.
    fn fold<T>(&self, ops: &impl ExprAlgebra<T>) -> Result<T> {
        Ok(match self {
            LatticeExpr::Gen { index } => ops.gen(*index)?,
            LatticeExpr::Const { value } => ops.constant(value),
            LatticeExpr::Add { left, right } => ops.add(left.fold(ops)?, right.fold(ops)?),
            LatticeExpr::Scale { factor, child } => ops.scale(factor, child.fold(ops)?),
            LatticeExpr::Join { children } => {
                let mut it = children.iter();
                let first = it.next().ok_or_else(|| RieszError::InvalidExpr("empty join".into()))?;
                it.try_fold(first.fold(ops)?, |acc, c| Ok::<_, RieszError>(ops.join(acc, c.fold(ops)?)))?
            }
            LatticeExpr::Meet { children } => {
                let mut it = children.iter();
                let first = it.next().ok_or_else(|| RieszError::InvalidExpr("empty meet".into()))?;
                it.try_fold(first.fold(ops)?, |acc, c| Ok::<_, RieszError>(ops.meet(acc, c.fold(ops)?)))?
            }
        })
    }
}

trait ExprAlgebra<T> {
    fn gen(&self, index: usize) -> Result<T>;
    fn constant(&self, c: &Rational) -> T;
    fn add(&self, a: T, b: T) -> T;
    fn scale(&self, l: &Rational, a: T) -> T;
    fn join(&self, a: T, b: T) -> T;
    fn meet(&self, a: T, b: T) -> T;
}

struct AtPoint<'a> {
    gens: &'a GeneratorSet,
    point: usize,
}

impl ExprAlgebra<Rational> for AtPoint<'_> {
    fn gen(&self, index: usize) -> Result<Rational> {
        self.gens.value(index, self.point)
    }
    fn constant(&self, c: &Rational) -> Rational {
        c.clone()
    }
    fn add(&self, a: Rational, b: Rational) -> Rational {
        a + b
    }
    fn scale(&self, l: &Rational, a: Rational) -> Rational {
        l * &a
    }
    fn join(&self, a: Rational, b: Rational) -> Rational {
        a.max(b)
    }
    fn meet(&self, a: Rational, b: Rational) -> Rational {
        a.min(b)
    }
}

struct InPl<'a> {
    gens: &'a [PlFunction],
}

impl ExprAlgebra<PlFunction> for InPl<'_> {
    fn gen(&self, index: usize) -> Result<PlFunction> {
        self.gens
            .get(index)
            .cloned()
            .ok_or_else(|| RieszError::InvalidExpr(format!("no piecewise-linear realization for generator {index}")))
    }
    fn constant(&self, c: &Rational) -> PlFunction {
        PlFunction::constant(c.clone())
    }
    fn add(&self, a: PlFunction, b: PlFunction) -> PlFunction {
        a.add(&b)
    }
    fn scale(&self, l: &Rational, a: PlFunction) -> PlFunction {
        a.scale(l)
    }
    fn join(&self, a: PlFunction, b: PlFunction) -> PlFunction {
        a.join(&b)
    }
    fn meet(&self, a: PlFunction, b: PlFunction) -> PlFunction {
        a.meet(&b)
    }
}

/// A finite domain, optionally embedded in `[0, 1]` by rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    pub space: FiniteSpace,
    pub coords: Option<Vec<Rational>>,
}

impl Domain {
    pub fn discrete(space: FiniteSpace) -> Self {
        Domain { space, coords: None }
    }

    /// `points` equally spaced points `0, 1/(points-1), …, 1`, labelled by
    /// their coordinate. A single point sits at `0`.
    pub fn uniform_grid(points: usize) -> Result<Self> {
        if points == 0 {
            return Err(RieszError::InvalidSpace("a grid needs at least one point".into()));
        }
        let steps = (points.max(2) - 1) as i64;
        let coords: Vec<Rational> = (0..points as i64).map(|k| Rational::new(k, steps)).collect();
        let space = FiniteSpace::new(coords.iter().map(ToString::to_string))?;
        Ok(Domain { space, coords: Some(coords) })
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    fn coords_or_err(&self) -> Result<&[Rational]> {
        self.coords.as_deref().ok_or_else(|| RieszError::InvalidGenerators("domain has no coordinates".into()))
    }
}

/// Target values on a domain, index-aligned with its points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledTarget {
    pub domain: Domain,
    pub values: Vec<Rational>,
}

impl SampledTarget {
    pub fn new(domain: Domain, values: Vec<Rational>) -> Result<Self> {
        if values.len() != domain.len() {
            return Err(RieszError::Precondition(format!(
                "{} target values for {} points",
                values.len(),
                domain.len()
            )));
        }
        Ok(SampledTarget { domain, values })
    }

    /// Samples a function of the coordinate.
    pub fn from_fn(domain: Domain, f: impl Fn(&Rational) -> Rational) -> Result<Self> {
        let values = domain.coords_or_err()?.iter().map(f).collect();
        SampledTarget::new(domain, values)
    }

    pub fn from_pl(domain: Domain, h: &PlFunction) -> Result<Self> {
        let values = domain.coords_or_err()?.iter().map(|t| h.eval(t)).collect::<Result<_>>()?;
        SampledTarget::new(domain, values)
    }

    /// Values by label, as in `{"p": "1/2", …}`.
    pub fn from_labels(domain: Domain, values: &BTreeMap<String, Rational>) -> Result<Self> {
        let vals = domain
            .space
            .points()
            .iter()
            .map(|p| values.get(p).cloned().ok_or_else(|| RieszError::UnknownPoint(p.clone())))
            .collect::<Result<_>>()?;
        SampledTarget::new(domain, vals)
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorSetJson {
    names: Vec<String>,
    values: BTreeMap<String, Vec<Rational>>,
}

/// Named generator functions on a domain. Always contains the constant one and
/// separates points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    domain: Domain,
    names: Vec<String>,
    /// `values[point][generator]`.
    values: Vec<Vec<Rational>>,
    one: usize,
}

impl GeneratorSet {
    pub fn new(domain: Domain, names: Vec<String>, values: Vec<Vec<Rational>>) -> Result<Self> {
        let k = names.len();
        if values.len() != domain.len() || values.iter().any(|row| row.len() != k) {
            return Err(RieszError::InvalidGenerators(format!("expected {} rows of {k} values", domain.len())));
        }
        let one = (0..k)
            .find(|&g| values.iter().all(|row| row[g] == Rational::one()))
            .ok_or_else(|| RieszError::InvalidGenerators("the constant-one function is missing".into()))?;
        for x in 0..domain.len() {
            for y in x + 1..domain.len() {
                if values[x] == values[y] {
                    let p = domain.space.points();
                    return Err(RieszError::InvalidGenerators(format!(
                        "no generator separates `{}` and `{}`",
                        p[x], p[y]
                    )));
                }
            }
        }
        Ok(GeneratorSet { domain, names, values, one })
    }

    /// `{𝟙, id}` on a domain with coordinates.
    pub fn unital_affine(domain: Domain) -> Result<Self> {
        let values = domain.coords_or_err()?.iter().map(|t| vec![Rational::one(), t.clone()]).collect();
        GeneratorSet::new(domain, vec!["one".into(), "id".into()], values)
    }

    /// Parses `{"names": [...], "values": {point: ["p/q", ...]}}`.
    pub fn from_json(domain: Domain, json: &str) -> Result<Self> {
        let raw: GeneratorSetJson =
            serde_json::from_str(json).map_err(|e| RieszError::InvalidGenerators(e.to_string()))?;
        if let Some(extra) = raw.values.keys().find(|k| domain.space.index_of(k).is_err()) {
            return Err(RieszError::UnknownPoint(extra.clone()));
        }
        let values = domain
            .space
            .points()
            .iter()
            .map(|p| raw.values.get(p).cloned().ok_or_else(|| RieszError::UnknownPoint(p.clone())))
            .collect::<Result<_>>()?;
        GeneratorSet::new(domain, raw.names, values)
    }

    pub fn to_json(&self) -> String {
        let values = self.domain.space.points().iter().cloned().zip(self.values.iter().cloned()).collect();
        serde_json::to_string(&GeneratorSetJson { names: self.names.clone(), values })
            .expect("generator sets serialize")
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Index of the constant-one generator.
    pub fn one_index(&self) -> usize {
        self.one
    }

    pub fn value(&self, generator: usize, point: usize) -> Result<Rational> {
        let row = self.values.get(point).ok_or_else(|| RieszError::UnknownPoint(format!("#{point}")))?;
        row.get(generator)
            .cloned()
            .ok_or_else(|| RieszError::InvalidExpr(format!("generator index {generator} out of range")))
    }
}

/// Exact value of `expr` at the point with index `point`.
pub fn eval_expr(expr: &LatticeExpr, gens: &GeneratorSet, point: usize) -> Result<Rational> {
    if point >= gens.domain.len() {
        return Err(RieszError::UnknownPoint(format!("#{point}")));
    }
    expr.fold(&AtPoint { gens, point })
}

pub fn eval_expr_at(expr: &LatticeExpr, gens: &GeneratorSet, label: &str) -> Result<Rational> {
    eval_expr(expr, gens, gens.domain.space.index_of(label)?)
}

/// Values of `expr` at every domain point, in order.
pub fn eval_all(expr: &LatticeExpr, gens: &GeneratorSet) -> Result<Vec<Rational>> {
    expr.validate(gens.len())?;
    (0..gens.domain.len()).map(|p| eval_expr(expr, gens, p)).collect()
}

/// `max_x |g(x) − expr(x)|` over the domain.
pub fn expr_error(expr: &LatticeExpr, gens: &GeneratorSet, target: &SampledTarget) -> Result<Rational> {
    if target.values.len() != gens.domain.len() {
        return Err(RieszError::Precondition("target and generators live on different domains".into()));
    }
    Ok(eval_all(expr, gens)?
        .iter()
        .zip(&target.values)
        .map(|(a, g)| (g - a).abs())
        .fold(Rational::zero(), Rational::max))
}

/// Evaluates `expr` in the piecewise-linear space, generator `i` realized by
/// `generators[i]`.
pub fn expr_to_pl(expr: &LatticeExpr, generators: &[PlFunction]) -> Result<PlFunction> {
    expr.fold(&InPl { gens: generators })
}

/// `f_y = g_z/(f(z) − f(y)) · (f − f(y)𝟙)` for the first generator `f`
/// separating `y` and `z`. A zero `g_z` gives `Const(0)` and a unit factor is
/// left out.
pub fn separator(y: usize, z: usize, g_z: &Rational, gens: &GeneratorSet) -> Result<LatticeExpr> {
    if y == z {
        return Err(RieszError::Precondition("separator needs y != z".into()));
    }
    let (f, fy, fz) = (0..gens.len())
        .map(|g| Ok((g, gens.value(g, y)?, gens.value(g, z)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .find(|(_, a, b)| a != b)
        .ok_or_else(|| RieszError::InvalidGenerators(format!("no generator separates points #{y} and #{z}")))?;
    if g_z.is_zero() {
        return Ok(LatticeExpr::constant(Rational::zero()));
    }
    let factor = g_z / &(&fz - &fy);
    let shifted = if fy.is_zero() {
        LatticeExpr::gen(f)
    } else {
        LatticeExpr::plus(LatticeExpr::gen(f), LatticeExpr::scale(-fy, LatticeExpr::gen(gens.one)))
    };
    Ok(if factor == Rational::one() { shifted } else { LatticeExpr::scale(factor, shifted) })
}

/// How finite covers are extracted from the families `U_{f_y}` and `V_{f'_z}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CoverStrategy {
    /// Keep every member; the whole family is already a finite cover.
    #[default]
    All,
    /// Repeatedly take the first member covering the most uncovered points.
    Greedy,
}

/// Indices of a cover of `0..n` by `sets` (each a membership vector).
fn pick_cover(sets: &[Vec<bool>], strategy: CoverStrategy) -> Option<Vec<usize>> {
    let n = sets.first().map_or(0, Vec::len);
    let mut covered = vec![false; n];
    for s in sets {
        for (c, &m) in covered.iter_mut().zip(s) {
            *c |= m;
        }
    }
    if covered.iter().any(|c| !c) {
        return None;
    }
    match strategy {
        CoverStrategy::All => Some((0..sets.len()).collect()),
        CoverStrategy::Greedy => {
            let mut covered = vec![false; n];
            let mut picked = Vec::new();
            while covered.iter().any(|c| !c) {
                let gain = |s: &Vec<bool>| s.iter().zip(&covered).filter(|(&m, &c)| m && !c).count();
                let (best, _) =
                    sets.iter()
                        .enumerate()
                        .fold((0, 0), |(bi, bg), (i, s)| if gain(s) > bg { (i, gain(s)) } else { (bi, bg) });
                for (c, &m) in covered.iter_mut().zip(&sets[best]) {
                    *c |= m;
                }
                picked.push(best);
            }
            Some(picked)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SwOptions {
    pub cover: CoverStrategy,
}

/// The intermediate `f'_z` of one part, with its verified facts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalApprox {
    pub z: usize,
    /// Indices `y` whose separators enter the meet.
    pub ys: Vec<usize>,
    pub values: Vec<Rational>,
}

/// Construction trace for one nonnegative part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartTrace {
    /// The part's values (`g⁺` or `g⁻`).
    pub target: Vec<Rational>,
    /// Budget `δ` of this part; the sandwich is checked at `δ/2`.
    pub budget: Rational,
    pub locals: Vec<LocalApprox>,
    /// Indices `z` whose `f'_z` enter the final join.
    pub zs: Vec<usize>,
    pub values: Vec<Rational>,
}

impl PartTrace {
    /// Re-checks `f'_z(z) = h(z)`, `f'_z <= h + δ/2` and
    /// `h − δ/2 <= h₀ <= h + δ/2`.
    pub fn verify(&self) -> Result<()> {
        let half = &self.budget / &Rational::from_integer(2);
        for local in &self.locals {
            if local.values[local.z] != self.target[local.z] {
                return Err(RieszError::Verification(format!("f'_z(z) != g(z) at z = #{}", local.z)));
            }
            for (x, (v, h)) in local.values.iter().zip(&self.target).enumerate() {
                if *v > h + &half {
                    return Err(RieszError::Verification(format!("f'_z exceeds g + δ/2 at #{x} (z = #{})", local.z)));
                }
            }
        }
        for (x, (v, h)) in self.values.iter().zip(&self.target).enumerate() {
            if *v > h + &half || *v < h - &half {
                return Err(RieszError::Verification(format!("g₀ leaves g ± δ/2 at #{x}")));
            }
        }
        Ok(())
    }
}

/// Result of [`sw_approximate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation {
    pub expr: LatticeExpr,
    /// `None` when that part vanishes identically (or the domain is a point).
    pub positive: Option<PartTrace>,
    pub negative: Option<PartTrace>,
    pub eps: Rational,
}

fn approximate_part(
    target: &[Rational],
    gens: &GeneratorSet,
    budget: &Rational,
    strategy: CoverStrategy,
) -> Result<(LatticeExpr, PartTrace)> {
    let n = target.len();
    let half = budget / &Rational::from_integer(2);
    let mut locals = Vec::with_capacity(n);
    let mut local_exprs = Vec::with_capacity(n);
    for z in 0..n {
        let ys: Vec<usize> = (0..n).filter(|&y| y != z).collect();
        let mut seps = Vec::with_capacity(ys.len());
        let mut vals = Vec::with_capacity(ys.len());
        let mut members = Vec::with_capacity(ys.len());
        for &y in &ys {
            let e = separator(y, z, &target[z], gens)?;
            let v = eval_all(&e, gens)?;
            members.push(v.iter().zip(target).map(|(a, h)| *a < h + &half).collect::<Vec<bool>>());
            seps.push(e);
            vals.push(v);
        }
        let picked = pick_cover(&members, strategy)
            .ok_or_else(|| RieszError::Verification(format!("sets U_(f_y) do not cover the domain (z = #{z})")))?;
        let values = (0..n)
            .map(|x| picked.iter().map(|&k| vals[k][x].clone()).reduce(Rational::min).expect("non-empty"))
            .collect();
        local_exprs.push(LatticeExpr::meet(picked.iter().map(|&k| seps[k].clone()).collect()));
        locals.push(LocalApprox { z, ys: picked.iter().map(|&k| ys[k]).collect(), values });
    }
    let members: Vec<Vec<bool>> =
        locals.iter().map(|l| l.values.iter().zip(target).map(|(v, h)| &(h - &half) < v).collect()).collect();
    let zs = pick_cover(&members, strategy)
        .ok_or_else(|| RieszError::Verification("sets V_(f'_z) do not cover the domain".into()))?;
    let values = (0..n)
        .map(|x| zs.iter().map(|&z| locals[z].values[x].clone()).reduce(Rational::max).expect("non-empty"))
        .collect();
    let expr = LatticeExpr::join(zs.iter().map(|&z| local_exprs[z].clone()).collect());
    let trace = PartTrace { target: target.to_vec(), budget: budget.clone(), locals, zs, values };
    trace.verify()?;
    Ok((expr, trace))
}

/// Builds a lattice expression within `eps` of `target` at every domain point.
pub fn sw_approximate(target: &SampledTarget, gens: &GeneratorSet, eps: &Rational) -> Result<Approximation> {
    sw_approximate_with(target, gens, eps, &SwOptions::default())
}

pub fn sw_approximate_with(
    target: &SampledTarget,
    gens: &GeneratorSet,
    eps: &Rational,
    options: &SwOptions,
) -> Result<Approximation> {
    if !eps.is_positive() {
        return Err(RieszError::Precondition(format!("ε = {eps} must be positive")));
    }
    if target.domain != gens.domain {
        return Err(RieszError::Precondition("target and generators live on different domains".into()));
    }
    if target.values.len() == 1 {
        return Ok(Approximation {
            expr: LatticeExpr::constant(target.values[0].clone()),
            positive: None,
            negative: None,
            eps: eps.clone(),
        });
    }
    let budget = eps / &Rational::from_integer(2);
    let pos: Vec<Rational> = target.values.iter().map(|v| v.clone().max(Rational::zero())).collect();
    let neg: Vec<Rational> = target.values.iter().map(|v| (-v).max(Rational::zero())).collect();
    let run = |part: &[Rational]| -> Result<Option<(LatticeExpr, PartTrace)>> {
        if part.iter().all(Rational::is_zero) {
            Ok(None)
        } else {
            approximate_part(part, gens, &budget, options.cover).map(Some)
        }
    };
    let (p, n) = (run(&pos)?, run(&neg)?);
    let expr = match (&p, &n) {
        (Some((pe, _)), Some((ne, _))) => {
            LatticeExpr::plus(pe.clone(), LatticeExpr::scale(Rational::from_integer(-1), ne.clone()))
        }
        (Some((pe, _)), None) => pe.clone(),
        (None, Some((ne, _))) => LatticeExpr::scale(Rational::from_integer(-1), ne.clone()),
        (None, None) => LatticeExpr::constant(Rational::zero()),
    };
    let error = expr_error(&expr, gens, target)?;
    if error > *eps {
        return Err(RieszError::Verification(format!("final error {error} exceeds ε = {eps}")));
    }
    Ok(Approximation { expr, positive: p.map(|(_, t)| t), negative: n.map(|(_, t)| t), eps: eps.clone() })
}

/// Continuum variant for a piecewise-linear target on `[0, 1]`.
///
/// The candidates `y` and `z` are still the grid points of `gens`, but the
/// sets `U_{f_y}` and `V_{f'_z}` are taken in `[0, 1]` and their covers are
/// decided exactly on piecewise-linear realizations of the generators. Each
/// `f'_z` is reduced to a minimal cover (steepest separators, i.e. nearest
/// `y`, are dropped first), which makes it as large as the cover allows; `h₀`
/// joins every `f'_z`. When the grid is too coarse for the `V` sets to cover
/// `[0, 1]` this fails with a precondition error instead of returning a
/// grid-only answer.
pub fn sw_approximate_pl(
    target: &PlFunction,
    gens: &GeneratorSet,
    realizations: &[PlFunction],
    eps: &Rational,
) -> Result<Approximation> {
    if !eps.is_positive() {
        return Err(RieszError::Precondition(format!("ε = {eps} must be positive")));
    }
    let coords = gens.domain.coords_or_err()?.to_vec();
    if realizations.len() != gens.len() {
        return Err(RieszError::InvalidGenerators(format!(
            "{} realizations for {} generators",
            realizations.len(),
            gens.len()
        )));
    }
    for (g, f) in realizations.iter().enumerate() {
        for (p, t) in coords.iter().enumerate() {
            if f.eval(t)? != gens.value(g, p)? {
                return Err(RieszError::InvalidGenerators(format!(
                    "realization of `{}` disagrees with its samples at {t}",
                    gens.names[g]
                )));
            }
        }
    }
    let zero = PlFunction::constant(Rational::zero());
    let budget = eps / &Rational::from_integer(2);
    let run = |part: PlFunction| -> Result<Option<(LatticeExpr, PartTrace)>> {
        if part.max_value().is_zero() {
            return Ok(None);
        }
        approximate_part_pl(&part, &coords, gens, realizations, &budget).map(Some)
    };
    let p = run(target.join(&zero))?;
    let n = run(target.negate().join(&zero))?;
    let expr = match (&p, &n) {
        (Some((pe, _)), Some((ne, _))) => {
            LatticeExpr::plus(pe.clone(), LatticeExpr::scale(Rational::from_integer(-1), ne.clone()))
        }
        (Some((pe, _)), None) => pe.clone(),
        (None, Some((ne, _))) => LatticeExpr::scale(Rational::from_integer(-1), ne.clone()),
        (None, None) => LatticeExpr::constant(Rational::zero()),
    };
    let sup = expr_to_pl(&expr, realizations)?.sub(target).unit_norm(&PlFunction::constant(Rational::one()))?;
    if sup > *eps {
        return Err(RieszError::Verification(format!("sup error {sup} on [0, 1] exceeds ε = {eps}")));
    }
    Ok(Approximation { expr, positive: p.map(|(_, t)| t), negative: n.map(|(_, t)| t), eps: eps.clone() })
}

fn meet_all(fs: &[&PlFunction]) -> PlFunction {
    fs.iter().skip(1).fold(fs[0].clone(), |acc, f| acc.meet(f))
}

fn approximate_part_pl(
    part: &PlFunction,
    coords: &[Rational],
    gens: &GeneratorSet,
    realizations: &[PlFunction],
    budget: &Rational,
) -> Result<(LatticeExpr, PartTrace)> {
    let n = coords.len();
    let half = budget / &Rational::from_integer(2);
    let samples: Vec<Rational> = coords.iter().map(|t| part.eval(t)).collect::<Result<_>>()?;
    let upper = part.add(&PlFunction::constant(half.clone()));
    let lower = part.sub(&PlFunction::constant(half.clone()));
    // `f < upper` on all of [0, 1].
    let below_upper = |f: &PlFunction| upper.sub(f).min_value().is_positive();
    let mut locals = Vec::with_capacity(n);
    let mut local_exprs = Vec::with_capacity(n);
    let mut local_pl = Vec::with_capacity(n);
    for z in 0..n {
        let ys: Vec<usize> = (0..n).filter(|&y| y != z).collect();
        let seps: Vec<LatticeExpr> = ys.iter().map(|&y| separator(y, z, &samples[z], gens)).collect::<Result<_>>()?;
        let pls: Vec<PlFunction> = seps.iter().map(|e| expr_to_pl(e, realizations)).collect::<Result<_>>()?;
        let mut keep = vec![true; ys.len()];
        let kept =
            |keep: &[bool]| -> Vec<&PlFunction> { pls.iter().zip(keep).filter(|(_, &k)| k).map(|(f, _)| f).collect() };
        if !below_upper(&meet_all(&kept(&keep))) {
            return Err(RieszError::Precondition(format!(
                "the sets U_(f_y) do not cover [0, 1] for z = {}; refine the grid",
                coords[z]
            )));
        }
        let mut order: Vec<usize> = (0..ys.len()).collect();
        order.sort_by_key(|&k| ((&coords[ys[k]] - &coords[z]).abs(), k));
        for k in order {
            keep[k] = false;
            let rest = kept(&keep);
            if rest.is_empty() || !below_upper(&meet_all(&rest)) {
                keep[k] = true;
            }
        }
        let f = meet_all(&kept(&keep));
        let values: Vec<Rational> = coords.iter().map(|t| f.eval(t)).collect::<Result<_>>()?;
        let picked: Vec<usize> = (0..ys.len()).filter(|&k| keep[k]).collect();
        local_exprs.push(LatticeExpr::meet(picked.iter().map(|&k| seps[k].clone()).collect()));
        locals.push(LocalApprox { z, ys: picked.iter().map(|&k| ys[k]).collect(), values });
        local_pl.push(f);
    }
    let joined = local_pl.iter().skip(1).fold(local_pl[0].clone(), |acc, f| acc.join(f));
    if !joined.sub(&lower).min_value().is_positive() {
        return Err(RieszError::Precondition(format!(
            "the sets V_(f'_z) do not cover [0, 1] with {n} grid points at budget {budget}; refine the grid"
        )));
    }
    let values: Vec<Rational> = coords.iter().map(|t| joined.eval(t)).collect::<Result<_>>()?;
    let expr = LatticeExpr::join(local_exprs);
    let trace = PartTrace { target: samples, budget: budget.clone(), locals, zs: (0..n).collect(), values };
    trace.verify()?;
    Ok((expr, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, z};

    fn grid3() -> GeneratorSet {
        GeneratorSet::unital_affine(Domain::uniform_grid(3).unwrap()).unwrap()
    }

    #[test]
    fn eval_examples() {
        let g = GeneratorSet::unital_affine(Domain::uniform_grid(5).unwrap()).unwrap();
        assert_eq!(eval_expr(&LatticeExpr::constant(z(3)), &g, 2).unwrap(), z(3));
        let e = LatticeExpr::join(vec![
            LatticeExpr::gen(1),
            LatticeExpr::plus(LatticeExpr::scale(z(-1), LatticeExpr::gen(1)), LatticeExpr::constant(z(1))),
        ]);
        assert_eq!(eval_expr_at(&e, &g, "1/4").unwrap(), q(3, 4));
        let m = LatticeExpr::meet(vec![e.clone(), e.clone()]);
        assert_eq!(eval_all(&m, &g).unwrap(), eval_all(&e, &g).unwrap());
        assert!(eval_expr(&LatticeExpr::gen(7), &g, 0).is_err());
        assert!(eval_expr(&e, &g, 99).is_err());
        assert!(eval_expr_at(&e, &g, "2/3").is_err());
    }

    #[test]
    fn separator_examples() {
        let g = grid3();
        let e = separator(0, 2, &z(5), &g).unwrap();
        assert_eq!(e, LatticeExpr::scale(z(5), LatticeExpr::gen(1)));
        assert_eq!(eval_all(&e, &g).unwrap(), vec![z(0), q(5, 2), z(5)]);
        let e = separator(2, 0, &z(2), &g).unwrap();
        assert_eq!(eval_all(&e, &g).unwrap(), vec![z(2), z(1), z(0)]);
        for (y, zz) in [(0, 1), (1, 2), (2, 1)] {
            let e = separator(y, zz, &q(7, 3), &g).unwrap();
            assert_eq!(eval_expr(&e, &g, y).unwrap(), z(0));
            assert_eq!(eval_expr(&e, &g, zz).unwrap(), q(7, 3));
        }
        assert!(separator(1, 1, &z(1), &g).is_err());
    }

    #[test]
    fn generator_set_validation() {
        let d = Domain::uniform_grid(3).unwrap();
        let no_one = GeneratorSet::new(d.clone(), vec!["id".into()], vec![vec![z(0)], vec![q(1, 2)], vec![z(1)]]);
        assert!(no_one.is_err());
        let no_sep = GeneratorSet::new(d.clone(), vec!["one".into()], vec![vec![z(1)]; 3]);
        assert!(matches!(no_sep, Err(RieszError::InvalidGenerators(m)) if m.contains("separates")));
        let g = GeneratorSet::unital_affine(d.clone()).unwrap();
        let back = GeneratorSet::from_json(d, &g.to_json()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn square_on_grid() {
        let d = Domain::uniform_grid(11).unwrap();
        let g = GeneratorSet::unital_affine(d.clone()).unwrap();
        let target = SampledTarget::from_fn(d, |t| t * t).unwrap();
        let a = sw_approximate(&target, &g, &q(1, 10)).unwrap();
        assert!(expr_error(&a.expr, &g, &target).unwrap() <= q(1, 10));
        a.positive.as_ref().unwrap().verify().unwrap();
        assert!(a.negative.is_none());
    }

    #[test]
    fn affine_and_constant_targets_are_exact() {
        let d = Domain::uniform_grid(6).unwrap();
        let g = GeneratorSet::unital_affine(d.clone()).unwrap();
        let affine = SampledTarget::from_fn(d.clone(), |t| &(t * &z(3)) - &q(1, 2)).unwrap();
        let a = sw_approximate(&affine, &g, &q(1, 3)).unwrap();
        assert_eq!(expr_error(&a.expr, &g, &affine).unwrap(), z(0));
        let c = SampledTarget::from_fn(d, |_| q(7, 2)).unwrap();
        let a = sw_approximate(&c, &g, &q(1, 100)).unwrap();
        assert_eq!(expr_error(&a.expr, &g, &c).unwrap(), z(0));
    }

    #[test]
    fn single_point_domain() {
        let d = Domain::uniform_grid(1).unwrap();
        let g = GeneratorSet::unital_affine(d.clone()).unwrap();
        let t = SampledTarget::new(d, vec![q(-4, 3)]).unwrap();
        let a = sw_approximate(&t, &g, &z(1)).unwrap();
        assert_eq!(a.expr, LatticeExpr::constant(q(-4, 3)));
    }

    #[test]
    fn rejects_bad_eps() {
        let d = Domain::uniform_grid(3).unwrap();
        let g = GeneratorSet::unital_affine(d.clone()).unwrap();
        let t = SampledTarget::from_fn(d, |t| t.clone()).unwrap();
        assert!(sw_approximate(&t, &g, &z(0)).is_err());
    }

    #[test]
    fn greedy_cover_is_smaller_and_within_eps() {
        let d = Domain::uniform_grid(11).unwrap();
        let g = GeneratorSet::unital_affine(d.clone()).unwrap();
        let target = SampledTarget::from_fn(d, |t| &(t * t) - &q(1, 3)).unwrap();
        let eps = q(1, 5);
        let all = sw_approximate(&target, &g, &eps).unwrap();
        let greedy = sw_approximate_with(&target, &g, &eps, &SwOptions { cover: CoverStrategy::Greedy }).unwrap();
        assert!(greedy.expr.size() < all.expr.size());
        assert!(expr_error(&greedy.expr, &g, &target).unwrap() <= eps);
        greedy.positive.unwrap().verify().unwrap();
        greedy.negative.unwrap().verify().unwrap();
    }

    #[test]
    fn pl_bridge() {
        let gens = [PlFunction::constant(z(1)), PlFunction::identity()];
        let e = LatticeExpr::join(vec![LatticeExpr::gen(1), LatticeExpr::constant(q(1, 2))]);
        let f = expr_to_pl(&e, &gens).unwrap();
        assert_eq!(f.breakpoints(), &[z(0), q(1, 2), z(1)]);
        assert_eq!(f.values(), &[q(1, 2), q(1, 2), z(1)]);
        assert_eq!(expr_to_pl(&LatticeExpr::gen(0), &gens).unwrap(), PlFunction::constant(z(1)));
        assert!(expr_to_pl(&LatticeExpr::gen(2), &gens).is_err());
    }

    #[test]
    fn expr_json() {
        let e = LatticeExpr::join(vec![
            LatticeExpr::gen(1),
            LatticeExpr::scale(q(-1, 2), LatticeExpr::plus(LatticeExpr::gen(0), LatticeExpr::constant(z(3)))),
        ]);
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(
            s,
            r#"{"op":"join","children":[{"op":"gen","index":1},{"op":"scale","factor":"-1/2","child":{"op":"add","left":{"op":"gen","index":0},"right":{"op":"const","value":"3"}}}]}"#
        );
        assert_eq!(serde_json::from_str::<LatticeExpr>(&s).unwrap(), e);
        let bad: LatticeExpr = serde_json::from_str(r#"{"op":"meet","children":[{"op":"gen","index":0}]}"#).unwrap();
        assert!(bad.validate(2).is_err());
    }

    fn affine_pl() -> [PlFunction; 2] {
        [PlFunction::constant(z(1)), PlFunction::identity()]
    }

    #[test]
    fn continuum_cover_for_grid_aligned_target() {
        let d = Domain::uniform_grid(11).unwrap();
        let g = GeneratorSet::unital_affine(d).unwrap();
        // Zero crossings at 3/5 and 4/5 are grid points.
        let h = PlFunction::new(vec![z(0), q(3, 10), q(7, 10), z(1)], vec![z(0), z(1), q(-1, 3), q(2, 3)]).unwrap();
        let eps = q(1, 10);
        let a = sw_approximate_pl(&h, &g, &affine_pl(), &eps).unwrap();
        let f = expr_to_pl(&a.expr, &affine_pl()).unwrap();
        assert!(f.sub(&h).unit_norm(&PlFunction::constant(z(1))).unwrap() <= eps);
        for k in 0..=10 {
            let t = q(k, 10);
            assert_eq!(f.eval(&t).unwrap(), eval_expr(&a.expr, &g, k as usize).unwrap());
        }
    }

    #[test]
    fn continuum_cover_rejects_coarse_grid() {
        let d = Domain::uniform_grid(3).unwrap();
        let g = GeneratorSet::unital_affine(d).unwrap();
        let h = PlFunction::new(vec![z(0), q(1, 2), z(1)], vec![z(1), z(2), z(1)]).unwrap();
        let r = sw_approximate_pl(&h, &g, &affine_pl(), &q(1, 100));
        assert!(matches!(r, Err(RieszError::Precondition(_))), "{r:?}");
        // The grid-only construction still succeeds on the samples.
        let samples = SampledTarget::from_pl(g.domain().clone(), &h).unwrap();
        assert!(sw_approximate(&samples, &g, &q(1, 100)).is_ok());
    }
}
