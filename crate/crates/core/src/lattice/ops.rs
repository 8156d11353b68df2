//! Checked entry points for the derived order-theoretic operations.

use crate::error::{Result, RieszError};
use crate::lattice::space::{Infinitesimal, RieszSpace};
use crate::rational::Rational;

fn member<S: RieszSpace>(space: &S, x: &S::Elem) -> Result<()> {
    space.check_member(x)
}

/// `x <= y`, decided as `x ∧ y == x`.
pub fn leq<S: RieszSpace>(space: &S, x: &S::Elem, y: &S::Elem) -> Result<bool> {
    member(space, x)?;
    member(space, y)?;
    Ok(space.leq(x, y))
}

pub fn abs<S: RieszSpace>(space: &S, x: &S::Elem) -> Result<S::Elem> {
    member(space, x)?;
    Ok(space.abs(x))
}

/// `(x⁺, x⁻)`.
pub fn parts<S: RieszSpace>(space: &S, x: &S::Elem) -> Result<(S::Elem, S::Elem)> {
    member(space, x)?;
    Ok((space.pos_part(x), space.neg_part(x)))
}

pub fn is_orthogonal<S: RieszSpace>(space: &S, x: &S::Elem, y: &S::Elem) -> Result<bool> {
    member(space, x)?;
    member(space, y)?;
    Ok(space.is_orthogonal(x, y))
}

/// Splits `0 <= x <= a + b` as `x = a' + b'` with `a' = x ∧ a`, `b' = x - a'`,
/// so that `0 <= a' <= a` and `0 <= b' <= b`.
pub fn riesz_decompose<S: RieszSpace>(space: &S, x: &S::Elem, a: &S::Elem, b: &S::Elem) -> Result<(S::Elem, S::Elem)> {
    for e in [x, a, b] {
        member(space, e)?;
    }
    let zero = space.zero();
    for (name, e) in [("x", x), ("a", a), ("b", b)] {
        if !space.leq(&zero, e) {
            return Err(RieszError::Precondition(format!("0 <= {name} fails for {name} = {e:?}")));
        }
    }
    let sum = space.add(a, b);
    if !space.leq(x, &sum) {
        return Err(RieszError::Precondition(format!("x <= a + b fails: x = {x:?}, a + b = {sum:?}")));
    }
    let a_prime = space.meet(x, a);
    let b_prime = space.sub(x, &a_prime);
    Ok((a_prime, b_prime))
}

pub fn is_unit<S: RieszSpace>(space: &S, u: &S::Elem) -> Result<bool> {
    member(space, u)?;
    Ok(space.is_unit(u))
}

/// The unit seminorm `‖x‖_u = inf { λ >= 0 : |x| <= λu }`.
pub fn unit_norm<S: RieszSpace>(space: &S, x: &S::Elem, u: &S::Elem) -> Result<Rational> {
    member(space, x)?;
    member(space, u)?;
    if !space.is_unit(u) {
        return Err(RieszError::NotAUnit(format!("{u:?}")));
    }
    Ok(space.unit_norm_formula(x, u))
}

/// Certified non-zero infinitesimal, if the space has one.
///
/// Infinitesimals quantify over all integers `n` (`n·ε <= b`), whereas units
/// quantify over natural numbers (`|x| < n·u`); each definition is applied as
/// stated.
pub fn find_infinitesimal<S: RieszSpace>(space: &S) -> Option<Infinitesimal<S::Elem>> {
    space.infinitesimal()
}

/// Spot-checks one instance `n·ε <= b` of an infinitesimal certificate.
pub fn infinitesimal_holds_at<S: RieszSpace>(space: &S, witness: &Infinitesimal<S::Elem>, n: i64) -> bool {
    let scaled = space.scale(&Rational::from_integer(n), &witness.epsilon);
    space.leq(&scaled, &witness.bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, z};
    use crate::spaces::{FinDim, FinVec, Lex, LexPlane, PlFunction, PlSpace};

    fn v(xs: &[i64]) -> FinVec {
        FinVec::from_ints(xs)
    }

    #[test]
    fn leq_examples() {
        let r2 = FinDim::new(2).unwrap();
        assert!(leq(&r2, &v(&[1, 2]), &v(&[2, 2])).unwrap());
        assert!(!leq(&r2, &v(&[1, 0]), &v(&[0, 1])).unwrap());
        assert!(leq(&LexPlane, &Lex::ints(0, 5), &Lex::ints(1, 0)).unwrap());
        let x = v(&[3, -1]);
        assert!(leq(&r2, &x, &x).unwrap());
    }

    #[test]
    fn leq_rejects_mismatch() {
        let r2 = FinDim::new(2).unwrap();
        let err = leq(&r2, &v(&[1, 2, 3]), &v(&[1, 2])).unwrap_err();
        assert!(matches!(err, RieszError::SpaceMismatch { .. }));
    }

    #[test]
    fn abs_and_parts() {
        let r2 = FinDim::new(2).unwrap();
        assert_eq!(abs(&r2, &v(&[3, -4])).unwrap(), v(&[3, 4]));
        assert_eq!(abs(&LexPlane, &Lex::ints(-1, 7)).unwrap(), Lex::ints(1, -7));
        assert_eq!(abs(&r2, &v(&[0, 0])).unwrap(), v(&[0, 0]));

        assert_eq!(parts(&r2, &v(&[3, -4])).unwrap(), (v(&[3, 0]), v(&[0, 4])));
        assert_eq!(parts(&r2, &v(&[2, 5])).unwrap(), (v(&[2, 5]), v(&[0, 0])));
        assert_eq!(parts(&LexPlane, &Lex::ints(-1, 7)).unwrap(), (Lex::ints(0, 0), Lex::ints(1, -7)));
    }

    #[test]
    fn orthogonality() {
        let r2 = FinDim::new(2).unwrap();
        assert!(is_orthogonal(&r2, &v(&[1, 0]), &v(&[0, 5])).unwrap());
        assert!(!is_orthogonal(&r2, &v(&[1, 1]), &v(&[0, 1])).unwrap());
        let x = v(&[-3, 8]);
        let (p, n) = parts(&r2, &x).unwrap();
        assert!(is_orthogonal(&r2, &p, &n).unwrap());
    }

    #[test]
    fn decomposition_examples() {
        let r2 = FinDim::new(2).unwrap();
        let (a1, b1) = riesz_decompose(&r2, &v(&[1, 2]), &v(&[2, 0]), &v(&[0, 3])).unwrap();
        assert_eq!((a1, b1), (v(&[1, 0]), v(&[0, 2])));

        let a = v(&[4, 1]);
        let (a1, b1) = riesz_decompose(&r2, &a, &a, &v(&[7, 7])).unwrap();
        assert_eq!((a1, b1), (a.clone(), v(&[0, 0])));

        let (a1, b1) = riesz_decompose(&r2, &v(&[0, 0]), &a, &v(&[1, 1])).unwrap();
        assert_eq!((a1, b1), (v(&[0, 0]), v(&[0, 0])));
    }

    #[test]
    fn decomposition_reports_failing_inequality() {
        let r2 = FinDim::new(2).unwrap();
        let err = riesz_decompose(&r2, &v(&[5, 0]), &v(&[1, 0]), &v(&[1, 0])).unwrap_err();
        match err {
            RieszError::Precondition(msg) => assert!(msg.contains("x <= a + b"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        let err = riesz_decompose(&r2, &v(&[-1, 0]), &v(&[1, 0]), &v(&[1, 0])).unwrap_err();
        assert!(err.to_string().contains("0 <= x"));
    }

    #[test]
    fn norm_examples() {
        let r3 = FinDim::new(3).unwrap();
        let x = FinVec::new(vec![z(1), z(-2), q(1, 2)]);
        assert_eq!(unit_norm(&r3, &x, &v(&[1, 1, 1])).unwrap(), z(2));
        assert_eq!(unit_norm(&r3, &v(&[0, 0, 0]), &v(&[1, 1, 1])).unwrap(), z(0));

        let x = Lex::ints(0, 1);
        assert_eq!(unit_norm(&LexPlane, &x, &Lex::ints(1, 0)).unwrap(), z(0));
        assert_ne!(x, LexPlane.zero());

        assert!(matches!(unit_norm(&r3, &x_of(&r3), &v(&[1, 0, 1])), Err(RieszError::NotAUnit(_))));
    }

    fn x_of(space: &FinDim) -> FinVec {
        space.standard_unit()
    }

    #[test]
    fn unit_examples() {
        let r3 = FinDim::new(3).unwrap();
        assert!(is_unit(&r3, &v(&[1, 1, 1])).unwrap());
        assert!(!is_unit(&r3, &v(&[1, 0, 1])).unwrap());
        assert!(is_unit(&LexPlane, &Lex::ints(1, -5)).unwrap());
        assert!(!is_unit(&LexPlane, &Lex::ints(0, 5)).unwrap());
        assert!(is_unit(&PlSpace, &PlFunction::constant(z(1))).unwrap());
    }

    #[test]
    fn infinitesimals() {
        let w = find_infinitesimal(&LexPlane).expect("lex plane is not Archimedean");
        assert_eq!(w.epsilon, Lex::ints(0, 1));
        assert_eq!(w.bound, Lex::ints(1, 0));
        for n in [-1_000_000, -1, 0, 1, 7, 1_000_000] {
            assert!(infinitesimal_holds_at(&LexPlane, &w, n));
        }
        assert!(find_infinitesimal(&FinDim::new(3).unwrap()).is_none());
        assert!(find_infinitesimal(&PlSpace).is_none());
    }
}
