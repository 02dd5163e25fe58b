//! Closed forms for rectangular bounds under a trivial boundary and under a
//! diagonal boundary `f(x) = x + D + 1`, together with their starred variants
//! (arrays whose first row starts exactly at `alpha_1`).

use num_bigint::BigInt;
use num_traits::Zero;

use super::GfError;
use crate::model::LatticePoint;
use crate::poly::{binomial, HalfPolynomial};

/// `sum_k term(k) q^(2k + l)` over the finitely many `k` that can contribute.
fn sum_terms(l: i64, k_max: i64, term: impl Fn(i64) -> BigInt) -> HalfPolynomial {
    let mut out = HalfPolynomial::zero();
    for k in 0..=k_max {
        let c = term(k);
        if c.is_zero() {
            continue;
        }
        let exp = 2 * k + l;
        assert!(exp >= 0, "negative array size {exp}");
        out.add_term(&c, exp as usize);
    }
    out
}

fn width(lo: i64, hi: i64) -> i64 {
    (hi - lo + 1).max(0)
}

/// Arrays with first row in `[alpha_1, eps_1]` and second row in
/// `[alpha_2, eps_2]`, no boundary condition.
pub fn gf_trivial(l: i64, alpha: LatticePoint, eps: LatticePoint) -> HalfPolynomial {
    let n1 = eps.x - alpha.x + 1;
    let n2 = eps.y - alpha.y + 1;
    sum_terms(l, width(alpha.y, eps.y), |k| {
        binomial(n1, k + l) * binomial(n2, k)
    })
}

/// Like [`gf_trivial`], restricted to arrays whose first row starts with
/// `alpha_1`.
pub fn gf_star_trivial(
    l: i64,
    alpha: LatticePoint,
    eps: LatticePoint,
) -> Result<HalfPolynomial, GfError> {
    check_star(alpha, eps)?;
    let n1 = eps.x - alpha.x;
    let n2 = eps.y - alpha.y + 1;
    Ok(sum_terms(l, width(alpha.y, eps.y), |k| {
        binomial(n1, k + l - 1) * binomial(n2, k)
    }))
}

fn check_star(alpha: LatticePoint, eps: LatticePoint) -> Result<(), GfError> {
    if alpha.x > eps.x {
        return Err(GfError::StarRequiresNonemptyFirstColumn {
            alpha1: alpha.x,
            eps1: eps.x,
        });
    }
    Ok(())
}

/// Validates the hypotheses under which the diagonal closed forms hold.
pub fn check_diagonal(
    l: i64,
    alpha: LatticePoint,
    eps: LatticePoint,
    offset: i64,
    d: i64,
) -> Result<(), GfError> {
    if d < 0 {
        return Err(GfError::PreconditionViolated("d >= 0".into()));
    }
    if l + d < 0 {
        return Err(GfError::PreconditionViolated("l + d >= 0".into()));
    }
    if alpha.x + offset + 1 + l + d < alpha.y {
        return Err(GfError::PreconditionViolated(
            "alpha_1 + D + 1 + l + d >= alpha_2".into(),
        ));
    }
    if eps.x + offset + 1 + d < eps.y {
        return Err(GfError::PreconditionViolated(
            "eps_1 + D + 1 + d >= eps_2".into(),
        ));
    }
    Ok(())
}

/// Arrays under the boundary `f(x) = x + offset + 1`.
pub fn gf_diagonal(
    l: i64,
    alpha: LatticePoint,
    eps: LatticePoint,
    offset: i64,
    d: i64,
) -> Result<HalfPolynomial, GfError> {
    check_diagonal(l, alpha, eps, offset, d)?;
    let n1 = eps.x - alpha.x + 1;
    let n2 = eps.y - alpha.y + 1;
    let r1 = eps.x - alpha.y + offset + 1;
    let r2 = eps.y - alpha.x - offset + 1;
    let k_max = width(alpha.y, eps.y).max(r1 + d + 1);
    Ok(sum_terms(l, k_max, |k| {
        binomial(n1, k + l) * binomial(n2, k) - binomial(r1, k - d - 1) * binomial(r2, k + l + d + 1)
    }))
}

/// Starred variant of [`gf_diagonal`].
pub fn gf_star_diagonal(
    l: i64,
    alpha: LatticePoint,
    eps: LatticePoint,
    offset: i64,
    d: i64,
) -> Result<HalfPolynomial, GfError> {
    check_diagonal(l, alpha, eps, offset, d)?;
    check_star(alpha, eps)?;
    let n1 = eps.x - alpha.x;
    let n2 = eps.y - alpha.y + 1;
    let r1 = eps.x - alpha.y + offset + 1;
    let r2 = eps.y - alpha.x - offset;
    let k_max = width(alpha.y, eps.y).max(r1 + d + 1);
    Ok(sum_terms(l, k_max, |k| {
        binomial(n1, k + l - 1) * binomial(n2, k) - binomial(r1, k - d - 1) * binomial(r2, k + l + d)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> HalfPolynomial {
        HalfPolynomial::from_i64s(c)
    }
    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn trivial_examples() {
        assert_eq!(gf_trivial(0, pt(0, 0), pt(1, 1)), p(&[1, 0, 4, 0, 1]));
        assert_eq!(gf_trivial(1, pt(0, 0), pt(1, 1)), p(&[0, 2, 0, 2]));
        assert_eq!(gf_trivial(0, pt(0, 0), pt(-1, 5)), p(&[1]));
        assert_eq!(gf_trivial(-1, pt(0, 0), pt(1, 1)), p(&[0, 2, 0, 2]));
        assert!(gf_trivial(2, pt(3, 0), pt(2, 4)).is_zero());
    }

    #[test]
    fn star_trivial_examples() {
        assert_eq!(gf_star_trivial(0, pt(0, 0), pt(1, 1)).unwrap(), p(&[0, 0, 2, 0, 1]));
        assert_eq!(gf_star_trivial(1, pt(0, 0), pt(0, 1)).unwrap(), p(&[0, 1]));
        let want = gf_trivial(0, pt(0, 0), pt(1, 1)) - gf_trivial(0, pt(1, 0), pt(1, 1));
        assert_eq!(gf_star_trivial(0, pt(0, 0), pt(1, 1)).unwrap(), want);
        assert!(matches!(
            gf_star_trivial(0, pt(2, 0), pt(1, 1)),
            Err(GfError::StarRequiresNonemptyFirstColumn { alpha1: 2, eps1: 1 })
        ));
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(gf_diagonal(0, pt(0, 0), pt(1, 1), 0, 0).unwrap(), p(&[1, 0, 3, 0, 1]));
        assert_eq!(gf_diagonal(1, pt(0, 1), pt(2, 2), 0, 0).unwrap(), p(&[0, 3, 0, 5, 0, 1]));
        // A far-away diagonal never constrains.
        assert_eq!(
            gf_diagonal(1, pt(0, 0), pt(3, 4), 10, 0).unwrap(),
            gf_trivial(1, pt(0, 0), pt(3, 4))
        );
        assert!(matches!(
            gf_diagonal(0, pt(0, 0), pt(1, 5), 0, 0),
            Err(GfError::PreconditionViolated(_))
        ));
        assert!(matches!(
            gf_diagonal(-1, pt(0, 0), pt(1, 1), 0, 0),
            Err(GfError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn star_diagonal_examples() {
        assert_eq!(gf_star_diagonal(0, pt(0, 0), pt(1, 1), 0, 0).unwrap(), p(&[0, 0, 1, 0, 1]));
        assert!(matches!(
            gf_star_diagonal(0, pt(2, 0), pt(1, 1), 0, 0),
            Err(GfError::StarRequiresNonemptyFirstColumn { .. })
        ));
    }
}
