//! Turn generating functions of nonintersecting path families as
//! determinants of array generating functions, and the Hilbert series of
//! ladder determinantal rings built from them.

use std::fmt;
use std::str::FromStr;

use crate::model::{
    endpoints_from_bivector, validate_general_endpoints, Bivector, EndpointConfig, LadderFunction,
    LatticePoint,
};
use crate::poly::{det_poly_matrix, to_z_polynomial, HalfPolynomial, HilbertSeries};
use crate::tagf::{gf_direct, RecursiveEngine, TASpec};
use crate::Error;

/// How matrix entries are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    Direct,
    #[default]
    Recursive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::Recursive => "recursive",
        })
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "direct" => Ok(Method::Direct),
            "recursive" => Ok(Method::Recursive),
            _ => Err(format!("unknown method `{s}`")),
        }
    }
}

/// `entries[s][t]` (0-based) is the generating function of arrays of type
/// `t - s` from the shifted start `t` to the shifted end `s` with offset `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFMatrix {
    pub n: usize,
    pub entries: Vec<Vec<HalfPolynomial>>,
}

impl GFMatrix {
    pub fn determinant(&self) -> HalfPolynomial {
        det_poly_matrix(&self.entries)
    }
}

/// The parameters of entry `(s, t)`, 0-based.
pub fn entry_spec<'a>(ladder: &'a LadderFunction, cfg: &EndpointConfig, s: usize, t: usize) -> TASpec<'a> {
    TASpec::new(
        t as i64 - s as i64,
        cfg.shifted_starts[t],
        cfg.shifted_ends[s],
        s as i64,
        ladder,
    )
}

pub fn build_gf_matrix(
    ladder: &LadderFunction,
    cfg: &EndpointConfig,
    method: Method,
) -> Result<GFMatrix, Error> {
    let n = cfg.n();
    let engine = RecursiveEngine::new(ladder);
    let mut entries = Vec::with_capacity(n);
    for s in 0..n {
        let mut row = Vec::with_capacity(n);
        for t in 0..n {
            let spec = entry_spec(ladder, cfg, s, t);
            let gf = match method {
                Method::Direct => gf_direct(&spec)?,
                Method::Recursive => engine.gf(spec.l, spec.start, spec.end, spec.d)?,
            };
            row.push(gf);
        }
        entries.push(row);
    }
    Ok(GFMatrix { n, entries })
}

/// `sum z^NE(P)` over nonintersecting families `A^(i) -> E^(i)` whose turns
/// lie in the ladder, returned as an even polynomial in `q`.
pub fn path_gf(
    ladder: &LadderFunction,
    starts: &[LatticePoint],
    ends: &[LatticePoint],
    method: Method,
) -> Result<HalfPolynomial, Error> {
    let cfg = validate_general_endpoints(ladder, starts, ends)?;
    path_gf_for(ladder, &cfg, method)
}

fn path_gf_for(ladder: &LadderFunction, cfg: &EndpointConfig, method: Method) -> Result<HalfPolynomial, Error> {
    // Without a path for some pair there is no family, although the
    // determinant need not vanish.
    if cfg.starts.iter().zip(&cfg.ends).any(|(a, e)| !a.reaches(*e)) {
        return Ok(HalfPolynomial::zero());
    }
    let det = build_gf_matrix(ladder, cfg, method)?.determinant();
    Ok(to_z_polynomial(det)?)
}

/// Hilbert series of the ladder determinantal ring cut out by the minors
/// bounded by `m`.
pub fn hilbert_series(ladder: &LadderFunction, m: &Bivector, method: Method) -> Result<HilbertSeries, Error> {
    let cfg = endpoints_from_bivector(ladder, m)?;
    let numerator = path_gf_for(ladder, &cfg, method)?;
    let exponent = denominator_exponent(ladder, m);
    Ok(HilbertSeries::new(numerator, exponent)?)
}

/// `(a + b + 3) n - sum (u_i + v_i)`.
pub fn denominator_exponent(ladder: &LadderFunction, m: &Bivector) -> u64 {
    let n = m.n() as i64;
    let sum: i64 = m.u().iter().chain(m.v()).sum();
    let e = (ladder.a() + ladder.b() + 3) * n - sum;
    u64::try_from(e).expect("membership conditions keep the exponent nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn smallest_matrix() {
        let sq = LadderFunction::trivial(1, 1).unwrap();
        let m = Bivector::new(vec![1], vec![1]).unwrap();
        let cfg = endpoints_from_bivector(&sq, &m).unwrap();
        for method in [Method::Direct, Method::Recursive] {
            let mat = build_gf_matrix(&sq, &cfg, method).unwrap();
            assert_eq!(mat.entries, vec![vec![HalfPolynomial::from_i64s(&[1, 0, 1])]]);
        }
        let h = hilbert_series(&sq, &m, Method::Recursive).unwrap();
        assert_eq!(h.numerator(), &HalfPolynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(h.denom_exponent(), 3);
    }

    #[test]
    fn general_endpoints() {
        let sq = LadderFunction::trivial(1, 1).unwrap();
        let g = path_gf(&sq, &[pt(0, 0)], &[pt(1, 1)], Method::Recursive).unwrap();
        assert_eq!(g.display_z().to_string(), "1 + z");
        let l5 = LadderFunction::trivial(4, 4).unwrap();
        let g = path_gf(&l5, &[pt(0, 2), pt(1, 0)], &[pt(3, 4), pt(4, 3)], Method::Direct).unwrap();
        assert_eq!(g, HalfPolynomial::from_i64s(&[1, 0, 9, 0, 39, 0, 49, 0, 24, 0, 3]));
    }

    #[test]
    fn unreachable_pair_gives_zero() {
        let l = LadderFunction::trivial(3, 3).unwrap();
        // Second pair cannot be joined: its end is left of its start.
        let g = path_gf(&l, &[pt(0, 2), pt(3, 0)], &[pt(1, 3), pt(2, 1)], Method::Recursive).unwrap();
        assert!(g.is_zero());
        let g = path_gf(&l, &[pt(0, 2), pt(3, 1)], &[pt(1, 3), pt(2, 2)], Method::Recursive).unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn method_names() {
        assert_eq!("direct".parse::<Method>().unwrap(), Method::Direct);
        assert_eq!(Method::default().to_string(), "recursive");
        assert!("both".parse::<Method>().is_err());
    }
}
