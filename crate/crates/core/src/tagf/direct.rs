//! Direct evaluation as a multiple sum.
//!
//! Columns `[alpha_1, eps_1]` are cut into maximal runs on which `f` is
//! constant. Reading the runs from the right, run `i` has level `c_i`, and
//! the levels cut the second-row range into bands `[c_{i+1}, c_i)`. A choice
//! of how many first-row entries fall in each run and how many second-row
//! entries fall in each band determines the array up to independent subset
//! choices, and the ladder condition becomes a family of inequalities between
//! partial counts.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{gf_trivial, GfError, TASpec};
use crate::poly::{binomial, HalfPolynomial};

struct Layout {
    /// Run sizes, rightmost run first.
    runs: Vec<i64>,
    /// Band sizes; band 0 lies above the highest level, band `i + 1` lies
    /// below run `i`'s level.
    bands: Vec<i64>,
    l: i64,
    d: i64,
}

pub fn gf_direct(spec: &TASpec) -> Result<HalfPolynomial, GfError> {
    spec.validate()?;
    let (alpha, eps) = (spec.start, spec.end);
    if alpha.x > eps.x || alpha.y > eps.y {
        return Ok(gf_trivial(spec.l, alpha, eps));
    }

    let mut runs = Vec::new();
    let mut levels = Vec::new();
    let mut x = eps.x;
    while x >= alpha.x {
        let level = spec.ladder.eval(x);
        let mut y = x;
        while y > alpha.x && spec.ladder.eval(y - 1) == level {
            y -= 1;
        }
        runs.push(x - y + 1);
        levels.push(level.clamp(alpha.y, eps.y + 1));
        x = y - 1;
    }
    let mut thresholds = vec![eps.y + 1];
    thresholds.extend(&levels);
    thresholds.push(alpha.y);
    let bands = thresholds.windows(2).map(|w| w[0] - w[1]).collect();

    let layout = Layout {
        runs,
        bands,
        l: spec.l,
        d: spec.d,
    };
    let mut acc: Vec<BigInt> = Vec::new();
    // Second-row entries above every level pair with first-row entries that
    // do not exist, so at most d of them are allowed.
    for top in 0..=layout.bands[0].min(spec.d) {
        let w = binomial(layout.bands[0], top);
        layout.walk(0, 0, top, &w, &mut acc);
    }
    Ok(HalfPolynomial::from_coeffs(acc))
}

impl Layout {
    /// Places the first-row entries of run `i` and the second-row entries of
    /// the band just below it. `na`, `nb` count the entries placed so far.
    fn walk(&self, i: usize, na: i64, nb: i64, w: &BigInt, acc: &mut Vec<BigInt>) {
        if i == self.runs.len() {
            if na - nb == self.l {
                let size = (na + nb) as usize;
                if acc.len() <= size {
                    acc.resize(size + 1, BigInt::zero());
                }
                acc[size] += w;
            }
            return;
        }
        let run = self.runs[i];
        let band = self.bands[i + 1];
        for ya in 0..=run {
            let wa = w * binomial(run, ya);
            for xb in 0..=band {
                // Entries above the next level must find partners in the
                // runs seen so far.
                if nb + xb > na + ya + self.d {
                    break;
                }
                self.walk(i + 1, na + ya, nb + xb, &(&wa * binomial(band, xb)), acc);
            }
        }
    }
}
