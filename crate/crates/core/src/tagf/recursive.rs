//! Recursive evaluation over the border pieces.
//!
//! Splitting the arrays at a column `x` according to where the second-row
//! entries sit relative to `h = f(x)` gives
//!
//! ```text
//! GF(l; A, E; d) = sum_{j = x+1}^{eps_1} GF(l + d; A, (j - 1, h - 1); 0)
//!                                        * GF*(-d; (j, h), E; d)
//!                + sum_{e = 0}^{d} GF(l + d - e; A, (eps_1, h - 1); e)
//!                                  * binomial(eps_2 - h + 1, d - e) q^(d - e)
//! ```
//!
//! valid whenever `alpha_1 <= x + 1` and `f(x) <= eps_2 - d`, with `h`
//! clamped into `[alpha_2, eps_2 + 1]`. The starred factors live on a single
//! border piece and are evaluated in closed form; the remaining factors
//! recurse on a smaller column range.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;

use num_traits::Zero;

use super::{
    gf_diagonal, gf_direct, gf_star_diagonal, gf_star_trivial, gf_trivial, partition_border,
    BorderPiece, GfError, PieceKind, TASpec,
};
use crate::model::{LadderFunction, LatticePoint};
use crate::poly::{binomial, HalfPolynomial};

type Key = (i64, i64, i64, i64, i64, i64);

/// Memoizing evaluator bound to one ladder. Reusing an engine across the
/// entries of a determinant shares the common subproblems.
pub struct RecursiveEngine<'a> {
    ladder: &'a LadderFunction,
    /// Border pieces, the first one extended to minus infinity.
    pieces: Vec<BorderPiece>,
    memo: RefCell<HashMap<Key, HalfPolynomial>>,
    fallbacks: Cell<usize>,
}

impl<'a> RecursiveEngine<'a> {
    pub fn new(ladder: &'a LadderFunction) -> Self {
        let mut pieces = partition_border(ladder);
        if pieces[0].kind == PieceKind::Horizontal {
            pieces[0].x_lo = i64::MIN;
        } else {
            pieces.insert(
                0,
                BorderPiece {
                    x_lo: i64::MIN,
                    x_hi: -1,
                    kind: PieceKind::Horizontal,
                    level: ladder.eval(0),
                },
            );
        }
        Self {
            ladder,
            pieces,
            memo: RefCell::new(HashMap::new()),
            fallbacks: Cell::new(0),
        }
    }

    pub fn ladder(&self) -> &'a LadderFunction {
        self.ladder
    }

    /// Number of subproblems that were handed to the direct method because
    /// no closed form applied.
    pub fn fallback_count(&self) -> usize {
        self.fallbacks.get()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }

    pub fn gf(&self, l: i64, start: LatticePoint, end: LatticePoint, d: i64) -> Result<HalfPolynomial, GfError> {
        TASpec::new(l, start, end, d, self.ladder).validate()?;
        Ok(self.g((l, start.x, start.y, end.x, end.y, d)))
    }

    pub fn gf_star(
        &self,
        l: i64,
        start: LatticePoint,
        end: LatticePoint,
        d: i64,
    ) -> Result<HalfPolynomial, GfError> {
        TASpec::new(l, start, end, d, self.ladder).validate()?;
        if start.x > end.x {
            return Err(GfError::StarRequiresNonemptyFirstColumn {
                alpha1: start.x,
                eps1: end.x,
            });
        }
        if self.ladder.eval(start.x) > end.y - d {
            return gf_star_trivial(l, start, end);
        }
        let all = self.g((l, start.x, start.y, end.x, end.y, d));
        let rest = self.g((l, start.x + 1, start.y, end.x, end.y, d));
        Ok(all - rest)
    }

    fn piece_of(&self, x: i64) -> usize {
        self.pieces.partition_point(|p| p.x_hi < x)
    }

    fn g(&self, key: Key) -> HalfPolynomial {
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let v = self.compute(key);
        self.memo.borrow_mut().insert(key, v.clone());
        v
    }

    fn compute(&self, key: Key) -> HalfPolynomial {
        let (l, a1, a2, e1, e2, d) = key;
        debug_assert!(d >= 0 && l + d >= 0);
        let alpha = LatticePoint::new(a1, a2);
        let eps = LatticePoint::new(e1, e2);
        if a1 > e1 || a2 > e2 {
            return gf_trivial(l, alpha, eps);
        }
        let f = |x: i64| self.ladder.eval(x);

        // The rightmost column itself constrains: only the second sum at
        // x = eps_1 survives.
        if f(e1) <= e2 - d {
            return self.tail_sum(key, f(e1));
        }
        // Column c constrains the array iff f(c) <= eps_2 - d.
        if f(a1) > e2 - d {
            return gf_trivial(l, alpha, eps);
        }
        let mut c_max = e1;
        while f(c_max) > e2 - d {
            c_max -= 1;
        }
        let last = self.piece_of(c_max);
        let piece = self.pieces[last];
        let diagonal_ok = piece.kind == PieceKind::Diagonal
            && (c_max == e1 || c_max + piece.level + 2 > e2 - d);

        let x = if !diagonal_ok {
            c_max
        } else if last == self.piece_of(a1) {
            return match gf_diagonal(l, alpha, eps, piece.level, d) {
                Ok(v) => v,
                Err(_) => self.fallback(key),
            };
        } else {
            self.pieces[last - 1].x_hi
        };

        let h = f(x).clamp(a2, e2 + 1);
        let mut out = self.tail_sum(key, h);
        for j in x + 1..=e1 {
            let right = self.star_piece(-d, LatticePoint::new(j, h), eps, d, c_max);
            if right.is_zero() {
                continue;
            }
            let left = self.g((l + d, a1, a2, j - 1, h - 1, 0));
            out += &(&left * &right);
        }
        out
    }

    /// `sum_{e=0}^{d} GF(l + d - e; A, (eps_1, h - 1); e) binomial(eps_2 - h + 1, d - e) q^(d - e)`
    fn tail_sum(&self, key: Key, level: i64) -> HalfPolynomial {
        let (l, a1, a2, e1, e2, d) = key;
        let h = level.clamp(a2, e2 + 1);
        let mut out = HalfPolynomial::zero();
        for e in 0..=d {
            let c = binomial(e2 - h + 1, d - e);
            if c.is_zero() {
                continue;
            }
            let sub = self.g((l + d - e, a1, a2, e1, h - 1, e));
            out += &sub.scale(&c).shift((d - e) as usize);
        }
        out
    }

    /// Starred factor whose constrained columns `start.x ..= c_max` lie on a
    /// single diagonal piece.
    fn star_piece(
        &self,
        l: i64,
        start: LatticePoint,
        end: LatticePoint,
        d: i64,
        c_max: i64,
    ) -> HalfPolynomial {
        let star = |r: Result<HalfPolynomial, GfError>| r.expect("star factor with nonempty first row");
        if start.x > c_max {
            return star(gf_star_trivial(l, start, end));
        }
        // The leading first-row entry pairs with a second-row entry at or
        // above its own boundary value.
        if self.ladder.eval(start.x) <= start.y && l + d <= 0 {
            return HalfPolynomial::zero();
        }
        let piece = self.pieces[self.piece_of(start.x)];
        if piece.kind == PieceKind::Diagonal {
            if let Ok(v) = gf_star_diagonal(l, start, end, piece.level, d) {
                return v;
            }
        }
        self.fallbacks.set(self.fallbacks.get() + 1);
        let spec = TASpec::new(l, start, end, d, self.ladder);
        star(gf_direct(&spec)) - star(gf_direct(&spec.shifted_start()))
    }

    fn fallback(&self, key: Key) -> HalfPolynomial {
        let (l, a1, a2, e1, e2, d) = key;
        self.fallbacks.set(self.fallbacks.get() + 1);
        let spec = TASpec::new(l, LatticePoint::new(a1, a2), LatticePoint::new(e1, e2), d, self.ladder);
        gf_direct(&spec).expect("validated subproblem")
    }
}

/// `GF(TA(l; A, E; f, d))` by the border recursion.
pub fn gf_recursive(spec: &TASpec) -> Result<HalfPolynomial, GfError> {
    RecursiveEngine::new(spec.ladder).gf(spec.l, spec.start, spec.end, spec.d)
}

/// Generating function of the arrays counted by [`gf_recursive`] whose first
/// row starts exactly at `alpha_1`.
pub fn gf_star_recursive(spec: &TASpec) -> Result<HalfPolynomial, GfError> {
    RecursiveEngine::new(spec.ladder).gf_star(spec.l, spec.start, spec.end, spec.d)
}
