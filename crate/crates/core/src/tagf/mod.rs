//! Generating functions `sum q^|T|` of two-rowed arrays.
//!
//! A two-rowed array of type `l` has a first row `a_{-l+1} < ... < a_k` in
//! `[alpha_1, eps_1]` and a second row `b_1 < ... < b_k` in
//! `[alpha_2, eps_2]`, subject to the ladder condition `b_s < f(a_{s+d})`
//! whenever both entries exist. Its size is `|T| = l + 2k`.
//!
//! Three evaluation strategies are provided: closed forms for trivial and
//! diagonal boundaries, a direct multiple sum over constant runs of `f`, and
//! a memoized recursion that splits the boundary into horizontal and diagonal
//! pieces.

mod border;
mod closed;
mod direct;
mod recursive;

use thiserror::Error;

use crate::model::{LadderFunction, LatticePoint};

pub use border::{partition_border, BorderPiece, PieceKind};
pub use closed::{check_diagonal, gf_diagonal, gf_star_diagonal, gf_star_trivial, gf_trivial};
pub use direct::gf_direct;
pub use recursive::{gf_recursive, gf_star_recursive, RecursiveEngine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("starred arrays need a nonempty first-row range (alpha_1 = {alpha1} > eps_1 = {eps1})")]
    StarRequiresNonemptyFirstColumn { alpha1: i64, eps1: i64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("first-row bound eps_1 = {eps1} lies right of the ladder (a = {a})")]
    EndpointOutsideLadder { eps1: i64, a: i64 },
}

/// Parameters of a set of two-rowed arrays bounded by a ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TASpec<'a> {
    pub l: i64,
    pub start: LatticePoint,
    pub end: LatticePoint,
    pub d: i64,
    pub ladder: &'a LadderFunction,
}

impl<'a> TASpec<'a> {
    pub fn new(
        l: i64,
        start: LatticePoint,
        end: LatticePoint,
        d: i64,
        ladder: &'a LadderFunction,
    ) -> Self {
        Self {
            l,
            start,
            end,
            d,
            ladder,
        }
    }

    /// Same spec with the first-row lower bound moved one column right.
    pub fn shifted_start(&self) -> Self {
        Self {
            start: self.start + LatticePoint::new(1, 0),
            ..*self
        }
    }

    /// Checks `d >= 0`, `l + d >= 0` and that the first-row range does not
    /// extend right of the ladder.
    pub fn validate(&self) -> Result<(), GfError> {
        if self.d < 0 {
            return Err(GfError::PreconditionViolated(format!("d = {} is negative", self.d)));
        }
        if self.l + self.d < 0 {
            return Err(GfError::PreconditionViolated(format!(
                "l + d = {} is negative",
                self.l + self.d
            )));
        }
        if self.end.x > self.ladder.a() {
            return Err(GfError::EndpointOutsideLadder {
                eps1: self.end.x,
                a: self.ladder.a(),
            });
        }
        Ok(())
    }
}
