//! Exact Hilbert series of one-sided ladder determinantal rings.
//!
//! The numerator of the Hilbert series counts families of nonintersecting
//! lattice paths by their number of NE-turns. That count is a determinant
//! whose entries are generating functions of two-rowed arrays bounded by the
//! ladder; see [`tagf`] for how those are evaluated.
//!
//! ```
//! use ladder_hilbert::{hilbert_series, series_expand, Bivector, LadderFunction, Method};
//!
//! let ladder = LadderFunction::trivial(1, 1).unwrap();
//! let m = Bivector::new(vec![1], vec![1]).unwrap();
//! let h = hilbert_series(&ladder, &m, Method::Recursive).unwrap();
//! assert_eq!(h.to_string(), "(1 + z)/(1-z)^3");
//! let values: Vec<String> = series_expand(&h, 4).iter().map(|c| c.to_string()).collect();
//! assert_eq!(values, ["1", "4", "9", "16"]);
//! ```

pub mod hilbert;
pub mod model;
pub mod oracle;
pub mod poly;
pub mod tagf;

use thiserror::Error;

pub use hilbert::{build_gf_matrix, denominator_exponent, hilbert_series, path_gf, GFMatrix, Method};
pub use model::{
    endpoints_from_bivector, validate_general_endpoints, Bivector, EndpointConfig, LadderFunction,
    LatticePoint, ModelError,
};
pub use poly::{binomial, det_poly_matrix, series_expand, to_z_polynomial, HalfPolynomial, HilbertSeries, PolyError};
pub use tagf::{GfError, TASpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
