//! Ladders, bivectors, lattice points and the endpoint configurations derived
//! from them.
//!
//! A one-sided (upper) ladder is described by a weakly increasing boundary
//! function `f: [0, a] -> [1, b + 1]`; the ladder region is the set of lattice
//! points `(x, y)` with `0 <= x <= a` and `0 <= y < f(x)`. Evaluation to the
//! left of column 0 repeats `f(0)`.

use std::fmt;
use std::ops::Add;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("ladder dimensions must be nonnegative (a = {a}, b = {b})")]
    NegativeDimension { a: i64, b: i64 },
    #[error("expected {expected} boundary values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("boundary is not weakly increasing at index {index}")]
    NotWeaklyIncreasing { index: usize },
    #[error("boundary value {value} at index {index} is outside [1, {max}]")]
    ValueOutOfRange { index: usize, value: i64, max: i64 },
    #[error("mask is not an upper ladder region (row {row}, column {column})")]
    NotAnUpperLadder { row: usize, column: usize },
    #[error("invalid bivector: {0}")]
    MalformedBivector(&'static str),
    #[error("endpoint {index} lies outside the ladder: {condition}")]
    EndpointOutsideLadder { index: usize, condition: String },
    #[error("expected the same positive number of starts and ends (got {starts} and {ends})")]
    EndpointCount { starts: usize, ends: usize },
    #[error("{role} point {index} at {point} lies outside the ladder")]
    PointOutsideLadder {
        role: &'static str,
        index: usize,
        point: LatticePoint,
    },
    #[error("{role} points violate the ordering between index {index} and {next}", next = index + 1)]
    ChainViolation { role: &'static str, index: usize },
    #[error("boundary is not constant left of the first start; it changes at column {x}")]
    BoundaryNotFlatLeftOfFirstStart { x: i64 },
}

/// A point of the integer lattice. Shifted endpoints may have negative
/// coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Componentwise `self <= other`, i.e. `other` is reachable from `self`
    /// by a path of unit East and North steps.
    pub fn reaches(self, other: LatticePoint) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The boundary function of an upper ladder.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LadderFunction {
    a: i64,
    b: i64,
    values: Vec<i64>,
}

impl LadderFunction {
    /// Validates `values = [f(0), ..., f(a)]`.
    pub fn new(a: i64, b: i64, values: Vec<i64>) -> Result<Self, ModelError> {
        if a < 0 || b < 0 {
            return Err(ModelError::NegativeDimension { a, b });
        }
        let expected = (a + 1) as usize;
        if values.len() != expected {
            return Err(ModelError::LengthMismatch {
                expected,
                found: values.len(),
            });
        }
        for (index, &value) in values.iter().enumerate() {
            if !(1..=b + 1).contains(&value) {
                return Err(ModelError::ValueOutOfRange {
                    index,
                    value,
                    max: b + 1,
                });
            }
        }
        if let Some(i) = values.windows(2).position(|w| w[1] < w[0]) {
            return Err(ModelError::NotWeaklyIncreasing { index: i + 1 });
        }
        Ok(Self { a, b, values })
    }

    /// The full `(a + 1) x (b + 1)` rectangle.
    pub fn trivial(a: i64, b: i64) -> Result<Self, ModelError> {
        Self::new(a, b, vec![b + 1; (a.max(0) + 1) as usize])
    }

    /// Reads a ladder from a boolean matrix in matrix orientation: row `i`
    /// holds the lattice row `y = b - i`, column `j` is `x = j`.
    pub fn from_mask(mask: &[Vec<bool>]) -> Result<Self, ModelError> {
        let rows = mask.len();
        let cols = mask.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(ModelError::NotAnUpperLadder { row: 0, column: 0 });
        }
        if let Some(row) = mask.iter().position(|r| r.len() != cols) {
            return Err(ModelError::NotAnUpperLadder { row, column: cols });
        }
        let b = rows as i64 - 1;
        let mut values = Vec::with_capacity(cols);
        for column in 0..cols {
            // Matrix row i is lattice row b - i, so the true cells must be the
            // bottom block of the column.
            let height = mask.iter().filter(|r| r[column]).count();
            for (row, r) in mask.iter().enumerate() {
                if r[column] != (row >= rows - height) {
                    return Err(ModelError::NotAnUpperLadder { row, column });
                }
            }
            if height == 0 {
                return Err(ModelError::NotAnUpperLadder {
                    row: rows - 1,
                    column,
                });
            }
            if let Some(&prev) = values.last() {
                if (height as i64) < prev {
                    return Err(ModelError::NotAnUpperLadder {
                        row: rows - prev as usize,
                        column,
                    });
                }
            }
            values.push(height as i64);
        }
        Self::new(cols as i64 - 1, b, values)
    }

    /// Inverse of [`LadderFunction::from_mask`].
    pub fn to_mask(&self) -> Vec<Vec<bool>> {
        (0..=self.b)
            .map(|i| {
                self.values
                    .iter()
                    .map(|&fx| self.b - i < fx)
                    .collect()
            })
            .collect()
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `f(x)`, with `f(x) = f(0)` for `x < 0`.
    ///
    /// # Panics
    /// If `x > a`.
    pub fn eval(&self, x: i64) -> i64 {
        assert!(x <= self.a, "column {x} is right of the ladder (a = {})", self.a);
        self.values[x.max(0) as usize]
    }

    /// Membership in the ladder region, extended to the left of column 0.
    pub fn contains(&self, p: LatticePoint) -> bool {
        p.x <= self.a && p.y >= 0 && p.y < self.eval(p.x)
    }
}

/// `M = [u_1, ..., u_n | v_1, ..., v_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bivector {
    u: Vec<i64>,
    v: Vec<i64>,
}

impl Bivector {
    pub fn new(u: Vec<i64>, v: Vec<i64>) -> Result<Self, ModelError> {
        if u.is_empty() {
            return Err(ModelError::MalformedBivector("it must have at least one column"));
        }
        if u.len() != v.len() {
            return Err(ModelError::MalformedBivector("u and v differ in length"));
        }
        for s in [&u, &v] {
            if s[0] < 1 {
                return Err(ModelError::MalformedBivector("entries must be positive"));
            }
            if s.windows(2).any(|w| w[1] <= w[0]) {
                return Err(ModelError::MalformedBivector("rows must be strictly increasing"));
            }
        }
        Ok(Self { u, v })
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn u(&self) -> &[i64] {
        &self.u
    }

    pub fn v(&self) -> &[i64] {
        &self.v
    }
}

/// Starting and end points of a family of paths, together with the shifted
/// points used as matrix entry bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointConfig {
    pub starts: Vec<LatticePoint>,
    pub ends: Vec<LatticePoint>,
    pub shifted_starts: Vec<LatticePoint>,
    pub shifted_ends: Vec<LatticePoint>,
}

impl EndpointConfig {
    /// Computes the shifted points; does not validate.
    pub fn new(starts: Vec<LatticePoint>, ends: Vec<LatticePoint>) -> Self {
        let shifted_starts = starts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + LatticePoint::new(-(i as i64), i as i64 + 1))
            .collect();
        let shifted_ends = ends
            .iter()
            .enumerate()
            .map(|(i, &p)| p + LatticePoint::new(-(i as i64) - 1, i as i64))
            .collect();
        Self {
            starts,
            ends,
            shifted_starts,
            shifted_ends,
        }
    }

    pub fn n(&self) -> usize {
        self.starts.len()
    }
}

/// The endpoints whose nonintersecting path families encode the standard
/// monomials of the ladder determinantal ring for `m`.
pub fn endpoints_from_bivector(
    ladder: &LadderFunction,
    m: &Bivector,
) -> Result<EndpointConfig, ModelError> {
    let n = m.n();
    let (a, b) = (ladder.a(), ladder.b());
    let u_n = m.u()[n - 1];
    let v_n = m.v()[n - 1];
    if u_n > ladder.eval(0) {
        return Err(ModelError::EndpointOutsideLadder {
            index: n,
            condition: format!("u_{n} = {u_n} exceeds f(0) = {}", ladder.eval(0)),
        });
    }
    let col = a - v_n + 1;
    if col < 0 || ladder.eval(col) != b + 1 {
        return Err(ModelError::EndpointOutsideLadder {
            index: n,
            condition: format!("column a - v_{n} + 1 = {col} does not reach row b = {b}"),
        });
    }
    let starts = (1..=n)
        .map(|i| LatticePoint::new(0, m.u()[n - i] - 1))
        .collect();
    let ends = (1..=n)
        .map(|i| LatticePoint::new(a - m.v()[n - i] + 1, b))
        .collect();
    Ok(EndpointConfig::new(starts, ends))
}

/// Checks that general starting and end points satisfy the hypotheses of the
/// determinant formula.
pub fn validate_general_endpoints(
    ladder: &LadderFunction,
    starts: &[LatticePoint],
    ends: &[LatticePoint],
) -> Result<EndpointConfig, ModelError> {
    if starts.is_empty() || starts.len() != ends.len() {
        return Err(ModelError::EndpointCount {
            starts: starts.len(),
            ends: ends.len(),
        });
    }
    for (role, points) in [("start", starts), ("end", ends)] {
        if let Some(index) = points.iter().position(|&p| !ladder.contains(p)) {
            return Err(ModelError::PointOutsideLadder {
                role,
                index: index + 1,
                point: points[index],
            });
        }
    }
    let first_bad = |points: &[LatticePoint], ok: fn(&LatticePoint, &LatticePoint) -> bool| {
        points.windows(2).position(|w| !ok(&w[0], &w[1]))
    };
    if let Some(i) = first_bad(starts, |p, q| p.x <= q.x && p.y > q.y) {
        return Err(ModelError::ChainViolation {
            role: "start",
            index: i + 1,
        });
    }
    if let Some(i) = first_bad(ends, |p, q| p.x < q.x && p.y >= q.y) {
        return Err(ModelError::ChainViolation {
            role: "end",
            index: i + 1,
        });
    }
    let x1 = starts[0].x;
    if x1 > 0 {
        if let Some(x) = (1..=x1).find(|&x| ladder.eval(x) != ladder.eval(x - 1)) {
            return Err(ModelError::BoundaryNotFlatLeftOfFirstStart { x });
        }
    }
    Ok(EndpointConfig::new(starts.to_vec(), ends.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sample_ladder() -> LadderFunction {
        LadderFunction::new(13, 15, vec![7, 7, 7, 7, 10, 11, 12, 13, 16, 16, 16, 16, 16, 16]).unwrap()
    }

    fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
        v.iter().copied().map(LatticePoint::from).collect()
    }

    #[test]
    fn validates_ladders() {
        assert_eq!(sample_ladder().values().len(), 14);
        assert!(LadderFunction::new(0, 0, vec![1]).is_ok());
        assert_eq!(
            LadderFunction::new(1, 1, vec![2, 1]),
            Err(ModelError::NotWeaklyIncreasing { index: 1 })
        );
        assert_eq!(
            LadderFunction::new(1, 1, vec![0, 1]),
            Err(ModelError::ValueOutOfRange { index: 0, value: 0, max: 2 })
        );
        assert_eq!(
            LadderFunction::new(1, 1, vec![2, 3]),
            Err(ModelError::ValueOutOfRange { index: 1, value: 3, max: 2 })
        );
        assert!(matches!(
            LadderFunction::new(2, 1, vec![1, 1]),
            Err(ModelError::LengthMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn eval_extends_left() {
        let l = sample_ladder();
        for x in -20..0 {
            assert_eq!(l.eval(x), 7);
        }
        assert_eq!(l.eval(4), 10);
        assert!(l.contains(LatticePoint::new(-3, 6)));
        assert!(!l.contains(LatticePoint::new(-3, 7)));
        assert!(!l.contains(LatticePoint::new(14, 0)));
    }

    #[test]
    fn mask_examples() {
        let all = vec![vec![true, true], vec![true, true]];
        assert_eq!(LadderFunction::from_mask(&all).unwrap().values(), &[2, 2]);

        let hole = vec![vec![true, true], vec![false, true], vec![true, true]];
        assert!(matches!(
            LadderFunction::from_mask(&hole),
            Err(ModelError::NotAnUpperLadder { column: 0, .. })
        ));

        // Decreasing column heights describe a lower ladder.
        let lower = vec![vec![true, false], vec![true, true]];
        assert!(matches!(
            LadderFunction::from_mask(&lower),
            Err(ModelError::NotAnUpperLadder { column: 1, .. })
        ));

        let l = sample_ladder();
        assert_eq!(LadderFunction::from_mask(&l.to_mask()).unwrap(), l);
    }

    #[test]
    fn bivector_validation() {
        assert!(Bivector::new(vec![1, 2], vec![1, 3]).is_ok());
        assert!(Bivector::new(vec![], vec![]).is_err());
        assert!(Bivector::new(vec![1, 1], vec![1, 2]).is_err());
        assert!(Bivector::new(vec![0], vec![1]).is_err());
        assert!(Bivector::new(vec![1], vec![1, 2]).is_err());
    }

    #[test]
    fn endpoints_of_example() {
        let l = sample_ladder();
        let m = Bivector::new(vec![1, 2, 4, 6], vec![1, 2, 3, 6]).unwrap();
        let cfg = endpoints_from_bivector(&l, &m).unwrap();
        assert_eq!(cfg.shifted_starts[0], LatticePoint::new(0, 6));
        assert_eq!(cfg.shifted_ends[0], LatticePoint::new(7, 15));
        assert_eq!(cfg.shifted_starts[3], LatticePoint::new(-3, 4));
        assert_eq!(cfg.shifted_ends[3], LatticePoint::new(9, 18));
        assert!(validate_general_endpoints(&l, &cfg.starts, &cfg.ends).is_ok());

        let bad = Bivector::new(vec![1, 2, 4, 10], vec![1, 2, 3, 6]).unwrap();
        assert!(matches!(
            endpoints_from_bivector(&l, &bad),
            Err(ModelError::EndpointOutsideLadder { index: 4, .. })
        ));
        // a - v_n + 1 = 4 has f = 10 < 16
        let bad = Bivector::new(vec![1], vec![10]).unwrap();
        assert!(endpoints_from_bivector(&l, &bad).is_err());
    }

    #[test]
    fn endpoints_of_square() {
        let l = LadderFunction::trivial(1, 1).unwrap();
        let m = Bivector::new(vec![1], vec![1]).unwrap();
        let cfg = endpoints_from_bivector(&l, &m).unwrap();
        assert_eq!(cfg.starts, pts(&[(0, 0)]));
        assert_eq!(cfg.ends, pts(&[(1, 1)]));
        assert_eq!(cfg.shifted_starts, pts(&[(0, 1)]));
        assert_eq!(cfg.shifted_ends, pts(&[(0, 1)]));
    }

    #[test]
    fn general_endpoint_validation() {
        let sq = LadderFunction::trivial(1, 1).unwrap();
        assert!(validate_general_endpoints(&sq, &pts(&[(0, 0)]), &pts(&[(1, 1)])).is_ok());

        let l = sample_ladder();
        assert_eq!(
            validate_general_endpoints(&l, &pts(&[(5, 9)]), &pts(&[(9, 15)])),
            Err(ModelError::BoundaryNotFlatLeftOfFirstStart { x: 4 })
        );
        let big = LadderFunction::trivial(4, 4).unwrap();
        assert!(matches!(
            validate_general_endpoints(&big, &pts(&[(0, 2), (1, 2)]), &pts(&[(3, 4), (4, 3)])),
            Err(ModelError::ChainViolation { role: "start", index: 1 })
        ));
        assert!(matches!(
            validate_general_endpoints(&big, &pts(&[(0, 2), (1, 0)]), &pts(&[(4, 4), (4, 3)])),
            Err(ModelError::ChainViolation { role: "end", index: 1 })
        ));
        assert!(matches!(
            validate_general_endpoints(&l, &pts(&[(0, 7)]), &pts(&[(9, 15)])),
            Err(ModelError::PointOutsideLadder { role: "start", index: 1, .. })
        ));
        assert!(matches!(
            validate_general_endpoints(&l, &pts(&[(0, 0)]), &pts(&[])),
            Err(ModelError::EndpointCount { .. })
        ));
    }
}
