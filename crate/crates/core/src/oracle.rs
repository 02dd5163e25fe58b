//! Brute-force enumeration of two-rowed arrays and of nonintersecting lattice
//! path families. Slow by design; used as ground truth for the fast methods.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::model::{LadderFunction, LatticePoint};
use crate::poly::{binomial, HalfPolynomial};
use crate::tagf::TASpec;

/// Upper bound on the number of candidate objects an enumeration may visit.
pub const CANDIDATE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("arrays may have up to {max_k} second-row entries, above the cap of {cap}")]
    CapExceeded { max_k: i64, cap: i64 },
    #[error("instance needs {candidates} candidates, above the limit of {limit}")]
    InstanceTooLarge { candidates: String, limit: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    East,
    North,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: LatticePoint,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: LatticePoint, steps: Vec<Step>) -> Self {
        Self { start, steps }
    }

    /// Parses a step word over `E`/`N`.
    pub fn parse(start: LatticePoint, word: &str) -> Option<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'E' | 'e' => Some(Step::East),
                'N' | 'n' => Some(Step::North),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(start, steps))
    }

    /// All visited points, starting point first.
    pub fn points(&self) -> Vec<LatticePoint> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::East => p.x += 1,
                Step::North => p.y += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> LatticePoint {
        *self.points().last().unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    /// Total number of NE-turns.
    pub fn ne_count(&self) -> usize {
        self.paths.iter().map(|p| ne_turns(p).len()).sum()
    }
}

/// Points that end a North step and start an East step, in path order.
pub fn ne_turns(p: &LatticePath) -> Vec<LatticePoint> {
    let pts = p.points();
    p.steps
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Step::North && w[1] == Step::East)
        .map(|(i, _)| pts[i + 1])
        .collect()
}

/// Enumerates `TA(l; A, E; f, d)` over `spec.ladder`.
pub fn enumerate_arrays(spec: &TASpec, size_cap: i64) -> Result<HalfPolynomial, OracleError> {
    enumerate_arrays_with(
        spec.l,
        spec.start,
        spec.end,
        spec.d,
        |x| spec.ladder.eval(x),
        false,
        size_cap,
    )
}

/// Enumerates two-rowed arrays of type `l` with first row in
/// `[start.x, end.x]`, second row in `[start.y, end.y]` and
/// `b_s < boundary(a_{s+d})`. With `starred`, only arrays whose first row
/// begins with `start.x` are counted.
pub fn enumerate_arrays_with(
    l: i64,
    start: LatticePoint,
    end: LatticePoint,
    d: i64,
    boundary: impl Fn(i64) -> i64,
    starred: bool,
    size_cap: i64,
) -> Result<HalfPolynomial, OracleError> {
    let n1 = (end.x - start.x + 1).max(0);
    let n2 = (end.y - start.y + 1).max(0);
    let k_min = (-l).max(0);
    let k_max = n2.min(n1 - l);
    if k_max > size_cap {
        return Err(OracleError::CapExceeded { max_k: k_max, cap: size_cap });
    }
    let candidates: BigInt = (k_min..=k_max)
        .map(|k| binomial(n1, k + l) * binomial(n2, k))
        .sum();
    if candidates > BigInt::from(CANDIDATE_LIMIT) {
        return Err(OracleError::InstanceTooLarge {
            candidates: candidates.to_string(),
            limit: CANDIDATE_LIMIT,
        });
    }

    let mut out = HalfPolynomial::zero();
    let one = BigInt::one();
    for k in k_min..=k_max {
        let seconds: Vec<Vec<i64>> = (start.y..=end.y).combinations(k as usize).collect();
        let mut count: u64 = 0;
        for first in (start.x..=end.x).combinations((k + l) as usize) {
            if starred && first.first() != Some(&start.x) {
                continue;
            }
            let bounds: Vec<Option<i64>> = (0..k)
                .map(|s| {
                    let idx = s + d + l;
                    (0..first.len() as i64)
                        .contains(&idx)
                        .then(|| boundary(first[idx as usize]))
                })
                .collect();
            count += seconds
                .iter()
                .filter(|b| b.iter().zip(&bounds).all(|(bs, f)| f.is_none_or(|f| *bs < f)))
                .count() as u64;
        }
        if count > 0 {
            out.add_term(&(&one * count), (2 * k + l) as usize);
        }
    }
    Ok(out)
}

/// All East/North paths from `start` to `end`.
pub fn enumerate_paths(start: LatticePoint, end: LatticePoint) -> Vec<LatticePath> {
    if !start.reaches(end) {
        return Vec::new();
    }
    let (dx, dy) = ((end.x - start.x) as usize, (end.y - start.y) as usize);
    (0..dx + dy)
        .combinations(dy)
        .map(|norths| {
            let mut steps = vec![Step::East; dx + dy];
            for i in norths {
                steps[i] = Step::North;
            }
            LatticePath::new(start, steps)
        })
        .collect()
}

struct Candidate {
    points: Vec<LatticePoint>,
    turns: usize,
}

/// `sum z^NE(P)` over families of pairwise vertex-disjoint paths
/// `A^(i) -> E^(i)` whose NE-turns all lie in the ladder, as a polynomial
/// in `q = z^(1/2)`.
pub fn enumerate_path_families(
    ladder: &LadderFunction,
    starts: &[LatticePoint],
    ends: &[LatticePoint],
) -> Result<HalfPolynomial, OracleError> {
    assert_eq!(starts.len(), ends.len(), "starts and ends differ in length");
    if starts.iter().zip(ends).any(|(a, e)| !a.reaches(*e)) {
        return Ok(HalfPolynomial::zero());
    }
    let too_large = |candidates: BigInt| OracleError::InstanceTooLarge {
        candidates: candidates.to_string(),
        limit: CANDIDATE_LIMIT,
    };

    let mut per_pair = Vec::with_capacity(starts.len());
    for (&a, &e) in starts.iter().zip(ends) {
        let raw = binomial(e.x - a.x + e.y - a.y, e.x - a.x);
        if raw > BigInt::from(CANDIDATE_LIMIT) {
            return Err(too_large(raw));
        }
        let endpoints_inside = ladder.contains(a) && ladder.contains(e);
        let mut kept = Vec::new();
        for path in enumerate_paths(a, e) {
            let turns = ne_turns(&path);
            let turns_inside = turns.iter().all(|&t| ladder.contains(t));
            let points = path.points();
            if endpoints_inside {
                // For upper ladders a path stays inside iff its turns do.
                let path_inside = points.iter().all(|&p| ladder.contains(p));
                assert_eq!(turns_inside, path_inside, "turn criterion failed on {path:?}");
            }
            if turns_inside {
                kept.push(Candidate {
                    points,
                    turns: turns.len(),
                });
            }
        }
        per_pair.push(kept);
    }
    let families: BigInt = per_pair.iter().map(|c| BigInt::from(c.len())).product();
    if families > BigInt::from(CANDIDATE_LIMIT) {
        return Err(too_large(families));
    }

    let mut counts: Vec<u64> = Vec::new();
    let mut used = HashSet::new();
    extend_family(&per_pair, 0, 0, &mut used, &mut counts);
    let mut out = HalfPolynomial::zero();
    for (turns, &c) in counts.iter().enumerate() {
        out.add_term(&BigInt::from(c), 2 * turns);
    }
    Ok(out)
}

fn extend_family(
    per_pair: &[Vec<Candidate>],
    i: usize,
    turns: usize,
    used: &mut HashSet<LatticePoint>,
    counts: &mut Vec<u64>,
) {
    if i == per_pair.len() {
        if counts.len() <= turns {
            counts.resize(turns + 1, 0);
        }
        counts[turns] += 1;
        return;
    }
    for c in &per_pair[i] {
        if c.points.iter().any(|p| used.contains(p)) {
            continue;
        }
        used.extend(c.points.iter().copied());
        extend_family(per_pair, i + 1, turns + c.turns, used, counts);
        for p in &c.points {
            used.remove(p);
        }
    }
}

/// Number of East/North paths between two points, if it fits in a `u64`.
pub fn path_count(start: LatticePoint, end: LatticePoint) -> Option<u64> {
    if !start.reaches(end) {
        return Some(0);
    }
    binomial(end.x - start.x + end.y - start.y, end.x - start.x).to_u64()
}
