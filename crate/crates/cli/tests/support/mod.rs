#![allow(dead_code)]

use std::path::PathBuf;

use ladder_hilbert::{validate_general_endpoints, LadderFunction, LatticePoint};
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn random_ladder(rng: &mut impl Rng, max_a: i64, max_b: i64) -> LadderFunction {
    let a = rng.gen_range(0..=max_a);
    let b = rng.gen_range(0..=max_b);
    let mut values: Vec<i64> = (0..=a).map(|_| rng.gen_range(1..=b + 1)).collect();
    values.sort_unstable();
    LadderFunction::new(a, b, values).unwrap()
}

pub fn inside_points(ladder: &LadderFunction) -> Vec<LatticePoint> {
    (0..=ladder.a())
        .flat_map(|x| (0..ladder.eval(x)).map(move |y| LatticePoint::new(x, y)))
        .collect()
}

/// Random endpoints accepted by `validate_general_endpoints`; mostly with
/// every pair joinable.
pub fn random_endpoints(
    rng: &mut impl Rng,
    ladder: &LadderFunction,
    n: usize,
) -> Option<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    let inside = inside_points(ladder);
    if inside.len() < 2 * n {
        return None;
    }
    for _ in 0..2000 {
        let mut starts: Vec<LatticePoint> = (0..n).map(|_| inside[rng.gen_range(0..inside.len())]).collect();
        let mut ends: Vec<LatticePoint> = (0..n).map(|_| inside[rng.gen_range(0..inside.len())]).collect();
        starts.sort_by_key(|p| (p.x, -p.y));
        ends.sort_by_key(|p| (p.x, -p.y));
        if rng.gen_bool(0.8) && starts.iter().zip(&ends).any(|(a, e)| !a.reaches(*e)) {
            continue;
        }
        if validate_general_endpoints(ladder, &starts, &ends).is_ok() {
            return Some((starts, ends));
        }
    }
    None
}

/// Random `(u, v)` meeting the membership conditions, if any exist.
pub fn random_bivector(rng: &mut impl Rng, ladder: &LadderFunction, max_n: usize) -> Option<(Vec<i64>, Vec<i64>)> {
    let (a, b) = (ladder.a(), ladder.b());
    let u_max = ladder.eval(0);
    let v_max = (0..=a).find(|&x| ladder.eval(x) == b + 1).map(|x| a - x + 1)?;
    let n_max = (u_max.min(v_max) as usize).min(max_n);
    if n_max == 0 {
        return None;
    }
    let n = rng.gen_range(1..=n_max);
    let mut pick = |hi: i64| {
        let mut s: Vec<i64> = rand::seq::index::sample(rng, hi as usize, n)
            .into_iter()
            .map(|i| i as i64 + 1)
            .collect();
        s.sort_unstable();
        s
    };
    let u = pick(u_max);
    let v = pick(v_max);
    Some((u, v))
}
