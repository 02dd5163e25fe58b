#![allow(dead_code)]

use ladder_hilbert::{validate_general_endpoints, Bivector, LadderFunction, LatticePoint};
use rand::Rng;

pub fn sample_ladder() -> LadderFunction {
    LadderFunction::new(13, 15, vec![7, 7, 7, 7, 10, 11, 12, 13, 16, 16, 16, 16, 16, 16]).unwrap()
}

pub fn sample_bivector() -> Bivector {
    Bivector::new(vec![1, 2, 4, 6], vec![1, 2, 3, 6]).unwrap()
}

pub const WORKED_NUMERATOR: [&str; 32] = [
    "1",
    "71",
    "2556",
    "61832",
    "1115762",
    "15750005",
    "178390279",
    "1647137174",
    "12534233703",
    "79245271879",
    "418852424787",
    "1859941402206",
    "6965987806143",
    "22071622313567",
    "59298706514083",
    "135299444287353",
    "262400571075662",
    "432640455645309",
    "606103694379729",
    "720535170430557",
    "725289798304502",
    "616230022969392",
    "439998448014899",
    "262469031030333",
    "129776697745621",
    "52622863698472",
    "17241967478923",
    "4468021840695",
    "885721405230",
    "126901720400",
    "11760999250",
    "532021875",
];

pub fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

/// A random upper ladder with `a <= max_a`, `b <= max_b`.
pub fn random_ladder(rng: &mut impl Rng, max_a: i64, max_b: i64) -> LadderFunction {
    let a = rng.gen_range(0..=max_a);
    let b = rng.gen_range(0..=max_b);
    let mut values: Vec<i64> = (0..=a).map(|_| rng.gen_range(1..=b + 1)).collect();
    values.sort_unstable();
    LadderFunction::new(a, b, values).unwrap()
}

/// A random bivector satisfying the membership conditions, if one exists.
pub fn random_bivector(rng: &mut impl Rng, ladder: &LadderFunction, max_n: usize) -> Option<Bivector> {
    let (a, b) = (ladder.a(), ladder.b());
    let u_max = ladder.eval(0);
    // v_n <= v_max iff column a - v_n + 1 reaches the top row.
    let v_max = (0..=a)
        .find(|&x| ladder.eval(x) == b + 1)
        .map(|x| a - x + 1)?;
    let n_max = (u_max.min(v_max) as usize).min(max_n);
    if n_max == 0 {
        return None;
    }
    let n = rng.gen_range(1..=n_max);
    let pick = |rng: &mut dyn rand::RngCore, hi: i64| {
        let mut s = rand::seq::index::sample(rng, hi as usize, n)
            .into_iter()
            .map(|i| i as i64 + 1)
            .collect::<Vec<_>>();
        s.sort_unstable();
        s
    };
    let u = pick(rng, u_max);
    let v = pick(rng, v_max);
    Some(Bivector::new(u, v).unwrap())
}

/// Random starting and end points accepted by `validate_general_endpoints`.
pub fn random_endpoints(
    rng: &mut impl Rng,
    ladder: &LadderFunction,
    n: usize,
) -> Option<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    let inside: Vec<LatticePoint> = (0..=ladder.a())
        .flat_map(|x| (0..ladder.eval(x)).map(move |y| pt(x, y)))
        .collect();
    if inside.len() < 2 * n {
        return None;
    }
    for _ in 0..2000 {
        let mut starts: Vec<LatticePoint> = (0..n).map(|_| inside[rng.gen_range(0..inside.len())]).collect();
        let mut ends: Vec<LatticePoint> = (0..n).map(|_| inside[rng.gen_range(0..inside.len())]).collect();
        starts.sort_by_key(|p| (p.x, -p.y));
        ends.sort_by_key(|p| (p.x, -p.y));
        // Mostly keep reachable pairs so that families exist.
        if rng.gen_bool(0.8) && starts.iter().zip(&ends).any(|(a, e)| !a.reaches(*e)) {
            continue;
        }
        if validate_general_endpoints(ladder, &starts, &ends).is_ok() {
            return Some((starts, ends));
        }
    }
    None
}
