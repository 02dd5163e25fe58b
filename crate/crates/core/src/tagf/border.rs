use crate::model::LadderFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PieceKind {
    /// `f` is constant, equal to `level`.
    Horizontal,
    /// `f(x) = x + level + 1`.
    Diagonal,
}

/// A run of columns `x_lo + 1 ..= x_hi` on which the boundary is either flat
/// or a unit staircase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BorderPiece {
    pub x_lo: i64,
    pub x_hi: i64,
    pub kind: PieceKind,
    pub level: i64,
}

impl BorderPiece {
    pub fn contains(&self, x: i64) -> bool {
        self.x_lo < x && x <= self.x_hi
    }

    /// The boundary value the piece prescribes at column `x`.
    pub fn eval(&self, x: i64) -> i64 {
        match self.kind {
            PieceKind::Horizontal => self.level,
            PieceKind::Diagonal => x + self.level + 1,
        }
    }
}

/// Splits the boundary into maximal horizontal and diagonal runs, scanning
/// left to right. Single columns that start neither kind of run count as
/// horizontal.
pub fn partition_border(ladder: &LadderFunction) -> Vec<BorderPiece> {
    let f = ladder.values();
    let a = f.len() - 1;
    let mut pieces = Vec::new();
    let mut x = 0;
    while x <= a {
        let mut y = x;
        let piece = if x < a && f[x + 1] == f[x] {
            while y < a && f[y + 1] == f[y] {
                y += 1;
            }
            (PieceKind::Horizontal, f[x])
        } else if x < a && f[x + 1] == f[x] + 1 {
            while y < a && f[y + 1] == f[y] + 1 {
                y += 1;
            }
            (PieceKind::Diagonal, f[x] - x as i64 - 1)
        } else {
            (PieceKind::Horizontal, f[x])
        };
        pieces.push(BorderPiece {
            x_lo: x as i64 - 1,
            x_hi: y as i64,
            kind: piece.0,
            level: piece.1,
        });
        x = y + 1;
    }
    pieces
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_ladder_has_three_pieces() {
        let l = LadderFunction::new(13, 15, vec![7, 7, 7, 7, 10, 11, 12, 13, 16, 16, 16, 16, 16, 16])
            .unwrap();
        let p = partition_border(&l);
        assert_eq!(
            p,
            vec![
                BorderPiece { x_lo: -1, x_hi: 3, kind: PieceKind::Horizontal, level: 7 },
                BorderPiece { x_lo: 3, x_hi: 7, kind: PieceKind::Diagonal, level: 5 },
                BorderPiece { x_lo: 7, x_hi: 13, kind: PieceKind::Horizontal, level: 16 },
            ]
        );
    }

    #[test]
    fn simple_shapes() {
        let l = LadderFunction::trivial(4, 2).unwrap();
        assert_eq!(partition_border(&l).len(), 1);
        let l = LadderFunction::new(2, 2, vec![1, 2, 3]).unwrap();
        assert_eq!(
            partition_border(&l),
            vec![BorderPiece { x_lo: -1, x_hi: 2, kind: PieceKind::Diagonal, level: 0 }]
        );
        let l = LadderFunction::new(0, 0, vec![1]).unwrap();
        assert_eq!(
            partition_border(&l),
            vec![BorderPiece { x_lo: -1, x_hi: 0, kind: PieceKind::Horizontal, level: 1 }]
        );
        // Jumps larger than one separate pieces.
        let l = LadderFunction::new(2, 6, vec![1, 4, 7]).unwrap();
        assert_eq!(partition_border(&l).len(), 3);
    }

    #[test]
    fn pieces_tile_and_match() {
        let l = LadderFunction::new(7, 9, vec![2, 2, 3, 4, 4, 7, 8, 10]).unwrap();
        let p = partition_border(&l);
        assert_eq!(p[0].x_lo, -1);
        assert_eq!(p.last().unwrap().x_hi, 7);
        for w in p.windows(2) {
            assert_eq!(w[0].x_hi, w[1].x_lo);
        }
        for piece in &p {
            for x in piece.x_lo + 1..=piece.x_hi {
                assert_eq!(piece.eval(x), l.eval(x));
            }
        }
    }
}
