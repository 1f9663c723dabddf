//! Closed-braid link diagrams and their elementary diagram invariants.
//!
//! A braid word on `n` strands closes to an oriented link diagram with one
//! crossing per letter. Crossings are addressed by (column, height): column
//! `p` sits between strand positions `p` and `p+1` (0-based), heights follow
//! the word from top to bottom. Arcs of the projection are the horizontal
//! slices between consecutive crossing heights, wrapping around the closure:
//! arc `(k, j)` is the piece of strand at position `j` on level `k`.

use crate::braid::{BraidWord, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// +1 for σ, −1 for σ⁻¹.
    pub sign: i8,
    /// 0-based column: the crossing involves positions column, column+1.
    pub column: usize,
    /// Position of the crossing in the word, top to bottom.
    pub height: usize,
}

/// An oriented diagram of a braid closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    strands: usize,
    crossings: Vec<Crossing>,
}

impl LinkDiagram {
    /// Diagram of the natural closure of the braid word.
    pub fn from_braid(w: &BraidWord) -> Self {
        let crossings = w
            .letters()
            .iter()
            .enumerate()
            .map(|(height, &e)| Crossing {
                sign: e.signum() as i8,
                column: e.unsigned_abs() as usize - 1,
                height,
            })
            .collect();
        LinkDiagram { strands: w.strands(), crossings }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn positive_crossings(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign > 0).count()
    }

    pub fn negative_crossings(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign < 0).count()
    }

    /// Number of circles produced by smoothing every crossing along the
    /// orientation. For braid closures this always equals the strand count;
    /// it is nevertheless computed honestly from the arc structure.
    pub fn seifert_circle_count(&self) -> usize {
        let c = self.crossing_count();
        if c == 0 {
            return self.strands;
        }
        let n = self.strands;
        let mut uf = UnionFind::new(c * n);
        for k in 0..c {
            let next = (k + 1) % c;
            for j in 0..n {
                uf.union(k * n + j, next * n + j);
            }
        }
        uf.component_count()
    }

    /// Number of components of the closed-up link.
    pub fn component_count(&self) -> usize {
        let mut p = Permutation::identity(self.strands);
        for cr in &self.crossings {
            p = p.then_transposition(cr.column);
        }
        p.cycle_count()
    }

    /// The interval [1 + w − o, −1 + w + o] that the Rasmussen invariant of
    /// the closure is confined to, from the writhe and Seifert circle count.
    pub fn rasmussen_bounds(&self) -> (i64, i64) {
        let w = self.writhe();
        let o = self.seifert_circle_count() as i64;
        (1 + w - o, -1 + w + o)
    }

    /// Text export, one crossing per line: sign then the four arc labels
    /// around the crossing (upper-left, upper-right, lower-left, lower-right).
    /// Arc `(k, j)` carries label `k·n + j + 1`.
    pub fn pd_text(&self) -> String {
        let n = self.strands;
        let c = self.crossing_count();
        let mut out = String::new();
        for cr in &self.crossings {
            let k = cr.height;
            let next = (k + 1) % c;
            let label = |lev: usize, j: usize| lev * n + j + 1;
            out.push_str(&format!(
                "{} {} {} {} {}\n",
                if cr.sign > 0 { "+" } else { "-" },
                label(k, cr.column),
                label(k, cr.column + 1),
                label(next, cr.column),
                label(next, cr.column + 1),
            ));
        }
        out
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub fn component_count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    #[test]
    fn closure_diagrams() {
        let trefoil = LinkDiagram::from_braid(&parse_braid("1 1 1", Some(2)).unwrap());
        assert_eq!(trefoil.crossing_count(), 3);
        assert_eq!(trefoil.writhe(), 3);
        assert_eq!(trefoil.seifert_circle_count(), 2);

        let id3 = LinkDiagram::from_braid(&parse_braid("", Some(3)).unwrap());
        assert_eq!(id3.crossing_count(), 0);
        assert_eq!(id3.seifert_circle_count(), 3);
        assert_eq!(id3.writhe(), 0);

        let mixed = LinkDiagram::from_braid(&parse_braid("1 -2", Some(3)).unwrap());
        assert_eq!(mixed.writhe(), 0);
        assert_eq!(mixed.crossing_count(), 2);

        let d3 = LinkDiagram::from_braid(&crate::braid::delta_braid(3).unwrap());
        assert_eq!(d3.writhe(), 6);
        assert_eq!(d3.seifert_circle_count(), 3);
    }

    #[test]
    fn bounds_from_writhe_and_circles() {
        let trefoil = LinkDiagram::from_braid(&parse_braid("1 1 1", Some(2)).unwrap());
        assert_eq!(trefoil.rasmussen_bounds(), (2, 4));

        let unknot = LinkDiagram::from_braid(&parse_braid("1", Some(2)).unwrap());
        assert_eq!(unknot.rasmussen_bounds(), (0, 2));

        let mirror = LinkDiagram::from_braid(&parse_braid("-1 -1 -1", Some(2)).unwrap());
        assert_eq!(mirror.rasmussen_bounds(), (-4, -2));
    }

    #[test]
    fn pd_export_is_stable() {
        let d = LinkDiagram::from_braid(&parse_braid("1 -2", Some(3)).unwrap());
        assert_eq!(d.pd_text(), "+ 1 2 4 5\n- 5 6 2 3\n");
    }
}
