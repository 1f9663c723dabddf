//! Seifert matrices of braid closures and the exact link signature.
//!
//! The closure of a braid bounds the surface made of one disk per strand
//! joined by one twisted band per crossing. A homology basis is given by one
//! loop for each pair of height-consecutive crossings in the same column;
//! the Seifert pairing of these loops has a closed combinatorial form:
//!
//! * a loop against itself: −(ε₁ + ε₂)/2 for the signs of its two crossings;
//! * consecutive loops in one column, sharing a crossing of sign ε:
//!   the upper loop links the pushed-off lower loop once when ε = +1, the
//!   lower links the pushed-off upper once (negatively) when ε = −1;
//! * loops in adjacent columns whose height windows interleave: a single
//!   linking whose sign depends on which window opens first.
//!
//! Loops in the same column with disjoint windows, or in columns at distance
//! two or more, never link. Columns without crossings split the matrix into
//! blocks, matching the additivity of the signature under split unions.
//!
//! The signature convention is fixed so that the closure of σ1³ (the
//! right-handed trefoil) has signature +2.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::linalg::signature_symmetric;
use crate::{Int, Rational};

/// Seifert pairing matrix of the braid-closure surface in the column-loop basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<Int>>,
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Int>] {
        &self.entries
    }

    /// The symmetrized pairing V + Vᵀ.
    pub fn symmetrized(&self) -> Vec<Vec<Int>> {
        let r = self.size();
        let mut out = vec![vec![Int::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                out[i][j] = &self.entries[i][j] + &self.entries[j][i];
            }
        }
        out
    }

    /// The antisymmetrized pairing V − Vᵀ (the surface intersection form).
    pub fn antisymmetrized(&self) -> Vec<Vec<Int>> {
        let r = self.size();
        let mut out = vec![vec![Int::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                out[i][j] = &self.entries[i][j] - &self.entries[j][i];
            }
        }
        out
    }
}

impl Serialize for SeifertMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SeifertMatrix", 2)?;
        st.serialize_field("size", &self.size())?;
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

/// Builds the Seifert matrix of the closure of `w` in the column-loop basis.
pub fn seifert_matrix(w: &BraidWord) -> SeifertMatrix {
    // Loops per column: one for each pair of consecutive crossings.
    // A loop is recorded as (column, upper height, lower height, upper sign,
    // lower sign).
    struct Loop {
        column: usize,
        top: usize,
        bottom: usize,
        sign_top: i64,
        sign_bottom: i64,
    }

    let n = w.strands();
    let mut per_column: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n.saturating_sub(1)];
    for (height, &e) in w.letters().iter().enumerate() {
        per_column[e.unsigned_abs() as usize - 1].push((height, e.signum() as i64));
    }

    let mut loops: Vec<Loop> = Vec::new();
    for (column, crossings) in per_column.iter().enumerate() {
        for pair in crossings.windows(2) {
            loops.push(Loop {
                column,
                top: pair[0].0,
                bottom: pair[1].0,
                sign_top: pair[0].1,
                sign_bottom: pair[1].1,
            });
        }
    }

    let r = loops.len();
    let mut m = vec![vec![Int::zero(); r]; r];
    for i in 0..r {
        m[i][i] = Int::from(-(loops[i].sign_top + loops[i].sign_bottom) / 2);
        for j in i + 1..r {
            let (a, b) = (&loops[i], &loops[j]);
            if a.column == b.column {
                // Loops are listed top to bottom per column; only consecutive
                // ones share a crossing.
                if a.bottom == b.top {
                    if a.sign_bottom > 0 {
                        m[i][j] = Int::from(1);
                    } else {
                        m[j][i] = Int::from(-1);
                    }
                }
            } else if b.column == a.column + 1 {
                if a.top < b.top && b.top < a.bottom && a.bottom < b.bottom {
                    m[i][j] = Int::from(-1);
                } else if b.top < a.top && a.top < b.bottom && b.bottom < a.bottom {
                    m[j][i] = Int::from(1);
                }
            }
        }
    }
    SeifertMatrix { entries: m }
}

/// Signature of a symmetric integer matrix, computed exactly by congruence
/// diagonalization over the rationals.
pub fn symmetric_signature(m: &[Vec<Int>]) -> Result<i64> {
    let rows = m.len();
    for row in m {
        if row.len() != rows {
            return Err(Error::NonSquareMatrix { rows, cols: row.len() });
        }
    }
    for i in 0..rows {
        for j in i + 1..rows {
            if m[i][j] != m[j][i] {
                return Err(Error::NonSymmetricMatrix(i, j));
            }
        }
    }
    let rational: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    Ok(signature_symmetric(rational))
}

/// Link signature of the closure of `w`, normalized so that the closure of
/// σ1³ has signature +2: the negative of the signature of V + Vᵀ.
pub fn link_signature(w: &BraidWord) -> i64 {
    let v = seifert_matrix(w);
    -symmetric_signature(&v.symmetrized()).expect("symmetrization is symmetric")
}

/// Determinant of an integer matrix, exact. Used by small structural checks.
pub fn determinant(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::from(1);
    }
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let mut det = Rational::from_integer(1.into());
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Int::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col].clone();
        let inv = a[col][col].clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / inv.clone();
            for c in col..n {
                let delta = f.clone() * a[col][c].clone();
                a[r][c] -= delta;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Convenience: |det(V + Vᵀ)| of the closure, the link determinant.
pub fn link_determinant(w: &BraidWord) -> Int {
    determinant(&seifert_matrix(w).symmetrized()).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{delta_braid, parse_braid};

    fn int_to_i64(x: &Int) -> i64 {
        x.to_i64().expect("value fits in i64")
    }

    fn braid(text: &str, n: usize) -> BraidWord {
        parse_braid(text, Some(n)).unwrap()
    }

    #[test]
    fn trefoil_matrix() {
        let v = seifert_matrix(&braid("1 1 1", 2));
        assert_eq!(v.size(), 2);
        let e: Vec<Vec<i64>> = v
            .entries()
            .iter()
            .map(|r| r.iter().map(int_to_i64).collect())
            .collect();
        assert_eq!(e, vec![vec![-1, 1], vec![0, -1]]);
        assert_eq!(link_signature(&braid("1 1 1", 2)), 2);
    }

    #[test]
    fn hopf_and_unknot() {
        let hopf = seifert_matrix(&braid("1 1", 2));
        assert_eq!(hopf.size(), 1);
        assert_eq!(link_determinant(&braid("1 1", 2)), Int::from(2));
        assert_eq!(link_signature(&braid("1 1", 2)), 1);

        let unknot = seifert_matrix(&braid("1", 2));
        assert_eq!(unknot.size(), 0);
        assert_eq!(link_signature(&braid("1", 2)), 0);
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let fig8 = braid("1 -2 1 -2", 3);
        assert_eq!(link_signature(&fig8), 0);
        assert_eq!(link_determinant(&fig8), Int::from(5));
        assert_eq!(link_signature(&fig8.mirror()), 0);
    }

    #[test]
    fn torus_knot_signatures() {
        // (2, q) torus links: signature q − 1 in this convention.
        for q in 2..=10 {
            let w = braid("1", 2).power(q);
            assert_eq!(link_signature(&w), q - 1, "T(2,{q})");
        }
        // T(3,4) is 8_19 with signature 6; computed in two braid groups.
        let t34 = braid("1 2", 3).power(4);
        assert_eq!(link_signature(&t34), 6);
        let t43 = braid("1 2 3", 4).power(3);
        assert_eq!(link_signature(&t43), 6);
        // T(3,2) is the trefoil again.
        let t32 = braid("1 2", 3).power(2);
        assert_eq!(link_signature(&t32), 2);
    }

    #[test]
    fn mirror_antisymmetry() {
        for text in ["1 1 1", "1 2 1 2", "1 -2 1 1 -2", "1 2 -3 2 1 3"] {
            let w = parse_braid(text, None).unwrap();
            assert_eq!(link_signature(&w.mirror()), -link_signature(&w), "{text}");
        }
    }

    #[test]
    fn split_additivity() {
        // σ1³ and σ3³ in B4 close to a split union of two trefoils.
        let both = braid("1 1 1 3 3 3", 4);
        assert_eq!(link_signature(&both), 4);
        let v = seifert_matrix(&both);
        // Block diagonal: no interaction between columns 0 and 2.
        for i in 0..2 {
            for j in 2..4 {
                assert!(v.entries()[i][j].is_zero());
                assert!(v.entries()[j][i].is_zero());
            }
        }
    }

    #[test]
    fn intersection_form_is_unimodular_for_knots() {
        for (text, n) in [("1 1 1", 2), ("1 -2 1 -2", 3), ("1 2 1 2", 3)] {
            let w = braid(text, n);
            assert_eq!(w.closure_component_count(), 1);
            let a = seifert_matrix(&w).antisymmetrized();
            assert_eq!(determinant(&a).abs(), Int::from(1), "{text}");
        }
    }

    #[test]
    fn symmetrized_det_nonzero_for_knots() {
        for (text, n) in [("1 1 1", 2), ("1 -2 1 -2", 3), ("1 2 1 2", 3), ("-1 -1 -1 -1 -1", 2)] {
            let w = braid(text, n);
            assert!(!link_determinant(&w).is_zero(), "{text}");
        }
    }

    #[test]
    fn full_twist_signature_ratio() {
        // σ(Δ_2^l) = 2l − 1 exactly.
        for l in 1..=6 {
            let w = delta_braid(2).unwrap().power(l);
            assert_eq!(link_signature(&w), 2 * l - 1);
        }
    }

    #[test]
    fn rejects_asymmetric_input() {
        let bad = vec![
            vec![Int::from(0), Int::from(1)],
            vec![Int::from(2), Int::from(0)],
        ];
        assert!(matches!(
            symmetric_signature(&bad),
            Err(Error::NonSymmetricMatrix(0, 1))
        ));
        assert_eq!(symmetric_signature(&[]).unwrap(), 0);
    }
}
