//! Exact linear algebra over a generic field scalar.
//!
//! Everything here is scalar-type-agnostic via `num-traits`; production code
//! instantiates with [`crate::Rational`] so no rounding ever occurs.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_traits::{Num, Signed};

/// Field-like scalar with exact arithmetic semantics.
pub trait Scalar: Num + Signed + Clone + PartialEq + Debug {}
impl<T: Num + Signed + Clone + PartialEq + Debug> Scalar for T {}

/// Sparse vector: index/value pairs sorted by index, values nonzero.
pub type SparseVec<T> = Vec<(u32, T)>;

/// `target += coeff * other`, keeping the sparse representation normalized.
pub fn add_scaled<T: Scalar>(target: &SparseVec<T>, coeff: &T, other: &SparseVec<T>) -> SparseVec<T> {
    let mut out = Vec::with_capacity(target.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < other.len() {
        match (target.get(i), other.get(j)) {
            (Some((ti, tv)), Some((oi, _))) if ti < oi => {
                out.push((*ti, tv.clone()));
                i += 1;
            }
            (Some((ti, _)), Some((oi, ov))) if oi < ti => {
                out.push((*oi, coeff.clone() * ov.clone()));
                j += 1;
            }
            (Some((ti, tv)), Some((_, ov))) => {
                let v = tv.clone() + coeff.clone() * ov.clone();
                if !v.is_zero() {
                    out.push((*ti, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ti, tv)), None) => {
                out.push((*ti, tv.clone()));
                i += 1;
            }
            (None, Some((oi, ov))) => {
                out.push((*oi, coeff.clone() * ov.clone()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Column echelon basis of a subspace. Each stored column is normalized to
/// have leading coefficient 1 at its pivot (its minimal index), and pivots
/// are pairwise distinct.
#[derive(Debug, Clone, Default)]
pub struct Echelon<T> {
    cols: BTreeMap<u32, SparseVec<T>>,
}

impl<T: Scalar> Echelon<T> {
    pub fn new() -> Self {
        Echelon { cols: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    /// Reduces `v` against the basis (leading entries only) and inserts the
    /// remainder if nonzero. Returns true when the rank grew.
    pub fn insert(&mut self, mut v: SparseVec<T>) -> bool {
        loop {
            let Some((head, coeff)) = v.first().cloned() else {
                return false;
            };
            match self.cols.get(&head) {
                Some(col) => {
                    let factor = -coeff;
                    v = add_scaled(&v, &factor, col);
                }
                None => {
                    let inv = T::one() / coeff;
                    let normalized = v
                        .into_iter()
                        .map(|(i, x)| (i, x * inv.clone()))
                        .collect();
                    self.cols.insert(head, normalized);
                    return true;
                }
            }
        }
    }

    /// Full normal form of `v` modulo the subspace: eliminates every entry
    /// sitting at a pivot index. The result is the unique representative of
    /// `v` supported away from the pivots, and depends linearly on `v`.
    pub fn normal_form(&self, mut v: SparseVec<T>) -> SparseVec<T> {
        let mut k = 0;
        while k < v.len() {
            let (idx, coeff) = v[k].clone();
            match self.cols.get(&idx) {
                Some(col) => {
                    let factor = -coeff;
                    v = add_scaled(&v, &factor, col);
                    // Entries below k are untouched: col starts at idx.
                }
                None => k += 1,
            }
        }
        v
    }
}

/// Rank of a collection of sparse columns.
pub fn rank_of_columns<T: Scalar, I: IntoIterator<Item = SparseVec<T>>>(cols: I) -> usize {
    let mut ech = Echelon::new();
    for c in cols {
        ech.insert(c);
    }
    ech.rank()
}

/// Signature of a symmetric matrix by congruence diagonalization: the number
/// of positive minus the number of negative diagonal entries after clearing.
/// Off-diagonal pivots are handled as hyperbolic 2×2 blocks, which contribute
/// zero. The caller guarantees symmetry.
pub fn signature_symmetric<T: Scalar>(mut m: Vec<Vec<T>>) -> i64 {
    let n = m.len();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut signature = 0i64;

    while !alive.is_empty() {
        // Diagonal pivot, preferring the first live index to keep banded
        // matrices banded.
        if let Some(pos) = alive.iter().position(|&r| !m[r][r].is_zero()) {
            let r = alive.remove(pos);
            let d = m[r][r].clone();
            signature += if d.is_positive() { 1 } else { -1 };
            let support: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&k| !m[k][r].is_zero())
                .collect();
            for &k in &support {
                let f = m[k][r].clone() / d.clone();
                for &l in &support {
                    let delta = f.clone() * m[r][l].clone();
                    m[k][l] = m[k][l].clone() - delta;
                }
                m[k][r] = T::zero();
                m[r][k] = T::zero();
            }
            continue;
        }

        // All live diagonal entries are zero; look for a hyperbolic block.
        let mut block = None;
        'search: for (pi, &i) in alive.iter().enumerate() {
            for (pj, &j) in alive.iter().enumerate().skip(pi + 1) {
                if !m[i][j].is_zero() {
                    block = Some((pi, pj, i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj, i, j)) = block else {
            break; // The remaining block is zero and contributes nothing.
        };
        alive.remove(pj);
        alive.remove(pi);
        let a = m[i][j].clone();
        let support: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&k| !m[k][i].is_zero() || !m[k][j].is_zero())
            .collect();
        for &k in &support {
            let fi = m[k][j].clone() / a.clone();
            let fj = m[k][i].clone() / a.clone();
            for &l in &support {
                let delta = fi.clone() * m[i][l].clone() + fj.clone() * m[j][l].clone();
                m[k][l] = m[k][l].clone() - delta;
            }
            m[k][i] = T::zero();
            m[i][k] = T::zero();
            m[k][j] = T::zero();
            m[j][k] = T::zero();
        }
        // Hyperbolic pair: +1 and −1.
    }
    signature
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_rational::Ratio;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn echelon_rank_and_normal_form() {
        let mut e: Echelon<Ratio<i64>> = Echelon::new();
        let r = |x: i64| Ratio::from_integer(x);
        assert!(e.insert(vec![(0, r(1)), (2, r(2))]));
        assert!(e.insert(vec![(1, r(3))]));
        assert!(!e.insert(vec![(0, r(2)), (1, r(3)), (2, r(4))]));
        assert_eq!(e.rank(), 2);

        let nf = e.normal_form(vec![(0, r(1)), (1, r(1)), (3, r(5))]);
        assert_eq!(nf, vec![(2, r(-2)), (3, r(5))]);

        // Normal form is linear.
        let a = vec![(0, r(1)), (3, r(1))];
        let b = vec![(1, r(2)), (2, r(7))];
        let sum = add_scaled(&a, &r(3), &b);
        let lhs = e.normal_form(sum);
        let rhs = add_scaled(&e.normal_form(a), &r(3), &e.normal_form(b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn signature_small_cases() {
        let neg = vec![vec![q(-2), q(1)], vec![q(1), q(-2)]];
        assert_eq!(signature_symmetric(neg), -2);

        let hyperbolic = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(signature_symmetric(hyperbolic), 0);

        let empty: Vec<Vec<Rational>> = Vec::new();
        assert_eq!(signature_symmetric(empty), 0);

        let mixed = vec![
            vec![q(1), q(0), q(0)],
            vec![q(0), q(0), q(3)],
            vec![q(0), q(3), q(0)],
        ];
        assert_eq!(signature_symmetric(mixed), 1);
    }

    #[test]
    fn signature_congruence_invariance() {
        // σ(UᵀMU) = σ(M) for invertible U.
        let m = vec![
            vec![q(2), q(1), q(0)],
            vec![q(1), q(-3), q(4)],
            vec![q(0), q(4), q(1)],
        ];
        let u = vec![
            vec![q(1), q(2), q(0)],
            vec![q(0), q(1), q(-5)],
            vec![q(3), q(0), q(1)],
        ];
        let mut conj = vec![vec![q(0); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = q(0);
                for k in 0..3 {
                    for l in 0..3 {
                        acc += u[k][i].clone() * m[k][l].clone() * u[l][j].clone();
                    }
                }
                conj[i][j] = acc;
            }
        }
        assert_eq!(signature_symmetric(m.clone()), signature_symmetric(conj));
    }
}
