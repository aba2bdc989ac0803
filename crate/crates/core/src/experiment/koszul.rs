//! Graded Betti numbers of a point set from Koszul homology.
//!
//! `(R/I_X)_m` is identified with the image `W_m` of the evaluation map
//! `R_m -> k^N`. Its basis is the evaluation vectors of the standard
//! monomials (the pivot columns of the evaluation matrix), and
//! multiplication by `x_k` acts coordinate-wise by the `k`-th coordinates of
//! the points. Then `beta[i][j]` is the homology of
//! `Λ^i k^4 ⊗ W_{j-i} -> Λ^{i-1} k^4 ⊗ W_{j-i+1}`.

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ff::PrimeFieldMatrix;
use crate::hilbert::{binomial, HVector};

use super::points::PointSet;

/// Subsets of `{0, 1, 2, 3}` of size `i`, in lexicographic order.
fn subsets(i: usize) -> Vec<Vec<usize>> {
    (0u32..16)
        .filter(|m| m.count_ones() as usize == i)
        .map(|m| (0..4).filter(|k| m >> k & 1 == 1).collect::<Vec<_>>())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// The graded pieces `W_0, ..., W_window` of a point set's coordinate ring.
pub struct CoordinateRing<'a> {
    ps: &'a PointSet,
    /// `bases[m]`: basis vectors of `W_m`, each of length `N`.
    bases: Vec<Vec<Vec<u64>>>,
}

impl<'a> CoordinateRing<'a> {
    pub fn new(ps: &'a PointSet, window: usize) -> Result<Self> {
        if ps.is_empty() {
            return Err(Error::InvalidPointSet("empty point set".into()));
        }
        let bases = (0..=window)
            .map(|m| {
                let eval = ps.evaluation_matrix(m as u32);
                let pivots = eval.rref().pivots;
                pivots
                    .iter()
                    .map(|&c| (0..eval.rows()).map(|r| eval.get(r, c)).collect())
                    .collect()
            })
            .collect();
        Ok(Self { ps, bases })
    }

    /// `H_X(m)` for `m = 0..=window`.
    pub fn hilbert_function(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// The h-vector, or `None` if the Hilbert function has not reached `N`
    /// inside the window.
    pub fn hvector(&self) -> Option<HVector> {
        let hf = self.hilbert_function();
        let stable = hf.iter().position(|&h| h == self.ps.len())?;
        let diffs = (0..=stable)
            .map(|m| hf[m] as i64 - if m == 0 { 0 } else { hf[m - 1] as i64 })
            .collect();
        HVector::new(diffs).ok()
    }

    fn window(&self) -> usize {
        self.bases.len() - 1
    }

    /// Matrix of `d_i` in internal degree `j`, columns indexed by
    /// (subset, basis vector of `W_{j-i}`), rows by (subset, point).
    fn differential(&self, i: usize, j: usize) -> Option<PrimeFieldMatrix> {
        if i == 0 || i > 4 || j < i {
            return None;
        }
        let f = self.ps.field();
        let n = self.ps.len();
        let basis = &self.bases[j - i];
        let sources = subsets(i);
        let targets = subsets(i - 1);
        let cols = sources.len() * basis.len();
        let rows = targets.len() * n;
        if cols == 0 {
            return None;
        }
        let mut data = vec![0u64; rows * cols];
        for (si, s) in sources.iter().enumerate() {
            for l in 0..s.len() {
                let mut t = s.clone();
                let var = t.remove(l);
                let ti = targets.binary_search(&t).expect("face of a subset");
                for (bi, w) in basis.iter().enumerate() {
                    let col = si * basis.len() + bi;
                    for (r, (pt, &wv)) in self.ps.points().iter().zip(w).enumerate() {
                        let v = f.mul(pt[var], wv);
                        let v = if l % 2 == 0 { v } else { f.neg(v) };
                        let idx = (ti * n + r) * cols + col;
                        data[idx] = f.add(data[idx], v);
                    }
                }
            }
        }
        Some(PrimeFieldMatrix::from_data(f, rows, cols, data).expect("dimensions agree"))
    }

    fn rank(&self, i: usize, j: usize) -> usize {
        self.differential(i, j).map_or(0, |m| m.rank())
    }

    /// The graded Betti table of `R/I_X` in internal degrees `0..=window`.
    ///
    /// Fails if the window is too small to contain every nonzero entry, or
    /// if a fourth syzygy shows up.
    pub fn betti(&self) -> Result<BettiTable> {
        let window = self.window();
        let hf = self.hilbert_function();
        if window < 3 || hf[window - 3] != self.ps.len() {
            return Err(Error::WindowTooSmall(window));
        }
        let mut table = BettiTable::zero();
        for j in 0..=window {
            let ranks: Vec<usize> = (0..=5).map(|i| self.rank(i, j)).collect();
            for i in 0..=4.min(j) {
                let dim = binomial(4, i as i64) as usize * hf[j - i];
                let beta = dim - ranks[i] - ranks[i + 1];
                if beta == 0 {
                    continue;
                }
                if i == 4 {
                    return Err(Error::ProjectiveDimension(j));
                }
                table.set(i, j, beta as u64);
            }
        }
        Ok(table)
    }
}

/// Betti table of `R/I_X`, computing the coordinate ring up to degree `window`.
/// The window must be at least the socle degree plus 3.
pub fn graded_betti(ps: &PointSet, window: usize) -> Result<BettiTable> {
    CoordinateRing::new(ps, window)?.betti()
}
