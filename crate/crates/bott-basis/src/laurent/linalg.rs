//! Exact linear algebra over the rationals: reduced row echelon form,
//! rank, null spaces and subspace sums, all deterministic (leftmost pivot,
//! topmost row).

use super::Rat;
use num::{One, Zero};

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> RationalMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// In-place reduced row echelon form; returns the pivot columns in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let Some(p) = pivot_row else { continue };
            self.swap_rows(row, p);
            let inv = {
                let v = self.at(row, col).clone();
                v.recip()
            };
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = self.at(r, c) - &(self.at(row, c) * &factor);
                        *self.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A reduced basis of the null space `{x : Mx = 0}`, one vector per free
    /// column, free columns in ascending order.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Reduced (RREF) basis of the span of `vectors` inside Q^dim.
pub fn row_space(vectors: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    for v in vectors {
        assert_eq!(v.len(), dim, "vector length mismatch");
    }
    let mut m = RationalMatrix::from_rows(vectors.to_vec());
    let pivots = m.rref();
    (0..pivots.len()).map(|r| m.row(r).to_vec()).collect()
}

/// Reduced basis of the sum of the given subspaces of Q^dim.
pub fn subspace_sum(bases: &[Vec<Vec<Rat>>], dim: usize) -> Vec<Vec<Rat>> {
    let all: Vec<Vec<Rat>> = bases.iter().flatten().cloned().collect();
    row_space(&all, dim)
}

/// Whether `v` lies in the span of an RREF basis (reduce and test zero).
pub fn in_row_space(rref_basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    let mut v = v.to_vec();
    reduce_against(rref_basis, &mut v);
    v.iter().all(Rat::is_zero)
}

/// Subtract multiples of the RREF rows to clear their pivot positions in `v`.
pub fn reduce_against(rref_basis: &[Vec<Rat>], v: &mut [Rat]) {
    for row in rref_basis {
        let pivot = row.iter().position(|x| !x.is_zero());
        let Some(p) = pivot else { continue };
        if !v[p].is_zero() {
            let factor = v[p].clone();
            for (x, y) in v.iter_mut().zip(row.iter()) {
                *x -= y * &factor;
            }
        }
    }
}

/// `sub` is contained in `sup` (both arbitrary bases of subspaces of Q^dim).
pub fn subspace_contained(sub: &[Vec<Rat>], sup: &[Vec<Rat>], dim: usize) -> bool {
    let sup_rref = row_space(sup, dim);
    sub.iter().all(|v| in_row_space(&sup_rref, v))
}
