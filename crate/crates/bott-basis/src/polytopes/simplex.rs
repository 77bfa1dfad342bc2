//! A small exact simplex solver over the rationals, two-phase with Bland's
//! rule. Solves `max c·x` subject to `Ax = b`, `x ≥ 0`. Only the optimal
//! value is needed by the polytope routines.

use crate::laurent::Rat;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal(Rat),
    Infeasible,
    Unbounded,
}

struct Tableau {
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    basis: Vec<usize>,
    obj: Vec<Rat>,
    obj_val: Rat,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].clone().recip();
        for x in self.a[row].iter_mut() {
            *x *= &inv;
        }
        self.b[row] *= &inv;
        for r in 0..self.a.len() {
            if r != row && !self.a[r][col].is_zero() {
                let f = self.a[r][col].clone();
                for c in 0..self.a[r].len() {
                    let delta = &self.a[row][c] * &f;
                    self.a[r][c] -= delta;
                }
                let delta = &self.b[row] * &f;
                self.b[r] -= delta;
            }
        }
        if !self.obj[col].is_zero() {
            let f = self.obj[col].clone();
            for c in 0..self.obj.len() {
                let delta = &self.a[row][c] * &f;
                self.obj[c] -= delta;
            }
            let delta = &self.b[row] * &f;
            self.obj_val += delta;
        }
        self.basis[row] = col;
    }

    /// Run simplex iterations with Bland's rule until optimal or unbounded.
    fn optimise(&mut self, allowed_cols: usize) -> bool {
        loop {
            let entering = (0..allowed_cols).find(|&j| self.obj[j].is_positive());
            let Some(e) = entering else { return true };
            let mut leaving: Option<(usize, Rat)> = None;
            for r in 0..self.a.len() {
                if self.a[r][e].is_positive() {
                    let ratio = &self.b[r] / &self.a[r][e];
                    let better = match &leaving {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio
                                || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leaving = Some((r, ratio));
                    }
                }
            }
            match leaving {
                Some((r, _)) => self.pivot(r, e),
                None => return false,
            }
        }
    }
}

/// `max c·x : Ax = b, x ≥ 0` by the two-phase method.
pub fn lp_max(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let mut rows: Vec<Vec<Rat>> = a.to_vec();
    let mut rhs: Vec<Rat> = b.to_vec();
    for (row, v) in rows.iter_mut().zip(rhs.iter_mut()) {
        if v.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            *v = -v.clone();
        }
    }
    // phase 1: artificial identity block, objective = -(sum of artificials)
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..m {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
    }
    let basis: Vec<usize> = (n..n + m).collect();
    // reduced costs with the artificial basis: column sums over the rows
    let mut obj: Vec<Rat> = (0..n + m)
        .map(|j| {
            if j < n {
                rows.iter().map(|r| r[j].clone()).sum()
            } else {
                Rat::zero()
            }
        })
        .collect();
    let obj_val: Rat = -rhs.iter().cloned().sum::<Rat>();
    let mut t = Tableau {
        a: rows,
        b: rhs,
        basis,
        obj,
        obj_val,
    };
    t.optimise(n + m);
    if t.obj_val.is_negative() {
        return LpOutcome::Infeasible;
    }
    // drive remaining artificials out of the basis, dropping redundant rows
    let mut r = 0;
    while r < t.a.len() {
        if t.basis[r] >= n {
            match (0..n).find(|&j| !t.a[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.a.remove(r);
                    t.b.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    for row in t.a.iter_mut() {
        row.truncate(n);
    }
    // phase 2: reduced costs of the real objective under the current basis
    obj = (0..n)
        .map(|j| {
            let carried: Rat = t
                .a
                .iter()
                .zip(&t.basis)
                .map(|(row, &bv)| &c[bv] * &row[j])
                .sum();
            &c[j] - &carried
        })
        .collect();
    t.obj = obj;
    t.obj_val = t
        .b
        .iter()
        .zip(&t.basis)
        .map(|(v, &bv)| &c[bv] * v)
        .sum();
    if t.optimise(n) {
        LpOutcome::Optimal(t.obj_val)
    } else {
        LpOutcome::Unbounded
    }
}
