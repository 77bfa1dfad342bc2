//! Exact lattice-polytope utilities: convex hulls by extreme-point
//! filtering, membership and interiority through a small exact simplex
//! solver, affine lattice maps and unimodularity checks. The crystal
//! submodule supplies the string coordinates these polytopes are compared
//! against.

pub mod crystal;

mod simplex;

use crate::laurent::Rat;
use num::{BigInt, One, Signed, Zero};
use simplex::{lp_max, LpOutcome};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("convex hull of an empty point set")]
    EmptyPointSet,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// A lattice polytope stored by its vertex set (deduplicated, sorted).
/// The vertices are exactly the extreme points: re-hulling is idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl LatticePolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }
}

/// Exact convex hull: keep the points that are not convex combinations of
/// the others.
pub fn convex_hull(points: &[Vec<i64>]) -> Result<LatticePolytope, PolytopeError> {
    if points.is_empty() {
        return Err(PolytopeError::EmptyPointSet);
    }
    let dim = points[0].len();
    for p in points {
        if p.len() != dim {
            return Err(PolytopeError::DimensionMismatch(p.len(), dim));
        }
    }
    let mut pts: Vec<Vec<i64>> = points.to_vec();
    pts.sort();
    pts.dedup();
    let vertices: Vec<Vec<i64>> = pts
        .iter()
        .filter(|p| {
            let others: Vec<Vec<i64>> = pts.iter().filter(|q| q != p).cloned().collect();
            others.is_empty() || !point_in_hull_of(p, &others)
        })
        .cloned()
        .collect();
    Ok(LatticePolytope { dim, vertices })
}

fn to_rat(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

/// Membership of `p` in the convex hull of `pts`, by exact LP feasibility:
/// find λ ≥ 0 with Σλ_i v_i = p and Σλ_i = 1.
fn point_in_hull_of(p: &[i64], pts: &[Vec<i64>]) -> bool {
    let dim = p.len();
    let cols = pts.len();
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(dim + 1);
    let mut b: Vec<Rat> = Vec::with_capacity(dim + 1);
    for j in 0..dim {
        a.push(pts.iter().map(|v| to_rat(v[j])).collect());
        b.push(to_rat(p[j]));
    }
    a.push(vec![Rat::one(); cols]);
    b.push(Rat::one());
    let c = vec![Rat::zero(); cols];
    !matches!(lp_max(&a, &b, &c), LpOutcome::Infeasible)
}

impl LatticePolytope {
    pub fn contains(&self, p: &[i64]) -> bool {
        assert_eq!(p.len(), self.dim);
        point_in_hull_of(p, &self.vertices)
    }

    /// Strict interiority: the hull is full-dimensional and a positive move
    /// in every signed axis direction stays inside.
    pub fn is_interior(&self, p: &[i64]) -> bool {
        assert_eq!(p.len(), self.dim);
        if !self.contains(p) {
            return false;
        }
        if self.affine_rank() < self.dim {
            return false;
        }
        for j in 0..self.dim {
            for sign in [1i64, -1] {
                // maximise δ subject to Σλ_i v_i - sign·δ·e_j = p, Σλ = 1
                let cols = self.vertices.len() + 1;
                let mut a: Vec<Vec<Rat>> = Vec::new();
                let mut b: Vec<Rat> = Vec::new();
                for row in 0..self.dim {
                    let mut r: Vec<Rat> =
                        self.vertices.iter().map(|v| to_rat(v[row])).collect();
                    r.push(if row == j { to_rat(-sign) } else { Rat::zero() });
                    a.push(r);
                    b.push(to_rat(p[row]));
                }
                let mut last = vec![Rat::one(); cols];
                last[cols - 1] = Rat::zero();
                a.push(last);
                b.push(Rat::one());
                let mut c = vec![Rat::zero(); cols];
                c[cols - 1] = Rat::one();
                match lp_max(&a, &b, &c) {
                    LpOutcome::Optimal(value) => {
                        if value.is_zero() {
                            return false;
                        }
                    }
                    LpOutcome::Infeasible => return false,
                    // a polytope is bounded; unbounded δ cannot occur
                    LpOutcome::Unbounded => unreachable!("bounded polytope"),
                }
            }
        }
        true
    }

    fn affine_rank(&self) -> usize {
        if self.vertices.len() <= 1 {
            return 0;
        }
        let v0 = &self.vertices[0];
        let rows: Vec<Vec<Rat>> = self.vertices[1..]
            .iter()
            .map(|v| v.iter().zip(v0).map(|(a, b)| to_rat(a - b)).collect())
            .collect();
        crate::laurent::linalg::RationalMatrix::from_rows(rows).rank()
    }

    /// All lattice points of the hull (bounding box scan with exact
    /// membership tests). Intended for desk-scale polytopes only.
    pub fn lattice_points(&self) -> Vec<Vec<i64>> {
        if self.vertices.is_empty() {
            return Vec::new();
        }
        let lo: Vec<i64> = (0..self.dim)
            .map(|j| self.vertices.iter().map(|v| v[j]).min().unwrap())
            .collect();
        let hi: Vec<i64> = (0..self.dim)
            .map(|j| self.vertices.iter().map(|v| v[j]).max().unwrap())
            .collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'outer: loop {
            if self.contains(&cur) {
                out.push(cur.clone());
            }
            for j in (0..self.dim).rev() {
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    for k in j + 1..self.dim {
                        cur[k] = lo[k];
                    }
                    continue 'outer;
                }
            }
            break;
        }
        out
    }
}

/// An affine map `x -> Ax + b` on lattice vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLatticeMap {
    pub matrix: Vec<Vec<i64>>,
    pub offset: Vec<i64>,
}

impl AffineLatticeMap {
    pub fn identity(n: usize) -> AffineLatticeMap {
        AffineLatticeMap {
            matrix: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
            offset: vec![0; n],
        }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, b)| row.iter().zip(x).map(|(a, v)| a * v).sum::<i64>() + b)
            .collect()
    }

    pub fn apply_all(&self, pts: &[Vec<i64>]) -> Vec<Vec<i64>> {
        pts.iter().map(|p| self.apply(p)).collect()
    }
}

/// Exact integer determinant (Laplace expansion; the matrices here are tiny).
pub fn int_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut acc = BigInt::zero();
    for i in 0..n {
        if m[i][0] == 0 {
            continue;
        }
        let sub: Vec<Vec<i64>> = m
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = BigInt::from(m[i][0]) * int_det(&sub);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn is_unimodular(a: &[Vec<i64>]) -> bool {
    int_det(a).abs() == BigInt::one()
}

/// Image polytope under an affine lattice map (re-hulled, so the result is
/// canonical for any map).
pub fn affine_image(p: &LatticePolytope, f: &AffineLatticeMap) -> Result<LatticePolytope, PolytopeError> {
    if f.matrix.len() != p.dim {
        return Err(PolytopeError::DimensionMismatch(f.matrix.len(), p.dim));
    }
    convex_hull(&f.apply_all(&p.vertices))
}

/// Vertex-set equality after canonical ordering.
pub fn polytope_equal(p: &LatticePolytope, q: &LatticePolytope) -> bool {
    p == q
}

/// Search for an upper-triangular unimodular `A` (diagonal ±1, off-diagonal
/// entries bounded by `bound`) and integer `b` with `A·src + b = dst` as
/// point sets. The offset is pinned by matching lexicographic minima, so the
/// search space is the matrix alone. Returns `None` when no bounded map
/// works or the search space is too large to enumerate.
pub fn find_upper_unimodular_map(
    src: &[Vec<i64>],
    dst: &[Vec<i64>],
    bound: i64,
) -> Option<AffineLatticeMap> {
    if src.is_empty() || dst.is_empty() || src[0].len() != dst[0].len() {
        return None;
    }
    let n = src[0].len();
    let mut src_sorted = src.to_vec();
    src_sorted.sort();
    src_sorted.dedup();
    let mut dst_sorted = dst.to_vec();
    dst_sorted.sort();
    dst_sorted.dedup();
    if src_sorted.len() != dst_sorted.len() {
        return None;
    }
    let off_diag = n * (n - 1) / 2;
    let candidates = (2 * bound + 1).pow(off_diag as u32) * (1 << n);
    if candidates > 2_000_000 {
        return None;
    }
    let range: Vec<i64> = (-bound..=bound).collect();
    let mut entries = vec![0i64; off_diag];
    search_maps(&mut entries, 0, &range, n, &src_sorted, &dst_sorted)
}

/// Try a fixed matrix: the offset is pinned by matching lexicographic
/// minima; returns the affine map when `A·src + b = dst` as point sets.
pub fn affine_match_with_matrix(
    a: &[Vec<i64>],
    src: &[Vec<i64>],
    dst: &[Vec<i64>],
) -> Option<AffineLatticeMap> {
    try_map(a, src, dst)
}

fn search_maps(
    entries: &mut Vec<i64>,
    pos: usize,
    range: &[i64],
    n: usize,
    src: &[Vec<i64>],
    dst: &[Vec<i64>],
) -> Option<AffineLatticeMap> {
    if pos == entries.len() {
        for diag_mask in 0..(1u32 << n) {
            let mut a = vec![vec![0i64; n]; n];
            let mut idx = 0;
            for i in 0..n {
                a[i][i] = if diag_mask & (1 << i) == 0 { 1 } else { -1 };
                for j in i + 1..n {
                    a[i][j] = entries[idx + j - i - 1];
                }
                idx += n - i - 1;
            }
            if let Some(map) = try_map(&a, src, dst) {
                return Some(map);
            }
        }
        return None;
    }
    for &v in range {
        entries[pos] = v;
        if let Some(m) = search_maps(entries, pos + 1, range, n, src, dst) {
            return Some(m);
        }
    }
    None
}

fn try_map(a: &[Vec<i64>], src: &[Vec<i64>], dst: &[Vec<i64>]) -> Option<AffineLatticeMap> {
    let n = a.len();
    let mut mapped: Vec<Vec<i64>> = src
        .iter()
        .map(|p| {
            (0..n)
                .map(|i| a[i].iter().zip(p).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect();
    mapped.sort();
    let lex_src = mapped.first()?.clone();
    let lex_dst = dst.iter().min()?.clone();
    let b: Vec<i64> = lex_dst.iter().zip(&lex_src).map(|(d, s)| d - s).collect();
    for p in &mut mapped {
        for (x, add) in p.iter_mut().zip(&b) {
            *x += add;
        }
    }
    let mut dst_sorted = dst.to_vec();
    dst_sorted.sort();
    if mapped == dst_sorted {
        Some(AffineLatticeMap {
            matrix: a.to_vec(),
            offset: b,
        })
    } else {
        None
    }
}
