//! Sparse multivariate Laurent polynomials over arbitrary-precision rationals.
//!
//! A polynomial lives over a fixed [`VarTable`] holding two blocks of
//! variables: *parameter* variables `t1..tN` whose exponents may be negative,
//! and *entry* variables (one per matrix entry of a parabolic block) whose
//! exponents are non-negative. Terms are kept in a `BTreeMap` keyed by the
//! exponent vector, parameter block first, so iteration order, pivot choices
//! and printed output are all deterministic. There is no floating point
//! anywhere: coefficients are `BigRational`.

pub mod linalg;

use num::{BigRational, One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Convenience constructor for small integer rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// `n/d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// An entry variable: the `(row, col)` entry of the generic parabolic matrix
/// at word position `block`. All three indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntryVar {
    pub block: usize,
    pub row: usize,
    pub col: usize,
}

/// Display letters for the entry blocks, chosen to avoid `t` (parameters).
const BLOCK_LETTERS: [char; 10] = ['p', 'q', 'r', 's', 'u', 'v', 'w', 'x', 'y', 'z'];

/// The fixed variable universe of a computation: `param_count` parameter
/// variables followed by an ordered list of entry variables.
///
/// Every polynomial holds an `Arc` to its table; operations on polynomials
/// over different tables are usage errors and panic.
#[derive(Debug)]
pub struct VarTable {
    param_count: usize,
    entry_vars: Vec<EntryVar>,
    positions: HashMap<EntryVar, usize>,
}

impl VarTable {
    pub fn new(param_count: usize, entry_vars: Vec<EntryVar>) -> Arc<VarTable> {
        let positions = entry_vars
            .iter()
            .enumerate()
            .map(|(i, v)| (*v, i))
            .collect();
        Arc::new(VarTable {
            param_count,
            entry_vars,
            positions,
        })
    }

    pub fn param_count(&self) -> usize {
        self.param_count
    }

    pub fn entry_count(&self) -> usize {
        self.entry_vars.len()
    }

    fn width(&self) -> usize {
        self.param_count + self.entry_vars.len()
    }

    pub fn entry_vars(&self) -> &[EntryVar] {
        &self.entry_vars
    }

    /// Position of an entry variable inside the entry block, if registered.
    pub fn entry_index(&self, v: EntryVar) -> Option<usize> {
        self.positions.get(&v).copied()
    }

    /// `t1`, `t2`, ... (1-based display).
    pub fn param_name(j: usize) -> String {
        format!("t{}", j + 1)
    }

    /// `p11`, `q32`, ... one letter per block; falls back to `m<k>_` for
    /// words longer than ten letters.
    pub fn entry_name(v: EntryVar) -> String {
        match BLOCK_LETTERS.get(v.block - 1) {
            Some(c) => format!("{}{}{}", c, v.row, v.col),
            None => format!("m{}_{}{}", v.block, v.row, v.col),
        }
    }
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || (a.param_count == b.param_count && a.entry_vars == b.entry_vars)
}

/// Exponent vector, parameter block first then entry block. The derived `Ord`
/// is lexicographic over the full vector, which realises the crate-wide term
/// order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Box<[i32]>);

impl Monomial {
    fn unit(width: usize) -> Monomial {
        Monomial(vec![0; width].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<i32>) -> Monomial {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }
}

/// Sparse exact Laurent polynomial. Zero is the empty term map; no stored
/// coefficient is ever zero.
#[derive(Clone)]
pub struct LaurentPoly {
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, Rat>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(table: &Arc<VarTable>) -> LaurentPoly {
        LaurentPoly {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<VarTable>) -> LaurentPoly {
        Self::constant(table, Rat::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: Rat) -> LaurentPoly {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(table.width()), c);
        }
        p
    }

    /// The parameter variable `t_{j+1}` (0-based index).
    pub fn param(table: &Arc<VarTable>, j: usize) -> LaurentPoly {
        assert!(j < table.param_count, "parameter index out of range");
        let mut m = vec![0; table.width()];
        m[j] = 1;
        Self::from_monomial(table, Monomial(m.into_boxed_slice()), Rat::one())
    }

    /// The entry variable `v`, which must be registered in the table.
    pub fn entry(table: &Arc<VarTable>, v: EntryVar) -> LaurentPoly {
        let idx = table
            .entry_index(v)
            .unwrap_or_else(|| panic!("unknown entry variable {v:?}"));
        let mut m = vec![0; table.width()];
        m[table.param_count + idx] = 1;
        Self::from_monomial(table, Monomial(m.into_boxed_slice()), Rat::one())
    }

    pub fn from_monomial(table: &Arc<VarTable>, m: Monomial, c: Rat) -> LaurentPoly {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        LaurentPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = Self::one(&self.table);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Minimal exponent of parameter `t_{j+1}` over all terms, or `None` for
    /// the zero polynomial (the twist that still extends is undefined there).
    pub fn min_exponent(&self, j: usize) -> Option<i32> {
        assert!(j < self.table.param_count, "parameter index out of range");
        self.terms.keys().map(|m| m.0[j]).min()
    }

    /// All per-parameter minimal exponents at once; `None` for zero.
    pub fn min_exponents(&self) -> Option<Vec<i32>> {
        if self.is_zero() {
            return None;
        }
        let mut mins = vec![i32::MAX; self.table.param_count];
        for m in self.terms.keys() {
            for (j, v) in mins.iter_mut().enumerate() {
                *v = (*v).min(m.0[j]);
            }
        }
        Some(mins)
    }

    /// The terms whose parameter exponent vector equals `l`, with the
    /// parameter block zeroed out (an entry-variable polynomial).
    pub fn graded_piece(&self, l: &[i32]) -> LaurentPoly {
        assert_eq!(l.len(), self.table.param_count, "grading vector length");
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            if &m.0[..self.table.param_count] == l {
                let mut e = m.0.to_vec();
                e[..self.table.param_count].fill(0);
                out.add_term(Monomial(e.into_boxed_slice()), c.clone());
            }
        }
        out
    }

    /// Distinct parameter exponent vectors with a non-zero graded piece.
    pub fn parameter_support(&self) -> BTreeSet<Vec<i32>> {
        self.terms
            .keys()
            .map(|m| m.0[..self.table.param_count].to_vec())
            .collect()
    }

    /// Substitute `v -> t_{j+1}^k * v`: each term's `t_{j+1}` exponent grows
    /// by `k` times the exponent of `v` in that term.
    pub fn scale_variable(&self, v: EntryVar, j: usize, k: i32) -> LaurentPoly {
        assert!(j < self.table.param_count, "parameter index out of range");
        let idx = self
            .table
            .entry_index(v)
            .unwrap_or_else(|| panic!("unknown entry variable {v:?}"));
        let pos = self.table.param_count + idx;
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            let mut e = m.0.to_vec();
            e[j] += k * e[pos];
            out.add_term(Monomial(e.into_boxed_slice()), c.clone());
        }
        out
    }

    /// Set every parameter variable to 1 (merge terms that collide).
    pub fn set_params_one(&self) -> LaurentPoly {
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            let mut e = m.0.to_vec();
            e[..self.table.param_count].fill(0);
            out.add_term(Monomial(e.into_boxed_slice()), c.clone());
        }
        out
    }

    /// Total degree in the entry variables of `block`, provided every term
    /// has the same one; `None` for zero or non-uniform polynomials.
    pub fn uniform_block_degree(&self, block: usize) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let cols: Vec<usize> = self
            .table
            .entry_vars
            .iter()
            .enumerate()
            .filter(|(_, v)| v.block == block)
            .map(|(i, _)| self.table.param_count + i)
            .collect();
        let mut result = None;
        for m in self.terms.keys() {
            let d: i64 = cols.iter().map(|&i| m.0[i] as i64).sum();
            match result {
                None => result = Some(d),
                Some(r) if r != d => return None,
                _ => {}
            }
        }
        result
    }

    /// The entry-block part of a monomial key (used for interning).
    pub fn entry_part(&self, m: &Monomial) -> Vec<i32> {
        m.0[self.table.param_count..].to_vec()
    }

    /// The parameter-block part of a monomial key.
    pub fn param_part(&self, m: &Monomial) -> Vec<i32> {
        m.0[..self.table.param_count].to_vec()
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert!(same_table(&self.table, &rhs.table), "VarTable mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert!(same_table(&self.table, &rhs.table), "VarTable mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert!(same_table(&self.table, &rhs.table), "VarTable mismatch");
        let mut out = LaurentPoly::zero(&self.table);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e: Vec<i32> = ma.0.iter().zip(mb.0.iter()).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e.into_boxed_slice()), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mut factors = Vec::new();
            for (j, &e) in m.0[..self.table.param_count].iter().enumerate() {
                if e != 0 {
                    factors.push(power_str(&VarTable::param_name(j), e));
                }
            }
            for (i, &e) in m.0[self.table.param_count..].iter().enumerate() {
                if e != 0 {
                    factors.push(power_str(&VarTable::entry_name(self.table.entry_vars[i]), e));
                }
            }
            let coeff_abs = c.abs();
            let mut body = if factors.is_empty() {
                format!("{coeff_abs}")
            } else if coeff_abs.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", coeff_abs, factors.join("*"))
            };
            if first {
                if c.is_negative() {
                    body = format!("-{body}");
                }
                first = false;
            } else {
                body = format!("{}{}", if c.is_negative() { " - " } else { " + " }, body);
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn power_str(name: &str, e: i32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

/// Exact determinant of a square matrix of Laurent polynomials: cofactor
/// expansion for sizes up to 3, fraction-free (Bareiss) elimination above.
pub fn poly_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    assert!(n > 0, "determinant of empty matrix");
    for row in m {
        assert_eq!(row.len(), n, "determinant of non-square matrix");
    }
    if n <= 3 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

fn det_cofactor(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let table = m[0][0].table().clone();
    let mut acc = LaurentPoly::zero(&table);
    for (i, row) in m.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let sub: Vec<Vec<LaurentPoly>> = m
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let cof = &row[0] * &det_cofactor(&sub);
        if i % 2 == 0 {
            acc = &acc + &cof;
        } else {
            acc = &acc - &cof;
        }
    }
    acc
}

fn det_bareiss(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    let table = m[0][0].table().clone();
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one(&table);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return LaurentPoly::zero(&table),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact_div(&num, &prev);
            }
        }
        for row in a.iter_mut().take(n).skip(k + 1) {
            row[k] = LaurentPoly::zero(&table);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

/// Exact division `a / b` when `b` divides `a`; panics otherwise. Repeatedly
/// cancels leading terms in the monomial order, which terminates exactly when
/// divisibility holds.
fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert!(!b.is_zero(), "exact division by zero polynomial");
    let table = a.table().clone();
    let (lm, lc) = b
        .terms
        .iter()
        .next_back()
        .map(|(m, c)| (m.clone(), c.clone()))
        .expect("non-zero divisor");
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero(&table);
    while !rem.is_zero() {
        let (rm, rc) = rem
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let e: Vec<i32> = rm.0.iter().zip(lm.0.iter()).map(|(x, y)| x - y).collect();
        let t = LaurentPoly::from_monomial(&table, Monomial(e.into_boxed_slice()), &rc / &lc);
        quot = &quot + &t;
        rem = &rem - &(&t * b);
    }
    quot
}

/// Minor of `m` on the given 1-based rows and columns.
pub fn poly_minor(m: &[Vec<LaurentPoly>], rows: &[usize], cols: &[usize]) -> LaurentPoly {
    assert_eq!(rows.len(), cols.len(), "minor must be square");
    let sub: Vec<Vec<LaurentPoly>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| m[r - 1][c - 1].clone()).collect())
        .collect();
    poly_det(&sub)
}
