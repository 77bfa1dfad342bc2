//! Symbolic section calculus on Bott-Samelson data for SL(n): generic
//! parabolic matrices with their zero patterns, partial products, tableau
//! sections as products of minors, H-weights, and the row-scaling sweep that
//! produces Laurent expansions in the degeneration parameters.

use crate::laurent::{poly_minor, EntryVar, LaurentPoly, VarTable};
use crate::lie::{OneParamSubgroup, Weight, Word};
use std::sync::Arc;

/// Symbolic matrix: `n x n` Laurent polynomials.
pub type PolyMatrix = Vec<Vec<LaurentPoly>>;

/// The generic point of the minimal parabolic `P_{α_i}` placed at word
/// position `block`: fresh variables at `(a,b)` with `a <= b` and at
/// `(i+1, i)`, exact zeros elsewhere.
#[derive(Debug, Clone)]
pub struct GenericParabolic {
    pub n: usize,
    pub root_index: usize,
    pub block: usize,
    pub matrix: PolyMatrix,
}

/// Whether the parabolic pattern for root `i` has a variable at `(a, b)`
/// (1-based).
pub fn parabolic_has_entry(i: usize, a: usize, b: usize) -> bool {
    a <= b || (a == b + 1 && b == i)
}

/// The variable table for a word: parameters `t_1..t_N` plus one entry
/// variable per nonzero pattern position of each block.
pub fn section_var_table(n: usize, word: &Word) -> Arc<VarTable> {
    let mut vars = Vec::new();
    for (k, &i) in word.letters().iter().enumerate() {
        for a in 1..=n {
            for b in 1..=n {
                if parabolic_has_entry(i, a, b) {
                    vars.push(EntryVar { block: k + 1, row: a, col: b });
                }
            }
        }
    }
    VarTable::new(word.len(), vars)
}

pub fn generic_parabolic(
    table: &Arc<VarTable>,
    n: usize,
    root_index: usize,
    block: usize,
) -> GenericParabolic {
    assert!((1..n).contains(&root_index), "root index out of range");
    let matrix = (1..=n)
        .map(|a| {
            (1..=n)
                .map(|b| {
                    if parabolic_has_entry(root_index, a, b) {
                        LaurentPoly::entry(table, EntryVar { block, row: a, col: b })
                    } else {
                        LaurentPoly::zero(table)
                    }
                })
                .collect()
        })
        .collect();
    GenericParabolic { n, root_index, block, matrix }
}

/// `(P_1, P_1 P_2, ..., P_1 ... P_N)` with exact polynomial entries.
pub fn partial_products(parabolics: &[GenericParabolic]) -> Vec<PolyMatrix> {
    let mut out: Vec<PolyMatrix> = Vec::with_capacity(parabolics.len());
    for p in parabolics {
        let next = match out.last() {
            None => p.matrix.clone(),
            Some(prev) => mat_mul(prev, &p.matrix),
        };
        out.push(next);
    }
    out
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let table = a[0][0].table().clone();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut acc = LaurentPoly::zero(&table);
                    for (k, row_b) in b.iter().enumerate() {
                        if a[r][k].is_zero() || row_b[c].is_zero() {
                            continue;
                        }
                        acc = &acc + &(&a[r][k] * &row_b[c]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// A tableau: for each word position `k`, a multiset of `m_k` columns, each
/// column a strictly increasing subset of `{1..n}` of size `i_k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    pub columns: Vec<Vec<Vec<usize>>>,
}

impl Tableau {
    /// Concatenated digits in position order, e.g. `(121)` for the column
    /// `{1,2}` at position 2 followed by `{1}` at position 3.
    pub fn label(&self) -> String {
        let mut s = String::from("(");
        for pos in &self.columns {
            for col in pos {
                for row in col {
                    s.push_str(&row.to_string());
                }
            }
        }
        s.push(')');
        s
    }

    pub fn is_empty(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

/// All tableaux for `(word, m)` in lexicographic order: per position, all
/// multisets of `m_k` columns over the size-`i_k` subsets of `{1..n}`.
pub fn enumerate_tableaux(n: usize, word: &Word, m: &[i64]) -> Vec<Tableau> {
    assert_eq!(m.len(), word.len(), "m-vector length mismatch");
    assert!(m.iter().all(|&x| x >= 0), "negative multiplicity");
    let mut per_position: Vec<Vec<Vec<Vec<usize>>>> = Vec::new();
    for (k, &i) in word.letters().iter().enumerate() {
        let cols = subsets_of_size(n, i);
        per_position.push(multisets(&cols, m[k] as usize));
    }
    let mut out = vec![Tableau { columns: Vec::new() }];
    for choices in &per_position {
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for t in &out {
            for c in choices {
                let mut cols = t.columns.clone();
                cols.push(c.clone());
                next.push(Tableau { columns: cols });
            }
        }
        out = next;
    }
    out
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..=n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(1, n, k, &mut current, &mut out);
    out
}

fn multisets<T: Clone>(items: &[T], size: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec<T: Clone>(
        items: &[T],
        start: usize,
        size: usize,
        current: &mut Vec<T>,
        out: &mut Vec<Vec<T>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i].clone());
            rec(items, i, size, current, out);
            current.pop();
        }
    }
    rec(items, 0, size, &mut current, &mut out);
    out
}

/// A tableau section: product over positions `k` and columns `B` of the
/// minor of `P_1...P_k` on rows `B`, columns `1..i_k`. Entry variables only.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionPoly {
    pub value: LaurentPoly,
    pub tableau: Tableau,
}

pub fn section_of_tableau(
    partials: &[PolyMatrix],
    table: &Arc<VarTable>,
    tableau: &Tableau,
) -> SectionPoly {
    let mut value = LaurentPoly::one(table);
    for (k, cols) in tableau.columns.iter().enumerate() {
        for col in cols {
            let width: Vec<usize> = (1..=col.len()).collect();
            value = &value * &poly_minor(&partials[k], col, &width);
        }
    }
    SectionPoly { value, tableau: tableau.clone() }
}

/// H-weight of a tableau: `Σ_k Σ_{B} Σ_{a in B} e_a` modulo trace. The sign
/// is calibrated so that for `λ = ϖ_1` the weights of the three sections are
/// the weights of the standard representation.
pub fn tableau_weight(t: &Tableau, n: usize) -> Weight {
    let mut coords = vec![0i64; n];
    for pos in &t.columns {
        for col in pos {
            for &a in col {
                coords[a - 1] += 1;
            }
        }
    }
    Weight::from_coords(coords)
}

/// The Laurent expansion of a section's sweep: substitute, in block `k`,
/// `row r -> t_k^{-a_r} * row r` (the left factors `S(t_k)^{-1}`).
#[derive(Debug, Clone, PartialEq)]
pub struct SweptSection {
    pub value: LaurentPoly,
}

pub fn sweep(section: &SectionPoly, sub: &OneParamSubgroup) -> SweptSection {
    SweptSection { value: sweep_poly(&section.value, sub) }
}

/// Sweep an arbitrary entry polynomial (linear combinations of sections are
/// swept term by term; the substitution never merges or cancels terms).
pub fn sweep_poly(poly: &LaurentPoly, sub: &OneParamSubgroup) -> LaurentPoly {
    let table = poly.table().clone();
    let param_count = table.param_count();
    let entry_vars: Vec<EntryVar> = table.entry_vars().to_vec();
    let mut out = LaurentPoly::zero(&table);
    for (m, c) in poly.terms() {
        let exps = m.exponents();
        let mut e = exps.to_vec();
        for (idx, var) in entry_vars.iter().enumerate() {
            let exp = exps[param_count + idx];
            if exp != 0 {
                let a_row = sub.a[var.row - 1];
                e[var.block - 1] += -(a_row as i32) * exp;
            }
        }
        out = &out
            + &LaurentPoly::from_monomial(
                &table,
                crate::laurent::Monomial::from_exponents(e),
                c.clone(),
            );
    }
    out
}

/// Isotropy weights of the `j`-th torus factor at the base point of the
/// degenerate fibre: zeros up to position `j-1`, then `-q_{i_k}` for
/// `k = j..N`. Always non-positive for positive `q` values.
pub fn isotropy_weights_at_base(word: &Word, j: usize, q_by_letter: &[i64]) -> Vec<i64> {
    assert!((1..=word.len()).contains(&j), "position index out of range");
    word.letters()
        .iter()
        .enumerate()
        .map(|(k, &i)| if k + 1 < j { 0 } else { -q_by_letter[i - 1] })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rat;
    use crate::lie::one_param_subgroup;

    fn setup_sl3() -> (Arc<VarTable>, Vec<PolyMatrix>) {
        let word = Word(vec![1, 2, 1]);
        let table = section_var_table(3, &word);
        let parabolics: Vec<GenericParabolic> = word
            .letters()
            .iter()
            .enumerate()
            .map(|(k, &i)| generic_parabolic(&table, 3, i, k + 1))
            .collect();
        let partials = partial_products(&parabolics);
        (table, partials)
    }

    fn ev(table: &Arc<VarTable>, block: usize, row: usize, col: usize) -> LaurentPoly {
        LaurentPoly::entry(table, EntryVar { block, row, col })
    }

    #[test]
    fn parabolic_zero_patterns() {
        let word = Word(vec![1, 2, 1]);
        let table = section_var_table(3, &word);
        let p = generic_parabolic(&table, 3, 1, 1);
        let zeros_p: Vec<(usize, usize)> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .filter(|&(a, b)| p.matrix[a][b].is_zero())
            .collect();
        assert_eq!(zeros_p, vec![(2, 0), (2, 1)]);
        let q = generic_parabolic(&table, 3, 2, 2);
        let zeros_q: Vec<(usize, usize)> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .filter(|&(a, b)| q.matrix[a][b].is_zero())
            .collect();
        assert_eq!(zeros_q, vec![(1, 0), (2, 0)]);
    }

    #[test]
    fn full_2x2_parabolic() {
        let word = Word(vec![1]);
        let table = section_var_table(2, &word);
        let p = generic_parabolic(&table, 2, 1, 1);
        assert!(p.matrix.iter().flatten().all(|e| !e.is_zero()));
    }

    #[test]
    fn partial_product_entry_1_1() {
        let (table, partials) = setup_sl3();
        // with the SL(3) patterns, (pq)_{11} collapses to the single monomial
        let expected = &ev(&table, 1, 1, 1) * &ev(&table, 2, 1, 1);
        assert_eq!(partials[1][0][0], expected);
    }

    #[test]
    fn single_factor_product_is_the_factor() {
        let word = Word(vec![2]);
        let table = section_var_table(3, &word);
        let p = generic_parabolic(&table, 3, 2, 1);
        let partials = partial_products(std::slice::from_ref(&p));
        assert_eq!(partials[0], p.matrix);
    }

    #[test]
    fn product_with_identity_pattern() {
        // substituting the identity for the second factor: diagonal 1, rest 0
        let (table, _) = setup_sl3();
        let p = generic_parabolic(&table, 3, 1, 1);
        let mut id = vec![vec![LaurentPoly::zero(&table); 3]; 3];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = LaurentPoly::one(&table);
        }
        let prod = mat_mul(&p.matrix, &id);
        assert_eq!(prod, p.matrix);
    }

    #[test]
    fn nine_tableaux_for_the_sl3_example() {
        let word = Word(vec![1, 2, 1]);
        let ts = enumerate_tableaux(3, &word, &[0, 1, 1]);
        assert_eq!(ts.len(), 9);
        let labels: Vec<String> = ts.iter().map(|t| t.label()).collect();
        assert_eq!(
            labels,
            vec![
                "(121)", "(122)", "(123)", "(131)", "(132)", "(133)", "(231)", "(232)",
                "(233)"
            ]
        );
    }

    #[test]
    fn empty_and_sl2_tableaux() {
        let word = Word(vec![1, 2, 1]);
        let ts = enumerate_tableaux(3, &word, &[0, 0, 0]);
        assert_eq!(ts.len(), 1);
        assert!(ts[0].is_empty());

        let ts2 = enumerate_tableaux(2, &Word(vec![1]), &[1]);
        assert_eq!(ts2.len(), 2);
        assert_eq!(ts2[0].columns, vec![vec![vec![1]]]);
        assert_eq!(ts2[1].columns, vec![vec![vec![2]]]);
    }

    /// The displayed expansion of Δ_{121}: the product of the 2x2 minor of
    /// `pq` on rows {1,2} and the (1,1) entry of `pqr`.
    fn expected_delta_121(table: &Arc<VarTable>) -> LaurentPoly {
        let p = |r, c| ev(table, 1, r, c);
        let q = |r, c| ev(table, 2, r, c);
        let r = |rr, c| ev(table, 3, rr, c);
        let col2 = &(&p(1, 1) * &q(1, 2)) + &(&(&p(1, 2) * &q(2, 2)) + &(&p(1, 3) * &q(3, 2)));
        let factor1 = &(&(&p(1, 1) * &q(1, 1))
            * &(&(&p(2, 1) * &q(1, 2)) + &(&(&p(2, 2) * &q(2, 2)) + &(&p(2, 3) * &q(3, 2)))))
            - &(&col2 * &(&p(2, 1) * &q(1, 1)));
        let factor2 = &(&(&p(1, 1) * &q(1, 1)) * &r(1, 1)) + &(&col2 * &r(2, 1));
        &factor1 * &factor2
    }

    #[test]
    fn section_121_matches_displayed_expansion() {
        let (table, partials) = setup_sl3();
        let word = Word(vec![1, 2, 1]);
        let ts = enumerate_tableaux(3, &word, &[0, 1, 1]);
        let t121 = ts.iter().find(|t| t.label() == "(121)").unwrap();
        let s = section_of_tableau(&partials, &table, t121);
        assert_eq!(s.value, expected_delta_121(&table));
    }

    #[test]
    fn empty_tableau_section_is_one_and_sl2_minor_is_p11() {
        let (table, partials) = setup_sl3();
        let empty = Tableau { columns: vec![vec![], vec![], vec![]] };
        assert_eq!(section_of_tableau(&partials, &table, &empty).value, LaurentPoly::one(&table));

        let word2 = Word(vec![1]);
        let table2 = section_var_table(2, &word2);
        let p = generic_parabolic(&table2, 2, 1, 1);
        let partials2 = partial_products(std::slice::from_ref(&p));
        let t = Tableau { columns: vec![vec![vec![1]]] };
        let s = section_of_tableau(&partials2, &table2, &t);
        assert_eq!(s.value, ev(&table2, 1, 1, 1));
    }

    #[test]
    fn tableau_weights() {
        let word = Word(vec![1, 2, 1]);
        let ts = enumerate_tableaux(3, &word, &[0, 1, 1]);
        let by_label = |l: &str| ts.iter().find(|t| t.label() == l).unwrap();
        assert_eq!(
            tableau_weight(by_label("(121)"), 3),
            Weight::from_coords(vec![2, 1, 0])
        );
        assert_eq!(
            tableau_weight(by_label("(233)"), 3),
            Weight::from_coords(vec![0, 1, 2])
        );
        assert_eq!(
            tableau_weight(by_label("(231)"), 3),
            tableau_weight(by_label("(132)"), 3)
        );
        assert_eq!(tableau_weight(by_label("(231)"), 3), Weight::zero(3));
    }

    /// The factored sweep of Δ_{121}:
    /// `t1^-2 t2^-2 t3^-1 (q11 q22 (p11 p22 - p12 p21) + t2 q11 q32 (p11 p23 - p13 p21))
    ///  * (p11 q11 r11 + (t3 p11 q12 + t2 t3 p12 q22 + t2^2 t3 p13 q32) r21)`.
    fn expected_swept_121(table: &Arc<VarTable>) -> LaurentPoly {
        let p = |r, c| ev(table, 1, r, c);
        let q = |r, c| ev(table, 2, r, c);
        let r = |rr, c| ev(table, 3, rr, c);
        let t2 = LaurentPoly::param(table, 1);
        let t3 = LaurentPoly::param(table, 2);
        let prefactor = LaurentPoly::from_monomial(
            table,
            crate::laurent::Monomial::from_exponents({
                let mut e = vec![0i32; 3 + table.entry_count()];
                e[0] = -2;
                e[1] = -2;
                e[2] = -1;
                e
            }),
            rat(1),
        );
        let f1 = &(&(&q(1, 1) * &q(2, 2))
            * &(&(&p(1, 1) * &p(2, 2)) - &(&p(1, 2) * &p(2, 1))))
            + &(&(&t2 * &(&q(1, 1) * &q(3, 2)))
                * &(&(&p(1, 1) * &p(2, 3)) - &(&p(1, 3) * &p(2, 1))));
        let inner = &(&(&t3 * &(&p(1, 1) * &q(1, 2)))
            + &(&(&t2 * &t3) * &(&p(1, 2) * &q(2, 2))))
            + &(&(&t2.pow(2) * &t3) * &(&p(1, 3) * &q(3, 2)));
        let f2 = &(&(&p(1, 1) * &q(1, 1)) * &r(1, 1)) + &(&inner * &r(2, 1));
        &(&prefactor * &f1) * &f2
    }

    #[test]
    fn sweep_121_matches_worked_expansion() {
        let (table, partials) = setup_sl3();
        let word = Word(vec![1, 2, 1]);
        let ts = enumerate_tableaux(3, &word, &[0, 1, 1]);
        let t121 = ts.iter().find(|t| t.label() == "(121)").unwrap();
        let s = section_of_tableau(&partials, &table, t121);
        let sw = sweep(&s, &one_param_subgroup(3));
        assert_eq!(sw.value, expected_swept_121(&table));
    }

    #[test]
    fn sweep_fixes_constants_and_inverts_at_one() {
        let (table, partials) = setup_sl3();
        let word = Word(vec![1, 2, 1]);
        let sub = one_param_subgroup(3);
        let one = SectionPoly {
            value: LaurentPoly::one(&table),
            tableau: Tableau { columns: vec![] },
        };
        assert_eq!(sweep(&one, &sub).value, LaurentPoly::one(&table));

        for t in enumerate_tableaux(3, &word, &[0, 1, 1]) {
            let s = section_of_tableau(&partials, &table, &t);
            let sw = sweep(&s, &sub);
            assert_eq!(sw.value.set_params_one(), s.value, "tableau {}", t.label());
        }
    }

    #[test]
    fn multidegree_homogeneity() {
        let (table, partials) = setup_sl3();
        let word = Word(vec![1, 2, 1]);
        let m = [0i64, 1, 1];
        // degree in block k equals the number of minor rows drawn from
        // positions k and later
        let expected: Vec<i64> = (0..3)
            .map(|k| {
                (k..3)
                    .map(|kk| m[kk] * word.letters()[kk] as i64)
                    .sum()
            })
            .collect();
        for t in enumerate_tableaux(3, &word, &m) {
            let s = section_of_tableau(&partials, &table, &t);
            for (k, want) in expected.iter().enumerate() {
                assert_eq!(
                    s.value.uniform_block_degree(k + 1),
                    Some(*want),
                    "tableau {} block {}",
                    t.label(),
                    k + 1
                );
            }
        }
    }

    #[test]
    fn isotropy_weights_examples() {
        let word = Word(vec![1, 2, 1]);
        let qs = [1i64, 1];
        assert_eq!(isotropy_weights_at_base(&word, 1, &qs), vec![-1, -1, -1]);
        assert_eq!(isotropy_weights_at_base(&word, 2, &qs), vec![0, -1, -1]);
        assert_eq!(isotropy_weights_at_base(&word, 3, &qs), vec![0, 0, -1]);
    }
}
