//! The filtration machinery in exact finite dimensions: ℓ-vectors of swept
//! sections, the spaces `F_ℓ` and `F_{>ℓ}` cut out by vanishing graded
//! pieces, leaf dimensions, initial forms, and extraction of the canonical
//! basis.
//!
//! Everything is blocked by H-weight before any linear algebra runs: two
//! tableaux of different weight can never mix (their sections live on
//! disjoint sets of entry monomials, because the row grading of the first
//! block reads off the weight), so each weight group is solved on its own.

use crate::bott_samelson::{
    enumerate_tableaux, generic_parabolic, partial_products, section_of_tableau,
    section_var_table, sweep_poly, tableau_weight, SectionPoly, SweptSection, Tableau,
};
use crate::laurent::linalg::{self, RationalMatrix};
use crate::laurent::{LaurentPoly, Rat, VarTable};
use crate::lie::{
    is_reduced_w0, mu_from_lambda, one_param_subgroup, weyl_dim, LieError, OneParamSubgroup,
    Weight, Word,
};
use num::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FiltrationError {
    #[error("the zero section has no ℓ-vector")]
    ZeroSection,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("m-vector has length {0}, expected the word length {1}")]
    BadMVectorLength(usize, usize),
    #[error("m-vector entries must be non-negative")]
    NegativeMultiplicity,
}

/// A filtration index in ℤ^N under the product partial order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LVector(pub Vec<i32>);

impl LVector {
    /// `self ≤ other` in the product partial order.
    pub fn le(&self, other: &LVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Strict product-order comparison: `≤` and not equal.
    pub fn lt(&self, other: &LVector) -> bool {
        self.le(other) && self != other
    }

    pub fn min_with(&self, other: &LVector) -> LVector {
        LVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }
}

impl std::fmt::Display for LVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// ℓ-vector of a non-zero swept section: the per-parameter minimal exponents.
pub fn l_vector(sw: &SweptSection) -> Result<LVector, FiltrationError> {
    sw.value
        .min_exponents()
        .map(LVector)
        .ok_or(FiltrationError::ZeroSection)
}

/// A linear combination of tableaux, sparse over the tableau list of a
/// context; coefficients are exact rationals.
pub type Combination = Vec<(usize, Rat)>;

/// One graded piece of the filtration: its index, its dimension within the
/// ambient weight block, a deterministic representative and that
/// representative's restriction to the degenerate fibre.
#[derive(Debug, Clone)]
pub struct LeafRecord {
    pub l_vector: LVector,
    pub weight: Weight,
    pub dim: usize,
    pub representative: Combination,
    pub initial_form: LaurentPoly,
    pub zero_initial_form: bool,
}

/// The principal output: all leaves of positive dimension plus the counts
/// needed to judge whether the run is consistent with one-dimensionality.
#[derive(Debug, Clone)]
pub struct CanonicalBasis {
    pub leaves: Vec<LeafRecord>,
    pub dim_v: usize,
    pub expected_dim: Option<u64>,
    pub sum_leaf_dims: usize,
    /// Maximum total leaf dimension over all ℓ (summed across weight blocks).
    pub max_leaf_dim: usize,
    pub zero_initial_forms: usize,
}

impl CanonicalBasis {
    /// The run is consistent with the one-dimensionality conjecture: every
    /// leaf is a line and the leaves exhaust the section space.
    pub fn conjecture_consistent(&self) -> bool {
        self.max_leaf_dim <= 1 && self.sum_leaf_dims == self.dim_v
    }
}

struct WeightGroup {
    weight: Weight,
    /// Global tableau indices whose sections form a basis of the block.
    basis: Vec<usize>,
    /// Union of the parameter supports of the basis sweeps.
    support: Vec<Vec<i32>>,
    /// Vanishing conditions: for each support vector, one row per entry
    /// monomial, as coefficient vectors over the basis coordinates.
    rows_by_support: BTreeMap<Vec<i32>, Vec<Vec<Rat>>>,
}

/// A fixed section space `(n, word, m)` with everything precomputed: the
/// tableaux, their sections and sweeps, and the per-weight linear systems.
pub struct SectionSpaceContext {
    n: usize,
    word: Word,
    m: Vec<i64>,
    lambda: Option<Weight>,
    table: Arc<VarTable>,
    sub: OneParamSubgroup,
    tableaux: Vec<Tableau>,
    sections: Vec<SectionPoly>,
    sweeps: Vec<LaurentPoly>,
    weights: Vec<Weight>,
    groups: Vec<WeightGroup>,
    dim: usize,
}

impl SectionSpaceContext {
    /// Build the context for the `V_λ` model: requires a reduced expression
    /// of the longest element.
    pub fn for_lambda(n: usize, word: &Word, lambda: &Weight) -> Result<Self, FiltrationError> {
        if !is_reduced_w0(word, n)? {
            return Err(LieError::NotReducedW0.into());
        }
        let m = mu_from_lambda(word, lambda)?;
        let mut ctx = Self::build(n, word, &m)?;
        ctx.lambda = Some(lambda.clone());
        Ok(ctx)
    }

    /// Build the context for an explicit m-vector (generalized Demazure
    /// regime); the word need not be reduced.
    pub fn for_m(n: usize, word: &Word, m: &[i64]) -> Result<Self, FiltrationError> {
        word.validate(n)?;
        Self::build(n, word, m)
    }

    fn build(n: usize, word: &Word, m: &[i64]) -> Result<Self, FiltrationError> {
        if m.len() != word.len() {
            return Err(FiltrationError::BadMVectorLength(m.len(), word.len()));
        }
        if m.iter().any(|&x| x < 0) {
            return Err(FiltrationError::NegativeMultiplicity);
        }
        let table = section_var_table(n, word);
        let parabolics: Vec<_> = word
            .letters()
            .iter()
            .enumerate()
            .map(|(k, &i)| generic_parabolic(&table, n, i, k + 1))
            .collect();
        let partials = partial_products(&parabolics);
        let tableaux = enumerate_tableaux(n, word, m);
        let sections: Vec<SectionPoly> = tableaux
            .iter()
            .map(|t| section_of_tableau(&partials, &table, t))
            .collect();
        let sub = one_param_subgroup(n);
        let sweeps: Vec<LaurentPoly> = sections
            .iter()
            .map(|s| sweep_poly(&s.value, &sub))
            .collect();
        let weights: Vec<Weight> = tableaux.iter().map(|t| tableau_weight(t, n)).collect();

        // group tableaux by weight, in tableau order within each group
        let mut by_weight: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in weights.iter().enumerate() {
            by_weight.entry(w.clone()).or_default().push(i);
        }

        let mut groups = Vec::new();
        let mut dim = 0;
        for (weight, members) in by_weight {
            // greedy basis selection over interned entry monomials
            let mut monomials: BTreeMap<crate::laurent::Monomial, usize> = BTreeMap::new();
            for &i in &members {
                for (mono, _) in sections[i].value.terms() {
                    let next = monomials.len();
                    monomials.entry(mono.clone()).or_insert(next);
                }
            }
            let width = monomials.len();
            let mut echelon: Vec<Vec<Rat>> = Vec::new();
            let mut basis = Vec::new();
            for &i in &members {
                let mut v = vec![Rat::zero(); width];
                for (mono, c) in sections[i].value.terms() {
                    v[monomials[mono]] = c.clone();
                }
                linalg::reduce_against(&echelon, &mut v);
                if v.iter().any(|x| !x.is_zero()) {
                    basis.push(i);
                    echelon = linalg::row_space(
                        &echelon
                            .iter()
                            .cloned()
                            .chain(std::iter::once(v))
                            .collect::<Vec<_>>(),
                        width,
                    );
                }
            }
            dim += basis.len();

            // vanishing conditions, keyed by parameter support vector
            let mut rows: BTreeMap<(Vec<i32>, Vec<i32>), Vec<Rat>> = BTreeMap::new();
            for (col, &i) in basis.iter().enumerate() {
                for (mono, c) in sweeps[i].terms() {
                    let key = (sweeps[i].param_part(mono), sweeps[i].entry_part(mono));
                    rows.entry(key)
                        .or_insert_with(|| vec![Rat::zero(); basis.len()])
                        [col] = c.clone();
                }
            }
            let mut rows_by_support: BTreeMap<Vec<i32>, Vec<Vec<Rat>>> = BTreeMap::new();
            for ((supp, _), row) in rows {
                rows_by_support.entry(supp).or_default().push(row);
            }
            let support: Vec<Vec<i32>> = rows_by_support.keys().cloned().collect();

            groups.push(WeightGroup {
                weight,
                basis,
                support,
                rows_by_support,
            });
        }

        Ok(SectionSpaceContext {
            n,
            word: word.clone(),
            m: m.to_vec(),
            lambda: None,
            table,
            sub,
            tableaux,
            sections,
            sweeps,
            weights,
            groups,
            dim,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn m_vector(&self) -> &[i64] {
        &self.m
    }

    pub fn lambda(&self) -> Option<&Weight> {
        self.lambda.as_ref()
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn subgroup(&self) -> &OneParamSubgroup {
        &self.sub
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn sections(&self) -> &[SectionPoly] {
        &self.sections
    }

    pub fn tableau_weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Dimension of the section space (rank of the tableau span).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Global tableau indices of the selected basis, in tableau order.
    pub fn basis_tableaux(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.groups.iter().flat_map(|g| g.basis.clone()).collect();
        all.sort_unstable();
        all
    }

    pub fn tableau_index(&self, label: &str) -> Option<usize> {
        self.tableaux.iter().position(|t| t.label() == label)
    }

    pub fn sweep_of_tableau(&self, idx: usize) -> SweptSection {
        SweptSection {
            value: self.sweeps[idx].clone(),
        }
    }

    /// Sweep of an arbitrary combination (linearity of the sweep).
    pub fn sweep_combination(&self, combo: &Combination) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(&self.table);
        for (idx, c) in combo {
            acc = &acc + &self.sweeps[*idx].scaled(c);
        }
        acc
    }

    /// The plain (unswept) polynomial of a combination.
    pub fn combination_poly(&self, combo: &Combination) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(&self.table);
        for (idx, c) in combo {
            acc = &acc + &self.sections[*idx].value.scaled(c);
        }
        acc
    }

    /// ℓ-vector of a combination, or an error on the zero section.
    pub fn l_vector_of(&self, combo: &Combination) -> Result<LVector, FiltrationError> {
        self.sweep_combination(combo)
            .min_exponents()
            .map(LVector)
            .ok_or(FiltrationError::ZeroSection)
    }

    /// Membership criterion for `F_ℓ`: every parameter-support vector of the
    /// sweep dominates ℓ. The zero section is in every `F_ℓ` by convention.
    pub fn in_filtration(&self, combo: &Combination, l: &LVector) -> bool {
        let sw = self.sweep_combination(combo);
        sw.parameter_support().iter().all(|m| dominates(m, &l.0))
    }

    /// Initial form: the graded piece of the sweep at the combination's own
    /// ℓ-vector (the restriction of the twisted sweep to the special fibre).
    pub fn initial_form(&self, combo: &Combination) -> Result<LaurentPoly, FiltrationError> {
        let sw = self.sweep_combination(combo);
        let l = sw
            .min_exponents()
            .ok_or(FiltrationError::ZeroSection)?;
        Ok(sw.graded_piece(&l))
    }

    fn group_f_space(&self, g: &WeightGroup, l: &[i32]) -> Vec<Vec<Rat>> {
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for (supp, supp_rows) in &g.rows_by_support {
            if !dominates(supp, l) {
                rows.extend(supp_rows.iter().cloned());
            }
        }
        if rows.is_empty() {
            // no condition applies: the whole block
            return (0..g.basis.len())
                .map(|i| {
                    let mut v = vec![Rat::zero(); g.basis.len()];
                    v[i] = Rat::one();
                    v
                })
                .collect();
        }
        RationalMatrix::from_rows(rows).kernel()
    }

    fn group_f_greater(&self, g: &WeightGroup, l: &[i32]) -> Vec<Vec<Rat>> {
        let mut bases = Vec::new();
        for j in 0..l.len() {
            let mut up = l.to_vec();
            up[j] += 1;
            bases.push(self.group_f_space(g, &up));
        }
        linalg::subspace_sum(&bases, g.basis.len())
    }

    /// Basis of `F_ℓ` as combinations over the tableau list.
    pub fn f_space(&self, l: &LVector) -> Vec<Combination> {
        assert_eq!(l.0.len(), self.word.len(), "ℓ-vector length mismatch");
        let mut out = Vec::new();
        for g in &self.groups {
            for v in self.group_f_space(g, &l.0) {
                out.push(group_combination(g, &v));
            }
        }
        out
    }

    /// Basis of `F_{>ℓ} = Σ_j F_{ℓ+e_j}` as combinations over the tableaux.
    pub fn f_greater(&self, l: &LVector) -> Vec<Combination> {
        assert_eq!(l.0.len(), self.word.len(), "ℓ-vector length mismatch");
        let mut out = Vec::new();
        for g in &self.groups {
            for v in self.group_f_greater(g, &l.0) {
                out.push(group_combination(g, &v));
            }
        }
        out
    }

    /// The candidate grid: the product, over coordinates, of the distinct
    /// values occurring in the union of all parameter supports. Every
    /// ℓ-vector of every combination lies on the grid.
    pub fn candidate_grid(&self) -> Vec<LVector> {
        let axes = self.grid_axes();
        let mut grid = vec![Vec::new()];
        for axis in &axes {
            let mut next = Vec::with_capacity(grid.len() * axis.len());
            for g in &grid {
                for &v in axis {
                    let mut e = g.clone();
                    e.push(v);
                    next.push(e);
                }
            }
            grid = next;
        }
        grid.into_iter().map(LVector).collect()
    }

    /// Distinct support values per coordinate over all weight blocks.
    pub fn grid_axes(&self) -> Vec<Vec<i32>> {
        let mut axes: Vec<BTreeSet<i32>> = vec![BTreeSet::new(); self.word.len()];
        for g in &self.groups {
            for supp in &g.support {
                for (j, &v) in supp.iter().enumerate() {
                    axes[j].insert(v);
                }
            }
        }
        axes.into_iter()
            .map(|s| s.into_iter().collect())
            .collect()
    }

    /// Run the full pipeline and extract the canonical basis.
    pub fn canonical_basis(&self) -> CanonicalBasis {
        self.canonical_basis_with_axes(None)
    }

    /// Same pipeline over explicitly supplied per-group grid axes (used to
    /// verify grid completeness by enlargement). `None` means each group's
    /// natural axes.
    pub fn canonical_basis_with_axes(&self, extra: Option<&[Vec<i32>]>) -> CanonicalBasis {
        let mut leaves: Vec<LeafRecord> = Vec::new();
        for g in &self.groups {
            // per-group axes from the group's own support
            let n_params = self.word.len();
            let mut axes: Vec<BTreeSet<i32>> = vec![BTreeSet::new(); n_params];
            for supp in &g.support {
                for (j, &v) in supp.iter().enumerate() {
                    axes[j].insert(v);
                }
            }
            if let Some(extra_axes) = extra {
                for (j, vals) in extra_axes.iter().enumerate() {
                    axes[j].extend(vals.iter().copied());
                }
            }
            let axes: Vec<Vec<i32>> = axes.into_iter().map(|s| s.into_iter().collect()).collect();
            let mut points = vec![Vec::new()];
            for axis in &axes {
                let mut next = Vec::with_capacity(points.len() * axis.len());
                for p in &points {
                    for &v in axis {
                        let mut e = p.clone();
                        e.push(v);
                        next.push(e);
                    }
                }
                points = next;
            }
            for l in points {
                let f_basis = self.group_f_space(g, &l);
                if f_basis.is_empty() {
                    continue;
                }
                let greater = self.group_f_greater(g, &l);
                let leaf_dim = f_basis.len() - greater.len();
                if leaf_dim == 0 {
                    continue;
                }
                // deterministic representatives: reduce the echelon basis of
                // F_ℓ against F_{>ℓ} and keep the vectors that add new pivots
                let mut span = linalg::row_space(&greater, g.basis.len());
                let mut reps: Vec<Vec<Rat>> = Vec::new();
                for v in &f_basis {
                    let mut w = v.clone();
                    linalg::reduce_against(&span, &mut w);
                    if w.iter().any(|x| !x.is_zero()) {
                        let lead = w.iter().find(|x| !x.is_zero()).unwrap().clone();
                        let w: Vec<Rat> = w.iter().map(|x| x / &lead).collect();
                        span = linalg::row_space(
                            &span
                                .iter()
                                .cloned()
                                .chain(std::iter::once(w.clone()))
                                .collect::<Vec<_>>(),
                            g.basis.len(),
                        );
                        reps.push(w);
                    }
                }
                assert_eq!(reps.len(), leaf_dim, "complement extraction mismatch");
                let rep = group_combination(g, &reps[0]);
                let sw = self.sweep_combination(&rep);
                let init = sw.graded_piece(&l);
                leaves.push(LeafRecord {
                    l_vector: LVector(l),
                    weight: g.weight.clone(),
                    dim: leaf_dim,
                    zero_initial_form: init.is_zero(),
                    initial_form: init,
                    representative: rep,
                });
            }
        }
        leaves.sort_by(|a, b| {
            (&a.l_vector, &a.weight).cmp(&(&b.l_vector, &b.weight))
        });
        let sum_leaf_dims = leaves.iter().map(|l| l.dim).sum();
        let mut per_l: BTreeMap<&LVector, usize> = BTreeMap::new();
        for leaf in &leaves {
            *per_l.entry(&leaf.l_vector).or_default() += leaf.dim;
        }
        let max_leaf_dim = per_l.values().copied().max().unwrap_or(0);
        let zero_initial_forms = leaves.iter().filter(|l| l.zero_initial_form).count();
        let expected_dim = self
            .lambda
            .as_ref()
            .map(|lam| weyl_dim(self.n, lam).expect("dominant by construction"));
        CanonicalBasis {
            leaves,
            dim_v: self.dim,
            expected_dim,
            sum_leaf_dims,
            max_leaf_dim,
            zero_initial_forms,
        }
    }

    /// Prevaluation probe: `ℓ(s1+s2) ≥ min(ℓ(s1), ℓ(s2))` coordinatewise and
    /// scaling invariance of the ℓ-vector. All three sections must be
    /// non-zero.
    pub fn check_prevaluation(
        &self,
        s1: &Combination,
        s2: &Combination,
    ) -> Result<bool, FiltrationError> {
        let l1 = self.l_vector_of(s1)?;
        let l2 = self.l_vector_of(s2)?;
        let sum: Combination = add_combinations(s1, s2);
        let l_sum = self.l_vector_of(&sum)?;
        let min = l1.min_with(&l2);
        if !min.le(&l_sum) {
            return Ok(false);
        }
        for alpha in [crate::laurent::rat(2), crate::laurent::rat(-3), crate::laurent::ratio(7, 5)]
        {
            let scaled: Combination = s1.iter().map(|(i, c)| (*i, c * &alpha)).collect();
            if self.l_vector_of(&scaled)? != l1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn dominates(supp: &[i32], l: &[i32]) -> bool {
    supp.iter().zip(l).all(|(a, b)| a >= b)
}

fn group_combination(g: &WeightGroup, coords: &[Rat]) -> Combination {
    g.basis
        .iter()
        .zip(coords)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&i, c)| (i, c.clone()))
        .collect()
}

/// Merge two sparse combinations, dropping cancellations.
pub fn add_combinations(a: &Combination, b: &Combination) -> Combination {
    let mut map: BTreeMap<usize, Rat> = BTreeMap::new();
    for (i, c) in a.iter().chain(b) {
        let e = map.entry(*i).or_insert_with(Rat::zero);
        *e += c;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Scale a combination by a non-zero rational.
pub fn scale_combination(a: &Combination, alpha: &Rat) -> Combination {
    assert!(!alpha.is_zero());
    a.iter().map(|(i, c)| (*i, c * alpha)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{rat, EntryVar};

    fn sl3_ctx() -> SectionSpaceContext {
        let word = Word(vec![1, 2, 1]);
        let lambda = Weight::from_fundamental(3, &[1, 1]);
        SectionSpaceContext::for_lambda(3, &word, &lambda).unwrap()
    }

    fn single(ctx: &SectionSpaceContext, label: &str) -> Combination {
        vec![(ctx.tableau_index(label).unwrap(), rat(1))]
    }

    const TABLE: [(&str, [i32; 3]); 8] = [
        ("(121)", [-2, -2, -1]),
        ("(122)", [-1, -2, -1]),
        ("(131)", [-1, -1, -1]),
        ("(231)", [0, -1, -1]),
        ("(232)", [1, -1, -1]),
        ("(132)", [0, -1, -1]),
        ("(133)", [1, 1, 0]),
        ("(233)", [2, 1, 0]),
    ];

    #[test]
    fn the_lvector_table() {
        let ctx = sl3_ctx();
        for (label, expected) in TABLE {
            let idx = ctx.tableau_index(label).unwrap();
            let lv = l_vector(&ctx.sweep_of_tableau(idx)).unwrap();
            assert_eq!(lv, LVector(expected.to_vec()), "tableau {label}");
        }
    }

    #[test]
    fn difference_row_of_the_table() {
        let ctx = sl3_ctx();
        let combo = add_combinations(
            &single(&ctx, "(231)"),
            &scale_combination(&single(&ctx, "(132)"), &rat(-1)),
        );
        assert_eq!(ctx.l_vector_of(&combo).unwrap(), LVector(vec![0, 0, 0]));
    }

    #[test]
    fn zero_section_has_no_lvector() {
        let ctx = sl3_ctx();
        assert_eq!(
            ctx.l_vector_of(&Vec::new()),
            Err(FiltrationError::ZeroSection)
        );
    }

    #[test]
    fn filtration_membership_examples() {
        let ctx = sl3_ctx();
        let s231 = single(&ctx, "(231)");
        assert!(ctx.in_filtration(&s231, &LVector(vec![0, -1, -1])));
        assert!(!ctx.in_filtration(&s231, &LVector(vec![0, 0, 0])));
        let diff = add_combinations(
            &s231,
            &scale_combination(&single(&ctx, "(132)"), &rat(-1)),
        );
        assert!(ctx.in_filtration(&diff, &LVector(vec![0, 0, 0])));
        // far below the global support everything is a member
        assert!(ctx.in_filtration(&s231, &LVector(vec![-99, -99, -99])));
        assert!(ctx.in_filtration(&Vec::new(), &LVector(vec![5, 5, 5])));
    }

    #[test]
    fn f_space_dimensions() {
        let ctx = sl3_ctx();
        assert_eq!(ctx.f_space(&LVector(vec![0, -1, -1])).len(), 5);
        assert_eq!(ctx.f_space(&LVector(vec![-9, -9, -9])).len(), 8);
        assert_eq!(ctx.f_space(&LVector(vec![3, 2, 1])).len(), 0);
        assert_eq!(ctx.f_greater(&LVector(vec![0, -1, -1])).len(), 4);
        // strictly above the top of the support nothing remains
        assert_eq!(ctx.f_greater(&LVector(vec![9, 9, 9])).len(), 0);
    }

    #[test]
    fn filtration_is_decreasing() {
        let ctx = sl3_ctx();
        let low = LVector(vec![-1, -2, -1]);
        let high = LVector(vec![0, -1, -1]);
        let f_low: Vec<Vec<Rat>> = ctx
            .f_space(&low)
            .iter()
            .map(|c| combo_dense(&ctx, c))
            .collect();
        let f_high: Vec<Vec<Rat>> = ctx
            .f_space(&high)
            .iter()
            .map(|c| combo_dense(&ctx, c))
            .collect();
        assert!(linalg::subspace_contained(&f_high, &f_low, ctx.tableaux().len()));
        // f_greater is always inside f_space
        let fg: Vec<Vec<Rat>> = ctx
            .f_greater(&high)
            .iter()
            .map(|c| combo_dense(&ctx, c))
            .collect();
        assert!(linalg::subspace_contained(&fg, &f_high, ctx.tableaux().len()));
    }

    fn combo_dense(ctx: &SectionSpaceContext, c: &Combination) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); ctx.tableaux().len()];
        for (i, x) in c {
            v[*i] = x.clone();
        }
        v
    }

    #[test]
    fn initial_form_of_121() {
        let ctx = sl3_ctx();
        let table = ctx.table();
        let iform = ctx.initial_form(&single(&ctx, "(121)")).unwrap();
        let e = |b, r, c| LaurentPoly::entry(table, EntryVar { block: b, row: r, col: c });
        let expected = &(&(&e(2, 1, 1) * &e(2, 2, 2))
            * &(&(&e(1, 1, 1) * &e(1, 2, 2)) - &(&e(1, 1, 2) * &e(1, 2, 1))))
            * &(&(&e(1, 1, 1) * &e(2, 1, 1)) * &e(3, 1, 1));
        assert_eq!(iform, expected);
    }

    #[test]
    fn initial_form_of_single_support_is_the_coefficient() {
        let ctx = sl3_ctx();
        let s233 = single(&ctx, "(233)");
        let sw = ctx.sweep_combination(&s233);
        assert_eq!(sw.parameter_support().len(), 1);
        let iform = ctx.initial_form(&s233).unwrap();
        assert_eq!(iform, sw.set_params_one());
    }

    #[test]
    fn canonical_basis_of_the_sl3_example() {
        let ctx = sl3_ctx();
        let basis = ctx.canonical_basis();
        assert_eq!(basis.dim_v, 8);
        assert_eq!(basis.expected_dim, Some(8));
        assert_eq!(basis.leaves.len(), 8);
        assert!(basis.leaves.iter().all(|l| l.dim == 1));
        assert_eq!(basis.sum_leaf_dims, 8);
        assert_eq!(basis.max_leaf_dim, 1);
        assert!(basis.conjecture_consistent());
        let ls: BTreeSet<Vec<i32>> = basis.leaves.iter().map(|l| l.l_vector.0.clone()).collect();
        let expected: BTreeSet<Vec<i32>> = [
            vec![-2, -2, -1],
            vec![-1, -2, -1],
            vec![-1, -1, -1],
            vec![0, -1, -1],
            vec![1, -1, -1],
            vec![0, 0, 0],
            vec![1, 1, 0],
            vec![2, 1, 0],
        ]
        .into_iter()
        .collect();
        assert_eq!(ls, expected);
        assert_eq!(basis.zero_initial_forms, 0);
        // no representative mixes weights, and none is empty
        for leaf in &basis.leaves {
            assert!(!leaf.representative.is_empty());
            let w0 = &ctx.tableau_weights()[leaf.representative[0].0];
            for (i, _) in &leaf.representative {
                assert_eq!(&ctx.tableau_weights()[*i], w0);
            }
            assert_eq!(&leaf.weight, w0);
        }
        // every representative lies in F_l but outside F_{>l}
        for leaf in &basis.leaves {
            assert!(ctx.in_filtration(&leaf.representative, &leaf.l_vector));
            assert_eq!(
                ctx.l_vector_of(&leaf.representative).unwrap(),
                leaf.l_vector
            );
            let greater: Vec<Vec<Rat>> = ctx
                .f_greater(&leaf.l_vector)
                .iter()
                .map(|c| combo_dense(&ctx, c))
                .collect();
            let rref = linalg::row_space(&greater, ctx.tableaux().len());
            assert!(!linalg::in_row_space(
                &rref,
                &combo_dense(&ctx, &leaf.representative)
            ));
        }
    }

    #[test]
    fn trivial_weight_gives_the_constant_leaf() {
        let word = Word(vec![1, 2, 1]);
        let ctx =
            SectionSpaceContext::for_lambda(3, &word, &Weight::zero(3)).unwrap();
        let basis = ctx.canonical_basis();
        assert_eq!(basis.dim_v, 1);
        assert_eq!(basis.leaves.len(), 1);
        assert_eq!(basis.leaves[0].l_vector, LVector(vec![0, 0, 0]));
        assert_eq!(
            ctx.combination_poly(&basis.leaves[0].representative),
            LaurentPoly::one(ctx.table())
        );
    }

    #[test]
    fn sl2_standard_representation() {
        let word = Word(vec![1]);
        let lambda = Weight::from_fundamental(2, &[1]);
        let ctx = SectionSpaceContext::for_lambda(2, &word, &lambda).unwrap();
        let basis = ctx.canonical_basis();
        assert_eq!(basis.dim_v, 2);
        assert_eq!(basis.leaves.len(), 2);
        let mut coords: Vec<i32> = basis.leaves.iter().map(|l| l.l_vector.0[0]).collect();
        coords.sort_unstable();
        assert_eq!(coords.len(), 2);
        assert_ne!(coords[0], coords[1]);
    }

    #[test]
    fn non_reduced_word_is_rejected_in_lambda_mode() {
        let word = Word(vec![1, 1, 2]);
        let lambda = Weight::from_fundamental(3, &[1, 1]);
        match SectionSpaceContext::for_lambda(3, &word, &lambda) {
            Err(e) => assert_eq!(e, FiltrationError::Lie(LieError::NotReducedW0)),
            Ok(_) => panic!("non-reduced word must be rejected"),
        }
    }

    #[test]
    fn prevaluation_examples() {
        let ctx = sl3_ctx();
        let s231 = single(&ctx, "(231)");
        let neg132 = scale_combination(&single(&ctx, "(132)"), &rat(-1));
        assert!(ctx.check_prevaluation(&s231, &neg132).unwrap());
        assert!(ctx.check_prevaluation(&s231, &s231).unwrap());
        assert_eq!(
            ctx.check_prevaluation(&s231, &scale_combination(&s231, &rat(-1))),
            Err(FiltrationError::ZeroSection)
        );
    }

    #[test]
    fn grid_contains_all_basis_lvectors() {
        let ctx = sl3_ctx();
        let grid: BTreeSet<LVector> = ctx.candidate_grid().into_iter().collect();
        for (label, _) in TABLE {
            let idx = ctx.tableau_index(label).unwrap();
            let lv = l_vector(&ctx.sweep_of_tableau(idx)).unwrap();
            assert!(grid.contains(&lv));
        }
    }

    #[test]
    fn grid_enlargement_does_not_change_the_leaves() {
        let ctx = sl3_ctx();
        let base = ctx.canonical_basis();
        let enlarged_axes: Vec<Vec<i32>> = ctx
            .grid_axes()
            .iter()
            .map(|axis| {
                let lo = axis.first().unwrap() - 1;
                let hi = axis.last().unwrap() + 1;
                let mut a = axis.clone();
                a.push(lo);
                a.push(hi);
                a
            })
            .collect();
        let enlarged = ctx.canonical_basis_with_axes(Some(&enlarged_axes));
        assert_eq!(base.leaves.len(), enlarged.leaves.len());
        for (a, b) in base.leaves.iter().zip(&enlarged.leaves) {
            assert_eq!(a.l_vector, b.l_vector);
            assert_eq!(a.dim, b.dim);
            assert_eq!(a.representative, b.representative);
        }
    }
}
