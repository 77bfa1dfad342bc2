//! Type A root and weight combinatorics for SL(n): weights modulo trace,
//! reduced words, the row-scaling one-parameter subgroup, and the character
//! oracles (Weyl dimension, Freudenthal multiplicities) used for
//! cross-checking the section pipeline.

use num::{BigInt, ToPrimitive};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("letter {0} is out of range for SL({1})")]
    LetterOutOfRange(usize, usize),
    #[error("weight is not dominant: pairing with coroot {0} is negative")]
    NotDominant(usize),
    #[error("word is not a reduced expression of the longest element")]
    NotReducedW0,
}

/// A weight of SL(n): an integer vector of length `n` taken modulo the
/// all-ones vector. The stored representative is canonical (minimum
/// coordinate zero), so derived equality and ordering are well defined.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn from_coords(coords: Vec<i64>) -> Weight {
        assert!(!coords.is_empty());
        let min = *coords.iter().min().unwrap();
        Weight {
            coords: coords.iter().map(|c| c - min).collect(),
        }
    }

    pub fn zero(n: usize) -> Weight {
        Weight { coords: vec![0; n] }
    }

    /// The basis weight `e_a` (1-based).
    pub fn e(n: usize, a: usize) -> Weight {
        let mut coords = vec![0; n];
        coords[a - 1] = 1;
        Weight::from_coords(coords)
    }

    /// The fundamental weight `ϖ_i = e_1 + ... + e_i`.
    pub fn fundamental(n: usize, i: usize) -> Weight {
        assert!((1..n).contains(&i));
        let mut coords = vec![0; n];
        for c in coords.iter_mut().take(i) {
            *c = 1;
        }
        Weight::from_coords(coords)
    }

    /// `Σ c_i ϖ_i` from coefficients over the fundamental weights.
    pub fn from_fundamental(n: usize, coeffs: &[i64]) -> Weight {
        assert_eq!(coeffs.len(), n - 1, "need n-1 fundamental coefficients");
        // ϖ_i has coordinates (1,...,1,0,...,0); summing gives partial tails
        let mut coords = vec![0i64; n];
        for (i, &c) in coeffs.iter().enumerate() {
            for coord in coords.iter_mut().take(i + 1) {
                *coord += c;
            }
        }
        Weight::from_coords(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.n(), other.n());
        Weight::from_coords(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `⟨λ, α_i^∨⟩ = λ_i - λ_{i+1}` (1-based simple root index).
    pub fn pairing_coroot(&self, i: usize) -> i64 {
        self.coords[i - 1] - self.coords[i]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// Coefficients over the fundamental weights, defined for any weight.
    pub fn fundamental_coeffs(&self) -> Vec<i64> {
        (1..self.n()).map(|i| self.pairing_coroot(i)).collect()
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.coords
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A word in the simple reflections, letters in `1..n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn validate(&self, n: usize) -> Result<(), LieError> {
        match self.0.iter().find(|&&i| i == 0 || i >= n) {
            Some(&i) => Err(LieError::LetterOutOfRange(i, n)),
            None => Ok(()),
        }
    }
}

impl std::fmt::Display for Word {
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

/// True iff `w` is a reduced expression of the longest Weyl element: the
/// length is n(n-1)/2 and the product of adjacent transpositions is the
/// order-reversing permutation.
pub fn is_reduced_w0(w: &Word, n: usize) -> Result<bool, LieError> {
    w.validate(n)?;
    if w.len() != n * (n - 1) / 2 {
        return Ok(false);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for &i in w.letters() {
        perm.swap(i - 1, i);
    }
    Ok(perm.iter().enumerate().all(|(k, &v)| v == n - 1 - k))
}

/// The convenience reduced word (1, 2,1, 3,2,1, ...) for the longest element.
pub fn default_w0_word(n: usize) -> Word {
    let mut letters = Vec::new();
    for k in 2..=n {
        for i in (1..k).rev() {
            letters.push(i);
        }
    }
    Word(letters)
}

/// The one-parameter subgroup `S(t) = diag(t^{a_1},...,t^{a_n})` pairing to
/// `t -> t^q` with every simple root, with `q` minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneParamSubgroup {
    pub q: i64,
    pub a: Vec<i64>,
}

impl OneParamSubgroup {
    pub fn n(&self) -> usize {
        self.a.len()
    }
}

/// Minimal-q subgroup for SL(n): the exponents form an arithmetic progression
/// with step `-q` summing to zero, so `q = 1` for odd `n` and `q = 2` for
/// even `n`.
pub fn one_param_subgroup(n: usize) -> OneParamSubgroup {
    assert!(n >= 2);
    let q: i64 = if n % 2 == 1 { 1 } else { 2 };
    let top = q * (n as i64 - 1) / 2;
    let a = (0..n as i64).map(|i| top - q * i).collect();
    OneParamSubgroup { q, a }
}

/// The m-vector realising `V_λ` over a reduced word: `m_k = ⟨λ, α_i^∨⟩` when
/// `k` is the last occurrence of the letter `i`, and zero otherwise.
pub fn mu_from_lambda(word: &Word, lambda: &Weight) -> Result<Vec<i64>, LieError> {
    let n = lambda.n();
    word.validate(n)?;
    for i in 1..n {
        if lambda.pairing_coroot(i) < 0 {
            return Err(LieError::NotDominant(i));
        }
    }
    let mut m = vec![0i64; word.len()];
    let mut seen = vec![false; n];
    for (k, &i) in word.letters().iter().enumerate().rev() {
        if !seen[i] {
            seen[i] = true;
            m[k] = lambda.pairing_coroot(i);
        }
    }
    Ok(m)
}

/// `dim V_λ` by the Weyl dimension formula.
pub fn weyl_dim(n: usize, lambda: &Weight) -> Result<u64, LieError> {
    if !lambda.is_dominant() {
        let i = (1..n).find(|&i| lambda.pairing_coroot(i) < 0).unwrap();
        return Err(LieError::NotDominant(i));
    }
    let c = lambda.coords();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for a in 0..n {
        for b in a + 1..n {
            num *= BigInt::from(c[a] - c[b] + (b as i64 - a as i64));
            den *= BigInt::from(b as i64 - a as i64);
        }
    }
    Ok((num / den).to_u64().expect("dimension fits in u64"))
}

/// Full weight multiset of `V_λ` by Freudenthal recursion on dominant
/// weights followed by Weyl-orbit (permutation) expansion.
pub fn weight_multiplicities(n: usize, lambda: &Weight) -> Result<BTreeMap<Weight, u64>, LieError> {
    if !lambda.is_dominant() {
        let i = (1..n).find(|&i| lambda.pairing_coroot(i) < 0).unwrap();
        return Err(LieError::NotDominant(i));
    }
    let lam: Vec<i64> = lambda.coords().to_vec();
    let total: i64 = lam.iter().sum();

    // dominant candidates: weakly decreasing, non-negative, same total,
    // dominated by λ (partial sums bounded by those of λ)
    let mut candidates: Vec<Vec<i64>> = Vec::new();
    let mut stack: Vec<(Vec<i64>, i64)> = vec![(Vec::new(), total)];
    while let Some((prefix, rest)) = stack.pop() {
        let k = prefix.len();
        if k == n {
            if rest == 0 {
                candidates.push(prefix);
            }
            continue;
        }
        let max_prev = if k == 0 { rest } else { prefix[k - 1] };
        let lam_partial: i64 = lam.iter().take(k + 1).sum();
        let prefix_sum: i64 = prefix.iter().sum();
        for v in (0..=max_prev.min(lam_partial - prefix_sum)).rev() {
            // remaining coordinates are at most v each
            if rest - v <= v * (n as i64 - k as i64 - 1) {
                let mut p = prefix.clone();
                p.push(v);
                stack.push((p, rest - v));
            }
        }
    }
    // order by depth (height of λ - μ in the root lattice), shallow first
    let depth = |mu: &Vec<i64>| -> i64 {
        let mut d = 0;
        let mut acc = 0;
        for i in 0..n - 1 {
            acc += lam[i] - mu[i];
            d += acc;
        }
        d
    };
    candidates.sort_by_key(|mu| (depth(mu), mu.clone()));

    // scaled trace-free form: n·w - (Σw)·1, keeps everything in ℤ
    let hat = |w: &[i64]| -> Vec<i128> {
        let s: i128 = w.iter().map(|&x| x as i128).sum();
        w.iter().map(|&x| n as i128 * x as i128 - s).collect()
    };
    let dot = |u: &[i128], v: &[i128]| -> i128 { u.iter().zip(v).map(|(a, b)| a * b).sum() };
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let add = |u: &[i128], v: &[i128]| -> Vec<i128> {
        u.iter().zip(v).map(|(a, b)| a + b).collect()
    };
    let rho_hat = hat(&rho);
    let lam_hat = hat(&lam);
    let lam_rho = add(&lam_hat, &rho_hat);
    let norm_lam = dot(&lam_rho, &lam_rho);

    // positive roots e_a - e_b, a < b
    let mut pos_roots: Vec<Vec<i64>> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut r = vec![0i64; n];
            r[a] = 1;
            r[b] = -1;
            pos_roots.push(r);
        }
    }

    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for mu in &candidates {
        if *mu == lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mu_hat = hat(mu);
        let mut rhs: i128 = 0;
        for alpha in &pos_roots {
            let alpha_hat = hat(alpha);
            for k in 1.. {
                let shifted: Vec<i64> =
                    mu.iter().zip(alpha).map(|(m, a)| m + k * a).collect();
                let mut dom = shifted.clone();
                dom.sort_unstable_by(|a, b| b.cmp(a));
                let Some(&m_up) = mult.get(&dom) else { break };
                let shifted_hat = hat(&shifted);
                rhs += dot(&shifted_hat, &alpha_hat) * m_up as i128;
            }
        }
        let mu_rho = add(&mu_hat, &rho_hat);
        let denom = norm_lam - dot(&mu_rho, &mu_rho);
        assert!(denom > 0, "Freudenthal denominator must be positive");
        assert_eq!(2 * rhs % denom, 0, "Freudenthal division must be exact");
        let val = 2 * rhs / denom;
        if val > 0 {
            mult.insert(mu.clone(), val as u64);
        }
    }

    // expand Weyl orbits: all distinct permutations of each dominant weight
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (mu, m) in &mult {
        for perm in distinct_permutations(mu) {
            out.insert(Weight::from_coords(perm), *m);
        }
    }
    Ok(out)
}

fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(sorted.clone());
        // next permutation in lexicographic order
        let Some(i) = (0..sorted.len() - 1).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            break;
        };
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_checks() {
        assert!(is_reduced_w0(&Word(vec![1, 2, 1]), 3).unwrap());
        assert!(is_reduced_w0(&Word(vec![2, 1, 2]), 3).unwrap());
        assert!(!is_reduced_w0(&Word(vec![1, 1, 2]), 3).unwrap());
        assert!(!is_reduced_w0(&Word(vec![1, 2]), 3).unwrap());
        assert!(is_reduced_w0(&Word(vec![1]), 2).unwrap());
        assert_eq!(
            is_reduced_w0(&Word(vec![3]), 3),
            Err(LieError::LetterOutOfRange(3, 3))
        );
    }

    #[test]
    fn default_words_are_reduced() {
        for n in 2..=5 {
            assert!(is_reduced_w0(&default_w0_word(n), n).unwrap());
        }
    }

    #[test]
    fn subgroup_small_cases() {
        let s3 = one_param_subgroup(3);
        assert_eq!((s3.q, s3.a.clone()), (1, vec![1, 0, -1]));
        let s2 = one_param_subgroup(2);
        assert_eq!((s2.q, s2.a.clone()), (2, vec![1, -1]));
        let s4 = one_param_subgroup(4);
        assert_eq!((s4.q, s4.a.clone()), (2, vec![3, 1, -1, -3]));
    }

    #[test]
    fn subgroup_pairs_to_q_with_every_simple_root() {
        for n in 2..=6 {
            let s = one_param_subgroup(n);
            for i in 0..n - 1 {
                assert_eq!(s.a[i] - s.a[i + 1], s.q);
            }
            assert_eq!(s.a.iter().sum::<i64>(), 0);
        }
    }

    /// Brute-force oracle: smallest q admitting an integer vector a with
    /// Σa = 0 and a_i - a_{i+1} = q.
    fn brute_force_min_q(n: usize) -> (i64, Vec<i64>) {
        for q in 1..=4i64 {
            // a is determined by a_1; need n*a_1 = q*n(n-1)/2
            let num = q * (n as i64) * (n as i64 - 1) / 2;
            if num % n as i64 == 0 {
                let a1 = num / n as i64;
                let a: Vec<i64> = (0..n as i64).map(|i| a1 - q * i).collect();
                return (q, a);
            }
        }
        unreachable!("q search bound too small")
    }

    #[test]
    fn subgroup_matches_brute_force() {
        for n in 2..=5 {
            let s = one_param_subgroup(n);
            let (q, a) = brute_force_min_q(n);
            assert_eq!((s.q, s.a), (q, a));
        }
    }

    #[test]
    fn mu_from_lambda_cases() {
        let w = Word(vec![1, 2, 1]);
        let rho = Weight::from_fundamental(3, &[1, 1]);
        assert_eq!(mu_from_lambda(&w, &rho).unwrap(), vec![0, 1, 1]);
        let w1 = Weight::from_fundamental(3, &[1, 0]);
        assert_eq!(mu_from_lambda(&w, &w1).unwrap(), vec![0, 0, 1]);
        assert_eq!(mu_from_lambda(&w, &Weight::zero(3)).unwrap(), vec![0, 0, 0]);
        let bad = Weight::from_coords(vec![0, 1, 0]);
        assert!(mu_from_lambda(&w, &bad).is_err());
    }

    #[test]
    fn mu_support_is_last_occurrences() {
        let w = Word(vec![2, 1, 2, 1, 2, 1]);
        let lambda = Weight::from_fundamental(3, &[2, 3]);
        let m = mu_from_lambda(&w, &lambda).unwrap();
        // only the final occurrence of each letter carries weight
        assert_eq!(m, vec![0, 0, 0, 0, 3, 2]);
    }

    #[test]
    fn weyl_dims() {
        assert_eq!(weyl_dim(3, &Weight::from_fundamental(3, &[1, 1])).unwrap(), 8);
        assert_eq!(weyl_dim(3, &Weight::from_fundamental(3, &[1, 0])).unwrap(), 3);
        assert_eq!(weyl_dim(3, &Weight::zero(3)).unwrap(), 1);
        assert_eq!(weyl_dim(4, &Weight::from_fundamental(4, &[0, 1, 0])).unwrap(), 6);
        assert_eq!(weyl_dim(3, &Weight::from_fundamental(3, &[2, 0])).unwrap(), 6);
    }

    #[test]
    fn freudenthal_adjoint_of_sl3() {
        let rho = Weight::from_fundamental(3, &[1, 1]);
        let mult = weight_multiplicities(3, &rho).unwrap();
        assert_eq!(mult.len(), 7);
        assert_eq!(mult[&Weight::zero(3)], 2);
        let ones: usize = mult.values().filter(|&&m| m == 1).count();
        assert_eq!(ones, 6);
        assert_eq!(mult.values().sum::<u64>(), 8);
    }

    #[test]
    fn freudenthal_standard_rep() {
        let w1 = Weight::from_fundamental(3, &[1, 0]);
        let mult = weight_multiplicities(3, &w1).unwrap();
        let expected: BTreeMap<Weight, u64> = (1..=3)
            .map(|a| (Weight::e(3, a), 1))
            .collect();
        assert_eq!(mult, expected);
        let trivial = weight_multiplicities(3, &Weight::zero(3)).unwrap();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[&Weight::zero(3)], 1);
    }

    #[test]
    fn freudenthal_sums_match_weyl_dim() {
        for n in 2..=4 {
            let mut lambdas = Vec::new();
            for c1 in 0..=2i64 {
                for c2 in 0..=1i64 {
                    let mut coeffs = vec![0i64; n - 1];
                    coeffs[0] = c1;
                    if n > 2 {
                        coeffs[n - 2] = c2;
                    }
                    lambdas.push(Weight::from_fundamental(n, &coeffs));
                }
            }
            for lambda in lambdas {
                let total: u64 = weight_multiplicities(n, &lambda)
                    .unwrap()
                    .values()
                    .sum();
                assert_eq!(total, weyl_dim(n, &lambda).unwrap(), "λ={lambda}");
            }
        }
    }
}
