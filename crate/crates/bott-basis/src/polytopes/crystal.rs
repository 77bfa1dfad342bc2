//! The type-A tableau crystal: semistandard Young tableaux with entries in
//! `{1..n}`, raising and lowering operators by the signature rule on the
//! column reading word (columns right to left, top to bottom), and string
//! coordinates along a reduced word. This is a character oracle independent
//! of the section pipeline, so the two can be checked against each other.

use crate::lie::{weyl_dim, LieError, Weight, Word};
use std::collections::BTreeSet;

/// A semistandard tableau: rows weakly increase, columns strictly increase.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrystalElement {
    pub rows: Vec<Vec<u8>>,
}

impl CrystalElement {
    pub fn is_semistandard(&self, n: usize) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > n {
                    return false;
                }
                if c + 1 < row.len() && row[c + 1] < v {
                    return false;
                }
                if r + 1 < self.rows.len() {
                    if let Some(&below) = self.rows[r + 1].get(c) {
                        if below <= v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Content of the tableau as a weight (count of each entry value).
    pub fn weight(&self, n: usize) -> Weight {
        let mut coords = vec![0i64; n];
        for row in &self.rows {
            for &v in row {
                coords[v as usize - 1] += 1;
            }
        }
        Weight::from_coords(coords)
    }

    /// Cell coordinates in reading order: columns right to left, each
    /// column top to bottom.
    fn reading_order(&self) -> Vec<(usize, usize)> {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut cells = Vec::new();
        for c in (0..width).rev() {
            for (r, row) in self.rows.iter().enumerate() {
                if c < row.len() {
                    cells.push((r, c));
                }
            }
        }
        cells
    }

    /// Uncancelled signature for letter `i`: positions of surviving `-`
    /// (entries `i+1`) and `+` (entries `i`), after cancelling each `+`
    /// immediately left of a `-`.
    fn signature(&self, i: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let mut plus: Vec<(usize, usize)> = Vec::new();
        let mut minus: Vec<(usize, usize)> = Vec::new();
        for (r, c) in self.reading_order() {
            let v = self.rows[r][c] as usize;
            if v == i {
                plus.push((r, c));
            } else if v == i + 1 {
                if plus.is_empty() {
                    minus.push((r, c));
                } else {
                    plus.pop();
                }
            }
        }
        (minus, plus)
    }

    /// Raising operator: turn the rightmost surviving `i+1` into `i`.
    pub fn raise(&self, i: usize) -> Option<CrystalElement> {
        let (minus, _) = self.signature(i);
        let &(r, c) = minus.last()?;
        let mut out = self.clone();
        out.rows[r][c] = i as u8;
        Some(out)
    }

    /// Lowering operator: turn the leftmost surviving `i` into `i+1`.
    pub fn lower(&self, i: usize) -> Option<CrystalElement> {
        let (_, plus) = self.signature(i);
        let &(r, c) = plus.first()?;
        let mut out = self.clone();
        out.rows[r][c] = (i + 1) as u8;
        Some(out)
    }

    /// Number of times `raise(i)` applies.
    pub fn epsilon(&self, i: usize) -> usize {
        self.signature(i).0.len()
    }
}

/// Partition shape of a dominant weight: its canonical coordinates.
pub fn partition_of(lambda: &Weight) -> Result<Vec<usize>, LieError> {
    if !lambda.is_dominant() {
        let i = (1..lambda.n())
            .find(|&i| lambda.pairing_coroot(i) < 0)
            .unwrap();
        return Err(LieError::NotDominant(i));
    }
    Ok(lambda
        .coords()
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| c as usize)
        .collect())
}

/// The highest-weight tableau: row `r` filled with the value `r`.
pub fn highest_weight_tableau(lambda: &Weight) -> Result<CrystalElement, LieError> {
    let shape = partition_of(lambda)?;
    Ok(CrystalElement {
        rows: shape
            .iter()
            .enumerate()
            .map(|(r, &len)| vec![(r + 1) as u8; len])
            .collect(),
    })
}

/// The full crystal `B(λ)`, generated from the highest-weight element by the
/// lowering operators; returned in sorted order.
pub fn crystal_elements(n: usize, lambda: &Weight) -> Result<Vec<CrystalElement>, LieError> {
    let hw = highest_weight_tableau(lambda)?;
    let mut seen: BTreeSet<CrystalElement> = BTreeSet::new();
    let mut queue = vec![hw];
    while let Some(el) = queue.pop() {
        if !seen.insert(el.clone()) {
            continue;
        }
        for i in 1..n {
            if let Some(lowered) = el.lower(i) {
                debug_assert!(lowered.is_semistandard(n));
                queue.push(lowered);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// String coordinates of one element along a word: apply `raise(i_1)`
/// maximally, record the count, then `raise(i_2)`, and so on.
pub fn string_coords(el: &CrystalElement, word: &Word) -> Vec<i64> {
    let mut cur = el.clone();
    let mut coords = Vec::with_capacity(word.len());
    for &i in word.letters() {
        let mut count = 0i64;
        while let Some(next) = cur.raise(i) {
            cur = next;
            count += 1;
        }
        coords.push(count);
    }
    coords
}

/// One string point per crystal element of `B(λ)`; requires a reduced
/// expression so that the count equals `dim V_λ` and the points are
/// distinct.
pub fn crystal_string_points(
    n: usize,
    lambda: &Weight,
    word: &Word,
) -> Result<Vec<Vec<i64>>, LieError> {
    if !crate::lie::is_reduced_w0(word, n)? {
        return Err(LieError::NotReducedW0);
    }
    let elements = crystal_elements(n, lambda)?;
    debug_assert_eq!(elements.len() as u64, weyl_dim(n, lambda)?);
    Ok(elements.iter().map(|el| string_coords(el, word)).collect())
}
