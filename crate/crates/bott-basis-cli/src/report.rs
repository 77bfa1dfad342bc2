//! Serializable reports. Exact rationals travel as decimal-free strings
//! ("p/q" or "p"), ℓ-vectors and weights as integer arrays, tableaux as
//! arrays of arrays of integer arrays (position → columns → rows), so a
//! report round-trips losslessly through any JSON reader.

use bott_basis::filtration::{CanonicalBasis, SectionSpaceContext};
use bott_basis::laurent::Rat;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ConfigEcho {
    pub n: usize,
    pub word: Vec<usize>,
    pub lambda: Option<Vec<i64>>,
    pub mu: Vec<i64>,
    pub tool_version: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CombinationTerm {
    pub coeff: String,
    pub tableau: Vec<Vec<Vec<usize>>>,
    pub label: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LeafEntry {
    pub l_vector: Vec<i32>,
    pub weight: Vec<i64>,
    pub dim: usize,
    pub combination: Vec<CombinationTerm>,
    pub initial_form: String,
    pub zero_initial_form: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Diagnostics {
    pub dim_expected: Option<u64>,
    pub dim_found: usize,
    pub sum_leaf_dims: usize,
    pub max_leaf_dim: usize,
    pub zero_initial_forms: usize,
    pub conjecture_status: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct ChecksReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub string_compare: Option<StringCompareReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prevaluation: Option<CheckOutcome>,
}

impl ChecksReport {
    pub fn is_empty(&self) -> bool {
        self.character.is_none() && self.string_compare.is_none() && self.prevaluation.is_none()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CheckOutcome {
    pub status: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct StringCompareReport {
    pub status: String,
    pub matrix: Option<Vec<Vec<i64>>>,
    pub offset: Option<Vec<i64>>,
    pub points_equal: bool,
    pub hull_vertices_equal: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BasisReport {
    pub config: ConfigEcho,
    pub leaves: Vec<LeafEntry>,
    pub diagnostics: Diagnostics,
    #[serde(skip_serializing_if = "ChecksReport::is_empty", default)]
    pub checks: ChecksReport,
    pub timing_ms: u128,
}

impl BasisReport {
    /// Field-by-field equality ignoring the timing.
    pub fn equivalent(&self, other: &BasisReport) -> bool {
        self.config == other.config
            && self.leaves == other.leaves
            && self.diagnostics == other.diagnostics
            && self.checks == other.checks
    }
}

pub fn coeff_string(c: &Rat) -> String {
    c.to_string()
}

pub fn build_report(
    ctx: &SectionSpaceContext,
    basis: &CanonicalBasis,
    timing_ms: u128,
) -> BasisReport {
    let leaves = basis
        .leaves
        .iter()
        .map(|leaf| LeafEntry {
            l_vector: leaf.l_vector.0.clone(),
            weight: leaf.weight.coords().to_vec(),
            dim: leaf.dim,
            combination: leaf
                .representative
                .iter()
                .map(|(idx, c)| CombinationTerm {
                    coeff: coeff_string(c),
                    tableau: ctx.tableaux()[*idx].columns.clone(),
                    label: ctx.tableaux()[*idx].label(),
                })
                .collect(),
            initial_form: leaf.initial_form.to_string(),
            zero_initial_form: leaf.zero_initial_form,
        })
        .collect();
    BasisReport {
        config: ConfigEcho {
            n: ctx.n(),
            word: ctx.word().letters().to_vec(),
            lambda: ctx.lambda().map(|l| l.fundamental_coeffs()),
            mu: ctx.m_vector().to_vec(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        },
        leaves,
        diagnostics: Diagnostics {
            dim_expected: basis.expected_dim,
            dim_found: basis.dim_v,
            sum_leaf_dims: basis.sum_leaf_dims,
            max_leaf_dim: basis.max_leaf_dim,
            zero_initial_forms: basis.zero_initial_forms,
            conjecture_status: if basis.conjecture_consistent() {
                "consistent".to_string()
            } else {
                "violated".to_string()
            },
        },
        checks: ChecksReport::default(),
        timing_ms,
    }
}

fn vec_str<T: std::fmt::Display>(v: &[T]) -> String {
    format!(
        "({})",
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    )
}

/// `s(121)`, `s(123) - 1/2*s(132)`, ...
pub fn combination_string(terms: &[CombinationTerm]) -> String {
    let mut out = String::new();
    for (k, term) in terms.iter().enumerate() {
        let c = &term.coeff;
        let (neg, mag) = match c.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, c.as_str()),
        };
        let body = if mag == "1" {
            format!("s{}", term.label)
        } else {
            format!("{}*s{}", mag, term.label)
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Markdown table, `tableau | combination | weight | ℓ-vector` per leaf.
pub fn render_markdown(report: &BasisReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# Canonical basis for n={}, word={}, {}\n\n",
        report.config.n,
        vec_str(&report.config.word),
        match &report.config.lambda {
            Some(l) => format!("lambda={}", vec_str(l)),
            None => format!("mu={}", vec_str(&report.config.mu)),
        }
    ));
    out.push_str("| tableau | combination | weight | l-vector |\n");
    out.push_str("|---|---|---|---|\n");
    for leaf in &report.leaves {
        let lead = leaf
            .combination
            .first()
            .map(|t| t.label.clone())
            .unwrap_or_default();
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            lead,
            combination_string(&leaf.combination),
            vec_str(&leaf.weight),
            vec_str(&leaf.l_vector),
        ));
    }
    out.push('\n');
    let d = &report.diagnostics;
    out.push_str(&format!(
        "- dim found: {}{}\n- sum of leaf dims: {}\n- max leaf dim: {}\n- conjecture status: {}\n",
        d.dim_found,
        match d.dim_expected {
            Some(e) => format!(" (expected {e})"),
            None => String::new(),
        },
        d.sum_leaf_dims,
        d.max_leaf_dim,
        d.conjecture_status,
    ));
    if d.zero_initial_forms > 0 {
        out.push_str(&format!(
            "- zero initial forms: {}\n",
            d.zero_initial_forms
        ));
    }
    if let Some(ch) = &report.checks.character {
        out.push_str(&format!("- character check: {} ({})\n", ch.status, ch.detail));
    }
    if let Some(sc) = &report.checks.string_compare {
        out.push_str(&format!(
            "- string compare: {} (points equal: {}, hull vertices equal: {})\n",
            sc.status, sc.points_equal, sc.hull_vertices_equal
        ));
    }
    if let Some(pv) = &report.checks.prevaluation {
        out.push_str(&format!(
            "- prevaluation check: {} ({})\n",
            pv.status, pv.detail
        ));
    }
    out
}

/// CSV rows with the same columns as the markdown table plus the leaf dim.
pub fn render_csv(report: &BasisReport) -> String {
    let mut out = String::from("tableau,combination,weight,l_vector,dim\n");
    for leaf in &report.leaves {
        let lead = leaf
            .combination
            .first()
            .map(|t| t.label.clone())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},\"{}\",\"{}\",\"{}\",{}\n",
            lead,
            combination_string(&leaf.combination),
            vec_str(&leaf.weight),
            vec_str(&leaf.l_vector),
            leaf.dim,
        ));
    }
    out
}

pub fn render_json(report: &BasisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}
