//! Command implementations. Each returns the rendered output plus the
//! process exit code (0 ok, 2 usage, 3 conjecture violation, 4 internal).

use crate::config::{CliError, Format, RunConfig};
use crate::report::{
    build_report, combination_string, render_csv, render_json, render_markdown, BasisReport,
    CheckOutcome,
};
use crate::{cache, string_compare_for};
use bott_basis::filtration::{l_vector, SectionSpaceContext};
use bott_basis::lie::weight_multiplicities;
use bott_basis::polytopes::convex_hull;
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

fn vec_str<T: std::fmt::Display>(v: &[T]) -> String {
    format!(
        "({})",
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    )
}

pub fn cmd_basis(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let cached = cfg.cache_dir.as_ref().and_then(|dir| {
        let path = cache::cache_path(dir, cfg.n, &cfg.word.0, &cfg.mu);
        cache::load(&path)
    });
    let report = match cached {
        // checks are cheap and never cached; recompute them if requested
        Some(mut report) => {
            if cfg.check_character || cfg.check_string || cfg.check_prevaluation {
                let ctx = cfg.build_context()?;
                attach_checks(cfg, &ctx, &mut report)?;
            }
            report
        }
        None => {
            let start = Instant::now();
            let ctx = cfg.build_context()?;
            let basis = ctx.canonical_basis();
            let mut report = build_report(&ctx, &basis, start.elapsed().as_millis());
            attach_checks(cfg, &ctx, &mut report)?;
            if let Some(dir) = &cfg.cache_dir {
                let path = cache::cache_path(dir, cfg.n, &cfg.word.0, &cfg.mu);
                // caching is best effort; failure to write is not an error
                let _ = cache::store(&path, &report);
            }
            report
        }
    };
    let code = basis_exit_code(&report);
    let out = match cfg.format {
        Format::Json => render_json(&report),
        Format::Md => render_markdown(&report),
        Format::Csv => render_csv(&report),
    };
    Ok((out, code))
}

fn basis_exit_code(report: &BasisReport) -> i32 {
    let mut code = 0;
    if report.diagnostics.conjecture_status != "consistent" {
        code = 3;
    }
    let check_failed = report
        .checks
        .character
        .as_ref()
        .is_some_and(|c| c.status != "pass")
        || report
            .checks
            .prevaluation
            .as_ref()
            .is_some_and(|c| c.status != "pass");
    if check_failed {
        code = 4;
    }
    code
}

fn attach_checks(
    cfg: &RunConfig,
    ctx: &SectionSpaceContext,
    report: &mut BasisReport,
) -> Result<(), CliError> {
    if cfg.check_character {
        report.checks.character = Some(character_outcome(cfg, ctx)?);
    }
    if cfg.check_string {
        let lambda = cfg.require_lambda()?;
        report.checks.string_compare = Some(string_compare_for(ctx, lambda)?);
    }
    if cfg.check_prevaluation {
        report.checks.prevaluation = Some(prevaluation_outcome(ctx));
    }
    Ok(())
}

fn character_outcome(
    cfg: &RunConfig,
    ctx: &SectionSpaceContext,
) -> Result<CheckOutcome, CliError> {
    let lambda = cfg.require_lambda()?;
    let expected = weight_multiplicities(cfg.n, lambda)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let basis = ctx.canonical_basis();
    let mut found: BTreeMap<bott_basis::Weight, u64> = BTreeMap::new();
    for leaf in &basis.leaves {
        *found.entry(leaf.weight.clone()).or_default() += leaf.dim as u64;
    }
    if found == expected {
        Ok(CheckOutcome {
            status: "pass".into(),
            detail: format!("{} weights match the character oracle", expected.len()),
        })
    } else {
        Ok(CheckOutcome {
            status: "fail".into(),
            detail: format!(
                "weight multisets differ: expected {:?}, found {:?}",
                expected, found
            ),
        })
    }
}

fn prevaluation_outcome(ctx: &SectionSpaceContext) -> CheckOutcome {
    let basis = ctx.canonical_basis();
    let reps: Vec<_> = basis
        .leaves
        .iter()
        .map(|l| l.representative.clone())
        .collect();
    let mut checked = 0usize;
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            match ctx.check_prevaluation(&reps[i], &reps[j]) {
                Ok(true) => checked += 1,
                Ok(false) => {
                    return CheckOutcome {
                        status: "fail".into(),
                        detail: format!("pair ({i},{j}) violates the prevaluation property"),
                    }
                }
                // a cancelling pair has no defined ℓ-vector and is vacuous
                Err(_) => {}
            }
        }
    }
    CheckOutcome {
        status: "pass".into(),
        detail: format!("{checked} representative pairs satisfy the prevaluation property"),
    }
}

#[derive(Serialize)]
struct LvectorRow {
    tableau: String,
    columns: Vec<Vec<Vec<usize>>>,
    weight: Vec<i64>,
    l_vector: Vec<i32>,
}

#[derive(Serialize)]
struct LvectorReport {
    n: usize,
    word: Vec<usize>,
    mu: Vec<i64>,
    rows: Vec<LvectorRow>,
}

pub fn cmd_lvectors(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let ctx = cfg.build_context()?;
    let rows: Vec<LvectorRow> = ctx
        .tableaux()
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let lv = l_vector(&ctx.sweep_of_tableau(i))
                .expect("tableau sections are non-zero");
            LvectorRow {
                tableau: t.label(),
                columns: t.columns.clone(),
                weight: ctx.tableau_weights()[i].coords().to_vec(),
                l_vector: lv.0,
            }
        })
        .collect();
    let report = LvectorReport {
        n: cfg.n,
        word: cfg.word.0.clone(),
        mu: cfg.mu.clone(),
        rows,
    };
    let out = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializes"),
        Format::Md => {
            let mut s = String::from("| tableau | weight | l-vector |\n|---|---|---|\n");
            for r in &report.rows {
                s.push_str(&format!(
                    "| {} | {} | {} |\n",
                    r.tableau,
                    vec_str(&r.weight),
                    vec_str(&r.l_vector)
                ));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("tableau,weight,l_vector\n");
            for r in &report.rows {
                s.push_str(&format!(
                    "{},\"{}\",\"{}\"\n",
                    r.tableau,
                    vec_str(&r.weight),
                    vec_str(&r.l_vector)
                ));
            }
            s
        }
    };
    Ok((out, 0))
}

#[derive(Serialize)]
struct GridRow {
    l: Vec<i32>,
    dim_f: usize,
    dim_greater: usize,
    leaf_dim: usize,
}

pub fn cmd_leaves(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let ctx = cfg.build_context()?;
    let rows: Vec<GridRow> = ctx
        .candidate_grid()
        .into_iter()
        .map(|l| {
            let dim_f = ctx.f_space(&l).len();
            let dim_greater = ctx.f_greater(&l).len();
            GridRow {
                dim_f,
                dim_greater,
                leaf_dim: dim_f - dim_greater,
                l: l.0,
            }
        })
        .collect();
    let out = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("serializes"),
        Format::Md => {
            let mut s =
                String::from("| l | dim F_l | dim F_>l | leaf dim |\n|---|---|---|---|\n");
            for r in &rows {
                s.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    vec_str(&r.l),
                    r.dim_f,
                    r.dim_greater,
                    r.leaf_dim
                ));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("l,dim_f,dim_greater,leaf_dim\n");
            for r in &rows {
                s.push_str(&format!(
                    "\"{}\",{},{},{}\n",
                    vec_str(&r.l),
                    r.dim_f,
                    r.dim_greater,
                    r.leaf_dim
                ));
            }
            s
        }
    };
    Ok((out, 0))
}

pub fn cmd_character_check(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let ctx = cfg.build_context()?;
    let outcome = character_outcome(cfg, &ctx)?;
    let code = if outcome.status == "pass" { 0 } else { 4 };
    let out = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&outcome).expect("serializes"),
        _ => format!("character check: {} ({})\n", outcome.status, outcome.detail),
    };
    Ok((out, code))
}

#[derive(Serialize)]
struct PolytopeReport {
    points: Vec<Vec<i64>>,
    vertices: Vec<Vec<i64>>,
    non_vertex_points: Vec<Vec<i64>>,
    interior_points: Vec<Vec<i64>>,
    lattice_point_count: usize,
}

pub fn cmd_polytope(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let ctx = cfg.build_context()?;
    let basis = ctx.canonical_basis();
    let points: Vec<Vec<i64>> = basis
        .leaves
        .iter()
        .map(|l| l.l_vector.0.iter().map(|&c| c as i64).collect())
        .collect();
    let hull = convex_hull(&points).map_err(|e| CliError::Internal(e.to_string()))?;
    let vertices = hull.vertices().to_vec();
    let non_vertex: Vec<Vec<i64>> = points
        .iter()
        .filter(|p| !vertices.contains(p))
        .cloned()
        .collect();
    let interior: Vec<Vec<i64>> = points
        .iter()
        .filter(|p| hull.is_interior(p))
        .cloned()
        .collect();
    let report = PolytopeReport {
        lattice_point_count: hull.lattice_points().len(),
        points,
        vertices,
        non_vertex_points: non_vertex,
        interior_points: interior,
    };
    let out = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializes"),
        _ => {
            let mut s = String::new();
            s.push_str(&format!("l-vectors: {}\n", report.points.len()));
            s.push_str(&format!(
                "hull vertices ({}):\n",
                report.vertices.len()
            ));
            for v in &report.vertices {
                s.push_str(&format!("  {}\n", vec_str(v)));
            }
            if !report.non_vertex_points.is_empty() {
                s.push_str("non-vertex l-vectors:\n");
                for v in &report.non_vertex_points {
                    s.push_str(&format!("  {}\n", vec_str(v)));
                }
            }
            if !report.interior_points.is_empty() {
                s.push_str("interior l-vectors:\n");
                for v in &report.interior_points {
                    s.push_str(&format!("  {}\n", vec_str(v)));
                }
            }
            s.push_str(&format!(
                "lattice points in hull: {}\n",
                report.lattice_point_count
            ));
            s
        }
    };
    Ok((out, 0))
}

pub fn cmd_string_compare(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let lambda = cfg.require_lambda()?.clone();
    let ctx = cfg.build_context()?;
    let report = string_compare_for(&ctx, &lambda)?;
    let out = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializes"),
        _ => {
            let mut s = format!("string compare: {}\n", report.status);
            if let (Some(a), Some(b)) = (&report.matrix, &report.offset) {
                s.push_str("witness map x -> Ax + b with\n  A =\n");
                for row in a {
                    s.push_str(&format!("    {}\n", vec_str(row)));
                }
                s.push_str(&format!("  b = {}\n", vec_str(b)));
            }
            s.push_str(&format!(
                "points equal: {}\nhull vertices equal: {}\n",
                report.points_equal, report.hull_vertices_equal
            ));
            s
        }
    };
    Ok((out, 0))
}

pub fn leaf_combination_strings(report: &BasisReport) -> Vec<String> {
    report
        .leaves
        .iter()
        .map(|l| combination_string(&l.combination))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{ConfigEcho, Diagnostics};

    fn dummy_report(status: &str) -> BasisReport {
        BasisReport {
            config: ConfigEcho {
                n: 3,
                word: vec![1, 2, 1],
                lambda: None,
                mu: vec![0, 1, 1],
                tool_version: "test".into(),
            },
            leaves: Vec::new(),
            diagnostics: Diagnostics {
                dim_expected: None,
                dim_found: 0,
                sum_leaf_dims: 0,
                max_leaf_dim: 0,
                zero_initial_forms: 0,
                conjecture_status: status.into(),
            },
            checks: Default::default(),
            timing_ms: 0,
        }
    }

    #[test]
    fn exit_codes_reflect_conjecture_status_and_checks() {
        assert_eq!(basis_exit_code(&dummy_report("consistent")), 0);
        assert_eq!(basis_exit_code(&dummy_report("violated")), 3);
        let mut with_check = dummy_report("consistent");
        with_check.checks.character = Some(CheckOutcome {
            status: "fail".into(),
            detail: String::new(),
        });
        assert_eq!(basis_exit_code(&with_check), 4);
    }
}
