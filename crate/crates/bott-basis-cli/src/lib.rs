//! Command-line pipeline around `bott-basis`: config validation, report
//! serialization, a content-addressed cache, and the bundled verification
//! suite run by `bott-basis selftest`.

pub mod cache;
pub mod config;
pub mod report;
pub mod run;
pub mod selfcheck;

use bott_basis::filtration::SectionSpaceContext;
use bott_basis::lie::Weight;
use bott_basis::polytopes::crystal::crystal_string_points;
use bott_basis::polytopes::{
    affine_match_with_matrix, convex_hull, find_upper_unimodular_map, polytope_equal,
    AffineLatticeMap,
};
use config::CliError;
use report::StringCompareReport;
use std::collections::BTreeSet;

/// The map from the worked SL(3) comparison; tried before searching.
pub fn known_sl3_matrix() -> Vec<Vec<i64>> {
    vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]
}

/// Compare the string points of `B(λ)` with the leaf ℓ-vectors: try the
/// identity, then the known SL(3) matrix where it applies, then a bounded
/// search over upper-triangular unimodular maps. NOT-FOUND makes no claim
/// of inequivalence.
pub fn string_compare_for(
    ctx: &SectionSpaceContext,
    lambda: &Weight,
) -> Result<StringCompareReport, CliError> {
    let basis = ctx.canonical_basis();
    let lvectors: Vec<Vec<i64>> = basis
        .leaves
        .iter()
        .map(|l| l.l_vector.0.iter().map(|&c| c as i64).collect::<Vec<i64>>())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let strings = crystal_string_points(ctx.n(), lambda, ctx.word())
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let mut witness: Option<AffineLatticeMap> = None;
    let identity = AffineLatticeMap::identity(ctx.word().len()).matrix;
    for candidate in [Some(identity), sl3_candidate(ctx)].into_iter().flatten() {
        if let Some(map) = affine_match_with_matrix(&candidate, &strings, &lvectors) {
            witness = Some(map);
            break;
        }
    }
    if witness.is_none() {
        witness = find_upper_unimodular_map(&strings, &lvectors, 2);
    }

    match witness {
        Some(map) => {
            let string_hull =
                convex_hull(&strings).map_err(|e| CliError::Internal(e.to_string()))?;
            let lvector_hull =
                convex_hull(&lvectors).map_err(|e| CliError::Internal(e.to_string()))?;
            let mapped_hull = bott_basis::polytopes::affine_image(&string_hull, &map)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            Ok(StringCompareReport {
                status: "EQUIVALENT".into(),
                matrix: Some(map.matrix.clone()),
                offset: Some(map.offset.clone()),
                points_equal: true,
                hull_vertices_equal: polytope_equal(&mapped_hull, &lvector_hull),
            })
        }
        None => Ok(StringCompareReport {
            status: "NOT-FOUND".into(),
            matrix: None,
            offset: None,
            points_equal: false,
            hull_vertices_equal: false,
        }),
    }
}

fn sl3_candidate(ctx: &SectionSpaceContext) -> Option<Vec<Vec<i64>>> {
    if ctx.n() == 3 && ctx.word().letters() == [1, 2, 1] {
        Some(known_sl3_matrix())
    } else {
        None
    }
}
