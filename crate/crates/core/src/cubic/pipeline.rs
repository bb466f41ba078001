use super::contraction::{build_g4, map_decomposition_to_g4, Step4Instance};
use super::gadgets::{build_g3, lift_decomposition_to_g3, LiftMode, Step3Instance, STRICT_LIFT_MIN_WIDTH};
use super::step1::{build_g1, ordering_to_g1_pathdec, Step1Instance};
use super::step2::{build_g2, build_g2_with_columns, lift_pathdec_to_g2, Step2Instance};
use super::CubicError;
use crate::decomposition::{cutwidth_of_ordering, verify_tree_decomposition, LinearOrdering, TreeDecomposition};
use crate::graph::Graph;

/// Smallest source size for which the reverse direction of the reduction is
/// guaranteed.
pub const VALIDITY_THRESHOLD: usize = 22;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PipelineConfig {
    /// Overrides the wall width of `24n` columns.
    pub wall_columns: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineStages {
    pub step1: Step1Instance,
    pub step2: Step2Instance,
    pub step3: Step3Instance,
    pub step4: Step4Instance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineResult {
    pub g4: Graph,
    /// `3n + k + 2` for the cutwidth `k` of the input ordering.
    pub target_width: i64,
    pub certificate: TreeDecomposition,
    pub stages: PipelineStages,
    /// The lift used at step 3: strict when the width allows it, compact
    /// otherwise.
    pub lift_mode: LiftMode,
    /// True when `n >= 22` and the walls have their default size, the range
    /// in which `tw(G4) = cw(G) + 3n + 2` is guaranteed.
    pub validity_flag: bool,
}

pub fn reduce_cutwidth_to_treewidth(
    g: &Graph,
    f: &LinearOrdering,
) -> Result<PipelineResult, CubicError> {
    reduce_cutwidth_to_treewidth_with(g, f, PipelineConfig::default())
}

pub fn reduce_cutwidth_to_treewidth_with(
    g: &Graph,
    f: &LinearOrdering,
    config: PipelineConfig,
) -> Result<PipelineResult, CubicError> {
    let step1 = build_g1(g)?;
    let k = cutwidth_of_ordering(g, f)?;
    let n = step1.n();
    let target_width = (3 * n + k + 2) as i64;

    let pd1 = ordering_to_g1_pathdec(&step1, f)?;
    let step2 = match config.wall_columns {
        Some(cols) => build_g2_with_columns(&step1, cols)?,
        None => build_g2(&step1),
    };
    let pd2 = lift_pathdec_to_g2(&step1, &step2, &pd1)?;
    let step3 = build_g3(&step1, &step2);
    let lift_mode = if target_width >= STRICT_LIFT_MIN_WIDTH { LiftMode::Strict } else { LiftMode::Compact };
    let td3 = lift_decomposition_to_g3(&step1, &step2, &step3, &pd2, lift_mode)?;
    let step4 = build_g4(&step3.graph, &step3.trace)?;
    let certificate = map_decomposition_to_g4(&step4, &td3);
    debug_assert!(verify_tree_decomposition(&step4.graph, &certificate).is_ok());

    Ok(PipelineResult {
        g4: step4.graph.clone(),
        target_width,
        certificate,
        validity_flag: n >= VALIDITY_THRESHOLD && step2.default_dimensions,
        lift_mode,
        stages: PipelineStages { step1, step2, step3, step4 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;
    use crate::graph::check_regularity;

    #[test]
    fn k4_small_walls() {
        let g = complete(4);
        let config = PipelineConfig { wall_columns: Some(5) };
        let r = reduce_cutwidth_to_treewidth_with(&g, &LinearOrdering::identity(&g), config).unwrap();
        assert!(check_regularity(&r.g4, 3));
        assert_eq!(r.target_width, 18);
        assert_eq!(verify_tree_decomposition(&r.g4, &r.certificate), Ok(18));
        assert!(!r.validity_flag);
        assert_eq!(r.lift_mode, LiftMode::Compact);
    }
}
