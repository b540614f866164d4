//! Corpus-level analysis of community metric records: correlation
//! structure with significance masking, the binned (CCF, hub dominance)
//! topology map split by community scale, quadrant classification, and
//! placement of generative models on that map.

mod bivariate;
mod correlation;
mod svg;

pub use bivariate::{
    bivariate_map, classify_topology, model_placement, BivariateProfile, Grids, PlacementRow,
    Thresholds, TopologyLabel,
};
pub use correlation::{
    correlation_matrix, correlation_to_csv, mask_to_csv, pearson, CorrelationMatrix,
};
pub use svg::heatmap_svg;
