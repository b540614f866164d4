//! Community detection and mesoscopic structure profiling for undirected
//! graphs: detectors, per-community quality metrics, metric correlation,
//! and bivariate topology maps with generative baselines.

pub mod detect;
pub mod error;
pub mod gen;
pub mod graph;
pub mod metrics;
pub mod partition;
pub mod profile;
pub mod text;

pub use error::{Error, Result};
pub use graph::{community_view, load_edge_list, CommunityView, Graph, LoadReport};
pub use partition::{connected_components, export_partition, import_partition, Partition};
