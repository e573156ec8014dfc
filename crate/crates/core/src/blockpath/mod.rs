//! Block-graph recognition, unique shortest paths and their color data.

mod audit;
mod blocks;
mod paths;

pub use audit::{
    structural_audit, AuditReport, CheckResult, CheckStatus, AT_MOST_TWO_PER_COLOR,
    AUDIT_VERTEX_LIMIT, BRANCH_COLOR_EXCLUSION, EQUIVALENT_PATHS_ISOMORPHIC,
    OVERLAPPING_PATH_UNION, SYMMETRIC_SAME_COLOR_PATHS,
};
pub use blocks::{
    biconnected_components, is_block_graph, BlockDecomposition, BlockVerdict, NonBlockWitness,
};
pub use paths::{
    path_lambda, paths_equivalent, paths_isomorphic, shortest_path, LambdaMultiset, PathDescriptor,
    PathRelation, ShortestPaths,
};
