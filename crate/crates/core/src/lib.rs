//! Exact Ollivier-Ricci curvature of graph edges.
//!
//! Transport distances and curvatures are exact rationals. Every transport
//! value comes with a primal plan and a 1-Lipschitz potential of equal cost.

pub mod curvature;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod neighborhood;
pub mod rational;
pub mod spectral;
pub mod transport;

pub use curvature::{
    condensed, conjecture_scan, curvature_profile, curvature_report, edge_curvature, kappa_eps,
    rigidity_check, srg_curvature_certified, srg_formula, Certificate, ConjectureRow,
    CurvatureProfile, CurvatureReport, Method, RigidityReport,
};
pub use error::{Error, Result};
pub use generators::Family;
pub use graph::{Graph, SrgParams};
pub use matching::{AlternatingReach, Matching};
pub use neighborhood::{BipartiteGraph, CoreNeighborhood, Side};
pub use rational::Rational;
pub use spectral::{lambda1_checks, Lambda1Report};
pub use transport::{wasserstein, Measure, OptimalTransport, Potential, TransportPlan};
