//! Exact independence polynomials of small graphs, their roots, and
//! exhaustive surveys of root moduli over trees, forests and graphs.

pub mod bounds;
pub mod canon;
pub mod dd;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indpoly;
pub mod mis;
pub mod poly;
pub mod report;
pub mod roots;
pub mod survey;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{GraphError, PolyError, RootError, SurveyError};
pub use families::{build_family, Family};
pub use graph::{Graph, MAX_VERTICES};
pub use graph6::{from_edge_list, from_graph6, to_edge_list, to_graph6};
pub use indpoly::{
    alpha, closed_form, ek_annulus, independence_polynomial, independence_polynomial_tree,
    max_coeff_ratio, mu, xi, Annulus,
};
pub use mis::is_well_covered;
pub use poly::IntPoly;
pub use roots::{
    certify_real_root_left_of, find_roots, find_roots_with, max_modulus_root, Bracket,
    RealRootCertificate, Root, RootConfig, RootReport,
};
pub use survey::{maxmod_exhaustive, GraphClass, SurveyContext, SurveyOptions, SurveyRecord};
