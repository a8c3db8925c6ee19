//! Exact enumeration and cyclic-sieving verification for polygon
//! multidissections and their cluster-algebra models.

pub mod actions;
pub mod clusterlab;
pub mod cspverify;
pub mod error;
pub mod polygons;
pub mod qseries;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use polygons::{
    AEdge, CEdge, Chord, Color, DEdge, Edge, Family, Multidissection, enumerate_classical,
    enumerate_multidissections,
};
pub use qseries::{IntLaurentPoly, RootEvaluation};
pub use symfunc::{ClassicalVariant, SpecPoint};
pub use tableaux::TwoRowShape;
