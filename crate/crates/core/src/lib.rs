//! Exact computation with finite matroids: duality, union and intersection,
//! Rado matroids, and the coRado description of intersections with tropical
//! hyperplanes, together with the Bergman-fan and Chow-ring layers built on it.

pub mod bergman;
pub mod chow;
pub mod enumerate;
pub mod error;
pub mod ground;
pub mod io;
pub mod matroid;
pub mod ops;
pub mod rado;
pub mod verify;

pub use bergman::{BergmanFan, Flag, StableIntersection};
pub use chow::{BergmanClass, SimplicialMonomial};
pub use error::{Error, Result};
pub use ground::{GroundSet, Subset};
pub use matroid::{Matroid, RankTable};
pub use rado::{BipartiteGraph, SetSystem};
