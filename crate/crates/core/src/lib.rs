//! Motion lower bounds for coherent configurations and distance-regular graphs.

pub mod catalog;
pub mod coherence;
pub mod config;
pub mod distinguish;
pub mod drg;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod linalg;
pub mod motion;
pub mod oracle;
pub mod outcome;
pub mod rank4;
pub mod wl;

pub use coherence::{classify, structure_constants, ClassificationReport, CoherenceViolation, StructureConstants};
pub use config::{parse_configuration_json, Color, Configuration, Violation};
pub use error::{Error, ParseError, Result};
pub use graph::{parse_edge_list, Graph};
pub use motion::{certify, MotionCertificate, Rule};
