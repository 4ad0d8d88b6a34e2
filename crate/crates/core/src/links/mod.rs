//! Link diagrams, their colorings by finite quandles and biquandles, and
//! the multiset invariants built from coloring images.

mod coloring;
mod diagram;
mod invariant;
mod pd;

pub use coloring::{biquandle_colorings, colorings, quandle_colorings, Coloring};
pub use diagram::{CrossingRoles, Diagram};
pub use invariant::{hom_image, phi, phi_matrix};
pub use pd::{builtin_diagram, parse_pd, Crossing, PdCode, Sign, BUILTIN_NAMES};
