//! Generalized `(m, n)` polynomial invariants of finite quandles and
//! biquandles, polynomial matrices, and the multiset-valued link
//! invariants obtained from coloring images.
//!
//! ```
//! use quandle_poly::algebra::alexander_quandle_poly;
//! use quandle_poly::invariants::{period, qp};
//!
//! // Z_2[t]/(t^2 + 1)
//! let q = alexander_quandle_poly(2, &[1, 0, 1]).unwrap().table;
//! assert_eq!(qp(&q, 1, 1).to_string(), "4s^2t^2");
//! assert_eq!(period(&q).unwrap(), 2);
//! ```

pub mod algebra;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod links;
pub mod perm;
pub mod poly;

pub use algebra::{Algebra, BiquandleTable, ElementSet, Kind, QuandleTable, Table};
pub use error::{Error, Result};
pub use poly::{Poly, PolyMatrix, PolyMultiset};
