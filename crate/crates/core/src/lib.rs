//! Decreasing rearrangements of step functions and radial profiles, the
//! maximal function `f**`, Lebesgue and Lorentz norms, and randomized checks
//! of the classical rearrangement inequalities.
//!
//! ```
//! use rearrange::step::{rearrange, SimpleFunction};
//!
//! let f = SimpleFunction::new([(0.0, 2.0, 1.0), (3.0, 4.0, 2.0)]).unwrap();
//! let sharp = rearrange(&f);
//! assert_eq!(sharp.ends(), &[1.0, 3.0]);
//! assert_eq!(sharp.values(), &[2.0, 1.0]);
//! ```

pub mod cli;
pub mod lorentz;
pub mod maximal;
pub mod numeric;
pub mod spec_file;
pub mod step;
pub mod verify;
