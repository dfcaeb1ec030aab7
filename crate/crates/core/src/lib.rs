//! Gröbner bases over PBW-reduction algebras and weight filtrations of
//! modules over them.

pub mod algebra;
pub mod bifilt;
pub mod coeff;
pub mod dmod;
pub mod error;
pub mod groebner;
pub mod homog;
pub mod linalg;
pub mod modfilt;
pub mod oracle;
pub mod order;
pub mod poly;
pub mod text;
pub mod weights;

pub use algebra::{Datum, PbwDatum};
pub use coeff::Coeff;
pub use error::{Error, Result};
pub use order::Order;
pub use poly::{FreeElement, Mon, Poly, Word};
