pub mod charring;
pub mod cli;
pub mod cones;
pub mod error;
pub mod global_sl2;
pub mod hecke;
pub mod intertwining;
pub mod linalg;
pub mod lp;
pub mod padic;
pub mod qfield;
pub mod root_datum;
pub mod series;
pub mod verify;
pub mod weyl_identities;

pub use error::{Error, Result};
pub use qfield::{QValue, RatFunc};
pub use root_datum::{preset, Coweight, Parabolic, RootDatum};
