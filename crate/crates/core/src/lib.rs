//! Exact products of Schubert classes under the direct-sum map of Grassmannians,
//! computed by enumerating DS pipe dreams.
//!
//! The three rings are ordinary homology (`H`), torus-equivariant homology
//! (`HS`, coefficients in `Z[t]`) and torus-equivariant K-homology (`KS`,
//! coefficients in `Z[q, q^-1]` with `q = exp(t)`).

pub mod cli;
pub mod coeffs;
pub mod enumerate;
pub mod error;
pub mod juggling;
pub mod oracle;
pub mod partitions;
pub mod region;
pub mod ring;
pub mod tiles;

pub use coeffs::{Coefficient, IntPoly, KInteger, LaurentPoly};
pub use enumerate::{enumerate_dreams, expand, DreamWeight, Expansion, Mode, PipeDream};
pub use error::{Error, Result};
pub use partitions::{BitString, BoxedPartition};
pub use region::{build_region, Region};
pub use ring::{multiply, Element, RingElement};
pub use tiles::{Catalog, Half, Letter, Tile, Word};
