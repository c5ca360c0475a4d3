//! Boundary operators, chain maps, identity checks and homotopy witnesses.

mod boundary;
mod report;
mod theorem1;
mod theorem2;
mod witness;

pub use boundary::{boundary, BoundaryAssignment, ComplexElement, Side};
pub use report::{IdentityReport, Status};
pub use theorem1::{MapKind, Space, Tagged, Theorem1};
pub use theorem2::{theorem2_identity1, theorem2_identity2, verify_theorem2, Sides};
pub(crate) use theorem2::render_list;
pub use witness::{homotopy_witness, WitnessOutcome};
pub(crate) use witness::monomials_up_to;
