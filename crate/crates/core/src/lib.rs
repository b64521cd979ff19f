//! Exact chromatic symmetric functions in the elementary basis for paths,
//! cycles and the graphs obtained from them by vertex twinning.

pub mod partitions;
pub mod symfun;
pub mod powerseries;
pub mod graphs;
pub mod csf;
pub mod families;
pub mod verify;

pub use csf::{csf, CsfError};
pub use families::{compute, FamilyError, FamilyTag, Method};
pub use graphs::{Family, Graph, GraphError};
pub use partitions::{epsilon, partitions_of, Partition, PartitionError};
pub use powerseries::{Named, Series, SeriesError};
pub use symfun::SymE;
