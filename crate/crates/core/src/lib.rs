pub mod classifier;
pub mod cli;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod planarity;

pub use classifier::{classify, Verdict, Witness};
pub use error::{Error, Result};
pub use partition::PartitionSpec;
