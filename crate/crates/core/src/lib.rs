//! Hub labelings of weighted graphs: construction, queries, verification,
//! greedy hierarchical algorithms, approximation, exact small-instance
//! oracles, highway-dimension tools and instance generators.

pub mod approx;
pub mod center;
pub mod dist;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod highway;
pub mod labeling;
pub mod oracles;

pub use dist::{DistMatrix, VertexPair};
pub use graph::{Graph, GraphError, Length, Vertex};
pub use labeling::{Labeling, Order};
