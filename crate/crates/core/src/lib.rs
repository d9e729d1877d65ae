//! Maximum cliques in intersection graphs of unit disks and 2-pancakes,
//! cobipartite-neighbourhood edge elimination orderings, and the line
//! transversal machinery for triples of disjoint disks.

pub mod geometry;
pub mod graphs;
pub mod cneeo;
pub mod transversal;
pub mod pseudodisk;
pub mod instance;
pub mod generators;
