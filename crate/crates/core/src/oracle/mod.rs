//! Classical MTL semantics as the ground-truth reference: brute-force
//! quantifier enumeration for discrete time, an exact interval-marking
//! computation for continuous time, and a mesh-based dense sampler that
//! cross-validates the latter.

mod continuous;
mod discrete;
mod sampler;

pub use continuous::oracle_continuous;
pub use discrete::{oracle_discrete, oracle_discrete_trace};
pub use sampler::sample_oracle_continuous;
