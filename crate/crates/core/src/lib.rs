//! Exact combinatorics of the graph of zigzag diagrams.
//!
//! The crate covers four connected pieces:
//!
//! * [`composition`], [`permutation`] and [`graph`]: zigzag diagrams, their
//!   `+`/`-` word encoding, descent shapes of permutations, the graded graph
//!   (subword order) with dimension, path counts and the Martin kernel.
//! * [`qsym`]: the fundamental (F) and monomial (M) bases of quasisymmetric
//!   functions with shuffle product, comultiplication and the conjugation
//!   involution.
//! * [`characters`] and [`sym`]: oriented paintboxes, the characters they
//!   define on the F basis, and the symmetric-function values used to check
//!   the projection onto Thoma-type parameters.
//! * [`sampler`]: random arrangements directed by a paintbox, heights and
//!   convergence experiments.
//!
//! All exact quantities are [`Rational`]s (arbitrary precision).

pub mod characters;
pub mod cli;
pub mod composition;
pub mod error;
pub mod graph;
pub mod permutation;
pub mod qsym;
pub mod rational;
pub mod sampler;
pub mod sym;

pub use characters::{CharacterEvaluator, Interval, Orientation, OrientedPaintbox, RankedFrequencies};
pub use composition::{BinaryWord, Composition, Sign};
pub use error::{Error, Result};
pub use sampler::ArrangementPrefix;
pub use permutation::Permutation;
pub use qsym::{Basis, QSymElement};
pub use rational::Rational;
