//! Comtrace and generalized comtrace monoids over step sequences, their
//! canonical forms, and the constructions linking them to stratified and
//! generalized stratified order structures.
//!
//! Every construction is paired with a brute-force counterpart (class
//! enumeration, extension enumeration) so results can be cross-checked at
//! small scale.

pub mod alphabet;
pub mod canonical;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod format;
pub mod gen;
pub mod gsostruct;
pub mod lang;
pub mod par;
pub mod relorder;
pub mod sostruct;
pub mod stepseq;

pub use alphabet::{GAlphabet, RawAlphabet, Step};
pub use congruence::ClassSet;
pub use error::{Error, Result};
pub use gsostruct::GsoStructure;
pub use relorder::Relation;
pub use sostruct::SoStructure;
pub use stepseq::StepSeq;
