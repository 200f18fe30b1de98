//! Mealy automata over finite alphabets, their inverse, reverse and dual,
//! and an exact verifier for the free action of the Aleshin automaton group.

pub mod aleshin;
pub mod automaton;
pub mod lemmas;
pub mod moore;
pub mod orbit;
pub mod perm;
pub mod registry;
pub mod verifier;
pub mod witnesses;

pub use automaton::{
    validate, Automaton, AutomatonError, InitialRef, Letter, OrbitMode, RawEntry, RawTables, State,
    StateWord, TreeWord, MAX_SYMBOLS,
};
pub use lemmas::{CheckOutcome, CheckReport, LemmaCheck, LemmaRegistry};
pub use moore::{FormatError, MooreDocument};
pub use perm::Permutation;
pub use registry::{BuiltinAutomaton, BuiltinRegistry, Derivation, DerivationRegistry};
pub use verifier::{
    is_identity, is_identity_in, min_nontrivial_level, verify_freeness, MinLevel, SweepReport,
    SweepRow, TrivialityCertificate, Verdict,
};
