//! Signed words over `Q± = {a, b, c, a⁻¹, b⁻¹, c⁻¹}` and the automata
//! built from the Aleshin automaton.

pub mod automata;
pub mod words;

pub use automata::{
    build_aleshin, build_b, build_dual_d, build_e, family, Family, ALPHA, BETA, D0, D1, GAMMA,
};
pub use words::{
    chi, free_reduce, is_freely_irreducible, lift_permutation, pattern_of, strip_c, w_class, z_set,
    GroupWord, Lift, Pattern, Sign, SignedSymbol, WClass, WClasses, WordError, BASE_NAMES,
    SYMBOL_NAMES,
};
