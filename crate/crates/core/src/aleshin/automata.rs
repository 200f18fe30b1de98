//! The Aleshin automaton `A` and the automata derived from it.

use std::sync::OnceLock;

use crate::automaton::{validate, Automaton, RawEntry, RawTables, State};
use crate::perm::Permutation;

use super::words::SYMBOL_NAMES;

/// States of `E`.
pub const ALPHA: State = 0;
pub const BETA: State = 1;
pub const GAMMA: State = 2;

/// States of `D`, named after the letters of the binary tree.
pub const D0: State = 0;
pub const D1: State = 1;

fn names(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// The 3-state automaton over `{0, 1}` with states `a, b, c`.
pub fn build_aleshin() -> Automaton {
    let raw = RawTables {
        states: names(&["a", "b", "c"]),
        alphabet: names(&["0", "1"]),
        entries: vec![
            RawEntry::new("a", "0", "c", "1"),
            RawEntry::new("a", "1", "b", "0"),
            RawEntry::new("b", "0", "b", "1"),
            RawEntry::new("b", "1", "c", "0"),
            RawEntry::new("c", "0", "a", "0"),
            RawEntry::new("c", "1", "a", "1"),
        ],
    };
    validate(&raw).expect("Aleshin tables are total")
}

/// Disjoint union of `A` and its inverse with states renamed `q^-1`.
/// State indices agree with symbol indices of `Q±`.
pub fn build_b() -> Automaton {
    let a = build_aleshin();
    let inverse = a
        .inverse()
        .expect("A is invertible")
        .rename_states(|s| format!("{s}^-1"))
        .expect("renamed states are distinct");
    a.disjoint_union(&inverse).expect("state sets are disjoint")
}

/// The dual of `B`: states `0, 1`, alphabet `Q±`.
pub fn build_dual_d() -> Automaton {
    build_b().dual()
}

/// The auxiliary automaton `E` over `Q±` with states `alpha, beta, gamma`.
pub fn build_e() -> Automaton {
    let sigma = [
        Permutation::from_cycles(6, &[&[3, 4]]),
        Permutation::from_cycles(6, &[&[0, 1]]),
        Permutation::from_cycles(6, &[&[1, 2], &[4, 5]]),
    ]
    .map(|p| p.expect("valid cycles"));
    let mut transition = Vec::with_capacity(18);
    let mut output = Vec::with_capacity(18);
    for state in [ALPHA, BETA, GAMMA] {
        for q in 0..6u8 {
            let counts = q % 3 != 2;
            transition.push(match state {
                ALPHA if counts => BETA,
                BETA if counts => ALPHA,
                s => s,
            });
            output.push(sigma[state as usize].apply(q));
        }
    }
    Automaton::from_tables(
        names(&["alpha", "beta", "gamma"]),
        names(&SYMBOL_NAMES),
        transition,
        output,
    )
    .expect("E tables are total")
}

/// Built automata shared across the crate.
#[derive(Debug)]
pub struct Family {
    pub a: Automaton,
    pub b: Automaton,
    pub d: Automaton,
    pub d_inverse: Automaton,
    pub e: Automaton,
}

pub fn family() -> &'static Family {
    static FAMILY: OnceLock<Family> = OnceLock::new();
    FAMILY.get_or_init(|| {
        let d = build_dual_d();
        Family {
            a: build_aleshin(),
            b: build_b(),
            d_inverse: d.inverse().expect("D is invertible"),
            d,
            e: build_e(),
        }
    })
}
