//! Orbits of `Q±`-words under automata over the signed alphabet, and
//! enumeration of freely irreducible words by pattern.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::aleshin::automata::{family, ALPHA, BETA, D0, D1, GAMMA};
use crate::aleshin::words::{GroupWord, Pattern, SignedSymbol};
use crate::automaton::{Automaton, AutomatonError, OrbitMode, State};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("automaton alphabet has {0} letters, expected the 6 signed generators")]
    NotSignedAlphabet(usize),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

/// A generator-closed set of words of one length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    pub members: BTreeSet<GroupWord>,
    pub generator_tag: String,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, xi: &GroupWord) -> bool {
        self.members.contains(xi)
    }
}

fn tag(a: &Automaton, gens: &[State], mode: OrbitMode) -> String {
    let names: Vec<&str> = gens
        .iter()
        .map(|&q| a.state_names()[q as usize].as_str())
        .collect();
    let mode = match mode {
        OrbitMode::Semigroup => "semigroup",
        OrbitMode::Group => "group",
    };
    format!("{}:{mode}", names.join(","))
}

/// Orbit of `ξ` under the initial automata `(a, q)`, `q ∈ gens`.
pub fn word_orbit(
    a: &Automaton,
    gens: &[State],
    xi: &GroupWord,
    mode: OrbitMode,
) -> Result<OrbitSet, OrbitError> {
    if a.num_letters() != 6 {
        return Err(OrbitError::NotSignedAlphabet(a.num_letters()));
    }
    let members = a
        .tree_orbit(gens, xi.indices(), mode)?
        .into_iter()
        .map(|w| GroupWord::from_indices(w).expect("alphabet has 6 letters"))
        .collect();
    Ok(OrbitSet {
        members,
        generator_tag: tag(a, gens, mode),
    })
}

/// Orbit under `G(E) = ⟨E_α, E_β, E_γ⟩`. The generators are involutions, so
/// the semigroup closure already is the group orbit.
pub fn e_orbit(xi: &GroupWord) -> OrbitSet {
    word_orbit(&family().e, &[ALPHA, BETA, GAMMA], xi, OrbitMode::Semigroup).expect("E is over Q±")
}

/// Orbit under `G(D) = ⟨D_0, D_1⟩`, inverses included.
pub fn d_orbit(xi: &GroupWord) -> OrbitSet {
    word_orbit(&family().d, &[D0, D1], xi, OrbitMode::Group).expect("D is invertible over Q±")
}

/// Partition of all `6^len` words of length `len` into orbits, canonically
/// sorted.
pub fn orbit_partition(
    a: &Automaton,
    gens: &[State],
    len: usize,
    mode: OrbitMode,
) -> Result<Vec<BTreeSet<GroupWord>>, OrbitError> {
    let mut seen: HashSet<GroupWord> = HashSet::new();
    let mut parts = Vec::new();
    for xi in GroupWord::all_of_length(len) {
        if seen.contains(&xi) {
            continue;
        }
        let orbit = word_orbit(a, gens, &xi, mode)?;
        seen.extend(orbit.members.iter().cloned());
        parts.push(orbit.members);
    }
    parts.sort();
    Ok(parts)
}

/// All freely irreducible words following `v`, in lexicographic order.
pub fn irreducible_class(v: &Pattern) -> BTreeSet<GroupWord> {
    fn extend(v: &Pattern, cur: &mut GroupWord, out: &mut BTreeSet<GroupWord>) {
        let i = cur.len();
        if i == v.len() {
            out.insert(cur.clone());
            return;
        }
        for base in 0..3 {
            let s = SignedSymbol::new(base, v.0[i]);
            if cur.last() == Some(s.inverse()) {
                continue;
            }
            cur.push(s);
            extend(v, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    extend(v, &mut GroupWord::empty(), &mut out);
    out
}

/// `|irreducible_class(v)|` by the closed form `3·∏ (2 or 3)`.
pub fn class_cardinality(v: &Pattern) -> u64 {
    if v.is_empty() {
        return 1;
    }
    v.0.windows(2)
        .map(|p| if p[0] != p[1] { 2 } else { 3 })
        .product::<u64>()
        * 3
}

/// The lexicographically smallest freely irreducible word following `v`.
pub fn smallest_irreducible(v: &Pattern) -> GroupWord {
    let mut out = GroupWord::empty();
    for &sign in &v.0 {
        let s = (0..3)
            .map(|base| SignedSymbol::new(base, sign))
            .find(|s| out.last() != Some(s.inverse()))
            .expect("at most one base is excluded");
        out.push(s);
    }
    out
}

pub fn reverse_word(xi: &GroupWord) -> GroupWord {
    xi.reversed()
}
