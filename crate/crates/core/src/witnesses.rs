//! Explicit word constructions that drive the orbit argument: opposite-sign
//! pairs for each pattern, and the pairs and 3×3 tables moved by `E_α`/`E_β`.

use std::collections::BTreeSet;

use crate::aleshin::automata::{family, ALPHA, BETA};
use crate::aleshin::words::{
    chi, is_freely_irreducible, pattern_of, z_set, GroupWord, Pattern, Sign, SignedSymbol,
    WordError,
};
use crate::automaton::State;

const A: u8 = 0;
const B: u8 = 1;
const C: u8 = 2;

fn e_apply(g: State, xi: &GroupWord) -> GroupWord {
    let out = family()
        .e
        .transduce(g, xi.indices())
        .expect("signed word over Q±");
    GroupWord::from_indices(out).expect("E maps Q± to Q±")
}

fn state_name(g: State) -> &'static str {
    if g == ALPHA {
        "alpha"
    } else {
        "beta"
    }
}

/// `(ξ₁, ξ₂)` following `v` with `χ(ξ₂) = −χ(ξ₁)`: `a` for `*`, `b⁻¹` for
/// `*⁻¹`, and the first letter of `ξ₂` moved to `c` or `c⁻¹`.
pub fn ind2_witnesses(v: &Pattern) -> Result<(GroupWord, GroupWord), WordError> {
    if v.is_empty() {
        return Err(WordError::EmptyPattern);
    }
    let first: GroupWord =
        v.0.iter()
            .map(|s| match s {
                Sign::Plus => SignedSymbol::A,
                Sign::Minus => SignedSymbol::B_INV,
            })
            .collect();
    let mut second = first.clone().into_indices();
    second[0] = SignedSymbol::new(C, v.0[0]).index();
    Ok((
        first,
        GroupWord::from_indices(second).expect("valid symbols"),
    ))
}

/// Checks the defining properties of an [`ind2_witnesses`] pair.
pub fn verify_ind2(v: &Pattern, pair: &(GroupWord, GroupWord)) -> Result<(), String> {
    let (x1, x2) = pair;
    for (name, x) in [("xi1", x1), ("xi2", x2)] {
        if !is_freely_irreducible(x) {
            return Err(format!("{name} = {x} is reducible"));
        }
        if pattern_of(x) != *v {
            return Err(format!("{name} = {x} does not follow {v}"));
        }
    }
    if chi(x1) != -chi(x2) {
        return Err(format!("chi({x1}) = chi({x2})"));
    }
    Ok(())
}

/// A pair `ξ_a, ξ_b` with `Z(ξ_a) = {ξ_a, ξ_b}` swapped by one generator of `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ind5Witness {
    pub pattern: Pattern,
    pub xi_a: GroupWord,
    pub xi_b: GroupWord,
    /// `ALPHA` or `BETA`.
    pub generator: State,
}

/// Builds the witness for a pattern of length ≥ 2 whose last two signs differ.
pub fn ind5_witnesses(v: &Pattern) -> Result<Ind5Witness, WordError> {
    let n = v.len();
    if n < 2 || v.0[n - 2] == v.0[n - 1] {
        return Err(WordError::BadPattern {
            pattern: v.to_string(),
            requirement: "length >= 2 with distinct last two signs",
        });
    }
    let head = &v.0[..n - 1];
    let mut eta = GroupWord::empty();
    for (i, &sign) in head.iter().enumerate() {
        let next_differs = head.get(i + 1).is_some_and(|&next| next != sign);
        eta.push(match (sign, next_differs) {
            (Sign::Plus, true) => SignedSymbol::A,
            (Sign::Plus, false) => SignedSymbol::C,
            (Sign::Minus, true) => SignedSymbol::B_INV,
            (Sign::Minus, false) => SignedSymbol::C_INV,
        });
    }
    let last = v.0[n - 1];
    let mut xi_a = eta.clone();
    xi_a.push(SignedSymbol::new(A, last));
    let mut xi_b = eta;
    xi_b.push(SignedSymbol::new(B, last));
    Ok(Ind5Witness {
        pattern: v.clone(),
        xi_a,
        xi_b,
        generator: if v.0[0] == Sign::Plus { ALPHA } else { BETA },
    })
}

impl Ind5Witness {
    pub fn verify(&self) -> Result<(), String> {
        for (name, x) in [("xi_a", &self.xi_a), ("xi_b", &self.xi_b)] {
            if !is_freely_irreducible(x) {
                return Err(format!("{name} = {x} is reducible"));
            }
            if pattern_of(x) != self.pattern {
                return Err(format!("{name} = {x} does not follow {}", self.pattern));
            }
        }
        let z = z_set(&self.xi_a).map_err(|e| e.to_string())?;
        let expected = BTreeSet::from([self.xi_a.clone(), self.xi_b.clone()]);
        if z != expected {
            return Err(format!(
                "Z({}) has {} members, expected 2",
                self.xi_a,
                z.len()
            ));
        }
        let g = state_name(self.generator);
        if e_apply(self.generator, &self.xi_a) != self.xi_b {
            return Err(format!("E_{g}({}) != {}", self.xi_a, self.xi_b));
        }
        if e_apply(self.generator, &self.xi_b) != self.xi_a {
            return Err(format!("E_{g}({}) != {}", self.xi_b, self.xi_a));
        }
        Ok(())
    }
}

/// Nine words `ξ_{q₁q₂}`, indexed `[q₁][q₂]` with `a, b, c = 0, 1, 2`,
/// together with the generators `g_q` swapping `ξ_{qa}` and `ξ_{qb}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ind6Witness {
    pub pattern: Pattern,
    pub words: [[GroupWord; 3]; 3],
    pub generators: [State; 3],
}

/// Builds the table for a pattern of length ≥ 2 whose first two signs agree
/// and whose last two signs agree.
pub fn ind6_witnesses(v: &Pattern) -> Result<Ind6Witness, WordError> {
    let n = v.len();
    if n < 2 || v.0[0] != v.0[1] || v.0[n - 2] != v.0[n - 1] {
        return Err(WordError::BadPattern {
            pattern: v.to_string(),
            requirement: "length >= 2 with equal first two and equal last two signs",
        });
    }
    let middle = &v.0[1..n - 1];
    let mut eta = GroupWord::empty();
    for (i, &sign) in middle.iter().enumerate() {
        let prev_differs = i > 0 && middle[i - 1] != sign;
        eta.push(match (sign, prev_differs) {
            (Sign::Plus, true) => SignedSymbol::A,
            (Sign::Plus, false) => SignedSymbol::C,
            (Sign::Minus, true) => SignedSymbol::B_INV,
            (Sign::Minus, false) => SignedSymbol::C_INV,
        });
    }
    let (first, last) = (v.0[0], v.0[n - 1]);
    let words = [A, B, C].map(|q1| {
        [A, B, C].map(|q2| {
            let mut w = GroupWord::from_symbols([SignedSymbol::new(q1, first)]).concat(&eta);
            w.push(SignedSymbol::new(q2, last));
            w
        })
    });
    let (g, h) = if first == Sign::Plus {
        (ALPHA, BETA)
    } else {
        (BETA, ALPHA)
    };
    Ok(Ind6Witness {
        pattern: v.clone(),
        words,
        generators: [g, g, h],
    })
}

impl Ind6Witness {
    pub fn word(&self, q1: u8, q2: u8) -> &GroupWord {
        &self.words[q1 as usize][q2 as usize]
    }

    pub fn verify(&self) -> Result<(), String> {
        for row in &self.words {
            for x in row {
                if !is_freely_irreducible(x) {
                    return Err(format!("{x} is reducible"));
                }
                if pattern_of(x) != self.pattern {
                    return Err(format!("{x} does not follow {}", self.pattern));
                }
            }
        }
        for q in [A, B, C] {
            let z = z_set(self.word(q, C)).map_err(|e| e.to_string())?;
            let expected: BTreeSet<_> = [A, B, C].map(|r| self.word(q, r).clone()).into();
            if z != expected {
                return Err(format!("Z({}) does not match row {q}", self.word(q, C)));
            }
            let z = z_set(&self.word(C, q).reversed()).map_err(|e| e.to_string())?;
            let expected: BTreeSet<_> = [A, B, C].map(|r| self.word(r, q).reversed()).into();
            if z != expected {
                return Err(format!(
                    "Z(rev {}) does not match column {q}",
                    self.word(C, q)
                ));
            }
            let g = self.generators[q as usize];
            if e_apply(g, self.word(q, A)) != *self.word(q, B) {
                return Err(format!(
                    "E_{}({}) != {}",
                    state_name(g),
                    self.word(q, A),
                    self.word(q, B)
                ));
            }
        }
        Ok(())
    }
}
