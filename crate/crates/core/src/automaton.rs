//! Mealy automata over finite alphabets and the transformations they
//! define on the rooted tree of finite words.
//!
//! States and letters are dense indices into name tables. A [`TreeWord`] is
//! a sequence of letter indices and a [`StateWord`] a sequence of state
//! indices; both are plain `Vec<u8>` so that the dual automaton can read a
//! state word as its own input without conversion.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::perm::Permutation;

/// Index of a letter in an automaton's alphabet.
pub type Letter = u8;
/// Index of an internal state.
pub type State = u8;
/// A vertex of the rooted tree: a finite sequence of letters.
pub type TreeWord = Vec<Letter>;
/// A finite sequence of states, acting on the tree letter by letter.
pub type StateWord = Vec<State>;

/// Upper bound on both the number of states and the number of letters.
pub const MAX_SYMBOLS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("state set is empty")]
    EmptyStates,
    #[error("too many {kind}: {count} (limit {MAX_SYMBOLS})")]
    TooManySymbols { kind: &'static str, count: usize },
    #[error("duplicate {kind} name `{name}`")]
    DuplicateName { kind: &'static str, name: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("duplicate entry for ({state}, {letter})")]
    DuplicateEntry { state: String, letter: String },
    #[error("missing entry for ({state}, {letter})")]
    MissingEntry { state: String, letter: String },
    #[error("table has {found} cells, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("letter index {0} out of range")]
    LetterOutOfRange(usize),
    #[error("state index {0} out of range")]
    StateOutOfRange(usize),
    #[error("automaton is not invertible: output row of state `{state}` is not a bijection")]
    NotInvertible { state: String },
    #[error("reverse automaton undefined: transitions on letter `{letter}` are not a bijection")]
    NotReversible { letter: String },
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("state `{0}` occurs in both automata")]
    StateClash(String),
}

pub type Result<T, E = AutomatonError> = std::result::Result<T, E>;

/// One row of a transition table given by symbol names: in state `state`,
/// reading `input`, move to `next` and emit `output`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEntry {
    pub state: String,
    pub input: String,
    pub next: String,
    pub output: String,
}

impl RawEntry {
    pub fn new(state: &str, input: &str, next: &str, output: &str) -> Self {
        RawEntry {
            state: state.to_string(),
            input: input.to_string(),
            next: next.to_string(),
            output: output.to_string(),
        }
    }
}

/// Candidate tables prior to validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawTables {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    pub entries: Vec<RawEntry>,
}

/// A finite Mealy automaton `(Q, X, φ, ψ)`.
///
/// Both tables are total and stored row-major by state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automaton {
    state_names: Vec<String>,
    alphabet_names: Vec<String>,
    transition: Vec<State>,
    output: Vec<Letter>,
}

fn index_names<'a>(kind: &'static str, names: &'a [String]) -> Result<HashMap<&'a str, u8>> {
    if names.len() > MAX_SYMBOLS {
        return Err(AutomatonError::TooManySymbols {
            kind,
            count: names.len(),
        });
    }
    let mut map = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if map.insert(name.as_str(), i as u8).is_some() {
            return Err(AutomatonError::DuplicateName {
                kind,
                name: name.clone(),
            });
        }
    }
    Ok(map)
}

/// Checks candidate tables and builds an [`Automaton`].
pub fn validate(raw: &RawTables) -> Result<Automaton> {
    if raw.alphabet.is_empty() {
        return Err(AutomatonError::EmptyAlphabet);
    }
    if raw.states.is_empty() {
        return Err(AutomatonError::EmptyStates);
    }
    let states = index_names("states", &raw.states)?;
    let letters = index_names("letters", &raw.alphabet)?;
    let lookup = |map: &HashMap<&str, u8>, name: &str| {
        map.get(name)
            .copied()
            .ok_or_else(|| AutomatonError::UnknownSymbol(name.to_string()))
    };

    let k = raw.alphabet.len();
    let mut table: Vec<Option<(State, Letter)>> = vec![None; raw.states.len() * k];
    for entry in &raw.entries {
        let q = lookup(&states, &entry.state)?;
        let x = lookup(&letters, &entry.input)?;
        let p = lookup(&states, &entry.next)?;
        let y = lookup(&letters, &entry.output)?;
        let slot = &mut table[q as usize * k + x as usize];
        if slot.is_some() {
            return Err(AutomatonError::DuplicateEntry {
                state: entry.state.clone(),
                letter: entry.input.clone(),
            });
        }
        *slot = Some((p, y));
    }

    let mut transition = Vec::with_capacity(table.len());
    let mut output = Vec::with_capacity(table.len());
    for (i, slot) in table.into_iter().enumerate() {
        let (p, y) = slot.ok_or_else(|| AutomatonError::MissingEntry {
            state: raw.states[i / k].clone(),
            letter: raw.alphabet[i % k].clone(),
        })?;
        transition.push(p);
        output.push(y);
    }
    Ok(Automaton {
        state_names: raw.states.clone(),
        alphabet_names: raw.alphabet.clone(),
        transition,
        output,
    })
}

/// How [`Automaton::tree_orbit`] closes a word set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitMode {
    /// Closure under the generators only.
    Semigroup,
    /// Closure under the generators and their inverses.
    Group,
}

/// An initial automaton: an automaton together with a start state.
#[derive(Debug, Clone, Copy)]
pub struct InitialRef<'a> {
    automaton: &'a Automaton,
    state: State,
}

impl<'a> InitialRef<'a> {
    pub fn automaton(&self) -> &'a Automaton {
        self.automaton
    }

    pub fn state(&self) -> State {
        self.state
    }

    /// `ψ*(q, w)`.
    pub fn transduce(&self, w: &[Letter]) -> Result<TreeWord> {
        self.automaton.check_letters(w)?;
        Ok(self.automaton.run(self.state, w))
    }
}

impl Automaton {
    /// Builds an automaton from index tables, validating sizes and ranges.
    pub fn from_tables(
        state_names: Vec<String>,
        alphabet_names: Vec<String>,
        transition: Vec<State>,
        output: Vec<Letter>,
    ) -> Result<Self> {
        if alphabet_names.is_empty() {
            return Err(AutomatonError::EmptyAlphabet);
        }
        if state_names.is_empty() {
            return Err(AutomatonError::EmptyStates);
        }
        index_names("states", &state_names)?;
        index_names("letters", &alphabet_names)?;
        let cells = state_names.len() * alphabet_names.len();
        if transition.len() != cells || output.len() != cells {
            return Err(AutomatonError::TableSize {
                expected: cells,
                found: transition.len().min(output.len()),
            });
        }
        if let Some(&p) = transition
            .iter()
            .find(|&&p| p as usize >= state_names.len())
        {
            return Err(AutomatonError::StateOutOfRange(p as usize));
        }
        if let Some(&y) = output.iter().find(|&&y| y as usize >= alphabet_names.len()) {
            return Err(AutomatonError::LetterOutOfRange(y as usize));
        }
        Ok(Automaton {
            state_names,
            alphabet_names,
            transition,
            output,
        })
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn alphabet_names(&self) -> &[String] {
        &self.alphabet_names
    }

    pub fn num_states(&self) -> usize {
        self.state_names.len()
    }

    pub fn num_letters(&self) -> usize {
        self.alphabet_names.len()
    }

    pub fn state_index(&self, name: &str) -> Option<State> {
        self.state_names
            .iter()
            .position(|s| s == name)
            .map(|i| i as State)
    }

    pub fn letter_index(&self, name: &str) -> Option<Letter> {
        self.alphabet_names
            .iter()
            .position(|s| s == name)
            .map(|i| i as Letter)
    }

    /// `φ(q, x)`.
    #[inline]
    pub fn next(&self, q: State, x: Letter) -> State {
        self.transition[q as usize * self.alphabet_names.len() + x as usize]
    }

    /// `ψ(q, x)`.
    #[inline]
    pub fn out(&self, q: State, x: Letter) -> Letter {
        self.output[q as usize * self.alphabet_names.len() + x as usize]
    }

    pub fn initial(&self, q: State) -> Result<InitialRef<'_>> {
        if q as usize >= self.num_states() {
            return Err(AutomatonError::StateOutOfRange(q as usize));
        }
        Ok(InitialRef {
            automaton: self,
            state: q,
        })
    }

    /// The same tables viewed as raw named entries, in canonical order.
    pub fn raw_tables(&self) -> RawTables {
        let mut entries = Vec::with_capacity(self.transition.len());
        for q in 0..self.num_states() as State {
            for x in 0..self.num_letters() as Letter {
                entries.push(RawEntry::new(
                    &self.state_names[q as usize],
                    &self.alphabet_names[x as usize],
                    &self.state_names[self.next(q, x) as usize],
                    &self.alphabet_names[self.out(q, x) as usize],
                ));
            }
        }
        RawTables {
            states: self.state_names.clone(),
            alphabet: self.alphabet_names.clone(),
            entries,
        }
    }

    pub(crate) fn check_letters(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|&&x| x as usize >= self.num_letters()) {
            Some(&x) => Err(AutomatonError::LetterOutOfRange(x as usize)),
            None => Ok(()),
        }
    }

    pub(crate) fn check_states(&self, xi: &[State]) -> Result<()> {
        match xi.iter().find(|&&q| q as usize >= self.num_states()) {
            Some(&q) => Err(AutomatonError::StateOutOfRange(q as usize)),
            None => Ok(()),
        }
    }

    /// Unchecked `ψ*(q, w)`.
    pub(crate) fn run(&self, mut q: State, w: &[Letter]) -> TreeWord {
        let mut out = Vec::with_capacity(w.len());
        for &x in w {
            out.push(self.out(q, x));
            q = self.next(q, x);
        }
        out
    }

    /// Unchecked in-place `ψ*(q, w)`.
    #[inline]
    pub(crate) fn run_in_place(&self, mut q: State, w: &mut [Letter]) {
        for x in w.iter_mut() {
            let y = self.out(q, *x);
            q = self.next(q, *x);
            *x = y;
        }
    }

    /// `A_q(w)` for the initial automaton `(self, q)`.
    pub fn transduce(&self, q: State, w: &[Letter]) -> Result<TreeWord> {
        self.initial(q)?.transduce(w)
    }

    /// True iff every output row `x ↦ ψ(q, x)` is a bijection of the alphabet.
    pub fn is_invertible(&self) -> bool {
        self.first_non_bijective_row().is_none()
    }

    fn first_non_bijective_row(&self) -> Option<State> {
        let k = self.num_letters();
        (0..self.num_states() as State).find(|&q| {
            let mut seen = vec![false; k];
            (0..k as Letter).any(|x| std::mem::replace(&mut seen[self.out(q, x) as usize], true))
        })
    }

    /// The automaton obtained by swapping input and output fields of every
    /// label of the Moore diagram. Its state `q` computes `A_q⁻¹`.
    pub fn inverse(&self) -> Result<Automaton> {
        if let Some(q) = self.first_non_bijective_row() {
            return Err(AutomatonError::NotInvertible {
                state: self.state_names[q as usize].clone(),
            });
        }
        let k = self.num_letters();
        let mut transition = vec![0; self.transition.len()];
        let mut output = vec![0; self.output.len()];
        for q in 0..self.num_states() as State {
            for x in 0..k as Letter {
                let y = self.out(q, x);
                let cell = q as usize * k + y as usize;
                output[cell] = x;
                transition[cell] = self.next(q, x);
            }
        }
        Ok(Automaton {
            state_names: self.state_names.clone(),
            alphabet_names: self.alphabet_names.clone(),
            transition,
            output,
        })
    }

    /// The automaton whose Moore diagram has every edge reversed.
    pub fn reverse(&self) -> Result<Automaton> {
        let n = self.num_states();
        let k = self.num_letters();
        let mut transition = vec![0; self.transition.len()];
        let mut output = vec![0; self.output.len()];
        for x in 0..k as Letter {
            let mut hit = vec![false; n];
            for q in 0..n as State {
                let p = self.next(q, x);
                if std::mem::replace(&mut hit[p as usize], true) {
                    return Err(AutomatonError::NotReversible {
                        letter: self.alphabet_names[x as usize].clone(),
                    });
                }
                let cell = p as usize * k + x as usize;
                transition[cell] = q;
                output[cell] = self.out(q, x);
            }
        }
        Ok(Automaton {
            state_names: self.state_names.clone(),
            alphabet_names: self.alphabet_names.clone(),
            transition,
            output,
        })
    }

    /// The dual automaton `(X, Q, φ̃, ψ̃)` with `φ̃(x, q) = ψ(q, x)` and
    /// `ψ̃(x, q) = φ(q, x)`.
    pub fn dual(&self) -> Automaton {
        let n = self.num_states();
        let k = self.num_letters();
        let mut transition = vec![0; n * k];
        let mut output = vec![0; n * k];
        for x in 0..k {
            for q in 0..n {
                let cell = x * n + q;
                transition[cell] = self.out(q as State, x as Letter);
                output[cell] = self.next(q as State, x as Letter);
            }
        }
        Automaton {
            state_names: self.alphabet_names.clone(),
            alphabet_names: self.state_names.clone(),
            transition,
            output,
        }
    }

    /// Applies `f` to every state name.
    pub fn rename_states(&self, f: impl Fn(&str) -> String) -> Result<Automaton> {
        let names: Vec<String> = self.state_names.iter().map(|s| f(s)).collect();
        index_names("states", &names)?;
        Ok(Automaton {
            state_names: names,
            ..self.clone()
        })
    }

    /// Disjoint union over a shared alphabet; states of `other` follow
    /// those of `self`.
    pub fn disjoint_union(&self, other: &Automaton) -> Result<Automaton> {
        if self.alphabet_names != other.alphabet_names {
            return Err(AutomatonError::AlphabetMismatch);
        }
        if let Some(name) = other
            .state_names
            .iter()
            .find(|name| self.state_names.contains(name))
        {
            return Err(AutomatonError::StateClash(name.clone()));
        }
        let total = self.num_states() + other.num_states();
        if total > MAX_SYMBOLS {
            return Err(AutomatonError::TooManySymbols {
                kind: "states",
                count: total,
            });
        }
        let shift = self.num_states() as State;
        let mut state_names = self.state_names.clone();
        state_names.extend(other.state_names.iter().cloned());
        let mut transition = self.transition.clone();
        transition.extend(other.transition.iter().map(|&p| p + shift));
        let mut output = self.output.clone();
        output.extend_from_slice(&other.output);
        Ok(Automaton {
            state_names,
            alphabet_names: self.alphabet_names.clone(),
            transition,
            output,
        })
    }

    /// `A_ξ(w)` where `A_ξ = A_{qₙ} ⋯ A_{q₁}`: the first state of `ξ` acts
    /// first.
    pub fn act_word(&self, xi: &[State], w: &[Letter]) -> Result<TreeWord> {
        self.check_states(xi)?;
        self.check_letters(w)?;
        let mut cur = w.to_vec();
        for &q in xi {
            self.run_in_place(q, &mut cur);
        }
        Ok(cur)
    }

    /// The section `D_w(ξ)`: the state word governing `A_ξ` below vertex `w`.
    pub fn section_word(&self, xi: &[State], w: &[Letter]) -> Result<StateWord> {
        self.check_states(xi)?;
        self.check_letters(w)?;
        let mut cur = xi.to_vec();
        for &x in w {
            self.section_step(&mut cur, x);
        }
        Ok(cur)
    }

    /// One step of the dual action: replaces `ξ` by `D_x(ξ)`.
    #[inline]
    pub(crate) fn section_step(&self, xi: &mut [State], mut x: Letter) {
        for q in xi.iter_mut() {
            let p = self.next(*q, x);
            x = self.out(*q, x);
            *q = p;
        }
    }

    /// The letter map `x ↦ A_ξ(x)` on one-letter words, without requiring
    /// invertibility.
    pub(crate) fn level_one_map(&self, xi: &[State]) -> Vec<Letter> {
        (0..self.num_letters() as Letter)
            .map(|x| xi.iter().fold(x, |y, &q| self.out(q, y)))
            .collect()
    }

    /// The permutation `A_ξ` induces on one-letter words.
    pub fn first_level_action(&self, xi: &[State]) -> Result<Permutation> {
        if let Some(q) = self.first_non_bijective_row() {
            return Err(AutomatonError::NotInvertible {
                state: self.state_names[q as usize].clone(),
            });
        }
        self.check_states(xi)?;
        Ok(Permutation::from_images(self.level_one_map(xi)).expect("rows are bijective"))
    }

    /// Closure of `{w}` under the transformations `A_q`, `q ∈ gens`, and in
    /// group mode also under their inverses.
    pub fn tree_orbit(
        &self,
        gens: &[State],
        w: &[Letter],
        mode: OrbitMode,
    ) -> Result<BTreeSet<TreeWord>> {
        self.check_states(gens)?;
        self.check_letters(w)?;
        let inverse = match mode {
            OrbitMode::Group => Some(self.inverse()?),
            OrbitMode::Semigroup => None,
        };
        let mut seen: HashSet<TreeWord> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        while let Some(cur) = queue.pop_front() {
            let images = gens.iter().map(|&q| self.run(q, &cur)).chain(
                inverse
                    .iter()
                    .flat_map(|inv| gens.iter().map(|&q| inv.run(q, &cur))),
            );
            for next in images.collect::<Vec<_>>() {
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}
