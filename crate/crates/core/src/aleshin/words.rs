//! Words over the signed generators `Q± = {a, b, c, a⁻¹, b⁻¹, c⁻¹}`.
//!
//! A symbol is packed as `base + 3·sign`, so the symbol index coincides
//! with the state index of the symmetrized automaton and with the letter
//! index of its dual.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::Permutation;

pub const BASE_NAMES: [&str; 3] = ["a", "b", "c"];
pub const SYMBOL_NAMES: [&str; 6] = ["a", "b", "c", "a^-1", "b^-1", "c^-1"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator token `{0}`")]
    UnknownToken(String),
    #[error("word is freely reducible")]
    Reducible,
    #[error("pattern is empty")]
    EmptyPattern,
    #[error("pattern {pattern} does not satisfy: {requirement}")]
    BadPattern {
        pattern: String,
        requirement: &'static str,
    },
    #[error("not a permutation of {{a,b,c}}")]
    BadPermutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One of the six signed generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSymbol(u8);

impl SignedSymbol {
    pub const A: SignedSymbol = SignedSymbol(0);
    pub const B: SignedSymbol = SignedSymbol(1);
    pub const C: SignedSymbol = SignedSymbol(2);
    pub const A_INV: SignedSymbol = SignedSymbol(3);
    pub const B_INV: SignedSymbol = SignedSymbol(4);
    pub const C_INV: SignedSymbol = SignedSymbol(5);

    pub fn new(base: u8, sign: Sign) -> SignedSymbol {
        assert!(base < 3, "base out of range");
        SignedSymbol(base + if sign == Sign::Minus { 3 } else { 0 })
    }

    pub fn from_index(i: u8) -> Option<SignedSymbol> {
        (i < 6).then_some(SignedSymbol(i))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// 0, 1, 2 for a, b, c.
    pub fn base(self) -> u8 {
        self.0 % 3
    }

    pub fn sign(self) -> Sign {
        if self.0 < 3 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn inverse(self) -> SignedSymbol {
        SignedSymbol((self.0 + 3) % 6)
    }

    pub fn name(self) -> &'static str {
        SYMBOL_NAMES[self.0 as usize]
    }
}

impl FromStr for SignedSymbol {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SYMBOL_NAMES
            .iter()
            .position(|&n| n == s)
            .map(|i| SignedSymbol(i as u8))
            .ok_or_else(|| WordError::UnknownToken(s.to_string()))
    }
}

/// A finite word over `Q±`, stored as symbol indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(Vec<u8>);

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    /// Returns `None` if some index is not a symbol.
    pub fn from_indices(indices: Vec<u8>) -> Option<Self> {
        indices.iter().all(|&i| i < 6).then_some(GroupWord(indices))
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = SignedSymbol>) -> Self {
        GroupWord(symbols.into_iter().map(SignedSymbol::index).collect())
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn into_indices(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> impl DoubleEndedIterator<Item = SignedSymbol> + '_ {
        self.0.iter().map(|&i| SignedSymbol(i))
    }

    pub fn last(&self) -> Option<SignedSymbol> {
        self.0.last().map(|&i| SignedSymbol(i))
    }

    pub fn push(&mut self, s: SignedSymbol) {
        self.0.push(s.index());
    }

    pub fn pop(&mut self) -> Option<SignedSymbol> {
        self.0.pop().map(SignedSymbol)
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GroupWord(v)
    }

    /// The group inverse: reversed with every letter inverted.
    pub fn inverse(&self) -> GroupWord {
        GroupWord::from_symbols(self.symbols().rev().map(SignedSymbol::inverse))
    }

    /// Letter order reversed, letters unchanged.
    pub fn reversed(&self) -> GroupWord {
        let mut v = self.0.clone();
        v.reverse();
        GroupWord(v)
    }

    /// Every word of length `len` over `Q±`, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = GroupWord> {
        let total = 6usize.pow(len as u32);
        (0..total).map(move |mut n| {
            let mut v = vec![0u8; len];
            for slot in v.iter_mut().rev() {
                *slot = (n % 6) as u8;
                n /= 6;
            }
            GroupWord(v)
        })
    }
}

impl FromIterator<SignedSymbol> for GroupWord {
    fn from_iter<T: IntoIterator<Item = SignedSymbol>>(iter: T) -> Self {
        GroupWord::from_symbols(iter)
    }
}

impl FromStr for GroupWord {
    type Err = WordError;

    /// Tokens separated by commas and/or whitespace, e.g. `a,b^-1,c`.
    /// An empty string or `ε` is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "ε" {
            return Ok(GroupWord::empty());
        }
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse::<SignedSymbol>)
            .collect()
    }
}

impl fmt::Display for GroupWord {
    /// Comma-separated tokens; the empty word renders as `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for (i, s) in self.symbols().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s.name())?;
        }
        Ok(())
    }
}

/// A word over `{*, *⁻¹}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(pub Vec<Sign>);

impl Pattern {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Sign> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Sign> {
        self.0.last().copied()
    }

    pub fn reversed(&self) -> Pattern {
        Pattern(self.0.iter().rev().copied().collect())
    }

    /// All `2^len` patterns of the given length.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Pattern> {
        (0..1u64 << len).map(move |bits| {
            Pattern(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 0 {
                            Sign::Plus
                        } else {
                            Sign::Minus
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl FromStr for Pattern {
    type Err = WordError;

    /// `+` / `-` characters, e.g. `++-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(WordError::UnknownToken(other.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Pattern)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for s in &self.0 {
            write!(f, "{}", if *s == Sign::Plus { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// The sign homomorphism: −1 on a, b and their inverses, +1 on c, c⁻¹.
pub fn chi(xi: &GroupWord) -> i8 {
    chi_indices(xi.indices())
}

#[inline]
pub(crate) fn chi_indices(xi: &[u8]) -> i8 {
    if xi.iter().filter(|&&i| i % 3 != 2).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn pattern_of(xi: &GroupWord) -> Pattern {
    Pattern(xi.symbols().map(SignedSymbol::sign).collect())
}

/// True iff no two adjacent letters cancel.
pub fn is_freely_irreducible(xi: &GroupWord) -> bool {
    irreducible_indices(xi.indices())
}

#[inline]
pub(crate) fn irreducible_indices(xi: &[u8]) -> bool {
    xi.windows(2).all(|p| (p[0] + 3) % 6 != p[1])
}

/// Free-group normal form.
pub fn free_reduce(xi: &GroupWord) -> GroupWord {
    let mut stack: Vec<u8> = Vec::with_capacity(xi.len());
    for &i in xi.indices() {
        match stack.last() {
            Some(&top) if (top + 3) % 6 == i => {
                stack.pop();
            }
            _ => stack.push(i),
        }
    }
    GroupWord(stack)
}

/// Deletes every `c` and `c⁻¹`.
pub fn strip_c(xi: &GroupWord) -> GroupWord {
    GroupWord(
        xi.indices()
            .iter()
            .copied()
            .filter(|&i| i % 3 != 2)
            .collect(),
    )
}

/// One of the four alternating-sign classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WClass {
    PlusPlus,
    PlusMinus,
    MinusPlus,
    MinusMinus,
}

impl fmt::Display for WClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WClass::PlusPlus => "W++",
            WClass::PlusMinus => "W+-",
            WClass::MinusPlus => "W-+",
            WClass::MinusMinus => "W--",
        })
    }
}

/// The set of W-classes containing a word. Empty for words outside all
/// four; `{W+-, W-+}` for words whose c-stripped form is empty.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct WClasses(u8);

impl WClasses {
    fn bit(c: WClass) -> u8 {
        1 << c as u8
    }

    pub fn contains(self, c: WClass) -> bool {
        self.0 & Self::bit(c) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = WClass> {
        [
            WClass::PlusPlus,
            WClass::PlusMinus,
            WClass::MinusPlus,
            WClass::MinusMinus,
        ]
        .into_iter()
        .filter(move |&c| self.contains(c))
    }

    fn with(self, c: WClass) -> Self {
        WClasses(self.0 | Self::bit(c))
    }
}

/// Classifies `ξ` by its c-stripped form `r(ξ)`, which must have
/// alternating signs.
pub fn w_class(xi: &GroupWord) -> WClasses {
    let stripped = strip_c(xi);
    let signs = pattern_of(&stripped);
    if signs.0.windows(2).any(|p| p[0] == p[1]) {
        return WClasses::default();
    }
    match (signs.first(), signs.last()) {
        (None, None) => WClasses::default()
            .with(WClass::PlusMinus)
            .with(WClass::MinusPlus),
        (Some(Sign::Plus), Some(Sign::Plus)) => WClasses::default().with(WClass::PlusPlus),
        (Some(Sign::Plus), Some(Sign::Minus)) => WClasses::default().with(WClass::PlusMinus),
        (Some(Sign::Minus), Some(Sign::Plus)) => WClasses::default().with(WClass::MinusPlus),
        (Some(Sign::Minus), Some(Sign::Minus)) => WClasses::default().with(WClass::MinusMinus),
        _ => unreachable!("first and last exist together"),
    }
}

/// Freely irreducible words with the pattern of `ξ` that agree with `ξ`
/// except possibly in the last letter.
pub fn z_set(xi: &GroupWord) -> Result<BTreeSet<GroupWord>, WordError> {
    if !is_freely_irreducible(xi) {
        return Err(WordError::Reducible);
    }
    let Some(last) = xi.last() else {
        return Ok(BTreeSet::from([GroupWord::empty()]));
    };
    let prefix = &xi.indices()[..xi.len() - 1];
    Ok((0..3)
        .map(|base| {
            let mut v = prefix.to_vec();
            v.push(SignedSymbol::new(base, last.sign()).index());
            GroupWord(v)
        })
        .filter(is_freely_irreducible)
        .collect())
}

/// Letterwise lift `π_τ` of a permutation `τ` of `{a, b, c}` to `Q±`-words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lift {
    base: Permutation,
    symbols: Permutation,
}

impl Lift {
    pub fn new(tau: &Permutation) -> Result<Lift, WordError> {
        if tau.len() != 3 {
            return Err(WordError::BadPermutation);
        }
        let images = (0..6u8).map(|i| tau.apply(i % 3) + 3 * (i / 3)).collect();
        Ok(Lift {
            base: tau.clone(),
            symbols: Permutation::from_images(images).expect("lift of a bijection"),
        })
    }

    /// `π_τ` for `τ` given by cycles over base letters, e.g. `&[&[0, 2]]`
    /// for `(ac)`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Result<Lift, WordError> {
        Lift::new(&Permutation::from_cycles(3, cycles).ok_or(WordError::BadPermutation)?)
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    /// `τ̃` on the six symbols.
    pub fn symbol_permutation(&self) -> &Permutation {
        &self.symbols
    }

    pub fn apply(&self, xi: &GroupWord) -> GroupWord {
        GroupWord(
            xi.indices()
                .iter()
                .map(|&i| self.symbols.apply(i))
                .collect(),
        )
    }
}

pub fn lift_permutation(tau: &Permutation) -> Result<Lift, WordError> {
    Lift::new(tau)
}
