//! Named, runtime-selectable constructions: derived automata and built-in
//! automata.

use crate::aleshin::automata::{build_aleshin, build_b, build_dual_d, build_e};
use crate::automaton::{Automaton, AutomatonError};

/// A construction of one automaton from another.
pub trait Derivation: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn apply(&self, a: &Automaton) -> Result<Automaton, AutomatonError>;
}

struct Inverse;
struct Reverse;
struct Dual;

impl Derivation for Inverse {
    fn name(&self) -> &'static str {
        "inverse"
    }
    fn summary(&self) -> &'static str {
        "swap input and output labels; requires an invertible automaton"
    }
    fn apply(&self, a: &Automaton) -> Result<Automaton, AutomatonError> {
        a.inverse()
    }
}

impl Derivation for Reverse {
    fn name(&self) -> &'static str {
        "reverse"
    }
    fn summary(&self) -> &'static str {
        "reverse every edge; requires each letter to permute the states"
    }
    fn apply(&self, a: &Automaton) -> Result<Automaton, AutomatonError> {
        a.reverse()
    }
}

impl Derivation for Dual {
    fn name(&self) -> &'static str {
        "dual"
    }
    fn summary(&self) -> &'static str {
        "exchange states and letters"
    }
    fn apply(&self, a: &Automaton) -> Result<Automaton, AutomatonError> {
        Ok(a.dual())
    }
}

pub struct DerivationRegistry {
    items: Vec<Box<dyn Derivation>>,
}

impl DerivationRegistry {
    pub fn builtin() -> Self {
        DerivationRegistry {
            items: vec![Box::new(Inverse), Box::new(Reverse), Box::new(Dual)],
        }
    }

    /// Adds a derivation; one with the same name is replaced.
    pub fn register(&mut self, d: Box<dyn Derivation>) {
        self.items.retain(|x| x.name() != d.name());
        self.items.push(d);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.items.iter().map(|d| d.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Derivation> {
        self.items
            .iter()
            .find(|d| d.name() == name)
            .map(|d| d.as_ref())
    }
}

/// An automaton available without a file.
pub trait BuiltinAutomaton: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn build(&self) -> Automaton;
}

struct FnBuiltin {
    name: &'static str,
    summary: &'static str,
    build: fn() -> Automaton,
}

impl BuiltinAutomaton for FnBuiltin {
    fn name(&self) -> &'static str {
        self.name
    }
    fn summary(&self) -> &'static str {
        self.summary
    }
    fn build(&self) -> Automaton {
        (self.build)()
    }
}

pub struct BuiltinRegistry {
    items: Vec<Box<dyn BuiltinAutomaton>>,
}

impl BuiltinRegistry {
    pub const PREFIX: &'static str = "builtin:";

    pub fn builtin() -> Self {
        let item = |name, summary, build| -> Box<dyn BuiltinAutomaton> {
            Box::new(FnBuiltin {
                name,
                summary,
                build,
            })
        };
        BuiltinRegistry {
            items: vec![
                item(
                    "aleshin",
                    "the Aleshin automaton A over {0,1}",
                    build_aleshin,
                ),
                item("b", "A together with its inverse, states a..c^-1", build_b),
                item(
                    "d",
                    "the dual of b, states 0 and 1 over the signed letters",
                    build_dual_d,
                ),
                item(
                    "e",
                    "the automaton E with states alpha, beta, gamma",
                    build_e,
                ),
            ],
        }
    }

    pub fn register(&mut self, b: Box<dyn BuiltinAutomaton>) {
        self.items.retain(|x| x.name() != b.name());
        self.items.push(b);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.items.iter().map(|b| b.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn BuiltinAutomaton> {
        self.items
            .iter()
            .find(|b| b.name() == name)
            .map(|b| b.as_ref())
    }

    /// Resolves `builtin:<name>`; `None` for other sources or unknown names.
    pub fn resolve(&self, source: &str) -> Option<Automaton> {
        source.strip_prefix(Self::PREFIX)
            .and_then(|name| self.get(name))
            .map(|b| b.build())
    }
}
