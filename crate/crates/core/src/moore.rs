//! Line-oriented text format for Moore diagrams.
//!
//! ```text
//! # comment
//! alphabet 0 1
//! states a b c
//! trans a 0 c 1
//! ```
//!
//! `trans <state> <in> <next> <out>` lists the edge from `state` to `next`
//! labelled `in|out`. Declarations come before transitions; there is exactly
//! one transition per (state, input letter). Tokens are separated by runs
//! of spaces or tabs, and a `^-1` suffix is part of a token.

use std::collections::HashSet;

use thiserror::Error;

use crate::automaton::{validate, Automaton, AutomatonError, RawEntry, RawTables, MAX_SYMBOLS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: undeclared symbol `{symbol}`")]
    UndeclaredSymbol { line: usize, symbol: String },
    #[error("line {line}: duplicate transition for ({state}, {letter})")]
    DuplicateTransition {
        line: usize,
        state: String,
        letter: String,
    },
    #[error("missing transition for ({state}, {letter})")]
    MissingTransition { state: String, letter: String },
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// A parsed Moore document before table validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MooreDocument {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    /// `(state, in_letter, next_state, out_letter)`.
    pub transitions: Vec<[String; 4]>,
    /// Comment text without the leading `#`, in file order.
    pub comments: Vec<String>,
}

fn declare(
    line: usize,
    keyword: &str,
    tokens: &[&str],
    slot: &mut Vec<String>,
) -> Result<(), FormatError> {
    if !slot.is_empty() {
        return Err(syntax(line, format!("`{keyword}` declared twice")));
    }
    if tokens.is_empty() {
        return Err(syntax(
            line,
            format!("`{keyword}` needs at least one symbol"),
        ));
    }
    if tokens.len() > MAX_SYMBOLS {
        return Err(syntax(
            line,
            format!(
                "`{keyword}` lists {} symbols (limit {MAX_SYMBOLS})",
                tokens.len()
            ),
        ));
    }
    let mut seen = HashSet::new();
    for &t in tokens {
        if !seen.insert(t) {
            return Err(syntax(
                line,
                format!("symbol `{t}` repeated in `{keyword}`"),
            ));
        }
    }
    *slot = tokens.iter().map(|t| t.to_string()).collect();
    Ok(())
}

impl MooreDocument {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut doc = MooreDocument::default();
        let mut seen_pairs = HashSet::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(comment) = trimmed.strip_prefix('#') {
                doc.comments.push(comment.trim().to_string());
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            match tokens[0] {
                "alphabet" => {
                    if !doc.transitions.is_empty() {
                        return Err(syntax(line, "`alphabet` after transitions"));
                    }
                    declare(line, "alphabet", &tokens[1..], &mut doc.alphabet)?;
                }
                "states" => {
                    if !doc.transitions.is_empty() {
                        return Err(syntax(line, "`states` after transitions"));
                    }
                    declare(line, "states", &tokens[1..], &mut doc.states)?;
                }
                "trans" => {
                    if doc.alphabet.is_empty() || doc.states.is_empty() {
                        return Err(syntax(line, "`trans` before `alphabet` and `states`"));
                    }
                    let [state, input, next, output] = tokens[1..] else {
                        return Err(syntax(line, "`trans` takes exactly 4 symbols"));
                    };
                    for (sym, names) in [
                        (state, &doc.states),
                        (input, &doc.alphabet),
                        (next, &doc.states),
                        (output, &doc.alphabet),
                    ] {
                        if !names.iter().any(|n| n == sym) {
                            return Err(FormatError::UndeclaredSymbol {
                                line,
                                symbol: sym.to_string(),
                            });
                        }
                    }
                    if !seen_pairs.insert((state.to_string(), input.to_string())) {
                        return Err(FormatError::DuplicateTransition {
                            line,
                            state: state.to_string(),
                            letter: input.to_string(),
                        });
                    }
                    doc.transitions
                        .push([state, input, next, output].map(str::to_string));
                }
                other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
            }
        }
        let end = last_line.max(1);
        if doc.alphabet.is_empty() {
            return Err(syntax(end, "missing `alphabet` declaration"));
        }
        if doc.states.is_empty() {
            return Err(syntax(end, "missing `states` declaration"));
        }
        Ok(doc)
    }

    pub fn from_automaton(a: &Automaton) -> Self {
        let raw = a.raw_tables();
        MooreDocument {
            alphabet: raw.alphabet,
            states: raw.states,
            transitions: raw
                .entries
                .into_iter()
                .map(|e| [e.state, e.input, e.next, e.output])
                .collect(),
            comments: Vec::new(),
        }
    }

    pub fn to_automaton(&self) -> Result<Automaton, FormatError> {
        let raw = RawTables {
            states: self.states.clone(),
            alphabet: self.alphabet.clone(),
            entries: self
                .transitions
                .iter()
                .map(|[s, i, n, o]| RawEntry::new(s, i, n, o))
                .collect(),
        };
        validate(&raw).map_err(|e| match e {
            AutomatonError::MissingEntry { state, letter } => {
                FormatError::MissingTransition { state, letter }
            }
            other => FormatError::Automaton(other),
        })
    }

    /// Renders the document; comments, when requested, precede the
    /// declarations.
    pub fn render(&self, with_comments: bool) -> String {
        let mut out = String::new();
        if with_comments {
            for c in &self.comments {
                out.push_str("# ");
                out.push_str(c);
                out.push('\n');
            }
        }
        out.push_str("alphabet ");
        out.push_str(&self.alphabet.join(" "));
        out.push('\n');
        out.push_str("states ");
        out.push_str(&self.states.join(" "));
        out.push('\n');
        for t in &self.transitions {
            out.push_str("trans ");
            out.push_str(&t.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses and validates a Moore document.
pub fn parse(text: &str) -> Result<Automaton, FormatError> {
    MooreDocument::parse(text)?.to_automaton()
}

/// Canonical text: alphabet line, states line, then one transition per
/// (state, letter) in index order.
pub fn serialize(a: &Automaton) -> String {
    MooreDocument::from_automaton(a).render(false)
}

/// Canonical text preceded by `#` comment lines.
pub fn serialize_with_comments(a: &Automaton, comments: &[String]) -> String {
    let mut doc = MooreDocument::from_automaton(a);
    doc.comments = comments.to_vec();
    doc.render(true)
}
