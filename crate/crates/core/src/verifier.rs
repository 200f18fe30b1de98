//! Exact triviality test for words acting on the tree, and the bounded
//! sweep over freely reduced words.
//!
//! `A_ξ(wx) = A_ξ(w)·A_{D_w(ξ)}(x)`, so `A_ξ` is the identity iff every
//! section `D_w(ξ)` fixes the first level. Sections of `ξ` have length `|ξ|`,
//! so the set of sections is finite and a breadth-first search over tree
//! depth visits all of them. The first section that moves a letter, found
//! at depth `d`, shows that `A_ξ` is trivial on levels `≤ d` and nontrivial
//! on level `d + 1`.
//!
//! For the symmetrized Aleshin automaton the first-level test is the sign
//! character `χ`; for other automata it is the letter map itself.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::aleshin::automata::family;
use crate::aleshin::words::{chi_indices, GroupWord};
use crate::automaton::{Automaton, AutomatonError, Letter, State, StateWord, TreeWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Identity,
    Nontrivial {
        /// A vertex `w` whose section acts nontrivially on one-letter words.
        witness_vertex: TreeWord,
        /// `|w| + 1`: the first tree level moved by the word.
        min_level: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityCertificate {
    pub word: StateWord,
    pub verdict: Verdict,
    /// Distinct section words visited before the search stopped.
    pub orbit_explored: usize,
}

impl TrivialityCertificate {
    pub fn is_identity(&self) -> bool {
        self.verdict == Verdict::Identity
    }

    pub fn min_level(&self) -> Option<usize> {
        match self.verdict {
            Verdict::Identity => None,
            Verdict::Nontrivial { min_level, .. } => Some(min_level),
        }
    }

    pub fn witness_vertex(&self) -> Option<&TreeWord> {
        match &self.verdict {
            Verdict::Identity => None,
            Verdict::Nontrivial { witness_vertex, .. } => Some(witness_vertex),
        }
    }

    /// Verdict line; letters of the vertex are named by `a`'s alphabet.
    pub fn render(&self, a: &Automaton) -> String {
        match &self.verdict {
            Verdict::Identity => "identity".to_string(),
            Verdict::Nontrivial {
                witness_vertex,
                min_level,
            } => format!(
                "nontrivial min_level={min_level} witness={}",
                format_letters(a.alphabet_names(), witness_vertex)
            ),
        }
    }
}

/// Joins symbol names, without separators when every name is one character.
pub fn format_letters(names: &[String], word: &[u8]) -> String {
    if word.is_empty() {
        return "ε".to_string();
    }
    let sep = if names.iter().all(|n| n.chars().count() == 1) {
        ""
    } else {
        ","
    };
    word.iter()
        .map(|&i| names[i as usize].as_str())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Visited set keyed by bit-packed words when they fit in 128 bits.
enum Visited {
    Packed { bits: u32, set: HashSet<u128> },
    Wide(HashSet<Vec<u8>>),
}

impl Visited {
    fn new(symbols: usize, len: usize) -> Self {
        let bits = usize::BITS - (symbols.max(2) - 1).leading_zeros();
        if bits as usize * len <= 128 {
            Visited::Packed {
                bits,
                set: HashSet::new(),
            }
        } else {
            Visited::Wide(HashSet::new())
        }
    }

    fn insert(&mut self, w: &[u8]) -> bool {
        match self {
            Visited::Packed { bits, set } => {
                let key = w.iter().fold(0u128, |acc, &s| (acc << *bits) | s as u128);
                set.insert(key)
            }
            Visited::Wide(set) => set.insert(w.to_vec()),
        }
    }

    fn len(&self) -> usize {
        match self {
            Visited::Packed { set, .. } => set.len(),
            Visited::Wide(set) => set.len(),
        }
    }
}

struct Node {
    word: StateWord,
    parent: usize,
    letter: Letter,
}

fn vertex_of(nodes: &[Node], mut i: usize) -> TreeWord {
    let mut path = Vec::new();
    while i != 0 {
        path.push(nodes[i].letter);
        i = nodes[i].parent;
    }
    path.reverse();
    path
}

fn decide(
    a: &Automaton,
    xi: &[State],
    fixes_level_one: impl Fn(&[State]) -> bool,
) -> TrivialityCertificate {
    let mut visited = Visited::new(a.num_states(), xi.len());
    visited.insert(xi);
    let certificate = |verdict, explored| TrivialityCertificate {
        word: xi.to_vec(),
        verdict,
        orbit_explored: explored,
    };
    if !fixes_level_one(xi) {
        return certificate(
            Verdict::Nontrivial {
                witness_vertex: Vec::new(),
                min_level: 1,
            },
            1,
        );
    }
    let mut nodes = vec![Node {
        word: xi.to_vec(),
        parent: 0,
        letter: 0,
    }];
    let mut frontier = 0..1;
    let mut depth = 0;
    loop {
        let start = nodes.len();
        for parent in frontier {
            for x in 0..a.num_letters() as Letter {
                let mut child = nodes[parent].word.clone();
                a.section_step(&mut child, x);
                if !visited.insert(&child) {
                    continue;
                }
                let moved = !fixes_level_one(&child);
                nodes.push(Node {
                    word: child,
                    parent,
                    letter: x,
                });
                if moved {
                    return certificate(
                        Verdict::Nontrivial {
                            witness_vertex: vertex_of(&nodes, nodes.len() - 1),
                            min_level: depth + 2,
                        },
                        visited.len(),
                    );
                }
            }
        }
        if nodes.len() == start {
            return certificate(Verdict::Identity, visited.len());
        }
        frontier = start..nodes.len();
        depth += 1;
    }
}

/// Decides whether `B_ξ` is the identity, where `B` is the Aleshin automaton
/// together with its inverse.
pub fn is_identity(xi: &GroupWord) -> TrivialityCertificate {
    decide(&family().b, xi.indices(), |w| chi_indices(w) == 1)
}

/// Decides whether `A_ξ` is the identity for an arbitrary automaton.
pub fn is_identity_in(
    a: &Automaton,
    xi: &[State],
) -> Result<TrivialityCertificate, AutomatonError> {
    a.check_states(xi)?;
    Ok(decide(a, xi, |w| {
        a.level_one_map(w)
            .iter()
            .enumerate()
            .all(|(x, &y)| x == y as usize)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinLevel {
    Level(usize),
    Identity,
}

impl fmt::Display for MinLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinLevel::Level(n) => write!(f, "{n}"),
            MinLevel::Identity => write!(f, "identity"),
        }
    }
}

/// The first tree level moved by `B_ξ`.
pub fn min_nontrivial_level(xi: &GroupWord) -> MinLevel {
    is_identity(xi)
        .min_level()
        .map_or(MinLevel::Identity, MinLevel::Level)
}

/// Number of freely reduced nonempty words of length at most `max_len`.
pub fn reduced_word_count(max_len: usize) -> u64 {
    (1..=max_len as u32).map(|l| 6 * 5u64.pow(l - 1)).sum()
}

/// Freely reduced words of length exactly `len` that start with `prefix`,
/// in lexicographic order.
fn reduced_extensions(prefix: &[u8], len: usize, out: &mut Vec<GroupWord>) {
    fn rec(cur: &mut Vec<u8>, len: usize, out: &mut Vec<GroupWord>) {
        if cur.len() == len {
            out.push(GroupWord::from_indices(cur.clone()).expect("valid symbols"));
            return;
        }
        for s in 0..6u8 {
            if cur.last().is_some_and(|&t| (t + 3) % 6 == s) {
                continue;
            }
            cur.push(s);
            rec(cur, len, out);
            cur.pop();
        }
    }
    rec(&mut prefix.to_vec(), len, out);
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub word: GroupWord,
    pub length: usize,
    pub min_level: Option<usize>,
    pub orbit_explored: usize,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub max_length: usize,
    pub words_checked: u64,
    pub all_nontrivial: bool,
    pub rows: Vec<SweepRow>,
    pub jobs: usize,
    pub timing: Duration,
}

impl SweepReport {
    pub fn trivial_count(&self) -> usize {
        self.rows.iter().filter(|r| r.min_level.is_none()).count()
    }

    /// `N words, all nontrivial` or `N words, K trivial`.
    pub fn summary_line(&self) -> String {
        if self.all_nontrivial {
            format!("{} words, all nontrivial", self.words_checked)
        } else {
            format!(
                "{} words, {} trivial",
                self.words_checked,
                self.trivial_count()
            )
        }
    }

    /// Tab-separated rows under a header, followed by a `#` summary line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("word\tlength\tmin_level\torbit_explored\n");
        for row in &self.rows {
            let level = row
                .min_level
                .map_or_else(|| "identity".to_string(), |l| l.to_string());
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                row.word, row.length, level, row.orbit_explored
            ));
        }
        out.push_str(&format!(
            "# words={} all_nontrivial={} trivial={} max_len={} jobs={} elapsed_ms={}\n",
            self.words_checked,
            self.all_nontrivial,
            self.trivial_count(),
            self.max_length,
            self.jobs,
            self.timing.as_millis()
        ));
        out
    }
}

/// Runs [`is_identity`] on every freely reduced nonempty word of length at
/// most `max_len`. `jobs = 0` uses the available parallelism.
pub fn verify_freeness(max_len: usize, jobs: usize) -> SweepReport {
    let started = Instant::now();
    let jobs = if jobs == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        jobs
    };

    // Shards: all words shorter than the shard depth form one shard; each
    // reduced prefix of that depth forms another.
    let depth = max_len.min(3);
    let mut prefixes = Vec::new();
    reduced_extensions(&[], depth, &mut prefixes);
    let short_lengths = 1..depth;

    let check = |xi: GroupWord| {
        let cert = is_identity(&xi);
        SweepRow {
            length: xi.len(),
            min_level: cert.min_level(),
            orbit_explored: cert.orbit_explored,
            word: xi,
        }
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let mut rows: Vec<SweepRow> = if max_len == 0 {
        Vec::new()
    } else {
        pool.install(|| {
            let short = {
                let mut words = Vec::new();
                for len in short_lengths {
                    reduced_extensions(&[], len, &mut words);
                }
                words.into_iter().map(check).collect::<Vec<_>>()
            };
            let long: Vec<SweepRow> = prefixes
                .par_iter()
                .flat_map_iter(|prefix| {
                    let mut words = Vec::new();
                    for len in depth..=max_len {
                        reduced_extensions(prefix.indices(), len, &mut words);
                    }
                    words.into_iter().map(check).collect::<Vec<_>>()
                })
                .collect();
            short.into_iter().chain(long).collect()
        })
    };
    rows.sort_by(|x, y| x.word.cmp(&y.word));

    SweepReport {
        max_length: max_len,
        words_checked: rows.len() as u64,
        all_nontrivial: rows.iter().all(|r| r.min_level.is_some()),
        rows,
        jobs,
        timing: started.elapsed(),
    }
}

/// The permutation `A_ξ` induces on the first level of the tree.
pub fn first_level_action(
    a: &Automaton,
    xi: &[State],
) -> Result<crate::perm::Permutation, AutomatonError> {
    a.first_level_action(xi)
}
