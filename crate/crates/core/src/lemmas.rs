//! Executable property checks over bounded word ranges.
//!
//! Each check implements [`LemmaCheck`] and is registered by name in a
//! [`LemmaRegistry`]. A check receives a length bound and reports how many
//! cases it examined and which, if any, failed.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::aleshin::automata::{family, ALPHA, BETA, D0, D1, GAMMA};
use crate::aleshin::words::{
    chi, is_freely_irreducible, pattern_of, strip_c, w_class, GroupWord, Lift, Pattern, Sign,
    SignedSymbol, WClass,
};
use crate::automaton::{Automaton, Letter, OrbitMode, State};
use crate::orbit::{
    class_cardinality, e_orbit, irreducible_class, orbit_partition, smallest_irreducible,
};
use crate::perm::Permutation;
use crate::verifier::is_identity;
use crate::witnesses::{ind2_witnesses, ind5_witnesses, ind6_witnesses, verify_ind2};

/// Result of running one check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Counts one case; on failure keeps the first description.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn record_result(&mut self, result: Result<(), String>) {
        match result {
            Ok(()) => self.record(true, String::new),
            Err(e) => self.record(false, || e),
        }
    }
}

pub trait LemmaCheck: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// Longest word length actually used for a requested bound.
    fn effective_len(&self, max_len: usize) -> usize {
        max_len
    }
    fn run(&self, max_len: usize) -> CheckOutcome;
}

/// One line of a suite run.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub summary: &'static str,
    pub bound: usize,
    pub outcome: CheckOutcome,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.outcome.passed() {
            "PASS"
        } else {
            "FAIL"
        };
        write!(
            f,
            "{status} {} cases={} failures={} len<={}: {}",
            self.name, self.outcome.cases, self.outcome.failures, self.bound, self.summary
        )?;
        if let Some(first) = &self.outcome.first_failure {
            write!(f, " (first failure: {first})")?;
        }
        Ok(())
    }
}

pub struct LemmaRegistry {
    checks: Vec<Box<dyn LemmaCheck>>,
}

impl LemmaRegistry {
    pub fn empty() -> Self {
        LemmaRegistry { checks: Vec::new() }
    }

    /// Every check defined in this module.
    pub fn builtin() -> Self {
        let mut r = LemmaRegistry::empty();
        for check in builtin_checks() {
            r.register(check);
        }
        r
    }

    /// Adds a check; a check with the same name is replaced.
    pub fn register(&mut self, check: Box<dyn LemmaCheck>) {
        self.checks.retain(|c| c.name() != check.name());
        self.checks.push(check);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn LemmaCheck> {
        self.checks
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
    }

    pub fn run_one(&self, name: &str, max_len: usize) -> Option<CheckReport> {
        self.get(name).map(|c| report(c, max_len))
    }

    pub fn run_all(&self, max_len: usize) -> Vec<CheckReport> {
        self.checks
            .iter()
            .map(|c| report(c.as_ref(), max_len))
            .collect()
    }
}

fn report(c: &dyn LemmaCheck, max_len: usize) -> CheckReport {
    CheckReport {
        name: c.name(),
        summary: c.summary(),
        bound: c.effective_len(max_len),
        outcome: c.run(max_len),
    }
}

/// A check backed by a plain function.
struct FnCheck {
    name: &'static str,
    summary: &'static str,
    cap: Option<usize>,
    run: fn(usize) -> CheckOutcome,
}

impl LemmaCheck for FnCheck {
    fn name(&self) -> &'static str {
        self.name
    }

    fn summary(&self) -> &'static str {
        self.summary
    }

    fn effective_len(&self, max_len: usize) -> usize {
        self.cap.map_or(max_len, |cap| max_len.min(cap))
    }

    fn run(&self, max_len: usize) -> CheckOutcome {
        (self.run)(self.effective_len(max_len))
    }
}

fn check(
    name: &'static str,
    summary: &'static str,
    cap: Option<usize>,
    run: fn(usize) -> CheckOutcome,
) -> Box<dyn LemmaCheck> {
    Box::new(FnCheck {
        name,
        summary,
        cap,
        run,
    })
}

fn builtin_checks() -> Vec<Box<dyn LemmaCheck>> {
    vec![
        check(
            "auto1",
            "semigroup and group tree orbits agree for invertible automata",
            Some(8),
            check_auto1,
        ),
        check(
            "auto2",
            "inverse automaton undoes every state",
            Some(12),
            check_auto2,
        ),
        check(
            "auto3",
            "reversal maps orbits of A onto orbits of its reverse",
            Some(7),
            check_auto3,
        ),
        check(
            "auto4",
            "A_xi(wu) = A_xi(w) A_{D_w(xi)}(u) and D_w(xi eta) = D_w(xi) D_{A_xi(w)}(eta)",
            Some(3),
            check_auto4,
        ),
        check(
            "auto5",
            "sections of a trivial word act trivially",
            Some(4),
            check_auto5,
        ),
        check(
            "free1",
            "pi is a homomorphism from permutations of {a,b,c}",
            Some(5),
            check_free1,
        ),
        check(
            "free2",
            "E generators are involutions and E_alpha E_beta = E_beta E_alpha = pi_(ab)",
            None,
            check_free2,
        ),
        check(
            "free3",
            "D_0 = pi_(ac) E_alpha = pi_(abc) E_beta, D_1 = pi_(abc) E_alpha = pi_(ac) E_beta",
            None,
            check_free3,
        ),
        check(
            "free4",
            "D_0 D_1^-1 = E_gamma and D_0^-1 D_1 = pi_(ab)",
            None,
            check_free4,
        ),
        check(
            "free4-orbit",
            "orbit partitions under G(D) and G(E) coincide",
            Some(7),
            check_free4_orbit,
        ),
        check(
            "ind1",
            "B_xi fixes the first level iff chi(xi) = +1",
            None,
            check_ind1,
        ),
        check(
            "ind2",
            "every pattern class contains words of both chi values",
            None,
            check_ind2,
        ),
        check(
            "ind3",
            "G(E)-orbit of an irreducible word is its whole pattern class",
            None,
            check_ind3,
        ),
        check(
            "ind4",
            "reversal maps G(E)-orbits onto G(E)-orbits",
            Some(7),
            check_ind4,
        ),
        check(
            "ind5",
            "Z(xi_a) = {xi_a, xi_b} with xi_b = g(xi_a)",
            None,
            check_ind5,
        ),
        check(
            "ind6",
            "nine-word tables have the stated Z-sets and generator swaps",
            None,
            check_ind6,
        ),
        check(
            "indextra",
            "E_alpha/E_beta fix W-classes and swap appended letters",
            None,
            check_indextra,
        ),
        check(
            "p1p2",
            "E maps the cancelling pairs {qq^-1} and {q^-1q} into themselves",
            None,
            check_p1p2,
        ),
        check(
            "pattern-invariance",
            "pi_tau and E preserve patterns; E preserves irreducibility",
            None,
            check_pattern_invariance,
        ),
        check(
            "class-cardinality",
            "|irreducible_class(v)| = 3 * prod(2 or 3), by brute force",
            None,
            check_class_cardinality,
        ),
        check(
            "strip-c-hom",
            "r(xi eta) = r(xi) r(eta)",
            Some(4),
            check_strip_c_hom,
        ),
    ]
}

fn words_upto(len: usize) -> impl Iterator<Item = GroupWord> {
    (0..=len).flat_map(GroupWord::all_of_length)
}

fn binary_words(len: usize) -> impl Iterator<Item = Vec<Letter>> {
    (0..1u32 << len).map(move |x| {
        (0..len)
            .map(|i| (x >> (len - 1 - i) & 1) as Letter)
            .collect()
    })
}

fn words_over(k: usize, len: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = k.pow(len as u32);
    (0..total).map(move |mut n| {
        let mut v = vec![0u8; len];
        for slot in v.iter_mut().rev() {
            *slot = (n % k) as u8;
            n /= k;
        }
        v
    })
}

fn show(x: &[u8]) -> String {
    GroupWord::from_indices(x.to_vec()).map_or_else(|| format!("{x:?}"), |w| w.to_string())
}

type WordMap<'a> = Box<dyn Fn(&[u8]) -> Vec<u8> + 'a>;

fn state_map(a: &Automaton, q: State) -> WordMap<'_> {
    Box::new(move |x| a.run(q, x))
}

fn lift_map(cycles: &[&[u8]]) -> WordMap<'static> {
    let p = Lift::from_cycles(cycles)
        .expect("valid cycles")
        .symbol_permutation()
        .clone();
    Box::new(move |x| x.iter().map(|&s| p.apply(s)).collect())
}

/// `f ∘ g`: `g` applies first.
fn after<'a>(f: WordMap<'a>, g: WordMap<'a>) -> WordMap<'a> {
    Box::new(move |x| f(&g(x)))
}

fn identity_map() -> WordMap<'static> {
    Box::new(|x| x.to_vec())
}

fn pointwise(
    out: &mut CheckOutcome,
    len: usize,
    label: &str,
    lhs: &WordMap<'_>,
    rhs: &WordMap<'_>,
) {
    for xi in words_upto(len) {
        let (l, r) = (lhs(xi.indices()), rhs(xi.indices()));
        out.record(l == r, || {
            format!("{label} on {xi}: {} vs {}", show(&l), show(&r))
        });
    }
}

fn check_auto1(len: usize) -> CheckOutcome {
    let f = family();
    let mut out = CheckOutcome::default();
    let all_b: Vec<State> = (0..6).collect();
    for l in 0..=len {
        for w in binary_words(l) {
            for gens in [&all_b[..], &[0, 1, 2], &[2]] {
                let s = f.b.tree_orbit(gens, &w, OrbitMode::Semigroup).unwrap();
                let g = f.b.tree_orbit(gens, &w, OrbitMode::Group).unwrap();
                out.record(s == g, || format!("B orbit of {w:?} under {gens:?}"));
            }
        }
    }
    for xi in words_upto(len.min(4)) {
        let s =
            f.d.tree_orbit(&[D0, D1], xi.indices(), OrbitMode::Semigroup)
                .unwrap();
        let g =
            f.d.tree_orbit(&[D0, D1], xi.indices(), OrbitMode::Group)
                .unwrap();
        out.record(s == g, || format!("D orbit of {xi}"));
    }
    out
}

fn check_auto2(len: usize) -> CheckOutcome {
    let f = family();
    let mut out = CheckOutcome::default();
    for (name, a, l) in [
        ("A", &f.a, len),
        ("B", &f.b, len),
        ("D", &f.d, len.min(6)),
        ("E", &f.e, len.min(6)),
    ] {
        let inv = a.inverse().expect("invertible");
        for n in 0..=l {
            for w in words_over(a.num_letters(), n) {
                for q in 0..a.num_states() as State {
                    let back = inv.run(q, &a.run(q, &w));
                    out.record(back == w, || format!("{name} state {q} on {w:?}"));
                }
            }
        }
    }
    out
}

/// Orbits of `A` on words of length `len` as a sorted partition.
fn raw_partition(a: &Automaton, gens: &[State], len: usize) -> Vec<BTreeSet<Vec<u8>>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut parts = Vec::new();
    for w in words_over(a.num_letters(), len) {
        if seen.contains(&w) {
            continue;
        }
        let orbit = a.tree_orbit(gens, &w, OrbitMode::Semigroup).unwrap();
        seen.extend(orbit.iter().cloned());
        parts.push(orbit);
    }
    parts.sort();
    parts
}

fn reversed_partition(parts: &[BTreeSet<Vec<u8>>]) -> Vec<BTreeSet<Vec<u8>>> {
    let mut out: Vec<BTreeSet<Vec<u8>>> = parts.iter().map(reversed_set).collect();
    out.sort();
    out
}

fn reversed_set(set: &BTreeSet<Vec<u8>>) -> BTreeSet<Vec<u8>> {
    set.iter()
        .map(|w| w.iter().rev().copied().collect())
        .collect()
}

fn check_auto3(len: usize) -> CheckOutcome {
    let f = family();
    let mut out = CheckOutcome::default();
    for (name, a, l) in [
        ("A", &f.a, len + 3),
        ("B", &f.b, len + 3),
        ("E", &f.e, len.min(6)),
    ] {
        let r = a.reverse().expect("reversible");
        let gens: Vec<State> = (0..a.num_states() as State).collect();
        for n in 0..=l {
            if a.is_invertible() && r.is_invertible() {
                // Both orbit families are partitions; compare them whole.
                let forward = reversed_partition(&raw_partition(a, &gens, n));
                let backward = raw_partition(&r, &gens, n);
                out.record(forward == backward, || format!("{name} at length {n}"));
            } else {
                for w in words_over(a.num_letters(), n) {
                    let fw = a.tree_orbit(&gens, &w, OrbitMode::Semigroup).unwrap();
                    let rw: Vec<u8> = w.iter().rev().copied().collect();
                    let bw = r.tree_orbit(&gens, &rw, OrbitMode::Semigroup).unwrap();
                    out.record(reversed_set(&fw) == bw, || format!("{name} orbit of {w:?}"));
                }
            }
        }
    }
    out
}

fn check_auto4(len: usize) -> CheckOutcome {
    let f = family();
    let b = &f.b;
    let mut out = CheckOutcome::default();
    let xis: Vec<Vec<u8>> = (0..=len.min(3)).flat_map(|n| words_over(6, n)).collect();
    let tree: Vec<Vec<u8>> = (0..=len).flat_map(binary_words).collect();
    let short: Vec<&Vec<u8>> = xis.iter().filter(|x| x.len() <= 2).collect();
    for xi in &xis {
        for w in &tree {
            let aw = b.act_word(xi, w).unwrap();
            let dw = b.section_word(xi, w).unwrap();
            for u in &tree {
                let wu = [w.as_slice(), u].concat();
                let expected = [aw.as_slice(), &b.act_word(&dw, u).unwrap()].concat();
                out.record(b.act_word(xi, &wu).unwrap() == expected, || {
                    format!("A_xi(wu) for xi={} w={w:?} u={u:?}", show(xi))
                });
            }
            for eta in &short {
                let xe = [xi.as_slice(), eta].concat();
                let expected = [dw.as_slice(), &b.section_word(eta, &aw).unwrap()].concat();
                out.record(b.section_word(&xe, w).unwrap() == expected, || {
                    format!("D_w(xi eta) for xi={} eta={} w={w:?}", show(xi), show(eta))
                });
            }
        }
    }
    out
}

fn check_auto5(len: usize) -> CheckOutcome {
    let b = &family().b;
    let n = 2 * len;
    let mut out = CheckOutcome::default();
    for xi in words_upto(len) {
        let trivial = binary_words(n).all(|w| b.act_word(xi.indices(), &w).unwrap() == w);
        let cert = is_identity(&xi);
        let consistent = match cert.min_level() {
            None => trivial,
            Some(level) => trivial == (level > n),
        };
        out.record(consistent, || {
            format!("{xi}: tree action up to level {n} vs certificate")
        });
        if !trivial {
            continue;
        }
        for m in 0..=len {
            for w in binary_words(m) {
                let s = b.section_word(xi.indices(), &w).unwrap();
                let section_trivial = binary_words(n - m).all(|u| b.act_word(&s, &u).unwrap() == u);
                out.record(section_trivial, || format!("section of {xi} at {w:?}"));
                if cert.is_identity() {
                    let sw = GroupWord::from_indices(s).unwrap();
                    out.record(is_identity(&sw).is_identity(), || {
                        format!("certificate for section {sw} of {xi}")
                    });
                }
            }
        }
    }
    out
}

fn check_free1(len: usize) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let perms = Permutation::all(3);
    let lifts: Vec<Lift> = perms.iter().map(|p| Lift::new(p).unwrap()).collect();
    let words: Vec<GroupWord> = words_upto(len).collect();
    for (p1, l1) in perms.iter().zip(&lifts) {
        let inv = Lift::new(&p1.inverse()).unwrap();
        for xi in &words {
            let back = inv.apply(&l1.apply(xi));
            out.record(&back == xi, || format!("pi_{p1}^-1 on {xi}"));
        }
        for (p2, l2) in perms.iter().zip(&lifts) {
            let composed = Lift::new(&p1.compose(p2)).unwrap();
            for xi in &words {
                let ok = composed.apply(xi) == l1.apply(&l2.apply(xi));
                out.record(ok, || format!("pi_{p1} pi_{p2} on {xi}"));
            }
        }
    }
    out
}

fn check_free2(len: usize) -> CheckOutcome {
    let e = &family().e;
    let mut out = CheckOutcome::default();
    for (q, name) in [
        (ALPHA, "E_alpha^2"),
        (BETA, "E_beta^2"),
        (GAMMA, "E_gamma^2"),
    ] {
        pointwise(
            &mut out,
            len,
            name,
            &after(state_map(e, q), state_map(e, q)),
            &identity_map(),
        );
    }
    let ab = lift_map(&[&[0, 1]]);
    pointwise(
        &mut out,
        len,
        "E_alpha E_beta",
        &after(state_map(e, ALPHA), state_map(e, BETA)),
        &ab,
    );
    pointwise(
        &mut out,
        len,
        "E_beta E_alpha",
        &after(state_map(e, BETA), state_map(e, ALPHA)),
        &ab,
    );
    out
}

fn check_free3(len: usize) -> CheckOutcome {
    let f = family();
    let e = |q| state_map(&f.e, q);
    let mut out = CheckOutcome::default();
    let cases = [
        ("pi_(ac) E_alpha", D0, after(lift_map(&[&[0, 2]]), e(ALPHA))),
        (
            "pi_(abc) E_beta",
            D0,
            after(lift_map(&[&[0, 1, 2]]), e(BETA)),
        ),
        (
            "pi_(abc) E_alpha",
            D1,
            after(lift_map(&[&[0, 1, 2]]), e(ALPHA)),
        ),
        ("pi_(ac) E_beta", D1, after(lift_map(&[&[0, 2]]), e(BETA))),
    ];
    for (label, d, rhs) in &cases {
        pointwise(
            &mut out,
            len,
            &format!("D_{d} = {label}"),
            &state_map(&f.d, *d),
            rhs,
        );
    }
    out
}

fn check_free4(len: usize) -> CheckOutcome {
    let f = family();
    let mut out = CheckOutcome::default();
    pointwise(
        &mut out,
        len,
        "D_0 D_1^-1 = E_gamma",
        &after(state_map(&f.d, D0), state_map(&f.d_inverse, D1)),
        &state_map(&f.e, GAMMA),
    );
    pointwise(
        &mut out,
        len,
        "D_0^-1 D_1 = pi_(ab)",
        &after(state_map(&f.d_inverse, D0), state_map(&f.d, D1)),
        &lift_map(&[&[0, 1]]),
    );
    out
}

fn check_free4_orbit(len: usize) -> CheckOutcome {
    let f = family();
    let mut out = CheckOutcome::default();
    for n in 0..=len {
        let by_d = orbit_partition(&f.d, &[D0, D1], n, OrbitMode::Group).unwrap();
        let by_e = orbit_partition(&f.e, &[ALPHA, BETA, GAMMA], n, OrbitMode::Semigroup).unwrap();
        out.record(by_d == by_e, || {
            format!(
                "length {n}: {} D-orbits vs {} E-orbits",
                by_d.len(),
                by_e.len()
            )
        });
    }
    out
}

fn check_ind1(len: usize) -> CheckOutcome {
    let b = &family().b;
    let mut out = CheckOutcome::default();
    for xi in words_upto(len) {
        let fixes = b.first_level_action(xi.indices()).unwrap().is_identity();
        let by_tree = [0, 1]
            .iter()
            .all(|&x| b.act_word(xi.indices(), &[x]).unwrap() == [x]);
        out.record(fixes == (chi(&xi) == 1) && fixes == by_tree, || {
            format!("{xi}: fixes level one = {fixes}, chi = {}", chi(&xi))
        });
    }
    out
}

fn check_ind2(len: usize) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for n in 1..=len {
        for v in Pattern::all_of_length(n) {
            let pair = ind2_witnesses(&v).expect("nonempty pattern");
            out.record_result(verify_ind2(&v, &pair));
            let class = irreducible_class(&v);
            let signs: BTreeSet<i8> = class.iter().map(chi).collect();
            out.record(signs.len() == 2, || {
                format!("class of {v} has chi values {signs:?}")
            });
        }
    }
    out
}

fn check_ind3(len: usize) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for n in 1..=len {
        for v in Pattern::all_of_length(n) {
            let class = irreducible_class(&v);
            let orbit = e_orbit(&smallest_irreducible(&v));
            out.record(orbit.members == class, || {
                format!(
                    "pattern {v}: orbit has {} words, class has {}",
                    orbit.len(),
                    class.len()
                )
            });
            out.record(class.len() as u64 == class_cardinality(&v), || {
                format!("pattern {v}: class has {} words", class.len())
            });
        }
    }
    out
}

fn check_ind4(len: usize) -> CheckOutcome {
    let e = &family().e;
    let mut out = CheckOutcome::default();
    for n in 0..=len {
        let parts = orbit_partition(e, &[ALPHA, BETA, GAMMA], n, OrbitMode::Semigroup).unwrap();
        let mut reversed: Vec<BTreeSet<GroupWord>> = parts
            .iter()
            .map(|p| p.iter().map(GroupWord::reversed).collect())
            .collect();
        reversed.sort();
        out.record(reversed == parts, || format!("length {n}"));
    }
    out
}

fn check_ind5(len: usize) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for n in 2..=len.max(1) {
        for v in Pattern::all_of_length(n) {
            if let Ok(wit) = ind5_witnesses(&v) {
                out.record_result(wit.verify().map_err(|e| format!("{v}: {e}")));
            }
        }
    }
    out
}

fn check_ind6(len: usize) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for n in 2..=len.max(1) {
        for v in Pattern::all_of_length(n) {
            if let Ok(wit) = ind6_witnesses(&v) {
                out.record_result(wit.verify().map_err(|e| format!("{v}: {e}")));
            }
        }
    }
    out
}

fn check_indextra(len: usize) -> CheckOutcome {
    let e = &family().e;
    let mut out = CheckOutcome::default();
    let run = |q: State, x: &GroupWord| GroupWord::from_indices(e.run(q, x.indices())).unwrap();
    let rules = [
        (WClass::PlusPlus, ALPHA, Sign::Plus),
        (WClass::PlusMinus, ALPHA, Sign::Minus),
        (WClass::MinusPlus, BETA, Sign::Plus),
        (WClass::MinusMinus, BETA, Sign::Minus),
    ];
    for xi in words_upto(len) {
        let classes = w_class(&xi);
        for (class, g, sign) in rules {
            if !classes.contains(class) {
                continue;
            }
            out.record(run(g, &xi) == xi, || format!("{xi} in {class} is moved"));
            if xi.len() < len {
                let (sa, sb) = (SignedSymbol::new(0, sign), SignedSymbol::new(1, sign));
                let with = |s| {
                    let mut w = xi.clone();
                    w.push(s);
                    w
                };
                out.record(run(g, &with(sa)) == with(sb), || {
                    format!("{xi} in {class}, appended {}", sa.name())
                });
                out.record(run(g, &with(sb)) == with(sa), || {
                    format!("{xi} in {class}, appended {}", sb.name())
                });
            }
        }
    }
    out
}

fn check_p1p2(len: usize) -> CheckOutcome {
    let e = &family().e;
    let mut out = CheckOutcome::default();
    let p1: BTreeSet<Vec<u8>> = (0..3).map(|q| vec![q, q + 3]).collect();
    let p2: BTreeSet<Vec<u8>> = (0..3).map(|q| vec![q + 3, q]).collect();
    for set in [&p1, &p2] {
        for pair in set {
            for q in [ALPHA, BETA, GAMMA] {
                let image = e.run(q, pair);
                out.record(set.contains(&image), || {
                    format!("state {q} on {}", show(pair))
                });
            }
        }
    }
    // Every cancelling factor of a word maps to a cancelling factor.
    for xi in words_upto(len) {
        let x = xi.indices();
        for q in [ALPHA, BETA, GAMMA] {
            let y = e.run(q, x);
            let ok = (1..x.len()).all(|i| (x[i - 1] + 3) % 6 != x[i] || (y[i - 1] + 3) % 6 == y[i]);
            out.record(ok, || format!("state {q} on {xi}"));
        }
    }
    out
}

fn check_pattern_invariance(len: usize) -> CheckOutcome {
    let e = &family().e;
    let mut out = CheckOutcome::default();
    let lifts: Vec<Lift> = Permutation::all(3)
        .iter()
        .map(|p| Lift::new(p).unwrap())
        .collect();
    for xi in words_upto(len) {
        let v = pattern_of(&xi);
        for l in &lifts {
            out.record(pattern_of(&l.apply(&xi)) == v, || {
                format!("pi_{} on {xi}", l.base())
            });
        }
        for q in [ALPHA, BETA, GAMMA] {
            let y = GroupWord::from_indices(e.run(q, xi.indices())).unwrap();
            out.record(
                pattern_of(&y) == v && is_freely_irreducible(&y) == is_freely_irreducible(&xi),
                || format!("state {q} on {xi}"),
            );
        }
    }
    out
}

fn check_class_cardinality(len: usize) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for n in 0..=len {
        for v in Pattern::all_of_length(n) {
            // Each position admits three bases; count the irreducible choices.
            let brute = words_over(3, n)
                .filter(|bases| {
                    let w: GroupWord = bases
                        .iter()
                        .zip(&v.0)
                        .map(|(&b, &s)| SignedSymbol::new(b, s))
                        .collect();
                    is_freely_irreducible(&w)
                })
                .count() as u64;
            out.record(brute == class_cardinality(&v), || {
                format!(
                    "pattern {v}: brute force {brute}, formula {}",
                    class_cardinality(&v)
                )
            });
        }
    }
    out
}

fn check_strip_c_hom(len: usize) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let words: Vec<GroupWord> = words_upto(len).collect();
    for xi in &words {
        let r = strip_c(xi);
        out.record(r.symbols().all(|s| s.base() != 2), || {
            format!("r({xi}) = {r}")
        });
        for eta in words.iter().filter(|w| w.len() + xi.len() <= len + 1) {
            out.record(strip_c(&xi.concat(eta)) == r.concat(&strip_c(eta)), || {
                format!("r({xi} {eta})")
            });
        }
    }
    out
}
