//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Oracles here are written against hand-coded tables so they do
//! not share code paths with the library under test.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use aleshin_core::aleshin::automata::{family, ALPHA, BETA, D0, D1, GAMMA};
use aleshin_core::aleshin::words::{GroupWord, Pattern, Sign};
use aleshin_core::moore;
use aleshin_core::orbit::{e_orbit, irreducible_class, orbit_partition, smallest_irreducible};
use aleshin_core::verifier::{is_identity, verify_freeness};
use aleshin_core::witnesses::{ind2_witnesses, ind5_witnesses, ind6_witnesses, verify_ind2};
use aleshin_core::{Automaton, OrbitMode};

type Word = Vec<u8>;

// ---------------------------------------------------------------------
// Hand-coded oracles

/// (next, output) of the Aleshin automaton, states a, b, c = 0, 1, 2.
const ALESHIN: [[(u8, u8); 2]; 3] = [[(2, 1), (1, 0)], [(1, 1), (2, 0)], [(0, 0), (0, 1)]];

/// One step of `A ⊔ A⁻¹`, where state `q + 3` is the inverse of `q`.
fn b_step(q: u8, y: u8) -> (u8, u8) {
    if q < 3 {
        return ALESHIN[q as usize][y as usize];
    }
    let base = (q - 3) as usize;
    let x = (0..2).find(|&x| ALESHIN[base][x].1 == y).unwrap();
    (ALESHIN[base][x].0 + 3, x as u8)
}

fn b_run(mut q: u8, w: &[u8]) -> Word {
    w.iter()
        .map(|&y| {
            let (next, out) = b_step(q, y);
            q = next;
            out
        })
        .collect()
}

/// Tree action of a word of `B`-states, leftmost state first.
fn b_act(xi: &[u8], w: &[u8]) -> Word {
    xi.iter().fold(w.to_vec(), |cur, &q| b_run(q, &cur))
}

/// `E`: output permutations per state, α/β swap on non-c letters.
fn e_run(mut q: u8, xi: &[u8]) -> Word {
    let sigma: [[u8; 6]; 3] = [[0, 1, 2, 4, 3, 5], [1, 0, 2, 3, 4, 5], [0, 2, 1, 3, 5, 4]];
    xi.iter()
        .map(|&s| {
            let out = sigma[q as usize][s as usize];
            if s % 3 != 2 && q != 2 {
                q = 1 - q;
            }
            out
        })
        .collect()
}

/// Letterwise lift of a permutation of `{a, b, c}` given by base images.
fn lift(images: [u8; 3]) -> impl Fn(&[u8]) -> Word {
    move |xi| {
        xi.iter()
            .map(|&s| images[(s % 3) as usize] + 3 * (s / 3))
            .collect()
    }
}

fn oracle_chi(xi: &[u8]) -> i8 {
    if xi.iter().filter(|&&s| s % 3 != 2).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn oracle_irreducible(xi: &[u8]) -> bool {
    xi.windows(2)
        .all(|p| p[0] % 3 != p[1] % 3 || p[0] / 3 == p[1] / 3)
}

fn oracle_signs(xi: &[u8]) -> Vec<bool> {
    xi.iter().map(|&s| s < 3).collect()
}

fn all_words(k: u8, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

fn words_upto(k: u8, len: usize) -> Vec<Word> {
    (0..=len).flat_map(|n| all_words(k, n)).collect()
}

fn gw(x: &[u8]) -> GroupWord {
    GroupWord::from_indices(x.to_vec()).unwrap()
}

fn show(x: &[u8]) -> String {
    gw(x).to_string()
}

// ---------------------------------------------------------------------
// Reporting

struct Verdict {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 5 {
            self.failures.push(describe());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn criterion(n: usize, title: &str, body: impl FnOnce(&mut Verdict)) -> bool {
    let started = Instant::now();
    let mut v = Verdict::new();
    body(&mut v);
    let ok = v.failures.is_empty();
    println!(
        "{} criterion {n}: {title} [{} ms] {}",
        if ok { "PASS" } else { "FAIL" },
        started.elapsed().as_millis(),
        v.notes.join("; ")
    );
    if !ok {
        println!("    {} failure(s)", v.failures.len());
        for f in v.failures.iter().filter(|f| !f.is_empty()) {
            println!("    {f}");
        }
    }
    ok
}

// ---------------------------------------------------------------------
// Criteria

fn reduced_count_brute(max_len: usize) -> u64 {
    let mut count = 0u64;
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 1..=max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..6u8 {
                let mut v = w.clone();
                v.push(s);
                if oracle_irreducible(&v) {
                    next.push(v);
                }
            }
        }
        count += next.len() as u64;
        layer = next;
    }
    count
}

fn c1_freeness(v: &mut Verdict) {
    for (len, limit) in [
        (6usize, Duration::from_secs(60)),
        (8, Duration::from_secs(600)),
    ] {
        let expected = reduced_count_brute(len);
        let report = verify_freeness(len, 0);
        v.check(report.words_checked == expected, || {
            format!(
                "len {len}: checked {} words, brute force counts {expected}",
                report.words_checked
            )
        });
        v.check(report.all_nontrivial, || {
            format!("len {len}: {}", report.summary_line())
        });
        v.check(
            report
                .rows
                .iter()
                .all(|r| oracle_irreducible(r.word.indices()) && !r.word.is_empty()),
            || format!("len {len}: a swept word is reducible or empty"),
        );
        let distinct: HashSet<&GroupWord> = report.rows.iter().map(|r| &r.word).collect();
        v.check(distinct.len() == report.rows.len(), || {
            format!("len {len}: duplicate rows")
        });
        v.check(report.timing < limit, || {
            format!("len {len}: took {:?}", report.timing)
        });
        v.note(format!(
            "len {len}: {} in {} ms on {} jobs",
            report.summary_line(),
            report.timing.as_millis(),
            report.jobs
        ));
    }
}

fn random_words(rng: &mut StdRng, count: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let w: Word = match out.len() % 4 {
            // uniform, any reducibility
            0 | 1 => {
                let len = rng.gen_range(0..=5);
                (0..len).map(|_| rng.gen_range(0..6)).collect()
            }
            // x u u^-1 y
            2 => {
                let ulen = rng.gen_range(1..=2);
                let u: Word = (0..ulen).map(|_| rng.gen_range(0..6)).collect();
                let inv: Word = u.iter().rev().map(|&s| (s + 3) % 6).collect();
                let pad = rng.gen_range(0..=5 - 2 * ulen);
                let split = rng.gen_range(0..=pad);
                let extra: Word = (0..pad).map(|_| rng.gen_range(0..6)).collect();
                [&extra[..split], &u, &inv, &extra[split..]].concat()
            }
            // fully cancelling: u u^-1
            _ => {
                let ulen = rng.gen_range(0..=2);
                let u: Word = (0..ulen).map(|_| rng.gen_range(0..6)).collect();
                let inv: Word = u.iter().rev().map(|&s| (s + 3) % 6).collect();
                [u, inv].concat()
            }
        };
        out.push(w);
    }
    out
}

fn c2_oracle(v: &mut Verdict) {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let words = random_words(&mut rng, 1000);
    let (mut identities, mut reducible) = (0, 0);
    for xi in &words {
        reducible += usize::from(!oracle_irreducible(xi));
        let first_moved = (1..=10).find(|&n| all_words(2, n).iter().any(|w| b_act(xi, w) != *w));
        let cert = is_identity(&gw(xi));
        identities += usize::from(cert.is_identity());
        let agrees = match (cert.min_level(), first_moved) {
            (None, None) => true,
            (Some(m), Some(n)) => m == n,
            (Some(m), None) => m > 10,
            (None, Some(_)) => false,
        };
        v.check(agrees, || {
            format!(
                "{}: min_level {:?}, oracle first moved level {first_moved:?}",
                show(xi),
                cert.min_level()
            )
        });
        if let Some(w) = cert.witness_vertex() {
            // The section at the witness moves a letter: A_xi(wx) ends in y != x.
            let moved =
                (0..2u8).any(|x| *b_act(xi, &[w.as_slice(), &[x]].concat()).last().unwrap() != x);
            v.check(moved, || {
                format!("{}: witness {w:?} does not move a letter", show(xi))
            });
        }
    }
    v.note(format!(
        "1000 words, {reducible} reducible, {identities} identity verdicts"
    ));
}

fn pointwise(
    v: &mut Verdict,
    label: &str,
    len: usize,
    lhs: impl Fn(&[u8]) -> Word,
    rhs: impl Fn(&[u8]) -> Word,
) {
    let mut count = 0u64;
    for xi in words_upto(6, len) {
        count += 1;
        let (l, r) = (lhs(&xi), rhs(&xi));
        v.check(l == r, || {
            format!("{label} on {}: {} vs {}", show(&xi), show(&l), show(&r))
        });
    }
    v.note(format!("{label}: {count} words"));
}

fn lib_run(a: &Automaton, q: u8) -> impl Fn(&[u8]) -> Word + '_ {
    move |x| a.transduce(q, x).unwrap()
}

fn c3_free2(v: &mut Verdict) {
    let e = &family().e;
    pointwise(
        v,
        "E matches table",
        7,
        |x| {
            [ALPHA, BETA, GAMMA]
                .iter()
                .flat_map(|&q| e.transduce(q, x).unwrap())
                .collect()
        },
        |x| (0..3).flat_map(|q| e_run(q, x)).collect(),
    );
    for (q, name) in [
        (ALPHA, "E_alpha^2"),
        (BETA, "E_beta^2"),
        (GAMMA, "E_gamma^2"),
    ] {
        pointwise(
            v,
            name,
            7,
            |x| e.transduce(q, &e.transduce(q, x).unwrap()).unwrap(),
            |x| x.to_vec(),
        );
    }
    let ab = lift([1, 0, 2]);
    pointwise(
        v,
        "E_alpha E_beta",
        7,
        |x| e.transduce(ALPHA, &e.transduce(BETA, x).unwrap()).unwrap(),
        &ab,
    );
    pointwise(
        v,
        "E_beta E_alpha",
        7,
        |x| e.transduce(BETA, &e.transduce(ALPHA, x).unwrap()).unwrap(),
        &ab,
    );
}

fn c4_free3(v: &mut Verdict) {
    let f = family();
    let ac = lift([2, 1, 0]);
    let abc = lift([1, 2, 0]);
    let ab = lift([1, 0, 2]);
    // Regression for the composition order.
    v.check(
        f.d.transduce(D0, &[0, 1]).unwrap() == vec![2, 2] && ac(&e_run(0, &[0, 1])) == vec![2, 2],
        || "D_0(ab) = cc = pi_(ac)(E_alpha(ab))".into(),
    );
    pointwise(v, "D_0 = pi_(ac) E_alpha", 7, lib_run(&f.d, D0), |x| {
        ac(&e_run(0, x))
    });
    pointwise(v, "D_0 = pi_(abc) E_beta", 7, lib_run(&f.d, D0), |x| {
        abc(&e_run(1, x))
    });
    pointwise(v, "D_1 = pi_(abc) E_alpha", 7, lib_run(&f.d, D1), |x| {
        abc(&e_run(0, x))
    });
    pointwise(v, "D_1 = pi_(ac) E_beta", 7, lib_run(&f.d, D1), |x| {
        ac(&e_run(1, x))
    });
    pointwise(
        v,
        "D_0 D_1^-1 = E_gamma",
        7,
        |x| {
            f.d.transduce(D0, &f.d_inverse.transduce(D1, x).unwrap())
                .unwrap()
        },
        |x| e_run(2, x),
    );
    pointwise(
        v,
        "D_0^-1 D_1 = pi_(ab)",
        7,
        |x| {
            f.d_inverse
                .transduce(D0, &f.d.transduce(D1, x).unwrap())
                .unwrap()
        },
        &ab,
    );
    // D_1^-1 really inverts D_1.
    pointwise(
        v,
        "D_1^-1 D_1 = 1",
        6,
        |x| {
            f.d_inverse
                .transduce(D1, &f.d.transduce(D1, x).unwrap())
                .unwrap()
        },
        |x| x.to_vec(),
    );
}

fn c5_ind3(v: &mut Verdict) {
    let mut patterns = 0;
    for n in 1..=7 {
        let mut brute: BTreeMap<Vec<bool>, BTreeSet<Word>> = BTreeMap::new();
        for w in all_words(6, n) {
            if oracle_irreducible(&w) {
                brute.entry(oracle_signs(&w)).or_default().insert(w);
            }
        }
        for pat in Pattern::all_of_length(n) {
            patterns += 1;
            let key: Vec<bool> = pat.0.iter().map(|&s| s == Sign::Plus).collect();
            let expected = &brute[&key];
            let formula: usize = 3 * key
                .windows(2)
                .map(|p| if p[0] != p[1] { 2 } else { 3 })
                .product::<usize>();
            let class: BTreeSet<Word> = irreducible_class(&pat)
                .into_iter()
                .map(|w| w.into_indices())
                .collect();
            let seed = smallest_irreducible(&pat);
            let orbit: BTreeSet<Word> = e_orbit(&seed)
                .members
                .into_iter()
                .map(|w| w.into_indices())
                .collect();
            v.check(
                seed.indices() == &expected.iter().next().unwrap()[..],
                || format!("{pat}: representative {seed}"),
            );
            v.check(&class == expected, || {
                format!("{pat}: class differs from brute force")
            });
            v.check(&orbit == expected, || {
                format!(
                    "{pat}: orbit has {} words, brute class {}",
                    orbit.len(),
                    expected.len()
                )
            });
            v.check(expected.len() == formula, || {
                format!("{pat}: formula {formula}, brute {}", expected.len())
            });
        }
    }
    v.check(patterns == 254, || format!("{patterns} patterns"));
    v.note(format!("{patterns} patterns"));
}

/// Orbits of all words of one length under word maps, by BFS.
type WordFn<'a> = &'a dyn Fn(&[u8]) -> Word;

fn bfs_partition(len: usize, maps: &[WordFn<'_>]) -> BTreeSet<BTreeSet<Word>> {
    let mut seen = HashSet::new();
    let mut parts = BTreeSet::new();
    for w in all_words(6, len) {
        if seen.contains(&w) {
            continue;
        }
        let mut block = BTreeSet::new();
        let mut queue = VecDeque::from([w.clone()]);
        seen.insert(w);
        while let Some(x) = queue.pop_front() {
            for m in maps {
                let y = m(&x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            block.insert(x);
        }
        parts.insert(block);
    }
    parts
}

fn c6_free4_orbit(v: &mut Verdict) {
    let f = family();
    for len in 0..=6 {
        let lib_d = orbit_partition(&f.d, &[D0, D1], len, OrbitMode::Group).unwrap();
        let lib_e =
            orbit_partition(&f.e, &[ALPHA, BETA, GAMMA], len, OrbitMode::Semigroup).unwrap();
        v.check(lib_d == lib_e, || {
            format!("length {len}: library partitions differ")
        });
        let d0 = lib_run(&f.d, D0);
        let d1 = lib_run(&f.d, D1);
        let d0i = lib_run(&f.d_inverse, D0);
        let d1i = lib_run(&f.d_inverse, D1);
        let by_d = bfs_partition(len, &[&d0, &d1, &d0i, &d1i]);
        let ea = |x: &[u8]| e_run(0, x);
        let eb = |x: &[u8]| e_run(1, x);
        let eg = |x: &[u8]| e_run(2, x);
        let by_e = bfs_partition(len, &[&ea, &eb, &eg]);
        v.check(by_d == by_e, || {
            format!("length {len}: oracle partitions differ")
        });
        let lib: BTreeSet<BTreeSet<Word>> = lib_e
            .into_iter()
            .map(|p| p.into_iter().map(|w| w.into_indices()).collect())
            .collect();
        v.check(lib == by_e, || {
            format!("length {len}: library and oracle partitions differ")
        });
        if len == 6 {
            v.note(format!("{} orbits at length 6", by_e.len()));
        }
    }
}

fn c7_ind1(v: &mut Verdict) {
    let b = &family().b;
    let words = words_upto(6, 6);
    for xi in &words {
        let trivial = b.first_level_action(xi).unwrap().is_identity();
        let by_oracle = b_act(xi, &[0]) == [0] && b_act(xi, &[1]) == [1];
        v.check(
            trivial == (oracle_chi(xi) == 1) && trivial == by_oracle,
            || {
                format!(
                    "{}: trivial = {trivial}, chi = {}",
                    show(xi),
                    oracle_chi(xi)
                )
            },
        );
    }
    v.note(format!("{} words", words.len()));
}

fn c8_automata(v: &mut Verdict) {
    let f = family();
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);

    // Inverse round trip.
    for (name, a) in [("A", &f.a), ("B", &f.b), ("D", &f.d), ("E", &f.e)] {
        let inv = a.inverse().unwrap();
        let k = a.num_letters() as u8;
        let words: Vec<Word> = if k == 2 {
            words_upto(2, 12)
        } else {
            let mut ws = words_upto(k, 5);
            ws.extend((0..10_000).map(|_| {
                let len = rng.gen_range(6..=12);
                (0..len).map(|_| rng.gen_range(0..k)).collect()
            }));
            ws
        };
        for w in &words {
            for q in 0..a.num_states() as u8 {
                let back = inv.transduce(q, &a.transduce(q, w).unwrap()).unwrap();
                v.check(&back == w, || {
                    format!("{name}: inverse of state {q} on {w:?}")
                });
            }
        }
    }
    // The library tree action matches the hand-coded one.
    for xi in words_upto(6, 3) {
        for w in words_upto(2, 6) {
            v.check(f.b.act_word(&xi, &w).unwrap() == b_act(&xi, &w), || {
                format!("B action of {}", show(&xi))
            });
        }
    }

    // Both duality identities on random quadruples.
    let b = &f.b;
    for _ in 0..10_000 {
        let word = |rng: &mut StdRng, k: u8, max: usize| -> Word {
            let len = rng.gen_range(0..=max);
            (0..len).map(|_| rng.gen_range(0..k)).collect()
        };
        let (xi, eta) = (word(&mut rng, 6, 6), word(&mut rng, 6, 6));
        let (w, u) = (word(&mut rng, 2, 8), word(&mut rng, 2, 8));
        let wu = [w.as_slice(), &u].concat();
        let section = b.section_word(&xi, &w).unwrap();
        let lhs = b.act_word(&xi, &wu).unwrap();
        let rhs = [b_act(&xi, &w), b_act(&section, &u)].concat();
        v.check(lhs == rhs, || {
            format!("A_xi(wu), xi={} w={w:?} u={u:?}", show(&xi))
        });
        // Sections by definition: D_w(xi) is read off the tree action.
        let aw = b_act(&xi, &w);
        let xe = [xi.as_slice(), &eta].concat();
        let lhs = b.section_word(&xe, &w).unwrap();
        let rhs = [section.clone(), b.section_word(&eta, &aw).unwrap()].concat();
        v.check(lhs == rhs, || {
            format!("D_w(xi eta), xi={} eta={} w={w:?}", show(&xi), show(&eta))
        });
    }

    // Sections of a word acting trivially up to level n act trivially up to n - |w|.
    let n = 8;
    let mut trivial_words = 0;
    for xi in words_upto(6, 4) {
        if !all_words(2, n).iter().all(|w| b_act(&xi, w) == *w) {
            continue;
        }
        trivial_words += 1;
        for w in words_upto(2, 4) {
            let s = b.section_word(&xi, &w).unwrap();
            let ok = all_words(2, n - w.len()).iter().all(|u| b_act(&s, u) == *u);
            v.check(ok, || format!("section of {} at {w:?}", show(&xi)));
            v.check(is_identity(&gw(&s)).is_identity(), || {
                format!("certificate for section of {}", show(&xi))
            });
        }
    }

    // Semigroup and group orbits of B.
    let gen_sets: Vec<Vec<u8>> = vec![
        (0..6).collect(),
        vec![0, 1, 2],
        vec![0],
        vec![1],
        vec![2],
        vec![0, 2],
    ];
    for w in words_upto(2, 6) {
        for gens in &gen_sets {
            let s = b.tree_orbit(gens, &w, OrbitMode::Semigroup).unwrap();
            let g = b.tree_orbit(gens, &w, OrbitMode::Group).unwrap();
            v.check(s == g, || format!("B orbits of {w:?} under {gens:?}"));
        }
    }

    // Reversed-word orbit correspondence for E.
    let r = f.e.reverse().unwrap();
    let gens = [ALPHA, BETA, GAMMA];
    for len in 0..=6 {
        let mut seen = HashSet::new();
        for w in all_words(6, len) {
            if seen.contains(&w) {
                continue;
            }
            let orbit = f.e.tree_orbit(&gens, &w, OrbitMode::Semigroup).unwrap();
            seen.extend(orbit.iter().cloned());
            let rev = |x: &Word| -> Word { x.iter().rev().copied().collect() };
            let expected: BTreeSet<Word> = orbit.iter().map(rev).collect();
            // Every member's reversed orbit under R is the reversed block.
            for m in orbit.iter().take(3) {
                let got = r.tree_orbit(&gens, &rev(m), OrbitMode::Semigroup).unwrap();
                v.check(got == expected, || {
                    format!("R orbit of reversed {}", show(m))
                });
            }
        }
    }
    v.note(format!("{trivial_words} words trivial to level {n}"));
}

fn oracle_w_classes(xi: &[u8]) -> BTreeSet<&'static str> {
    let r: Vec<bool> = xi.iter().filter(|&&s| s % 3 != 2).map(|&s| s < 3).collect();
    let mut out = BTreeSet::new();
    if r.windows(2).any(|p| p[0] == p[1]) {
        return out;
    }
    match (r.first(), r.last()) {
        (None, _) => {
            out.insert("+-");
            out.insert("-+");
        }
        (Some(&f), Some(&l)) => {
            out.insert(match (f, l) {
                (true, true) => "++",
                (true, false) => "+-",
                (false, true) => "-+",
                (false, false) => "--",
            });
        }
        _ => unreachable!(),
    }
    out
}

fn oracle_z(xi: &[u8]) -> BTreeSet<Word> {
    let n = xi.len();
    (0..6u8)
        .map(|s| [&xi[..n - 1], &[s]].concat())
        .filter(|w| oracle_irreducible(w) && oracle_signs(w) == oracle_signs(xi))
        .collect()
}

fn c9_witnesses(v: &mut Verdict) {
    let (mut n5, mut n6) = (0, 0);
    for n in 1..=8 {
        for pat in Pattern::all_of_length(n) {
            let signs: Vec<bool> = pat.0.iter().map(|&s| s == Sign::Plus).collect();
            let pair = ind2_witnesses(&pat).unwrap();
            v.check(verify_ind2(&pat, &pair).is_ok(), || format!("ind2 {pat}"));
            let (x1, x2) = (pair.0.indices(), pair.1.indices());
            v.check(
                oracle_irreducible(x1)
                    && oracle_irreducible(x2)
                    && oracle_signs(x1) == signs
                    && oracle_signs(x2) == signs
                    && oracle_chi(x1) == -oracle_chi(x2),
                || format!("ind2 oracle {pat}"),
            );
            let admissible5 = n >= 2 && signs[n - 2] != signs[n - 1];
            match ind5_witnesses(&pat) {
                Ok(w) => {
                    n5 += 1;
                    v.check(admissible5, || format!("ind5 accepted {pat}"));
                    v.check(w.verify().is_ok(), || {
                        format!("ind5 {pat}: {:?}", w.verify())
                    });
                    let (a, b) = (w.xi_a.indices(), w.xi_b.indices());
                    let g = if signs[0] { 0 } else { 1 };
                    v.check(
                        oracle_z(a) == BTreeSet::from([a.to_vec(), b.to_vec()])
                            && e_run(g, a) == b
                            && e_run(g, b) == a
                            && oracle_signs(a) == signs,
                        || format!("ind5 oracle {pat}"),
                    );
                }
                Err(_) => v.check(!admissible5, || format!("ind5 rejected {pat}")),
            }
            let admissible6 = n >= 2 && signs[0] == signs[1] && signs[n - 2] == signs[n - 1];
            match ind6_witnesses(&pat) {
                Ok(w) => {
                    n6 += 1;
                    v.check(admissible6, || format!("ind6 accepted {pat}"));
                    v.check(w.verify().is_ok(), || {
                        format!("ind6 {pat}: {:?}", w.verify())
                    });
                    let word = |q1: u8, q2: u8| w.word(q1, q2).indices().to_vec();
                    let rev = |x: Word| -> Word { x.into_iter().rev().collect() };
                    for q in 0..3u8 {
                        let row: BTreeSet<Word> = (0..3).map(|r| word(q, r)).collect();
                        let col: BTreeSet<Word> = (0..3).map(|r| rev(word(r, q))).collect();
                        let g = w.generators[q as usize];
                        v.check(
                            oracle_z(&word(q, 2)) == row
                                && oracle_z(&rev(word(2, q))) == col
                                && e_run(g, &word(q, 0)) == word(q, 1)
                                && (0..3).all(|r| oracle_signs(&word(q, r)) == signs),
                            || format!("ind6 oracle {pat} row {q}"),
                        );
                    }
                }
                Err(_) => v.check(!admissible6, || format!("ind6 rejected {pat}")),
            }
        }
    }
    // W-class fixing and appended-letter swaps.
    let words = words_upto(6, 7);
    for xi in &words {
        let classes = oracle_w_classes(xi);
        let lib: BTreeSet<String> = aleshin_core::aleshin::w_class(&gw(xi))
            .iter()
            .map(|c| c.to_string())
            .collect();
        let expected: BTreeSet<String> = classes.iter().map(|c| format!("W{c}")).collect();
        v.check(lib == expected, || {
            format!("w_class({}) = {lib:?}, oracle {expected:?}", show(xi))
        });
        for (class, g, a, b) in [
            ("++", 0u8, 0u8, 1u8),
            ("+-", 0, 3, 4),
            ("-+", 1, 0, 1),
            ("--", 1, 3, 4),
        ] {
            if !classes.contains(class) {
                continue;
            }
            let lib_e = |x: &[u8]| family().e.transduce(g, x).unwrap();
            let xa = [xi.as_slice(), &[a]].concat();
            let xb = [xi.as_slice(), &[b]].concat();
            v.check(lib_e(xi) == *xi, || format!("W{class}: {} moved", show(xi)));
            v.check(lib_e(&xa) == xb && lib_e(&xb) == xa, || {
                format!("W{class}: appended to {}", show(xi))
            });
        }
    }
    v.note(format!(
        "{n5} ind5 and {n6} ind6 patterns, {} words classified",
        words.len()
    ));
}

fn random_automaton(rng: &mut StdRng) -> Automaton {
    let n = rng.gen_range(1..=8);
    let k = rng.gen_range(1..=4);
    let name = |rng: &mut StdRng, prefix: &str, i: usize| -> String {
        let alphabet = ["", "_x", "^-1", "'", "7"];
        format!("{prefix}{i}{}", alphabet[rng.gen_range(0..alphabet.len())])
    };
    let states: Vec<String> = (0..n).map(|i| name(rng, "q", i)).collect();
    let letters: Vec<String> = (0..k).map(|i| name(rng, "x", i)).collect();
    let transition = (0..n * k).map(|_| rng.gen_range(0..n as u8)).collect();
    let output = (0..n * k).map(|_| rng.gen_range(0..k as u8)).collect();
    Automaton::from_tables(states, letters, transition, output).unwrap()
}

fn c10_format(v: &mut Verdict) {
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    let f = family();
    let mut automata: Vec<Automaton> = vec![
        f.a.clone(),
        f.b.clone(),
        f.d.clone(),
        f.d_inverse.clone(),
        f.e.clone(),
    ];
    automata.extend((0..1000).map(|_| random_automaton(&mut rng)));
    for a in &automata {
        let text = moore::serialize(a);
        match moore::parse(&text) {
            Ok(back) => {
                v.check(&back == a, || {
                    format!("round trip changed automaton:\n{text}")
                });
                v.check(moore::serialize(&back) == text, || {
                    format!("serialization not stable:\n{text}")
                });
                // Behaviour, not just structure, survives.
                let w: Word = (0..6).map(|i| (i % a.num_letters()) as u8).collect();
                v.check(
                    back.transduce(0, &w).unwrap() == a.transduce(0, &w).unwrap(),
                    || "transduce differs".into(),
                );
            }
            Err(e) => v.check(false, || format!("parse failed: {e}\n{text}")),
        }
    }
    // The Aleshin file as published.
    let doc = "alphabet 0 1\nstates a b c\ntrans a 0 c 1\ntrans a 1 b 0\ntrans b 0 b 1\ntrans b 1 c 0\ntrans c 0 a 0\ntrans c 1 a 1\n";
    v.check(moore::parse(doc).map(|a| a == f.a).unwrap_or(false), || {
        "Aleshin document".into()
    });
    v.note(format!("{} automata", automata.len()));
}

fn main() -> ExitCode {
    let results = [
        criterion(1, "freeness sweep up to length 6 and 8", c1_freeness),
        criterion(
            2,
            "decision procedure vs brute-force tree action",
            c2_oracle,
        ),
        criterion(
            3,
            "E generators are involutions, E_alpha E_beta = pi_(ab)",
            c3_free2,
        ),
        criterion(4, "D generators via E and permutation lifts", c4_free3),
        criterion(5, "G(E)-orbits are pattern classes", c5_ind3),
        criterion(
            6,
            "orbit partitions under G(D) and G(E) coincide",
            c6_free4_orbit,
        ),
        criterion(7, "first-level action trivial iff chi = +1", c7_ind1),
        criterion(
            8,
            "inverse, duality, sections, orbit modes, reversal",
            c8_automata,
        ),
        criterion(9, "witness constructions and W-class rules", c9_witnesses),
        criterion(10, "Moore format round trip", c10_format),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
