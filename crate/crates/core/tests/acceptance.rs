//! Acceptance run: one line per criterion. Expected values come from closed
//! formulas and brute-force oracles written here, independently of the
//! library code paths they check.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use abelian_parabolic::arthur::{arthur_pair_check, unitarity_report, Verdict};
use abelian_parabolic::chevalley::{ChevalleyBasis, SignConvention};
use abelian_parabolic::microlocal::{
    characteristic_cycle, compare_with_printed, fourier_involution, microlocal_packets, simple_objects,
    DiscrepancyKind, SimpleObject,
};
use abelian_parabolic::orbits::orbit_table;
use abelian_parabolic::parabolic::ParabolicDatum;
use abelian_parabolic::rootsys::{Coweight, Kind, RootSystem};
use abelian_parabolic::weyl;
use abelian_parabolic::AbelianCase;

type Case = (Kind, usize, usize);
type Criterion = fn(&[(Case, AbelianCase)]) -> Outcome;

/// The grid: A_{n−1} for 3 ≤ n ≤ 8 (all nodes), B_n and C_n for
/// 2 ≤ n ≤ 6, D_n for 4 ≤ n ≤ 8 (nodes 1, n−1, n), E6 (1, 6), E7 (7).
fn grid() -> Vec<Case> {
    let mut g = Vec::new();
    for n in 3..=8 {
        for l in 1..n {
            g.push((Kind::A, n - 1, l));
        }
    }
    for n in 2..=6 {
        g.push((Kind::C, n, n));
    }
    for n in 2..=6 {
        g.push((Kind::B, n, 1));
    }
    for n in 4..=8 {
        g.extend([(Kind::D, n, 1), (Kind::D, n, n - 1), (Kind::D, n, n)]);
    }
    g.extend([(Kind::E, 6, 1), (Kind::E, 6, 6), (Kind::E, 7, 7)]);
    g
}

fn show(c: Case) -> String {
    format!("{}{} node {}", c.0, c.1, c.2)
}

/// Classification-table orbit count.
fn table_orbit_count((kind, rank, node): Case) -> usize {
    match kind {
        Kind::A => {
            let n = rank + 1;
            node.min(n - node) + 1
        }
        Kind::C => rank + 1,
        Kind::B => 3,
        Kind::D if node == 1 => 3,
        Kind::D => rank / 2 + 1,
        Kind::E if rank == 6 => 3,
        Kind::E => 4,
    }
}

/// Orbit dimensions from closed formulas for each family.
fn dims_oracle((kind, rank, node): Case) -> Vec<usize> {
    let r = table_orbit_count((kind, rank, node)) - 1;
    match kind {
        Kind::A => {
            let (l, k) = (node, rank + 1 - node);
            (0..=r).map(|i| i * (l + k - i)).collect()
        }
        Kind::C => (0..=r).map(|i| i * (2 * rank + 1 - i) / 2).collect(),
        Kind::B => vec![0, 2 * rank - 2, 2 * rank - 1],
        Kind::D if node == 1 => vec![0, 2 * rank - 3, 2 * rank - 2],
        // Skew matrices of rank 2i.
        Kind::D => (0..=r).map(|i| 2 * i * rank - i * (2 * i + 1)).collect(),
        Kind::E if rank == 6 => vec![0, 11, 16],
        Kind::E => vec![0, 17, 26, 27],
    }
}

fn w0_rule((kind, rank, node): Case) -> bool {
    match kind {
        Kind::A => 2 * node == rank + 1,
        Kind::B | Kind::C => true,
        Kind::D => node == 1 || rank % 2 == 0,
        Kind::E => rank == 7,
    }
}

/// γ^∨ in fundamental-coweight coordinates from the bilinear form.
fn coroot_oracle(rs: &RootSystem, coeffs: &[i64]) -> Coweight {
    let n = rs.rank();
    let len = rs.form(coeffs, coeffs);
    Coweight(
        (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                2 * rs.form(coeffs, &e) / len
            })
            .collect(),
    )
}

fn is_root(rs: &RootSystem, v: &[i64]) -> bool {
    rs.all_roots().any(|b| rs.root(b) == v)
}

fn z2_orbits((kind, rank, node): Case) -> Vec<usize> {
    match kind {
        Kind::C => (1..=rank).collect(),
        Kind::B => vec![2],
        Kind::D if node == 1 => vec![2],
        Kind::E if rank == 7 => vec![3],
        _ => vec![],
    }
}

fn label(i: usize, prime: bool) -> String {
    if prime {
        format!("({i})'")
    } else {
        format!("({i})")
    }
}

/// Characteristic cycles from the case formulas, with the E7 cuspidal
/// cycle carrying every orbit.
fn cc_oracle(c: Case) -> BTreeMap<String, BTreeSet<usize>> {
    let (kind, rank, node) = c;
    let r = table_orbit_count(c) - 1;
    let mut out = BTreeMap::new();
    let z2 = z2_orbits(c);
    for i in 0..=r {
        for prime in [false, true] {
            if prime && !z2.contains(&i) {
                continue;
            }
            let set: BTreeSet<usize> = match (kind, node, prime) {
                (Kind::C, _, _) => {
                    let single = (rank % 2 == i % 2) != prime;
                    if single || i == 0 {
                        [i].into()
                    } else {
                        [i, i - 1].into()
                    }
                }
                (Kind::B, _, false) if i == 1 => [0, 1].into(),
                (Kind::B, _, true) => [1, 2].into(),
                (Kind::D, 1, true) => [0, 1, 2].into(),
                (Kind::E, _, true) => [0, 1, 2, 3].into(),
                _ => [i].into(),
            };
            out.insert(label(i, prime), set);
        }
    }
    out
}

/// Packet lists as published.
fn printed_packets(c: Case) -> Vec<BTreeSet<String>> {
    let (kind, rank, node) = c;
    let r = table_orbit_count(c) - 1;
    (0..=r)
        .map(|i| {
            let v: Vec<String> = match (kind, node) {
                (Kind::C, _) if i == rank => vec![label(i, false), label(i, true)],
                (Kind::C, _) if i == 0 => vec![label(0, false), label(1, false)],
                (Kind::C, _) => vec![label(i, false), label(i, true), label(i + 1, false)],
                (Kind::B, _) => match i {
                    0 => vec![label(0, false), label(1, false)],
                    1 => vec![label(1, false), label(2, true)],
                    _ => vec![label(2, false), label(2, true)],
                },
                (Kind::D, 1) => vec![label(i, false), label(2, true)],
                (Kind::E, _) if rank == 7 => vec![label(i, false), label(2, true)],
                _ => vec![label(i, false)],
            };
            v.into_iter().collect()
        })
        .collect()
}

/// Weighted Dynkin diagram from a Jordan type.
fn wdd_from_partition(kind: Kind, rank: usize, parts: &[usize]) -> Vec<i64> {
    let mut h: Vec<i64> = Vec::new();
    for &p in parts {
        for k in 0..p {
            h.push(p as i64 - 1 - 2 * k as i64);
        }
    }
    h.sort_unstable_by(|a, b| b.cmp(a));
    let diffs = |m: usize| (0..m).map(|k| h[k] - h[k + 1]).collect::<Vec<_>>();
    match kind {
        Kind::A => diffs(rank),
        Kind::B => {
            let mut w = diffs(rank - 1);
            w.push(h[rank - 1]);
            w
        }
        Kind::C => {
            let mut w = diffs(rank - 1);
            w.push(2 * h[rank - 1]);
            w
        }
        Kind::D => {
            let mut w = diffs(rank - 1);
            w.push(h[rank - 2] + h[rank - 1]);
            w
        }
        Kind::E => unreachable!(),
    }
}

fn partition_oracle((kind, rank, node): Case, i: usize) -> Vec<usize> {
    let mut p = Vec::new();
    let mut put = |part: usize, mult: usize| p.extend(std::iter::repeat_n(part, mult));
    match kind {
        Kind::A => {
            put(2, i);
            put(1, rank + 1 - 2 * i);
        }
        Kind::C => {
            put(2, i);
            put(1, 2 * (rank - i));
        }
        Kind::B | Kind::D if node == 1 => {
            let m = if kind == Kind::B { 2 * rank - 1 } else { 2 * rank - 2 };
            match i {
                0 => put(1, m + 2),
                1 => {
                    put(2, 2);
                    put(1, m - 2);
                }
                _ => {
                    put(3, 1);
                    put(1, m - 1);
                }
            }
        }
        _ => {
            put(2, 2 * i);
            put(1, 2 * rank - 4 * i);
        }
    }
    p
}

fn e_labels(rank: usize) -> Vec<(&'static str, Vec<i64>)> {
    if rank == 6 {
        vec![
            ("1", vec![0; 6]),
            ("A1", vec![0, 1, 0, 0, 0, 0]),
            ("2A1", vec![1, 0, 0, 0, 0, 1]),
        ]
    } else {
        vec![
            ("1", vec![0; 7]),
            ("A1", vec![1, 0, 0, 0, 0, 0, 0]),
            ("2A1", vec![0, 0, 0, 0, 0, 1, 0]),
            ("(3A1)''", vec![0, 0, 0, 0, 0, 0, 2]),
        ]
    }
}

struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn criterion_1(cases: &[(Case, AbelianCase)]) -> Outcome {
    let mut o = Outcome::new();
    for (c, ac) in cases {
        let expected = table_orbit_count(*c);
        o.check(ac.r() + 1 == expected, || format!("{}: {} orbits, expected {expected}", show(*c), ac.r() + 1));
    }
    o
}

fn criterion_2(cases: &[(Case, AbelianCase)]) -> Outcome {
    let mut o = Outcome::new();
    for (c, ac) in cases {
        match orbit_table(ac) {
            Ok(t) => {
                let dims: Vec<usize> = t.iter().map(|x| x.dim).collect();
                let expected = dims_oracle(*c);
                o.check(dims == expected, || format!("{}: dims {dims:?}, expected {expected:?}", show(*c)));
                for x in &t {
                    o.check(x.dim_tangent == x.double_coset.dim, || {
                        format!("{} orbit {}: tangent {} vs ℓ(w)+ℓ(w′) {}", show(*c), x.index, x.dim_tangent, x.double_coset.dim)
                    });
                    if let Some(f) = &x.fixture {
                        if f.minimal {
                            o.check(f.dim_formula == x.dim, || format!("{} orbit {}: published word", show(*c), x.index));
                        }
                    }
                }
            }
            Err(e) => o.check(false, || format!("{}: {e}", show(*c))),
        }
    }
    o
}

fn criterion_3(cases: &[(Case, AbelianCase)]) -> Outcome {
    let mut o = Outcome::new();
    for (c, ac) in cases {
        let rs = ac.root_system();
        let lam = ac.datum.lambda();
        let computed = weyl::w0_negates(rs, lam);
        // −λ lies in W·λ exactly when the antidominant element w₀λ is −λ.
        let orbit = weyl::weyl_orbit(rs, lam, 1_000_000).expect("orbit fits");
        let brute = orbit.contains(&lam.neg());
        let rule = w0_rule(*c);
        o.check(computed == rule && brute == rule, || {
            format!("{}: computed {computed}, brute force {brute}, table {rule}", show(*c))
        });
        let dims = dims_oracle(*c);
        let r = dims.len() - 1;
        let regular = ac.datum.dim_v() - dims[r - 1] == 1;
        o.check(regular == rule, || format!("{}: regularity {regular}", show(*c)));
    }
    o
}

fn criterion_4(cases: &[(Case, AbelianCase)]) -> Outcome {
    let mut o = Outcome::new();
    for (c, ac) in cases {
        let rs = ac.root_system();
        let two_lambda = ac.datum.lambda().scaled(2);
        let w0 = w0_rule(*c);
        for i in 0..=ac.r() {
            let cert = match arthur_pair_check(ac, i) {
                Ok(x) => x,
                Err(e) => {
                    o.check(false, || format!("{} orbit {i}: {e}", show(*c)));
                    continue;
                }
            };
            let h = ac
                .string
                .roots
                .iter()
                .fold(Coweight::zero(rs.rank()), |acc, &g| acc.add(&coroot_oracle(rs, rs.root(g))));
            o.check(cert.h_sum == h, || format!("{} orbit {i}: h-sum differs from oracle", show(*c)));
            o.check((h == two_lambda) == w0, || format!("{} orbit {i}: h-sum vs 2λ", show(*c)));
            o.check(cert.is_valid() == w0, || format!("{} orbit {i}: validity {}", show(*c), cert.is_valid()));
            if w0 {
                o.check(cert.cross_brackets_zero, || format!("{} orbit {i}: brackets", show(*c)));
            } else {
                o.check(!cert.h_sum_equals_2lambda, || format!("{} orbit {i}: h-sum equals 2λ", show(*c)));
            }
        }
        let verdict = unitarity_report(ac).map(|u| u.verdict);
        let expected = if w0 { Verdict::AllUnitary } else { Verdict::NoHermitianRepresentations };
        o.check(verdict.as_ref().ok() == Some(&expected), || format!("{}: verdict {verdict:?}", show(*c)));
    }
    o
}

fn criterion_5(cases: &[(Case, AbelianCase)]) -> Outcome {
    let mut o = Outcome::new();
    let mut systems: Vec<(Kind, usize)> = (1..=8).map(|n| (Kind::A, n)).collect();
    systems.extend((2..=8).map(|n| (Kind::B, n)));
    systems.extend((2..=8).map(|n| (Kind::C, n)));
    systems.extend((4..=8).map(|n| (Kind::D, n)));
    systems.extend([(Kind::E, 6), (Kind::E, 7)]);
    for (kind, rank) in systems {
        let rs = RootSystem::build(kind, rank).unwrap();
        for conv in [SignConvention::HeightLex, SignConvention::HeightRevLex] {
            let failures = ChevalleyBasis::build_with(&rs, conv).map(|b| b.jacobi_failures());
            o.check(failures == Ok(0), || format!("{} {conv}: {failures:?}", rs.name()));
        }
    }
    for (c, ac) in cases {
        let rs = ac.root_system();
        let g = &ac.string.roots;
        for (k, &a) in g.iter().enumerate() {
            for &b in &g[k + 1..] {
                let (x, y) = (rs.root(a), rs.root(b));
                let plus: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                let minus: Vec<i64> = x.iter().zip(y).map(|(p, q)| p - q).collect();
                let ok = !is_root(rs, &plus) && !is_root(rs, &minus) && minus.iter().any(|&m| m != 0);
                o.check(ok, || format!("{}: {x:?}, {y:?} not strongly orthogonal", show(*c)));
            }
        }
        for i in 0..=ac.r() {
            for part in [&g[..i], &g[i..]] {
                let ok = ac.basis.adapted_triple(part).map(|t| t.satisfies_relations(&ac.basis));
                o.check(ok == Ok(true), || format!("{} split {i}: sl2 relations", show(*c)));
            }
        }
    }
    o
}

fn criterion_6(cases: &[(Case, AbelianCase)]) -> Outcome {
    let mut o = Outcome::new();
    for (c, ac) in cases {
        let oracle = cc_oracle(*c);
        let objs = simple_objects(ac);
        let labels: BTreeSet<String> = objs.iter().map(SimpleObject::label).collect();
        o.check(labels == oracle.keys().cloned().collect(), || format!("{}: simple objects {labels:?}", show(*c)));
        for s in &objs {
            let cc = characteristic_cycle(ac, *s).unwrap();
            let got: BTreeSet<usize> = cc.orbits().into_iter().collect();
            o.check(oracle.get(&s.label()) == Some(&got), || format!("{} {s}: CC {got:?}", show(*c)));
            o.check(cc.is_multiplicity_free(), || format!("{} {s}: multiplicities", show(*c)));
        }
        // Packets from the oracle cycles, compared with the printed lists.
        let r = ac.r();
        let derived: Vec<BTreeSet<String>> = (0..=r)
            .map(|k| oracle.iter().filter(|(_, v)| v.contains(&k)).map(|(l, _)| l.clone()).collect())
            .collect();
        let lib: Vec<BTreeSet<String>> = microlocal_packets(ac)
            .unwrap()
            .iter()
            .map(|p| p.iter().map(SimpleObject::label).collect())
            .collect();
        o.check(lib == derived, || format!("{}: packets {lib:?}", show(*c)));
        let printed = printed_packets(*c);
        let strip = |s: &BTreeSet<String>| s.iter().map(|x| x.trim_end_matches('\'').to_string()).collect::<BTreeSet<_>>();
        let mut expected_kinds: Vec<DiscrepancyKind> = Vec::new();
        for (d, p) in derived.iter().zip(&printed) {
            if d == p {
                continue;
            }
            let prime_only = c.0 == Kind::C && strip(d) == strip(p);
            let e7 = c.0 == Kind::E && c.1 == 7;
            o.check(prime_only || e7, || format!("{}: packet {d:?} vs printed {p:?}", show(*c)));
            expected_kinds.push(if prime_only {
                DiscrepancyKind::PrimeAmbiguity
            } else {
                DiscrepancyKind::PrintedPacketTypo
            });
        }
        if c.0 == Kind::E && c.1 == 7 {
            expected_kinds.insert(0, DiscrepancyKind::PrintedCycleTypo);
        }
        let reported: Vec<DiscrepancyKind> = compare_with_printed(ac).unwrap().iter().map(|d| d.kind).collect();
        o.check(reported == expected_kinds, || format!("{}: discrepancies {reported:?}", show(*c)));
    }
    o
}

fn criterion_7(cases: &[(Case, AbelianCase)]) -> Outcome {
    let mut o = Outcome::new();
    for (c, ac) in cases {
        let oracle = cc_oracle(*c);
        let r = ac.r();
        let dual = |s: &BTreeSet<usize>| s.iter().map(|k| r - k).collect::<BTreeSet<_>>();
        // Every object whose cycle is the dual one; uniqueness means one each.
        let mut forced: BTreeMap<String, String> = BTreeMap::new();
        for (l, cc) in &oracle {
            let targets: Vec<&String> = oracle.iter().filter(|(_, v)| **v == dual(cc)).map(|(k, _)| k).collect();
            o.check(targets.len() == 1, || format!("{} {l}: {} candidates", show(*c), targets.len()));
            if let Some(t) = targets.first() {
                forced.insert(l.clone(), (*t).clone());
            }
        }
        o.check(forced.iter().all(|(a, b)| forced.get(b) == Some(a)), || format!("{}: not an involution", show(*c)));
        o.check(forced.get("(0)") == Some(&label(r, false)), || format!("{}: (0) ↦ {:?}", show(*c), forced.get("(0)")));
        match fourier_involution(ac) {
            Ok(f) => {
                o.check(f.solutions == 1 && f.is_involution(), || format!("{}: library search", show(*c)));
                let lib: BTreeMap<String, String> = f.images.iter().map(|(a, b)| (a.label(), b.label())).collect();
                o.check(lib == forced, || format!("{}: library map {lib:?}", show(*c)));
            }
            Err(e) => o.check(false, || format!("{}: {e}", show(*c))),
        }
        let cuspidal = match c {
            (Kind::D, _, 1) | (Kind::E, 7, _) => Some(label(r, true)),
            _ => None,
        };
        if let Some(cusp) = cuspidal {
            o.check(forced.get(&cusp) == Some(&cusp), || format!("{}: {cusp} not fixed", show(*c)));
        }
    }
    o
}

fn criterion_8(cases: &[(Case, AbelianCase)]) -> Outcome {
    let mut o = Outcome::new();
    for (c, ac) in cases {
        let t = match orbit_table(ac) {
            Ok(t) => t,
            Err(e) => {
                o.check(false, || format!("{}: {e}", show(*c)));
                continue;
            }
        };
        let distinct: BTreeSet<&Vec<i64>> = t.iter().map(|x| &x.g_orbit.weighted_dynkin).collect();
        o.check(distinct.len() == t.len(), || format!("{}: repeated weighted Dynkin diagrams", show(*c)));
        for x in &t {
            let got = &x.g_orbit.weighted_dynkin;
            if c.0 == Kind::E {
                let (name, wdd) = &e_labels(c.1)[x.index];
                o.check(x.g_orbit.label.as_deref() == Some(*name), || format!("{} orbit {}: label", show(*c), x.index));
                o.check(got == wdd, || format!("{} orbit {}: {got:?} for {name}", show(*c), x.index));
            } else {
                let parts = partition_oracle(*c, x.index);
                let mut expected = wdd_from_partition(c.0, c.1, &parts);
                let mut ok = *got == expected;
                if !ok && c.0 == Kind::D {
                    // The two very even classes differ in the last two nodes.
                    let n = expected.len();
                    expected.swap(n - 2, n - 1);
                    ok = *got == expected && parts.iter().all(|p| p % 2 == 0);
                }
                o.check(ok, || format!("{} orbit {}: {got:?} vs partition {parts:?}", show(*c), x.index));
                let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                for p in &parts {
                    *counts.entry(*p).or_default() += 1;
                }
                let text: Vec<String> = counts
                    .iter()
                    .rev()
                    .map(|(p, m)| if *m == 1 { p.to_string() } else { format!("{p}^{m}") })
                    .collect();
                let expected_label = format!("({})", text.join(","));
                o.check(x.g_orbit.label.as_deref() == Some(expected_label.as_str()), || {
                    format!("{} orbit {}: label {:?}", show(*c), x.index, x.g_orbit.label)
                });
            }
        }
    }
    o
}

fn criterion_9(cases: &[(Case, AbelianCase)]) -> Outcome {
    let mut o = Outcome::new();
    for (c, ac) in cases {
        let rs = ac.root_system();
        let datum = ParabolicDatum::from_node(rs, c.2).unwrap();
        let j = datum.levi_indices();
        let cosets = weyl::double_coset_count(rs, &j, datum.lambda());
        let prefixes = ac.string.roots.len() + 1;
        o.check(cosets.as_ref().ok() == Some(&prefixes), || format!("{}: {cosets:?} vs {prefixes}", show(*c)));
        o.check(prefixes == table_orbit_count(*c), || format!("{}: table", show(*c)));
    }
    o
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cases: Vec<(Case, AbelianCase)> = grid()
        .into_iter()
        .map(|c| (c, AbelianCase::new(c.0, c.1, c.2).expect("grid case builds")))
        .collect();
    let criteria: [(&str, Criterion); 9] = [
        ("classification orbit counts", criterion_1),
        ("orbit dimensions", criterion_2),
        ("w0-negation table and regularity", criterion_3),
        ("Arthur certificates and verdicts", criterion_4),
        ("Jacobi, sl2 triples, strong orthogonality", criterion_5),
        ("characteristic cycles and packets", criterion_6),
        ("Fourier involution", criterion_7),
        ("G-orbit labels", criterion_8),
        ("counting identity", criterion_9),
    ];
    let mut all_ok = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run(&cases);
        let ok = out.failures.is_empty();
        all_ok &= ok;
        println!(
            "criterion {}: {} - {name} ({} checks, {:.2}s)",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            out.checks,
            t.elapsed().as_secs_f64()
        );
        for f in out.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    println!("acceptance: {} in {:.2}s", if all_ok { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
