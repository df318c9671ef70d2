//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test -p mlat-cli --test acceptance -- --nocapture`.

use std::io::Write;
use std::process::Command;

use mlat::baer::{
    baer_closure, baer_elements, baer_frame, classify_nucleus, is_b_multiplicative, is_baer,
    is_baer_char2, is_baer_char3, is_baer_char4,
};
use mlat::corpus::{self, fixture, gen_boolean, gen_chain, gen_zn, is_squarefree};
use mlat::elements::{is_domain, is_semisimple, is_z_element, jacobson_radical, radical_checked};
use mlat::enumerate::{enumerate, multiplication_tables, EnumerationConfig};
use mlat::io::{emit_mlat, parse_mlat};
use mlat::lattice::{Elt, FiniteLattice};
use mlat::morphisms::{enumerate_strong_homomorphisms, Contraction, Homomorphism};
use mlat::quantale::validate_quantale;
use mlat::suite::{run_suite, search, CheckId, Guard, SearchOutcome};
use mlat::MultLattice;

fn pass(criterion: &str) {
    println!("ACCEPTANCE {criterion}: PASS");
}

/// Fixtures, chains up to 8 elements, Boolean algebras up to 16 elements,
/// ideal lattices of squarefree moduli up to 210, and every enumerated
/// reduced structure with at most 4 elements.
fn reduced_corpus() -> Vec<(String, MultLattice)> {
    let mut out = Vec::new();
    for name in ["C2", "C3", "B2", "N4", "Z30"] {
        out.push((name.to_string(), fixture(name).unwrap()));
    }
    for k in 1..=7 {
        out.push((format!("chain:{k}"), gen_chain(k)));
    }
    for k in 1..=4 {
        out.push((format!("boolean:{k}"), gen_boolean(k)));
    }
    for n in 2..=210u64 {
        if is_squarefree(n) {
            out.push((format!("zn:{n}"), gen_zn(n)));
        }
    }
    let config = EnumerationConfig { max_n: 4, dedup: true, require_reduced: true };
    for (i, m) in enumerate(&config).into_iter().enumerate() {
        out.push((format!("enumerated:{i}"), m));
    }
    out
}

mod axiom_oracle {
    use super::*;

    /// Brute-force validator written independently of the library's
    /// validation path: plain loops over every axiom instance.
    pub fn oracle_accepts(lat: &FiniteLattice, mul: &[Vec<usize>]) -> bool {
        let n = lat.n();
        let top = lat.top().0;
        let bot = lat.bottom().0;
        for a in 0..n {
            if mul[top][a] != a || mul[bot][a] != bot {
                return false;
            }
            for b in 0..n {
                if mul[a][b] != mul[b][a] {
                    return false;
                }
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return false;
                    }
                    let join = lat.join(Elt(b), Elt(c)).0;
                    if mul[a][join] != lat.join(Elt(mul[a][b]), Elt(mul[a][c])).0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn full_tables(n: usize) -> impl Iterator<Item = Vec<Vec<usize>>> {
        let total = n.pow((n * n) as u32);
        (0..total).map(move |code| {
            let mut c = code;
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = c % n;
                            c /= n;
                            v
                        })
                        .collect()
                })
                .collect()
        })
    }

    /// All commutative candidate tables, one free cell per unordered pair.
    pub fn symmetric_tables(n: usize) -> impl Iterator<Item = Vec<Vec<usize>>> {
        let cells: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let total = n.pow(cells.len() as u32);
        (0..total).map(move |code| {
            let mut table = vec![vec![0usize; n]; n];
            let mut c = code;
            for &(i, j) in &cells {
                let v = c % n;
                c /= n;
                table[i][j] = v;
                table[j][i] = v;
            }
            table
        })
    }

    pub fn agree_on(
        lat: &FiniteLattice,
        tables: impl Iterator<Item = Vec<Vec<usize>>>,
    ) -> (usize, usize) {
        let mut scanned = 0usize;
        let mut accepted = 0usize;
        for rows in tables {
            let by_oracle = oracle_accepts(lat, &rows);
            let by_validation = validate_quantale(lat.clone(), &rows).is_ok();
            assert_eq!(by_oracle, by_validation, "disagreement on table {rows:?}");
            scanned += 1;
            if by_validation {
                accepted += 1;
            }
        }
        (scanned, accepted)
    }
}

/// Criterion 1: the validator agrees with an independent brute-force oracle
/// on every candidate table over every lattice with up to 4 elements (full
/// table space through 3 elements, all commutative tables at 4).
#[test]
fn a1_axiom_oracle_equivalence() {
    use axiom_oracle::*;
    let mut scanned_total = 0usize;
    for n in 1..=3usize {
        for lat in mlat::enumerate::lattices_of_size(n) {
            let (scanned, accepted) = agree_on(&lat, full_tables(n));
            assert_eq!(accepted, multiplication_tables(&lat).len());
            scanned_total += scanned;
        }
    }
    for lat in mlat::enumerate::lattices_of_size(4) {
        let (scanned, accepted) = agree_on(&lat, symmetric_tables(4));
        assert_eq!(accepted, multiplication_tables(&lat).len());
        scanned_total += scanned;
    }
    // frozen counts: the three-chain has 2 tables, the four-chain 6, the
    // diamond only its meet
    let mut tables_per_lattice: Vec<usize> = (1..=4)
        .flat_map(mlat::enumerate::lattices_of_size)
        .map(|lat| multiplication_tables(&lat).len())
        .collect();
    tables_per_lattice.sort();
    assert_eq!(tables_per_lattice, vec![1, 1, 1, 2, 6]);
    assert!(scanned_total > 2_000_000);
    pass("1 axiom-oracle-equivalence");
}

/// Criterion 2: the four Baer characterizations and the closure fixed-point
/// test agree on every element of every corpus structure.
#[test]
fn a2_characterization_agreement() {
    for (name, m) in reduced_corpus() {
        let closure = baer_closure(&m);
        for b in m.elements() {
            let expected = is_baer(&m, b);
            assert_eq!(expected, is_baer_char2(&m, b), "{name} {b}");
            assert_eq!(expected, is_baer_char3(&m, b), "{name} {b}");
            assert_eq!(expected, is_baer_char4(&m, b), "{name} {b}");
            assert_eq!(expected, closure.apply(b) == b, "{name} {b}");
        }
    }
    pass("2 characterization-agreement");
}

/// Criterion 3: the radical computed from compact powers, from primes, and
/// from minimal primes is the same element, for every element of every
/// reduced corpus structure.
#[test]
fn a3_radical_formulas_agree() {
    for (name, m) in reduced_corpus() {
        assert!(m.is_reduced(), "{name}");
        for x in m.elements() {
            radical_checked(&m, x).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
    pass("3 radical-agreement");
}

/// Criterion 4: the theorem suite passes every applicable check on every
/// corpus structure; non-reduced structures skip exactly the reduced-only
/// checks and pass the rest.
#[test]
fn a4_theorem_suite() {
    let mut corpus = corpus::standard_corpus();
    let config = EnumerationConfig { max_n: 4, dedup: true, require_reduced: false };
    for (i, m) in enumerate(&config).into_iter().enumerate() {
        corpus.push((format!("enumerated:{i}"), m));
    }
    let mut reduced_count = 0usize;
    let mut non_reduced_count = 0usize;
    for (name, m) in corpus {
        let report = run_suite(&m, &name);
        assert!(report.passed(), "{name} reported a failure");
        if m.is_reduced() {
            reduced_count += 1;
            for r in &report.results {
                match r.status {
                    mlat::suite::CheckStatus::Pass => {}
                    mlat::suite::CheckStatus::Skipped { reason: "not-b-multiplicative" }
                        if r.id.guard() == Guard::ReducedBMultiplicative => {}
                    ref other => panic!("{name} {}: {:?}", r.id.code(), other),
                }
            }
        } else {
            non_reduced_count += 1;
            for r in &report.results {
                match (r.id.guard(), &r.status) {
                    (Guard::Always, mlat::suite::CheckStatus::Pass) => {}
                    (
                        Guard::Reduced | Guard::ReducedBMultiplicative,
                        mlat::suite::CheckStatus::Skipped { reason: "not-reduced" },
                    ) => {}
                    (guard, status) => {
                        panic!("{name} {}: guard {guard:?} status {status:?}", r.id.code())
                    }
                }
            }
        }
    }
    assert!(reduced_count > 100);
    assert!(non_reduced_count >= 5);
    pass("4 theorem-suite");
}

/// Criterion 5: the individually pinned values.
#[test]
fn a5_pinned_values() {
    let c3 = fixture("C3").unwrap();
    assert_eq!(baer_elements(&c3), vec![c3.bottom(), c3.top()]);
    let closure = baer_closure(&c3);
    assert_eq!(closure.apply(Elt(1)), c3.top());
    assert_eq!(jacobson_radical(&c3), Elt(1));

    let b2 = fixture("B2").unwrap();
    assert_eq!(baer_elements(&b2).len(), 4);
    assert_eq!(jacobson_radical(&b2), b2.bottom());

    let n4 = fixture("N4").unwrap();
    assert_eq!(baer_elements(&n4), vec![n4.bottom(), n4.top()]);
    assert_eq!(radical_checked(&n4, Elt(1)).unwrap(), Elt(2));

    let z30 = fixture("Z30").unwrap();
    assert_eq!(baer_elements(&z30).len(), 8);

    // the z-element/semisimplicity equivalence in both truth configurations
    assert!(!is_semisimple(&c3));
    assert!(!baer_elements(&c3).iter().all(|&b| is_z_element(&c3, b)));
    assert!(is_semisimple(&z30));
    assert!(baer_elements(&z30).iter().all(|&b| is_z_element(&z30, b)));

    // the domain characterization in both truth configurations
    assert!(is_domain(&c3));
    assert!(baer_elements(&c3)
        .iter()
        .all(|&b| b == c3.bottom() || b == c3.top()));
    assert!(!is_domain(&b2));
    assert!(baer_elements(&b2)
        .iter()
        .any(|&b| b != b2.bottom() && b != b2.top()));
    pass("5 pinned-values");
}

/// Criterion 6: the frame construction and nucleus classification succeed on
/// every reduced corpus structure; the closure is additionally quantic
/// wherever double annihilators are idempotent.
#[test]
fn a6_frames_and_nuclei() {
    for (name, m) in reduced_corpus() {
        let frame = baer_frame(&m).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(frame.carrier().len(), frame.mult_lattice().n(), "{name}");
        let report = classify_nucleus(&m, &baer_closure(&m));
        assert!(report.is_nucleus, "{name}");
        assert!(report.is_multiplicative_nucleus, "{name}");
        if is_b_multiplicative(&m) {
            assert!(report.is_quantic_nucleus, "{name}");
            assert!(report.is_localic, "{name}");
        }
    }
    pass("6 frames-and-nuclei");
}

/// Criterion 7: the chain embedding example is strong and contracts; every
/// strong homomorphism between reduced corpus structures with at most 4
/// elements contracts Baer elements.
#[test]
fn a7_strong_homomorphisms_contract() {
    let c2 = fixture("C2").unwrap();
    let c3 = fixture("C3").unwrap();
    let phi = Homomorphism::new(&c2, &c3, vec![Elt(0), Elt(2)]);
    assert!(phi.is_strong());
    assert_eq!(phi.contraction_check().unwrap(), Contraction::Holds);

    let small: Vec<(String, MultLattice)> = reduced_corpus()
        .into_iter()
        .filter(|(_, m)| m.n() <= 4)
        .collect();
    let mut checked = 0usize;
    for (src_name, src) in &small {
        for (dst_name, dst) in &small {
            for h in enumerate_strong_homomorphisms(src, dst) {
                assert_eq!(
                    h.contraction_check().unwrap(),
                    Contraction::Holds,
                    "{src_name} -> {dst_name}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 50, "expected a substantial family, got {checked}");
    pass("7 strong-homomorphisms-contract");
}

/// Criterion 8: the master regression — no enumerated reduced structure with
/// at most 4 elements violates the product-closure equivalence, the basic
/// Baer-set properties, or the closure laws.
#[test]
fn a8_master_regression() {
    let config = EnumerationConfig { max_n: 4, dedup: true, require_reduced: true };
    for predicate in ["product-closure-violated", "baer-basics-violated", "closure-laws-violated"] {
        match search(&config, predicate).unwrap() {
            SearchOutcome::Exhausted { examined } => {
                assert_eq!(examined, 6, "{predicate}");
            }
            SearchOutcome::Found { witness, .. } => {
                panic!("{predicate} found a counterexample, witness {witness:?}");
            }
        }
    }
    pass("8 master-regression");
}

/// Criterion 9: emit/parse is the identity on the fixtures, and two check
/// runs with JSON output are byte-identical.
#[test]
fn a9_round_trip_and_determinism() {
    for name in ["C2", "C3", "B2", "N4", "Z30"] {
        let m = fixture(name).unwrap();
        assert_eq!(parse_mlat(&emit_mlat(&m)).unwrap(), m, "{name}");
    }

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(emit_mlat(&fixture("Z30").unwrap()).as_bytes())
        .unwrap();
    file.flush().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_mlat"))
            .args(["check", file.path().to_str().unwrap(), "--json"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());

    // the in-process report is deterministic as well
    let m = fixture("Z30").unwrap();
    assert_eq!(run_suite(&m, "Z30").to_json(), run_suite(&m, "Z30").to_json());
    assert_eq!(CheckId::ALL.len(), 23);
    pass("9 round-trip-and-determinism");
}
