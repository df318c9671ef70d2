//! The theorem-check suite and counterexample search.
//!
//! Every structural result the library implements is packaged as one of 23
//! checks (T1..T23) runnable against any multiplicative lattice. Checks whose
//! content genuinely needs reducedness are skipped with reason `not-reduced`
//! on non-reduced input instead of producing spurious failures; one check
//! additionally needs idempotent double annihilators and is skipped with
//! `not-b-multiplicative` where that fails. A FAIL always carries an element
//! witness that reproduces the violation through the module operations.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::baer::{
    b_multiplicative_failure, baer_closure, baer_frame, classify_nucleus, d_closure, is_baer,
    is_baer_char2, is_baer_char3, is_baer_char4, ClosureMap, FrameError,
};
use crate::elements::{
    annihilator, annihilator_algebra, is_domain, is_maximal, is_meet_irreducible, is_prime,
    is_semiprime, is_semisimple, is_z_element, is_z_element_char2, is_z_element_char3,
    jacobson_radical, maximal_elements, minimal_primes_above, primes, radical, radical_checked,
    residual, ElementsError,
};
use crate::enumerate::{enumerate, EnumerationConfig};
use crate::lattice::Elt;
use crate::morphisms::{enumerate_strong_homomorphisms, Contraction};
use crate::quantale::MultLattice;

/// Exhaustive subset scans switch to seeded random sampling above this
/// carrier size.
const SUBSET_EXHAUSTIVE_MAX: usize = 16;
const SUBSET_SAMPLES: usize = 512;
const SAMPLE_SEED: u64 = 0x6d6c6174;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown predicate: {0}")]
    UnknownPredicate(String),
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}

/// When a check applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard {
    Always,
    Reduced,
    ReducedBMultiplicative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum CheckId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
    T15,
    T16,
    T17,
    T18,
    T19,
    T20,
    T21,
    T22,
    T23,
}

impl CheckId {
    pub const ALL: [CheckId; 23] = [
        CheckId::T1,
        CheckId::T2,
        CheckId::T3,
        CheckId::T4,
        CheckId::T5,
        CheckId::T6,
        CheckId::T7,
        CheckId::T8,
        CheckId::T9,
        CheckId::T10,
        CheckId::T11,
        CheckId::T12,
        CheckId::T13,
        CheckId::T14,
        CheckId::T15,
        CheckId::T16,
        CheckId::T17,
        CheckId::T18,
        CheckId::T19,
        CheckId::T20,
        CheckId::T21,
        CheckId::T22,
        CheckId::T23,
    ];

    pub fn code(self) -> String {
        format!("T{}", self as usize + 1)
    }

    pub fn parse(s: &str) -> Result<CheckId, SuiteError> {
        CheckId::ALL
            .iter()
            .copied()
            .find(|id| id.code() == s)
            .ok_or_else(|| SuiteError::UnknownCheck(s.to_string()))
    }

    pub fn slug(self) -> &'static str {
        match self {
            CheckId::T1 => "product-laws",
            CheckId::T2 => "maximal-above",
            CheckId::T3 => "radical-agreement",
            CheckId::T4 => "annihilator-laws",
            CheckId::T5 => "annihilator-algebra",
            CheckId::T6 => "z-characterizations",
            CheckId::T7 => "baer-characterizations",
            CheckId::T8 => "baer-bounds-meets",
            CheckId::T9 => "baer-radical-primes",
            CheckId::T10 => "comaximal-meet",
            CheckId::T11 => "product-closure",
            CheckId::T12 => "residual-baer",
            CheckId::T13 => "strong-map-contraction",
            CheckId::T14 => "z-semisimple",
            CheckId::T15 => "domain-trivial-baer",
            CheckId::T16 => "prime-meet-baer",
            CheckId::T17 => "maximal-baer-below-prime",
            CheckId::T18 => "closure-laws",
            CheckId::T19 => "closure-radical-laws",
            CheckId::T20 => "quantic-package",
            CheckId::T21 => "join-closure-equivalence",
            CheckId::T22 => "nucleus-frame",
            CheckId::T23 => "maximal-meet-irreducible",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CheckId::T1 => "products are bounded by meets, kill bottom, and are monotone",
            CheckId::T2 => "every proper element lies below a maximal element",
            CheckId::T3 => "radical via compact powers equals the meet of (minimal) primes above",
            CheckId::T4 => "annihilators are antitone, inflate under doubling, triple to single, and respect products",
            CheckId::T5 => "double annihilators turn products into meets; annihilators form a Boolean algebra",
            CheckId::T6 => "the three z-element characterizations coincide",
            CheckId::T7 => "the four Baer predicates and both closure fixed-point tests coincide; the join-of-double-annihilators map is bounded by the Baer closure",
            CheckId::T8 => "bottom and top are Baer; meets of Baer elements are Baer",
            CheckId::T9 => "Baer elements are radical, their minimal primes are Baer, and each is the meet of the prime Baer elements above it",
            CheckId::T10 => "in a pairwise-comaximal family with Baer meet, every member is Baer",
            CheckId::T11 => "the Baer set is product-closed exactly when double annihilators are idempotent",
            CheckId::T12 => "residuals of Baer elements and all annihilators are Baer; composite residuals collapse",
            CheckId::T13 => "strong self-embeddings pull Baer elements back to Baer elements",
            CheckId::T14 => "every Baer element is a z-element exactly when the structure is semisimple",
            CheckId::T15 => "domain exactly when bottom and top are the only Baer elements",
            CheckId::T16 => "a Baer meet with a prime (or with a maximal not above the partner) forces Baer factors",
            CheckId::T17 => "below a non-Baer prime, the maximal Baer elements are prime",
            CheckId::T18 => "Baer closure: smallest Baer element above, fixed points, bounds, monotone, idempotent, join law",
            CheckId::T19 => "Baer closure collapses radicals and powers and turns products into meets",
            CheckId::T20 => "with idempotent double annihilators: the closure is multiplicative on products, satisfies the four-way identity, classifies quantic and localic, and primality reduces to Baer witnesses",
            CheckId::T21 => "the four join-closure statements for Baer elements are equivalent",
            CheckId::T22 => "the Baer closure is a nucleus and a multiplicative nucleus; the Baer elements form a compact frame onto which the closure is structure-preserving",
            CheckId::T23 => "maximal Baer elements are maximal among Baer elements and prime; meet-irreducibility reduces to Baer witnesses",
        }
    }

    pub fn guard(self) -> Guard {
        match self {
            CheckId::T5
            | CheckId::T9
            | CheckId::T11
            | CheckId::T17
            | CheckId::T19
            | CheckId::T22
            | CheckId::T23 => Guard::Reduced,
            CheckId::T20 => Guard::ReducedBMultiplicative,
            _ => Guard::Always,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail { witness: Vec<usize> },
    Skipped { reason: &'static str },
}

impl CheckStatus {
    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail { .. })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckStatus::Pass)
    }

    pub fn label(&self) -> String {
        match self {
            CheckStatus::Pass => "PASS".to_string(),
            CheckStatus::Fail { .. } => "FAIL".to_string(),
            CheckStatus::Skipped { reason } => format!("SKIPPED({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: CheckId,
    pub status: CheckStatus,
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub lattice: String,
    pub results: Vec<CheckResult>,
    pub wall: Duration,
}

#[derive(Serialize)]
struct JsonCheck {
    id: String,
    status: String,
    witness: Option<Vec<usize>>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        !self.results.iter().any(|r| r.status.is_fail())
    }

    /// Deterministic JSON rendering: an array of `{id, status, witness}`
    /// objects in check order. Wall time is deliberately excluded so that
    /// two runs on the same input are byte-identical.
    pub fn to_json(&self) -> String {
        let arr: Vec<JsonCheck> = self
            .results
            .iter()
            .map(|r| JsonCheck {
                id: r.id.code(),
                status: r.status.label(),
                witness: match &r.status {
                    CheckStatus::Fail { witness } => Some(witness.clone()),
                    _ => None,
                },
            })
            .collect();
        serde_json::to_string(&arr).expect("report serializes")
    }
}

/// Runs the full catalog against one structure.
pub fn run_suite(m: &MultLattice, label: &str) -> TheoremReport {
    let start = Instant::now();
    let results = run_checks(m, &CheckId::ALL);
    TheoremReport {
        lattice: label.to_string(),
        results,
        wall: start.elapsed(),
    }
}

/// Runs a subset of the catalog, in catalog order.
pub fn run_checks(m: &MultLattice, ids: &[CheckId]) -> Vec<CheckResult> {
    let cx = Ctx::new(m);
    let mut ids: Vec<CheckId> = ids.to_vec();
    ids.sort();
    ids.dedup();
    ids.into_iter()
        .map(|id| CheckResult { id, status: run_check(&cx, id) })
        .collect()
}

struct Ctx<'a> {
    m: &'a MultLattice,
    reduced: bool,
    bmult: bool,
    ann: Vec<Elt>,
    dann: Vec<Elt>,
    baer: Vec<bool>,
    baers: Vec<Elt>,
    closure: ClosureMap,
    d: ClosureMap,
    primes: Vec<Elt>,
    maximals: Vec<Elt>,
    radicals: Vec<Elt>,
}

impl<'a> Ctx<'a> {
    fn new(m: &'a MultLattice) -> Self {
        let ann: Vec<Elt> = m.elements().map(|x| annihilator(m, x)).collect();
        let dann: Vec<Elt> = m.elements().map(|x| ann[ann[x.0].0]).collect();
        let baer: Vec<bool> = m.elements().map(|b| is_baer(m, b)).collect();
        let baers: Vec<Elt> = m.elements().filter(|b| baer[b.0]).collect();
        Ctx {
            m,
            reduced: m.is_reduced(),
            bmult: b_multiplicative_failure(m).is_none(),
            ann,
            dann,
            baer,
            baers,
            closure: baer_closure(m),
            d: d_closure(m),
            primes: primes(m),
            maximals: maximal_elements(m),
            radicals: m.elements().map(|x| radical(m, x)).collect(),
        }
    }
}

fn fail(witness: &[usize]) -> CheckStatus {
    CheckStatus::Fail { witness: witness.to_vec() }
}

fn run_check(cx: &Ctx, id: CheckId) -> CheckStatus {
    match id.guard() {
        Guard::Always => {}
        Guard::Reduced => {
            if !cx.reduced {
                return CheckStatus::Skipped { reason: "not-reduced" };
            }
        }
        Guard::ReducedBMultiplicative => {
            if !cx.reduced {
                return CheckStatus::Skipped { reason: "not-reduced" };
            }
            if !cx.bmult {
                return CheckStatus::Skipped { reason: "not-b-multiplicative" };
            }
        }
    }
    match id {
        CheckId::T1 => t1(cx),
        CheckId::T2 => t2(cx),
        CheckId::T3 => t3(cx),
        CheckId::T4 => t4(cx),
        CheckId::T5 => t5(cx),
        CheckId::T6 => t6(cx),
        CheckId::T7 => t7(cx),
        CheckId::T8 => t8(cx),
        CheckId::T9 => t9(cx),
        CheckId::T10 => t10(cx),
        CheckId::T11 => t11(cx),
        CheckId::T12 => t12(cx),
        CheckId::T13 => t13(cx),
        CheckId::T14 => t14(cx),
        CheckId::T15 => t15(cx),
        CheckId::T16 => t16(cx),
        CheckId::T17 => t17(cx),
        CheckId::T18 => t18(cx),
        CheckId::T19 => t19(cx),
        CheckId::T20 => t20(cx),
        CheckId::T21 => t21(cx),
        CheckId::T22 => t22(cx),
        CheckId::T23 => t23(cx),
    }
}

/// Elementary product laws.
fn t1(cx: &Ctx) -> CheckStatus {
    match cx.m.bip_failure() {
        None => CheckStatus::Pass,
        Some((_, witness)) => fail(&witness),
    }
}

/// Every proper element lies below a maximal element.
fn t2(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for a in m.elements() {
        if m.is_proper(a) && !cx.maximals.iter().any(|&x| m.leq(a, x)) {
            return fail(&[a.0]);
        }
    }
    CheckStatus::Pass
}

/// The three radical formulas agree on every element.
fn t3(cx: &Ctx) -> CheckStatus {
    for x in cx.m.elements() {
        if radical_checked(cx.m, x).is_err() {
            return fail(&[x.0]);
        }
    }
    CheckStatus::Pass
}

/// Annihilator laws that hold without reducedness.
fn t4(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for a in m.elements() {
        if !m.leq(a, cx.dann[a.0]) {
            return fail(&[a.0]);
        }
        if cx.ann[cx.dann[a.0].0] != cx.ann[a.0] {
            return fail(&[a.0]);
        }
        for b in m.elements() {
            if m.leq(a, b) && !m.leq(cx.ann[b.0], cx.ann[a.0]) {
                return fail(&[a.0, b.0]);
            }
            for c in m.elements() {
                if m.leq(cx.ann[a.0], cx.ann[b.0])
                    && !m.leq(cx.ann[m.mul(a, c).0], cx.ann[m.mul(b, c).0])
                {
                    return fail(&[a.0, b.0, c.0]);
                }
            }
        }
    }
    CheckStatus::Pass
}

/// Double annihilators turn products into meets, and the annihilators form a
/// Boolean algebra.
fn t5(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for a in m.elements() {
        for b in m.elements() {
            if m.meet(cx.dann[a.0], cx.dann[b.0]) != cx.dann[m.mul(a, b).0] {
                return fail(&[a.0, b.0]);
            }
        }
    }
    match annihilator_algebra(m) {
        Ok(_) => CheckStatus::Pass,
        Err(ElementsError::NotBoolean { witness, .. }) => fail(&witness),
        Err(_) => fail(&[]),
    }
}

/// The three z-element characterizations coincide.
fn t6(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for x in m.elements() {
        let a = is_z_element(m, x);
        if a != is_z_element_char2(m, x) || a != is_z_element_char3(m, x) {
            return fail(&[x.0]);
        }
    }
    CheckStatus::Pass
}

/// All Baer characterizations agree, both closures have the Baer elements as
/// fixed points, and the join-of-double-annihilators map stays below the
/// Baer closure.
fn t7(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for b in m.elements() {
        let expected = cx.baer[b.0];
        if is_baer_char2(m, b) != expected
            || is_baer_char3(m, b) != expected
            || is_baer_char4(m, b) != expected
            || (cx.closure.apply(b) == b) != expected
            || (cx.d.apply(b) == b) != expected
        {
            return fail(&[b.0]);
        }
    }
    for x in m.elements() {
        if !m.leq(cx.d.apply(x), cx.closure.apply(x)) {
            return fail(&[x.0]);
        }
    }
    CheckStatus::Pass
}

/// Bottom and top are Baer; binary and ternary meets of Baer elements are
/// Baer (finite meets follow by iteration).
fn t8(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    if !cx.baer[m.bottom().0] {
        return fail(&[m.bottom().0]);
    }
    if !cx.baer[m.top().0] {
        return fail(&[m.top().0]);
    }
    for &a in &cx.baers {
        for &b in &cx.baers {
            if !cx.baer[m.meet(a, b).0] {
                return fail(&[a.0, b.0]);
            }
            for &c in &cx.baers {
                if !cx.baer[m.meet(m.meet(a, b), c).0] {
                    return fail(&[a.0, b.0, c.0]);
                }
            }
        }
    }
    CheckStatus::Pass
}

/// Baer elements are radical, minimal primes above them are Baer, and every
/// Baer element is the meet of the prime Baer elements above it.
fn t9(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for &b in &cx.baers {
        if cx.radicals[b.0] != b {
            return fail(&[b.0]);
        }
        for p in minimal_primes_above(m, b) {
            if !cx.baer[p.0] {
                return fail(&[b.0, p.0]);
            }
        }
        let meet = m.meet_set(
            cx.primes
                .iter()
                .copied()
                .filter(|&p| cx.baer[p.0] && m.leq(b, p)),
        );
        if meet != b {
            return fail(&[b.0]);
        }
    }
    CheckStatus::Pass
}

/// Pairwise-comaximal families (sizes 2 and 3) with Baer meet have Baer
/// members.
fn t10(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    let top = m.top();
    for a in m.elements() {
        for b in m.elements() {
            if b.0 <= a.0 || m.join(a, b) != top {
                continue;
            }
            if cx.baer[m.meet(a, b).0] && !(cx.baer[a.0] && cx.baer[b.0]) {
                return fail(&[a.0, b.0]);
            }
            for c in m.elements() {
                if c.0 <= b.0 || m.join(a, c) != top || m.join(b, c) != top {
                    continue;
                }
                let meet = m.meet(m.meet(a, b), c);
                if cx.baer[meet.0] && !(cx.baer[a.0] && cx.baer[b.0] && cx.baer[c.0]) {
                    return fail(&[a.0, b.0, c.0]);
                }
            }
        }
    }
    CheckStatus::Pass
}

/// The Baer set is product-closed exactly when every double annihilator is
/// multiplicatively idempotent.
fn t11(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    let mut product_escape = None;
    for &a in &cx.baers {
        for &b in &cx.baers {
            if !cx.baer[m.mul(a, b).0] {
                product_escape = Some([a.0, b.0]);
                break;
            }
        }
    }
    let closed = product_escape.is_none();
    if closed == cx.bmult {
        CheckStatus::Pass
    } else if let Some(w) = product_escape {
        fail(&w)
    } else {
        let c = b_multiplicative_failure(m).expect("not B-multiplicative");
        fail(&[c.0])
    }
}

/// Residuals of Baer elements are Baer, annihilators are Baer, and the
/// composite residual identities hold with Baer values.
fn t12(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for a in m.elements() {
        if !cx.baer[cx.ann[a.0].0] {
            return fail(&[a.0]);
        }
    }
    let res: Vec<Vec<Elt>> = m
        .elements()
        .map(|a| m.elements().map(|b| residual(m, a, b)).collect())
        .collect();
    for &a in &cx.baers {
        for b in m.elements() {
            if !cx.baer[res[a.0][b.0].0] {
                return fail(&[a.0, b.0]);
            }
            for c in m.elements() {
                let r1 = res[res[a.0][b.0].0][c.0];
                let r2 = res[a.0][m.mul(b, c).0];
                let r3 = res[res[a.0][c.0].0][b.0];
                if r1 != r2 || r1 != r3 || !cx.baer[r1.0] {
                    return fail(&[a.0, b.0, c.0]);
                }
                // joined divisors split into meets of residuals
                let lhs = res[a.0][m.join(b, c).0];
                let rhs = m.meet(res[a.0][b.0], res[a.0][c.0]);
                if lhs != rhs || !cx.baer[lhs.0] {
                    return fail(&[a.0, b.0, c.0]);
                }
            }
        }
        // meets of Baer elements residuate componentwise
        for &a2 in &cx.baers {
            for b in m.elements() {
                let lhs = res[m.meet(a, a2).0][b.0];
                let rhs = m.meet(res[a.0][b.0], res[a2.0][b.0]);
                if lhs != rhs || !cx.baer[lhs.0] {
                    return fail(&[a.0, a2.0, b.0]);
                }
            }
        }
    }
    CheckStatus::Pass
}

/// Every strong self-embedding pulls Baer elements back to Baer elements.
fn t13(cx: &Ctx) -> CheckStatus {
    for h in enumerate_strong_homomorphisms(cx.m, cx.m) {
        if let Ok(Contraction::Violated { witness }) = h.contraction_check() {
            return fail(&[witness.0]);
        }
    }
    CheckStatus::Pass
}

/// Every Baer element is a z-element exactly when the structure is
/// semisimple.
fn t14(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    let non_z = cx.baers.iter().copied().find(|&b| !is_z_element(m, b));
    let lhs = non_z.is_none();
    let rhs = is_semisimple(m);
    if lhs == rhs {
        CheckStatus::Pass
    } else if let Some(b) = non_z {
        fail(&[b.0])
    } else {
        fail(&[jacobson_radical(m).0])
    }
}

/// Domain exactly when the Baer set is contained in {bottom, top}.
fn t15(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    let lhs = is_domain(m);
    let nontrivial = cx
        .baers
        .iter()
        .copied()
        .find(|&b| b != m.bottom() && b != m.top());
    let rhs = nontrivial.is_none();
    if lhs == rhs {
        return CheckStatus::Pass;
    }
    if let Some(b) = nontrivial {
        return fail(&[b.0]);
    }
    for x in m.elements() {
        for y in m.elements() {
            if x != m.bottom() && y != m.bottom() && m.mul(x, y) == m.bottom() {
                return fail(&[x.0, y.0]);
            }
        }
    }
    fail(&[])
}

/// Baer meets with primes or with non-dominating maximal elements force
/// Baer factors.
fn t16(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for x in m.elements() {
        for &p in &cx.primes {
            if cx.baer[m.meet(x, p).0] && !cx.baer[x.0] && !cx.baer[p.0] {
                return fail(&[x.0, p.0]);
            }
        }
        for &mx in &cx.maximals {
            if !m.leq(x, mx) && cx.baer[m.meet(x, mx).0] && !(cx.baer[x.0] && cx.baer[mx.0]) {
                return fail(&[x.0, mx.0]);
            }
        }
    }
    for &p in &cx.primes {
        for &q in &cx.primes {
            if m.leq(p, q) || m.leq(q, p) {
                continue;
            }
            if cx.baer[m.meet(p, q).0] && !(cx.baer[p.0] && cx.baer[q.0]) {
                return fail(&[p.0, q.0]);
            }
        }
    }
    CheckStatus::Pass
}

/// For a prime that is not Baer, every maximal element of the Baer elements
/// below it is prime.
fn t17(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for &p in &cx.primes {
        if cx.baer[p.0] {
            continue;
        }
        let below: Vec<Elt> = cx.baers.iter().copied().filter(|&x| m.leq(x, p)).collect();
        for &s in &below {
            let maximal = !below.iter().any(|&t| m.lt(s, t));
            if maximal && !is_prime(m, s) {
                return fail(&[p.0, s.0]);
            }
        }
    }
    CheckStatus::Pass
}

/// Closure laws that hold without reducedness. The unit law is checked in
/// its valid direction — the top closes to the top; the converse fails
/// already on the three-element chain.
fn t18(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    let closure = &cx.closure;
    for a in m.elements() {
        let ca = closure.apply(a);
        if !cx.baer[ca.0] || !m.leq(a, ca) {
            return fail(&[a.0]);
        }
        for &x in &cx.baers {
            if m.leq(a, x) && !m.leq(ca, x) {
                return fail(&[a.0, x.0]);
            }
        }
        if (ca == a) != cx.baer[a.0] {
            return fail(&[a.0]);
        }
        if closure.apply(ca) != ca {
            return fail(&[a.0]);
        }
    }
    if closure.apply(m.top()) != m.top() {
        return fail(&[m.top().0]);
    }
    if closure.apply(m.bottom()) != m.bottom() {
        return fail(&[m.bottom().0]);
    }
    for a in m.elements() {
        for b in m.elements() {
            if m.leq(a, b) && !m.leq(closure.apply(a), closure.apply(b)) {
                return fail(&[a.0, b.0]);
            }
            let join = closure.apply(m.join(a, b));
            if !m.leq(m.join(closure.apply(a), closure.apply(b)), join) {
                return fail(&[a.0, b.0]);
            }
            if closure.apply(m.join(closure.apply(a), closure.apply(b))) != join {
                return fail(&[a.0, b.0]);
            }
        }
    }
    CheckStatus::Pass
}

/// Closure laws that need reducedness: the radical sits below the closure
/// and closes to the same element, powers close alike, and products close
/// like meets.
fn t19(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    let closure = &cx.closure;
    for a in m.elements() {
        if !m.leq(cx.radicals[a.0], closure.apply(a)) {
            return fail(&[a.0]);
        }
        if closure.apply(cx.radicals[a.0]) != closure.apply(a) {
            return fail(&[a.0]);
        }
        let mut power = a;
        for _ in 2..=m.n() {
            power = m.mul(power, a);
            if closure.apply(power) != closure.apply(a) {
                return fail(&[a.0]);
            }
        }
        for b in m.elements() {
            let prod = closure.apply(m.mul(a, b));
            if prod != closure.apply(m.meet(a, b)) || prod != m.meet(closure.apply(a), closure.apply(b)) {
                return fail(&[a.0, b.0]);
            }
        }
    }
    CheckStatus::Pass
}

fn closure_product_failure(cx: &Ctx) -> Option<Vec<usize>> {
    let m = cx.m;
    for a in m.elements() {
        for b in m.elements() {
            if cx.closure.apply(m.mul(a, b)) != m.mul(cx.closure.apply(a), cx.closure.apply(b)) {
                return Some(vec![a.0, b.0]);
            }
        }
    }
    None
}

fn baer_witness_primality_failure(cx: &Ctx) -> Option<Vec<usize>> {
    let m = cx.m;
    let restricted_prime = |p: Elt| {
        cx.baers.iter().all(|&x| {
            cx.baers
                .iter()
                .all(|&y| !m.leq(m.mul(x, y), p) || m.leq(x, p) || m.leq(y, p))
        })
    };
    let restricted_semiprime = |q: Elt| {
        cx.baers
            .iter()
            .all(|&x| !m.leq(m.mul(x, x), q) || m.leq(x, q))
    };
    for &b in &cx.baers {
        if m.is_proper(b) && is_prime(m, b) != restricted_prime(b) {
            return Some(vec![b.0]);
        }
        if is_semiprime(m, b) != restricted_semiprime(b) {
            return Some(vec![b.0]);
        }
    }
    None
}

/// The B-multiplicative package: the closure distributes over products, the
/// four-way identity holds, the closure is a quantic and localic nucleus,
/// and primality/semiprimality of Baer elements reduce to Baer witnesses.
fn t20(cx: &Ctx) -> CheckStatus {
    if let Some(w) = closure_product_failure(cx) {
        return fail(&w);
    }
    if let Some((a, b)) = crate::baer::quantic_identity_failure(cx.m, &cx.closure) {
        return fail(&[a.0, b.0]);
    }
    let report = classify_nucleus(cx.m, &cx.closure);
    if !report.is_quantic_nucleus {
        return fail(&report.quantic_witness.unwrap_or_default());
    }
    if !report.is_localic {
        return fail(&report.localic_witness.unwrap_or_default());
    }
    if let Some(w) = baer_witness_primality_failure(cx) {
        return fail(&w);
    }
    CheckStatus::Pass
}

/// The four join-closure statements are equivalent: binary joins of Baer
/// elements Baer, the closure distributing over binary joins, arbitrary
/// joins of Baer elements Baer, and the closure distributing over arbitrary
/// joins.
fn t21(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    let s1 = {
        let mut w = None;
        'out: for &a in &cx.baers {
            for &b in &cx.baers {
                if !cx.baer[m.join(a, b).0] {
                    w = Some(vec![a.0, b.0]);
                    break 'out;
                }
            }
        }
        w
    };
    let s2 = {
        let mut w = None;
        'out: for a in m.elements() {
            for b in m.elements() {
                if cx.closure.apply(m.join(a, b)) != m.join(cx.closure.apply(a), cx.closure.apply(b)) {
                    w = Some(vec![a.0, b.0]);
                    break 'out;
                }
            }
        }
        w
    };
    let s3 = subset_counterexample(&cx.baers, |subset| {
        let join = m.join_set(subset.iter().copied());
        cx.baer[join.0]
    });
    let all: Vec<Elt> = m.elements().collect();
    let s4 = subset_counterexample(&all, |subset| {
        let join = cx.closure.apply(m.join_set(subset.iter().copied()));
        let piecewise = m.join_set(subset.iter().map(|&s| cx.closure.apply(s)));
        join == piecewise
    });
    let truths = [s1.is_none(), s2.is_none(), s3.is_none(), s4.is_none()];
    if truths.iter().all(|&t| t == truths[0]) {
        CheckStatus::Pass
    } else {
        let w = s1.or(s2).or(s3).or(s4).unwrap_or_default();
        fail(&w)
    }
}

/// First subset of `universe` on which `ok` fails. Exhaustive up to
/// [`SUBSET_EXHAUSTIVE_MAX`] members, seeded random sampling beyond.
fn subset_counterexample(universe: &[Elt], mut ok: impl FnMut(&[Elt]) -> bool) -> Option<Vec<usize>> {
    let k = universe.len();
    if k <= SUBSET_EXHAUSTIVE_MAX {
        for mask in 0u64..(1 << k) {
            let subset: Vec<Elt> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| universe[i])
                .collect();
            if !ok(&subset) {
                return Some(subset.iter().map(|e| e.0).collect());
            }
        }
        None
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SUBSET_SAMPLES {
            let subset: Vec<Elt> = universe
                .iter()
                .copied()
                .filter(|_| rng.random::<bool>())
                .collect();
            if !ok(&subset) {
                return Some(subset.iter().map(|e| e.0).collect());
            }
        }
        None
    }
}

/// The Baer closure is a nucleus and a multiplicative nucleus, and the Baer
/// elements form a compact frame onto which the closure is
/// structure-preserving.
fn t22(cx: &Ctx) -> CheckStatus {
    let report = classify_nucleus(cx.m, &cx.closure);
    if !report.is_nucleus {
        return fail(&report.nucleus_witness.unwrap_or_default());
    }
    if !report.is_multiplicative_nucleus {
        return fail(&report.multiplicative_witness.unwrap_or_default());
    }
    match baer_frame(cx.m) {
        Ok(frame) => {
            // compactness of the frame top is immediate from finiteness; the
            // membership check keeps the statement executable
            if frame.index_of(cx.m.top()).is_none() {
                return fail(&[cx.m.top().0]);
            }
            CheckStatus::Pass
        }
        Err(FrameError::FrameLawViolation { witness, .. }) => fail(&witness),
    }
}

fn maximal_in_baer(cx: &Ctx, b: Elt) -> bool {
    let m = cx.m;
    m.is_proper(b) && !cx.baers.iter().any(|&x| m.lt(b, x) && m.is_proper(x))
}

/// Maximal Baer elements: maximality in the host implies maximality among
/// Baer elements, maximal-among-Baer elements are prime, and
/// meet-irreducibility of Baer elements reduces to Baer witnesses.
///
/// Only the stated direction of the first clause holds in general: the
/// bottom of the three-element chain is maximal among its Baer elements
/// without being maximal, so the converse is exposed as the
/// `baer-maximal-converse-violated` search predicate instead.
fn t23(cx: &Ctx) -> CheckStatus {
    let m = cx.m;
    for &b in &cx.baers {
        if is_maximal(m, b) && !maximal_in_baer(cx, b) {
            return fail(&[b.0]);
        }
        if maximal_in_baer(cx, b) && !is_prime(m, b) {
            return fail(&[b.0]);
        }
        let restricted = cx.baers.iter().all(|&x| {
            cx.baers
                .iter()
                .all(|&y| !m.leq(m.meet(x, y), b) || m.leq(x, b) || m.leq(y, b))
        });
        if is_meet_irreducible(m, b) != restricted {
            return fail(&[b.0]);
        }
    }
    CheckStatus::Pass
}

/// Outcome of a counterexample search.
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found { lattice: MultLattice, witness: Vec<usize> },
    Exhausted { examined: usize },
}

/// Predicate names understood by [`search`], with one-line descriptions.
pub const SEARCH_PREDICATES: &[(&str, &str)] = &[
    ("not-reduced", "a structure with a non-bottom nilpotent element"),
    (
        "non-b-multiplicative",
        "a reduced structure with a non-idempotent double annihilator",
    ),
    (
        "product-closure-violated",
        "a reduced structure where Baer product closure disagrees with idempotent double annihilators",
    ),
    (
        "baer-basics-violated",
        "a reduced structure violating a basic Baer-set property",
    ),
    (
        "closure-laws-violated",
        "a reduced structure violating a Baer-closure law",
    ),
    (
        "baer-join-violated",
        "a reduced structure whose Baer set is not closed under binary joins",
    ),
    (
        "baer-prime-witness-violated",
        "a reduced non-B-multiplicative structure where Baer-witness primality disagrees with primality",
    ),
    (
        "closure-unit-violated",
        "a reduced structure where some proper element closes to the top",
    ),
    (
        "baer-maximal-converse-violated",
        "a reduced structure with a maximal-among-Baer element that is not maximal",
    ),
    (
        "domain-literal-violated",
        "a domain with a Baer element other than the bottom",
    ),
];

/// Scans the enumerated structures in order and returns the first one
/// satisfying the named predicate, or the count of structures examined.
pub fn search(config: &EnumerationConfig, predicate: &str) -> Result<SearchOutcome, SuiteError> {
    if !SEARCH_PREDICATES.iter().any(|(name, _)| *name == predicate) {
        return Err(SuiteError::UnknownPredicate(predicate.to_string()));
    }
    let mut examined = 0usize;
    for m in enumerate(config) {
        examined += 1;
        if let Some(witness) = predicate_witness(predicate, &m) {
            return Ok(SearchOutcome::Found { lattice: m, witness });
        }
    }
    Ok(SearchOutcome::Exhausted { examined })
}

fn fail_witness(status: CheckStatus) -> Option<Vec<usize>> {
    match status {
        CheckStatus::Fail { witness } => Some(witness),
        _ => None,
    }
}

fn predicate_witness(predicate: &str, m: &MultLattice) -> Option<Vec<usize>> {
    match predicate {
        "not-reduced" => m.nilpotent_witness().map(|x| vec![x.0]),
        _ => {
            if !m.is_reduced() {
                return None;
            }
            let cx = Ctx::new(m);
            match predicate {
                "non-b-multiplicative" => b_multiplicative_failure(m).map(|c| vec![c.0]),
                "product-closure-violated" => fail_witness(t11(&cx)),
                "baer-basics-violated" => fail_witness(t8(&cx)).or_else(|| fail_witness(t9(&cx))),
                "closure-laws-violated" => fail_witness(t18(&cx))
                    .or_else(|| fail_witness(t19(&cx)))
                    .or_else(|| if cx.bmult { closure_product_failure(&cx) } else { None }),
                "baer-join-violated" => {
                    for &a in &cx.baers {
                        for &b in &cx.baers {
                            if !cx.baer[m.join(a, b).0] {
                                return Some(vec![a.0, b.0]);
                            }
                        }
                    }
                    None
                }
                "baer-prime-witness-violated" => {
                    if cx.bmult {
                        None
                    } else {
                        baer_witness_primality_failure(&cx)
                    }
                }
                "closure-unit-violated" => m
                    .elements()
                    .find(|&a| m.is_proper(a) && cx.closure.apply(a) == m.top())
                    .map(|a| vec![a.0]),
                "baer-maximal-converse-violated" => cx
                    .baers
                    .iter()
                    .copied()
                    .find(|&b| maximal_in_baer(&cx, b) && !is_maximal(m, b))
                    .map(|b| vec![b.0]),
                "domain-literal-violated" => {
                    if is_domain(m) {
                        cx.baers
                            .iter()
                            .copied()
                            .find(|&b| b != m.bottom())
                            .map(|b| vec![b.0])
                    } else {
                        None
                    }
                }
                _ => unreachable!("predicate validated above"),
            }
        }
    }
}
