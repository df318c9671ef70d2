//! Generators, fixtures, products, and the standard test corpus.

use std::path::PathBuf;

use thiserror::Error;

use crate::lattice::{Elt, FiniteLattice};
use crate::quantale::{validate_quantale, MultLattice};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("lattice is not distributive at triple ({0}, {1}, {2})")]
    NotDistributive(usize, usize, usize),
    #[error("unknown fixture: {0}")]
    UnknownFixture(String),
    #[error("bad lattice specifier: {0}")]
    BadSpecifier(String),
    #[error(transparent)]
    Io(#[from] crate::io::MlatError),
}

fn chain_order(n: usize) -> FiniteLattice {
    let rows = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
    FiniteLattice::build(rows, None).expect("chain order is a lattice")
}

fn meet_rows(l: &FiniteLattice) -> Vec<Vec<usize>> {
    l.elements()
        .map(|a| l.elements().map(|b| l.meet(a, b).0).collect())
        .collect()
}

/// The one-element multiplicative lattice.
pub fn trivial() -> MultLattice {
    let l = FiniteLattice::build(vec![vec![true]], None).unwrap();
    validate_quantale(l, &[vec![0]]).unwrap()
}

/// Chain of `k + 1` elements with meet multiplication. Requires `k >= 1`.
pub fn gen_chain(k: usize) -> MultLattice {
    assert!(k >= 1, "gen_chain needs k >= 1");
    let l = chain_order(k + 1);
    let rows = meet_rows(&l);
    validate_quantale(l, &rows).expect("chain with meet multiplication")
}

/// Powerset of a `k`-set (elements are bitmasks ordered by inclusion) with
/// meet multiplication. Requires `k >= 1`.
pub fn gen_boolean(k: usize) -> MultLattice {
    assert!(k >= 1, "gen_boolean needs k >= 1");
    let n = 1usize << k;
    let rows = (0..n).map(|a| (0..n).map(|b| a & b == a).collect()).collect();
    let l = FiniteLattice::build(rows, None).expect("powerset order is a lattice");
    let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a & b).collect()).collect();
    validate_quantale(l, &mul).expect("powerset with meet multiplication")
}

/// Equips a distributive lattice with its meet as multiplication; errors with
/// a witness triple otherwise (meet multiplication distributes over joins
/// exactly when the lattice does).
pub fn gen_meet_mult(l: FiniteLattice) -> Result<MultLattice, CorpusError> {
    if let Some((a, b, c)) = l.distributivity_failure() {
        return Err(CorpusError::NotDistributive(a.0, b.0, c.0));
    }
    let rows = meet_rows(&l);
    Ok(validate_quantale(l, &rows).expect("distributive lattice with meet multiplication"))
}

/// The lattice of ideals of the integers modulo `n`: elements are the
/// divisors `d` of `n` standing for the ideals `(d)`, ordered by reverse
/// divisibility, with `(d)(e) = (gcd(d*e, n))`. Reduced iff `n` is
/// squarefree. Requires `n >= 2`.
pub fn gen_zn(n: u64) -> MultLattice {
    assert!(n >= 2, "gen_zn needs n >= 2");
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let count = divisors.len();
    let idx = |d: u64| divisors.iter().position(|&x| x == d).unwrap();
    let rows: Vec<Vec<bool>> = divisors
        .iter()
        .map(|&d| divisors.iter().map(|&e| d % e == 0).collect())
        .collect();
    let names = divisors.iter().map(|d| format!("({d})")).collect();
    let l = FiniteLattice::build(rows, Some(names)).expect("divisor order is a lattice");
    let mul: Vec<Vec<usize>> = (0..count)
        .map(|i| {
            (0..count)
                .map(|j| idx(gcd(divisors[i] * divisors[j], n)))
                .collect()
        })
        .collect();
    validate_quantale(l, &mul).expect("ideal multiplication is a quantale")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_squarefree(n: u64) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n % (d * d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Named fixtures: C2, C3, B2, N4, Z30.
///
/// N4 is the chain 0 < a < b < 1 with a*a = a*b = b*b = a; it is the smallest
/// reduced structure whose multiplication is not the meet.
pub fn fixture(name: &str) -> Result<MultLattice, CorpusError> {
    match name {
        "C2" => Ok(gen_chain(1)),
        "C3" => Ok(gen_chain(2)),
        "B2" => Ok(gen_boolean(2)),
        "Z30" => Ok(gen_zn(30)),
        "N4" => {
            let rows = (0..4).map(|a| (0..4).map(|b| a <= b).collect()).collect();
            let names = ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect();
            let l = FiniteLattice::build(rows, Some(names)).unwrap();
            let mul = vec![
                vec![0, 0, 0, 0],
                vec![0, 1, 1, 1],
                vec![0, 1, 1, 2],
                vec![0, 1, 2, 3],
            ];
            Ok(validate_quantale(l, &mul).expect("N4 table satisfies the axioms"))
        }
        other => Err(CorpusError::UnknownFixture(other.to_string())),
    }
}

/// Componentwise product of two multiplicative lattices. The pair `(i, j)`
/// is indexed as `i * n2 + j`; reduced iff both factors are.
pub fn product(m1: &MultLattice, m2: &MultLattice) -> MultLattice {
    let (n1, n2) = (m1.n(), m2.n());
    let n = n1 * n2;
    let split = |e: usize| (Elt(e / n2), Elt(e % n2));
    let rows: Vec<Vec<bool>> = (0..n)
        .map(|x| {
            let (a1, a2) = split(x);
            (0..n)
                .map(|y| {
                    let (b1, b2) = split(y);
                    m1.leq(a1, b1) && m2.leq(a2, b2)
                })
                .collect()
        })
        .collect();
    let names = (0..n)
        .map(|x| {
            let (a1, a2) = split(x);
            format!("({},{})", m1.display_elt(a1), m2.display_elt(a2))
        })
        .collect();
    let l = FiniteLattice::build(rows, Some(names)).expect("componentwise order is a lattice");
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let (a1, a2) = split(x);
            (0..n)
                .map(|y| {
                    let (b1, b2) = split(y);
                    m1.mul(a1, b1).0 * n2 + m2.mul(a2, b2).0
                })
                .collect()
        })
        .collect();
    validate_quantale(l, &mul).expect("componentwise product is a quantale")
}

/// How to obtain a multiplicative lattice: generator, fixture, file, or a
/// product of two specifiers. The compact string forms are `chain:K`,
/// `boolean:K`, `zn:N`, `fixture:NAME`, `file:PATH`, and
/// `product:(SPEC,SPEC)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeSpecifier {
    Chain(usize),
    Boolean(usize),
    Zn(u64),
    Fixture(String),
    File(PathBuf),
    Product(Box<LatticeSpecifier>, Box<LatticeSpecifier>),
}

impl LatticeSpecifier {
    pub fn parse(s: &str) -> Result<Self, CorpusError> {
        let bad = || CorpusError::BadSpecifier(s.to_string());
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "chain" => {
                let k: usize = rest.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                Ok(LatticeSpecifier::Chain(k))
            }
            "boolean" => {
                let k: usize = rest.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                Ok(LatticeSpecifier::Boolean(k))
            }
            "zn" => {
                let n: u64 = rest.parse().map_err(|_| bad())?;
                if n < 2 {
                    return Err(bad());
                }
                Ok(LatticeSpecifier::Zn(n))
            }
            "fixture" => Ok(LatticeSpecifier::Fixture(rest.to_string())),
            "file" => Ok(LatticeSpecifier::File(PathBuf::from(rest))),
            "product" => {
                let inner = rest
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let comma = top_level_comma(inner).ok_or_else(bad)?;
                let left = LatticeSpecifier::parse(&inner[..comma])?;
                let right = LatticeSpecifier::parse(&inner[comma + 1..])?;
                Ok(LatticeSpecifier::Product(Box::new(left), Box::new(right)))
            }
            _ => Err(bad()),
        }
    }

    pub fn build(&self) -> Result<MultLattice, CorpusError> {
        match self {
            LatticeSpecifier::Chain(k) => Ok(gen_chain(*k)),
            LatticeSpecifier::Boolean(k) => Ok(gen_boolean(*k)),
            LatticeSpecifier::Zn(n) => Ok(gen_zn(*n)),
            LatticeSpecifier::Fixture(name) => fixture(name),
            LatticeSpecifier::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CorpusError::BadSpecifier(format!("{}: {e}", path.display()))
                })?;
                Ok(crate::io::parse_mlat(&text)?)
            }
            LatticeSpecifier::Product(a, b) => Ok(product(&a.build()?, &b.build()?)),
        }
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// The standard corpus: the trivial lattice, all fixtures, chains up to 8
/// elements, Boolean algebras up to 16 elements, the ideal lattices of
/// squarefree moduli up to 210, and a few non-reduced ideal lattices.
pub fn standard_corpus() -> Vec<(String, MultLattice)> {
    let mut out = Vec::new();
    out.push(("trivial".to_string(), trivial()));
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
    for n in [4u64, 12, 72] {
        out.push((format!("zn:{n}"), gen_zn(n)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baer;

    fn structurally_equal(a: &MultLattice, b: &MultLattice) -> bool {
        a.n() == b.n()
            && a.lattice().leq_rows() == b.lattice().leq_rows()
            && a.mul_rows() == b.mul_rows()
    }

    #[test]
    fn fixtures_match_generators() {
        assert_eq!(fixture("C3").unwrap(), gen_chain(2));
        assert_eq!(fixture("C2").unwrap(), gen_chain(1));
        assert_eq!(fixture("B2").unwrap(), gen_boolean(2));
        assert!(matches!(
            fixture("M5"),
            Err(CorpusError::UnknownFixture(_))
        ));
    }

    #[test]
    fn meet_mult_rejects_the_diamond() {
        let n = 5;
        let mut rows = vec![vec![false; n]; n];
        for i in 0..n {
            rows[i][i] = true;
            rows[0][i] = true;
            rows[i][4] = true;
        }
        let m3 = FiniteLattice::build(rows, None).unwrap();
        assert!(matches!(
            gen_meet_mult(m3),
            Err(CorpusError::NotDistributive(..))
        ));
    }

    #[test]
    fn zn_basics() {
        let z30 = gen_zn(30);
        assert_eq!(z30.n(), 8);
        assert!(z30.is_reduced());
        assert!(!gen_zn(12).is_reduced());
        // isomorphic to the two-chain, with the bottom at the (n) end
        let z2 = gen_zn(2);
        assert_eq!(
            crate::enumerate::canonical_key(&z2),
            crate::enumerate::canonical_key(&gen_chain(1))
        );
        assert_eq!(z2.lattice().name(z2.bottom()), Some("(2)"));
        assert_eq!(z2.lattice().name(z2.top()), Some("(1)"));
    }

    #[test]
    fn zn_reduced_iff_squarefree_up_to_210() {
        // squarefree by direct factorization, independent of gen_zn
        fn squarefree_by_factoring(mut n: u64) -> bool {
            let mut p = 2;
            while p * p <= n {
                let mut k = 0;
                while n % p == 0 {
                    n /= p;
                    k += 1;
                }
                if k > 1 {
                    return false;
                }
                p += 1;
            }
            true
        }
        for n in 2..=210 {
            assert_eq!(
                gen_zn(n).is_reduced(),
                squarefree_by_factoring(n),
                "modulus {n}"
            );
        }
    }

    #[test]
    fn product_of_two_chains_is_the_square() {
        let p = product(&gen_chain(1), &gen_chain(1));
        assert_eq!(p.n(), 4);
        // isomorphic to B2: same canonical invariants
        let b2 = gen_boolean(2);
        assert_eq!(p.lattice().covers().len(), b2.lattice().covers().len());
        assert!(p.is_reduced());
        let triv = trivial();
        let q = product(&gen_chain(2), &triv);
        assert!(structurally_equal(&q, &gen_chain(2)));
    }

    #[test]
    fn baer_set_of_a_product_is_the_product_of_baer_sets() {
        let c3 = gen_chain(2);
        let p = product(&c3, &c3);
        let got: Vec<usize> = baer::baer_elements(&p).iter().map(|e| e.0).collect();
        // Baer set of the 3-chain is {0, 2}; pairs index as i*3 + j
        assert_eq!(got, vec![0, 2, 6, 8]);
    }

    #[test]
    fn specifier_parsing() {
        assert_eq!(
            LatticeSpecifier::parse("chain:3").unwrap(),
            LatticeSpecifier::Chain(3)
        );
        assert_eq!(
            LatticeSpecifier::parse("product:(chain:1,zn:6)").unwrap(),
            LatticeSpecifier::Product(
                Box::new(LatticeSpecifier::Chain(1)),
                Box::new(LatticeSpecifier::Zn(6))
            )
        );
        assert!(LatticeSpecifier::parse("chain:0").is_err());
        assert!(LatticeSpecifier::parse("zn:1").is_err());
        assert!(LatticeSpecifier::parse("pentagon:5").is_err());
        let m = LatticeSpecifier::parse("product:(chain:1,chain:1)")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(m.n(), 4);
    }

    #[test]
    fn standard_corpus_members_validate() {
        let corpus = standard_corpus();
        assert!(corpus.len() > 100);
        for (name, m) in &corpus {
            assert!(m.n() >= 1, "{name}");
            assert_eq!(m.bip_failure(), None, "{name}");
        }
    }
}
