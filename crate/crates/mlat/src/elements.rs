//! Element-level constructions: residuals, annihilators and the Boolean
//! algebra they form, radicals, primes, maximal elements, semiprimes,
//! meet-irreducibles, zero divisors, the Jacobson radical, and z-elements.
//!
//! Every operation here is total: the defining formulas make sense on any
//! multiplicative lattice. Theorems that need reducedness are enforced by the
//! check suite, not by these functions.

use thiserror::Error;

use crate::lattice::Elt;
use crate::quantale::MultLattice;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ElementsError {
    #[error("annihilators do not form a Boolean algebra: {law} fails at {witness:?}")]
    NotBoolean { law: &'static str, witness: Vec<usize> },
    #[error(
        "radical formulas disagree at element {element}: \
         via compact powers {via_powers}, via primes {via_primes}, via minimal primes {via_minimal_primes}"
    )]
    RadicalMismatch {
        element: usize,
        via_powers: usize,
        via_primes: usize,
        via_minimal_primes: usize,
    },
}

/// The residual `(a : b)`: the largest `x` with `x * b <= a`, computed as the
/// join of all such `x` (itself a witness, by join distributivity).
pub fn residual(m: &MultLattice, a: Elt, b: Elt) -> Elt {
    m.join_set(m.elements().filter(|&x| m.leq(m.mul(x, b), a)))
}

/// The annihilator `a⊥`: the largest element whose product with `a` is
/// bottom; equals `residual(bottom, a)`.
pub fn annihilator(m: &MultLattice, a: Elt) -> Elt {
    residual(m, m.bottom(), a)
}

pub fn double_annihilator(m: &MultLattice, a: Elt) -> Elt {
    annihilator(m, annihilator(m, a))
}

/// The set of annihilators with its complement map. Under the inherited
/// order this is a complemented distributive lattice with `a ∧' b = a ∧ b`,
/// `a ∨' b = (a⊥ ∧ b⊥)⊥`, and complement `a ↦ a⊥`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorAlgebra {
    carrier: Vec<Elt>,
    complement: Vec<Elt>,
}

impl AnnihilatorAlgebra {
    pub fn carrier(&self) -> &[Elt] {
        &self.carrier
    }

    pub fn contains(&self, e: Elt) -> bool {
        self.carrier.binary_search(&e).is_ok()
    }

    pub fn complement_of(&self, e: Elt) -> Option<Elt> {
        self.carrier
            .binary_search(&e)
            .ok()
            .map(|i| self.complement[i])
    }
}

/// Collects all annihilators and verifies the Boolean-algebra laws on them.
/// A violation (possible when the input is not reduced) is reported with the
/// failing law and witness.
pub fn annihilator_algebra(m: &MultLattice) -> Result<AnnihilatorAlgebra, ElementsError> {
    let mut carrier: Vec<Elt> = m.elements().map(|x| annihilator(m, x)).collect();
    carrier.sort();
    carrier.dedup();

    let join_prime = |a: Elt, b: Elt| {
        annihilator(m, m.meet(annihilator(m, a), annihilator(m, b)))
    };
    for &a in &carrier {
        let c = annihilator(m, a);
        if annihilator(m, c) != a {
            return Err(ElementsError::NotBoolean {
                law: "involution",
                witness: vec![a.0],
            });
        }
        if m.meet(a, c) != m.bottom() {
            return Err(ElementsError::NotBoolean {
                law: "complement meet",
                witness: vec![a.0],
            });
        }
        if join_prime(a, c) != m.top() {
            return Err(ElementsError::NotBoolean {
                law: "complement join",
                witness: vec![a.0],
            });
        }
    }
    for &a in &carrier {
        for &b in &carrier {
            if carrier.binary_search(&m.meet(a, b)).is_err() {
                return Err(ElementsError::NotBoolean {
                    law: "meet closure",
                    witness: vec![a.0, b.0],
                });
            }
            if carrier.binary_search(&join_prime(a, b)).is_err() {
                return Err(ElementsError::NotBoolean {
                    law: "join closure",
                    witness: vec![a.0, b.0],
                });
            }
            // De Morgan in both directions
            let lhs = annihilator(m, m.meet(a, b));
            let rhs = join_prime(annihilator(m, a), annihilator(m, b));
            if lhs != rhs {
                return Err(ElementsError::NotBoolean {
                    law: "De Morgan (meet)",
                    witness: vec![a.0, b.0],
                });
            }
            let lhs = annihilator(m, join_prime(a, b));
            let rhs = m.meet(annihilator(m, a), annihilator(m, b));
            if lhs != rhs {
                return Err(ElementsError::NotBoolean {
                    law: "De Morgan (join)",
                    witness: vec![a.0, b.0],
                });
            }
        }
    }
    for &a in &carrier {
        for &b in &carrier {
            for &c in &carrier {
                let lhs = m.meet(a, join_prime(b, c));
                let rhs = join_prime(m.meet(a, b), m.meet(a, c));
                if lhs != rhs {
                    return Err(ElementsError::NotBoolean {
                        law: "distributivity",
                        witness: vec![a.0, b.0, c.0],
                    });
                }
            }
        }
    }
    let complement = carrier.iter().map(|&a| annihilator(m, a)).collect();
    Ok(AnnihilatorAlgebra { carrier, complement })
}

/// The radical of `x`: the join of all compact `y` with `y^k <= x` for some
/// `k`. Power chains in an n-element lattice stabilize within n steps, so
/// exponents up to n decide membership.
pub fn radical(m: &MultLattice, x: Elt) -> Elt {
    let gens = m.compact_elements().into_iter().filter(|&y| {
        let mut p = y;
        for _ in 1..=m.n() {
            if m.leq(p, x) {
                return true;
            }
            let next = m.mul(p, y);
            if next == p {
                break;
            }
            p = next;
        }
        m.leq(p, x)
    });
    m.join_set(gens)
}

/// The meet of all primes above `x` (top when there are none).
pub fn radical_via_primes(m: &MultLattice, x: Elt) -> Elt {
    m.meet_set(primes(m).into_iter().filter(|&p| m.leq(x, p)))
}

/// The meet of the minimal primes above `x`.
pub fn radical_via_minimal_primes(m: &MultLattice, x: Elt) -> Elt {
    m.meet_set(minimal_primes_above(m, x))
}

/// Computes the radical all three ways and requires them to agree; a
/// mismatch signals an implementation bug or an out-of-contract input.
pub fn radical_checked(m: &MultLattice, x: Elt) -> Result<Elt, ElementsError> {
    let a = radical(m, x);
    let b = radical_via_primes(m, x);
    let c = radical_via_minimal_primes(m, x);
    if a == b && b == c {
        Ok(a)
    } else {
        Err(ElementsError::RadicalMismatch {
            element: x.0,
            via_powers: a.0,
            via_primes: b.0,
            via_minimal_primes: c.0,
        })
    }
}

pub fn is_prime(m: &MultLattice, p: Elt) -> bool {
    m.is_proper(p)
        && m.elements().all(|x| {
            m.elements()
                .all(|y| !m.leq(m.mul(x, y), p) || m.leq(x, p) || m.leq(y, p))
        })
}

pub fn primes(m: &MultLattice) -> Vec<Elt> {
    m.elements().filter(|&p| is_prime(m, p)).collect()
}

pub fn is_minimal_prime(m: &MultLattice, p: Elt) -> bool {
    is_prime(m, p) && !primes(m).iter().any(|&q| m.lt(q, p))
}

/// Primes above `x` that are minimal among the primes above `x`.
pub fn minimal_primes_above(m: &MultLattice, x: Elt) -> Vec<Elt> {
    let above: Vec<Elt> = primes(m).into_iter().filter(|&p| m.leq(x, p)).collect();
    above
        .iter()
        .copied()
        .filter(|&p| !above.iter().any(|&q| m.lt(q, p)))
        .collect()
}

pub fn is_maximal(m: &MultLattice, x: Elt) -> bool {
    m.is_proper(x) && m.elements().all(|y| !(m.leq(x, y) && m.is_proper(y)) || y == x)
}

pub fn maximal_elements(m: &MultLattice) -> Vec<Elt> {
    m.elements().filter(|&x| is_maximal(m, x)).collect()
}

pub fn is_semiprime(m: &MultLattice, q: Elt) -> bool {
    m.elements().all(|x| !m.leq(m.mul(x, x), q) || m.leq(x, q))
}

pub fn is_meet_irreducible(m: &MultLattice, s: Elt) -> bool {
    m.elements().all(|x| {
        m.elements()
            .all(|y| !m.leq(m.meet(x, y), s) || m.leq(x, s) || m.leq(y, s))
    })
}

pub fn is_radical_element(m: &MultLattice, x: Elt) -> bool {
    radical(m, x) == x
}

pub fn is_zero_divisor(m: &MultLattice, x: Elt) -> bool {
    let bot = m.bottom();
    m.elements().any(|y| y != bot && m.mul(x, y) == bot)
}

pub fn zero_divisors(m: &MultLattice) -> Vec<Elt> {
    m.elements().filter(|&x| is_zero_divisor(m, x)).collect()
}

/// A domain has no non-bottom zero divisor.
pub fn is_domain(m: &MultLattice) -> bool {
    let bot = m.bottom();
    !m.elements().any(|x| x != bot && is_zero_divisor(m, x))
}

/// The meet of all maximal elements (top when there are none, which happens
/// only in the one-element lattice).
pub fn jacobson_radical(m: &MultLattice) -> Elt {
    m.meet_set(maximal_elements(m))
}

pub fn is_semisimple(m: &MultLattice) -> bool {
    jacobson_radical(m) == m.bottom()
}

/// The maximal elements above `a`.
pub fn maximal_set_above(m: &MultLattice, a: Elt) -> Vec<Elt> {
    maximal_elements(m).into_iter().filter(|&x| m.leq(a, x)).collect()
}

/// The meet of the maximal elements above `a`; top when there are none
/// (in particular for `a = top`).
pub fn m_lower(m: &MultLattice, a: Elt) -> Elt {
    m.meet_set(maximal_set_above(m, a))
}

/// z-element, first characterization: whenever two elements lie below the
/// same maximal elements and one of them is below `x`, so is the other.
pub fn is_z_element(m: &MultLattice, x: Elt) -> bool {
    let sets: Vec<Vec<Elt>> = m.elements().map(|a| maximal_set_above(m, a)).collect();
    m.elements().all(|a| {
        m.elements().all(|b| {
            !(sets[a.0] == sets[b.0] && m.leq(b, x)) || m.leq(a, x)
        })
    })
}

/// Second characterization, by containment of maximal sets.
pub fn is_z_element_char2(m: &MultLattice, x: Elt) -> bool {
    let sets: Vec<Vec<Elt>> = m.elements().map(|a| maximal_set_above(m, a)).collect();
    let contains = |big: &Vec<Elt>, small: &Vec<Elt>| small.iter().all(|e| big.contains(e));
    m.elements().all(|a| {
        m.elements().all(|b| {
            !(contains(&sets[a.0], &sets[b.0]) && m.leq(b, x)) || m.leq(a, x)
        })
    })
}

/// Third characterization, by comparison of the meets of maximal sets.
pub fn is_z_element_char3(m: &MultLattice, x: Elt) -> bool {
    let lows: Vec<Elt> = m.elements().map(|a| m_lower(m, a)).collect();
    m.elements().all(|a| {
        m.elements().all(|b| {
            !(m.leq(lows[b.0], lows[a.0]) && m.leq(a, x)) || m.leq(b, x)
        })
    })
}

/// Per-element classification flags, each computed independently from its
/// literal definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClassification {
    pub element: Elt,
    pub is_prime: bool,
    pub is_minimal_prime: bool,
    pub is_maximal: bool,
    pub is_semiprime: bool,
    pub is_meet_irreducible: bool,
    pub is_radical: bool,
    pub is_zero_divisor: bool,
    pub is_z_element: bool,
}

pub fn classify(m: &MultLattice, x: Elt) -> ElementClassification {
    ElementClassification {
        element: x,
        is_prime: is_prime(m, x),
        is_minimal_prime: is_minimal_prime(m, x),
        is_maximal: is_maximal(m, x),
        is_semiprime: is_semiprime(m, x),
        is_meet_irreducible: is_meet_irreducible(m, x),
        is_radical: is_radical_element(m, x),
        is_zero_divisor: is_zero_divisor(m, x),
        is_z_element: is_z_element(m, x),
    }
}
