//! Baer elements, Baer closures, the frame they generate, and nucleus
//! classification.
//!
//! An element `b` is Baer when every compact `c <= b` has its double
//! annihilator below `b`. Four equivalent predicates are implemented
//! independently and kept in agreement by the check suite.

use thiserror::Error;

use crate::elements::{annihilator, double_annihilator};
use crate::lattice::{Elt, FiniteLattice};
use crate::quantale::{validate_quantale, MultLattice};

/// Baer predicate, by the definition: every compact below `b` has its double
/// annihilator below `b`.
pub fn is_baer(m: &MultLattice, b: Elt) -> bool {
    m.compact_elements()
        .into_iter()
        .all(|c| !m.leq(c, b) || m.leq(double_annihilator(m, c), b))
}

/// Baer predicate via equal annihilators: compacts `u <= b` drag along every
/// compact `v` with `u⊥ = v⊥`.
pub fn is_baer_char2(m: &MultLattice, b: Elt) -> bool {
    let compacts = m.compact_elements();
    compacts.iter().all(|&u| {
        compacts.iter().all(|&v| {
            !(annihilator(m, u) == annihilator(m, v) && m.leq(u, b)) || m.leq(v, b)
        })
    })
}

/// Baer predicate via comparable annihilators: `u⊥ <= v⊥` and `u <= b`
/// force `v <= b`.
pub fn is_baer_char3(m: &MultLattice, b: Elt) -> bool {
    let compacts = m.compact_elements();
    compacts.iter().all(|&u| {
        compacts.iter().all(|&v| {
            !(m.leq(annihilator(m, u), annihilator(m, v)) && m.leq(u, b)) || m.leq(v, b)
        })
    })
}

/// Baer predicate via the join formula: `b` is the join of the double
/// annihilators of the compacts below it.
pub fn is_baer_char4(m: &MultLattice, b: Elt) -> bool {
    d_value(m, b) == b
}

pub fn baer_elements(m: &MultLattice) -> Vec<Elt> {
    m.elements().filter(|&b| is_baer(m, b)).collect()
}

/// True when the double annihilator of every compact element is
/// multiplicatively idempotent; exactly the condition under which Baer
/// elements are closed under products.
pub fn is_b_multiplicative(m: &MultLattice) -> bool {
    b_multiplicative_failure(m).is_none()
}

pub fn b_multiplicative_failure(m: &MultLattice) -> Option<Elt> {
    m.compact_elements().into_iter().find(|&c| {
        let d = double_annihilator(m, c);
        m.mul(d, d) != d
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureKind {
    BaerClosure,
    DClosure,
    User,
}

/// A self-map on lattice elements presented as a table. The Baer closure is
/// always inflationary, monotone, and idempotent; user-supplied maps are
/// classified as-is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureMap {
    pub kind: ClosureKind,
    table: Vec<usize>,
}

impl ClosureMap {
    pub fn user(table: Vec<usize>) -> Self {
        ClosureMap { kind: ClosureKind::User, table }
    }

    pub fn identity(n: usize) -> Self {
        ClosureMap { kind: ClosureKind::User, table: (0..n).collect() }
    }

    pub fn apply(&self, e: Elt) -> Elt {
        Elt(self.table[e.0])
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Sorted image of the map.
    pub fn image(&self) -> Vec<Elt> {
        let mut img: Vec<Elt> = self.table.iter().map(|&v| Elt(v)).collect();
        img.sort();
        img.dedup();
        img
    }

    pub fn inflationary_failure(&self, m: &MultLattice) -> Option<Elt> {
        m.elements().find(|&x| !m.leq(x, self.apply(x)))
    }

    pub fn idempotent_failure(&self, m: &MultLattice) -> Option<Elt> {
        m.elements().find(|&x| self.apply(self.apply(x)) != self.apply(x))
    }

    pub fn monotone_failure(&self, m: &MultLattice) -> Option<(Elt, Elt)> {
        for x in m.elements() {
            for y in m.elements() {
                if m.leq(x, y) && !m.leq(self.apply(x), self.apply(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// The Baer closure: sends `a` to the meet of all Baer elements above it,
/// which is the smallest Baer element above `a`.
pub fn baer_closure(m: &MultLattice) -> ClosureMap {
    let baers = baer_elements(m);
    let table = m
        .elements()
        .map(|a| m.meet_set(baers.iter().copied().filter(|&x| m.leq(a, x))).0)
        .collect();
    ClosureMap { kind: ClosureKind::BaerClosure, table }
}

fn d_value(m: &MultLattice, x: Elt) -> Elt {
    m.join_set(
        m.compact_elements()
            .into_iter()
            .filter(|&c| m.leq(c, x))
            .map(|c| double_annihilator(m, c)),
    )
}

/// The join-of-double-annihilators map. Its fixed points are exactly the
/// Baer elements and it is bounded above by the Baer closure, but its values
/// need not themselves be Baer, since joins of Baer elements need not be.
pub fn d_closure(m: &MultLattice) -> ClosureMap {
    let table = m.elements().map(|x| d_value(m, x).0).collect();
    ClosureMap { kind: ClosureKind::DClosure, table }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FrameError {
    #[error("frame law violation ({law}) at {witness:?}")]
    FrameLawViolation { law: &'static str, witness: Vec<usize> },
}

/// The Baer elements as a lattice of their own: meets are inherited, the
/// join of a family is the closure of its join in the host, and the product
/// of two members is the closure of their host product (which coincides with
/// their meet). Carries the materialized structure plus the embedding.
#[derive(Debug, Clone)]
pub struct BaerFrame {
    carrier: Vec<Elt>,
    frame: MultLattice,
}

impl BaerFrame {
    pub fn carrier(&self) -> &[Elt] {
        &self.carrier
    }

    pub fn mult_lattice(&self) -> &MultLattice {
        &self.frame
    }

    /// Position of a host element within the carrier, when it is Baer.
    pub fn index_of(&self, host: Elt) -> Option<usize> {
        self.carrier.binary_search(&host).ok()
    }
}

/// Builds the lattice of Baer elements and verifies: the carrier contains
/// the bounds and is closed under host meets, the frame distributive law,
/// that the product coincides with the meet on the carrier, and that the
/// closure map preserves order, joins, meets, and products into it. Fails
/// with a witness on out-of-contract (non-reduced) input.
pub fn baer_frame(m: &MultLattice) -> Result<BaerFrame, FrameError> {
    let carrier = baer_elements(m);
    let closure = baer_closure(m);
    let pos = |e: Elt| carrier.binary_search(&e);

    if pos(m.bottom()).is_err() || pos(m.top()).is_err() {
        return Err(FrameError::FrameLawViolation {
            law: "bounds are Baer",
            witness: vec![],
        });
    }
    for &a in &carrier {
        for &b in &carrier {
            if pos(m.meet(a, b)).is_err() {
                return Err(FrameError::FrameLawViolation {
                    law: "meet closure",
                    witness: vec![a.0, b.0],
                });
            }
        }
    }

    let join_prime = |a: Elt, b: Elt| closure.apply(m.join(a, b));
    let rows: Vec<Vec<bool>> = carrier
        .iter()
        .map(|&a| carrier.iter().map(|&b| m.leq(a, b)).collect())
        .collect();
    let names = carrier.iter().map(|&a| m.display_elt(a)).collect();
    let lat = FiniteLattice::build(rows, Some(names)).map_err(|_| {
        FrameError::FrameLawViolation { law: "carrier order", witness: vec![] }
    })?;
    // the carrier join must be realized by the closure of the host join
    for (i, &a) in carrier.iter().enumerate() {
        for (j, &b) in carrier.iter().enumerate() {
            let via_cz = join_prime(a, b);
            let in_carrier = carrier[lat.join(Elt(i), Elt(j)).0];
            if via_cz != in_carrier {
                return Err(FrameError::FrameLawViolation {
                    law: "join agrees with closure of host join",
                    witness: vec![a.0, b.0],
                });
            }
        }
    }
    let mul_rows: Vec<Vec<usize>> = carrier
        .iter()
        .map(|&a| {
            carrier
                .iter()
                .map(|&b| pos(closure.apply(m.mul(a, b))).unwrap_or(usize::MAX))
                .collect()
        })
        .collect();
    if mul_rows.iter().flatten().any(|&v| v == usize::MAX) {
        return Err(FrameError::FrameLawViolation {
            law: "product lands in the carrier",
            witness: vec![],
        });
    }
    let frame = validate_quantale(lat, &mul_rows).map_err(|_| {
        FrameError::FrameLawViolation { law: "carrier multiplication axioms", witness: vec![] }
    })?;

    for &x in &carrier {
        for &a in &carrier {
            for &b in &carrier {
                let lhs = m.meet(x, join_prime(a, b));
                let rhs = join_prime(m.meet(x, a), m.meet(x, b));
                if lhs != rhs {
                    return Err(FrameError::FrameLawViolation {
                        law: "frame distributivity",
                        witness: vec![x.0, a.0, b.0],
                    });
                }
            }
        }
    }
    for &a in &carrier {
        for &b in &carrier {
            if closure.apply(m.mul(a, b)) != m.meet(a, b) {
                return Err(FrameError::FrameLawViolation {
                    law: "product coincides with meet",
                    witness: vec![a.0, b.0],
                });
            }
        }
    }
    // the closure is a structure-preserving map onto the carrier
    for a in m.elements() {
        for b in m.elements() {
            if m.leq(a, b) && !m.leq(closure.apply(a), closure.apply(b)) {
                return Err(FrameError::FrameLawViolation {
                    law: "closure preserves order",
                    witness: vec![a.0, b.0],
                });
            }
            if closure.apply(m.join(a, b)) != join_prime(closure.apply(a), closure.apply(b)) {
                return Err(FrameError::FrameLawViolation {
                    law: "closure preserves joins",
                    witness: vec![a.0, b.0],
                });
            }
            if closure.apply(m.meet(a, b)) != m.meet(closure.apply(a), closure.apply(b)) {
                return Err(FrameError::FrameLawViolation {
                    law: "closure preserves meets",
                    witness: vec![a.0, b.0],
                });
            }
            if closure.apply(m.mul(a, b)) != closure.apply(m.mul(closure.apply(a), closure.apply(b))) {
                return Err(FrameError::FrameLawViolation {
                    law: "closure preserves products",
                    witness: vec![a.0, b.0],
                });
            }
        }
    }

    Ok(BaerFrame { carrier, frame })
}

/// Classification of a self-map against the nucleus variants. All four
/// include inflationarity and idempotence; they differ in which operation
/// the map must respect. Each failing flag carries a witness.
///
/// The unit law inside the multiplicative variant is checked as "the top
/// maps to the top". The stronger converse (only the top maps to the top)
/// fails already for the Baer closure on the three-element chain, whose
/// coatom closes to the top; see the `closure-unit-violated` search predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NucleusReport {
    pub is_nucleus: bool,
    pub is_multiplicative_nucleus: bool,
    pub is_quantic_nucleus: bool,
    pub is_localic: bool,
    pub nucleus_witness: Option<Vec<usize>>,
    pub multiplicative_witness: Option<Vec<usize>>,
    pub quantic_witness: Option<Vec<usize>>,
    pub localic_witness: Option<Vec<usize>>,
}

pub fn classify_nucleus(m: &MultLattice, map: &ClosureMap) -> NucleusReport {
    let base_witness = map
        .inflationary_failure(m)
        .map(|x| vec![x.0])
        .or_else(|| map.idempotent_failure(m).map(|x| vec![x.0]));

    let mut meet_witness = None;
    let mut meet_product_witness = None;
    let mut product_witness = None;
    for a in m.elements() {
        for b in m.elements() {
            let fa = map.apply(a);
            let fb = map.apply(b);
            if meet_witness.is_none() && map.apply(m.meet(a, b)) != m.meet(fa, fb) {
                meet_witness = Some(vec![a.0, b.0]);
            }
            if meet_product_witness.is_none() && map.apply(m.mul(a, b)) != map.apply(m.meet(a, b))
            {
                meet_product_witness = Some(vec![a.0, b.0]);
            }
            if product_witness.is_none() && map.apply(m.mul(a, b)) != m.mul(fa, fb) {
                product_witness = Some(vec![a.0, b.0]);
            }
        }
    }
    let unit_witness = (map.apply(m.top()) != m.top()).then(|| vec![m.top().0]);

    let mut localic_witness = None;
    let image = map.image();
    for &a in &image {
        for &b in &image {
            if map.apply(m.mul(a, b)) != m.meet(a, b) {
                localic_witness = Some(vec![a.0, b.0]);
                break;
            }
        }
    }

    let nucleus_witness = base_witness.clone().or_else(|| meet_witness.clone());
    let multiplicative_witness = nucleus_witness
        .clone()
        .or_else(|| meet_product_witness.clone())
        .or_else(|| unit_witness.clone());
    let quantic_witness = base_witness.or_else(|| product_witness.clone());
    let localic_full_witness = quantic_witness.clone().or_else(|| localic_witness.clone());

    NucleusReport {
        is_nucleus: nucleus_witness.is_none(),
        is_multiplicative_nucleus: multiplicative_witness.is_none(),
        is_quantic_nucleus: quantic_witness.is_none(),
        is_localic: localic_full_witness.is_none(),
        nucleus_witness,
        multiplicative_witness,
        quantic_witness,
        localic_witness: localic_full_witness,
    }
}

/// First pair violating the four-way identity
/// `closure(ab) = closure(a closure(b)) = closure(closure(a) b) = closure(closure(a) closure(b))`, if any.
pub fn quantic_identity_failure(m: &MultLattice, closure: &ClosureMap) -> Option<(Elt, Elt)> {
    for a in m.elements() {
        for b in m.elements() {
            let base = closure.apply(m.mul(a, b));
            let v1 = closure.apply(m.mul(a, closure.apply(b)));
            let v2 = closure.apply(m.mul(closure.apply(a), b));
            let v3 = closure.apply(m.mul(closure.apply(a), closure.apply(b)));
            if base != v1 || base != v2 || base != v3 {
                return Some((a, b));
            }
        }
    }
    None
}

/// True when the four-way product identity of the Baer closure holds for all
/// pairs. Intended for reduced, B-multiplicative lattices.
pub fn quantic_identities_check(m: &MultLattice) -> bool {
    quantic_identity_failure(m, &baer_closure(m)).is_none()
}
