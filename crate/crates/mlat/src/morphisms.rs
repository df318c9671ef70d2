//! Maps between multiplicative lattices: homomorphism and strong
//! homomorphism predicates, the Baer-contraction property, and exhaustive
//! enumeration of (strong) homomorphisms between small lattices.

use thiserror::Error;

use crate::baer::is_baer;
use crate::elements::annihilator;
use crate::lattice::Elt;
use crate::quantale::MultLattice;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("precondition violated: the map is not a strong homomorphism")]
    PreconditionViolated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Contraction {
    Holds,
    Violated { witness: Elt },
}

/// An element map between two multiplicative lattices.
#[derive(Debug, Clone)]
pub struct Homomorphism<'a> {
    pub source: &'a MultLattice,
    pub target: &'a MultLattice,
    pub table: Vec<Elt>,
}

impl<'a> Homomorphism<'a> {
    pub fn new(source: &'a MultLattice, target: &'a MultLattice, table: Vec<Elt>) -> Self {
        assert_eq!(table.len(), source.n(), "map must be total on the source");
        assert!(table.iter().all(|e| e.0 < target.n()), "map must land in the target");
        Homomorphism { source, target, table }
    }

    pub fn identity(m: &'a MultLattice) -> Self {
        Homomorphism::new(m, m, m.elements().collect())
    }

    pub fn apply(&self, e: Elt) -> Elt {
        self.table[e.0]
    }

    pub fn preserves_order(&self) -> bool {
        self.source.elements().all(|a| {
            self.source
                .elements()
                .all(|b| !self.source.leq(a, b) || self.target.leq(self.apply(a), self.apply(b)))
        })
    }

    pub fn preserves_binary_joins(&self) -> bool {
        self.source.elements().all(|a| {
            self.source.elements().all(|b| {
                self.apply(self.source.join(a, b))
                    == self.target.join(self.apply(a), self.apply(b))
            })
        })
    }

    pub fn preserves_binary_meets(&self) -> bool {
        self.source.elements().all(|a| {
            self.source.elements().all(|b| {
                self.apply(self.source.meet(a, b))
                    == self.target.meet(self.apply(a), self.apply(b))
            })
        })
    }

    pub fn preserves_multiplication(&self) -> bool {
        self.source.elements().all(|a| {
            self.source.elements().all(|b| {
                self.apply(self.source.mul(a, b))
                    == self.target.mul(self.apply(a), self.apply(b))
            })
        })
    }

    /// Order, binary joins, binary meets, and multiplication — each checked
    /// independently (order preservation follows from join preservation, but
    /// the two are never conflated here).
    pub fn is_homomorphism(&self) -> bool {
        self.preserves_order()
            && self.preserves_binary_joins()
            && self.preserves_binary_meets()
            && self.preserves_multiplication()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.n()];
        self.table.iter().all(|e| !std::mem::replace(&mut seen[e.0], true))
    }

    /// In the finite setting every element is compact, so this is always
    /// true; it is still evaluated literally.
    pub fn maps_compacts_to_compacts(&self) -> bool {
        let compacts = self.target.compact_elements();
        self.source
            .compact_elements()
            .into_iter()
            .all(|c| compacts.contains(&self.apply(c)))
    }

    pub fn commutes_with_annihilators(&self) -> bool {
        self.source.compact_elements().into_iter().all(|c| {
            self.apply(annihilator(self.source, c))
                == annihilator(self.target, self.apply(c))
        })
    }

    /// Strong: an injective homomorphism mapping compacts to compacts and
    /// commuting with annihilation of compacts.
    pub fn is_strong(&self) -> bool {
        self.is_homomorphism()
            && self.is_injective()
            && self.maps_compacts_to_compacts()
            && self.commutes_with_annihilators()
    }

    /// Whether bottom and top are preserved; informational only, since the
    /// homomorphism predicate does not require it.
    pub fn preserves_bounds(&self) -> (bool, bool) {
        (
            self.apply(self.source.bottom()) == self.target.bottom(),
            self.apply(self.source.top()) == self.target.top(),
        )
    }

    /// For a strong homomorphism, every source element whose image is Baer
    /// must itself be Baer; returns the first offender otherwise.
    pub fn contraction_check(&self) -> Result<Contraction, MorphismError> {
        if !self.is_strong() {
            return Err(MorphismError::PreconditionViolated);
        }
        for x in self.source.elements() {
            if is_baer(self.target, self.apply(x)) && !is_baer(self.source, x) {
                return Ok(Contraction::Violated { witness: x });
            }
        }
        Ok(Contraction::Holds)
    }
}

/// All homomorphisms from `source` to `target`, found by backtracking over a
/// linear extension of the source. Join-reducible elements have forced
/// images, so branching happens only at join-irreducibles; partial maps are
/// pruned on order, meet, join, and product consistency.
pub fn enumerate_homomorphisms<'a>(
    source: &'a MultLattice,
    target: &'a MultLattice,
) -> Vec<Homomorphism<'a>> {
    enumerate_maps(source, target, false)
        .into_iter()
        .map(|table| Homomorphism::new(source, target, table))
        .filter(|h| h.is_homomorphism())
        .collect()
}

/// All strong homomorphisms from `source` to `target`; adds injectivity
/// pruning to the search and the strong predicate as the final filter.
pub fn enumerate_strong_homomorphisms<'a>(
    source: &'a MultLattice,
    target: &'a MultLattice,
) -> Vec<Homomorphism<'a>> {
    enumerate_maps(source, target, true)
        .into_iter()
        .map(|table| Homomorphism::new(source, target, table))
        .filter(|h| h.is_strong())
        .collect()
}

fn enumerate_maps(source: &MultLattice, target: &MultLattice, injective: bool) -> Vec<Vec<Elt>> {
    let n = source.n();
    // linear extension: sort by size of the down-set, then by index
    let mut order: Vec<Elt> = source.elements().collect();
    let downsize: Vec<usize> = source
        .elements()
        .map(|a| source.elements().filter(|&b| source.leq(b, a)).count())
        .collect();
    order.sort_by_key(|e| (downsize[e.0], e.0));

    // for each position, a pair of strictly smaller processed elements whose
    // join it is, if one exists
    let mut forced: Vec<Option<(Elt, Elt)>> = vec![None; n];
    for (pos, &e) in order.iter().enumerate() {
        'outer: for i in 0..pos {
            for j in 0..pos {
                let (a, b) = (order[i], order[j]);
                if source.join(a, b) == e {
                    forced[pos] = Some((a, b));
                    break 'outer;
                }
            }
        }
    }

    let mut results = Vec::new();
    let mut image = vec![Elt(0); n];
    let mut used = vec![false; target.n()];
    search(
        source, target, injective, &order, &forced, 0, &mut image, &mut used, &mut results,
    );
    results.sort();
    results
}

#[allow(clippy::too_many_arguments)]
fn search(
    source: &MultLattice,
    target: &MultLattice,
    injective: bool,
    order: &[Elt],
    forced: &[Option<(Elt, Elt)>],
    pos: usize,
    image: &mut Vec<Elt>,
    used: &mut Vec<bool>,
    results: &mut Vec<Vec<Elt>>,
) {
    if pos == order.len() {
        results.push(image.clone());
        return;
    }
    let e = order[pos];
    let candidates: Vec<Elt> = match forced[pos] {
        Some((a, b)) => vec![target.join(image[a.0], image[b.0])],
        None => target.elements().collect(),
    };
    for v in candidates {
        if injective && used[v.0] {
            continue;
        }
        if !consistent(source, target, order, pos, image, e, v) {
            continue;
        }
        image[e.0] = v;
        used[v.0] = true;
        search(source, target, injective, order, forced, pos + 1, image, used, results);
        used[v.0] = false;
    }
}

fn consistent(
    source: &MultLattice,
    target: &MultLattice,
    order: &[Elt],
    pos: usize,
    image: &[Elt],
    e: Elt,
    v: Elt,
) -> bool {
    // meets and products of processed elements with e are themselves below
    // e, hence already processed (or e itself), so their images are pinned
    let img = |x: Elt| if x == e { v } else { image[x.0] };
    for &a in &order[..pos] {
        let fa = image[a.0];
        if source.leq(a, e) && !target.leq(fa, v) {
            return false;
        }
        if img(source.meet(a, e)) != target.meet(fa, v) {
            return false;
        }
        if img(source.mul(a, e)) != target.mul(fa, v) {
            return false;
        }
        if source.join(a, e) == e && target.join(fa, v) != v {
            return false;
        }
    }
    // joins of earlier pairs that land on e
    for &a in &order[..pos] {
        for &b in &order[..pos] {
            if source.join(a, b) == e && target.join(image[a.0], image[b.0]) != v {
                return false;
            }
        }
    }
    if img(source.mul(e, e)) != target.mul(v, v) {
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::fixture;

    #[test]
    fn embedding_of_the_two_chain_into_the_three_chain() {
        let c2 = fixture("C2").unwrap();
        let c3 = fixture("C3").unwrap();
        let phi = Homomorphism::new(&c2, &c3, vec![Elt(0), Elt(2)]);
        assert!(phi.is_homomorphism());
        assert!(phi.is_injective());
        assert!(phi.maps_compacts_to_compacts());
        assert!(phi.commutes_with_annihilators());
        assert!(phi.is_strong());
        assert_eq!(phi.contraction_check().unwrap(), Contraction::Holds);
    }

    #[test]
    fn identity_is_strong() {
        for name in ["C2", "C3", "B2", "N4", "Z30"] {
            let m = fixture(name).unwrap();
            let id = Homomorphism::identity(&m);
            assert!(id.is_strong(), "{name}");
            assert_eq!(id.contraction_check().unwrap(), Contraction::Holds);
        }
    }

    #[test]
    fn collapsing_the_three_chain_is_not_strong() {
        let c3 = fixture("C3").unwrap();
        let c2 = fixture("C2").unwrap();
        let phi = Homomorphism::new(&c3, &c2, vec![Elt(0), Elt(1), Elt(1)]);
        assert!(phi.is_homomorphism());
        assert!(!phi.is_injective());
        assert!(!phi.is_strong());
        assert_eq!(
            phi.contraction_check().unwrap_err(),
            MorphismError::PreconditionViolated
        );
    }

    #[test]
    fn hom_counts_between_small_chains() {
        let c2 = fixture("C2").unwrap();
        let c3 = fixture("C3").unwrap();
        // monotone pairs (f0 <= f1) all preserve the trivial structure
        assert_eq!(enumerate_homomorphisms(&c2, &c3).len(), 6);
        // only the bound-preserving embedding is strong
        let strong = enumerate_strong_homomorphisms(&c2, &c3);
        assert_eq!(strong.len(), 1);
        assert_eq!(strong[0].table, vec![Elt(0), Elt(2)]);
    }

    #[test]
    fn strong_endomorphisms_of_fixtures_contract() {
        for name in ["C2", "C3", "B2", "N4", "Z30"] {
            let m = fixture(name).unwrap();
            let endos = enumerate_strong_homomorphisms(&m, &m);
            assert!(!endos.is_empty(), "{name}: identity at least");
            for h in &endos {
                assert_eq!(h.contraction_check().unwrap(), Contraction::Holds, "{name}");
            }
        }
        // the swap automorphism of B2 is among the strong endomorphisms
        let b2 = fixture("B2").unwrap();
        let endos = enumerate_strong_homomorphisms(&b2, &b2);
        assert!(endos
            .iter()
            .any(|h| h.table == vec![Elt(0), Elt(2), Elt(1), Elt(3)]));
    }

    /// Strong self-maps of a finite Boolean algebra are exactly its
    /// automorphisms, one per atom permutation; similarly for a squarefree
    /// ideal lattice, one per permutation of the prime factors.
    #[test]
    fn strong_endomorphism_counts() {
        use crate::corpus::{gen_boolean, gen_zn};
        assert_eq!(enumerate_strong_homomorphisms(&gen_boolean(2), &gen_boolean(2)).len(), 2);
        let b3 = gen_boolean(3);
        assert_eq!(enumerate_strong_homomorphisms(&b3, &b3).len(), 6);
        let z30 = gen_zn(30);
        assert_eq!(enumerate_strong_homomorphisms(&z30, &z30).len(), 6);
        // chains admit only the identity
        let c5 = crate::corpus::gen_chain(4);
        assert_eq!(enumerate_strong_homomorphisms(&c5, &c5).len(), 1);
    }

    #[test]
    fn join_preservation_implies_order_preservation() {
        let c3 = fixture("C3").unwrap();
        let b2 = fixture("B2").unwrap();
        for (src, dst) in [(&c3, &c3), (&b2, &b2), (&c3, &b2)] {
            let n = src.n();
            let t = dst.n();
            let total = t.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let table: Vec<Elt> = (0..n)
                    .map(|_| {
                        let v = Elt(c % t);
                        c /= t;
                        v
                    })
                    .collect();
                let h = Homomorphism::new(src, dst, table);
                if h.preserves_binary_joins() {
                    assert!(h.preserves_order());
                }
            }
        }
    }

    #[test]
    fn enumerated_maps_agree_with_brute_force() {
        let c3 = fixture("C3").unwrap();
        let n4 = fixture("N4").unwrap();
        for (src, dst) in [(&c3, &n4), (&n4, &c3), (&c3, &c3)] {
            let fast: Vec<Vec<Elt>> = enumerate_homomorphisms(src, dst)
                .into_iter()
                .map(|h| h.table)
                .collect();
            let n = src.n();
            let t = dst.n();
            let mut slow = Vec::new();
            for code in 0..t.pow(n as u32) {
                let mut c = code;
                let table: Vec<Elt> = (0..n)
                    .map(|_| {
                        let v = Elt(c % t);
                        c /= t;
                        v
                    })
                    .collect();
                if Homomorphism::new(src, dst, table.clone()).is_homomorphism() {
                    slow.push(table);
                }
            }
            slow.sort();
            assert_eq!(fast, slow);
        }
    }
}
