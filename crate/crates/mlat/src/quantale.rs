//! Multiplicative lattices: a finite bounded lattice with a commutative,
//! associative multiplication that distributes over joins and has the top
//! element as identity (a finite commutative unital quantale).

use thiserror::Error;

use crate::lattice::{Elt, FiniteLattice};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QuantaleError {
    #[error("multiplication is not commutative at ({a}, {b})")]
    NotCommutative { a: usize, b: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("top is not a multiplicative identity at {a}")]
    IdentityFails { a: usize },
    #[error("bottom is not absorbing at {a}")]
    BottomNotAbsorbing { a: usize },
    #[error("multiplication does not distribute over the join at ({a}, {b}, {c})")]
    NotJoinDistributive { a: usize, b: usize, c: usize },
}

/// A validated multiplicative lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultLattice {
    lat: FiniteLattice,
    mul: Vec<usize>,
}

/// Checks every multiplication axiom by exhaustive table scan and returns the
/// finished structure, or the first violation found. Check order: entries,
/// commutativity, associativity, identity, bottom absorption, then
/// distribution over binary joins.
pub fn validate_quantale(
    lat: FiniteLattice,
    mul_rows: &[Vec<usize>],
) -> Result<MultLattice, QuantaleError> {
    let n = lat.n();
    assert_eq!(mul_rows.len(), n, "multiplication table must be n-by-n");
    for row in mul_rows {
        assert_eq!(row.len(), n, "multiplication table must be n-by-n");
        assert!(row.iter().all(|&v| v < n), "table entries must be element indices");
    }

    let mul = |a: usize, b: usize| mul_rows[a][b];
    for a in 0..n {
        for b in a + 1..n {
            if mul(a, b) != mul(b, a) {
                return Err(QuantaleError::NotCommutative { a, b });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(QuantaleError::NotAssociative { a, b, c });
                }
            }
        }
    }
    let top = lat.top().0;
    for a in 0..n {
        if mul(top, a) != a {
            return Err(QuantaleError::IdentityFails { a });
        }
    }
    // The empty-join instance of distributivity gets its own clause; the
    // loop below only covers binary joins.
    let bot = lat.bottom().0;
    for a in 0..n {
        if mul(bot, a) != bot {
            return Err(QuantaleError::BottomNotAbsorbing { a });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = mul(a, lat.join(Elt(b), Elt(c)).0);
                let rhs = lat.join(Elt(mul(a, b)), Elt(mul(a, c))).0;
                if lhs != rhs {
                    return Err(QuantaleError::NotJoinDistributive { a, b, c });
                }
            }
        }
    }

    let mut flat = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            flat[a * n + b] = mul_rows[a][b];
        }
    }
    let m = MultLattice { lat, mul: flat };
    debug_assert!(m.bip_failure().is_none(), "axiom-implied product laws failed");
    Ok(m)
}

impl MultLattice {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lat
    }

    pub fn n(&self) -> usize {
        self.lat.n()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        self.lat.elements()
    }

    pub fn leq(&self, a: Elt, b: Elt) -> bool {
        self.lat.leq(a, b)
    }

    pub fn lt(&self, a: Elt, b: Elt) -> bool {
        self.lat.lt(a, b)
    }

    pub fn meet(&self, a: Elt, b: Elt) -> Elt {
        self.lat.meet(a, b)
    }

    pub fn join(&self, a: Elt, b: Elt) -> Elt {
        self.lat.join(a, b)
    }

    pub fn meet_set<I: IntoIterator<Item = Elt>>(&self, elts: I) -> Elt {
        self.lat.meet_set(elts)
    }

    pub fn join_set<I: IntoIterator<Item = Elt>>(&self, elts: I) -> Elt {
        self.lat.join_set(elts)
    }

    pub fn bottom(&self) -> Elt {
        self.lat.bottom()
    }

    pub fn top(&self) -> Elt {
        self.lat.top()
    }

    pub fn is_proper(&self, a: Elt) -> bool {
        self.lat.is_proper(a)
    }

    pub fn display_elt(&self, e: Elt) -> String {
        self.lat.display_elt(e)
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        Elt(self.mul[a.0 * self.n() + b.0])
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..n)
            .map(|a| (0..n).map(|b| self.mul[a * n + b]).collect())
            .collect()
    }

    /// `x^k`, the k-fold product. Requires `k >= 1`.
    pub fn power(&self, x: Elt, k: usize) -> Elt {
        assert!(k >= 1, "powers start at 1");
        let mut acc = x;
        for _ in 1..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// True iff bottom is the only nilpotent element. Powers of `x` descend,
    /// so in an n-element lattice exponents up to n decide nilpotency.
    pub fn is_reduced(&self) -> bool {
        self.nilpotent_witness().is_none()
    }

    /// A non-bottom element with some power equal to bottom, if one exists.
    pub fn nilpotent_witness(&self) -> Option<Elt> {
        let bot = self.bottom();
        for x in self.elements() {
            if x == bot {
                continue;
            }
            let mut p = x;
            for _ in 2..=self.n() {
                let next = self.mul(p, x);
                if next == bot {
                    return Some(x);
                }
                if next == p {
                    break;
                }
                p = next;
            }
        }
        None
    }

    /// The compact elements. In a finite lattice every element is compact;
    /// the operation exists so that formulas quantifying over compacts read
    /// literally.
    pub fn compact_elements(&self) -> Vec<Elt> {
        self.elements().collect()
    }

    /// First violation of the elementary product laws, which follow from the
    /// axioms: xy <= x, xy <= x meet y, x*bottom = bottom, and monotonicity
    /// in each argument. Returns the law label and an element witness.
    pub fn bip_failure(&self) -> Option<(&'static str, Vec<usize>)> {
        let bot = self.bottom();
        for x in self.elements() {
            if self.mul(x, bot) != bot {
                return Some(("x*0 = 0", vec![x.0]));
            }
            for y in self.elements() {
                let p = self.mul(x, y);
                if !self.leq(p, x) {
                    return Some(("xy <= x", vec![x.0, y.0]));
                }
                if !self.leq(p, self.meet(x, y)) {
                    return Some(("xy <= x meet y", vec![x.0, y.0]));
                }
                for z in self.elements() {
                    if self.leq(x, y) && !self.leq(self.mul(x, z), self.mul(y, z)) {
                        return Some(("x <= y implies xz <= yz", vec![x.0, y.0, z.0]));
                    }
                }
            }
        }
        // monotonicity in both arguments at once
        for x in self.elements() {
            for y in self.elements() {
                if !self.leq(x, y) {
                    continue;
                }
                for u in self.elements() {
                    for v in self.elements() {
                        if self.leq(u, v) && !self.leq(self.mul(x, u), self.mul(y, v)) {
                            return Some((
                                "x <= y and u <= v imply xu <= yv",
                                vec![x.0, y.0, u.0, v.0],
                            ));
                        }
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn chain_lat(n: usize) -> FiniteLattice {
        let rows = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
        FiniteLattice::build(rows, None).unwrap()
    }

    fn meet_rows(l: &FiniteLattice) -> Vec<Vec<usize>> {
        l.elements()
            .map(|a| l.elements().map(|b| l.meet(a, b).0).collect())
            .collect()
    }

    #[test]
    fn chain_with_meet_multiplication_is_valid() {
        let l = chain_lat(3);
        let rows = meet_rows(&l);
        let m = validate_quantale(l, &rows).unwrap();
        assert!(m.is_reduced());
    }

    #[test]
    fn n4_fixture_is_valid_and_reduced() {
        let m = corpus::fixture("N4").unwrap();
        assert!(m.is_reduced());
        assert_eq!(m.power(Elt(2), 2), Elt(1)); // b*b = a
        assert_eq!(m.power(m.top(), 5), m.top());
        assert_eq!(m.power(m.bottom(), 3), m.bottom());
    }

    #[test]
    fn squaring_the_middle_of_a_chain_to_top_fails_distributivity() {
        let l = chain_lat(3);
        // m*m = 1 forces m*(m join 1) = m but (m*m) join (m*1) = 1.
        let rows = vec![vec![0, 0, 0], vec![0, 2, 1], vec![0, 1, 2]];
        let err = validate_quantale(l, &rows).unwrap_err();
        assert!(matches!(
            err,
            QuantaleError::IdentityFails { .. } | QuantaleError::NotJoinDistributive { .. }
        ));
    }

    #[test]
    fn violations_are_reported_with_witnesses() {
        let l = chain_lat(3);
        let mut rows = meet_rows(&l);
        rows[0][1] = 2;
        assert!(matches!(
            validate_quantale(l.clone(), &rows).unwrap_err(),
            QuantaleError::NotCommutative { a: 0, b: 1 }
        ));

        // everything 0 except 1*1 = 1: associative and commutative, but top
        // is not an identity
        let rows = vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 2]];
        assert!(matches!(
            validate_quantale(l.clone(), &rows).unwrap_err(),
            QuantaleError::IdentityFails { a: 0 } | QuantaleError::IdentityFails { a: 1 }
        ));

        // two-element chain with 0*0 = 1: caught by bottom absorption
        let l2 = chain_lat(2);
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            validate_quantale(l2, &rows).unwrap_err(),
            QuantaleError::BottomNotAbsorbing { a: 0 }
        ));

        // four-chain 0 < a < b < 1 with a*a = 0, a*b = a, b*b = a:
        // a*(b*b) = 0 but (a*b)*b = a
        let l4 = chain_lat(4);
        let rows = vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 1, 1],
            vec![0, 1, 1, 2],
            vec![0, 1, 2, 3],
        ];
        assert!(matches!(
            validate_quantale(l4, &rows).unwrap_err(),
            QuantaleError::NotAssociative { .. }
        ));
    }

    #[test]
    fn z12_is_not_reduced() {
        let m = corpus::gen_zn(12);
        assert!(!m.is_reduced());
        assert!(m.nilpotent_witness().is_some());
    }

    #[test]
    fn meet_multiplication_is_reduced() {
        for k in 1..=4 {
            assert!(corpus::gen_chain(k).is_reduced());
        }
        assert!(corpus::gen_boolean(2).is_reduced());
    }

    /// In a finite lattice the standing structural assumptions are automatic:
    /// every element is compact, the top is compact, and products of compacts
    /// are compact.
    #[test]
    fn finiteness_gives_the_structural_standing_assumptions() {
        let m = corpus::fixture("Z30").unwrap();
        let compacts = m.compact_elements();
        assert_eq!(compacts.len(), m.n());
        assert!(compacts.contains(&m.top()));
        for &a in &compacts {
            for &b in &compacts {
                assert!(compacts.contains(&m.mul(a, b)));
            }
        }
    }

    #[test]
    fn bip_laws_hold_on_fixtures() {
        for name in ["C2", "C3", "B2", "N4", "Z30"] {
            let m = corpus::fixture(name).unwrap();
            assert_eq!(m.bip_failure(), None, "{name}");
        }
    }

    /// Binary distributivity extends to small families: products distribute
    /// over joins of every subset of size at most 3, including the empty
    /// one, on all structures with at most 6 elements.
    #[test]
    fn multiplication_distributes_over_small_joins() {
        let mut pool = vec![corpus::trivial(), corpus::fixture("N4").unwrap()];
        pool.push(corpus::gen_chain(5));
        pool.push(corpus::gen_zn(12));
        pool.push(corpus::gen_zn(30));
        for m in pool {
            assert!(m.n() <= 8);
            let elts: Vec<Elt> = m.elements().collect();
            for x in m.elements() {
                assert_eq!(m.mul(x, m.join_set([])), m.bottom());
                for &a in &elts {
                    for &b in &elts {
                        for &c in &elts {
                            let lhs = m.mul(x, m.join_set([a, b, c]));
                            let rhs =
                                m.join_set([m.mul(x, a), m.mul(x, b), m.mul(x, c)]);
                            assert_eq!(lhs, rhs);
                        }
                        assert_eq!(
                            m.mul(x, m.join_set([a, b])),
                            m.join_set([m.mul(x, a), m.mul(x, b)])
                        );
                    }
                }
            }
        }
    }
}
