//! Finite bounded lattices given by an explicit order relation.
//!
//! A [`FiniteLattice`] is validated at construction: the relation must be a
//! partial order in which every pair of elements has a greatest lower bound
//! and a least upper bound. Meet and join tables are precomputed so that all
//! downstream operations are table walks.

use std::fmt;
use thiserror::Error;

/// Index of an element within a fixed lattice. Only meaningful relative to
/// the lattice (of size `n`) it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elt(pub usize);

impl fmt::Display for Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which partial-order axiom failed during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrderAxiom::Reflexivity => "reflexivity",
            OrderAxiom::Antisymmetry => "antisymmetry",
            OrderAxiom::Transitivity => "transitivity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Meet => "meet",
            BoundKind::Join => "join",
        })
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("not a partial order: {axiom} fails at witness {witness:?}")]
    NotAPartialOrder { axiom: OrderAxiom, witness: Vec<usize> },
    #[error("not a lattice: elements {a} and {b} have no {kind}")]
    NotALattice { a: usize, b: usize, kind: BoundKind },
    #[error("order has no bottom or no top element")]
    NoBounds,
}

/// A finite bounded lattice: an order relation plus precomputed meet/join
/// tables and the located bottom and top elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    n: usize,
    leq: Vec<bool>,
    meet_tab: Vec<usize>,
    join_tab: Vec<usize>,
    bottom: usize,
    top: usize,
    names: Option<Vec<String>>,
}

impl FiniteLattice {
    /// Validates `rows` (row `i`, column `j` true iff element `i` is below
    /// element `j`) and builds the lattice. The empty-set conventions
    /// `meet_set([]) = top` and `join_set([]) = bottom` are fixed here.
    pub fn build(rows: Vec<Vec<bool>>, names: Option<Vec<String>>) -> Result<Self, LatticeError> {
        let n = rows.len();
        assert!(n >= 1, "a lattice needs at least one element");
        assert!(rows.iter().all(|r| r.len() == n), "relation must be n-by-n");
        if let Some(ns) = &names {
            assert_eq!(ns.len(), n, "need one name per element");
        }

        let leq = |a: usize, b: usize| rows[a][b];
        for a in 0..n {
            if !leq(a, a) {
                return Err(LatticeError::NotAPartialOrder {
                    axiom: OrderAxiom::Reflexivity,
                    witness: vec![a],
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq(a, b) && leq(b, a) {
                    return Err(LatticeError::NotAPartialOrder {
                        axiom: OrderAxiom::Antisymmetry,
                        witness: vec![a, b],
                    });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if leq(b, c) && !leq(a, c) {
                        return Err(LatticeError::NotAPartialOrder {
                            axiom: OrderAxiom::Transitivity,
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }

        let mut meet_tab = vec![0usize; n * n];
        let mut join_tab = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                meet_tab[a * n + b] = bound_of(n, &leq, a, b, BoundKind::Meet)?;
                join_tab[a * n + b] = bound_of(n, &leq, a, b, BoundKind::Join)?;
            }
        }

        let bottom = (0..n)
            .find(|&x| (0..n).all(|y| leq(x, y)))
            .ok_or(LatticeError::NoBounds)?;
        let top = (0..n)
            .find(|&x| (0..n).all(|y| leq(y, x)))
            .ok_or(LatticeError::NoBounds)?;

        let mut flat = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[a * n + b] = rows[a][b];
            }
        }
        Ok(FiniteLattice {
            n,
            leq: flat,
            meet_tab,
            join_tab,
            bottom,
            top,
            names,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        (0..self.n).map(Elt)
    }

    pub fn leq(&self, a: Elt, b: Elt) -> bool {
        self.leq[a.0 * self.n + b.0]
    }

    pub fn lt(&self, a: Elt, b: Elt) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn meet(&self, a: Elt, b: Elt) -> Elt {
        Elt(self.meet_tab[a.0 * self.n + b.0])
    }

    pub fn join(&self, a: Elt, b: Elt) -> Elt {
        Elt(self.join_tab[a.0 * self.n + b.0])
    }

    /// Meet of a finite family; the empty meet is the top element.
    pub fn meet_set<I: IntoIterator<Item = Elt>>(&self, elts: I) -> Elt {
        elts.into_iter().fold(self.top(), |acc, e| self.meet(acc, e))
    }

    /// Join of a finite family; the empty join is the bottom element.
    pub fn join_set<I: IntoIterator<Item = Elt>>(&self, elts: I) -> Elt {
        elts.into_iter()
            .fold(self.bottom(), |acc, e| self.join(acc, e))
    }

    pub fn bottom(&self) -> Elt {
        Elt(self.bottom)
    }

    pub fn top(&self) -> Elt {
        Elt(self.top)
    }

    pub fn is_proper(&self, a: Elt) -> bool {
        a != self.top()
    }

    /// All pairs `(a, b)` with `a < b` and nothing strictly between: the
    /// edges of the Hasse diagram, sorted by index.
    pub fn covers(&self) -> Vec<(Elt, Elt)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if !self.lt(a, b) {
                    continue;
                }
                let blocked = self.elements().any(|c| self.lt(a, c) && self.lt(c, b));
                if !blocked {
                    out.push((a, b));
                }
            }
        }
        out.sort();
        out
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, e: Elt) -> Option<&str> {
        self.names.as_ref().map(|ns| ns[e.0].as_str())
    }

    /// Element label for display: its name when present, its index otherwise.
    pub fn display_elt(&self, e: Elt) -> String {
        match self.name(e) {
            Some(s) => s.to_string(),
            None => e.0.to_string(),
        }
    }

    /// First triple violating `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`, if any.
    pub fn distributivity_failure(&self) -> Option<(Elt, Elt, Elt)> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_failure().is_none()
    }

    /// The raw relation, row `a` column `b` true iff `a <= b`.
    pub fn leq_rows(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.leq[a * self.n + b]).collect())
            .collect()
    }
}

fn bound_of(
    n: usize,
    leq: &impl Fn(usize, usize) -> bool,
    a: usize,
    b: usize,
    kind: BoundKind,
) -> Result<usize, LatticeError> {
    let candidates: Vec<usize> = (0..n)
        .filter(|&c| match kind {
            BoundKind::Meet => leq(c, a) && leq(c, b),
            BoundKind::Join => leq(a, c) && leq(b, c),
        })
        .collect();
    candidates
        .iter()
        .copied()
        .find(|&g| {
            candidates.iter().all(|&c| match kind {
                BoundKind::Meet => leq(c, g),
                BoundKind::Join => leq(g, c),
            })
        })
        .ok_or(LatticeError::NotALattice { a, b, kind })
}
