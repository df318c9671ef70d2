//! Exhaustive enumeration of small multiplicative lattices.
//!
//! Lattices are generated first (posets built one element at a time along a
//! linear extension, filtered to lattices, deduplicated by canonical form),
//! then every axiom-valid multiplication table is filled in cell by cell
//! with constraint propagation: commutativity halves the cells, the bound
//! `xy <= x meet y` limits each cell, identity and absorption fix the top
//! and bottom rows, and monotonicity prunes partial tables. Associativity
//! and join distributivity are checked on complete tables.

use std::collections::HashSet;

use crate::lattice::{Elt, FiniteLattice};
use crate::quantale::{validate_quantale, MultLattice};

pub const MAX_ENUMERABLE_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Largest element count, at most [`MAX_ENUMERABLE_N`].
    pub max_n: usize,
    /// Deduplicate structures up to isomorphism (order- and
    /// product-preserving bijection).
    pub dedup: bool,
    /// Keep only reduced structures.
    pub require_reduced: bool,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { max_n: 4, dedup: true, require_reduced: false }
    }
}

/// Every multiplicative lattice with at most `config.max_n` elements, in a
/// deterministic order: by size, then by lattice, then by table fill order.
pub fn enumerate(config: &EnumerationConfig) -> Vec<MultLattice> {
    assert!(
        (1..=MAX_ENUMERABLE_N).contains(&config.max_n),
        "max_n must be between 1 and {MAX_ENUMERABLE_N}"
    );
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for n in 1..=config.max_n {
        for lat in lattices_of_size(n) {
            for mul in multiplication_tables(&lat) {
                let m = validate_quantale(lat.clone(), &mul)
                    .expect("enumerated table satisfies the axioms");
                if config.require_reduced && !m.is_reduced() {
                    continue;
                }
                if config.dedup && !seen.insert(canonical_key(&m)) {
                    continue;
                }
                out.push(m);
            }
        }
    }
    out
}

/// All lattices on `n` elements, one representative per isomorphism class,
/// labeled along a linear extension with the bottom first and the top last.
pub fn lattices_of_size(n: usize) -> Vec<FiniteLattice> {
    let mut rows = vec![vec![false; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = true;
    }
    let mut found = Vec::new();
    let mut seen = HashSet::new();
    extend_poset(&mut rows, 1, n, &mut found, &mut seen);
    found
}

fn extend_poset(
    rows: &mut Vec<Vec<bool>>,
    k: usize,
    n: usize,
    found: &mut Vec<FiniteLattice>,
    seen: &mut HashSet<Vec<bool>>,
) {
    if k == n {
        if let Ok(lat) = FiniteLattice::build(rows.clone(), None) {
            let key = canonical_order_key(rows, n);
            if seen.insert(key) {
                found.push(lat);
            }
        }
        return;
    }
    // choose the strict down-set of element k among 0..k: it must contain
    // the bottom and be downward closed; the last element is above everyone
    for mask in 0u32..(1 << k) {
        if n > 1 && mask & 1 == 0 {
            continue;
        }
        if k == n - 1 && mask != (1 << k) - 1 {
            continue;
        }
        let mut ok = true;
        'check: for i in 0..k {
            if mask >> i & 1 == 0 {
                continue;
            }
            for j in 0..k {
                if rows[j][i] && mask >> j & 1 == 0 {
                    ok = false;
                    break 'check;
                }
            }
        }
        if !ok {
            continue;
        }
        for i in 0..k {
            if mask >> i & 1 == 1 {
                rows[i][k] = true;
            }
        }
        extend_poset(rows, k + 1, n, found, seen);
        for i in 0..k {
            rows[i][k] = false;
        }
    }
}

fn canonical_order_key(rows: &[Vec<bool>], n: usize) -> Vec<bool> {
    let mut best: Option<Vec<bool>> = None;
    for perm in permutations(n) {
        let mut key = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                key.push(rows[perm[a]][perm[b]]);
            }
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap()
}

/// Canonical form of a structure: the lexicographically least relabeling of
/// the order relation followed by the multiplication table. Two structures
/// get equal keys exactly when they are isomorphic.
pub fn canonical_key(m: &MultLattice) -> Vec<u8> {
    let n = m.n();
    let mut best: Option<Vec<u8>> = None;
    for perm in permutations(n) {
        // perm[i] = old index placed at new position i
        let mut inv = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut key = Vec::with_capacity(2 * n * n + 1);
        key.push(n as u8);
        for a in 0..n {
            for b in 0..n {
                key.push(m.leq(Elt(perm[a]), Elt(perm[b])) as u8);
            }
        }
        for a in 0..n {
            for b in 0..n {
                key.push(inv[m.mul(Elt(perm[a]), Elt(perm[b])).0] as u8);
            }
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(&mut current, n, &mut out);
    out
}

fn heap_permute(arr: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(arr.clone());
        return;
    }
    for i in 0..k {
        heap_permute(arr, k - 1, out);
        if k % 2 == 0 {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}

/// Every multiplication table on `lat` satisfying the quantale axioms, in
/// the deterministic order of the cell-filling search.
pub fn multiplication_tables(lat: &FiniteLattice) -> Vec<Vec<Vec<usize>>> {
    let n = lat.n();
    let bot = lat.bottom().0;
    let top = lat.top().0;
    const UNSET: usize = usize::MAX;
    let mut mul = vec![vec![UNSET; n]; n];
    for x in 0..n {
        mul[bot][x] = bot;
        mul[x][bot] = bot;
        mul[top][x] = x;
        mul[x][top] = x;
    }
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != bot && i != top && j != bot && j != top)
        .collect();
    let mut out = Vec::new();
    fill_cells(lat, &cells, 0, &mut mul, &mut out);
    out
}

fn fill_cells(
    lat: &FiniteLattice,
    cells: &[(usize, usize)],
    pos: usize,
    mul: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    const UNSET: usize = usize::MAX;
    let n = lat.n();
    if pos == cells.len() {
        if table_is_valid(lat, mul) {
            out.push(mul.clone());
        }
        return;
    }
    let (i, j) = cells[pos];
    let bound = lat.meet(Elt(i), Elt(j));
    for v in 0..n {
        if !lat.leq(Elt(v), bound) {
            continue;
        }
        // monotonicity against every assigned cell
        let mut ok = true;
        'scan: for a in 0..n {
            for b in 0..n {
                let w = mul[a][b];
                if w == UNSET || (a == i && b == j) || (a == j && b == i) {
                    continue;
                }
                if lat.leq(Elt(a), Elt(i)) && lat.leq(Elt(b), Elt(j)) && !lat.leq(Elt(w), Elt(v)) {
                    ok = false;
                    break 'scan;
                }
                if lat.leq(Elt(i), Elt(a)) && lat.leq(Elt(j), Elt(b)) && !lat.leq(Elt(v), Elt(w)) {
                    ok = false;
                    break 'scan;
                }
            }
        }
        if !ok {
            continue;
        }
        mul[i][j] = v;
        mul[j][i] = v;
        fill_cells(lat, cells, pos + 1, mul, out);
        mul[i][j] = UNSET;
        mul[j][i] = UNSET;
    }
}

fn table_is_valid(lat: &FiniteLattice, mul: &[Vec<usize>]) -> bool {
    let n = lat.n();
    for a in 0..n {
        for b in 0..n {
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

#[cfg(test)]
mod tests {
    use super::*;

    fn config(max_n: usize, require_reduced: bool) -> EnumerationConfig {
        EnumerationConfig { max_n, dedup: true, require_reduced }
    }

    #[test]
    fn lattice_counts_match_the_known_sequence() {
        // unlabeled lattices on 1..=6 elements
        let expected = [1usize, 1, 1, 2, 5, 15];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(lattices_of_size(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn structure_counts_small() {
        assert_eq!(enumerate(&config(1, false)).len(), 1);
        // the two-element chain admits exactly one table
        assert_eq!(enumerate(&config(2, false)).len(), 2);
        // three-chain: the middle square is 0 or m
        assert_eq!(enumerate(&config(3, false)).len(), 4);
        let reduced3 = enumerate(&config(3, true));
        assert_eq!(reduced3.len(), 3);
        // the reduced three-chain multiplication is idempotent in the middle
        let c3 = &reduced3[2];
        assert_eq!(c3.n(), 3);
        assert_eq!(c3.mul(Elt(1), Elt(1)), Elt(1));
    }

    #[test]
    fn reduced_structures_up_to_four_elements() {
        let all = enumerate(&config(4, true));
        assert_eq!(all.len(), 6);
        // four-chain carries exactly two reduced tables (meet and the one
        // with a single idempotent below the top), the diamond exactly one
        let four: Vec<_> = all.iter().filter(|m| m.n() == 4).collect();
        assert_eq!(four.len(), 3);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate(&config(4, false));
        let b = enumerate(&config(4, false));
        assert_eq!(a, b);
    }

    #[test]
    fn dedup_yields_pairwise_non_isomorphic_structures() {
        // independent brute-force isomorphism oracle
        fn isomorphic(a: &MultLattice, b: &MultLattice) -> bool {
            if a.n() != b.n() {
                return false;
            }
            let n = a.n();
            for perm in permutations(n) {
                let phi = |e: Elt| Elt(perm[e.0]);
                let order_ok = (0..n).all(|x| {
                    (0..n).all(|y| a.leq(Elt(x), Elt(y)) == b.leq(phi(Elt(x)), phi(Elt(y))))
                });
                let mul_ok = order_ok
                    && (0..n).all(|x| {
                        (0..n).all(|y| {
                            phi(a.mul(Elt(x), Elt(y))) == b.mul(phi(Elt(x)), phi(Elt(y)))
                        })
                    });
                if mul_ok {
                    return true;
                }
            }
            false
        }

        let structures = enumerate(&config(4, false));
        for (i, a) in structures.iter().enumerate() {
            for b in structures.iter().skip(i + 1) {
                assert!(!isomorphic(a, b));
            }
        }
        // and without dedup at least as many structures appear
        let raw = enumerate(&EnumerationConfig { max_n: 4, dedup: false, require_reduced: false });
        assert!(raw.len() >= structures.len());
    }

    #[test]
    fn all_enumerated_structures_validate() {
        for m in enumerate(&config(4, false)) {
            assert_eq!(m.bip_failure(), None);
        }
    }
}
