//! Brute-force oracles shared by the integration tests. Everything here is
//! deliberately independent of the library's structured algorithms: plain
//! permutation sums, subset filters and definitional scans.

// Each test binary compiles this module separately and uses its own subset.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use critideals::laplacian::SymbolicMatrix;
use critideals::matching::TwoMatching;
use critideals::poly::{Polynomial, Var};
use critideals::tree::Tree;
use critideals::IntMatrix;

/// Permutation-sum determinant of a symbolic submatrix (rows and columns by
/// label, ascending).
pub fn permutation_determinant(m: &SymbolicMatrix, rows: &[Var], cols: &[Var]) -> Polynomial {
    let mut rows = rows.to_vec();
    let mut cols = cols.to_vec();
    rows.sort();
    cols.sort();
    assert_eq!(rows.len(), cols.len());
    let row_pos: Vec<usize> = rows
        .iter()
        .map(|r| m.rows().iter().position(|x| x == r).unwrap())
        .collect();
    let col_pos: Vec<usize> = cols
        .iter()
        .map(|c| m.cols().iter().position(|x| x == c).unwrap())
        .collect();
    let k = rows.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut total = Polynomial::zero();
    permute(&mut perm, 0, &mut |perm, sign| {
        let mut prod = Polynomial::one();
        for (i, &pi) in perm.iter().enumerate() {
            prod = prod.mul(m.get(row_pos[i], col_pos[pi]));
            if prod.is_zero() {
                return;
            }
        }
        if sign {
            total = total.add(&prod);
        } else {
            total = total.sub(&prod);
        }
    });
    total
}

fn permute(perm: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize], bool)) {
    if at == perm.len() {
        let mut sign = true;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    sign = !sign;
                }
            }
        }
        f(perm, sign);
        return;
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        permute(perm, at + 1, f);
        perm.swap(at, i);
    }
}

/// All 2-matchings of the tree (looped if requested) by filtering every
/// subset of the item list.
pub fn brute_force_two_matchings(tree: &Tree, with_loops: bool, j: usize) -> Vec<TwoMatching> {
    #[derive(Clone, Copy)]
    enum It {
        E(Var, Var),
        L(Var),
    }
    let mut items: Vec<It> = tree.edges().iter().map(|&(u, v)| It::E(u, v)).collect();
    if with_loops {
        items.extend(tree.vertices().map(It::L));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << items.len()) {
        if mask.count_ones() as usize != j {
            continue;
        }
        let mut inc: BTreeMap<Var, u32> = BTreeMap::new();
        let mut edges = Vec::new();
        let mut loops = Vec::new();
        for (i, it) in items.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            match *it {
                It::E(u, v) => {
                    *inc.entry(u).or_insert(0) += 1;
                    *inc.entry(v).or_insert(0) += 1;
                    edges.push((u, v));
                }
                It::L(v) => {
                    *inc.entry(v).or_insert(0) += 2;
                    loops.push(v);
                }
            }
        }
        if inc.values().all(|&c| c <= 2) {
            out.push(TwoMatching::new(edges, loops));
        }
    }
    out
}

/// Definitional minimality: no same-size 2-matching of the looped tree has a
/// strictly smaller loop set.
pub fn brute_force_is_minimal(tree: &Tree, m: &TwoMatching) -> bool {
    let mine: BTreeSet<Var> = m.loops().iter().copied().collect();
    for other in brute_force_two_matchings(tree, true, m.size()) {
        let theirs: BTreeSet<Var> = other.loops().iter().copied().collect();
        if theirs.is_subset(&mine) && theirs != mine {
            return false;
        }
    }
    true
}

/// Saturated vertices and edges straight from the definition: scan every
/// maximum 2-matching.
pub fn brute_force_saturation(tree: &Tree) -> (Vec<Var>, Vec<(Var, Var)>) {
    let nu2 = (0..=tree.n())
        .rev()
        .find(|&j| !brute_force_two_matchings(tree, false, j).is_empty())
        .unwrap_or(0);
    let maxima = brute_force_two_matchings(tree, false, nu2);
    let vertices = tree
        .vertices()
        .filter(|&v| {
            maxima
                .iter()
                .all(|m| m.edges().iter().filter(|&&(a, b)| a == v || b == v).count() == 2)
        })
        .collect();
    let edges = tree
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| maxima.iter().all(|m| m.has_edge(u, v)))
        .collect();
    (vertices, edges)
}

/// gcd of all k x k minors of an integer matrix, by enumeration.
pub fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
    use num_integer::Integer;
    let rows = combinations(m.rows(), k);
    let cols = combinations(m.cols(), k);
    let mut g = BigInt::zero();
    for r in &rows {
        for c in &cols {
            let sub = IntMatrix::from_fn(k, k, |i, j| m.get(r[i], c[j]).clone());
            g = g.gcd(&sub.determinant());
        }
    }
    g
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All trees on 2..=max_n vertices.
pub fn small_trees(max_n: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.extend(critideals::enumerate_labeled_trees(n).unwrap());
    }
    out
}
