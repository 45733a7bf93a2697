//! The generalized Laplacian (indeterminate diagonal, negated multiplicities
//! off it), exact symbolic minors by memoized cofactor expansion, the
//! matchings expansion of the determinant, and the correspondence between
//! non-vanishing minors and 2-matchings of the looped tree.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::matching::{heads_tails, TwoMatching};
use crate::poly::{Monomial, Polynomial, Var};
use crate::tree::{Forest, MultiGraph, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MinorError {
    #[error("row/column index sets must have equal size (got {rows} and {cols})")]
    SizeMismatch { rows: usize, cols: usize },
    #[error("index {0} is not a row/column of the matrix")]
    NoSuchIndex(Var),
    #[error("duplicate index {0} in row/column list")]
    DuplicateIndex(Var),
    #[error("matrix too large for mask-based expansion (limit 64)")]
    TooLarge,
    #[error("invalid matching: {0}")]
    BadMatching(String),
}

/// A square symbolic matrix indexed by ordered vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    rows: Vec<Var>,
    cols: Vec<Var>,
    data: Vec<Vec<Polynomial>>,
}

impl SymbolicMatrix {
    pub fn new(rows: Vec<Var>, cols: Vec<Var>, data: Vec<Vec<Polynomial>>) -> SymbolicMatrix {
        assert_eq!(rows.len(), data.len());
        assert!(data.iter().all(|r| r.len() == cols.len()));
        assert_eq!(rows.iter().collect::<BTreeSet<_>>().len(), rows.len());
        assert_eq!(cols.iter().collect::<BTreeSet<_>>().len(), cols.len());
        SymbolicMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> &[Var] {
        &self.rows
    }

    pub fn cols(&self) -> &[Var] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i][j]
    }

    pub fn entry(&self, row: Var, col: Var) -> Option<&Polynomial> {
        let i = self.rows.iter().position(|&r| r == row)?;
        let j = self.cols.iter().position(|&c| c == col)?;
        Some(&self.data[i][j])
    }
}

impl fmt::Display for SymbolicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, p) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// L(G,X): x_u on the diagonal, -m_{uv} off it.
pub fn generalized_laplacian(g: &MultiGraph) -> SymbolicMatrix {
    let n = g.n();
    let verts: Vec<Var> = (1..=n as Var).collect();
    let data = verts
        .iter()
        .map(|&u| {
            verts
                .iter()
                .map(|&v| {
                    if u == v {
                        Polynomial::variable(u)
                    } else {
                        Polynomial::constant(-(g.multiplicity(u, v) as i64))
                    }
                })
                .collect()
        })
        .collect();
    SymbolicMatrix::new(verts.clone(), verts, data)
}

pub fn generalized_laplacian_tree(t: &Tree) -> SymbolicMatrix {
    generalized_laplacian(&t.to_multigraph())
}

/// Memoized cofactor expansion over one matrix; minors share subproblems
/// across calls through the (row set, column set) key.
pub struct MinorCache<'a> {
    matrix: &'a SymbolicMatrix,
    memo: HashMap<(u64, u64), Polynomial>,
}

impl<'a> MinorCache<'a> {
    pub fn new(matrix: &'a SymbolicMatrix) -> Result<MinorCache<'a>, MinorError> {
        if matrix.rows.len() > 64 || matrix.cols.len() > 64 {
            return Err(MinorError::TooLarge);
        }
        Ok(MinorCache {
            matrix,
            memo: HashMap::new(),
        })
    }

    fn positions(labels: &[Var], wanted: &[Var]) -> Result<u64, MinorError> {
        let mut mask = 0u64;
        for &w in wanted {
            let pos = labels
                .iter()
                .position(|&l| l == w)
                .ok_or(MinorError::NoSuchIndex(w))?;
            if mask >> pos & 1 == 1 {
                return Err(MinorError::DuplicateIndex(w));
            }
            mask |= 1 << pos;
        }
        Ok(mask)
    }

    /// det of the submatrix on the given row and column labels, both taken
    /// in ascending label order.
    pub fn minor(&mut self, rows: &[Var], cols: &[Var]) -> Result<Polynomial, MinorError> {
        if rows.len() != cols.len() {
            return Err(MinorError::SizeMismatch {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        let rmask = Self::positions(&self.matrix.rows, rows)?;
        let cmask = Self::positions(&self.matrix.cols, cols)?;
        Ok(self.det_masks(rmask, cmask))
    }

    fn det_masks(&mut self, rmask: u64, cmask: u64) -> Polynomial {
        if rmask == 0 {
            return Polynomial::one();
        }
        if let Some(hit) = self.memo.get(&(rmask, cmask)) {
            return hit.clone();
        }

        let rows: Vec<usize> = (0..64).filter(|&i| rmask >> i & 1 == 1).collect();
        let cols: Vec<usize> = (0..64).filter(|&j| cmask >> j & 1 == 1).collect();

        // Expand along the line with the fewest nonzero entries.
        let mut best: (bool, usize, usize) = (true, 0, usize::MAX); // (is_row, position, count)
        for (pi, &i) in rows.iter().enumerate() {
            let count = cols
                .iter()
                .filter(|&&j| !self.matrix.data[i][j].is_zero())
                .count();
            if count < best.2 {
                best = (true, pi, count);
            }
        }
        for (pj, &j) in cols.iter().enumerate() {
            let count = rows
                .iter()
                .filter(|&&i| !self.matrix.data[i][j].is_zero())
                .count();
            if count < best.2 {
                best = (false, pj, count);
            }
        }

        let mut acc = Polynomial::zero();
        if best.2 > 0 {
            if best.0 {
                let pi = best.1;
                let i = rows[pi];
                for (pj, &j) in cols.iter().enumerate() {
                    let e = &self.matrix.data[i][j];
                    if e.is_zero() {
                        continue;
                    }
                    let sub = self.det_masks(rmask & !(1 << i), cmask & !(1 << j));
                    let term = e.mul(&sub);
                    acc = if (pi + pj).is_multiple_of(2) {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
            } else {
                let pj = best.1;
                let j = cols[pj];
                for (pi, &i) in rows.iter().enumerate() {
                    let e = &self.matrix.data[i][j];
                    if e.is_zero() {
                        continue;
                    }
                    let sub = self.det_masks(rmask & !(1 << i), cmask & !(1 << j));
                    let term = e.mul(&sub);
                    acc = if (pi + pj).is_multiple_of(2) {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
            }
        }
        self.memo.insert((rmask, cmask), acc.clone());
        acc
    }
}

/// One-shot minor without a shared cache.
pub fn minor(
    matrix: &SymbolicMatrix,
    rows: &[Var],
    cols: &[Var],
) -> Result<Polynomial, MinorError> {
    MinorCache::new(matrix)?.minor(rows, cols)
}

/// Determinant of the generalized Laplacian of a forest through the
/// matchings expansion: sum over matchings mu of (-1)^|mu| times the product
/// of the variables left uncovered.
pub fn matching_determinant_forest(forest: &Forest) -> Polynomial {
    let verts = forest.vertices().to_vec();
    assert!(
        verts.len() <= 64,
        "matchings expansion is a desk-scale routine"
    );
    let index: HashMap<Var, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for &(u, v) in forest.edges() {
        let (iu, iv) = (index[&u], index[&v]);
        nbrs[iu].push(iv);
        nbrs[iv].push(iu);
    }
    let full = if verts.is_empty() {
        0
    } else {
        (1u64 << verts.len()) - 1
    };
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    det_matchings(full, &verts, &nbrs, &mut memo)
}

fn det_matchings(
    mask: u64,
    verts: &[Var],
    nbrs: &[Vec<usize>],
    memo: &mut HashMap<u64, Polynomial>,
) -> Polynomial {
    if mask == 0 {
        return Polynomial::one();
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let a = (0..64).rfind(|&i| mask >> i & 1 == 1).unwrap();
    // Either a stays unmatched (contributing x_a) or it pairs with a
    // neighbor still active, flipping the sign.
    let mut acc = det_matchings(mask & !(1 << a), verts, nbrs, memo)
        .mul_term(&BigInt::one(), &Monomial::var(verts[a]));
    for &b in &nbrs[a] {
        if mask >> b & 1 == 1 {
            acc = acc.sub(&det_matchings(
                mask & !(1 << a) & !(1 << b),
                verts,
                nbrs,
                memo,
            ));
        }
    }
    memo.insert(mask, acc.clone());
    acc
}

/// det L(T,X) by the matchings expansion.
pub fn matching_determinant(tree: &Tree) -> Polynomial {
    matching_determinant_forest(&tree.as_forest())
}

/// Principal minor of L(T,X) on a vertex subset; equals the matchings
/// expansion of the induced forest. This is also the value of d(M,X) for any
/// 2-matching whose loop set is that subset.
pub fn principal_minor(tree: &Tree, verts: &[Var]) -> Polynomial {
    matching_determinant_forest(&tree.induced(verts).expect("vertices exist"))
}

/// Lazily memoized principal minors of one tree, keyed by vertex subset.
pub struct PrincipalMinors<'a> {
    tree: &'a Tree,
    nbrs: Vec<Vec<usize>>,
    memo: HashMap<u64, Polynomial>,
}

impl<'a> PrincipalMinors<'a> {
    pub fn new(tree: &'a Tree) -> PrincipalMinors<'a> {
        assert!(tree.n() <= 64);
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); tree.n()];
        for &(u, v) in tree.edges() {
            nbrs[(u - 1) as usize].push((v - 1) as usize);
            nbrs[(v - 1) as usize].push((u - 1) as usize);
        }
        PrincipalMinors {
            tree,
            nbrs,
            memo: HashMap::new(),
        }
    }

    pub fn of(&mut self, verts: &[Var]) -> Polynomial {
        let mut mask = 0u64;
        for &v in verts {
            mask |= 1 << (v - 1);
        }
        self.of_mask(mask)
    }

    pub fn of_mask(&mut self, mask: u64) -> Polynomial {
        if mask == 0 {
            return Polynomial::one();
        }
        if let Some(hit) = self.memo.get(&mask) {
            return hit.clone();
        }
        let a = (0..64).rfind(|&i| mask >> i & 1 == 1).unwrap();
        let mut acc = self
            .of_mask(mask & !(1 << a))
            .mul_term(&BigInt::one(), &Monomial::var((a + 1) as Var));
        let nbrs = self.nbrs[a].clone();
        for b in nbrs {
            if mask >> b & 1 == 1 {
                acc = acc.sub(&self.of_mask(mask & !(1 << a) & !(1 << b)));
            }
        }
        self.memo.insert(mask, acc.clone());
        acc
    }

    pub fn tree(&self) -> &Tree {
        self.tree
    }
}

/// The minor associated to a 2-matching: det L[t(M), h(M)] with the sign
/// chosen so the leading coefficient is positive. Its leading term is the
/// product of the loop variables with coefficient one; a loopless matching
/// gives the constant 1.
pub fn d_of_matching(tree: &Tree, m: &TwoMatching) -> Result<Polynomial, MinorError> {
    let ht = heads_tails(tree, m).map_err(|e| MinorError::BadMatching(e.to_string()))?;
    let lap = generalized_laplacian_tree(tree);
    let det = minor(&lap, &ht.tails, &ht.heads)?;
    let normalized = det.normalize_sign();
    debug_assert!(
        normalized.leading_monomial() == Some(&Monomial::from_vars(m.loops()))
            && normalized.leading_coeff().map(|c| c.is_one()) == Some(true)
    );
    Ok(normalized)
}

/// Reconstructs a 2-matching with tails I and heads J from a non-vanishing
/// minor, by pairing rows to columns along nonzero entries and swapping any
/// doubly-used edge into the two loops it shadows. Returns None when the
/// minor vanishes.
pub fn minor_to_matching(
    tree: &Tree,
    rows: &[Var],
    cols: &[Var],
) -> Result<Option<TwoMatching>, MinorError> {
    if rows.len() != cols.len() {
        return Err(MinorError::SizeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    let lap = generalized_laplacian_tree(tree);
    let det = minor(&lap, rows, cols)?;
    if det.is_zero() {
        return Ok(None);
    }
    let mut rows = rows.to_vec();
    let mut cols = cols.to_vec();
    rows.sort();
    cols.sort();

    let allowed = |i: usize, j: usize| rows[i] == cols[j] || tree.has_edge(rows[i], cols[j]);
    let k = rows.len();
    let mut col_of_row: Vec<Option<usize>> = vec![None; k];
    let mut row_of_col: Vec<Option<usize>> = vec![None; k];

    fn augment(
        i: usize,
        k: usize,
        allowed: &dyn Fn(usize, usize) -> bool,
        row_of_col: &mut Vec<Option<usize>>,
        col_of_row: &mut Vec<Option<usize>>,
        seen: &mut Vec<bool>,
    ) -> bool {
        for j in 0..k {
            if allowed(i, j) && !seen[j] {
                seen[j] = true;
                let free = match row_of_col[j] {
                    None => true,
                    Some(prev) => augment(prev, k, allowed, row_of_col, col_of_row, seen),
                };
                if free {
                    row_of_col[j] = Some(i);
                    col_of_row[i] = Some(j);
                    return true;
                }
            }
        }
        false
    }

    for i in 0..k {
        let mut seen = vec![false; k];
        let ok = augment(i, k, &allowed, &mut row_of_col, &mut col_of_row, &mut seen);
        debug_assert!(ok, "nonzero minor guarantees a full pairing");
        if !ok {
            return Ok(None);
        }
    }

    // The pairing assigns each tail a head; a tree edge used in both
    // directions is replaced by the two loops at its endpoints.
    let mut pairs: Vec<(Var, Var)> = (0..k)
        .map(|i| (rows[i], cols[col_of_row[i].unwrap()]))
        .collect();
    loop {
        let mut swapped = false;
        'scan: for a in 0..pairs.len() {
            for b in (a + 1)..pairs.len() {
                let (ta, ha) = pairs[a];
                let (tb, hb) = pairs[b];
                if ta == hb && tb == ha && ta != ha {
                    pairs[a] = (ta, ta);
                    pairs[b] = (tb, tb);
                    swapped = true;
                    break 'scan;
                }
            }
        }
        if !swapped {
            break;
        }
    }
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for (t, h) in pairs {
        if t == h {
            loops.push(t);
        } else {
            edges.push((t, h));
        }
    }
    Ok(Some(TwoMatching::new(edges, loops)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_two_matchings;
    use crate::tree::{c5, caterpillar, j_tree, path, wired_regular};

    #[test]
    fn laplacian_entries() {
        let p2 = path(2).unwrap();
        let lap = generalized_laplacian_tree(&p2);
        assert_eq!(lap.entry(1, 1).unwrap(), &Polynomial::variable(1));
        assert_eq!(lap.entry(1, 2).unwrap(), &Polynomial::constant(-1));
        assert_eq!(lap.to_string(), "[[x1, -1], [-1, x2]]");

        let w = wired_regular(4, 2).unwrap();
        let lap = generalized_laplacian(&w);
        for leaf in 2..=5 {
            assert_eq!(lap.entry(6, leaf).unwrap(), &Polynomial::constant(-3));
        }

        let c = c5(2).unwrap();
        let lap = generalized_laplacian_tree(&c);
        assert_eq!(lap.entry(5, 7).unwrap(), &Polynomial::constant(-1));
    }

    #[test]
    fn det_p2() {
        let p2 = path(2).unwrap();
        let lap = generalized_laplacian_tree(&p2);
        let d = minor(&lap, &[1, 2], &[1, 2]).unwrap();
        let expected = Polynomial::variable(1)
            .mul(&Polynomial::variable(2))
            .sub(&Polynomial::one());
        assert_eq!(d, expected);
    }

    #[test]
    fn matching_determinant_p3() {
        let p3 = path(3).unwrap();
        let d = matching_determinant(&p3);
        assert_eq!(d.to_string(), "x1*x2*x3 - x1 - x3");
        let lap = generalized_laplacian_tree(&p3);
        assert_eq!(d, minor(&lap, &[1, 2, 3], &[1, 2, 3]).unwrap());
    }

    #[test]
    fn j_branch_determinant() {
        let j = j_tree(5, 4, 3).unwrap();
        let d = principal_minor(&j, &[6, 7, 8]);
        assert_eq!(d.to_string(), "x6*x7*x8 - x6 - x8");
    }

    #[test]
    fn paper_example_minor() {
        let c = caterpillar();
        let m = TwoMatching::new(vec![(3, 2), (2, 5), (7, 6), (6, 8)], vec![1, 9]);
        let d = d_of_matching(&c, &m).unwrap();
        assert_eq!(d.to_string(), "x1*x9");
    }

    #[test]
    fn d_values_by_loop_set() {
        let c = caterpillar();
        // Any loopless maximum 2-matching gives 1.
        let m = TwoMatching::new(vec![(1, 2), (2, 5), (6, 7), (6, 8)], vec![]);
        assert!(d_of_matching(&c, &m).unwrap().is_one());

        let p2 = path(2).unwrap();
        let m = TwoMatching::new(vec![], vec![1, 2]);
        assert_eq!(d_of_matching(&p2, &m).unwrap().to_string(), "x1*x2 - 1");
    }

    #[test]
    fn d_equals_principal_minor_on_loops() {
        let c = caterpillar();
        for j in [4, 5, 6] {
            for m in enumerate_two_matchings(&c, true, j).into_iter().take(200) {
                let d = d_of_matching(&c, &m).unwrap();
                assert_eq!(d, principal_minor(&c, m.loops()));
            }
        }
    }

    #[test]
    fn minor_to_matching_cases() {
        let p3 = path(3).unwrap();
        let got = minor_to_matching(&p3, &[2], &[2]).unwrap().unwrap();
        assert_eq!(got, TwoMatching::new(vec![], vec![2]));

        let c = caterpillar();
        let tails = vec![1, 2, 3, 6, 7, 9];
        let heads = vec![1, 2, 5, 6, 8, 9];
        let got = minor_to_matching(&c, &tails, &heads).unwrap().unwrap();
        let ht = heads_tails(&c, &got).unwrap();
        assert_eq!(ht.tails, tails);
        assert_eq!(ht.heads, heads);
        assert_eq!(got.size(), 6);
    }

    #[test]
    fn minor_symmetry() {
        let c = caterpillar();
        let lap = generalized_laplacian_tree(&c);
        let a = minor(&lap, &[1, 2, 5], &[2, 5, 6]).unwrap();
        let b = minor(&lap, &[2, 5, 6], &[1, 2, 5]).unwrap();
        assert_eq!(a.normalize_sign(), b.normalize_sign());
    }

    #[test]
    fn multilinearity_spot_check() {
        let p3 = path(3).unwrap();
        let lap = generalized_laplacian_tree(&p3);
        let base = minor(&lap, &[1, 2, 3], &[1, 2, 3]).unwrap();
        let mut scaled_rows = Vec::new();
        for (i, &r) in lap.rows().iter().enumerate() {
            let row: Vec<Polynomial> = (0..lap.cols().len())
                .map(|j| {
                    if r == 2 {
                        lap.get(i, j).scale(BigInt::from(5))
                    } else {
                        lap.get(i, j).clone()
                    }
                })
                .collect();
            scaled_rows.push(row);
        }
        let scaled = SymbolicMatrix::new(lap.rows().to_vec(), lap.cols().to_vec(), scaled_rows);
        let d = minor(&scaled, &[1, 2, 3], &[1, 2, 3]).unwrap();
        assert_eq!(d, base.scale(BigInt::from(5)));
    }
}
