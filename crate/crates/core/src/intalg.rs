//! Exact integer linear algebra: Smith normal form with optional unimodular
//! transforms, critical groups of multigraphs and arithmetical graphs,
//! wired regular trees, the closed-form 2-matching counts for regular trees,
//! and evaluation of symbolic ideals at integer points.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::matching::nu2;
use crate::poly::{GeneratorSet, PolyError, Var};
use crate::tree::{regular_branch, regular_tree, wired_regular, GraphError, MultiGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntAlgError {
    #[error("matrix dimensions must be positive")]
    EmptyMatrix,
    #[error("vector length {got} does not match vertex count {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("matrix of size {n} exceeds the desk-scale cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Dense rectangular matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(data: Vec<Vec<BigInt>>) -> Result<IntMatrix, IntAlgError> {
        let rows = data.len();
        if rows == 0 || data[0].is_empty() {
            return Err(IntAlgError::EmptyMatrix);
        }
        let cols = data[0].len();
        if data.iter().any(|r| r.len() != cols) {
            return Err(IntAlgError::EmptyMatrix);
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_fn<F: Fn(usize, usize) -> BigInt>(rows: usize, cols: usize, f: F) -> IntMatrix {
        let data = (0..rows)
            .map(|i| (0..cols).map(|j| f(i, j)).collect())
            .collect();
        IntMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> IntMatrix {
        IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        IntMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| &self.data[i][k] * &other.data[k][j])
                .sum()
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self.data[i][j] * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            for row in a.iter_mut().skip(k + 1) {
                row[k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Invariant factors (zeros trailing) plus the optional unimodular
/// transforms with U * M * V equal to the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
}

struct SnfState {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl SnfState {
    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        self.a.swap(i, k);
        if let Some(u) = &mut self.u {
            u.data.swap(i, k);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for row in &mut self.a {
            row.swap(j, k);
        }
        if let Some(v) = &mut self.v {
            for row in &mut v.data {
                row.swap(j, k);
            }
        }
    }

    /// row i -= q * row k
    fn row_sub(&mut self, i: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let d = q * &self.a[k][j];
            self.a[i][j] -= d;
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols {
                let d = q * &u.data[k][j];
                u.data[i][j] -= d;
            }
        }
    }

    /// col j -= q * col k
    fn col_sub(&mut self, j: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let d = q * &self.a[i][k];
            self.a[i][j] -= d;
        }
        if let Some(v) = &mut self.v {
            for i in 0..v.rows {
                let d = q * &v.data[i][k];
                v.data[i][j] -= d;
            }
        }
    }

    /// row i += row k
    fn row_add(&mut self, i: usize, k: usize) {
        for j in 0..self.cols {
            let d = self.a[k][j].clone();
            self.a[i][j] += d;
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols {
                let d = u.data[k][j].clone();
                u.data[i][j] += d;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let d = -self.a[i][j].clone();
            self.a[i][j] = d;
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols {
                let d = -u.data[i][j].clone();
                u.data[i][j] = d;
            }
        }
    }

    /// Diagonalizes the trailing submatrix starting at index `from` by
    /// smallest-pivot Euclidean elimination.
    fn diagonalize(&mut self, from: usize) {
        let k = self.rows.min(self.cols);
        for t in from..k {
            // Smallest nonzero |entry| in the trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..self.rows {
                for j in t..self.cols {
                    if self.a[i][j].is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if self.a[pi][pj].abs() <= self.a[i][j].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = &self.a[i][t] / &self.a[t][t];
                    self.row_sub(i, t, &q);
                    if !self.a[i][t].is_zero() {
                        // Remainder is strictly smaller; make it the pivot.
                        self.swap_rows(t, i);
                    }
                    clean = false;
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = &self.a[t][j] / &self.a[t][t];
                    self.col_sub(j, t, &q);
                    if !self.a[t][j].is_zero() {
                        self.swap_cols(t, j);
                    }
                    clean = false;
                }
                if clean {
                    break;
                }
            }
        }
    }
}

/// Smith normal form by smallest-pivot elimination with a divisibility
/// repair pass; arbitrary precision throughout.
pub fn smith_normal_form(m: &IntMatrix, want_transforms: bool) -> SmithNormalForm {
    let mut st = SnfState {
        a: m.data.clone(),
        rows: m.rows,
        cols: m.cols,
        u: want_transforms.then(|| IntMatrix::identity(m.rows)),
        v: want_transforms.then(|| IntMatrix::identity(m.cols)),
    };
    st.diagonalize(0);
    let k = m.rows.min(m.cols);
    for t in 0..k {
        if st.a[t][t].is_negative() {
            st.negate_row(t);
        }
    }
    // Repair the divisibility chain pairwise.
    loop {
        let mut violation = None;
        for t in 0..k.saturating_sub(1) {
            let (a, b) = (&st.a[t][t], &st.a[t + 1][t + 1]);
            if !a.is_zero() && !b.is_zero() && !(b % a).is_zero() {
                violation = Some(t);
                break;
            }
        }
        let Some(t) = violation else {
            break;
        };
        st.row_add(t, t + 1);
        st.diagonalize(t);
        for i in t..k {
            if st.a[i][i].is_negative() {
                st.negate_row(i);
            }
        }
    }
    let factors: Vec<BigInt> = (0..k).map(|t| st.a[t][t].clone()).collect();
    let rank = factors.iter().filter(|d| !d.is_zero()).count();
    SmithNormalForm {
        factors,
        rank,
        u: st.u,
        v: st.v,
    }
}

/// Abelian group described by its invariant factors > 1 (divisibility order)
/// and its free rank. Printed as "Z_a ⊕ Z_b ⊕ Z^r", or "0" when trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianGroup {
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Number of nontrivial invariant factors.
    pub fn rank(&self) -> usize {
        self.torsion.len()
    }

    /// The critical group proper is the torsion part; "0" when trivial.
    pub fn torsion_string(&self) -> String {
        if self.torsion.is_empty() {
            "0".to_string()
        } else {
            self.torsion
                .iter()
                .map(|d| format!("Z_{d}"))
                .collect::<Vec<_>>()
                .join(" ⊕ ")
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z_{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Diag(d) - A for a multigraph and an explicit integer vector d (indexed by
/// vertex label minus one).
pub fn diag_minus_adjacency(g: &MultiGraph, d: &[BigInt]) -> Result<IntMatrix, IntAlgError> {
    let n = g.n();
    if d.len() != n {
        return Err(IntAlgError::LengthMismatch {
            got: d.len(),
            expected: n,
        });
    }
    Ok(IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            d[i].clone()
        } else {
            -BigInt::from(g.multiplicity((i + 1) as Var, (j + 1) as Var))
        }
    }))
}

/// The ordinary Laplacian Diag(deg) - A, degrees counting multiplicities.
pub fn laplacian_matrix(g: &MultiGraph) -> IntMatrix {
    let d: Vec<BigInt> = (1..=g.n() as Var)
        .map(|v| BigInt::from(g.degree(v)))
        .collect();
    diag_minus_adjacency(g, &d).expect("degree vector has the right length")
}

/// A graph with positive integer vectors d, r satisfying (Diag(d) - A) r = 0
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticalGraph {
    pub graph: MultiGraph,
    pub d: Vec<BigInt>,
    pub r: Vec<BigInt>,
}

impl ArithmeticalGraph {
    pub fn new(
        graph: MultiGraph,
        d: Vec<BigInt>,
        r: Vec<BigInt>,
    ) -> Result<ArithmeticalGraph, IntAlgError> {
        if !validate_arithmetical(&graph, &d, &r)? {
            return Err(IntAlgError::BadParameter("(Diag(d) - A) r != 0".into()));
        }
        if d.iter().chain(r.iter()).any(|x| !x.is_positive()) {
            return Err(IntAlgError::BadParameter(
                "arithmetical vectors must be positive".into(),
            ));
        }
        Ok(ArithmeticalGraph { graph, d, r })
    }

    pub fn matrix(&self) -> IntMatrix {
        diag_minus_adjacency(&self.graph, &self.d).expect("validated lengths")
    }
}

/// Exact check of (Diag(d) - A) r = 0.
pub fn validate_arithmetical(
    graph: &MultiGraph,
    d: &[BigInt],
    r: &[BigInt],
) -> Result<bool, IntAlgError> {
    let n = graph.n();
    if r.len() != n {
        return Err(IntAlgError::LengthMismatch {
            got: r.len(),
            expected: n,
        });
    }
    let m = diag_minus_adjacency(graph, d)?;
    Ok(m.mul_vec(r).iter().all(|x| x.is_zero()))
}

/// The natural arithmetical structure: d = degree vector, r = all ones.
pub fn natural_arithmetical(graph: &MultiGraph) -> ArithmeticalGraph {
    let d: Vec<BigInt> = (1..=graph.n() as Var)
        .map(|v| BigInt::from(graph.degree(v)))
        .collect();
    let r = vec![BigInt::one(); graph.n()];
    ArithmeticalGraph::new(graph.clone(), d, r).expect("degree structure is arithmetical")
}

/// The Kodaira-type structure on C_{5,m}: d all twos, r one on the four
/// leaves and two elsewhere.
pub fn c5_arithmetical(m: usize) -> Result<ArithmeticalGraph, IntAlgError> {
    let tree = crate::tree::c5(m)?;
    let n = tree.n();
    let d = vec![BigInt::from(2); n];
    let r: Vec<BigInt> = (1..=n as Var)
        .map(|v| {
            if v <= 4 {
                BigInt::one()
            } else {
                BigInt::from(2)
            }
        })
        .collect();
    ArithmeticalGraph::new(tree.to_multigraph(), d, r)
}

/// Torsion part of the cokernel of Diag(d) - A; the free rank of the
/// cokernel is reported alongside.
pub fn critical_group(m: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m, false);
    let torsion: Vec<BigInt> = snf
        .factors
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    let free_rank = snf.factors.iter().filter(|d| d.is_zero()).count();
    AbelianGroup { torsion, free_rank }
}

/// Critical group of a connected multigraph with its degree structure.
pub fn critical_group_of_graph(g: &MultiGraph) -> Result<AbelianGroup, IntAlgError> {
    if !g.is_connected() {
        return Err(IntAlgError::Disconnected);
    }
    Ok(critical_group(&laplacian_matrix(g)))
}

pub fn critical_group_of_arithmetical(a: &ArithmeticalGraph) -> Result<AbelianGroup, IntAlgError> {
    if !a.graph.is_connected() {
        return Err(IntAlgError::Disconnected);
    }
    Ok(critical_group(&a.matrix()))
}

fn pow_u128(base: u128, exp: u32) -> u128 {
    base.pow(exp)
}

/// Closed form for nu2 of the pruned regular tree T'(d,h), h >= 2.
pub fn nu2_branch_closed_form(d: usize, h: usize) -> Result<u128, IntAlgError> {
    if d < 3 || h < 2 {
        return Err(IntAlgError::BadParameter(format!(
            "branch closed form needs d >= 3, h >= 2 (got d={d}, h={h})"
        )));
    }
    let dm1 = (d - 1) as u128;
    let num = if h.is_multiple_of(2) {
        2 * (pow_u128(dm1, h as u32 + 1) - dm1)
    } else {
        2 * (pow_u128(dm1, h as u32 + 1) - 1)
    };
    let den = dm1 * dm1 - 1;
    debug_assert_eq!(num % den, 0);
    Ok(num / den)
}

/// Closed form for nu2 of the full regular tree T(d,h), h >= 3.
pub fn nu2_full_closed_form(d: usize, h: usize) -> Result<u128, IntAlgError> {
    if d < 3 || h < 3 {
        return Err(IntAlgError::BadParameter(format!(
            "full closed form needs d >= 3, h >= 3 (got d={d}, h={h})"
        )));
    }
    let dm1 = (d - 1) as u128;
    let num = 2 * (pow_u128(dm1, h as u32) - 1);
    let den = (d - 2) as u128;
    debug_assert_eq!(num % den, 0);
    Ok(num / den)
}

/// Measured data for one wired construction, next to the values the
/// literature claims. Nothing here asserts the claimed figures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiredVariant {
    pub n_wired: usize,
    pub factors: Vec<BigInt>,
    pub rank_measured: usize,
    pub first_nontrivial: Option<BigInt>,
    pub rank_claimed: u128,
    pub rank_from_base_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiredReport {
    pub d: usize,
    pub h: usize,
    pub standard: WiredVariant,
    pub levine: WiredVariant,
}

const WIRED_SIZE_CAP: usize = 400;

fn wired_variant(
    graph: &MultiGraph,
    base_n: usize,
    base_nu2: usize,
    claimed: u128,
) -> Result<WiredVariant, IntAlgError> {
    if graph.n() > WIRED_SIZE_CAP {
        return Err(IntAlgError::SizeCap {
            n: graph.n(),
            cap: WIRED_SIZE_CAP,
        });
    }
    let group = critical_group_of_graph(graph)?;
    Ok(WiredVariant {
        n_wired: graph.n(),
        first_nontrivial: group.torsion.first().cloned(),
        rank_measured: group.rank(),
        factors: group.torsion,
        rank_claimed: claimed,
        rank_from_base_count: base_n - base_nu2,
    })
}

/// Builds the wired tree of T(d,h) (and the rooted variant), measures the
/// critical group, and reports the measured rank next to both the claimed
/// (d-1)^h figure and the base-tree count n - nu2 that the construction
/// itself predicts.
pub fn wired_tree_report(d: usize, h: usize) -> Result<WiredReport, IntAlgError> {
    if d < 4 || h < 2 {
        return Err(IntAlgError::BadParameter(format!(
            "wired report needs d >= 4, h >= 2 (got d={d}, h={h})"
        )));
    }
    let claimed = pow_u128((d - 1) as u128, h as u32);

    let base = regular_tree(d, h - 1)?;
    let standard = wired_variant(&wired_regular(d, h)?, base.n(), nu2(&base), claimed)?;

    let lbase = regular_branch(d, h - 1)?;
    let levine = wired_variant(
        &crate::tree::levine_wired(d, h)?,
        lbase.n(),
        nu2(&lbase),
        claimed,
    )?;

    Ok(WiredReport {
        d,
        h,
        standard,
        levine,
    })
}

/// Nonnegative gcd of the generators evaluated at an integer point; zero iff
/// all vanish.
pub fn evaluate_ideal(
    gens: &GeneratorSet,
    assignment: &BTreeMap<Var, BigInt>,
) -> Result<BigInt, PolyError> {
    let mut g = BigInt::zero();
    for p in gens.iter() {
        g = g.gcd(&p.eval(assignment)?);
    }
    Ok(g)
}

/// Number of spanning trees via one principal cofactor of the integer
/// Laplacian.
pub fn spanning_tree_count(g: &MultiGraph) -> Result<BigInt, IntAlgError> {
    if !g.is_connected() {
        return Err(IntAlgError::Disconnected);
    }
    if g.n() == 1 {
        return Ok(BigInt::one());
    }
    let lap = laplacian_matrix(g);
    let n = g.n();
    let cof = IntMatrix::from_fn(n - 1, n - 1, |i, j| lap.get(i + 1, j + 1).clone());
    Ok(cof.determinant())
}
