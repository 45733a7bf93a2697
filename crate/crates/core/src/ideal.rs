//! Critical ideals of trees: generating sets from minimal 2-matchings, the
//! algebraic corank, the expansion of nonminimal minors over minimal ones,
//! the determinant identities as executable checks, and Groebner
//! verification of the path bases.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::laplacian::{
    d_of_matching, generalized_laplacian_tree, matching_determinant_forest, MinorCache, MinorError,
    PrincipalMinors,
};
use crate::matching::{
    enumerate_minimal, first_matching_with_loops, is_minimal, loop_set_realizable, nu2,
    MatchingError, TwoMatching,
};
use crate::poly::{
    groebner_complete, is_groebner_basis, is_reduced_groebner_basis, CompletionError, GeneratorSet,
    Limits, Monomial, Polynomial, Var,
};
use crate::tree::{Forest, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("size index {j} out of range 1..={n}")]
    JOutOfRange { j: usize, n: usize },
    #[error("all-minor enumeration capped at n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
    #[error("no loop admits single-removal elimination from {0:?}")]
    NoEliminableLoop(Vec<Var>),
    #[error("star ideal parameters out of range: m={m}, j={j}")]
    StarRange { m: usize, j: usize },
}

/// One critical ideal I_j(T,X): its generators d(M,X) over the minimal
/// 2-matchings of size j, with one provenance matching per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalIdeal {
    pub j: usize,
    pub generators: GeneratorSet,
    pub provenance: Vec<(Polynomial, TwoMatching)>,
}

/// Generators of I_j(T,X) from the minimal 2-matchings of the looped tree,
/// deduplicated as canonical polynomials. Matchings with equal loop sets
/// yield equal minors; the first matching in enumeration order represents
/// each generator.
pub fn critical_ideal(tree: &Tree, j: usize) -> Result<CriticalIdeal, IdealError> {
    let n = tree.n();
    if j < 1 || j > n {
        return Err(IdealError::JOutOfRange { j, n });
    }
    let mut provenance: Vec<(Polynomial, TwoMatching)> = Vec::new();
    let mut seen: BTreeSet<Vec<Var>> = BTreeSet::new();
    for m in enumerate_minimal(tree, j) {
        if seen.insert(m.loops().to_vec()) {
            let d = d_of_matching(tree, &m)?;
            provenance.push((d, m));
        }
    }
    let generators = GeneratorSet::new(provenance.iter().map(|(d, _)| d.clone()));
    // Keep provenance in the generators' order.
    provenance.sort_by(|(a, _), (b, _)| {
        let la = a.leading_monomial().expect("nonzero generator");
        let lb = b.leading_monomial().expect("nonzero generator");
        crate::poly::deglex_compare(lb, la).then_with(|| b.canonical_cmp(a))
    });
    Ok(CriticalIdeal {
        j,
        generators,
        provenance,
    })
}

pub const ALL_MINOR_LIMIT: usize = 10;

fn combinations(n: usize, k: usize) -> Vec<Vec<Var>> {
    let mut out = Vec::new();
    let mut cur: Vec<Var> = Vec::with_capacity(k);
    fn rec(start: Var, n: Var, k: usize, cur: &mut Vec<Var>, out: &mut Vec<Vec<Var>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n as Var, k, &mut cur, &mut out);
    out
}

/// Brute-force oracle: all nonzero j x j minors of L(T,X), sign-normalized
/// and deduplicated.
pub fn all_minor_ideal(tree: &Tree, j: usize) -> Result<GeneratorSet, IdealError> {
    let n = tree.n();
    if n > ALL_MINOR_LIMIT {
        return Err(IdealError::TooLarge {
            n,
            limit: ALL_MINOR_LIMIT,
        });
    }
    if j < 1 || j > n {
        return Err(IdealError::JOutOfRange { j, n });
    }
    let lap = generalized_laplacian_tree(tree);
    let mut cache = MinorCache::new(&lap)?;
    let sets = combinations(n, j);
    let mut out = GeneratorSet::default();
    for rows in &sets {
        for cols in &sets {
            let d = cache.minor(rows, cols)?;
            if !d.is_zero() {
                out.insert(d.normalize_sign());
            }
        }
    }
    Ok(out)
}

/// The algebraic corank of a tree equals its 2-matching number.
pub fn gamma(tree: &Tree) -> usize {
    nu2(tree)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaCertificate {
    pub gamma: usize,
    pub trivial_at_gamma: bool,
    pub nontrivial_above: bool,
}

impl GammaCertificate {
    pub fn holds(&self) -> bool {
        self.trivial_at_gamma && self.nontrivial_above
    }
}

/// Certifies the corank independently of the combinatorial count: the
/// completed generators at nu2 must contain a unit, the ones at nu2 + 1
/// must not.
pub fn gamma_certified(tree: &Tree, limits: &Limits) -> Result<GammaCertificate, IdealError> {
    let g = gamma(tree);
    let trivial_at_gamma = if g >= 1 {
        let ideal = critical_ideal(tree, g)?;
        groebner_complete(&ideal.generators, limits)?.contains_one()
    } else {
        true
    };
    let nontrivial_above = if g < tree.n() {
        let ideal = critical_ideal(tree, g + 1)?;
        !groebner_complete(&ideal.generators, limits)?.contains_one()
    } else {
        true
    };
    Ok(GammaCertificate {
        gamma: g,
        trivial_at_gamma,
        nontrivial_above,
    })
}

fn loop_set_minimal(
    tree: &Tree,
    loops: &[Var],
    j: usize,
    memo: &mut HashMap<Vec<Var>, bool>,
) -> bool {
    if let Some(&hit) = memo.get(loops) {
        return hit;
    }
    let k = loops.len();
    let mut minimal = loop_set_realizable(tree, loops, j);
    if minimal {
        'masks: for mask in 0..(1u64 << k) {
            if mask == (1 << k) - 1 {
                continue;
            }
            let subset: Vec<Var> = (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| loops[i])
                .collect();
            if loop_set_realizable(tree, &subset, j) {
                minimal = false;
                break 'masks;
            }
        }
    }
    memo.insert(loops.to_vec(), minimal);
    minimal
}

/// Expresses the minor of a nonminimal 2-matching as a polynomial
/// combination of minors of minimal 2-matchings of the same size, through
/// repeated single-loop elimination: d(L) = x_w d(L - w) - sum over
/// neighbors v of w inside L of d(L - {w, v}). The eliminated loop is always
/// the deglex-smallest variable admitting a same-size witness.
pub fn expand_nonminimal(
    tree: &Tree,
    m: &TwoMatching,
) -> Result<Vec<(Polynomial, TwoMatching)>, IdealError> {
    if is_minimal(tree, m)? {
        return Err(IdealError::Matching(MatchingError::AlreadyMinimal));
    }
    let j = m.size();
    let adj = tree.adjacency();
    let mut minimal_memo: HashMap<Vec<Var>, bool> = HashMap::new();
    let mut acc: BTreeMap<Vec<Var>, Polynomial> = BTreeMap::new();

    fn go(
        tree: &Tree,
        adj: &[Vec<Var>],
        loops: Vec<Var>,
        j: usize,
        mult: Polynomial,
        minimal_memo: &mut HashMap<Vec<Var>, bool>,
        acc: &mut BTreeMap<Vec<Var>, Polynomial>,
    ) -> Result<(), IdealError> {
        if loop_set_minimal(tree, &loops, j, minimal_memo) {
            let entry = acc.entry(loops).or_insert_with(Polynomial::zero);
            *entry = entry.add(&mult);
            return Ok(());
        }
        // Deglex-smallest loop variable available for elimination is the
        // largest vertex label whose removal leaves a realizable loop set.
        let w = loops
            .iter()
            .copied()
            .rev()
            .find(|&w| {
                let rest: Vec<Var> = loops.iter().copied().filter(|&x| x != w).collect();
                loop_set_realizable(tree, &rest, j)
            })
            .ok_or_else(|| IdealError::NoEliminableLoop(loops.clone()))?;
        let rest: Vec<Var> = loops.iter().copied().filter(|&x| x != w).collect();
        go(
            tree,
            adj,
            rest.clone(),
            j,
            mult.mul(&Polynomial::variable(w)),
            minimal_memo,
            acc,
        )?;
        for &v in &adj[w as usize] {
            if rest.contains(&v) {
                let smaller: Vec<Var> = rest.iter().copied().filter(|&x| x != v).collect();
                go(tree, adj, smaller, j, mult.neg(), minimal_memo, acc)?;
            }
        }
        Ok(())
    }

    go(
        tree,
        &adj,
        m.loops().to_vec(),
        j,
        Polynomial::one(),
        &mut minimal_memo,
        &mut acc,
    )?;

    let mut out = Vec::new();
    for (loops, coeff) in acc {
        if coeff.is_zero() {
            continue;
        }
        let witness = first_matching_with_loops(tree, &loops, j)
            .ok_or_else(|| IdealError::NoEliminableLoop(loops.clone()))?;
        out.push((coeff, witness));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub instances: usize,
    pub violations: Vec<String>,
}

/// Runs the four determinant identities exhaustively on one tree: edge-set
/// deletion, multiply-by-variable, path product, and path over subpath.
/// Every admissible instance is asserted as exact polynomial equality.
pub fn verify_identities(tree: &Tree) -> Vec<IdentityCheck> {
    let mut pm = PrincipalMinors::new(tree);
    vec![
        check_deletion_identity(tree, &mut pm),
        check_multiply_by_variable(tree, &mut pm),
        check_path_product(tree, &mut pm),
        check_path_over_subpath(tree, &mut pm),
    ]
}

fn vertex_matchings(edges: &[(Var, Var)]) -> Vec<Vec<(Var, Var)>> {
    let mut out = vec![Vec::new()];
    fn rec(
        edges: &[(Var, Var)],
        start: usize,
        used: &mut BTreeSet<Var>,
        cur: &mut Vec<(Var, Var)>,
        out: &mut Vec<Vec<(Var, Var)>>,
    ) {
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if !used.contains(&u) && !used.contains(&v) {
                used.insert(u);
                used.insert(v);
                cur.push((u, v));
                out.push(cur.clone());
                rec(edges, i + 1, used, cur, out);
                cur.pop();
                used.remove(&u);
                used.remove(&v);
            }
        }
    }
    rec(edges, 0, &mut BTreeSet::new(), &mut Vec::new(), &mut out);
    out
}

fn complement_minor(pm: &mut PrincipalMinors, tree: &Tree, removed: &BTreeSet<Var>) -> Polynomial {
    let keep: Vec<Var> = tree.vertices().filter(|v| !removed.contains(v)).collect();
    pm.of(&keep)
}

fn check_deletion_identity(tree: &Tree, pm: &mut PrincipalMinors) -> IdentityCheck {
    let mut violations = Vec::new();
    let mut instances = 0;
    let edges = tree.edges().to_vec();
    let e = edges.len();
    for mask in 0..(1u64 << e) {
        instances += 1;
        let s: Vec<(Var, Var)> = (0..e)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        let remaining: Vec<(Var, Var)> = (0..e)
            .filter(|&i| mask >> i & 1 == 0)
            .map(|i| edges[i])
            .collect();
        let lhs = matching_determinant_forest(&Forest::new(tree.vertices().collect(), remaining));
        let mut rhs = Polynomial::zero();
        for mu in vertex_matchings(&s) {
            let covered: BTreeSet<Var> = mu.iter().flat_map(|&(u, v)| [u, v]).collect();
            rhs = rhs.add(&complement_minor(pm, tree, &covered));
        }
        if lhs != rhs {
            violations.push(format!("edge subset {s:?}"));
        }
    }
    IdentityCheck {
        name: "deletion-identity",
        instances,
        violations,
    }
}

fn check_multiply_by_variable(tree: &Tree, pm: &mut PrincipalMinors) -> IdentityCheck {
    let mut violations = Vec::new();
    let mut instances = 0;
    let n = tree.n();
    let adj = tree.adjacency();
    for mask in 0..(1u64 << n) {
        let loops: Vec<Var> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| (i + 1) as Var)
            .collect();
        let d_loops = pm.of(&loops);
        for w in tree.vertices() {
            if loops.contains(&w) {
                continue;
            }
            instances += 1;
            let lhs = d_loops.mul(&Polynomial::variable(w));
            let mut with_w = loops.clone();
            with_w.push(w);
            let mut rhs = pm.of(&with_w);
            for &v in &adj[w as usize] {
                if loops.contains(&v) {
                    let without: Vec<Var> = loops.iter().copied().filter(|&x| x != v).collect();
                    rhs = rhs.add(&pm.of(&without));
                }
            }
            if lhs != rhs {
                violations.push(format!("loop set {loops:?}, vertex {w}"));
            }
        }
    }
    IdentityCheck {
        name: "multiply-by-variable",
        instances,
        violations,
    }
}

fn all_paths(tree: &Tree) -> Vec<Vec<Var>> {
    let mut out = Vec::new();
    for u in tree.vertices() {
        out.push(vec![u]);
        for v in tree.vertices() {
            if u < v {
                out.push(
                    tree.path_between(u, v)
                        .expect("vertices exist")
                        .vertices()
                        .to_vec(),
                );
            }
        }
    }
    out
}

/// Edges of the tree with at least one endpoint on the given vertex set.
fn incident_edges(tree: &Tree, verts: &BTreeSet<Var>) -> Vec<(Var, Var)> {
    tree.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| verts.contains(&u) || verts.contains(&v))
        .collect()
}

/// The minimal path containing both (disjoint) edges; its ends are the far
/// endpoints of the two edges.
fn path_joining_edges(tree: &Tree, e1: (Var, Var), e2: (Var, Var)) -> Vec<Var> {
    let targets: BTreeSet<Var> = [e1.0, e1.1, e2.0, e2.1].into_iter().collect();
    for x in [e1.0, e1.1] {
        for y in [e2.0, e2.1] {
            let p = tree.path_between(x, y).expect("vertices exist");
            let set: BTreeSet<Var> = p.vertices().iter().copied().collect();
            if targets.is_subset(&set) {
                return p.vertices().to_vec();
            }
        }
    }
    unreachable!("disjoint edges of a tree lie on a common path");
}

/// The minimal path containing the edge and the whole vertex run `q`.
fn path_joining_edge_and_path(tree: &Tree, e: (Var, Var), q: &[Var]) -> Vec<Var> {
    let mut targets: BTreeSet<Var> = q.iter().copied().collect();
    targets.insert(e.0);
    targets.insert(e.1);
    for x in [e.0, e.1] {
        for &y in [q[0], *q.last().unwrap()].iter() {
            let p = tree.path_between(x, y).expect("vertices exist");
            let set: BTreeSet<Var> = p.vertices().iter().copied().collect();
            if targets.is_subset(&set) {
                return p.vertices().to_vec();
            }
        }
    }
    unreachable!("edge and subpath of a tree lie on a common path");
}

fn monomial_of(verts: impl IntoIterator<Item = Var>) -> Polynomial {
    let vars: Vec<Var> = verts.into_iter().collect();
    Polynomial::monomial(1, Monomial::from_vars(&vars))
}

fn check_path_product(tree: &Tree, pm: &mut PrincipalMinors) -> IdentityCheck {
    let mut violations = Vec::new();
    let mut instances = 0;
    for p in all_paths(tree) {
        instances += 1;
        let pset: BTreeSet<Var> = p.iter().copied().collect();
        let lhs = complement_minor(pm, tree, &pset).mul(&monomial_of(p.clone()));

        let s = incident_edges(tree, &pset);
        let mut rhs = pm.of(&tree.vertices().collect::<Vec<_>>());
        for &e in &s {
            let covered: BTreeSet<Var> = [e.0, e.1].into_iter().collect();
            rhs = rhs.add(&complement_minor(pm, tree, &covered));
        }
        for (a, &e1) in s.iter().enumerate() {
            for &e2 in s.iter().skip(a + 1) {
                let touched: BTreeSet<Var> = [e1.0, e1.1, e2.0, e2.1].into_iter().collect();
                if touched.len() < 4 {
                    continue;
                }
                let joining = path_joining_edges(tree, e1, e2);
                let jset: BTreeSet<Var> = joining.iter().copied().collect();
                let interior: Vec<Var> = jset.difference(&touched).copied().collect();
                let term = complement_minor(pm, tree, &jset).mul(&monomial_of(interior));
                rhs = rhs.add(&term);
            }
        }
        if lhs != rhs {
            violations.push(format!("path {p:?}"));
        }
    }
    IdentityCheck {
        name: "path-product",
        instances,
        violations,
    }
}

fn check_path_over_subpath(tree: &Tree, pm: &mut PrincipalMinors) -> IdentityCheck {
    let mut violations = Vec::new();
    let mut instances = 0;
    for p in all_paths(tree) {
        if p.len() < 2 {
            continue;
        }
        for qs in 0..p.len() {
            for qe in qs..p.len() {
                if qs == 0 && qe == p.len() - 1 {
                    continue; // Q must be a strict subpath
                }
                instances += 1;
                let q = &p[qs..=qe];
                let pset: BTreeSet<Var> = p.iter().copied().collect();
                let qset: BTreeSet<Var> = q.iter().copied().collect();

                let lhs = complement_minor(pm, tree, &pset)
                    .mul(&monomial_of(pset.difference(&qset).copied()));

                let left_piece: Vec<Var> = p[..qs].to_vec();
                let right_piece: Vec<Var> = p[qe + 1..].to_vec();
                let off_q = |piece: &[Var]| -> Vec<(Var, Var)> {
                    let verts: BTreeSet<Var> = piece.iter().copied().collect();
                    tree.edges()
                        .iter()
                        .copied()
                        .filter(|&(u, v)| {
                            !qset.contains(&u)
                                && !qset.contains(&v)
                                && (verts.contains(&u) || verts.contains(&v))
                        })
                        .collect()
                };
                let l_edges = off_q(&left_piece);
                let r_edges = off_q(&right_piece);

                let mut rhs = complement_minor(pm, tree, &qset);
                for &e in l_edges.iter().chain(r_edges.iter()) {
                    let joining = path_joining_edge_and_path(tree, e, q);
                    let jset: BTreeSet<Var> = joining.iter().copied().collect();
                    let mut excluded = qset.clone();
                    excluded.insert(e.0);
                    excluded.insert(e.1);
                    let interior: Vec<Var> = jset.difference(&excluded).copied().collect();
                    rhs = rhs.add(&complement_minor(pm, tree, &jset).mul(&monomial_of(interior)));
                }
                for &el in &l_edges {
                    for &er in &r_edges {
                        let joining = path_joining_edges(tree, el, er);
                        let jset: BTreeSet<Var> = joining.iter().copied().collect();
                        let mut excluded = qset.clone();
                        for v in [el.0, el.1, er.0, er.1] {
                            excluded.insert(v);
                        }
                        let interior: Vec<Var> = jset.difference(&excluded).copied().collect();
                        rhs =
                            rhs.add(&complement_minor(pm, tree, &jset).mul(&monomial_of(interior)));
                    }
                }
                if lhs != rhs {
                    violations.push(format!("path {p:?} over {q:?}"));
                }
            }
        }
    }
    IdentityCheck {
        name: "path-over-subpath",
        instances,
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathBasisReport {
    pub leaves: usize,
    pub basis_size: usize,
    pub size_matches: bool,
    pub groebner: bool,
    pub reduced: bool,
}

impl PathBasisReport {
    pub fn holds(&self) -> bool {
        self.size_matches && self.groebner && self.reduced
    }
}

/// Builds B_{n-1} from the leaf pairs, asserts its size is (leaves choose 2)
/// and runs the Buchberger and reducedness checks.
pub fn groebner_check_paths(tree: &Tree) -> Result<PathBasisReport, IdealError> {
    let n = tree.n();
    if n < 2 {
        return Err(IdealError::JOutOfRange { j: 0, n });
    }
    let ideal = critical_ideal(tree, n - 1)?;
    let leaves = tree.leaves().len();
    let expected = leaves * (leaves - 1) / 2;
    let basis_size = ideal.generators.len();
    let groebner = is_groebner_basis(&ideal.generators);
    let reduced = groebner && is_reduced_groebner_basis(&ideal.generators);
    Ok(PathBasisReport {
        leaves,
        basis_size,
        size_matches: basis_size == expected,
        groebner,
        reduced,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureOutcome {
    pub j: usize,
    pub basis_size: usize,
    pub groebner: bool,
    pub reduced: bool,
}

/// Runs the Buchberger check on B_j for the requested sizes; failures are
/// findings to report, not errors.
pub fn conjecture_scan(
    tree: &Tree,
    j: Option<usize>,
) -> Result<Vec<ConjectureOutcome>, IdealError> {
    let js: Vec<usize> = match j {
        Some(j) => vec![j],
        None => (1..=tree.n()).collect(),
    };
    let mut out = Vec::new();
    for j in js {
        let ideal = critical_ideal(tree, j)?;
        let groebner = is_groebner_basis(&ideal.generators);
        let reduced = groebner && is_reduced_groebner_basis(&ideal.generators);
        out.push(ConjectureOutcome {
            j,
            basis_size: ideal.generators.len(),
            groebner,
            reduced,
        });
    }
    Ok(out)
}

/// Closed-form generators for the star S(m) (leaves 1..m, root m+1): all
/// squarefree degree-(j-2) monomials in the leaf variables for j <= m, and
/// the full determinant for j = m+1.
pub fn star_ideal(m: usize, j: usize) -> Result<GeneratorSet, IdealError> {
    if m < 3 || j < 3 || j > m + 1 {
        return Err(IdealError::StarRange { m, j });
    }
    if j == m + 1 {
        let root = (m + 1) as Var;
        let leaves: Vec<Var> = (1..=m as Var).collect();
        let mut det =
            Polynomial::monomial(1, Monomial::from_vars(&leaves)).mul(&Polynomial::variable(root));
        for skip in 1..=m as Var {
            let rest: Vec<Var> = (1..=m as Var).filter(|&v| v != skip).collect();
            det = det.sub(&Polynomial::monomial(1, Monomial::from_vars(&rest)));
        }
        return Ok(GeneratorSet::new([det]));
    }
    let k = j - 2;
    let gens = combinations(m, k)
        .into_iter()
        .map(|vars| Polynomial::monomial(1, Monomial::from_vars(&vars)));
    Ok(GeneratorSet::new(gens))
}

/// Containment certificate used by the oracle-equivalence sweeps: every
/// polynomial of `members` strong-reduces to zero modulo the completion of
/// `gens`.
pub fn reduces_to_zero_under_completion(
    gens: &GeneratorSet,
    members: &GeneratorSet,
    limits: &Limits,
) -> Result<bool, IdealError> {
    let completed = groebner_complete(gens, limits)?;
    Ok(members
        .iter()
        .all(|p| crate::poly::strong_reduce(p, &completed).1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_two_matchings;
    use crate::poly::strong_reduce;
    use crate::tree::{c5, caterpillar, j_tree, path, star};

    #[test]
    fn j543_ideal() {
        let t = j_tree(5, 4, 3).unwrap();
        let ideal = critical_ideal(&t, 9).unwrap();
        let strings: Vec<String> = ideal.generators.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            strings,
            vec![
                "x1*x2*x3*x4 - x1*x2 - x1*x4 - x3*x4 + 1",
                "x6*x7*x8 - x6 - x8",
                "x9*x10 - 1",
            ]
        );
    }

    #[test]
    fn c5_ideal_at_m_plus_3() {
        let m = 6;
        let t = c5(m).unwrap();
        let ideal = critical_ideal(&t, m + 3).unwrap();
        let mut expected = GeneratorSet::new([
            Polynomial::variable(1),
            Polynomial::variable(2),
            Polynomial::variable(3),
            Polynomial::variable(4),
        ]);
        let interior = crate::tree::c5_interior(m);
        expected.insert(crate::laplacian::principal_minor(&t, &interior));
        assert_eq!(ideal.generators, expected);
    }

    #[test]
    fn trivial_below_nu2() {
        let t = caterpillar();
        for j in 1..=nu2(&t) {
            let ideal = critical_ideal(&t, j).unwrap();
            assert!(ideal.generators.contains_one(), "j={j}");
            assert_eq!(ideal.generators.len(), 1);
        }
        assert!(!critical_ideal(&t, nu2(&t) + 1)
            .unwrap()
            .generators
            .contains_one());
    }

    #[test]
    fn all_minor_j1_p3() {
        let t = path(3).unwrap();
        let set = all_minor_ideal(&t, 1).unwrap();
        let expected = GeneratorSet::new([
            Polynomial::variable(1),
            Polynomial::variable(2),
            Polynomial::variable(3),
            Polynomial::one(),
        ]);
        assert_eq!(set, expected);
    }

    #[test]
    fn gamma_examples() {
        for n in 2..=7 {
            assert_eq!(gamma(&path(n).unwrap()), n - 1);
        }
        for m in 3..=6 {
            assert_eq!(gamma(&star(m).unwrap()), 2);
        }
        let cert = gamma_certified(&caterpillar(), &Limits::default()).unwrap();
        assert!(cert.holds());
        assert_eq!(cert.gamma, 4);
    }

    #[test]
    fn star_ideal_examples() {
        let s = star_ideal(4, 3).unwrap();
        let expected = GeneratorSet::new((1..=4).map(Polynomial::variable));
        assert_eq!(s, expected);

        assert_eq!(star_ideal(4, 4).unwrap().len(), 6);

        let s = star_ideal(3, 4).unwrap();
        assert_eq!(s.len(), 1);
        let det = s.iter().next().unwrap();
        assert_eq!(det.to_string(), "x1*x2*x3*x4 - x1*x2 - x1*x3 - x2*x3");
    }

    #[test]
    fn star_ideal_matches_critical_ideal() {
        for m in 3..=5 {
            let t = star(m).unwrap();
            for j in 3..=m + 1 {
                assert_eq!(
                    star_ideal(m, j).unwrap(),
                    critical_ideal(&t, j).unwrap().generators,
                    "m={m} j={j}"
                );
            }
        }
    }

    #[test]
    fn expansion_reproduces_value() {
        let t = caterpillar();
        let m = TwoMatching::new(vec![], vec![1, 2, 3, 4, 5, 6]);
        let d = d_of_matching(&t, &m).unwrap();
        let expansion = expand_nonminimal(&t, &m).unwrap();
        let mut total = Polynomial::zero();
        for (coeff, witness) in &expansion {
            assert!(is_minimal(&t, witness).unwrap());
            total = total.add(&coeff.mul(&d_of_matching(&t, witness).unwrap()));
        }
        assert_eq!(total, d);
    }

    #[test]
    fn expansion_rejects_minimal() {
        let t = caterpillar();
        let m = TwoMatching::new(vec![(1, 2), (2, 5), (5, 6), (6, 9)], vec![3]);
        assert_eq!(
            expand_nonminimal(&t, &m),
            Err(IdealError::Matching(MatchingError::AlreadyMinimal))
        );
    }

    #[test]
    fn nonminimal_reduce_to_zero_caterpillar() {
        let t = caterpillar();
        let j = 6;
        let basis = critical_ideal(&t, j).unwrap().generators;
        for m in enumerate_two_matchings(&t, true, j) {
            if is_minimal(&t, &m).unwrap() {
                continue;
            }
            let d = d_of_matching(&t, &m).unwrap();
            let (_, zero) = strong_reduce(&d, &basis);
            assert!(zero, "nonminimal {} failed to reduce", m.text());
        }
    }

    #[test]
    fn identities_on_caterpillar() {
        for check in verify_identities(&path(5).unwrap()) {
            assert!(
                check.violations.is_empty(),
                "{}: {:?}",
                check.name,
                check.violations
            );
        }
        for check in verify_identities(&caterpillar()) {
            assert!(
                check.violations.is_empty(),
                "{}: {:?}",
                check.name,
                check.violations
            );
        }
    }

    #[test]
    fn groebner_paths_examples() {
        let t = j_tree(5, 4, 3).unwrap();
        let report = groebner_check_paths(&t).unwrap();
        assert!(report.holds());
        assert_eq!(report.basis_size, 3);

        for n in 2..=6 {
            let report = groebner_check_paths(&path(n).unwrap()).unwrap();
            assert!(report.holds());
            assert_eq!(report.basis_size, 1);
        }
    }

    #[test]
    fn conjecture_scan_runs() {
        let t = star(3).unwrap();
        let outcomes = conjecture_scan(&t, None).unwrap();
        assert_eq!(outcomes.len(), 4);
        for o in &outcomes {
            assert!(o.groebner, "j={} failed Buchberger", o.j);
        }
    }
}
