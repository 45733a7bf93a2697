//! 2-matchings of trees and of their looped views: validity, enumeration,
//! the 2-matching number via dynamic programming, saturation analysis and
//! minimal 2-matchings.
//!
//! A loop counts twice toward the incidence bound of its vertex but only
//! once toward the size of the matching.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::poly::Var;
use crate::tree::{ordered, Forest, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("edge {0}-{1} is not an edge of the tree")]
    NoSuchEdge(Var, Var),
    #[error("vertex {0} is not a vertex of the tree")]
    NoSuchVertex(Var),
    #[error("not a 2-matching: vertex {0} has incidence {1}")]
    OverCapacity(Var, u32),
    #[error("matching is already minimal")]
    AlreadyMinimal,
}

/// Edge subset of T plus a set of loop vertices (a 2-matching of the looped
/// tree once the incidence bound holds).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoMatching {
    edges: Vec<(Var, Var)>,
    loops: Vec<Var>,
}

impl TwoMatching {
    pub fn new(edges: Vec<(Var, Var)>, loops: Vec<Var>) -> TwoMatching {
        let mut edges: Vec<(Var, Var)> = edges.into_iter().map(|(u, v)| ordered(u, v)).collect();
        edges.sort();
        edges.dedup();
        let mut loops = loops;
        loops.sort();
        loops.dedup();
        TwoMatching { edges, loops }
    }

    pub fn empty() -> TwoMatching {
        TwoMatching {
            edges: Vec::new(),
            loops: Vec::new(),
        }
    }

    pub fn edges(&self) -> &[(Var, Var)] {
        &self.edges
    }

    pub fn loops(&self) -> &[Var] {
        &self.loops
    }

    pub fn size(&self) -> usize {
        self.edges.len() + self.loops.len()
    }

    pub fn has_edge(&self, u: Var, v: Var) -> bool {
        self.edges.binary_search(&ordered(u, v)).is_ok()
    }

    pub fn covered_vertices(&self) -> BTreeSet<Var> {
        let mut s: BTreeSet<Var> = self.loops.iter().copied().collect();
        for &(u, v) in &self.edges {
            s.insert(u);
            s.insert(v);
        }
        s
    }

    /// Textual form: edges "u-v", loops "v!", comma-separated, sorted.
    pub fn text(&self) -> String {
        let mut parts: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{u}-{v}"))
            .collect();
        parts.extend(self.loops.iter().map(|v| format!("{v}!")));
        parts.join(",")
    }

    fn incidences(&self) -> BTreeMap<Var, u32> {
        let mut inc: BTreeMap<Var, u32> = BTreeMap::new();
        for &(u, v) in &self.edges {
            *inc.entry(u).or_insert(0) += 1;
            *inc.entry(v).or_insert(0) += 1;
        }
        for &v in &self.loops {
            *inc.entry(v).or_insert(0) += 2;
        }
        inc
    }
}

/// Endpoint sets of the orientation of the matching's path components;
/// loops contribute their vertex to both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadsTails {
    pub heads: Vec<Var>,
    pub tails: Vec<Var>,
}

fn check_references(tree: &Tree, m: &TwoMatching) -> Result<(), MatchingError> {
    for &(u, v) in m.edges() {
        if !tree.has_edge(u, v) {
            return Err(MatchingError::NoSuchEdge(u, v));
        }
    }
    for &v in m.loops() {
        if v == 0 || v as usize > tree.n() {
            return Err(MatchingError::NoSuchVertex(v));
        }
    }
    Ok(())
}

/// True iff every vertex has at most two incident selected edges, loops
/// counting twice.
pub fn is_two_matching(tree: &Tree, m: &TwoMatching) -> Result<bool, MatchingError> {
    check_references(tree, m)?;
    Ok(m.incidences().values().all(|&c| c <= 2))
}

fn ensure_valid(tree: &Tree, m: &TwoMatching) -> Result<(), MatchingError> {
    check_references(tree, m)?;
    if let Some((&v, &c)) = m.incidences().iter().find(|(_, &c)| c > 2) {
        return Err(MatchingError::OverCapacity(v, c));
    }
    Ok(())
}

/// Per-vertex incidence caps and banned edges for the constrained maximum
/// 2-matching DP.
#[derive(Debug, Clone, Default)]
pub struct Constraints {
    caps: BTreeMap<Var, u8>,
    banned: BTreeSet<(Var, Var)>,
}

impl Constraints {
    pub fn cap(mut self, v: Var, cap: u8) -> Self {
        self.caps.insert(v, cap);
        self
    }

    pub fn ban_edge(mut self, u: Var, v: Var) -> Self {
        self.banned.insert(ordered(u, v));
        self
    }

    fn cap_of(&self, v: Var) -> u8 {
        *self.caps.get(&v).unwrap_or(&2)
    }
}

/// Maximum number of loopless 2-matching edges in a forest, by rooted DP.
/// State per vertex: edges kept toward children, capped at 2 (or the
/// override); the parent edge is available while at most cap-1 child edges
/// are used.
pub fn max_two_matching(forest: &Forest, constraints: &Constraints) -> usize {
    let adj = forest.adjacency();
    let mut total = 0usize;
    let mut visited: BTreeSet<Var> = BTreeSet::new();

    for &root in forest.vertices() {
        if visited.contains(&root) {
            continue;
        }
        // Iterative DFS producing a post-order.
        let mut order: Vec<(Var, Var)> = Vec::new(); // (vertex, parent)
        let mut stack = vec![(root, 0 as Var)];
        visited.insert(root);
        while let Some((v, parent)) = stack.pop() {
            order.push((v, parent));
            for &w in &adj[&v] {
                if w != parent && visited.insert(w) {
                    stack.push((w, v));
                }
            }
        }

        // dp[v] = (best with <= cap-1 child edges, best with <= cap child edges)
        let mut dp: BTreeMap<Var, (i64, i64)> = BTreeMap::new();
        for &(v, parent) in order.iter().rev() {
            let cap = constraints.cap_of(v) as i64;
            let mut base = 0i64;
            let mut gains: Vec<i64> = Vec::new();
            for &c in &adj[&v] {
                if c == parent {
                    continue;
                }
                let (avail, full) = dp[&c];
                base += full;
                if !constraints.banned.contains(&ordered(v, c)) {
                    gains.push(avail + 1 - full);
                }
            }
            gains.sort_unstable_by(|a, b| b.cmp(a));
            let mut best = [base; 3];
            if !gains.is_empty() && gains[0] > 0 {
                best[1] = base + gains[0];
                best[2] = best[1];
                if gains.len() > 1 && gains[1] > 0 {
                    best[2] = best[1] + gains[1];
                }
            }
            let at = |k: i64| -> i64 {
                if k <= 0 {
                    // cap 0 forbids even the parent edge; encode as a large
                    // negative so "avail" is never chosen.
                    if k < 0 {
                        return i64::MIN / 2;
                    }
                    best[0]
                } else {
                    best[k.min(2) as usize]
                }
            };
            dp.insert(v, (at(cap - 1), at(cap)));
        }
        total += dp[&root].1.max(0) as usize;
    }
    total
}

/// The 2-matching number of a tree.
pub fn nu2(tree: &Tree) -> usize {
    nu2_forest(&tree.as_forest())
}

/// The 2-matching number of a forest (sum over components).
pub fn nu2_forest(forest: &Forest) -> usize {
    max_two_matching(forest, &Constraints::default())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    pub vertices: Vec<Var>,
    pub edges: Vec<(Var, Var)>,
}

/// A vertex is saturated when every maximum 2-matching has two incident
/// edges at it; an edge when every maximum 2-matching contains it. Decided
/// by comparing the constrained maximum against the unconstrained one.
pub fn saturation(tree: &Tree) -> Saturation {
    saturation_forest(&tree.as_forest())
}

pub fn saturation_forest(forest: &Forest) -> Saturation {
    let best = nu2_forest(forest);
    let vertices = forest
        .vertices()
        .iter()
        .copied()
        .filter(|&v| max_two_matching(forest, &Constraints::default().cap(v, 1)) < best)
        .collect();
    let edges = forest
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| max_two_matching(forest, &Constraints::default().ban_edge(u, v)) < best)
        .collect();
    Saturation { vertices, edges }
}

pub fn is_vertex_saturated(forest: &Forest, v: Var) -> bool {
    max_two_matching(forest, &Constraints::default().cap(v, 1)) < nu2_forest(forest)
}

pub fn is_edge_saturated(forest: &Forest, u: Var, v: Var) -> bool {
    max_two_matching(forest, &Constraints::default().ban_edge(u, v)) < nu2_forest(forest)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Item {
    Edge(Var, Var),
    Loop(Var),
}

fn backtrack_matchings(
    items: &[Item],
    start: usize,
    inc: &mut BTreeMap<Var, u32>,
    current: &mut (Vec<(Var, Var)>, Vec<Var>),
    j: usize,
    out: &mut Vec<TwoMatching>,
) {
    if current.0.len() + current.1.len() == j {
        out.push(TwoMatching {
            edges: current.0.clone(),
            loops: current.1.clone(),
        });
        return;
    }
    for i in start..items.len() {
        match items[i] {
            Item::Edge(u, v) => {
                if *inc.get(&u).unwrap_or(&0) < 2 && *inc.get(&v).unwrap_or(&0) < 2 {
                    *inc.entry(u).or_insert(0) += 1;
                    *inc.entry(v).or_insert(0) += 1;
                    current.0.push((u, v));
                    backtrack_matchings(items, i + 1, inc, current, j, out);
                    current.0.pop();
                    *inc.get_mut(&u).unwrap() -= 1;
                    *inc.get_mut(&v).unwrap() -= 1;
                }
            }
            Item::Loop(v) => {
                if *inc.get(&v).unwrap_or(&0) == 0 {
                    inc.insert(v, 2);
                    current.1.push(v);
                    backtrack_matchings(items, i + 1, inc, current, j, out);
                    current.1.pop();
                    inc.insert(v, 0);
                }
            }
        }
    }
}

fn matchings_of_items(items: &[Item], j: usize) -> Vec<TwoMatching> {
    let mut out = Vec::new();
    let mut inc = BTreeMap::new();
    backtrack_matchings(
        items,
        0,
        &mut inc,
        &mut (Vec::new(), Vec::new()),
        j,
        &mut out,
    );
    out
}

/// All 2-matchings of T (or of the looped view) of size j, each exactly
/// once, in lexicographic order over the fixed item ordering: tree edges
/// sorted by endpoint pair, then loops sorted by vertex.
pub fn enumerate_two_matchings(tree: &Tree, with_loops: bool, j: usize) -> Vec<TwoMatching> {
    let mut items: Vec<Item> = tree
        .edges()
        .iter()
        .map(|&(u, v)| Item::Edge(u, v))
        .collect();
    if with_loops {
        items.extend(tree.vertices().map(Item::Loop));
    }
    matchings_of_items(&items, j)
}

/// 2-matchings of an arbitrary looped graph given as explicit edge and
/// loopable-vertex lists (used for the recursive restriction checks).
pub fn enumerate_two_matchings_general(
    edges: &[(Var, Var)],
    loopable: &[Var],
    j: usize,
) -> Vec<TwoMatching> {
    let mut sorted_edges: Vec<(Var, Var)> = edges.iter().map(|&(u, v)| ordered(u, v)).collect();
    sorted_edges.sort();
    sorted_edges.dedup();
    let mut sorted_loops = loopable.to_vec();
    sorted_loops.sort();
    sorted_loops.dedup();
    let mut items: Vec<Item> = sorted_edges
        .into_iter()
        .map(|(u, v)| Item::Edge(u, v))
        .collect();
    items.extend(sorted_loops.into_iter().map(Item::Loop));
    matchings_of_items(&items, j)
}

/// A loop set L is realizable at size j when some size-j 2-matching of the
/// looped tree has loop set exactly L, i.e. the tree minus the loop vertices
/// still carries j - |L| matching edges.
pub fn loop_set_realizable(tree: &Tree, loops: &[Var], j: usize) -> bool {
    if loops.len() > j {
        return false;
    }
    let rest = tree.as_forest().without_vertices(loops);
    nu2_forest(&rest) >= j - loops.len()
}

/// True iff no 2-matching of the looped tree of the same size has a strictly
/// smaller loop set (definitional, via the realizability scan over proper
/// subsets of the loop set).
pub fn is_minimal(tree: &Tree, m: &TwoMatching) -> Result<bool, MatchingError> {
    ensure_valid(tree, m)?;
    let j = m.size();
    let loops = m.loops();
    let k = loops.len();
    for mask in 0..(1u64 << k) {
        if mask == (1 << k) - 1 {
            continue;
        }
        let subset: Vec<Var> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| loops[i])
            .collect();
        if loop_set_realizable(tree, &subset, j) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The inclusion-minimal realizable loop sets at size j, sorted.
pub fn minimal_loop_sets(tree: &Tree, j: usize) -> Vec<Vec<Var>> {
    let n = tree.n();
    assert!(n <= 24, "loop-set scan is a desk-scale routine");
    let mut realizable_masks: Vec<u32> = Vec::new();
    for mask in 0..(1u32 << n) {
        if (mask.count_ones() as usize) > j {
            continue;
        }
        let loops: Vec<Var> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| (i + 1) as Var)
            .collect();
        if loop_set_realizable(tree, &loops, j) {
            realizable_masks.push(mask);
        }
    }
    let mut out = Vec::new();
    'outer: for &m in &realizable_masks {
        for &s in &realizable_masks {
            if s != m && s & m == s {
                continue 'outer;
            }
        }
        out.push(
            (0..n)
                .filter(|&i| m >> i & 1 == 1)
                .map(|i| (i + 1) as Var)
                .collect::<Vec<Var>>(),
        );
    }
    out.sort();
    out
}

/// First size-j 2-matching with loop set exactly `loops` in the enumeration
/// order (the representative used for provenance).
pub fn first_matching_with_loops(tree: &Tree, loops: &[Var], j: usize) -> Option<TwoMatching> {
    if loops.len() > j {
        return None;
    }
    let need = j - loops.len();
    let banned: BTreeSet<Var> = loops.iter().copied().collect();
    let items: Vec<Item> = tree
        .edges()
        .iter()
        .filter(|&&(u, v)| !banned.contains(&u) && !banned.contains(&v))
        .map(|&(u, v)| Item::Edge(u, v))
        .collect();
    let mut found = matchings_of_items_first(&items, need)?;
    found.loops = loops.to_vec();
    found.loops.sort();
    Some(found)
}

fn matchings_of_items_first(items: &[Item], j: usize) -> Option<TwoMatching> {
    fn rec(
        items: &[Item],
        start: usize,
        inc: &mut BTreeMap<Var, u32>,
        current: &mut Vec<(Var, Var)>,
        j: usize,
    ) -> Option<Vec<(Var, Var)>> {
        if current.len() == j {
            return Some(current.clone());
        }
        for i in start..items.len() {
            if let Item::Edge(u, v) = items[i] {
                if *inc.get(&u).unwrap_or(&0) < 2 && *inc.get(&v).unwrap_or(&0) < 2 {
                    *inc.entry(u).or_insert(0) += 1;
                    *inc.entry(v).or_insert(0) += 1;
                    current.push((u, v));
                    if let Some(hit) = rec(items, i + 1, inc, current, j) {
                        return Some(hit);
                    }
                    current.pop();
                    *inc.get_mut(&u).unwrap() -= 1;
                    *inc.get_mut(&v).unwrap() -= 1;
                }
            }
        }
        None
    }
    let edges = rec(items, 0, &mut BTreeMap::new(), &mut Vec::new(), j)?;
    Some(TwoMatching::new(edges, Vec::new()))
}

fn matching_sort_key(tree: &Tree, m: &TwoMatching) -> (Vec<usize>, Vec<usize>) {
    let edge_index: BTreeMap<(Var, Var), usize> = tree
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    (
        m.edges().iter().map(|e| edge_index[e]).collect(),
        m.loops().iter().map(|&v| v as usize).collect(),
    )
}

/// The minimal 2-matchings of the looped tree of size j. For j <= nu2 these
/// are exactly the loopless 2-matchings; for j = n-1 they are the leaf-pair
/// paths completed with loops; in between they come from the minimal
/// realizable loop sets.
pub fn enumerate_minimal(tree: &Tree, j: usize) -> Vec<TwoMatching> {
    let n = tree.n();
    if j > n {
        return Vec::new();
    }
    if j == 0 {
        return vec![TwoMatching::empty()];
    }
    let max = nu2(tree);
    let mut out: Vec<TwoMatching> = if j <= max {
        enumerate_two_matchings(tree, false, j)
    } else if j == n - 1 {
        let leaves = tree.leaves();
        let all: BTreeSet<Var> = tree.vertices().collect();
        let mut ms = Vec::new();
        for (a, &u) in leaves.iter().enumerate() {
            for &v in leaves.iter().skip(a + 1) {
                let p = tree.path_between(u, v).expect("leaves exist");
                let on_path: BTreeSet<Var> = p.vertices().iter().copied().collect();
                let loops: Vec<Var> = all.difference(&on_path).copied().collect();
                ms.push(TwoMatching::new(p.edges(), loops));
            }
        }
        ms
    } else {
        let mut ms = Vec::new();
        for loops in minimal_loop_sets(tree, j) {
            let need = j - loops.len();
            let banned: BTreeSet<Var> = loops.iter().copied().collect();
            let items: Vec<Item> = tree
                .edges()
                .iter()
                .filter(|&&(u, v)| !banned.contains(&u) && !banned.contains(&v))
                .map(|&(u, v)| Item::Edge(u, v))
                .collect();
            for mut m in matchings_of_items(&items, need) {
                m.loops = loops.clone();
                ms.push(m);
            }
        }
        ms
    };
    out.sort_by_key(|m| matching_sort_key(tree, m));
    out
}

/// Heads and tails of the arcs obtained by orienting every path component
/// from its smaller-labeled endpoint; loops land in both sets.
pub fn heads_tails(tree: &Tree, m: &TwoMatching) -> Result<HeadsTails, MatchingError> {
    ensure_valid(tree, m)?;
    let mut adj: BTreeMap<Var, Vec<Var>> = BTreeMap::new();
    for &(u, v) in m.edges() {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut heads: Vec<Var> = m.loops().to_vec();
    let mut tails: Vec<Var> = m.loops().to_vec();
    let mut seen: BTreeSet<Var> = BTreeSet::new();
    let mut endpoints: Vec<Var> = adj
        .iter()
        .filter(|(_, nb)| nb.len() == 1)
        .map(|(&v, _)| v)
        .collect();
    endpoints.sort();
    for &start in &endpoints {
        if seen.contains(&start) {
            continue;
        }
        // Walk the path from its smaller endpoint; each arc contributes its
        // source to tails and its target to heads.
        let mut prev = start;
        seen.insert(prev);
        let mut cur = adj[&start][0];
        loop {
            tails.push(prev);
            heads.push(cur);
            seen.insert(cur);
            let next = adj[&cur].iter().copied().find(|&w| w != prev);
            match next {
                Some(w) if !seen.contains(&w) => {
                    prev = cur;
                    cur = w;
                }
                _ => break,
            }
        }
    }
    heads.sort();
    tails.sort();
    Ok(HeadsTails { heads, tails })
}

/// Checks the quoted structural statements exhaustively on one tree; any
/// violation is reported, not thrown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralCheck {
    pub name: &'static str,
    pub instances: usize,
    pub violations: Vec<String>,
}

pub fn structural_checks(tree: &Tree) -> Vec<StructuralCheck> {
    vec![
        check_leaf_path_in_maximal(tree),
        check_delete_vertex_lemma(tree),
        check_saturation_extension(tree),
        check_minimal_restriction(tree),
    ]
}

fn maximal_two_matchings(tree: &Tree) -> Vec<TwoMatching> {
    let mut out = Vec::new();
    for j in 0..=nu2(tree) {
        for m in enumerate_two_matchings(tree, false, j) {
            let inc = m.incidences();
            let extendable = tree.edges().iter().any(|&(u, v)| {
                !m.has_edge(u, v)
                    && *inc.get(&u).unwrap_or(&0) < 2
                    && *inc.get(&v).unwrap_or(&0) < 2
            });
            if !extendable {
                out.push(m);
            }
        }
    }
    out
}

fn check_leaf_path_in_maximal(tree: &Tree) -> StructuralCheck {
    let mut violations = Vec::new();
    let mut instances = 0;
    if tree.n() >= 2 {
        let leaves = tree.leaves();
        for m in maximal_two_matchings(tree) {
            instances += 1;
            let mut found = false;
            'pairs: for (a, &u) in leaves.iter().enumerate() {
                for &v in leaves.iter().skip(a + 1) {
                    let p = tree.path_between(u, v).expect("leaves exist");
                    if p.edges().iter().all(|&(x, y)| m.has_edge(x, y)) {
                        found = true;
                        break 'pairs;
                    }
                }
            }
            if !found {
                violations.push(format!(
                    "maximal matching {} misses every leaf path",
                    m.text()
                ));
            }
        }
    }
    StructuralCheck {
        name: "maximal-contains-leaf-path",
        instances,
        violations,
    }
}

fn check_delete_vertex_lemma(tree: &Tree) -> StructuralCheck {
    let mut violations = Vec::new();
    let mut instances = 0;
    let best = nu2(tree);
    for v in tree.vertices() {
        if tree.n() == 1 {
            break;
        }
        instances += 1;
        let removed = tree.delete_vertex(v).expect("vertex exists");
        let diff = best - nu2_forest(&removed);
        let neighbors = tree.neighbors(v).expect("vertex exists");
        let components = removed.components();
        let comp_of = |w: Var| -> &Forest {
            components
                .iter()
                .find(|c| c.vertices().contains(&w))
                .expect("neighbor survives deletion")
        };
        let all_neighbors_saturated = neighbors
            .iter()
            .all(|&w| is_vertex_saturated(comp_of(w), w));
        let full_forest = tree.as_forest();
        let exists_saturated_pivot = neighbors.iter().any(|&wj| {
            is_edge_saturated(&full_forest, v, wj)
                && neighbors
                    .iter()
                    .filter(|&&wi| wi != wj)
                    .all(|&wi| is_vertex_saturated(comp_of(wi), wi))
        });
        let v_saturated = is_vertex_saturated(&full_forest, v);
        let ok = diff <= 2
            && (all_neighbors_saturated == (diff == 0))
            && (exists_saturated_pivot == (diff == 1))
            && (v_saturated == (diff == 2));
        if !ok {
            violations.push(format!("vertex {v}: nu2 drop {diff}, conditions mismatch"));
        }
    }
    StructuralCheck {
        name: "delete-vertex-lemma",
        instances,
        violations,
    }
}

fn check_saturation_extension(tree: &Tree) -> StructuralCheck {
    let mut violations = Vec::new();
    let mut instances = 0;
    let full = tree.as_forest();
    for &(u, v) in tree.edges() {
        let cut = tree.delete_edge(u, v).expect("edge exists");
        let components = cut.components();
        for &(x, _) in &[(u, v), (v, u)] {
            instances += 1;
            let side = components
                .iter()
                .find(|c| c.vertices().contains(&x))
                .expect("endpoint survives");
            if is_vertex_saturated(side, x) && !is_vertex_saturated(&full, x) {
                violations.push(format!(
                    "vertex {x} saturated in its side of {u}-{v} but not in T"
                ));
            }
        }
    }
    StructuralCheck {
        name: "saturation-extension",
        instances,
        violations,
    }
}

fn restriction_is_minimal(
    edges: &[(Var, Var)],
    loopable: &[Var],
    m_edges: Vec<(Var, Var)>,
    m_loops: Vec<Var>,
) -> bool {
    let m = TwoMatching::new(m_edges, m_loops);
    let j = m.size();
    let same_size = enumerate_two_matchings_general(edges, loopable, j);
    let mine: BTreeSet<Var> = m.loops().iter().copied().collect();
    !same_size.iter().any(|other| {
        let theirs: BTreeSet<Var> = other.loops().iter().copied().collect();
        theirs.is_subset(&mine) && theirs != mine
    })
}

fn check_minimal_restriction(tree: &Tree) -> StructuralCheck {
    let mut violations = Vec::new();
    let mut instances = 0;
    let mut all_minimal = Vec::new();
    for j in 1..=tree.n() {
        all_minimal.extend(enumerate_minimal(tree, j));
    }
    for &(u, v) in tree.edges() {
        let cut = tree.delete_edge(u, v).expect("edge exists");
        let components = cut.components();
        let side_of = |x: Var| -> &Forest {
            components
                .iter()
                .find(|c| c.vertices().contains(&x))
                .expect("endpoint survives")
        };
        let (tu, tv) = (side_of(u), side_of(v));
        for m in &all_minimal {
            instances += 1;
            let restrict = |side: &Forest, with_e: bool| -> (Vec<(Var, Var)>, Vec<Var>) {
                let verts: BTreeSet<Var> = side.vertices().iter().copied().collect();
                let mut es: Vec<(Var, Var)> = m
                    .edges()
                    .iter()
                    .copied()
                    .filter(|&(a, b)| verts.contains(&a) && verts.contains(&b))
                    .collect();
                if with_e && m.has_edge(u, v) {
                    es.push(ordered(u, v));
                }
                let ls: Vec<Var> = m
                    .loops()
                    .iter()
                    .copied()
                    .filter(|w| verts.contains(w))
                    .collect();
                (es, ls)
            };
            let ok = if m.has_edge(u, v) {
                let (eu, lu) = restrict(tu, true);
                let (ev, lv) = restrict(tv, true);
                let mut tu_edges = tu.edges().to_vec();
                tu_edges.push(ordered(u, v));
                let mut tv_edges = tv.edges().to_vec();
                tv_edges.push(ordered(u, v));
                restriction_is_minimal(&tu_edges, tu.vertices(), eu, lu)
                    && restriction_is_minimal(&tv_edges, tv.vertices(), ev, lv)
            } else {
                let (eu, lu) = restrict(tu, false);
                let (ev, lv) = restrict(tv, false);
                restriction_is_minimal(tu.edges(), tu.vertices(), eu, lu)
                    && restriction_is_minimal(tv.edges(), tv.vertices(), ev, lv)
            };
            if !ok {
                violations.push(format!(
                    "minimal matching {} restricts non-minimally across {u}-{v}",
                    m.text()
                ));
            }
        }
    }
    StructuralCheck {
        name: "minimal-restriction-across-edges",
        instances,
        violations,
    }
}
