//! Trees, forests and multigraphs with vertex labels 1..=n, the named graph
//! families, and labeled-tree generation for exhaustive test sweeps.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("empty input")]
    Empty,
    #[error("bad vertex count: {0}")]
    BadVertexCount(String),
    #[error("malformed edge line {line}: {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("vertex label {0} out of range 1..={1}")]
    LabelOutOfRange(Var, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Var),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Var, Var),
    #[error("edge multiplicity only legal in multigraph mode (line {0})")]
    MultiplicityInTree(usize),
    #[error("edge count {found} does not match tree requirement {expected}")]
    WrongEdgeCount { found: usize, expected: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph contains a cycle")]
    Cyclic,
    #[error("vertex {0} does not exist")]
    NoSuchVertex(Var),
    #[error("edge {0}-{1} does not exist")]
    NoSuchEdge(Var, Var),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("exhaustive enumeration limited to n <= {limit}, got {n}")]
    EnumerationTooLarge { n: usize, limit: usize },
}

pub fn ordered(u: Var, v: Var) -> (Var, Var) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A vertex-labeled tree on vertices 1..=n. Edges are stored as ordered
/// pairs (u < v), sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(Var, Var)>,
}

impl Tree {
    pub fn new(n: usize, edges: Vec<(Var, Var)>) -> Result<Tree, GraphError> {
        if n == 0 {
            return Err(GraphError::BadVertexCount("0".into()));
        }
        let mut sorted: Vec<(Var, Var)> = Vec::with_capacity(edges.len());
        let mut seen: BTreeSet<(Var, Var)> = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w == 0 || w as usize > n {
                    return Err(GraphError::LabelOutOfRange(w, n));
                }
            }
            let e = ordered(u, v);
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            sorted.push(e);
        }
        if sorted.len() != n - 1 {
            return Err(GraphError::WrongEdgeCount {
                found: sorted.len(),
                expected: n - 1,
            });
        }
        sorted.sort();
        let t = Tree { n, edges: sorted };
        // With n-1 edges, connectivity rules out cycles.
        if t.reachable_from(1).len() != n {
            return Err(if t.has_cycle() {
                GraphError::Cyclic
            } else {
                GraphError::Disconnected
            });
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Var> {
        1..=self.n as Var
    }

    pub fn edges(&self) -> &[(Var, Var)] {
        &self.edges
    }

    pub fn has_edge(&self, u: Var, v: Var) -> bool {
        self.edges.binary_search(&ordered(u, v)).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<Var>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj
    }

    fn reachable_from(&self, start: Var) -> BTreeSet<Var> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u as usize] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    fn has_cycle(&self) -> bool {
        // Union-find over the edge list.
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (
                find(parent.as_mut_slice(), u as usize),
                find(parent.as_mut_slice(), v as usize),
            );
            if ru == rv {
                return true;
            }
            parent[ru] = rv;
        }
        false
    }

    pub fn degree(&self, v: Var) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count())
    }

    pub fn leaves(&self) -> Vec<Var> {
        if self.n == 1 {
            return vec![1];
        }
        self.vertices()
            .filter(|&v| self.degree(v).unwrap() == 1)
            .collect()
    }

    fn check_vertex(&self, v: Var) -> Result<(), GraphError> {
        if v == 0 || v as usize > self.n {
            return Err(GraphError::NoSuchVertex(v));
        }
        Ok(())
    }

    pub fn neighbors(&self, v: Var) -> Result<Vec<Var>, GraphError> {
        self.check_vertex(v)?;
        let mut out: Vec<Var> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// The unique tree path from u to v, inclusive.
    pub fn path_between(&self, u: Var, v: Var) -> Result<PathSpec, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let adj = self.adjacency();
        let mut parent: Vec<Option<Var>> = vec![None; self.n + 1];
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([u]);
        seen[u as usize] = true;
        while let Some(w) = queue.pop_front() {
            if w == v {
                break;
            }
            for &z in &adj[w as usize] {
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    parent[z as usize] = Some(w);
                    queue.push_back(z);
                }
            }
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur as usize].expect("tree is connected");
            path.push(cur);
        }
        path.reverse();
        Ok(PathSpec { vertices: path })
    }

    pub fn delete_edge(&self, u: Var, v: Var) -> Result<Forest, GraphError> {
        let e = ordered(u, v);
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(e.0, e.1));
        }
        Ok(Forest {
            vertices: self.vertices().collect(),
            edges: self.edges.iter().copied().filter(|&f| f != e).collect(),
        })
    }

    pub fn delete_vertex(&self, v: Var) -> Result<Forest, GraphError> {
        self.check_vertex(v)?;
        Ok(Forest {
            vertices: self.vertices().filter(|&w| w != v).collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| a != v && b != v)
                .collect(),
        })
    }

    /// Subgraph induced by the given vertices, original labels retained.
    pub fn induced(&self, keep: &[Var]) -> Result<Forest, GraphError> {
        let set: BTreeSet<Var> = keep.iter().copied().collect();
        for &v in &set {
            self.check_vertex(v)?;
        }
        Ok(Forest {
            vertices: set.iter().copied().collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| set.contains(&a) && set.contains(&b))
                .collect(),
        })
    }

    pub fn as_forest(&self) -> Forest {
        Forest {
            vertices: self.vertices().collect(),
            edges: self.edges.clone(),
        }
    }

    pub fn to_multigraph(&self) -> MultiGraph {
        let mut mult = BTreeMap::new();
        for &e in &self.edges {
            mult.insert(e, 1u64);
        }
        MultiGraph { n: self.n, mult }
    }

    /// Compact identifier used in reports: "n:u-v,u-v,...".
    pub fn id(&self) -> String {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{u}-{v}"))
            .collect();
        format!("{}:{}", self.n, edges.join(","))
    }
}

/// A forest that remembers its original vertex labels (the result of
/// deletions and induced subgraphs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    vertices: Vec<Var>,
    edges: Vec<(Var, Var)>,
}

impl Forest {
    pub fn new(vertices: Vec<Var>, edges: Vec<(Var, Var)>) -> Forest {
        let mut vertices = vertices;
        vertices.sort();
        vertices.dedup();
        let mut edges: Vec<(Var, Var)> = edges.into_iter().map(|(u, v)| ordered(u, v)).collect();
        edges.sort();
        edges.dedup();
        Forest { vertices, edges }
    }

    pub fn vertices(&self) -> &[Var] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(Var, Var)] {
        &self.edges
    }

    pub fn adjacency(&self) -> BTreeMap<Var, Vec<Var>> {
        let mut adj: BTreeMap<Var, Vec<Var>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(u, v) in &self.edges {
            adj.get_mut(&u).unwrap().push(v);
            adj.get_mut(&v).unwrap().push(u);
        }
        adj
    }

    pub fn components(&self) -> Vec<Forest> {
        let adj = self.adjacency();
        let mut seen: BTreeSet<Var> = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[&u] {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            let comp_set: BTreeSet<Var> = comp.iter().copied().collect();
            out.push(Forest::new(
                comp,
                self.edges
                    .iter()
                    .copied()
                    .filter(|(u, _)| comp_set.contains(u))
                    .collect(),
            ));
        }
        out
    }

    pub fn without_vertices(&self, drop: &[Var]) -> Forest {
        let drop: BTreeSet<Var> = drop.iter().copied().collect();
        Forest::new(
            self.vertices
                .iter()
                .copied()
                .filter(|v| !drop.contains(v))
                .collect(),
            self.edges
                .iter()
                .copied()
                .filter(|(u, v)| !drop.contains(u) && !drop.contains(v))
                .collect(),
        )
    }
}

/// An ordered vertex sequence forming a path in some tree; a single vertex
/// is a path of length zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSpec {
    vertices: Vec<Var>,
}

impl PathSpec {
    pub fn new(tree: &Tree, vertices: Vec<Var>) -> Result<PathSpec, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let set: BTreeSet<Var> = vertices.iter().copied().collect();
        if set.len() != vertices.len() {
            return Err(GraphError::BadParameter("repeated path vertex".into()));
        }
        for w in vertices.windows(2) {
            if !tree.has_edge(w[0], w[1]) {
                return Err(GraphError::NoSuchEdge(w[0], w[1]));
            }
        }
        Ok(PathSpec { vertices })
    }

    pub fn vertices(&self) -> &[Var] {
        &self.vertices
    }

    pub fn edges(&self) -> Vec<(Var, Var)> {
        self.vertices
            .windows(2)
            .map(|w| ordered(w[0], w[1]))
            .collect()
    }

    pub fn reversed(&self) -> PathSpec {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PathSpec { vertices }
    }
}

/// A connected multigraph: positive edge multiplicities m_{uv} on unordered
/// pairs. Loops are never stored here; looped views live with the matching
/// machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    mult: BTreeMap<(Var, Var), u64>,
}

impl MultiGraph {
    pub fn new(n: usize, mult: BTreeMap<(Var, Var), u64>) -> Result<MultiGraph, GraphError> {
        if n == 0 {
            return Err(GraphError::BadVertexCount("0".into()));
        }
        for (&(u, v), &m) in &mult {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u > v {
                return Err(GraphError::BadParameter(format!(
                    "unordered pair stored backwards: {u}-{v}"
                )));
            }
            for w in [u, v] {
                if w == 0 || w as usize > n {
                    return Err(GraphError::LabelOutOfRange(w, n));
                }
            }
            if m == 0 {
                return Err(GraphError::BadParameter(format!(
                    "zero multiplicity on {u}-{v}"
                )));
            }
        }
        Ok(MultiGraph { n, mult })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: Var, v: Var) -> u64 {
        *self.mult.get(&ordered(u, v)).unwrap_or(&0)
    }

    pub fn edge_multiplicities(&self) -> impl Iterator<Item = ((Var, Var), u64)> + '_ {
        self.mult.iter().map(|(&e, &m)| (e, m))
    }

    /// Degree counting multiplicities.
    pub fn degree(&self, v: Var) -> u64 {
        self.mult
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in self.mult.keys() {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1 as Var]);
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serialize_multigraph(self))
    }
}

/// Parses the tree file format: first line n, then one "u v" edge per line,
/// 1-indexed. Multiplicities are rejected here.
pub fn parse_tree(text: &str) -> Result<Tree, GraphError> {
    let (n, raw) = parse_graph_lines(text)?;
    let mut edges = Vec::new();
    for (line, u, v, mult) in raw {
        if mult != 1 {
            return Err(GraphError::MultiplicityInTree(line));
        }
        edges.push((u, v));
    }
    Tree::new(n, edges)
}

/// Parses the same format with an optional third multiplicity column;
/// repeated pairs are rejected rather than merged.
pub fn parse_multigraph(text: &str) -> Result<MultiGraph, GraphError> {
    let (n, raw) = parse_graph_lines(text)?;
    let mut mult = BTreeMap::new();
    for (_, u, v, m) in raw {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let e = ordered(u, v);
        if mult.insert(e, m).is_some() {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
    }
    MultiGraph::new(n, mult)
}

type EdgeLine = (usize, Var, Var, u64);

fn parse_graph_lines(text: &str) -> Result<(usize, Vec<EdgeLine>), GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines.next().ok_or(GraphError::Empty)?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| GraphError::BadVertexCount(first.trim().to_string()))?;
    if n == 0 {
        return Err(GraphError::BadVertexCount(first.trim().to_string()));
    }
    let mut out = Vec::new();
    for (idx, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || GraphError::MalformedEdge {
            line: idx + 1,
            text: line.to_string(),
        };
        if fields.len() != 2 && fields.len() != 3 {
            return Err(bad());
        }
        let u: Var = fields[0].parse().map_err(|_| bad())?;
        let v: Var = fields[1].parse().map_err(|_| bad())?;
        let m: u64 = if fields.len() == 3 {
            fields[2].parse().map_err(|_| bad())?
        } else {
            1
        };
        for w in [u, v] {
            if w == 0 || w as usize > n {
                return Err(GraphError::LabelOutOfRange(w, n));
            }
        }
        out.push((idx + 1, u, v, m));
    }
    Ok((n, out))
}

pub fn serialize_tree(t: &Tree) -> String {
    let mut s = format!("{}\n", t.n());
    for &(u, v) in t.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn serialize_multigraph(g: &MultiGraph) -> String {
    let mut s = format!("{}\n", g.n());
    for ((u, v), m) in g.edge_multiplicities() {
        if m == 1 {
            s.push_str(&format!("{u} {v}\n"));
        } else {
            s.push_str(&format!("{u} {v} {m}\n"));
        }
    }
    s
}

/// Either output of a family constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyGraph {
    Tree(Tree),
    Multi(MultiGraph),
}

impl FamilyGraph {
    pub fn as_tree(&self) -> Option<&Tree> {
        match self {
            FamilyGraph::Tree(t) => Some(t),
            FamilyGraph::Multi(_) => None,
        }
    }

    pub fn as_multigraph(&self) -> MultiGraph {
        match self {
            FamilyGraph::Tree(t) => t.to_multigraph(),
            FamilyGraph::Multi(g) => g.clone(),
        }
    }
}

/// The path P_n on vertices 1..n in order.
pub fn path(n: usize) -> Result<Tree, GraphError> {
    if n < 1 {
        return Err(GraphError::BadParameter("path needs n >= 1".into()));
    }
    Tree::new(n, (1..n as Var).map(|i| (i, i + 1)).collect())
}

/// The star S(m): leaves 1..m, root m+1.
pub fn star(m: usize) -> Result<Tree, GraphError> {
    if m < 2 {
        return Err(GraphError::BadParameter("star needs m >= 2".into()));
    }
    let root = (m + 1) as Var;
    Tree::new(m + 1, (1..=m as Var).map(|i| (i, root)).collect())
}

/// Depth-two tree: root 1, branch vertices 2..=s+1, then the leaves of each
/// branch in breadth-first order.
pub fn depth2(branch_sizes: &[usize]) -> Result<Tree, GraphError> {
    let s = branch_sizes.len();
    if s < 1 || branch_sizes.iter().any(|&m| m < 1) {
        return Err(GraphError::BadParameter(
            "depth2 needs at least one branch, each with m_i >= 1".into(),
        ));
    }
    let n = 1 + s + branch_sizes.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    for b in 0..s {
        edges.push((1, (b + 2) as Var));
    }
    let mut next = (s + 2) as Var;
    for (b, &m) in branch_sizes.iter().enumerate() {
        for _ in 0..m {
            edges.push(((b + 2) as Var, next));
            next += 1;
        }
    }
    Tree::new(n, edges)
}

/// Root with three pendant paths of n1, n2, n3 vertices (root included in
/// each). Numbering follows the leftmost path toward the root, then the
/// right path, then the lower path.
pub fn j_tree(n1: usize, n2: usize, n3: usize) -> Result<Tree, GraphError> {
    if n1 < 2 || n2 < 2 || n3 < 2 {
        return Err(GraphError::BadParameter("J needs n_i >= 2".into()));
    }
    let n = n1 + n2 + n3 - 2;
    let root = n1 as Var;
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..n1 as Var {
        edges.push((i, i + 1));
    }
    let mut prev = root;
    for i in 0..(n2 - 1) as Var {
        let v = n1 as Var + 1 + i;
        edges.push((prev, v));
        prev = v;
    }
    prev = root;
    for i in 0..(n3 - 1) as Var {
        let v = (n1 + n2 - 1) as Var + 1 + i;
        edges.push((prev, v));
        prev = v;
    }
    Tree::new(n, edges)
}

fn check_regular_params(d: usize, h: usize) -> Result<(), GraphError> {
    if d < 3 {
        return Err(GraphError::BadParameter("regular trees need d >= 3".into()));
    }
    if h < 1 {
        return Err(GraphError::BadParameter("regular trees need h >= 1".into()));
    }
    Ok(())
}

fn grow_regular(root_children: usize, d: usize, h: usize) -> Tree {
    // Breadth-first numbering from the root.
    let mut edges = Vec::new();
    let mut frontier = vec![1 as Var];
    let mut next = 2 as Var;
    for level in 0..h {
        let mut new_frontier = Vec::new();
        let kids = if level == 0 { root_children } else { d - 1 };
        for &v in &frontier {
            for _ in 0..kids {
                edges.push((v, next));
                new_frontier.push(next);
                next += 1;
            }
        }
        frontier = new_frontier;
    }
    Tree::new(next as usize - 1, edges).expect("constructed tree is valid")
}

/// T(d,h): the d-regular tree of depth h (root has d children, internal
/// vertices d-1 children).
pub fn regular_tree(d: usize, h: usize) -> Result<Tree, GraphError> {
    check_regular_params(d, h)?;
    Ok(grow_regular(d, d, h))
}

/// T'(d,h): as T(d,h) with one principal branch removed, so the root has
/// degree d-1.
pub fn regular_branch(d: usize, h: usize) -> Result<Tree, GraphError> {
    check_regular_params(d, h)?;
    Ok(grow_regular(d - 1, d, h))
}

/// C_{5,m}: a path of m+1 vertices whose two ends each carry two pendant
/// leaves. Leaves are 1..4, the two centers 5 and 6; interior path vertices
/// are 7 (next to 5), then 9,...,m+5, then 8 (next to 6).
pub fn c5(m: usize) -> Result<Tree, GraphError> {
    if m < 1 {
        return Err(GraphError::BadParameter("C5 needs m >= 1".into()));
    }
    let n = m + 5;
    let mut edges = vec![(1, 5), (2, 5), (3, 6), (4, 6)];
    let interior: Vec<Var> = match m {
        1 => Vec::new(),
        2 => vec![7],
        _ => {
            let mut v = vec![7];
            v.extend(9..=(m + 5) as Var);
            v.push(8);
            v
        }
    };
    let mut prev = 5;
    for &v in &interior {
        edges.push((prev, v));
        prev = v;
    }
    edges.push((prev, 6));
    Tree::new(n, edges)
}

/// Interior path of C_{5,m} between the two centers, in order from the
/// neighbor of 5 to the neighbor of 6.
pub fn c5_interior(m: usize) -> Vec<Var> {
    match m {
        0 | 1 => Vec::new(),
        2 => vec![7],
        _ => {
            let mut v = vec![7];
            v.extend(9..=(m + 5) as Var);
            v.push(8);
            v
        }
    }
}

fn wire_leaves(base: &Tree, extra_root_edge: bool, d: usize) -> MultiGraph {
    let n = base.n();
    let sink = (n + 1) as Var;
    let mut mult: BTreeMap<(Var, Var), u64> = base.edges().iter().map(|&e| (e, 1u64)).collect();
    for leaf in base.leaves() {
        if leaf == 1 && extra_root_edge {
            continue;
        }
        mult.insert(ordered(leaf, sink), (d - 1) as u64);
    }
    if extra_root_edge {
        *mult.entry(ordered(1, sink)).or_insert(0) += 1;
    }
    MultiGraph::new(n + 1, mult).expect("constructed multigraph is valid")
}

/// The wired tree of T(d,h): T(d,h-1) plus a collapsed vertex joined to each
/// leaf of T(d,h-1) by d-1 parallel edges.
pub fn wired_regular(d: usize, h: usize) -> Result<MultiGraph, GraphError> {
    check_regular_params(d, h)?;
    if h < 2 {
        return Err(GraphError::BadParameter("wired trees need h >= 2".into()));
    }
    let base = regular_tree(d, h - 1)?;
    Ok(wire_leaves(&base, false, d))
}

/// The wired branch variant: T'(d,h-1) wired the same way, plus one extra
/// edge between the collapsed vertex and the root.
pub fn levine_wired(d: usize, h: usize) -> Result<MultiGraph, GraphError> {
    check_regular_params(d, h)?;
    if h < 2 {
        return Err(GraphError::BadParameter("wired trees need h >= 2".into()));
    }
    let base = regular_branch(d, h - 1)?;
    Ok(wire_leaves(&base, true, d))
}

/// Upper limit for exhaustive labeled-tree enumeration.
pub const ENUMERATION_LIMIT: usize = 8;

/// Streams all n^(n-2) labeled trees on n vertices by decoding Pruefer
/// sequences in lexicographic order.
pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees, GraphError> {
    if n < 2 {
        return Err(GraphError::BadParameter("enumeration needs n >= 2".into()));
    }
    if n > ENUMERATION_LIMIT {
        return Err(GraphError::EnumerationTooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(LabeledTrees {
        n,
        seq: vec![1; n.saturating_sub(2)],
        done: false,
    })
}

pub struct LabeledTrees {
    n: usize,
    seq: Vec<Var>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.done {
            return None;
        }
        let tree = pruefer_decode(self.n, &self.seq);
        // Odometer step through sequences over 1..=n.
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if (self.seq[i] as usize) < self.n {
                self.seq[i] += 1;
                for s in self.seq[i + 1..].iter_mut() {
                    *s = 1;
                }
                break;
            }
        }
        Some(tree)
    }
}

/// Decodes a Pruefer sequence over 1..=n (length n-2) into a labeled tree.
pub fn pruefer_decode(n: usize, seq: &[Var]) -> Tree {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1u32; n + 1];
    for &s in seq {
        degree[s as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n + 1];
    for &s in seq {
        let leaf = (1..=n as Var)
            .find(|&v| degree[v as usize] == 1 && !used[v as usize])
            .expect("valid sequence");
        edges.push((leaf, s));
        used[leaf as usize] = true;
        degree[s as usize] -= 1;
    }
    let mut last: Vec<Var> = (1..=n as Var)
        .filter(|&v| !used[v as usize] && degree[v as usize] == 1)
        .collect();
    assert_eq!(last.len(), 2);
    edges.push((last.remove(0), last.remove(0)));
    Tree::new(n, edges).expect("Pruefer decode yields a tree")
}

/// Encodes a labeled tree back into its Pruefer sequence.
pub fn pruefer_encode(tree: &Tree) -> Vec<Var> {
    let n = tree.n();
    if n <= 2 {
        return Vec::new();
    }
    let mut adj: Vec<BTreeSet<Var>> = vec![BTreeSet::new(); n + 1];
    for &(u, v) in tree.edges() {
        adj[u as usize].insert(v);
        adj[v as usize].insert(u);
    }
    let mut seq = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = (1..=n as Var)
            .find(|&v| adj[v as usize].len() == 1)
            .expect("tree has a leaf");
        let parent = *adj[leaf as usize].iter().next().unwrap();
        adj[leaf as usize].clear();
        adj[parent as usize].remove(&leaf);
        seq.push(parent);
    }
    seq
}

/// Uniform random labeled tree, deterministic per seed.
pub fn random_tree(n: usize, seed: u64) -> Result<Tree, GraphError> {
    if n < 2 {
        return Err(GraphError::BadParameter("random tree needs n >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<Var> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(1..=n as Var))
        .collect();
    Ok(pruefer_decode(n, &seq))
}

/// The caterpillar used throughout the worked examples: spine 1-2-5-6-9 with
/// legs 3,4 on vertex 2 and 7,8 on vertex 6.
pub fn caterpillar() -> Tree {
    Tree::new(
        9,
        vec![
            (1, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (5, 6),
            (6, 7),
            (6, 8),
            (6, 9),
        ],
    )
    .expect("fixture tree is valid")
}
