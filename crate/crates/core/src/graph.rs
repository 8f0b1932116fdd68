//! Ordered graphs and the combinatorics of their graphic matroids: chordality,
//! perfect elimination orderings, circuits, broken circuits, NBC sets, flats.
//!
//! Vertices are identified by their position in the vertex order. Every edge
//! is oriented from its smaller endpoint (tail) to its larger one (head), and
//! edges are sorted by `(head, tail)`; an edge's index in [`OrderedGraph::edges`]
//! is its position in that edge order.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on intermediate sets produced by the exponential enumerations.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

/// A set of edges, as a bitmask over edge indices (at most 64 edges).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> Self {
        EdgeSet(idx.into_iter().fold(0u64, |m, i| m | (1 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        EdgeSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        EdgeSet(self.0 & !(1 << i))
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in increasing edge order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        })
    }

    /// All subsets of `self` (including empty and `self`).
    pub fn subsets(self) -> impl Iterator<Item = EdgeSet> {
        let full = self.0;
        let mut sub = Some(0u64);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = if cur == full { None } else { Some(((cur | !full).wrapping_add(1)) & full) };
            Some(EdgeSet(cur))
        })
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A closed edge set of the graphic matroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    pub edges: EdgeSet,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    adj: Vec<u64>,
    order_given: bool,
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl OrderedGraph {
    /// Build a graph with the given vertex order; `edges` refer to labels.
    pub fn new<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let find = |x: &str| {
                labels
                    .iter()
                    .position(|l| l == x)
                    .ok_or_else(|| Error::InvalidGraph(format!("edge endpoint `{x}` is not a vertex")))
            };
            pairs.push((find(a.as_ref())?, find(b.as_ref())?));
        }
        Self::from_parts(labels, &pairs, true)
    }

    /// Graph on vertices labelled `1..=n` in natural order.
    pub fn from_indices(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Self::from_parts(labels, edges, true)
    }

    fn from_parts(labels: Vec<String>, pairs: &[(usize, usize)], order_given: bool) -> Result<Self> {
        if labels.len() > 64 {
            return Err(Error::InvalidGraph("at most 64 vertices are supported".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !valid_label(l) {
                return Err(Error::InvalidGraph(format!("bad vertex label `{l}` (use [A-Za-z0-9_])")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{l}`")));
            }
        }
        let mut adj = vec![0u64; labels.len()];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= labels.len() || b >= labels.len() {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at `{}`", labels[a])));
            }
            if adj[a] >> b & 1 == 1 {
                return Err(Error::InvalidGraph(format!("duplicate edge {} {}", labels[a], labels[b])));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            edges.push(Edge { tail: a.min(b), head: a.max(b) });
        }
        if edges.len() > 64 {
            return Err(Error::InvalidGraph("at most 64 edges are supported".into()));
        }
        edges.sort_by_key(|e| (e.head, e.tail));
        Ok(OrderedGraph { labels, edges, adj, order_given })
    }

    /// Parse the line format
    ///
    /// ```text
    /// # comment
    /// vertices: 1 2 3
    /// edge: 1 2
    /// edge: 2 3
    /// ```
    ///
    /// The `vertices:` line fixes the order; without it vertices are taken
    /// from the edges in lexicographic order and the order counts as not
    /// user-supplied.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: Option<Vec<String>> = None;
        let mut edge_labels = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: no + 1, msg };
            let (key, rest) = line.split_once(':').ok_or_else(|| perr(format!("expected `key: ...`, got `{line}`")))?;
            let words: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            match key.trim() {
                "vertices" => {
                    if vertices.is_some() {
                        return Err(perr("repeated `vertices:` line".into()));
                    }
                    vertices = Some(words);
                }
                "edge" => {
                    if words.len() != 2 {
                        return Err(perr(format!("edge needs two endpoints, got {}", words.len())));
                    }
                    edge_labels.push((words[0].clone(), words[1].clone()));
                }
                other => return Err(perr(format!("unknown key `{other}`"))),
            }
        }
        let order_given = vertices.is_some();
        let labels = match vertices {
            Some(v) => v,
            None => {
                let set: BTreeSet<String> = edge_labels.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
                set.into_iter().collect()
            }
        };
        let mut pairs = Vec::new();
        for (a, b) in &edge_labels {
            let find = |x: &String| {
                labels
                    .iter()
                    .position(|l| l == x)
                    .ok_or_else(|| Error::InvalidGraph(format!("edge endpoint `{x}` is not listed in vertices")))
            };
            pairs.push((find(a)?, find(b)?));
        }
        Self::from_parts(labels, &pairs, order_given)
    }

    /// Serialize in the format read by [`OrderedGraph::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.labels.join(" "));
        for e in &self.edges {
            s.push_str(&format!("edge: {} {}\n", self.labels[e.tail], self.labels[e.head]));
        }
        s
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::from_indices(0..self.edges.len())
    }

    pub fn order_given(&self) -> bool {
        self.order_given
    }

    /// Name of an edge as `tail.head` labels.
    pub fn edge_name(&self, i: usize) -> String {
        let e = self.edges[i];
        format!("{}.{}", self.labels[e.tail], self.labels[e.head])
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.labels.len()).filter(move |&w| self.adjacent(v, w))
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.max(b), a.min(b));
        self.edges.binary_search_by_key(&key, |e| (e.head, e.tail)).ok()
    }

    /// Number of neighbours of `v` that come earlier in the vertex order.
    pub fn earlier_degree(&self, v: usize) -> usize {
        (self.adj[v] & ((1u64 << v) - 1)).count_ones() as usize
    }

    /// Same graph with vertices relabelled into `order` (a permutation of
    /// vertex indices, earliest first).
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let labels = order.iter().map(|&v| self.labels[v].clone()).collect();
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (pos[e.tail], pos[e.head])).collect();
        Self::from_parts(labels, &pairs, self.order_given)
    }

    // ---- chordality ----

    /// A chordless cycle of length at least four, or `None` if chordal.
    pub fn chordless_cycle(&self) -> Option<Vec<usize>> {
        let n = self.labels.len();
        for v in 0..n {
            let nv: Vec<usize> = self.neighbors(v).collect();
            for (i, &u) in nv.iter().enumerate() {
                for &w in &nv[i + 1..] {
                    if self.adjacent(u, w) {
                        continue;
                    }
                    // shortest u-w path avoiding v and its other neighbours is induced
                    let blocked = self.adj[v] & !(1 << u) & !(1 << w) | 1 << v;
                    if let Some(path) = self.shortest_path(u, w, blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path(&self, from: usize, to: usize, blocked: u64) -> Option<Vec<usize>> {
        let n = self.labels.len();
        let mut prev = vec![usize::MAX; n];
        let mut seen = blocked | 1 << from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.neighbors(x) {
                if seen >> y & 1 == 0 {
                    seen |= 1 << y;
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    pub fn is_chordal(&self) -> bool {
        self.chordless_cycle().is_none()
    }

    fn not_chordal(&self) -> Error {
        let witness = self.chordless_cycle().unwrap_or_default();
        Error::NotChordal { witness: witness.iter().map(|&v| self.labels[v].clone()).collect() }
    }

    /// Check that the current vertex order is a perfect elimination ordering:
    /// each vertex's earlier neighbours form a clique.
    pub fn check_peo(&self) -> Result<()> {
        for v in 0..self.labels.len() {
            let earlier: Vec<usize> = self.neighbors(v).filter(|&w| w < v).collect();
            for (i, &a) in earlier.iter().enumerate() {
                if earlier[i + 1..].iter().any(|&b| !self.adjacent(a, b)) {
                    return Err(Error::NotPeo { vertex: self.labels[v].clone() });
                }
            }
        }
        Ok(())
    }

    /// Chordal, and the current order is a perfect elimination ordering.
    pub fn check_chordal_peo(&self) -> Result<()> {
        if !self.is_chordal() {
            return Err(self.not_chordal());
        }
        self.check_peo()
    }

    /// Perfect elimination ordering by maximum cardinality search, ties going
    /// to the earliest vertex in the current order. The visit order itself
    /// is returned: every vertex is simplicial among itself and its
    /// predecessors.
    pub fn perfect_elimination_ordering(&self) -> Result<Vec<usize>> {
        let n = self.labels.len();
        let mut weight = vec![0usize; n];
        let mut done = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !done[v])
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("unvisited vertex");
            done[v] = true;
            order.push(v);
            for w in self.neighbors(v) {
                if !done[w] {
                    weight[w] += 1;
                }
            }
        }
        let candidate = self.reordered(&order)?;
        candidate.check_peo().map_err(|_| self.not_chordal())?;
        Ok(order)
    }

    /// The graph in a perfect elimination ordering: a user-supplied order is
    /// verified, otherwise one is computed.
    pub fn with_peo(&self) -> Result<Self> {
        if self.order_given {
            if !self.is_chordal() {
                return Err(self.not_chordal());
            }
            self.check_peo()?;
            Ok(self.clone())
        } else {
            let order = self.perfect_elimination_ordering()?;
            self.reordered(&order)
        }
    }

    // ---- graphic matroid ----

    /// All simple cycles as edge sets, sorted.
    pub fn circuits(&self, cap: usize) -> Result<Vec<EdgeSet>> {
        let n = self.labels.len();
        let mut found = BTreeSet::new();
        let mut steps = 0usize;
        for start in 0..n {
            // cycles whose smallest vertex is `start`
            let mut stack: Vec<(usize, u64, EdgeSet, usize)> = vec![(start, 1 << start, EdgeSet::EMPTY, 0)];
            while let Some((v, visited, es, len)) = stack.pop() {
                steps += 1;
                if steps > cap {
                    return Err(Error::SizeLimitExceeded { what: "circuit enumeration", cap });
                }
                for w in self.neighbors(v) {
                    let e = self.edge_index(v, w).expect("adjacent");
                    if w == start && len >= 2 && !es.contains(e) {
                        found.insert(es.with(e));
                        if found.len() > cap {
                            return Err(Error::SizeLimitExceeded { what: "circuit enumeration", cap });
                        }
                    } else if w > start && visited >> w & 1 == 0 {
                        stack.push((w, visited | 1 << w, es.with(e), len + 1));
                    }
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    fn components(&self, edges: EdgeSet) -> Vec<usize> {
        let n = self.labels.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for i in edges.iter() {
            let e = self.edges[i];
            let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    /// Matroid rank: vertices minus connected components of `(V, edges)`.
    pub fn rank(&self, edges: EdgeSet) -> usize {
        let comp = self.components(edges);
        let roots = comp.iter().enumerate().filter(|(v, r)| v == *r).count();
        self.labels.len() - roots
    }

    pub fn closure(&self, edges: EdgeSet) -> EdgeSet {
        let comp = self.components(edges);
        EdgeSet::from_indices((0..self.edges.len()).filter(|&i| {
            let e = self.edges[i];
            comp[e.tail] == comp[e.head]
        }))
    }

    /// All flats, sorted by rank then edge set.
    pub fn flats(&self, cap: usize) -> Result<Vec<Flat>> {
        let mut seen = BTreeSet::from([EdgeSet::EMPTY]);
        let mut queue = VecDeque::from([EdgeSet::EMPTY]);
        while let Some(f) = queue.pop_front() {
            for i in 0..self.edges.len() {
                if f.contains(i) {
                    continue;
                }
                let g = self.closure(f.with(i));
                if seen.insert(g) {
                    if seen.len() > cap {
                        return Err(Error::SizeLimitExceeded { what: "flat enumeration", cap });
                    }
                    queue.push_back(g);
                }
            }
        }
        let mut flats: Vec<Flat> = seen.into_iter().map(|edges| Flat { edges, rank: self.rank(edges) }).collect();
        flats.sort_by_key(|f| (f.rank, f.edges));
        Ok(flats)
    }

    /// Heads of the edges in `s` are pairwise distinct. For a chordal graph
    /// in a perfect elimination ordering this characterizes NBC sets.
    pub fn heads_distinct(&self, s: EdgeSet) -> bool {
        let mut heads = 0u64;
        for i in s.iter() {
            let h = self.edges[i].head;
            if heads >> h & 1 == 1 {
                return false;
            }
            heads |= 1 << h;
        }
        true
    }

    /// Vertex mask of the heads of `s`.
    pub fn head_mask(&self, s: EdgeSet) -> u64 {
        s.iter().fold(0, |m, i| m | 1 << self.edges[i].head)
    }
}

/// Broken circuits of a graph, for NBC tests.
#[derive(Debug, Clone)]
pub struct BrokenCircuits {
    circuits: Vec<EdgeSet>,
    broken: Vec<EdgeSet>,
}

impl BrokenCircuits {
    pub fn new(g: &OrderedGraph, cap: usize) -> Result<Self> {
        let circuits = g.circuits(cap)?;
        let mut broken: Vec<EdgeSet> =
            circuits.iter().map(|c| c.without(c.first().expect("nonempty circuit"))).collect();
        broken.sort();
        broken.dedup();
        Ok(BrokenCircuits { circuits, broken })
    }

    pub fn circuits(&self) -> &[EdgeSet] {
        &self.circuits
    }

    pub fn broken(&self) -> &[EdgeSet] {
        &self.broken
    }

    /// No subset of `s` is a broken circuit.
    pub fn is_nbc(&self, s: EdgeSet) -> bool {
        !self.broken.iter().any(|b| b.is_subset(s))
    }

    /// Every NBC subset of the edge set, in increasing mask order.
    pub fn all_nbc_sets(&self, g: &OrderedGraph, cap: usize) -> Result<Vec<EdgeSet>> {
        if g.num_edges() > 40 || 1usize << g.num_edges() > cap {
            return Err(Error::SizeLimitExceeded { what: "NBC enumeration", cap });
        }
        Ok(g.all_edges().subsets().filter(|&s| self.is_nbc(s)).collect())
    }

    /// NBC sets associated to a flat: contained in it and spanning it.
    pub fn nbc_sets_of_flat(&self, g: &OrderedGraph, flat: &Flat, cap: usize) -> Result<Vec<EdgeSet>> {
        if flat.edges.len() > 40 || 1usize << flat.edges.len() > cap {
            return Err(Error::SizeLimitExceeded { what: "NBC enumeration", cap });
        }
        let mut out: Vec<EdgeSet> = flat
            .edges
            .subsets()
            .filter(|s| s.len() == flat.rank && self.is_nbc(*s) && g.closure(*s) == flat.edges)
            .collect();
        out.sort();
        Ok(out)
    }
}

/// Named test graphs used throughout the crate's tests and the CLI corpus.
pub mod corpus {
    use super::OrderedGraph;

    pub fn complete(n: usize) -> OrderedGraph {
        let mut e = Vec::new();
        for j in 0..n {
            for i in 0..j {
                e.push((i, j));
            }
        }
        OrderedGraph::from_indices(n, &e).expect("valid")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> OrderedGraph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        OrderedGraph::from_indices(n, &e).expect("valid")
    }

    pub fn cycle(n: usize) -> OrderedGraph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((0, n - 1));
        OrderedGraph::from_indices(n, &e).expect("valid")
    }

    /// Fan: a path on `n - 1` vertices plus a hub adjacent to all of them;
    /// the hub comes first so the natural order is a PEO.
    pub fn fan(n: usize) -> OrderedGraph {
        let mut e: Vec<_> = (1..n).map(|i| (0, i)).collect();
        e.extend((2..n).map(|i| (i - 1, i)));
        OrderedGraph::from_indices(n, &e).expect("valid")
    }

    pub fn empty(n: usize) -> OrderedGraph {
        OrderedGraph::from_indices(n, &[]).expect("valid")
    }

    /// Look up `K3`, `P4`, `C5`, `F4`, `E2` (edgeless) and friends.
    pub fn by_name(name: &str) -> Option<OrderedGraph> {
        let (kind, n) = name.split_at(1);
        let n: usize = n.parse().ok()?;
        match kind {
            "K" if n >= 1 => Some(complete(n)),
            "P" if n >= 1 => Some(path(n)),
            "C" if n >= 3 => Some(cycle(n)),
            "F" if n >= 2 => Some(fan(n)),
            "E" => Some(empty(n)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::corpus::*;
    use super::*;

    const CAP: usize = DEFAULT_ENUMERATION_CAP;

    #[test]
    fn edge_order_follows_heads_then_tails() {
        let g = complete(3);
        let names: Vec<String> = (0..3).map(|i| g.edge_name(i)).collect();
        assert_eq!(names, ["1.2", "1.3", "2.3"]);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(OrderedGraph::from_indices(2, &[(0, 0)]).is_err());
        assert!(OrderedGraph::from_indices(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn chordality_small_cases() {
        assert!(complete(3).is_chordal());
        assert!(complete(4).is_chordal());
        let w = cycle(4).chordless_cycle().unwrap();
        assert_eq!(w.len(), 4);
        assert!(path(3).is_chordal());
    }

    #[test]
    fn peo_verification() {
        for g in [path(3), complete(4), fan(4)] {
            let order = g.perfect_elimination_ordering().unwrap();
            g.reordered(&order).unwrap().check_peo().unwrap();
        }
        assert!(matches!(cycle(4).perfect_elimination_ordering(), Err(Error::NotChordal { .. })));
        // 1-3, 2-3, 1-2 missing: vertex 3 has non-adjacent earlier neighbours
        let g = OrderedGraph::from_indices(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(matches!(g.check_peo(), Err(Error::NotPeo { .. })));
    }

    #[test]
    fn circuit_counts() {
        assert_eq!(complete(3).circuits(CAP).unwrap().len(), 1);
        assert_eq!(complete(4).circuits(CAP).unwrap().len(), 7);
        assert!(path(5).circuits(CAP).unwrap().is_empty());
        assert!(matches!(complete(6).circuits(5), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn nbc_triangle() {
        let g = complete(3);
        let bc = BrokenCircuits::new(&g, CAP).unwrap();
        assert!(!bc.is_nbc(EdgeSet::from_indices([1, 2])));
        assert!(bc.is_nbc(EdgeSet::from_indices([0, 1])));
        assert!(bc.is_nbc(EdgeSet::EMPTY));
    }

    #[test]
    fn flat_counts() {
        assert_eq!(complete(3).flats(CAP).unwrap().len(), 5);
        assert_eq!(path(2).flats(CAP).unwrap().len(), 2);
        assert_eq!(complete(4).flats(CAP).unwrap().len(), 15);
    }

    #[test]
    fn nbc_sets_of_flats_of_triangle() {
        let g = complete(3);
        let bc = BrokenCircuits::new(&g, CAP).unwrap();
        let flats = g.flats(CAP).unwrap();
        let top = flats.last().unwrap();
        assert_eq!(
            bc.nbc_sets_of_flat(&g, top, CAP).unwrap(),
            vec![EdgeSet::from_indices([0, 1]), EdgeSet::from_indices([0, 2])]
        );
        assert_eq!(bc.nbc_sets_of_flat(&g, &flats[0], CAP).unwrap(), vec![EdgeSet::EMPTY]);
        let single = flats[1];
        assert_eq!(bc.nbc_sets_of_flat(&g, &single, CAP).unwrap(), vec![single.edges]);
    }

    #[test]
    fn parse_round_trip() {
        let text = "# triangle\nvertices: c a b\nedge: a b\nedge: b c # trailing\nedge: a c\n";
        let g = OrderedGraph::parse(text).unwrap();
        assert!(g.order_given());
        assert_eq!(g.labels(), ["c", "a", "b"]);
        assert_eq!(OrderedGraph::parse(&g.to_text()).unwrap().edges(), g.edges());
        let g = OrderedGraph::parse("edge: b a\n").unwrap();
        assert!(!g.order_given());
        assert_eq!(g.labels(), ["a", "b"]);
        assert!(matches!(OrderedGraph::parse("edge: a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(OrderedGraph::parse("vertices: a\nedge: a b\n"), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = EdgeSet::from_indices([1, 3, 4]);
        let subs: Vec<EdgeSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
    }
}
