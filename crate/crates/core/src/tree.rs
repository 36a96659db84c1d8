//! Trees on dense vertex indices, their text format, and basic traversals.
//!
//! Internally every vertex is an index in `0..n`. A tree also remembers the
//! label each vertex had in the document it was read from; labels are kept
//! strictly increasing so that "lowest index" and "lowest label" agree.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// An undirected edge, stored with `0 <= min < max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b, "self-loop edge");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A nonempty sequence of distinct vertices; consecutive vertices are
/// adjacent in whatever host the path lives in. A single vertex is a path of
/// length zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPath(Vec<usize>);

impl VertexPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a path needs at least one vertex");
        VertexPath(vertices)
    }

    pub fn single(v: usize) -> Self {
        VertexPath(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges().any(|f| f == e)
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        VertexPath(v)
    }
}

impl fmt::Display for VertexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("-"))
    }
}

/// An immutable tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    labels: Vec<usize>,
}

impl Tree {
    /// The one-vertex tree.
    pub fn singleton() -> Self {
        Tree {
            adj: vec![Vec::new()],
            edges: Vec::new(),
            labels: vec![0],
        }
    }

    /// Builds a tree on `0..n` with identity labels.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_labels((0..n).collect(), edges)
    }

    /// Builds a tree on `0..labels.len()`; `labels` must be strictly increasing.
    pub(crate) fn with_labels(labels: Vec<usize>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let mut dsu = Dsu::new(n);
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            let line = i + 1;
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::HasCycle { line, u, v });
            }
            if !seen.insert(Edge::new(u, v)) {
                return Err(Error::DuplicateEdge { line, u, v });
            }
            if !dsu.union(u, v) {
                return Err(Error::HasCycle { line, u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        if dsu.components != 1 {
            return Err(Error::NotConnected {
                components: dsu.components,
            });
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let mut edges: Vec<Edge> = seen.into_iter().collect();
        edges.sort_unstable();
        Ok(Tree { adj, edges, labels })
    }

    /// Builds a tree from edges over arbitrary labels; the labels mentioned
    /// become the vertex set.
    pub fn from_labeled_edges(edges: &[(usize, usize)]) -> Result<Self> {
        let mut labels: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        labels.sort_unstable();
        labels.dedup();
        let index: BTreeMap<usize, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let dense: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (index[&u], index[&v])).collect();
        Self::with_labels(labels, &dense)
    }

    /// Reads the edge-list document: one `u v` pair per line, `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::BadToken {
                    line: line_no,
                    detail: format!("expected two vertex ids, found {:?}", content),
                });
            }
            let mut pair = [0usize; 2];
            for (slot, tok) in pair.iter_mut().zip(&toks) {
                *slot = tok.parse().map_err(|_| Error::BadToken {
                    line: line_no,
                    detail: format!("not a vertex id: {:?}", tok),
                })?;
            }
            raw.push((line_no, pair[0], pair[1]));
        }
        if raw.is_empty() {
            return Err(Error::EmptyTree);
        }
        let mut labels: Vec<usize> = raw.iter().flat_map(|&(_, u, v)| [u, v]).collect();
        labels.sort_unstable();
        labels.dedup();
        let index: BTreeMap<usize, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

        // Same checks as `with_labels`, but reporting document lines and labels.
        let n = labels.len();
        let mut dsu = Dsu::new(n);
        let mut seen = std::collections::HashSet::new();
        let mut dense = Vec::with_capacity(raw.len());
        for &(line, u, v) in &raw {
            if u == v {
                return Err(Error::HasCycle { line, u, v });
            }
            let (a, b) = (index[&u], index[&v]);
            if !seen.insert(Edge::new(a, b)) {
                return Err(Error::DuplicateEdge { line, u, v });
            }
            if !dsu.union(a, b) {
                return Err(Error::HasCycle { line, u, v });
            }
            dense.push((a, b));
        }
        if dsu.components != 1 {
            return Err(Error::NotConnected {
                components: dsu.components,
            });
        }
        Self::with_labels(labels, &dense)
    }

    /// Writes the edge-list document, edges sorted, in labels.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", self.labels[e.0], self.labels[e.1]));
        }
        out
    }

    /// A DOT `graph` document with one `u -- v;` line per edge, sorted.
    pub fn emit_dot(&self) -> String {
        let mut out = String::from("graph tree {\n");
        for e in &self.edges {
            out.push_str(&format!("  {} -- {};\n", self.labels[e.0], self.labels[e.1]));
        }
        out.push_str("}\n");
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Index of the vertex carrying `label`.
    pub fn index_of(&self, label: usize) -> Result<usize> {
        self.labels
            .binary_search(&label)
            .map_err(|_| Error::UnknownVertex(label))
    }

    /// Identity labels on the same structure.
    pub fn unlabeled(&self) -> Tree {
        Tree {
            labels: (0..self.vertex_count()).collect(),
            ..self.clone()
        }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// True for a star `K_{1,k}` with `k >= 2`.
    pub fn is_star(&self) -> bool {
        let n = self.vertex_count();
        n >= 3 && self.adj.iter().any(|a| a.len() == n - 1)
    }

    pub fn is_path(&self) -> bool {
        self.adj.iter().all(|a| a.len() <= 2)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// BFS parents from `root` (`parent[root] == root`).
    pub(crate) fn parents_from(&self, root: usize) -> Vec<usize> {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    pub(crate) fn distances_from(&self, root: usize) -> Vec<usize> {
        let n = self.vertex_count();
        let mut dist = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// The unique `u`–`v` path.
    pub fn unique_path(&self, u: usize, v: usize) -> Result<VertexPath> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let parent = self.parents_from(v);
        let mut walk = vec![u];
        let mut x = u;
        while x != v {
            x = parent[x];
            walk.push(x);
        }
        Ok(VertexPath(walk))
    }

    /// Leaves in first-visit order of a depth-first search from `start`,
    /// exploring neighbors in ascending order.
    pub fn dfs_leaf_order(&self, start: usize) -> Result<Vec<usize>> {
        self.check_vertex(start)?;
        if !self.is_leaf(start) {
            return Err(Error::NotALeaf(start));
        }
        Ok(self.leaf_order_with(start, |_, children| children))
    }

    /// Like [`Tree::dfs_leaf_order`], but at every vertex the leaf children are
    /// visited before the other subtrees, so the leaves around any vertex
    /// appear consecutively.
    pub(crate) fn grouped_leaf_order(&self, start: usize) -> Vec<usize> {
        self.leaf_order_with(start, |tree, mut children| {
            children.sort_by_key(|&c| (!tree.is_leaf(c), c));
            children
        })
    }

    fn leaf_order_with<F>(&self, start: usize, order: F) -> Vec<usize>
    where
        F: Fn(&Tree, Vec<usize>) -> Vec<usize>,
    {
        let mut out = Vec::new();
        // (vertex, parent)
        let mut stack = vec![(start, usize::MAX)];
        while let Some((x, p)) = stack.pop() {
            if self.is_leaf(x) || self.vertex_count() == 1 {
                out.push(x);
            }
            let children: Vec<usize> = self.adj[x].iter().copied().filter(|&c| c != p).collect();
            let children = order(self, children);
            for &c in children.iter().rev() {
                stack.push((c, x));
            }
        }
        out
    }

    /// Uniformly random labeled tree on `n` vertices via a Prüfer sequence.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
        if n <= 1 {
            return Tree::singleton();
        }
        if n == 2 {
            return Tree::from_edges(2, &[(0, 1)]).unwrap();
        }
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut leaves: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| degree[v] == 1).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = *leaves.iter().next().unwrap();
            leaves.remove(&leaf);
            edges.push((leaf, s));
            degree[s] -= 1;
            if degree[s] == 1 {
                leaves.insert(s);
            }
        }
        let rest: Vec<usize> = leaves.into_iter().collect();
        edges.push((rest[0], rest[1]));
        Tree::from_edges(n, &edges).unwrap()
    }

    /// Removes `removed` vertices and `cut` edges, appends `new_vertices`
    /// fresh vertices (indices `n..n+new_vertices` in the old numbering) and
    /// adds `added` edges (old numbering). Returns the compacted tree together with the old
    /// index of every new vertex. Labels of surviving vertices are kept; fresh
    /// vertices get labels above the current maximum.
    pub(crate) fn rebuild(
        &self,
        removed: &[usize],
        cut: &[Edge],
        new_vertices: usize,
        added: &[(usize, usize)],
    ) -> Result<(Tree, Vec<usize>)> {
        let n = self.vertex_count();
        let total = n + new_vertices;
        let mut gone = vec![false; total];
        for &r in removed {
            gone[r] = true;
        }
        let old_of_new: Vec<usize> = (0..total).filter(|&v| !gone[v]).collect();
        let mut new_of_old = vec![usize::MAX; total];
        for (i, &o) in old_of_new.iter().enumerate() {
            new_of_old[o] = i;
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| !gone[e.0] && !gone[e.1] && !cut.contains(e))
            .map(|e| (new_of_old[e.0], new_of_old[e.1]))
            .collect();
        for &(a, b) in added {
            edges.push((new_of_old[a], new_of_old[b]));
        }
        let top = self.labels.last().copied().unwrap_or(0);
        let labels = old_of_new
            .iter()
            .map(|&o| if o < n { self.labels[o] } else { top + 1 + (o - n) })
            .collect();
        let t = Tree::with_labels(labels, &edges)?;
        Ok((t, old_of_new))
    }
}

struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = x;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.components -= 1;
        true
    }
}

/// Small fixed trees shared by tests, examples and the CLI docs.
pub mod fixtures {
    use super::Tree;

    fn build(edges: &[(usize, usize)]) -> Tree {
        Tree::from_labeled_edges(edges).expect("fixture is a tree")
    }

    pub fn e1() -> Tree {
        build(&[(0, 1)])
    }

    pub fn p3() -> Tree {
        build(&[(0, 1), (1, 2)])
    }

    pub fn p4() -> Tree {
        build(&[(0, 1), (1, 2), (2, 3)])
    }

    pub fn path(n: usize) -> Tree {
        if n == 1 {
            return Tree::singleton();
        }
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        build(&edges)
    }

    pub fn star(leaves: usize) -> Tree {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        build(&edges)
    }

    pub fn k13() -> Tree {
        star(3)
    }

    /// The binary tree of depth two on labels 1..=7.
    pub fn ta() -> Tree {
        build(&[(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)])
    }

    pub fn ds6() -> Tree {
        build(&[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
    }

    /// `ds6` with edge 0-1 subdivided by vertex 8.
    pub fn ds6s() -> Tree {
        build(&[(0, 8), (8, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
    }

    /// `ds6` with edge 0-1 subdivided by vertices 8 and 9.
    pub fn ds6ss() -> Tree {
        build(&[(0, 8), (8, 9), (9, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
    }

    pub fn hub() -> Tree {
        build(&[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn parse_single_edge() {
        let t = Tree::parse("0 1\n").unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.edges(), &[Edge::new(0, 1)]);
    }

    #[test]
    fn parse_ta_keeps_labels() {
        let text = "# binary tree of depth two\n1 2\n1 3\n2 4\n2 5\n3 6\n3 7\n";
        let t = Tree::parse(text).unwrap();
        assert_eq!(t.vertex_count(), 7);
        assert_eq!(t.labels(), &[1, 2, 3, 4, 5, 6, 7]);
        let deg = |l| t.degree(t.index_of(l).unwrap());
        assert_eq!((deg(1), deg(2), deg(3)), (2, 3, 3));
        assert!([4, 5, 6, 7].iter().all(|&l| deg(l) == 1));
        assert_eq!(t.to_text(), "1 2\n1 3\n2 4\n2 5\n3 6\n3 7\n");
    }

    #[test]
    fn parse_errors_name_lines() {
        let err = Tree::parse("0 1\n1 2\n2 3\n0 2\n").unwrap_err();
        assert_eq!(err, Error::HasCycle { line: 4, u: 0, v: 2 });
        let err = Tree::parse("0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::BadToken { line: 2, .. }));
        let err = Tree::parse("0 1\n\n# c\n1 0\n").unwrap_err();
        assert_eq!(err, Error::DuplicateEdge { line: 4, u: 1, v: 0 });
        let err = Tree::parse("0 1\n2 3\n").unwrap_err();
        assert_eq!(err, Error::NotConnected { components: 2 });
        assert_eq!(Tree::parse("# nothing\n").unwrap_err(), Error::EmptyTree);
        assert!(matches!(Tree::parse("3 3\n").unwrap_err(), Error::HasCycle { .. }));
        assert!(matches!(Tree::parse("0 1 2\n").unwrap_err(), Error::BadToken { line: 1, .. }));
    }

    #[test]
    fn unique_paths() {
        assert_eq!(p4().unique_path(0, 3).unwrap().vertices(), &[0, 1, 2, 3]);
        let ta = ta();
        let ix = |l| ta.index_of(l).unwrap();
        let p = ta.unique_path(ix(4), ix(6)).unwrap();
        let labels: Vec<usize> = p.vertices().iter().map(|&v| ta.label(v)).collect();
        assert_eq!(labels, vec![4, 2, 1, 3, 6]);
        assert_eq!(k13().unique_path(2, 2).unwrap().vertices(), &[2]);
        assert_eq!(p4().unique_path(0, 9), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn leaf_orders() {
        assert_eq!(k13().dfs_leaf_order(1).unwrap(), vec![1, 2, 3]);
        assert_eq!(ds6().dfs_leaf_order(2).unwrap(), vec![2, 5, 6, 7, 3, 4]);
        assert_eq!(e1().dfs_leaf_order(0).unwrap(), vec![0, 1]);
        assert_eq!(k13().dfs_leaf_order(0), Err(Error::NotALeaf(0)));
    }

    #[test]
    fn grouped_order_keeps_siblings_together() {
        // 0 has leaf 1, subtree at 2 (leaves 3,4) and leaf 5
        let t = Tree::from_edges(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (0, 5)]).unwrap();
        assert_eq!(t.dfs_leaf_order(1).unwrap(), vec![1, 3, 4, 5]);
        assert_eq!(t.grouped_leaf_order(1), vec![1, 5, 3, 4]);
    }

    #[test]
    fn dot_output_is_sorted() {
        assert_eq!(p3().emit_dot(), "graph tree {\n  0 -- 1;\n  1 -- 2;\n}\n");
    }

    #[test]
    fn random_trees_are_trees() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..30 {
            let t = Tree::random(n, &mut rng);
            assert_eq!(t.vertex_count(), n);
            assert_eq!(t.edges().len(), n.saturating_sub(1));
        }
    }

    #[test]
    fn rebuild_subdivides_and_contracts() {
        let t = p3();
        let (s, map) = t.rebuild(&[], &[Edge::new(0, 1)], 1, &[(0, 3), (3, 1)]).unwrap();
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(map, vec![0, 1, 2, 3]);
        assert!(s.is_path());
        assert_eq!(s.label(3), 3);
        let (c, map) = s.rebuild(&[3], &[], 0, &[(0, 1)]).unwrap();
        assert_eq!(c.edges(), t.edges());
        assert_eq!(map, vec![0, 1, 2]);
    }
}
