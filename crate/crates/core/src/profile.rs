//! Structural parameters of a tree: leaves, degree-2 vertices, interior
//! edges, bare paths, bunches, and the bare-path contraction.

use crate::tree::{Edge, Tree, VertexPath};

/// A bunch: a non-leaf vertex together with its leaf neighbours (or, for the
/// single-edge tree, both endpoints).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bunch {
    /// All vertices of the component, ascending.
    pub vertices: Vec<usize>,
    /// The leaves of the component in planar (grouped DFS) order.
    pub leaves: Vec<usize>,
}

impl Bunch {
    pub fn size(&self) -> usize {
        self.leaves.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeProfile {
    pub n: usize,
    pub h1: usize,
    pub h2: usize,
    pub leaves: Vec<usize>,
    pub deg2: Vec<usize>,
    pub interior_edges: Vec<Edge>,
    /// Maximal paths whose inner vertices all have degree two, each starting
    /// at its lower extreme, sorted.
    pub bare_paths: Vec<VertexPath>,
    /// Indices into `bare_paths` of the paths with no leaf and at least two edges.
    pub set_i: Vec<usize>,
    pub h2star: usize,
    /// In the cyclic order of a planar drawing.
    pub bunches: Vec<Bunch>,
    pub useful_leaves: Vec<usize>,
}

impl TreeProfile {
    pub fn of(t: &Tree) -> Self {
        let n = t.vertex_count();
        let leaves = t.leaves();
        let deg2: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 2).collect();
        let interior_edges: Vec<Edge> = t
            .edges()
            .iter()
            .copied()
            .filter(|e| !t.is_leaf(e.lo()) && !t.is_leaf(e.hi()))
            .collect();
        let bare_paths = bare_paths(t);
        let set_i: Vec<usize> = bare_paths
            .iter()
            .enumerate()
            .filter(|(_, p)| p.len() >= 2 && !t.is_leaf(p.first()) && !t.is_leaf(p.last()))
            .map(|(i, _)| i)
            .collect();
        let h2star = deg2.len() - set_i.len();
        let bunches = bunches(t);
        let useful_leaves = leaves
            .iter()
            .copied()
            .filter(|&l| t.degree(t.neighbors(l)[0]) != 2)
            .collect();
        TreeProfile {
            n,
            h1: leaves.len(),
            h2: deg2.len(),
            leaves,
            deg2,
            interior_edges,
            bare_paths,
            set_i,
            h2star,
            bunches,
            useful_leaves,
        }
    }

    /// `h2*` evaluated as a sum over bare paths rather than as `h2 - |I|`.
    pub fn h2star_by_sum(&self) -> usize {
        self.bare_paths
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if self.set_i.contains(&i) {
                    p.len() - 2
                } else {
                    p.len() - 1
                }
            })
            .sum()
    }

    pub fn is_deg2(&self, v: usize) -> bool {
        self.deg2.binary_search(&v).is_ok()
    }
}

pub fn profile(t: &Tree) -> TreeProfile {
    TreeProfile::of(t)
}

fn bare_paths(t: &Tree) -> Vec<VertexPath> {
    let n = t.vertex_count();
    let mut out = Vec::new();
    for start in 0..n {
        if t.degree(start) == 2 || t.degree(start) == 0 {
            continue;
        }
        for &first in t.neighbors(start) {
            let mut walk = vec![start, first];
            let (mut prev, mut cur) = (start, first);
            while t.degree(cur) == 2 {
                let next = t.neighbors(cur).iter().copied().find(|&x| x != prev).unwrap();
                walk.push(next);
                prev = cur;
                cur = next;
            }
            if start < cur {
                out.push(VertexPath::new(walk));
            }
        }
    }
    out.sort();
    out
}

fn bunches(t: &Tree) -> Vec<Bunch> {
    let n = t.vertex_count();
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![Bunch {
            vertices: vec![0, 1],
            leaves: vec![0, 1],
        }];
    }
    let start = t.leaves()[0];
    let order = t.grouped_leaf_order(start);
    let mut out: Vec<Bunch> = Vec::new();
    let mut center_of: Vec<Option<usize>> = vec![None; n];
    for &leaf in &order {
        let c = t.neighbors(leaf)[0];
        match center_of[c] {
            Some(i) => out[i].leaves.push(leaf),
            None => {
                center_of[c] = Some(out.len());
                out.push(Bunch {
                    vertices: Vec::new(),
                    leaves: vec![leaf],
                });
            }
        }
    }
    for (c, slot) in center_of.iter().enumerate() {
        if let Some(i) = *slot {
            let mut vs = out[i].leaves.clone();
            vs.push(c);
            vs.sort_unstable();
            out[i].vertices = vs;
        }
    }
    out
}

/// The tree obtained by contracting every bare path to a single edge.
#[derive(Debug, Clone)]
pub struct Contraction {
    /// The contracted tree; its labels are the indices of the surviving
    /// vertices in the source tree.
    pub tree: Tree,
    /// Source index of every contracted vertex.
    pub source_of: Vec<usize>,
    /// For every edge of `tree` (same order as `tree.edges()`), the bare path
    /// of the source tree it replaces.
    pub edge_paths: Vec<VertexPath>,
}

impl Contraction {
    /// Contracted edges expressed with source-tree indices.
    pub fn source_edges(&self) -> Vec<Edge> {
        self.tree
            .edges()
            .iter()
            .map(|e| Edge::new(self.source_of[e.lo()], self.source_of[e.hi()]))
            .collect()
    }

    pub fn bare_path_of(&self, e: Edge) -> Option<&VertexPath> {
        self.tree
            .edges()
            .iter()
            .position(|&f| f == e)
            .map(|i| &self.edge_paths[i])
    }
}

/// Contracts every bare path of `t` (which must have at least two vertices)
/// to a single edge.
pub fn contract_bare_paths(t: &Tree) -> Contraction {
    assert!(t.vertex_count() >= 2, "contraction needs an edge");
    let keep: Vec<usize> = (0..t.vertex_count()).filter(|&v| t.degree(v) != 2).collect();
    let mut new_of = vec![usize::MAX; t.vertex_count()];
    for (i, &v) in keep.iter().enumerate() {
        new_of[v] = i;
    }
    let paths = bare_paths(t);
    let edges: Vec<(usize, usize)> = paths
        .iter()
        .map(|p| (new_of[p.first()], new_of[p.last()]))
        .collect();
    let tree = Tree::with_labels(keep.clone(), &edges).expect("contraction of a tree is a tree");
    let edge_paths = tree
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (keep[e.lo()], keep[e.hi()]);
            paths
                .iter()
                .find(|p| (p.first(), p.last()) == (a.min(b), a.max(b)))
                .cloned()
                .expect("every contracted edge comes from a bare path")
        })
        .collect();
    Contraction {
        tree,
        source_of: keep,
        edge_paths,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::fixtures::*;

    fn paths(p: &TreeProfile) -> Vec<Vec<usize>> {
        p.bare_paths.iter().map(|b| b.vertices().to_vec()).collect()
    }

    #[test]
    fn profile_p4() {
        let p = profile(&p4());
        assert_eq!((p.h1, p.h2, p.h2star), (2, 2, 2));
        assert!(p.set_i.is_empty());
        assert_eq!(paths(&p), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn profile_ta() {
        let t = ta();
        let p = profile(&t);
        assert_eq!((p.h1, p.h2, p.h2star), (4, 1, 0));
        let l = |v: usize| t.label(v);
        let interior: Vec<(usize, usize)> =
            p.interior_edges.iter().map(|e| (l(e.lo()), l(e.hi()))).collect();
        assert_eq!(interior, vec![(1, 2), (1, 3)]);
        let bare: Vec<Vec<usize>> = p
            .bare_paths
            .iter()
            .map(|b| b.vertices().iter().map(|&v| l(v)).collect())
            .collect();
        assert_eq!(
            bare,
            vec![vec![2, 1, 3], vec![2, 4], vec![2, 5], vec![3, 6], vec![3, 7]]
        );
        assert_eq!(p.set_i, vec![0]);
        let bunches: Vec<Vec<usize>> = p
            .bunches
            .iter()
            .map(|b| b.vertices.iter().map(|&v| l(v)).collect())
            .collect();
        assert_eq!(bunches, vec![vec![2, 4, 5], vec![3, 6, 7]]);
        assert!(p.bunches.iter().all(|b| b.size() == 2));
    }

    #[test]
    fn profile_hub_and_star() {
        let p = profile(&hub());
        assert_eq!((p.h1, p.h2, p.h2star), (4, 2, 1));
        assert_eq!(p.set_i.len(), 1);
        assert_eq!(p.bare_paths[p.set_i[0]].vertices(), &[0, 1, 2, 3]);
        assert_eq!(p.h2star_by_sum(), 1);

        let p = profile(&k13());
        assert_eq!((p.h1, p.h2), (3, 0));
        assert!(p.interior_edges.is_empty());
        assert_eq!(p.bunches.len(), 1);
        assert_eq!(p.bunches[0].size(), 3);
    }

    #[test]
    fn singleton_profile_is_empty() {
        let p = profile(&Tree::singleton());
        assert_eq!((p.h1, p.h2, p.h2star), (0, 0, 0));
        assert!(p.bunches.is_empty());
    }

    #[test]
    fn useful_leaves() {
        // 0-1-2 path with a leaf 3 on 1? no: star-with-tail w=0 leaves 1,2,3, tail 0-4-5
        let t = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(profile(&t).useful_leaves, vec![1, 2, 3]);
        assert!(profile(&p4()).useful_leaves.is_empty());
    }

    #[test]
    fn contraction_examples() {
        let c = contract_bare_paths(&hub());
        let edges: Vec<(usize, usize)> =
            c.source_edges().iter().map(|e| (e.lo(), e.hi())).collect();
        assert_eq!(edges, vec![(0, 3), (0, 4), (0, 5), (3, 6), (3, 7)]);
        assert_eq!(
            c.bare_path_of(Edge::new(0, 1)).unwrap().vertices(),
            &[0, 1, 2, 3]
        );
        assert_eq!(c.tree.labels(), &[0, 3, 4, 5, 6, 7]);

        let c = contract_bare_paths(&k13());
        assert_eq!(c.tree, k13());

        let c = contract_bare_paths(&p4());
        assert_eq!(c.source_edges(), vec![Edge::new(0, 3)]);
        assert_eq!(c.edge_paths[0].vertices(), &[0, 1, 2, 3]);
    }
}
