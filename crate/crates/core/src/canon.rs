//! Canonical forms of unlabeled trees: isomorphism tests and enumeration.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::tree::{fixtures, Tree};

/// Largest `n` accepted by [`enumerate_trees`].
pub const ENUMERATION_CAP: usize = 10;

/// The one or two centres of `t`.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &w in t.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut c = layer;
    c.sort_unstable();
    c
}

/// AHU code of every vertex when `t` hangs from `root`.
fn rooted_codes(t: &Tree, root: usize) -> Vec<String> {
    let n = t.vertex_count();
    let parent = t.parents_from(root);
    // Vertices in BFS order; reversed, every child precedes its parent.
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in t.neighbors(v) {
            if w != parent[v] {
                order.push(w);
            }
        }
        i += 1;
    }
    let mut codes = vec![String::new(); n];
    for &v in order.iter().rev() {
        let mut kids: Vec<&String> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent[v])
            .map(|&w| &codes[w])
            .collect();
        kids.sort();
        let mut s = String::with_capacity(2 + kids.iter().map(|k| k.len()).sum::<usize>());
        s.push('(');
        for k in kids {
            s.push_str(k);
        }
        s.push(')');
        codes[v] = s;
    }
    codes
}

/// Isomorphism-invariant string; equal codes iff isomorphic trees.
pub fn canonical_code(t: &Tree) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_codes(t, c).swap_remove(c))
        .min()
        .unwrap_or_default()
}

/// A bijection `m` with `a.has_edge(x, y) == b.has_edge(m[x], m[y])`, if any.
pub fn isomorphism(a: &Tree, b: &Tree) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.degree_sequence() != b.degree_sequence() {
        return None;
    }
    let ca = centers(a);
    let ra = ca[0];
    let codes_a = rooted_codes(a, ra);
    for rb in centers(b) {
        let codes_b = rooted_codes(b, rb);
        if codes_b[rb] != codes_a[ra] {
            continue;
        }
        let pa = a.parents_from(ra);
        let pb = b.parents_from(rb);
        let mut map = vec![usize::MAX; a.vertex_count()];
        let mut stack = vec![(ra, rb)];
        while let Some((x, y)) = stack.pop() {
            map[x] = y;
            let mut kx: Vec<usize> = a.neighbors(x).iter().copied().filter(|&c| c != pa[x]).collect();
            let mut ky: Vec<usize> = b.neighbors(y).iter().copied().filter(|&c| c != pb[y]).collect();
            kx.sort_by(|&p, &q| codes_a[p].cmp(&codes_a[q]));
            ky.sort_by(|&p, &q| codes_b[p].cmp(&codes_b[q]));
            stack.extend(kx.into_iter().zip(ky));
        }
        return Some(map);
    }
    None
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    isomorphism(a, b).is_some()
}

/// True iff `t` is the binary tree of depth two.
pub fn is_ta(t: &Tree) -> bool {
    t.vertex_count() == 7 && is_isomorphic(t, &fixtures::ta())
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            what: "n",
            got: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(enumerate_unchecked(n))
}

pub(crate) fn enumerate_unchecked(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Tree::singleton()];
    for _ in 1..n {
        let mut next: BTreeMap<String, Tree> = BTreeMap::new();
        for t in &level {
            let m = t.vertex_count();
            let mut edges: Vec<(usize, usize)> = t.edges().iter().map(|e| (e.lo(), e.hi())).collect();
            for v in 0..m {
                edges.push((v, m));
                let grown = Tree::from_edges(m + 1, &edges).expect("adding a leaf keeps a tree");
                edges.pop();
                next.entry(canonical_code(&grown)).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    level
}
