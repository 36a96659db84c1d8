//! Vertex-separating-covering systems for trees.

use std::collections::BTreeMap;

use crate::canon::canonical_code;
use crate::edge_systems::{bunch_paths, planar_construction};
use crate::error::{Error, Result};
use crate::profile::{contract_bare_paths, profile, TreeProfile};
use crate::separation::{PathSystem, TargetKind, TargetSet};
use crate::tree::{fixtures, Edge, Tree, VertexPath};

/// `ceil(max((h1 + h2*) / 2, (2 h1 + h2*) / 3))`.
pub fn vertex_lower_bound(p: &TreeProfile) -> usize {
    (p.h1 + p.h2star).div_ceil(2).max((2 * p.h1 + p.h2star).div_ceil(3))
}

/// `ceil(2 h1 / 3) + ceil((h2* + 1) / 2)`.
pub fn vertex_upper_formula(p: &TreeProfile) -> usize {
    (2 * p.h1).div_ceil(3) + (p.h2star + 1).div_ceil(2)
}

/// Windows `(start, width)` over run positions `0..k`: `ceil((k+1)/2)`
/// windows of width `k - t + 1`, the `j`-th starting at `j`.
pub fn sliding_windows(k: usize) -> Vec<(usize, usize)> {
    if k == 0 {
        return Vec::new();
    }
    let t = (k + 1).div_ceil(2);
    let w = k - t + 1;
    (0..t).map(|j| (j, w)).collect()
}

/// Subpaths of `run` separating and covering its vertices and nothing else.
/// `run` must be consecutive degree-2 vertices of one bare path.
pub fn sliding_window_cover(t: &Tree, run: &[usize]) -> Result<Vec<VertexPath>> {
    if run.is_empty() {
        return Err(Error::NotConsecutive("empty run".into()));
    }
    for &v in run {
        if v >= t.vertex_count() {
            return Err(Error::UnknownVertex(v));
        }
        if t.degree(v) != 2 {
            return Err(Error::NotConsecutive(format!(
                "{} has degree {}",
                t.label(v),
                t.degree(v)
            )));
        }
    }
    for w in run.windows(2) {
        if !t.has_edge(w[0], w[1]) || w[0] == w[1] {
            return Err(Error::NotConsecutive(format!(
                "{} and {} are not adjacent",
                t.label(w[0]),
                t.label(w[1])
            )));
        }
    }
    Ok(sliding_windows(run.len())
        .into_iter()
        .map(|(s, w)| VertexPath::new(run[s..s + w].to_vec()))
        .collect())
}

/// Sliding windows over the whole vertex sequence of a path tree:
/// `ceil((n+1)/2)` paths.
pub fn path_vertex_system(t: &Tree) -> Result<PathSystem<'_>> {
    if !t.is_path() {
        return Err(Error::PreconditionViolated("the tree is not a path".into()));
    }
    let n = t.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    if let Some(&end) = t.leaves().first() {
        let d = t.distances_from(end);
        order.sort_by_key(|&v| d[v]);
    }
    let paths = sliding_windows(n)
        .into_iter()
        .map(|(s, w)| VertexPath::new(order[s..s + w].to_vec()))
        .collect();
    verified_v(t, paths, TargetKind::Vertices, "path windows")
}

fn verified_v<'t>(
    t: &'t Tree,
    paths: Vec<VertexPath>,
    kind: TargetKind,
    what: &str,
) -> Result<PathSystem<'t>> {
    let fs = PathSystem::new(t, paths)
        .map_err(|e| Error::InternalClassification(format!("{}: {}", what, e)))?;
    fs.check(&TargetSet::of(t, kind), true)
        .map_err(|e| Error::InternalClassification(format!("{}: {}", what, e)))?;
    Ok(fs)
}

/// Why `vertex_system` rejects `t`, if it does.
fn unsupported_reason(t: &Tree) -> Option<String> {
    if t.vertex_count() < 3 {
        return Some(format!("n = {}", t.vertex_count()));
    }
    let c = contract_bare_paths(t);
    if c.tree.vertex_count() < 3 {
        return Some("the tree is a path".into());
    }
    if c.tree.vertex_count() == 4 && c.tree.is_star() {
        return Some("the contracted tree is K13".into());
    }
    let p = profile(&c.tree);
    p.bunches.iter().find(|b| b.size() < 3).map(|b| {
        format!(
            "the contracted tree has a bunch of size {} at leaf {}",
            b.size(),
            t.label(c.source_of[b.leaves[0]])
        )
    })
}

pub fn vertex_system_supported(t: &Tree) -> bool {
    unsupported_reason(t).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dir {
    /// Toward the lower extreme of the bare path.
    A,
    B,
}

/// One end of a Step-3 path: a bare path and a position on it (1-based,
/// counted from the lower extreme).
#[derive(Debug, Clone, Copy)]
struct End {
    bare: usize,
    pos: usize,
}

/// A system of size at most [`vertex_upper_formula`] separating and
/// covering the vertices of `t`.
pub fn vertex_system(t: &Tree) -> Result<PathSystem<'_>> {
    if let Some(why) = unsupported_reason(t) {
        return Err(Error::UnsupportedTree(why));
    }
    let p = profile(t);
    let c = contract_bare_paths(t);
    let pc = profile(&c.tree);

    // Steps 1 and 2: bunch construction on the contraction, lifted.
    let mut paths: Vec<VertexPath> = bunch_paths(&c.tree, &pc)
        .into_iter()
        .map(|q| {
            t.unique_path(c.source_of[q.first()], c.source_of[q.last()])
                .expect("contracted vertices exist in the tree")
        })
        .collect();

    // Step 3: pair unmarked degree-2 vertices of distinct bare paths.
    let bare = &p.bare_paths;
    let is_i: Vec<bool> = (0..bare.len()).map(|i| p.set_i.contains(&i)).collect();
    let mut left: Vec<usize> = bare
        .iter()
        .zip(&is_i)
        .map(|(b, &i)| (b.len() - 1).saturating_sub(i as usize))
        .collect();
    let mut pairs: Vec<[usize; 2]> = Vec::new();
    loop {
        let mut open: Vec<usize> = (0..bare.len()).filter(|&i| left[i] > 0).collect();
        if open.len() < 2 {
            break;
        }
        open.sort_by_key(|&i| (std::cmp::Reverse(left[i]), i));
        let (x, y) = (open[0], open[1]);
        left[x] -= 1;
        left[y] -= 1;
        pairs.push([x, y]);
    }

    // Every end leaves its bare path through the extreme nearer its partner.
    let mut dist_cache: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut dist = |from: usize, to: usize| -> usize {
        dist_cache.entry(from).or_insert_with(|| t.distances_from(from))[to]
    };
    let dir_of = |own: usize, other: usize, dist: &mut dyn FnMut(usize, usize) -> usize| {
        let probe = bare[other].vertices()[1];
        if dist(bare[own].first(), probe) < dist(bare[own].last(), probe) {
            Dir::A
        } else {
            Dir::B
        }
    };
    let mut ends: Vec<[End; 2]> = Vec::with_capacity(pairs.len());
    let mut dirs: Vec<[Dir; 2]> = Vec::with_capacity(pairs.len());
    for &[x, y] in &pairs {
        dirs.push([dir_of(x, y, &mut dist), dir_of(y, x, &mut dist)]);
        ends.push([End { bare: x, pos: 0 }, End { bare: y, pos: 0 }]);
    }

    // The marked vertex of an I-path sits just past its A-directed ends, so
    // no Step-3 path reaches it.
    let mut marked: Vec<Option<usize>> = vec![None; bare.len()];
    for i in 0..bare.len() {
        if is_i[i] {
            let alpha = (0..pairs.len())
                .flat_map(|k| [0, 1].map(|s| (k, s)))
                .filter(|&(k, s)| ends[k][s].bare == i && dirs[k][s] == Dir::A)
                .count();
            marked[i] = Some(alpha + 1);
        }
    }
    let mut next_pos: Vec<usize> = vec![1; bare.len()];
    for k in 0..pairs.len() {
        for s in 0..2 {
            let b = ends[k][s].bare;
            if marked[b] == Some(next_pos[b]) {
                next_pos[b] += 1;
            }
            ends[k][s].pos = next_pos[b];
            next_pos[b] += 1;
        }
    }

    // Refinement: while a B-directed end precedes an A-directed end on the
    // same bare path, exchange them (u-x, v-y becomes u-y, v-x). Each
    // exchange removes one inversion, so this terminates.
    loop {
        let mut swapped = false;
        for (k1, k2, s1, s2) in (0..pairs.len()).flat_map(|k1| {
            (0..pairs.len()).flat_map(move |k2| {
                [(0, 0), (0, 1), (1, 0), (1, 1)].map(move |(s1, s2)| (k1, k2, s1, s2))
            })
        }) {
            let (e1, e2) = (ends[k1][s1], ends[k2][s2]);
            if e1.bare == e2.bare
                && e1.pos < e2.pos
                && dirs[k1][s1] == Dir::B
                && dirs[k2][s2] == Dir::A
            {
                ends[k1][s1].pos = e2.pos;
                ends[k2][s2].pos = e1.pos;
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }

    let vertex_at = |e: End| bare[e.bare].vertices()[e.pos];
    for e in &ends {
        paths.push(
            t.unique_path(vertex_at(e[0]), vertex_at(e[1]))
                .expect("vertices of the tree"),
        );
    }

    // Step 4: whatever is left lies on one bare path, consecutively.
    if let Some(i) = (0..bare.len()).find(|&i| left[i] > 0) {
        let used: Vec<usize> = ends
            .iter()
            .flatten()
            .filter(|e| e.bare == i)
            .map(|e| e.pos)
            .chain(marked[i])
            .collect();
        let run: Vec<usize> = (1..bare[i].len())
            .filter(|pos| !used.contains(pos))
            .map(|pos| bare[i].vertices()[pos])
            .collect();
        paths.extend(sliding_window_cover(t, &run)?);
    }

    verified_v(t, paths, TargetKind::Vertices, "vertex system")
}

/// The planar construction, checked against vertices and interior edges.
pub fn vertex_interior_system(t: &Tree) -> Result<PathSystem<'_>> {
    let fs = planar_construction(t)?;
    fs.check(&TargetSet::vertices_and_interior_edges(t), true)
        .map_err(|e| Error::InternalClassification(format!("vertex interior system: {}", e)))?;
    Ok(fs)
}

/// All degrees in {1, 3}, at least four vertices.
pub fn is_c13(t: &Tree) -> bool {
    t.vertex_count() >= 4 && (0..t.vertex_count()).all(|v| matches!(t.degree(v), 1 | 3))
}

/// A tree of [`is_c13`] with every interior edge subdivided once.
pub fn is_c13_star(t: &Tree) -> bool {
    let n = t.vertex_count();
    if n < 4 || !(0..n).all(|v| matches!(t.degree(v), 1..=3)) {
        return false;
    }
    let deg3_pair = |e: &Edge| t.degree(e.lo()) == 3 && t.degree(e.hi()) == 3;
    if t.edges().iter().any(deg3_pair) {
        return false;
    }
    (0..n)
        .filter(|&v| t.degree(v) == 2)
        .all(|v| t.neighbors(v).iter().all(|&w| t.degree(w) == 3))
}

/// Subdivides every interior edge once.
pub fn c13_star(t: &Tree) -> Tree {
    let interior = profile(t).interior_edges;
    let n = t.vertex_count();
    let added: Vec<(usize, usize)> = interior
        .iter()
        .enumerate()
        .flat_map(|(i, e)| [(e.lo(), n + i), (n + i, e.hi())])
        .collect();
    t.rebuild(&[], &interior, interior.len(), &added)
        .expect("subdivision keeps a tree")
        .0
}

/// Every tree of [`is_c13`] on at most `max_n` vertices, built from K13 by
/// repeatedly giving some leaf two new leaves.
pub fn c13_trees(max_n: usize) -> Vec<Tree> {
    let mut seen: BTreeMap<String, Tree> = BTreeMap::new();
    let mut level = vec![fixtures::k13()];
    while let Some(first) = level.first() {
        if first.vertex_count() > max_n {
            break;
        }
        let mut next: BTreeMap<String, Tree> = BTreeMap::new();
        for t in &level {
            seen.insert(canonical_code(t), t.clone());
            let n = t.vertex_count();
            for leaf in t.leaves() {
                let (grown, _) = t
                    .rebuild(&[], &[], 2, &[(leaf, n), (leaf, n + 1)])
                    .expect("adding leaves keeps a tree");
                next.entry(canonical_code(&grown)).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    let mut out: Vec<Tree> = seen.into_values().collect();
    out.sort_by_key(|t| t.vertex_count());
    out
}

/// The exact optimum when `t` belongs to a family whose value is known.
pub fn sharp_value(t: &Tree, kind: TargetKind) -> Option<usize> {
    let n = t.vertex_count();
    let p = profile(t);
    match kind {
        TargetKind::Vertices => {
            if t.is_path() {
                return Some((n + 1).div_ceil(2));
            }
            if is_c13_star(t) {
                return Some(p.h1);
            }
            if t.is_star() && p.h1 >= 4 {
                return Some((2 * p.h1).div_ceil(3));
            }
            if p.h2 == 0 && p.bunches.len() >= 2 && p.bunches.iter().all(|b| b.size() >= 3) {
                return Some((2 * p.h1).div_ceil(3));
            }
            None
        }
        TargetKind::VerticesAndInteriorEdges if is_c13(t) => Some(p.h1),
        _ => None,
    }
}

/// Everything known about the vertex optimum of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexBounds {
    pub lower: usize,
    pub upper: usize,
    pub constructed_size: Option<usize>,
    pub sharp: Option<usize>,
    pub warnings: Vec<String>,
}

pub fn vertex_bounds(t: &Tree) -> VertexBounds {
    let p = profile(t);
    let mut warnings = Vec::new();
    let constructed_size = match vertex_system(t) {
        Ok(fs) => Some(fs.len()),
        Err(e) => {
            warnings.push(e.to_string());
            None
        }
    };
    if constructed_size.is_some() && p.bunches.iter().any(|b| b.size() < 3) {
        warnings.push(
            "bunch sizes checked on the contracted tree; the tree itself has a bunch smaller than 3"
                .into(),
        );
    }
    VertexBounds {
        lower: vertex_lower_bound(&p),
        upper: vertex_upper_formula(&p),
        constructed_size,
        sharp: sharp_value(t, TargetKind::Vertices),
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{enumerate_unchecked, is_isomorphic};
    use crate::tree::fixtures::*;

    #[test]
    fn bound_examples() {
        let lb = |t: &Tree| vertex_lower_bound(&profile(t));
        assert_eq!(lb(&p4()), 2);
        assert_eq!(lb(&hub()), 3);
        assert_eq!(lb(&ds6()), 4);
        let ub = |h1, h2star| {
            let mut p = profile(&p4());
            p.h1 = h1;
            p.h2star = h2star;
            vertex_upper_formula(&p)
        };
        assert_eq!(ub(6, 0), 5);
        assert_eq!(ub(6, 1), 5);
        assert_eq!(ub(3, 0), 3);
    }

    fn interval_signatures(k: usize) -> Vec<Vec<usize>> {
        let ws = sliding_windows(k);
        (0..k)
            .map(|i| {
                (0..ws.len())
                    .filter(|&j| ws[j].0 <= i && i < ws[j].0 + ws[j].1)
                    .collect()
            })
            .collect()
    }

    #[test]
    fn window_examples() {
        assert_eq!(sliding_windows(1), vec![(0, 1)]);
        assert_eq!(interval_signatures(3), vec![vec![0], vec![0, 1], vec![1]]);
        assert_eq!(
            interval_signatures(4),
            vec![vec![0], vec![0, 1], vec![1, 2], vec![2]]
        );
    }

    #[test]
    fn window_signatures_are_intervals() {
        for k in 1..=64 {
            let ws = sliding_windows(k);
            let (t, w) = (ws.len(), ws[0].1);
            assert_eq!(t, (k + 1).div_ceil(2));
            let sigs = interval_signatures(k);
            for (i, s) in sigs.iter().enumerate() {
                let lo = (i + 1).saturating_sub(w);
                let hi = i.min(t - 1);
                assert_eq!(s, &(lo..=hi).collect::<Vec<_>>());
            }
            let mut sorted = sigs.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), k);
        }
    }

    #[test]
    fn window_cover_checks_the_run() {
        let t = path(6);
        let cover = sliding_window_cover(&t, &[1, 2, 3]).unwrap();
        assert_eq!(cover, vec![VertexPath::new(vec![1, 2]), VertexPath::new(vec![2, 3])]);
        assert!(matches!(sliding_window_cover(&t, &[1, 3]), Err(Error::NotConsecutive(_))));
        assert!(matches!(sliding_window_cover(&t, &[0, 1]), Err(Error::NotConsecutive(_))));
    }

    #[test]
    fn vertex_system_examples() {
        assert_eq!(vertex_system(&ds6()).unwrap().len(), 4);
        let t = ds6s();
        let fs = vertex_system(&t).unwrap();
        assert_eq!(fs.len(), 4);
        let eight = t.index_of(8).unwrap();
        let sig = fs.incidence(crate::Element::Vertex(eight)).unwrap();
        let e01 = crate::Element::edge(t.index_of(0).unwrap(), eight);
        assert_eq!(sig, fs.incidence(e01).unwrap());

        let t = ds6ss();
        let fs = vertex_system(&t).unwrap();
        assert_eq!(fs.len(), 5);
        assert_eq!(fs.labeled_paths().last().unwrap(), &vec![9]);

        assert_eq!(vertex_system(&star(4)).unwrap().len(), 3);
        assert!(matches!(vertex_system(&p4()), Err(Error::UnsupportedTree(_))));
        assert!(matches!(vertex_system(&k13()), Err(Error::UnsupportedTree(_))));
    }

    #[test]
    fn vertex_system_within_bounds_on_small_trees() {
        let mut supported = 0;
        for n in 3..=12 {
            for t in enumerate_unchecked(n) {
                if !vertex_system_supported(&t) {
                    continue;
                }
                supported += 1;
                let p = profile(&t);
                let fs = vertex_system(&t).unwrap();
                assert!(fs.len() <= vertex_upper_formula(&p), "{:?}", t.edges());
                assert!(fs.len() >= vertex_lower_bound(&p));
            }
        }
        assert!(supported > 50);
    }

    #[test]
    fn interior_system_examples() {
        assert_eq!(vertex_interior_system(&k13()).unwrap().len(), 3);
        let big = c13_trees(10).into_iter().find(|t| t.vertex_count() == 10).unwrap();
        let p = profile(&big);
        let fs = vertex_interior_system(&big).unwrap();
        assert_eq!(fs.len(), p.h1);
        assert_eq!(p.h1, p.interior_edges.len() + 3);
        assert!(matches!(vertex_interior_system(&p4()), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn c13_generator_matches_recognizer() {
        let generated = c13_trees(13);
        for n in 4..=13 {
            let from_gen: Vec<&Tree> = generated.iter().filter(|t| t.vertex_count() == n).collect();
            let recognized: Vec<Tree> =
                enumerate_unchecked(n).into_iter().filter(is_c13).collect();
            assert_eq!(from_gen.len(), recognized.len(), "n = {}", n);
            for t in &recognized {
                assert!(from_gen.iter().any(|g| is_isomorphic(g, t)));
            }
        }
        for t in &generated {
            assert!(is_c13_star(&c13_star(t)));
        }
        assert!(!is_c13_star(&ds6()));
        assert!(is_c13_star(&ta()));
    }

    #[test]
    fn sharp_examples() {
        assert_eq!(sharp_value(&p4(), TargetKind::Vertices), Some(3));
        assert_eq!(sharp_value(&ds6(), TargetKind::Vertices), Some(4));
        assert_eq!(sharp_value(&k13(), TargetKind::Vertices), Some(3));
        assert_eq!(sharp_value(&hub(), TargetKind::Vertices), None);
    }
}
