//! Edge-separating-covering systems for trees: the ABC, planar and bunch
//! constructions, and the recursive optimal construction.

use crate::canon::{is_ta, isomorphism};
use crate::error::{Error, Result};
use crate::profile::{profile, TreeProfile};
use crate::separation::{PathSystem, TargetKind, TargetSet};
use crate::tree::{Edge, Tree, VertexPath};

/// `max(ceil((2 h1 + h2) / 3), ceil((h1 + h2) / 2))`.
pub fn edge_formula(h1: usize, h2: usize) -> usize {
    (2 * h1 + h2).div_ceil(3).max((h1 + h2).div_ceil(2))
}

/// The optimum claimed for `t`: [`edge_formula`], except 4 for the binary
/// tree of depth two.
pub fn theorem_value(t: &Tree) -> usize {
    if is_ta(t) {
        return 4;
    }
    let p = profile(t);
    edge_formula(p.h1, p.h2)
}

fn path(t: &Tree, a: usize, b: usize) -> VertexPath {
    t.unique_path(a, b).expect("vertices of the tree")
}

/// Fails with `InternalClassificationError` unless `paths` separates and
/// covers each target kind.
fn verified(t: &Tree, paths: Vec<VertexPath>, kinds: &[TargetKind], what: &str) -> Result<Vec<VertexPath>> {
    let fs = PathSystem::new(t, paths)
        .map_err(|e| Error::InternalClassification(format!("{}: {}", what, e)))?;
    for &k in kinds {
        fs.check(&TargetSet::of(t, k), true)
            .map_err(|e| Error::InternalClassification(format!("{} ({:?}): {}", what, k, e)))?;
    }
    Ok(fs.into_paths())
}

fn abc_paths(t: &Tree) -> Vec<VertexPath> {
    let start = t.leaves()[0];
    let order = t.dfs_leaf_order(start).expect("start is a leaf");
    let k = order.len() / 3;
    let (a, rest) = order.split_at(k);
    let (b, c) = rest.split_at(k);
    let mut out: Vec<VertexPath> = (0..k).map(|i| path(t, a[i], b[i])).collect();
    out.extend((0..k).map(|i| path(t, a[i], c[i])));
    out
}

/// Two paths per three leaves `a_i, b_i, c_i` of a DFS naming.
pub fn abc_construction(t: &Tree) -> Result<PathSystem<'_>> {
    let p = profile(t);
    if t.vertex_count() < 3 || p.h2 != 0 || p.h1 % 3 != 0 {
        return Err(Error::PreconditionViolated(format!(
            "ABC construction needs n >= 3, h2 = 0 and 3 | h1 (n = {}, h1 = {}, h2 = {})",
            t.vertex_count(),
            p.h1,
            p.h2
        )));
    }
    let paths = verified(t, abc_paths(t), &[TargetKind::Edges], "ABC construction")?;
    Ok(PathSystem::new_unchecked(t, paths))
}

/// Leaves in the cyclic order of the canonical planar drawing.
fn cyclic_leaves(t: &Tree) -> Vec<usize> {
    t.dfs_leaf_order(t.leaves()[0]).expect("start is a leaf")
}

/// One path between every two cyclically consecutive leaves.
pub fn planar_construction(t: &Tree) -> Result<PathSystem<'_>> {
    let p = profile(t);
    if p.h2 != 0 || p.h1 < 3 {
        return Err(Error::PreconditionViolated(format!(
            "planar construction needs h2 = 0 and h1 >= 3 (h1 = {}, h2 = {})",
            p.h1, p.h2
        )));
    }
    let leaves = cyclic_leaves(t);
    let k = leaves.len();
    let paths = (0..k).map(|i| path(t, leaves[i], leaves[(i + 1) % k])).collect();
    let paths = verified(
        t,
        paths,
        &[TargetKind::Edges, TargetKind::VerticesAndInteriorEdges],
        "planar construction",
    )?;
    Ok(PathSystem::new_unchecked(t, paths))
}

pub(crate) fn bunch_paths(t: &Tree, p: &TreeProfile) -> Vec<VertexPath> {
    let r = p.bunches.len();
    let mut out = Vec::new();
    let mut pool = Vec::new();
    if r == 1 {
        pool.extend_from_slice(&p.bunches[0].leaves);
    } else {
        for (i, b) in p.bunches.iter().enumerate() {
            let l = b.leaves.len();
            let next = &p.bunches[(i + 1) % r];
            out.push(path(t, b.leaves[l - 2], b.leaves[l - 1]));
            out.push(path(t, b.leaves[l - 1], next.leaves[0]));
            if l > 3 {
                pool.extend_from_slice(&b.leaves[1..l - 2]);
            }
        }
    }
    let mut groups = pool.chunks_exact(3);
    for g in groups.by_ref() {
        out.push(path(t, g[0], g[1]));
        out.push(path(t, g[1], g[2]));
    }
    for &leaf in groups.remainder() {
        out.push(VertexPath::new(vec![leaf, t.neighbors(leaf)[0]]));
    }
    out
}

/// Step 1 links consecutive bunches; step 2 covers the remaining leaves with
/// seagulls and single edges.
pub fn bunch_construction(t: &Tree) -> Result<PathSystem<'_>> {
    let p = profile(t);
    if t.vertex_count() < 3 {
        return Err(Error::PreconditionViolated("bunch construction needs n >= 3".into()));
    }
    if t.vertex_count() == 4 && t.is_star() {
        return Err(Error::PreconditionViolated(
            "bunch construction is undefined for K13".into(),
        ));
    }
    if let Some(b) = p.bunches.iter().find(|b| b.size() < 2) {
        return Err(Error::PreconditionViolated(format!(
            "bunch at leaf {} has size {}",
            t.label(b.leaves[0]),
            b.size()
        )));
    }
    let paths = bunch_paths(t, &p);
    let paths = if p.h2 == 0 && p.bunches.iter().all(|b| b.size() >= 3) {
        verified(
            t,
            paths,
            &[TargetKind::Edges, TargetKind::VerticesAndInteriorEdges],
            "bunch construction",
        )?
    } else {
        paths
    };
    Ok(PathSystem::new_unchecked(t, paths))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionCase {
    DegreeAtLeast4,
    Degree3NonNeighbor,
}

/// A useful leaf and a degree-2 vertex whose removal shrinks `(h1, h2)` by one each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionPair {
    pub leaf: usize,
    pub deg2: usize,
    pub case: ReductionCase,
}

fn pair_case(t: &Tree, u: usize, v: usize) -> Option<ReductionCase> {
    if u == v || !t.is_leaf(u) || t.degree(v) != 2 {
        return None;
    }
    let w = t.neighbors(u)[0];
    match t.degree(w) {
        d if d >= 4 => Some(ReductionCase::DegreeAtLeast4),
        3 if !t.has_edge(w, v) => Some(ReductionCase::Degree3NonNeighbor),
        _ => None,
    }
}

/// The least reduction pair, by (leaf, degree-2 vertex). With `forbid_ta`,
/// pairs whose reduced tree is the binary tree of depth two are skipped.
pub fn find_reduction_pair(t: &Tree, forbid_ta: bool) -> Option<ReductionPair> {
    let p = profile(t);
    for &u in &p.useful_leaves {
        for &v in &p.deg2 {
            if let Some(case) = pair_case(t, u, v) {
                let rp = ReductionPair { leaf: u, deg2: v, case };
                if forbid_ta {
                    let (reduced, _) = apply_reduction(t, rp).expect("pair was just validated");
                    if is_ta(&reduced) {
                        continue;
                    }
                }
                return Some(rp);
            }
        }
    }
    None
}

/// How to carry a path system of a reduced tree back to the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    /// Original index of every vertex of the reduced tree.
    pub old_of_new: Vec<usize>,
    /// `(a, b, mid)`: an edge `ab` of the reduced tree stands for `a mid b`.
    pub expansions: Vec<(usize, usize, usize)>,
    /// Paths of the original tree appended after lifting.
    pub appended: Vec<VertexPath>,
}

impl Lift {
    pub fn apply(&self, paths: &[VertexPath]) -> Vec<VertexPath> {
        let mut out: Vec<VertexPath> = paths
            .iter()
            .map(|p| {
                let vs: Vec<usize> = p.vertices().iter().map(|&v| self.old_of_new[v]).collect();
                let mut lifted = vec![vs[0]];
                for w in vs.windows(2) {
                    let e = Edge::new(w[0], w[1]);
                    if let Some(&(_, _, mid)) =
                        self.expansions.iter().find(|&&(a, b, _)| Edge::new(a, b) == e)
                    {
                        lifted.push(mid);
                    }
                    lifted.push(w[1]);
                }
                VertexPath::new(lifted)
            })
            .collect();
        out.extend(self.appended.iter().cloned());
        out
    }
}

fn other_neighbors(t: &Tree, x: usize, not: usize) -> (usize, usize) {
    let ns: Vec<usize> = t.neighbors(x).iter().copied().filter(|&y| y != not).collect();
    (ns[0], ns[1])
}

fn two_neighbors(t: &Tree, x: usize) -> (usize, usize) {
    let ns = t.neighbors(x);
    (ns[0], ns[1])
}

/// Removes `removed`, adds `added`, and records the expansions to undo it.
fn reduce(
    t: &Tree,
    removed: &[usize],
    added: &[(usize, usize, usize)],
    appended: Vec<VertexPath>,
) -> Result<(Tree, Lift)> {
    let edges: Vec<(usize, usize)> = added.iter().map(|&(a, b, _)| (a, b)).collect();
    let (reduced, old_of_new) = t.rebuild(removed, &[], 0, &edges)?;
    Ok((
        reduced,
        Lift {
            old_of_new,
            expansions: added.to_vec(),
            appended,
        },
    ))
}

pub fn apply_reduction(t: &Tree, rp: ReductionPair) -> Result<(Tree, Lift)> {
    let (u, v) = (rp.leaf, rp.deg2);
    if u >= t.vertex_count() || v >= t.vertex_count() {
        return Err(Error::InvalidPair(format!("({}, {}) out of range", u, v)));
    }
    if pair_case(t, u, v) != Some(rp.case) {
        return Err(Error::InvalidPair(format!(
            "({}, {}) is not a {:?} reduction pair",
            t.label(u),
            t.label(v),
            rp.case
        )));
    }
    let w = t.neighbors(u)[0];
    if t.degree(w) == 2 {
        return Err(Error::InvalidPair(format!("leaf {} is not useful", t.label(u))));
    }
    let (v1, v2) = two_neighbors(t, v);
    let appended = vec![path(t, u, v)];
    match rp.case {
        ReductionCase::DegreeAtLeast4 => reduce(t, &[u, v], &[(v1, v2, v)], appended),
        ReductionCase::Degree3NonNeighbor => {
            let (w1, w2) = other_neighbors(t, w, u);
            reduce(t, &[u, w, v], &[(w1, w2, w), (v1, v2, v)], appended)
        }
    }
}

/// Maps `family` (paths in `fixture`'s indices) into `t` if the two trees
/// are isomorphic; the result is sorted.
fn family_via(t: &Tree, fixture: &[(usize, usize)], family: &[&[usize]]) -> Option<Vec<VertexPath>> {
    if t.vertex_count() != fixture.len() + 1 {
        return None;
    }
    let f = Tree::from_edges(fixture.len() + 1, fixture).expect("fixture is a tree");
    let m = isomorphism(&f, t)?;
    let mut out: Vec<VertexPath> = family
        .iter()
        .map(|p| VertexPath::new(p.iter().map(|&x| m[x]).collect()))
        .collect();
    out.sort();
    Some(out)
}

// 0 root, 1 and 2 its children, 3..=6 leaves.
const TA_EDGES: &[(usize, usize)] = &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)];
const TA_FAMILY: &[&[usize]] = &[&[0, 1, 3], &[0, 1, 4], &[0, 2, 5], &[0, 2, 6]];

// u=0 u'=1 y1=2 v=3 y2=4
const IRR5_EDGES: &[(usize, usize)] = &[(0, 2), (1, 2), (2, 3), (3, 4)];
const IRR5_FAMILY: &[&[usize]] = &[&[0, 2, 3], &[1, 2, 3, 4], &[3, 4]];

// x1=0 v1=1 y=2 v2=3 x2=4 z=5
const IRR6_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)];
const IRR6_FAMILY: &[&[usize]] = &[&[0, 1, 2, 3], &[1, 2, 3, 4], &[1, 2, 5]];

// u=0 u1=1 u2=2 w=3 v1=4 y1=5 v2=6 y2=7 u3=8
const IRR9_EDGES: &[(usize, usize)] =
    &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)];
const IRR9_FAMILY: &[&[usize]] = &[
    &[0, 3, 4, 5, 6],
    &[1, 3, 4, 5, 6, 7],
    &[2, 3, 4],
    &[1, 3, 4, 5, 8],
];

/// Every leaf hangs off a degree-2 vertex: path `i` runs from leaf `v_i`
/// to the neighbour of the next leaf.
fn no_useful_leaf_paths(t: &Tree) -> Vec<VertexPath> {
    let leaves = cyclic_leaves(t);
    let us: Vec<usize> = leaves.iter().map(|&l| t.neighbors(l)[0]).collect();
    if us[0] == us[1] {
        // The path on three vertices.
        return vec![
            VertexPath::new(vec![leaves[0], us[0]]),
            VertexPath::new(vec![us[0], leaves[1]]),
        ];
    }
    let k = leaves.len();
    (0..k).map(|i| path(t, leaves[i], us[(i + 1) % k])).collect()
}

/// `h2 = 0`: the ABC construction, after adding or removing one leaf so that
/// 3 divides h1.
fn no_deg2_paths(t: &Tree, p: &TreeProfile) -> Result<Vec<VertexPath>> {
    let n = t.vertex_count();
    match p.h1 % 3 {
        0 => Ok(abc_paths(t)),
        2 => {
            let c = (0..n).find(|&v| !t.is_leaf(v)).expect("n >= 3 has a non-leaf");
            let (grown, _) = t.rebuild(&[], &[], 1, &[(c, n)])?;
            Ok(abc_paths(&grown)
                .into_iter()
                .map(|q| VertexPath::new(q.into_vertices().into_iter().filter(|&x| x != n).collect()))
                .collect())
        }
        _ => {
            let u = p.leaves[0];
            let w = t.neighbors(u)[0];
            let (reduced, lift) = if t.degree(w) > 3 {
                reduce(t, &[u], &[], vec![VertexPath::new(vec![u, w])])?
            } else {
                let (u1, u2) = other_neighbors(t, w, u);
                reduce(t, &[u, w], &[(u1, u2, w)], vec![VertexPath::new(vec![u, w, u1])])?
            };
            Ok(lift.apply(&abc_paths(&reduced)))
        }
    }
}

/// Subdivides `e` with a fresh vertex, solves, and merges the two halves back.
fn subdivided_paths(t: &Tree, e: Edge) -> Result<Vec<VertexPath>> {
    let n = t.vertex_count();
    let (a, b) = (e.lo(), e.hi());
    let (grown, _) = t.rebuild(&[], &[e], 1, &[(a, n), (n, b)])?;
    let inner = edge_paths(&grown)?;
    Ok(inner
        .into_iter()
        .map(|q| {
            let vs = q.into_vertices();
            if vs == [n] {
                return VertexPath::single(a);
            }
            let last = vs.len() - 1;
            let merged = vs
                .iter()
                .enumerate()
                .filter_map(|(i, &x)| {
                    if x != n {
                        Some(x)
                    } else if i == 0 || i == last {
                        // An end at the fresh vertex moves to the far side.
                        let nb = if i == 0 { vs[1] } else { vs[last - 1] };
                        Some(if nb == a { b } else { a })
                    } else {
                        None
                    }
                })
                .collect();
            VertexPath::new(merged)
        })
        .collect())
}

fn more_deg2_paths(t: &Tree, p: &TreeProfile) -> Result<Vec<VertexPath>> {
    if (p.h1 + p.h2) % 2 == 1 {
        let mut last_err = None;
        for &e in t.edges() {
            match subdivided_paths(t, e)
                .and_then(|ps| verified(t, ps, &[TargetKind::Edges], "subdivision"))
            {
                Ok(ps) => return Ok(ps),
                Err(err) => last_err = Some(err),
            }
        }
        return Err(last_err.expect("a tree with h1 < h2 has edges"));
    }
    for (i, &u) in p.deg2.iter().enumerate() {
        for &v in &p.deg2[i + 1..] {
            if t.has_edge(u, v) {
                continue;
            }
            let (u1, u2) = two_neighbors(t, u);
            let (v1, v2) = two_neighbors(t, v);
            let (reduced, lift) =
                reduce(t, &[u, v], &[(u1, u2, u), (v1, v2, v)], vec![path(t, u, v)])?;
            return Ok(lift.apply(&edge_paths(&reduced)?));
        }
    }
    Err(Error::InternalClassification(
        "h1 < h2 but no two non-adjacent degree-2 vertices".into(),
    ))
}

fn edge_paths(t: &Tree) -> Result<Vec<VertexPath>> {
    let n = t.vertex_count();
    if n < 2 {
        return Err(Error::TreeTooSmall(n));
    }
    if n == 2 {
        return Ok(vec![VertexPath::new(vec![0, 1])]);
    }
    if let Some(f) = family_via(t, TA_EDGES, TA_FAMILY) {
        return Ok(f);
    }
    let p = profile(t);
    if p.h1 < p.h2 {
        return more_deg2_paths(t, &p);
    }
    if p.useful_leaves.is_empty() {
        return Ok(no_useful_leaf_paths(t));
    }
    if p.h2 == 0 {
        return no_deg2_paths(t, &p);
    }
    if let Some(rp) = find_reduction_pair(t, true) {
        let (reduced, lift) = apply_reduction(t, rp)?;
        return Ok(lift.apply(&edge_paths(&reduced)?));
    }
    for (edges, family) in [
        (IRR5_EDGES, IRR5_FAMILY),
        (IRR6_EDGES, IRR6_FAMILY),
        (IRR9_EDGES, IRR9_FAMILY),
    ] {
        if let Some(f) = family_via(t, edges, family) {
            return Ok(f);
        }
    }
    Err(Error::InternalClassification(format!(
        "no case applies to a tree with n = {}, h1 = {}, h2 = {}",
        n, p.h1, p.h2
    )))
}

/// A minimum edge-separating-covering system of `t`, verified before return.
pub fn edge_system(t: &Tree) -> Result<PathSystem<'_>> {
    let paths = edge_paths(t)?;
    let paths = verified(t, paths, &[TargetKind::Edges], "edge system")?;
    Ok(PathSystem::new_unchecked(t, paths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::fixtures::*;

    fn labeled(fs: &PathSystem<'_>) -> Vec<Vec<usize>> {
        fs.labeled_paths()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(edge_formula(2, 2), 2);
        assert_eq!(edge_formula(4, 1), 3);
        assert_eq!(edge_formula(6, 0), 4);
        assert_eq!(theorem_value(&ta()), 4);
    }

    #[test]
    fn abc_examples() {
        let t = k13();
        assert_eq!(labeled(&abc_construction(&t).unwrap()), vec![vec![1, 0, 2], vec![1, 0, 3]]);
        let t = ds6();
        assert_eq!(
            labeled(&abc_construction(&t).unwrap()),
            vec![vec![2, 0, 1, 6], vec![5, 1, 7], vec![2, 0, 3], vec![5, 1, 0, 4]]
        );
        assert!(matches!(abc_construction(&p4()), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn planar_examples() {
        let t = k13();
        assert_eq!(
            labeled(&planar_construction(&t).unwrap()),
            vec![vec![1, 0, 2], vec![2, 0, 3], vec![3, 0, 1]]
        );
        let t = ds6();
        let fs = planar_construction(&t).unwrap();
        assert_eq!(fs.len(), 6);
        for e in t.edges() {
            assert_eq!(fs.paths().iter().filter(|p| p.contains_edge(*e)).count(), 2);
        }
        assert!(matches!(planar_construction(&p4()), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn bunch_examples() {
        let t = ds6();
        assert_eq!(
            labeled(&bunch_construction(&t).unwrap()),
            vec![vec![3, 0, 4], vec![4, 0, 1, 5], vec![6, 1, 7], vec![7, 1, 0, 2]]
        );
        let t = star(4);
        assert_eq!(
            labeled(&bunch_construction(&t).unwrap()),
            vec![vec![1, 0, 2], vec![2, 0, 3], vec![4, 0]]
        );
        assert!(matches!(bunch_construction(&k13()), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn reduction_pair_examples() {
        // w = 0 of degree 4: leaves 1, 2, 3 and the tail 0-4-5.
        let t = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]).unwrap();
        let rp = find_reduction_pair(&t, false).unwrap();
        assert_eq!(
            rp,
            ReductionPair {
                leaf: 1,
                deg2: 4,
                case: ReductionCase::DegreeAtLeast4
            }
        );
        let (r, lift) = apply_reduction(&t, rp).unwrap();
        let (p, q) = (profile(&t), profile(&r));
        assert_eq!((q.h1, q.h2), (p.h1 - 1, p.h2 - 1));
        assert_eq!(lift.appended[0].vertices(), &[1, 0, 4]);

        assert_eq!(find_reduction_pair(&ta(), false), None);
        assert_eq!(find_reduction_pair(&p4(), false), None);
    }

    #[test]
    fn degree3_reduction_drops_three_vertices() {
        // u=0 on w=1 (degree 3: 0, 2, 3); 3-4-5 with 4 of degree 2; 2 and 5 branch.
        let t = Tree::from_edges(
            10,
            &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (2, 6), (2, 7), (5, 8), (5, 9)],
        )
        .unwrap();
        let rp = ReductionPair {
            leaf: 0,
            deg2: 4,
            case: ReductionCase::Degree3NonNeighbor,
        };
        let (r, lift) = apply_reduction(&t, rp).unwrap();
        assert_eq!(r.vertex_count(), 7);
        assert_eq!(lift.expansions, vec![(2, 3, 1), (3, 5, 4)]);
        let bad = ReductionPair {
            leaf: 6,
            deg2: 1,
            case: ReductionCase::Degree3NonNeighbor,
        };
        assert!(matches!(apply_reduction(&t, bad), Err(Error::InvalidPair(_))));
    }

    #[test]
    fn edge_system_examples() {
        let t = ta();
        assert_eq!(
            labeled(&edge_system(&t).unwrap()),
            vec![vec![1, 2, 4], vec![1, 2, 5], vec![1, 3, 6], vec![1, 3, 7]]
        );
        assert_eq!(labeled(&edge_system(&p3()).unwrap()), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(labeled(&edge_system(&p4()).unwrap()), vec![vec![0, 1, 2], vec![3, 2, 1]]);
        assert_eq!(edge_system(&ds6()).unwrap().len(), 4);
        assert_eq!(edge_system(&Tree::singleton()).unwrap_err(), Error::TreeTooSmall(1));
    }

    #[test]
    fn irreducible_fixtures_verify() {
        for (edges, family, size) in [
            (IRR5_EDGES, IRR5_FAMILY, 3),
            (IRR6_EDGES, IRR6_FAMILY, 3),
            (IRR9_EDGES, IRR9_FAMILY, 4),
        ] {
            let t = Tree::from_edges(edges.len() + 1, edges).unwrap();
            let fs = edge_system(&t).unwrap();
            assert_eq!(fs.len(), size);
            assert_eq!(fs.len(), theorem_value(&t));
            let direct = family_via(&t, edges, family).unwrap();
            assert!(verified(&t, direct, &[TargetKind::Edges], "fixture").is_ok());
        }
    }
}


#[cfg(test)]
mod parity {
    use super::*;
    use crate::canon::enumerate_unchecked;

    #[test]
    fn least_edge_subdivision_always_verifies() {
        for n in 3..=12 {
            for t in enumerate_unchecked(n) {
                let p = profile(&t);
                if p.h1 < p.h2 && (p.h1 + p.h2) % 2 == 1 {
                    let ps = subdivided_paths(&t, t.edges()[0]).unwrap();
                    verified(&t, ps, &[TargetKind::Edges], "least edge").unwrap();
                }
            }
        }
    }
}
