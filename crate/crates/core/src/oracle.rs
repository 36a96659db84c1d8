//! Exact minimum separating systems by exhaustive search, for small hosts.
//!
//! The search works on partitions of the target set. A family separates (and
//! covers) exactly when the partition induced by the signatures is discrete,
//! with covering modelled as one extra phantom element that lies on no path.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::separation::{path_contains, Element, Host, PathSystem, TargetSet};
use crate::tree::{Tree, VertexPath};

pub use crate::canon::enumerate_trees;

/// Default cap on the number of host vertices.
pub const VERTEX_CAP: usize = 12;

/// Targets plus the phantom must fit in one `u64`.
const ELEMENT_CAP: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub vertex_cap: usize,
    /// Wall-clock budget; `None` searches until done.
    pub budget_ms: Option<u64>,
    /// Whether length-0 paths are candidates. `None` picks them exactly when
    /// the target set contains a vertex.
    pub include_trivial: Option<bool>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            vertex_cap: VERTEX_CAP,
            budget_ms: None,
            include_trivial: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OracleResult<'h, H: Host + ?Sized = Tree> {
    pub size: usize,
    pub system: PathSystem<'h, H>,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Every path of `t`: the length-0 paths by vertex when asked, then one path
/// per vertex pair ordered by `(min, max)`.
pub fn enumerate_paths(t: &Tree, include_trivial: bool) -> Result<Vec<VertexPath>> {
    enumerate_paths_capped(t, include_trivial, VERTEX_CAP)
}

pub fn enumerate_paths_capped(t: &Tree, include_trivial: bool, cap: usize) -> Result<Vec<VertexPath>> {
    let n = t.vertex_count();
    if n > cap {
        return Err(Error::TooLarge { what: "n", got: n, cap });
    }
    let mut out = Vec::new();
    if include_trivial {
        out.extend((0..n).map(VertexPath::single));
    }
    for u in 0..n {
        for v in u + 1..n {
            out.push(t.unique_path(u, v)?);
        }
    }
    Ok(out)
}

/// Every simple path of a general host with at least one edge, each listed
/// once, from its lower extreme.
fn simple_paths<H: Host + ?Sized>(host: &H, clock: &Clock) -> Result<Vec<VertexPath>> {
    let n = host.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && host.has_edge(u, v)).collect())
        .collect();
    let mut out = Vec::new();
    let mut on = vec![false; n];
    let mut walk = Vec::new();
    for s in 0..n {
        walk.push(s);
        on[s] = true;
        extend(&adj, &mut walk, &mut on, &mut out, clock)?;
        on[s] = false;
        walk.pop();
    }
    Ok(out)
}

fn extend(
    adj: &[Vec<usize>],
    walk: &mut Vec<usize>,
    on: &mut [bool],
    out: &mut Vec<VertexPath>,
    clock: &Clock,
) -> Result<()> {
    let last = *walk.last().unwrap();
    for &w in &adj[last] {
        if on[w] {
            continue;
        }
        walk.push(w);
        on[w] = true;
        if walk[0] < w {
            out.push(VertexPath::new(walk.clone()));
            if out.len() % 4096 == 0 {
                clock.check(out.len() as u64)?;
            }
        }
        extend(adj, walk, on, out, clock)?;
        on[w] = false;
        walk.pop();
    }
    Ok(())
}

struct Clock {
    start: Instant,
    budget: Option<Duration>,
}

impl Clock {
    fn check(&self, nodes: u64) -> Result<()> {
        match self.budget {
            Some(b) if self.start.elapsed() > b => Err(Error::Timeout {
                budget_ms: b.as_millis() as u64,
                nodes,
            }),
            _ => Ok(()),
        }
    }
}

/// A candidate universe with duplicate incidence patterns removed.
struct Universe {
    /// Bit `i` set iff target `i` lies on the path; the phantom bit never is.
    masks: Vec<u64>,
    paths: Vec<VertexPath>,
    /// All targets plus the phantom when covering is required.
    full: u64,
}

fn universe(
    ts: &TargetSet,
    require_cover: bool,
    candidates: Vec<VertexPath>,
) -> Universe {
    let m = ts.len();
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut masks = Vec::new();
    let mut paths = Vec::new();
    for p in candidates {
        let mut mask = 0u64;
        for (i, &s) in ts.elements().iter().enumerate() {
            if path_contains(&p, s) {
                mask |= 1 << i;
            }
        }
        if mask == 0 {
            continue;
        }
        if let std::collections::hash_map::Entry::Vacant(e) = index.entry(mask) {
            e.insert(masks.len());
            masks.push(mask);
            paths.push(p);
        }
    }
    let bits = m + usize::from(require_cover);
    let full = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
    Universe { masks, paths, full }
}

fn candidates_for<H: Host + ?Sized>(
    host: &H,
    ts: &TargetSet,
    opts: &OracleOptions,
    clock: &Clock,
) -> Result<Vec<VertexPath>> {
    let n = host.vertex_count();
    if n > opts.vertex_cap {
        return Err(Error::TooLarge {
            what: "n",
            got: n,
            cap: opts.vertex_cap,
        });
    }
    if ts.len() > ELEMENT_CAP {
        return Err(Error::TooLarge {
            what: "targets",
            got: ts.len(),
            cap: ELEMENT_CAP,
        });
    }
    let trivial = opts
        .include_trivial
        .unwrap_or_else(|| ts.elements().iter().any(|e| matches!(e, Element::Vertex(_))));
    let mut out = Vec::new();
    if trivial {
        out.extend((0..n).map(VertexPath::single));
    }
    out.extend(simple_paths(host, clock)?);
    Ok(out)
}

struct Search<'u> {
    u: &'u Universe,
    clock: &'u Clock,
    nodes: u64,
    chosen: Vec<usize>,
}

impl Search<'_> {
    /// Tries to make every class a singleton with `left` more paths.
    fn run(&mut self, classes: &[u64], left: usize, excluded: &mut Vec<bool>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes % 1024 == 1 {
            self.clock.check(self.nodes)?;
        }
        // Classes are kept sorted by size, largest first.
        let big = match classes.first() {
            Some(&c) if c.count_ones() > 1 => c,
            _ => return Ok(true),
        };
        if left == 0 || (big.count_ones() as u64) > (1u64 << left.min(63)) {
            return Ok(false);
        }
        // Some chosen path must hold exactly one of the two least members.
        let a = big & big.wrapping_neg();
        let rest = big & !a;
        let b = rest & rest.wrapping_neg();
        let mut options: Vec<(u64, usize)> = Vec::new();
        for (i, &mask) in self.u.masks.iter().enumerate() {
            if excluded[i] || ((mask & a) == 0) == ((mask & b) == 0) {
                continue;
            }
            let gain: u64 = classes
                .iter()
                .map(|&c| ((c & mask).count_ones() * (c & !mask).count_ones()) as u64)
                .sum();
            options.push((gain, i));
        }
        options.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        let mut banned = Vec::new();
        for &(_, i) in &options {
            let mask = self.u.masks[i];
            let mut next: Vec<u64> = Vec::with_capacity(classes.len() + 4);
            for &c in classes {
                for part in [c & mask, c & !mask] {
                    if part != 0 {
                        next.push(part);
                    }
                }
            }
            next.sort_by(|x, y| y.count_ones().cmp(&x.count_ones()).then(x.cmp(y)));
            self.chosen.push(i);
            excluded[i] = true;
            let found = self.run(&next, left - 1, excluded)?;
            if found {
                for j in banned {
                    excluded[j] = false;
                }
                excluded[i] = false;
                return Ok(true);
            }
            self.chosen.pop();
            // Families containing `i` are exhausted; later siblings skip it.
            banned.push(i);
        }
        for j in banned {
            excluded[j] = false;
        }
        Ok(false)
    }
}

fn info_bound(elements: u64) -> usize {
    let m = elements.count_ones() as u64;
    (64 - (m.max(1) - 1).leading_zeros()) as usize
}

/// Searches for a family of at most `k` paths; `Ok(None)` is a proof that none
/// exists among the candidates.
pub fn family_of_size<'h, H: Host + ?Sized>(
    host: &'h H,
    ts: &TargetSet,
    require_cover: bool,
    k: usize,
    opts: &OracleOptions,
) -> Result<Option<PathSystem<'h, H>>> {
    let clock = Clock {
        start: Instant::now(),
        budget: opts.budget_ms.map(Duration::from_millis),
    };
    let u = universe(ts, require_cover, candidates_for(host, ts, opts, &clock)?);
    let mut s = Search {
        u: &u,
        clock: &clock,
        nodes: 0,
        chosen: Vec::new(),
    };
    let mut excluded = vec![false; u.masks.len()];
    if s.run(&[u.full], k, &mut excluded)? {
        let paths = s.chosen.iter().map(|&i| u.paths[i].clone()).collect();
        Ok(Some(PathSystem::new(host, paths)?))
    } else {
        Ok(None)
    }
}

/// The minimum size of a family separating `ts` (and covering it when
/// `require_cover`), with a witness family.
pub fn min_separating<'h, H: Host + ?Sized>(
    host: &'h H,
    ts: &TargetSet,
    require_cover: bool,
    opts: &OracleOptions,
) -> Result<OracleResult<'h, H>> {
    let clock = Clock {
        start: Instant::now(),
        budget: opts.budget_ms.map(Duration::from_millis),
    };
    let u = universe(ts, require_cover, candidates_for(host, ts, opts, &clock)?);
    let mut s = Search {
        u: &u,
        clock: &clock,
        nodes: 0,
        chosen: Vec::new(),
    };
    let mut excluded = vec![false; u.masks.len()];
    let mut k = info_bound(u.full);
    loop {
        if s.run(&[u.full], k, &mut excluded)? {
            break;
        }
        if k >= u.masks.len() {
            // Even every candidate together fails: two targets share every
            // path, which cannot happen in a host where targets are distinct
            // vertices or edges, except for an isolated pair of vertices
            // in a graph without trivial candidates.
            return Err(Error::PreconditionViolated(
                "no family of candidate paths separates the targets".into(),
            ));
        }
        k += 1;
    }
    let paths = s.chosen.iter().map(|&i| u.paths[i].clone()).collect();
    let system = PathSystem::new(host, paths)?;
    system.check(ts, require_cover).map_err(|e| {
        Error::InternalClassification(format!("oracle family fails verification: {}", e))
    })?;
    Ok(OracleResult {
        size: k,
        system,
        nodes: s.nodes,
        elapsed: clock.start.elapsed(),
    })
}
