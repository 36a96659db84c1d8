//! Incidence signatures and the separation / covering checks.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::profile::profile;
use crate::tree::{Edge, Tree, VertexPath};

/// Anything a path system can live in.
pub trait Host {
    fn vertex_count(&self) -> usize;
    fn has_edge(&self, u: usize, v: usize) -> bool;
    /// All edges, sorted.
    fn edge_list(&self) -> Vec<Edge>;
    fn degree(&self, v: usize) -> usize;

    /// Edges with no endpoint of degree one.
    fn interior_edges(&self) -> Vec<Edge> {
        self.edge_list()
            .into_iter()
            .filter(|e| self.degree(e.lo()) > 1 && self.degree(e.hi()) > 1)
            .collect()
    }

    /// External name of vertex `v`.
    fn label(&self, v: usize) -> usize {
        v
    }

    fn index_of_label(&self, label: usize) -> Option<usize> {
        (label < self.vertex_count()).then_some(label)
    }
}

impl Host for Tree {
    fn vertex_count(&self) -> usize {
        Tree::vertex_count(self)
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        Tree::has_edge(self, u, v)
    }

    fn edge_list(&self) -> Vec<Edge> {
        self.edges().to_vec()
    }

    fn degree(&self, v: usize) -> usize {
        Tree::degree(self, v)
    }

    fn interior_edges(&self) -> Vec<Edge> {
        profile(self).interior_edges
    }

    fn label(&self, v: usize) -> usize {
        Tree::label(self, v)
    }

    fn index_of_label(&self, label: usize) -> Option<usize> {
        self.index_of(label).ok()
    }
}

/// A separation target. Vertices order before edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    Edge(Edge),
}

impl Element {
    pub fn edge(a: usize, b: usize) -> Self {
        Element::Edge(Edge::new(a, b))
    }

    /// The same element with vertices replaced by their labels in `host`.
    pub fn labeled<H: Host + ?Sized>(self, host: &H) -> Element {
        match self {
            Element::Vertex(v) => Element::Vertex(host.label(v)),
            Element::Edge(e) => Element::edge(host.label(e.lo()), host.label(e.hi())),
        }
    }

    fn exists_in<H: Host + ?Sized>(self, host: &H) -> bool {
        match self {
            Element::Vertex(v) => v < host.vertex_count(),
            Element::Edge(e) => host.has_edge(e.lo(), e.hi()),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "{}", v),
            Element::Edge(e) => write!(f, "{}", e),
        }
    }
}

impl From<Edge> for Element {
    fn from(e: Edge) -> Self {
        Element::Edge(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetKind {
    Edges,
    Vertices,
    VerticesAndInteriorEdges,
    Custom,
}

/// The set `S` of elements to separate, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetSet {
    kind: TargetKind,
    elements: Vec<Element>,
}

impl TargetSet {
    /// Materializes one of the standard target sets. `Custom` yields an
    /// empty set; use [`TargetSet::custom`] instead.
    pub fn of<H: Host + ?Sized>(host: &H, kind: TargetKind) -> Self {
        let vertices = || (0..host.vertex_count()).map(Element::Vertex);
        let elements: Vec<Element> = match kind {
            TargetKind::Edges => host.edge_list().into_iter().map(Element::Edge).collect(),
            TargetKind::Vertices => vertices().collect(),
            TargetKind::VerticesAndInteriorEdges => vertices()
                .chain(host.interior_edges().into_iter().map(Element::Edge))
                .collect(),
            TargetKind::Custom => Vec::new(),
        };
        TargetSet { kind, elements }
    }

    pub fn edges<H: Host + ?Sized>(host: &H) -> Self {
        Self::of(host, TargetKind::Edges)
    }

    pub fn vertices<H: Host + ?Sized>(host: &H) -> Self {
        Self::of(host, TargetKind::Vertices)
    }

    pub fn vertices_and_interior_edges<H: Host + ?Sized>(host: &H) -> Self {
        Self::of(host, TargetKind::VerticesAndInteriorEdges)
    }

    pub fn custom<H: Host + ?Sized>(host: &H, elements: &[Element]) -> Result<Self> {
        let mut elements = elements.to_vec();
        for &e in &elements {
            if !e.exists_in(host) {
                return Err(Error::UnknownElement(e.labeled(host)));
            }
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(TargetSet {
            kind: TargetKind::Custom,
            elements,
        })
    }

    pub fn kind(&self) -> TargetKind {
        self.kind
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elements.binary_search(e).is_ok()
    }
}

/// `F(s)`: the indices of the paths containing `s`, ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Signature(Vec<usize>);

impl Signature {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Signature(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separation {
    Separates,
    NotSeparated(Element, Element),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Covering {
    Covers,
    NotCovered(Element),
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Separation::Separates => f.write_str("Separates"),
            Separation::NotSeparated(s, t) => write!(f, "NotSeparated({},{})", s, t),
        }
    }
}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Covering::Covers => f.write_str("Covers"),
            Covering::NotCovered(s) => write!(f, "NotCovered({})", s),
        }
    }
}

/// An ordered family of paths in one host.
#[derive(Debug, Clone)]
pub struct PathSystem<'h, H: Host + ?Sized = Tree> {
    host: &'h H,
    paths: Vec<VertexPath>,
}

impl<'h, H: Host + ?Sized> PathSystem<'h, H> {
    /// Validates every path against `host` (vertex indices, not labels).
    pub fn new(host: &'h H, paths: Vec<VertexPath>) -> Result<Self> {
        for (i, p) in paths.iter().enumerate() {
            check_path(host, i, p)?;
        }
        Ok(PathSystem { host, paths })
    }

    pub(crate) fn new_unchecked(host: &'h H, paths: Vec<VertexPath>) -> Self {
        debug_assert!(paths.iter().enumerate().all(|(i, p)| check_path(host, i, p).is_ok()));
        PathSystem { host, paths }
    }

    /// Reads the path-system document: one path per line as labels separated
    /// by spaces, `#` comments, blank lines ignored.
    pub fn parse(host: &'h H, text: &str) -> Result<Self> {
        let mut paths = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut vs = Vec::new();
            for tok in content.split_whitespace() {
                let label: usize = tok.parse().map_err(|_| Error::BadToken {
                    line: i + 1,
                    detail: format!("not a vertex id: {:?}", tok),
                })?;
                vs.push(host.index_of_label(label).ok_or(Error::UnknownVertex(label))?);
            }
            paths.push(VertexPath::new(vs));
        }
        Self::new(host, paths)
    }

    /// Writes the document read by [`PathSystem::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in self.labeled_paths() {
            let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn host(&self) -> &'h H {
        self.host
    }

    pub fn paths(&self) -> &[VertexPath] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<VertexPath> {
        self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn push(&mut self, p: VertexPath) -> Result<()> {
        check_path(self.host, self.paths.len(), &p)?;
        self.paths.push(p);
        Ok(())
    }

    /// Paths as label sequences.
    pub fn labeled_paths(&self) -> Vec<Vec<usize>> {
        self.paths
            .iter()
            .map(|p| p.vertices().iter().map(|&v| self.host.label(v)).collect())
            .collect()
    }

    /// Warnings that do not invalidate the system: repeated paths.
    pub fn lint(&self) -> Vec<String> {
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut out = Vec::new();
        for (i, p) in self.paths.iter().enumerate() {
            let mut key = p.vertices().to_vec();
            if key.first() > key.last() {
                key.reverse();
            }
            if let Some(j) = seen.insert(key, i) {
                out.push(format!("path {} repeats path {}", i, j));
            }
        }
        out
    }

    pub fn incidence(&self, s: Element) -> Result<Signature> {
        if !s.exists_in(self.host) {
            return Err(Error::UnknownElement(s));
        }
        let idx = self
            .paths
            .iter()
            .enumerate()
            .filter(|(_, p)| path_contains(p, s))
            .map(|(i, _)| i)
            .collect();
        Ok(Signature(idx))
    }

    /// Signatures of every target, in target order.
    pub fn signatures(&self, ts: &TargetSet) -> Vec<Signature> {
        let n = self.host.vertex_count();
        let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut by_edge: HashMap<Edge, Vec<usize>> = HashMap::new();
        let wants_edges = ts.elements().iter().any(|e| matches!(e, Element::Edge(_)));
        for (i, p) in self.paths.iter().enumerate() {
            for &v in p.vertices() {
                by_vertex[v].push(i);
            }
            if wants_edges {
                for e in p.edges() {
                    by_edge.entry(e).or_default().push(i);
                }
            }
        }
        ts.elements()
            .iter()
            .map(|s| match s {
                Element::Vertex(v) => Signature(by_vertex.get(*v).cloned().unwrap_or_default()),
                Element::Edge(e) => Signature(by_edge.get(e).cloned().unwrap_or_default()),
            })
            .collect()
    }

    /// Separates, or the lexicographically least pair with equal signatures.
    pub fn separates(&self, ts: &TargetSet) -> Separation {
        let sigs = self.signatures(ts);
        let mut first: HashMap<&Signature, usize> = HashMap::new();
        let mut best: Option<(usize, usize)> = None;
        for (j, sig) in sigs.iter().enumerate() {
            match first.get(sig) {
                Some(&i) => {
                    // Only the first collision of each class can be least.
                    if best.map_or(true, |b| (i, j) < b) {
                        best = Some((i, j));
                    }
                }
                None => {
                    first.insert(sig, j);
                }
            }
        }
        match best {
            None => Separation::Separates,
            Some((i, j)) => Separation::NotSeparated(ts.elements()[i], ts.elements()[j]),
        }
    }

    /// Covers, or the least element lying on no path.
    pub fn covers(&self, ts: &TargetSet) -> Covering {
        let sigs = self.signatures(ts);
        match sigs.iter().position(|s| s.is_empty()) {
            None => Covering::Covers,
            Some(i) => Covering::NotCovered(ts.elements()[i]),
        }
    }

    /// Both checks as a `Result`, witnesses reported in labels.
    pub fn check(&self, ts: &TargetSet, require_cover: bool) -> Result<()> {
        if let Separation::NotSeparated(s, t) = self.separates(ts) {
            return Err(Error::NotSeparating(s.labeled(self.host), t.labeled(self.host)));
        }
        if require_cover {
            if let Covering::NotCovered(s) = self.covers(ts) {
                return Err(Error::NotCovering(s.labeled(self.host)));
            }
        }
        Ok(())
    }
}

fn check_path<H: Host + ?Sized>(host: &H, index: usize, p: &VertexPath) -> Result<()> {
    let n = host.vertex_count();
    let mut seen = HashSet::new();
    for &v in p.vertices() {
        if v >= n {
            return Err(Error::InvalidPath {
                index,
                detail: format!("vertex index {} out of range", v),
            });
        }
        if !seen.insert(v) {
            return Err(Error::InvalidPath {
                index,
                detail: format!("vertex {} repeats", host.label(v)),
            });
        }
    }
    for w in p.vertices().windows(2) {
        if !host.has_edge(w[0], w[1]) {
            return Err(Error::NotConsecutive(format!(
                "path {}: {} and {} are not adjacent",
                index,
                host.label(w[0]),
                host.label(w[1])
            )));
        }
    }
    Ok(())
}

pub fn path_contains(p: &VertexPath, s: Element) -> bool {
    match s {
        Element::Vertex(v) => p.contains_vertex(v),
        Element::Edge(e) => p.contains_edge(e),
    }
}

/// True iff exactly one endpoint of `e` lies on `p`.
pub fn kisses(p: &VertexPath, e: Edge) -> bool {
    p.contains_vertex(e.lo()) != p.contains_vertex(e.hi())
}
