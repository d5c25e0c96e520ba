//! Simple undirected graphs with stable, structured vertex labels, plus the
//! coloring predicates everything else is built on.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Symbol families used by the constructions. `Plain` is for graphs that do
/// not carry the u/v/w/x/z labelling (Platonic graphs, cycles, bipartite
/// fixtures, assembled constructions).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    U,
    V,
    W,
    X,
    Z,
    Plain,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::U => "u",
            Family::V => "v",
            Family::W => "w",
            Family::X => "x",
            Family::Z => "z",
            Family::Plain => "p",
        }
    }
}

/// A vertex label `(family, index)`, unique within one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    pub family: Family,
    pub index: u32,
}

impl VertexLabel {
    pub const fn new(family: Family, index: u32) -> Self {
        VertexLabel { family, index }
    }

    pub const fn plain(index: u32) -> Self {
        VertexLabel::new(Family::Plain, index)
    }

    pub const fn z() -> Self {
        VertexLabel::new(Family::Z, 0)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::Z {
            write!(f, "z")
        } else {
            write!(f, "{}{}", self.family.symbol(), self.index)
        }
    }
}

/// A finite simple undirected graph. Immutable once built; all operations on
/// it are pure, so values can be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    index_of: HashMap<VertexLabel, usize>,
    /// Normalized (lo, hi) ordinal pairs, sorted.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from labels and label pairs. Rejects duplicate labels,
    /// unknown endpoints, loops and duplicate edges; silent deduplication
    /// would mask construction bugs in the decomposition assembly.
    pub fn build(labels: Vec<VertexLabel>, edges: &[(VertexLabel, VertexLabel)]) -> Result<Graph> {
        let mut index_of = HashMap::with_capacity(labels.len());
        for (i, &l) in labels.iter().enumerate() {
            if index_of.insert(l, i).is_some() {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let ia = *index_of.get(&a).ok_or_else(|| Error::UnknownEndpoint(a.to_string()))?;
            let ib = *index_of.get(&b).ok_or_else(|| Error::UnknownEndpoint(b.to_string()))?;
            if ia == ib {
                return Err(Error::LoopEdge(a.to_string()));
            }
            pairs.push((ia.min(ib), ia.max(ib)));
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            let (a, b) = w[0];
            return Err(Error::DuplicateEdge(labels[a].to_string(), labels[b].to_string()));
        }
        let mut adjacency = vec![Vec::new(); labels.len()];
        for &(a, b) in &pairs {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { labels, index_of, edges: pairs, adjacency })
    }

    /// Same as [`Graph::build`] but with ordinal edge pairs.
    pub fn from_ordinals(labels: Vec<VertexLabel>, edges: &[(usize, usize)]) -> Result<Graph> {
        let pairs: Vec<(VertexLabel, VertexLabel)> = edges
            .iter()
            .map(|&(a, b)| {
                let la = *labels.get(a).ok_or_else(|| Error::UnknownEndpoint(format!("#{a}")))?;
                let lb = *labels.get(b).ok_or_else(|| Error::UnknownEndpoint(format!("#{b}")))?;
                Ok((la, lb))
            })
            .collect::<Result<_>>()?;
        Graph::build(labels, &pairs)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.labels[v]
    }

    pub fn ordinal(&self, l: VertexLabel) -> Option<usize> {
        self.index_of.get(&l).copied()
    }

    /// Edges as normalized `(lo, hi)` ordinal pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components as sorted ordinal lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Plain-labelled complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let labels = (0..n as u32).map(VertexLabel::plain).collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Graph::from_ordinals(labels, &edges).expect("complete graph is simple")
    }

    /// Plain-labelled cycle C_n (n >= 3).
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let labels = (0..n as u32).map(VertexLabel::plain).collect();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_ordinals(labels, &edges)
    }

    /// Plain-labelled path P_n.
    pub fn path(n: usize) -> Graph {
        let labels = (0..n as u32).map(VertexLabel::plain).collect();
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_ordinals(labels, &edges).expect("path is simple")
    }

    /// Plain-labelled complete bipartite K_{a,b}; part A first.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let labels = (0..(a + b) as u32).map(VertexLabel::plain).collect();
        let mut edges = Vec::new();
        for x in 0..a {
            for y in 0..b {
                edges.push((x, a + y));
            }
        }
        Graph::from_ordinals(labels, &edges).expect("bipartite graph is simple")
    }
}

/// A surjective assignment of colors `0..k` to the vertices of one graph,
/// stored by vertex ordinal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// `colors[v]` is the color of ordinal `v`; every color in `0..k` must
    /// appear at least once.
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Coloring> {
        let mut used = vec![false; k as usize];
        for &c in &colors {
            if c >= k {
                return Err(Error::InvalidParameter(format!("color {c} out of range 0..{k}")));
            }
            used[c as usize] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::NotSurjective { k, missing: missing as u32 });
        }
        Ok(Coloring { colors, k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::DomainMismatch { got: self.colors.len(), want: g.n() });
        }
        Ok(())
    }
}

/// True iff no edge of `g` has equal endpoint colors.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_domain(g)?;
    Ok(g.edges().iter().all(|&(a, b)| c.color(a) != c.color(b)))
}

/// True iff every unordered pair of distinct colors appears on some edge.
pub fn is_complete(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_domain(g)?;
    let k = c.k() as usize;
    let mut seen = vec![false; k * k];
    let mut missing = k * (k - 1) / 2;
    for &(a, b) in g.edges() {
        let (x, y) = (c.color(a) as usize, c.color(b) as usize);
        if x != y && !seen[x * k + y] {
            seen[x * k + y] = true;
            seen[y * k + x] = true;
            missing -= 1;
            if missing == 0 {
                return Ok(true);
            }
        }
    }
    Ok(missing == 0)
}

/// How many edges realize each unordered color pair. Key is `(lo, hi)` with
/// `lo < hi`. Pairs realized zero times are absent.
pub fn pair_census(g: &Graph, c: &Coloring) -> Result<BTreeMap<(u32, u32), usize>> {
    c.check_domain(g)?;
    let mut census = BTreeMap::new();
    for &(a, b) in g.edges() {
        let (x, y) = (c.color(a), c.color(b));
        if x != y {
            *census.entry((x.min(y), x.max(y))).or_insert(0) += 1;
        }
    }
    Ok(census)
}

/// Length of the shortest cycle, or `Infinity` for forests. Disconnected
/// graphs report the minimum over components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Infinity,
}

impl Girth {
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(v) => v >= g,
            Girth::Infinity => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(v) => write!(f, "{v}"),
            Girth::Infinity => write!(f, "inf"),
        }
    }
}

/// BFS from every vertex; a non-tree edge (x, y) seen from root u witnesses a
/// cycle of length d(x) + d(y) + 1, and the minimum over all roots is exact.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] >= best {
                continue;
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w && parent[w] != v {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinity
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    #[test]
    fn build_k4() {
        let g = k(4);
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn build_k1() {
        let g = k(1);
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn duplicate_edge_rejected() {
        let labels: Vec<_> = (1..=4).map(|i| VertexLabel::new(Family::X, i)).collect();
        let e = (labels[0], labels[1]);
        let err = Graph::build(labels, &[e, e]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge(..)));
    }

    #[test]
    fn duplicate_edge_rejected_reversed() {
        let labels: Vec<_> = (1..=2).map(|i| VertexLabel::new(Family::X, i)).collect();
        let err = Graph::build(labels.clone(), &[(labels[0], labels[1]), (labels[1], labels[0])])
            .unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge(..)));
    }

    #[test]
    fn loops_and_unknown_endpoints_rejected() {
        let labels = vec![VertexLabel::plain(0), VertexLabel::plain(1)];
        let loop_err = Graph::build(labels.clone(), &[(labels[0], labels[0])]).unwrap_err();
        assert!(matches!(loop_err, Error::LoopEdge(_)));
        let ghost = VertexLabel::plain(9);
        let unk = Graph::build(labels, &[(VertexLabel::plain(0), ghost)]).unwrap_err();
        assert!(matches!(unk, Error::UnknownEndpoint(_)));
    }

    #[test]
    fn duplicate_label_rejected() {
        let err = Graph::build(vec![VertexLabel::plain(0), VertexLabel::plain(0)], &[]).unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel(_)));
    }

    #[test]
    fn proper_on_small_graphs() {
        let g = k(4);
        let all_distinct = Coloring::new(vec![0, 1, 2, 3], 4).unwrap();
        assert!(is_proper(&g, &all_distinct).unwrap());

        let k2 = k(2);
        let same = Coloring::new(vec![0, 0], 1).unwrap();
        assert!(!is_proper(&k2, &same).unwrap());

        let c4 = Graph::cycle(4).unwrap();
        let bip = Coloring::new(vec![0, 1, 0, 1], 2).unwrap();
        assert!(is_proper(&c4, &bip).unwrap());
    }

    #[test]
    fn complete_on_small_graphs() {
        let g = k(4);
        let c = Coloring::new(vec![0, 1, 2, 3], 4).unwrap();
        assert!(is_complete(&g, &c).unwrap());

        let c4 = Graph::cycle(4).unwrap();
        let bip = Coloring::new(vec![0, 1, 0, 1], 2).unwrap();
        assert!(is_complete(&c4, &bip).unwrap());

        // Path a-b-c colored 0,1,2: pair {0,2} unrealized.
        let p3 = Graph::path(3);
        let c = Coloring::new(vec![0, 1, 2], 3).unwrap();
        assert!(!is_complete(&p3, &c).unwrap());
    }

    #[test]
    fn domain_mismatch_reported() {
        let g = k(3);
        let c = Coloring::new(vec![0, 1], 2).unwrap();
        assert!(matches!(is_proper(&g, &c), Err(Error::DomainMismatch { .. })));
        assert!(matches!(is_complete(&g, &c), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn surjectivity_enforced() {
        assert!(matches!(Coloring::new(vec![0, 0], 2), Err(Error::NotSurjective { .. })));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&k(4)), Girth::Finite(3));
        assert_eq!(girth(&Graph::cycle(5).unwrap()), Girth::Finite(5));
        assert_eq!(girth(&Graph::complete_bipartite(2, 4)), Girth::Finite(4));
        assert_eq!(girth(&Graph::path(6)), Girth::Infinity);
        assert_eq!(girth(&k(1)), Girth::Infinity);
    }

    #[test]
    fn girth_min_over_components() {
        // C_5 plus a disjoint triangle.
        let labels: Vec<_> = (0..8).map(VertexLabel::plain).collect();
        let edges =
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 5)];
        let g = Graph::from_ordinals(labels, &edges).unwrap();
        assert_eq!(girth(&g), Girth::Finite(3));
    }
}
