//! Independent checkers: the integer-exact bound formulas, a planarity
//! oracle with embedding witness, the outerplanarity reduction, and the
//! decomposition audit. Nothing here trusts the construction code.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::decompose::{Decomposition, DecompositionKind};
use crate::embed::{certifies_outerplanarity, certifies_planarity, RotationSystem};
use crate::exec::{map_indexed, Mode};
use crate::graph::{girth, Graph, VertexLabel};

/// Largest k with C(k,2) <= m, i.e. floor(sqrt(2m + 1/4) + 1/2).
pub fn eq2_bound(m: u64) -> u32 {
    ((1 + (8 * m + 1).isqrt()) / 2) as u32
}

/// floor(sqrt(6n - 47/4) + 1/2): largest k with (2k-1)^2 <= 24n - 47.
/// Defined for n >= 3 (planar size premise).
pub fn eq3_bound(n: u64) -> Option<u32> {
    (n >= 3).then(|| (((24 * n - 47).isqrt() + 1) / 2) as u32)
}

/// floor(sqrt(4n - 23/4) + 1/2): largest k with (2k-1)^2 <= 16n - 23.
pub fn eq4_bound(n: u64) -> Option<u32> {
    (n >= 2).then(|| (((16 * n - 23).isqrt() + 1) / 2) as u32)
}

/// floor(sqrt(4n - 31/4) + 1/2): largest k with (2k-1)^2 <= 16n - 31.
/// Defined for n >= 4 (girth-4 size premise).
pub fn eq5_bound(n: u64) -> Option<u32> {
    (n >= 4).then(|| (((16 * n - 31).isqrt() + 1) / 2) as u32)
}

/// Which class hypotheses the graph itself satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassFlags {
    pub planar: bool,
    pub outerplanar: bool,
    pub planar_girth4: bool,
}

/// The pseudoachromatic upper bounds applicable to one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    /// Edge bound, valid for every graph.
    pub eq2: u32,
    /// Planar / outerplanar / planar-girth-4 bounds in terms of n.
    pub eq3: Option<u32>,
    pub eq4: Option<u32>,
    pub eq5: Option<u32>,
    pub applicable: ClassFlags,
}

/// Computes every bound with exact integer arithmetic and tests which class
/// hypotheses actually hold for `g`.
pub fn bounds(g: &Graph) -> BoundReport {
    let planar = is_planar(g);
    BoundReport {
        n: g.n(),
        m: g.m(),
        eq2: eq2_bound(g.m() as u64),
        eq3: eq3_bound(g.n() as u64),
        eq4: eq4_bound(g.n() as u64),
        eq5: eq5_bound(g.n() as u64),
        applicable: ClassFlags {
            planar,
            outerplanar: is_outerplanar(g),
            planar_girth4: planar && g.n() >= 4 && girth(g).at_least(4),
        },
    }
}

/// Planarity verdict via Demoucron-Malgrange-Pertuiset path addition, per
/// biconnected block, with a rotation-system witness on planar input.
pub fn planar_witness(g: &Graph) -> Option<RotationSystem> {
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for block in biconnected_blocks(g) {
        let block_rot = embed_block(g, &block)?;
        for (v, mut cycle) in block_rot {
            rotation[v].append(&mut cycle);
        }
    }
    Some(RotationSystem::new(rotation))
}

pub fn is_planar(g: &Graph) -> bool {
    planar_witness(g).is_some()
}

/// A graph is outerplanar iff it stays planar after joining a universal
/// apex vertex to every vertex.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.n();
    let labels: Vec<VertexLabel> = (0..=n as u32).map(VertexLabel::plain).collect();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, n)));
    let apexed = Graph::from_ordinals(labels, &edges).expect("apex graph is simple");
    is_planar(&apexed)
}

/// Edge lists of the biconnected blocks (single-edge blocks are bridges).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        num: Vec<usize>,
        low: Vec<usize>,
        counter: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, v: usize, parent: usize) {
        s.counter += 1;
        s.num[v] = s.counter;
        s.low[v] = s.counter;
        for &w in s.g.neighbors(v) {
            if s.num[w] == 0 {
                s.stack.push((v, w));
                dfs(s, w, v);
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.num[v] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if w != parent && s.num[w] < s.num[v] {
                s.stack.push((v, w));
                s.low[v] = s.low[v].min(s.num[w]);
            }
        }
    }
    let mut st = State {
        g,
        num: vec![0; g.n()],
        low: vec![0; g.n()],
        counter: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.n() {
        if st.num[v] == 0 {
            dfs(&mut st, v, usize::MAX);
        }
    }
    st.blocks
}

type Dart = (usize, usize);

/// Embeds one biconnected block; returns per-vertex neighbor cycles, or
/// `None` when the block is not planar.
fn embed_block(_g: &Graph, block: &[(usize, usize)]) -> Option<HashMap<usize, Vec<usize>>> {
    let edges: BTreeSet<(usize, usize)> =
        block.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let vertices: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    if edges.len() == 1 {
        let (a, b) = *edges.iter().next().unwrap();
        return Some(HashMap::from([(a, vec![b]), (b, vec![a])]));
    }
    let n = vertices.len();
    if edges.len() > 3 * n - 6 {
        return None;
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in &edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }

    // Initial cycle by walking: 2-connected, so every vertex has degree >= 2.
    let cycle = {
        let start = *vertices.iter().next().unwrap();
        let mut seen_at = HashMap::from([(start, 0usize)]);
        let mut walk = vec![start];
        loop {
            let v = *walk.last().unwrap();
            let prev = if walk.len() >= 2 { walk[walk.len() - 2] } else { usize::MAX };
            let next = *adj[&v].iter().find(|&&w| w != prev).expect("degree >= 2");
            if let Some(&at) = seen_at.get(&next) {
                break walk[at..].to_vec();
            }
            seen_at.insert(next, walk.len());
            walk.push(next);
        }
    };

    let mut faces: Vec<Vec<Dart>> = Vec::new();
    let fwd: Vec<Dart> = (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()])).collect();
    let bwd: Vec<Dart> = fwd.iter().rev().map(|&(a, b)| (b, a)).collect();
    faces.push(fwd);
    faces.push(bwd);
    let mut embedded_edges: HashSet<(usize, usize)> = (0..cycle.len())
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut embedded_vertices: HashSet<usize> = cycle.iter().copied().collect();

    while embedded_edges.len() < edges.len() {
        // Fragments: lone unembedded chords, and components of unembedded
        // vertices with their attachment edges.
        struct Fragment {
            attachments: Vec<usize>,
            inner: BTreeSet<usize>,
        }
        let mut fragments: Vec<Fragment> = Vec::new();
        for &(a, b) in &edges {
            if !embedded_edges.contains(&(a, b))
                && embedded_vertices.contains(&a)
                && embedded_vertices.contains(&b)
            {
                fragments.push(Fragment { attachments: vec![a, b], inner: BTreeSet::new() });
            }
        }
        let mut unassigned: BTreeSet<usize> =
            vertices.iter().copied().filter(|v| !embedded_vertices.contains(v)).collect();
        while let Some(&seed) = unassigned.iter().next() {
            let mut comp = BTreeSet::from([seed]);
            let mut queue = vec![seed];
            let mut attach = BTreeSet::new();
            while let Some(v) = queue.pop() {
                for &w in &adj[&v] {
                    if embedded_vertices.contains(&w) {
                        attach.insert(w);
                    } else if comp.insert(w) {
                        queue.push(w);
                    }
                }
            }
            for v in &comp {
                unassigned.remove(v);
            }
            fragments.push(Fragment { attachments: attach.into_iter().collect(), inner: comp });
        }

        // Admissible faces contain every attachment vertex on their boundary.
        let face_vertices: Vec<HashSet<usize>> = faces
            .iter()
            .map(|f| f.iter().map(|&(a, _)| a).collect())
            .collect();
        let mut chosen: Option<(usize, Vec<usize>)> = None; // (face, fragment attachments+path)
        let mut best_count = usize::MAX;
        let mut best: Option<(&Fragment, usize)> = None;
        for frag in &fragments {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| face_vertices[f].contains(a)))
                .collect();
            if admissible.is_empty() {
                return None;
            }
            if admissible.len() < best_count {
                best_count = admissible.len();
                best = Some((frag, admissible[0]));
                if best_count == 1 {
                    break;
                }
            }
        }
        if let Some((frag, face)) = best {
            // An alpha-path through the fragment between two attachments.
            let path: Vec<usize> = if frag.inner.is_empty() {
                frag.attachments.clone()
            } else {
                let goal: HashSet<usize> = frag.attachments.iter().copied().collect();
                let start = frag.attachments[0];
                let mut parent: HashMap<usize, usize> = HashMap::new();
                let mut queue = std::collections::VecDeque::new();
                for &w in &adj[&start] {
                    if frag.inner.contains(&w) && !parent.contains_key(&w) {
                        parent.insert(w, start);
                        queue.push_back(w);
                    }
                }
                let mut hit = None;
                'bfs: while let Some(v) = queue.pop_front() {
                    for &w in &adj[&v] {
                        if goal.contains(&w) && w != start {
                            parent.insert(w, v);
                            hit = Some(w);
                            break 'bfs;
                        }
                        if frag.inner.contains(&w) && !parent.contains_key(&w) {
                            parent.insert(w, v);
                            queue.push_back(w);
                        }
                    }
                }
                let mut path = vec![hit.expect("fragment touches two attachments")];
                while *path.last().unwrap() != start {
                    path.push(parent[path.last().unwrap()]);
                }
                path.reverse();
                path
            };
            chosen = Some((face, path));
        }
        let (face_idx, path) = chosen.expect("some fragment exists while edges remain");

        // Split the face along the path.
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&(_, h)| h == a).expect("a on face");
        let ib = face.iter().position(|&(_, h)| h == b).expect("b on face");
        let fwd_path: Vec<Dart> = path.windows(2).map(|w| (w[0], w[1])).collect();
        let bwd_path: Vec<Dart> = path.windows(2).rev().map(|w| (w[1], w[0])).collect();
        let seg = |from: usize, to: usize| -> Vec<Dart> {
            // darts strictly after index `from`, up to and including `to`
            let mut out = Vec::new();
            let mut i = (from + 1) % face.len();
            loop {
                out.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % face.len();
            }
            out
        };
        let mut f1 = fwd_path.clone();
        f1.extend(seg(ib, ia));
        let mut f2 = bwd_path;
        f2.extend(seg(ia, ib));
        faces.push(f1);
        faces.push(f2);

        for w in path.windows(2) {
            embedded_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            embedded_vertices.insert(v);
        }
    }

    // Recover rotations: the face successor of dart (u,v) is (v,w), so w
    // follows u in the rotation at v.
    let mut next_at: HashMap<usize, HashMap<usize, usize>> = HashMap::new();
    for face in &faces {
        for i in 0..face.len() {
            let (u, v) = face[i];
            let (_, w) = face[(i + 1) % face.len()];
            next_at.entry(v).or_default().insert(u, w);
        }
    }
    let mut out = HashMap::new();
    for (&v, succ) in &next_at {
        let first = *succ.keys().next().unwrap();
        let mut cycle = vec![first];
        loop {
            let nxt = succ[cycle.last().unwrap()];
            if nxt == first {
                break;
            }
            cycle.push(nxt);
            debug_assert!(cycle.len() <= succ.len(), "rotation at {v} is not a single cycle");
        }
        debug_assert_eq!(cycle.len(), succ.len());
        out.insert(v, cycle);
    }
    Some(out)
}

/// Per-part audit verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartAudit {
    pub order: usize,
    pub size: usize,
    pub size_ok: bool,
    /// Certificate check (face trace), when the part carries a rotation.
    pub certificate_ok: Option<bool>,
    /// Independent class oracle: planarity / outerplanarity / girth >= 4.
    pub class_ok: bool,
}

/// Audit of a claimed decomposition: edge partition, part count, class
/// membership by two independent methods, sizes, and the counting lower
/// bound ceil(C(n,2)/cap) on the number of parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionAudit {
    pub kind: DecompositionKind,
    pub part_count: usize,
    pub part_count_ok: bool,
    pub disjoint: bool,
    pub covers: bool,
    pub parts: Vec<PartAudit>,
    pub lower_bound: usize,
    pub lower_bound_ok: bool,
}

impl DecompositionAudit {
    pub fn passes(&self) -> bool {
        self.part_count_ok
            && self.disjoint
            && self.covers
            && self.lower_bound_ok
            && self
                .parts
                .iter()
                .all(|p| p.size_ok && p.class_ok && p.certificate_ok.unwrap_or(true))
    }
}

pub fn audit_decomposition(d: &Decomposition) -> DecompositionAudit {
    audit_decomposition_with(d, Mode::preferred())
}

pub fn audit_decomposition_with(d: &Decomposition, mode: Mode) -> DecompositionAudit {
    let host_edges: BTreeSet<(VertexLabel, VertexLabel)> = labeled_edges(&d.host);
    let mut union: BTreeMap<(VertexLabel, VertexLabel), usize> = BTreeMap::new();
    for part in &d.parts {
        for e in labeled_edges(&part.graph) {
            *union.entry(e).or_insert(0) += 1;
        }
    }
    let disjoint = union.values().all(|&c| c == 1);
    let covers = union.keys().all(|e| host_edges.contains(e))
        && host_edges.iter().all(|e| union.contains_key(e));

    let t = d.t as usize;
    let expected_main = |n: usize| match d.kind {
        DecompositionKind::Planar => 3 * n - 6,
        DecompositionKind::Outerplanar => 2 * n - 3,
        DecompositionKind::Girth4 => 2 * (n - 2),
    };
    let expected_tail = match d.kind {
        DecompositionKind::Planar => {
            if d.with_z {
                9 * t
            } else {
                3 * t
            }
        }
        DecompositionKind::Outerplanar => t,
        DecompositionKind::Girth4 => 2 * t,
    };

    let parts = map_indexed(mode, d.parts.len(), |idx| {
        let part = &d.parts[idx];
        let g = &part.graph;
        let is_main = idx < t;
        let size_ok = if is_main { g.m() == expected_main(g.n()) } else { g.m() == expected_tail };
        let certificate_ok = part.rotation.as_ref().map(|rs| match d.kind {
            DecompositionKind::Outerplanar if is_main => certifies_outerplanarity(g, rs),
            _ => certifies_planarity(g, rs),
        });
        let class_ok = match d.kind {
            DecompositionKind::Planar => is_planar(g),
            DecompositionKind::Outerplanar => is_outerplanar(g),
            DecompositionKind::Girth4 => is_planar(g) && girth(g).at_least(4),
        };
        PartAudit { order: g.n(), size: g.m(), size_ok, certificate_ok, class_ok }
    });

    let n = d.host.n();
    let cap = d.kind.size_cap(n);
    let lower_bound = (n * (n - 1) / 2).div_ceil(cap);
    DecompositionAudit {
        kind: d.kind,
        part_count: d.parts.len(),
        part_count_ok: d.parts.len() == t + 1,
        disjoint,
        covers,
        parts,
        lower_bound,
        lower_bound_ok: lower_bound == t + 1,
    }
}

fn labeled_edges(g: &Graph) -> BTreeSet<(VertexLabel, VertexLabel)> {
    g.edges()
        .iter()
        .map(|&(a, b)| {
            let (la, lb) = (g.label(a), g.label(b));
            (la.min(lb), la.max(lb))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{girth4_decompose, outerplanar_decompose, planar_decompose};
    use crate::embed::euler_characteristic;

    #[test]
    fn integer_bounds_match_known_values() {
        assert_eq!(eq2_bound(0), 1);
        assert_eq!(eq2_bound(21), 7);
        assert_eq!(eq2_bound(30), 8);
        assert_eq!(eq3_bound(10), Some(7));
        assert_eq!(eq4_bound(5), Some(4));
        assert_eq!(eq5_bound(6), Some(4));
        assert_eq!(eq5_bound(4), Some(3));
        assert_eq!(eq3_bound(2), None);
    }

    #[test]
    fn bounds_agree_with_float_evaluation() {
        for n in 3..3000u64 {
            let float = ((6.0 * n as f64 - 47.0 / 4.0).sqrt() + 0.5).floor() as u32;
            assert_eq!(eq3_bound(n), Some(float), "eq3({n})");
        }
        for n in 2..3000u64 {
            let f4 = ((4.0 * n as f64 - 23.0 / 4.0).sqrt() + 0.5).floor() as u32;
            assert_eq!(eq4_bound(n), Some(f4), "eq4({n})");
        }
        for n in 4..3000u64 {
            let f5 = ((4.0 * n as f64 - 31.0 / 4.0).sqrt() + 0.5).floor() as u32;
            assert_eq!(eq5_bound(n), Some(f5), "eq5({n})");
        }
        for m in 0..3000u64 {
            let f2 = ((2.0 * m as f64 + 0.25).sqrt() + 0.5).floor() as u32;
            assert_eq!(eq2_bound(m), f2, "eq2({m})");
        }
    }

    #[test]
    fn planarity_basics() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(is_planar(&Graph::complete_bipartite(2, 7)));
        assert!(is_planar(&Graph::path(6)));
        assert!(is_planar(&Graph::complete(1)));
    }

    #[test]
    fn petersen_not_planar() {
        let labels: Vec<_> = (0..10).map(VertexLabel::plain).collect();
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::from_ordinals(labels, &edges).unwrap();
        assert!(!is_planar(&g));
        assert!(!is_outerplanar(&g));
    }

    #[test]
    fn witness_traces_to_plane() {
        for g in [
            Graph::complete(4),
            Graph::complete_bipartite(2, 5),
            Graph::cycle(7).unwrap(),
        ] {
            let rs = planar_witness(&g).unwrap();
            assert_eq!(euler_characteristic(&g, &rs).unwrap(), 2);
        }
    }

    #[test]
    fn witness_on_parts_agrees_with_certificates() {
        for t in 1..=4 {
            let d = planar_decompose(t, true).unwrap();
            for part in &d.parts {
                let rs = planar_witness(&part.graph).expect("parts are planar");
                if part.graph.is_connected() {
                    assert_eq!(euler_characteristic(&part.graph, &rs).unwrap(), 2);
                }
            }
        }
    }

    #[test]
    fn outerplanarity_basics() {
        assert!(!is_outerplanar(&Graph::complete(4)));
        let labels: Vec<_> = (0..4).map(VertexLabel::plain).collect();
        let k4_minus = Graph::from_ordinals(labels, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        assert!(is_outerplanar(&k4_minus));
        assert!(!is_outerplanar(&Graph::complete_bipartite(2, 3)));
        assert!(is_outerplanar(&Graph::cycle(6).unwrap()));
    }

    #[test]
    fn audits_pass_for_all_kinds() {
        for t in 1..=4 {
            for d in [
                planar_decompose(t, false).unwrap(),
                planar_decompose(t, true).unwrap(),
                outerplanar_decompose(t).unwrap(),
                girth4_decompose(t).unwrap(),
            ] {
                let audit = audit_decomposition(&d);
                assert!(audit.passes(), "t={t} kind={:?}: {audit:?}", d.kind);
            }
        }
    }

    #[test]
    fn audit_lower_bound_example() {
        let d = planar_decompose(2, false).unwrap();
        let audit = audit_decomposition(&d);
        assert_eq!(audit.lower_bound, 3);
        assert!(audit.passes());
    }

    #[test]
    fn moved_edge_fails_audit() {
        let mut d = girth4_decompose(1).unwrap();
        // Move one edge of G_1 into the matching part.
        let g1 = &d.parts[0].graph;
        let (a, b) = g1.edges()[0];
        let (la, lb) = (g1.label(a), g1.label(b));
        let reduced: Vec<_> = g1
            .edges()
            .iter()
            .skip(1)
            .map(|&(x, y)| (g1.label(x), g1.label(y)))
            .collect();
        let new_g1 = Graph::build(g1.labels().to_vec(), &reduced).unwrap();
        let g2 = &d.parts[1].graph;
        let mut aug: Vec<_> =
            g2.edges().iter().map(|&(x, y)| (g2.label(x), g2.label(y))).collect();
        aug.push((la, lb));
        let new_g2 = Graph::build(g2.labels().to_vec(), &aug).unwrap();
        d.parts[0] = crate::decompose::Part { graph: new_g1, rotation: None };
        d.parts[1] = crate::decompose::Part { graph: new_g2, rotation: None };
        assert!(!audit_decomposition(&d).passes());
    }
}
