//! The three decompositions of complete graphs into t+1 parts: planar
//! (K_6t and K_6t+1), outerplanar (K_4t) and girth-4 (K_4t). Each main part
//! carries a rotation system read off a straight-line layout of the figure
//! construction, so certificates exist for every t.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::factorization::{factorize, rep, HamiltonianPathFactorization};
use crate::graph::{Family, Graph, VertexLabel};
use crate::embed::RotationSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    Planar,
    Outerplanar,
    Girth4,
}

impl DecompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            DecompositionKind::Planar => "planar",
            DecompositionKind::Outerplanar => "outerplanar",
            DecompositionKind::Girth4 => "girth4",
        }
    }

    /// Maximum size of an n-vertex graph of this class.
    pub fn size_cap(self, n: usize) -> usize {
        match self {
            DecompositionKind::Planar => 3 * (n - 2),
            DecompositionKind::Outerplanar => 2 * n - 3,
            DecompositionKind::Girth4 => 2 * (n - 2),
        }
    }
}

/// One part of a decomposition. Connected main parts carry an embedding
/// certificate; matchings are left without one (they are trivially planar
/// and the face trace needs a connected graph).
#[derive(Debug, Clone)]
pub struct Part {
    pub graph: Graph,
    pub rotation: Option<RotationSystem>,
}

/// An ordered edge-disjoint decomposition of a host complete graph.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub t: u32,
    pub with_z: bool,
    pub host: Graph,
    pub parts: Vec<Part>,
}

fn lbl(family: Family, index: u32) -> VertexLabel {
    VertexLabel::new(family, index)
}

fn complete_on(labels: Vec<VertexLabel>) -> Graph {
    let mut edges = Vec::new();
    for a in 0..labels.len() {
        for b in a + 1..labels.len() {
            edges.push((a, b));
        }
    }
    Graph::from_ordinals(labels, &edges).expect("complete graph is simple")
}

fn polar(radius: f64, degrees: f64) -> (f64, f64) {
    let r = degrees.to_radians();
    (radius * r.cos(), radius * r.sin())
}

/// The three symbol families of the planar decomposition, in the fixed
/// order used to orient the octahedron.
pub(crate) const PLANAR_FAMILIES: [Family; 3] = [Family::U, Family::V, Family::W];

/// Builds the octahedron part G_i of the planar decomposition together with
/// its straight-line layout: inner triangle u_i v_i w_i, outer triangle
/// u_{i+t} v_{i+t} w_{i+t}, and each half-path P_{x_s} on the cevian of the
/// face (x_s, y_sbar, z_sbar).
pub(crate) fn planar_part_with_layout(
    t: u32,
    i: u32,
    facts: &HashMap<Family, HamiltonianPathFactorization>,
) -> Result<(Part, HashMap<VertexLabel, (f64, f64)>)> {
    let m = 2 * t as i64;
    let bar = |s: u32| rep(s as i64 + t as i64, m);
    let mut labels: Vec<VertexLabel> = Vec::with_capacity(6 * t as usize);
    for fam in PLANAR_FAMILIES {
        for j in 1..=2 * t {
            labels.push(lbl(fam, j));
        }
    }

    let mut coords: HashMap<VertexLabel, (f64, f64)> = HashMap::new();
    let inner_angle = |fam: Family| match fam {
        Family::U => 90.0,
        Family::V => 210.0,
        _ => 330.0,
    };
    for fam in PLANAR_FAMILIES {
        coords.insert(lbl(fam, i), polar(1.0, inner_angle(fam)));
        coords.insert(lbl(fam, bar(i)), polar(2.2, inner_angle(fam) + 180.0));
    }

    let mut edges: Vec<(VertexLabel, VertexLabel)> = Vec::new();
    // Octahedron: all cross-family edges among the six corners.
    for (a, fa) in PLANAR_FAMILIES.iter().enumerate() {
        for fb in &PLANAR_FAMILIES[a + 1..] {
            for sa in [i, bar(i)] {
                for sb in [i, bar(i)] {
                    edges.push((lbl(*fa, sa), lbl(*fb, sb)));
                }
            }
        }
    }
    // Half-paths inserted in the six side faces.
    for fam in PLANAR_FAMILIES.iter() {
        let fact = &facts[fam];
        let others: Vec<Family> =
            PLANAR_FAMILIES.iter().copied().filter(|f| f != fam).collect();
        for s in [i, bar(i)] {
            let half = fact.half_path(s);
            debug_assert_eq!(half[0], s);
            let corner_y = lbl(others[0], bar(s));
            let corner_z = lbl(others[1], bar(s));
            let leaf_pos = coords[&lbl(*fam, s)];
            let mid = {
                let py = coords[&corner_y];
                let pz = coords[&corner_z];
                ((py.0 + pz.0) / 2.0, (py.1 + pz.1) / 2.0)
            };
            for (k, win) in half.windows(2).enumerate() {
                edges.push((lbl(*fam, win[0]), lbl(*fam, win[1])));
                let q = lbl(*fam, win[1]);
                edges.push((q, corner_y));
                edges.push((q, corner_z));
                let f = (k as f64 + 1.0) / t as f64 * 0.8;
                coords.insert(q, (
                    leaf_pos.0 + f * (mid.0 - leaf_pos.0),
                    leaf_pos.1 + f * (mid.1 - leaf_pos.1),
                ));
            }
        }
    }

    let graph = Graph::build(labels, &edges)?;
    let rotation = RotationSystem::from_coordinates(&graph, &coords)?;
    Ok((Part { graph, rotation: Some(rotation) }, coords))
}

/// Decomposes K_6t (or K_6t+1 when `with_z`) into t maximal planar parts
/// plus a perfect matching (or the join of z with the matching).
pub fn planar_decompose(t: u32, with_z: bool) -> Result<Decomposition> {
    if t < 1 {
        return Err(Error::InvalidParameter("planar decomposition needs t >= 1".into()));
    }
    let m = 2 * t as i64;
    let facts: HashMap<Family, HamiltonianPathFactorization> = PLANAR_FAMILIES
        .iter()
        .map(|&f| Ok((f, factorize(t, f)?)))
        .collect::<Result<_>>()?;

    let mut parts: Vec<Part> = (1..=t)
        .map(|i| planar_part_with_layout(t, i, &facts).map(|(p, _)| p))
        .collect::<Result<_>>()?;

    let matching_edges: Vec<(VertexLabel, VertexLabel)> = PLANAR_FAMILIES
        .iter()
        .flat_map(|&f| {
            (1..=t).map(move |j| (lbl(f, j), lbl(f, rep(j as i64 + t as i64, m))))
        })
        .collect();

    let mut host_labels: Vec<VertexLabel> = Vec::new();
    for fam in PLANAR_FAMILIES {
        for j in 1..=2 * t {
            host_labels.push(lbl(fam, j));
        }
    }

    if with_z {
        // G*_{t+1}: the join of z with the matching, drawn as a flower of 3t
        // triangles around z.
        let mut labels = host_labels.clone();
        labels.push(VertexLabel::z());
        let mut edges = matching_edges.clone();
        for &l in &host_labels {
            edges.push((VertexLabel::z(), l));
        }
        let mut coords = HashMap::new();
        coords.insert(VertexLabel::z(), (0.0, 0.0));
        let step = 360.0 / (3 * t) as f64;
        for (p, &(a, b)) in matching_edges.iter().enumerate() {
            let theta = p as f64 * step;
            coords.insert(a, polar(1.0, theta - 0.3 * step));
            coords.insert(b, polar(1.0, theta + 0.3 * step));
        }
        let graph = Graph::build(labels, &edges)?;
        let rotation = RotationSystem::from_coordinates(&graph, &coords)?;
        parts.push(Part { graph, rotation: Some(rotation) });
        host_labels.push(VertexLabel::z());
    } else {
        let graph = Graph::build(host_labels.clone(), &matching_edges)?;
        parts.push(Part { graph, rotation: None });
    }

    Ok(Decomposition {
        kind: DecompositionKind::Planar,
        t,
        with_z,
        host: complete_on(host_labels),
        parts,
    })
}

/// Signed boustrophedon offsets o_1..o_t with o_1 = t: the fan path of the
/// outerplanar part is u_{i+o_1}, ..., u_{i+o_t}. The offsets are found by
/// search subject to: one offset per residue class mod t, the offset
/// magnitudes and the consecutive-gap magnitudes together cover 1..2t-1
/// exactly once (difference 2t is spent on the long chord and the matching),
/// and the path endpoint constraint that lets the assembled drawing chain
/// the blobs: o_t = 2t-1, or o_2 = -(t+1) in which case the cycle is
/// traversed reflected.
pub(crate) fn boustrophedon_offsets(t: u32) -> Result<(Vec<i64>, bool)> {
    let tt = t as i64;
    if t == 1 {
        return Ok((vec![1], false));
    }
    let magnitude = |d: i64| -> i64 {
        let r = d.rem_euclid(4 * tt);
        r.min(4 * tt - r)
    };
    // candidates by target constraint; prefer the unreflected form.
    for (last_fixed, reflected) in [(true, false), (false, true)] {
        let mut offsets: Vec<i64> = vec![tt];
        let mut used_mag = vec![false; 2 * t as usize]; // magnitudes 1..2t-1
        let mut used_class = vec![false; t as usize];
        used_mag[tt as usize] = true;
        used_class[0] = true;
        if fill(
            &mut offsets,
            &mut used_mag,
            &mut used_class,
            tt,
            last_fixed,
            reflected,
            &magnitude,
        ) {
            return Ok((offsets, reflected));
        }
    }
    Err(Error::InvalidParameter(format!(
        "no boustrophedon labelling found for t = {t}"
    )))
}

fn fill(
    offsets: &mut Vec<i64>,
    used_mag: &mut [bool],
    used_class: &mut [bool],
    tt: i64,
    last_fixed: bool,
    reflected: bool,
    magnitude: &dyn Fn(i64) -> i64,
) -> bool {
    let pos = offsets.len() as i64;
    if pos == tt {
        return true;
    }
    let candidates: Vec<i64> = if last_fixed && pos == tt - 1 {
        vec![2 * tt - 1]
    } else if reflected && pos == 1 {
        vec![-(tt + 1)]
    } else {
        let mut c = Vec::new();
        for mag in 1..2 * tt {
            for sign in [1, -1] {
                c.push(sign * mag);
            }
        }
        c
    };
    for cand in candidates {
        let mag = cand.abs();
        let class = cand.rem_euclid(tt) as usize;
        if used_mag[mag as usize] || used_class[class] {
            continue;
        }
        let gap = magnitude(cand - *offsets.last().unwrap());
        if gap == 0 || gap >= 2 * tt || used_mag[gap as usize] || gap == mag {
            continue;
        }
        used_mag[mag as usize] = true;
        used_mag[gap as usize] = true;
        used_class[class] = true;
        offsets.push(cand);
        if fill(offsets, used_mag, used_class, tt, last_fixed, reflected, magnitude) {
            return true;
        }
        offsets.pop();
        used_mag[mag as usize] = false;
        used_mag[gap as usize] = false;
        used_class[class] = false;
    }
    false
}

/// The blob G_i of the outerplanar decomposition: four fans identified at
/// the shared apex labels plus the long chord, as a triangulated polygon.
/// Returns the part and its outer cycle (cut so that it starts at the
/// incoming identification vertex u_{i+2t-1} and ends at the apex u_i).
pub(crate) fn outerplanar_part(t: u32, i: u32) -> Result<(Part, Vec<VertexLabel>)> {
    let m = 4 * t as i64;
    let (offsets, reflected) = boustrophedon_offsets(t)?;
    let base: Vec<u32> = offsets.iter().map(|&o| rep(i as i64 + o, m)).collect();

    let mut edges: Vec<(VertexLabel, VertexLabel)> = Vec::new();
    let mut cycle: Vec<VertexLabel> = Vec::new();
    for s in 0..4u32 {
        let shift = (s * t) as i64;
        let apex = lbl(Family::U, rep(i as i64 + shift, m));
        let path: Vec<VertexLabel> =
            base.iter().map(|&b| lbl(Family::U, rep(b as i64 + shift, m))).collect();
        for &p in &path {
            edges.push((apex, p));
        }
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        cycle.push(apex);
        // Reversed path without its head b_1 (that label is the next apex).
        for &p in path.iter().skip(1).rev() {
            cycle.push(p);
        }
    }
    edges.push((
        lbl(Family::U, rep(i as i64 + t as i64, m)),
        lbl(Family::U, rep(i as i64 + 3 * t as i64, m)),
    ));

    if reflected {
        cycle.reverse();
    }
    // Cut the cycle so it starts at the incoming vertex u_{i+2t-1}, the
    // cyclic successor of the apex u_i.
    let apex0 = lbl(Family::U, i);
    let apex_pos = cycle.iter().position(|&l| l == apex0).expect("apex in cycle");
    let cut = (apex_pos + 1) % cycle.len();
    cycle.rotate_left(cut);
    debug_assert_eq!(*cycle.last().unwrap(), apex0);
    debug_assert_eq!(cycle[0], lbl(Family::U, rep(i as i64 + 2 * t as i64 - 1, m)));

    let step = 360.0 / (4 * t) as f64;
    let coords: HashMap<VertexLabel, (f64, f64)> = cycle
        .iter()
        .enumerate()
        .map(|(p, &l)| (l, polar(1.0, 90.0 + (p as f64 + 0.5) * step)))
        .collect();
    let graph = Graph::build(cycle.clone(), &edges)?;
    let rotation = RotationSystem::from_coordinates(&graph, &coords)?;
    Ok((Part { graph, rotation: Some(rotation) }, cycle))
}

/// Decomposes K_4t into t maximal outerplanar parts plus a t-edge matching.
pub fn outerplanar_decompose(t: u32) -> Result<Decomposition> {
    if t < 1 {
        return Err(Error::InvalidParameter("outerplanar decomposition needs t >= 1".into()));
    }
    let m = 4 * t as i64;
    let mut parts: Vec<Part> =
        (1..=t).map(|i| outerplanar_part(t, i).map(|(p, _)| p)).collect::<Result<_>>()?;

    let mut matching_labels = Vec::new();
    let mut matching_edges = Vec::new();
    for j in 1..=t {
        let a = lbl(Family::U, j);
        let b = lbl(Family::U, rep(j as i64 + 2 * t as i64, m));
        matching_labels.push(a);
        matching_labels.push(b);
        matching_edges.push((a, b));
    }
    parts.push(Part { graph: Graph::build(matching_labels, &matching_edges)?, rotation: None });

    let host_labels: Vec<VertexLabel> = (1..=4 * t).map(|j| lbl(Family::U, j)).collect();
    Ok(Decomposition {
        kind: DecompositionKind::Outerplanar,
        t,
        with_z: false,
        host: complete_on(host_labels),
        parts,
    })
}

/// The ladder part G_i of the girth-4 decomposition: the two Hamiltonian
/// paths F^u_i, F^v_i plus the cross zigzag, drawn as nested quadrilaterals
/// with rung 0 and rung 1 on the exterior face.
pub(crate) fn girth4_part(t: u32, i: u32, fact: &HamiltonianPathFactorization) -> Result<Part> {
    let seq = &fact.paths[(i - 1) as usize].sequence;
    let mut edges: Vec<(VertexLabel, VertexLabel)> = Vec::new();
    for w in seq.windows(2) {
        edges.push((lbl(Family::U, w[0]), lbl(Family::U, w[1])));
        edges.push((lbl(Family::V, w[0]), lbl(Family::V, w[1])));
        edges.push((lbl(Family::U, w[0]), lbl(Family::V, w[1])));
        edges.push((lbl(Family::V, w[0]), lbl(Family::U, w[1])));
    }

    let mut labels = Vec::with_capacity(4 * t as usize);
    let mut coords = HashMap::new();
    for (k, &s) in seq.iter().enumerate() {
        let radius = 0.45_f64.powi(k as i32);
        let (ua, va) = if k % 2 == 0 { (135.0, 315.0) } else { (45.0, 225.0) };
        let u = lbl(Family::U, s);
        let v = lbl(Family::V, s);
        coords.insert(u, polar(radius, ua));
        coords.insert(v, polar(radius, va));
        labels.push(u);
        labels.push(v);
    }
    let graph = Graph::build(labels, &edges)?;
    let rotation = RotationSystem::from_coordinates(&graph, &coords)?;
    Ok(Part { graph, rotation: Some(rotation) })
}

/// Decomposes K_4t into t planar parts of girth >= 4 plus a perfect matching.
pub fn girth4_decompose(t: u32) -> Result<Decomposition> {
    if t < 1 {
        return Err(Error::InvalidParameter("girth-4 decomposition needs t >= 1".into()));
    }
    let fact = factorize(t, Family::U)?;
    let mut parts: Vec<Part> =
        (1..=t).map(|i| girth4_part(t, i, &fact)).collect::<Result<_>>()?;

    let mut matching_labels = Vec::new();
    let mut matching_edges = Vec::new();
    for j in 1..=2 * t {
        matching_labels.push(lbl(Family::U, j));
    }
    for j in 1..=2 * t {
        matching_labels.push(lbl(Family::V, j));
    }
    for j in 1..=2 * t {
        matching_edges.push((lbl(Family::U, j), lbl(Family::V, j)));
    }
    parts.push(Part { graph: Graph::build(matching_labels, &matching_edges)?, rotation: None });

    let mut host_labels: Vec<VertexLabel> = (1..=2 * t).map(|j| lbl(Family::U, j)).collect();
    host_labels.extend((1..=2 * t).map(|j| lbl(Family::V, j)));
    Ok(Decomposition {
        kind: DecompositionKind::Girth4,
        t,
        with_z: false,
        host: complete_on(host_labels),
        parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{certifies_outerplanarity, certifies_planarity};
    use std::collections::BTreeSet;

    fn edge_set(g: &Graph) -> BTreeSet<(VertexLabel, VertexLabel)> {
        g.edges()
            .iter()
            .map(|&(a, b)| {
                let (la, lb) = (g.label(a), g.label(b));
                (la.min(lb), la.max(lb))
            })
            .collect()
    }

    /// Oracle: parts are pairwise edge-disjoint and cover the host exactly.
    fn assert_partition(d: &Decomposition) {
        let mut union = BTreeSet::new();
        for part in &d.parts {
            for e in edge_set(&part.graph) {
                assert!(union.insert(e), "edge {}-{} repeated across parts", e.0, e.1);
            }
        }
        assert_eq!(union, edge_set(&d.host));
    }

    #[test]
    fn planar_t1_shapes() {
        let d = planar_decompose(1, false).unwrap();
        assert_eq!(d.parts.len(), 2);
        assert_eq!(d.parts[0].graph.m(), 12);
        assert_eq!(d.parts[1].graph.m(), 3);
        assert_eq!(d.host.m(), 15);
        assert_partition(&d);
    }

    #[test]
    fn planar_t1_with_z_covers_k7() {
        let d = planar_decompose(1, true).unwrap();
        assert_eq!(d.host.n(), 7);
        assert_eq!(d.host.m(), 21);
        assert_eq!(d.parts[1].graph.m(), 9);
        assert_partition(&d);
    }

    #[test]
    fn planar_partition_and_certificates_up_to_t6() {
        for t in 1..=6 {
            for with_z in [false, true] {
                let d = planar_decompose(t, with_z).unwrap();
                assert_eq!(d.parts.len(), t as usize + 1);
                assert_partition(&d);
                for part in &d.parts[..t as usize] {
                    assert_eq!(part.graph.n(), 6 * t as usize);
                    assert_eq!(part.graph.m(), 18 * t as usize - 6);
                    assert!(certifies_planarity(&part.graph, part.rotation.as_ref().unwrap()));
                }
                if with_z {
                    let star = d.parts.last().unwrap();
                    assert_eq!(star.graph.m(), 9 * t as usize);
                    assert!(certifies_planarity(&star.graph, star.rotation.as_ref().unwrap()));
                }
            }
        }
    }

    #[test]
    fn boustrophedon_offsets_exist_up_to_t12() {
        for t in 1..=12u32 {
            let (offsets, _) = boustrophedon_offsets(t).unwrap();
            assert_eq!(offsets.len(), t as usize);
            assert_eq!(offsets[0], t as i64);
        }
    }

    #[test]
    fn outerplanar_t1_is_k4_minus_edge() {
        let d = outerplanar_decompose(1).unwrap();
        assert_eq!(d.parts.len(), 2);
        assert_eq!(d.parts[0].graph.m(), 5);
        let matching = edge_set(&d.parts[1].graph);
        assert_eq!(matching, BTreeSet::from([(lbl(Family::U, 1), lbl(Family::U, 3))]));
        assert_partition(&d);
    }

    #[test]
    fn outerplanar_partition_and_certificates_up_to_t6() {
        for t in 1..=6 {
            let d = outerplanar_decompose(t).unwrap();
            assert_eq!(d.parts.len(), t as usize + 1);
            assert_partition(&d);
            for part in &d.parts[..t as usize] {
                assert_eq!(part.graph.n(), 4 * t as usize);
                assert_eq!(part.graph.m(), 8 * t as usize - 3);
                assert!(certifies_outerplanarity(&part.graph, part.rotation.as_ref().unwrap()));
            }
            assert_eq!(d.parts[t as usize].graph.m(), t as usize);
        }
    }

    #[test]
    fn girth4_t1_is_c4_plus_matching() {
        let d = girth4_decompose(1).unwrap();
        assert_eq!(d.parts[0].graph.m(), 4);
        assert_eq!(d.parts[1].graph.m(), 2);
        assert_partition(&d);
        assert_eq!(crate::graph::girth(&d.parts[0].graph), crate::graph::Girth::Finite(4));
    }

    #[test]
    fn girth4_partition_and_certificates_up_to_t6() {
        for t in 1..=6 {
            let d = girth4_decompose(t).unwrap();
            assert_eq!(d.parts.len(), t as usize + 1);
            assert_partition(&d);
            for part in &d.parts[..t as usize] {
                assert_eq!(part.graph.n(), 4 * t as usize);
                assert_eq!(part.graph.m(), 8 * t as usize - 4);
                assert!(certifies_planarity(&part.graph, part.rotation.as_ref().unwrap()));
                assert!(crate::graph::girth(&part.graph).at_least(4));
            }
            assert_eq!(d.parts[t as usize].graph.m(), 2 * t as usize);
        }
    }

    #[test]
    fn part_counts_match_thickness_bound() {
        for t in 1..=4u32 {
            let d = planar_decompose(t, false).unwrap();
            let n = d.host.n();
            let bound = (n * (n - 1) / 2).div_ceil(3 * (n - 2));
            assert_eq!(bound, t as usize + 1);
            assert_eq!(d.parts.len(), bound);
        }
    }

    #[test]
    fn t0_rejected() {
        assert!(planar_decompose(0, false).is_err());
        assert!(outerplanar_decompose(0).is_err());
        assert!(girth4_decompose(0).is_err());
    }
}
