//! The optimal colored constructions. Each assembles decomposition parts by
//! identifying equally colored vertices, carries the label coloring, and
//! (except for surface graphs and padded graphs) a plane embedding
//! certificate.

use std::collections::HashMap;

use crate::decompose::{girth4_part, outerplanar_part, planar_part_with_layout, PLANAR_FAMILIES};
use crate::embed::RotationSystem;
use crate::error::{Error, Result};
use crate::factorization::{factorize, rep};
use crate::graph::{Coloring, Family, Graph, VertexLabel};
use crate::verify::{eq3_bound, eq4_bound, eq5_bound};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    PlanarOptimal,
    OuterplanarOptimal,
    Girth4Optimal,
    Padded,
    K2Bipartite,
    Surface,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::PlanarOptimal => "planar-optimal",
            ConstructionKind::OuterplanarOptimal => "outerplanar-optimal",
            ConstructionKind::Girth4Optimal => "girth4-optimal",
            ConstructionKind::Padded => "padded",
            ConstructionKind::K2Bipartite => "k2-bipartite",
            ConstructionKind::Surface => "surface",
        }
    }
}

/// Orientability and genus bookkeeping for the surface constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceSpec {
    Orientable { handles: u32 },
    NonOrientable { crosscaps: u32 },
}

impl SurfaceSpec {
    pub fn orientable(handles: u32) -> SurfaceSpec {
        SurfaceSpec::Orientable { handles }
    }

    pub fn non_orientable(crosscaps: u32) -> Result<SurfaceSpec> {
        if crosscaps < 1 {
            return Err(Error::InvalidParameter(
                "a non-orientable surface needs at least one crosscap".into(),
            ));
        }
        Ok(SurfaceSpec::NonOrientable { crosscaps })
    }

    /// Euler genus: 2 per handle, 1 per crosscap.
    pub fn euler_genus(self) -> u32 {
        match self {
            SurfaceSpec::Orientable { handles } => 2 * handles,
            SurfaceSpec::NonOrientable { crosscaps } => crosscaps,
        }
    }

    /// 1 iff non-orientable with an odd number of crosscaps.
    pub fn phi(self) -> u32 {
        match self {
            SurfaceSpec::NonOrientable { crosscaps } => crosscaps % 2,
            SurfaceSpec::Orientable { .. } => 0,
        }
    }

    /// Vertex identifications the construction performs: one per handle or
    /// crosshandle (pair of crosscaps).
    fn identifications(self) -> u32 {
        match self {
            SurfaceSpec::Orientable { handles } => handles,
            SurfaceSpec::NonOrientable { crosscaps } => crosscaps / 2,
        }
    }
}

/// A constructed graph together with its proper complete coloring and, when
/// the construction is drawn in the plane, an embedding certificate.
#[derive(Debug, Clone)]
pub struct ColoredConstruction {
    pub kind: ConstructionKind,
    /// Kind the graph was padded from, when `kind` is `Padded`.
    pub padded_from: Option<ConstructionKind>,
    pub t: u32,
    pub graph: Graph,
    pub coloring: Coloring,
    pub claimed_psi: u32,
    /// Claimed pseudoachromatic value when it differs from or accompanies
    /// the achromatic claim (K_{2,n-2} claims psi_s = 3).
    pub claimed_psi_s: Option<u32>,
    pub surface: Option<SurfaceSpec>,
    pub rotation: Option<RotationSystem>,
}

impl ColoredConstruction {
    /// The applicable Eq. 3/4/5 upper bound at this order (shifted by the
    /// Euler genus for surface graphs).
    pub fn applicable_bound(&self) -> Option<u32> {
        let n = self.graph.n() as u64;
        let kind = if self.kind == ConstructionKind::Padded {
            self.padded_from.unwrap_or(ConstructionKind::Padded)
        } else {
            self.kind
        };
        match kind {
            ConstructionKind::PlanarOptimal => eq3_bound(n),
            ConstructionKind::OuterplanarOptimal => eq4_bound(n),
            ConstructionKind::Girth4Optimal | ConstructionKind::K2Bipartite => eq5_bound(n),
            ConstructionKind::Surface => {
                eq3_bound(n + self.surface.map_or(0, |s| s.euler_genus()) as u64)
            }
            ConstructionKind::Padded => None,
        }
    }
}

/// Interns assembly keys into plain-labelled ordinals, in first-seen order.
struct VertexArena<K> {
    index: HashMap<K, usize>,
    colors: Vec<u32>,
}

impl<K: std::hash::Hash + Eq + Clone> VertexArena<K> {
    fn new() -> Self {
        VertexArena { index: HashMap::new(), colors: Vec::new() }
    }

    fn intern(&mut self, key: K, color: u32) -> usize {
        if let Some(&i) = self.index.get(&key) {
            debug_assert_eq!(self.colors[i], color, "identified vertices must share a color");
            return i;
        }
        let i = self.colors.len();
        self.index.insert(key, i);
        self.colors.push(color);
        i
    }

    fn len(&self) -> usize {
        self.colors.len()
    }
}

fn plain_labels(n: usize) -> Vec<VertexLabel> {
    (0..n as u32).map(VertexLabel::plain).collect()
}

/// Color ids for the planar construction: u_1..u_2t, v_*, w_* then z.
fn planar_color_of(t: u32, l: VertexLabel) -> u32 {
    let band = match l.family {
        Family::U => 0,
        Family::V => 1,
        Family::W => 2,
        Family::Z => return 6 * t,
        other => unreachable!("unexpected family {other:?} in planar construction"),
    };
    band * 2 * t + (l.index - 1)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Fig3Key {
    Z,
    /// Fresh matching endpoint of G*_{t+1}, colored (family, j) with j <= t.
    Fresh(Family, u32),
    /// Corner shared between G*_{t+1} and the exterior triangle of blob i.
    Shared(Family, u32),
    /// Any other vertex of blob i.
    Blob(u32, Family, u32),
}

/// Internal handles into the assembled planar-optimal graph, used by the
/// surface constructions to find the vertices they identify.
struct Fig3Handles {
    /// (i, family) -> ordinal of the fresh exterior vertex colored x_i.
    fresh: HashMap<(u32, Family), usize>,
    /// (i, family) -> ordinal of blob i's inner-triangle vertex colored x_i.
    inner: HashMap<(u32, Family), usize>,
}

fn build_planar_optimal_full(t: u32) -> Result<(ColoredConstruction, Fig3Handles)> {
    if t < 1 {
        return Err(Error::InvalidParameter("planar construction needs t >= 1".into()));
    }
    let m2t = 2 * t as i64;
    let bar = |j: u32| rep(j as i64 + t as i64, m2t);
    let facts: HashMap<Family, _> = PLANAR_FAMILIES
        .iter()
        .map(|&f| Ok((f, factorize(t, f)?)))
        .collect::<Result<_>>()?;

    let mut arena: VertexArena<Fig3Key> = VertexArena::new();
    let mut coords: HashMap<usize, (f64, f64)> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut handles = Fig3Handles { fresh: HashMap::new(), inner: HashMap::new() };

    let z = arena.intern(Fig3Key::Z, planar_color_of(t, VertexLabel::z()));
    coords.insert(z, (0.0, 0.0));

    // Vertical squeeze keeps each sector's content inside its wedge.
    let sy = (0.8 * std::f64::consts::PI / t as f64 / 0.27).min(1.0);
    for i in 1..=t {
        let theta = 2.0 * std::f64::consts::PI * (i - 1) as f64 / t as f64;
        let place = |p: (f64, f64)| -> (f64, f64) {
            let (x, y) = (p.0, p.1 * sy);
            (x * theta.cos() - y * theta.sin(), x * theta.sin() + y * theta.cos())
        };

        let key_of = |l: VertexLabel| -> Fig3Key {
            if l.index == bar(i) {
                Fig3Key::Shared(l.family, l.index)
            } else {
                Fig3Key::Blob(i, l.family, l.index)
            }
        };

        // Blob i: affine image of the octahedron layout with its exterior
        // triangle flattened so z sees all three corners.
        let (part, local) = planar_part_with_layout(t, i, &facts)?;
        let src = [
            local[&VertexLabel::new(Family::U, bar(i))],
            local[&VertexLabel::new(Family::V, bar(i))],
            local[&VertexLabel::new(Family::W, bar(i))],
        ];
        let dst = [(10.0, 0.0), (20.0, 5.0), (20.0, -5.0)];
        let map = affine_map(src, dst);
        for (&l, &p) in &local {
            let v = arena.intern(key_of(l), planar_color_of(t, l));
            coords.insert(v, place(map(p)));
            if l.index == i {
                handles.inner.insert((i, l.family), v);
            }
        }
        for &(a, b) in part.graph.edges() {
            let (la, lb) = (part.graph.label(a), part.graph.label(b));
            edges.push((
                arena.intern(key_of(la), planar_color_of(t, la)),
                arena.intern(key_of(lb), planar_color_of(t, lb)),
            ));
        }

        // G*_{t+1} around this sector: z, the fresh colored vertices and the
        // matching edges into the shared exterior corners.
        for (fam, fresh_pos) in
            [(Family::U, (5.0, 0.5)), (Family::V, (10.0, 2.6)), (Family::W, (10.0, -2.6))]
        {
            let fresh = arena
                .intern(Fig3Key::Fresh(fam, i), planar_color_of(t, VertexLabel::new(fam, i)));
            coords.insert(fresh, place(fresh_pos));
            handles.fresh.insert((i, fam), fresh);
            let shared = arena.intern(
                Fig3Key::Shared(fam, bar(i)),
                planar_color_of(t, VertexLabel::new(fam, bar(i))),
            );
            edges.push((z, fresh));
            edges.push((z, shared));
            edges.push((fresh, shared));
        }
    }

    let n = arena.len();
    let graph = Graph::from_ordinals(plain_labels(n), &edges)?;
    let coloring = Coloring::new(arena.colors.clone(), 6 * t + 1)?;
    let coord_map: HashMap<VertexLabel, (f64, f64)> =
        coords.into_iter().map(|(v, p)| (VertexLabel::plain(v as u32), p)).collect();
    let rotation = RotationSystem::from_coordinates(&graph, &coord_map)?;
    Ok((
        ColoredConstruction {
            kind: ConstructionKind::PlanarOptimal,
            padded_from: None,
            t,
            graph,
            coloring,
            claimed_psi: 6 * t + 1,
            claimed_psi_s: Some(6 * t + 1),
            surface: None,
            rotation: Some(rotation),
        },
        handles,
    ))
}

/// The unique affine map sending three source points to three targets.
fn affine_map(src: [(f64, f64); 3], dst: [(f64, f64); 3]) -> impl Fn((f64, f64)) -> (f64, f64) {
    let (s0, s1, s2) = (src[0], src[1], src[2]);
    let d0 = dst[0];
    let (e1, e2) = ((s1.0 - s0.0, s1.1 - s0.1), (s2.0 - s0.0, s2.1 - s0.1));
    let det = e1.0 * e2.1 - e1.1 * e2.0;
    let (f1, f2) = ((dst[1].0 - d0.0, dst[1].1 - d0.1), (dst[2].0 - d0.0, dst[2].1 - d0.1));
    move |p: (f64, f64)| {
        let (px, py) = (p.0 - s0.0, p.1 - s0.1);
        // Coordinates of p in the (e1, e2) basis.
        let a = (px * e2.1 - py * e2.0) / det;
        let b = (e1.0 * py - e1.1 * px) / det;
        (d0.0 + a * f1.0 + b * f2.0, d0.1 + a * f1.1 + b * f2.1)
    }
}

/// The optimal colored planar graph: t octahedron parts glued to the z-star
/// at the exterior-triangle corners; n = 6t^2+3t+1, k = 6t+1.
pub fn build_planar_optimal(t: u32) -> Result<ColoredConstruction> {
    build_planar_optimal_full(t).map(|(c, _)| c)
}

/// The optimal colored outerplanar graph: the t maximal outerplanar blobs
/// chained by the matching edges, one pendant; n = 4t^2+1, k = 4t.
pub fn build_outerplanar_optimal(t: u32) -> Result<ColoredConstruction> {
    if t < 1 {
        return Err(Error::InvalidParameter("outerplanar construction needs t >= 1".into()));
    }
    let m4t = 4 * t as i64;
    let mut arena: VertexArena<(u32, u32)> = VertexArena::new(); // (blob, index); 0 = pendant
    let mut coords: HashMap<usize, (f64, f64)> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    let step = 360.0 / (4 * t) as f64;
    for i in 1..=t {
        let (part, cycle) = outerplanar_part(t, i)?;
        let center_x = 3.0 * i as f64;
        let mut ordinal_of: HashMap<VertexLabel, usize> = HashMap::new();
        for (p, &l) in cycle.iter().enumerate() {
            let v = arena.intern((i, l.index), l.index - 1);
            ordinal_of.insert(l, v);
            let ang = (90.0 + (p as f64 + 0.5) * step).to_radians();
            coords.insert(v, (center_x + ang.cos(), ang.sin()));
        }
        for &(a, b) in part.graph.edges() {
            edges.push((ordinal_of[&part.graph.label(a)], ordinal_of[&part.graph.label(b)]));
        }
        // Matching edge u_i u_{i+2t}: into the next blob, or the pendant.
        let far = rep(i as i64 + 2 * t as i64, m4t);
        let here = arena.intern((i, i), i - 1);
        if i < t {
            let next = arena.intern((i + 1, far), far - 1);
            edges.push((here, next));
        } else {
            let pendant = arena.intern((0, far), far - 1);
            coords.insert(pendant, (3.0 * t as f64 + 1.3, 1.1));
            edges.push((here, pendant));
        }
    }

    let n = arena.len();
    debug_assert_eq!(n, (4 * t * t + 1) as usize);
    let graph = Graph::from_ordinals(plain_labels(n), &edges)?;
    let coloring = Coloring::new(arena.colors.clone(), 4 * t)?;
    let coord_map: HashMap<VertexLabel, (f64, f64)> =
        coords.into_iter().map(|(v, p)| (VertexLabel::plain(v as u32), p)).collect();
    let rotation = RotationSystem::from_coordinates(&graph, &coord_map)?;
    Ok(ColoredConstruction {
        kind: ConstructionKind::OuterplanarOptimal,
        padded_from: None,
        t,
        graph,
        coloring,
        claimed_psi: 4 * t,
        claimed_psi_s: Some(4 * t),
        surface: None,
        rotation: Some(rotation),
    })
}

fn girth4_color_of(t: u32, l: VertexLabel) -> u32 {
    match l.family {
        Family::U => l.index - 1,
        Family::V => 2 * t + l.index - 1,
        other => unreachable!("unexpected family {other:?} in girth-4 construction"),
    }
}

/// The optimal colored planar graph of girth 4: the ladder parts nested one
/// inside the next (G_t innermost), plus the 2t pendant matching edges;
/// n = 4t^2+2, k = 4t.
pub fn build_girth4_optimal(t: u32) -> Result<ColoredConstruction> {
    if t < 1 {
        return Err(Error::InvalidParameter("girth-4 construction needs t >= 1".into()));
    }
    let m2t = 2 * t as i64;
    let fact = factorize(t, Family::U)?;

    // Canonical key (copy, family, index): copy c's rung 0 (labels with
    // index c) merges into copy c-1, where those labels sit on rung 1.
    let key_of = |copy: u32, l: VertexLabel| -> (u32, Family, u32) {
        if copy >= 2 && l.index == copy {
            (copy - 1, l.family, l.index)
        } else {
            (copy, l.family, l.index)
        }
    };

    let mut arena: VertexArena<(u32, Family, u32)> = VertexArena::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut rotation: HashMap<usize, Vec<usize>> = HashMap::new();

    for copy in (1..=t).rev() {
        let part = girth4_part(t, copy, &fact)?;
        let rs = part.rotation.as_ref().expect("ladder parts carry rotations");
        let mut intern =
            |arena: &mut VertexArena<(u32, Family, u32)>, l: VertexLabel| -> usize {
                arena.intern(key_of(copy, l), girth4_color_of(t, l))
            };
        for &(a, b) in part.graph.edges() {
            let va = intern(&mut arena, part.graph.label(a));
            let vb = intern(&mut arena, part.graph.label(b));
            edges.push((va, vb));
        }
        for v in 0..part.graph.n() {
            let label = part.graph.label(v);
            let vv = intern(&mut arena, label);
            let mut cycle: Vec<usize> =
                rs.at(v).iter().map(|&w| intern(&mut arena, part.graph.label(w))).collect();
            if copy < t && label.index == copy + 1 {
                // This vertex already carries the guest copy's two darts
                // (rung 0 of copy+1); replace them with this host cycle plus
                // the guest pair spliced into the gap of the host face
                // (u_{s0}, u_{s1}, u_{s2}, v_{s1}): at the merged u vertex
                // the pair (v_{c+2}, u_{c+2}) enters after the neighbor
                // u_copy, at the merged v vertex the pair (u_{c+2}, v_{c+2})
                // after u_{copy-1}.
                let next_rung = rep(copy as i64 + 2, m2t);
                let g_u = arena.intern(
                    key_of(copy + 1, VertexLabel::new(Family::U, next_rung)),
                    girth4_color_of(t, VertexLabel::new(Family::U, next_rung)),
                );
                let g_v = arena.intern(
                    key_of(copy + 1, VertexLabel::new(Family::V, next_rung)),
                    girth4_color_of(t, VertexLabel::new(Family::V, next_rung)),
                );
                let (after_label, pair) = if label.family == Family::U {
                    (VertexLabel::new(Family::U, copy), [g_v, g_u])
                } else {
                    (VertexLabel::new(Family::U, rep(copy as i64 - 1, m2t)), [g_u, g_v])
                };
                let after = intern(&mut arena, after_label);
                let old = rotation.insert(vv, Vec::new()).expect("guest rotation interned first");
                debug_assert!(old.len() == 2 && old.contains(&g_u) && old.contains(&g_v));
                let pos = cycle.iter().position(|&x| x == after).expect("gap neighbor present");
                cycle.splice(pos + 1..pos + 1, pair);
                rotation.insert(vv, cycle);
            } else {
                debug_assert!(!rotation.contains_key(&vv), "rotation set twice for {label}");
                rotation.insert(vv, cycle);
            }
        }
    }

    // Pendant matching edges u_j v_j, attached at copy 1's vertex colored u_j.
    for j in 1..=2 * t {
        let host_key = key_of(1, VertexLabel::new(Family::U, j));
        let host = arena.intern(host_key, girth4_color_of(t, VertexLabel::new(Family::U, j)));
        let pendant =
            arena.intern((0, Family::V, j), girth4_color_of(t, VertexLabel::new(Family::V, j)));
        edges.push((host, pendant));
        rotation.get_mut(&host).expect("host rotation exists").push(pendant);
        rotation.insert(pendant, vec![host]);
    }

    let n = arena.len();
    debug_assert_eq!(n, (4 * t * t + 2) as usize);
    let graph = Graph::from_ordinals(plain_labels(n), &edges)?;
    let coloring = Coloring::new(arena.colors.clone(), 4 * t)?;
    let rotation_vec: Vec<Vec<usize>> =
        (0..n).map(|v| rotation.remove(&v).expect("every vertex has a rotation")).collect();
    Ok(ColoredConstruction {
        kind: ConstructionKind::Girth4Optimal,
        padded_from: None,
        t,
        graph,
        coloring,
        claimed_psi: 4 * t,
        claimed_psi_s: Some(4 * t),
        surface: None,
        rotation: Some(RotationSystem::new(rotation_vec)),
    })
}

/// K_{2,n-2} with its 2-color bipartition: the maximal planar girth-4 graph
/// with achromatic number 2 and pseudoachromatic number 3.
pub fn build_k2_bipartite(n: usize) -> Result<ColoredConstruction> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("K_{{2,n-2}} needs n >= 4, got {n}")));
    }
    let graph = Graph::complete_bipartite(2, n - 2);
    let mut colors = vec![1u32; n];
    colors[0] = 0;
    colors[1] = 0;
    let coloring = Coloring::new(colors, 2)?;
    let mut coords: HashMap<VertexLabel, (f64, f64)> = HashMap::new();
    coords.insert(VertexLabel::plain(0), (-1.0, 0.0));
    coords.insert(VertexLabel::plain(1), (1.0, 0.0));
    for i in 0..(n - 2) as u32 {
        coords.insert(VertexLabel::plain(2 + i), (0.0, i as f64 - (n - 2) as f64 / 2.0));
    }
    let rotation = RotationSystem::from_coordinates(&graph, &coords)?;
    Ok(ColoredConstruction {
        kind: ConstructionKind::K2Bipartite,
        padded_from: None,
        t: 0,
        graph,
        coloring,
        claimed_psi: 2,
        claimed_psi_s: Some(3),
        surface: None,
        rotation: Some(rotation),
    })
}

/// Pads a construction to order `n` with isolated vertices colored 0. The
/// coloring stays proper (no new edges) and complete (colors are reused), so
/// the padded graph keeps the achromatic witness of its base.
pub fn pad(base: &ColoredConstruction, n: usize) -> Result<ColoredConstruction> {
    if n < base.graph.n() {
        return Err(Error::ShrinkNotAllowed { from: base.graph.n(), to: n });
    }
    if n == base.graph.n() {
        return Ok(base.clone());
    }
    let graph = Graph::from_ordinals(plain_labels(n), base.graph.edges())?;
    let mut colors = base.coloring.colors().to_vec();
    colors.resize(n, 0);
    let coloring = Coloring::new(colors, base.coloring.k())?;
    Ok(ColoredConstruction {
        kind: ConstructionKind::Padded,
        padded_from: Some(match base.kind {
            ConstructionKind::Padded => base.padded_from.unwrap_or(ConstructionKind::Padded),
            other => other,
        }),
        t: base.t,
        graph,
        coloring,
        claimed_psi: base.claimed_psi,
        claimed_psi_s: None,
        surface: base.surface,
        rotation: None,
    })
}

/// The abstract S-graph of the surface theorems: the planar-optimal graph
/// with, per handle (or crosshandle), the fresh exterior vertices colored
/// u_i, v_i identified with the like-colored inner-triangle vertices of
/// part i. Order drops by the Euler genus, less the odd-crosscap correction.
pub fn build_surface_graph(t: u32, spec: SurfaceSpec) -> Result<ColoredConstruction> {
    if t < 1 {
        return Err(Error::InvalidParameter("surface construction needs t >= 1".into()));
    }
    let used = spec.identifications();
    if used > t {
        return Err(Error::GenusTooLarge { genus: spec.euler_genus(), t });
    }
    let (base, handles) = build_planar_optimal_full(t)?;
    if used == 0 {
        return Ok(ColoredConstruction {
            kind: ConstructionKind::Surface,
            surface: Some(spec),
            rotation: None,
            ..base
        });
    }

    // Redirect each fresh exterior vertex onto its inner partner, compact.
    let n0 = base.graph.n();
    let mut redirect: Vec<usize> = (0..n0).collect();
    for i in 1..=used {
        for fam in [Family::U, Family::V] {
            let fresh = handles.fresh[&(i, fam)];
            let inner = handles.inner[&(i, fam)];
            debug_assert_eq!(base.coloring.color(fresh), base.coloring.color(inner));
            redirect[fresh] = inner;
        }
    }
    let mut compact: Vec<usize> = vec![usize::MAX; n0];
    let mut colors = Vec::new();
    for v in 0..n0 {
        if redirect[v] == v {
            compact[v] = colors.len();
            colors.push(base.coloring.color(v));
        }
    }
    let to_new = |v: usize| compact[redirect[v]];
    let edges: Vec<(usize, usize)> =
        base.graph.edges().iter().map(|&(a, b)| (to_new(a), to_new(b))).collect();
    let n = colors.len();
    debug_assert_eq!(n, n0 - 2 * used as usize);
    let graph = Graph::from_ordinals(plain_labels(n), &edges)?;
    let coloring = Coloring::new(colors, 6 * t + 1)?;
    Ok(ColoredConstruction {
        kind: ConstructionKind::Surface,
        padded_from: None,
        t,
        graph,
        coloring,
        claimed_psi: 6 * t + 1,
        claimed_psi_s: Some(6 * t + 1),
        surface: Some(spec),
        rotation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{certifies_outerplanarity, certifies_planarity};
    use crate::graph::{girth, is_complete, is_proper, pair_census};
    use crate::verify::{is_outerplanar, is_planar};

    fn assert_optimal_shape(c: &ColoredConstruction, n: usize, k: u32) {
        assert_eq!(c.graph.n(), n, "order");
        assert_eq!(c.coloring.k(), k, "colors");
        assert_eq!(c.claimed_psi, k);
        assert!(is_proper(&c.graph, &c.coloring).unwrap(), "proper");
        assert!(is_complete(&c.graph, &c.coloring).unwrap(), "complete");
        // Every color pair realized exactly once.
        let census = pair_census(&c.graph, &c.coloring).unwrap();
        assert_eq!(census.len(), (k * (k - 1) / 2) as usize);
        assert!(census.values().all(|&m| m == 1), "pair multiplicities");
        assert_eq!(c.graph.m(), (k * (k - 1) / 2) as usize);
    }

    #[test]
    fn planar_optimal_small_t() {
        for (t, n, k) in [(1u32, 10usize, 7u32), (2, 31, 13), (3, 64, 19)] {
            let c = build_planar_optimal(t).unwrap();
            assert_optimal_shape(&c, n, k);
            assert_eq!(eq3_bound(n as u64), Some(k));
            assert!(certifies_planarity(&c.graph, c.rotation.as_ref().unwrap()));
            assert!(is_planar(&c.graph), "oracle agrees");
        }
    }

    #[test]
    fn outerplanar_optimal_small_t() {
        for (t, n, k) in [(1u32, 5usize, 4u32), (2, 17, 8), (3, 37, 12)] {
            let c = build_outerplanar_optimal(t).unwrap();
            assert_optimal_shape(&c, n, k);
            assert_eq!(eq4_bound(n as u64), Some(k));
            assert!(certifies_outerplanarity(&c.graph, c.rotation.as_ref().unwrap()));
            assert!(is_outerplanar(&c.graph), "oracle agrees");
        }
    }

    #[test]
    fn girth4_optimal_small_t() {
        for (t, n, k) in [(1u32, 6usize, 4u32), (2, 18, 8), (3, 38, 12)] {
            let c = build_girth4_optimal(t).unwrap();
            assert_optimal_shape(&c, n, k);
            assert_eq!(eq5_bound(n as u64), Some(k));
            assert!(girth(&c.graph).at_least(4), "girth");
            assert!(certifies_planarity(&c.graph, c.rotation.as_ref().unwrap()));
            assert!(is_planar(&c.graph), "oracle agrees");
        }
    }

    #[test]
    fn k2_bipartite_shapes() {
        let c4 = build_k2_bipartite(4).unwrap();
        assert_eq!(c4.graph.m(), 4);
        assert_eq!(c4.claimed_psi_s, Some(3));
        let c6 = build_k2_bipartite(6).unwrap();
        assert_eq!(c6.graph.m(), 8);
        assert_eq!(girth(&c6.graph), crate::graph::Girth::Finite(4));
        assert!(is_proper(&c6.graph, &c6.coloring).unwrap());
        assert!(is_complete(&c6.graph, &c6.coloring).unwrap());
        assert!(certifies_planarity(&c6.graph, c6.rotation.as_ref().unwrap()));
        assert!(build_k2_bipartite(3).is_err());
    }

    #[test]
    fn pad_preserves_coloring_and_class() {
        let base = build_planar_optimal(1).unwrap();
        let padded = pad(&base, 20).unwrap();
        assert_eq!(padded.graph.n(), 20);
        assert_eq!(padded.coloring.k(), 7);
        assert!(is_proper(&padded.graph, &padded.coloring).unwrap());
        assert!(is_complete(&padded.graph, &padded.coloring).unwrap());
        assert!(is_planar(&padded.graph));
        // At n = 20 the bound is 10 and the witness 7 >= 10 - 5.
        assert_eq!(eq3_bound(20), Some(10));
        assert!(padded.claimed_psi >= 10 - 5);
        let same = pad(&base, base.graph.n()).unwrap();
        assert_eq!(same.graph.n(), base.graph.n());
        assert!(matches!(pad(&base, 5), Err(Error::ShrinkNotAllowed { .. })));
    }

    #[test]
    fn outerplanar_pad_example() {
        let base = build_outerplanar_optimal(1).unwrap();
        let padded = pad(&base, 8).unwrap();
        assert!(is_outerplanar(&padded.graph));
        assert_eq!(eq4_bound(8), Some(5));
        assert!(padded.claimed_psi >= 5 - 3);
    }

    #[test]
    fn surface_zero_handles_is_planar_optimal() {
        let c = build_surface_graph(1, SurfaceSpec::orientable(0)).unwrap();
        let base = build_planar_optimal(1).unwrap();
        assert_eq!(c.graph.n(), base.graph.n());
        assert_eq!(c.graph.m(), base.graph.m());
        assert_eq!(c.kind, ConstructionKind::Surface);
    }

    #[test]
    fn surface_small_cases() {
        // t=1, one handle: n = 10 - 2 = 8, still 7 colors.
        let c = build_surface_graph(1, SurfaceSpec::orientable(1)).unwrap();
        assert_eq!(c.graph.n(), 8);
        assert_eq!(c.coloring.k(), 7);
        assert!(is_proper(&c.graph, &c.coloring).unwrap());
        assert!(is_complete(&c.graph, &c.coloring).unwrap());
        assert_eq!(eq3_bound(8 + 2), Some(7));
        // t=1, one crosscap: phi = 1, n stays 10.
        let c = build_surface_graph(1, SurfaceSpec::non_orientable(1).unwrap()).unwrap();
        assert_eq!(c.graph.n(), 10);
        let eps = c.surface.unwrap().euler_genus() as usize;
        assert!(c.graph.m() <= 3 * c.graph.n() + 3 * eps - 6);
    }

    #[test]
    fn surface_rejects_excess_genus() {
        assert!(matches!(
            build_surface_graph(1, SurfaceSpec::orientable(2)),
            Err(Error::GenusTooLarge { .. })
        ));
        assert!(matches!(
            build_surface_graph(2, SurfaceSpec::non_orientable(6).unwrap()),
            Err(Error::GenusTooLarge { .. })
        ));
        assert!(SurfaceSpec::non_orientable(0).is_err());
    }

    #[test]
    fn surface_formulas_across_admissible_range() {
        for t in 1..=2u32 {
            let base_n = (6 * t * t + 3 * t + 1) as usize;
            for h in 0..=t {
                let spec = SurfaceSpec::orientable(h);
                let c = build_surface_graph(t, spec).unwrap();
                assert_eq!(c.graph.n(), base_n - spec.euler_genus() as usize);
                assert!(is_proper(&c.graph, &c.coloring).unwrap());
                assert!(is_complete(&c.graph, &c.coloring).unwrap());
            }
            for cc in 1..=2 * t {
                let spec = SurfaceSpec::non_orientable(cc).unwrap();
                let c = build_surface_graph(t, spec).unwrap();
                assert_eq!(
                    c.graph.n(),
                    base_n - spec.euler_genus() as usize + spec.phi() as usize
                );
                assert!(is_proper(&c.graph, &c.coloring).unwrap());
                assert!(is_complete(&c.graph, &c.coloring).unwrap());
            }
        }
    }

    #[test]
    fn certificates_hold_for_larger_t() {
        for t in 4..=5u32 {
            let p = build_planar_optimal(t).unwrap();
            assert!(certifies_planarity(&p.graph, p.rotation.as_ref().unwrap()));
            let o = build_outerplanar_optimal(t).unwrap();
            assert!(certifies_outerplanarity(&o.graph, o.rotation.as_ref().unwrap()));
            let g = build_girth4_optimal(t).unwrap();
            assert!(certifies_planarity(&g.graph, g.rotation.as_ref().unwrap()));
            assert!(girth(&g.graph).at_least(4));
        }
    }
}
