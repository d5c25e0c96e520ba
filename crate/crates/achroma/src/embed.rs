//! Rotation systems: combinatorial embedding certificates and the face trace
//! that checks them.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};

/// Per-vertex cyclic orderings of incident neighbors (by ordinal). A valid
/// rotation system fixes an embedding of the graph on some orientable
/// surface; face tracing recovers the face count and hence the Euler
/// characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(rotation: Vec<Vec<usize>>) -> RotationSystem {
        RotationSystem { rotation }
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Each cyclic list must contain exactly the graph neighbors, once each.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.rotation.len() != g.n() {
            return Err(Error::InvalidRotation(format!(
                "{} rotations for {} vertices",
                self.rotation.len(),
                g.n()
            )));
        }
        for v in 0..g.n() {
            let mut sorted = self.rotation[v].clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "rotation at {} does not list its neighbors",
                    g.label(v)
                )));
            }
        }
        Ok(())
    }

    /// Builds the rotation system of a straight-line drawing: neighbors
    /// sorted counterclockwise around each vertex.
    pub fn from_coordinates(g: &Graph, coords: &HashMap<VertexLabel, (f64, f64)>) -> Result<RotationSystem> {
        let pos: Vec<(f64, f64)> = g
            .labels()
            .iter()
            .map(|l| {
                coords
                    .get(l)
                    .copied()
                    .ok_or_else(|| Error::InvalidParameter(format!("no coordinates for {l}")))
            })
            .collect::<Result<_>>()?;
        let rotation = (0..g.n())
            .map(|v| {
                let mut nbrs: Vec<usize> = g.neighbors(v).to_vec();
                nbrs.sort_by(|&a, &b| {
                    let ang = |w: usize| {
                        let (dx, dy) = (pos[w].0 - pos[v].0, pos[w].1 - pos[v].1);
                        dy.atan2(dx)
                    };
                    ang(a).partial_cmp(&ang(b)).expect("finite coordinates")
                });
                nbrs
            })
            .collect();
        Ok(RotationSystem { rotation })
    }
}

/// Counts the closed face walks of `(g, rs)` under the next-dart rule: the
/// successor of a dart `u -> v` leaves `v` toward the neighbor after `u` in
/// the rotation at `v`. Requires a connected graph so the certificate is
/// unambiguous.
pub fn trace_faces(g: &Graph, rs: &RotationSystem) -> Result<usize> {
    rs.validate(g)?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    face_walks(g, rs).map(|w| w.len())
}

/// The face walks themselves, as dart lists.
pub fn face_walks(g: &Graph, rs: &RotationSystem) -> Result<Vec<Vec<(usize, usize)>>> {
    rs.validate(g)?;
    let succ_at: Vec<HashMap<usize, usize>> = (0..g.n())
        .map(|v| {
            let rot = rs.at(v);
            rot.iter()
                .enumerate()
                .map(|(i, &u)| (u, rot[(i + 1) % rot.len()]))
                .collect()
        })
        .collect();
    let mut visited: HashMap<(usize, usize), bool> = HashMap::new();
    let mut faces = Vec::new();
    for &(a, b) in g.edges() {
        for dart in [(a, b), (b, a)] {
            if visited.contains_key(&dart) {
                continue;
            }
            let mut walk = Vec::new();
            let mut cur = dart;
            loop {
                visited.insert(cur, true);
                walk.push(cur);
                let (u, v) = cur;
                cur = (v, succ_at[v][&u]);
                if cur == dart {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    if g.n() == 1 {
        faces.push(Vec::new()); // single face around an isolated vertex
    }
    Ok(faces)
}

/// Euler characteristic n - m + f of a connected embedded graph.
pub fn euler_characteristic(g: &Graph, rs: &RotationSystem) -> Result<i64> {
    let f = trace_faces(g, rs)? as i64;
    Ok(g.n() as i64 - g.m() as i64 + f)
}

/// True iff the rotation certifies a plane embedding (Euler characteristic 2).
pub fn certifies_planarity(g: &Graph, rs: &RotationSystem) -> bool {
    euler_characteristic(g, rs) == Ok(2)
}

/// True iff the rotation certifies a plane embedding with every vertex on a
/// common face: the outerplanarity certificate.
pub fn certifies_outerplanarity(g: &Graph, rs: &RotationSystem) -> bool {
    if g.n() == 1 {
        return true;
    }
    let Ok(walks) = face_walks(g, rs) else { return false };
    if !g.is_connected() || g.n() as i64 - g.m() as i64 + walks.len() as i64 != 2 {
        return false;
    }
    walks.iter().any(|walk| {
        let mut on_face = vec![false; g.n()];
        for &(u, v) in walk {
            on_face[u] = true;
            on_face[v] = true;
        }
        on_face.iter().all(|&b| b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexLabel;

    fn k4_planar_rotation() -> (Graph, RotationSystem) {
        let g = Graph::complete(4);
        // Triangle 0-1-2 with 3 in the middle.
        let rs = RotationSystem::new(vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
        ]);
        (g, rs)
    }

    #[test]
    fn k4_traces_to_tetrahedron() {
        let (g, rs) = k4_planar_rotation();
        assert_eq!(trace_faces(&g, &rs).unwrap(), 4);
        assert_eq!(euler_characteristic(&g, &rs).unwrap(), 2);
    }

    #[test]
    fn c4_traces_two_faces() {
        let g = Graph::cycle(4).unwrap();
        let rs = RotationSystem::new(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]);
        assert_eq!(trace_faces(&g, &rs).unwrap(), 2);
    }

    #[test]
    fn octahedron_from_coordinates_traces_eight_faces() {
        // K_{2,2,2} with antipodal pairs (0,3), (1,4), (2,5); antiprism layout.
        let labels: Vec<_> = (0..6).map(VertexLabel::plain).collect();
        let mut edges = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                if b != a + 3 {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_ordinals(labels.clone(), &edges).unwrap();
        let mut coords = HashMap::new();
        for (i, angle) in [90.0_f64, 210.0, 330.0].iter().enumerate() {
            let r = angle.to_radians();
            coords.insert(labels[i], (r.cos(), r.sin()));
        }
        for (i, angle) in [270.0_f64, 30.0, 150.0].iter().enumerate() {
            let r = angle.to_radians();
            coords.insert(labels[i + 3], (2.0 * r.cos(), 2.0 * r.sin()));
        }
        let rs = RotationSystem::from_coordinates(&g, &coords).unwrap();
        assert_eq!(trace_faces(&g, &rs).unwrap(), 8);
        assert!(certifies_planarity(&g, &rs));
    }

    #[test]
    fn bad_rotation_rejected() {
        let g = Graph::complete(3);
        let rs = RotationSystem::new(vec![vec![1], vec![0, 2], vec![0, 1]]);
        assert!(matches!(trace_faces(&g, &rs), Err(Error::InvalidRotation(_))));
    }

    #[test]
    fn disconnected_rejected() {
        let labels: Vec<_> = (0..4).map(VertexLabel::plain).collect();
        let g = Graph::from_ordinals(labels, &[(0, 1), (2, 3)]).unwrap();
        let rs = RotationSystem::new(vec![vec![1], vec![0], vec![3], vec![2]]);
        assert!(matches!(trace_faces(&g, &rs), Err(Error::DisconnectedGraph)));
    }

    #[test]
    fn nonplanar_rotation_has_low_euler_characteristic() {
        // K_5 admits no rotation with characteristic 2; identity-order rotation.
        let g = Graph::complete(5);
        let rs = RotationSystem::new(
            (0..5).map(|v| (0..5).filter(|&w| w != v).collect()).collect(),
        );
        let chi = euler_characteristic(&g, &rs).unwrap();
        assert!(chi < 2);
        assert_eq!(chi.rem_euclid(2), 0);
    }
}
