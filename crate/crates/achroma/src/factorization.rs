//! Cyclic factorization of K_2t into t Hamiltonian paths, together with the
//! center edges and the two t-vertex half-paths of each path. All three
//! decompositions consume exactly this structure.

use crate::error::{Error, Result};
use crate::graph::{Family, VertexLabel};

/// Maps an integer onto the representative 1..=modulus (0 maps to modulus).
pub(crate) fn rep(value: i64, modulus: i64) -> u32 {
    ((value - 1).rem_euclid(modulus) + 1) as u32
}

/// One Hamiltonian path F_i of the factorization, as its vertex index
/// sequence over 1..=2t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianPath {
    pub sequence: Vec<u32>,
}

impl HamiltonianPath {
    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.sequence.windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// The factorization of K_2t on vertices x_1..x_2t: paths F_1..F_t, the
/// center edge of each, and for each leaf the t-vertex half-path that
/// contains it (leaf first).
#[derive(Debug, Clone)]
pub struct HamiltonianPathFactorization {
    pub t: u32,
    pub family: Family,
    pub paths: Vec<HamiltonianPath>,
    /// center_edges[i] lies on paths[i] and has the form x_j x_{j+t}.
    pub center_edges: Vec<(u32, u32)>,
    /// (leaf index, half-path vertex sequence starting at the leaf).
    pub half_paths: Vec<(u32, Vec<u32>)>,
}

/// The zigzag path x_i, x_{i+1}, x_{i-1}, x_{i+2}, x_{i-2}, ... ending at
/// x_{i+t}; indices are representatives 1..=2t.
fn zigzag(i: u32, t: u32) -> Vec<u32> {
    let m = 2 * t as i64;
    let i = i as i64;
    let mut seq = Vec::with_capacity(2 * t as usize);
    seq.push(rep(i, m));
    for j in 1..=t as i64 {
        seq.push(rep(i + j, m));
        if seq.len() == 2 * t as usize {
            break;
        }
        seq.push(rep(i - j, m));
    }
    seq
}

/// Builds the cyclic Hamiltonian-path factorization of K_2t.
pub fn factorize(t: u32, family: Family) -> Result<HamiltonianPathFactorization> {
    if t < 1 {
        return Err(Error::InvalidParameter("factorization needs t >= 1".into()));
    }
    let m = 2 * t as i64;
    let mut paths = Vec::with_capacity(t as usize);
    let mut center_edges = Vec::with_capacity(t as usize);
    let mut half_paths = Vec::with_capacity(2 * t as usize);
    for i in 1..=t {
        let seq = zigzag(i, t);
        debug_assert_eq!(seq.len(), 2 * t as usize);
        // The center edge x_{i+ceil(t/2)} x_{i+ceil(t/2)+t} is the middle edge
        // of the path; removing it leaves the two t-vertex half-paths.
        let half = (t as i64 + 1) / 2; // ceil(t/2)
        let center = (rep(i as i64 + half, m), rep(i as i64 + half + t as i64, m));
        let mid = t as usize;
        debug_assert!(
            (seq[mid - 1] == center.0 && seq[mid] == center.1)
                || (seq[mid - 1] == center.1 && seq[mid] == center.0)
        );
        let first: Vec<u32> = seq[..mid].to_vec(); // contains leaf x_i at the front
        let mut second: Vec<u32> = seq[mid..].to_vec(); // contains leaf x_{i+t} at the back
        debug_assert_eq!(first[0], i);
        second.reverse(); // leaf first
        debug_assert_eq!(second[0], rep(i as i64 + t as i64, m));
        half_paths.push((i, first));
        half_paths.push((rep(i as i64 + t as i64, m), second));
        paths.push(HamiltonianPath { sequence: seq });
        center_edges.push(center);
    }
    Ok(HamiltonianPathFactorization { t, family, paths, center_edges, half_paths })
}

impl HamiltonianPathFactorization {
    pub fn label(&self, index: u32) -> VertexLabel {
        VertexLabel::new(self.family, index)
    }

    /// The half-path with the given leaf, leaf first.
    pub fn half_path(&self, leaf: u32) -> &[u32] {
        &self
            .half_paths
            .iter()
            .find(|(l, _)| *l == leaf)
            .expect("leaf in 1..=2t")
            .1
    }

    /// Edges of path i with the center edge removed: the union of the two
    /// half-paths' edges.
    pub fn path_edges_without_center(&self, i: usize) -> Vec<(u32, u32)> {
        let center = self.center_edges[i];
        self.paths[i]
            .edges()
            .into_iter()
            .filter(|&(a, b)| (a, b) != center && (b, a) != center)
            .collect()
    }
}
