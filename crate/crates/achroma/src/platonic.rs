//! The five Platonic graphs as fixtures, their exact achromatic and
//! pseudoachromatic values, and stored witness colorings.

use serde::Deserialize;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exec::{map_indexed, Mode};
use crate::graph::{is_complete, is_proper, Coloring, Graph, VertexLabel};
use crate::solver::{solve, Parameter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlatonicName {
    Tetrahedral,
    Cubical,
    Octahedral,
    Dodecahedral,
    Icosahedral,
}

pub const ALL_PLATONIC: [PlatonicName; 5] = [
    PlatonicName::Tetrahedral,
    PlatonicName::Cubical,
    PlatonicName::Octahedral,
    PlatonicName::Dodecahedral,
    PlatonicName::Icosahedral,
];

impl PlatonicName {
    pub fn name(self) -> &'static str {
        match self {
            PlatonicName::Tetrahedral => "tetrahedral",
            PlatonicName::Cubical => "cubical",
            PlatonicName::Octahedral => "octahedral",
            PlatonicName::Dodecahedral => "dodecahedral",
            PlatonicName::Icosahedral => "icosahedral",
        }
    }

    pub fn parse(s: &str) -> Result<PlatonicName> {
        ALL_PLATONIC
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown Platonic graph {s:?}")))
    }
}

/// One fixture row: the graph, its parameters, the expected exact values and
/// the stored witness colorings.
#[derive(Debug, Clone)]
pub struct PlatonicEntry {
    pub name: PlatonicName,
    pub graph: Graph,
    pub n: usize,
    pub r: usize,
    pub expected_psi: u32,
    pub expected_psi_s: u32,
    /// How the matching upper bound k0 is obtained.
    pub upper_bound_argument: &'static str,
    pub psi_witness: Coloring,
    pub psi_s_witness: Coloring,
}

/// A table row after running the solver against the expectations.
#[derive(Debug, Clone)]
pub struct PlatonicRow {
    pub entry: PlatonicEntry,
    pub solved_psi: u32,
    pub solved_psi_s: u32,
    pub explored: u64,
}

impl PlatonicRow {
    pub fn matches(&self) -> bool {
        self.solved_psi == self.entry.expected_psi
            && self.solved_psi_s == self.entry.expected_psi_s
    }
}

fn plain(n: usize) -> Vec<VertexLabel> {
    (0..n as u32).map(VertexLabel::plain).collect()
}

pub fn platonic_graph(name: PlatonicName) -> Graph {
    match name {
        PlatonicName::Tetrahedral => Graph::complete(4),
        PlatonicName::Cubical => {
            let edges: Vec<(usize, usize)> = (0..8usize)
                .flat_map(|a| (0..3).map(move |b| (a, a ^ (1 << b))))
                .filter(|&(a, b)| a < b)
                .collect();
            Graph::from_ordinals(plain(8), &edges).expect("cube is simple")
        }
        PlatonicName::Octahedral => {
            let mut edges = Vec::new();
            for a in 0..6 {
                for b in a + 1..6 {
                    if b != a + 3 {
                        edges.push((a, b));
                    }
                }
            }
            Graph::from_ordinals(plain(6), &edges).expect("octahedron is simple")
        }
        PlatonicName::Dodecahedral => {
            // Layers of five: outer cycle a, spokes a-b, the alternating
            // 10-cycle b/c, spokes c-d, inner cycle d.
            let (a, b, c, d) = (0usize, 5usize, 10usize, 15usize);
            let mut edges = Vec::new();
            for i in 0..5 {
                let j = (i + 1) % 5;
                edges.push((a + i, a + j));
                edges.push((a + i, b + i));
                edges.push((b + i, c + i));
                edges.push((c + i, b + j));
                edges.push((c + i, d + i));
                edges.push((d + i, d + j));
            }
            Graph::from_ordinals(plain(20), &edges).expect("dodecahedron is simple")
        }
        PlatonicName::Icosahedral => {
            // Poles 0 and 11, upper pentagon 1..=5, lower pentagon 6..=10.
            let mut edges = Vec::new();
            for i in 0..5 {
                let j = (i + 1) % 5;
                edges.push((0, 1 + i));
                edges.push((11, 6 + i));
                edges.push((1 + i, 1 + j));
                edges.push((6 + i, 6 + j));
                edges.push((1 + i, 6 + i));
                edges.push((1 + i, 6 + j));
            }
            Graph::from_ordinals(plain(12), &edges).expect("icosahedron is simple")
        }
    }
}

fn expectations(name: PlatonicName) -> (usize, usize, u32, u32, &'static str) {
    match name {
        PlatonicName::Tetrahedral => (4, 3, 4, 4, "k0 = n = 4: the graph is K_4"),
        PlatonicName::Cubical => (8, 3, 4, 4, "k0 = max(r+1, n/2) = 4 by class sizes"),
        PlatonicName::Octahedral => (6, 4, 3, 4, "line graph of K_4"),
        PlatonicName::Dodecahedral => (20, 3, 7, 7, "k0 = max(1+2r, floor(n/3)) = 7 by class sizes"),
        PlatonicName::Icosahedral => (12, 5, 6, 6, "k0 = max(1+r, n/2) = 6 by class sizes"),
    }
}

#[derive(Deserialize)]
struct StoredWitness {
    psi: Vec<u32>,
    psi_s: Vec<u32>,
}

/// Witness colorings recorded once from solver runs; validated, not trusted.
fn stored_witnesses() -> HashMap<String, StoredWitness> {
    serde_json::from_str(include_str!("../data/platonic_witnesses.json"))
        .expect("witness data file parses")
}

/// Builds the fixture entry for one Platonic graph, validating the stored
/// witnesses against the coloring predicates.
pub fn platonic_entry(name: PlatonicName) -> Result<PlatonicEntry> {
    let graph = platonic_graph(name);
    let (n, r, expected_psi, expected_psi_s, upper_bound_argument) = expectations(name);
    let stored = stored_witnesses();
    let w = stored
        .get(name.name())
        .ok_or_else(|| Error::InvalidParameter(format!("no stored witness for {}", name.name())))?;
    let psi_witness = Coloring::new(w.psi.clone(), expected_psi)?;
    let psi_s_witness = Coloring::new(w.psi_s.clone(), expected_psi_s)?;
    if !is_proper(&graph, &psi_witness)? || !is_complete(&graph, &psi_witness)? {
        return Err(Error::InvalidParameter(format!(
            "stored psi witness for {} is not proper and complete",
            name.name()
        )));
    }
    if !is_complete(&graph, &psi_s_witness)? {
        return Err(Error::InvalidParameter(format!(
            "stored psi_s witness for {} is not complete",
            name.name()
        )));
    }
    Ok(PlatonicEntry {
        name,
        graph,
        n,
        r,
        expected_psi,
        expected_psi_s,
        upper_bound_argument,
        psi_witness,
        psi_s_witness,
    })
}

/// Solves every entry and pairs it with the exact values. All ten values
/// must match the expectations; mismatches are reported as errors.
pub fn platonic_table(budget: u64) -> Result<Vec<PlatonicRow>> {
    platonic_table_with(budget, Mode::preferred())
}

pub fn platonic_table_with(budget: u64, mode: Mode) -> Result<Vec<PlatonicRow>> {
    let rows: Vec<Result<PlatonicRow>> = map_indexed(mode, ALL_PLATONIC.len(), |i| {
        let entry = platonic_entry(ALL_PLATONIC[i])?;
        let psi = solve(&entry.graph, Parameter::Achromatic, budget)?;
        let psi_s = solve(&entry.graph, Parameter::Pseudoachromatic, budget)?;
        Ok(PlatonicRow {
            entry,
            solved_psi: psi.value,
            solved_psi_s: psi_s.value,
            explored: psi.explored + psi_s.explored,
        })
    });
    rows.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, Girth};
    use crate::verify::is_planar;

    #[test]
    fn fixture_shapes() {
        for name in ALL_PLATONIC {
            let g = platonic_graph(name);
            let (n, r, ..) = expectations(name);
            assert_eq!(g.n(), n, "{}", name.name());
            assert_eq!(g.m(), n * r / 2, "{}", name.name());
            assert!((0..g.n()).all(|v| g.degree(v) == r), "{} regular", name.name());
            assert!(is_planar(&g), "{} planar", name.name());
        }
        assert_eq!(girth(&platonic_graph(PlatonicName::Dodecahedral)), Girth::Finite(5));
        assert_eq!(girth(&platonic_graph(PlatonicName::Cubical)), Girth::Finite(4));
        assert_eq!(girth(&platonic_graph(PlatonicName::Icosahedral)), Girth::Finite(3));
    }

    #[test]
    fn stored_witnesses_validate() {
        for name in ALL_PLATONIC {
            platonic_entry(name).unwrap();
        }
    }

    #[test]
    fn octahedral_psi_s_witness_is_improper() {
        let entry = platonic_entry(PlatonicName::Octahedral).unwrap();
        assert_eq!(entry.psi_s_witness.k(), 4);
        assert!(!is_proper(&entry.graph, &entry.psi_s_witness).unwrap());
    }
}
