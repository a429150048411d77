//! Brute-force genus distributions by enumerating every rotation system.
//!
//! Edge `e` owns darts `2e` (at its first endpoint) and `2e + 1` (at its
//! second), so the twin of dart `d` is `d ^ 1`. A rotation system is stored
//! as a successor map on darts; faces are the orbits of `d -> succ(d ^ 1)`.

use std::collections::VecDeque;

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::graphfam::{GraphFamily, NamedFamily};
use crate::seqcore::GenusDistribution;

/// Default cap on the number of rotation systems visited.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has no vertices")]
    NoVertices,
    #[error("edge {edge} references vertex {vertex}, but there are only {vertices} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertices: usize,
    },
    #[error("graph is not connected")]
    Disconnected,
    #[error("{needed} rotation systems exceed the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("Euler characteristic gave a non-integer genus (V={v}, E={e}, F={f})")]
    NonIntegerGenus { v: usize, e: usize, f: usize },
    #[error("{family}_{n} needs n >= {min}")]
    OutOfRange {
        family: GraphFamily,
        n: u32,
        min: u32,
    },
    #[error("no edge-list builder for {0}")]
    Unsupported(GraphFamily),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Undirected multigraph; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, OracleError> {
        if vertices == 0 {
            return Err(OracleError::NoVertices);
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if let Some(&bad) = [u, v].iter().find(|&&x| x >= vertices) {
                return Err(OracleError::VertexOutOfRange {
                    edge: i,
                    vertex: bad,
                    vertices,
                });
            }
        }
        let g = Multigraph { vertices, edges };
        if !g.is_connected() {
            return Err(OracleError::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn dart_vertex(&self, d: usize) -> usize {
        let (u, v) = self.edges[d / 2];
        if d.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    /// Darts at each vertex, in increasing order. A loop contributes both.
    pub fn darts_at(&self) -> Vec<Vec<usize>> {
        let mut at = vec![Vec::new(); self.vertices];
        for d in 0..2 * self.edges.len() {
            at[self.dart_vertex(d)].push(d);
        }
        at
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.darts_at().iter().map(Vec::len).collect()
    }

    fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertices];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self, OracleError> {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Multigraph::new(self.vertices, edges)
    }

    /// Number of rotation systems, `prod (deg - 1)!`.
    pub fn rotation_count(&self) -> u128 {
        self.degrees()
            .iter()
            .map(|&d| factorial(d.saturating_sub(1)))
            .fold(1u128, |acc, f| acc.saturating_mul(f))
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).fold(1u128, |acc, i| acc.saturating_mul(i))
}

/// A cyclic order of the darts at every vertex, as a successor map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    succ: Vec<usize>,
}

impl RotationSystem {
    /// Builds a rotation system from one cyclic dart list per vertex.
    pub fn from_cycles(graph: &Multigraph, cycles: &[Vec<usize>]) -> Option<Self> {
        let darts = 2 * graph.edges.len();
        let mut succ = vec![usize::MAX; darts];
        for (v, cyc) in cycles.iter().enumerate() {
            for (i, &d) in cyc.iter().enumerate() {
                if d >= darts || graph.dart_vertex(d) != v || succ[d] != usize::MAX {
                    return None;
                }
                succ[d] = cyc[(i + 1) % cyc.len()];
            }
        }
        succ.iter()
            .all(|&s| s != usize::MAX)
            .then_some(RotationSystem { succ })
    }

    pub fn face_count(&self) -> usize {
        face_count(&self.succ)
    }
}

fn face_count(succ: &[usize]) -> usize {
    let mut seen = vec![false; succ.len()];
    let mut faces = 0;
    for start in 0..succ.len() {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = succ[d ^ 1];
        }
    }
    faces
}

/// All cyclic orders at one vertex, each written as `(dart, successor)`
/// pairs. The smallest dart is the anchor, so each cyclic order appears once.
fn vertex_choices(darts: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&anchor, rest)) = darts.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    let mut perm = rest.to_vec();
    permutations(&mut perm, 0, &mut |p| {
        let cyc: Vec<usize> = std::iter::once(anchor).chain(p.iter().copied()).collect();
        out.push(
            (0..cyc.len())
                .map(|i| (cyc[i], cyc[(i + 1) % cyc.len()]))
                .collect(),
        );
    });
    out
}

fn permutations(items: &mut [usize], k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        emit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, emit);
        items.swap(k, i);
    }
}

/// Genus distribution over all rotation systems of a connected multigraph.
pub fn enumerate_distribution(
    graph: &Multigraph,
    budget: u64,
) -> Result<GenusDistribution, OracleError> {
    let needed = graph.rotation_count();
    if needed > budget as u128 {
        return Err(OracleError::BudgetExceeded { needed, budget });
    }
    let v = graph.vertices;
    let e = graph.edges.len();
    let total = needed as u64;

    // Only vertices with a real choice take part in the odometer.
    let choices: Vec<Vec<Vec<(usize, usize)>>> =
        graph.darts_at().iter().map(|d| vertex_choices(d)).collect();
    let mut base = vec![usize::MAX; 2 * e];
    for opts in choices.iter().filter(|o| o.len() == 1) {
        for &(d, s) in &opts[0] {
            base[d] = s;
        }
    }
    let digits: Vec<&Vec<Vec<(usize, usize)>>> = choices.iter().filter(|o| o.len() > 1).collect();

    let chunk = (total / (rayon::current_num_threads() as u64 * 8)).max(1 << 12);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let max_genus = e / 2 + 1;

    let tallies: Vec<Vec<u64>> = starts
        .par_iter()
        .map(|&start| {
            let end = (start + chunk).min(total);
            let mut succ = base.clone();
            let mut idx = vec![0usize; digits.len()];
            let mut rem = start;
            for (k, opts) in digits.iter().enumerate().rev() {
                idx[k] = (rem % opts.len() as u64) as usize;
                rem /= opts.len() as u64;
            }
            for (k, opts) in digits.iter().enumerate() {
                for &(d, s) in &opts[idx[k]] {
                    succ[d] = s;
                }
            }
            let mut tally = vec![0u64; max_genus + 1];
            for _ in start..end {
                // A lone vertex has no darts but still bounds one face.
                let f = if e == 0 { 1 } else { face_count(&succ) };
                let twice = 2 + e as i64 - v as i64 - f as i64;
                if twice < 0 || twice % 2 != 0 {
                    // Connectedness rules this out; report it rather than miscount.
                    return Err(OracleError::NonIntegerGenus { v, e, f });
                }
                tally[(twice / 2) as usize] += 1;
                // Advance the odometer, least significant digit last.
                for k in (0..digits.len()).rev() {
                    idx[k] += 1;
                    let wrapped = idx[k] == digits[k].len();
                    if wrapped {
                        idx[k] = 0;
                    }
                    for &(d, s) in &digits[k][idx[k]] {
                        succ[d] = s;
                    }
                    if !wrapped {
                        break;
                    }
                }
            }
            Ok(tally)
        })
        .collect::<Result<_, _>>()?;

    let mut merged = vec![0u64; max_genus + 1];
    for t in &tallies {
        for (m, x) in merged.iter_mut().zip(t) {
            *m += x;
        }
    }
    let counts = merged.into_iter().map(BigUint::from).collect();
    Ok(GenusDistribution::from_dense(counts).expect("at least one rotation system"))
}

/// Edge list for a named family, with vertex numbering
/// `x_i = i`, `y_i = n + i` for `0 <= i < n`.
pub fn build_named_graph(fam: NamedFamily) -> Result<Multigraph, OracleError> {
    // Below three rungs the prism and Moebius ladder degenerate into loops
    // and parallel rails.
    if matches!(fam.family, GraphFamily::CL | GraphFamily::ML) && fam.n < 3 {
        return Err(OracleError::OutOfRange {
            family: fam.family,
            n: fam.n,
            min: 3,
        });
    }
    let n = fam.n as usize;
    let x = |i: usize| i;
    let y = |i: usize| n + i;
    let rungs = (0..n).map(|i| (x(i), y(i)));
    let rails = (0..n - 1).flat_map(|i| [(x(i), x(i + 1)), (y(i), y(i + 1))]);
    let mut edges: Vec<(usize, usize)> = rungs.chain(rails).collect();
    let vertices = match fam.family {
        GraphFamily::L => {
            edges.extend([(x(0), y(0)), (x(n - 1), y(n - 1))]);
            2 * n
        }
        GraphFamily::CL => {
            edges.extend([(x(n - 1), x(0)), (y(n - 1), y(0))]);
            2 * n
        }
        GraphFamily::ML => {
            edges.extend([(x(n - 1), y(0)), (y(n - 1), x(0))]);
            2 * n
        }
        GraphFamily::RL => {
            let (s, t) = (2 * n, 2 * n + 1);
            edges.extend([(x(0), s), (s, y(0)), (x(n - 1), t), (t, y(n - 1)), (s, t)]);
            2 * n + 2
        }
        GraphFamily::R => return Err(OracleError::Unsupported(GraphFamily::R)),
    };
    Multigraph::new(vertices, edges)
}

/// Parses `u v` pairs, one edge per line. `#` starts a comment. The vertex
/// count is one more than the largest label seen.
pub fn parse_edge_list(text: &str) -> Result<Multigraph, OracleError> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| OracleError::Parse { line: i + 1, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!(
                "expected two vertex labels, found {}",
                fields.len()
            )));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| err(format!("bad vertex label {s:?}: {e}")))
        };
        edges.push((parse(fields[0])?, parse(fields[1])?));
    }
    let vertices = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
    Multigraph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(offset: usize, counts: &[u64]) -> GenusDistribution {
        GenusDistribution::from_u64s(offset, counts).unwrap()
    }

    fn k4() -> Multigraph {
        Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn face_counts() {
        // a single loop on one vertex: two cyclic orders collapse to one
        let g = Multigraph::new(1, vec![(0, 0)]).unwrap();
        let r = RotationSystem::from_cycles(&g, &[vec![0, 1]]).unwrap();
        assert_eq!(r.face_count(), 2);

        // theta graph, planar rotation vs. the toroidal one
        let g = Multigraph::new(2, vec![(0, 1); 3]).unwrap();
        let planar = RotationSystem::from_cycles(&g, &[vec![0, 2, 4], vec![5, 3, 1]]).unwrap();
        let torus = RotationSystem::from_cycles(&g, &[vec![0, 2, 4], vec![1, 3, 5]]).unwrap();
        assert_eq!(planar.face_count(), 3);
        assert_eq!(torus.face_count(), 1);

        assert!(RotationSystem::from_cycles(&g, &[vec![0, 2], vec![1, 3, 5]]).is_none());
    }

    #[test]
    fn small_graphs() {
        let single = Multigraph::new(1, vec![]).unwrap();
        assert_eq!(enumerate_distribution(&single, 1).unwrap(), dist(0, &[1]));
        let bouquet = Multigraph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        assert_eq!(
            enumerate_distribution(&bouquet, 100).unwrap(),
            dist(0, &[4, 2])
        );
        assert_eq!(
            enumerate_distribution(&k4(), 100).unwrap(),
            dist(0, &[2, 14])
        );
    }

    #[test]
    fn named_censuses() {
        let run = |f: GraphFamily, n: u32| {
            let g = build_named_graph(NamedFamily::new(f, n).unwrap()).unwrap();
            enumerate_distribution(&g, DEFAULT_BUDGET).unwrap()
        };
        assert_eq!(run(GraphFamily::RL, 1), dist(0, &[2, 14]));
        assert_eq!(run(GraphFamily::L, 4), dist(0, &[16, 112, 128]));
        assert_eq!(run(GraphFamily::CL, 4), dist(0, &[2, 54, 200]));
        assert_eq!(run(GraphFamily::ML, 4), dist(1, &[56, 200]));
        assert_eq!(run(GraphFamily::RL, 3), dist(0, &[2, 70, 184]));
        assert!(matches!(
            build_named_graph(NamedFamily::new(GraphFamily::CL, 2).unwrap()),
            Err(OracleError::OutOfRange { min: 3, .. })
        ));
        assert!(matches!(
            build_named_graph(NamedFamily::new(GraphFamily::R, 2).unwrap()),
            Err(OracleError::Unsupported(_))
        ));
    }

    #[test]
    fn totals_match_rotation_count() {
        let g = build_named_graph(NamedFamily::new(GraphFamily::CL, 5).unwrap()).unwrap();
        let d = enumerate_distribution(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(d.total(), BigUint::from(g.rotation_count()));
    }

    #[test]
    fn budget_is_enforced() {
        match enumerate_distribution(&k4(), 15) {
            Err(OracleError::BudgetExceeded {
                needed: 16,
                budget: 15,
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_graphs() {
        assert_eq!(Multigraph::new(0, vec![]), Err(OracleError::NoVertices));
        assert_eq!(
            Multigraph::new(3, vec![(0, 1)]),
            Err(OracleError::Disconnected)
        );
        assert!(matches!(
            Multigraph::new(2, vec![(0, 2)]),
            Err(OracleError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("# K4\n0 1\n0 2\n0 3  # spoke\n\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!(g, k4());
        match parse_edge_list("0 1\n0 x\n") {
            Err(OracleError::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("0 1 2\n"),
            Err(OracleError::Parse { line: 1, .. })
        ));
    }
}
