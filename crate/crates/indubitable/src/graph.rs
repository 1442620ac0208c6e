//! Graph representation, I/O, families, and transforms.
//!
//! Graphs are simple and undirected, stored as a dense symmetric 01 adjacency
//! matrix with integer entries (all downstream algebra is dense, and exact
//! integer arithmetic is needed for the combinatorial route). Vertex labels
//! are 0-based, and every construction fixes an explicit vertex ordering so
//! tests can compare matrices entrywise rather than up to isomorphism. For
//! products the order is row-major: vertex `(i, j)` of `G □ H` is `i·n_H + j`.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use std::collections::VecDeque;
use std::fmt::Write as _;

/// A simple undirected graph on `n ≥ 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: DMatrix<i64>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoints must lie in `[0, n)` and
    /// self-loops are rejected; duplicate and reversed edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Precondition("graph must have at least one vertex".into()));
        }
        let mut adj = DMatrix::zeros(n, n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[(u, v)] = 1;
            adj[(v, u)] = 1;
        }
        Ok(Graph { n, adj })
    }

    /// Wraps an adjacency matrix, validating symmetry, 01 entries, and zero
    /// diagonal.
    pub fn from_adjacency(adj: DMatrix<i64>) -> Result<Graph> {
        let n = adj.nrows();
        if n == 0 || adj.ncols() != n {
            return Err(Error::Precondition(format!(
                "adjacency matrix must be square and nonempty, got {}x{}",
                adj.nrows(),
                adj.ncols()
            )));
        }
        for i in 0..n {
            if adj[(i, i)] != 0 {
                return Err(Error::SelfLoop(i));
            }
            for j in 0..n {
                let a = adj[(i, j)];
                if a != 0 && a != 1 {
                    return Err(Error::Precondition(format!(
                        "adjacency entry ({i},{j}) = {a} is not 0/1"
                    )));
                }
                if a != adj[(j, i)] {
                    return Err(Error::Precondition(format!(
                        "adjacency matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adj(&self) -> &DMatrix<i64> {
        &self.adj
    }

    pub fn adj_f64(&self) -> DMatrix<f64> {
        self.adj.map(|x| x as f64)
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.adj[(u, v)] == 1
    }

    pub fn degree(&self, v: usize) -> i64 {
        self.adj.row(v).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adj[(v, u)] == 1)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[(u, v)] == 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (self.adj.sum() / 2) as usize
    }

    /// Relabels vertices: new vertex `x` is old vertex `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = DMatrix::zeros(self.n, self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                adj[(x, y)] = self.adj[(perm[x], perm[y])];
            }
        }
        Graph { n: self.n, adj }
    }
}

// ============================================================================
// graph6 format
// ============================================================================

const G6_MIN: u8 = 63;
const G6_MAX: u8 = 126;

/// Parses one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 { msg: "empty input".into(), offset: 0 });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(G6_MIN..=G6_MAX).contains(&b) {
            return Err(Error::Graph6 {
                msg: format!("byte {b} outside graph6 range 63..=126"),
                offset: i,
            });
        }
    }
    // Order header: one byte for n <= 62, '~' + 3 bytes for n <= 258047.
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6 {
                msg: "graphs of order >= 258048 are not supported".into(),
                offset: 0,
            });
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6 { msg: "truncated order header".into(), offset: 0 });
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - G6_MIN) as usize;
        }
        (n, 4)
    } else {
        ((bytes[0] - G6_MIN) as usize, 1)
    };
    if n == 0 {
        return Err(Error::Graph6 { msg: "graph of order 0".into(), offset: 0 });
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::Graph6 {
            msg: format!(
                "order {} needs {} payload bytes, found {}",
                n,
                nbytes,
                bytes.len() - pos
            ),
            offset: pos,
        });
    }
    let mut adj = DMatrix::zeros(n, n);
    let mut bit = 0usize;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    let mut cur = 0u8;
    let mut avail = 0usize;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                cur = bytes[pos] - G6_MIN;
                pos += 1;
                avail = 6;
            }
            if cur & (1 << (avail - 1)) != 0 {
                adj[(i, j)] = 1;
                adj[(j, i)] = 1;
            }
            avail -= 1;
            bit += 1;
        }
    }
    debug_assert_eq!(bit, nbits);
    // Padding bits must be zero.
    if avail > 0 && cur & ((1 << avail) - 1) != 0 {
        return Err(Error::Graph6 {
            msg: "nonzero trailing padding bits".into(),
            offset: pos - 1,
        });
    }
    Ok(Graph { n, adj })
}

/// Encodes a graph as a graph6 string (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n;
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + G6_MIN) as char);
    } else {
        assert!(n <= 258047, "graph too large for supported graph6 headers");
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + G6_MIN) as char);
        }
    }
    let mut cur = 0u8;
    let mut used = 0usize;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | (g.adj[(i, j)] as u8);
            used += 1;
            if used == 6 {
                out.push((cur + G6_MIN) as char);
                cur = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        cur <<= 6 - used;
        out.push((cur + G6_MIN) as char);
    }
    out
}

// ============================================================================
// Edge-list format: first line "n m", then m lines "u v"
// ============================================================================

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("empty input".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList(format!("bad header line {header:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList(format!("bad header line {header:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for (k, line) in lines.enumerate() {
        let mut it = line.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeList(format!("bad edge line {}: {line:?}", k + 2)))
        };
        edges.push((parse(it.next())?, parse(it.next())?));
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header declares {} edges, found {}",
            m,
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

// ============================================================================
// Families
// ============================================================================

/// The graph families used by the examples and classifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Complete graph `K_n`.
    Complete { n: usize },
    /// Cycle `C_n`, `n >= 3`.
    Cycle { n: usize },
    /// Complete multipartite graph with the given part sizes; edges join
    /// different parts. Parts are laid out contiguously.
    CompleteMultipartite { parts: Vec<usize> },
    /// Crown graph: the bipartite double of `K_{m+1}` (`2(m+1)` vertices,
    /// `m`-regular bipartite).
    Crown { m: usize },
    /// Grid graph `K_p □ K_q` in row-major product order.
    Grid { p: usize, q: usize },
    /// Cartesian product `C_cycle □ K_order` (the cycle-times-complete
    /// product family).
    CycleByComplete { cycle: usize, order: usize },
}

impl FamilySpec {
    /// Parses specs of the form `complete:5`, `cycle:6`, `multipartite:4,4`,
    /// `crown:4`, `grid:3,4`, `cycle-complete:4,5`.
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Family(format!("expected kind:params, got {s:?}")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Family(format!("bad integer parameter {t:?}")))
            })
            .collect::<Result<_>>()?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Family(format!("{kind} takes {k} parameter(s), got {}", nums.len())))
            }
        };
        match kind {
            "complete" => {
                arity(1)?;
                Ok(FamilySpec::Complete { n: nums[0] })
            }
            "cycle" => {
                arity(1)?;
                Ok(FamilySpec::Cycle { n: nums[0] })
            }
            "multipartite" | "complete-multipartite" => {
                if nums.is_empty() {
                    return Err(Error::Family("multipartite needs at least one part".into()));
                }
                Ok(FamilySpec::CompleteMultipartite { parts: nums })
            }
            "crown" => {
                arity(1)?;
                Ok(FamilySpec::Crown { m: nums[0] })
            }
            "grid" => {
                arity(2)?;
                Ok(FamilySpec::Grid { p: nums[0], q: nums[1] })
            }
            "cycle-complete" => {
                arity(2)?;
                Ok(FamilySpec::CycleByComplete { cycle: nums[0], order: nums[1] })
            }
            other => Err(Error::Family(format!("unknown family kind {other:?}"))),
        }
    }
}

/// Builds the graph described by a family spec. Deterministic and
/// ordering-stable: the same spec always yields the identical matrix.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Complete { n } => {
            if *n == 0 {
                return Err(Error::Family("complete graph needs n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in (u + 1)..*n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(*n, &edges)
        }
        FamilySpec::Cycle { n } => {
            if *n < 3 {
                return Err(Error::Family("cycle length must be >= 3".into()));
            }
            let edges: Vec<_> = (0..*n).map(|u| (u, (u + 1) % n)).collect();
            Graph::from_edges(*n, &edges)
        }
        FamilySpec::CompleteMultipartite { parts } => {
            if parts.contains(&0) {
                return Err(Error::Family("all part sizes must be >= 1".into()));
            }
            let n: usize = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(i, p));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Crown { m } => {
            if *m == 0 {
                return Err(Error::Family("crown parameter must be >= 1".into()));
            }
            let k = generate(&FamilySpec::Complete { n: m + 1 })?;
            Ok(bipartite_double(&k))
        }
        FamilySpec::Grid { p, q } => {
            if *p == 0 || *q == 0 {
                return Err(Error::Family("grid factors must be >= 1".into()));
            }
            let kp = generate(&FamilySpec::Complete { n: *p })?;
            let kq = generate(&FamilySpec::Complete { n: *q })?;
            Ok(cartesian_product(&kp, &kq))
        }
        FamilySpec::CycleByComplete { cycle, order } => {
            let c = generate(&FamilySpec::Cycle { n: *cycle })?;
            let k = generate(&FamilySpec::Complete { n: *order })?;
            Ok(cartesian_product(&c, &k))
        }
    }
}

// ============================================================================
// Transforms
// ============================================================================

/// Cartesian product `G □ H` with adjacency `A ⊗ I + I ⊗ B`; vertex `(i, j)`
/// maps to `i·n_H + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let a = g.adj().kronecker(&DMatrix::<i64>::identity(h.n(), h.n()));
    let b = DMatrix::<i64>::identity(g.n(), g.n()).kronecker(h.adj());
    Graph { n: g.n() * h.n(), adj: a + b }
}

/// Bipartite double with adjacency `(J₂ − I₂) ⊗ A`; copy 0 occupies the
/// first block of vertices.
pub fn bipartite_double(g: &Graph) -> Graph {
    let l2 = DMatrix::from_row_slice(2, 2, &[0i64, 1, 1, 0]);
    Graph { n: 2 * g.n(), adj: l2.kronecker(g.adj()) }
}

/// Complement `J − I − A`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut adj = DMatrix::from_element(n, n, 1i64) - DMatrix::<i64>::identity(n, n) - g.adj();
    // entries already 0/1
    adj.iter_mut().for_each(|x| debug_assert!(*x == 0 || *x == 1));
    Graph { n, adj }
}

// ============================================================================
// Basic structure
// ============================================================================

/// Connectivity, regularity, and bipartiteness, computed by BFS / 2-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicProfile {
    pub connected: bool,
    /// Present iff all degrees agree.
    pub regular_degree: Option<i64>,
    /// Present iff the graph is connected and bipartite; both cells sorted.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

pub fn basic_profile(g: &Graph) -> BasicProfile {
    let n = g.n();
    let degrees: Vec<i64> = (0..n).map(|v| g.degree(v)).collect();
    let regular_degree = if degrees.windows(2).all(|w| w[0] == w[1]) {
        Some(degrees[0])
    } else {
        None
    };

    // BFS with 2-coloring from vertex 0.
    let mut color = vec![-1i8; n];
    let mut queue = VecDeque::new();
    color[0] = 0;
    queue.push_back(0);
    let mut seen = 1usize;
    let mut bipartite = true;
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if color[v] < 0 {
                color[v] = 1 - color[u];
                seen += 1;
                queue.push_back(v);
            } else if color[v] == color[u] {
                bipartite = false;
            }
        }
    }
    let connected = seen == n;
    let bipartition = if connected && bipartite {
        let cell0: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
        let cell1: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
        Some((cell0, cell1))
    } else {
        None
    };
    BasicProfile { connected, regular_degree, bipartition }
}

pub fn is_connected(g: &Graph) -> bool {
    basic_profile(g).connected
}

/// All-pairs BFS distances; `usize::MAX` would indicate unreachable, but the
/// graph is required to be connected.
pub fn distance_table(g: &Graph) -> Result<DMatrix<i64>> {
    let n = g.n();
    let mut dist = DMatrix::from_element(n, n, -1i64);
    for s in 0..n {
        dist[(s, s)] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[(s, v)] < 0 {
                    dist[(s, v)] = dist[(s, u)] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    if dist.iter().any(|&d| d < 0) {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

/// Distance matrices `A₀ = I, A₁, ..., A_d` with `Σ Aᵢ = J` and `d` the
/// diameter. Requires a connected graph.
pub fn distance_matrices(g: &Graph) -> Result<Vec<DMatrix<i64>>> {
    let n = g.n();
    let dist = distance_table(g)?;
    let d = *dist.iter().max().unwrap() as usize;
    let mut mats = vec![DMatrix::<i64>::zeros(n, n); d + 1];
    for i in 0..n {
        for j in 0..n {
            mats[dist[(i, j)] as usize][(i, j)] = 1;
        }
    }
    Ok(mats)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        generate(&FamilySpec::Complete { n }).unwrap()
    }

    fn c(n: usize) -> Graph {
        generate(&FamilySpec::Cycle { n }).unwrap()
    }

    #[test]
    fn build_graph_examples() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, k(3));
        let empty = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, c(4));
        // duplicates and reversals collapse
        let dup = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn build_graph_rejections() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { v: 3, n: 3 })
        ));
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn graph6_k2() {
        // "A_" decodes to K2 per the format definition.
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g, k(2));
        assert_eq!(write_graph6(&g), "A_");
    }

    #[test]
    fn graph6_round_trip_examples() {
        let s = "D?{";
        let g = parse_graph6(s).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(write_graph6(&g), s);
    }

    #[test]
    fn graph6_malformed() {
        // claims 5 vertices but too few payload bytes
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6 { .. })));
        // nonzero padding bits: K2 payload with a stray low bit
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("A\x1f"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn graph6_long_header() {
        let g = c(100);
        let s = write_graph6(&g);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn family_k44() {
        let g = generate(&FamilySpec::CompleteMultipartite { parts: vec![4, 4] }).unwrap();
        assert_eq!(g.n(), 8);
        assert!((0..8).all(|v| g.degree(v) == 4));
        assert!(!g.is_edge(0, 1) && g.is_edge(0, 4));
    }

    #[test]
    fn family_crown4() {
        let g = generate(&FamilySpec::Crown { m: 4 }).unwrap();
        assert_eq!(g.n(), 10);
        assert!((0..10).all(|v| g.degree(v) == 4));
        assert!(basic_profile(&g).bipartition.is_some());
    }

    #[test]
    fn family_grid34() {
        let g = generate(&FamilySpec::Grid { p: 3, q: 4 }).unwrap();
        assert_eq!(g.n(), 12);
        assert!((0..12).all(|v| g.degree(v) == 5));
    }

    #[test]
    fn family_invalid_params() {
        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&FamilySpec::CompleteMultipartite { parts: vec![2, 0] }).is_err());
    }

    #[test]
    fn family_spec_parsing() {
        assert_eq!(FamilySpec::parse("grid:3,4").unwrap(), FamilySpec::Grid { p: 3, q: 4 });
        assert_eq!(
            FamilySpec::parse("cycle-complete:4,5").unwrap(),
            FamilySpec::CycleByComplete { cycle: 4, order: 5 }
        );
        assert!(FamilySpec::parse("torus:3").is_err());
        assert!(FamilySpec::parse("grid:3").is_err());
    }

    #[test]
    fn cartesian_k2_k2_is_c4() {
        let g = cartesian_product(&k(2), &k(2));
        // 4-cycle 0-1-3-2-0 in product order
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(!g.is_edge(0, 3) && !g.is_edge(1, 2));
    }

    #[test]
    fn cartesian_identity_factor() {
        let g = c(5);
        assert_eq!(cartesian_product(&k(1), &g), g);
    }

    #[test]
    fn cartesian_swap_relabels() {
        let g = c(4);
        let h = k(3);
        let gh = cartesian_product(&g, &h);
        let hg = cartesian_product(&h, &g);
        // gh vertex (i,j) corresponds to hg vertex (j,i)
        let perm: Vec<usize> = (0..12).map(|x| (x % 3) * 4 + x / 3).collect();
        assert_eq!(hg.permuted(&perm), gh);
    }

    #[test]
    fn bipartite_double_k2_is_perfect_matching() {
        // (J2 - I2) ⊗ A(K2) has exactly the edges {0,3} and {1,2}.
        let g = bipartite_double(&k(2));
        assert_eq!(g, Graph::from_edges(4, &[(0, 3), (1, 2)]).unwrap());
        assert!(!is_connected(&g));
    }

    #[test]
    fn bipartite_double_k3_is_c6() {
        let g = bipartite_double(&k(3));
        // BD(K3) is the 6-cycle 0-4-2-3-1-5-0.
        assert_eq!(g, c(6).permuted(&[0, 4, 2, 3, 1, 5]));
    }

    #[test]
    fn bipartite_double_k5_is_crown4() {
        assert_eq!(bipartite_double(&k(5)), generate(&FamilySpec::Crown { m: 4 }).unwrap());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&k(4)).edge_count(), 0);
        // C5 is self-complementary: 0-2-4-1-3-0
        let c5c = complement(&c(5));
        assert_eq!(c5c.permuted(&[0, 2, 4, 1, 3]), c(5));
        assert_eq!(complement(&complement(&c(6))), c(6));
    }

    #[test]
    fn complement_of_grid_2_5_is_crown4() {
        let g = complement(&generate(&FamilySpec::Grid { p: 2, q: 5 }).unwrap());
        let crown = generate(&FamilySpec::Crown { m: 4 }).unwrap();
        assert_eq!(g, crown);
    }

    #[test]
    fn profile_examples() {
        let k44 = generate(&FamilySpec::CompleteMultipartite { parts: vec![4, 4] }).unwrap();
        let p = basic_profile(&k44);
        assert!(p.connected);
        assert_eq!(p.regular_degree, Some(4));
        let (a, b) = p.bipartition.unwrap();
        assert_eq!((a.len(), b.len()), (4, 4));

        // two disjoint triangles
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let p = basic_profile(&g);
        assert!(!p.connected);
        assert_eq!(p.regular_degree, Some(2));
        assert!(p.bipartition.is_none());

        let p = basic_profile(&c(5));
        assert!(p.connected && p.bipartition.is_none());
        assert_eq!(p.regular_degree, Some(2));
    }

    #[test]
    fn distance_matrices_examples() {
        let mats = distance_matrices(&k(4)).unwrap();
        assert_eq!(mats.len(), 2);
        assert_eq!(mats[0], DMatrix::identity(4, 4));
        assert_eq!(&mats[0] + &mats[1], DMatrix::from_element(4, 4, 1));

        assert_eq!(distance_matrices(&c(6)).unwrap().len(), 4);
        let crown = generate(&FamilySpec::Crown { m: 4 }).unwrap();
        assert_eq!(distance_matrices(&crown).unwrap().len(), 4);

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(distance_matrices(&two), Err(Error::Disconnected)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = generate(&FamilySpec::Grid { p: 3, q: 4 }).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("3\n0 1\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
    }
}
