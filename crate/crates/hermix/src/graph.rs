//! Undirected simple graphs: construction, generators, graph6 text I/O,
//! canonical forms and automorphism groups for small orders.

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`, sorted
/// lexicographically; the edge list order is the canonical edge order used
/// throughout the crate (mixed-graph states are aligned to it).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may come in any order and
    /// orientation; loops and duplicates are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut sorted: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            sorted.push((a.min(b), a.max(b)));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &sorted {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self { n, edges: sorted, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.binary_search(&(a, b)).is_ok()
    }

    /// Index of edge `(u, v)` in [`edges`](Self::edges), if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.binary_search(&(a, b)).ok()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.max_degree();
        self.adj.iter().all(|a| a.len() == d)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![-1i8; self.n];
        for s in 0..self.n {
            if color[s] >= 0 {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if color[v] < 0 {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Common neighbors of `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

/// K_n: all pairs joined.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("complete graph edges are valid")
}

/// C_n for n >= 3.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::UnsupportedOrder(n, "n >= 3 for a cycle"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, edges).expect("bipartite edges are valid")
}

/// Prism over C_m: two m-cycles `0..m` and `m..2m` joined by the matching
/// `i -- m+i`. `prism(3)` is the triangular prism.
pub fn prism(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::UnsupportedOrder(m, "m >= 3 for a prism"));
    }
    let mut edges = Vec::with_capacity(3 * m);
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((m + i, m + (i + 1) % m));
        edges.push((i, m + i));
    }
    Graph::new(2 * m, edges)
}

/// Hypercube Q_k on `2^k` vertices: `v` is adjacent to `v ^ (1 << j)` for
/// every bit position `j < k`.
///
/// Vertices carry 0-indexed binary labels. Under the 1-indexed labeling that
/// splits V1 = {1..2^(k-1)} from V2 = {2^(k-1)+1..2^k}, vertex `t` maps to
/// label `t - 1` here and membership in V2 is bit `k-1` of the label.
pub fn hypercube(k: u32) -> Result<Graph> {
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    if k > 20 {
        return Err(Error::DimensionTooLarge(k, 20));
    }
    let n = 1usize << k;
    let mut edges = Vec::with_capacity(k as usize * n / 2);
    for v in 0..n {
        for j in 0..k {
            let w = v ^ (1usize << j);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::new(n, edges)
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Decodes the graph6 short form (printable bytes 63..=126, n <= 62).
///
/// Adjacency bits are the upper triangle in column order (x(0,1), x(0,2),
/// x(1,2), x(0,3), ...), packed six per byte, each chunk offset by 63.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let header = *text.first().ok_or(Error::Graph6Empty)?;
    if header == 126 {
        return Err(Error::Graph6LongForm);
    }
    if !(63..=126).contains(&header) {
        return Err(Error::Graph6InvalidByte { byte: header, offset: 0 });
    }
    let n = (header - 63) as usize;
    let needed = n * n.saturating_sub(1) / 2;
    let mut bits = Vec::with_capacity(needed + 5);
    for (off, &byte) in text.iter().enumerate().skip(1) {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6InvalidByte { byte, offset: off });
        }
        let chunk = byte - 63;
        for shift in (0..6).rev() {
            bits.push(chunk >> shift & 1 == 1);
        }
    }
    if bits.len() < needed {
        return Err(Error::Graph6Truncated { needed, got: bits.len() });
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes the graph6 short form; inverse of [`parse_graph6`] for n <= 62.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits: Vec<bool> = Vec::with_capacity(n * n / 2 + 5);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for &b in chunk {
            val = val << 1 | b as u8;
        }
        out.push((val + 63) as char);
    }
    Ok(out)
}

/// Parses a graph6 corpus: one graph per line, blank lines skipped.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim().as_bytes()))
        .collect()
}

/// Resolves a named graph (K<n>, C<n>, Q<k>, K33 or prism), falling back
/// to graph6 decoding.
pub fn named_or_graph6(name: &str) -> Result<Graph> {
    if name == "K33" {
        return Ok(complete_bipartite(3, 3));
    }
    if name == "prism" {
        return prism(3);
    }
    if let Some(n) = name.strip_prefix('K').and_then(|r| r.parse::<usize>().ok()) {
        return Ok(complete_graph(n));
    }
    if let Some(k) = name.strip_prefix('Q').and_then(|r| r.parse::<u32>().ok()) {
        return hypercube(k);
    }
    if let Some(n) = name.strip_prefix('C').and_then(|r| r.parse::<usize>().ok()) {
        return cycle_graph(n);
    }
    parse_graph6(name.as_bytes())
}

// ---------------------------------------------------------------------------
// Canonical form, isomorphism, automorphisms
// ---------------------------------------------------------------------------

/// Minimum adjacency bit string over all vertex permutations, in the same
/// column order as graph6. Equal canonical forms <=> isomorphic graphs.
///
/// Branch-and-bound on the growing bit prefix; practical for n <= 12 or so.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut best: Option<Vec<bool>> = None;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut prefix: Vec<bool> = Vec::with_capacity(n * n / 2);
    extend_min(g, &mut perm, &mut used, &mut prefix, &mut best);
    best.unwrap_or_default()
}

fn extend_min(
    g: &Graph,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    prefix: &mut Vec<bool>,
    best: &mut Option<Vec<bool>>,
) {
    let n = g.vertex_count();
    if perm.len() == n {
        if best.as_ref().is_none_or(|b| prefix[..] < b[..]) {
            *best = Some(prefix.clone());
        }
        return;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        let col_start = prefix.len();
        for &p in perm.iter() {
            prefix.push(g.has_edge(p, v));
        }
        // lexicographic pruning against the best known full string
        let keep = match best {
            Some(b) => {
                use std::cmp::Ordering;
                match prefix[..].cmp(&b[..prefix.len()]) {
                    Ordering::Less => true,
                    Ordering::Equal => true,
                    Ordering::Greater => false,
                }
            }
            None => true,
        };
        if keep {
            used[v] = true;
            perm.push(v);
            extend_min(g, perm, used, prefix, best);
            perm.pop();
            used[v] = false;
        }
        prefix.truncate(col_start);
    }
}

/// True iff the two graphs are isomorphic (by canonical form; small n only).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

/// The full automorphism group of a small graph.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    perms: Vec<Vec<usize>>,
}

impl AutomorphismGroup {
    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Identity-only group, for graphs treated as rigid.
    pub fn trivial(n: usize) -> Self {
        Self { perms: vec![(0..n).collect()] }
    }
}

pub const AUTOMORPHISM_MAX_VERTICES: usize = 10;

/// All edge-preserving vertex permutations, found by backtracking with
/// adjacency-consistency pruning. Restricted to n <= 10.
pub fn automorphisms(g: &Graph) -> Result<AutomorphismGroup> {
    let n = g.vertex_count();
    if n > AUTOMORPHISM_MAX_VERTICES {
        return Err(Error::UnsupportedOrder(n, "n <= 10 for automorphism search"));
    }
    let mut perms = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend_aut(g, &mut perm, &mut used, &mut perms);
    Ok(AutomorphismGroup { perms })
}

fn extend_aut(g: &Graph, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let u = perm.len();
    if u == n {
        out.push(perm.clone());
        return;
    }
    'cand: for v in 0..n {
        if used[v] || g.degree(v) != g.degree(u) {
            continue;
        }
        for (w, &pw) in perm.iter().enumerate() {
            if g.has_edge(w, u) != g.has_edge(pw, v) {
                continue 'cand;
            }
        }
        used[v] = true;
        perm.push(v);
        extend_aut(g, perm, used, out);
        perm.pop();
        used[v] = false;
    }
}

// ---------------------------------------------------------------------------
// Connected cubic graphs
// ---------------------------------------------------------------------------

/// One representative per isomorphism class of connected 3-regular graphs on
/// `n` vertices, for n in {4, 6, 8, 10}, sorted by canonical form.
///
/// Backtracking completes the lowest degree-deficient vertex first; among
/// still-isolated vertices only the smallest may be attached, which keeps the
/// leaf count tiny. Leaves are deduplicated by canonical form.
pub fn connected_cubic_graphs(n: usize) -> Result<Vec<Graph>> {
    if !matches!(n, 4 | 6 | 8 | 10) {
        return Err(Error::UnsupportedOrder(n, "{4, 6, 8, 10}"));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut found: Vec<(Vec<bool>, Graph)> = Vec::new();
    grow_cubic(n, &mut adj, &mut found);
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    Ok(found.into_iter().map(|(_, g)| g).collect())
}

fn grow_cubic(n: usize, adj: &mut Vec<Vec<usize>>, out: &mut Vec<(Vec<bool>, Graph)>) {
    let Some(u) = (0..n).find(|&v| adj[v].len() < 3) else {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        let g = Graph::new(n, edges).expect("generator produces simple edges");
        if g.is_connected() {
            out.push((canonical_form(&g), g));
        }
        return;
    };
    let last = adj[u].iter().copied().filter(|&w| w > u).max().unwrap_or(u);
    let first_isolated = (0..n).find(|&w| adj[w].is_empty() && w != u);
    for v in last + 1..n {
        if adj[v].len() >= 3 || adj[u].contains(&v) {
            continue;
        }
        if adj[v].is_empty() && Some(v) != first_isolated {
            continue;
        }
        adj[u].push(v);
        adj[v].push(u);
        grow_cubic(n, adj, out);
        adj[u].pop();
        adj[v].pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_examples() {
        let k4 = complete_graph(4);
        assert_eq!(k4.edge_count(), 6);
        assert!((0..4).all(|v| k4.degree(v) == 3));
        assert_eq!(complete_graph(1).edge_count(), 0);
        assert_eq!(complete_graph(2).edge_count(), 1);
    }

    #[test]
    fn hypercube_examples() {
        let q1 = hypercube(1).unwrap();
        assert_eq!((q1.vertex_count(), q1.edge_count()), (2, 1));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.vertex_count(), q4.edge_count()), (16, 32));
        assert!(matches!(hypercube(0), Err(Error::ZeroDimension)));
    }

    #[test]
    fn hypercube_regular_bipartite_up_to_10() {
        for k in 1..=10 {
            let q = hypercube(k).unwrap();
            assert!(q.is_regular());
            assert_eq!(q.max_degree(), k as usize);
            assert!(q.is_bipartite());
        }
    }

    #[test]
    fn hypercube_common_neighbors_zero_or_two() {
        for k in 1..=6 {
            let q = hypercube(k).unwrap();
            let n = q.vertex_count();
            for u in 0..n {
                for v in u + 1..n {
                    let c = q.common_neighbors(u, v).len();
                    assert!(c == 0 || c == 2, "Q{k}: pair ({u},{v}) has {c} common");
                }
            }
        }
    }

    #[test]
    fn graph_validation() {
        assert!(matches!(Graph::new(3, [(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(
            Graph::new(3, [(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 3 })
        ));
    }

    #[test]
    fn parse_graph6_k4() {
        let g = parse_graph6(b"C~").unwrap();
        assert!(isomorphic(&g, &complete_graph(4)));
        assert_eq!(g.edge_count(), 6);
    }

    // Hand decoding per the graph6 definition: 'A' -> n=2, '_' = 95 - 63 =
    // 0b100000 -> the single upper-triangle bit x(0,1) is set, so "A_" is K2
    // and the 2-vertex empty graph is "A?".
    #[test]
    fn parse_graph6_two_vertices() {
        let k2 = parse_graph6(b"A_").unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));
        let empty = parse_graph6(b"A?").unwrap();
        assert_eq!((empty.vertex_count(), empty.edge_count()), (2, 0));
    }

    #[test]
    fn parse_graph6_errors() {
        match parse_graph6(&[30, 63]) {
            Err(Error::Graph6InvalidByte { byte: 30, offset: 0 }) => {}
            other => panic!("expected invalid byte error, got {other:?}"),
        }
        match parse_graph6(b"C") {
            Err(Error::Graph6Truncated { needed: 6, got: 0 }) => {}
            other => panic!("expected truncation error, got {other:?}"),
        }
        assert!(matches!(parse_graph6(b"~??"), Err(Error::Graph6LongForm)));
        assert!(matches!(parse_graph6(b""), Err(Error::Graph6Empty)));
        match parse_graph6(b"C\x1f") {
            Err(Error::Graph6InvalidByte { byte: 0x1f, offset: 1 }) => {}
            other => panic!("expected invalid byte at offset 1, got {other:?}"),
        }
    }

    #[test]
    fn emit_graph6_examples() {
        assert_eq!(emit_graph6(&complete_graph(4)).unwrap(), "C~");
        assert_eq!(emit_graph6(&complete_graph(1)).unwrap(), "@");
        let q3 = hypercube(3).unwrap();
        let enc = emit_graph6(&q3).unwrap();
        assert_eq!(parse_graph6(enc.as_bytes()).unwrap(), q3);
    }

    #[test]
    fn graph6_round_trip_generated() {
        let graphs = [
            complete_graph(7),
            cycle_graph(9).unwrap(),
            hypercube(5).unwrap(),
            complete_bipartite(3, 3),
            prism(3).unwrap(),
            Graph::new(1, []).unwrap(),
            Graph::new(0, []).unwrap(),
        ];
        for g in graphs {
            let enc = emit_graph6(&g).unwrap();
            assert_eq!(parse_graph6(enc.as_bytes()).unwrap(), g);
        }
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(automorphisms(&complete_graph(4)).unwrap().order(), 24);
        assert_eq!(automorphisms(&hypercube(3).unwrap()).unwrap().order(), 48);
        assert_eq!(automorphisms(&cycle_graph(4).unwrap()).unwrap().order(), 8);
    }

    #[test]
    fn automorphism_group_axioms() {
        let g = prism(3).unwrap();
        let aut = automorphisms(&g).unwrap();
        let id: Vec<usize> = (0..6).collect();
        assert!(aut.perms().contains(&id));
        for p in aut.perms() {
            let inv: Vec<usize> = {
                let mut inv = vec![0; 6];
                for (i, &pi) in p.iter().enumerate() {
                    inv[pi] = i;
                }
                inv
            };
            assert!(aut.perms().contains(&inv));
            for q in aut.perms() {
                let comp: Vec<usize> = (0..6).map(|i| q[p[i]]).collect();
                assert!(aut.perms().contains(&comp));
            }
        }
    }

    /// Independent oracle: every connected cubic graph on n vertices by full
    /// enumeration of edge subsets (n <= 6 only).
    fn brute_force_cubic_canon(n: usize) -> Vec<Vec<bool>> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        let want = 3 * n / 2;
        let mut canons = Vec::new();
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != want {
                continue;
            }
            let edges: Vec<(usize, usize)> =
                (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::new(n, edges).unwrap();
            if (0..n).all(|v| g.degree(v) == 3) && g.is_connected() {
                canons.push(canonical_form(&g));
            }
        }
        canons.sort();
        canons.dedup();
        canons
    }

    #[test]
    fn cubic_counts_match_brute_force_oracle() {
        for (n, expect) in [(4, 1), (6, 2)] {
            let oracle = brute_force_cubic_canon(n);
            assert_eq!(oracle.len(), expect);
            let gen: Vec<Vec<bool>> =
                connected_cubic_graphs(n).unwrap().iter().map(canonical_form).collect();
            assert_eq!(gen, oracle);
        }
    }

    #[test]
    fn cubic_counts_published() {
        // published counts of connected cubic graphs: 1, 2, 5, 19
        assert_eq!(connected_cubic_graphs(4).unwrap().len(), 1);
        assert_eq!(connected_cubic_graphs(6).unwrap().len(), 2);
        let eight = connected_cubic_graphs(8).unwrap();
        assert_eq!(eight.len(), 5);
        let q3 = hypercube(3).unwrap();
        assert_eq!(eight.iter().filter(|g| isomorphic(g, &q3)).count(), 1);
        assert!(isomorphic(&connected_cubic_graphs(4).unwrap()[0], &complete_graph(4)));
    }

    #[test]
    fn cubic_ten_vertices() {
        assert_eq!(connected_cubic_graphs(10).unwrap().len(), 19);
    }

    #[test]
    fn cubic_rejects_unsupported_order() {
        assert!(connected_cubic_graphs(5).is_err());
        assert!(connected_cubic_graphs(12).is_err());
    }

    #[test]
    fn automorphisms_reject_large_orders() {
        let big = cycle_graph(11).unwrap();
        assert!(matches!(automorphisms(&big), Err(Error::UnsupportedOrder(11, _))));
    }

    #[test]
    fn corpus_parsing() {
        let text = "C~\n\nA_\n@\n";
        let graphs = parse_graph6_corpus(text).unwrap();
        assert_eq!(graphs.len(), 3);
        assert_eq!(graphs[0], complete_graph(4));
        assert_eq!(graphs[2].vertex_count(), 1);
        // the corpus of all cubic graphs round-trips
        let corpus: String = connected_cubic_graphs(8)
            .unwrap()
            .iter()
            .map(|g| emit_graph6(g).unwrap() + "\n")
            .collect();
        assert_eq!(parse_graph6_corpus(&corpus).unwrap().len(), 5);
    }

    #[test]
    fn cubic_pairwise_non_isomorphic() {
        for n in [4, 6, 8] {
            let gs = connected_cubic_graphs(n).unwrap();
            for i in 0..gs.len() {
                for j in i + 1..gs.len() {
                    assert!(!isomorphic(&gs[i], &gs[j]));
                }
            }
        }
    }
}
