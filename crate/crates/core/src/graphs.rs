//! Small graphs and digraphs, isomorphism classes, and the count table for
//! connected graphs of a given order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith_enum::arithmetical_structures_with;
use crate::error::{Error, Result};
use crate::exactmat::IntMatrix;
use crate::poly_enum::Engine;

/// Vertices are `0..n`. Undirected edges are unordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub directed: bool,
    /// One positive weight per edge; all ones when absent.
    pub weights: Option<Vec<BigInt>>,
}

impl GraphSpec {
    pub fn undirected(n: usize, edges: Vec<(usize, usize)>) -> Self {
        GraphSpec { n, edges, directed: false, weights: None }
    }

    /// Apply a vertex relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> GraphSpec {
        GraphSpec {
            n: self.n,
            edges: self.edges.iter().map(|&(i, j)| (perm[i], perm[j])).collect(),
            directed: self.directed,
            weights: self.weights.clone(),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.directed { "->" } else { "-" };
        let parts: Vec<String> = self.edges.iter().map(|(i, j)| format!("{i}{sep}{j}")).collect();
        write!(f, "n={} [{}]", self.n, parts.join(" "))
    }
}

pub fn adjacency(spec: &GraphSpec) -> Result<IntMatrix> {
    if spec.n == 0 {
        return Err(Error::BadSize("graph needs at least one vertex".into()));
    }
    if let Some(w) = &spec.weights {
        if w.len() != spec.edges.len() {
            return Err(Error::DimensionMismatch { expected: spec.edges.len(), got: w.len() });
        }
        if w.iter().any(|x| !x.is_positive()) {
            return Err(Error::BadInput("edge weights must be positive".into()));
        }
    }
    let mut m = IntMatrix::zeros(spec.n);
    for (k, &(i, j)) in spec.edges.iter().enumerate() {
        for idx in [i, j] {
            if idx >= spec.n {
                return Err(Error::IndexOutOfRange { index: idx, size: spec.n });
            }
        }
        if i == j {
            return Err(Error::LoopEdge(i));
        }
        let w = spec.weights.as_ref().map_or_else(BigInt::one, |w| w[k].clone());
        m.set(i, j, w.clone());
        if !spec.directed {
            m.set(j, i, w);
        }
    }
    Ok(m)
}

/// Named families: `path`, `cycle`, `complete`, `star` (star has `n`
/// vertices, hub 0).
pub fn family(name: &str, n: usize) -> Result<GraphSpec> {
    let min = if name == "cycle" { 3 } else { 2 };
    if n < min {
        return Err(Error::BadSize(format!("{name} needs n >= {min}")));
    }
    let edges = match name {
        "path" => (0..n - 1).map(|i| (i, i + 1)).collect(),
        "cycle" => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        "complete" => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        "star" => (1..n).map(|i| (0, i)).collect(),
        _ => return Err(Error::BadInput(format!("unknown family `{name}`"))),
    };
    Ok(GraphSpec::undirected(n, edges))
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    // Heap's algorithm, iterative
    let mut c = vec![0usize; n];
    out.push(p.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Canonicaliser for simple graphs on `n` vertices encoded as edge bit sets.
struct Canon {
    /// For each permutation, the image of each pair index.
    maps: Vec<Vec<usize>>,
}

impl Canon {
    fn new(n: usize) -> Self {
        let idx = pair_index(n);
        let maps = permutations(n)
            .into_iter()
            .map(|p| {
                let mut map = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        map.push(idx[p[i]][p[j]]);
                    }
                }
                map
            })
            .collect();
        Canon { maps }
    }

    fn canon(&self, bits: u32) -> u32 {
        self.maps
            .iter()
            .map(|map| {
                map.iter().enumerate().fold(0u32, |acc, (k, &t)| acc | ((bits >> k & 1) << t))
            })
            .min()
            .unwrap_or(bits)
    }
}

fn edges_from_bits(n: usize, bits: u32) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> k & 1 == 1 {
                out.push((i, j));
            }
            k += 1;
        }
    }
    out
}

fn bits_from_edges(n: usize, edges: &[(usize, usize)]) -> u32 {
    let idx = pair_index(n);
    edges.iter().fold(0, |acc, &(i, j)| acc | 1 << idx[i][j])
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Canonical code of an undirected simple graph (minimum edge bit string
/// over all vertex relabellings).
pub fn canonical_code(spec: &GraphSpec) -> Result<u32> {
    if spec.directed || spec.n > 8 {
        return Err(Error::BadInput("canonical codes are for undirected graphs with n <= 8".into()));
    }
    Ok(Canon::new(spec.n).canon(bits_from_edges(spec.n, &spec.edges)))
}

/// One representative per isomorphism class of connected simple graphs on
/// exactly `n` vertices, sorted by canonical code.
pub fn connected_graphs_upto(n: usize) -> Result<Vec<GraphSpec>> {
    if !(2..=6).contains(&n) {
        return Err(Error::BadSize(format!("n = {n}, expected 2..=6")));
    }
    let pairs = n * (n - 1) / 2;
    let canon = Canon::new(n);
    let mut classes = BTreeMap::new();
    for bits in 0u32..1 << pairs {
        if (bits.count_ones() as usize) < n - 1 {
            continue;
        }
        let edges = edges_from_bits(n, bits);
        if !connected(n, &edges) {
            continue;
        }
        classes.entry(canon.canon(bits)).or_insert(());
    }
    Ok(classes.into_keys().map(|c| GraphSpec::undirected(n, edges_from_bits(n, c))).collect())
}

#[derive(Clone, Debug)]
pub struct ConjectureRow {
    pub graph: GraphSpec,
    pub code: u32,
    /// Family name when the class is a path, star, cycle or complete graph.
    pub name: Option<String>,
    pub count: usize,
    /// Largest entry of any `d` in the structure set.
    pub max_entry: BigInt,
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub n: usize,
    pub rows: Vec<ConjectureRow>,
    pub path_is_min: bool,
    pub complete_is_max: bool,
}

/// Count structures for every connected graph on `n` vertices. `n = 6`
/// takes hours and is only accepted with `slow`.
pub fn conjecture_check(n: usize, threads: usize, slow: bool) -> Result<ConjectureReport> {
    let top = if slow { 6 } else { 5 };
    if !(3..=top).contains(&n) {
        return Err(Error::BadSize(format!("n = {n}, expected 3..={top}")));
    }
    let graphs = connected_graphs_upto(n)?;
    let canon = Canon::new(n);
    let mut names = BTreeMap::new();
    for fam in ["path", "complete", "star", "cycle"] {
        let g = family(fam, n)?;
        names.entry(canon.canon(bits_from_edges(n, &g.edges))).or_insert(fam.to_string());
    }
    let row = |engine: &mut Engine, g: GraphSpec| -> Result<ConjectureRow> {
        let rep = arithmetical_structures_with(engine, &adjacency(&g)?)?;
        let max_entry = rep.structures().iter().flat_map(|s| s.d.iter()).max().cloned().unwrap_or_else(BigInt::zero);
        let code = canon.canon(bits_from_edges(n, &g.edges));
        Ok(ConjectureRow { name: names.get(&code).cloned(), code, count: rep.structures().len(), max_entry, graph: g })
    };
    let mut rows: Vec<ConjectureRow> = if threads <= 1 {
        let mut engine = Engine::new();
        graphs.into_iter().map(|g| row(&mut engine, g)).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::BadInput(e.to_string()))?;
        pool.install(|| graphs.into_par_iter().map_init(Engine::new, |e, g| row(e, g)).collect::<Result<_>>())?
    };
    rows.sort_by_key(|r| r.code);
    let count_of = |fam: &str| rows.iter().find(|r| r.name.as_deref() == Some(fam)).map(|r| r.count);
    let (lo, hi) = (count_of("path").unwrap_or(0), count_of("complete").unwrap_or(0));
    Ok(ConjectureReport {
        n,
        path_is_min: rows.iter().all(|r| r.count >= lo),
        complete_is_max: rows.iter().all(|r| r.count <= hi),
        rows,
    })
}

/// Parse the edge-list text format: a header line `n [directed]`, then one
/// `i j [w]` line per edge. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<GraphSpec> {
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let mut hp = header.split_whitespace();
    let n: usize = hp.next().and_then(|t| t.parse().ok()).ok_or_else(|| Error::Parse(format!("bad header `{header}`")))?;
    let directed = match hp.next() {
        None => false,
        Some("directed") => true,
        Some(t) => return Err(Error::Parse(format!("unexpected `{t}` in header"))),
    };
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut weighted = false;
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&toks.len()) {
            return Err(Error::Parse(format!("bad edge line `{line}`")));
        }
        let i: usize = toks[0].parse().map_err(|_| Error::Parse(format!("bad vertex `{}`", toks[0])))?;
        let j: usize = toks[1].parse().map_err(|_| Error::Parse(format!("bad vertex `{}`", toks[1])))?;
        let w = match toks.get(2) {
            Some(t) => {
                weighted = true;
                t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad weight `{t}`")))?
            }
            None => BigInt::one(),
        };
        edges.push((i, j));
        weights.push(w);
    }
    let spec = GraphSpec { n, edges, directed, weights: weighted.then_some(weights) };
    adjacency(&spec)?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let p3 = adjacency(&family("path", 3).unwrap()).unwrap();
        assert_eq!(p3, IntMatrix::from_i64_rows(&[[0, 1, 0], [1, 0, 1], [0, 1, 0]]).unwrap());
        let k3 = adjacency(&family("complete", 3).unwrap()).unwrap();
        assert_eq!(k3, IntMatrix::from_i64_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap());
        assert_eq!(family("cycle", 4).unwrap().edges.len(), 4);
        assert_eq!(family("complete", 4).unwrap().edges.len(), 6);
        assert!(family("cycle", 2).is_err());
        assert!(family("path", 1).is_err());
        assert!(family("wheel", 5).is_err());
    }

    #[test]
    fn weighted_digraph() {
        let spec = parse_edge_list("4 directed\n0 1\n1 0 9\n1 3\n2 1\n2 3\n3 2 3\n").unwrap();
        let want = IntMatrix::from_i64_rows(&[[0, 1, 0, 0], [9, 0, 0, 1], [0, 1, 0, 1], [0, 0, 3, 0]]).unwrap();
        assert_eq!(adjacency(&spec).unwrap(), want);
    }

    #[test]
    fn bad_edges() {
        assert_eq!(adjacency(&GraphSpec::undirected(3, vec![(1, 1)])), Err(Error::LoopEdge(1)));
        assert!(adjacency(&GraphSpec::undirected(3, vec![(0, 3)])).is_err());
        assert!(parse_edge_list("3\n0 1 x\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn class_counts() {
        assert_eq!(connected_graphs_upto(2).unwrap().len(), 1);
        assert_eq!(connected_graphs_upto(3).unwrap().len(), 2);
        assert_eq!(connected_graphs_upto(4).unwrap().len(), 6);
        assert_eq!(connected_graphs_upto(5).unwrap().len(), 21);
        assert!(connected_graphs_upto(7).is_err());
    }

    #[test]
    fn canonical_code_is_invariant() {
        let g = family("path", 5).unwrap();
        let c = canonical_code(&g).unwrap();
        for p in permutations(5).iter().step_by(7) {
            assert_eq!(canonical_code(&g.relabel(p)).unwrap(), c);
        }
        assert_ne!(canonical_code(&family("star", 5).unwrap()).unwrap(), c);
    }

    #[test]
    fn small_table() {
        let rep = conjecture_check(3, 1, false).unwrap();
        let counts: Vec<(Option<String>, usize)> = rep.rows.iter().map(|r| (r.name.clone(), r.count)).collect();
        assert_eq!(counts, vec![(Some("path".into()), 2), (Some("complete".into()), 10)]);
        assert!(rep.path_is_min && rep.complete_is_max);
        assert!(conjecture_check(6, 1, false).is_err());
    }
}
