//! Triangulations of the hypersimplex by four constructions, the bijection
//! between maximal sorted collections and circuit label words, the adjacency
//! rule on cells, and the dual graph.
//!
//! The hypersimplex is the slice of the unit cube at coordinate sum `k`; its
//! cells are indexed by long cycles `(w_1,...,w_n)` with `w_n = n` whose
//! inverse word has `k - 1` descents.

use std::collections::{BTreeMap, BTreeSet};

use crate::combinatorics::{
    self, descent_count, is_sorted_chain_subsets, KSubset, LongCycle, Permutation,
};
use crate::error::{Error, Result};
use crate::linalg;

/// The pair `(k, n)` with `0 < k < n` naming a hypersimplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HypersimplexId {
    k: u32,
    n: u32,
}

impl HypersimplexId {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::Argument(format!("hypersimplex needs 0 < k < n, got ({k}, {n})")));
        }
        Ok(HypersimplexId { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// A 0/1 vector with a fixed number of ones; the vertices of a hypersimplex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex01 {
    bits: Vec<u8>,
}

impl Vertex01 {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Argument("vertex entries must be 0 or 1".into()));
        }
        Ok(Vertex01 { bits })
    }

    pub fn from_subset(s: &KSubset) -> Self {
        Vertex01 { bits: s.indicator().iter().map(|&x| x as u8).collect() }
    }

    pub fn to_subset(&self) -> KSubset {
        let elems: Vec<u32> = self
            .bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(i, _)| i as u32 + 1)
            .collect();
        KSubset::new(elems, self.bits.len() as u32).expect("0/1 vector is a subset")
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn to_point(&self) -> Vec<i64> {
        self.bits.iter().map(|&b| b as i64).collect()
    }
}

/// A minimal circuit: `n` vertices traversed by cyclically shifting one "1"
/// right at the labelled position, the labels forming a permutation of `[n]`.
/// The traversal starts at the lexicographically maximal vertex, so the edge
/// labelled `n` comes last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    vertices: Vec<Vertex01>,
    labels: Vec<u32>,
}

impl Circuit {
    pub fn vertices(&self) -> &[Vertex01] {
        &self.vertices
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label_cycle(&self) -> LongCycle {
        LongCycle::from_word(self.labels.clone()).expect("labels form a permutation")
    }

    pub fn to_simplex(&self) -> Simplex {
        Simplex::new(self.vertices.iter().map(Vertex01::to_point).collect())
            .expect("circuit vertices are affinely independent")
    }
}

/// A full-dimensional cell of a triangulation: `n` affinely independent
/// lattice points in the hyperplane of fixed coordinate sum, stored sorted so
/// that cells compare bit-exactly across constructions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<Vec<i64>>,
}

impl Simplex {
    pub fn new(mut vertices: Vec<Vec<i64>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Argument("empty vertex set".into()));
        }
        let dim = vertices[0].len();
        if vertices.iter().any(|v| v.len() != dim) {
            return Err(Error::Argument("vertices of mixed dimension".into()));
        }
        vertices.sort();
        vertices.dedup();
        Ok(Simplex { vertices })
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of shared vertices with another cell.
    pub fn shared_vertices(&self, other: &Simplex) -> usize {
        let set: BTreeSet<&Vec<i64>> = self.vertices.iter().collect();
        other.vertices.iter().filter(|v| set.contains(v)).count()
    }

    /// True when the edge-difference matrix from one vertex has determinant
    /// +-1 after dropping the last coordinate (the lattice of the fixed-sum
    /// hyperplane projects isomorphically onto the first `n - 1` coordinates).
    pub fn is_unimodular(&self) -> bool {
        let n = self.vertices[0].len();
        if self.vertices.len() != n {
            return false;
        }
        let base = &self.vertices[0];
        let rows: Vec<Vec<i64>> = self.vertices[1..]
            .iter()
            .map(|v| (0..n - 1).map(|c| v[c] - base[c]).collect())
            .collect();
        linalg::determinant(&rows).abs() == 1
    }
}

/// A simple graph on string-labelled nodes; the dual graph of a
/// triangulation has one node per cell and an edge per shared facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    labels: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl DualGraph {
    /// Builds a graph from labels and label pairs; labels are sorted and
    /// deduplicated, edges stored as index pairs into the sorted label list.
    pub fn new(mut labels: Vec<String>, edge_labels: &[(String, String)]) -> Result<Self> {
        labels.sort();
        labels.dedup();
        let index: BTreeMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut edges = BTreeSet::new();
        for (a, b) in edge_labels {
            let (&ia, &ib) = match (index.get(a.as_str()), index.get(b.as_str())) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(Error::Argument(format!("edge ({a}, {b}) uses unknown node"))),
            };
            if ia == ib {
                return Err(Error::Argument(format!("self-loop at {a}")));
            }
            edges.insert((ia.min(ib), ia.max(ib)));
        }
        Ok(DualGraph { labels, edges })
    }

    pub fn node_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges.iter().map(|&(a, b)| (self.labels[a].as_str(), self.labels[b].as_str()))
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.labels.iter().position(|l| l == a), self.labels.iter().position(|l| l == b)) {
            (Some(x), Some(y)) if x != y => self.edges.contains(&(x.min(y), x.max(y))),
            _ => false,
        }
    }

    pub fn degree(&self, label: &str) -> usize {
        let Some(i) = self.labels.iter().position(|l| l == label) else {
            return 0;
        };
        self.edges.iter().filter(|&&(a, b)| a == i || b == i).count()
    }

    /// Histogram degree -> number of nodes with that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut deg = vec![0usize; self.labels.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        let mut hist = BTreeMap::new();
        for d in deg {
            *hist.entry(d).or_insert(0) += 1;
        }
        hist
    }

    /// Graphviz rendering with nodes and edges in canonical order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph gamma {\n");
        for l in &self.labels {
            out.push_str(&format!("  \"{l}\";\n"));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Dual graph of an arbitrary labelled triangulation via the geometric rule:
/// two cells are adjacent when they share all but one vertex.
pub fn facet_dual_graph(cells: &[(String, Simplex)]) -> Result<DualGraph> {
    let mut edges = Vec::new();
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            let n = cells[i].1.len();
            if cells[j].1.len() == n && cells[i].1.shared_vertices(&cells[j].1) == n - 1 {
                edges.push((cells[i].0.clone(), cells[j].0.clone()));
            }
        }
    }
    DualGraph::new(cells.iter().map(|(l, _)| l.clone()).collect(), &edges)
}

/// The number of descents of the inverse word, which is one less than the
/// number of ones in every vertex of the labelled circuit.
fn inverse_descents(rep: &Permutation) -> u32 {
    descent_count(&rep.inverse())
}

/// Builds the minimal circuit labelled by a long cycle.
///
/// The start vertex has a one in position 1 and in each position `b` whose
/// label fires before the label `b - 1`; it is the lexicographically maximal
/// vertex on the circuit.
pub fn circuit_of_cycle(cycle: &LongCycle, k: u32) -> Result<Circuit> {
    let rep = cycle.canonical_rep();
    let n = rep.len();
    if n < 2 {
        return Err(Error::InvalidCycle("need at least two positions".into()));
    }
    let d = inverse_descents(rep);
    if d + 1 != k {
        return Err(Error::InvalidCycle(format!(
            "cycle {} labels a circuit at {} ones, not {k}",
            cycle.word_string(),
            d + 1
        )));
    }

    let mut bits = vec![0u8; n];
    bits[0] = 1;
    for b in 2..=n as u32 {
        if rep.position_of(b) < rep.position_of(b - 1) {
            bits[(b - 1) as usize] = 1;
        }
    }
    debug_assert_eq!(bits.iter().filter(|&&x| x == 1).count(), k as usize);

    let start = bits.clone();
    let mut vertices = Vec::with_capacity(n);
    for t in 0..n {
        vertices.push(Vertex01 { bits: bits.clone() });
        let from = (rep.at(t + 1) - 1) as usize;
        let to = (from + 1) % n;
        if bits[from] != 1 || bits[to] != 0 {
            return Err(Error::InvalidCycle(format!(
                "label {} cannot fire at step {}",
                rep.at(t + 1),
                t + 1
            )));
        }
        bits[from] = 0;
        bits[to] = 1;
    }
    debug_assert_eq!(bits, start, "circuit must close");
    debug_assert!(vertices.iter().all(|v| v.bits <= start), "start vertex is lex-maximal");

    Ok(Circuit { vertices, labels: rep.one_line().to_vec() })
}

/// All minimal circuits: one per permutation `w` of `[1..n-1]` whose inverse
/// has `k - 1` descents, extended by a final `n`.
pub fn enumerate_minimal_circuits(id: HypersimplexId) -> Result<Vec<Circuit>> {
    let mut out = Vec::new();
    for w in Permutation::all(id.n as usize - 1) {
        if descent_count(&w.inverse()) + 1 == id.k {
            out.push(circuit_of_cycle(&LongCycle::new(&w.append_max()), id.k)?);
        }
    }
    Ok(out)
}

/// The cell of the piecewise-linear staircase construction, computed from
/// the closed vertex formula.
///
/// For `w` in `S_{n-1}` with `k - 1` descents of its inverse, vertex `r` of
/// the cube simplex `0 < y_{w(1)} < ... < y_{w(n-1)} < 1` has
/// `y_{w(1)} = ... = y_{w(r)} = 0` and the rest 1; the inverse staircase map
/// sends it to `x_1 = y_1`, `x_{i+1} = y_{i+1} - y_i + [w^-1(i+1) < w^-1(i)]`,
/// lifted to coordinate sum `k`.
pub fn stanley_simplex(w: &Permutation, k: u32) -> Result<Simplex> {
    let n = w.len() + 1;
    let winv = w.inverse();
    if descent_count(&winv) + 1 != k {
        return Err(Error::Argument(format!(
            "word {} has {} inverse descents, expected {}",
            w.word_string(),
            descent_count(&winv),
            k as i64 - 1
        )));
    }
    let mut vertices = Vec::with_capacity(n);
    for r in 0..n {
        let mut y = vec![1i64; n - 1];
        for t in 1..=r {
            y[(w.at(t) - 1) as usize] = 0;
        }
        let mut x = vec![0i64; n];
        x[0] = y[0];
        for i in 1..n - 1 {
            let carry = i64::from(winv.at(i + 1) < winv.at(i));
            x[i] = y[i] - y[i - 1] + carry;
        }
        let partial: i64 = x[..n - 1].iter().sum();
        x[n - 1] = k as i64 - partial;
        debug_assert!(x.iter().all(|&v| v == 0 || v == 1));
        vertices.push(x);
    }
    Simplex::new(vertices)
}

/// All sorted collections of `k`-subsets of `[1..n]` (the faces of the
/// triangulation), or only the maximal ones of size `n`.
pub fn enumerate_sorted_collections(
    id: HypersimplexId,
    maximal_only: bool,
) -> Result<Vec<Vec<KSubset>>> {
    let ground = KSubset::all(id.n, id.k);
    let raw: Vec<Vec<u32>> = ground.iter().map(|s| s.elements().to_vec()).collect();
    let target = if maximal_only { Some(id.n as usize) } else { None };
    let chains = combinatorics::sorted_chains_raw(&raw, target);
    Ok(chains
        .into_iter()
        .map(|c| c.into_iter().map(|i| ground[i].clone()).collect())
        .collect())
}

/// Recovers the circuit label word of the cell spanned by a maximal sorted
/// collection.
///
/// Position `alpha_i` of the last `i` in the sorted multiset union of the
/// collection tells at which step the label `i` fires; reducing mod `n` with
/// representatives in `[1..n-1]` and inverting the resulting word yields the
/// edge-label word of the circuit through the collection's vertices.
pub fn theta(collection: &[KSubset]) -> Result<Permutation> {
    if collection.is_empty() {
        return Err(Error::Argument("empty collection".into()));
    }
    let n = collection[0].ambient();
    if collection.len() != n as usize {
        return Err(Error::Argument(format!(
            "maximal sorted collections have size {n}, got {}",
            collection.len()
        )));
    }
    if !is_sorted_chain_subsets(collection)? {
        return Err(Error::Argument("collection is not sorted".into()));
    }
    let mut counts = vec![0i64; n as usize];
    for s in collection {
        for &e in s.elements() {
            counts[(e - 1) as usize] += 1;
        }
    }
    if counts.iter().any(|&c| c == 0) {
        return Err(Error::Argument("every value of [1..n] must occur in the union".into()));
    }
    let mut word = vec![0u32; n as usize];
    let mut prefix = 0i64;
    for i in 1..n {
        prefix += counts[(i - 1) as usize];
        let residue = (prefix % n as i64) as u32;
        if residue == 0 || word[..(i - 1) as usize].contains(&residue) {
            return Err(Error::Argument("collection does not span a cell".into()));
        }
        word[(i - 1) as usize] = residue;
    }
    word[n as usize - 1] = n;
    Ok(Permutation::from_one_line(word)?.inverse())
}

/// The four constructions of the triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangulationMethod {
    /// Piecewise-linear staircase map applied to the cube triangulation.
    Stanley,
    /// Maximal sorted collections of `k`-subsets.
    Sorted,
    /// Minimal circuits of the cyclic shift graph.
    Circuit,
    /// Alcoves of the affine Coxeter arrangement, via the alcove lattice.
    Alcove,
}

/// Triangulates the hypersimplex; all four methods return the same cells.
pub fn triangulate(id: HypersimplexId, method: TriangulationMethod) -> Result<BTreeSet<Simplex>> {
    match method {
        TriangulationMethod::Stanley => {
            let mut out = BTreeSet::new();
            for w in Permutation::all(id.n as usize - 1) {
                if descent_count(&w.inverse()) + 1 == id.k {
                    out.insert(stanley_simplex(&w, id.k)?);
                }
            }
            Ok(out)
        }
        TriangulationMethod::Sorted => Ok(enumerate_sorted_collections(id, true)?
            .into_iter()
            .map(|coll| {
                Simplex::new(coll.iter().map(|s| s.indicator()).collect())
                    .expect("collection spans a cell")
            })
            .collect()),
        TriangulationMethod::Circuit => {
            Ok(enumerate_minimal_circuits(id)?.iter().map(Circuit::to_simplex).collect())
        }
        TriangulationMethod::Alcove => {
            let spec = crate::alcoved::AlcovedSpec::hypersimplex(id.k, id.n)?;
            Ok(crate::alcoved::alcove_cells_from_lattice(&spec)?.into_iter().collect())
        }
    }
}

/// Adjacency of two cells by the label rule: switch two cyclically adjacent
/// labels whose values do not differ by one mod `n`.
pub fn are_adjacent(u: &LongCycle, w: &LongCycle) -> Result<bool> {
    let n = u.len();
    if n != w.len() {
        return Err(Error::Argument("cycles of different lengths".into()));
    }
    let (du, dw) = (inverse_descents(u.canonical_rep()), inverse_descents(w.canonical_rep()));
    if du != dw {
        return Err(Error::Argument(format!(
            "cycles label cells of different hypersimplices ({} vs {} ones)",
            du + 1,
            dw + 1
        )));
    }
    Ok(switch_neighbors(u).iter().any(|v| v == w))
}

/// All cells reachable from `u` by one admissible switch.
fn switch_neighbors(u: &LongCycle) -> Vec<LongCycle> {
    let word = u.canonical_rep().one_line();
    let n = word.len();
    let mut out = Vec::new();
    for i in 0..n {
        let a = word[i];
        let b = word[(i + 1) % n];
        let diff = (a as i64 - b as i64).rem_euclid(n as i64);
        if diff == 1 || diff == n as i64 - 1 {
            continue;
        }
        let mut next = word.to_vec();
        next.swap(i, (i + 1) % n);
        out.push(LongCycle::from_word(next).expect("swap keeps a permutation"));
    }
    out
}

/// The dual graph: one node per cell, labelled by the circuit word, with an
/// edge for each adjacent pair.  The switch rule generates exactly the pairs
/// of cells sharing a facet.
pub fn dual_graph(id: HypersimplexId) -> Result<DualGraph> {
    let cells: BTreeSet<LongCycle> = enumerate_minimal_circuits(id)?
        .iter()
        .map(Circuit::label_cycle)
        .collect();
    let labels: Vec<String> = cells.iter().map(LongCycle::word_string).collect();
    let mut edges = Vec::new();
    for u in &cells {
        for v in switch_neighbors(u) {
            if cells.contains(&v) && u < &v {
                edges.push((u.word_string(), v.word_string()));
            }
        }
    }
    DualGraph::new(labels, &edges)
}
