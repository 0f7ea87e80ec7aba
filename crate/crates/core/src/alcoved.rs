//! General alcoved polytopes: bounded regions cut out by hyperplanes
//! `z_j - z_i = integer` (in the running-sum coordinates `z_i = x_1 + ... +
//! x_i`) inside a hyperplane of fixed coordinate sum.  The module enumerates
//! lattice points, triangulates into alcoves by two constructions, computes
//! volumes by three methods, realizes the dual graph inside the alcove
//! lattice, and imports order polytopes.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::combinatorics::{
    self, descent_count, sort_pair, KMultiset, LongCycle, Permutation,
};
use crate::error::{Error, Result};
use crate::hypersimplex::{circuit_of_cycle, Circuit, DualGraph, Simplex};
use crate::polynomial::IntPolynomial;

/// One two-sided bound `lo <= z_j - z_i <= hi`; `None` means unconstrained.
pub type Bound = (Option<i64>, Option<i64>);

/// Integral bound data for an alcoved polytope: the region of the hyperplane
/// `x_1 + ... + x_n = level` satisfying `lo_ij <= x_{i+1} + ... + x_j <=
/// hi_ij` for pairs `0 <= i < j <= n-1`, optionally intersected with the unit
/// cube.  The cube constraints are folded into the bound map at construction
/// (`0 <= x_i <= 1` is the pair `(i-1, i)` for `i < n` and the pair
/// `(0, n-1)` clamped to `[level-1, level]` for the last coordinate).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcovedSpec {
    n: usize,
    level: i64,
    bounds: BTreeMap<(usize, usize), Bound>,
    unit_cube: bool,
}

impl AlcovedSpec {
    pub fn new(
        n: usize,
        level: i64,
        bounds: &[(usize, usize, Bound)],
        unit_cube: bool,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Argument("ambient dimension must be at least 2".into()));
        }
        let mut map: BTreeMap<(usize, usize), Bound> = BTreeMap::new();
        for &(i, j, (lo, hi)) in bounds {
            if i >= j || j > n - 1 {
                return Err(Error::Argument(format!("bound pair ({i}, {j}) needs 0 <= i < j <= {}", n - 1)));
            }
            merge_bound(&mut map, (i, j), (lo, hi));
        }
        if unit_cube {
            for i in 1..n {
                merge_bound(&mut map, (i - 1, i), (Some(0), Some(1)));
            }
            merge_bound(&mut map, (0, n - 1), (Some(level - 1), Some(level)));
        }
        let spec = AlcovedSpec { n, level, bounds: map, unit_cube };
        let closure = spec.closure();
        if !closure.empty {
            for j in 1..n {
                if closure.upper(0, j).is_none() || closure.lower(0, j).is_none() {
                    return Err(Error::Unbounded(format!("direction z_{j} is unconstrained")));
                }
            }
        }
        Ok(spec)
    }

    /// The hypersimplex at `k` ones: the unit cube sliced at coordinate sum `k`.
    pub fn hypersimplex(k: u32, n: u32) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::Argument(format!("hypersimplex needs 0 < k < n, got ({k}, {n})")));
        }
        AlcovedSpec::new(n as usize, k as i64, &[], true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn is_unit_cube(&self) -> bool {
        self.unit_cube
    }

    pub fn bounds(&self) -> &BTreeMap<(usize, usize), Bound> {
        &self.bounds
    }

    /// The affinely equivalent polytope shifted by `(m, ..., m)`.
    fn translated(&self, m: i64) -> AlcovedSpec {
        let bounds = self
            .bounds
            .iter()
            .map(|(&(i, j), &(lo, hi))| {
                let d = (j - i) as i64 * m;
                ((i, j), (lo.map(|b| b + d), hi.map(|c| c + d)))
            })
            .collect();
        AlcovedSpec {
            n: self.n,
            level: self.level + self.n as i64 * m,
            bounds,
            unit_cube: false,
        }
    }

    /// All-pairs consequence closure of the difference constraints.
    fn closure(&self) -> DifferenceClosure {
        DifferenceClosure::new(self.n, &self.bounds)
    }

    /// Runs `f` on the `z`-vector (`z_0 = 0` included) of every lattice point.
    fn for_each_z(&self, f: &mut impl FnMut(&[i64])) {
        let closure = self.closure();
        if closure.empty {
            return;
        }
        let mut z = vec![0i64; self.n];
        descend_z(&closure, &mut z, 1, f);
    }

    fn z_to_x(&self, z: &[i64]) -> Vec<i64> {
        let mut x = Vec::with_capacity(self.n);
        for i in 1..self.n {
            x.push(z[i] - z[i - 1]);
        }
        x.push(self.level - z[self.n - 1]);
        x
    }

    /// Number of lattice points, without materializing them.
    pub fn count_lattice_points(&self) -> u64 {
        let mut count = 0u64;
        self.for_each_z(&mut |_| count += 1);
        count
    }
}

fn merge_bound(map: &mut BTreeMap<(usize, usize), Bound>, key: (usize, usize), add: Bound) {
    let entry = map.entry(key).or_insert((None, None));
    entry.0 = match (entry.0, add.0) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (a, b) => a.or(b),
    };
    entry.1 = match (entry.1, add.1) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
}

/// Tightest derived windows `z_j - z_i <= d[i][j]` from a system of
/// difference constraints, computed by all-pairs shortest paths.  A negative
/// diagonal entry certifies an empty polytope.
struct DifferenceClosure {
    n: usize,
    d: Vec<Vec<Option<i64>>>,
    empty: bool,
}

impl DifferenceClosure {
    fn new(n: usize, bounds: &BTreeMap<(usize, usize), Bound>) -> Self {
        let mut d = vec![vec![None; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = Some(0);
        }
        for (&(i, j), &(lo, hi)) in bounds {
            if let Some(c) = hi {
                d[i][j] = Some(d[i][j].map_or(c, |x: i64| x.min(c)));
            }
            if let Some(b) = lo {
                d[j][i] = Some(d[j][i].map_or(-b, |x: i64| x.min(-b)));
            }
        }
        for via in 0..n {
            for a in 0..n {
                let Some(first) = d[a][via] else { continue };
                for b in 0..n {
                    if let Some(second) = d[via][b] {
                        let cand = first + second;
                        if d[a][b].is_none_or(|x| cand < x) {
                            d[a][b] = Some(cand);
                        }
                    }
                }
            }
        }
        let empty = (0..n).any(|i| d[i][i].is_some_and(|x| x < 0));
        DifferenceClosure { n, d, empty }
    }

    /// Max of `z_j - z_i`, if bounded.
    fn upper(&self, i: usize, j: usize) -> Option<i64> {
        self.d[i][j]
    }

    /// Min of `z_j - z_i`, if bounded.
    fn lower(&self, i: usize, j: usize) -> Option<i64> {
        self.d[j][i].map(|x| -x)
    }
}

fn descend_z(closure: &DifferenceClosure, z: &mut Vec<i64>, pos: usize, f: &mut impl FnMut(&[i64])) {
    if pos == closure.n {
        f(z);
        return;
    }
    let mut lo = i64::MIN;
    let mut hi = i64::MAX;
    for i in 0..pos {
        if let Some(u) = closure.upper(i, pos) {
            hi = hi.min(z[i] + u);
        }
        if let Some(l) = closure.lower(i, pos) {
            lo = lo.max(z[i] + l);
        }
    }
    debug_assert!(lo > i64::MIN && hi < i64::MAX, "windows are finite for bounded specs");
    for v in lo..=hi {
        z[pos] = v;
        descend_z(closure, z, pos + 1, f);
    }
}

/// The lattice points of a bounded spec, normalized to non-negative
/// coordinates by the smallest diagonal translation `(m, ..., m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    n: usize,
    level: i64,
    shift: i64,
    points: Vec<Vec<i64>>,
}

impl PointSet {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Coordinate sum of every point, after normalization.
    pub fn level(&self) -> i64 {
        self.level
    }

    /// The recorded translation: original points are these minus `(m,...,m)`.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The multiset view `I_a` of each point.
    pub fn multisets(&self) -> Vec<KMultiset> {
        self.points
            .iter()
            .map(|p| KMultiset::from_counts(p).expect("normalized points are non-negative"))
            .collect()
    }
}

/// Exactly the integer points satisfying all bounds at the given level.
pub fn lattice_points(spec: &AlcovedSpec) -> Result<PointSet> {
    let mut raw: Vec<Vec<i64>> = Vec::new();
    let mut f = |z: &[i64]| raw.push(spec.z_to_x(z));
    spec.for_each_z(&mut f);
    let min = raw.iter().flatten().copied().min().unwrap_or(0);
    let shift = (-min).max(0);
    for p in &mut raw {
        for c in p.iter_mut() {
            *c += shift;
        }
    }
    raw.sort();
    Ok(PointSet {
        n: spec.n,
        level: spec.level + spec.n as i64 * shift,
        shift,
        points: raw,
    })
}

/// The directed shift graph on a set of lattice points: an edge `a -> b`
/// labelled `i` whenever `a + e_{i+1} - e_i = b`, indices cyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointGraph {
    points: Vec<Vec<i64>>,
    edges: Vec<(usize, u32, usize)>,
}

impl PointGraph {
    pub fn from_points(points: &[Vec<i64>]) -> Self {
        let mut points = points.to_vec();
        points.sort();
        points.dedup();
        let index: BTreeMap<&Vec<i64>, usize> =
            points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut edges = Vec::new();
        let n = points.first().map_or(0, Vec::len);
        for (a, p) in points.iter().enumerate() {
            for label in 1..=n {
                let from = label - 1;
                let to = label % n;
                let mut q = p.clone();
                q[from] -= 1;
                q[to] += 1;
                if let Some(&b) = index.get(&q) {
                    edges.push((a, label as u32, b));
                }
            }
        }
        PointGraph { points, edges }
    }

    pub fn node_count(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    /// Edges as `(source index, label, target index)`.
    pub fn edges(&self) -> &[(usize, u32, usize)] {
        &self.edges
    }

    /// Minimal circuits: directed cycles of length `n` (which then use every
    /// label exactly once).  Each is reported from its lexicographically
    /// maximal vertex, so the edge labelled `n` comes last.
    pub fn minimal_circuits(&self) -> Vec<(Vec<usize>, Vec<u32>)> {
        let n = self.points.first().map_or(0, Vec::len);
        if n == 0 {
            return Vec::new();
        }
        let mut succ: Vec<Vec<(u32, usize)>> = vec![Vec::new(); self.points.len()];
        for &(a, l, b) in &self.edges {
            succ[a].push((l, b));
        }
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(n);
        for start in 0..self.points.len() {
            path.push(start);
            self.circuit_dfs(start, start, n, &succ, &mut path, &mut Vec::new(), &mut out);
            path.pop();
        }
        out
    }

    fn circuit_dfs(
        &self,
        start: usize,
        cur: usize,
        n: usize,
        succ: &[Vec<(u32, usize)>],
        path: &mut Vec<usize>,
        labels: &mut Vec<u32>,
        out: &mut Vec<(Vec<usize>, Vec<u32>)>,
    ) {
        for &(label, next) in &succ[cur] {
            if labels.contains(&label) {
                continue;
            }
            if path.len() == n {
                if next == start {
                    let mut full = labels.clone();
                    full.push(label);
                    out.push((path.clone(), full));
                }
                continue;
            }
            // Only visit vertices below the start: every circuit is found once,
            // from its maximal vertex.
            if next >= start {
                continue;
            }
            path.push(next);
            labels.push(label);
            self.circuit_dfs(start, next, n, succ, path, labels, out);
            labels.pop();
            path.pop();
        }
    }
}

/// The labelled shift graph of a spec's lattice points.
pub fn point_graph(spec: &AlcovedSpec) -> Result<PointGraph> {
    Ok(PointGraph::from_points(lattice_points(spec)?.points()))
}

/// The two triangulation constructions for general alcoved polytopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlcovedTriangulation {
    /// Minimal circuits of the shift graph on lattice points.
    Circuit,
    /// Maximal sorted collections of the point multisets.
    Sorted,
}

/// Triangulates into alcoves; both methods return the same cells, in the
/// normalized (non-negative) coordinates of [`lattice_points`].
pub fn triangulate(spec: &AlcovedSpec, method: AlcovedTriangulation) -> Result<BTreeSet<Simplex>> {
    let ps = lattice_points(spec)?;
    match method {
        AlcovedTriangulation::Circuit => {
            let graph = PointGraph::from_points(ps.points());
            Ok(graph
                .minimal_circuits()
                .into_iter()
                .map(|(path, _)| {
                    Simplex::new(path.iter().map(|&i| graph.points()[i].clone()).collect())
                        .expect("circuit vertices are distinct")
                })
                .collect())
        }
        AlcovedTriangulation::Sorted => {
            let multisets = ps.multisets();
            if !closed_under_sorting(&multisets)? {
                return Err(Error::NotSortClosed(
                    "lattice points are not closed under sorting".into(),
                ));
            }
            let ground: Vec<Vec<u32>> = multisets.iter().map(|m| m.elements().to_vec()).collect();
            let mut order: Vec<usize> = (0..ground.len()).collect();
            order.sort_by(|&a, &b| ground[a].cmp(&ground[b]));
            let sorted_ground: Vec<Vec<u32>> = order.iter().map(|&i| ground[i].clone()).collect();
            let chains = combinatorics::sorted_chains_raw(&sorted_ground, Some(spec.n));
            Ok(chains
                .into_iter()
                .map(|chain| {
                    Simplex::new(
                        chain.iter().map(|&c| ps.points()[order[c]].clone()).collect(),
                    )
                    .expect("sorted collections span cells")
                })
                .collect())
        }
    }
}

fn closed_under_sorting(multisets: &[KMultiset]) -> Result<bool> {
    let set: BTreeSet<&KMultiset> = multisets.iter().collect();
    for (i, a) in multisets.iter().enumerate() {
        for b in &multisets[i + 1..] {
            let (u, v) = sort_pair(a, b)?;
            if !set.contains(&u) || !set.contains(&v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True when every pairwise sort of the point multisets stays inside the set.
pub fn is_sort_closed_points(points: &[Vec<i64>]) -> Result<bool> {
    if points.is_empty() {
        return Ok(true);
    }
    let n = points[0].len();
    let level: i64 = points[0].iter().sum();
    for p in points {
        if p.len() != n || p.iter().sum::<i64>() != level {
            return Err(Error::Argument("points of mixed level or dimension".into()));
        }
        if p.iter().any(|&c| c < 0) {
            return Err(Error::Argument("points must be non-negative".into()));
        }
    }
    let multisets: Vec<KMultiset> = points
        .iter()
        .map(|p| KMultiset::from_counts(p).expect("validated non-negative"))
        .collect();
    closed_under_sorting(&multisets)
}

/// The three volume algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VolumeMethod {
    /// Count the cells of the circuit triangulation.
    Circuit,
    /// Sum lattice-point counts of the inner translate polytopes.
    LatticeSum,
    /// Count descent-restricted permutations (unit-cube specs only).
    Descent,
}

/// Normalized volume; polytopes of less than full dimension report 0.
pub fn volume(spec: &AlcovedSpec, method: VolumeMethod) -> Result<i64> {
    match method {
        VolumeMethod::Circuit => Ok(triangulate(spec, AlcovedTriangulation::Circuit)?.len() as i64),
        VolumeMethod::LatticeSum => Ok(volume_by_lattice_sum(spec)?.total),
        VolumeMethod::Descent => Ok(restricted_permutations(spec)?.len() as i64),
    }
}

/// The outcome of the lattice-sum volume formula: the total and the number
/// of lattice points of the inner translate polytope for every permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSumCertificate {
    pub total: i64,
    pub per_w: BTreeMap<Permutation, u64>,
}

/// Volume as a sum over `w` in `S_{n-1}` of the number of lattice translates
/// of the cell labelled `w` that fit inside the polytope.
///
/// The cell's tight bounds `d_ij = min`, `f_ij = max` of `x_{i+1} + ... +
/// x_j` over its vertices turn the fitting condition into the shifted spec
/// `(lo - d_ij, hi - f_ij)` at level `level - k`, whose points are counted.
pub fn volume_by_lattice_sum(spec: &AlcovedSpec) -> Result<LatticeSumCertificate> {
    let n = spec.n;
    let mut per_w = BTreeMap::new();
    let mut total = 0i64;
    for w in Permutation::all(n - 1) {
        let k = descent_count(&w.inverse()) as i64 + 1;
        let cell = circuit_of_cycle(&LongCycle::new(&w.append_max()), k as u32)?;
        let vertices: Vec<Vec<i64>> = cell.vertices().iter().map(|v| v.to_point()).collect();
        let mut shifted = Vec::new();
        for (&(i, j), &(lo, hi)) in &spec.bounds {
            let sums = vertices.iter().map(|v| v[i..j].iter().sum::<i64>());
            let d = sums.clone().min().expect("cell has vertices");
            let f = sums.max().expect("cell has vertices");
            shifted.push((i, j, (lo.map(|b| b - d), hi.map(|c| c - f))));
        }
        let inner = AlcovedSpec::new(n, spec.level - k, &shifted, false)?;
        let count = inner.count_lattice_points();
        total = total
            .checked_add(count as i64)
            .ok_or_else(|| Error::Argument("volume overflow".into()))?;
        per_w.insert(w, count);
    }
    Ok(LatticeSumCertificate { total, per_w })
}

/// Permutations of `[1..n-1]` triangulating a polytope inside the unit cube:
/// `w` has `level - 1` descents and, for every bound pair `(i, j)`, the
/// segment `w_i ... w_j` (with `w_0 = 0`) has between `lo` and `hi` descents,
/// with the boundary cases forcing `w_i < w_j` (at the minimum) or `w_i >
/// w_j` (at the maximum).
pub fn restricted_permutations(spec: &AlcovedSpec) -> Result<BTreeSet<Permutation>> {
    if !spec.unit_cube {
        return Err(Error::MethodDomain(
            "descent counting requires a polytope inside the unit cube".into(),
        ));
    }
    let n = spec.n;
    let mut out = BTreeSet::new();
    'outer: for w in Permutation::all(n - 1) {
        if descent_count(&w) as i64 != spec.level - 1 {
            continue;
        }
        let value = |t: usize| if t == 0 { 0 } else { w.at(t) as i64 };
        for (&(i, j), &(lo, hi)) in &spec.bounds {
            let descents = (i..j).filter(|&t| value(t) > value(t + 1)).count() as i64;
            if let Some(b) = lo {
                if descents < b || (descents == b && value(i) >= value(j)) {
                    continue 'outer;
                }
            }
            if let Some(c) = hi {
                if descents > c || (descents == c && value(i) <= value(j)) {
                    continue 'outer;
                }
            }
        }
        out.insert(w);
    }
    Ok(out)
}

/// A vertex of the alcove lattice: the running sums of the coordinate totals
/// of an alcove's vertex set.  Entries have pairwise distinct residues mod
/// `n`, and the vector is the alcove's central point in `z`-coordinates
/// scaled by `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlcoveCoord {
    lambda: Vec<i64>,
}

impl AlcoveCoord {
    pub fn new(lambda: Vec<i64>) -> Result<Self> {
        let n = lambda.len() as i64;
        if n == 0 {
            return Err(Error::Argument("empty coordinate".into()));
        }
        let residues: BTreeSet<i64> = lambda.iter().map(|&x| x.rem_euclid(n)).collect();
        if residues.len() != lambda.len() {
            return Err(Error::Argument(format!("residues of {lambda:?} mod {n} collide")));
        }
        Ok(AlcoveCoord { lambda })
    }

    pub fn entries(&self) -> &[i64] {
        &self.lambda
    }

    pub fn label_string(&self) -> String {
        self.lambda.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// The alcove-lattice vertex of a minimal circuit's alcove.
pub fn alcove_coordinate(c: &Circuit) -> Result<AlcoveCoord> {
    let points: Vec<Vec<i64>> = c.vertices().iter().map(|v| v.to_point()).collect();
    alcove_coordinate_of_points(&points)
}

/// The alcove-lattice vertex of a cell given by its vertex set.
pub fn alcove_coordinate_of_simplex(s: &Simplex) -> Result<AlcoveCoord> {
    alcove_coordinate_of_points(s.vertices())
}

fn alcove_coordinate_of_points(points: &[Vec<i64>]) -> Result<AlcoveCoord> {
    if points.is_empty() {
        return Err(Error::Argument("empty vertex set".into()));
    }
    let n = points[0].len();
    let mut alpha = vec![0i64; n];
    for p in points {
        for (i, &c) in p.iter().enumerate() {
            alpha[i] += c;
        }
    }
    let mut lambda = Vec::with_capacity(n);
    let mut run = 0;
    for a in alpha {
        run += a;
        lambda.push(run);
    }
    AlcoveCoord::new(lambda)
}

/// Enumerates the alcoves inside the spec directly on the alcove lattice and
/// reconstructs each cell's vertex set, without tracing circuits.  Cells come
/// back in the normalized coordinates of [`lattice_points`].
pub fn alcove_cells_from_lattice(spec: &AlcovedSpec) -> Result<Vec<Simplex>> {
    let shift = lattice_points(spec)?.shift();
    let tspec = spec.translated(shift);
    let coords = qualifying_alcove_coords(&tspec);
    let mut cells = Vec::with_capacity(coords.len());
    for p1 in &coords {
        cells.push(alcove_vertices(&tspec, p1)?);
    }
    Ok(cells)
}

/// All alcove-lattice vertices, in the gauge with first entry 0, whose
/// alcoves lie inside the spec: `n * lo_ij <= p_j - p_i <= n * hi_ij` for
/// every bound, with distinct residues mod `n`.
fn qualifying_alcove_coords(spec: &AlcovedSpec) -> Vec<Vec<i64>> {
    let n = spec.n;
    let closure = spec.closure();
    if closure.empty {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut p = vec![0i64; n];
    let mut used = vec![false; n];
    used[0] = true;
    descend_lambda(&closure, n, &mut p, &mut used, 1, &mut out);
    out
}

fn descend_lambda(
    closure: &DifferenceClosure,
    n: usize,
    p: &mut Vec<i64>,
    used_residues: &mut Vec<bool>,
    pos: usize,
    out: &mut Vec<Vec<i64>>,
) {
    if pos == n {
        out.push(p.clone());
        return;
    }
    let mut lo = i64::MIN;
    let mut hi = i64::MAX;
    for i in 0..pos {
        if let Some(u) = closure.upper(i, pos) {
            hi = hi.min(p[i] + n as i64 * u);
        }
        if let Some(l) = closure.lower(i, pos) {
            lo = lo.max(p[i] + n as i64 * l);
        }
    }
    debug_assert!(lo > i64::MIN && hi < i64::MAX);
    for v in lo..=hi {
        let r = v.rem_euclid(n as i64) as usize;
        if used_residues[r] {
            continue;
        }
        used_residues[r] = true;
        p[pos] = v;
        descend_lambda(closure, n, p, used_residues, pos + 1, out);
        used_residues[r] = false;
    }
}

/// The `n` integer points of the alcove whose scaled central point is `p1`
/// (gauge `p1[0] = 0`): the box `floor((p_j - p_i)/n) <= z_j - z_i <=
/// floor((p_j - p_i)/n) + 1` holds exactly those points.
fn alcove_vertices(spec: &AlcovedSpec, p1: &[i64]) -> Result<Simplex> {
    let n = spec.n;
    let mut z = vec![0i64; n];
    let mut points = Vec::with_capacity(n);
    fn rec(
        spec: &AlcovedSpec,
        p1: &[i64],
        z: &mut Vec<i64>,
        pos: usize,
        points: &mut Vec<Vec<i64>>,
    ) {
        let n = spec.n;
        if pos == n {
            points.push(spec.z_to_x(z));
            return;
        }
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for i in 0..pos {
            let k = (p1[pos] - p1[i]).div_euclid(n as i64);
            lo = lo.max(z[i] + k);
            hi = hi.min(z[i] + k + 1);
        }
        for v in lo..=hi {
            z[pos] = v;
            rec(spec, p1, z, pos + 1, points);
        }
    }
    rec(spec, p1, &mut z, 1, &mut points);
    if points.len() != n {
        return Err(Error::Argument(format!(
            "alcove at {p1:?} reconstructed {} vertices instead of {n}",
            points.len()
        )));
    }
    Simplex::new(points)
}

/// The dual graph of the alcove triangulation, realized as the induced
/// subgraph of the alcove lattice.  Nodes are labelled by their
/// [`AlcoveCoord`] (in normalized coordinates); two alcoves are adjacent when
/// one lattice move `p + e_i - e_j` (with `p_i + 1 = p_j` mod `n`) maps one
/// to the other.
pub fn gamma_graph(spec: &AlcovedSpec) -> Result<DualGraph> {
    let ps = lattice_points(spec)?;
    let tspec = spec.translated(ps.shift());
    let n = tspec.n;
    let coords = qualifying_alcove_coords(&tspec);
    let set: BTreeSet<Vec<i64>> = coords.iter().cloned().collect();
    let label = |p1: &[i64]| -> String {
        let mut p2: Vec<i64> = p1[1..].to_vec();
        p2.push(n as i64 * tspec.level);
        AlcoveCoord { lambda: p2 }.label_string()
    };
    let mut edges = Vec::new();
    for p in &coords {
        for i in 0..n {
            for j in 0..n {
                if i == j || (p[i] + 1 - p[j]).rem_euclid(n as i64) != 0 {
                    continue;
                }
                let mut q = p.clone();
                q[i] += 1;
                q[j] -= 1;
                let base = q[0];
                for entry in q.iter_mut() {
                    *entry -= base;
                }
                if set.contains(&q) && *p < q {
                    edges.push((label(p), label(&q)));
                }
            }
        }
    }
    DualGraph::new(coords.iter().map(|p| label(p)).collect(), &edges)
}

/// A finite poset on `[1..m]` given by its strict order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    m: usize,
    less: BTreeSet<(u32, u32)>,
}

impl Poset {
    /// Builds a poset from generating relations `(a, b)` meaning `a < b` in
    /// the order; the transitive closure is taken, cycles are rejected.
    pub fn new(m: usize, relations: &[(u32, u32)]) -> Result<Self> {
        for &(a, b) in relations {
            if a < 1 || a > m as u32 || b < 1 || b > m as u32 {
                return Err(Error::Argument(format!("relation ({a}, {b}) outside [1..{m}]")));
            }
        }
        let mut less: BTreeSet<(u32, u32)> = relations.iter().copied().collect();
        loop {
            let mut added = false;
            let snapshot: Vec<(u32, u32)> = less.iter().copied().collect();
            for &(a, b) in &snapshot {
                for &(c, d) in &snapshot {
                    if b == c && less.insert((a, d)) {
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        if less.iter().any(|&(a, b)| a == b) {
            return Err(Error::Argument("relations contain a cycle".into()));
        }
        Ok(Poset { m, less })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn less(&self, a: u32, b: u32) -> bool {
        self.less.contains(&(a, b))
    }

    pub fn relations(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.less.iter().copied()
    }

    /// `a < b` in the poset implies `a < b` as integers.
    pub fn is_naturally_labeled(&self) -> bool {
        self.less.iter().all(|&(a, b)| a < b)
    }

    /// Words listing the elements so that poset-smaller elements come first.
    pub fn linear_extensions(&self) -> Vec<Permutation> {
        Permutation::all(self.m)
            .into_iter()
            .filter(|w| {
                self.less.iter().all(|&(a, b)| w.position_of(a) < w.position_of(b))
            })
            .collect()
    }
}

/// Encodes the order polytope `0 <= x_i <= 1`, `x_i <= x_j` for `i > j` in
/// the poset, as an alcoved spec: the polytope coordinates become running
/// sums, with one slack coordinate closing the level.
pub fn from_order_poset(p: &Poset) -> Result<AlcovedSpec> {
    if !p.is_naturally_labeled() {
        return Err(Error::Argument("poset must be naturally labeled".into()));
    }
    let m = p.size();
    let n = m + 1;
    let mut bounds: Vec<(usize, usize, Bound)> = Vec::new();
    for i in 1..=m {
        bounds.push((0, i, (Some(0), Some(1))));
    }
    for (a, b) in p.relations() {
        // b > a in the poset, so coordinate b is at most coordinate a.
        bounds.push((a as usize, b as usize, (None, Some(0))));
    }
    // The level is the largest value the last running sum attains.
    let probe = AlcovedSpec::new(n, 0, &bounds, false)?;
    let level = probe
        .closure()
        .upper(0, m)
        .expect("cube bounds make the polytope bounded");
    AlcovedSpec::new(n, level, &bounds, false)
}

/// The f- and h-polynomials of the simplicial complex spanned by a pure set
/// of cells: the coefficient of `t^s` in `f` counts faces with `s` vertices,
/// and `h(t) = sum_i f_{i-1} t^i (1-t)^(d-i)` with `f_{-1} = 1`.
pub fn face_polynomials(cells: &BTreeSet<Simplex>) -> Result<(IntPolynomial, IntPolynomial)> {
    let Some(first) = cells.iter().next() else {
        return Err(Error::Argument("empty complex".into()));
    };
    let d = first.len();
    if cells.iter().any(|c| c.len() != d) {
        return Err(Error::Argument("cells of mixed dimension (complex is not pure)".into()));
    }

    let mut vertex_ids: BTreeMap<&Vec<i64>, usize> = BTreeMap::new();
    for c in cells {
        for v in c.vertices() {
            let next = vertex_ids.len();
            vertex_ids.entry(v).or_insert(next);
        }
    }

    let mut face_counts = vec![0i64; d + 1];
    if vertex_ids.len() <= 64 {
        let mut seen: HashSet<u64> = HashSet::new();
        for c in cells {
            let ids: Vec<usize> = c.vertices().iter().map(|v| vertex_ids[v]).collect();
            for mask in 1u32..(1 << d) {
                let mut bits = 0u64;
                for (t, &id) in ids.iter().enumerate() {
                    if mask & (1 << t) != 0 {
                        bits |= 1 << id;
                    }
                }
                if seen.insert(bits) {
                    face_counts[mask.count_ones() as usize] += 1;
                }
            }
        }
    } else {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for c in cells {
            let ids: Vec<usize> = c.vertices().iter().map(|v| vertex_ids[v]).collect();
            for mask in 1u32..(1 << d) {
                let mut face: Vec<usize> = (0..d).filter(|&t| mask & (1 << t) != 0).map(|t| ids[t]).collect();
                face.sort_unstable();
                if seen.insert(face) {
                    face_counts[mask.count_ones() as usize] += 1;
                }
            }
        }
    }

    let mut f = IntPolynomial::zero();
    for (s, &c) in face_counts.iter().enumerate().skip(1) {
        f.set(s as u32, c);
    }
    let mut h = IntPolynomial::one_minus_t_power(d as u32);
    for i in 1..=d {
        let term = IntPolynomial::monomial(i as u32, face_counts[i])
            .mul(&IntPolynomial::one_minus_t_power((d - i) as u32));
        h = h.add(&term);
    }
    Ok((f, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypersimplex::{
        dual_graph, facet_dual_graph, triangulate as tri_h, HypersimplexId, TriangulationMethod,
    };

    fn delta(k: u32, n: u32) -> AlcovedSpec {
        AlcovedSpec::hypersimplex(k, n).unwrap()
    }

    #[test]
    fn lattice_points_of_hypersimplices() {
        let ps = lattice_points(&delta(2, 4)).unwrap();
        assert_eq!(ps.len(), 6);
        assert_eq!(ps.shift(), 0);
        assert!(ps.points().iter().all(|p| p.iter().sum::<i64>() == 2));

        // A contradictory bound gives the empty set.
        let empty =
            AlcovedSpec::new(4, 2, &[(0, 2, (Some(3), Some(1)))], true).unwrap();
        assert!(lattice_points(&empty).unwrap().is_empty());

        // Tight alcove bounds cut out the vertex set of a single cell.
        let alcove = AlcovedSpec::new(
            4,
            2,
            &[
                (0, 1, (Some(0), Some(1))),
                (1, 2, (Some(0), Some(1))),
                (2, 3, (Some(0), Some(1))),
                (0, 2, (Some(1), Some(2))),
                (1, 3, (Some(0), Some(1))),
                (0, 3, (Some(1), Some(2))),
            ],
            true,
        )
        .unwrap();
        assert_eq!(lattice_points(&alcove).unwrap().len(), 4);
        assert_eq!(volume(&alcove, VolumeMethod::Circuit).unwrap(), 1);
    }

    #[test]
    fn unbounded_spec_is_rejected() {
        let err = AlcovedSpec::new(3, 1, &[(0, 1, (Some(0), None))], false);
        assert!(matches!(err, Err(Error::Unbounded(_))));
    }

    #[test]
    fn point_graph_examples() {
        let g = point_graph(&delta(1, 3)).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edges().len(), 3);
        // One directed 3-cycle.
        let mut seen = vec![false; 3];
        for &(a, _, b) in g.edges() {
            assert_ne!(a, b);
            seen[a] = true;
        }
        assert!(seen.iter().all(|&s| s));

        let empty = AlcovedSpec::new(3, 1, &[(0, 1, (Some(5), Some(4)))], true).unwrap();
        assert_eq!(point_graph(&empty).unwrap().node_count(), 0);
    }

    #[test]
    fn triangulation_counts() {
        assert_eq!(volume(&delta(2, 5), VolumeMethod::Circuit).unwrap(), 11);
        // The slice of the square at x1 + x2 <= 1.
        let spec = AlcovedSpec::new(4, 2, &[(0, 2, (Some(0), Some(1)))], true).unwrap();
        assert_eq!(volume(&spec, VolumeMethod::Circuit).unwrap(), 2);
        let chain3 = from_order_poset(&Poset::new(3, &[(1, 2), (2, 3)]).unwrap()).unwrap();
        assert_eq!(volume(&chain3, VolumeMethod::Circuit).unwrap(), 1);
    }

    #[test]
    fn circuit_and_sorted_triangulations_agree() {
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 5)] {
            let spec = delta(k, n);
            let a = triangulate(&spec, AlcovedTriangulation::Circuit).unwrap();
            let b = triangulate(&spec, AlcovedTriangulation::Sorted).unwrap();
            assert_eq!(a, b, "({k}, {n})");
        }
        let spec = AlcovedSpec::new(4, 2, &[(0, 2, (Some(0), Some(1)))], true).unwrap();
        let a = triangulate(&spec, AlcovedTriangulation::Circuit).unwrap();
        let b = triangulate(&spec, AlcovedTriangulation::Sorted).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn volumes_agree_on_examples() {
        for (k, n, expect) in [(2, 5, 11), (2, 4, 4), (1, 4, 1), (3, 4, 1)] {
            let spec = delta(k, n);
            assert_eq!(volume(&spec, VolumeMethod::Circuit).unwrap(), expect);
            assert_eq!(volume(&spec, VolumeMethod::LatticeSum).unwrap(), expect);
            assert_eq!(volume(&spec, VolumeMethod::Descent).unwrap(), expect);
        }
        let spec = AlcovedSpec::new(4, 2, &[(0, 2, (Some(0), Some(1)))], true).unwrap();
        assert_eq!(volume(&spec, VolumeMethod::Circuit).unwrap(), 2);
        assert_eq!(volume(&spec, VolumeMethod::LatticeSum).unwrap(), 2);
        assert_eq!(volume(&spec, VolumeMethod::Descent).unwrap(), 2);
        let w: Vec<String> = restricted_permutations(&spec)
            .unwrap()
            .iter()
            .map(|p| p.word_string())
            .collect();
        assert_eq!(w, vec!["132".to_string(), "231".to_string()]);
    }

    #[test]
    fn lattice_sum_certificate_on_the_square_slice() {
        let cert = volume_by_lattice_sum(&delta(2, 4)).unwrap();
        assert_eq!(cert.total, 4);
        for (w, count) in &cert.per_w {
            let expected = u64::from(descent_count(&w.inverse()) == 1);
            assert_eq!(*count, expected, "w = {}", w.word_string());
        }
        // Translation invariance.
        let spec = delta(2, 4).translated(3);
        assert_eq!(volume_by_lattice_sum(&spec).unwrap().total, 4);
    }

    #[test]
    fn descent_method_requires_unit_cube() {
        let spec = AlcovedSpec::new(3, 1, &[(0, 1, (Some(0), Some(1))), (1, 2, (Some(0), Some(1)))], false)
            .unwrap();
        assert!(matches!(
            volume(&spec, VolumeMethod::Descent),
            Err(Error::MethodDomain(_))
        ));
    }

    #[test]
    fn lower_dimensional_slices_have_volume_zero() {
        // Level 3 inside the cube with x1 + x2 <= 1 is a segment.
        let spec = AlcovedSpec::new(4, 3, &[(0, 2, (Some(0), Some(1)))], true).unwrap();
        assert_eq!(lattice_points(&spec).unwrap().len(), 2);
        assert_eq!(volume(&spec, VolumeMethod::Circuit).unwrap(), 0);
        assert_eq!(volume(&spec, VolumeMethod::LatticeSum).unwrap(), 0);
        assert_eq!(volume(&spec, VolumeMethod::Descent).unwrap(), 0);
    }

    #[test]
    fn alcove_coordinates_of_reference_cells() {
        let c = circuit_of_cycle(&LongCycle::from_word(vec![2, 1, 3, 4]).unwrap(), 2).unwrap();
        assert_eq!(alcove_coordinate(&c).unwrap().entries(), &[2, 5, 7, 8]);
        let c = circuit_of_cycle(&LongCycle::from_word(vec![1, 2, 3, 4]).unwrap(), 1).unwrap();
        assert_eq!(alcove_coordinate(&c).unwrap().entries(), &[1, 2, 3, 4]);
    }

    #[test]
    fn alcove_coordinate_prefixes_match_sorted_union_positions() {
        // The first n-1 entries are the positions, in the sorted multiset
        // union of the cell's subsets, after which the value increments.
        for c in crate::hypersimplex::enumerate_minimal_circuits(HypersimplexId::new(2, 5).unwrap())
            .unwrap()
        {
            let lambda = alcove_coordinate(&c).unwrap();
            let mut union: Vec<u32> = Vec::new();
            for v in c.vertices() {
                union.extend(v.to_subset().elements());
            }
            union.sort_unstable();
            for i in 1..5u32 {
                let pos = union.iter().filter(|&&e| e <= i).count() as i64;
                assert_eq!(lambda.entries()[(i - 1) as usize], pos);
            }
        }
    }

    #[test]
    fn lattice_route_matches_circuit_route() {
        for (k, n) in [(1, 4), (2, 4), (3, 4), (2, 5)] {
            let spec = delta(k, n);
            let via_lattice: BTreeSet<Simplex> =
                alcove_cells_from_lattice(&spec).unwrap().into_iter().collect();
            let via_circuits = triangulate(&spec, AlcovedTriangulation::Circuit).unwrap();
            assert_eq!(via_lattice, via_circuits, "({k}, {n})");
        }
    }

    #[test]
    fn gamma_graph_examples() {
        let g = gamma_graph(&delta(2, 4)).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (4, 4));
        assert_eq!(g.degree_histogram(), BTreeMap::from([(2, 4)]));

        let g = gamma_graph(&delta(2, 5)).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (11, 15));
        assert_eq!(g.degree_histogram(), BTreeMap::from([(2, 5), (3, 5), (5, 1)]));

        // A single alcove has a one-node graph.
        let chain3 = from_order_poset(&Poset::new(3, &[(1, 2), (2, 3)]).unwrap()).unwrap();
        let g = gamma_graph(&chain3).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn gamma_graph_matches_facet_rule_and_circuit_words() {
        for (k, n) in [(2, 4), (2, 5), (3, 5)] {
            let spec = delta(k, n);
            let gamma = gamma_graph(&spec).unwrap();
            let cells: Vec<(String, Simplex)> =
                triangulate(&spec, AlcovedTriangulation::Circuit)
                    .unwrap()
                    .into_iter()
                    .map(|s| {
                        (alcove_coordinate_of_simplex(&s).unwrap().label_string(), s)
                    })
                    .collect();
            let facet = facet_dual_graph(&cells).unwrap();
            assert_eq!(gamma, facet, "({k}, {n})");

            // And the same graph again under circuit-word labels.
            let by_words = dual_graph(HypersimplexId::new(k, n).unwrap()).unwrap();
            assert_eq!(gamma.edge_count(), by_words.edge_count());
            assert_eq!(gamma.degree_histogram(), by_words.degree_histogram());
        }
    }

    #[test]
    fn order_polytopes_count_linear_extensions() {
        let cases: Vec<(Poset, i64)> = vec![
            (Poset::new(3, &[(1, 2), (2, 3)]).unwrap(), 1),
            (Poset::new(3, &[]).unwrap(), 6),
            (Poset::new(3, &[(1, 2), (1, 3)]).unwrap(), 2),
        ];
        for (poset, expect) in cases {
            let spec = from_order_poset(&poset).unwrap();
            assert_eq!(volume(&spec, VolumeMethod::Circuit).unwrap(), expect);
            assert_eq!(poset.linear_extensions().len() as i64, expect);
        }
        // Non-natural labelings are rejected.
        assert!(from_order_poset(&Poset::new(2, &[(2, 1)]).unwrap()).is_err());
    }

    #[test]
    fn face_polynomials_examples() {
        let cells = tri_h(HypersimplexId::new(2, 4).unwrap(), TriangulationMethod::Circuit).unwrap();
        let (f, h) = face_polynomials(&cells).unwrap();
        assert_eq!(f, IntPolynomial::from_pairs(&[(1, 6), (2, 13), (3, 12), (4, 4)]));
        // Euler characteristic of a ball: 6 - 13 + 12 - 4 = 1.
        assert_eq!(f.eval(-1), -1);
        assert_eq!(h.eval(1), 4);

        let square = from_order_poset(&Poset::new(2, &[]).unwrap()).unwrap();
        let cells = triangulate(&square, AlcovedTriangulation::Circuit).unwrap();
        let (_, h) = face_polynomials(&cells).unwrap();
        assert_eq!(h, IntPolynomial::from_pairs(&[(0, 1), (1, 1)]));

        let one = tri_h(HypersimplexId::new(1, 4).unwrap(), TriangulationMethod::Circuit).unwrap();
        let (_, h) = face_polynomials(&one).unwrap();
        assert_eq!(h, IntPolynomial::constant(1));
    }

    #[test]
    fn sort_closure_of_point_sets() {
        let ps = lattice_points(&delta(2, 4)).unwrap();
        assert!(is_sort_closed_points(ps.points()).unwrap());
        let missing: Vec<Vec<i64>> = ps
            .points()
            .iter()
            .filter(|p| *p != &vec![1, 0, 1, 0])
            .cloned()
            .collect();
        assert!(!is_sort_closed_points(&missing).unwrap());
        assert!(is_sort_closed_points(&[vec![1, 1, 0]]).unwrap());
        assert!(is_sort_closed_points(&[]).unwrap());
        let err = is_sort_closed_points(&[vec![1, 0], vec![2, 0]]);
        assert!(matches!(err, Err(Error::Argument(_))));
    }

    #[test]
    fn point_graph_matches_hypersimplex_shift_graph() {
        let g = point_graph(&delta(2, 4)).unwrap();
        // Each edge moves one unit right cyclically; verify against direct
        // construction on indicator vectors.
        for &(a, label, b) in g.edges() {
            let mut p = g.points()[a].clone();
            let from = (label - 1) as usize;
            let to = label as usize % 4;
            p[from] -= 1;
            p[to] += 1;
            assert_eq!(p, g.points()[b]);
        }
        assert_eq!(g.node_count(), 6);
    }
}
