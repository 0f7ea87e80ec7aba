//! Matroids given by explicit base lists: weighted set-partition and
//! cyclically transversal families, exchange-axiom and sort-closure checks,
//! duality, polytope dimension and volume, and the sort-closure of weight
//! polytopes.

use std::collections::BTreeSet;

use crate::alcoved::{self, AlcovedSpec, Bound};
use crate::combinatorics::{self, sort_pair_subsets, KSubset};
use crate::error::{Error, Result};
use crate::linalg;

/// A matroid of rank `k` on `[1..n]`, stored by its set of bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    n: u32,
    k: u32,
    bases: BTreeSet<KSubset>,
}

impl Matroid {
    /// Wraps a base list; fails when empty or of mixed rank, and when the
    /// exchange axiom does not hold.
    pub fn new(bases: BTreeSet<KSubset>) -> Result<Self> {
        let m = Self::from_bases_unchecked(bases)?;
        if !is_matroid(&m.bases)? {
            return Err(Error::Argument("base set violates the exchange axiom".into()));
        }
        Ok(m)
    }

    fn from_bases_unchecked(bases: BTreeSet<KSubset>) -> Result<Self> {
        let Some(first) = bases.iter().next() else {
            return Err(Error::EmptyMatroid);
        };
        let (k, n) = (first.len() as u32, first.ambient());
        if bases.iter().any(|b| b.len() as u32 != k || b.ambient() != n) {
            return Err(Error::Argument("bases of mixed rank or ground set".into()));
        }
        Ok(Matroid { n, k, bases })
    }

    pub fn uniform(n: u32, k: u32) -> Result<Self> {
        Self::from_bases_unchecked(KSubset::all(n, k).into_iter().collect())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn bases(&self) -> &BTreeSet<KSubset> {
        &self.bases
    }

    pub fn base_count(&self) -> usize {
        self.bases.len()
    }
}

/// Consecutive-block set partition data `(Pi, b, c)`: block `j` covers the
/// next `part_sizes[j]` integers, and a base meets it between `b[j]` and
/// `c[j]` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSetPartition {
    part_sizes: Vec<u32>,
    b: Vec<i64>,
    c: Vec<i64>,
}

impl WeightedSetPartition {
    pub fn new(part_sizes: Vec<u32>, b: Vec<i64>, c: Vec<i64>) -> Result<Self> {
        if part_sizes.is_empty() || part_sizes.iter().any(|&a| a == 0) {
            return Err(Error::Argument("part sizes must be positive".into()));
        }
        if b.len() != part_sizes.len() || c.len() != part_sizes.len() {
            return Err(Error::Argument("weight vectors must match the part count".into()));
        }
        for j in 0..part_sizes.len() {
            if b[j] < 0 || b[j] > c[j] || c[j] > part_sizes[j] as i64 {
                return Err(Error::Argument(format!(
                    "need 0 <= b <= c <= part size at block {j}"
                )));
            }
        }
        Ok(WeightedSetPartition { part_sizes, b, c })
    }

    /// The unweighted case `b = 0`, `c = 1`.
    pub fn multi(part_sizes: Vec<u32>) -> Result<Self> {
        let r = part_sizes.len();
        WeightedSetPartition::new(part_sizes, vec![0; r], vec![1; r])
    }

    pub fn part_sizes(&self) -> &[u32] {
        &self.part_sizes
    }

    pub fn lower(&self) -> &[i64] {
        &self.b
    }

    pub fn upper(&self) -> &[i64] {
        &self.c
    }

    pub fn n(&self) -> u32 {
        self.part_sizes.iter().sum()
    }

    pub fn parts(&self) -> usize {
        self.part_sizes.len()
    }

    /// Cumulative block ends: block `j` is `(ends[j-1], ends[j]]`.
    pub fn block_ends(&self) -> Vec<u32> {
        let mut ends = Vec::with_capacity(self.parts());
        let mut run = 0;
        for &a in &self.part_sizes {
            run += a;
            ends.push(run);
        }
        ends
    }

    /// Which block an element of `[1..n]` lies in.
    pub fn block_of(&self, x: u32) -> usize {
        self.block_ends().iter().position(|&e| x <= e).expect("x in range")
    }

    /// True when `b = 0` and `c = 1` everywhere.
    pub fn is_unweighted(&self) -> bool {
        self.b.iter().all(|&x| x == 0) && self.c.iter().all(|&x| x == 1)
    }

    /// The starred partition: one extra singleton block with weights `(0, 1)`.
    pub fn starred(&self) -> WeightedSetPartition {
        let mut part_sizes = self.part_sizes.clone();
        part_sizes.push(1);
        let mut b = self.b.clone();
        b.push(0);
        let mut c = self.c.clone();
        c.push(1);
        WeightedSetPartition { part_sizes, b, c }
    }
}

/// All `k`-subsets meeting block `j` between `b_j` and `c_j` times.
pub fn wsp_bases(p: &WeightedSetPartition, k: u32) -> Result<Matroid> {
    let n = p.n();
    if k == 0 || k >= n {
        return Err(Error::Argument(format!("rank must satisfy 0 < k < {n}")));
    }
    let bases: BTreeSet<KSubset> = KSubset::all(n, k)
        .into_iter()
        .filter(|s| {
            let mut counts = vec![0i64; p.parts()];
            for &e in s.elements() {
                counts[p.block_of(e)] += 1;
            }
            counts
                .iter()
                .zip(p.lower().iter().zip(p.upper()))
                .all(|(&cnt, (&lo, &hi))| lo <= cnt && cnt <= hi)
        })
        .collect();
    Matroid::from_bases_unchecked(bases)
}

/// Dual weighted set partition data: complementing bases swaps the weights
/// to `(a_j - c_j, a_j - b_j)` at rank `n - k`.
pub fn wsp_dual(p: &WeightedSetPartition, k: u32) -> Result<(WeightedSetPartition, u32)> {
    let n = p.n();
    if k == 0 || k >= n {
        return Err(Error::Argument(format!("rank must satisfy 0 < k < {n}")));
    }
    let b: Vec<i64> =
        p.part_sizes.iter().zip(p.upper()).map(|(&a, &c)| a as i64 - c).collect();
    let c: Vec<i64> =
        p.part_sizes.iter().zip(p.lower()).map(|(&a, &b)| a as i64 - b).collect();
    Ok((WeightedSetPartition::new(p.part_sizes.clone(), b, c)?, n - k))
}

/// A list of cyclic intervals of `[1..n]`, each given by its endpoints;
/// wrapping intervals have `start > end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicIntervalSystem {
    n: u32,
    intervals: Vec<(u32, u32)>,
}

impl CyclicIntervalSystem {
    pub fn new(n: u32, intervals: Vec<(u32, u32)>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::Argument("need at least one interval".into()));
        }
        for &(s, e) in &intervals {
            if s < 1 || s > n || e < 1 || e > n {
                return Err(Error::Argument(format!("interval ({s}, {e}) outside [1..{n}]")));
            }
        }
        Ok(CyclicIntervalSystem { n, intervals })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn intervals(&self) -> &[(u32, u32)] {
        &self.intervals
    }

    pub fn contains(&self, idx: usize, x: u32) -> bool {
        let (s, e) = self.intervals[idx];
        if s <= e {
            s <= x && x <= e
        } else {
            x >= s || x <= e
        }
    }

    pub fn k(&self) -> u32 {
        self.intervals.len() as u32
    }
}

/// Bases of the transversal matroid of the intervals: `k`-subsets admitting
/// a system of distinct representatives, found by backtracking matching.
pub fn transversal_bases(sys: &CyclicIntervalSystem) -> Result<Matroid> {
    let k = sys.k();
    let n = sys.n();
    if k == 0 || k > n {
        return Err(Error::Argument(format!("need 0 < k <= {n} intervals")));
    }
    let bases: BTreeSet<KSubset> = KSubset::all(n, k)
        .into_iter()
        .filter(|s| has_sdr(sys, s.elements(), &mut vec![false; k as usize], 0))
        .collect();
    Matroid::from_bases_unchecked(bases)
}

fn has_sdr(sys: &CyclicIntervalSystem, elems: &[u32], taken: &mut [bool], at: usize) -> bool {
    if at == elems.len() {
        return true;
    }
    for slot in 0..taken.len() {
        if !taken[slot] && sys.contains(slot, elems[at]) {
            taken[slot] = true;
            if has_sdr(sys, elems, taken, at + 1) {
                taken[slot] = false;
                return true;
            }
            taken[slot] = false;
        }
    }
    false
}

/// Exhaustive exchange-axiom check: for all bases `I, J` and `i` in `I`,
/// some `j` in `J` makes `I - i + j` a base.
pub fn is_matroid(bases: &BTreeSet<KSubset>) -> Result<bool> {
    let Some(first) = bases.iter().next() else {
        return Ok(false);
    };
    let (k, n) = (first.len(), first.ambient());
    if bases.iter().any(|b| b.len() != k || b.ambient() != n) {
        return Err(Error::Argument("bases of mixed rank or ground set".into()));
    }
    for i_set in bases {
        for j_set in bases {
            for &i in i_set.elements() {
                let found = j_set.elements().iter().any(|&j| {
                    let mut elems: Vec<u32> =
                        i_set.elements().iter().copied().filter(|&e| e != i).collect();
                    if elems.contains(&j) {
                        return false;
                    }
                    elems.push(j);
                    let candidate = KSubset::new(elems, n).expect("valid subset");
                    bases.contains(&candidate)
                });
                if !found {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Closure of the base set under the pairwise sorting operation.
pub fn is_sort_closed(m: &Matroid) -> Result<bool> {
    is_sort_closed_bases(&m.bases)
}

pub fn is_sort_closed_bases(bases: &BTreeSet<KSubset>) -> Result<bool> {
    let items: Vec<&KSubset> = bases.iter().collect();
    for (i, &a) in items.iter().enumerate() {
        for &b in &items[i + 1..] {
            let (u, v) = sort_pair_subsets(a, b)?;
            if !bases.contains(&u) || !bases.contains(&v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Affine dimension of the set of base indicator vectors.
pub fn polytope_dimension(m: &Matroid) -> usize {
    let points: Vec<Vec<i64>> = m.bases.iter().map(KSubset::indicator).collect();
    linalg::affine_dimension(&points)
}

/// Normalized volume of the matroid polytope: the number of sorted subsets
/// of the bases of size `dim + 1`.  Requires sort-closure, without which the
/// ambient triangulation does not restrict to the polytope.
pub fn matroid_volume(m: &Matroid) -> Result<i64> {
    if !is_sort_closed(m)? {
        return Err(Error::NotSortClosed(
            "matroid bases are not sort-closed; the induced triangulation does not exist".into(),
        ));
    }
    let target = polytope_dimension(m) + 1;
    let ground: Vec<Vec<u32>> = m.bases.iter().map(|s| s.elements().to_vec()).collect();
    let chains = combinatorics::sorted_chains_raw(&ground, Some(target));
    Ok(chains.len() as i64)
}

/// The alcoved bound data of a weighted set partition matroid: block sums
/// are ranges of the running-sum coordinates, inside the unit cube.
pub fn wsp_spec(p: &WeightedSetPartition, k: u32) -> Result<AlcovedSpec> {
    let n = p.n() as usize;
    let ends = p.block_ends();
    let r = p.parts();
    let mut bounds: Vec<(usize, usize, Bound)> = Vec::new();
    for j in 0..r {
        let lo = p.lower()[j];
        let hi = p.upper()[j];
        let start = if j == 0 { 0 } else { ends[j - 1] as usize };
        let end = ends[j] as usize;
        if end <= n - 1 {
            bounds.push((start, end, (Some(lo), Some(hi))));
        } else if start >= 1 {
            // The last block reaches the slack coordinate: its sum is the
            // level minus a running sum.
            bounds.push((0, start, (Some(k as i64 - hi), Some(k as i64 - lo))));
        } else if !(lo <= k as i64 && k as i64 <= hi) {
            // Single block covering everything with an infeasible level.
            bounds.push((0, 1, (Some(1), Some(0))));
        }
    }
    AlcovedSpec::new(n, k as i64, &bounds, true)
}

/// The tight alcoved hull of an arbitrary base set: per coordinate range,
/// the exact min and max over the indicator vectors.  For a sort-closed
/// collection this recovers the matroid polytope.
pub fn tight_hull_spec(bases: &BTreeSet<KSubset>) -> Result<AlcovedSpec> {
    let Some(first) = bases.iter().next() else {
        return Err(Error::EmptyMatroid);
    };
    let (n, k) = (first.ambient() as usize, first.len() as i64);
    let points: Vec<Vec<i64>> = bases.iter().map(KSubset::indicator).collect();
    let mut bounds = Vec::new();
    for i in 0..n - 1 {
        for j in i + 1..n {
            if j > n - 1 {
                continue;
            }
            let sums = points.iter().map(|p| p[i..j].iter().sum::<i64>());
            let lo = sums.clone().min().expect("nonempty");
            let hi = sums.max().expect("nonempty");
            bounds.push((i, j, (Some(lo), Some(hi))));
        }
    }
    AlcovedSpec::new(n, k, &bounds, true)
}

/// A non-negative integer weight vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() || coords.iter().any(|&c| c < 0) {
            return Err(Error::Argument("weights must be non-negative and nonempty".into()));
        }
        Ok(Weight { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    fn decreasing(&self) -> Vec<i64> {
        let mut d = self.coords.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// All non-negative integer vectors of the same total whose decreasing
/// rearrangement is dominated (prefix sums bounded) by that of `lambda`.
pub fn weight_polytope_points(lambda: &Weight) -> Vec<Vec<i64>> {
    let n = lambda.coords.len();
    let total: i64 = lambda.coords.iter().sum();
    let top = lambda.decreasing();
    let mut out = Vec::new();
    let mut mu = vec![0i64; n];
    fn rec(top: &[i64], mu: &mut Vec<i64>, pos: usize, remaining: i64, out: &mut Vec<Vec<i64>>) {
        let n = mu.len();
        if pos == n {
            if remaining == 0 && dominated(top, mu) {
                out.push(mu.clone());
            }
            return;
        }
        let max = remaining.min(top[0]);
        for v in 0..=max {
            mu[pos] = v;
            rec(top, mu, pos + 1, remaining - v, out);
        }
        mu[pos] = 0;
    }
    rec(&top, &mut mu, 0, total, &mut out);
    out.sort();
    out
}

fn dominated(top: &[i64], mu: &[i64]) -> bool {
    let mut sorted = mu.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut lhs = 0i64;
    let mut rhs = 0i64;
    for i in 0..top.len() {
        lhs += top[i];
        rhs += sorted[i];
        if rhs > lhs {
            return false;
        }
    }
    true
}

/// Whether the weight polytope is sort-closed, decided along two routes that
/// must agree: closure of the actual lattice points, and the closed form
/// (the decreasing weight is `a` copies of one value, at most one smaller
/// nonzero value, then zeros).
pub fn is_weight_sort_closed(lambda: &Weight) -> Result<bool> {
    let points = weight_polytope_points(lambda);
    let route_a = alcoved::is_sort_closed_points(&points)?;
    let route_b = closed_form_sort_closed(&lambda.decreasing());
    if route_a != route_b {
        return Err(Error::Argument(format!(
            "sort-closure routes disagree on {:?}: points say {route_a}, closed form says {route_b}",
            lambda.coords
        )));
    }
    Ok(route_a)
}

/// `lambda` (decreasing) is `a*w_i + b*w_{i+1}` for fundamental weights
/// `w_j` exactly when it reads `(v, ..., v, u, 0, ..., 0)` with `v >= u >= 0`
/// and the middle value `u` occupying at most the single slot after the `v`s.
fn closed_form_sort_closed(dec: &[i64]) -> bool {
    let nonzero: Vec<i64> = dec.iter().copied().filter(|&x| x > 0).collect();
    if nonzero.len() <= 1 {
        return true;
    }
    let v = nonzero[0];
    let u = nonzero[nonzero.len() - 1];
    if nonzero[..nonzero.len() - 1].iter().any(|&x| x != v) {
        return false;
    }
    u <= v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcoved::VolumeMethod;

    fn subset(elems: &[u32], n: u32) -> KSubset {
        KSubset::new(elems.to_vec(), n).unwrap()
    }

    #[test]
    fn wsp_base_examples() {
        let p = WeightedSetPartition::multi(vec![2, 1, 1]).unwrap();
        let m = wsp_bases(&p, 2).unwrap();
        assert_eq!(m.base_count(), 5);
        assert!(!m.bases().contains(&subset(&[1, 2], 4)));

        let uniform = WeightedSetPartition::multi(vec![1, 1, 1, 1]).unwrap();
        let m = wsp_bases(&uniform, 2).unwrap();
        assert_eq!(m.bases(), Matroid::uniform(4, 2).unwrap().bases());

        let p = WeightedSetPartition::new(vec![2, 2], vec![1, 1], vec![1, 1]).unwrap();
        let m = wsp_bases(&p, 2).unwrap();
        let want: BTreeSet<KSubset> =
            [[1, 3], [1, 4], [2, 3], [2, 4]].iter().map(|e| subset(e, 4)).collect();
        assert_eq!(m.bases(), &want);

        // Single block at c = 1 admits no 2-subset.
        let p = WeightedSetPartition::multi(vec![4]).unwrap();
        assert!(matches!(wsp_bases(&p, 2), Err(Error::EmptyMatroid)));
    }

    #[test]
    fn transversal_examples() {
        let sys = CyclicIntervalSystem::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let m = transversal_bases(&sys).unwrap();
        let want: BTreeSet<KSubset> =
            [[1, 2], [1, 3], [2, 3]].iter().map(|e| subset(e, 3)).collect();
        assert_eq!(m.bases(), &want);

        let sys = CyclicIntervalSystem::new(4, vec![(1, 4), (1, 4)]).unwrap();
        let m = transversal_bases(&sys).unwrap();
        assert_eq!(m.bases(), Matroid::uniform(4, 2).unwrap().bases());

        let sys = CyclicIntervalSystem::new(3, vec![(1, 1), (1, 1)]).unwrap();
        assert!(matches!(transversal_bases(&sys), Err(Error::EmptyMatroid)));
    }

    #[test]
    fn transversal_bases_satisfy_hall_condition() {
        // A subset is a base exactly when every union of interval groups is
        // met often enough.
        let sys = CyclicIntervalSystem::new(6, vec![(5, 2), (1, 3), (4, 6)]).unwrap();
        let m = transversal_bases(&sys).unwrap();
        for s in KSubset::all(6, 3) {
            let mut hall = true;
            for mask in 1u32..8 {
                let needed = mask.count_ones() as usize;
                let hit = s
                    .elements()
                    .iter()
                    .filter(|&&x| (0..3).any(|t| mask & (1 << t) != 0 && sys.contains(t, x)))
                    .count();
                if hit < needed {
                    hall = false;
                }
            }
            assert_eq!(m.bases().contains(&s), hall, "{:?}", s.elements());
        }
    }

    #[test]
    fn exchange_axiom_examples() {
        assert!(is_matroid(Matroid::uniform(4, 2).unwrap().bases()).unwrap());
        let bad: BTreeSet<KSubset> = [[1, 2], [3, 4]].iter().map(|e| subset(e, 4)).collect();
        assert!(!is_matroid(&bad).unwrap());
        let p = WeightedSetPartition::multi(vec![2, 1, 1]).unwrap();
        assert!(is_matroid(wsp_bases(&p, 2).unwrap().bases()).unwrap());
    }

    #[test]
    fn sort_closure_examples() {
        let p = WeightedSetPartition::multi(vec![2, 1, 1]).unwrap();
        assert!(is_sort_closed(&wsp_bases(&p, 2).unwrap()).unwrap());
        let sys = CyclicIntervalSystem::new(5, vec![(4, 1), (2, 4)]).unwrap();
        assert!(is_sort_closed(&transversal_bases(&sys).unwrap()).unwrap());
        let dropped: BTreeSet<KSubset> =
            [[1, 2], [3, 4], [1, 4], [2, 3], [2, 4]].iter().map(|e| subset(e, 4)).collect();
        assert!(!is_sort_closed_bases(&dropped).unwrap());
    }

    #[test]
    fn duality_examples() {
        let p = WeightedSetPartition::multi(vec![2, 1, 1]).unwrap();
        let (dual, dk) = wsp_dual(&p, 2).unwrap();
        assert_eq!(dual.lower(), &[1, 0, 0]);
        assert_eq!(dual.upper(), &[2, 1, 1]);
        assert_eq!(dk, 2);

        // Dual bases are the complements of the primal bases.
        let primal = wsp_bases(&p, 2).unwrap();
        let dual_m = wsp_bases(&dual, dk).unwrap();
        let complements: BTreeSet<KSubset> =
            primal.bases().iter().map(KSubset::complement).collect();
        assert_eq!(dual_m.bases(), &complements);

        // Applying duality twice returns the original data.
        let (back, bk) = wsp_dual(&dual, dk).unwrap();
        assert_eq!(back, p);
        assert_eq!(bk, 2);

        let uniform = WeightedSetPartition::multi(vec![1; 5]).unwrap();
        let (du, duk) = wsp_dual(&uniform, 2).unwrap();
        assert_eq!(du, uniform);
        assert_eq!(duk, 3);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(polytope_dimension(&Matroid::uniform(4, 2).unwrap()), 3);
        let segment =
            Matroid::from_bases_unchecked([[1, 2], [3, 4]].iter().map(|e| subset(e, 4)).collect())
                .unwrap();
        assert_eq!(polytope_dimension(&segment), 1);
        let p = WeightedSetPartition::multi(vec![2, 1, 1]).unwrap();
        assert_eq!(polytope_dimension(&wsp_bases(&p, 2).unwrap()), 3);
    }

    #[test]
    fn volume_examples() {
        assert_eq!(matroid_volume(&Matroid::uniform(4, 2).unwrap()).unwrap(), 4);
        assert_eq!(matroid_volume(&Matroid::uniform(5, 2).unwrap()).unwrap(), 11);
        let p = WeightedSetPartition::multi(vec![2, 1, 1]).unwrap();
        assert_eq!(matroid_volume(&wsp_bases(&p, 2).unwrap()).unwrap(), 2);
        let segment =
            Matroid::from_bases_unchecked([[1, 2], [3, 4]].iter().map(|e| subset(e, 4)).collect())
                .unwrap();
        assert!(matches!(matroid_volume(&segment), Err(Error::NotSortClosed(_))));
    }

    #[test]
    fn wsp_volume_matches_alcoved_volume() {
        let p = WeightedSetPartition::multi(vec![2, 1, 1]).unwrap();
        let m = wsp_bases(&p, 2).unwrap();
        let spec = wsp_spec(&p, 2).unwrap();
        assert_eq!(
            matroid_volume(&m).unwrap(),
            alcoved::volume(&spec, VolumeMethod::Circuit).unwrap()
        );
        // The spec's lattice points are exactly the base indicators.
        let ps = alcoved::lattice_points(&spec).unwrap();
        let mut indicators: Vec<Vec<i64>> = m.bases().iter().map(KSubset::indicator).collect();
        indicators.sort();
        assert_eq!(ps.points(), &indicators[..]);
    }

    #[test]
    fn tight_hull_recovers_sort_closed_polytopes() {
        let sys = CyclicIntervalSystem::new(5, vec![(4, 1), (2, 4)]).unwrap();
        let m = transversal_bases(&sys).unwrap();
        let spec = tight_hull_spec(m.bases()).unwrap();
        let ps = alcoved::lattice_points(&spec).unwrap();
        let mut indicators: Vec<Vec<i64>> = m.bases().iter().map(KSubset::indicator).collect();
        indicators.sort();
        assert_eq!(ps.points(), &indicators[..]);
        if polytope_dimension(&m) == m.n() as usize - 1 {
            assert_eq!(
                matroid_volume(&m).unwrap(),
                alcoved::volume(&spec, VolumeMethod::Circuit).unwrap()
            );
        }
    }

    #[test]
    fn weight_polytope_point_examples() {
        let lambda = Weight::new(vec![1, 1, 0, 0]).unwrap();
        let points = weight_polytope_points(&lambda);
        assert_eq!(points.len(), 6);
        assert!(points.iter().all(|p| p.iter().sum::<i64>() == 2));

        let lambda = Weight::new(vec![2, 0, 0]).unwrap();
        let points = weight_polytope_points(&lambda);
        assert_eq!(points.len(), 6);

        let lambda = Weight::new(vec![1, 0, 0, 0, 0]).unwrap();
        assert_eq!(weight_polytope_points(&lambda).len(), 5);
    }

    #[test]
    fn weight_sort_closure_examples() {
        assert!(is_weight_sort_closed(&Weight::new(vec![1, 1, 0, 0]).unwrap()).unwrap());
        assert!(!is_weight_sort_closed(&Weight::new(vec![2, 1, 1, 0]).unwrap()).unwrap());
        assert!(!is_weight_sort_closed(&Weight::new(vec![3, 2, 1, 0]).unwrap()).unwrap());
        assert!(is_weight_sort_closed(&Weight::new(vec![2, 2, 1, 0]).unwrap()).unwrap());
        assert!(is_weight_sort_closed(&Weight::new(vec![0, 0, 0]).unwrap()).unwrap());
    }
}
