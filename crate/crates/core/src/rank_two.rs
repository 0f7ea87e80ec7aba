//! Rank-two triangulations through circularly embedded graphs: cells of the
//! second hypersimplex (and of its part-restricted relatives) correspond to
//! thrackles, graphs on a circle whose edges pairwise cross.  The module
//! enumerates them, evaluates two closed-form volume formulas, implements
//! the edge move realizing cell adjacency, and checks the f-polynomial
//! generating function.

use std::collections::{BTreeMap, BTreeSet};

use crate::combinatorics::{binomial, is_sorted_pair_raw};
use crate::error::{Error, Result};
use crate::matroid::WeightedSetPartition;
use crate::polynomial::IntPolynomial;

/// Two chords of a circle labelled `1..n` clockwise cross (sharing an
/// endpoint counts) exactly when, as 2-subsets, one order interleaves.
pub fn edges_cross(e1: (u32, u32), e2: (u32, u32), n: u32) -> Result<bool> {
    let a = normalize_edge(e1, n)?;
    let b = normalize_edge(e2, n)?;
    Ok(cross_normalized(a, b))
}

fn normalize_edge(e: (u32, u32), n: u32) -> Result<(u32, u32)> {
    let (x, y) = e;
    if x < 1 || y < 1 || x > n || y > n || x == y {
        return Err(Error::Argument(format!("edge ({x}, {y}) is not a chord of [1..{n}]")));
    }
    Ok((x.min(y), x.max(y)))
}

fn cross_normalized(a: (u32, u32), b: (u32, u32)) -> bool {
    is_sorted_pair_raw(&[a.0, a.1], &[b.0, b.1]) || is_sorted_pair_raw(&[b.0, b.1], &[a.0, a.1])
}

/// A graph on the circle `[1..n]` whose edges pairwise cross.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Thrackle {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl Thrackle {
    pub fn new(n: u32, edges: BTreeSet<(u32, u32)>) -> Result<Self> {
        let list: Vec<(u32, u32)> = edges
            .iter()
            .map(|&e| normalize_edge(e, n))
            .collect::<Result<_>>()?;
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                if !cross_normalized(a, b) {
                    return Err(Error::Argument(format!(
                        "edges {a:?} and {b:?} do not cross"
                    )));
                }
            }
        }
        Ok(Thrackle { n, edges: list.into_iter().collect() })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(u32, u32)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree_of(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Maximal thrackles on `[1..n]` have exactly `n` edges.
    pub fn is_maximal(&self) -> bool {
        self.edge_count() == self.n as usize
    }

    /// The vertex set of the odd cycle inside a maximal thrackle: exactly
    /// the vertices of degree at least two.
    pub fn cycle_vertices(&self) -> Vec<u32> {
        (1..=self.n).filter(|&v| self.degree_of(v) >= 2).collect()
    }
}

/// An odd subset of `[1..n]` spanning a cycle of pairwise-crossing chords:
/// vertex `v_i` joins `v_(i+k+1)` (indices mod `2k+1`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OddCycle {
    n: u32,
    vertices: Vec<u32>,
}

impl OddCycle {
    pub fn new(n: u32, mut vertices: Vec<u32>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() < 3 || vertices.len() % 2 == 0 {
            return Err(Error::Argument("an odd cycle needs an odd number (>= 3) of vertices".into()));
        }
        if vertices.iter().any(|&v| v < 1 || v > n) {
            return Err(Error::Argument(format!("vertices outside [1..{n}]")));
        }
        Ok(OddCycle { n, vertices })
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Chord length parameter: the cycle has `2k + 1` vertices.
    pub fn half(&self) -> usize {
        (self.vertices.len() - 1) / 2
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let m = self.vertices.len();
        let k = self.half();
        (0..m)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + k + 1) % m];
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

/// Completes an odd cycle to the maximal thrackle `G(C)`: each vertex not on
/// the cycle joins the unique opposite cycle vertex, the one whose chord
/// crosses every cycle edge.  For an off-cycle vertex circularly between
/// `v_i` and `v_(i+1)` that is `v_(i+k+1)`.
///
/// The cycle must meet every block of the partition at most `k` times; the
/// off-cycle edges are then automatically bases of the rank-two matroid.
pub fn thrackle_from_cycle(cycle: &OddCycle, p: &WeightedSetPartition) -> Result<Thrackle> {
    ensure_rank_two_family(p)?;
    let n = p.n();
    if cycle.n != n {
        return Err(Error::Argument("cycle and partition sizes differ".into()));
    }
    let k = cycle.half();
    let mut block_hits = vec![0usize; p.parts()];
    for &v in cycle.vertices() {
        block_hits[p.block_of(v)] += 1;
    }
    if block_hits.iter().any(|&h| h > k) {
        return Err(Error::InvalidCycle(format!(
            "cycle {:?} meets a block more than {k} times",
            cycle.vertices()
        )));
    }

    let mut edges: BTreeSet<(u32, u32)> = cycle.edges().into_iter().collect();
    let on_cycle: BTreeSet<u32> = cycle.vertices().iter().copied().collect();
    let m = cycle.len();
    for u in 1..=n {
        if on_cycle.contains(&u) {
            continue;
        }
        // Index of the cycle vertex preceding u clockwise (wrapping).
        let i0 = match cycle.vertices().iter().rposition(|&v| v < u) {
            Some(i) => i,
            None => m - 1,
        };
        let opp = cycle.vertices()[(i0 + k + 1) % m];
        edges.insert((u.min(opp), u.max(opp)));
    }
    let g = Thrackle::new(n, edges)?;
    debug_assert!(g.is_maximal());
    Ok(g)
}

fn ensure_rank_two_family(p: &WeightedSetPartition) -> Result<()> {
    if !p.is_unweighted() {
        return Err(Error::MethodDomain(
            "thrackle constructions apply to the unweighted family (b = 0, c = 1)".into(),
        ));
    }
    Ok(())
}

/// All maximal thrackles whose edges are bases: one per odd cycle meeting
/// each block at most `k` times.
pub fn enumerate_maximal_thrackles(p: &WeightedSetPartition) -> Result<Vec<Thrackle>> {
    ensure_rank_two_family(p)?;
    let n = p.n();
    let mut out = Vec::new();
    let mut size = 3;
    while size <= n as usize {
        let k = (size - 1) / 2;
        for vertices in crate::combinatorics::KSubset::all(n, size as u32) {
            let mut hits = vec![0usize; p.parts()];
            for &v in vertices.elements() {
                hits[p.block_of(v)] += 1;
            }
            if hits.iter().any(|&h| h > k) {
                continue;
            }
            let cycle = OddCycle::new(n, vertices.elements().to_vec())?;
            out.push(thrackle_from_cycle(&cycle, p)?);
        }
        size += 2;
    }
    Ok(out)
}

/// Volume of the rank-two family by summing, over odd cycle sizes, the ways
/// to pick the cycle's vertices within the block caps.
pub fn volume_by_odd_cycles(p: &WeightedSetPartition) -> Result<i64> {
    ensure_rank_two_family(p)?;
    let sizes: Vec<i64> = p.part_sizes().iter().map(|&a| a as i64).collect();
    let n: i64 = sizes.iter().sum();
    let mut total = 0i64;
    let mut k = 1i64;
    while 2 * k + 1 <= n {
        total += cap_compositions(&sizes, k, 2 * k + 1);
        k += 1;
    }
    Ok(total)
}

/// Sum over `c_1 + ... + c_r = target`, `0 <= c_i <= min(cap, a_i)`, of the
/// product of binomials `C(a_i, c_i)`.
fn cap_compositions(sizes: &[i64], cap: i64, target: i64) -> i64 {
    fn rec(sizes: &[i64], cap: i64, target: i64, idx: usize, acc: i64) -> i64 {
        if idx == sizes.len() {
            return if target == 0 { acc } else { 0 };
        }
        let mut total = 0;
        let hi = cap.min(sizes[idx]).min(target);
        for c in 0..=hi {
            total += rec(sizes, cap, target - c, idx + 1, acc * binomial(sizes[idx], c));
        }
        total
    }
    rec(sizes, cap, target, 0, 1)
}

/// Volume of the rank-two family by complement counting: all odd subsets of
/// the circle minus those meeting some block in a strict majority.
pub fn volume_by_complement(p: &WeightedSetPartition) -> Result<i64> {
    ensure_rank_two_family(p)?;
    let sizes: Vec<i64> = p.part_sizes().iter().map(|&a| a as i64).collect();
    let n: i64 = sizes.iter().sum();
    let mut total = 1i64 << (n - 1);
    for &a in &sizes {
        let mut b = 0;
        while 2 * b + 1 <= a {
            for d in 0..=(n - a).min(a - 2 * b - 1) {
                total -= binomial(a, 2 * b + d + 1) * binomial(n - a, d);
            }
            b += 1;
        }
    }
    Ok(total)
}

/// Attempts the adjacency move on one edge of a maximal thrackle: with the
/// endpoints read as `(a, b)`, when the edges `(a-1, b)` and `(b+1, a)` are
/// present and the four labels are distinct, the edge `(a, b)` is replaced
/// by `(a-1, b+1)`.  Returns the adjacent maximal thrackle, or `None` when
/// no orientation of the edge admits the move.
pub fn adjacency_move(g: &Thrackle, edge: (u32, u32)) -> Result<Option<Thrackle>> {
    if !g.is_maximal() {
        return Err(Error::Argument("adjacency moves apply to maximal thrackles".into()));
    }
    let e = normalize_edge(edge, g.n)?;
    if !g.edges.contains(&e) {
        return Err(Error::Argument(format!("edge {e:?} is not in the thrackle")));
    }
    let mut results: Vec<Thrackle> = Vec::new();
    for (a, b) in [(e.0, e.1), (e.1, e.0)] {
        if let Some(t) = try_move(g, a, b) {
            if !results.contains(&t) {
                results.push(t);
            }
        }
    }
    debug_assert!(results.len() <= 1, "the replacement of an edge is unique");
    Ok(results.into_iter().next())
}

fn try_move(g: &Thrackle, a: u32, b: u32) -> Option<Thrackle> {
    let n = g.n;
    let dec = |x: u32| if x == 1 { n } else { x - 1 };
    let inc = |x: u32| if x == n { 1 } else { x + 1 };
    let (a1, b1) = (dec(a), inc(b));
    let four = [a, a1, b, b1];
    for i in 0..4 {
        for j in i + 1..4 {
            if four[i] == four[j] {
                return None;
            }
        }
    }
    let need1 = (a1.min(b), a1.max(b));
    let need2 = (b1.min(a), b1.max(a));
    let new_edge = (a1.min(b1), a1.max(b1));
    if !g.edges.contains(&need1) || !g.edges.contains(&need2) || g.edges.contains(&new_edge) {
        return None;
    }
    let mut edges = g.edges.clone();
    edges.remove(&(a.min(b), a.max(b)));
    edges.insert(new_edge);
    Thrackle::new(n, edges).ok()
}

/// Degree of the cell of a maximal thrackle in the dual graph of the full
/// second hypersimplex: 0 for the triangle on three labels, 2 when the
/// 3-cycle has two bare vertices, and the cycle length otherwise.
pub fn simplex_degree(g: &Thrackle) -> Result<usize> {
    if !g.is_maximal() {
        return Err(Error::Argument("degrees are defined for maximal thrackles".into()));
    }
    if g.n == 3 {
        return Ok(0);
    }
    let cycle = g.cycle_vertices();
    if cycle.len() == 3 {
        let bare = cycle.iter().filter(|&&v| g.degree_of(v) == 2).count();
        if bare == 2 {
            return Ok(2);
        }
    }
    Ok(cycle.len())
}

/// Histogram of dual-graph degrees over all maximal thrackles of the family:
/// the degree counts the edge moves whose result stays inside the family.
pub fn degree_histogram(p: &WeightedSetPartition) -> Result<BTreeMap<usize, usize>> {
    let all: BTreeSet<Thrackle> = enumerate_maximal_thrackles(p)?.into_iter().collect();
    let mut hist = BTreeMap::new();
    for g in &all {
        let mut degree = 0;
        for &e in g.edges() {
            if let Some(t) = adjacency_move(g, e)? {
                if all.contains(&t) {
                    degree += 1;
                }
            }
        }
        *hist.entry(degree).or_insert(0) += 1;
    }
    Ok(hist)
}

/// All thrackles on `[1..n]` (every chord allowed), grouped by edge count:
/// the f-polynomial of the rank-two simplicial complex.
pub fn thrackle_f_polynomial(n: u32) -> IntPolynomial {
    let mut chords: Vec<(u32, u32)> = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            chords.push((a, b));
        }
    }
    let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
    fn rec(
        chords: &[(u32, u32)],
        chosen: &mut Vec<(u32, u32)>,
        from: usize,
        counts: &mut BTreeMap<u32, i64>,
    ) {
        for i in from..chords.len() {
            let c = chords[i];
            if chosen.iter().all(|&e| cross_normalized(e, c)) {
                chosen.push(c);
                *counts.entry(chosen.len() as u32).or_insert(0) += 1;
                rec(chords, chosen, i + 1, counts);
                chosen.pop();
            }
        }
    }
    rec(&chords, &mut Vec::new(), 0, &mut counts);
    let mut f = IntPolynomial::zero();
    for (s, c) in counts {
        f.set(s, c);
    }
    f
}

/// Face polynomials of the rank-two complexes from the closed generating
/// function: the bracket, with `q` replaced by `x/(1-x)`, expands into a
/// power series in `x` whose coefficient of `x^n` is the f-polynomial.
pub fn f_polynomial_series(up_to_n: u32) -> Vec<IntPolynomial> {
    let len = up_to_n as usize + 1;
    let zero = IntPolynomial::zero();
    let one_series = {
        let mut s = vec![zero.clone(); len];
        s[0] = IntPolynomial::constant(1);
        s
    };
    // q = x/(1-x) = x + x^2 + x^3 + ...
    let mut q = vec![zero.clone(); len];
    for entry in q.iter_mut().skip(1) {
        *entry = IntPolynomial::constant(1);
    }
    let mul = |a: &[IntPolynomial], b: &[IntPolynomial]| -> Vec<IntPolynomial> {
        let mut out = vec![IntPolynomial::zero(); len];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if i + j >= len || bj.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&ai.mul(bj));
            }
        }
        out
    };
    let scale = |a: &[IntPolynomial], p: &IntPolynomial| -> Vec<IntPolynomial> {
        a.iter().map(|c| c.mul(p)).collect()
    };
    let add = |a: &[IntPolynomial], b: &[IntPolynomial]| -> Vec<IntPolynomial> {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    };
    let sub = |a: &[IntPolynomial], b: &[IntPolynomial]| -> Vec<IntPolynomial> {
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    };

    let t = IntPolynomial::monomial(1, 1);
    let t2 = IntPolynomial::monomial(2, 1);
    let q2 = mul(&q, &q);
    let q3 = mul(&q2, &q);

    // Numerator: t q^2 (1 + q) (t^2 q^2 + t^2 q - t q + 1).
    let inner = add(
        &add(&scale(&q2, &t2), &scale(&q, &t2)),
        &sub(&one_series, &scale(&q, &t)),
    );
    let numerator = scale(&mul(&add(&q2, &q3), &inner), &t);

    // Denominator: (1 - t q)^2 (1 - 2 t q - t q^2).
    let one_minus_tq = sub(&one_series, &scale(&q, &t));
    let last = sub(
        &sub(&one_series, &scale(&q, &IntPolynomial::monomial(1, 2))),
        &scale(&q2, &t),
    );
    let denominator = mul(&mul(&one_minus_tq, &one_minus_tq), &last);
    debug_assert_eq!(denominator[0], IntPolynomial::constant(1));

    // Series division: out[m] = num[m] - sum_{l>=1} den[l] out[m-l].
    let mut out = vec![IntPolynomial::zero(); len];
    for m in 0..len {
        let mut acc = numerator[m].clone();
        for l in 1..=m {
            acc = acc.sub(&denominator[l].mul(&out[m - l]));
        }
        out[m] = acc;
    }
    out
}

/// Direct face enumeration and the series expansion, for comparison.
pub fn f_polynomial_check(n: u32) -> Result<(IntPolynomial, IntPolynomial)> {
    if n < 2 {
        return Err(Error::Argument("need n >= 2".into()));
    }
    let direct = thrackle_f_polynomial(n);
    let series = f_polynomial_series(n).swap_remove(n as usize);
    Ok((direct, series))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::WeightedSetPartition as Wsp;

    fn multi(parts: &[u32]) -> Wsp {
        Wsp::multi(parts.to_vec()).unwrap()
    }

    #[test]
    fn crossing_examples() {
        assert!(edges_cross((1, 3), (2, 4), 4).unwrap());
        assert!(!edges_cross((1, 2), (3, 4), 4).unwrap());
        assert!(edges_cross((1, 2), (2, 3), 4).unwrap());
        assert!(edges_cross((3, 1), (4, 2), 4).unwrap());
        // Nested chords do not cross.
        assert!(!edges_cross((1, 4), (2, 3), 4).unwrap());
        assert!(!edges_cross((1, 2), (4, 5), 5).unwrap());
    }

    #[test]
    fn crossing_matches_sortedness_exhaustively() {
        use crate::combinatorics::{is_sorted_pair, KMultiset};
        for n in 3..=8u32 {
            for a in crate::combinatorics::KSubset::all(n, 2) {
                for b in crate::combinatorics::KSubset::all(n, 2) {
                    if a == b {
                        continue;
                    }
                    let (x, y) = (a.elements(), b.elements());
                    let am = KMultiset::new(x.to_vec(), n).unwrap();
                    let bm = KMultiset::new(y.to_vec(), n).unwrap();
                    let sorted_somehow = is_sorted_pair(&am, &bm).unwrap()
                        || is_sorted_pair(&bm, &am).unwrap();
                    let crossing = edges_cross((x[0], x[1]), (y[0], y[1]), n).unwrap();
                    assert_eq!(crossing, sorted_somehow);
                }
            }
        }
    }

    #[test]
    fn thrackle_from_cycle_examples() {
        // Off-cycle vertices join their opposite cycle vertex.
        let p = multi(&[1, 1, 1, 1, 1, 1, 1]);
        let c = OddCycle::new(7, vec![1, 2, 3, 5, 6]).unwrap();
        let g = thrackle_from_cycle(&c, &p).unwrap();
        assert!(g.edges().contains(&(1, 4)));
        assert!(g.edges().contains(&(3, 7)));
        assert_eq!(g.edge_count(), 7);

        let p = multi(&[1, 1, 1]);
        let c = OddCycle::new(3, vec![1, 2, 3]).unwrap();
        let g = thrackle_from_cycle(&c, &p).unwrap();
        assert_eq!(g.edge_count(), 3);

        let p = multi(&[1, 1, 1, 1, 1]);
        let c = OddCycle::new(5, vec![1, 2, 3, 4, 5]).unwrap();
        let g = thrackle_from_cycle(&c, &p).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.cycle_vertices(), vec![1, 2, 3, 4, 5]);

        // Cycle meeting a block too often is rejected.
        let p = multi(&[2, 1, 1]);
        let c = OddCycle::new(4, vec![1, 2, 3]).unwrap();
        assert!(matches!(thrackle_from_cycle(&c, &p), Err(Error::InvalidCycle(_))));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_maximal_thrackles(&multi(&[1; 4])).unwrap().len(), 4);
        assert_eq!(enumerate_maximal_thrackles(&multi(&[1; 5])).unwrap().len(), 11);
        assert_eq!(enumerate_maximal_thrackles(&multi(&[2, 1, 1])).unwrap().len(), 2);
    }

    #[test]
    fn closed_form_volumes() {
        for parts in [vec![1u32; 5], vec![2, 1, 1], vec![4]] {
            let p = multi(&parts);
            let enumerated = enumerate_maximal_thrackles(&p).unwrap().len() as i64;
            assert_eq!(volume_by_odd_cycles(&p).unwrap(), enumerated, "{parts:?}");
            assert_eq!(volume_by_complement(&p).unwrap(), enumerated, "{parts:?}");
        }
        assert_eq!(volume_by_odd_cycles(&multi(&[1; 5])).unwrap(), 11);
        assert_eq!(volume_by_complement(&multi(&[4])).unwrap(), 0);
        assert_eq!(volume_by_odd_cycles(&multi(&[2, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn second_hypersimplex_volume_formula() {
        for n in 3..=10u32 {
            let p = multi(&vec![1; n as usize]);
            assert_eq!(volume_by_complement(&p).unwrap(), (1 << (n - 1)) - n as i64);
        }
    }

    #[test]
    fn adjacency_move_examples() {
        // The triangle admits no move.
        let p = multi(&[1, 1, 1]);
        let g = enumerate_maximal_thrackles(&p).unwrap().pop().unwrap();
        for &e in g.edges().clone().iter() {
            assert!(adjacency_move(&g, e).unwrap().is_none());
        }
        assert_eq!(simplex_degree(&g).unwrap(), 0);

        // The 5-cycle thrackle moves on every edge.
        let p = multi(&[1; 5]);
        let c = OddCycle::new(5, vec![1, 2, 3, 4, 5]).unwrap();
        let g = thrackle_from_cycle(&c, &p).unwrap();
        for &e in g.edges().clone().iter() {
            assert!(adjacency_move(&g, e).unwrap().is_some(), "edge {e:?}");
        }
        assert_eq!(simplex_degree(&g).unwrap(), 5);

        // Unknown edge is an argument error.
        assert!(adjacency_move(&g, (1, 2)).is_err());
    }

    #[test]
    fn degree_histograms() {
        assert_eq!(
            degree_histogram(&multi(&[1; 4])).unwrap(),
            BTreeMap::from([(2, 4)])
        );
        assert_eq!(
            degree_histogram(&multi(&[1; 5])).unwrap(),
            BTreeMap::from([(2, 5), (3, 5), (5, 1)])
        );
    }

    #[test]
    fn uniform_family_degrees_match_the_trichotomy() {
        for n in 3..=7u32 {
            let p = multi(&vec![1; n as usize]);
            let all: BTreeSet<Thrackle> =
                enumerate_maximal_thrackles(&p).unwrap().into_iter().collect();
            for g in &all {
                let mut moves = 0;
                for &e in g.edges() {
                    if let Some(t) = adjacency_move(g, e).unwrap() {
                        assert!(all.contains(&t));
                        moves += 1;
                    }
                }
                assert_eq!(moves, simplex_degree(g).unwrap(), "n = {n}");
            }
        }
    }

    #[test]
    fn f_polynomial_anchor() {
        let (direct, series) = f_polynomial_check(4).unwrap();
        let expect = IntPolynomial::from_pairs(&[(1, 6), (2, 13), (3, 12), (4, 4)]);
        assert_eq!(direct, expect);
        assert_eq!(series, expect);
        // Euler characteristic 1: alternating sum of face counts.
        assert_eq!(direct.eval(-1), -1);

        let (direct, series) = f_polynomial_check(2).unwrap();
        assert_eq!(direct, IntPolynomial::monomial(1, 1));
        assert_eq!(series, direct);

        let (direct, series) = f_polynomial_check(5).unwrap();
        assert_eq!(direct.coeff(5), 11);
        assert_eq!(direct, series);
    }
}
