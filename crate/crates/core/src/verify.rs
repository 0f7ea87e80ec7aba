//! Cross-validation suites: each check runs one invariant family end to end
//! and reports a machine-readable pass/fail line.  The command-line `verify`
//! subcommand and the acceptance tests both drive these.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::alcoved::{
    self, alcove_coordinate_of_simplex, gamma_graph, is_sort_closed_points, lattice_points,
    restricted_permutations, volume, volume_by_lattice_sum, AlcovedSpec, AlcovedTriangulation,
    VolumeMethod,
};
use crate::combinatorics::{descent_count, eulerian_number, Permutation};
use crate::error::Result;
use crate::hypersimplex::{
    dual_graph, enumerate_minimal_circuits, facet_dual_graph, theta, triangulate,
    HypersimplexId, Simplex, TriangulationMethod, Vertex01,
};
use crate::multi_eulerian::{
    self, marked_descent_bijection, marked_descent_bijection_inverse, MarkedPermutation,
};

/// Outcome of one invariant family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub family: String,
    pub pass: bool,
    pub details: String,
}

impl CheckResult {
    fn ok(family: &str, details: String) -> Self {
        CheckResult { family: family.into(), pass: true, details }
    }

    fn fail(family: &str, details: String) -> Self {
        CheckResult { family: family.into(), pass: false, details }
    }
}

fn run_check(family: &str, body: impl FnOnce() -> Result<String>) -> CheckResult {
    match body() {
        Ok(details) => CheckResult::ok(family, details),
        Err(e) => CheckResult::fail(family, e.to_string()),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(crate::Error::Argument(msg()))
    }
}

/// Hypersimplex suites: triangulation equality and counts, unimodularity,
/// the label bijection, and both adjacency rules, for all `0 < k < n <= max_n`.
pub fn verify_hypersimplex(max_n: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();

    out.push(run_check("hypersimplex/four-way-triangulation-equality", || {
        let mut cells_checked = 0usize;
        for n in 2..=max_n {
            for k in 1..n {
                let id = HypersimplexId::new(k, n)?;
                let circuit = triangulate(id, TriangulationMethod::Circuit)?;
                for m in [
                    TriangulationMethod::Stanley,
                    TriangulationMethod::Sorted,
                    TriangulationMethod::Alcove,
                ] {
                    let other = triangulate(id, m)?;
                    ensure(other == circuit, || {
                        format!("{m:?} disagrees with circuits on ({k}, {n})")
                    })?;
                }
                let expect = eulerian_number(k, n - 1)?;
                ensure(circuit.len() as i64 == expect, || {
                    format!("({k}, {n}) has {} cells, expected {expect}", circuit.len())
                })?;
                cells_checked += circuit.len();
            }
        }
        Ok(format!("four constructions agree on {cells_checked} cells, n <= {max_n}"))
    }));

    out.push(run_check("hypersimplex/unimodularity", || {
        let mut count = 0usize;
        for n in 2..=max_n {
            for k in 1..n {
                for cell in triangulate(HypersimplexId::new(k, n)?, TriangulationMethod::Circuit)? {
                    ensure(cell.is_unimodular(), || format!("non-unimodular cell in ({k}, {n})"))?;
                    count += 1;
                }
            }
        }
        Ok(format!("{count} cells have unit normalized volume"))
    }));

    out.push(run_check("hypersimplex/theta-label-bijection", || {
        let mut count = 0usize;
        for n in 2..=max_n {
            for k in 1..n {
                for c in enumerate_minimal_circuits(HypersimplexId::new(k, n)?)? {
                    let mut coll: Vec<_> = c.vertices().iter().map(Vertex01::to_subset).collect();
                    coll.sort();
                    let w = theta(&coll)?;
                    ensure(w.one_line() == c.labels(), || {
                        format!(
                            "theta gives {} for the cell of {}",
                            w.word_string(),
                            c.label_cycle().word_string()
                        )
                    })?;
                    count += 1;
                }
            }
        }
        Ok(format!("theta recovers the circuit word on {count} cells"))
    }));

    out.push(run_check("hypersimplex/adjacency-facet-agreement", || {
        let cap = max_n.min(7);
        for n in 2..=cap {
            for k in 1..n {
                let id = HypersimplexId::new(k, n)?;
                let by_rule = dual_graph(id)?;
                let cells: Vec<(String, Simplex)> = enumerate_minimal_circuits(id)?
                    .iter()
                    .map(|c| (c.label_cycle().word_string(), c.to_simplex()))
                    .collect();
                let by_facets = facet_dual_graph(&cells)?;
                ensure(by_rule == by_facets, || {
                    format!("switch rule and facet rule disagree on ({k}, {n})")
                })?;
            }
        }
        Ok(format!("label switches equal shared facets, n <= {cap}"))
    }));

    out
}

/// A seeded generator of bounded specs: always a consecutive chain of unit
/// windows or a unit cube, plus a few extra random range bounds.
fn random_spec(rng: &mut ChaCha8Rng) -> AlcovedSpec {
    loop {
        let n = rng.random_range(3..=5usize);
        let unit_cube = rng.random_range(0..10) < 7;
        let level = rng.random_range(1..n as i64);
        let mut bounds: Vec<(usize, usize, alcoved::Bound)> = Vec::new();
        if !unit_cube {
            for i in 1..n {
                let lo = rng.random_range(-1..=1i64);
                let hi = lo + rng.random_range(0..=2i64);
                bounds.push((i - 1, i, (Some(lo), Some(hi))));
            }
        }
        for _ in 0..rng.random_range(0..=2usize) {
            let i = rng.random_range(0..n - 1);
            let j = rng.random_range(i + 1..n);
            let lo = rng.random_range(-1..=2i64);
            let hi = lo + rng.random_range(0..=2i64);
            let lo = if rng.random_range(0..4) == 0 { None } else { Some(lo) };
            bounds.push((i, j, (lo, Some(hi))));
        }
        if let Ok(spec) = AlcovedSpec::new(n, level, &bounds, unit_cube) {
            return spec;
        }
    }
}

/// Randomized alcoved suites: the three volume methods, the alcove-lattice
/// graph against the facet graph, and sort-closure of the lattice points.
pub fn verify_alcoved_random(count: u32, seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();

    out.push(run_check("alcoved/volume-method-agreement", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut unit_cube_specs = 0;
        for case in 0..count {
            let spec = random_spec(&mut rng);
            let by_cells = volume(&spec, VolumeMethod::Circuit)?;
            let by_sum = volume(&spec, VolumeMethod::LatticeSum)?;
            ensure(by_cells == by_sum, || {
                format!("case {case}: circuits give {by_cells}, lattice sums {by_sum}")
            })?;
            if spec.is_unit_cube() {
                unit_cube_specs += 1;
                let by_descents = volume(&spec, VolumeMethod::Descent)?;
                ensure(by_cells == by_descents, || {
                    format!("case {case}: circuits give {by_cells}, descents {by_descents}")
                })?;
            }
        }
        Ok(format!("{count} random specs agree ({unit_cube_specs} also by descents)"))
    }));

    out.push(run_check("alcoved/gamma-facet-isomorphism", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        for case in 0..count {
            let spec = random_spec(&mut rng);
            let gamma = gamma_graph(&spec)?;
            let cells: Vec<(String, Simplex)> =
                alcoved::triangulate(&spec, AlcovedTriangulation::Circuit)?
                    .into_iter()
                    .map(|s| Ok((alcove_coordinate_of_simplex(&s)?.label_string(), s)))
                    .collect::<Result<_>>()?;
            let facet = facet_dual_graph(&cells)?;
            ensure(gamma == facet, || format!("case {case}: graphs differ"))?;
        }
        Ok(format!("{count} random dual graphs match the alcove lattice"))
    }));

    out.push(run_check("alcoved/lattice-points-sort-closed", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
        for case in 0..count {
            let spec = random_spec(&mut rng);
            let ps = lattice_points(&spec)?;
            ensure(is_sort_closed_points(ps.points())?, || {
                format!("case {case}: points not sort-closed")
            })?;
        }
        Ok(format!("{count} random point sets are sort-closed"))
    }));

    out.push(run_check("alcoved/descent-sets", || {
        // The anchor example: the square slice has exactly the two rising
        // one-descent words.
        let spec = AlcovedSpec::new(4, 2, &[(0, 2, (Some(0), Some(1)))], true)?;
        let w: Vec<String> =
            restricted_permutations(&spec)?.iter().map(Permutation::word_string).collect();
        ensure(w == ["132", "231"], || format!("got {w:?}"))?;
        for id in [(2u32, 4u32), (2, 5), (3, 5)] {
            let spec = AlcovedSpec::hypersimplex(id.0, id.1)?;
            let perms = restricted_permutations(&spec)?;
            ensure(
                perms.iter().all(|w| descent_count(w) == id.0 - 1)
                    && perms.len() as i64 == eulerian_number(id.0, id.1 - 1)?,
                || format!("wrong descent family for {id:?}"),
            )?;
        }
        Ok("descent-restricted families match volumes".into())
    }));

    out.push(run_check("alcoved/hypersimplex-translate-counts", || {
        for n in 3..=7u32 {
            for k in 1..n {
                let spec = AlcovedSpec::hypersimplex(k, n)?;
                let cert = volume_by_lattice_sum(&spec)?;
                ensure(cert.per_w.values().all(|&c| c <= 1), || {
                    format!("a translate polytope of ({k}, {n}) has more than one point")
                })?;
                ensure(cert.total == eulerian_number(k, n - 1)?, || {
                    format!("lattice-sum volume of ({k}, {n}) is {}", cert.total)
                })?;
            }
        }
        Ok("every translate polytope of a hypersimplex has 0 or 1 points, n <= 7".into())
    }));

    out
}

/// Permutation identity suites: the derivative identity, the marked-descent
/// bijection, the anchored block identity and the weighted evaluation at one.
pub fn verify_identities(max_m: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();

    out.push(run_check("identities/first-value-derivative", || {
        for m in 1..=max_m {
            ensure(multi_eulerian::derivative_identity(m)?, || format!("fails at m = {m}"))?;
        }
        Ok(format!("first-value identity holds for m <= {max_m}"))
    }));

    out.push(run_check("identities/marked-descent-bijection", || {
        let cap = max_m.min(6);
        let mut count = 0usize;
        for m in 2..=cap {
            let mut images = BTreeSet::new();
            for u in MarkedPermutation::all(m) {
                let w = marked_descent_bijection(&u);
                ensure(
                    crate::combinatorics::circular_descent_count(&w)
                        == crate::combinatorics::circular_descent_count(u.permutation()),
                    || "circular descent count not preserved".into(),
                )?;
                ensure(marked_descent_bijection_inverse(&w)? == u, || {
                    "round trip failed".into()
                })?;
                images.insert(w);
                count += 1;
            }
            let targets = Permutation::all(m as usize + 1)
                .into_iter()
                .filter(|w| w.one_line().last() == Some(&(m + 1)) && w.at(1) < w.at(2))
                .count();
            ensure(images.len() == targets, || format!("image count wrong at m = {m}"))?;
        }
        Ok(format!("{count} marked permutations round-trip, m <= {cap}"))
    }));

    out.push(run_check("identities/anchored-block-derivative", || {
        let cap = max_m.min(5);
        for s in 1..=cap {
            ensure(multi_eulerian::anchored_derivative_identity(s)?, || {
                format!("fails at s = {s}")
            })?;
        }
        Ok(format!("block identity holds for s <= {cap}"))
    }));

    out.push(run_check("identities/weighted-at-one", || {
        let cap = max_m.min(6);
        let mut cases = 0usize;
        for n in 2..=cap {
            for parts in compositions(n) {
                let p = crate::matroid::WeightedSetPartition::multi(parts.clone())?;
                let (by_volumes, closed) = multi_eulerian::weighted_at_one(&p)?;
                ensure(by_volumes == closed, || {
                    format!("{parts:?}: volumes {by_volumes}, closed form {closed}")
                })?;
                cases += 1;
            }
        }
        Ok(format!("{cases} starred families agree, n <= {cap}"))
    }));

    out
}

/// All compositions (ordered part lists) of `n`.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for first in 1..=left {
            cur.push(first);
            rec(left - first, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// All partitions (weakly decreasing part lists) of `n`.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for first in (1..=left.min(max)).rev() {
            cur.push(first);
            rec(left - first, first, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All naturally labeled posets on `[1..m]`: transitive relation sets
/// contained in the natural order.
pub fn natural_posets(m: usize) -> Vec<alcoved::Poset> {
    let pairs: Vec<(u32, u32)> = (1..=m as u32)
        .flat_map(|a| (a + 1..=m as u32).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let chosen: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        let transitive = chosen.iter().all(|&(a, b)| {
            chosen
                .iter()
                .filter(|&&(c, _)| c == b)
                .all(|&(_, d)| chosen.contains(&(a, d)))
        });
        if transitive {
            out.push(alcoved::Poset::new(m, &chosen).expect("transitive and acyclic"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_sizes() {
        for r in verify_hypersimplex(5) {
            assert!(r.pass, "{}: {}", r.family, r.details);
        }
        for r in verify_alcoved_random(25, 7) {
            assert!(r.pass, "{}: {}", r.family, r.details);
        }
        for r in verify_identities(5) {
            assert!(r.pass, "{}: {}", r.family, r.details);
        }
    }

    #[test]
    fn composition_and_partition_counts() {
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(natural_posets(3).len(), 7);
        assert_eq!(natural_posets(4).len(), 40);
    }
}
