//! Multi-Eulerian polynomials: volumes of the level slices of a product of
//! simplices, computed by three methods, together with the weighted
//! evaluation at one, the first-value/descent derivative identity, and the
//! marked-circular-descent bijection proving it.


use crate::alcoved::{self, VolumeMethod};
use crate::combinatorics::{
    self, circular_descent_count, descent_count, eulerian_number, eulerian_polynomial,
    multinomial, Permutation,
};
use crate::error::{Error, Result};
use crate::matroid::{self, WeightedSetPartition};
use crate::polynomial::IntPolynomial;

/// The three routes to a multi-Eulerian coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiEulerianMethod {
    /// Permutations whose descent count survives restriction to the block
    /// boundaries (unweighted families only).
    DescentSubstring,
    /// Size-`n` sorted subsets of the block-constrained bases, per level.
    SortedSubsets,
    /// Alcoved volume of each level slice.
    AlcovedVolume,
}

/// The polynomial `sum_k Vol(slice at level k) t^k`; slices of less than
/// full dimension contribute nothing.
pub fn multi_eulerian_polynomial(
    p: &WeightedSetPartition,
    method: MultiEulerianMethod,
) -> Result<IntPolynomial> {
    let n = p.n();
    match method {
        MultiEulerianMethod::DescentSubstring => {
            if !p.is_unweighted() {
                return Err(Error::MethodDomain(
                    "the substring descent count applies to the unweighted family".into(),
                ));
            }
            let boundaries: Vec<u32> = {
                let ends = p.block_ends();
                ends[..ends.len() - 1].to_vec()
            };
            let mut poly = IntPolynomial::zero();
            for w in Permutation::all(n as usize - 1) {
                let d = descent_count(&w);
                let sub: Vec<u32> = boundaries.iter().map(|&t| w.at(t as usize)).collect();
                let sub_d = sub.windows(2).filter(|pair| pair[0] > pair[1]).count() as u32;
                if d == sub_d {
                    poly.add_term(d + 1, 1);
                }
            }
            Ok(poly)
        }
        MultiEulerianMethod::SortedSubsets => {
            let mut poly = IntPolynomial::zero();
            for k in 1..n {
                let bases = match matroid::wsp_bases(p, k) {
                    Ok(m) => m,
                    Err(Error::EmptyMatroid) => continue,
                    Err(e) => return Err(e),
                };
                let ground: Vec<Vec<u32>> =
                    bases.bases().iter().map(|s| s.elements().to_vec()).collect();
                let cells =
                    combinatorics::sorted_chains_raw(&ground, Some(n as usize)).len() as i64;
                poly.add_term(k, cells);
            }
            Ok(poly)
        }
        MultiEulerianMethod::AlcovedVolume => {
            let mut poly = IntPolynomial::zero();
            for k in 1..n {
                let spec = matroid::wsp_spec(p, k)?;
                poly.add_term(k, alcoved::volume(&spec, VolumeMethod::Circuit)?);
            }
            Ok(poly)
        }
    }
}

/// Computes the polynomial by every applicable method and checks agreement.
pub fn multi_eulerian_polynomial_checked(p: &WeightedSetPartition) -> Result<IntPolynomial> {
    let by_volume = multi_eulerian_polynomial(p, MultiEulerianMethod::AlcovedVolume)?;
    let by_sorted = multi_eulerian_polynomial(p, MultiEulerianMethod::SortedSubsets)?;
    if by_volume != by_sorted {
        return Err(Error::Argument(format!(
            "sorted-subset route gives {by_sorted}, volumes give {by_volume}"
        )));
    }
    if p.is_unweighted() {
        let by_descents = multi_eulerian_polynomial(p, MultiEulerianMethod::DescentSubstring)?;
        if by_volume != by_descents {
            return Err(Error::Argument(format!(
                "descent route gives {by_descents}, volumes give {by_volume}"
            )));
        }
    }
    Ok(by_volume)
}

/// Evaluation at one of the starred polynomial (one extra singleton block
/// with weights `(0, 1)`) along two routes: summing slice volumes, and the
/// closed form `multinomial(n; a) * prod_j sum_{i=b_j+1}^{c_j} A(i, a_j)`.
pub fn weighted_at_one(p: &WeightedSetPartition) -> Result<(i64, i64)> {
    let starred = p.starred();
    let n_star = starred.n();
    let mut by_volumes = 0i64;
    for k in 1..n_star {
        let spec = matroid::wsp_spec(&starred, k)?;
        by_volumes += alcoved::volume(&spec, VolumeMethod::Circuit)?;
    }

    let mut closed = multinomial(p.part_sizes());
    for (j, &a) in p.part_sizes().iter().enumerate() {
        let mut block = 0i64;
        for i in p.lower()[j] + 1..=p.upper()[j] {
            if i >= 1 && i <= a as i64 {
                block += eulerian_number(i as u32, a)?;
            }
        }
        closed = closed.checked_mul(block).expect("weighted sum overflow");
    }
    Ok((by_volumes, closed))
}

/// The left side of the derivative identity: permutations weighted by their
/// first value, graded by descents.
pub fn first_value_descent_polynomial(m: u32) -> IntPolynomial {
    let mut poly = IntPolynomial::zero();
    for w in Permutation::all(m as usize) {
        poly.add_term(descent_count(&w) + 1, w.at(1) as i64);
    }
    poly
}

/// Verifies `sum_w w_1 t^(des(w)+1) = t d/dt A_m(t)` by enumeration.
pub fn derivative_identity(m: u32) -> Result<bool> {
    if m < 1 {
        return Err(Error::Argument("need m >= 1".into()));
    }
    let lhs = first_value_descent_polynomial(m);
    let rhs = eulerian_polynomial(m)?.t_times_derivative();
    Ok(lhs == rhs)
}

/// The anchored derivative identity: the unweighted polynomial of the block
/// sizes `(2, 1, ..., 1)` summing to `s + 2` equals `t d/dt A_s(t)`.
pub fn anchored_derivative_identity(s: u32) -> Result<bool> {
    let mut parts = vec![2u32];
    parts.extend(std::iter::repeat_n(1u32, s as usize));
    let p = WeightedSetPartition::multi(parts)?;
    let lhs = multi_eulerian_polynomial_checked(&p)?;
    let rhs = eulerian_polynomial(s)?.t_times_derivative();
    Ok(lhs == rhs)
}

/// A permutation ending in its maximum with one marked circular descent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MarkedPermutation {
    w: Permutation,
    mark: usize,
}

impl MarkedPermutation {
    /// `mark` is a 1-based index; index `m` refers to the wrap position.
    pub fn new(w: Permutation, mark: usize) -> Result<Self> {
        let m = w.len();
        if w.one_line().last() != Some(&(m as u32)) {
            return Err(Error::Argument("the permutation must end in its maximum".into()));
        }
        if mark < 1 || mark > m {
            return Err(Error::Argument(format!("mark {mark} outside [1..{m}]")));
        }
        let is_descent = if mark < m {
            w.at(mark) > w.at(mark + 1)
        } else {
            w.at(m) > w.at(1)
        };
        if !is_descent {
            return Err(Error::Argument(format!("index {mark} is not a circular descent")));
        }
        Ok(MarkedPermutation { w, mark })
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    /// All marked circular descents of all permutations of `[1..m]` ending
    /// in `m`.
    pub fn all(m: u32) -> Vec<MarkedPermutation> {
        let mut out = Vec::new();
        for w in Permutation::all(m as usize) {
            if w.one_line().last() != Some(&m) {
                continue;
            }
            for mark in 1..=m as usize {
                if let Ok(mp) = MarkedPermutation::new(w.clone(), mark) {
                    out.push(mp);
                }
            }
        }
        out
    }
}

/// Sends a marked permutation of `[1..m]` to a permutation of `[1..m+1]`
/// ending in `m+1` with rising first pair, preserving the circular descent
/// count: insert `m+1` at the mark, shift all values so the entry before the
/// insertion becomes the maximum, then rotate the maximum to the last slot.
pub fn marked_descent_bijection(u: &MarkedPermutation) -> Permutation {
    let m = u.w.len();
    let big = m as u32 + 1;
    let mut v: Vec<u32> = Vec::with_capacity(m + 1);
    v.extend_from_slice(&u.w.one_line()[..u.mark]);
    v.push(big);
    v.extend_from_slice(&u.w.one_line()[u.mark..]);

    let shift = big - v[u.mark - 1];
    let mut shifted: Vec<u32> = v.iter().map(|&x| (x - 1 + shift) % big + 1).collect();

    let pos = shifted.iter().position(|&x| x == big).expect("max present");
    shifted.rotate_left(pos + 1);
    let out = Permutation::from_one_line(shifted).expect("still a permutation");
    debug_assert_eq!(out.one_line().last(), Some(&big));
    debug_assert!(out.at(1) < out.at(2));
    debug_assert_eq!(circular_descent_count(&out), circular_descent_count(&u.w));
    out
}

/// Inverts [`marked_descent_bijection`]: the value following the maximum
/// (cyclically) is the shift; undoing it and removing the maximum recovers
/// the permutation and the insertion point recovers the mark.
pub fn marked_descent_bijection_inverse(w: &Permutation) -> Result<MarkedPermutation> {
    let big = w.len() as u32;
    let m = w.len() - 1;
    if m < 1 {
        return Err(Error::Argument("need a permutation of length at least 2".into()));
    }
    if w.one_line().last() != Some(&big) {
        return Err(Error::Argument("the permutation must end in its maximum".into()));
    }
    if w.at(1) >= w.at(2) {
        return Err(Error::Argument("the first two entries must rise".into()));
    }
    let shift = w.at(1);
    let unshifted: Vec<u32> =
        w.one_line().iter().map(|&x| (x + big - 1 - shift) % big + 1).collect();

    let pos = unshifted.iter().position(|&x| x == big).expect("max present");
    // Cyclic word without the maximum, read from just after it.
    let mut rest: Vec<u32> = Vec::with_capacity(m);
    rest.extend_from_slice(&unshifted[pos + 1..]);
    rest.extend_from_slice(&unshifted[..pos]);
    let marked_value = if pos == 0 { unshifted[w.len() - 1] } else { unshifted[pos - 1] };

    let top = rest.iter().position(|&x| x == m as u32).expect("m present");
    rest.rotate_left(top + 1);
    let u = Permutation::from_one_line(rest)?;
    let mark = u.position_of(marked_value);
    MarkedPermutation::new(u, mark)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn perm(word: &[u32]) -> Permutation {
        Permutation::from_one_line(word.to_vec()).unwrap()
    }

    #[test]
    fn polynomial_examples() {
        let p = WeightedSetPartition::multi(vec![1; 5]).unwrap();
        assert_eq!(
            multi_eulerian_polynomial_checked(&p).unwrap(),
            eulerian_polynomial(4).unwrap()
        );

        let p = WeightedSetPartition::multi(vec![2, 1, 1]).unwrap();
        assert_eq!(
            multi_eulerian_polynomial_checked(&p).unwrap(),
            IntPolynomial::from_pairs(&[(1, 1), (2, 2)])
        );

        let p = WeightedSetPartition::multi(vec![4]).unwrap();
        assert_eq!(
            multi_eulerian_polynomial_checked(&p).unwrap(),
            IntPolynomial::monomial(1, 1)
        );
    }

    #[test]
    fn polynomial_is_symmetric_in_the_block_sizes() {
        let a = WeightedSetPartition::multi(vec![2, 1, 1]).unwrap();
        let b = WeightedSetPartition::multi(vec![1, 2, 1]).unwrap();
        let c = WeightedSetPartition::multi(vec![1, 1, 2]).unwrap();
        let pa = multi_eulerian_polynomial_checked(&a).unwrap();
        assert_eq!(pa, multi_eulerian_polynomial_checked(&b).unwrap());
        assert_eq!(pa, multi_eulerian_polynomial_checked(&c).unwrap());
    }

    #[test]
    fn weighted_at_one_examples() {
        let p = WeightedSetPartition::multi(vec![2, 1]).unwrap();
        let (by_volumes, closed) = weighted_at_one(&p).unwrap();
        assert_eq!((by_volumes, closed), (3, 3));

        let p = WeightedSetPartition::multi(vec![1, 1]).unwrap();
        let (by_volumes, closed) = weighted_at_one(&p).unwrap();
        assert_eq!((by_volumes, closed), (2, 2));

        let p = WeightedSetPartition::multi(vec![3, 1]).unwrap();
        let (by_volumes, closed) = weighted_at_one(&p).unwrap();
        assert_eq!((by_volumes, closed), (4, 4));
    }

    #[test]
    fn derivative_identity_small() {
        let lhs = first_value_descent_polynomial(3);
        assert_eq!(lhs, IntPolynomial::from_pairs(&[(1, 1), (2, 8), (3, 3)]));
        for m in 1..=7 {
            assert!(derivative_identity(m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn anchored_identity_small() {
        for s in 1..=5 {
            assert!(anchored_derivative_identity(s).unwrap(), "s = {s}");
        }
    }

    #[test]
    fn binomial_formula_for_one_large_block() {
        // For blocks (a, 1, ..., 1) on [n] the polynomial equals
        // sum over S_{n-a} of C(a + w_1 - 2, a - 1) t^(des + 1).
        for a in 2..=3u32 {
            for n in a + 1..=7u32 {
                let mut parts = vec![a];
                parts.extend(std::iter::repeat_n(1u32, (n - a) as usize));
                let p = WeightedSetPartition::multi(parts).unwrap();
                let direct = multi_eulerian_polynomial_checked(&p).unwrap();
                let mut formula = IntPolynomial::zero();
                for w in Permutation::all((n - a) as usize) {
                    formula.add_term(
                        descent_count(&w) + 1,
                        combinatorics::binomial(a as i64 + w.at(1) as i64 - 2, a as i64 - 1),
                    );
                }
                assert_eq!(direct, formula, "a = {a}, n = {n}");
            }
        }
    }

    #[test]
    fn bijection_reference_example() {
        let u = MarkedPermutation::new(perm(&[5, 3, 1, 6, 2, 7, 4, 8]), 4).unwrap();
        let w = marked_descent_bijection(&u);
        assert_eq!(w.one_line(), &[3, 5, 1, 7, 2, 8, 6, 4, 9]);
        assert_eq!(circular_descent_count(&w), 5);
        let back = marked_descent_bijection_inverse(&w).unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn bijection_small_example() {
        let u = MarkedPermutation::new(perm(&[2, 1, 3]), 1).unwrap();
        let w = marked_descent_bijection(&u);
        assert_eq!(w.one_line(), &[2, 3, 1, 4]);
        assert_eq!(circular_descent_count(&w), circular_descent_count(&perm(&[2, 1, 3])));
    }

    #[test]
    fn bijection_round_trips_exhaustively() {
        for m in 2..=6u32 {
            let marked = MarkedPermutation::all(m);
            let mut images = BTreeSet::new();
            for u in &marked {
                let w = marked_descent_bijection(u);
                assert_eq!(
                    circular_descent_count(&w),
                    circular_descent_count(u.permutation())
                );
                assert!(images.insert(w.clone()), "image repeated at m = {m}");
                assert_eq!(&marked_descent_bijection_inverse(&w).unwrap(), u);
            }
            // Images are exactly the target family.
            let mut targets = 0;
            for w in Permutation::all(m as usize + 1) {
                if w.one_line().last() == Some(&(m + 1)) && w.at(1) < w.at(2) {
                    targets += 1;
                    assert!(images.contains(&w));
                }
            }
            assert_eq!(images.len(), targets);
        }
    }

    #[test]
    fn invalid_marks_are_rejected() {
        assert!(MarkedPermutation::new(perm(&[1, 2, 3]), 1).is_err());
        assert!(MarkedPermutation::new(perm(&[2, 1, 3]), 2).is_err());
        assert!(MarkedPermutation::new(perm(&[3, 1, 2]), 1).is_err());
        // The wrap position is a circular descent whenever m > first entry.
        assert!(MarkedPermutation::new(perm(&[2, 1, 3]), 3).is_ok());
    }
}
