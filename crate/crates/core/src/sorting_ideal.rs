//! The combinatorial shadow of the quadratic Groebner basis of the toric
//! ideal of a sort-closed collection: monomials in variables indexed by
//! `k`-multisets, the sorting normal form, standard-monomial membership, and
//! generator emission.  No polynomial arithmetic over a field is performed;
//! every statement here is about multisets.

use std::collections::BTreeSet;

use crate::combinatorics::{is_sorted_pair, sort_pair, KMultiset};
use crate::error::{Error, Result};

/// A product of variables `x_I`, stored as the multiset of factor labels in
/// canonical (lexicographic) order.  All factors share one size and ambient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<KMultiset>,
}

impl Monomial {
    pub fn new(mut factors: Vec<KMultiset>) -> Result<Self> {
        let Some(first) = factors.first() else {
            return Err(Error::Argument("monomial needs at least one factor".into()));
        };
        let (k, n) = (first.len(), first.ambient());
        if factors.iter().any(|f| f.len() != k || f.ambient() != n) {
            return Err(Error::Argument("factors of mixed size or ambient".into()));
        }
        factors.sort();
        Ok(Monomial { factors })
    }

    pub fn factors(&self) -> &[KMultiset] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// The multiset union of all factor elements, sorted.
    pub fn content(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.factors.iter().flat_map(|f| f.elements()).copied().collect();
        all.sort_unstable();
        all
    }
}

/// A generator of the sorting rewriting system: the unsorted product is the
/// marked (leading) term, the sorted product of the same content trails.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MarkedBinomial {
    pub leading: Monomial,
    pub trailing: Monomial,
}

/// Rewrites a monomial to the unique sorted monomial with the same content,
/// by repeatedly sorting the first unsorted factor pair (in the pair order
/// of the canonically sorted factor list).
///
/// Every intermediate factor must stay inside `ground`; a step that leaves
/// it reports which pair certifies that `ground` is not sort-closed.
pub fn normal_form(m: &Monomial, ground: &BTreeSet<KMultiset>) -> Result<Monomial> {
    check_ground(m, ground)?;
    let (mono, _) = normal_form_with_steps(m, ground)?;
    Ok(mono)
}

/// As [`normal_form`], also reporting the number of rewriting steps taken.
pub fn normal_form_with_steps(
    m: &Monomial,
    ground: &BTreeSet<KMultiset>,
) -> Result<(Monomial, usize)> {
    let mut factors = m.factors.clone();
    let mut steps = 0usize;
    loop {
        let Some((p, q)) = first_unsorted_pair(&factors)? else {
            return Ok((Monomial { factors }, steps));
        };
        let (u, v) = sort_pair(&factors[p], &factors[q])?;
        if !ground.contains(&u) || !ground.contains(&v) {
            return Err(Error::NotSortClosed(format!(
                "sorting the pair ({:?}, {:?}) leaves the ground collection",
                factors[p].elements(),
                factors[q].elements()
            )));
        }
        factors[p] = u;
        factors[q] = v;
        factors.sort();
        steps += 1;
    }
}

fn first_unsorted_pair(factors: &[KMultiset]) -> Result<Option<(usize, usize)>> {
    for p in 0..factors.len() {
        for q in p + 1..factors.len() {
            if !is_sorted_pair(&factors[p], &factors[q])? {
                return Ok(Some((p, q)));
            }
        }
    }
    Ok(None)
}

/// True when the factor list is a sorted collection, i.e. the monomial is a
/// standard monomial of the sorting rewriting system.
pub fn is_standard(m: &Monomial, ground: &BTreeSet<KMultiset>) -> Result<bool> {
    check_ground(m, ground)?;
    Ok(first_unsorted_pair(&m.factors)?.is_none())
}

fn check_ground(m: &Monomial, ground: &BTreeSet<KMultiset>) -> Result<()> {
    if let Some(f) = m.factors.iter().find(|f| !ground.contains(*f)) {
        return Err(Error::Argument(format!(
            "factor {:?} is not in the ground collection",
            f.elements()
        )));
    }
    Ok(())
}

/// One marked binomial per unsorted unordered pair of ground elements whose
/// sorted pair differs from it.  Fails when `ground` is not sort-closed.
pub fn groebner_generators(ground: &BTreeSet<KMultiset>) -> Result<Vec<MarkedBinomial>> {
    let items: Vec<&KMultiset> = ground.iter().collect();
    let mut out = Vec::new();
    for (i, &a) in items.iter().enumerate() {
        for &b in &items[i + 1..] {
            if is_sorted_pair(a, b)? || is_sorted_pair(b, a)? {
                continue;
            }
            let (u, v) = sort_pair(a, b)?;
            if !ground.contains(&u) || !ground.contains(&v) {
                return Err(Error::NotSortClosed(format!(
                    "sorting the pair ({:?}, {:?}) leaves the ground collection",
                    a.elements(),
                    b.elements()
                )));
            }
            out.push(MarkedBinomial {
                leading: Monomial::new(vec![a.clone(), b.clone()])?,
                trailing: Monomial::new(vec![u, v])?,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Two monomials map to the same torus monomial exactly when their contents
/// agree, i.e. their difference lies in the toric ideal.
pub fn same_toric_fiber(m1: &Monomial, m2: &Monomial) -> Result<bool> {
    if m1.degree() != m2.degree() {
        return Err(Error::Argument(format!(
            "degree mismatch: {} vs {}",
            m1.degree(),
            m2.degree()
        )));
    }
    let (a, b) = (&m1.factors[0], &m2.factors[0]);
    if a.len() != b.len() || a.ambient() != b.ambient() {
        return Err(Error::Argument("monomials over different variable sets".into()));
    }
    Ok(m1.content() == m2.content())
}

/// The full ground collection of all `k`-subsets of `[1..n]`, as multisets.
pub fn uniform_ground(n: u32, k: u32) -> BTreeSet<KMultiset> {
    crate::combinatorics::KSubset::all(n, k)
        .into_iter()
        .map(|s| s.as_multiset())
        .collect()
}
