//! Monomial-ideal combinatorics: minimal generators, standard-pair
//! decomposition, top-dimensional pairs, and the volume lower bound
//! obtained by counting them at w = (1,...,1).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::Expo;
use crate::toric;

/// A monomial ideal in the partial-derivative variables only, kept as its
/// unique minimal generating set. The unit ideal is `[0,...,0]`; the zero
/// ideal has no generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub min_gens: Vec<Expo>,
}

fn divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Expo>) -> MonomialIdeal {
        let mut gens: Vec<Expo> = gens;
        gens.sort();
        gens.dedup();
        let mut keep = vec![true; gens.len()];
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                if i != j && keep[j] && divides(&gens[j], &gens[i]) && gens[i] != gens[j] {
                    keep[i] = false;
                    break;
                }
            }
        }
        let min_gens = gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect();
        MonomialIdeal { nvars, min_gens }
    }

    pub fn unit(nvars: usize) -> MonomialIdeal {
        MonomialIdeal { nvars, min_gens: vec![vec![0; nvars]] }
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal { nvars, min_gens: vec![] }
    }

    pub fn is_unit(&self) -> bool {
        self.min_gens.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn contains_monomial(&self, m: &[i64]) -> bool {
        self.min_gens.iter().any(|g| divides(g, m))
    }
}

/// A pair (root, face): the cylinder of monomials equal to the root off the
/// face and arbitrary on it. Standard pairs are the maximal admissible
/// cylinders of standard monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StandardPair {
    pub root: Expo,
    pub face: BTreeSet<usize>,
}

impl StandardPair {
    /// Does the cylinder stay outside M? Holds iff every generator exceeds
    /// the root in some coordinate off the face.
    fn admissible(&self, m: &MonomialIdeal) -> bool {
        m.min_gens.iter().all(|g| {
            (0..m.nvars).any(|j| !self.face.contains(&j) && g[j] > self.root[j])
        })
    }

    /// Cylinder containment: face grows, root agrees off the larger face.
    fn contained_in(&self, other: &StandardPair) -> bool {
        self.face.is_subset(&other.face)
            && (0..self.root.len())
                .all(|j| other.face.contains(&j) || self.root[j] == other.root[j])
    }

    pub fn contains_monomial(&self, m: &[i64]) -> bool {
        (0..m.len()).all(|j| {
            if self.face.contains(&j) {
                m[j] >= 0
            } else {
                m[j] == self.root[j]
            }
        })
    }
}

/// The complete standard-pair decomposition: maximal admissible pairs.
/// Empty for the unit ideal; the single pair (1, all variables) for the
/// zero ideal.
pub fn standard_pairs(m: &MonomialIdeal) -> Vec<StandardPair> {
    let n = m.nvars;
    if m.is_unit() {
        return vec![];
    }
    if m.is_zero_ideal() {
        return vec![StandardPair { root: vec![0; n], face: (0..n).collect() }];
    }
    // bound roots componentwise by the generator exponents; maximal pairs
    // never reach the bound
    let bound: Vec<i64> = (0..n)
        .map(|j| m.min_gens.iter().map(|g| g[j]).max().unwrap_or(0))
        .collect();
    let mut candidates: Vec<StandardPair> = Vec::new();
    for mask in 0..(1u32 << n) {
        let face: BTreeSet<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        // a face carrying a fully supported generator admits nothing
        if m.min_gens.iter().any(|g| (0..n).all(|j| g[j] == 0 || face.contains(&j))) {
            continue;
        }
        let free: Vec<usize> = (0..n).filter(|j| !face.contains(j)).collect();
        let mut root = vec![0i64; n];
        loop {
            let pair = StandardPair { root: root.clone(), face: face.clone() };
            if pair.admissible(m) {
                candidates.push(pair);
            }
            // odometer over the free coordinates
            let mut k = 0usize;
            loop {
                if k == free.len() {
                    break;
                }
                let j = free[k];
                root[j] += 1;
                if root[j] < bound[j].max(1) {
                    break;
                }
                root[j] = 0;
                k += 1;
            }
            if k == free.len() {
                break;
            }
        }
    }
    // prune non-maximal pairs; every maximal pair lies in the candidate set
    let mut out: Vec<StandardPair> = Vec::new();
    for (i, p) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && p.contained_in(q) && !(q.contained_in(p) && j > i));
        if !dominated {
            out.push(p.clone());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The pairs of maximal face size (the Krull dimension of the quotient).
pub fn top_pairs(m: &MonomialIdeal) -> Vec<StandardPair> {
    let all = standard_pairs(m);
    let dim = all.iter().map(|p| p.face.len()).max().unwrap_or(0);
    all.into_iter().filter(|p| p.face.len() == dim).collect()
}

/// Lower bound for the holonomic rank: the number of top-dimensional
/// standard pairs of the t-initial toric ideal at w = (1,...,1). When that
/// initial ideal is not monomial, the grevlex leading-term ideal of it is
/// used instead (a further initial-ideal refinement with the same pair
/// count).
pub fn rank_lower_bound(a: &[Vec<i64>]) -> Result<usize> {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let beta = vec![crate::rational::rat(0); a.len()];
    let spec = toric::ProblemSpec::new(a.to_vec(), beta, vec![1; n])?;
    let atilde = toric::build_atilde(&spec);
    let ideal = toric::toric_ideal(&atilde)?;
    let tau = toric::in_tau(&ideal)?;
    let m = match tau.monomial_ideal {
        Some(m) => m,
        None => {
            // refine: leading-term ideal of the tau-initial ideal
            let gb = crate::groebner::buchberger(&tau.ideal, &crate::poly::TermOrder::Grevlex)?;
            let lead: Vec<Expo> = gb
                .elements
                .iter()
                .map(|g| {
                    let (e, _) = g.leading(&crate::poly::TermOrder::Grevlex).unwrap();
                    e[..n].to_vec()
                })
                .collect();
            MonomialIdeal::new(n, lead)
        }
    };
    if m.is_unit() {
        return Err(Error::NonGenericWeight("unit initial ideal at w = (1,...,1)".into()));
    }
    Ok(top_pairs(&m).len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect())
    }

    #[test]
    fn minimal_generators() {
        let m = ideal(2, &[&[1, 1], &[2, 1], &[0, 2]]);
        assert_eq!(m.min_gens, vec![vec![0, 2], vec![1, 1]]);
    }

    #[test]
    fn principal_d2() {
        // <d2> in two variables: single pair (1, {d1})
        let m = ideal(2, &[&[0, 1]]);
        let pairs = standard_pairs(&m);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].root, vec![0, 0]);
        assert_eq!(pairs[0].face, [0usize].into_iter().collect());
        assert_eq!(top_pairs(&m), pairs);
    }

    #[test]
    fn unit_ideal_has_no_pairs() {
        assert!(standard_pairs(&MonomialIdeal::unit(3)).is_empty());
    }

    #[test]
    fn zero_ideal_single_full_pair() {
        let pairs = standard_pairs(&MonomialIdeal::zero(2));
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].face.len(), 2);
    }

    #[test]
    fn xy_y2_decomposition() {
        // <xy, y^2>: pairs { (1, {x}), (y, {}) }; top: { (1, {x}) }
        let m = ideal(2, &[&[1, 1], &[0, 2]]);
        let pairs = standard_pairs(&m);
        assert_eq!(pairs.len(), 2);
        assert!(pairs.contains(&StandardPair { root: vec![0, 0], face: [0].into_iter().collect() }));
        assert!(pairs.contains(&StandardPair { root: vec![0, 1], face: BTreeSet::new() }));
        let top = top_pairs(&m);
        assert_eq!(top, vec![StandardPair { root: vec![0, 0], face: [0].into_iter().collect() }]);
    }

    #[test]
    fn cover_property_brute_force() {
        // every monomial of degree <= 6 is standard iff covered by a pair
        let m = ideal(3, &[&[2, 0, 1], &[0, 3, 0], &[1, 1, 1]]);
        let pairs = standard_pairs(&m);
        let mut mono = vec![0i64; 3];
        fn rec(mono: &mut Vec<i64>, j: usize, left: i64, m: &MonomialIdeal, pairs: &[StandardPair]) {
            if j == mono.len() {
                let standard = !m.contains_monomial(mono);
                let covered = pairs.iter().any(|p| p.contains_monomial(mono));
                assert_eq!(standard, covered, "monomial {mono:?}");
                return;
            }
            for e in 0..=left {
                mono[j] = e;
                rec(mono, j + 1, left - e, m, pairs);
            }
            mono[j] = 0;
        }
        rec(&mut mono, 0, 6, &m, &pairs);
    }

    #[test]
    fn airy_rank_bound() {
        assert_eq!(rank_lower_bound(&[vec![1, 3]]).unwrap(), 3);
    }

    #[test]
    fn single_column_rank_bound() {
        assert_eq!(rank_lower_bound(&[vec![1]]).unwrap(), 1);
    }

    #[test]
    fn lifted_segment_rank_bound() {
        assert_eq!(rank_lower_bound(&[vec![1, 1, 1], vec![0, 1, 2]]).unwrap(), 2);
    }
}
