//! The indicial polynomial along t = 0: distractions, fake exponents, the
//! standard-pair product formula, and the independent commutative
//! elimination route, with exact cross-validation between the two.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{self, Ideal};
use crate::matrix::{solve_rational, LinSolve};
use crate::poly::{Poly, Ring, RingRef};
use crate::rational::{rat, Rat};
use crate::standard_pairs::{top_pairs, MonomialIdeal, StandardPair};
use crate::toric::{self, ProblemSpec};

/// A top-dimensional standard pair together with the unique rational point
/// solving { theta_j = root_j off the face } and A theta = beta.
#[derive(Debug, Clone, PartialEq)]
pub struct FakeExponent {
    pub pair: StandardPair,
    pub point: Vec<Rat>,
}

/// Univariate polynomial in s over the rationals; the zero polynomial
/// encodes the empty-T(M) case.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicialPolynomial {
    pub poly: Poly,
    pub roots: Option<Vec<Rat>>,
}

pub fn s_ring() -> RingRef {
    Ring::new(vec!["s"])
}

impl IndicialPolynomial {
    pub fn zero() -> IndicialPolynomial {
        IndicialPolynomial { poly: Poly::zero(s_ring()), roots: None }
    }

    pub fn from_roots(roots: Vec<Rat>) -> IndicialPolynomial {
        let ring = s_ring();
        let s = Poly::var(ring.clone(), 0);
        let mut poly = Poly::constant(ring.clone(), rat(1));
        for r in &roots {
            poly = poly.mul(&s.sub(&Poly::constant(ring.clone(), r.clone())));
        }
        let mut sorted = roots;
        sorted.sort();
        IndicialPolynomial { poly, roots: Some(sorted) }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> i64 {
        self.poly.total_degree()
    }

    /// Ascending coefficient list in s; empty for the zero polynomial.
    pub fn coeffs(&self) -> Vec<Rat> {
        if self.poly.is_zero() {
            return vec![];
        }
        let deg = self.poly.total_degree() as usize;
        let mut out = vec![Rat::zero(); deg + 1];
        for (e, c) in self.poly.terms() {
            out[e[0] as usize] = c.clone();
        }
        out
    }
}

impl std::fmt::Display for IndicialPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// The d+1 Euler forms in th1..thn, th_t: rows of A theta - beta, and
/// w theta - th_t.
pub fn euler_forms(spec: &ProblemSpec, ring: &RingRef) -> Vec<Poly> {
    let n = spec.n();
    let mut out = Vec::new();
    for (row, b) in spec.a.iter().zip(spec.beta.iter()) {
        let mut p = Poly::constant(ring.clone(), -b.clone());
        for (j, &aij) in row.iter().enumerate() {
            p = p.add(&Poly::var(ring.clone(), j).scale(&rat(aij)));
        }
        out.push(p);
    }
    let mut p = Poly::var(ring.clone(), n).scale(&rat(-1));
    for (j, &wj) in spec.w.iter().enumerate() {
        p = p.add(&Poly::var(ring.clone(), j).scale(&rat(wj)));
    }
    out.push(p);
    out
}

/// Falling-factorial image of a monomial ideal: each minimal generator
/// d^u maps to prod_j theta_j (theta_j - 1) ... (theta_j - u_j + 1).
pub fn distraction(m: &MonomialIdeal, ring: &RingRef) -> Vec<Poly> {
    m.min_gens
        .iter()
        .map(|u| {
            let mut p = Poly::constant(ring.clone(), rat(1));
            for (j, &uj) in u.iter().enumerate() {
                for i in 0..uj {
                    let factor = Poly::var(ring.clone(), j)
                        .sub(&Poly::constant(ring.clone(), rat(i)));
                    p = p.mul(&factor);
                }
            }
            p
        })
        .collect()
}

/// The tau-initial monomial ideal of the toric ideal for this spec;
/// errors with NonGenericWeight when it is not monomial.
pub fn tau_monomial_ideal(spec: &ProblemSpec) -> Result<MonomialIdeal> {
    let atilde = toric::build_atilde(spec);
    let ideal = toric::toric_ideal(&atilde)?;
    let tau = toric::in_tau(&ideal)?;
    match tau.monomial_ideal {
        Some(m) => Ok(m),
        None => {
            let offender = tau
                .ideal
                .gens
                .iter()
                .find(|g| !g.is_monomial())
                .map(|g| g.to_string())
                .unwrap_or_default();
            Err(Error::NonGenericWeight(offender))
        }
    }
}

/// One fake exponent per top-dimensional standard pair, sorted by point.
pub fn fake_exponents(m: &MonomialIdeal, spec: &ProblemSpec) -> Result<Vec<FakeExponent>> {
    let n = spec.n();
    let mut out = Vec::new();
    for pair in top_pairs(m) {
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let mut rhs: Vec<Rat> = Vec::new();
        for j in 0..n {
            if !pair.face.contains(&j) {
                let mut row = vec![Rat::zero(); n];
                row[j] = rat(1);
                rows.push(row);
                rhs.push(rat(pair.root[j]));
            }
        }
        for (row, b) in spec.a.iter().zip(spec.beta.iter()) {
            rows.push(row.iter().map(|&x| rat(x)).collect());
            rhs.push(b.clone());
        }
        let pair_name = format!("(root {:?}, face {:?})", pair.root, pair.face);
        match solve_rational(&rows, &rhs) {
            LinSolve::Unique(point) => out.push(FakeExponent { pair, point }),
            LinSolve::Inconsistent => {
                return Err(Error::NonGenericParameter { pair: pair_name, kind: "inconsistent".into() })
            }
            LinSolve::Underdetermined => {
                return Err(Error::NonGenericParameter {
                    pair: pair_name,
                    kind: "underdetermined".into(),
                })
            }
        }
    }
    out.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(out)
}

pub fn w_dot(w: &[i64], point: &[Rat]) -> Rat {
    w.iter().zip(point.iter()).map(|(&wi, p)| p * rat(wi)).sum()
}

/// Product formula over the top-dimensional standard pairs:
/// prod (s - w . point); the zero polynomial when T(M) is empty.
pub fn indicial_by_pairs(spec: &ProblemSpec) -> Result<IndicialPolynomial> {
    let m = tau_monomial_ideal(spec)?;
    if m.is_unit() {
        return Ok(IndicialPolynomial::zero());
    }
    let exps = fake_exponents(&m, spec)?;
    if exps.is_empty() {
        return Ok(IndicialPolynomial::zero());
    }
    let roots: Vec<Rat> = exps.iter().map(|fe| w_dot(&spec.w, &fe.point)).collect();
    Ok(IndicialPolynomial::from_roots(roots))
}

/// Generators of the distraction system: the distraction of the tau-initial
/// monomial ideal together with the d+1 Euler forms, in th1..thn, th_t.
pub fn distraction_system(spec: &ProblemSpec) -> Result<Ideal> {
    let m = tau_monomial_ideal(spec)?;
    let ring = Ring::thetas(spec.n());
    let mut gens = distraction(&m, &ring);
    gens.extend(euler_forms(spec, &ring));
    Ok(Ideal::new(ring, gens))
}

/// Independent route: eliminate th1..thn from the distraction system and
/// read the monic generator of the intersection with Q[th_t].
pub fn indicial_by_elimination(spec: &ProblemSpec) -> Result<IndicialPolynomial> {
    let n = spec.n();
    let system = distraction_system(spec)?;
    let drop: Vec<usize> = (0..n).collect();
    let elim = groebner::eliminate(&system, &drop)?;
    if elim.is_zero_ideal() {
        return Ok(IndicialPolynomial::zero());
    }
    // reduced elimination basis of a univariate ideal: single generator
    let gen = elim
        .gens
        .iter()
        .min_by_key(|g| g.total_degree())
        .expect("nonempty")
        .clone();
    if gen.is_constant() {
        return Err(Error::UnitIndicialIdeal);
    }
    let order = crate::poly::TermOrder::Grevlex;
    let monic = gen.monic(&order);
    let ring = s_ring();
    let poly = Poly::from_terms(
        ring,
        monic.terms().map(|(e, c)| (vec![e[n]], c.clone())).collect(),
    );
    let roots = rational_roots(&poly);
    Ok(IndicialPolynomial { poly, roots })
}

/// Rational roots with multiplicity via the rational root theorem, with a
/// size bailout; None when the polynomial does not split (or is too big to
/// try).
fn rational_roots(poly: &Poly) -> Option<Vec<Rat>> {
    if poly.is_zero() {
        return None;
    }
    let deg = poly.total_degree() as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (e, c) in poly.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    let mut roots = Vec::new();
    let mut cur = coeffs;
    while cur.len() > 1 {
        // strip zero roots
        if cur[0].is_zero() {
            roots.push(Rat::zero());
            cur.remove(0);
            continue;
        }
        // integer form
        let mut denom_lcm = BigInt::one();
        for c in &cur {
            let g = num_integer::Integer::gcd(&denom_lcm, c.denom());
            denom_lcm = &denom_lcm / g * c.denom();
        }
        let ints: Vec<BigInt> =
            cur.iter().map(|c| c.numer() * (&denom_lcm / c.denom())).collect();
        let a0 = ints[0].magnitude().clone();
        let an = ints[ints.len() - 1].magnitude().clone();
        let limit = num_bigint::BigUint::from(1_000_000_000_000u64);
        if a0 > limit || an > limit {
            return None;
        }
        let divisors = |v: u64| -> Vec<u64> {
            let mut d = Vec::new();
            let mut i = 1u64;
            while i * i <= v {
                if v % i == 0 {
                    d.push(i);
                    d.push(v / i);
                }
                i += 1;
            }
            d
        };
        let a0u: u64 = a0.try_into().ok()?;
        let anu: u64 = an.try_into().ok()?;
        let mut found = None;
        'search: for p in divisors(a0u) {
            for q in divisors(anu) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(BigInt::from(sign * p as i64), BigInt::from(q as i64));
                    let mut val = Rat::zero();
                    for c in cur.iter().rev() {
                        val = val * &cand + c;
                    }
                    if val.is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let root = found?;
        // deflate by (s - root)
        let mut next = vec![Rat::zero(); cur.len() - 1];
        let mut carry = Rat::zero();
        for i in (0..cur.len() - 1).rev() {
            carry = &cur[i + 1] + &carry * &root;
            next[i] = carry.clone();
        }
        cur = next;
        roots.push(root);
    }
    roots.sort();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_frac;

    fn airy() -> ProblemSpec {
        ProblemSpec::new(vec![vec![1, 3]], vec![rat(-1)], vec![-1, 0]).unwrap()
    }

    fn bessel(w: Vec<i64>) -> ProblemSpec {
        ProblemSpec::new(vec![vec![-1, 1, 2]], vec![rat_frac(1, 2)], w).unwrap()
    }

    #[test]
    fn distraction_examples() {
        let ring = Ring::thetas(2);
        let m = MonomialIdeal::new(2, vec![vec![0, 1]]);
        let d = distraction(&m, &ring);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].to_string(), "th2");
        let m2 = MonomialIdeal::new(1, vec![vec![2]]);
        let d2 = distraction(&m2, &Ring::thetas(1));
        assert_eq!(d2[0].to_string(), "th1^2 - th1");
    }

    #[test]
    fn distraction_evaluation_law() {
        // distraction(d^u) vanishes at p in N^n iff d^u kills x^p
        let ring = Ring::thetas(2);
        let m = MonomialIdeal::new(2, vec![vec![2, 1]]);
        let d = &distraction(&m, &ring)[0];
        for p1 in 0..5i64 {
            for p2 in 0..5i64 {
                let killed = p1 < 2 || p2 < 1;
                let point = vec![rat(p1), rat(p2), rat(0)];
                assert_eq!(d.eval(&point).is_zero(), killed, "at ({p1},{p2})");
            }
        }
    }

    #[test]
    fn airy_fake_exponent() {
        let m = tau_monomial_ideal(&airy()).unwrap();
        let exps = fake_exponents(&m, &airy()).unwrap();
        assert_eq!(exps.len(), 1);
        assert_eq!(exps[0].point, vec![rat(-1), rat(0)]);
    }

    #[test]
    fn airy_homogeneous_beta() {
        let spec = ProblemSpec::new(vec![vec![1, 3]], vec![rat(0)], vec![-1, 0]).unwrap();
        let m = tau_monomial_ideal(&spec).unwrap();
        let exps = fake_exponents(&m, &spec).unwrap();
        assert_eq!(exps[0].point, vec![rat(0), rat(0)]);
    }

    #[test]
    fn airy_indicial_both_routes() {
        let p = indicial_by_pairs(&airy()).unwrap();
        assert_eq!(p.poly.to_string(), "s - 1");
        assert_eq!(p.roots, Some(vec![rat(1)]));
        let e = indicial_by_elimination(&airy()).unwrap();
        assert_eq!(e.poly, p.poly);
        assert_eq!(e.roots, Some(vec![rat(1)]));
    }

    #[test]
    fn bessel_zero_indicial() {
        let p = indicial_by_pairs(&bessel(vec![-2, -1, 0])).unwrap();
        assert!(p.is_zero());
        match indicial_by_elimination(&bessel(vec![-2, -1, 0])) {
            Err(Error::UnitIndicialIdeal) => {}
            other => panic!("expected UnitIndicialIdeal, got {other:?}"),
        }
    }

    #[test]
    fn bessel_cubic_indicial() {
        // the three fake exponents are (-1/2,0,0), (0,0,1/4), (0,1,-1/4)
        // with w-images -3/2, 1/4, 7/4; both routes agree on the cubic and
        // the roots match the solution exponents verified by residual_check
        let expected =
            IndicialPolynomial::from_roots(vec![rat_frac(-3, 2), rat_frac(1, 4), rat_frac(7, 4)]);
        let p = indicial_by_pairs(&bessel(vec![3, 2, 1])).unwrap();
        assert_eq!(p.poly, expected.poly);
        assert_eq!(p.roots, Some(vec![rat_frac(-3, 2), rat_frac(1, 4), rat_frac(7, 4)]));
        let e = indicial_by_elimination(&bessel(vec![3, 2, 1])).unwrap();
        assert_eq!(e.poly, expected.poly);
        // the fake exponents themselves
        let m = tau_monomial_ideal(&bessel(vec![3, 2, 1])).unwrap();
        let exps = fake_exponents(&m, &bessel(vec![3, 2, 1])).unwrap();
        let points: Vec<Vec<Rat>> = exps.iter().map(|fe| fe.point.clone()).collect();
        assert!(points.contains(&vec![rat(0), rat(1), rat_frac(-1, 4)]));
        assert!(points.contains(&vec![rat_frac(-1, 2), rat(0), rat(0)]));
        assert!(points.contains(&vec![rat(0), rat(0), rat_frac(1, 4)]));
    }

    #[test]
    fn fake_exponents_satisfy_distraction_and_euler() {
        for spec in [airy(), bessel(vec![3, 2, 1])] {
            let m = tau_monomial_ideal(&spec).unwrap();
            let ring = Ring::thetas(spec.n());
            let dgens = distraction(&m, &ring);
            let egens = euler_forms(&spec, &ring);
            for fe in fake_exponents(&m, &spec).unwrap() {
                let mut point = fe.point.clone();
                point.push(w_dot(&spec.w, &fe.point));
                for g in dgens.iter().chain(egens.iter()) {
                    assert!(g.eval(&point).is_zero(), "{g} at {point:?}");
                }
            }
        }
    }

    #[test]
    fn rational_root_extraction() {
        let p = IndicialPolynomial::from_roots(vec![rat_frac(3, 2), rat(-2), rat_frac(3, 2)]);
        assert_eq!(
            rational_roots(&p.poly),
            Some(vec![rat(-2), rat_frac(3, 2), rat_frac(3, 2)])
        );
    }
}
