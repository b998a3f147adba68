//! Problem data (A, beta, w), the extended matrix with the adjoined row
//! (w, 1), the saturated kernel lattice, the toric ideal in d1..dn, t, and
//! its initial ideal under the weight giving t weight -1.

use crate::error::{Error, Result};
use crate::groebner::{self, Ideal};
use crate::matrix;
use crate::poly::{Expo, Poly, Ring, RingRef};
use crate::rational::{rat, Rat};
use crate::standard_pairs::MonomialIdeal;

/// One problem instance: a d x n integer matrix whose columns generate
/// Z^d, a rational parameter vector, and an integer weight vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub a: Vec<Vec<i64>>,
    pub beta: Vec<Rat>,
    pub w: Vec<i64>,
}

impl ProblemSpec {
    pub fn new(a: Vec<Vec<i64>>, beta: Vec<Rat>, w: Vec<i64>) -> Result<ProblemSpec> {
        let d = a.len();
        if d == 0 {
            return Err(Error::InvalidSpec("matrix A has no rows".into()));
        }
        let n = a[0].len();
        if n == 0 {
            return Err(Error::InvalidSpec("matrix A has no columns".into()));
        }
        if a.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidSpec("ragged matrix A".into()));
        }
        if beta.len() != d {
            return Err(Error::InvalidSpec(format!(
                "beta has length {}, expected {}",
                beta.len(),
                d
            )));
        }
        if w.len() != n {
            return Err(Error::InvalidSpec(format!("w has length {}, expected {}", w.len(), n)));
        }
        if !matrix::columns_span_zd(&a) {
            return Err(Error::InvalidSpec("columns of A do not span Z^d".into()));
        }
        Ok(ProblemSpec { a, beta, w })
    }

    pub fn d(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.a[0].len()
    }
}

/// The (d+1) x (n+1) matrix: A padded by a zero column, with the extra row
/// (w_1, ..., w_n, 1).
pub fn build_atilde(spec: &ProblemSpec) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = spec
        .a
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.push(0);
            r
        })
        .collect();
    let mut last = spec.w.clone();
    last.push(1);
    m.push(last);
    m
}

/// Saturated, Hermite-reduced basis of the integer kernel of the extended
/// matrix. Errors when the matrix is rank deficient (degenerate w).
pub fn lattice_kernel(atilde: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let rows = atilde.len();
    let r = matrix::rank(&matrix::to_bigmat(atilde));
    if r != rows {
        return Err(Error::RankDeficient { rank: r, expected: rows });
    }
    matrix::kernel_basis(atilde)
}

/// The binomial attached to a kernel vector u: the monomial on the
/// positive support minus the monomial on the negative support.
pub fn kernel_binomial(ring: &RingRef, u: &[i64]) -> Poly {
    let plus: Expo = u.iter().map(|&x| x.max(0)).collect();
    let minus: Expo = u.iter().map(|&x| (-x).max(0)).collect();
    Poly::monomial(ring.clone(), plus, rat(1)).sub(&Poly::monomial(ring.clone(), minus, rat(1)))
}

/// The full toric ideal of the extended matrix in d1..dn, t: lattice-basis
/// binomials saturated by every variable in turn.
pub fn toric_ideal(atilde: &[Vec<i64>]) -> Result<Ideal> {
    let ncols = atilde[0].len();
    let ring = Ring::partials_t(ncols - 1);
    let basis = lattice_kernel(atilde)?;
    let gens: Vec<Poly> = basis.iter().map(|u| kernel_binomial(&ring, u)).collect();
    let ideal = Ideal::new(ring.clone(), gens);
    let vars: Vec<Poly> = (0..ncols).map(|j| Poly::var(ring.clone(), j)).collect();
    let saturated = groebner::saturate_seq(&ideal, &vars)?;
    let gb = groebner::buchberger(&saturated, &crate::poly::TermOrder::Grevlex)?;
    Ok(Ideal::new(ring, gb.elements))
}

/// tau-initial data: the initial ideal under t -> -1, whether it is a
/// monomial ideal, and if so its image in the partial variables (t powers
/// stripped, which is saturation by t for a monomial ideal).
#[derive(Debug, Clone)]
pub struct InTau {
    pub ideal: Ideal,
    pub monomial: bool,
    pub monomial_ideal: Option<MonomialIdeal>,
}

pub fn in_tau(toric: &Ideal) -> Result<InTau> {
    let nvars = toric.ring.nvars();
    let n = nvars - 1;
    let mut weight = vec![0i64; nvars];
    weight[n] = -1;
    let init = groebner::initial_ideal(toric, &weight)?;
    let monomial = init.gens.iter().all(|g| g.is_monomial());
    let monomial_ideal = if monomial {
        let gens: Vec<Expo> = init
            .gens
            .iter()
            .map(|g| {
                let (e, _) = g.terms().next().unwrap();
                e[..n].to_vec()
            })
            .collect();
        Some(MonomialIdeal::new(n, gens))
    } else {
        None
    };
    Ok(InTau { ideal: init, monomial, monomial_ideal })
}

/// Torus-parametrization check: a binomial from kernel vector u vanishes
/// under d_i -> s^{a_i} tau^{w_i}, t -> tau exactly when the extended
/// matrix kills u. Exponent bookkeeping only, used by tests and the
/// membership oracle.
pub fn vanishes_under_parametrization(atilde: &[Vec<i64>], u: &[i64]) -> bool {
    atilde.iter().all(|row| row.iter().zip(u.iter()).map(|(r, x)| r * x).sum::<i64>() == 0)
}
