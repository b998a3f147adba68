//! Truncated Gamma-series solutions t^e sum c_k(x) t^k attached to fake
//! exponents, and exact symbolic verification against every generator of
//! the modified system.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::indicial::FakeExponent;
use crate::matrix;
use crate::poly::weight_of;
use crate::rational::{falling, rat, Rat};
use crate::toric::{self, ProblemSpec};

/// One normally ordered operator term: coeff * x^p t^q d^r d_t^s.
#[derive(Debug, Clone, PartialEq)]
pub struct OpTerm {
    pub coeff: Rat,
    pub x_exp: Vec<i64>,
    pub t_exp: i64,
    pub dx_exp: Vec<i64>,
    pub dt_exp: i64,
}

/// A finite sum of normally ordered terms in x, t, d, d_t.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorExpr {
    pub nvars: usize,
    pub terms: Vec<OpTerm>,
}

/// The modified system: d Euler operators, the weight Euler operator, and
/// the operator images of the toric ideal generators.
#[derive(Debug, Clone)]
pub struct ModifiedSystem {
    pub spec: ProblemSpec,
    pub operators: Vec<(String, OperatorExpr)>,
}

pub fn build_system(spec: &ProblemSpec) -> Result<ModifiedSystem> {
    let n = spec.n();
    let mut operators = Vec::new();
    for (i, (row, beta_i)) in spec.a.iter().zip(spec.beta.iter()).enumerate() {
        let mut terms = Vec::new();
        for (j, &aij) in row.iter().enumerate() {
            if aij != 0 {
                let mut e = vec![0i64; n];
                e[j] = 1;
                terms.push(OpTerm {
                    coeff: rat(aij),
                    x_exp: e.clone(),
                    t_exp: 0,
                    dx_exp: e,
                    dt_exp: 0,
                });
            }
        }
        terms.push(OpTerm {
            coeff: -beta_i.clone(),
            x_exp: vec![0; n],
            t_exp: 0,
            dx_exp: vec![0; n],
            dt_exp: 0,
        });
        operators.push((format!("euler_{}", i + 1), OperatorExpr { nvars: n, terms }));
    }
    let mut terms = Vec::new();
    for (j, &wj) in spec.w.iter().enumerate() {
        if wj != 0 {
            let mut e = vec![0i64; n];
            e[j] = 1;
            terms.push(OpTerm { coeff: rat(wj), x_exp: e.clone(), t_exp: 0, dx_exp: e, dt_exp: 0 });
        }
    }
    terms.push(OpTerm { coeff: rat(-1), x_exp: vec![0; n], t_exp: 1, dx_exp: vec![0; n], dt_exp: 1 });
    operators.push(("euler_w".into(), OperatorExpr { nvars: n, terms }));
    let atilde = toric::build_atilde(spec);
    let ideal = toric::toric_ideal(&atilde)?;
    for (k, g) in ideal.gens.iter().enumerate() {
        let terms = g
            .terms()
            .map(|(e, c)| OpTerm {
                coeff: c.clone(),
                x_exp: vec![0; n],
                t_exp: e[n],
                dx_exp: e[..n].to_vec(),
                dt_exp: 0,
            })
            .collect();
        operators.push((format!("toric_{}", k + 1), OperatorExpr { nvars: n, terms }));
    }
    Ok(ModifiedSystem { spec: spec.clone(), operators })
}

/// Sorted term map of a formal sum of coeff * x^a t^b with rational
/// exponents; key is (t-exponent, x-exponent vector).
pub type SeriesMap = BTreeMap<(Rat, Vec<Rat>), Rat>;

/// Truncation of a Gamma-series: support over kernel lattice offsets u of
/// A with coefficient falling(v, u-) / falling(v+u, u+), t-exponent
/// w.(v+u).
#[derive(Debug, Clone)]
pub struct GammaSeries {
    pub exponent: Vec<Rat>,
    pub e: Rat,
    pub truncation: i64,
    /// lattice offset u -> coefficient of x^{v+u} t^{w.(v+u)}
    pub offsets: BTreeMap<Vec<i64>, Rat>,
}

const MAX_LATTICE_RANK: usize = 3;

/// Builds the truncated series for a fake exponent: coefficient 1 at the
/// root, support limited to lattice offsets with t-order shift in [0, K].
pub fn gamma_series(fe: &FakeExponent, spec: &ProblemSpec, k_max: i64) -> Result<GammaSeries> {
    let v = &fe.point;
    let n = spec.n();
    let e = crate::indicial::w_dot(&spec.w, v);
    let basis = matrix::kernel_basis(&spec.a)?;
    let r = basis.len();
    if r > MAX_LATTICE_RANK {
        return Err(Error::InvalidSpec(format!(
            "kernel lattice rank {r} exceeds supported bound {MAX_LATTICE_RANK}"
        )));
    }
    let bound = k_max + 8;
    let mut offsets: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
    let mut coeffs = vec![-bound; r];
    loop {
        let mut u = vec![0i64; n];
        for (c, b) in coeffs.iter().zip(basis.iter()) {
            for (uj, &bj) in u.iter_mut().zip(b.iter()) {
                *uj += c * bj;
            }
        }
        let k = weight_of(&u, &spec.w);
        if k <= k_max {
            let mut numer = Rat::from_integer(1.into());
            for (vj, &uj) in v.iter().zip(u.iter()) {
                if uj < 0 {
                    numer *= falling(vj, (-uj) as u64);
                }
            }
            if !numer.is_zero() {
                if k < 0 || (k == 0 && u.iter().any(|&x| x != 0)) {
                    // a nonzero admissible offset at nonpositive order would
                    // make c_0 infinite; check the denominator too before
                    // declaring the support unbounded
                    let mut denom = Rat::from_integer(1.into());
                    for (vj, &uj) in v.iter().zip(u.iter()) {
                        if uj > 0 {
                            denom *= falling(&(vj + rat(uj)), uj as u64);
                        }
                    }
                    if !denom.is_zero() {
                        return Err(Error::UnboundedSeriesSupport(u));
                    }
                } else {
                    let mut denom = Rat::from_integer(1.into());
                    for (vj, &uj) in v.iter().zip(u.iter()) {
                        if uj > 0 {
                            denom *= falling(&(vj + rat(uj)), uj as u64);
                        }
                    }
                    if denom.is_zero() {
                        return Err(Error::ResonantExponent(u));
                    }
                    offsets.insert(u, numer / denom);
                }
            }
        }
        // odometer
        let mut i = 0usize;
        loop {
            if i == r {
                break;
            }
            coeffs[i] += 1;
            if coeffs[i] <= bound {
                break;
            }
            coeffs[i] = -bound;
            i += 1;
        }
        if i == r {
            break;
        }
    }
    Ok(GammaSeries { exponent: v.clone(), e, truncation: k_max, offsets })
}

impl GammaSeries {
    /// The series as a sorted term map keyed by (t-exponent, x-exponent).
    pub fn term_map(&self, spec: &ProblemSpec) -> SeriesMap {
        let mut out = SeriesMap::new();
        for (u, c) in &self.offsets {
            let x_exp: Vec<Rat> =
                self.exponent.iter().zip(u.iter()).map(|(v, &o)| v + rat(o)).collect();
            let t_exp = &self.e + rat(weight_of(u, &spec.w));
            out.insert((t_exp, x_exp), c.clone());
        }
        out
    }
}

/// Exact action of a normally ordered operator on a term map, truncated at
/// t-order `cutoff`. Uses d_i x^c = c x^{c-1} for rational c.
pub fn apply_operator(op: &OperatorExpr, terms: &SeriesMap, cutoff: &Rat) -> SeriesMap {
    let mut out = SeriesMap::new();
    for ((t_exp, x_exp), coeff) in terms {
        for term in &op.terms {
            let mut c = coeff * &term.coeff;
            if c.is_zero() {
                continue;
            }
            for (xj, &rj) in x_exp.iter().zip(term.dx_exp.iter()) {
                if rj > 0 {
                    c *= falling(xj, rj as u64);
                }
            }
            if term.dt_exp > 0 {
                c *= falling(t_exp, term.dt_exp as u64);
            }
            if c.is_zero() {
                continue;
            }
            let new_x: Vec<Rat> = x_exp
                .iter()
                .zip(term.dx_exp.iter().zip(term.x_exp.iter()))
                .map(|(xj, (&rj, &pj))| xj - rat(rj) + rat(pj))
                .collect();
            let new_t = t_exp - rat(term.dt_exp) + rat(term.t_exp);
            if &new_t > cutoff {
                continue;
            }
            let entry = out.entry((new_t, new_x)).or_insert_with(Rat::zero);
            *entry += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Verification report: one entry per generator of the system.
#[derive(Debug, Clone)]
pub struct ResidualEntry {
    pub operator: String,
    pub ok: bool,
    pub verified_order: Rat,
    pub first_failure: Option<(Rat, Vec<Rat>, Rat)>,
}

#[derive(Debug, Clone)]
pub struct ResidualReport {
    pub entries: Vec<ResidualEntry>,
}

impl ResidualReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }
}

/// Applies every generator to the series and checks exact vanishing of all
/// terms with t-order at most e + K.
pub fn residual_check(sys: &ModifiedSystem, series: &GammaSeries, k_max: i64) -> ResidualReport {
    let cutoff = &series.e + rat(k_max);
    let terms = series.term_map(&sys.spec);
    let entries = sys
        .operators
        .iter()
        .map(|(name, op)| {
            let res = apply_operator(op, &terms, &cutoff);
            let first_failure = res
                .iter()
                .next()
                .map(|((t, x), c)| (t.clone(), x.clone(), c.clone()));
            ResidualEntry {
                operator: name.clone(),
                ok: res.is_empty(),
                verified_order: cutoff.clone(),
                first_failure,
            }
        })
        .collect();
    ResidualReport { entries }
}
