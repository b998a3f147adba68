//! Exact integer linear algebra: Hermite normal form, saturated integer
//! kernels, rational rank, and dense rational linear solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;

pub type IMat = Vec<Vec<BigInt>>;

pub fn to_bigmat(m: &[Vec<i64>]) -> IMat {
    m.iter().map(|row| row.iter().map(|&e| BigInt::from(e)).collect()).collect()
}

fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter()
        .map(|e| i64::try_from(e).map_err(|_| Error::Parse("kernel entry overflows i64".into())))
        .collect()
}

/// Row-style Hermite normal form. Returns (H, U) with U unimodular and
/// U * M = H; H is in row echelon form with positive pivots and entries
/// above each pivot reduced into [0, pivot).
pub fn hermite_normal_form(m: &IMat) -> (IMat, IMat) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut h = m.clone();
    let mut u: IMat = (0..rows)
        .map(|i| (0..rows).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // gcd elimination below row r in column c
        loop {
            let mut nonzero: Vec<usize> = (r..rows).filter(|&i| !h[i][c].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            nonzero.sort_by_key(|&i| h[i][c].abs());
            let i0 = nonzero[0];
            h.swap(r, i0);
            u.swap(r, i0);
            let mut again = false;
            for i in (r + 1)..rows {
                if !h[i][c].is_zero() {
                    let q = h[i][c].div_floor(&h[r][c]);
                    for k in 0..cols {
                        let d = &q * &h[r][k];
                        h[i][k] -= d;
                    }
                    for k in 0..rows {
                        let d = &q * &u[r][k];
                        u[i][k] -= d;
                    }
                    if !h[i][c].is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        if !h[r][c].is_zero() {
            if h[r][c].is_negative() {
                for k in 0..cols {
                    h[r][k] = -h[r][k].clone();
                }
                for k in 0..rows {
                    u[r][k] = -u[r][k].clone();
                }
            }
            for i in 0..r {
                let q = h[i][c].div_floor(&h[r][c]);
                if !q.is_zero() {
                    for k in 0..cols {
                        let d = &q * &h[r][k];
                        h[i][k] -= d;
                    }
                    for k in 0..rows {
                        let d = &q * &u[r][k];
                        u[i][k] -= d;
                    }
                }
            }
            r += 1;
        }
    }
    (h, u)
}

pub fn rank(m: &IMat) -> usize {
    let (h, _) = hermite_normal_form(m);
    h.iter().filter(|row| row.iter().any(|e| !e.is_zero())).count()
}

/// Saturated basis of { u : M u = 0 } over the integers, Hermite-reduced for
/// canonical output. Transposed HNF bookkeeping: the transform rows matching
/// zero rows of H span the full kernel lattice.
pub fn kernel_basis(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let big = to_bigmat(m);
    let cols = if big.is_empty() { 0 } else { big[0].len() };
    let mt: IMat = (0..cols).map(|j| big.iter().map(|row| row[j].clone()).collect()).collect();
    let (h, u) = hermite_normal_form(&mt);
    let mut kernel: IMat = Vec::new();
    for (i, row) in h.iter().enumerate() {
        if row.iter().all(|e| e.is_zero()) {
            kernel.push(u[i].clone());
        }
    }
    let (reduced, _) = hermite_normal_form(&kernel);
    let mut out = Vec::new();
    for row in &reduced {
        if row.iter().any(|e| !e.is_zero()) {
            out.push(to_i64_vec(row)?);
        }
    }
    Ok(out)
}

/// Do the columns of `a` generate all of Z^d (not just a full-rank
/// sublattice)? Tested via the HNF of the column lattice.
pub fn columns_span_zd(a: &[Vec<i64>]) -> bool {
    let d = a.len();
    if d == 0 {
        return true;
    }
    let n = a[0].len();
    let at: Vec<Vec<i64>> = (0..n).map(|j| a.iter().map(|row| row[j]).collect()).collect();
    let (h, _) = hermite_normal_form(&to_bigmat(&at));
    // column lattice = Z^d iff the HNF of the transposed matrix is [I_d; 0]
    let mut pivots = 0usize;
    for row in &h {
        if row.iter().all(|e| e.is_zero()) {
            continue;
        }
        let Some(c) = row.iter().position(|e| !e.is_zero()) else { continue };
        if row[c] != BigInt::from(1) || c != pivots {
            return false;
        }
        pivots += 1;
    }
    pivots == d
}

fn det(m: &IMat) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: IMat = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// gcd of all maximal minors of a full-row-rank integer matrix; 1 certifies
/// the rows generate a saturated lattice.
pub fn gcd_maximal_minors(m: &[Vec<i64>]) -> BigInt {
    let big = to_bigmat(m);
    let r = big.len();
    if r == 0 {
        return BigInt::from(1);
    }
    let n = big[0].len();
    let mut g = BigInt::zero();
    let mut cols: Vec<usize> = (0..r).collect();
    loop {
        let sub: IMat = big.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
        g = g.gcd(&det(&sub));
        // next r-combination of 0..n
        let mut i = r;
        loop {
            if i == 0 {
                return g;
            }
            i -= 1;
            if cols[i] != i + n - r {
                cols[i] += 1;
                for k in (i + 1)..r {
                    cols[k] = cols[k - 1] + 1;
                }
                break;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LinSolve {
    Unique(Vec<Rat>),
    Inconsistent,
    Underdetermined,
}

/// Gaussian elimination over the rationals for A x = b.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> LinSolve {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for k in c..=cols {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..=cols {
                    let d = &f * &m[r][k];
                    m[i][k] = &m[i][k] - d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    for row in m.iter().skip(r) {
        if row[..cols].iter().all(|e| e.is_zero()) && !row[cols].is_zero() {
            return LinSolve::Inconsistent;
        }
    }
    if pivot_cols.len() < cols {
        return LinSolve::Underdetermined;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    LinSolve::Unique(x)
}
