//! Commutative Buchberger engine over the rationals: reduced Groebner
//! bases, normal forms, elimination, saturation, and weight-initial ideals.
//!
//! Non-global weight vectors are handled through total-degree
//! homogenization: the initial ideal is read from a grevlex basis of the
//! homogenized ideal under a shifted (positive) weight order and then
//! dehomogenized. This keeps every Buchberger run on a global order.

use crate::error::{Error, Result};
use crate::poly::{Expo, Poly, Ring, RingRef, TermOrder};
use crate::rational::rat;

#[derive(Debug, Clone)]
pub struct Ideal {
    pub ring: RingRef,
    pub gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ring: RingRef, gens: Vec<Poly>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens }
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ring: RingRef,
    pub order: TermOrder,
    pub elements: Vec<Poly>,
    pub reduced: bool,
}

fn expo_lcm(a: &[i64], b: &[i64]) -> Expo {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

fn divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

pub fn spoly(f: &Poly, g: &Poly, order: &TermOrder) -> Poly {
    let (ef, cf) = f.leading(order).expect("nonzero");
    let (eg, cg) = g.leading(order).expect("nonzero");
    let l = expo_lcm(ef, eg);
    let mf: Expo = l.iter().zip(ef.iter()).map(|(a, b)| a - b).collect();
    let mg: Expo = l.iter().zip(eg.iter()).map(|(a, b)| a - b).collect();
    let a = f.mul_term(&mf, &cf.recip());
    let b = g.mul_term(&mg, &cg.recip());
    a.sub(&b)
}

/// Fully reduced remainder of `f` modulo `reducers`; no term of the result
/// is divisible by any reducer's leading term. Deterministic: the first
/// applicable reducer in list order is always used.
pub fn reduce(f: &Poly, reducers: &[Poly], order: &TermOrder) -> Poly {
    let leads: Vec<(Expo, crate::rational::Rat)> = reducers
        .iter()
        .map(|g| {
            let (e, c) = g.leading(order).expect("nonzero reducer");
            (e.clone(), c.clone())
        })
        .collect();
    let mut work = f.clone();
    let mut out = Poly::zero(f.ring().clone());
    while !work.is_zero() {
        let (le, lc) = {
            let (e, c) = work.leading(order).unwrap();
            (e.clone(), c.clone())
        };
        match leads.iter().position(|(e, _)| divides(e, &le)) {
            Some(i) => {
                let shift: Expo = le.iter().zip(leads[i].0.iter()).map(|(a, b)| a - b).collect();
                let factor = &lc / &leads[i].1;
                work = work.sub(&reducers[i].mul_term(&shift, &factor));
            }
            None => {
                out = out.add(&Poly::monomial(f.ring().clone(), le.clone(), lc.clone()));
                work = work.sub(&Poly::monomial(f.ring().clone(), le, lc));
            }
        }
    }
    out
}

/// Buchberger with normal pair selection; returns the unique reduced basis.
pub fn buchberger(ideal: &Ideal, order: &TermOrder) -> Result<GroebnerBasis> {
    if !order.is_global() {
        return Err(Error::NonGlobalOrder);
    }
    let mut basis: Vec<Poly> = ideal.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    let pair_key = |basis: &[Poly], (i, j): (usize, usize)| -> (i64, Expo) {
        let (ei, _) = basis[i].leading(order).unwrap();
        let (ej, _) = basis[j].leading(order).unwrap();
        let l = expo_lcm(ei, ej);
        (l.iter().sum(), l)
    };
    while !pairs.is_empty() {
        // normal strategy: smallest lcm degree first
        let mut best = 0usize;
        let mut best_key = pair_key(&basis, pairs[0]);
        for (k, &p) in pairs.iter().enumerate().skip(1) {
            let key = pair_key(&basis, p);
            if key < best_key {
                best = k;
                best_key = key;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        let (ei, _) = basis[i].leading(order).unwrap();
        let (ej, _) = basis[j].leading(order).unwrap();
        // product criterion
        let l = expo_lcm(ei, ej);
        let sum: Expo = ei.iter().zip(ej.iter()).map(|(a, b)| a + b).collect();
        if l == sum {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            for m in 0..k {
                pairs.push((m, k));
            }
        }
    }
    // minimalize
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (ei, _) = basis[i].leading(order).unwrap();
        let ei = ei.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (ej, _) = basis[j].leading(order).unwrap();
            if divides(ej, &ei) && (ej != &ei || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // tail-reduce each element against the others
    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        let r = if others.is_empty() {
            minimal[i].clone()
        } else {
            reduce(&minimal[i], &others, order)
        };
        reduced.push(r.monic(order));
    }
    reduced.sort_by(|a, b| {
        let (ea, _) = a.leading(order).unwrap();
        let (eb, _) = b.leading(order).unwrap();
        order.cmp(ea, eb)
    });
    Ok(GroebnerBasis { ring: ideal.ring.clone(), order: order.clone(), elements: reduced, reduced: true })
}

pub fn normal_form(f: &Poly, gb: &GroebnerBasis) -> Result<Poly> {
    if f.ring() != &gb.ring {
        return Err(Error::RingMismatch(
            f.ring().vars.join(","),
            gb.ring.vars.join(","),
        ));
    }
    if gb.elements.is_empty() {
        return Ok(f.clone());
    }
    Ok(reduce(f, &gb.elements, &gb.order))
}

/// Buchberger criterion: every S-polynomial reduces to zero. Test hook for
/// every emitted basis.
pub fn satisfies_buchberger_criterion(gb: &GroebnerBasis) -> bool {
    for i in 0..gb.elements.len() {
        for j in 0..i {
            let s = spoly(&gb.elements[i], &gb.elements[j], &gb.order);
            if !reduce(&s, &gb.elements, &gb.order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Generators of I intersected with the subring omitting `drop`, via a
/// weight elimination order.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let n = ideal.ring.nvars();
    let mut w = vec![0i64; n];
    for &j in drop {
        w[j] = 1;
    }
    let gb = buchberger(ideal, &TermOrder::WeightGrevlex(w))?;
    let kept: Vec<Poly> = gb
        .elements
        .iter()
        .filter(|g| drop.iter().all(|&j| !g.uses_var(j)))
        .map(|g| g.normalize_sign())
        .collect();
    Ok(Ideal::new(ideal.ring.clone(), kept))
}

/// (I : f^infinity) via one auxiliary variable: eliminate y from
/// <I, 1 - y f>.
pub fn saturate(ideal: &Ideal, f: &Poly) -> Result<Ideal> {
    assert!(!f.is_zero());
    let n = ideal.ring.nvars();
    let mut vars = ideal.ring.vars.clone();
    vars.push("y_sat".into());
    let ext = Ring::new(vars);
    let up: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Poly> = ideal.gens.iter().map(|g| g.map_vars(ext.clone(), &up)).collect();
    let f_up = f.map_vars(ext.clone(), &up);
    let y = Poly::var(ext.clone(), n);
    let one = Poly::constant(ext.clone(), rat(1));
    gens.push(one.sub(&y.mul(&f_up)));
    let elim = eliminate(&Ideal::new(ext, gens), &[n])?;
    let back: Vec<Poly> = elim
        .gens
        .iter()
        .map(|g| {
            debug_assert!(!g.uses_var(n));
            let mut g2 = g.clone();
            g2 = g2.substitute_one(n);
            // rebuild in the original ring
            Poly::from_terms(
                ideal.ring.clone(),
                g2.terms().map(|(e, c)| (e[..n].to_vec(), c.clone())).collect(),
            )
        })
        .collect();
    Ok(Ideal::new(ideal.ring.clone(), back))
}

/// Saturation by a list of polynomials, applied one at a time.
pub fn saturate_seq(ideal: &Ideal, fs: &[Poly]) -> Result<Ideal> {
    let mut cur = ideal.clone();
    for f in fs {
        cur = saturate(&cur, f)?;
    }
    Ok(cur)
}

/// in_w(I) for an arbitrary integer weight vector, via homogenization.
/// The result is returned as its reduced grevlex basis.
pub fn initial_ideal(ideal: &Ideal, weight: &[i64]) -> Result<Ideal> {
    let n = ideal.ring.nvars();
    if weight.len() != n {
        return Err(Error::LengthMismatch(weight.len(), n));
    }
    if ideal.is_zero_ideal() {
        return Ok(Ideal::new(ideal.ring.clone(), vec![]));
    }
    // degree-compatible basis first, so homogenizing the generators yields
    // the homogenization of the whole ideal
    let g0 = buchberger(ideal, &TermOrder::Grevlex)?;
    let mut vars = ideal.ring.vars.clone();
    vars.push("h_".into());
    let ext = Ring::new(vars);
    let homog: Vec<Poly> = g0
        .elements
        .iter()
        .map(|g| {
            let deg = g.total_degree();
            Poly::from_terms(
                ext.clone(),
                g.terms()
                    .map(|(e, c)| {
                        let mut ne = e.clone();
                        let d: i64 = e.iter().sum();
                        ne.push(deg - d);
                        (ne, c.clone())
                    })
                    .collect(),
            )
        })
        .collect();
    let shift = 1 + weight.iter().map(|&wi| (-wi).max(0)).max().unwrap_or(0);
    let mut w_pos: Vec<i64> = weight.iter().map(|&wi| wi + shift).collect();
    w_pos.push(shift);
    let g1 = buchberger(&Ideal::new(ext.clone(), homog), &TermOrder::WeightGrevlex(w_pos))?;
    let mut w_ext = weight.to_vec();
    w_ext.push(0);
    let ins: Vec<Poly> = g1
        .elements
        .iter()
        .map(|g| {
            let inf = g.initial_form(&w_ext)?.substitute_one(n);
            Ok(Poly::from_terms(
                ideal.ring.clone(),
                inf.terms().map(|(e, c)| (e[..n].to_vec(), c.clone())).collect(),
            ))
        })
        .collect::<Result<_>>()?;
    let gb = buchberger(&Ideal::new(ideal.ring.clone(), ins), &TermOrder::Grevlex)?;
    Ok(Ideal::new(ideal.ring.clone(), gb.elements))
}

/// Ideal equality through reduced grevlex bases.
pub fn ideal_eq(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring != b.ring {
        return Ok(false);
    }
    let ga = buchberger(a, &TermOrder::Grevlex)?;
    let gb = buchberger(b, &TermOrder::Grevlex)?;
    Ok(ga.elements == gb.elements)
}

pub fn contains(ideal: &Ideal, f: &Poly) -> Result<bool> {
    let gb = buchberger(ideal, &TermOrder::Grevlex)?;
    Ok(normal_form(f, &gb)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ideal(ring: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(ring.clone(), gens.iter().map(|s| parse_poly(ring, s).unwrap()).collect())
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let r = Ring::partials_t(2);
        let i = ideal(&r, &["d1^3*t^3 - d2"]);
        let gb = buchberger(&i, &TermOrder::Grevlex).unwrap();
        assert_eq!(gb.elements.len(), 1);
        assert_eq!(gb.elements[0].to_string(), "d1^3*t^3 - d2");
        assert!(satisfies_buchberger_criterion(&gb));
    }

    #[test]
    fn trivial_principal() {
        let r = Ring::new(vec!["x", "y"]);
        let gb = buchberger(&ideal(&r, &["x"]), &TermOrder::Grevlex).unwrap();
        assert_eq!(gb.elements.len(), 1);
        assert_eq!(gb.elements[0].to_string(), "x");
    }

    #[test]
    fn lex_elimination_example() {
        // {x^2 - y, x y - 1} under lex x > y gives {x - y^2, y^3 - 1};
        // display always orders terms by grevlex, hence "-y^2 + x"
        let r = Ring::new(vec!["x", "y"]);
        let gb = buchberger(&ideal(&r, &["x^2 - y", "x*y - 1"]), &TermOrder::Lex).unwrap();
        let printed: Vec<String> = gb.elements.iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["y^3 - 1".to_string(), "-y^2 + x".to_string()]);
        assert!(satisfies_buchberger_criterion(&gb));
    }

    #[test]
    fn normal_form_examples() {
        let r = Ring::new(vec!["x", "y"]);
        let i = ideal(&r, &["x^2 - y"]);
        let gb = buchberger(&i, &TermOrder::Lex).unwrap();
        for g in &i.gens {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
        let f = parse_poly(&r, "x^2*y").unwrap();
        assert_eq!(normal_form(&f, &gb).unwrap().to_string(), "y^2");
        let one = parse_poly(&r, "1").unwrap();
        assert_eq!(normal_form(&one, &gb).unwrap().to_string(), "1");
    }

    #[test]
    fn eliminate_parabola() {
        let r = Ring::new(vec!["x", "y", "t"]);
        let i = ideal(&r, &["x - t", "y - t^2"]);
        let e = eliminate(&i, &[2]).unwrap();
        let expected = ideal(&r, &["y - x^2"]);
        assert!(ideal_eq(&e, &expected).unwrap());
    }

    #[test]
    fn eliminate_trivial_and_empty() {
        let r = Ring::new(vec!["x", "y"]);
        let e = eliminate(&ideal(&r, &["x"]), &[1]).unwrap();
        assert!(ideal_eq(&e, &ideal(&r, &["x"])).unwrap());
        let r2 = Ring::new(vec!["y", "t"]);
        let e2 = eliminate(&ideal(&r2, &["1 - y*t"]), &[0]).unwrap();
        assert!(e2.is_zero_ideal());
    }

    #[test]
    fn saturation_basic_and_idempotent() {
        let r = Ring::new(vec!["t", "x"]);
        let i = ideal(&r, &["t*x"]);
        let t = parse_poly(&r, "t").unwrap();
        let s = saturate(&i, &t).unwrap();
        assert!(ideal_eq(&s, &ideal(&r, &["x"])).unwrap());
        let s2 = saturate(&s, &t).unwrap();
        assert!(ideal_eq(&s, &s2).unwrap());
    }

    #[test]
    fn initial_ideal_negative_weight() {
        let r = Ring::partials_t(2);
        let i = ideal(&r, &["d1^3*t^3 - d2"]);
        let init = initial_ideal(&i, &[0, 0, -1]).unwrap();
        assert!(ideal_eq(&init, &ideal(&r, &["d2"])).unwrap());
    }

    #[test]
    fn initial_ideal_of_monomial_ideal_is_itself() {
        let r = Ring::new(vec!["x", "y"]);
        let i = ideal(&r, &["x^2*y", "y^3"]);
        let init = initial_ideal(&i, &[-1, 2]).unwrap();
        assert!(ideal_eq(&init, &i).unwrap());
    }
}
