//! Multivariate polynomials over the rationals: rings, exponent vectors,
//! term orders, arithmetic, canonical printing and parsing.
//!
//! Polynomials are sparse term maps from exponent vectors to nonzero
//! rational coefficients. The canonical text form sorts terms descending
//! under grevlex with variable precedence equal to ring order, so equal
//! polynomials always print identically.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, parse_rat, Rat};

pub type Expo = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    pub vars: Vec<String>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> RingRef {
        Arc::new(Ring { vars: vars.into_iter().map(Into::into).collect() })
    }

    /// d1, ..., dn, t — the ring housing toric ideals.
    pub fn partials_t(n: usize) -> RingRef {
        let mut vars: Vec<String> = (1..=n).map(|i| format!("d{i}")).collect();
        vars.push("t".into());
        Ring::new(vars)
    }

    /// th1, ..., thn, th_t — the ring housing distractions and Euler forms.
    pub fn thetas(n: usize) -> RingRef {
        let mut vars: Vec<String> = (1..=n).map(|i| format!("th{i}")).collect();
        vars.push("th_t".into());
        Ring::new(vars)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    Grevlex,
    /// Weight comparison first, grevlex tiebreak. Global only for
    /// componentwise nonnegative weights.
    WeightGrevlex(Vec<i64>),
}

fn grevlex_cmp(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for j in (0..a.len()).rev() {
        match a[j].cmp(&b[j]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

pub fn weight_of(expo: &[i64], w: &[i64]) -> i64 {
    expo.iter().zip(w.iter()).map(|(e, wi)| e * wi).sum()
}

impl TermOrder {
    pub fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            TermOrder::Lex => {
                for j in 0..a.len() {
                    match a[j].cmp(&b[j]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            TermOrder::Grevlex => grevlex_cmp(a, b),
            TermOrder::WeightGrevlex(w) => {
                debug_assert_eq!(w.len(), a.len());
                match weight_of(a, w).cmp(&weight_of(b, w)) {
                    Ordering::Equal => grevlex_cmp(a, b),
                    o => o,
                }
            }
        }
    }

    /// Checked comparison; errors on exponent length mismatch.
    pub fn compare(&self, a: &[i64], b: &[i64]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        if let TermOrder::WeightGrevlex(w) = self {
            if w.len() != a.len() {
                return Err(Error::LengthMismatch(w.len(), a.len()));
            }
        }
        Ok(self.cmp(a, b))
    }

    /// A global (monomial) order has 1 as the unique smallest monomial.
    pub fn is_global(&self) -> bool {
        match self {
            TermOrder::Lex | TermOrder::Grevlex => true,
            TermOrder::WeightGrevlex(w) => w.iter().all(|&wi| wi >= 0),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: RingRef,
    terms: BTreeMap<Expo, Rat>,
}

impl Poly {
    pub fn zero(ring: RingRef) -> Poly {
        Poly { ring, terms: BTreeMap::new() }
    }

    pub fn constant(ring: RingRef, c: Rat) -> Poly {
        let n = ring.nvars();
        Poly::monomial(ring, vec![0; n], c)
    }

    pub fn var(ring: RingRef, idx: usize) -> Poly {
        let n = ring.nvars();
        let mut e = vec![0; n];
        e[idx] = 1;
        Poly::monomial(ring, e, Rat::one())
    }

    pub fn monomial(ring: RingRef, expo: Expo, coeff: Rat) -> Poly {
        assert_eq!(expo.len(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(expo, coeff);
        }
        Poly { ring, terms }
    }

    pub fn from_terms(ring: RingRef, terms: Vec<(Expo, Rat)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Rat)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    fn add_term(&mut self, expo: Expo, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(expo);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.vars.join(","),
                other.ring.vars.join(","),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.ring, other.ring);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.ring, other.ring);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.ring.clone());
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, expo: &[i64], coeff: &Rat) -> Poly {
        if coeff.is_zero() {
            return Poly::zero(self.ring.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let ne: Expo = e.iter().zip(expo.iter()).map(|(a, b)| a + b).collect();
                (ne, c * coeff)
            })
            .collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.ring, other.ring);
        let mut out = Poly::zero(self.ring.clone());
        for (e, c) in &other.terms {
            for (e2, c2) in &self.terms {
                let ne: Expo = e2.iter().zip(e.iter()).map(|(a, b)| a + b).collect();
                out.add_term(ne, c2 * c);
            }
        }
        out
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn leading(&self, order: &TermOrder) -> Option<(&Expo, &Rat)> {
        self.terms.iter().max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Sum of the terms of maximal weight. Errors on the zero polynomial.
    pub fn initial_form(&self, weight: &[i64]) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if weight.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch(weight.len(), self.ring.nvars()));
        }
        let max_w = self.terms.keys().map(|e| weight_of(e, weight)).max().unwrap();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| weight_of(e, weight) == max_w)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    pub fn monic(&self, order: &TermOrder) -> Poly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Makes the leading coefficient under the ring's default (grevlex)
    /// order positive; canonical sign for printed generators.
    pub fn normalize_sign(&self) -> Poly {
        match self.leading(&TermOrder::Grevlex) {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn uses_var(&self, j: usize) -> bool {
        self.terms.keys().any(|e| e[j] != 0)
    }

    pub fn support_vars(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for e in self.terms.keys() {
            for (j, &x) in e.iter().enumerate() {
                if x != 0 {
                    s.insert(j);
                }
            }
        }
        s
    }

    /// Moves the polynomial into `target` along `var_map`, where
    /// `var_map[i]` is the target index of source variable i.
    pub fn map_vars(&self, target: RingRef, var_map: &[usize]) -> Poly {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; n];
            for (i, &x) in e.iter().enumerate() {
                ne[var_map[i]] += x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Substitutes 1 for variable `j` (drops its exponents), staying in the
    /// same ring.
    pub fn substitute_one(&self, j: usize) -> Poly {
        let mut out = Poly::zero(self.ring.clone());
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[j] = 0;
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Evaluates at a rational point (all variables).
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (j, &k) in e.iter().enumerate() {
                assert!(k >= 0);
                for _ in 0..k {
                    term *= &point[j];
                }
            }
            acc += term;
        }
        acc
    }

    fn fmt_term(&self, expo: &[i64], coeff: &Rat, first: bool, out: &mut String) {
        let neg = coeff.is_negative();
        if first {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs = coeff.abs();
        let mut factors: Vec<String> = Vec::new();
        for (j, &k) in expo.iter().enumerate() {
            if k == 1 {
                factors.push(self.ring.vars[j].clone());
            } else if k != 0 {
                factors.push(format!("{}^{}", self.ring.vars[j], k));
            }
        }
        if factors.is_empty() {
            out.push_str(&fmt_rat(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&fmt_rat(&abs));
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Expo> = self.terms.keys().collect();
        keys.sort_by(|a, b| TermOrder::Grevlex.cmp(b, a));
        let mut out = String::new();
        for (i, e) in keys.iter().enumerate() {
            self.fmt_term(e, &self.terms[*e], i == 0, &mut out);
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- parsing ----------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut num = String::new();
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                num.push(chars[i]);
                i += 1;
            }
            toks.push(Tok::Num(num));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut id = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                id.push(chars[i]);
                i += 1;
            }
            toks.push(Tok::Ident(id));
        } else {
            match c {
                '+' => toks.push(Tok::Plus),
                '-' => toks.push(Tok::Minus),
                '*' => toks.push(Tok::Star),
                '^' => toks.push(Tok::Caret),
                _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
            }
            i += 1;
        }
    }
    Ok(toks)
}

/// Parses the canonical text form, e.g. `d1^3*t^3 - d2` or `-3/2*th1 + 1`.
pub fn parse_poly(ring: &RingRef, s: &str) -> Result<Poly> {
    let toks = tokenize(s)?;
    let mut p = Poly::zero(ring.clone());
    let mut i = 0;
    let mut first = true;
    while i < toks.len() {
        let mut sign = Rat::one();
        loop {
            match toks.get(i) {
                Some(Tok::Plus) => {
                    i += 1;
                }
                Some(Tok::Minus) => {
                    sign = -sign;
                    i += 1;
                }
                _ => break,
            }
            first = false;
        }
        if i >= toks.len() {
            return Err(Error::Parse("dangling sign".into()));
        }
        let _ = first;
        first = false;
        // one term: factors joined by '*'
        let mut coeff = sign;
        let mut expo = vec![0i64; ring.nvars()];
        loop {
            match toks.get(i) {
                Some(Tok::Num(num)) => {
                    coeff *= parse_rat(num)?;
                    i += 1;
                }
                Some(Tok::Ident(id)) => {
                    let j = ring
                        .var_index(id)
                        .ok_or_else(|| Error::Parse(format!("unknown variable {id:?}")))?;
                    i += 1;
                    let mut k = 1i64;
                    if toks.get(i) == Some(&Tok::Caret) {
                        i += 1;
                        match toks.get(i) {
                            Some(Tok::Num(num)) => {
                                k = num
                                    .parse::<i64>()
                                    .map_err(|_| Error::Parse(format!("bad exponent {num:?}")))?;
                                i += 1;
                            }
                            _ => return Err(Error::Parse("expected exponent after ^".into())),
                        }
                    }
                    expo[j] += k;
                }
                _ => return Err(Error::Parse("expected a factor".into())),
            }
            if toks.get(i) == Some(&Tok::Star) {
                i += 1;
            } else {
                break;
            }
        }
        p.add_term(expo, coeff);
        match toks.get(i) {
            None | Some(Tok::Plus) | Some(Tok::Minus) => {}
            t => return Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
    Ok(p)
}
