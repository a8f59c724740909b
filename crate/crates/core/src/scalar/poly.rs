//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in graded-lexicographic order. The gcd is the classical
//! recursive one: split off contents with respect to a chosen variable, then
//! run a primitive pseudo-remainder sequence on the primitive parts.

use super::vars::{self, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type Q = BigRational;

/// Exponent vector with trailing zeros trimmed; `deg` caches the total degree.
/// Field order makes the derived `Ord` graded-lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut exps = vec![0; v.0 as usize + 1];
        exps[v.0 as usize] = e;
        Monomial { deg: e, exps }
    }

    fn from_exps(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let deg = exps.iter().sum();
        Monomial { deg, exps }
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps.get(v.0 as usize).copied().unwrap_or(0)
    }

    /// (variable, exponent) pairs with nonzero exponent, ascending by variable.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var(i as u32), e))
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let n = self.exps.len().max(o.exps.len());
        let exps = (0..n)
            .map(|i| self.exps.get(i).unwrap_or(&0) + o.exps.get(i).unwrap_or(&0))
            .collect();
        Monomial {
            deg: self.deg + o.deg,
            exps,
        }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg
            && self
                .exps
                .iter()
                .enumerate()
                .all(|(i, &e)| e <= *o.exps.get(i).unwrap_or(&0))
    }

    /// `o / self`; caller guarantees divisibility.
    pub fn div_of(&self, o: &Monomial) -> Monomial {
        let exps = (0..o.exps.len())
            .map(|i| o.exps[i] - self.exps.get(i).unwrap_or(&0))
            .collect();
        Monomial::from_exps(exps)
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let n = self.exps.len().min(o.exps.len());
        Monomial::from_exps((0..n).map(|i| self.exps[i].min(o.exps[i])).collect())
    }

    fn without(&self, v: Var) -> Monomial {
        let mut exps = self.exps.clone();
        if let Some(e) = exps.get_mut(v.0 as usize) {
            *e = 0;
        }
        Monomial::from_exps(exps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), Q::one())
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter().rev()
    }

    pub fn lead(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn lead_coeff(&self) -> Q {
        self.lead().map(|(_, c)| c.clone()).unwrap_or_else(Q::zero)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &Q) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, k: &Q) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c * k)).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let mut r = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.lead()?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.lead() {
            if !dm.divides(rm) {
                return None;
            }
            let m = dm.div_of(rm);
            let c = rc / dc;
            r = r.sub(&d.mul_term(&m, &c));
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Coefficients as a polynomial in `v`, indexed by the exponent of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].add_term(m.without(v), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut r = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let mv = Monomial::var(v, e as u32);
            for (m, k) in &c.terms {
                r.add_term(m.mul(&mv), k.clone());
            }
        }
        r
    }

    /// Substitutes `v := value`.
    pub fn eval_var(&self, v: Var, value: &Q) -> Poly {
        let mut r = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let k = if e == 0 { c.clone() } else { c * num_traits::pow(value.clone(), e as usize) };
            r.add_term(m.without(v), k);
        }
        r
    }

    /// Reduces modulo a monic univariate polynomial in `v` (coefficients low to high).
    pub fn rem_monic(&self, v: Var, minpoly: &[Q]) -> Poly {
        let d = minpoly.len() - 1;
        if (self.degree_in(v) as usize) < d {
            return self.clone();
        }
        let mut cs = self.coeffs_in(v);
        for top in (d..cs.len()).rev() {
            let c = std::mem::take(&mut cs[top]);
            if c.is_zero() {
                continue;
            }
            for (i, m) in minpoly.iter().enumerate().take(d) {
                if !m.is_zero() {
                    cs[top - d + i] = cs[top - d + i].sub(&c.scale(m));
                }
            }
        }
        cs.truncate(d);
        Poly::from_coeffs_in(v, &cs)
    }

    /// Content with respect to `v`: gcd of the coefficients in `v`.
    pub fn content_in(&self, v: Var) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }
}

fn prem(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r: Vec<Poly> = f.to_vec();
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lg);
        }
        for j in 0..=dg {
            r[dr - dg + j] = r[dr - dg + j].sub(&lr.mul(&g[j]));
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn primitive_part(coeffs: &[Poly]) -> Vec<Poly> {
    let mut g = Poly::zero();
    for c in coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    coeffs.iter().map(|c| c.div_exact(&g).expect("content divides")).collect()
}

/// Normalized gcd: leading coefficient one, `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.len() == 1 || b.len() == 1 {
        let (single, other) = if a.len() == 1 { (a, b) } else { (b, a) };
        let mut m = single.lead().unwrap().0.clone();
        for k in other.terms.keys() {
            m = m.gcd(k);
            if m.is_one() {
                break;
            }
        }
        return Poly::term(m, Q::one());
    }
    let va = a.vars();
    let vb = b.vars();
    if let Some(&v) = va.difference(&vb).next() {
        return gcd(&a.content_in(v), b);
    }
    if let Some(&v) = vb.difference(&va).next() {
        return gcd(a, &b.content_in(v));
    }
    let v = *va.iter().min_by_key(|&&v| a.degree_in(v).max(b.degree_in(v))).unwrap();
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).unwrap().coeffs_in(v);
    let pb = b.div_exact(&cb).unwrap().coeffs_in(v);
    let (mut f, mut g) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    let prim = loop {
        let r = prem(&f, &g);
        if r.is_empty() {
            break Poly::from_coeffs_in(v, &g);
        }
        if r.len() == 1 {
            break Poly::one();
        }
        f = g;
        g = primitive_part(&r);
    };
    c.mul(&prim).monic()
}

fn fmt_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", vars::name(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_q(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_q(&a))?;
            }
        }
        Ok(())
    }
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(vars::intern("poly_test_x"))
    }
    fn y() -> Poly {
        Poly::var(vars::intern("poly_test_y"))
    }
    fn c(n: i64) -> Poly {
        Poly::constant(q_int(n))
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = x().add(&y()).add(&c(1));
        let a = f.mul(&x().sub(&c(2)));
        let b = f.mul(&y().mul(&y()).add(&x()));
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = x().mul(&x()).add(&c(1));
        let b = x().add(&y());
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division_rejects_non_divisor() {
        let a = x().mul(&x()).sub(&c(1));
        assert_eq!(a.div_exact(&x().sub(&c(1))), Some(x().add(&c(1))));
        assert_eq!(a.div_exact(&x().add(&y())), None);
    }

    #[test]
    fn remainder_modulo_minimal_polynomial() {
        let z = vars::intern("poly_test_z");
        let m = vec![q_int(1), q_int(1), q_int(1)];
        let z3 = Poly::var(z).pow(3);
        assert_eq!(z3.rem_monic(z, &m), c(1));
    }
}
