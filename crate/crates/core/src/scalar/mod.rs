//! Exact scalars: rational functions over Q in declared parameters, optionally
//! adjoined with one algebraic element.
//!
//! Canonical form: numerator and denominator coprime, denominator with leading
//! coefficient one in graded-lex order. With an algebraic element the numerator
//! is reduced below the degree of its minimal polynomial and the denominator
//! is free of it.

mod parse;
pub mod poly;
pub mod vars;

pub use parse::{parse_scalar, ParamSet, ParseError};
pub use poly::{Monomial, Poly, Q};
pub use vars::Var;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is a zero divisor modulo the minimal polynomial of {0}")]
    ZeroDivisor(String),
    #[error("pole at {0} = 0")]
    Pole(String),
}

/// One adjoined element `var` with monic minimal polynomial over Q.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Extension {
    pub name: String,
    pub var: Var,
    /// Coefficients low to high; the last one is 1.
    pub minpoly: Vec<Q>,
}

impl Extension {
    pub fn new(name: &str, minpoly: Vec<Q>) -> Arc<Extension> {
        assert!(minpoly.len() >= 2 && minpoly.last().unwrap().is_one());
        Arc::new(Extension {
            name: name.to_string(),
            var: vars::intern(name),
            minpoly,
        })
    }

    /// The `n`-th cyclotomic polynomial as a minimal polynomial.
    pub fn cyclotomic(name: &str, n: u32) -> Arc<Extension> {
        Self::new(name, cyclotomic_coeffs(n))
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    fn reduce(&self, p: &Poly) -> Poly {
        p.rem_monic(self.var, &self.minpoly)
    }

    /// Returns `(x, n)` with `d * x = n` modulo the minimal polynomial and `n`
    /// free of the adjoined element. `n` is the norm of `d`.
    fn rationalize(&self, d: &Poly) -> (Poly, Poly) {
        let k = self.degree();
        // Column j of the multiplication matrix is d * z^j reduced.
        let mut cols: Vec<Vec<Poly>> = Vec::with_capacity(k);
        let mut cur = d.clone();
        for _ in 0..k {
            let mut cs = cur.coeffs_in(self.var);
            cs.resize(k, Poly::zero());
            cols.push(cs);
            cur = self.reduce(&cur.mul(&Poly::var(self.var)));
        }
        let m: Vec<Vec<Poly>> = (0..k).map(|i| (0..k).map(|j| cols[j][i].clone()).collect()).collect();
        // x = first column of adj(m); m * x = det(m) e_0.
        let x: Vec<Poly> = (0..k).map(|i| cofactor(&m, 0, i)).collect();
        let det = (0..k).fold(Poly::zero(), |acc, i| acc.add(&m[0][i].mul(&x[i])));
        (Poly::from_coeffs_in(self.var, &x), det)
    }
}

fn det(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        n => (0..n).fold(Poly::zero(), |acc, j| {
            if m[0][j].is_zero() {
                acc
            } else {
                acc.add(&m[0][j].mul(&cofactor(m, 0, j)))
            }
        }),
    }
}

/// Signed minor of entry (r, c).
fn cofactor(m: &[Vec<Poly>], r: usize, c: usize) -> Poly {
    let minor: Vec<Vec<Poly>> = (0..m.len())
        .filter(|&i| i != r)
        .map(|i| (0..m.len()).filter(|&j| j != c).map(|j| m[i][j].clone()).collect())
        .collect();
    let d = det(&minor);
    if (r + c) % 2 == 1 {
        d.neg()
    } else {
        d
    }
}

fn cyclotomic_coeffs(n: u32) -> Vec<Q> {
    // x^n - 1 divided by every cyclotomic factor of a proper divisor.
    let mut p: Vec<Q> = vec![Q::zero(); n as usize + 1];
    p[0] = -Q::one();
    p[n as usize] = Q::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = div_univariate(&p, &cyclotomic_coeffs(d));
        }
    }
    p
}

fn div_univariate(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![Q::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone() / b[db].clone();
        for j in 0..=db {
            r[i + j] -= c.clone() * b[j].clone();
        }
        q[i] = c;
    }
    q
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(Q),
    Frac(Arc<Frac>),
}

#[derive(PartialEq, Eq, Hash)]
struct Frac {
    num: Poly,
    den: Poly,
    ext: Option<Arc<Extension>>,
}

/// An exact scalar. Equality is equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Rat(Q::zero()))
    }

    pub fn one() -> Self {
        Scalar(Repr::Rat(Q::one()))
    }

    pub fn int(n: i64) -> Self {
        Scalar(Repr::Rat(Q::from_integer(BigInt::from(n))))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar(Repr::Rat(Q::new(BigInt::from(n), BigInt::from(d))))
    }

    pub fn rational(q: Q) -> Self {
        Scalar(Repr::Rat(q))
    }

    pub fn param(v: Var) -> Self {
        Scalar::from_poly(Poly::var(v))
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar::from_parts(p, Poly::one(), None).expect("nonzero denominator")
    }

    /// The adjoined element itself.
    pub fn algebraic(ext: &Arc<Extension>) -> Self {
        Scalar::from_parts(Poly::var(ext.var), Poly::one(), Some(ext.clone())).expect("nonzero denominator")
    }

    /// Canonicalizes `num / den`.
    pub fn from_parts(num: Poly, den: Poly, ext: Option<Arc<Extension>>) -> Result<Self, ScalarError> {
        let (mut num, mut den) = (num, den);
        if let Some(e) = &ext {
            num = e.reduce(&num);
            den = e.reduce(&den);
            if den.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            if den.degree_in(e.var) > 0 {
                let (x, norm) = e.rationalize(&den);
                if norm.is_zero() {
                    return Err(ScalarError::ZeroDivisor(e.name.clone()));
                }
                num = e.reduce(&num.mul(&x));
                den = norm;
            }
        }
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        if let (Some(n), Some(d)) = (num.as_constant(), den.as_constant()) {
            return Ok(Scalar(Repr::Rat(n / d)));
        }
        let g = poly::gcd(&num, &den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        let lc = den.lead_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if den.is_one() {
            if let Some(n) = num.as_constant() {
                return Ok(Scalar(Repr::Rat(n)));
            }
        }
        let ext = ext.filter(|e| num.degree_in(e.var) > 0);
        Ok(Scalar(Repr::Frac(Arc::new(Frac { num, den, ext }))))
    }

    fn parts(&self) -> (Poly, Poly, Option<Arc<Extension>>) {
        match &self.0 {
            Repr::Rat(q) => (Poly::constant(q.clone()), Poly::one(), None),
            Repr::Frac(f) => (f.num.clone(), f.den.clone(), f.ext.clone()),
        }
    }

    pub fn numerator(&self) -> Poly {
        self.parts().0
    }

    pub fn denominator(&self) -> Poly {
        self.parts().1
    }

    pub fn extension(&self) -> Option<Arc<Extension>> {
        self.parts().2
    }

    pub fn as_rational(&self) -> Option<&Q> {
        match &self.0 {
            Repr::Rat(q) => Some(q),
            Repr::Frac(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rat(q) if q.is_one())
    }

    /// True when the denominator is constant.
    pub fn is_polynomial(&self) -> bool {
        match &self.0 {
            Repr::Rat(_) => true,
            Repr::Frac(f) => f.den.is_one(),
        }
    }

    fn ext_of(a: &Option<Arc<Extension>>, b: &Option<Arc<Extension>>) -> Option<Arc<Extension>> {
        a.clone().or_else(|| b.clone())
    }

    pub fn checked_add(&self, o: &Scalar) -> Scalar {
        if let (Repr::Rat(a), Repr::Rat(b)) = (&self.0, &o.0) {
            return Scalar(Repr::Rat(a + b));
        }
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (n1, d1, e1) = self.parts();
        let (n2, d2, e2) = o.parts();
        let ext = Self::ext_of(&e1, &e2);
        let (num, den) = if d1 == d2 {
            (n1.add(&n2), d1)
        } else if d1.is_constant() || d2.is_constant() {
            (n1.mul(&d2).add(&n2.mul(&d1)), d1.mul(&d2))
        } else {
            let g = poly::gcd(&d1, &d2);
            let c1 = d2.div_exact(&g).unwrap();
            let c2 = d1.div_exact(&g).unwrap();
            (n1.mul(&c1).add(&n2.mul(&c2)), d1.mul(&c1))
        };
        Scalar::from_parts(num, den, ext).expect("sum of valid fractions")
    }

    pub fn checked_mul(&self, o: &Scalar) -> Scalar {
        if let (Repr::Rat(a), Repr::Rat(b)) = (&self.0, &o.0) {
            return Scalar(Repr::Rat(a * b));
        }
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        let (n1, d1, e1) = self.parts();
        let (n2, d2, e2) = o.parts();
        let ext = Self::ext_of(&e1, &e2);
        Scalar::from_parts(n1.mul(&n2), d1.mul(&d2), ext).expect("product of valid fractions")
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match &self.0 {
            Repr::Rat(q) if q.is_zero() => Err(ScalarError::DivisionByZero),
            Repr::Rat(q) => Ok(Scalar(Repr::Rat(q.recip()))),
            Repr::Frac(f) => Scalar::from_parts(f.den.clone(), f.num.clone(), f.ext.clone()),
        }
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.checked_mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Parameters occurring in the canonical form, adjoined element included.
    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        let (n, d, _) = self.parts();
        let mut v = n.vars();
        v.extend(d.vars());
        v
    }

    /// Substitutes rational values for parameters.
    pub fn eval(&self, assign: &[(Var, Q)]) -> Result<Scalar, ScalarError> {
        let (mut n, mut d, ext) = self.parts();
        for (v, val) in assign {
            n = n.eval_var(*v, val);
            d = d.eval_var(*v, val);
        }
        Scalar::from_parts(n, d, ext)
    }

    /// Power-series coefficients in `v` up to `v^(order-1)`; needs no pole at `v = 0`.
    pub fn series_in(&self, v: Var, order: usize) -> Result<Vec<Scalar>, ScalarError> {
        let (n, d, ext) = self.parts();
        let wrap = |p: &Poly| Scalar::from_parts(p.clone(), Poly::one(), ext.clone()).expect("polynomial");
        let nc: Vec<Scalar> = n.coeffs_in(v).iter().map(wrap).collect();
        let dc: Vec<Scalar> = d.coeffs_in(v).iter().map(wrap).collect();
        let at = |cs: &[Scalar], i: usize| cs.get(i).cloned().unwrap_or_else(Scalar::zero);
        let d0 = at(&dc, 0);
        if d0.is_zero() {
            return Err(ScalarError::Pole(vars::name(v)));
        }
        let d0inv = d0.inv()?;
        let mut out: Vec<Scalar> = Vec::with_capacity(order);
        for j in 0..order {
            let mut acc = at(&nc, j);
            for i in 1..=j {
                acc = &acc - &(&at(&dc, i) * &out[j - i]);
            }
            out.push(&acc * &d0inv);
        }
        Ok(out)
    }

    /// The residue class modulo `v^order` as a polynomial in `v`.
    pub fn truncate_in(&self, v: Var, order: usize) -> Result<Scalar, ScalarError> {
        let cs = self.series_in(v, order)?;
        let t = Scalar::param(v);
        let mut acc = Scalar::zero();
        for (i, c) in cs.iter().enumerate() {
            acc = &acc + &(c * &t.pow(i as i64)?);
        }
        Ok(acc)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Frac(fr) => {
                if fr.den.is_one() {
                    return write!(f, "{}", fr.num);
                }
                if fr.num.len() == 1 && !fr.num.lead_coeff().is_negative() {
                    write!(f, "{}", fr.num)?;
                } else {
                    write!(f, "({})", fr.num)?;
                }
                if fr.den.len() == 1 {
                    write!(f, "/{}", fr.den)
                } else {
                    write!(f, "/({})", fr.den)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}

binop!(Add, add, |a, b| a.checked_add(b));
binop!(Sub, sub, |a, b| a.checked_add(&-b));
binop!(Mul, mul, |a, b| a.checked_mul(b));
binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero scalar"));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rat(q) => Scalar(Repr::Rat(-q.clone())),
            Repr::Frac(f) => Scalar(Repr::Frac(Arc::new(Frac {
                num: f.num.neg(),
                den: f.den.clone(),
                ext: f.ext.clone(),
            }))),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps() -> ParamSet {
        let mut p = ParamSet::new();
        p.declare("sc_a", false).unwrap();
        p.declare("sc_b", false).unwrap();
        p.declare("sc_q", true).unwrap();
        p
    }

    fn s(e: &str) -> Scalar {
        parse_scalar(e, &ps()).unwrap()
    }

    #[test]
    fn quotient_reduces_to_polynomial() {
        assert_eq!(s("(sc_q^3 - 1)/(sc_q - 1)"), s("sc_q^2 + sc_q + 1"));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let x = s("(2*sc_a)/(4*sc_b + 2)");
        assert_eq!(x.denominator().lead_coeff(), Q::one());
        assert_eq!(x, s("sc_a/(2*sc_b + 1)"));
    }

    #[test]
    fn printed_form_parses_back() {
        for e in ["(sc_a - sc_b)*sc_b", "sc_q^-2 + 1/3", "-(sc_a + 1)/(sc_a*sc_b - 7)", "-3/4*sc_a/sc_b"] {
            let x = s(e);
            assert_eq!(s(&x.to_string()), x, "{e} -> {x}");
        }
    }

    #[test]
    fn cyclotomic_relation_reduces() {
        let mut p = ParamSet::new();
        p.set_algebraic("sc_z", Extension::cyclotomic("sc_z", 3).minpoly.clone()).unwrap();
        let z = parse_scalar("sc_z", &p).unwrap();
        assert!((&(&Scalar::one() + &z) + &(&z * &z)).is_zero());
        let w = parse_scalar("1/(sc_z + 2)", &p).unwrap();
        assert_eq!(&w * &parse_scalar("sc_z + 2", &p).unwrap(), Scalar::one());
    }

    #[test]
    fn cyclotomic_coefficients() {
        let c = |v: &[i64]| v.iter().map(|&x| poly::q_int(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_coeffs(2), c(&[1, 1]));
        assert_eq!(cyclotomic_coeffs(4), c(&[1, 0, 1]));
        assert_eq!(cyclotomic_coeffs(6), c(&[1, -1, 1]));
    }

    #[test]
    fn series_truncation() {
        let t = s("1/(1 - sc_a)");
        assert_eq!(t.truncate_in(vars::intern("sc_a"), 3).unwrap(), s("1 + sc_a + sc_a^2"));
    }
}
