//! σ-derivations and the twisted bracket on `A·ψ`.
//!
//! Elements `a·ψ` of the cyclic module are represented by their coefficient
//! `a`; the bracket is `[a, b] = σ(a)ψ(b) - σ(b)ψ(a)`. Two coefficient rings
//! are supported: Laurent polynomials `K[t, t⁻¹]` with `σ(t) = q t^s` and
//! truncated polynomials `K[t]/(t^N)`.

use crate::algebra::{check_law_with, AlgebraLaw, Grading, HomAlgebra};
use crate::error::{Error, Result};
use crate::law::{scan, CheckOptions, LawReport, Witness};
use crate::linear::{coordinates, kernel, solve, zero_vec, BilinearMap, LinearMap, Solution, Space, Vector};
use crate::scalar::{ParamSet, Scalar, Var};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// A commutative coefficient ring with an endomorphism `σ` and a σ-derivation `ψ`.
pub trait SigmaRing: Sync {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// The generator `t`.
    fn t(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, k: &Scalar, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sigma(&self, a: &Self::Elem) -> Self::Elem;
    fn psi(&self, a: &Self::Elem) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;
}

/// Coefficient of `[a·ψ, b·ψ]`.
pub fn bracket_sigma<R: SigmaRing>(r: &R, a: &R::Elem, b: &R::Elem) -> R::Elem {
    r.sub(&r.mul(&r.sigma(a), &r.psi(b)), &r.mul(&r.sigma(b), &r.psi(a)))
}

/// `[a·ψ, b·ψ]` applied to `f` in composition form: `σ(a)ψ(bψ(f)) - σ(b)ψ(aψ(f))`.
pub fn bracket_composition_apply<R: SigmaRing>(r: &R, a: &R::Elem, b: &R::Elem, f: &R::Elem) -> R::Elem {
    let pf = r.psi(f);
    let l = r.mul(&r.sigma(a), &r.psi(&r.mul(b, &pf)));
    let rr = r.mul(&r.sigma(b), &r.psi(&r.mul(a, &pf)));
    r.sub(&l, &rr)
}

/// `ψ(fg) - ψ(f)g - σ(f)ψ(g)`.
pub fn leibniz_defect<R: SigmaRing>(r: &R, f: &R::Elem, g: &R::Elem) -> R::Elem {
    let l = r.psi(&r.mul(f, g));
    let rr = r.add(&r.mul(&r.psi(f), g), &r.mul(&r.sigma(f), &r.psi(g)));
    r.sub(&l, &rr)
}

/// `↺_{a,b,c} ([σ(a), [b, c]] + δ [a, [b, c]])`.
pub fn six_term<R: SigmaRing>(r: &R, delta: &R::Elem, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> R::Elem {
    let mut acc = r.zero();
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        let yz = bracket_sigma(r, y, z);
        acc = r.add(&acc, &bracket_sigma(r, &r.sigma(x), &yz));
        acc = r.add(&acc, &r.mul(delta, &bracket_sigma(r, x, &yz)));
    }
    acc
}

/// `ψ(σ(a)) - δ σ(ψ(a))`.
pub fn delta_defect<R: SigmaRing>(r: &R, delta: &R::Elem, a: &R::Elem) -> R::Elem {
    r.sub(&r.psi(&r.sigma(a)), &r.mul(delta, &r.sigma(&r.psi(a))))
}

// ---------------------------------------------------------------- Laurent

/// Sparse Laurent polynomial in `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent {
    pub terms: BTreeMap<i64, Scalar>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Scalar, e: i64) -> Self {
        let mut l = Self::zero();
        if !c.is_zero() {
            l.terms.insert(e, c);
        }
        l
    }

    pub fn coeff(&self, e: i64) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let v = &self.coeff(e) + c;
        if v.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, v);
        }
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c);
        }
        r
    }

    pub fn neg(&self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &Scalar) -> Laurent {
        if k.is_zero() {
            return Laurent::zero();
        }
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut r = Laurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(a + b, &(x * y));
            }
        }
        r
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Exact quotient; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Laurent) -> Option<Laurent> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let (dmin, dmax) = (d.min_exp().unwrap(), d.max_exp().unwrap());
        let lead = d.coeff(dmax);
        let mut rem = self.clone();
        let mut q = Laurent::zero();
        // Division from the top; the remainder's span must shrink below d's.
        while let Some(top) = rem.max_exp() {
            let low = rem.min_exp().unwrap();
            if top - low < dmax - dmin {
                return None;
            }
            let c = &rem.coeff(top) / &lead;
            let shift = top - dmax;
            q.add_term(shift, &c);
            rem = rem.sub(&Laurent::monomial(c, shift).mul(d));
        }
        Some(q)
    }
}

impl std::fmt::Display for Laurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| match e {
                0 => format!("({c})"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `σ(t) = q t^s` on `K[t, t⁻¹]` with `ψ = D = (id - σ)/g`, `g = η⁻¹ t^(k-1)(t - q t^s)`.
#[derive(Clone, Debug)]
pub struct LaurentSigma {
    pub q: Scalar,
    pub s: i64,
    pub k: i64,
    pub eta: Scalar,
    pub g: Laurent,
}

impl LaurentSigma {
    pub fn new(q: Scalar, s: i64, k: i64, eta: Scalar) -> Result<Self> {
        if q.is_zero() || eta.is_zero() {
            return Err(Error::condition("q and eta must be nonzero"));
        }
        if s == 1 && q.is_one() {
            return Err(Error::condition("sigma is the identity; no twisted generator exists"));
        }
        let einv = eta.inv()?;
        let g = Laurent::monomial(einv.clone(), k).sub(&Laurent::monomial(&einv * &q, k - 1 + s));
        if g.is_zero() {
            return Err(Error::condition("generator denominator vanishes"));
        }
        Ok(LaurentSigma { q, s, k, eta, g })
    }

    /// `d_n = -t^n D` as a coefficient.
    pub fn d(&self, n: i64) -> Laurent {
        Laurent::monomial(-Scalar::one(), n)
    }

    /// The closed form `q^k t^(k(s-1)) Σ_{r<s} (q t^(s-1))^r`, for `s >= 1`.
    pub fn delta_closed_form(&self) -> Option<Laurent> {
        if self.s < 1 {
            return None;
        }
        let mut sum = Laurent::zero();
        for r in 0..self.s {
            sum = sum.add(&Laurent::monomial(self.q.pow(r).ok()?, r * (self.s - 1)));
        }
        Some(Laurent::monomial(self.q.pow(self.k).ok()?, self.k * (self.s - 1)).mul(&sum))
    }

    /// `d`-basis coordinates of a coefficient: `Σ c_j t^j = Σ (-c_j) d_j`.
    pub fn d_coordinates(c: &Laurent) -> BTreeMap<i64, Scalar> {
        c.terms.iter().map(|(e, x)| (*e, -x)).collect()
    }
}

impl SigmaRing for LaurentSigma {
    type Elem = Laurent;

    fn zero(&self) -> Laurent {
        Laurent::zero()
    }
    fn one(&self) -> Laurent {
        Laurent::monomial(Scalar::one(), 0)
    }
    fn t(&self) -> Laurent {
        Laurent::monomial(Scalar::one(), 1)
    }
    fn add(&self, a: &Laurent, b: &Laurent) -> Laurent {
        a.add(b)
    }
    fn sub(&self, a: &Laurent, b: &Laurent) -> Laurent {
        a.sub(b)
    }
    fn mul(&self, a: &Laurent, b: &Laurent) -> Laurent {
        a.mul(b)
    }
    fn scale(&self, k: &Scalar, a: &Laurent) -> Laurent {
        a.scale(k)
    }
    fn is_zero(&self, a: &Laurent) -> bool {
        a.is_zero()
    }
    fn sigma(&self, a: &Laurent) -> Laurent {
        let mut r = Laurent::zero();
        for (e, c) in &a.terms {
            r.add_term(e * self.s, &(c * &self.q.pow(*e).expect("q is invertible")));
        }
        r
    }
    fn psi(&self, a: &Laurent) -> Laurent {
        a.sub(&self.sigma(a)).div_exact(&self.g).expect("(id - sigma)(f) is divisible by g")
    }
    fn render(&self, a: &Laurent) -> String {
        a.to_string()
    }
}

#[derive(Clone, Debug)]
pub struct DeltaReport<E> {
    pub delta: E,
    pub report: LawReport,
    /// Whether `δ` agrees with the closed form, when one applies.
    pub closed_form: Option<bool>,
}

/// Solves `ψ(σ(t)) = δ σ(ψ(t))` and verifies the relation on `t⁻¹` and on `t^n`, `|n| <= window`.
/// Both `σ` and `ψ` are multiplicative-compatible, so `t` and `t⁻¹` determine every monomial.
pub fn find_delta_laurent(r: &LaurentSigma, window: i64) -> Result<DeltaReport<Laurent>> {
    let t = r.t();
    let num = r.psi(&r.sigma(&t));
    let den = r.sigma(&r.psi(&t));
    let delta = num.div_exact(&den).ok_or_else(|| Error::condition("no delta satisfies the generator equation"))?;
    let mut rep = LawReport::new("delta");
    let mut exps: Vec<i64> = (-window..=window).collect();
    if !exps.contains(&-1) {
        exps.push(-1);
    }
    for e in exps {
        rep.checked += 1;
        let d = delta_defect(r, &delta, &Laurent::monomial(Scalar::one(), e));
        for (x, c) in &d.terms {
            rep.push(Witness { indices: vec![], labels: vec![format!("t^{e}")], component: format!("t^{x}"), value: c.clone() });
        }
    }
    let closed_form = r.delta_closed_form().map(|c| c == delta);
    Ok(DeltaReport { delta, report: rep, closed_form })
}

/// Six-term identity on all `d_n, d_m, d_l` with indices in `[-window, window]`.
pub fn check_six_term_laurent(r: &LaurentSigma, delta: &Laurent, window: i64) -> LawReport {
    let idx: Vec<i64> = (-window..=window).collect();
    let labels: Vec<String> = idx.iter().map(|n| format!("d{n}")).collect();
    let w = idx.len();
    scan("six-term-jacobi", w, 3, &labels, &CheckOptions::exact(), |t| {
        if !(t[0] < t[1] && t[1] < t[2]) {
            // Cyclic and alternating in the arguments; one ordered triple suffices.
            return Some(vec![]);
        }
        let v = six_term(r, delta, &r.d(idx[t[0]]), &r.d(idx[t[1]]), &r.d(idx[t[2]]));
        Some(v.terms.iter().map(|(e, c)| (format!("t^{e}"), c.clone())).collect())
    })
}

/// `[x_n, x_m] = ({n}_q - {m}_q) x_{n+m}` and the bracket itself on all `|n|, |m| <= window`, `s = 1`.
pub fn check_q_witt_relations(r: &LaurentSigma, window: i64) -> LawReport {
    let idx: Vec<i64> = (-window..=window).collect();
    let labels: Vec<String> = idx.iter().map(|n| format!("x{n}")).collect();
    let mut rep = scan("q-witt-bracket", idx.len(), 2, &labels, &CheckOptions::exact(), |t| {
        let (n, m) = (idx[t[0]], idx[t[1]]);
        let direct = bracket_sigma(r, &r.d(n), &r.d(m));
        let expect = r.d(n + m).scale(&(&q_int(&r.q, n) - &q_int(&r.q, m)));
        Some(direct.sub(&expect).terms.iter().map(|(e, c)| (format!("t^{e}"), c.clone())).collect())
    });
    if r.s != 1 {
        rep.fail("relation applies to s = 1 only");
    }
    rep
}

/// `{n}_q = (q^n - 1)/(q - 1)`, with `{n}_1 = n`.
pub fn q_int(q: &Scalar, n: i64) -> Scalar {
    if q.is_one() {
        return Scalar::int(n);
    }
    let qn = q.pow(n).expect("q is invertible");
    (&qn - &Scalar::one()).checked_div(&(q - &Scalar::one())).expect("q differs from 1")
}

/// Four-case closed expansion of `[d_n, d_m]` with unit prefactor, in the `d` basis.
pub fn witt_case_formula(r: &LaurentSigma, n: i64, m: i64) -> BTreeMap<i64, Scalar> {
    let (q, s, k) = (&r.q, r.s, r.k);
    let mut out: BTreeMap<i64, Scalar> = BTreeMap::new();
    let mut put = |idx: i64, c: Scalar| {
        let e = out.entry(idx).or_default();
        *e = &*e + &c;
    };
    let qp = |e: i64| q.pow(e).expect("q is invertible");
    let sign = |x: i64| Scalar::int(x.signum());
    if n >= 0 && m >= 0 {
        for l in n.min(m)..n.max(m) {
            put(s * (n + m - 1) - (k - 1) - l * (s - 1), &sign(n - m) * &qp(n + m - 1 - l));
        }
    } else if n >= 0 && m < 0 {
        for l in 0..-m {
            put((m + l) * (s - 1) + n * s + m - k, qp(n + m + l));
        }
        for l in 0..n {
            put((s - 1) * l + n + m * s - k, qp(m + l));
        }
    } else if m >= 0 && n < 0 {
        for l1 in 0..m {
            put((s - 1) * l1 + m + n * s - k, -qp(n + l1));
        }
        for l2 in 0..-n {
            put((n + l2) * (s - 1) + n + m * s - k, -qp(m + n + l2));
        }
    } else {
        for l in (-n).min(-m)..(-n).max(-m) {
            put((m + n) * s + (s - 1) * l - k, &sign(n - m) * &qp(n + m + l));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[derive(Clone, Debug)]
pub struct WittCaseReport {
    pub report: LawReport,
    /// The single factor relating the expansion to the direct bracket, if one exists.
    pub prefactor: Option<Scalar>,
}

/// Compares the four-case expansion with the direct bracket on the window and
/// determines the common prefactor.
pub fn witt_window_relations(r: &LaurentSigma, window: i64) -> WittCaseReport {
    let idx: Vec<i64> = (-window..=window).collect();
    let pairs: Vec<(i64, i64)> = idx.iter().flat_map(|&n| idx.iter().map(move |&m| (n, m))).collect();
    let data: Vec<(i64, i64, BTreeMap<i64, Scalar>, BTreeMap<i64, Scalar>)> = pairs
        .par_iter()
        .map(|&(n, m)| {
            let direct = LaurentSigma::d_coordinates(&bracket_sigma(r, &r.d(n), &r.d(m)));
            (n, m, direct, witt_case_formula(r, n, m))
        })
        .collect();
    let mut prefactor: Option<Scalar> = None;
    for (_, _, d, f) in &data {
        if let Some((j, c)) = f.iter().next() {
            if let Some(dc) = d.get(j) {
                prefactor = Some(dc / c);
                break;
            }
        }
    }
    let alpha = prefactor.clone().unwrap_or_else(Scalar::one);
    let mut rep = LawReport::new("witt-cases");
    for (n, m, d, f) in &data {
        rep.checked += 1;
        let mut keys: Vec<i64> = d.keys().chain(f.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        for j in keys {
            let lhs = d.get(&j).cloned().unwrap_or_default();
            let rhs = &alpha * &f.get(&j).cloned().unwrap_or_default();
            let diff = &lhs - &rhs;
            if !diff.is_zero() {
                rep.push(Witness {
                    indices: vec![],
                    labels: vec![format!("d{n}"), format!("d{m}")],
                    component: format!("d{j}: direct {lhs} vs expansion {rhs}"),
                    value: diff,
                });
            }
        }
    }
    if let Some(p) = &prefactor {
        rep.note(format!("prefactor {p}"));
    }
    WittCaseReport { report: rep, prefactor }
}

fn window_space(window: i64, central: bool) -> (Space, Vec<i64>) {
    let mut labels: Vec<String> = (-window..=window).map(|n| if n < 0 { format!("xm{}", -n) } else { format!("x{n}") }).collect();
    let mut grades: Vec<i64> = (-window..=window).collect();
    if central {
        labels.push("c".into());
        grades.push(0);
    }
    (Space::new(&labels).expect("labels are distinct"), grades)
}

fn q_params() -> (ParamSet, Scalar) {
    let mut ps = ParamSet::new();
    let v = ps.declare("q", true).expect("fresh parameter set");
    (ps, Scalar::param(v))
}

/// q-Witt algebra on `x_n`, `|n| <= window`, with `α(x_n) = (q^n + 1) x_n`.
pub fn q_witt_algebra(window: i64) -> Result<HomAlgebra> {
    let (ps, q) = q_params();
    let (sp, grades) = window_space(window, false);
    let w = grades.len();
    let mut mu = BilinearMap::zero(w);
    for (i, &n) in grades.iter().enumerate() {
        for (j, &m) in grades.iter().enumerate() {
            if (n + m).abs() <= window {
                mu.set(i, j, (n + m + window) as usize, &q_int(&q, n) - &q_int(&q, m));
            }
        }
    }
    let alpha = LinearMap::diagonal(&grades.iter().map(|&n| &q.pow(n).unwrap() + &Scalar::one()).collect::<Vec<_>>());
    let mut a = HomAlgebra::new(&format!("q_witt_w{window}"), ps, sp, mu, alpha)?;
    a.grading = Some(Grading { grades, window: Some(window), cap: None });
    Ok(a)
}

/// Central term of `[x_n, x_{-n}]`: `q^(-n) / (6 (1 + q^n)) {n-1}_q {n}_q {n+1}_q`.
pub fn virasoro_central(q: &Scalar, n: i64) -> Scalar {
    let pre = q.pow(-n).expect("q is invertible").checked_div(&(&Scalar::int(6) * &(&q.pow(n).expect("q is invertible") + &Scalar::one())));
    let pre = pre.expect("1 + q^n is nonzero");
    &(&pre * &q_int(q, n - 1)) * &(&q_int(q, n) * &q_int(q, n + 1))
}

/// q-Virasoro window algebra with `α(c) = alpha_c · c`.
pub fn q_virasoro_algebra(window: i64, alpha_c: Scalar) -> Result<HomAlgebra> {
    let (ps, q) = q_params();
    let (sp, grades) = window_space(window, true);
    let w = grades.len();
    let c = w - 1;
    let mut mu = BilinearMap::zero(w);
    for i in 0..c {
        let n = grades[i];
        for j in 0..c {
            let m = grades[j];
            if (n + m).abs() <= window {
                mu.set(i, j, (n + m + window) as usize, &q_int(&q, n) - &q_int(&q, m));
            }
            if n + m == 0 {
                mu.set(i, j, c, virasoro_central(&q, n));
            }
        }
    }
    let mut diag: Vec<Scalar> = grades[..c].iter().map(|&n| &q.pow(n).unwrap() + &Scalar::one()).collect();
    diag.push(alpha_c);
    let mut a = HomAlgebra::new(&format!("q_virasoro_w{window}"), ps, sp, mu, LinearMap::diagonal(&diag))?;
    a.grading = Some(Grading { grades, window: Some(window), cap: None });
    Ok(a)
}

#[derive(Clone, Debug)]
pub struct VirasoroReport {
    /// One Hom-Lie report per candidate `α(c)`, labelled by the candidate.
    pub candidates: Vec<(String, LawReport)>,
    /// `q = 1` central terms at `(n, -n)` against `(1/12)(n-1)n(n+1)`.
    pub classical: LawReport,
}

pub fn virasoro_window_check(window: i64) -> Result<VirasoroReport> {
    let mut candidates = Vec::new();
    for (name, k) in [("alpha(c)=c", 1), ("alpha(c)=2c", 2)] {
        let a = q_virasoro_algebra(window, Scalar::int(k))?;
        let mut r = check_law_with(&a, &AlgebraLaw::HomLie, &CheckOptions::exact())?;
        r.law = format!("hom-lie[{name}]");
        candidates.push((name.to_string(), r));
    }
    let (_, q) = q_params();
    let qv = q.vars().into_iter().next().expect("q is a parameter");
    let mut classical = LawReport::new("classical-central-term");
    for n in -window..=window {
        classical.checked += 1;
        let at1 = virasoro_central(&q, n).eval(&[(qv, crate::scalar::poly::q_int(1))])?;
        let expect = Scalar::ratio((n - 1) * n * (n + 1), 12);
        if at1 != expect {
            classical.push(Witness { indices: vec![], labels: vec![format!("x{n}"), format!("x{}", -n)], component: "c".into(), value: &at1 - &expect });
        }
    }
    Ok(VirasoroReport { candidates, classical })
}

// -------------------------------------------------------------- truncated

/// `K[t]/(t^N)` with `σ(t) = Σ q_k t^k`, `ψ(t) = Σ p_k t^k`.
#[derive(Clone, Debug)]
pub struct TruncatedSigma {
    pub n: usize,
    pub sigma_t: Vec<Scalar>,
    pub psi_t: Vec<Scalar>,
    /// `σ(t)^k` for `k < N`.
    sigma_pows: Vec<Vec<Scalar>>,
    /// `ψ(t^k)` for `k <= N`; the last entry must vanish.
    psi_pows: Vec<Vec<Scalar>>,
}

impl TruncatedSigma {
    /// Validated construction: `q_0 = 0`, `ψ(t^N) = 0` and `σ(Ann ψ) ⊆ Ann ψ`.
    pub fn new(n: usize, sigma_t: Vec<Scalar>, psi_t: Vec<Scalar>) -> Result<Self> {
        let r = Self::unchecked(n, sigma_t, psi_t)?;
        if !r.sigma_t[0].is_zero() {
            return Err(Error::condition(format!("sigma(t) must have zero constant term, got q0 = {}", r.sigma_t[0])));
        }
        let top = &r.psi_pows[n];
        if top.iter().any(|c| !c.is_zero()) {
            let mut rep = LawReport::new("psi(t^N)");
            for (k, c) in top.iter().enumerate() {
                if !c.is_zero() {
                    rep.push(Witness { indices: vec![], labels: vec![], component: format!("t^{k}"), value: c.clone() });
                }
            }
            return Err(Error::precondition(format!("psi(t^{n}) != 0: the root-of-unity condition (1 + q1 + ... + q1^{}) p0 = 0 fails", n - 1), rep));
        }
        let st = r.ann_sigma_stable();
        if !st.holds {
            return Err(Error::precondition("sigma does not preserve Ann(psi)", st));
        }
        Ok(r)
    }

    /// Ring data without the well-definedness gates.
    pub fn unchecked(n: usize, sigma_t: Vec<Scalar>, psi_t: Vec<Scalar>) -> Result<Self> {
        if n < 2 {
            return Err(Error::condition("truncation order must be at least 2"));
        }
        let pad = |mut v: Vec<Scalar>, what: &str| -> Result<Vec<Scalar>> {
            if v.len() > n {
                return Err(Error::Structure(format!("{what} has more than {n} coefficients")));
            }
            v.resize(n, Scalar::zero());
            Ok(v)
        };
        let sigma_t = pad(sigma_t, "sigma(t)")?;
        let psi_t = pad(psi_t, "psi(t)")?;
        let mut r = TruncatedSigma { n, sigma_t, psi_t, sigma_pows: vec![], psi_pows: vec![] };
        let mut p = r.one();
        for _ in 0..n {
            r.sigma_pows.push(p.clone());
            p = r.mul(&p, &r.sigma_t);
        }
        let mut psi = vec![r.zero()];
        let t = r.t();
        for k in 0..n {
            // ψ(t^k · t) = ψ(t^k) t + σ(t)^k ψ(t)
            let next = r.add(&r.mul(&psi[k], &t), &r.mul(&r.sigma_pows[k], &r.psi_t));
            psi.push(next);
        }
        r.psi_pows = psi;
        Ok(r)
    }

    /// Root-of-unity branch: `q_1` is a primitive `N`-th root of unity.
    pub fn root_of_unity_q1(n: usize) -> Scalar {
        if n == 2 {
            return -Scalar::one();
        }
        Scalar::algebraic(&crate::scalar::Extension::cyclotomic("zeta", n as u32))
    }

    pub fn psi_t_pow_n(&self) -> &[Scalar] {
        &self.psi_pows[self.n]
    }

    /// Basis of `Ann(ψ) = {a : a ψ(f) = 0 for all f}`.
    pub fn annihilator(&self) -> Vec<Vector> {
        let n = self.n;
        let mut rows = Vec::new();
        for k in 0..n {
            for out in 0..n {
                // coefficient of t^out in a * ψ(t^k), linear in a
                let mut row = zero_vec(n);
                for (i, slot) in row.iter_mut().enumerate() {
                    if i <= out {
                        *slot = self.psi_pows[k][out - i].clone();
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
        kernel(&rows, n)
    }

    pub fn ann_sigma_stable(&self) -> LawReport {
        let mut rep = LawReport::new("ann-sigma-stable");
        for (i, a) in self.annihilator().iter().enumerate() {
            rep.checked += 1;
            let sa = self.sigma(a);
            for k in 0..self.n {
                let v = self.mul(&sa, &self.psi_pows[k]);
                for (j, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        rep.push(Witness { indices: vec![i, k], labels: vec![format!("ann{i}"), format!("t^{k}")], component: format!("t^{j}"), value: c.clone() });
                    }
                }
            }
        }
        rep
    }

    pub fn monomial(&self, k: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        if k < self.n {
            v[k] = Scalar::one();
        }
        v
    }
}

impl SigmaRing for TruncatedSigma {
    type Elem = Vec<Scalar>;

    fn zero(&self) -> Vec<Scalar> {
        zero_vec(self.n)
    }
    fn one(&self) -> Vec<Scalar> {
        let mut v = self.zero();
        v[0] = Scalar::one();
        v
    }
    fn t(&self) -> Vec<Scalar> {
        let mut v = self.zero();
        v[1] = Scalar::one();
        v
    }
    fn add(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn sub(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    fn mul(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(self.n - i) {
                if !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        out
    }
    fn scale(&self, k: &Scalar, a: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().map(|x| k * x).collect()
    }
    fn is_zero(&self, a: &Vec<Scalar>) -> bool {
        a.iter().all(|x| x.is_zero())
    }
    fn sigma(&self, a: &Vec<Scalar>) -> Vec<Scalar> {
        let mut out = self.zero();
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = self.add(&out, &self.scale(c, &self.sigma_pows[k]));
            }
        }
        out
    }
    fn psi(&self, a: &Vec<Scalar>) -> Vec<Scalar> {
        let mut out = self.zero();
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = self.add(&out, &self.scale(c, &self.psi_pows[k]));
            }
        }
        out
    }
    fn render(&self, a: &Vec<Scalar>) -> String {
        let parts: Vec<String> = a.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("({c})*t^{k}")).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Solves for `δ` from the generator equation, falling back to all monomials
/// jointly when the generator equation alone leaves a family.
pub fn find_delta_truncated(r: &TruncatedSigma) -> Result<DeltaReport<Vec<Scalar>>> {
    let n = r.n;
    // δ ↦ δ · σ(ψ(a)) as rows: coefficient of t^out.
    let system = |monos: &[usize]| {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for &k in monos {
            let a = r.monomial(k);
            let sp = r.sigma(&r.psi(&a));
            let target = r.psi(&r.sigma(&a));
            for out in 0..n {
                let mut row = zero_vec(n);
                for (i, slot) in row.iter_mut().enumerate() {
                    if i <= out {
                        *slot = sp[out - i].clone();
                    }
                }
                rows.push(row);
                rhs.push(target[out].clone());
            }
        }
        solve(&rows, &rhs, n)
    };
    let mut rep = LawReport::new("delta");
    let delta = match system(&[1]) {
        Solution::Unique(d) => d,
        Solution::Inconsistent => return Err(Error::condition("no delta satisfies the generator equation")),
        Solution::Family(d, _) => {
            let all: Vec<usize> = (0..n).collect();
            match system(&all) {
                Solution::Unique(x) | Solution::Family(x, _) => {
                    rep.note("generator equation underdetermined; solved on all monomials");
                    x
                }
                Solution::Inconsistent => d,
            }
        }
    };
    for k in 0..n {
        rep.checked += 1;
        let d = delta_defect(r, &delta, &r.monomial(k));
        for (j, c) in d.iter().enumerate() {
            if !c.is_zero() {
                rep.push(Witness { indices: vec![k], labels: vec![format!("t^{k}")], component: format!("t^{j}"), value: c.clone() });
            }
        }
    }
    Ok(DeltaReport { delta, report: rep, closed_form: None })
}

/// e, h, f = ψ, -2tψ, -t²ψ against their closed-form brackets.
pub fn ehf_relations<R: SigmaRing>(r: &R) -> LawReport {
    let t = r.t();
    let t2 = r.mul(&t, &t);
    let e = r.one();
    let h = r.scale(&Scalar::int(-2), &t);
    let f = r.scale(&-Scalar::one(), &t2);
    let p = r.psi(&t);
    let st = r.sigma(&t);
    let cases = [
        ("[h,f]", bracket_sigma(r, &h, &f), r.scale(&Scalar::int(2), &r.mul(&r.mul(&st, &t), &p))),
        ("[h,e]", bracket_sigma(r, &h, &e), r.scale(&Scalar::int(2), &p)),
        ("[e,f]", bracket_sigma(r, &e, &f), r.scale(&-Scalar::one(), &r.mul(&r.add(&st, &t), &p))),
    ];
    let mut rep = LawReport::new("ehf-relations");
    for (name, got, want) in cases {
        rep.checked += 1;
        let d = r.sub(&got, &want);
        if !r.is_zero(&d) {
            rep.push(Witness { indices: vec![], labels: vec![name.to_string()], component: "coefficient".into(), value: Scalar::zero() });
            rep.note(format!("{name}: got {} expected {}", r.render(&got), r.render(&want)));
        }
    }
    rep
}

#[derive(Clone, Debug)]
pub struct Sl2Build {
    pub ring: TruncatedSigma,
    /// Bracket on `g_i = c_i t^i ψ` with `α = σ` and, when found, `β = δ·`.
    pub algebra: HomAlgebra,
    pub delta: Option<Vec<Scalar>>,
    pub reports: Vec<LawReport>,
    pub annihilator_dim: usize,
}

/// Builds the bracket algebra on `span{g_0 .. g_(N-1)}` and runs every check.
pub fn sl2_truncated_build(n: usize, sigma_t: Vec<Scalar>, psi_t: Vec<Scalar>, scaling: Option<Vec<Scalar>>) -> Result<Sl2Build> {
    let ring = TruncatedSigma::new(n, sigma_t, psi_t)?;
    let c = scaling.unwrap_or_else(|| vec![Scalar::one(); n]);
    if c.len() != n || c.iter().any(|x| x.is_zero()) {
        return Err(Error::condition(format!("need {n} nonzero scalings")));
    }
    let gens: Vec<Vec<Scalar>> = (0..n).map(|i| ring.scale(&c[i], &ring.monomial(i))).collect();
    let to_g = |v: &Vec<Scalar>| -> Vector { v.iter().zip(&c).map(|(x, ci)| x / ci).collect() };
    let mut mu = BilinearMap::zero(n);
    let mut closure = LawReport::new("closure");
    for i in 0..n {
        for j in 0..n {
            closure.checked += 1;
            let b = bracket_sigma(&ring, &gens[i], &gens[j]);
            match coordinates(&gens, &b) {
                Some(x) => {
                    for (k, v) in x.into_iter().enumerate() {
                        mu.set(i, j, k, v);
                    }
                }
                None => closure.fail(format!("[g{i}, g{j}] leaves the span")),
            }
        }
    }
    let alpha = LinearMap::from_columns(n, gens.iter().map(|g| to_g(&ring.sigma(g))).collect());
    let labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let mut algebra = HomAlgebra::new(&format!("sl2_truncated_{n}"), ParamSet::new(), Space::new(&labels).unwrap(), mu, alpha)?;
    let mut reports = vec![closure];
    let mut skew = LawReport::new("skew-symmetry");
    for i in 0..n {
        for j in 0..n {
            skew.checked += 1;
            let s = ring.add(&bracket_sigma(&ring, &gens[i], &gens[j]), &bracket_sigma(&ring, &gens[j], &gens[i]));
            for (k, v) in s.iter().enumerate() {
                if !v.is_zero() {
                    skew.push(Witness { indices: vec![i, j], labels: vec![labels[i].clone(), labels[j].clone()], component: format!("t^{k}"), value: v.clone() });
                }
            }
        }
    }
    reports.push(skew);
    let mut top = LawReport::new("psi(t^N)");
    top.checked = 1;
    reports.push(top);
    reports.push(ring.ann_sigma_stable());
    let annihilator_dim = ring.annihilator().len();
    let delta = match find_delta_truncated(&ring) {
        Ok(d) => {
            let ok = d.report.holds;
            reports.push(d.report);
            ok.then_some(d.delta)
        }
        Err(e) => {
            let mut r = LawReport::new("delta");
            r.note(format!("not found: {e}"));
            r.skipped = 1;
            reports.push(r);
            None
        }
    };
    match &delta {
        Some(d) => {
            let mut j = LawReport::new("six-term-jacobi");
            for a in 0..n {
                for b in a + 1..n {
                    for cc in b + 1..n {
                        j.checked += 1;
                        let v = six_term(&ring, d, &gens[a], &gens[b], &gens[cc]);
                        for (k, x) in v.iter().enumerate() {
                            if !x.is_zero() {
                                j.push(Witness { indices: vec![a, b, cc], labels: vec![labels[a].clone(), labels[b].clone(), labels[cc].clone()], component: format!("t^{k}"), value: x.clone() });
                            }
                        }
                    }
                }
            }
            reports.push(j);
            algebra.beta = Some(LinearMap::from_columns(n, gens.iter().map(|g| to_g(&ring.mul(d, g))).collect()));
            reports.push(check_law_with(&algebra, &AlgebraLaw::QuasiHomLie, &CheckOptions::exact())?);
        }
        None => {
            let mut j = LawReport::new("six-term-jacobi");
            j.note("skipped: no delta");
            j.skipped = 1;
            reports.push(j);
        }
    }
    reports.push(ehf_relations(&ring));
    Ok(Sl2Build { ring, algebra, delta, reports, annihilator_dim })
}

/// Auto-declares identifiers in order of appearance and parses each coefficient.
pub fn parse_coefficients(texts: &[&str], ps: &mut ParamSet) -> Result<Vec<Scalar>> {
    for t in texts {
        for word in t.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_')) {
            if word.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) && ps.lookup(word).is_none() && ps.ext.as_ref().is_none_or(|e| e.name != word) {
                ps.declare(word, true).map_err(|e| Error::Parse { line: 1, col: 1, msg: e.msg })?;
            }
        }
    }
    texts
        .iter()
        .map(|t| crate::scalar::parse_scalar(t, ps).map_err(|e| Error::Parse { line: 1, col: e.pos + 1, msg: e.msg }))
        .collect()
}

pub fn var_of(ps: &ParamSet, name: &str) -> Option<Var> {
    ps.var(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        let mut ps = ParamSet::new();
        Scalar::param(ps.declare("q", true).unwrap())
    }

    #[test]
    fn jackson_generator_on_monomials() {
        let r = LaurentSigma::new(q(), 1, 0, Scalar::one()).unwrap();
        for n in -4..=4 {
            let d = r.psi(&Laurent::monomial(Scalar::one(), n));
            assert_eq!(d, Laurent::monomial(q_int(&r.q, n), n), "n = {n}");
        }
        assert!(r.psi(&r.one()).is_zero());
    }

    #[test]
    fn laurent_division_is_exact_or_refused() {
        let a = Laurent::monomial(Scalar::one(), 3).sub(&Laurent::monomial(Scalar::one(), -1));
        let b = Laurent::monomial(Scalar::one(), 1).sub(&Laurent::monomial(Scalar::one(), -1));
        let quo = a.div_exact(&b).unwrap();
        assert_eq!(quo.mul(&b), a);
        assert!(b.div_exact(&a).is_none());
    }

    #[test]
    fn delta_for_s2() {
        let r = LaurentSigma::new(q(), 2, 0, Scalar::one()).unwrap();
        let d = find_delta_laurent(&r, 3).unwrap();
        assert!(d.report.holds);
        assert_eq!(d.closed_form, Some(true));
        assert_eq!(d.delta, Laurent::monomial(Scalar::one(), 0).add(&Laurent::monomial(r.q.clone(), 1)));
    }

    #[test]
    fn truncated_psi_of_t_squared() {
        let mut ps = ParamSet::new();
        let cs = parse_coefficients(&["0", "q1", "q2", "p0", "p1", "p2"], &mut ps).unwrap();
        let r = TruncatedSigma::unchecked(3, cs[..3].to_vec(), cs[3..].to_vec()).unwrap();
        let t = r.t();
        let lhs = r.psi(&r.mul(&t, &t));
        let rhs = r.mul(&r.add(&r.sigma(&t), &t), &r.psi(&t));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gates() {
        let one = Scalar::one;
        assert!(TruncatedSigma::new(2, vec![one(), one()], vec![one()]).is_err());
        assert!(TruncatedSigma::new(3, vec![Scalar::zero(), one()], vec![one()]).is_err());
        assert!(TruncatedSigma::new(2, vec![Scalar::zero(), -one()], vec![one()]).is_ok());
        let z = TruncatedSigma::root_of_unity_q1(3);
        assert!(TruncatedSigma::new(3, vec![Scalar::zero(), z], vec![one()]).is_ok());
    }
}
