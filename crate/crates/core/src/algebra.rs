//! Hom-algebras `(V, μ, α)` and their laws.
//!
//! Every law is checked on all basis tuples; residuals are exact. The
//! associator is `a(x, y, z) = μ(μ(x, y), α z) - μ(α x, μ(y, z))`.

use crate::error::{Error, Result};
use crate::law::{scan, vector_components, CheckOptions, LawReport, TupleResidual};
use crate::linear::{add_vec, axpy, basis_vec, sub_vec, zero_vec, BilinearMap, LinearMap, Perm, Space, Subgroup, Vector};
use crate::scalar::{ParamSet, Scalar, Var};

/// Integer grades on basis vectors. `window` makes products whose grades sum
/// outside `[-window, window]` undefined; `cap` bounds the product grade of
/// pairs on which bialgebra compatibility is required.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Grading {
    pub grades: Vec<i64>,
    pub window: Option<i64>,
    pub cap: Option<i64>,
}

impl Grading {
    pub fn defined(&self, i: usize, j: usize) -> bool {
        self.window.is_none_or(|w| (self.grades[i] + self.grades[j]).abs() <= w)
    }

    pub fn in_cap(&self, i: usize, j: usize) -> bool {
        self.cap.is_none_or(|c| self.grades[i] + self.grades[j] <= c)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomAlgebra {
    pub name: String,
    pub params: ParamSet,
    pub space: Space,
    pub mu: BilinearMap,
    pub alpha: LinearMap,
    pub unit: Option<Vector>,
    /// Second bracket for Hom-Poisson checks.
    pub bracket: Option<BilinearMap>,
    /// Extra twist for quasi-Hom-Lie checks.
    pub beta: Option<LinearMap>,
    pub grading: Option<Grading>,
    /// Residuals are compared modulo `var^order` unless checked exactly.
    pub deformation: Option<(Var, usize)>,
}

/// A left module `(M, f, γ)`; `action[i]` is left multiplication by `e_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomModule {
    pub space: Space,
    pub f: LinearMap,
    pub action: Vec<LinearMap>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraLaw {
    HomAssociative,
    Unital,
    HomLie,
    HomLeibniz,
    HomPoisson,
    GHomAssociative(Subgroup),
    QuasiHomLie,
    BetaTwisting,
    Multiplicative,
    /// The `n`-fold identity on `n + 1` elements.
    Higher(usize),
    Pentagon,
    Module(Box<HomModule>),
}

impl AlgebraLaw {
    pub fn id(&self) -> String {
        match self {
            AlgebraLaw::HomAssociative => "hom-assoc".into(),
            AlgebraLaw::Unital => "unital".into(),
            AlgebraLaw::HomLie => "hom-lie".into(),
            AlgebraLaw::HomLeibniz => "hom-leibniz".into(),
            AlgebraLaw::HomPoisson => "hom-poisson".into(),
            AlgebraLaw::GHomAssociative(g) => format!("g{}", g.index()),
            AlgebraLaw::QuasiHomLie => "quasi-hom-lie".into(),
            AlgebraLaw::BetaTwisting => "beta-twisting".into(),
            AlgebraLaw::Multiplicative => "multiplicative".into(),
            AlgebraLaw::Higher(n) => format!("higher:{n}"),
            AlgebraLaw::Pentagon => "pentagon".into(),
            AlgebraLaw::Module(_) => "module".into(),
        }
    }
}

impl HomAlgebra {
    pub fn new(name: &str, params: ParamSet, space: Space, mu: BilinearMap, alpha: LinearMap) -> Result<Self> {
        let n = space.dim();
        if mu.dim() != n || alpha.rows() != n || alpha.cols() != n {
            return Err(Error::Structure(format!("dimensions disagree with basis of size {n}")));
        }
        Ok(HomAlgebra {
            name: name.to_string(),
            params,
            space,
            mu,
            alpha,
            unit: None,
            bracket: None,
            beta: None,
            grading: None,
            deformation: None,
        })
    }

    pub fn with_unit(mut self, u: Vector) -> Result<Self> {
        if u.len() != self.dim() {
            return Err(Error::Structure("unit has wrong length".into()));
        }
        self.unit = Some(u);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.space.labels()
    }

    pub fn default_options(&self) -> CheckOptions {
        CheckOptions {
            modulo: self.deformation,
        }
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.mu.apply(x, y)
    }

    /// Product with window semantics; `None` if an undefined basis product is needed.
    pub fn try_mul_with(&self, m: &BilinearMap, x: &[Scalar], y: &[Scalar]) -> Option<Vector> {
        if let Some(g) = &self.grading {
            if g.window.is_some() {
                for (i, xi) in x.iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if !yj.is_zero() && !g.defined(i, j) {
                            return None;
                        }
                    }
                }
            }
        }
        Some(m.apply(x, y))
    }

    pub fn try_mul(&self, x: &[Scalar], y: &[Scalar]) -> Option<Vector> {
        self.try_mul_with(&self.mu, x, y)
    }

    fn e(&self, i: usize) -> Vector {
        basis_vec(self.dim(), i)
    }

    fn ae(&self, i: usize) -> Vector {
        self.alpha.column(i)
    }

    /// `μ(μ(x, y), α z) - μ(α x, μ(y, z))`.
    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Option<Vector> {
        let xy = self.try_mul(x, y)?;
        let l = self.try_mul(&xy, &self.alpha.apply(z))?;
        let yz = self.try_mul(y, z)?;
        let r = self.try_mul(&self.alpha.apply(x), &yz)?;
        Some(sub_vec(&l, &r))
    }

    pub fn associator_basis(&self, i: usize, j: usize, k: usize) -> Option<Vector> {
        self.associator(&self.e(i), &self.e(j), &self.e(k))
    }

    /// `↺ [α x, [y, z]]` for the multiplication `m`.
    fn jacobi(&self, m: &BilinearMap, i: usize, j: usize, k: usize, beta: Option<&LinearMap>) -> Option<Vector> {
        let mut acc = zero_vec(self.dim());
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let bc = self.try_mul_with(m, &self.e(b), &self.e(c))?;
            let t = self.try_mul_with(m, &self.ae(a), &bc)?;
            acc = add_vec(&acc, &t);
            if let Some(beta) = beta {
                let u = self.try_mul_with(m, &self.e(a), &bc)?;
                acc = add_vec(&acc, &beta.apply(&u));
            }
        }
        Some(acc)
    }

    fn skew(&self, m: &BilinearMap, opts: &CheckOptions) -> LawReport {
        let labels = self.labels();
        scan("skew-symmetry", self.dim(), 2, labels, opts, |t| {
            if t[0] > t[1] {
                return Some(Vec::new());
            }
            let s = add_vec(&m.product_vec(t[0], t[1]), &m.product_vec(t[1], t[0]));
            Some(vector_components(&s, labels))
        })
    }

    fn hom_lie_for(&self, m: &BilinearMap, beta: Option<&LinearMap>, opts: &CheckOptions, law: &str) -> LawReport {
        let labels = self.labels();
        let mut rep = LawReport::new(law);
        rep.absorb("skew", self.skew(m, opts));
        let jac = scan("jacobi", self.dim(), 3, labels, opts, |t| {
            self.jacobi(m, t[0], t[1], t[2], beta).map(|v| vector_components(&v, labels))
        });
        rep.absorb("jacobi", jac);
        rep
    }

    fn tuple<F>(&self, law: &str, arity: usize, opts: &CheckOptions, f: F) -> LawReport
    where
        F: Fn(&[usize]) -> Option<Vector> + Sync,
    {
        let labels = self.labels();
        scan(law, self.dim(), arity, labels, opts, |t| -> TupleResidual { f(t).map(|v| vector_components(&v, labels)) })
    }

    /// `α^k(e_i)`.
    fn alpha_pow_e(&self, k: usize, i: usize) -> Vector {
        let mut v = self.e(i);
        for _ in 0..k {
            v = self.alpha.apply(&v);
        }
        v
    }

    fn higher(&self, n: usize, t: &[usize]) -> Option<Vector> {
        let mut l = self.try_mul(&self.e(t[n - 1]), &self.e(t[n]))?;
        for i in (0..n - 1).rev() {
            l = self.try_mul(&self.alpha_pow_e(n - 1 - i, t[i]), &l)?;
        }
        let mut r = self.try_mul(&self.e(t[0]), &self.e(t[1]))?;
        for (i, &ti) in t.iter().enumerate().skip(2) {
            r = self.try_mul(&r, &self.alpha_pow_e(i - 1, ti))?;
        }
        Some(sub_vec(&l, &r))
    }

    fn pentagon(&self, t: &[usize]) -> Option<Vector> {
        let a = |i: usize| self.ae(t[i]);
        let l = self.try_mul(&self.alpha.apply(&self.try_mul(&self.e(t[0]), &self.e(t[1]))?), &self.try_mul(&a(2), &a(3))?)?;
        let r = self.try_mul(&self.try_mul(&a(0), &a(1))?, &self.alpha.apply(&self.try_mul(&self.e(t[2]), &self.e(t[3]))?))?;
        Some(sub_vec(&l, &r))
    }
}

/// Checks `law` with the structure's default comparison (modulo its deformation order if any).
pub fn check_law(a: &HomAlgebra, law: &AlgebraLaw) -> Result<LawReport> {
    check_law_with(a, law, &a.default_options())
}

pub fn check_law_with(a: &HomAlgebra, law: &AlgebraLaw, opts: &CheckOptions) -> Result<LawReport> {
    let id = law.id();
    let n = a.dim();
    let labels = a.labels();
    let rep = match law {
        AlgebraLaw::HomAssociative => a.tuple(&id, 3, opts, |t| a.associator_basis(t[0], t[1], t[2])),
        AlgebraLaw::Unital => {
            let u = a.unit.as_ref().ok_or(Error::Missing("unit"))?;
            // Left and right residuals are reported separately.
            let mut rep = LawReport::new(&id);
            let left = scan("left", n, 1, labels, opts, |t| {
                let e = a.e(t[0]);
                a.try_mul(u, &e).map(|p| vector_components(&sub_vec(&p, &e), labels))
            });
            let right = scan("right", n, 1, labels, opts, |t| {
                let e = a.e(t[0]);
                a.try_mul(&e, u).map(|p| vector_components(&sub_vec(&p, &e), labels))
            });
            rep.absorb("left", left);
            rep.absorb("right", right);
            rep
        }
        AlgebraLaw::HomLie => a.hom_lie_for(&a.mu, None, opts, &id),
        AlgebraLaw::QuasiHomLie => {
            let beta = a.beta.as_ref().ok_or(Error::Missing("beta"))?;
            a.hom_lie_for(&a.mu, Some(beta), opts, &id)
        }
        AlgebraLaw::BetaTwisting => {
            let beta = a.beta.as_ref().ok_or(Error::Missing("beta"))?;
            a.tuple(&id, 2, opts, |t| {
                let l = a.try_mul(&a.ae(t[0]), &a.ae(t[1]))?;
                let r = beta.apply(&a.alpha.apply(&a.try_mul(&a.e(t[0]), &a.e(t[1]))?));
                Some(sub_vec(&l, &r))
            })
        }
        AlgebraLaw::HomLeibniz => a.tuple(&id, 3, opts, |t| {
            let (x, y, z) = (a.e(t[0]), a.e(t[1]), a.e(t[2]));
            let xy_z = a.try_mul(&a.try_mul(&x, &y)?, &a.ae(t[2]))?;
            let xz_y = a.try_mul(&a.try_mul(&x, &z)?, &a.ae(t[1]))?;
            let x_yz = a.try_mul(&a.ae(t[0]), &a.try_mul(&y, &z)?)?;
            Some(sub_vec(&sub_vec(&xy_z, &xz_y), &x_yz))
        }),
        AlgebraLaw::HomPoisson => {
            let br = a.bracket.as_ref().ok_or(Error::Missing("bracket"))?;
            let mut rep = LawReport::new(&id);
            rep.absorb(
                "commutative",
                a.tuple("commutative", 2, opts, |t| Some(sub_vec(&a.mu.product_vec(t[0], t[1]), &a.mu.product_vec(t[1], t[0])))),
            );
            rep.absorb("hom-assoc", check_law_with(a, &AlgebraLaw::HomAssociative, opts)?);
            rep.absorb("hom-lie", a.hom_lie_for(br, None, opts, "hom-lie"));
            let b = |x: &[Scalar], y: &[Scalar]| a.try_mul_with(br, x, y);
            rep.absorb(
                "compatibility",
                a.tuple("compatibility", 3, opts, |t| {
                    let (x, y, z) = (a.e(t[0]), a.e(t[1]), a.e(t[2]));
                    let l = b(&a.ae(t[0]), &a.try_mul(&y, &z)?)?;
                    let r1 = a.try_mul(&a.ae(t[1]), &b(&x, &z)?)?;
                    let r2 = a.try_mul(&a.ae(t[2]), &b(&x, &y)?)?;
                    Some(sub_vec(&l, &add_vec(&r1, &r2)))
                }),
            );
            rep.absorb(
                "leibniz",
                a.tuple("leibniz", 3, opts, |t| {
                    let (x, y, z) = (a.e(t[0]), a.e(t[1]), a.e(t[2]));
                    let l = b(&a.try_mul(&x, &y)?, &a.ae(t[2]))?;
                    let r1 = a.try_mul(&b(&x, &z)?, &a.ae(t[1]))?;
                    let r2 = a.try_mul(&a.ae(t[0]), &b(&y, &z)?)?;
                    Some(sub_vec(&l, &add_vec(&r1, &r2)))
                }),
            );
            rep
        }
        AlgebraLaw::GHomAssociative(g) => a.tuple(&id, 3, opts, |t| {
            let mut acc = zero_vec(n);
            for &s in g.elements() {
                let o = permuted([t[0], t[1], t[2]], s);
                let v = a.associator_basis(o[0], o[1], o[2])?;
                axpy(&mut acc, &Scalar::int(s.sign()), &v);
            }
            Some(acc)
        }),
        AlgebraLaw::Multiplicative => a.tuple(&id, 2, opts, |t| {
            let l = a.alpha.apply(&a.try_mul(&a.e(t[0]), &a.e(t[1]))?);
            let r = a.try_mul(&a.ae(t[0]), &a.ae(t[1]))?;
            Some(sub_vec(&l, &r))
        }),
        AlgebraLaw::Higher(k) => {
            if *k < 2 {
                return Err(Error::condition("higher identities need n >= 2"));
            }
            a.tuple(&id, k + 1, opts, |t| a.higher(*k, t))
        }
        AlgebraLaw::Pentagon => {
            let m = check_law_with(a, &AlgebraLaw::Multiplicative, opts)?;
            if !m.holds {
                return Err(Error::precondition("the pentagon identity needs a multiplicative twisting map", m));
            }
            a.tuple(&id, 4, opts, |t| a.pentagon(t))
        }
        AlgebraLaw::Module(m) => check_module(a, m, opts)?,
    };
    Ok(rep)
}

fn check_module(a: &HomAlgebra, m: &HomModule, opts: &CheckOptions) -> Result<LawReport> {
    let n = a.dim();
    let d = m.space.dim();
    if m.action.len() != n || m.f.rows() != d || m.action.iter().any(|x| x.rows() != d || x.cols() != d) {
        return Err(Error::Structure("module dimensions disagree".into()));
    }
    let act = |x: &[Scalar], v: &[Scalar]| {
        let mut out = zero_vec(d);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                axpy(&mut out, xi, &m.action[i].apply(v));
            }
        }
        out
    };
    let ml = m.space.labels();
    let mut rep = LawReport::new("module");
    for i in 0..n {
        for j in 0..n {
            for k in 0..d {
                rep.checked += 1;
                let mk = basis_vec(d, k);
                let l = act(&a.mul(&basis_vec(n, i), &basis_vec(n, j)), &m.f.apply(&mk));
                let r = act(&a.alpha.column(i), &act(&basis_vec(n, j), &mk));
                for (c, v) in vector_components(&sub_vec(&l, &r), ml) {
                    if let Some(v) = opts.reduce(&v) {
                        rep.push(crate::law::Witness {
                            indices: vec![i, j, k],
                            labels: vec![a.space.label(i).into(), a.space.label(j).into(), ml[k].clone()],
                            component: c,
                            value: v,
                        });
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// The n-fold identity and, when the twisting map is multiplicative, the pentagon identity.
pub fn check_higher_identities(a: &HomAlgebra, n: usize) -> Result<Vec<LawReport>> {
    let mut out = vec![check_law(a, &AlgebraLaw::Higher(n))?];
    let m = check_law(a, &AlgebraLaw::Multiplicative)?;
    if m.holds {
        out.push(check_law(a, &AlgebraLaw::Pentagon)?);
    } else {
        let mut p = LawReport::new("pentagon");
        p.note("not run: twisting map is not multiplicative");
        p.skipped = 1;
        out.push(p);
    }
    Ok(out)
}

/// `(V, endo ∘ μ, endo)` from an associative algebra and an algebra endomorphism.
pub fn yau_twist(a: &HomAlgebra, endo: &LinearMap) -> Result<HomAlgebra> {
    if !a.alpha.is_identity() {
        return Err(Error::condition("twist source must have identity twisting map"));
    }
    let assoc = check_law_with(a, &AlgebraLaw::HomAssociative, &CheckOptions::exact())?;
    if !assoc.holds {
        return Err(Error::precondition("twist source is not associative", assoc));
    }
    let n = a.dim();
    if endo.rows() != n || endo.cols() != n {
        return Err(Error::Structure("endomorphism has wrong size".into()));
    }
    let probe = HomAlgebra {
        alpha: endo.clone(),
        ..a.clone()
    };
    let mult = check_law_with(&probe, &AlgebraLaw::Multiplicative, &CheckOptions::exact())?;
    if !mult.holds {
        return Err(Error::precondition("map is not an algebra endomorphism", mult));
    }
    let mut out = HomAlgebra::new(&format!("{}_twisted", a.name), a.params.clone(), a.space.clone(), a.mu.post_compose(endo), endo.clone())?;
    out.grading = a.grading.clone();
    Ok(out)
}

/// `[x, y] = μ(x, y) - μ(y, x)` with the same twisting map.
pub fn commutator_bracket(a: &HomAlgebra) -> Result<HomAlgebra> {
    let rep = check_law(a, &AlgebraLaw::HomAssociative)?;
    if !rep.holds {
        return Err(Error::precondition("commutator needs a Hom-associative algebra", rep));
    }
    let mut out = HomAlgebra::new(&format!("{}_commutator", a.name), a.params.clone(), a.space.clone(), a.mu.sub(&a.mu.opposite()), a.alpha.clone())?;
    out.deformation = a.deformation;
    Ok(out)
}

/// Structure constants of `A ⊗ B`, basis index `i * dim B + j`.
pub fn tensor_product(a: &HomAlgebra, b: &HomAlgebra) -> Result<HomAlgebra> {
    let (na, nb) = (a.dim(), b.dim());
    let mut mu = BilinearMap::zero(na * nb);
    for (i1, i2, k, c) in a.mu.entries() {
        for (j1, j2, l, d) in b.mu.entries() {
            mu.add_to(i1 * nb + j1, i2 * nb + j2, k * nb + l, &(&c * &d));
        }
    }
    let mut params = a.params.clone();
    for p in &b.params.params {
        if params.lookup(&p.name).is_none() {
            params.params.push(p.clone());
        }
    }
    if params.ext.is_none() {
        params.ext = b.params.ext.clone();
    }
    let mut out = HomAlgebra::new(
        &format!("{}_x_{}", a.name, b.name),
        params,
        a.space.tensor(&b.space),
        mu,
        LinearMap::kron(&a.alpha, &b.alpha),
    )?;
    if let (Some(u), Some(v)) = (&a.unit, &b.unit) {
        let mut w = zero_vec(na * nb);
        for i in 0..na {
            for j in 0..nb {
                w[i * nb + j] = &u[i] * &v[j];
            }
        }
        out.unit = Some(w);
    }
    Ok(out)
}

/// `f: A -> B` preserves multiplication, twisting maps and (if both exist) units.
pub fn check_morphism(f: &LinearMap, a: &HomAlgebra, b: &HomAlgebra) -> Result<LawReport> {
    let (na, nb) = (a.dim(), b.dim());
    if f.cols() != na || f.rows() != nb {
        return Err(Error::Structure("map dimensions disagree".into()));
    }
    let opts = CheckOptions::exact();
    let bl = b.labels();
    let al = a.labels();
    let mut rep = LawReport::new("morphism");
    rep.absorb(
        "mu",
        scan("mu", na, 2, al, &opts, |t| {
            let l = f.apply(&a.mul(&basis_vec(na, t[0]), &basis_vec(na, t[1])));
            let r = b.mul(&f.column(t[0]), &f.column(t[1]));
            Some(vector_components(&sub_vec(&l, &r), bl))
        }),
    );
    rep.absorb(
        "alpha",
        scan("alpha", na, 1, al, &opts, |t| {
            let l = f.apply(&a.alpha.column(t[0]));
            let r = b.alpha.apply(&f.column(t[0]));
            Some(vector_components(&sub_vec(&l, &r), bl))
        }),
    );
    if let (Some(u), Some(v)) = (&a.unit, &b.unit) {
        let d = sub_vec(&f.apply(u), v);
        let mut r = LawReport::new("unit");
        r.checked = 1;
        for (c, val) in vector_components(&d, bl) {
            r.push(crate::law::Witness {
                indices: vec![],
                labels: vec![],
                component: c,
                value: val,
            });
        }
        rep.absorb("unit", r);
    }
    Ok(rep)
}

/// `Φ_σ` on a basis triple: the factor in slot `r` moves to slot `σ(r)`.
pub fn permuted(t: [usize; 3], s: Perm) -> [usize; 3] {
    let mut o = [0usize; 3];
    for r in 0..3 {
        o[s.0[r] as usize] = t[r];
    }
    o
}
