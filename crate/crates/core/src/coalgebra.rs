//! Hom-coalgebras `(V, Δ, β)`, duality with Hom-algebras, and the S3
//! bookkeeping around the coassociator `c_β(Δ) = (Δ ⊗ β)Δ - (β ⊗ Δ)Δ`.

use crate::algebra::{Grading, HomAlgebra};
use crate::error::{Error, Result};
use crate::law::{scan, CheckOptions, LawReport, TupleResidual};
use crate::linear::{basis_vec, sub_vec, zero_vec, BilinearMap, LinearMap, Perm, Space, Subgroup, Tensor2, Tensor3, Vector};
use crate::scalar::{ParamSet, Scalar};

/// Sparse comultiplication: `table[i]` lists `(j, k, c)` with `Δ(e_i) ∋ c e_j ⊗ e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Comultiplication {
    n: usize,
    table: Vec<Vec<(usize, usize, Scalar)>>,
}

impl Comultiplication {
    pub fn zero(n: usize) -> Self {
        Comultiplication {
            n,
            table: vec![Vec::new(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let row = &mut self.table[i];
        match row.binary_search_by_key(&(j, k), |(a, b, _)| (*a, *b)) {
            Ok(p) if c.is_zero() => {
                row.remove(p);
            }
            Ok(p) => row[p].2 = c,
            Err(_) if c.is_zero() => {}
            Err(p) => row.insert(p, (j, k, c)),
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        let row = &self.table[i];
        row.binary_search_by_key(&(j, k), |(a, b, _)| (*a, *b))
            .map(|p| row[p].2.clone())
            .unwrap_or_default()
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, c: &Scalar) {
        let cur = self.get(i, j, k);
        self.set(i, j, k, &cur + c);
    }

    pub fn image(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.table[i]
    }

    pub fn apply_basis(&self, i: usize) -> Tensor2 {
        let mut t = Tensor2::zero(self.n);
        for (j, k, c) in &self.table[i] {
            t.add_at(*j, *k, c);
        }
        t
    }

    pub fn apply(&self, x: &[Scalar]) -> Tensor2 {
        let mut t = Tensor2::zero(self.n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, c) in &self.table[i] {
                t.add_at(*j, *k, &(xi * c));
            }
        }
        t
    }

    /// `(i, j, k, c)` entries.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, k, c) in row {
                out.push((i, *j, *k, c.clone()));
            }
        }
        out
    }

    /// `τ ∘ Δ`.
    pub fn opposite(&self) -> Self {
        let mut o = Comultiplication::zero(self.n);
        for (i, j, k, c) in self.entries() {
            o.set(i, k, j, c);
        }
        o
    }

    pub fn sub(&self, o: &Comultiplication) -> Self {
        let mut r = self.clone();
        for (i, j, k, c) in o.entries() {
            r.add_to(i, j, k, &-c);
        }
        r
    }

    /// `Δ ∘ f`.
    pub fn pre_compose(&self, f: &LinearMap) -> Self {
        let mut o = Comultiplication::zero(self.n);
        for i in 0..self.n {
            let t = self.apply(&f.column(i));
            for (j, k, c) in t.nonzero() {
                o.set(i, j, k, c.clone());
            }
        }
        o
    }

    /// `(d ⊗ β)(t)`.
    pub fn left(&self, beta: &LinearMap, t: &Tensor2) -> Tensor3 {
        let n = self.n;
        let mut out = Tensor3::zero(n);
        for (a, b, c) in t.nonzero() {
            let bb = beta.column(b);
            for (j, k, d) in &self.table[a] {
                let cd = c * d;
                for (l, e) in bb.iter().enumerate() {
                    if !e.is_zero() {
                        out.add_at(*j, *k, l, &(&cd * e));
                    }
                }
            }
        }
        out
    }

    /// `(β ⊗ d)(t)`.
    pub fn right(&self, beta: &LinearMap, t: &Tensor2) -> Tensor3 {
        let n = self.n;
        let mut out = Tensor3::zero(n);
        for (a, b, c) in t.nonzero() {
            let ba = beta.column(a);
            for (j, k, d) in &self.table[b] {
                let cd = c * d;
                for (l, e) in ba.iter().enumerate() {
                    if !e.is_zero() {
                        out.add_at(l, *j, *k, &(&cd * e));
                    }
                }
            }
        }
        out
    }

    /// `c_β(Δ)(e_i)`.
    pub fn coassociator(&self, beta: &LinearMap, i: usize) -> Tensor3 {
        let d = self.apply_basis(i);
        self.left(beta, &d).sub(&self.right(beta, &d))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomCoalgebra {
    pub name: String,
    pub params: ParamSet,
    pub space: Space,
    pub delta: Comultiplication,
    pub beta: LinearMap,
    pub counit: Option<Vector>,
    pub grading: Option<Grading>,
}

/// A right comodule `(M, g, ρ)`; `coaction[m]` lists `(m', v, c)` with `ρ(e_m) ∋ c e_m' ⊗ e_v`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomComodule {
    pub space: Space,
    pub g: LinearMap,
    pub coaction: Vec<Vec<(usize, usize, Scalar)>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CoalgebraLaw {
    HomCoassociative,
    Counital,
    GHomCoalgebra(Subgroup),
    HomLieAdmissible,
    Comodule(Box<HomComodule>),
}

impl CoalgebraLaw {
    pub fn id(&self) -> String {
        match self {
            CoalgebraLaw::HomCoassociative => "hom-coassoc".into(),
            CoalgebraLaw::Counital => "counital".into(),
            CoalgebraLaw::GHomCoalgebra(g) => format!("cog{}", g.index()),
            CoalgebraLaw::HomLieAdmissible => "hom-lie-admissible".into(),
            CoalgebraLaw::Comodule(_) => "comodule".into(),
        }
    }
}

fn tensor_components(t: &Tensor3, space: &Space) -> Vec<(String, Scalar)> {
    t.nonzero().map(|(i, c)| (space.tensor_label(&i), c.clone())).collect()
}

fn tensor2_components(t: &Tensor2, space: &Space) -> Vec<(String, Scalar)> {
    t.nonzero().map(|(a, b, c)| (space.tensor_label(&[a, b]), c.clone())).collect()
}

fn vec_components(v: &[Scalar], space: &Space) -> Vec<(String, Scalar)> {
    crate::law::vector_components(v, space.labels())
}

impl HomCoalgebra {
    pub fn new(name: &str, params: ParamSet, space: Space, delta: Comultiplication, beta: LinearMap) -> Result<Self> {
        let n = space.dim();
        if delta.dim() != n || beta.rows() != n || beta.cols() != n {
            return Err(Error::Structure(format!("dimensions disagree with basis of size {n}")));
        }
        Ok(HomCoalgebra {
            name: name.to_string(),
            params,
            space,
            delta,
            beta,
            counit: None,
            grading: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.space.labels()
    }

    pub fn coassociator(&self, i: usize) -> Tensor3 {
        self.delta.coassociator(&self.beta, i)
    }

    /// `Σ_{σ ∈ G} sgn(σ) Φ_σ c_β(Δ)(e_i)`.
    pub fn g_residual(&self, g: Subgroup, i: usize) -> Tensor3 {
        let c = self.coassociator(i);
        signed_sum(&c, g.elements())
    }

    fn per_basis<F>(&self, law: &str, f: F) -> LawReport
    where
        F: Fn(usize) -> Vec<(String, Scalar)> + Sync,
    {
        scan(law, self.dim(), 1, self.labels(), &CheckOptions::exact(), |t| -> TupleResidual { Some(f(t[0])) })
    }
}

fn signed_sum(c: &Tensor3, perms: &[Perm]) -> Tensor3 {
    let mut acc = Tensor3::zero(c.n);
    for &s in perms {
        let p = c.permute(s);
        acc = if s.sign() > 0 { acc.add(&p) } else { acc.sub(&p) };
    }
    acc
}

pub fn check_coalgebra_law(c: &HomCoalgebra, law: &CoalgebraLaw) -> Result<LawReport> {
    let id = law.id();
    let sp = &c.space;
    let n = c.dim();
    let rep = match law {
        CoalgebraLaw::HomCoassociative => c.per_basis(&id, |i| tensor_components(&c.coassociator(i), sp)),
        CoalgebraLaw::Counital => {
            let eps = c.counit.as_ref().ok_or(Error::Missing("counit"))?;
            c.per_basis(&id, |i| {
                let d = c.delta.apply_basis(i);
                let mut l = zero_vec(n);
                let mut r = zero_vec(n);
                for (a, b, x) in d.nonzero() {
                    l[b] = &l[b] + &(&eps[a] * x);
                    r[a] = &r[a] + &(&eps[b] * x);
                }
                let e = basis_vec(n, i);
                let mut out: Vec<(String, Scalar)> =
                    vec_components(&sub_vec(&l, &e), sp).into_iter().map(|(k, v)| (format!("left:{k}"), v)).collect();
                out.extend(vec_components(&sub_vec(&r, &e), sp).into_iter().map(|(k, v)| (format!("right:{k}"), v)));
                out
            })
        }
        CoalgebraLaw::GHomCoalgebra(g) => c.per_basis(&id, |i| tensor_components(&c.g_residual(*g, i), sp)),
        CoalgebraLaw::HomLieAdmissible => {
            let dl = c.delta.sub(&c.delta.opposite());
            let cyc = c.per_basis("cyclic", |i| {
                let t = dl.coassociator(&c.beta, i);
                tensor_components(&signed_sum(&t, Subgroup::G5.elements()), sp)
            });
            let s3 = c.per_basis("s3", |i| tensor_components(&c.g_residual(Subgroup::G6, i), sp));
            let agree = cyc.holds == s3.holds;
            let mut rep = LawReport::new(&id);
            rep.absorb("cyclic", cyc);
            rep.absorb("s3", s3);
            if !agree {
                rep.fail("the cyclic and S3 formulations disagree");
            }
            rep
        }
        CoalgebraLaw::Comodule(m) => check_comodule(c, m)?,
    };
    Ok(rep)
}

fn check_comodule(c: &HomCoalgebra, m: &HomComodule) -> Result<LawReport> {
    let d = m.space.dim();
    let n = c.dim();
    if m.coaction.len() != d || m.g.rows() != d || m.g.cols() != d {
        return Err(Error::Structure("comodule dimensions disagree".into()));
    }
    let mut rep = LawReport::new("comodule");
    for mi in 0..d {
        rep.checked += 1;
        let mut lhs = vec![Scalar::zero(); d * n * n];
        let mut rhs = vec![Scalar::zero(); d * n * n];
        let at = |a: usize, b: usize, k: usize| (a * n + b) * n + k;
        for (mp, v, x) in &m.coaction[mi] {
            let gm = m.g.column(*mp);
            let dv = c.delta.apply_basis(*v);
            for (a, ga) in gm.iter().enumerate() {
                if ga.is_zero() {
                    continue;
                }
                for (b, k, y) in dv.nonzero() {
                    let i = at(a, b, k);
                    lhs[i] = &lhs[i] + &(&(x * ga) * y);
                }
            }
            let bv = c.beta.column(*v);
            for (mq, w, z) in &m.coaction[*mp] {
                for (k, bk) in bv.iter().enumerate() {
                    if !bk.is_zero() {
                        let i = at(*mq, *w, k);
                        rhs[i] = &rhs[i] + &(&(x * z) * bk);
                    }
                }
            }
        }
        for (i, v) in sub_vec(&lhs, &rhs).into_iter().enumerate() {
            if !v.is_zero() {
                let (a, b, k) = (i / (n * n), (i / n) % n, i % n);
                rep.push(crate::law::Witness {
                    indices: vec![mi],
                    labels: vec![m.space.label(mi).into()],
                    component: format!("{}⊗{}⊗{}", m.space.label(a), c.space.label(b), c.space.label(k)),
                    value: v,
                });
            }
        }
    }
    Ok(rep)
}

/// Named structural identities, each checked on every basis vector:
/// the five slot relations between `Δ`, `Δ^op` and `β`, two expansions of
/// `c_β(Δ - Δ^op)`, and the cyclic-sum identity linking it to the S3 sum.
pub fn verify_structural_identities(c: &HomCoalgebra) -> Vec<LawReport> {
    let b = &c.beta;
    let d = &c.delta;
    let op = d.opposite();
    let dl = d.sub(&op);
    let sp = &c.space;
    let check = |name: &str, f: &(dyn Fn(usize) -> (Tensor3, Tensor3) + Sync)| {
        c.per_basis(name, |i| {
            let (l, r) = f(i);
            tensor_components(&l.sub(&r), sp)
        })
    };
    let dd = |i: usize| d.apply_basis(i);
    let od = |i: usize| op.apply_basis(i);
    vec![
        check("opposite-coassociator", &|i| (op.coassociator(b, i), c.coassociator(i).permute(Perm::T13).scale(&Scalar::int(-1)))),
        check("beta-op-after-delta", &|i| (op.right(b, &dd(i)), d.left(b, &od(i)).permute(Perm::T13))),
        check("beta-delta-after-op", &|i| (d.right(b, &od(i)), op.left(b, &dd(i)).permute(Perm::T13))),
        check("delta-beta-after-op", &|i| (d.left(b, &od(i)), d.right(b, &dd(i)).permute(Perm::C213))),
        check("op-beta-after-delta", &|i| (op.left(b, &dd(i)), d.left(b, &dd(i)).permute(Perm::T12))),
        check("lie-coassociator-expansion", &|i| {
            let lhs = dl.coassociator(b, i);
            let rhs = c
                .coassociator(i)
                .add(&op.coassociator(b, i))
                .sub(&d.left(b, &od(i)))
                .sub(&op.left(b, &dd(i)))
                .add(&d.left(b, &od(i)).permute(Perm::T13))
                .add(&op.left(b, &dd(i)).permute(Perm::T13));
            (lhs, rhs)
        }),
        check("lie-coassociator-permuted-expansion", &|i| {
            let lhs = dl.coassociator(b, i);
            let ca = c.coassociator(i);
            let bd = d.right(b, &dd(i));
            let db = d.left(b, &dd(i));
            let rhs = ca
                .sub(&ca.permute(Perm::T13))
                .sub(&bd.permute(Perm::C213))
                .sub(&db.permute(Perm::T12))
                .add(&bd.permute(Perm::T23))
                .add(&db.permute(Perm::C231));
            (lhs, rhs)
        }),
        check("cyclic-equals-twice-s3", &|i| {
            let cl = dl.coassociator(b, i);
            let lhs = signed_sum(&cl, Subgroup::G5.elements());
            let rhs = c.g_residual(Subgroup::G6, i).scale(&Scalar::int(2));
            (lhs, rhs)
        }),
    ]
}

/// Transpose of an algebra: `Δ(e*_k) = Σ C_ij^k e*_i ⊗ e*_j`, `β = αᵀ`, counit from unit.
pub fn dualize(a: &HomAlgebra) -> HomCoalgebra {
    let n = a.dim();
    let mut delta = Comultiplication::zero(n);
    for (i, j, k, c) in a.mu.entries() {
        delta.set(k, i, j, c);
    }
    HomCoalgebra {
        name: a.name.clone(),
        params: a.params.clone(),
        space: a.space.clone(),
        delta,
        beta: a.alpha.transpose(),
        counit: a.unit.clone(),
        grading: a.grading.clone(),
    }
}

/// Transpose of a coalgebra.
pub fn dualize_coalgebra(c: &HomCoalgebra) -> HomAlgebra {
    let n = c.dim();
    let mut mu = BilinearMap::zero(n);
    for (k, i, j, x) in c.delta.entries() {
        mu.set(i, j, k, x);
    }
    HomAlgebra {
        name: c.name.clone(),
        params: c.params.clone(),
        space: c.space.clone(),
        mu,
        alpha: c.beta.transpose(),
        unit: c.counit.clone(),
        bracket: None,
        beta: None,
        grading: c.grading.clone(),
        deformation: None,
    }
}

/// Residual of `(f ⊗ f)Δ = Δ f` on each basis vector.
pub fn comultiplicative(c: &HomCoalgebra, f: &LinearMap) -> LawReport {
    let sp = &c.space;
    c.per_basis("comultiplicative", |i| {
        let fi = f.column(i);
        let l = c.delta.apply(&fi);
        let d = c.delta.apply_basis(i);
        let mut r = Tensor2::zero(c.dim());
        for (a, b, x) in d.nonzero() {
            let fa = f.column(a);
            let fb = f.column(b);
            for (p, u) in fa.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (q, v) in fb.iter().enumerate() {
                    if !v.is_zero() {
                        r.add_at(p, q, &(&(x * u) * v));
                    }
                }
            }
        }
        tensor2_components(&l.sub(&r), sp)
    })
}

/// `(V, Δ ∘ endo, endo)` from a coassociative coalgebra and a coalgebra endomorphism.
pub fn coalgebra_twist(c: &HomCoalgebra, endo: &LinearMap) -> Result<HomCoalgebra> {
    if !c.beta.is_identity() {
        return Err(Error::condition("twist source must have identity twisting map"));
    }
    let co = check_coalgebra_law(c, &CoalgebraLaw::HomCoassociative)?;
    if !co.holds {
        return Err(Error::precondition("twist source is not coassociative", co));
    }
    if endo.rows() != c.dim() || endo.cols() != c.dim() {
        return Err(Error::Structure("endomorphism has wrong size".into()));
    }
    let m = comultiplicative(c, endo);
    if !m.holds {
        return Err(Error::precondition("map is not a coalgebra endomorphism", m));
    }
    let mut out = HomCoalgebra::new(&format!("{}_twisted", c.name), c.params.clone(), c.space.clone(), c.delta.pre_compose(endo), endo.clone())?;
    out.grading = c.grading.clone();
    Ok(out)
}
