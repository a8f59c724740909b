//! Hom-bialgebras, convolution, antipodes, primitive and group-like elements,
//! and the truncated catalog constructions.
//!
//! Truncated constructions carry a [`Grading`] with a `cap`: products above
//! the cap vanish, so compatibility is only required on pairs whose grades
//! sum to at most the cap. Reports count the excluded pairs as skipped.

use crate::algebra::{check_law_with, AlgebraLaw, Grading, HomAlgebra};
use crate::coalgebra::{check_coalgebra_law, comultiplicative, CoalgebraLaw, Comultiplication, HomCoalgebra};
use crate::error::{Error, Result};
use crate::law::{scan, vector_components, CheckOptions, LawReport, Witness};
use crate::linear::{basis_vec, coordinates, kernel, solve, sub_vec, zero_vec, BilinearMap, LinearMap, Perm, Solution, Space, Tensor2, Tensor3, Vector};
use crate::scalar::{ParamSet, Scalar};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BialgebraKind {
    /// No unit or counit required.
    Generalized,
    UnitalCounital,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomBialgebra {
    pub name: String,
    pub params: ParamSet,
    pub space: Space,
    pub mu: BilinearMap,
    pub alpha: LinearMap,
    pub delta: Comultiplication,
    pub beta: LinearMap,
    pub unit: Option<Vector>,
    pub counit: Option<Vector>,
    pub kind: BialgebraKind,
    pub grading: Option<Grading>,
}

impl HomBialgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn algebra(&self) -> HomAlgebra {
        HomAlgebra {
            name: self.name.clone(),
            params: self.params.clone(),
            space: self.space.clone(),
            mu: self.mu.clone(),
            alpha: self.alpha.clone(),
            unit: self.unit.clone(),
            bracket: None,
            beta: None,
            grading: self.grading.clone().map(|g| Grading { window: None, ..g }),
            deformation: None,
        }
    }

    pub fn coalgebra(&self) -> HomCoalgebra {
        HomCoalgebra {
            name: self.name.clone(),
            params: self.params.clone(),
            space: self.space.clone(),
            delta: self.delta.clone(),
            beta: self.beta.clone(),
            counit: self.counit.clone(),
            grading: self.grading.clone(),
        }
    }

    pub fn from_parts(a: &HomAlgebra, c: &HomCoalgebra, kind: BialgebraKind) -> Result<Self> {
        if a.space != c.space {
            return Err(Error::Structure("algebra and coalgebra bases differ".into()));
        }
        let h = HomBialgebra {
            name: a.name.clone(),
            params: a.params.clone(),
            space: a.space.clone(),
            mu: a.mu.clone(),
            alpha: a.alpha.clone(),
            delta: c.delta.clone(),
            beta: c.beta.clone(),
            unit: a.unit.clone(),
            counit: c.counit.clone(),
            kind,
            grading: a.grading.clone().or_else(|| c.grading.clone()),
        };
        h.validate()?;
        Ok(h)
    }

    pub fn validate(&self) -> Result<()> {
        if self.kind == BialgebraKind::UnitalCounital && (self.unit.is_none() || self.counit.is_none()) {
            return Err(Error::Structure("unital-counital kind needs both unit and counit".into()));
        }
        Ok(())
    }

    /// The same structure viewed as unital-counital, when both maps are present.
    pub fn as_unital_counital(&self) -> Result<Self> {
        let mut h = self.clone();
        h.kind = BialgebraKind::UnitalCounital;
        h.validate()?;
        Ok(h)
    }

    fn in_cap(&self, i: usize, j: usize) -> bool {
        self.grading.as_ref().is_none_or(|g| g.in_cap(i, j))
    }

    fn counit_of(&self, x: &[Scalar]) -> Option<Scalar> {
        let e = self.counit.as_ref()?;
        Some(e.iter().zip(x).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
    }
}

/// `(μ ⊗ μ) Υ (s ⊗ t)` for `s = Σ a1 ⊗ a2`, `t = Σ b1 ⊗ b2`.
fn mul_tensors(mu: &BilinearMap, s: &Tensor2, t: &Tensor2) -> Tensor2 {
    let n = s.n;
    let mut out = Tensor2::zero(n);
    for (a1, a2, x) in s.nonzero() {
        for (b1, b2, y) in t.nonzero() {
            let l = mu.product(a1, b1);
            let r = mu.product(a2, b2);
            if l.is_empty() || r.is_empty() {
                continue;
            }
            let xy = x * y;
            for (p, u) in l {
                for (q, v) in r {
                    out.add_at(*p, *q, &(&xy * &(u * v)));
                }
            }
        }
    }
    out
}

fn t2_components(t: &Tensor2, sp: &Space) -> Vec<(String, Scalar)> {
    t.nonzero().map(|(a, b, c)| (sp.tensor_label(&[a, b]), c.clone())).collect()
}

/// Every axiom of the bialgebra's kind, one report each; `strict` adds
/// `Δ α = (α ⊗ α) Δ` and `ε α = ε`.
pub fn check_bialgebra(h: &HomBialgebra, strict: bool) -> Result<Vec<LawReport>> {
    h.validate()?;
    let exact = CheckOptions::exact();
    let a = h.algebra();
    let c = h.coalgebra();
    let sp = &h.space;
    let n = h.dim();
    let labels = sp.labels();
    let mut out = vec![check_law_with(&a, &AlgebraLaw::HomAssociative, &exact)?, check_coalgebra_law(&c, &CoalgebraLaw::HomCoassociative)?];
    out.push(scan("compatibility", n, 2, labels, &exact, |t| {
        if !h.in_cap(t[0], t[1]) {
            return None;
        }
        let l = h.delta.apply(&h.mu.product_vec(t[0], t[1]));
        let r = mul_tensors(&h.mu, &h.delta.apply_basis(t[0]), &h.delta.apply_basis(t[1]));
        Some(t2_components(&l.sub(&r), sp))
    }));
    if h.kind == BialgebraKind::UnitalCounital {
        let u = h.unit.clone().unwrap();
        out.push(check_law_with(&a, &AlgebraLaw::Unital, &exact)?);
        out.push(check_coalgebra_law(&c, &CoalgebraLaw::Counital)?);
        let mut r = LawReport::new("unit-grouplike");
        r.checked = 1;
        let d = h.delta.apply(&u).sub(&Tensor2::outer(&u, &u));
        for (comp, v) in t2_components(&d, sp) {
            r.push(Witness { indices: vec![], labels: vec![], component: comp, value: v });
        }
        let eu = h.counit_of(&u).unwrap();
        if !eu.is_one() {
            r.push(Witness { indices: vec![], labels: vec![], component: "counit(unit)".into(), value: &eu - &Scalar::one() });
        }
        out.push(r);
        out.push(scan("counit-multiplicative", n, 2, labels, &exact, |t| {
            if !h.in_cap(t[0], t[1]) {
                return None;
            }
            let l = h.counit_of(&h.mu.product_vec(t[0], t[1])).unwrap();
            let e = h.counit.as_ref().unwrap();
            let v = &l - &(&e[t[0]] * &e[t[1]]);
            Some(if v.is_zero() { vec![] } else { vec![("counit".into(), v)] })
        }));
    }
    if strict {
        let mut r = comultiplicative(&c, &h.alpha);
        r.law = "delta-alpha".into();
        out.push(r);
        if let Some(e) = &h.counit {
            out.push(scan("counit-alpha", n, 1, labels, &exact, |t| {
                let v = &h.counit_of(&h.alpha.column(t[0])).unwrap() - &e[t[0]];
                Some(if v.is_zero() { vec![] } else { vec![("counit".into(), v)] })
            }));
        }
    }
    Ok(out)
}

pub fn all_hold(reports: &[LawReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// `Hom(H, H)` under `f ⋆ g = μ (f ⊗ g) Δ` with twisting map `γ(f) = α f β`.
pub struct ConvolutionAlgebra<'a> {
    pub h: &'a HomBialgebra,
}

impl<'a> ConvolutionAlgebra<'a> {
    pub fn new(h: &'a HomBialgebra) -> Self {
        ConvolutionAlgebra { h }
    }

    pub fn convolve(&self, f: &LinearMap, g: &LinearMap) -> LinearMap {
        let n = self.h.dim();
        let cols = (0..n)
            .map(|x| {
                let mut acc = zero_vec(n);
                for (p, q, c) in self.h.delta.image(x) {
                    let v = self.h.mu.apply(&f.column(*p), &g.column(*q));
                    crate::linear::axpy(&mut acc, c, &v);
                }
                acc
            })
            .collect();
        LinearMap::from_columns(n, cols)
    }

    pub fn gamma(&self, f: &LinearMap) -> LinearMap {
        self.h.alpha.compose(f).compose(&self.h.beta)
    }

    /// `η ∘ ε`, when both exist.
    pub fn unit(&self) -> Option<LinearMap> {
        let u = self.h.unit.as_ref()?;
        let e = self.h.counit.as_ref()?;
        let n = self.h.dim();
        Some(LinearMap::from_columns(n, (0..n).map(|x| crate::linear::scale_vec(&e[x], u)).collect()))
    }

    /// `γ(f) ⋆ (g ⋆ h) - (f ⋆ g) ⋆ γ(h)`.
    pub fn associator(&self, f: &LinearMap, g: &LinearMap, k: &LinearMap) -> LinearMap {
        let l = self.convolve(&self.gamma(f), &self.convolve(g, k));
        let r = self.convolve(&self.convolve(f, g), &self.gamma(k));
        l.sub(&r)
    }

    /// The `n²`-dimensional structure on matrix units `E_ab: e_b -> e_a`, index `a * n + b`.
    pub fn to_hom_algebra(&self) -> Result<HomAlgebra> {
        let h = self.h;
        let n = h.dim();
        let mut labels = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                labels.push(format!("E_{}_{}", h.space.label(a), h.space.label(b)));
            }
        }
        let space = Space::new(&labels).unwrap_or_else(|_| Space::numbered("E", n * n));
        let mut mu = BilinearMap::zero(n * n);
        for x in 0..n {
            for (b, d, dc) in h.delta.image(x) {
                for a in 0..n {
                    for c in 0..n {
                        for (y, cc) in h.mu.product(a, c) {
                            mu.add_to(a * n + b, c * n + d, y * n + x, &(dc * cc));
                        }
                    }
                }
            }
        }
        let mut gamma = LinearMap::zero(n * n, n * n);
        for a in 0..n {
            for b in 0..n {
                for y in 0..n {
                    let ay = h.alpha.get(y, a);
                    if ay.is_zero() {
                        continue;
                    }
                    for x in 0..n {
                        let bx = h.beta.get(b, x);
                        if !bx.is_zero() {
                            gamma.set(y * n + x, a * n + b, ay * bx);
                        }
                    }
                }
            }
        }
        let mut out = HomAlgebra::new(&format!("{}_convolution", h.name), h.params.clone(), space, mu, gamma)?;
        if let Some(u) = self.unit() {
            let mut v = zero_vec(n * n);
            for a in 0..n {
                for b in 0..n {
                    v[a * n + b] = u.get(a, b).clone();
                }
            }
            out.unit = Some(v);
        }
        Ok(out)
    }
}

/// Convolution checks on sampled endomorphisms plus the two-sided unit.
pub fn check_convolution(h: &HomBialgebra, samples: &[(LinearMap, LinearMap, LinearMap)]) -> Vec<LawReport> {
    let conv = ConvolutionAlgebra::new(h);
    let sp = &h.space;
    let mut assoc = LawReport::new("convolution-hom-assoc");
    for (s, (f, g, k)) in samples.iter().enumerate() {
        assoc.checked += 1;
        let d = conv.associator(f, g, k);
        for a in 0..h.dim() {
            for b in 0..h.dim() {
                let v = d.get(a, b);
                if !v.is_zero() {
                    assoc.push(Witness {
                        indices: vec![s],
                        labels: vec![format!("sample{s}")],
                        component: format!("{}<-{}", sp.label(a), sp.label(b)),
                        value: v.clone(),
                    });
                }
            }
        }
    }
    let mut out = vec![assoc];
    if let Some(e) = conv.unit() {
        let mut u = LawReport::new("convolution-unit");
        for (s, (f, _, _)) in samples.iter().enumerate() {
            for (side, p) in [("left", conv.convolve(&e, f)), ("right", conv.convolve(f, &e))] {
                u.checked += 1;
                let d = p.sub(f);
                for (i, v) in d.entries().iter().enumerate() {
                    if !v.is_zero() {
                        u.push(Witness {
                            indices: vec![s],
                            labels: vec![format!("sample{s}")],
                            component: format!("{side}:{}<-{}", sp.label(i / h.dim()), sp.label(i % h.dim())),
                            value: v.clone(),
                        });
                    }
                }
            }
        }
        out.push(u);
    }
    out
}

#[derive(Clone, Debug)]
pub struct AntipodeReport {
    pub s: LinearMap,
    pub unique: bool,
    pub fixes_unit: bool,
    pub preserves_counit: bool,
    /// `S α = α S`; informational only.
    pub commutes_with_alpha: bool,
}

/// Solves `μ(S ⊗ id)Δ = μ(id ⊗ S)Δ = η ε` jointly for `S`.
pub fn find_antipode(h: &HomBialgebra) -> Result<AntipodeReport> {
    if h.kind != BialgebraKind::UnitalCounital {
        return Err(Error::condition("antipode needs a unital-counital bialgebra"));
    }
    let reps = check_bialgebra(h, false)?;
    if let Some(bad) = reps.iter().find(|r| !r.holds) {
        return Err(Error::precondition(format!("bialgebra axiom '{}' fails", bad.law), bad.clone()));
    }
    let (rows, rhs) = antipode_system(h);
    let n = h.dim();
    let x = match solve(&rows, &rhs, n * n) {
        Solution::Unique(x) => x,
        Solution::Family(_, ker) => {
            return Err(Error::Internal(format!("antipode system has a {}-dimensional solution family", ker.len())))
        }
        Solution::Inconsistent => {
            let mut r = LawReport::new("antipode");
            r.fail("the convolution-inverse system is inconsistent");
            return Err(Error::precondition("no antipode exists", r));
        }
    };
    // Second route: shifting one entry must make the system inconsistent.
    let unique = {
        let mut rows = rows;
        let mut rhs = rhs;
        let mut pin = zero_vec(n * n);
        pin[0] = Scalar::one();
        rows.push(pin);
        rhs.push(&x[0] + &Scalar::one());
        solve(&rows, &rhs, n * n) == Solution::Inconsistent
    };
    let mut s = LinearMap::zero(n, n);
    for a in 0..n {
        for p in 0..n {
            s.set(a, p, x[a * n + p].clone());
        }
    }
    let u = h.unit.as_ref().unwrap();
    let e = h.counit.as_ref().unwrap();
    let fixes_unit = s.apply(u) == *u;
    let preserves_counit = (0..n).all(|p| h.counit_of(&s.column(p)).unwrap() == e[p]);
    let commutes_with_alpha = s.compose(&h.alpha) == h.alpha.compose(&s);
    Ok(AntipodeReport { s, unique, fixes_unit, preserves_counit, commutes_with_alpha })
}

/// Linear system in the entries `S[a][p]` (index `a * n + p`).
pub fn antipode_system(h: &HomBialgebra) -> (Vec<Vector>, Vector) {
    let n = h.dim();
    let u = h.unit.clone().unwrap_or_else(|| zero_vec(n));
    let e = h.counit.clone().unwrap_or_else(|| zero_vec(n));
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in 0..n {
        let mut left = vec![zero_vec(n * n); n];
        let mut right = vec![zero_vec(n * n); n];
        for (p, q, c) in h.delta.image(x) {
            for a in 0..n {
                for (y, k) in h.mu.product(a, *q) {
                    let i = a * n + p;
                    left[*y][i] = &left[*y][i] + &(c * k);
                }
                for (y, k) in h.mu.product(*p, a) {
                    let i = a * n + q;
                    right[*y][i] = &right[*y][i] + &(c * k);
                }
            }
        }
        for y in 0..n {
            let target = &e[x] * &u[y];
            rows.push(left[y].clone());
            rhs.push(target.clone());
            rows.push(right[y].clone());
            rhs.push(target);
        }
    }
    (rows, rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimitiveKind {
    Primitive,
    GeneralizedPrimitive,
}

#[derive(Clone, Debug)]
pub struct PrimitiveReport {
    pub kind: PrimitiveKind,
    pub basis: Vec<Vector>,
    /// `ε(x) = 0` on the subspace, when a counit exists.
    pub counit_vanishes: Option<bool>,
    /// `λ` with `β(1) = λ 1`, and whether `β(x) = λ x` on the subspace.
    pub lambda: Option<Scalar>,
    pub beta_eigen: Option<bool>,
    /// Closure under the commutator bracket.
    pub closed: bool,
    pub alpha_stable: bool,
    /// The induced bracket in the subspace basis, when closed and α-stable.
    pub induced: Option<HomAlgebra>,
    pub hom_lie: Option<LawReport>,
}

fn primitive_equations(h: &HomBialgebra, kind: PrimitiveKind) -> Result<Vec<Vector>> {
    let n = h.dim();
    let mut eqs: Vec<Vector> = Vec::new();
    match kind {
        PrimitiveKind::Primitive => {
            let u = h.unit.as_ref().ok_or(Error::Missing("unit"))?;
            let images: Vec<Tensor2> = (0..n)
                .map(|i| {
                    let e = basis_vec(n, i);
                    h.delta.apply_basis(i).sub(&Tensor2::outer(u, &e)).sub(&Tensor2::outer(&e, u))
                })
                .collect();
            for idx in 0..n * n {
                eqs.push(images.iter().map(|t| t.data[idx].clone()).collect());
            }
        }
        PrimitiveKind::GeneralizedPrimitive => {
            let op = h.delta.opposite();
            let t3: Vec<Tensor3> = (0..n)
                .map(|i| {
                    let d = h.delta.apply_basis(i);
                    h.delta.right(&h.beta, &d).sub(&h.delta.left(&h.beta, &d).permute(Perm::T13))
                })
                .collect();
            for idx in 0..n * n * n {
                eqs.push(t3.iter().map(|t| t.data[idx].clone()).collect());
            }
            let t2: Vec<Tensor2> = (0..n).map(|i| op.apply_basis(i).sub(&h.delta.apply_basis(i))).collect();
            for idx in 0..n * n {
                eqs.push(t2.iter().map(|t| t.data[idx].clone()).collect());
            }
        }
    }
    eqs.retain(|r| !crate::linear::is_zero_vec(r));
    Ok(eqs)
}

pub fn primitive_elements(h: &HomBialgebra, kind: PrimitiveKind) -> Result<PrimitiveReport> {
    let n = h.dim();
    let basis = kernel(&primitive_equations(h, kind)?, n);
    let counit_vanishes = h.counit.as_ref().map(|_| basis.iter().all(|b| h.counit_of(b).unwrap().is_zero()));
    let lambda = h.unit.as_ref().and_then(|u| {
        let bu = h.beta.apply(u);
        let i = u.iter().position(|c| !c.is_zero())?;
        let l = &bu[i] / &u[i];
        (crate::linear::scale_vec(&l, u) == bu).then_some(l)
    });
    let beta_eigen = lambda.as_ref().map(|l| basis.iter().all(|b| h.beta.apply(b) == crate::linear::scale_vec(l, b)));
    let d = basis.len();
    let mut closed = true;
    let mut bracket = BilinearMap::zero(d);
    for i in 0..d {
        for j in 0..d {
            let v = sub_vec(&h.mu.apply(&basis[i], &basis[j]), &h.mu.apply(&basis[j], &basis[i]));
            match coordinates(&basis, &v) {
                Some(c) => {
                    for (k, x) in c.into_iter().enumerate() {
                        bracket.set(i, j, k, x);
                    }
                }
                None => closed = false,
            }
        }
    }
    let mut alpha_cols = Vec::with_capacity(d);
    for b in &basis {
        match coordinates(&basis, &h.alpha.apply(b)) {
            Some(c) => alpha_cols.push(c),
            None => break,
        }
    }
    let alpha_stable = alpha_cols.len() == d;
    let (induced, hom_lie) = if closed && alpha_stable {
        let a = HomAlgebra::new(
            &format!("{}_primitives", h.name),
            h.params.clone(),
            Space::numbered("p", d),
            bracket,
            LinearMap::from_columns(d, alpha_cols),
        )?;
        let r = check_law_with(&a, &AlgebraLaw::HomLie, &CheckOptions::exact())?;
        (Some(a), Some(r))
    } else {
        (None, None)
    };
    Ok(PrimitiveReport { kind, basis, counit_vanishes, lambda, beta_eigen, closed, alpha_stable, induced, hom_lie })
}

#[derive(Clone, Debug)]
pub struct GroupLikeReport {
    pub group_like: bool,
    /// `λ` with `β(x) = λ x`, if `x` is a `β`-eigenvector.
    pub lambda: Option<Scalar>,
    /// Every minor `x_i β(x)_j - x_j β(x)_i` vanishes.
    pub parallel: bool,
    pub counit: Option<Scalar>,
}

pub fn group_like(h: &HomBialgebra, x: &[Scalar]) -> GroupLikeReport {
    let group_like = h.delta.apply(x) == Tensor2::outer(x, x);
    let bx = h.beta.apply(x);
    let lambda = x.iter().position(|c| !c.is_zero()).and_then(|i| {
        let l = &bx[i] / &x[i];
        (crate::linear::scale_vec(&l, x) == bx).then_some(l)
    });
    let parallel = (0..x.len()).all(|i| (i + 1..x.len()).all(|j| (&(&x[i] * &bx[j]) - &(&x[j] * &bx[i])).is_zero()));
    GroupLikeReport { group_like, lambda, parallel, counit: h.counit_of(x) }
}

/// `(V, endo μ, endo, Δ endo, endo)` from a bialgebra with identity twisting maps.
pub fn bialgebra_twist(b: &HomBialgebra, endo: &LinearMap) -> Result<HomBialgebra> {
    if !b.alpha.is_identity() || !b.beta.is_identity() {
        return Err(Error::condition("twist source must have identity twisting maps"));
    }
    let n = b.dim();
    if endo.rows() != n || endo.cols() != n {
        return Err(Error::Structure("endomorphism has wrong size".into()));
    }
    let probe = HomAlgebra { alpha: endo.clone(), ..b.algebra() };
    let m = check_law_with(&probe, &AlgebraLaw::Multiplicative, &CheckOptions::exact())?;
    if !m.holds {
        return Err(Error::precondition("map is not an algebra endomorphism", m));
    }
    let c = comultiplicative(&b.coalgebra(), endo);
    if !c.holds {
        return Err(Error::precondition("map is not a coalgebra endomorphism", c));
    }
    let keep_units = endo.is_identity();
    Ok(HomBialgebra {
        name: b.name.clone(),
        params: b.params.clone(),
        space: b.space.clone(),
        mu: b.mu.post_compose(endo),
        alpha: endo.clone(),
        delta: b.delta.pre_compose(endo),
        beta: endo.clone(),
        unit: if keep_units { b.unit.clone() } else { None },
        counit: if keep_units { b.counit.clone() } else { None },
        kind: if keep_units { b.kind } else { BialgebraKind::Generalized },
        grading: b.grading.clone(),
    })
}

/// Transposes all structure maps; algebra and coalgebra swap roles.
pub fn dual_bialgebra(h: &HomBialgebra) -> HomBialgebra {
    let n = h.dim();
    let mut mu = BilinearMap::zero(n);
    for (k, i, j, x) in h.delta.entries() {
        mu.set(i, j, k, x);
    }
    let mut delta = Comultiplication::zero(n);
    for (i, j, k, c) in h.mu.entries() {
        delta.set(k, i, j, c);
    }
    HomBialgebra {
        name: format!("{}_dual", h.name),
        params: h.params.clone(),
        space: h.space.clone(),
        mu,
        alpha: h.beta.transpose(),
        delta,
        beta: h.alpha.transpose(),
        unit: h.counit.clone(),
        counit: h.unit.clone(),
        kind: h.kind,
        grading: None,
    }
}

fn finish(name: String, params: ParamSet, space: Space, mu: BilinearMap, delta: Comultiplication, unit: Vector, counit: Vector, grading: Option<Grading>) -> HomBialgebra {
    let n = space.dim();
    HomBialgebra {
        name,
        params,
        space,
        mu,
        alpha: LinearMap::identity(n),
        delta,
        beta: LinearMap::identity(n),
        unit: Some(unit),
        counit: Some(counit),
        kind: BialgebraKind::Generalized,
        grading,
    }
}

/// Group algebra of `Z/m` twisted by the group endomorphism `g -> k g`.
pub fn group_algebra(m: usize, k: usize) -> Result<HomBialgebra> {
    if m == 0 {
        return Err(Error::condition("group order must be positive"));
    }
    let space = Space::numbered("g", m);
    let labels: Vec<String> = (0..m).map(|g| format!("g{g}")).collect();
    let space = Space::new(&labels).unwrap_or(space);
    let mut mu = BilinearMap::zero(m);
    let mut delta = Comultiplication::zero(m);
    for g in 0..m {
        for h in 0..m {
            mu.set(g, h, (g + h) % m, Scalar::one());
        }
        delta.set(g, g, g, Scalar::one());
    }
    let base = finish(format!("group_z{m}"), ParamSet::new(), space, mu, delta, basis_vec(m, 0), vec![Scalar::one(); m], None);
    if k % m == 1 % m {
        return Ok(base);
    }
    let endo = LinearMap::from_columns(m, (0..m).map(|g| basis_vec(m, (k * g) % m)).collect());
    let mut out = bialgebra_twist(&base, &endo)?;
    out.name = format!("group_z{m}_pow{k}");
    Ok(out)
}

fn words(v: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..cap {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..v {
                let mut x: Vec<usize> = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn letter(v: usize, l: usize) -> String {
    if v <= 3 {
        ["x", "y", "z"][l].to_string()
    } else {
        format!("x{}", l + 1)
    }
}

/// Free algebra on `v` primitive generators, truncated at word length `cap`,
/// twisted by the substitution `x_i -> Σ_j gens[j][i] x_j` (identity if `None`).
pub fn free_nc(v: usize, cap: usize, gens: Option<&LinearMap>) -> Result<HomBialgebra> {
    if v == 0 {
        return Err(Error::condition("need at least one generator"));
    }
    let ws = words(v, cap);
    let index: BTreeMap<Vec<usize>, usize> = ws.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let labels: Vec<String> = ws
        .iter()
        .map(|w| {
            if w.is_empty() {
                "one".to_string()
            } else if v <= 3 {
                w.iter().map(|&l| letter(v, l)).collect()
            } else {
                w.iter().map(|&l| letter(v, l)).collect::<Vec<_>>().join("_")
            }
        })
        .collect();
    let space = Space::new(&labels).map_err(|e| Error::Structure(e.to_string()))?;
    let n = ws.len();
    let mut mu = BilinearMap::zero(n);
    for (i, a) in ws.iter().enumerate() {
        for (j, b) in ws.iter().enumerate() {
            if a.len() + b.len() <= cap {
                let mut ab = a.clone();
                ab.extend(b);
                mu.set(i, j, index[&ab], Scalar::one());
            }
        }
    }
    let mut delta = Comultiplication::zero(n);
    for (i, w) in ws.iter().enumerate() {
        for mask in 0u32..(1 << w.len()) {
            let (l, r): (Vec<usize>, Vec<usize>) = {
                let mut l = Vec::new();
                let mut r = Vec::new();
                for (p, &x) in w.iter().enumerate() {
                    if mask >> p & 1 == 1 {
                        l.push(x);
                    } else {
                        r.push(x);
                    }
                }
                (l, r)
            };
            delta.add_to(i, index[&l], index[&r], &Scalar::one());
        }
    }
    let mut counit = zero_vec(n);
    counit[0] = Scalar::one();
    let grading = Grading { grades: ws.iter().map(|w| w.len() as i64).collect(), window: None, cap: Some(cap as i64) };
    let base = finish(format!("free_nc_{v}_{cap}"), ParamSet::new(), space, mu, delta, basis_vec(n, 0), counit, Some(grading));
    let Some(g) = gens else { return Ok(base) };
    if g.rows() != v || g.cols() != v {
        return Err(Error::Structure("generator substitution has wrong size".into()));
    }
    // Image of a word: product of generator images, expanded.
    let cols = ws
        .iter()
        .map(|w| {
            let mut acc: BTreeMap<Vec<usize>, Scalar> = BTreeMap::from([(vec![], Scalar::one())]);
            for &l in w {
                let mut next = BTreeMap::new();
                for (pre, c) in &acc {
                    for j in 0..v {
                        let x = g.get(j, l);
                        if x.is_zero() {
                            continue;
                        }
                        let mut p = pre.clone();
                        p.push(j);
                        let e: &mut Scalar = next.entry(p).or_default();
                        *e = &*e + &(c * x);
                    }
                }
                acc = next;
            }
            let mut col = zero_vec(n);
            for (w2, c) in acc {
                col[index[&w2]] = c;
            }
            col
        })
        .collect();
    let endo = LinearMap::from_columns(n, cols);
    if endo.is_identity() {
        return Ok(base);
    }
    bialgebra_twist(&base, &endo)
}

fn monomials(vars: usize, cap: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    fn rec(vars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == vars {
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(vars, left - e, cur, out);
            cur.pop();
        }
    }
    for d in 0..=cap as u32 {
        let mut layer = Vec::new();
        // Exactly degree d.
        let mut all = Vec::new();
        rec(vars, d, &mut Vec::new(), &mut all);
        for m in all {
            if m.iter().sum::<u32>() == d {
                layer.push(m);
            }
        }
        out.extend(layer);
    }
    out
}

/// Coordinate ring of `n × n` matrices, truncated at total degree `cap`, twisted
/// by the linear substitution `X_p -> Σ_q subst[q][p] X_q` on generators `p = i n + j`.
pub fn matrix_coords(n: usize, cap: usize, subst: Option<&LinearMap>) -> Result<HomBialgebra> {
    if n == 0 {
        return Err(Error::condition("matrix size must be positive"));
    }
    let nv = n * n;
    let ms = monomials(nv, cap);
    let index: BTreeMap<Vec<u32>, usize> = ms.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let var_label = |p: usize| format!("X{}{}", p / n + 1, p % n + 1);
    let labels: Vec<String> = ms
        .iter()
        .map(|m| {
            if m.iter().all(|&e| e == 0) {
                return "one".to_string();
            }
            let mut parts = Vec::new();
            for (p, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    parts.push(var_label(p));
                }
            }
            parts.join("_")
        })
        .collect();
    let space = Space::new(&labels).map_err(|e| Error::Structure(e.to_string()))?;
    let dim = ms.len();
    let add = |a: &[u32], b: &[u32]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<u32>>();
    let mut mu = BilinearMap::zero(dim);
    for (i, a) in ms.iter().enumerate() {
        for (j, b) in ms.iter().enumerate() {
            let ab = add(a, b);
            if let Some(&k) = index.get(&ab) {
                mu.set(i, j, k, Scalar::one());
            }
        }
    }
    let unit_exp = vec![0u32; nv];
    let gen = |p: usize| {
        let mut e = vec![0u32; nv];
        e[p] = 1;
        e
    };
    // Δ of a monomial as a map (left exponent, right exponent) -> coefficient.
    let mut delta = Comultiplication::zero(dim);
    for (i, m) in ms.iter().enumerate() {
        let mut acc: BTreeMap<(Vec<u32>, Vec<u32>), Scalar> = BTreeMap::from([((unit_exp.clone(), unit_exp.clone()), Scalar::one())]);
        for (p, &e) in m.iter().enumerate() {
            let (r, c) = (p / n, p % n);
            for _ in 0..e {
                let mut next: BTreeMap<(Vec<u32>, Vec<u32>), Scalar> = BTreeMap::new();
                for ((l, rr), x) in &acc {
                    for k in 0..n {
                        let key = (add(l, &gen(r * n + k)), add(rr, &gen(k * n + c)));
                        let slot = next.entry(key).or_default();
                        *slot = &*slot + x;
                    }
                }
                acc = next;
            }
        }
        for ((l, r), x) in acc {
            delta.add_to(i, index[&l], index[&r], &x);
        }
    }
    let counit: Vector = ms
        .iter()
        .map(|m| {
            let diag_only = m.iter().enumerate().all(|(p, &e)| e == 0 || p / n == p % n);
            if diag_only {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();
    let grading = Grading { grades: ms.iter().map(|m| m.iter().sum::<u32>() as i64).collect(), window: None, cap: Some(cap as i64) };
    let base = finish(format!("matrix_coords_{n}_{cap}"), ParamSet::new(), space, mu, delta, basis_vec(dim, 0), counit, Some(grading));
    let Some(s) = subst else { return Ok(base) };
    if s.rows() != nv || s.cols() != nv {
        return Err(Error::Structure("generator substitution has wrong size".into()));
    }
    let cols = ms
        .iter()
        .map(|m| {
            let mut acc: BTreeMap<Vec<u32>, Scalar> = BTreeMap::from([(unit_exp.clone(), Scalar::one())]);
            for (p, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    let mut next: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
                    for (mono, c) in &acc {
                        for q in 0..nv {
                            let x = s.get(q, p);
                            if !x.is_zero() {
                                let slot = next.entry(add(mono, &gen(q))).or_default();
                                *slot = &*slot + &(c * x);
                            }
                        }
                    }
                    acc = next;
                }
            }
            let mut col = zero_vec(dim);
            for (mono, c) in acc {
                col[index[&mono]] = c;
            }
            col
        })
        .collect();
    let endo = LinearMap::from_columns(dim, cols);
    if endo.is_identity() {
        return Ok(base);
    }
    bialgebra_twist(&base, &endo)
}

/// Linear substitution `X -> P X P⁻¹` on matrix coordinates, as a generator matrix.
pub fn conjugation_subst(p: &LinearMap, p_inv: &LinearMap) -> LinearMap {
    let n = p.rows();
    let mut s = LinearMap::zero(n * n, n * n);
    // X_ij -> Σ_ab P_ia X_ab Pinv_bj
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let c = p.get(i, a) * p_inv.get(b, j);
                    if !c.is_zero() {
                        let cur = s.get(a * n + b, i * n + j).clone();
                        s.set(a * n + b, i * n + j, &cur + &c);
                    }
                }
            }
        }
    }
    s
}

pub fn residual_components(v: &[Scalar], sp: &Space) -> Vec<(String, Scalar)> {
    vector_components(v, sp.labels())
}
