//! Seeded generators of small structures with known properties.
//!
//! Each generator builds its output so the advertised law holds by
//! construction; callers are expected to verify independently.

use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::HomAlgebra;
use crate::coalgebra::{Comultiplication, HomCoalgebra};
use crate::linear::{basis_vec, zero_vec, BilinearMap, LinearMap, Space, Subgroup};
use crate::scalar::{ParamSet, Scalar};

pub type Rng = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(rng: &mut Rng, range: i64) -> Scalar {
    Scalar::int(rng.gen_range(-range..=range))
}

fn nonzero(rng: &mut Rng, range: i64) -> Scalar {
    loop {
        let v = rng.gen_range(-range..=range);
        if v != 0 {
            return Scalar::int(v);
        }
    }
}

/// Integer matrix; each entry is nonzero with probability `density`.
pub fn random_matrix(rng: &mut Rng, n: usize, range: i64, density: f64) -> LinearMap {
    let mut m = LinearMap::zero(n, n);
    for r in 0..n {
        for c in 0..n {
            if rng.gen_bool(density) {
                m.set(r, c, small(rng, range));
            }
        }
    }
    m
}

/// An integer matrix with integer inverse, as `(P, P⁻¹)`.
pub fn unimodular(rng: &mut Rng, n: usize) -> (LinearMap, LinearMap) {
    let mut p = LinearMap::identity(n);
    let mut pinv = LinearMap::identity(n);
    if n < 2 {
        return (p, pinv);
    }
    for _ in 0..n + 2 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = nonzero(rng, 2);
        let mut e = LinearMap::identity(n);
        e.set(i, j, c.clone());
        let mut einv = LinearMap::identity(n);
        einv.set(i, j, -c);
        p = e.compose(&p);
        pinv = pinv.compose(&einv);
    }
    (p, pinv)
}

fn algebra(name: &str, mu: BilinearMap, alpha: LinearMap) -> HomAlgebra {
    let n = mu.dim();
    HomAlgebra::new(name, ParamSet::new(), Space::numbered("e", n), mu, alpha).expect("dimensions agree")
}

/// Transports `(μ, α)` along `P`: `μ'(x, y) = P μ(P⁻¹x, P⁻¹y)`, `α' = P α P⁻¹`.
pub fn change_basis(a: &HomAlgebra, p: &LinearMap, pinv: &LinearMap) -> HomAlgebra {
    let n = a.dim();
    let cols: Vec<_> = (0..n).map(|i| pinv.column(i)).collect();
    let mut mu = BilinearMap::zero(n);
    for i in 0..n {
        for j in 0..n {
            let v = p.apply(&a.mu.apply(&cols[i], &cols[j]));
            for (k, c) in v.into_iter().enumerate() {
                mu.set(i, j, k, c);
            }
        }
    }
    let mut out = algebra(&a.name, mu, p.compose(&a.alpha).compose(pinv));
    out.unit = a.unit.as_ref().map(|u| p.apply(u));
    out
}

/// `(endo μ, endo)`; a law holding for `(μ, id)` survives when `endo` is multiplicative.
pub fn twist(a: &HomAlgebra, endo: &LinearMap) -> HomAlgebra {
    algebra(&format!("{}_tw", a.name), a.mu.post_compose(endo), endo.compose(&a.alpha))
}

/// `(λμ, λα)`: every associator scales by `λ³`.
pub fn rescale(a: &HomAlgebra, l: &Scalar) -> HomAlgebra {
    algebra(&a.name, a.mu.map_coeffs(|c| l * c), a.alpha.map_entries(|c| l * c))
}

pub fn opposite(a: &HomAlgebra) -> HomAlgebra {
    algebra(&format!("{}_op", a.name), a.mu.opposite(), a.alpha.clone())
}

pub fn direct_sum(a: &HomAlgebra, b: &HomAlgebra) -> HomAlgebra {
    let (na, nb) = (a.dim(), b.dim());
    let mut mu = BilinearMap::zero(na + nb);
    for (i, j, k, c) in a.mu.entries() {
        mu.set(i, j, k, c);
    }
    for (i, j, k, c) in b.mu.entries() {
        mu.set(na + i, na + j, na + k, c);
    }
    algebra(&format!("{}+{}", a.name, b.name), mu, block(&a.alpha, &b.alpha))
}

fn block(a: &LinearMap, b: &LinearMap) -> LinearMap {
    let (na, nb) = (a.rows(), b.rows());
    let mut m = LinearMap::zero(na + nb, na + nb);
    for r in 0..na {
        for c in 0..na {
            m.set(r, c, a.get(r, c).clone());
        }
    }
    for r in 0..nb {
        for c in 0..nb {
            m.set(na + r, na + c, b.get(r, c).clone());
        }
    }
    m
}

/// `Q[t]/(t^k)` with `t^i t^j = w(j) t^(i+j)`; basis `t^0..t^(k-1)`.
fn truncated_poly(k: usize, weight: impl Fn(usize, usize) -> i64) -> BilinearMap {
    let mut mu = BilinearMap::zero(k);
    for i in 0..k {
        for j in 0..k - i {
            let w = weight(i, j);
            if w != 0 {
                mu.set(i, j, i + j, Scalar::int(w));
            }
        }
    }
    mu
}

/// Algebra endomorphism of `Q[t]/(t^k)` sending `t` to `p(t)` with `p(0) = 0`.
fn substitution(rng: &mut Rng, k: usize) -> LinearMap {
    let mut p = zero_vec(k);
    for c in p.iter_mut().skip(1) {
        *c = small(rng, 2);
    }
    let mut m = LinearMap::zero(k, k);
    let mut pow = basis_vec(k, 0);
    for i in 0..k {
        for (r, c) in pow.iter().enumerate() {
            m.set(r, i, c.clone());
        }
        let mut next = zero_vec(k);
        for (a, x) in pow.iter().enumerate() {
            for (b, y) in p.iter().enumerate() {
                if a + b < k && !x.is_zero() && !y.is_zero() {
                    next[a + b] = &next[a + b] + &(x * y);
                }
            }
        }
        pow = next;
    }
    m
}

fn mat2_mul(a: &[[Scalar; 2]; 2], b: &[[Scalar; 2]; 2]) -> [[Scalar; 2]; 2] {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Upper triangular 2x2 matrices on `E11, E12, E22`, with an endomorphism.
fn upper_triangular(rng: &mut Rng) -> (HomAlgebra, LinearMap) {
    let idx = [(0, 0), (0, 1), (1, 1)];
    let mut mu = BilinearMap::zero(3);
    for (a, &(i, j)) in idx.iter().enumerate() {
        for (b, &(k, l)) in idx.iter().enumerate() {
            if j == k {
                let c = idx.iter().position(|&x| x == (i, l)).unwrap();
                mu.set(a, b, c, Scalar::one());
            }
        }
    }
    let a = algebra("upper_triangular", mu, LinearMap::identity(3));
    let endo = match rng.gen_range(0..3) {
        0 => LinearMap::diagonal(&[Scalar::one(), Scalar::zero(), Scalar::one()]),
        1 => LinearMap::zero(3, 3),
        _ => {
            let (b, d) = (small(rng, 2), nonzero(rng, 2));
            let p = [[Scalar::one(), b.clone()], [Scalar::zero(), d.clone()]];
            let pinv = [[Scalar::one(), -(&b / &d)], [Scalar::zero(), Scalar::one() / d]];
            let mut m = LinearMap::zero(3, 3);
            for (col, &(i, j)) in idx.iter().enumerate() {
                let mut e: [[Scalar; 2]; 2] = Default::default();
                e[i][j] = Scalar::one();
                let c = mat2_mul(&mat2_mul(&p, &e), &pinv);
                for (row, &(r, s)) in idx.iter().enumerate() {
                    m.set(row, col, c[r][s].clone());
                }
            }
            m
        }
    };
    (a, endo)
}

/// `Q^n` with orthogonal idempotents; `e_j ↦ e_(f(j))`-style endomorphisms.
fn diagonal(rng: &mut Rng, n: usize) -> (HomAlgebra, LinearMap) {
    let mut mu = BilinearMap::zero(n);
    for i in 0..n {
        mu.set(i, i, i, Scalar::one());
    }
    let mut endo = LinearMap::zero(n, n);
    for j in 0..n {
        if rng.gen_bool(0.75) {
            endo.set(j, rng.gen_range(0..n), Scalar::one());
        }
    }
    (algebra("diagonal", mu, LinearMap::identity(n)), endo)
}

fn cyclic_group(rng: &mut Rng, m: usize) -> (HomAlgebra, LinearMap) {
    let mut mu = BilinearMap::zero(m);
    for g in 0..m {
        for h in 0..m {
            mu.set(g, h, (g + h) % m, Scalar::one());
        }
    }
    let k = rng.gen_range(0..m);
    let endo = LinearMap::from_columns(m, (0..m).map(|g| basis_vec(m, (k * g) % m)).collect());
    (algebra("cyclic_group", mu, LinearMap::identity(m)), endo)
}

fn polynomial(rng: &mut Rng, k: usize) -> (HomAlgebra, LinearMap) {
    let a = algebra("truncated_poly", truncated_poly(k, |_, _| 1), LinearMap::identity(k));
    let endo = substitution(rng, k);
    (a, endo)
}

fn assoc_atom(rng: &mut Rng, max_dim: usize) -> (HomAlgebra, LinearMap) {
    loop {
        let pick = rng.gen_range(0..4);
        let n = rng.gen_range(1..=max_dim.min(4));
        let out = match pick {
            0 => polynomial(rng, n),
            1 if max_dim >= 3 => upper_triangular(rng),
            2 => diagonal(rng, n),
            3 => cyclic_group(rng, n),
            _ => continue,
        };
        return out;
    }
}

/// An associative algebra (`α = id`) of dimension `≤ max_dim` with an algebra
/// endomorphism, in a random basis.
pub fn associative_with_endo(rng: &mut Rng, max_dim: usize) -> (HomAlgebra, LinearMap) {
    let (mut a, mut e) = assoc_atom(rng, max_dim);
    if a.dim() < max_dim && rng.gen_bool(0.3) {
        let (b, f) = assoc_atom(rng, max_dim - a.dim());
        a = direct_sum(&a, &b);
        e = block(&e, &f);
    }
    if rng.gen_bool(0.1) {
        e = LinearMap::zero(a.dim(), a.dim());
    }
    let (p, pinv) = unimodular(rng, a.dim());
    let moved = change_basis(&a, &p, &pinv);
    (moved, p.compose(&e).compose(&pinv))
}

/// A coassociative coalgebra (`β = id`) with a coalgebra endomorphism, by transposition.
pub fn coassociative_with_endo(rng: &mut Rng, max_dim: usize) -> (HomCoalgebra, LinearMap) {
    let (a, e) = associative_with_endo(rng, max_dim);
    (crate::coalgebra::dualize(&a), e.transpose())
}

/// Arbitrary `(Δ, β)` with small integer constants; one in five is cocommutative.
pub fn hom_coalgebra(rng: &mut Rng, max_dim: usize) -> HomCoalgebra {
    let n = rng.gen_range(1..=max_dim);
    let cocommutative = rng.gen_bool(0.2);
    let mut delta = Comultiplication::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if cocommutative && k < j {
                    continue;
                }
                if rng.gen_bool(0.35) {
                    let c = small(rng, 3);
                    delta.set(i, j, k, c.clone());
                    if cocommutative {
                        delta.set(i, k, j, c);
                    }
                }
            }
        }
    }
    let beta = random_matrix(rng, n, 2, 0.5);
    let name = if cocommutative { "random_cocommutative" } else { "random" };
    HomCoalgebra::new(name, ParamSet::new(), Space::numbered("e", n), delta, beta).expect("dimensions agree")
}

/// `x ∘ y = x D(y)` on `Q[t]/(t^k)`, `D = t d/dt`: left-symmetric.
fn left_symmetric(k: usize) -> HomAlgebra {
    algebra("left_symmetric", truncated_poly(k, |_, j| j as i64), LinearMap::identity(k))
}

/// `x ∘ y = D(x) y`: right-symmetric.
fn right_symmetric(k: usize) -> HomAlgebra {
    algebra("right_symmetric", truncated_poly(k, |i, _| i as i64), LinearMap::identity(k))
}

/// Grade scaling `t^i ↦ c^i t^i` commutes with `D` and with the product.
fn grade_scaling(rng: &mut Rng, k: usize) -> LinearMap {
    let c = small(rng, 2);
    LinearMap::diagonal(&(0..k).map(|i| c.pow(i as i64).expect("integer power")).collect::<Vec<_>>())
}

/// Two-dimensional seed whose associator is invariant under exchanging the outer slots.
fn outer_symmetric() -> HomAlgebra {
    let mut mu = BilinearMap::zero(2);
    mu.set(0, 0, 0, Scalar::int(-1));
    mu.set(0, 0, 1, Scalar::int(-1));
    mu.set(0, 1, 1, Scalar::int(-1));
    algebra("outer_symmetric", mu, LinearMap::identity(2))
}

fn sl2(rng: &mut Rng) -> (HomAlgebra, LinearMap) {
    // basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
    let mut mu = BilinearMap::zero(3);
    let mut put = |i: usize, j: usize, k: usize, c: i64| {
        mu.set(i, j, k, Scalar::int(c));
        mu.set(j, i, k, Scalar::int(-c));
    };
    put(0, 1, 2, 1);
    put(2, 0, 0, 2);
    put(2, 1, 1, -2);
    let c = nonzero(rng, 3);
    let endo = LinearMap::diagonal(&[c.clone(), Scalar::one() / c, Scalar::one()]);
    (algebra("sl2", mu, LinearMap::identity(3)), endo)
}

fn heisenberg(rng: &mut Rng) -> (HomAlgebra, LinearMap) {
    let mut mu = BilinearMap::zero(3);
    mu.set(0, 1, 2, Scalar::one());
    mu.set(1, 0, 2, Scalar::int(-1));
    let m: Vec<Scalar> = (0..4).map(|_| small(rng, 2)).collect();
    let det = &(&m[0] * &m[3]) - &(&m[1] * &m[2]);
    let endo = LinearMap::from_rows(vec![
        vec![m[0].clone(), m[1].clone(), Scalar::zero()],
        vec![m[2].clone(), m[3].clone(), Scalar::zero()],
        vec![small(rng, 2), small(rng, 2), det],
    ]);
    (algebra("heisenberg", mu, LinearMap::identity(3)), endo)
}

fn lie(rng: &mut Rng) -> HomAlgebra {
    let (a, e) = if rng.gen_bool(0.5) { sl2(rng) } else { heisenberg(rng) };
    if rng.gen_bool(0.7) {
        twist(&a, &e)
    } else {
        a
    }
}

fn vary(rng: &mut Rng, a: HomAlgebra) -> HomAlgebra {
    let a = if rng.gen_bool(0.5) { rescale(&a, &nonzero(rng, 3)) } else { a };
    let (p, pinv) = unimodular(rng, a.dim());
    change_basis(&a, &p, &pinv)
}

fn symmetric_family(rng: &mut Rng, right: bool) -> HomAlgebra {
    let k = rng.gen_range(2..=4);
    let flip = rng.gen_bool(0.3);
    let base = if right != flip { right_symmetric(k) } else { left_symmetric(k) };
    let base = if rng.gen_bool(0.6) { twist(&base, &grade_scaling(rng, k)) } else { base };
    if flip {
        opposite(&base)
    } else {
        base
    }
}

/// A Hom-algebra satisfying the `G`-Hom-associativity condition by construction.
pub fn g_hom_associative(rng: &mut Rng, g: Subgroup) -> HomAlgebra {
    let a = match g {
        Subgroup::G1 => {
            let (a, e) = associative_with_endo(rng, 4);
            twist(&a, &e)
        }
        Subgroup::G2 => symmetric_family(rng, false),
        Subgroup::G3 => symmetric_family(rng, true),
        Subgroup::G4 => {
            let seed = outer_symmetric();
            let seed = if rng.gen_bool(0.3) { opposite(&seed) } else { seed };
            if rng.gen_bool(0.4) {
                let (b, e) = assoc_atom(rng, 2);
                direct_sum(&seed, &twist(&b, &e))
            } else {
                seed
            }
        }
        Subgroup::G5 => lie(rng),
        Subgroup::G6 => match rng.gen_range(0..3) {
            0 => lie(rng),
            1 => direct_sum(&left_symmetric(2), &right_symmetric(2)),
            _ => direct_sum(&outer_symmetric(), &left_symmetric(2)),
        },
    };
    let mut a = vary(rng, a);
    a.name = format!("random_g{}", g.index());
    a
}

/// A skew-symmetric bracket with small integer constants; usually not Lie.
pub fn skew_bracket(rng: &mut Rng, max_dim: usize) -> HomAlgebra {
    let n = rng.gen_range(2..=max_dim.max(2));
    let mut mu = BilinearMap::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                if rng.gen_bool(0.4) {
                    let c = small(rng, 2);
                    mu.set(i, j, k, c.clone());
                    mu.set(j, i, k, -c);
                }
            }
        }
    }
    let alpha = if rng.gen_bool(0.5) { LinearMap::identity(n) } else { random_matrix(rng, n, 2, 0.4) };
    algebra("random_skew", mu, alpha)
}

/// Arbitrary `(μ, α)`; almost never satisfies any law.
pub fn arbitrary_algebra(rng: &mut Rng, max_dim: usize) -> HomAlgebra {
    let n = rng.gen_range(1..=max_dim);
    let mut mu = BilinearMap::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if rng.gen_bool(0.3) {
                    mu.set(i, j, k, small(rng, 2));
                }
            }
        }
    }
    let alpha = random_matrix(rng, n, 2, 0.5);
    algebra("arbitrary", mu, alpha)
}

/// A random element of a finite list.
pub fn pick<'a, T>(rng: &mut Rng, xs: &'a [T]) -> &'a T {
    xs.choose(rng).expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_law_with, AlgebraLaw};
    use crate::law::CheckOptions;

    #[test]
    fn unimodular_inverts() {
        let mut r = rng(7);
        for n in 1..=4 {
            let (p, q) = unimodular(&mut r, n);
            assert!(p.compose(&q).is_identity());
        }
    }

    #[test]
    fn endomorphisms_are_multiplicative() {
        let mut r = rng(11);
        for _ in 0..40 {
            let (a, e) = associative_with_endo(&mut r, 4);
            let probe = HomAlgebra { alpha: e, ..a.clone() };
            assert!(check_law_with(&a, &AlgebraLaw::HomAssociative, &CheckOptions::exact()).unwrap().holds);
            assert!(check_law_with(&probe, &AlgebraLaw::Multiplicative, &CheckOptions::exact()).unwrap().holds, "{}", a.name);
        }
    }

    #[test]
    fn g_classes_hold() {
        let mut r = rng(3);
        for g in Subgroup::ALL {
            for _ in 0..10 {
                let a = g_hom_associative(&mut r, g);
                let rep = check_law_with(&a, &AlgebraLaw::GHomAssociative(g), &CheckOptions::exact()).unwrap();
                assert!(rep.holds, "{} {:?}", a.name, rep.witnesses.first());
            }
        }
    }
}
