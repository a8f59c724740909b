//! Finite-dimensional linear algebra over [`Scalar`].
//!
//! Vectors are dense. Structure constants are stored sparsely per basis input.
//! A linear map's column `j` is the image of basis vector `j`.

use crate::scalar::Scalar;
use std::fmt;

pub type Vector = Vec<Scalar>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn basis_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

/// `acc += k * x`.
pub fn axpy(acc: &mut [Scalar], k: &Scalar, x: &[Scalar]) {
    if k.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a = &*a + &(k * b);
        }
    }
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_vec(k: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| k * x).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

fn nonzero(a: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    a.iter().enumerate().filter(|(_, c)| !c.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("invalid basis label '{0}'")]
    InvalidLabel(String),
    #[error("duplicate basis label '{0}'")]
    DuplicateLabel(String),
}

/// A vector space with a labeled basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Space {
    labels: Vec<String>,
}

impl Space {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Space, SpaceError> {
        let mut out: Vec<String> = Vec::with_capacity(labels.len());
        for l in labels {
            let l = l.as_ref();
            let ok = l.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(SpaceError::InvalidLabel(l.to_string()));
            }
            if out.iter().any(|o| o == l) {
                return Err(SpaceError::DuplicateLabel(l.to_string()));
            }
            out.push(l.to_string());
        }
        Ok(Space { labels: out })
    }

    /// Basis `prefix1 .. prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Space {
        Space {
            labels: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Basis of `self ⊗ other`, labeled `a_b`, falling back to positional labels on clashes.
    pub fn tensor(&self, other: &Space) -> Space {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}_{b}"));
            }
        }
        Space::new(&labels).unwrap_or_else(|_| Space::numbered("t", self.dim() * other.dim()))
    }

    pub fn tensor_label(&self, idx: &[usize]) -> String {
        idx.iter().map(|&i| self.labels[i].as_str()).collect::<Vec<_>>().join("⊗")
    }
}

/// Matrix of a linear map, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    m: Vec<Scalar>,
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", &self.m[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl LinearMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            m: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, k: Scalar) -> Self {
        let mut a = Self::zero(n, n);
        for i in 0..n {
            a.set(i, i, k.clone());
        }
        a
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let mut a = Self::zero(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            a.set(i, i, x.clone());
        }
        a
    }

    /// From row-major entries.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        LinearMap {
            rows: r,
            cols: c,
            m: rows.into_iter().flatten().collect(),
        }
    }

    /// Column `j` is the image of basis vector `j`.
    pub fn from_columns(rows: usize, cols: Vec<Vector>) -> Self {
        let mut a = Self::zero(rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.into_iter().enumerate() {
                a.set(i, j, x);
            }
        }
        a
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.m[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.m[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.cols);
        let mut out = zero_vec(self.rows);
        for (c, xc) in nonzero(x) {
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o = &*o + &(a * xc);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, other.rows);
        let cols = (0..other.cols).map(|j| self.apply(&other.column(j))).collect();
        LinearMap::from_columns(self.rows, cols)
    }

    pub fn transpose(&self) -> LinearMap {
        let mut t = LinearMap::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| if r == c { self.get(r, c).is_one() } else { self.get(r, c).is_zero() }))
    }

    pub fn power(&self, k: usize) -> LinearMap {
        let mut acc = LinearMap::identity(self.rows);
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Kronecker product; basis of the product is `(i, j) -> i * dim_b + j`.
    pub fn kron(a: &LinearMap, b: &LinearMap) -> LinearMap {
        let mut out = LinearMap::zero(a.rows * b.rows, a.cols * b.cols);
        for ar in 0..a.rows {
            for ac in 0..a.cols {
                let x = a.get(ar, ac);
                if x.is_zero() {
                    continue;
                }
                for br in 0..b.rows {
                    for bc in 0..b.cols {
                        let y = b.get(br, bc);
                        if !y.is_zero() {
                            out.set(ar * b.rows + br, ac * b.cols + bc, x * y);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, o: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            m: sub_vec(&self.m, &o.m),
        }
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.m
    }

    pub fn map_entries(&self, f: impl Fn(&Scalar) -> Scalar) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            m: self.m.iter().map(f).collect(),
        }
    }
}

/// Structure constants of a bilinear map `V ⊗ V -> V`.
#[derive(Clone, PartialEq, Eq)]
pub struct BilinearMap {
    n: usize,
    table: Vec<Vec<(usize, Scalar)>>,
}

impl fmt::Debug for BilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries()).finish()
    }
}

impl BilinearMap {
    pub fn zero(n: usize) -> Self {
        BilinearMap {
            n,
            table: vec![Vec::new(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Sets the coefficient of `e_k` in `e_i e_j`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let row = &mut self.table[i * self.n + j];
        match row.binary_search_by_key(&k, |(x, _)| *x) {
            Ok(p) if c.is_zero() => {
                row.remove(p);
            }
            Ok(p) => row[p].1 = c,
            Err(_) if c.is_zero() => {}
            Err(p) => row.insert(p, (k, c)),
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, c: &Scalar) {
        let cur = self.get(i, j, k);
        self.set(i, j, k, &cur + c);
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        let row = &self.table[i * self.n + j];
        row.binary_search_by_key(&k, |(x, _)| *x)
            .map(|p| row[p].1.clone())
            .unwrap_or_default()
    }

    /// Sparse product of two basis vectors.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.n + j]
    }

    pub fn product_vec(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vec(self.n);
        for (k, c) in self.product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.n);
        for (i, xi) in nonzero(x) {
            for (j, yj) in nonzero(y) {
                let row = self.product(i, j);
                if row.is_empty() {
                    continue;
                }
                let k = xi * yj;
                for (idx, c) in row {
                    out[*idx] = &out[*idx] + &(&k * c);
                }
            }
        }
        out
    }

    /// `(i, j, k, c)` with `c` the coefficient of `e_k` in `e_i e_j`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for (k, c) in self.product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// `(x, y) -> m(y, x)`.
    pub fn opposite(&self) -> BilinearMap {
        let mut o = BilinearMap::zero(self.n);
        for (i, j, k, c) in self.entries() {
            o.set(j, i, k, c);
        }
        o
    }

    /// `f ∘ m`.
    pub fn post_compose(&self, f: &LinearMap) -> BilinearMap {
        let mut o = BilinearMap::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.product(i, j).is_empty() {
                    continue;
                }
                let v = f.apply(&self.product_vec(i, j));
                for (k, c) in v.into_iter().enumerate() {
                    o.set(i, j, k, c);
                }
            }
        }
        o
    }

    pub fn sub(&self, o: &BilinearMap) -> BilinearMap {
        let mut r = self.clone();
        for (i, j, k, c) in o.entries() {
            r.add_to(i, j, k, &-c);
        }
        r
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> BilinearMap {
        let mut r = BilinearMap::zero(self.n);
        for (i, j, k, c) in self.entries() {
            r.set(i, j, k, f(&c));
        }
        r
    }
}

/// Dense element of `V ⊗ V`, index `a * n + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2 {
    pub n: usize,
    pub data: Vector,
}

impl Tensor2 {
    pub fn zero(n: usize) -> Self {
        Tensor2 { n, data: zero_vec(n * n) }
    }

    pub fn get(&self, a: usize, b: usize) -> &Scalar {
        &self.data[a * self.n + b]
    }

    pub fn add_at(&mut self, a: usize, b: usize, c: &Scalar) {
        let i = a * self.n + b;
        self.data[i] = &self.data[i] + c;
    }

    /// `x ⊗ y`.
    pub fn outer(x: &[Scalar], y: &[Scalar]) -> Self {
        let n = x.len();
        let mut t = Tensor2::zero(n);
        for (a, xa) in nonzero(x) {
            for (b, yb) in nonzero(y) {
                t.data[a * n + b] = xa * yb;
            }
        }
        t
    }

    pub fn flip(&self) -> Self {
        let mut t = Tensor2::zero(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                t.data[b * self.n + a] = self.get(a, b).clone();
            }
        }
        t
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let n = self.n;
        nonzero(&self.data).map(move |(i, c)| (i / n, i % n, c))
    }

    pub fn sub(&self, o: &Tensor2) -> Tensor2 {
        Tensor2 {
            n: self.n,
            data: sub_vec(&self.data, &o.data),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }
}

/// Dense element of `V ⊗ V ⊗ V`, index `(a * n + b) * n + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    pub n: usize,
    pub data: Vector,
}

impl Tensor3 {
    pub fn zero(n: usize) -> Self {
        Tensor3 { n, data: zero_vec(n * n * n) }
    }

    pub fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.n + b) * self.n + c
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.data[self.idx(a, b, c)]
    }

    pub fn add_at(&mut self, a: usize, b: usize, c: usize, v: &Scalar) {
        let i = self.idx(a, b, c);
        self.data[i] = &self.data[i] + v;
    }

    pub fn unflatten(&self, i: usize) -> [usize; 3] {
        let n = self.n;
        [i / (n * n), (i / n) % n, i % n]
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> + '_ {
        nonzero(&self.data).map(move |(i, c)| (self.unflatten(i), c))
    }

    pub fn add(&self, o: &Tensor3) -> Tensor3 {
        Tensor3 {
            n: self.n,
            data: add_vec(&self.data, &o.data),
        }
    }

    pub fn sub(&self, o: &Tensor3) -> Tensor3 {
        Tensor3 {
            n: self.n,
            data: sub_vec(&self.data, &o.data),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Tensor3 {
        Tensor3 {
            n: self.n,
            data: scale_vec(k, &self.data),
        }
    }

    /// The S3 action: the factor in slot `r` moves to slot `σ(r)`.
    pub fn permute(&self, s: Perm) -> Tensor3 {
        let mut out = Tensor3::zero(self.n);
        for (i, c) in self.nonzero() {
            let mut o = [0; 3];
            for r in 0..3 {
                o[s.0[r] as usize] = i[r];
            }
            let k = out.idx(o[0], o[1], o[2]);
            out.data[k] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }
}

/// Permutation of three tensor slots, `0`-based images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perm(pub [u8; 3]);

impl Perm {
    pub const ID: Perm = Perm([0, 1, 2]);
    pub const T12: Perm = Perm([1, 0, 2]);
    pub const T23: Perm = Perm([0, 2, 1]);
    pub const T13: Perm = Perm([2, 1, 0]);
    /// Cycle 2 -> 1 -> 3 -> 2.
    pub const C213: Perm = Perm([2, 0, 1]);
    /// Cycle 2 -> 3 -> 1 -> 2.
    pub const C231: Perm = Perm([1, 2, 0]);

    pub const ALL: [Perm; 6] = [Perm::ID, Perm::T12, Perm::T23, Perm::T13, Perm::C213, Perm::C231];

    pub fn sign(self) -> i64 {
        let p = self.0;
        let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`.
    pub fn compose(self, other: Perm) -> Perm {
        Perm([0, 1, 2].map(|i| self.0[other.0[i] as usize]))
    }

    pub fn inverse(self) -> Perm {
        let mut r = [0u8; 3];
        for i in 0..3 {
            r[self.0[i] as usize] = i as u8;
        }
        Perm(r)
    }

    pub fn name(self) -> &'static str {
        match self.0 {
            [0, 1, 2] => "id",
            [1, 0, 2] => "(12)",
            [0, 2, 1] => "(23)",
            [2, 1, 0] => "(13)",
            [2, 0, 1] => "(213)",
            _ => "(231)",
        }
    }
}

/// The six subgroups of S3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subgroup {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl Subgroup {
    pub const ALL: [Subgroup; 6] = [Subgroup::G1, Subgroup::G2, Subgroup::G3, Subgroup::G4, Subgroup::G5, Subgroup::G6];

    pub fn elements(self) -> &'static [Perm] {
        match self {
            Subgroup::G1 => &[Perm::ID],
            Subgroup::G2 => &[Perm::ID, Perm::T12],
            Subgroup::G3 => &[Perm::ID, Perm::T23],
            Subgroup::G4 => &[Perm::ID, Perm::T13],
            Subgroup::G5 => &[Perm::ID, Perm::C213, Perm::C231],
            Subgroup::G6 => &Perm::ALL,
        }
    }

    pub fn index(self) -> usize {
        Subgroup::ALL.iter().position(|&g| g == self).unwrap() + 1
    }

    pub fn from_index(i: usize) -> Option<Subgroup> {
        Subgroup::ALL.get(i.checked_sub(1)?).copied()
    }
}

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vector),
    /// A particular solution plus a kernel basis.
    Family(Vector, Vec<Vector>),
    Inconsistent,
}

/// Reduced row echelon form in place; returns pivot columns.
/// Rational pivots are preferred to keep expressions small.
pub fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= rows.len() {
            break;
        }
        let cand = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (rows[i][c].as_rational().is_none(), i));
        let Some(p) = cand else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let pivot_row: Vector = rows[r].iter().map(|x| x * &inv).collect();
        rows[r] = pivot_row.clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let row = &mut rows[i];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.retain(|row| !is_zero_vec(row));
    pivots
}

/// Solves `a x = b` exactly.
pub fn solve(a: &[Vector], b: &[Scalar], ncols: usize) -> Solution {
    let mut rows: Vec<Vector> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return Solution::Inconsistent;
    }
    let mut x = zero_vec(ncols);
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    let ker = kernel_from_rref(&rows, &pivots, ncols);
    if ker.is_empty() {
        Solution::Unique(x)
    } else {
        Solution::Family(x, ker)
    }
}

fn kernel_from_rref(rows: &[Vector], pivots: &[usize], ncols: usize) -> Vec<Vector> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vec(ncols);
            v[f] = Scalar::one();
            for (row, &p) in rows.iter().zip(pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Basis of `{x : a x = 0}`.
pub fn kernel(a: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut rows = a.to_vec();
    let pivots = rref(&mut rows, ncols);
    kernel_from_rref(&rows, &pivots, ncols)
}

/// Coordinates of `v` in the span of `basis`, if it lies there.
pub fn coordinates(basis: &[Vector], v: &[Scalar]) -> Option<Vector> {
    let n = v.len();
    let a: Vec<Vector> = (0..n).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
    match solve(&a, v, basis.len()) {
        Solution::Unique(x) => Some(x),
        Solution::Family(x, _) => Some(x),
        Solution::Inconsistent => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_matches_slot_rule() {
        // (231) sends x1⊗x2⊗x3 to x3⊗x1⊗x2.
        let mut t = Tensor3::zero(3);
        t.add_at(0, 1, 2, &Scalar::one());
        let p = t.permute(Perm::C231);
        assert!(p.get(2, 0, 1).is_one());
        assert_eq!(Perm::C213.inverse(), Perm::C231);
    }

    #[test]
    fn action_is_a_homomorphism() {
        let mut t = Tensor3::zero(2);
        for (i, x) in t.data.iter_mut().enumerate() {
            *x = Scalar::int(i as i64 + 1);
        }
        for s in Perm::ALL {
            for u in Perm::ALL {
                assert_eq!(t.permute(u).permute(s), t.permute(s.compose(u)));
            }
        }
    }

    #[test]
    fn signs() {
        assert_eq!(Perm::ALL.map(Perm::sign), [1, -1, -1, -1, 1, 1]);
    }

    #[test]
    fn solver_classifies() {
        let a = vec![vec![Scalar::int(1), Scalar::int(1)], vec![Scalar::int(2), Scalar::int(2)]];
        assert!(matches!(solve(&a, &[Scalar::int(1), Scalar::int(2)], 2), Solution::Family(_, ref k) if k.len() == 1));
        assert_eq!(solve(&a, &[Scalar::int(1), Scalar::int(3)], 2), Solution::Inconsistent);
        let b = vec![vec![Scalar::int(1), Scalar::int(1)], vec![Scalar::int(1), Scalar::int(-1)]];
        assert_eq!(solve(&b, &[Scalar::int(2), Scalar::int(0)], 2), Solution::Unique(vec![Scalar::int(1), Scalar::int(1)]));
    }
}
