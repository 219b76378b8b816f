//! Dense structure-constant containers for bi- and trilinear maps.

use crate::error::{Error, Result};
use crate::linalg::{axpy, zero_vec, Matrix, Vector};
use crate::scalar::Scalar;

fn check_len(what: &str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimMismatch(format!(
            "{what}: expected dimension {expected}, got {got}"
        )))
    }
}

/// Trilinear product on a based space: `row(i, j, k)` is the coordinate
/// vector of `p(e_i, e_j, e_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriTensor<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> TriTensor<S> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![S::zero(); dim.pow(4)],
        }
    }

    /// Builds the tensor from the images of basis triples.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Vector<S>) -> Self {
        let mut data = Vec::with_capacity(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = f(i, j, k);
                    assert_eq!(v.len(), dim, "image has wrong length");
                    data.extend(v);
                }
            }
        }
        Self { dim, data }
    }

    /// Fully skew tensor generated by `p(e_i, e_j, e_k) = v` for the given
    /// entries, extended by the sign of each permutation.
    pub fn skew_from(dim: usize, entries: &[([usize; 3], Vector<S>)]) -> Self {
        let mut t = Self::zeros(dim);
        for (idx, v) in entries {
            for (perm, sign) in PERMS3 {
                let a = [idx[perm[0]], idx[perm[1]], idx[perm[2]]];
                let row = t.row_mut(a[0], a[1], a[2]);
                for (r, x) in row.iter_mut().zip(v) {
                    *r = if sign > 0 { x.clone() } else { -x.clone() };
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        assert!(i < self.dim && j < self.dim && k < self.dim, "tensor index out of range");
        ((i * self.dim + j) * self.dim + k) * self.dim
    }

    pub fn row(&self, i: usize, j: usize, k: usize) -> &[S] {
        let o = self.offset(i, j, k);
        &self.data[o..o + self.dim]
    }

    pub fn row_mut(&mut self, i: usize, j: usize, k: usize) -> &mut [S] {
        let o = self.offset(i, j, k);
        &mut self.data[o..o + self.dim]
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &S {
        &self.row(i, j, k)[l]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: S) {
        self.row_mut(i, j, k)[l] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Nonzero entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = ([usize; 4], &S)> + '_ {
        let d = self.dim;
        self.data.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(n, x)| {
            ([n / (d * d * d), (n / (d * d)) % d, (n / d) % d, n % d], x)
        })
    }

    /// Trilinear extension to coordinate vectors, skipping zero coordinates.
    pub fn eval(&self, x: &[S], y: &[S], z: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi.clone() * yj.clone();
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    axpy(&mut out, &(xy.clone() * zk.clone()), self.row(i, j, k));
                }
            }
        }
        out
    }

    pub fn try_eval(&self, x: &[S], y: &[S], z: &[S]) -> Result<Vector<S>> {
        check_len("first argument", self.dim, x.len())?;
        check_len("second argument", self.dim, y.len())?;
        check_len("third argument", self.dim, z.len())?;
        Ok(self.eval(x, y, z))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TriTensor<T> {
        TriTensor {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    /// `(x0, x1, x2) ↦ p(x_σ0, x_σ1, x_σ2)`.
    pub fn permute(&self, sigma: [usize; 3]) -> Self {
        Self::from_fn(self.dim, |i, j, k| {
            let a = [i, j, k];
            self.row(a[sigma[0]], a[sigma[1]], a[sigma[2]]).to_vec()
        })
    }

    /// `p(x, y, z) + p(y, z, x) + p(z, x, y)`.
    pub fn cyclic_sum(&self) -> Self {
        self.add(&self.permute([1, 2, 0])).add(&self.permute([2, 0, 1]))
    }

    /// Applies `m` to every output.
    pub fn post(&self, m: &Matrix<S>) -> Self {
        Self::from_fn(self.dim, |i, j, k| m.apply(self.row(i, j, k)))
    }

    /// Whether swapping slots 0 and 1 negates the product.
    pub fn is_skew12(&self) -> bool {
        *self == self.permute([1, 0, 2]).scale(&-S::one())
    }

    pub fn is_fully_skew(&self) -> bool {
        self.is_skew12() && *self == self.permute([0, 2, 1]).scale(&-S::one())
    }
}

const PERMS3: [([usize; 3], i8); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
];

/// Tensor of `(x, y, z) ↦ P(t(A₁x, A₂y, A₃z))` where `Aᵢ = a` on the selected
/// slots and the identity elsewhere; `P` is `post` or the identity.
pub fn tri_twist<S: Scalar>(
    t: &TriTensor<S>,
    a: &Matrix<S>,
    slots: [bool; 3],
    post: Option<&Matrix<S>>,
) -> Result<TriTensor<S>> {
    let d = t.dim();
    check_len("twist map rows", d, a.rows())?;
    check_len("twist map columns", d, a.cols())?;
    if let Some(p) = post {
        check_len("post map rows", d, p.rows())?;
        check_len("post map columns", d, p.cols())?;
    }
    let cols: Vec<Vector<S>> = (0..d).map(|j| a.column(j)).collect();
    let basis: Vec<Vector<S>> = (0..d).map(|j| crate::linalg::basis_vec(d, j)).collect();
    let arg = |slot: usize, i: usize| if slots[slot] { &cols[i] } else { &basis[i] };
    Ok(TriTensor::from_fn(d, |i, j, k| {
        let v = t.eval(arg(0, i), arg(1, j), arg(2, k));
        match post {
            Some(p) => p.apply(&v),
            None => v,
        }
    }))
}

/// `p(Ax, Ay, Az)`, the pullback along a linear map.
pub fn pullback<S: Scalar>(t: &TriTensor<S>, a: &Matrix<S>) -> TriTensor<S> {
    tri_twist(t, a, [true; 3], None).expect("square map of matching size")
}

/// Binary bracket on a based space: `row(i, j)` is the image of `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiTensor<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> BiTensor<S> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![S::zero(); dim.pow(3)],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector<S>) -> Self {
        let mut data = Vec::with_capacity(dim.pow(3));
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "image has wrong length");
                data.extend(v);
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize, j: usize) -> &[S] {
        assert!(i < self.dim && j < self.dim, "tensor index out of range");
        let o = (i * self.dim + j) * self.dim;
        &self.data[o..o + self.dim]
    }

    pub fn row_mut(&mut self, i: usize, j: usize) -> &mut [S] {
        assert!(i < self.dim && j < self.dim, "tensor index out of range");
        let o = (i * self.dim + j) * self.dim;
        &mut self.data[o..o + self.dim]
    }

    pub fn set(&mut self, i: usize, j: usize, l: usize, value: S) {
        self.row_mut(i, j)[l] = value;
    }

    pub fn entries(&self) -> impl Iterator<Item = ([usize; 3], &S)> + '_ {
        let d = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(n, x)| ([n / (d * d), (n / d) % d, n % d], x))
    }

    pub fn eval(&self, x: &[S], y: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi.clone() * yj.clone()), self.row(i, j));
                }
            }
        }
        out
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                self.row(i, j)
                    .iter()
                    .zip(self.row(j, i))
                    .all(|(a, b)| (a.clone() + b.clone()).is_zero())
            })
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BiTensor<T> {
        BiTensor {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Pair-indexed family of operators `ρ(e_i, e_j)` on a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepTensor<S> {
    algdim: usize,
    moddim: usize,
    mats: Vec<Matrix<S>>,
    /// Asserts `ρ(x, y) = -ρ(y, x)`; checkers verify it.
    pub skew: bool,
}

impl<S: Scalar> RepTensor<S> {
    pub fn zeros(algdim: usize, moddim: usize, skew: bool) -> Self {
        Self {
            algdim,
            moddim,
            mats: vec![Matrix::zeros(moddim, moddim); algdim * algdim],
            skew,
        }
    }

    pub fn from_fn(
        algdim: usize,
        moddim: usize,
        skew: bool,
        mut f: impl FnMut(usize, usize) -> Matrix<S>,
    ) -> Self {
        let mut mats = Vec::with_capacity(algdim * algdim);
        for i in 0..algdim {
            for j in 0..algdim {
                let m = f(i, j);
                assert_eq!((m.rows(), m.cols()), (moddim, moddim), "operator shape");
                mats.push(m);
            }
        }
        Self {
            algdim,
            moddim,
            mats,
            skew,
        }
    }

    pub fn algdim(&self) -> usize {
        self.algdim
    }

    pub fn moddim(&self) -> usize {
        self.moddim
    }

    pub fn get(&self, i: usize, j: usize) -> &Matrix<S> {
        assert!(i < self.algdim && j < self.algdim, "pair index out of range");
        &self.mats[i * self.algdim + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Matrix<S> {
        assert!(i < self.algdim && j < self.algdim, "pair index out of range");
        &mut self.mats[i * self.algdim + j]
    }

    /// Bilinear extension `ρ(x, y)`.
    pub fn eval(&self, x: &[S], y: &[S]) -> Matrix<S> {
        let mut out = Matrix::zeros(self.moddim, self.moddim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    out.add_scaled(&(xi.clone() * yj.clone()), self.get(i, j));
                }
            }
        }
        out
    }

    /// `ρ(x, y) u`.
    pub fn act(&self, x: &[S], y: &[S], u: &[S]) -> Vector<S> {
        self.eval(x, y).apply(u)
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    /// Whether `ρ(e_i, e_j) = -ρ(e_j, e_i)` for all pairs.
    pub fn is_skew(&self) -> bool {
        (0..self.algdim).all(|i| (i..self.algdim).all(|j| *self.get(i, j) == self.get(j, i).neg()))
    }

    pub fn map_mats(&self, skew: bool, f: impl Fn(&Matrix<S>) -> Matrix<S>) -> Self {
        let mats: Vec<Matrix<S>> = self.mats.iter().map(f).collect();
        let moddim = mats.first().map_or(self.moddim, Matrix::rows);
        Self {
            algdim: self.algdim,
            moddim,
            mats,
            skew,
        }
    }

    /// `(x, y) ↦ ρ(y, x)`.
    pub fn swapped(&self) -> Self {
        Self::from_fn(self.algdim, self.moddim, self.skew, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.algdim, self.moddim, self.skew && other.skew, |i, j| {
            self.get(i, j).add(other.get(i, j))
        })
    }

    pub fn neg(&self) -> Self {
        self.map_mats(self.skew, Matrix::neg)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> RepTensor<T> {
        RepTensor {
            algdim: self.algdim,
            moddim: self.moddim,
            mats: self.mats.iter().map(|m| m.map(&f)).collect(),
            skew: self.skew,
        }
    }
}

/// Bilinear form with Gram matrix `b[i][j] = B(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm<S> {
    pub b: Matrix<S>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn new(b: Matrix<S>) -> Self {
        assert!(b.is_square(), "Gram matrix must be square");
        Self { b }
    }

    pub fn dim(&self) -> usize {
        self.b.rows()
    }

    pub fn eval(&self, x: &[S], y: &[S]) -> S {
        self.b
            .apply(y)
            .iter()
            .zip(x)
            .fold(S::zero(), |acc, (by, xi)| acc + xi.clone() * by.clone())
    }

    pub fn is_skew(&self) -> bool {
        self.b == self.b.transpose().neg()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.b.determinant().is_zero()
    }
}
