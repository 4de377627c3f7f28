//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! Vectors act on the left of matrices (`x·M`); lattices are row spaces kept
//! in row Hermite normal form: echelon rows, positive pivots, entries above
//! each pivot reduced into `[0, pivot)`. With that normalisation two lattices
//! are equal exactly when their bases are equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntVec = Vec<BigInt>;

pub fn int_vec<I: IntoIterator<Item = i64>>(xs: I) -> IntVec {
    xs.into_iter().map(BigInt::from).collect()
}

pub fn zero_vec(m: usize) -> IntVec {
    vec![BigInt::zero(); m]
}

pub fn vec_add(a: &[BigInt], b: &[BigInt]) -> IntVec {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[BigInt], b: &[BigInt]) -> IntVec {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Dense integer matrix, possibly with zero rows or columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a `rows.len() × cols` matrix; every row must have length `cols`.
    pub fn from_rows(rows: Vec<IntVec>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        IntMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]], cols: usize) -> Self {
        Self::from_rows(
            rows.iter().map(|r| int_vec(r.iter().copied())).collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<IntVec> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, x: &[BigInt]) -> IntVec {
        assert_eq!(x.len(), self.rows, "dimension mismatch in x·M");
        let mut out = zero_vec(self.cols);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += xi * a;
            }
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Copy of `block` written into `self` at offset `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &IntMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn columns(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let mut out = Self::zeros(self.rows, range.len());
        for i in 0..self.rows {
            for (jj, j) in range.clone().enumerate() {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant of a square matrix (fraction-free Bareiss elimination).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] = s·row[dst] + t·row[src]`, `row[src] = u·row[dst] + v·row[src]`
    /// applied simultaneously.
    fn combine_rows(
        &mut self,
        dst: usize,
        src: usize,
        s: &BigInt,
        t: &BigInt,
        u: &BigInt,
        v: &BigInt,
    ) {
        for j in 0..self.cols {
            let a = self[(dst, j)].clone();
            let b = self[(src, j)].clone();
            self[(dst, j)] = s * &a + t * &b;
            self[(src, j)] = u * &a + v * &b;
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let d = q * &self[(src, j)];
            self[(dst, j)] += d;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)?;
        f.debug_list()
            .entries(
                self.rows()
                    .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            )
            .finish()
    }
}

/// Result of [`hnf`]: `u · m = h`, with `u` unimodular.
#[derive(Debug, Clone)]
pub struct Hnf {
    /// Full-size echelon form; rows `rank..` are zero.
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
}

impl Hnf {
    /// The nonzero rows of `h`.
    pub fn basis(&self) -> IntMatrix {
        IntMatrix::from_rows(
            self.h.rows().take(self.rank).map(|r| r.to_vec()).collect(),
            self.h.ncols(),
        )
    }
}

/// Row Hermite normal form with transformation matrix.
pub fn hnf(m: &IntMatrix) -> Hnf {
    let p = m.nrows();
    let q = m.ncols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(p);
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..q {
        if row == p {
            break;
        }
        for i in row + 1..p {
            if h[(i, col)].is_zero() {
                continue;
            }
            let a = h[(row, col)].clone();
            let b = h[(i, col)].clone();
            let e = a.extended_gcd(&b);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let uu = -(&b / &g);
            let vv = &a / &g;
            h.combine_rows(row, i, &s, &t, &uu, &vv);
            u.combine_rows(row, i, &s, &t, &uu, &vv);
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        let pivot = h[(row, col)].clone();
        for i in 0..row {
            let qt = h[(i, col)].div_floor(&pivot);
            if !qt.is_zero() {
                let nq = -qt;
                h.add_row_multiple(i, row, &nq);
                u.add_row_multiple(i, row, &nq);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Hnf {
        h,
        u,
        rank: row,
        pivots,
    }
}

/// Left kernel `{v ∈ Z^p : v·M = 0}`.
pub fn kernel(m: &IntMatrix) -> Lattice {
    let hf = hnf(m);
    let rows: Vec<IntVec> = (hf.rank..m.nrows()).map(|i| hf.u.row(i).to_vec()).collect();
    Lattice::from_generators(rows, m.nrows())
}

/// Some integral `x` with `x·M = b`, or `None` when `b` is outside the row space.
pub fn solve_left(m: &IntMatrix, b: &[BigInt]) -> Option<IntVec> {
    assert_eq!(b.len(), m.ncols(), "right-hand side has wrong length");
    let hf = hnf(m);
    let mut y = zero_vec(m.nrows());
    let mut residual = b.to_vec();
    for (i, &c) in hf.pivots.iter().enumerate() {
        let (qt, rem) = residual[c].div_rem(&hf.h[(i, c)]);
        if !rem.is_zero() {
            return None;
        }
        for (r, h) in residual.iter_mut().zip(hf.h.row(i)) {
            *r -= &qt * h;
        }
        y[i] = qt;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(hf.u.left_mul(&y))
}

/// A sublattice of `Z^m` with a canonical HNF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    dim: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn from_generators(rows: Vec<IntVec>, dim: usize) -> Self {
        Self::from_matrix(&IntMatrix::from_rows(rows, dim))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &IntMatrix) -> Self {
        let hf = hnf(m);
        Lattice {
            dim: m.ncols(),
            basis: hf.basis(),
            pivots: hf.pivots,
        }
    }

    pub fn trivial(dim: usize) -> Self {
        Lattice {
            dim,
            basis: IntMatrix::zeros(0, dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        Lattice {
            dim,
            basis: IntMatrix::identity(dim),
            pivots: (0..dim).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v + L` (HNF division).
    pub fn reduce(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        let mut r = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let qt = r[c].div_floor(&self.basis[(i, c)]);
            if qt.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(self.basis.row(i)) {
                *x -= &qt * b;
            }
        }
        r
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        Lattice::from_matrix(&self.basis.vstack(&other.basis))
    }

    pub fn meet(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim, "lattice dimension mismatch");
        let s1 = self.rank();
        let stacked = self.basis.vstack(&other.basis);
        let k = kernel(&stacked);
        let coeffs = k.basis.columns(0..s1);
        Lattice::from_matrix(&coeffs.mul(&self.basis))
    }

    /// Image of the lattice under `x ↦ x·M`.
    pub fn image(&self, m: &IntMatrix) -> Lattice {
        Lattice::from_matrix(&self.basis.mul(m))
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice(Z^{}) {:?}", self.dim, self.basis)
    }
}

/// Intersection of a nonempty family of lattices in a common ambient space.
pub fn lattice_meet(ls: &[Lattice]) -> Lattice {
    let (first, rest) = ls
        .split_first()
        .expect("lattice_meet needs at least one lattice");
    rest.iter().fold(first.clone(), |acc, l| acc.meet(l))
}

/// `{v ∈ Z^r : v·R ∈ L}` for an `r × n` matrix `R` and `L ⊆ Z^n`.
pub fn preimage(r: &IntMatrix, l: &Lattice) -> Lattice {
    assert_eq!(r.ncols(), l.dim(), "preimage dimension mismatch");
    let rows = r.nrows();
    let k = kernel(&r.vstack(l.basis()));
    Lattice::from_matrix(&k.basis.columns(0..rows))
}

/// Outcome of [`index_and_reps`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexReps {
    Finite { index: BigInt, reps: Vec<IntVec> },
    Infinite,
}

/// Index of `L` in `Z^r` and coset representatives in mixed-radix order.
///
/// Representatives are listed lexicographically with the first coordinate
/// most significant, coordinate `i` ranging over `0..pivot_i`.
pub fn index_and_reps(l: &Lattice) -> IndexReps {
    let r = l.dim();
    if l.rank() < r {
        return IndexReps::Infinite;
    }
    let diag: Vec<BigInt> = (0..r).map(|i| l.basis()[(i, i)].clone()).collect();
    let index: BigInt = diag.iter().product();
    let mut reps = vec![Vec::new()];
    for d in &diag {
        let mut next = Vec::new();
        for prefix in &reps {
            let mut c = BigInt::zero();
            while &c < d {
                let mut v: IntVec = prefix.clone();
                v.push(c.clone());
                next.push(v);
                c += 1;
            }
        }
        reps = next;
    }
    IndexReps::Finite { index, reps }
}

/// A coset `point + lattice` with the point in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineCoset {
    point: IntVec,
    lattice: Lattice,
}

impl AffineCoset {
    pub fn new(point: IntVec, lattice: Lattice) -> Self {
        let point = lattice.reduce(&point);
        AffineCoset { point, lattice }
    }

    pub fn point(&self) -> &[BigInt] {
        &self.point
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.lattice.contains(&vec_sub(v, &self.point))
    }

    pub fn translate(&self, v: &[BigInt]) -> AffineCoset {
        AffineCoset::new(vec_add(&self.point, v), self.lattice.clone())
    }
}

impl fmt::Debug for AffineCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.point.iter().map(|x| x.to_string()).collect();
        write!(f, "({}) + {:?}", p.join(","), self.lattice)
    }
}

/// The block matrix whose image decides whether cosets of `L_1..L_k` meet.
///
/// Row block `i` carries `L_i` in column block `i` and `-L_i` in column
/// block `i-1`; there are `k-1` column blocks of width `m`.
pub fn coset_block_matrix(lattices: &[&Lattice], m: usize) -> IntMatrix {
    let k = lattices.len();
    let total: usize = lattices.iter().map(|l| l.rank()).sum();
    let width = k.saturating_sub(1) * m;
    let mut out = IntMatrix::zeros(total, width);
    let mut r0 = 0;
    for (i, l) in lattices.iter().enumerate() {
        if i + 1 < k {
            out.set_block(r0, i * m, l.basis());
        }
        if i > 0 {
            out.set_block(r0, (i - 1) * m, &l.basis().neg());
        }
        r0 += l.rank();
    }
    out
}

/// Intersection of affine cosets, or `None` when it is empty.
pub fn affine_meet(cosets: &[AffineCoset]) -> Option<AffineCoset> {
    let first = cosets
        .first()
        .expect("affine_meet needs at least one coset");
    let m = first.dim();
    assert!(
        cosets.iter().all(|c| c.dim() == m),
        "coset dimension mismatch"
    );
    let lattices: Vec<&Lattice> = cosets.iter().map(|c| &c.lattice).collect();
    let block = coset_block_matrix(&lattices, m);
    let mut target = Vec::with_capacity(block.ncols());
    for w in cosets.windows(2) {
        target.extend(vec_sub(&w[1].point, &w[0].point));
    }
    let a = solve_left(&block, &target)?;
    let s1 = first.lattice.rank();
    let ell1 = first.lattice.basis().left_mul(&a[..s1]);
    let point = vec_add(&first.point, &ell1);
    let meet = lattice_meet(&cosets.iter().map(|c| c.lattice.clone()).collect::<Vec<_>>());
    Some(AffineCoset::new(point, meet))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]], cols: usize) -> IntMatrix {
        IntMatrix::from_i64(rows, cols)
    }

    fn lat(rows: &[&[i64]], dim: usize) -> Lattice {
        Lattice::from_matrix(&m(rows, dim))
    }

    #[test]
    fn hnf_examples() {
        let a = m(&[&[2, 4], &[2, 2]], 2);
        let hf = hnf(&a);
        assert_eq!(hf.basis(), m(&[&[2, 0], &[0, 2]], 2));
        assert_eq!(hf.u.mul(&a), hf.h);
        assert_eq!(hf.u.det().abs(), BigInt::one());

        let id = IntMatrix::identity(3);
        assert_eq!(hnf(&id).h, id);

        let z = m(&[&[0]], 1);
        let hf = hnf(&z);
        assert_eq!(hf.rank, 0);
        assert_eq!(hf.basis().nrows(), 0);
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let a = m(&[&[1, 5], &[0, 3]], 2);
        assert_eq!(hnf(&a).basis(), m(&[&[1, 2], &[0, 3]], 2));
        let b = m(&[&[1, -1], &[0, 3]], 2);
        assert_eq!(hnf(&b).basis(), m(&[&[1, 2], &[0, 3]], 2));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&m(&[&[1], &[1]], 1)), lat(&[&[1, -1]], 2));
        assert!(kernel(&m(&[&[2, 0], &[0, 3]], 2)).is_trivial());
        assert_eq!(kernel(&m(&[&[1, 1], &[1, 1]], 2)), lat(&[&[1, -1]], 2));
    }

    #[test]
    fn solve_left_examples() {
        let a = m(&[&[2]], 1);
        assert_eq!(solve_left(&a, &int_vec([4])), Some(int_vec([2])));
        assert_eq!(solve_left(&a, &int_vec([3])), None);
        let b = m(&[&[1, 0], &[0, 1], &[1, 1]], 2);
        let x = solve_left(&b, &int_vec([2, 3])).unwrap();
        assert_eq!(b.left_mul(&x), int_vec([2, 3]));
    }

    #[test]
    fn meet_examples() {
        let l1 = lat(&[&[2, 0], &[0, 1]], 2);
        let l2 = lat(&[&[1, 0], &[0, 3]], 2);
        assert_eq!(lattice_meet(&[l1.clone(), l2]), lat(&[&[2, 0], &[0, 3]], 2));
        assert_eq!(lattice_meet(&[l1.clone(), Lattice::full(2)]), l1);
        assert!(lattice_meet(&[lat(&[&[1, 1]], 2), lat(&[&[1, -1]], 2)]).is_trivial());
    }

    #[test]
    fn preimage_examples() {
        let r = m(&[&[1], &[0]], 1);
        assert_eq!(preimage(&r, &lat(&[&[2]], 1)), lat(&[&[2, 0], &[0, 1]], 2));
        assert_eq!(preimage(&r, &Lattice::full(1)), Lattice::full(2));
        assert!(preimage(&IntMatrix::identity(2), &Lattice::trivial(2)).is_trivial());
        // no columns: nothing to constrain
        assert_eq!(
            preimage(&IntMatrix::zeros(3, 0), &Lattice::trivial(0)),
            Lattice::full(3)
        );
    }

    #[test]
    fn index_examples() {
        let l = lat(&[&[2, 0], &[0, 3]], 2);
        let IndexReps::Finite { index, reps } = index_and_reps(&l) else {
            panic!("expected finite index");
        };
        assert_eq!(index, BigInt::from(6));
        let expected: Vec<IntVec> = (0..2)
            .flat_map(|i| (0..3).map(move |j| int_vec([i, j])))
            .collect();
        assert_eq!(reps, expected);
        assert_eq!(index_and_reps(&lat(&[&[1, 1]], 2)), IndexReps::Infinite);
        assert_eq!(
            index_and_reps(&Lattice::full(2)),
            IndexReps::Finite {
                index: BigInt::one(),
                reps: vec![int_vec([0, 0])]
            }
        );
    }

    #[test]
    fn affine_meet_examples() {
        let c1 = AffineCoset::new(int_vec([1, 0]), lat(&[&[1, 1]], 2));
        let c2 = AffineCoset::new(int_vec([0, 0]), lat(&[&[0, 1]], 2));
        let got = affine_meet(&[c1, c2]).unwrap();
        assert_eq!(got.point(), &int_vec([0, -1])[..]);
        assert!(got.lattice().is_trivial());

        let c1 = AffineCoset::new(int_vec([1, 0]), lat(&[&[2, 0]], 2));
        let c2 = AffineCoset::new(int_vec([0, 0]), lat(&[&[0, 1]], 2));
        assert_eq!(affine_meet(&[c1, c2]), None);

        let c = AffineCoset::new(int_vec([3, -1]), lat(&[&[2, 1]], 2));
        assert_eq!(affine_meet(&[c.clone(), c.clone()]), Some(c));
    }

    #[test]
    fn det_matches_expansion() {
        let a = m(&[&[0, 2, 1], &[3, -1, 4], &[2, 2, 0]], 3);
        // 0*(0-8) - 2*(0-8) + 1*(6+2) = 24
        assert_eq!(a.det(), BigInt::from(24));
    }
}
