//! Exact integer matrix and lattice arithmetic.
//!
//! Subgroup-indexed ideals of Burnside rings are subgroups of `Z^n`, i.e.
//! integer lattices.  This module provides the row-style Hermite normal form
//! (HNF) together with the lattice operations built on it: membership,
//! inclusion, equality, intersection, integer kernels, congruence kernels
//! modulo a prime, and preimages of lattices under integer linear maps.
//!
//! All functions are generic over the scalar via [`IntScalar`]; the crate root
//! re-exports concrete aliases over [`crate::Int`].

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};
use std::fmt::{Debug, Display};

/// Scalar bound for exact lattice arithmetic: a signed integer type.
pub trait IntScalar: Integer + Signed + Clone + Debug + Display + FromPrimitive {}
impl<T: Integer + Signed + Clone + Debug + Display + FromPrimitive> IntScalar for T {}

/// Row-style Hermite normal form of the span of `rows` inside `Z^dim`.
///
/// The result is the canonical basis of the row span: rows are in echelon
/// form with strictly increasing pivot columns, pivots are positive, entries
/// above each pivot lie in `[0, pivot)`, and zero rows are dropped.  Two row
/// sets span the same lattice iff their normal forms are equal.
pub fn hnf<T: IntScalar>(dim: usize, rows: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = rows;
    for row in &rows {
        assert_eq!(row.len(), dim, "row length must equal dim");
    }
    let nrows = rows.len();
    let mut rank = 0usize;
    for col in 0..dim {
        if rank == nrows {
            break;
        }
        // Move some row with a nonzero entry in `col` up to position `rank`.
        let Some(pos) = (rank..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pos);
        // Unimodularly combine the pivot row with every lower row so the
        // pivot entry becomes the gcd and lower entries become zero.
        for i in rank + 1..nrows {
            if rows[i][col].is_zero() {
                continue;
            }
            let a = rows[rank][col].clone();
            let b = rows[i][col].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let qa = a / g.clone();
            let qb = b / g;
            for k in 0..dim {
                let top = rows[rank][k].clone();
                let bot = rows[i][k].clone();
                rows[rank][k] = x.clone() * top.clone() + y.clone() * bot.clone();
                rows[i][k] = qa.clone() * bot - qb.clone() * top;
            }
        }
        if rows[rank][col].is_negative() {
            for k in 0..dim {
                rows[rank][k] = -rows[rank][k].clone();
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..rank {
            let q = rows[i][col].div_floor(&rows[rank][col]);
            if q.is_zero() {
                continue;
            }
            for k in 0..dim {
                let sub = q.clone() * rows[rank][k].clone();
                rows[i][k] = rows[i][k].clone() - sub;
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// An integer lattice (subgroup of `Z^dim`) stored via its canonical HNF basis.
///
/// Because the basis is canonical, derived `PartialEq` is lattice equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice<T> {
    dim: usize,
    rows: Vec<Vec<T>>,
}

impl<T: IntScalar> Lattice<T> {
    /// Lattice spanned by `rows` inside `Z^dim`.
    pub fn from_rows(dim: usize, rows: Vec<Vec<T>>) -> Self {
        Lattice { dim, rows: hnf(dim, rows) }
    }

    /// The zero lattice in `Z^dim`.
    pub fn zero(dim: usize) -> Self {
        Lattice { dim, rows: Vec::new() }
    }

    /// All of `Z^dim`.
    pub fn full(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut row = vec![T::zero(); dim];
                row[i] = T::one();
                row
            })
            .collect();
        Lattice { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical HNF basis rows.
    pub fn basis(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Whether the lattice is all of `Z^dim`.
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, row)| row[i].is_one())
    }

    /// Membership test by back-substitution along the echelon basis.
    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length must equal dim");
        let mut v: Vec<T> = v.to_vec();
        for row in &self.rows {
            let col = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if !v[col].is_multiple_of(&row[col]) {
                return false;
            }
            let q = v[col].clone() / row[col].clone();
            if !q.is_zero() {
                for k in col..self.dim {
                    let sub = q.clone() * row[k].clone();
                    v[k] = v[k].clone() - sub;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    /// Whether `other ⊆ self`.
    pub fn contains_lattice(&self, other: &Lattice<T>) -> bool {
        assert_eq!(self.dim, other.dim);
        other.rows.iter().all(|row| self.contains(row))
    }

    /// Intersection of two lattices in the same ambient `Z^dim`.
    ///
    /// A vector lies in both lattices iff it is `y1·B1 = y2·B2` for integer
    /// row vectors `y1, y2`; such pairs form the left kernel of the stacked
    /// matrix `[B1; -B2]`, and the intersection is the image of that kernel
    /// under `(y1, y2) ↦ y1·B1`.
    pub fn intersect(&self, other: &Lattice<T>) -> Lattice<T> {
        assert_eq!(self.dim, other.dim);
        let mut stacked: Vec<Vec<T>> = self.rows.clone();
        for row in &other.rows {
            stacked.push(row.iter().map(|x| -x.clone()).collect());
        }
        let kernel = left_kernel(self.dim, &stacked);
        let n1 = self.rows.len();
        let images = kernel
            .iter()
            .map(|y| {
                let mut v = vec![T::zero(); self.dim];
                for (i, coef) in y.iter().take(n1).enumerate() {
                    for k in 0..self.dim {
                        let add = coef.clone() * self.rows[i][k].clone();
                        v[k] = v[k].clone() + add;
                    }
                }
                v
            })
            .collect();
        Lattice::from_rows(self.dim, images)
    }

    /// Sum (join) of two lattices.
    pub fn sum(&self, other: &Lattice<T>) -> Lattice<T> {
        assert_eq!(self.dim, other.dim);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Lattice::from_rows(self.dim, rows)
    }
}

/// Basis of the left kernel `{ x ∈ Z^m : x·M = 0 }` of an `m × dim` matrix
/// given by its rows, returned in HNF.
///
/// Standard augmentation trick: HNF-reduce `[M | I]`; the identity tails of
/// the rows whose `M`-part vanished form a kernel basis.
pub fn left_kernel<T: IntScalar>(dim: usize, rows: &[Vec<T>]) -> Vec<Vec<T>> {
    let m = rows.len();
    let augmented: Vec<Vec<T>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), dim, "row length must equal dim");
            let mut aug = row.clone();
            aug.extend((0..m).map(|j| if j == i { T::one() } else { T::zero() }));
            aug
        })
        .collect();
    let reduced = hnf(dim + m, augmented);
    let kernel: Vec<Vec<T>> = reduced
        .into_iter()
        .filter(|row| row[..dim].iter().all(|x| x.is_zero()))
        .map(|row| row[dim..].to_vec())
        .collect();
    hnf(m, kernel)
}

/// Basis of the right kernel `{ c ∈ Z^dim : M·c = 0 }` where `M` is given by
/// its rows (each of length `dim`), returned in HNF.
pub fn right_kernel<T: IntScalar>(dim: usize, rows: &[Vec<T>]) -> Vec<Vec<T>> {
    let transposed: Vec<Vec<T>> = (0..dim)
        .map(|j| rows.iter().map(|row| row[j].clone()).collect())
        .collect();
    left_kernel(rows.len(), &transposed)
}

/// The lattice `{ c ∈ Z^dim : M·c ≡ 0 (mod p) }` for constraint rows `M`.
///
/// For `p = 0` the congruence is equality, i.e. the integer right kernel.
/// For prime `p ≥ 2` the result is generated by lifts of an `F_p`-nullspace
/// basis together with `p·Z^dim`.
pub fn congruence_kernel<T: IntScalar>(dim: usize, rows: &[Vec<T>], p: u64) -> Lattice<T> {
    if p == 0 {
        let basis = right_kernel(dim, rows);
        return Lattice { dim, rows: hnf(dim, basis) };
    }
    let pt = T::from_u64(p).expect("modulus fits in scalar");
    // Reduce the constraint matrix mod p and row-reduce over F_p.
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let r = x.mod_floor(&pt);
                    scalar_to_u64(&r)
                })
                .collect()
        })
        .collect();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..dim {
        let Some(pos) = (rank..m.len()).find(|&i| !m[i][col].is_multiple_of(p)) else {
            continue;
        };
        m.swap(rank, pos);
        let inv = mod_inverse(m[rank][col], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_multiple_of(p) {
                let factor = m[i][col] % p;
                for k in 0..dim {
                    let sub = factor * m[rank][k] % p;
                    m[i][k] = (m[i][k] + p - sub) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let is_pivot = |c: usize| pivot_cols.contains(&c);
    let mut generators: Vec<Vec<T>> = Vec::new();
    for free in 0..dim {
        if is_pivot(free) {
            continue;
        }
        // Nullspace vector: free column set to 1, pivot columns solved.
        let mut v = vec![T::zero(); dim];
        v[free] = T::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            let coef = m[r][free] % p;
            if coef != 0 {
                v[pc] = T::from_u64(p - coef).expect("residue fits in scalar");
            }
        }
        generators.push(v);
    }
    for i in 0..dim {
        let mut v = vec![T::zero(); dim];
        v[i] = pt.clone();
        generators.push(v);
    }
    Lattice::from_rows(dim, generators)
}

/// The lattice `{ c ∈ Z^dim : M·c ∈ target }` for an integer linear map `M`
/// given by rows of length `dim` (so `M·c` lives in `Z^{rows.len()}`).
///
/// Pairs `(c, y)` with `M·c = y·B` (`B` the target basis) form the left kernel
/// of the stacked matrix `[Mᵀ; -B]`; projecting that kernel to the `c` block
/// gives the preimage.
pub fn preimage_lattice<T: IntScalar>(
    dim: usize,
    rows: &[Vec<T>],
    target: &Lattice<T>,
) -> Lattice<T> {
    let m = rows.len();
    assert_eq!(target.dim(), m, "target must live in the codomain");
    let mut stacked: Vec<Vec<T>> = (0..dim)
        .map(|i| rows.iter().map(|row| row[i].clone()).collect())
        .collect();
    for row in target.basis() {
        stacked.push(row.iter().map(|x| -x.clone()).collect());
    }
    let kernel = left_kernel(m, &stacked);
    let projected: Vec<Vec<T>> = kernel.into_iter().map(|v| v[..dim].to_vec()).collect();
    Lattice::from_rows(dim, projected)
}

/// Apply an integer linear map (rows of length `dim`) to a vector.
pub fn apply_map<T: IntScalar>(rows: &[Vec<T>], v: &[T]) -> Vec<T> {
    rows.iter()
        .map(|row| {
            assert_eq!(row.len(), v.len());
            row.iter()
                .zip(v)
                .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

fn scalar_to_u64<T: IntScalar>(x: &T) -> u64 {
    // x is a non-negative residue; recover it digit-by-digit to stay generic.
    let ten = T::from_u64(10).expect("10 fits in scalar");
    let mut digits = Vec::new();
    let mut cur = x.clone();
    if cur.is_zero() {
        return 0;
    }
    while !cur.is_zero() {
        let (q, r) = cur.div_mod_floor(&ten);
        let mut d = 0u64;
        let mut probe = T::zero();
        while probe != r {
            probe = probe + T::one();
            d += 1;
        }
        digits.push(d);
        cur = q;
    }
    digits.iter().rev().fold(0u64, |acc, d| acc * 10 + d)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a ≠ 0 mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}
