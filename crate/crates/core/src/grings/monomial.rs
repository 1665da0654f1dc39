//! The G-ring `F_q[G·x] / (g₁x · g₂x : g₁ ≠ g₂)`.
//!
//! Killing all products of distinct translates of the generator leaves the
//! monomial basis `{1} ∪ {x_g^k : g ∈ G, k ≥ 1}`, so elements are finitely
//! supported coefficient maps on those monomials.  The ring embeds into the
//! product `Π_{g ∈ G} F_q[t]` by sending `x_g` to `t` in the `g`-th factor;
//! this module implements the algebra, the action, the embedding, and an
//! exact injectivity check on the span of bounded-degree monomials.

use crate::groups::FiniteGroup;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("coefficient modulus {q} must be a prime")]
    NonPrimeModulus { q: u64 },
    #[error("degree {degree} exceeds the evaluation bound {bound}")]
    DegreeBoundExceeded { degree: u32, bound: u32 },
}

/// A basis monomial: the unit or a pure power of one translated generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Monomial {
    Unit,
    Var { g: usize, exp: u32 },
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        match self {
            Monomial::Unit => 0,
            Monomial::Var { exp, .. } => *exp,
        }
    }
}

/// Finitely supported `F_q`-combination of monomials; absent keys are zero
/// and stored coefficients are nonzero residues.
pub type Element = BTreeMap<Monomial, u64>;

#[derive(Debug, Clone)]
pub struct MonomialAlgebra {
    group: Arc<FiniteGroup>,
    q: u64,
}

impl MonomialAlgebra {
    pub fn new(group: Arc<FiniteGroup>, q: u64) -> Result<MonomialAlgebra, MonomialError> {
        let prime = q >= 2 && (2..q).all(|d| !q.is_multiple_of(d));
        if !prime {
            return Err(MonomialError::NonPrimeModulus { q });
        }
        Ok(MonomialAlgebra { group, q })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn zero(&self) -> Element {
        Element::new()
    }

    pub fn one(&self) -> Element {
        let mut e = Element::new();
        e.insert(Monomial::Unit, 1);
        e
    }

    /// The translated generator `x_g`.
    pub fn var(&self, g: usize) -> Element {
        let mut e = Element::new();
        e.insert(Monomial::Var { g, exp: 1 }, 1);
        e
    }

    pub fn scale(&self, c: u64, x: &Element) -> Element {
        let c = c % self.q;
        let mut out = Element::new();
        if c == 0 {
            return out;
        }
        for (&m, &a) in x {
            let v = a * c % self.q;
            if v != 0 {
                out.insert(m, v);
            }
        }
        out
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        let mut out = x.clone();
        for (&m, &a) in y {
            let v = (out.get(&m).copied().unwrap_or(0) + a) % self.q;
            if v == 0 {
                out.remove(&m);
            } else {
                out.insert(m, v);
            }
        }
        out
    }

    /// Product; cross-variable monomial products vanish by the defining
    /// relations.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (&mx, &a) in x {
            for (&my, &b) in y {
                let m = match (mx, my) {
                    (Monomial::Unit, m) | (m, Monomial::Unit) => Some(m),
                    (Monomial::Var { g, exp: i }, Monomial::Var { g: h, exp: j }) => {
                        if g == h {
                            Some(Monomial::Var { g, exp: i + j })
                        } else {
                            None
                        }
                    }
                };
                if let Some(m) = m {
                    let v = (out.get(&m).copied().unwrap_or(0) + a * b) % self.q;
                    if v == 0 {
                        out.remove(&m);
                    } else {
                        out.insert(m, v);
                    }
                }
            }
        }
        out
    }

    /// Action `h · x_g = x_{hg}` extended multiplicatively and linearly.
    pub fn act(&self, h: usize, x: &Element) -> Element {
        let mut out = Element::new();
        for (&m, &a) in x {
            let moved = match m {
                Monomial::Unit => Monomial::Unit,
                Monomial::Var { g, exp } => {
                    Monomial::Var { g: self.group.mul(h, g), exp }
                }
            };
            out.insert(moved, a);
        }
        out
    }

    pub fn degree(&self, x: &Element) -> u32 {
        x.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// All basis monomials of degree at most `d`, in their canonical order.
    pub fn monomials_up_to(&self, d: u32) -> Vec<Monomial> {
        let mut out = vec![Monomial::Unit];
        for g in self.group.elements() {
            for exp in 1..=d {
                out.push(Monomial::Var { g, exp });
            }
        }
        out.sort();
        out
    }

    /// Image under the embedding into `Π_{g ∈ G} F_q[t]`, truncated at
    /// degree `bound`: coordinates are indexed by `(g, power)` with the
    /// power varying fastest.
    pub fn eval(&self, x: &Element, bound: u32) -> Result<Vec<u64>, MonomialError> {
        let width = (bound + 1) as usize;
        let mut v = vec![0u64; self.group.order() * width];
        for (&m, &a) in x {
            if m.degree() > bound {
                return Err(MonomialError::DegreeBoundExceeded { degree: m.degree(), bound });
            }
            match m {
                Monomial::Unit => {
                    // The identity of the product ring is 1 in every factor.
                    for g in self.group.elements() {
                        v[g * width] = (v[g * width] + a) % self.q;
                    }
                }
                Monomial::Var { g, exp } => {
                    let idx = g * width + exp as usize;
                    v[idx] = (v[idx] + a) % self.q;
                }
            }
        }
        Ok(v)
    }

    /// Rank over `F_q` of the images of all monomials of degree ≤ `d`,
    /// paired with the monomial count; equality certifies injectivity of the
    /// embedding on their span.
    pub fn injectivity_rank(&self, d: u32) -> Result<(usize, usize), MonomialError> {
        let monomials = self.monomials_up_to(d);
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for m in &monomials {
            let mut e = Element::new();
            e.insert(*m, 1);
            rows.push(self.eval(&e, d)?);
        }
        let count = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut rank = 0usize;
        for col in 0..ncols {
            let Some(pos) = (rank..rows.len()).find(|&i| !rows[i][col].is_multiple_of(self.q)) else {
                continue;
            };
            rows.swap(rank, pos);
            let inv = mod_pow(rows[rank][col], self.q - 2, self.q);
            for x in rows[rank].iter_mut() {
                *x = *x * inv % self.q;
            }
            for i in 0..rows.len() {
                if i != rank && !rows[i][col].is_multiple_of(self.q) {
                    let f = rows[i][col] % self.q;
                    for k in 0..ncols {
                        let sub = f * rows[rank][k] % self.q;
                        rows[i][k] = (rows[i][k] + self.q - sub) % self.q;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        Ok((count, rank))
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut out = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            out = out * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};

    fn c2_algebra() -> MonomialAlgebra {
        MonomialAlgebra::new(Arc::new(cyclic(2).unwrap()), 2).unwrap()
    }

    #[test]
    fn distinct_translates_multiply_to_zero() {
        let a = c2_algebra();
        let xe = a.var(0);
        let xg = a.var(1);
        assert_eq!(a.mul(&xe, &xg), a.zero());
        assert_eq!(a.mul(&xg, &xe), a.zero());
        // Same-variable powers survive: x_e · x_e = x_e².
        let sq = a.mul(&xe, &xe);
        assert_eq!(sq.get(&Monomial::Var { g: 0, exp: 2 }), Some(&1));
    }

    #[test]
    fn action_permutes_generators() {
        let a = c2_algebra();
        let xe = a.var(0);
        assert_eq!(a.act(1, &xe), a.var(1));
        assert_eq!(a.act(1, &a.act(1, &xe)), xe);
        assert_eq!(a.act(1, &a.one()), a.one());
    }

    #[test]
    fn embedding_is_multiplicative_and_additive() {
        let a = MonomialAlgebra::new(Arc::new(symmetric(3).unwrap()), 3).unwrap();
        // Sample elements: mixtures of unit and variables.
        let x = a.add(&a.one(), &a.scale(2, &a.var(2)));
        let y = a.add(&a.var(2), &a.var(4));
        let bound = 4u32;
        let q = a.modulus();
        let width = (bound + 1) as usize;
        let polymul = |u: &[u64], v: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; u.len()];
            for g in 0..a.group().order() {
                for i in 0..width {
                    for j in 0..width - i {
                        out[g * width + i + j] = (out[g * width + i + j]
                            + u[g * width + i] * v[g * width + j])
                            % q;
                    }
                }
            }
            out
        };
        let ex = a.eval(&x, bound).unwrap();
        let ey = a.eval(&y, bound).unwrap();
        let sum = a.eval(&a.add(&x, &y), bound).unwrap();
        let prod = a.eval(&a.mul(&x, &y), bound).unwrap();
        let expect_sum: Vec<u64> = ex.iter().zip(&ey).map(|(u, v)| (u + v) % q).collect();
        assert_eq!(sum, expect_sum);
        assert_eq!(prod, polymul(&ex, &ey));
    }

    #[test]
    fn injectivity_on_degree_six_monomials() {
        let a = c2_algebra();
        let (count, rank) = a.injectivity_rank(6).unwrap();
        assert_eq!(count, 13); // 1 unit + 2 generators × 6 powers
        assert_eq!(rank, count);
        // Also over a bigger group and modulus.
        let b = MonomialAlgebra::new(Arc::new(symmetric(3).unwrap()), 5).unwrap();
        let (count, rank) = b.injectivity_rank(4).unwrap();
        assert_eq!(count, 1 + 6 * 4);
        assert_eq!(rank, count);
    }

    #[test]
    fn monomial_pairs_witness_domain_like_behavior() {
        // For any nonzero monomials m, m' there is g with m · (g·m') ≠ 0.
        let a = MonomialAlgebra::new(Arc::new(symmetric(3).unwrap()), 2).unwrap();
        let g_order = a.group().order();
        for m in a.monomials_up_to(3) {
            for m2 in a.monomials_up_to(3) {
                let mut x = Element::new();
                x.insert(m, 1);
                let mut y = Element::new();
                y.insert(m2, 1);
                let witness = (0..g_order).any(|g| a.mul(&x, &a.act(g, &y)) != a.zero());
                assert!(witness, "no witness for {m:?}, {m2:?}");
            }
        }
    }

    #[test]
    fn modulus_must_be_prime() {
        assert!(matches!(
            MonomialAlgebra::new(Arc::new(cyclic(2).unwrap()), 4),
            Err(MonomialError::NonPrimeModulus { q: 4 })
        ));
    }
}
