//! Finite commutative rings with explicit operation tables.
//!
//! Elements are indices `0..order`; addition and multiplication are stored as
//! flattened tables.  Constructors cover `Z/n`, the finite fields `F_q` for
//! `q ≤ 16`, finite products, quotients by an ideal, and subrings (including
//! corner rings `e·R` whose unit is an idempotent `e`).
//!
//! Ideals are element bitsets; the full ideal poset is enumerated by closing
//! principal ideals under pairwise sums, which is exhaustive because every
//! ideal is the sum of the principal ideals of its members.

use fixedbitset::FixedBitSet;
use std::collections::HashMap;
use thiserror::Error;

/// Default cap on ring order for table-based construction; coinduced levels
/// multiply orders, so this keeps memory and closure passes tractable.
pub const MAX_RING_ORDER: usize = 4096;

/// Default cap used by ideal enumeration.
pub const DEFAULT_IDEAL_ENUM_ORDER: usize = 256;

pub type ElemSet = FixedBitSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("operation table is not square or has out-of-range entries at row {row}")]
    MalformedTable { row: usize },
    #[error("ring axiom `{axiom}` fails at {witness}")]
    AxiomFailed { axiom: &'static str, witness: String },
    #[error("no additive identity")]
    NoZero,
    #[error("no multiplicative identity")]
    NoOne,
    #[error("element {element} has no additive inverse")]
    NoNegative { element: usize },
    #[error("ring order {order} exceeds bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("unsupported field order {q} (need a prime power ≤ 16)")]
    UnsupportedFieldOrder { q: usize },
    #[error("subset is not an ideal: witnessed by {witness}")]
    NotAnIdeal { witness: String },
    #[error("ideal is improper (contains 1)")]
    ImproperIdeal,
}

/// A finite commutative ring with unit, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    labels: Option<Vec<String>>,
}

impl FiniteRing {
    /// Validate addition and multiplication tables and build the ring.
    ///
    /// The zero, one, and negation data are derived from the tables.  Checks:
    /// table shape, commutativity and associativity of both operations,
    /// additive identity and inverses, multiplicative identity, and
    /// distributivity.  `zero == one` is permitted only for the one-element
    /// ring.
    pub fn from_tables(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<FiniteRing, RingError> {
        let order = add.len();
        if order == 0 || mul.len() != order {
            return Err(RingError::MalformedTable { row: 0 });
        }
        for (i, row) in add.iter().chain(mul.iter()).enumerate() {
            if row.len() != order || row.iter().any(|&x| x >= order) {
                return Err(RingError::MalformedTable { row: i % order });
            }
        }
        let a = |x: usize, y: usize| add[x][y];
        let m = |x: usize, y: usize| mul[x][y];
        for x in 0..order {
            for y in 0..order {
                if a(x, y) != a(y, x) {
                    return Err(RingError::AxiomFailed {
                        axiom: "additive commutativity",
                        witness: format!("({x}, {y})"),
                    });
                }
                if m(x, y) != m(y, x) {
                    return Err(RingError::AxiomFailed {
                        axiom: "multiplicative commutativity",
                        witness: format!("({x}, {y})"),
                    });
                }
            }
        }
        let zero = (0..order)
            .find(|&z| (0..order).all(|x| a(z, x) == x))
            .ok_or(RingError::NoZero)?;
        let one = (0..order)
            .find(|&o| (0..order).all(|x| m(o, x) == x))
            .ok_or(RingError::NoOne)?;
        if zero == one && order > 1 {
            return Err(RingError::AxiomFailed {
                axiom: "zero differs from one",
                witness: format!("0 = 1 = {zero}"),
            });
        }
        let mut neg = vec![usize::MAX; order];
        for x in 0..order {
            neg[x] = (0..order)
                .find(|&y| a(x, y) == zero)
                .ok_or(RingError::NoNegative { element: x })?;
        }
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    if a(a(x, y), z) != a(x, a(y, z)) {
                        return Err(RingError::AxiomFailed {
                            axiom: "additive associativity",
                            witness: format!("({x}, {y}, {z})"),
                        });
                    }
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(RingError::AxiomFailed {
                            axiom: "multiplicative associativity",
                            witness: format!("({x}, {y}, {z})"),
                        });
                    }
                    if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                        return Err(RingError::AxiomFailed {
                            axiom: "distributivity",
                            witness: format!("({x}, {y}, {z})"),
                        });
                    }
                }
            }
        }
        Ok(FiniteRing {
            order,
            add: add.iter().flatten().copied().collect(),
            mul: mul.iter().flatten().copied().collect(),
            neg,
            zero,
            one,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> FiniteRing {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.add(x, y)).collect())
            .collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.elements().any(|y| self.mul(x, y) == self.one)
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// Sum of a slice of elements.
    pub fn sum(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.zero, |acc, &x| self.add(acc, x))
    }

    /// Product of a slice of elements.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.one, |acc, &x| self.mul(acc, x))
    }

    /// Whether the ring is a field (every nonzero element invertible).
    pub fn is_field(&self) -> bool {
        self.order > 1 && self.elements().all(|x| x == self.zero || self.is_unit(x))
    }
}

/// The ring `Z/n`.
pub fn zn(n: usize) -> Result<FiniteRing, RingError> {
    if n == 0 {
        return Err(RingError::NoZero);
    }
    if n > MAX_RING_ORDER {
        return Err(RingError::OrderBoundExceeded { order: n, bound: MAX_RING_ORDER });
    }
    let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
    FiniteRing::from_tables(&add, &mul)
}

/// The finite field `F_q` for a prime power `q ≤ 16`.
///
/// Elements are base-`p` digit strings read as polynomials in a generator
/// `t` modulo a fixed irreducible polynomial.
pub fn fq(q: usize) -> Result<FiniteRing, RingError> {
    let (p, k) = prime_power(q).ok_or(RingError::UnsupportedFieldOrder { q })?;
    if q > 16 {
        return Err(RingError::UnsupportedFieldOrder { q });
    }
    if k == 1 {
        return zn(p);
    }
    // Irreducible monic polynomials, constant coefficient first.
    let modulus: Vec<usize> = match (p, k) {
        (2, 2) => vec![1, 1, 1],          // t² + t + 1
        (2, 3) => vec![1, 1, 0, 1],       // t³ + t + 1
        (2, 4) => vec![1, 1, 0, 0, 1],    // t⁴ + t + 1
        (3, 2) => vec![1, 0, 1],          // t² + 1
        _ => return Err(RingError::UnsupportedFieldOrder { q }),
    };
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0usize; k];
        for slot in d.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
    let add_poly = |a: &[usize], b: &[usize]| -> Vec<usize> {
        a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
    };
    let mul_poly = |a: &[usize], b: &[usize]| -> Vec<usize> {
        let mut prod = vec![0usize; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // Reduce modulo the monic modulus of degree k.
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mc) in modulus.iter().enumerate().take(k) {
                prod[i - k + j] = (prod[i - k + j] + c * (p - mc % p)) % p;
            }
        }
        prod.truncate(k);
        prod
    };
    let add: Vec<Vec<usize>> = (0..q)
        .map(|a| (0..q).map(|b| undigits(&add_poly(&digits(a), &digits(b)))).collect())
        .collect();
    let mul: Vec<Vec<usize>> = (0..q)
        .map(|a| (0..q).map(|b| undigits(&mul_poly(&digits(a), &digits(b)))).collect())
        .collect();
    let labels: Vec<String> = (0..q)
        .map(|x| {
            let d = digits(x);
            let terms: Vec<String> = d
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| match (i, c) {
                    (0, c) => c.to_string(),
                    (1, 1) => "t".to_string(),
                    (1, c) => format!("{c}t"),
                    (i, 1) => format!("t^{i}"),
                    (i, c) => format!("{c}t^{i}"),
                })
                .collect();
            if terms.is_empty() { "0".to_string() } else { terms.join("+") }
        })
        .collect();
    let ring = FiniteRing::from_tables(&add, &mul)?;
    debug_assert!(ring.is_field());
    Ok(ring.with_labels(labels))
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest == 1 { Some((p, k)) } else { None }
}

/// A finite product with mixed-radix element encoding (first factor slowest).
#[derive(Debug, Clone)]
pub struct ProductRing {
    pub ring: FiniteRing,
    pub factor_orders: Vec<usize>,
}

impl ProductRing {
    pub fn new(factors: &[&FiniteRing]) -> Result<ProductRing, RingError> {
        let orders: Vec<usize> = factors.iter().map(|r| r.order()).collect();
        let total: usize = orders.iter().product();
        if total > MAX_RING_ORDER {
            return Err(RingError::OrderBoundExceeded { order: total, bound: MAX_RING_ORDER });
        }
        if total == 0 {
            return Err(RingError::NoZero);
        }
        let decode = |x: usize| decode_mixed(x, &orders);
        let encode = |c: &[usize]| encode_mixed(c, &orders);
        let op = |tables: Vec<&FiniteRing>, f: &dyn Fn(&FiniteRing, usize, usize) -> usize| {
            (0..total)
                .map(|a| {
                    let ca = decode(a);
                    (0..total)
                        .map(|b| {
                            let cb = decode(b);
                            let c: Vec<usize> = ca
                                .iter()
                                .zip(&cb)
                                .zip(&tables)
                                .map(|((&x, &y), r)| f(r, x, y))
                                .collect();
                            encode(&c)
                        })
                        .collect::<Vec<usize>>()
                })
                .collect::<Vec<Vec<usize>>>()
        };
        let add = op(factors.to_vec(), &|r, x, y| r.add(x, y));
        let mul = op(factors.to_vec(), &|r, x, y| r.mul(x, y));
        let ring = FiniteRing::from_tables(&add, &mul)?;
        let labels: Vec<String> = (0..total)
            .map(|x| {
                let c = decode(x);
                let parts: Vec<String> =
                    c.iter().zip(factors).map(|(&v, r)| r.label(v)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        Ok(ProductRing { ring: ring.with_labels(labels), factor_orders: orders })
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        encode_mixed(coords, &self.factor_orders)
    }

    pub fn decode(&self, x: usize) -> Vec<usize> {
        decode_mixed(x, &self.factor_orders)
    }
}

pub fn encode_mixed(coords: &[usize], orders: &[usize]) -> usize {
    coords.iter().zip(orders).fold(0, |acc, (&c, &n)| {
        debug_assert!(c < n);
        acc * n + c
    })
}

pub fn decode_mixed(mut x: usize, orders: &[usize]) -> Vec<usize> {
    let mut coords = vec![0usize; orders.len()];
    for i in (0..orders.len()).rev() {
        coords[i] = x % orders[i];
        x /= orders[i];
    }
    coords
}

/// A subring presented by its element list inside a parent ring, with the
/// induced operations.  `one` may differ from the parent's unit (corner
/// rings `e·R` use the idempotent `e`).
#[derive(Debug, Clone)]
pub struct Subring {
    pub ring: FiniteRing,
    /// New index → parent index.
    pub embed: Vec<usize>,
    /// Parent index → new index where defined.
    pub locate: HashMap<usize, usize>,
}

pub fn subring(parent: &FiniteRing, members: &[usize], one: usize) -> Result<Subring, RingError> {
    let mut embed: Vec<usize> = members.to_vec();
    embed.sort_unstable();
    embed.dedup();
    let locate: HashMap<usize, usize> =
        embed.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let get = |old: usize| -> Result<usize, RingError> {
        locate.get(&old).copied().ok_or(RingError::NotAnIdeal {
            witness: format!("operation escapes the subset at element {old}"),
        })
    };
    let n = embed.len();
    let mut add = vec![vec![0usize; n]; n];
    let mut mul = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            add[i][j] = get(parent.add(embed[i], embed[j]))?;
            mul[i][j] = get(parent.mul(embed[i], embed[j]))?;
        }
    }
    if !locate.contains_key(&one) {
        return Err(RingError::NoOne);
    }
    let ring = FiniteRing::from_tables(&add, &mul)?;
    if ring.one() != locate[&one] {
        return Err(RingError::NoOne);
    }
    let labels = embed.iter().map(|&old| parent.label(old)).collect();
    Ok(Subring { ring: ring.with_labels(labels), embed, locate })
}

/// Corner ring `e·R` for an idempotent `e`, whose unit is `e`.
pub fn corner_ring(parent: &FiniteRing, e: usize) -> Result<Subring, RingError> {
    if !parent.is_idempotent(e) {
        return Err(RingError::AxiomFailed {
            axiom: "idempotent",
            witness: format!("e = {e}"),
        });
    }
    let members: Vec<usize> = parent
        .elements()
        .filter(|&x| parent.mul(e, x) == x)
        .collect();
    subring(parent, &members, e)
}

/// Quotient ring `R/I` with projection and per-class representatives.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub ring: FiniteRing,
    /// Parent index → class index.
    pub project: Vec<usize>,
    /// Class index → least parent representative.
    pub class_rep: Vec<usize>,
}

pub fn quotient_ring(parent: &FiniteRing, ideal: &ElemSet) -> Result<QuotientRing, RingError> {
    verify_ideal(parent, ideal)?;
    let mut project = vec![usize::MAX; parent.order()];
    let mut class_rep = Vec::new();
    for x in parent.elements() {
        if project[x] != usize::MAX {
            continue;
        }
        let c = class_rep.len();
        for i in ideal.ones() {
            project[parent.add(x, i)] = c;
        }
        class_rep.push(x);
    }
    let n = class_rep.len();
    let mut add = vec![vec![0usize; n]; n];
    let mut mul = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            add[i][j] = project[parent.add(class_rep[i], class_rep[j])];
            mul[i][j] = project[parent.mul(class_rep[i], class_rep[j])];
        }
    }
    let ring = FiniteRing::from_tables(&add, &mul)?;
    let labels = class_rep.iter().map(|&r| format!("[{}]", parent.label(r))).collect();
    Ok(QuotientRing { ring: ring.with_labels(labels), project, class_rep })
}

/// Check that a bitset is an ideal: contains 0, closed under addition and
/// under multiplication by arbitrary ring elements.
pub fn verify_ideal(ring: &FiniteRing, set: &ElemSet) -> Result<(), RingError> {
    if !set.contains(ring.zero()) {
        return Err(RingError::NotAnIdeal { witness: "missing 0".to_string() });
    }
    for a in set.ones() {
        for b in set.ones() {
            let s = ring.add(a, b);
            if !set.contains(s) {
                return Err(RingError::NotAnIdeal { witness: format!("{a} + {b} = {s}") });
            }
        }
        for r in ring.elements() {
            let p = ring.mul(r, a);
            if !set.contains(p) {
                return Err(RingError::NotAnIdeal { witness: format!("{r} · {a} = {p}") });
            }
        }
    }
    Ok(())
}

/// The ideal generated by a set of elements.
pub fn ideal_closure(ring: &FiniteRing, generators: &[usize]) -> ElemSet {
    let n = ring.order();
    let mut set = ElemSet::with_capacity(n);
    set.insert(ring.zero());
    let mut members = vec![ring.zero()];
    let mut queue: Vec<usize> = Vec::new();
    for &g in generators {
        for r in ring.elements() {
            queue.push(ring.mul(r, g));
        }
    }
    while let Some(x) = queue.pop() {
        if set.contains(x) {
            continue;
        }
        set.insert(x);
        // Multiples of x are in the span of multiples already queued for x's
        // generators only when x is itself a generator multiple; for safety
        // close under both operations.
        for r in ring.elements() {
            queue.push(ring.mul(r, x));
        }
        for i in 0..members.len() {
            queue.push(ring.add(members[i], x));
        }
        members.push(x);
    }
    set
}

/// Sum `I + J = {a + b}` of two ideals (again an ideal).
pub fn ideal_sum(ring: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut out = ElemSet::with_capacity(ring.order());
    for x in a.ones() {
        for y in b.ones() {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// All ideals of the ring, as bitsets, deterministically ordered by
/// (cardinality, bitset).  Errors if the ring order exceeds `bound`.
pub fn enumerate_ideals(ring: &FiniteRing, bound: usize) -> Result<Vec<ElemSet>, RingError> {
    if ring.order() > bound {
        return Err(RingError::OrderBoundExceeded { order: ring.order(), bound });
    }
    // Principal ideals; every ideal is a finite sum of these.
    let mut principals: Vec<ElemSet> = Vec::new();
    for x in ring.elements() {
        let p = ideal_closure(ring, &[x]);
        if !principals.contains(&p) {
            principals.push(p);
        }
    }
    let mut found: Vec<ElemSet> = vec![ideal_closure(ring, &[])];
    let mut frontier: Vec<ElemSet> = found.clone();
    while let Some(i) = frontier.pop() {
        for p in &principals {
            if p.is_subset(&i) {
                continue;
            }
            let j = ideal_sum(ring, &i, p);
            if !found.contains(&j) {
                found.push(j.clone());
                frontier.push(j);
            }
        }
    }
    found.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    Ok(found)
}

/// Whether an ideal is prime: proper, and `xy ∈ I ⟹ x ∈ I ∨ y ∈ I`.
pub fn is_prime_ideal(ring: &FiniteRing, ideal: &ElemSet) -> Result<bool, RingError> {
    verify_ideal(ring, ideal)?;
    if ideal.contains(ring.one()) {
        return Err(RingError::ImproperIdeal);
    }
    for x in ring.elements() {
        if ideal.contains(x) {
            continue;
        }
        for y in ring.elements() {
            if ideal.contains(y) {
                continue;
            }
            if ideal.contains(ring.mul(x, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pretty member list of an ideal using ring labels.
pub fn ideal_label(ring: &FiniteRing, set: &ElemSet) -> String {
    if set.count_ones(..) == ring.order() {
        return "(1)".to_string();
    }
    let members: Vec<String> = set.ones().map(|x| ring.label(x)).collect();
    format!("{{{}}}", members.join(","))
}

/// Make an [`ElemSet`] from explicit members.
pub fn elem_set(order: usize, members: &[usize]) -> ElemSet {
    let mut s = ElemSet::with_capacity(order);
    for &m in members {
        s.insert(m);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_and_field_constructors_validate() {
        let z4 = zn(4).unwrap();
        assert_eq!(z4.order(), 4);
        assert_eq!(z4.zero(), 0);
        assert_eq!(z4.one(), 1);
        assert!(!z4.is_field());
        assert!(zn(5).unwrap().is_field());
        for q in [2usize, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = fq(q).unwrap();
            assert_eq!(f.order(), q);
            assert!(f.is_field(), "F_{q} should be a field");
        }
        assert!(matches!(fq(6), Err(RingError::UnsupportedFieldOrder { q: 6 })));
        assert!(matches!(fq(32), Err(RingError::UnsupportedFieldOrder { .. })));
    }

    #[test]
    fn f4_generator_satisfies_its_minimal_polynomial() {
        let f4 = fq(4).unwrap();
        // Element 2 encodes t; t² + t + 1 = 0.
        let t = 2;
        let t2 = f4.mul(t, t);
        assert_eq!(f4.add(f4.add(t2, t), f4.one()), f4.zero());
        assert_eq!(f4.label(3), "t+1");
        // Frobenius x ↦ x² is additive on F4.
        for x in f4.elements() {
            for y in f4.elements() {
                let lhs = f4.mul(f4.add(x, y), f4.add(x, y));
                let rhs = f4.add(f4.mul(x, x), f4.mul(y, y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        // Multiplication not commutative.
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![1, 1]];
        assert!(matches!(
            FiniteRing::from_tables(&add, &mul),
            Err(RingError::AxiomFailed { axiom: "multiplicative commutativity", .. })
        ));
        // Boolean OR as addition has no inverses.
        let or = vec![vec![0, 1], vec![1, 1]];
        let and = vec![vec![0, 0], vec![0, 1]];
        let err = FiniteRing::from_tables(&or, &and).unwrap_err();
        assert!(matches!(err, RingError::NoNegative { element: 1 }));
    }

    #[test]
    fn product_encode_decode_roundtrip() {
        let z4 = zn(4).unwrap();
        let f2 = fq(2).unwrap();
        let p = ProductRing::new(&[&z4, &f2]).unwrap();
        assert_eq!(p.ring.order(), 8);
        for x in 0..8 {
            assert_eq!(p.encode(&p.decode(x)), x);
        }
        // Componentwise operations.
        let a = p.encode(&[3, 1]);
        let b = p.encode(&[2, 1]);
        assert_eq!(p.ring.add(a, b), p.encode(&[1, 0]));
        assert_eq!(p.ring.mul(a, b), p.encode(&[2, 1]));
        assert_eq!(p.ring.one(), p.encode(&[1, 1]));
    }

    #[test]
    fn quotient_of_z4_by_two_z4() {
        let z4 = zn(4).unwrap();
        let ideal = elem_set(4, &[0, 2]);
        let q = quotient_ring(&z4, &ideal).unwrap();
        assert_eq!(q.ring.order(), 2);
        assert_eq!(q.project[0], q.project[2]);
        assert_ne!(q.project[0], q.project[1]);
    }

    #[test]
    fn corner_ring_of_split_idempotent() {
        let f2 = fq(2).unwrap();
        let p = ProductRing::new(&[&f2, &f2]).unwrap();
        let e = p.encode(&[1, 0]);
        let c = corner_ring(&p.ring, e).unwrap();
        assert_eq!(c.ring.order(), 2);
        assert_eq!(c.embed[c.ring.one()], e);
    }

    #[test]
    fn ideal_enumeration_counts() {
        let z4 = zn(4).unwrap();
        let ideals = enumerate_ideals(&z4, 64).unwrap();
        assert_eq!(ideals.len(), 3); // 0, (2), Z/4
        let f2 = fq(2).unwrap();
        assert_eq!(enumerate_ideals(&f2, 64).unwrap().len(), 2);
        let z12 = zn(12).unwrap();
        // Ideals of Z/12 correspond to divisors of 12.
        assert_eq!(enumerate_ideals(&z12, 64).unwrap().len(), 6);
        let p = ProductRing::new(&[&f2, &f2]).unwrap();
        assert_eq!(enumerate_ideals(&p.ring, 64).unwrap().len(), 4);
        for i in enumerate_ideals(&p.ring, 64).unwrap() {
            verify_ideal(&p.ring, &i).unwrap();
        }
    }

    #[test]
    fn prime_ideal_tests() {
        let z12 = zn(12).unwrap();
        let ideals = enumerate_ideals(&z12, 64).unwrap();
        let primes: Vec<&ElemSet> = ideals
            .iter()
            .filter(|i| is_prime_ideal(&z12, i) == Ok(true))
            .collect();
        // (2) and (3) are the primes of Z/12.
        assert_eq!(primes.len(), 2);
        let sizes: Vec<usize> = primes.iter().map(|i| i.count_ones(..)).collect();
        assert_eq!(sizes, vec![4, 6]);
        // Zero ideal of a field is prime; unit ideal is improper.
        let f4 = fq(4).unwrap();
        assert_eq!(is_prime_ideal(&f4, &elem_set(4, &[0])), Ok(true));
        assert!(matches!(
            is_prime_ideal(&f4, &elem_set(4, &[0, 1, 2, 3])),
            Err(RingError::ImproperIdeal)
        ));
    }

    #[test]
    fn closure_agrees_with_bruteforce_minimal_ideal() {
        for ring in [zn(8).unwrap(), zn(12).unwrap(), fq(9).unwrap()] {
            let all = enumerate_ideals(&ring, 64).unwrap();
            for x in ring.elements() {
                let closed = ideal_closure(&ring, &[x]);
                let minimal = all
                    .iter()
                    .filter(|i| i.contains(x))
                    .fold(None::<ElemSet>, |acc, i| match acc {
                        None => Some(i.clone()),
                        Some(a) => {
                            let mut inter = a.clone();
                            inter.intersect_with(i);
                            Some(inter)
                        }
                    })
                    .unwrap();
                assert_eq!(closed, minimal);
            }
        }
    }

    #[test]
    fn one_element_ring_is_legal() {
        let r = FiniteRing::from_tables(&[vec![0]], &[vec![0]]).unwrap();
        assert_eq!(r.zero(), r.one());
        assert_eq!(enumerate_ideals(&r, 64).unwrap().len(), 1);
    }
}
