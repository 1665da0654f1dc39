//! Burnside rings `A(H)` for all subgroups `H ≤ G`, assembled into the levels
//! of the Burnside Tambara functor: marks, multiplication, transfers,
//! restrictions, conjugations, multiplicative norms, and the prime ideals
//! `p[K,p]` given levelwise by
//!
//! `p[K,p](G/H) = ⋂ { Ker(φ_{H,p}^I) : I ≤ H, I subconjugate in G to K }`
//!
//! where `φ_{H,p}^I(X) = |X^I| mod p` (`p = 0` meaning no reduction).
//!
//! `A(H)` has basis the `H`-conjugacy classes of subgroups `K ≤ H` via
//! `[H/K]`; everything is exact integer arithmetic on mark vectors, with the
//! table of marks kept lower triangular by ordering classes by subgroup order.

use crate::groups::{Subgroup, SubgroupLattice};
use crate::intmat::{congruence_kernel, IntScalar, Lattice};
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("mark vector {marks:?} at level {level} is not integral in the transitive basis")]
    NonIntegralResult { level: usize, marks: String },
    #[error("{p} is neither zero nor a prime")]
    InvalidPrime { p: u64 },
    #[error("subgroup {sub} is not contained in level {level}")]
    NotASubgroupOfLevel { sub: usize, level: usize },
}

/// The Burnside ring of one subgroup `H`, in the transitive basis.
#[derive(Debug, Clone)]
pub struct BurnsideLevel<T> {
    /// Lattice index of `H` itself.
    pub sub: usize,
    /// `H`-conjugacy classes of subgroups of `H` (lattice indices, ascending),
    /// ordered by (order of rep, rep bitset) so the table of marks is lower
    /// triangular.
    pub classes: Vec<Vec<usize>>,
    /// Least lattice index per class.
    pub reps: Vec<usize>,
    class_pos: HashMap<usize, usize>,
    /// `marks[k][i] = |(H/K_k)^{I_i}|`.
    pub marks: Vec<Vec<T>>,
}

impl<T: IntScalar> BurnsideLevel<T> {
    /// Number of basis elements (subgroup classes).
    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// Class position of a subgroup of this level, by lattice index.
    pub fn class_pos(&self, sub: usize) -> Option<usize> {
        self.class_pos.get(&sub).copied()
    }

    /// Mark vector `(|X^{I_i}|)_i` of a coordinate vector.
    pub fn mark_vec(&self, coords: &[T]) -> Vec<T> {
        assert_eq!(coords.len(), self.rank());
        (0..self.rank())
            .map(|i| {
                coords
                    .iter()
                    .zip(&self.marks)
                    .fold(T::zero(), |acc, (c, row)| acc + c.clone() * row[i].clone())
            })
            .collect()
    }

    /// Solve for coordinates from a mark vector by back-substitution along
    /// the lower-triangular table of marks.
    pub fn coords_from_marks(&self, marks: &[T]) -> Result<Vec<T>, BurnsideError> {
        assert_eq!(marks.len(), self.rank());
        let n = self.rank();
        let mut coords = vec![T::zero(); n];
        let mut remaining: Vec<T> = marks.to_vec();
        for k in (0..n).rev() {
            let diag = self.marks[k][k].clone();
            let (q, r) = remaining[k].div_rem(&diag);
            if !r.is_zero() {
                return Err(BurnsideError::NonIntegralResult {
                    level: self.sub,
                    marks: format!("{marks:?}"),
                });
            }
            coords[k] = q.clone();
            for i in 0..=k {
                let sub = q.clone() * self.marks[k][i].clone();
                remaining[i] = remaining[i].clone() - sub;
            }
        }
        Ok(coords)
    }
}

/// All Burnside-ring levels of a group, with the Tambara structure maps.
#[derive(Debug)]
pub struct BurnsideFunctor<T> {
    lat: Arc<SubgroupLattice>,
    levels: Vec<BurnsideLevel<T>>,
}

impl<T: IntScalar> BurnsideFunctor<T> {
    pub fn new(lat: Arc<SubgroupLattice>) -> BurnsideFunctor<T> {
        let levels = (0..lat.len())
            .map(|h| {
                let (mut classes, _) = lat.classes_within(h);
                classes.sort_by_key(|cls| {
                    let rep = cls[0];
                    (lat.subgroup(rep).order(), lat.subgroup(rep).bits())
                });
                let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
                let class_pos: HashMap<usize, usize> = classes
                    .iter()
                    .enumerate()
                    .flat_map(|(pos, cls)| cls.iter().map(move |&s| (s, pos)))
                    .collect();
                let marks: Vec<Vec<T>> = reps
                    .iter()
                    .map(|&k| {
                        reps.iter()
                            .map(|&i| {
                                T::from_usize(count_fixed_cosets(&lat, h, k, i))
                                    .expect("mark fits in scalar")
                            })
                            .collect()
                    })
                    .collect();
                BurnsideLevel { sub: h, classes, reps, class_pos, marks }
            })
            .collect();
        BurnsideFunctor { lat, levels }
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lat
    }

    pub fn level(&self, h: usize) -> &BurnsideLevel<T> {
        &self.levels[h]
    }

    /// The additive unit.
    pub fn zero(&self, h: usize) -> Vec<T> {
        vec![T::zero(); self.levels[h].rank()]
    }

    /// The multiplicative unit `[H/H]`.
    pub fn one(&self, h: usize) -> Vec<T> {
        let mut v = self.zero(h);
        let pos = self.levels[h].class_pos(h).expect("H is a subgroup of itself");
        v[pos] = T::one();
        v
    }

    /// The basis element `[H/K]` at level `H`.
    pub fn basis_elt(&self, h: usize, k: usize) -> Result<Vec<T>, BurnsideError> {
        let pos = self.levels[h]
            .class_pos(k)
            .ok_or(BurnsideError::NotASubgroupOfLevel { sub: k, level: h })?;
        let mut v = self.zero(h);
        v[pos] = T::one();
        Ok(v)
    }

    pub fn add(&self, _h: usize, a: &[T], b: &[T]) -> Vec<T> {
        a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
    }

    pub fn neg(&self, _h: usize, a: &[T]) -> Vec<T> {
        a.iter().map(|x| -x.clone()).collect()
    }

    /// Multiplication: marks multiply pointwise.
    pub fn mul(&self, h: usize, a: &[T], b: &[T]) -> Result<Vec<T>, BurnsideError> {
        let level = &self.levels[h];
        let ma = level.mark_vec(a);
        let mb = level.mark_vec(b);
        let prod: Vec<T> = ma.into_iter().zip(mb).map(|(x, y)| x * y).collect();
        level.coords_from_marks(&prod)
    }

    /// Transfer (induction) `A(K) → A(H)`: `[K/L] ↦ [H/L]`.
    pub fn tr(&self, k: usize, h: usize, coords: &[T]) -> Vec<T> {
        debug_assert!(self.lat.is_sub(k, h));
        let src = &self.levels[k];
        let dst = &self.levels[h];
        let mut out = self.zero(h);
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pos = dst.class_pos(src.reps[i]).expect("subgroup of K is one of H");
            out[pos] = out[pos].clone() + c.clone();
        }
        out
    }

    /// Restriction `A(H) → A(K)` by the double-coset formula:
    /// `[H/L] ↦ Σ_{KgL ⊆ H} [K / (K ∩ gLg⁻¹)]`.
    pub fn res(&self, k: usize, h: usize, coords: &[T]) -> Vec<T> {
        debug_assert!(self.lat.is_sub(k, h));
        let src = &self.levels[h];
        let dst = &self.levels[k];
        let mut out = self.zero(k);
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let l = src.reps[i];
            let dc = self.lat.double_cosets(k, l, h);
            for t in 0..dc.reps.len() {
                let stab = self.lat.stabilizer_in_left(&dc, t);
                let pos = dst.class_pos(stab).expect("stabilizer lies in K");
                out[pos] = out[pos].clone() + c.clone();
            }
        }
        out
    }

    /// Conjugation `A(H) → A(gHg⁻¹)`: `[H/L] ↦ [gHg⁻¹ / gLg⁻¹]`.
    pub fn conj(&self, g: usize, h: usize, coords: &[T]) -> Vec<T> {
        let src = &self.levels[h];
        let target = self.lat.conjugate(g, h);
        let dst = &self.levels[target];
        let mut out = self.zero(target);
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let moved = self.lat.conjugate(g, src.reps[i]);
            let pos = dst.class_pos(moved).expect("conjugate subgroup lies in target");
            out[pos] = out[pos].clone() + c.clone();
        }
        out
    }

    /// Multiplicative norm `A(K) → A(H)` through marks:
    /// `mark_I(Nm x) = Π_{ItK ⊆ H} mark_{K ∩ t⁻¹It}(x)`.
    pub fn norm(&self, k: usize, h: usize, coords: &[T]) -> Result<Vec<T>, BurnsideError> {
        debug_assert!(self.lat.is_sub(k, h));
        let src = &self.levels[k];
        let dst = &self.levels[h];
        let src_marks = src.mark_vec(coords);
        let marks: Vec<T> = dst
            .reps
            .iter()
            .map(|&i_rep| {
                let dc = self.lat.double_cosets(i_rep, k, h);
                (0..dc.reps.len()).fold(T::one(), |acc, t| {
                    let stab = self.lat.stabilizer_in_right(&dc, t);
                    let pos = src.class_pos(stab).expect("stabilizer lies in K");
                    acc * src_marks[pos].clone()
                })
            })
            .collect();
        dst.coords_from_marks(&marks)
    }

    /// The mark homomorphism `φ_{H,p}^I`: the `I`-mark, reduced mod `p` when
    /// `p ≥ 2`.
    pub fn mark_hom(&self, h: usize, i_sub: usize, p: u64, coords: &[T]) -> Result<T, BurnsideError> {
        let level = &self.levels[h];
        let pos = level
            .class_pos(i_sub)
            .ok_or(BurnsideError::NotASubgroupOfLevel { sub: i_sub, level: h })?;
        let value = level.mark_vec(coords)[pos].clone();
        if p == 0 {
            Ok(value)
        } else {
            let pt = T::from_u64(p).expect("modulus fits in scalar");
            Ok(value.mod_floor(&pt))
        }
    }

    /// The level `p[K,p](·/H)` as an integer lattice in the transitive basis.
    pub fn prime_level(&self, k: usize, p: u64, h: usize) -> Result<Lattice<T>, BurnsideError> {
        check_prime(p)?;
        let level = &self.levels[h];
        let constraints: Vec<Vec<T>> = (0..level.rank())
            .filter(|&i| self.lat.is_subconjugate(level.reps[i], k))
            .map(|i| (0..level.rank()).map(|kk| level.marks[kk][i].clone()).collect())
            .collect();
        Ok(congruence_kernel(level.rank(), &constraints, p))
    }

    /// The matrix (rows indexed by output coordinates) of the linear map
    /// `A(H) → A(K)` given by conjugating with `g` and then restricting:
    /// `x ↦ Res^{gHg⁻¹}_K (c_g x)`, defined when `K ≤ gHg⁻¹`.
    pub fn res_conj_matrix(&self, g: usize, h: usize, k: usize) -> Vec<Vec<T>> {
        let conj_h = self.lat.conjugate(g, h);
        debug_assert!(self.lat.is_sub(k, conj_h));
        let n_in = self.levels[h].rank();
        let n_out = self.levels[k].rank();
        let mut cols: Vec<Vec<T>> = Vec::with_capacity(n_in);
        for j in 0..n_in {
            let mut basis = self.zero(h);
            basis[j] = T::one();
            let moved = self.conj(g, h, &basis);
            cols.push(self.res(k, conj_h, &moved));
        }
        (0..n_out)
            .map(|row| (0..n_in).map(|col| cols[col][row].clone()).collect())
            .collect()
    }

    /// Build the full prime `p[K,p]` with one lattice per conjugacy class
    /// representative (the remaining levels are conjugates).
    pub fn prime(&self, k: usize, p: u64) -> Result<BurnsidePrime<T>, BurnsideError> {
        check_prime(p)?;
        let levels = self
            .lat
            .class_reps()
            .iter()
            .map(|&h| self.prime_level(k, p, h))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BurnsidePrime { k_class: self.lat.class_of(k), p, levels })
    }

    /// Pretty-print an element in the transitive basis.
    pub fn display_elt(&self, h: usize, coords: &[T]) -> String {
        let level = &self.levels[h];
        let mut terms = Vec::new();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let orbit = format!("[{}/{}]", self.lat.label(h), self.lat.label(level.reps[i]));
            if c.is_one() {
                terms.push(orbit);
            } else {
                terms.push(format!("{c}{orbit}"));
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// `|(H/K)^I|`: the number of cosets `hK ⊆ H` with `I·hK = hK`, i.e. with
/// `I ⊆ hKh⁻¹`.
fn count_fixed_cosets(lat: &SubgroupLattice, h: usize, k: usize, i: usize) -> usize {
    let i_sub = lat.subgroup(i);
    lat.coset_reps(k, h)
        .into_iter()
        .filter(|&rep| {
            let conj_k = lat.conjugate(rep, k);
            i_sub.is_subset(&lat.subgroup(conj_k))
        })
        .count()
}

fn check_prime(p: u64) -> Result<(), BurnsideError> {
    let ok = p == 0 || (p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)));
    if ok {
        Ok(())
    } else {
        Err(BurnsideError::InvalidPrime { p })
    }
}

/// How two ideals (or ideal levels) compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOrder {
    Equal,
    StrictlyInside,
    StrictlyContains,
    Incomparable,
}

/// A Burnside prime ideal `p[K,p]`, stored by its lattice levels at the
/// conjugacy-class representatives of the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsidePrime<T> {
    /// Conjugacy class index of `K`.
    pub k_class: usize,
    pub p: u64,
    /// One lattice per class representative of the ambient group, in the
    /// order of `lat.class_reps()`.
    pub levels: Vec<Lattice<T>>,
}

impl<T: IntScalar> BurnsidePrime<T> {
    pub fn compare(&self, other: &BurnsidePrime<T>) -> IdealOrder {
        let fwd = self
            .levels
            .iter()
            .zip(&other.levels)
            .all(|(a, b)| b.contains_lattice(a));
        let bwd = self
            .levels
            .iter()
            .zip(&other.levels)
            .all(|(a, b)| a.contains_lattice(b));
        match (fwd, bwd) {
            (true, true) => IdealOrder::Equal,
            (true, false) => IdealOrder::StrictlyInside,
            (false, true) => IdealOrder::StrictlyContains,
            (false, false) => IdealOrder::Incomparable,
        }
    }

    pub fn symbol(&self, lat: &SubgroupLattice) -> String {
        let rep = lat.class_reps()[self.k_class];
        format!("p[{},{}]", lat.label(rep), self.p)
    }
}

/// Decompose a finite `H`-set, given by an action of the members of `H` on
/// `0..n`, into transitive-orbit coordinates of the Burnside level of `H`.
///
/// This is the independent set-theoretic oracle used to certify `mul` and
/// `norm`: orbits are counted directly, classifying each by its stabilizer.
pub fn orbit_coords<T: IntScalar>(
    funct: &BurnsideFunctor<T>,
    h: usize,
    n: usize,
    act: &dyn Fn(usize, usize) -> usize,
) -> Vec<T> {
    let lat = funct.lattice();
    let level = funct.level(h);
    let members: Vec<usize> = lat.subgroup(h).members().collect();
    let mut seen = vec![false; n];
    let mut coords = vec![T::zero(); level.rank()];
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x] = true;
        let mut cursor = 0;
        while cursor < orbit.len() {
            let y = orbit[cursor];
            cursor += 1;
            for &g in &members {
                let z = act(g, y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
        }
        let stab = Subgroup::from_members(members.iter().copied().filter(|&g| act(g, x) == x));
        let stab_idx = lat.index_of(stab).expect("stabilizer is a subgroup");
        let pos = level.class_pos(stab_idx).expect("stabilizer lies in H");
        coords[pos] = coords[pos].clone() + T::one();
    }
    coords
}

/// The transitive `H`-set `H/K` as `(size, action)` on coset indices.
pub fn transitive_set(
    lat: &SubgroupLattice,
    h: usize,
    k: usize,
) -> (usize, impl Fn(usize, usize) -> usize + '_) {
    let reps = lat.coset_reps(k, h);
    let group = lat.group().clone();
    let k_sub = lat.subgroup(k);
    let index_of = move |elem: usize, reps: &[usize]| -> usize {
        reps.iter()
            .position(|&r| {
                // elem·K == r·K ⟺ r⁻¹·elem ∈ K
                k_sub.contains(group.mul(group.inv(r), elem))
            })
            .expect("coset reps cover H")
    };
    let group2 = lat.group().clone();
    let reps2 = reps.clone();
    let act = move |g: usize, i: usize| -> usize {
        let moved = group2.mul(g, reps2[i]);
        index_of(moved, &reps2)
    };
    (reps.len(), act)
}

/// Oracle for the norm `A(K) → A(H)` on an effective element: build the
/// `K`-set `X` from non-negative coordinates, form the coinduced `H`-set
/// `Map_K(H, X)` explicitly, and decompose it into orbits.
///
/// A `K`-equivariant map `f : H → X` is freely determined by its values on
/// right-coset representatives `K\H`; `H` acts by `(h'·f)(h) = f(h·h')`.
pub fn norm_oracle<T: IntScalar>(
    funct: &BurnsideFunctor<T>,
    k: usize,
    h: usize,
    coords: &[T],
) -> Vec<T> {
    let lat = funct.lattice();
    let group = lat.group().clone();
    // Build X as a disjoint union of cosets K/L with an explicit action.
    let level_k = funct.level(k);
    let mut piece_sizes: Vec<usize> = Vec::new();
    let mut piece_actions: Vec<Box<dyn Fn(usize, usize) -> usize>> = Vec::new();
    for (i, c) in coords.iter().enumerate() {
        let mut copies = c.clone();
        assert!(!copies.is_negative(), "oracle requires an effective element");
        while copies > T::zero() {
            let (size, act) = transitive_set(lat, k, level_k.reps[i]);
            piece_sizes.push(size);
            piece_actions.push(Box::new(act));
            copies = copies - T::one();
        }
    }
    let offsets: Vec<usize> = piece_sizes
        .iter()
        .scan(0usize, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let x_size: usize = piece_sizes.iter().sum();
    let act_x = |g: usize, e: usize| -> usize {
        let piece = offsets.iter().rposition(|&o| o <= e).unwrap();
        offsets[piece] + piece_actions[piece](g, e - offsets[piece])
    };
    // Right-coset representatives K\H: cosets K·h.
    let k_sub = lat.subgroup(k);
    let h_sub = lat.subgroup(h);
    let mut seen = vec![false; group.order()];
    let mut rreps: Vec<usize> = Vec::new();
    for cand in std::iter::once(group.identity()).chain(h_sub.members()) {
        if seen[cand] {
            continue;
        }
        for x in k_sub.members() {
            seen[group.mul(x, cand)] = true;
        }
        rreps.push(cand);
    }
    let rep_pos_and_k = |elem: usize| -> (usize, usize) {
        for (j, &r) in rreps.iter().enumerate() {
            // elem ∈ K·r ⟺ elem·r⁻¹ ∈ K
            let kk = group.mul(elem, group.inv(r));
            if k_sub.contains(kk) {
                return (j, kk);
            }
        }
        unreachable!("right-coset reps cover H")
    };
    // Functions f : rreps → X, encoded in mixed radix.
    let nf = x_size.checked_pow(rreps.len() as u32).expect("function space fits");
    let decode = |mut code: usize| -> Vec<usize> {
        let mut vals = vec![0usize; rreps.len()];
        for v in vals.iter_mut().rev() {
            *v = code % x_size;
            code /= x_size;
        }
        vals
    };
    let encode = |vals: &[usize]| -> usize { vals.iter().fold(0, |acc, &v| acc * x_size + v) };
    let act_f = |hp: usize, code: usize| -> usize {
        let vals = decode(code);
        let moved: Vec<usize> = rreps
            .iter()
            .map(|&r| {
                // (h'·f)(r) = f(r·h') and r·h' = k·r₂.
                let (j, kk) = rep_pos_and_k(group.mul(r, hp));
                act_x(kk, vals[j])
            })
            .collect();
        encode(&moved)
    };
    orbit_coords(funct, h, nf, &act_f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, dihedral, quaternion, symmetric, SubgroupLattice};
    use crate::Int;

    fn functor_of(g: crate::groups::FiniteGroup) -> BurnsideFunctor<Int> {
        BurnsideFunctor::new(Arc::new(SubgroupLattice::new(Arc::new(g)).unwrap()))
    }

    #[test]
    fn table_of_marks_c2() {
        let f = functor_of(cyclic(2).unwrap());
        let top = f.lattice().top();
        let level = f.level(top);
        assert_eq!(level.rank(), 2);
        // Row [C2/e] has marks (2, 0); row [C2/C2] has marks (1, 1).
        assert_eq!(level.marks, vec![vec![2, 0], vec![1, 1]]);
    }

    #[test]
    fn table_of_marks_diagonal_is_weyl_order() {
        for g in [cyclic(4).unwrap(), symmetric(3).unwrap(), quaternion(2).unwrap()] {
            let f = functor_of(g);
            let lat = f.lattice().clone();
            for h in 0..lat.len() {
                let level = f.level(h);
                for (k, &rep) in level.reps.iter().enumerate() {
                    let weyl = lat.weyl_reps(rep, h).len();
                    assert_eq!(level.marks[k][k], weyl as Int);
                    // Lower triangularity.
                    for i in k + 1..level.rank() {
                        assert_eq!(level.marks[k][i], 0);
                    }
                }
            }
        }
    }

    #[test]
    fn s4_lattice_statistics() {
        let f = functor_of(symmetric(4).unwrap());
        let lat = f.lattice();
        assert_eq!(lat.len(), 30);
        assert_eq!(lat.classes().len(), 11);
        assert_eq!(f.level(lat.top()).rank(), 11);
    }

    #[test]
    fn multiplication_examples() {
        let f = functor_of(cyclic(2).unwrap());
        let top = f.lattice().top();
        let free = f.basis_elt(top, f.lattice().trivial()).unwrap();
        // [C2/e]² = 2[C2/e].
        let sq = f.mul(top, &free, &free).unwrap();
        assert_eq!(sq, vec![2, 0]);
        let one = f.one(top);
        assert_eq!(f.mul(top, &one, &free).unwrap(), free);
    }

    #[test]
    fn multiplication_against_orbit_oracle() {
        for g in [cyclic(4).unwrap(), symmetric(3).unwrap(), quaternion(2).unwrap()] {
            let f = functor_of(g);
            let lat = f.lattice().clone();
            for h in 0..lat.len() {
                let level_rank = f.level(h).rank();
                for a in 0..level_rank {
                    for b in 0..level_rank {
                        let ra = f.level(h).reps[a];
                        let rb = f.level(h).reps[b];
                        let (na, act_a) = transitive_set(&lat, h, ra);
                        let (nb, act_b) = transitive_set(&lat, h, rb);
                        let act = |g: usize, e: usize| -> usize {
                            let (i, j) = (e / nb, e % nb);
                            act_a(g, i) * nb + act_b(g, j)
                        };
                        let expected = orbit_coords(&f, h, na * nb, &act);
                        let mut ea = f.zero(h);
                        ea[a] = 1;
                        let mut eb = f.zero(h);
                        eb[b] = 1;
                        let got = f.mul(h, &ea, &eb).unwrap();
                        assert_eq!(got, expected, "level {h} basis {a}·{b}");
                    }
                }
            }
        }
    }

    #[test]
    fn s3_product_of_point_stabilizer_and_rotation_orbit() {
        let f = functor_of(symmetric(3).unwrap());
        let lat = f.lattice().clone();
        let top = lat.top();
        let c2 = (0..lat.len()).find(|&i| lat.subgroup(i).order() == 2).unwrap();
        let c3 = (0..lat.len()).find(|&i| lat.subgroup(i).order() == 3).unwrap();
        let a = f.basis_elt(top, c2).unwrap();
        let b = f.basis_elt(top, c3).unwrap();
        // [S3/C2]·[S3/C3] = [S3/e]: a 6-element orbit.
        let prod = f.mul(top, &a, &b).unwrap();
        assert_eq!(prod, f.basis_elt(top, lat.trivial()).unwrap());
    }

    #[test]
    fn frobenius_reciprocity_on_basis() {
        for g in [cyclic(4).unwrap(), symmetric(3).unwrap(), quaternion(2).unwrap()] {
            let f = functor_of(g);
            let lat = f.lattice().clone();
            for h in 0..lat.len() {
                for k in 0..lat.len() {
                    if !lat.is_sub(k, h) {
                        continue;
                    }
                    for i in 0..f.level(k).rank() {
                        for j in 0..f.level(h).rank() {
                            let mut x = f.zero(k);
                            x[i] = 1;
                            let mut y = f.zero(h);
                            y[j] = 1;
                            let lhs = f.tr(k, h, &f.mul(k, &x, &f.res(k, h, &y)).unwrap());
                            let rhs = f.mul(h, &f.tr(k, h, &x), &y).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mackey_formula_res_tr_on_basis() {
        for g in [symmetric(3).unwrap(), dihedral(4).unwrap()] {
            let f = functor_of(g);
            let lat = f.lattice().clone();
            for h in 0..lat.len() {
                for l in 0..lat.len() {
                    if !lat.is_sub(l, h) {
                        continue;
                    }
                    for k in 0..lat.len() {
                        if !lat.is_sub(k, h) {
                            continue;
                        }
                        for i in 0..f.level(k).rank() {
                            let mut x = f.zero(k);
                            x[i] = 1;
                            let lhs = f.res(l, h, &f.tr(k, h, &x));
                            // Σ over double cosets LgK in H.
                            let dc = lat.double_cosets(l, k, h);
                            let mut rhs = f.zero(l);
                            for t in 0..dc.reps.len() {
                                let g_rep = dc.reps[t];
                                let stab = lat.stabilizer_in_left(&dc, t);
                                let moved = f.conj(g_rep, k, &x);
                                let conj_k = lat.conjugate(g_rep, k);
                                let restricted = f.res(stab, conj_k, &moved);
                                rhs = f.add(l, &rhs, &f.tr(stab, l, &restricted));
                            }
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn norm_from_trivial_to_c2() {
        let f = functor_of(cyclic(2).unwrap());
        let lat = f.lattice().clone();
        let (e, top) = (lat.trivial(), lat.top());
        // Nm(2) = [C2/e] + 2[C2/C2]: marks (4, 2).
        assert_eq!(f.norm(e, top, &[2]).unwrap(), vec![1, 2]);
        // Nm(n) = (n² - n)/2·[C2/e] + n·[C2/C2].
        for n in -8i64..=8 {
            let coords = f.norm(e, top, &[n]).unwrap();
            assert_eq!(coords, vec![(n * n - n) / 2, n]);
        }
        assert_eq!(f.norm(e, top, &[1]).unwrap(), f.one(top));
    }

    #[test]
    fn norm_against_coinduced_set_oracle() {
        for g in [cyclic(2).unwrap(), cyclic(4).unwrap(), symmetric(3).unwrap()] {
            let f = functor_of(g);
            let lat = f.lattice().clone();
            for h in 0..lat.len() {
                for k in 0..lat.len() {
                    if !lat.is_sub(k, h) {
                        continue;
                    }
                    let rank = f.level(k).rank();
                    // Transitive elements and sums of two basis elements.
                    let mut elements: Vec<Vec<Int>> = Vec::new();
                    for i in 0..rank {
                        let mut v = f.zero(k);
                        v[i] = 1;
                        elements.push(v);
                    }
                    for i in 0..rank {
                        for j in i..rank {
                            let mut v = f.zero(k);
                            v[i] += 1;
                            v[j] += 1;
                            elements.push(v);
                        }
                    }
                    for x in elements {
                        let got = f.norm(k, h, &x).unwrap();
                        let expected = norm_oracle(&f, k, h, &x);
                        assert_eq!(got, expected, "norm at K={k}, H={h}, x={x:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn norm_is_multiplicative_and_unital() {
        let f = functor_of(symmetric(3).unwrap());
        let lat = f.lattice().clone();
        for h in 0..lat.len() {
            for k in 0..lat.len() {
                if !lat.is_sub(k, h) {
                    continue;
                }
                assert_eq!(f.norm(k, h, &f.one(k)).unwrap(), f.one(h));
                assert_eq!(f.norm(k, h, &f.zero(k)).unwrap(), f.zero(h));
                for i in 0..f.level(k).rank() {
                    for j in 0..f.level(k).rank() {
                        let mut x = f.zero(k);
                        x[i] = 1;
                        let mut y = f.zero(k);
                        y[j] = 1;
                        let xy = f.mul(k, &x, &y).unwrap();
                        let lhs = f.norm(k, h, &xy).unwrap();
                        let rhs = f
                            .mul(h, &f.norm(k, h, &x).unwrap(), &f.norm(k, h, &y).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn prime_level_examples_for_c2() {
        let f = functor_of(cyclic(2).unwrap());
        let lat = f.lattice().clone();
        let (e, top) = (lat.trivial(), lat.top());
        // p[e,2](C2/C2) = {(a,b) : 2a + b ≡ 0 mod 2} = {b even}.
        let l = f.prime_level(e, 2, top).unwrap();
        assert_eq!(l.basis(), &[vec![1, 0], vec![0, 2]]);
        // p[C2,2] adds the constraint b ≡ 0, which changes nothing mod 2.
        let l2 = f.prime_level(top, 2, top).unwrap();
        assert_eq!(l, l2);
        // p[C2,0](C2/C2) is the zero lattice (marks are jointly injective).
        assert!(f.prime_level(top, 0, top).unwrap().is_zero());
        // p[K,p](C2/e) = pZ.
        assert_eq!(f.prime_level(e, 2, e).unwrap().basis(), &[vec![2]]);
        assert_eq!(f.prime_level(e, 0, e).unwrap().rank(), 0);
    }

    #[test]
    fn c2_prime_collision() {
        let f = functor_of(cyclic(2).unwrap());
        let lat = f.lattice().clone();
        let p_e2 = f.prime(lat.trivial(), 2).unwrap();
        let p_c22 = f.prime(lat.top(), 2).unwrap();
        assert_eq!(p_e2.compare(&p_c22), IdealOrder::Equal);
        let p_e0 = f.prime(lat.trivial(), 0).unwrap();
        assert_eq!(p_e0.compare(&p_e2), IdealOrder::StrictlyInside);
        let p_c20 = f.prime(lat.top(), 0).unwrap();
        assert_eq!(p_c20.compare(&p_e2), IdealOrder::StrictlyInside);
        assert_eq!(p_c20.compare(&p_e0), IdealOrder::StrictlyInside);
        assert_eq!(p_e0.compare(&p_c20), IdealOrder::StrictlyContains);
    }

    #[test]
    fn c12_collision_of_c2_and_c4_at_two() {
        let f = functor_of(cyclic(12).unwrap());
        let lat = f.lattice().clone();
        let c2 = (0..lat.len()).find(|&i| lat.subgroup(i).order() == 2).unwrap();
        let c4 = (0..lat.len()).find(|&i| lat.subgroup(i).order() == 4).unwrap();
        let a = f.prime(c2, 2).unwrap();
        let b = f.prime(c4, 2).unwrap();
        assert_eq!(a.compare(&b), IdealOrder::Equal);
        // But at p = 3 they differ.
        let a3 = f.prime(c2, 3).unwrap();
        let b3 = f.prime(c4, 3).unwrap();
        assert_ne!(a3.compare(&b3), IdealOrder::Equal);
    }

    #[test]
    fn generic_prime_is_zero_ideal() {
        for g in [cyclic(4).unwrap(), quaternion(2).unwrap()] {
            let f = functor_of(g);
            let lat = f.lattice().clone();
            let generic = f.prime(lat.top(), 0).unwrap();
            for level in &generic.levels {
                assert!(level.is_zero());
            }
        }
    }

    #[test]
    fn prime_levels_are_closed_under_structure_maps() {
        for g in [cyclic(4).unwrap(), symmetric(3).unwrap()] {
            let f = functor_of(g);
            let lat = f.lattice().clone();
            for &k_sub in lat.class_reps() {
                for p in [0u64, 2, 3] {
                    // Closure under res, tr, conj on lattice basis vectors;
                    // closure under norm spot-checked on small members.
                    for h in 0..lat.len() {
                        let lh = f.prime_level(k_sub, p, h).unwrap();
                        for l in 0..lat.len() {
                            if lat.is_sub(l, h) {
                                let ll = f.prime_level(k_sub, p, l).unwrap();
                                for row in lh.basis() {
                                    assert!(ll.contains(&f.res(l, h, row)));
                                }
                                for row in ll.basis() {
                                    assert!(lh.contains(&f.tr(l, h, row)));
                                    let nm = f.norm(l, h, row).unwrap();
                                    assert!(lh.contains(&nm), "norm escapes ideal");
                                }
                            }
                        }
                        for g_elem in 0..lat.group().order() {
                            let target = lat.conjugate(g_elem, h);
                            let lt = f.prime_level(k_sub, p, target).unwrap();
                            for row in lh.basis() {
                                assert!(lt.contains(&f.conj(g_elem, h, row)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_prime_rejected() {
        let f = functor_of(cyclic(2).unwrap());
        assert!(matches!(
            f.prime(0, 4),
            Err(BurnsideError::InvalidPrime { p: 4 })
        ));
        assert!(f.prime(0, 13).is_ok());
    }

    #[test]
    fn res_conj_matrix_matches_pointwise_application() {
        let f = functor_of(symmetric(3).unwrap());
        let lat = f.lattice().clone();
        for h in 0..lat.len() {
            for g in 0..lat.group().order() {
                let ch = lat.conjugate(g, h);
                for k in 0..lat.len() {
                    if !lat.is_sub(k, ch) {
                        continue;
                    }
                    let m = f.res_conj_matrix(g, h, k);
                    for j in 0..f.level(h).rank() {
                        let mut basis = f.zero(h);
                        basis[j] = 1;
                        let direct = f.res(k, ch, &f.conj(g, h, &basis));
                        let via_matrix = crate::intmat::apply_map(&m, &basis);
                        assert_eq!(direct, via_matrix);
                    }
                }
            }
        }
    }
}
