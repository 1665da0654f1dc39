//! Finite commutative rings with an action of a finite group by ring
//! automorphisms, together with the equivariant notions the spectra of
//! fixed-point functors are built from: fixed subrings, relative traces and
//! norms, invariant ideals, G-primes, and type-H idempotents.

pub mod monomial;

use crate::groups::{closure_of, FiniteGroup, Subgroup};
use crate::rings::{
    elem_set, enumerate_ideals, ideal_closure, ideal_sum, quotient_ring, subring, verify_ideal,
    ElemSet, FiniteRing, QuotientRing, RingError, Subring,
};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GRingError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("action of element {g} is not a permutation of the ring")]
    NotAPermutation { g: usize },
    #[error("action of element {g} is not a ring automorphism: {witness}")]
    NotAutomorphism { g: usize, witness: String },
    #[error("action is not a homomorphism at ({g}, {h}): {witness}")]
    NotAnAction { g: usize, h: usize, witness: String },
    #[error("ideal is not invariant: element {element} moves out under {g}")]
    NotInvariant { g: usize, element: usize },
    #[error("ideal is improper (contains 1)")]
    ImproperIdeal,
}

/// A finite commutative ring with an action of a finite group by ring
/// automorphisms.
#[derive(Debug, Clone)]
pub struct GRing {
    group: Arc<FiniteGroup>,
    pub ring: FiniteRing,
    /// `action[g][x]` = `g · x`.
    action: Vec<Vec<usize>>,
}

impl GRing {
    /// Validate that each `action[g]` is a ring automorphism and that
    /// `g ↦ action[g]` is a group homomorphism with `action[e] = id`.
    pub fn new(
        group: Arc<FiniteGroup>,
        ring: FiniteRing,
        action: Vec<Vec<usize>>,
    ) -> Result<GRing, GRingError> {
        let n = ring.order();
        if action.len() != group.order() {
            return Err(GRingError::NotAPermutation { g: action.len() });
        }
        for (g, perm) in action.iter().enumerate() {
            if perm.len() != n {
                return Err(GRingError::NotAPermutation { g });
            }
            let mut seen = vec![false; n];
            for &y in perm {
                if y >= n || seen[y] {
                    return Err(GRingError::NotAPermutation { g });
                }
                seen[y] = true;
            }
            if perm[ring.one()] != ring.one() {
                return Err(GRingError::NotAutomorphism {
                    g,
                    witness: format!("g·1 = {} ≠ 1", perm[ring.one()]),
                });
            }
            for x in ring.elements() {
                for y in ring.elements() {
                    if perm[ring.add(x, y)] != ring.add(perm[x], perm[y]) {
                        return Err(GRingError::NotAutomorphism {
                            g,
                            witness: format!("g({x} + {y}) ≠ g{x} + g{y}"),
                        });
                    }
                    if perm[ring.mul(x, y)] != ring.mul(perm[x], perm[y]) {
                        return Err(GRingError::NotAutomorphism {
                            g,
                            witness: format!("g({x} · {y}) ≠ g{x} · g{y}"),
                        });
                    }
                }
            }
        }
        let e = group.identity();
        for x in ring.elements() {
            if action[e][x] != x {
                return Err(GRingError::NotAnAction {
                    g: e,
                    h: e,
                    witness: format!("e·{x} = {}", action[e][x]),
                });
            }
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                for x in ring.elements() {
                    if action[gh][x] != action[g][action[h][x]] {
                        return Err(GRingError::NotAnAction {
                            g,
                            h,
                            witness: format!("(gh)·{x} ≠ g·(h·{x})"),
                        });
                    }
                }
            }
        }
        Ok(GRing { group, ring, action })
    }

    /// The trivial action.
    pub fn trivial(group: Arc<FiniteGroup>, ring: FiniteRing) -> GRing {
        let id: Vec<usize> = ring.elements().collect();
        let action = vec![id; group.order()];
        GRing { group, ring, action }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }

    pub fn action_rows(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = self.group.elements().map(|g| self.act(g, x)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }

    /// Isotropy subgroup `{ g : g·x = x }`.
    pub fn isotropy(&self, x: usize) -> Subgroup {
        Subgroup::from_members(self.group.elements().filter(|&g| self.act(g, x) == x))
    }

    /// Elements fixed by every member of `h`.
    pub fn fixed_members(&self, h: Subgroup) -> Vec<usize> {
        self.ring
            .elements()
            .filter(|&x| h.members().all(|g| self.act(g, x) == x))
            .collect()
    }

    /// Fixed subring `S^H` with its embedding data.
    pub fn fixed_subring(&self, h: Subgroup) -> Subring {
        let members = self.fixed_members(h);
        subring(&self.ring, &members, self.ring.one())
            .expect("fixed points form a subring")
    }

    /// Left-coset representatives of `K` in `H` (`K ≤ H` as subgroups of the
    /// acting group), identity's coset first.
    pub fn coset_reps(&self, k: Subgroup, h: Subgroup) -> Vec<usize> {
        debug_assert!(k.is_subset(&h));
        let g = self.group.as_ref();
        let mut seen = vec![false; g.order()];
        let mut reps = Vec::new();
        let order: Vec<usize> = std::iter::once(g.identity())
            .chain(h.members().filter(|&x| x != g.identity()))
            .collect();
        for &rep in &order {
            if seen[rep] {
                continue;
            }
            for x in k.members() {
                seen[g.mul(rep, x)] = true;
            }
            reps.push(rep);
        }
        reps
    }

    /// Relative trace `Σ_{hK ∈ H/K} h·x` for `x ∈ S^K`.
    pub fn relative_trace(&self, k: Subgroup, h: Subgroup, x: usize) -> usize {
        debug_assert!(k.members().all(|g| self.act(g, x) == x), "input must be K-fixed");
        let terms: Vec<usize> = self.coset_reps(k, h).iter().map(|&r| self.act(r, x)).collect();
        self.ring.sum(&terms)
    }

    /// Relative norm `Π_{hK ∈ H/K} h·x` for `x ∈ S^K`.
    pub fn relative_norm(&self, k: Subgroup, h: Subgroup, x: usize) -> usize {
        debug_assert!(k.members().all(|g| self.act(g, x) == x), "input must be K-fixed");
        let terms: Vec<usize> = self.coset_reps(k, h).iter().map(|&r| self.act(r, x)).collect();
        self.ring.product(&terms)
    }

    /// Check invariance `g·I ⊆ I` on top of the ideal axioms.
    pub fn verify_invariant_ideal(&self, set: &ElemSet) -> Result<(), GRingError> {
        verify_ideal(&self.ring, set)?;
        for x in set.ones() {
            for g in self.group.elements() {
                if !set.contains(self.act(g, x)) {
                    return Err(GRingError::NotInvariant { g, element: x });
                }
            }
        }
        Ok(())
    }

    /// Smallest invariant ideal containing the generators.
    pub fn invariant_closure(&self, generators: &[usize]) -> ElemSet {
        let orbit_gens: Vec<usize> = generators
            .iter()
            .flat_map(|&x| self.orbit(x))
            .collect();
        ideal_closure(&self.ring, &orbit_gens)
    }

    /// All invariant ideals, ordered by (cardinality, members).
    ///
    /// Every invariant ideal is a sum of invariant closures of single
    /// elements, so closing those under pairwise ideal sums is exhaustive.
    pub fn enumerate_invariant_ideals(&self, bound: usize) -> Result<Vec<ElemSet>, GRingError> {
        if self.ring.order() > bound {
            return Err(GRingError::Ring(RingError::OrderBoundExceeded {
                order: self.ring.order(),
                bound,
            }));
        }
        let mut principals: Vec<ElemSet> = Vec::new();
        for x in self.ring.elements() {
            let p = self.invariant_closure(&[x]);
            if !principals.contains(&p) {
                principals.push(p);
            }
        }
        let mut found = vec![self.invariant_closure(&[])];
        let mut frontier = found.clone();
        while let Some(i) = frontier.pop() {
            for p in &principals {
                if p.is_subset(&i) {
                    continue;
                }
                let j = ideal_sum(&self.ring, &i, p);
                if !found.contains(&j) {
                    found.push(j.clone());
                    frontier.push(j);
                }
            }
        }
        found.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        Ok(found)
    }

    /// G-prime test: the ideal is invariant, proper, and whenever
    /// `x·(g·y) ∈ I` for every `g`, one of `x, y` lies in `I`.
    pub fn is_g_prime(&self, set: &ElemSet) -> Result<bool, GRingError> {
        self.verify_invariant_ideal(set)?;
        if set.contains(self.ring.one()) {
            return Err(GRingError::ImproperIdeal);
        }
        for x in self.ring.elements() {
            if set.contains(x) {
                continue;
            }
            for y in self.ring.elements() {
                if set.contains(y) {
                    continue;
                }
                let all_in = self
                    .group
                    .elements()
                    .all(|g| set.contains(self.ring.mul(x, self.act(g, y))));
                if all_in {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether the zero ideal is G-prime.
    pub fn is_domain_like(&self) -> bool {
        if self.ring.order() == 1 {
            return false; // zero ideal is improper in the zero ring
        }
        let zero = elem_set(self.ring.order(), &[self.ring.zero()]);
        self.is_g_prime(&zero) == Ok(true)
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.ring.elements().filter(|&x| self.ring.is_idempotent(x)).collect()
    }

    /// Nonzero idempotents `d` with isotropy exactly `H` and `d·(g·d) = 0`
    /// for all `g ∉ H`, paired with that `H`.
    pub fn type_h_idempotents(&self) -> Vec<(usize, Subgroup)> {
        let zero = self.ring.zero();
        let mut out = Vec::new();
        for d in self.idempotents() {
            if d == zero {
                continue;
            }
            let iso = self.isotropy(d);
            // Isotropy of an element is closed under the group operations.
            debug_assert_eq!(closure_of(self.group.as_ref(), iso), iso);
            let orthogonal = self
                .group
                .elements()
                .filter(|&g| !iso.contains(g))
                .all(|g| self.ring.mul(d, self.act(g, d)) == zero);
            if orthogonal {
                out.push((d, iso));
            }
        }
        out
    }

    /// Clarified: no nonzero idempotent `d` has `d·(g·d) = 0` for some `g`.
    pub fn is_clarified(&self) -> bool {
        let zero = self.ring.zero();
        for d in self.idempotents() {
            if d == zero {
                continue;
            }
            for g in self.group.elements() {
                if self.ring.mul(d, self.act(g, d)) == zero {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_{gH ∈ G/H} g·d` over coset representatives; for a type-H idempotent
    /// the summands are independent of the representative choice.
    pub fn coset_orbit_sum(&self, d: usize, h: Subgroup) -> usize {
        let g_all = Subgroup::from_members(self.group.elements());
        let terms: Vec<usize> =
            self.coset_reps(h, g_all).iter().map(|&r| self.act(r, d)).collect();
        self.ring.sum(&terms)
    }

    /// Quotient by an invariant ideal, with the induced action.
    pub fn quotient(&self, set: &ElemSet) -> Result<(GRing, QuotientRing), GRingError> {
        self.verify_invariant_ideal(set)?;
        let q = quotient_ring(&self.ring, set)?;
        let action: Vec<Vec<usize>> = self
            .group
            .elements()
            .map(|g| {
                q.class_rep
                    .iter()
                    .map(|&rep| q.project[self.act(g, rep)])
                    .collect()
            })
            .collect();
        let gr = GRing::new(self.group.clone(), q.ring.clone(), action)?;
        Ok((gr, q))
    }

    /// Restrict the action along a subgroup embedding: elements of the new
    /// acting group `small` act via their images.
    pub fn restrict_action(&self, small: Arc<FiniteGroup>, elem_map: &[usize]) -> GRing {
        let action: Vec<Vec<usize>> = (0..small.order())
            .map(|g| self.action[elem_map[g]].clone())
            .collect();
        GRing { group: small, ring: self.ring.clone(), action }
    }
}

/// All ring ideals that are invariant, by filtering, for cross-checking the
/// direct enumeration.
pub fn invariant_ideals_by_filter(s: &GRing, bound: usize) -> Result<Vec<ElemSet>, GRingError> {
    let all = enumerate_ideals(&s.ring, bound)?;
    Ok(all
        .into_iter()
        .filter(|i| s.verify_invariant_ideal(i).is_ok())
        .collect())
}

/// Swap action of `C2` on a two-factor product ring (for tests and examples).
pub fn swap_action_on_square(ring: &FiniteRing, factor: usize) -> Vec<Vec<usize>> {
    // Elements encode pairs (a, b) with the first coordinate varying slowest.
    let swap: Vec<usize> = ring
        .elements()
        .map(|x| {
            let (a, b) = (x / factor, x % factor);
            b * factor + a
        })
        .collect();
    let id: Vec<usize> = ring.elements().collect();
    vec![id, swap]
}

/// The worked example G-rings used throughout the test suites and shipped as
/// CLI inputs.
pub mod samples {
    use super::{swap_action_on_square, GRing};
    use crate::groups::cyclic;
    use crate::rings::{fq, zn, ProductRing};
    use std::sync::Arc;

    /// `F₂ × F₂` with the coordinate swap as the `C₂`-action.
    pub fn f2xf2_swap() -> GRing {
        let f2 = fq(2).unwrap();
        let p = ProductRing::new(&[&f2, &f2]).unwrap();
        let c2 = Arc::new(cyclic(2).unwrap());
        let action = swap_action_on_square(&p.ring, 2);
        GRing::new(c2, p.ring, action).unwrap()
    }

    /// `F₄` with the squaring (Frobenius) automorphism as the `C₂`-action.
    pub fn f4_frobenius() -> GRing {
        let f4 = fq(4).unwrap();
        let c2 = Arc::new(cyclic(2).unwrap());
        let id: Vec<usize> = f4.elements().collect();
        let frob: Vec<usize> = f4.elements().map(|x| f4.mul(x, x)).collect();
        GRing::new(c2, f4, vec![id, frob]).unwrap()
    }

    /// `Z/4` with the trivial `C₂`-action.
    pub fn z4_trivial() -> GRing {
        GRing::trivial(Arc::new(cyclic(2).unwrap()), zn(4).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::samples::{f2xf2_swap, f4_frobenius, z4_trivial};
    use super::*;
    use crate::groups::cyclic;
    use crate::rings::{fq, is_prime_ideal, zn, ProductRing};

    #[test]
    fn validation_rejects_non_automorphism() {
        let z4 = zn(4).unwrap();
        let c2 = Arc::new(cyclic(2).unwrap());
        let id: Vec<usize> = z4.elements().collect();
        // x ↦ x + 1 is an additive bijection but not multiplicative.
        let shift: Vec<usize> = z4.elements().map(|x| (x + 1) % 4).collect();
        let err = GRing::new(c2, z4, vec![id, shift]).unwrap_err();
        assert!(matches!(err, GRingError::NotAutomorphism { g: 1, .. }));
    }

    #[test]
    fn validation_rejects_non_action() {
        let f4 = fq(4).unwrap();
        let c4 = Arc::new(cyclic(4).unwrap());
        let id: Vec<usize> = f4.elements().collect();
        let frob: Vec<usize> = f4.elements().map(|x| f4.mul(x, x)).collect();
        // Generator acts by Frobenius, but then g² must act by Frobenius² = id,
        // so assigning Frobenius to every nonidentity element is inconsistent.
        let err =
            GRing::new(c4, f4, vec![id.clone(), frob.clone(), frob.clone(), frob]).unwrap_err();
        assert!(matches!(err, GRingError::NotAnAction { .. }));
    }

    #[test]
    fn fixed_subrings() {
        let s = f2xf2_swap();
        let g_all = Subgroup::from_members([0, 1]);
        let fixed = s.fixed_subring(g_all);
        // Diagonal {(0,0), (1,1)} ≅ F2.
        assert_eq!(fixed.ring.order(), 2);
        assert!(fixed.ring.is_field());
        let e_only = Subgroup::from_members([0]);
        assert_eq!(s.fixed_subring(e_only).ring.order(), 4);

        let f4 = f4_frobenius();
        // Fixed points of Frobenius on F4 = F2.
        assert_eq!(f4.fixed_subring(g_all).ring.order(), 2);
    }

    #[test]
    fn traces_and_norms() {
        let s = f2xf2_swap();
        let e = Subgroup::from_members([0]);
        let g = Subgroup::from_members([0, 1]);
        let x = 2; // (1,0)
        assert_eq!(s.relative_trace(e, g, x), 3); // (1,0) + (0,1) = (1,1)
        assert_eq!(s.relative_norm(e, g, x), 0); // (1,0)·(0,1) = 0
        let fixed = 3; // (1,1): K = H requires a K-fixed input
        assert_eq!(s.relative_trace(g, g, fixed), fixed);
        assert_eq!(s.relative_norm(g, g, fixed), fixed);

        let t = z4_trivial();
        let e = Subgroup::from_members([0]);
        let g = Subgroup::from_members([0, 1]);
        for x in 0..4 {
            assert_eq!(t.relative_trace(e, g, x), (2 * x) % 4);
            assert_eq!(t.relative_norm(e, g, x), (x * x) % 4);
        }
    }

    #[test]
    fn invariant_ideal_enumeration() {
        let s = f2xf2_swap();
        let inv = s.enumerate_invariant_ideals(64).unwrap();
        // Only 0 and the whole ring are swap-invariant; the principal ideal
        // of the unit (1,1) is the whole ring.
        assert_eq!(inv.len(), 2);
        assert_eq!(s.invariant_closure(&[s.ring.one()]).count_ones(..), 4);
        // Cross-check against filtering the full ideal poset.
        assert_eq!(inv, invariant_ideals_by_filter(&s, 64).unwrap());

        let t = z4_trivial();
        assert_eq!(t.enumerate_invariant_ideals(64).unwrap().len(), 3);
        let frob = f4_frobenius();
        let a = frob.enumerate_invariant_ideals(64).unwrap();
        let b = invariant_ideals_by_filter(&frob, 64).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn g_prime_examples() {
        // Swap on F2×F2: zero is G-prime ((1,0)·g(1,0) = (1,0) ≠ 0 for g = e).
        assert!(f2xf2_swap().is_domain_like());
        // Trivial C2 on F2×F2: (1,0)·g(0,1) = 0 for every g, neither in 0.
        let f2 = fq(2).unwrap();
        let p = ProductRing::new(&[&f2, &f2]).unwrap();
        let triv = GRing::trivial(Arc::new(cyclic(2).unwrap()), p.ring);
        assert!(!triv.is_domain_like());
        // Fields with any action are domain-like.
        assert!(f4_frobenius().is_domain_like());
        // Z/4 is not a domain but zero is still not G-prime (2·2 = 0).
        assert!(!z4_trivial().is_domain_like());
        // Improper ideal errors.
        let s = f2xf2_swap();
        let full = elem_set(4, &[0, 1, 2, 3]);
        assert!(matches!(s.is_g_prime(&full), Err(GRingError::ImproperIdeal)));
    }

    #[test]
    fn g_prime_reduces_to_prime_for_trivial_group() {
        let one = Arc::new(cyclic(1).unwrap());
        for ring in [zn(12).unwrap(), fq(9).unwrap(), zn(8).unwrap()] {
            let s = GRing::trivial(one.clone(), ring.clone());
            for i in enumerate_ideals(&ring, 64).unwrap() {
                if i.contains(ring.one()) {
                    continue;
                }
                assert_eq!(s.is_g_prime(&i).unwrap(), is_prime_ideal(&ring, &i).unwrap());
            }
        }
    }

    #[test]
    fn type_h_idempotents_and_clarified() {
        let s = f2xf2_swap();
        let ths = s.type_h_idempotents();
        // (1,0) and (0,1) are type-e; (1,1) is type-C2.
        assert_eq!(ths.len(), 3);
        let type_e: Vec<usize> = ths
            .iter()
            .filter(|(_, h)| h.order() == 1)
            .map(|&(d, _)| d)
            .collect();
        assert_eq!(type_e, vec![1, 2]); // (0,1) encodes to 1, (1,0) to 2
        assert!(!s.is_clarified());
        // Orbit sum over cosets of e is (1,0) + (0,1) = 1: splittable.
        let e = Subgroup::from_members([0]);
        assert_eq!(s.coset_orbit_sum(2, e), s.ring.one());

        let f4 = f4_frobenius();
        assert!(f4.is_clarified());
        let ths = f4.type_h_idempotents();
        assert_eq!(ths.len(), 1);
        assert_eq!(ths[0].0, f4.ring.one());
        assert_eq!(ths[0].1.order(), 2);

        assert!(z4_trivial().is_clarified());
    }

    #[test]
    fn quotient_by_invariant_ideal() {
        let t = z4_trivial();
        let two = t.invariant_closure(&[2]);
        let (q, data) = t.quotient(&two).unwrap();
        assert_eq!(q.ring.order(), 2);
        assert_eq!(data.project[2], data.project[0]);
        // Non-invariant input is rejected.
        let s = f2xf2_swap();
        let one_sided = ideal_closure(&s.ring, &[2]);
        assert!(matches!(
            s.quotient(&one_sided),
            Err(GRingError::NotInvariant { .. })
        ));
    }

    #[test]
    fn isotropy_and_orbits() {
        let s = f2xf2_swap();
        assert_eq!(s.isotropy(3).order(), 2); // (1,1) fixed
        assert_eq!(s.isotropy(2).order(), 1); // (1,0) swapped
        assert_eq!(s.orbit(2), vec![1, 2]);
    }
}
