//! Coinduction: the right adjoint to restricting a Tambara functor to a
//! subgroup, computed levelwise through double cosets.
//!
//! For a functor `S` supported on `H` and a target subgroup `G ≥ H` of the
//! same lattice, the coinduced level at `K ≤ G` is the product
//! `Πᵢ S(H ∩ gᵢKgᵢ⁻¹)` over double-coset representatives `gᵢ` of `H\G/K` —
//! the value of `S` on the `H`-set `Res_H(G/K) = ⊔ᵢ H/(H ∩ gᵢKgᵢ⁻¹)`.
//! Every structure map routes factors between double-coset decompositions:
//! writing an element as `t = h₀·gⱼ·λ` with `h₀ ∈ H` and `λ` in the right
//! subgroup locates the factor `j` and the twist `h₀`; the twist is unique up
//! to the factor's stabilizer, which acts trivially there.

use crate::grings::GRing;
use crate::groups::{DoubleCosets, FiniteGroup, Subgroup, SubgroupLattice};
use crate::rings::{
    decode_mixed, encode_mixed, FiniteRing, ProductRing, RingError, MAX_RING_ORDER,
};
use crate::tambara::morphism::TambaraMorphism;
use crate::tambara::{subs_within, Strictness, TambaraError, TambaraFunctor, TambaraParts};
use std::collections::HashMap;
use std::sync::Arc;

/// Factor data of one coinduced level.
#[derive(Debug, Clone)]
pub struct CoindLevel {
    /// Double cosets `H\G/K`, the identity's coset first.
    pub dc: DoubleCosets,
    /// Lattice indices of the stabilizers `H ∩ gᵢKgᵢ⁻¹`.
    pub stabs: Vec<usize>,
    /// The level ring `Πᵢ S(H ∩ gᵢKgᵢ⁻¹)`.
    pub product: ProductRing,
}

/// A coinduced functor together with its factor bookkeeping.
#[derive(Debug, Clone)]
pub struct Coinduction {
    pub functor: TambaraFunctor,
    /// Support of the source functor.
    pub source_top: usize,
    /// Per-lattice-index factor data (`None` outside the new support).
    pub levels: Vec<Option<CoindLevel>>,
}

impl Coinduction {
    pub fn level(&self, k: usize) -> &CoindLevel {
        self.levels[k].as_ref().expect("level within the coinduced support")
    }

    /// Projection onto the identity-coset factor, whose stabilizer is `H ∩ K`
    /// (equal to `K` itself whenever `K ≤ H`).
    pub fn identity_factor(&self, k: usize, z: usize) -> usize {
        self.level(k).product.decode(z)[0]
    }
}

/// Locate `t` in a double-coset decomposition: the factor index `j` and a
/// twist `h₀` in the left subgroup with `t = h₀ · reps[j] · λ`, `λ` in the
/// right subgroup.
fn route(lat: &SubgroupLattice, dc: &DoubleCosets, t: usize) -> (usize, usize) {
    let group = lat.group().as_ref();
    let j = dc.coset_index[t];
    debug_assert_ne!(j, usize::MAX, "element outside the ambient subgroup");
    let gj_inv = group.inv(dc.reps[j]);
    let right = lat.subgroup(dc.right);
    let h0 = lat
        .subgroup(dc.left)
        .members()
        .find(|&h| right.contains(group.mul(gj_inv, group.mul(group.inv(h), t))))
        .expect("every element factors through its double coset");
    (j, h0)
}

/// Coinduce a functor supported on `H = s.top()` up to `new_top ≥ H`.
pub fn coinduce(s: &TambaraFunctor, new_top: usize) -> Result<Coinduction, TambaraError> {
    let lat = s.lat().clone();
    let h_top = s.top();
    if !lat.is_sub(h_top, new_top) {
        return Err(TambaraError::BadEmbedding {
            reason: format!(
                "coinduction target {new_top} does not contain the support {h_top}"
            ),
        });
    }
    let group = lat.group().clone();
    let support = subs_within(&lat, new_top);
    let mut levels: Vec<Option<CoindLevel>> = vec![None; lat.len()];
    for &k in &support {
        let dc = lat.double_cosets(h_top, k, new_top);
        let stabs: Vec<usize> =
            (0..dc.reps.len()).map(|i| lat.stabilizer_in_left(&dc, i)).collect();
        let factors: Vec<&FiniteRing> = stabs.iter().map(|&st| s.level(st)).collect();
        let product = ProductRing::new(&factors)?;
        levels[k] = Some(CoindLevel { dc, stabs, product });
    }
    let mut res = HashMap::new();
    let mut tr = HashMap::new();
    let mut nm = HashMap::new();
    let mut conj = HashMap::new();
    for &l in &support {
        let cl = levels[l].as_ref().unwrap();
        for &k in &support {
            if !lat.is_sub(k, l) {
                continue;
            }
            let ck = levels[k].as_ref().unwrap();
            // For each K-factor `i`, route its representative among the
            // L-cosets: `gᵢ = h₀·gⱼ·λ` puts factor `i` over factor `j` with
            // intermediate level `h₀ Tⱼ h₀⁻¹ ⊇ Sᵢ`.
            let routes: Vec<(usize, usize, usize)> = (0..ck.dc.reps.len())
                .map(|i| {
                    let (j, h0) = route(&lat, &cl.dc, ck.dc.reps[i]);
                    let mid = lat.conjugate(h0, cl.stabs[j]);
                    debug_assert!(lat.is_sub(ck.stabs[i], mid));
                    (j, h0, mid)
                })
                .collect();
            let res_map: Vec<usize> = (0..cl.product.ring.order())
                .map(|z| {
                    let comps = cl.product.decode(z);
                    let out: Vec<usize> = routes
                        .iter()
                        .enumerate()
                        .map(|(i, &(j, h0, mid))| {
                            s.res(ck.stabs[i], mid, s.conj(h0, cl.stabs[j], comps[j]))
                        })
                        .collect();
                    ck.product.encode(&out)
                })
                .collect();
            res.insert((k, l), res_map);
            let tr_map: Vec<usize> = (0..ck.product.ring.order())
                .map(|z| {
                    let comps = ck.product.decode(z);
                    let mut out: Vec<usize> =
                        cl.stabs.iter().map(|&st| s.level(st).zero()).collect();
                    for (i, &(j, h0, mid)) in routes.iter().enumerate() {
                        let term =
                            s.conj(group.inv(h0), mid, s.tr(ck.stabs[i], mid, comps[i]));
                        out[j] = s.level(cl.stabs[j]).add(out[j], term);
                    }
                    cl.product.encode(&out)
                })
                .collect();
            tr.insert((k, l), tr_map);
            let nm_map: Vec<usize> = (0..ck.product.ring.order())
                .map(|z| {
                    let comps = ck.product.decode(z);
                    let mut out: Vec<usize> =
                        cl.stabs.iter().map(|&st| s.level(st).one()).collect();
                    for (i, &(j, h0, mid)) in routes.iter().enumerate() {
                        let term =
                            s.conj(group.inv(h0), mid, s.nm(ck.stabs[i], mid, comps[i]));
                        out[j] = s.level(cl.stabs[j]).mul(out[j], term);
                    }
                    cl.product.encode(&out)
                })
                .collect();
            nm.insert((k, l), nm_map);
        }
        for g in lat.subgroup(new_top).members() {
            let target = lat.conjugate(g, l);
            let ct = levels[target].as_ref().unwrap();
            // Output factor `i` of the target pulls from the source factor
            // containing `reps'ᵢ · g`; the stabilizers match exactly.
            let routes: Vec<(usize, usize)> = (0..ct.dc.reps.len())
                .map(|i| {
                    let (j, h0) = route(&lat, &cl.dc, group.mul(ct.dc.reps[i], g));
                    debug_assert_eq!(lat.conjugate(h0, cl.stabs[j]), ct.stabs[i]);
                    (j, h0)
                })
                .collect();
            let map: Vec<usize> = (0..cl.product.ring.order())
                .map(|z| {
                    let comps = cl.product.decode(z);
                    let out: Vec<usize> = routes
                        .iter()
                        .map(|&(j, h0)| s.conj(h0, cl.stabs[j], comps[j]))
                        .collect();
                    ct.product.encode(&out)
                })
                .collect();
            conj.insert((g, l), map);
        }
    }
    let levels_rings = levels
        .iter()
        .map(|cl| cl.as_ref().map(|c| c.product.ring.clone()))
        .collect();
    let functor = TambaraFunctor::assemble(
        TambaraParts { lat, top: new_top, levels: levels_rings, res, tr, nm, conj },
        Strictness::Standard,
    )?;
    Ok(Coinduction { functor, source_top: h_top, levels })
}

/// Restrict `r` to `h`, coinduce back up to `r`'s support, and return the
/// unit morphism `r → CoInd_h(Res_h r)`: at level `K` the factor over `gᵢ`
/// receives `Res(c_{gᵢ}(x))`.
pub fn coind_unit(
    r: &TambaraFunctor,
    h: usize,
) -> Result<(Coinduction, TambaraMorphism), TambaraError> {
    let s = r.restrict_to(h)?;
    let c = coinduce(&s, r.top())?;
    let lat = r.lat().clone();
    let mut maps: Vec<Vec<usize>> = vec![Vec::new(); lat.len()];
    for k in r.subs() {
        let cl = c.level(k);
        let factor_data: Vec<(usize, usize, usize)> = (0..cl.dc.reps.len())
            .map(|i| {
                let gi = cl.dc.reps[i];
                (gi, lat.conjugate(gi, k), cl.stabs[i])
            })
            .collect();
        maps[k] = r
            .level(k)
            .elements()
            .map(|x| {
                let comps: Vec<usize> = factor_data
                    .iter()
                    .map(|&(gi, conj_k, stab)| r.res(stab, conj_k, r.conj(gi, k, x)))
                    .collect();
                cl.product.encode(&comps)
            })
            .collect();
    }
    let eta = TambaraMorphism { maps };
    eta.validate(r, &c.functor)?;
    Ok((c, eta))
}

/// The coinduced G-ring `Map_H(G, S)` of `H`-equivariant functions from the
/// big group into a G-ring `S` over `H`, with pointwise operations and
/// right-translation action; `elem_map[a]` embeds the acting group of `S`.
#[derive(Debug)]
pub struct CoinducedGRing {
    pub gring: GRing,
    /// Right-coset representatives of `image\G`, the identity first.
    pub reps: Vec<usize>,
    /// Image of the source group inside the big group.
    pub image: Subgroup,
    /// Preimage in the source group of each image element.
    inv_map: Vec<Option<usize>>,
    coset_of: Vec<usize>,
    orders: Vec<usize>,
    source_action: Vec<Vec<usize>>,
}

impl CoinducedGRing {
    /// Values of function `x` on the coset representatives.
    pub fn decode(&self, x: usize) -> Vec<usize> {
        decode_mixed(x, &self.orders)
    }

    pub fn encode(&self, values: &[usize]) -> usize {
        encode_mixed(values, &self.orders)
    }

    /// Value of function `x` at an arbitrary big-group element.
    pub fn value_at(&self, x: usize, t: usize) -> usize {
        let g = self.gring.group().as_ref();
        let j = self.coset_of[t];
        let him = g.mul(t, g.inv(self.reps[j]));
        let h = self.inv_map[him].expect("routing stays inside the image subgroup");
        self.source_action[h][self.decode(x)[j]]
    }
}

/// Build `Map_H(G, S)` for a G-ring `S` whose acting group embeds into `big`
/// via `elem_map`.
pub fn coinduce_gring(
    s: &GRing,
    big: &Arc<FiniteGroup>,
    elem_map: &[usize],
) -> Result<CoinducedGRing, TambaraError> {
    let sg = s.group().as_ref();
    let g = big.as_ref();
    if elem_map.len() != sg.order() {
        return Err(TambaraError::BadEmbedding { reason: "element map has wrong length".into() });
    }
    let mut inv_map: Vec<Option<usize>> = vec![None; g.order()];
    for (a, &v) in elem_map.iter().enumerate() {
        if v >= g.order() || inv_map[v].is_some() {
            return Err(TambaraError::BadEmbedding {
                reason: "element map is not injective".into(),
            });
        }
        inv_map[v] = Some(a);
    }
    for a in sg.elements() {
        for b in sg.elements() {
            if g.mul(elem_map[a], elem_map[b]) != elem_map[sg.mul(a, b)] {
                return Err(TambaraError::BadEmbedding {
                    reason: format!("element map is not a homomorphism at ({a}, {b})"),
                });
            }
        }
    }
    let image = Subgroup::from_members(elem_map.iter().copied());
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    let mut coset_of = vec![0usize; g.order()];
    for t in g.elements() {
        if seen[t] {
            continue;
        }
        let c = reps.len();
        for h in image.members() {
            let u = g.mul(h, t);
            seen[u] = true;
            coset_of[u] = c;
        }
        reps.push(t);
    }
    let n = s.ring.order();
    let total = reps
        .iter()
        .try_fold(1usize, |acc, _| acc.checked_mul(n))
        .filter(|&t| t <= MAX_RING_ORDER)
        .ok_or(RingError::OrderBoundExceeded {
            order: n.pow(reps.len().min(8) as u32),
            bound: MAX_RING_ORDER,
        })?;
    let orders = vec![n; reps.len()];
    let pointwise = |op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..total)
            .map(|x| {
                let fx = decode_mixed(x, &orders);
                (0..total)
                    .map(|y| {
                        let fy = decode_mixed(y, &orders);
                        let vals: Vec<usize> =
                            fx.iter().zip(&fy).map(|(&a, &b)| op(a, b)).collect();
                        encode_mixed(&vals, &orders)
                    })
                    .collect()
            })
            .collect()
    };
    let add_rows = pointwise(&|a, b| s.ring.add(a, b));
    let mul_rows = pointwise(&|a, b| s.ring.mul(a, b));
    let ring = FiniteRing::from_tables(&add_rows, &mul_rows)?;
    let action: Vec<Vec<usize>> = g
        .elements()
        .map(|gp| {
            let routes: Vec<(usize, usize)> = reps
                .iter()
                .map(|&ri| {
                    let t = g.mul(ri, gp);
                    let j = coset_of[t];
                    let him = g.mul(t, g.inv(reps[j]));
                    (j, inv_map[him].expect("rep routing stays inside the image"))
                })
                .collect();
            (0..total)
                .map(|x| {
                    let f = decode_mixed(x, &orders);
                    let vals: Vec<usize> =
                        routes.iter().map(|&(j, h)| s.act(h, f[j])).collect();
                    encode_mixed(&vals, &orders)
                })
                .collect()
        })
        .collect();
    let gring = GRing::new(big.clone(), ring, action)?;
    Ok(CoinducedGRing {
        gring,
        reps,
        image,
        inv_map,
        coset_of,
        orders,
        source_action: s.action_rows().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grings::samples::{f2xf2_swap, z4_trivial};
    use crate::groups::{cyclic, symmetric};
    use crate::rings::fq;
    use crate::tambara::fp::fixed_point_functor;
    use crate::tambara::{ring_at_bottom, transport};

    fn lattice_of(g: crate::groups::FiniteGroup) -> Arc<SubgroupLattice> {
        Arc::new(SubgroupLattice::new(Arc::new(g)).unwrap())
    }

    #[test]
    fn functions_on_c2_have_swap_conjugation_and_fold_maps() {
        let lat = lattice_of(cyclic(2).unwrap());
        let s = ring_at_bottom(&lat, fq(2).unwrap()).unwrap();
        let c = coinduce(&s, lat.top()).unwrap();
        let f = &c.functor;
        let (e, top) = (f.bottom(), f.top());
        assert_eq!(f.level(e).order(), 4);
        assert_eq!(f.level(top).order(), 2);
        // Components encode as 2a + b; the nontrivial element swaps them.
        assert_eq!(f.conj_map(1, e), &[0, 2, 1, 3]);
        assert_eq!(f.res_map(e, top), &[0, 3]);
        assert_eq!(f.tr_map(e, top), &[0, 1, 1, 0]);
        assert_eq!(f.nm_map(e, top), &[0, 0, 0, 1]);
        assert!(!f.is_idle());
        assert_eq!(c.level(e).stabs, vec![e, e]);
        assert_eq!(c.level(top).stabs, vec![e]);
    }

    #[test]
    fn coinduction_to_the_same_support_changes_nothing() {
        let fp = fixed_point_functor(&z4_trivial()).unwrap();
        let c = coinduce(&fp.functor, fp.functor.top()).unwrap();
        let (e, top) = (fp.functor.bottom(), fp.functor.top());
        for k in [e, top] {
            assert_eq!(c.level(k).stabs, vec![k]);
            assert_eq!(c.functor.level(k).order(), fp.functor.level(k).order());
        }
        assert_eq!(c.functor.res_map(e, top), fp.functor.res_map(e, top));
        assert_eq!(c.functor.tr_map(e, top), fp.functor.tr_map(e, top));
        assert_eq!(c.functor.nm_map(e, top), fp.functor.nm_map(e, top));
    }

    #[test]
    fn unit_into_functions_on_the_bottom_level_is_the_diagonal() {
        let fp = fixed_point_functor(&z4_trivial()).unwrap();
        let r = &fp.functor;
        let (c, eta) = coind_unit(r, r.bottom()).unwrap();
        let (e, top) = (r.bottom(), r.top());
        // Trivial conjugation: the unit at the bottom is x ↦ (x, x).
        for x in r.level(e).elements() {
            assert_eq!(c.level(e).product.decode(eta.apply(e, x)), vec![x, x]);
            assert_eq!(c.identity_factor(e, eta.apply(e, x)), x);
        }
        // At the top the single factor is the restriction (identity here).
        for x in r.level(top).elements() {
            assert_eq!(eta.apply(top, x), x);
        }
        // Coinducing from the full support gives the identity unit.
        let (_, eta_id) = coind_unit(r, r.top()).unwrap();
        for k in r.subs() {
            assert!(eta_id.maps[k].iter().enumerate().all(|(x, &y)| x == y));
        }
    }

    #[test]
    fn coinduced_doubling_functor_up_to_c4_has_paired_levels() {
        let big = lattice_of(cyclic(4).unwrap());
        let fp = fixed_point_functor(&z4_trivial()).unwrap();
        let src = transport(&fp.functor, &big, &[0, 2]).unwrap();
        let c2 = big.index_of(Subgroup::from_members([0, 2])).unwrap();
        assert_eq!(src.top(), c2);
        let c = coinduce(&src, big.top()).unwrap();
        let e = big.trivial();
        assert_eq!(c.functor.level(e).order(), 16);
        assert_eq!(c.functor.level(c2).order(), 16);
        assert_eq!(c.functor.level(big.top()).order(), 4);
        assert_eq!(c.level(e).stabs, vec![e, e]);
        assert_eq!(c.level(c2).stabs, vec![c2, c2]);
        assert_eq!(c.level(big.top()).stabs, vec![c2]);
        assert!(!c.functor.is_idle());
    }

    /// Fixed points of `Map_H(G, S)` agree with the coinduction of the
    /// fixed-point functor: the levelwise comparison map is an isomorphism
    /// of Tambara functors.
    fn assert_fixed_points_commute_with_coinduction(
        s: &GRing,
        big: Arc<FiniteGroup>,
        elem_map: &[usize],
    ) {
        let lat = Arc::new(SubgroupLattice::new(big.clone()).unwrap());
        let cg = coinduce_gring(s, &big, elem_map).unwrap();
        let lhs_fp = fixed_point_functor(&cg.gring).unwrap();
        let identity: Vec<usize> = big.elements().collect();
        let lhs = transport(&lhs_fp.functor, &lat, &identity).unwrap();
        let fp_s = fixed_point_functor(s).unwrap();
        let src = transport(&fp_s.functor, &lat, elem_map).unwrap();
        let rhs = coinduce(&src, lat.top()).unwrap();
        let h_lat = fp_s.functor.lat().clone();
        let inv: Vec<Option<usize>> = {
            let mut inv = vec![None; big.order()];
            for (a, &v) in elem_map.iter().enumerate() {
                inv[v] = Some(a);
            }
            inv
        };
        let mut maps: Vec<Vec<usize>> = vec![Vec::new(); lat.len()];
        for k in lhs.subs() {
            let cl = rhs.level(k);
            let factor_sub: Vec<usize> = cl
                .stabs
                .iter()
                .map(|&st| {
                    let sub = lat.subgroup(st);
                    let members = sub.members().map(|m| inv[m].unwrap());
                    h_lat.index_of(Subgroup::from_members(members)).unwrap()
                })
                .collect();
            maps[k] = (0..lhs.level(k).order())
                .map(|x| {
                    let f_idx = lhs_fp.embed(k, x);
                    let comps: Vec<usize> = cl
                        .dc
                        .reps
                        .iter()
                        .zip(&factor_sub)
                        .map(|(&gi, &sub_h)| {
                            let v = cg.value_at(f_idx, gi);
                            fp_s.locate(sub_h, v).expect("component is stabilizer-fixed")
                        })
                        .collect();
                    cl.product.encode(&comps)
                })
                .collect();
        }
        let iso = TambaraMorphism { maps };
        iso.validate(&lhs, &rhs.functor).unwrap();
        assert!(iso.is_bijective(&lhs, &rhs.functor));
    }

    #[test]
    fn fixed_points_commute_with_coinduction_for_z4_up_to_c4() {
        assert_fixed_points_commute_with_coinduction(
            &z4_trivial(),
            Arc::new(cyclic(4).unwrap()),
            &[0, 2],
        );
    }

    #[test]
    fn fixed_points_commute_with_coinduction_for_swapped_f2xf2_up_to_c4() {
        assert_fixed_points_commute_with_coinduction(
            &f2xf2_swap(),
            Arc::new(cyclic(4).unwrap()),
            &[0, 2],
        );
    }

    #[test]
    fn fixed_points_commute_with_coinduction_for_functions_on_s3() {
        let s = GRing::trivial(Arc::new(cyclic(1).unwrap()), fq(2).unwrap());
        assert_fixed_points_commute_with_coinduction(
            &s,
            Arc::new(symmetric(3).unwrap()),
            &[0],
        );
    }

    #[test]
    fn coinduction_rejects_targets_not_containing_the_support() {
        let big = lattice_of(cyclic(4).unwrap());
        let fp = fixed_point_functor(&z4_trivial()).unwrap();
        let src = transport(&fp.functor, &big, &[0, 2]).unwrap();
        assert!(matches!(
            coinduce(&src, big.trivial()),
            Err(TambaraError::BadEmbedding { .. })
        ));
    }
}
