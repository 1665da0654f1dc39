//! Splitting a functor along a bottom-level idempotent whose conjugates
//! partition unity, and levelwise products of functors.
//!
//! An idempotent `d` of the bottom level with isotropy `H` (under
//! conjugation) is splitting when distinct translates are orthogonal
//! (`d · c_g d = 0` off `H`) and the translates over `G/H` sum to 1. The
//! corner rings `e_K·R(K)` for `K ≤ H`, with `e_K = Nm(d)`, then form a
//! functor on `H`, and the compressed unit `x ↦ (e·Res(c_{gᵢ} x))ᵢ` is an
//! isomorphism onto its coinduction.

use crate::rings::{corner_ring, ProductRing, Subring};
use crate::tambara::coind::{coinduce, Coinduction};
use crate::tambara::morphism::TambaraMorphism;
use crate::tambara::{subs_within, Strictness, TambaraError, TambaraFunctor, TambaraParts};
use std::collections::HashMap;

/// A successful splitting along an idempotent.
#[derive(Debug)]
pub struct Split {
    /// The summand, supported on the idempotent's isotropy subgroup.
    pub piece: TambaraFunctor,
    /// Lattice index of the isotropy subgroup.
    pub isotropy: usize,
    /// Corner realizations of the piece's levels inside the input's levels.
    pub corners: Vec<Option<Subring>>,
    /// Coinduction of the piece back up to the input's support.
    pub coind: Coinduction,
    /// The comparison isomorphism from the input to the coinduction.
    pub iso: TambaraMorphism,
}

fn not_splittable(element: usize, reason: &str) -> TambaraError {
    TambaraError::NotSplittable { element, reason: reason.to_string() }
}

/// Isotropy subgroup of a bottom-level element under conjugation, as a
/// lattice index.
pub fn isotropy_of(r: &TambaraFunctor, x: usize) -> usize {
    let e = r.bottom();
    let members = r.top_members().into_iter().filter(|&g| r.conj(g, e, x) == x);
    r.lat()
        .index_of(crate::groups::Subgroup::from_members(members))
        .expect("isotropy is a subgroup of the support")
}

/// Whether `d` is a bottom-level idempotent with orthogonal translates whose
/// orbit sums to 1 — the hypothesis under which [`split_by_idempotent`]
/// succeeds.
pub fn is_splitting_idempotent(r: &TambaraFunctor, d: usize) -> bool {
    let e = r.bottom();
    let re = r.level(e);
    if !re.is_idempotent(d) {
        return false;
    }
    let h = isotropy_of(r, d);
    let h_sub = r.lat().subgroup(h);
    let orthogonal = r
        .top_members()
        .into_iter()
        .filter(|&g| !h_sub.contains(g))
        .all(|g| re.mul(d, r.conj(g, e, d)) == re.zero());
    if !orthogonal {
        return false;
    }
    let sum = r
        .lat()
        .coset_reps(h, r.top())
        .into_iter()
        .fold(re.zero(), |acc, g| re.add(acc, r.conj(g, e, d)));
    sum == re.one()
}

/// Nontrivial bottom-level idempotents along which the functor splits.
pub fn splitting_candidates(r: &TambaraFunctor) -> Vec<usize> {
    let re = r.level(r.bottom());
    re.elements()
        .filter(|&d| d != re.zero() && d != re.one() && is_splitting_idempotent(r, d))
        .collect()
}

/// Split `r` along the idempotent `d`, producing the corner piece on the
/// isotropy subgroup and the isomorphism onto its coinduction.
pub fn split_by_idempotent(r: &TambaraFunctor, d: usize) -> Result<Split, TambaraError> {
    let lat = r.lat().clone();
    let e = r.bottom();
    let re = r.level(e);
    if !re.is_idempotent(d) {
        return Err(not_splittable(d, "not an idempotent of the bottom level"));
    }
    let h = isotropy_of(r, d);
    let h_sub = lat.subgroup(h);
    for g in r.top_members() {
        if !h_sub.contains(g) && re.mul(d, r.conj(g, e, d)) != re.zero() {
            return Err(not_splittable(d, "translates are not orthogonal"));
        }
    }
    let orbit_sum = lat
        .coset_reps(h, r.top())
        .into_iter()
        .fold(re.zero(), |acc, g| re.add(acc, r.conj(g, e, d)));
    if orbit_sum != re.one() {
        return Err(not_splittable(d, "translates do not sum to 1"));
    }

    let support = subs_within(&lat, h);
    let mut idem = vec![usize::MAX; lat.len()];
    let mut corners: Vec<Option<Subring>> = vec![None; lat.len()];
    for &k in &support {
        idem[k] = r.nm(e, k, d);
        corners[k] = Some(corner_ring(r.level(k), idem[k])?);
    }
    // Corner compression: multiply into the corner, then reindex.
    let compress = |k: usize, y: usize| {
        let c = corners[k].as_ref().unwrap();
        c.locate[&r.level(k).mul(idem[k], y)]
    };
    let mut res = HashMap::new();
    let mut tr = HashMap::new();
    let mut nm = HashMap::new();
    let mut conj = HashMap::new();
    for &l in &support {
        let cl = corners[l].as_ref().unwrap();
        for &k in &support {
            if !lat.is_sub(k, l) {
                continue;
            }
            let ck = corners[k].as_ref().unwrap();
            res.insert((k, l), cl.embed.iter().map(|&y| compress(k, r.res(k, l, y))).collect());
            tr.insert((k, l), ck.embed.iter().map(|&y| compress(l, r.tr(k, l, y))).collect());
            nm.insert((k, l), ck.embed.iter().map(|&y| compress(l, r.nm(k, l, y))).collect());
        }
        for g in h_sub.members() {
            let target = lat.conjugate(g, l);
            let map = cl.embed.iter().map(|&y| compress(target, r.conj(g, l, y))).collect();
            conj.insert((g, l), map);
        }
    }
    let levels = corners.iter().map(|c| c.as_ref().map(|s| s.ring.clone())).collect();
    let piece = TambaraFunctor::assemble(
        TambaraParts { lat: lat.clone(), top: h, levels, res, tr, nm, conj },
        Strictness::Standard,
    )?;
    let coind = coinduce(&piece, r.top())?;

    let mut maps: Vec<Vec<usize>> = vec![Vec::new(); lat.len()];
    for k in r.subs() {
        let cl = coind.level(k);
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
                    .map(|&(gi, conj_k, stab)| {
                        compress(stab, r.res(stab, conj_k, r.conj(gi, k, x)))
                    })
                    .collect();
                cl.product.encode(&comps)
            })
            .collect();
    }
    let iso = TambaraMorphism { maps };
    iso.validate(r, &coind.functor)?;
    if !iso.is_bijective(r, &coind.functor) {
        return Err(not_splittable(d, "comparison with the coinduction is not bijective"));
    }
    Ok(Split { piece, isotropy: h, corners, coind, iso })
}

/// Levelwise product of two functors over the same lattice and support.
#[derive(Debug)]
pub struct ProductFunctor {
    pub functor: TambaraFunctor,
    /// Levelwise pairings (decode = (left, right) components).
    pub pairs: Vec<Option<ProductRing>>,
}

pub fn product(a: &TambaraFunctor, b: &TambaraFunctor) -> Result<ProductFunctor, TambaraError> {
    if !std::sync::Arc::ptr_eq(a.lat(), b.lat()) || a.top() != b.top() {
        return Err(TambaraError::BadEmbedding {
            reason: "product factors live on different lattices or supports".into(),
        });
    }
    let lat = a.lat().clone();
    let support = subs_within(&lat, a.top());
    let mut pairs: Vec<Option<ProductRing>> = vec![None; lat.len()];
    for &k in &support {
        pairs[k] = Some(ProductRing::new(&[a.level(k), b.level(k)])?);
    }
    let componentwise = |out: &ProductRing,
                         input: &ProductRing,
                         fa: &dyn Fn(usize) -> usize,
                         fb: &dyn Fn(usize) -> usize|
     -> Vec<usize> {
        (0..input.ring.order())
            .map(|z| {
                let c = input.decode(z);
                out.encode(&[fa(c[0]), fb(c[1])])
            })
            .collect()
    };
    let mut res = HashMap::new();
    let mut tr = HashMap::new();
    let mut nm = HashMap::new();
    let mut conj = HashMap::new();
    for &l in &support {
        let pl = pairs[l].as_ref().unwrap();
        for &k in &support {
            if !lat.is_sub(k, l) {
                continue;
            }
            let pk = pairs[k].as_ref().unwrap();
            res.insert(
                (k, l),
                componentwise(pk, pl, &|x| a.res(k, l, x), &|x| b.res(k, l, x)),
            );
            tr.insert((k, l), componentwise(pl, pk, &|x| a.tr(k, l, x), &|x| b.tr(k, l, x)));
            nm.insert((k, l), componentwise(pl, pk, &|x| a.nm(k, l, x), &|x| b.nm(k, l, x)));
        }
        for g in lat.subgroup(a.top()).members() {
            let target = lat.conjugate(g, l);
            let pt = pairs[target].as_ref().unwrap();
            conj.insert(
                (g, l),
                componentwise(pt, pl, &|x| a.conj(g, l, x), &|x| b.conj(g, l, x)),
            );
        }
    }
    let levels = pairs.iter().map(|p| p.as_ref().map(|pr| pr.ring.clone())).collect();
    let functor = TambaraFunctor::assemble(
        TambaraParts { lat, top: a.top(), levels, res, tr, nm, conj },
        Strictness::Standard,
    )?;
    Ok(ProductFunctor { functor, pairs })
}
