//! Fixed-point functors: the Tambara functor `H ↦ S^H` of a G-ring `S`, with
//! restriction = inclusion of fixed points, transfer = relative trace, norm =
//! relative norm, and conjugation = the group action.

use crate::grings::GRing;
use crate::groups::SubgroupLattice;
use crate::rings::Subring;
use crate::tambara::{Strictness, TambaraError, TambaraFunctor, TambaraParts};
use std::collections::HashMap;
use std::sync::Arc;

/// The functor `H ↦ S^H` together with the embedding data of every level, so
/// level elements can be moved to and from the underlying G-ring.
#[derive(Debug, Clone)]
pub struct FixedPointFunctor {
    pub functor: TambaraFunctor,
    /// `subrings[k]` realizes level `k` inside the G-ring.
    pub subrings: Vec<Subring>,
}

impl FixedPointFunctor {
    /// Underlying-ring element of level-`k` element `x`.
    pub fn embed(&self, k: usize, x: usize) -> usize {
        self.subrings[k].embed[x]
    }

    /// Level-`k` index of an underlying-ring element, if it is `K`-fixed.
    pub fn locate(&self, k: usize, ambient: usize) -> Option<usize> {
        self.subrings[k].locate.get(&ambient).copied()
    }
}

/// Build the fixed-point functor of a G-ring over the full subgroup lattice
/// of its acting group.
pub fn fixed_point_functor(s: &GRing) -> Result<FixedPointFunctor, TambaraError> {
    let lat = Arc::new(SubgroupLattice::new(s.group().clone())?);
    let subrings: Vec<Subring> =
        (0..lat.len()).map(|k| s.fixed_subring(lat.subgroup(k))).collect();
    let mut res = HashMap::new();
    let mut tr = HashMap::new();
    let mut nm = HashMap::new();
    let mut conj = HashMap::new();
    for h in 0..lat.len() {
        let hs = lat.subgroup(h);
        for k in 0..lat.len() {
            if !lat.is_sub(k, h) {
                continue;
            }
            let ks = lat.subgroup(k);
            let (rk, rh) = (&subrings[k], &subrings[h]);
            res.insert((k, h), rh.embed.iter().map(|&x| rk.locate[&x]).collect());
            tr.insert(
                (k, h),
                rk.embed.iter().map(|&x| rh.locate[&s.relative_trace(ks, hs, x)]).collect(),
            );
            nm.insert(
                (k, h),
                rk.embed.iter().map(|&x| rh.locate[&s.relative_norm(ks, hs, x)]).collect(),
            );
        }
        for g in s.group().elements() {
            let target = lat.conjugate(g, h);
            let map = subrings[h]
                .embed
                .iter()
                .map(|&x| subrings[target].locate[&s.act(g, x)])
                .collect();
            conj.insert((g, h), map);
        }
    }
    let top = lat.top();
    let levels = subrings.iter().map(|sr| Some(sr.ring.clone())).collect();
    let functor = TambaraFunctor::assemble(
        TambaraParts { lat, top, levels, res, tr, nm, conj },
        Strictness::Standard,
    )?;
    Ok(FixedPointFunctor { functor, subrings })
}
