//! The ghost construction for functors over a cyclic group of prime order:
//! bottom level unchanged, top level replaced by (conjugation-fixed subring
//! of the bottom) × (old top modulo the transfer ideal), together with the
//! comparison morphism from the input.
//!
//! The ghost receives restriction as inclusion of the first coordinate,
//! sends transfers to (orbit sum, 0), and norms to (orbit product, class of
//! the old norm). The comparison map is the identity on the bottom and
//! (restriction, quotient class) on top.

use crate::rings::{
    elem_set, ideal_closure, quotient_ring, subring, ProductRing, QuotientRing, Subring,
};
use crate::tambara::morphism::TambaraMorphism;
use crate::tambara::{Strictness, TambaraError, TambaraFunctor, TambaraParts};
use std::collections::HashMap;

/// Ghost of a prime-order functor, with the pieces of its top level.
#[derive(Debug, Clone)]
pub struct Ghost {
    pub functor: TambaraFunctor,
    /// Conjugation-fixed subring of the bottom level.
    pub fixed: Subring,
    /// Old top level modulo the image of the transfer.
    pub quot: QuotientRing,
    /// The new top level, `fixed × quot`.
    pub top_product: ProductRing,
    /// Comparison morphism from the input functor.
    pub chi: TambaraMorphism,
}

/// Build the ghost of a functor supported on the full group of a two-level
/// lattice (a cyclic group of prime order).
pub fn ghost(r: &TambaraFunctor) -> Result<Ghost, TambaraError> {
    let lat = r.lat().clone();
    if lat.len() != 2 || r.top() != lat.top() {
        return Err(TambaraError::NotCyclicPrime { order: lat.group().order() });
    }
    let (e, top) = (lat.trivial(), lat.top());
    let members = r.top_members();
    let re = r.level(e).clone();
    let rt = r.level(top);

    let fixed_members: Vec<usize> = re
        .elements()
        .filter(|&x| members.iter().all(|&g| r.conj(g, e, x) == x))
        .collect();
    let fixed = subring(&re, &fixed_members, re.one())?;

    // Image of the transfer; Frobenius reciprocity makes it an ideal, and the
    // closure computation double-checks that.
    let image: Vec<usize> = re.elements().map(|x| r.tr(e, top, x)).collect();
    let transfer_ideal = elem_set(rt.order(), &image);
    if ideal_closure(rt, &image) != transfer_ideal {
        return Err(TambaraError::AxiomViolation {
            axiom: "transfer-ideal",
            location: "transfer image is not already an ideal".into(),
        });
    }
    let quot = quotient_ring(rt, &transfer_ideal)?;
    let top_product = ProductRing::new(&[&fixed.ring, &quot.ring])?;

    let orbit_sum = |x: usize| {
        let s = members.iter().fold(re.zero(), |acc, &g| re.add(acc, r.conj(g, e, x)));
        fixed.locate[&s]
    };
    let orbit_product = |x: usize| {
        let p = members.iter().fold(re.one(), |acc, &g| re.mul(acc, r.conj(g, e, x)));
        fixed.locate[&p]
    };

    let id_e: Vec<usize> = re.elements().collect();
    let id_top: Vec<usize> = (0..top_product.ring.order()).collect();
    let q_zero = quot.ring.zero();
    let mut res = HashMap::new();
    let mut tr = HashMap::new();
    let mut nm = HashMap::new();
    let mut conj = HashMap::new();
    res.insert((e, e), id_e.clone());
    tr.insert((e, e), id_e.clone());
    nm.insert((e, e), id_e.clone());
    res.insert((top, top), id_top.clone());
    tr.insert((top, top), id_top.clone());
    nm.insert((top, top), id_top.clone());
    res.insert(
        (e, top),
        (0..top_product.ring.order())
            .map(|z| fixed.embed[top_product.decode(z)[0]])
            .collect(),
    );
    tr.insert(
        (e, top),
        re.elements().map(|x| top_product.encode(&[orbit_sum(x), q_zero])).collect(),
    );
    nm.insert(
        (e, top),
        re.elements()
            .map(|x| top_product.encode(&[orbit_product(x), quot.project[r.nm(e, top, x)]]))
            .collect(),
    );
    for &g in &members {
        conj.insert((g, e), r.conj_map(g, e).to_vec());
        conj.insert((g, top), id_top.clone());
    }
    let mut levels = vec![None, None];
    levels[e] = Some(re.clone());
    levels[top] = Some(top_product.ring.clone());
    let functor = TambaraFunctor::assemble(
        TambaraParts { lat, top, levels, res, tr, nm, conj },
        Strictness::Standard,
    )?;

    let chi_top: Vec<usize> = rt
        .elements()
        .map(|x| top_product.encode(&[fixed.locate[&r.res(e, top, x)], quot.project[x]]))
        .collect();
    let chi = TambaraMorphism { maps: vec![id_e, chi_top] };
    chi.validate(r, &functor)?;
    Ok(Ghost { functor, fixed, quot, top_product, chi })
}
