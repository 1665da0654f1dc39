//! Green and Tambara ideals of levelwise-finite Tambara functors: closure
//! from generators, products, primality, exhaustive enumeration, contraction
//! along morphisms, and the coinduction bijection.
//!
//! A Tambara ideal assigns a ring ideal to every level so that transfers,
//! norms, restrictions, and conjugations all carry ideal members into ideal
//! members. A Green ideal drops the norm condition. The stronger norm
//! condition `Nm(x + i) − Nm(x) ∈ I` used in other treatments follows from
//! these conditions and is exercised as a derived property in the tests, not
//! taken as part of the definition.

use crate::rings::{
    enumerate_ideals, ideal_closure, ideal_label, ElemSet, RingError, DEFAULT_IDEAL_ENUM_ORDER,
};
use crate::tambara::morphism::TambaraMorphism;
use crate::tambara::{coind::Coinduction, TambaraFunctor};
use thiserror::Error;

/// Default cap on the number of per-level ideal combinations enumerated.
pub const DEFAULT_COMBO_BOUND: u128 = 1 << 16;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("level {level} is not a ring ideal: {witness}")]
    NotAnIdeal { level: usize, witness: String },
    #[error("{condition} carries element {element} of level {from} outside level {to}")]
    ConditionFails { condition: &'static str, from: usize, to: usize, element: usize },
    #[error("ideal is improper (contains 1)")]
    Improper,
    #[error("{combos} candidate combinations exceed the bound {bound}")]
    SearchBoundExceeded { combos: u128, bound: u128 },
    #[error("ideal shape does not match the functor")]
    WrongShape,
}

/// A levelwise ideal closed under transfer, norm, restriction, and
/// conjugation, indexed by lattice position (empty outside the support).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TambaraIdeal {
    pub levels: Vec<ElemSet>,
}

/// A levelwise ideal closed under transfer, restriction, and conjugation
/// (no norm condition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenIdeal {
    pub levels: Vec<ElemSet>,
}

impl TambaraIdeal {
    pub fn zero(r: &TambaraFunctor) -> TambaraIdeal {
        let mut levels = empty_levels(r);
        for k in r.subs() {
            levels[k].insert(r.level(k).zero());
        }
        TambaraIdeal { levels }
    }

    pub fn unit(r: &TambaraFunctor) -> TambaraIdeal {
        let mut levels = empty_levels(r);
        for k in r.subs() {
            levels[k].insert_range(..);
        }
        TambaraIdeal { levels }
    }

    pub fn level(&self, k: usize) -> &ElemSet {
        &self.levels[k]
    }

    /// Levelwise `other ⊆ self`.
    pub fn contains(&self, other: &TambaraIdeal) -> bool {
        self.levels
            .iter()
            .zip(&other.levels)
            .all(|(mine, theirs)| theirs.is_subset(mine))
    }

    pub fn is_zero(&self, r: &TambaraFunctor) -> bool {
        *self == TambaraIdeal::zero(r)
    }

    pub fn is_unit(&self, r: &TambaraFunctor) -> bool {
        r.subs().into_iter().all(|k| self.levels[k].contains(r.level(k).one()))
    }

    /// Levelwise intersection (again a Tambara ideal).
    pub fn intersection(&self, other: &TambaraIdeal) -> TambaraIdeal {
        let levels = self
            .levels
            .iter()
            .zip(&other.levels)
            .map(|(a, b)| {
                let mut out = a.clone();
                out.intersect_with(b);
                out
            })
            .collect();
        TambaraIdeal { levels }
    }

    /// Human-readable level-by-level description.
    pub fn describe(&self, r: &TambaraFunctor) -> String {
        r.subs()
            .into_iter()
            .map(|k| format!("{}: {}", r.lat().label(k), ideal_label(r.level(k), &self.levels[k])))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn empty_levels(r: &TambaraFunctor) -> Vec<ElemSet> {
    (0..r.lat().len())
        .map(|k| {
            if r.lat().is_sub(k, r.top()) {
                ElemSet::with_capacity(r.level(k).order())
            } else {
                ElemSet::with_capacity(0)
            }
        })
        .collect()
}

fn check_shape(r: &TambaraFunctor, levels: &[ElemSet]) -> Result<(), IdealError> {
    if levels.len() != r.lat().len() {
        return Err(IdealError::WrongShape);
    }
    for k in 0..levels.len() {
        let expected = if r.lat().is_sub(k, r.top()) { r.level(k).order() } else { 0 };
        if levels[k].len() != expected {
            return Err(IdealError::WrongShape);
        }
    }
    Ok(())
}

fn verify_conditions(
    r: &TambaraFunctor,
    levels: &[ElemSet],
    with_norm: bool,
) -> Result<(), IdealError> {
    check_shape(r, levels)?;
    for k in r.subs() {
        crate::rings::verify_ideal(r.level(k), &levels[k])
            .map_err(|e| IdealError::NotAnIdeal { level: k, witness: e.to_string() })?;
    }
    for (k, h) in r.proper_pairs() {
        for x in levels[k].ones() {
            if !levels[h].contains(r.tr(k, h, x)) {
                return Err(IdealError::ConditionFails {
                    condition: "transfer",
                    from: k,
                    to: h,
                    element: x,
                });
            }
            if with_norm && !levels[h].contains(r.nm(k, h, x)) {
                return Err(IdealError::ConditionFails {
                    condition: "norm",
                    from: k,
                    to: h,
                    element: x,
                });
            }
        }
        for x in levels[h].ones() {
            if !levels[k].contains(r.res(k, h, x)) {
                return Err(IdealError::ConditionFails {
                    condition: "restriction",
                    from: h,
                    to: k,
                    element: x,
                });
            }
        }
    }
    for h in r.subs() {
        for g in r.top_members() {
            let target = r.lat().conjugate(g, h);
            for x in levels[h].ones() {
                if !levels[target].contains(r.conj(g, h, x)) {
                    return Err(IdealError::ConditionFails {
                        condition: "conjugation",
                        from: h,
                        to: target,
                        element: x,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Check all four Tambara-ideal conditions plus the levelwise ideal axioms.
pub fn verify_tambara(r: &TambaraFunctor, ideal: &TambaraIdeal) -> Result<(), IdealError> {
    verify_conditions(r, &ideal.levels, true)
}

/// Check the Green-ideal conditions (no norm requirement).
pub fn verify_green(r: &TambaraFunctor, ideal: &GreenIdeal) -> Result<(), IdealError> {
    verify_conditions(r, &ideal.levels, false)
}

fn close_levels(
    r: &TambaraFunctor,
    generators: &[(usize, usize)],
    with_norm: bool,
) -> Result<Vec<ElemSet>, IdealError> {
    let mut sets = empty_levels(r);
    for k in r.subs() {
        sets[k].insert(r.level(k).zero());
    }
    for &(k, x) in generators {
        if !r.lat().is_sub(k, r.top()) || x >= r.level(k).order() {
            return Err(IdealError::WrongShape);
        }
        sets[k].insert(x);
    }
    let pairs = r.proper_pairs();
    let members = r.top_members();
    loop {
        let mut changed = false;
        for k in r.subs() {
            let current: Vec<usize> = sets[k].ones().collect();
            let closed = ideal_closure(r.level(k), &current);
            if closed != sets[k] {
                sets[k] = closed;
                changed = true;
            }
        }
        for &(k, h) in &pairs {
            let lower: Vec<usize> = sets[k].ones().collect();
            for x in lower {
                if !sets[h].put(r.tr(k, h, x)) {
                    changed = true;
                }
                if with_norm && !sets[h].put(r.nm(k, h, x)) {
                    changed = true;
                }
            }
            let upper: Vec<usize> = sets[h].ones().collect();
            for x in upper {
                if !sets[k].put(r.res(k, h, x)) {
                    changed = true;
                }
            }
        }
        for h in r.subs() {
            for &g in &members {
                let target = r.lat().conjugate(g, h);
                let src: Vec<usize> = sets[h].ones().collect();
                for x in src {
                    if !sets[target].put(r.conj(g, h, x)) {
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Ok(sets);
        }
    }
}

/// Least Tambara ideal containing the given `(level, element)` generators.
pub fn close_tambara(
    r: &TambaraFunctor,
    generators: &[(usize, usize)],
) -> Result<TambaraIdeal, IdealError> {
    Ok(TambaraIdeal { levels: close_levels(r, generators, true)? })
}

/// Least Green ideal containing the given `(level, element)` generators.
pub fn close_green(
    r: &TambaraFunctor,
    generators: &[(usize, usize)],
) -> Result<GreenIdeal, IdealError> {
    Ok(GreenIdeal { levels: close_levels(r, generators, false)? })
}

/// Closure of the levelwise setwise products `I(K)·J(K)`.
pub fn ideal_product(
    r: &TambaraFunctor,
    i: &TambaraIdeal,
    j: &TambaraIdeal,
) -> Result<TambaraIdeal, IdealError> {
    let mut generators = Vec::new();
    for k in r.subs() {
        let ring = r.level(k);
        for a in i.levels[k].ones() {
            for b in j.levels[k].ones() {
                generators.push((k, ring.mul(a, b)));
            }
        }
    }
    close_tambara(r, &generators)
}

/// Whether no level contains its unit (equivalently, the ideal is not the
/// whole functor: a unit anywhere spreads everywhere under Res and Nm).
pub fn is_proper(r: &TambaraFunctor, ideal: &TambaraIdeal) -> bool {
    !ideal.is_unit(r) && r.subs().into_iter().all(|k| !ideal.levels[k].contains(r.level(k).one()))
}

/// The distinct single-generator ideals of the functor.
pub fn principal_ideals(r: &TambaraFunctor) -> Result<Vec<TambaraIdeal>, IdealError> {
    let mut out: Vec<TambaraIdeal> = Vec::new();
    for k in r.subs() {
        for x in r.level(k).elements() {
            let p = close_tambara(r, &[(k, x)])?;
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Primality via the principal-pair test: `𝔭` is prime iff no two
/// single-generator ideals outside `𝔭` multiply into `𝔭`. Equivalent to the
/// all-ideal definition because products are monotone; the equivalence is
/// cross-checked against [`is_prime_full`] wherever enumeration completes.
pub fn is_prime(r: &TambaraFunctor, p: &TambaraIdeal) -> Result<bool, IdealError> {
    verify_tambara(r, p)?;
    if !is_proper(r, p) {
        return Err(IdealError::Improper);
    }
    let outside: Vec<TambaraIdeal> = principal_ideals(r)?
        .into_iter()
        .filter(|i| !p.contains(i))
        .collect();
    for i in &outside {
        for j in &outside {
            if p.contains(&ideal_product(r, i, j)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Primality straight from the definition, quantifying over all enumerated
/// ideals.
pub fn is_prime_full(
    r: &TambaraFunctor,
    p: &TambaraIdeal,
    bound: u128,
) -> Result<bool, IdealError> {
    verify_tambara(r, p)?;
    if !is_proper(r, p) {
        return Err(IdealError::Improper);
    }
    let all = enumerate_tambara_ideals(r, bound)?;
    for i in &all {
        if p.contains(i) {
            continue;
        }
        for j in &all {
            if p.contains(j) {
                continue;
            }
            if p.contains(&ideal_product(r, i, j)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every per-level choice of ring ideal satisfying the four conditions,
/// found by depth-first search from the top level down so the restriction
/// condition prunes earliest. Errors if the raw combination count exceeds
/// `bound`.
pub fn enumerate_tambara_ideals(
    r: &TambaraFunctor,
    bound: u128,
) -> Result<Vec<TambaraIdeal>, IdealError> {
    let lat = r.lat();
    let subs = r.subs();
    let mut order: Vec<usize> = subs.clone();
    order.sort_by_key(|&k| (std::cmp::Reverse(lat.subgroup(k).order()), k));
    let mut candidates: Vec<Vec<ElemSet>> = vec![Vec::new(); lat.len()];
    let mut combos: u128 = 1;
    for &k in &subs {
        candidates[k] = enumerate_ideals(r.level(k), DEFAULT_IDEAL_ENUM_ORDER)?;
        combos = combos.saturating_mul(candidates[k].len() as u128);
    }
    if combos > bound {
        return Err(IdealError::SearchBoundExceeded { combos, bound });
    }

    let members = r.top_members();
    let mut assigned: Vec<Option<ElemSet>> = vec![None; lat.len()];
    let mut found = Vec::new();
    // Conditions between the newly assigned level and all earlier ones.
    fn consistent(
        r: &TambaraFunctor,
        assigned: &[Option<ElemSet>],
        members: &[usize],
        k: usize,
    ) -> bool {
        let set_k = assigned[k].as_ref().unwrap();
        for h in 0..assigned.len() {
            let Some(set_h) = assigned[h].as_ref() else { continue };
            if h != k && r.lat().is_sub(k, h) {
                if set_h.ones().any(|x| !set_k.contains(r.res(k, h, x))) {
                    return false;
                }
                if set_k
                    .ones()
                    .any(|x| !set_h.contains(r.tr(k, h, x)) || !set_h.contains(r.nm(k, h, x)))
                {
                    return false;
                }
            }
            if h != k && r.lat().is_sub(h, k) {
                if set_k.ones().any(|x| !set_h.contains(r.res(h, k, x))) {
                    return false;
                }
                if set_h
                    .ones()
                    .any(|x| !set_k.contains(r.tr(h, k, x)) || !set_k.contains(r.nm(h, k, x)))
                {
                    return false;
                }
            }
        }
        for &g in members {
            let fwd = r.lat().conjugate(g, k);
            if let Some(set_t) = assigned[fwd].as_ref() {
                if set_k.ones().any(|x| !set_t.contains(r.conj(g, k, x))) {
                    return false;
                }
            }
            for h in 0..assigned.len() {
                if r.lat().conjugate(g, h) == k {
                    if let Some(set_h) = assigned[h].as_ref() {
                        if set_h.ones().any(|x| !set_k.contains(r.conj(g, h, x))) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    fn dfs(
        r: &TambaraFunctor,
        order: &[usize],
        candidates: &[Vec<ElemSet>],
        members: &[usize],
        assigned: &mut Vec<Option<ElemSet>>,
        depth: usize,
        found: &mut Vec<TambaraIdeal>,
    ) {
        if depth == order.len() {
            let levels = (0..assigned.len())
                .map(|k| assigned[k].clone().unwrap_or_else(|| ElemSet::with_capacity(0)))
                .collect();
            found.push(TambaraIdeal { levels });
            return;
        }
        let k = order[depth];
        for cand in &candidates[k] {
            assigned[k] = Some(cand.clone());
            if consistent(r, assigned, members, k) {
                dfs(r, order, candidates, members, assigned, depth + 1, found);
            }
        }
        assigned[k] = None;
    }
    dfs(r, &order, &candidates, &members, &mut assigned, 0, &mut found);
    found.sort_by_key(|i| {
        i.levels
            .iter()
            .map(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()))
            .collect::<Vec<_>>()
    });
    Ok(found)
}

/// Kernel of a validated morphism, as a Tambara ideal of the source.
pub fn kernel(
    f: &TambaraMorphism,
    s: &TambaraFunctor,
    t: &TambaraFunctor,
) -> Result<TambaraIdeal, IdealError> {
    let ideal = TambaraIdeal { levels: f.kernel_sets(s, t) };
    verify_tambara(s, &ideal)?;
    Ok(ideal)
}

/// Levelwise preimage of an ideal of the target along a morphism; the
/// conditions are re-verified as a self-check.
pub fn contract(
    f: &TambaraMorphism,
    s: &TambaraFunctor,
    j: &TambaraIdeal,
) -> Result<TambaraIdeal, IdealError> {
    let mut levels = empty_levels(s);
    for k in s.subs() {
        for (x, &v) in f.maps[k].iter().enumerate() {
            if j.levels[k].contains(v) {
                levels[k].insert(x);
            }
        }
    }
    let ideal = TambaraIdeal { levels };
    verify_tambara(s, &ideal)?;
    Ok(ideal)
}

/// Image of an ideal of the source under coinduction: at each level, the
/// tuples all of whose components lie in the ideal.
pub fn coind_ideal(c: &Coinduction, i: &TambaraIdeal) -> Result<TambaraIdeal, IdealError> {
    let r = &c.functor;
    let mut levels = empty_levels(r);
    for k in r.subs() {
        let cl = c.level(k);
        for z in 0..cl.product.ring.order() {
            let comps = cl.product.decode(z);
            if comps.iter().zip(&cl.stabs).all(|(&v, &st)| i.levels[st].contains(v)) {
                levels[k].insert(z);
            }
        }
    }
    let ideal = TambaraIdeal { levels };
    verify_tambara(r, &ideal)?;
    Ok(ideal)
}

/// Inverse of [`coind_ideal`]: restrict to the source's support and project
/// onto the identity-coset factor. `source` is the functor the coinduction
/// was built from.
pub fn coind_ideal_inverse(
    c: &Coinduction,
    source: &TambaraFunctor,
    j: &TambaraIdeal,
) -> Result<TambaraIdeal, IdealError> {
    let mut levels = empty_levels(source);
    for k in source.subs() {
        debug_assert_eq!(c.level(k).stabs[0], k);
        for z in j.levels[k].ones() {
            levels[k].insert(c.identity_factor(k, z));
        }
    }
    let ideal = TambaraIdeal { levels };
    verify_tambara(source, &ideal)?;
    Ok(ideal)
}

/// The ideal of `r.restrict_to(h)` keeping the levels at subgroups of `h`.
pub fn restrict_ideal(
    r: &TambaraFunctor,
    p: &TambaraIdeal,
    h: usize,
) -> Result<TambaraIdeal, IdealError> {
    let restricted = r.restrict_to(h).map_err(|_| IdealError::WrongShape)?;
    let mut levels = empty_levels(&restricted);
    for k in restricted.subs() {
        levels[k] = p.levels[k].clone();
    }
    let ideal = TambaraIdeal { levels };
    verify_tambara(&restricted, &ideal)?;
    Ok(ideal)
}
