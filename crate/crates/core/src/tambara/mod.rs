//! Levelwise-finite Tambara functors: one finite commutative ring per
//! subgroup, connected by restrictions, additive transfers, multiplicative
//! norms, and conjugations, together with an exhaustive axiom validator.
//!
//! A functor lives over a fixed ambient [`SubgroupLattice`] but may be
//! supported on a proper subgroup (`top`): levels and maps exist exactly for
//! the subgroups contained in `top`, and conjugations for members of `top`.
//! This makes restriction to a subgroup a reindexing rather than a change of
//! ambient group, and lets coinduction consume functors on subgroups
//! directly.
//!
//! Structure maps are stored for every nested pair (not generated from a
//! minimal set) and the validator checks composition consistency, so
//! redundant data cannot drift apart silently.

pub mod coind;
pub mod fp;
pub mod ghost;
pub mod morphism;
pub mod split;

use crate::groups::{GroupError, SubgroupLattice};
use crate::rings::{FiniteRing, RingError};
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TambaraError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    GRing(#[from] crate::grings::GRingError),
    #[error("no level ring supplied for subgroup {sub}")]
    MissingLevel { sub: usize },
    #[error("missing {kind} map from level {from} to level {to}")]
    MissingMap { kind: &'static str, from: usize, to: usize },
    #[error("{kind} map from level {from} to level {to} has the wrong shape")]
    MapShape { kind: &'static str, from: usize, to: usize },
    #[error("axiom {axiom} fails at {location}")]
    AxiomViolation { axiom: &'static str, location: String },
    #[error("group of order {order} is not cyclic of prime order")]
    NotCyclicPrime { order: usize },
    #[error("full-strictness validation unavailable: {reason}")]
    FullCheckUnavailable { reason: String },
    #[error("element {element} does not split the functor: {reason}")]
    NotSplittable { element: usize, reason: String },
    #[error("levelwise kernel is not an ideal: {reason}")]
    NotAnIdeal { reason: String },
    #[error("bad group embedding: {reason}")]
    BadEmbedding { reason: String },
}

/// How much of the axiom system to check.
///
/// `Standard` checks, exhaustively over elements: ring-map laws for each kind
/// of structure map, identity maps, composition chains, all conjugation
/// axioms and compatibilities, Frobenius reciprocity, and the Mackey
/// double-coset formulas for Res∘Tr and Res∘Nm.
///
/// `Full` additionally checks the norm-of-a-sum expansion (the distributive
/// law for norms along fold maps). That expansion has a closed, bispan-free
/// normal form only exploited here for groups of prime order p with a small
/// bottom level: Nm(x+y) = Nm(x) + Nm(y) + Tr(Σ_f Π_j c_{σ^j} z_{f(j)}),
/// the sum over rotation-orbit representatives of nonconstant functions
/// f: Z/p → {x, y}. Binary sums imply the n-ary law by associativity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    Standard,
    Full,
}

/// Largest bottom level on which full strictness is attempted.
pub const FULL_CHECK_LEVEL_BOUND: usize = 16;

/// Raw functor data prior to validation.
#[derive(Debug, Clone)]
pub struct TambaraParts {
    pub lat: Arc<SubgroupLattice>,
    /// Subgroup index the functor is supported on.
    pub top: usize,
    /// One ring per lattice index `k ≤ top` (`None` elsewhere).
    pub levels: Vec<Option<FiniteRing>>,
    /// `(k, h)` with `k ≤ h ≤ top`: map `R(h) → R(k)`.
    pub res: HashMap<(usize, usize), Vec<usize>>,
    /// `(k, h)`: additive map `R(k) → R(h)`.
    pub tr: HashMap<(usize, usize), Vec<usize>>,
    /// `(k, h)`: multiplicative map `R(k) → R(h)`.
    pub nm: HashMap<(usize, usize), Vec<usize>>,
    /// `(g, h)` for `g` a member of `top`: map `R(h) → R(ghg⁻¹)`.
    pub conj: HashMap<(usize, usize), Vec<usize>>,
}

/// A validated Tambara functor.
#[derive(Debug, Clone)]
pub struct TambaraFunctor {
    lat: Arc<SubgroupLattice>,
    top: usize,
    levels: Vec<Option<FiniteRing>>,
    res: HashMap<(usize, usize), Vec<usize>>,
    tr: HashMap<(usize, usize), Vec<usize>>,
    nm: HashMap<(usize, usize), Vec<usize>>,
    conj: HashMap<(usize, usize), Vec<usize>>,
}

/// Indices of the subgroups of `top` within the lattice, ascending.
pub fn subs_within(lat: &SubgroupLattice, top: usize) -> Vec<usize> {
    (0..lat.len()).filter(|&k| lat.is_sub(k, top)).collect()
}

impl TambaraFunctor {
    /// Shape-check the parts, then validate the axioms at the requested
    /// strictness.
    pub fn assemble(parts: TambaraParts, strictness: Strictness) -> Result<TambaraFunctor, TambaraError> {
        let TambaraParts { lat, top, mut levels, res, tr, nm, conj } = parts;
        if levels.len() != lat.len() {
            levels.resize(lat.len(), None);
        }
        let subs = subs_within(&lat, top);
        for &k in &subs {
            if levels[k].is_none() {
                return Err(TambaraError::MissingLevel { sub: k });
            }
        }
        // Levels outside the support are dead data; drop them.
        for k in 0..levels.len() {
            if !lat.is_sub(k, top) {
                levels[k] = None;
            }
        }
        let order = |k: usize| levels[k].as_ref().unwrap().order();
        for &h in &subs {
            for &k in &subs {
                if !lat.is_sub(k, h) {
                    continue;
                }
                for (kind, map, src, dst) in [
                    ("res", res.get(&(k, h)), h, k),
                    ("tr", tr.get(&(k, h)), k, h),
                    ("nm", nm.get(&(k, h)), k, h),
                ] {
                    let map = map.ok_or(TambaraError::MissingMap { kind, from: src, to: dst })?;
                    if map.len() != order(src) || map.iter().any(|&v| v >= order(dst)) {
                        return Err(TambaraError::MapShape { kind, from: src, to: dst });
                    }
                }
            }
            for g in lat.subgroup(top).members() {
                let target = lat.conjugate(g, h);
                let map = conj
                    .get(&(g, h))
                    .ok_or(TambaraError::MissingMap { kind: "conj", from: h, to: target })?;
                if map.len() != order(h) || map.iter().any(|&v| v >= order(target)) {
                    return Err(TambaraError::MapShape { kind: "conj", from: h, to: target });
                }
            }
        }
        let functor = TambaraFunctor { lat, top, levels, res, tr, nm, conj };
        functor.validate(strictness)?;
        Ok(functor)
    }

    pub fn lat(&self) -> &Arc<SubgroupLattice> {
        &self.lat
    }

    /// The subgroup index the functor is supported on.
    pub fn top(&self) -> usize {
        self.top
    }

    /// Lattice index of the trivial subgroup (the bottom level).
    pub fn bottom(&self) -> usize {
        self.lat.trivial()
    }

    /// Subgroup indices carrying levels, ascending.
    pub fn subs(&self) -> Vec<usize> {
        subs_within(&self.lat, self.top)
    }

    /// Strictly nested pairs `(k, h)` with `k < h ≤ top`.
    pub fn proper_pairs(&self) -> Vec<(usize, usize)> {
        let subs = self.subs();
        let mut out = Vec::new();
        for &h in &subs {
            for &k in &subs {
                if k != h && self.lat.is_sub(k, h) {
                    out.push((k, h));
                }
            }
        }
        out
    }

    /// Members of the supporting subgroup (the acting group elements).
    pub fn top_members(&self) -> Vec<usize> {
        self.lat.subgroup(self.top).members().collect()
    }

    pub fn level(&self, h: usize) -> &FiniteRing {
        self.levels[h].as_ref().expect("level within support")
    }

    pub fn res_map(&self, k: usize, h: usize) -> &[usize] {
        &self.res[&(k, h)]
    }

    pub fn tr_map(&self, k: usize, h: usize) -> &[usize] {
        &self.tr[&(k, h)]
    }

    pub fn nm_map(&self, k: usize, h: usize) -> &[usize] {
        &self.nm[&(k, h)]
    }

    pub fn conj_map(&self, g: usize, h: usize) -> &[usize] {
        &self.conj[&(g, h)]
    }

    /// Restriction `R(G/h) → R(G/k)` for `k ≤ h`.
    pub fn res(&self, k: usize, h: usize, x: usize) -> usize {
        self.res[&(k, h)][x]
    }

    /// Additive transfer `R(G/k) → R(G/h)` for `k ≤ h`.
    pub fn tr(&self, k: usize, h: usize, x: usize) -> usize {
        self.tr[&(k, h)][x]
    }

    /// Multiplicative norm `R(G/k) → R(G/h)` for `k ≤ h`.
    pub fn nm(&self, k: usize, h: usize, x: usize) -> usize {
        self.nm[&(k, h)][x]
    }

    /// Conjugation `R(G/h) → R(G/ghg⁻¹)` for `g` a member of `top`.
    pub fn conj(&self, g: usize, h: usize, x: usize) -> usize {
        self.conj[&(g, h)][x]
    }

    /// The same functor supported on a subgroup `new_top ≤ top`.
    pub fn restrict_to(&self, new_top: usize) -> Result<TambaraFunctor, TambaraError> {
        if !self.lat.is_sub(new_top, self.top) {
            return Err(TambaraError::BadEmbedding {
                reason: format!("subgroup {new_top} is not contained in {top}", top = self.top),
            });
        }
        let keep = |k: usize| self.lat.is_sub(k, new_top);
        let levels = (0..self.lat.len())
            .map(|k| if keep(k) { self.levels[k].clone() } else { None })
            .collect();
        let filter_pairs = |m: &HashMap<(usize, usize), Vec<usize>>| {
            m.iter()
                .filter(|((k, h), _)| keep(*k) && keep(*h))
                .map(|(&key, v)| (key, v.clone()))
                .collect::<HashMap<_, _>>()
        };
        let members = self.lat.subgroup(new_top);
        let conj = self
            .conj
            .iter()
            .filter(|((g, h), _)| members.contains(*g) && keep(*h))
            .map(|(&key, v)| (key, v.clone()))
            .collect();
        Ok(TambaraFunctor {
            lat: self.lat.clone(),
            top: new_top,
            levels,
            res: filter_pairs(&self.res),
            tr: filter_pairs(&self.tr),
            nm: filter_pairs(&self.nm),
            conj,
        })
    }

    /// Whether every Weyl group acts trivially on its level through conj.
    pub fn is_idle(&self) -> bool {
        self.subs().into_iter().all(|h| {
            self.lat.weyl_reps(h, self.top).into_iter().all(|w| {
                let map = self.conj_map(w, h);
                debug_assert_eq!(self.lat.conjugate(w, h), h);
                map.iter().enumerate().all(|(x, &y)| x == y)
            })
        })
    }

    /// Check the axiom system; see [`Strictness`].
    pub fn validate(&self, strictness: Strictness) -> Result<(), TambaraError> {
        self.validate_ring_maps()?;
        self.validate_identities_and_chains()?;
        self.validate_conjugation()?;
        self.validate_frobenius()?;
        self.validate_mackey()?;
        if strictness == Strictness::Full {
            self.validate_norm_of_sum()?;
        }
        Ok(())
    }

    fn violation(axiom: &'static str, location: String) -> TambaraError {
        TambaraError::AxiomViolation { axiom, location }
    }

    fn validate_ring_maps(&self) -> Result<(), TambaraError> {
        for &h in &self.subs() {
            for &k in &self.subs() {
                if !self.lat.is_sub(k, h) {
                    continue;
                }
                let rh = self.level(h);
                let rk = self.level(k);
                let res = self.res_map(k, h);
                let tr = self.tr_map(k, h);
                let nm = self.nm_map(k, h);
                if res[rh.one()] != rk.one() {
                    return Err(Self::violation("res-one", format!("k={k} h={h}")));
                }
                if nm[rk.one()] != rh.one() {
                    return Err(Self::violation("nm-one", format!("k={k} h={h}")));
                }
                if nm[rk.zero()] != rh.zero() {
                    return Err(Self::violation("nm-zero", format!("k={k} h={h}")));
                }
                for x in rh.elements() {
                    for y in rh.elements() {
                        if res[rh.add(x, y)] != rk.add(res[x], res[y]) {
                            return Err(Self::violation("res-add", format!("k={k} h={h} x={x} y={y}")));
                        }
                        if res[rh.mul(x, y)] != rk.mul(res[x], res[y]) {
                            return Err(Self::violation("res-mul", format!("k={k} h={h} x={x} y={y}")));
                        }
                    }
                }
                for x in rk.elements() {
                    for y in rk.elements() {
                        if tr[rk.add(x, y)] != rh.add(tr[x], tr[y]) {
                            return Err(Self::violation("tr-add", format!("k={k} h={h} x={x} y={y}")));
                        }
                        if nm[rk.mul(x, y)] != rh.mul(nm[x], nm[y]) {
                            return Err(Self::violation("nm-mul", format!("k={k} h={h} x={x} y={y}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_identities_and_chains(&self) -> Result<(), TambaraError> {
        let subs = self.subs();
        for &h in &subs {
            let n = self.level(h).order();
            for (kind, map) in [
                ("res", self.res_map(h, h)),
                ("tr", self.tr_map(h, h)),
                ("nm", self.nm_map(h, h)),
            ] {
                if map.iter().enumerate().any(|(x, &y)| x != y) {
                    let _ = n;
                    return Err(Self::violation("identity-map", format!("{kind} at level {h}")));
                }
            }
        }
        for &h in &subs {
            for &l in &subs {
                if !self.lat.is_sub(l, h) {
                    continue;
                }
                for &k in &subs {
                    if !self.lat.is_sub(k, l) {
                        continue;
                    }
                    let res_lh = self.res_map(l, h);
                    let res_kl = self.res_map(k, l);
                    let res_kh = self.res_map(k, h);
                    for x in self.level(h).elements() {
                        if res_kl[res_lh[x]] != res_kh[x] {
                            return Err(Self::violation("res-chain", format!("k={k} l={l} h={h} x={x}")));
                        }
                    }
                    let tr_kl = self.tr_map(k, l);
                    let tr_lh = self.tr_map(l, h);
                    let tr_kh = self.tr_map(k, h);
                    let nm_kl = self.nm_map(k, l);
                    let nm_lh = self.nm_map(l, h);
                    let nm_kh = self.nm_map(k, h);
                    for x in self.level(k).elements() {
                        if tr_lh[tr_kl[x]] != tr_kh[x] {
                            return Err(Self::violation("tr-chain", format!("k={k} l={l} h={h} x={x}")));
                        }
                        if nm_lh[nm_kl[x]] != nm_kh[x] {
                            return Err(Self::violation("nm-chain", format!("k={k} l={l} h={h} x={x}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_conjugation(&self) -> Result<(), TambaraError> {
        let subs = self.subs();
        let members = self.top_members();
        let group = self.lat.group().clone();
        let e = group.identity();
        for &h in &subs {
            let rh = self.level(h);
            // c_e = id and c_n = id for members n of h.
            for n in std::iter::once(e).chain(self.lat.subgroup(h).members()) {
                let map = self.conj_map(n, h);
                if map.iter().enumerate().any(|(x, &y)| x != y) {
                    return Err(Self::violation("conj-stabilizer", format!("g={n} level={h}")));
                }
            }
            for &g in &members {
                let target = self.lat.conjugate(g, h);
                let rt = self.level(target);
                let c = self.conj_map(g, h);
                let c_back = self.conj_map(group.inv(g), target);
                if c[rh.one()] != rt.one() {
                    return Err(Self::violation("conj-one", format!("g={g} level={h}")));
                }
                for x in rh.elements() {
                    if c_back[c[x]] != x {
                        return Err(Self::violation("conj-invertible", format!("g={g} level={h} x={x}")));
                    }
                    for y in rh.elements() {
                        if c[rh.add(x, y)] != rt.add(c[x], c[y]) {
                            return Err(Self::violation("conj-add", format!("g={g} level={h} x={x} y={y}")));
                        }
                        if c[rh.mul(x, y)] != rt.mul(c[x], c[y]) {
                            return Err(Self::violation("conj-mul", format!("g={g} level={h} x={x} y={y}")));
                        }
                    }
                }
            }
            for &g1 in &members {
                for &g2 in &members {
                    let mid = self.lat.conjugate(g2, h);
                    let c2 = self.conj_map(g2, h);
                    let c1 = self.conj_map(g1, mid);
                    let c12 = self.conj_map(group.mul(g1, g2), h);
                    for x in rh.elements() {
                        if c1[c2[x]] != c12[x] {
                            return Err(Self::violation(
                                "conj-chain",
                                format!("g1={g1} g2={g2} level={h} x={x}"),
                            ));
                        }
                    }
                }
            }
        }
        // Compatibility with res, tr, nm.
        for (k, h) in self.proper_pairs() {
            for &g in &members {
                let gk = self.lat.conjugate(g, k);
                let gh = self.lat.conjugate(g, h);
                let res = self.res_map(k, h);
                let res_g = self.res_map(gk, gh);
                let ck = self.conj_map(g, k);
                let ch = self.conj_map(g, h);
                for x in self.level(h).elements() {
                    if ck[res[x]] != res_g[ch[x]] {
                        return Err(Self::violation("conj-res", format!("g={g} k={k} h={h} x={x}")));
                    }
                }
                let tr = self.tr_map(k, h);
                let tr_g = self.tr_map(gk, gh);
                let nm = self.nm_map(k, h);
                let nm_g = self.nm_map(gk, gh);
                for x in self.level(k).elements() {
                    if ch[tr[x]] != tr_g[ck[x]] {
                        return Err(Self::violation("conj-tr", format!("g={g} k={k} h={h} x={x}")));
                    }
                    if ch[nm[x]] != nm_g[ck[x]] {
                        return Err(Self::violation("conj-nm", format!("g={g} k={k} h={h} x={x}")));
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_frobenius(&self) -> Result<(), TambaraError> {
        for (k, h) in self.proper_pairs() {
            let rh = self.level(h);
            let rk = self.level(k);
            let res = self.res_map(k, h);
            let tr = self.tr_map(k, h);
            for x in rk.elements() {
                for y in rh.elements() {
                    if tr[rk.mul(x, res[y])] != rh.mul(tr[x], y) {
                        return Err(Self::violation("frobenius", format!("k={k} h={h} x={x} y={y}")));
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_mackey(&self) -> Result<(), TambaraError> {
        let subs = self.subs();
        for &h in &subs {
            for &l in &subs {
                if !self.lat.is_sub(l, h) {
                    continue;
                }
                for &k in &subs {
                    if !self.lat.is_sub(k, h) {
                        continue;
                    }
                    let dc = self.lat.double_cosets(l, k, h);
                    let rl = self.level(l);
                    for x in self.level(k).elements() {
                        let lhs_tr = self.res(l, h, self.tr(k, h, x));
                        let lhs_nm = self.res(l, h, self.nm(k, h, x));
                        let mut rhs_tr = rl.zero();
                        let mut rhs_nm = rl.one();
                        for t in 0..dc.reps.len() {
                            let g = dc.reps[t];
                            let stab = self.lat.stabilizer_in_left(&dc, t);
                            let gk = self.lat.conjugate(g, k);
                            let moved = self.conj(g, k, x);
                            let pulled = self.res(stab, gk, moved);
                            rhs_tr = rl.add(rhs_tr, self.tr(stab, l, pulled));
                            rhs_nm = rl.mul(rhs_nm, self.nm(stab, l, pulled));
                        }
                        if lhs_tr != rhs_tr {
                            return Err(Self::violation("mackey-res-tr", format!("l={l} k={k} h={h} x={x}")));
                        }
                        if lhs_nm != rhs_nm {
                            return Err(Self::violation("mackey-res-nm", format!("l={l} k={k} h={h} x={x}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The norm-of-a-sum expansion for prime-order groups; see [`Strictness`].
    fn validate_norm_of_sum(&self) -> Result<(), TambaraError> {
        let members = self.top_members();
        let p = members.len();
        if p == 1 {
            return Ok(()); // trivial group: nothing beyond the standard axioms
        }
        let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime {
            return Err(TambaraError::FullCheckUnavailable {
                reason: format!("supporting group has non-prime order {p}"),
            });
        }
        let e = self.bottom();
        let re = self.level(e);
        if re.order() > FULL_CHECK_LEVEL_BOUND {
            return Err(TambaraError::FullCheckUnavailable {
                reason: format!(
                    "bottom level has order {} > {FULL_CHECK_LEVEL_BOUND}",
                    re.order()
                ),
            });
        }
        let group = self.lat.group().clone();
        let sigma = *members.iter().find(|&&g| g != group.identity()).expect("p ≥ 2");
        let powers: Vec<usize> = (0..p)
            .scan(group.identity(), |acc, _| {
                let out = *acc;
                *acc = group.mul(sigma, *acc);
                Some(out)
            })
            .collect();
        // Rotation-orbit representatives of nonconstant 0/1 words of length p.
        let full = (1u32 << p) - 1;
        let rotate = |m: u32| ((m >> 1) | ((m & 1) << (p - 1))) & full;
        let reps: Vec<u32> = (1..full)
            .filter(|&m| {
                let mut r = m;
                for _ in 0..p {
                    r = rotate(r);
                    if r < m {
                        return false;
                    }
                }
                true
            })
            .collect();
        let top = self.top;
        let rt = self.level(top);
        for x in re.elements() {
            for y in re.elements() {
                let lhs = self.nm(e, top, re.add(x, y));
                let mut cross = re.zero();
                for &mask in &reps {
                    let mut term = re.one();
                    for (j, &g) in powers.iter().enumerate() {
                        let z = if (mask >> j) & 1 == 1 { y } else { x };
                        term = re.mul(term, self.conj(g, e, z));
                    }
                    cross = re.add(cross, term);
                }
                let rhs = rt.add(
                    rt.add(self.nm(e, top, x), self.nm(e, top, y)),
                    self.tr(e, top, cross),
                );
                if lhs != rhs {
                    return Err(Self::violation("norm-of-sum", format!("x={x} y={y}")));
                }
            }
        }
        Ok(())
    }
}

/// A commutative ring viewed as a functor supported on the trivial subgroup
/// (the one-point level with identity maps).
pub fn ring_at_bottom(
    lat: &Arc<SubgroupLattice>,
    ring: FiniteRing,
) -> Result<TambaraFunctor, TambaraError> {
    let e = lat.trivial();
    let id: Vec<usize> = ring.elements().collect();
    let mut levels = vec![None; lat.len()];
    levels[e] = Some(ring);
    let pair = |m: Vec<usize>| HashMap::from([((e, e), m)]);
    let conj = HashMap::from([((lat.group().identity(), e), id.clone())]);
    TambaraFunctor::assemble(
        TambaraParts {
            lat: lat.clone(),
            top: e,
            levels,
            res: pair(id.clone()),
            tr: pair(id.clone()),
            nm: pair(id),
            conj,
        },
        Strictness::Standard,
    )
}

/// Transport a functor along a group monomorphism into the group of another
/// lattice; the result is supported on the image subgroup.
///
/// `elem_map[a]` is the image of source-group element `a`.
pub fn transport(
    src: &TambaraFunctor,
    dst_lat: &Arc<SubgroupLattice>,
    elem_map: &[usize],
) -> Result<TambaraFunctor, TambaraError> {
    let sg = src.lat().group().clone();
    let dg = dst_lat.group().clone();
    if elem_map.len() != sg.order() {
        return Err(TambaraError::BadEmbedding { reason: "element map has wrong length".into() });
    }
    let mut seen = vec![false; dg.order()];
    for &v in elem_map {
        if v >= dg.order() || seen[v] {
            return Err(TambaraError::BadEmbedding { reason: "element map is not injective".into() });
        }
        seen[v] = true;
    }
    for a in sg.elements() {
        for b in sg.elements() {
            if dg.mul(elem_map[a], elem_map[b]) != elem_map[sg.mul(a, b)] {
                return Err(TambaraError::BadEmbedding {
                    reason: format!("element map is not a homomorphism at ({a}, {b})"),
                });
            }
        }
    }
    let image_sub = |k: usize| {
        let sub = src.lat().subgroup(k);
        let members = sub.members().map(|m| elem_map[m]);
        dst_lat
            .index_of(crate::groups::Subgroup::from_members(members))
            .expect("image of a subgroup is a subgroup of the destination lattice")
    };
    let new_top = image_sub(src.top());
    let mut levels: Vec<Option<FiniteRing>> = vec![None; dst_lat.len()];
    let mut res = HashMap::new();
    let mut tr = HashMap::new();
    let mut nm = HashMap::new();
    let mut conj = HashMap::new();
    for &h in &src.subs() {
        let h2 = image_sub(h);
        levels[h2] = Some(src.level(h).clone());
        for &k in &src.subs() {
            if !src.lat().is_sub(k, h) {
                continue;
            }
            let k2 = image_sub(k);
            res.insert((k2, h2), src.res_map(k, h).to_vec());
            tr.insert((k2, h2), src.tr_map(k, h).to_vec());
            nm.insert((k2, h2), src.nm_map(k, h).to_vec());
        }
        for g in src.lat().subgroup(src.top()).members() {
            conj.insert((elem_map[g], h2), src.conj_map(g, h).to_vec());
        }
    }
    TambaraFunctor::assemble(
        TambaraParts { lat: dst_lat.clone(), top: new_top, levels, res, tr, nm, conj },
        Strictness::Standard,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic;
    use crate::rings::{fq, zn};

    /// Functor over C2 with both levels Z/4 and trivial conjugation:
    /// res = id, tr = ·2, nm = squaring.
    pub(crate) fn z4_double_level() -> TambaraParts {
        let lat = Arc::new(SubgroupLattice::new(Arc::new(cyclic(2).unwrap())).unwrap());
        let z4 = zn(4).unwrap();
        let (e, top) = (lat.trivial(), lat.top());
        let id: Vec<usize> = (0..4).collect();
        let mut res = HashMap::new();
        let mut tr = HashMap::new();
        let mut nm = HashMap::new();
        let mut conj = HashMap::new();
        for h in [e, top] {
            res.insert((h, h), id.clone());
            tr.insert((h, h), id.clone());
            nm.insert((h, h), id.clone());
            for g in 0..2 {
                conj.insert((g, h), id.clone());
            }
        }
        res.insert((e, top), id.clone());
        tr.insert((e, top), (0..4).map(|x| (2 * x) % 4).collect());
        nm.insert((e, top), (0..4).map(|x| (x * x) % 4).collect());
        let mut levels = vec![None, None];
        levels[e] = Some(z4.clone());
        levels[top] = Some(z4);
        TambaraParts { lat, top, levels, res, tr, nm, conj }
    }

    #[test]
    fn double_level_ring_with_doubling_transfer_validates() {
        let f = TambaraFunctor::assemble(z4_double_level(), Strictness::Standard).unwrap();
        assert!(f.is_idle());
        f.validate(Strictness::Full).unwrap();
    }

    #[test]
    fn identity_norm_fails_norm_restriction_compatibility() {
        let mut parts = z4_double_level();
        let (e, top) = (parts.lat.trivial(), parts.lat.top());
        parts.nm.insert((e, top), (0..4).collect());
        let err = TambaraFunctor::assemble(parts, Strictness::Standard).unwrap_err();
        match err {
            TambaraError::AxiomViolation { axiom, .. } => assert_eq!(axiom, "mackey-res-nm"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn zero_transfer_mod_two_bottom_passes_standard_but_fails_norm_of_sum() {
        // Bottom F2, top Z/4, res = reduction, tr = 0, nm = 0↦0, 1↦1: every
        // standard axiom holds, but the norm of 1+1 distinguishes it from any
        // genuine functor.
        let lat = Arc::new(SubgroupLattice::new(Arc::new(cyclic(2).unwrap())).unwrap());
        let (e, top) = (lat.trivial(), lat.top());
        let f2 = fq(2).unwrap();
        let z4 = zn(4).unwrap();
        let id2: Vec<usize> = (0..2).collect();
        let id4: Vec<usize> = (0..4).collect();
        let mut res = HashMap::new();
        let mut tr = HashMap::new();
        let mut nm = HashMap::new();
        let mut conj = HashMap::new();
        res.insert((e, e), id2.clone());
        tr.insert((e, e), id2.clone());
        nm.insert((e, e), id2.clone());
        res.insert((top, top), id4.clone());
        tr.insert((top, top), id4.clone());
        nm.insert((top, top), id4.clone());
        res.insert((e, top), vec![0, 1, 0, 1]);
        tr.insert((e, top), vec![0, 0]);
        nm.insert((e, top), vec![0, 1]);
        for g in 0..2 {
            conj.insert((g, e), id2.clone());
            conj.insert((g, top), id4.clone());
        }
        let mut levels = vec![None, None];
        levels[e] = Some(f2);
        levels[top] = Some(z4);
        let parts = TambaraParts { lat, top, levels, res, tr, nm, conj };
        let f = TambaraFunctor::assemble(parts, Strictness::Standard).unwrap();
        let err = f.validate(Strictness::Full).unwrap_err();
        match err {
            TambaraError::AxiomViolation { axiom, .. } => assert_eq!(axiom, "norm-of-sum"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn missing_map_and_shape_errors_are_reported() {
        let mut parts = z4_double_level();
        let (e, top) = (parts.lat.trivial(), parts.lat.top());
        parts.tr.remove(&(e, top));
        assert!(matches!(
            TambaraFunctor::assemble(parts, Strictness::Standard),
            Err(TambaraError::MissingMap { kind: "tr", .. })
        ));
        let mut parts = z4_double_level();
        parts.res.insert((e, top), vec![0, 1]);
        assert!(matches!(
            TambaraFunctor::assemble(parts, Strictness::Standard),
            Err(TambaraError::MapShape { kind: "res", .. })
        ));
    }

    #[test]
    fn restriction_to_trivial_subgroup_keeps_bottom_level() {
        let f = TambaraFunctor::assemble(z4_double_level(), Strictness::Standard).unwrap();
        let r = f.restrict_to(f.bottom()).unwrap();
        assert_eq!(r.top(), r.bottom());
        assert_eq!(r.subs(), vec![r.bottom()]);
        assert_eq!(r.level(r.bottom()).order(), 4);
        r.validate(Strictness::Standard).unwrap();
        assert!(f.restrict_to(f.top()).is_ok());
    }

    #[test]
    fn full_check_unavailable_off_prime_orders() {
        // Over C4 the supporting group has composite order; build the
        // degenerate functor with every level the zero ring.
        let lat = Arc::new(SubgroupLattice::new(Arc::new(cyclic(4).unwrap())).unwrap());
        let one = zn(1).unwrap();
        let id: Vec<usize> = vec![0];
        let mut levels = vec![None; lat.len()];
        let mut res = HashMap::new();
        let mut tr = HashMap::new();
        let mut nm = HashMap::new();
        let mut conj = HashMap::new();
        for k in 0..lat.len() {
            levels[k] = Some(one.clone());
            for h in 0..lat.len() {
                if lat.is_sub(k, h) {
                    res.insert((k, h), id.clone());
                    tr.insert((k, h), id.clone());
                    nm.insert((k, h), id.clone());
                }
            }
            for g in 0..4 {
                conj.insert((g, k), id.clone());
            }
        }
        let parts = TambaraParts { lat: lat.clone(), top: lat.top(), levels, res, tr, nm, conj };
        let f = TambaraFunctor::assemble(parts, Strictness::Standard).unwrap();
        assert!(matches!(
            f.validate(Strictness::Full),
            Err(TambaraError::FullCheckUnavailable { .. })
        ));
    }
}
