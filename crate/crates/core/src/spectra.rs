//! Nakaoka spectra as finite specialization posets: brute-force spectra of
//! levelwise-finite functors, induced maps on spectra, the subgroup
//! stratification by images of restricted spectra, classified spectra of
//! Burnside functors over a finite prime set, the ghost stratum of a
//! prime-order functor, comparison of a fixed-point functor's spectrum with
//! the G-prime and fixed-subring spectra, domain-like tests, and clarified
//! decompositions.
//!
//! Topology conventions: a point `𝔭` specializes to `𝔮` when `𝔭 ⊆ 𝔮`, so a
//! subset of a fully enumerated spectrum is closed exactly when it is upward
//! closed under inclusion (products of ideals witness prime avoidance, making
//! every upward-closed set an intersection locus `V(∩ points)`).  Truncated
//! Burnside spectra never manufacture positive claims: a `No` verdict always
//! carries a witness pair that stays valid in the full spectrum, a `Yes`
//! appears only where a classification argument covers all unseen points,
//! and everything else is reported as truncation-limited.

use crate::burnside::{BurnsideError, BurnsideFunctor, BurnsidePrime, IdealOrder};
use crate::grings::{GRing, GRingError};
use crate::ideals::{
    coind_ideal, contract, enumerate_tambara_ideals, is_prime, is_proper, kernel, IdealError,
    TambaraIdeal,
};
use crate::intmat::{preimage_lattice, IntScalar, Lattice};
use crate::rings::{
    enumerate_ideals, ideal_label, is_prime_ideal, ElemSet, RingError, DEFAULT_IDEAL_ENUM_ORDER,
};
use crate::tambara::coind::coind_unit;
use crate::tambara::fp::{fixed_point_functor, FixedPointFunctor};
use crate::tambara::ghost::{ghost, Ghost};
use crate::tambara::morphism::TambaraMorphism;
use crate::tambara::split::{split_by_idempotent, splitting_candidates};
use crate::tambara::{transport, TambaraError, TambaraFunctor};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Tambara(#[from] TambaraError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    GRing(#[from] GRingError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
    #[error("contraction of a prime is not prime: {point}")]
    ContractionNotPrime { point: String },
    #[error("point is not represented in the spectrum: {description}")]
    PointNotRepresented { description: String },
    #[error("quotient does not carry an induced action: {reason}")]
    QuotientNotGRing { reason: String },
    #[error("the given ring ideal is not G-prime")]
    NotGPrime,
    #[error("comparison posets disagree: {reason}")]
    PosetMismatch { reason: String },
    #[error(
        "injective-restriction fast path ({fast}) disagrees with the zero-ideal \
         primality test ({slow})"
    )]
    DomainLikeDisagreement { fast: bool, slow: bool },
}

/// Three-valued answer for topology questions on possibly truncated spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    /// The represented points show no counterexample, but they do not rule
    /// out one among unrepresented points.
    TruncationLimited,
}

/// Closedness and openness of a point subset, with explicit counterexamples.
///
/// A closed witness is a pair `(i, j)` with `i` in the subset, `i ⊆ j`, and
/// `j` outside: the closure leaks out.  An open witness is a pair `(i, j)`
/// with `i` outside, `i ⊆ j`, and `j` inside: the complement fails to be
/// upward closed, so the subset misses a whole neighbourhood of `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyVerdict {
    pub closed: Verdict,
    pub open: Verdict,
    pub closed_witness: Option<(usize, usize)>,
    pub open_witness: Option<(usize, usize)>,
}

/// Decide closedness and openness of `subset` inside a specialization poset
/// given by `leq[i][j] ⟺ point i ⊆ point j`.
///
/// With `complete` set, the poset is a whole finite spectrum and both
/// questions are decided outright (closed ⟺ upward closed).  Otherwise only
/// witnessed `No` verdicts are asserted — a specialization out of or into the
/// subset stays a specialization no matter what other points exist — and
/// unwitnessed questions are left truncation-limited.
pub fn poset_verdict(leq: &[Vec<bool>], subset: &[usize], complete: bool) -> TopologyVerdict {
    let n = leq.len();
    let mut inside = vec![false; n];
    for &i in subset {
        inside[i] = true;
    }
    let mut closed_witness = None;
    'closed: for &i in subset {
        for j in 0..n {
            if leq[i][j] && !inside[j] {
                closed_witness = Some((i, j));
                break 'closed;
            }
        }
    }
    let mut open_witness = None;
    'open: for i in 0..n {
        if inside[i] {
            continue;
        }
        for j in 0..n {
            if leq[i][j] && inside[j] {
                open_witness = Some((i, j));
                break 'open;
            }
        }
    }
    let decide = |witness: Option<(usize, usize)>| match (witness, complete) {
        (Some(_), _) => Verdict::No,
        (None, true) => Verdict::Yes,
        (None, false) => Verdict::TruncationLimited,
    };
    TopologyVerdict {
        closed: decide(closed_witness),
        open: decide(open_witness),
        closed_witness,
        open_witness,
    }
}

/// A fully enumerated spectrum: every prime ideal of the functor, with the
/// specialization order `leq[i][j] ⟺ points[i] ⊆ points[j]`.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub points: Vec<TambaraIdeal>,
    pub leq: Vec<Vec<bool>>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, p: &TambaraIdeal) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// Points containing the given ideal (the basic closed set it cuts out).
    pub fn v_of(&self, i: &TambaraIdeal) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.points[j].contains(i)).collect()
    }

    /// Topological closure: the upward closure under specialization.
    pub fn closure(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| subset.iter().any(|&i| self.leq[i][j]))
            .collect()
    }

    /// Intersection of the points in the subset; its basic closed set equals
    /// the subset exactly when the subset is closed.
    pub fn closed_ideal(&self, subset: &[usize]) -> Option<TambaraIdeal> {
        let mut iter = subset.iter().map(|&i| self.points[i].clone());
        let first = iter.next()?;
        Some(iter.fold(first, |acc, p| acc.intersection(&p)))
    }

    pub fn verdict(&self, subset: &[usize]) -> TopologyVerdict {
        poset_verdict(&self.leq, subset, true)
    }
}

/// All prime ideals of the functor, by filtering the full ideal enumeration.
pub fn spec_bruteforce(r: &TambaraFunctor, bound: u128) -> Result<Spectrum, SpectraError> {
    let mut points = Vec::new();
    for i in enumerate_tambara_ideals(r, bound)? {
        if is_proper(r, &i) && is_prime(r, &i)? {
            points.push(i);
        }
    }
    let leq = (0..points.len())
        .map(|a| (0..points.len()).map(|b| points[b].contains(&points[a])).collect())
        .collect();
    Ok(Spectrum { points, leq })
}

/// The map `Spec(target) → Spec(source)` induced by a morphism
/// `f: source → target`: contract each target prime, check that the
/// contraction is again prime (this is verified, not assumed), and locate it
/// among the source points.  Returns the source index for each target point.
pub fn spec_map(
    f: &TambaraMorphism,
    source: &TambaraFunctor,
    source_spec: &Spectrum,
    target_spec: &Spectrum,
) -> Result<Vec<usize>, SpectraError> {
    let mut map = Vec::with_capacity(target_spec.len());
    for q in &target_spec.points {
        let c = contract(f, source, q)?;
        if !is_prime(source, &c)? {
            return Err(SpectraError::ContractionNotPrime { point: c.describe(source) });
        }
        let idx = source_spec
            .index_of(&c)
            .ok_or_else(|| SpectraError::PointNotRepresented { description: c.describe(source) })?;
        map.push(idx);
    }
    // Preimages of nested sets are nested, so the map preserves the order.
    debug_assert!((0..map.len()).all(|a| {
        (0..map.len()).all(|b| !target_spec.leq[a][b] || source_spec.leq[map[a]][map[b]])
    }));
    Ok(map)
}

/// The `H`-stratum of an enumerated spectrum: the image of the spectrum of
/// the restriction to `H`, transported along the coinduction unit.  Each
/// restricted prime is coinduced (a bijection on spectra) and contracted
/// along the unit; every contraction is verified prime and located.
pub fn stratum_of(
    r: &TambaraFunctor,
    spectrum: &Spectrum,
    h: usize,
    bound: u128,
) -> Result<Vec<usize>, SpectraError> {
    let (c, eta) = coind_unit(r, h)?;
    let restricted = r.restrict_to(h)?;
    let restricted_spec = spec_bruteforce(&restricted, bound)?;
    let mut points = BTreeSet::new();
    for q in &restricted_spec.points {
        let lifted = coind_ideal(&c, q)?;
        let p = contract(&eta, r, &lifted)?;
        if !is_prime(r, &p)? {
            return Err(SpectraError::ContractionNotPrime { point: p.describe(r) });
        }
        let idx = spectrum
            .index_of(&p)
            .ok_or_else(|| SpectraError::PointNotRepresented { description: p.describe(r) })?;
        points.insert(idx);
    }
    Ok(points.into_iter().collect())
}

/// One stratum of an enumerated spectrum.
#[derive(Debug, Clone)]
pub struct Stratum {
    /// Lattice index of the subgroup class representative.
    pub h_rep: usize,
    /// Spectrum indices, ascending.
    pub points: Vec<usize>,
    pub verdict: TopologyVerdict,
}

/// An enumerated spectrum together with all subgroup strata.
#[derive(Debug)]
pub struct Stratification {
    pub spectrum: Spectrum,
    /// One stratum per conjugacy class of subgroups of the support.
    pub strata: Vec<Stratum>,
}

/// Stratify an enumerated spectrum by subgroup conjugacy classes.  The
/// stratum of the full support is the whole spectrum (the unit at the top is
/// the identity), and conjugate subgroups give equal strata.
pub fn stratify(r: &TambaraFunctor, bound: u128) -> Result<Stratification, SpectraError> {
    let spectrum = spec_bruteforce(r, bound)?;
    let (_, reps) = r.lat().classes_within(r.top());
    let mut strata = Vec::new();
    for &h in &reps {
        let points = stratum_of(r, &spectrum, h, bound)?;
        let verdict = spectrum.verdict(&points);
        strata.push(Stratum { h_rep: h, points, verdict });
    }
    Ok(Stratification { spectrum, strata })
}

/// A represented point of a truncated Burnside spectrum: the prime together
/// with every `(subgroup class, p)` pair in the prime set that lands on it.
#[derive(Debug, Clone)]
pub struct BurnsidePoint<T> {
    pub ideal: BurnsidePrime<T>,
    /// `(k_class, p)` pairs, in the construction order.
    pub labels: Vec<(usize, u64)>,
}

/// The part of the Burnside spectrum visible over a finite set of integer
/// primes (0 is always included).  Distinct labels may collide on a single
/// point; the collisions are recorded on the point.
#[derive(Debug)]
pub struct BurnsideSpectrum<T> {
    /// The primes actually used: the input, sorted, deduplicated, with 0.
    pub prime_set: Vec<u64>,
    pub points: Vec<BurnsidePoint<T>>,
    pub leq: Vec<Vec<bool>>,
}

impl<T: IntScalar> BurnsideSpectrum<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of_label(&self, k_class: usize, p: u64) -> Option<usize> {
        self.points.iter().position(|pt| pt.labels.contains(&(k_class, p)))
    }

    pub fn index_of(&self, prime: &BurnsidePrime<T>) -> Option<usize> {
        self.points.iter().position(|pt| pt.ideal.compare(prime) == IdealOrder::Equal)
    }

    /// Represented points containing point `i`.
    pub fn v_of(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.leq[i][j]).collect()
    }
}

/// The Burnside spectrum over a finite prime set: one point per distinct
/// prime among `{𝔭_{K,p}}` for `K` a subgroup class representative and `p`
/// in the set (0 always included, since the `𝔭_{K,0}` carry the
/// specialization structure).
pub fn spec_burnside<T: IntScalar>(
    funct: &BurnsideFunctor<T>,
    prime_set: &[u64],
) -> Result<BurnsideSpectrum<T>, SpectraError> {
    let mut primes = prime_set.to_vec();
    primes.push(0);
    primes.sort_unstable();
    primes.dedup();
    let lat = funct.lattice();
    let mut points: Vec<BurnsidePoint<T>> = Vec::new();
    for &p in &primes {
        for (kc, &k) in lat.class_reps().iter().enumerate() {
            let pr = funct.prime(k, p)?;
            match points.iter().position(|pt| pt.ideal.compare(&pr) == IdealOrder::Equal) {
                Some(i) => points[i].labels.push((kc, p)),
                None => points.push(BurnsidePoint { ideal: pr, labels: vec![(kc, p)] }),
            }
        }
    }
    let leq = (0..points.len())
        .map(|a| {
            (0..points.len())
                .map(|b| {
                    matches!(
                        points[a].ideal.compare(&points[b].ideal),
                        IdealOrder::Equal | IdealOrder::StrictlyInside
                    )
                })
                .collect()
        })
        .collect();
    Ok(BurnsideSpectrum { prime_set: primes, points, leq })
}

/// Level at `S ≤ amb` of the Burnside prime of the subgroup `amb` attached to
/// `(K₀, p)`, where `K₀ ≤ amb`: elements whose marks vanish mod `p` at every
/// subgroup of `S` that is `amb`-subconjugate to `K₀`.  With `amb` the whole
/// group this is the functor's own prime level.
pub fn prime_level_within<T: IntScalar>(
    funct: &BurnsideFunctor<T>,
    amb: usize,
    k0: usize,
    p: u64,
    s: usize,
) -> Lattice<T> {
    let lat = funct.lattice();
    let amb_members: Vec<usize> = lat.subgroup(amb).members().collect();
    let level = funct.level(s);
    let constraints: Vec<Vec<T>> = (0..level.rank())
        .filter(|&i| {
            amb_members.iter().any(|&g| lat.is_sub(lat.conjugate(g, level.reps[i]), k0))
        })
        .map(|i| (0..level.rank()).map(|kk| level.marks[kk][i].clone()).collect())
        .collect();
    crate::intmat::congruence_kernel(level.rank(), &constraints, p)
}

/// Contraction along the coinduction unit of the coinduced prime `(K₀, p)`
/// of the subgroup `h`: at each level `K`, the intersection over the double
/// cosets `h\G/K` of the preimages of the prime's levels at the coset
/// stabilizers under conjugate-then-restrict.
fn contracted_burnside_prime<T: IntScalar>(
    funct: &BurnsideFunctor<T>,
    h: usize,
    k0: usize,
    p: u64,
) -> Vec<Lattice<T>> {
    let lat = funct.lattice();
    lat.class_reps()
        .iter()
        .map(|&k| {
            let rank_k = funct.level(k).rank();
            let dc = lat.double_cosets(h, k, lat.top());
            let mut inter = Lattice::full(rank_k);
            for i in 0..dc.reps.len() {
                let si = lat.stabilizer_in_left(&dc, i);
                let rows = funct.res_conj_matrix(dc.reps[i], k, si);
                let target = prime_level_within(funct, h, k0, p, si);
                inter = inter.intersect(&preimage_lattice(rank_k, &rows, &target));
            }
            inter
        })
        .collect()
}

/// One stratum of a truncated Burnside spectrum, computed three ways.
#[derive(Debug, Clone)]
pub struct BurnsideStratum {
    /// Lattice index of the subgroup class representative `H`.
    pub h_rep: usize,
    /// Contractions along the coinduction unit of all primes of the
    /// `H`-functor over the prime set.
    pub points: Vec<usize>,
    /// Points carrying a label `(K, p)` with `K` subconjugate to `H`.
    pub classified: Vec<usize>,
    /// Represented points containing the `(H, 0)` prime.
    pub by_generic: Vec<usize>,
    /// When the stratum is certified closed, the point whose basic closed
    /// set it is.
    pub closed_point: Option<usize>,
    pub verdict: TopologyVerdict,
}

/// A truncated Burnside spectrum with all subgroup strata.
#[derive(Debug)]
pub struct BurnsideStratification<T> {
    pub spectrum: BurnsideSpectrum<T>,
    /// One stratum per subgroup class, in `class_reps` order.
    pub strata: Vec<BurnsideStratum>,
    /// Whether every subgroup is normal; only then is the closed-stratum
    /// classification theorem applicable, and only then are the three
    /// computations required to agree.
    pub dedekind: bool,
}

/// Stratify a truncated Burnside spectrum.  Each stratum is computed by
/// contraction along the coinduction unit, by the subconjugacy
/// classification of the labels, and as the basic closed set of the `(H, 0)`
/// prime; over a Dedekind group the three must agree on every represented
/// point and the stratum is certified closed and (when proper) not open,
/// with the `(G, 0)` generic point as the openness witness.
pub fn stratify_burnside<T: IntScalar>(
    funct: &BurnsideFunctor<T>,
    prime_set: &[u64],
) -> Result<BurnsideStratification<T>, SpectraError> {
    let spectrum = spec_burnside(funct, prime_set)?;
    let lat = funct.lattice().clone();
    let dedekind = lat.is_dedekind();
    let top = lat.top();
    let mut strata = Vec::new();
    for (hc, &h) in lat.class_reps().iter().enumerate() {
        let mut contracted = BTreeSet::new();
        let (_, k0_reps) = lat.classes_within(h);
        for &k0 in &k0_reps {
            for &p in &spectrum.prime_set {
                let levels = contracted_burnside_prime(funct, h, k0, p);
                let idx = spectrum
                    .points
                    .iter()
                    .position(|pt| {
                        pt.ideal
                            .levels
                            .iter()
                            .zip(&levels)
                            .all(|(a, b)| a.contains_lattice(b) && b.contains_lattice(a))
                    })
                    .ok_or_else(|| SpectraError::PointNotRepresented {
                        description: format!(
                            "contraction of ({}, {}) from {}",
                            lat.label(k0),
                            p,
                            lat.label(h)
                        ),
                    })?;
                contracted.insert(idx);
            }
        }
        let points: Vec<usize> = contracted.into_iter().collect();
        let classified: Vec<usize> = (0..spectrum.len())
            .filter(|&i| {
                spectrum.points[i]
                    .labels
                    .iter()
                    .any(|&(kc, _)| lat.is_subconjugate(lat.class_reps()[kc], h))
            })
            .collect();
        let generic_idx = spectrum
            .index_of_label(hc, 0)
            .expect("the zero prime of every class representative is represented");
        let by_generic = spectrum.v_of(generic_idx);
        if dedekind && (points != classified || points != by_generic) {
            return Err(SpectraError::PosetMismatch {
                reason: format!(
                    "stratum of {} differs between contraction, classification, and \
                     the basic closed set",
                    lat.label(h)
                ),
            });
        }
        let mut verdict = poset_verdict(&spectrum.leq, &points, false);
        let mut closed_point = None;
        if h == top {
            // The top stratum is the whole spectrum: the basic closed set of
            // the zero ideal, hence clopen regardless of truncation.
            verdict.closed = Verdict::Yes;
            verdict.open = Verdict::Yes;
            closed_point = Some(generic_idx);
        } else if dedekind && points == by_generic {
            verdict.closed = Verdict::Yes;
            closed_point = Some(generic_idx);
        }
        strata.push(BurnsideStratum {
            h_rep: h,
            points,
            classified,
            by_generic,
            closed_point,
            verdict,
        });
    }
    Ok(BurnsideStratification { spectrum, strata, dedekind })
}

/// The bottom stratum of the ghost of a prime-order functor, computed by
/// contraction and checked against two classifications.
#[derive(Debug)]
pub struct GhostStratum {
    pub ghost: Ghost,
    pub spectrum: Spectrum,
    /// The stratum of the trivial subgroup, by contraction along the unit.
    pub points: Vec<usize>,
    /// Points whose top level contains all of the transfer-quotient factor.
    pub with_full_quotient: Vec<usize>,
    /// Points whose top level is `q × (whole quotient)` for a prime `q` of
    /// the conjugation-fixed subring of the bottom level.
    pub classified: Vec<usize>,
    /// Whether the transfer to the top level is surjective; if so, the
    /// quotient factor vanishes and the stratum is everything.
    pub transfer_surjective: bool,
    pub verdict: TopologyVerdict,
}

/// Compute the ghost of a prime-order functor, enumerate its spectrum, and
/// identify the bottom stratum three ways: by unit contraction, by the
/// full-quotient membership test, and by constructing one point per prime of
/// the fixed subring.
pub fn stratum_ghost(r: &TambaraFunctor, bound: u128) -> Result<GhostStratum, SpectraError> {
    let g = ghost(r)?;
    let spectrum = spec_bruteforce(&g.functor, bound)?;
    let lat = g.functor.lat().clone();
    let (e, top) = (lat.trivial(), lat.top());
    let points = stratum_of(&g.functor, &spectrum, e, bound)?;
    let full_class = g.top_product.encode(&[g.fixed.ring.zero(), g.quot.ring.one()]);
    let with_full_quotient: Vec<usize> = (0..spectrum.len())
        .filter(|&i| spectrum.points[i].levels[top].contains(full_class))
        .collect();
    let mut classified = BTreeSet::new();
    for q in enumerate_ideals(&g.fixed.ring, DEFAULT_IDEAL_ENUM_ORDER)? {
        if !matches!(is_prime_ideal(&g.fixed.ring, &q), Ok(true)) {
            continue;
        }
        let mut top_set = ElemSet::with_capacity(g.top_product.ring.order());
        for a in q.ones() {
            for b in g.quot.ring.elements() {
                top_set.insert(g.top_product.encode(&[a, b]));
            }
        }
        let found: Vec<usize> = (0..spectrum.len())
            .filter(|&i| spectrum.points[i].levels[top] == top_set)
            .collect();
        if found.is_empty() {
            return Err(SpectraError::PointNotRepresented {
                description: format!(
                    "stratum point with top level {}",
                    ideal_label(&g.top_product.ring, &top_set)
                ),
            });
        }
        classified.extend(found);
    }
    let transfer_surjective = g.quot.ring.order() == 1;
    let verdict = spectrum.verdict(&points);
    Ok(GhostStratum {
        ghost: g,
        spectrum,
        points,
        with_full_quotient,
        classified: classified.into_iter().collect(),
        transfer_surjective,
        verdict,
    })
}

/// The spectrum of a fixed-point functor compared with the two posets it
/// must match: G-prime invariant ideals of the G-ring, and ring primes of
/// the fixed subring (the top level).  All three maps are constructed
/// explicitly and checked to be order isomorphisms with a commuting
/// triangle.
#[derive(Debug)]
pub struct FixedPointSpectra {
    pub fp: FixedPointFunctor,
    /// G-prime invariant ring ideals, in enumeration order.
    pub g_primes: Vec<ElemSet>,
    pub fp_spectrum: Spectrum,
    /// Ring primes of the top level, in enumeration order.
    pub fixed_primes: Vec<ElemSet>,
    /// `g_primes[i] ↦ fp_spectrum[gprime_to_fp[i]]` (kernel construction).
    pub gprime_to_fp: Vec<usize>,
    /// `fp point ↦ its top level` located among `fixed_primes`.
    pub fp_to_fixed: Vec<usize>,
    /// `g_primes[i] ↦ g_primes[i] ∩ (fixed subring)` located among
    /// `fixed_primes`.
    pub gprime_to_fixed: Vec<usize>,
}

/// Build the fixed-point functor of a G-ring, enumerate the three spectra,
/// construct the comparison maps, and verify that they are inverse-free
/// order isomorphisms forming a commuting triangle.
pub fn spec_fp(s: &GRing, bound: u128) -> Result<FixedPointSpectra, SpectraError> {
    let fp = fixed_point_functor(s)?;
    let fp_spectrum = spec_bruteforce(&fp.functor, bound)?;
    let g_primes: Vec<ElemSet> = s
        .enumerate_invariant_ideals(DEFAULT_IDEAL_ENUM_ORDER)?
        .into_iter()
        .filter(|i| matches!(s.is_g_prime(i), Ok(true)))
        .collect();
    let top = fp.functor.top();
    let top_ring = fp.functor.level(top);
    let fixed_primes: Vec<ElemSet> = enumerate_ideals(top_ring, DEFAULT_IDEAL_ENUM_ORDER)?
        .into_iter()
        .filter(|q| matches!(is_prime_ideal(top_ring, q), Ok(true)))
        .collect();

    let gprime_to_fp: Vec<usize> = g_primes
        .iter()
        .map(|i| {
            let p = gprime_to_prime(s, &fp, i)?;
            fp_spectrum.index_of(&p).ok_or_else(|| SpectraError::PointNotRepresented {
                description: p.describe(&fp.functor),
            })
        })
        .collect::<Result<_, _>>()?;
    let fp_to_fixed: Vec<usize> = fp_spectrum
        .points
        .iter()
        .map(|p| {
            fixed_primes.iter().position(|q| *q == p.levels[top]).ok_or_else(|| {
                SpectraError::PosetMismatch {
                    reason: format!(
                        "top level {} of a spectrum point is not a prime of the fixed subring",
                        ideal_label(top_ring, &p.levels[top])
                    ),
                }
            })
        })
        .collect::<Result<_, _>>()?;
    let gprime_to_fixed: Vec<usize> = g_primes
        .iter()
        .map(|i| {
            let mut set = ElemSet::with_capacity(top_ring.order());
            for x in top_ring.elements() {
                if i.contains(fp.embed(top, x)) {
                    set.insert(x);
                }
            }
            fixed_primes.iter().position(|q| *q == set).ok_or_else(|| {
                SpectraError::PosetMismatch {
                    reason: format!(
                        "restriction {} of a G-prime is not a prime of the fixed subring",
                        ideal_label(top_ring, &set)
                    ),
                }
            })
        })
        .collect::<Result<_, _>>()?;

    let sizes =
        (g_primes.len() == fp_spectrum.len()) && (fp_spectrum.len() == fixed_primes.len());
    if !sizes {
        return Err(SpectraError::PosetMismatch {
            reason: format!(
                "point counts differ: {} G-primes, {} functor primes, {} fixed-subring primes",
                g_primes.len(),
                fp_spectrum.len(),
                fixed_primes.len()
            ),
        });
    }
    let injective = |m: &[usize]| {
        let mut seen: Vec<usize> = m.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == m.len()
    };
    if !injective(&gprime_to_fp) || !injective(&fp_to_fixed) || !injective(&gprime_to_fixed) {
        return Err(SpectraError::PosetMismatch {
            reason: "a comparison map identifies two distinct points".into(),
        });
    }
    for (a, &b) in gprime_to_fp.iter().enumerate() {
        if fp_to_fixed[b] != gprime_to_fixed[a] {
            return Err(SpectraError::PosetMismatch {
                reason: format!("comparison triangle fails at G-prime {a}"),
            });
        }
    }
    let leq_a = |i: usize, j: usize| g_primes[i].is_subset(&g_primes[j]);
    let leq_c = |i: usize, j: usize| fixed_primes[i].is_subset(&fixed_primes[j]);
    for i in 0..g_primes.len() {
        for j in 0..g_primes.len() {
            let (bi, bj) = (gprime_to_fp[i], gprime_to_fp[j]);
            if leq_a(i, j) != fp_spectrum.leq[bi][bj]
                || leq_a(i, j) != leq_c(gprime_to_fixed[i], gprime_to_fixed[j])
                || fp_spectrum.leq[i][j] != leq_c(fp_to_fixed[i], fp_to_fixed[j])
            {
                return Err(SpectraError::PosetMismatch {
                    reason: format!("orders disagree at pair ({i}, {j})"),
                });
            }
        }
    }
    Ok(FixedPointSpectra {
        fp,
        g_primes,
        fp_spectrum,
        fixed_primes,
        gprime_to_fp,
        fp_to_fixed,
        gprime_to_fixed,
    })
}

/// The prime of the fixed-point functor attached to a G-prime invariant
/// ideal `I`: the kernel of the levelwise map into the fixed-point functor
/// of the quotient G-ring.  The kernel's bottom level recovers `I`, and its
/// primality is verified rather than assumed.
pub fn gprime_to_prime(
    s: &GRing,
    fp: &FixedPointFunctor,
    i: &ElemSet,
) -> Result<TambaraIdeal, SpectraError> {
    if !s.is_g_prime(i)? {
        return Err(SpectraError::NotGPrime);
    }
    let (sq, q) = s
        .quotient(i)
        .map_err(|e| SpectraError::QuotientNotGRing { reason: e.to_string() })?;
    let fpq = fixed_point_functor(&sq)?;
    // Both lattices enumerate the subgroups of the same group, so levels and
    // subgroup indices correspond; transporting along the identity only
    // rehomes the quotient functor onto the original lattice handle.
    debug_assert!(fp
        .functor
        .lat()
        .subgroups()
        .iter()
        .zip(fpq.functor.lat().subgroups())
        .all(|(a, b)| a.bits() == b.bits()));
    let identity: Vec<usize> = s.group().elements().collect();
    let target = transport(&fpq.functor, fp.functor.lat(), &identity)?;
    let maps: Vec<Vec<usize>> = (0..fp.functor.lat().len())
        .map(|k| {
            if !fp.functor.lat().is_sub(k, fp.functor.top()) {
                return Vec::new();
            }
            (0..fp.functor.level(k).order())
                .map(|x| {
                    let image = q.project[fp.embed(k, x)];
                    fpq.locate(k, image).expect("the projection of a fixed element is fixed")
                })
                .collect()
        })
        .collect();
    let f = TambaraMorphism { maps };
    f.validate(&fp.functor, &target)?;
    let ker = kernel(&f, &fp.functor, &target)?;
    debug_assert_eq!(&ker.levels[fp.functor.bottom()], i);
    if !is_prime(&fp.functor, &ker)? {
        return Err(SpectraError::ContractionNotPrime { point: ker.describe(&fp.functor) });
    }
    Ok(ker)
}

/// Whether the zero ideal of the functor is prime.  When every restriction
/// is injective an independent criterion applies — the bottom level must
/// have no pair of nonzero elements `x, y` with `x·(g·y) = 0` for every
/// conjugation `g` — and the two answers are required to agree.
pub fn is_domain_like(r: &TambaraFunctor) -> Result<bool, SpectraError> {
    let zero = TambaraIdeal::zero(r);
    let slow = match is_prime(r, &zero) {
        Ok(v) => v,
        // A level is the zero ring, so the zero ideal is improper.
        Err(IdealError::Improper) => false,
        Err(e) => return Err(e.into()),
    };
    let res_injective = r.proper_pairs().iter().all(|&(k, h)| {
        let mut seen = ElemSet::with_capacity(r.level(k).order());
        r.res_map(k, h).iter().all(|&v| !seen.put(v))
    });
    if res_injective {
        let fast = bottom_is_g_prime(r);
        if fast != slow {
            return Err(SpectraError::DomainLikeDisagreement { fast, slow });
        }
    }
    Ok(slow)
}

/// Zero-ideal G-primality of the bottom level under the conjugation action.
fn bottom_is_g_prime(r: &TambaraFunctor) -> bool {
    let e = r.bottom();
    let ring = r.level(e);
    if ring.order() == 1 {
        return false;
    }
    let members = r.top_members();
    for x in ring.elements() {
        if x == ring.zero() {
            continue;
        }
        for y in ring.elements() {
            if y == ring.zero() {
                continue;
            }
            if members.iter().all(|&g| ring.mul(x, r.conj(g, e, y)) == ring.zero()) {
                return false;
            }
        }
    }
    true
}

/// The outcome of repeatedly splitting off coinduction factors: a functor
/// supported on `isotropy` with no further splitting idempotents.
#[derive(Debug)]
pub struct ClarifiedDecomposition {
    /// Lattice index of the support of the final piece.
    pub isotropy: usize,
    pub piece: TambaraFunctor,
    /// Number of splittings applied; 0 means the input was already
    /// clarified.
    pub steps: usize,
}

/// Split along bottom-level idempotents with orthogonal translates until
/// none remain.  Each step strictly shrinks the bottom level (the corner of
/// a nonunit idempotent omits 1), so the loop terminates.
pub fn clarified_decomposition(r: &TambaraFunctor) -> Result<ClarifiedDecomposition, SpectraError> {
    let mut piece = r.clone();
    let mut steps = 0;
    loop {
        let candidates = splitting_candidates(&piece);
        let Some(&d) = candidates.first() else {
            return Ok(ClarifiedDecomposition { isotropy: piece.top(), piece, steps });
        };
        piece = split_by_idempotent(&piece, d)?.piece;
        steps += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::BurnsideFunctor;
    use crate::grings::samples::{f2xf2_swap, f4_frobenius, z4_trivial};
    use crate::grings::GRing;
    use crate::groups::{cyclic, product as group_product, quaternion, symmetric, SubgroupLattice};
    use crate::ideals::{restrict_ideal, DEFAULT_COMBO_BOUND};
    use crate::rings::{elem_set, fq, ProductRing};
    use crate::tambara::coind::coinduce;
    use crate::tambara::ring_at_bottom;
    use crate::tambara::split::product;
    use std::sync::Arc;

    const BOUND: u128 = DEFAULT_COMBO_BOUND;

    fn c2_lattice() -> Arc<SubgroupLattice> {
        Arc::new(SubgroupLattice::new(Arc::new(cyclic(2).unwrap())).unwrap())
    }

    fn fp_z4() -> FixedPointFunctor {
        fixed_point_functor(&z4_trivial()).unwrap()
    }

    fn fp_swap() -> FixedPointFunctor {
        fixed_point_functor(&f2xf2_swap()).unwrap()
    }

    fn fp_f2_trivial() -> FixedPointFunctor {
        let s = GRing::trivial(Arc::new(cyclic(2).unwrap()), fq(2).unwrap());
        fixed_point_functor(&s).unwrap()
    }

    fn fp_f2xf2_trivial() -> FixedPointFunctor {
        let f2 = fq(2).unwrap();
        let square = ProductRing::new(&[&f2, &f2]).unwrap().ring;
        let s = GRing::trivial(Arc::new(cyclic(2).unwrap()), square);
        fixed_point_functor(&s).unwrap()
    }

    fn coind_f2() -> (Arc<SubgroupLattice>, TambaraFunctor) {
        let lat = c2_lattice();
        let s = ring_at_bottom(&lat, fq(2).unwrap()).unwrap();
        (lat.clone(), coinduce(&s, lat.top()).unwrap().functor)
    }

    fn ideal_from(r: &TambaraFunctor, levels: &[(usize, &[usize])]) -> TambaraIdeal {
        let mut ideal = TambaraIdeal::zero(r);
        for &(k, members) in levels {
            ideal.levels[k] = elem_set(r.level(k).order(), members);
        }
        ideal
    }

    #[test]
    fn one_point_spectra_for_fields_and_function_rings() {
        let field = fixed_point_functor(&f4_frobenius()).unwrap().functor;
        let spec = spec_bruteforce(&field, BOUND).unwrap();
        assert_eq!(spec.len(), 1);
        assert!(spec.points[0].is_zero(&field));
        assert_eq!(spec.v_of(&TambaraIdeal::zero(&field)), vec![0]);

        let (_, functions) = coind_f2();
        let spec = spec_bruteforce(&functions, BOUND).unwrap();
        assert_eq!(spec.len(), 1);
        assert!(spec.points[0].is_zero(&functions));
        assert_eq!(spec.closure(&[0]), vec![0]);
    }

    #[test]
    fn ghost_spectrum_is_a_two_point_chain() {
        let fp = fp_z4();
        let g = ghost(&fp.functor).unwrap();
        let lat = g.functor.lat().clone();
        let (e, top) = (lat.trivial(), lat.top());
        // Seven ideals in total; exactly two of them are prime.
        assert_eq!(enumerate_tambara_ideals(&g.functor, BOUND).unwrap().len(), 7);
        let spec = spec_bruteforce(&g.functor, BOUND).unwrap();
        assert_eq!(spec.len(), 2);
        // Top level is (fixed Z/4) × (Z/2 transfer quotient); elements encode
        // as 2f + q.  The small prime keeps only the zero quotient class.
        let p2 = ideal_from(&g.functor, &[(e, &[0, 2]), (top, &[0, 4])]);
        let p1 = ideal_from(&g.functor, &[(e, &[0, 2]), (top, &[0, 1, 4, 5])]);
        let i2 = spec.index_of(&p2).expect("small ghost prime is a point");
        let i1 = spec.index_of(&p1).expect("large ghost prime is a point");
        assert!(spec.leq[i2][i1] && !spec.leq[i1][i2]);
        // Closure of the small prime picks up the large one, never the
        // other way around.
        assert_eq!(spec.closure(&[i2]), {
            let mut both = vec![i1, i2];
            both.sort_unstable();
            both
        });
        assert_eq!(spec.closure(&[i1]), vec![i1]);
        assert_eq!(spec.closed_ideal(&[i1]).unwrap(), p1);
        assert_eq!(spec.v_of(&p1), vec![i1]);

        let upper = spec.verdict(&[i1]);
        assert_eq!(upper.closed, Verdict::Yes);
        assert_eq!(upper.open, Verdict::No);
        assert_eq!(upper.open_witness, Some((i2, i1)));
        let lower = spec.verdict(&[i2]);
        assert_eq!(lower.closed, Verdict::No);
        assert_eq!(lower.closed_witness, Some((i2, i1)));
        assert_eq!(lower.open, Verdict::Yes);

        // The comparison morphism's spectrum map hits the unique prime of
        // the input from both ghost points: it is surjective.
        let source_spec = spec_bruteforce(&fp.functor, BOUND).unwrap();
        assert_eq!(source_spec.len(), 1);
        let along_chi = spec_map(&g.chi, &fp.functor, &source_spec, &spec).unwrap();
        assert_eq!(along_chi, vec![0, 0]);

        // The identity morphism induces the identity map.
        let id = TambaraMorphism::identity(&g.functor);
        assert_eq!(spec_map(&id, &g.functor, &spec, &spec).unwrap(), vec![0, 1]);
    }

    #[test]
    fn ghost_stratum_matches_its_classification() {
        let fp = fp_z4();
        let gs = stratum_ghost(&fp.functor, BOUND).unwrap();
        let lat = gs.ghost.functor.lat().clone();
        let (e, top) = (lat.trivial(), lat.top());
        let p1 = ideal_from(&gs.ghost.functor, &[(e, &[0, 2]), (top, &[0, 1, 4, 5])]);
        let i1 = gs.spectrum.index_of(&p1).unwrap();
        assert_eq!(gs.points, vec![i1]);
        assert_eq!(gs.with_full_quotient, gs.points);
        assert_eq!(gs.classified, gs.points);
        assert!(!gs.transfer_surjective);
        assert_eq!(gs.verdict.closed, Verdict::Yes);
        assert_eq!(gs.verdict.open, Verdict::No);
        let (outside, inside) = gs.verdict.open_witness.unwrap();
        assert_eq!(inside, i1);
        assert!(gs.spectrum.leq[outside][inside]);

        // Surjective transfer collapses the quotient factor and the stratum
        // becomes the whole (here one-point) spectrum, trivially clopen.
        let gs = stratum_ghost(&fp_swap().functor, BOUND).unwrap();
        assert!(gs.transfer_surjective);
        assert_eq!(gs.points, (0..gs.spectrum.len()).collect::<Vec<_>>());
        assert_eq!(gs.with_full_quotient, gs.points);
        assert_eq!(gs.classified, gs.points);
        assert_eq!(gs.verdict.closed, Verdict::Yes);
        assert_eq!(gs.verdict.open, Verdict::Yes);
    }

    #[test]
    fn bottom_stratum_by_contraction_on_fixed_point_functors() {
        // Trivial action: the single prime ((2), (2)) lies in every stratum,
        // and its bottom level is an honest ring prime, so membership agrees
        // with levelwise primality.
        let fp = fp_z4();
        let r = &fp.functor;
        let strat = stratify(r, BOUND).unwrap();
        assert_eq!(strat.spectrum.len(), 1);
        let point = &strat.spectrum.points[0];
        assert_eq!(point, &ideal_from(r, &[(r.bottom(), &[0, 2]), (r.top(), &[0, 2])]));
        for stratum in &strat.strata {
            assert_eq!(stratum.points, vec![0]);
            assert_eq!(stratum.verdict.closed, Verdict::Yes);
            assert_eq!(stratum.verdict.open, Verdict::Yes);
        }
        assert!(matches!(is_prime_ideal(r.level(r.bottom()), &point.levels[r.bottom()]), Ok(true)));

        // Swap action: the zero ideal is the only prime and it lies in the
        // bottom stratum by contraction, even though its bottom level is not
        // an honest ring prime of F2×F2 — membership in a stratum is about
        // the image of the restricted spectrum, not about one level alone.
        let fp = fp_swap();
        let r = &fp.functor;
        let strat = stratify(r, BOUND).unwrap();
        assert_eq!(strat.spectrum.len(), 1);
        assert!(strat.spectrum.points[0].is_zero(r));
        for stratum in &strat.strata {
            assert_eq!(stratum.points, vec![0]);
        }
        let bottom_zero = &strat.spectrum.points[0].levels[r.bottom()];
        assert!(!matches!(is_prime_ideal(r.level(r.bottom()), bottom_zero), Ok(true)));
    }

    #[test]
    fn restriction_is_a_left_inverse_of_the_stratum_embedding() {
        // For an idle functor every restricted prime contracts back along
        // the unit and then restricts to itself.
        let fp = fp_z4();
        let r = &fp.functor;
        assert!(r.is_idle());
        let e = r.bottom();
        let (c, eta) = coind_unit(r, e).unwrap();
        let restricted = r.restrict_to(e).unwrap();
        let restricted_spec = spec_bruteforce(&restricted, BOUND).unwrap();
        assert_eq!(restricted_spec.len(), 1);
        for q in &restricted_spec.points {
            let p = contract(&eta, r, &coind_ideal(&c, q).unwrap()).unwrap();
            assert_eq!(&restrict_ideal(r, &p, e).unwrap(), q);
        }
    }

    #[test]
    fn strata_are_conjugation_invariant_over_s3() {
        let s = GRing::trivial(Arc::new(symmetric(3).unwrap()), fq(2).unwrap());
        let fp = fixed_point_functor(&s).unwrap();
        let r = &fp.functor;
        let spec = spec_bruteforce(r, BOUND).unwrap();
        assert_eq!(spec.len(), 1);
        assert!(spec.points[0].is_zero(r));
        let (classes, _) = r.lat().classes_within(r.top());
        assert_eq!(classes.len(), 4);
        for class in &classes {
            let reference = stratum_of(r, &spec, class[0], BOUND).unwrap();
            assert_eq!(reference, vec![0]);
            for &h in class {
                assert_eq!(stratum_of(r, &spec, h, BOUND).unwrap(), reference);
            }
        }
    }

    #[test]
    fn burnside_spectrum_of_c2_matches_the_arithmetic() {
        let lat = c2_lattice();
        let funct = BurnsideFunctor::<i64>::new(lat.clone());
        let spec = spec_burnside(&funct, &[0, 2, 3]).unwrap();
        assert_eq!(spec.prime_set, vec![0, 2, 3]);
        assert_eq!(spec.len(), 5);
        // The two mod-2 labels collide on a single point.
        let collision = spec.index_of_label(0, 2).unwrap();
        assert_eq!(spec.index_of_label(1, 2), Some(collision));
        assert_eq!(spec.points[collision].labels.len(), 2);
        // The zero prime of the full group is the generic point.
        let generic = spec.index_of_label(1, 0).unwrap();
        assert!(spec.leq[generic].iter().all(|&b| b));
        assert_eq!(spec.v_of(generic).len(), 5);
        // The zero prime of the trivial subgroup sits under both of its
        // modular specializations but not under the full group's mod-3 one.
        let e0 = spec.index_of_label(0, 0).unwrap();
        let e3 = spec.index_of_label(0, 3).unwrap();
        let g3 = spec.index_of_label(1, 3).unwrap();
        assert!(spec.leq[e0][collision]);
        assert!(spec.leq[e0][e3]);
        assert!(!spec.leq[e0][g3]);
        assert_ne!(e3, g3);

        // Over the trivial group the spectrum is the truncation of the
        // integer spectrum: one generic point plus one per prime.
        let lat1 = Arc::new(SubgroupLattice::new(Arc::new(cyclic(1).unwrap())).unwrap());
        let funct1 = BurnsideFunctor::<i64>::new(lat1);
        assert_eq!(spec_burnside(&funct1, &[0, 2]).unwrap().len(), 2);
    }

    #[test]
    fn burnside_c12_primes_collide_exactly_by_residual_subgroups() {
        let lat = Arc::new(SubgroupLattice::new(Arc::new(cyclic(12).unwrap())).unwrap());
        let funct = BurnsideFunctor::<i64>::new(lat.clone());
        let order_of = |i: usize| lat.subgroup(i).order();
        let class_of_order = |n: usize| {
            lat.class_reps().iter().position(|&k| order_of(k) == n).expect("cyclic subgroup")
        };
        let (c2, c4) = (class_of_order(2), class_of_order(4));
        let p2 = funct.prime(lat.class_reps()[c2], 2).unwrap();
        let p4 = funct.prime(lat.class_reps()[c4], 2).unwrap();
        assert_eq!(p2.compare(&p4), IdealOrder::Equal);

        let spec = spec_burnside(&funct, &[0, 2, 3]).unwrap();
        // Six zero primes; mod 2 the classes {e, C2, C4} and {C3, C6, C12}
        // collapse; mod 3 the classes {e, C3}, {C2, C6}, and {C4, C12} do.
        assert_eq!(spec.len(), 11);
        let at = |n: usize, p: u64| spec.index_of_label(class_of_order(n), p).unwrap();
        assert_eq!(at(1, 2), at(2, 2));
        assert_eq!(at(1, 2), at(4, 2));
        assert_eq!(at(3, 2), at(6, 2));
        assert_eq!(at(3, 2), at(12, 2));
        assert_ne!(at(1, 2), at(3, 2));
        assert_eq!(at(1, 3), at(3, 3));
        assert_eq!(at(2, 3), at(6, 3));
        assert_eq!(at(4, 3), at(12, 3));
        assert_ne!(at(1, 3), at(2, 3));
        assert_ne!(at(2, 3), at(4, 3));
    }

    #[test]
    fn stratification_of_burnside_c2_certifies_closed_and_not_open() {
        let lat = c2_lattice();
        let funct = BurnsideFunctor::<i64>::new(lat.clone());
        let strat = stratify_burnside(&funct, &[0, 2, 3]).unwrap();
        assert!(strat.dedekind);
        let spec = &strat.spectrum;
        let bottom = &strat.strata[0];
        assert_eq!(bottom.h_rep, lat.trivial());
        let expected: Vec<usize> = {
            let mut v = vec![
                spec.index_of_label(0, 0).unwrap(),
                spec.index_of_label(0, 2).unwrap(),
                spec.index_of_label(0, 3).unwrap(),
            ];
            v.sort_unstable();
            v
        };
        assert_eq!(bottom.points, expected);
        assert_eq!(bottom.classified, expected);
        assert_eq!(bottom.by_generic, expected);
        // The complement is exactly the pair of full-group points that do
        // not collide downwards.
        let complement: Vec<usize> =
            (0..spec.len()).filter(|i| !bottom.points.contains(i)).collect();
        assert_eq!(
            complement,
            vec![spec.index_of_label(1, 0).unwrap(), spec.index_of_label(1, 3).unwrap()]
        );
        assert_eq!(bottom.verdict.closed, Verdict::Yes);
        assert_eq!(bottom.closed_point, Some(spec.index_of_label(0, 0).unwrap()));
        assert_eq!(bottom.verdict.open, Verdict::No);
        let (outside, inside) = bottom.verdict.open_witness.unwrap();
        assert_eq!(outside, spec.index_of_label(1, 0).unwrap());
        assert!(bottom.points.contains(&inside));

        let top = &strat.strata[1];
        assert_eq!(top.points, (0..spec.len()).collect::<Vec<_>>());
        assert_eq!(top.verdict.closed, Verdict::Yes);
        assert_eq!(top.verdict.open, Verdict::Yes);
    }

    #[test]
    fn dedekind_groups_stratify_consistently() {
        let groups = vec![
            cyclic(3).unwrap(),
            cyclic(4).unwrap(),
            group_product(&[cyclic(2).unwrap(), cyclic(2).unwrap()]).unwrap(),
            quaternion(2).unwrap(),
        ];
        for g in groups {
            let name = g.name().to_string();
            let lat = Arc::new(SubgroupLattice::new(Arc::new(g)).unwrap());
            let funct = BurnsideFunctor::<i64>::new(lat.clone());
            let strat = stratify_burnside(&funct, &[0, 2, 3]).unwrap();
            assert!(strat.dedekind, "{name} should be Dedekind");
            for stratum in &strat.strata {
                assert_eq!(stratum.points, stratum.classified, "{name}");
                assert_eq!(stratum.points, stratum.by_generic, "{name}");
                assert_eq!(stratum.verdict.closed, Verdict::Yes, "{name}");
                assert!(stratum.closed_point.is_some(), "{name}");
                if stratum.h_rep == lat.top() {
                    assert_eq!(stratum.verdict.open, Verdict::Yes, "{name}");
                } else {
                    assert_eq!(stratum.verdict.open, Verdict::No, "{name}");
                    assert!(stratum.verdict.open_witness.is_some(), "{name}");
                }
            }
        }
    }

    #[test]
    fn non_dedekind_stratification_still_contracts_to_the_classification() {
        let lat = Arc::new(SubgroupLattice::new(Arc::new(symmetric(3).unwrap())).unwrap());
        let funct = BurnsideFunctor::<i64>::new(lat.clone());
        let strat = stratify_burnside(&funct, &[0, 2, 3]).unwrap();
        assert!(!strat.dedekind);
        let spec = &strat.spectrum;
        // Four zero primes; mod 2 the classes {e, C2} and {C3, S3} collapse;
        // mod 3 only {e, C3} does.
        assert_eq!(spec.len(), 9);
        for stratum in &strat.strata {
            assert_eq!(stratum.points, stratum.classified);
            assert_eq!(stratum.points, stratum.by_generic);
            if stratum.h_rep == lat.top() {
                assert_eq!(stratum.verdict.open, Verdict::Yes);
                assert_eq!(stratum.verdict.closed, Verdict::Yes);
            } else {
                // No theorem backs a positive closedness claim here, and the
                // represented points show no counterexample.
                assert_eq!(stratum.verdict.closed, Verdict::TruncationLimited);
                assert_eq!(stratum.verdict.open, Verdict::No);
            }
        }
        let bottom = &strat.strata[0];
        assert_eq!(bottom.h_rep, lat.trivial());
        assert_eq!(bottom.points.len(), 3);
    }

    #[test]
    fn subgroup_relative_prime_levels_match_the_global_ones_at_the_top() {
        for g in [cyclic(12).unwrap(), quaternion(2).unwrap(), symmetric(3).unwrap()] {
            let lat = Arc::new(SubgroupLattice::new(Arc::new(g)).unwrap());
            let funct = BurnsideFunctor::<i64>::new(lat.clone());
            for &k0 in lat.class_reps() {
                for p in [0u64, 2, 3] {
                    for &s in lat.class_reps() {
                        let within = prime_level_within(&funct, lat.top(), k0, p, s);
                        let global = funct.prime_level(k0, p, s).unwrap();
                        assert!(within.contains_lattice(&global));
                        assert!(global.contains_lattice(&within));
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_point_spectra_posets_match() {
        for s in [f2xf2_swap(), z4_trivial(), f4_frobenius()] {
            let cmp = spec_fp(&s, BOUND).unwrap();
            assert_eq!(cmp.g_primes.len(), 1);
            assert_eq!(cmp.fp_spectrum.len(), 1);
            assert_eq!(cmp.fixed_primes.len(), 1);
        }

        // The doubled prime: the G-prime (2) of Z/4 maps to ((2), (2)).
        let s = z4_trivial();
        let cmp = spec_fp(&s, BOUND).unwrap();
        let r = &cmp.fp.functor;
        assert_eq!(cmp.g_primes[0], elem_set(4, &[0, 2]));
        assert_eq!(
            cmp.fp_spectrum.points[cmp.gprime_to_fp[0]],
            ideal_from(r, &[(r.bottom(), &[0, 2]), (r.top(), &[0, 2])])
        );

        // A two-point antichain: both projections of F2×F2 with trivial
        // action, in all three incarnations.
        let f2 = fq(2).unwrap();
        let square = ProductRing::new(&[&f2, &f2]).unwrap().ring;
        let s = GRing::trivial(Arc::new(cyclic(2).unwrap()), square);
        let cmp = spec_fp(&s, BOUND).unwrap();
        assert_eq!(cmp.g_primes.len(), 2);
        assert_eq!(cmp.fp_spectrum.len(), 2);
        assert!(!cmp.fp_spectrum.leq[0][1] && !cmp.fp_spectrum.leq[1][0]);
        assert_ne!(cmp.gprime_to_fp[0], cmp.gprime_to_fp[1]);
        assert_ne!(cmp.fp_to_fixed[0], cmp.fp_to_fixed[1]);

        // The zero ideal of Z/4 is not G-prime (2·2 = 0), so the kernel
        // construction refuses it.
        let fp = fp_z4();
        let zero = elem_set(4, &[0]);
        assert!(matches!(
            gprime_to_prime(&s4(), &fp, &zero),
            Err(SpectraError::NotGPrime)
        ));
    }

    fn s4() -> GRing {
        z4_trivial()
    }

    #[test]
    fn product_spectra_are_disjoint_unions_of_the_factors() {
        let fp_a = fp_z4();
        let a = &fp_a.functor;
        let lat = a.lat().clone();
        let b = transport(&fp_f2_trivial().functor, &lat, &[0, 1]).unwrap();
        let prod = product(a, &b).unwrap();
        // Ideals of the product are exactly the pairs of ideals.
        assert_eq!(enumerate_tambara_ideals(&prod.functor, BOUND).unwrap().len(), 4 * 2);
        let spec = spec_bruteforce(&prod.functor, BOUND).unwrap();
        assert_eq!(spec.len(), 2);

        let projection = |coord: usize| {
            let maps: Vec<Vec<usize>> = (0..lat.len())
                .map(|k| {
                    if !lat.is_sub(k, prod.functor.top()) {
                        return Vec::new();
                    }
                    let pair = prod.pairs[k].as_ref().unwrap();
                    (0..pair.ring.order()).map(|z| pair.decode(z)[coord]).collect()
                })
                .collect();
            TambaraMorphism { maps }
        };
        let pi_a = projection(0);
        let pi_b = projection(1);
        pi_a.validate(&prod.functor, a).unwrap();
        pi_b.validate(&prod.functor, &b).unwrap();

        let spec_a = spec_bruteforce(a, BOUND).unwrap();
        let spec_b = spec_bruteforce(&b, BOUND).unwrap();
        let from_a = spec_map(&pi_a, &prod.functor, &spec, &spec_a).unwrap();
        let from_b = spec_map(&pi_b, &prod.functor, &spec, &spec_b).unwrap();
        assert_eq!(from_a.len(), 1);
        assert_eq!(from_b.len(), 1);
        assert_ne!(from_a[0], from_b[0]);
        // The two embedded copies cover the spectrum and are incomparable.
        let mut covered = vec![from_a[0], from_b[0]];
        covered.sort_unstable();
        assert_eq!(covered, vec![0, 1]);
        assert!(!spec.leq[from_a[0]][from_b[0]]);
        assert!(!spec.leq[from_b[0]][from_a[0]]);
    }

    #[test]
    fn domain_like_verdicts_agree_with_enumeration() {
        assert!(is_domain_like(&fp_f2_trivial().functor).unwrap());
        let (_, functions) = coind_f2();
        assert!(is_domain_like(&functions).unwrap());
        assert!(is_domain_like(&fp_swap().functor).unwrap());
        assert!(!is_domain_like(&fp_z4().functor).unwrap());
        assert!(!is_domain_like(&fp_f2xf2_trivial().functor).unwrap());
        // The ghost's restriction to the bottom is not injective, so only
        // the slow test applies there.
        let g = ghost(&fp_z4().functor).unwrap();
        assert!(!is_domain_like(&g.functor).unwrap());
    }

    #[test]
    fn clarified_decompositions_terminate_at_clarified_pieces() {
        let (lat, functions) = coind_f2();
        let dec = clarified_decomposition(&functions).unwrap();
        assert_eq!(dec.steps, 1);
        assert_eq!(dec.isotropy, lat.trivial());
        assert_eq!(dec.piece.level(dec.piece.top()).order(), 2);

        let dec = clarified_decomposition(&fp_swap().functor).unwrap();
        assert_eq!(dec.steps, 1);
        assert_eq!(dec.isotropy, dec.piece.lat().trivial());
        assert_eq!(dec.piece.level(dec.piece.top()).order(), 2);

        let dec = clarified_decomposition(&fp_z4().functor).unwrap();
        assert_eq!(dec.steps, 0);
        assert_eq!(dec.isotropy, dec.piece.top());
        assert_eq!(dec.isotropy, dec.piece.lat().top());

        // Orthogonality of translates fails for the idempotents of the
        // trivial action, so nothing splits even though idempotents exist.
        let dec = clarified_decomposition(&fp_f2xf2_trivial().functor).unwrap();
        assert_eq!(dec.steps, 0);
    }
}
