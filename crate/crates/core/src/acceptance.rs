//! The ten-criterion acceptance suite: each criterion reproduces a worked
//! fact or verifies a property family end to end, under a wall-clock budget.
//! The report prints one line per criterion; a criterion fails on a wrong
//! value, an unexpected error, or a blown budget — never silently.

use crate::burnside::{norm_oracle, BurnsideFunctor, IdealOrder};
use crate::grings::monomial::MonomialAlgebra;
use crate::grings::samples::{f2xf2_swap, f4_frobenius, z4_trivial};
use crate::grings::GRing;
use crate::groups::{
    cyclic, dihedral, product as group_product, quaternion, symmetric, FiniteGroup,
    SubgroupLattice,
};
use crate::ideals::{
    coind_ideal, coind_ideal_inverse, enumerate_tambara_ideals, ideal_product, is_prime,
    is_prime_full, is_proper, IdealError, TambaraIdeal, DEFAULT_COMBO_BOUND,
};
use crate::rings::{fq, zn, FiniteRing, ProductRing};
use crate::spectra::{
    clarified_decomposition, is_domain_like, spec_burnside, spec_fp, stratify_burnside,
    stratum_ghost, Verdict,
};
use crate::tambara::coind::coinduce;
use crate::tambara::fp::fixed_point_functor;
use crate::tambara::ghost::ghost;
use crate::tambara::split::product as functor_product;
use crate::tambara::{ring_at_bottom, transport, TambaraFunctor};
use std::sync::Arc;
use std::time::{Duration, Instant};

const BOUND: u128 = DEFAULT_COMBO_BOUND;

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    /// A one-phrase summary on success, the failure reason otherwise.
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

struct Criterion {
    number: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Result<String, String>,
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            title: "Burnside spectrum of C2 over {0,2,3}",
            budget: Duration::from_secs(1),
            run: criterion_burnside_c2,
        },
        Criterion {
            number: 2,
            title: "prime collision p[C2,2] = p[C4,2] in A(C12)",
            budget: Duration::from_secs(5),
            run: criterion_c12_collision,
        },
        Criterion {
            number: 3,
            title: "Burnside strata closed and not open (Dedekind groups)",
            budget: Duration::from_secs(30),
            run: criterion_strata_theorem,
        },
        Criterion {
            number: 4,
            title: "coinduction bijection on ideals and primes",
            budget: Duration::from_secs(60),
            run: criterion_coinduction_bijection,
        },
        Criterion {
            number: 5,
            title: "ghost spectrum of FP(Z/4) and its bottom stratum",
            budget: Duration::from_secs(5),
            run: criterion_ghost_spectrum,
        },
        Criterion {
            number: 6,
            title: "fixed-point spectra poset isomorphisms",
            budget: Duration::from_secs(10),
            run: criterion_fp_bijections,
        },
        Criterion {
            number: 7,
            title: "norm oracle agreement on groups of order <= 8",
            budget: Duration::from_secs(30),
            run: criterion_norm_oracle,
        },
        Criterion {
            number: 8,
            title: "principal-pair primality equals the full definition",
            budget: Duration::from_secs(60),
            run: criterion_primality_equivalence,
        },
        Criterion {
            number: 9,
            title: "clarified decompositions and domain-like verdicts",
            budget: Duration::from_secs(5),
            run: criterion_clarified_decomposition,
        },
        Criterion {
            number: 10,
            title: "monomial algebra embedding over C2",
            budget: Duration::from_secs(1),
            run: criterion_monomial_embedding,
        },
    ]
}

/// Run every criterion, enforcing budgets.
pub fn run_all() -> Vec<CriterionReport> {
    criteria()
        .into_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)();
            let elapsed = start.elapsed();
            let (mut passed, detail) = match outcome {
                Ok(detail) => (true, detail),
                Err(reason) => (false, reason),
            };
            let detail = if elapsed > c.budget {
                passed = false;
                format!("{detail} [budget exceeded]")
            } else {
                detail
            };
            CriterionReport {
                number: c.number,
                title: c.title,
                passed,
                detail,
                elapsed,
                budget: c.budget,
            }
        })
        .collect()
}

pub fn all_passed(reports: &[CriterionReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// One line per criterion: status, number, title, timing, summary.
pub fn render_report(reports: &[CriterionReport]) -> String {
    let title_width = reports.iter().map(|r| r.title.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status}  {:>2}  {:<title_width$}  {:>6} ms / {:>2} s  {}\n",
            r.number,
            r.title,
            r.elapsed.as_millis(),
            r.budget.as_secs(),
            r.detail,
        ));
    }
    out
}

fn lattice_of(g: FiniteGroup) -> Result<Arc<SubgroupLattice>, String> {
    Ok(Arc::new(SubgroupLattice::new(Arc::new(g)).map_err(|e| e.to_string())?))
}

fn criterion_burnside_c2() -> Result<String, String> {
    let lat = lattice_of(cyclic(2).map_err(|e| e.to_string())?)?;
    let funct = BurnsideFunctor::<i64>::new(lat);
    let spec = spec_burnside(&funct, &[0, 2, 3]).map_err(|e| e.to_string())?;
    if spec.len() != 5 {
        return Err(format!("expected 5 points, found {}", spec.len()));
    }
    let e2 = spec.index_of_label(0, 2).ok_or("p[e,2] missing")?;
    let g2 = spec.index_of_label(1, 2).ok_or("p[C2,2] missing")?;
    if e2 != g2 {
        return Err("p[e,2] and p[C2,2] do not collide".into());
    }
    Ok("5 points; p[e,2] = p[C2,2]".into())
}

fn criterion_c12_collision() -> Result<String, String> {
    let lat = lattice_of(cyclic(12).map_err(|e| e.to_string())?)?;
    let funct = BurnsideFunctor::<i64>::new(lat.clone());
    let rep_of_order = |n: usize| {
        lat.class_reps()
            .iter()
            .copied()
            .find(|&k| lat.subgroup(k).order() == n)
            .ok_or(format!("no subgroup of order {n}"))
    };
    let p2 = funct.prime(rep_of_order(2)?, 2).map_err(|e| e.to_string())?;
    let p4 = funct.prime(rep_of_order(4)?, 2).map_err(|e| e.to_string())?;
    match p2.compare(&p4) {
        IdealOrder::Equal => Ok("p[C2,2] = p[C4,2] as levelwise lattices".into()),
        other => Err(format!("comparison returned {other:?}")),
    }
}

fn criterion_strata_theorem() -> Result<String, String> {
    let groups = vec![
        cyclic(2),
        cyclic(3),
        cyclic(4),
        group_product(&[cyclic(2).map_err(|e| e.to_string())?, cyclic(2).map_err(|e| e.to_string())?]),
        quaternion(2),
    ];
    let mut strata_seen = 0usize;
    for g in groups {
        let g = g.map_err(|e| e.to_string())?;
        let name = g.name().to_string();
        let lat = lattice_of(g)?;
        let funct = BurnsideFunctor::<i64>::new(lat.clone());
        let strat = stratify_burnside(&funct, &[0, 2, 3]).map_err(|e| e.to_string())?;
        if !strat.dedekind {
            return Err(format!("{name} not recognized as Dedekind"));
        }
        for stratum in &strat.strata {
            let h = lat.label(stratum.h_rep);
            if stratum.points != stratum.classified {
                return Err(format!("{name}: stratum {h} differs from its classification"));
            }
            if stratum.points != stratum.by_generic {
                return Err(format!("{name}: stratum {h} is not V(p[{h},0])"));
            }
            if stratum.verdict.closed != Verdict::Yes || stratum.closed_point.is_none() {
                return Err(format!("{name}: stratum {h} not certified closed"));
            }
            if stratum.h_rep == lat.top() {
                if stratum.verdict.open != Verdict::Yes {
                    return Err(format!("{name}: top stratum not open"));
                }
            } else {
                if stratum.verdict.open != Verdict::No {
                    return Err(format!("{name}: stratum {h} not refuted open"));
                }
                let (i, j) = stratum.verdict.open_witness.ok_or("missing witness")?;
                let valid = !stratum.points.contains(&i)
                    && strat.spectrum.leq[i][j]
                    && stratum.points.contains(&j);
                if !valid {
                    return Err(format!("{name}: invalid openness witness for {h}"));
                }
            }
            strata_seen += 1;
        }
    }
    Ok(format!("5 groups, {strata_seen} strata closed; proper ones not open (witnessed)"))
}

fn prime_status(r: &TambaraFunctor, i: &TambaraIdeal) -> Result<Option<bool>, String> {
    match is_prime(r, i) {
        Ok(v) => Ok(Some(v)),
        Err(IdealError::Improper) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

fn check_coinduction_case(src: &TambaraFunctor, name: &str) -> Result<usize, String> {
    let lat = src.lat().clone();
    let c = coinduce(src, lat.top()).map_err(|e| format!("{name}: {e}"))?;
    let src_ideals = enumerate_tambara_ideals(src, BOUND).map_err(|e| format!("{name}: {e}"))?;
    let tgt_ideals =
        enumerate_tambara_ideals(&c.functor, BOUND).map_err(|e| format!("{name}: {e}"))?;
    let mapped: Vec<TambaraIdeal> = src_ideals
        .iter()
        .map(|i| coind_ideal(&c, i))
        .collect::<Result<_, _>>()
        .map_err(|e| format!("{name}: {e}"))?;
    if mapped.len() != tgt_ideals.len() {
        return Err(format!(
            "{name}: {} source ideals vs {} coinduced ideals",
            mapped.len(),
            tgt_ideals.len()
        ));
    }
    for m in &mapped {
        if !tgt_ideals.contains(m) {
            return Err(format!("{name}: image is not an ideal of the coinduction"));
        }
    }
    let mut dedup = mapped.clone();
    dedup.sort_by_key(|i| i.levels.iter().map(|l| l.ones().collect::<Vec<_>>()).collect::<Vec<_>>());
    dedup.dedup();
    if dedup.len() != mapped.len() {
        return Err(format!("{name}: the map identifies two ideals"));
    }
    for (a, ia) in src_ideals.iter().enumerate() {
        if coind_ideal_inverse(&c, src, &mapped[a]).map_err(|e| format!("{name}: {e}"))? != *ia {
            return Err(format!("{name}: inverse fails"));
        }
        if prime_status(src, ia)? != prime_status(&c.functor, &mapped[a])? {
            return Err(format!("{name}: primality not preserved"));
        }
        for (b, ib) in src_ideals.iter().enumerate() {
            let order_src = ia.contains(ib);
            let order_tgt = mapped[a].contains(&mapped[b]);
            if order_src != order_tgt {
                return Err(format!("{name}: order not preserved at pair ({a}, {b})"));
            }
            let prod_src = ideal_product(src, ia, ib).map_err(|e| format!("{name}: {e}"))?;
            let prod_tgt =
                ideal_product(&c.functor, &mapped[a], &mapped[b]).map_err(|e| format!("{name}: {e}"))?;
            if coind_ideal(&c, &prod_src).map_err(|e| format!("{name}: {e}"))? != prod_tgt {
                return Err(format!("{name}: products not preserved at pair ({a}, {b})"));
            }
        }
    }
    Ok(src_ideals.len())
}

fn criterion_coinduction_bijection() -> Result<String, String> {
    let rings: Vec<(&str, FiniteRing)> = vec![
        ("F2", fq(2).map_err(|e| e.to_string())?),
        ("Z4", zn(4).map_err(|e| e.to_string())?),
        ("F4", fq(4).map_err(|e| e.to_string())?),
    ];
    let mut cases = 0usize;
    let mut ideals = 0usize;
    // Trivial-subgroup functors coinduced to cyclic groups.
    for n in [2usize, 3, 4] {
        let lat = lattice_of(cyclic(n).map_err(|e| e.to_string())?)?;
        for (rname, ring) in &rings {
            let src = ring_at_bottom(&lat, ring.clone()).map_err(|e| e.to_string())?;
            ideals += check_coinduction_case(&src, &format!("{rname} at e of C{n}"))?;
            cases += 1;
        }
    }
    // C2-supported functors coinduced from the index-2 subgroup of C4.
    let lat4 = lattice_of(cyclic(4).map_err(|e| e.to_string())?)?;
    let c2 = Arc::new(cyclic(2).map_err(|e| e.to_string())?);
    for (rname, ring) in &rings {
        let fp = fixed_point_functor(&GRing::trivial(c2.clone(), ring.clone()))
            .map_err(|e| e.to_string())?;
        let src = transport(&fp.functor, &lat4, &[0, 2]).map_err(|e| e.to_string())?;
        ideals += check_coinduction_case(&src, &format!("{rname} at C2 of C4"))?;
        cases += 1;
    }
    Ok(format!("{cases} cases, {ideals} source ideals matched bijectively"))
}

fn criterion_ghost_spectrum() -> Result<String, String> {
    let fp = fixed_point_functor(&z4_trivial()).map_err(|e| e.to_string())?;
    let gs = stratum_ghost(&fp.functor, BOUND).map_err(|e| e.to_string())?;
    if gs.spectrum.len() != 2 {
        return Err(format!("expected 2 points, found {}", gs.spectrum.len()));
    }
    let chain = (gs.spectrum.leq[0][1] && !gs.spectrum.leq[1][0])
        || (gs.spectrum.leq[1][0] && !gs.spectrum.leq[0][1]);
    if !chain {
        return Err("the two points do not form a chain".into());
    }
    if gs.points.len() != 1 {
        return Err(format!("bottom stratum has {} points, expected 1", gs.points.len()));
    }
    if gs.classified != gs.points || gs.with_full_quotient != gs.points {
        return Err("stratum disagrees with its classified description".into());
    }
    if gs.verdict.closed != Verdict::Yes || gs.verdict.open != Verdict::No {
        return Err("stratum verdicts are not closed-and-not-open".into());
    }
    let (i, j) = gs.verdict.open_witness.ok_or("missing openness witness")?;
    if !(gs.spectrum.leq[i][j] && gs.points.contains(&j) && !gs.points.contains(&i)) {
        return Err("invalid openness witness".into());
    }
    Ok("2 points P2 < P1; stratum {P1} closed, not open (witnessed)".into())
}

fn criterion_fp_bijections() -> Result<String, String> {
    // `spec_fp` already verifies that the comparison maps are order
    // isomorphisms forming a commuting triangle; a wrong poset errors out.
    for (name, s, expected) in [
        ("F2xF2 swap", f2xf2_swap(), 1usize),
        ("Z4 trivial", z4_trivial(), 1),
        ("F4 Frobenius", f4_frobenius(), 1),
    ] {
        let cmp = spec_fp(&s, BOUND).map_err(|e| format!("{name}: {e}"))?;
        if cmp.fp_spectrum.len() != expected {
            return Err(format!(
                "{name}: {} spectrum points, expected {expected}",
                cmp.fp_spectrum.len()
            ));
        }
    }
    let f2 = fq(2).map_err(|e| e.to_string())?;
    let square = ProductRing::new(&[&f2, &f2]).map_err(|e| e.to_string())?.ring;
    let s = GRing::trivial(Arc::new(cyclic(2).map_err(|e| e.to_string())?), square);
    let cmp = spec_fp(&s, BOUND).map_err(|e| format!("F2xF2 trivial: {e}"))?;
    if cmp.fp_spectrum.len() != 2 {
        return Err(format!("F2xF2 trivial: {} points, expected 2", cmp.fp_spectrum.len()));
    }
    if cmp.fp_spectrum.leq[0][1] || cmp.fp_spectrum.leq[1][0] {
        return Err("F2xF2 trivial: the two points are not an antichain".into());
    }
    Ok("4 G-rings; all three spectra posets are isomorphic (3 singletons, 1 antichain)".into())
}

fn criterion_norm_oracle() -> Result<String, String> {
    let groups = vec![
        cyclic(1),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        cyclic(5),
        cyclic(6),
        cyclic(7),
        cyclic(8),
        group_product(&[cyclic(2).map_err(|e| e.to_string())?, cyclic(2).map_err(|e| e.to_string())?]),
        group_product(&[cyclic(2).map_err(|e| e.to_string())?, cyclic(4).map_err(|e| e.to_string())?]),
        group_product(&[
            cyclic(2).map_err(|e| e.to_string())?,
            cyclic(2).map_err(|e| e.to_string())?,
            cyclic(2).map_err(|e| e.to_string())?,
        ]),
        symmetric(3),
        dihedral(4),
        quaternion(2),
    ];
    let mut checks = 0usize;
    for g in groups {
        let g = g.map_err(|e| e.to_string())?;
        let name = g.name().to_string();
        let lat = lattice_of(g)?;
        let funct = BurnsideFunctor::<i64>::new(lat.clone());
        for h in 0..lat.len() {
            for k in 0..lat.len() {
                if !lat.is_sub(k, h) {
                    continue;
                }
                let rank = funct.level(k).rank();
                let mut elements: Vec<Vec<i64>> = Vec::new();
                for i in 0..rank {
                    let mut e = vec![0i64; rank];
                    e[i] = 1;
                    elements.push(e);
                }
                for i in 0..rank {
                    for j in i..rank {
                        let mut e = vec![0i64; rank];
                        e[i] += 1;
                        e[j] += 1;
                        elements.push(e);
                    }
                }
                for coords in &elements {
                    let by_functor =
                        funct.norm(k, h, coords).map_err(|e| format!("{name}: {e}"))?;
                    let by_oracle = norm_oracle(&funct, k, h, coords);
                    if by_functor != by_oracle {
                        return Err(format!(
                            "{name}: norm differs on {coords:?} from level {} to {}",
                            lat.label(k),
                            lat.label(h)
                        ));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("14 groups, {checks} norm values matched"))
}

fn functor_zoo() -> Result<Vec<(String, TambaraFunctor)>, String> {
    let err = |e: crate::tambara::TambaraError| e.to_string();
    let fp_z4 = fixed_point_functor(&z4_trivial()).map_err(err)?.functor;
    let fp_swap = fixed_point_functor(&f2xf2_swap()).map_err(err)?.functor;
    let fp_f4 = fixed_point_functor(&f4_frobenius()).map_err(err)?.functor;
    let c2 = Arc::new(cyclic(2).map_err(|e| e.to_string())?);
    let f2 = fq(2).map_err(|e| e.to_string())?;
    let square = ProductRing::new(&[&f2, &f2]).map_err(|e| e.to_string())?.ring;
    let fp_square = fixed_point_functor(&GRing::trivial(c2.clone(), square.clone()))
        .map_err(err)?
        .functor;
    let lat = lattice_of(cyclic(2).map_err(|e| e.to_string())?)?;
    let coind_f2 = coinduce(&ring_at_bottom(&lat, f2.clone()).map_err(err)?, lat.top())
        .map_err(err)?
        .functor;
    let coind_z4 = coinduce(
        &ring_at_bottom(&lat, zn(4).map_err(|e| e.to_string())?).map_err(err)?,
        lat.top(),
    )
    .map_err(err)?
    .functor;
    let ghost_z4 = ghost(&fp_z4).map_err(err)?.functor;
    let fp_f2 = fixed_point_functor(&GRing::trivial(c2, f2)).map_err(err)?.functor;
    let fp_f2_t = transport(&fp_f2, fp_z4.lat(), &[0, 1]).map_err(err)?;
    let prod = functor_product(&fp_z4, &fp_f2_t).map_err(err)?.functor;
    Ok(vec![
        ("FP(Z4 trivial)".into(), fp_z4),
        ("FP(F2xF2 swap)".into(), fp_swap),
        ("FP(F4 Frobenius)".into(), fp_f4),
        ("FP(F2xF2 trivial)".into(), fp_square),
        ("CoInd F2".into(), coind_f2),
        ("CoInd Z4".into(), coind_z4),
        ("ghost FP(Z4)".into(), ghost_z4),
        ("FP(Z4) x FP(F2)".into(), prod),
    ])
}

fn criterion_primality_equivalence() -> Result<String, String> {
    let mut compared = 0usize;
    for (name, r) in functor_zoo()? {
        let ideals = enumerate_tambara_ideals(&r, BOUND).map_err(|e| format!("{name}: {e}"))?;
        for i in &ideals {
            if !is_proper(&r, i) {
                continue;
            }
            let fast = is_prime(&r, i).map_err(|e| format!("{name}: {e}"))?;
            let full = is_prime_full(&r, i, BOUND).map_err(|e| format!("{name}: {e}"))?;
            if fast != full {
                return Err(format!(
                    "{name}: principal-pair says {fast}, full definition says {full} on {}",
                    i.describe(&r)
                ));
            }
            compared += 1;
        }
    }
    Ok(format!("8 functors, {compared} proper ideals, both tests agree"))
}

fn criterion_clarified_decomposition() -> Result<String, String> {
    let err = |e: crate::spectra::SpectraError| e.to_string();
    let zoo = functor_zoo()?;
    let by_name = |n: &str| {
        zoo.iter()
            .find(|(name, _)| name == n)
            .map(|(_, r)| r.clone())
            .ok_or_else(|| format!("missing functor {n}"))
    };
    // Function rings on free orbits decompose back to their fiber.
    for name in ["CoInd F2", "FP(F2xF2 swap)"] {
        let r = by_name(name)?;
        let dec = clarified_decomposition(&r).map_err(err)?;
        let bottom_field = dec.piece.level(dec.piece.top());
        if dec.isotropy != dec.piece.lat().trivial()
            || bottom_field.order() != 2
            || !bottom_field.is_field()
        {
            return Err(format!("{name}: decomposition did not reach (e, F2)"));
        }
        if !is_domain_like(&r).map_err(err)? {
            return Err(format!("{name}: should be domain-like (its fiber is a field)"));
        }
    }
    // Fibers with zero divisors make the whole functor fail.
    for name in ["CoInd Z4", "FP(F2xF2 trivial)"] {
        let r = by_name(name)?;
        if is_domain_like(&r).map_err(err)? {
            return Err(format!("{name}: should not be domain-like (fiber has zero divisors)"));
        }
    }
    Ok("two function rings reach (e, F2) and are domain-like; zero-divisor fibers are not".into())
}

fn criterion_monomial_embedding() -> Result<String, String> {
    let group = Arc::new(cyclic(2).map_err(|e| e.to_string())?);
    let alg = MonomialAlgebra::new(group, 2).map_err(|e| e.to_string())?;
    let (count, rank) = alg.injectivity_rank(6).map_err(|e| e.to_string())?;
    if count != rank {
        return Err(format!("embedding drops rank: {rank} of {count} monomials"));
    }
    let xe = alg.var(0);
    let xg = alg.var(1);
    if alg.mul(&xe, &xg) != alg.zero() {
        return Err("x_e * x_g is not zero".into());
    }
    if alg.mul(&xe, &xe) == alg.zero() {
        return Err("x_e^2 collapsed; the relation kills too much".into());
    }
    Ok(format!("{count} monomials of degree <= 6 embed with full rank; x_e * x_g = 0"))
}
