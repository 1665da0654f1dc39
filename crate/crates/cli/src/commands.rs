//! One handler per subcommand.  Every handler returns the full output as a
//! string (printed once by `main`) plus a process exit code, so output stays
//! byte-deterministic and testable.

use crate::error::CliError;
use crate::inputs::{load_functor, load_gring, load_lattice, parse_generator};
use crate::render::{order_lines, poset_dot, pretty, table, verdict_cells, Format};
use crate::{
    BurnsideArgs, FunctorArgs, GhostArgs, GroupArgs, IdealAction, IdealsArgs, SpecArgs,
    StratifyArgs, VerifyArgs,
};
use serde_json::{json, Value};
use tambara::acceptance::{all_passed, run_all, CriterionReport};
use tambara::groups::SubgroupLattice;
use tambara::ideals::{
    close_tambara, enumerate_tambara_ideals, is_prime, is_prime_full, is_proper,
    principal_ideals, IdealError, TambaraIdeal,
};
use tambara::io::render_functor;
use tambara::spectra::{
    spec_bruteforce, spec_burnside, stratify, stratify_burnside, stratum_ghost,
    BurnsideSpectrum, Spectrum, TopologyVerdict,
};
use tambara::tambara::coind::coinduce;
use tambara::tambara::fp::fixed_point_functor;
use tambara::tambara::ghost::ghost;
use tambara::tambara::TambaraFunctor;
use tambara::{BurnsideFunctor, Int, Lattice};

type CmdResult = Result<(String, u8), CliError>;

const OK: u8 = 0;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

// ---------------------------------------------------------------- group ----

pub fn group_cmd(args: &GroupArgs) -> CmdResult {
    let lat = load_lattice(&args.group)?;
    let g = lat.group();
    let members = |i: usize| {
        let sub = lat.subgroup(i);
        let ms: Vec<String> = sub.members().map(|m| m.to_string()).collect();
        format!("{{{}}}", ms.join(","))
    };
    let out = match args.format {
        Format::Text => {
            let mut out = format!(
                "group {}: order {}, {}, {}\n",
                g.name(),
                g.order(),
                if g.is_abelian() { "abelian" } else { "nonabelian" },
                if lat.is_dedekind() { "dedekind" } else { "not dedekind" },
            );
            out.push_str(&format!(
                "subgroup lattice: {} subgroups in {} conjugacy classes\n\n",
                lat.len(),
                lat.classes().len()
            ));
            let rows: Vec<Vec<String>> = (0..lat.len())
                .map(|i| {
                    vec![
                        i.to_string(),
                        lat.label(i),
                        lat.subgroup(i).order().to_string(),
                        members(i),
                        yesno(lat.is_normal(i)),
                        lat.class_of(i).to_string(),
                    ]
                })
                .collect();
            out.push_str(&table(
                &["index", "label", "order", "members", "normal", "class"],
                &rows,
            ));
            out
        }
        Format::Json => {
            let subgroups: Vec<Value> = (0..lat.len())
                .map(|i| {
                    json!({
                        "index": i,
                        "label": lat.label(i),
                        "order": lat.subgroup(i).order(),
                        "members": lat.subgroup(i).members().collect::<Vec<_>>(),
                        "normal": lat.is_normal(i),
                        "class": lat.class_of(i),
                    })
                })
                .collect();
            pretty(&json!({
                "name": g.name(),
                "order": g.order(),
                "abelian": g.is_abelian(),
                "dedekind": lat.is_dedekind(),
                "subgroups": subgroups,
                "classes": lat.classes(),
            }))
        }
        Format::Dot => {
            let leq: Vec<Vec<bool>> = (0..lat.len())
                .map(|i| (0..lat.len()).map(|j| lat.is_sub(i, j)).collect())
                .collect();
            let labels: Vec<String> = (0..lat.len()).map(|i| lat.label(i)).collect();
            let clusters: Vec<(String, Vec<usize>)> = lat
                .classes()
                .iter()
                .enumerate()
                .map(|(c, cls)| (format!("class {c}"), cls.clone()))
                .collect();
            poset_dot(&format!("subgroup lattice of {}", g.name()), &labels, &leq, &clusters)
        }
    };
    Ok((out, OK))
}

// ------------------------------------------------------------- burnside ----

/// `p[K,p]` for every label on the point, joined by `=` since they denote
/// one and the same prime.
fn point_label(lat: &SubgroupLattice, labels: &[(usize, u64)]) -> String {
    let parts: Vec<String> = labels
        .iter()
        .map(|&(kc, p)| format!("p[{},{}]", lat.label(lat.class_reps()[kc]), p))
        .collect();
    parts.join(" = ")
}

fn lattice_str(l: &Lattice) -> String {
    if l.is_full() {
        return format!("Z^{}", l.dim());
    }
    if l.is_zero() {
        return "0".to_string();
    }
    let rows: Vec<String> = l
        .basis()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn lattice_json(l: &Lattice) -> Value {
    json!({ "dim": l.dim(), "basis": l.basis() })
}

fn burnside_points_json(lat: &SubgroupLattice, spec: &BurnsideSpectrum<Int>) -> Vec<Value> {
    spec.points
        .iter()
        .enumerate()
        .map(|(i, pt)| {
            let labels: Vec<Value> = pt
                .labels
                .iter()
                .map(|&(kc, p)| json!({ "subgroup": lat.label(lat.class_reps()[kc]), "p": p }))
                .collect();
            let levels: Vec<Value> = lat
                .class_reps()
                .iter()
                .zip(&pt.ideal.levels)
                .map(|(&h, l)| json!({ "level": lat.label(h), "lattice": lattice_json(l) }))
                .collect();
            json!({ "index": i, "labels": labels, "levels": levels })
        })
        .collect()
}

pub fn burnside_cmd(args: &BurnsideArgs) -> CmdResult {
    let lat = load_lattice(&args.group)?;
    let funct = BurnsideFunctor::new(lat.clone());
    let spec = spec_burnside(&funct, &args.primes)?;
    let top_level = funct.level(lat.top());
    let class_labels: Vec<String> = top_level.reps.iter().map(|&k| lat.label(k)).collect();
    let out = match args.format {
        Format::Text => {
            let mut out = format!(
                "Burnside functor of {} over primes {:?}\n\ntable of marks (rows K, columns I, entry |(G/K)^I|)\n",
                lat.group().name(),
                spec.prime_set
            );
            let mut headers: Vec<&str> = vec!["K\\I"];
            headers.extend(class_labels.iter().map(|s| s.as_str()));
            let rows: Vec<Vec<String>> = top_level
                .marks
                .iter()
                .enumerate()
                .map(|(k, row)| {
                    let mut cells = vec![class_labels[k].clone()];
                    cells.extend(row.iter().map(|m| m.to_string()));
                    cells
                })
                .collect();
            out.push_str(&table(&headers, &rows));
            out.push_str(&format!("\nspectrum: {} points\n", spec.len()));
            let rows: Vec<Vec<String>> = spec
                .points
                .iter()
                .enumerate()
                .map(|(i, pt)| vec![i.to_string(), point_label(&lat, &pt.labels)])
                .collect();
            out.push_str(&table(&["index", "labels"], &rows));
            out.push_str("\nprime levels (HNF basis rows per level)\n");
            for (i, pt) in spec.points.iter().enumerate() {
                out.push_str(&format!("point {i}: {}\n", point_label(&lat, &pt.labels)));
                for (pos, &h) in lat.class_reps().iter().enumerate() {
                    out.push_str(&format!(
                        "  {}: {}\n",
                        lat.label(h),
                        lattice_str(&pt.ideal.levels[pos])
                    ));
                }
            }
            out.push_str("\nspecialization order (covering relations)\n");
            out.push_str(&order_lines(&spec.leq));
            out
        }
        Format::Json => pretty(&json!({
            "group": lat.group().name(),
            "primes": spec.prime_set,
            "classes": class_labels,
            "marks": top_level.marks,
            "points": burnside_points_json(&lat, &spec),
            "order": spec.leq,
        })),
        Format::Dot => {
            let labels: Vec<String> =
                spec.points.iter().map(|pt| point_label(&lat, &pt.labels)).collect();
            poset_dot(
                &format!("Burnside spectrum of {} over {:?}", lat.group().name(), spec.prime_set),
                &labels,
                &spec.leq,
                &[],
            )
        }
    };
    Ok((out, OK))
}

// -------------------------------------------------------------- functor ----

fn describe_functor(r: &TambaraFunctor, source: &str) -> String {
    let lat = r.lat();
    let mut out = format!(
        "Tambara functor from {source}: support {} ({} of {} lattice levels)\n\n",
        lat.label(r.top()),
        r.subs().len(),
        lat.len()
    );
    let rows: Vec<Vec<String>> = r
        .subs()
        .into_iter()
        .map(|k| {
            let ring = r.level(k);
            let elems: Vec<String> = ring.elements().map(|x| ring.label(x)).collect();
            vec![k.to_string(), lat.label(k), ring.order().to_string(), elems.join(",")]
        })
        .collect();
    out.push_str(&table(&["index", "subgroup", "ring order", "elements"], &rows));
    out
}

/// Generated functors print (or write) canonical JSON; `--format text`
/// switches to the tabular description.
fn emit_functor(r: &TambaraFunctor, source: &str, args: &FunctorArgs) -> CmdResult {
    let rendered = match args.format {
        Format::Text => describe_functor(r, source),
        Format::Json => render_functor(r),
        Format::Dot => return Err(usage("dot output applies to posets; use text or json here")),
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, &rendered)
                .map_err(|e| usage(format!("cannot write '{path}': {e}")))?;
            Ok((format!("wrote {source} to {path}\n"), OK))
        }
        None => Ok((rendered, OK)),
    }
}

pub fn functor_cmd(args: &FunctorArgs) -> CmdResult {
    if let Some(gring_path) = &args.fp {
        let s = load_gring(gring_path)?;
        let fp = fixed_point_functor(&s)?;
        return emit_functor(&fp.functor, &format!("fixed-point functor of {gring_path}"), args);
    }
    let path = args
        .functor
        .as_deref()
        .ok_or_else(|| usage("--functor FILE is required unless generating with --fp"))?;
    let r = load_functor(path)?;
    if args.coind {
        let c = coinduce(&r, r.lat().top())?;
        return emit_functor(&c.functor, &format!("coinduction of {path} to the full group"), args);
    }
    if args.ghost {
        let g = ghost(&r)?;
        return emit_functor(&g.functor, &format!("ghost of {path}"), args);
    }
    match args.format {
        Format::Text => Ok((describe_functor(&r, path), OK)),
        Format::Json => Ok((render_functor(&r), OK)),
        Format::Dot => Err(usage("dot output applies to posets; use text or json here")),
    }
}

// --------------------------------------------------------------- ideals ----

fn ideal_json(r: &TambaraFunctor, i: &TambaraIdeal) -> Value {
    let levels: Vec<Value> = r
        .subs()
        .into_iter()
        .map(|k| {
            json!({
                "level": r.lat().label(k),
                "elements": i.levels[k].ones().collect::<Vec<_>>(),
            })
        })
        .collect();
    json!(levels)
}

/// Primality column for one ideal: cross-validated when the full enumeration
/// is available, otherwise flagged as certified by the principal-pair test
/// only.
fn prime_cell(
    r: &TambaraFunctor,
    i: &TambaraIdeal,
    bound: u128,
    cross_validate: bool,
) -> Result<String, CliError> {
    if !is_proper(r, i) {
        return Ok("improper".to_string());
    }
    let fast = is_prime(r, i)?;
    if cross_validate {
        let full = is_prime_full(r, i, bound)?;
        if fast != full {
            return Err(CliError::Check {
                name: "PrimalityMismatch",
                message: format!(
                    "principal-pair test says {fast} but the all-pairs definition says {full} \
                     on {}",
                    i.describe(r)
                ),
            });
        }
        Ok(yesno(fast))
    } else {
        Ok(format!("{} (principal-pair certified)", yesno(fast)))
    }
}

pub fn ideals_cmd(args: &IdealsArgs) -> CmdResult {
    let r = load_functor(&args.functor)?;
    match args.action {
        IdealAction::Enumerate => {
            let ideals = enumerate_tambara_ideals(&r, args.bound)?;
            let out = match args.format {
                Format::Text => {
                    let mut out =
                        format!("{} Tambara ideals of {}\n", ideals.len(), args.functor);
                    let rows: Vec<Vec<String>> = ideals
                        .iter()
                        .enumerate()
                        .map(|(i, ideal)| vec![i.to_string(), ideal.describe(&r)])
                        .collect();
                    out.push_str(&table(&["index", "ideal"], &rows));
                    out
                }
                Format::Json => pretty(&json!({
                    "count": ideals.len(),
                    "ideals": ideals.iter().map(|i| ideal_json(&r, i)).collect::<Vec<_>>(),
                })),
                Format::Dot => return Err(usage("dot output applies to posets; use spec")),
            };
            Ok((out, OK))
        }
        IdealAction::Close => {
            let generators: Vec<(usize, usize)> = args
                .generators
                .iter()
                .map(|g| parse_generator(g))
                .collect::<Result<_, _>>()?;
            let closed = close_tambara(&r, &generators)?;
            let out = match args.format {
                Format::Text => format!(
                    "closure of {} generator(s): {}\n",
                    generators.len(),
                    closed.describe(&r)
                ),
                Format::Json => pretty(&json!({
                    "generators": generators
                        .iter()
                        .map(|&(l, e)| json!({ "level": l, "element": e }))
                        .collect::<Vec<_>>(),
                    "ideal": ideal_json(&r, &closed),
                })),
                Format::Dot => return Err(usage("dot output applies to posets; use spec")),
            };
            Ok((out, OK))
        }
        IdealAction::Prime => {
            let (ideals, cross_validate, note) = match enumerate_tambara_ideals(&r, args.bound) {
                Ok(ideals) => (
                    ideals,
                    true,
                    "primality cross-validated against the all-pairs definition".to_string(),
                ),
                Err(IdealError::SearchBoundExceeded { combos, bound }) => (
                    principal_ideals(&r)?,
                    false,
                    format!(
                        "full enumeration needs {combos} combinations (bound {bound}); \
                         listing principal ideals, primality by principal-pair test only"
                    ),
                ),
                Err(e) => return Err(e.into()),
            };
            let mut cells = Vec::new();
            for ideal in &ideals {
                cells.push(prime_cell(&r, ideal, args.bound, cross_validate)?);
            }
            let out = match args.format {
                Format::Text => {
                    let mut out =
                        format!("{} ideals of {}; {}\n", ideals.len(), args.functor, note);
                    let rows: Vec<Vec<String>> = ideals
                        .iter()
                        .enumerate()
                        .map(|(i, ideal)| {
                            vec![i.to_string(), ideal.describe(&r), cells[i].clone()]
                        })
                        .collect();
                    out.push_str(&table(&["index", "ideal", "prime"], &rows));
                    out
                }
                Format::Json => pretty(&json!({
                    "note": note,
                    "ideals": ideals
                        .iter()
                        .enumerate()
                        .map(|(i, ideal)| json!({
                            "index": i,
                            "levels": ideal_json(&r, ideal),
                            "prime": cells[i],
                        }))
                        .collect::<Vec<_>>(),
                })),
                Format::Dot => return Err(usage("dot output applies to posets; use spec")),
            };
            Ok((out, OK))
        }
    }
}

// ----------------------------------------------------------------- spec ----

fn spectrum_text(r: &TambaraFunctor, spec: &Spectrum, heading: &str) -> String {
    let mut out = format!("{heading}: {} points\n", spec.len());
    let rows: Vec<Vec<String>> = spec
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| vec![i.to_string(), p.describe(r)])
        .collect();
    out.push_str(&table(&["index", "prime"], &rows));
    out.push_str("\nspecialization order (covering relations)\n");
    out.push_str(&order_lines(&spec.leq));
    out
}

fn spectrum_json(r: &TambaraFunctor, spec: &Spectrum) -> Value {
    json!({
        "points": spec.points.iter().map(|p| ideal_json(r, p)).collect::<Vec<_>>(),
        "order": spec.leq,
    })
}

pub fn spec_cmd(args: &SpecArgs) -> CmdResult {
    let r = load_functor(&args.functor)?;
    let spec = spec_bruteforce(&r, args.bound)?;
    let out = match args.format {
        Format::Text => {
            spectrum_text(&r, &spec, &format!("spectrum of {} (enumerated)", args.functor))
        }
        Format::Json => pretty(&spectrum_json(&r, &spec)),
        Format::Dot => {
            let labels: Vec<String> = spec.points.iter().map(|p| p.describe(&r)).collect();
            poset_dot(&format!("spectrum of {}", args.functor), &labels, &spec.leq, &[])
        }
    };
    Ok((out, OK))
}

// ------------------------------------------------------------- stratify ----

fn points_set(points: &[usize]) -> String {
    let parts: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Partition the points into clusters by the smallest stratum containing
/// each (strata nest upward in the subgroup order, so the smallest one is
/// the point's natural home).
fn minimal_clusters(
    lat: &SubgroupLattice,
    strata: &[(usize, &[usize])],
    n_points: usize,
) -> Vec<(String, Vec<usize>)> {
    let mut order: Vec<usize> = (0..strata.len()).collect();
    order.sort_by_key(|&s| (lat.subgroup(strata[s].0).order(), strata[s].0));
    let mut assigned: Vec<Option<usize>> = vec![None; n_points];
    for &s in &order {
        for &p in strata[s].1 {
            if assigned[p].is_none() {
                assigned[p] = Some(s);
            }
        }
    }
    order
        .iter()
        .filter_map(|&s| {
            let pts: Vec<usize> =
                (0..n_points).filter(|&p| assigned[p] == Some(s)).collect();
            if pts.is_empty() {
                None
            } else {
                Some((format!("stratum {}", lat.label(strata[s].0)), pts))
            }
        })
        .collect()
}

fn strata_table(lat: &SubgroupLattice, strata: &[(usize, &[usize], &TopologyVerdict)]) -> String {
    let rows: Vec<Vec<String>> = strata
        .iter()
        .map(|(h, points, verdict)| {
            let [closed, open, cw, ow] = verdict_cells(verdict);
            vec![lat.label(*h), points_set(points), closed, open, cw, ow]
        })
        .collect();
    table(
        &["H", "points", "closed", "open", "closed-witness", "open-witness"],
        &rows,
    )
}

fn verdict_json(v: &TopologyVerdict) -> Value {
    json!({
        "closed": crate::render::verdict_str(v.closed),
        "open": crate::render::verdict_str(v.open),
        "closed_witness": v.closed_witness,
        "open_witness": v.open_witness,
    })
}

fn stratify_burnside_cmd(args: &StratifyArgs, group: &str) -> CmdResult {
    let lat = load_lattice(group)?;
    let funct = BurnsideFunctor::new(lat.clone());
    let strat = stratify_burnside(&funct, &args.primes)?;
    let spec = &strat.spectrum;
    let out = match args.format {
        Format::Text => {
            let mut out = format!(
                "Burnside spectrum of {} over primes {:?}: {} points (dedekind group: {})\n",
                lat.group().name(),
                spec.prime_set,
                spec.len(),
                yesno(strat.dedekind),
            );
            let rows: Vec<Vec<String>> = spec
                .points
                .iter()
                .enumerate()
                .map(|(i, pt)| vec![i.to_string(), point_label(&lat, &pt.labels)])
                .collect();
            out.push_str(&table(&["index", "labels"], &rows));
            out.push_str("\nspecialization order (covering relations)\n");
            out.push_str(&order_lines(&spec.leq));
            out.push_str("\nstrata (by subgroup conjugacy class)\n");
            let strata: Vec<(usize, &[usize], &TopologyVerdict)> = strat
                .strata
                .iter()
                .map(|s| (s.h_rep, s.points.as_slice(), &s.verdict))
                .collect();
            out.push_str(&strata_table(&lat, &strata));
            out
        }
        Format::Json => {
            let strata: Vec<Value> = strat
                .strata
                .iter()
                .map(|s| {
                    json!({
                        "subgroup": lat.label(s.h_rep),
                        "points": s.points,
                        "classified": s.classified,
                        "by_generic": s.by_generic,
                        "closed_point": s.closed_point,
                        "verdict": verdict_json(&s.verdict),
                    })
                })
                .collect();
            pretty(&json!({
                "group": lat.group().name(),
                "primes": spec.prime_set,
                "dedekind": strat.dedekind,
                "points": burnside_points_json(&lat, spec),
                "order": spec.leq,
                "strata": strata,
            }))
        }
        Format::Dot => {
            let labels: Vec<String> =
                spec.points.iter().map(|pt| point_label(&lat, &pt.labels)).collect();
            let strata: Vec<(usize, &[usize])> =
                strat.strata.iter().map(|s| (s.h_rep, s.points.as_slice())).collect();
            let clusters = minimal_clusters(&lat, &strata, spec.len());
            poset_dot(
                &format!(
                    "Burnside spectrum of {} over {:?}",
                    lat.group().name(),
                    spec.prime_set
                ),
                &labels,
                &spec.leq,
                &clusters,
            )
        }
    };
    Ok((out, OK))
}

fn stratify_functor_cmd(args: &StratifyArgs, path: &str) -> CmdResult {
    let r = load_functor(path)?;
    let strat = stratify(&r, args.bound)?;
    let lat = r.lat().clone();
    let spec = &strat.spectrum;
    let out = match args.format {
        Format::Text => {
            let mut out = spectrum_text(&r, spec, &format!("spectrum of {path}"));
            out.push_str("\nstrata (by subgroup conjugacy class)\n");
            let strata: Vec<(usize, &[usize], &TopologyVerdict)> = strat
                .strata
                .iter()
                .map(|s| (s.h_rep, s.points.as_slice(), &s.verdict))
                .collect();
            out.push_str(&strata_table(&lat, &strata));
            out
        }
        Format::Json => {
            let strata: Vec<Value> = strat
                .strata
                .iter()
                .map(|s| {
                    json!({
                        "subgroup": lat.label(s.h_rep),
                        "points": s.points,
                        "verdict": verdict_json(&s.verdict),
                    })
                })
                .collect();
            pretty(&json!({
                "points": spec.points.iter().map(|p| ideal_json(&r, p)).collect::<Vec<_>>(),
                "order": spec.leq,
                "strata": strata,
            }))
        }
        Format::Dot => {
            let labels: Vec<String> = spec.points.iter().map(|p| p.describe(&r)).collect();
            let strata: Vec<(usize, &[usize])> =
                strat.strata.iter().map(|s| (s.h_rep, s.points.as_slice())).collect();
            let clusters = minimal_clusters(&lat, &strata, spec.len());
            poset_dot(&format!("spectrum of {path}"), &labels, &spec.leq, &clusters)
        }
    };
    Ok((out, OK))
}

pub fn stratify_cmd(args: &StratifyArgs) -> CmdResult {
    match (args.burnside, &args.group, &args.functor) {
        (true, Some(group), None) => stratify_burnside_cmd(args, group),
        (false, None, Some(path)) => stratify_functor_cmd(args, path),
        (true, None, _) => Err(usage("--burnside requires --group")),
        (true, _, Some(_)) => Err(usage("--burnside takes --group, not --functor")),
        (false, Some(_), _) => {
            Err(usage("--group only applies with --burnside; use --functor for functor files"))
        }
        (false, None, None) => {
            Err(usage("choose --burnside --group NAME or --functor FILE"))
        }
    }
}

// ---------------------------------------------------------------- ghost ----

pub fn ghost_cmd(args: &GhostArgs) -> CmdResult {
    let r = load_functor(&args.functor)?;
    if !args.stratify {
        let g = ghost(&r)?;
        let source = format!("ghost of {}", args.functor);
        return match args.format {
            Format::Text => Ok((describe_functor(&g.functor, &source), OK)),
            Format::Json => Ok((render_functor(&g.functor), OK)),
            Format::Dot => Err(usage("dot output applies to posets; add --stratify")),
        };
    }
    let gs = stratum_ghost(&r, args.bound)?;
    let lat = gs.ghost.functor.lat().clone();
    let out = match args.format {
        Format::Text => {
            let mut out = spectrum_text(
                &gs.ghost.functor,
                &gs.spectrum,
                &format!("ghost of {}", args.functor),
            );
            out.push_str(&format!(
                "\nbottom stratum (trivial subgroup): {}\n",
                points_set(&gs.points)
            ));
            out.push_str(&format!(
                "classified as q x (full transfer quotient): {}\n",
                points_set(&gs.classified)
            ));
            out.push_str(&format!(
                "points containing the whole quotient factor: {}\n",
                points_set(&gs.with_full_quotient)
            ));
            out.push_str(&format!(
                "transfer surjective (quotient factor vanishes): {}\n",
                yesno(gs.transfer_surjective)
            ));
            let [closed, open, cw, ow] = verdict_cells(&gs.verdict);
            out.push_str(&format!(
                "closed: {closed}  open: {open}  closed-witness: {cw}  open-witness: {ow}\n"
            ));
            out
        }
        Format::Json => pretty(&json!({
            "spectrum": spectrum_json(&gs.ghost.functor, &gs.spectrum),
            "stratum": gs.points,
            "classified": gs.classified,
            "with_full_quotient": gs.with_full_quotient,
            "transfer_surjective": gs.transfer_surjective,
            "verdict": verdict_json(&gs.verdict),
        })),
        Format::Dot => {
            let labels: Vec<String> =
                gs.spectrum.points.iter().map(|p| p.describe(&gs.ghost.functor)).collect();
            let clusters = vec![(
                format!("stratum {}", lat.label(lat.trivial())),
                gs.points.clone(),
            )];
            poset_dot(
                &format!("ghost spectrum of {}", args.functor),
                &labels,
                &gs.spectrum.leq,
                &clusters,
            )
        }
    };
    Ok((out, OK))
}

// --------------------------------------------------------------- verify ----

/// One deterministic line per criterion (no timings, so output is
/// byte-identical across runs while everything passes).
fn report_lines(reports: &[CriterionReport]) -> String {
    let width = reports.iter().map(|r| r.title.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "{}  {:>2}  {:<width$}  (budget {} s)  {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.number,
            r.title,
            r.budget.as_secs(),
            r.detail,
        ));
    }
    out
}

pub fn verify_cmd(args: &VerifyArgs) -> CmdResult {
    if args.suite != "paper" {
        return Err(usage(format!(
            "unknown suite '{}'; the only built-in suite is 'paper'",
            args.suite
        )));
    }
    let reports = run_all();
    let passed = all_passed(&reports);
    let code = if passed { OK } else { 1 };
    let out = match args.format {
        Format::Text => {
            let mut out = format!("acceptance suite '{}': {} criteria\n", args.suite, reports.len());
            out.push_str(&report_lines(&reports));
            out.push_str(&if passed {
                format!("all {} criteria passed\n", reports.len())
            } else {
                let failed = reports.iter().filter(|r| !r.passed).count();
                format!("{failed} of {} criteria failed\n", reports.len())
            });
            out
        }
        Format::Json => pretty(&json!({
            "suite": args.suite,
            "criteria": reports
                .iter()
                .map(|r| json!({
                    "number": r.number,
                    "title": r.title,
                    "passed": r.passed,
                    "detail": r.detail,
                    "budget_seconds": r.budget.as_secs(),
                }))
                .collect::<Vec<_>>(),
            "passed": passed,
        })),
        Format::Dot => return Err(usage("dot output applies to posets; use text or json here")),
    };
    Ok((out, code))
}

fn yesno(b: bool) -> String {
    if b { "yes".to_string() } else { "no".to_string() }
}
