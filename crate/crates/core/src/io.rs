//! Deterministic JSON input/output for groups, rings, G-rings, and Tambara
//! functors.
//!
//! Every file kind accepts either explicit tables or a constructor
//! shorthand.  Rendering always emits the explicit table form with fields in
//! a fixed order and all sequences in index order, so output is
//! byte-identical across runs and `parse(render(x)) == x`.

use crate::grings::{GRing, GRingError};
use crate::groups::{
    cyclic, dihedral, product, quaternion, symmetric, FiniteGroup, GroupError, Subgroup,
    SubgroupLattice,
};
use crate::rings::{fq, zn, FiniteRing, ProductRing, RingError};
use crate::tambara::{Strictness, TambaraError, TambaraFunctor, TambaraParts};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    GRing(#[from] GRingError),
    #[error(transparent)]
    Tambara(#[from] TambaraError),
    #[error("unknown constructor {name:?} (expected one of {expected})")]
    UnknownConstructor { name: String, expected: &'static str },
    #[error("constructor {name:?} expects {expected}, got {got}")]
    BadParams { name: String, expected: &'static str, got: usize },
    #[error("unknown group shorthand {name:?}")]
    UnknownGroupName { name: String },
    #[error("subgroup {members:?} is not a subgroup of the given group")]
    UnknownSubgroup { members: Vec<usize> },
    #[error("inconsistent input: {what}")]
    Inconsistent { what: String },
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("in-memory serialization");
    text.push('\n');
    text
}

/// A group file: an explicit Cayley table, or a constructor with parameters
/// (`cyclic [n]`, `product [n₁, n₂, …]` of cyclic factors, `dihedral [n]`,
/// `quaternion [n]` for `Q_{4n}`, `symmetric [n]`).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table { name: String, order: usize, cayley: Vec<Vec<usize>> },
    Construct { construct: String, params: Vec<usize> },
}

pub fn group_from_spec(spec: &GroupSpec) -> Result<FiniteGroup, IoError> {
    match spec {
        GroupSpec::Table { name, order, cayley } => {
            if cayley.len() != *order {
                return Err(IoError::Inconsistent {
                    what: format!("order is {} but the table has {} rows", order, cayley.len()),
                });
            }
            Ok(FiniteGroup::from_table(name, cayley)?)
        }
        GroupSpec::Construct { construct, params } => {
            let one_param = |name: &str| {
                params.first().copied().filter(|_| params.len() == 1).ok_or_else(|| {
                    IoError::BadParams {
                        name: name.into(),
                        expected: "exactly one parameter",
                        got: params.len(),
                    }
                })
            };
            match construct.as_str() {
                "cyclic" => Ok(cyclic(one_param("cyclic")?)?),
                "dihedral" => Ok(dihedral(one_param("dihedral")?)?),
                "quaternion" => Ok(quaternion(one_param("quaternion")?)?),
                "symmetric" => Ok(symmetric(one_param("symmetric")?)?),
                "product" => {
                    if params.is_empty() {
                        return Err(IoError::BadParams {
                            name: "product".into(),
                            expected: "at least one cyclic order",
                            got: 0,
                        });
                    }
                    let factors = params
                        .iter()
                        .map(|&n| cyclic(n))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(product(&factors)?)
                }
                other => Err(IoError::UnknownConstructor {
                    name: other.into(),
                    expected: "cyclic, product, dihedral, quaternion, symmetric",
                }),
            }
        }
    }
}

pub fn group_to_spec(g: &FiniteGroup) -> GroupSpec {
    GroupSpec::Table {
        name: g.name().to_string(),
        order: g.order(),
        cayley: g.table_rows(),
    }
}

pub fn parse_group(text: &str) -> Result<FiniteGroup, IoError> {
    group_from_spec(&serde_json::from_str(text)?)
}

pub fn render_group(g: &FiniteGroup) -> String {
    to_pretty(&group_to_spec(g))
}

/// Groups by conventional shorthand: `Cn`, `V4`, `Dn` (dihedral of order
/// `2n`), `Qn` (quaternion of order `n`, a multiple of 4 at least 8), and
/// `Sn` (`n ≤ 4`).
pub fn named_group(name: &str) -> Result<FiniteGroup, IoError> {
    let unknown = || IoError::UnknownGroupName { name: name.into() };
    if name == "V4" {
        return Ok(product(&[cyclic(2)?, cyclic(2)?])?);
    }
    let mut chars = name.chars();
    let head = chars.next().ok_or_else(unknown)?;
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    match head {
        'C' => Ok(cyclic(n)?),
        'D' => Ok(dihedral(n)?),
        'S' => Ok(symmetric(n)?),
        'Q' if n >= 8 && n.is_multiple_of(4) => Ok(quaternion(n / 4)?),
        _ => Err(unknown()),
    }
}

/// A ring file: explicit addition/multiplication tables (with optional
/// element labels), or a constructor (`Zn [n]`, `Fq [q]`, or `product` of
/// nested ring specs).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingSpec {
    Table {
        order: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Construct {
        construct: String,
        #[serde(default)]
        params: Vec<usize>,
        #[serde(default)]
        factors: Vec<RingSpec>,
    },
}

pub fn ring_from_spec(spec: &RingSpec) -> Result<FiniteRing, IoError> {
    match spec {
        RingSpec::Table { order, add, mul, labels } => {
            if add.len() != *order || mul.len() != *order {
                return Err(IoError::Inconsistent {
                    what: format!("order is {order} but a table has a different row count"),
                });
            }
            let ring = FiniteRing::from_tables(add, mul)?;
            Ok(match labels {
                Some(l) if l.len() == *order => ring.with_labels(l.clone()),
                Some(l) => {
                    return Err(IoError::Inconsistent {
                        what: format!("{} labels for {} elements", l.len(), order),
                    })
                }
                None => ring,
            })
        }
        RingSpec::Construct { construct, params, factors } => {
            let one_param = |name: &str| {
                params.first().copied().filter(|_| params.len() == 1).ok_or_else(|| {
                    IoError::BadParams {
                        name: name.into(),
                        expected: "exactly one parameter",
                        got: params.len(),
                    }
                })
            };
            match construct.as_str() {
                "Zn" => Ok(zn(one_param("Zn")?)?),
                "Fq" => Ok(fq(one_param("Fq")?)?),
                "product" => {
                    if factors.is_empty() {
                        return Err(IoError::BadParams {
                            name: "product".into(),
                            expected: "at least one factor spec",
                            got: 0,
                        });
                    }
                    let rings = factors
                        .iter()
                        .map(ring_from_spec)
                        .collect::<Result<Vec<_>, _>>()?;
                    let refs: Vec<&FiniteRing> = rings.iter().collect();
                    Ok(ProductRing::new(&refs)?.ring)
                }
                other => Err(IoError::UnknownConstructor {
                    name: other.into(),
                    expected: "Zn, Fq, product",
                }),
            }
        }
    }
}

pub fn ring_to_spec(ring: &FiniteRing) -> RingSpec {
    RingSpec::Table {
        order: ring.order(),
        add: ring.add_rows(),
        mul: ring.mul_rows(),
        labels: ring.labels().map(<[String]>::to_vec),
    }
}

pub fn parse_ring(text: &str) -> Result<FiniteRing, IoError> {
    ring_from_spec(&serde_json::from_str(text)?)
}

pub fn render_ring(ring: &FiniteRing) -> String {
    to_pretty(&ring_to_spec(ring))
}

/// A G-ring file: a group, a ring, and the action as one permutation of the
/// ring's elements per group element (`action[g][x] = g·x`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GRingSpec {
    pub group: GroupSpec,
    pub ring: RingSpec,
    pub action: Vec<Vec<usize>>,
}

pub fn gring_from_spec(spec: &GRingSpec) -> Result<GRing, IoError> {
    let group = Arc::new(group_from_spec(&spec.group)?);
    let ring = ring_from_spec(&spec.ring)?;
    Ok(GRing::new(group, ring, spec.action.clone())?)
}

pub fn gring_to_spec(s: &GRing) -> GRingSpec {
    GRingSpec {
        group: group_to_spec(s.group()),
        ring: ring_to_spec(&s.ring),
        action: s.action_rows().to_vec(),
    }
}

pub fn parse_gring(text: &str) -> Result<GRing, IoError> {
    gring_from_spec(&serde_json::from_str(text)?)
}

pub fn render_gring(s: &GRing) -> String {
    to_pretty(&gring_to_spec(s))
}

/// One level of a functor file: a subgroup (as its sorted member list) and
/// its ring.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LevelSpec {
    pub subgroup: Vec<usize>,
    pub ring: RingSpec,
}

/// One structure map between nested levels.  For `res` the map is indexed by
/// elements of `sup` with values in `sub`; for `tr` and `nm` the direction
/// is reversed.  Identity pairs (`sub == sup`) are included.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapSpec {
    pub sub: Vec<usize>,
    pub sup: Vec<usize>,
    pub map: Vec<usize>,
}

/// One conjugation map `R(level) → R(g·level·g⁻¹)`, indexed by elements of
/// `level`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjSpec {
    pub g: usize,
    pub level: Vec<usize>,
    pub map: Vec<usize>,
}

/// A Tambara functor file: the group, the level rings of the supported
/// subgroups, and all structure maps.  The support is the largest subgroup
/// carrying a level; every map for every nested pair inside the support must
/// be present (the validator rejects anything missing or malformed).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctorSpec {
    pub group: GroupSpec,
    pub levels: Vec<LevelSpec>,
    pub res: Vec<MapSpec>,
    pub tr: Vec<MapSpec>,
    pub nm: Vec<MapSpec>,
    pub conj: Vec<ConjSpec>,
}

fn locate_subgroup(lat: &SubgroupLattice, members: &[usize]) -> Result<usize, IoError> {
    lat.index_of(Subgroup::from_members(members.iter().copied()))
        .ok_or_else(|| IoError::UnknownSubgroup { members: members.to_vec() })
}

pub fn functor_from_spec(
    spec: &FunctorSpec,
    strictness: Strictness,
) -> Result<TambaraFunctor, IoError> {
    let group = Arc::new(group_from_spec(&spec.group)?);
    let lat = Arc::new(SubgroupLattice::new(group)?);
    let mut levels: Vec<Option<FiniteRing>> = vec![None; lat.len()];
    for level in &spec.levels {
        let k = locate_subgroup(&lat, &level.subgroup)?;
        if levels[k].is_some() {
            return Err(IoError::Inconsistent {
                what: format!("two level rings for subgroup {:?}", level.subgroup),
            });
        }
        levels[k] = Some(ring_from_spec(&level.ring)?);
    }
    let supported: Vec<usize> =
        (0..lat.len()).filter(|&k| levels[k].is_some()).collect();
    let &top = supported
        .iter()
        .find(|&&t| supported.iter().all(|&k| lat.is_sub(k, t)))
        .ok_or_else(|| IoError::Inconsistent {
            what: "no level subgroup contains all the others".into(),
        })?;
    let gather = |entries: &[MapSpec],
                  kind: &'static str|
     -> Result<HashMap<(usize, usize), Vec<usize>>, IoError> {
        let mut out = HashMap::new();
        for entry in entries {
            let k = locate_subgroup(&lat, &entry.sub)?;
            let h = locate_subgroup(&lat, &entry.sup)?;
            if out.insert((k, h), entry.map.clone()).is_some() {
                return Err(IoError::Inconsistent {
                    what: format!("duplicate {kind} map for pair ({:?}, {:?})", entry.sub, entry.sup),
                });
            }
        }
        Ok(out)
    };
    let res = gather(&spec.res, "res")?;
    let tr = gather(&spec.tr, "tr")?;
    let nm = gather(&spec.nm, "nm")?;
    let mut conj = HashMap::new();
    for entry in &spec.conj {
        let h = locate_subgroup(&lat, &entry.level)?;
        if conj.insert((entry.g, h), entry.map.clone()).is_some() {
            return Err(IoError::Inconsistent {
                what: format!("duplicate conj map for ({}, {:?})", entry.g, entry.level),
            });
        }
    }
    Ok(TambaraFunctor::assemble(
        TambaraParts { lat, top, levels, res, tr, nm, conj },
        strictness,
    )?)
}

pub fn functor_to_spec(r: &TambaraFunctor) -> FunctorSpec {
    let lat = r.lat();
    let members = |k: usize| -> Vec<usize> { lat.subgroup(k).members().collect() };
    let subs = r.subs();
    let levels = subs
        .iter()
        .map(|&k| LevelSpec { subgroup: members(k), ring: ring_to_spec(r.level(k)) })
        .collect();
    let pairs: Vec<(usize, usize)> = subs
        .iter()
        .flat_map(|&h| subs.iter().filter(move |&&k| lat.is_sub(k, h)).map(move |&k| (k, h)))
        .collect();
    let map_specs = |maps: &dyn Fn(usize, usize) -> Vec<usize>| -> Vec<MapSpec> {
        pairs
            .iter()
            .map(|&(k, h)| MapSpec { sub: members(k), sup: members(h), map: maps(k, h) })
            .collect()
    };
    let res = map_specs(&|k, h| r.res_map(k, h).to_vec());
    let tr = map_specs(&|k, h| r.tr_map(k, h).to_vec());
    let nm = map_specs(&|k, h| r.nm_map(k, h).to_vec());
    let conj = r
        .top_members()
        .into_iter()
        .flat_map(|g| {
            subs.iter()
                .map(move |&h| (g, h))
                .collect::<Vec<_>>()
        })
        .map(|(g, h)| ConjSpec { g, level: members(h), map: r.conj_map(g, h).to_vec() })
        .collect();
    FunctorSpec {
        group: group_to_spec(lat.group()),
        levels,
        res,
        tr,
        nm,
        conj,
    }
}

pub fn parse_functor(text: &str, strictness: Strictness) -> Result<TambaraFunctor, IoError> {
    functor_from_spec(&serde_json::from_str(text)?, strictness)
}

pub fn render_functor(r: &TambaraFunctor) -> String {
    to_pretty(&functor_to_spec(r))
}
