//! Morphisms of Tambara functors: levelwise unital ring homomorphisms
//! commuting with restriction, transfer, norm, and conjugation.

use crate::rings::ElemSet;
use crate::tambara::{TambaraError, TambaraFunctor};

/// A levelwise map between two functors over the same lattice with the same
/// support. `maps[k][x]` is the image of level-`k` element `x`; levels
/// outside the support hold empty vectors.
#[derive(Debug, Clone)]
pub struct TambaraMorphism {
    pub maps: Vec<Vec<usize>>,
}

impl TambaraMorphism {
    pub fn identity(r: &TambaraFunctor) -> TambaraMorphism {
        let maps = (0..r.lat().len())
            .map(|k| {
                if r.lat().is_sub(k, r.top()) {
                    (0..r.level(k).order()).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        TambaraMorphism { maps }
    }

    pub fn apply(&self, k: usize, x: usize) -> usize {
        self.maps[k][x]
    }

    /// Check that the maps form a morphism from `s` to `t`.
    pub fn validate(&self, s: &TambaraFunctor, t: &TambaraFunctor) -> Result<(), TambaraError> {
        let fail = |axiom: &'static str, location: String| {
            Err(TambaraError::AxiomViolation { axiom, location })
        };
        if !std::sync::Arc::ptr_eq(s.lat(), t.lat()) || s.top() != t.top() {
            return fail("morphism-support", "source and target differ".into());
        }
        if self.maps.len() != s.lat().len() {
            return Err(TambaraError::MapShape { kind: "morphism", from: 0, to: 0 });
        }
        let subs = s.subs();
        for &k in &subs {
            let (sk, tk) = (s.level(k), t.level(k));
            let map = &self.maps[k];
            if map.len() != sk.order() || map.iter().any(|&v| v >= tk.order()) {
                return Err(TambaraError::MapShape { kind: "morphism", from: k, to: k });
            }
            if map[sk.one()] != tk.one() {
                return fail("morphism-one", format!("level {k}"));
            }
            for x in sk.elements() {
                for y in sk.elements() {
                    if map[sk.add(x, y)] != tk.add(map[x], map[y]) {
                        return fail("morphism-add", format!("level {k} x={x} y={y}"));
                    }
                    if map[sk.mul(x, y)] != tk.mul(map[x], map[y]) {
                        return fail("morphism-mul", format!("level {k} x={x} y={y}"));
                    }
                }
            }
        }
        for (k, h) in s.proper_pairs() {
            for x in s.level(h).elements() {
                if self.maps[k][s.res(k, h, x)] != t.res(k, h, self.maps[h][x]) {
                    return fail("morphism-res", format!("k={k} h={h} x={x}"));
                }
            }
            for x in s.level(k).elements() {
                if self.maps[h][s.tr(k, h, x)] != t.tr(k, h, self.maps[k][x]) {
                    return fail("morphism-tr", format!("k={k} h={h} x={x}"));
                }
                if self.maps[h][s.nm(k, h, x)] != t.nm(k, h, self.maps[k][x]) {
                    return fail("morphism-nm", format!("k={k} h={h} x={x}"));
                }
            }
        }
        for &h in &subs {
            for g in s.top_members() {
                let target = s.lat().conjugate(g, h);
                for x in s.level(h).elements() {
                    if self.maps[target][s.conj(g, h, x)] != t.conj(g, h, self.maps[h][x]) {
                        return fail("morphism-conj", format!("g={g} level {h} x={x}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether every level map is a bijection onto the corresponding target
    /// level.
    pub fn is_bijective(&self, s: &TambaraFunctor, t: &TambaraFunctor) -> bool {
        s.subs().into_iter().all(|k| {
            let map = &self.maps[k];
            let n = t.level(k).order();
            if map.len() != n {
                return false;
            }
            let mut seen = vec![false; n];
            for &v in map {
                if v >= n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            true
        })
    }

    /// Levelwise preimages of zero.
    pub fn kernel_sets(&self, s: &TambaraFunctor, t: &TambaraFunctor) -> Vec<ElemSet> {
        (0..s.lat().len())
            .map(|k| {
                if !s.lat().is_sub(k, s.top()) {
                    return ElemSet::with_capacity(0);
                }
                let mut set = ElemSet::with_capacity(s.level(k).order());
                for (x, &v) in self.maps[k].iter().enumerate() {
                    if v == t.level(k).zero() {
                        set.insert(x);
                    }
                }
                set
            })
            .collect()
    }
}
