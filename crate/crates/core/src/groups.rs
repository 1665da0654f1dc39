//! Finite groups with explicit Cayley tables, their subgroup lattices,
//! conjugacy machinery, and double-coset decompositions.
//!
//! Elements are indices `0..order`; subgroups are 64-bit member bitsets, so
//! the subgroup lattice is available for groups of order at most 64.

use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

/// Hard bound on the group order for subgroup-lattice computations: member
/// sets are stored in a `u64` bitset.
pub const MAX_LATTICE_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cayley table is not square or has out-of-range entries at row {row}")]
    MalformedTable { row: usize },
    #[error("cayley table is not a latin square: duplicate in {axis} {index}")]
    NotLatinSquare { axis: &'static str, index: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group order {order} exceeds the subgroup-lattice bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("unknown construction `{name}`")]
    UnknownConstruction { name: String },
    #[error("invalid parameters for construction `{name}`: {reason}")]
    BadConstruction { name: String, reason: String },
    #[error("subset is not a subgroup: not closed at ({a}, {b})")]
    NotASubgroup { a: usize, b: usize },
}

/// A finite group given by a validated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    cayley: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a multiplication table and build the group.
    ///
    /// Checks, in order: table shape, the latin-square property, existence of
    /// a two-sided identity, inverses, and associativity; the first violation
    /// is reported with its witnessing tuple.
    pub fn from_table(name: &str, table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::NoIdentity);
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order || row.iter().any(|&x| x >= order) {
                return Err(GroupError::MalformedTable { row: i });
            }
        }
        for (i, row) in table.iter().enumerate() {
            let mut seen = vec![false; order];
            for &x in row {
                if seen[x] {
                    return Err(GroupError::NotLatinSquare { axis: "row", index: i });
                }
                seen[x] = true;
            }
        }
        for j in 0..order {
            let mut seen = vec![false; order];
            for row in table {
                if seen[row[j]] {
                    return Err(GroupError::NotLatinSquare { axis: "column", index: j });
                }
                seen[row[j]] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or(GroupError::NoInverse { element: a })?;
            inverse[a] = inv;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let cayley = table.iter().flatten().copied().collect();
        Ok(FiniteGroup { name: name.to_string(), order, cayley, identity, inverse })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Conjugate `g a g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Rows of the Cayley table (for serialization).
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Cyclic group `C_n` with elements `0..n` under addition mod n.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::BadConstruction {
            name: "cyclic".into(),
            reason: "order must be positive".into(),
        });
    }
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_table(&format!("C{n}"), &table)
}

/// Direct product; elements are mixed-radix encodings with the first factor
/// varying slowest.
pub fn product(factors: &[FiniteGroup]) -> Result<FiniteGroup, GroupError> {
    if factors.is_empty() {
        return Err(GroupError::BadConstruction {
            name: "product".into(),
            reason: "at least one factor required".into(),
        });
    }
    let orders: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let total: usize = orders.iter().product();
    let decode = |mut x: usize| -> Vec<usize> {
        let mut coords = vec![0; orders.len()];
        for i in (0..orders.len()).rev() {
            coords[i] = x % orders[i];
            x /= orders[i];
        }
        coords
    };
    let encode = |coords: &[usize]| -> usize {
        coords.iter().zip(&orders).fold(0, |acc, (&c, &n)| acc * n + c)
    };
    let table: Vec<Vec<usize>> = (0..total)
        .map(|a| {
            let ca = decode(a);
            (0..total)
                .map(|b| {
                    let cb = decode(b);
                    let prod: Vec<usize> = ca
                        .iter()
                        .zip(&cb)
                        .zip(factors)
                        .map(|((&x, &y), g)| g.mul(x, y))
                        .collect();
                    encode(&prod)
                })
                .collect()
        })
        .collect();
    let name = factors.iter().map(|g| g.name()).collect::<Vec<_>>().join("x");
    FiniteGroup::from_table(&name, &table)
}

/// Dihedral group of order `2n`: elements `0..n` are rotations `r^i`,
/// elements `n..2n` are reflections `s·r^i`, with `s r s = r⁻¹`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::BadConstruction {
            name: "dihedral".into(),
            reason: "rotation order must be positive".into(),
        });
    }
    let order = 2 * n;
    let mut table = vec![vec![0usize; order]; order];
    for i in 0..order {
        for j in 0..order {
            let (ri, si) = (i % n, i / n);
            let (rj, sj) = (j % n, j / n);
            // (s^si r^ri)(s^sj r^rj) = s^(si+sj) r^(±ri + rj)
            let r = if sj == 0 { (ri + rj) % n } else { (n - ri + rj) % n };
            let s = (si + sj) % 2;
            table[i][j] = s * n + r;
        }
    }
    FiniteGroup::from_table(&format!("D{n}"), &table)
}

/// Generalized quaternion group `Q_{4n}` (dicyclic), default `n = 2` is `Q8`.
///
/// Presentation `⟨a, b | a^{2n} = e, b² = aⁿ, b a b⁻¹ = a⁻¹⟩`; elements
/// `0..2n` are `a^i`, elements `2n..4n` are `b·a^i`.
pub fn quaternion(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 2 {
        return Err(GroupError::BadConstruction {
            name: "quaternion".into(),
            reason: "need n ≥ 2 (order 4n ≥ 8)".into(),
        });
    }
    let m = 2 * n;
    let order = 2 * m;
    let mut table = vec![vec![0usize; order]; order];
    for i in 0..order {
        for j in 0..order {
            let (ai, bi) = (i % m, i / m);
            let (aj, bj) = (j % m, j / m);
            // (b^bi a^ai)(b^bj a^aj): move a^ai across b^bj, then fold b².
            let ai_moved = if bj == 0 { ai } else { (m - ai) % m };
            let mut a = (ai_moved + aj) % m;
            let btotal = bi + bj;
            if btotal == 2 {
                a = (a + n) % m; // b² = aⁿ
            }
            table[i][j] = (btotal % 2) * m + a;
        }
    }
    let name = if n == 2 { "Q8".to_string() } else { format!("Q{}", 4 * n) };
    FiniteGroup::from_table(&name, &table)
}

/// Symmetric group `S_n` for `n ≤ 4`, elements in lexicographic one-line
/// order; composition `(p·q)(x) = p(q(x))`.
pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > 4 {
        return Err(GroupError::BadConstruction {
            name: "symmetric".into(),
            reason: "supported degrees are 1..=4".into(),
        });
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        perms.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                    index[&composed]
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(&format!("S{n}"), &table)
}

/// A subgroup of a group of order ≤ 64, stored as a member bitset.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup(u64);

impl Subgroup {
    pub fn from_bits(bits: u64) -> Subgroup {
        Subgroup(bits)
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Subgroup {
        let mut bits = 0u64;
        for m in members {
            assert!(m < 64);
            bits |= 1 << m;
        }
        Subgroup(bits)
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn order(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.0 & !other.0 == 0
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Closure of a subset under multiplication and inverse.
pub fn closure_of(group: &FiniteGroup, seed: Subgroup) -> Subgroup {
    let mut members: Vec<usize> = vec![group.identity()];
    let mut bits = 1u64 << group.identity();
    let mut queue: Vec<usize> = seed.members().collect();
    while let Some(x) = queue.pop() {
        if bits >> x & 1 == 1 {
            continue;
        }
        bits |= 1 << x;
        members.push(x);
        queue.push(group.inv(x));
        for i in 0..members.len() {
            queue.push(group.mul(members[i], x));
            queue.push(group.mul(x, members[i]));
        }
    }
    Subgroup(bits)
}

/// Whether a bitset is closed under the group operations.
pub fn is_subgroup(group: &FiniteGroup, set: Subgroup) -> Result<(), GroupError> {
    if !set.contains(group.identity()) {
        return Err(GroupError::NoIdentity);
    }
    for a in set.members() {
        for b in set.members() {
            if !set.contains(group.mul(a, b)) {
                return Err(GroupError::NotASubgroup { a, b });
            }
        }
    }
    Ok(())
}

/// Conjugate subgroup `g H g⁻¹`.
pub fn conjugate_subgroup(group: &FiniteGroup, h: Subgroup, g: usize) -> Subgroup {
    Subgroup::from_members(h.members().map(|x| group.conj(g, x)))
}

/// Double-coset decomposition `L\A/K` of an ambient subgroup `A`.
///
/// Representatives start with the identity's coset and are otherwise the
/// numerically least elements, so decompositions are deterministic.
#[derive(Debug, Clone)]
pub struct DoubleCosets {
    pub left: usize,
    pub right: usize,
    pub ambient: usize,
    /// One representative per double coset; `reps[0]` represents the coset of
    /// the identity when the ambient subgroup contains it (always, since the
    /// ambient is a subgroup).
    pub reps: Vec<usize>,
    /// `coset_index[g]` for `g` in the ambient subgroup; `usize::MAX` outside.
    pub coset_index: Vec<usize>,
}

/// The subgroup lattice of a finite group of order ≤ bound (≤ 64).
#[derive(Debug)]
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    index: HashMap<u64, usize>,
    /// `class_of[i]` = conjugacy-class number of subgroup `i`.
    class_of: Vec<usize>,
    /// Classes in order of their least member; each class lists subgroup
    /// indices sorted ascending; `reps[c]` is the numerically least bitset.
    classes: Vec<Vec<usize>>,
    reps: Vec<usize>,
    /// `conj_table[g][i]` = index of `g · subgroups[i] · g⁻¹`.
    conj_table: Vec<Vec<usize>>,
    normal: Vec<bool>,
}

impl SubgroupLattice {
    /// Enumerate all subgroups by closing under single-element extensions.
    pub fn new(group: Arc<FiniteGroup>) -> Result<SubgroupLattice, GroupError> {
        Self::with_bound(group, MAX_LATTICE_ORDER)
    }

    pub fn with_bound(group: Arc<FiniteGroup>, bound: usize) -> Result<SubgroupLattice, GroupError> {
        let bound = bound.min(MAX_LATTICE_ORDER);
        if group.order() > bound {
            return Err(GroupError::OrderBoundExceeded { order: group.order(), bound });
        }
        let trivial = Subgroup::from_members([group.identity()]);
        let mut found: Vec<Subgroup> = vec![trivial];
        let mut seen: HashMap<u64, ()> = HashMap::new();
        seen.insert(trivial.bits(), ());
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for x in group.elements() {
                if h.contains(x) {
                    continue;
                }
                let bigger = closure_of(group.as_ref(), Subgroup(h.bits() | (1 << x)));
                if seen.insert(bigger.bits(), ()).is_none() {
                    found.push(bigger);
                    frontier.push(bigger);
                }
            }
        }
        found.sort_by_key(|h| (h.order(), h.bits()));
        let index: HashMap<u64, usize> =
            found.iter().enumerate().map(|(i, h)| (h.bits(), i)).collect();
        let n = found.len();
        let conj_table: Vec<Vec<usize>> = group
            .elements()
            .map(|g| {
                found
                    .iter()
                    .map(|&h| index[&conjugate_subgroup(group.as_ref(), h, g).bits()])
                    .collect()
            })
            .collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members: Vec<usize> = group
                .elements()
                .map(|g| conj_table[g][i])
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            members.sort_unstable();
            for &j in &members {
                class_of[j] = c;
            }
            classes.push(members);
        }
        let reps: Vec<usize> = classes.iter().map(|cls| cls[0]).collect();
        let normal: Vec<bool> = (0..n)
            .map(|i| group.elements().all(|g| conj_table[g][i] == i))
            .collect();
        Ok(SubgroupLattice { group, subgroups: found, index, class_of, classes, reps, conj_table, normal })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn subgroup(&self, i: usize) -> Subgroup {
        self.subgroups[i]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn index_of(&self, h: Subgroup) -> Option<usize> {
        self.index.get(&h.bits()).copied()
    }

    /// Index of the trivial subgroup.
    pub fn trivial(&self) -> usize {
        self.index[&(1u64 << self.group.identity())]
    }

    /// Index of the whole group.
    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn is_sub(&self, i: usize, j: usize) -> bool {
        self.subgroups[i].is_subset(&self.subgroups[j])
    }

    pub fn conjugate(&self, g: usize, i: usize) -> usize {
        self.conj_table[g][i]
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Canonical representatives, one per conjugacy class.
    pub fn class_reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    /// Every subgroup normal (the stratification theorems need this).
    pub fn is_dedekind(&self) -> bool {
        self.normal.iter().all(|&b| b)
    }

    /// Whether `subgroups[i]` is subconjugate to `subgroups[j]`: some
    /// conjugate of `i` is contained in `j`.
    pub fn is_subconjugate(&self, i: usize, j: usize) -> bool {
        self.group
            .elements()
            .any(|g| self.is_sub(self.conj_table[g][i], j))
    }

    /// Some `g` with `g · subgroups[i] · g⁻¹ = subgroups[j]`, if conjugate.
    pub fn conjugating_element(&self, i: usize, j: usize) -> Option<usize> {
        self.group.elements().find(|&g| self.conj_table[g][i] == j)
    }

    /// Double cosets `L\A/K` for subgroups `L, K ≤ A` of the lattice.
    pub fn double_cosets(&self, left: usize, right: usize, ambient: usize) -> DoubleCosets {
        let l = self.subgroups[left];
        let k = self.subgroups[right];
        let a = self.subgroups[ambient];
        debug_assert!(l.is_subset(&a) && k.is_subset(&a));
        let g = self.group.as_ref();
        let mut coset_index = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        // The identity is a member of every subgroup, so scanning members in
        // ascending order starting from the identity makes rep 0 the identity
        // coset L·e·K = LK.
        let order: Vec<usize> = std::iter::once(g.identity())
            .chain(a.members().filter(|&x| x != g.identity()))
            .collect();
        for &rep in &order {
            if coset_index[rep] != usize::MAX {
                continue;
            }
            let c = reps.len();
            for x in l.members() {
                for y in k.members() {
                    coset_index[g.mul(g.mul(x, rep), y)] = c;
                }
            }
            reps.push(rep);
        }
        DoubleCosets { left, right, ambient, reps, coset_index }
    }

    /// Stabilizer `K ∩ g⁻¹ L g` of the double coset `LgK` inside the right
    /// subgroup `K`.
    pub fn stabilizer_in_right(&self, dc: &DoubleCosets, i: usize) -> usize {
        let g = self.group.as_ref();
        let rep_inv = g.inv(dc.reps[i]);
        let conj_left = self.conj_table[rep_inv][dc.left];
        let bits = self.subgroups[dc.right].bits() & self.subgroups[conj_left].bits();
        self.index[&bits]
    }

    /// Stabilizer `L ∩ g K g⁻¹` of the double coset `LgK` inside the left
    /// subgroup `L`.
    pub fn stabilizer_in_left(&self, dc: &DoubleCosets, i: usize) -> usize {
        let conj_right = self.conj_table[dc.reps[i]][dc.right];
        let bits = self.subgroups[dc.left].bits() & self.subgroups[conj_right].bits();
        self.index[&bits]
    }

    /// Left-coset representatives of `K` in `H` (`K ≤ H`), ascending, identity
    /// first.
    pub fn coset_reps(&self, sub: usize, ambient: usize) -> Vec<usize> {
        let g = self.group.as_ref();
        let k = self.subgroups[sub];
        let h = self.subgroups[ambient];
        debug_assert!(k.is_subset(&h));
        let mut seen = vec![false; g.order()];
        let mut reps = Vec::new();
        let order: Vec<usize> = std::iter::once(g.identity())
            .chain(h.members().filter(|&x| x != g.identity()))
            .collect();
        for &rep in &order {
            if seen[rep] {
                continue;
            }
            for x in k.members() {
                seen[g.mul(rep, x)] = true;
            }
            reps.push(rep);
        }
        reps
    }

    /// Normalizer of `subgroups[i]` inside the whole group.
    pub fn normalizer(&self, i: usize) -> usize {
        let bits = Subgroup::from_members(
            self.group.elements().filter(|&g| self.conj_table[g][i] == i),
        );
        self.index[&bits.bits()]
    }

    /// Weyl-group coset representatives: `N_A(H)/H` representatives for
    /// `H ≤ A`, used to act on functor levels.
    pub fn weyl_reps(&self, sub: usize, ambient: usize) -> Vec<usize> {
        let g = self.group.as_ref();
        let h = self.subgroups[sub];
        let a = self.subgroups[ambient];
        debug_assert!(h.is_subset(&a));
        let normalizer_members: Vec<usize> = a
            .members()
            .filter(|&x| conjugate_subgroup(g, h, x) == h)
            .collect();
        let mut seen = vec![false; g.order()];
        let mut reps = Vec::new();
        for &x in &normalizer_members {
            if seen[x] {
                continue;
            }
            for k in h.members() {
                seen[g.mul(x, k)] = true;
            }
            reps.push(x);
        }
        reps
    }

    /// Conjugacy classes, under `ambient`-conjugation, of the subgroups
    /// contained in `ambient`.  Returns `(classes, reps)` where each class
    /// lists lattice indices ascending and reps are the least members.
    pub fn classes_within(&self, ambient: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
        let a = self.subgroups[ambient];
        let inside: Vec<usize> = (0..self.len())
            .filter(|&i| self.subgroups[i].is_subset(&a))
            .collect();
        let mut class_of: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &i in &inside {
            if class_of.contains_key(&i) {
                continue;
            }
            let members: std::collections::BTreeSet<usize> =
                a.members().map(|g| self.conj_table[g][i]).collect();
            let c = classes.len();
            let members: Vec<usize> = members.into_iter().collect();
            for &j in &members {
                class_of.insert(j, c);
            }
            classes.push(members);
        }
        let reps = classes.iter().map(|cls| cls[0]).collect();
        (classes, reps)
    }

    /// Human-readable label for a subgroup: `e`, `G`, or the member list.
    pub fn label(&self, i: usize) -> String {
        let h = self.subgroups[i];
        if h.order() == 1 {
            "e".to_string()
        } else if h.order() == self.group.order() {
            "G".to_string()
        } else {
            let members: Vec<String> = h.members().map(|m| m.to_string()).collect();
            format!("{{{}}}", members.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(g: FiniteGroup) -> SubgroupLattice {
        SubgroupLattice::new(Arc::new(g)).unwrap()
    }

    #[test]
    fn trivial_group_is_valid() {
        let g = FiniteGroup::from_table("e", &[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn c2_is_valid() {
        let g = FiniteGroup::from_table("C2", &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn latin_square_violation_detected() {
        let err = FiniteGroup::from_table("bad", &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::NotLatinSquare { .. }));
    }

    #[test]
    fn associativity_violation_detected() {
        // A latin square with identity and inverses that is not a group:
        // the "subtraction" table of Z/3 (a∘b = a-b mod 3) has right identity
        // only; build a 5x5 latin square known to fail associativity instead.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table("bad", &table).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }));
    }

    #[test]
    fn builders_have_right_orders_and_properties() {
        assert_eq!(cyclic(12).unwrap().order(), 12);
        assert!(cyclic(12).unwrap().is_abelian());
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert!(!dihedral(3).unwrap().is_abelian());
        assert_eq!(quaternion(2).unwrap().order(), 8);
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        let v4 = product(&[cyclic(2).unwrap(), cyclic(2).unwrap()]).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert!((0..4).all(|x| v4.mul(x, x) == 0));
    }

    #[test]
    fn s3_matches_dihedral_3_up_to_iso_size_and_center() {
        let s3 = symmetric(3).unwrap();
        // S3 has 2 elements of order 3 and 3 of order 2.
        let mut order2 = 0;
        let mut order3 = 0;
        for x in s3.elements() {
            if x == s3.identity() {
                continue;
            }
            if s3.mul(x, x) == s3.identity() {
                order2 += 1;
            } else {
                order3 += 1;
            }
        }
        assert_eq!((order2, order3), (3, 2));
    }

    #[test]
    fn c12_subgroup_lattice() {
        let lat = lattice(cyclic(12).unwrap());
        // Divisors of 12: subgroups of orders 1,2,3,4,6,12 — one each.
        assert_eq!(lat.len(), 6);
        assert!(lat.is_dedekind());
        let orders: Vec<usize> = lat.subgroups().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 6, 12]);
        // C4 (order 4) is not subconjugate to C6 (order 6) and vice versa.
        let c4 = lat.subgroups().iter().position(|h| h.order() == 4).unwrap();
        let c6 = lat.subgroups().iter().position(|h| h.order() == 6).unwrap();
        assert!(!lat.is_subconjugate(c4, c6));
        assert!(!lat.is_subconjugate(c6, c4));
        // But C2 is subconjugate (indeed contained) in both.
        let c2 = lat.subgroups().iter().position(|h| h.order() == 2).unwrap();
        assert!(lat.is_subconjugate(c2, c4));
        assert!(lat.is_subconjugate(c2, c6));
    }

    #[test]
    fn s3_subgroup_classes() {
        let lat = lattice(symmetric(3).unwrap());
        // e, three C2s (conjugate), one C3, S3: six subgroups, four classes.
        assert_eq!(lat.len(), 6);
        assert_eq!(lat.classes().len(), 4);
        assert!(!lat.is_dedekind());
        // The three order-2 subgroups form a single class.
        let class_sizes: Vec<usize> = lat.classes().iter().map(|c| c.len()).collect();
        assert_eq!(class_sizes, vec![1, 3, 1, 1]);
        // Transpositions: any two order-2 subgroups are subconjugate.
        let twos: Vec<usize> = (0..lat.len()).filter(|&i| lat.subgroup(i).order() == 2).collect();
        assert!(lat.is_subconjugate(twos[0], twos[1]));
        assert_eq!(lat.class_of(twos[0]), lat.class_of(twos[1]));
    }

    #[test]
    fn q8_is_dedekind_but_not_abelian() {
        let q8 = quaternion(2).unwrap();
        assert!(!q8.is_abelian());
        let lat = lattice(q8);
        assert!(lat.is_dedekind());
        assert_eq!(lat.len(), 6); // e, Z(Q8)=C2, three C4s, Q8
    }

    #[test]
    fn double_cosets_basic_counts() {
        let lat = lattice(cyclic(2).unwrap());
        let e = lat.trivial();
        let top = lat.top();
        let dc = lat.double_cosets(e, e, top);
        assert_eq!(dc.reps.len(), 2);
        assert_eq!(dc.reps[0], 0);
        let dc_full = lat.double_cosets(top, top, top);
        assert_eq!(dc_full.reps.len(), 1);
    }

    #[test]
    fn double_cosets_s3_transposition_pair() {
        let lat = lattice(symmetric(3).unwrap());
        let twos: Vec<usize> = (0..lat.len()).filter(|&i| lat.subgroup(i).order() == 2).collect();
        let h = twos[0];
        let dc = lat.double_cosets(h, h, lat.top());
        // |H\G/H| for H = ⟨transposition⟩ in S3: cosets of sizes 2 and 4.
        assert_eq!(dc.reps.len(), 2);
    }

    #[test]
    fn double_cosets_partition_ambient() {
        for g in [cyclic(6).unwrap(), symmetric(3).unwrap(), quaternion(2).unwrap()] {
            let lat = lattice(g);
            for a in 0..lat.len() {
                for l in 0..lat.len() {
                    if !lat.is_sub(l, a) {
                        continue;
                    }
                    for k in 0..lat.len() {
                        if !lat.is_sub(k, a) {
                            continue;
                        }
                        let dc = lat.double_cosets(l, k, a);
                        let ambient = lat.subgroup(a);
                        let mut count = 0;
                        for x in ambient.members() {
                            assert!(dc.coset_index[x] < dc.reps.len());
                            count += 1;
                        }
                        assert_eq!(count, ambient.order());
                        // |LgK| = |L||K|/|K ∩ g⁻¹Lg| summed over reps equals |A|.
                        let total: usize = (0..dc.reps.len())
                            .map(|i| {
                                let stab = lat.stabilizer_in_right(&dc, i);
                                lat.subgroup(l).order() * lat.subgroup(k).order()
                                    / lat.subgroup(stab).order()
                            })
                            .sum();
                        assert_eq!(total, ambient.order());
                        // Left and right stabilizers are conjugate via the rep.
                        for i in 0..dc.reps.len() {
                            let sl = lat.stabilizer_in_left(&dc, i);
                            let sr = lat.stabilizer_in_right(&dc, i);
                            assert_eq!(lat.conjugate(dc.reps[i], sr), sl);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_reps_examples() {
        let lat = lattice(symmetric(3).unwrap());
        let twos: Vec<usize> = (0..lat.len()).filter(|&i| lat.subgroup(i).order() == 2).collect();
        // N_{S3}(⟨t⟩) = ⟨t⟩, so the Weyl group is trivial.
        assert_eq!(lat.weyl_reps(twos[0], lat.top()).len(), 1);
        assert_eq!(lat.weyl_reps(lat.top(), lat.top()).len(), 1);
        assert_eq!(lat.weyl_reps(lat.trivial(), lat.top()).len(), 6);
    }

    #[test]
    fn subconjugacy_is_reflexive_and_transitive() {
        for g in [cyclic(8).unwrap(), symmetric(3).unwrap(), dihedral(4).unwrap()] {
            let lat = lattice(g);
            let n = lat.len();
            for i in 0..n {
                assert!(lat.is_subconjugate(i, i));
                for j in 0..n {
                    for k in 0..n {
                        if lat.is_subconjugate(i, j) && lat.is_subconjugate(j, k) {
                            assert!(lat.is_subconjugate(i, k));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closure_and_conjugates_stay_in_lattice() {
        let lat = lattice(dihedral(4).unwrap());
        let g = lat.group().clone();
        for i in 0..lat.len() {
            for x in g.elements() {
                let c = conjugate_subgroup(g.as_ref(), lat.subgroup(i), x);
                let j = lat.index_of(c).expect("conjugate is a subgroup");
                assert_eq!(lat.class_of(i), lat.class_of(j));
            }
        }
    }

    #[test]
    fn classes_within_s3_subgroup() {
        let lat = lattice(symmetric(3).unwrap());
        let c3 = (0..lat.len()).find(|&i| lat.subgroup(i).order() == 3).unwrap();
        let (classes, reps) = lat.classes_within(c3);
        // Subgroups of C3: e and C3, each its own class.
        assert_eq!(classes.len(), 2);
        assert_eq!(reps.len(), 2);
        // Within S3 itself there are 4 classes.
        assert_eq!(lat.classes_within(lat.top()).0.len(), 4);
    }
}
