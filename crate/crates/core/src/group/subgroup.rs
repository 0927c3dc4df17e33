//! Subgroups as sorted member sets, closures and maximal-subgroup enumeration.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::PcGroup;

/// A subgroup of a fixed `PcGroup`; operations take the parent group explicitly.
///
/// Equality, ordering and hashing use the member set only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<u32>,
    gens: Vec<u32>,
    mask: Vec<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl Subgroup {
    pub(crate) fn mask_of(order: usize, members: &[u32]) -> Vec<bool> {
        let mut m = vec![false; order];
        for &x in members {
            m[x as usize] = true;
        }
        m
    }

    pub(crate) fn from_members(g: &PcGroup, mut members: Vec<u32>, gens: Vec<u32>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mask = Self::mask_of(g.order(), &members);
        Subgroup { members, gens, mask }
    }

    /// Subgroup generated by `gens`.
    pub fn closure(g: &PcGroup, gens: &[u32]) -> Self {
        let gens = reduce_gens(g, gens);
        let mut mask = vec![false; g.order()];
        mask[0] = true;
        let mut members = vec![0u32];
        let mut q = VecDeque::from([0u32]);
        while let Some(x) = q.pop_front() {
            for &s in &gens {
                let y = g.mul(x, s);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    members.push(y);
                    q.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members, gens, mask }
    }

    /// Normal closure of a set of elements.
    pub fn normal_closure(g: &PcGroup, elts: &[u32]) -> Self {
        let ggens = g.gens();
        let mut gens: Vec<u32> = elts.iter().copied().filter(|&x| x != 0).collect();
        loop {
            let h = Subgroup::closure(g, &gens);
            let mut extra = Vec::new();
            for &x in h.gens() {
                for &a in &ggens {
                    let y = g.conj(x, a);
                    if !h.contains(y) {
                        extra.push(y);
                    }
                }
            }
            if extra.is_empty() {
                return h;
            }
            gens = h.gens().to_vec();
            gens.extend(extra);
        }
    }

    /// Subgroup generated by `self` and `x`.
    pub fn join(&self, g: &PcGroup, x: u32) -> Subgroup {
        let mut gens = self.gens.clone();
        gens.push(x);
        Subgroup::closure(g, &gens)
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.mask[x as usize]
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian(&self, g: &PcGroup) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn intersect(&self, g: &PcGroup, other: &Subgroup) -> Subgroup {
        let m: Vec<u32> = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::closure(g, &m)
    }

    pub fn exponent(&self, g: &PcGroup) -> u64 {
        self.members.iter().map(|&x| g.element_order(x) as u64).max().unwrap_or(1)
    }

    /// Frattini subgroup `S' S^p` of this subgroup.
    pub fn frattini(&self, g: &PcGroup) -> Subgroup {
        let p = g.prime() as i64;
        let mut elts = Vec::new();
        for (j, &a) in self.gens.iter().enumerate() {
            elts.push(g.pow(a, p));
            for &b in &self.gens[..j] {
                elts.push(g.comm(a, b));
            }
        }
        self.normal_closure_within(g, &elts)
    }

    /// Normal closure of `elts` inside this subgroup.
    pub fn normal_closure_within(&self, g: &PcGroup, elts: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = elts.iter().copied().filter(|&x| x != 0).collect();
        loop {
            let h = Subgroup::closure(g, &gens);
            let mut extra = Vec::new();
            for &x in h.gens() {
                for &a in &self.gens {
                    let y = g.conj(x, a);
                    if !h.contains(y) {
                        extra.push(y);
                    }
                }
            }
            if extra.is_empty() {
                return h;
            }
            gens = h.gens().to_vec();
            gens.extend(extra);
        }
    }
}

/// Drop generators already in the span of the earlier ones.
fn reduce_gens(g: &PcGroup, gens: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    let mut cur: Vec<bool> = vec![false; g.order()];
    cur[0] = true;
    let mut members = vec![0u32];
    for &x in gens {
        if cur[x as usize] {
            continue;
        }
        out.push(x);
        let mut q: VecDeque<u32> = members.iter().copied().collect();
        while let Some(y) = q.pop_front() {
            for &s in &out {
                let z = g.mul(y, s);
                if !cur[z as usize] {
                    cur[z as usize] = true;
                    members.push(z);
                    q.push_back(z);
                }
            }
        }
    }
    out
}

/// Maximal subgroups of `s` (all of index `p`), sorted by member set.
pub fn maximal_subgroups(g: &PcGroup, s: &Subgroup) -> Vec<Subgroup> {
    if s.order() == 1 {
        return Vec::new();
    }
    let p = g.prime();
    let phi = s.frattini(g);
    // basis of S / Phi(S) chosen greedily from the generators of S
    let mut basis = Vec::new();
    let mut span = phi.clone();
    for &x in s.gens() {
        if !span.contains(x) {
            basis.push(x);
            span = span.join(g, x);
        }
    }
    let d = basis.len();
    let mut out = Vec::new();
    // hyperplanes: functionals f with first nonzero coordinate equal to 1
    let total = (p as usize).pow(d as u32);
    for code in 1..total {
        let mut f = vec![0u32; d];
        let mut c = code;
        for fi in f.iter_mut() {
            *fi = (c % p as usize) as u32;
            c /= p as usize;
        }
        let lead = f.iter().position(|&v| v != 0).unwrap();
        if f[lead] != 1 {
            continue;
        }
        let mut gens: Vec<u32> = phi.gens().to_vec();
        for i in 0..d {
            if i == lead {
                continue;
            }
            let e = (p - f[i]) % p;
            gens.push(g.mul(basis[i], g.pow(basis[lead], e as i64)));
        }
        out.push(Subgroup::closure(g, &gens));
    }
    out.sort();
    out.dedup();
    out
}

/// All subgroups of index `k`, deduplicated and sorted by member set.
pub fn subgroups_of_index(g: &PcGroup, k: usize) -> Vec<Subgroup> {
    subgroups_of_index_containing(g, k, &g.trivial())
}

/// All subgroups of index `k` containing `n`, sorted by member set.
pub fn subgroups_of_index_containing(g: &PcGroup, k: usize, n: &Subgroup) -> Vec<Subgroup> {
    if k == 0 || !g.order().is_multiple_of(k) {
        return Vec::new();
    }
    let target = g.order() / k;
    if target < n.order() {
        return Vec::new();
    }
    let mut level: BTreeSet<Subgroup> = BTreeSet::from([g.whole()]);
    while level.iter().next().is_some_and(|h| h.order() > target) {
        let mut next = BTreeSet::new();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for h in &level {
            for m in maximal_subgroups(g, h) {
                if n.is_subgroup_of(&m) && seen.insert(m.members().to_vec()) {
                    next.insert(m);
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}
