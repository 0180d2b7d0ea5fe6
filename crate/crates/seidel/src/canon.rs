//! Canonical labeling, isomorphism testing, and automorphism groups.
//!
//! The canonical key of a graph is the lexicographically minimal
//! upper-triangle adjacency bitstring (column-major, the graph6 bit order)
//! over all vertex orderings. Minimality over *all* n! orderings is part of
//! the contract, so the key can be cross-checked against a factorial brute
//! force at small n.
//!
//! The search runs by individualization backtracking on the bitstring
//! itself: at each position only vertices realising the minimal next column
//! can extend a minimal ordering, the incumbent best leaf prunes branches
//! at the first losing bit, and automorphisms discovered from equal leaves
//! collapse sibling branches orbit by orbit. Discovered generators double
//! as the automorphism group output, with the exact order computed through
//! a stabilizer chain.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, DEFAULT_VERTEX_CAP};

/// Relabeling-invariant fingerprint of a graph: vertex count plus the
/// packed canonical adjacency bitstring. Equal keys hold exactly for
/// isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey {
    n: usize,
    words: Vec<u64>,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn bit_len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// 128-bit FNV-1a fingerprint used as a dedupe index; equality is
    /// always re-checked on the full key.
    pub fn digest(&self) -> u128 {
        const PRIME: u128 = 0x0000000001000000000000000000013b;
        let mut h: u128 = 0x6c62272e07bb014262b821756295c58d;
        for byte in (self.n as u64)
            .to_le_bytes()
            .into_iter()
            .chain(self.words.iter().flat_map(|w| w.to_le_bytes()))
        {
            h ^= byte as u128;
            h = h.wrapping_mul(PRIME);
        }
        h
    }
}

/// Packs the upper-triangle bits of the graph's current labeling in
/// column-major order: positions (0,1), (0,2), (1,2), (0,3), ... with the
/// earliest position in the most significant bit of each word, so plain
/// word comparison is lexicographic bitstring comparison.
pub fn pack_key(g: &Graph) -> CanonicalKey {
    let n = g.n();
    let nbits = n * (n - 1) / 2;
    let mut words = vec![0u64; nbits.div_ceil(64)];
    let mut p = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                words[p / 64] |= 1u64 << (63 - p % 64);
            }
            p += 1;
        }
    }
    CanonicalKey { n, words }
}

/// A canonical ordering with its key and fingerprint.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Position -> original vertex; relabelling by this yields the
    /// canonical representative.
    pub ordering: Vec<usize>,
    pub key: CanonicalKey,
    pub digest: u128,
}

impl CanonicalForm {
    pub fn canonical_graph(&self, g: &Graph) -> Graph {
        g.relabelled(&self.ordering)
    }
}

/// Automorphism group given by generators and its exact order.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub generators: Vec<Vec<usize>>,
    pub order: u128,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    w: usize,
    /// sig[u] = adjacency bits of u against the current prefix, packed
    /// big-endian so lexicographic column comparison is word comparison.
    sigs: Vec<u64>,
    used: Vec<bool>,
    prefix: Vec<usize>,
    best_ordering: Vec<usize>,
    /// Snapshot of the chosen vertex's sig at each depth of the best leaf.
    best_cols: Vec<u64>,
    have_best: bool,
    gens: Vec<Vec<usize>>,
    uf: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PathCmp {
    /// Prefix equals the best leaf so far bit for bit.
    Equal,
    /// Prefix strictly beats the best leaf (or no best exists yet).
    Better,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        let w = n.div_ceil(64);
        Search {
            g,
            n,
            w,
            sigs: vec![0; n * w],
            used: vec![false; n],
            prefix: Vec::with_capacity(n),
            best_ordering: Vec::new(),
            best_cols: vec![0; n * w],
            have_best: false,
            gens: Vec::new(),
            uf: vec![0; n],
        }
    }

    fn sig(&self, u: usize) -> &[u64] {
        &self.sigs[u * self.w..(u + 1) * self.w]
    }

    /// Union-find over vertices generated by the automorphisms that fix the
    /// current prefix pointwise.
    fn rebuild_orbits(&mut self) {
        for (i, slot) in self.uf.iter_mut().enumerate() {
            *slot = i;
        }
        for gi in 0..self.gens.len() {
            if self.prefix.iter().any(|&p| self.gens[gi][p] != p) {
                continue;
            }
            for x in 0..self.n {
                let y = self.gens[gi][x];
                let (rx, ry) = (self.find(x), self.find(y));
                if rx != ry {
                    self.uf[rx.max(ry)] = rx.min(ry);
                }
            }
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.uf[x] != x {
            self.uf[x] = self.uf[self.uf[x]];
            x = self.uf[x];
        }
        x
    }

    /// Places `u` at the current depth, updating the signatures of the
    /// remaining vertices. Returns the touched vertices for the undo.
    fn place(&mut self, u: usize, depth: usize) -> Vec<usize> {
        self.prefix.push(u);
        self.used[u] = true;
        let word = depth / 64;
        let bit = 1u64 << (63 - depth % 64);
        let mut touched = Vec::new();
        let row = self.g.row(u);
        for x in 0..self.n {
            if !self.used[x] && row[x / 64] >> (x % 64) & 1 == 1 {
                self.sigs[x * self.w + word] |= bit;
                touched.push(x);
            }
        }
        touched
    }

    fn unplace(&mut self, u: usize, depth: usize, touched: &[usize]) {
        let word = depth / 64;
        let bit = 1u64 << (63 - depth % 64);
        for &x in touched {
            self.sigs[x * self.w + word] &= !bit;
        }
        self.used[u] = false;
        self.prefix.pop();
    }

    fn install_best(&mut self) {
        self.best_ordering = self.prefix.clone();
        for (depth, &u) in self.prefix.iter().enumerate() {
            let src = u * self.w;
            let dst = depth * self.w;
            // The chosen vertex's sig still holds exactly its column bits:
            // positions < its own depth.
            for i in 0..self.w {
                self.best_cols[dst + i] = self.sigs[src + i];
            }
        }
        self.have_best = true;
    }

    /// Records the automorphism mapping the current (equal) leaf onto the
    /// best leaf.
    fn record_automorphism(&mut self) {
        let mut perm = vec![0usize; self.n];
        for (i, &u) in self.prefix.iter().enumerate() {
            perm[u] = self.best_ordering[i];
        }
        if perm.iter().enumerate().all(|(i, &x)| i == x) {
            return;
        }
        debug_assert!(is_automorphism(self.g, &perm));
        if !self.gens.contains(&perm) {
            self.gens.push(perm);
        }
    }

    fn dfs(&mut self, depth: usize, status: PathCmp) -> bool {
        if depth == self.n {
            return match status {
                PathCmp::Better => {
                    self.install_best();
                    true
                }
                PathCmp::Equal => {
                    self.record_automorphism();
                    false
                }
            };
        }
        // Candidates: unused vertices whose next column is minimal.
        let mut min_u = usize::MAX;
        for u in 0..self.n {
            if self.used[u] {
                continue;
            }
            if min_u == usize::MAX || self.sig(u) < self.sig(min_u) {
                min_u = u;
            }
        }
        let min_sig: Vec<u64> = self.sig(min_u).to_vec();
        let candidates: Vec<usize> = (0..self.n)
            .filter(|&u| !self.used[u] && self.sig(u) == min_sig.as_slice())
            .collect();

        let mut status = status;
        if status == PathCmp::Equal {
            let b = &self.best_cols[depth * self.w..(depth + 1) * self.w];
            match min_sig.as_slice().cmp(b) {
                Ordering::Greater => return false,
                Ordering::Less => status = PathCmp::Better,
                Ordering::Equal => {}
            }
        }

        let mut replaced = false;
        let mut explored_roots: Vec<usize> = Vec::new();
        let mut gens_seen = usize::MAX; // force an orbit rebuild on first use
        for u in candidates {
            if self.gens.len() != gens_seen {
                self.rebuild_orbits();
                gens_seen = self.gens.len();
            }
            let root = self.find(u);
            if explored_roots.contains(&root) {
                continue;
            }
            explored_roots.push(root);

            let touched = self.place(u, depth);
            let child = self.dfs(depth + 1, status);
            self.unplace(u, depth, &touched);
            if child {
                replaced = true;
                // The new best leaf runs through this node, so the prefix
                // is now bit-equal to the best.
                status = PathCmp::Equal;
            }
        }
        replaced
    }

    fn run(mut self) -> (Vec<usize>, Vec<Vec<usize>>) {
        self.dfs(0, PathCmp::Better);
        (self.best_ordering, self.gens)
    }
}

fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    let n = g.n();
    (0..n).all(|x| ((x + 1)..n).all(|y| g.has_edge(x, y) == g.has_edge(perm[x], perm[y])))
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::Resource(format!(
            "canonical labeling of a graph on {} vertices exceeds the vertex cap {cap}",
            g.n()
        )));
    }
    Ok(())
}

/// Canonical form under the default vertex cap.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_capped(g, DEFAULT_VERTEX_CAP)
}

/// Canonical form with an explicit vertex cap.
pub fn canonical_form_capped(g: &Graph, cap: usize) -> Result<CanonicalForm> {
    check_cap(g, cap)?;
    let (ordering, _) = Search::new(g).run();
    let key = pack_key(&g.relabelled(&ordering));
    let digest = key.digest();
    Ok(CanonicalForm {
        ordering,
        key,
        digest,
    })
}

/// Isomorphism test. Returns a verified vertex mapping from `g1` onto `g2`
/// when the canonical keys agree, `None` otherwise.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    if g1.n() != g2.n() {
        return Ok(None);
    }
    let f1 = canonical_form(g1)?;
    let f2 = canonical_form(g2)?;
    if f1.key != f2.key {
        return Ok(None);
    }
    let mut mapping = vec![0usize; g1.n()];
    for p in 0..g1.n() {
        mapping[f1.ordering[p]] = f2.ordering[p];
    }
    let n = g1.n();
    for x in 0..n {
        for y in (x + 1)..n {
            if g1.has_edge(x, y) != g2.has_edge(mapping[x], mapping[y]) {
                return Err(Error::Precondition(
                    "internal error: equal canonical keys produced a non-isomorphism".into(),
                ));
            }
        }
    }
    Ok(Some(mapping))
}

/// Automorphism group from the canonical search generators, with the exact
/// order from a stabilizer chain.
pub fn automorphisms(g: &Graph) -> Result<AutGroup> {
    automorphisms_capped(g, DEFAULT_VERTEX_CAP)
}

pub fn automorphisms_capped(g: &Graph, cap: usize) -> Result<AutGroup> {
    check_cap(g, cap)?;
    let (_, generators) = Search::new(g).run();
    let order = StabChain::order_of(g.n(), &generators);
    Ok(AutGroup { generators, order })
}

/// Deterministic Schreier-Sims stabilizer chain, sufficient for the
/// permutation groups met here (a few hundred points). Verification
/// restarts from scratch whenever a new strong generator appears; the
/// group orders involved keep that cheap.
struct StabChain {
    n: usize,
    base: Vec<usize>,
    gens: Vec<Vec<usize>>,
}

type Transversal = HashMap<usize, Vec<usize>>;

impl StabChain {
    fn order_of(n: usize, input_gens: &[Vec<usize>]) -> u128 {
        let mut chain = StabChain {
            n,
            base: Vec::new(),
            gens: Vec::new(),
        };
        for g in input_gens {
            if !Self::is_identity(g) && !chain.gens.contains(g) {
                chain.gens.push(g.clone());
            }
        }
        let tables = chain.close();
        tables.iter().map(|t| t.len() as u128).product()
    }

    fn identity(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        // Apply b first, then a.
        b.iter().map(|&x| a[x]).collect()
    }

    fn inverse(a: &[usize]) -> Vec<usize> {
        let mut inv = vec![0; a.len()];
        for (i, &x) in a.iter().enumerate() {
            inv[x] = i;
        }
        inv
    }

    fn is_identity(a: &[usize]) -> bool {
        a.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Generators fixing base[0..level] pointwise: the level's stabilizer
    /// generators under the nested-set convention.
    fn gens_at(&self, level: usize) -> Vec<usize> {
        (0..self.gens.len())
            .filter(|&gi| self.base[..level].iter().all(|&b| self.gens[gi][b] == b))
            .collect()
    }

    /// Orbit of base[level] under the level's generators, with coset
    /// representatives.
    fn orbit_table(&self, level: usize) -> Transversal {
        let b = self.base[level];
        let gen_idx = self.gens_at(level);
        let mut t: Transversal = HashMap::new();
        t.insert(b, self.identity());
        let mut queue = vec![b];
        while let Some(pt) = queue.pop() {
            let rep = t[&pt].clone();
            for &gi in &gen_idx {
                let img = self.gens[gi][pt];
                if let std::collections::hash_map::Entry::Vacant(e) = t.entry(img) {
                    e.insert(Self::compose(&self.gens[gi], &rep));
                    queue.push(img);
                }
            }
        }
        t
    }

    /// Strips `p` through the transversals from `level` on; returns the
    /// residue and the level where stripping stopped.
    fn sift(&self, tables: &[Transversal], mut p: Vec<usize>, level: usize) -> (Vec<usize>, usize) {
        let mut l = level;
        while l < self.base.len() {
            let img = p[self.base[l]];
            match tables[l].get(&img) {
                Some(rep) => {
                    p = Self::compose(&Self::inverse(rep), &p);
                    l += 1;
                }
                None => break,
            }
        }
        (p, l)
    }

    /// Runs the Schreier condition to a fixpoint and returns the final
    /// transversals.
    fn close(&mut self) -> Vec<Transversal> {
        'restart: loop {
            // The base must be long enough that every generator moves some
            // base point.
            loop {
                let uncovered = self
                    .gens
                    .iter()
                    .find(|g| self.base.iter().all(|&b| g[b] == b));
                match uncovered {
                    Some(g) => {
                        let moved = (0..self.n)
                            .find(|&x| g[x] != x)
                            .expect("non-identity generator moves a point");
                        self.base.push(moved);
                    }
                    None => break,
                }
            }
            let tables: Vec<Transversal> =
                (0..self.base.len()).map(|l| self.orbit_table(l)).collect();
            for level in 0..self.base.len() {
                let mut points: Vec<usize> = tables[level].keys().copied().collect();
                points.sort_unstable();
                for pt in points {
                    let rep = &tables[level][&pt];
                    for &gi in &self.gens_at(level) {
                        let s = &self.gens[gi];
                        let rep_img = &tables[level][&s[pt]];
                        let schreier =
                            Self::compose(&Self::inverse(rep_img), &Self::compose(s, rep));
                        let (res, _) = self.sift(&tables, schreier, level + 1);
                        if !Self::is_identity(&res) {
                            self.gens.push(res);
                            continue 'restart;
                        }
                    }
                }
            }
            return tables;
        }
    }
}

/// Partitions `sets` into orbits under the automorphism group of `g` and
/// returns, for each input set, the index of its orbit representative
/// (the first input set of the orbit).
pub fn orbit_partition(g: &Graph, sets: &[VertexSet]) -> Result<Vec<usize>> {
    let aut = automorphisms(g)?;
    let mut assignment = vec![usize::MAX; sets.len()];
    let mut seen: HashMap<VertexSet, usize> = HashMap::new();
    for (i, s) in sets.iter().enumerate() {
        if let Some(&rep) = seen.get(s) {
            assignment[i] = rep;
            continue;
        }
        assignment[i] = i;
        // Flood the whole orbit of s so later members resolve to i.
        let mut queue = vec![s.clone()];
        seen.insert(s.clone(), i);
        while let Some(cur) = queue.pop() {
            for gen in &aut.generators {
                let img = cur.permuted(gen);
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), i);
                    queue.push(img);
                }
            }
        }
    }
    Ok(assignment)
}

/// One representative per orbit of `sets` under Aut(g), in first-seen
/// order. Switching by same-orbit sets yields isomorphic graphs, so this is
/// a sound (if incomplete) dedupe pre-filter.
pub fn orbit_reps(g: &Graph, sets: &[VertexSet]) -> Result<Vec<VertexSet>> {
    let assignment = orbit_partition(g, sets)?;
    Ok(assignment
        .iter()
        .enumerate()
        .filter(|&(i, &rep)| i == rep)
        .map(|(i, _)| sets[i].clone())
        .collect())
}
