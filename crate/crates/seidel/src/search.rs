//! Switching-set enumeration and the iterated switching closure.
//!
//! `find_sets` streams the subsets H that satisfy the same-parameters
//! switching criterion under a chosen strategy; `closure` breadth-first iterates switching over
//! the discovered graphs with canonical-key dedupe until a fixpoint or a
//! limit, which regenerates small censuses (the four (28,15,6,10) classes
//! from the complement of T(8), for instance). Frontier items are sharded
//! across worker threads; class commits happen in a single merge step per
//! level, so a given configuration always produces the same class set.

use std::collections::HashMap;
use std::io::Write;
use std::time::Instant;

use crate::canon::{canonical_form_capped, orbit_reps, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6;
use crate::srg::{derive_spectrum, verify_srg, SrgClass, SrgParams, SrgSpectrum};
use crate::switching::{check_thm1_with, switch, SwitchingSet};

/// How candidate switching sets are generated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SetStrategy {
    /// All qualifying subsets with |H| <= max_h, by pruned exhaustive
    /// enumeration.
    Brute { max_h: usize },
    /// All cliques of the forced size 2*theta1 + 2.
    Cliques,
    /// Vertex-disjoint unions of up to `max_parts` such cliques whose union
    /// still qualifies (each vertex adjacent to half of every other
    /// clique); the regularity is checked, never assumed.
    CliqueUnions { max_parts: usize },
    /// Exactly the given sets, filtered through the same-parameters
    /// criterion.
    Explicit(Vec<VertexSet>),
    /// Brute up to 2*theta1 + 6 plus the larger clique unions.
    Auto,
}

/// The one clique size that can qualify: a clique is (h-1)-regular, and
/// h - 1 = k - (v-h)/2 forces h = 2*theta1 + 2.
pub fn clique_switch_size(s: &SrgSpectrum) -> Result<usize> {
    if !s.switchable {
        return Err(Error::Precondition(format!(
            "parameters {} do not satisfy v = 2(k - theta1)",
            s.params
        )));
    }
    Ok((2 * s.theta1 + 2) as usize)
}

/// Induced degree a qualifying set of size h must realise, when
/// integral.
fn thm1_target(s: &SrgSpectrum, h: usize) -> Option<usize> {
    let v = s.params.v;
    if h == 0 || h > v || !(v - h).is_multiple_of(2) {
        return None;
    }
    let t = s.params.k as i64 - ((v - h) / 2) as i64;
    if t < 0 || t as usize > h - 1 {
        return None;
    }
    Some(t as usize)
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    fn step(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Resource(format!(
                "subset budget exceeded after {} candidates",
                self.used
            )))
        } else {
            Ok(())
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u64 = 1;
    for i in 0..k.min(n - k) {
        r = r.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    r
}

/// Enumerates all h-subsets whose induced subgraph is t-regular, ascending
/// lexicographically, with saturation and deficit pruning.
fn enumerate_regular_subsets(
    g: &Graph,
    h: usize,
    t: usize,
    budget: &mut Budget,
    deadline: Option<&Deadline>,
    visit: &mut dyn FnMut(&VertexSet) -> Result<()>,
) -> Result<()> {
    let n = g.n();
    let w = g.word_width();
    if h > n {
        return Ok(());
    }
    let mut chosen_mask = vec![0u64; w];
    let mut saturated = vec![0u64; w];
    let mut chosen: Vec<usize> = Vec::with_capacity(h);
    let mut degs: Vec<usize> = Vec::with_capacity(h);
    rec(
        g,
        h,
        t,
        0,
        &mut chosen,
        &mut degs,
        &mut chosen_mask,
        &mut saturated,
        budget,
        deadline,
        visit,
    )?;
    return Ok(());

    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        h: usize,
        t: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        degs: &mut Vec<usize>,
        chosen_mask: &mut [u64],
        saturated: &mut [u64],
        budget: &mut Budget,
        deadline: Option<&Deadline>,
        visit: &mut dyn FnMut(&VertexSet) -> Result<()>,
    ) -> Result<()> {
        if chosen.len() == h {
            if degs.iter().all(|&d| d == t) {
                let set = VertexSet::from_indices(g.n(), chosen)?;
                visit(&set)?;
            }
            return Ok(());
        }
        if let Some(d) = deadline {
            if d.expired() {
                return Ok(());
            }
        }
        let remaining = h - chosen.len();
        if g.n() - start < remaining {
            return Ok(());
        }
        for u in start..=(g.n() - remaining) {
            budget.step()?;
            let row = g.row(u);
            let du: usize = row
                .iter()
                .zip(chosen_mask.iter())
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
            if du > t {
                continue;
            }
            // A saturated member cannot take another neighbour.
            if row.iter().zip(saturated.iter()).any(|(a, b)| a & b != 0) {
                continue;
            }
            let r_after = remaining - 1;
            if du + r_after < t {
                continue;
            }
            // Every member must still be able to reach degree t even if all
            // later picks were its neighbours.
            if degs
                .iter()
                .zip(chosen.iter())
                .any(|(&d, &x)| d + g.has_edge(x, u) as usize + r_after < t)
            {
                continue;
            }
            // Place u.
            chosen.push(u);
            let mut new_degs_over = false;
            for (d, &x) in degs.iter_mut().zip(chosen.iter()) {
                if g.has_edge(x, u) {
                    *d += 1;
                    if *d > t {
                        new_degs_over = true;
                    }
                }
            }
            degs.push(du);
            debug_assert!(!new_degs_over);
            chosen_mask[u / 64] |= 1 << (u % 64);
            for (&x, &d) in chosen.iter().zip(degs.iter()) {
                if d == t {
                    saturated[x / 64] |= 1 << (x % 64);
                }
            }
            rec(
                g,
                h,
                t,
                u + 1,
                chosen,
                degs,
                chosen_mask,
                saturated,
                budget,
                deadline,
                visit,
            )?;
            // Undo.
            chosen_mask[u / 64] &= !(1 << (u % 64));
            chosen.pop();
            degs.pop();
            for (d, &x) in degs.iter_mut().zip(chosen.iter()) {
                if g.has_edge(x, u) {
                    *d -= 1;
                }
            }
            saturated.fill(0);
            for (&x, &d) in chosen.iter().zip(degs.iter()) {
                if d == t {
                    saturated[x / 64] |= 1 << (x % 64);
                }
            }
        }
        Ok(())
    }
}

/// Enumerates all cliques of exactly `size` vertices, ascending.
fn enumerate_cliques(
    g: &Graph,
    size: usize,
    budget: &mut Budget,
    deadline: Option<&Deadline>,
    visit: &mut dyn FnMut(&VertexSet) -> Result<()>,
) -> Result<()> {
    let n = g.n();
    let w = g.word_width();
    let mut full = vec![u64::MAX; w];
    if !n.is_multiple_of(64) {
        full[w - 1] = (1u64 << (n % 64)) - 1;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(size);
    return rec(g, size, &full, &mut chosen, budget, deadline, visit);

    fn rec(
        g: &Graph,
        size: usize,
        cand: &[u64],
        chosen: &mut Vec<usize>,
        budget: &mut Budget,
        deadline: Option<&Deadline>,
        visit: &mut dyn FnMut(&VertexSet) -> Result<()>,
    ) -> Result<()> {
        if chosen.len() == size {
            let set = VertexSet::from_indices(g.n(), chosen)?;
            return visit(&set);
        }
        if let Some(d) = deadline {
            if d.expired() {
                return Ok(());
            }
        }
        let lo = chosen.last().map_or(0, |&x| x + 1);
        for (wi, &word) in cand.iter().enumerate() {
            let mut bits = word;
            if wi * 64 + 63 < lo {
                continue;
            }
            while bits != 0 {
                let u = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if u < lo {
                    continue;
                }
                budget.step()?;
                // Candidates must stay adjacent to everything chosen.
                let next: Vec<u64> = cand.iter().zip(g.row(u)).map(|(c, r)| c & r).collect();
                let left: usize = next.iter().map(|x| x.count_ones() as usize).sum();
                chosen.push(u);
                if chosen.len() + left >= size {
                    rec(g, size, &next, chosen, budget, deadline, visit)?;
                }
                chosen.pop();
            }
        }
        Ok(())
    }
}

struct Deadline {
    start: Instant,
    max_seconds: u64,
}

impl Deadline {
    fn expired(&self) -> bool {
        self.start.elapsed().as_secs() >= self.max_seconds
    }
}

/// Streams every qualifying switching set for the strategy through `visit`.
/// Every visited set satisfies the same-parameters criterion.
fn enumerate_sets(
    g: &Graph,
    s: &SrgSpectrum,
    strategy: &SetStrategy,
    budget: &mut Budget,
    deadline: Option<&Deadline>,
    visit: &mut dyn FnMut(&VertexSet) -> Result<()>,
) -> Result<()> {
    let v = s.params.v;
    match strategy {
        SetStrategy::Brute { max_h } => {
            let max_h = (*max_h).min(v);
            // Upfront size check: the subset space itself must fit the
            // budget before the walk starts.
            let space: u64 = (1..=max_h)
                .filter(|h| (v - h).is_multiple_of(2))
                .map(|h| binomial(v, h))
                .fold(0u64, u64::saturating_add);
            if space > budget.limit {
                return Err(Error::Resource(format!(
                    "brute strategy spans {space} candidate subsets, over the budget {}",
                    budget.limit
                )));
            }
            for h in 1..=max_h {
                if let Some(t) = thm1_target(s, h) {
                    enumerate_regular_subsets(g, h, t, budget, deadline, visit)?;
                }
            }
            Ok(())
        }
        SetStrategy::Cliques => {
            let size = clique_switch_size(s)?;
            enumerate_cliques(g, size, budget, deadline, visit)
        }
        SetStrategy::CliqueUnions { max_parts } => {
            clique_unions(g, s, *max_parts, 2, budget, deadline, visit)
        }
        SetStrategy::Explicit(sets) => {
            for set in sets {
                if let Some(d) = deadline {
                    if d.expired() {
                        return Ok(());
                    }
                }
                budget.step()?;
                if set.universe() != g.n() {
                    return Err(Error::Parameter(
                        "explicit switching set universe mismatch".into(),
                    ));
                }
                if check_thm1_with(s, g, set)? {
                    visit(set)?;
                }
            }
            Ok(())
        }
        SetStrategy::Auto => {
            let brute_max = (2 * s.theta1 + 6) as usize;
            enumerate_sets(
                g,
                s,
                &SetStrategy::Brute { max_h: brute_max },
                budget,
                deadline,
                visit,
            )?;
            // Clique unions above the brute horizon; smaller ones were
            // already produced by the brute pass.
            let size = clique_switch_size(s)?;
            let min_parts = brute_max / size + 1;
            clique_unions(g, s, v / size, min_parts.max(2), budget, deadline, visit)
        }
    }
}

/// Enumerates vertex-disjoint unions of `min_parts..=max_parts` cliques of
/// the forced size, emitting those whose union still induces a regular
/// subgraph of the qualifying degree.
fn clique_unions(
    g: &Graph,
    s: &SrgSpectrum,
    max_parts: usize,
    min_parts: usize,
    budget: &mut Budget,
    deadline: Option<&Deadline>,
    visit: &mut dyn FnMut(&VertexSet) -> Result<()>,
) -> Result<()> {
    let size = clique_switch_size(s)?;
    let mut cliques: Vec<VertexSet> = Vec::new();
    enumerate_cliques(g, size, budget, deadline, &mut |c| {
        cliques.push(c.clone());
        Ok(())
    })?;
    let w = g.word_width();
    let mut union_mask = vec![0u64; w];
    let mut parts: Vec<usize> = Vec::new();
    return rec(
        g,
        s,
        size,
        &cliques,
        max_parts,
        min_parts,
        0,
        &mut union_mask,
        &mut parts,
        budget,
        deadline,
        visit,
    );

    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        s: &SrgSpectrum,
        size: usize,
        cliques: &[VertexSet],
        max_parts: usize,
        min_parts: usize,
        start: usize,
        union_mask: &mut Vec<u64>,
        parts: &mut Vec<usize>,
        budget: &mut Budget,
        deadline: Option<&Deadline>,
        visit: &mut dyn FnMut(&VertexSet) -> Result<()>,
    ) -> Result<()> {
        if parts.len() == max_parts {
            return Ok(());
        }
        if let Some(d) = deadline {
            if d.expired() {
                return Ok(());
            }
        }
        for ci in start..cliques.len() {
            budget.step()?;
            let cw = cliques[ci].words();
            if union_mask.iter().zip(cw).any(|(a, b)| a & b != 0) {
                continue;
            }
            for (a, b) in union_mask.iter_mut().zip(cw) {
                *a |= b;
            }
            parts.push(ci);
            if parts.len() >= min_parts {
                let h = parts.len() * size;
                if let Some(t) = thm1_target(s, h) {
                    if g.induced_is_regular_of(union_mask, t) {
                        let set = VertexSet::from_words(g.n(), union_mask.clone());
                        visit(&set)?;
                    }
                }
            }
            rec(
                g,
                s,
                size,
                cliques,
                max_parts,
                min_parts,
                ci + 1,
                union_mask,
                parts,
                budget,
                deadline,
                visit,
            )?;
            parts.pop();
            for (a, b) in union_mask.iter_mut().zip(cw) {
                *a &= !b;
            }
        }
        Ok(())
    }
}

/// Collects all qualifying switching sets under the strategy and budget.
pub fn find_sets(
    g: &Graph,
    s: &SrgSpectrum,
    strategy: &SetStrategy,
    subset_budget: u64,
) -> Result<Vec<SwitchingSet>> {
    if !s.switchable {
        return Err(Error::Precondition(format!(
            "parameters {} do not satisfy v = 2(k - theta1)",
            s.params
        )));
    }
    let mut budget = Budget::new(subset_budget);
    let mut out = Vec::new();
    enumerate_sets(g, s, strategy, &mut budget, None, &mut |set| {
        debug_assert_eq!(check_thm1_with(s, g, set), Ok(true));
        out.push(set.clone());
        Ok(())
    })?;
    Ok(out)
}

/// Limits and knobs for closure runs.
#[derive(Clone, Debug)]
pub struct ClosureLimits {
    /// Stop after this many isomorphism classes have been stored.
    pub max_graphs: Option<usize>,
    /// Soft wall-clock limit, checked between candidate sets.
    pub max_seconds: Option<u64>,
    /// Budget for every per-graph subset enumeration.
    pub subset_budget: u64,
    pub threads: usize,
    /// Pre-filter each graph's sets to automorphism orbit representatives.
    pub orbit_reduce: bool,
    /// Cap for canonical labeling.
    pub vertex_cap: usize,
}

impl Default for ClosureLimits {
    fn default() -> Self {
        ClosureLimits {
            max_graphs: None,
            max_seconds: None,
            subset_budget: 100_000_000,
            threads: 1,
            orbit_reduce: false,
            vertex_cap: crate::graph::DEFAULT_VERTEX_CAP,
        }
    }
}

/// A stored isomorphism class: canonical representative plus lineage.
#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub digest: u128,
    pub key: CanonicalKey,
    /// graph6 line of the canonical representative.
    pub graph6: String,
    pub params: SrgParams,
    /// Digest of the class this one was reached from; `None` for the seed.
    pub parent: Option<u128>,
    /// Switching set (on the parent's canonical labels) that produced it.
    pub via: Option<VertexSet>,
}

#[derive(Clone, Debug, Default)]
pub struct ClosureStats {
    pub graphs_visited: usize,
    pub sets_tried: u64,
    pub classes_found: usize,
}

/// Result of a closure run: pairwise non-isomorphic classes (full canonical
/// keys verified), statistics, and the truncation marker when a limit hit.
#[derive(Clone, Debug)]
pub struct ClosureState {
    pub classes: Vec<ClassRecord>,
    pub stats: ClosureStats,
    pub truncated: Option<String>,
    index: HashMap<u128, Vec<usize>>,
}

impl ClosureState {
    fn new() -> Self {
        ClosureState {
            classes: Vec::new(),
            stats: ClosureStats::default(),
            truncated: None,
            index: HashMap::new(),
        }
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.index
            .get(&key.digest())
            .is_some_and(|v| v.iter().any(|&i| &self.classes[i].key == key))
    }

    /// Inserts if new; returns the class index and whether it was new.
    fn insert(&mut self, rec: ClassRecord) -> (usize, bool) {
        let slot = self.index.entry(rec.digest).or_default();
        for &i in slot.iter() {
            if self.classes[i].key == rec.key {
                return (i, false);
            }
        }
        let i = self.classes.len();
        slot.push(i);
        self.classes.push(rec);
        self.stats.classes_found = self.classes.len();
        (i, true)
    }

    /// Class records sorted by canonical key, the order reports use.
    pub fn sorted_classes(&self) -> Vec<&ClassRecord> {
        let mut refs: Vec<&ClassRecord> = self.classes.iter().collect();
        refs.sort_by(|a, b| a.key.cmp(&b.key));
        refs
    }
}

struct Candidate {
    key: CanonicalKey,
    graph: Graph,
    params: SrgParams,
    parent: u128,
    via: VertexSet,
}

fn class_record_for(
    g: &Graph,
    params: SrgParams,
    parent: Option<u128>,
    via: Option<VertexSet>,
    cap: usize,
) -> Result<(ClassRecord, Graph)> {
    let form = canonical_form_capped(g, cap)?;
    let canon = form.canonical_graph(g);
    let rec = ClassRecord {
        digest: form.digest,
        key: form.key,
        graph6: graph6::encode(&canon),
        params,
        parent,
        via,
    };
    Ok((rec, canon))
}

fn seed_spectrum(seed: &Graph) -> Result<SrgSpectrum> {
    let params = match verify_srg(seed) {
        SrgClass::PrimitiveSrg(p) => p,
        other => {
            return Err(Error::Precondition(format!(
                "closure seed is not a primitive strongly regular graph ({other:?})"
            )))
        }
    };
    let s = derive_spectrum(&params)?;
    if !s.switchable {
        return Err(Error::Precondition(format!(
            "seed parameters {params} do not satisfy v = 2(k - theta1)"
        )));
    }
    Ok(s)
}

/// Switching closure from a seed: breadth-first over isomorphism classes,
/// enumerating qualifying sets per class, switching, verifying the
/// parameters, and inserting canonically-new classes into the frontier.
pub fn closure(
    seed: &Graph,
    strategy: &SetStrategy,
    limits: &ClosureLimits,
) -> Result<ClosureState> {
    let s = seed_spectrum(seed)?;
    let deadline = limits.max_seconds.map(|m| Deadline {
        start: Instant::now(),
        max_seconds: m,
    });
    let mut state = ClosureState::new();
    let (seed_rec, seed_canon) = class_record_for(seed, s.params, None, None, limits.vertex_cap)?;
    let seed_digest = seed_rec.digest;
    state.insert(seed_rec);
    if let Some(cap) = limits.max_graphs {
        if state.classes.len() >= cap {
            state.truncated = Some(format!("class limit {cap} hit"));
            return Ok(state);
        }
    }
    let mut frontier: Vec<(u128, Graph)> = vec![(seed_digest, seed_canon)];

    while !frontier.is_empty() && state.truncated.is_none() {
        let results = process_level(&frontier, &s, strategy, limits, deadline.as_ref())?;
        let mut next: Vec<(u128, Graph)> = Vec::new();
        for level in &results {
            state.stats.graphs_visited += 1;
            state.stats.sets_tried += level.sets_tried;
            if level.hit_deadline && state.truncated.is_none() {
                state.truncated = Some(format!(
                    "wall-clock limit of {}s hit",
                    limits.max_seconds.unwrap_or(0)
                ));
            }
        }
        'merge: for level in results {
            for cand in level.candidates {
                let rec = ClassRecord {
                    digest: cand.key.digest(),
                    key: cand.key,
                    graph6: graph6::encode(&cand.graph),
                    params: cand.params,
                    parent: Some(cand.parent),
                    via: Some(cand.via),
                };
                let digest = rec.digest;
                let graph = cand.graph;
                let (_, fresh) = state.insert(rec);
                if fresh {
                    next.push((digest, graph));
                    if let Some(cap) = limits.max_graphs {
                        if state.classes.len() >= cap {
                            state.truncated = Some(format!("class limit {cap} hit"));
                            break 'merge;
                        }
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(state)
}

struct LevelResult {
    candidates: Vec<Candidate>,
    sets_tried: u64,
    hit_deadline: bool,
}

fn process_level(
    frontier: &[(u128, Graph)],
    s: &SrgSpectrum,
    strategy: &SetStrategy,
    limits: &ClosureLimits,
    deadline: Option<&Deadline>,
) -> Result<Vec<LevelResult>> {
    let threads = limits.threads.max(1).min(frontier.len());
    if threads <= 1 {
        return frontier
            .iter()
            .map(|item| process_item(item, s, strategy, limits, deadline))
            .collect();
    }
    let mut slots: Vec<Option<Result<LevelResult>>> = Vec::new();
    slots.resize_with(frontier.len(), || None);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            handles.push(scope.spawn(move || {
                let mut out: Vec<(usize, Result<LevelResult>)> = Vec::new();
                let mut i = t;
                while i < frontier.len() {
                    out.push((i, process_item(&frontier[i], s, strategy, limits, deadline)));
                    i += threads;
                }
                out
            }));
        }
        for handle in handles {
            for (i, res) in handle.join().expect("closure worker panicked") {
                slots[i] = Some(res);
            }
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.expect("every frontier item processed"))
        .collect()
}

fn process_item(
    item: &(u128, Graph),
    s: &SrgSpectrum,
    strategy: &SetStrategy,
    limits: &ClosureLimits,
    deadline: Option<&Deadline>,
) -> Result<LevelResult> {
    let (digest, graph) = item;
    let mut budget = Budget::new(limits.subset_budget);
    let mut candidates = Vec::new();
    let mut sets_tried = 0u64;
    let mut hit_deadline = false;

    let mut handle = |set: &VertexSet| -> Result<()> {
        sets_tried += 1;
        let switched = switch(graph, set)?;
        if verify_srg(&switched) != SrgClass::PrimitiveSrg(s.params) {
            debug_assert!(false, "a qualifying set produced the wrong classification");
            return Ok(());
        }
        let form = canonical_form_capped(&switched, limits.vertex_cap)?;
        candidates.push(Candidate {
            graph: form.canonical_graph(&switched),
            key: form.key,
            params: s.params,
            parent: *digest,
            via: set.clone(),
        });
        Ok(())
    };

    if limits.orbit_reduce {
        let sets = find_sets(graph, s, strategy, limits.subset_budget)?;
        let reps = orbit_reps(graph, &sets)?;
        for set in &reps {
            if let Some(d) = deadline {
                if d.expired() {
                    hit_deadline = true;
                    break;
                }
            }
            handle(set)?;
        }
    } else {
        enumerate_sets(graph, s, strategy, &mut budget, deadline, &mut handle)?;
        if deadline.is_some_and(|d| d.expired()) {
            hit_deadline = true;
        }
    }
    Ok(LevelResult {
        candidates,
        sets_tried,
        hit_deadline,
    })
}

/// Shifted-parameters search: enumerates the v/2-subsets inducing
/// (k - mu)-regular subgraphs of the seed, switches, and collects the
/// isomorphism classes of the shifted parameter set (v, k+c, lambda+c,
/// mu+c), c = v/2 - 2 mu.
pub fn closure_thm2(seed: &Graph, limits: &ClosureLimits) -> Result<ClosureState> {
    let s = seed_spectrum(seed)?;
    let v = s.params.v;
    let c = v as i64 / 2 - 2 * s.params.mu as i64;
    if c == 0 {
        return Err(Error::Precondition(
            "c = v/2 - 2 mu is zero: the shifted parameter set coincides with the original".into(),
        ));
    }
    let target = SrgParams::new(
        v,
        (s.params.k as i64 + c) as usize,
        (s.params.lambda as i64 + c) as usize,
        (s.params.mu as i64 + c) as usize,
    );
    let deadline = limits.max_seconds.map(|m| Deadline {
        start: Instant::now(),
        max_seconds: m,
    });
    let seed_form = canonical_form_capped(seed, limits.vertex_cap)?;
    let seed_digest = seed_form.digest;
    let mut state = ClosureState::new();
    state.stats.graphs_visited = 1;
    let mut budget = Budget::new(limits.subset_budget);
    let t = s.params.k - s.params.mu;
    let mut sets_tried = 0u64;
    let mut inserted: Vec<ClassRecord> = Vec::new();
    enumerate_regular_subsets(seed, v / 2, t, &mut budget, deadline.as_ref(), &mut |set| {
        sets_tried += 1;
        let switched = switch(seed, set)?;
        let class = verify_srg(&switched);
        if class.params() != Some(target) {
            debug_assert!(false, "a qualifying half-set produced the wrong parameters");
            return Ok(());
        }
        let (rec, _) = class_record_for(
            &switched,
            target,
            Some(seed_digest),
            Some(set.clone()),
            limits.vertex_cap,
        )?;
        inserted.push(rec);
        Ok(())
    })?;
    state.stats.sets_tried = sets_tried;
    for rec in inserted {
        state.insert(rec);
        if let Some(cap) = limits.max_graphs {
            if state.classes.len() >= cap {
                state.truncated = Some(format!("class limit {cap} hit"));
                break;
            }
        }
    }
    if deadline.is_some_and(|d| d.expired()) && state.truncated.is_none() {
        state.truncated = Some(format!(
            "wall-clock limit of {}s hit",
            limits.max_seconds.unwrap_or(0)
        ));
    }
    Ok(state)
}

/// Writes the classes as an append-only graph6 file plus the sidecar index,
/// both sorted by canonical key. The index schema (version 1) is one line
/// per class:
/// `v1 digest=<32 hex> keybits=<bits> params=<v,k,lambda,mu> parent=<32 hex | root> via=<comma list | ->`
pub fn write_closure(state: &ClosureState, g6_path: &str, idx_path: &str) -> Result<()> {
    let mut g6 =
        std::fs::File::create(g6_path).map_err(|e| Error::Io(format!("{g6_path}: {e}")))?;
    let mut idx =
        std::fs::File::create(idx_path).map_err(|e| Error::Io(format!("{idx_path}: {e}")))?;
    writeln!(idx, "# seidel closure index v1").map_err(Error::from)?;
    for rec in state.sorted_classes() {
        writeln!(g6, "{}", rec.graph6).map_err(Error::from)?;
        writeln!(idx, "{}", index_line(rec)).map_err(Error::from)?;
    }
    Ok(())
}

pub fn index_line(rec: &ClassRecord) -> String {
    let parent = rec
        .parent
        .map_or("root".to_string(), |d| format!("{d:032x}"));
    let via = rec.via.as_ref().map_or("-".to_string(), |s| {
        let idx: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        idx.join(",")
    });
    format!(
        "v1 digest={:032x} keybits={} params={},{},{},{} parent={} via={}",
        rec.digest,
        rec.key.bit_len(),
        rec.params.v,
        rec.params.k,
        rec.params.lambda,
        rec.params.mu,
        parent,
        via
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::families::{construct_named, pair_index, Family};

    fn spectrum_of(g: &Graph) -> SrgSpectrum {
        derive_spectrum(&verify_srg(g).params().unwrap()).unwrap()
    }

    #[test]
    fn clique_switch_sizes() {
        let s276 = derive_spectrum(&SrgParams::new(276, 140, 58, 84)).unwrap();
        assert_eq!(clique_switch_size(&s276).unwrap(), 6);
        let s28 = derive_spectrum(&SrgParams::new(28, 15, 6, 10)).unwrap();
        assert_eq!(clique_switch_size(&s28).unwrap(), 4);
        let s10 = derive_spectrum(&SrgParams::new(10, 6, 3, 4)).unwrap();
        assert_eq!(clique_switch_size(&s10).unwrap(), 4);
        let petersen = derive_spectrum(&SrgParams::new(10, 3, 0, 1)).unwrap();
        assert!(clique_switch_size(&petersen).is_err());
    }

    #[test]
    fn t5_cliques_are_the_five_stars() {
        let g = construct_named(&Family::Triangular, 5).unwrap();
        let s = spectrum_of(&g);
        let sets = find_sets(&g, &s, &SetStrategy::Cliques, 1_000_000).unwrap();
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|set| set.len() == 4));
        // Each clique is the star of pairs through one point; the
        // enumeration order is lexicographic, so star(0) comes first.
        let star0: Vec<usize> = (1..5).map(|b| pair_index(5, 0, b)).collect();
        assert_eq!(sets[0], VertexSet::from_indices(10, &star0).unwrap());
    }

    #[test]
    fn brute_4_on_t8c_is_exactly_the_4_cliques() {
        let g = construct_named(&Family::Triangular, 8)
            .unwrap()
            .complement();
        let s = spectrum_of(&g);
        let brute = find_sets(&g, &s, &SetStrategy::Brute { max_h: 4 }, 50_000_000).unwrap();
        let cliques = find_sets(&g, &s, &SetStrategy::Cliques, 50_000_000).unwrap();
        // A 3-regular graph on 4 vertices is K4, so the two agree; the
        // 4-cliques of the Kneser-style graph are the 105 perfect matchings
        // of the 8-set.
        let mut a = brute.clone();
        let mut b = cliques.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(a.len(), 105);
    }

    #[test]
    fn brute_zero_is_empty() {
        let g = construct_named(&Family::Triangular, 5).unwrap();
        let s = spectrum_of(&g);
        let sets = find_sets(&g, &s, &SetStrategy::Brute { max_h: 0 }, 1_000_000).unwrap();
        assert!(sets.is_empty());
    }

    #[test]
    fn budget_exceeded_names_the_count() {
        let g = construct_named(&Family::Triangular, 8)
            .unwrap()
            .complement();
        let s = spectrum_of(&g);
        match find_sets(&g, &s, &SetStrategy::Brute { max_h: 8 }, 100) {
            Err(Error::Resource(msg)) => assert!(msg.contains("budget")),
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn explicit_strategy_filters_through_thm1() {
        let g = construct_named(&Family::Triangular, 5).unwrap();
        let s = spectrum_of(&g);
        let star0 =
            VertexSet::from_indices(10, &(1..5).map(|b| pair_index(5, 0, b)).collect::<Vec<_>>())
                .unwrap();
        let junk = VertexSet::from_indices(10, &[0, 1]).unwrap();
        let sets = find_sets(
            &g,
            &s,
            &SetStrategy::Explicit(vec![star0.clone(), junk]),
            1000,
        )
        .unwrap();
        assert_eq!(sets, vec![star0]);
    }

    #[test]
    fn closure_of_t5_is_a_single_class() {
        let g = construct_named(&Family::Triangular, 5).unwrap();
        let state = closure(&g, &SetStrategy::Cliques, &ClosureLimits::default()).unwrap();
        assert_eq!(state.classes.len(), 1);
        assert!(state.truncated.is_none());
        assert!(state.stats.sets_tried >= 5);
    }

    #[test]
    fn closure_explicit_empty_set_keeps_the_seed() {
        let g = construct_named(&Family::Triangular, 5).unwrap();
        let strategy = SetStrategy::Explicit(vec![VertexSet::empty(10)]);
        let state = closure(&g, &strategy, &ClosureLimits::default()).unwrap();
        assert_eq!(state.classes.len(), 1);
        assert!(state.classes[0].parent.is_none());
    }

    #[test]
    fn closure_rejects_bad_seeds() {
        let petersen = construct_named(&Family::Triangular, 5)
            .unwrap()
            .complement();
        assert!(matches!(
            closure(&petersen, &SetStrategy::Cliques, &ClosureLimits::default()),
            Err(Error::Precondition(_))
        ));
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(closure(&c6, &SetStrategy::Cliques, &ClosureLimits::default()).is_err());
    }

    #[test]
    fn closure_truncation_reported() {
        let g = construct_named(&Family::Triangular, 8)
            .unwrap()
            .complement();
        let limits = ClosureLimits {
            max_graphs: Some(1),
            ..ClosureLimits::default()
        };
        let state = closure(&g, &SetStrategy::Cliques, &limits).unwrap();
        assert_eq!(state.classes.len(), 1);
        assert!(state.truncated.is_some());
    }

    #[test]
    fn closure_deadline_truncates_immediately() {
        // max_seconds = 0 expires before any set is tried, leaving just the
        // seed class and the truncation marker.
        let g = construct_named(&Family::Triangular, 5).unwrap();
        let limits = ClosureLimits {
            max_seconds: Some(0),
            ..ClosureLimits::default()
        };
        let state = closure(&g, &SetStrategy::Cliques, &limits).unwrap();
        assert_eq!(state.classes.len(), 1);
        assert!(state.truncated.unwrap().contains("wall-clock"));
    }

    #[test]
    fn closure_thm2_from_t5_gives_petersen() {
        let g = construct_named(&Family::Triangular, 5).unwrap();
        let state = closure_thm2(&g, &ClosureLimits::default()).unwrap();
        assert_eq!(state.classes.len(), 1);
        assert_eq!(state.classes[0].params, SrgParams::new(10, 3, 0, 1));
        let petersen = g.complement();
        let found = graph6::decode(&state.classes[0].graph6).unwrap();
        assert!(are_isomorphic(&petersen, &found).unwrap().is_some());
    }

    #[test]
    fn closure_thm2_rejects_non_switchable_seeds() {
        let petersen = construct_named(&Family::Triangular, 5)
            .unwrap()
            .complement();
        assert!(matches!(
            closure_thm2(&petersen, &ClosureLimits::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let g = construct_named(&Family::Clebsch, 16).unwrap().complement();
        let keys = |threads: usize| {
            let limits = ClosureLimits {
                threads,
                subset_budget: 10_000_000,
                ..ClosureLimits::default()
            };
            let state = closure(&g, &SetStrategy::Brute { max_h: 6 }, &limits).unwrap();
            state
                .sorted_classes()
                .iter()
                .map(|r| r.graph6.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(keys(1), keys(4));
    }

    #[test]
    fn index_lines_round_trip_the_digest() {
        let g = construct_named(&Family::Triangular, 5).unwrap();
        let state = closure(&g, &SetStrategy::Cliques, &ClosureLimits::default()).unwrap();
        let line = index_line(&state.classes[0]);
        assert!(line.starts_with("v1 digest="));
        assert!(line.contains("params=10,6,3,4"));
        assert!(line.contains("parent=root"));
    }
}
