//! Nested vertex levels `U_0 ⊇ U_1 ⊇ … ⊇ U_ℓ` over the 2-shadow of the
//! uncolored set, with heavy/light labels on the cross-level shadow edges.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::hypergraph::ShadowGraph;

const NOT_MEMBER: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LevelParams {
    pub sigma: f64,
    pub theta: f64,
    /// `Δ = 3θ + β/L`.
    pub delta_threshold: f64,
    pub tau: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionParams {
    pub n: usize,
    pub d: f64,
    pub q: usize,
    pub delta: f64,
    pub beta: f64,
    pub gamma: f64,
    pub l: f64,
    /// `K = d^{2/3-2δ} ln² d`; informational, the construction never reads it.
    pub k_param: f64,
    pub zeta: usize,
    pub closure_factor: usize,
    /// Levels stop once `|U_i| <= ln n`.
    pub termination: f64,
    pub level1: LevelParams,
    pub level2: LevelParams,
    /// Used for every level from the third on.
    pub level3: LevelParams,
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("invalid decomposition parameters: {0}")]
pub struct ParamError(pub String);

impl DecompositionParams {
    pub fn new(n: usize, d: f64, q: usize, delta: f64) -> Result<Self, ParamError> {
        if !(d > 1.0 && d.is_finite()) {
            return Err(ParamError(format!("need d > 1, got {d}")));
        }
        if q == 0 {
            return Err(ParamError("need q >= 1".into()));
        }
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(ParamError(format!("need delta > 0, got {delta}")));
        }
        if n == 0 {
            return Err(ParamError("need n >= 1".into()));
        }
        let e = std::f64::consts::E;
        let ln_d = d.ln();
        let l = 100.0;
        let beta = q as f64 / 3.0;
        let gamma = 14.0 * ln_d / q as f64;
        let level = |sigma: f64, theta: f64, tau: f64| LevelParams {
            sigma,
            theta,
            delta_threshold: 3.0 * theta + beta / l,
            tau,
        };
        let theta1 = e * d.powf(1.0 / 3.0 - delta) * ln_d * ln_d / 14.0;
        let theta2 = l / delta;
        let theta3 = 2.5;
        Ok(DecompositionParams {
            n,
            d,
            q,
            delta,
            beta,
            gamma,
            l,
            k_param: d.powf(2.0 / 3.0 - 2.0 * delta) * ln_d * ln_d,
            zeta: (2.0 / delta).ceil() as usize,
            closure_factor: 39,
            termination: (n as f64).ln(),
            level1: level(2.0 * gamma, theta1, theta1 / beta),
            level2: level(15.0 * e * ln_d.powi(3) / d.powf(1.0 + 3.0 * delta), theta2, theta2 / beta),
            level3: level(
                500.0 * l * e * ln_d.powi(3) / (delta * d.powf(5.0 / 3.0 + 4.0 * delta)),
                theta3,
                l * theta3 / beta,
            ),
        })
    }

    /// Parameters of level `i >= 1`.
    pub fn level(&self, i: usize) -> &LevelParams {
        match i {
            0 => panic!("level 0 has no parameters"),
            1 => &self.level1,
            2 => &self.level2,
            _ => &self.level3,
        }
    }

    /// `⌊4τγn⌋` at level 1 and `⌊2τσn⌋` at level 2.
    pub fn core_quota(&self, i: usize) -> usize {
        let p = self.level(i);
        let raw = match i {
            1 => 4.0 * p.tau * self.gamma * self.n as f64,
            2 => 2.0 * p.tau * p.sigma * self.n as f64,
            _ => panic!("core quota is defined for levels 1 and 2"),
        };
        if raw >= usize::MAX as f64 {
            usize::MAX
        } else {
            raw.floor() as usize
        }
    }

    /// `3β/L`, the degree threshold in the `A_i`/`B_i` recursion.
    pub fn chain_threshold(&self) -> f64 {
        3.0 * self.beta / self.l
    }

    /// Most heavy neighbours a vertex of `U_1` or `U_2` may have below it.
    pub fn heavy_cap(&self) -> f64 {
        3.0 * self.beta / 50.0
    }

    /// Most neighbours a vertex of `U_i \ U_{i+1}` may have in `U_i`.
    pub fn neighbour_cap(&self) -> f64 {
        self.beta / 3.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeLabel {
    Heavy,
    Light,
    /// Both ends in `U_ℓ`.
    Internal,
    /// Both ends in the same `U_i \ U_{i+1}`, `i < ℓ`.
    Rest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chain {
    /// `A_0 … A_ζ`, each ascending.
    pub a: Vec<Vec<u32>>,
    /// `B_0 … B_ζ`, each ascending.
    pub b: Vec<Vec<u32>>,
    /// `N(B_ζ) ∩ A_ζ`.
    pub y: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Construction {
    /// Levels 1 and 2: top-degree core plus the chain remainder.
    Chain(Chain),
    /// Levels from 3 on: degree-threshold seeds plus the closure vertices in
    /// the order they were added.
    Closure { seeds: Vec<u32>, added: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Level {
    /// `U_i`, ascending.
    pub members: Vec<u32>,
    /// `U_{i,a}` at levels 1 and 2, `U_i'` from level 3 on.
    pub core: Vec<u32>,
    pub construction: Option<Construction>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Decomposition {
    params: DecompositionParams,
    levels: Vec<Level>,
    /// Every shadow edge once, `(x, y)` with `x < y`, ascending.
    labels: Vec<((u32, u32), EdgeLabel)>,
    /// Vertices of the cycle inside `U_ℓ`, ascending, if there is one.
    cycle: Option<Vec<u32>>,
    #[serde(skip)]
    depth: Vec<u32>,
}

impl Decomposition {
    /// Assembles a decomposition from explicit levels and labels; used to
    /// examine hand-made or deliberately broken decompositions.
    pub fn from_parts(
        params: DecompositionParams,
        g: &ShadowGraph,
        levels: Vec<Level>,
        labels: Vec<((u32, u32), EdgeLabel)>,
    ) -> Self {
        let depth = depths(g.vertex_space(), &levels);
        let mut labels = labels;
        labels.sort_unstable();
        let top = &levels.last().expect("at least one level").members;
        let cycle = find_cycle(g, top);
        Decomposition { params, levels, labels, cycle, depth }
    }

    pub fn params(&self) -> &DecompositionParams {
        &self.params
    }

    /// `ℓ`.
    pub fn ell(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn level_set(&self, i: usize) -> &[u32] {
        &self.levels[i].members
    }

    /// Largest `i` with `v ∈ U_i`, or `None` outside `U_0`.
    pub fn depth(&self, v: u32) -> Option<usize> {
        match self.depth.get(v as usize) {
            Some(&d) if d != NOT_MEMBER => Some(d as usize),
            _ => None,
        }
    }

    pub fn labels(&self) -> &[((u32, u32), EdgeLabel)] {
        &self.labels
    }

    pub fn label(&self, x: u32, y: u32) -> Option<EdgeLabel> {
        let key = (x.min(y), x.max(y));
        self.labels.binary_search_by_key(&key, |&(k, _)| k).ok().map(|i| self.labels[i].1)
    }

    pub fn cycle(&self) -> Option<&[u32]> {
        self.cycle.as_deref()
    }

    /// Edges of `Φ`: the light edges and the edges inside `U_ℓ`.
    pub fn phi_edges(&self) -> Vec<(u32, u32)> {
        self.labels
            .iter()
            .filter(|(_, l)| matches!(l, EdgeLabel::Light | EdgeLabel::Internal))
            .map(|&(e, _)| e)
            .collect()
    }

    pub fn count(&self, label: EdgeLabel) -> usize {
        self.labels.iter().filter(|(_, l)| *l == label).count()
    }

    /// Canonical JSON form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serializes")
    }
}

fn depths(space: usize, levels: &[Level]) -> Vec<u32> {
    let mut depth = vec![NOT_MEMBER; space];
    for (i, level) in levels.iter().enumerate() {
        for &v in &level.members {
            depth[v as usize] = i as u32;
        }
    }
    depth
}

/// The unique cycle of `G[top]` when its cyclomatic number is exactly one.
pub(crate) fn find_cycle(g: &ShadowGraph, top: &[u32]) -> Option<Vec<u32>> {
    let inside = set_of(g.vertex_space(), top);
    let mut degree: Vec<usize> = top.iter().map(|&v| g.degree_into(v, &inside)).collect();
    if cyclomatic_number(g, top) != 1 {
        return None;
    }
    // Peel vertices of degree <= 1; the unicyclic component's cycle remains.
    let index = |v: u32| top.binary_search(&v).expect("member of top level");
    let mut alive = inside.clone();
    let mut stack: Vec<u32> = top.iter().copied().filter(|&v| degree[index(v)] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive.remove(v) {
            continue;
        }
        for &w in g.neighbors(v) {
            if alive.contains(w) {
                let i = index(w);
                degree[i] -= 1;
                if degree[i] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    Some(alive.iter().collect())
}

/// `|E(G[set])| - |set| + components`.
pub fn cyclomatic_number(g: &ShadowGraph, set: &[u32]) -> usize {
    let inside = set_of(g.vertex_space(), set);
    let mut seen = VertexSet::new(g.vertex_space());
    let mut components = 0;
    let mut edges = 0;
    for &s in set {
        edges += g.degree_into(s, &inside);
        if seen.insert(s) {
            components += 1;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if inside.contains(w) && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
    }
    edges / 2 + components - set.len()
}

fn set_of(space: usize, vertices: &[u32]) -> VertexSet {
    let mut s = VertexSet::new(space);
    for &v in vertices {
        s.insert(v);
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} {}", c.name, if c.holds { "ok" } else { "FAIL" })?;
            if let Some(w) = &c.witness {
                write!(f, " ({w})")?;
            }
        }
        Ok(())
    }
}

fn check(name: &'static str, witness: Option<String>) -> PropertyCheck {
    PropertyCheck { name, holds: witness.is_none(), witness }
}

/// Checks the structural contract (`labels`) and P1–P5 on `dec` against the
/// shadow graph it was built from. Each failure names a witness.
pub fn verify_properties(dec: &Decomposition, g: &ShadowGraph) -> PropertyReport {
    let p = dec.params();
    let ell = dec.ell();
    let depth = |v: u32| dec.depth(v);

    let structure = (|| {
        if dec.level_set(0) != g.universe() {
            return Some("U_0 differs from the shadow graph's vertex set".to_string());
        }
        for i in 1..=ell {
            let outer = set_of(g.vertex_space(), dec.level_set(i - 1));
            if let Some(&v) = dec.level_set(i).iter().find(|&&v| !outer.contains(v)) {
                return Some(format!("vertex {v} in U_{i} but not in U_{}", i - 1));
            }
        }
        if dec.labels().len() != g.edge_count() {
            return Some(format!("{} labels for {} shadow edges", dec.labels().len(), g.edge_count()));
        }
        for (&((x, y), label), (ex, ey)) in dec.labels().iter().zip(g.edges()) {
            if (x, y) != (ex, ey) {
                return Some(format!("label on {{{x},{y}}} which is not a shadow edge"));
            }
            let (dx, dy) = (depth(x).unwrap_or(0), depth(y).unwrap_or(0));
            let fits = match label {
                EdgeLabel::Heavy | EdgeLabel::Light => dx != dy,
                EdgeLabel::Internal => dx == ell && dy == ell,
                EdgeLabel::Rest => dx == dy && dx < ell,
            };
            if !fits {
                return Some(format!("edge {{{x},{y}}} labelled {label:?} at depths {dx}, {dy}"));
            }
        }
        None
    })();

    let mut p1 = None;
    let mut p4 = None;
    for &v in g.universe() {
        let i = depth(v).unwrap_or(0);
        if i >= ell {
            continue;
        }
        let nbrs = g.neighbors(v);
        let light_up = nbrs
            .iter()
            .filter(|&&w| depth(w).unwrap_or(0) > i && dec.label(v, w) == Some(EdgeLabel::Light))
            .count();
        if light_up > 1 && p1.is_none() {
            p1 = Some(format!("vertex {v} of level {i} has {light_up} light neighbours above it"));
        }
        let inside = nbrs.iter().filter(|&&w| depth(w).unwrap_or(0) >= i).count();
        if inside as f64 > p.neighbour_cap() && p4.is_none() {
            p4 = Some(format!("vertex {v} of level {i} has {inside} neighbours in U_{i} (cap {:.3})", p.neighbour_cap()));
        }
    }

    let mut p2 = None;
    let mut p3 = None;
    for &((x, y), label) in dec.labels() {
        let (dx, dy) = (depth(x).unwrap_or(0), depth(y).unwrap_or(0));
        if dx == dy {
            continue;
        }
        let lower = dx.min(dy);
        if lower + 1 >= 3 && label != EdgeLabel::Light && p2.is_none() {
            p2 = Some(format!("edge {{{x},{y}}} crosses into U_{} but is {label:?}", lower + 1));
        }
    }
    for &v in g.universe() {
        let i = depth(v).unwrap_or(0);
        for level in 1..=i.min(2) {
            let heavy = g
                .neighbors(v)
                .iter()
                .filter(|&&w| depth(w).unwrap_or(0) == level - 1 && dec.label(v, w) == Some(EdgeLabel::Heavy))
                .count();
            if heavy as f64 > p.heavy_cap() && p3.is_none() {
                p3 = Some(format!(
                    "vertex {v} of U_{level} has {heavy} heavy neighbours in U_{} \\ U_{level} (cap {:.3})",
                    level - 1,
                    p.heavy_cap()
                ));
            }
        }
    }

    let top = dec.level_set(ell);
    let cyc = cyclomatic_number(g, top);
    let p5 = (cyc > 1).then(|| format!("G[U_{ell}] has cyclomatic number {cyc}"));

    PropertyReport {
        checks: vec![
            check("labels", structure),
            check("P1", p1),
            check("P2", p2),
            check("P3", p3),
            check("P4", p4),
            check("P5", p5),
        ],
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BuildFailure {
    pub reason: String,
    /// Level at which construction stopped.
    pub level: usize,
    /// Present when the construction finished but its output failed verification.
    pub report: Option<PropertyReport>,
}

impl fmt::Display for BuildFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "decomposition failed at level {}: {}", self.level, self.reason)?;
        if let Some(r) = &self.report {
            write!(f, " [{r}]")?;
        }
        Ok(())
    }
}

impl std::error::Error for BuildFailure {}

/// Builds the level sequence on `g` (the shadow of the uncolored set) and
/// verifies its own output.
pub fn build_decomposition(g: &ShadowGraph, params: &DecompositionParams) -> Result<Decomposition, BuildFailure> {
    let space = g.vertex_space();
    let mut levels = vec![Level { members: g.universe().to_vec(), core: Vec::new(), construction: None }];
    while levels.last().expect("nonempty").members.len() as f64 > params.termination {
        let i = levels.len();
        let prev = &levels[i - 1].members;
        let prev_set = set_of(space, prev);
        let level = if i <= 2 {
            chain_level(g, params, i, prev, &prev_set)
        } else {
            let level = closure_level(g, params, prev, &prev_set).map_err(|reason| BuildFailure {
                reason,
                level: i,
                report: None,
            })?;
            if level.members.len() == prev.len() {
                return Err(BuildFailure {
                    reason: format!("no vertex leaves U_{} (|U_{}| = {})", i - 1, i - 1, prev.len()),
                    level: i,
                    report: None,
                });
            }
            level
        };
        levels.push(level);
    }

    let depth = depths(space, &levels);
    let ell = levels.len() - 1;
    let exits: Vec<Option<(Vec<u32>, &Chain)>> = levels
        .iter()
        .map(|l| match &l.construction {
            Some(Construction::Chain(c)) => Some((exit_levels(space, c), c)),
            _ => None,
        })
        .collect();
    let labels = g
        .edges()
        .map(|(x, y)| {
            let (dx, dy) = (depth[x as usize], depth[y as usize]);
            let label = if dx == dy {
                if dx as usize == ell {
                    EdgeLabel::Internal
                } else {
                    EdgeLabel::Rest
                }
            } else {
                let (lower, upper) = if dx < dy { (x, y) } else { (y, x) };
                let t = depth[lower as usize] as usize + 1;
                match &exits[t] {
                    Some((exit, chain)) => {
                        let e = exit[lower as usize] as usize;
                        if chain.b[e].binary_search(&upper).is_ok() {
                            EdgeLabel::Light
                        } else {
                            EdgeLabel::Heavy
                        }
                    }
                    None => EdgeLabel::Light,
                }
            };
            ((x, y), label)
        })
        .collect();

    let dec = Decomposition::from_parts(params.clone(), g, levels, labels);
    let report = verify_properties(&dec, g);
    if report.all_hold() {
        Ok(dec)
    } else {
        let failed = report.first_failure().expect("some check failed");
        Err(BuildFailure { reason: format!("{} does not hold", failed.name), level: ell, report: Some(report) })
    }
}

/// Largest `j` with `v ∈ A_j`, for `v ∈ A_0`.
fn exit_levels(space: usize, chain: &Chain) -> Vec<u32> {
    let mut exit = vec![0u32; space];
    for (j, a) in chain.a.iter().enumerate() {
        for &v in a {
            exit[v as usize] = j as u32;
        }
    }
    exit
}

fn chain_level(g: &ShadowGraph, params: &DecompositionParams, i: usize, prev: &[u32], prev_set: &VertexSet) -> Level {
    let space = g.vertex_space();
    let quota = params.core_quota(i).min(prev.len());
    let mut ranked: Vec<(usize, u32)> = prev.iter().map(|&v| (g.degree_into(v, prev_set), v)).collect();
    ranked.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut core: Vec<u32> = ranked[..quota].iter().map(|&(_, v)| v).collect();
    core.sort_unstable();
    let core_set = set_of(space, &core);

    let threshold = params.chain_threshold();
    let mut a_sets = vec![prev.iter().copied().filter(|&v| !core_set.contains(v)).collect::<Vec<_>>()];
    let a0 = set_of(space, &a_sets[0]);
    let mut b_sets = vec![core.iter().copied().filter(|&v| g.degree_into(v, &a0) as f64 >= threshold).collect::<Vec<_>>()];
    for _ in 1..=params.zeta {
        let b_prev = set_of(space, b_sets.last().expect("nonempty"));
        let a: Vec<u32> = a_sets.last().expect("nonempty").iter().copied().filter(|&v| g.degree_into(v, &b_prev) >= 2).collect();
        let a_set = set_of(space, &a);
        let b: Vec<u32> = b_sets
            .last()
            .expect("nonempty")
            .iter()
            .copied()
            .filter(|&v| g.degree_into(v, &a_set) as f64 >= threshold)
            .collect();
        a_sets.push(a);
        b_sets.push(b);
    }
    let b_last = set_of(space, b_sets.last().expect("nonempty"));
    let y: Vec<u32> = a_sets.last().expect("nonempty").iter().copied().filter(|&v| g.degree_into(v, &b_last) > 0).collect();
    let mut members = core.clone();
    members.extend_from_slice(&y);
    members.sort_unstable();
    Level { members, core, construction: Some(Construction::Chain(Chain { a: a_sets, b: b_sets, y })) }
}

fn closure_level(
    g: &ShadowGraph,
    params: &DecompositionParams,
    prev: &[u32],
    prev_set: &VertexSet,
) -> Result<Level, String> {
    let space = g.vertex_space();
    let cut = 3.0 * params.level3.delta_threshold;
    let seeds: Vec<u32> = prev.iter().copied().filter(|&v| g.degree_into(v, prev_set) as f64 >= cut).collect();
    let mut inside = set_of(space, &seeds);
    let mut count = vec![0u32; space];
    let mut eligible = BTreeSet::new();
    for &s in &seeds {
        for &w in g.neighbors(s) {
            if prev_set.contains(w) && !inside.contains(w) {
                count[w as usize] += 1;
                if count[w as usize] == 2 {
                    eligible.insert(w);
                }
            }
        }
    }
    let limit = params.closure_factor * seeds.len();
    let mut added = Vec::new();
    while let Some(y) = eligible.pop_first() {
        if added.len() == limit {
            return Err(format!("closure exceeded {} x |U'| = {limit} vertices", params.closure_factor));
        }
        inside.insert(y);
        added.push(y);
        for &w in g.neighbors(y) {
            if prev_set.contains(w) && !inside.contains(w) {
                count[w as usize] += 1;
                if count[w as usize] == 2 {
                    eligible.insert(w);
                }
            }
        }
    }
    let members: Vec<u32> = inside.iter().collect();
    Ok(Level { members, core: seeds.clone(), construction: Some(Construction::Closure { seeds, added }) })
}
