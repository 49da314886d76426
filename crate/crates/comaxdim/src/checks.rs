//! Closed-form predictions per ring regime, and the executable checks
//! comparing every predicted quantity with its computed counterpart.
//!
//! Each check is an independent pass/fail record; a check whose
//! hypothesis the ring does not satisfy reports `NotApplicable` rather
//! than silently passing. Checks never trust one another's conclusions:
//! each one recomputes what it needs from the graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::comaximal::{self, Component, DerivedGraphs};
use crate::graph::{display_distance, Graph};
use crate::ring::{Ideal, RingSpec};
use crate::solver::{self, CoverSolution, SdimMethod, SdimResult};
use crate::srg::{self, SrGraph};
use crate::{Caps, Error, OracleMode, Result};

/// Brute-force metric dimension is only attempted below this vertex count.
const DIM_GATE: usize = 20;

/// Structural family of a ring, which selects the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// Two components, both fields.
    ReducedPair,
    /// Three or more components, all fields.
    ReducedMany,
    /// Two or more components, none a field.
    AllNonField,
    /// At least one field and at least one non-field component.
    Mixed,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::ReducedPair => "reduced-pair",
            Regime::ReducedMany => "reduced-many",
            Regime::AllNonField => "all-non-field",
            Regime::Mixed => "mixed",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classify a ring with at least two components.
pub fn regime(spec: &RingSpec) -> Result<Regime> {
    if spec.n_components() < 2 {
        return Err(Error::EmptyGraph(format!(
            "ring {spec} has no vertices; at least two components are needed"
        )));
    }
    let n = spec.n_nonfields();
    let m = spec.m_fields();
    Ok(match (n, m) {
        (0, 2) => Regime::ReducedPair,
        (0, _) => Regime::ReducedMany,
        (_, 0) => Regime::AllNonField,
        _ => Regime::Mixed,
    })
}

/// Closed-form strong metric dimension of the co-maximal ideal graph.
pub fn predicted_sdim(spec: &RingSpec) -> Result<u128> {
    let n = spec.n_nonfields() as u128;
    let m = spec.m_fields() as u128;
    let v = spec.vertex_count()?;
    let out = match regime(spec)? {
        Regime::ReducedPair => Some(1),
        Regime::ReducedMany => {
            // 2^m - 2m with m components, all fields.
            1u128
                .checked_shl(m as u32)
                .and_then(|p| p.checked_sub(2 * m))
        }
        Regime::AllNonField => v.checked_add(2).and_then(|x| x.checked_sub(2 * n)),
        Regime::Mixed => v
            .checked_add(2)
            .and_then(|x| x.checked_sub(2 * n))
            .and_then(|x| x.checked_sub(2 * m)),
    };
    out.ok_or(Error::Overflow("closed-form strong metric dimension"))
}

/// Closed-form independence number of the strong resolving graph.
pub fn predicted_srg_independence(spec: &RingSpec) -> Result<u128> {
    let n = spec.n_nonfields() as u128;
    let m = spec.m_fields() as u128;
    Ok(match regime(spec)? {
        Regime::ReducedPair => 1,
        Regime::ReducedMany => m - 2,
        Regime::AllNonField => 2 * n - 2,
        Regime::Mixed => 2 * n + m - 2,
    })
}

/// Maximal ideals whose lowered component is a field; exactly the
/// vertices predicted to fall outside the boundary in the mixed regime.
pub fn field_maximal_ideals(spec: &RingSpec) -> Vec<Ideal> {
    let lengths = spec.lengths();
    (0..lengths.len())
        .filter(|&i| lengths[i] == 1)
        .map(|i| {
            let levels: Vec<u32> = lengths
                .iter()
                .enumerate()
                .map(|(j, &k)| if j == i { k - 1 } else { k })
                .collect();
            spec.ideal(&levels).expect("levels are within bounds")
        })
        .collect()
}

/// Predicted boundary of the co-maximal ideal graph, as indices into the
/// ascending vertex list.
pub fn predicted_boundary(spec: &RingSpec, vertices: &[Ideal]) -> Result<Vec<usize>> {
    let excluded: BTreeSet<Ideal> = match regime(spec)? {
        Regime::ReducedPair | Regime::AllNonField => BTreeSet::new(),
        Regime::ReducedMany => spec.maximal_ideals().into_iter().collect(),
        Regime::Mixed => field_maximal_ideals(spec).into_iter().collect(),
    };
    Ok((0..vertices.len())
        .filter(|&i| !excluded.contains(&vertices[i]))
        .collect())
}

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The ring does not satisfy the check's hypothesis.
    NotApplicable,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not-applicable",
        })
    }
}

/// One verified identity: what was predicted, what was computed, and how.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub status: CheckStatus,
    pub expected: String,
    pub computed: String,
    pub evidence: String,
}

impl TheoremCheck {
    fn pass(id: &'static str, expected: String, computed: String, evidence: String) -> Self {
        TheoremCheck {
            id,
            status: CheckStatus::Pass,
            expected,
            computed,
            evidence,
        }
    }

    fn graded(
        id: &'static str,
        ok: bool,
        expected: String,
        computed: String,
        evidence: String,
    ) -> Self {
        TheoremCheck {
            id,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            expected,
            computed,
            evidence,
        }
    }

    fn not_applicable(id: &'static str, reason: String) -> Self {
        TheoremCheck {
            id,
            status: CheckStatus::NotApplicable,
            expected: String::new(),
            computed: String::new(),
            evidence: reason,
        }
    }
}

/// Stable ids of every check, in report order.
pub const CHECK_IDS: [&str; 11] = [
    "gamma-diameter",
    "distance-trichotomy",
    "same-class-twins",
    "isolated-vertices",
    "component-decomposition",
    "srg-identity",
    "boundary-set",
    "srg-beta",
    "gallai-identity",
    "sdim-formula",
    "dim-le-sdim",
];

/// Everything computed for one ring: graphs, solver results, and checks.
#[derive(Debug)]
pub struct RingAnalysis {
    pub spec: RingSpec,
    pub regime: Regime,
    pub derived: DerivedGraphs,
    pub srg: SrGraph,
    /// Exact cover/independence solution on the strong resolving graph.
    pub cover: CoverSolution,
    /// Pipeline result; witness indices refer to the base graph.
    pub sdim: SdimResult,
    /// Brute-force result when the oracle ran.
    pub oracle_sdim: Option<SdimResult>,
    pub gamma_diameter: u32,
    pub checks: Vec<TheoremCheck>,
}

impl RingAnalysis {
    /// Every executed check passed (not-applicable checks do not count).
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.id)
            .collect()
    }
}

/// Build all graphs for a ring, solve exactly, and run every check.
pub fn analyze_ring(spec: &RingSpec, caps: &Caps, oracle: OracleMode) -> Result<RingAnalysis> {
    let regime = regime(spec)?;
    let derived = comaximal::build_derived(spec, caps)?;
    let sr = srg::build_srg(&derived.gamma)?;
    let cover = solver::max_independent_set(&sr.graph, caps)?;
    let witness: Vec<usize> = cover
        .cover_witness
        .iter()
        .map(|&i| sr.base_indices[i])
        .collect();
    let sdim = SdimResult {
        value: cover.beta,
        witness,
        method: SdimMethod::SrgCover,
    };
    let oracle_sdim = if oracle.should_run(derived.gamma.vertex_count(), caps)? {
        Some(solver::sdim_bruteforce(&derived.gamma, caps)?)
    } else {
        None
    };
    let gamma_diameter = derived.gamma.diameter()?;
    let checks = run_checks(
        spec,
        regime,
        &derived,
        &sr,
        &cover,
        &sdim,
        oracle_sdim.as_ref(),
        caps,
    )?;
    Ok(RingAnalysis {
        spec: spec.clone(),
        regime,
        derived,
        srg: sr,
        cover,
        sdim,
        oracle_sdim,
        gamma_diameter,
        checks,
    })
}

fn labels(g: &Graph, indices: &[usize]) -> String {
    const SHOWN: usize = 6;
    let mut parts: Vec<&str> = indices.iter().take(SHOWN).map(|&i| g.label(i)).collect();
    if indices.len() > SHOWN {
        parts.push("...");
    }
    parts.join(", ")
}

/// Run every check against one analyzed ring.
#[allow(clippy::too_many_arguments)]
pub fn run_checks(
    spec: &RingSpec,
    regime: Regime,
    derived: &DerivedGraphs,
    sr: &SrGraph,
    cover: &CoverSolution,
    sdim: &SdimResult,
    oracle_sdim: Option<&SdimResult>,
    caps: &Caps,
) -> Result<Vec<TheoremCheck>> {
    let mut out = Vec::with_capacity(CHECK_IDS.len());
    out.push(check_gamma_diameter(derived)?);
    out.push(check_distance_trichotomy(spec, regime, derived, sr)?);
    out.push(check_same_class_twins(spec, derived)?);
    out.push(check_isolated_vertices(spec, regime, derived)?);
    out.push(check_component_decomposition(spec, derived)?);
    out.push(check_srg_identity(regime, derived, sr)?);
    out.push(check_boundary_set(spec, derived, sr)?);
    out.push(check_srg_beta(spec, regime, derived, sr, cover)?);
    out.push(check_gallai_identity(sr, cover));
    out.push(check_sdim_formula(spec, derived, sdim, oracle_sdim)?);
    out.push(check_dim_le_sdim(derived, sdim, caps)?);
    debug_assert_eq!(
        out.iter().map(|c| c.id).collect::<Vec<_>>(),
        CHECK_IDS.to_vec()
    );
    Ok(out)
}

/// The base graph is connected with diameter at most three.
fn check_gamma_diameter(derived: &DerivedGraphs) -> Result<TheoremCheck> {
    let connected = derived.gamma.is_connected();
    let diam = derived.gamma.diameter()?;
    let ok = connected && diam <= 3;
    Ok(TheoremCheck::graded(
        "gamma-diameter",
        ok,
        "connected, diameter <= 3".into(),
        format!("connected = {connected}, diameter = {}", display_distance(diam)),
        format!("{} vertices, {} edges", derived.gamma.vertex_count(), derived.gamma.edge_count()),
    ))
}

/// Distances in a reduced ring are determined by the ideal lattice:
/// 1 iff comaximal, 2 iff nonzero meet and not comaximal, 3 iff zero meet
/// and not comaximal; and comparable or comaximal pairs are never mutually
/// maximally distant.
fn check_distance_trichotomy(
    spec: &RingSpec,
    regime: Regime,
    derived: &DerivedGraphs,
    sr: &SrGraph,
) -> Result<TheoremCheck> {
    const ID: &str = "distance-trichotomy";
    if !matches!(regime, Regime::ReducedPair | Regime::ReducedMany) {
        return Ok(TheoremCheck::not_applicable(
            ID,
            "the lattice distance characterization assumes a product of fields".into(),
        ));
    }
    let g = &derived.gamma;
    let n = g.vertex_count();
    let zero = spec.zero_ideal();
    let mmd: BTreeSet<(usize, usize)> = sr.mmd_pairs.iter().copied().collect();
    // In a complete graph every pair is mutually maximally distant, so the
    // exclusion below only constrains graphs with a non-adjacent pair.
    let exclusion_applies = !g.is_complete();
    let mut pairs = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            pairs += 1;
            let (a, b) = (&derived.vertices[u], &derived.vertices[v]);
            let comaximal = spec.covers(a, b);
            let meet_nonzero = spec.ideal_meet(a, b)? != zero;
            let d = g.dist(u, v);
            let expected = if comaximal {
                1
            } else if meet_nonzero {
                2
            } else {
                3
            };
            if d != expected {
                return Ok(TheoremCheck::graded(
                    ID,
                    false,
                    format!("d({}, {}) = {expected}", g.label(u), g.label(v)),
                    format!("d = {}", display_distance(d)),
                    "lattice case analysis disagrees with BFS".into(),
                ));
            }
            if exclusion_applies && (!a.incomparable(b) || comaximal) && mmd.contains(&(u, v)) {
                return Ok(TheoremCheck::graded(
                    ID,
                    false,
                    format!(
                        "{} and {} must not be mutually maximally distant",
                        g.label(u),
                        g.label(v)
                    ),
                    "pair is mutually maximally distant".into(),
                    "comparable or comaximal pair".into(),
                ));
            }
        }
    }
    Ok(TheoremCheck::pass(
        ID,
        "distance = lattice case analysis for every pair".into(),
        "all pairs match".into(),
        format!("{pairs} pairs checked"),
    ))
}

/// Vertices in the same nil class are non-adjacent with equal open
/// neighborhoods, hence twins of the base graph.
fn check_same_class_twins(spec: &RingSpec, derived: &DerivedGraphs) -> Result<TheoremCheck> {
    const ID: &str = "same-class-twins";
    let g = &derived.gamma;
    let mut classes: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
    for (i, v) in derived.vertices.iter().enumerate() {
        classes
            .entry(spec.nil_class(v)?.mask().to_vec())
            .or_default()
            .push(i);
    }
    if classes.values().all(|c| c.len() < 2) {
        return Ok(TheoremCheck::not_applicable(
            ID,
            "every nil class is a singleton".into(),
        ));
    }
    let mut pairs = 0usize;
    for members in classes.values() {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                pairs += 1;
                let twin = !g.has_edge(u, v) && g.neighbors_bits(u) == g.neighbors_bits(v);
                if !twin {
                    return Ok(TheoremCheck::graded(
                        ID,
                        false,
                        format!(
                            "{} and {} non-adjacent with equal neighborhoods",
                            g.label(u),
                            g.label(v)
                        ),
                        format!(
                            "adjacent = {}, equal neighborhoods = {}",
                            g.has_edge(u, v),
                            g.neighbors_bits(u) == g.neighbors_bits(v)
                        ),
                        "same-class pair is not a twin pair".into(),
                    ));
                }
            }
        }
    }
    Ok(TheoremCheck::pass(
        ID,
        "same-class pairs are non-adjacent twins".into(),
        "all pairs match".into(),
        format!("{pairs} same-class pairs checked"),
    ))
}

fn sorted_indices_of(vertices: &[Ideal], wanted: &[Ideal]) -> Vec<usize> {
    let mut out: Vec<usize> = wanted
        .iter()
        .filter_map(|w| vertices.binary_search(w).ok())
        .collect();
    out.sort_unstable();
    out
}

/// Isolated vertices of the derived graphs are exactly the predicted
/// maximal ideals: all of them in the incomparability graph of a reduced
/// ring, none in the class graph of an all-non-field ring, and the
/// field-maximal ideals in the mixed regime.
fn check_isolated_vertices(
    spec: &RingSpec,
    regime: Regime,
    derived: &DerivedGraphs,
) -> Result<TheoremCheck> {
    const ID: &str = "isolated-vertices";
    let (graph_name, g, expected_ideals) = match regime {
        Regime::ReducedPair | Regime::ReducedMany => (
            "incomparability graph",
            &derived.gamma_star_star,
            spec.maximal_ideals(),
        ),
        Regime::AllNonField => ("class graph", &derived.gamma_prime, Vec::new()),
        Regime::Mixed => ("class graph", &derived.gamma_prime, field_maximal_ideals(spec)),
    };
    let expected = sorted_indices_of(&derived.vertices, &expected_ideals);
    if expected.len() != expected_ideals.len() {
        return Ok(TheoremCheck::graded(
            ID,
            false,
            format!("{} predicted isolated vertices", expected_ideals.len()),
            format!("{} of them are vertices", expected.len()),
            "a predicted ideal is not a vertex".into(),
        ));
    }
    let computed = g.isolated_vertices();
    let ok = computed == expected;
    Ok(TheoremCheck::graded(
        ID,
        ok,
        format!("isolated in {graph_name}: {{{}}}", labels(g, &expected)),
        format!("{{{}}}", labels(g, &computed)),
        format!("{} predicted, {} computed", expected.len(), computed.len()),
    ))
}

/// The class graph splits into one clique per ring component (the class
/// of ideals full everywhere else) plus, beyond two components, a single
/// connected remainder.
fn check_component_decomposition(
    spec: &RingSpec,
    derived: &DerivedGraphs,
) -> Result<TheoremCheck> {
    const ID: &str = "component-decomposition";
    let g = &derived.gamma_prime;
    let lengths = spec.lengths();
    let n_comp = lengths.len();

    // Class of component i: full level everywhere except a lower level at i.
    let class_of = |i: usize| -> Vec<usize> {
        derived
            .vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| {
                v.levels()
                    .iter()
                    .zip(&lengths)
                    .enumerate()
                    .all(|(j, (&l, &k))| if j == i { l < k } else { l == k })
            })
            .map(|(idx, _)| idx)
            .collect()
    };

    let components = comaximal::decompose_components(g);
    let mut claimed: BTreeSet<usize> = BTreeSet::new();
    for (i, &len) in lengths.iter().enumerate() {
        let class = class_of(i);
        if class.len() != len as usize {
            return Ok(TheoremCheck::graded(
                ID,
                false,
                format!("component-{i} class of size {len}"),
                format!("size {}", class.len()),
                "class size disagrees with the chain length".into(),
            ));
        }
        let found = components
            .iter()
            .find(|c| c.vertices == class && c.is_clique);
        if found.is_none() {
            return Ok(TheoremCheck::graded(
                ID,
                false,
                format!("{{{}}} forming a clique component", labels(g, &class)),
                "not a standalone clique component".into(),
                format!("component-{i} class"),
            ));
        }
        claimed.extend(class);
    }
    let rest: Vec<Component> = components
        .into_iter()
        .filter(|c| !claimed.contains(&c.vertices[0]))
        .collect();
    let shape_ok = if n_comp == 2 {
        rest.is_empty()
    } else {
        rest.len() == 1
    };
    let rest_desc = match rest.len() {
        0 => "no remainder".to_string(),
        1 => format!("one remainder component of {} vertices", rest[0].size),
        k => format!("{k} remainder components"),
    };
    Ok(TheoremCheck::graded(
        ID,
        shape_ok,
        format!(
            "{n_comp} class cliques plus {}",
            if n_comp == 2 { "no remainder" } else { "one connected remainder" }
        ),
        rest_desc,
        format!("chain lengths {:?}", lengths),
    ))
}

/// The strong resolving graph coincides with the predicted derived graph:
/// the base graph when complete, otherwise the class graph with isolated
/// vertices removed (which, for reduced rings, is the incomparability
/// graph with isolated vertices removed).
fn check_srg_identity(
    regime: Regime,
    derived: &DerivedGraphs,
    sr: &SrGraph,
) -> Result<TheoremCheck> {
    const ID: &str = "srg-identity";
    let predicted = if derived.gamma.is_complete() {
        derived.gamma.clone()
    } else {
        let keep: Vec<usize> = (0..derived.gamma_prime.vertex_count())
            .filter(|&v| derived.gamma_prime.degree(v) > 0)
            .collect();
        derived.gamma_prime.induced_subgraph(&keep)?
    };
    let mut ok = predicted == sr.graph;
    let mut evidence = format!(
        "{} vertices, {} edges",
        sr.graph.vertex_count(),
        sr.graph.edge_count()
    );
    if regime == Regime::Mixed {
        // The class-graph identity is extended to mixed rings by analogy
        // with the all-non-field case; this check verifies it directly.
        evidence.push_str("; class-graph identity extended by analogy and verified directly");
    }
    if matches!(regime, Regime::ReducedPair | Regime::ReducedMany) && derived.gamma_star != sr.graph
    {
        ok = false;
        evidence = "reduced identity with the trimmed incomparability graph fails".into();
    }
    Ok(TheoremCheck::graded(
        ID,
        ok,
        "strong resolving graph = predicted derived graph".into(),
        if ok {
            "graphs are label-identical".into()
        } else {
            format!(
                "predicted {} vertices / {} edges, computed {} / {}",
                predicted.vertex_count(),
                predicted.edge_count(),
                sr.graph.vertex_count(),
                sr.graph.edge_count()
            )
        },
        evidence,
    ))
}

/// The boundary (vertices mutually maximally distant with someone) is the
/// predicted set for the regime.
fn check_boundary_set(
    spec: &RingSpec,
    derived: &DerivedGraphs,
    sr: &SrGraph,
) -> Result<TheoremCheck> {
    const ID: &str = "boundary-set";
    let expected = predicted_boundary(spec, &derived.vertices)?;
    let ok = expected == sr.base_indices;
    let g = &derived.gamma;
    Ok(TheoremCheck::graded(
        ID,
        ok,
        format!("boundary of {} vertices", expected.len()),
        format!("{} vertices", sr.base_indices.len()),
        if ok {
            format!("boundary = {{{}}}", labels(g, &sr.base_indices))
        } else {
            let exp: BTreeSet<usize> = expected.iter().copied().collect();
            let got: BTreeSet<usize> = sr.base_indices.iter().copied().collect();
            let missing: Vec<usize> = exp.difference(&got).copied().collect();
            let extra: Vec<usize> = got.difference(&exp).copied().collect();
            format!(
                "missing {{{}}}, unexpected {{{}}}",
                labels(g, &missing),
                labels(g, &extra)
            )
        },
    ))
}

/// The independence number of the strong resolving graph matches the
/// closed form; for reduced rings with three or more components, the
/// nested-ideal family witnesses it and some maximum-independent-set
/// member has all but two components nonzero.
fn check_srg_beta(
    spec: &RingSpec,
    regime: Regime,
    derived: &DerivedGraphs,
    sr: &SrGraph,
    cover: &CoverSolution,
) -> Result<TheoremCheck> {
    const ID: &str = "srg-beta";
    let expected = predicted_srg_independence(spec)?;
    let computed = cover.alpha as u128;
    let mut ok = computed == expected;
    let mut evidence = format!(
        "maximum independent set {{{}}}",
        labels(&sr.graph, &cover.independent_witness)
    );
    if ok && regime == Regime::ReducedMany {
        let n = spec.n_components();
        // Nested ideals (1,0,..), (1,1,0,..), ..., with 1..=n-2 leading ones.
        let family: Vec<Ideal> = (1..=n - 2)
            .map(|ones| {
                let levels: Vec<u32> = (0..n).map(|j| u32::from(j < ones)).collect();
                spec.ideal(&levels)
            })
            .collect::<Result<_>>()?;
        let base_positions = sorted_indices_of(&derived.vertices, &family);
        let srg_index: BTreeMap<usize, usize> = sr
            .base_indices
            .iter()
            .enumerate()
            .map(|(srg_i, &base_i)| (base_i, srg_i))
            .collect();
        let srg_positions: Vec<usize> = base_positions
            .iter()
            .filter_map(|b| srg_index.get(b).copied())
            .collect();
        let family_independent = srg_positions.len() == n - 2
            && base_positions.len() == n - 2
            && solver::is_independent_set(&sr.graph, &srg_positions);
        let witness_nzc_hit = cover.independent_witness.iter().any(|&srg_i| {
            derived.vertices[sr.base_indices[srg_i]].nzc() == n - 2
        });
        if !family_independent {
            ok = false;
            evidence = "nested-ideal family is not an independent set of the claimed size".into();
        } else if !witness_nzc_hit {
            ok = false;
            evidence = format!(
                "no maximum-independent-set member has {} nonzero components",
                n - 2
            );
        } else {
            evidence = format!(
                "nested family of {} ideals is independent; witness member with {} nonzero components found",
                n - 2,
                n - 2
            );
        }
    }
    Ok(TheoremCheck::graded(
        ID,
        ok,
        format!("independence number {expected}"),
        format!("{computed}"),
        evidence,
    ))
}

/// Independence number plus vertex cover number equals the vertex count
/// of the strong resolving graph, with both witnesses valid.
fn check_gallai_identity(sr: &SrGraph, cover: &CoverSolution) -> TheoremCheck {
    const ID: &str = "gallai-identity";
    let n = sr.graph.vertex_count();
    let sums = cover.alpha + cover.beta == n;
    let independent = solver::is_independent_set(&sr.graph, &cover.independent_witness);
    let covering = solver::is_vertex_cover(&sr.graph, &cover.cover_witness);
    TheoremCheck::graded(
        ID,
        sums && independent && covering,
        format!("alpha + beta = {n} with valid witnesses"),
        format!("{} + {} = {}", cover.alpha, cover.beta, cover.alpha + cover.beta),
        format!("independent witness valid = {independent}, cover witness valid = {covering}"),
    )
}

/// The pipeline value equals the closed form, its witness strongly
/// resolves the base graph, and the brute-force oracle agrees when run.
fn check_sdim_formula(
    spec: &RingSpec,
    derived: &DerivedGraphs,
    sdim: &SdimResult,
    oracle_sdim: Option<&SdimResult>,
) -> Result<TheoremCheck> {
    const ID: &str = "sdim-formula";
    let expected = predicted_sdim(spec)?;
    let computed = sdim.value as u128;
    let witness_valid = solver::is_strong_resolving_set(&derived.gamma, &sdim.witness)?
        && sdim.witness.len() == sdim.value;
    let mut ok = computed == expected && witness_valid;
    let mut evidence = format!("witness of {} vertices re-validates", sdim.witness.len());
    match oracle_sdim {
        Some(oracle) => {
            let oracle_valid =
                solver::is_strong_resolving_set(&derived.gamma, &oracle.witness)?;
            if oracle.value != sdim.value || !oracle_valid {
                ok = false;
                evidence = format!(
                    "oracle disagrees: brute force {} (witness valid = {oracle_valid}), pipeline {}",
                    oracle.value, sdim.value
                );
            } else {
                evidence = format!(
                    "witness re-validates; brute-force oracle agrees at {}",
                    oracle.value
                );
            }
        }
        None => evidence.push_str("; oracle not run"),
    }
    if !witness_valid {
        evidence = "pipeline witness fails definitional validation".into();
    }
    Ok(TheoremCheck::graded(
        ID,
        ok,
        format!("strong metric dimension {expected}"),
        format!("{computed} via {}", sdim.method),
        evidence,
    ))
}

/// Metric dimension never exceeds strong metric dimension; checked by
/// brute force on small graphs.
fn check_dim_le_sdim(
    derived: &DerivedGraphs,
    sdim: &SdimResult,
    caps: &Caps,
) -> Result<TheoremCheck> {
    const ID: &str = "dim-le-sdim";
    let n = derived.gamma.vertex_count();
    if n > DIM_GATE || n > caps.brute_cap {
        return Ok(TheoremCheck::not_applicable(
            ID,
            format!(
                "{n} vertices exceed the brute-force gate ({})",
                DIM_GATE.min(caps.brute_cap)
            ),
        ));
    }
    let dim = solver::dim_bruteforce(&derived.gamma, caps)?;
    Ok(TheoremCheck::graded(
        ID,
        dim <= sdim.value,
        format!("metric dimension <= {}", sdim.value),
        format!("metric dimension = {dim}"),
        "both values by exact search".into(),
    ))
}

/// One ring's row in a family sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepEntry {
    pub ring: String,
    pub regime: Regime,
    pub vertices: u64,
    pub boundary: u64,
    pub sdim: u64,
    pub predicted_sdim: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_sdim: Option<u64>,
    pub all_pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed_checks: Vec<&'static str>,
}

/// Analyze each ring and collect one row per ring.
pub fn sweep(specs: &[RingSpec], caps: &Caps, oracle: OracleMode) -> Result<Vec<SweepEntry>> {
    specs
        .iter()
        .map(|spec| {
            let analysis = analyze_ring(spec, caps, oracle)?;
            Ok(SweepEntry {
                ring: spec.to_string(),
                regime: analysis.regime,
                vertices: analysis.derived.gamma.vertex_count() as u64,
                boundary: analysis.srg.base_indices.len() as u64,
                sdim: analysis.sdim.value as u64,
                predicted_sdim: u64::try_from(predicted_sdim(spec)?)
                    .map_err(|_| Error::Overflow("predicted strong metric dimension"))?,
                oracle_sdim: analysis.oracle_sdim.as_ref().map(|o| o.value as u64),
                all_pass: analysis.all_pass(),
                failed_checks: analysis.failed_checks(),
            })
        })
        .collect()
}
