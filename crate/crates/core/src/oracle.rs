//! Exhaustive enumeration of soft sets, soft topologies and point functions
//! over small contexts, plus brute-force sweeps that check every library
//! theorem on every enumerated instance and report counterexamples.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use crate::context::SoftContext;
use crate::error::Error;
use crate::mapping::{theorem3_hypothesis, SoftMapping};
use crate::set::{iter_all, SoftSet};
use crate::topology::SoftTopology;

/// Caps on how much the enumeration-based checkers are allowed to generate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest admissible power set `2^(|X|*|E|)` of soft sets.
    pub max_soft_sets: u64,
    /// Largest number of topologies an enumeration may emit.
    pub max_topologies: u64,
    /// Seed for the randomized generators.
    pub rng_seed: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_soft_sets: 1 << 16, max_topologies: 1_000_000, rng_seed: 0 }
    }
}

impl EnumerationBudget {
    /// Number of soft sets of the context, when the budget admits them all.
    pub fn admits_soft_sets(&self, context: &Arc<SoftContext>) -> Result<u64, Error> {
        let required = context
            .soft_set_count()
            .ok_or(Error::InstanceTooLarge { required: u128::MAX, limit: self.max_soft_sets as u128 })?;
        if required > self.max_soft_sets as u128 {
            return Err(Error::InstanceTooLarge { required, limit: self.max_soft_sets as u128 });
        }
        Ok(required as u64)
    }
}

/// All soft sets of a context in canonical order: the null set first, the
/// absolute set last, no duplicates.
pub fn enumerate_soft_sets(
    context: &Arc<SoftContext>,
    budget: &EnumerationBudget,
) -> Result<Vec<SoftSet>, Error> {
    let count = budget.admits_soft_sets(context)?;
    let mut sets = Vec::with_capacity(count as usize);
    sets.extend(iter_all(context));
    Ok(sets)
}

/// Cell count above which full topology enumeration is refused; the number
/// of candidate collections is `2^(2^cells - 2)`.
const MAX_ENUMERATION_CELLS: usize = 4;

/// Every soft topology over the context, each exactly once, in canonical
/// order. Only contexts with at most four cells are enumerable.
pub fn enumerate_soft_topologies(
    context: &Arc<SoftContext>,
    budget: &EnumerationBudget,
) -> Result<Vec<SoftTopology>, Error> {
    let cells = context.cell_count();
    if cells > MAX_ENUMERATION_CELLS {
        let required = 1u128
            .checked_shl((1u32 << cells.min(126)).saturating_sub(2))
            .unwrap_or(u128::MAX);
        return Err(Error::InstanceTooLarge { required, limit: budget.max_topologies as u128 });
    }
    let set_count = 1usize << cells; // at most 16
    let full_code = (set_count - 1) as u32;
    let fixed: u32 = 1 | (1u32 << full_code);
    let free_bits = set_count - 2;

    let mut topologies = Vec::new();
    for free in 0u32..(1u32 << free_bits) {
        let family = fixed | (free << 1);
        let members: Vec<u32> = (0..set_count as u32).filter(|c| family >> c & 1 == 1).collect();
        let closed = members.iter().enumerate().all(|(i, a)| {
            members[i..]
                .iter()
                .all(|b| family >> (a | b) & 1 == 1 && family >> (a & b) & 1 == 1)
        });
        if !closed {
            continue;
        }
        if topologies.len() as u64 >= budget.max_topologies {
            return Err(Error::InstanceTooLarge {
                required: budget.max_topologies as u128 + 1,
                limit: budget.max_topologies as u128,
            });
        }
        let opens: Vec<SoftSet> =
            members.iter().map(|c| SoftSet::from_code(context, *c as u128)).collect();
        topologies.push(SoftTopology::from_sorted_opens_unchecked(context.clone(), opens));
    }
    Ok(topologies)
}

/// A soft set drawn uniformly at random.
pub fn random_soft_set(context: &Arc<SoftContext>, rng: &mut impl Rng) -> SoftSet {
    let full = context.full_mask();
    let code = (0..context.parameter_count()).fold(0u128, |code, _| {
        (code << context.element_count()) | (rng.random::<u64>() & full) as u128
    });
    SoftSet::from_code(context, code)
}

/// Closes `generator_count` random soft sets (plus the null and absolute
/// sets) under union and intersection. The same seed always produces the
/// same topology.
pub fn random_soft_topology(
    context: &Arc<SoftContext>,
    seed: u64,
    generator_count: usize,
) -> SoftTopology {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let generators: Vec<SoftSet> =
        (0..generator_count).map(|_| random_soft_set(context, &mut rng)).collect();
    closure_under_ops(context, &generators).expect("generators share the context")
}

/// The smallest soft topology containing the collection.
pub fn closure_under_ops(
    context: &Arc<SoftContext>,
    collection: &[SoftSet],
) -> Result<SoftTopology, Error> {
    let mut members: BTreeSet<SoftSet> = BTreeSet::new();
    members.insert(SoftSet::null(context));
    members.insert(SoftSet::absolute(context));
    for set in collection {
        if !crate::context::same_context(set.context(), context) {
            return Err(Error::ContextMismatch);
        }
        members.insert(set.clone());
    }
    let mut pending: Vec<SoftSet> = members.iter().cloned().collect();
    while let Some(next) = pending.pop() {
        let snapshot: Vec<SoftSet> = members.iter().cloned().collect();
        for other in &snapshot {
            for combined in [next.union(other)?, next.intersection(other)?] {
                if members.insert(combined.clone()) {
                    pending.push(combined);
                }
            }
        }
    }
    let opens: Vec<SoftSet> = members.into_iter().collect();
    Ok(SoftTopology::from_sorted_opens_unchecked(context.clone(), opens))
}

/// Identifiers for the swept results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum TheoremId {
    /// The six continuity conditions agree on every instance.
    Thm1,
    /// Soft continuity implies continuity of every induced point function.
    Thm2,
    /// Instances where all induced point functions are continuous but the
    /// mapping is not soft continuous; violations here are the expected
    /// counterexamples to the converse of `Thm2`.
    Thm2Converse,
    /// Under the open-parameterwise-closure-complement hypothesis on the
    /// source, soft continuity is equivalent to all-parameter continuity.
    Thm3,
    /// The interior/closure characterisations match the direct open/closed
    /// mapping definitions.
    Thm4,
    /// For bijections: homeomorphism, continuous-and-closed and
    /// continuous-and-open coincide.
    Thm5,
    /// Induced families are point topologies.
    Prop1,
    /// The parameterwise closure is contained in the soft closure.
    Prop2,
    /// Soft open (closed) mappings induce open (closed) point functions.
    Prop3,
    /// The closures agree exactly when the parameterwise closure has an open
    /// complement.
    Cor1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Thm1,
        TheoremId::Thm2,
        TheoremId::Thm2Converse,
        TheoremId::Thm3,
        TheoremId::Thm4,
        TheoremId::Thm5,
        TheoremId::Prop1,
        TheoremId::Prop2,
        TheoremId::Prop3,
        TheoremId::Cor1,
    ];

    /// Sweeps quantify over `(tau, tau', f)` triples for mapping-shaped
    /// results and over `(tau, set)` or `(tau, parameter)` otherwise.
    pub fn is_mapping_shaped(&self) -> bool {
        !matches!(self, TheoremId::Prop1 | TheoremId::Prop2 | TheoremId::Cor1)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TheoremId::Thm1 => "THM1",
            TheoremId::Thm2 => "THM2",
            TheoremId::Thm2Converse => "THM2_CONVERSE",
            TheoremId::Thm3 => "THM3",
            TheoremId::Thm4 => "THM4",
            TheoremId::Thm5 => "THM5",
            TheoremId::Prop1 => "PROP1",
            TheoremId::Prop2 => "PROP2",
            TheoremId::Prop3 => "PROP3",
            TheoremId::Cor1 => "COR1",
        };
        f.write_str(name)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "THM1" => Ok(TheoremId::Thm1),
            "THM2" => Ok(TheoremId::Thm2),
            "THM2_CONVERSE" | "THM2-CONVERSE" => Ok(TheoremId::Thm2Converse),
            "THM3" => Ok(TheoremId::Thm3),
            "THM4" => Ok(TheoremId::Thm4),
            "THM5" => Ok(TheoremId::Thm5),
            "PROP1" => Ok(TheoremId::Prop1),
            "PROP2" => Ok(TheoremId::Prop2),
            "PROP3" => Ok(TheoremId::Prop3),
            "COR1" => Ok(TheoremId::Cor1),
            _ => Err(Error::UnknownTheorem(s.to_owned())),
        }
    }
}

/// One concrete `(tau, tau', f)` triple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MappingInstance {
    pub tau: SoftTopology,
    pub tau_prime: SoftTopology,
    pub map: SoftMapping,
}

impl MappingInstance {
    pub fn new(tau: SoftTopology, tau_prime: SoftTopology, map: SoftMapping) -> Result<Self, Error> {
        if !crate::context::same_context(tau.context(), map.source())
            || !crate::context::same_context(tau_prime.context(), map.target())
        {
            return Err(Error::ContextMismatch);
        }
        Ok(MappingInstance { tau, tau_prime, map })
    }
}

/// A counterexample found by a sweep, kept as real objects so it can be
/// serialized, reloaded and replayed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    Mapping { instance: MappingInstance, detail: String },
    TopologySet { tau: SoftTopology, set: SoftSet, detail: String },
    TopologyParameter { tau: SoftTopology, parameter: String, detail: String },
}

impl Violation {
    pub fn detail(&self) -> &str {
        match self {
            Violation::Mapping { detail, .. } => detail,
            Violation::TopologySet { detail, .. } => detail,
            Violation::TopologyParameter { detail, .. } => detail,
        }
    }
}

/// Instance-space limits for a sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub max_universe: usize,
    pub max_target_universe: usize,
    pub max_parameters: usize,
    pub budget: EnumerationBudget,
    /// Extra `(tau, tau', f)` triples checked after the enumerated ones;
    /// only meaningful for mapping-shaped theorems.
    pub extra_instances: Vec<MappingInstance>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_universe: 2,
            max_target_universe: 2,
            max_parameters: 2,
            budget: EnumerationBudget::default(),
            extra_instances: Vec::new(),
        }
    }
}

impl SweepConfig {
    /// Limits used for the set-shaped sweeps: every context whose cell count
    /// stays enumerable.
    pub fn set_shaped() -> Self {
        SweepConfig {
            max_universe: MAX_ENUMERATION_CELLS,
            max_target_universe: 1,
            max_parameters: MAX_ENUMERATION_CELLS,
            ..SweepConfig::default()
        }
    }
}

/// Instance counts plus the violations found while sweeping one theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremSweepReport {
    pub theorem: TheoremId,
    /// Context shapes iterated.
    pub contexts: u64,
    /// Topologies enumerated for the source side (set-shaped sweeps) or
    /// `(tau, tau')` pairs (mapping-shaped sweeps).
    pub topologies: u64,
    /// Mapping instances evaluated, including extra instances.
    pub mappings: u64,
    /// Soft sets evaluated inside universally quantified checks.
    pub soft_sets: u64,
    pub violations: Vec<Violation>,
}

impl TheoremSweepReport {
    fn new(theorem: TheoremId) -> Self {
        TheoremSweepReport { theorem, contexts: 0, topologies: 0, mappings: 0, soft_sets: 0, violations: Vec::new() }
    }
}

fn synthetic_context(prefix: &str, size: usize, parameters: usize) -> Arc<SoftContext> {
    let universe: Vec<String> = (1..=size).map(|i| format!("{prefix}{i}")).collect();
    let params: Vec<String> = (1..=parameters).map(|i| format!("e{i}")).collect();
    Arc::new(SoftContext::new(universe, params).expect("synthetic context is valid"))
}

/// All `|Y|^|X|` point functions between two universes, in canonical order.
fn all_point_maps(
    source: &Arc<SoftContext>,
    target: &Arc<SoftContext>,
) -> Vec<SoftMapping> {
    let x = source.element_count();
    let y = target.element_count();
    let total = (y as u64).pow(x as u32);
    (0..total)
        .map(|index| {
            let mut digits = Vec::with_capacity(x);
            let mut rest = index;
            for _ in 0..x {
                digits.push((rest % y as u64) as usize);
                rest /= y as u64;
            }
            SoftMapping::from_indices(source.clone(), target.clone(), digits)
        })
        .collect()
}

type InstanceCheck = dyn Fn(&MappingInstance) -> Result<Vec<Violation>, Error> + Sync;

fn mapping_sweep(
    theorem: TheoremId,
    config: &SweepConfig,
    soft_sets_per_instance: impl Fn(usize, usize) -> u64,
    check: &InstanceCheck,
) -> Result<TheoremSweepReport, Error> {
    let mut report = TheoremSweepReport::new(theorem);
    for parameters in 1..=config.max_parameters {
        for x in 1..=config.max_universe {
            for y in 1..=config.max_target_universe {
                let source = synthetic_context("x", x, parameters);
                let target = synthetic_context("y", y, parameters);
                let taus = enumerate_soft_topologies(&source, &config.budget)?;
                let tau_primes = enumerate_soft_topologies(&target, &config.budget)?;
                let maps = all_point_maps(&source, &target);

                report.contexts += 1;
                report.topologies += (taus.len() * tau_primes.len()) as u64;
                let instances = (taus.len() * tau_primes.len() * maps.len()) as u64;
                report.mappings += instances;
                report.soft_sets +=
                    instances * soft_sets_per_instance(source.cell_count(), target.cell_count());

                let pairs: Vec<(&SoftTopology, &SoftTopology)> = taus
                    .iter()
                    .flat_map(|t| tau_primes.iter().map(move |tp| (t, tp)))
                    .collect();
                let found: Result<Vec<Vec<Violation>>, Error> = pairs
                    .par_iter()
                    .map(|(tau, tau_prime)| {
                        let mut local = Vec::new();
                        for map in &maps {
                            let instance = MappingInstance {
                                tau: (*tau).clone(),
                                tau_prime: (*tau_prime).clone(),
                                map: map.clone(),
                            };
                            local.extend(check(&instance)?);
                        }
                        Ok(local)
                    })
                    .collect();
                for batch in found? {
                    report.violations.extend(batch);
                }
            }
        }
    }
    for instance in &config.extra_instances {
        report.mappings += 1;
        report.violations.extend(check(instance)?);
    }
    report.violations.sort();
    Ok(report)
}

fn set_sweep(
    theorem: TheoremId,
    config: &SweepConfig,
    check: &dyn Fn(&SoftTopology) -> Result<Vec<Violation>, Error>,
) -> Result<TheoremSweepReport, Error> {
    let mut report = TheoremSweepReport::new(theorem);
    for parameters in 1..=config.max_parameters {
        for x in 1..=config.max_universe {
            if x * parameters > MAX_ENUMERATION_CELLS {
                continue;
            }
            let context = synthetic_context("x", x, parameters);
            let taus = enumerate_soft_topologies(&context, &config.budget)?;
            report.contexts += 1;
            report.topologies += taus.len() as u64;
            report.soft_sets += (taus.len() as u64) * (1u64 << context.cell_count());
            for tau in &taus {
                report.violations.extend(check(tau)?);
            }
        }
    }
    report.violations.sort();
    Ok(report)
}

fn render_verdicts(verdicts: [bool; 6]) -> String {
    let rendered: Vec<String> =
        verdicts.iter().enumerate().map(|(i, v)| format!("({}) {}", i + 1, v)).collect();
    rendered.join(", ")
}

/// Brute-force checks one theorem over every enumerated instance.
pub fn sweep_theorem(theorem: TheoremId, config: &SweepConfig) -> Result<TheoremSweepReport, Error> {
    if !theorem.is_mapping_shaped() && !config.extra_instances.is_empty() {
        return Err(Error::UnknownTheorem(format!(
            "{theorem} sweeps (tau, set) pairs and cannot take mapping instances"
        )));
    }
    let budget = config.budget.clone();
    match theorem {
        TheoremId::Thm1 => mapping_sweep(
            theorem,
            config,
            |source_cells, target_cells| (1u64 << source_cells) + 2 * (1u64 << target_cells),
            &move |instance: &MappingInstance| {
                let report =
                    instance.map.theorem1_report(&instance.tau, &instance.tau_prime, &budget)?;
                Ok(if report.agree() {
                    Vec::new()
                } else {
                    vec![Violation::Mapping {
                        instance: instance.clone(),
                        detail: format!(
                            "continuity conditions disagree: {}",
                            render_verdicts(report.verdicts())
                        ),
                    }]
                })
            },
        ),
        TheoremId::Thm2 => mapping_sweep(theorem, config, |_, _| 0, &|instance| {
            let MappingInstance { tau, tau_prime, map } = instance;
            if !map.is_soft_continuous(tau, tau_prime)? {
                return Ok(Vec::new());
            }
            for parameter in tau.context().parameters() {
                if !map.induced_map_continuous(tau, tau_prime, parameter)? {
                    return Ok(vec![Violation::Mapping {
                        instance: instance.clone(),
                        detail: format!(
                            "soft continuous but induced map at {parameter} is not continuous"
                        ),
                    }]);
                }
            }
            Ok(Vec::new())
        }),
        TheoremId::Thm2Converse => mapping_sweep(theorem, config, |_, _| 0, &|instance| {
            let MappingInstance { tau, tau_prime, map } = instance;
            let mut all_induced = true;
            for parameter in tau.context().parameters() {
                all_induced &= map.induced_map_continuous(tau, tau_prime, parameter)?;
            }
            Ok(if all_induced && !map.is_soft_continuous(tau, tau_prime)? {
                vec![Violation::Mapping {
                    instance: instance.clone(),
                    detail: "every induced map continuous yet not soft continuous".to_owned(),
                }]
            } else {
                Vec::new()
            })
        }),
        TheoremId::Thm3 => {
            let hypothesis_budget = config.budget.clone();
            mapping_sweep(
                theorem,
                config,
                |source_cells, _| 1u64 << source_cells,
                &move |instance| {
                    let MappingInstance { tau, tau_prime, map } = instance;
                    if !theorem3_hypothesis(tau, &hypothesis_budget)? {
                        return Ok(Vec::new());
                    }
                    let continuous = map.is_soft_continuous(tau, tau_prime)?;
                    let mut all_induced = true;
                    for parameter in tau.context().parameters() {
                        all_induced &= map.induced_map_continuous(tau, tau_prime, parameter)?;
                    }
                    Ok(if continuous == all_induced {
                        Vec::new()
                    } else {
                        vec![Violation::Mapping {
                            instance: instance.clone(),
                            detail: format!(
                                "hypothesis holds but soft continuity ({continuous}) differs from \
                                 all-parameter continuity ({all_induced})"
                            ),
                        }]
                    })
                },
            )
        }
        TheoremId::Thm4 => {
            let check_budget = config.budget.clone();
            mapping_sweep(
                theorem,
                config,
                |source_cells, _| 2 * (1u64 << source_cells),
                &move |instance| {
                    let MappingInstance { tau, tau_prime, map } = instance;
                    let mut violations = Vec::new();
                    let open_direct = map.is_soft_open_map(tau, tau_prime)?;
                    let open_via = map.open_map_via_interior(tau, tau_prime, &check_budget)?;
                    if open_direct != open_via {
                        violations.push(Violation::Mapping {
                            instance: instance.clone(),
                            detail: format!(
                                "open mapping {open_direct} but interior characterisation {open_via}"
                            ),
                        });
                    }
                    let closed_direct = map.is_soft_closed_map(tau, tau_prime)?;
                    let closed_via = map.closed_map_via_closure(tau, tau_prime, &check_budget)?;
                    if closed_direct != closed_via {
                        violations.push(Violation::Mapping {
                            instance: instance.clone(),
                            detail: format!(
                                "closed mapping {closed_direct} but closure characterisation {closed_via}"
                            ),
                        });
                    }
                    Ok(violations)
                },
            )
        }
        TheoremId::Thm5 => mapping_sweep(theorem, config, |_, _| 0, &|instance| {
            let MappingInstance { tau, tau_prime, map } = instance;
            if !map.is_bijective() {
                return Ok(Vec::new());
            }
            let report = map.homeomorphism_equivalences(tau, tau_prime)?;
            Ok(if report.verdict {
                Vec::new()
            } else {
                vec![Violation::Mapping {
                    instance: instance.clone(),
                    detail: report.summary(),
                }]
            })
        }),
        TheoremId::Prop3 => mapping_sweep(theorem, config, |_, _| 0, &|instance| {
            let MappingInstance { tau, tau_prime, map } = instance;
            let mut violations = Vec::new();
            if map.is_soft_open_map(tau, tau_prime)? {
                for parameter in tau.context().parameters() {
                    if !map.induced_map_open(tau, tau_prime, parameter)? {
                        violations.push(Violation::Mapping {
                            instance: instance.clone(),
                            detail: format!("soft open but induced map at {parameter} is not open"),
                        });
                    }
                }
            }
            if map.is_soft_closed_map(tau, tau_prime)? {
                for parameter in tau.context().parameters() {
                    if !map.induced_map_closed(tau, tau_prime, parameter)? {
                        violations.push(Violation::Mapping {
                            instance: instance.clone(),
                            detail: format!(
                                "soft closed but induced map at {parameter} is not closed"
                            ),
                        });
                    }
                }
            }
            Ok(violations)
        }),
        TheoremId::Prop1 => set_sweep(theorem, config, &|tau| {
            let mut violations = Vec::new();
            for parameter in tau.context().parameters() {
                let induced = tau.induced_topology(parameter)?;
                let report = induced.validate();
                if !report.verdict {
                    violations.push(Violation::TopologyParameter {
                        tau: tau.clone(),
                        parameter: parameter.clone(),
                        detail: format!("induced family is not a topology: {}", report.summary()),
                    });
                }
            }
            Ok(violations)
        }),
        TheoremId::Prop2 => set_sweep(theorem, config, &|tau| {
            let mut violations = Vec::new();
            for set in iter_all(tau.context()) {
                let parameterwise = tau.parameterwise_closure(&set)?;
                let soft = tau.soft_closure(&set)?;
                if !parameterwise.is_subset_of(&soft)? {
                    violations.push(Violation::TopologySet {
                        tau: tau.clone(),
                        set: set.clone(),
                        detail: format!(
                            "parameterwise closure {parameterwise} escapes soft closure {soft}"
                        ),
                    });
                }
            }
            Ok(violations)
        }),
        TheoremId::Cor1 => set_sweep(theorem, config, &|tau| {
            let mut violations = Vec::new();
            for set in iter_all(tau.context()) {
                let agree = tau.parameterwise_closure(&set)? == tau.soft_closure(&set)?;
                let criterion = tau.corollary1_criterion(&set)?;
                if agree != criterion {
                    violations.push(Violation::TopologySet {
                        tau: tau.clone(),
                        set: set.clone(),
                        detail: format!(
                            "closures agree: {agree}, complement-open criterion: {criterion}"
                        ),
                    });
                }
            }
            Ok(violations)
        }),
    }
}
