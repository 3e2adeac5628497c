//! Soft mappings: point functions lifted parameterwise to soft sets, and the
//! checkers for soft continuity, soft open/closed mappings and soft
//! homeomorphisms.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::context::{same_context, SoftContext, SoftPoint};
use crate::error::Error;
use crate::oracle::EnumerationBudget;
use crate::report::{CheckReport, Witness};
use crate::set::{iter_all, SoftSet};
use crate::topology::SoftTopology;

/// A point function between two universes sharing one parameter set, lifted
/// to soft sets parameterwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SoftMapping {
    source: Arc<SoftContext>,
    target: Arc<SoftContext>,
    point_map: Vec<usize>,
}

impl SoftMapping {
    /// Builds a mapping from `source` to `target` out of element-name pairs.
    ///
    /// The contexts must share the same parameter set and the assignment
    /// must cover every source element exactly once.
    pub fn new<A, S, T>(
        source: &Arc<SoftContext>,
        target: &Arc<SoftContext>,
        assignments: A,
    ) -> Result<Self, Error>
    where
        A: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        if source.parameters() != target.parameters() {
            return Err(Error::ContextMismatch);
        }
        let mut point_map: Vec<Option<usize>> = vec![None; source.element_count()];
        for (from, to) in assignments {
            let x = source.element_index(from.as_ref())?;
            if point_map[x].is_some() {
                return Err(Error::DuplicateIdentifier(from.as_ref().to_owned()));
            }
            point_map[x] = Some(target.element_index(to.as_ref())?);
        }
        let mut resolved = Vec::with_capacity(point_map.len());
        for (x, image) in point_map.into_iter().enumerate() {
            match image {
                Some(y) => resolved.push(y),
                None => return Err(Error::MissingImage(source.universe()[x].clone())),
            }
        }
        Ok(SoftMapping { source: source.clone(), target: target.clone(), point_map: resolved })
    }

    /// The identity mapping on a context.
    pub fn identity(context: &Arc<SoftContext>) -> Self {
        SoftMapping {
            source: context.clone(),
            target: context.clone(),
            point_map: (0..context.element_count()).collect(),
        }
    }

    pub(crate) fn from_indices(
        source: Arc<SoftContext>,
        target: Arc<SoftContext>,
        point_map: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(point_map.len(), source.element_count());
        debug_assert!(point_map.iter().all(|y| *y < target.element_count()));
        debug_assert_eq!(source.parameters(), target.parameters());
        SoftMapping { source, target, point_map }
    }

    pub fn source(&self) -> &Arc<SoftContext> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SoftContext> {
        &self.target
    }

    /// Image of a single element.
    pub fn apply(&self, element: &str) -> Result<&str, Error> {
        let x = self.source.element_index(element)?;
        Ok(&self.target.universe()[self.point_map[x]])
    }

    pub fn assignments(&self) -> impl Iterator<Item = (&str, &str)> {
        self.point_map
            .iter()
            .enumerate()
            .map(|(x, y)| (self.source.universe()[x].as_str(), self.target.universe()[*y].as_str()))
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.element_count() != self.target.element_count() {
            return false;
        }
        let mut hit = vec![false; self.target.element_count()];
        for y in &self.point_map {
            if hit[*y] {
                return false;
            }
            hit[*y] = true;
        }
        true
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.element_count()];
        for y in &self.point_map {
            if hit[*y] {
                return false;
            }
            hit[*y] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.element_count()];
        for y in &self.point_map {
            hit[*y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// The inverse mapping, when the point function is a bijection.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_bijective() {
            return None;
        }
        let mut inverted = vec![0usize; self.point_map.len()];
        for (x, y) in self.point_map.iter().enumerate() {
            inverted[*y] = x;
        }
        Some(SoftMapping {
            source: self.target.clone(),
            target: self.source.clone(),
            point_map: inverted,
        })
    }

    fn require_source_set(&self, set: &SoftSet) -> Result<(), Error> {
        if same_context(set.context(), &self.source) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn require_topologies(&self, tau: &SoftTopology, tau_prime: &SoftTopology) -> Result<(), Error> {
        if same_context(tau.context(), &self.source) && same_context(tau_prime.context(), &self.target)
        {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn image_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for (x, y) in self.point_map.iter().enumerate() {
            if mask >> x & 1 == 1 {
                out |= 1u64 << y;
            }
        }
        out
    }

    fn preimage_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for (x, y) in self.point_map.iter().enumerate() {
            if mask >> y & 1 == 1 {
                out |= 1u64 << x;
            }
        }
        out
    }

    /// Parameterwise direct image of a soft set over the source.
    pub fn image(&self, set: &SoftSet) -> Result<SoftSet, Error> {
        self.require_source_set(set)?;
        let masks = set.masks().iter().map(|m| self.image_mask(*m)).collect();
        Ok(crate::set::SoftSet::from_masks(self.target.clone(), masks))
    }

    /// Parameterwise preimage of a soft set over the target.
    pub fn preimage(&self, set: &SoftSet) -> Result<SoftSet, Error> {
        if !same_context(set.context(), &self.target) {
            return Err(Error::ContextMismatch);
        }
        let masks = set.masks().iter().map(|m| self.preimage_mask(*m)).collect();
        Ok(crate::set::SoftSet::from_masks(self.source.clone(), masks))
    }

    /// Pointwise soft continuity at one soft point: every open set around the
    /// image point admits an open set around the point mapping into it.
    ///
    /// Quantifying over open sets suffices: any soft neighbourhood contains
    /// an open set around the same point, on both sides of the condition.
    pub fn is_soft_continuous_at(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
        point: &SoftPoint,
    ) -> Result<bool, Error> {
        Ok(self.pointwise_failure(tau, tau_prime, point)?.is_none())
    }

    /// The first target open witnessing a pointwise failure, if any.
    fn pointwise_failure(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
        point: &SoftPoint,
    ) -> Result<Option<SoftSet>, Error> {
        self.require_topologies(tau, tau_prime)?;
        if !same_context(point.context(), &self.source) {
            return Err(Error::ContextMismatch);
        }
        let parameter = point.parameter_index();
        let image_element = self.point_map[point.element_index()];
        for around_image in tau_prime.opens() {
            if around_image.mask(parameter) >> image_element & 1 == 0 {
                continue;
            }
            let mut admissible = false;
            for open in tau.opens() {
                if open.mask(parameter) >> point.element_index() & 1 == 1
                    && self.image(open)?.is_subset_of(around_image)?
                {
                    admissible = true;
                    break;
                }
            }
            if !admissible {
                return Ok(Some(around_image.clone()));
            }
        }
        Ok(None)
    }

    /// Global soft continuity: preimages of target opens are open.
    pub fn is_soft_continuous(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
    ) -> Result<bool, Error> {
        self.require_topologies(tau, tau_prime)?;
        for open in tau_prime.opens() {
            if !tau.is_open(&self.preimage(open)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Evaluates all six continuity conditions independently.
    ///
    /// The conditions quantifying over every soft set run under the
    /// enumeration budget; the instance is rejected when either power set
    /// exceeds it.
    pub fn theorem1_report(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
        budget: &EnumerationBudget,
    ) -> Result<ContinuityReport, Error> {
        self.require_topologies(tau, tau_prime)?;
        budget.admits_soft_sets(&self.source)?;
        budget.admits_soft_sets(&self.target)?;

        // (1) pointwise continuity at every soft point.
        let mut pointwise = ConditionReport::holds();
        'points: for point in SoftPoint::all(&self.source) {
            if let Some(open) = self.pointwise_failure(tau, tau_prime, &point)? {
                pointwise = ConditionReport::fails(
                    Witness::new("no-neighbourhood-maps-into-open")
                        .with("point", &point)
                        .with("image-point", format!(
                            "{}@{}",
                            self.target.universe()[self.point_map[point.element_index()]],
                            point.parameter_name()
                        ))
                        .with("open", open),
                );
                break 'points;
            }
        }

        // (2) preimages of opens are open.
        let mut open_preimages = ConditionReport::holds();
        for open in tau_prime.opens() {
            let preimage = self.preimage(open)?;
            if !tau.is_open(&preimage)? {
                open_preimages = ConditionReport::fails(
                    Witness::new("preimage-not-open").with("open", open).with("preimage", preimage),
                );
                break;
            }
        }

        // (3) preimages of closed sets are closed.
        let mut closed_preimages = ConditionReport::holds();
        for closed in tau_prime.closed_sets() {
            let preimage = self.preimage(&closed)?;
            if !tau.is_soft_closed(&preimage)? {
                closed_preimages = ConditionReport::fails(
                    Witness::new("preimage-not-closed")
                        .with("closed", closed)
                        .with("preimage", preimage),
                );
                break;
            }
        }

        // (4) image of the closure lands in the closure of the image.
        let mut image_closure = ConditionReport::holds();
        for set in iter_all(&self.source) {
            let lhs = self.image(&tau.soft_closure(&set)?)?;
            let rhs = tau_prime.soft_closure(&self.image(&set)?)?;
            if !lhs.is_subset_of(&rhs)? {
                image_closure = ConditionReport::fails(
                    Witness::new("image-of-closure-escapes")
                        .with("set", &set)
                        .with("image-of-closure", lhs)
                        .with("closure-of-image", rhs),
                );
                break;
            }
        }

        // (5) closure of a preimage lands in the preimage of the closure.
        let mut closure_preimage = ConditionReport::holds();
        for set in iter_all(&self.target) {
            let lhs = tau.soft_closure(&self.preimage(&set)?)?;
            let rhs = self.preimage(&tau_prime.soft_closure(&set)?)?;
            if !lhs.is_subset_of(&rhs)? {
                closure_preimage = ConditionReport::fails(
                    Witness::new("closure-of-preimage-escapes")
                        .with("set", &set)
                        .with("closure-of-preimage", lhs)
                        .with("preimage-of-closure", rhs),
                );
                break;
            }
        }

        // (6) preimage of the interior lands in the interior of the preimage.
        let mut preimage_interior = ConditionReport::holds();
        for set in iter_all(&self.target) {
            let lhs = self.preimage(&tau_prime.soft_interior(&set)?)?;
            let rhs = tau.soft_interior(&self.preimage(&set)?)?;
            if !lhs.is_subset_of(&rhs)? {
                preimage_interior = ConditionReport::fails(
                    Witness::new("preimage-of-interior-escapes")
                        .with("set", &set)
                        .with("preimage-of-interior", lhs)
                        .with("interior-of-preimage", rhs),
                );
                break;
            }
        }

        Ok(ContinuityReport {
            pointwise,
            open_preimages,
            closed_preimages,
            image_closure,
            closure_preimage,
            preimage_interior,
        })
    }

    /// Continuity of the induced point function at one parameter.
    pub fn induced_map_continuous(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
        parameter: &str,
    ) -> Result<bool, Error> {
        self.require_topologies(tau, tau_prime)?;
        let p = self.source.parameter_index(parameter)?;
        Ok(self.induced_continuous_at(tau, tau_prime, p))
    }

    pub(crate) fn induced_continuous_at(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
        parameter: usize,
    ) -> bool {
        let source_opens = tau.induced_topology_at(parameter);
        let target_opens = tau_prime.induced_topology_at(parameter);
        target_opens
            .mask_opens()
            .iter()
            .all(|open| source_opens.is_open_mask(self.preimage_mask(*open)))
    }

    /// Openness of the induced point function at one parameter.
    pub fn induced_map_open(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
        parameter: &str,
    ) -> Result<bool, Error> {
        self.require_topologies(tau, tau_prime)?;
        let p = self.source.parameter_index(parameter)?;
        let source_opens = tau.induced_topology_at(p);
        let target_opens = tau_prime.induced_topology_at(p);
        Ok(source_opens
            .mask_opens()
            .iter()
            .all(|open| target_opens.is_open_mask(self.image_mask(*open))))
    }

    /// Closedness of the induced point function at one parameter.
    pub fn induced_map_closed(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
        parameter: &str,
    ) -> Result<bool, Error> {
        self.require_topologies(tau, tau_prime)?;
        let p = self.source.parameter_index(parameter)?;
        let source_opens = tau.induced_topology_at(p);
        let target_opens = tau_prime.induced_topology_at(p);
        let source_full = source_opens.full_mask();
        let target_full = target_opens.full_mask();
        Ok(source_opens.mask_opens().iter().all(|open| {
            let image_of_closed = self.image_mask(source_full & !open);
            target_opens.is_open_mask(target_full & !image_of_closed)
        }))
    }

    /// Images of soft open sets are soft open.
    pub fn is_soft_open_map(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
    ) -> Result<bool, Error> {
        Ok(self.open_map_report(tau, tau_prime)?.verdict)
    }

    pub fn open_map_report(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
    ) -> Result<CheckReport, Error> {
        self.require_topologies(tau, tau_prime)?;
        for open in tau.opens() {
            let image = self.image(open)?;
            if !tau_prime.is_open(&image)? {
                return Ok(CheckReport::fail(vec![Witness::new("image-not-open")
                    .with("open", open)
                    .with("image", image)]));
            }
        }
        Ok(CheckReport::pass())
    }

    /// Images of soft closed sets are soft closed.
    pub fn is_soft_closed_map(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
    ) -> Result<bool, Error> {
        Ok(self.closed_map_report(tau, tau_prime)?.verdict)
    }

    pub fn closed_map_report(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
    ) -> Result<CheckReport, Error> {
        self.require_topologies(tau, tau_prime)?;
        for closed in tau.closed_sets() {
            let image = self.image(&closed)?;
            if !tau_prime.is_soft_closed(&image)? {
                return Ok(CheckReport::fail(vec![Witness::new("image-not-closed")
                    .with("closed", closed)
                    .with("image", image)]));
            }
        }
        Ok(CheckReport::pass())
    }

    /// Universally quantified openness: the image of every interior is
    /// contained in the interior of the image.
    pub fn open_map_via_interior(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
        budget: &EnumerationBudget,
    ) -> Result<bool, Error> {
        self.require_topologies(tau, tau_prime)?;
        budget.admits_soft_sets(&self.source)?;
        for set in iter_all(&self.source) {
            let lhs = self.image(&tau.soft_interior(&set)?)?;
            let rhs = tau_prime.soft_interior(&self.image(&set)?)?;
            if !lhs.is_subset_of(&rhs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Universally quantified closedness: the closure of every image is
    /// contained in the image of the closure.
    pub fn closed_map_via_closure(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
        budget: &EnumerationBudget,
    ) -> Result<bool, Error> {
        self.require_topologies(tau, tau_prime)?;
        budget.admits_soft_sets(&self.source)?;
        for set in iter_all(&self.source) {
            let lhs = tau_prime.soft_closure(&self.image(&set)?)?;
            let rhs = self.image(&tau.soft_closure(&set)?)?;
            if !lhs.is_subset_of(&rhs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A bijective, soft continuous mapping whose inverse is soft continuous.
    /// Non-bijective mappings simply fail the property.
    pub fn is_soft_homeomorphism(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
    ) -> Result<bool, Error> {
        self.require_topologies(tau, tau_prime)?;
        let Some(inverse) = self.inverse() else {
            return Ok(false);
        };
        Ok(self.is_soft_continuous(tau, tau_prime)? && inverse.is_soft_continuous(tau_prime, tau)?)
    }

    /// For a bijective mapping, compares being a homeomorphism with being
    /// continuous-and-closed and continuous-and-open; the three must agree.
    pub fn homeomorphism_equivalences(
        &self,
        tau: &SoftTopology,
        tau_prime: &SoftTopology,
    ) -> Result<CheckReport, Error> {
        self.require_topologies(tau, tau_prime)?;
        if !self.is_bijective() {
            return Err(Error::NotBijective);
        }
        let homeomorphism = self.is_soft_homeomorphism(tau, tau_prime)?;
        let continuous = self.is_soft_continuous(tau, tau_prime)?;
        let closed = continuous && self.is_soft_closed_map(tau, tau_prime)?;
        let open = continuous && self.is_soft_open_map(tau, tau_prime)?;
        if homeomorphism == closed && closed == open {
            Ok(CheckReport::pass())
        } else {
            Ok(CheckReport::fail(vec![Witness::new("equivalences-disagree")
                .with("homeomorphism", homeomorphism)
                .with("continuous-and-closed", closed)
                .with("continuous-and-open", open)
                .with("map", self)]))
        }
    }
}

impl fmt::Display for SoftMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (from, to)) in self.assignments().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{from}->{to}")?;
        }
        Ok(())
    }
}

/// Whether every soft set of the topology's context has an open complement
/// of its parameterwise closure.
pub fn theorem3_hypothesis(
    tau: &SoftTopology,
    budget: &EnumerationBudget,
) -> Result<bool, Error> {
    budget.admits_soft_sets(tau.context())?;
    for set in iter_all(tau.context()) {
        if !tau.is_open(&tau.parameterwise_closure(&set)?.complement())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verdict and optional witness for one continuity condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl ConditionReport {
    fn holds() -> Self {
        ConditionReport { holds: true, witness: None }
    }

    fn fails(witness: Witness) -> Self {
        ConditionReport { holds: false, witness: Some(witness) }
    }
}

/// The six continuity conditions evaluated independently of one another.
///
/// A correct implementation yields six equal verdicts on every instance; the
/// report keeps them separate so sweeps can detect disagreement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuityReport {
    pub pointwise: ConditionReport,
    pub open_preimages: ConditionReport,
    pub closed_preimages: ConditionReport,
    pub image_closure: ConditionReport,
    pub closure_preimage: ConditionReport,
    pub preimage_interior: ConditionReport,
}

impl ContinuityReport {
    pub const CONDITION_NAMES: [&'static str; 6] = [
        "pointwise-continuity",
        "open-preimages",
        "closed-preimages",
        "image-closure-containment",
        "closure-preimage-containment",
        "preimage-interior-containment",
    ];

    pub fn conditions(&self) -> [&ConditionReport; 6] {
        [
            &self.pointwise,
            &self.open_preimages,
            &self.closed_preimages,
            &self.image_closure,
            &self.closure_preimage,
            &self.preimage_interior,
        ]
    }

    pub fn verdicts(&self) -> [bool; 6] {
        self.conditions().map(|c| c.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts().into_iter().all(|v| v)
    }

    /// All six conditions returned the same verdict.
    pub fn agree(&self) -> bool {
        let verdicts = self.verdicts();
        verdicts.iter().all(|v| *v == verdicts[0])
    }
}
