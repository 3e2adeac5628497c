//! Soft topologies, soft closed sets, closure and interior operators, and
//! the ordinary point topologies induced per parameter.

use std::fmt;
use std::sync::Arc;

use crate::context::{same_context, SoftContext, SoftPoint};
use crate::error::Error;
use crate::oracle::EnumerationBudget;
use crate::report::{CheckReport, Witness};
use crate::set::{iter_all, SoftSet};

/// Checks the three soft-topology axioms on a candidate collection.
///
/// A failing report names the violated axiom and the offending set or pair;
/// for closure failures the first offending pair in canonical order is
/// reported, so output is reproducible.
pub fn validate_topology(
    context: &Arc<SoftContext>,
    candidate: &[SoftSet],
) -> Result<CheckReport, Error> {
    for set in candidate {
        if !same_context(set.context(), context) {
            return Err(Error::ContextMismatch);
        }
    }
    let mut opens: Vec<SoftSet> = candidate.to_vec();
    opens.sort();
    opens.dedup();

    let mut witnesses = Vec::new();
    let null = SoftSet::null(context);
    let absolute = SoftSet::absolute(context);
    if opens.binary_search(&null).is_err() {
        witnesses.push(Witness::new("null-soft-set-missing"));
    }
    if opens.binary_search(&absolute).is_err() {
        witnesses.push(Witness::new("absolute-soft-set-missing"));
    }

    let mut union_witness = None;
    let mut intersection_witness = None;
    'pairs: for i in 0..opens.len() {
        for j in i + 1..opens.len() {
            let (a, b) = (&opens[i], &opens[j]);
            if union_witness.is_none() {
                let u = a.union(b)?;
                if opens.binary_search(&u).is_err() {
                    union_witness = Some(
                        Witness::new("union-escapes-collection")
                            .with("a", a)
                            .with("b", b)
                            .with("union", &u),
                    );
                }
            }
            if intersection_witness.is_none() {
                let m = a.intersection(b)?;
                if opens.binary_search(&m).is_err() {
                    intersection_witness = Some(
                        Witness::new("intersection-escapes-collection")
                            .with("a", a)
                            .with("b", b)
                            .with("intersection", &m),
                    );
                }
            }
            if union_witness.is_some() && intersection_witness.is_some() {
                break 'pairs;
            }
        }
    }
    witnesses.extend(union_witness);
    witnesses.extend(intersection_witness);
    Ok(CheckReport::from_witnesses(witnesses))
}

/// A finite soft topology: a validated collection of soft open sets.
///
/// Opens are stored sorted and deduplicated, which fixes the canonical
/// iteration order used for witnesses and serialization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SoftTopology {
    context: Arc<SoftContext>,
    opens: Vec<SoftSet>,
}

impl SoftTopology {
    /// Validates the axioms and builds the topology.
    pub fn new(context: &Arc<SoftContext>, opens: Vec<SoftSet>) -> Result<Self, Error> {
        let report = validate_topology(context, &opens)?;
        if !report.verdict {
            return Err(Error::InvalidTopology(Box::new(report)));
        }
        let mut opens = opens;
        opens.sort();
        opens.dedup();
        Ok(SoftTopology { context: context.clone(), opens })
    }

    /// The topology whose only opens are the null and absolute soft sets.
    pub fn indiscrete(context: &Arc<SoftContext>) -> Self {
        let opens = vec![SoftSet::null(context), SoftSet::absolute(context)];
        SoftTopology { context: context.clone(), opens }
    }

    /// The topology containing every soft set of the context.
    pub fn discrete(context: &Arc<SoftContext>, budget: &EnumerationBudget) -> Result<Self, Error> {
        budget.admits_soft_sets(context)?;
        let opens: Vec<SoftSet> = iter_all(context).collect();
        Ok(SoftTopology { context: context.clone(), opens })
    }

    /// Constructs without re-validating; callers guarantee the axioms hold
    /// and that `opens` is sorted and deduplicated.
    pub(crate) fn from_sorted_opens_unchecked(context: Arc<SoftContext>, opens: Vec<SoftSet>) -> Self {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(validate_topology(&context, &opens).map(|r| r.verdict).unwrap_or(false));
        SoftTopology { context, opens }
    }

    pub fn context(&self) -> &Arc<SoftContext> {
        &self.context
    }

    /// The soft open sets in canonical order.
    pub fn opens(&self) -> &[SoftSet] {
        &self.opens
    }

    fn require_same_context(&self, set: &SoftSet) -> Result<(), Error> {
        if same_context(set.context(), &self.context) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn is_open(&self, set: &SoftSet) -> Result<bool, Error> {
        self.require_same_context(set)?;
        Ok(self.opens.binary_search(set).is_ok())
    }

    /// A set is soft closed when its complement is open.
    pub fn is_soft_closed(&self, set: &SoftSet) -> Result<bool, Error> {
        self.require_same_context(set)?;
        Ok(self.opens.binary_search(&set.complement()).is_ok())
    }

    /// Complements of the opens, in canonical order.
    pub fn closed_sets(&self) -> Vec<SoftSet> {
        let mut closed: Vec<SoftSet> = self.opens.iter().map(SoftSet::complement).collect();
        closed.sort();
        closed
    }

    /// Intersection of every soft closed superset of `set`.
    pub fn soft_closure(&self, set: &SoftSet) -> Result<SoftSet, Error> {
        self.require_same_context(set)?;
        let mut closure = SoftSet::absolute(&self.context);
        for open in &self.opens {
            let closed = open.complement();
            if set.is_subset_of(&closed)? {
                closure = closure.intersection(&closed)?;
            }
        }
        Ok(closure)
    }

    /// Union of every soft open set contained in `set`: the largest soft
    /// open set inside it.
    pub fn soft_interior(&self, set: &SoftSet) -> Result<SoftSet, Error> {
        self.require_same_context(set)?;
        let mut interior = SoftSet::null(&self.context);
        for open in &self.opens {
            if open.is_subset_of(set)? {
                interior = interior.union(open)?;
            }
        }
        Ok(interior)
    }

    /// Applies the induced-topology closure at each parameter separately.
    pub fn parameterwise_closure(&self, set: &SoftSet) -> Result<SoftSet, Error> {
        self.require_same_context(set)?;
        let mut masks = Vec::with_capacity(self.context.parameter_count());
        for p in 0..self.context.parameter_count() {
            let induced = self.induced_topology_at(p);
            masks.push(induced.closure_mask(set.mask(p)));
        }
        Ok(SoftSet::from_masks(self.context.clone(), masks))
    }

    /// The ordinary topology `{F(parameter) : F open}` on the universe.
    pub fn induced_topology(&self, parameter: &str) -> Result<PointTopology, Error> {
        let p = self.context.parameter_index(parameter)?;
        Ok(self.induced_topology_at(p))
    }

    pub(crate) fn induced_topology_at(&self, parameter: usize) -> PointTopology {
        let mut opens: Vec<u64> = self.opens.iter().map(|o| o.mask(parameter)).collect();
        opens.sort_unstable();
        opens.dedup();
        PointTopology { universe: self.context.universe().to_vec(), opens }
    }

    /// `neighbourhood` holds an open set that contains the point.
    pub fn is_soft_neighbourhood(
        &self,
        neighbourhood: &SoftSet,
        point: &SoftPoint,
    ) -> Result<bool, Error> {
        self.require_same_context(neighbourhood)?;
        if !same_context(point.context(), &self.context) {
            return Err(Error::ContextMismatch);
        }
        for open in &self.opens {
            if open.contains_point(point)? && open.is_subset_of(neighbourhood)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Soft points for which `set` is a soft neighbourhood, canonical order.
    pub fn interior_points(&self, set: &SoftSet) -> Result<Vec<SoftPoint>, Error> {
        self.require_same_context(set)?;
        let mut points = Vec::new();
        for point in SoftPoint::all(&self.context) {
            if self.is_soft_neighbourhood(set, &point)? {
                points.push(point);
            }
        }
        Ok(points)
    }

    /// Whether the complement of the parameterwise closure is open; by the
    /// closure correspondence this holds exactly when the two closure
    /// operators agree on `set`.
    pub fn corollary1_criterion(&self, set: &SoftSet) -> Result<bool, Error> {
        let parameterwise = self.parameterwise_closure(set)?;
        self.is_open(&parameterwise.complement())
    }

    /// Compares the parameterwise closure with the soft closure, asserting
    /// that the complement-open criterion gives the same answer.
    pub fn closure_operators_agree(&self, set: &SoftSet) -> Result<bool, Error> {
        let agree = self.parameterwise_closure(set)? == self.soft_closure(set)?;
        let criterion = self.corollary1_criterion(set)?;
        assert_eq!(
            agree, criterion,
            "closure comparison and complement-open criterion must coincide"
        );
        Ok(agree)
    }
}

impl fmt::Display for SoftTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, open) in self.opens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{open}")?;
        }
        write!(f, "}}")
    }
}

/// An ordinary topology on a finite universe, with opens stored as bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointTopology {
    universe: Vec<String>,
    opens: Vec<u64>,
}

impl PointTopology {
    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub(crate) fn mask_opens(&self) -> &[u64] {
        &self.opens
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.universe.len() == crate::context::MAX_UNIVERSE {
            u64::MAX
        } else {
            (1u64 << self.universe.len()) - 1
        }
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    /// The open sets as element-name lists, in canonical order.
    pub fn open_sets(&self) -> Vec<Vec<&str>> {
        self.opens.iter().map(|m| self.member_names(*m)).collect()
    }

    fn member_names(&self, mask: u64) -> Vec<&str> {
        self.universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, n)| n.as_str())
            .collect()
    }

    pub(crate) fn is_open_mask(&self, mask: u64) -> bool {
        self.opens.binary_search(&mask).is_ok()
    }

    /// Closure of a subset: intersection of the closed supersets.
    pub(crate) fn closure_mask(&self, mask: u64) -> u64 {
        let full = self.full_mask();
        let mut closure = full;
        for open in &self.opens {
            let closed = full & !open;
            if mask & !closed == 0 {
                closure &= closed;
            }
        }
        closure
    }

    /// Checks the point-topology axioms.
    pub fn validate(&self) -> CheckReport {
        let full = self.full_mask();
        let mut witnesses = Vec::new();
        if !self.is_open_mask(0) {
            witnesses.push(Witness::new("empty-set-missing"));
        }
        if !self.is_open_mask(full) {
            witnesses.push(Witness::new("universe-missing"));
        }
        'outer: for (i, a) in self.opens.iter().enumerate() {
            for b in &self.opens[i + 1..] {
                for (label, combined) in [("union", a | b), ("intersection", a & b)] {
                    if !self.is_open_mask(combined) {
                        witnesses.push(
                            Witness::new(format!("{label}-escapes-collection"))
                                .with("a", self.render_member(*a))
                                .with("b", self.render_member(*b)),
                        );
                        break 'outer;
                    }
                }
            }
        }
        CheckReport::from_witnesses(witnesses)
    }

    pub fn render_member(&self, mask: u64) -> String {
        let names = self.member_names(mask);
        let mut out = String::from("{");
        for (i, name) in names.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(name);
        }
        out.push('}');
        out
    }
}

impl fmt::Display for PointTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, open) in self.opens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.render_member(*open))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{example1, example2, example3, set};

    #[test]
    fn example1_collection_is_a_topology() {
        let ex = example1();
        let report = validate_topology(&ex.ctx, ex.tau.opens()).unwrap();
        assert!(report.verdict);
        assert!(report.witnesses.is_empty());
    }

    #[test]
    fn indiscrete_collection_is_a_topology() {
        let ex = example1();
        let report = validate_topology(
            &ex.ctx,
            &[SoftSet::null(&ex.ctx), SoftSet::absolute(&ex.ctx)],
        )
        .unwrap();
        assert!(report.verdict);
    }

    #[test]
    fn union_escape_is_reported_with_the_pair() {
        // The union of these two sets is absent from the collection.
        let ex = example2();
        let candidate = vec![
            SoftSet::null(&ex.ctx),
            SoftSet::absolute(&ex.ctx),
            ex.f1.clone(),
            ex.f3.clone(),
        ];
        let report = validate_topology(&ex.ctx, &candidate).unwrap();
        assert!(!report.verdict);
        let w = &report.witnesses[0];
        assert_eq!(w.label, "union-escapes-collection");
        let union = w.items.iter().find(|i| i.name == "union").unwrap();
        assert_eq!(union.value, ex.f2.to_string());
        assert!(SoftTopology::new(&ex.ctx, candidate).is_err());
    }

    #[test]
    fn missing_null_and_absolute_are_reported() {
        let ex = example1();
        let report = validate_topology(&ex.ctx, &[ex.f1.clone()]).unwrap();
        assert!(!report.verdict);
        let labels: Vec<&str> = report.witnesses.iter().map(|w| w.label.as_str()).collect();
        assert!(labels.contains(&"null-soft-set-missing"));
        assert!(labels.contains(&"absolute-soft-set-missing"));
    }

    #[test]
    fn closedness_follows_complements() {
        let ex = example1();
        assert!(ex.tau.is_soft_closed(&ex.f1.complement()).unwrap());
        assert!(ex.tau.is_soft_closed(&SoftSet::null(&ex.ctx)).unwrap());
        assert!(!ex.tau.is_soft_closed(&ex.f1).unwrap());
    }

    #[test]
    fn closure_of_a_soft_point() {
        let ex = example1();
        let p = SoftPoint::new(&ex.ctx, "h3", "e1").unwrap();
        let closure = ex.tau.soft_closure(&p.to_soft_set()).unwrap();
        assert_eq!(closure, ex.f1.complement());
        assert_eq!(closure, set(&ex.ctx, &["h3"], &["h1", "h2"]));
    }

    #[test]
    fn closure_fixed_points() {
        let ex = example1();
        let absolute = SoftSet::absolute(&ex.ctx);
        assert_eq!(ex.tau.soft_closure(&absolute).unwrap(), absolute);
        let closed = ex.f2.complement();
        assert_eq!(ex.tau.soft_closure(&closed).unwrap(), closed);
    }

    #[test]
    fn interior_examples() {
        let ex = example1();
        let g = set(&ex.ctx, &["h1", "h2"], &["h1", "h2", "h3"]);
        assert_eq!(ex.tau.soft_interior(&g).unwrap(), ex.f1);
        assert_eq!(ex.tau.soft_interior(&ex.f2).unwrap(), ex.f2);
        let null = SoftSet::null(&ex.ctx);
        assert_eq!(ex.tau.soft_interior(&null).unwrap(), null);
    }

    #[test]
    fn parameterwise_closure_of_a_soft_point() {
        let ex = example1();
        let p = SoftPoint::new(&ex.ctx, "h3", "e1").unwrap();
        let pw = ex.tau.parameterwise_closure(&p.to_soft_set()).unwrap();
        assert_eq!(pw, set(&ex.ctx, &["h3"], &[]));
        let null = SoftSet::null(&ex.ctx);
        let absolute = SoftSet::absolute(&ex.ctx);
        assert_eq!(ex.tau.parameterwise_closure(&null).unwrap(), null);
        assert_eq!(ex.tau.parameterwise_closure(&absolute).unwrap(), absolute);
    }

    #[test]
    fn induced_topologies_match_known_families() {
        let ex = example3();
        let at_e1 = ex.tau.induced_topology("e1").unwrap();
        let mut rendered: Vec<String> = at_e1.open_sets().iter().map(|s| s.join(" ")).collect();
        rendered.sort();
        assert_eq!(rendered, vec!["", "x1", "x1 x2", "x1 x2 x3", "x2"]);

        let at_e2 = ex.tau.induced_topology("e2").unwrap();
        let mut rendered: Vec<String> = at_e2.open_sets().iter().map(|s| s.join(" ")).collect();
        rendered.sort();
        assert_eq!(rendered, vec!["", "x1", "x1 x2 x3", "x1 x3"]);

        let indiscrete = SoftTopology::indiscrete(&ex.ctx);
        assert_eq!(indiscrete.induced_topology("e1").unwrap().open_count(), 2);
        assert!(ex.tau.induced_topology("zz").is_err());
    }

    #[test]
    fn neighbourhood_examples() {
        let ex = example1();
        let p = SoftPoint::new(&ex.ctx, "h3", "e2").unwrap();
        assert!(ex.tau.is_soft_neighbourhood(&ex.f2, &p).unwrap());
        assert!(ex
            .tau
            .is_soft_neighbourhood(&SoftSet::absolute(&ex.ctx), &p)
            .unwrap());
        assert!(!ex.tau.is_soft_neighbourhood(&SoftSet::null(&ex.ctx), &p).unwrap());
    }

    #[test]
    fn interior_points_examples() {
        let ex = example1();
        let g = set(&ex.ctx, &["h1", "h2"], &["h1", "h2", "h3"]);
        let points = ex.tau.interior_points(&g).unwrap();
        let rendered: Vec<String> = points.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["h1@e1", "h2@e1", "h3@e2"]);
        assert!(ex.tau.interior_points(&SoftSet::null(&ex.ctx)).unwrap().is_empty());
        assert_eq!(
            ex.tau.interior_points(&SoftSet::absolute(&ex.ctx)).unwrap().len(),
            6
        );
        // Interior points are exactly the points of the soft interior.
        let via_interior = ex.tau.soft_interior(&g).unwrap().points();
        assert_eq!(points, via_interior);
    }

    #[test]
    fn closure_operators_agree_examples() {
        let ex = example1();
        let closed = ex.f1.complement();
        assert!(ex.tau.closure_operators_agree(&closed).unwrap());
        let p = SoftPoint::new(&ex.ctx, "h3", "e1").unwrap();
        assert!(!ex.tau.closure_operators_agree(&p.to_soft_set()).unwrap());
        assert!(!ex.tau.corollary1_criterion(&p.to_soft_set()).unwrap());
    }

    #[test]
    fn discrete_topology_makes_every_operator_trivial() {
        let ctx = crate::SoftContext::shared(vec!["x1", "x2"], vec!["e1", "e2"]).unwrap();
        let budget = EnumerationBudget::default();
        let tau = SoftTopology::discrete(&ctx, &budget).unwrap();
        assert_eq!(tau.opens().len(), 16);
        for a in iter_all(&ctx) {
            assert_eq!(tau.soft_closure(&a).unwrap(), a);
            assert_eq!(tau.soft_interior(&a).unwrap(), a);
            assert!(tau.closure_operators_agree(&a).unwrap());
        }
    }

    #[test]
    fn point_topology_validate_flags_gaps() {
        let ex = example3();
        assert!(ex.tau.induced_topology("e1").unwrap().validate().verdict);
        let broken = PointTopology { universe: vec!["a".into(), "b".into()], opens: vec![0b01, 0b10, 0b11] };
        let report = broken.validate();
        assert!(!report.verdict);
        assert_eq!(report.witnesses[0].label, "empty-set-missing");
    }
}
