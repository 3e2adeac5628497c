//! Exact computation over finite soft topological spaces.
//!
//! A soft set over a universe `X` and a parameter set `E` assigns a subset of
//! `X` to every parameter. This crate implements the soft-set algebra, soft
//! topologies with their closure and interior operators, the ordinary point
//! topologies induced per parameter, and checkers for soft continuity, soft
//! open/closed mappings and soft homeomorphisms. An enumeration oracle
//! exhaustively sweeps every topology and point function over small contexts
//! and reports counterexamples as replayable witnesses.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything can be shared freely across threads; the sweeps
//! exploit this to run instances in parallel.

pub mod context;
pub mod error;
pub mod mapping;
pub mod oracle;
pub mod report;
pub mod set;
pub mod topology;

pub use context::{SoftContext, SoftPoint, MAX_UNIVERSE};
pub use error::Error;
pub use mapping::{theorem3_hypothesis, ConditionReport, ContinuityReport, SoftMapping};
pub use oracle::{
    closure_under_ops, enumerate_soft_sets, enumerate_soft_topologies, random_soft_set,
    random_soft_topology, sweep_theorem, EnumerationBudget, MappingInstance, SweepConfig,
    TheoremId, TheoremSweepReport, Violation,
};
pub use report::{CheckReport, Witness, WitnessItem};
pub use set::SoftSet;
pub use topology::{validate_topology, PointTopology, SoftTopology};

pub type Result<T> = std::result::Result<T, Error>;

/// Shared fixtures for the unit tests: small spaces with two parameters and
/// known verdicts, built once per test.
#[cfg(test)]
pub(crate) mod testkit {
    use std::sync::Arc;

    use crate::context::SoftContext;
    use crate::mapping::SoftMapping;
    use crate::oracle::EnumerationBudget;
    use crate::set::SoftSet;
    use crate::topology::SoftTopology;

    /// Builds a soft set over a two-parameter context.
    pub fn set(ctx: &Arc<SoftContext>, e1: &[&str], e2: &[&str]) -> SoftSet {
        SoftSet::new(ctx, [("e1", e1.to_vec()), ("e2", e2.to_vec())]).unwrap()
    }

    fn topology(ctx: &Arc<SoftContext>, sets: &[&SoftSet]) -> SoftTopology {
        let mut opens = vec![SoftSet::null(ctx), SoftSet::absolute(ctx)];
        opens.extend(sets.iter().map(|s| (*s).clone()));
        SoftTopology::new(ctx, opens).unwrap()
    }

    pub struct Example1 {
        pub ctx: Arc<SoftContext>,
        pub f1: SoftSet,
        pub f2: SoftSet,
        pub g1: SoftSet,
        pub g2: SoftSet,
        pub tau: SoftTopology,
        pub tau_prime: SoftTopology,
        pub map: SoftMapping,
    }

    /// Continuous non-injective self-map of a three-element universe.
    pub fn example1() -> Example1 {
        let ctx = SoftContext::shared(vec!["h1", "h2", "h3"], vec!["e1", "e2"]).unwrap();
        let f1 = set(&ctx, &["h1", "h2"], &["h3"]);
        let f2 = set(&ctx, &["h1", "h2", "h3"], &["h3"]);
        let g1 = set(&ctx, &["h1"], &["h3"]);
        let g2 = set(&ctx, &["h1", "h3"], &["h2", "h3"]);
        let tau = topology(&ctx, &[&f1, &f2]);
        let tau_prime = topology(&ctx, &[&g1, &g2]);
        let map =
            SoftMapping::new(&ctx, &ctx, [("h1", "h1"), ("h2", "h1"), ("h3", "h3")]).unwrap();
        Example1 { ctx, f1, f2, g1, g2, tau, tau_prime, map }
    }

    pub struct Example2 {
        pub ctx: Arc<SoftContext>,
        pub f1: SoftSet,
        pub f2: SoftSet,
        pub f3: SoftSet,
        pub f4: SoftSet,
        pub f5: SoftSet,
        pub g3: SoftSet,
        pub tau: SoftTopology,
        pub tau_prime: SoftTopology,
        pub map: SoftMapping,
    }

    /// Identity between two different topologies on the same space; not soft
    /// continuous.
    pub fn example2() -> Example2 {
        let ctx = SoftContext::shared(vec!["h1", "h2", "h3"], vec!["e1", "e2"]).unwrap();
        let f1 = set(&ctx, &["h2"], &["h1"]);
        let f2 = set(&ctx, &["h2", "h3"], &["h1", "h2"]);
        let f3 = set(&ctx, &["h3"], &["h1", "h2"]);
        let f4 = set(&ctx, &[], &["h1"]);
        let f5 = set(&ctx, &["h1", "h2", "h3"], &["h1", "h2"]);
        let g1 = set(&ctx, &["h2"], &["h1"]);
        let g2 = set(&ctx, &["h2", "h3"], &["h1", "h2"]);
        let g3 = set(&ctx, &["h1", "h2"], &["h1", "h2", "h3"]);
        let g4 = set(&ctx, &["h2"], &["h1", "h2"]);
        let tau = topology(&ctx, &[&f1, &f2, &f3, &f4, &f5]);
        let tau_prime = topology(&ctx, &[&g1, &g2, &g3, &g4]);
        let map = SoftMapping::identity(&ctx);
        Example2 { ctx, f1, f2, f3, f4, f5, g3, tau, tau_prime, map }
    }

    pub struct Example3 {
        pub ctx: Arc<SoftContext>,
        pub target: Arc<SoftContext>,
        pub g1: SoftSet,
        pub tau: SoftTopology,
        pub tau_prime: SoftTopology,
        pub map: SoftMapping,
    }

    /// Both induced point functions continuous, yet not soft continuous.
    pub fn example3() -> Example3 {
        let ctx = SoftContext::shared(vec!["x1", "x2", "x3"], vec!["e1", "e2"]).unwrap();
        let target = SoftContext::shared(vec!["y1", "y2", "y3"], vec!["e1", "e2"]).unwrap();
        let f1 = set(&ctx, &["x1"], &["x1", "x3"]);
        let f2 = set(&ctx, &["x2"], &["x1"]);
        let f3 = set(&ctx, &["x1", "x2"], &["x1", "x3"]);
        let f4 = set(&ctx, &[], &["x1"]);
        let f5 = set(&ctx, &["x1", "x2"], &["x1", "x2", "x3"]);
        let g1 = set(&target, &["y1", "y2", "y3"], &["y2"]);
        let g2 = set(&target, &["y1"], &["y2"]);
        let g3 = set(&target, &["y1", "y2"], &["y2"]);
        let tau = topology(&ctx, &[&f1, &f2, &f3, &f4, &f5]);
        let tau_prime = topology(&target, &[&g1, &g2, &g3]);
        let map =
            SoftMapping::new(&ctx, &target, [("x1", "y2"), ("x2", "y1"), ("x3", "y3")]).unwrap();
        Example3 { ctx, target, g1, tau, tau_prime, map }
    }

    pub struct Example4 {
        pub ctx: Arc<SoftContext>,
        pub tau: SoftTopology,
        pub tau_prime: SoftTopology,
        pub map: SoftMapping,
    }

    /// Identity from the indiscrete to the discrete topology: open and
    /// closed but not continuous.
    pub fn example4() -> Example4 {
        let ctx = SoftContext::shared(vec!["h1", "h2", "h3"], vec!["e1", "e2"]).unwrap();
        let tau = SoftTopology::indiscrete(&ctx);
        let tau_prime = SoftTopology::discrete(&ctx, &EnumerationBudget::default()).unwrap();
        let map = SoftMapping::identity(&ctx);
        Example4 { ctx, tau, tau_prime, map }
    }

    pub struct Example5 {
        pub ctx: Arc<SoftContext>,
        pub f1: SoftSet,
        pub tau: SoftTopology,
        pub tau_prime: SoftTopology,
        pub map: SoftMapping,
    }

    /// Constant map that is continuous but neither open nor closed.
    pub fn example5() -> Example5 {
        let ctx = SoftContext::shared(vec!["h1", "h2", "h3"], vec!["e1", "e2"]).unwrap();
        let f1 = set(&ctx, &["h2"], &["h1"]);
        let f2 = set(&ctx, &["h1", "h3"], &["h2", "h3"]);
        let f3 = set(&ctx, &["h2"], &["h1", "h2", "h3"]);
        let f4 = set(&ctx, &[], &["h1"]);
        let f5 = set(&ctx, &["h1", "h3"], &["h1", "h2", "h3"]);
        let f6 = set(&ctx, &[], &["h2", "h3"]);
        let f7 = set(&ctx, &[], &["h1", "h2", "h3"]);
        let g1 = set(&ctx, &["h2"], &["h1"]);
        let g2 = set(&ctx, &["h2", "h3"], &["h1", "h2"]);
        let g3 = set(&ctx, &["h1", "h2"], &["h1", "h2", "h3"]);
        let g4 = set(&ctx, &["h2"], &["h1", "h2"]);
        let tau = topology(&ctx, &[&f1, &f2, &f3, &f4, &f5, &f6, &f7]);
        let tau_prime = topology(&ctx, &[&g1, &g2, &g3, &g4]);
        let map =
            SoftMapping::new(&ctx, &ctx, [("h1", "h1"), ("h2", "h1"), ("h3", "h1")]).unwrap();
        Example5 { ctx, f1, tau, tau_prime, map }
    }

    pub struct Example6 {
        pub ctx: Arc<SoftContext>,
        pub target: Arc<SoftContext>,
        pub f1: SoftSet,
        pub g1: SoftSet,
        pub tau: SoftTopology,
        pub tau_prime: SoftTopology,
        pub map: SoftMapping,
    }

    /// Open but neither closed nor continuous, onto a two-element universe.
    pub fn example6() -> Example6 {
        let ctx = SoftContext::shared(vec!["h1", "h2", "h3"], vec!["e1", "e2"]).unwrap();
        let target = SoftContext::shared(vec!["a", "b"], vec!["e1", "e2"]).unwrap();
        let f1 = set(&ctx, &["h1", "h2"], &["h3"]);
        let f2 = set(&ctx, &["h1", "h2", "h3"], &["h3"]);
        let g1 = set(&target, &["a", "b"], &["b"]);
        let g2 = set(&target, &["a"], &["b"]);
        let tau = topology(&ctx, &[&f1, &f2]);
        let tau_prime = topology(&target, &[&g1, &g2]);
        let map =
            SoftMapping::new(&ctx, &target, [("h1", "a"), ("h2", "b"), ("h3", "b")]).unwrap();
        Example6 { ctx, target, f1, g1, tau, tau_prime, map }
    }

    pub struct Example7 {
        pub ctx: Arc<SoftContext>,
        pub target: Arc<SoftContext>,
        pub f1: SoftSet,
        pub tau: SoftTopology,
        pub tau_prime: SoftTopology,
        pub map: SoftMapping,
    }

    /// Closed but neither open nor continuous, onto a two-element universe.
    pub fn example7() -> Example7 {
        let ctx = SoftContext::shared(vec!["h1", "h2", "h3"], vec!["e1", "e2"]).unwrap();
        let target = SoftContext::shared(vec!["a", "b"], vec!["e1", "e2"]).unwrap();
        let f1 = set(&ctx, &["h1", "h3"], &["h2"]);
        let f2 = set(&ctx, &["h1", "h2", "h3"], &["h2", "h3"]);
        let f3 = set(&ctx, &["h3"], &["h2"]);
        let g1 = set(&target, &["a", "b"], &["b"]);
        let g2 = set(&target, &["b"], &[]);
        let tau = topology(&ctx, &[&f1, &f2, &f3]);
        let tau_prime = topology(&target, &[&g1, &g2]);
        let map =
            SoftMapping::new(&ctx, &target, [("h1", "a"), ("h2", "a"), ("h3", "b")]).unwrap();
        Example7 { ctx, target, f1, tau, tau_prime, map }
    }
}
