//! Soft contexts: the fixed pair (universe, parameter set) that every soft
//! set, topology and mapping is relative to.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::set::SoftSet;

/// Largest supported universe; element subsets are stored as `u64` bitmasks.
pub const MAX_UNIVERSE: usize = 64;

/// A finite universe of elements together with a finite set of parameters.
///
/// Both collections keep their declaration order, which fixes canonical
/// iteration, rendering and enumeration order everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SoftContext {
    universe: Vec<String>,
    parameters: Vec<String>,
}

fn validate_identifiers(names: &[String]) -> Result<(), Error> {
    let mut seen = HashSet::new();
    for name in names {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidIdentifier(name.clone()));
        }
        if !seen.insert(name) {
            return Err(Error::DuplicateIdentifier(name.clone()));
        }
    }
    Ok(())
}

impl SoftContext {
    pub fn new<U, P>(universe: U, parameters: P) -> Result<Self, Error>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        P: IntoIterator,
        P::Item: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if parameters.is_empty() {
            return Err(Error::EmptyParameters);
        }
        if universe.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge { size: universe.len() });
        }
        validate_identifiers(&universe)?;
        validate_identifiers(&parameters)?;
        Ok(SoftContext { universe, parameters })
    }

    /// Convenience constructor returning the shared handle used by soft sets.
    pub fn shared<U, P>(universe: U, parameters: P) -> Result<Arc<Self>, Error>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        P: IntoIterator,
        P::Item: Into<String>,
    {
        Self::new(universe, parameters).map(Arc::new)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn element_count(&self) -> usize {
        self.universe.len()
    }

    pub fn parameter_count(&self) -> usize {
        self.parameters.len()
    }

    /// Number of (parameter, element) cells; a soft set is a subset of these.
    pub fn cell_count(&self) -> usize {
        self.universe.len() * self.parameters.len()
    }

    /// `2^cell_count()` as a `u128`, or `None` when it does not fit.
    pub fn soft_set_count(&self) -> Option<u128> {
        let cells = self.cell_count();
        if cells >= 128 {
            None
        } else {
            Some(1u128 << cells)
        }
    }

    pub fn element_index(&self, name: &str) -> Result<usize, Error> {
        self.universe
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    pub fn parameter_index(&self, name: &str) -> Result<usize, Error> {
        self.parameters
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownParameter(name.to_owned()))
    }

    /// Bitmask with one bit per universe element.
    pub(crate) fn full_mask(&self) -> u64 {
        let n = self.universe.len();
        if n == MAX_UNIVERSE {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }
}

/// Contexts are interchangeable when they hold the same identifiers in the
/// same order; pointer equality is the fast path for shared handles.
pub(crate) fn same_context(a: &Arc<SoftContext>, b: &Arc<SoftContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A soft point: the soft set that is a singleton at one parameter and empty
/// at every other parameter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SoftPoint {
    context: Arc<SoftContext>,
    parameter: usize,
    element: usize,
}

impl SoftPoint {
    pub fn new(context: &Arc<SoftContext>, element: &str, parameter: &str) -> Result<Self, Error> {
        Ok(SoftPoint {
            context: context.clone(),
            parameter: context.parameter_index(parameter)?,
            element: context.element_index(element)?,
        })
    }

    pub(crate) fn from_indices(context: &Arc<SoftContext>, parameter: usize, element: usize) -> Self {
        debug_assert!(parameter < context.parameter_count());
        debug_assert!(element < context.element_count());
        SoftPoint { context: context.clone(), parameter, element }
    }

    /// Every soft point of a context in canonical (parameter-major) order.
    pub fn all(context: &Arc<SoftContext>) -> Vec<SoftPoint> {
        let mut points = Vec::with_capacity(context.cell_count());
        for parameter in 0..context.parameter_count() {
            for element in 0..context.element_count() {
                points.push(SoftPoint::from_indices(context, parameter, element));
            }
        }
        points
    }

    pub fn context(&self) -> &Arc<SoftContext> {
        &self.context
    }

    pub fn element_name(&self) -> &str {
        &self.context.universe()[self.element]
    }

    pub fn parameter_name(&self) -> &str {
        &self.context.parameters()[self.parameter]
    }

    pub(crate) fn parameter_index(&self) -> usize {
        self.parameter
    }

    pub(crate) fn element_index(&self) -> usize {
        self.element
    }

    /// The point viewed as a soft set.
    pub fn to_soft_set(&self) -> SoftSet {
        let mut masks = vec![0u64; self.context.parameter_count()];
        masks[self.parameter] = 1u64 << self.element;
        SoftSet::from_masks(self.context.clone(), masks)
    }
}

impl fmt::Display for SoftPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.element_name(), self.parameter_name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_structures() {
        assert_eq!(
            SoftContext::new(Vec::<String>::new(), vec!["e1"]).unwrap_err(),
            Error::EmptyUniverse
        );
        assert_eq!(
            SoftContext::new(vec!["h1"], Vec::<String>::new()).unwrap_err(),
            Error::EmptyParameters
        );
    }

    #[test]
    fn rejects_duplicates_and_bad_identifiers() {
        assert_eq!(
            SoftContext::new(vec!["h1", "h1"], vec!["e1"]).unwrap_err(),
            Error::DuplicateIdentifier("h1".into())
        );
        assert_eq!(
            SoftContext::new(vec!["h 1"], vec!["e1"]).unwrap_err(),
            Error::InvalidIdentifier("h 1".into())
        );
    }

    #[test]
    fn rejects_oversized_universe() {
        let names: Vec<String> = (0..65).map(|i| format!("x{i}")).collect();
        assert_eq!(
            SoftContext::new(names, vec!["e1"]).unwrap_err(),
            Error::UniverseTooLarge { size: 65 }
        );
    }

    #[test]
    fn indices_follow_declaration_order() {
        let ctx = SoftContext::shared(vec!["h1", "h2", "h3"], vec!["e1", "e2"]).unwrap();
        assert_eq!(ctx.element_index("h2").unwrap(), 1);
        assert_eq!(ctx.parameter_index("e2").unwrap(), 1);
        assert_eq!(ctx.cell_count(), 6);
        assert_eq!(ctx.soft_set_count(), Some(64));
        assert!(matches!(ctx.element_index("zz"), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn points_enumerate_parameter_major() {
        let ctx = SoftContext::shared(vec!["h1", "h2"], vec!["e1", "e2"]).unwrap();
        let points = SoftPoint::all(&ctx);
        let rendered: Vec<String> = points.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["h1@e1", "h2@e1", "h1@e2", "h2@e2"]);
    }
}
