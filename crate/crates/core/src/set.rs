//! Soft sets over a fixed context and their Boolean-style algebra.
//!
//! A soft set assigns a subset of the universe to every parameter. Subsets
//! are stored as one `u64` bitmask per parameter, in declaration order, so
//! the algebra is exact and the canonical form is unique.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::context::{same_context, SoftContext, SoftPoint};
use crate::error::Error;

/// A total assignment of element subsets to parameters.
#[derive(Debug, Clone)]
pub struct SoftSet {
    context: Arc<SoftContext>,
    masks: Vec<u64>,
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.context, &other.context) && self.masks == other.masks
    }
}

impl Eq for SoftSet {}

impl PartialOrd for SoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SoftSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_context = if Arc::ptr_eq(&self.context, &other.context) {
            Ordering::Equal
        } else {
            self.context.cmp(&other.context)
        };
        by_context.then_with(|| self.masks.cmp(&other.masks))
    }
}

impl Hash for SoftSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.masks.hash(state);
    }
}

impl SoftSet {
    /// The null soft set: empty at every parameter.
    pub fn null(context: &Arc<SoftContext>) -> Self {
        SoftSet { context: context.clone(), masks: vec![0; context.parameter_count()] }
    }

    /// The absolute soft set: the whole universe at every parameter.
    pub fn absolute(context: &Arc<SoftContext>) -> Self {
        let full = context.full_mask();
        SoftSet { context: context.clone(), masks: vec![full; context.parameter_count()] }
    }

    /// Builds a soft set from a parameter-to-elements assignment.
    ///
    /// The assignment must mention every parameter exactly once; unknown
    /// names and missing parameters are rejected.
    pub fn new<A, P, ES, E>(context: &Arc<SoftContext>, assignment: A) -> Result<Self, Error>
    where
        A: IntoIterator<Item = (P, ES)>,
        P: AsRef<str>,
        ES: IntoIterator<Item = E>,
        E: AsRef<str>,
    {
        let mut masks: Vec<Option<u64>> = vec![None; context.parameter_count()];
        for (parameter, elements) in assignment {
            let p = context.parameter_index(parameter.as_ref())?;
            if masks[p].is_some() {
                return Err(Error::DuplicateParameter(parameter.as_ref().to_owned()));
            }
            let mut mask = 0u64;
            for element in elements {
                mask |= 1u64 << context.element_index(element.as_ref())?;
            }
            masks[p] = Some(mask);
        }
        let mut resolved = Vec::with_capacity(masks.len());
        for (p, mask) in masks.into_iter().enumerate() {
            match mask {
                Some(m) => resolved.push(m),
                None => return Err(Error::MissingParameter(context.parameters()[p].clone())),
            }
        }
        Ok(SoftSet { context: context.clone(), masks: resolved })
    }

    pub(crate) fn from_masks(context: Arc<SoftContext>, masks: Vec<u64>) -> Self {
        debug_assert_eq!(masks.len(), context.parameter_count());
        debug_assert!(masks.iter().all(|m| m & !context.full_mask() == 0));
        SoftSet { context, masks }
    }

    /// Decodes the canonical index of a soft set: parameter 0 holds the most
    /// significant block of bits, so ascending codes match `Ord`.
    pub(crate) fn from_code(context: &Arc<SoftContext>, code: u128) -> Self {
        let params = context.parameter_count();
        let width = context.element_count();
        debug_assert!(context.cell_count() < 128);
        let full = context.full_mask();
        let mut masks = vec![0u64; params];
        for (p, mask) in masks.iter_mut().enumerate() {
            let shift = (params - 1 - p) * width;
            *mask = (code >> shift) as u64 & full;
        }
        SoftSet { context: context.clone(), masks }
    }

    /// Inverse of [`SoftSet::from_code`].
    #[cfg(test)]
    pub(crate) fn code(&self) -> u128 {
        let width = self.context.element_count();
        let params = self.context.parameter_count();
        debug_assert!(self.context.cell_count() < 128);
        let mut code = 0u128;
        for (p, mask) in self.masks.iter().enumerate() {
            code |= (*mask as u128) << ((params - 1 - p) * width);
        }
        code
    }

    pub fn context(&self) -> &Arc<SoftContext> {
        &self.context
    }

    pub(crate) fn mask(&self, parameter: usize) -> u64 {
        self.masks[parameter]
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.masks
    }

    fn require_same_context(&self, other: &SoftSet) -> Result<(), Error> {
        if same_context(&self.context, &other.context) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn zip_masks(&self, other: &SoftSet, op: impl Fn(u64, u64) -> u64) -> SoftSet {
        let masks = self
            .masks
            .iter()
            .zip(&other.masks)
            .map(|(a, b)| op(*a, *b))
            .collect();
        SoftSet { context: self.context.clone(), masks }
    }

    /// Parameterwise union.
    pub fn union(&self, other: &SoftSet) -> Result<SoftSet, Error> {
        self.require_same_context(other)?;
        Ok(self.zip_masks(other, |a, b| a | b))
    }

    /// Parameterwise intersection.
    pub fn intersection(&self, other: &SoftSet) -> Result<SoftSet, Error> {
        self.require_same_context(other)?;
        Ok(self.zip_masks(other, |a, b| a & b))
    }

    /// Parameterwise relative complement against the universe.
    pub fn complement(&self) -> SoftSet {
        let full = self.context.full_mask();
        let masks = self.masks.iter().map(|m| full & !m).collect();
        SoftSet { context: self.context.clone(), masks }
    }

    /// Parameterwise inclusion.
    pub fn is_subset_of(&self, other: &SoftSet) -> Result<bool, Error> {
        self.require_same_context(other)?;
        Ok(self.masks.iter().zip(&other.masks).all(|(a, b)| a & !b == 0))
    }

    /// Soft-point membership: the point's element belongs to the value at the
    /// point's parameter.
    pub fn contains_point(&self, point: &SoftPoint) -> Result<bool, Error> {
        if !same_context(&self.context, point.context()) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.masks[point.parameter_index()] >> point.element_index() & 1 == 1)
    }

    pub fn is_null(&self) -> bool {
        self.masks.iter().all(|m| *m == 0)
    }

    pub fn is_absolute(&self) -> bool {
        let full = self.context.full_mask();
        self.masks.iter().all(|m| *m == full)
    }

    /// Element names assigned to `parameter`, in declaration order.
    pub fn elements(&self, parameter: &str) -> Result<Vec<&str>, Error> {
        let p = self.context.parameter_index(parameter)?;
        Ok(self.element_names_at(p))
    }

    pub(crate) fn element_names_at(&self, parameter: usize) -> Vec<&str> {
        let mask = self.masks[parameter];
        self.context
            .universe()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, name)| name.as_str())
            .collect()
    }

    /// Soft points contained in this set, in canonical order.
    pub fn points(&self) -> Vec<SoftPoint> {
        let mut points = Vec::new();
        for (p, mask) in self.masks.iter().enumerate() {
            for e in 0..self.context.element_count() {
                if mask >> e & 1 == 1 {
                    points.push(SoftPoint::from_indices(&self.context, p, e));
                }
            }
        }
        points
    }
}

/// All soft sets of a context in canonical order (null first, absolute last).
///
/// Callers are responsible for checking an enumeration budget first; the
/// iterator itself only requires the code space to fit in a `u128`.
pub(crate) fn iter_all(context: &Arc<SoftContext>) -> impl Iterator<Item = SoftSet> {
    let context = context.clone();
    let count = context
        .soft_set_count()
        .expect("context too large to enumerate");
    (0..count).map(move |code| SoftSet::from_code(&context, code))
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (p, parameter) in self.context.parameters().iter().enumerate() {
            if p > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{parameter}: {{")?;
            for (i, name) in self.element_names_at(p).iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{name}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}
