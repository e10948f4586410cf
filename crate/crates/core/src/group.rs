//! Minimal group interface shared by enumerated permutation groups and the
//! symbolic extension groups.

use std::fmt::Debug;
use std::hash::Hash;

use crate::perm_group::PermutationGroup;

pub trait FiniteGroup {
    type Element: Clone + Eq + Hash + Debug;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn invert(&self, a: &Self::Element) -> Self::Element;
    fn is_member(&self, a: &Self::Element) -> bool;

    fn conjugate(&self, g: &Self::Element, u: &Self::Element) -> Self::Element {
        self.multiply(&self.multiply(&self.invert(u), g), u)
    }
}

/// Elements are indices into the enumeration order.
impl FiniteGroup for PermutationGroup {
    type Element = usize;

    fn identity(&self) -> usize {
        self.identity_index()
    }

    fn multiply(&self, a: &usize, b: &usize) -> usize {
        self.mul(*a, *b)
    }

    fn invert(&self, a: &usize) -> usize {
        self.inv(*a)
    }

    fn is_member(&self, a: &usize) -> bool {
        *a < self.order()
    }
}
