//! Semilattices viewed as partial orders: `s ≤ t ⇔ st = s`.

use alloc::vec::Vec;

use crate::semigroup::{Elem, FiniteSemigroup};
use crate::{Error, Result};

/// A finite semigroup known to be commutative with every element idempotent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Semilattice {
    inner: FiniteSemigroup,
}

impl Semilattice {
    pub fn new(s: FiniteSemigroup) -> Result<Self> {
        if !s.is_commutative() || !s.elements().all(|x| s.is_idempotent(x)) {
            return Err(Error::NotSemilattice);
        }
        Ok(Semilattice { inner: s })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.inner
    }

    pub fn into_semigroup(self) -> FiniteSemigroup {
        self.inner
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.inner.mul(a, b)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.inner.mul(a, b) == a
    }

    /// The least element, which is the meet of everything.
    pub fn zero(&self) -> Elem {
        self.inner.elements().fold(0, |acc, x| self.meet(acc, x))
    }

    /// The largest element, if one exists.
    pub fn top(&self) -> Option<Elem> {
        self.inner.identity()
    }

    /// `{τ : τ ≤ s}`.
    pub fn principal_ideal(&self, s: Elem) -> Vec<Elem> {
        self.inner.elements().filter(|&t| self.leq(t, s)).collect()
    }

    /// `{τ : τ ≥ s}`.
    pub fn principal_filter(&self, s: Elem) -> Vec<Elem> {
        self.inner.elements().filter(|&t| self.leq(s, t)).collect()
    }

    /// Minimal elements above zero.
    pub fn atoms(&self) -> Vec<Elem> {
        let zero = self.zero();
        self.inner.elements().filter(|&a| a != zero && self.principal_ideal(a).len() == 2).collect()
    }

    /// The minimal non-zero element of least index.
    pub fn minimal_nonzero(&self) -> Result<Elem> {
        self.atoms().into_iter().next().ok_or(Error::TrivialSemilattice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn rejects_non_semilattices() {
        assert_eq!(Semilattice::new(catalog::get("Z2").unwrap()), Err(Error::NotSemilattice));
        assert_eq!(Semilattice::new(catalog::get("LZ2").unwrap()), Err(Error::NotSemilattice));
    }

    #[test]
    fn boolean_square() {
        let b = Semilattice::new(catalog::get("L2xL2").unwrap()).unwrap();
        let top = b.semigroup().index_of("(1,1)").unwrap();
        assert_eq!(b.principal_ideal(top), vec![0, 1, 2, 3]);
        assert_eq!(b.zero(), 0);
        assert_eq!(b.top(), Some(top));
        let atoms: Vec<&str> = b.atoms().into_iter().map(|a| b.semigroup().name(a)).collect();
        assert_eq!(atoms, ["(0,1)", "(1,0)"]);
        // lowest index among the atoms
        assert_eq!(b.semigroup().name(b.minimal_nonzero().unwrap()), "(0,1)");
    }

    #[test]
    fn chain_filter() {
        let c = Semilattice::new(catalog::get("SL3").unwrap()).unwrap();
        let e = c.semigroup().index_of("e").unwrap();
        assert_eq!(c.principal_filter(e), vec![1, 2]);
        assert_eq!(c.minimal_nonzero().unwrap(), e);
    }

    #[test]
    fn trivial_has_no_minimal_nonzero() {
        let t = Semilattice::new(catalog::get("T1").unwrap()).unwrap();
        assert_eq!(t.minimal_nonzero(), Err(Error::TrivialSemilattice));
    }

    #[test]
    fn meets_are_greatest_lower_bounds() {
        let b = Semilattice::new(catalog::get("L2xL2").unwrap()).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                let m = b.meet(x, y);
                assert!(b.leq(m, x) && b.leq(m, y));
                for z in 0..4 {
                    if b.leq(z, x) && b.leq(z, y) {
                        assert!(b.leq(z, m));
                    }
                }
            }
        }
    }
}
