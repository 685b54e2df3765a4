//! Eventually periodic sequences over a finite semigroup.
//!
//! An [`EpSeq`] is a preperiod followed by a period repeated forever. Values
//! are kept canonical (primitive period, shortest preperiod), so structural
//! equality is equality of the infinite sequences. The base semigroup is not
//! stored; operations take it as an argument.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::semigroup::{Elem, FiniteSemigroup};
use crate::semilattice::Semilattice;
use crate::structure::ArchimedeanDecomposition;
use crate::{Error, Result};

pub const DEFAULT_PERIOD_CAP: usize = 1 << 16;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EpSeq {
    pre: Vec<Elem>,
    per: Vec<Elem>,
}

impl EpSeq {
    pub fn new(pre: Vec<Elem>, per: Vec<Elem>) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut s = EpSeq { pre, per };
        s.canonicalize();
        Ok(s)
    }

    /// The recurring element `σ̄ = σσσ…`.
    pub fn recurring(word: Vec<Elem>) -> Result<Self> {
        Self::new(Vec::new(), word)
    }

    /// The diagonal element `s̄`.
    pub fn constant(s: Elem) -> Self {
        EpSeq { pre: Vec::new(), per: alloc::vec![s] }
    }

    /// `σ(i,s)`: `s` at position `i` (1-based), `zero` elsewhere.
    pub fn sigma(i: usize, s: Elem, zero: Elem) -> Self {
        assert!(i >= 1, "positions are 1-based");
        let mut pre = alloc::vec![zero; i];
        pre[i - 1] = s;
        Self::new(pre, alloc::vec![zero]).expect("non-empty period")
    }

    /// `χ(i,j)`: `y` at position `i`, then `j` copies of `x`, then `zero`.
    pub fn chi(i: usize, j: usize, x: Elem, y: Elem, zero: Elem) -> Self {
        assert!(i >= 1, "positions are 1-based");
        let mut pre = alloc::vec![zero; i - 1];
        pre.push(y);
        pre.extend(core::iter::repeat_n(x, j));
        Self::new(pre, alloc::vec![zero]).expect("non-empty period")
    }

    pub fn pre(&self) -> &[Elem] {
        &self.pre
    }

    pub fn per(&self) -> &[Elem] {
        &self.per
    }

    pub fn is_recurring(&self) -> bool {
        self.pre.is_empty()
    }

    /// Letter at 0-based position `i`.
    pub fn at(&self, i: usize) -> Elem {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    /// The first `n` letters.
    pub fn truncate(&self, n: usize) -> Vec<Elem> {
        (0..n).map(|i| self.at(i)).collect()
    }

    /// Largest letter index, for checking against a base.
    fn max_letter(&self) -> Option<Elem> {
        self.pre.iter().chain(&self.per).copied().max()
    }

    fn check_base(&self, base: &FiniteSemigroup) -> Result<()> {
        match self.max_letter() {
            Some(m) if m >= base.order() => Err(Error::ElementOutOfRange { index: m, order: base.order() }),
            _ => Ok(()),
        }
    }

    fn canonicalize(&mut self) {
        let p = self.per.len();
        if let Some(d) = (1..p).find(|&d| p.is_multiple_of(d) && (d..p).all(|i| self.per[i] == self.per[i - d])) {
            self.per.truncate(d);
        }
        while let Some(&last) = self.pre.last() {
            if last != *self.per.last().unwrap() {
                break;
            }
            self.pre.pop();
            self.per.rotate_right(1);
        }
    }

    /// Coordinatewise image under a map of letters.
    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Self {
        let mut s =
            EpSeq { pre: self.pre.iter().map(|&x| f(x)).collect(), per: self.per.iter().map(|&x| f(x)).collect() };
        s.canonicalize();
        s
    }

    /// Parses `pre|per` with comma-separated element names or indices.
    pub fn parse(base: &FiniteSemigroup, text: &str) -> Result<Self> {
        let (pre, per) = text.split_once('|').ok_or_else(|| Error::Parse(alloc::format!("missing '|' in {text:?}")))?;
        let word = |part: &str| -> Result<Vec<Elem>> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',').map(|tok| base.resolve(tok.trim())).collect()
        };
        Self::new(word(pre)?, word(per)?)
    }

    pub fn display(&self, base: &FiniteSemigroup) -> String {
        let mut out = String::new();
        let join = |out: &mut String, w: &[Elem]| {
            for (k, &x) in w.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{}", base.name(x));
            }
        };
        join(&mut out, &self.pre);
        out.push('|');
        join(&mut out, &self.per);
        out
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> Option<usize> {
    (a / gcd(a, b)).checked_mul(b)
}

/// Pointwise product with the default period cap.
pub fn ep_product(base: &FiniteSemigroup, a: &EpSeq, b: &EpSeq) -> Result<EpSeq> {
    ep_product_capped(base, a, b, DEFAULT_PERIOD_CAP)
}

pub fn ep_product_capped(base: &FiniteSemigroup, a: &EpSeq, b: &EpSeq, cap: usize) -> Result<EpSeq> {
    a.check_base(base)?;
    b.check_base(base)?;
    let period = lcm(a.per.len(), b.per.len())
        .filter(|&p| p <= cap)
        .ok_or(Error::PeriodCap { period: a.per.len().saturating_mul(b.per.len()), cap })?;
    let start = a.pre.len().max(b.pre.len());
    let letter = |i: usize| base.mul(a.at(i), b.at(i));
    EpSeq::new((0..start).map(letter).collect(), (start..start + period).map(letter).collect())
}

/// `a^k` for `k ≥ 1`.
pub fn ep_pow(base: &FiniteSemigroup, a: &EpSeq, k: usize) -> Result<EpSeq> {
    a.check_base(base)?;
    Ok(a.map(|x| base.pow(x, k)))
}

/// `a ≤ b` in the componentwise semilattice order.
pub fn ep_leq(base: &Semilattice, a: &EpSeq, b: &EpSeq) -> Result<bool> {
    Ok(ep_product(base.semigroup(), a, b)? == *a)
}

/// Coordinatewise image under `φ`; letters stay indices of `S` (idempotents).
pub fn ep_phi(decomposition: &ArchimedeanDecomposition, a: &EpSeq) -> Result<EpSeq> {
    if let Some(m) = a.max_letter().filter(|&m| m >= decomposition.phi.len()) {
        return Err(Error::ElementOutOfRange { index: m, order: decomposition.phi.len() });
    }
    Ok(a.map(|x| decomposition.phi[x]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::structure::archimedean;
    use proptest::prelude::*;

    fn rec(w: &[Elem]) -> EpSeq {
        EpSeq::recurring(w.to_vec()).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(rec(&[1, 0, 1, 0]), rec(&[1, 0]));
        let s = EpSeq::new(vec![0, 1, 0], vec![1, 0]).unwrap();
        assert_eq!(s, rec(&[0, 1]));
        assert!(s.is_recurring());
        let t = EpSeq::new(vec![1, 1], vec![0, 1, 0, 1]).unwrap();
        assert_eq!(t.pre(), [1]);
        assert_eq!(t.per(), [1, 0]);
        assert_eq!(EpSeq::new(vec![], vec![]), Err(Error::EmptyPeriod));
    }

    #[test]
    fn l2_product() {
        let l2 = catalog::get("L2").unwrap();
        let p = ep_product(&l2, &rec(&[1, 0]), &rec(&[1, 1, 0, 0])).unwrap();
        assert_eq!(p, rec(&[1, 0, 0, 0]));
        let sl = Semilattice::new(l2).unwrap();
        assert!(!ep_leq(&sl, &rec(&[1, 0]), &rec(&[1, 1, 0, 0])).unwrap());
        assert!(!ep_leq(&sl, &rec(&[1, 1, 0, 0]), &rec(&[1, 0])).unwrap());
        assert!(ep_leq(&sl, &rec(&[0]), &rec(&[1, 0])).unwrap());
        assert!(ep_leq(&sl, &rec(&[0, 1]), &rec(&[1])).unwrap());
        assert!(!ep_leq(&sl, &rec(&[1]), &rec(&[0, 1])).unwrap());
    }

    #[test]
    fn nilpotent_shapes() {
        let nil3 = catalog::get("NIL3").unwrap();
        let (zero, x, y) = (0, 1, 2);
        // y = x·x; with the construction's y taken as the element x
        let s = EpSeq::sigma(1, x, zero);
        let c = EpSeq::chi(1, 2, x, x, zero);
        assert_eq!(ep_product(&nil3, &s, &c).unwrap(), EpSeq::sigma(1, y, zero));
        assert_eq!(EpSeq::sigma(2, x, zero).truncate(4), [0, x, 0, 0]);
        assert_eq!(EpSeq::chi(1, 2, x, y, zero).truncate(5), [y, x, x, 0, 0]);
        assert_eq!(EpSeq::sigma(3, zero, zero), EpSeq::constant(zero));
    }

    #[test]
    fn diagonal_products() {
        let z3 = catalog::get("Z3").unwrap();
        let g = EpSeq::constant(1);
        assert_eq!(ep_product(&z3, &g, &g).unwrap(), EpSeq::constant(2));
    }

    #[test]
    fn truncation_unrolls() {
        assert_eq!(rec(&[1, 0]).truncate(5), [1, 0, 1, 0, 1]);
    }

    #[test]
    fn literals_round_trip() {
        let n2 = catalog::get("N2").unwrap();
        let s = EpSeq::parse(&n2, "a,a|a,0,a,0").unwrap();
        assert_eq!(s.display(&n2), "a,a|a,0");
        assert_eq!(EpSeq::parse(&n2, "0,a|0,a,0,a").unwrap().display(&n2), "|0,a");
        assert_eq!(EpSeq::parse(&n2, &s.display(&n2)).unwrap(), s);
        assert_eq!(EpSeq::parse(&n2, "|1,0").unwrap().display(&n2), "|a,0");
        assert!(matches!(EpSeq::parse(&n2, "0,a"), Err(Error::Parse(_))));
        assert_eq!(EpSeq::parse(&n2, "|b"), Err(Error::UnknownElement("b".into())));
    }

    #[test]
    fn phi_images() {
        let n2 = catalog::get("N2").unwrap();
        let d = archimedean(&n2).unwrap();
        assert_eq!(ep_phi(&d, &rec(&[0, 1])).unwrap(), EpSeq::constant(0));
        let gn3 = catalog::get("GN3").unwrap();
        let d = archimedean(&gn3).unwrap();
        let e = gn3.index_of("e").unwrap();
        let a = gn3.index_of("a").unwrap();
        assert_eq!(ep_phi(&d, &EpSeq::constant(a)).unwrap(), EpSeq::constant(e));
        let b = catalog::get("L2xL2").unwrap();
        let d = archimedean(&b).unwrap();
        let w = rec(&[1, 2, 3]);
        assert_eq!(ep_phi(&d, &w).unwrap(), w);
    }

    #[test]
    fn period_cap() {
        let l2 = catalog::get("L2").unwrap();
        let a = rec(&[0, 0, 1]);
        let b = rec(&[0, 1]);
        assert!(matches!(ep_product_capped(&l2, &a, &b, 5), Err(Error::PeriodCap { .. })));
        assert!(ep_product_capped(&l2, &a, &b, 6).is_ok());
    }

    fn arb_seq(order: usize) -> impl Strategy<Value = EpSeq> {
        (proptest::collection::vec(0..order, 0..5), proptest::collection::vec(0..order, 1..6))
            .prop_map(|(pre, per)| EpSeq::new(pre, per).unwrap())
    }

    proptest! {
        #[test]
        fn product_is_associative(a in arb_seq(3), b in arb_seq(3), c in arb_seq(3)) {
            let s = catalog::get("NIL3").unwrap();
            let ab_c = ep_product(&s, &ep_product(&s, &a, &b).unwrap(), &c).unwrap();
            let a_bc = ep_product(&s, &a, &ep_product(&s, &b, &c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
        }

        #[test]
        fn truncation_is_a_homomorphism(a in arb_seq(6), b in arb_seq(6), n in 1usize..40) {
            let s = catalog::get("S3").unwrap();
            let p = ep_product(&s, &a, &b).unwrap();
            let direct: Vec<Elem> = a.truncate(n).iter().zip(b.truncate(n)).map(|(&x, y)| s.mul(x, y)).collect();
            prop_assert_eq!(p.truncate(n), direct);
        }

        #[test]
        fn canonical_equality_is_sequence_equality(a in arb_seq(2), b in arb_seq(2)) {
            let w = 3 * (a.pre().len() + b.pre().len() + lcm(a.per().len(), b.per().len()).unwrap());
            prop_assert_eq!(a == b, a.truncate(w) == b.truncate(w));
        }

        #[test]
        fn canonicalization_is_idempotent(a in arb_seq(4)) {
            prop_assert_eq!(EpSeq::new(a.pre().to_vec(), a.per().to_vec()).unwrap(), a);
        }
    }
}
