//! Finite semigroups given by Cayley tables.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::{Error, Result};

/// Index of an element in its semigroup's element list.
pub type Elem = usize;

/// Default bound on the order of constructed semigroups.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// A finite semigroup stored as a validated Cayley table.
///
/// Elements are referred to by index; names are carried along for display
/// and for the file formats. `mul(i, j)` is the product with `i` on the left.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(into = "CayleyRows", try_from = "CayleyRows")
)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    table: Vec<Elem>,
}

/// Serde shape of a semigroup: `{"elements": [...], "table": [[...], ...]}`.
#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct CayleyRows {
    elements: Vec<String>,
    table: Vec<Vec<Elem>>,
}

#[cfg(feature = "serde")]
impl From<FiniteSemigroup> for CayleyRows {
    fn from(s: FiniteSemigroup) -> Self {
        CayleyRows { table: s.rows(), elements: s.names }
    }
}

#[cfg(feature = "serde")]
impl TryFrom<CayleyRows> for FiniteSemigroup {
    type Error = Error;

    fn try_from(doc: CayleyRows) -> Result<Self> {
        FiniteSemigroup::new(doc.elements, doc.table)
    }
}

/// Index and period of the monogenic subsemigroup generated by an element:
/// `s^(index + period) = s^index` with both as small as possible.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Monogenic {
    pub index: usize,
    pub period: usize,
}

impl FiniteSemigroup {
    /// Validates and builds a semigroup from element names and table rows.
    ///
    /// Reports the first failing associativity triple in lexicographic order.
    pub fn new(names: Vec<String>, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if rows.len() != n {
            return Err(Error::NonSquare { row: rows.len(), len: 0, expected: n });
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NonSquare { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::IndexOutOfRange { row, col, value, order: n });
                }
                table.push(value);
            }
        }
        let s = FiniteSemigroup { names, table };
        s.check_associative()?;
        Ok(s)
    }

    /// For tables derived from already validated ones (powers, subalgebras),
    /// where associativity is inherited.
    pub(crate) fn new_unchecked(names: Vec<String>, rows: Vec<Vec<Elem>>) -> Self {
        debug_assert_eq!(names.len(), rows.len());
        debug_assert!(rows.iter().flatten().all(|&x| x < names.len()));
        FiniteSemigroup { names, table: flatten(rows) }
    }

    /// Semigroup whose elements are named by their indices.
    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Result<Self> {
        let names = (0..rows.len()).map(|i| i.to_string()).collect();
        Self::new(names, rows)
    }

    /// Builds the table from a product function.
    pub fn from_fn(names: Vec<String>, mul: impl Fn(Elem, Elem) -> Elem) -> Result<Self> {
        let n = names.len();
        let rows = (0..n).map(|i| (0..n).map(|j| mul(i, j)).collect()).collect();
        Self::new(names, rows)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.order()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order() + b]
    }

    pub fn row(&self, a: Elem) -> &[Elem] {
        let n = self.order();
        &self.table[a * n..(a + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.elements().map(|a| self.row(a).to_vec()).collect()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    /// Looks up an element by name, falling back to a decimal index.
    pub fn resolve(&self, token: &str) -> Result<Elem> {
        if let Some(i) = self.index_of(token) {
            return Ok(i);
        }
        match token.parse::<usize>() {
            Ok(i) if i < self.order() => Ok(i),
            _ => Err(Error::UnknownElement(token.to_string())),
        }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn is_idempotent(&self, s: Elem) -> bool {
        self.mul(s, s) == s
    }

    /// Product of a non-empty word, left to right.
    pub fn product(&self, word: &[Elem]) -> Option<Elem> {
        let (&first, rest) = word.split_first()?;
        Some(rest.iter().fold(first, |acc, &w| self.mul(acc, w)))
    }

    /// `s^k` for `k ≥ 1`, by repeated squaring.
    pub fn pow(&self, s: Elem, k: usize) -> Elem {
        assert!(k >= 1, "exponent must be positive");
        let mut result = None;
        let mut base = s;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base,
                    Some(r) => self.mul(r, base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        result.unwrap()
    }

    /// Index and period of `⟨s⟩`, by Floyd cycle detection on `p ↦ p·s`.
    pub fn monogenic(&self, s: Elem) -> Monogenic {
        let step = |p: Elem| self.mul(p, s);
        // x_0 = s, x_k = s^(k+1)
        let mut tortoise = step(s);
        let mut hare = step(step(s));
        while tortoise != hare {
            tortoise = step(tortoise);
            hare = step(step(hare));
        }
        let mut mu = 0;
        tortoise = s;
        while tortoise != hare {
            tortoise = step(tortoise);
            hare = step(hare);
            mu += 1;
        }
        let mut period = 1;
        hare = step(tortoise);
        while tortoise != hare {
            hare = step(hare);
            period += 1;
        }
        Monogenic { index: mu + 1, period }
    }

    /// The unique idempotent in `⟨s⟩`.
    pub fn idempotent_power(&self, s: Elem) -> Elem {
        let m = self.monogenic(s);
        // smallest multiple of the period that is at least the index
        let k = m.index.div_ceil(m.period) * m.period;
        self.pow(s, k)
    }

    /// The two-sided zero, if any.
    pub fn zero(&self) -> Option<Elem> {
        self.elements().find(|&z| self.elements().all(|s| self.mul(z, s) == z && self.mul(s, z) == z))
    }

    /// The two-sided identity, if any.
    pub fn identity(&self) -> Option<Elem> {
        self.elements().find(|&e| self.elements().all(|s| self.mul(e, s) == s && self.mul(s, e) == s))
    }

    /// Left divisors of `s`: all `t` with `s = t·u` for some `u` in the semigroup.
    pub fn divisors(&self, s: Elem) -> Vec<Elem> {
        self.elements().filter(|&t| self.row(t).contains(&s)).collect()
    }

    /// Direct product with componentwise multiplication. Elements are ordered
    /// lexicographically with the right factor varying fastest.
    pub fn direct_product(&self, other: &FiniteSemigroup, cap: usize) -> Result<Self> {
        let (n, m) = (self.order(), other.order());
        let size = n.saturating_mul(m);
        if size > cap {
            return Err(Error::SizeCap { size, cap });
        }
        let names = (0..size).map(|i| format!("({},{})", self.name(i / m), other.name(i % m))).collect();
        Self::from_fn(names, |a, b| self.mul(a / m, b / m) * m + other.mul(a % m, b % m))
    }

    /// `S^n` on n-tuples, ordered lexicographically (last coordinate fastest).
    /// Element names are tuple literals such as `(0,1)`.
    pub fn direct_power(&self, n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("direct power needs n ≥ 1".into()));
        }
        let k = self.order();
        let exp = u32::try_from(n).unwrap_or(u32::MAX);
        let size =
            k.checked_pow(exp).filter(|&s| s <= cap).ok_or(Error::SizeCap { size: k.saturating_pow(exp), cap })?;
        let decode = |mut idx: usize| {
            let mut t = vec![0; n];
            for c in (0..n).rev() {
                t[c] = idx % k;
                idx /= k;
            }
            t
        };
        let tuples: Vec<Vec<Elem>> = (0..size).map(decode).collect();
        let names = tuples.iter().map(|t| tuple_literal(self, t)).collect();
        let rows = tuples
            .iter()
            .map(|a| tuples.iter().map(|b| a.iter().zip(b).fold(0, |acc, (&x, &y)| acc * k + self.mul(x, y))).collect())
            .collect();
        // products of valid tables are associative; skip the cubic re-check
        Ok(FiniteSemigroup::new_unchecked(names, rows))
    }

    /// Smallest product-closed set containing `seed`, in ascending order.
    ///
    /// Panics if a seed index is out of range.
    pub fn closure(&self, seed: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.order()];
        let mut members = Vec::new();
        for &s in seed {
            if !member[s] {
                member[s] = true;
                members.push(s);
            }
        }
        let mut next = 0;
        while next < members.len() {
            let x = members[next];
            next += 1;
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                i += 1;
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !member[p] {
                        member[p] = true;
                        members.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    pub fn is_closed(&self, set: &[Elem]) -> bool {
        let mut member = vec![false; self.order()];
        for &s in set {
            member[s] = true;
        }
        set.iter().all(|&a| set.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// The subsemigroup on a closed subset, together with the embedding
    /// (`embedding[i]` is the element of `self` behind index `i`).
    pub fn subsemigroup(&self, set: &[Elem]) -> Result<(FiniteSemigroup, Vec<Elem>)> {
        let mut elems = set.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(&bad) = elems.iter().find(|&&e| e >= self.order()) {
            return Err(Error::ElementOutOfRange { index: bad, order: self.order() });
        }
        if !self.is_closed(&elems) {
            return Err(Error::NotClosed);
        }
        let mut local = vec![usize::MAX; self.order()];
        for (i, &e) in elems.iter().enumerate() {
            local[e] = i;
        }
        let names = elems.iter().map(|&e| self.names[e].clone()).collect();
        let table = elems
            .iter()
            .flat_map(|&a| elems.iter().map(move |&b| (a, b)))
            .map(|(a, b)| local[self.mul(a, b)])
            .collect();
        Ok((FiniteSemigroup { names, table }, elems))
    }

    /// Copy of `self` with element `i` moved to position `perm[i]`.
    pub fn relabel(&self, perm: &[Elem]) -> Result<Self> {
        let n = self.order();
        let mut inverse = vec![usize::MAX; n];
        if perm.len() != n {
            return Err(Error::Precondition("permutation has the wrong length".into()));
        }
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || inverse[p] != usize::MAX {
                return Err(Error::Precondition("not a permutation".into()));
            }
            inverse[p] = i;
        }
        let names = inverse.iter().map(|&i| self.names[i].clone()).collect();
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| perm[self.mul(inverse[a], inverse[b])])
            .collect();
        Ok(FiniteSemigroup { names, table })
    }

    /// Whether `map` (indexed by elements of `self`) preserves products into `target`.
    pub fn is_homomorphism(&self, target: &FiniteSemigroup, map: &[Elem]) -> bool {
        map.len() == self.order()
            && map.iter().all(|&m| m < target.order())
            && self.elements().all(|a| self.elements().all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }
}

fn flatten(rows: Vec<Vec<Elem>>) -> Vec<Elem> {
    rows.into_iter().flatten().collect()
}

/// `(a,b,c)` using element names.
pub fn tuple_literal(s: &FiniteSemigroup, t: &[Elem]) -> String {
    let mut out = String::from("(");
    for (i, &x) in t.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(s.name(x));
    }
    out.push(')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn l2_document_parses() {
        let l2 = FiniteSemigroup::new(names(&["0", "1"]), vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(l2.order(), 2);
        assert!(l2.is_commutative());
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        let err = FiniteSemigroup::from_rows(vec![vec![0, 0, 0], vec![0, 0, 3], vec![0, 0, 0]]).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { row: 1, col: 2, value: 3, order: 3 });
    }

    #[test]
    fn non_square_and_empty_are_rejected() {
        assert_eq!(FiniteSemigroup::from_rows(vec![]).unwrap_err(), Error::Empty);
        let err = FiniteSemigroup::from_rows(vec![vec![0, 0], vec![0]]).unwrap_err();
        assert!(matches!(err, Error::NonSquare { row: 1, len: 1, expected: 2 }));
    }

    #[test]
    fn first_associativity_failure_is_reported() {
        // x*y = 1 - y: (0*0)*0 = 1 but 0*(0*0) = 0
        let rows = vec![vec![1, 0], vec![1, 0]];
        let err = FiniteSemigroup::from_rows(rows.clone()).unwrap_err();
        let Error::NotAssociative { i, j, k } = err else { panic!("{err:?}") };
        let m = |a: usize, b: usize| rows[a][b];
        assert_ne!(m(m(i, j), k), m(i, m(j, k)));
        // and nothing lexicographically smaller fails
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    if (a, b, c) < (i, j, k) {
                        assert_eq!(m(m(a, b), c), m(a, m(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn gn3_is_associative() {
        // brute force over all 27 triples
        let rows = vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]];
        let m = |a: usize, b: usize| rows[a][b];
        let mut checked = 0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    assert_eq!(m(m(a, b), c), m(a, m(b, c)));
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 27);
        let gn3 = FiniteSemigroup::new(names(&["e", "g", "a"]), rows).unwrap();
        assert_eq!(gn3.order(), 3);
    }

    #[test]
    fn commutativity_of_catalog_entries() {
        assert!(catalog::get("L2").unwrap().is_commutative());
        assert!(!catalog::get("LZ2").unwrap().is_commutative());
        assert!(!catalog::get("S3").unwrap().is_commutative());
    }

    #[test]
    fn direct_powers() {
        let l2 = catalog::get("L2").unwrap();
        let sq = l2.direct_power(2, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(sq.order(), 4);
        assert!(sq.elements().all(|s| sq.is_idempotent(s)));
        assert_eq!(sq.name(1), "(0,1)");

        let t1 = catalog::get("T1").unwrap();
        assert_eq!(t1.direct_power(5, DEFAULT_SIZE_CAP).unwrap().order(), 1);

        // Z2^2 against a componentwise oracle: the Klein four-group
        let z2 = catalog::get("Z2").unwrap();
        let k4 = z2.direct_power(2, DEFAULT_SIZE_CAP).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let expected = ((a / 2) ^ (b / 2)) * 2 + ((a % 2) ^ (b % 2));
                assert_eq!(k4.mul(a, b), expected);
            }
            assert_eq!(k4.mul(a, a), 0);
        }
        assert!(k4.is_commutative());
    }

    #[test]
    fn direct_power_respects_cap() {
        let z3 = catalog::get("Z3").unwrap();
        assert!(matches!(z3.direct_power(8, DEFAULT_SIZE_CAP), Err(Error::SizeCap { cap: 4096, .. })));
        assert_eq!(z3.direct_power(7, DEFAULT_SIZE_CAP).unwrap().order(), 2187);
    }

    #[test]
    fn closures() {
        let nil3 = catalog::get("NIL3").unwrap();
        let x = nil3.index_of("x").unwrap();
        assert_eq!(nil3.closure(&[x]), vec![0, 1, 2]);
        let l2 = catalog::get("L2").unwrap();
        assert_eq!(l2.closure(&[1]), vec![1]);
        let z3 = catalog::get("Z3").unwrap();
        assert_eq!(z3.closure(&[1]), vec![0, 1, 2]);
    }

    #[test]
    fn monogenic_index_and_period() {
        let nil3 = catalog::get("NIL3").unwrap();
        // x, x^2 = y, x^3 = 0 = x^4
        assert_eq!(nil3.monogenic(1), Monogenic { index: 3, period: 1 });
        let z3 = catalog::get("Z3").unwrap();
        assert_eq!(z3.monogenic(1), Monogenic { index: 1, period: 3 });
        let gn3 = catalog::get("GN3").unwrap();
        // a, a^2 = e, a^3 = e
        assert_eq!(gn3.monogenic(2), Monogenic { index: 2, period: 1 });
        assert_eq!(gn3.idempotent_power(2), 0);
        // g: g, e, g -> index 1 period 2
        assert_eq!(gn3.monogenic(1), Monogenic { index: 1, period: 2 });
        assert_eq!(gn3.idempotent_power(1), 0);
    }

    #[test]
    fn relabel_is_an_isomorphism() {
        let s3 = catalog::get("S3").unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        let r = s3.relabel(&perm).unwrap();
        assert!(s3.is_homomorphism(&r, &perm));
    }
}
