//! Structural analysis of finite semigroups.
//!
//! Archimedean components follow the divisibility definition directly:
//! `s η t` iff some power of `s` lies in `tS¹` and some power of `t` lies in
//! `sS¹`. In a finite commutative semigroup each component holds exactly one
//! idempotent, and `φ` sends every element to the idempotent of its component.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::semigroup::{Elem, FiniteSemigroup};
use crate::semilattice::Semilattice;
use crate::{Error, Result};

pub fn idempotents(s: &FiniteSemigroup) -> Vec<Elem> {
    s.elements().filter(|&x| s.is_idempotent(x)).collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ArchimedeanDecomposition {
    /// Components in order of their least element.
    pub components: Vec<Vec<Elem>>,
    /// The idempotent of each component.
    pub idempotent_of_component: Vec<Elem>,
    /// `phi[s]` is the idempotent of the component containing `s`.
    pub phi: Vec<Elem>,
    /// `component_of[s]` indexes `components`.
    pub component_of: Vec<usize>,
}

impl ArchimedeanDecomposition {
    pub fn component_size_of_idempotent(&self, e: Elem) -> usize {
        self.components[self.component_of[e]].len()
    }
}

fn powers(s: &FiniteSemigroup, x: Elem) -> Vec<bool> {
    let mut seen = vec![false; s.order()];
    let mut p = x;
    while !seen[p] {
        seen[p] = true;
        p = s.mul(p, x);
    }
    seen
}

fn in_principal_right_ideal(s: &FiniteSemigroup, t: Elem, target: &[bool]) -> bool {
    target[t] || s.row(t).iter().any(|&p| target[p])
}

/// The definitional η test on a commutative semigroup.
pub fn eta_related(s: &FiniteSemigroup, a: Elem, b: Elem) -> bool {
    in_principal_right_ideal(s, b, &powers(s, a)) && in_principal_right_ideal(s, a, &powers(s, b))
}

pub fn archimedean(s: &FiniteSemigroup) -> Result<ArchimedeanDecomposition> {
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let n = s.order();
    let pow: Vec<Vec<bool>> = s.elements().map(|x| powers(s, x)).collect();
    let related = |a: Elem, b: Elem| in_principal_right_ideal(s, b, &pow[a]) && in_principal_right_ideal(s, a, &pow[b]);
    let mut component_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<Elem>> = Vec::new();
    for x in s.elements() {
        if component_of[x] != usize::MAX {
            continue;
        }
        let id = components.len();
        let members: Vec<Elem> = (x..n).filter(|&y| related(x, y)).collect();
        for &y in &members {
            component_of[y] = id;
        }
        components.push(members);
    }
    let mut idempotent_of_component = Vec::with_capacity(components.len());
    for c in &components {
        let ids: Vec<Elem> = c.iter().copied().filter(|&x| s.is_idempotent(x)).collect();
        if ids.len() != 1 {
            return Err(Error::Precondition(String::from("archimedean component without a unique idempotent")));
        }
        idempotent_of_component.push(ids[0]);
    }
    let phi = s.elements().map(|x| idempotent_of_component[component_of[x]]).collect();
    Ok(ArchimedeanDecomposition { components, idempotent_of_component, phi, component_of })
}

/// The semilattice of idempotents with its embedding into `S`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdempotentSemilattice {
    pub order: Semilattice,
    /// `elements[i]` is the element of `S` behind index `i` of `order`.
    pub elements: Vec<Elem>,
}

impl IdempotentSemilattice {
    pub fn local_index(&self, e: Elem) -> Option<usize> {
        self.elements.iter().position(|&x| x == e)
    }
}

/// `E(S)` for commutative `S`, checked to be the image of the natural
/// epimorphism `φ : S → S/η`.
pub fn idempotent_semilattice(s: &FiniteSemigroup) -> Result<IdempotentSemilattice> {
    let decomposition = archimedean(s)?;
    let elements = idempotents(s);
    let (sub, embedding) = s.subsemigroup(&elements)?;
    let order = Semilattice::new(sub)?;
    let phi = &decomposition.phi;
    let homomorphic = s.elements().all(|a| s.elements().all(|b| phi[s.mul(a, b)] == s.mul(phi[a], phi[b])));
    if !homomorphic || decomposition.components.len() != embedding.len() {
        return Err(Error::Precondition(String::from("φ is not onto E(S) as a homomorphism")));
    }
    Ok(IdempotentSemilattice { order, elements: embedding })
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Kernel {
    pub elements: Vec<Elem>,
    pub is_group: bool,
}

/// The two-sided ideal `S¹ x S¹`.
pub fn principal_ideal(s: &FiniteSemigroup, x: Elem) -> Vec<Elem> {
    let mut left = vec![false; s.order()];
    left[x] = true;
    for a in s.elements() {
        left[s.mul(a, x)] = true;
    }
    let mut ideal = left.clone();
    for (l, _) in left.iter().enumerate().filter(|(_, &m)| m) {
        for &p in s.row(l) {
            ideal[p] = true;
        }
    }
    ideal.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect()
}

/// The minimal ideal. The product of all elements lies in it, so it is the
/// principal ideal of that product.
pub fn minimal_ideal(s: &FiniteSemigroup) -> Kernel {
    let all: Vec<Elem> = s.elements().collect();
    let p = s.product(&all).expect("semigroups are non-empty");
    let elements = principal_ideal(s, p);
    let is_group = subset_is_group(s, &elements);
    Kernel { elements, is_group }
}

/// Whether a closed subset is a group under the induced product.
pub fn subset_is_group(s: &FiniteSemigroup, set: &[Elem]) -> bool {
    let identity = set.iter().copied().find(|&e| set.iter().all(|&k| s.mul(e, k) == k && s.mul(k, e) == k));
    match identity {
        None => false,
        Some(e) => set.iter().all(|&k| set.iter().any(|&m| s.mul(k, m) == e && s.mul(m, k) == e)),
    }
}

pub fn is_group(s: &FiniteSemigroup) -> bool {
    let all: Vec<Elem> = s.elements().collect();
    subset_is_group(s, &all)
}

/// Least `k` with all products of length `k` equal to the zero, if `S` has a
/// zero and is nilpotent.
pub fn nilpotency_class(s: &FiniteSemigroup) -> Option<usize> {
    let zero = s.zero()?;
    let n = s.order();
    let mut level = vec![true; n];
    let mut k = 1;
    loop {
        if level.iter().enumerate().all(|(x, &m)| !m || x == zero) {
            return Some(k);
        }
        let mut next = vec![false; n];
        for a in (0..n).filter(|&a| level[a]) {
            for &p in s.row(a) {
                next[p] = true;
            }
        }
        if next == level {
            return None;
        }
        level = next;
        k += 1;
    }
}

/// `S/I`: the ideal collapsed to a zero at index 0, other elements following
/// in their original order.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ReesQuotient {
    pub semigroup: FiniteSemigroup,
    /// `projection[s]` is the class of `s` in the quotient.
    pub projection: Vec<Elem>,
}

pub fn is_ideal(s: &FiniteSemigroup, set: &[Elem]) -> bool {
    let mut member = vec![false; s.order()];
    for &x in set {
        if x >= s.order() {
            return false;
        }
        member[x] = true;
    }
    !set.is_empty() && set.iter().all(|&x| s.elements().all(|a| member[s.mul(a, x)] && member[s.mul(x, a)]))
}

pub fn rees_quotient(s: &FiniteSemigroup, ideal: &[Elem]) -> Result<ReesQuotient> {
    if !is_ideal(s, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let outside: Vec<Elem> = s.elements().filter(|x| !ideal.contains(x)).collect();
    let mut projection = vec![0; s.order()];
    for (i, &x) in outside.iter().enumerate() {
        projection[x] = i + 1;
    }
    let zero_name = if outside.iter().any(|&x| s.name(x) == "0") { "I" } else { "0" };
    let mut names = vec![String::from(zero_name)];
    names.extend(outside.iter().map(|&x| String::from(s.name(x))));
    let mut rows = vec![vec![0; outside.len() + 1]; outside.len() + 1];
    for (i, &a) in outside.iter().enumerate() {
        for (j, &b) in outside.iter().enumerate() {
            rows[i + 1][j + 1] = projection[s.mul(a, b)];
        }
    }
    Ok(ReesQuotient { semigroup: FiniteSemigroup::new_unchecked(names, rows), projection })
}

/// A single-idempotent commutative semigroup as an ideal extension of its
/// kernel group `G` by the nilpotent quotient `S/G`.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExtensionDecomposition {
    pub kernel: Vec<Elem>,
    pub group: FiniteSemigroup,
    pub quotient: ReesQuotient,
    pub quotient_class: usize,
}

impl ExtensionDecomposition {
    pub fn group_trivial(&self) -> bool {
        self.group.order() == 1
    }

    pub fn quotient_trivial(&self) -> bool {
        self.quotient.semigroup.order() == 1
    }
}

pub fn extension_decomposition(s: &FiniteSemigroup) -> Result<ExtensionDecomposition> {
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    if idempotents(s).len() != 1 {
        return Err(Error::Precondition(String::from("exactly one idempotent is required")));
    }
    group_by_nilpotent(s)
}

/// Kernel group and nilpotent quotient, without the commutativity requirement.
pub fn group_by_nilpotent(s: &FiniteSemigroup) -> Result<ExtensionDecomposition> {
    let kernel = minimal_ideal(s);
    if !kernel.is_group {
        return Err(Error::Precondition(String::from("the minimal ideal is not a group")));
    }
    let (group, _) = s.subsemigroup(&kernel.elements)?;
    let quotient = rees_quotient(s, &kernel.elements)?;
    let quotient_class = nilpotency_class(&quotient.semigroup)
        .ok_or_else(|| Error::Precondition(String::from("S/G is not nilpotent")))?;
    Ok(ExtensionDecomposition { kernel: kernel.elements, group, quotient, quotient_class })
}

/// `(|I|, |J|)` when `S` satisfies `x² = x` and `xyz = xz`.
pub fn is_rectangular_band(s: &FiniteSemigroup) -> Option<(usize, usize)> {
    let bands = s.elements().all(|x| s.is_idempotent(x));
    let rectangular =
        bands && s.elements().all(|x| s.elements().all(|y| s.elements().all(|z| s.mul(s.mul(x, y), z) == s.mul(x, z))));
    if !rectangular {
        return None;
    }
    // x S is the R-class of x (size |J|), S x its L-class (size |I|)
    let count = |it: &mut dyn Iterator<Item = Elem>| {
        let mut seen = vec![false; s.order()];
        it.for_each(|p| seen[p] = true);
        seen.iter().filter(|&&b| b).count()
    };
    let rows = count(&mut s.elements().map(|a| s.mul(a, 0)));
    let cols = count(&mut s.row(0).iter().copied());
    Some((rows, cols))
}

/// Everything the analysis report shows about one semigroup.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StructureReport {
    pub order: usize,
    pub commutative: bool,
    pub idempotents: Vec<Elem>,
    pub archimedean: Option<ArchimedeanDecomposition>,
    pub kernel: Kernel,
    pub nilpotency_class: Option<usize>,
    pub decomposition: Option<ExtensionDecomposition>,
    pub rectangular_band: Option<(usize, usize)>,
}

pub fn analyze(s: &FiniteSemigroup) -> StructureReport {
    let commutative = s.is_commutative();
    let idempotents = idempotents(s);
    StructureReport {
        order: s.order(),
        commutative,
        archimedean: archimedean(s).ok(),
        kernel: minimal_ideal(s),
        nilpotency_class: nilpotency_class(s),
        decomposition: if commutative && idempotents.len() == 1 { extension_decomposition(s).ok() } else { None },
        rectangular_band: is_rectangular_band(s),
        idempotents,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Family};
    use crate::iso::are_isomorphic;
    use crate::semigroup::DEFAULT_SIZE_CAP;
    use alloc::string::ToString;

    fn get(name: &str) -> FiniteSemigroup {
        catalog::get(name).unwrap()
    }

    #[test]
    fn idempotent_sets() {
        assert_eq!(idempotents(&get("L2")), vec![0, 1]);
        assert_eq!(idempotents(&get("N3")), vec![0]);
        assert_eq!(idempotents(&get("GN3")), vec![0]);
    }

    #[test]
    fn archimedean_examples() {
        assert_eq!(archimedean(&get("L2")).unwrap().components, vec![vec![0], vec![1]]);
        let n2 = archimedean(&get("N2")).unwrap();
        assert_eq!(n2.components, vec![vec![0, 1]]);
        assert_eq!(n2.phi, vec![0, 0]);
        assert_eq!(archimedean(&get("SL3")).unwrap().components.len(), 3);
        let sl2n = archimedean(&get("SL2N")).unwrap();
        assert_eq!(sl2n.components, vec![vec![0, 1], vec![2]]);
        assert_eq!(sl2n.phi, vec![0, 0, 2]);
        assert_eq!(archimedean(&get("LZ2")), Err(Error::NotCommutative));
    }

    #[test]
    fn idempotent_semilattices() {
        let gn3 = idempotent_semilattice(&get("GN3")).unwrap();
        assert_eq!(gn3.order.order(), 1);
        let l2 = idempotent_semilattice(&get("L2")).unwrap();
        assert_eq!(l2.order.semigroup().rows(), get("L2").rows());
        let b = get("L2xL2");
        let e = idempotent_semilattice(&b).unwrap();
        assert_eq!(e.elements, vec![0, 1, 2, 3]);
        assert!(matches!(idempotent_semilattice(&get("S3")), Err(Error::NotCommutative)));
    }

    #[test]
    fn minimal_ideals() {
        assert_eq!(minimal_ideal(&get("GN3")), Kernel { elements: vec![0, 1], is_group: true });
        assert_eq!(minimal_ideal(&get("N3")), Kernel { elements: vec![0], is_group: true });
        assert_eq!(minimal_ideal(&get("LZ2")), Kernel { elements: vec![0, 1], is_group: false });
        assert_eq!(minimal_ideal(&get("S3")).elements.len(), 6);
    }

    #[test]
    fn kernel_is_intersection_of_all_principal_ideals() {
        for name in catalog::names() {
            let s = get(name);
            let mut inter = vec![true; s.order()];
            for x in s.elements() {
                let ideal = principal_ideal(&s, x);
                for (y, keep) in inter.iter_mut().enumerate() {
                    *keep &= ideal.contains(&y);
                }
            }
            let expected: Vec<Elem> = (0..s.order()).filter(|&y| inter[y]).collect();
            assert_eq!(minimal_ideal(&s).elements, expected, "{name}");
        }
    }

    #[test]
    fn nilpotency_classes() {
        assert_eq!(nilpotency_class(&get("N3")), Some(2));
        assert_eq!(nilpotency_class(&get("NIL3")), Some(3));
        assert_eq!(nilpotency_class(&get("MONO4")), Some(4));
        assert_eq!(nilpotency_class(&get("T1")), Some(1));
        assert_eq!(nilpotency_class(&get("Z2")), None);
        assert_eq!(nilpotency_class(&get("SL3")), None);
    }

    #[test]
    fn rees_quotients() {
        let gn3 = get("GN3");
        let q = rees_quotient(&gn3, &[0, 1]).unwrap();
        assert!(are_isomorphic(&q.semigroup, &get("N2")).unwrap().is_some());
        let all: Vec<Elem> = gn3.elements().collect();
        assert_eq!(rees_quotient(&gn3, &all).unwrap().semigroup.order(), 1);
        let nil3 = get("NIL3");
        let q = rees_quotient(&nil3, &[0, 2]).unwrap();
        assert!(are_isomorphic(&q.semigroup, &get("N2")).unwrap().is_some());
        assert_eq!(rees_quotient(&nil3, &[1]), Err(Error::NotAnIdeal));
        assert_eq!(rees_quotient(&nil3, &[]), Err(Error::NotAnIdeal));
    }

    #[test]
    fn extension_decompositions() {
        let d = extension_decomposition(&get("GN3")).unwrap();
        assert!(are_isomorphic(&d.group, &get("Z2")).unwrap().is_some());
        assert!(are_isomorphic(&d.quotient.semigroup, &get("N2")).unwrap().is_some());
        assert!(!d.group_trivial() && !d.quotient_trivial());
        assert_eq!(d.quotient_class, 2);

        let d = extension_decomposition(&get("Z3")).unwrap();
        assert_eq!(d.group.order(), 3);
        assert!(d.quotient_trivial());

        let d = extension_decomposition(&get("NIL3")).unwrap();
        assert!(d.group_trivial());
        assert_eq!(d.quotient_class, 3);
        assert!(are_isomorphic(&d.quotient.semigroup, &get("NIL3")).unwrap().is_some());

        assert!(matches!(extension_decomposition(&get("L2")), Err(Error::Precondition(_))));
        assert_eq!(extension_decomposition(&get("LZ2")), Err(Error::NotCommutative));
    }

    #[test]
    fn rectangular_bands() {
        assert_eq!(is_rectangular_band(&get("LZ2")), Some((2, 1)));
        assert_eq!(is_rectangular_band(&get("RB22")), Some((2, 2)));
        // 1·0·1 = 0 but 1·1 = 1
        let l2 = get("L2");
        assert_ne!(l2.mul(l2.mul(1, 0), 1), l2.mul(1, 1));
        assert_eq!(is_rectangular_band(&l2), None);
        assert_eq!(is_rectangular_band(&get("T1")), Some((1, 1)));
    }

    #[test]
    fn rectangular_band_is_left_zero_times_right_zero() {
        for (a, b) in [(1, 3), (2, 2), (3, 2)] {
            let rb = catalog::family(&Family::RectangularBand(a, b)).unwrap();
            let (i, j) = is_rectangular_band(&rb).unwrap();
            assert_eq!(i * j, rb.order());
            let lz = FiniteSemigroup::from_fn((0..i).map(|x| x.to_string()).collect(), |x, _| x).unwrap();
            let rz = FiniteSemigroup::from_fn((0..j).map(|x| x.to_string()).collect(), |_, y| y).unwrap();
            let product = lz.direct_product(&rz, DEFAULT_SIZE_CAP).unwrap();
            assert!(are_isomorphic(&rb, &product).unwrap().is_some());
        }
    }

    #[test]
    fn group_detection() {
        assert!(is_group(&get("S3")));
        assert!(is_group(&get("T1")));
        assert!(!is_group(&get("GN3")));
        assert!(!is_group(&get("LZ2")));
    }
}
