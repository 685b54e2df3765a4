//! Deciding whether a finite semigroup has countably many or continuum many
//! pairwise non-isomorphic countable subdirect powers.
//!
//! The decision tree:
//!
//! 1. groups: abelian → countable, otherwise continuum (a theorem on groups
//!    that this crate cites rather than proves);
//! 2. rectangular bands → countable;
//! 3. at least two idempotents (commutative) → continuum;
//! 4. a single idempotent with the kernel a group `G` and `S/G` nilpotent of
//!    class `k`: `G` trivial and `k ≤ 2` (null) → countable, `G` trivial and
//!    `k ≥ 3` → continuum, `G` and `S/G` both non-trivial → continuum. These
//!    constructions do not use commutativity, so this step also applies to
//!    non-commutative inputs;
//! 5. anything else is reported as unclassified.

use alloc::string::String;
use alloc::vec::Vec;

use crate::constructions::{build_chain, chain_algebra, hat, t_m, tilde, w_m, MSpec, WitnessFamily};
use crate::semigroup::DEFAULT_SIZE_CAP;
use crate::structure::{
    group_by_nilpotent, idempotent_semilattice, idempotents, is_group, is_rectangular_band, minimal_ideal,
    nilpotency_class,
};
use crate::{Error, FiniteSemigroup, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(rename_all = "kebab-case"))]
pub enum SdpType {
    Countable,
    Continuum,
    Unclassified,
}

/// The result that settles a branch of the tree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(rename_all = "kebab-case"))]
pub enum Rule {
    /// Abelian groups have countable type (external theorem on groups).
    AbelianGroup,
    /// Non-abelian groups have continuum type (external theorem on groups).
    NonAbelianGroup,
    /// Rectangular bands have countable type.
    RectangularBand,
    /// Commutative semigroups with two or more idempotents have continuum type.
    SeveralIdempotents,
    /// Null semigroups are determined by their size, hence countable type.
    NullSemigroup,
    /// Nilpotent of class above two: continuum type, via divisor counts.
    NilpotentAboveClassTwo,
    /// Non-trivial group extended by a non-trivial nilpotent: continuum type, via roots.
    GroupByNilpotent,
    /// Outside every settled case.
    Open,
}

impl Rule {
    pub fn citation(self) -> &'static str {
        match self {
            Rule::AbelianGroup => {
                "abelian groups have countably many countable subdirect powers (external theorem on groups)"
            }
            Rule::NonAbelianGroup => {
                "non-abelian groups have continuum many countable subdirect powers (external theorem on groups)"
            }
            Rule::RectangularBand => {
                "rectangular bands: a subdirect power is determined by the sizes of its two projections"
            }
            Rule::SeveralIdempotents => {
                "two or more idempotents: blow up chains of the idempotent semilattice over archimedean components"
            }
            Rule::NullSemigroup => "null semigroups are determined up to isomorphism by their size",
            Rule::NilpotentAboveClassTwo => {
                "nilpotent of class greater than 2: σ(i,s)/χ(i,j) families separated by divisor counts"
            }
            Rule::GroupByNilpotent => {
                "non-trivial group by non-trivial nilpotent: G^∞ ∪ Δ_S ∪ U_M families separated by root counts"
            }
            Rule::Open => "not covered by any settled case",
        }
    }

    pub fn verdict(self) -> SdpType {
        match self {
            Rule::AbelianGroup | Rule::RectangularBand | Rule::NullSemigroup => SdpType::Countable,
            Rule::Open => SdpType::Unclassified,
            _ => SdpType::Continuum,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RouteStep {
    pub condition: String,
    pub outcome: bool,
    pub rule: Option<Rule>,
}

/// Structural data the route was decided on.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witnesses {
    pub order: usize,
    pub commutative: bool,
    pub idempotent_count: usize,
    pub kernel: Vec<usize>,
    pub kernel_is_group: bool,
    pub nilpotency_class: Option<usize>,
    pub group_order: Option<usize>,
    pub quotient_order: Option<usize>,
    pub quotient_class: Option<usize>,
    pub rectangular_band: Option<(usize, usize)>,
}

/// Which construction produces a family of pairwise non-isomorphic witnesses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(rename_all = "kebab-case"))]
pub enum Suggestion {
    /// Chains of `E(S)` inserted at the least non-zero idempotent, blown up
    /// over the archimedean components.
    ChainTildeHat,
    Tm,
    Wm,
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassificationReport {
    pub verdict: SdpType,
    pub rule: Rule,
    pub route: Vec<RouteStep>,
    pub witnesses: Witnesses,
    pub suggested_construction: Option<Suggestion>,
}

struct Route(Vec<RouteStep>);

impl Route {
    /// Records a branch condition.
    fn test(&mut self, condition: &str, outcome: bool) -> bool {
        self.0.push(RouteStep { condition: String::from(condition), outcome, rule: None });
        outcome
    }

    /// Records the step that settles the verdict.
    fn settle(&mut self, condition: &str, rule: Rule) -> Rule {
        self.0.push(RouteStep { condition: String::from(condition), outcome: true, rule: Some(rule) });
        rule
    }
}

pub fn classify(s: &FiniteSemigroup) -> ClassificationReport {
    let kernel = minimal_ideal(s);
    let mut w = Witnesses {
        order: s.order(),
        commutative: s.is_commutative(),
        idempotent_count: idempotents(s).len(),
        kernel: kernel.elements.clone(),
        kernel_is_group: kernel.is_group,
        nilpotency_class: nilpotency_class(s),
        rectangular_band: is_rectangular_band(s),
        ..Witnesses::default()
    };
    let mut route = Route(Vec::new());
    let decomposition = group_by_nilpotent(s).ok();
    if let Some(d) = &decomposition {
        w.group_order = Some(d.group.order());
        w.quotient_order = Some(d.quotient.semigroup.order());
        w.quotient_class = Some(d.quotient_class);
    }

    let rule = 'tree: {
        if route.test("S is a group", is_group(s)) {
            break 'tree if w.commutative {
                route.settle("the group is abelian", Rule::AbelianGroup)
            } else {
                route.settle("the group is non-abelian", Rule::NonAbelianGroup)
            };
        }
        if w.rectangular_band.is_some() {
            break 'tree route.settle("S is a rectangular band", Rule::RectangularBand);
        }
        route.test("S is a rectangular band", false);
        if w.commutative && w.idempotent_count >= 2 {
            break 'tree route.settle("S is commutative with at least two idempotents", Rule::SeveralIdempotents);
        }
        route.test("S is commutative with at least two idempotents", false);
        let Some(d) = &decomposition else {
            route.test("the kernel G is a group and S/G is nilpotent", false);
            break 'tree route.settle("no settled case applies", Rule::Open);
        };
        route.test("the kernel G is a group and S/G is nilpotent", true);
        if d.group_trivial() {
            break 'tree if d.quotient_class <= 2 {
                route.settle("G trivial, class at most 2 (null semigroup)", Rule::NullSemigroup)
            } else {
                route.settle("G trivial, class at least 3", Rule::NilpotentAboveClassTwo)
            };
        }
        if d.quotient_trivial() {
            break 'tree route.settle("G non-trivial, S/G trivial (abelian group)", Rule::AbelianGroup);
        }
        route.settle("G and S/G both non-trivial", Rule::GroupByNilpotent)
    };
    let suggested_construction = match rule {
        Rule::SeveralIdempotents => Some(Suggestion::ChainTildeHat),
        Rule::NilpotentAboveClassTwo => Some(Suggestion::Tm),
        Rule::GroupByNilpotent => Some(Suggestion::Wm),
        _ => None,
    };
    ClassificationReport { verdict: rule.verdict(), rule, route: route.0, witnesses: w, suggested_construction }
}

/// The statement for commutative semigroups, checked directly: countable
/// type exactly for abelian groups and null semigroups.
pub fn main_theorem_predicate(s: &FiniteSemigroup) -> Result<SdpType> {
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let null = match s.zero() {
        Some(z) => s.elements().all(|a| s.elements().all(|b| s.mul(a, b) == z)),
        None => false,
    };
    Ok(if is_group(s) || null { SdpType::Countable } else { SdpType::Continuum })
}

impl Suggestion {
    /// The `variant`-th member of the witness family for `s`; different
    /// variants use different chain lengths or different `M`.
    pub fn build(self, s: &FiniteSemigroup, variant: usize) -> Result<WitnessFamily> {
        match self {
            Suggestion::ChainTildeHat => {
                let e = idempotent_semilattice(s)?;
                let sl = &e.order;
                let chain = build_chain(3 + variant)?;
                let p = chain_algebra(sl.semigroup(), &chain, sl.zero(), sl.minimal_nonzero()?)?;
                let p_tilde = tilde(sl, &p)?;
                let truncation = hat(s, &p_tilde, DEFAULT_SIZE_CAP)?;
                Ok(WitnessFamily {
                    label: alloc::format!("hat(tilde(chain {})) n={}", 3 + variant, truncation.arity()),
                    generators: chain,
                    truncation,
                    hook: crate::certify::CertificateKind::IdempotentSemilattice,
                    m_values: Vec::new(),
                })
            }
            Suggestion::Tm => {
                let n = s.order();
                let m = MSpec::Explicit { prefix: alloc::vec![(variant + 1) * n], stride: n };
                let values = m.values(2);
                t_m(s, &m, 2, 2 + values[1])
            }
            Suggestion::Wm => {
                let m = MSpec::OffsetNaturals(s.order() + 1 + variant);
                w_m_first_prefix(s, m)
            }
        }
    }
}

fn w_m_first_prefix(s: &FiniteSemigroup, m: MSpec) -> Result<WitnessFamily> {
    let m1 = m.values(1)[0];
    w_m(s, &m, 1, 1 + m1, DEFAULT_SIZE_CAP)
}
