//! Witness families of subdirect powers, as finite truncations.
//!
//! Each construction of an infinite subdirect power inside `S^ℕ` has a finite
//! shadow here: the first `n` coordinates of its elements, which is again
//! closed under the componentwise product and projects onto `S` in every
//! coordinate. The generators are kept as exact [`EpSeq`] values.
//!
//! Whenever the underlying argument says "pick an arbitrary element", the
//! lexicographically first candidate is taken.

mod chain;
mod extension;
mod hat;
mod nilpotent;
mod tilde;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::certify::CertificateKind;
use crate::seq::EpSeq;
use crate::tuple::TupleAlgebra;
use crate::{Error, FiniteSemigroup, Result};

pub use chain::{between, build_chain, chain_algebra};
pub use extension::{choose_xg, closure_bullets, w_m, ClosureBullets, XgChoice};
pub use hat::{hat, hat_size};
pub use nilpotent::{choose_xy, realizes_product_model, t_m, XyChoice};
pub use tilde::{tilde, tilde_discriminator};

/// An increasing sequence `m₁ < m₂ < …` of positive integers.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum MSpec {
    /// `{n, 2n, 3n, …}`, written `3k`.
    Multiples(usize),
    /// `{n, n+1, n+2, …}`, written `>=4`.
    OffsetNaturals(usize),
    /// An explicit prefix continued with a fixed stride, written `[3,9,12;+3]`.
    Explicit { prefix: Vec<usize>, stride: usize },
}

impl MSpec {
    /// The first `count` values.
    pub fn values(&self, count: usize) -> Vec<usize> {
        match self {
            MSpec::Multiples(n) => (1..=count).map(|k| k * n).collect(),
            MSpec::OffsetNaturals(n) => (0..count).map(|k| n + k).collect(),
            MSpec::Explicit { prefix, stride } => {
                let mut out: Vec<usize> = prefix.iter().copied().take(count).collect();
                while out.len() < count {
                    let next = out.last().copied().unwrap_or(0) + stride;
                    out.push(next);
                }
                out
            }
        }
    }

    fn validate(self) -> Result<Self> {
        let bad = |reason: &str| Err(Error::InvalidParams(alloc::format!("M-spec: {reason}")));
        match &self {
            MSpec::Multiples(0) => return bad("multiples of 0"),
            MSpec::OffsetNaturals(0) => return bad("values must be positive"),
            MSpec::Explicit { prefix, stride } => {
                if prefix.is_empty() {
                    return bad("empty prefix");
                }
                if *stride == 0 {
                    return bad("stride must be positive");
                }
                if prefix[0] == 0 || prefix.windows(2).any(|w| w[0] >= w[1]) {
                    return bad("prefix must be positive and strictly increasing");
                }
            }
            _ => {}
        }
        Ok(self)
    }
}

impl FromStr for MSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let num = |s: &str| {
            s.trim().parse::<usize>().map_err(|_| Error::Parse(alloc::format!("bad number {s:?} in M-spec {text:?}")))
        };
        let spec = if let Some(n) = t.strip_suffix('k') {
            MSpec::Multiples(num(n)?)
        } else if let Some(n) = t.strip_prefix(">=") {
            MSpec::OffsetNaturals(num(n)?)
        } else if let Some(body) = t.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let (list, stride) =
                body.split_once(";+").ok_or_else(|| Error::Parse(alloc::format!("missing ';+stride' in {text:?}")))?;
            let prefix = list.split(',').map(num).collect::<Result<Vec<_>>>()?;
            MSpec::Explicit { prefix, stride: num(stride)? }
        } else {
            return Err(Error::Parse(alloc::format!("unrecognised M-spec {text:?}")));
        };
        spec.validate()
    }
}

impl fmt::Display for MSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MSpec::Multiples(n) => write!(f, "{n}k"),
            MSpec::OffsetNaturals(n) => write!(f, ">={n}"),
            MSpec::Explicit { prefix, stride } => {
                f.write_str("[")?;
                for (i, m) in prefix.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, ";+{stride}]")
            }
        }
    }
}

/// A finite truncation of one member of a family of subdirect powers,
/// together with the exact generators it was cut from.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WitnessFamily {
    pub label: String,
    pub generators: Vec<EpSeq>,
    pub truncation: TupleAlgebra,
    /// The invariant expected to tell members of the family apart.
    pub hook: CertificateKind,
    /// The represented prefix of `M`, empty for order-theoretic families.
    pub m_values: Vec<usize>,
}

impl WitnessFamily {
    pub fn base(&self) -> &FiniteSemigroup {
        self.truncation.base()
    }

    pub fn arity(&self) -> usize {
        self.truncation.arity()
    }
}

/// Closure and subdirectness, which every family must satisfy.
pub(crate) fn require_subdirect(algebra: &TupleAlgebra) -> Result<()> {
    if !algebra.is_subdirect()? {
        return Err(Error::Precondition(String::from("truncation is not subdirect")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn mspec_literals() {
        assert_eq!("3k".parse::<MSpec>().unwrap().values(4), [3, 6, 9, 12]);
        assert_eq!(">=4".parse::<MSpec>().unwrap().values(3), [4, 5, 6]);
        let e: MSpec = "[3,9,12;+3]".parse().unwrap();
        assert_eq!(e.values(5), [3, 9, 12, 15, 18]);
        assert_eq!(e.values(2), [3, 9]);
        assert_eq!("[6;+3]".parse::<MSpec>().unwrap().values(3), [6, 9, 12]);
        for text in ["3k", ">=4", "[3,9,12;+3]", "[6;+3]"] {
            assert_eq!(text.parse::<MSpec>().unwrap().to_string(), text);
        }
        for bad in ["0k", "[3,3;+1]", "[;+1]", "[3;+0]", "3", "[3,4]"] {
            assert!(bad.parse::<MSpec>().is_err(), "{bad}");
        }
    }
}
