//! Nilpotent semigroups of class `k > 2`: the families built from `σ(i,s)`
//! and `χ(i,j)`, told apart by counting divisors.

use alloc::vec::Vec;

use crate::certify::CertificateKind;
use crate::seq::EpSeq;
use crate::structure::nilpotency_class;
use crate::tuple::{Tuple, TupleAlgebra};
use crate::{Elem, Error, FiniteSemigroup, Result};

use super::{require_subdirect, MSpec, WitnessFamily};

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct XyChoice {
    pub zero: Elem,
    pub class: usize,
    /// `s₁, …, s_{k−1}` with non-zero product.
    pub witness: Vec<Elem>,
    /// `x = s₁⋯s_{k−1}`.
    pub x: Elem,
    /// `y = s₁⋯s_{k−2}`, a divisor of `x`.
    pub y: Elem,
}

/// The lexicographically first word of length `k − 1` with non-zero product.
pub fn choose_xy(s: &FiniteSemigroup) -> Result<XyChoice> {
    let class = nilpotency_class(s);
    let k = match class {
        Some(k) if k > 2 => k,
        other => return Err(Error::ClassTooSmall(other)),
    };
    let zero = s.zero().expect("nilpotent semigroups have a zero");
    let n = s.order();
    let mut word = alloc::vec![0; k - 1];
    loop {
        let x = s.product(&word).unwrap();
        if x != zero {
            let y = s.product(&word[..k - 2]).unwrap();
            return Ok(XyChoice { zero, class: k, witness: word, x, y });
        }
        // the class guarantees a witness before the odometer wraps
        let c = (0..k - 1).rev().find(|&c| word[c] + 1 < n).expect("witness exists");
        word[c] += 1;
        word[c + 1..].fill(0);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Shape {
    Zero,
    Sigma(usize, Elem),
    Chi(usize),
}

fn shape(xy: &XyChoice, t: &[Elem]) -> Option<Shape> {
    let Some(i) = t.iter().position(|&v| v != xy.zero) else {
        return Some(Shape::Zero);
    };
    let rest = &t[i + 1..];
    let j = rest.iter().take_while(|&&v| v == xy.x).count();
    if rest.iter().all(|&v| v == xy.zero) {
        Some(Shape::Sigma(i, t[i]))
    } else if t[i] == xy.y && j > 0 && rest[j..].iter().all(|&v| v == xy.zero) {
        Some(Shape::Chi(i))
    } else {
        None
    }
}

/// Checks that every product of two members is the one predicted by
/// `σ(i,s)σ(i,t) = σ(i,st)`, `σ(i,s)χ(i,j) = σ(i,sy)`, `χ(i,j)σ(i,s) = σ(i,ys)`,
/// `χ(i,j)χ(i,l) = σ(i,y²)`, and zero for every other pair.
pub fn realizes_product_model(s: &FiniteSemigroup, xy: &XyChoice, t: &TupleAlgebra) -> bool {
    let shapes: Vec<(&Tuple, Shape)> = match t.members().map(|m| shape(xy, m).map(|sh| (m, sh))).collect() {
        Some(v) => v,
        None => return false,
    };
    let n = t.arity();
    let sigma = |i: usize, v: Elem| {
        let mut out = alloc::vec![xy.zero; n];
        out[i] = v;
        out
    };
    shapes.iter().all(|&(a, sa)| {
        shapes.iter().all(|&(b, sb)| {
            let expected = match (sa, sb) {
                (Shape::Sigma(i, u), Shape::Sigma(j, v)) if i == j => sigma(i, s.mul(u, v)),
                (Shape::Sigma(i, u), Shape::Chi(j)) if i == j => sigma(i, s.mul(u, xy.y)),
                (Shape::Chi(i), Shape::Sigma(j, v)) if i == j => sigma(i, s.mul(xy.y, v)),
                (Shape::Chi(i), Shape::Chi(j)) if i == j => sigma(i, s.mul(xy.y, xy.y)),
                _ => alloc::vec![xy.zero; n],
            };
            t.mul(a, b) == expected
        })
    })
}

/// Truncation to `arity` coordinates of `T_M`: all `σ(i,s)` with `i ≤ arity`
/// and `χ(i,j)` for `i ≤ index_count`, `j ≤ m_i`.
pub fn t_m(s: &FiniteSemigroup, m: &MSpec, index_count: usize, arity: usize) -> Result<WitnessFamily> {
    let xy = choose_xy(s)?;
    if index_count == 0 {
        return Err(Error::InvalidParams("index count must be positive".into()));
    }
    let order = s.order();
    let m_values = m.values(index_count);
    if let Some(&bad) = m_values.iter().find(|&&v| v % order != 0) {
        return Err(Error::InadmissibleM { value: bad, reason: alloc::format!("not a multiple of |S| = {order}") });
    }
    let required = m_values.iter().enumerate().map(|(i, &mi)| i + 1 + mi).max().unwrap();
    if arity < required {
        return Err(Error::ArityTooSmall { required, given: arity });
    }
    let mut generators = alloc::vec![EpSeq::constant(xy.zero)];
    for i in 1..=arity {
        for v in s.elements().filter(|&v| v != xy.zero) {
            generators.push(EpSeq::sigma(i, v, xy.zero));
        }
    }
    for (i, &mi) in m_values.iter().enumerate() {
        for j in 1..=mi {
            generators.push(EpSeq::chi(i + 1, j, xy.x, xy.y, xy.zero));
        }
    }
    let truncation = TupleAlgebra::new(s.clone(), arity, generators.iter().map(|g| g.truncate(arity)))?;
    if !truncation.is_closed() || !realizes_product_model(s, &xy, &truncation) {
        return Err(Error::NotClosed);
    }
    require_subdirect(&truncation)?;
    Ok(WitnessFamily {
        label: alloc::format!("T_M M={m} I={index_count} n={arity}"),
        generators,
        truncation,
        hook: CertificateKind::DivisorSpectrum,
        m_values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn xy_choices() {
        let nil3 = catalog::get("NIL3").unwrap();
        let c = choose_xy(&nil3).unwrap();
        assert_eq!((nil3.name(c.x), nil3.name(c.y)), ("y", "x"));
        assert_eq!(choose_xy(&catalog::get("N2").unwrap()), Err(Error::ClassTooSmall(Some(2))));
        assert_eq!(choose_xy(&catalog::get("Z2").unwrap()), Err(Error::ClassTooSmall(None)));
        let mono4 = catalog::get("MONO4").unwrap();
        let c = choose_xy(&mono4).unwrap();
        assert_eq!(c.class, 4);
        assert_eq!((mono4.name(c.x), mono4.name(c.y)), ("t3", "t2"));
        for s in [&nil3, &mono4] {
            let c = choose_xy(s).unwrap();
            assert!(s.elements().all(|t| s.mul(c.x, t) == c.zero && s.mul(t, c.x) == c.zero));
            assert!(s.divisors(c.x).contains(&c.y));
        }
    }

    #[test]
    fn nil3_family() {
        let nil3 = catalog::get("NIL3").unwrap();
        let f = t_m(&nil3, &"3k".parse().unwrap(), 1, 4).unwrap();
        // zero, 4 positions × 2 non-zero letters, 3 χ's
        assert_eq!(f.truncation.len(), 1 + 8 + 3);
        assert_eq!(f.m_values, [3]);
        let t = &f.truncation;
        let c = choose_xy(&nil3).unwrap();
        let divisors = |target: &Tuple| t.members().filter(|u| t.members().any(|v| t.mul(u, v) == *target)).count();
        let sigma_x = EpSeq::sigma(1, c.x, 0).truncate(4);
        assert_eq!(divisors(&sigma_x), nil3.divisors(c.x).len() + 3);
        for j in 1..=3 {
            assert_eq!(divisors(&EpSeq::chi(1, j, c.x, c.y, 0).truncate(4)), 0);
        }
        let chi = |j| EpSeq::chi(1, j, c.x, c.y, 0).truncate(4);
        assert_eq!(t.mul(&chi(1), &chi(2)), EpSeq::sigma(1, nil3.mul(c.y, c.y), 0).truncate(4));
    }

    #[test]
    fn admissibility() {
        let nil3 = catalog::get("NIL3").unwrap();
        assert_eq!(
            t_m(&nil3, &"[6;+3]".parse().unwrap(), 1, 4).unwrap_err(),
            Error::ArityTooSmall { required: 7, given: 4 }
        );
        assert!(matches!(t_m(&nil3, &">=4".parse().unwrap(), 1, 9), Err(Error::InadmissibleM { value: 4, .. })));
        assert!(t_m(&catalog::get("N3").unwrap(), &"3k".parse().unwrap(), 1, 4).is_err());
    }
}
