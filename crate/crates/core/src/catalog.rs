//! Named small semigroups and parameterised families.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::iso::{are_isomorphic, Fingerprint};
use crate::semigroup::{Elem, FiniteSemigroup, DEFAULT_SIZE_CAP};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub semigroup: FiniteSemigroup,
    pub provenance: &'static str,
}

/// Parameterised families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// `Z_n` written additively; elements `e, g, g2, …`.
    Cyclic(usize),
    /// Null semigroup of order n: every product is `0`.
    Null(usize),
    /// The n-element chain under `min`.
    Chain(usize),
    /// `{0, t, t^2, …, t^(k-1)}` with `t^k = 0`; nilpotent of class `k`.
    MonogenicNilpotent(usize),
    /// `I × J` with `(i,j)(k,l) = (i,l)`.
    RectangularBand(usize, usize),
    /// `Z_m` together with `r` further elements `a_i` with `a_i a_j = e` and
    /// `a_i h = h a_i = h` for `h` in the group: an ideal extension of `Z_m`
    /// by a null semigroup of order `r + 1`.
    GroupExtension { group: usize, extra: usize },
}

const NAMES: &[&str] = &[
    "T1", "L2", "SL3", "L2xL2", "Z2", "Z3", "S3", "N2", "N3", "NIL3", "MONO4", "GN3", "LZ2", "RB22", "Z2xN2", "SL2N",
    "LZ2_0",
];

pub fn names() -> &'static [&'static str] {
    NAMES
}

fn named(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn rename(s: FiniteSemigroup, names: &[&str]) -> FiniteSemigroup {
    FiniteSemigroup::new(named(names), s.rows()).expect("renaming keeps a valid table")
}

pub fn get(name: &str) -> Result<FiniteSemigroup> {
    entry(name).map(|e| e.semigroup)
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    let (semigroup, provenance) = match name {
        "T1" => (family(&Family::Null(1))?, "trivial semigroup"),
        "L2" => (rename(family(&Family::Chain(2))?, &["0", "1"]), "two-element semilattice"),
        "SL3" => (rename(family(&Family::Chain(3))?, &["0", "e", "1"]), "three-element chain semilattice"),
        "L2xL2" => (get("L2")?.direct_power(2, DEFAULT_SIZE_CAP)?, "2x2 Boolean meet-semilattice"),
        "Z2" => (family(&Family::Cyclic(2))?, "cyclic group of order 2"),
        "Z3" => (family(&Family::Cyclic(3))?, "cyclic group of order 3"),
        "S3" => (symmetric_group_3()?, "symmetric group of degree 3, non-abelian"),
        "N2" => (rename(family(&Family::Null(2))?, &["0", "a"]), "null semigroup of order 2"),
        "N3" => (rename(family(&Family::Null(3))?, &["0", "a", "b"]), "null semigroup of order 3"),
        "NIL3" => (
            rename(family(&Family::MonogenicNilpotent(3))?, &["0", "x", "y"]),
            "nilpotent of class 3: x^2 = y, all other products 0",
        ),
        "MONO4" => (family(&Family::MonogenicNilpotent(4))?, "monogenic nilpotent of class 4"),
        "GN3" => (
            rename(family(&Family::GroupExtension { group: 2, extra: 1 })?, &["e", "g", "a"]),
            "ideal extension of Z2 by a null semigroup of order 2",
        ),
        "LZ2" => (rename(family(&Family::RectangularBand(2, 1))?, &["l1", "l2"]), "two-element left-zero semigroup"),
        "RB22" => (family(&Family::RectangularBand(2, 2))?, "2x2 rectangular band"),
        "Z2xN2" => (
            get("Z2")?.direct_product(&get("N2")?, DEFAULT_SIZE_CAP)?,
            "direct product of a group and a null semigroup",
        ),
        "SL2N" => (
            FiniteSemigroup::new(named(&["0", "a", "1"]), vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]])?,
            "commutative with two idempotents; archimedean components {0,a} and {1}",
        ),
        "LZ2_0" => (
            FiniteSemigroup::new(named(&["0", "l1", "l2"]), vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 2, 2]])?,
            "left-zero semigroup with a zero adjoined: neither band-rectangular, group nor commutative",
        ),
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(CatalogEntry { name: NAMES.iter().find(|&&n| n == name).unwrap(), semigroup, provenance })
}

pub fn entries() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| entry(n).expect("catalog entries are valid")).collect()
}

pub fn family(kind: &Family) -> Result<FiniteSemigroup> {
    match *kind {
        Family::Cyclic(n) => {
            positive(n, "cyclic group order")?;
            let names = (0..n)
                .map(|i| match i {
                    0 => "e".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g{i}"),
                })
                .collect();
            FiniteSemigroup::from_fn(names, |a, b| (a + b) % n)
        }
        Family::Null(n) => {
            positive(n, "null semigroup order")?;
            let names = (0..n).map(|i| if i == 0 { "0".to_string() } else { format!("a{i}") }).collect();
            FiniteSemigroup::from_fn(names, |_, _| 0)
        }
        Family::Chain(n) => {
            positive(n, "chain length")?;
            FiniteSemigroup::from_fn((0..n).map(|i| i.to_string()).collect(), |a, b| a.min(b))
        }
        Family::MonogenicNilpotent(k) => {
            if k < 2 {
                return Err(Error::InvalidParams(format!("nilpotency class {k} < 2")));
            }
            let names = (0..k)
                .map(|i| match i {
                    0 => "0".to_string(),
                    1 => "t".to_string(),
                    _ => format!("t{i}"),
                })
                .collect();
            FiniteSemigroup::from_fn(names, |a, b| if a == 0 || b == 0 || a + b >= k { 0 } else { a + b })
        }
        Family::RectangularBand(a, b) => {
            positive(a, "rectangular band rows")?;
            positive(b, "rectangular band columns")?;
            let names = (0..a * b).map(|x| format!("({},{})", x / b + 1, x % b + 1)).collect();
            FiniteSemigroup::from_fn(names, |x, y| (x / b) * b + y % b)
        }
        Family::GroupExtension { group, extra } => {
            positive(group, "group order")?;
            positive(extra, "number of extra elements")?;
            let mut names: Vec<String> = family(&Family::Cyclic(group))?.names().to_vec();
            names.extend((1..=extra).map(|i| if extra == 1 { "a".to_string() } else { format!("a{i}") }));
            FiniteSemigroup::from_fn(names, |x, y| match (x < group, y < group) {
                (true, true) => (x + y) % group,
                (true, false) => x,
                (false, true) => y,
                (false, false) => 0,
            })
        }
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParams(format!("{what} must be positive")));
    }
    Ok(())
}

fn symmetric_group_3() -> Result<FiniteSemigroup> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let names = named(&["e", "(12)", "(13)", "(23)", "(123)", "(132)"]);
    // (p q)(i) = p(q(i))
    let compose = |p: Elem, q: Elem| {
        let r = [PERMS[p][PERMS[q][0]], PERMS[p][PERMS[q][1]], PERMS[p][PERMS[q][2]]];
        PERMS.iter().position(|&x| x == r).unwrap()
    };
    FiniteSemigroup::from_fn(names, compose)
}

/// Every associative table on `order` elements, in lexicographic order of
/// the row-major table. Backtracks cell by cell and prunes on any triple
/// whose products are already determined.
pub fn all_tables(order: usize) -> Result<Vec<FiniteSemigroup>> {
    if order == 0 || order > 4 {
        return Err(Error::InvalidParams(format!("brute-force generation supports orders 1..=4, not {order}")));
    }
    let mut cells = vec![UNSET; order * order];
    let mut found = Vec::new();
    fill(order, &mut cells, 0, &mut found);
    found.into_iter().map(|t| FiniteSemigroup::from_rows(t.chunks(order).map(|r| r.to_vec()).collect())).collect()
}

const UNSET: usize = usize::MAX;

fn fill(n: usize, cells: &mut [usize], pos: usize, found: &mut Vec<Vec<usize>>) {
    if pos == cells.len() {
        found.push(cells.to_vec());
        return;
    }
    for v in 0..n {
        cells[pos] = v;
        if consistent(n, cells) {
            fill(n, cells, pos + 1, found);
        }
    }
    cells[pos] = UNSET;
}

fn consistent(n: usize, cells: &[usize]) -> bool {
    let m = |a: usize, b: usize| cells[a * n + b];
    for i in 0..n {
        for j in 0..n {
            let ij = m(i, j);
            if ij == UNSET {
                continue;
            }
            for k in 0..n {
                let jk = m(j, k);
                if jk == UNSET {
                    continue;
                }
                let (l, r) = (m(ij, k), m(i, jk));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// One representative per isomorphism class among `candidates`, keeping the
/// first of each class. Classes are separated by fingerprint, then by the oracle.
pub fn dedup_isomorphic(candidates: Vec<FiniteSemigroup>) -> Result<Vec<FiniteSemigroup>> {
    let mut reps: Vec<(Fingerprint, FiniteSemigroup)> = Vec::new();
    for s in candidates {
        let fp = Fingerprint::of(&s);
        let mut duplicate = false;
        for (rfp, r) in &reps {
            if *rfp == fp && are_isomorphic(r, &s)?.is_some() {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            reps.push((fp, s));
        }
    }
    Ok(reps.into_iter().map(|(_, s)| s).collect())
}

/// All semigroups of the given order up to isomorphism (orders 1..=4).
pub fn all_semigroups(order: usize) -> Result<Vec<FiniteSemigroup>> {
    dedup_isomorphic(all_tables(order)?)
}
