// The 28-row coordinate table mapping NO⁺(6,2) onto NM³₄, shipped as a text
// fixture ("left right" per line), and its verifier.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::nm34::{build_nm34, Nm34Representation};
use super::{
    build_no_plus_with_form, canonical_form, nm34_vertices, no_plus_vertices,
    quadric_minus_n_vertices,
};
use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::Graph;
use crate::quadform::QuadraticForm;
use crate::veronese::klein_quadric;

pub const ISO_TABLE_FIXTURE: &str = include_str!("../../data/iso_table.txt");

const fn count_rows(s: &str) -> usize {
    let b = s.as_bytes();
    let (mut rows, mut i, mut content) = (0, 0, false);
    while i < b.len() {
        match b[i] {
            b'\n' => {
                if content {
                    rows += 1;
                }
                content = false;
            }
            b' ' | b'\t' | b'\r' => {}
            _ => content = true,
        }
        i += 1;
    }
    if content {
        rows += 1;
    }
    rows
}

const _: () = assert!(
    count_rows(ISO_TABLE_FIXTURE) == 28,
    "iso_table.txt must have exactly 28 rows"
);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoTable {
    rows: Vec<(u64, u64)>,
}

impl IsoTable {
    /// The checked-in fixture.
    pub fn fixture() -> Self {
        Self::parse(ISO_TABLE_FIXTURE).expect("fixture is well formed")
    }

    /// One `left right` pair of 6-bit strings per non-blank line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let row = rows.len() + 1;
            let bad = |reason: &str| Error::TableRow {
                row,
                reason: String::from(reason),
            };
            let mut parts = line.split_whitespace();
            let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(bad("expected two fields"));
            };
            let point = |s: &str| match gf2::parse(s) {
                Some((v, 6)) if v != 0 => Ok(v),
                _ => Err(bad("expected a nonzero 6-bit coordinate string")),
            };
            rows.push((point(a)?, point(b)?));
        }
        if rows.len() != 28 {
            return Err(Error::TableRow {
                row: rows.len(),
                reason: alloc::format!("expected 28 rows, found {}", rows.len()),
            });
        }
        Ok(IsoTable { rows })
    }

    pub fn rows(&self) -> &[(u64, u64)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NoPlusForm {
    /// `X₁X₆ + X₂X₅ + X₃X₄`.
    Canonical,
    Klein,
}

impl NoPlusForm {
    fn form(self) -> QuadraticForm {
        match self {
            NoPlusForm::Canonical => canonical_form(),
            NoPlusForm::Klein => klein_quadric(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// Left column is the NO⁺ side.
    LeftToRight,
    RightToLeft,
}

/// One reading of the table: which quadric defines NO⁺(6,2), which
/// representation of NM³₄ is the codomain, and which column is the domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Convention {
    pub form: NoPlusForm,
    pub codomain: Nm34Representation,
    pub direction: Direction,
}

impl Convention {
    pub const DOCUMENTED: Convention = Convention {
        form: NoPlusForm::Canonical,
        codomain: Nm34Representation::QuadricMinusN,
        direction: Direction::LeftToRight,
    };
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let form = match self.form {
            NoPlusForm::Canonical => "canonical",
            NoPlusForm::Klein => "klein",
        };
        let dir = match self.direction {
            Direction::LeftToRight => "left->right",
            Direction::RightToLeft => "right->left",
        };
        write!(f, "NO+[{form}] {dir} NM34[{}]", self.codomain)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    pub rows: usize,
    /// First row (1-based) whose left entry is not a non-isotropic point of
    /// the canonical form.
    pub left_mismatch: Option<usize>,
    /// First row whose right entry is not a point of `Q⁺(5,2) ∖ N`.
    pub right_mismatch: Option<usize>,
    pub bijective: bool,
    /// Rows `(i, j)` whose images disagree on adjacency, documented reading.
    pub broken_pair: Option<(usize, usize)>,
    /// Every convention under which the table is a graph isomorphism.
    pub valid_conventions: Vec<Convention>,
}

impl TableReport {
    pub fn documented_convention_holds(&self) -> bool {
        self.left_mismatch.is_none()
            && self.right_mismatch.is_none()
            && self.bijective
            && self.broken_pair.is_none()
    }
}

fn is_distinct(vals: impl Iterator<Item = u64>) -> bool {
    let mut v: Vec<u64> = vals.collect();
    let n = v.len();
    v.sort_unstable();
    v.dedup();
    v.len() == n
}

/// Row indices of the graph vertices named by `points`, if all are
/// vertices.
fn positions(vertices: &[u64], points: impl Iterator<Item = u64>) -> Option<Vec<usize>> {
    points.map(|p| vertices.binary_search(&p).ok()).collect()
}

/// First pair of rows where the induced map breaks adjacency.
fn first_broken_pair(
    dom: &Graph,
    dom_idx: &[usize],
    cod: &Graph,
    cod_idx: &[usize],
) -> Option<(usize, usize)> {
    let n = dom_idx.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| {
            dom.has_edge(dom_idx[i], dom_idx[j]) != cod.has_edge(cod_idx[i], cod_idx[j])
        })
}

fn convention_holds(
    t: &IsoTable,
    c: Convention,
    graphs: &[(Nm34Representation, Graph, Vec<u64>)],
    no_plus: &[(NoPlusForm, Graph, Vec<u64>)],
) -> bool {
    let (_, dom, dom_vs) = no_plus
        .iter()
        .find(|(f, _, _)| *f == c.form)
        .expect("both forms built");
    let (_, cod, cod_vs) = graphs
        .iter()
        .find(|(r, _, _)| *r == c.codomain)
        .expect("all reps built");
    let (src, dst): (Vec<u64>, Vec<u64>) = match c.direction {
        Direction::LeftToRight => t.rows.iter().copied().unzip(),
        Direction::RightToLeft => t.rows.iter().map(|&(a, b)| (b, a)).unzip(),
    };
    let (Some(di), Some(ci)) = (
        positions(dom_vs, src.iter().copied()),
        positions(cod_vs, dst.iter().copied()),
    ) else {
        return false;
    };
    let bij =
        |idx: &[usize], n: usize| idx.len() == n && is_distinct(idx.iter().map(|&x| x as u64));
    bij(&di, dom.n()) && bij(&ci, cod.n()) && first_broken_pair(dom, &di, cod, &ci).is_none()
}

/// Checks the table under the documented reading (left: non-isotropic points
/// of the canonical form; right: `Q⁺(5,2) ∖ N`) and searches all 16
/// conventions for those under which it is an isomorphism.
pub fn verify_iso_table(t: &IsoTable) -> TableReport {
    let canon = canonical_form().gf2().expect("GF(2)");
    let left_mismatch = t
        .rows
        .iter()
        .position(|&(a, _)| canon.eval(a) != 1)
        .map(|i| i + 1);
    let qn = quadric_minus_n_vertices();
    let right_mismatch = t
        .rows
        .iter()
        .position(|&(_, b)| qn.binary_search(&b).is_err())
        .map(|i| i + 1);
    let bijective = t.len() == 28
        && is_distinct(t.rows.iter().map(|r| r.0))
        && is_distinct(t.rows.iter().map(|r| r.1));

    let no_plus: Vec<(NoPlusForm, Graph, Vec<u64>)> = [NoPlusForm::Canonical, NoPlusForm::Klein]
        .into_iter()
        .map(|f| {
            let form = f.form();
            (
                f,
                build_no_plus_with_form(&form).expect("GF(2)"),
                no_plus_vertices(&form).expect("GF(2)"),
            )
        })
        .collect();
    let graphs: Vec<(Nm34Representation, Graph, Vec<u64>)> = Nm34Representation::ALL
        .into_iter()
        .map(|r| (r, build_nm34(r), nm34_vertices(r)))
        .collect();

    let broken_pair = if left_mismatch.is_none() && right_mismatch.is_none() && bijective {
        let (dom, dom_vs) = (&no_plus[0].1, &no_plus[0].2);
        let (cod, cod_vs) = (&graphs[1].1, &graphs[1].2);
        let di = positions(dom_vs, t.rows.iter().map(|r| r.0)).expect("checked");
        let ci = positions(cod_vs, t.rows.iter().map(|r| r.1)).expect("checked");
        first_broken_pair(dom, &di, cod, &ci).map(|(i, j)| (i + 1, j + 1))
    } else {
        None
    };

    let mut valid_conventions = Vec::new();
    for form in [NoPlusForm::Canonical, NoPlusForm::Klein] {
        for codomain in Nm34Representation::ALL {
            for direction in [Direction::LeftToRight, Direction::RightToLeft] {
                let c = Convention {
                    form,
                    codomain,
                    direction,
                };
                if convention_holds(t, c, &graphs, &no_plus) {
                    valid_conventions.push(c);
                }
            }
        }
    }
    TableReport {
        rows: t.len(),
        left_mismatch,
        right_mismatch,
        bijective,
        broken_pair,
        valid_conventions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shape() {
        let t = IsoTable::fixture();
        assert_eq!(t.len(), 28);
        assert_eq!(t.rows()[0], (0b101011, 0b110011));
        assert_eq!(count_rows("a b\n\n c d \n"), 2);
    }

    #[test]
    fn parse_errors_name_the_row() {
        let mut text = String::from(ISO_TABLE_FIXTURE);
        text = text.replacen("111001 001000", "111001 00100", 1);
        assert_eq!(
            IsoTable::parse(&text).unwrap_err(),
            Error::TableRow {
                row: 2,
                reason: String::from("expected a nonzero 6-bit coordinate string")
            }
        );
        assert!(matches!(
            IsoTable::parse("101011 110011\n"),
            Err(Error::TableRow { .. })
        ));
    }

    #[test]
    fn documented_reading_holds() {
        let r = verify_iso_table(&IsoTable::fixture());
        assert!(r.documented_convention_holds(), "{r:?}");
        assert!(r.valid_conventions.contains(&Convention::DOCUMENTED));
    }

    #[test]
    fn corrupted_table_is_caught() {
        // swap two right-hand entries
        let mut t = IsoTable::fixture();
        let (a, b) = (t.rows[0].1, t.rows[1].1);
        t.rows[0].1 = b;
        t.rows[1].1 = a;
        let r = verify_iso_table(&t);
        assert!(r.left_mismatch.is_none() && r.right_mismatch.is_none() && r.bijective);
        assert!(r.broken_pair.is_some());
        assert!(!r.valid_conventions.contains(&Convention::DOCUMENTED));
    }
}
