//! The claims the verifier checks, one per acceptance criterion.
//!
//! Each claim is a pure function of the optional `q` override; claims in a
//! scope run on separate threads and the report is sorted by claim id, so
//! output order never depends on completion order.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::str::FromStr;
use std::thread;
use std::time::Instant;

use nm34_core::constructions::{
    build_hat_graphs, build_nm34, build_no_plus, canonical_form, hat_component_lines,
    kneser_oracle, lifted_group_automorphisms, no_plus_expected_params, no_plus_vertices,
    pair_proof_counts, verify_iso_table, vertex_proof_counts, CaseTally, IsoTable,
    Nm34Representation, PairKind,
};
use nm34_core::field::{Field, SUPPORTED_PRIMES};
use nm34_core::graph::{
    automorphism_count, flipped_sign_multiplicities, isomorphism, matrix_identity_witness,
    spectrum_from_params, srg_params, Graph, Spectrum, SrgParams,
};
use nm34_core::projgeom::{enumerate_points, ProjPoint, ProjSubspace};
use nm34_core::veronese::{
    compute_orbits, expected_orbit_sizes, general_linear_group, is_scalar_multiple, klein_quadric,
    lift, mul3, mul6, nuclei_plane, veronese_embed, OrbitLabel, SymMatrix3, IDENTITY3,
};

use crate::report::{Report, ReportEntry, Status};

const SRG28: SrgParams = SrgParams::new(28, 15, 6, 10);
const SPECTRUM28: Spectrum = Spectrum {
    k: 15,
    theta1: 1,
    m1: 20,
    theta2: -5,
    m2: 7,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scope {
    Srg,
    Iso,
    Aut,
    Orbits,
    Counts,
    Table,
    All,
}

impl Scope {
    pub const ALL: [Scope; 7] = [
        Scope::Srg,
        Scope::Iso,
        Scope::Aut,
        Scope::Orbits,
        Scope::Counts,
        Scope::Table,
        Scope::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Srg => "srg",
            Scope::Iso => "iso",
            Scope::Aut => "aut",
            Scope::Orbits => "orbits",
            Scope::Counts => "counts",
            Scope::Table => "table",
            Scope::All => "all",
        }
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scope::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| format!("unknown scope {s:?}"))
    }
}

/// Result of running one claim.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub measured: Vec<String>,
    pub expected: Vec<String>,
    pub failures: Vec<String>,
}

impl Outcome {
    fn expect(&mut self, s: impl Into<String>) {
        self.expected.push(s.into());
    }

    fn measure(&mut self, s: impl Into<String>) {
        self.measured.push(s.into());
    }

    /// Records `what` as measured and as a failure unless `ok`.
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.failures.push(what.clone());
        }
        self.measured.push(what);
    }

    fn equal<T: PartialEq + Display>(&mut self, what: &str, measured: T, expected: T) {
        let ok = measured == expected;
        self.check(ok, format!("{what} = {measured}"));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub struct Claim {
    pub id: &'static str,
    pub title: &'static str,
    pub scopes: &'static [Scope],
    run: fn(Option<Field>) -> Outcome,
}

impl Claim {
    pub fn in_scope(&self, scope: Scope) -> bool {
        scope == Scope::All || self.scopes.contains(&scope)
    }

    pub fn run(&self, q: Option<Field>) -> ReportEntry {
        let start = Instant::now();
        let out = (self.run)(q);
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        let status = if out.passed() {
            Status::Verified
        } else {
            Status::Failed
        };
        let mut measured = out.measured.join("; ");
        if !out.passed() {
            measured = format!("FAILED [{}]; {measured}", out.failures.join("; "));
        }
        ReportEntry {
            claim_id: self.id.to_string(),
            title: self.title.to_string(),
            status,
            measured,
            expected: out.expected.join("; "),
            elapsed_ms,
        }
    }
}

pub const CLAIMS: [Claim; 12] = [
    Claim {
        id: "C01.no-plus-srg",
        title: "NO+(6,2) is SRG(28,15,6,10) with spectrum {15:1, 1:20, -5:7}",
        scopes: &[Scope::Srg],
        run: no_plus_srg,
    },
    Claim {
        id: "C02.nm34-representations",
        title: "all four NM34 representations are SRG(28,15,6,10), pairwise isomorphic",
        scopes: &[Scope::Srg, Scope::Iso],
        run: nm34_representations,
    },
    Claim {
        id: "C03.explicit-isomorphism",
        title: "NO+(6,2) is isomorphic to NM34; the printed correspondence table is an isomorphism",
        scopes: &[Scope::Iso, Scope::Table],
        run: explicit_isomorphism,
    },
    Claim {
        id: "C04.automorphism-order",
        title: "NO+(6,2), NM34 and K(8,2) all have 40320 automorphisms",
        scopes: &[Scope::Aut],
        run: automorphism_order,
    },
    Claim {
        id: "C05.collineation-orbits",
        title: "orbits of the lifted PGL(3,q) on PG(5,q)",
        scopes: &[Scope::Orbits],
        run: collineation_orbits,
    },
    Claim {
        id: "C06.determinantal-count",
        title: "the det = 0 hypersurface has (q^2+1)(q^2+q+1) points",
        scopes: &[Scope::Counts],
        run: determinantal_count,
    },
    Claim {
        id: "C07.hat-graphs",
        title: "both hat graphs are 7 disjoint K4, one per line of N, and isomorphic",
        scopes: &[Scope::Iso],
        run: hat_graphs,
    },
    Claim {
        id: "C08.incidence-counts",
        title: "vertex and pair incidence counts behind the SRG proof",
        scopes: &[Scope::Counts],
        run: incidence_counts,
    },
    Claim {
        id: "C09.no-plus-family",
        title: "NO+(2n,2) parameters at n = 2 and n = 4",
        scopes: &[Scope::Srg],
        run: no_plus_family,
    },
    Claim {
        id: "C10.multiplicity-sign",
        title: "sign-flipped multiplicity formula fails; corrected one passes everywhere",
        scopes: &[Scope::Srg],
        run: multiplicity_sign,
    },
    Claim {
        id: "C11.tangent-orthogonality",
        title: "a line joining two vertices is tangent iff they are orthogonal",
        scopes: &[Scope::Srg],
        run: tangent_orthogonality,
    },
    Claim {
        id: "C12.lifted-group",
        title:
            "the lift of GL(3,2) is a projective representation compatible with the Veronese map",
        scopes: &[Scope::Orbits],
        run: lifted_group,
    },
];

pub fn claims_in(scope: Scope) -> impl Iterator<Item = &'static Claim> {
    CLAIMS.iter().filter(move |c| c.in_scope(scope))
}

pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

/// Runs every claim in `scope` concurrently; `q` overrides the fields used
/// by the orbit and counting claims.
pub fn verify(scope: Scope, q: Option<Field>) -> Report {
    let entries = thread::scope(|s| {
        let handles: Vec<_> = claims_in(scope)
            .map(|c| s.spawn(move || c.run(q)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("claim panicked"))
            .collect()
    });
    Report::new(scope.name(), q.map(Field::q), entries)
}

pub fn parse_field(q: u32) -> Result<Field, String> {
    Field::new(q).map_err(|_| format!("q must be one of {SUPPORTED_PRIMES:?}, got {q}"))
}

fn fields(q: Option<Field>, default: &[u32]) -> Vec<Field> {
    match q {
        Some(f) => vec![f],
        None => default
            .iter()
            .map(|&q| Field::new(q).expect("supported"))
            .collect(),
    }
}

fn srg_with_matrix_identity(out: &mut Outcome, name: &str, g: &Graph, expected: SrgParams) {
    match srg_params(g) {
        Ok(p) => {
            out.equal(&format!("{name} parameters"), p, expected);
            out.check(
                matrix_identity_witness(g, &p).is_none(),
                format!("{name} satisfies A^2 identity"),
            );
        }
        Err(e) => out.check(false, format!("{name} is not SRG: {e:?}")),
    }
}

fn verified_isomorphism(g: &Graph, h: &Graph) -> Result<bool, String> {
    let out = isomorphism(g, h).map_err(|e| e.to_string())?;
    Ok(out.mapping().is_some_and(|m| g.is_isomorphism(h, m)))
}

fn no_plus_srg(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    out.expect(format!(
        "{SRG28} by pair counting and matrix identity; spectrum {SPECTRUM28}"
    ));
    let g = build_no_plus(3).expect("n = 3");
    srg_with_matrix_identity(&mut out, "NO+(6,2)", &g, SRG28);
    match spectrum_from_params(&SRG28) {
        Ok(s) => out.equal("spectrum", s, SPECTRUM28),
        Err(e) => out.check(false, format!("spectrum error: {e}")),
    }
    out
}

fn nm34_representations(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    out.expect(format!(
        "each of the four is {SRG28}; off-secant = matrix-sum edge for edge; all pairs isomorphic"
    ));
    let graphs: Vec<(Nm34Representation, Graph)> = Nm34Representation::ALL
        .iter()
        .map(|&r| (r, build_nm34(r)))
        .collect();
    for (r, g) in &graphs {
        srg_with_matrix_identity(&mut out, r.name(), g, SRG28);
    }
    let get = |r| &graphs.iter().find(|(x, _)| *x == r).expect("built").1;
    out.check(
        get(Nm34Representation::OffSecant) == get(Nm34Representation::MatrixSum),
        "off-secant and matrix-sum identical",
    );
    let mut pairs = 0;
    for (i, (a, g)) in graphs.iter().enumerate() {
        for (b, h) in &graphs[i + 1..] {
            match verified_isomorphism(g, h) {
                Ok(true) => pairs += 1,
                Ok(false) => out.check(false, format!("{a} and {b} not isomorphic")),
                Err(e) => out.check(false, format!("{a} vs {b}: {e}")),
            }
        }
    }
    out.equal("isomorphic pairs (mapping checked)", pairs, 6);
    out
}

fn explicit_isomorphism(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    out.expect("solver finds a checked isomorphism; table valid under the documented convention, or the convention search names one");
    let g = build_no_plus(3).expect("n = 3");
    for r in [
        Nm34Representation::QuadricMinusN,
        Nm34Representation::OffSecant,
    ] {
        let ok = verified_isomorphism(&g, &build_nm34(r));
        out.check(
            ok == Ok(true),
            format!("solver isomorphism NO+(6,2) -> {r}: {ok:?}"),
        );
    }
    let t = IsoTable::fixture();
    let rep = verify_iso_table(&t);
    out.measure(format!("table rows = {}", rep.rows));
    out.measure(format!(
        "left column non-isotropic: {}; right column on Q+ off N: {}; bijective: {}",
        rep.left_mismatch
            .map_or("yes".into(), |r| format!("no (row {r})")),
        rep.right_mismatch
            .map_or("yes".into(), |r| format!("no (row {r})")),
        rep.bijective
    ));
    out.measure(match rep.broken_pair {
        None => "documented convention preserves all 378 adjacencies".to_string(),
        Some((i, j)) => format!(
            "documented convention breaks adjacency at rows {} and {}",
            i + 1,
            j + 1
        ),
    });
    let conventions: Vec<String> = rep
        .valid_conventions
        .iter()
        .map(ToString::to_string)
        .collect();
    out.measure(format!(
        "conventions under which the table is an isomorphism: [{}]",
        conventions.join(", ")
    ));
    out.check(
        rep.documented_convention_holds() || !rep.valid_conventions.is_empty(),
        "table verified under some convention",
    );
    out
}

fn automorphism_order(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    out.expect("40320 = 8! for all three; K(8,2) isomorphic to both");
    let g = build_no_plus(3).expect("n = 3");
    let h = build_nm34(Nm34Representation::OffSecant);
    let k = kneser_oracle();
    for (name, x) in [("NO+(6,2)", &g), ("NM34", &h), ("K(8,2)", &k)] {
        match automorphism_count(x) {
            Ok(n) => out.equal(&format!("|Aut {name}|"), n, 40320),
            Err(e) => out.check(false, format!("|Aut {name}|: {e}")),
        }
    }
    for (name, x) in [("NO+(6,2)", &g), ("NM34", &h)] {
        out.check(
            verified_isomorphism(&k, x) == Ok(true),
            format!("K(8,2) isomorphic to {name}"),
        );
    }
    out
}

fn point_set<'a>(it: impl IntoIterator<Item = &'a ProjPoint>) -> BTreeSet<ProjPoint> {
    it.into_iter().cloned().collect()
}

fn collineation_orbits(q: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    for f in fields(q, &[2, 3]) {
        let p = compute_orbits(f);
        let expected = expected_orbit_sizes(f.q());
        out.expect(format!("q={}: sizes {expected:?}", f.q()));
        out.check(
            p.sizes() == expected,
            format!("q={}: sizes {:?}", f.q(), p.sizes()),
        );
        out.check(
            p.agrees_with_classifier(),
            format!("q={}: orbits agree with the rank classifier", f.q()),
        );
        if f.q() == 2 {
            out.expect("q=2: O2 = N; O2 u O4 = Klein quadric (35 points)");
            let o2 = point_set(p.members(OrbitLabel::O2));
            out.check(
                o2 == nuclei_plane(f).points().into_iter().collect(),
                "q=2: O2 equals N pointwise",
            );
            let mut o24 = o2;
            o24.extend(p.members(OrbitLabel::O4).into_iter().cloned());
            let klein: BTreeSet<ProjPoint> =
                klein_quadric().isotropic_points().into_iter().collect();
            out.check(
                o24 == klein && klein.len() == 35,
                format!(
                    "q=2: O2 u O4 equals the {} Klein quadric points",
                    klein.len()
                ),
            );
        }
    }
    out
}

fn determinantal_count(q: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    for f in fields(q, &[2, 3, 5]) {
        let qq = usize::from(f.q());
        let formula = (qq * qq + 1) * (qq * qq + qq + 1);
        out.expect(format!("q={qq}: {formula}"));
        let count = enumerate_points(5, f)
            .iter()
            .filter(|p| {
                SymMatrix3::from_point(p)
                    .expect("6 coordinates")
                    .is_singular()
            })
            .count();
        out.equal(&format!("q={qq}: |det = 0|"), count, formula);
    }
    out
}

fn hat_graphs(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    out.expect("3-regular, 7 components each a K4 on a distinct line of N; the two are isomorphic");
    let (a, b) = build_hat_graphs();
    for (name, g) in [("NO+ hat", &a), ("NM34 hat", &b)] {
        out.check(
            g.degrees().iter().all(|&d| d == 3),
            format!("{name} is 3-regular"),
        );
        let comps = g.connected_components();
        out.equal(&format!("{name} components"), comps.len(), 7);
        out.check(
            comps
                .iter()
                .all(|c| c.len() == 4 && g.induced_is_complete(c)),
            format!("{name} components are K4"),
        );
        let lines = hat_component_lines(g);
        let distinct: BTreeSet<[u64; 3]> = lines.iter().flatten().copied().collect();
        out.check(
            lines.iter().all(Option::is_some) && distinct.len() == 7,
            format!("{name}: {} distinct lines of N", distinct.len()),
        );
    }
    out.check(
        verified_isomorphism(&a, &b) == Ok(true),
        "hat graphs isomorphic",
    );
    out
}

fn incidence_counts(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    out.expect("per vertex: 9 isotropic lines, 3 meeting N, |u^perp n Q+| = 19; per pair: 10 = 0+2+2+6, 6 = 2+0+0+4, 6 = 0+1+1+4");
    let vs = vertex_proof_counts();
    out.equal("vertices", vs.len(), 28);
    let all =
        |pred: &dyn Fn(&nm34_core::constructions::VertexProofCounts) -> bool| vs.iter().all(pred);
    out.check(
        all(&|v| v.isotropic_lines == 9),
        "every vertex on 9 totally isotropic lines",
    );
    out.check(
        all(&|v| v.lines_meeting_n == 3 && v.meeting_points_are_perp_line),
        "3 of them meet N, in the line u^perp n N",
    );
    out.check(all(&|v| v.perp_quadric_points == 19), "|u^perp n Q+| = 19");
    let pairs = pair_proof_counts();
    for (kind, tally, name) in [
        (
            PairKind::NonAdjacent,
            CaseTally::new(0, 2, 2, 6),
            "non-adjacent",
        ),
        (
            PairKind::AdjacentInPlane,
            CaseTally::new(2, 0, 0, 4),
            "adjacent in plane",
        ),
        (
            PairKind::AdjacentSecant,
            CaseTally::new(0, 1, 1, 4),
            "adjacent on secant",
        ),
    ] {
        let of_kind: Vec<_> = pairs.iter().filter(|p| p.kind == kind).collect();
        let ok = of_kind.iter().all(|p| {
            p.tally == tally
                && p.unclassified == 0
                && p.off_both_by_complement() == tally.off_both_perps as isize
        });
        out.check(
            ok,
            format!(
                "{name}: {} pairs, {} = {}+{}+{}+{}",
                of_kind.len(),
                tally.total(),
                tally.both_planes,
                tally.plane_u_off_perp_v,
                tally.off_perp_u_plane_v,
                tally.off_both_perps
            ),
        );
    }
    out.equal("pairs classified", pairs.len(), 378);
    out
}

fn no_plus_family(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    for (n, literal) in [
        (2, SrgParams::new(6, 3, 0, 3)),
        (4, SrgParams::new(120, 63, 30, 36)),
    ] {
        out.expect(format!("n={n}: {literal}"));
        out.check(
            no_plus_expected_params(n as u32) == literal,
            format!("n={n}: formula gives {literal}"),
        );
        srg_with_matrix_identity(
            &mut out,
            &format!("NO+({},2)", 2 * n),
            &build_no_plus(n).expect("n in range"),
            literal,
        );
    }
    out
}

fn multiplicity_sign(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    out.expect("flipped sign: m1 = 2 on (28,15,6,10), trace identity fails; corrected formula: trace identities hold for every built SRG");
    match flipped_sign_multiplicities(&SRG28) {
        Some((m1, m2)) => {
            out.equal("flipped m1", m1, 2);
            let s = Spectrum {
                m1,
                m2,
                ..SPECTRUM28
            };
            out.check(
                !s.satisfies_trace_identities(28),
                format!("flipped {s} fails the trace identities"),
            );
        }
        None => out.check(false, "flipped formula not integral"),
    }
    let mut graphs: Vec<(String, Graph)> = (2..=4)
        .map(|n| {
            (
                format!("NO+({},2)", 2 * n),
                build_no_plus(n).expect("n in range"),
            )
        })
        .collect();
    graphs.extend(
        Nm34Representation::ALL
            .iter()
            .map(|&r| (r.name().to_string(), build_nm34(r))),
    );
    graphs.push(("K(8,2)".into(), kneser_oracle()));
    graphs.push((
        "complement of NO+(6,2)".into(),
        build_no_plus(3).expect("n = 3").complement(),
    ));
    let mut passed = 0;
    for (name, g) in &graphs {
        let ok = srg_params(g).ok().and_then(|p| {
            spectrum_from_params(&p)
                .ok()
                .filter(|s| s.satisfies_trace_identities(p.v as i64))
        });
        match ok {
            Some(_) => passed += 1,
            None => out.check(false, format!("{name}: corrected formula fails")),
        }
    }
    out.equal(
        "built SRGs passing the corrected formula",
        passed,
        graphs.len(),
    );
    out
}

fn tangent_orthogonality(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    out.expect("378 pairs, all agree");
    let form = canonical_form();
    let gf2 = form.gf2().expect("GF(2)");
    let vs = no_plus_vertices(&form).expect("GF(2)");
    let (mut pairs, mut agree, mut tangent) = (0, 0, 0);
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let line = ProjSubspace::line_through(
                &ProjPoint::from_bits(u, 6).expect("nonzero"),
                &ProjPoint::from_bits(v, 6).expect("nonzero"),
            )
            .expect("distinct points");
            let is_tangent = form.line_intersection_count(&line).expect("a line") == 1;
            pairs += 1;
            tangent += usize::from(is_tangent);
            agree += usize::from(is_tangent == (gf2.polar(u, v) == 0));
        }
    }
    out.equal("pairs", pairs, 378);
    out.equal("pairs where tangency matches B(u,v) = 0", agree, 378);
    out.measure(format!("tangent pairs = {tangent}"));
    out
}

fn lifted_group(_: Option<Field>) -> Outcome {
    let mut out = Outcome::default();
    out.expect("lift(I) = I; lift(AB) ~ lift(A)lift(B) for all 168^2 pairs; nu(yA) = nu(y)lift(A) for all 7 x 168; 168 automorphisms of NM34");
    let f = Field::GF2;
    let id6: [[u8; 6]; 6] = std::array::from_fn(|i| std::array::from_fn(|j| u8::from(i == j)));
    out.check(
        lift(&IDENTITY3, f).map(|l| *l.matrix()) == Ok(id6),
        "lift(I) = I",
    );
    let group = general_linear_group(f);
    out.equal("|GL(3,2)|", group.len(), 168);
    let lifts: Vec<_> = group
        .iter()
        .map(|a| *lift(a, f).expect("invertible").matrix())
        .collect();
    let mut homomorphic = 0;
    for (a, la) in group.iter().zip(&lifts) {
        for (b, lb) in group.iter().zip(&lifts) {
            let lab = lift(&mul3(a, b, f), f).expect("invertible");
            homomorphic += usize::from(is_scalar_multiple(lab.matrix(), &mul6(la, lb, f), f));
        }
    }
    out.equal(
        "pairs with lift(AB) ~ lift(A)lift(B)",
        homomorphic,
        168 * 168,
    );
    let plane = enumerate_points(2, f);
    let mut equivariant = 0;
    for a in &group {
        let b = lift(a, f).expect("invertible");
        for y in &plane {
            let ya: Vec<u8> = (0..3)
                .map(|j| (0..3).fold(0, |acc, i| f.add(acc, f.mul(y.coords()[i], a[i][j]))))
                .collect();
            let ya = ProjPoint::new(ya, f).expect("A invertible");
            let lhs = veronese_embed(&ya).expect("plane point");
            equivariant += usize::from(lhs == b.apply(&veronese_embed(y).expect("plane point")));
        }
    }
    out.equal(
        "(point, element) pairs with nu(yA) = nu(y)lift(A)",
        equivariant,
        7 * 168,
    );
    out.equal(
        "lifted elements that are automorphisms of NM34",
        lifted_group_automorphisms(),
        168,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_sorted_and_every_claim_has_a_scope() {
        let ids: Vec<_> = CLAIMS.iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(ids, sorted);
        assert!(CLAIMS
            .iter()
            .all(|c| !c.scopes.is_empty() && !c.scopes.contains(&Scope::All)));
        assert_eq!(claims_in(Scope::All).count(), 12);
    }

    #[test]
    fn scope_names_round_trip() {
        for s in Scope::ALL {
            assert_eq!(s.name().parse::<Scope>(), Ok(s));
        }
        assert!("everything".parse::<Scope>().is_err());
    }

    #[test]
    fn counts_respect_q_override() {
        let r = verify(Scope::Counts, Some(Field::GF3));
        let det = r
            .entries
            .iter()
            .find(|e| e.claim_id == "C06.determinantal-count")
            .unwrap();
        assert_eq!(det.status, Status::Verified);
        assert!(det.measured.contains("130"), "{}", det.measured);
    }

    #[test]
    fn unsupported_field_rejected() {
        assert!(parse_field(4).is_err());
        assert_eq!(parse_field(5).map(Field::q), Ok(5));
    }
}
