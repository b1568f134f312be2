use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub const fn new(v: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { v, k, lambda, mu }
    }

    /// `k(k − λ − 1) = (v − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        let (v, k, l, m) = (
            self.v as i64,
            self.k as i64,
            self.lambda as i64,
            self.mu as i64,
        );
        k * (k - l - 1) == (v - k - 1) * m
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> Option<SrgParams> {
        let (v, k, l, m) = (
            self.v as i64,
            self.k as i64,
            self.lambda as i64,
            self.mu as i64,
        );
        let c = [v - k - 1, v - 2 * k + m - 2, v - 2 * k + l];
        if c.iter().any(|&x| x < 0) {
            return None;
        }
        Some(SrgParams::new(
            self.v,
            c[0] as usize,
            c[1] as usize,
            c[2] as usize,
        ))
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    TooSmall,
    Complete,
    Edgeless,
    Disconnected,
}

/// Why a graph is not (or not usefully) strongly regular. Each variant
/// carries a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotSrg {
    Malformed,
    Degenerate(Degeneracy),
    Irregular {
        u: usize,
        v: usize,
        deg_u: usize,
        deg_v: usize,
    },
    /// Two adjacent pairs with different common-neighbour counts.
    LambdaVaries {
        first: (usize, usize, usize),
        second: (usize, usize, usize),
    },
    /// Two non-adjacent pairs with different common-neighbour counts.
    MuVaries {
        first: (usize, usize, usize),
        second: (usize, usize, usize),
    },
    /// Pair counting succeeded but `A²` disagrees at this entry.
    MatrixIdentity {
        u: usize,
        v: usize,
    },
}

impl fmt::Display for NotSrg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotSrg::Malformed => f.write_str("adjacency is not symmetric and loop-free"),
            NotSrg::Degenerate(d) => write!(f, "degenerate graph ({d:?}), not an SRG"),
            NotSrg::Irregular { u, v, deg_u, deg_v } => {
                write!(f, "not regular: deg({u}) = {deg_u}, deg({v}) = {deg_v}")
            }
            NotSrg::LambdaVaries { first, second } => write!(
                f,
                "adjacent pairs ({},{}) and ({},{}) have {} and {} common neighbours",
                first.0, first.1, second.0, second.1, first.2, second.2
            ),
            NotSrg::MuVaries { first, second } => write!(
                f,
                "non-adjacent pairs ({},{}) and ({},{}) have {} and {} common neighbours",
                first.0, first.1, second.0, second.1, first.2, second.2
            ),
            NotSrg::MatrixIdentity { u, v } => write!(f, "A² identity fails at ({u},{v})"),
        }
    }
}

/// Strongly regular parameters by exhaustive pair counting, confirmed by the
/// integer identity `A² = kI + λA + μ(J − I − A)`.
pub fn srg_params(g: &Graph) -> Result<SrgParams, NotSrg> {
    let n = g.n();
    if !g.is_well_formed() {
        return Err(NotSrg::Malformed);
    }
    if n < 2 {
        return Err(NotSrg::Degenerate(Degeneracy::TooSmall));
    }
    if g.is_complete() {
        return Err(NotSrg::Degenerate(Degeneracy::Complete));
    }
    if g.is_edgeless() {
        return Err(NotSrg::Degenerate(Degeneracy::Edgeless));
    }
    let k = g.degree(0);
    if let Some(u) = (1..n).find(|&u| g.degree(u) != k) {
        return Err(NotSrg::Irregular {
            u: 0,
            v: u,
            deg_u: k,
            deg_v: g.degree(u),
        });
    }
    if !g.is_connected() {
        return Err(NotSrg::Degenerate(Degeneracy::Disconnected));
    }
    let mut lambda: Option<(usize, usize, usize)> = None;
    let mut mu: Option<(usize, usize, usize)> = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbors(u, v);
            let slot = if g.has_edge(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some((u, v, c)),
                Some(first) if first.2 != c => {
                    let second = (u, v, c);
                    return Err(if g.has_edge(u, v) {
                        NotSrg::LambdaVaries { first, second }
                    } else {
                        NotSrg::MuVaries { first, second }
                    });
                }
                _ => {}
            }
        }
    }
    // both exist: the graph is neither complete nor edgeless
    let p = SrgParams::new(n, k, lambda.map_or(0, |x| x.2), mu.map_or(0, |x| x.2));
    if let Some((u, v)) = matrix_identity_witness(g, &p) {
        return Err(NotSrg::MatrixIdentity { u, v });
    }
    Ok(p)
}

/// First entry where `A² ≠ kI + λA + μ(J − I − A)`, using a dense integer
/// product rather than row popcounts.
pub fn matrix_identity_witness(g: &Graph, p: &SrgParams) -> Option<(usize, usize)> {
    let n = g.n();
    let a: Vec<i64> = (0..n * n)
        .map(|idx| i64::from(g.has_edge(idx / n, idx % n)))
        .collect();
    let mut sq = vec![0i64; n * n];
    for i in 0..n {
        for l in 0..n {
            let x = a[i * n + l];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                sq[i * n + j] += x * a[l * n + j];
            }
        }
    }
    let (k, lam, mu) = (p.k as i64, p.lambda as i64, p.mu as i64);
    for i in 0..n {
        for j in 0..n {
            let aij = a[i * n + j];
            let id = i64::from(i == j);
            let rhs = k * id + lam * aij + mu * (1 - id - aij);
            if sq[i * n + j] != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// `{k: 1, θ₁: m₁, θ₂: m₂}` with `θ₁ > θ₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    pub k: i64,
    pub theta1: i64,
    pub m1: i64,
    pub theta2: i64,
    pub m2: i64,
}

impl Spectrum {
    /// `m₁ + m₂ = v − 1`, `tr A = 0` and `tr A² = vk`.
    pub fn satisfies_trace_identities(&self, v: i64) -> bool {
        let Spectrum {
            k,
            theta1: t1,
            m1,
            theta2: t2,
            m2,
        } = *self;
        m1 >= 0
            && m2 >= 0
            && m1 + m2 == v - 1
            && k + m1 * t1 + m2 * t2 == 0
            && k * k + m1 * t1 * t1 + m2 * t2 * t2 == v * k
    }

    /// Eigenvalue/multiplicity pairs in decreasing eigenvalue order.
    pub fn pairs(&self) -> [(i64, i64); 3] {
        [(self.k, 1), (self.theta1, self.m1), (self.theta2, self.m2)]
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}:1, {}:{}, {}:{}}}",
            self.k, self.theta1, self.m1, self.theta2, self.m2
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumError {
    /// `(λ − μ)² + 4(k − μ)` is not a perfect square.
    Irrational {
        discriminant: i64,
    },
    ZeroDiscriminant,
    NonIntegral,
    TraceIdentity(Spectrum),
}

impl fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumError::Irrational { discriminant } => {
                write!(
                    f,
                    "irrational eigenvalues: discriminant {discriminant} is not a square"
                )
            }
            SpectrumError::ZeroDiscriminant => f.write_str("zero discriminant"),
            SpectrumError::NonIntegral => {
                f.write_str("non-integral multiplicities: infeasible parameters")
            }
            SpectrumError::TraceIdentity(s) => write!(f, "{s} fails the trace identities"),
        }
    }
}

fn isqrt(d: i64) -> Option<i64> {
    if d < 0 {
        return None;
    }
    // binary search for the largest r with r² ≤ d
    let (mut lo, mut hi) = (0i64, d.min(3_037_000_499) + 1);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if mid * mid <= d {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo * lo == d).then_some(lo)
}

fn parts(p: &SrgParams) -> (i64, i64, i64, i64) {
    (
        p.v as i64,
        p.k as i64,
        p.lambda as i64 - p.mu as i64,
        p.k as i64 - p.mu as i64,
    )
}

/// Eigenvalues `θ = ½[(λ−μ) ± √D]`, `D = (λ−μ)² + 4(k−μ)`, and
/// multiplicities `m₁,₂ = ½[(v−1) ∓ (2k + (v−1)(λ−μ))/√D]`. The result is
/// returned only if it passes the trace identities.
pub fn spectrum_from_params(p: &SrgParams) -> Result<Spectrum, SpectrumError> {
    let (v, k, diff, k_mu) = parts(p);
    let d = diff * diff + 4 * k_mu;
    let s = isqrt(d).ok_or(SpectrumError::Irrational { discriminant: d })?;
    if s == 0 {
        return Err(SpectrumError::ZeroDiscriminant);
    }
    let num = 2 * k + (v - 1) * diff;
    if (diff + s) % 2 != 0 || num % s != 0 {
        return Err(SpectrumError::NonIntegral);
    }
    let t = num / s;
    if (v - 1 - t) % 2 != 0 {
        return Err(SpectrumError::NonIntegral);
    }
    let spec = Spectrum {
        k,
        theta1: (diff + s) / 2,
        m1: (v - 1 - t) / 2,
        theta2: (diff - s) / 2,
        m2: (v - 1 + t) / 2,
    };
    if !spec.satisfies_trace_identities(v) {
        return Err(SpectrumError::TraceIdentity(spec));
    }
    Ok(spec)
}

/// Multiplicities with `2k − (v−1)(λ−μ)` in the numerator instead. Kept to
/// show that this variant breaks the trace identity; `None` if not integral.
pub fn flipped_sign_multiplicities(p: &SrgParams) -> Option<(i64, i64)> {
    let (v, k, diff, k_mu) = parts(p);
    let s = isqrt(diff * diff + 4 * k_mu).filter(|&s| s != 0)?;
    let num = 2 * k - (v - 1) * diff;
    if num % s != 0 || (v - 1 - num / s) % 2 != 0 {
        return None;
    }
    let t = num / s;
    Some(((v - 1 - t) / 2, (v - 1 + t) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn petersen() -> Graph {
        // Kneser(5,2): 2-subsets of {0..4}, adjacent iff disjoint
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        Graph::from_fn(10, |i, j| {
            let (a, b) = (pairs[i], pairs[j]);
            a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
        })
    }

    #[test]
    fn petersen_params() {
        assert_eq!(srg_params(&petersen()), Ok(SrgParams::new(10, 3, 0, 1)));
    }

    #[test]
    fn degenerate_and_failures() {
        assert_eq!(
            srg_params(&Graph::complete(4)),
            Err(NotSrg::Degenerate(Degeneracy::Complete))
        );
        assert_eq!(
            srg_params(&Graph::new(4)),
            Err(NotSrg::Degenerate(Degeneracy::Edgeless))
        );
        assert!(matches!(
            srg_params(&Graph::path(3)),
            Err(NotSrg::Irregular { .. })
        ));
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(
            srg_params(&two_triangles),
            Err(NotSrg::Degenerate(Degeneracy::Disconnected))
        );
        // C6 is regular but mu varies (opposite vertices share 2, others 0)
        assert!(matches!(
            srg_params(&Graph::cycle(6)),
            Err(NotSrg::MuVaries { .. })
        ));
        assert_eq!(srg_params(&Graph::cycle(5)), Ok(SrgParams::new(5, 2, 0, 1)));
    }

    #[test]
    fn matrix_identity_detects_wrong_params() {
        let g = petersen();
        assert_eq!(
            matrix_identity_witness(&g, &SrgParams::new(10, 3, 0, 1)),
            None
        );
        assert!(matrix_identity_witness(&g, &SrgParams::new(10, 3, 1, 1)).is_some());
    }

    #[test]
    fn spectra() {
        let s = spectrum_from_params(&SrgParams::new(28, 15, 6, 10)).unwrap();
        assert_eq!(
            s,
            Spectrum {
                k: 15,
                theta1: 1,
                m1: 20,
                theta2: -5,
                m2: 7
            }
        );
        let s = spectrum_from_params(&SrgParams::new(10, 3, 0, 1)).unwrap();
        assert_eq!(
            s,
            Spectrum {
                k: 3,
                theta1: 1,
                m1: 5,
                theta2: -2,
                m2: 4
            }
        );
        assert_eq!(
            spectrum_from_params(&SrgParams::new(5, 2, 0, 1)),
            Err(SpectrumError::Irrational { discriminant: 5 })
        );
        assert_eq!(s.to_string(), "{3:1, 1:5, -2:4}");
    }

    #[test]
    fn petersen_spectrum_by_trace_solving() {
        // independent: solve m1 + m2 = 9, 3 + m1*1 + m2*(-2) = 0 by search
        let sol: Vec<(i64, i64)> = (0..=9)
            .map(|m1| (m1, 9 - m1))
            .filter(|&(m1, m2)| 3 + m1 - 2 * m2 == 0)
            .collect();
        assert_eq!(sol, [(5, 4)]);
    }

    #[test]
    fn flipped_sign_variant_breaks_trace() {
        let p = SrgParams::new(28, 15, 6, 10);
        let (m1, m2) = flipped_sign_multiplicities(&p).unwrap();
        assert_eq!((m1, m2), (2, 25));
        let bad = Spectrum {
            k: 15,
            theta1: 1,
            m1,
            theta2: -5,
            m2,
        };
        assert!(!bad.satisfies_trace_identities(28));
    }

    #[test]
    fn complement_params() {
        let p = SrgParams::new(28, 15, 6, 10);
        assert_eq!(p.complement(), Some(SrgParams::new(28, 12, 6, 4)));
        assert!(p.is_feasible());
        assert!(SrgParams::new(28, 12, 6, 4).is_feasible());
        assert!(!SrgParams::new(28, 15, 6, 9).is_feasible());
    }
}
