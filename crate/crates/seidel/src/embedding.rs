//! Exact spherical-embedding machinery on the Gram side.
//!
//! A switchable strongly regular graph embeds on the unit sphere S^{m2-1}
//! with Gram matrix I + B/rho, which equals (v/m2) E2 in the Bose-Mesner
//! algebra. Coordinates are never materialised: every certificate here is
//! an exact rational identity on the Gram matrix, so there is no numeric
//! rank estimation and no floating point anywhere.

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::srg::SrgSpectrum;
use crate::switching::SwitchingSet;

type Rat = Rational64;

/// Exact rational Gram matrix of a spherical embedding, with its certified
/// rank and the set of off-diagonal inner-product values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalGram {
    n: usize,
    entries: Vec<Rat>,
    /// Embedding dimension: rank of the matrix, m2 for E2-embeddings.
    pub d: usize,
    /// The distinct off-diagonal inner products A(X), sorted ascending.
    pub inner_values: Vec<Rat>,
}

impl RationalGram {
    /// Builds a Gram matrix from explicit entries (row-major, must be
    /// symmetric with unit diagonal); rank is taken on trust. Used by tests
    /// for small hand-made configurations.
    pub fn from_entries(n: usize, entries: Vec<Rat>, d: usize) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        let mut inner_values: Vec<Rat> = Vec::new();
        for x in 0..n {
            for y in 0..n {
                debug_assert_eq!(entries[x * n + y], entries[y * n + x]);
                if x != y && !inner_values.contains(&entries[x * n + y]) {
                    inner_values.push(entries[x * n + y]);
                }
            }
        }
        inner_values.sort();
        RationalGram {
            n,
            entries,
            d,
            inner_values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, x: usize, y: usize) -> Rat {
        self.entries[x * self.n + y]
    }

    /// Sum of all entries (ordered pairs, diagonal included).
    pub fn total_sum(&self) -> Rat {
        self.entries.iter().sum()
    }

    /// Sum of squares of all entries.
    pub fn total_square_sum(&self) -> Rat {
        self.entries.iter().map(|e| e * e).sum()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        (0..self.n)
            .map(|x| {
                (0..self.n)
                    .map(|y| self.entries[x * self.n + y] * v[y])
                    .sum()
            })
            .collect()
    }

    /// Distribution of inner products seen from point `x`: pairs of
    /// (value, count) over the other points, ordered as `inner_values`.
    pub fn value_counts_at(&self, x: usize) -> Vec<(Rat, usize)> {
        self.inner_values
            .iter()
            .map(|&a| {
                let c = (0..self.n)
                    .filter(|&y| y != x && self.entry(x, y) == a)
                    .count();
                (a, c)
            })
            .collect()
    }
}

/// Lemma: for a switchable spectrum, I + B/rho is the Gram matrix of the
/// spherical embedding with respect to E2, of rank m2.
///
/// The rank is certified exactly: M(M - (v/m2) I) = 0 pins the eigenvalues
/// to {0, v/m2}, and trace(M) = n then forces rank = n * m2 / v = m2.
pub fn gram_from_graph(g: &Graph, s: &SrgSpectrum) -> Result<RationalGram> {
    if !s.switchable {
        return Err(Error::Precondition(format!(
            "parameters {} do not satisfy v = 2(k - theta1)",
            s.params
        )));
    }
    if g.n() != s.params.v {
        return Err(Error::Parameter(format!(
            "graph has {} vertices but the spectrum is for v = {}",
            g.n(),
            s.params.v
        )));
    }
    let n = g.n();
    let rho = s.rho;
    let on_edge = Rat::new(-1, rho);
    let off_edge = Rat::new(1, rho);
    let mut entries = vec![Rat::zero(); n * n];
    for x in 0..n {
        for y in 0..n {
            entries[x * n + y] = if x == y {
                Rat::from(1)
            } else if g.has_edge(x, y) {
                on_edge
            } else {
                off_edge
            };
        }
    }
    let gram = RationalGram {
        n,
        entries,
        d: s.m2,
        inner_values: vec![on_edge, off_edge],
    };
    debug_assert!(certify_rank(&gram, s));
    Ok(gram)
}

/// Verifies M(M - (v/m2) I) = 0 entrywise; with trace(M) = n this pins the
/// rank to m2 exactly.
pub fn certify_rank(gram: &RationalGram, s: &SrgSpectrum) -> bool {
    let n = gram.n;
    let scale = Rat::new(s.params.v as i64, s.m2 as i64);
    for y in 0..n {
        let col: Vec<Rat> = (0..n).map(|x| gram.entry(x, y)).collect();
        let out = gram.mul_vec(&col);
        for x in 0..n {
            let shifted = out[x] - scale * col[x];
            if !shifted.is_zero() {
                return false;
            }
        }
    }
    // Eigenvalues are in {0, v/m2}; trace n = (v/m2) * rank forces rank m2.
    n == s.params.v
}

/// Spherical t-design certification by moment identities: t = 1 needs the
/// entry sum to vanish, t = 2 additionally needs the square sum to equal
/// n^2 / d.
pub fn check_design_moments(gram: &RationalGram, t: u8) -> bool {
    let first = gram.total_sum().is_zero();
    match t {
        1 => first,
        2 => first && gram.total_square_sum() == Rat::new((gram.n * gram.n) as i64, gram.d as i64),
        _ => false,
    }
}

/// True iff the points of `set` form a spherical 1-design:
/// sum over x, y in H of M\[x\]\[y\] = 0. For these embeddings this is
/// equivalent to the subgraph induced by H being k - (v-h)/2 regular.
pub fn subset_design1(gram: &RationalGram, set: &SwitchingSet) -> Result<bool> {
    if set.universe() != gram.n {
        return Err(Error::Parameter("vertex set universe mismatch".into()));
    }
    if set.is_empty() {
        return Err(Error::Parameter(
            "subset 1-design test needs a nonempty set".into(),
        ));
    }
    let verts = set.indices();
    let mut total = Rat::zero();
    for &x in &verts {
        for &y in &verts {
            total += gram.entry(x, y);
        }
    }
    Ok(total.is_zero())
}

/// Parallel-hyperplane test: with sigma the +-1 sign vector of H, the
/// embedding lies on two parallel hyperplanes perpendicular to sigma iff
/// M sigma = (v/m2) sigma exactly. This holds precisely when H passes the
/// shifted-parameters criterion (`check_thm2`).
pub fn parallel_hyperplane_check(g: &Graph, s: &SrgSpectrum, set: &SwitchingSet) -> Result<bool> {
    let gram = gram_from_graph(g, s)?;
    hyperplane_eigencheck(&gram, s, set)
}

/// The raw eigenvector test behind [`parallel_hyperplane_check`], for
/// callers that already hold the Gram matrix.
pub fn hyperplane_eigencheck(
    gram: &RationalGram,
    s: &SrgSpectrum,
    set: &SwitchingSet,
) -> Result<bool> {
    if set.universe() != gram.n {
        return Err(Error::Parameter("vertex set universe mismatch".into()));
    }
    let sigma: Vec<Rat> = (0..gram.n)
        .map(|x| {
            if set.contains(x) {
                Rat::from(-1)
            } else {
                Rat::from(1)
            }
        })
        .collect();
    let out = gram.mul_vec(&sigma);
    let scale = Rat::new(s.params.v as i64, s.m2 as i64);
    Ok((0..gram.n).all(|x| out[x] == scale * sigma[x]))
}

/// The relative bound for equiangular line systems: v <= d(rho^2 - 1) /
/// (rho^2 - d), valid only when rho^2 > d.
pub fn relative_bound(d: usize, rho: i64) -> Result<Rat> {
    let d = d as i64;
    if rho * rho <= d {
        return Err(Error::Precondition(format!(
            "relative bound needs rho^2 > d, got rho = {rho}, d = {d}"
        )));
    }
    Ok(Rat::new(d * (rho * rho - 1), rho * rho - d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct_named, pair_index, Family};
    use crate::graph::VertexSet;
    use crate::srg::{derive_spectrum, verify_srg};
    use crate::switching::{check_thm1_with, check_thm2_with, switch};

    fn graph_and_spectrum(family: Family, order: usize) -> (Graph, SrgSpectrum) {
        let g = construct_named(&family, order).unwrap();
        let params = verify_srg(&g).params().unwrap();
        (g, derive_spectrum(&params).unwrap())
    }

    fn t5_gram() -> (Graph, SrgSpectrum, RationalGram) {
        let (g, s) = graph_and_spectrum(Family::Triangular, 5);
        let gram = gram_from_graph(&g, &s).unwrap();
        (g, s, gram)
    }

    #[test]
    fn t5_gram_values() {
        let (g, _, gram) = t5_gram();
        assert_eq!(gram.d, 5);
        assert_eq!(gram.entry(0, 0), Rat::from(1));
        let (u, v) = g.edges()[0];
        assert_eq!(gram.entry(u, v), Rat::new(-1, 3));
        assert_eq!(gram.inner_values, vec![Rat::new(-1, 3), Rat::new(1, 3)]);
        // Moment identities: sum 0, square sum 20 = 10^2/5.
        assert_eq!(gram.total_sum(), Rat::zero());
        assert_eq!(gram.total_square_sum(), Rat::from(20));
        assert!(check_design_moments(&gram, 1));
        assert!(check_design_moments(&gram, 2));
    }

    #[test]
    fn gram_rejects_non_switchable() {
        let petersen = construct_named(&Family::Triangular, 5)
            .unwrap()
            .complement();
        let s = derive_spectrum(&verify_srg(&petersen).params().unwrap()).unwrap();
        assert!(matches!(
            gram_from_graph(&petersen, &s),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn single_point_fails_t1() {
        let gram = RationalGram::from_entries(1, vec![Rat::from(1)], 1);
        assert!(!check_design_moments(&gram, 1));
    }

    #[test]
    fn antipodal_pair_passes_t1() {
        let gram = RationalGram::from_entries(
            2,
            vec![Rat::from(1), Rat::from(-1), Rat::from(-1), Rat::from(1)],
            1,
        );
        assert!(check_design_moments(&gram, 1));
    }

    #[test]
    fn subset_design_on_cliques() {
        let gc = construct_named(&Family::Triangular, 8)
            .unwrap()
            .complement();
        let s = derive_spectrum(&verify_srg(&gc).params().unwrap()).unwrap();
        let gram = gram_from_graph(&gc, &s).unwrap();
        let clique = VertexSet::from_indices(
            28,
            &[
                pair_index(8, 0, 1),
                pair_index(8, 2, 3),
                pair_index(8, 4, 5),
                pair_index(8, 6, 7),
            ],
        )
        .unwrap();
        assert!(subset_design1(&gram, &clique).unwrap());
        let single = VertexSet::from_indices(28, &[0]).unwrap();
        assert!(!subset_design1(&gram, &single).unwrap());
        assert!(subset_design1(&gram, &VertexSet::empty(28)).is_err());
    }

    #[test]
    fn subset_design_equals_thm1_exhaustively_at_v10() {
        let (g, s, gram) = t5_gram();
        for bits in 1u32..(1 << 10) - 1 {
            let idx: Vec<usize> = (0..10).filter(|&x| bits >> x & 1 == 1).collect();
            let h = VertexSet::from_indices(10, &idx).unwrap();
            let design = subset_design1(&gram, &h).unwrap();
            let thm1 = check_thm1_with(&s, &g, &h).unwrap();
            assert_eq!(design, thm1, "H = {h}");
        }
    }

    #[test]
    fn switching_negates_rows_of_the_gram() {
        let (g, s, gram) = t5_gram();
        let h = VertexSet::from_indices(10, &[0, 3, 7]).unwrap();
        let switched = switch(&g, &h).unwrap();
        // The switched graph need not be strongly regular, so build its
        // I + B/rho Gram matrix directly; the two-graph (and rho) agree.
        let sw_gram = {
            let n = 10;
            let mut entries = vec![Rat::zero(); n * n];
            for x in 0..n {
                for y in 0..n {
                    entries[x * n + y] = if x == y {
                        Rat::from(1)
                    } else if switched.has_edge(x, y) {
                        Rat::new(-1, s.rho)
                    } else {
                        Rat::new(1, s.rho)
                    };
                }
            }
            RationalGram::from_entries(n, entries, s.m2)
        };
        for x in 0..10 {
            for y in 0..10 {
                let sign = |v: usize| {
                    if h.contains(v) {
                        -Rat::from(1)
                    } else {
                        Rat::from(1)
                    }
                };
                assert_eq!(sw_gram.entry(x, y), sign(x) * gram.entry(x, y) * sign(y));
            }
        }
    }

    #[test]
    fn hyperplane_check_on_the_v16_graph() {
        let gc = construct_named(&Family::Clebsch, 16).unwrap().complement();
        let s = derive_spectrum(&verify_srg(&gc).params().unwrap()).unwrap();
        let gram = gram_from_graph(&gc, &s).unwrap();
        let mut hits = 0;
        for bits in 0u32..1 << 16 {
            if bits.count_ones() != 8 {
                continue;
            }
            let idx: Vec<usize> = (0..16).filter(|&x| bits >> x & 1 == 1).collect();
            let h = VertexSet::from_indices(16, &idx).unwrap();
            if check_thm2_with(&s, &gc, &h).unwrap().is_some() {
                assert!(hyperplane_eigencheck(&gram, &s, &h).unwrap());
                hits += 1;
                if hits >= 3 {
                    break;
                }
            }
        }
        assert!(hits > 0);
        // The all-ones direction is not an eigenvector at v/m2: M j = 0.
        let empty = VertexSet::empty(16);
        assert!(!hyperplane_eigencheck(&gram, &s, &empty).unwrap());
        let j = vec![Rat::from(1); 16];
        assert!(gram.mul_vec(&j).iter().all(|e| e.is_zero()));
    }

    #[test]
    fn relative_bound_values() {
        assert_eq!(relative_bound(7, 3).unwrap(), Rat::from(28));
        assert_eq!(relative_bound(5, 3).unwrap(), Rat::from(10));
        assert!(matches!(relative_bound(9, 3), Err(Error::Precondition(_))));
    }
}
