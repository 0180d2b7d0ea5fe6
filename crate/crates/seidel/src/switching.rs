//! Seidel switching, the switching-set predicates, and two-graph structure.
//!
//! `switch` toggles all adjacencies between a subset H and its complement;
//! on the Seidel matrix B this is conjugation by the +-1 diagonal of H, and
//! on the spherical embedding it moves the image of H to its antipodes.
//! `check_thm1` and `check_thm2` decide, from the induced subgraph alone,
//! whether the switched graph is strongly regular with the same or with the
//! shifted parameter set. `bose_shrikhande_check` is the older two-sided
//! regularity criterion, kept as an independent cross-check.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::srg::{derive_spectrum, verify_srg, SrgClass, SrgSpectrum};

/// A subset of vertices acting as a switching set.
pub type SwitchingSet = VertexSet;

/// The (0,-1,1) adjacency matrix: -1 on edges, +1 on non-edges, 0 diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeidelMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SeidelMatrix {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.n();
        let mut entries = vec![0i8; n * n];
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    entries[x * n + y] = if g.has_edge(x, y) { -1 } else { 1 };
                }
            }
        }
        SeidelMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, x: usize, y: usize) -> i8 {
        self.entries[x * self.n + y]
    }

    /// Conjugation D_H * B * D_H by the sign diagonal of `set`.
    pub fn conjugated(&self, set: &VertexSet) -> Self {
        let n = self.n;
        let sign = |x: usize| if set.contains(x) { -1i64 } else { 1 };
        let mut entries = vec![0i8; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[x * n + y] = (sign(x) * self.entries[x * n + y] as i64 * sign(y)) as i8;
            }
        }
        SeidelMatrix { n, entries }
    }

    /// Matrix-vector product over i64.
    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|x| (0..n).map(|y| self.entries[x * n + y] as i64 * v[y]).sum())
            .collect()
    }

    /// True iff (B - a*I)(B - b*I) = 0 over the integers.
    pub fn annihilated_by(&self, a: i64, b: i64) -> bool {
        let n = self.n;
        // Column by column: (B - aI) * ((B - bI) e_y).
        for y in 0..n {
            let mut col: Vec<i64> = (0..n).map(|x| self.entries[x * n + y] as i64).collect();
            col[y] -= b;
            let mut out = self.mul_vec(&col);
            for x in 0..n {
                out[x] -= a * col[x];
            }
            if out.iter().any(|&e| e != 0) {
                return false;
            }
        }
        true
    }
}

/// Switches adjacency between `set` and its complement: edges within either
/// side are untouched, every cross pair is toggled.
pub fn switch(g: &Graph, set: &SwitchingSet) -> Result<Graph> {
    if set.universe() != g.n() {
        return Err(Error::Parameter(format!(
            "switching set over {} vertices used with a graph on {}",
            set.universe(),
            g.n()
        )));
    }
    let mut out = g.clone();
    let inside = set.words().to_vec();
    let outside = set.complement();
    for x in 0..g.n() {
        // Cross pairs toggle; x is never a member of the mask applied to
        // its own row, so the diagonal stays zero.
        let mask = if set.contains(x) {
            outside.words()
        } else {
            &inside
        };
        out.xor_row(x, mask);
    }
    Ok(out)
}

fn require_switchable(g: &Graph) -> Result<SrgSpectrum> {
    let params = match verify_srg(g) {
        SrgClass::PrimitiveSrg(p) => p,
        other => {
            return Err(Error::Precondition(format!(
                "graph is not a primitive strongly regular graph ({other:?})"
            )))
        }
    };
    let s = derive_spectrum(&params)?;
    if !s.switchable {
        return Err(Error::Precondition(format!(
            "parameters {params} do not satisfy v = 2(k - theta1)"
        )));
    }
    Ok(s)
}

/// The same-parameters switching criterion (thm1), for a graph whose
/// spectrum is already known to be switchable: S(G,H) is strongly regular
/// with the same parameters iff the subgraph induced by H is k - (v-h)/2
/// regular.
///
/// H = empty and H = V hold vacuously (S(G,H) = G). Sets with h != v
/// (mod 2) return false: the target degree is not an integer.
pub fn check_thm1_with(s: &SrgSpectrum, g: &Graph, set: &SwitchingSet) -> Result<bool> {
    if !s.switchable {
        return Err(Error::Precondition(format!(
            "parameters {} do not satisfy v = 2(k - theta1)",
            s.params
        )));
    }
    if set.universe() != g.n() {
        return Err(Error::Parameter("switching set universe mismatch".into()));
    }
    let v = s.params.v;
    let h = set.len();
    if h == 0 || h == v {
        return Ok(true);
    }
    if !(v - h).is_multiple_of(2) {
        return Ok(false);
    }
    let target = s.params.k as i64 - ((v - h) / 2) as i64;
    if target < 0 || target as usize > h - 1 {
        return Ok(false);
    }
    Ok(g.induced_is_regular_of(set.words(), target as usize))
}

/// The same-parameters criterion; verifies the graph is a primitive
/// switchable SRG before deciding. See [`check_thm1_with`] for the
/// hot-path variant.
pub fn check_thm1(g: &Graph, set: &SwitchingSet) -> Result<bool> {
    let s = require_switchable(g)?;
    check_thm1_with(&s, g, set)
}

/// The shifted-parameters criterion (thm2): returns c = v/2 - 2*mu iff
/// |H| = v/2 and the subgraph induced by H is (k - mu)-regular, in which
/// case S(G,H) is strongly regular with parameters (v, k+c, lambda+c,
/// mu+c).
pub fn check_thm2_with(s: &SrgSpectrum, g: &Graph, set: &SwitchingSet) -> Result<Option<i64>> {
    if !s.switchable {
        return Err(Error::Precondition(format!(
            "parameters {} do not satisfy v = 2(k - theta1)",
            s.params
        )));
    }
    if set.universe() != g.n() {
        return Err(Error::Parameter("switching set universe mismatch".into()));
    }
    let v = s.params.v;
    if set.len() * 2 != v {
        return Ok(None);
    }
    let target = s.params.k - s.params.mu;
    if g.induced_is_regular_of(set.words(), target) {
        Ok(Some(v as i64 / 2 - 2 * s.params.mu as i64))
    } else {
        Ok(None)
    }
}

/// The shifted-parameters criterion with the primitivity and
/// switchability checks.
pub fn check_thm2(g: &Graph, set: &SwitchingSet) -> Result<Option<i64>> {
    let s = require_switchable(g)?;
    check_thm2_with(&s, g, set)
}

/// The Bose-Shrikhande two-sided criterion: with H1 = `set`, H2 = V \ H1,
/// true iff both induced subgraphs are regular, of degrees w1 and w2 with
/// w1 - w2 = (v1 - v2)/2. Requires 2k - v/2 = lambda + mu; an empty side is
/// treated as regular of the degree the identity forces.
pub fn bose_shrikhande_check(g: &Graph, set: &SwitchingSet) -> Result<bool> {
    let params = match verify_srg(g) {
        SrgClass::PrimitiveSrg(p) | SrgClass::ImprimitiveSrg(p) => p,
        other => {
            return Err(Error::Precondition(format!(
                "graph is not strongly regular ({other:?})"
            )))
        }
    };
    let (v, k, l, m) = (
        params.v as i64,
        params.k as i64,
        params.lambda as i64,
        params.mu as i64,
    );
    if 4 * k - v != 2 * (l + m) {
        return Err(Error::Precondition(format!(
            "parameters {params} violate the identity 2k - v/2 = lambda + mu"
        )));
    }
    if set.universe() != g.n() {
        return Err(Error::Parameter("switching set universe mismatch".into()));
    }
    let v1 = set.len() as i64;
    let v2 = v - v1;
    let co = set.complement();
    let w1 = induced_degree(g, set);
    let w2 = induced_degree(g, &co);
    match (w1, w2) {
        // Empty sides are unconstrained; the other side must be regular.
        (None, _) | (_, None) => Ok(false),
        (Some(w1), Some(w2)) => {
            let w1 = if v1 == 0 { w2 + (v1 - v2) / 2 } else { w1 };
            let w2 = if v2 == 0 { w1 - (v1 - v2) / 2 } else { w2 };
            Ok(2 * (w1 - w2) == v1 - v2)
        }
    }
}

/// Degree of the subgraph induced on `set` if it is regular; the empty set
/// counts as 0-regular.
fn induced_degree(g: &Graph, set: &VertexSet) -> Option<i64> {
    let mut deg: Option<i64> = if set.is_empty() { Some(0) } else { None };
    for x in set.iter() {
        let d = g.degree_into(x, set.words()) as i64;
        match deg {
            None => deg = Some(d),
            Some(prev) if prev != d => return None,
            _ => {}
        }
    }
    deg
}

/// The 2x2 quotient matrix of average block row sums for the partition
/// {H, V \ H}, with the exact equitability flag.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientMatrix {
    pub f: [[Rational64; 2]; 2],
    pub equitable: bool,
}

impl QuotientMatrix {
    /// Eigenvalues of the 2x2 matrix when rational; row sums and trace are
    /// exact, so for equitable switching partitions these are integers.
    pub fn eigenvalues(&self) -> Option<(Rational64, Rational64)> {
        let tr = self.f[0][0] + self.f[1][1];
        let det = self.f[0][0] * self.f[1][1] - self.f[0][1] * self.f[1][0];
        let disc = tr * tr - Rational64::from(4) * det;
        if disc < Rational64::from(0) {
            return None;
        }
        let num = isqrt_exact(*disc.numer())?;
        let den = isqrt_exact(*disc.denom())?;
        let root = Rational64::new(num, den);
        let two = Rational64::from(2);
        Some(((tr + root) / two, (tr - root) / two))
    }
}

fn isqrt_exact(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    if x < 2 {
        return Some(x);
    }
    let mut r = x;
    let mut next = (r + x / r) / 2;
    while next < r {
        r = next;
        next = (r + x / r) / 2;
    }
    (r * r == x).then_some(r)
}

/// Computes the quotient matrix for the partition {H, V \ H}; both parts
/// must be nonempty.
pub fn quotient_matrix(g: &Graph, set: &SwitchingSet) -> Result<QuotientMatrix> {
    if set.universe() != g.n() {
        return Err(Error::Parameter("switching set universe mismatch".into()));
    }
    let h = set.len();
    if h == 0 || h == g.n() {
        return Err(Error::Parameter(
            "quotient matrix needs both parts of the partition nonempty".into(),
        ));
    }
    let parts = [set.clone(), set.complement()];
    let mut f = [[Rational64::from(0); 2]; 2];
    let mut equitable = true;
    for (i, part) in parts.iter().enumerate() {
        let size = part.len() as i64;
        for (j, other) in parts.iter().enumerate() {
            let mut total = 0i64;
            let mut first: Option<usize> = None;
            for x in part.iter() {
                let d = g.degree_into(x, other.words());
                total += d as i64;
                match first {
                    None => first = Some(d),
                    Some(prev) if prev != d => equitable = false,
                    _ => {}
                }
            }
            f[i][j] = Rational64::new(total, size);
        }
    }
    Ok(QuotientMatrix { f, equitable })
}

/// A two-graph: the set of odd-edge triples of a graph, with its
/// regularity constant when every pair lies in a constant number of
/// triples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoGraph {
    pub n: usize,
    pub triples: Vec<[usize; 3]>,
    pub regular: Option<usize>,
}

/// Collects all 3-subsets whose induced subgraph has an odd number of
/// edges, and checks pair regularity exhaustively.
pub fn two_graph(g: &Graph) -> TwoGraph {
    let n = g.n();
    let mut triples = Vec::new();
    let mut pair_counts = vec![0usize; n * n];
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let e = g.has_edge(a, b) as usize
                    + g.has_edge(a, c) as usize
                    + g.has_edge(b, c) as usize;
                if e % 2 == 1 {
                    triples.push([a, b, c]);
                    pair_counts[a * n + b] += 1;
                    pair_counts[a * n + c] += 1;
                    pair_counts[b * n + c] += 1;
                }
            }
        }
    }
    let mut regular = None;
    if n >= 2 {
        let first = pair_counts[1];
        let constant = (0..n).all(|a| ((a + 1)..n).all(|b| pair_counts[a * n + b] == first));
        if constant {
            regular = Some(first);
        }
    }
    TwoGraph {
        n,
        triples,
        regular,
    }
}

/// Exact Seidel two-eigenvalue detection. Returns (rho1, rho2) with
/// rho1 > 0 > rho2 iff the graph verifies as a strongly regular graph with
/// integral spectrum and its Seidel matrix B has exactly two distinct
/// eigenvalues, certified by the integer identity (B - rho1 I)(B - rho2 I) = 0.
pub fn seidel_spectrum_check(g: &Graph) -> Option<(i64, i64)> {
    let params = verify_srg(g).params()?;
    let s = derive_spectrum(&params).ok()?;
    let v = params.v as i64;
    let k = params.k as i64;
    let mut candidates = vec![-1 - 2 * s.theta1, -1 - 2 * s.theta2, v - 1 - 2 * k];
    candidates.sort_unstable();
    candidates.dedup();
    if candidates.len() != 2 {
        return None;
    }
    let (rho2, rho1) = (candidates[0], candidates[1]);
    if !(rho1 > 0 && rho2 < 0) {
        return None;
    }
    let b = SeidelMatrix::from_graph(g);
    if b.annihilated_by(rho1, rho2) {
        debug_assert_eq!(rho1 * rho2, 1 - v);
        Some((rho1, rho2))
    } else {
        None
    }
}
