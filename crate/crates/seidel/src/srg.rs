//! Strongly regular graph verification and closed-form spectral data.
//!
//! Verification is purely combinatorial: common neighbours are counted for
//! every vertex pair, never inferred spectrally. This module is the oracle
//! the switching and search layers are tested against, so it stays free of
//! floating point by construction (everything is integer or rational).

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The parameter tuple (v, k, lambda, mu) of a strongly regular graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub fn new(v: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { v, k, lambda, mu }
    }

    /// The standard counting identity k(k - lambda - 1) = (v - k - 1) mu.
    pub fn is_feasible(&self) -> bool {
        let (v, k, l, m) = (
            self.v as i64,
            self.k as i64,
            self.lambda as i64,
            self.mu as i64,
        );
        k * (k - l - 1) == (v - k - 1) * m
    }

    /// 0 < k < v - 1, the parameter-side primitivity requirement.
    pub fn is_primitive_range(&self) -> bool {
        self.k > 0 && self.k + 1 < self.v
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Outcome of exhaustive SRG verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SrgClass {
    NotRegular,
    CompleteOrEmpty,
    RegularNotSrg,
    ImprimitiveSrg(SrgParams),
    PrimitiveSrg(SrgParams),
}

impl SrgClass {
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            SrgClass::ImprimitiveSrg(p) | SrgClass::PrimitiveSrg(p) => Some(*p),
            _ => None,
        }
    }
}

/// Classifies a graph by exhaustive common-neighbour counting.
///
/// Total function: every graph lands in exactly one class. Primitivity
/// requires the graph and its complement both connected.
pub fn verify_srg(g: &Graph) -> SrgClass {
    let n = g.n();
    let k = match g.is_regular() {
        None => return SrgClass::NotRegular,
        Some(k) => k,
    };
    if k == 0 || k == n - 1 {
        return SrgClass::CompleteOrEmpty;
    }
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for u in 0..n {
        for v in (u + 1)..n {
            let c = g.common_neighbors(u, v);
            let slot = if g.has_edge(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return SrgClass::RegularNotSrg,
                _ => {}
            }
        }
    }
    // k-regular with 0 < k < n-1 on n >= 2 vertices: both an edge and a
    // non-edge exist, so both counts are populated.
    let params = SrgParams::new(n, k, lambda.unwrap(), mu.unwrap());
    debug_assert!(params.is_feasible());
    if g.is_connected() && g.complement().is_connected() {
        SrgClass::PrimitiveSrg(params)
    } else {
        SrgClass::ImprimitiveSrg(params)
    }
}

/// Integer eigenvalue data derived from an SRG parameter set.
///
/// `rho = 1 + 2*theta1` is the modulus of the most negative Seidel
/// eigenvalue; the `switchable` flag records v = 2(k - theta1).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SrgSpectrum {
    pub params: SrgParams,
    pub theta1: i64,
    pub theta2: i64,
    pub m1: usize,
    pub m2: usize,
    pub rho: i64,
    pub switchable: bool,
}

fn integer_sqrt(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    if x < 2 {
        return Some(x);
    }
    // Integer Newton iteration; no floating point anywhere in the crate.
    let mut r = x;
    let mut next = (r + x / r) / 2;
    while next < r {
        r = next;
        next = (r + x / r) / 2;
    }
    (r * r == x).then_some(r)
}

/// Derives theta1 > 0 > theta2, multiplicities, and the switching flag from
/// a feasible primitive parameter set. Conference-type parameter sets
/// (irrational eigenvalues) are rejected: they can never satisfy
/// v = 2(k - theta1) with integral theta1 = k - v/2.
pub fn derive_spectrum(p: &SrgParams) -> Result<SrgSpectrum> {
    if !p.is_feasible() {
        return Err(Error::Parameter(format!(
            "infeasible parameters {p}: k(k-lambda-1) != (v-k-1)mu"
        )));
    }
    if !p.is_primitive_range() {
        return Err(Error::Parameter(format!(
            "parameters {p} violate 0 < k < v-1"
        )));
    }
    let (v, k, l, m) = (p.v as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    let disc = (l - m) * (l - m) + 4 * (k - m);
    let root = integer_sqrt(disc)
        .ok_or_else(|| Error::UnsupportedSpectrum(form_irrational_msg(p, disc)))?;
    if (l - m + root) % 2 != 0 {
        return Err(Error::UnsupportedSpectrum(form_irrational_msg(p, disc)));
    }
    let theta1 = (l - m + root) / 2;
    let theta2 = (l - m - root) / 2;
    if theta1 <= 0 || theta2 >= 0 || theta1 >= k {
        return Err(Error::Parameter(format!(
            "parameters {p} do not describe a primitive SRG (eigenvalues {theta1}, {theta2})"
        )));
    }
    // Trace equations: m1 + m2 = v - 1, k + m1*theta1 + m2*theta2 = 0.
    let m1_num = -(v - 1) * theta2 - k;
    let den = theta1 - theta2;
    if m1_num % den != 0 {
        return Err(Error::Parameter(format!(
            "parameters {p} give non-integral multiplicities"
        )));
    }
    let m1 = m1_num / den;
    let m2 = (v - 1) - m1;
    if m1 <= 0 || m2 <= 0 {
        return Err(Error::Parameter(format!(
            "parameters {p} give non-positive multiplicities"
        )));
    }
    let switchable = v == 2 * (k - theta1);
    if switchable {
        debug_assert_eq!(theta1, k - v / 2);
        debug_assert_eq!(theta2, k - 2 * m);
    }
    Ok(SrgSpectrum {
        params: *p,
        theta1,
        theta2,
        m1: m1 as usize,
        m2: m2 as usize,
        rho: 1 + 2 * theta1,
        switchable,
    })
}

fn form_irrational_msg(p: &SrgParams, disc: i64) -> String {
    format!("parameters {p} have irrational eigenvalues (discriminant {disc} is not an even perfect square)")
}

/// First and second eigenmatrices of the two-class scheme of an SRG.
///
/// Row j of `p` is (p_0(j), p_1(j), p_2(j)); row j of `q` is
/// (q_0(j), q_1(j), q_2(j)). They satisfy P*Q = v*I exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Eigenmatrices {
    pub p: [[i64; 3]; 3],
    pub q: [[Rational64; 3]; 3],
}

/// Builds P from the closed-form rows and Q = v * P^{-1} in exact rationals.
pub fn eigenmatrices(s: &SrgSpectrum) -> Eigenmatrices {
    let v = s.params.v as i64;
    let k = s.params.k as i64;
    let p = [
        [1, k, v - 1 - k],
        [1, s.theta1, -1 - s.theta1],
        [1, s.theta2, -1 - s.theta2],
    ];
    let det: i64 = p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1])
        - p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0])
        + p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0]);
    debug_assert!(det != 0);
    let cof = |r: usize, c: usize| -> i64 {
        let rs: Vec<usize> = (0..3).filter(|&x| x != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&x| x != c).collect();
        let minor = p[rs[0]][cs[0]] * p[rs[1]][cs[1]] - p[rs[0]][cs[1]] * p[rs[1]][cs[0]];
        if (r + c).is_multiple_of(2) {
            minor
        } else {
            -minor
        }
    };
    let mut q = [[Rational64::zero(); 3]; 3];
    for (r, row) in q.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            // adj(P)[r][c] = cofactor(c, r); Q = v/det * adj(P).
            *cell = Rational64::new(v * cof(c, r), det);
        }
    }
    Eigenmatrices { p, q }
}
