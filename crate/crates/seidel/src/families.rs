//! Named graph constructors: triangular, lattice, Paley, Clebsch, and
//! complements thereof.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named graph family selectable on the command line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    /// T(n): 2-subsets of an n-set, adjacent iff the subsets intersect.
    Triangular,
    /// L2(n): the n x n rook's graph.
    Lattice,
    /// Paley graph on a prime q = 1 (mod 4): residues, adjacent iff the
    /// difference is a nonzero square.
    Paley,
    /// The Clebsch graph on {0,1}^4, adjacency at Hamming distance 1 or 4.
    Clebsch,
    /// Complement of another named family.
    ComplementOf(Box<Family>),
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangular" => Ok(Family::Triangular),
            "lattice" => Ok(Family::Lattice),
            "paley" => Ok(Family::Paley),
            "clebsch" => Ok(Family::Clebsch),
            _ => match s.strip_prefix("complement-of-") {
                Some(rest) => Ok(Family::ComplementOf(Box::new(rest.parse()?))),
                None => Err(Error::Parameter(format!(
                    "unknown family '{s}'; expected triangular, lattice, paley, clebsch, or complement-of-<family>"
                ))),
            },
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Triangular => write!(f, "triangular"),
            Family::Lattice => write!(f, "lattice"),
            Family::Paley => write!(f, "paley"),
            Family::Clebsch => write!(f, "clebsch"),
            Family::ComplementOf(inner) => write!(f, "complement-of-{inner}"),
        }
    }
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Constructs the standard graph of a family at the given order.
pub fn construct_named(family: &Family, order: usize) -> Result<Graph> {
    match family {
        Family::Triangular => {
            if order < 4 {
                return Err(Error::Parameter(format!(
                    "triangular graphs need order >= 4, got {order}"
                )));
            }
            let pairs: Vec<(usize, usize)> = (0..order)
                .flat_map(|a| ((a + 1)..order).map(move |b| (a, b)))
                .collect();
            Graph::from_fn(pairs.len(), |i, j| {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                a == c || a == d || b == c || b == d
            })
        }
        Family::Lattice => {
            if order < 2 {
                return Err(Error::Parameter(format!(
                    "lattice graphs need order >= 2, got {order}"
                )));
            }
            Graph::from_fn(order * order, |i, j| {
                i / order == j / order || i % order == j % order
            })
        }
        Family::Paley => {
            if !is_prime(order) || order % 4 != 1 {
                return Err(Error::Parameter(format!(
                    "Paley graphs need a prime order congruent to 1 mod 4, got {order}"
                )));
            }
            let mut is_square = vec![false; order];
            for x in 1..order {
                is_square[x * x % order] = true;
            }
            Graph::from_fn(order, |i, j| {
                let d = (i + order - j) % order;
                is_square[d]
            })
        }
        Family::Clebsch => {
            if order != 16 {
                return Err(Error::Parameter(format!(
                    "the Clebsch graph is fixed at order 16, got {order}"
                )));
            }
            Graph::from_fn(16, |i, j| {
                let dist = (i ^ j).count_ones();
                dist == 1 || dist == 4
            })
        }
        Family::ComplementOf(inner) => Ok(construct_named(inner, order)?.complement()),
    }
}

/// Index of the 2-subset {a, b} in the lexicographic vertex order used by
/// the triangular constructor.
pub fn pair_index(order: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < order);
    // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    a * order - a * (a + 1) / 2 + (b - a - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srg::{verify_srg, SrgClass, SrgParams};

    #[test]
    fn triangular_8_parameters() {
        let g = construct_named(&Family::Triangular, 8).unwrap();
        assert_eq!(
            verify_srg(&g),
            SrgClass::PrimitiveSrg(SrgParams::new(28, 12, 6, 4))
        );
    }

    #[test]
    fn paley_5_is_the_pentagon() {
        let g = construct_named(&Family::Paley, 5).unwrap();
        assert_eq!(
            verify_srg(&g),
            SrgClass::PrimitiveSrg(SrgParams::new(5, 2, 0, 1))
        );
        // Squares mod 5 are {1, 4}, so i ~ i+1 and i ~ i+4: the 5-cycle.
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g, c5);
    }

    #[test]
    fn paley_13() {
        let g = construct_named(&Family::Paley, 13).unwrap();
        assert_eq!(
            verify_srg(&g),
            SrgClass::PrimitiveSrg(SrgParams::new(13, 6, 2, 3))
        );
    }

    #[test]
    fn clebsch_and_complement() {
        let g = construct_named(&Family::Clebsch, 16).unwrap();
        assert_eq!(
            verify_srg(&g),
            SrgClass::PrimitiveSrg(SrgParams::new(16, 5, 0, 2))
        );
        let fam: Family = "complement-of-clebsch".parse().unwrap();
        let gc = construct_named(&fam, 16).unwrap();
        assert_eq!(
            verify_srg(&gc),
            SrgClass::PrimitiveSrg(SrgParams::new(16, 10, 6, 6))
        );
    }

    #[test]
    fn lattice_4() {
        let g = construct_named(&Family::Lattice, 4).unwrap();
        assert_eq!(
            verify_srg(&g),
            SrgClass::PrimitiveSrg(SrgParams::new(16, 6, 2, 2))
        );
    }

    #[test]
    fn invalid_orders_name_the_constraint() {
        for (family, order) in [
            (Family::Triangular, 3),
            (Family::Lattice, 1),
            (Family::Paley, 9), // prime power, not prime
            (Family::Paley, 7), // 3 mod 4
            (Family::Clebsch, 10),
        ] {
            match construct_named(&family, order) {
                Err(Error::Parameter(_)) => {}
                other => panic!("{family} {order}: expected parameter error, got {other:?}"),
            }
        }
    }

    #[test]
    fn family_round_trips_through_strings() {
        for name in [
            "triangular",
            "paley",
            "complement-of-triangular",
            "complement-of-complement-of-lattice",
        ] {
            let f: Family = name.parse().unwrap();
            assert_eq!(f.to_string(), name);
        }
        assert!("petersen".parse::<Family>().is_err());
    }

    #[test]
    fn pair_index_is_lexicographic() {
        assert_eq!(pair_index(5, 0, 1), 0);
        assert_eq!(pair_index(5, 0, 4), 3);
        assert_eq!(pair_index(5, 1, 2), 4);
        assert_eq!(pair_index(5, 3, 4), 9);
    }
}
