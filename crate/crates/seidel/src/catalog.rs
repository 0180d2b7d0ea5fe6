//! The known parameter sets with v = 2(k - theta1) at v <= 280, and the
//! constructible seed graphs used throughout the tests and the CLI.

use crate::error::Result;
use crate::families::{construct_named, Family};
use crate::graph::Graph;
use crate::srg::SrgParams;

/// Parameter tuples of known strongly regular graphs satisfying the
/// switching condition v = 2(k - theta1), for v <= 280.
pub const SWITCHABLE_PARAMETERS: [SrgParams; 32] = [
    SrgParams {
        v: 10,
        k: 6,
        lambda: 3,
        mu: 4,
    },
    SrgParams {
        v: 16,
        k: 10,
        lambda: 6,
        mu: 6,
    },
    SrgParams {
        v: 16,
        k: 9,
        lambda: 4,
        mu: 6,
    },
    SrgParams {
        v: 26,
        k: 15,
        lambda: 8,
        mu: 9,
    },
    SrgParams {
        v: 28,
        k: 15,
        lambda: 6,
        mu: 10,
    },
    SrgParams {
        v: 36,
        k: 21,
        lambda: 12,
        mu: 12,
    },
    SrgParams {
        v: 36,
        k: 20,
        lambda: 10,
        mu: 12,
    },
    SrgParams {
        v: 50,
        k: 28,
        lambda: 15,
        mu: 16,
    },
    SrgParams {
        v: 64,
        k: 36,
        lambda: 20,
        mu: 20,
    },
    SrgParams {
        v: 64,
        k: 35,
        lambda: 18,
        mu: 20,
    },
    SrgParams {
        v: 82,
        k: 45,
        lambda: 24,
        mu: 25,
    },
    SrgParams {
        v: 100,
        k: 55,
        lambda: 30,
        mu: 30,
    },
    SrgParams {
        v: 100,
        k: 54,
        lambda: 28,
        mu: 30,
    },
    SrgParams {
        v: 120,
        k: 68,
        lambda: 40,
        mu: 36,
    },
    SrgParams {
        v: 120,
        k: 63,
        lambda: 30,
        mu: 36,
    },
    SrgParams {
        v: 122,
        k: 66,
        lambda: 35,
        mu: 36,
    },
    SrgParams {
        v: 126,
        k: 75,
        lambda: 48,
        mu: 39,
    },
    SrgParams {
        v: 126,
        k: 65,
        lambda: 28,
        mu: 39,
    },
    SrgParams {
        v: 136,
        k: 75,
        lambda: 42,
        mu: 40,
    },
    SrgParams {
        v: 136,
        k: 72,
        lambda: 36,
        mu: 40,
    },
    SrgParams {
        v: 144,
        k: 78,
        lambda: 42,
        mu: 42,
    },
    SrgParams {
        v: 144,
        k: 77,
        lambda: 40,
        mu: 42,
    },
    SrgParams {
        v: 170,
        k: 91,
        lambda: 48,
        mu: 49,
    },
    SrgParams {
        v: 176,
        k: 105,
        lambda: 68,
        mu: 54,
    },
    SrgParams {
        v: 176,
        k: 90,
        lambda: 38,
        mu: 54,
    },
    SrgParams {
        v: 196,
        k: 104,
        lambda: 54,
        mu: 56,
    },
    SrgParams {
        v: 210,
        k: 110,
        lambda: 55,
        mu: 60,
    },
    SrgParams {
        v: 226,
        k: 120,
        lambda: 63,
        mu: 64,
    },
    SrgParams {
        v: 256,
        k: 136,
        lambda: 72,
        mu: 72,
    },
    SrgParams {
        v: 256,
        k: 135,
        lambda: 70,
        mu: 72,
    },
    SrgParams {
        v: 276,
        k: 140,
        lambda: 58,
        mu: 84,
    },
    SrgParams {
        v: 280,
        k: 144,
        lambda: 68,
        mu: 80,
    },
];

/// The switchable seed graphs this crate can construct directly. Each entry
/// is (display name, family, order).
pub const SEED_FAMILIES: [(&str, &str, usize); 3] = [
    ("T(5)", "triangular", 5),
    ("complement of Clebsch", "complement-of-clebsch", 16),
    ("complement of T(8)", "complement-of-triangular", 8),
];

/// Builds all constructible switchable seeds with their display names.
pub fn switchable_seeds() -> Result<Vec<(String, Graph)>> {
    SEED_FAMILIES
        .iter()
        .map(|(name, family, order)| {
            let f: Family = family.parse()?;
            Ok((name.to_string(), construct_named(&f, *order)?))
        })
        .collect()
}
