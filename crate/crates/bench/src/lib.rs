//! Fixed instances shared by the benchmarks.

/// `(lambda, mu, p)` triples, smallest first.
pub const HOM_INSTANCES: &[(&str, &str, u64)] = &[
    ("3,2,1", "4,2", 5),
    ("4,3,2", "6,3", 3),
    ("5,4,2", "6,3,2", 2),
    ("11,10,7,3,3", "14,10,7,3", 3),
];

/// `(tableau, p)` pairs for straightening.
pub const STRAIGHTEN_INSTANCES: &[(&str, u64)] = &[
    ("0,1,2;2,0,0", 3),
    ("1,2,1;2,1,0;1,0,1", 2),
    ("2,2,1,1;1,2,1,1;1,1,1,0", 5),
];
