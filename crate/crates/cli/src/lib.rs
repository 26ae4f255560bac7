//! Command-line front door: file formats, deterministic report rendering,
//! and the verb dispatcher used by the `sloop` binary.

pub mod commands;
pub mod formats;
pub mod report;

/// Which module operations each CLI verb exercises. Every public operation
/// of the algebra crates appears under exactly one verb; the coverage audit
/// in the test suite enforces this.
pub const VERB_OPERATIONS: &[(&str, &[&str])] = &[
    ("check", &["parse_table", "classify", "is_smarandache"]),
    ("sub", &["enumerate_substructures", "closure"]),
    ("aut", &["automorphism_group"]),
    ("saum", &["make_spair", "saum"]),
    ("ssym", &["ssym"]),
    ("autotop", &["autotopism_set", "s_autotopism_set"]),
    ("isotope", &["apply_isotopism"]),
    ("verify-iso", &["verify_isotopism", "verify_s_isotopism"]),
    ("iso", &["find_isomorphism", "find_s_isomorphism"]),
    (
        "holomorph",
        &[
            "build_holomorph",
            "build_smarandache_holomorph",
            "holomorph_s_pair",
        ],
    ),
    (
        "variety",
        &[
            "variety_profile",
            "holds_identity",
            "eval_term",
            "smarandache_variety_check",
            "inverse_elements",
        ],
    ),
    (
        "verify-t31",
        &[
            "verify_theorem_31",
            "check_pairing",
            "find_conjugator",
            "corollary_checks_31",
            "translation",
        ],
    ),
    ("verify-t32", &["verify_theorem_32", "special_triple"]),
];
