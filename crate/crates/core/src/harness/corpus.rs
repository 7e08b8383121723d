use super::GroupSpec;

/// The built-in corpus. Every group is listed with all primes dividing its
/// order; all orders are at most 2000 and all Sylow subgroups have order at
/// most 64.
pub fn builtin_corpus() -> Vec<GroupSpec> {
    vec![
        GroupSpec::new("C4", 4, &["(0 1 2 3)"], &[2]),
        GroupSpec::new("C8", 8, &["(0 1 2 3 4 5 6 7)"], &[2]),
        GroupSpec::new("C9", 9, &["(0 1 2 3 4 5 6 7 8)"], &[3]),
        GroupSpec::new("C5", 5, &["(0 1 2 3 4)"], &[5]),
        GroupSpec::new("V4", 4, &["(0 1)(2 3)", "(0 2)(1 3)"], &[2]),
        GroupSpec::new("C2^3", 6, &["(0 1)", "(2 3)", "(4 5)"], &[2]),
        GroupSpec::new("C3xC3", 6, &["(0 1 2)", "(3 4 5)"], &[3]),
        GroupSpec::new("D8", 4, &["(0 1 2 3)", "(0 2)"], &[2]),
        GroupSpec::new("D16", 8, &["(0 1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"], &[2]),
        GroupSpec::new(
            "D32",
            16,
            &["(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15)", "(1 15)(2 14)(3 13)(4 12)(5 11)(6 10)(7 9)"],
            &[2],
        ),
        GroupSpec::new("Q8", 8, &["(0 2 1 3)(4 6 5 7)", "(0 4 1 5)(2 7 3 6)"], &[2]),
        GroupSpec::new(
            "Q16",
            16,
            &["(0 1 2 3 4 5 6 7)(8 9 10 11 12 13 14 15)", "(0 8 4 12)(1 15 5 11)(2 14 6 10)(3 13 7 9)"],
            &[2],
        ),
        GroupSpec::new("C2xQ8", 10, &["(0 2 1 3)(4 6 5 7)", "(0 4 1 5)(2 7 3 6)", "(8 9)"], &[2]),
        GroupSpec::new("S3", 3, &["(0 1 2)", "(0 1)"], &[2, 3]),
        GroupSpec::new("S4", 4, &["(0 1 2 3)", "(0 1)"], &[2, 3]),
        GroupSpec::new("A4", 4, &["(0 1 2)", "(0 1)(2 3)"], &[2, 3]),
        GroupSpec::new("A5", 5, &["(0 1 2 3 4)", "(0 1 2)"], &[2, 3, 5]),
        GroupSpec::new("S5", 5, &["(0 1 2 3 4)", "(0 1)"], &[2, 3, 5]),
        GroupSpec::new("A6", 6, &["(0 1 2)", "(1 2 3 4 5)"], &[2, 3, 5]),
        GroupSpec::new("S6", 6, &["(0 1 2 3 4 5)", "(0 1)"], &[2, 3, 5]),
        GroupSpec::new("S3xS3", 6, &["(0 1 2)", "(0 1)", "(3 4 5)", "(3 4)"], &[2, 3]),
        GroupSpec::new("S4xS4", 8, &["(0 1 2 3)", "(0 1)", "(4 5 6 7)", "(4 5)"], &[2, 3]),
        GroupSpec::new("SL(2,3)", 8, &["(0 3 6)(1 7 4)", "(2 3 4)(5 7 6)"], &[2, 3]),
        GroupSpec::new("GL(2,3)", 8, &["(0 3 6)(1 7 4)", "(2 3 4)(5 7 6)", "(2 5)(3 6)(4 7)"], &[2, 3]),
        GroupSpec::new("C7:C3", 7, &["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"], &[3, 7]),
        GroupSpec::new("C3xS3", 6, &["(0 1 2)", "(3 4 5)", "(3 4)"], &[2, 3]),
        GroupSpec::new("F20", 5, &["(0 1 2 3 4)", "(1 2 4 3)"], &[2, 5]),
        GroupSpec::new("3^(1+2)", 9, &["(0 3 6)(1 4 7)(2 5 8)", "(0 1 2)(3 4 5)(6 7 8)", "(1 4 7)(2 8 5)"], &[3]),
        GroupSpec::new("ASL(2,3)", 9, &["(0 3 6)(1 4 7)(2 5 8)", "(1 4 7)(2 8 5)", "(3 4 5)(6 8 7)"], &[2, 3]),
        GroupSpec::new("PSL(2,7)", 8, &["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)", "(0 7)(1 6)(2 3)(4 5)"], &[2, 3, 7]),
        GroupSpec::new("PSL(2,8)", 9, &["(0 1)(2 3)(4 5)(6 7)", "(1 2 4 3 6 7 5)", "(0 8)(2 5)(3 6)(4 7)"], &[2, 3, 7]),
    ]
}
