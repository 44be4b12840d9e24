//! Acceptance suite: one test per criterion, every comparison exact.
//!
//! Each test prints a `criterion N (...): PASS` line once its sweep
//! completes; run with `cargo test --test acceptance -- --nocapture`
//! to see them.

use std::process::Command;

use biring::error::{Error, SingularWitness};
use biring::field::{check_reducibility, det_ratio_quasidet, reducibility_counterexample};
use biring::matrix::{Matrix, ProductKind};
use biring::quasidet::{
    cr_inverse, cr_quasideterminant, quasidet_by_recursion, rc_inverse, rc_quasideterminant,
    InverseAlgorithm, QuasidetOutcome,
};
use biring::sample::{random_invertible_matrix, random_matrix, random_nonzero_scalar, rng};
use biring::scalar::{DivisionRing, Quaternion, Rational};

const ALL_ALGORITHMS: [InverseAlgorithm; 3] = [
    InverseAlgorithm::ViaQuasidet,
    InverseAlgorithm::Schur,
    InverseAlgorithm::Elimination,
];

fn outcomes_agree<S: DivisionRing>(
    left: &QuasidetOutcome<S>,
    right: &QuasidetOutcome<S>,
) -> bool {
    match (left, right) {
        (QuasidetOutcome::Value(x), QuasidetOutcome::Value(y)) => x == y,
        (QuasidetOutcome::Undefined(_), QuasidetOutcome::Undefined(_)) => true,
        _ => false,
    }
}

/// Criterion 1: over the rationals, every defined rc-quasideterminant
/// equals the signed determinant ratio (−1)^{r+c}·det(A)/det(minor),
/// with exact equality. 200 random matrices, sizes 2..=6.
#[test]
fn criterion_1_ratio_theorem_oracle() {
    let mut rng = rng(0xacc1);
    let mut matrices = 0;
    let mut cells = 0;
    for size in 2..=6usize {
        for _ in 0..40 {
            let a: Matrix<Rational> = random_matrix(&mut rng, size, size);
            matrices += 1;
            for r in 1..=size {
                for c in 1..=size {
                    let direct = rc_quasideterminant(&a, r, c).unwrap();
                    let ratio = det_ratio_quasidet(&a, r, c).unwrap();
                    assert!(
                        outcomes_agree(&direct, &ratio),
                        "size {size} cell ({r},{c}): direct {direct:?} vs ratio {ratio:?}"
                    );
                    if direct.is_defined() {
                        cells += 1;
                    }
                }
            }
        }
    }
    assert_eq!(matrices, 200);
    println!("criterion 1 (ratio-theorem oracle, {matrices} matrices, {cells} defined cells): PASS");
}

/// Criterion 2: the three inversion algorithms produce identical
/// inverses on 100 random invertible quaternion matrices per size
/// 1..=5, and every inverse is exactly two-sided.
///
/// Generation is serial and seeded; the per-matrix verification is pure
/// and fans out across threads.
#[test]
fn criterion_2_inverse_algorithm_agreement() {
    let mut rng = rng(0xacc2);
    let mut inputs: Vec<Matrix<Quaternion>> = Vec::new();
    for size in 1..=5usize {
        for _ in 0..100 {
            inputs.push(random_invertible_matrix(&mut rng, size));
        }
    }
    assert_eq!(inputs.len(), 500);

    let workers = std::thread::available_parallelism().map_or(1, usize::from);
    let chunk_size = inputs.len().div_ceil(workers);
    std::thread::scope(|scope| {
        for chunk in inputs.chunks(chunk_size) {
            scope.spawn(move || {
                for a in chunk {
                    let size = a.rows();
                    let delta = Matrix::<Quaternion>::kronecker_delta(size).unwrap();
                    let mut inverses = Vec::new();
                    for alg in ALL_ALGORITHMS {
                        let inverse = rc_inverse(a, alg)
                            .unwrap_or_else(|e| panic!("{alg:?} failed on invertible input: {e}"));
                        assert_eq!(a.rc_product(&inverse).unwrap(), delta, "{alg:?} right product");
                        assert_eq!(inverse.rc_product(a).unwrap(), delta, "{alg:?} left product");
                        inverses.push(inverse);
                    }
                    assert_eq!(inverses[0], inverses[1], "via-quasidet vs schur, size {size}");
                    assert_eq!(
                        inverses[0], inverses[2],
                        "via-quasidet vs elimination, size {size}"
                    );
                }
            });
        }
    });
    println!(
        "criterion 2 (inverse algorithm agreement, {} matrices x 3 algorithms): PASS",
        inputs.len()
    );
}

/// Criterion 3: biring axioms over the quaternions — transpose duality
/// of both products, the shared identity, double transpose, and ring
/// axioms for both products. 100 instances per identity per size 1..=5.
#[test]
fn criterion_3_biring_axiom_suite() {
    let mut rng = rng(0xacc3);
    let mut instances = 0;
    for size in 1..=5usize {
        let delta = Matrix::<Quaternion>::kronecker_delta(size).unwrap();
        for _ in 0..100 {
            let a: Matrix<Quaternion> = random_matrix(&mut rng, size, size);
            let b: Matrix<Quaternion> = random_matrix(&mut rng, size, size);
            let c: Matrix<Quaternion> = random_matrix(&mut rng, size, size);

            assert_eq!(
                a.rc_product(&b).unwrap().transpose(),
                a.transpose().cr_product(&b.transpose()).unwrap(),
                "rc transpose duality, size {size}"
            );
            assert_eq!(
                a.cr_product(&b).unwrap().transpose(),
                a.transpose().rc_product(&b.transpose()).unwrap(),
                "cr transpose duality, size {size}"
            );
            assert_eq!(a.transpose().transpose(), a, "double transpose");

            for kind in [ProductKind::Rc, ProductKind::Cr] {
                assert_eq!(delta.product(kind, &a).unwrap(), a, "{kind:?} left identity");
                assert_eq!(a.product(kind, &delta).unwrap(), a, "{kind:?} right identity");

                assert_eq!(
                    a.product(kind, &b).unwrap().product(kind, &c).unwrap(),
                    a.product(kind, &b.product(kind, &c).unwrap()).unwrap(),
                    "{kind:?} associativity, size {size}"
                );
                assert_eq!(
                    a.product(kind, &b.add(&c).unwrap()).unwrap(),
                    a.product(kind, &b)
                        .unwrap()
                        .add(&a.product(kind, &c).unwrap())
                        .unwrap(),
                    "{kind:?} left distributivity, size {size}"
                );
                assert_eq!(
                    b.add(&c).unwrap().product(kind, &a).unwrap(),
                    b.product(kind, &a)
                        .unwrap()
                        .add(&c.product(kind, &a).unwrap())
                        .unwrap(),
                    "{kind:?} right distributivity, size {size}"
                );
            }
            assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap(), "sum commutativity");
            instances += 1;
        }
    }
    assert_eq!(instances, 500);
    println!("criterion 3 (biring axiom suite, {instances} instances per identity): PASS");
}

/// Criterion 4: duality suite — power duality up to n = 4, transpose
/// inverse duality, and quasideterminant duality cell for cell.
#[test]
fn criterion_4_duality_suite() {
    let mut rng = rng(0xacc4);

    for size in 1..=4usize {
        for _ in 0..25 {
            let a: Matrix<Quaternion> = random_matrix(&mut rng, size, size);
            for exponent in 0..=4usize {
                assert_eq!(
                    a.transpose().power(ProductKind::Rc, exponent).unwrap(),
                    a.power(ProductKind::Cr, exponent).unwrap().transpose(),
                    "power duality, size {size}, n {exponent}"
                );
            }
        }
    }

    for size in 1..=4usize {
        for _ in 0..25 {
            let a: Matrix<Quaternion> = random_invertible_matrix(&mut rng, size);
            assert_eq!(
                cr_inverse(&a.transpose(), InverseAlgorithm::Elimination).unwrap(),
                rc_inverse(&a, InverseAlgorithm::Elimination).unwrap().transpose(),
                "transpose inverse duality, size {size}"
            );
        }
    }

    let mut cells = 0;
    for size in 1..=4usize {
        for _ in 0..10 {
            let a: Matrix<Quaternion> = random_matrix(&mut rng, size, size);
            let transposed = a.transpose();
            for r in 1..=size {
                for c in 1..=size {
                    let rc = rc_quasideterminant(&a, r, c).unwrap();
                    let cr = cr_quasideterminant(&transposed, c, r).unwrap();
                    assert!(
                        outcomes_agree(&rc, &cr),
                        "quasideterminant duality, size {size} cell ({r},{c})"
                    );
                    cells += 1;
                }
            }
        }
    }
    println!("criterion 4 (duality suite, powers to 4, inverses, {cells} quasideterminant cells): PASS");
}

/// Criterion 5: the scalar inversion laws (mA)⁻¹ = A⁻¹m⁻¹ and
/// (Am)⁻¹ = m⁻¹A⁻¹ on 50 random quaternion pairs, exact.
#[test]
fn criterion_5_scalar_laws() {
    let mut rng = rng(0xacc5);
    let mut pairs = 0;
    for size in 1..=4usize {
        let count = if size == 1 { 14 } else { 12 };
        for _ in 0..count {
            let m: Quaternion = random_nonzero_scalar(&mut rng);
            let a: Matrix<Quaternion> = random_invertible_matrix(&mut rng, size);
            let report = biring::quasidet::check_scalar_inverse_laws(&m, &a).unwrap();
            assert!(report.left_factor_law, "left-factor law, size {size}");
            assert!(report.right_factor_law, "right-factor law, size {size}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, 50);
    println!("criterion 5 (scalar inversion laws, {pairs} pairs): PASS");
}

/// Criterion 6: reducibility holds on 100 random rational pairs, fails
/// on the stored quaternion counterexample, and the rc- and cr-inverses
/// coincide on 50 random invertible rational matrices.
#[test]
fn criterion_6_reducibility_split() {
    let mut rng = rng(0xacc6);
    let mut pairs = 0;
    for size in 1..=5usize {
        for _ in 0..20 {
            let a: Matrix<Rational> = random_matrix(&mut rng, size, size);
            let b: Matrix<Rational> = random_matrix(&mut rng, size, size);
            assert!(
                check_reducibility(&a, &b).unwrap(),
                "reducibility over rationals, size {size}"
            );
            pairs += 1;
        }
    }
    assert_eq!(pairs, 100);

    let (qa, qb) = reducibility_counterexample();
    assert!(
        !check_reducibility(&qa, &qb).unwrap(),
        "stored quaternion counterexample must break reducibility"
    );

    let mut inverted = 0;
    for size in 1..=5usize {
        for _ in 0..10 {
            let a: Matrix<Rational> = random_invertible_matrix(&mut rng, size);
            assert_eq!(
                cr_inverse(&a, InverseAlgorithm::Elimination).unwrap(),
                rc_inverse(&a, InverseAlgorithm::Elimination).unwrap(),
                "inverse coincidence over rationals, size {size}"
            );
            inverted += 1;
        }
    }
    assert_eq!(inverted, 50);
    println!(
        "criterion 6 (reducibility split, {pairs} rational pairs, counterexample, {inverted} inverses): PASS"
    );
}

/// Criterion 7: the definitional recursion agrees with the direct
/// quasideterminant on every cell of 50 random 3x3 and 20 random 4x4
/// quaternion matrices wherever both are defined.
#[test]
fn criterion_7_definitional_recursion_oracle() {
    let mut rng = rng(0xacc7);
    let mut compared = 0;
    for (size, count) in [(3usize, 50usize), (4, 20)] {
        for _ in 0..count {
            let a: Matrix<Quaternion> = random_matrix(&mut rng, size, size);
            for r in 1..=size {
                for c in 1..=size {
                    let direct = rc_quasideterminant(&a, r, c).unwrap();
                    let recursive = quasidet_by_recursion(&a, r, c).unwrap();
                    if let (QuasidetOutcome::Value(x), QuasidetOutcome::Value(y)) =
                        (&direct, &recursive)
                    {
                        assert_eq!(x, y, "size {size} cell ({r},{c})");
                        compared += 1;
                    }
                }
            }
        }
    }
    assert!(compared > 0, "the sweep must compare at least one defined cell");
    println!("criterion 7 (definitional recursion oracle, {compared} defined cells): PASS");
}

/// Criterion 8: degenerate inputs — the all-ones matrix has
/// quasideterminant zero everywhere and defeats every inversion
/// algorithm, the identity's off-diagonal quasideterminants are
/// undefined, and the CLI follows the exit-code contract.
#[test]
fn criterion_8_degenerate_handling() {
    let ones = Matrix::from_rows(vec![
        vec![Rational::one(), Rational::one()],
        vec![Rational::one(), Rational::one()],
    ])
    .unwrap();
    for r in 1..=2 {
        for c in 1..=2 {
            assert_eq!(
                rc_quasideterminant(&ones, r, c).unwrap(),
                QuasidetOutcome::Value(Rational::zero()),
                "all-ones cell ({r},{c})"
            );
        }
    }
    for alg in ALL_ALGORITHMS {
        assert!(
            matches!(rc_inverse(&ones, alg), Err(Error::NotInvertible { .. })),
            "{alg:?} must reject the all-ones matrix"
        );
    }
    match rc_inverse(&ones, InverseAlgorithm::ViaQuasidet) {
        Err(Error::NotInvertible {
            witness: SingularWitness::ZeroQuasidet { .. },
        }) => {}
        other => panic!("expected a zero-quasideterminant witness, got {other:?}"),
    }

    let delta = Matrix::<Rational>::kronecker_delta(2).unwrap();
    for (r, c) in [(1, 2), (2, 1)] {
        match rc_quasideterminant(&delta, r, c).unwrap() {
            QuasidetOutcome::Undefined(u) => assert_eq!(u.position, (r, c)),
            QuasidetOutcome::Value(v) => {
                panic!("identity quasideterminant ({r},{c}) should be undefined, got {v}")
            }
        }
    }

    check_cli_exit_codes();
    println!("criterion 8 (degenerate handling and CLI exit codes): PASS");
}

fn check_cli_exit_codes() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = |name: &str| dir.path().join(name);
    let write = |name: &str, contents: &str| {
        std::fs::write(path(name), contents).expect("write fixture");
    };

    write(
        "a.json",
        r#"{"ring":"rational","rows":2,"cols":2,"data":[["1","2"],["3","4"]]}"#,
    );
    write(
        "ones.json",
        r#"{"ring":"rational","rows":2,"cols":2,"data":[["1","1"],["1","1"]]}"#,
    );
    write(
        "delta.json",
        r#"{"ring":"rational","rows":2,"cols":2,"data":[["1","0"],["0","1"]]}"#,
    );
    write("broken.json", r#"{"ring":"rational","data":[["1","x"]]}"#);

    let bin = env!("CARGO_BIN_EXE_biring");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .expect("spawn biring binary")
    };

    let ok = run(&[
        "quasidet",
        "--kind",
        "rc",
        "--row",
        "1",
        "--col",
        "1",
        path("a.json").to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0), "defined quasideterminant exits 0");
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout).trim(),
        "-1/2",
        "quasideterminant value on stdout"
    );

    let product = run(&[
        "product",
        "--kind",
        "rc",
        path("a.json").to_str().unwrap(),
        path("delta.json").to_str().unwrap(),
    ]);
    assert_eq!(product.status.code(), Some(0), "product exits 0");

    for alg in ["quasidet", "schur", "elim"] {
        let not_invertible = run(&[
            "inverse",
            "--kind",
            "rc",
            "--alg",
            alg,
            path("ones.json").to_str().unwrap(),
        ]);
        assert_eq!(
            not_invertible.status.code(),
            Some(2),
            "singular input exits 2 under --alg {alg}"
        );
    }

    let undefined = run(&[
        "quasidet",
        "--kind",
        "rc",
        "--row",
        "1",
        "--col",
        "2",
        path("delta.json").to_str().unwrap(),
    ]);
    assert_eq!(
        undefined.status.code(),
        Some(2),
        "undefined quasideterminant exits 2"
    );

    let parse_error = run(&["det", path("broken.json").to_str().unwrap()]);
    assert_eq!(parse_error.status.code(), Some(1), "parse error exits 1");

    let usage_error = run(&["no-such-command"]);
    assert_eq!(usage_error.status.code(), Some(1), "unknown command exits 1");
}
