use hypeig_core::selftest::{self, DEFAULT_SEED};

fn run(f: selftest::SuiteFn) {
    let out = f(DEFAULT_SEED);
    eprintln!("{}: {} cases, worst {:e} (tol {:e}) — {}", out.name, out.cases, out.worst, out.tolerance, out.note);
    assert!(out.passed(), "{out:?}");
}

#[test]
fn identity_sine() {
    run(selftest::identity_sine);
}

#[test]
fn identity_s_recursion() {
    run(selftest::identity_s_recursion);
}

#[test]
fn pfaff_consistency() {
    run(selftest::pfaff_consistency);
}

#[test]
fn derivative_vs_difference() {
    run(selftest::derivative_vs_difference);
}

#[test]
fn shooting_vs_closed_form() {
    run(selftest::shooting_vs_closed_form);
}

#[test]
fn t_form_consistency() {
    run(selftest::t_form_consistency);
}

#[test]
fn cross_oracle() {
    run(selftest::cross_oracle);
}

#[test]
fn oscillation_dichotomy() {
    run(selftest::oscillation_dichotomy);
}

#[test]
fn funk_shooting() {
    run(selftest::funk_shooting);
}

#[test]
fn transplant_monotonicity() {
    run(selftest::transplant_monotonicity);
}

#[test]
fn funk_geometry() {
    run(selftest::funk_geometry);
}

#[test]
fn tabulated_density() {
    run(selftest::tabulated_density);
}

#[test]
fn other_seeds() {
    for seed in [1, 2, 3] {
        for (name, f) in selftest::SUITES {
            let out = f(seed);
            assert!(out.passed(), "{name} seed {seed}: {out:?}");
        }
    }
}
