use paving_ehrhart::designs::{
    ehrhart_steiner, fano_plane, steiner_matroid, steiner_to_profile, validate_steiner, volume_steiner, SteinerSystem,
};
use paving_ehrhart::exactmath::{factorial, Rational};
use paving_ehrhart::oracle::{interpolate_matroid_ehrhart_with, OracleLimits};

fn limits() -> OracleLimits {
    OracleLimits {
        matroid_max_n: 9,
        matroid_max_t: 8,
        ..OracleLimits::default()
    }
}

/// Planes of AG(3,2): 4-subsets of F_2^3 summing to zero.
fn s348() -> SteinerSystem {
    let mut blocks = Vec::new();
    for a in 0..8usize {
        for b in a + 1..8 {
            for c in b + 1..8 {
                let d = a ^ b ^ c;
                if d > c {
                    blocks.push(vec![a + 1, b + 1, c + 1, d + 1]);
                }
            }
        }
    }
    SteinerSystem::with_blocks(3, 4, 8, &blocks).unwrap()
}

/// Lines of AG(2,3) on points (x, y) in F_3^2.
fn s239() -> SteinerSystem {
    let pt = |x: usize, y: usize| 3 * (x % 3) + (y % 3) + 1;
    let mut blocks = Vec::new();
    for c in 0..3 {
        blocks.push((0..3).map(|y| pt(c, y)).collect::<Vec<_>>());
    }
    for m in 0..3 {
        for c in 0..3 {
            blocks.push((0..3).map(|x| pt(x, m * x + c)).collect());
        }
    }
    SteinerSystem::with_blocks(2, 3, 9, &blocks).unwrap()
}

fn check_explicit(sys: &SteinerSystem) {
    assert!(validate_steiner(sys));
    let m = steiner_matroid(sys).unwrap();
    assert!(m.is_paving());
    assert_eq!(m.paving_profile().unwrap(), steiner_to_profile(sys).unwrap());
    let oracle = interpolate_matroid_ehrhart_with(&m, &limits()).unwrap();
    let closed = ehrhart_steiner(sys.t, sys.k, sys.n).unwrap();
    assert_eq!(oracle, closed, "S({},{},{})", sys.t, sys.k, sys.n);
    let vol = volume_steiner(sys.t, sys.k, sys.n).unwrap();
    assert_eq!(closed.leading_coeff() * Rational::from(factorial(sys.n - 1)), Rational::from(vol));
}

#[test]
fn fano_oracle_matches_closed_form() {
    check_explicit(&fano_plane());
}

#[test]
fn affine_space_s348_oracle_matches_closed_form() {
    let s = s348();
    assert_eq!(s.blocks.as_ref().unwrap().len(), 14);
    check_explicit(&s);
}

#[test]
fn affine_plane_s239_oracle_matches_closed_form() {
    let s = s239();
    assert_eq!(s.blocks.as_ref().unwrap().len(), 12);
    check_explicit(&s);
}
