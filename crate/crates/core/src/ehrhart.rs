//! Closed-form Ehrhart polynomials: hypersimplices, panhandle matroids,
//! stressed-hyperplane relaxations and paving matroids.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binom_affine_poly, binomial, factorial, Polynomial, Rational};
use crate::matroid::{PanhandleParams, PavingProfile};

fn sign(i: usize) -> BigInt {
    if i.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Σ_{j<r} (-1)^j C(n,j) C((r-j)t + n-1-j, n-1)`, the Ehrhart polynomial of
/// the hypersimplex `Δ_{r,n}`. For `r = 0` or `r = n` the polytope is a point.
pub fn ehrhart_hypersimplex(r: usize, n: usize) -> Result<Polynomial> {
    if r > n {
        return Err(Error::InvalidParameters(format!("hypersimplex needs r <= n, got r={r}, n={n}")));
    }
    if r == 0 || r == n {
        return Ok(Polynomial::one());
    }
    let (ri, ni) = (r as i64, n as i64);
    Ok((0..r)
        .map(|j| {
            let ji = j as i64;
            binom_affine_poly(ri - ji, ni - 1 - ji, n - 1).scale_int(&(sign(j) * binomial(ni, ji)))
        })
        .sum())
}

/// Number of `x ∈ [0,t]^s` with `Σ x_j = tr - m`.
pub fn count_box_solutions(t: u64, r: usize, m: u64, s: usize) -> BigInt {
    let target = t as i64 * r as i64 - m as i64;
    if s == 0 {
        return if target == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let (t, s_i) = (t as i64, s as i64);
    let mut total = BigInt::zero();
    for i in 0..=s {
        // i coordinates forced above t
        let rest = target - i as i64 * (t + 1);
        if rest < 0 {
            break;
        }
        total += sign(i) * binomial(s_i, i as i64) * binomial(rest + s_i - 1, s_i - 1);
    }
    total
}

fn panhandle_inner_sum(p: &PanhandleParams, t: u64, m: u64) -> BigInt {
    let (r, s, n) = (p.r as i64, p.s as i64, p.n as i64);
    let t = t as i64;
    let m = m as i64;
    let mut acc = BigInt::zero();
    for i in 0..=(s - r) {
        let top = t * (s - r - i) + m + s - 1 - i;
        acc += sign(i as usize) * binomial(s, i) * binomial(top, s - 1);
    }
    acc * binomial(m + n - s - 1, m)
}

/// `ehr_{Pan_{r,s,n}}(t)` by the double sum over `m ∈ [0, t]`.
pub fn panhandle_ehrhart_eval(p: &PanhandleParams, t: u64) -> BigInt {
    (0..=t).map(|m| panhandle_inner_sum(p, t, m)).sum()
}

/// The increment `ehr_{Rel_H(M)}(t) - ehr_M(t)` for a stressed hyperplane of
/// size `s`, by the double sum over `m ∈ [0, t-1]`.
pub fn relaxation_delta_eval(p: &PanhandleParams, t: u64) -> BigInt {
    (0..t).map(|m| panhandle_inner_sum(p, t, m)).sum()
}

/// Ehrhart polynomial of `Pan_{r,s,n}` from the `ℓ`-sum with the
/// `C(t+n-s, n-s) C(t, ℓ) (n-s)/(n-s+ℓ)` factors.
pub fn ehrhart_panhandle(p: &PanhandleParams) -> Polynomial {
    let (r, s, n) = (p.r as i64, p.s as i64, p.n as i64);
    let mut inner = Polynomial::zero();
    for l in 0..s {
        let mut by_i = Polynomial::zero();
        for i in 0..=(s - r) {
            let term = binom_affine_poly(s - r - i, s - 1 - i, (s - 1 - l) as usize);
            by_i += &term.scale_int(&(sign(i as usize) * binomial(s, i)));
        }
        let weight = Rational::new(BigInt::from(n - s), BigInt::from(n - s + l));
        inner += &(by_i * binom_affine_poly(1, 0, l as usize)).scale(&weight);
    }
    inner * binom_affine_poly(1, n - s, (n - s) as usize)
}

fn phi_general(p: &PanhandleParams, shift: i64) -> Polynomial {
    let (r, s, n) = (p.r as i64, p.s as i64, p.n as i64);
    let mut total = Polynomial::zero();
    for l in 0..s {
        let weight = factorial((n - 2 - l) as usize) * factorial(l as usize);
        let mut by_i = Polynomial::zero();
        for i in 0..=(s - r) {
            let a = binom_affine_poly(s - r - i + 1, s - 1 - l - i + shift, (s - 1 - l) as usize);
            let b = binom_affine_poly(s - r - i, s - 1 - i, l as usize);
            by_i += &(a * b).scale_int(&(sign(i as usize) * binomial(s, i)));
        }
        total += &by_i.scale_int(&weight);
    }
    total
}

/// `φ_{r,s,n}(t)`, so that `ehr_{Pan_{r,s,n}} = (n-s)/(n-1)! C(t+n-s, n-s) φ`.
pub fn phi(p: &PanhandleParams) -> Polynomial {
    phi_general(p, 0)
}

/// `φ̃_{r,s,n}(t)`: as `φ` with the constant of the first binomial lowered by one.
pub fn tilde_phi(p: &PanhandleParams) -> Polynomial {
    phi_general(p, -1)
}

fn prefactor(p: &PanhandleParams) -> Rational {
    Rational::new(BigInt::from(p.n - p.s), factorial(p.n - 1))
}

/// `ehr_{Pan_{r,s,n}}` through `φ`.
pub fn ehrhart_panhandle_via_phi(p: &PanhandleParams) -> Polynomial {
    (binom_affine_poly(1, (p.n - p.s) as i64, p.n - p.s) * phi(p)).scale(&prefactor(p))
}

/// `(n-s)/(n-1)! C(t-1+n-s, n-s) φ̃_{r,s,n}(t)`: what relaxing a stressed
/// hyperplane of size `s` adds to the Ehrhart polynomial.
pub fn relaxation_delta(p: &PanhandleParams) -> Polynomial {
    (binom_affine_poly(1, (p.n - p.s) as i64 - 1, p.n - p.s) * tilde_phi(p)).scale(&prefactor(p))
}

/// Ehrhart polynomial of `Rel_H(M)` given that of `M`, where `H` is a stressed
/// hyperplane of size `s` in a rank `r` matroid on `[n]`.
pub fn ehrhart_relaxation(ehr_m: &Polynomial, p: &PanhandleParams) -> Polynomial {
    ehr_m + &relaxation_delta(p)
}

/// Ehrhart polynomial of a paving matroid from its hyperplane profile.
pub fn ehrhart_paving(profile: &PavingProfile) -> Result<Polynomial> {
    let (r, n) = (profile.rank(), profile.ground_set_size());
    let mut ehr = ehrhart_hypersimplex(r, n)?;
    for (s, count) in profile.counts() {
        let p = PanhandleParams::new(r, s, n)?;
        ehr -= &relaxation_delta(&p).scale_int(&BigInt::from(count));
    }
    Ok(ehr)
}

/// Sparse paving matroid with `lambda` circuit-hyperplanes.
pub fn ehrhart_sparse_paving(r: usize, n: usize, lambda: u64) -> Result<Polynomial> {
    let mut profile = PavingProfile::empty(r, n)?;
    if lambda > 0 {
        profile.add(r, lambda)?;
    }
    ehrhart_paving(&profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rational;

    fn poly(cs: &[&str]) -> Polynomial {
        Polynomial::new(cs.iter().map(|c| parse_rational(c).unwrap()).collect())
    }

    fn fano_polynomial() -> Polynomial {
        let a = Polynomial::linear(1, 1) * Polynomial::linear(1, 2);
        let b = Polynomial::from_integers([180, 486, 553, 345, 116]);
        (a * b).scale(&Rational::new(1.into(), 360.into()))
    }

    #[test]
    fn hypersimplex_examples() {
        for n in 1..8 {
            let expect = binom_affine_poly(1, n as i64 - 1, n - 1);
            assert_eq!(ehrhart_hypersimplex(1, n).unwrap(), expect);
        }
        assert_eq!(ehrhart_hypersimplex(2, 4).unwrap().eval_int(1), Rational::from_integer(6.into()));
        let k37 = ehrhart_hypersimplex(3, 7).unwrap();
        assert_eq!(k37.leading_coeff(), Rational::new(302.into(), 720.into()));
        assert_eq!(k37.degree(), Some(6));
        assert_eq!(ehrhart_hypersimplex(0, 4).unwrap(), Polynomial::one());
        assert_eq!(ehrhart_hypersimplex(4, 4).unwrap(), Polynomial::one());
        assert!(ehrhart_hypersimplex(5, 4).is_err());
    }

    #[test]
    fn box_solutions_against_nested_loops() {
        fn brute(t: u64, r: usize, m: u64, s: usize) -> u64 {
            let target = (t * r as u64) as i64 - m as i64;
            let mut count = 0;
            let mut x = vec![0u64; s];
            loop {
                if x.iter().sum::<u64>() as i64 == target {
                    count += 1;
                }
                let mut j = 0;
                while j < s && x[j] == t {
                    x[j] = 0;
                    j += 1;
                }
                if j == s {
                    break;
                }
                x[j] += 1;
            }
            count
        }
        assert_eq!(count_box_solutions(2, 1, 0, 2), BigInt::from(3));
        assert_eq!(count_box_solutions(2, 3, 0, 2), BigInt::zero());
        for t in 0..=4 {
            for s in 1..=5 {
                for r in 0..=s {
                    for m in 0..=t {
                        assert_eq!(count_box_solutions(t, r, m, s), BigInt::from(brute(t, r, m, s)), "t={t} r={r} m={m} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn pan_2_2_4() {
        let p = PanhandleParams::new(2, 2, 4).unwrap();
        let e = ehrhart_panhandle(&p);
        assert_eq!(e, poly(&["1", "13/6", "3/2", "1/3"]));
        assert_eq!(e, ehrhart_panhandle_via_phi(&p));
        assert_eq!(panhandle_ehrhart_eval(&p, 1), BigInt::from(5));
        let ph = phi(&p);
        assert!(ph.has_positive_coefficients());
    }

    #[test]
    fn pan_2_3_5_values() {
        let p = PanhandleParams::new(2, 3, 5).unwrap();
        let vals: Vec<BigInt> = (0..5).map(|t| panhandle_ehrhart_eval(&p, t)).collect();
        assert_eq!(vals, [1, 9, 38, 110, 255].map(BigInt::from));
        let d: Vec<BigInt> = (0..5).map(|t| relaxation_delta_eval(&p, t)).collect();
        assert_eq!(d, [0, 3, 20, 70, 180].map(BigInt::from));
    }

    #[test]
    fn panhandle_forms_agree() {
        for p in PanhandleParams::all_up_to(9) {
            let e = ehrhart_panhandle(&p);
            assert_eq!(e, ehrhart_panhandle_via_phi(&p), "{p}");
            assert_eq!(e.degree(), Some(p.n - 1));
            assert_eq!(e.coeff(0), Rational::one());
            for t in 0..=p.n as u64 {
                assert_eq!(e.eval_int(t as i64), Rational::from_integer(panhandle_ehrhart_eval(&p, t)), "{p} t={t}");
            }
            let d = relaxation_delta(&p);
            for t in 0..=p.n as u64 {
                assert_eq!(d.eval_int(t as i64), Rational::from_integer(relaxation_delta_eval(&p, t)), "{p} t={t}");
            }
        }
    }

    #[test]
    fn rank_one_and_uniform_panhandles() {
        for n in 2..9 {
            for s in 1..n {
                let p = PanhandleParams::new(1, s, n).unwrap();
                assert_eq!(ehrhart_panhandle(&p), ehrhart_hypersimplex(1, n).unwrap());
            }
            for r in 1..n {
                let p = PanhandleParams::new(r, n - 1, n).unwrap();
                assert_eq!(ehrhart_panhandle(&p), ehrhart_hypersimplex(r, n).unwrap());
            }
        }
    }

    #[test]
    fn minimal_matroid_delta_is_shift() {
        for n in 2..9 {
            for r in 1..n {
                let p = PanhandleParams::new(r, r, n).unwrap();
                assert_eq!(relaxation_delta(&p), ehrhart_panhandle(&p).shift_down());
            }
        }
    }

    #[test]
    fn fano() {
        let profile = PavingProfile::new(3, 7, [(3, 7)]).unwrap();
        let f = ehrhart_paving(&profile).unwrap();
        assert_eq!(f, fano_polynomial());
        assert_eq!(ehrhart_sparse_paving(3, 7, 7).unwrap(), f);
        let p = PanhandleParams::new(3, 3, 7).unwrap();
        let mut back = f.clone();
        for _ in 0..7 {
            back = ehrhart_relaxation(&back, &p);
        }
        assert_eq!(back, ehrhart_hypersimplex(3, 7).unwrap());
        assert_eq!(f.eval_int(1), Rational::from_integer(28.into()));
    }

    #[test]
    fn sparse_paving_matches_minimal_shift() {
        for n in 3..9 {
            for r in 1..n {
                for lambda in 0..3u64 {
                    let p = PanhandleParams::new(r, r, n).unwrap();
                    let expect = ehrhart_hypersimplex(r, n).unwrap()
                        - ehrhart_panhandle(&p).shift_down().scale_int(&BigInt::from(lambda));
                    assert_eq!(ehrhart_sparse_paving(r, n, lambda).unwrap(), expect);
                }
            }
        }
        assert_eq!(ehrhart_sparse_paving(2, 4, 0).unwrap(), ehrhart_hypersimplex(2, 4).unwrap());
    }
}
