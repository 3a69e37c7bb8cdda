//! Positivity laboratory: the `ψ`, `ζ`, `ξ` families, the `P` polynomials,
//! chain gangs, weighted Lah numbers and exhaustive verification sweeps.

mod chain_gang;
mod lah;
mod report;

pub use chain_gang::{enumerate_chain_gangs, for_each_chain_gang, ChainGang, ChainGangCounts, MAX_CHAIN_GANG_N};
pub use lah::{chain_gang_from_weighted_permutation, eta, eta_elm_form, weighted_lah_w, WeightedPermutation};
pub use report::{Counterexample, VerificationReport};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde_json::json;

use crate::ehrhart::{phi, tilde_phi};
use crate::error::{Error, Result};
use crate::exactmath::{binom_affine_poly, binomial, elm, eulerian, factorial, Polynomial, Rational};
use crate::matroid::PanhandleParams;
use crate::par::Strategy;

fn sign(i: i64) -> BigInt {
    if i.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn pow(base: i64, e: i64) -> BigInt {
    // 0^0 = 1
    BigInt::from(base).pow(e as u32)
}

fn check_psi(s: usize, r: usize, l: usize) -> Result<()> {
    if r > s || l >= s {
        return Err(Error::InvalidParameters(format!(
            "ψ needs r <= s and 0 <= ℓ <= s-1, got s={s}, r={r}, ℓ={l}"
        )));
    }
    Ok(())
}

fn psi_general(s: usize, r: usize, l: usize, shift: i64) -> Result<Polynomial> {
    check_psi(s, r, l)?;
    let (s, r, l) = (s as i64, r as i64, l as i64);
    let mut total = Polynomial::zero();
    for i in 0..=(s - r) {
        let a = binom_affine_poly(s - r - i + 1, s - 1 - l - i + shift, (s - 1 - l) as usize);
        let b = binom_affine_poly(s - r - i, s - 1 - i, l as usize);
        total += &(a * b).scale_int(&(sign(i) * binomial(s, i)));
    }
    Ok(total)
}

/// `ψ_{s,r,ℓ}(t)`, the `ℓ`-th inner sum of `φ`.
pub fn psi(s: usize, r: usize, l: usize) -> Result<Polynomial> {
    psi_general(s, r, l, 0)
}

/// `ψ̃_{s,r,ℓ}(t)`, the `ℓ`-th inner sum of `φ̃`.
pub fn tilde_psi(s: usize, r: usize, l: usize) -> Result<Polynomial> {
    psi_general(s, r, l, -1)
}

fn zeta_general(r: i64, s: i64, k: i64, l: i64, m: i64, tilde: bool) -> BigInt {
    let mut total = BigInt::zero();
    for i in 0..=(s - r) {
        let first = if tilde {
            elm(s - 1 - l - m, -i, s - 2 - l - i)
        } else {
            elm(s - 1 - l - m, -i + 1, s - 1 - l - i)
        };
        if first.is_zero() {
            continue;
        }
        let second = elm(l - k + m, s - l - i, s - 1 - i);
        total += sign(i) * binomial(s, i) * pow(s - r - i + 1, m) * pow(s - r - i, k - m) * first * second;
    }
    total
}

fn check_zeta(r: usize, s: usize, k: usize, l: usize, m: usize) -> Result<()> {
    if r > s || l >= s || k >= s || m > k {
        return Err(Error::InvalidParameters(format!(
            "ζ needs r <= s, ℓ,k <= s-1, m <= k; got r={r}, s={s}, k={k}, ℓ={l}, m={m}"
        )));
    }
    Ok(())
}

/// `ζ(r,s,k,ℓ,m)`: `(s-1-ℓ)! ℓ! ψ_{s,r,ℓ}(t) = Σ_k t^k Σ_m ζ(r,s,k,ℓ,m)`.
pub fn zeta(r: usize, s: usize, k: usize, l: usize, m: usize) -> Result<BigInt> {
    check_zeta(r, s, k, l, m)?;
    Ok(zeta_general(r as i64, s as i64, k as i64, l as i64, m as i64, false))
}

pub fn tilde_zeta(r: usize, s: usize, k: usize, l: usize, m: usize) -> Result<BigInt> {
    check_zeta(r, s, k, l, m)?;
    Ok(zeta_general(r as i64, s as i64, k as i64, l as i64, m as i64, true))
}

/// Rebuilds `ψ` (or `ψ̃`) from its `ζ` expansion.
pub fn psi_from_zeta(s: usize, r: usize, l: usize, tilde: bool) -> Result<Polynomial> {
    check_psi(s, r, l)?;
    let mut coeffs = Vec::with_capacity(s);
    for k in 0..s {
        let c: BigInt = (0..=k)
            .map(|m| zeta_general(r as i64, s as i64, k as i64, l as i64, m as i64, tilde))
            .sum();
        coeffs.push(Rational::from_integer(c));
    }
    let norm = factorial(s - 1 - l) * factorial(l);
    Ok(Polynomial::new(coeffs).scale(&Rational::new(BigInt::one(), norm)))
}

/// The numerator `P` with `Σ_{n>=0} n^{k-m} (n+1)^m x^n = P(x)/(1-x)^{k+1}`,
/// as a polynomial in `x`. It depends only on `k` and `m`.
pub fn p_poly(k: usize, m: usize) -> Result<Polynomial> {
    if m > k {
        return Err(Error::InvalidParameters(format!("P needs m <= k, got k={k}, m={m}")));
    }
    let (k, m) = (k as i64, m as i64);
    let mut coeffs = vec![BigInt::zero(); k as usize + 1];
    for a in 0..=(k - m - 1).max(0) {
        let ea = eulerian((k - m) as usize, a);
        if ea.is_zero() {
            continue;
        }
        for b in 0..=(m - 1).max(0) {
            let eb = eulerian(m as usize, b);
            if eb.is_zero() {
                continue;
            }
            for c in 0..=m {
                let exp = k - a - c;
                debug_assert!(exp >= 0);
                coeffs[exp as usize] +=
                    &ea * &eb * binomial(k - m + 1 + b - a, c) * binomial(m + a - b - 1, m - c);
            }
        }
    }
    Ok(Polynomial::from_integers(coeffs))
}

fn xi_general(q: i64, s: i64, k: i64, l: i64, m: i64, tilde: bool) -> BigInt {
    let mut total = BigInt::zero();
    for i in 0..=q {
        let first = if tilde {
            elm(s - 1 - l - m, -i, s - 2 - l - i)
        } else {
            elm(s - 1 - l - m, -i + 1, s - 1 - l - i)
        };
        if first.is_zero() {
            continue;
        }
        let second = elm(l - k + m, s - l - i, s - 1 - i);
        total += sign(i) * binomial(s, i) * first * second * binomial(k + q - i, k);
    }
    total
}

/// Coefficient of `x^q` in `F_{s,k,ℓ,m}(x) / (1-x)^{k+1}`. Arguments are
/// signed so that the reindexed boundary `k-1 = -1` stays expressible.
pub fn xi(q: i64, s: i64, k: i64, l: i64, m: i64) -> BigInt {
    xi_general(q, s, k, l, m, false)
}

pub fn tilde_xi(q: i64, s: i64, k: i64, l: i64, m: i64) -> BigInt {
    xi_general(q, s, k, l, m, true)
}

/// `ξ̄(q,s,k,ℓ,m) = ξ(q,s,k-1,ℓ,m-1)`.
pub fn bar_xi(q: i64, s: i64, k: i64, l: i64, m: i64) -> BigInt {
    xi(q, s, k - 1, l, m - 1)
}

/// Symbolic check of the generating-function identity
/// `Σ_ℓ C(t(s-r-i)+s-1-i, s-1-ℓ) C(u,ℓ)/(n-s+ℓ)
///   = 1/(n-1)! Σ_ℓ (n-2-ℓ)! ℓ! C(t(s-r-i)+u+s-1-ℓ-i, s-1-ℓ) C(t(s-r-i)+s-1-i, ℓ)`.
pub fn verify_genfunc_identity(r: usize, s: usize, n: usize, u: usize, i: usize) -> Result<bool> {
    PanhandleParams::new(r, s, n)?;
    if i > s - r {
        return Err(Error::InvalidParameters(format!("need i <= s-r, got i={i}, s-r={}", s - r)));
    }
    let (r, s, n, u, i) = (r as i64, s as i64, n as i64, u as i64, i as i64);
    let a = s - r - i;
    let mut lhs = Polynomial::zero();
    let mut rhs = Polynomial::zero();
    for l in 0..s {
        let w = Rational::new(binomial(u, l), BigInt::from(n - s + l));
        lhs += &binom_affine_poly(a, s - 1 - i, (s - 1 - l) as usize).scale(&w);
        let f = factorial((n - 2 - l) as usize) * factorial(l as usize);
        let term = binom_affine_poly(a, u + s - 1 - l - i, (s - 1 - l) as usize) * binom_affine_poly(a, s - 1 - i, l as usize);
        rhs += &term.scale_int(&f);
    }
    let rhs = rhs.scale(&Rational::new(BigInt::one(), factorial((n - 1) as usize)));
    Ok(lhs == rhs)
}

type XiFormula<'a> = &'a (dyn Fn(i64, i64, i64, i64, i64) -> BigInt + Sync);

/// `ξ̄(q,s,k,ℓ,m) = |CG(q,s,k,ℓ,m)|` for `1 <= s <= max_s`, `0 <= q <= s`,
/// `1 <= k <= s`, `0 <= ℓ <= s-1`, `1 <= m <= k`.
pub fn verify_big_conjecture(max_s: usize, strategy: Strategy) -> Result<VerificationReport> {
    verify_big_conjecture_with(max_s, &bar_xi, strategy)
}

/// As [`verify_big_conjecture`], with the closed form supplied by the caller.
pub fn verify_big_conjecture_with(max_s: usize, formula: XiFormula<'_>, strategy: Strategy) -> Result<VerificationReport> {
    if max_s > MAX_CHAIN_GANG_N {
        return Err(Error::GuardExceeded(format!(
            "chain gang counts limited to s <= {MAX_CHAIN_GANG_N}, got {max_s}"
        )));
    }
    let mut report = VerificationReport::new("bar_xi(q,s,k,l,m) = |CG(q,s,k,l,m)|", json!({"s": [1, max_s], "q": "[0, s]", "k": "[1, s]", "l": "[0, s-1]", "m": "[1, k]"}));
    for s in 1..=max_s {
        let counts = ChainGangCounts::tabulate(s)?;
        let mut tuples = Vec::new();
        for q in 0..=s {
            for k in 1..=s {
                for l in 0..s {
                    for m in 1..=k {
                        tuples.push((q, k, l, m));
                    }
                }
            }
        }
        let results = strategy.map(&tuples, |&(q, k, l, m)| {
            let closed = formula(q as i64, s as i64, k as i64, l as i64, m as i64);
            let count = BigInt::from(counts.with_gamma(q, k, l, m));
            (closed != count).then(|| {
                Counterexample::new(&[("q", q as i64), ("s", s as i64), ("k", k as i64), ("l", l as i64), ("m", m as i64)])
                    .detail("bar_xi", closed.to_string())
                    .detail("chain_gangs", count.to_string())
            })
        });
        report.absorb(tuples.len(), results);
    }
    Ok(report)
}

fn positivity_sweep(
    name: &str,
    max_s: usize,
    max_extra: usize,
    poly: fn(&PanhandleParams) -> Polynomial,
    strategy: Strategy,
) -> VerificationReport {
    let mut report = VerificationReport::new(name, json!({"s": [1, max_s], "r": "[1, s]", "n": format!("[s+1, s+{max_extra}]")}));
    let mut params = Vec::new();
    for s in 1..=max_s {
        for r in 1..=s {
            for n in s + 1..=s + max_extra {
                params.push(PanhandleParams { r, s, n });
            }
        }
    }
    let results = strategy.map(&params, |p| {
        let f = poly(p);
        (!f.has_positive_coefficients()).then(|| {
            Counterexample::new(&[("r", p.r as i64), ("s", p.s as i64), ("n", p.n as i64)]).detail("polynomial", f.to_string())
        })
    });
    report.absorb(params.len(), results);
    report
}

/// All coefficients of `φ_{r,s,n}` positive for `r <= s <= max_s`, `s < n <= s + max_extra`.
pub fn verify_phi_positive(max_s: usize, max_extra: usize, strategy: Strategy) -> VerificationReport {
    positivity_sweep("phi_{r,s,n} has positive coefficients", max_s, max_extra, phi, strategy)
}

pub fn verify_tilde_phi_positive(max_s: usize, max_extra: usize, strategy: Strategy) -> VerificationReport {
    positivity_sweep("tilde_phi_{r,s,n} has positive coefficients", max_s, max_extra, tilde_phi, strategy)
}

/// The generating-function identity over `s <= max_s`, `s < n <= s + max_extra`,
/// `u <= max_u` and every admissible `r`, `i`.
pub fn verify_genfunc(max_s: usize, max_extra: usize, max_u: usize, strategy: Strategy) -> VerificationReport {
    let mut report = VerificationReport::new(
        "generating-function identity for the phi rewrite",
        json!({"s": [1, max_s], "n": format!("[s+1, s+{max_extra}]"), "u": [0, max_u], "r": "[1, s]", "i": "[0, s-r]"}),
    );
    let mut tuples = Vec::new();
    for s in 1..=max_s {
        for n in s + 1..=s + max_extra {
            for r in 1..=s {
                for u in 0..=max_u {
                    for i in 0..=s - r {
                        tuples.push((r, s, n, u, i));
                    }
                }
            }
        }
    }
    let results = strategy.map(&tuples, |&(r, s, n, u, i)| {
        let ok = verify_genfunc_identity(r, s, n, u, i).unwrap_or(false);
        (!ok).then(|| Counterexample::new(&[("r", r as i64), ("s", s as i64), ("n", n as i64), ("u", u as i64), ("i", i as i64)]))
    });
    report.absorb(tuples.len(), results);
    report
}

/// `W = η = η_elm` for `1 <= k <= n <= max_n` and `0 <= q <= n + 2`
/// (every chain gang on `[n]` with `k` blocks has weight at most `n - k`).
pub fn verify_weighted_lah(max_n: usize, strategy: Strategy) -> Result<VerificationReport> {
    if max_n > MAX_CHAIN_GANG_N {
        return Err(Error::GuardExceeded(format!(
            "chain gang counts limited to n <= {MAX_CHAIN_GANG_N}, got {max_n}"
        )));
    }
    let mut report = VerificationReport::new("W(q,n,k) = eta(q,n,k) = eta_elm(q,n,k)", json!({"n": [1, max_n], "k": "[1, n]", "q": "[0, n+2]"}));
    for n in 1..=max_n {
        let counts = ChainGangCounts::tabulate(n)?;
        let tuples: Vec<(usize, usize)> = (1..=n).flat_map(|k| (0..=n + 2).map(move |q| (q, k))).collect();
        let results = strategy.map(&tuples, |&(q, k)| {
            let w = BigInt::from(counts.weighted_lah(q, k));
            let (e1, e2) = (eta(q, n, k), eta_elm_form(q, n, k));
            (w != e1 || w != e2).then(|| {
                Counterexample::new(&[("q", q as i64), ("n", n as i64), ("k", k as i64)])
                    .detail("W", w.to_string())
                    .detail("eta", e1.to_string())
                    .detail("eta_elm", e2.to_string())
            })
        });
        report.absorb(tuples.len(), results);
    }
    Ok(report)
}
