use num_bigint::BigInt;

use super::poly::{Polynomial, Rational};
use crate::error::{Error, Result};

/// The unique polynomial of degree below `points.len()` through every point,
/// built by Newton divided differences over exact rationals.
pub fn lagrange_interpolate(points: &[(i64, BigInt)]) -> Result<Polynomial> {
    let mut xs: Vec<i64> = points.iter().map(|(x, _)| *x).collect();
    xs.sort_unstable();
    if let Some(w) = xs.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateAbscissa(w[0]));
    }
    let xs: Vec<i64> = points.iter().map(|(x, _)| *x).collect();
    let mut table: Vec<Rational> = points
        .iter()
        .map(|(_, y)| Rational::from_integer(y.clone()))
        .collect();
    let n = xs.len();
    // in-place divided differences; table[i] ends as f[x_0..x_i]
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = Rational::from_integer(BigInt::from(xs[i] - xs[i - level]));
            table[i] = num / den;
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &Polynomial::linear(1, -xs[i])) + &Polynomial::constant(table[i].clone());
    }
    Ok(acc)
}

/// Interpolation through `(0, f(0)), (1, f(1)), ...`.
pub fn interpolate_from_values(values: &[BigInt]) -> Polynomial {
    let pts: Vec<(i64, BigInt)> = values
        .iter()
        .enumerate()
        .map(|(i, v)| (i as i64, v.clone()))
        .collect();
    lagrange_interpolate(&pts).expect("consecutive abscissae are distinct")
}
