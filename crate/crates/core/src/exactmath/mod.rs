//! Exact integer, rational and polynomial arithmetic shared by every formula.

mod interpolate;
mod numbers;
mod poly;

pub use interpolate::{interpolate_from_values, lagrange_interpolate};
pub use numbers::{
    binomial, elm, eulerian, factorial, multinomial, set_table_limit, stirling_first_unsigned,
    table_limit, DEFAULT_TABLE_LIMIT,
};
pub use poly::{binom_affine_poly, format_rational, parse_rational, Polynomial, Rational};
