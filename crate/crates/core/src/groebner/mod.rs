//! Exact polynomial arithmetic over ℚ(√2), lexicographic orders, reduced
//! Gröbner bases and leading-term ideals.

mod buchberger;
mod coeff;
mod ideal;
mod poly;

pub use buchberger::{buchberger, buchberger_with_limit, lt_ideal, GroebnerBasis, DEFAULT_PAIR_LIMIT};
pub use coeff::CoeffExt;
pub use ideal::MonomialIdeal;
pub use poly::{
    format_monomial, lex_compare, monomial_grading, parse_monomial, Exponents, GradedVariable, MonomialOrder,
    Polynomial,
};
