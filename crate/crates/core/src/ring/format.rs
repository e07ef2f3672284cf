//! Canonical text forms for elements. The output grammar is the input
//! grammar of [`crate::parse`], so formatting then parsing is the identity.

use super::{Backend, Elem};
use crate::qpoly::QPoly;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn format_elem(backend: &Backend, a: &Elem) -> String {
    match (backend, a) {
        (_, Elem::Rat(r)) => format_rational(r),
        (Backend::FiniteField(f), Elem::Gf(x)) => {
            let digits = f.digits(*x);
            if f.degree() == 1 {
                return digits[0].to_string();
            }
            let mut terms = Vec::new();
            for (e, &c) in digits.iter().enumerate().rev() {
                if c == 0 {
                    continue;
                }
                let coeff = if c == 1 && e > 0 { String::new() } else { c.to_string() };
                terms.push(match e {
                    0 => coeff,
                    1 => format!("{coeff}w"),
                    _ => format!("{coeff}w^{e}"),
                });
            }
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+")
            }
        }
        (Backend::RationalFunctions { var }, Elem::Func(r)) => {
            let num = format_qpoly(r.num(), *var);
            if r.is_polynomial() {
                return num;
            }
            let num = if term_count(r.num()) > 1 || num.contains('/') { format!("({num})") } else { num };
            let den = format_qpoly(r.den(), *var);
            let den = if term_count(r.den()) > 1 { format!("({den})") } else { den };
            format!("{num}/{den}")
        }
        (_, Elem::Quat(q)) => {
            let mut out = String::new();
            for (c, unit) in q.components().into_iter().zip(["", "i", "j", "k"]) {
                if c.is_zero() {
                    continue;
                }
                push_term(&mut out, c, unit);
            }
            if out.is_empty() {
                "0".into()
            } else {
                out
            }
        }
        (_, Elem::Gf(x)) => x.to_string(),
        (_, Elem::Func(_)) => unreachable!("rational function outside its backend"),
    }
}

pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn term_count(p: &QPoly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// Polynomial in `var`, descending powers. `3/2 x^2` prints as `3x^2/2`.
pub(crate) fn format_qpoly(p: &QPoly, var: char) -> String {
    let mut out = String::new();
    for (e, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let v = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        push_term(&mut out, c, &v);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Appends `c * sym` as `[-|+]n sym/d`, omitting a unit numerator when a
/// symbol is present.
fn push_term(out: &mut String, c: &BigRational, sym: &str) {
    let neg = c.is_negative();
    let mag = c.abs();
    if neg {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    let n = mag.numer();
    if sym.is_empty() || !n.is_one() {
        out.push_str(&n.to_string());
    }
    out.push_str(sym);
    if !mag.denom().is_one() {
        out.push('/');
        out.push_str(&mag.denom().to_string());
    }
}
