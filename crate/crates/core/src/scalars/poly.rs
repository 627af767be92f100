//! Dense polynomials over `Z[q]` and `Z[q][Q]` used for gcd computations.
//!
//! The gcd uses the primitive remainder sequence: contents are split off,
//! pseudo-remainders are made primitive at every step, and the content gcd
//! is multiplied back at the end. The bivariate case recurses on `q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly2;

/// Polynomial in `q` with integer coefficients; index is the degree.
pub(crate) type UPoly = Vec<BigInt>;

/// Polynomial in `Q` with coefficients in `Z[q]`; index is the `Q` degree.
pub(crate) type BiPoly = Vec<UPoly>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn trim_bi(p: &mut BiPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out: UPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn u_shift(a: &UPoly, k: usize) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(a.iter().cloned());
    out
}

fn u_scale(a: &UPoly, k: &BigInt) -> UPoly {
    let mut out: UPoly = a.iter().map(|c| c * k).collect();
    trim(&mut out);
    out
}

fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_primitive(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let c = u_content(a);
    let c = if a.last().unwrap().is_negative() { -c } else { c };
    a.iter().map(|x| x / &c).collect()
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let k = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        let left = u_scale(&r, &lb);
        let right = u_shift(&u_scale(b, &lr), k);
        r = u_sub(&left, &right);
    }
    r
}

/// Exact quotient `a / b` over `Z[q]`, or `None` if `b` does not divide `a`.
pub(crate) fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
    let lb = b.last().unwrap();
    while !r.is_empty() {
        if r.len() < b.len() {
            return None;
        }
        let k = r.len() - b.len();
        let (t, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        quo[k] = t.clone();
        let sub = u_shift(&u_scale(b, &t), k);
        r = u_sub(&r, &sub);
    }
    trim(&mut quo);
    Some(quo)
}

/// Gcd over `Z[q]` with positive leading coefficient.
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return normalize_sign(b.clone());
    }
    if b.is_empty() {
        return normalize_sign(a.clone());
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    normalize_sign(u_scale(&u_primitive(&x), &c))
}

fn normalize_sign(mut a: UPoly) -> UPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -&*c;
        }
    }
    a
}

fn b_sub(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let n = a.len().max(b.len());
    let empty = Vec::new();
    let mut out: BiPoly = (0..n)
        .map(|i| u_sub(a.get(i).unwrap_or(&empty), b.get(i).unwrap_or(&empty)))
        .collect();
    trim_bi(&mut out);
    out
}

fn b_scale(a: &BiPoly, k: &UPoly) -> BiPoly {
    let mut out: BiPoly = a.iter().map(|c| u_mul(c, k)).collect();
    trim_bi(&mut out);
    out
}

fn b_shift(a: &BiPoly, k: usize) -> BiPoly {
    let mut out = vec![Vec::new(); k];
    out.extend(a.iter().cloned());
    out
}

fn b_content(a: &BiPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_upoly(a: &BiPoly, c: &UPoly) -> BiPoly {
    a.iter()
        .map(|x| u_div_exact(x, c).expect("content divides every coefficient"))
        .collect()
}

fn b_primitive(a: &BiPoly) -> BiPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let c = b_content(a);
    b_div_upoly(a, &c)
}

fn b_prem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let k = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        r = b_sub(&b_scale(&r, &lb), &b_shift(&b_scale(b, &lr), k));
    }
    r
}

fn b_normalize_sign(mut a: BiPoly) -> BiPoly {
    let negative = a
        .last()
        .and_then(|c| c.last())
        .is_some_and(|c| c.is_negative());
    if negative {
        for c in a.iter_mut() {
            for x in c.iter_mut() {
                *x = -&*x;
            }
        }
    }
    a
}

/// Gcd over `Z[Q, q]` with positive lexicographic leading coefficient.
pub(crate) fn b_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_empty() {
        return b_normalize_sign(b.clone());
    }
    if b.is_empty() {
        return b_normalize_sign(a.clone());
    }
    let c = u_gcd(&b_content(a), &b_content(b));
    let (mut x, mut y) = (b_primitive(a), b_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = b_prem(&x, &y);
        x = y;
        y = b_primitive(&r);
    }
    let g = b_primitive(&x);
    b_normalize_sign(b_scale(&g, &c))
}

/// Exact quotient over `Z[Q, q]`, or `None` if the division is not exact.
pub(crate) fn b_div_exact(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    if b.is_empty() {
        return None;
    }
    let mut r = a.clone();
    let mut quo: BiPoly = vec![Vec::new(); a.len().saturating_sub(b.len()) + 1];
    let lb = b.last().unwrap();
    while !r.is_empty() {
        if r.len() < b.len() {
            return None;
        }
        let k = r.len() - b.len();
        let t = u_div_exact(r.last().unwrap(), lb)?;
        r = b_sub(&r, &b_shift(&b_scale(b, &t), k));
        quo[k] = t;
    }
    trim_bi(&mut quo);
    Some(quo)
}

/// Convert a polynomial (no negative exponents) into dense form.
pub(crate) fn to_bipoly(p: &LaurentPoly2) -> BiPoly {
    let (amax, bmax) = p.max_exponents();
    if p.is_zero() {
        return Vec::new();
    }
    let mut out: BiPoly = vec![vec![BigInt::zero(); bmax as usize + 1]; amax as usize + 1];
    for ((a, b), c) in p.terms() {
        debug_assert!(*a >= 0 && *b >= 0);
        out[*a as usize][*b as usize] = c.clone();
    }
    for c in out.iter_mut() {
        trim(c);
    }
    trim_bi(&mut out);
    out
}

pub(crate) fn from_bipoly(p: &BiPoly) -> LaurentPoly2 {
    let mut terms = Vec::new();
    for (a, c) in p.iter().enumerate() {
        for (b, x) in c.iter().enumerate() {
            if !x.is_zero() {
                terms.push(((a as i32, b as i32), x.clone()));
            }
        }
    }
    LaurentPoly2::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly2 {
        LaurentPoly2::parse(s).unwrap()
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        // (Q + q)(Q - 1) and (Q + q)(q + 2)
        let f = lp("1*Q^1*q^0 + 1*Q^0*q^1");
        let g = lp("1*Q^1*q^0 + -1*Q^0*q^0");
        let h = lp("1*Q^0*q^1 + 2*Q^0*q^0");
        let a = to_bipoly(&f.mul_ref(&g));
        let b = to_bipoly(&f.mul_ref(&h));
        assert_eq!(from_bipoly(&b_gcd(&a, &b)), f);
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = to_bipoly(&lp("6*Q^1*q^0 + 6*Q^0*q^0"));
        let b = to_bipoly(&lp("4*Q^0*q^1"));
        assert_eq!(from_bipoly(&b_gcd(&a, &b)), lp("2*Q^0*q^0"));
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = to_bipoly(&lp("1*Q^2*q^0 + -1*Q^0*q^0"));
        let b = to_bipoly(&lp("1*Q^1*q^0 + 1*Q^0*q^0"));
        let quo = b_div_exact(&a, &b).unwrap();
        assert_eq!(from_bipoly(&quo), lp("1*Q^1*q^0 + -1*Q^0*q^0"));
        let c = to_bipoly(&lp("1*Q^1*q^0 + 2*Q^0*q^0"));
        assert!(b_div_exact(&a, &c).is_none());
    }

    #[test]
    fn univariate_gcd() {
        // (q^2 - 1) and (q^2 + 2q + 1) share q + 1
        let a: UPoly = vec![(-1).into(), 0.into(), 1.into()];
        let b: UPoly = vec![1.into(), 2.into(), 1.into()];
        assert_eq!(u_gcd(&a, &b), vec![BigInt::from(1), BigInt::from(1)]);
    }
}
