//! Exact arithmetic in Q(q): rational functions with Laurent-polynomial
//! numerator and polynomial denominator, plus symmetric q-combinatorics.
//!
//! Canonical form (checked by `debug_assert` and restored after every
//! operation):
//!   * the denominator is an ordinary polynomial with nonzero constant term
//!     (all q-powers live in the numerator, where negative powers are fine),
//!   * the denominator has positive leading coefficient,
//!   * gcd(numerator, denominator) is a unit and the integer contents are
//!     coprime.
//! Equality is therefore structural equality, which is what makes exact
//! zero-testing in the elimination and commutator code decidable.

mod poly;

pub use poly::{laurent_exact_div, laurent_gcd, LaurentPoly};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of Q(q) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        QRat {
            num: LaurentPoly::from_int(n),
            den: LaurentPoly::one(),
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        QRat {
            num: LaurentPoly::monomial(1, k),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        QRat {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_ratio(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        // move the denominator's q-power (a unit) into the numerator
        let (dprim, dcontent, dshift) = den.primitive_parts();
        let (nprim, ncontent, nshift) = num.primitive_parts();
        let g = laurent_gcd(&nprim, &dprim);
        let mut n = laurent_exact_div(&nprim, &g);
        let mut d = laurent_exact_div(&dprim, &g);
        let cg = ncontent.gcd(&dcontent);
        let nc = &ncontent / &cg;
        let dc = &dcontent / &cg;
        n = n.scale(&nc);
        d = d.scale(&dc);
        if d.leading_coeff().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        // d now has nonzero constant term (primitive parts strip q-powers);
        // fold both shifts into the numerator.
        let n = n.shifted(nshift - dshift);
        QRat { num: n, den: d }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    /// The bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        Self::normalized(self.num.bar(), self.den.bar())
    }

    /// Exact evaluation at a nonzero rational q0.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(Error::PoleAtSample {
                q0: "0".to_string(),
            });
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::PoleAtSample { q0: q0.to_string() });
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, other: &QRat) -> QRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return QRat::normalized(self.num.add(&other.num), self.den.clone());
        }
        QRat::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, other: &QRat) -> QRat {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return -other.clone();
        }
        if self.den == other.den {
            return QRat::normalized(self.num.sub(&other.num), self.den.clone());
        }
        QRat::normalized(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, other: &QRat) -> QRat {
        if self.is_zero() || other.is_zero() {
            return QRat::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        QRat::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, other: &QRat) -> QRat {
        self.checked_div(other)
            .expect("division by zero in Q(q); use checked_div on user input")
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QRat {
            type Output = QRat;
            fn $method(self, other: QRat) -> QRat {
                (&self).$method(&other)
            }
        }
        impl $trait<&QRat> for QRat {
            type Output = QRat;
            fn $method(self, other: &QRat) -> QRat {
                (&self).$method(other)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, other: &QRat) {
        *self = &*self + other;
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, other: &QRat) {
        *self = &*self - other;
    }
}

impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, other: &QRat) {
        *self = &*self * other;
    }
}

/// The symmetric q-integer [n] with q_i = q^d:
/// (q^(dn) - q^(-dn)) / (q^d - q^(-d)), which expands to a Laurent polynomial.
pub fn q_int(n: i64, d: u32) -> QRat {
    let d = d as i64;
    if n == 0 {
        return QRat::zero();
    }
    let (sign, n) = if n < 0 { (-1i64, -n) } else { (1, n) };
    // [n] = q^(d(n-1)) + q^(d(n-3)) + ... + q^(-d(n-1))
    let mut terms = Vec::new();
    let mut k = d * (n - 1);
    for _ in 0..n {
        terms.push((k, BigInt::from(sign)));
        k -= 2 * d;
    }
    QRat::from_poly(LaurentPoly::from_terms(&terms))
}

/// [n]! = [n][n-1]...[1].
pub fn q_factorial(n: u64, d: u32) -> QRat {
    let mut acc = QRat::one();
    for k in 1..=n {
        acc = &acc * &q_int(k as i64, d);
    }
    acc
}

/// Gaussian binomial [n choose k] built from symmetric q-integers.
pub fn q_binomial(n: u64, k: u64, d: u32) -> QRat {
    if k > n {
        return QRat::zero();
    }
    let num = q_factorial(n, d);
    let den = &q_factorial(k, d) * &q_factorial(n - k, d);
    num.checked_div(&den)
        .expect("q-factorials are nonzero for generic q")
}

/// q0^k for signed k.
pub fn rat_pow(q0: &BigRational, k: i64) -> BigRational {
    poly::pow_rat(q0, k)
}

/// Parse an exact rational like "4/5" or "-3".
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational number: {s:?}"));
    if let Some((a, b)) = s.split_once('/') {
        let n: BigInt = a.trim().parse().map_err(|_| mk_err())?;
        let d: BigInt = b.trim().parse().map_err(|_| mk_err())?;
        if d.is_zero() {
            return Err(mk_err());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(BigRational::from(n))
    }
}

impl fmt::Display for QRat {
    /// Serialized as `(num)` or `(num)/(den)`, e.g. `(q^2+1)/(q)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parser for the display grammar. Accepts `(num)`, `(num)/(den)`, and bare
/// term lists; terms look like `3*q^2`, `-q^-1`, `q`, `7`.
pub fn parse_qrat(s: &str) -> Result<QRat> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty Q(q) literal".into()));
    }
    if let Some((a, b)) = split_top_level_slash(&s) {
        let num = parse_poly(strip_parens(a)?)?;
        let den = parse_poly(strip_parens(b)?)?;
        QRat::from_ratio(num, den)
    } else {
        let body = if s.starts_with('(') { strip_parens(&s)? } else { &s };
        Ok(QRat::from_poly(parse_poly(body)?))
    }
}

fn split_top_level_slash(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '/' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn strip_parens(s: &str) -> Result<&str> {
    if s.starts_with('(') && s.ends_with(')') {
        Ok(&s[1..s.len() - 1])
    } else {
        Err(Error::Parse(format!("expected parenthesized group: {s:?}")))
    }
}

fn parse_poly(s: &str) -> Result<LaurentPoly> {
    if s == "0" {
        return Ok(LaurentPoly::zero());
    }
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    let mut rest = s;
    let mut sign = BigInt::one();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -sign;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    while !rest.is_empty() {
        // split off the next term at the first top-level +/- that is not an
        // exponent sign (exponent signs directly follow '^')
        let mut end = rest.len();
        let bytes = rest.as_bytes();
        let mut i = 0;
        while i < rest.len() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-') && i > 0 && bytes[i - 1] as char != '^' {
                end = i;
                break;
            }
            i += 1;
        }
        let term = &rest[..end];
        terms.push(parse_term(term, &sign)?);
        if end == rest.len() {
            break;
        }
        sign = if bytes[end] as char == '-' {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        rest = &rest[end + 1..];
    }
    Ok(LaurentPoly::from_terms(&terms))
}

fn parse_term(t: &str, sign: &BigInt) -> Result<(i64, BigInt)> {
    let mk_err = || Error::Parse(format!("invalid Q(q) term: {t:?}"));
    if t.is_empty() {
        return Err(mk_err());
    }
    let (coeff_str, var_str) = match t.find('q') {
        None => (t, ""),
        Some(i) => (&t[..i], &t[i..]),
    };
    let coeff: BigInt = if coeff_str.is_empty() {
        BigInt::one()
    } else {
        coeff_str
            .trim_end_matches('*')
            .parse()
            .map_err(|_| mk_err())?
    };
    let power: i64 = if var_str.is_empty() {
        0
    } else if var_str == "q" {
        1
    } else {
        var_str
            .strip_prefix("q^")
            .ok_or_else(mk_err)?
            .parse()
            .map_err(|_| mk_err())?
    };
    Ok((power, coeff * sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QRat {
        QRat::q_pow(1)
    }

    #[test]
    fn add_q_and_q_inverse() {
        // (q) + (q^-1) = (q^2 + 1)/q
        let got = &q() + &QRat::q_pow(-1);
        let expect = QRat::from_ratio(
            LaurentPoly::from_terms(&[(2, 1.into()), (0, 1.into())]),
            LaurentPoly::monomial(1, 1),
        )
        .unwrap();
        // canonical form puts q^-1 in the numerator instead of q downstairs
        assert_eq!(got, expect);
        assert!(got.denominator().is_one());
        assert_eq!(got.numerator().low_degree(), -1);
    }

    #[test]
    fn gcd_cancellation() {
        // (q^2 - 1)/(q - 1) = q + 1
        let num = LaurentPoly::from_terms(&[(2, 1.into()), (0, (-1).into())]);
        let den = LaurentPoly::from_terms(&[(1, 1.into()), (0, (-1).into())]);
        let got = QRat::from_ratio(num, den).unwrap();
        let expect = QRat::from_poly(LaurentPoly::from_terms(&[(1, 1.into()), (0, 1.into())]));
        assert_eq!(got, expect);
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        // ((q+1)/q) * (q/(q+1)) = 1
        let a = QRat::from_ratio(
            LaurentPoly::from_terms(&[(1, 1.into()), (0, 1.into())]),
            LaurentPoly::monomial(1, 1),
        )
        .unwrap();
        let b = a.recip().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            QRat::one().checked_div(&QRat::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn q_int_base_cases() {
        assert!(q_int(1, 1).is_one());
        // [2] = q + q^-1
        let two = q_int(2, 1);
        assert_eq!(two, &q() + &QRat::q_pow(-1));
        assert_eq!(q_int(-2, 1), -q_int(2, 1));
        assert!(q_int(0, 3).is_zero());
    }

    #[test]
    fn q_binomial_4_2_against_direct_division() {
        // oracle: expand [4][3]/([2][1]) by direct polynomial division
        let oracle = (&q_int(4, 1) * &q_int(3, 1))
            .checked_div(&(&q_int(2, 1) * &q_int(1, 1)))
            .unwrap();
        let got = q_binomial(4, 2, 1);
        assert_eq!(got, oracle);
        // frozen expansion: q^4 + q^2 + 2 + q^-2 + q^-4
        let expect = QRat::from_poly(LaurentPoly::from_terms(&[
            (4, 1.into()),
            (2, 1.into()),
            (0, 2.into()),
            (-2, 1.into()),
            (-4, 1.into()),
        ]));
        assert_eq!(got, expect);
    }

    #[test]
    fn q_int_bar_symmetry() {
        for n in 1..8 {
            for d in 1..3 {
                let v = q_int(n, d);
                assert_eq!(v.bar(), v, "[{n}] with d={d} must be bar-invariant");
            }
        }
    }

    #[test]
    fn eval_at_examples() {
        // x = q + q^-1 at q0 = 2 -> 5/2
        let x = &q() + &QRat::q_pow(-1);
        let q0 = parse_rational("2").unwrap();
        assert_eq!(x.eval_at(&q0).unwrap(), parse_rational("5/2").unwrap());

        // 1/(q-1) at q0 = 1 -> pole
        let y = QRat::one()
            .checked_div(&(&q() - &QRat::one()))
            .unwrap();
        assert!(matches!(
            y.eval_at(&parse_rational("1").unwrap()),
            Err(Error::PoleAtSample { .. })
        ));

        // q_int(3,1) at 4/5 -> 1281/400 (oracle: substitute into q^2+1+q^-2)
        let z = q_int(3, 1);
        assert_eq!(
            z.eval_at(&parse_rational("4/5").unwrap()).unwrap(),
            parse_rational("1281/400").unwrap()
        );
    }

    #[test]
    fn display_and_parse_round_trip() {
        let samples = vec![
            QRat::zero(),
            QRat::one(),
            QRat::from_int(-7),
            q_int(5, 1),
            (&q() + &QRat::one()).checked_div(&q()).unwrap(),
            QRat::from_ratio(
                LaurentPoly::from_terms(&[(2, 1.into()), (0, 1.into())]),
                LaurentPoly::monomial(1, 1),
            )
            .unwrap(),
            QRat::from_ratio(
                LaurentPoly::from_terms(&[(3, BigInt::from(-5)), (-2, BigInt::from(7))]),
                LaurentPoly::from_terms(&[(2, BigInt::from(3)), (0, BigInt::from(1))]),
            )
            .unwrap(),
        ];
        for s in samples {
            let text = s.to_string();
            let back = parse_qrat(&text).unwrap();
            assert_eq!(back, s, "round trip failed for {text}");
        }
    }

    #[test]
    fn parse_display_example_from_docs() {
        let v = parse_qrat("(q^2+1)/(q)").unwrap();
        assert_eq!(v, &q() + &QRat::q_pow(-1));
    }
}
