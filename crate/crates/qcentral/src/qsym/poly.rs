//! Integer-coefficient Laurent polynomials in the formal variable q.
//!
//! This is the coefficient workhorse: dense storage between the lowest and
//! highest nonzero power, arbitrary-precision integers, no floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A Laurent polynomial `sum c[k] * q^(lo + k)` with `c.first() != 0` and
/// `c.last() != 0`. The zero polynomial is the empty vector with `lo = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    pub(crate) lo: i64,
    pub(crate) c: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, c: vec![] }
    }

    pub fn one() -> Self {
        LaurentPoly {
            lo: 0,
            c: vec![BigInt::one()],
        }
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: k, c: vec![c] }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::monomial(n, 0)
    }

    /// Build from (power, coefficient) pairs; repeated powers accumulate.
    pub fn from_terms(terms: &[(i64, BigInt)]) -> Self {
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, v) in terms {
            c[(k - lo) as usize] += v;
        }
        let mut p = LaurentPoly { lo, c };
        p.normalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.c.len() == 1 && self.c[0].is_one()
    }

    /// Lowest power with nonzero coefficient. Zero polynomial reports 0.
    pub fn low_degree(&self) -> i64 {
        self.lo
    }

    /// Highest power with nonzero coefficient. Zero polynomial reports 0.
    pub fn high_degree(&self) -> i64 {
        if self.c.is_empty() {
            0
        } else {
            self.lo + self.c.len() as i64 - 1
        }
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        if self.c.is_empty() || k < self.lo || k > self.high_degree() {
            BigInt::zero()
        } else {
            self.c[(k - self.lo) as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn normalize(&mut self) {
        while self.c.last().map_or(false, |x| x.is_zero()) {
            self.c.pop();
        }
        let strip = self.c.iter().take_while(|x| x.is_zero()).count();
        if strip > 0 {
            self.c.drain(..strip);
            self.lo += strip as i64;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            lo: self.lo + k,
            c: self.c.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.high_degree().max(other.high_degree());
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, v) in self.c.iter().enumerate() {
            c[(self.lo - lo) as usize + i] += v;
        }
        for (i, v) in other.c.iter().enumerate() {
            c[(other.lo - lo) as usize + i] += v;
        }
        let mut p = LaurentPoly { lo, c };
        p.normalize();
        p
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            lo: self.lo,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        let mut p = LaurentPoly {
            lo: self.lo + other.lo,
            c,
        };
        p.normalize();
        p
    }

    /// Add `coef * q^shift * other` in place (fused op for the derivation DP).
    pub fn add_scaled(&mut self, other: &Self, coef: &BigInt, shift: i64) {
        if other.is_zero() || coef.is_zero() {
            return;
        }
        let olo = other.lo + shift;
        let ohi = olo + other.c.len() as i64 - 1;
        if self.is_zero() {
            self.lo = olo;
            self.c = other.c.iter().map(|x| x * coef).collect();
            self.normalize();
            return;
        }
        let lo = self.lo.min(olo);
        let hi = self.high_degree().max(ohi);
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, v) in self.c.iter().enumerate() {
            c[(self.lo - lo) as usize + i] += v;
        }
        for (i, v) in other.c.iter().enumerate() {
            c[(olo - lo) as usize + i] += v * coef;
        }
        self.lo = lo;
        self.c = c;
        self.normalize();
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            lo: self.lo,
            c: self.c.iter().map(|x| x * k).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The image under the bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let hi = self.high_degree();
        LaurentPoly {
            lo: -hi,
            c: self.c.iter().rev().cloned().collect(),
        }
    }

    /// Exact rational evaluation at q = q0 (q0 must be nonzero when lo < 0;
    /// enforced by callers).
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut pw = pow_rat(q0, self.lo);
        for coef in &self.c {
            if !coef.is_zero() {
                acc += BigRational::from(coef.clone()) * &pw;
            }
            pw *= q0;
        }
        acc
    }

    /// Content of the coefficient vector (nonnegative gcd; 0 for the zero poly).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Strip the q-power and content so the result is a primitive ordinary
    /// polynomial with nonzero constant term; returns (primitive, content, shift).
    pub fn primitive_parts(&self) -> (LaurentPoly, BigInt, i64) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero(), 0);
        }
        let content = self.content();
        let prim = LaurentPoly {
            lo: 0,
            c: self.c.iter().map(|x| x / &content).collect(),
        };
        (prim, content, self.lo)
    }

    /// Max absolute coefficient (zero poly reports 0).
    pub fn max_abs_coeff(&self) -> BigInt {
        self.c
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.c.iter().filter(|x| !x.is_zero()).count()
    }
}

pub(crate) fn pow_rat(q0: &BigRational, k: i64) -> BigRational {
    let mut acc = BigRational::one();
    let base = if k >= 0 { q0.clone() } else { q0.recip() };
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Pseudo-remainder of ordinary coefficient vectors (b nonempty, lead != 0):
/// returns r with lc(b)^k * a = q*b + r for some k, deg r < deg b.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.len() > db {
        let top = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - db;
        if top.is_zero() {
            rem.pop();
            continue;
        }
        // rem <- lb*rem - top*q^shift*b ; cancels the leading term exactly
        for x in rem.iter_mut() {
            *x *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &top * bc;
        }
        debug_assert!(rem.last().unwrap().is_zero());
        rem.pop();
        while rem.last().map_or(false, |x| x.is_zero()) {
            if rem.len() <= db {
                break;
            }
            rem.pop();
        }
    }
    while rem.last().map_or(false, |x| x.is_zero()) {
        rem.pop();
    }
    rem
}

/// Gcd of two Laurent polynomials: primitive, positive leading coefficient,
/// nonzero constant term (any common q-power is dropped — q is a unit).
pub fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_gcd(b);
    }
    if b.is_zero() {
        return normalize_gcd(a);
    }
    let (pa, _, _) = a.primitive_parts();
    let (pb, _, _) = b.primitive_parts();
    let mut r0 = pa.c;
    let mut r1 = pb.c;
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        let mut rem = pseudo_rem(&r0, &r1);
        // keep remainders primitive to control coefficient growth
        if !rem.is_empty() {
            let mut g = BigInt::zero();
            for x in &rem {
                g = g.gcd(x);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_one() && !g.is_zero() {
                for x in rem.iter_mut() {
                    *x /= &g;
                }
            }
        }
        r0 = r1;
        r1 = rem;
    }
    let mut g = LaurentPoly { lo: 0, c: r0 };
    g.normalize();
    normalize_gcd(&g)
}

fn normalize_gcd(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let (mut prim, _, _) = p.primitive_parts();
    if prim.leading_coeff().is_negative() {
        prim = prim.neg();
    }
    prim
}

/// Exact division a / b for Laurent polynomials, assuming b | a in the
/// Laurent ring. Panics when the division is not exact (internal invariant).
pub fn laurent_exact_div(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert!(!b.is_zero(), "laurent_exact_div by zero");
    if a.is_zero() {
        return LaurentPoly::zero();
    }
    let lo = a.lo - b.lo;
    let mut rem = a.c.clone();
    let db = b.c.len() - 1;
    assert!(
        rem.len() >= b.c.len(),
        "non-exact polynomial division (degree)"
    );
    let dq = rem.len() - 1 - db;
    let lb = b.c.last().unwrap();
    let mut quot = vec![BigInt::zero(); dq + 1];
    for step in (0..=dq).rev() {
        let top = rem[step + db].clone();
        if top.is_zero() {
            continue;
        }
        let (qc, r) = top.div_rem(lb);
        assert!(r.is_zero(), "non-exact polynomial division");
        for (i, bc) in b.c.iter().enumerate() {
            rem[step + i] -= &qc * bc;
        }
        quot[step] = qc;
    }
    assert!(
        rem.iter().all(|x| x.is_zero()),
        "non-exact polynomial division (remainder)"
    );
    let mut p = LaurentPoly { lo, c: quot };
    p.normalize();
    p
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest power first, matching how people write polynomials
        for i in (0..self.c.len()).rev() {
            let coef = &self.c[i];
            if coef.is_zero() {
                continue;
            }
            let k = self.lo + i as i64;
            let abs = coef.abs();
            if first {
                if coef.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coef.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if k == 0 {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            &terms
                .iter()
                .map(|&(k, v)| (k, BigInt::from(v)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(1, 1), (-1, 1)]); // q + q^-1
        let b = a.mul(&a); // q^2 + 2 + q^-2
        assert_eq!(b, p(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(a.sub(&a), LaurentPoly::zero());
        assert_eq!(a.bar(), a);
    }

    #[test]
    fn gcd_and_exact_division() {
        // (q^2 - 1) and (q - 1) share (q - 1)
        let a = p(&[(2, 1), (0, -1)]);
        let b = p(&[(1, 1), (0, -1)]);
        let g = laurent_gcd(&a, &b);
        assert_eq!(g, p(&[(1, 1), (0, -1)]));
        let q = laurent_exact_div(&a, &g);
        assert_eq!(q, p(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn gcd_drops_content_and_units() {
        let a = p(&[(1, 4), (0, 4)]); // 4q + 4
        let b = p(&[(3, 6)]); // 6q^3
        let g = laurent_gcd(&a, &b);
        assert_eq!(g, LaurentPoly::one());
    }

    #[test]
    fn pseudo_rem_matches_plain_remainder() {
        // (q^3 - 1) mod (q - 1) = 0 ; (q^3 + 1) mod (q - 1) = 2 (up to scale)
        let a = p(&[(3, 1), (0, -1)]);
        let b = p(&[(1, 1), (0, -1)]);
        let r = pseudo_rem(&a.c, &b.c);
        assert!(r.is_empty());
        let a2 = p(&[(3, 1), (0, 1)]);
        let r2 = pseudo_rem(&a2.c, &b.c);
        assert_eq!(r2.len(), 1);
    }
}
