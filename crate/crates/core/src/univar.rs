//! Univariate polynomials in `t` over the integers and rationals, and the
//! rational-function field Q(t) used by the series recurrences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer-coefficient polynomial, coefficients ascending in `t`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    /// `1 - t`.
    pub fn one_minus_t() -> Self {
        IntPoly::from_i64(&[1, -1])
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut p = IntPoly::one();
        let omt = IntPoly::one_minus_t();
        for _ in 0..k {
            p = &p * &omt;
        }
        p
    }

    /// `1 - t^d` (so `one_minus_t_pow(1)` for `d = 1`).
    pub fn one_minus_t_to_the(d: usize) -> Self {
        if d == 0 {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); d + 1];
        v[0] = BigInt::one();
        v[d] = -BigInt::one();
        IntPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Exact division by `1 - t`; `None` if not divisible.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // p = (1-t) q  =>  q_k = p_0 + p_1 + ... + p_k summed with sign bookkeeping:
        // synthetic division by root t=1 after factoring out -1 per degree.
        // (1 - t) q(t) = p(t): q_0 = p_0, q_k = q_{k-1} + p_k ... check remainder.
        let mut q = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut carry = BigInt::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k == self.coeffs.len() - 1 {
                // remainder: carry + c must be 0 .. handled below
            }
            carry += c;
            if k < self.coeffs.len() - 1 {
                q.push(carry.clone());
            }
        }
        if carry.is_zero() {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Largest `k` with `(1-t)^k` dividing `self`, together with the cofactor.
    /// The zero polynomial yields `(0, 0)`.
    pub fn strip_one_minus_t(&self) -> (usize, IntPoly) {
        if self.is_zero() {
            return (0, IntPoly::zero());
        }
        let mut k = 0;
        let mut p = self.clone();
        while let Some(q) = p.div_one_minus_t() {
            p = q;
            k += 1;
        }
        (k, p)
    }

    pub fn to_rational(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::new(v)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::new(v)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

/// Rational-coefficient polynomial, coefficients ascending in `t`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let lead = self.leading();
        self.scale(&lead.recip())
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); self.degree() - dd + 1];
        let dl = d.leading();
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = &r[k] / &dl;
            q[k - dd] = c.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let upd = &r[k - dd + j] - &(dc * &c);
                r[k - dd + j] = upd;
            }
        }
        (QPoly::new(q), QPoly::new(r))
    }

    /// Monic gcd. Remainders are reduced to primitive integer form at every
    /// step to keep coefficient growth in check.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.primitive_int().0.to_rational();
        let mut b = other.primitive_int().0.to_rational();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_int().0.to_rational();
        }
        a.monic()
    }

    /// Clears denominators and integer content; returns a primitive integer
    /// polynomial with the same roots and the (positive) rational scalar `s`
    /// such that `self = s * result`.
    pub fn primitive_int(&self) -> (IntPoly, BigRational) {
        use num_integer::Integer;
        if self.is_zero() {
            return (IntPoly::zero(), BigRational::one());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        // keep the sign of the leading coefficient on the scalar
        if ints.last().is_some_and(|c| c.is_negative()) {
            content = -content;
        }
        let prim = IntPoly::new(ints.iter().map(|c| c / &content).collect());
        (prim, BigRational::new(content, den))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let upd = &v[i + j] + &(a * b);
                v[i + j] = upd;
            }
        }
        QPoly::new(v)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly{:?}", self.coeffs)
    }
}

/// Element of the rational-function field Q(t), kept reduced with a monic
/// denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QRatFn {
    num: QPoly,
    den: QPoly, // monic, coprime to num; den = 1 when num = 0
}

impl QRatFn {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QRatFn {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading();
        QRatFn {
            num: num.scale(&lead.recip()),
            den: den.monic(),
        }
    }

    pub fn zero() -> Self {
        QRatFn {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRatFn {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRatFn {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        QRatFn::from_poly(p.to_rational())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn recip(&self) -> QRatFn {
        assert!(!self.is_zero(), "reciprocal of zero");
        QRatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == 0
    }
}

impl Add for &QRatFn {
    type Output = QRatFn;
    fn add(self, rhs: &QRatFn) -> QRatFn {
        QRatFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QRatFn {
    type Output = QRatFn;
    fn sub(self, rhs: &QRatFn) -> QRatFn {
        QRatFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &QRatFn {
    type Output = QRatFn;
    fn mul(self, rhs: &QRatFn) -> QRatFn {
        QRatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QRatFn {
    type Output = QRatFn;
    fn neg(self) -> QRatFn {
        QRatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strip_one_minus_t_factors() {
        let p = &IntPoly::one_minus_t_pow(3) * &IntPoly::from_i64(&[1, 1]);
        let (k, rest) = p.strip_one_minus_t();
        assert_eq!(k, 3);
        assert_eq!(rest, IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn one_minus_t_to_the_divides() {
        // 1 - t^d = (1 - t)(1 + t + ... + t^{d-1})
        let p = IntPoly::one_minus_t_to_the(4);
        let q = p.div_one_minus_t().unwrap();
        assert_eq!(q, IntPoly::from_i64(&[1, 1, 1, 1]));
    }

    #[test]
    fn qpoly_div_rem_roundtrip() {
        let a = QPoly::new(
            [3, 0, -2, 5, 1]
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        );
        let d = QPoly::new(
            [1, 2, 1]
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        );
        let (q, r) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree() < d.degree() || r.is_zero());
    }

    #[test]
    fn qratfn_field_ops() {
        // 1/(1-t) + 1/(1+t) = 2/(1-t^2)
        let omt = IntPoly::one_minus_t().to_rational();
        let opt = IntPoly::from_i64(&[1, 1]).to_rational();
        let x = QRatFn::new(QPoly::one(), omt);
        let y = QRatFn::new(QPoly::one(), opt);
        let s = &x + &y;
        let expect = QRatFn::new(
            QPoly::constant(BigRational::from(BigInt::from(2))),
            IntPoly::from_i64(&[1, 0, -1]).to_rational(),
        );
        assert_eq!(s, expect);
    }
}
