//! Bivariate rational functions in the canonical shape
//! `g(s,t) / ((1-t)^a * prod_j ((1-t)^{c_j} - s*f_j(t))^{b_j})`.

use crate::error::{Error, Result};
use crate::hilbert::UniRational;
use crate::univar::{IntPoly, QRatFn};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer polynomial in `s` and `t`, stored as `t`-polynomials per `s`-degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarPoly {
    coeffs: Vec<IntPoly>,
}

impl BivarPoly {
    pub fn new(mut coeffs: Vec<IntPoly>) -> Self {
        while coeffs.last().is_some_and(|p| p.is_zero()) {
            coeffs.pop();
        }
        BivarPoly { coeffs }
    }

    pub fn zero() -> Self {
        BivarPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        BivarPoly::new(vec![IntPoly::one()])
    }

    pub fn from_t_poly(p: IntPoly) -> Self {
        BivarPoly::new(vec![p])
    }

    /// `p(t) * s^k`.
    pub fn t_poly_times_s_power(p: IntPoly, k: usize) -> Self {
        let mut coeffs = vec![IntPoly::zero(); k];
        coeffs.push(p);
        BivarPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn s_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> IntPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    /// `g(s, 1)` as coefficients of powers of `s`.
    pub fn eval_t_at_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|p| p.eval_at_one()).collect()
    }

    pub fn as_triples(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (k, p) in self.coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((k, j, c.clone()));
                }
            }
        }
        out
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BivarPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BivarPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        let mut out = vec![IntPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (k, p) in self.coeffs.iter().enumerate() {
            for (l, q) in rhs.coeffs.iter().enumerate() {
                out[k + l] = &out[k + l] + &(p * q);
            }
        }
        BivarPoly::new(out)
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly::new(self.coeffs.iter().map(|p| -p).collect())
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({p})")?;
            } else if k == 1 {
                write!(f, "({p})*s")?;
            } else {
                write!(f, "({p})*s^{k}")?;
            }
        }
        Ok(())
    }
}

/// One denominator factor `((1-t)^{c_j} - s*f_j(t))^{b_j}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    pub c_j: usize,
    pub f: IntPoly,
    pub b: usize,
}

impl Factor {
    fn base_poly(&self) -> BivarPoly {
        &BivarPoly::from_t_poly(IntPoly::one_minus_t_pow(self.c_j))
            - &BivarPoly::t_poly_times_s_power(self.f.clone(), 1)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiRational {
    num: BivarPoly,
    a: usize,
    factors: Vec<Factor>,
}

impl BiRational {
    /// Normalizes: merges identical `(c_j, f_j)` pairs, sorts factors, checks
    /// `f_j(1) > 0`, and drops factors of multiplicity zero.
    pub fn new(num: BivarPoly, a: usize, factors: Vec<Factor>) -> Result<Self> {
        let mut merged: Vec<Factor> = Vec::new();
        for fac in factors {
            if fac.b == 0 {
                continue;
            }
            if !fac.f.eval_at_one().is_positive() {
                return Err(Error::FactorPositivity(format!(
                    "(1-t)^{} - s*({})",
                    fac.c_j, fac.f
                )));
            }
            match merged
                .iter_mut()
                .find(|m| m.c_j == fac.c_j && m.f == fac.f)
            {
                Some(m) => m.b += fac.b,
                None => merged.push(fac),
            }
        }
        merged.sort_by(|x, y| {
            (x.c_j, x.f.coeffs(), x.b).cmp(&(y.c_j, y.f.coeffs(), y.b))
        });
        let a = if num.is_zero() { 0 } else { a };
        let factors = if num.is_zero() { vec![] } else { merged };
        Ok(BiRational { num, a, factors })
    }

    pub fn zero() -> Self {
        BiRational {
            num: BivarPoly::zero(),
            a: 0,
            factors: vec![],
        }
    }

    pub fn one() -> Self {
        BiRational {
            num: BivarPoly::one(),
            a: 0,
            factors: vec![],
        }
    }

    pub fn from_poly(p: BivarPoly) -> Self {
        BiRational {
            num: p,
            a: 0,
            factors: vec![],
        }
    }

    /// `p(t) * s^k / (1-t)^a`.
    pub fn pole_term(p: IntPoly, k: usize, a: usize) -> Self {
        BiRational {
            num: BivarPoly::t_poly_times_s_power(p, k),
            a,
            factors: vec![],
        }
    }

    pub fn numerator(&self) -> &BivarPoly {
        &self.num
    }

    pub fn pole_order(&self) -> usize {
        self.a
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Expanded denominator `(1-t)^a * prod factors` as a polynomial.
    pub fn denominator_poly(&self) -> BivarPoly {
        let mut d = BivarPoly::from_t_poly(IntPoly::one_minus_t_pow(self.a));
        for fac in &self.factors {
            let base = fac.base_poly();
            for _ in 0..fac.b {
                d = &d * &base;
            }
        }
        d
    }

    /// Mathematical equality by cross-multiplication.
    pub fn equivalent(&self, other: &BiRational) -> bool {
        &self.num * &other.denominator_poly() == &other.num * &self.denominator_poly()
    }

    /// Multiplies by `p(t) / (1-t)^{pole}`.
    pub fn scale_rational(&self, p: &IntPoly, pole: usize) -> BiRational {
        BiRational {
            num: &self.num * &BivarPoly::from_t_poly(p.clone()),
            a: self.a + pole,
            factors: self.factors.clone(),
        }
        .renormalize()
    }

    pub fn scale_poly(&self, p: &BivarPoly) -> BiRational {
        BiRational {
            num: &self.num * p,
            a: self.a,
            factors: self.factors.clone(),
        }
        .renormalize()
    }

    fn renormalize(self) -> BiRational {
        BiRational::new(self.num, self.a, self.factors).expect("factors already validated")
    }

    pub fn add(&self, other: &BiRational) -> BiRational {
        // common denominator: per-factor max multiplicity, max (1-t) pole
        let mut union: Vec<Factor> = self.factors.clone();
        for fac in &other.factors {
            match union
                .iter_mut()
                .find(|m| m.c_j == fac.c_j && m.f == fac.f)
            {
                Some(m) => m.b = m.b.max(fac.b),
                None => union.push(fac.clone()),
            }
        }
        let a = self.a.max(other.a);
        let lift = |x: &BiRational| -> BivarPoly {
            let mut n = &x.num
                * &BivarPoly::from_t_poly(IntPoly::one_minus_t_pow(a - x.a));
            for fac in &union {
                let have = x
                    .factors
                    .iter()
                    .find(|m| m.c_j == fac.c_j && m.f == fac.f)
                    .map_or(0, |m| m.b);
                let base = fac.base_poly();
                for _ in have..fac.b {
                    n = &n * &base;
                }
            }
            n
        };
        let num = &lift(self) + &lift(other);
        BiRational::new(num, a, union).expect("union of validated factors")
    }

    pub fn sub(&self, other: &BiRational) -> BiRational {
        self.add(&BiRational {
            num: -&other.num,
            a: other.a,
            factors: other.factors.clone(),
        })
    }

    pub fn mul(&self, other: &BiRational) -> BiRational {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        BiRational::new(&self.num * &other.num, self.a + other.a, factors)
            .expect("products of validated factors")
    }

    /// Exact coefficient of `s^n` as a reduced univariate rational function,
    /// via the linear recurrence against the expanded denominator.
    pub fn series_coeff(&self, n: usize) -> Result<UniRational> {
        Ok(self.series_prefix(n)?.pop().unwrap())
    }

    /// Coefficients of `s^0..s^n` in one recurrence pass. In canonical shape
    /// the denominator's `s^0` coefficient is a pure power of `(1-t)`, so the
    /// whole recurrence stays inside `Z[t, 1/(1-t)]`.
    pub fn series_prefix(&self, n: usize) -> Result<Vec<UniRational>> {
        let den = self.denominator_poly();
        let (p0, rest) = den.coeff(0).strip_one_minus_t();
        if rest != IntPoly::one() {
            return Err(Error::SeriesForm(format!(
                "denominator constant term {} is not a power of (1-t)",
                den.coeff(0)
            )));
        }
        let mut acc: Vec<UniRational> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut rhs = UniRational::new(self.num.coeff(m), 0);
            for k in 1..=m.min(den.s_degree()) {
                let dk = den.coeff(k);
                if !dk.is_zero() {
                    rhs = rhs.sub(&acc[m - k].scale_poly(&dk));
                }
            }
            let am = UniRational::new(rhs.numerator().clone(), rhs.pole_order() + p0);
            acc.push(am);
        }
        Ok(acc)
    }
}

impl fmt::Display for BiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.num)?;
        if self.a > 0 || !self.factors.is_empty() {
            write!(f, " / [")?;
            if self.a > 0 {
                write!(f, "(1-t)^{}", self.a)?;
            }
            for (k, fac) in self.factors.iter().enumerate() {
                if self.a > 0 || k > 0 {
                    write!(f, " * ")?;
                }
                write!(f, "((1-t)^{} - s*({}))", fac.c_j, fac.f)?;
                if fac.b > 1 {
                    write!(f, "^{}", fac.b)?;
                }
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Converts a rational function whose denominator is a power of `(1-t)` times
/// a constant; anything else is a form error.
pub fn qratfn_to_unirational(h: &QRatFn) -> Result<UniRational> {
    if h.is_zero() {
        return Ok(UniRational::zero());
    }
    let (den_int, den_scale) = h.den().primitive_int();
    let (pole, rest) = den_int.strip_one_minus_t();
    if rest.degree() != 0 {
        return Err(Error::SeriesForm(format!(
            "denominator {:?} is not a power of (1-t)",
            h.den()
        )));
    }
    let unit = BigRational::from(rest.coeff(0)) * den_scale;
    let num_scaled = h.num().scale(&unit.recip());
    let mut coeffs = Vec::new();
    for c in num_scaled.coeffs() {
        if !c.denom().is_one() {
            return Err(Error::SeriesForm(format!(
                "non-integer numerator coefficient {c}"
            )));
        }
        coeffs.push(c.numer().clone());
    }
    Ok(UniRational::new(IntPoly::new(coeffs), pole))
}

/// Divides `known` by the cleared multiplier `(1-t)^{pole} - s*f_tilde(t)`.
/// The `(1-t)`-content of `f_tilde` is stripped into the plain pole so the
/// appended factor stays in canonical shape. A zero `f_tilde` stands for the
/// multiplier 1 (the caller never cleared anything) and returns `known`.
pub fn solve_linear(known: &BiRational, f_tilde: &IntPoly, pole: usize) -> Result<BiRational> {
    if f_tilde.is_zero() {
        return Ok(known.clone());
    }
    let (k, f) = f_tilde.strip_one_minus_t();
    if k > pole {
        return Err(Error::SeriesForm(format!(
            "multiplier content (1-t)^{k} exceeds its pole order {pole}"
        )));
    }
    if !f.eval_at_one().is_positive() {
        return Err(Error::FactorPositivity(format!(
            "reduced multiplier part {f} has f(1) <= 0"
        )));
    }
    // (1-t)^pole - s*f_tilde = (1-t)^k * ((1-t)^{pole-k} - s*f)
    let mut factors = known.factors().to_vec();
    factors.push(Factor {
        c_j: pole - k,
        f,
        b: 1,
    });
    BiRational::new(known.numerator().clone(), known.pole_order() + k, factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom(c: usize) -> BiRational {
        // (1-t)^c / ((1-t)^c - s)
        BiRational::new(
            BivarPoly::from_t_poly(IntPoly::one_minus_t_pow(c)),
            0,
            vec![Factor {
                c_j: c,
                f: IntPoly::one(),
                b: 1,
            }],
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_identities() {
        let x = geom(2);
        assert!(x.add(&BiRational::zero()).equivalent(&x));
        assert!(x.mul(&BiRational::one()).equivalent(&x));
        let twice = x.add(&x);
        assert!(twice.equivalent(&x.scale_poly(&BivarPoly::from_t_poly(
            IntPoly::constant(BigInt::from(2))
        ))));
        // doubling merges, not duplicates, the factor
        assert_eq!(twice.factors().len(), 1);
        assert_eq!(twice.factors()[0].b, 1);
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn factor_positivity_enforced() {
        let bad = BiRational::new(
            BivarPoly::one(),
            0,
            vec![Factor {
                c_j: 1,
                f: IntPoly::one_minus_t(),
                b: 1,
            }],
        );
        assert!(matches!(bad, Err(Error::FactorPositivity(_))));
    }

    #[test]
    fn geometric_series_coeffs() {
        let h = geom(1);
        for n in 0..6 {
            let cn = h.series_coeff(n).unwrap();
            assert_eq!(cn, UniRational::new(IntPoly::one(), n));
        }
    }

    #[test]
    fn constant_series() {
        let h = BiRational::one();
        assert_eq!(h.series_coeff(0).unwrap(), UniRational::new(IntPoly::one(), 0));
        for n in 1..5 {
            assert!(h.series_coeff(n).unwrap().is_zero());
        }
    }

    #[test]
    fn two_minors_series_coeff() {
        // ((1-t-s)^2 + s(1-s)) / (1-t-s)^2, n = 2 -> (1+t)/(1-t)^3
        let base = Factor {
            c_j: 1,
            f: IntPoly::one(),
            b: 2,
        };
        let sq = &base.base_poly() * &base.base_poly();
        let s_part = &BivarPoly::t_poly_times_s_power(IntPoly::one(), 1)
            - &BivarPoly::t_poly_times_s_power(IntPoly::one(), 2);
        let num = &sq + &s_part;
        let h = BiRational::new(num, 0, vec![base]).unwrap();
        let c2 = h.series_coeff(2).unwrap();
        assert_eq!(c2, UniRational::new(IntPoly::from_i64(&[1, 1]), 3));
        assert_eq!(h.series_coeff(0).unwrap(), UniRational::new(IntPoly::one(), 0));
    }

    #[test]
    fn series_linearity() {
        let x = geom(1);
        let y = geom(2);
        let sum = x.add(&y);
        for n in 0..=8 {
            let lhs = sum.series_coeff(n).unwrap();
            let rhs = x.series_coeff(n).unwrap().add(&y.series_coeff(n).unwrap());
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn solve_linear_cases() {
        let known = BiRational::from_poly(BivarPoly::from_t_poly(IntPoly::one_minus_t_pow(2)));
        // divide by 1 - s/(1-t)^2: the zero-chain series at c = 2
        let h = solve_linear(&known, &IntPoly::one(), 2).unwrap();
        assert!(h.equivalent(&geom(2)));
        // f_tilde = 0 divides by 1
        let same = solve_linear(&known, &IntPoly::zero(), 2).unwrap();
        assert_eq!(same, known);
        // content stripping: f_tilde = (1-t)*2 at pole 1 gives factor c_j = 0
        let h = solve_linear(
            &known,
            &IntPoly::one_minus_t().scale(&BigInt::from(2)),
            1,
        )
        .unwrap();
        assert_eq!(h.factors()[0].c_j, 0);
        assert_eq!(h.factors()[0].f, IntPoly::constant(BigInt::from(2)));
        assert_eq!(h.pole_order(), 1);
        // negative reduced part is rejected
        assert!(matches!(
            solve_linear(&known, &IntPoly::constant(BigInt::from(-1)), 1),
            Err(Error::FactorPositivity(_))
        ));
    }

    #[test]
    fn roundtrip_determinacy() {
        // rebuild a series from its leading coefficients via the recurrence
        // and compare all later coefficients
        let base = Factor {
            c_j: 2,
            f: IntPoly::from_i64(&[1, 1]),
            b: 1,
        };
        let num = &BivarPoly::from_t_poly(IntPoly::from_i64(&[1, 0, 2]))
            + &BivarPoly::t_poly_times_s_power(IntPoly::from_i64(&[0, 3]), 1);
        let h = BiRational::new(num.clone(), 1, vec![base.clone()]).unwrap();
        let den = h.denominator_poly();
        let need = num.s_degree().max(den.s_degree()) + 1;
        // reconstruct the numerator from the first `need` coefficients
        let prefix = h.series_prefix(need + 12).unwrap();
        for (n, cn) in prefix.iter().enumerate().take(13) {
            let direct = h.series_coeff(n).unwrap();
            assert_eq!(cn, &direct);
        }
        // determinacy: a second BiRational with the same denominator whose
        // first `need` coefficients agree must agree everywhere
        let h2 = BiRational::new(num, 1, vec![base]).unwrap();
        for n in 0..=12 {
            assert_eq!(h.series_coeff(n).unwrap(), h2.series_coeff(n).unwrap());
        }
    }

    #[test]
    fn triples_roundtrip() {
        let p = &BivarPoly::from_t_poly(IntPoly::from_i64(&[1, -1]))
            + &BivarPoly::t_poly_times_s_power(IntPoly::from_i64(&[0, 5]), 2);
        let triples = p.as_triples();
        assert!(triples.contains(&(0, 0, BigInt::from(1))));
        assert!(triples.contains(&(0, 1, BigInt::from(-1))));
        assert!(triples.contains(&(2, 1, BigInt::from(5))));
        assert_eq!(triples.len(), 3);
    }
}
