//! Exact Hilbert series of `K[X_n]/J` for a finite-width monomial ideal:
//! the independent per-width oracle the equivariant engine is checked against.

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::univar::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// `numerator(t) / (1-t)^pole`, fully reduced at `t = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniRational {
    num: IntPoly,
    pole: usize,
}

impl UniRational {
    pub fn new(num: IntPoly, pole: usize) -> Self {
        if num.is_zero() {
            return UniRational {
                num,
                pole: 0,
            };
        }
        let (k, rest) = num.strip_one_minus_t();
        let cancel = k.min(pole);
        let mut num = rest;
        for _ in 0..k - cancel {
            num = &num * &IntPoly::one_minus_t();
        }
        UniRational {
            num,
            pole: pole - cancel,
        }
    }

    pub fn zero() -> Self {
        UniRational {
            num: IntPoly::zero(),
            pole: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn pole_order(&self) -> usize {
        self.pole
    }

    pub fn add(&self, other: &UniRational) -> UniRational {
        let pole = self.pole.max(other.pole);
        let a = &self.num * &IntPoly::one_minus_t_pow(pole - self.pole);
        let b = &other.num * &IntPoly::one_minus_t_pow(pole - other.pole);
        UniRational::new(&a + &b, pole)
    }

    pub fn sub(&self, other: &UniRational) -> UniRational {
        self.add(&UniRational {
            num: -&other.num,
            pole: other.pole,
        })
    }

    pub fn scale_poly(&self, p: &IntPoly) -> UniRational {
        UniRational::new(&self.num * p, self.pole)
    }
}

impl fmt::Display for UniRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pole == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / (1-t)^{}", self.num, self.pole)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PivotStrategy {
    /// Most frequent variable among the generators.
    MostFrequent,
    /// First eligible variable in (row, column) order.
    First,
}

/// Exact Hilbert series of `K[X_width]/J`.
pub fn hilbert_quotient(j: &MonomialIdeal) -> UniRational {
    hilbert_quotient_with(j, PivotStrategy::MostFrequent)
}

pub fn hilbert_quotient_with(j: &MonomialIdeal, strategy: PivotStrategy) -> UniRational {
    let mut memo = HashMap::new();
    quotient_rec(j, strategy, &mut memo)
}

fn is_pure_power(g: &Monomial) -> bool {
    let mut vars = 0;
    for (_, col) in g.entries() {
        vars += col.iter().filter(|&&e| e > 0).count();
    }
    vars <= 1
}

fn quotient_rec(
    j: &MonomialIdeal,
    strategy: PivotStrategy,
    memo: &mut HashMap<MonomialIdeal, UniRational>,
) -> UniRational {
    if let Some(h) = memo.get(j) {
        return h.clone();
    }
    let total_vars = (j.rows() * j.width()) as usize;
    let result = if j.is_unit() {
        UniRational::zero()
    } else if j.gens().iter().all(is_pure_power) {
        // pure powers of distinct variables: product formula
        let mut num = IntPoly::one();
        for g in j.gens() {
            num = &num * &IntPoly::one_minus_t_to_the(g.degree() as usize);
        }
        UniRational::new(num, total_vars)
    } else {
        let (row, col) = pick_pivot(j, strategy);
        let x = Monomial::variable(j.rows(), row, col);
        let colon = j.colon(&x);
        let plus = j
            .add(&MonomialIdeal::new(vec![x], j.rows(), j.width()).unwrap())
            .unwrap();
        let h_colon = quotient_rec(&colon, strategy, memo);
        let h_plus = quotient_rec(&plus, strategy, memo);
        h_colon
            .scale_poly(&IntPoly::monomial(BigInt::one(), 1))
            .add(&h_plus)
    };
    memo.insert(j.clone(), result.clone());
    result
}

fn pick_pivot(j: &MonomialIdeal, strategy: PivotStrategy) -> (u32, u32) {
    // eligible pivots are variables occurring in some non-pure-power generator
    let mut counts: HashMap<(u32, u32), usize> = HashMap::new();
    let mut eligible: Vec<(u32, u32)> = Vec::new();
    for g in j.gens() {
        let pure = is_pure_power(g);
        for (c, colvec) in g.entries() {
            for (r0, &e) in colvec.iter().enumerate() {
                if e > 0 {
                    let key = (r0 as u32 + 1, c);
                    *counts.entry(key).or_insert(0) += 1;
                    if !pure && !eligible.contains(&key) {
                        eligible.push(key);
                    }
                }
            }
        }
    }
    eligible.sort();
    match strategy {
        PivotStrategy::First => eligible[0],
        PivotStrategy::MostFrequent => {
            let mut best = eligible[0];
            for &v in &eligible {
                if counts[&v] > counts[&best] {
                    best = v;
                }
            }
            best
        }
    }
}

/// `(Krull dimension, degree)` of the quotient: pole order and numerator at 1.
pub fn dim_and_degree(j: &MonomialIdeal) -> (usize, BigInt) {
    let h = hilbert_quotient(j);
    (h.pole_order(), h.numerator().eval_at_one())
}

/// First `bound + 1` power-series coefficients of a reduced series.
pub fn series_prefix(h: &UniRational, bound: usize) -> Vec<BigInt> {
    let a = h.pole_order();
    // 1/(1-t)^a = sum_j C(j+a-1, a-1) t^j
    let mut binom = Vec::with_capacity(bound + 1);
    let mut cur = BigInt::one();
    for jj in 0..=bound {
        if a == 0 {
            binom.push(if jj == 0 { BigInt::one() } else { BigInt::zero() });
        } else {
            binom.push(cur.clone());
            cur = cur * BigInt::from(jj as u64 + a as u64) / BigInt::from(jj as u64 + 1);
        }
    }
    (0..=bound)
        .map(|d| {
            let mut acc = BigInt::zero();
            for k in 0..=d {
                let c = h.numerator().coeff(k);
                if !c.is_zero() {
                    acc += c * &binom[d - k];
                }
            }
            acc
        })
        .collect()
}
