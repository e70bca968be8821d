//! Finite-width monomial ideals given by their minimal generators.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use num_bigint::BigInt;
use std::fmt;

/// A monomial ideal in the width-`width` grid ring, stored by its minimal
/// (interreduced) generating set in canonical order. The unit ideal is
/// `gens = [1]`, the zero ideal `gens = []`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    rows: u32,
    width: u32,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(rows: u32, width: u32) -> Self {
        MonomialIdeal {
            rows,
            width,
            gens: vec![],
        }
    }

    pub fn unit(rows: u32, width: u32) -> Self {
        MonomialIdeal {
            rows,
            width,
            gens: vec![Monomial::one(rows)],
        }
    }

    /// Interreduces an arbitrary generating list into canonical form.
    pub fn new(gens: Vec<Monomial>, rows: u32, width: u32) -> Result<Self> {
        for g in &gens {
            assert_eq!(g.rows(), rows);
            let mc = g.max_column();
            if mc > width {
                return Err(Error::WidthViolation { col: mc, width });
            }
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        'outer: for g in &gens {
            for h in &gens {
                if h.divides(g) && h != g {
                    // keep only one representative of equal monomials
                    continue 'outer;
                }
            }
            if !minimal.contains(g) {
                minimal.push(g.clone());
            }
        }
        minimal.sort_by(|a, b| a.canonical_cmp(b));
        Ok(MonomialIdeal {
            rows,
            width,
            gens: minimal,
        })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The same generators viewed at a larger width.
    pub fn widen(&self, width: u32) -> MonomialIdeal {
        assert!(width >= self.width);
        MonomialIdeal {
            rows: self.rows,
            width,
            gens: self.gens.clone(),
        }
    }

    /// Colon ideal `self : m`, computed generator by generator.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.div_exact(&g.gcd(m)).expect("gcd divides"))
            .collect();
        MonomialIdeal::new(gens, self.rows, self.width).expect("columns can only shrink")
    }

    /// Ideal sum.
    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.rows != other.rows {
            return Err(Error::WidthMismatch(self.rows, other.rows));
        }
        if self.width != other.width {
            return Err(Error::WidthMismatch(self.width, other.width));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(gens, self.rows, self.width)
    }

    /// Maximum degree of a minimal generator; errors on the zero ideal.
    pub fn eplus(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.gens.iter().map(|g| g.degree()).max().unwrap())
    }

    /// `q(J) = sum_{j=0}^{e^+(J)} dim_K [K[X_width]/J]_j`.
    pub fn q_invariant(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let h = crate::hilbert::hilbert_quotient(self);
        let d = self.eplus()? as usize;
        Ok(crate::hilbert::series_prefix(&h, d).into_iter().sum())
    }

    pub fn to_text_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_text()).collect()
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.to_text_gens().join(", "))
    }
}
