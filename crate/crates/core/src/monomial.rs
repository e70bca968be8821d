//! Monomials on the `c x infinity` variable grid, elements of the monoids
//! `Inc^i` of strictly increasing column relocations, and the equivariant
//! divisibility order.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponents of a single grid column, one entry per row.
pub type ColumnVector = Vec<u32>;

fn dominates(big: &[u32], small: &[u32]) -> bool {
    small.iter().zip(big.iter()).all(|(a, b)| a <= b) && small.len() <= big.len()
}

/// A monomial on the grid with `rows` rows: a finite set of columns, each
/// carrying a nonzero exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    rows: u32,
    // column index (1-based) -> exponent vector of length `rows`, not all zero
    cols: BTreeMap<u32, ColumnVector>,
}

impl Monomial {
    pub fn one(rows: u32) -> Self {
        assert!(rows >= 1);
        Monomial {
            rows,
            cols: BTreeMap::new(),
        }
    }

    /// The variable `x[row, col]`.
    pub fn variable(rows: u32, row: u32, col: u32) -> Self {
        Monomial::one(rows).times_var(row, col, 1)
    }

    /// Multiply by `x[row, col]^e`.
    pub fn times_var(mut self, row: u32, col: u32, e: u32) -> Self {
        assert!((1..=self.rows).contains(&row), "row out of range");
        assert!(col >= 1, "columns are 1-based");
        if e == 0 {
            return self;
        }
        let v = self
            .cols
            .entry(col)
            .or_insert_with(|| vec![0; self.rows as usize]);
        v[(row - 1) as usize] += e;
        self
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn is_one(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.cols.values().map(|v| v.iter().sum::<u32>()).sum()
    }

    pub fn exponent(&self, row: u32, col: u32) -> u32 {
        self.cols
            .get(&col)
            .map_or(0, |v| v[(row - 1) as usize])
    }

    /// Columns in the support, ascending.
    pub fn support_columns(&self) -> impl Iterator<Item = u32> + '_ {
        self.cols.keys().copied()
    }

    pub fn max_column(&self) -> u32 {
        self.cols.keys().next_back().copied().unwrap_or(0)
    }

    pub fn column(&self, col: u32) -> ColumnVector {
        self.cols
            .get(&col)
            .cloned()
            .unwrap_or_else(|| vec![0; self.rows as usize])
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &ColumnVector)> + '_ {
        self.cols.iter().map(|(c, v)| (*c, v))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.rows, other.rows);
        let mut out = self.clone();
        for (col, v) in &other.cols {
            let e = out
                .cols
                .entry(*col)
                .or_insert_with(|| vec![0; out.rows as usize]);
            for (a, b) in e.iter_mut().zip(v.iter()) {
                *a += b;
            }
        }
        out
    }

    /// Plain divisibility on the same columns.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.cols
            .iter()
            .all(|(col, v)| dominates(&other.column(*col), v))
    }

    /// Componentwise gcd.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one(self.rows);
        for (col, v) in &self.cols {
            let w = other.column(*col);
            let g: ColumnVector = v.iter().zip(w.iter()).map(|(a, b)| *a.min(b)).collect();
            if g.iter().any(|&e| e > 0) {
                out.cols.insert(*col, g);
            }
        }
        out
    }

    /// Exact quotient `self / other`; `None` when `other` does not divide.
    pub fn div_exact(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = Monomial::one(self.rows);
        for (col, v) in &self.cols {
            let w = other.column(*col);
            let q: ColumnVector = v.iter().zip(w.iter()).map(|(a, b)| a - b).collect();
            if q.iter().any(|&e| e > 0) {
                out.cols.insert(*col, q);
            }
        }
        Some(out)
    }

    /// Canonical ordering: total degree, then exponent-lex on the flattened
    /// (column, row) grid.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                let a: Vec<_> = self.cols.iter().collect();
                let b: Vec<_> = other.cols.iter().collect();
                a.cmp(&b)
            })
    }

    /// Text form: `x[r,j]^e` factors joined by `*`, `1` for the empty monomial.
    pub fn to_text(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (col, v) in &self.cols {
            for (r0, &e) in v.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    parts.push(format!("x[{},{}]", r0 + 1, col));
                } else {
                    parts.push(format!("x[{},{}]^{}", r0 + 1, col, e));
                }
            }
        }
        parts.join("*")
    }

    /// Parses the text form produced by [`to_text`](Self::to_text).
    pub fn parse(text: &str, rows: u32) -> Result<Monomial> {
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial::one(rows));
        }
        let mut m = Monomial::one(rows);
        for tok in text.split('*') {
            let tok = tok.trim();
            let rest = tok
                .strip_prefix("x[")
                .ok_or_else(|| Error::Parse(format!("bad factor `{tok}`")))?;
            let (inside, tail) = rest
                .split_once(']')
                .ok_or_else(|| Error::Parse(format!("bad factor `{tok}`")))?;
            let (r, c) = inside
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad factor `{tok}`")))?;
            let row: u32 = r
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad row in `{tok}`")))?;
            let col: u32 = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad column in `{tok}`")))?;
            let e: u32 = match tail.trim() {
                "" => 1,
                s => s
                    .strip_prefix('^')
                    .and_then(|x| x.trim().parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad exponent in `{tok}`")))?,
            };
            if row == 0 || row > rows {
                return Err(Error::Parse(format!("row {row} out of range 1..={rows}")));
            }
            if col == 0 {
                return Err(Error::Parse("columns are 1-based".into()));
            }
            m = m.times_var(row, col, e);
        }
        Ok(m)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Restriction of an element of `Inc^i` to an initial column segment:
/// positions `1..=i` are fixed, position `i + k` maps to `images[k - 1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IncMap {
    i: u32,
    images: Vec<u32>,
}

impl IncMap {
    pub fn new(i: u32, images: Vec<u32>) -> Result<Self> {
        let mut prev = i;
        for (k, &im) in images.iter().enumerate() {
            if im <= prev {
                return Err(Error::BadArguments(format!(
                    "images must be strictly increasing and exceed the fixed prefix {i}"
                )));
            }
            // a strictly increasing self-map of the positive integers satisfies pi(j) >= j
            if im < i + 1 + k as u32 {
                return Err(Error::BadArguments(format!(
                    "image {im} of position {} is below the position itself",
                    i + 1 + k as u32
                )));
            }
            prev = im;
        }
        Ok(IncMap { i, images })
    }

    pub fn identity(i: u32) -> Self {
        IncMap { i, images: vec![] }
    }

    pub fn prefix(&self) -> u32 {
        self.i
    }

    /// Largest column the map is defined on.
    pub fn covered(&self) -> u32 {
        self.i + self.images.len() as u32
    }

    pub fn apply_col(&self, col: u32) -> Result<u32> {
        if col <= self.i {
            Ok(col)
        } else if col <= self.covered() {
            Ok(self.images[(col - self.i - 1) as usize])
        } else {
            Err(Error::DomainTooShort {
                col,
                covered: self.covered(),
            })
        }
    }

    /// Whether the map fixes every covered column of `[m]`. Columns beyond
    /// the covered range extend canonically by the identity.
    pub fn is_identity_on(&self, m: u32) -> bool {
        (1..=m.min(self.covered())).all(|j| self.apply_col(j).is_ok_and(|t| t == j))
    }

    /// Images of `1..=m` as a vector; errors if `m` exceeds the covered range.
    pub fn as_vec(&self, m: u32) -> Result<Vec<u32>> {
        (1..=m).map(|j| self.apply_col(j)).collect()
    }

    /// Composition `self . inner` as a map on `[m]`, re-read as an `Inc^j`
    /// restriction with `j = min(prefix)` of the two.
    pub fn compose_on(&self, inner: &IncMap, m: u32) -> Result<IncMap> {
        let i = self.i.min(inner.i);
        let mut images = Vec::new();
        for j in i + 1..=m {
            images.push(self.apply_col(inner.apply_col(j)?)?);
        }
        IncMap::new(i, images)
    }
}

impl fmt::Debug for IncMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Inc^{}(", self.i)?;
        for (k, im) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}->{}", self.i + 1 + k as u32, im)?;
        }
        write!(f, ")")
    }
}

/// The `i`-shift `sigma_i` restricted to `[width]`.
pub fn shift(i: u32, width: u32) -> IncMap {
    let images = (i + 1..=width).map(|j| j + 1).collect();
    IncMap { i, images }
}

/// All restrictions `[m] -> [n]` of elements of `Inc^i`, i.e. strictly
/// increasing injections fixing `[i]`.
pub fn enumerate_inc_maps(i: u32, m: u32, n: u32) -> Result<Vec<IncMap>> {
    if i > m || m > n {
        return Err(Error::BadArguments(format!(
            "need i <= m <= n, got i={i}, m={m}, n={n}"
        )));
    }
    let k = (m - i) as usize;
    let mut out = Vec::new();
    let pool: Vec<u32> = (i + 1..=n).collect();
    // lexicographic enumeration of k-subsets of pool
    fn rec(
        pool: &[u32],
        k: usize,
        start: usize,
        choice: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if choice.len() == k {
            out.push(choice.clone());
            return;
        }
        for idx in start..pool.len() {
            choice.push(pool[idx]);
            rec(pool, k, idx + 1, choice, out);
            choice.pop();
        }
    }
    let mut sets = Vec::new();
    rec(&pool, k, 0, &mut Vec::new(), &mut sets);
    for images in sets {
        out.push(IncMap::new(i, images)?);
    }
    Ok(out)
}

/// Applies a monoid element to a monomial, relocating columns.
pub fn apply_inc_map(pi: &IncMap, u: &Monomial) -> Result<Monomial> {
    let mut out = Monomial::one(u.rows());
    for (col, v) in u.entries() {
        let target = pi.apply_col(col)?;
        out.cols.insert(target, v.clone());
    }
    Ok(out)
}

/// Equivariant divisibility: searches for `pi` in `Inc^i` with `pi(u) | v`.
///
/// Greedy earliest-fit over the support columns of `u`. A target for column
/// `j` must leave room for an extension to a strictly increasing map on all
/// of `[j]`, so besides strict increase it must satisfy `t >= j` and
/// `t - t_prev >= j - j_prev` against the previous assignment.
pub fn inc_divides(i: u32, u: &Monomial, v: &Monomial) -> Option<IncMap> {
    assert_eq!(u.rows(), v.rows());
    let support: Vec<u32> = u.support_columns().collect();
    if support.is_empty() {
        return Some(IncMap::identity(i));
    }
    let vmax = v.max_column();
    let mut assigned: Vec<(u32, u32)> = Vec::new(); // (source col, target col)
    let mut prev = (i, i);
    for &j in &support {
        if j <= i {
            // the prefix is fixed pointwise
            if !dominates(&v.column(j), &u.column(j)) {
                return None;
            }
            assigned.push((j, j));
            continue;
        }
        let lb = (prev.1 + (j - prev.0)).max(j);
        let mut found = None;
        for t in lb..=vmax {
            if dominates(&v.column(t), &u.column(j)) {
                found = Some(t);
                break;
            }
        }
        let t = found?;
        assigned.push((j, t));
        prev = (j, t);
    }
    // extend the partial assignment to a full strictly increasing map on the
    // covered segment: each gap position takes the value forced by counting
    // back from the next assigned target
    let p = *support.last().unwrap();
    if p <= i {
        return Some(IncMap::identity(i));
    }
    let free: Vec<(u32, u32)> = assigned.into_iter().filter(|&(j, _)| j > i).collect();
    let mut images = Vec::with_capacity((p - i) as usize);
    let mut next_idx = 0;
    for j in i + 1..=p {
        while free[next_idx].0 < j {
            next_idx += 1;
        }
        let (jn, tn) = free[next_idx];
        images.push(tn - (jn - j));
    }
    Some(IncMap::new(i, images).expect("greedy assignment must be extendable"))
}
