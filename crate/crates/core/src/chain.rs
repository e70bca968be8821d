//! Shift-invariant chains of monomial ideals: specification, materialization,
//! stability certification, and prefix-index promotion.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{
    apply_inc_map, enumerate_inc_maps, shift, Monomial,
};

/// An `Inc^i`-invariant chain of ideals given by a seed at width `r`.
/// Widths below `r` default to zero ideals (a normalized chain); an explicit
/// prefix `I_1..I_{r-1}` may be supplied instead.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainSpec {
    c: u32,
    i: u32,
    r: u32,
    seed: MonomialIdeal,
    prefix: Option<Vec<MonomialIdeal>>,
}

impl ChainSpec {
    pub fn new(
        c: u32,
        i: u32,
        r: u32,
        seed: MonomialIdeal,
        prefix: Option<Vec<MonomialIdeal>>,
    ) -> Result<Self> {
        if r < 1 {
            return Err(Error::BadArguments("seed width must be at least 1".into()));
        }
        if seed.rows() != c {
            return Err(Error::WidthMismatch(seed.rows(), c));
        }
        if seed.width() != r {
            return Err(Error::WidthMismatch(seed.width(), r));
        }
        if prefix.is_none() && seed.is_zero() {
            return Err(Error::BadArguments(
                "normalized chain needs a nonzero seed".into(),
            ));
        }
        if let Some(pre) = &prefix {
            if pre.len() != (r - 1) as usize {
                return Err(Error::BadArguments(format!(
                    "prefix must list widths 1..{}, got {} ideals",
                    r - 1,
                    pre.len()
                )));
            }
            for (k, p) in pre.iter().enumerate() {
                let n = k as u32 + 1;
                if p.rows() != c {
                    return Err(Error::WidthMismatch(p.rows(), c));
                }
                if p.width() != n {
                    return Err(Error::WidthMismatch(p.width(), n));
                }
            }
            // consecutive one-step invariance, last prefix member into the seed
            for (k, p) in pre.iter().enumerate() {
                let n = k as u32 + 1;
                let next = if n + 1 < r { &pre[k + 1] } else { &seed };
                check_invariant_step(i, p, next)?;
            }
        }
        Ok(ChainSpec {
            c,
            i,
            r,
            seed,
            prefix,
        })
    }

    pub fn normalized(c: u32, i: u32, r: u32, seed: MonomialIdeal) -> Result<Self> {
        ChainSpec::new(c, i, r, seed, None)
    }

    pub fn rows(&self) -> u32 {
        self.c
    }

    pub fn monoid_prefix(&self) -> u32 {
        self.i
    }

    pub fn seed_width(&self) -> u32 {
        self.r
    }

    pub fn seed(&self) -> &MonomialIdeal {
        &self.seed
    }

    pub fn prefix(&self) -> Option<&[MonomialIdeal]> {
        self.prefix.as_deref()
    }

    pub fn is_normalized(&self) -> bool {
        self.prefix.is_none()
    }

    /// The normalized chain with the same seed, dropping any user prefix.
    pub fn normalize(&self) -> ChainSpec {
        ChainSpec {
            prefix: None,
            ..self.clone()
        }
    }

    /// `I_n` of the chain: prefix or zero below `r`, the seed at `r`, and the
    /// iterated one-step closure above.
    pub fn materialize(&self, n: u32) -> Result<MonomialIdeal> {
        if n < 1 {
            return Err(Error::BadArguments("width must be at least 1".into()));
        }
        if n < self.r {
            return Ok(match &self.prefix {
                Some(pre) => pre[(n - 1) as usize].clone(),
                None => MonomialIdeal::zero(self.c, n),
            });
        }
        let mut cur = self.seed.clone();
        for m in self.r..n {
            cur = one_step_closure(self.i, &cur, m)?;
        }
        Ok(cur)
    }
}

/// `< Inc^i_{m,m+1}(I_m) >` at width `m+1`, generated by the shift images
/// `sigma_j(G(I_m))` for `i <= j <= m`.
pub fn one_step_closure(i: u32, ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    assert_eq!(ideal.width(), m);
    let mut gens = Vec::new();
    for j in i..=m {
        let s = shift(j, m);
        for g in ideal.gens() {
            gens.push(apply_inc_map(&s, g)?);
        }
    }
    gens.extend(ideal.gens().iter().cloned());
    MonomialIdeal::new(gens, ideal.rows(), m + 1)
}

/// Direct closure `< Inc^i_{m,n}(I_m) >` by full enumeration of the monoid
/// restrictions; quadratic in the map count, used for cross-checks.
pub fn direct_closure(i: u32, ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    let m = ideal.width();
    let mut gens = Vec::new();
    for pi in enumerate_inc_maps(i, m, n)? {
        for g in ideal.gens() {
            gens.push(apply_inc_map(&pi, g)?);
        }
    }
    MonomialIdeal::new(gens, ideal.rows(), n)
}

fn check_invariant_step(i: u32, cur: &MonomialIdeal, next: &MonomialIdeal) -> Result<()> {
    let m = cur.width();
    for j in i..=m {
        let s = shift(j, m);
        for g in cur.gens() {
            let img = apply_inc_map(&s, g)?;
            if !next.contains(&img) {
                return Err(Error::InvarianceViolation {
                    width: m,
                    generator: g.to_text(),
                    map: format!("{s:?}"),
                });
            }
        }
    }
    Ok(())
}

/// Least `r` with `< Inc^i_{m,m+1}(I_m) > = I_{m+1}` for every consecutive
/// pair from `r` on; one-step checks suffice because `Inc^i_{m,n}` factors
/// through consecutive widths. Validates invariance of the whole list first.
pub fn stability_index(chain: &[MonomialIdeal], i: u32) -> Result<Option<u32>> {
    if chain.is_empty() {
        return Err(Error::BadArguments("empty chain".into()));
    }
    for (k, cur) in chain.iter().enumerate() {
        assert_eq!(cur.width(), k as u32 + 1);
        if k + 1 < chain.len() {
            check_invariant_step(i, cur, &chain[k + 1])?;
        }
    }
    // scan from the top down for the last width where the one-step closure
    // fails to regenerate
    let mut r = 1u32;
    for (k, cur) in chain.iter().enumerate().take(chain.len() - 1) {
        let m = k as u32 + 1;
        let closed = one_step_closure(i, cur, m)?;
        if closed != chain[k + 1] {
            r = m + 1;
        }
    }
    if r as usize == chain.len() && chain.len() > 1 {
        // the last pair already failed; nothing above it is certified
        return Ok(None);
    }
    Ok(Some(r))
}

/// Views an `Inc^i`-stable chain as `Inc^{i+1}`-invariant. The certified
/// index is `r` when the narrower monoid already regenerates `I_{r+1}` from
/// the seed, and `r+1` otherwise.
pub fn promote_monoid(chain: &ChainSpec) -> Result<ChainSpec> {
    let i = chain.monoid_prefix();
    let r = chain.seed_width();
    let next = chain.materialize(r + 1)?;
    let promoted_step = one_step_closure(i + 1, chain.seed(), r)?;
    if promoted_step == next {
        ChainSpec::normalized(chain.rows(), i + 1, r, chain.seed().clone())
    } else {
        ChainSpec::normalized(chain.rows(), i + 1, r + 1, next)
    }
}

/// Checks `Inc_{m,n} . f` is contained in `Sym(n) . f` by enumerating both
/// orbits; tiny widths only.
pub fn sym_orbit_contains_inc(f: &Monomial, m: u32, n: u32) -> Result<bool> {
    if n > 6 || m > n || f.max_column() > m {
        return Err(Error::BadArguments(
            "orbit enumeration supports support width <= m <= n <= 6".into(),
        ));
    }
    let mut sym_orbit: Vec<Monomial> = Vec::new();
    let mut perm: Vec<u32> = (1..=n).collect();
    permutohedron_heap(&mut perm, &mut |p: &[u32]| {
        let mut img = Monomial::one(f.rows());
        for (col, v) in f.entries() {
            let target = p[(col - 1) as usize];
            for (r0, &e) in v.iter().enumerate() {
                if e > 0 {
                    img = img.times_var(r0 as u32 + 1, target, e);
                }
            }
        }
        if !sym_orbit.contains(&img) {
            sym_orbit.push(img);
        }
    });
    for pi in enumerate_inc_maps(0, m, n)? {
        let img = apply_inc_map(&pi, f)?;
        if !sym_orbit.contains(&img) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn permutohedron_heap(items: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    fn rec(items: &mut Vec<u32>, k: usize, visit: &mut dyn FnMut(&[u32])) {
        if k == 1 {
            visit(items);
            return;
        }
        for j in 0..k {
            rec(items, k - 1, visit);
            if k.is_multiple_of(2) {
                items.swap(j, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let k = items.len();
    rec(items, k, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(rows: u32, vars: &[(u32, u32, u32)]) -> Monomial {
        let mut m = Monomial::one(rows);
        for &(r, c, e) in vars {
            m = m.times_var(r, c, e);
        }
        m
    }

    fn ideal(rows: u32, width: u32, gens: &[&[(u32, u32, u32)]]) -> MonomialIdeal {
        MonomialIdeal::new(gens.iter().map(|g| mono(rows, g)).collect(), rows, width).unwrap()
    }

    #[test]
    fn materialize_full_orbit_of_variable() {
        let chain =
            ChainSpec::normalized(1, 0, 1, ideal(1, 1, &[&[(1, 1, 1)]])).unwrap();
        let i3 = chain.materialize(3).unwrap();
        assert_eq!(
            i3,
            ideal(1, 3, &[&[(1, 1, 1)], &[(1, 2, 1)], &[(1, 3, 1)]])
        );
        assert!(chain.materialize(0).is_err());
    }

    #[test]
    fn materialize_fixed_prefix_monoid() {
        let chain =
            ChainSpec::normalized(1, 1, 2, ideal(1, 2, &[&[(1, 2, 1)]])).unwrap();
        let i3 = chain.materialize(3).unwrap();
        assert_eq!(i3, ideal(1, 3, &[&[(1, 2, 1)], &[(1, 3, 1)]]));
    }

    #[test]
    fn materialize_two_row_orbit() {
        let chain = ChainSpec::normalized(2, 0, 2, ideal(2, 2, &[&[(1, 1, 1), (2, 2, 1)]]))
            .unwrap();
        let i3 = chain.materialize(3).unwrap();
        let expect = ideal(
            2,
            3,
            &[
                &[(1, 1, 1), (2, 2, 1)],
                &[(1, 1, 1), (2, 3, 1)],
                &[(1, 2, 1), (2, 3, 1)],
            ],
        );
        assert_eq!(i3, expect);
        // cross-check against brute-force enumeration of Inc_{2,3}
        assert_eq!(direct_closure(0, chain.seed(), 3).unwrap(), expect);
    }

    #[test]
    fn one_step_equals_direct_closure() {
        let seeds = vec![
            (0u32, ideal(1, 1, &[&[(1, 1, 2)]])),
            (0, ideal(2, 2, &[&[(1, 1, 1), (2, 2, 1)], &[(1, 2, 2)]])),
            (1, ideal(1, 2, &[&[(1, 1, 1), (1, 2, 1)]])),
            (2, ideal(2, 3, &[&[(1, 3, 1), (2, 1, 1)]])),
        ];
        for (i, seed) in seeds {
            let r = seed.width();
            let chain = ChainSpec::normalized(seed.rows(), i, r, seed.clone()).unwrap();
            for n in r..=r + 3 {
                assert_eq!(
                    chain.materialize(n).unwrap(),
                    direct_closure(i, &seed, n).unwrap(),
                    "i={i}, n={n}"
                );
            }
        }
    }

    #[test]
    fn chain_is_ascending() {
        let chain = ChainSpec::normalized(2, 1, 2, ideal(2, 2, &[&[(1, 1, 1), (2, 2, 1)]]))
            .unwrap();
        for n in 1..=5 {
            let cur = chain.materialize(n).unwrap();
            let next = chain.materialize(n + 1).unwrap();
            for g in cur.gens() {
                assert!(next.contains(g));
            }
        }
    }

    #[test]
    fn stability_of_normalized_chain() {
        let chain =
            ChainSpec::normalized(1, 0, 2, ideal(1, 2, &[&[(1, 1, 1), (1, 2, 1)]])).unwrap();
        let list: Vec<_> = (1..=5).map(|n| chain.materialize(n).unwrap()).collect();
        assert_eq!(stability_index(&list, 0).unwrap(), Some(2));
    }

    #[test]
    fn stability_of_zero_chain() {
        let list: Vec<_> = (1..=4).map(|n| MonomialIdeal::zero(2, n)).collect();
        assert_eq!(stability_index(&list, 0).unwrap(), Some(1));
    }

    #[test]
    fn stability_of_all_products_chain() {
        // I_n = <x1j x2k : j,k <= n> stabilizes at 2 for i = 0
        let list: Vec<_> = (1..=4)
            .map(|n| {
                let gens: Vec<_> = (1..=n)
                    .flat_map(|j| (1..=n).map(move |k| mono(2, &[(1, j, 1), (2, k, 1)])))
                    .collect();
                MonomialIdeal::new(gens, 2, n).unwrap()
            })
            .collect();
        assert_eq!(stability_index(&list, 0).unwrap(), Some(2));
    }

    #[test]
    fn stability_not_found_and_violation() {
        // constant chain <x_{1,1}> is invariant only for i >= 1
        let list: Vec<_> = (1..=3)
            .map(|n| ideal(1, n, &[&[(1, 1, 1)]]))
            .collect();
        assert!(matches!(
            stability_index(&list, 0),
            Err(Error::InvarianceViolation { .. })
        ));
        assert_eq!(stability_index(&list, 1).unwrap(), Some(1));

        // a chain that only stabilizes past the window end
        let list = vec![
            MonomialIdeal::zero(1, 1),
            MonomialIdeal::zero(1, 2),
            ideal(1, 3, &[&[(1, 3, 2)]]),
        ];
        assert_eq!(stability_index(&list, 0).unwrap(), None);
    }

    #[test]
    fn promote_variable_chain() {
        let chain = ChainSpec::normalized(1, 0, 1, ideal(1, 1, &[&[(1, 1, 1)]])).unwrap();
        let up = promote_monoid(&chain).unwrap();
        assert_eq!(up.monoid_prefix(), 1);
        assert_eq!(up.seed_width(), 2);
        assert_eq!(up.seed(), &ideal(1, 2, &[&[(1, 1, 1)], &[(1, 2, 1)]]));
    }

    #[test]
    fn promote_prefix_supported_chain() {
        // generators fixed by every element of Inc^1: index stays r
        let chain = ChainSpec::normalized(1, 1, 1, ideal(1, 1, &[&[(1, 1, 2)]])).unwrap();
        let up = promote_monoid(&chain).unwrap();
        assert_eq!(up.monoid_prefix(), 2);
        assert_eq!(up.seed_width(), 1);
    }

    #[test]
    fn promote_tensor_chain() {
        let chain =
            ChainSpec::normalized(2, 0, 1, ideal(2, 1, &[&[(1, 1, 1), (2, 1, 1)]])).unwrap();
        let up = promote_monoid(&chain).unwrap();
        assert_eq!(up.monoid_prefix(), 1);
        assert_eq!(up.seed_width(), 2);
    }

    #[test]
    fn compare_monoid_filtrations() {
        // <Inc^i_{m,n}(I_m)> is contained in <Inc^{i+1}_{m+1,n}(I_{m+1})>
        let chain = ChainSpec::normalized(2, 0, 2, ideal(2, 2, &[&[(1, 1, 1), (2, 2, 1)]]))
            .unwrap();
        for n in 3..=5u32 {
            let lower = direct_closure(0, chain.seed(), n).unwrap();
            let upper =
                direct_closure(1, &chain.materialize(3).unwrap(), n.max(3)).unwrap();
            for g in lower.gens() {
                assert!(upper.contains(g), "n={n}, gen {g:?}");
            }
        }
    }

    #[test]
    fn prefix_validation() {
        let seed = ideal(1, 2, &[&[(1, 1, 1)]]);
        // prefix <x11> at width 1 maps into the seed only with i >= 1
        let pre = vec![ideal(1, 1, &[&[(1, 1, 1)]])];
        assert!(ChainSpec::new(1, 0, 2, seed.clone(), Some(pre.clone())).is_err());
        let seed_wide = ideal(1, 2, &[&[(1, 1, 1)], &[(1, 2, 1)]]);
        assert!(ChainSpec::new(1, 0, 2, seed_wide, Some(pre.clone())).is_ok());
        assert!(ChainSpec::new(1, 1, 2, seed, Some(pre)).is_ok());
        // normalized chain rejects the zero seed
        assert!(ChainSpec::normalized(1, 0, 1, MonomialIdeal::zero(1, 1)).is_err());
    }

    #[test]
    fn sym_orbit_contains_inc_examples() {
        assert!(sym_orbit_contains_inc(&mono(1, &[(1, 1, 1)]), 1, 2).unwrap());
        assert!(sym_orbit_contains_inc(&mono(1, &[(1, 1, 1), (1, 2, 1)]), 2, 3).unwrap());
        assert!(sym_orbit_contains_inc(&mono(2, &[(1, 1, 2), (2, 2, 1)]), 2, 2).unwrap());
        assert!(sym_orbit_contains_inc(&mono(2, &[(1, 1, 1), (2, 2, 3)]), 2, 4).unwrap());
        assert!(sym_orbit_contains_inc(&mono(1, &[(1, 1, 1)]), 1, 7).is_err());
    }
}
