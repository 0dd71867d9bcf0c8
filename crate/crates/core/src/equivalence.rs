//! Paired symmetric functions and the conversions between the extended U
//! polynomial, the extended Tutte symmetric function and the extended
//! polychromate.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{coarsening_table, set_partitions, IntegerPartition, PairPartition};
use crate::polyring::{var_minus, Family, Monomial, Poly, Var};

/// `p_r = x[1]^r + .. + x[N]^r`.
pub fn power_sum(r: u32, n_vars: usize) -> Poly {
    Poly::from_terms((1..=n_vars as u32).map(|i| {
        (
            Monomial::from_factors([(Var::x(i), r)]),
            BigInt::one(),
        )
    }))
}

/// `p_tau`, the product of `p_r` over the parts of `tau`.
pub fn power_sum_partition(tau: &IntegerPartition, n_vars: usize) -> Poly {
    tau.parts()
        .iter()
        .fold(Poly::one(), |acc, &r| &acc * &power_sum(r, n_vars))
}

/// Calls `f` on every ordered tuple of `k` distinct indices from `0..n`.
fn for_each_injection(k: usize, n: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, n: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(k, n, used, cur, f);
                cur.pop();
                used[i] = false;
            }
        }
    }
    if k <= n {
        go(k, n, &mut vec![false; n], &mut Vec::with_capacity(k), f);
    }
}

/// Augmented monomial symmetric function: the sum over ordered tuples of
/// distinct indices `i_1..i_k` of `x[i_1]^n_1 .. x[i_k]^n_k`. Zero when
/// `tau` has more parts than there are variables.
pub fn augmented_monomial(tau: &IntegerPartition, n_vars: usize) -> Poly {
    let parts = tau.parts();
    let mut out = Poly::zero();
    for_each_injection(parts.len(), n_vars, &mut |idx| {
        let m = Monomial::from_factors(
            idx.iter()
                .zip(parts)
                .map(|(&i, &r)| (Var::x(i as u32 + 1), r)),
        );
        out.add_term(m, BigInt::one());
    });
    out
}

/// `pbar_E = prod_l sum_i x[i]^a_l t[i]^b_l`.
pub fn paired_power_sum(e: &PairPartition, n_vars: usize) -> Poly {
    e.pairs().iter().fold(Poly::one(), |acc, &(a, b)| {
        let factor = Poly::from_terms((1..=n_vars as u32).map(|i| {
            (
                Monomial::from_factors([(Var::x(i), a), (Var::t(i), b)]),
                BigInt::one(),
            )
        }));
        &acc * &factor
    })
}

/// `mbar_E`: the sum over ordered tuples of distinct indices of
/// `prod_l x[i_l]^a_l (1 + t[i_l])^b_l`, expanded.
pub fn paired_augmented_monomial(e: &PairPartition, n_vars: usize) -> Poly {
    let pairs = e.pairs();
    let mut out = Poly::zero();
    for_each_injection(pairs.len(), n_vars, &mut |idx| {
        let mut term = Poly::one();
        for (&i, &(a, b)) in idx.iter().zip(pairs) {
            let i = i as u32 + 1;
            let one_t = &Poly::one() + &Poly::var(Var::t(i));
            term = &term.mul_monomial(&Monomial::from_factors([(Var::x(i), a)])) * &one_t.pow(b);
        }
        out += term;
    });
    out
}

/// The two bases of paired symmetric functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairedBasis {
    /// `pbar`, tag `"p"`.
    PowerSum,
    /// `mbar`, tag `"m"`.
    AugmentedMonomial,
}

impl PairedBasis {
    pub fn tag(self) -> &'static str {
        match self {
            PairedBasis::PowerSum => "p",
            PairedBasis::AugmentedMonomial => "m",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            PairedBasis::PowerSum => "pbar",
            PairedBasis::AugmentedMonomial => "mbar",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "p" => Ok(PairedBasis::PowerSum),
            "m" => Ok(PairedBasis::AugmentedMonomial),
            _ => Err(Error::Malformed(format!("unknown basis tag {tag:?}"))),
        }
    }
}

/// A paired symmetric function of degree `(n, m)` as integer coefficients
/// on one of the two bases. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedCoefficientMap {
    basis: PairedBasis,
    n: u32,
    m: u32,
    terms: BTreeMap<PairPartition, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    basis: String,
    n: u32,
    m: u32,
    terms: Vec<(Vec<(u32, u32)>, String)>,
}

impl PairedCoefficientMap {
    pub fn new(basis: PairedBasis, n: u32, m: u32) -> Self {
        PairedCoefficientMap {
            basis,
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> PairedBasis {
        self.basis
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Adds `c` to the coefficient of `key`, which must be a pair partition
    /// of `(n, m)`.
    pub fn add(&mut self, key: PairPartition, c: BigInt) -> Result<()> {
        if !key.is_pair_partition_of(self.n, self.m) {
            return Err(Error::Malformed(format!(
                "{key} is not a pair partition of ({}, {})",
                self.n, self.m
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    /// Raises the second degree to at least `m`.
    pub fn set_edge_bound(&mut self, m: u32) {
        self.m = self.m.max(m);
    }

    pub fn get(&self, key: &PairPartition) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PairPartition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `x[1..=N]`, `t[1..=N]`, with all further variables zero.
    pub fn evaluate(&self, x: &[BigRational], t: &[BigRational]) -> Result<BigRational> {
        if x.len() != t.len() {
            return Err(Error::Precondition(format!(
                "{} x-values but {} t-values",
                x.len(),
                t.len()
            )));
        }
        let mut total = BigRational::zero();
        for (key, c) in &self.terms {
            let value = match self.basis {
                PairedBasis::PowerSum => paired_power_sum_value(key, x, t),
                PairedBasis::AugmentedMonomial => paired_augmented_monomial_value(key, x, t),
            };
            total += value * BigRational::from_integer(c.clone());
        }
        Ok(total)
    }

    /// `{"basis": "p", "n": 3, "m": 3, "terms": [[[[1,0],[1,0],[1,0]], "1"], ..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    fn to_json_value(&self) -> MapJson {
        MapJson {
            basis: self.basis.tag().to_string(),
            n: self.n,
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.pairs().to_vec(), c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MapJson =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let mut map = PairedCoefficientMap::new(PairedBasis::from_tag(&raw.basis)?, raw.n, raw.m);
        for (pairs, c) in raw.terms {
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::Malformed(format!("bad coefficient {c:?}")))?;
            map.add(PairPartition::from_pairs(pairs), c)?;
        }
        Ok(map)
    }
}

impl fmt::Display for PairedCoefficientMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}[{key}]", self.basis.symbol())?;
        }
        Ok(())
    }
}

/// `pbar_E` at the point `(x, t)`.
pub fn paired_power_sum_value(key: &PairPartition, x: &[BigRational], t: &[BigRational]) -> BigRational {
    key.pairs()
        .iter()
        .map(|&(a, b)| {
            x.iter()
                .zip(t)
                .map(|(xi, ti)| num_traits::pow(xi.clone(), a as usize) * num_traits::pow(ti.clone(), b as usize))
                .fold(BigRational::zero(), |s, v| s + v)
        })
        .fold(BigRational::one(), |p, v| p * v)
}

/// `mbar_E` at the point `(x, t)`: a sum over injections of the pairs into
/// the indices, by a subset dynamic programme where each index takes at
/// most one unplaced pair.
pub fn paired_augmented_monomial_value(
    key: &PairPartition,
    x: &[BigRational],
    t: &[BigRational],
) -> BigRational {
    let pairs = key.pairs();
    let k = pairs.len();
    assert!(k < 32, "too many pairs to evaluate");
    let one = BigRational::one();
    let mut ways = vec![BigRational::zero(); 1 << k];
    ways[0] = BigRational::one();
    for (xi, ti) in x.iter().zip(t) {
        let one_t = &one + ti;
        let values: Vec<BigRational> = pairs
            .iter()
            .map(|&(a, b)| {
                num_traits::pow(xi.clone(), a as usize) * num_traits::pow(one_t.clone(), b as usize)
            })
            .collect();
        for mask in (0..1usize << k).rev() {
            if ways[mask].is_zero() {
                continue;
            }
            for (j, val) in values.iter().enumerate() {
                if mask >> j & 1 == 0 {
                    let add = &ways[mask] * val;
                    ways[mask | 1 << j] += add;
                }
            }
        }
    }
    ways.pop().expect("at least one mask")
}

/// Expansion of `pbar_E` in the augmented monomial basis. Each set
/// partition of the pairs merges blocks onto one shared index; each merged
/// `t^B` is then rewritten as `sum_c (-1)^(B-c) C(B,c) (1+t)^c`.
pub fn paired_p_to_m(e: &PairPartition) -> PairedCoefficientMap {
    let pairs = e.pairs();
    let mut out = PairedCoefficientMap::new(
        PairedBasis::AugmentedMonomial,
        e.first_total(),
        e.second_total(),
    );
    for sigma in set_partitions(pairs.len()) {
        let merged: Vec<(u32, u32)> = sigma
            .blocks()
            .iter()
            .map(|block| {
                block.iter().fold((0, 0), |(a, b), &i| {
                    (a + pairs[i].0, b + pairs[i].1)
                })
            })
            .collect();
        let mut partial: Vec<(Vec<(u32, u32)>, BigInt)> = vec![(Vec::new(), BigInt::one())];
        for &(a, b) in &merged {
            let mut next = Vec::with_capacity(partial.len() * (b as usize + 1));
            for (key, coeff) in &partial {
                for c in 0..=b {
                    let mut k = binomial(BigInt::from(b), BigInt::from(c));
                    if (b - c) % 2 == 1 {
                        k = -k;
                    }
                    let mut key = key.clone();
                    key.push((a, c));
                    next.push((key, coeff * k));
                }
            }
            partial = next;
        }
        for (key, c) in partial {
            out.add(PairPartition::from_pairs(key), c)
                .expect("merged pairs keep the degree");
        }
    }
    out
}

/// Re-expresses a map in the augmented monomial basis.
pub fn to_augmented_monomial(map: &PairedCoefficientMap) -> PairedCoefficientMap {
    if map.basis == PairedBasis::AugmentedMonomial {
        return map.clone();
    }
    let mut out = PairedCoefficientMap::new(PairedBasis::AugmentedMonomial, map.n, map.m);
    for (key, c) in &map.terms {
        for (k2, c2) in paired_p_to_m(key).terms {
            out.add(k2, c * c2).expect("expansion keeps the degree");
        }
    }
    out
}

/// Extended U to the extended Tutte symmetric function in the paired
/// power-sum basis: `z[r,s]` becomes `pbar_(r, r+s-1)`.
pub fn ubar_to_ybar(ubar: &Poly) -> Result<PairedCoefficientMap> {
    let mut keyed = Vec::with_capacity(ubar.len());
    let mut n = None;
    let mut m = 0;
    for (mono, c) in ubar.terms() {
        let mut pairs = Vec::new();
        for &(v, e) in mono.factors() {
            if v.family() != Family::Z {
                return Err(Error::Malformed(format!(
                    "expected a polynomial in z[i,j], found {v}"
                )));
            }
            let (r, s) = (v.first(), v.second());
            let b = (r + s).checked_sub(1).ok_or_else(|| {
                Error::Malformed(format!("{v} has no paired power-sum image"))
            })?;
            pairs.extend(std::iter::repeat_n((r, b), e as usize));
        }
        let key = PairPartition::from_pairs(pairs);
        let total = key.first_total();
        match n {
            None => n = Some(total),
            Some(n0) if n0 != total => {
                return Err(Error::Malformed(format!(
                    "monomials with first-index totals {n0} and {total}"
                )))
            }
            Some(_) => {}
        }
        m = m.max(key.second_total());
        keyed.push((key, c.clone()));
    }
    let mut out = PairedCoefficientMap::new(PairedBasis::PowerSum, n.unwrap_or(0), m);
    for (key, c) in keyed {
        out.add(key, c)?;
    }
    Ok(out)
}

/// Inverse of [`ubar_to_ybar`]: `pbar_(r,s)` becomes `z[r, s-r+1]`.
pub fn ybar_to_ubar(map: &PairedCoefficientMap) -> Result<Poly> {
    if map.basis != PairedBasis::PowerSum {
        return Err(Error::Precondition(
            "conversion to the extended U-polynomial needs the paired power-sum basis".into(),
        ));
    }
    let mut out = Poly::zero();
    for (key, c) in &map.terms {
        let vars = key
            .pairs()
            .iter()
            .map(|&(r, s)| {
                (s + 1).checked_sub(r).map(|j| Var::z(r, j)).ok_or_else(|| {
                    Error::Malformed(format!(
                        "pair ({r},{s}) is not the type of a connected component"
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        out.add_term(Monomial::product(vars), c.clone());
    }
    Ok(out)
}

/// Reads the augmented monomial coefficients as the coefficients of
/// `prod x2[a_i, b_i]`.
pub fn ybar_to_extended_polychromate(map: &PairedCoefficientMap) -> Poly {
    let m = to_augmented_monomial(map);
    Poly::from_terms(m.terms.into_iter().map(|(key, c)| {
        (
            Monomial::product(key.pairs().iter().map(|&(a, b)| Var::x2(a, b))),
            c,
        )
    }))
}

/// U-polynomial to polychromate: each `x_tau y^j` becomes
/// `sum_tau' a(tau, tau') x_tau' y^j (y - 1)^(n - k(tau))`, with `a` the
/// coarsening counts.
pub fn u_to_polychromate(u: &Poly, n: u32) -> Result<Poly> {
    let y1 = var_minus(Var::y(), 1);
    let mut out = Poly::zero();
    for (mono, c) in u.terms() {
        let mut parts = Vec::new();
        let mut j = 0;
        for &(v, e) in mono.factors() {
            match v.family() {
                Family::X => parts.extend(std::iter::repeat_n(v.first(), e as usize)),
                Family::Y => j = e,
                _ => {
                    return Err(Error::Malformed(format!(
                        "expected a polynomial in x[i] and y, found {v}"
                    )))
                }
            }
        }
        let tau = IntegerPartition::from_parts(parts);
        if tau.total() != n {
            return Err(Error::Malformed(format!(
                "monomial {mono} has first-index total {}, expected {n}",
                tau.total()
            )));
        }
        let tail = y1
            .pow(n - tau.len() as u32)
            .mul_monomial(&Monomial::from_factors([(Var::y(), j)]));
        for (target, a) in coarsening_table(&tau) {
            let xs = Monomial::product(target.parts().iter().map(|&p| Var::x(p)));
            out += tail.mul_monomial(&xs).scale(&(c * BigInt::from(a)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{extended_polychromate, polychromate, u_poly, ubar, ybar_coefficients, Limits};
    use crate::multigraph::Multigraph;

    fn g(text: &str) -> Multigraph {
        Multigraph::parse_edge_list(text).unwrap()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn pp(pairs: &[(u32, u32)]) -> PairPartition {
        PairPartition::from_pairs(pairs.to_vec())
    }

    fn ip(parts: &[u32]) -> IntegerPartition {
        IntegerPartition::from_parts(parts.to_vec())
    }

    const K3: &str = "3 3\n1 2\n2 3\n3 1\n";
    const PATH: &str = "3 2\n1 2\n2 3\n";

    #[test]
    fn power_sums_and_monomials() {
        assert_eq!(power_sum(1, 2), p("x[1] + x[2]"));
        assert_eq!(
            power_sum_partition(&ip(&[2, 1]), 2),
            p("(x[1]^2 + x[2]^2)*(x[1] + x[2])")
        );
        assert_eq!(augmented_monomial(&ip(&[2]), 2), p("x[1]^2 + x[2]^2"));
        assert_eq!(augmented_monomial(&ip(&[1, 1]), 2), p("2*x[1]*x[2]"));
        assert_eq!(augmented_monomial(&ip(&[2, 1]), 2), p("x[1]^2*x[2] + x[2]^2*x[1]"));
        assert!(augmented_monomial(&ip(&[1, 1, 1]), 2).is_zero());
        assert_eq!(
            power_sum_partition(&ip(&[1, 1]), 3),
            &augmented_monomial(&ip(&[1, 1]), 3) + &augmented_monomial(&ip(&[2]), 3)
        );
    }

    #[test]
    fn paired_bases() {
        assert_eq!(paired_power_sum(&pp(&[(1, 0)]), 3), power_sum(1, 3));
        assert_eq!(paired_power_sum(&pp(&[(2, 1)]), 2), p("x[1]^2*t[1] + x[2]^2*t[2]"));
        assert_eq!(paired_power_sum(&pp(&[(1, 0), (1, 0)]), 2), p("(x[1] + x[2])^2"));
        assert_eq!(paired_augmented_monomial(&pp(&[(1, 0)]), 2), p("x[1] + x[2]"));
        assert_eq!(paired_augmented_monomial(&pp(&[(1, 1)]), 1), p("x[1] + x[1]*t[1]"));
        assert_eq!(
            paired_augmented_monomial(&pp(&[(2, 1), (1, 0)]), 2),
            p("x[1]^2*(1 + t[1])*x[2] + x[2]^2*(1 + t[2])*x[1]")
        );
    }

    #[test]
    fn p_to_m_examples() {
        let two = paired_p_to_m(&pp(&[(1, 0), (1, 0)]));
        assert_eq!(two.to_string(), "mbar[(1,0),(1,0)] + mbar[(2,0)]");
        let loop1 = paired_p_to_m(&pp(&[(1, 1)]));
        assert_eq!(loop1.get(&pp(&[(1, 1)])), BigInt::from(1));
        assert_eq!(loop1.get(&pp(&[(1, 0)])), BigInt::from(-1));
        assert_eq!(loop1.len(), 2);
        assert_eq!(paired_p_to_m(&pp(&[(1, 0)])).to_string(), "mbar[(1,0)]");
    }

    #[test]
    fn p_to_m_matches_polynomial_expansion() {
        for key in [pp(&[(2, 1), (1, 0)]), pp(&[(1, 1), (1, 1)]), pp(&[(2, 2), (1, 0), (1, 0)])] {
            let n_vars = key.len() + 1;
            let lhs = paired_power_sum(&key, n_vars);
            let rhs: Poly = paired_p_to_m(&key)
                .iter()
                .map(|(k, c)| paired_augmented_monomial(k, n_vars).scale(c))
                .sum();
            assert_eq!(lhs, rhs, "{key}");
        }
    }

    #[test]
    fn ybar_from_ubar_and_back() {
        let lim = Limits::default();
        let k3 = g(K3);
        let u = ubar(&k3, &lim).unwrap();
        let y = ubar_to_ybar(&u).unwrap();
        assert_eq!(y, ybar_coefficients(&k3, &lim).unwrap());
        assert_eq!(ybar_to_ubar(&y).unwrap(), u);
        let single = ubar_to_ybar(&p("z[1,0]")).unwrap();
        assert_eq!(single.to_string(), "pbar[(1,0)]");
        assert_eq!(ybar_to_ubar(&single).unwrap(), p("z[1,0]"));
    }

    #[test]
    fn conversion_rejects_bad_input() {
        assert!(ubar_to_ybar(&p("z[1,0] + z[2,0]")).is_err());
        assert!(ubar_to_ybar(&p("x[1]")).is_err());
        let mut bad = PairedCoefficientMap::new(PairedBasis::PowerSum, 3, 0);
        bad.add(pp(&[(3, 0)]), BigInt::one()).unwrap();
        assert!(ybar_to_ubar(&bad).is_err());
        assert!(bad.add(pp(&[(2, 0)]), BigInt::one()).is_err());
        assert!(u_to_polychromate(&p("x[1]*x[1] + x[1]"), 2).is_err());
    }

    #[test]
    fn extended_polychromate_via_ybar() {
        let lim = Limits::default();
        for text in [K3, PATH, "2 0"] {
            let h = g(text);
            let y = ybar_coefficients(&h, &lim).unwrap();
            assert_eq!(
                ybar_to_extended_polychromate(&y),
                extended_polychromate(&h, &lim).unwrap(),
                "{text}"
            );
        }
        assert_eq!(
            ybar_to_extended_polychromate(&ybar_coefficients(&g(K3), &lim).unwrap()),
            p("x2[1,0]^3 + 3*x2[2,1]*x2[1,0] + x2[3,3]")
        );
    }

    #[test]
    fn polychromate_from_u() {
        let lim = Limits::default();
        for text in [K3, PATH, "1 0", "2 3\n1 2\n1 2\n1 1\n"] {
            let h = g(text);
            let u = u_poly(&h, &lim).unwrap();
            assert_eq!(
                u_to_polychromate(&u, h.vertex_count() as u32).unwrap(),
                polychromate(&h, &lim).unwrap(),
                "{text}"
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let y = ybar_coefficients(&g(K3), &Limits::default()).unwrap();
        let text = y.to_json();
        assert_eq!(
            text,
            r#"{"basis":"p","n":3,"m":3,"terms":[[[[1,0],[1,0],[1,0]],"1"],[[[2,1],[1,0]],"3"],[[[3,2]],"3"],[[[3,3]],"1"]]}"#
        );
        assert_eq!(PairedCoefficientMap::from_json(&text).unwrap(), y);
        assert!(PairedCoefficientMap::from_json(r#"{"basis":"q","n":1,"m":0,"terms":[]}"#).is_err());
    }

    #[test]
    fn evaluation_agrees_between_bases() {
        let y = ybar_coefficients(&g(PATH), &Limits::default()).unwrap();
        let m = to_augmented_monomial(&y);
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let x = [q(1, 2), q(-3, 1), q(2, 5), q(7, 3), q(1, 1)];
        let t = [q(2, 1), q(1, 3), q(-1, 2), q(0, 1), q(5, 4)];
        assert_eq!(y.evaluate(&x, &t).unwrap(), m.evaluate(&x, &t).unwrap());
    }
}
