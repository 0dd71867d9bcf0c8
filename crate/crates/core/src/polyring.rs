//! Exact sparse multivariate polynomials with big-integer coefficients.
//!
//! Variables belong to named families carrying zero, one or two integer
//! indices (`z[i,j]`, `x[i]`, `y`, ...). Terms are kept in a fixed monomial
//! order: higher total degree first, then lexicographic on the variable
//! sequence (with repetition) in ascending order. That order drives both the
//! text form and the JSON form.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Variable families. Declaration order is the variable order inside monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `z[i,j]`, extended U-polynomial.
    Z,
    /// `x2[i,j]`, extended polychromate.
    X2,
    /// `x[i]`, U-polynomial, polychromate, symmetric functions.
    X,
    /// `t[i]`, paired symmetric functions.
    T,
    /// scalar `t` of the Tutte symmetric function.
    TScalar,
    /// scalar `p`, stability polynomial.
    P,
    Y,
    Lambda,
    U,
    V,
    /// `yk[k]`, V-function.
    Yk,
    /// scalar `X` of the Tutte polynomial.
    TutteX,
    /// scalar `Y` of the Tutte polynomial.
    TutteY,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Z,
        Family::X2,
        Family::X,
        Family::T,
        Family::TScalar,
        Family::P,
        Family::Y,
        Family::Lambda,
        Family::U,
        Family::V,
        Family::Yk,
        Family::TutteX,
        Family::TutteY,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Z => "z",
            Family::X2 => "x2",
            Family::X => "x",
            Family::T | Family::TScalar => "t",
            Family::P => "p",
            Family::Y => "y",
            Family::Lambda => "lambda",
            Family::U => "u",
            Family::V => "v",
            Family::Yk => "yk",
            Family::TutteX => "X",
            Family::TutteY => "Y",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::Z | Family::X2 => 2,
            Family::X | Family::T | Family::Yk => 1,
            _ => 0,
        }
    }

    /// Looks a family up by its printed name and index count.
    pub fn lookup(name: &str, arity: usize) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == name && f.arity() == arity)
    }
}

/// A variable: a family plus its indices (unused slots are zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    family: Family,
    idx: [u32; 2],
}

impl Var {
    /// Checks the index count against the family. Doubly-indexed families
    /// need a first index of at least 1.
    pub fn new(family: Family, indices: &[u32]) -> Result<Var> {
        if indices.len() != family.arity() {
            return Err(Error::Malformed(format!(
                "variable family {} takes {} indices, got {}",
                family.name(),
                family.arity(),
                indices.len()
            )));
        }
        if family.arity() == 2 && indices[0] == 0 {
            return Err(Error::Malformed(format!(
                "{}[0,{}]: first index must be at least 1",
                family.name(),
                indices[1]
            )));
        }
        let mut idx = [0; 2];
        idx[..indices.len()].copy_from_slice(indices);
        Ok(Var { family, idx })
    }

    pub fn z(i: u32, j: u32) -> Var {
        Var { family: Family::Z, idx: [i, j] }
    }
    pub fn x2(i: u32, j: u32) -> Var {
        Var { family: Family::X2, idx: [i, j] }
    }
    pub fn x(i: u32) -> Var {
        Var { family: Family::X, idx: [i, 0] }
    }
    pub fn t(i: u32) -> Var {
        Var { family: Family::T, idx: [i, 0] }
    }
    pub fn yk(k: u32) -> Var {
        Var { family: Family::Yk, idx: [k, 0] }
    }
    pub fn scalar(family: Family) -> Var {
        debug_assert_eq!(family.arity(), 0);
        Var { family, idx: [0, 0] }
    }
    pub fn y() -> Var {
        Var::scalar(Family::Y)
    }
    pub fn t_scalar() -> Var {
        Var::scalar(Family::TScalar)
    }
    pub fn lambda() -> Var {
        Var::scalar(Family::Lambda)
    }
    pub fn p() -> Var {
        Var::scalar(Family::P)
    }
    pub fn u() -> Var {
        Var::scalar(Family::U)
    }
    pub fn v() -> Var {
        Var::scalar(Family::V)
    }
    pub fn tutte_x() -> Var {
        Var::scalar(Family::TutteX)
    }
    pub fn tutte_y() -> Var {
        Var::scalar(Family::TutteY)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn indices(&self) -> &[u32] {
        &self.idx[..self.family.arity()]
    }

    /// First index (zero for scalar families).
    pub fn first(&self) -> u32 {
        self.idx[0]
    }

    pub fn second(&self) -> u32 {
        self.idx[1]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        match self.indices() {
            [] => Ok(()),
            [i] => write!(f, "[{i}]"),
            [i, j] => write!(f, "[{i},{j}]"),
            _ => unreachable!(),
        }
    }
}

type Factors = SmallVec<[(Var, u32); 4]>;

/// A product of variables with positive exponents, sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Factors);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(smallvec::smallvec![(v, 1)])
    }

    /// Collects factors in any order; repeated variables merge and zero
    /// exponents vanish.
    pub fn from_factors<I: IntoIterator<Item = (Var, u32)>>(factors: I) -> Monomial {
        let mut f: Factors = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        f.sort_unstable_by_key(|&(v, _)| v);
        let mut out: Factors = SmallVec::with_capacity(f.len());
        for (v, e) in f {
            match out.last_mut() {
                Some((w, d)) if *w == v => *d += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    /// Product of the given variables, each with exponent one per occurrence.
    pub fn product<I: IntoIterator<Item = Var>>(vars: I) -> Monomial {
        Monomial::from_factors(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn exponent_of(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map_or(0, |i| self.0[i].1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out: Factors = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes `v^k`; `None` when the exponent of `v` is below `k`.
    pub fn divide_by(&self, v: Var, k: u32) -> Option<Monomial> {
        if k == 0 {
            return Some(self.clone());
        }
        let i = self.0.binary_search_by_key(&v, |&(w, _)| w).ok()?;
        let e = self.0[i].1;
        if e < k {
            return None;
        }
        let mut out = self.0.clone();
        if e == k {
            out.remove(i);
        } else {
            out[i].1 = e - k;
        }
        Some(Monomial(out))
    }
}

/// Lexicographic comparison of the factor lists expanded with repetition.
fn cmp_expanded(a: &[(Var, u32)], b: &[(Var, u32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    let mut ra = a.first().map_or(0, |t| t.1);
    let mut rb = b.first().map_or(0, |t| t.1);
    loop {
        match (i < a.len(), j < b.len()) {
            (false, false) => return Ordering::Equal,
            (false, true) => return Ordering::Less,
            (true, false) => return Ordering::Greater,
            (true, true) => {
                let c = a[i].0.cmp(&b[j].0);
                if c != Ordering::Equal {
                    return c;
                }
                let take = ra.min(rb);
                ra -= take;
                rb -= take;
                if ra == 0 {
                    i += 1;
                    ra = a.get(i).map_or(0, |t| t.1);
                }
                if rb == 0 {
                    j += 1;
                    rb = b.get(j).map_or(0, |t| t.1);
                }
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| cmp_expanded(&self.0, &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with integer coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Poly {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies every term by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces each variable for which `rule` returns a polynomial and
    /// re-expands. Variables mapped to `None` stay as they are.
    pub fn substitute<F>(&self, mut rule: F) -> Poly
    where
        F: FnMut(Var) -> Option<Poly>,
    {
        let mut images: HashMap<Var, Option<Poly>> = HashMap::new();
        let mut powers: HashMap<(Var, u32), Poly> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept: Factors = SmallVec::new();
            let mut acc = Poly::constant(c.clone());
            for &(v, e) in m.factors() {
                let image = images.entry(v).or_insert_with(|| rule(v));
                match image {
                    None => kept.push((v, e)),
                    Some(img) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        acc = &acc * pw;
                    }
                }
            }
            if !kept.is_empty() {
                acc = acc.mul_monomial(&Monomial(kept));
            }
            out += acc;
        }
        out
    }

    /// Exact value under an assignment of rationals to every variable present.
    pub fn evaluate<F>(&self, mut assignment: F) -> Result<BigRational>
    where
        F: FnMut(Var) -> Option<BigRational>,
    {
        let mut values: HashMap<Var, BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for &(v, e) in m.factors() {
                let val = match values.get(&v) {
                    Some(val) => val.clone(),
                    None => {
                        let val = assignment(v).ok_or_else(|| Error::Unassigned(v.to_string()))?;
                        values.insert(v, val.clone());
                        val
                    }
                };
                term *= num_traits::pow(val, e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Divides by `v^k`, or `None` if some term has a smaller power of `v`.
    pub fn divide_by_power(&self, v: Var, k: u32) -> Option<Poly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.divide_by(v, k)?, c.clone());
        }
        Some(Poly { terms })
    }

    /// Largest total degree among the terms (zero for the zero polynomial).
    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// First monomial in canonical order where the coefficients differ.
    pub fn first_difference(&self, other: &Poly) -> Option<(Monomial, BigInt, BigInt)> {
        let keys: BTreeSet<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coefficient(m), other.coefficient(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("serializing plain data")
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                vars: m
                    .factors()
                    .iter()
                    .map(|(v, e)| (v.family().name().to_string(), v.indices().to_vec(), *e))
                    .collect(),
            })
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Poly> {
        let terms: Vec<JsonTerm> =
            serde_json::from_str(text).map_err(|e| Error::Malformed(format!("polynomial JSON: {e}")))?;
        Poly::from_json_terms(&terms)
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Poly> {
        let mut p = Poly::zero();
        for t in terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Malformed(format!("bad coefficient {:?}", t.coeff)))?;
            let mut factors = Vec::with_capacity(t.vars.len());
            for (name, idx, e) in &t.vars {
                let fam = Family::lookup(name, idx.len()).ok_or_else(|| {
                    Error::Malformed(format!("unknown variable family {name} with {} indices", idx.len()))
                })?;
                factors.push((Var::new(fam, idx)?, *e));
            }
            p.add_term(Monomial::from_factors(factors), c);
        }
        Ok(p)
    }
}

/// One term of the JSON form: `{"coeff": "3", "vars": [["z", [1, 0], 2]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub vars: Vec<(String, Vec<u32>, u32)>,
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses the canonical text form (and any reordering of it).
    fn from_str(s: &str) -> Result<Poly> {
        Parser::new(s).poly()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { src: s.as_bytes(), pos: 0 }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Malformed(format!("polynomial text at byte {}: {msg}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<u32> {
        let n = self.number()?;
        u32::try_from(n).map_err(|_| self.err("index or exponent too large"))
    }

    fn poly(&mut self) -> Result<Poly> {
        let p = self.sum()?;
        match self.peek() {
            None => Ok(p),
            Some(_) => Err(self.err("expected '+' or '-'")),
        }
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut p = Poly::zero();
        let mut negate = self.eat(b'-');
        loop {
            let t = self.term()?;
            if negate {
                p = &p - &t;
            } else {
                p += t;
            }
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(p);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut coeff = BigInt::one();
        let mut factors = Vec::new();
        let mut groups = Vec::new();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => coeff *= self.number()?,
                Some(b) if b.is_ascii_alphabetic() => {
                    let v = self.var()?;
                    let e = if self.eat(b'^') { self.small()? } else { 1 };
                    factors.push((v, e));
                }
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.sum()?;
                    if !self.eat(b')') {
                        return Err(self.err("expected ')'"));
                    }
                    let e = if self.eat(b'^') { self.small()? } else { 1 };
                    groups.push(inner.pow(e));
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            if !self.eat(b'*') {
                let head = Poly::term(Monomial::from_factors(factors), coeff);
                return Ok(groups.iter().fold(head, |acc, g| &acc * g));
            }
        }
    }

    fn var(&mut self) -> Result<Var> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
        let mut idx = Vec::new();
        if self.eat(b'[') {
            idx.push(self.small()?);
            while self.eat(b',') {
                idx.push(self.small()?);
            }
            if !self.eat(b']') {
                return Err(self.err("expected ']'"));
            }
        }
        let fam = Family::lookup(name, idx.len())
            .ok_or_else(|| self.err(&format!("unknown variable {name} with {} indices", idx.len())))?;
        Var::new(fam, &idx)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += lhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += rhs;
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

/// `v - c` for a variable `v` and integer `c`; used for the `(y - 1)` factors.
pub fn var_minus(v: Var, c: i64) -> Poly {
    &Poly::var(v) - &Poly::constant(c)
}

/// `v + c`.
pub fn var_plus(v: Var, c: i64) -> Poly {
    &Poly::var(v) + &Poly::constant(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ubar_k3() -> Poly {
        let z = |i, j| Poly::var(Var::z(i, j));
        z(1, 0).pow(3) + (&z(1, 0) * &z(2, 0)).scale(&3.into()) + z(3, 0).scale(&3.into()) + z(3, 1)
    }

    #[test]
    fn arithmetic_basics() {
        let p = Poly::var(Var::x(1)) + Poly::var(Var::x(2));
        assert_eq!(&p + &Poly::zero(), p);
        assert_eq!(p.pow(2).to_string(), "x[1]^2 + 2*x[1]*x[2] + x[2]^2");
        assert_eq!(var_minus(Var::y(), 1).pow(3).to_string(), "y^3 - 3*y^2 + 3*y - 1");
        assert_eq!(p.pow(0), Poly::one());
    }

    #[test]
    fn canonical_string_of_ubar_triangle() {
        let u = ubar_k3();
        assert_eq!(u.to_string(), "z[1,0]^3 + 3*z[1,0]*z[2,0] + 3*z[3,0] + z[3,1]");
        assert_eq!(u.coefficient(&Monomial::var(Var::z(3, 1))), BigInt::from(1));
        assert_eq!(u.coefficient(&Monomial::var(Var::z(9, 9))), BigInt::from(0));
        assert_eq!(u.to_string().parse::<Poly>().unwrap(), u);
    }

    #[test]
    fn substitution_gives_u_of_triangle() {
        let u = ubar_k3().substitute(|v| {
            (v.family() == Family::Z)
                .then(|| Poly::var(Var::x(v.first())) * var_minus(Var::y(), 1).pow(v.second()))
        });
        let want: Poly = "x[1]^3 + 3*x[1]*x[2] + 2*x[3] + x[3]*y".parse().unwrap();
        assert_eq!(u, want);
        assert_eq!(ubar_k3().substitute(|_| None), ubar_k3());
        let zero = (Poly::var(Var::x(3)) * var_minus(Var::y(), 1)).substitute(|v| {
            (v == Var::y()).then(Poly::one)
        });
        assert!(zero.is_zero());
    }

    #[test]
    fn evaluation() {
        let u: Poly = "x[1]^3 + 3*x[1]*x[2] + 2*x[3] + x[3]*y".parse().unwrap();
        let val = u
            .evaluate(|v| {
                Some(BigRational::from_integer(if v == Var::y() { 2 } else { 1 }.into()))
            })
            .unwrap();
        assert_eq!(val, BigRational::from_integer(8.into()));
        assert!(Poly::zero().evaluate(|_| None).unwrap().is_zero());
        assert!(matches!(u.evaluate(|_| None), Err(Error::Unassigned(_))));
    }

    #[test]
    fn negative_and_constant_terms_render() {
        let p: Poly = "-2 + y - 3*lambda^2".parse().unwrap();
        assert_eq!(p.to_string(), "-3*lambda^2 + y - 2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!((-Poly::one()).to_string(), "-1");
    }

    #[test]
    fn scalar_and_indexed_t_are_distinct() {
        let p: Poly = "t*t[1] + t^2".parse().unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.variables().contains(&Var::t_scalar()));
        assert!(p.variables().contains(&Var::t(1)));
        assert_eq!(Poly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn json_form() {
        let u = ubar_k3();
        let js = u.to_json();
        assert!(js.starts_with(r#"[{"coeff":"1","vars":[["z",[1,0],3]]}"#), "{js}");
        assert_eq!(Poly::from_json(&js).unwrap(), u);
        assert!(Poly::from_json(r#"[{"coeff":"1","vars":[["z",[1],1]]}]"#).is_err());
        assert!(Poly::from_json(r#"[{"coeff":"x","vars":[]}]"#).is_err());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "z[1]", "z[0,1]", "q", "x[1] +", "x[1] x[2]", "x[1"] {
            assert!(bad.parse::<Poly>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn division_by_variable_power() {
        let p: Poly = "X^3 + X^2*Y".parse().unwrap();
        let q = p.divide_by_power(Var::tutte_x(), 2).unwrap();
        assert_eq!(q.to_string(), "X + Y");
        assert!(p.divide_by_power(Var::tutte_x(), 3).is_none());
    }

    #[test]
    fn first_difference_in_canonical_order() {
        let a: Poly = "z[1,0]^2 + 2*z[2,1]".parse().unwrap();
        let b: Poly = "z[1,0]^2 + z[2,1] + z[3,0]".parse().unwrap();
        let (m, x, y) = a.first_difference(&b).unwrap();
        assert_eq!(m.to_string(), "z[2,1]");
        assert_eq!((x, y), (BigInt::from(2), BigInt::from(1)));
        assert!(a.first_difference(&a).is_none());
    }
}
