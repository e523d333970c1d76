//! Sparse multivariate polynomials over exact rationals, weighted-order
//! computations, and the small amount of polynomial arithmetic the blow-up
//! machinery needs (substitution, power extraction, monic division).
//!
//! Terms are kept in a `BTreeMap` under graded lexicographic order, so all
//! iteration and display orders are deterministic.

mod gcd;
mod parse;

pub use gcd::{
    coprime_refine, eliminate_variable, multivariate_gcd, rational_roots, squarefree_decomposition,
    try_exact_div, Elimination,
};
pub use parse::{parse_polynomial, parse_rational};

use crate::error::{EngineError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub type Rat = BigRational;

/// Shorthand for an exact rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

pub fn rat_u64(n: u64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Exponent vector of a monomial. Ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn zero(nvars: usize) -> Self {
        Exponents(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        Exponents(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A positive integer weight vector. `gcd` of the entries is checked at the
/// call sites that require a primitive weight.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight(pub Vec<u64>);

impl Weight {
    pub fn new(entries: Vec<u64>) -> Self {
        assert!(entries.iter().all(|&w| w > 0), "weights must be positive");
        Weight(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0u64, |g, &w| g.gcd(&w))
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }

    /// Standard form: first two entries equal and not exceeding the last.
    pub fn is_standard(&self) -> bool {
        self.0.len() == 3 && self.0[0] == self.0[1] && self.0[1] <= self.0[2]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Sparse polynomial with exact rational coefficients. No zero coefficient
/// is ever stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Exponents::zero(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut e = Exponents::zero(nvars);
        e.0[index] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Rat::one());
        p
    }

    pub fn monomial(nvars: usize, exps: &[u32], coeff: Rat) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Exponents(exps.to_vec()), coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.total_degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Exponents::zero(self.nvars))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.total_degree()).max().unwrap_or(0)
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Exponents, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, e: Exponents, c: Rat) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &Exponents, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.mul(exps), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        result
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.0[var]).max().unwrap_or(0)
    }

    /// Minimal exponent of `var` over all terms.
    pub fn min_exponent_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.0[var]).min().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e.0[var] > 0)
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables
    /// (the `var` slot of every exponent vector is zeroed).
    pub fn coefficient_of(&self, var: usize, k: u32) -> Polynomial {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.0[var] == k {
                let mut e2 = e.clone();
                e2.0[var] = 0;
                p.add_term(e2, c.clone());
            }
        }
        p
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k > 0 {
                let mut e2 = e.clone();
                e2.0[var] = k - 1;
                p.add_term(e2, c * rat_u64(k as u64));
            }
        }
        p
    }

    /// Substitute a rational value for one variable.
    pub fn eval_var(&self, var: usize, value: &Rat) -> Polynomial {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.0[var];
            let mut e2 = e.clone();
            e2.0[var] = 0;
            let mut coeff = c.clone();
            for _ in 0..k {
                coeff *= value;
            }
            p.add_term(e2, coeff);
        }
        p
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                for _ in 0..k {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Clear denominators and integer content; make the graded-lex leading
    /// coefficient positive. The result generates the same principal ideal.
    pub fn primitive_normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * &denom_lcm / c.denom();
            content = content.gcd(&n);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let mut p = Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let n = c.numer() * &denom_lcm / c.denom() / &content;
                    (e.clone(), Rat::from(n))
                })
                .collect(),
        };
        if let Some((_, lead)) = p.leading() {
            if lead.is_negative() {
                p = p.scale(&-Rat::one());
            }
        }
        p
    }

    /// Render with the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest terms first reads better
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || e.total_degree() == 0 {
                parts.push(abs.to_string());
            }
            for (i, &k) in e.0.iter().enumerate() {
                if k == 1 {
                    parts.push(names[i].to_string());
                } else if k > 1 {
                    parts.push(format!("{}^{}", names[i], k));
                }
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

pub const VAR_NAMES_3: [&str; 3] = ["x1", "x2", "x3"];
pub const VAR_NAMES_2: [&str; 2] = ["x1", "x2"];

pub fn default_names(nvars: usize) -> Vec<&'static str> {
    match nvars {
        2 => VAR_NAMES_2.to_vec(),
        3 => VAR_NAMES_3.to_vec(),
        _ => panic!("unsupported variable count {nvars}"),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars)))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rat::one())
    }
}

/// A formal product of ideals with positive rational exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealFactor {
    pub generators: Vec<Polynomial>,
    pub exponent: Rat,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct RealIdeal {
    pub factors: Vec<IdealFactor>,
}

impl RealIdeal {
    pub fn principal(f: Polynomial, exponent: Rat) -> Self {
        RealIdeal {
            factors: vec![IdealFactor {
                generators: vec![f],
                exponent,
            }],
        }
    }

    pub fn trivial() -> Self {
        RealIdeal { factors: vec![] }
    }

    pub fn nvars(&self) -> Option<usize> {
        self.factors
            .first()
            .and_then(|f| f.generators.first())
            .map(|g| g.nvars())
    }

    /// Every generator vanishes at the origin.
    pub fn vanishes_at_origin(&self) -> bool {
        self.factors
            .iter()
            .all(|f| f.generators.iter().all(|g| g.constant_term().is_zero()))
    }

    pub fn validate_for_origin(&self) -> Result<()> {
        for f in &self.factors {
            if f.generators.is_empty() || f.generators.iter().any(|g| g.is_zero()) {
                return Err(EngineError::ZeroPolynomial);
            }
            if !f.exponent.is_positive() {
                return Err(EngineError::Parse("factor exponent must be positive".into()));
            }
        }
        if !self.vanishes_at_origin() {
            return Err(EngineError::FactorNotAtOrigin);
        }
        Ok(())
    }
}

/// Minimum of `exponents . w` over the terms of `f`.
pub fn weighted_order(f: &Polynomial, w: &Weight) -> Result<u64> {
    if f.is_zero() {
        return Err(EngineError::ZeroPolynomial);
    }
    if w.len() != f.nvars() {
        return Err(EngineError::WeightLengthMismatch {
            expected: f.nvars(),
            got: w.len(),
        });
    }
    Ok(f.terms
        .keys()
        .map(|e| e.0.iter().zip(&w.0).map(|(&a, &wi)| a as u64 * wi).sum())
        .min()
        .unwrap())
}

/// Sum of the terms of `f` of minimal weighted degree.
pub fn initial_form(f: &Polynomial, w: &Weight) -> Result<Polynomial> {
    let ord = weighted_order(f, w)?;
    let mut p = Polynomial::zero(f.nvars());
    for (e, c) in &f.terms {
        let d: u64 = e.0.iter().zip(&w.0).map(|(&a, &wi)| a as u64 * wi).sum();
        if d == ord {
            p.add_term(e.clone(), c.clone());
        }
    }
    Ok(p)
}

/// Valuation of a real ideal under the monomial valuation of `w`:
/// the exponent-weighted sum of the per-factor minima over generators.
pub fn ideal_order(a: &RealIdeal, w: &Weight) -> Result<Rat> {
    let mut total = Rat::zero();
    for factor in &a.factors {
        let mut min: Option<u64> = None;
        for g in &factor.generators {
            let o = weighted_order(g, w)?;
            min = Some(min.map_or(o, |m: u64| m.min(o)));
        }
        let m = min.ok_or(EngineError::ZeroPolynomial)?;
        total += &factor.exponent * rat_u64(m);
    }
    Ok(total)
}

/// Ring-homomorphism image of `f` under `x_i -> images[i]`. The images must
/// all live in a common target ring.
pub fn substitute(f: &Polynomial, images: &[Polynomial]) -> Result<Polynomial> {
    if images.len() != f.nvars() {
        return Err(EngineError::ImageCountMismatch {
            expected: f.nvars(),
            got: images.len(),
        });
    }
    let target_nvars = images
        .first()
        .map(|p| p.nvars())
        .unwrap_or(0);
    // cache powers of each image
    let mut powers: Vec<Vec<Polynomial>> = images
        .iter()
        .map(|p| vec![Polynomial::one(target_nvars), p.clone()])
        .collect();
    let mut out = Polynomial::zero(target_nvars);
    for (e, c) in &f.terms {
        let mut term = Polynomial::constant(target_nvars, c.clone());
        for (i, &k) in e.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let cache = &mut powers[i];
            while cache.len() <= k as usize {
                let next = &cache[cache.len() - 1] * &cache[1];
                cache.push(next);
            }
            term = &term * &cache[k as usize];
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Write `f = x_var^m * g` with `m` maximal. Returns `(m, g)`.
pub fn extract_power(f: &Polynomial, var: usize) -> Result<(u32, Polynomial)> {
    if f.is_zero() {
        return Err(EngineError::ZeroPolynomial);
    }
    if var >= f.nvars() {
        return Err(EngineError::VariableOutOfRange(var));
    }
    let m = f.min_exponent_in(var);
    if m == 0 {
        return Ok((0, f.clone()));
    }
    let mut g = Polynomial::zero(f.nvars());
    for (e, c) in &f.terms {
        let mut e2 = e.clone();
        e2.0[var] -= m;
        g.add_term(e2, c.clone());
    }
    Ok((m, g))
}

/// Division with remainder by a divisor monic in the chosen variable:
/// `f = q*u + r` with `deg_var r < deg_var u`, all exact. "Monic" means
/// the coefficient of the top power of the variable is a nonzero rational
/// constant.
pub fn divide_monic(
    f: &Polynomial,
    u: &Polynomial,
    var: usize,
) -> Result<(Polynomial, Polynomial)> {
    if u.is_zero() {
        return Err(EngineError::ZeroPolynomial);
    }
    if var >= f.nvars() || var >= u.nvars() {
        return Err(EngineError::VariableOutOfRange(var));
    }
    let d = u.degree_in(var);
    let lead = u.coefficient_of(var, d);
    if !lead.is_constant() || lead.is_zero() {
        return Err(EngineError::NotMonic);
    }
    let lead_inv = Rat::one() / lead.constant_term();
    let mut q = Polynomial::zero(f.nvars());
    let mut r = f.clone();
    loop {
        let dr = r.degree_in(var);
        if r.is_zero() || dr < d {
            break;
        }
        // slice of r at the top var power, divided by the monic head
        let top = r.coefficient_of(var, dr).scale(&lead_inv);
        let mut shift = Exponents::zero(f.nvars());
        shift.0[var] = dr - d;
        let qpiece = top.mul_monomial(&shift, &Rat::one());
        q = &q + &qpiece;
        r = &r - &(&qpiece * u);
        debug_assert!(r.is_zero() || r.degree_in(var) < dr);
    }
    Ok((q, r))
}

/// u-adic expansion by iterated monic division: returns coefficients
/// `c_b` with `f = sum_b c_b * u^b` and `deg_var c_b < deg_var u`.
pub fn monic_expansion(f: &Polynomial, u: &Polynomial, var: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = divide_monic(&rest, u, var)?;
        out.push(r);
        rest = q;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3(s: &str) -> Polynomial {
        parse_polynomial(s, 3).unwrap()
    }

    fn p2(s: &str) -> Polynomial {
        parse_polynomial(s, 2).unwrap()
    }

    fn not1_poly() -> Polynomial {
        p3("(x^2+y^2+z^2)^2+x^5+y^5+z^5")
    }

    fn threetimes_poly() -> Polynomial {
        p3("(x_1-x_2)^2+x_3^2+x_1^4")
    }

    #[test]
    fn weighted_order_examples() {
        let w111 = Weight::new(vec![1, 1, 1]);
        assert_eq!(weighted_order(&not1_poly(), &w111).unwrap(), 4);

        let unit = Polynomial::one(3);
        assert_eq!(weighted_order(&unit, &w111).unwrap(), 0);
        assert_eq!(
            weighted_order(&unit, &Weight::new(vec![3, 1, 2])).unwrap(),
            0
        );

        let w112 = Weight::new(vec![1, 1, 2]);
        assert_eq!(weighted_order(&threetimes_poly(), &w112).unwrap(), 2);

        assert!(matches!(
            weighted_order(&Polynomial::zero(3), &w111),
            Err(EngineError::ZeroPolynomial)
        ));
    }

    #[test]
    fn initial_form_examples() {
        let w111 = Weight::new(vec![1, 1, 1]);
        let f = not1_poly();
        assert_eq!(initial_form(&f, &w111).unwrap(), p3("(x^2+y^2+z^2)^2"));

        let g = p3("x3^2 + x1^4");
        let w112 = Weight::new(vec![1, 1, 2]);
        assert_eq!(initial_form(&g, &w112).unwrap(), g);

        // idempotent on weighted homogeneous input
        let h = initial_form(&f, &w111).unwrap();
        assert_eq!(initial_form(&h, &w111).unwrap(), h);
    }

    #[test]
    fn ideal_order_examples() {
        let w111 = Weight::new(vec![1, 1, 1]);
        let a = RealIdeal::principal(not1_poly(), rat(7, 10));
        assert_eq!(ideal_order(&a, &w111).unwrap(), rat(14, 5));

        let two_gens = RealIdeal {
            factors: vec![IdealFactor {
                generators: vec![p3("x"), p3("y")],
                exponent: rat_int(1),
            }],
        };
        assert_eq!(ideal_order(&two_gens, &w111).unwrap(), rat_int(1));

        let w112 = Weight::new(vec![1, 1, 2]);
        let b = RealIdeal::principal(threetimes_poly(), rat(6, 5));
        assert_eq!(ideal_order(&b, &w112).unwrap(), rat(12, 5));

        assert_eq!(
            ideal_order(&RealIdeal::trivial(), &w111).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn substitute_examples() {
        let f = p2("x + y");
        let images = vec![p2("x"), p2("x*y")];
        assert_eq!(substitute(&f, &images).unwrap(), p2("x + x*y"));

        let g = p3("x^2*y - z + 3");
        let id = vec![
            Polynomial::var(3, 0),
            Polynomial::var(3, 1),
            Polynomial::var(3, 2),
        ];
        assert_eq!(substitute(&g, &id).unwrap(), g);

        // (x - y)^2 with x -> t, y -> t(1+u) gives t^2 u^2
        let h = p2("(x-y)^2");
        let images = vec![p2("x"), p2("x*(1+y)")];
        assert_eq!(substitute(&h, &images).unwrap(), p2("x^2*y^2"));

        assert!(substitute(&h, &images[..1]).is_err());
    }

    #[test]
    fn extract_power_examples() {
        // variables (t, u): f = t^2 u^2 + t^4
        let f = p2("x^2*y^2 + x^4");
        let (m, g) = extract_power(&f, 0).unwrap();
        assert_eq!(m, 2);
        assert_eq!(g, p2("y^2 + x^2"));

        let h = p2("1 + x*y");
        assert_eq!(extract_power(&h, 0).unwrap(), (0, h.clone()));

        let t3 = p2("x^3");
        assert_eq!(extract_power(&t3, 0).unwrap(), (3, p2("1")));
    }

    #[test]
    fn divide_monic_examples() {
        // z^4 = (z^2 - y^2 - 1)(z^2 + y^2 + 1) + (y^2+1)^2
        let f = p3("z^4");
        let u = p3("z^2 + y^2 + 1");
        let (q, r) = divide_monic(&f, &u, 2).unwrap();
        assert_eq!(q, p3("z^2 - y^2 - 1"));
        assert_eq!(r, p3("(y^2+1)^2"));
        assert_eq!(&(&q * &u) + &r, f);

        // remainder-only case
        let g = p3("y*z + 1");
        let (q, r) = divide_monic(&g, &u, 2).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, g);

        // exact division
        let (q, r) = divide_monic(&u, &u, 2).unwrap();
        assert_eq!(q, Polynomial::one(3));
        assert!(r.is_zero());

        // non-monic divisor
        let v = p3("x*z^2 + 1");
        assert!(matches!(
            divide_monic(&f, &v, 2),
            Err(EngineError::NotMonic)
        ));
    }

    #[test]
    fn monic_expansion_reconstructs() {
        let f = p3("z^5 + x*z^2 + y^4 + 2");
        let u = p3("z^2 + y");
        let coeffs = monic_expansion(&f, &u, 2).unwrap();
        let mut acc = Polynomial::zero(3);
        for (b, c) in coeffs.iter().enumerate() {
            acc = &acc + &(c * &u.pow(b as u32));
        }
        assert_eq!(acc, f);
    }

    #[test]
    fn parser_accepts_paper_polynomials_verbatim() {
        let f = parse_polynomial("(x^2+y^2+z^2)^2+x^5+y^5+z^5", 3).unwrap();
        assert_eq!(f.num_terms(), 9);
        let g = parse_polynomial("(x_1-x_2)^2+x_3^2+x_1^4", 3).unwrap();
        assert_eq!(g, p3("x1^2 - 2*x1*x2 + x2^2 + x3^2 + x1^4"));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
            proptest::collection::vec(
                (
                    proptest::collection::vec(0..=max_deg, nvars),
                    -4i64..=4,
                ),
                1..=max_terms,
            )
            .prop_map(move |terms| {
                let mut p = Polynomial::zero(nvars);
                for (exps, c) in terms {
                    p.add_term(Exponents(exps), rat_int(c));
                }
                p
            })
        }

        fn arb_weight(nvars: usize) -> impl Strategy<Value = Weight> {
            proptest::collection::vec(1u64..=5, nvars).prop_map(Weight::new)
        }

        proptest! {
            #[test]
            fn order_is_multiplicative(
                f in arb_poly(3, 4, 5),
                g in arb_poly(3, 4, 5),
                w in arb_weight(3),
            ) {
                prop_assume!(!f.is_zero() && !g.is_zero());
                let prod = &f * &g;
                prop_assert_eq!(
                    weighted_order(&prod, &w).unwrap(),
                    weighted_order(&f, &w).unwrap() + weighted_order(&g, &w).unwrap()
                );
            }

            #[test]
            fn order_is_superadditive(
                f in arb_poly(3, 4, 5),
                g in arb_poly(3, 4, 5),
                w in arb_weight(3),
            ) {
                prop_assume!(!f.is_zero() && !g.is_zero());
                let sum = &f + &g;
                prop_assume!(!sum.is_zero());
                let lhs = weighted_order(&sum, &w).unwrap();
                let rhs = weighted_order(&f, &w).unwrap().min(weighted_order(&g, &w).unwrap());
                prop_assert!(lhs >= rhs);
            }

            #[test]
            fn initial_form_is_homogeneous_and_dominant(
                f in arb_poly(3, 5, 6),
                w in arb_weight(3),
            ) {
                prop_assume!(!f.is_zero());
                let ord = weighted_order(&f, &w).unwrap();
                let inf = initial_form(&f, &w).unwrap();
                for (e, _) in inf.terms() {
                    let d: u64 = e.0.iter().zip(&w.0).map(|(&a, &wi)| a as u64 * wi).sum();
                    prop_assert_eq!(d, ord);
                }
                let rest = &f - &inf;
                if !rest.is_zero() {
                    prop_assert!(weighted_order(&rest, &w).unwrap() > ord);
                }
            }

            // 200 random reconstruction instances
            #[test]
            fn divide_monic_reconstructs(
                f in arb_poly(3, 6, 8),
                mut u in arb_poly(3, 3, 4),
                var in 0usize..3,
            ) {
                // force u monic in var
                let d = u.degree_in(var) + 1;
                let mut e = Exponents::zero(3);
                e.0[var] = d;
                u.add_term(e, rat_int(1));
                let (q, r) = divide_monic(&f, &u, var).unwrap();
                prop_assert_eq!(&(&q * &u) + &r, f);
                prop_assert!(r.is_zero() || r.degree_in(var) < u.degree_in(var));
            }

            #[test]
            fn extract_power_is_exact(
                f in arb_poly(3, 5, 6),
                var in 0usize..3,
            ) {
                prop_assume!(!f.is_zero());
                let (m, g) = extract_power(&f, var).unwrap();
                let mut e = Exponents::zero(3);
                e.0[var] = m;
                prop_assert_eq!(g.mul_monomial(&e, &Rat::one()), f);
                prop_assert_eq!(g.min_exponent_in(var), 0);
            }
        }
    }
}
