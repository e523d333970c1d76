//! GCD-based utilities on sparse rational polynomials: primitive-PRS
//! multivariate gcd, Yun square-free decomposition, coprime refinement of
//! component lists, resultant-style variable elimination, and rational
//! root extraction. Everything here works at desk scale; inputs are the
//! initial forms and chart polynomials produced by the blow-up machinery.

use super::{Exponents, Polynomial, Rat};
use crate::error::{EngineError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact division attempt via graded-lex reduction. Returns `None` when
/// `g` does not divide `f`.
pub fn try_exact_div(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if g.is_zero() {
        return None;
    }
    if f.is_zero() {
        return Some(Polynomial::zero(f.nvars()));
    }
    let (ge, gc) = {
        let (e, c) = g.leading()?;
        (e.clone(), c.clone())
    };
    let mut q = Polynomial::zero(f.nvars());
    let mut r = f.clone();
    while !r.is_zero() {
        let (re, rc) = {
            let (e, c) = r.leading().unwrap();
            (e.clone(), c.clone())
        };
        let mut diff = vec![0u32; re.len()];
        for i in 0..re.len() {
            if re.0[i] < ge.0[i] {
                return None;
            }
            diff[i] = re.0[i] - ge.0[i];
        }
        let coeff = rc / &gc;
        let mono = Exponents(diff);
        q.add_term(mono.clone(), coeff.clone());
        r = &r - &g.mul_monomial(&mono, &coeff);
    }
    Some(q)
}

fn highest_variable(f: &Polynomial) -> Option<usize> {
    (0..f.nvars()).rev().find(|&v| f.involves(v))
}

/// Content of `f` with respect to `var`: gcd of the coefficient
/// polynomials of the powers of `var`.
fn content(f: &Polynomial, var: usize) -> Polynomial {
    let mut c = Polynomial::zero(f.nvars());
    for k in 0..=f.degree_in(var) {
        let coeff = f.coefficient_of(var, k);
        if !coeff.is_zero() {
            c = multivariate_gcd(&c, &coeff);
        }
    }
    c
}

fn pseudo_rem(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let db = b.degree_in(var);
    let lb = b.coefficient_of(var, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.coefficient_of(var, dr);
        let mut shift = Exponents::zero(a.nvars());
        shift.0[var] = dr - db;
        // lb * r - lr * x^(dr-db) * b kills the top slice
        r = &(&r * &lb) - &(&b.mul_monomial(&shift, &Rat::one()) * &lr);
        debug_assert!(r.is_zero() || r.degree_in(var) < dr);
    }
    r
}

/// Multivariate gcd over the rationals, normalized integer-primitive with
/// positive leading coefficient. `gcd(0, g) = normalize(g)`.
pub fn multivariate_gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.primitive_normalized();
    }
    if g.is_zero() {
        return f.primitive_normalized();
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(f.nvars());
    }
    let vf = highest_variable(f);
    let vg = highest_variable(g);
    let var = match (vf, vg) {
        (Some(a), Some(b)) => a.max(b),
        _ => return Polynomial::one(f.nvars()),
    };
    if !f.involves(var) {
        // gcd(f, g) divides cont_var(g) and f
        return multivariate_gcd(f, &content(g, var));
    }
    if !g.involves(var) {
        return multivariate_gcd(&content(f, var), g);
    }
    let cf = content(f, var);
    let cg = content(g, var);
    let pf = try_exact_div(f, &cf).expect("content divides");
    let pg = try_exact_div(g, &cg).expect("content divides");
    let c = multivariate_gcd(&cf, &cg);

    let (mut a, mut b) = if pf.degree_in(var) >= pg.degree_in(var) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    loop {
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            break;
        }
        let rp = if r.involves(var) {
            let cr = content(&r, var);
            try_exact_div(&r, &cr).expect("content divides").primitive_normalized()
        } else {
            // a nonzero var-free remainder means the primitive parts are coprime
            Polynomial::one(f.nvars())
        };
        if rp.is_constant() {
            return c;
        }
        a = b;
        b = rp;
    }
    (&c * &b.primitive_normalized()).primitive_normalized()
}

/// Yun's square-free decomposition, extended to multivariate input by
/// recursing on the content. Returns pairwise coprime `(p_i, m_i)` with
/// `f = unit * prod p_i^{m_i}`, each `p_i` square-free and normalized.
pub fn squarefree_decomposition(f: &Polynomial) -> Vec<(Polynomial, u32)> {
    let f = f.primitive_normalized();
    if f.is_constant() {
        return vec![];
    }
    let var = highest_variable(&f).expect("non-constant");
    let cont = content(&f, var);
    let pp = try_exact_div(&f, &cont).expect("content divides");
    let mut parts = squarefree_decomposition(&cont);

    // Yun on the primitive part with respect to var
    let df = pp.partial_derivative(var);
    if df.is_zero() {
        // pp is var-free only if it is constant here; cannot happen since
        // pp is primitive of positive var-degree over a characteristic-0 field
        parts.push((pp.primitive_normalized(), 1));
        return merge_coprime(parts);
    }
    let mut g = multivariate_gcd(&pp, &df);
    let mut w = try_exact_div(&pp, &g).expect("gcd divides");
    let mut mult = 1u32;
    while !w.is_constant() {
        let y = multivariate_gcd(&w, &g);
        let part = try_exact_div(&w, &y).expect("gcd divides");
        if !part.is_constant() {
            parts.push((part.primitive_normalized(), mult));
        }
        w = y;
        g = try_exact_div(&g, &w).expect("gcd divides");
        mult += 1;
    }
    merge_coprime(parts)
}

/// Refine a multiset of (component, multiplicity) pairs into pairwise
/// coprime components, merging multiplicities of shared factors. Inputs
/// must individually be square-free.
pub fn merge_coprime(mut parts: Vec<(Polynomial, u32)>) -> Vec<(Polynomial, u32)> {
    loop {
        let mut changed = false;
        'outer: for i in 0..parts.len() {
            for j in (i + 1)..parts.len() {
                let h = multivariate_gcd(&parts[i].0, &parts[j].0);
                if !h.is_constant() {
                    let (pi, mi) = parts[i].clone();
                    let (pj, mj) = parts[j].clone();
                    let pi2 = try_exact_div(&pi, &h).expect("gcd divides");
                    let pj2 = try_exact_div(&pj, &h).expect("gcd divides");
                    // replace j first so index i stays valid
                    parts.remove(j);
                    parts.remove(i);
                    if !pi2.is_constant() {
                        parts.push((pi2.primitive_normalized(), mi));
                    }
                    if !pj2.is_constant() {
                        parts.push((pj2.primitive_normalized(), mj));
                    }
                    parts.push((h, mi + mj));
                    changed = true;
                    break 'outer;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // deterministic order
    parts.sort_by(|a, b| {
        a.0.leading()
            .map(|(e, _)| e.clone())
            .cmp(&b.0.leading().map(|(e, _)| e.clone()))
            .then_with(|| format!("{}", a.0).cmp(&format!("{}", b.0)))
    });
    parts
}

/// Like `merge_coprime` but with rational multiplicities.
pub fn coprime_refine(parts: Vec<(Polynomial, Rat)>) -> Vec<(Polynomial, Rat)> {
    let mut parts = parts;
    loop {
        let mut changed = false;
        'outer: for i in 0..parts.len() {
            for j in (i + 1)..parts.len() {
                let h = multivariate_gcd(&parts[i].0, &parts[j].0);
                if !h.is_constant() {
                    let (pi, mi) = parts[i].clone();
                    let (pj, mj) = parts[j].clone();
                    let pi2 = try_exact_div(&pi, &h).expect("gcd divides");
                    let pj2 = try_exact_div(&pj, &h).expect("gcd divides");
                    parts.remove(j);
                    parts.remove(i);
                    if !pi2.is_constant() {
                        parts.push((pi2.primitive_normalized(), mi.clone()));
                    }
                    if !pj2.is_constant() {
                        parts.push((pj2.primitive_normalized(), mj.clone()));
                    }
                    parts.push((h, mi + mj));
                    changed = true;
                    break 'outer;
                }
            }
        }
        if !changed {
            break;
        }
    }
    parts.sort_by(|a, b| {
        a.0.leading()
            .map(|(e, _)| e.clone())
            .cmp(&b.0.leading().map(|(e, _)| e.clone()))
            .then_with(|| format!("{}", a.0).cmp(&format!("{}", b.0)))
    });
    parts
}

pub enum Elimination {
    /// A nonzero polynomial free of the eliminated variable; its zero set
    /// contains the projection of the common zeros.
    Eliminant(Polynomial),
    /// The two inputs share a factor of positive degree in the variable.
    CommonComponent(Polynomial),
}

/// Eliminate `var` from the pair `(f, g)` by a primitive PRS. The last
/// var-free nonzero remainder lies in the ideal generated by `f` and `g`.
pub fn eliminate_variable(f: &Polynomial, g: &Polynomial, var: usize) -> Result<Elimination> {
    if f.is_zero() || g.is_zero() {
        return Err(EngineError::ZeroPolynomial);
    }
    if !f.involves(var) {
        return Ok(Elimination::Eliminant(f.clone()));
    }
    if !g.involves(var) {
        return Ok(Elimination::Eliminant(g.clone()));
    }
    let h = multivariate_gcd(f, g);
    if h.involves(var) {
        return Ok(Elimination::CommonComponent(h));
    }
    let (mut a, mut b) = if f.degree_in(var) >= g.degree_in(var) {
        (f.clone(), g.clone())
    } else {
        (g.clone(), f.clone())
    };
    loop {
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            // gcd was var-free, so the PRS cannot vanish before leaving var
            return Err(EngineError::Internal(
                "elimination PRS vanished unexpectedly".into(),
            ));
        }
        if !r.involves(var) {
            return Ok(Elimination::Eliminant(r.primitive_normalized()));
        }
        a = b;
        b = r.primitive_normalized();
    }
}

fn divisors(n: &BigInt, cap: usize) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return Some(vec![]);
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &d * &d <= n && d <= bound {
        let mut m = 0u32;
        while (&n % &d).is_zero() {
            n /= &d;
            m += 1;
        }
        if m > 0 {
            primes.push((d.clone(), m));
        }
        d += 1;
    }
    if !n.is_one() {
        if n > BigInt::from(1_000_000_000_000u64) {
            // give up on huge cofactors; caller logs the possible miss
            return None;
        }
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, m) in primes {
        let mut next = Vec::new();
        for dvs in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=m {
                next.push(dvs * &pk);
                pk *= &p;
                if next.len() > cap {
                    return None;
                }
            }
        }
        divs = next;
    }
    Some(divs)
}

/// All rational roots of a univariate-in-`var` polynomial whose other
/// variables do not occur. The boolean is false when the divisor
/// enumeration had to give up (possible missed roots).
pub fn rational_roots(f: &Polynomial, var: usize) -> (Vec<Rat>, bool) {
    let mut roots = Vec::new();
    if f.is_zero() {
        return (roots, true);
    }
    let f = f.primitive_normalized();
    let (k, g) = super::extract_power(&f, var).expect("nonzero");
    if k > 0 {
        roots.push(Rat::zero());
    }
    if g.is_constant() {
        return (roots, true);
    }
    let deg = g.degree_in(var);
    let a0 = g.coefficient_of(var, 0);
    let ad = g.coefficient_of(var, deg);
    debug_assert!(a0.is_constant() && ad.is_constant());
    let a0 = a0.constant_term();
    let ad = ad.constant_term();
    let (p_divs, q_divs) = match (
        divisors(a0.numer(), 4096),
        divisors(ad.numer(), 4096),
    ) {
        (Some(p), Some(q)) => (p, q),
        _ => return (roots, false),
    };
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = Rat::new(p * BigInt::from(sign), q.clone());
                if g.eval_var(var, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand.clone());
                }
            }
        }
    }
    roots.sort();
    (roots, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, rat, rat_int};

    fn p3(s: &str) -> Polynomial {
        parse_polynomial(s, 3).unwrap()
    }

    #[test]
    fn gcd_simple() {
        let f = p3("(x+y)^2 (x - z)");
        let g = p3("(x+y) (x + z)");
        let h = multivariate_gcd(&f, &g);
        assert_eq!(h, p3("x+y"));

        let a = p3("x^2 + y^2");
        let b = p3("x*y");
        assert_eq!(multivariate_gcd(&a, &b), Polynomial::one(3));
    }

    #[test]
    fn exact_division() {
        let f = p3("(x^2+y^2+z^2)^2");
        let g = p3("x^2+y^2+z^2");
        assert_eq!(try_exact_div(&f, &g), Some(g.clone()));
        assert_eq!(try_exact_div(&g, &p3("x+y")), None);
    }

    #[test]
    fn squarefree_of_squared_conic() {
        let f = p3("(x^2+y^2+z^2)^2");
        let parts = squarefree_decomposition(&f);
        assert_eq!(parts, vec![(p3("x^2+y^2+z^2"), 2)]);

        let g = p3("(x-y)^2");
        assert_eq!(squarefree_decomposition(&g), vec![(p3("x-y"), 2)]);

        let h = p3("x^2 (x+y)^3 z");
        let parts = squarefree_decomposition(&h);
        assert_eq!(parts.len(), 3);
        let mut mults: Vec<u32> = parts.iter().map(|(_, m)| *m).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 2, 3]);
        let mut prod = Polynomial::one(3);
        for (p, m) in &parts {
            prod = &prod * &p.pow(*m);
        }
        assert_eq!(prod.primitive_normalized(), h.primitive_normalized());
    }

    #[test]
    fn eliminate_and_roots() {
        // common zeros of (y - 1, y + z - 3) project to z = 2
        let f = p3("y - 1");
        let g = p3("y + z - 3");
        match eliminate_variable(&f, &g, 1).unwrap() {
            Elimination::Eliminant(e) => {
                let (roots, complete) = rational_roots(&e, 2);
                assert!(complete);
                assert_eq!(roots, vec![rat_int(2)]);
            }
            _ => panic!("expected eliminant"),
        }

        let q = p3("(z - 1/2)(z + 3) z");
        let (roots, complete) = rational_roots(&q, 2);
        assert!(complete);
        assert_eq!(roots, vec![rat_int(-3), Rat::zero(), rat(1, 2)]);
    }

    #[test]
    fn coprime_refinement_merges_shared_factors() {
        let parts = vec![
            (p3("(x+y)(x-y)"), rat_int(1)),
            (p3("x+y"), rat(1, 2)),
        ];
        let refined = coprime_refine(parts);
        assert_eq!(refined.len(), 2);
        let total: Rat = refined
            .iter()
            .map(|(p, m)| m * rat_int(p.total_degree() as i64))
            .sum();
        assert_eq!(total, rat(5, 2)); // 1*(deg 1) + 3/2*(deg 1)
    }
}
