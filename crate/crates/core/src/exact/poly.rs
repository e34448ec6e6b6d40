use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{ArithError, Rational};

/// Multivariate polynomial over the rationals.
///
/// Terms are kept in a map from dense exponent vectors (length `nvars`) to
/// nonzero rational coefficients. The lexicographic order on exponent vectors
/// doubles as the term order used for leading coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        Poly { nvars, terms }
    }

    /// The monomial `x_var` (zero-based variable index).
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[var] = 1;
        Poly::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, expo: Vec<u16>, c: Rational) -> Self {
        assert_eq!(expo.len(), nvars, "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(expo, c);
        }
        Poly { nvars, terms }
    }

    pub fn from_terms(
        nvars: usize,
        it: impl IntoIterator<Item = (Vec<u16>, Rational)>,
    ) -> Result<Self, ArithError> {
        let mut p = Poly::zero(nvars);
        for (e, c) in it {
            if e.len() != nvars {
                return Err(ArithError::NvarsMismatch(e.len(), nvars));
            }
            p.add_term(&e, &c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Constant term; the whole value when `is_constant`.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    fn add_term(&mut self, expo: &[u16], c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(expo) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(expo);
                }
            }
            None => {
                self.terms.insert(expo.to_vec(), c.clone());
            }
        }
    }

    fn check_nvars(&self, other: &Poly) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials over different variable sets"
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_nvars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_nvars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, &-c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.clone(), k * c))
            .collect();
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_nvars(other);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(&e, &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Poly {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(&e2, &(c * Rational::from_integer(e[var].into())));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point length mismatch");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        acc
    }

    /// Leading (exponent, coefficient) in lexicographic order.
    pub fn leading(&self) -> Option<(&Vec<u16>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Exact division; `None` when `self` is not a polynomial multiple of `d`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        self.check_nvars(d);
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (dlead, dc) = d.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((rlead, rc)) = rem.leading() {
            let mut e = Vec::with_capacity(self.nvars);
            for (a, b) in rlead.iter().zip(dlead) {
                if a < b {
                    return None;
                }
                e.push(a - b);
            }
            let t = Poly::monomial(self.nvars, e, rc / dc);
            rem = rem.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// GCD up to a nonzero rational factor, via primitive pseudo-remainder
    /// sequences in the highest active variable. Degrees stay small in this
    /// library, so no subresultant bookkeeping is needed.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check_nvars(other);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one(self.nvars);
        }
        // Pick the highest variable that actually occurs.
        let var = (0..self.nvars)
            .rev()
            .find(|&v| self.degree_in(v) > 0 || other.degree_in(v) > 0)
            .expect("nonconstant operands");
        if self.degree_in(var) == 0 || other.degree_in(var) == 0 {
            // One operand is free of `var`: gcd divides the other's content.
            let (free, bound) = if self.degree_in(var) == 0 {
                (self, other)
            } else {
                (other, self)
            };
            return free.gcd(&bound.content_wrt(var));
        }

        let cont_a = self.content_wrt(var);
        let cont_b = other.content_wrt(var);
        let cont_gcd = cont_a.gcd(&cont_b);

        let mut a = self.div_exact(&cont_a).expect("content divides");
        let mut b = other.div_exact(&cont_b).expect("content divides");
        if a.degree_in(var) < b.degree_in(var) {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = Poly::pseudo_rem(&a, &b, var);
            if r.is_zero() {
                let pp = b.div_exact(&b.content_wrt(var)).expect("content divides");
                return cont_gcd.mul(&pp);
            }
            if r.degree_in(var) == 0 {
                // Nonzero remainder free of `var`: no common factor in `var`.
                return cont_gcd;
            }
            a = b;
            b = r.div_exact(&r.content_wrt(var)).expect("content divides");
        }
    }

    /// Content with respect to `var`: gcd of the coefficients of the powers of
    /// `var`, each a polynomial in the remaining variables.
    fn content_wrt(&self, var: usize) -> Poly {
        let mut coeffs: BTreeMap<u16, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[var];
            let mut e2 = e.clone();
            e2[var] = 0;
            coeffs
                .entry(k)
                .or_insert_with(|| Poly::zero(self.nvars))
                .add_term(&e2, c);
        }
        let mut g = Poly::zero(self.nvars);
        for c in coeffs.values() {
            g = g.gcd(c);
            if g.is_constant() && !g.is_zero() {
                return Poly::one(self.nvars);
            }
        }
        g
    }

    /// Pseudo-remainder of `a` by `b` in variable `var`.
    fn pseudo_rem(a: &Poly, b: &Poly, var: usize) -> Poly {
        let db = b.degree_in(var);
        let lb = b.coeff_wrt(var, db);
        let mut r = a.clone();
        while !r.is_zero() {
            let dr = r.degree_in(var);
            if dr < db {
                break;
            }
            let lr = r.coeff_wrt(var, dr);
            let shift = Poly::monomial(a.nvars, {
                let mut e = vec![0; a.nvars];
                e[var] = dr - db;
                e
            }, Rational::one());
            r = r.mul(&lb).sub(&b.mul(&lr).mul(&shift));
        }
        r
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    fn coeff_wrt(&self, var: usize, k: u16) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.add_term(&e2, c);
            }
        }
        out
    }

    /// Rescales so the lexicographic leading coefficient is one.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    /// Renders with the given variable names (defaults to x1, x2, ...).
    pub fn to_string_with(&self, names: Option<&[String]>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        // Highest lex term first reads most naturally.
        for (e, c) in self.terms.iter().rev() {
            let mut factors: Vec<String> = Vec::new();
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = match names {
                    Some(ns) => ns[v].clone(),
                    None => format!("x{}", v + 1),
                };
                if k == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{k}"));
                }
            }
            let mono = factors.join("*");
            let piece = if mono.is_empty() {
                super::rational_string(c)
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{mono}")
            } else {
                format!("{}*{}", super::rational_string(c), mono)
            };
            parts.push(piece);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(None))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn x(n: usize, v: usize) -> Poly {
        Poly::var(n, v)
    }

    #[test]
    fn arithmetic_basics() {
        let p = x(2, 0).mul(&x(2, 0)).add(&x(2, 1).scale(&rat(3))); // x^2 + 3y
        let q = x(2, 0).sub(&Poly::one(2)); // x - 1
        assert_eq!(p.add(&q).sub(&q), p);
        assert_eq!(p.mul(&q).div_exact(&q).unwrap(), p);
        assert_eq!(p.total_degree(), 2);
        assert!(p.mul(&Poly::zero(2)).is_zero());
    }

    #[test]
    fn derivative_and_eval() {
        // d/dx (x^2 y) = 2xy
        let p = x(2, 0).pow(2).mul(&x(2, 1));
        let d = p.derivative(0);
        assert_eq!(d, x(2, 0).mul(&x(2, 1)).scale(&rat(2)));
        assert_eq!(p.eval(&[rat(2), rat(5)]), rat(20));
        assert_eq!(p.eval(&[ratio(1, 2), rat(4)]), rat(1));
    }

    #[test]
    fn gcd_cancels_common_factor() {
        // (x^2 - 1) and (x - 1) share (x - 1).
        let xm1 = x(1, 0).sub(&Poly::one(1));
        let xp1 = x(1, 0).add(&Poly::one(1));
        let g = xm1.mul(&xp1).gcd(&xm1);
        assert_eq!(g.monic(), xm1.monic());

        // Multivariate: (x+y)^2 (x-y) vs (x+y)(x-y)^2 share (x+y)(x-y).
        let s = x(2, 0).add(&x(2, 1));
        let d = x(2, 0).sub(&x(2, 1));
        let a = s.pow(2).mul(&d);
        let b = s.mul(&d.pow(2));
        let g = a.gcd(&b).monic();
        assert_eq!(g, s.mul(&d).monic());
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let a = x(3, 0).mul(&x(3, 1)).add(&Poly::one(3));
        let b = x(3, 2).add(&x(3, 0));
        assert!(a.gcd(&b).is_constant());
    }

    #[test]
    fn div_exact_rejects_non_multiple() {
        let a = x(1, 0).pow(2).add(&Poly::one(1));
        let b = x(1, 0).sub(&Poly::one(1));
        assert!(a.div_exact(&b).is_none());
    }

    #[test]
    fn display_reads_naturally() {
        let p = x(2, 0).pow(2).sub(&x(2, 1).scale(&ratio(1, 2)));
        assert_eq!(p.to_string(), "x1^2 - 1/2*x2");
    }
}
