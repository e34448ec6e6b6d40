use std::fmt;

use num_traits::{One, Zero};

use super::{ArithError, Poly, Rational};

/// Element of the fraction field of `Poly`: a reduced pair of polynomials with
/// a monic denominator, so equal values have identical representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn zero(nvars: usize) -> Self {
        RatFun {
            num: Poly::zero(nvars),
            den: Poly::one(nvars),
        }
    }

    pub fn one(nvars: usize) -> Self {
        RatFun {
            num: Poly::one(nvars),
            den: Poly::one(nvars),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        RatFun {
            num: Poly::constant(nvars, c),
            den: Poly::one(nvars),
        }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        Poly::var(nvars, v).into()
    }

    pub fn from_ratio(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(RatFun::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFun::zero(den.nvars());
        }
        let (num, den) = if den.is_constant() {
            (num.scale(&den.constant_term().recip()), Poly::one(den.nvars()))
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        // Canonical form: monic denominator.
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            RatFun {
                num: num.scale(&lc.recip()),
                den: den.scale(&lc.recip()),
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one_poly()
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        if self.den == other.den {
            return RatFun::reduced(self.num.add(&other.num), self.den.clone());
        }
        RatFun::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        if self.den == other.den {
            return RatFun::reduced(self.num.sub(&other.num), self.den.clone());
        }
        RatFun::reduced(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        if self.is_zero() || other.is_zero() {
            return RatFun::zero(self.nvars());
        }
        RatFun::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        RatFun::reduced(self.num.scale(c), self.den.clone())
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun, ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(RatFun::reduced(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn recip(&self) -> Result<RatFun, ArithError> {
        RatFun::one(self.nvars()).div(self)
    }

    /// Exact partial derivative (quotient rule).
    pub fn derivative(&self, var: usize) -> RatFun {
        if self.is_polynomial() {
            return RatFun {
                num: self.num.derivative(var),
                den: self.den.clone(),
            };
        }
        let n = self.num.derivative(var).mul(&self.den);
        let d = self.num.mul(&self.den.derivative(var));
        RatFun::reduced(n.sub(&d), self.den.mul(&self.den))
    }

    /// Exact evaluation; reports a pole when the denominator vanishes.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, ArithError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(ArithError::Pole);
        }
        Ok(self.num.eval(point) / d)
    }

    pub fn to_string_with(&self, names: Option<&[String]>) -> String {
        if self.is_polynomial() {
            self.num.to_string_with(names)
        } else {
            format!(
                "({})/({})",
                self.num.to_string_with(names),
                self.den.to_string_with(names)
            )
        }
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }
}

impl From<Poly> for RatFun {
    fn from(num: Poly) -> Self {
        let nvars = num.nvars();
        RatFun {
            num,
            den: Poly::one(nvars),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(None))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn xv(n: usize, v: usize) -> RatFun {
        RatFun::var(n, v)
    }

    #[test]
    fn inverse_pair_collapses_to_one() {
        // (x/(1+y)) * ((1+y)/x) = 1
        let x = xv(2, 0);
        let y1 = xv(2, 1).add(&RatFun::one(2));
        let a = x.div(&y1).unwrap();
        let b = y1.div(&x).unwrap();
        assert_eq!(a.mul(&b), RatFun::one(2));
    }

    #[test]
    fn addition_cancels() {
        // (x+1) + (-1) = x
        let p = xv(1, 0).add(&RatFun::one(1));
        assert_eq!(p.add(&RatFun::constant(1, rat(-1))), xv(1, 0));
    }

    #[test]
    fn reduction_by_gcd() {
        // (x^2-1)/(x-1) = x+1
        let num = Poly::var(1, 0).pow(2).sub(&Poly::one(1));
        let den = Poly::var(1, 0).sub(&Poly::one(1));
        let f = RatFun::from_ratio(num, den).unwrap();
        assert_eq!(f, xv(1, 0).add(&RatFun::one(1)));
        assert!(f.is_polynomial());
    }

    #[test]
    fn derivative_of_inverse() {
        // d/dx (1/x) = -1/x^2
        let f = RatFun::one(1).div(&xv(1, 0)).unwrap();
        let d = f.derivative(0);
        let expect = RatFun::from_ratio(
            Poly::constant(1, rat(-1)),
            Poly::var(1, 0).pow(2),
        )
        .unwrap();
        assert_eq!(d, expect);
    }

    #[test]
    fn eval_and_pole() {
        let f = xv(2, 0).add(&xv(2, 1));
        assert_eq!(f.eval(&[rat(1), rat(2)]).unwrap(), rat(3));
        let g = RatFun::one(1).div(&xv(1, 0)).unwrap();
        assert_eq!(g.eval(&[rat(0)]), Err(ArithError::Pole));
        assert_eq!(g.eval(&[rat(4)]).unwrap(), ratio(1, 4));
    }

    #[test]
    fn canonical_form_is_unique() {
        // 2x/(2x^2) and 1/x agree after canonicalization.
        let a = RatFun::from_ratio(
            Poly::var(1, 0).scale(&rat(2)),
            Poly::var(1, 0).pow(2).scale(&rat(2)),
        )
        .unwrap();
        let b = RatFun::one(1).div(&xv(1, 0)).unwrap();
        assert_eq!(a, b);
        assert!(a.sub(&b).is_zero());
    }
}
