//! Dense univariate polynomials over the rationals, with the pieces needed
//! for exact real-root work: gcd, square-free decomposition and Sturm
//! sequences.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients in ascending degree order; never has trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigRational::one())
    }

    pub fn x() -> Poly {
        Poly::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Poly {
        Poly::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: &BigRational) -> Poly {
        Poly::new(vec![-r.clone(), BigRational::one()])
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = d.lead().recip();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Whether `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &Poly) -> bool {
        self.rem(d).is_zero()
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p(a·x + b)`.
    pub fn compose_linear(&self, a: &BigRational, b: &BigRational) -> Poly {
        let lin = Poly::new(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return Poly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's square-free decomposition: monic factors `a_1, a_2, ...` with
    /// `self = lead · Π a_i^i`, pairwise coprime. Trailing constant factors
    /// are dropped, so every returned factor with index `i` carries exactly
    /// the roots of multiplicity `i + 1`.
    pub fn squarefree_decomposition(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            out.push(a);
        }
        while out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    /// Exact multiplicity of `r` as a root.
    pub fn multiplicity_at(&self, r: &BigRational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::linear_root(r);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, rem) = p.div_rem(&lin);
            if !rem.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    /// Power-of-two bound `B` with every real root in `(-B, B)`.
    /// Power sums `s_0..=s_m` of the roots, with multiplicity.
    fn power_sums(&self, m: usize) -> Vec<BigRational> {
        let d = self.degree().unwrap_or(0);
        let monic = self.monic();
        // elementary symmetric functions e_1..=e_d
        let e: Vec<BigRational> =
            (0..=d).map(|i| if i % 2 == 0 { monic.coeff(d - i) } else { -monic.coeff(d - i) }).collect();
        let mut s = vec![rat(d as i64)];
        for k in 1..=m {
            let mut acc = BigRational::zero();
            for i in 1..k.min(d + 1) {
                let term = &e[i] * &s[k - i];
                if i % 2 == 1 {
                    acc += term
                } else {
                    acc -= term
                }
            }
            if k <= d {
                let term = &e[k] * rat(k as i64);
                if k % 2 == 1 {
                    acc += term
                } else {
                    acc -= term
                }
            }
            s.push(acc);
        }
        s
    }

    /// Monic polynomial whose roots are all sums `a + b` with `a` a root of
    /// `self` and `b` a root of `other`, counted with multiplicity.
    pub fn root_sums(&self, other: &Poly) -> Poly {
        let m = self.degree().unwrap_or(0) * other.degree().unwrap_or(0);
        let sa = self.power_sums(m);
        let sb = other.power_sums(m);
        let mut binom = vec![BigRational::one()];
        let mut p = vec![rat(m as i64)];
        for k in 1..=m {
            let mut next = vec![BigRational::one(); k + 1];
            for j in 1..k {
                next[j] = &binom[j - 1] + &binom[j];
            }
            binom = next;
            let mut acc = BigRational::zero();
            for j in 0..=k {
                acc += &binom[j] * &sa[j] * &sb[k - j];
            }
            p.push(acc);
        }
        // Newton's identities back to elementary symmetric functions
        let mut e = vec![BigRational::one()];
        for k in 1..=m {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                let term = &e[k - i] * &p[i];
                if i % 2 == 1 {
                    acc += term
                } else {
                    acc -= term
                }
            }
            e.push(acc / rat(k as i64));
        }
        let coeffs = (0..=m).map(|i| {
            let k = m - i;
            if k.is_multiple_of(2) {
                e[k].clone()
            } else {
                -e[k].clone()
            }
        });
        Poly::new(coeffs.collect())
    }

    pub fn root_bound(&self) -> BigRational {
        let lead = self.lead().abs();
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let q = c.abs() / &lead;
            if q > m {
                m = q;
            }
        }
        let target = m + BigRational::one();
        let mut b = BigRational::one();
        while b <= target {
            b *= rat(2);
        }
        b
    }
}

/// Sturm chain of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Poly>,
}

impl SturmSequence {
    pub fn new(p: &Poly) -> SturmSequence {
        let mut chain = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return SturmSequence { chain };
        }
        chain.push(p.derivative());
        loop {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        SturmSequence { chain }
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Sign variations at +∞ (`pos`) or -∞.
    pub fn variations_at_infinity(&self, pos: bool) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let Some(deg) = p.degree() else { continue };
            let mut s = if p.lead().is_positive() { 1 } else { -1 };
            if !pos && deg % 2 == 1 {
                s = -s;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &Poly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if lo > hi {
        return Err(Error::InvalidInterval);
    }
    if p.is_zero() {
        return Err(Error::InvalidParameter("the zero polynomial has infinitely many roots".into()));
    }
    Ok(SturmSequence::new(&p.squarefree_part()).count(lo, hi))
}

/// Roots of `p` in `(lo, hi]` counted with multiplicity.
pub fn count_with_multiplicity(p: &Poly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if lo > hi {
        return Err(Error::InvalidInterval);
    }
    Ok(p.squarefree_decomposition()
        .iter()
        .enumerate()
        .map(|(i, f)| (i + 1) * SturmSequence::new(f).count(lo, hi))
        .sum())
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag)?;
                } else {
                    write!(f, "({})", mag)?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn root_sums_of_simple_polys() {
        // roots {1, 2} and {10, 20}
        let a = p(&[2, -3, 1]);
        let b = p(&[200, -30, 1]);
        let want = &(&(&p(&[-11, 1]) * &p(&[-21, 1])) * &p(&[-12, 1])) * &p(&[-22, 1]);
        assert_eq!(a.root_sums(&b), want);
        // x^2 - 2 with itself: ±2√2 and a double 0
        let r = p(&[-2, 0, 1]);
        assert_eq!(r.root_sums(&r), &p(&[-8, 0, 1]) * &p(&[0, 0, 1]));
        assert_eq!(p(&[-3, 1]).root_sums(&p(&[4, 1])), p(&[1, 1]));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 1]); // x - 1
        let b = p(&[1, 1]); // x + 1
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        let (q, r) = p(&[-1, 0, 1]).div_rem(&a);
        assert_eq!((q, r), (b.clone(), Poly::zero()));
        assert_eq!(p(&[5, 0, 1]).rem(&a), p(&[6]));
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!((&a - &a).degree(), None);
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x-2)
        let f = &p(&[-1, 1]).pow(2) * &p(&[-2, 1]);
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
        assert_eq!(f.squarefree_part(), p(&[2, -3, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![p(&[-2, 1]), p(&[-1, 1])]);
        assert_eq!(f.multiplicity_at(&rat(1)), 2);
        assert_eq!(f.multiplicity_at(&rat(2)), 1);
        assert_eq!(f.multiplicity_at(&rat(3)), 0);
    }

    #[test]
    fn yun_with_gaps() {
        // x^3 (x-1): multiplicities 3 and 1, middle factor is 1
        let f = &p(&[0, 1]).pow(3) * &p(&[-1, 1]);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], p(&[-1, 1]));
        assert_eq!(dec[1], Poly::one());
        assert_eq!(dec[2], p(&[0, 1]));
    }

    #[test]
    fn sturm_counts() {
        // C4 signless Laplacian: x^4 - 8x^3 + 20x^2 - 16x, roots 4, 2, 2, 0
        let f = p(&[0, -16, 20, -8, 1]);
        assert_eq!(sturm_count(&f, &rat(3), &rat(5)).unwrap(), 1);
        assert_eq!(sturm_count(&f, &rat(-1), &rat(5)).unwrap(), 3);
        assert_eq!(sturm_count(&f, &rat(0), &rat(2)).unwrap(), 1);
        assert_eq!(sturm_count(&f, &rat(2), &rat(4)).unwrap(), 1);
        assert_eq!(count_with_multiplicity(&f, &rat(-1), &rat(5)).unwrap(), 4);
        assert_eq!(count_with_multiplicity(&f, &rat(1), &rat(2)).unwrap(), 2);
        assert_eq!(sturm_count(&f, &rat(5), &rat(3)), Err(Error::InvalidInterval));
    }

    #[test]
    fn sturm_irrational_roots() {
        // x^2 - 2
        let f = p(&[-2, 0, 1]);
        let s = SturmSequence::new(&f);
        assert_eq!(s.count(&rat(0), &rat(2)), 1);
        assert_eq!(s.count(&ratio(141, 100), &ratio(142, 100)), 1);
        assert_eq!(s.count(&ratio(142, 100), &ratio(2, 1)), 0);
        assert_eq!(s.variations_at_infinity(false) - s.variations_at_infinity(true), 2);
    }

    #[test]
    fn compose_linear_shifts_roots() {
        // p(x) = x^2 - 2; p(3 - x) has roots 3 ± sqrt 2
        let f = p(&[-2, 0, 1]).compose_linear(&rat(-1), &rat(3));
        assert_eq!(f, p(&[7, -6, 1]));
    }

    #[test]
    fn root_bound_contains_roots() {
        let f = p(&[0, -16, 20, -8, 1]);
        let b = f.root_bound();
        assert!(b > rat(4));
        assert_eq!(sturm_count(&f, &-b.clone(), &b).unwrap(), 3);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -16, 20, -8, 1]).to_string(), "x^4 - 8x^3 + 20x^2 - 16x");
        assert_eq!(Poly::new(vec![ratio(1, 2), rat(-1)]).to_string(), "-x + (1/2)");
    }
}
