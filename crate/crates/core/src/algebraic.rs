//! Exact real algebraic numbers represented by an isolating interval.
//!
//! Irrational values (and rationals not yet pinned down) are held as a
//! square-free polynomial with exactly one root in an open interval whose
//! rational endpoints are not roots. Comparison refines intervals until they
//! separate, and settles equality with a gcd, so it never consults floating
//! point.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::poly::{rat, Poly, SturmSequence};

#[derive(Clone)]
pub enum AlgebraicReal {
    Rational(BigRational),
    Isolated { poly: Arc<Poly>, lo: BigRational, hi: BigRational },
}

impl AlgebraicReal {
    pub fn rational(r: BigRational) -> Self {
        AlgebraicReal::Rational(r)
    }

    pub fn integer(n: i64) -> Self {
        AlgebraicReal::Rational(rat(n))
    }

    /// The unique root of `poly` in `(lo, hi)`. `poly` must be square-free
    /// with exactly one root there and no root at either end.
    pub fn isolated(poly: Arc<Poly>, lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo < hi);
        debug_assert!(poly.sign_at(&lo) != 0 && poly.sign_at(&hi) != 0);
        debug_assert!(poly.sign_at(&lo) != poly.sign_at(&hi));
        AlgebraicReal::Isolated { poly, lo, hi }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            AlgebraicReal::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Rational enclosure `[lo, hi]`.
    pub fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            AlgebraicReal::Rational(r) => (r.clone(), r.clone()),
            AlgebraicReal::Isolated { lo, hi, .. } => (lo.clone(), hi.clone()),
        }
    }

    pub fn width(&self) -> BigRational {
        let (lo, hi) = self.bounds();
        hi - lo
    }

    /// Halves the isolating interval; may discover the value is rational.
    pub fn bisect(&mut self) {
        let AlgebraicReal::Isolated { poly, lo, hi } = self else { return };
        let mid = (&*lo + &*hi) / rat(2);
        let s_mid = poly.sign_at(&mid);
        if s_mid == 0 {
            *self = AlgebraicReal::Rational(mid);
            return;
        }
        if s_mid == poly.sign_at(lo) {
            *lo = mid;
        } else {
            *hi = mid;
        }
    }

    pub fn refine_to(&mut self, width: &BigRational) {
        while &self.width() > width {
            self.bisect();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut x = self.clone();
        x.refine_to(&BigRational::new(1.into(), num_bigint::BigInt::from(1u64 << 53)));
        let (lo, hi) = x.bounds();
        ((lo + hi) / rat(2)).to_f64().unwrap_or(f64::NAN)
    }

    pub fn neg(&self) -> AlgebraicReal {
        match self {
            AlgebraicReal::Rational(r) => AlgebraicReal::Rational(-r),
            AlgebraicReal::Isolated { poly, lo, hi } => AlgebraicReal::Isolated {
                poly: Arc::new(poly.compose_linear(&rat(-1), &BigRational::zero())),
                lo: -hi,
                hi: -lo,
            },
        }
    }

    pub fn add_rational(&self, c: &BigRational) -> AlgebraicReal {
        match self {
            AlgebraicReal::Rational(r) => AlgebraicReal::Rational(r + c),
            AlgebraicReal::Isolated { poly, lo, hi } => {
                AlgebraicReal::Isolated { poly: Arc::new(poly.compose_linear(&rat(1), &-c)), lo: lo + c, hi: hi + c }
            }
        }
    }

    /// `c - self`
    pub fn rational_minus(&self, c: &BigRational) -> AlgebraicReal {
        self.neg().add_rational(c)
    }

    pub fn cmp_rational(&self, c: &BigRational) -> Ordering {
        match self {
            AlgebraicReal::Rational(r) => r.cmp(c),
            AlgebraicReal::Isolated { poly, lo, hi } => {
                if c <= lo {
                    Ordering::Greater
                } else if c >= hi {
                    Ordering::Less
                } else {
                    let s = poly.sign_at(c);
                    if s == 0 {
                        Ordering::Equal
                    } else if s == poly.sign_at(lo) {
                        // root lies in (c, hi)
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                }
            }
        }
    }

    /// Exact total order.
    pub fn cmp_exact(&self, other: &AlgebraicReal) -> Ordering {
        match (self, other) {
            (AlgebraicReal::Rational(a), AlgebraicReal::Rational(b)) => a.cmp(b),
            (x, AlgebraicReal::Rational(b)) => x.cmp_rational(b),
            (AlgebraicReal::Rational(a), y) => y.cmp_rational(a).reverse(),
            (
                AlgebraicReal::Isolated { poly: p, lo: plo, hi: phi },
                AlgebraicReal::Isolated { poly: q, lo: qlo, hi: qhi },
            ) => {
                if phi <= qlo {
                    return Ordering::Less;
                }
                if qhi <= plo {
                    return Ordering::Greater;
                }
                let mut a = self.clone();
                let mut b = other.clone();
                let mut checked_gcd = false;
                for round in 0.. {
                    if a.width() >= b.width() {
                        a.bisect();
                    } else {
                        b.bisect();
                    }
                    if let Some(o) = separated(&a, &b) {
                        return o;
                    }
                    if round >= 16 && !checked_gcd {
                        checked_gcd = true;
                        // equal iff the common factor has a root in the overlap
                        let (alo, ahi) = a.bounds();
                        let (blo, bhi) = b.bounds();
                        let lo = alo.max(blo);
                        let hi = ahi.min(bhi);
                        let g = p.gcd(q);
                        if g.degree().unwrap_or(0) > 0 {
                            let s = SturmSequence::new(&g);
                            let inside = s.count(&lo, &hi) - usize::from(g.sign_at(&hi) == 0);
                            if inside > 0 {
                                return Ordering::Equal;
                            }
                        }
                    }
                }
                unreachable!()
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cmp_rational(&BigRational::zero()) == Ordering::Equal
    }

    pub fn signum(&self) -> i32 {
        match self.cmp_rational(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Compares `self + other` with `c` exactly.
    pub fn sum_cmp_rational(&self, other: &AlgebraicReal, c: &BigRational) -> Ordering {
        self.cmp_exact(&other.rational_minus(c))
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicReal::Rational(r) => write!(f, "{r}"),
            AlgebraicReal::Isolated { poly, lo, hi } => write!(f, "root of {poly} in ({lo}, {hi})"),
        }
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicReal::Rational(r) => write!(f, "{r}"),
            AlgebraicReal::Isolated { .. } => write!(f, "{:.12}", self.to_f64()),
        }
    }
}

/// Order of two values once one is rational or their intervals are disjoint.
fn separated(a: &AlgebraicReal, b: &AlgebraicReal) -> Option<Ordering> {
    if let Some(x) = a.as_rational() {
        return Some(b.cmp_rational(x).reverse());
    }
    if let Some(y) = b.as_rational() {
        return Some(a.cmp_rational(y));
    }
    let (alo, ahi) = a.bounds();
    let (blo, bhi) = b.bounds();
    if ahi <= blo {
        return Some(Ordering::Less);
    }
    if bhi <= alo {
        return Some(Ordering::Greater);
    }
    None
}

/// Distinct real roots of a square-free polynomial, ascending.
pub fn isolate_real_roots(p: &Poly) -> Vec<AlgebraicReal> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let b = p.root_bound();
    let p = Arc::new(p.clone());
    let sturm = SturmSequence::new(&p);
    isolate_in(&p, &sturm, -b.clone(), b, &mut out);
    out.sort();
    out
}

fn isolate_in(p: &Arc<Poly>, sturm: &SturmSequence, lo: BigRational, hi: BigRational, out: &mut Vec<AlgebraicReal>) {
    match sturm.count(&lo, &hi) {
        0 => {}
        1 => out.push(AlgebraicReal::isolated(p.clone(), lo, hi)),
        _ => {
            let mid = (&lo + &hi) / rat(2);
            if p.sign_at(&mid) == 0 {
                out.push(AlgebraicReal::Rational(mid.clone()));
                let deflated = Arc::new(p.div_rem(&Poly::linear_root(&mid)).0);
                let chain = SturmSequence::new(&deflated);
                isolate_in(&deflated, &chain, lo, hi, out);
            } else {
                isolate_in(p, sturm, lo, mid.clone(), out);
                isolate_in(p, sturm, mid, hi, out);
            }
        }
    }
}
