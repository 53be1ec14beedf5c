use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};

use super::{SquareMatrix, SymMatrix};
use crate::algebraic::{isolate_real_roots, AlgebraicReal};
use crate::error::Result;
use crate::poly::{count_with_multiplicity, sturm_count, Poly};

impl AsRef<SquareMatrix> for SquareMatrix {
    fn as_ref(&self) -> &SquareMatrix {
        self
    }
}

impl AsRef<SquareMatrix> for SymMatrix {
    fn as_ref(&self) -> &SquareMatrix {
        self.matrix()
    }
}

/// Exact `det(xI - M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    poly: Poly,
}

impl CharPoly {
    pub fn from_poly(poly: Poly) -> Self {
        CharPoly { poly }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.poly.eval(x)
    }

    /// Coefficients in ascending powers.
    pub fn coeffs(&self) -> &[BigRational] {
        self.poly.coeffs()
    }

    pub fn multiplicity_at(&self, r: &BigRational) -> usize {
        self.poly.multiplicity_at(r)
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn sturm_count(&self, lo: &BigRational, hi: &BigRational) -> Result<usize> {
        sturm_count(&self.poly, lo, hi)
    }

    /// Roots in `(lo, hi]` with multiplicity.
    pub fn count_with_multiplicity(&self, lo: &BigRational, hi: &BigRational) -> Result<usize> {
        count_with_multiplicity(&self.poly, lo, hi)
    }

    /// Roots strictly above `r`, with multiplicity.
    pub fn count_above(&self, r: &BigRational) -> usize {
        let b = self.poly.root_bound();
        let hi = if &b > r { b } else { r.clone() };
        self.count_with_multiplicity(r, &hi).expect("ordered interval")
    }

    pub fn spectrum(&self) -> ExactSpectrum {
        ExactSpectrum::of_poly(&self.poly)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Faddeev–LeVerrier: `c_{k-j} = -tr(M·N_j)/j`, `N_{j+1} = M·N_j + c_{k-j} I`.
fn faddeev_leverrier<T>(k: usize, entries: &[T]) -> Vec<T>
where
    T: Clone + Num + FromPrimitive,
{
    let mut coeffs = vec![T::zero(); k + 1];
    coeffs[k] = T::one();
    let mut acc: Vec<T> = vec![T::zero(); k * k];
    for i in 0..k {
        acc[i * k + i] = T::one();
    }
    for j in 1..=k {
        let mut prod = vec![T::zero(); k * k];
        for r in 0..k {
            for c in 0..k {
                let mut s = T::zero();
                for t in 0..k {
                    let a = &entries[r * k + t];
                    if !a.is_zero() {
                        s = s + a.clone() * acc[t * k + c].clone();
                    }
                }
                prod[r * k + c] = s;
            }
        }
        let mut tr = T::zero();
        for i in 0..k {
            tr = tr + prod[i * k + i].clone();
        }
        let c = T::zero() - tr / T::from_usize(j).unwrap();
        for i in 0..k {
            prod[i * k + i] = prod[i * k + i].clone() + c.clone();
        }
        coeffs[k - j] = c;
        acc = prod;
    }
    coeffs
}

pub fn char_poly_exact<M: AsRef<SquareMatrix>>(m: M) -> CharPoly {
    let m = m.as_ref();
    let k = m.order();
    let poly = if m.is_integral() {
        let ints: Vec<BigInt> = m.entries().iter().map(|x| x.to_integer()).collect();
        let c = faddeev_leverrier(k, &ints);
        Poly::new(c.into_iter().map(BigRational::from_integer).collect())
    } else {
        Poly::new(faddeev_leverrier(k, m.entries()))
    };
    CharPoly { poly }
}

/// All real roots of a polynomial, descending, with multiplicities.
#[derive(Clone, Debug)]
pub struct ExactSpectrum {
    distinct: Vec<(AlgebraicReal, usize)>,
}

impl ExactSpectrum {
    pub fn of_poly(p: &Poly) -> Self {
        let mut distinct = Vec::new();
        for (i, factor) in p.squarefree_decomposition().iter().enumerate() {
            for root in isolate_real_roots(factor) {
                distinct.push((root, i + 1));
            }
        }
        distinct.sort_by(|a, b| b.0.cmp_exact(&a.0));
        ExactSpectrum { distinct }
    }

    /// Merges roots given with multiplicities, combining equal values.
    pub fn from_roots(roots: Vec<(AlgebraicReal, usize)>) -> Self {
        let mut roots: Vec<_> = roots.into_iter().filter(|(_, m)| *m > 0).collect();
        roots.sort_by(|a, b| b.0.cmp_exact(&a.0));
        let mut distinct: Vec<(AlgebraicReal, usize)> = Vec::new();
        for (x, m) in roots {
            match distinct.last_mut() {
                Some((y, k)) if y.cmp_exact(&x) == Ordering::Equal => *k += m,
                _ => distinct.push((x, m)),
            }
        }
        ExactSpectrum { distinct }
    }

    pub fn distinct(&self) -> &[(AlgebraicReal, usize)] {
        &self.distinct
    }

    /// Number of real roots with multiplicity.
    pub fn len(&self) -> usize {
        self.distinct.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.distinct.is_empty()
    }

    /// The `k`-th largest root, 1-based, counting multiplicity.
    pub fn kth(&self, k: usize) -> Option<&AlgebraicReal> {
        if k == 0 {
            return None;
        }
        let mut seen = 0;
        for (x, m) in &self.distinct {
            seen += m;
            if seen >= k {
                return Some(x);
            }
        }
        None
    }

    pub fn multiplicity_of(&self, r: &BigRational) -> usize {
        self.distinct.iter().find(|(x, _)| x.cmp_rational(r) == Ordering::Equal).map_or(0, |(_, m)| *m)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.distinct.iter().flat_map(|(x, m)| std::iter::repeat_n(x.to_f64(), *m)).collect()
    }

    pub fn trace(&self) -> f64 {
        self.to_f64().iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::poly::{rat, ratio};
    use crate::spectra::{q_matrix, MatrixKind};

    /// Cofactor expansion of det(xI - M) evaluated at integer x.
    fn det_brute(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        let mut total = 0;
        for c in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            total += sign * m[0][c] * det_brute(&minor);
        }
        total
    }

    #[test]
    fn k2_and_c4() {
        let p = char_poly_exact(q_matrix(&Graph::complete(2).unwrap()));
        assert_eq!(p.poly(), &Poly::from_i64(&[0, -2, 1]));
        let c4 = char_poly_exact(q_matrix(&Graph::cycle(4).unwrap()));
        assert_eq!(c4.poly(), &Poly::from_i64(&[0, -16, 20, -8, 1]));
        assert_eq!(c4.to_string(), "x^4 - 8x^3 + 20x^2 - 16x");
    }

    #[test]
    fn matches_brute_force_determinants() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let q = q_matrix(&g);
        let p = char_poly_exact(&q);
        let rows: Vec<Vec<i64>> =
            q.matrix().to_f64_rows().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        for x in -3..=8 {
            let shifted: Vec<Vec<i64>> =
                (0..5).map(|i| (0..5).map(|j| if i == j { x - rows[i][j] } else { -rows[i][j] }).collect()).collect();
            assert_eq!(p.eval(&rat(x)), rat(det_brute(&shifted)), "x = {x}");
        }
    }

    #[test]
    fn rational_matrix() {
        let m = SquareMatrix::new(2, vec![ratio(1, 2), rat(1), rat(1), ratio(3, 2)]).unwrap();
        let p = char_poly_exact(&m);
        // x^2 - 2x + (3/4 - 1)
        assert_eq!(p.poly(), &Poly::new(vec![ratio(-1, 4), rat(-2), rat(1)]));
    }

    #[test]
    fn multiplicities_and_counts() {
        let k6 = char_poly_exact(q_matrix(&Graph::complete(6).unwrap()));
        assert_eq!(k6.multiplicity_at(&rat(4)), 5);
        assert_eq!(k6.multiplicity_at(&rat(10)), 1);
        let c4 = char_poly_exact(q_matrix(&Graph::cycle(4).unwrap()));
        assert_eq!(c4.sturm_count(&rat(3), &rat(5)).unwrap(), 1);
        assert!(c4.sturm_count(&rat(5), &rat(3)).is_err());
        let star = char_poly_exact(q_matrix(&Graph::star(6).unwrap()));
        assert_eq!(star.multiplicity_at(&rat(1)), 4);
        assert_eq!(star.count_above(&rat(1)), 1);
    }

    #[test]
    fn exact_spectrum_order() {
        let c4 = char_poly_exact(q_matrix(&Graph::cycle(4).unwrap())).spectrum();
        assert_eq!(c4.len(), 4);
        let expect = [4, 2, 2, 0];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(c4.kth(k + 1).unwrap().cmp_rational(&rat(*e)), Ordering::Equal);
        }
        assert!(c4.kth(5).is_none());
        assert_eq!(c4.multiplicity_of(&rat(2)), 2);
        let c5 = char_poly_exact(q_matrix(&Graph::cycle(5).unwrap())).spectrum();
        let golden = (5f64.sqrt() + 3.0) / 2.0;
        assert!((c5.kth(2).unwrap().to_f64() - golden).abs() < 1e-12);
        assert_eq!(MatrixKind::SignlessLaplacian.symbol(), "Q");
    }
}
