//! Integer polynomials with exact root isolation.
//!
//! Coefficients are big integers, evaluation points are big rationals, and
//! root isolation uses Sturm sequences on the square-free part. Nothing in
//! this module ever rounds; floats only appear as display approximations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Univariate polynomial over the integers, coefficients by ascending degree.
///
/// Trailing zero coefficients are trimmed; the zero polynomial is the empty
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Add `c * t^k` in place.
    pub fn add_term(&mut self, c: i64, k: usize) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += BigInt::from(c);
        self.trim();
    }

    /// Exact division; `None` if `other` does not divide `self` over ℚ
    /// (the quotient is returned whenever it exists with rational
    /// coefficients that turn out integral).
    pub fn divide_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = rat_divmod(&to_rat(self), &to_rat(other));
        if !r.iter().all(Zero::is_zero) {
            return None;
        }
        let mut out = Vec::with_capacity(q.len());
        for c in q {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(IntPoly::new(out))
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Sign of the value at a rational point: -1, 0, or 1.
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

    /// Largest square-free divisor, `p / gcd(p, p')`, normalized to positive
    /// leading coefficient.
    pub fn square_free_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let d = self.derivative();
        if d.is_zero() {
            // constant
            return IntPoly::one();
        }
        let g = poly_gcd(self, &d);
        let q = self.divide_exact(&g).expect("gcd divides the polynomial");
        q.normalize_sign()
    }

    fn normalize_sign(&self) -> IntPoly {
        match self.coeffs.last() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Divide all coefficients by their gcd, keeping the leading sign positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer_gcd(&g, c);
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect()).normalize_sign()
    }

    /// First `n` coefficients of the power series `1 / self`.
    /// Requires constant term 1 or -1.
    pub fn series_inverse(&self, n: usize) -> Result<Vec<BigInt>> {
        let c0 = self.coeff(0);
        if !(c0 == BigInt::one() || c0 == -BigInt::one()) {
            return Err(Error::MalformedInput(
                "series inverse needs constant term ±1".into(),
            ));
        }
        let mut inv = vec![BigInt::zero(); n];
        if n == 0 {
            return Ok(inv);
        }
        inv[0] = c0.clone(); // 1/c0 = c0 for c0 = ±1
        for k in 1..n {
            let mut s = BigInt::zero();
            for j in 1..=k {
                s += self.coeff(j) * &inv[k - j];
            }
            inv[k] = -&c0 * s;
        }
        Ok(inv)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            } else if k == 1 {
                write!(f, "{mag}*t")?;
            } else {
                write!(f, "{mag}*t^{k}")?;
            }
        }
        Ok(())
    }
}

fn to_rat(p: &IntPoly) -> Vec<BigRational> {
    p.coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn rat_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Quotient and remainder of rational-coefficient polynomials.
fn rat_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    rat_trim(&mut r);
    let mut b = b.to_vec();
    rat_trim(&mut b);
    assert!(!b.is_empty(), "division by zero polynomial");
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lead;
        q[shift] = f.clone();
        for (i, bc) in b.iter().enumerate() {
            let val = &r[shift + i] - &f * bc;
            r[shift + i] = val;
        }
        rat_trim(&mut r);
    }
    (q, r)
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Polynomial gcd over ℚ, returned as a primitive integer polynomial.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut x = to_rat(a);
    let mut y = to_rat(b);
    rat_trim(&mut x);
    rat_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = rat_divmod(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return IntPoly::zero();
    }
    // clear denominators
    let mut den = BigInt::one();
    for c in &x {
        den = &den / num_integer_gcd(&den, c.denom()) * c.denom();
    }
    let ints: Vec<BigInt> = x.iter().map(|c| c.numer() * &den / c.denom()).collect();
    IntPoly::new(ints).primitive_part()
}

/// Sturm chain of a square-free polynomial, used for exact root counting.
pub struct SturmChain {
    chain: Vec<Vec<BigRational>>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> SturmChain {
        let mut chain = Vec::new();
        let p0 = to_rat(p);
        let mut p1 = to_rat(&p.derivative());
        rat_trim(&mut p1);
        chain.push(p0);
        if !p1.is_empty() {
            chain.push(p1);
        }
        while chain.last().is_some_and(|c| c.len() > 1) {
            let n = chain.len();
            let (_, mut r) = rat_divmod(&chain[n - 2], &chain[n - 1]);
            rat_trim(&mut r);
            if r.is_empty() {
                break;
            }
            for c in &mut r {
                *c = -c.clone();
            }
            chain.push(r);
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut last: Option<bool> = None;
        let mut v = 0;
        for p in &self.chain {
            let mut acc = BigRational::zero();
            for c in p.iter().rev() {
                acc = acc * x + c;
            }
            if acc.is_zero() {
                continue;
            }
            let pos = acc.is_positive();
            if let Some(l) = last {
                if l != pos {
                    v += 1;
                }
            }
            last = Some(pos);
        }
        v
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    /// Requires that the underlying polynomial is nonzero at `a`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a < b);
        self.variations_at(a) - self.variations_at(b)
    }
}

/// An isolating interval for one real root of a square-free polynomial.
///
/// The root lies in `(lo, hi]`; `lo == hi` marks an exactly known rational
/// root.
#[derive(Debug, Clone, PartialEq)]
pub struct RootInterval {
    pub poly: IntPoly,
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Shrink the isolating interval below `width` by bisection.
    ///
    /// Rational roots are snapped to exact zero-width intervals: the right
    /// endpoint and the simplest rational inside are probed first, which
    /// catches roots like 1 that bisection midpoints never hit.
    pub fn refine(&mut self, width: &BigRational) {
        if self.is_exact() {
            return;
        }
        if self.poly.sign_at(&self.hi) == 0 {
            self.lo = self.hi.clone();
            return;
        }
        if !self.lo.is_negative() {
            let probe = simplest_in_interval(&self.lo, &self.hi);
            if self.poly.sign_at(&probe) == 0 {
                self.lo = probe.clone();
                self.hi = probe;
                return;
            }
        }
        let two = BigRational::from_integer(BigInt::from(2));
        while self.width() > *width {
            let mid = (&self.lo + &self.hi) / &two;
            match self.poly.sign_at(&mid) {
                0 => {
                    self.lo = mid.clone();
                    self.hi = mid;
                    return;
                }
                s => {
                    // keep the half where the sign changes toward hi
                    let hi_sign = self.poly.sign_at(&self.hi);
                    if hi_sign == 0 || s != hi_sign {
                        self.lo = mid;
                    } else {
                        self.hi = mid;
                    }
                }
            }
        }
    }

    /// True when the rational `x` provably lies strictly below the root.
    pub fn is_below(&self, x: &BigRational) -> bool {
        *x <= self.lo
    }
}

/// Isolate all distinct real roots of `p` in the half-open interval
/// `(lo, hi]`, returned in increasing order with pairwise disjoint
/// isolating intervals.
pub fn isolate_roots(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Ok(vec![]);
    }
    let mut sf = p.square_free_part();
    if sf.degree() == Some(0) || sf.is_zero() {
        return Ok(vec![]);
    }
    // The Sturm count over (a, b] needs sf(a) != 0. A root exactly at `lo`
    // is excluded from the half-open interval, so divide it out.
    let lo = lo.clone();
    while sf.sign_at(&lo) == 0 {
        let linear = rational_root_factor(&lo);
        sf = sf
            .divide_exact(&linear)
            .expect("detected rational root must divide");
        if sf.degree().is_none() || sf.degree() == Some(0) {
            return Ok(vec![]);
        }
    }
    let chain = SturmChain::new(&sf);
    let mut out = Vec::new();
    subdivide(&sf, &chain, lo, hi.clone(), &mut out);
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// The polynomial `den*t - num` vanishing at the rational `r = num/den`.
fn rational_root_factor(r: &BigRational) -> IntPoly {
    IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
}

fn subdivide(
    sf: &IntPoly,
    chain: &SturmChain,
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<RootInterval>,
) {
    let n = chain.count_roots(&lo, &hi);
    match n {
        0 => {}
        1 => out.push(RootInterval {
            poly: sf.clone(),
            lo,
            hi,
        }),
        _ => {
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            if sf.sign_at(&mid) == 0 {
                out.push(RootInterval {
                    poly: sf.clone(),
                    lo: mid.clone(),
                    hi: mid.clone(),
                });
                // roots strictly left and strictly right of mid
                subdivide_excluding(sf, chain, lo, mid.clone(), out);
                subdivide(sf, chain, mid, hi, out);
            } else {
                subdivide(sf, chain, lo, mid.clone(), out);
                subdivide(sf, chain, mid, hi, out);
            }
        }
    }
}

/// Subdivide `(lo, hi)` knowing there is a root exactly at `hi` that must
/// not be reported again.
fn subdivide_excluding(
    sf: &IntPoly,
    chain: &SturmChain,
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<RootInterval>,
) {
    // count in (lo, hi] includes the root at hi itself
    let n = chain.count_roots(&lo, &hi);
    if n <= 1 {
        return;
    }
    let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
    if sf.sign_at(&mid) == 0 {
        out.push(RootInterval {
            poly: sf.clone(),
            lo: mid.clone(),
            hi: mid.clone(),
        });
        subdivide_excluding(sf, chain, lo, mid.clone(), out);
        subdivide_excluding(sf, chain, mid, hi, out);
    } else {
        subdivide(sf, chain, lo, mid.clone(), out);
        subdivide_excluding(sf, chain, mid, hi, out);
    }
}

/// The rational with the smallest denominator strictly inside the open
/// interval `(lo, hi)`, by the Stern–Brocot descent. Both endpoints must
/// be nonnegative with `lo < hi`.
pub fn simplest_in_interval(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo < hi && !lo.is_negative());
    let one = BigRational::one();
    let floor = lo.floor();
    let next_int = &floor + &one;
    if *lo < next_int && next_int < *hi {
        return next_int;
    }
    let a = lo - &floor; // in [0, 1)
    let b = hi - &floor; // in (0, 1], since no integer lies strictly inside
    if a.is_zero() {
        // (0, b): take 1/n for the least n with 1/n < b
        let n = (&one / &b).floor() + &one;
        return floor + &one / n;
    }
    // x in (a, b) iff 1/x in (1/b, 1/a)
    floor + &one / simplest_in_interval(&(&one / &b), &(&one / &a))
}

/// Parse a rational from `"num/den"`, a decimal like `"0.75"`, or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::MalformedInput(format!("cannot parse rational from {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let i: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mag = i.abs() * &scale + f;
        let signed = if neg { -mag } else { mag };
        return Ok(BigRational::new(signed, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Format a rational as `"num/den"` (or just `"num"` when integral).
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = IntPoly::from_i64(&[1, -2, 0, 1]); // 1 - 2t + t^3
        let b = IntPoly::from_i64(&[-1, 1]); // t - 1
        let prod = a.mul(&b);
        assert_eq!(prod.divide_exact(&b), Some(a.clone()));
        assert_eq!(a.sub(&a), IntPoly::zero());
        assert_eq!(a.eval(&rat(1, 1)), BigRational::zero());
    }

    #[test]
    fn b4_clique_factorization() {
        let h = IntPoly::from_i64(&[1, -3, 1, 2, 0, 0, -1]);
        let lin = IntPoly::from_i64(&[1, -1]);
        let quintic = IntPoly::from_i64(&[1, -2, -1, 1, 1, 1]);
        assert_eq!(h.divide_exact(&lin), Some(quintic));
    }

    #[test]
    fn isolates_golden_ratio_root() {
        // 1 - 2t + t^3 on (0, 1]: roots (sqrt(5)-1)/2 and 1
        let p = IntPoly::from_i64(&[1, -2, 0, 1]);
        let roots = isolate_roots(&p, &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(roots.len(), 2);
        let mut r0 = roots[0].clone();
        r0.refine(&rat(1, 1_000_000_000_000));
        let golden = 0.618_033_988_749_894_9;
        assert!((r0.approx() - golden).abs() < 1e-11);
        assert!(
            roots[1].is_exact() || {
                let mut r1 = roots[1].clone();
                r1.refine(&rat(1, 1_000_000_000));
                (r1.approx() - 1.0).abs() < 1e-9
            }
        );
    }

    #[test]
    fn counts_roots_of_quadratic() {
        // (1-t)(1-2t) = 1 - 3t + 2t^2, roots 1/2 and 1
        let p = IntPoly::from_i64(&[1, -3, 2]);
        let roots = isolate_roots(&p, &rat(0, 1), &rat(2, 1)).unwrap();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn root_at_open_left_endpoint_is_excluded() {
        let p = IntPoly::from_i64(&[0, 1]); // t
        let roots = isolate_roots(&p, &rat(0, 1), &rat(1, 1)).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn repeated_roots_isolated_once() {
        // (1-t)^2 (2-t)
        let p = IntPoly::from_i64(&[2, -5, 4, -1]);
        let roots = isolate_roots(&p, &rat(0, 1), &rat(3, 1)).unwrap();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn series_inverse_of_b3_poly_matches_product() {
        let h = IntPoly::from_i64(&[1, -2, 0, 1]);
        let inv = h.series_inverse(9).unwrap();
        // convolution h * inv == 1 up to degree 8
        for k in 0..9 {
            let mut s = BigInt::zero();
            for j in 0..=k {
                s += h.coeff(j) * &inv[k - j];
            }
            let expect = if k == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            assert_eq!(s, expect);
        }
    }

    #[test]
    fn roots_at_bisection_midpoints_reported_once() {
        // roots 1/4, 3/8, 1/2 all land exactly on bisection midpoints
        let p = IntPoly::from_i64(&[-1, 4])
            .mul(&IntPoly::from_i64(&[-3, 8]))
            .mul(&IntPoly::from_i64(&[-1, 2]));
        let roots = isolate_roots(&p, &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(roots.len(), 3);
        let values: Vec<BigRational> = roots.iter().map(|r| r.midpoint()).collect();
        assert_eq!(values, vec![rat(1, 4), rat(3, 8), rat(1, 2)]);
        assert!(roots.iter().all(RootInterval::is_exact));
    }

    #[test]
    fn simplest_rationals() {
        let simplest = |a: &str, b: &str| simplest_in_interval(&rat_s(a), &rat_s(b));
        fn rat_s(s: &str) -> BigRational {
            parse_rational(s).unwrap()
        }
        assert_eq!(simplest("0", "1"), rat(1, 2));
        assert_eq!(simplest("0.618", "1"), rat(2, 3));
        assert_eq!(simplest("1/3", "1/2"), rat(2, 5));
        assert_eq!(simplest("3", "27/5"), rat(4, 1));
        assert_eq!(simplest("7/10", "71/100"), rat(12, 17));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("0.8").unwrap(), rat(4, 5));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(4, 6)), "2/3");
    }
}
