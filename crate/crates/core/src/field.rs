//! Exact arithmetic in the real field `Q(√2, √5)`.
//!
//! Elements are stored as `a + b√2 + c√5 + d√10` with arbitrary-precision
//! rational coefficients. Every coefficient is kept in lowest terms, so two
//! elements are equal exactly when their coefficient vectors are equal and the
//! derived `Hash`/`Eq` are sound.
//!
//! Signs are decided exactly by viewing the field as the tower
//! `Q(√2)(√5)`: an element is `X + Y√5` with `X, Y ∈ Q(√2)`, and comparing
//! `X²` against `5Y²` reduces everything to sign tests of `p + q√2`, which in
//! turn compare `p²` against `2q²`.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Index of each basis element in the coefficient vector.
const ONE: usize = 0;
const R2: usize = 1;
const R5: usize = 2;
const R10: usize = 3;

/// Structure constants of the basis `{1, √2, √5, √10}`:
/// `e_i · e_j = MUL_TABLE[i][j].1 · e_{MUL_TABLE[i][j].0}`.
const MUL_TABLE: [[(usize, i64); 4]; 4] = [
    [(ONE, 1), (R2, 1), (R5, 1), (R10, 1)],
    [(R2, 1), (ONE, 2), (R10, 1), (R5, 2)],
    [(R5, 1), (R10, 1), (ONE, 5), (R2, 5)],
    [(R10, 1), (R5, 2), (R2, 5), (ONE, 10)],
];

/// Error returned when inverting zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionByZero;

impl fmt::Display for DivisionByZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("division by zero in Q(√2,√5)")
    }
}

/// An exact element `a + b√2 + c√5 + d√10` of `Q(√2, √5)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: [BigRational; 4],
}

impl FieldElement {
    pub fn new(coeffs: [BigRational; 4]) -> Self {
        // `BigRational` arithmetic already normalises; constructors that take
        // raw parts go through `Ratio::new`, which reduces as well.
        Self { coeffs }
    }

    /// Builds an element from integer numerator/denominator pairs.
    ///
    /// # Panics
    /// Panics if a denominator is zero.
    pub fn from_fractions(parts: [(i64, i64); 4]) -> Self {
        let coeffs = parts.map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)));
        Self { coeffs }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_fractions([(n, 1), (0, 1), (0, 1), (0, 1)])
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn sqrt2() -> Self {
        Self::from_fractions([(0, 1), (1, 1), (0, 1), (0, 1)])
    }

    pub fn sqrt5() -> Self {
        Self::from_fractions([(0, 1), (0, 1), (1, 1), (0, 1)])
    }

    pub fn sqrt10() -> Self {
        Self::from_fractions([(0, 1), (0, 1), (0, 1), (1, 1)])
    }

    /// The golden ratio `(1 + √5)/2 = 2cos(π/5)`.
    pub fn golden_ratio() -> Self {
        Self::from_fractions([(1, 2), (0, 1), (1, 2), (0, 1)])
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[ONE].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Galois conjugate sending `√5 ↦ −√5` (and hence `√10 ↦ −√10`).
    fn conj5(&self) -> Self {
        let [a, b, c, d] = self.coeffs.clone();
        Self::new([a, b, -c, -d])
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        // x · conj5(x) lies in Q(√2); invert that by its own conjugate.
        let conj = self.conj5();
        let norm5 = self * &conj;
        debug_assert!(norm5.coeffs[R5].is_zero() && norm5.coeffs[R10].is_zero());
        let p = &norm5.coeffs[ONE];
        let q = &norm5.coeffs[R2];
        let rational_norm = p * p - q * q * BigRational::from_integer(BigInt::from(2));
        let inv_norm5 = Self::new([
            p / &rational_norm,
            -(q / &rational_norm),
            BigRational::zero(),
            BigRational::zero(),
        ]);
        Ok(&conj * &inv_norm5)
    }

    /// Exact sign of the real embedding with `√2, √5, √10 > 0`.
    pub fn sign(&self) -> Ordering {
        let [a, b, c, d] = &self.coeffs;
        // X = a + b√2, Y = c + d√2, value = X + Y√5.
        let sx = sign_q2(a, b);
        let sy = sign_q2(c, d);
        match (sx, sy) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (s, t) if s == t => s,
            (s, _) => {
                // Opposite signs: compare X² with 5Y², both in Q(√2).
                let two = BigRational::from_integer(BigInt::from(2));
                let five = BigRational::from_integer(BigInt::from(5));
                let x2_p = a * a + b * b * &two;
                let x2_q = a * b * &two;
                let y2_p = c * c + d * d * &two;
                let y2_q = c * d * &two;
                let diff_p = x2_p - y2_p * &five;
                let diff_q = x2_q - y2_q * &five;
                match sign_q2(&diff_p, &diff_q) {
                    Ordering::Equal => unreachable!("X² = 5Y² forces X = Y = 0"),
                    Ordering::Greater => s,
                    Ordering::Less => s.reverse(),
                }
            }
        }
    }

    /// Sign as an integer in `{-1, 0, 1}`.
    pub fn signum(&self) -> i8 {
        match self.sign() {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Floating-point approximation, for display and diagnostics only.
    pub fn approx(&self) -> f64 {
        fn to_f64(r: &BigRational) -> f64 {
            use num_traits::ToPrimitive;
            r.to_f64().unwrap_or(f64::NAN)
        }
        let [a, b, c, d] = &self.coeffs;
        to_f64(a)
            + to_f64(b) * core::f64::consts::SQRT_2
            + to_f64(c) * 2.236_067_977_499_79
            + to_f64(d) * 3.162_277_660_168_379_5
    }

    /// Canonical text form `a/b+c/d*r2+e/f*r5+g/h*r10`.
    pub fn canonical_string(&self) -> String {
        alloc::format!("{self}")
    }
}

/// Sign of `p + q√2` for rational `p, q`.
fn sign_q2(p: &BigRational, q: &BigRational) -> Ordering {
    let sp = p.cmp(&BigRational::zero());
    let sq = q.cmp(&BigRational::zero());
    match (sp, sq) {
        (s, Ordering::Equal) => s,
        (Ordering::Equal, s) => s,
        (s, t) if s == t => s,
        (s, _) => {
            let p2 = p * p;
            let q2 = q * q * BigRational::from_integer(BigInt::from(2));
            match p2.cmp(&q2) {
                Ordering::Equal => unreachable!("p² = 2q² has no nonzero rational solution"),
                Ordering::Greater => s,
                Ordering::Less => s.reverse(),
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write!(
            f,
            "{}/{}+{}/{}*r2+{}/{}*r5+{}/{}*r10",
            a.numer(),
            a.denom(),
            b.numer(),
            b.denom(),
            c.numer(),
            c.denom(),
            d.numer(),
            d.denom()
        )
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({self})")
    }
}

/// Error parsing the canonical text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFieldError(pub String);

impl fmt::Display for ParseFieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed field element `{}`", self.0)
    }
}

impl FromStr for FieldElement {
    type Err = ParseFieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseFieldError(s.into());
        let rest = s.strip_suffix("*r10").ok_or_else(err)?;
        // Terms are joined by '+' but a numerator may itself start with '-'.
        let mut terms = [""; 4];
        let mut cursor = rest;
        for (slot, suffix) in terms.iter_mut().zip(["+", "*r2+", "*r5+"]) {
            let at = find_term_end(cursor, suffix).ok_or_else(err)?;
            *slot = &cursor[..at];
            cursor = &cursor[at + suffix.len()..];
        }
        terms[3] = cursor;
        let mut coeffs: [BigRational; 4] = Default::default();
        for (c, t) in coeffs.iter_mut().zip(terms) {
            let (n, d) = t.split_once('/').ok_or_else(err)?;
            let n: BigInt = n.parse().map_err(|_| err())?;
            let d: BigInt = d.parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            *c = BigRational::new(n, d);
        }
        Ok(Self::new(coeffs))
    }
}

/// Position of the first `sep` in `s` that is not part of a leading sign.
fn find_term_end(s: &str, sep: &str) -> Option<usize> {
    s.get(1..)?.find(sep).map(|i| i + 1)
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement::zero()
    }

    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::one()
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    fn add(mut self, rhs: FieldElement) -> FieldElement {
        self += &rhs;
        self
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        out
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: FieldElement) -> FieldElement {
        &self - &rhs
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        FieldElement::new(self.coeffs.clone().map(|c| -c))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let mut out: [BigRational; 4] = Default::default();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (k, scale) = MUL_TABLE[i][j];
                let prod = x * y;
                if scale == 1 {
                    out[k] += prod;
                } else {
                    out[k] += prod * BigInt::from(scale);
                }
            }
        }
        FieldElement::new(out)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: FieldElement) -> FieldElement {
        &self * &rhs
    }
}
