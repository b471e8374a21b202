//! Exact arithmetic in the golden ring `Z[tau]` and the cyclotomic module
//! `Z[xi] = Z[tau] + Z[tau] xi`, where `tau = (1 + sqrt 5) / 2` and
//! `xi = exp(i pi / 5)`.
//!
//! All operators panic on `i64` overflow rather than wrap; the `checked_*`
//! methods return `None` instead.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// `tau` as a double.
pub const TAU_F64: f64 = 1.618_033_988_749_895;
/// `tau' = 1 - tau` as a double.
pub const TAU_CONJ_F64: f64 = 1.0 - TAU_F64;

const OVERFLOW: &str = "Z[tau] arithmetic overflow";

/// Exact sign of a real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of_i128(x: i128) -> Sign {
        match x.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

/// Which real embedding of `Q(sqrt 5)` to evaluate: `tau` itself or its
/// Galois conjugate `tau'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Embedding {
    Identity,
    Conjugate,
}

/// An element `a + b tau` of `Z[tau]`.
///
/// The pair `(a, b)` is the unique representation. `Ord` is the order of the
/// real numbers (the embedding into `R` is injective), decided exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    pub a: i64,
    pub b: i64,
}

impl GoldenInt {
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    pub const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };
    pub const TAU: GoldenInt = GoldenInt { a: 0, b: 1 };
    /// `tau' = 1 - tau = -1/tau`.
    pub const TAU_CONJ: GoldenInt = GoldenInt { a: 1, b: -1 };
    /// `sqrt 5 = 2 tau - 1`.
    pub const SQRT5: GoldenInt = GoldenInt { a: -1, b: 2 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    pub const fn int(a: i64) -> Self {
        GoldenInt { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_rational(self) -> bool {
        self.b == 0
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        Some(GoldenInt {
            a: self.a.checked_add(rhs.a)?,
            b: self.b.checked_add(rhs.b)?,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        Some(GoldenInt {
            a: self.a.checked_sub(rhs.a)?,
            b: self.b.checked_sub(rhs.b)?,
        })
    }

    /// `(a + b tau)(c + d tau) = (ac + bd) + (ad + bc + bd) tau`.
    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        let bd = b.checked_mul(d)?;
        Some(GoldenInt {
            a: a.checked_mul(c)?.checked_add(bd)?,
            b: a.checked_mul(d)?
                .checked_add(b.checked_mul(c)?)?
                .checked_add(bd)?,
        })
    }

    pub fn checked_neg(self) -> Option<Self> {
        Some(GoldenInt {
            a: self.a.checked_neg()?,
            b: self.b.checked_neg()?,
        })
    }

    pub fn scale(self, k: i64) -> Self {
        GoldenInt {
            a: self.a.checked_mul(k).expect(OVERFLOW),
            b: self.b.checked_mul(k).expect(OVERFLOW),
        }
    }

    /// Galois conjugation `tau -> tau'`: `a + b tau -> (a + b) - b tau`.
    pub fn conj(self) -> Self {
        GoldenInt {
            a: self.a.checked_add(self.b).expect(OVERFLOW),
            b: self.b.checked_neg().expect(OVERFLOW),
        }
    }

    /// Field norm `x x' = a^2 + ab - b^2`.
    pub fn norm(self) -> i128 {
        let (a, b) = (self.a as i128, self.b as i128);
        a * a + a * b - b * b
    }

    /// Exact sign of `a + b tau`, using only integer arithmetic.
    ///
    /// `2(a + b tau) = (2a + b) + b sqrt 5`; when the two summands disagree in
    /// sign the larger square wins.
    pub fn sign(self) -> Sign {
        let s = 2 * self.a as i128 + self.b as i128;
        let b = self.b as i128;
        let (ss, sb) = (Sign::of_i128(s), Sign::of_i128(b));
        if ss == sb || sb == Sign::Zero {
            return ss;
        }
        if ss == Sign::Zero {
            return sb;
        }
        // s^2 == 5 b^2 has no nonzero integer solution.
        if s * s > 5 * b * b {
            ss
        } else {
            sb
        }
    }

    pub fn is_negative(self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn is_positive(self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn abs(self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self
        }
    }

    pub fn embed(self, which: Embedding) -> f64 {
        let t = match which {
            Embedding::Identity => TAU_F64,
            Embedding::Conjugate => TAU_CONJ_F64,
        };
        self.a as f64 + self.b as f64 * t
    }

    pub fn to_f64(self) -> f64 {
        self.embed(Embedding::Identity)
    }

    pub fn pow(self, e: u32) -> Self {
        (0..e).fold(GoldenInt::ONE, |acc, _| acc * self)
    }

    /// Exact quotient in `Z[tau]`, if it exists.
    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        let n = rhs.norm();
        if n == 0 {
            return None;
        }
        let p = self.checked_mul(rhs.conj())?;
        let (a, b) = (p.a as i128, p.b as i128);
        if a % n != 0 || b % n != 0 {
            return None;
        }
        Some(GoldenInt::new(
            i64::try_from(a / n).ok()?,
            i64::try_from(b / n).ok()?,
        ))
    }
}

impl From<i64> for GoldenInt {
    fn from(a: i64) -> Self {
        GoldenInt::int(a)
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect(OVERFLOW)
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect(OVERFLOW)
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect(OVERFLOW)
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> Self {
        self.checked_neg().expect(OVERFLOW)
    }
}

impl AddAssign for GoldenInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for GoldenInt {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Sum for GoldenInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GoldenInt::ZERO, Add::add)
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenInt {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).sign().to_ordering()
    }
}

/// Renders as `a+b*tau`, e.g. `-1+2*tau`, `0`, `tau`, `1-tau`.
impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a, self.b);
        if b == 0 {
            return write!(f, "{a}");
        }
        if a != 0 {
            write!(f, "{a}")?;
            if b > 0 {
                write!(f, "+")?;
            }
        }
        match b {
            1 => write!(f, "tau"),
            -1 => write!(f, "-tau"),
            _ => write!(f, "{b}*tau"),
        }
    }
}

impl FromStr for GoldenInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix("tau") else {
            return t.parse::<i64>().map(GoldenInt::int).map_err(|_| bad());
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        let split = body
            .char_indices()
            .rfind(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i);
        let (a_str, b_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let a = if a_str.is_empty() {
            0
        } else {
            a_str.parse::<i64>().map_err(|_| bad())?
        };
        let b = match b_str {
            "" | "+" => 1,
            "-" => -1,
            other => other.parse::<i64>().map_err(|_| bad())?,
        };
        Ok(GoldenInt::new(a, b))
    }
}

fn gcd(mut x: i64, mut y: i64) -> i64 {
    x = x.abs();
    y = y.abs();
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// `num / den` with `num` in `Z[tau]` and a positive rational-integer
/// denominator, kept in lowest terms so that derived equality and hashing
/// are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GoldenRational {
    num: GoldenInt,
    den: i64,
}

impl GoldenRational {
    pub const ZERO: GoldenRational = GoldenRational {
        num: GoldenInt::ZERO,
        den: 1,
    };
    pub const ONE: GoldenRational = GoldenRational {
        num: GoldenInt::ONE,
        den: 1,
    };

    /// Panics if `den == 0`.
    pub fn new(num: GoldenInt, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(gcd(num.a, num.b), den);
        if g <= 1 {
            return GoldenRational { num, den };
        }
        GoldenRational {
            num: GoldenInt::new(num.a / g, num.b / g),
            den: den / g,
        }
    }

    pub fn numer(&self) -> GoldenInt {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    pub fn to_golden_int(&self) -> Option<GoldenInt> {
        self.is_integral().then_some(self.num)
    }

    pub fn sign(&self) -> Sign {
        self.num.sign()
    }

    /// Multiplicative inverse; `x^-1 = x' / N(x)`.
    pub fn recip(&self) -> Option<Self> {
        let n = self.num.norm();
        if n == 0 {
            return None;
        }
        let n = i64::try_from(n).ok()?;
        Some(GoldenRational::new(
            self.num.conj().scale(self.den),
            n,
        ))
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64() / self.den as f64
    }

    pub fn embed(&self, which: Embedding) -> f64 {
        self.num.embed(which) / self.den as f64
    }
}

impl From<GoldenInt> for GoldenRational {
    fn from(num: GoldenInt) -> Self {
        GoldenRational { num, den: 1 }
    }
}

impl From<i64> for GoldenRational {
    fn from(a: i64) -> Self {
        GoldenRational::from(GoldenInt::int(a))
    }
}

impl Add for GoldenRational {
    type Output = GoldenRational;
    fn add(self, rhs: Self) -> Self {
        let g = gcd(self.den, rhs.den);
        let l = self.den / g;
        let r = rhs.den / g;
        GoldenRational::new(
            self.num.scale(r) + rhs.num.scale(l),
            self.den.checked_mul(r).expect(OVERFLOW),
        )
    }
}

impl Sub for GoldenRational {
    type Output = GoldenRational;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for GoldenRational {
    type Output = GoldenRational;
    fn neg(self) -> Self {
        GoldenRational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for GoldenRational {
    type Output = GoldenRational;
    fn mul(self, rhs: Self) -> Self {
        GoldenRational::new(
            self.num * rhs.num,
            self.den.checked_mul(rhs.den).expect(OVERFLOW),
        )
    }
}

impl Sum for GoldenRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GoldenRational::ZERO, Add::add)
    }
}

impl PartialOrd for GoldenRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num.scale(other.den) - other.num.scale(self.den)).cmp(&GoldenInt::ZERO)
    }
}

impl fmt::Display for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            return write!(f, "{}", self.num);
        }
        if self.num.a != 0 && self.num.b != 0 {
            write!(f, "({})/{}", self.num, self.den)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// An element `p + q xi` of `Z[xi]`, `xi = exp(i pi / 5)`, with the minimal
/// relation `xi^2 = -1 + tau xi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CycloInt {
    pub p: GoldenInt,
    pub q: GoldenInt,
}

/// `xi^j` for `j = 0..9` in the `{1, xi}` basis.
const XI_POWERS: [CycloInt; 10] = {
    const fn c(pa: i64, pb: i64, qa: i64, qb: i64) -> CycloInt {
        CycloInt {
            p: GoldenInt::new(pa, pb),
            q: GoldenInt::new(qa, qb),
        }
    }
    [
        c(1, 0, 0, 0),   // 1
        c(0, 0, 1, 0),   // xi
        c(-1, 0, 0, 1),  // -1 + tau xi
        c(0, -1, 0, 1),  // -tau + tau xi
        c(0, -1, 1, 0),  // -tau + xi
        c(-1, 0, 0, 0),  // -1
        c(0, 0, -1, 0),  // -xi
        c(1, 0, 0, -1),  // 1 - tau xi
        c(0, 1, 0, -1),  // tau - tau xi
        c(0, 1, -1, 0),  // tau - xi
    ]
};

impl CycloInt {
    pub const ZERO: CycloInt = CycloInt {
        p: GoldenInt::ZERO,
        q: GoldenInt::ZERO,
    };
    pub const ONE: CycloInt = CycloInt {
        p: GoldenInt::ONE,
        q: GoldenInt::ZERO,
    };
    pub const XI: CycloInt = CycloInt {
        p: GoldenInt::ZERO,
        q: GoldenInt::ONE,
    };

    pub const fn new(p: GoldenInt, q: GoldenInt) -> Self {
        CycloInt { p, q }
    }

    pub const fn real(p: GoldenInt) -> Self {
        CycloInt {
            p,
            q: GoldenInt::ZERO,
        }
    }

    /// `xi^j` for any integer `j`.
    pub fn xi_pow(j: i64) -> Self {
        XI_POWERS[j.rem_euclid(10) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn scale(self, k: GoldenInt) -> Self {
        CycloInt {
            p: self.p * k,
            q: self.q * k,
        }
    }

    /// Complex conjugation, `xi -> xi^9 = tau - xi`.
    pub fn complex_conj(self) -> Self {
        CycloInt {
            p: self.p + self.q * GoldenInt::TAU,
            q: -self.q,
        }
    }

    /// True iff the point lies on the real axis, decided as `x == conj(x)`.
    pub fn is_real(&self) -> bool {
        *self == self.complex_conj()
    }

    /// The star map `xi^j -> xi^(7j mod 10)`, semilinear over the Galois
    /// conjugation of `Z[tau]`: `p + q xi -> p' + q' xi^7`.
    pub fn star(self) -> Self {
        let (p, q) = (self.p.conj(), self.q.conj());
        // xi^7 = 1 - tau xi
        CycloInt {
            p: p + q,
            q: -(q * GoldenInt::TAU),
        }
    }

    /// `|x|^2 = x conj(x)`, which always lies in `Z[tau]`.
    pub fn abs_sq(self) -> GoldenInt {
        let prod = self * self.complex_conj();
        debug_assert!(prod.q.is_zero());
        prod.p
    }

    /// Sign of the imaginary part (`Im(p + q xi) = q sin 36deg`).
    pub fn im_sign(&self) -> Sign {
        self.q.sign()
    }

    /// Evaluates `p + q exp(i pi/5)` as `(re, im)`.
    pub fn embed(&self) -> (f64, f64) {
        let (p, q) = (self.p.to_f64(), self.q.to_f64());
        let (s, c) = (std::f64::consts::PI / 5.0).sin_cos();
        (p + q * c, q * s)
    }

    /// Lexicographic key on the four integer coordinates.
    pub fn canonical_key(&self) -> [i64; 4] {
        [self.p.a, self.p.b, self.q.a, self.q.b]
    }
}

impl Add for CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: Self) -> Self {
        CycloInt {
            p: self.p + rhs.p,
            q: self.q + rhs.q,
        }
    }
}

impl Sub for CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: Self) -> Self {
        CycloInt {
            p: self.p - rhs.p,
            q: self.q - rhs.q,
        }
    }
}

impl Neg for CycloInt {
    type Output = CycloInt;
    fn neg(self) -> Self {
        CycloInt {
            p: -self.p,
            q: -self.q,
        }
    }
}

impl Mul for CycloInt {
    type Output = CycloInt;
    /// `(p + q xi)(r + s xi) = (pr - qs) + (ps + qr + tau qs) xi`.
    fn mul(self, rhs: Self) -> Self {
        let qs = self.q * rhs.q;
        CycloInt {
            p: self.p * rhs.p - qs,
            q: self.p * rhs.q + self.q * rhs.p + qs * GoldenInt::TAU,
        }
    }
}

impl Sum for CycloInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(CycloInt::ZERO, Add::add)
    }
}

impl From<GoldenInt> for CycloInt {
    fn from(p: GoldenInt) -> Self {
        CycloInt::real(p)
    }
}

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})*xi", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GoldenInt {
        GoldenInt::new(a, b)
    }

    #[test]
    fn tau_squared() {
        assert_eq!(GoldenInt::TAU * GoldenInt::TAU, g(1, 1));
        assert_eq!(GoldenInt::SQRT5 * GoldenInt::SQRT5, g(5, 0));
    }

    #[test]
    fn mul_matches_float() {
        // (1 + tau)(2 - tau) expanded by hand: 2 - tau + 2tau - tau^2 = 1 + 0 tau
        let x = g(1, 1);
        let y = g(2, -1);
        let r = x * y;
        assert_eq!(r, g(1, 0));
        assert!((r.to_f64() - x.to_f64() * y.to_f64()).abs() < 1e-9);
    }

    #[test]
    fn conj_examples() {
        assert_eq!(GoldenInt::TAU.conj(), g(1, -1));
        assert_eq!(g(5, 0).conj(), g(5, 0));
        assert_eq!(g(-1, 2).conj(), g(1, -2));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(g(1, -1).sign(), Sign::Negative);
        assert_eq!(GoldenInt::ZERO.sign(), Sign::Zero);
        assert_eq!(g(-1, 2).sign(), Sign::Positive);
        assert_eq!(g(-3, 2).sign(), Sign::Positive); // 0.236
        assert_eq!(g(2, -1).sign(), Sign::Positive); // 0.382
        assert_eq!(g(-2, 1).sign(), Sign::Negative);
    }

    #[test]
    fn embeddings() {
        assert!((GoldenInt::TAU.embed(Embedding::Identity) - 1.618_033_988_7).abs() < 1e-10);
        assert!((GoldenInt::TAU.embed(Embedding::Conjugate) + 0.618_033_988_7).abs() < 1e-10);
        assert!((g(-1, 2).embed(Embedding::Conjugate) + 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn overflow_panics() {
        let big = g(i64::MAX, 0);
        assert!(big.checked_add(GoldenInt::ONE).is_none());
        assert!(g(1, i64::MAX / 2).checked_mul(g(0, 3)).is_none());
        let r = std::panic::catch_unwind(|| big + GoldenInt::ONE);
        assert!(r.is_err());
    }

    #[test]
    fn display_and_parse() {
        for (x, s) in [
            (g(-1, 2), "-1+2*tau"),
            (GoldenInt::ZERO, "0"),
            (GoldenInt::TAU, "tau"),
            (g(0, -1), "-tau"),
            (g(1, -1), "1-tau"),
            (g(3, 0), "3"),
            (g(0, 4), "4*tau"),
            (g(-7, -3), "-7-3*tau"),
        ] {
            assert_eq!(x.to_string(), s);
            assert_eq!(s.parse::<GoldenInt>().unwrap(), x);
        }
        assert!("tau*2".parse::<GoldenInt>().is_err());
        let c = CycloInt::new(g(-1, 0), GoldenInt::TAU);
        assert_eq!(c.to_string(), "(-1)+(tau)*xi");
    }

    #[test]
    fn rational_canonical_and_recip() {
        let x = GoldenRational::new(g(4, 2), 10);
        assert_eq!(x.numer(), g(2, 1));
        assert_eq!(x.denom(), 5);
        // 1/(3 - tau) = (2 + tau)/5
        let r = GoldenRational::from(g(3, -1)).recip().unwrap();
        assert_eq!(r, GoldenRational::new(g(2, 1), 5));
        assert_eq!(r * GoldenRational::from(g(3, -1)), GoldenRational::ONE);
        assert_eq!(x.to_string(), "(2+tau)/5");
        assert!(GoldenRational::new(g(1, 0), 3) < GoldenRational::new(g(0, 1), 4));
    }

    #[test]
    fn xi_relations() {
        let xi = CycloInt::XI;
        assert_eq!(xi * xi, CycloInt::new(g(-1, 0), GoldenInt::TAU));
        let mut acc = CycloInt::ONE;
        for j in 0..10 {
            assert_eq!(acc, CycloInt::xi_pow(j));
            acc = acc * xi;
        }
        assert_eq!(acc, CycloInt::ONE);
        assert_eq!(CycloInt::xi_pow(5), -CycloInt::ONE);
        // numeric check of the minimal relation
        let (re, im) = CycloInt::xi_pow(2).embed();
        let t = 2.0 * std::f64::consts::PI / 5.0;
        assert!((re - t.cos()).abs() < 1e-12 && (im - t.sin()).abs() < 1e-12);
    }

    #[test]
    fn cyclo_embed_examples() {
        let (re, im) = CycloInt::XI.embed();
        assert!((re - 0.809_017).abs() < 1e-6 && (im - 0.587_785).abs() < 1e-6);
        let lhs = CycloInt::ONE + CycloInt::xi_pow(2);
        let rhs = CycloInt::XI.scale(GoldenInt::TAU);
        assert_eq!(lhs, rhs);
        let (a, b) = lhs.embed();
        let (c, d) = rhs.embed();
        assert!((a - c).abs() < 1e-12 && (b - d).abs() < 1e-12);
        assert_eq!(CycloInt::ZERO.embed(), (0.0, 0.0));
    }

    #[test]
    fn star_examples() {
        assert_eq!(CycloInt::xi_pow(0).star(), CycloInt::xi_pow(0));
        assert_eq!(CycloInt::xi_pow(4).star(), CycloInt::xi_pow(8));
        assert_eq!(CycloInt::xi_pow(1).star(), CycloInt::xi_pow(7));
        for j in 0..10 {
            assert_eq!(CycloInt::xi_pow(j).star(), CycloInt::xi_pow(7 * j));
        }
    }

    #[test]
    fn complex_conj_and_realness() {
        assert_eq!(CycloInt::XI.complex_conj(), CycloInt::xi_pow(9));
        assert!(CycloInt::real(g(-1, 2)).is_real());
        assert!(!CycloInt::XI.is_real());
        assert_eq!((CycloInt::xi_pow(1) + CycloInt::xi_pow(9)), CycloInt::real(GoldenInt::TAU));
        assert_eq!(CycloInt::xi_pow(3).abs_sq(), GoldenInt::ONE);
    }

    fn golden() -> impl Strategy<Value = GoldenInt> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| g(a, b))
    }

    fn cyclo() -> impl Strategy<Value = CycloInt> {
        (golden(), golden()).prop_map(|(p, q)| CycloInt::new(p, q))
    }

    proptest! {
        #[test]
        fn conj_is_involutive_automorphism(x in golden(), y in golden()) {
            prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
            prop_assert_eq!((x + y).conj(), x.conj() + y.conj());
            prop_assert_eq!(x.conj().conj(), x);
        }

        #[test]
        fn sign_agrees_with_float(a in -1_000_000i64..=1_000_000, b in -1_000_000i64..=1_000_000) {
            let x = g(a, b);
            // |a + b tau| >= 1/(sqrt5 |b| + ...) ~ 4e-7 here, far above the
            // ~3e-10 rounding error of the double evaluation.
            let f = x.to_f64();
            let expected = if f > 0.0 { Sign::Positive } else if f < 0.0 { Sign::Negative } else { Sign::Zero };
            prop_assert_eq!(x.sign(), expected);
        }

        #[test]
        fn star_is_semilinear(a in golden(), x in cyclo(), y in cyclo()) {
            let lhs = (x.scale(a) + y).star();
            let rhs = x.star().scale(a.conj()) + y.star();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(x.star().star().star().star(), x);
        }

        #[test]
        fn cyclo_mul_matches_complex(x in cyclo(), y in cyclo()) {
            let (a, b) = x.embed();
            let (c, d) = y.embed();
            let (re, im) = (x * y).embed();
            let scale = 1.0 + (a * a + b * b).sqrt() * (c * c + d * d).sqrt();
            prop_assert!((re - (a * c - b * d)).abs() < 1e-9 * scale);
            prop_assert!((im - (a * d + b * c)).abs() < 1e-9 * scale);
        }

        #[test]
        fn norm_is_multiplicative(x in golden(), y in golden()) {
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
        }
    }

    #[test]
    fn roots_of_unity_closed_under_star_and_negation() {
        let all: Vec<CycloInt> = (0..10).map(CycloInt::xi_pow).collect();
        for x in &all {
            assert!(all.contains(&x.star()));
            assert!(all.contains(&-*x));
        }
    }
}
