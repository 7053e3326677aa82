//! Exact scalar fields: the rationals and prime fields of odd characteristic.
//!
//! Elements carry enough information to do arithmetic on their own (a
//! residue knows its modulus), so the algebra layers above never need to
//! thread a context through every addition. Mixing elements of different
//! fields is a programming error and panics in the operator impls; the
//! `checked_*` methods report it as [`FieldError::MixedFields`] instead.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("fields of characteristic 2 are not supported")]
    Char2Field,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("{0} is not a square in the field")]
    NotASquare(String),
}

/// The ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn rationals() -> Self {
        Field::Rationals
    }

    /// `GF(p)` for an odd prime `p < 2^32`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::Char2Field);
        }
        if p >= 1 << 32 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Number of square classes `|F*/(F*)^2|`, `None` when infinite.
    pub fn square_class_count(&self) -> Option<usize> {
        match self {
            Field::Rationals => None,
            Field::Prime(_) => Some(2),
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElem::Residue(Residue::new(n.rem_euclid(*p as i64) as u64, *p)),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                FieldElem::Residue(Residue::new(r.to_u64().unwrap(), *p))
            }
        }
    }

    /// `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElem, FieldError> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Parses `INT` or `INT/POSINT` into this field.
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem, FieldError> {
        let s = s.trim();
        let bad = || FieldError::Parse(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        if !is_int_literal(num) {
            return Err(bad());
        }
        let n = BigInt::from_str(num).map_err(|_| bad())?;
        match den {
            None => Ok(self.from_bigint(&n)),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let d = BigInt::from_str(d).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                self.from_bigint(&n).checked_div(&self.from_bigint(&d))
            }
        }
    }

    /// Smallest positive quadratic non-residue; `None` over the rationals.
    pub fn smallest_nonresidue(&self) -> Option<FieldElem> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => (2..*p)
                .find(|&a| !euler_is_residue(a, *p))
                .map(|a| FieldElem::Residue(Residue::new(a, *p))),
        }
    }

    /// Canonical representatives of the square classes of `F*`.
    ///
    /// Over `GF(p)` this is `[1, n]` with `n` the smallest non-residue. Over the
    /// rationals the classes are the squarefree integers; those with absolute
    /// value at most `bound` are listed in the order `1, -1, 2, -2, 3, -3, 5, ...`.
    pub fn square_class_reps(&self, bound: u64) -> Vec<FieldElem> {
        match self {
            Field::Prime(_) => vec![self.one(), self.smallest_nonresidue().unwrap()],
            Field::Rationals => (1..=bound)
                .filter(|&m| is_squarefree_u64(m))
                .flat_map(|m| [m as i64, -(m as i64)])
                .map(|m| self.from_i64(m))
                .collect(),
        }
    }

    /// All elements in increasing residue order (prime fields only).
    pub fn elements(&self) -> Option<Vec<FieldElem>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..*p).map(|a| FieldElem::Residue(Residue::new(a, *p))).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    /// `Q` or `GF(p)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| FieldError::Parse(s.to_string()))?;
        if inner.is_empty() || !inner.bytes().all(|b| b.is_ascii_digit()) {
            return Err(FieldError::Parse(s.to_string()));
        }
        let p: u64 = inner.parse().map_err(|_| FieldError::Parse(s.to_string()))?;
        Field::prime(p)
    }
}

fn is_int_literal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// Residue class modulo an odd prime, always reduced into `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Residue { value, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// An element of a [`Field`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Residue(Residue),
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rationals,
            FieldElem::Residue(r) => Field::Prime(r.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Residue(r) => r.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_one(),
            FieldElem::Residue(r) => r.value == 1,
        }
    }

    /// Residue value for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self {
            FieldElem::Residue(r) => Some(r.value),
            FieldElem::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rational(q) => Some(q),
            FieldElem::Residue(_) => None,
        }
    }

    pub fn zero_like(&self) -> FieldElem {
        self.field().zero()
    }

    pub fn one_like(&self) -> FieldElem {
        self.field().one()
    }

    pub fn checked_add(&self, rhs: &FieldElem) -> Result<FieldElem, FieldError> {
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => Ok(FieldElem::Rational(a + b)),
            (FieldElem::Residue(a), FieldElem::Residue(b)) if a.modulus == b.modulus => {
                let p = a.modulus;
                Ok(FieldElem::Residue(Residue::new((a.value + b.value) % p, p)))
            }
            _ => Err(FieldError::MixedFields),
        }
    }

    pub fn checked_sub(&self, rhs: &FieldElem) -> Result<FieldElem, FieldError> {
        self.checked_add(&-rhs)
    }

    pub fn checked_mul(&self, rhs: &FieldElem) -> Result<FieldElem, FieldError> {
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => Ok(FieldElem::Rational(a * b)),
            (FieldElem::Residue(a), FieldElem::Residue(b)) if a.modulus == b.modulus => {
                let p = a.modulus;
                Ok(FieldElem::Residue(Residue::new(mul_mod(a.value, b.value, p), p)))
            }
            _ => Err(FieldError::MixedFields),
        }
    }

    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            FieldElem::Rational(q) => Ok(FieldElem::Rational(q.recip())),
            FieldElem::Residue(r) => {
                let v = pow_mod(r.value, r.modulus - 2, r.modulus);
                Ok(FieldElem::Residue(Residue::new(v, r.modulus)))
            }
        }
    }

    pub fn checked_div(&self, rhs: &FieldElem) -> Result<FieldElem, FieldError> {
        if self.field() != rhs.field() {
            return Err(FieldError::MixedFields);
        }
        self.checked_mul(&rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical representative of the class of `self` modulo nonzero squares.
    ///
    /// Over the rationals this is the signed squarefree part of
    /// `numerator * denominator`; over `GF(p)` it is `1` for residues and the
    /// smallest non-residue otherwise.
    pub fn square_class_rep(&self) -> Result<FieldElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroArgument);
        }
        match self {
            FieldElem::Rational(q) => {
                let kn = squarefree_kernel(q.numer().magnitude());
                let kd = squarefree_kernel(q.denom().magnitude());
                let g = kn.gcd(&kd);
                let k = (&kn / &g) * (&kd / &g);
                let sign = if q.is_negative() { Sign::Minus } else { Sign::Plus };
                Ok(FieldElem::Rational(BigRational::from_integer(BigInt::from_biguint(sign, k))))
            }
            FieldElem::Residue(r) => {
                if euler_is_residue(r.value, r.modulus) {
                    Ok(self.one_like())
                } else {
                    Ok(self.field().smallest_nonresidue().unwrap())
                }
            }
        }
    }

    /// True iff `other = alpha^2 * self` for some nonzero `alpha`.
    pub fn same_square_class(&self, other: &FieldElem) -> Result<bool, FieldError> {
        if self.field() != other.field() {
            return Err(FieldError::MixedFields);
        }
        if self.is_zero() || other.is_zero() {
            return Err(FieldError::ZeroArgument);
        }
        Ok(self.square_class_rep()? == other.square_class_rep()?)
    }

    /// A square root, when one exists. Over `GF(p)` the smaller of the two
    /// roots is returned; over the rationals the nonnegative one.
    pub fn sqrt(&self) -> Option<FieldElem> {
        match self {
            FieldElem::Rational(q) => {
                if q.is_negative() {
                    return None;
                }
                let n = q.numer().magnitude();
                let d = q.denom().magnitude();
                let (sn, sd) = (n.sqrt(), d.sqrt());
                if &(&sn * &sn) == n && &(&sd * &sd) == d {
                    Some(FieldElem::Rational(BigRational::new(sn.into(), sd.into())))
                } else {
                    None
                }
            }
            FieldElem::Residue(r) => {
                let root = sqrt_mod(r.value, r.modulus)?;
                let other = (r.modulus - root) % r.modulus;
                Some(FieldElem::Residue(Residue::new(root.min(other), r.modulus)))
            }
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElem::Residue(r) => write!(f, "{}", r.value),
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(q) => FieldElem::Rational(-q),
            FieldElem::Residue(r) => FieldElem::Residue(Residue::new((r.modulus - r.value) % r.modulus, r.modulus)),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }

        impl $tr<FieldElem> for &FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn euler_is_residue(a: u64, p: u64) -> bool {
    a % p != 0 && pow_mod(a, (p - 1) / 2, p) == 1
}

/// Tonelli-Shanks.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if !euler_is_residue(a, p) {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| !euler_is_residue(z, p))?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn is_squarefree_u64(mut n: u64) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n % (d * d) == 0 {
            return false;
        }
        if n % d == 0 {
            n /= d;
        }
        d += 1;
    }
    true
}

const TRIAL_LIMIT: u32 = 1 << 12;

/// Squarefree part of `n` (`n > 0`): the product of the primes dividing `n`
/// to an odd power. Small primes are removed by trial division, the cofactor
/// is split with Pollard's rho.
pub(crate) fn squarefree_kernel(n: &BigUint) -> BigUint {
    let mut n = n.clone();
    let mut kernel = BigUint::one();
    for d in 2..TRIAL_LIMIT {
        if (d as u64) * (d as u64) > n.to_u64().unwrap_or(u64::MAX) && n.bits() <= 64 {
            break;
        }
        let dd = BigUint::from(d);
        let mut odd = false;
        while (&n % &dd).is_zero() {
            n /= &dd;
            odd = !odd;
        }
        if odd {
            kernel *= &dd;
        }
    }
    combine_kernels(&kernel, &large_kernel(&n))
}

fn combine_kernels(a: &BigUint, b: &BigUint) -> BigUint {
    let g = a.gcd(b);
    (a / &g) * (b / &g)
}

fn large_kernel(n: &BigUint) -> BigUint {
    if n.is_one() {
        return BigUint::one();
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        return BigUint::one();
    }
    if is_probable_prime(n) {
        return n.clone();
    }
    let d = pollard_rho(n);
    combine_kernels(&large_kernel(&d), &large_kernel(&(n / &d)))
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    let small = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    for &p in &small {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &small {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Nontrivial factor of a composite `n` (Brent's variant of Pollard's rho).
fn pollard_rho(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> FieldElem {
        Field::Rationals.parse_elem(s).unwrap()
    }

    fn gf(p: u64, v: i64) -> FieldElem {
        Field::prime(p).unwrap().from_i64(v)
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("-4/6"), q("-2/3"));
        assert_eq!(q("3/4").inv().unwrap(), q("4/3"));
        assert_eq!(q("0").inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn prime_arithmetic() {
        assert_eq!(gf(7, 3).inv().unwrap(), gf(7, 5));
        assert_eq!(gf(5, 4) * gf(5, 4), gf(5, 1));
        assert_eq!(gf(5, -1), gf(5, 4));
        assert_eq!(gf(5, 2).checked_add(&gf(7, 2)), Err(FieldError::MixedFields));
        assert_eq!(gf(3, 1).checked_add(&q("1")), Err(FieldError::MixedFields));
    }

    #[test]
    fn field_construction() {
        assert_eq!(Field::prime(2), Err(FieldError::Char2Field));
        assert_eq!(Field::prime(9), Err(FieldError::NotPrime(9)));
        assert_eq!("GF(7)".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert!("GF(2)".parse::<Field>().is_err());
        assert!("GF(x)".parse::<Field>().is_err());
    }

    #[test]
    fn literal_grammar() {
        let f = Field::Rationals;
        assert!(f.parse_elem("-3/4").is_ok());
        assert!(f.parse_elem("3/-4").is_err());
        assert!(f.parse_elem("+3").is_err());
        assert!(f.parse_elem("1.5").is_err());
        assert_eq!(f.parse_elem("2/0"), Err(FieldError::DivisionByZero));
        let g = Field::prime(5).unwrap();
        assert_eq!(g.parse_elem("1/2").unwrap(), gf(5, 3));
        assert_eq!(g.parse_elem("1/5"), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn square_classes() {
        assert_eq!(q("-4").square_class_rep().unwrap(), q("-1"));
        assert_eq!(q("18").square_class_rep().unwrap(), q("2"));
        assert_eq!(q("3/12").square_class_rep().unwrap(), q("1"));
        assert_eq!(q("-2/3").square_class_rep().unwrap(), q("-6"));
        assert_eq!(gf(7, 5).square_class_rep().unwrap(), gf(7, 3));
        assert_eq!(gf(7, 2).square_class_rep().unwrap(), gf(7, 1));
        assert!(gf(5, 1).same_square_class(&gf(5, 4)).unwrap());
        assert!(!q("2").same_square_class(&q("3")).unwrap());
        assert!(!gf(3, 1).same_square_class(&gf(3, 2)).unwrap());
        assert_eq!(q("0").square_class_rep(), Err(FieldError::ZeroArgument));
    }

    #[test]
    fn kernel_of_large_numbers() {
        // 1000003 and 999983 are prime; the square factor must be detected.
        let big = BigUint::from(1_000_003u64) * BigUint::from(1_000_003u64) * BigUint::from(999_983u64) * 6u32;
        assert_eq!(squarefree_kernel(&big), BigUint::from(999_983u64 * 6));
        let semi = BigUint::from(1_000_003u64) * BigUint::from(999_983u64);
        assert_eq!(squarefree_kernel(&semi), semi);
    }

    #[test]
    fn square_roots() {
        for p in [3u64, 5, 7, 13, 17, 41] {
            let f = Field::prime(p).unwrap();
            for a in f.elements().unwrap() {
                let sq = &a * &a;
                let r = sq.sqrt().unwrap();
                assert_eq!(&r * &r, sq);
            }
        }
        assert_eq!(q("9/4").sqrt(), Some(q("3/2")));
        assert_eq!(q("2").sqrt(), None);
        assert_eq!(q("-1").sqrt(), None);
    }

    #[test]
    fn rational_reps_listing() {
        let reps: Vec<String> = Field::Rationals.square_class_reps(5).iter().map(|e| e.to_string()).collect();
        assert_eq!(reps, ["1", "-1", "2", "-2", "3", "-3", "5", "-5"]);
        assert_eq!(Field::prime(7).unwrap().square_class_reps(0), vec![gf(7, 1), gf(7, 3)]);
    }
}
