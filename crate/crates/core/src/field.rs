//! Exact field arithmetic over the rationals and odd prime fields.
//!
//! Every other module computes through [`FieldElement`]; nothing in the crate
//! touches floating point except the SVG projection in [`crate::render`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Below this modulus square roots are found by exhaustive search.
const EXHAUSTIVE_SQRT_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} and {1})")]
    MixedContexts(FieldCtx, FieldCtx),
    #[error("characteristic two is not supported")]
    CharacteristicTwo,
    #[error("modulus {0} is not an odd prime")]
    NotPrime(u64),
    #[error("malformed field literal `{0}`")]
    Malformed(String),
}

/// Which field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx(Kind);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Rational,
    Prime(u64),
}

impl FieldCtx {
    pub const fn rational() -> Self {
        FieldCtx(Kind::Rational)
    }

    /// The prime field F_p. Rejects 2 and every composite modulus.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldCtx(Kind::Prime(p)))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Kind::Rational)
    }

    /// The modulus of a prime field, `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Rational => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> FieldElement {
        match self.0 {
            Kind::Rational => FieldElement(Repr::Rat(BigRational::from_integer(n.into()))),
            Kind::Prime(p) => FieldElement(Repr::Fp {
                residue: n.rem_euclid(p as i64) as u64,
                modulus: p,
            }),
        }
    }

    pub fn bigint(&self, n: &BigInt) -> FieldElement {
        match self.0 {
            Kind::Rational => FieldElement(Repr::Rat(BigRational::from_integer(n.clone()))),
            Kind::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                FieldElement(Repr::Fp {
                    residue: r.to_u64().expect("reduced residue fits in u64"),
                    modulus: p,
                })
            }
        }
    }

    /// `num / den` in this field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<FieldElement, FieldError> {
        self.int(num).checked_div(&self.int(den))
    }

    /// Parses `n`, `-n` or `p/q`. Over F_p the value is reduced (and a
    /// fraction means multiplication by the inverse).
    pub fn parse(&self, text: &str) -> Result<FieldElement, FieldError> {
        let malformed = || FieldError::Malformed(text.to_string());
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let parse_int = |s: &str| -> Result<BigInt, FieldError> {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            s.parse::<BigInt>().map_err(|_| malformed())
        };
        let n = self.bigint(&parse_int(num)?);
        match den {
            None => Ok(n),
            Some(d) => {
                if d.starts_with('-') {
                    return Err(malformed());
                }
                n.checked_div(&self.bigint(&parse_int(d)?))
            }
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rational => write!(f, "rational"),
            Kind::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldCtx {
    type Err = FieldError;

    /// Accepts `rational`, `fp:P` and `fp P`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldCtx::rational());
        }
        let rest = s
            .strip_prefix("fp:")
            .or_else(|| s.strip_prefix("fp "))
            .ok_or_else(|| FieldError::Malformed(s.to_string()))?;
        let p: u64 = rest
            .trim()
            .parse()
            .map_err(|_| FieldError::Malformed(s.to_string()))?;
        FieldCtx::prime(p)
    }
}

/// An exact value in ℚ or F_p, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Fp { residue: u64, modulus: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Checked arithmetic. `Neg` ignores `y` apart from the context check.
pub fn arith(op: ArithOp, x: &FieldElement, y: &FieldElement) -> Result<FieldElement, FieldError> {
    if x.ctx() != y.ctx() {
        return Err(FieldError::MixedContexts(x.ctx(), y.ctx()));
    }
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => return x.checked_div(y),
        ArithOp::Neg => -x,
    })
}

impl FieldElement {
    pub fn ctx(&self) -> FieldCtx {
        match &self.0 {
            Repr::Rat(_) => FieldCtx::rational(),
            Repr::Fp { modulus, .. } => FieldCtx(Kind::Prime(*modulus)),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        FieldElement(Repr::Rat(r))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            Repr::Fp { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rat(_) => None,
            Repr::Fp { residue, .. } => Some(*residue),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_zero(),
            Repr::Fp { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_one(),
            Repr::Fp { residue, .. } => *residue == 1,
        }
    }

    /// Sign over ℚ; `None` over F_p, which has no order.
    pub fn signum(&self) -> Option<i8> {
        match &self.0 {
            Repr::Rat(r) => Some(match r.numer().sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            }),
            Repr::Fp { .. } => None,
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.as_rational().and_then(|r| r.to_f64())
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rat(r) => FieldElement(Repr::Rat(r.recip())),
            Repr::Fp { residue, modulus } => FieldElement(Repr::Fp {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        if self.ctx() != rhs.ctx() {
            return Err(FieldError::MixedContexts(self.ctx(), rhs.ctx()));
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn square(&self) -> FieldElement {
        self * self
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.ctx().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Multiply by a small integer.
    pub fn scale(&self, k: i64) -> FieldElement {
        self * &self.ctx().int(k)
    }

    /// A square root when one exists in the field. The rational root returned
    /// is nonnegative; the F_p root is the smaller of the two residues.
    pub fn sqrt(&self) -> Option<FieldElement> {
        match &self.0 {
            Repr::Rat(r) => {
                if r.is_negative() {
                    return None;
                }
                let n = exact_isqrt(r.numer())?;
                let d = exact_isqrt(r.denom())?;
                Some(FieldElement(Repr::Rat(BigRational::new(n, d))))
            }
            Repr::Fp { residue, modulus } => {
                let root = if *modulus < EXHAUSTIVE_SQRT_LIMIT {
                    sqrt_exhaustive(*residue, *modulus)
                } else {
                    tonelli_shanks(*residue, *modulus)
                }?;
                Some(FieldElement(Repr::Fp {
                    residue: root.min(modulus - root),
                    modulus: *modulus,
                }))
            }
        }
    }

    /// Quadratic-residue test: Euler's criterion over F_p, exponent parity
    /// (via integer square roots) over ℚ.
    pub fn is_square(&self) -> bool {
        match &self.0 {
            Repr::Rat(_) => self.sqrt().is_some(),
            Repr::Fp { residue, modulus } => {
                *residue == 0 || pow_mod(*residue, (modulus - 1) / 2, *modulus) == 1
            }
        }
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn sqrt_exhaustive(x: u64, p: u64) -> Option<u64> {
    (0..=p / 2).find(|r| r * r % p == x)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
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

fn tonelli_shanks(n: u64, p: u64) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    if pow_mod(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(n, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .expect("an odd prime has a non-residue");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(n, q, p);
    let mut r = pow_mod(n, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
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

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn same_ctx(a: &FieldElement, b: &FieldElement) -> u64 {
    match (&a.0, &b.0) {
        (Repr::Fp { modulus: p, .. }, Repr::Fp { modulus: q, .. }) if p == q => *p,
        _ => panic!(
            "{}",
            FieldError::MixedContexts(a.ctx(), b.ctx())
        ),
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $fp:expr) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;

            /// Panics when the operands live in different fields; use
            /// [`arith`] for a checked variant.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match (&self.0, &rhs.0) {
                    (Repr::Rat(a), Repr::Rat(b)) => FieldElement(Repr::Rat($rat(a, b))),
                    _ => {
                        let p = same_ctx(self, rhs);
                        let (a, b) = (self.residue().unwrap(), rhs.residue().unwrap());
                        FieldElement(Repr::Fp {
                            residue: $fp(a, b, p),
                            modulus: p,
                        })
                    }
                }
            }
        }

        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }

        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| ((a as u128 + b as u128) % p as u128) as u64
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| ((a as u128 + p as u128 - b as u128) % p as u128) as u64
);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, mul_mod);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match &self.0 {
            Repr::Rat(r) => FieldElement(Repr::Rat(-r)),
            Repr::Fp { residue, modulus } => FieldElement(Repr::Fp {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            }),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Fp { residue, .. } => write!(f, "{residue}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> FieldElement {
        FieldCtx::rational().parse(s).unwrap()
    }

    fn fp(p: u64, n: i64) -> FieldElement {
        FieldCtx::prime(p).unwrap().int(n)
    }

    #[test]
    fn rational_arith_examples() {
        assert_eq!(&q("2/3") + &q("1/6"), q("5/6"));
        assert_eq!(&q("1/2") * &q("2/1"), q("1"));
        assert_eq!(q("4/6").to_string(), "2/3");
        assert_eq!(q("-6/2").to_string(), "-3");
    }

    #[test]
    fn prime_arith_examples() {
        assert_eq!(&fp(7, 3) * &fp(7, 5), fp(7, 1));
        assert_eq!(&fp(7, 3) - &fp(7, 5), fp(7, 5));
        assert_eq!(-fp(7, 0), fp(7, 0));
        assert_eq!(fp(7, 3).inv().unwrap(), fp(7, 5));
    }

    #[test]
    fn arith_errors() {
        let z = q("0");
        assert_eq!(
            arith(ArithOp::Div, &q("1"), &z),
            Err(FieldError::DivisionByZero)
        );
        assert!(matches!(
            arith(ArithOp::Add, &q("1"), &fp(7, 1)),
            Err(FieldError::MixedContexts(_, _))
        ));
        assert_eq!(arith(ArithOp::Neg, &q("1/2"), &z).unwrap(), q("-1/2"));
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn operator_panics_on_mixed_contexts() {
        let _ = &fp(7, 1) + &fp(11, 1);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(q("9/4").sqrt(), Some(q("3/2")));
        assert_eq!(q("2").sqrt(), None);
        assert_eq!(q("-1").sqrt(), None);
        assert_eq!(fp(7, 2).sqrt(), Some(fp(7, 3)));
        assert!(q("0").is_square());
        assert!(!q("-1").is_square());
        assert!(!fp(13, 5).is_square());
    }

    #[test]
    fn tonelli_shanks_matches_exhaustive() {
        // 10007 and 40961 (= 5·2^13 + 1, high 2-adic valuation) exercise
        // both branches of the large-modulus path.
        for p in [10_007u64, 40_961, 65_537] {
            let ctx = FieldCtx::prime(p).unwrap();
            for x in [0i64, 1, 2, 3, 5, 7, 1234, 9999] {
                let e = ctx.int(x);
                let want = sqrt_exhaustive(x as u64 % p, p);
                let got = e.sqrt();
                assert_eq!(got.as_ref().and_then(|r| r.residue()), want, "p={p} x={x}");
                if let Some(r) = got {
                    assert_eq!(r.square(), e);
                }
                assert_eq!(e.is_square(), want.is_some());
            }
        }
    }

    #[test]
    fn square_count_is_half_plus_one() {
        for p in (3u64..=101).filter(|&p| is_prime(p)) {
            let ctx = FieldCtx::prime(p).unwrap();
            let squares = (0..p as i64).filter(|&x| ctx.int(x).is_square()).count();
            assert_eq!(squares as u64, (p + 1) / 2, "p={p}");
        }
    }

    #[test]
    fn ctx_construction() {
        assert_eq!(FieldCtx::prime(2), Err(FieldError::CharacteristicTwo));
        assert_eq!(FieldCtx::prime(9), Err(FieldError::NotPrime(9)));
        assert_eq!(FieldCtx::prime(1), Err(FieldError::NotPrime(1)));
        assert!(FieldCtx::prime(101).is_ok());
        assert_eq!("fp:13".parse::<FieldCtx>().unwrap().modulus(), Some(13));
        assert!("fp:2".parse::<FieldCtx>().is_err());
        assert!("rational".parse::<FieldCtx>().unwrap().is_rational());
    }

    #[test]
    fn parse_literals() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!(f7.parse("1/3").unwrap(), fp(7, 5));
        assert_eq!(f7.parse("-1").unwrap(), fp(7, 6));
        assert_eq!(f7.parse("1/7"), Err(FieldError::DivisionByZero));
        assert!(FieldCtx::rational().parse("1/").is_err());
        assert!(FieldCtx::rational().parse("a").is_err());
        assert!(FieldCtx::rational().parse("1/-2").is_err());
    }
}
