//! Exact rational sequences: harmonic numbers, Bernoulli and Euler numbers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// An exact rational in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big(self) -> BigRational {
        self.0
    }

    /// Nearest double.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// H_n = ∑_{k=1}^n 1/k, exactly.
pub fn harmonic(n: u64) -> Result<Rational> {
    generalized_harmonic(n, 1, "harmonic")
}

/// H_n^{(2)} = ∑_{k=1}^n 1/k², exactly.
pub fn harmonic2(n: u64) -> Result<Rational> {
    generalized_harmonic(n, 2, "harmonic2")
}

fn generalized_harmonic(n: u64, order: u32, function: &'static str) -> Result<Rational> {
    if n == 0 {
        return Err(Error::domain(function, "n must be at least 1"));
    }
    let mut acc = BigRational::zero();
    for k in 1..=n {
        let den = BigInt::from(k).pow(order);
        acc += BigRational::new(BigInt::one(), den);
    }
    Ok(Rational(acc))
}

const TABLE_LEN: usize = 161;

static BERNOULLI: Lazy<Vec<BigRational>> = Lazy::new(|| akiyama_tanigawa(TABLE_LEN));
static BERNOULLI_F64: Lazy<Vec<f64>> = Lazy::new(|| {
    BERNOULLI
        .iter()
        .map(|b| b.to_f64().unwrap_or(f64::NAN))
        .collect()
});

/// B_0..B_{len-1} with B_1 = −1/2.
fn akiyama_tanigawa(len: usize) -> Vec<BigRational> {
    let mut row: Vec<BigRational> = Vec::with_capacity(len);
    let mut out = Vec::with_capacity(len);
    for m in 0..len {
        row.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
        }
        out.push(row[0].clone());
    }
    // the transform yields B_1 = +1/2
    if len > 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// B_n with the B_1 = −1/2 convention.
pub fn bernoulli(n: usize) -> Rational {
    if n < TABLE_LEN {
        return Rational(BERNOULLI[n].clone());
    }
    if n % 2 == 1 {
        return Rational(BigRational::zero());
    }
    Rational(akiyama_tanigawa(n + 1).swap_remove(n))
}

/// B_n as a double; tabulated for n < 161.
pub fn bernoulli_f64(n: usize) -> f64 {
    if n < TABLE_LEN {
        BERNOULLI_F64[n]
    } else {
        bernoulli(n).to_f64()
    }
}

/// Euler number E_n (E_0 = 1, E_2 = −1, E_4 = 5, …; zero for odd n).
///
/// Uses the boustrophedon (Seidel) triangle, which yields the zigzag
/// numbers |E_{2k}|; the sign is (−1)^k.
pub fn euler_number(n: usize) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        next.push(BigInt::zero());
        for j in 0..i {
            // reversed previous row, running sums
            let v = &next[j] + &row[i - 1 - j];
            next.push(v);
        }
        row = next;
    }
    let zigzag = row.last().cloned().unwrap_or_else(BigInt::one);
    if (n / 2) % 2 == 1 {
        -zigzag
    } else {
        zigzag
    }
}

/// |E_n| as a double.
pub fn euler_number_abs_f64(n: usize) -> f64 {
    euler_number(n).abs().to_f64().unwrap_or(f64::INFINITY)
}

/// Exact binomial coefficient C(n, k) as a double (exact below 2^53).
pub fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0_f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

/// n! as a double.
pub fn factorial(n: u64) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}
