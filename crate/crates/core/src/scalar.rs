//! Scalar fields the engine can run over.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, ToPrimitive, Zero};

/// A field element usable as a matrix entry.
///
/// Exact types (`BigRational`, `Ratio<i64>`) decide equality structurally;
/// floating types treat anything below a small tolerance as zero.
pub trait Scalar: Num + Clone + Debug + Display + Send + Sync + 'static {
    /// `true` for the exact rational types.
    const EXACT: bool;

    fn from_rational(q: &BigRational) -> Option<Self>;
    fn to_rational(&self) -> Option<BigRational>;

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(v)))
            .expect("small integers embed in every scalar type")
    }

    fn negated(&self) -> Self {
        Self::zero() - self.clone()
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

impl Scalar for Ratio<i64> {
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(Ratio::new(q.numer().to_i64()?, q.denom().to_i64()?))
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom())))
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_rational(q: &BigRational) -> Option<Self> {
                let v = q.numer().to_f64()? / q.denom().to_f64()?;
                Some(v as $t)
            }

            fn to_rational(&self) -> Option<BigRational> {
                BigRational::from_float(*self)
            }

            fn is_negligible(&self) -> bool {
                self.abs() < $tol
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);

/// Formats an exact rational as `p` or `p/q`.
pub fn rat_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q` into a reduced rational; `q = 0` is rejected.
pub fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}
