//! Scalar abstraction for the closed-form bound evaluations.
//!
//! Every formula in [`crate::analysis`] is written once against [`Real`] and
//! instantiated at `f64` for everyday use and at [`Precise`] (256-bit binary
//! floating point, about 77 significant decimal digits) when a value has to be
//! cross-checked against a high-precision re-evaluation.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use num_traits::{Float, One, Zero};

/// Field operations plus the handful of transcendental functions the bound
/// formulas need.
pub trait Real:
    Clone
    + fmt::Debug
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Exact conversion of a binary64 value.
    fn from_f64(x: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn powf(&self, exponent: &Self) -> Self;

    fn from_u64(x: u64) -> Self {
        Self::from_f64(x as f64)
    }

    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Euler's number.
    fn e() -> Self {
        Self::one().exp()
    }
}

macro_rules! impl_real_for_float {
    ($t:ty) => {
        impl Real for $t {
            fn from_f64(x: f64) -> Self {
                x as $t
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
            fn ln(&self) -> Self {
                Float::ln(*self)
            }
            fn exp(&self) -> Self {
                Float::exp(*self)
            }
            fn sqrt(&self) -> Self {
                Float::sqrt(*self)
            }
            fn powf(&self, exponent: &Self) -> Self {
                Float::powf(*self, *exponent)
            }
            fn powi(&self, n: u32) -> Self {
                Float::powi(*self, n as i32)
            }
            fn abs(&self) -> Self {
                Float::abs(*self)
            }
        }
    };
}

impl_real_for_float!(f32);
impl_real_for_float!(f64);

/// Working precision of [`Precise`], in bits.
pub const PRECISE_BITS: usize = 256;

type Big = FBig<HalfEven, 2>;

/// 256-bit binary floating point value.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Precise(Big);

impl Precise {
    fn wrap(x: Big) -> Self {
        Precise(x.with_precision(PRECISE_BITS).value())
    }

    /// Parses a decimal literal at full working precision.
    pub fn from_decimal(text: &str) -> Option<Self> {
        let parsed: FBig<HalfEven, 10> = text.parse().ok()?;
        let digits = PRECISE_BITS * 30103 / 100000 + 2;
        let parsed = parsed.with_precision(digits).value();
        Some(Self::wrap(parsed.with_base::<2>().value()))
    }
}

impl fmt::Debug for Precise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Precise({:e})", self.to_f64())
    }
}

impl fmt::Display for Precise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let decimal = self.0.clone().with_base_and_precision::<10>(60).value();
        write!(f, "{decimal}")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Precise {
            type Output = Precise;
            fn $method(self, rhs: Precise) -> Precise {
                Precise::wrap(self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);
forward_binop!(Div, div, /);

impl Neg for Precise {
    type Output = Precise;
    fn neg(self) -> Precise {
        Precise(-self.0)
    }
}

impl Zero for Precise {
    fn zero() -> Self {
        Self::wrap(Big::ZERO)
    }
    fn is_zero(&self) -> bool {
        self.0 == Big::ZERO
    }
}

impl One for Precise {
    fn one() -> Self {
        Self::wrap(Big::ONE)
    }
}

impl Real for Precise {
    fn from_f64(x: f64) -> Self {
        Self::wrap(Big::try_from(x).expect("finite f64"))
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }
    fn ln(&self) -> Self {
        Self::wrap(self.0.ln())
    }
    fn exp(&self) -> Self {
        Self::wrap(self.0.exp())
    }
    fn sqrt(&self) -> Self {
        Self::wrap(self.0.sqrt())
    }
    fn powf(&self, exponent: &Self) -> Self {
        Self::wrap(self.0.powf(&exponent.0))
    }
}

/// Relative difference `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_difference<T: Real>(a: &T, b: &T) -> T {
    let diff = (a.clone() - b.clone()).abs();
    let (aa, bb) = (a.abs(), b.abs());
    let scale = if aa > bb { aa } else { bb };
    if scale.is_zero() {
        T::zero()
    } else {
        diff / scale
    }
}
