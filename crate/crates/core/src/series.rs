//! Dense formal power series in `t`, truncated at a fixed degree.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{add, mul, sub, ExactInt};

/// Coefficients `c₀..c_N` of a power series modulo `t^{N+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TruncatedSeries<T> {
    coefficients: Vec<T>,
}

impl<T: ExactInt> TruncatedSeries<T> {
    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            coefficients: vec![T::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coefficients[0] = T::one();
        s
    }

    /// Pads or truncates `coefficients` to degree `degree`.
    pub fn from_coefficients(mut coefficients: Vec<T>, degree: usize) -> Self {
        coefficients.resize(degree + 1, T::zero());
        TruncatedSeries { coefficients }
    }

    /// Highest degree kept.
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<T> {
        self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> Option<&T> {
        self.coefficients.get(i)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coefficients.iter().position(|c| !c.is_zero())
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::InvalidQuery(format!(
                "series truncated at different degrees ({} and {})",
                self.degree(),
                other.degree()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| add(a, b, "series sum"))
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coefficients })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| sub(a, b, "series difference"))
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coefficients })
    }

    /// Product, dropping every term above the common degree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let degree = self.degree();
        let mut out = Self::zero(degree);
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..=degree - i].iter().enumerate() {
                let term = mul(a, b, "series product")?;
                out.coefficients[i + j] = add(&out.coefficients[i + j], &term, "series product")?;
            }
        }
        Ok(out)
    }
}

impl<T: ExactInt + Signed> TruncatedSeries<T> {
    /// `1 − t`.
    pub fn one_minus_t(degree: usize) -> Self {
        let mut s = Self::one(degree);
        if degree >= 1 {
            s.coefficients[1] = -T::one();
        }
        s
    }
}

/// `1 + Σ_{n≥1} Π_{i=1}^{n} (1 − (1−t)^i)` through degree `degree`.
///
/// Each factor `1 − (1−t)^i` has zero constant term, so the `n`-th product
/// starts at `tⁿ` and only `n ≤ degree` contributes.
pub fn fishburn_series<T: ExactInt + Signed>(degree: usize) -> Result<TruncatedSeries<T>> {
    let one = TruncatedSeries::<T>::one(degree);
    let one_minus_t = TruncatedSeries::one_minus_t(degree);
    let mut total = one.clone();
    let mut power = one.clone();
    let mut product = one.clone();
    for _ in 1..=degree {
        power = power.mul(&one_minus_t)?;
        product = product.mul(&one.sub(&power)?)?;
        total = total.add(&product)?;
    }
    Ok(total)
}
