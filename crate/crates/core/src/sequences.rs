//! Recurrences and the closed forms of the known avoidance classes.
//!
//! **Fibonacci convention.** Throughout this crate `F₀ = F₁ = 1` and
//! `Fₙ = Fₙ₋₁ + Fₙ₋₂`, so `F₅ = 8`. This is shifted by one from the common
//! `F₀ = 0` convention. [`fibonacci`] is the only place the convention is
//! encoded.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::PatternSet;
use crate::scalar::{add, exact_div, lift, mul, sub, ExactInt};

/// `F₀ = F₁ = 1`, `Fₙ = Fₙ₋₁ + Fₙ₋₂`.
pub fn fibonacci<T: ExactInt>(n: u32) -> Result<T> {
    let (mut a, mut b) = (T::one(), T::one());
    for _ in 0..n {
        let next = add(&a, &b, "Fibonacci number")?;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// `P₀ = 0`, `P₁ = 1`, `Pₙ = 2Pₙ₋₁ + Pₙ₋₂`.
pub fn pell<T: ExactInt>(n: u32) -> Result<T> {
    let two: T = lift(2)?;
    let (mut a, mut b) = (T::zero(), T::one());
    for _ in 0..n {
        let next = add(&mul(&two, &b, "Pell number")?, &a, "Pell number")?;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// `Q₀ = 1`; `Qₙ = (Pₙ + Pₙ₋₁ + 1) / 2` for `n ≥ 1`.
pub fn q_value<T: ExactInt>(n: u32) -> Result<T> {
    if n == 0 {
        return Ok(T::one());
    }
    let top = add(&pell::<T>(n)?, &pell::<T>(n - 1)?, "Q value")?;
    let top = add(&top, &T::one(), "Q value")?;
    exact_div(&top, 2, "Q value of even numerator")
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial<T: ExactInt>(n: u64, k: u64) -> Result<T> {
    if k > n {
        return Ok(T::zero());
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = mul(&acc, &lift(n - i)?, "binomial coefficient")?;
        acc = exact_div(&acc, i + 1, "binomial coefficient")?;
    }
    Ok(acc)
}

pub fn pow2<T: ExactInt>(e: u32) -> Result<T> {
    let two: T = lift(2)?;
    (0..e).try_fold(T::one(), |acc, _| mul(&acc, &two, "power of two"))
}

fn shifted(n: u32, by: u32, what: &'static str) -> Result<u32> {
    n.checked_sub(by).ok_or(Error::Domain(what))
}

/// `(Σ pos·nⁱ − Σ neg·nⁱ) / denom` for small integer coefficient lists
/// indexed by degree; exact or an error.
fn quadratic<T: ExactInt>(n: u32, pos: [u64; 3], neg: [u64; 3], denom: u64) -> Result<T> {
    let n = u64::from(n);
    let eval = |c: [u64; 3]| -> Result<T> {
        let nn: T = lift(n)?;
        let sq = mul(&nn, &nn, "polynomial")?;
        let a = mul(&lift(c[2])?, &sq, "polynomial")?;
        let b = mul(&lift(c[1])?, &nn, "polynomial")?;
        add(&add(&a, &b, "polynomial")?, &lift(c[0])?, "polynomial")
    };
    let value = sub(&eval(pos)?, &eval(neg)?, "polynomial")?;
    exact_div(&value, denom, "polynomial with fractional value")
}

/// Closed forms appearing as class sizes or as sizes of the position-of-1
/// halves `F_n^{(1)}`, `F_n^{(2)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SequenceId {
    /// `n² − 3n + 4`
    QuadA,
    /// `(3n² − 13n + 20) / 2`
    QuadB,
    /// `C(n,2) + 1`
    BinomPlus1,
    /// `Fₙ + 2`
    FibPlus2,
    /// `Fₙ₊₁ − 1`
    FibNextMinus1,
    /// `2ⁿ − C(n,2) − 1`
    PowMinusBinom,
    /// `Qₙ = (Pₙ + Pₙ₋₁ + 1) / 2`
    PellQ,
    /// `n`
    Linear,
    /// `Fₙ`
    Fib,
    /// `2ⁿ⁻¹`
    Pow,
    /// `n² − 4n + 5`
    QuadC,
    /// `2n − 4`
    TwiceMinus4,
    /// `(3n² − 15n + 22) / 2`
    QuadD,
    /// `n² − 5n + 8`
    QuadE,
    /// `n − 1`
    LinearPrev,
    /// `C(n−1,2) + 1`
    BinomPrevPlus1,
    /// `Fₙ₋₂ + 2`
    FibPrev2Plus2,
    /// `Fₙ₋₁`
    FibPrev,
    /// `Fₙ − 1`
    FibMinus1,
    /// `Pₙ₋₁`
    PellPrev,
    /// `Qₙ₋₁`
    PellQPrev,
    /// `2ⁿ⁻¹ − C(n−1,2) − 1`
    PowMinusBinomPrev,
    /// `2ⁿ⁻¹ − n + 1`
    PowPrevMinusLinear,
}

impl SequenceId {
    pub fn eval<T: ExactInt>(self, n: u32) -> Result<T> {
        use SequenceId::*;
        let nn = u64::from(n);
        let one = T::one();
        match self {
            QuadA => quadratic(n, [4, 0, 1], [0, 3, 0], 1),
            QuadB => quadratic(n, [20, 0, 3], [0, 13, 0], 2),
            QuadC => quadratic(n, [5, 0, 1], [0, 4, 0], 1),
            QuadD => quadratic(n, [22, 0, 3], [0, 15, 0], 2),
            QuadE => quadratic(n, [8, 0, 1], [0, 5, 0], 1),
            TwiceMinus4 => quadratic(n, [0, 2, 0], [4, 0, 0], 1),
            BinomPlus1 => add(&binomial(nn, 2)?, &one, "C(n,2)+1"),
            BinomPrevPlus1 => {
                let m = shifted(n, 1, "C(n-1,2)+1")?;
                add(&binomial(u64::from(m), 2)?, &one, "C(n-1,2)+1")
            }
            FibPlus2 => add(&fibonacci(n)?, &lift(2)?, "F(n)+2"),
            FibNextMinus1 => sub(&fibonacci(n + 1)?, &one, "F(n+1)-1"),
            FibPrev2Plus2 => add(
                &fibonacci(shifted(n, 2, "F(n-2)+2")?)?,
                &lift(2)?,
                "F(n-2)+2",
            ),
            FibPrev => fibonacci(shifted(n, 1, "F(n-1)")?),
            FibMinus1 => sub(&fibonacci(n)?, &one, "F(n)-1"),
            Fib => fibonacci(n),
            PowMinusBinom => {
                let v = sub(&pow2(n)?, &binomial(nn, 2)?, "2^n-C(n,2)-1")?;
                sub(&v, &one, "2^n-C(n,2)-1")
            }
            PowMinusBinomPrev => {
                let m = shifted(n, 1, "2^(n-1)-C(n-1,2)-1")?;
                let v = sub(&pow2(m)?, &binomial(u64::from(m), 2)?, "2^(n-1)-C(n-1,2)-1")?;
                sub(&v, &one, "2^(n-1)-C(n-1,2)-1")
            }
            PowPrevMinusLinear => {
                let m = shifted(n, 1, "2^(n-1)-n+1")?;
                let v = add(&pow2(m)?, &one, "2^(n-1)-n+1")?;
                sub(&v, &lift(nn)?, "2^(n-1)-n+1")
            }
            PellQ => q_value(n),
            PellQPrev => q_value(shifted(n, 1, "Q(n-1)")?),
            PellPrev => pell(shifted(n, 1, "P(n-1)")?),
            Linear => lift(nn),
            LinearPrev => sub(&lift(nn)?, &one, "n-1"),
            Pow => pow2(shifted(n, 1, "2^(n-1)")?),
        }
    }

    /// Human-readable right-hand side.
    pub fn formula(self) -> &'static str {
        use SequenceId::*;
        match self {
            QuadA => "n^2-3n+4",
            QuadB => "3n^2/2-13n/2+10",
            BinomPlus1 => "C(n,2)+1",
            FibPlus2 => "F(n)+2",
            FibNextMinus1 => "F(n+1)-1",
            PowMinusBinom => "2^n-C(n,2)-1",
            PellQ => "(P(n)+P(n-1)+1)/2",
            Linear => "n",
            Fib => "F(n)",
            Pow => "2^(n-1)",
            QuadC => "n^2-4n+5",
            TwiceMinus4 => "2n-4",
            QuadD => "3n^2/2-15n/2+11",
            QuadE => "n^2-5n+8",
            LinearPrev => "n-1",
            BinomPrevPlus1 => "C(n-1,2)+1",
            FibPrev2Plus2 => "F(n-2)+2",
            FibPrev => "F(n-1)",
            FibMinus1 => "F(n)-1",
            PellPrev => "P(n-1)",
            PellQPrev => "Q(n-1)",
            PowMinusBinomPrev => "2^(n-1)-C(n-1,2)-1",
            PowPrevMinusLinear => "2^(n-1)-n+1",
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

/// One enumeration result: `|F_n(patterns)| = formula(n)` for `n ≥ valid_from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequenceRow {
    /// Comma-separated classical patterns; Fishburn avoidance is implied.
    pub patterns: &'static str,
    pub formula: SequenceId,
    pub valid_from: u32,
    /// `"theorem"` or `"lemma"`
    pub kind: &'static str,
}

impl SequenceRow {
    pub fn pattern_set(&self) -> PatternSet {
        PatternSet::parse(self.patterns, true).expect("catalogued patterns parse")
    }

    pub fn id(&self) -> &'static str {
        self.patterns
    }
}

const fn row(
    patterns: &'static str,
    formula: SequenceId,
    valid_from: u32,
    kind: &'static str,
) -> SequenceRow {
    SequenceRow {
        patterns,
        formula,
        valid_from,
        kind,
    }
}

/// The nineteen enumerated classes of 321-avoiding Fishburn permutations.
pub const KNOWN_ROWS: [SequenceRow; 19] = {
    use SequenceId::*;
    [
        row("321,1243", QuadA, 2, "theorem"),
        row("321,2134", QuadA, 2, "theorem"),
        row("321,1324", QuadB, 3, "theorem"),
        row("321,1423,2143", BinomPlus1, 0, "theorem"),
        row("321,3142,2143", BinomPlus1, 0, "theorem"),
        row("321,2143,3124", BinomPlus1, 0, "theorem"),
        row("321,2143,4123", BinomPlus1, 0, "theorem"),
        row("321,1423,3124", FibPlus2, 4, "theorem"),
        row("321,1423,4123", FibNextMinus1, 1, "theorem"),
        row("321,3124,4123", FibNextMinus1, 1, "theorem"),
        row("321,14253", PowMinusBinom, 1, "theorem"),
        row("321,21354", PowMinusBinom, 1, "theorem"),
        row("321,31452", PellQ, 1, "theorem"),
        row("321,31524", PellQ, 1, "theorem"),
        row("321,41523", PellQ, 1, "theorem"),
        row("321,132", Linear, 1, "lemma"),
        row("321,213", Linear, 1, "lemma"),
        row("321,312", Fib, 1, "lemma"),
        row("321,3142", Pow, 1, "lemma"),
    ]
};

/// Evaluates the row's closed form; `n` must lie in the stated range.
pub fn eval_row<T: ExactInt>(row: &SequenceRow, n: u32) -> Result<T> {
    if n < row.valid_from {
        return Err(Error::BelowRange {
            row: row.id().to_string(),
            n,
            valid_from: row.valid_from,
        });
    }
    row.formula.eval(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn find(patterns: &str) -> SequenceRow {
        *KNOWN_ROWS.iter().find(|r| r.patterns == patterns).unwrap()
    }

    #[test]
    fn fibonacci_uses_the_shifted_convention() {
        assert_eq!(fibonacci::<u64>(0).unwrap(), 1);
        assert_eq!(fibonacci::<u64>(1).unwrap(), 1);
        assert_eq!(fibonacci::<u64>(5).unwrap(), 8);
        assert_eq!(fibonacci::<u64>(10).unwrap(), 89);
    }

    #[test]
    fn pell_and_q() {
        assert_eq!(pell::<u64>(0).unwrap(), 0);
        assert_eq!(pell::<u64>(2).unwrap(), 2);
        assert_eq!(pell::<u64>(5).unwrap(), 29);
        assert_eq!(q_value::<u64>(0).unwrap(), 1);
        assert_eq!(q_value::<u64>(1).unwrap(), 1);
        assert_eq!(q_value::<u64>(5).unwrap(), 21);
    }

    #[test]
    fn q_is_integral_through_40() {
        for n in 1..=40 {
            let q: i128 = q_value(n).unwrap();
            let p: i128 = pell(n).unwrap();
            let prev: i128 = pell(n - 1).unwrap();
            assert_eq!(2 * q - 1, p + prev, "n = {n}");
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            fibonacci::<u8>(20),
            Err(Error::Overflow("Fibonacci number"))
        );
        assert!(pell::<u64>(60).is_err());
        assert!(pell::<i128>(60).is_ok());
        assert_eq!(
            pell::<BigInt>(60).unwrap().to_string(),
            "32733777552734744709300"
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial::<u64>(5, 2).unwrap(), 10);
        assert_eq!(binomial::<u64>(2, 5).unwrap(), 0);
        assert_eq!(binomial::<u64>(0, 0).unwrap(), 1);
        assert_eq!(binomial::<u64>(40, 20).unwrap(), 137_846_528_820);
    }

    #[test]
    fn eval_row_examples() {
        assert_eq!(eval_row::<u64>(&find("321,1243"), 4).unwrap(), 8);
        assert_eq!(eval_row::<u64>(&find("321,14253"), 1).unwrap(), 1);
        assert_eq!(eval_row::<u64>(&find("321,1324"), 3).unwrap(), 4);
        assert_eq!(eval_row::<u64>(&find("321,1423,2143"), 0).unwrap(), 1);
        assert!(matches!(
            eval_row::<u64>(&find("321,1423,3124"), 3),
            Err(Error::BelowRange { valid_from: 4, .. })
        ));
    }

    #[test]
    fn signed_scalars_evaluate_below_zero() {
        assert_eq!(SequenceId::TwiceMinus4.eval::<i64>(1).unwrap(), -2);
        assert!(SequenceId::TwiceMinus4.eval::<u64>(1).is_err());
        assert!(matches!(
            SequenceId::FibPrev2Plus2.eval::<i64>(1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn scalars_agree() {
        for id in KNOWN_ROWS.iter().map(|r| r.formula) {
            for n in 1..=30 {
                let a = id.eval::<u64>(n).unwrap();
                let b = id.eval::<i128>(n).unwrap();
                let c = id.eval::<BigInt>(n).unwrap();
                assert_eq!(i128::from(a), b);
                assert_eq!(BigInt::from(b), c);
            }
        }
    }
}
