//! Checked 64-bit helpers. All public operations of the crate funnel their
//! arithmetic through these so that an overflow surfaces as an error value
//! rather than a wrapped integer.

use crate::error::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Product of box side lengths, saturating; used for budget checks before a
/// scan is attempted.
pub(crate) fn box_volume(sides: impl IntoIterator<Item = i64>) -> u128 {
    let mut vol: u128 = 1;
    for s in sides {
        let s = if s < 0 { 0 } else { s as u128 };
        vol = vol.saturating_mul(s);
    }
    vol
}

pub(crate) fn check_budget(required: u128, budget: u64) -> Result<()> {
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Binomial coefficient C(t, j) for arbitrary integer `t` and j >= 0, via the
/// falling factorial t(t-1)...(t-j+1)/j!. In particular C(-1, j) = (-1)^j,
/// which is what makes face-count identities valid at dilate 0.
pub(crate) fn binomial(t: i64, j: u32) -> Result<i64> {
    let mut num: i64 = 1;
    let mut den: i64 = 1;
    for step in 0..j as i64 {
        num = mul(num, sub(t, step)?)?;
        den = mul(den, step + 1)?;
    }
    // The falling factorial of length j is always divisible by j!.
    debug_assert_eq!(num % den, 0);
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(3, 0).unwrap(), 1);
        assert_eq!(binomial(2, 5).unwrap(), 0);
    }

    #[test]
    fn binomial_negative_top() {
        assert_eq!(binomial(-1, 0).unwrap(), 1);
        assert_eq!(binomial(-1, 1).unwrap(), -1);
        assert_eq!(binomial(-1, 2).unwrap(), 1);
        assert_eq!(binomial(-1, 3).unwrap(), -1);
        assert_eq!(binomial(-2, 2).unwrap(), 3);
    }

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(mul(i64::MAX, 2), Err(Error::Overflow));
        assert_eq!(add(i64::MAX, 1), Err(Error::Overflow));
    }
}
