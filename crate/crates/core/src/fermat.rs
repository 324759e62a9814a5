//! Fermat's difference-of-squares factorization.

use std::fmt;

use crate::error::{ArithError, Result};
use crate::isqrt::fast_sqrt;
use crate::numerals::BinPos;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FermatOutcome {
    Prime,
    /// Two factors above one whose product is the input.
    Factors(BinPos, BinPos),
}

impl fmt::Display for FermatOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FermatOutcome::Prime => f.write_str("prime"),
            FermatOutcome::Factors(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

/// Splits `p > 1` or declares it prime.
pub fn fermat_factor(p: &BinPos) -> Result<FermatOutcome> {
    fermat_factor_counted(p).map(|(out, _)| out)
}

/// As [`fermat_factor`], also returning how many values of `l` were examined.
pub fn fermat_factor_counted(p: &BinPos) -> Result<(FermatOutcome, u64)> {
    if p.is_one() {
        return Err(ArithError::Precondition("Fermat factorization needs an input above 1".into()));
    }
    let two = BinPos::pow2(1);
    if p.is_even() {
        if *p == two {
            return Ok((FermatOutcome::Prime, 0));
        }
        return Ok((FermatOutcome::Factors(two, p.tail().expect("even")), 0));
    }
    if p.to_u64().is_some_and(|v| v == 3 || v == 5) {
        return Ok((FermatOutcome::Prime, 0));
    }
    let root = fast_sqrt(p);
    if root.square() == *p {
        return Ok((FermatOutcome::Factors(root.clone(), root), 0));
    }
    // Scan root ≤ l < (p-1)/2 for a square l² - p.
    let limit = p.tail().expect("odd above 5");
    let mut l = root;
    let mut iterations = 0;
    while l < limit {
        iterations += 1;
        if let Ok(diff) = l.square().sub_strict(p) {
            // is_square(diff), keeping the root
            let r = fast_sqrt(&diff);
            if r.square() == diff {
                let lo = l.sub_strict(&r).expect("l exceeds r");
                return Ok((FermatOutcome::Factors(l.add(&r), lo), iterations));
            }
        }
        l = l.succ();
    }
    Ok((FermatOutcome::Prime, iterations))
}

/// For odd `p = q0·q1` with distinct factors above one, `(p0, p1)` with `p = p1² - p0²`.
pub fn odd_split_to_squares(p: &BinPos, q0: &BinPos, q1: &BinPos) -> Result<(BinPos, BinPos)> {
    if p.is_even() {
        return Err(ArithError::Precondition(format!("{p} is even")));
    }
    if q0 == q1 {
        return Err(ArithError::Precondition("factors must differ".into()));
    }
    if q0.is_one() || q1.is_one() || q0.mul(q1) != *p {
        return Err(ArithError::Precondition(format!(
            "{q0} and {q1} are not a proper factorization of {p}"
        )));
    }
    let (lo, hi) = if q0 < q1 { (q0, q1) } else { (q1, q0) };
    let p0 = hi.sub_strict(lo).expect("distinct").tail().expect("even difference");
    let p1 = hi.add(lo).tail().expect("even sum");
    Ok((p0, p1))
}
