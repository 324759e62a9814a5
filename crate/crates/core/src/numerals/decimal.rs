use super::{limbs, BinPos};
use crate::error::ArithError;

// Largest power of ten below 2^64; digits move in 19-digit chunks.
const CHUNK: u64 = 10_000_000_000_000_000_000;
const CHUNK_DIGITS: usize = 19;

pub(super) fn parse(s: &str) -> Result<BinPos, ArithError> {
    if s.is_empty() {
        return Err(ArithError::Parse("empty numeral".into()));
    }
    if let Some(c) = s.chars().find(|c| !c.is_ascii_digit()) {
        return Err(ArithError::Parse(format!("invalid digit {c:?} in {s:?}")));
    }
    let digits = s.trim_start_matches('0').as_bytes();
    if digits.is_empty() {
        return Err(ArithError::Zero);
    }
    let head = match digits.len() % CHUNK_DIGITS {
        0 => CHUNK_DIGITS,
        r => r,
    };
    let mut acc: Vec<u64> = Vec::with_capacity(digits.len() / CHUNK_DIGITS + 1);
    let mut start = 0;
    let mut width = head;
    while start < digits.len() {
        let chunk = digits[start..start + width]
            .iter()
            .fold(0u64, |v, &d| v * 10 + u64::from(d - b'0'));
        let scale = 10u64.pow(width as u32);
        limbs::mul_small_add(&mut acc, scale, chunk);
        start += width;
        width = CHUNK_DIGITS;
    }
    limbs::normalize(&mut acc);
    Ok(BinPos { limbs: acc })
}

pub(super) fn print(p: &BinPos) -> String {
    let mut v = p.limbs.clone();
    let mut chunks = Vec::new();
    while !v.is_empty() {
        chunks.push(limbs::divrem_small(&mut v, CHUNK));
    }
    let mut out = String::with_capacity(chunks.len() * CHUNK_DIGITS);
    let mut it = chunks.iter().rev();
    if let Some(top) = it.next() {
        out.push_str(&top.to_string());
    }
    for c in it {
        out.push_str(&format!("{c:019}"));
    }
    out
}
