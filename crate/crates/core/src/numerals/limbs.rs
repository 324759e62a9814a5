//! Raw little-endian `u64` limb arithmetic backing [`BinPos`](super::BinPos).
//!
//! Every function here works on plain slices. Callers are responsible for
//! keeping the canonical form (no most-significant zero limbs) on the values
//! they store.

use std::cmp::Ordering;

const KARATSUBA_THRESHOLD: usize = 32;

pub(crate) fn normalize(v: &mut Vec<u64>) {
    while let Some(&0) = v.last() {
        v.pop();
    }
}

fn trimmed(v: &[u64]) -> &[u64] {
    let mut n = v.len();
    while n > 0 && v[n - 1] == 0 {
        n -= 1;
    }
    &v[..n]
}

pub(crate) fn cmp(a: &[u64], b: &[u64]) -> Ordering {
    let (a, b) = (trimmed(a), trimmed(b));
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

pub(crate) fn bit_len(a: &[u64]) -> u64 {
    let a = trimmed(a);
    match a.last() {
        None => 0,
        Some(&top) => (a.len() as u64 - 1) * 64 + (64 - top.leading_zeros() as u64),
    }
}

pub(crate) fn add(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    add_at(&mut out, 0, short);
    out
}

/// `acc[offset..] += v`, growing `acc` if the carry runs off the end.
pub(crate) fn add_at(acc: &mut Vec<u64>, offset: usize, v: &[u64]) {
    let v = trimmed(v);
    if acc.len() < offset + v.len() {
        acc.resize(offset + v.len(), 0);
    }
    let mut carry = false;
    for (i, &x) in v.iter().enumerate() {
        let (s, c1) = acc[offset + i].overflowing_add(x);
        let (s, c2) = s.overflowing_add(carry as u64);
        acc[offset + i] = s;
        carry = c1 || c2;
    }
    let mut i = offset + v.len();
    while carry {
        if i == acc.len() {
            acc.push(1);
            return;
        }
        let (s, c) = acc[i].overflowing_add(1);
        acc[i] = s;
        carry = c;
        i += 1;
    }
}

/// Fixed-width variant of [`add_at`]; the sum must fit in `acc`.
fn add_into(acc: &mut [u64], v: &[u64]) {
    let v = trimmed(v);
    let mut carry = false;
    for (i, &x) in v.iter().enumerate() {
        let (s, c1) = acc[i].overflowing_add(x);
        let (s, c2) = s.overflowing_add(carry as u64);
        acc[i] = s;
        carry = c1 || c2;
    }
    let mut i = v.len();
    while carry {
        let (s, c) = acc[i].overflowing_add(1);
        acc[i] = s;
        carry = c;
        i += 1;
    }
}

/// `a -= b`; requires `a >= b`. The result is normalized.
pub(crate) fn sub_assign(a: &mut Vec<u64>, b: &[u64]) {
    debug_assert!(cmp(a, b) != Ordering::Less);
    let b = trimmed(b);
    let mut borrow = false;
    for (i, &y) in b.iter().enumerate() {
        let (d, b1) = a[i].overflowing_sub(y);
        let (d, b2) = d.overflowing_sub(borrow as u64);
        a[i] = d;
        borrow = b1 || b2;
    }
    let mut i = b.len();
    while borrow {
        let (d, b1) = a[i].overflowing_sub(1);
        a[i] = d;
        borrow = b1;
        i += 1;
    }
    normalize(a);
}

pub(crate) fn shl(a: &[u64], bits: u64) -> Vec<u64> {
    let a = trimmed(a);
    if a.is_empty() {
        return Vec::new();
    }
    let words = (bits / 64) as usize;
    let rem = (bits % 64) as u32;
    let mut out = vec![0u64; words];
    if rem == 0 {
        out.extend_from_slice(a);
    } else {
        let mut carry = 0u64;
        for &x in a {
            out.push((x << rem) | carry);
            carry = x >> (64 - rem);
        }
        if carry != 0 {
            out.push(carry);
        }
    }
    out
}

pub(crate) fn shr(a: &[u64], bits: u64) -> Vec<u64> {
    let words = (bits / 64) as usize;
    if words >= a.len() {
        return Vec::new();
    }
    let rem = (bits % 64) as u32;
    let src = &a[words..];
    let mut out = Vec::with_capacity(src.len());
    if rem == 0 {
        out.extend_from_slice(src);
    } else {
        for i in 0..src.len() {
            let hi = src.get(i + 1).map_or(0, |&h| h << (64 - rem));
            out.push((src[i] >> rem) | hi);
        }
    }
    normalize(&mut out);
    out
}

/// In-place `a >>= bits`.
pub(crate) fn shr_assign(a: &mut Vec<u64>, bits: u64) {
    let words = (bits / 64) as usize;
    if words >= a.len() {
        a.clear();
        return;
    }
    a.drain(..words);
    let rem = (bits % 64) as u32;
    if rem != 0 {
        let n = a.len();
        for i in 0..n {
            let hi = if i + 1 < n { a[i + 1] << (64 - rem) } else { 0 };
            a[i] = (a[i] >> rem) | hi;
        }
    }
    normalize(a);
}

pub(crate) fn trailing_zeros(a: &[u64]) -> u64 {
    let mut n = 0;
    for &l in a {
        if l == 0 {
            n += 64;
        } else {
            return n + u64::from(l.trailing_zeros());
        }
    }
    n
}

/// In-place `a >>= 1`.
pub(crate) fn shr1_assign(a: &mut Vec<u64>) {
    let n = a.len();
    for i in 0..n {
        let hi = if i + 1 < n { a[i + 1] << 63 } else { 0 };
        a[i] = (a[i] >> 1) | hi;
    }
    normalize(a);
}

/// In-place `a = a * m + c`.
pub(crate) fn mul_small_add(a: &mut Vec<u64>, m: u64, c: u64) {
    let mut carry = c as u128;
    for x in a.iter_mut() {
        let t = (*x as u128) * (m as u128) + carry;
        *x = t as u64;
        carry = t >> 64;
    }
    if carry != 0 {
        a.push(carry as u64);
    }
}

/// In-place `a /= d`, returning the remainder.
pub(crate) fn divrem_small(a: &mut Vec<u64>, d: u64) -> u64 {
    let mut rem: u128 = 0;
    for x in a.iter_mut().rev() {
        let cur = (rem << 64) | (*x as u128);
        *x = (cur / d as u128) as u64;
        rem = cur % d as u128;
    }
    normalize(a);
    rem as u64
}

pub(crate) fn mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (a, b) = (trimmed(a), trimmed(b));
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len()];
    mul_acc(&mut out, a, b);
    normalize(&mut out);
    out
}

/// `out += a * b`; `out` must be wide enough to hold the running sum.
fn mul_acc(out: &mut [u64], a: &[u64], b: &[u64]) {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if short.is_empty() {
        return;
    }
    if short.len() < KARATSUBA_THRESHOLD {
        schoolbook_acc(out, long, short);
    } else if long.len() >= 2 * short.len() {
        for (k, chunk) in long.chunks(short.len()).enumerate() {
            let off = k * short.len();
            mul_acc(&mut out[off..], chunk, short);
        }
    } else {
        karatsuba_acc(out, long, short);
    }
}

fn schoolbook_acc(out: &mut [u64], a: &[u64], b: &[u64]) {
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let mut carry: u128 = 0;
        for (j, &y) in b.iter().enumerate() {
            let t = out[i + j] as u128 + (x as u128) * (y as u128) + carry;
            out[i + j] = t as u64;
            carry = t >> 64;
        }
        let mut k = i + b.len();
        while carry != 0 {
            let t = out[k] as u128 + carry;
            out[k] = t as u64;
            carry = t >> 64;
            k += 1;
        }
    }
}

fn karatsuba_acc(out: &mut [u64], a: &[u64], b: &[u64]) {
    let m = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(m);
    let (b0, b1) = b.split_at(m);
    let z0 = mul(a0, b0);
    let z2 = mul(a1, b1);
    let mut z1 = mul(&add(a0, a1), &add(b0, b1));
    sub_assign(&mut z1, &z0);
    sub_assign(&mut z1, &z2);
    add_into(out, &z0);
    add_into(&mut out[m..], &z1);
    add_into(&mut out[2 * m..], &z2);
}
