//! Prime factorizations, permutation witnesses between them and product splitting.

use std::fmt;

use crate::error::{ArithError, Result};
use crate::gcd::pos_divides;
use crate::numerals::{BinPos, PosSeq};
use crate::primes::{least_factor, prime_index_in_product};

pub use crate::primes::prod_seq;

/// Primes whose product is the factored number; empty for `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub primes: Vec<BinPos>,
}

impl Factorization {
    pub fn count(&self) -> usize {
        self.primes.len()
    }

    pub fn product(&self) -> BinPos {
        self.primes.iter().fold(BinPos::one(), |acc, q| acc.mul(q))
    }

    pub fn to_seq(&self) -> PosSeq {
        PosSeq::from_vec(self.primes.clone())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.primes.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Iterated least factor; factors come out non-decreasing.
pub fn factorize(p: &BinPos) -> Factorization {
    let mut primes = Vec::new();
    let mut rest = p.clone();
    while !rest.is_one() {
        let q = least_factor(&rest);
        rest = crate::gcd::floor_div(&rest, &q).expect("factor does not exceed its multiple");
        primes.push(q);
    }
    Factorization { primes }
}

/// `n ↔ m`, identity elsewhere.
pub fn transp(n: usize, m: usize, i: usize) -> usize {
    if i == n {
        m
    } else if i == m {
        n
    } else {
        i
    }
}

/// Mutually inverse index maps, both the identity from `bound` on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermWitness {
    pub bound: usize,
    pub fwd: Vec<usize>,
    pub inv: Vec<usize>,
}

impl PermWitness {
    pub fn identity(bound: usize) -> Self {
        PermWitness { bound, fwd: (0..bound).collect(), inv: (0..bound).collect() }
    }

    pub fn apply(&self, i: usize) -> usize {
        apply_table(&self.fwd, i)
    }

    pub fn apply_inv(&self, i: usize) -> usize {
        apply_table(&self.inv, i)
    }
}

fn apply_table(t: &[usize], i: usize) -> usize {
    t.get(i).copied().unwrap_or(i)
}

pub fn apply_perm(w: &PermWitness, i: usize) -> usize {
    w.apply(i)
}

/// Both inverse laws and identity beyond the bound, checked on `[0, bound + 8)`.
pub fn verify_perm_witness(w: &PermWitness) -> bool {
    if w.fwd.len() != w.bound || w.inv.len() != w.bound {
        return false;
    }
    (0..w.bound + 8).all(|i| {
        w.apply_inv(w.apply(i)) == i
            && w.apply(w.apply_inv(i)) == i
            && (i < w.bound || (w.apply(i) == i && w.apply_inv(i) == i))
    })
}

/// Permutation matching two factorizations: `ps(fwd i) = qs(i)` for `i < n`.
///
/// Works from the last `qs` entry down. When it divides the product of the
/// remaining `ps` prefix, the first prefix it divides locates an entry that
/// is transposed to the end; otherwise the last `ps` entry is kept. Inputs
/// that are not matching prime factorizations still run through the same
/// steps.
pub fn gen_pms(n: usize, m: usize, ps: &PosSeq, qs: &PosSeq) -> (usize, PermWitness) {
    let mut cur = ps.prefix(n);
    let mut swaps = Vec::new();
    let mut mm = m;
    for k in (1..=n).rev() {
        if mm == 0 {
            break;
        }
        let q = qs.get(mm - 1);
        let head = PosSeq::from_vec(cur[..k - 1].to_vec());
        let rest: BinPos = prod_seq(&head, k - 1);
        if pos_divides(q, &rest) {
            let l = prime_index_in_product(q, &head, k - 1).expect("divides the prefix product");
            cur.swap(l, k - 1);
            swaps.push((l, k - 1));
        }
        mm -= 1;
    }
    // The outermost transposition was recorded first.
    let mut fwd: Vec<usize> = (0..n).collect();
    let mut inv: Vec<usize> = (0..n).collect();
    for &(l, top) in swaps.iter().rev() {
        for v in fwd.iter_mut() {
            *v = transp(l, top, *v);
        }
        inv.swap(l, top);
    }
    (n, PermWitness { bound: n, fwd, inv })
}

/// `(r0, r1, r2, r3)` with `p0 = r0·r1`, `p1 = r2·r3`, `q0 = r0·r2`, `q1 = r1·r3`.
pub fn prod_split(
    p0: &BinPos,
    p1: &BinPos,
    q0: &BinPos,
    q1: &BinPos,
) -> Result<(BinPos, BinPos, BinPos, BinPos)> {
    if p0.mul(p1) != q0.mul(q1) {
        return Err(ArithError::Precondition(format!(
            "{p0}·{p1} differs from {q0}·{q1}"
        )));
    }
    let [fp0, fp1, fq0, fq1] = std::thread::scope(|s| {
        [p0, p1, q0, q1]
            .map(|x| s.spawn(move || factorize(x)))
            .map(|h| h.join().expect("factorization thread"))
    });
    let m0 = fp0.count();
    let n0 = fq0.count();
    let ps: Vec<BinPos> = fp0.primes.into_iter().chain(fp1.primes).collect();
    let qs: Vec<BinPos> = fq0.primes.into_iter().chain(fq1.primes).collect();
    let total = ps.len();
    let (_, w) = gen_pms(total, qs.len(), &PosSeq::from_vec(ps.clone()), &PosSeq::from_vec(qs));
    let one = BinPos::one();
    let rs0: Vec<&BinPos> = (0..total).map(|i| if w.apply_inv(i) < n0 { &ps[i] } else { &one }).collect();
    let rs1: Vec<&BinPos> = (0..total).map(|i| if w.apply_inv(i) >= n0 { &ps[i] } else { &one }).collect();
    let prod = |xs: &[&BinPos]| xs.iter().fold(BinPos::one(), |acc, x| acc.mul(x));
    Ok((
        prod(&rs0[..m0]),
        prod(&rs1[..m0]),
        prod(&rs0[m0..]),
        prod(&rs1[m0..]),
    ))
}
