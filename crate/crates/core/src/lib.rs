//! Elementary number theory on positive binary numerals: bounded search,
//! square roots, gcd and negative-free Bézout certificates, primes,
//! factorization with permutation witnesses, Fermat's method and a small
//! timing/fitting harness.

pub mod bezout;
pub mod error;
pub mod fermat;
pub mod fta;
pub mod gcd;
pub mod isqrt;
pub mod numerals;
pub mod primes;
pub mod search;
pub mod timing;

pub use error::{ArithError, Result};
pub use numerals::{nat_to_pos, pos_to_nat, BinPos, Head, PosSeq, UnaryNat};
