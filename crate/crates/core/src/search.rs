//! Bounded quantifiers, the bounded least-number operator and the monotone maximum.

use crate::numerals::{BinPos, Head, UnaryNat};

/// `∃ i < n. ws(i)`, probing from `n - 1` downward.
pub fn exb_nat(n: UnaryNat, mut ws: impl FnMut(UnaryNat) -> bool) -> bool {
    (0..n.0).rev().any(|i| ws(UnaryNat(i)))
}

/// `∃ q ≤ p. wf(q)`, following the `1` / `S0` / `S1` case split.
pub fn exb_pos(p: &BinPos, mut wf: impl FnMut(&BinPos) -> bool) -> bool {
    exb_pos_from(p, None, &mut wf)
}

// Searches `off + q` for `1 ≤ q ≤ p`; `off = None` stands for no shift.
fn exb_pos_from(p: &BinPos, off: Option<&BinPos>, wf: &mut dyn FnMut(&BinPos) -> bool) -> bool {
    let shifted = |q: &BinPos| match off {
        Some(o) => o.add(q),
        None => q.clone(),
    };
    match p.head() {
        Head::One => wf(&shifted(p)),
        Head::S0 => {
            let half = p.tail().expect("S0 has a tail");
            if exb_pos_from(&half, off, wf) {
                return true;
            }
            let next = shifted(&half);
            exb_pos_from(&half, Some(&next), wf)
        }
        Head::S1 => {
            if wf(&shifted(p)) {
                return true;
            }
            let below = p.tail().expect("S1 has a tail").s0();
            exb_pos_from(&below, off, wf)
        }
    }
}

/// Least `i < n` with `ws(i)`, or `n` if there is none.
pub fn nat_least(n: UnaryNat, mut ws: impl FnMut(UnaryNat) -> bool) -> UnaryNat {
    (0..n.0).map(UnaryNat).find(|&i| ws(i)).unwrap_or(n)
}

/// Least `i` in `[m, n)` with `ws(i)`, or `n`; `0` when `m > n`.
pub fn nat_least_up(m: UnaryNat, n: UnaryNat, mut ws: impl FnMut(UnaryNat) -> bool) -> UnaryNat {
    if m > n {
        return UnaryNat::ZERO;
    }
    nat_least(n.monus(m), |i| ws(i + m)) + m
}

/// Greatest `p` with `wf(p)`, by bisection with exactly `n` probes.
///
/// Expects `wf(1)`, `¬wf(2^n)` and `wf` antitone. Otherwise the result is
/// some unspecified numeral.
pub fn pos_mon_max(mut wf: impl FnMut(&BinPos) -> bool, n: UnaryNat) -> BinPos {
    let mut acc = BinPos::one();
    for k in (0..n.0).rev() {
        let cand = if acc.is_one() {
            BinPos::pow2(k)
        } else {
            acc.add(&BinPos::pow2(k))
        };
        if wf(&cand) {
            acc = cand;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: u64) -> BinPos {
        BinPos::try_from(v).unwrap()
    }

    #[test]
    fn exb_nat_examples() {
        assert!(!exb_nat(UnaryNat(0), |_| true));
        assert!(!exb_nat(UnaryNat(3), |_| false));
        assert!(exb_nat(UnaryNat(5), |i| i.0 == 3));
    }

    #[test]
    fn exb_pos_examples() {
        assert!(exb_pos(&p(1), |q| q.is_one()));
        assert!(!exb_pos(&p(1), |q| !q.is_one()));
        assert!(!exb_pos(&p(7), |_| false));
        assert!(exb_pos(&p(12), |q| *q == p(9)));
        assert!(!exb_pos(&p(8), |q| *q == p(9)));
    }

    #[test]
    fn exb_pos_visits_exactly_one_to_p() {
        for bound in 1..=200u64 {
            let mut seen = Vec::new();
            exb_pos(&p(bound), |q| {
                seen.push(q.to_u64().unwrap());
                false
            });
            seen.sort_unstable();
            assert_eq!(seen, (1..=bound).collect::<Vec<_>>(), "bound {bound}");
        }
    }

    #[test]
    fn nat_least_examples() {
        assert_eq!(nat_least(UnaryNat(0), |_| true), UnaryNat(0));
        assert_eq!(nat_least(UnaryNat(5), |i| i.0 >= 2), UnaryNat(2));
        assert_eq!(nat_least_up(UnaryNat(3), UnaryNat(7), |_| false), UnaryNat(7));
        assert_eq!(nat_least_up(UnaryNat(3), UnaryNat(7), |i| i.0 % 5 == 0), UnaryNat(5));
        assert_eq!(nat_least_up(UnaryNat(8), UnaryNat(7), |_| true), UnaryNat(0));
    }

    #[test]
    fn pos_mon_max_examples() {
        assert_eq!(pos_mon_max(|q| q.is_one(), UnaryNat(1)), p(1));
        assert_eq!(pos_mon_max(|q| q.square() <= p(9), UnaryNat(2)), p(3));
        assert_eq!(pos_mon_max(|q| *q <= p(5), UnaryNat(3)), p(5));
    }

    #[test]
    fn pos_mon_max_matches_linear_scan_on_thresholds() {
        for n in 1..=12u64 {
            for t in 1..(1u64 << n) {
                let mut probes = 0;
                let got = pos_mon_max(
                    |q| {
                        probes += 1;
                        q.to_u64().unwrap() <= t
                    },
                    UnaryNat(n),
                );
                let scan = (1..(1u64 << n)).rev().find(|&q| q <= t).unwrap();
                assert_eq!(got, p(scan));
                assert_eq!(probes, n);
            }
        }
    }

    proptest! {
        #[test]
        fn exb_iff_least_below_bound(n in 0u64..=64, mask in any::<u64>()) {
            let ws = |i: UnaryNat| mask >> (i.0 % 64) & 1 == 1;
            prop_assert_eq!(exb_nat(UnaryNat(n), ws), nat_least(UnaryNat(n), ws) < UnaryNat(n));
        }

        #[test]
        fn least_satisfies_when_witness_exists(n in 0u64..=64, m in 0u64..=64, mask in any::<u64>()) {
            let ws = |i: UnaryNat| mask >> (i.0 % 64) & 1 == 1;
            if ws(UnaryNat(m)) && m <= n {
                prop_assert!(ws(nat_least(UnaryNat(n), ws)));
            }
            let l = nat_least(UnaryNat(n), ws);
            prop_assert!(l <= UnaryNat(n));
            for i in 0..l.0 {
                prop_assert!(!ws(UnaryNat(i)));
            }
        }
    }
}
