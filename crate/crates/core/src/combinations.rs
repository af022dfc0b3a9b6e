//! Revolving-door enumeration of fixed-size subsets.
//!
//! Consecutive subsets differ by exactly one element leaving and one element
//! entering, so anything maintained as an XOR over the members (a syndrome,
//! an error pattern) is updated with two XORs per step. The order is the
//! classical revolving-door sequence (Knuth, TAOCP 7.2.1.3, Algorithm R).

/// Iterator state over the `t`-subsets of `{0, .., n-1}`.
///
/// The first subset is `{0, .., t-1}`; [`advance`](Self::advance) moves to the
/// next one and reports the swap.
#[derive(Clone, Debug)]
pub struct RevolvingDoor {
    n: usize,
    t: usize,
    // c[1..=t] ascending, c[t+1] = n sentinel; c[0] unused
    c: Vec<usize>,
    done: bool,
}

impl RevolvingDoor {
    /// Panics if `t > n`.
    pub fn new(n: usize, t: usize) -> Self {
        assert!(t <= n, "cannot choose {t} of {n}");
        let mut c = Vec::with_capacity(t + 2);
        c.push(0);
        c.extend(0..t);
        c.push(n);
        Self { n, t, c, done: false }
    }

    /// Members of the current subset, ascending.
    pub fn current(&self) -> &[usize] {
        &self.c[1..=self.t]
    }

    /// Bit mask of the current subset (requires `n <= 64`).
    pub fn mask(&self) -> u64 {
        self.current().iter().fold(0, |m, &i| m | 1 << i)
    }

    /// Steps to the next subset, returning `(removed, added)`, or `None`
    /// once every subset has been visited.
    #[inline]
    pub fn advance(&mut self) -> Option<(usize, usize)> {
        if self.done {
            return None;
        }
        let t = self.t;
        let c = &mut self.c;
        if t == 0 || t == self.n {
            self.done = true;
            return None;
        }
        if t == 1 {
            if c[1] + 1 < self.n {
                c[1] += 1;
                return Some((c[1] - 1, c[1]));
            }
            self.done = true;
            return None;
        }
        let mut j = 2;
        let mut try_decrease = if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                return Some((c[1] - 1, c[1]));
            }
            true
        } else {
            if c[1] > 0 {
                c[1] -= 1;
                return Some((c[1] + 1, c[1]));
            }
            false
        };
        loop {
            if try_decrease {
                // c[j] == c[j-1] + 1
                if c[j] >= j {
                    let out = c[j];
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    return Some((out, j - 2));
                }
                j += 1;
                if j > t {
                    break;
                }
            }
            // c[j-1] == j - 2
            if c[j] + 1 < c[j + 1] {
                let out = c[j - 1];
                c[j - 1] = c[j];
                c[j] += 1;
                return Some((out, c[j]));
            }
            j += 1;
            if j > t {
                break;
            }
            try_decrease = true;
        }
        self.done = true;
        None
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// `Σ_{w=0}^{t} C(n, w)`, saturating.
pub fn ball_size(n: usize, t: usize) -> u128 {
    (0..=t.min(n)).fold(0u128, |acc, w| acc.saturating_add(binomial(n, w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn visits_every_subset_once_with_single_swaps() {
        for n in 0..=12 {
            for t in 0..=n {
                let mut rd = RevolvingDoor::new(n, t);
                let mut seen = HashSet::new();
                let mut mask = rd.mask();
                assert_eq!(mask, (1u64 << t) - 1);
                seen.insert(mask);
                while let Some((out, inn)) = rd.advance() {
                    assert!(mask >> out & 1 == 1, "n={n} t={t}: removed {out} not present");
                    assert!(mask >> inn & 1 == 0, "n={n} t={t}: added {inn} already present");
                    mask ^= 1 << out | 1 << inn;
                    assert_eq!(mask, rd.mask());
                    assert!(seen.insert(mask), "n={n} t={t}: repeated subset");
                }
                assert_eq!(seen.len() as u128, binomial(n, t), "n={n} t={t}");
                assert!(rd.advance().is_none());
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(31, 11), 84_672_315);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(ball_size(7, 1), 8);
        assert_eq!(ball_size(23, 3), 2048);
    }
}
