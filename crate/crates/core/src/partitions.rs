//! Brute-force enumeration of the restricted partitions counted by the
//! generating functions in [`crate::genfun`]. No series arithmetic is used
//! here; this module is ground truth for small `n`.
//!
//! A partition qualifies for profile `k >= 1` when
//!
//! - every part is at most `2k`;
//! - each part `1..k-1` appears two or three times;
//! - the part `k` appears once or twice;
//! - parts in `(k, 2k]` appear any number of times.
//!
//! Its sign is `+1` when the number of parts `<= k` (with multiplicity) is
//! odd and `-1` when even, and `m` is the number of parts in `(k, 2k]`.
//!
//! Two conventions come from the generating function rather than the
//! verbal rules: the part `k` must appear at least once (the numerator
//! carries a mandatory `q^k`), and profile `k = 0` contributes only the empty
//! partition of `0`, with sign `+1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    multiplicities: BTreeMap<u64, u64>,
}

impl Partition {
    pub fn from_parts(parts: &[u64]) -> Self {
        let mut p = Partition::default();
        for &x in parts {
            p.push(x, 1);
        }
        p
    }

    fn push(&mut self, part: u64, count: u64) {
        assert!(part > 0, "parts are positive");
        if count > 0 {
            *self.multiplicities.entry(part).or_default() += count;
        }
    }

    pub fn multiplicity(&self, part: u64) -> u64 {
        self.multiplicities.get(&part).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.multiplicities.iter().map(|(p, m)| p * m).sum()
    }

    pub fn num_parts(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    /// Parts in increasing order, repeated by multiplicity.
    pub fn parts(&self) -> Vec<u64> {
        self.multiplicities
            .iter()
            .flat_map(|(&p, &m)| std::iter::repeat_n(p, m as usize))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qualifying {
    pub partition: Partition,
    /// Parts in `(k, 2k]`, with multiplicity.
    pub m: u64,
    pub sign: i8,
}

/// Multiplicity bounds for profile `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QualifyingProfile {
    pub k: u64,
}

impl QualifyingProfile {
    /// Smallest weight of a qualifying partition: `2(1 + … + (k-1)) + k = k²`.
    pub fn min_weight(&self) -> u64 {
        self.k * self.k
    }

    pub fn admits(&self, p: &Partition) -> bool {
        let k = self.k;
        if k == 0 {
            return p.num_parts() == 0;
        }
        p.multiplicities.iter().all(|(&part, &mult)| match part {
            x if x < k => (2..=3).contains(&mult),
            x if x == k => (1..=2).contains(&mult),
            x => x <= 2 * k,
        }) && (1..k).all(|x| p.multiplicity(x) >= 2)
            && p.multiplicity(k) >= 1
    }

    pub fn m_of(&self, p: &Partition) -> u64 {
        let k = self.k;
        p.multiplicities.range(k + 1..=2 * k).map(|(_, m)| m).sum()
    }

    pub fn sign_of(&self, p: &Partition) -> i8 {
        if self.k == 0 {
            return 1;
        }
        let small: u64 = p.multiplicities.range(..=self.k).map(|(_, m)| m).sum();
        if small % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

/// All qualifying partitions of `n` for profile `k`, in a deterministic
/// order.
pub fn enumerate(k: u64, n: u64) -> Vec<Qualifying> {
    let profile = QualifyingProfile { k };
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Qualifying {
                partition: Partition::default(),
                m: 0,
                sign: 1,
            });
        }
        return out;
    }
    if n < profile.min_weight() {
        return out;
    }

    let mut current = Partition::default();
    small_parts(k, 1, n, &mut current, &mut |p, rest| {
        large_parts(k, k + 1, rest, p, &mut |full| {
            assert!(
                profile.admits(full),
                "enumerated {full:?} violates profile {k}"
            );
            debug_assert_eq!(full.total(), n);
            out.push(Qualifying {
                partition: full.clone(),
                m: profile.m_of(full),
                sign: profile.sign_of(full),
            });
        });
    });
    out
}

// Parts 1..=k with their bounded multiplicities.
fn small_parts(
    k: u64,
    part: u64,
    rest: u64,
    current: &mut Partition,
    emit: &mut dyn FnMut(&mut Partition, u64),
) {
    if part > k {
        emit(current, rest);
        return;
    }
    let range = if part < k { 2..=3 } else { 1..=2 };
    for mult in range {
        let w = part * mult;
        if w > rest {
            break;
        }
        current.push(part, mult);
        small_parts(k, part + 1, rest - w, current, emit);
        pop(current, part, mult);
    }
}

// Parts in (k, 2k], unbounded multiplicity.
fn large_parts(
    k: u64,
    part: u64,
    rest: u64,
    current: &mut Partition,
    emit: &mut dyn FnMut(&Partition),
) {
    if rest == 0 {
        emit(current);
        return;
    }
    if part > 2 * k || part > rest {
        return;
    }
    let mut mult = 0;
    while mult * part <= rest {
        current.push(part, mult);
        large_parts(k, part + 1, rest - mult * part, current, emit);
        pop(current, part, mult);
        mult += 1;
    }
}

fn pop(p: &mut Partition, part: u64, count: u64) {
    if count == 0 {
        return;
    }
    let e = p.multiplicities.get_mut(&part).expect("pushed earlier");
    *e -= count;
    if *e == 0 {
        p.multiplicities.remove(&part);
    }
}

/// Signed count `Ā_{k,m}(n)`.
pub fn abar_count(k: u64, m: u64, n: u64) -> i64 {
    abar_count_in(&enumerate(k, n), m)
}

/// Signed count restricted to `m` over an already enumerated list.
pub fn abar_count_in(found: &[Qualifying], m: u64) -> i64 {
    found
        .iter()
        .filter(|q| q.m == m)
        .map(|q| q.sign as i64)
        .sum()
}

/// Unsigned count `A_{k,m}(n)`.
pub fn a_count(k: u64, m: u64, n: u64) -> u64 {
    enumerate(k, n).iter().filter(|q| q.m == m).count() as u64
}

fn profiles_up_to(n: u64) -> impl Iterator<Item = u64> {
    (0..).take_while(move |k| k * k <= n)
}

/// `B(n) = Σ_{k,m} Ā_{k,m}(n)`.
pub fn b_oracle(n: u64) -> BigInt {
    profiles_up_to(n)
        .flat_map(|k| enumerate(k, n))
        .map(|q| BigInt::from(q.sign))
        .sum()
}

/// `B̄(n) = Σ_{k,m} (-1)^{m+k} Ā_{k,m}(n)`.
pub fn bbar_oracle(n: u64) -> BigInt {
    profiles_up_to(n)
        .flat_map(|k| {
            enumerate(k, n).into_iter().map(move |q| {
                let flip = if (q.m + k) % 2 == 0 { 1 } else { -1 };
                BigInt::from(q.sign * flip)
            })
        })
        .sum()
}
