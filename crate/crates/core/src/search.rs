//! Node budgets for exact searches and small combinatorial helpers.

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Node limit for one exact search or count. Exceeding it is an error,
/// never a silent downgrade to sampling.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub limit: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            limit: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    pub fn tracker(&self) -> Tracker {
        Tracker {
            used: 0,
            limit: self.limit,
        }
    }
}

#[derive(Debug)]
pub struct Tracker {
    used: u64,
    limit: u64,
}

impl Tracker {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Budget {
                explored: self.used,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn tick_by(&mut self, amount: u64) -> Result<()> {
        self.used += amount;
        if self.used > self.limit {
            Err(Error::Budget {
                explored: self.used,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Visit every strictly increasing `k`-tuple over `0..n` in lexicographic
/// order. The callback may stop the scan early by returning `false`.
pub fn for_each_subset<F>(n: u32, k: u32, mut f: F) -> Result<()>
where
    F: FnMut(&[u32]) -> Result<bool>,
{
    if k > n {
        return Ok(());
    }
    let k = k as usize;
    let mut tuple: Vec<u32> = (0..k as u32).collect();
    loop {
        if !f(&tuple)? {
            return Ok(());
        }
        // advance to the next subset in lex order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if tuple[i] < n - (k - i) as u32 {
                tuple[i] += 1;
                for j in i + 1..k {
                    tuple[j] = tuple[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All strictly increasing `k`-tuples drawn from a sorted pool of values.
pub fn for_each_subset_of<F>(pool: &[u32], k: usize, mut f: F) -> Result<()>
where
    F: FnMut(&[u32]) -> Result<bool>,
{
    if k > pool.len() {
        return Ok(());
    }
    let mut scratch = vec![0u32; k];
    for_each_subset(pool.len() as u32, k as u32, |idx| {
        for (slot, &i) in scratch.iter_mut().zip(idx) {
            *slot = pool[i as usize];
        }
        f(&scratch)
    })
}
