//! Subset enumeration helpers for the exact searches.

/// All `k`-subsets of `0..n` as bitmasks, in lexicographic order of the
/// increasing vertex list: {0,1,2}, {0,1,3}, ..., {n-3,n-2,n-1}.  Searching
/// in this order makes "first hit" witnesses lexicographically least.
pub(crate) struct Combinations {
    idx: Vec<usize>,
    n: usize,
    started: bool,
    done: bool,
}

pub(crate) fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        idx: (0..k).collect(),
        n,
        started: false,
        done: k > n,
    }
}

impl Combinations {
    fn mask(&self) -> u64 {
        self.idx.iter().fold(0u64, |m, &i| m | (1 << i))
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.mask());
        }
        let k = self.idx.len();
        if k == 0 {
            self.done = true;
            return None;
        }
        // Rightmost position that can still advance.
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] + 1 <= self.n - (k - i) {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(self.mask())
    }
}
