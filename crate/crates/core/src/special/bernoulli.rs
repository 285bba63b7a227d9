use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact Bernoulli numbers with B_1 = -1/2, from the recurrence
/// sum_{k<=n} C(n+1, k) B_k = 0.
pub fn bernoulli(n: usize) -> BigRational {
    BernoulliCache::new().get(n)
}

/// Thread-safe growing table of Bernoulli numbers.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    table: Mutex<Vec<BigRational>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize) -> BigRational {
        let mut t = self.table.lock().expect("bernoulli table poisoned");
        if t.is_empty() {
            t.push(BigRational::one());
        }
        while t.len() <= n {
            let m = t.len();
            // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (k, b) in t.iter().enumerate() {
                acc += b * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            let b = -acc / BigRational::from_integer(BigInt::from(m + 1));
            t.push(b);
        }
        t[n].clone()
    }
}
