use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(2j-1)!! = 1·3·5···(2j-1)`, the number of perfect matchings of a
/// `2j`-element set. Equals 1 for `j = 0`.
pub fn odd_double_factorial(j: u64) -> BigUint {
    (1..=j).fold(BigUint::one(), |acc, i| acc * (2 * i - 1))
}

/// `log2(x)` for `x > 0`, accurate to about 1e-15 relative.
pub fn log2_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().expect("fits").to_f64().expect("finite").log2();
    }
    // keep the top 64 bits
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits");
    (top as f64).log2() + shift as f64
}
