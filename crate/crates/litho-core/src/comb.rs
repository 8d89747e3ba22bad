//! Exact integer combinatorics, bounded by the photon cutoff.

use crate::error::Error;

/// Largest photon number for which factorials and binomials are computed
/// exactly in integer arithmetic (20! still fits in a u64).
pub const MAX_EXACT_PHOTONS: u32 = 20;

/// Binomial coefficient n!/((n-k)! k!), exact.
pub fn binomial(n: u32, k: u32) -> Result<u64, Error> {
    if n > MAX_EXACT_PHOTONS {
        return Err(Error::PhotonCutoff(n));
    }
    if k > n {
        return Err(Error::SplitOutOfRange { photons: n, split: k });
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k as u64 {
        // C(n, i+1) = C(n, i) * (n - i) / (i + 1); the division is exact
        acc = acc * (n as u64 - i) / (i + 1);
    }
    Ok(acc)
}

/// Exact factorial, limited to the photon cutoff.
pub fn factorial(n: u32) -> Result<u64, Error> {
    if n > MAX_EXACT_PHOTONS {
        return Err(Error::PhotonCutoff(n));
    }
    Ok((1..=n as u64).product())
}

/// One row of Pascal's triangle as floats: C(q, 0) ..= C(q, q).
pub(crate) fn binomial_row(q: u32) -> Result<Vec<f64>, Error> {
    (0..=q).map(|j| binomial(q, j).map(|c| c as f64)).collect()
}

/// sqrt(n (n-1) ... (n-k+1)), the ladder prefactor for k annihilations
/// acting on an occupation-n mode. Accumulated in f64 so occupations above
/// the exact cutoff degrade gracefully instead of overflowing.
pub(crate) fn falling_factorial_sqrt(n: u32, k: u32) -> f64 {
    debug_assert!(k <= n);
    let mut acc = 1.0_f64;
    for i in 0..k {
        acc *= (n - i) as f64;
    }
    acc.sqrt()
}
