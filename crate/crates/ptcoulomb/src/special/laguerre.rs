use num_complex::Complex64;

/// Coefficients of the associated Laguerre polynomial `L_n^m(z)` in powers
/// of `z`, sign and `1/j!` folded in: `L_n^m(z) = sum_j coeffs[j] z^j`.
///
/// The generalized binomial in each term is accumulated as a running
/// product downward in `j`, which stays finite when `m + j` crosses
/// non-positive integers (the three-gamma form of the binomial does not).
pub fn laguerre_coefficients(n: u32, m: f64) -> Vec<f64> {
    let n = n as usize;
    let mut coeffs = vec![0.0; n + 1];
    // top coefficient (-1)^n / n!
    let mut c = if n % 2 == 0 { 1.0 } else { -1.0 };
    for j in 1..=n {
        c /= j as f64;
    }
    coeffs[n] = c;
    for j in (1..=n).rev() {
        let jf = j as f64;
        c = -c * jf * (m + jf) / (n as f64 - jf + 1.0);
        coeffs[j - 1] = c;
    }
    coeffs
}

/// Associated Laguerre polynomial `L_n^m(z)` for real upper index `m`
/// (negative non-integer values allowed) and complex argument.
pub fn laguerre(n: u32, m: f64, z: Complex64) -> Complex64 {
    eval_laguerre(&laguerre_coefficients(n, m), z)
}

pub(crate) fn eval_laguerre(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(coeffs[coeffs.len() - 1], 0.0);
    for &c in coeffs.iter().rev().skip(1) {
        acc = acc * z + c;
    }
    acc
}
