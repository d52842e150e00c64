use crate::walk::clamped_arccos;

/// Finds `p/q` in lowest terms with `q <= q_max` and `|cos(pi p/q) - lambda| <= tol`,
/// trying the continued-fraction convergents of `arccos(lambda)/pi` in order.
///
/// The comparison is made on the cosine side: near `lambda = +-1` the angle is
/// too ill-conditioned for a fixed tolerance on `theta/pi` to be meaningful.
pub fn rational_angle(lambda: f64, tol: f64, q_max: u64) -> Option<(u64, u64)> {
    let x = clamped_arccos(lambda) / std::f64::consts::PI;
    if !x.is_finite() {
        return None;
    }
    let matches = |p: u64, q: u64| ((std::f64::consts::PI * p as f64 / q as f64).cos() - lambda).abs() <= tol;

    // convergents h_i / k_i
    let (mut h_prev, mut h) = (1u64, x.floor() as u64);
    let (mut k_prev, mut k) = (0u64, 1u64);
    let mut frac = x - x.floor();
    loop {
        if matches(h, k) {
            return Some((h, k));
        }
        if frac < 1e-15 {
            return None;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        let a = a as u64;
        let next_k = a.checked_mul(k)?.checked_add(k_prev)?;
        if next_k > q_max {
            return None;
        }
        let next_h = a.checked_mul(h)?.checked_add(h_prev)?;
        (h_prev, h) = (h, next_h);
        (k_prev, k) = (k, next_k);
    }
}

/// Multiplicative order of `exp(i pi p/q)` for `p/q` in lowest terms.
pub fn root_of_unity_order(p: u64, q: u64) -> u64 {
    if p % 2 == 1 {
        2 * q
    } else {
        q
    }
}
