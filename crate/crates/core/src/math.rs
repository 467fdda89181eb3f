//! Real-valued helpers backed by `libm`, since `core` has no float math.

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// `x log2 x` with the `0 log 0 = 0` convention. Non-positive arguments
/// contribute zero.
pub(crate) fn xlog2x(x: f64) -> f64 {
    if x > 0.0 {
        x * log2(x)
    } else {
        0.0
    }
}

/// `ln Σ exp(x_i)` evaluated after subtracting the maximum.
pub(crate) fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    m + ln(xs.iter().map(|&x| exp(x - m)).sum::<f64>())
}
