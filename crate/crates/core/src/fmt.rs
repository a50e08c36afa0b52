//! Significant-digit formatting for reports.

/// Rounds `x` to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 || digits == 0 {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

/// `x` rounded to `digits` significant digits, printed without trailing
/// zeros.
pub fn sig(x: f64, digits: usize) -> String {
    format!("{}", round_sig(x, digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounds() {
        assert_eq!(sig(0.20543690356312, 6), "0.205437");
        assert_eq!(sig(1.0, 9), "1");
        assert_eq!(sig(12345.678, 3), "12300");
        assert_eq!(round_sig(-2.5e-7 - 1e-12, 2), -2.5e-7);
        assert_eq!(sig(0.0, 4), "0");
    }
}
