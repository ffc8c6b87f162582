//! Fixed 12-significant-digit number formatting for reports and CSV.

const SIG: usize = 12;

/// Formats `x` like C's `%.12g`: 12 significant digits, trailing zeros
/// trimmed, scientific notation outside `1e-5 ..= 1e12`. Infinities print
/// as `inf`/`-inf`.
pub fn sig12(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIG - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if exp < -5 || exp >= SIG as i32 {
        let m = trim_zeros(mantissa);
        return format!("{m}e{exp}");
    }
    let decimals = (SIG as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::sig12;

    #[test]
    fn formats() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(std::f64::consts::PI), "3.14159265359");
        assert_eq!(sig12(6.907755278982137), "6.90775527898");
        assert_eq!(sig12(-0.5), "-0.5");
        assert_eq!(sig12(1e6), "1000000");
        assert_eq!(sig12(1.5e-7), "1.5e-7");
        assert_eq!(sig12(2.5e13), "2.5e13");
        assert_eq!(sig12(f64::INFINITY), "inf");
        assert_eq!(sig12(f64::NEG_INFINITY), "-inf");
        assert_eq!(sig12(123456.7890123456), "123456.789012");
    }
}
