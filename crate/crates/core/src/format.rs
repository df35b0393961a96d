//! Fixed significant-digit decimal formatting shared by the JSON, CSV and SVG
//! writers.

/// Format `v` with exactly `digits` significant digits.
///
/// Positional notation for decimal exponents in `[-5, digits)`, scientific
/// (`1.25e-7`) otherwise. Negative zero prints as zero. Both forms are valid
/// JSON numbers and SVG path numbers.
pub fn sig(v: f64, digits: usize) -> String {
    debug_assert!(digits >= 1);
    let v = if v == 0.0 { 0.0 } else { v };
    let sci = format!("{:.*e}", digits - 1, v);
    if v == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    let exp: i32 = sci[sci.find('e').expect("exponent marker") + 1..]
        .parse()
        .expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        return sci;
    }
    let decimals = (digits as i32 - 1 - exp) as usize;
    format!("{v:.decimals$}")
}

/// 17 significant digits: enough to round-trip any `f64`.
pub fn sig17(v: f64) -> String {
    sig(v, 17)
}
