/// Formats with 12 significant digits, trailing zeros dropped.
///
/// Plain decimal for magnitudes in `[1e-5, 1e12)`, scientific otherwise.
/// Output never depends on locale and `-0` prints as `0`.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let text = if (-5..12).contains(&magnitude) {
        let decimals = (11 - magnitude).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.11e}");
        let (mantissa, exponent) = s.split_once('e').expect("scientific format has an exponent");
        format!("{}e{exponent}", trim_fraction(mantissa))
    };
    if text == "-0" {
        "0".into()
    } else {
        text
    }
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
