/// Render a float with 17 significant digits, enough to round-trip any f64.
pub fn format_float(x: f64) -> String {
    format!("{:.16e}", x)
}
