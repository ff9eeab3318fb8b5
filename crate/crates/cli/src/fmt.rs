//! Number formatting for all command output.
//!
//! Shortest representation that round-trips, capped at 12 significant
//! digits. The cap keeps rows readable and stable while staying well
//! above every tolerance the library guarantees; the shortest-form pass
//! strips the noise digits that a fixed-width format would invent.

/// Formats with at most 12 significant digits, locale-independent.
///
/// Magnitudes outside [1e-5, 1e15) switch to scientific notation;
/// the default positional rendering would otherwise spell a 1e-16
/// residual as a row of sixteen zeros.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        // fold -0.0 into "0" so mirrored sweeps stay visually symmetric
        return "0".to_string();
    }
    let capped = cap_digits(x);
    let mag = capped.abs();
    if (1e-5..1e15).contains(&mag) {
        format!("{capped}")
    } else {
        format!("{capped:e}")
    }
}

fn cap_digits(x: f64) -> f64 {
    if significant_digits(&format!("{x}")) <= 12 {
        x
    } else {
        format!("{x:.11e}").parse().expect("rounded float reparses")
    }
}

fn significant_digits(s: &str) -> usize {
    let mantissa = s.split(['e', 'E']).next().unwrap_or(s);
    mantissa
        .chars()
        .filter(char::is_ascii_digit)
        .skip_while(|&c| c == '0')
        .count()
}
