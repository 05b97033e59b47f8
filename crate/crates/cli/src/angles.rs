//! Angle parsing for the command line.
//!
//! Angles are radians by default. Symbolic π tokens (`pi`, `2pi`, `pi/2`,
//! `3pi/2`, `-pi/4`, ...) are accepted so exact multiples of π never go
//! through decimal transcription. With the degrees flag, plain numbers are
//! interpreted as degrees; symbolic tokens are rejected there since they are
//! inherently radian-valued.

use std::f64::consts::PI;

/// Parse an angle string into radians.
pub fn parse_angle(text: &str, degrees: bool) -> Result<f64, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty angle".to_string());
    }
    let lower = trimmed.to_ascii_lowercase();
    if let Some(value) = parse_pi_token(&lower)? {
        if degrees {
            return Err(format!(
                "symbolic angle '{trimmed}' is radian-valued; drop --degrees or use a number"
            ));
        }
        return Ok(value);
    }
    let number: f64 = lower
        .parse()
        .map_err(|_| format!("cannot parse angle '{trimmed}'"))?;
    if !number.is_finite() {
        return Err(format!("angle '{trimmed}' is not finite"));
    }
    Ok(if degrees { number * PI / 180.0 } else { number })
}

/// Recognize `[sign][coefficient]pi[/divisor]`; `Ok(None)` when the text is
/// not a π token at all.
fn parse_pi_token(lower: &str) -> Result<Option<f64>, String> {
    let Some(pi_at) = lower.find("pi") else {
        return Ok(None);
    };
    let (prefix, rest) = lower.split_at(pi_at);
    let rest = &rest[2..];

    let (sign, coef_text) = match prefix.strip_prefix('-') {
        Some(p) => (-1.0, p),
        None => (1.0, prefix.strip_prefix('+').unwrap_or(prefix)),
    };
    let coefficient = if coef_text.is_empty() {
        1.0
    } else {
        coef_text
            .parse::<f64>()
            .map_err(|_| format!("bad coefficient '{coef_text}' before 'pi'"))?
    };

    let divisor = if rest.is_empty() {
        1.0
    } else if let Some(d) = rest.strip_prefix('/') {
        let d: f64 = d
            .parse()
            .map_err(|_| format!("bad divisor '{d}' after 'pi/'"))?;
        if d == 0.0 {
            return Err("division by zero in angle".to_string());
        }
        d
    } else {
        return Err(format!("trailing characters '{rest}' after 'pi'"));
    };

    Ok(Some(sign * coefficient * PI / divisor))
}
