//! Deterministic number formatting for CSV and JSON output.

use serde_json::Value;

/// Twelve significant digits in scientific notation.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000e0".to_string();
    }
    format!("{x:.11e}")
}

/// Round to twelve significant digits.
pub fn round_float(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format_float(x).parse().unwrap_or(x)
}

/// Round every floating-point number inside a JSON tree to twelve significant digits.
pub fn round_json(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round_float(x)) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

/// Serialize with rounded floats and stable (sorted) key order.
pub fn to_json_string<T: serde::Serialize>(item: &T) -> crate::Result<String> {
    let mut value = serde_json::to_value(item)?;
    round_json(&mut value);
    Ok(serde_json::to_string_pretty(&value)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(format_float(0.5), "5.00000000000e-1");
        assert_eq!(format_float(-1.0 / 3.0), "-3.33333333333e-1");
        assert_eq!(round_float(0.1 + 0.2), 0.3);
        let mut v = serde_json::json!({"a": [0.30000000000000004, 1], "b": {"c": 2.0000000000001}});
        round_json(&mut v);
        assert_eq!(v, serde_json::json!({"a": [0.3, 1], "b": {"c": 2.0}}));
    }
}
