//! Deterministic output formatting.
//!
//! JSON objects are emitted with insertion-ordered keys and every number
//! printed with 17 significant digits (`{:.16e}`), enough to round-trip any
//! f64 bit pattern; CSV uses the same number format, a `.` decimal separator
//! and no locale handling.

/// 17 significant digits, locale-free.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A flat JSON object builder preserving insertion order.
pub struct JsonObject {
    parts: Vec<String>,
}

impl JsonObject {
    pub fn new() -> JsonObject {
        JsonObject { parts: Vec::new() }
    }

    pub fn str(mut self, key: &str, value: &str) -> JsonObject {
        self.parts.push(format!("{}:{}", quote(key), quote(value)));
        self
    }

    pub fn num(mut self, key: &str, value: f64) -> JsonObject {
        self.parts.push(format!("{}:{}", quote(key), fmt_f64(value)));
        self
    }

    /// Inserts a pre-rendered JSON value (array, bool, nested object).
    pub fn raw(mut self, key: &str, value: &str) -> JsonObject {
        self.parts.push(format!("{}:{}", quote(key), value));
        self
    }

    pub fn finish(self) -> String {
        format!("{{{}}}", self.parts.join(","))
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_carry_17_significant_digits() {
        assert_eq!(fmt_f64(5.0), "5.0000000000000000e0");
        let x = std::f64::consts::PI;
        assert_eq!(fmt_f64(x).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn object_preserves_order_and_escapes() {
        let s = JsonObject::new().str("a\"b", "x").num("n", 1.0).finish();
        assert_eq!(s, "{\"a\\\"b\":\"x\",\"n\":1.0000000000000000e0}");
    }
}
