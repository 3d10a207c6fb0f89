//! Number formatting shared by every JSON document the tool writes.
//!
//! Floats go out with 17 significant digits, which is enough for any `f64` to
//! read back bit-identically, and always in the same notation so repeated runs
//! produce byte-identical files. Complex numbers are `[re, im]` pairs.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

/// Writes non-finite values as `null`, since JSON has no spelling for them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F64(pub f64);

pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

impl Serialize for F64 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format_f64(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for F64 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        f64::deserialize(d).map(F64)
    }
}

impl From<f64> for F64 {
    fn from(x: f64) -> Self {
        F64(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cx(pub [F64; 2]);

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Cx([F64(z.re), F64(z.im)])
    }
}

impl From<Cx> for Complex64 {
    fn from(Cx([re, im]): Cx) -> Self {
        Complex64::new(re.0, im.0)
    }
}

pub fn floats<const N: usize>(xs: [f64; N]) -> [F64; N] {
    xs.map(F64)
}

/// Pretty-printed and newline-terminated.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable by construction");
    s.push('\n');
    s
}
