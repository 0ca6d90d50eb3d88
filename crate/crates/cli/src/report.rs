use std::fmt::Display;
use std::str::FromStr;

use combkit::num::format_rational;
use combkit::Rational;
use serde_json::{json, Number, Value};

/// A command's output in both forms.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub result: Value,
}

impl Report {
    pub fn new(text: impl Into<String>, result: Value) -> Self {
        Report { text: text.into(), result }
    }

    /// A single integer, printed bare.
    pub fn integer(n: impl Display) -> Self {
        let s = n.to_string();
        Report { result: int(&s), text: s }
    }

    pub fn json_document(&self, command: &str) -> String {
        json!({ "command": command, "result": self.result }).to_string()
    }
}

/// Integers of any size go out as exact JSON numbers.
pub fn int(n: impl Display) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

pub fn ints<T: Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(int).collect())
}

/// Rationals go out as `p/q` strings so nothing is rounded.
pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rationals<'a>(rs: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(rs.into_iter().map(rational).collect())
}

pub fn join<T: Display>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
