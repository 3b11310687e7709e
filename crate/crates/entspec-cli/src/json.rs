//! Minimal JSON writer with insertion-ordered keys.
//!
//! Output schemas are part of the tool's contract, so serialization stays
//! small and explicit: objects keep the order keys were pushed in, floats
//! print with 17 significant digits (lossless for f64), and nothing outside
//! this module decides formatting.

/// JSON value restricted to what the reports need.
#[derive(Debug, Clone)]
pub enum Value {
    Bool(bool),
    /// Unsigned integers (dimensions, counts, seeds) print as plain digits.
    UInt(u64),
    Num(f64),
    Str(String),
    Arr(Vec<Value>),
    Obj(Vec<(String, Value)>),
}

impl Value {
    pub fn obj() -> Value {
        Value::Obj(Vec::new())
    }

    /// Appends a key; panics on a non-object, which is a programming error.
    pub fn push(&mut self, key: &str, value: Value) -> &mut Value {
        match self {
            Value::Obj(fields) => fields.push((key.to_owned(), value)),
            _ => panic!("push on a non-object JSON value"),
        }
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn write(&self, out: &mut String) {
        match self {
            Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Value::UInt(n) => out.push_str(&n.to_string()),
            Value::Num(x) => out.push_str(&num(*x)),
            Value::Str(s) => write_string(s, out),
            Value::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Value::Obj(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write_string(key, out);
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
        }
    }
}

pub fn str(s: impl Into<String>) -> Value {
    Value::Str(s.into())
}

pub fn arr(values: impl IntoIterator<Item = Value>) -> Value {
    Value::Arr(values.into_iter().collect())
}

pub fn nums(values: impl IntoIterator<Item = f64>) -> Value {
    Value::Arr(values.into_iter().map(Value::Num).collect())
}

/// A float with 17 significant digits: round-trips through parsing exactly.
/// Every numeric column and JSON field goes through here, so two runs that
/// compute the same doubles serialize to the same bytes.
pub fn num(x: f64) -> String {
    debug_assert!(x.is_finite(), "reports only carry finite numbers");
    format!("{x:.16e}")
}

fn write_string(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                out.push_str(&format!("\\u{:04x}", c as u32));
            }
            c => out.push(c),
        }
    }
    out.push('"');
}
