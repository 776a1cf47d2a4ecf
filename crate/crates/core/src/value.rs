//! Column types and typed cell values shared by the datastore, the
//! obligation executor and the wire protocol.

use std::cmp::Ordering;
use std::fmt;

use chrono::NaiveDateTime;
use serde::{Deserialize, Serialize};

/// Canonical timestamp format used everywhere: policies, CSV files, the wire.
pub const TIME_FORMAT: &str = "%Y-%m-%d %H:%M:%S";

/// Parse a timestamp in the canonical `"YYYY-MM-DD HH:MM:SS"` form.
pub fn parse_datetime(text: &str) -> Option<NaiveDateTime> {
    NaiveDateTime::parse_from_str(text.trim(), TIME_FORMAT).ok()
}

/// Render a timestamp in the canonical form.
pub fn format_datetime(dt: &NaiveDateTime) -> String {
    dt.format(TIME_FORMAT).to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ColumnType {
    DateTime,
    Double,
    Integer,
    Text,
}

impl ColumnType {
    pub fn parse(name: &str) -> Option<ColumnType> {
        match name.trim().to_ascii_lowercase().as_str() {
            "datetime" | "time" | "timestamp" => Some(ColumnType::DateTime),
            "double" | "float" | "real" => Some(ColumnType::Double),
            "integer" | "int" => Some(ColumnType::Integer),
            "text" | "string" | "varchar" => Some(ColumnType::Text),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ColumnType::DateTime => "DateTime",
            ColumnType::Double => "Double",
            ColumnType::Integer => "Integer",
            ColumnType::Text => "Text",
        }
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self, ColumnType::Double | ColumnType::Integer)
    }
}

impl fmt::Display for ColumnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A single table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    DateTime(NaiveDateTime),
    Double(f64),
    Integer(i64),
    Text(String),
}

impl Value {
    /// Parse `text` as a value of the given column type.
    pub fn parse(text: &str, ty: ColumnType) -> Option<Value> {
        let text = text.trim();
        match ty {
            ColumnType::DateTime => parse_datetime(text).map(Value::DateTime),
            ColumnType::Double => text.parse::<f64>().ok().map(Value::Double),
            ColumnType::Integer => text.parse::<i64>().ok().map(Value::Integer),
            ColumnType::Text => Some(Value::Text(text.to_string())),
        }
    }

    pub fn column_type(&self) -> ColumnType {
        match self {
            Value::DateTime(_) => ColumnType::DateTime,
            Value::Double(_) => ColumnType::Double,
            Value::Integer(_) => ColumnType::Integer,
            Value::Text(_) => ColumnType::Text,
        }
    }

    /// Numeric view, used by aggregates and the distance predicate.
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Double(v) => Some(*v),
            Value::Integer(v) => Some(*v as f64),
            _ => None,
        }
    }

    /// Compare two values of the same variant; `None` on a type mismatch.
    pub fn compare(&self, other: &Value) -> Option<Ordering> {
        match (self, other) {
            (Value::DateTime(a), Value::DateTime(b)) => Some(a.cmp(b)),
            (Value::Double(a), Value::Double(b)) => a.partial_cmp(b),
            (Value::Integer(a), Value::Integer(b)) => Some(a.cmp(b)),
            (Value::Text(a), Value::Text(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }

    /// JSON rendering used on the wire: DateTime travels as its canonical
    /// string, numbers keep their native JSON type.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::DateTime(dt) => serde_json::Value::String(format_datetime(dt)),
            Value::Double(v) => serde_json::json!(v),
            Value::Integer(v) => serde_json::json!(v),
            Value::Text(s) => serde_json::Value::String(s.clone()),
        }
    }

    /// Inverse of [`Value::to_json`]. Strings in the canonical timestamp
    /// form come back as `DateTime`.
    pub fn from_json(v: &serde_json::Value) -> Option<Value> {
        match v {
            serde_json::Value::String(s) => match parse_datetime(s) {
                Some(dt) => Some(Value::DateTime(dt)),
                None => Some(Value::Text(s.clone())),
            },
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Some(Value::Integer(i))
                } else {
                    n.as_f64().map(Value::Double)
                }
            }
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fmt_display_body!();
}

macro_rules! fmt_display_body {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match self {
                Value::DateTime(dt) => f.write_str(&format_datetime(dt)),
                Value::Double(v) => write!(f, "{v}"),
                Value::Integer(v) => write!(f, "{v}"),
                Value::Text(s) => f.write_str(s),
            }
        }
    };
}
use fmt_display_body;
