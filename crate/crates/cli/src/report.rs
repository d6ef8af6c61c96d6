use std::io::{self, Write};

use serde::Serialize;
use serde_json::{Map, Value};

/// Ordered key-value report. Scalars print as `key: value` lines; the whole
/// report follows as one JSON object.
#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.put("command", command);
        r
    }

    pub fn put(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let value = serde_json::to_value(value).expect("report values serialize");
        match self.fields.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.fields.push((key.to_string(), value)),
        }
        self
    }

    pub fn write(&self, mut out: impl Write) -> io::Result<()> {
        for (key, value) in &self.fields {
            match value {
                Value::String(s) => writeln!(out, "{key}: {s}")?,
                Value::Array(_) | Value::Object(_) => {}
                other => writeln!(out, "{key}: {other}")?,
            }
        }
        let object: Map<String, Value> = self.fields.iter().cloned().collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(object)).expect("json"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_then_json() {
        let mut r = Report::new("verify");
        r.put("valid", true).put("hubs", vec![1, 2]).put("size", 3);
        let mut buf = Vec::new();
        r.write(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("command: verify\nvalid: true\nsize: 3\n{"));
        let json: Value = serde_json::from_str(&text[text.find('{').unwrap()..]).unwrap();
        assert_eq!(json["hubs"], serde_json::json!([1, 2]));
    }

    #[test]
    fn put_overwrites() {
        let mut r = Report::new("x");
        r.put("a", 1).put("a", 2);
        assert_eq!(r.fields.len(), 2);
        assert_eq!(r.fields[1].1, Value::from(2));
    }
}
