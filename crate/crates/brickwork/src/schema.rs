//! A small JSON Schema checker covering exactly the constructs the
//! shipped output schema uses: primitive types, const and enum,
//! objects with required properties and closed additionalProperties,
//! homogeneous arrays, oneOf, and #/definitions references. The tests
//! pin every CLI JSON shape to `schemas/output.schema.json` with it.

use serde_json::Value;

use crate::error::{Error, Result};

/// The schema file shipped at the repository root, compiled in so the
/// library and tests validate against the same bytes users read.
pub const OUTPUT_SCHEMA: &str = include_str!("../../../schemas/output.schema.json");

/// Parses the shipped schema. Panics only if the repo file is broken,
/// which the tests would catch before anything ships.
pub fn output_schema() -> Value {
    serde_json::from_str(OUTPUT_SCHEMA).expect("shipped schema is valid JSON")
}

/// Validates a value against a schema document, resolving internal
/// references against that document's root.
pub fn validate(schema: &Value, value: &Value) -> Result<()> {
    check(schema, schema, value, "$")
}

fn fail(path: &str, msg: impl Into<String>) -> Error {
    Error::InvalidInput(format!("schema violation at {path}: {}", msg.into()))
}

fn resolve<'a>(root: &'a Value, reference: &str, path: &str) -> Result<&'a Value> {
    let Some(pointer) = reference.strip_prefix('#') else {
        return Err(fail(path, format!("unsupported external reference {reference:?}")));
    };
    root.pointer(pointer)
        .ok_or_else(|| fail(path, format!("dangling reference {reference:?}")))
}

fn type_name(value: &Value) -> &'static str {
    match value {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(n) => {
            if n.is_i64() || n.is_u64() {
                "integer"
            } else {
                "number"
            }
        }
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

fn check(root: &Value, schema: &Value, value: &Value, path: &str) -> Result<()> {
    let Some(obj) = schema.as_object() else {
        return Err(fail(path, "schema node is not an object"));
    };
    if let Some(r) = obj.get("$ref") {
        let reference = r
            .as_str()
            .ok_or_else(|| fail(path, "$ref is not a string"))?;
        return check(root, resolve(root, reference, path)?, value, path);
    }
    if let Some(branches) = obj.get("oneOf") {
        let branches = branches
            .as_array()
            .ok_or_else(|| fail(path, "oneOf is not an array"))?;
        let mut matched = 0;
        for b in branches {
            if check(root, b, value, path).is_ok() {
                matched += 1;
            }
        }
        if matched != 1 {
            return Err(fail(path, format!("matched {matched} oneOf branches, expected 1")));
        }
        return Ok(());
    }
    if let Some(expected) = obj.get("const") {
        if value != expected {
            return Err(fail(path, format!("expected constant {expected}, got {value}")));
        }
    }
    if let Some(options) = obj.get("enum") {
        let options = options
            .as_array()
            .ok_or_else(|| fail(path, "enum is not an array"))?;
        if !options.contains(value) {
            return Err(fail(path, format!("{value} is not one of {options:?}")));
        }
    }
    if let Some(t) = obj.get("type") {
        let t = t.as_str().ok_or_else(|| fail(path, "type is not a string"))?;
        let actual = type_name(value);
        // An integer is also a number, and either way around for
        // integral floats is rejected: exactness matters here.
        let ok = actual == t || (t == "number" && actual == "integer");
        if !ok {
            return Err(fail(path, format!("expected type {t}, got {actual}")));
        }
    }
    if let Some(props) = obj.get("properties") {
        let props = props
            .as_object()
            .ok_or_else(|| fail(path, "properties is not an object"))?;
        if let Some(map) = value.as_object() {
            for (name, sub) in props {
                if let Some(v) = map.get(name) {
                    check(root, sub, v, &format!("{path}.{name}"))?;
                }
            }
            if obj.get("additionalProperties") == Some(&Value::Bool(false)) {
                for name in map.keys() {
                    if !props.contains_key(name) {
                        return Err(fail(path, format!("unexpected property {name:?}")));
                    }
                }
            }
        }
    }
    if let Some(required) = obj.get("required") {
        let required = required
            .as_array()
            .ok_or_else(|| fail(path, "required is not an array"))?;
        let map = value
            .as_object()
            .ok_or_else(|| fail(path, "required applies to an object"))?;
        for name in required {
            let name = name
                .as_str()
                .ok_or_else(|| fail(path, "required entry is not a string"))?;
            if !map.contains_key(name) {
                return Err(fail(path, format!("missing required property {name:?}")));
            }
        }
    }
    if let Some(items) = obj.get("items") {
        if let Some(arr) = value.as_array() {
            for (i, v) in arr.iter().enumerate() {
                check(root, items, v, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}
