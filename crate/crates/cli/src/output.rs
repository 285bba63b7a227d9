//! JSON envelopes and the plain-text rendering.

use padic_hg::padic::Qp;
use padic_hg::Zp;
use serde::Serialize;
use serde_json::{json, Map, Value};

/// Digits of `residue` in base p, least significant first, `prec` of them.
fn digits(mut residue: u128, p: u64, prec: u32) -> Vec<u64> {
    (0..prec)
        .map(|_| {
            let d = (residue % p as u128) as u64;
            residue /= p as u128;
            d
        })
        .collect()
}

fn scalar_value(p: u64, prec: u32, shift: i32, residue: u128) -> Value {
    json!({
        "p": p,
        "prec": prec,
        "shift": shift,
        "residue": residue.to_string(),
        "digits": digits(residue, p, prec),
    })
}

pub fn zp(z: &Zp) -> Value {
    scalar_value(z.p(), z.prec(), 0, z.residue() as u128)
}

/// p^shift * residue with residue known mod p^(abs - shift).
pub fn qp(x: &Qp) -> Value {
    let (shift, r) = x.display_parts();
    let mut v = scalar_value(x.p(), r.prec(), shift, r.residue() as u128);
    v["abs_prec"] = json!(x.abs_prec());
    v
}

/// Serializes a library record and rewrites its Z_p scalars into the
/// digit form used everywhere in the output.
pub fn record<T: Serialize>(t: &T) -> Value {
    normalize(serde_json::to_value(t).expect("records serialize"))
}

fn normalize(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            if let Some(s) = as_prime_scalar(&m) {
                return s;
            }
            Value::Object(m.into_iter().map(|(k, v)| (k, normalize(v))).collect())
        }
        Value::Array(a) => Value::Array(a.into_iter().map(normalize).collect()),
        other => other,
    }
}

fn as_prime_scalar(m: &Map<String, Value>) -> Option<Value> {
    if m.len() != 4 || m.get("f")?.as_u64()? != 1 {
        return None;
    }
    let p = m.get("p")?.as_u64()?;
    let prec = m.get("prec")?.as_u64()? as u32;
    let coeffs = m.get("coeffs")?.as_array()?;
    let residue: u128 = coeffs.first()?.as_str()?.parse().ok()?;
    Some(scalar_value(p, prec, 0, residue))
}

pub fn envelope(command: &str, params: Value, result: Value) -> Value {
    json!({ "command": command, "params": params, "result": result })
}

pub fn error_envelope(command: &str, params: Value, message: &str) -> Value {
    json!({ "command": command, "params": params, "error": message })
}

fn is_scalar(m: &Map<String, Value>) -> bool {
    m.contains_key("digits") && m.contains_key("shift") && m.contains_key("p")
}

fn scalar_plain(m: &Map<String, Value>) -> String {
    let digits: Vec<String> = m["digits"].as_array().unwrap().iter().map(|d| d.to_string()).collect();
    let p = &m["p"];
    let shift = m["shift"].as_i64().unwrap_or(0);
    let prec = m.get("abs_prec").unwrap_or(&m["prec"]);
    let body = if digits.is_empty() { "0".to_string() } else { digits.join(" ") };
    if shift == 0 {
        format!("{body} (mod {p}^{prec})")
    } else {
        format!("{p}^{shift} * [{body}] (mod {p}^{prec})")
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                match val {
                    Value::Object(inner) if is_scalar(inner) => {
                        out.push_str(&format!("{pad}{k}: {}\n", scalar_plain(inner)));
                    }
                    Value::Object(_) | Value::Array(_) if !inline(val) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", leaf(val))),
                }
            }
        }
        Value::Array(a) => {
            for item in a {
                match item {
                    Value::Object(inner) if is_scalar(inner) => out.push_str(&format!("{pad}- {}\n", scalar_plain(inner))),
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", leaf(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", leaf(v))),
    }
}

fn inline(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(m) => is_scalar(m),
        _ => true,
    }
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(leaf).collect::<Vec<_>>().join(", "),
        Value::Object(m) if is_scalar(m) => scalar_plain(m),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

pub fn plain(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_are_little_endian() {
        let z = Zp::new(7, 3, 1 + 2 * 7 + 3 * 49).unwrap();
        assert_eq!(zp(&z)["digits"], json!([1, 2, 3]));
        let v = json!({ "x": zp(&z) });
        assert_eq!(plain(&v), "x: 1 2 3 (mod 7^3)\n");
    }

    #[test]
    fn records_are_normalized() {
        let z = Zp::new(5, 2, 13).unwrap();
        let v = record(&vec![z]);
        assert_eq!(v[0]["residue"], json!("13"));
        assert_eq!(v[0]["digits"], json!([3, 2]));
    }
}
