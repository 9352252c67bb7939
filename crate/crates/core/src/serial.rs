//! Bundle text format: a deterministic one-object JSON layout.
//!
//! Serialization is byte-deterministic: keys in a fixed order, elements in
//! carrier order, single spaces after ":" and ",", nothing else. Canonical
//! form comparisons rely on exactly these bytes. Parsing accepts any JSON
//! whitespace.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::Deserialize;

use crate::bundle::{AlgebraBundle, Kind};
use crate::tables::{BinRelation, Carrier, El, PartialOpTable, UnaryMap};
use crate::Error;

fn push_json_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            '\u{08}' => out.push_str("\\b"),
            '\u{0c}' => out.push_str("\\f"),
            c if (c as u32) < 0x20 => {
                out.push_str(&format!("\\u{:04x}", c as u32));
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn push_label_list(out: &mut String, carrier: &Carrier, items: &[El]) {
    out.push('[');
    for (i, &x) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        push_json_string(out, carrier.label(x));
    }
    out.push(']');
}

/// Renders a bundle in the deterministic layout.
pub fn serialize_bundle(b: &AlgebraBundle) -> String {
    let carrier = &b.carrier;
    let n = carrier.len();
    let mut out = String::new();
    out.push_str("{\"kind\": ");
    push_json_string(&mut out, b.kind.as_str());
    out.push_str(", \"elements\": ");
    push_label_list(&mut out, carrier, &(0..n).collect::<Vec<_>>());
    out.push_str(", \"product\": [");
    for x in 0..n {
        if x > 0 {
            out.push_str(", ");
        }
        out.push('[');
        for y in 0..n {
            if y > 0 {
                out.push_str(", ");
            }
            match b.product.get(x, y) {
                Some(v) => push_json_string(&mut out, carrier.label(v)),
                None => out.push_str("null"),
            }
        }
        out.push(']');
    }
    out.push(']');
    for (key, map) in [("D", &b.d), ("R", &b.r), ("inverse", &b.inverse), ("star", &b.star)] {
        if let Some(m) = map {
            out.push_str(", \"");
            out.push_str(key);
            out.push_str("\": ");
            push_label_list(&mut out, carrier, m.images());
        }
    }
    if let Some(e) = &b.e_set {
        out.push_str(", \"E\": ");
        push_label_list(&mut out, carrier, e);
    }
    if let Some(order) = &b.order {
        out.push_str(", \"order\": [");
        for (i, (a, c)) in order.strict_pairs().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push('[');
            push_json_string(&mut out, carrier.label(a));
            out.push_str(", ");
            push_json_string(&mut out, carrier.label(c));
            out.push(']');
        }
        out.push(']');
    }
    out.push('}');
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBundle {
    kind: String,
    elements: Vec<String>,
    product: Vec<Vec<Option<String>>>,
    #[serde(rename = "D")]
    d: Option<Vec<String>>,
    #[serde(rename = "R")]
    r: Option<Vec<String>>,
    inverse: Option<Vec<String>>,
    star: Option<Vec<String>>,
    #[serde(rename = "E")]
    e: Option<Vec<String>>,
    order: Option<Vec<(String, String)>>,
}

fn resolve(carrier: &Carrier, label: &str, context: &str) -> Result<El, Error> {
    carrier
        .index_of(label)
        .ok_or_else(|| Error::Malformed(format!("{context} names unknown element {label:?}")))
}

fn resolve_map(
    carrier: &Carrier,
    labels: &[String],
    key: &str,
) -> Result<UnaryMap, Error> {
    if labels.len() != carrier.len() {
        return Err(Error::Input(format!(
            "\"{key}\" map has {} entries but the carrier has {}",
            labels.len(),
            carrier.len()
        )));
    }
    let mut images = Vec::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        images.push(resolve(carrier, l, &format!("\"{key}\" entry {i}"))?);
    }
    UnaryMap::new(images, carrier.len())
}

/// Parses the bundle text format. Syntax errors carry line and column;
/// unknown labels are parse errors; dimension mismatches are input errors.
pub fn parse_bundle(text: &str) -> Result<AlgebraBundle, Error> {
    let raw: RawBundle = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let kind = Kind::parse(&raw.kind)
        .ok_or_else(|| Error::Malformed(format!("unknown structure kind {:?}", raw.kind)))?;
    let carrier = Carrier::new(raw.elements)?;
    let n = carrier.len();

    if raw.product.len() != n {
        return Err(Error::Input(format!(
            "product table has {} rows but the carrier has {n}",
            raw.product.len()
        )));
    }
    let mut table = PartialOpTable::empty(n);
    for (x, row) in raw.product.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Input(format!(
                "product row {x} has {} cells but the carrier has {n}",
                row.len()
            )));
        }
        for (y, cell) in row.iter().enumerate() {
            let v = match cell {
                None => None,
                Some(l) => Some(resolve(&carrier, l, &format!("product cell ({x},{y})"))?),
            };
            table.set(x, y, v);
        }
    }

    let mut bundle = AlgebraBundle::new(kind, carrier, table)?;
    if let Some(labels) = &raw.d {
        bundle.d = Some(resolve_map(&bundle.carrier, labels, "D")?);
    }
    if let Some(labels) = &raw.r {
        bundle.r = Some(resolve_map(&bundle.carrier, labels, "R")?);
    }
    if let Some(labels) = &raw.inverse {
        bundle.inverse = Some(resolve_map(&bundle.carrier, labels, "inverse")?);
    }
    if let Some(labels) = &raw.star {
        bundle.star = Some(resolve_map(&bundle.carrier, labels, "star")?);
    }
    if let Some(labels) = &raw.e {
        let mut e = Vec::with_capacity(labels.len());
        for l in labels {
            e.push(resolve(&bundle.carrier, l, "\"E\" entry")?);
        }
        e.sort_unstable();
        e.dedup();
        bundle.e_set = Some(e);
    }
    if let Some(pairs) = &raw.order {
        let mut resolved = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            resolved.push((
                resolve(&bundle.carrier, a, "\"order\" pair")?,
                resolve(&bundle.carrier, b, "\"order\" pair")?,
            ));
        }
        bundle.order = Some(BinRelation::from_generators(n, resolved)?);
    }
    Ok(bundle)
}
