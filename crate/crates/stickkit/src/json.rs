//! JSON forms of instances, representations and orders.
//!
//! Rationals are written as strings (`"3/2"`, `"-4"`) and read from strings
//! or JSON integers. Maps are emitted in instance order, which makes the
//! output of `parse` followed by `to_json` canonical.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use stickkit_core::rational::{format as format_rational, parse as parse_rational};
use stickkit_core::{Instance, Lengths, Rational, Representation, Vertex};

#[derive(Debug)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError(format!("malformed JSON: {e}"))
    }
}

impl From<stickkit_core::Error> for FormatError {
    fn from(e: stickkit_core::Error) -> Self {
        FormatError(e.to_string())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn value(&self) -> Result<Rational, FormatError> {
        match self {
            Number::Int(n) => Ok(Rational::from_integer(*n as i128)),
            Number::Text(t) => parse_rational(t).ok_or_else(|| FormatError(format!("bad rational `{t}`"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    #[serde(rename = "A")]
    a: Vec<String>,
    #[serde(rename = "B")]
    b: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String)>,
    #[serde(rename = "sigma_A", default)]
    sigma_a: Option<Vec<String>>,
    #[serde(rename = "sigma_B", default)]
    sigma_b: Option<Vec<String>>,
    #[serde(default)]
    lengths: Option<BTreeMap<String, Number>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationDoc {
    foot: BTreeMap<String, Number>,
    length: BTreeMap<String, Number>,
}

fn lookup(inst: &Instance, name: &str) -> Result<Vertex, FormatError> {
    inst.find(name).ok_or_else(|| FormatError(format!("unknown vertex `{name}`")))
}

fn side_indices(inst: &Instance, names: &[String], want_a: bool, what: &str) -> Result<Vec<usize>, FormatError> {
    names
        .iter()
        .map(|n| match lookup(inst, n)? {
            v if v.is_a() == want_a => Ok(v.index),
            _ => Err(FormatError(format!("{what} lists `{n}` from the wrong side"))),
        })
        .collect()
}

/// Per-vertex values of a name map, requiring every vertex.
fn per_vertex(inst: &Instance, map: &BTreeMap<String, Number>, what: &str) -> Result<Lengths, FormatError> {
    for name in map.keys() {
        lookup(inst, name)?;
    }
    let get = |name: &String| {
        map.get(name).ok_or_else(|| FormatError(format!("{what} has no entry for `{name}`")))?.value()
    };
    Ok(Lengths {
        a: inst.a_names().iter().map(get).collect::<Result<_, _>>()?,
        b: inst.b_names().iter().map(get).collect::<Result<_, _>>()?,
    })
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let doc: InstanceDoc = serde_json::from_str(text)?;
    let bare = Instance::new(doc.a, doc.b, std::iter::empty())?;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (x, y) in &doc.edges {
        let (u, v) = (lookup(&bare, x)?, lookup(&bare, y)?);
        match (u.is_a(), v.is_a()) {
            (true, false) => edges.push((u.index, v.index)),
            (false, true) => edges.push((v.index, u.index)),
            _ => return Err(FormatError(format!("edge `{x}`-`{y}` joins two sticks of one side"))),
        }
    }
    let mut inst = Instance::new(bare.a_names().to_vec(), bare.b_names().to_vec(), edges)?;
    if let Some(order) = &doc.sigma_a {
        let order = side_indices(&inst, order, true, "sigma_A")?;
        inst = inst.with_sigma_a(order)?;
    }
    if let Some(order) = &doc.sigma_b {
        let order = side_indices(&inst, order, false, "sigma_B")?;
        inst = inst.with_sigma_b(order)?;
    }
    if let Some(map) = &doc.lengths {
        let lengths = per_vertex(&inst, map, "lengths")?;
        inst = inst.with_lengths(lengths)?;
    }
    Ok(inst)
}

pub fn parse_representation(inst: &Instance, text: &str) -> Result<Representation, FormatError> {
    let doc: RepresentationDoc = serde_json::from_str(text)?;
    let foot = per_vertex(inst, &doc.foot, "foot")?;
    let length = per_vertex(inst, &doc.length, "length")?;
    Ok(Representation { foot_a: foot.a, len_a: length.a, foot_b: foot.b, len_b: length.b })
}

/// A JSON list of vertex names covering every vertex once.
pub fn parse_order(inst: &Instance, text: &str) -> Result<Vec<Vertex>, FormatError> {
    let names: Vec<String> = serde_json::from_str(text)?;
    names.iter().map(|n| lookup(inst, n)).collect()
}

/// Name-to-rational map in instance order.
struct Named<'a> {
    inst: &'a Instance,
    value: &'a dyn Fn(Vertex) -> Rational,
}

impl Serialize for Named<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.inst.num_vertices()))?;
        for v in self.inst.vertices() {
            map.serialize_entry(self.inst.name(v), &format_rational(&(self.value)(v)))?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct InstanceOut<'a> {
    #[serde(rename = "A")]
    a: &'a [String],
    #[serde(rename = "B")]
    b: &'a [String],
    edges: Vec<(&'a str, &'a str)>,
    #[serde(rename = "sigma_A", skip_serializing_if = "Option::is_none")]
    sigma_a: Option<Vec<&'a str>>,
    #[serde(rename = "sigma_B", skip_serializing_if = "Option::is_none")]
    sigma_b: Option<Vec<&'a str>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lengths: Option<Named<'a>>,
}

pub fn instance_value(inst: &Instance) -> serde_json::Value {
    let names = |side: &[usize], f: fn(usize) -> Vertex| side.iter().map(|&i| inst.name(f(i))).collect();
    let lengths = inst.lengths().cloned();
    let get = move |v: Vertex| lengths.as_ref().map(|l| l.get(v)).unwrap_or_default();
    let out = InstanceOut {
        a: inst.a_names(),
        b: inst.b_names(),
        edges: inst.edges().map(|(a, b)| (inst.name(Vertex::a(a)), inst.name(Vertex::b(b)))).collect(),
        sigma_a: inst.sigma_a().map(|s| names(s, Vertex::a)),
        sigma_b: inst.sigma_b().map(|s| names(s, Vertex::b)),
        lengths: inst.lengths().map(|_| Named { inst, value: &get }),
    };
    serde_json::to_value(out).expect("serializable")
}

pub fn representation_value(inst: &Instance, rep: &Representation) -> serde_json::Value {
    let foot = |v: Vertex| rep.foot(v);
    let length = |v: Vertex| rep.length(v);
    serde_json::json!({
        "foot": serde_json::to_value(Named { inst, value: &foot }).expect("serializable"),
        "length": serde_json::to_value(Named { inst, value: &length }).expect("serializable"),
    })
}

pub fn order_value(inst: &Instance, order: &[Vertex]) -> serde_json::Value {
    order.iter().map(|&v| serde_json::Value::from(inst.name(v))).collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use stickkit_core::rational::frac;

    const K22: &str = r#"{"A": ["a1", "a2"], "B": ["b1", "b2"],
        "edges": [["a1", "b1"], ["b2", "a1"], ["a2", "b1"], ["a2", "b2"]],
        "sigma_A": ["a2", "a1"], "lengths": {"a1": 1, "a2": "3/2", "b1": "2", "b2": " 1/2 "}}"#;

    #[test]
    fn instance_round_trip_is_canonical() {
        let inst = parse_instance(K22).unwrap();
        assert_eq!(inst.sigma_a(), Some(&[1, 0][..]));
        assert_eq!(inst.lengths().unwrap().get(Vertex::a(1)), frac(3, 2));
        let once = to_text(&instance_value(&inst));
        let again = to_text(&instance_value(&parse_instance(&once).unwrap()));
        assert_eq!(once, again);
        assert!(once.contains("\"b2\": \"1/2\""));
    }

    #[test]
    fn representation_round_trip() {
        let inst = parse_instance(K22).unwrap();
        let text = r#"{"foot": {"b1": 0, "b2": 1, "a1": 2, "a2": 3}, "length": {"a1": 2, "a2": 3, "b1": 3, "b2": 2}}"#;
        let rep = parse_representation(&inst, text).unwrap();
        assert_eq!(rep.foot(Vertex::a(1)), Rational::from_integer(3));
        let back = parse_representation(&inst, &to_text(&representation_value(&inst, &rep))).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_instance(r#"{"A": ["a"], "B": ["b"], "edges": [["a", "c"]]}"#).is_err());
        assert!(parse_instance(r#"{"A": ["a", "x"], "B": ["b"], "edges": [["a", "x"]]}"#).is_err());
        assert!(parse_instance(r#"{"A": ["a"], "B": ["b"], "sigma_A": ["b"]}"#).is_err());
        assert!(parse_instance(r#"{"A": ["a"], "B": ["b"], "lengths": {"a": "1/0", "b": 1}}"#).is_err());
        assert!(parse_instance(r#"{"A": ["a"], "B": ["b"], "lengths": {"a": 1}}"#).is_err());
        assert!(parse_instance(r#"{"A": ["a"], "B": ["a"]}"#).is_err());
        assert!(parse_instance(r#"{"A": ["a"], "B": ["b"], "extra": 1}"#).is_err());
    }
}
