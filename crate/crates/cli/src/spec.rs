//! JSON polytope documents: parsing, schema validation with JSON-path error
//! reporting, and conversion to the library's constructors.

use alcoved::alcoved::{from_order_poset, AlcovedSpec, Bound, Poset};
use alcoved::matroid::{CyclicIntervalSystem, Weight, WeightedSetPartition};
use serde_json::Value;

/// A validated polytope description.
#[derive(Debug, Clone)]
pub enum SpecDocument {
    Hypersimplex { k: u32, n: u32 },
    Alcoved { n: usize, level: i64, unit_cube: bool, bounds: Vec<(usize, usize, Bound)> },
    WspMatroid { partition: WeightedSetPartition, k: u32 },
    Transversal { system: CyclicIntervalSystem },
    OrderPoset { poset: Poset },
    Weight { weight: Weight },
}

/// A schema violation at a JSON path.
#[derive(Debug, Clone)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

type ParseResult<T> = Result<T, Vec<Violation>>;

fn one(path: &str, message: impl Into<String>) -> Vec<Violation> {
    vec![Violation { path: path.into(), message: message.into() }]
}

pub fn parse_spec(text: &str) -> ParseResult<SpecDocument> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| one("/", format!("malformed JSON: {e}")))?;
    let obj = value.as_object().ok_or_else(|| one("/", "document must be an object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| one("/kind", "missing or non-string field"))?;
    match kind {
        "hypersimplex" => parse_hypersimplex(obj),
        "alcoved" => parse_alcoved(obj),
        "wsp-matroid" => parse_wsp(obj),
        "transversal" => parse_transversal(obj),
        "order-poset" => parse_order_poset(obj),
        "weight" => parse_weight(obj),
        other => Err(one("/kind", format!("unknown kind {other:?}"))),
    }
}

fn get_u32(obj: &serde_json::Map<String, Value>, field: &str) -> ParseResult<u32> {
    let v = obj.get(field).ok_or_else(|| one(&format!("/{field}"), "missing field"))?;
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| one(&format!("/{field}"), "expected a small non-negative integer"))
}

fn get_i64(v: &Value, path: &str) -> ParseResult<i64> {
    v.as_i64().ok_or_else(|| one(path, "expected an integer"))
}

fn parse_hypersimplex(obj: &serde_json::Map<String, Value>) -> ParseResult<SpecDocument> {
    let k = get_u32(obj, "k")?;
    let n = get_u32(obj, "n")?;
    if k == 0 || k >= n {
        return Err(one("/k", format!("need 0 < k < n, got k = {k}, n = {n}")));
    }
    Ok(SpecDocument::Hypersimplex { k, n })
}

fn parse_alcoved(obj: &serde_json::Map<String, Value>) -> ParseResult<SpecDocument> {
    let n = get_u32(obj, "n")? as usize;
    if n < 2 {
        return Err(one("/n", "need n >= 2"));
    }
    let level = obj
        .get("level")
        .ok_or_else(|| one("/level", "missing field"))
        .and_then(|v| get_i64(v, "/level"))?;
    let unit_cube = match obj.get("unit_cube") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => return Err(one("/unit_cube", "expected a boolean")),
    };
    let mut bounds = Vec::new();
    let mut violations = Vec::new();
    if let Some(raw) = obj.get("bounds") {
        let arr = raw.as_array().ok_or_else(|| one("/bounds", "expected an array"))?;
        for (idx, entry) in arr.iter().enumerate() {
            let base = format!("/bounds/{idx}");
            let Some(eobj) = entry.as_object() else {
                violations.push(Violation { path: base, message: "expected an object".into() });
                continue;
            };
            let i = eobj.get("i").and_then(Value::as_u64);
            let j = eobj.get("j").and_then(Value::as_u64);
            let (Some(i), Some(j)) = (i, j) else {
                violations.push(Violation {
                    path: base,
                    message: "fields i and j must be non-negative integers".into(),
                });
                continue;
            };
            let (i, j) = (i as usize, j as usize);
            if i >= j || j > n - 1 {
                violations.push(Violation {
                    path: format!("{base}/i"),
                    message: format!("need 0 <= i < j <= {}", n - 1),
                });
                continue;
            }
            let side = |field: &str| -> Result<Option<i64>, Violation> {
                match eobj.get(field) {
                    None | Some(Value::Null) => Ok(None),
                    Some(v) => v.as_i64().map(Some).ok_or(Violation {
                        path: format!("{base}/{field}"),
                        message: "expected an integer or null".into(),
                    }),
                }
            };
            let lo = match side("lo") {
                Ok(x) => x,
                Err(v) => {
                    violations.push(v);
                    continue;
                }
            };
            let hi = match side("hi") {
                Ok(x) => x,
                Err(v) => {
                    violations.push(v);
                    continue;
                }
            };
            if let (Some(l), Some(h)) = (lo, hi) {
                if l > h {
                    violations.push(Violation {
                        path: format!("{base}/lo"),
                        message: format!("lo = {l} exceeds hi = {h}"),
                    });
                    continue;
                }
            }
            bounds.push((i, j, (lo, hi)));
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    Ok(SpecDocument::Alcoved { n, level, unit_cube, bounds })
}

fn get_int_array(obj: &serde_json::Map<String, Value>, field: &str) -> ParseResult<Vec<i64>> {
    let raw = obj.get(field).ok_or_else(|| one(&format!("/{field}"), "missing field"))?;
    let arr = raw.as_array().ok_or_else(|| one(&format!("/{field}"), "expected an array"))?;
    let mut out = Vec::with_capacity(arr.len());
    for (idx, v) in arr.iter().enumerate() {
        out.push(get_i64(v, &format!("/{field}/{idx}"))?);
    }
    Ok(out)
}

fn parse_wsp(obj: &serde_json::Map<String, Value>) -> ParseResult<SpecDocument> {
    let parts_i = get_int_array(obj, "parts")?;
    if parts_i.iter().any(|&a| a < 1) {
        return Err(one("/parts", "part sizes must be positive"));
    }
    let parts: Vec<u32> = parts_i.iter().map(|&a| a as u32).collect();
    let r = parts.len();
    let k = get_u32(obj, "k")?;
    let b = if obj.contains_key("b") { get_int_array(obj, "b")? } else { vec![0; r] };
    let c = if obj.contains_key("c") { get_int_array(obj, "c")? } else { vec![1; r] };
    let partition = WeightedSetPartition::new(parts, b, c)
        .map_err(|e| one("/parts", e.to_string()))?;
    let n = partition.n();
    if k == 0 || k >= n {
        return Err(one("/k", format!("need 0 < k < {n}")));
    }
    Ok(SpecDocument::WspMatroid { partition, k })
}

fn parse_transversal(obj: &serde_json::Map<String, Value>) -> ParseResult<SpecDocument> {
    let n = get_u32(obj, "n")?;
    let raw = obj.get("intervals").ok_or_else(|| one("/intervals", "missing field"))?;
    let arr = raw.as_array().ok_or_else(|| one("/intervals", "expected an array"))?;
    let mut intervals = Vec::with_capacity(arr.len());
    for (idx, entry) in arr.iter().enumerate() {
        let path = format!("/intervals/{idx}");
        let pair = entry.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
            one(&path, "expected a [start, end] pair")
        })?;
        let s = get_i64(&pair[0], &format!("{path}/0"))?;
        let e = get_i64(&pair[1], &format!("{path}/1"))?;
        if s < 1 || e < 1 || s > n as i64 || e > n as i64 {
            return Err(one(&path, format!("endpoints must lie in [1..{n}]")));
        }
        intervals.push((s as u32, e as u32));
    }
    let system =
        CyclicIntervalSystem::new(n, intervals).map_err(|e| one("/intervals", e.to_string()))?;
    Ok(SpecDocument::Transversal { system })
}

fn parse_order_poset(obj: &serde_json::Map<String, Value>) -> ParseResult<SpecDocument> {
    let m = get_u32(obj, "m")? as usize;
    if m < 1 {
        return Err(one("/m", "need m >= 1"));
    }
    let mut relations = Vec::new();
    if let Some(raw) = obj.get("relations") {
        let arr = raw.as_array().ok_or_else(|| one("/relations", "expected an array"))?;
        for (idx, entry) in arr.iter().enumerate() {
            let path = format!("/relations/{idx}");
            let pair = entry
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| one(&path, "expected an [a, b] pair meaning a < b"))?;
            let a = get_i64(&pair[0], &format!("{path}/0"))?;
            let b = get_i64(&pair[1], &format!("{path}/1"))?;
            if a < 1 || b < 1 || a > m as i64 || b > m as i64 {
                return Err(one(&path, format!("elements must lie in [1..{m}]")));
            }
            relations.push((a as u32, b as u32));
        }
    }
    let poset = Poset::new(m, &relations).map_err(|e| one("/relations", e.to_string()))?;
    if !poset.is_naturally_labeled() {
        return Err(one("/relations", "poset must be naturally labeled (a < b as integers)"));
    }
    Ok(SpecDocument::OrderPoset { poset })
}

fn parse_weight(obj: &serde_json::Map<String, Value>) -> ParseResult<SpecDocument> {
    let lambda = get_int_array(obj, "lambda")?;
    let weight = Weight::new(lambda).map_err(|e| one("/lambda", e.to_string()))?;
    Ok(SpecDocument::Weight { weight })
}

impl SpecDocument {
    /// The alcoved realization of the document, where one exists.
    pub fn to_alcoved(&self) -> alcoved::Result<AlcovedSpec> {
        match self {
            SpecDocument::Hypersimplex { k, n } => AlcovedSpec::hypersimplex(*k, *n),
            SpecDocument::Alcoved { n, level, unit_cube, bounds } => {
                AlcovedSpec::new(*n, *level, bounds, *unit_cube)
            }
            SpecDocument::WspMatroid { partition, k } => alcoved::matroid::wsp_spec(partition, *k),
            SpecDocument::Transversal { system } => {
                let m = alcoved::matroid::transversal_bases(system)?;
                alcoved::matroid::tight_hull_spec(m.bases())
            }
            SpecDocument::OrderPoset { poset } => from_order_poset(poset),
            SpecDocument::Weight { weight } => weight_spec(weight),
        }
    }
}

/// The box realization of a sort-closed weight polytope: coordinates bounded
/// by the top entry, at the level of the total weight.
pub fn weight_spec(weight: &Weight) -> alcoved::Result<AlcovedSpec> {
    if !alcoved::matroid::is_weight_sort_closed(weight)? {
        return Err(alcoved::Error::MethodDomain(
            "the weight polytope is not sort-closed, so it is not alcoved".into(),
        ));
    }
    let n = weight.coords().len();
    if n < 2 {
        return Err(alcoved::Error::Argument("need at least two coordinates".into()));
    }
    let level: i64 = weight.coords().iter().sum();
    let top = weight.coords().iter().copied().max().unwrap_or(0);
    let mut bounds: Vec<(usize, usize, Bound)> = Vec::new();
    for i in 1..n {
        bounds.push((i - 1, i, (Some(0), Some(top))));
    }
    bounds.push((0, n - 1, (Some(level - top), Some(level))));
    AlcovedSpec::new(n, level, &bounds, false)
}
