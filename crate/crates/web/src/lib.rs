//! Browser bindings. Each export takes plain strings and numbers and returns
//! a JSON string; errors become thrown JS exceptions. Codimensions cross
//! the boundary as `i32` so JS passes a plain number, not a BigInt.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use blowup_core::report::{ClassifyReport, CodimSweep};
use blowup_core::{special, BlowUp, Family, FlagVariety, ParabolicSubset, RootSystem, TypeSpec};

/// Largest rank the page offers.
pub const MAX_RANK: usize = 8;

#[derive(Debug, Serialize)]
pub struct Node {
    pub label: usize,
    pub x: f64,
    pub y: f64,
    /// Relative squared length, 1 for short roots.
    pub length: i64,
    pub cominuscule: bool,
}

#[derive(Debug, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// 1, 2 or 3 bonds.
    pub bonds: i64,
    /// Node holding the longer root when `bonds > 1`.
    pub long_end: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct Diagram {
    pub name: String,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub positive_roots: usize,
    pub highest_root: Vec<i64>,
}

fn root_system(family: &str, rank: usize) -> Result<RootSystem, String> {
    if rank > MAX_RANK {
        return Err(format!("rank {rank} exceeds {MAX_RANK}"));
    }
    let family: Family = family
        .parse()
        .map_err(|e: blowup_core::Error| e.to_string())?;
    let spec = TypeSpec::new(family, rank).map_err(|e| e.to_string())?;
    RootSystem::new(spec).map_err(|e| e.to_string())
}

fn position(family: Family, rank: usize, label: usize) -> (f64, f64) {
    let i = label as f64;
    match family {
        Family::D if rank >= 3 && label >= rank - 1 => {
            let y = if label == rank - 1 { -0.7 } else { 0.7 };
            ((rank - 2) as f64 + 0.7, y)
        }
        Family::E => match label {
            1 => (0.0, 0.0),
            2 => (2.0, 1.0),
            _ => (i - 2.0, 0.0),
        },
        _ => (i - 1.0, 0.0),
    }
}

pub fn diagram_json(family: &str, rank: usize) -> Result<String, String> {
    let rs = root_system(family, rank)?;
    let spec = rs.spec();
    let comin = special::cominuscule_nodes(&rs);
    let d = rs.symmetrizers();
    let nodes = (1..=rank)
        .map(|label| {
            let (x, y) = position(spec.family(), rank, label);
            Node {
                label,
                x,
                y,
                length: d[label - 1],
                cominuscule: comin.contains(&label),
            }
        })
        .collect();
    let c = rs.cartan();
    let mut edges = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            if c.get(i, j) == 0 {
                continue;
            }
            let bonds = c.get(i, j) * c.get(j, i);
            let long_end = match d[i].cmp(&d[j]) {
                std::cmp::Ordering::Greater => Some(i + 1),
                std::cmp::Ordering::Less => Some(j + 1),
                std::cmp::Ordering::Equal => None,
            };
            edges.push(Edge {
                from: i + 1,
                to: j + 1,
                bonds,
                long_end,
            });
        }
    }
    let out = Diagram {
        name: spec.to_string(),
        nodes,
        edges,
        positive_roots: rs.positive_roots().len(),
        highest_root: rs.highest_root().coeffs().to_vec(),
    };
    Ok(serde_json::to_string(&out).expect("plain data"))
}

fn parse_nodes(list: &str) -> Result<Vec<usize>, String> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad node label `{t}`")))
        .collect()
}

fn flag_variety(family: &str, rank: usize, parabolic: &str) -> Result<FlagVariety, String> {
    let rs = root_system(family, rank)?;
    let par = ParabolicSubset::new(parse_nodes(parabolic)?, rank).map_err(|e| e.to_string())?;
    FlagVariety::new(rs, par).map_err(|e| e.to_string())
}

pub fn classify_json(
    family: &str,
    rank: usize,
    parabolic: &str,
    codim: i64,
    with_cones: bool,
) -> Result<String, String> {
    let fv = flag_variety(family, rank, parabolic)?;
    let bl = BlowUp::new(fv, codim).map_err(|e| e.to_string())?;
    let report = ClassifyReport::build(&bl, with_cones).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&report).expect("plain data"))
}

pub fn codim_sweep_json(family: &str, rank: usize, parabolic: &str) -> Result<String, String> {
    let fv = flag_variety(family, rank, parabolic)?;
    let sweep = CodimSweep::build(&fv).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&sweep).expect("plain data"))
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Node positions, bonds and arrows for drawing the Dynkin diagram.
#[wasm_bindgen]
pub fn diagram(family: &str, rank: usize) -> Result<String, JsError> {
    js(diagram_json(family, rank))
}

/// Verdict, β values, margins and `-K` for `Bl_Z(G/P)`, `parabolic` listing `S_P`.
#[wasm_bindgen]
pub fn classify(family: &str, rank: usize, parabolic: &str, codim: i32) -> Result<String, JsError> {
    js(classify_json(family, rank, parabolic, codim.into(), false))
}

/// As [`classify`], plus nef and Mori generators and their pairing.
#[wasm_bindgen]
pub fn cones(family: &str, rank: usize, parabolic: &str, codim: i32) -> Result<String, JsError> {
    js(classify_json(family, rank, parabolic, codim.into(), true))
}

/// Verdict for every codimension `2..=dim`.
#[wasm_bindgen]
pub fn codim_sweep(family: &str, rank: usize, parabolic: &str) -> Result<String, JsError> {
    js(codim_sweep_json(family, rank, parabolic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn gr24_classify() {
        let v: Value =
            serde_json::from_str(&classify_json("A", 3, "1,3", 4, false).unwrap()).unwrap();
        assert_eq!(v["verdict"], "FANO");
        assert_eq!(v["betas"]["2"], 3);
        assert!(v.get("cones").is_none());
    }

    #[test]
    fn cones_carry_identity() {
        let v: Value = serde_json::from_str(&classify_json("A", 2, "", 2, true).unwrap()).unwrap();
        let m = &v["cones"]["intersection_matrix"];
        assert_eq!(m, &serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
    }

    #[test]
    fn sweep_on_gr25() {
        let v: Value = serde_json::from_str(&codim_sweep_json("A", 4, "1,3,4").unwrap()).unwrap();
        let verdicts = v["verdicts"].as_array().unwrap();
        assert_eq!(verdicts.len(), 5);
        assert_eq!(verdicts[3], serde_json::json!([5, "FANO"]));
        assert_eq!(verdicts[4], serde_json::json!([6, "WEAK_FANO_NOT_FANO"]));
    }

    #[test]
    fn diagrams() {
        let v: Value = serde_json::from_str(&diagram_json("G", 2).unwrap()).unwrap();
        assert_eq!(v["edges"][0]["bonds"], 3);
        assert_eq!(v["edges"][0]["long_end"], 2);
        let v: Value = serde_json::from_str(&diagram_json("E", 6).unwrap()).unwrap();
        assert_eq!(v["edges"].as_array().unwrap().len(), 5);
        assert_eq!(v["positive_roots"], 36);
        let v: Value = serde_json::from_str(&diagram_json("B", 3).unwrap()).unwrap();
        assert_eq!(v["edges"][1]["long_end"], 2);
    }

    #[test]
    fn errors_are_messages() {
        assert!(classify_json("A", 2, "", 5, false)
            .unwrap_err()
            .contains("codimension"));
        assert!(diagram_json("A", 9).is_err());
        assert!(codim_sweep_json("A", 2, "1,2").is_err());
        assert!(classify_json("A", 3, "z", 2, false).is_err());
    }
}
