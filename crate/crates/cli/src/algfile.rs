//! The line-oriented `.alg` format.
//!
//! ```text
//! # Λ₀
//! vertices 2 3 4
//! arrow a 2 3
//! arrow b 3 4
//! relation a b
//! module P2
//!   dim 1 1 0
//!   map a [[1]]
//! ```
//!
//! `relation a b` is the path `a` followed by `b`. Matrices are row lists
//! of shape `dim(target) × dim(source)` with integer entries; omitted maps
//! are zero.

use pwt_core::modrep::Representation;
use pwt_core::quivalg::{BoundQuiverAlgebra, Quiver};
use pwt_core::xfield::Matrix;
use pwt_core::Field;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: pwt_core::Error,
    },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleBlock {
    pub name: String,
    pub line: usize,
    pub dims: Option<Vec<usize>>,
    pub maps: Vec<(usize, String, Vec<Vec<i64>>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<(usize, Vec<String>)>,
    pub modules: Vec<ModuleBlock>,
}

pub fn parse_text(text: &str) -> Result<AlgFile, ParseError> {
    let mut out = AlgFile::default();
    let mut vertices_line = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indented = content.starts_with(' ') || content.starts_with('\t');
        let mut words = content.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        if indented {
            let Some(block) = out.modules.last_mut() else {
                return Err(syntax(line, "indented line outside a module block"));
            };
            match keyword {
                "dim" => {
                    if block.dims.is_some() {
                        return Err(syntax(line, "repeated `dim`"));
                    }
                    let dims = words
                        .map(|w| w.parse::<usize>().map_err(|_| syntax(line, format!("bad dimension `{w}`"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    block.dims = Some(dims);
                }
                "map" => {
                    let arrow = words.next().ok_or_else(|| syntax(line, "`map` needs an arrow name"))?;
                    let rest = content.trim_start();
                    let rest = rest["map".len()..].trim_start()[arrow.len()..].trim();
                    let rows: Vec<Vec<i64>> = serde_json::from_str(rest)
                        .map_err(|e| syntax(line, format!("bad matrix `{rest}`: {e}")))?;
                    block.maps.push((line, arrow.to_string(), rows));
                }
                other => return Err(syntax(line, format!("unknown module entry `{other}`"))),
            }
            continue;
        }
        let args: Vec<String> = words.map(str::to_string).collect();
        match keyword {
            "vertices" => {
                if vertices_line.is_some() {
                    return Err(syntax(line, "repeated `vertices`"));
                }
                if args.is_empty() {
                    return Err(syntax(line, "`vertices` needs at least one name"));
                }
                vertices_line = Some(line);
                out.vertices = args;
            }
            "arrow" => {
                let [name, s, t] = <[String; 3]>::try_from(args)
                    .map_err(|_| syntax(line, "expected `arrow NAME SOURCE TARGET`"))?;
                for v in [&s, &t] {
                    if !out.vertices.contains(v) {
                        return Err(syntax(line, format!("unknown vertex `{v}`")));
                    }
                }
                if out.arrows.iter().any(|a| a.0 == name) {
                    return Err(syntax(line, format!("duplicate arrow `{name}`")));
                }
                out.arrows.push((name, s, t));
            }
            "relation" => {
                if args.len() < 2 {
                    return Err(syntax(line, "a relation is a path of at least two arrows"));
                }
                let mut prev: Option<&(String, String, String)> = None;
                for name in &args {
                    let a = out
                        .arrows
                        .iter()
                        .find(|a| &a.0 == name)
                        .ok_or_else(|| syntax(line, format!("unknown arrow `{name}`")))?;
                    if let Some(p) = prev {
                        if p.2 != a.1 {
                            return Err(syntax(
                                line,
                                format!("`{}` ends at {} but `{}` starts at {}", p.0, p.2, a.0, a.1),
                            ));
                        }
                    }
                    prev = Some(a);
                }
                out.relations.push((line, args));
            }
            "module" => {
                let [name] = <[String; 1]>::try_from(args).map_err(|_| syntax(line, "expected `module NAME`"))?;
                if out.modules.iter().any(|m| m.name == name) {
                    return Err(syntax(line, format!("duplicate module `{name}`")));
                }
                out.modules.push(ModuleBlock {
                    name,
                    line,
                    ..Default::default()
                });
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }
    if vertices_line.is_none() {
        return Err(syntax(text.lines().count().max(1), "missing `vertices` line"));
    }
    Ok(out)
}

pub struct Parsed {
    pub algebra: BoundQuiverAlgebra,
    pub modules: Vec<(String, Representation)>,
}

impl Parsed {
    pub fn module(&self, name: &str) -> Option<&Representation> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

impl AlgFile {
    pub fn build(&self, field: Field, seed: u64) -> Result<Parsed, ParseError> {
        let quiver = Quiver::new(&self.vertices, &self.arrows).map_err(|source| ParseError::Invalid { line: 1, source })?;
        let relations: Vec<Vec<String>> = self.relations.iter().map(|(_, r)| r.clone()).collect();
        let first_rel = self.relations.first().map_or(1, |r| r.0);
        let algebra = BoundQuiverAlgebra::new(quiver, &relations, field, seed)
            .map_err(|source| ParseError::Invalid { line: first_rel, source })?;
        let mut modules = Vec::new();
        for block in &self.modules {
            modules.push((block.name.clone(), self.build_module(block, &algebra)?));
        }
        Ok(Parsed { algebra, modules })
    }

    fn build_module(&self, block: &ModuleBlock, algebra: &BoundQuiverAlgebra) -> Result<Representation, ParseError> {
        let dims = block
            .dims
            .clone()
            .ok_or_else(|| syntax(block.line, format!("module `{}` has no `dim` line", block.name)))?;
        if dims.len() != self.vertices.len() {
            return Err(syntax(
                block.line,
                format!("`dim` has {} entries for {} vertices", dims.len(), self.vertices.len()),
            ));
        }
        let field = algebra.field();
        let mut maps = Vec::new();
        for (name, s, t) in &self.arrows {
            let (si, ti) = (algebra.vertex_index(s).unwrap_or(0), algebra.vertex_index(t).unwrap_or(0));
            let (rows, cols) = (dims[ti], dims[si]);
            let given: Vec<_> = block.maps.iter().filter(|m| &m.1 == name).collect();
            let m = match given.as_slice() {
                [] => Matrix::zeros(field, rows, cols),
                [(line, _, data)] => {
                    let ok = if data.is_empty() {
                        rows == 0
                    } else {
                        data.len() == rows && data.iter().all(|r| r.len() == cols)
                    };
                    if !ok {
                        return Err(ParseError::Invalid {
                            line: *line,
                            source: pwt_core::Error::InvalidRepresentation(format!(
                                "map {name} must be {rows}×{cols}"
                            )),
                        });
                    }
                    if rows == 0 {
                        Matrix::zeros(field, 0, cols)
                    } else {
                        Matrix::from_rows(field, data)
                    }
                }
                [_, (line, ..), ..] => return Err(syntax(*line, format!("repeated map for `{name}`"))),
            };
            maps.push(m);
        }
        for (line, name, _) in &block.maps {
            if !self.arrows.iter().any(|a| &a.0 == name) {
                return Err(syntax(*line, format!("unknown arrow `{name}`")));
            }
        }
        Representation::new(algebra.category(), dims, maps).map_err(|source| ParseError::Invalid {
            line: block.line,
            source,
        })
    }
}

pub fn parse_alg(text: &str, field: Field, seed: u64) -> Result<Parsed, ParseError> {
    parse_text(text)?.build(field, seed)
}
