//! The structure-constant text format.
//!
//! ```text
//! # comment
//! field GF(5)
//! dim 4
//! 1 2 3:1
//! 1 3 4:1 2:-1/2
//! ```
//!
//! A bracket line `i j k:c ...` lists `[x_i, x_j] = sum c x_k` with `i < j`.
//! Unlisted brackets are zero; coefficients are exact `INT` or `INT/POSINT`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use nilpotent_lie::field::{Field, FieldElem};
use nilpotent_lie::liealg::LieAlgebra;

use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct AlgebraFile {
    pub field: Field,
    pub dim: usize,
    pub brackets: Vec<(usize, usize, Vec<(usize, FieldElem)>)>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut field = None;
        let mut dim = None;
        let mut raw: Vec<(usize, Vec<&str>)> = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let no = no + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks[0] {
                "field" => {
                    if field.is_some() || toks.len() != 2 {
                        return Err(syntax(no, "expected a single `field Q|GF(p)` line"));
                    }
                    field = Some(toks[1].parse::<Field>().map_err(|e| syntax(no, &e.to_string()))?);
                }
                "dim" => {
                    if dim.is_some() || toks.len() != 2 {
                        return Err(syntax(no, "expected a single `dim n` line"));
                    }
                    dim = Some(parse_index(toks[1]).ok_or_else(|| syntax(no, "dimension must be a non-negative integer"))?);
                }
                _ => raw.push((no, toks)),
            }
        }
        let field = field.ok_or_else(|| CliError::Usage("missing `field` line".into()))?;
        let dim = dim.ok_or_else(|| CliError::Usage("missing `dim` line".into()))?;
        let mut seen = BTreeSet::new();
        let mut brackets = Vec::new();
        for (no, toks) in raw {
            if toks.len() < 2 {
                return Err(syntax(no, "bracket lines read `i j k:c ...`"));
            }
            let i = parse_index(toks[0]).ok_or_else(|| syntax(no, "bad index"))?;
            let j = parse_index(toks[1]).ok_or_else(|| syntax(no, "bad index"))?;
            if i == 0 || j > dim || i >= j {
                return Err(syntax(no, &format!("need 1 <= i < j <= {dim}, got {i} {j}")));
            }
            if !seen.insert((i, j)) {
                return Err(syntax(no, &format!("bracket [x{i},x{j}] given twice")));
            }
            let mut terms = Vec::new();
            for t in &toks[2..] {
                let (k, c) = t.split_once(':').ok_or_else(|| syntax(no, &format!("`{t}` is not of the form k:c")))?;
                let k = parse_index(k).ok_or_else(|| syntax(no, "bad index"))?;
                if k == 0 || k > dim {
                    return Err(syntax(no, &format!("basis index {k} outside 1..={dim}")));
                }
                let c = field.parse_elem(c).map_err(|e| syntax(no, &e.to_string()))?;
                terms.push((k, c));
            }
            brackets.push((i, j, terms));
        }
        Ok(AlgebraFile { field, dim, brackets })
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        AlgebraFile { field: l.field(), dim: l.dim(), brackets: l.sparse() }
    }

    pub fn algebra(&self) -> Result<LieAlgebra, CliError> {
        let entries: Vec<_> = self
            .brackets
            .iter()
            .flat_map(|(i, j, terms)| terms.iter().map(move |(k, c)| (*i, *j, *k, c.clone())))
            .collect();
        LieAlgebra::from_entries(self.field, self.dim, &entries).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "field {}", self.field).unwrap();
        writeln!(out, "dim {}", self.dim).unwrap();
        for (i, j, terms) in &self.brackets {
            let ts: Vec<String> = terms.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("{k}:{c}")).collect();
            if !ts.is_empty() {
                writeln!(out, "{i} {j} {}", ts.join(" ")).unwrap();
            }
        }
        out
    }
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn syntax(line: usize, msg: &str) -> CliError {
    CliError::Usage(format!("line {line}: {msg}"))
}

/// Parses `--cocycles`: forms separated by `;`, each a whitespace separated
/// list of the `n(n-1)/2` coefficients of `Δ12, Δ13, ..., Δ(n-1)n`.
pub fn parse_cocycles(field: Field, n: usize, s: &str) -> Result<Vec<Vec<FieldElem>>, CliError> {
    let np = n * n.saturating_sub(1) / 2;
    s.split(';')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| {
            let v: Vec<FieldElem> = part
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| field.parse_elem(t).map_err(|e| CliError::Usage(e.to_string())))
                .collect::<Result<_, _>>()?;
            if v.len() != np {
                return Err(CliError::Usage(format!("a cocycle needs {np} coefficients, got {}", v.len())));
            }
            Ok(v)
        })
        .collect()
}
