//! JSON documents for ideals and clutters.
//!
//! ```json
//! {"n": 4, "gens": ["x1*x2", "x3^2*x4"]}
//! {"vertex_count": 5, "edges": [[1, 2, 3], [3, 4, 5]]}
//! ```
//!
//! Variables and vertices are 1-based. Errors carry the line and column of
//! the offending token in the document.

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Largest variable count accepted from a document.
pub const MAX_VARIABLES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDocument {
    pub n: usize,
    pub gens: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClutterDocument {
    pub vertex_count: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Byte offsets of the string literals inside the array following `key`.
fn string_offsets_in_array(text: &str, key: &str) -> Vec<usize> {
    let bytes = text.as_bytes();
    let quoted = format!("\"{key}\"");
    let Some(k) = text.find(&quoted) else {
        return Vec::new();
    };
    let Some(open) = text[k..].find('[').map(|o| k + o) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut i = open + 1;
    while i < bytes.len() && bytes[i] != b']' {
        if bytes[i] == b'"' {
            out.push(i);
            i += 1;
            while i < bytes.len() && bytes[i] != b'"' {
                i += if bytes[i] == b'\\' { 2 } else { 1 };
            }
        }
        i += 1;
    }
    out
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.chars().rev().take_while(|&c| c != '\n').count() + 1;
    (line, column)
}

/// Parses an ideal document, minimalising the generators. Non-minimal or
/// repeated generators produce warnings.
pub fn parse_ideal(text: &str) -> Result<Parsed<MonomialIdeal>> {
    let doc: IdealDocument = serde_json::from_str(text).map_err(json_error)?;
    if doc.n > MAX_VARIABLES {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("at most {MAX_VARIABLES} variables are supported"),
        });
    }
    let offsets = string_offsets_in_array(text, "gens");
    let locate = |index: usize, inner_column: usize, message: String| {
        let (line, column) = match offsets.get(index) {
            Some(&o) => {
                let (l, c) = line_column(text, o);
                // Skip the opening quote.
                (l, c + inner_column)
            }
            None => (1, 1),
        };
        Error::Parse {
            line,
            column,
            message,
        }
    };
    let mut monomials = Vec::with_capacity(doc.gens.len());
    for (index, g) in doc.gens.iter().enumerate() {
        let m = Monomial::parse(g, doc.n).map_err(|e| match e {
            Error::Parse { column, message, .. } => locate(index, column, message),
            other => other,
        })?;
        if m.is_one() {
            return Err(locate(index, 1, "the unit ideal is not supported".into()));
        }
        monomials.push(m);
    }
    let ideal = MonomialIdeal::minimalize(doc.n, monomials.clone())?;
    let mut warnings = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for m in &monomials {
        if !seen.insert(m.clone()) {
            warnings.push(format!("duplicate generator {m} ignored"));
        } else if ideal.gens().binary_search(m).is_err() {
            let divisor = ideal
                .gens()
                .iter()
                .find(|g| g.divides(m))
                .expect("a dropped generator has a divisor");
            warnings.push(format!("generator {m} is a multiple of {divisor} and was dropped"));
        }
    }
    Ok(Parsed {
        value: ideal,
        warnings,
    })
}

pub fn ideal_document(ideal: &MonomialIdeal) -> IdealDocument {
    IdealDocument {
        n: ideal.nvars(),
        gens: ideal.gens().iter().map(ToString::to_string).collect(),
    }
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    serde_json::to_string_pretty(&ideal_document(ideal)).expect("documents serialise")
}

pub fn parse_clutter(text: &str) -> Result<Clutter> {
    let doc: ClutterDocument = serde_json::from_str(text).map_err(json_error)?;
    Clutter::from_one_based(doc.vertex_count, &doc.edges)
}

pub fn clutter_document(clutter: &Clutter) -> ClutterDocument {
    ClutterDocument {
        vertex_count: clutter.vertex_count(),
        edges: clutter.edges_one_based(),
    }
}

pub fn clutter_to_json(clutter: &Clutter) -> String {
    serde_json::to_string_pretty(&clutter_document(clutter)).expect("documents serialise")
}
