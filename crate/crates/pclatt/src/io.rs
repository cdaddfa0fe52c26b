//! The lattice text format, DOT export, and the bundled example lattices.
//!
//! Text format (UTF-8, line oriented):
//!
//! ```text
//! # comment
//! elements: 0 a b c 1
//! cover: 0 a
//! cover: 0 b
//! ```
//!
//! Line 1 (ignoring blanks/comments) declares the elements; every further
//! line declares one cover pair `lower upper`. Labels match
//! `[A-Za-z0-9_*']+`. Serialization writes elements in internal order and
//! covers sorted by index, so `parse(serialize(l)) == l`.

use thiserror::Error;

use crate::lattice::{FiniteLattice, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `elements: <label> ...` first")]
    MissingElements { line: usize },
    #[error("line {line}: expected `cover: <lower> <upper>`, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("line {line}: cover needs exactly two labels")]
    BadCover { line: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Parse the lattice text format.
pub fn parse_lattice(text: &str) -> Result<FiniteLattice, ParseError> {
    let mut labels: Option<Vec<&str>> = None;
    let mut covers: Vec<(&str, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("elements:") {
            if labels.is_some() {
                return Err(ParseError::BadLine {
                    line,
                    text: trimmed.to_string(),
                });
            }
            labels = Some(rest.split_whitespace().collect());
        } else if let Some(rest) = trimmed.strip_prefix("cover:") {
            if labels.is_none() {
                return Err(ParseError::MissingElements { line });
            }
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let [lo, hi] = parts[..] else {
                return Err(ParseError::BadCover { line });
            };
            covers.push((lo, hi));
        } else {
            return Err(ParseError::BadLine {
                line,
                text: trimmed.to_string(),
            });
        }
    }
    let labels = labels.ok_or(ParseError::MissingElements {
        line: text.lines().count() + 1,
    })?;
    Ok(FiniteLattice::build(&labels, &covers)?)
}

/// Serialize to the text format: elements in internal order, covers sorted.
pub fn serialize_lattice(l: &FiniteLattice) -> String {
    let mut out = String::from("elements:");
    for lab in l.labels() {
        out.push(' ');
        out.push_str(lab);
    }
    out.push('\n');
    for (lo, hi) in l.covers() {
        out.push_str(&format!("cover: {} {}\n", l.label(lo), l.label(hi)));
    }
    out
}

/// DOT export: one node per element, one edge per cover (lower -> upper),
/// drawn bottom-up.
pub fn export_dot(l: &FiniteLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for lab in l.labels() {
        out.push_str(&format!("  \"{lab}\";\n"));
    }
    for (lo, hi) in l.covers() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", l.label(lo), l.label(hi)));
    }
    out.push_str("}\n");
    out
}

/// The three example lattices bundled into the binary, so that commands
/// like `pclatt suite` run with no external files. `fig1a` is the pentagon
/// N5, `fig1b` a six-element Stone lattice, `fig1c` a diamond with an
/// extra top.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    Fig1a,
    Fig1b,
    Fig1c,
}

const FIG1A: &str = "\
elements: 0 a b c 1
cover: 0 a
cover: 0 b
cover: a c
cover: b 1
cover: c 1
";

const FIG1B: &str = "\
elements: 0 a b c d 1
cover: 0 a
cover: 0 b
cover: a c
cover: b c
cover: b d
cover: c 1
cover: d 1
";

const FIG1C: &str = "\
elements: 0 a b c 1
cover: 0 a
cover: 0 b
cover: a c
cover: b c
cover: c 1
";

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::Fig1a, Fixture::Fig1b, Fixture::Fig1c];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Fig1a => "fig1a",
            Fixture::Fig1b => "fig1b",
            Fixture::Fig1c => "fig1c",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == name)
    }

    /// The embedded text in the lattice file format.
    pub fn text(self) -> &'static str {
        match self {
            Fixture::Fig1a => FIG1A,
            Fixture::Fig1b => FIG1B,
            Fixture::Fig1c => FIG1C,
        }
    }

    pub fn lattice(self) -> FiniteLattice {
        parse_lattice(self.text()).expect("embedded fixture parses")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_two_chain() {
        let l = parse_lattice("elements: 0 1\ncover: 0 1\n").unwrap();
        assert_eq!(l.size(), 2);
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
    }

    #[test]
    fn parse_reports_cycles() {
        let err = parse_lattice("elements: 0 1\ncover: 1 0\ncover: 0 1\n").unwrap_err();
        assert_eq!(err, ParseError::Lattice(LatticeError::NotAPoset));
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_lattice("elements: 0 1\n\nnonsense here\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::BadLine {
                line: 3,
                text: "nonsense here".to_string()
            }
        );
        let err = parse_lattice("cover: 0 1\n").unwrap_err();
        assert_eq!(err, ParseError::MissingElements { line: 1 });
        let err = parse_lattice("elements: 0 1\ncover: 0\n").unwrap_err();
        assert_eq!(err, ParseError::BadCover { line: 2 });
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let l = parse_lattice("# chain\n\nelements: 0 1\n# edge\ncover: 0 1\n").unwrap();
        assert_eq!(l.size(), 2);
    }

    #[test]
    fn round_trip_fixtures() {
        for f in Fixture::ALL {
            let l = f.lattice();
            let text = serialize_lattice(&l);
            let back = parse_lattice(&text).unwrap();
            assert_eq!(l, back, "{}", f.name());
            // fixture text is already in canonical form
            assert_eq!(text, f.text(), "{}", f.name());
        }
    }

    #[test]
    fn dot_export_two_chain() {
        let l = parse_lattice("elements: 0 1\ncover: 0 1\n").unwrap();
        let dot = export_dot(&l);
        assert_eq!(
            dot,
            "digraph lattice {\n  rankdir=BT;\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\";\n}\n"
        );
    }

    #[test]
    fn dot_edge_counts() {
        let edges = |f: Fixture| {
            export_dot(&f.lattice())
                .lines()
                .filter(|l| l.contains("->"))
                .count()
        };
        assert_eq!(edges(Fixture::Fig1a), 5);
        assert_eq!(edges(Fixture::Fig1b), 7);
        assert_eq!(edges(Fixture::Fig1c), 5);
    }

    #[test]
    fn fixture_shapes() {
        let a = Fixture::Fig1a.lattice();
        assert_eq!(a.size(), 5);
        let b = Fixture::Fig1b.lattice();
        assert_eq!(b.size(), 6);
        let c = Fixture::Fig1c.lattice();
        assert_eq!(c.size(), 5);
        // fig1a is the pentagon: 0 < a < c < 1 and 0 < b < 1
        let (x, y) = (a.element("a").unwrap(), a.element("b").unwrap());
        assert_eq!(a.meet(x, y), a.bottom());
        assert_eq!(a.join(x, y), a.top());
        assert!(!a.leq(x, y) && !a.leq(y, x));
    }
}
