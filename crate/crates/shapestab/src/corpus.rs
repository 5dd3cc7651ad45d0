//! Regression corpus of worked examples.
//!
//! Each `.problem` or `.matrix` file records its expected verdict in comment
//! lines:
//!
//! ```text
//! # expect: shape-equivalence | not-shape-equivalence   (problem files)
//! # expect: stabilizes N | never-stabilizes             (matrix files)
//! # expect-ranks: 2, 2                                   (optional)
//! # expect-stable-rank: 0                                (optional)
//! ```

use std::fs;
use std::io;
use std::path::Path;

use shapestab_core::{decide_stabilization, image_chain, DEFAULT_MAX_STEPS};

use crate::matrix_file::parse_matrix;
use crate::problem::parse_problem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kind {
    Problem,
    Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub kind: Kind,
    pub text: String,
}

macro_rules! bundled_entry {
    ($file:literal, $kind:expr) => {
        Entry {
            name: $file.to_string(),
            kind: $kind,
            text: include_str!(concat!("../corpus/", $file)).to_string(),
        }
    };
}

pub fn bundled() -> Vec<Entry> {
    vec![
        bundled_entry!("identity.problem", Kind::Problem),
        bundled_entry!("plykin_b.matrix", Kind::Matrix),
        bundled_entry!("plykin_b_gf2.matrix", Kind::Matrix),
        bundled_entry!("solenoid.problem", Kind::Problem),
        bundled_entry!("solid_torus_k-1.problem", Kind::Problem),
        bundled_entry!("solid_torus_k-2.problem", Kind::Problem),
        bundled_entry!("solid_torus_k0.problem", Kind::Problem),
        bundled_entry!("solid_torus_k1.problem", Kind::Problem),
        bundled_entry!("solid_torus_k2.problem", Kind::Problem),
        bundled_entry!("solid_torus_k3.problem", Kind::Problem),
        bundled_entry!("stallings.problem", Kind::Problem),
        bundled_entry!("trivial.problem", Kind::Problem),
    ]
}

/// Loads every `.problem` and `.matrix` file in `dir`, sorted by name.
pub fn read_dir(dir: &Path) -> io::Result<Vec<Entry>> {
    let mut out = Vec::new();
    for item in fs::read_dir(dir)? {
        let path = item?.path();
        let kind = match path.extension().and_then(|e| e.to_str()) {
            Some("problem") => Kind::Problem,
            Some("matrix") => Kind::Matrix,
            _ => continue,
        };
        out.push(Entry {
            name: path.file_name().unwrap_or_default().to_string_lossy().into_owned(),
            kind,
            text: fs::read_to_string(&path)?,
        });
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

fn directive<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines().find_map(|l| {
        l.trim()
            .strip_prefix('#')
            .and_then(|c| c.trim().strip_prefix(key))
            .and_then(|rest| rest.strip_prefix(':'))
            .map(str::trim)
    })
}

fn parse_ranks(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad expect-ranks `{s}`")))
        .collect()
}

fn compare<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, actual: T) -> Result<(), String> {
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected:?}, got {actual:?}"))
    }
}

/// Checks one entry against its recorded expectations, returning a one-line
/// summary on success.
pub fn run(entry: &Entry) -> Result<String, String> {
    let expect = directive(&entry.text, "expect").ok_or("no `# expect:` line")?;
    let ranks = directive(&entry.text, "expect-ranks").map(parse_ranks).transpose()?;
    let stable_rank = directive(&entry.text, "expect-stable-rank")
        .map(|s| s.parse::<usize>().map_err(|_| format!("bad expect-stable-rank `{s}`")))
        .transpose()?;
    match entry.kind {
        Kind::Problem => {
            let p = parse_problem(&entry.text).map_err(|e| e.to_string())?;
            let report = decide_stabilization(&p.endomorphism()).map_err(|e| e.to_string())?;
            let shape_equivalence = match expect {
                "shape-equivalence" => true,
                "not-shape-equivalence" => false,
                other => return Err(format!("unknown expectation `{other}`")),
            };
            compare("shape equivalence", shape_equivalence, report.shape_equivalence)?;
            if let Some(r) = ranks {
                compare("ranks", r, report.ranks.clone())?;
            }
            if let Some(r) = stable_rank {
                compare("stable rank", Some(r), report.stable_rank)?;
            }
            Ok(format!(
                "{} (ranks {:?})",
                if report.shape_equivalence {
                    "shape equivalence"
                } else {
                    "not a shape equivalence"
                },
                report.ranks
            ))
        }
        Kind::Matrix => {
            let a = parse_matrix(&entry.text).map_err(|e| e.to_string())?;
            let report = image_chain(&a, DEFAULT_MAX_STEPS);
            let expected_index = match expect.split_whitespace().collect::<Vec<_>>().as_slice() {
                ["stabilizes", n] => Some(n.parse::<usize>().map_err(|_| format!("bad index `{n}`"))?),
                ["never-stabilizes"] => None,
                _ => return Err(format!("unknown expectation `{expect}`")),
            };
            compare("stabilizes", Some(expected_index.is_some()), report.stabilizes())?;
            compare("stabilization index", expected_index, report.stabilization_index())?;
            if let Some(r) = ranks {
                let actual: Vec<usize> = report.images.iter().map(|b| b.rank()).collect();
                compare("ranks", r, actual)?;
            }
            if let Some(r) = stable_rank {
                compare("stable rank", Some(r), report.stable_rank)?;
            }
            Ok(match expected_index {
                Some(n) => format!("stabilizes at n = {n}"),
                None => "never stabilizes".to_string(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commands::corpus;

    #[test]
    fn bundled_corpus_passes() {
        for entry in bundled() {
            assert!(run(&entry).is_ok(), "{}: {:?}", entry.name, run(&entry));
        }
        let o = corpus(None);
        assert_eq!(o.code, 0, "{}", o.stdout);
        assert!(o.stdout.contains("12 passed, 0 failed"));
    }

    #[test]
    fn bundled_matches_directory() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
        assert_eq!(read_dir(&dir).unwrap(), bundled());
    }

    #[test]
    fn tampered_expectation_fails() {
        let dir = tempfile::tempdir().unwrap();
        for entry in bundled() {
            let text = if entry.name == "stallings.problem" {
                entry.text.replace("not-shape-equivalence", "shape-equivalence")
            } else {
                entry.text.clone()
            };
            fs::write(dir.path().join(&entry.name), text).unwrap();
        }
        let o = corpus(Some(dir.path()));
        assert_eq!(o.code, 1);
        assert!(o.stdout.contains("FAIL  stallings.problem"));
    }

    #[test]
    fn tampered_ranks_fail() {
        let entry = Entry {
            name: "t.matrix".into(),
            kind: Kind::Matrix,
            text: "# expect: stabilizes 3\n# expect-ranks: 3, 2, 2, 0, 0\nring: Z\ndim: 3\n0 0 0\n0 0 1\n1 0 0\n".into(),
        };
        assert!(run(&entry).unwrap_err().starts_with("ranks"));
    }

    #[test]
    fn missing_expectation_fails() {
        let entry = Entry {
            name: "x.problem".into(),
            kind: Kind::Problem,
            text: "generators: x\nx -> x\n".into(),
        };
        assert!(run(&entry).is_err());
    }

    #[test]
    fn empty_directory_warns() {
        let dir = tempfile::tempdir().unwrap();
        let o = corpus(Some(dir.path()));
        assert_eq!(o.code, 0);
        assert!(o.stderr.contains("warning"));
    }

    #[test]
    fn missing_directory_is_error() {
        assert_eq!(corpus(Some(Path::new("/nonexistent/corpus"))).code, 2);
    }
}
