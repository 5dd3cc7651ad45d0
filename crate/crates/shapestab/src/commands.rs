//! Command implementations. Each returns an [`Outcome`] instead of printing so
//! the binary and the tests share one code path.
//!
//! Exit codes: `0` for a positive verdict, `1` for a negative one, `2` for
//! errors and inconclusive runs.

use std::fmt::Write as _;
use std::path::Path;

use shapestab_core::{
    abelianize, decide_stabilization, homology_verdict, image_chain, stable_image_isomorphism_check,
    Matrix, Ring, SubgroupHandle, DEFAULT_MAX_STEPS, DEFAULT_MAX_WORD_LEN,
};

use crate::matrix_file::{self, parse_matrix};
use crate::problem::{parse_problem, parse_word, strip_comment, ProblemFile};
use crate::report::{human_report, matrix_report, VerdictJson};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub(crate) fn ok(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    pub fn error(message: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub json: bool,
    pub handlebody: bool,
    pub max_word_len: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            json: false,
            handlebody: false,
            max_word_len: DEFAULT_MAX_WORD_LEN,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixOptions {
    pub max_steps: usize,
    pub degree: Option<usize>,
    pub surface: bool,
}

impl Default for MatrixOptions {
    fn default() -> Self {
        Self {
            max_steps: DEFAULT_MAX_STEPS,
            degree: None,
            surface: false,
        }
    }
}

fn load(text: &str) -> Result<ProblemFile, Outcome> {
    parse_problem(text).map_err(Outcome::error)
}

pub fn check(text: &str, opts: CheckOptions) -> Outcome {
    let problem = match load(text) {
        Ok(p) => p,
        Err(e) => return e,
    };
    let phi = problem.endomorphism().with_max_word_len(opts.max_word_len);
    let report = match decide_stabilization(&phi) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let handlebody = opts.handlebody || problem.handlebody;
    let stdout = if opts.json {
        let mut s = VerdictJson::from_report(&report, handlebody).to_json();
        s.push('\n');
        s
    } else {
        human_report(&report, handlebody)
    };
    Outcome::ok(if report.shape_equivalence { 0 } else { 1 }, stdout)
}

fn image_subgroup(problem: &ProblemFile) -> Result<SubgroupHandle, Outcome> {
    let phi = problem.endomorphism();
    SubgroupHandle::from_words(&problem.alphabet, phi.effective_images())
        .map_err(Outcome::error)
}

/// Whether `word` lies in `im Φ`: exit 0 if it does, 1 if not.
pub fn membership(text: &str, word: &str) -> Outcome {
    let problem = match load(text) {
        Ok(p) => p,
        Err(e) => return e,
    };
    let w = match parse_word(&problem.alphabet, word) {
        Ok(w) => w,
        Err(e) => return Outcome::error(format!("word `{word}`: {e}")),
    };
    let image = match image_subgroup(&problem) {
        Ok(h) => h,
        Err(e) => return e,
    };
    match image.contains(&w) {
        Ok(true) => Outcome::ok(0, "true\n".into()),
        Ok(false) => Outcome::ok(1, "false\n".into()),
        Err(e) => Outcome::error(e),
    }
}

/// Rank of `im Φ`.
pub fn rank(text: &str) -> Outcome {
    let problem = match load(text) {
        Ok(p) => p,
        Err(e) => return e,
    };
    match image_subgroup(&problem) {
        Ok(h) => Outcome::ok(0, format!("{}\n", h.rank())),
        Err(e) => e,
    }
}

/// The abelianized matrix, in matrix-file format.
pub fn abelianize_cmd(text: &str) -> Outcome {
    match load(text) {
        Ok(p) => Outcome::ok(0, matrix_file::to_text(&abelianize(&p.endomorphism()))),
        Err(e) => e,
    }
}

fn is_problem_file(text: &str) -> bool {
    text.lines()
        .map(strip_comment)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("generators:"))
}

/// Reads a matrix file, or a problem file whose endomorphism is abelianized.
/// The second component is the problem file's `surface` flag.
fn load_matrix(text: &str) -> Result<(Matrix, bool), Outcome> {
    if is_problem_file(text) {
        let p = load(text)?;
        Ok((abelianize(&p.endomorphism()), p.surface))
    } else {
        parse_matrix(text).map(|m| (m, false)).map_err(Outcome::error)
    }
}

/// Image chain of a matrix: exit 0 if it stabilizes, 1 if it never does, 2
/// if undecided. With a degree, the `ℤ₂` homology verdict is appended,
/// reducing integer matrices mod 2.
pub fn matrix(text: &str, opts: MatrixOptions) -> Outcome {
    let (a, file_surface) = match load_matrix(text) {
        Ok(m) => m,
        Err(e) => return e,
    };
    let report = image_chain(&a, opts.max_steps);
    let iso = match report.stabilizes() {
        Some(true) => stable_image_isomorphism_check(&a).ok(),
        _ => None,
    };
    let homology = match opts.degree {
        Some(d) => {
            let a2 = match a.ring() {
                Ring::Z => a.reduce_mod2(),
                Ring::Gf2 => a.clone(),
            };
            match homology_verdict(&a2, d, opts.surface || file_surface) {
                Ok(h) => Some(h),
                Err(e) => return Outcome::error(e),
            }
        }
        None => None,
    };
    let stdout = matrix_report(&report, iso, homology.as_ref());
    let code = match report.stabilizes() {
        Some(true) => 0,
        Some(false) => 1,
        None => 2,
    };
    Outcome::ok(code, stdout)
}

/// Runs the corpus in `dir`, or the bundled corpus when `dir` is `None`.
pub fn corpus(dir: Option<&Path>) -> Outcome {
    let entries = match dir {
        None => crate::corpus::bundled(),
        Some(d) => match crate::corpus::read_dir(d) {
            Ok(e) => e,
            Err(e) => return Outcome::error(format!("{}: {e}", d.display())),
        },
    };
    let mut out = Outcome::default();
    if entries.is_empty() {
        out.stderr.push_str("warning: corpus is empty\n");
        return out;
    }
    let mut failures = 0;
    for entry in &entries {
        match crate::corpus::run(entry) {
            Ok(summary) => {
                let _ = writeln!(out.stdout, "ok    {}: {summary}", entry.name);
            }
            Err(why) => {
                failures += 1;
                let _ = writeln!(out.stdout, "FAIL  {}: {why}", entry.name);
            }
        }
    }
    let _ = writeln!(
        out.stdout,
        "{} passed, {failures} failed",
        entries.len() - failures
    );
    out.code = i32::from(failures > 0);
    out
}
