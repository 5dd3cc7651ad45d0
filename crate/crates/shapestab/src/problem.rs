//! Problem files describing an endomorphism of a free group.
//!
//! ```text
//! # Φ(x) = x y², Φ(y) = x² y³
//! generators: x y
//! x -> x y^2
//! y -> x^2 y^3
//! conjugator: 1        # optional
//! flags: handlebody    # optional: handlebody, surface
//! ```
//!
//! Words are whitespace-separated tokens `name` or `name^k` with `k` a
//! nonzero integer; the identity is written `1` on its own.

use std::fmt::Write as _;

use shapestab_core::{Alphabet, FreeEndomorphism, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub alphabet: Alphabet,
    /// One image per generator, in alphabet order.
    pub images: Vec<Word>,
    pub conjugator: Word,
    pub handlebody: bool,
    pub surface: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed exponent in `{0}`")]
    MalformedExponent(String),
    #[error("`1` denotes the identity and must stand alone")]
    MisplacedIdentity,
    #[error("empty word (write `1` for the identity)")]
    EmptyWord,
    #[error("duplicate image line for `{0}`")]
    DuplicateImage(String),
    #[error("missing image line for `{0}`")]
    MissingImage(String),
    #[error("duplicate `{0}` line")]
    DuplicateDirective(&'static str),
    #[error("`generators:` line must come first")]
    MissingGenerators,
    #[error("unknown flag `{0}`")]
    UnknownFlag(String),
    #[error("invalid alphabet: {0}")]
    Alphabet(shapestab_core::Error),
    #[error("cannot parse `{0}`")]
    UnexpectedLine(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: SyntaxError,
}

/// Parses a word over `alphabet`.
pub fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word, SyntaxError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        [] => return Err(SyntaxError::EmptyWord),
        ["1"] => return Ok(Word::identity()),
        _ => {}
    }
    let mut letters = Vec::new();
    for token in tokens {
        if token == "1" {
            return Err(SyntaxError::MisplacedIdentity);
        }
        let (name, exp) = match token.split_once('^') {
            Some((name, exp)) => {
                let k: i64 = exp
                    .parse()
                    .ok()
                    .filter(|&k| k != 0)
                    .ok_or_else(|| SyntaxError::MalformedExponent(token.to_string()))?;
                (name, k)
            }
            None => (token, 1),
        };
        let g = alphabet
            .index_of(name)
            .ok_or_else(|| SyntaxError::UnknownGenerator(name.to_string()))?;
        let letter = if exp < 0 { Letter::neg(g) } else { Letter::pos(g) };
        letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
    }
    Ok(Word::reduce(letters))
}

pub(crate) fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code).trim()
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut alphabet: Option<(Alphabet, usize)> = None;
    let mut images: Vec<Option<Word>> = Vec::new();
    let mut conjugator: Option<Word> = None;
    let mut flags_seen = false;
    let mut handlebody = false;
    let mut surface = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |kind| ParseError { line, kind };
        let code = strip_comment(raw);
        if code.is_empty() {
            continue;
        }
        if let Some(rest) = code.strip_prefix("generators:") {
            if alphabet.is_some() {
                return Err(err(SyntaxError::DuplicateDirective("generators:")));
            }
            let a = Alphabet::new(rest.split_whitespace()).map_err(|e| err(SyntaxError::Alphabet(e)))?;
            images = vec![None; a.rank()];
            alphabet = Some((a, line));
            continue;
        }
        let Some((a, _)) = alphabet.as_ref() else {
            return Err(err(SyntaxError::MissingGenerators));
        };
        if let Some(rest) = code.strip_prefix("conjugator:") {
            if conjugator.is_some() {
                return Err(err(SyntaxError::DuplicateDirective("conjugator:")));
            }
            conjugator = Some(parse_word(a, rest).map_err(err)?);
        } else if let Some(rest) = code.strip_prefix("flags:") {
            if flags_seen {
                return Err(err(SyntaxError::DuplicateDirective("flags:")));
            }
            flags_seen = true;
            for flag in rest.split_whitespace() {
                match flag {
                    "handlebody" => handlebody = true,
                    "surface" => surface = true,
                    other => return Err(err(SyntaxError::UnknownFlag(other.to_string()))),
                }
            }
        } else if let Some((lhs, rhs)) = code.split_once("->") {
            let name = lhs.trim();
            let g = a
                .index_of(name)
                .ok_or_else(|| err(SyntaxError::UnknownGenerator(name.to_string())))?;
            if images[g].is_some() {
                return Err(err(SyntaxError::DuplicateImage(name.to_string())));
            }
            images[g] = Some(parse_word(a, rhs).map_err(err)?);
        } else {
            return Err(err(SyntaxError::UnexpectedLine(code.to_string())));
        }
    }

    let (alphabet, decl_line) = alphabet.ok_or(ParseError {
        line: text.lines().count().max(1),
        kind: SyntaxError::MissingGenerators,
    })?;
    let images = images
        .into_iter()
        .enumerate()
        .map(|(g, w)| {
            w.ok_or_else(|| ParseError {
                line: decl_line,
                kind: SyntaxError::MissingImage(alphabet.names()[g].clone()),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProblemFile {
        alphabet,
        images,
        conjugator: conjugator.unwrap_or_default(),
        handlebody,
        surface,
    })
}

impl ProblemFile {
    pub fn endomorphism(&self) -> FreeEndomorphism {
        FreeEndomorphism::new(self.alphabet.clone(), self.images.clone(), self.conjugator.clone())
            .expect("parsed words lie in the declared alphabet")
    }

    /// Serializes back into the problem-file grammar.
    pub fn to_text(&self) -> String {
        let a = &self.alphabet;
        let mut out = format!("generators: {}\n", a.names().join(" "));
        for (name, image) in a.names().iter().zip(&self.images) {
            let _ = writeln!(out, "{name} -> {}", image.display(a));
        }
        if !self.conjugator.is_identity() {
            let _ = writeln!(out, "conjugator: {}", self.conjugator.display(a));
        }
        let flags: Vec<&str> = [(self.handlebody, "handlebody"), (self.surface, "surface")]
            .into_iter()
            .filter_map(|(on, name)| on.then_some(name))
            .collect();
        if !flags.is_empty() {
            let _ = writeln!(out, "flags: {}", flags.join(" "));
        }
        out
    }
}
