//! Free-group arithmetic: alphabets, freely reduced words and endomorphisms
//! described by the images of the generators.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::{Error, Result};

/// Default cap on the length of any reduced word produced by
/// [`FreeEndomorphism::apply`].
pub const DEFAULT_MAX_WORD_LEN: usize = 1_000_000;

/// An ordered list of distinct generator names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::InvalidGeneratorName(name));
            }
            if out.contains(&name) {
                return Err(Error::DuplicateGenerator(name));
            }
            out.push(name);
        }
        Ok(Alphabet { names: out })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, generator: usize) -> Option<&str> {
        self.names.get(generator).map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Freely reduces `raw`, rejecting letters outside the alphabet.
    pub fn reduce(&self, raw: &[Letter]) -> Result<Word> {
        for letter in raw {
            self.check_letter(*letter)?;
        }
        Ok(Word::reduce(raw.iter().copied()))
    }

    /// Checks that every letter of `word` names a generator of this alphabet.
    pub fn check(&self, word: &Word) -> Result<()> {
        word.letters().iter().try_for_each(|&l| self.check_letter(l))
    }

    fn check_letter(&self, letter: Letter) -> Result<()> {
        if letter.generator < self.rank() {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                index: letter.generator,
                rank: self.rank(),
            })
        }
    }

    /// The generators as one-letter words.
    pub fn generators(&self) -> Vec<Word> {
        (0..self.rank()).map(Word::generator).collect()
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverted: bool,
}

impl Letter {
    pub const fn pos(generator: usize) -> Self {
        Letter {
            generator,
            inverted: false,
        }
    }

    pub const fn neg(generator: usize) -> Self {
        Letter {
            generator,
            inverted: true,
        }
    }

    pub const fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            inverted: !self.inverted,
        }
    }

    /// `+1` or `-1`.
    pub const fn sign(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word. The empty word is the identity.
///
/// Every constructor reduces, so two words are equal as group elements
/// exactly when they compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

fn push_reduced(out: &mut Vec<Letter>, letter: Letter) {
    if out.last() == Some(&letter.inverse()) {
        out.pop();
    } else {
        out.push(letter);
    }
}

impl Word {
    pub const fn identity() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn generator(generator: usize) -> Self {
        Word {
            letters: alloc::vec![Letter::pos(generator)],
        }
    }

    /// `g^k` for any integer `k`.
    pub fn power(generator: usize, k: i64) -> Self {
        let letter = if k < 0 {
            Letter::neg(generator)
        } else {
            Letter::pos(generator)
        };
        Word {
            letters: alloc::vec![letter; k.unsigned_abs() as usize],
        }
    }

    /// Free reduction of an arbitrary letter sequence. No range check; see
    /// [`Alphabet::reduce`] for the checked variant.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut letters = Vec::new();
        for letter in raw {
            push_reduced(&mut letters, letter);
        }
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &letter in &other.letters {
            push_reduced(&mut letters, letter);
        }
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.multiply(self).multiply(&c.inverse())
    }

    /// Signed number of occurrences of `generator`.
    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == generator)
            .map(|l| l.sign())
            .sum()
    }

    /// Renders the word with exponent runs, e.g. `x y^2 x^-1`, or `1`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::reduce(iter)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("1");
        }
        let letters = self.word.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let letter = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == letter {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match self.alphabet.name(letter.generator) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "g{}", letter.generator)?,
            }
            let exp = run as i64 * letter.sign();
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// An endomorphism of the free group on `alphabet`, given by one image word
/// per generator and a conjugator `c`. The effective map sends
/// `gᵢ ↦ c · images[i] · c⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeEndomorphism {
    alphabet: Alphabet,
    images: Vec<Word>,
    conjugator: Word,
    effective: Vec<Word>,
    max_word_len: usize,
}

impl FreeEndomorphism {
    pub fn new(alphabet: Alphabet, images: Vec<Word>, conjugator: Word) -> Result<Self> {
        if images.len() != alphabet.rank() {
            return Err(Error::ImageCount {
                expected: alphabet.rank(),
                found: images.len(),
            });
        }
        for word in images.iter().chain(core::iter::once(&conjugator)) {
            alphabet.check(word)?;
        }
        let effective = images.iter().map(|w| w.conjugate_by(&conjugator)).collect();
        Ok(FreeEndomorphism {
            alphabet,
            images,
            conjugator,
            effective,
            max_word_len: DEFAULT_MAX_WORD_LEN,
        })
    }

    /// Endomorphism with empty conjugator.
    pub fn from_images(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        Self::new(alphabet, images, Word::identity())
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = alphabet.generators();
        Self::from_images(alphabet, images).expect("generators are in range")
    }

    /// Sends every generator to `1`.
    pub fn trivial(alphabet: Alphabet) -> Self {
        let images = alloc::vec![Word::identity(); alphabet.rank()];
        Self::from_images(alphabet, images).expect("identity words are in range")
    }

    pub fn with_max_word_len(mut self, cap: usize) -> Self {
        self.max_word_len = cap;
        self
    }

    pub fn with_conjugator(self, conjugator: Word) -> Result<Self> {
        let cap = self.max_word_len;
        Ok(Self::new(self.alphabet, self.images, conjugator)?.with_max_word_len(cap))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Images as given, before conjugation.
    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn conjugator(&self) -> &Word {
        &self.conjugator
    }

    /// `c · images[i] · c⁻¹` for every generator.
    pub fn effective_images(&self) -> &[Word] {
        &self.effective
    }

    pub fn max_word_len(&self) -> usize {
        self.max_word_len
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.alphabet.check(w)?;
        let cap = self.max_word_len;
        let mut remaining = w
            .letters()
            .iter()
            .fold(0usize, |acc, l| acc.saturating_add(self.effective[l.generator].len()));
        let mut out: Vec<Letter> = Vec::new();
        for letter in w.letters() {
            let image = self.effective[letter.generator].letters();
            remaining -= image.len();
            if letter.inverted {
                for &x in image.iter().rev() {
                    push_reduced(&mut out, x.inverse());
                }
            } else {
                for &x in image {
                    push_reduced(&mut out, x);
                }
            }
            // Later letters can cancel at most `remaining` of what is there now.
            if out.len() > cap.saturating_add(remaining) {
                return Err(Error::WordBlowup {
                    len: out.len() - remaining,
                    cap,
                });
            }
        }
        Ok(Word { letters: out })
    }

    /// `self ∘ other`: first `other`, then `self`. The result carries no
    /// conjugator; both conjugators are folded into its images.
    pub fn compose(&self, other: &FreeEndomorphism) -> Result<FreeEndomorphism> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let images = other
            .effective
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_images(self.alphabet.clone(), images)?.with_max_word_len(self.max_word_len))
    }

    /// The `n`-fold composite, with the conjugator folded into the images.
    pub fn power(&self, n: usize) -> Result<FreeEndomorphism> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = Self::from_images(self.alphabet.clone(), self.effective.clone())?
            .with_max_word_len(self.max_word_len);
        for _ in 1..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const X: usize = 0;
    const Y: usize = 1;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn w(letters: &[(usize, i64)]) -> Word {
        Word::reduce(
            letters
                .iter()
                .flat_map(|&(g, k)| Word::power(g, k).letters().to_vec()),
        )
    }

    fn stallings_phi() -> FreeEndomorphism {
        FreeEndomorphism::from_images(xy(), alloc::vec![w(&[(X, 1), (Y, 2)]), w(&[(X, 2), (Y, 3)])])
            .unwrap()
    }

    #[test]
    fn alphabet_rejects_bad_names() {
        assert_eq!(
            Alphabet::new(["x", "x"]),
            Err(Error::DuplicateGenerator("x".into()))
        );
        assert!(matches!(
            Alphabet::new(["1"]),
            Err(Error::InvalidGeneratorName(_))
        ));
        assert!(matches!(
            Alphabet::new([""]),
            Err(Error::InvalidGeneratorName(_))
        ));
        assert_eq!(Alphabet::new(["a_1", "B"]).unwrap().rank(), 2);
    }

    #[test]
    fn reduce_examples() {
        let a = xy();
        assert_eq!(
            a.reduce(&[Letter::pos(X), Letter::neg(X)]).unwrap(),
            Word::identity()
        );
        assert_eq!(
            a.reduce(&[
                Letter::pos(X),
                Letter::pos(Y),
                Letter::neg(Y),
                Letter::neg(X)
            ])
            .unwrap(),
            Word::identity()
        );
        let xyy = [Letter::pos(X), Letter::pos(Y), Letter::pos(Y)];
        assert_eq!(a.reduce(&xyy).unwrap().letters(), &xyy);
        assert_eq!(
            a.reduce(&[Letter::pos(2)]),
            Err(Error::GeneratorOutOfRange { index: 2, rank: 2 })
        );
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            w(&[(X, 1), (Y, 1)]).multiply(&w(&[(Y, -1), (X, 1)])),
            w(&[(X, 2)])
        );
        let u = w(&[(X, 1), (Y, -1), (X, 3)]);
        assert_eq!(Word::identity().multiply(&u), u);
        let prod = &w(&[(X, 1), (Y, 2)]) * &w(&[(X, 2), (Y, 3)]);
        let expected = [X, Y, Y, X, X, Y, Y, Y].map(Letter::pos);
        assert_eq!(prod.letters(), &expected);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(&[(X, 1), (Y, 2)]).inverse(), w(&[(Y, -2), (X, -1)]));
        assert_eq!(Word::identity().inverse(), Word::identity());
        assert_eq!(w(&[(X, -1), (Y, 1)]).inverse(), w(&[(Y, -1), (X, 1)]));
    }

    #[test]
    fn display_uses_exponent_runs() {
        let a = xy();
        assert_eq!(w(&[(X, 1), (Y, 2), (X, -3)]).display(&a).to_string(), "x y^2 x^-3");
        assert_eq!(Word::identity().display(&a).to_string(), "1");
    }

    #[test]
    fn apply_examples() {
        let phi = stallings_phi();
        assert_eq!(phi.apply(&Word::generator(X)).unwrap(), w(&[(X, 1), (Y, 2)]));
        assert_eq!(phi.apply(&w(&[(X, -1)])).unwrap(), w(&[(Y, -2), (X, -1)]));
        let id = FreeEndomorphism::identity(xy());
        let u = w(&[(Y, 2), (X, -1), (Y, 1)]);
        assert_eq!(id.apply(&u).unwrap(), u);
    }

    #[test]
    fn apply_folds_conjugator() {
        let phi = stallings_phi().with_conjugator(Word::generator(Y)).unwrap();
        assert_eq!(
            phi.apply(&Word::generator(X)).unwrap(),
            w(&[(Y, 1), (X, 1), (Y, 1)])
        );
    }

    #[test]
    fn apply_rejects_foreign_letters() {
        let phi = stallings_phi();
        assert!(matches!(
            phi.apply(&Word::generator(5)),
            Err(Error::GeneratorOutOfRange { index: 5, .. })
        ));
    }

    #[test]
    fn apply_reports_blowup() {
        let a = Alphabet::new(["x"]).unwrap();
        let phi = FreeEndomorphism::from_images(a, alloc::vec![Word::power(0, 10)])
            .unwrap()
            .with_max_word_len(25);
        assert_eq!(
            phi.apply(&Word::power(0, 3)),
            Err(Error::WordBlowup { len: 30, cap: 25 })
        );
        assert_eq!(phi.apply(&Word::power(0, 2)).unwrap(), Word::power(0, 20));
    }

    #[test]
    fn blowup_ignores_transient_length() {
        // x y x^-1 under x -> x^10, y -> y: intermediate length 11 but the result is y.
        let a = xy();
        let phi = FreeEndomorphism::from_images(a, alloc::vec![Word::power(X, 10), Word::generator(Y)])
            .unwrap()
            .with_max_word_len(21);
        let u = w(&[(X, 1), (Y, 1), (X, -1)]);
        assert_eq!(phi.apply(&u).unwrap(), w(&[(X, 10), (Y, 1), (X, -10)]));
        let v = w(&[(X, 1), (X, -1)]);
        assert_eq!(phi.apply(&v).unwrap(), Word::identity());
    }

    #[test]
    fn compose_examples() {
        let phi = stallings_phi();
        let id = FreeEndomorphism::identity(xy());
        assert_eq!(id.compose(&phi).unwrap(), phi);

        let a = Alphabet::new(["x"]).unwrap();
        let sq = FreeEndomorphism::from_images(a.clone(), alloc::vec![Word::power(0, 2)]).unwrap();
        assert_eq!(sq.compose(&sq).unwrap().images(), &[Word::power(0, 4)]);

        let trivial = FreeEndomorphism::trivial(xy());
        assert_eq!(phi.compose(&trivial).unwrap(), trivial);

        assert_eq!(phi.compose(&sq), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn power_examples() {
        let a = Alphabet::new(["x"]).unwrap();
        let sq = FreeEndomorphism::from_images(a, alloc::vec![Word::power(0, 2)]).unwrap();
        assert_eq!(sq.power(3).unwrap().images(), &[Word::power(0, 8)]);
        assert_eq!(sq.power(0), Err(Error::ZeroPower));

        let phi = stallings_phi();
        assert_eq!(phi.power(1).unwrap(), phi);
        let phi2 = phi.power(2).unwrap();
        // x -> xy^2 -> (xy^2)(x^2y^3)^2, y -> x^2y^3 -> (xy^2)^2 (x^2y^3)^3
        let a_ = w(&[(X, 1), (Y, 2)]);
        let b_ = w(&[(X, 2), (Y, 3)]);
        let x2 = &(&a_ * &b_) * &b_;
        let y2 = &(&(&(&a_ * &a_) * &b_) * &b_) * &b_;
        assert_eq!(phi2.images(), &[x2, y2]);
    }

    #[test]
    fn power_folds_conjugator() {
        let c = Word::generator(X);
        let phi = stallings_phi().with_conjugator(c.clone()).unwrap();
        let once = phi.power(1).unwrap();
        assert!(once.conjugator().is_identity());
        assert_eq!(once.images(), phi.effective_images());
    }
}
