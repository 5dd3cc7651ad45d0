//! Image chains `im A⁰ ⊇ im A¹ ⊇ …` of square matrices over ℤ and GF(2).
//!
//! Images are kept as canonical echelon bases (Hermite normal form over ℤ,
//! reduced row echelon form over GF(2)), so comparing two images is a
//! structural comparison. Column `j` of a matrix is the image of generator
//! `j`.
//!
//! Over ℤ the chain is decided exactly: the ranks of `im Aⁿ` drop strictly
//! until a first repeat at some `n ≤ dim`, after which `A` is injective on
//! `im Aⁿ`. If `im Aⁿ⁺¹ ≠ im Aⁿ` at that index, injectivity propagates the
//! difference to every later step and the chain never becomes constant.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::words::FreeEndomorphism;
use crate::{Error, Result};

/// Default bound on the number of ℤ-chain steps.
pub const DEFAULT_MAX_STEPS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Z,
    Gf2,
}

impl Ring {
    fn normalize(self, x: &mut BigInt) {
        if self == Ring::Gf2 {
            *x = x.mod_floor(&BigInt::from(2));
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Ring::Z => "Z",
            Ring::Gf2 => "GF2",
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Square matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    dim: usize,
    entries: Vec<BigInt>,
}

impl Matrix {
    pub fn new(ring: Ring, dim: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::BadMatrixShape);
        }
        if ring == Ring::Gf2 && entries.iter().any(|e| !(e.is_zero() || e.is_one())) {
            return Err(Error::BadGf2Entry);
        }
        Ok(Matrix { ring, dim, entries })
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(ring: Ring, rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::BadMatrixShape);
        }
        let entries = rows.iter().flatten().cloned().map(Into::into).collect();
        Self::new(ring, dim, entries)
    }

    pub fn identity(ring: Ring, dim: usize) -> Self {
        let mut m = Self::zero(ring, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn zero(ring: Ring, dim: usize) -> Self {
        Matrix {
            ring,
            dim,
            entries: alloc::vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        (0..self.dim).map(|i| self.get(i, col).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `A v`, reduced into the ring.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.dim)
            .map(|i| {
                let mut s: BigInt = self.row(i).iter().zip(v).map(|(a, b)| a * b).sum();
                self.ring.normalize(&mut s);
                s
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ring != other.ring || self.dim != other.dim {
            return Err(Error::MatrixMismatch);
        }
        let n = self.dim;
        let mut entries = alloc::vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for k in 0..n {
                    s += self.get(i, k) * other.get(k, j);
                }
                self.ring.normalize(&mut s);
                entries[i * n + j] = s;
            }
        }
        Ok(Matrix {
            ring: self.ring,
            dim: n,
            entries,
        })
    }

    pub fn pow(&self, n: u32) -> Matrix {
        let mut acc = Self::identity(self.ring, self.dim);
        for _ in 0..n {
            acc = self.mul(&acc).expect("same shape");
        }
        acc
    }

    /// Entry-wise reduction modulo 2.
    pub fn reduce_mod2(&self) -> Matrix {
        let entries = self
            .entries
            .iter()
            .map(|e| e.mod_floor(&BigInt::from(2)))
            .collect();
        Matrix {
            ring: Ring::Gf2,
            dim: self.dim,
            entries,
        }
    }

    /// Rank of the column space (over ℚ for ℤ matrices).
    pub fn rank(&self) -> usize {
        ImageBasis::span(self.ring, self.dim, (0..self.dim).map(|j| self.column(j))).rank()
    }
}

/// Canonical echelon basis of a sublattice of ℤⁿ or a subspace of GF(2)ⁿ.
///
/// Basis vectors have strictly increasing pivot positions, positive pivots,
/// zeros below each pivot and entries above each pivot reduced into
/// `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageBasis {
    ring: Ring,
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

fn axpy(ring: Ring, y: &mut [BigInt], q: &BigInt, x: &[BigInt]) {
    for (a, b) in y.iter_mut().zip(x) {
        *a -= q * b;
        ring.normalize(a);
    }
}

fn leading(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

impl ImageBasis {
    pub fn span<I>(ring: Ring, dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut rows: Vec<Vec<BigInt>> = vectors
            .into_iter()
            .map(|mut v| {
                v.iter_mut().for_each(|x| ring.normalize(x));
                v
            })
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let mut top = 0;
        for col in 0..dim {
            loop {
                let best = (top..rows.len())
                    .filter(|&i| !rows[i][col].is_zero())
                    .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
                let Some(best) = best else { break };
                rows.swap(top, best);
                let (head, tail) = rows.split_at_mut(top + 1);
                let pivot = &head[top];
                let mut clean = true;
                for row in tail.iter_mut() {
                    if row[col].is_zero() {
                        continue;
                    }
                    let q = row[col].div_floor(&pivot[col]);
                    axpy(ring, row, &q, pivot);
                    clean &= row[col].is_zero();
                }
                if clean {
                    if rows[top][col].is_negative() {
                        rows[top].iter_mut().for_each(|x| *x = -&*x);
                    }
                    let (above, rest) = rows.split_at_mut(top);
                    let pivot = &rest[0];
                    for row in above.iter_mut() {
                        let q = row[col].div_floor(&pivot[col]);
                        axpy(ring, row, &q, pivot);
                    }
                    top += 1;
                    break;
                }
            }
        }
        rows.truncate(top);
        ImageBasis {
            ring,
            dim,
            basis: rows,
        }
    }

    /// The whole of ℤⁿ or GF(2)ⁿ.
    pub fn full(ring: Ring, dim: usize) -> Self {
        Self::span(ring, dim, (0..dim).map(|j| Matrix::identity(ring, dim).column(j)))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rest: Vec<BigInt> = v.to_vec();
        rest.iter_mut().for_each(|x| self.ring.normalize(x));
        let mut coords = Vec::with_capacity(self.basis.len());
        for b in &self.basis {
            let p = leading(b).expect("basis vectors are nonzero");
            let (q, r) = rest[p].div_mod_floor(&b[p]);
            if !r.is_zero() {
                return None;
            }
            axpy(self.ring, &mut rest, &q, b);
            let mut q = q;
            self.ring.normalize(&mut q);
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subset_of(&self, other: &ImageBasis) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }
}

/// Verdict on an image chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainOutcome {
    /// `im Aⁿ = im Aⁿ⁺¹` first at `index`.
    Stabilizes { index: usize },
    /// Ranks repeat at `rank_repeat_index` while the lattices differ; the
    /// chain strictly decreases forever.
    NeverStabilizes { rank_repeat_index: usize },
    /// No verdict within `steps` steps.
    Inconclusive { steps: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixChainReport {
    pub ring: Ring,
    pub dim: usize,
    /// `im A⁰, im A¹, …` as far as computed.
    pub images: Vec<ImageBasis>,
    pub outcome: ChainOutcome,
    pub stable_rank: Option<usize>,
    /// Whether `A` restricted to the stable image is a bijection onto it.
    pub restricted_invertible: Option<bool>,
}

impl MatrixChainReport {
    /// `None` when inconclusive.
    pub fn stabilizes(&self) -> Option<bool> {
        match self.outcome {
            ChainOutcome::Stabilizes { .. } => Some(true),
            ChainOutcome::NeverStabilizes { .. } => Some(false),
            ChainOutcome::Inconclusive { .. } => None,
        }
    }

    pub fn stabilization_index(&self) -> Option<usize> {
        match self.outcome {
            ChainOutcome::Stabilizes { index } => Some(index),
            _ => None,
        }
    }

    pub fn stable_image(&self) -> Option<&ImageBasis> {
        self.stabilization_index().map(|n| &self.images[n])
    }
}

/// Computes `im Aⁿ` for `n = 0, 1, …` until two consecutive images agree,
/// the ranks repeat without agreement (ℤ only), or `max_steps` steps have
/// been taken (ℤ only; GF(2) chains always finish within `dim + 1` steps).
pub fn image_chain(a: &Matrix, max_steps: usize) -> MatrixChainReport {
    let ring = a.ring;
    let mut images = alloc::vec![ImageBasis::full(ring, a.dim)];
    let mut n = 0;
    let outcome = loop {
        if ring == Ring::Z && n >= max_steps {
            break ChainOutcome::Inconclusive { steps: n };
        }
        let current = &images[n];
        let next = ImageBasis::span(ring, a.dim, current.basis.iter().map(|b| a.apply(b)));
        let same = next == *current;
        let same_rank = next.rank() == current.rank();
        images.push(next);
        if same {
            break ChainOutcome::Stabilizes { index: n };
        }
        if same_rank {
            break ChainOutcome::NeverStabilizes {
                rank_repeat_index: n,
            };
        }
        n += 1;
    };
    let (stable_rank, restricted_invertible) = match outcome {
        ChainOutcome::Stabilizes { index } => {
            let stable = &images[index];
            (Some(stable.rank()), Some(restriction_is_bijective(a, stable)))
        }
        _ => (None, None),
    };
    MatrixChainReport {
        ring,
        dim: a.dim,
        images,
        outcome,
        stable_rank,
        restricted_invertible,
    }
}

/// Writes `A` restricted to `image` in the coordinates of its echelon basis
/// and checks that the determinant is a unit of the ring.
fn restriction_is_bijective(a: &Matrix, image: &ImageBasis) -> bool {
    let mut columns = Vec::with_capacity(image.rank());
    for b in &image.basis {
        match image.coordinates(&a.apply(b)) {
            Some(c) => columns.push(c),
            None => return false,
        }
    }
    let det = determinant(&columns);
    match a.ring {
        Ring::Z => det.abs().is_one(),
        Ring::Gf2 => det.is_odd(),
    }
}

/// Fraction-free (Bareiss) determinant of a square array given by columns.
fn determinant(columns: &[Vec<BigInt>]) -> BigInt {
    let n = columns.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Whether `A` is a bijection of its stable image onto itself. Requires a
/// definitive stabilization verdict.
pub fn stable_image_isomorphism_check(a: &Matrix) -> Result<bool> {
    let report = image_chain(a, DEFAULT_MAX_STEPS);
    match report.outcome {
        ChainOutcome::Stabilizes { .. } => Ok(report.restricted_invertible == Some(true)),
        ChainOutcome::NeverStabilizes { .. } => Err(Error::NotStabilized),
        ChainOutcome::Inconclusive { steps } => Err(Error::Inconclusive(steps)),
    }
}

/// Signed letter counts: entry `(i, j)` is the exponent sum of generator `i`
/// in the image of generator `j`. Conjugators abelianize away.
pub fn abelianize(phi: &FreeEndomorphism) -> Matrix {
    let k = phi.alphabet().rank();
    let mut m = Matrix::zero(Ring::Z, k);
    for (j, image) in phi.effective_images().iter().enumerate() {
        for i in 0..k {
            m.entries[i * k + j] = BigInt::from(image.exponent_sum(i));
        }
    }
    m
}

/// Dimension of `Ȟ_d(K; ℤ₂)` read off as the stable image of the
/// inclusion-induced map on `H_d(P; ℤ₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomologyVerdict {
    pub degree: usize,
    pub rank: usize,
    /// When set and `degree == 1`, the continuum lies in a surface and has
    /// the shape of a wedge of `rank` circles.
    pub surface: bool,
}

impl HomologyVerdict {
    pub fn wedge_of_circles(&self) -> Option<usize> {
        (self.surface && self.degree == 1).then_some(self.rank)
    }
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    let mut s: Vec<char> = Vec::new();
    let mut n = n;
    loop {
        s.push(DIGITS[n % 10]);
        n /= 10;
        if n == 0 {
            break;
        }
    }
    s.iter().rev().collect()
}

impl fmt::Display for HomologyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ȟ{}(K;ℤ₂) = ", subscript(self.degree))?;
        match self.rank {
            0 => f.write_str("0")?,
            1 => f.write_str("ℤ₂")?,
            r => write!(f, "ℤ₂^{r}")?,
        }
        match self.wedge_of_circles() {
            Some(0) => f.write_str("; K has the shape of a point (wedge of 0 circumferences)"),
            Some(1) => f.write_str("; K has the shape of a circumference (wedge of 1 circumference)"),
            Some(r) => write!(f, "; K has the shape of a wedge of {r} circumferences"),
            None => Ok(()),
        }
    }
}

pub fn homology_verdict(a: &Matrix, degree: usize, surface: bool) -> Result<HomologyVerdict> {
    if a.ring != Ring::Gf2 {
        return Err(Error::RingMismatch { expected: "GF2" });
    }
    let report = image_chain(a, DEFAULT_MAX_STEPS);
    let rank = report.stable_rank.expect("GF(2) chains always stabilize");
    Ok(HomologyVerdict {
        degree,
        rank,
        surface,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{Alphabet, Word};
    use alloc::string::ToString;

    fn z(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(Ring::Z, rows).unwrap()
    }

    fn gf2(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(Ring::Gf2, rows).unwrap()
    }

    fn plykin() -> Matrix {
        z(&[alloc::vec![0, 0, 0], alloc::vec![0, 0, 1], alloc::vec![1, 0, 0]])
    }

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn abelianize_examples() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let phi = FreeEndomorphism::from_images(
            a.clone(),
            alloc::vec![
                Word::reduce([0, 1, 1].map(crate::Letter::pos)),
                Word::reduce([0, 0, 1, 1, 1].map(crate::Letter::pos)),
            ],
        )
        .unwrap();
        assert_eq!(abelianize(&phi), z(&[alloc::vec![1, 2], alloc::vec![2, 3]]));
        assert_eq!(abelianize(&FreeEndomorphism::identity(a.clone())), Matrix::identity(Ring::Z, 2));
        let conj = FreeEndomorphism::from_images(
            a,
            alloc::vec![
                Word::reduce([crate::Letter::pos(0), crate::Letter::pos(1), crate::Letter::neg(0)]),
                Word::generator(1),
            ],
        )
        .unwrap();
        assert_eq!(abelianize(&conj).column(0), v(&[0, 1]));
    }

    #[test]
    fn hnf_is_canonical() {
        let a = ImageBasis::span(Ring::Z, 2, [v(&[2, 3]), v(&[4, 1])]);
        let b = ImageBasis::span(Ring::Z, 2, [v(&[4, 1]), v(&[6, 4]), v(&[-2, -3])]);
        assert_eq!(a, b);
        // index |det| = 10: pivots multiply to 10
        let p: BigInt = a.vectors().iter().map(|r| r[leading(r).unwrap()].clone()).product();
        assert_eq!(p, BigInt::from(10));
        for r in a.vectors() {
            assert!(r[leading(r).unwrap()].is_positive());
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let l = ImageBasis::span(Ring::Z, 3, [v(&[1, 2, 3]), v(&[0, 4, 5])]);
        let target = v(&[3, 2, 4]); // 3·(1,2,3) - (0,4,5)
        let c = l.coordinates(&target).unwrap();
        let rebuilt: Vec<BigInt> = (0..3)
            .map(|i| l.vectors().iter().zip(&c).map(|(b, k)| &b[i] * k).sum())
            .collect();
        assert_eq!(rebuilt, target);
        assert!(!l.contains(&v(&[0, 2, 0])));
    }

    #[test]
    fn solid_torus_chains() {
        for k in [-3i64, -2, 2, 3] {
            let r = image_chain(&z(&[alloc::vec![k]]), DEFAULT_MAX_STEPS);
            assert_eq!(r.outcome, ChainOutcome::NeverStabilizes { rank_repeat_index: 0 }, "k = {k}");
        }
        for k in [-1i64, 1] {
            let r = image_chain(&z(&[alloc::vec![k]]), DEFAULT_MAX_STEPS);
            assert_eq!(r.outcome, ChainOutcome::Stabilizes { index: 0 });
            assert_eq!(r.stable_rank, Some(1));
        }
        let r = image_chain(&z(&[alloc::vec![0]]), DEFAULT_MAX_STEPS);
        assert_eq!(r.outcome, ChainOutcome::Stabilizes { index: 1 });
        assert_eq!(r.stable_rank, Some(0));
    }

    #[test]
    fn plykin_chain_dies_at_three() {
        let a = plykin();
        assert!(a.pow(3).is_zero());
        assert!(!a.pow(2).is_zero());
        let r = image_chain(&a, DEFAULT_MAX_STEPS);
        assert_eq!(r.outcome, ChainOutcome::Stabilizes { index: 3 });
        assert_eq!(r.stable_rank, Some(0));
        let ranks: Vec<usize> = r.images.iter().map(ImageBasis::rank).collect();
        assert_eq!(ranks, [3, 2, 1, 0, 0]);
        assert_eq!(r.restricted_invertible, Some(true));
        assert!(stable_image_isomorphism_check(&a).unwrap());
    }

    #[test]
    fn unimodular_chain_stabilizes_immediately() {
        let r = image_chain(&z(&[alloc::vec![1, 2], alloc::vec![2, 3]]), DEFAULT_MAX_STEPS);
        assert_eq!(r.outcome, ChainOutcome::Stabilizes { index: 0 });
        assert_eq!(r.restricted_invertible, Some(true));
    }

    #[test]
    fn determinant_two_never_stabilizes() {
        let a = z(&[alloc::vec![1, 1], alloc::vec![1, -1]]);
        let r = image_chain(&a, DEFAULT_MAX_STEPS);
        assert_eq!(r.stabilizes(), Some(false));
        assert_eq!(stable_image_isomorphism_check(&a), Err(Error::NotStabilized));
    }

    #[test]
    fn rank_drop_then_non_unimodular() {
        // Column 1 is killed, the remaining block acts by 2 on e0.
        let a = z(&[alloc::vec![2, 0], alloc::vec![0, 0]]);
        let r = image_chain(&a, DEFAULT_MAX_STEPS);
        assert_eq!(r.outcome, ChainOutcome::NeverStabilizes { rank_repeat_index: 1 });
    }

    #[test]
    fn max_steps_exhaustion_is_inconclusive() {
        let r = image_chain(&plykin(), 2);
        assert_eq!(r.outcome, ChainOutcome::Inconclusive { steps: 2 });
        assert_eq!(r.stabilizes(), None);
        // GF(2) ignores the bound.
        let r = image_chain(&plykin().reduce_mod2(), 1);
        assert_eq!(r.outcome, ChainOutcome::Stabilizes { index: 3 });
    }

    #[test]
    fn gf2_identity_and_idempotent() {
        for d in 1..5 {
            let r = image_chain(&Matrix::identity(Ring::Gf2, d), 1);
            assert_eq!(r.outcome, ChainOutcome::Stabilizes { index: 0 });
            assert_eq!(r.restricted_invertible, Some(true));
        }
        let a = gf2(&[alloc::vec![1, 1], alloc::vec![0, 0]]);
        let r = image_chain(&a, 1);
        assert_eq!(r.outcome, ChainOutcome::Stabilizes { index: 1 });
        assert_eq!(r.stable_image().unwrap().vectors(), &[v(&[1, 0])]);
        assert!(stable_image_isomorphism_check(&a).unwrap());
    }

    #[test]
    fn gf2_entries_validated() {
        assert_eq!(
            Matrix::from_rows(Ring::Gf2, &[alloc::vec![2i64]]),
            Err(Error::BadGf2Entry)
        );
        assert_eq!(
            Matrix::from_rows(Ring::Z, &[alloc::vec![1i64, 2]]),
            Err(Error::BadMatrixShape)
        );
    }

    #[test]
    fn homology_examples() {
        let h = homology_verdict(&plykin().reduce_mod2(), 1, true).unwrap();
        assert_eq!(
            h.to_string(),
            "Ȟ₁(K;ℤ₂) = 0; K has the shape of a point (wedge of 0 circumferences)"
        );
        let h = homology_verdict(&Matrix::identity(Ring::Gf2, 3), 1, true).unwrap();
        assert_eq!(h.wedge_of_circles(), Some(3));
        assert!(h.to_string().ends_with("wedge of 3 circumferences"));
        let h = homology_verdict(&Matrix::zero(Ring::Gf2, 2), 2, false).unwrap();
        assert_eq!(h.rank, 0);
        assert_eq!(h.to_string(), "Ȟ₂(K;ℤ₂) = 0");
        assert_eq!(
            homology_verdict(&plykin(), 1, true),
            Err(Error::RingMismatch { expected: "GF2" })
        );
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let cols = [v(&[2, -1, 0]), v(&[3, 4, 1]), v(&[1, 5, -2])];
        let m = [[2i64, 3, 1], [-1, 4, 5], [0, 1, -2]];
        let minor = |r: usize, c: usize| {
            let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
            m[rows[0]][cs[0]] * m[rows[1]][cs[1]] - m[rows[0]][cs[1]] * m[rows[1]][cs[0]]
        };
        let det = m[0][0] * minor(0, 0) - m[0][1] * minor(0, 1) + m[0][2] * minor(0, 2);
        assert_eq!(det, -33);
        assert_eq!(determinant(&cols), BigInt::from(det));
        assert_eq!(determinant(&[v(&[0, 1]), v(&[1, 0])]), BigInt::from(-1));
    }
}
