//! Deciding whether a free-group endomorphism stabilizes.
//!
//! Write `F_n = im φⁿ` and `r_n = rk F_n`. The ranks strictly decrease until
//! the first repeat `r_n = r_{n+1}` (which happens at some `n ≤ rk G`), after
//! which `φ` is injective on `F_n`. At that index the chain is eventually
//! constant iff `F_n = F_{n+1}`, i.e. iff every `φⁿ(gᵢ)` lies in
//! `F_{n+1} = ⟨φⁿ⁺¹(g₁), …, φⁿ⁺¹(g_k)⟩`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::stallings::SubgroupHandle;
use crate::words::{Alphabet, FreeEndomorphism, Word};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationReport {
    pub alphabet: Alphabet,
    /// `r₀ > r₁ > … > r_n = r_{n+1}`.
    pub ranks: Vec<usize>,
    /// The `n` of the first repeat.
    pub rank_equal_index: usize,
    pub stabilizes: bool,
    /// `r_n`, present iff the chain stabilizes.
    pub stable_rank: Option<usize>,
    /// First generator index `i` with `φⁿ(gᵢ) ∉ F_{n+1}`, and that word.
    pub witness: Option<(usize, Word)>,
    pub shape_equivalence: bool,
}

impl StabilizationReport {
    /// Index `n` with `F_n = F_{n+1}`, when there is one.
    pub fn stabilization_index(&self) -> Option<usize> {
        self.stabilizes.then_some(self.rank_equal_index)
    }

    /// Witness as `generator: word`.
    pub fn witness_text(&self) -> Option<String> {
        self.witness.as_ref().map(|(i, w)| {
            format!(
                "{}: {}",
                self.alphabet.name(*i).unwrap_or("?"),
                w.display(&self.alphabet)
            )
        })
    }

    /// Human-readable conclusion. With `handlebody` the attractor's shape is
    /// stated as a bouquet of circles.
    pub fn conclusion(&self, handlebody: bool) -> String {
        let n = self.rank_equal_index;
        match (&self.witness, self.stable_rank) {
            (None, Some(r)) => {
                let mut text = format!(
                    "shape equivalence: im Φ^{n} = im Φ^{} (membership phase passed at the first rank repeat n = {n}); \
                     the attractor has polyhedral shape and its first shape group is free of rank {r}",
                    n + 1
                );
                if handlebody {
                    let noun = if r == 1 { "circumference" } else { "circumferences" };
                    text.push_str(&format!(
                        "; handlebody trapping region: the attractor has the shape of a bouquet of {r} {noun}"
                    ));
                } else {
                    text.push_str(
                        "; the number of 2-spheres in its wedge decomposition is the rank of the stable Z2 image \
                         in degree 2, which Φ alone does not determine",
                    );
                }
                text
            }
            _ => {
                let witness = self
                    .witness
                    .as_ref()
                    .map(|(i, w)| {
                        format!("{}) = {}", self.alphabet.name(*i).unwrap_or("?"), w.display(&self.alphabet))
                    })
                    .unwrap_or_default();
                format!(
                    "not a shape equivalence: ranks are constant from n = {n} but Φ^{n}({witness} does not lie in \
                     im Φ^{} (membership phase failed), so Φ does not stabilize",
                    n + 1
                )
            }
        }
    }
}

/// `φⁿ(gᵢ)` for every generator.
pub fn iterate_images(phi: &FreeEndomorphism, n: usize) -> Result<Vec<Word>> {
    let mut words = phi.alphabet().generators();
    for _ in 0..n {
        words = words.iter().map(|w| phi.apply(w)).collect::<Result<_>>()?;
    }
    Ok(words)
}

struct RankPhase {
    ranks: Vec<usize>,
    /// `φⁿ(gᵢ)` at the first repeat.
    current: Vec<Word>,
    /// `F_{n+1}`.
    next: SubgroupHandle,
}

fn rank_phase(phi: &FreeEndomorphism) -> Result<RankPhase> {
    let alphabet = phi.alphabet();
    let mut ranks = alloc::vec![alphabet.rank()];
    let mut current = alphabet.generators();
    loop {
        let images = current.iter().map(|w| phi.apply(w)).collect::<Result<Vec<_>>>()?;
        let next = SubgroupHandle::from_words(alphabet, &images)?;
        let r = next.rank();
        let prev = *ranks.last().expect("nonempty");
        debug_assert!(r <= prev, "image rank increased from {prev} to {r}");
        ranks.push(r);
        if r >= prev {
            return Ok(RankPhase { ranks, current, next });
        }
        current = images;
    }
}

/// `r₀, r₁, …, r_{n+1}` where `n` is the first index with `r_n = r_{n+1}`.
pub fn image_rank_sequence(phi: &FreeEndomorphism) -> Result<Vec<usize>> {
    Ok(rank_phase(phi)?.ranks)
}

pub fn decide_stabilization(phi: &FreeEndomorphism) -> Result<StabilizationReport> {
    let RankPhase { ranks, current, next } = rank_phase(phi)?;
    let n = ranks.len() - 2;
    let mut witness = None;
    for (i, w) in current.into_iter().enumerate() {
        if !next.contains(&w)? {
            witness = Some((i, w));
            break;
        }
    }
    let stabilizes = witness.is_none();
    Ok(StabilizationReport {
        alphabet: phi.alphabet().clone(),
        stable_rank: stabilizes.then_some(ranks[n]),
        ranks,
        rank_equal_index: n,
        stabilizes,
        witness,
        shape_equivalence: stabilizes,
    })
}

/// `rk G = rk im φ`, which for free groups of finite rank is equivalent to
/// injectivity of `φ` (finitely generated free groups are Hopfian). This is
/// the rank criterion, not a search for kernel elements.
pub fn injectivity_equivalent(phi: &FreeEndomorphism) -> Result<bool> {
    let image = SubgroupHandle::from_words(phi.alphabet(), phi.effective_images())?;
    Ok(image.rank() == phi.alphabet().rank())
}

/// How a power `fⁿ` of the dynamics permutes the `r` components of a
/// trapping region. `mapping[i]` is the component that component `i` enters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPermutation {
    mapping: Vec<usize>,
    entry_power: u64,
}

impl ComponentPermutation {
    pub fn new(mapping: Vec<usize>, entry_power: u64) -> Result<Self> {
        let r = mapping.len();
        if r == 0 {
            return Err(Error::InvalidPermutation(0));
        }
        if entry_power == 0 {
            return Err(Error::ZeroPower);
        }
        let mut seen = alloc::vec![false; r];
        for &j in &mapping {
            if j >= r || core::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidPermutation(r));
            }
        }
        Ok(ComponentPermutation {
            mapping,
            entry_power,
        })
    }

    pub fn size(&self) -> usize {
        self.mapping.len()
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn entry_power(&self) -> u64 {
        self.entry_power
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> Result<u64> {
        let mut visited = alloc::vec![false; self.mapping.len()];
        let mut order: u64 = 1;
        for start in 0..self.mapping.len() {
            if visited[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.mapping[i];
                len += 1;
            }
            order = (order / order.gcd(&len))
                .checked_mul(len)
                .ok_or(Error::Overflow("permutation order"))?;
        }
        Ok(order)
    }
}

/// Smallest multiple `N` of the entry power `n` such that `f^N` maps every
/// component into itself: `N = n · order(perm)`.
pub fn component_power(perm: &ComponentPermutation) -> Result<u64> {
    perm.entry_power
        .checked_mul(perm.order()?)
        .ok_or(Error::Overflow("component power"))
}
