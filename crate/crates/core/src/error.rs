use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator index {index} out of range for an alphabet of rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("operands are defined over different alphabets")]
    AlphabetMismatch,
    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("reduced word length {len} exceeds the cap of {cap} letters")]
    WordBlowup { len: usize, cap: usize },
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("mapping is not a permutation of {0} elements")]
    InvalidPermutation(usize),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("matrix must be square with positive dimension")]
    BadMatrixShape,
    #[error("GF(2) entries must be 0 or 1")]
    BadGf2Entry,
    #[error("matrices have different rings or dimensions")]
    MatrixMismatch,
    #[error("operation requires a matrix over {expected}")]
    RingMismatch { expected: &'static str },
    #[error("image chain did not stabilize")]
    NotStabilized,
    #[error("no verdict on the image chain within {0} steps")]
    Inconclusive(usize),
}
