use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chord has no tones")]
    EmptyChord,
    #[error("chord must start at 0, found {0}")]
    FirstToneNotZero(i64),
    #[error("chord tones must be strictly increasing ({prev} is followed by {next})")]
    NotStrictlyIncreasing { prev: i64, next: i64 },
    #[error("tone {0} is outside 0..=11")]
    ToneOutOfRange(i64),
    #[error("size {0} is outside the supported range")]
    InvalidSize(i64),
    #[error("invalid parts {parts:?}: {reason}")]
    InvalidParts { parts: Vec<i64>, reason: &'static str },
    #[error("operator `{op}` needs a chord of {expected} tones, got {found}")]
    WrongArity {
        op: &'static str,
        expected: &'static str,
        found: usize,
    },
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("component isomorphism violated: {0}")]
    IsomorphismViolation(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
        }
    }
}
