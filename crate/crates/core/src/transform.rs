//! The three chord operators and the group actions they generate.
//!
//! * `i` (inversion) rebases a chord on its second tone. On `k`-tone chords it
//!   has order `k`.
//! * `d` (major-minor duality) reflects every tone `a` to `12 - a` and rebases
//!   at 0. It is an involution.
//! * `a` (augmented-diminished duality) is defined on four-tone chords only and
//!   moves the third tone to `a_1 + a_3 - a_2`. It is an involution.
//!
//! `i` and `d` generate a dihedral action on `k`-tone chords, with
//! `d . i^n = i^(k-n) . d`. On gap sequences the operators are rotate-left,
//! reverse, and (for `a`) swapping the two middle gaps; together those three
//! generate every rearrangement of four positions.
//!
//! Operator words are applied left to right: `"id"` means invert, then dualize.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::chord::{Chord, OCTAVE};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperatorSymbol {
    /// Inversion, `i`.
    I,
    /// Major-minor duality, `d`.
    D,
    /// Augmented-diminished duality, `a`. Four-tone chords only.
    A,
}

impl OperatorSymbol {
    pub const ALL: [OperatorSymbol; 3] = [OperatorSymbol::I, OperatorSymbol::D, OperatorSymbol::A];

    pub fn letter(self) -> char {
        match self {
            OperatorSymbol::I => 'i',
            OperatorSymbol::D => 'd',
            OperatorSymbol::A => 'a',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_lowercase() {
            'i' => Some(OperatorSymbol::I),
            'd' => Some(OperatorSymbol::D),
            'a' => Some(OperatorSymbol::A),
            _ => None,
        }
    }

    /// `d` and `a` are involutions; `i` generally is not.
    pub fn is_involution(self) -> bool {
        !matches!(self, OperatorSymbol::I)
    }

    pub fn apply(self, c: &Chord) -> Result<Chord> {
        match self {
            OperatorSymbol::I => Ok(invert(c)),
            OperatorSymbol::D => Ok(dual(c)),
            OperatorSymbol::A => augdim(c),
        }
    }
}

impl fmt::Display for OperatorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A finite word in the operators; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct OperatorWord(pub Vec<OperatorSymbol>);

impl OperatorWord {
    pub fn identity() -> Self {
        OperatorWord(Vec::new())
    }

    pub fn symbols(&self) -> &[OperatorSymbol] {
        &self.0
    }

    pub fn contains(&self, op: OperatorSymbol) -> bool {
        self.0.contains(&op)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|op| write!(f, "{op}"))
    }
}

/// Case-insensitive string over `{i, d, a}`; surrounding whitespace is ignored.
impl FromStr for OperatorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| OperatorSymbol::from_letter(c).ok_or_else(|| Error::parse("operator word", s)))
            .collect::<Result<Vec<_>>>()
            .map(OperatorWord)
    }
}

/// Parses a comma-separated generator list such as `"i,d,a"`. Empty items are
/// skipped, so `""` is the empty generator set.
pub fn parse_generators(s: &str) -> Result<BTreeSet<OperatorSymbol>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let mut chars = t.chars();
            match (chars.next().and_then(OperatorSymbol::from_letter), chars.next()) {
                (Some(op), None) => Ok(op),
                _ => Err(Error::parse("generator list", s)),
            }
        })
        .collect()
}

/// `(0, a_1, ..., a_{k-1}) -> (0, a_2 - a_1, ..., a_{k-1} - a_1, 12 - a_1)`.
///
/// The one-tone chord `(0)` is returned unchanged.
pub fn invert(c: &Chord) -> Chord {
    let tones = c.tones();
    if tones.len() < 2 {
        return c.clone();
    }
    let a1 = tones[1];
    let mut out = Vec::with_capacity(tones.len());
    out.push(0);
    out.extend(tones[2..].iter().map(|&t| t - a1));
    out.push(OCTAVE - a1);
    Chord::from_valid(out)
}

/// `(0, a_1, ..., a_{k-1}) -> (0, 12 - a_{k-1}, ..., 12 - a_1)`.
pub fn dual(c: &Chord) -> Chord {
    let tones = c.tones();
    let mut out = Vec::with_capacity(tones.len());
    out.push(0);
    out.extend(tones[1..].iter().rev().map(|&t| OCTAVE - t));
    Chord::from_valid(out)
}

/// `(0, a_1, a_2, a_3) -> (0, a_1, a_1 + a_3 - a_2, a_3)`.
pub fn augdim(c: &Chord) -> Result<Chord> {
    match c.tones()[..] {
        [0, a1, a2, a3] => Ok(Chord::from_valid(vec![0, a1, a1 + a3 - a2, a3])),
        _ => Err(Error::WrongArity {
            op: "a",
            expected: "4",
            found: c.len(),
        }),
    }
}

/// Applies the word's operators left to right.
pub fn apply_word(w: &OperatorWord, c: &Chord) -> Result<Chord> {
    check_arity(w.symbols().iter().copied(), c)?;
    w.symbols().iter().try_fold(c.clone(), |acc, op| op.apply(&acc))
}

/// `invert` applied `n` times.
pub fn invert_n(c: &Chord, n: usize) -> Chord {
    let k = c.len().max(1);
    (0..n % k).fold(c.clone(), |acc, _| invert(&acc))
}

fn check_arity(mut ops: impl Iterator<Item = OperatorSymbol>, c: &Chord) -> Result<()> {
    if c.len() != 4 && ops.any(|op| op == OperatorSymbol::A) {
        return Err(Error::WrongArity {
            op: "a",
            expected: "4",
            found: c.len(),
        });
    }
    Ok(())
}

/// The smallest set containing `c` and closed under every generator, sorted.
pub fn orbit(c: &Chord, gens: &BTreeSet<OperatorSymbol>) -> Result<Vec<Chord>> {
    check_arity(gens.iter().copied(), c)?;
    let mut seen = BTreeSet::from([c.clone()]);
    let mut queue = VecDeque::from([c.clone()]);
    while let Some(x) = queue.pop_front() {
        for op in gens {
            let y = op.apply(&x)?;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// A rearrangement of gap positions: position `j` of the result takes old
/// position `self.0[j]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositionPermutation(pub Vec<usize>);

impl PositionPermutation {
    pub fn identity(n: usize) -> Self {
        PositionPermutation((0..n).collect())
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &PositionPermutation) -> PositionPermutation {
        PositionPermutation(next.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// How an operator rearranges the gaps of a `k`-tone chord, or `None` for `a`
/// when `k != 4`.
pub fn gap_permutation(op: OperatorSymbol, k: usize) -> Option<PositionPermutation> {
    match op {
        OperatorSymbol::I => Some(PositionPermutation((0..k).map(|j| (j + 1) % k).collect())),
        OperatorSymbol::D => Some(PositionPermutation((0..k).rev().collect())),
        OperatorSymbol::A if k == 4 => Some(PositionPermutation(vec![0, 2, 1, 3])),
        OperatorSymbol::A => None,
    }
}

/// Closure of the gap permutations of `gens` under composition, sorted.
pub fn generated_permutations(gens: &BTreeSet<OperatorSymbol>, k: usize) -> Result<Vec<PositionPermutation>> {
    let perms = gens
        .iter()
        .map(|&op| {
            gap_permutation(op, k).ok_or(Error::WrongArity {
                op: "a",
                expected: "4",
                found: k,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let start = PositionPermutation::identity(k);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for p in &perms {
            let y = x.then(p);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::enumerate_chords;

    fn chord(t: &[i64]) -> Chord {
        Chord::new(t).unwrap()
    }

    fn gens(s: &str) -> BTreeSet<OperatorSymbol> {
        parse_generators(s).unwrap()
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&chord(&[0, 4, 7])), chord(&[0, 3, 8]));
        assert_eq!(invert(&chord(&[0, 4, 8])), chord(&[0, 4, 8]));
        assert_eq!(invert(&chord(&[0, 4, 7, 11])), chord(&[0, 3, 7, 8]));
        assert_eq!(invert(&chord(&[0])), chord(&[0]));
        assert_eq!(invert(&chord(&[0, 2])), chord(&[0, 10]));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&chord(&[0, 4, 7])), chord(&[0, 5, 8]));
        assert_eq!(dual(&chord(&[0, 3, 6])), chord(&[0, 6, 9]));
        assert_eq!(dual(&chord(&[0, 4, 8])), chord(&[0, 4, 8]));
        assert_eq!(dual(&chord(&[0])), chord(&[0]));
    }

    #[test]
    fn augdim_examples() {
        assert_eq!(augdim(&chord(&[0, 4, 7, 11])).unwrap(), chord(&[0, 4, 8, 11]));
        assert_eq!(augdim(&chord(&[0, 3, 6, 10])).unwrap(), chord(&[0, 3, 7, 10]));
        assert_eq!(augdim(&chord(&[0, 3, 6, 9])).unwrap(), chord(&[0, 3, 6, 9]));
        assert!(matches!(
            augdim(&chord(&[0, 4, 7])),
            Err(Error::WrongArity { found: 3, .. })
        ));
    }

    #[test]
    fn apply_word_examples() {
        let w = |s: &str| s.parse::<OperatorWord>().unwrap();
        assert_eq!(apply_word(&w("iii"), &chord(&[0, 4, 7])).unwrap(), chord(&[0, 4, 7]));
        assert_eq!(
            apply_word(&w("dd"), &chord(&[0, 4, 7, 10])).unwrap(),
            chord(&[0, 4, 7, 10])
        );
        assert_eq!(
            apply_word(&w("aa"), &chord(&[0, 4, 7, 11])).unwrap(),
            chord(&[0, 4, 7, 11])
        );
        assert_eq!(apply_word(&w(""), &chord(&[0, 4, 7])).unwrap(), chord(&[0, 4, 7]));
        assert!(apply_word(&w("ia"), &chord(&[0, 4, 7])).is_err());
        // left to right: i then d
        assert_eq!(
            apply_word(&w("ID"), &chord(&[0, 4, 7])).unwrap(),
            dual(&invert(&chord(&[0, 4, 7])))
        );
    }

    #[test]
    fn word_parsing() {
        assert_eq!("IdA".parse::<OperatorWord>().unwrap().to_string(), "ida");
        assert!("ix".parse::<OperatorWord>().is_err());
        assert!("i d".parse::<OperatorWord>().is_err());
        assert_eq!(gens(" i, d ,a").len(), 3);
        assert!(gens("").is_empty());
        assert!(parse_generators("id").is_err());
        assert!(parse_generators("i,x").is_err());
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            orbit(&chord(&[0, 4, 7]), &gens("i")).unwrap(),
            vec![chord(&[0, 3, 8]), chord(&[0, 4, 7]), chord(&[0, 5, 9])]
        );
        assert_eq!(
            orbit(&chord(&[0, 3, 6, 9]), &gens("i,d,a")).unwrap(),
            vec![chord(&[0, 3, 6, 9])]
        );
        assert_eq!(orbit(&chord(&[0, 4, 7, 11]), &gens("i,d,a")).unwrap().len(), 12);
        assert_eq!(orbit(&chord(&[0, 4, 7, 11]), &gens("i")).unwrap().len(), 4);
        assert_eq!(orbit(&chord(&[0, 4, 7]), &gens("")).unwrap(), vec![chord(&[0, 4, 7])]);
        assert!(orbit(&chord(&[0, 4, 7]), &gens("a")).is_err());
    }

    #[test]
    fn involutions_and_order_small_k() {
        for k in 1..=6 {
            for c in enumerate_chords(k).unwrap() {
                assert_eq!(invert_n(&c, 0), c);
                let mut x = c.clone();
                for _ in 0..k {
                    x = invert(&x);
                }
                assert_eq!(x, c, "i^{k} on {c}");
                assert_eq!(dual(&dual(&c)), c);
            }
        }
    }

    #[test]
    fn gap_permutations_match_operators() {
        for c in enumerate_chords(4).unwrap() {
            for op in OperatorSymbol::ALL {
                let p = gap_permutation(op, 4).unwrap();
                assert_eq!(op.apply(&c).unwrap().composition(), c.composition().permuted(&p.0));
            }
        }
        assert!(gap_permutation(OperatorSymbol::A, 3).is_none());
    }

    #[test]
    fn permutation_closure_sizes() {
        assert_eq!(generated_permutations(&gens("i,d,a"), 4).unwrap().len(), 24);
        assert_eq!(generated_permutations(&gens("i,d"), 4).unwrap().len(), 8);
        assert_eq!(generated_permutations(&gens("i"), 4).unwrap().len(), 4);
        assert_eq!(generated_permutations(&gens("i,d"), 3).unwrap().len(), 6);
        assert!(generated_permutations(&gens("a"), 5).is_err());
    }
}
