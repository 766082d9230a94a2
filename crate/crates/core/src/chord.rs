//! Pitch classes, chords, and the gap sequences (compositions and partitions of
//! 12) that describe them.
//!
//! A chord is stored rooted at 0: `(0, a_1, ..., a_{k-1})` with strictly
//! increasing tones. Its *composition* is the ordered list of gaps between
//! consecutive tones, closing with the wrap-around gap back to the octave, and
//! its *partition* is the same gaps sorted ascending.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Number of pitch classes in the scale.
pub const OCTAVE: u8 = 12;

/// A note modulo the octave, 0 = C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PitchClass(u8);

impl PitchClass {
    pub fn new(value: i64) -> Result<Self> {
        if (0..OCTAVE as i64).contains(&value) {
            Ok(PitchClass(value as u8))
        } else {
            Err(Error::ToneOutOfRange(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of simultaneous pitch classes rooted at 0, listed in increasing order.
///
/// The derived ordering is lexicographic on the tone list, which is the order
/// used by every enumeration in this crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord(Vec<PitchClass>);

impl Chord {
    /// Validating constructor. The tones must start at 0 and strictly increase.
    pub fn new(tones: &[i64]) -> Result<Self> {
        let (&first, _) = tones.split_first().ok_or(Error::EmptyChord)?;
        let mut out = Vec::with_capacity(tones.len());
        for &t in tones {
            out.push(PitchClass::new(t)?);
        }
        if first != 0 {
            return Err(Error::FirstToneNotZero(first));
        }
        if let Some(w) = tones.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing { prev: w[0], next: w[1] });
        }
        Ok(Chord(out))
    }

    /// Builds a chord from an arbitrary set of integers: reduces mod 12, drops
    /// duplicates, and transposes so the lowest tone sits at 0.
    pub fn normalize(tones: &[i64]) -> Result<Self> {
        let mut pcs: Vec<u8> = tones.iter().map(|t| t.rem_euclid(OCTAVE as i64) as u8).collect();
        pcs.sort_unstable();
        pcs.dedup();
        let &min = pcs.first().ok_or(Error::EmptyChord)?;
        Ok(Chord(pcs.into_iter().map(|p| PitchClass(p - min)).collect()))
    }

    /// Internal constructor for tone lists already known to be valid.
    pub(crate) fn from_valid(tones: Vec<u8>) -> Self {
        debug_assert!(tones.first() == Some(&0));
        debug_assert!(tones.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(tones.iter().all(|&t| t < OCTAVE));
        Chord(tones.into_iter().map(PitchClass).collect())
    }

    /// Number of tones, `k`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false for a constructed chord; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pitch_classes(&self) -> &[PitchClass] {
        &self.0
    }

    pub fn tones(&self) -> Vec<u8> {
        self.0.iter().map(|p| p.0).collect()
    }

    pub fn composition(&self) -> Composition {
        chord_to_composition(self)
    }

    pub fn partition(&self) -> Partition {
        chord_to_partition(self)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Accepts `0,4,7`, `0, 4, 7` and `(0,4,7)`.
impl FromStr for Chord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = match trimmed.strip_prefix('(') {
            Some(rest) => rest.strip_suffix(')').ok_or_else(|| Error::parse("chord", s))?,
            None => trimmed,
        };
        if inner.trim().is_empty() {
            return Err(Error::EmptyChord);
        }
        let tones = parse_int_list(inner).ok_or_else(|| Error::parse("chord", s))?;
        Chord::new(&tones)
    }
}

/// Ordered gaps between consecutive chord tones, closing with the gap back to 12.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u8>);

impl Composition {
    pub fn new(parts: &[i64]) -> Result<Self> {
        Ok(Composition(validate_parts(parts)?))
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        Partition(parts)
    }

    pub fn to_chord(&self) -> Chord {
        composition_to_chord(self)
    }

    /// Moves the first gap to the end.
    pub fn rotate_left(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.rotate_left(1);
        Composition(parts)
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Swaps the gaps at positions `i` and `j` (zero-based).
    pub fn swapped(&self, i: usize, j: usize) -> Composition {
        let mut parts = self.0.clone();
        parts.swap(i, j);
        Composition(parts)
    }

    /// Rearranges the gaps so that position `j` receives old position `perm[j]`.
    pub fn permuted(&self, perm: &[usize]) -> Composition {
        assert_eq!(perm.len(), self.0.len(), "permutation length mismatch");
        Composition(perm.iter().map(|&src| self.0[src]).collect())
    }
}

/// An unordered partition of 12, stored with parts ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u8>);

impl Partition {
    /// Accepts the parts in any order and sorts them.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut parts = validate_parts(parts)?;
        parts.sort_unstable();
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts that are at most `bound`.
    pub fn count_at_most(&self, bound: u8) -> usize {
        self.0.iter().filter(|&&p| p <= bound).count()
    }
}

fn validate_parts(parts: &[i64]) -> Result<Vec<u8>> {
    let bad = |reason| Error::InvalidParts {
        parts: parts.to_vec(),
        reason,
    };
    if parts.is_empty() {
        return Err(bad("no parts"));
    }
    if parts.iter().any(|&p| p < 1) {
        return Err(bad("every part must be positive"));
    }
    if parts.iter().sum::<i64>() != OCTAVE as i64 {
        return Err(bad("parts must sum to 12"));
    }
    Ok(parts.iter().map(|&p| p as u8).collect())
}

fn write_bracketed(f: &mut fmt::Formatter<'_>, parts: &[u8]) -> fmt::Result {
    f.write_str("[")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str("]")
}

fn parse_bracketed(s: &str, what: &'static str) -> Result<Vec<i64>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse(what, s))?;
    parse_int_list(inner).ok_or_else(|| Error::parse(what, s))
}

fn parse_int_list(s: &str) -> Option<Vec<i64>> {
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(&parse_bracketed(s, "composition")?)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(&parse_bracketed(s, "partition")?)
    }
}

/// Validating front door for raw tone lists.
pub fn make_chord(tones: &[i64]) -> Result<Chord> {
    Chord::new(tones)
}

/// `(0, a_1, ..., a_{k-1}) -> [a_1, a_2 - a_1, ..., 12 - a_{k-1}]`
pub fn chord_to_composition(c: &Chord) -> Composition {
    let tones = c.tones();
    let gaps = tones
        .iter()
        .zip(tones.iter().skip(1).chain(std::iter::once(&OCTAVE)))
        .map(|(lo, hi)| hi - lo)
        .collect();
    Composition(gaps)
}

pub fn chord_to_partition(c: &Chord) -> Partition {
    chord_to_composition(c).to_partition()
}

/// Prefix sums of the gaps, dropping the final one (which is always 12).
pub fn composition_to_chord(comp: &Composition) -> Chord {
    let mut tones = Vec::with_capacity(comp.len());
    let mut acc = 0u8;
    for &p in &comp.0[..comp.len() - 1] {
        tones.push(acc);
        acc += p;
    }
    tones.push(acc);
    Chord::from_valid(tones)
}

fn check_size(k: i64) -> Result<usize> {
    if (1..=OCTAVE as i64).contains(&k) {
        Ok(k as usize)
    } else {
        Err(Error::InvalidSize(k))
    }
}

/// Every `k`-tone chord in lexicographic order; there are `C(11, k-1)` of them.
pub fn enumerate_chords(k: i64) -> Result<Vec<Chord>> {
    let k = check_size(k)?;
    let mut out = Vec::new();
    let mut current = vec![0u8];
    extend_chords(&mut current, 1, k, &mut out);
    Ok(out)
}

fn extend_chords(current: &mut Vec<u8>, next: u8, k: usize, out: &mut Vec<Chord>) {
    if current.len() == k {
        out.push(Chord::from_valid(current.clone()));
        return;
    }
    let remaining = (k - current.len()) as u8;
    for t in next..=(OCTAVE - remaining) {
        current.push(t);
        extend_chords(current, t + 1, k, out);
        current.pop();
    }
}

/// Every partition of 12 into exactly `k` parts, in lexicographic order.
pub fn enumerate_partitions(k: i64) -> Result<Vec<Partition>> {
    let k = check_size(k)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    extend_partitions(&mut current, 1, OCTAVE, k, &mut out);
    Ok(out)
}

fn extend_partitions(current: &mut Vec<u8>, min: u8, left: u8, k: usize, out: &mut Vec<Partition>) {
    let slots = (k - current.len()) as u8;
    if slots == 1 {
        if left >= min {
            current.push(left);
            out.push(Partition(current.clone()));
            current.pop();
        }
        return;
    }
    // the remaining slots - 1 parts are each at least `p`
    let mut p = min;
    while p * slots <= left {
        current.push(p);
        extend_partitions(current, p, left - p, k, out);
        current.pop();
        p += 1;
    }
}

/// All chords whose gaps rearrange to `p`, one per distinct ordering of its
/// parts, in lexicographic order.
pub fn chords_of_partition(p: &Partition) -> Vec<Chord> {
    let mut parts = p.0.clone();
    let mut out = vec![composition_to_chord(&Composition(parts.clone()))];
    while next_permutation(&mut parts) {
        out.push(composition_to_chord(&Composition(parts.clone())));
    }
    out
}

/// Advances to the next lexicographic arrangement, skipping repeats; false once
/// the last arrangement is reached.
fn next_permutation(xs: &mut [u8]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).expect("pivot has a successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chord(t: &[i64]) -> Chord {
        Chord::new(t).unwrap()
    }

    #[test]
    fn make_chord_examples() {
        assert_eq!(make_chord(&[0, 4, 7]).unwrap().tones(), vec![0, 4, 7]);
        assert_eq!(make_chord(&[0]).unwrap().len(), 1);
        assert_eq!(
            make_chord(&[0, 7, 4]),
            Err(Error::NotStrictlyIncreasing { prev: 7, next: 4 })
        );
    }

    #[test]
    fn make_chord_errors() {
        assert_eq!(make_chord(&[]), Err(Error::EmptyChord));
        assert_eq!(make_chord(&[2, 4]), Err(Error::FirstToneNotZero(2)));
        assert_eq!(make_chord(&[0, 12]), Err(Error::ToneOutOfRange(12)));
        assert_eq!(make_chord(&[0, -3]), Err(Error::ToneOutOfRange(-3)));
        assert!(matches!(
            make_chord(&[0, 4, 4]),
            Err(Error::NotStrictlyIncreasing { .. })
        ));
    }

    #[test]
    fn normalize_transposes_and_dedupes() {
        assert_eq!(Chord::normalize(&[4, 8, 23]).unwrap(), chord(&[0, 4, 7]));
        // lowest pitch class becomes the root: {7, 11, 2} -> (0, 5, 9)
        assert_eq!(Chord::normalize(&[7, 11, 14]).unwrap(), chord(&[0, 5, 9]));
        assert_eq!(Chord::normalize(&[4, 4, 16, 0]).unwrap(), chord(&[0, 4]));
        assert_eq!(Chord::normalize(&[-1]).unwrap(), chord(&[0]));
        assert_eq!(Chord::normalize(&[]), Err(Error::EmptyChord));
    }

    #[test]
    fn composition_examples() {
        assert_eq!(chord_to_composition(&chord(&[0, 4, 7])).parts(), &[4, 3, 5]);
        assert_eq!(chord_to_composition(&chord(&[0, 4, 7, 11])).parts(), &[4, 3, 4, 1]);
        assert_eq!(chord_to_composition(&chord(&[0])).parts(), &[12]);
    }

    #[test]
    fn partition_examples() {
        assert_eq!(chord_to_partition(&chord(&[0, 4, 7])).parts(), &[3, 4, 5]);
        assert_eq!(chord_to_partition(&chord(&[0, 3, 8])).parts(), &[3, 4, 5]);
        assert_eq!(chord_to_partition(&chord(&[0, 3, 6, 9])).parts(), &[3, 3, 3, 3]);
    }

    #[test]
    fn composition_to_chord_examples() {
        let c = |p: &[i64]| composition_to_chord(&Composition::new(p).unwrap());
        assert_eq!(c(&[3, 5, 4]), chord(&[0, 3, 8]));
        assert_eq!(c(&[12]), chord(&[0]));
        assert_eq!(c(&[4, 3, 4, 1]), chord(&[0, 4, 7, 11]));
    }

    #[test]
    fn parts_validation() {
        assert!(Composition::new(&[4, 3, 4]).is_err());
        assert!(Composition::new(&[13, -1]).is_err());
        assert!(Composition::new(&[]).is_err());
        assert_eq!(Partition::new(&[5, 3, 4]).unwrap().parts(), &[3, 4, 5]);
    }

    #[test]
    fn enumerate_chord_counts() {
        assert_eq!(enumerate_chords(3).unwrap().len(), 55);
        assert_eq!(enumerate_chords(4).unwrap().len(), 165);
        assert_eq!(enumerate_chords(1).unwrap(), vec![chord(&[0])]);
        assert_eq!(enumerate_chords(12).unwrap().len(), 1);
        assert_eq!(enumerate_chords(0), Err(Error::InvalidSize(0)));
        assert_eq!(enumerate_chords(13), Err(Error::InvalidSize(13)));
        let triads = enumerate_chords(3).unwrap();
        assert!(triads.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn enumerate_partition_examples() {
        let harmonic: Vec<String> = enumerate_partitions(3)
            .unwrap()
            .into_iter()
            .filter(|p| p.parts().iter().all(|&x| x >= 3))
            .map(|p| p.to_string())
            .collect();
        assert_eq!(harmonic, ["[3,3,6]", "[3,4,5]", "[4,4,4]"]);
        assert_eq!(enumerate_partitions(1).unwrap()[0].parts(), &[12]);
        assert_eq!(
            enumerate_partitions(12).unwrap(),
            vec![Partition::new(&[1; 12]).unwrap()]
        );
        assert!(enumerate_partitions(0).is_err());
        // p(12, 3) = 12, p(12, 4) = 15
        assert_eq!(enumerate_partitions(3).unwrap().len(), 12);
        assert_eq!(enumerate_partitions(4).unwrap().len(), 15);
    }

    #[test]
    fn chords_of_partition_examples() {
        let p = Partition::new(&[4, 4, 3, 1]).unwrap();
        assert_eq!(chords_of_partition(&p).len(), 12);
        let p = Partition::new(&[3, 3, 3, 3]).unwrap();
        assert_eq!(chords_of_partition(&p), vec![chord(&[0, 3, 6, 9])]);
        let p = Partition::new(&[3, 4, 5]).unwrap();
        let cs = chords_of_partition(&p);
        assert_eq!(cs.len(), 6);
        assert!(cs.contains(&chord(&[0, 4, 7])) && cs.contains(&chord(&[0, 3, 8])));
        assert!(cs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn text_forms() {
        assert_eq!("0,4,7".parse::<Chord>().unwrap(), chord(&[0, 4, 7]));
        assert_eq!(" ( 0, 4 ,7 ) ".parse::<Chord>().unwrap(), chord(&[0, 4, 7]));
        assert_eq!(chord(&[0, 4, 7, 11]).to_string(), "0,4,7,11");
        assert_eq!("".parse::<Chord>(), Err(Error::EmptyChord));
        assert!(matches!("0,x".parse::<Chord>(), Err(Error::Parse { .. })));
        assert!(matches!("(0,4".parse::<Chord>(), Err(Error::Parse { .. })));
        assert_eq!("[5,3,4]".parse::<Partition>().unwrap().to_string(), "[3,4,5]");
        assert_eq!("[5,3,4]".parse::<Composition>().unwrap().to_string(), "[5,3,4]");
        assert!("5,3,4".parse::<Partition>().is_err());
    }
}
