//! Harmonic three- and four-tone chords and their labels.
//!
//! A triad is harmonic when none of its gaps is 1 or 2; a four-tone chord is
//! harmonic when at most one gap is 1 or 2. Every harmonic chord is
//! `invert^n(root)` for exactly one family root, which gives it the label
//! `(family, n)`.
//!
//! The tables are built from the family roots and `invert` alone.
//!
//! The seven seventh families cover the partition classes `[1,3,4,4]`,
//! `[2,3,3,4]` and `[3,3,3,3]`, 25 chords in all. The four-tone predicate also
//! admits the class `[1,3,3,5]` (for example `(0,3,6,11)`, a diminished triad
//! with a major seventh), which no family covers. Those 12 chords classify as
//! [`Classification::HarmonicUnlabeled`].
//!
//! Seventh-family codes and their common names:
//!
//! | code | name                   | alias                  |
//! |------|------------------------|------------------------|
//! | `MM` | major-major seventh    | major seventh          |
//! | `mM` | minor-major seventh    |                        |
//! | `AM` | augmented-major seventh|                        |
//! | `Mm` | major-minor seventh    | dominant seventh       |
//! | `dm` | diminished-minor       | half-diminished seventh|
//! | `mm` | minor-minor seventh    | minor seventh          |
//! | `dd` | diminished-diminished  | fully diminished       |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use crate::chord::{chord_to_partition, Chord};
use crate::error::{Error, Result};
use crate::transform::{dual, invert};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriadFamily {
    Major,
    Minor,
    Diminished,
    Augmented,
}

impl TriadFamily {
    pub const ALL: [TriadFamily; 4] = [
        TriadFamily::Major,
        TriadFamily::Minor,
        TriadFamily::Diminished,
        TriadFamily::Augmented,
    ];

    pub fn root(self) -> Chord {
        let tones: [u8; 3] = match self {
            TriadFamily::Major => [0, 4, 7],
            TriadFamily::Minor => [0, 3, 7],
            TriadFamily::Diminished => [0, 3, 6],
            TriadFamily::Augmented => [0, 4, 8],
        };
        Chord::from_valid(tones.to_vec())
    }

    pub fn name(self) -> &'static str {
        match self {
            TriadFamily::Major => "Major",
            TriadFamily::Minor => "Minor",
            TriadFamily::Diminished => "Diminished",
            TriadFamily::Augmented => "Augmented",
        }
    }
}

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeventhFamily {
    /// Major-major (major seventh).
    MM,
    /// Minor-major.
    mM,
    /// Augmented-major.
    AM,
    /// Major-minor (dominant seventh).
    Mm,
    /// Diminished-minor.
    dm,
    /// Minor-minor.
    mm,
    /// Diminished-diminished.
    dd,
}

impl SeventhFamily {
    pub const ALL: [SeventhFamily; 7] = [
        SeventhFamily::MM,
        SeventhFamily::mM,
        SeventhFamily::AM,
        SeventhFamily::Mm,
        SeventhFamily::dm,
        SeventhFamily::mm,
        SeventhFamily::dd,
    ];

    pub fn root(self) -> Chord {
        let tones: [u8; 4] = match self {
            SeventhFamily::MM => [0, 4, 7, 11],
            SeventhFamily::mM => [0, 3, 7, 11],
            SeventhFamily::AM => [0, 4, 8, 11],
            SeventhFamily::Mm => [0, 4, 7, 10],
            SeventhFamily::dm => [0, 3, 6, 10],
            SeventhFamily::mm => [0, 3, 7, 10],
            SeventhFamily::dd => [0, 3, 6, 9],
        };
        Chord::from_valid(tones.to_vec())
    }

    pub fn code(self) -> &'static str {
        match self {
            SeventhFamily::MM => "MM",
            SeventhFamily::mM => "mM",
            SeventhFamily::AM => "AM",
            SeventhFamily::Mm => "Mm",
            SeventhFamily::dm => "dm",
            SeventhFamily::mm => "mm",
            SeventhFamily::dd => "dd",
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            SeventhFamily::MM => "major-major",
            SeventhFamily::mM => "minor-major",
            SeventhFamily::AM => "augmented-major",
            SeventhFamily::Mm => "major-minor",
            SeventhFamily::dm => "diminished-minor",
            SeventhFamily::mm => "minor-minor",
            SeventhFamily::dd => "diminished-diminished",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Triad(TriadFamily),
    Seventh(SeventhFamily),
}

impl Family {
    pub fn all() -> impl Iterator<Item = Family> {
        TriadFamily::ALL
            .into_iter()
            .map(Family::Triad)
            .chain(SeventhFamily::ALL.into_iter().map(Family::Seventh))
    }

    pub fn root(self) -> Chord {
        match self {
            Family::Triad(f) => f.root(),
            Family::Seventh(f) => f.root(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Triad(f) => f.name(),
            Family::Seventh(f) => f.code(),
        }
    }

    /// Number of distinct inversions, i.e. the size of the root's `i`-orbit.
    pub fn inversion_count(self) -> usize {
        inversion_row(&self.root()).len()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::all()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::parse("chord family", s))
    }
}

/// A family together with an inversion index (0 = root position).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordLabel {
    pub family: Family,
    pub inversion: u8,
}

impl ChordLabel {
    pub fn new(family: Family, inversion: u8) -> Result<Self> {
        if (inversion as usize) < family.inversion_count() {
            Ok(ChordLabel { family, inversion })
        } else {
            Err(Error::parse("chord label", &format!("{family}{inversion}")))
        }
    }

    /// `invert^inversion(root)`.
    pub fn chord(&self) -> Chord {
        (0..self.inversion).fold(self.family.root(), |c, _| invert(&c))
    }
}

/// `"MM0"`, `"dm3"`, `"Major2"`.
impl fmt::Display for ChordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.inversion)
    }
}

impl FromStr for ChordLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::parse("chord label", s))?;
        let (name, index) = s.split_at(split);
        let family: Family = name.parse()?;
        let inversion = index.parse().map_err(|_| Error::parse("chord label", s))?;
        ChordLabel::new(family, inversion)
    }
}

/// Result of classifying a three- or four-tone chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Harmonic(ChordLabel),
    /// Passes the harmonic predicate but belongs to none of the families.
    HarmonicUnlabeled,
    NotHarmonic,
}

impl Classification {
    pub fn label(self) -> Option<ChordLabel> {
        match self {
            Classification::Harmonic(l) => Some(l),
            _ => None,
        }
    }

    pub fn is_harmonic(self) -> bool {
        !matches!(self, Classification::NotHarmonic)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Harmonic(l) => write!(f, "{l}"),
            Classification::HarmonicUnlabeled => f.write_str("harmonic, no family"),
            Classification::NotHarmonic => f.write_str("not harmonic"),
        }
    }
}

fn arity(c: &Chord, expected: &'static str, n: usize) -> Result<()> {
    if c.len() == n {
        Ok(())
    } else {
        Err(Error::WrongArity {
            op: "classify",
            expected,
            found: c.len(),
        })
    }
}

/// No gap of 1 or 2.
pub fn is_harmonic_triad(c: &Chord) -> Result<bool> {
    arity(c, "3", 3)?;
    Ok(chord_to_partition(c).count_at_most(2) == 0)
}

/// At most one gap of 1 or 2.
pub fn is_harmonic_seventh(c: &Chord) -> Result<bool> {
    arity(c, "4", 4)?;
    Ok(chord_to_partition(c).count_at_most(2) <= 1)
}

/// `[root, i(root), i^2(root), ...]` until the orbit closes.
pub fn inversion_row(root: &Chord) -> Vec<Chord> {
    let mut row = vec![root.clone()];
    let mut next = invert(root);
    while &next != root {
        row.push(next.clone());
        next = invert(&next);
    }
    row
}

fn build_table(families: impl Iterator<Item = Family>) -> BTreeMap<Chord, ChordLabel> {
    let mut table = BTreeMap::new();
    for family in families {
        for (n, chord) in inversion_row(&family.root()).into_iter().enumerate() {
            let label = ChordLabel {
                family,
                inversion: n as u8,
            };
            let prev = table.insert(chord, label);
            assert!(prev.is_none(), "two families share a chord ({label})");
        }
    }
    table
}

static TRIAD_TABLE: LazyLock<BTreeMap<Chord, ChordLabel>> =
    LazyLock::new(|| build_table(TriadFamily::ALL.into_iter().map(Family::Triad)));

static SEVENTH_TABLE: LazyLock<BTreeMap<Chord, ChordLabel>> =
    LazyLock::new(|| build_table(SeventhFamily::ALL.into_iter().map(Family::Seventh)));

/// The 10 harmonic triads, labeled.
pub fn triad_table() -> &'static BTreeMap<Chord, ChordLabel> {
    &TRIAD_TABLE
}

/// The 25 four-tone chords of the seven seventh families, labeled.
pub fn seventh_table() -> &'static BTreeMap<Chord, ChordLabel> {
    &SEVENTH_TABLE
}

pub fn classify(c: &Chord) -> Result<Classification> {
    let (table, harmonic) = match c.len() {
        3 => (triad_table(), is_harmonic_triad(c)?),
        4 => (seventh_table(), is_harmonic_seventh(c)?),
        n => {
            return Err(Error::WrongArity {
                op: "classify",
                expected: "3 or 4",
                found: n,
            })
        }
    };
    Ok(match table.get(c) {
        Some(&label) => Classification::Harmonic(label),
        None if harmonic => Classification::HarmonicUnlabeled,
        None => Classification::NotHarmonic,
    })
}

/// Where `dual` sends a family: `dual(row n of F) = row (shift - n) mod r of F'`,
/// with `r` the number of inversions. Returns `(F', shift)`, read off from the
/// dual of the root.
pub fn dual_family(family: Family) -> (Family, u8) {
    let image = dual(&family.root());
    let label = classify(&image)
        .ok()
        .and_then(Classification::label)
        .expect("dual of a harmonic chord is harmonic");
    (label.family, label.inversion)
}

/// The label of `dual(label.chord())` predicted from [`dual_family`].
pub fn dual_label(label: ChordLabel) -> ChordLabel {
    let (target, shift) = dual_family(label.family);
    let r = label.family.inversion_count() as i64;
    ChordLabel {
        family: target,
        inversion: (shift as i64 - label.inversion as i64).rem_euclid(r) as u8,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::enumerate_chords;

    fn chord(t: &[i64]) -> Chord {
        Chord::new(t).unwrap()
    }

    fn label(s: &str) -> ChordLabel {
        s.parse().unwrap()
    }

    #[test]
    fn triad_predicate() {
        assert!(is_harmonic_triad(&chord(&[0, 4, 7])).unwrap());
        assert!(!is_harmonic_triad(&chord(&[0, 2, 7])).unwrap());
        assert!(is_harmonic_triad(&chord(&[0, 4, 7, 11])).is_err());
        let n = enumerate_chords(3)
            .unwrap()
            .iter()
            .filter(|c| is_harmonic_triad(c).unwrap())
            .count();
        assert_eq!(n, 10);
    }

    #[test]
    fn seventh_predicate() {
        assert!(is_harmonic_seventh(&chord(&[0, 4, 7, 11])).unwrap());
        assert!(!is_harmonic_seventh(&chord(&[0, 1, 2, 7])).unwrap());
        assert!(is_harmonic_seventh(&chord(&[0, 4, 7])).is_err());
        let n = enumerate_chords(4)
            .unwrap()
            .iter()
            .filter(|c| is_harmonic_seventh(c).unwrap())
            .count();
        // 12 each for [1,3,3,5], [1,3,4,4], [2,3,3,4], plus [3,3,3,3]
        assert_eq!(n, 37);
        assert!(seventh_table().keys().all(|c| is_harmonic_seventh(c).unwrap()));
    }

    #[test]
    fn triad_table_examples() {
        let t = triad_table();
        assert_eq!(t.len(), 10);
        assert_eq!(t[&chord(&[0, 5, 9])], label("Major2"));
        assert_eq!(t[&chord(&[0, 4, 9])], label("Minor1"));
        assert_eq!(t[&chord(&[0, 4, 8])], label("Augmented0"));
    }

    #[test]
    fn seventh_table_examples() {
        let t = seventh_table();
        assert_eq!(t.len(), 25);
        assert_eq!(t[&chord(&[0, 3, 6, 8])], label("Mm1"));
        assert_eq!(t[&chord(&[0, 1, 5, 9])], label("AM3"));
        assert_eq!(t[&chord(&[0, 3, 6, 9])], label("dd0"));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&chord(&[0, 3, 7, 9])).unwrap(),
            Classification::Harmonic(label("dm1"))
        );
        assert_eq!(classify(&chord(&[0, 1, 2, 3])).unwrap(), Classification::NotHarmonic);
        assert_eq!(
            classify(&chord(&[0, 3, 7])).unwrap(),
            Classification::Harmonic(label("Minor0"))
        );
        assert!(classify(&chord(&[0, 4])).is_err());
        assert_eq!(
            classify(&chord(&[0, 3, 6, 11])).unwrap(),
            Classification::HarmonicUnlabeled
        );
        assert_eq!(Classification::HarmonicUnlabeled.to_string(), "harmonic, no family");
        assert_eq!(Classification::NotHarmonic.to_string(), "not harmonic");
    }

    #[test]
    fn label_text() {
        assert_eq!(label("MM0").to_string(), "MM0");
        assert_eq!(label("Major2").chord(), chord(&[0, 5, 9]));
        assert!("Augmented1".parse::<ChordLabel>().is_err());
        assert!("dd1".parse::<ChordLabel>().is_err());
        assert!("mm".parse::<ChordLabel>().is_err());
        assert!("MAJOR0".parse::<ChordLabel>().is_err());
        assert!("Xy2".parse::<ChordLabel>().is_err());
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(Family::Triad(TriadFamily::Augmented).inversion_count(), 1);
        assert_eq!(Family::Seventh(SeventhFamily::dd).inversion_count(), 1);
        assert_eq!(Family::Seventh(SeventhFamily::Mm).inversion_count(), 4);
    }

    #[test]
    fn dual_family_shifts() {
        use SeventhFamily::*;
        let f = Family::Seventh;
        assert_eq!(dual_family(f(MM)), (f(MM), 3));
        assert_eq!(dual_family(f(mM)), (f(AM), 3));
        assert_eq!(dual_family(f(Mm)), (f(dm), 3));
        assert_eq!(dual_family(f(mm)), (f(mm), 3));
        assert_eq!(dual_family(f(dd)), (f(dd), 0));
        let t = Family::Triad;
        assert_eq!(dual_family(t(TriadFamily::Major)), (t(TriadFamily::Minor), 2));
        assert_eq!(dual_family(t(TriadFamily::Diminished)), (t(TriadFamily::Diminished), 2));
    }

    #[test]
    fn diminished_triad_duality() {
        assert_eq!(dual_label(label("Diminished0")), label("Diminished2"));
        assert_eq!(dual_label(label("Diminished1")), label("Diminished1"));
        assert_eq!(dual_label(label("Diminished2")), label("Diminished0"));
    }
}
