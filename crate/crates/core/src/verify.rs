//! Exhaustive self-checks over every invariant of the library.
//!
//! Each check produces one [`Check`] line such as `seventh-rows: PASS` or
//! `components: 12+12 PASS`. The reference rows below are the published
//! inversion orbits, written out literally so that the computed tables are
//! compared against independent data.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::chord::{
    chord_to_composition, chord_to_partition, chords_of_partition, composition_to_chord, enumerate_chords,
    enumerate_partitions, Chord, Partition,
};
use crate::classify::{
    dual_label, is_harmonic_seventh, is_harmonic_triad, seventh_table, triad_table, ChordLabel, Family, SeventhFamily,
    TriadFamily,
};
use crate::graph::{build_chord_graph, component_isomorphism, connected_components, NodeId};
use crate::transform::{augdim, dual, gap_permutation, generated_permutations, invert, invert_n, OperatorSymbol};

/// Inversion orbits of the seven seventh-chord families, row `n` being the
/// `n`-th inversion.
pub const SEVENTH_ROWS: [(SeventhFamily, &[[u8; 4]]); 7] = [
    (
        SeventhFamily::MM,
        &[[0, 4, 7, 11], [0, 3, 7, 8], [0, 4, 5, 9], [0, 1, 5, 8]],
    ),
    (
        SeventhFamily::mM,
        &[[0, 3, 7, 11], [0, 4, 8, 9], [0, 4, 5, 8], [0, 1, 4, 8]],
    ),
    (
        SeventhFamily::AM,
        &[[0, 4, 8, 11], [0, 4, 7, 8], [0, 3, 4, 8], [0, 1, 5, 9]],
    ),
    (
        SeventhFamily::Mm,
        &[[0, 4, 7, 10], [0, 3, 6, 8], [0, 3, 5, 9], [0, 2, 6, 9]],
    ),
    (
        SeventhFamily::dm,
        &[[0, 3, 6, 10], [0, 3, 7, 9], [0, 4, 6, 9], [0, 2, 5, 8]],
    ),
    (
        SeventhFamily::mm,
        &[[0, 3, 7, 10], [0, 4, 7, 9], [0, 3, 5, 8], [0, 2, 5, 9]],
    ),
    (SeventhFamily::dd, &[[0, 3, 6, 9]]),
];

/// Inversion orbits of the harmonic triads.
pub const TRIAD_ROWS: [(TriadFamily, &[[u8; 3]]); 4] = [
    (TriadFamily::Major, &[[0, 4, 7], [0, 3, 8], [0, 5, 9]]),
    (TriadFamily::Minor, &[[0, 3, 7], [0, 4, 9], [0, 5, 8]]),
    (TriadFamily::Diminished, &[[0, 3, 6], [0, 3, 9], [0, 6, 9]]),
    (TriadFamily::Augmented, &[[0, 4, 8]]),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// Short result summary printed before the verdict, e.g. `12+12`.
    pub summary: Option<String>,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>, failures: Vec<String>) -> Self {
        Check {
            name: name.into(),
            summary: None,
            passed: failures.is_empty(),
            failures,
        }
    }

    fn with_summary(mut self, summary: impl Into<String>) -> Self {
        self.summary = Some(summary.into());
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.name)?;
        if let Some(s) = &self.summary {
            write!(f, "{s} ")?;
        }
        f.write_str(if self.passed { "PASS" } else { "FAIL" })?;
        if let Some(first) = self.failures.first() {
            write!(f, " ({} violations; first: {first})", self.failures.len())?;
        }
        Ok(())
    }
}

fn chord(tones: &[u8]) -> Chord {
    Chord::new(&tones.iter().map(|&t| t as i64).collect::<Vec<_>>()).expect("reference chords are valid")
}

fn expect_eq<T: PartialEq + fmt::Debug>(failures: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        failures.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

/// Runs every check, in a fixed order.
pub fn run_all() -> Vec<Check> {
    let mut checks = vec![round_trip(), counting(), partition_fibers()];
    checks.extend((2..=6).map(relations));
    checks.extend([
        composition_action(),
        position_group(),
        harmonic_triad_partitions(),
        harmonic_triads(),
        harmonic_tetrads(),
        labeled_tetrads(),
        triad_orbits(),
        seventh_rows(),
        spot_checks(),
        dual_pairing(),
        graph_degrees(),
        graph_fixed_points(),
        components(false),
        components(true),
        isomorphism(),
    ]);
    checks
}

/// Composition and back is the identity on every chord with up to 6 tones.
pub fn round_trip() -> Check {
    let mut failures = Vec::new();
    for k in 1..=6 {
        for c in enumerate_chords(k).expect("valid size") {
            let comp = chord_to_composition(&c);
            if comp.parts().iter().map(|&p| p as u32).sum::<u32>() != 12 {
                failures.push(format!("{c}: gaps {comp} do not sum to 12"));
            }
            if composition_to_chord(&comp) != c {
                failures.push(format!("{c}: round trip through {comp} failed"));
            }
        }
    }
    Check::new("round-trip(k<=6)", failures)
}

fn binomial(n: u64, r: u64) -> u64 {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn counting() -> Check {
    let mut failures = Vec::new();
    for k in 1..=12 {
        let n = enumerate_chords(k).expect("valid size").len() as u64;
        expect_eq(
            &mut failures,
            &format!("chords of size {k}"),
            n,
            binomial(11, k as u64 - 1),
        );
    }
    Check::new("counting", failures)
}

/// Chords grouped by partition cover each size exactly once.
pub fn partition_fibers() -> Check {
    let mut failures = Vec::new();
    for k in 1..=12 {
        let mut union = Vec::new();
        for p in enumerate_partitions(k).expect("valid size") {
            for c in chords_of_partition(&p) {
                if chord_to_partition(&c) != p {
                    failures.push(format!("{c} listed under {p}"));
                }
                union.push(c);
            }
        }
        union.sort();
        expect_eq(
            &mut failures,
            &format!("fibers of size {k}"),
            union,
            enumerate_chords(k).expect("valid size"),
        );
    }
    Check::new("partition-fibers", failures)
}

/// `i^k = d^2 = id`, `d . i^n = i^(k-n) . d`, and for `k = 4` also `a^2 = id`.
pub fn relations(k: i64) -> Check {
    let mut failures = Vec::new();
    let k_us = k as usize;
    for c in enumerate_chords(k).expect("valid size") {
        let mut x = c.clone();
        for _ in 0..k_us {
            x = invert(&x);
        }
        if x != c {
            failures.push(format!("i^{k}({c}) = {x}"));
        }
        if dual(&dual(&c)) != c {
            failures.push(format!("d^2({c}) != {c}"));
        }
        if k == 4 {
            let a = augdim(&c).expect("four tones");
            if augdim(&a).expect("four tones") != c {
                failures.push(format!("a^2({c}) != {c}"));
            }
        }
        for n in 0..=k_us {
            let lhs = dual(&invert_n(&c, n));
            let rhs = invert_n(&dual(&c), k_us - n);
            if lhs != rhs {
                failures.push(format!("d i^{n} ({c}) = {lhs} but i^{} d ({c}) = {rhs}", k_us - n));
            }
        }
    }
    Check::new(format!("relations(k={k})"), failures)
}

/// On four-tone chords: `i` rotates the gaps left, `d` reverses them, `a`
/// swaps the middle two. All three keep the partition.
pub fn composition_action() -> Check {
    let mut failures = Vec::new();
    for c in enumerate_chords(4).expect("valid size") {
        let comp = chord_to_composition(&c);
        let expected = [
            (OperatorSymbol::I, comp.rotate_left()),
            (OperatorSymbol::D, comp.reversed()),
            (OperatorSymbol::A, comp.swapped(1, 2)),
        ];
        for (op, want) in expected {
            let got = op.apply(&c).expect("four tones");
            expect_eq(
                &mut failures,
                &format!("{op}({c}) gaps"),
                chord_to_composition(&got),
                want,
            );
            expect_eq(
                &mut failures,
                &format!("{op}({c}) partition"),
                chord_to_partition(&got),
                comp.to_partition(),
            );
        }
    }
    Check::new("composition-action(k=4)", failures)
}

/// The gap permutations of `i`, `d`, `a` generate all 24 rearrangements.
pub fn position_group() -> Check {
    let gens: BTreeSet<_> = OperatorSymbol::ALL.into_iter().collect();
    let dihedral: BTreeSet<_> = [OperatorSymbol::I, OperatorSymbol::D].into_iter().collect();
    let mut failures = Vec::new();
    let full = generated_permutations(&gens, 4).expect("k = 4").len();
    expect_eq(&mut failures, "closure of {i,d,a}", full, 24);
    let dih = generated_permutations(&dihedral, 4).expect("k = 4").len();
    expect_eq(&mut failures, "closure of {i,d}", dih, 8);
    for c in enumerate_chords(4).expect("valid size") {
        for op in OperatorSymbol::ALL {
            let p = gap_permutation(op, 4).expect("k = 4");
            let via_perm = composition_to_chord(&chord_to_composition(&c).permuted(&p.0));
            expect_eq(
                &mut failures,
                &format!("{op}({c}) via permutation"),
                op.apply(&c).expect("four tones"),
                via_perm,
            );
        }
    }
    Check::new("position-group", failures).with_summary(full.to_string())
}

/// The three-part partitions of 12 with every part at least 3.
pub fn harmonic_triad_partitions() -> Check {
    let got: Vec<Partition> = enumerate_partitions(3)
        .expect("valid size")
        .into_iter()
        .filter(|p| p.count_at_most(2) == 0)
        .collect();
    let want: Vec<Partition> = ["[3,3,6]", "[3,4,5]", "[4,4,4]"]
        .iter()
        .map(|s| s.parse().expect("valid partition"))
        .collect();
    let mut failures = Vec::new();
    expect_eq(&mut failures, "harmonic triad partitions", got, want);
    Check::new("harmonic-partitions(k=3)", failures)
}

fn filter_count(k: i64, pred: fn(&Chord) -> crate::Result<bool>) -> Vec<Chord> {
    enumerate_chords(k)
        .expect("valid size")
        .into_iter()
        .filter(|c| pred(c).expect("matching arity"))
        .collect()
}

/// The triad table covers exactly the chords passing the harmonic filter.
pub fn harmonic_triads() -> Check {
    let harmonic = filter_count(3, is_harmonic_triad);
    let mut failures = Vec::new();
    expect_eq(&mut failures, "harmonic triads", harmonic.len(), 10);
    let table: Vec<Chord> = triad_table().keys().cloned().collect();
    expect_eq(&mut failures, "triad table domain", table, harmonic.clone());
    Check::new("harmonic-triads", failures).with_summary(harmonic.len().to_string())
}

/// Expects the predicate to select exactly the 25 family chords, split
/// 12 + 12 + 1 over `[1,3,4,4]`, `[2,3,3,4]`, `[3,3,3,3]`.
///
/// This fails: the predicate also admits the 12 chords of `[1,3,3,5]`, which
/// the summary count (37) shows.
pub fn harmonic_tetrads() -> Check {
    let harmonic = filter_count(4, is_harmonic_seventh);
    let mut failures = Vec::new();
    expect_eq(&mut failures, "harmonic tetrads", harmonic.len(), 25);
    let mut classes: BTreeMap<String, usize> = BTreeMap::new();
    for c in &harmonic {
        *classes.entry(chord_to_partition(c).to_string()).or_default() += 1;
    }
    let want: BTreeMap<String, usize> = [("[1,3,4,4]", 12), ("[2,3,3,4]", 12), ("[3,3,3,3]", 1)]
        .into_iter()
        .map(|(p, n)| (p.to_string(), n))
        .collect();
    expect_eq(&mut failures, "partition classes", classes, want);
    let table: Vec<Chord> = seventh_table().keys().cloned().collect();
    expect_eq(&mut failures, "seventh table domain", table, harmonic.clone());
    Check::new("harmonic-tetrads", failures).with_summary(harmonic.len().to_string())
}

fn row_failures(failures: &mut Vec<String>, family: Family, rows: &[Chord]) {
    for (n, want) in rows.iter().enumerate() {
        let label = ChordLabel {
            family,
            inversion: n as u8,
        };
        expect_eq(failures, &format!("{label} chord"), label.chord(), want.clone());
        let table = if matches!(family, Family::Triad(_)) {
            triad_table()
        } else {
            seventh_table()
        };
        expect_eq(
            failures,
            &format!("label of {want}"),
            table.get(want).copied(),
            Some(label),
        );
    }
    expect_eq(
        failures,
        &format!("{family} inversion count"),
        family.inversion_count(),
        rows.len(),
    );
}

pub fn triad_orbits() -> Check {
    let mut failures = Vec::new();
    for (family, rows) in TRIAD_ROWS {
        let rows: Vec<Chord> = rows.iter().map(|r| chord(r)).collect();
        row_failures(&mut failures, Family::Triad(family), &rows);
    }
    Check::new("triad-orbits", failures)
}

/// The computed seventh table reproduces [`SEVENTH_ROWS`] row by row.
pub fn seventh_rows() -> Check {
    let mut failures = Vec::new();
    for (family, rows) in SEVENTH_ROWS {
        let rows: Vec<Chord> = rows.iter().map(|r| chord(r)).collect();
        row_failures(&mut failures, Family::Seventh(family), &rows);
    }
    Check::new("seventh-rows", failures)
}

/// The seventh table holds 25 chords, all harmonic, split 12 + 12 + 1 over
/// `[1,3,4,4]`, `[2,3,3,4]`, `[3,3,3,3]`.
pub fn labeled_tetrads() -> Check {
    let mut failures = Vec::new();
    let table = seventh_table();
    for c in table.keys() {
        if !is_harmonic_seventh(c).expect("four tones") {
            failures.push(format!("{c} is labeled but not harmonic"));
        }
    }
    let mut classes: BTreeMap<String, usize> = BTreeMap::new();
    for c in table.keys() {
        *classes.entry(chord_to_partition(c).to_string()).or_default() += 1;
    }
    let want: BTreeMap<String, usize> = [("[1,3,4,4]", 12), ("[2,3,3,4]", 12), ("[3,3,3,3]", 1)]
        .into_iter()
        .map(|(p, n)| (p.to_string(), n))
        .collect();
    expect_eq(&mut failures, "labeled partition classes", classes, want);
    Check::new("labeled-tetrads", failures).with_summary(table.len().to_string())
}

/// Individual operator values.
pub fn spot_checks() -> Check {
    let mut failures = Vec::new();
    let cases: [(OperatorSymbol, &[u8], &[u8]); 7] = [
        (OperatorSymbol::I, &[0, 4, 7], &[0, 3, 8]),
        (OperatorSymbol::D, &[0, 4, 7], &[0, 5, 8]),
        (OperatorSymbol::D, &[0, 3, 6], &[0, 6, 9]),
        (OperatorSymbol::I, &[0, 4, 8], &[0, 4, 8]),
        (OperatorSymbol::D, &[0, 4, 8], &[0, 4, 8]),
        (OperatorSymbol::A, &[0, 4, 7, 11], &[0, 4, 8, 11]),
        (OperatorSymbol::A, &[0, 3, 6, 10], &[0, 3, 7, 10]),
    ];
    for (op, from, to) in cases {
        let c = chord(from);
        match op.apply(&c) {
            Ok(got) => expect_eq(&mut failures, &format!("{op}({c})"), got, chord(to)),
            Err(e) => failures.push(format!("{op}({c}): {e}")),
        }
    }
    let mm_row: Vec<Chord> = SEVENTH_ROWS[0].1.iter().map(|r| chord(r)).collect();
    for n in 0..4 {
        expect_eq(
            &mut failures,
            &format!("d(MM{n})"),
            dual(&mm_row[n]),
            mm_row[(3 - n) % 4].clone(),
        );
    }
    Check::new("spot-checks", failures)
}

/// `dual` maps each family's inversion row onto a family row in reverse order,
/// as predicted by [`dual_label`].
pub fn dual_pairing() -> Check {
    let mut failures = Vec::new();
    for (chord, &label) in triad_table().iter().chain(seventh_table().iter()) {
        let image = dual(chord);
        expect_eq(&mut failures, &format!("d({label})"), image, dual_label(label).chord());
    }
    let pairs = [
        (SeventhFamily::MM, SeventhFamily::MM),
        (SeventhFamily::mM, SeventhFamily::AM),
        (SeventhFamily::Mm, SeventhFamily::dm),
        (SeventhFamily::mm, SeventhFamily::mm),
    ];
    for (from, to) in pairs {
        for n in 0..4u8 {
            let src = ChordLabel {
                family: Family::Seventh(from),
                inversion: n,
            };
            let want = ChordLabel {
                family: Family::Seventh(to),
                inversion: (7 - n) % 4,
            };
            expect_eq(
                &mut failures,
                &format!("d({src})"),
                seventh_table().get(&dual(&src.chord())).copied(),
                Some(want),
            );
        }
    }
    let dim = |n| ChordLabel {
        family: Family::Triad(TriadFamily::Diminished),
        inversion: n,
    };
    for (n, m) in [(0, 2), (1, 1), (2, 0)] {
        expect_eq(
            &mut failures,
            &format!("d({})", dim(n)),
            triad_table().get(&dual(&dim(n).chord())).copied(),
            Some(dim(m)),
        );
    }
    Check::new("dual-pairing", failures)
}

pub fn graph_degrees() -> Check {
    let g = build_chord_graph(true);
    let mut failures = Vec::new();
    for i in 0..g.nodes().len() {
        for op in OperatorSymbol::ALL {
            let d = g.degree(NodeId(i), op);
            if d != 1 {
                failures.push(format!("{} has {d} {op}-edges", g.label_of(NodeId(i))));
            }
        }
    }
    // i-cycles are the inversion rows
    for &(family, rows) in &SEVENTH_ROWS {
        let start = g.find_chord(&chord(&rows[0])).expect("every table row is a node");
        let mut cycle = vec![start];
        let mut x = g.image(start, OperatorSymbol::I).expect("i-edge");
        while x != start && cycle.len() <= rows.len() {
            cycle.push(x);
            x = g.image(x, OperatorSymbol::I).expect("i-edge");
        }
        let got: Vec<Chord> = cycle.iter().map(|&n| g.node(n).chord.clone()).collect();
        let want: Vec<Chord> = rows.iter().map(|r| chord(r)).collect();
        expect_eq(&mut failures, &format!("{} i-cycle", family.code()), got, want);
    }
    Check::new("graph-degrees", failures)
}

pub fn graph_fixed_points() -> Check {
    let g = build_chord_graph(false);
    let names = |op| -> Vec<String> {
        g.fixed_points(op)
            .into_iter()
            .map(|n| g.label_of(n).to_string())
            .collect()
    };
    let mut failures = Vec::new();
    expect_eq(
        &mut failures,
        "a-fixed points",
        names(OperatorSymbol::A),
        vec!["mM0".into(), "AM3".into(), "Mm0".into(), "dm3".into()],
    );
    expect_eq(
        &mut failures,
        "d-fixed points",
        names(OperatorSymbol::D),
        Vec::<String>::new(),
    );
    Check::new("fixed-points", failures)
}

pub fn components(include_dd: bool) -> Check {
    let g = build_chord_graph(include_dd);
    let comps = connected_components(&g);
    let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    let want: &[usize] = if include_dd { &[12, 12, 1] } else { &[12, 12] };
    let mut failures = Vec::new();
    expect_eq(&mut failures, "component sizes", sizes.as_slice(), want);
    for comp in &comps {
        let classes: BTreeSet<Partition> = comp.iter().map(|&n| chord_to_partition(&g.node(n).chord)).collect();
        if classes.len() != 1 {
            failures.push(format!("component mixes partitions {classes:?}"));
        }
    }
    let summary = sizes.iter().map(usize::to_string).collect::<Vec<_>>().join("+");
    let name = if include_dd { "components-with-dd" } else { "components" };
    Check::new(name, failures).with_summary(summary)
}

pub fn isomorphism() -> Check {
    let g = build_chord_graph(false);
    let failures = match component_isomorphism(&g) {
        Ok(map) if map.pairs.len() == 12 => Vec::new(),
        Ok(map) => vec![format!("map has {} pairs", map.pairs.len())],
        Err(e) => vec![e.to_string()],
    };
    Check::new("isomorphism", failures)
}
