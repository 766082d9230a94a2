//! C ABI over `chordgroup`.
//!
//! Handles (`CgChord`, `CgChordList`, `CgGraph`) are opaque heap objects owned
//! by the caller once returned and released with the matching `*_free`
//! function. Strings returned as `char *` are released with `cg_string_free`.
//! Every fallible call returns a [`CgStatus`]; on failure a description is
//! available from `cg_last_error_message` on the same thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use chordgroup::classify::{classify, Classification};
use chordgroup::graph::{build_chord_graph, component_isomorphism, export_dot, export_json};
use chordgroup::transform::{apply_word, orbit, parse_generators, OperatorWord};
use chordgroup::{chord, Chord, ChordGraph, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidChord = 2,
    ParseError = 3,
    WrongArity = 4,
    InvalidSize = 5,
    BufferTooSmall = 6,
    InvalidUtf8 = 7,
    IsomorphismViolation = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CgClassKind {
    Harmonic = 0,
    HarmonicUnlabeled = 1,
    NotHarmonic = 2,
}

/// Opaque chord handle.
pub struct CgChord(Chord);

/// Opaque list of chords.
pub struct CgChordList(Vec<CgChord>);

/// Opaque chord graph.
pub struct CgGraph(ChordGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(status: CgStatus, message: impl Into<String>) -> CgStatus {
    let text = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
    status
}

fn status_of(e: Error) -> CgStatus {
    let status = match e {
        Error::EmptyChord
        | Error::FirstToneNotZero(_)
        | Error::NotStrictlyIncreasing { .. }
        | Error::ToneOutOfRange(_) => CgStatus::InvalidChord,
        Error::InvalidSize(_) => CgStatus::InvalidSize,
        Error::WrongArity { .. } => CgStatus::WrongArity,
        Error::IsomorphismViolation(_) => CgStatus::IsomorphismViolation,
        Error::InvalidParts { .. } | Error::Parse { .. } => CgStatus::ParseError,
    };
    set_error(status, e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CgStatus> {
    if s.is_null() {
        return Err(set_error(CgStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| set_error(CgStatus::InvalidUtf8, "string argument is not UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> CgStatus {
    *out = Box::into_raw(Box::new(value));
    CgStatus::Ok
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            return set_error(CgStatus::NullPointer, "null pointer argument");
        }
    };
}

/// Message for the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a chord from `len` tones, which must start at 0 and strictly increase.
#[no_mangle]
pub unsafe extern "C" fn cg_chord_new(tones: *const i32, len: usize, out: *mut *mut CgChord) -> CgStatus {
    non_null!(out);
    if tones.is_null() && len > 0 {
        return set_error(CgStatus::NullPointer, "null tone array");
    }
    let raw: Vec<i64> = if len == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(tones, len)
            .iter()
            .map(|&t| t as i64)
            .collect()
    };
    match Chord::new(&raw) {
        Ok(c) => put(out, CgChord(c)),
        Err(e) => status_of(e),
    }
}

/// Like `cg_chord_new`, but accepts any pitch-class set and transposes it to 0.
#[no_mangle]
pub unsafe extern "C" fn cg_chord_normalize(tones: *const i32, len: usize, out: *mut *mut CgChord) -> CgStatus {
    non_null!(out, tones);
    let raw: Vec<i64> = std::slice::from_raw_parts(tones, len)
        .iter()
        .map(|&t| t as i64)
        .collect();
    match Chord::normalize(&raw) {
        Ok(c) => put(out, CgChord(c)),
        Err(e) => status_of(e),
    }
}

/// Parses `"0,4,7"` or `"(0,4,7)"`.
#[no_mangle]
pub unsafe extern "C" fn cg_chord_parse(text: *const c_char, out: *mut *mut CgChord) -> CgStatus {
    non_null!(out);
    let text = match read_str(text) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match text.parse::<Chord>() {
        Ok(c) => put(out, CgChord(c)),
        Err(e) => status_of(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn cg_chord_free(chord: *mut CgChord) {
    if !chord.is_null() {
        drop(Box::from_raw(chord));
    }
}

/// Number of tones; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn cg_chord_len(chord: *const CgChord) -> usize {
    chord.as_ref().map_or(0, |c| c.0.len())
}

unsafe fn write_bytes(bytes: &[u8], buf: *mut u8, cap: usize, written: *mut usize) -> CgStatus {
    if !written.is_null() {
        *written = bytes.len();
    }
    if bytes.len() > cap {
        return set_error(
            CgStatus::BufferTooSmall,
            format!("need {} entries, buffer holds {cap}", bytes.len()),
        );
    }
    if !bytes.is_empty() {
        if buf.is_null() {
            return set_error(CgStatus::NullPointer, "null output buffer");
        }
        ptr::copy_nonoverlapping(bytes.as_ptr(), buf, bytes.len());
    }
    CgStatus::Ok
}

/// Copies the tones into `buf`. `written` (optional) receives the tone count
/// even when the buffer is too small.
#[no_mangle]
pub unsafe extern "C" fn cg_chord_tones(
    chord: *const CgChord,
    buf: *mut u8,
    cap: usize,
    written: *mut usize,
) -> CgStatus {
    non_null!(chord);
    write_bytes(&(*chord).0.tones(), buf, cap, written)
}

/// Copies the ordered gaps (summing to 12) into `buf`.
#[no_mangle]
pub unsafe extern "C" fn cg_chord_composition(
    chord: *const CgChord,
    buf: *mut u8,
    cap: usize,
    written: *mut usize,
) -> CgStatus {
    non_null!(chord);
    write_bytes(chord::chord_to_composition(&(*chord).0).parts(), buf, cap, written)
}

/// Copies the gaps sorted ascending into `buf`.
#[no_mangle]
pub unsafe extern "C" fn cg_chord_partition(
    chord: *const CgChord,
    buf: *mut u8,
    cap: usize,
    written: *mut usize,
) -> CgStatus {
    non_null!(chord);
    write_bytes(chord::chord_to_partition(&(*chord).0).parts(), buf, cap, written)
}

/// `"0,4,7"`; free with `cg_string_free`. NULL for a NULL chord.
#[no_mangle]
pub unsafe extern "C" fn cg_chord_to_string(chord: *const CgChord) -> *mut c_char {
    chord
        .as_ref()
        .map_or(ptr::null_mut(), |c| into_c_string(c.0.to_string()))
}

/// 1 when both chords hold the same tones, 0 otherwise (including NULL).
#[no_mangle]
pub unsafe extern "C" fn cg_chord_equal(a: *const CgChord, b: *const CgChord) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => (a.0 == b.0) as i32,
        _ => 0,
    }
}

/// Applies an operator word over `i`, `d`, `a` (left to right) and returns a
/// new chord.
#[no_mangle]
pub unsafe extern "C" fn cg_apply_word(chord: *const CgChord, word: *const c_char, out: *mut *mut CgChord) -> CgStatus {
    non_null!(chord, out);
    let word = match read_str(word) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let result = word.parse::<OperatorWord>().and_then(|w| apply_word(&w, &(*chord).0));
    match result {
        Ok(c) => put(out, CgChord(c)),
        Err(e) => status_of(e),
    }
}

/// Orbit under a comma-separated generator list such as `"i,d,a"`, sorted.
#[no_mangle]
pub unsafe extern "C" fn cg_orbit(
    chord: *const CgChord,
    generators: *const c_char,
    out: *mut *mut CgChordList,
) -> CgStatus {
    non_null!(chord, out);
    let gens = match read_str(generators) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match parse_generators(gens).and_then(|g| orbit(&(*chord).0, &g)) {
        Ok(list) => put(out, CgChordList(list.into_iter().map(CgChord).collect())),
        Err(e) => status_of(e),
    }
}

/// Every chord with `k` tones, in lexicographic order.
#[no_mangle]
pub unsafe extern "C" fn cg_enumerate_chords(k: i32, out: *mut *mut CgChordList) -> CgStatus {
    non_null!(out);
    match chord::enumerate_chords(k as i64) {
        Ok(list) => put(out, CgChordList(list.into_iter().map(CgChord).collect())),
        Err(e) => status_of(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn cg_chord_list_len(list: *const CgChordList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Borrowed element, valid while the list lives; NULL when out of range.
#[no_mangle]
pub unsafe extern "C" fn cg_chord_list_get(list: *const CgChordList, index: usize) -> *const CgChord {
    list.as_ref()
        .and_then(|l| l.0.get(index))
        .map_or(ptr::null(), |c| c as *const CgChord)
}

#[no_mangle]
pub unsafe extern "C" fn cg_chord_list_free(list: *mut CgChordList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Classifies a three- or four-tone chord. `label` (optional) receives a
/// newly allocated label such as `"MM0"` for `CG_CLASS_KIND_HARMONIC`, and NULL
/// otherwise.
#[no_mangle]
pub unsafe extern "C" fn cg_classify(
    chord: *const CgChord,
    kind: *mut CgClassKind,
    label: *mut *mut c_char,
) -> CgStatus {
    non_null!(chord, kind);
    let result = match classify(&(*chord).0) {
        Ok(r) => r,
        Err(e) => return status_of(e),
    };
    let (k, text) = match result {
        Classification::Harmonic(l) => (CgClassKind::Harmonic, Some(l.to_string())),
        Classification::HarmonicUnlabeled => (CgClassKind::HarmonicUnlabeled, None),
        Classification::NotHarmonic => (CgClassKind::NotHarmonic, None),
    };
    *kind = k;
    if !label.is_null() {
        *label = text.map_or(ptr::null_mut(), into_c_string);
    }
    CgStatus::Ok
}

/// Graph over the labeled four-tone chords; `include_dd` adds the isolated
/// diminished-diminished node.
#[no_mangle]
pub extern "C" fn cg_graph_build(include_dd: bool) -> *mut CgGraph {
    Box::into_raw(Box::new(CgGraph(build_chord_graph(include_dd))))
}

#[no_mangle]
pub unsafe extern "C" fn cg_graph_free(graph: *mut CgGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

#[no_mangle]
pub unsafe extern "C" fn cg_graph_node_count(graph: *const CgGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.nodes().len())
}

/// Undirected edges count once, self-loops included.
#[no_mangle]
pub unsafe extern "C" fn cg_graph_edge_count(graph: *const CgGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edges().len())
}

#[no_mangle]
pub unsafe extern "C" fn cg_graph_to_json(graph: *const CgGraph) -> *mut c_char {
    graph
        .as_ref()
        .map_or(ptr::null_mut(), |g| into_c_string(export_json(&g.0)))
}

#[no_mangle]
pub unsafe extern "C" fn cg_graph_to_dot(graph: *const CgGraph) -> *mut c_char {
    graph
        .as_ref()
        .map_or(ptr::null_mut(), |g| into_c_string(export_dot(&g.0)))
}

/// Checks the `MM->mm, mM->Mm, AM->dm` component isomorphism.
#[no_mangle]
pub unsafe extern "C" fn cg_graph_check_isomorphism(graph: *const CgGraph) -> CgStatus {
    non_null!(graph);
    match component_isomorphism(&(*graph).0) {
        Ok(_) => CgStatus::Ok,
        Err(e) => status_of(e),
    }
}
