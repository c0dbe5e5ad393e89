//! C ABI for the braidbook toolkit. Strings cross the boundary as UTF-8
//! `char*` in the crate's text formats; diagrams travel as opaque handles.
//! Every fallible call returns a [`BbStatus`] and leaves a message for
//! [`bb_last_error_message`] on failure. Strings returned through out
//! parameters are owned by the caller and must be released with
//! [`bb_string_free`]; handles with [`bb_diagram_free`].

use braidbook::braid::{bkl_to_artin, cable_word, torus_knot_braid_word, ArtinWord, BklWord, BraidError};
use braidbook::homfly::{gc_lower_bound_with, survey, HomflyEngine, HomflyError};
use braidbook::plumb::{enumerate_mergers, plumb_words, Merger, PlumbError};
use braidbook::rampichini::{plumb_diagrams, RampError, RampichiniDiagram};
use braidbook::seifert::{
    arc_presentation, build_guide_graph, canonical_genus, report_text, seifert_circles,
    PlanarDiagram, SeifertError,
};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BbStatus {
    Ok = 0,
    DomainError = 1,
    ParseError = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
}

/// Opaque handle to a torus-grid diagram.
pub struct BbDiagram {
    inner: RampichiniDiagram,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn fail(status: BbStatus, message: &str) -> BbStatus {
    set_error(message);
    status
}

fn braid_status(err: &BraidError) -> BbStatus {
    match err {
        BraidError::BadLetter(_)
        | BraidError::BadBandToken(_)
        | BraidError::BadHeader(_)
        | BraidError::LetterOutOfRange { .. }
        | BraidError::BandOutOfRange { .. } => BbStatus::ParseError,
        _ => BbStatus::DomainError,
    }
}

fn homfly_status(err: &HomflyError) -> BbStatus {
    match err {
        HomflyError::Braid(inner) => braid_status(inner),
        _ => BbStatus::DomainError,
    }
}

fn plumb_status(err: &PlumbError) -> BbStatus {
    match err {
        PlumbError::BadMergerText(_) => BbStatus::ParseError,
        PlumbError::Braid(inner) => braid_status(inner),
        _ => BbStatus::DomainError,
    }
}

fn ramp_status(err: &RampError) -> BbStatus {
    match err {
        RampError::Parse { .. } => BbStatus::ParseError,
        RampError::Plumb(inner) => plumb_status(inner),
        _ => BbStatus::DomainError,
    }
}

fn seifert_status(err: &SeifertError) -> BbStatus {
    match err {
        SeifertError::Parse { .. } => BbStatus::ParseError,
        _ => BbStatus::DomainError,
    }
}

/// # Safety
/// `ptr` must be null or point at a NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, BbStatus> {
    if ptr.is_null() {
        return Err(fail(BbStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(BbStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> BbStatus {
    if out.is_null() {
        return fail(BbStatus::NullPointer, "null output pointer");
    }
    let value = CString::new(value.replace('\0', " ")).unwrap_or_default();
    *out = value.into_raw();
    BbStatus::Ok
}

unsafe fn parse_artin(text: *const c_char) -> Result<ArtinWord, BbStatus> {
    let text = read_str(text)?;
    ArtinWord::parse(text).map_err(|e| fail(braid_status(&e), &e.to_string()))
}

unsafe fn parse_bkl(text: *const c_char) -> Result<BklWord, BbStatus> {
    let text = read_str(text)?;
    BklWord::parse(text).map_err(|e| fail(braid_status(&e), &e.to_string()))
}

unsafe fn parse_pd(text: *const c_char) -> Result<PlanarDiagram, BbStatus> {
    let text = read_str(text)?;
    PlanarDiagram::parse(text).map_err(|e| fail(seifert_status(&e), &e.to_string()))
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn bb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `ptr` must be null or a pointer produced by this library.
#[no_mangle]
pub unsafe extern "C" fn bb_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(CString::from_raw(ptr));
    }
}

/// Braid word of the (p,q)-torus knot, in word text form.
///
/// # Safety
/// `out` must point at writable storage for one `char*`.
#[no_mangle]
pub unsafe extern "C" fn bb_torus_braid_word(p: u32, q: u32, out: *mut *mut c_char) -> BbStatus {
    match torus_knot_braid_word(p, q) {
        Ok(word) => write_string(out, word.to_text()),
        Err(e) => fail(braid_status(&e), &e.to_string()),
    }
}

/// Braid word of the (k,l)-cable of the closure of `word_text`.
///
/// # Safety
/// `word_text` must be a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bb_cable_word(
    word_text: *const c_char,
    k: u32,
    l: i64,
    out: *mut *mut c_char,
) -> BbStatus {
    let word = match parse_artin(word_text) {
        Ok(w) => w,
        Err(status) => return status,
    };
    match cable_word(&word, k, l) {
        Ok(cabled) => write_string(out, cabled.to_text()),
        Err(e) => fail(braid_status(&e), &e.to_string()),
    }
}

/// Writhe of a braid word.
///
/// # Safety
/// As for [`bb_cable_word`]; `out` must point at an `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn bb_writhe(word_text: *const c_char, out: *mut i64) -> BbStatus {
    let word = match parse_artin(word_text) {
        Ok(w) => w,
        Err(status) => return status,
    };
    if out.is_null() {
        return fail(BbStatus::NullPointer, "null output pointer");
    }
    *out = word.writhe();
    BbStatus::Ok
}

/// HOMFLY-PT polynomial of the closure of `word_text`, in canonical text.
///
/// # Safety
/// As for [`bb_cable_word`].
#[no_mangle]
pub unsafe extern "C" fn bb_homfly(word_text: *const c_char, out: *mut *mut c_char) -> BbStatus {
    let word = match parse_artin(word_text) {
        Ok(w) => w,
        Err(status) => return status,
    };
    write_string(out, HomflyEngine::new().polynomial(&word).canonical_text())
}

/// Canonical-genus lower bound of the knot closed up by `word_text`.
///
/// # Safety
/// As for [`bb_writhe`].
#[no_mangle]
pub unsafe extern "C" fn bb_gc_lower_bound(word_text: *const c_char, out: *mut i64) -> BbStatus {
    let word = match parse_artin(word_text) {
        Ok(w) => w,
        Err(status) => return status,
    };
    if out.is_null() {
        return fail(BbStatus::NullPointer, "null output pointer");
    }
    match gc_lower_bound_with(&HomflyEngine::new(), &word) {
        Ok(bound) => {
            *out = bound;
            BbStatus::Ok
        }
        Err(e) => fail(homfly_status(&e), &e.to_string()),
    }
}

/// Cable survey rows for n = 1..=max_n as tab-separated lines.
///
/// # Safety
/// `out` must point at writable storage for one `char*`.
#[no_mangle]
pub unsafe extern "C" fn bb_survey_tsv(max_n: u32, out: *mut *mut c_char) -> BbStatus {
    if max_n < 1 {
        return fail(BbStatus::DomainError, "survey needs max_n >= 1");
    }
    let mut text = String::new();
    for row in survey(max_n) {
        match row {
            Ok(row) => text.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                row.n, row.genus, row.gc_lower_bound, row.verdict
            )),
            Err(e) => return fail(BbStatus::DomainError, &e.to_string()),
        }
    }
    write_string(out, text)
}

/// Expands a band-generator word into Artin letters.
///
/// # Safety
/// As for [`bb_cable_word`].
#[no_mangle]
pub unsafe extern "C" fn bb_bkl_expand(bkl_text: *const c_char, out: *mut *mut c_char) -> BbStatus {
    let word = match parse_bkl(bkl_text) {
        Ok(w) => w,
        Err(status) => return status,
    };
    write_string(out, bkl_to_artin(&word).to_text())
}

/// Braided Stallings plumbing of two band words; `merger_text` may be null
/// for the identity merger (the connected sum).
///
/// # Safety
/// String arguments must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bb_plumb_word(
    b1_text: *const c_char,
    n1: u32,
    b2_text: *const c_char,
    n2: u32,
    merger_text: *const c_char,
    out: *mut *mut c_char,
) -> BbStatus {
    let b1 = match parse_bkl(b1_text) {
        Ok(w) => w,
        Err(status) => return status,
    };
    let b2 = match parse_bkl(b2_text) {
        Ok(w) => w,
        Err(status) => return status,
    };
    let widen = |w: BklWord, n: u32| -> Result<BklWord, BbStatus> {
        if w.strands() > n as usize {
            return Err(fail(
                BbStatus::DomainError,
                &format!("word needs at least {} strands", w.strands()),
            ));
        }
        BklWord::new(w.letters().to_vec(), n as usize)
            .map_err(|e| fail(braid_status(&e), &e.to_string()))
    };
    let b1 = match widen(b1, n1) {
        Ok(w) => w,
        Err(status) => return status,
    };
    let b2 = match widen(b2, n2) {
        Ok(w) => w,
        Err(status) => return status,
    };
    let merger = if merger_text.is_null() {
        Merger::identity(b1.len(), b2.len())
    } else {
        let text = match read_str(merger_text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Merger::parse(text) {
            Ok(m) => m,
            Err(e) => return fail(plumb_status(&e), &e.to_string()),
        }
    };
    match plumb_words(&b1, &b2, &merger) {
        Ok(word) => write_string(out, word.to_text_with_header()),
        Err(e) => fail(plumb_status(&e), &e.to_string()),
    }
}

/// All mergers of size (l1, l2), one text form per line.
///
/// # Safety
/// `out` must point at writable storage for one `char*`.
#[no_mangle]
pub unsafe extern "C" fn bb_mergers(l1: u32, l2: u32, out: *mut *mut c_char) -> BbStatus {
    let mut text = String::new();
    for merger in enumerate_mergers(l1 as usize, l2 as usize) {
        text.push_str(&merger.to_text());
        text.push('\n');
    }
    write_string(out, text)
}

/// Number of Seifert circles of an oriented PD diagram.
///
/// # Safety
/// As for [`bb_writhe`] with a `uint64_t` output.
#[no_mangle]
pub unsafe extern "C" fn bb_seifert_circle_count(pd_text: *const c_char, out: *mut u64) -> BbStatus {
    let diagram = match parse_pd(pd_text) {
        Ok(d) => d,
        Err(status) => return status,
    };
    if out.is_null() {
        return fail(BbStatus::NullPointer, "null output pointer");
    }
    *out = seifert_circles(&diagram).count as u64;
    BbStatus::Ok
}

/// Canonical genus of a knot diagram.
///
/// # Safety
/// As for [`bb_writhe`].
#[no_mangle]
pub unsafe extern "C" fn bb_canonical_genus(pd_text: *const c_char, out: *mut i64) -> BbStatus {
    let diagram = match parse_pd(pd_text) {
        Ok(d) => d,
        Err(status) => return status,
    };
    if out.is_null() {
        return fail(BbStatus::NullPointer, "null output pointer");
    }
    match canonical_genus(&diagram) {
        Ok(genus) => {
            *out = genus;
            BbStatus::Ok
        }
        Err(e) => fail(seifert_status(&e), &e.to_string()),
    }
}

/// Arc-presentation report of a diagram, in the line-oriented text form.
///
/// # Safety
/// As for [`bb_cable_word`].
#[no_mangle]
pub unsafe extern "C" fn bb_arc_presentation(pd_text: *const c_char, out: *mut *mut c_char) -> BbStatus {
    let diagram = match parse_pd(pd_text) {
        Ok(d) => d,
        Err(status) => return status,
    };
    let graph = match build_guide_graph(&diagram) {
        Ok(g) => g,
        Err(e) => return fail(seifert_status(&e), &e.to_string()),
    };
    match arc_presentation(&diagram) {
        Ok(report) => write_string(out, report_text(&graph, &report)),
        Err(e) => fail(seifert_status(&e), &e.to_string()),
    }
}

/// Parses a diagram file into a handle; null on failure (see
/// [`bb_last_error_message`]).
///
/// # Safety
/// `text` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn bb_diagram_parse(text: *const c_char) -> *mut BbDiagram {
    let text = match read_str(text) {
        Ok(t) => t,
        Err(_) => return std::ptr::null_mut(),
    };
    match RampichiniDiagram::parse(text) {
        Ok(inner) => Box::into_raw(Box::new(BbDiagram { inner })),
        Err(e) => {
            set_error(&e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Releases a diagram handle.
///
/// # Safety
/// `diagram` must be null or a pointer produced by this library, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn bb_diagram_free(diagram: *mut BbDiagram) {
    if !diagram.is_null() {
        drop(Box::from_raw(diagram));
    }
}

/// Validates a diagram. Returns `Ok` when valid; otherwise `DomainError`
/// with the violation list as the error message (and in `out_report` when
/// non-null).
///
/// # Safety
/// `diagram` must be a live handle; `out_report` may be null.
#[no_mangle]
pub unsafe extern "C" fn bb_diagram_validate(
    diagram: *const BbDiagram,
    out_report: *mut *mut c_char,
) -> BbStatus {
    if diagram.is_null() {
        return fail(BbStatus::NullPointer, "null diagram handle");
    }
    let validation = (*diagram).inner.validate();
    if validation.is_valid() {
        if !out_report.is_null() {
            return write_string(out_report, "valid".to_string());
        }
        BbStatus::Ok
    } else {
        let summary = validation.summary();
        if !out_report.is_null() {
            let _ = write_string(out_report, summary.clone());
        }
        fail(BbStatus::DomainError, &summary)
    }
}

/// Band word at a vertical cut of the diagram, with a strands header.
///
/// # Safety
/// `diagram` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bb_diagram_extract_word(
    diagram: *const BbDiagram,
    cut: usize,
    out: *mut *mut c_char,
) -> BbStatus {
    if diagram.is_null() {
        return fail(BbStatus::NullPointer, "null diagram handle");
    }
    match (*diagram).inner.extract_word(cut) {
        Ok(word) => write_string(out, word.to_text_with_header()),
        Err(e) => fail(ramp_status(&e), &e.to_string()),
    }
}

/// Translates the cut circle `k` events to the right; null on failure.
///
/// # Safety
/// `diagram` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bb_diagram_translate(diagram: *const BbDiagram, k: usize) -> *mut BbDiagram {
    if diagram.is_null() {
        set_error("null diagram handle");
        return std::ptr::null_mut();
    }
    match (*diagram).inner.translate(k) {
        Ok(inner) => Box::into_raw(Box::new(BbDiagram { inner })),
        Err(e) => {
            set_error(&e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Glues two diagrams along a merger (null merger text = identity);
/// null on failure.
///
/// # Safety
/// Both handles must be live; `merger_text` null or NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn bb_diagram_plumb(
    first: *const BbDiagram,
    second: *const BbDiagram,
    merger_text: *const c_char,
) -> *mut BbDiagram {
    if first.is_null() || second.is_null() {
        set_error("null diagram handle");
        return std::ptr::null_mut();
    }
    let merger = if merger_text.is_null() {
        Merger::identity((*first).inner.start.len(), (*second).inner.start.len())
    } else {
        let text = match read_str(merger_text) {
            Ok(t) => t,
            Err(_) => return std::ptr::null_mut(),
        };
        match Merger::parse(text) {
            Ok(m) => m,
            Err(e) => {
                set_error(&e.to_string());
                return std::ptr::null_mut();
            }
        }
    };
    match plumb_diagrams(&(*first).inner, &(*second).inner, &merger) {
        Ok(plumbed) => Box::into_raw(Box::new(BbDiagram { inner: plumbed.diagram })),
        Err(e) => {
            set_error(&e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Canonical file text of a diagram handle.
///
/// # Safety
/// `diagram` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bb_diagram_to_text(diagram: *const BbDiagram, out: *mut *mut c_char) -> BbStatus {
    if diagram.is_null() {
        return fail(BbStatus::NullPointer, "null diagram handle");
    }
    write_string(out, (*diagram).inner.to_text())
}
