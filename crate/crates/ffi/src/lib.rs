//! C ABI over the nmrel algebra.
//!
//! Sets and relations cross the boundary as opaque handles created from the
//! same canonical JSON documents the CLI reads. Every fallible call returns an
//! `NmrStatus`; on failure the thread-local message from
//! `nmr_last_error_message` describes what went wrong. Out-parameters are
//! written only on `NMR_STATUS_OK`. Handles and strings returned by this
//! library must be released with the matching `nmr_*_free` call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nmrel::{cartesian_product, doc, Error, NmRelation, NmSet};

/// Result of a fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NmrStatus {
    /// The call succeeded; out-parameters are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input document failed to parse or validate.
    ParseError = 3,
    /// The operands are incompatible (universe or dimension mismatch).
    DomainError = 4,
    /// The operation is undefined for this input (e.g. power zero).
    InvalidArgument = 5,
    /// The library hit an internal error; please report it.
    InternalError = 6,
}

/// A neutrosophic multi set (opaque).
pub struct NmrSet(NmSet);

/// A neutrosophic multi relation (opaque).
pub struct NmrRelation(NmRelation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', "?"))
        .unwrap_or_else(|_| CString::new("invalid error message").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn fail(status: NmrStatus, message: impl Into<String>) -> NmrStatus {
    set_error(message.into());
    status
}

fn status_of(err: &Error) -> NmrStatus {
    match err {
        Error::UniverseMismatch { .. }
        | Error::DimensionMismatch { .. }
        | Error::CompositionMismatch { .. }
        | Error::NotSquare { .. } => NmrStatus::DomainError,
        Error::ZeroPower => NmrStatus::InvalidArgument,
        Error::ClosureDiverged { .. } => NmrStatus::InternalError,
        _ => NmrStatus::ParseError,
    }
}

fn from_error(err: Error) -> NmrStatus {
    fail(status_of(&err), err.to_string())
}

/// Runs `body`, converting panics into `InternalError` so they never unwind
/// across the C boundary.
fn guarded(body: impl FnOnce() -> NmrStatus) -> NmrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(NmrStatus::InternalError, "internal panic"),
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, NmrStatus> {
    if ptr.is_null() {
        return Err(fail(NmrStatus::NullPointer, "string argument is null"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(NmrStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn deref<'a, T>(ptr: *const T, name: &str) -> Result<&'a T, NmrStatus> {
    ptr.as_ref()
        .ok_or_else(|| fail(NmrStatus::NullPointer, format!("{name} handle is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T, name: &str) -> NmrStatus {
    if out.is_null() {
        return fail(NmrStatus::NullPointer, format!("{name} out-pointer is null"));
    }
    out.write(value);
    NmrStatus::Ok
}

fn out_string(text: String) -> *mut c_char {
    CString::new(text)
        .expect("canonical documents contain no NUL bytes")
        .into_raw()
}

/// Copies the most recent error message on this thread into `buffer`
/// (NUL-terminated, truncated to `length`). Returns the full message length
/// in bytes, excluding the terminator; 0 when no error has occurred.
#[no_mangle]
pub unsafe extern "C" fn nmr_last_error_message(buffer: *mut c_char, length: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let slot = slot.borrow();
        let Some(message) = slot.as_ref() else {
            return 0;
        };
        let bytes = message.as_bytes();
        if !buffer.is_null() && length > 0 {
            let copy = bytes.len().min(length - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buffer, copy);
            buffer.add(copy).write(0);
        }
        bytes.len()
    })
}

/// Frees a string returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn nmr_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Frees a set handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn nmr_set_free(set: *mut NmrSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Frees a relation handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_free(relation: *mut NmrRelation) {
    if !relation.is_null() {
        drop(Box::from_raw(relation));
    }
}

/// Parses a canonical `nmset` JSON document into a new handle.
#[no_mangle]
pub unsafe extern "C" fn nmr_set_parse(json: *const c_char, out: *mut *mut NmrSet) -> NmrStatus {
    guarded(|| {
        let text = match read_str(json) {
            Ok(text) => text,
            Err(status) => return status,
        };
        match doc::parse(text).and_then(doc::Parsed::into_set) {
            Ok(set) => write_out(out, Box::into_raw(Box::new(NmrSet(set))), "set"),
            Err(err) => from_error(err),
        }
    })
}

/// Serializes a set back to its canonical JSON document.
#[no_mangle]
pub unsafe extern "C" fn nmr_set_serialize(
    set: *const NmrSet,
    out: *mut *mut c_char,
) -> NmrStatus {
    guarded(|| {
        let set = match deref(set, "set") {
            Ok(set) => set,
            Err(status) => return status,
        };
        write_out(out, out_string(doc::serialize_set(&set.0)), "document")
    })
}

/// Parses a canonical `nmrelation` JSON document into a new handle.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_parse(
    json: *const c_char,
    out: *mut *mut NmrRelation,
) -> NmrStatus {
    guarded(|| {
        let text = match read_str(json) {
            Ok(text) => text,
            Err(status) => return status,
        };
        match doc::parse(text).and_then(doc::Parsed::into_relation) {
            Ok(rel) => write_out(out, Box::into_raw(Box::new(NmrRelation(rel))), "relation"),
            Err(err) => from_error(err),
        }
    })
}

/// Serializes a relation back to its canonical JSON document.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_serialize(
    relation: *const NmrRelation,
    out: *mut *mut c_char,
) -> NmrStatus {
    guarded(|| {
        let rel = match deref(relation, "relation") {
            Ok(rel) => rel,
            Err(status) => return status,
        };
        write_out(out, out_string(doc::serialize_relation(&rel.0)), "document")
    })
}

/// Binary operation over sets.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NmrSetOp {
    Union = 0,
    Intersection = 1,
    Addition = 2,
    Multiplication = 3,
}

/// Applies a binary set operation; operands must share a universe.
#[no_mangle]
pub unsafe extern "C" fn nmr_set_apply(
    op: NmrSetOp,
    left: *const NmrSet,
    right: *const NmrSet,
    out: *mut *mut NmrSet,
) -> NmrStatus {
    guarded(|| {
        let (a, b) = match (deref(left, "left set"), deref(right, "right set")) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        let result = match op {
            NmrSetOp::Union => a.0.union(&b.0),
            NmrSetOp::Intersection => a.0.intersection(&b.0),
            NmrSetOp::Addition => a.0.addition(&b.0),
            NmrSetOp::Multiplication => a.0.multiplication(&b.0),
        };
        match result {
            Ok(set) => write_out(out, Box::into_raw(Box::new(NmrSet(set))), "set"),
            Err(err) => from_error(err),
        }
    })
}

/// Complement of a set.
#[no_mangle]
pub unsafe extern "C" fn nmr_set_complement(
    set: *const NmrSet,
    out: *mut *mut NmrSet,
) -> NmrStatus {
    guarded(|| {
        let set = match deref(set, "set") {
            Ok(set) => set,
            Err(status) => return status,
        };
        write_out(out, Box::into_raw(Box::new(NmrSet(set.0.complement()))), "set")
    })
}

/// Writes whether `left` is contained in `right` under the neutrosophic order.
#[no_mangle]
pub unsafe extern "C" fn nmr_set_is_subset(
    left: *const NmrSet,
    right: *const NmrSet,
    out: *mut bool,
) -> NmrStatus {
    guarded(|| {
        let (a, b) = match (deref(left, "left set"), deref(right, "right set")) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        match a.0.is_subset_of(&b.0) {
            Ok(result) => write_out(out, result, "result"),
            Err(err) => from_error(err),
        }
    })
}

/// Writes whether the two sets are equal.
#[no_mangle]
pub unsafe extern "C" fn nmr_set_equals(
    left: *const NmrSet,
    right: *const NmrSet,
    out: *mut bool,
) -> NmrStatus {
    guarded(|| {
        let (a, b) = match (deref(left, "left set"), deref(right, "right set")) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        match a.0.nm_equal(&b.0) {
            Ok(result) => write_out(out, result, "result"),
            Err(err) => from_error(err),
        }
    })
}

/// Cartesian product A×B as a relation from A's universe to B's.
#[no_mangle]
pub unsafe extern "C" fn nmr_set_product(
    left: *const NmrSet,
    right: *const NmrSet,
    out: *mut *mut NmrRelation,
) -> NmrStatus {
    guarded(|| {
        let (a, b) = match (deref(left, "left set"), deref(right, "right set")) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        match cartesian_product(&a.0, &b.0) {
            Ok(rel) => write_out(out, Box::into_raw(Box::new(NmrRelation(rel))), "relation"),
            Err(err) => from_error(err),
        }
    })
}

/// Binary operation over relations.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NmrRelationOp {
    Union = 0,
    Intersection = 1,
    Addition = 2,
    Multiplication = 3,
}

/// Applies a binary relation operation; operands must share universes.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_apply(
    op: NmrRelationOp,
    left: *const NmrRelation,
    right: *const NmrRelation,
    out: *mut *mut NmrRelation,
) -> NmrStatus {
    guarded(|| {
        let (r, s) = match (deref(left, "left relation"), deref(right, "right relation")) {
            (Ok(r), Ok(s)) => (r, s),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        let result = match op {
            NmrRelationOp::Union => r.0.union(&s.0),
            NmrRelationOp::Intersection => r.0.intersection(&s.0),
            NmrRelationOp::Addition => r.0.addition(&s.0),
            NmrRelationOp::Multiplication => r.0.multiplication(&s.0),
        };
        match result {
            Ok(rel) => write_out(out, Box::into_raw(Box::new(NmrRelation(rel))), "relation"),
            Err(err) => from_error(err),
        }
    })
}

/// Sup-min composition S∘R for R: A→B and S: B→C.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_compose(
    s: *const NmrRelation,
    r: *const NmrRelation,
    out: *mut *mut NmrRelation,
) -> NmrStatus {
    guarded(|| {
        let (s, r) = match (deref(s, "outer relation"), deref(r, "inner relation")) {
            (Ok(s), Ok(r)) => (s, r),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        match s.0.compose(&r.0) {
            Ok(rel) => write_out(out, Box::into_raw(Box::new(NmrRelation(rel))), "relation"),
            Err(err) => from_error(err),
        }
    })
}

/// Inverse (transpose) of a relation.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_inverse(
    relation: *const NmrRelation,
    out: *mut *mut NmrRelation,
) -> NmrStatus {
    guarded(|| {
        let rel = match deref(relation, "relation") {
            Ok(rel) => rel,
            Err(status) => return status,
        };
        write_out(
            out,
            Box::into_raw(Box::new(NmrRelation(rel.0.inverse()))),
            "relation",
        )
    })
}

/// k-th composition power of a square relation; `k` must be positive.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_power(
    relation: *const NmrRelation,
    k: usize,
    out: *mut *mut NmrRelation,
) -> NmrStatus {
    guarded(|| {
        let rel = match deref(relation, "relation") {
            Ok(rel) => rel,
            Err(status) => return status,
        };
        match rel.0.power(k) {
            Ok(rel) => write_out(out, Box::into_raw(Box::new(NmrRelation(rel))), "relation"),
            Err(err) => from_error(err),
        }
    })
}

/// Transitive closure of a square relation.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_closure(
    relation: *const NmrRelation,
    out: *mut *mut NmrRelation,
) -> NmrStatus {
    guarded(|| {
        let rel = match deref(relation, "relation") {
            Ok(rel) => rel,
            Err(status) => return status,
        };
        match rel.0.transitive_closure() {
            Ok(rel) => write_out(out, Box::into_raw(Box::new(NmrRelation(rel))), "relation"),
            Err(err) => from_error(err),
        }
    })
}

/// Property predicate over a square relation.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NmrProperty {
    Reflexive = 0,
    Symmetric = 1,
    Transitive = 2,
    Equivalence = 3,
}

/// Writes whether the relation has the property; the relation must be square.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_has_property(
    relation: *const NmrRelation,
    property: NmrProperty,
    out: *mut bool,
) -> NmrStatus {
    guarded(|| {
        let rel = match deref(relation, "relation") {
            Ok(rel) => rel,
            Err(status) => return status,
        };
        let result = match property {
            NmrProperty::Reflexive => rel.0.is_reflexive(),
            NmrProperty::Symmetric => rel.0.is_symmetric(),
            NmrProperty::Transitive => rel.0.is_transitive(),
            NmrProperty::Equivalence => rel.0.is_equivalence(),
        };
        match result {
            Ok(result) => write_out(out, result, "result"),
            Err(err) => from_error(err),
        }
    })
}

/// Writes whether `left` is contained in `right`.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_is_subset(
    left: *const NmrRelation,
    right: *const NmrRelation,
    out: *mut bool,
) -> NmrStatus {
    guarded(|| {
        let (r, s) = match (deref(left, "left relation"), deref(right, "right relation")) {
            (Ok(r), Ok(s)) => (r, s),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        match r.0.is_subset_of(&s.0) {
            Ok(result) => write_out(out, result, "result"),
            Err(err) => from_error(err),
        }
    })
}

/// Writes whether the two relations are equal.
#[no_mangle]
pub unsafe extern "C" fn nmr_relation_equals(
    left: *const NmrRelation,
    right: *const NmrRelation,
    out: *mut bool,
) -> NmrStatus {
    guarded(|| {
        let (r, s) = match (deref(left, "left relation"), deref(right, "right relation")) {
            (Ok(r), Ok(s)) => (r, s),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        match r.0.nm_equal(&s.0) {
            Ok(result) => write_out(out, result, "result"),
            Err(err) => from_error(err),
        }
    })
}
