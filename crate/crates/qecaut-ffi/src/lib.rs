//! C ABI for the qecaut stabilizer code toolkit.
//!
//! Groups are opaque handles created by the `qec_group_*` constructors and
//! released with [`qec_group_free`]. Every fallible call returns a
//! [`QecStatus`]; on failure a description is retrievable with
//! [`qec_last_error`]. Handles are immutable after construction and safe to
//! share across threads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qecaut::analysis;
use qecaut::aut::{self, AutomorphismKind, SearchOptions};
use qecaut::catalog::catalog_lookup;
use qecaut::group::{MembershipStatus, StabilizerGroup};
use qecaut::pauli::PauliOperator;
use qecaut::perm::Permutation;

/// Opaque stabilizer group handle.
pub struct QecGroup {
    inner: StabilizerGroup,
}

/// Call outcome.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq)]
pub enum QecStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Parsing or validation failed; see `qec_last_error`.
    InvalidInput = 3,
    /// A documented size guard was exceeded.
    GuardExceeded = 4,
    /// The library reported an internal inconsistency or panicked.
    InternalError = 5,
}

/// Which automorphism group to use.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq)]
pub enum QecAutKind {
    Strong = 0,
    Weak = 1,
    Clifford = 2,
}

/// Membership of an operator in a group.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq)]
pub enum QecMembership {
    Absent = 0,
    /// Present with the queried phase.
    Exact = 1,
    /// Present with the opposite sign.
    UpToSign = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized: String = message.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn fail(err: &qecaut::Error) -> QecStatus {
    set_error(&err.to_string());
    match err {
        qecaut::Error::GuardExceeded { .. } => QecStatus::GuardExceeded,
        qecaut::Error::InternalInconsistency(_) => QecStatus::InternalError,
        _ => QecStatus::InvalidInput,
    }
}

fn guarded(body: impl FnOnce() -> QecStatus) -> QecStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            QecStatus::InternalError
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, QecStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(QecStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        QecStatus::InvalidUtf8
    })
}

fn kind_of(kind: QecAutKind) -> AutomorphismKind {
    match kind {
        QecAutKind::Strong => AutomorphismKind::Strong,
        QecAutKind::Weak => AutomorphismKind::Weak,
        QecAutKind::Clifford => AutomorphismKind::Clifford,
    }
}

/// Copy the most recent error message for this thread into `buffer`
/// (NUL-terminated, truncated to `length` bytes). Returns the full message
/// length in bytes, excluding the terminator.
///
/// # Safety
/// `buffer` must point to `length` writable bytes, or be null (query mode).
#[no_mangle]
pub unsafe extern "C" fn qec_last_error(buffer: *mut c_char, length: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let message = slot.borrow();
        let bytes = message.as_bytes();
        if !buffer.is_null() && length > 0 {
            let n = bytes.len().min(length - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr(), buffer.cast(), n);
            *buffer.add(n) = 0;
        }
        bytes.len()
    })
}

/// Build a stabilizer group from `count` signed Pauli strings.
///
/// # Safety
/// `generators` must point to `count` valid NUL-terminated strings and `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qec_group_build(
    generators: *const *const c_char,
    count: usize,
    out: *mut *mut QecGroup,
) -> QecStatus {
    guarded(|| {
        if out.is_null() || (generators.is_null() && count > 0) {
            set_error("null argument");
            return QecStatus::NullArgument;
        }
        let mut ops = Vec::with_capacity(count);
        for i in 0..count {
            let text = match read_str(*generators.add(i)) {
                Ok(text) => text,
                Err(status) => return status,
            };
            match PauliOperator::parse(text) {
                Ok(op) => ops.push(op),
                Err(err) => return fail(&err),
            }
        }
        match StabilizerGroup::build(&ops) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(QecGroup { inner }));
                QecStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Build a stabilizer group from newline-separated text in the code file
/// format (`#` comments, blank lines ignored).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qec_group_parse(
    text: *const c_char,
    out: *mut *mut QecGroup,
) -> QecStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return QecStatus::NullArgument;
        }
        let text = match read_str(text) {
            Ok(text) => text,
            Err(status) => return status,
        };
        let parsed = match qecaut::parse_code_file(text) {
            Ok(parsed) => parsed,
            Err(err) => return fail(&err),
        };
        match StabilizerGroup::from_strings(&parsed.generators) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(QecGroup { inner }));
                QecStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Build one of the built-in example codes by name (e.g. "513").
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qec_group_from_catalog(
    name: *const c_char,
    out: *mut *mut QecGroup,
) -> QecStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return QecStatus::NullArgument;
        }
        let name = match read_str(name) {
            Ok(name) => name,
            Err(status) => return status,
        };
        let entry = match catalog_lookup(name) {
            Ok(entry) => entry,
            Err(err) => return fail(&err),
        };
        match entry.build() {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(QecGroup { inner }));
                QecStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Release a group handle. Null is a no-op.
///
/// # Safety
/// `group` must be a pointer returned by a `qec_group_*` constructor, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn qec_group_free(group: *mut QecGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Physical qubit count, or 0 for a null handle.
///
/// # Safety
/// `group` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qec_group_qubits(group: *const QecGroup) -> u32 {
    group.as_ref().map_or(0, |g| g.inner.n() as u32)
}

/// Independent generator count, or 0 for a null handle.
///
/// # Safety
/// `group` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qec_group_generator_count(group: *const QecGroup) -> u32 {
    group.as_ref().map_or(0, |g| g.inner.m() as u32)
}

/// Logical qubit count `n - m`, or 0 for a null handle.
///
/// # Safety
/// `group` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qec_group_logical_qubits(group: *const QecGroup) -> u32 {
    group.as_ref().map_or(0, |g| g.inner.k() as u32)
}

/// Code distance; `degenerate` (optional) reports whether the k = 0
/// convention applied.
///
/// # Safety
/// `group` must be a live handle; `distance` must be valid; `degenerate` may
/// be null.
#[no_mangle]
pub unsafe extern "C" fn qec_group_distance(
    group: *const QecGroup,
    distance: *mut u32,
    degenerate: *mut bool,
) -> QecStatus {
    guarded(|| {
        let Some(group) = group.as_ref() else {
            set_error("null group handle");
            return QecStatus::NullArgument;
        };
        if distance.is_null() {
            set_error("null output pointer");
            return QecStatus::NullArgument;
        }
        match analysis::distance(&group.inner) {
            Ok(result) => {
                *distance = result.params.d as u32;
                if !degenerate.is_null() {
                    *degenerate = result.params.degenerate_convention;
                }
                QecStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Membership of a signed Pauli string, with the group element's sign
/// (+1/-1) written to `sign` when present.
///
/// # Safety
/// `group` must be a live handle; `pauli` a valid string; `membership` valid;
/// `sign` may be null.
#[no_mangle]
pub unsafe extern "C" fn qec_group_contains(
    group: *const QecGroup,
    pauli: *const c_char,
    membership: *mut QecMembership,
    sign: *mut i8,
) -> QecStatus {
    guarded(|| {
        let Some(group) = group.as_ref() else {
            set_error("null group handle");
            return QecStatus::NullArgument;
        };
        if membership.is_null() {
            set_error("null output pointer");
            return QecStatus::NullArgument;
        }
        let text = match read_str(pauli) {
            Ok(text) => text,
            Err(status) => return status,
        };
        let op = match PauliOperator::parse(text) {
            Ok(op) => op,
            Err(err) => return fail(&err),
        };
        match group.inner.contains(&op) {
            Ok(answer) => {
                *membership = match answer.status {
                    MembershipStatus::Absent => QecMembership::Absent,
                    MembershipStatus::Exact => QecMembership::Exact,
                    MembershipStatus::UpToSign => QecMembership::UpToSign,
                };
                if !sign.is_null() {
                    *sign = answer.sign.map_or(0, |s| s.as_i8());
                }
                QecStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Order of the chosen automorphism group (full pruned search, n <= 12).
///
/// # Safety
/// `group` must be a live handle and `order` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qec_aut_order(
    group: *const QecGroup,
    kind: QecAutKind,
    order: *mut u64,
) -> QecStatus {
    guarded(|| {
        let Some(group) = group.as_ref() else {
            set_error("null group handle");
            return QecStatus::NullArgument;
        };
        if order.is_null() {
            set_error("null output pointer");
            return QecStatus::NullArgument;
        }
        match aut::compute_group(&group.inner, kind_of(kind), &SearchOptions::default()) {
            Ok(result) => {
                *order = result.order;
                QecStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Test one permutation, given in cycle notation such as "(1 3)(2 5)", for
/// membership in the chosen automorphism group.
///
/// # Safety
/// `group` must be a live handle, `cycles` a valid string, `member` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn qec_check_perm(
    group: *const QecGroup,
    kind: QecAutKind,
    cycles: *const c_char,
    member: *mut bool,
) -> QecStatus {
    guarded(|| {
        let Some(group) = group.as_ref() else {
            set_error("null group handle");
            return QecStatus::NullArgument;
        };
        if member.is_null() {
            set_error("null output pointer");
            return QecStatus::NullArgument;
        }
        let text = match read_str(cycles) {
            Ok(text) => text,
            Err(status) => return status,
        };
        let sigma = match Permutation::parse_cycles(text, group.inner.n()) {
            Ok(sigma) => sigma,
            Err(err) => return fail(&err),
        };
        let answer = match kind_of(kind) {
            AutomorphismKind::Strong => aut::is_strong(&group.inner, &sigma),
            AutomorphismKind::Weak => aut::is_weak(&group.inner, &sigma),
            AutomorphismKind::Clifford => aut::is_clifford(&group.inner, &sigma),
        };
        match answer {
            Ok(result) => {
                *member = result;
                QecStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}
