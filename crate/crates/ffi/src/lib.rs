//! C ABI over `charval`.
//!
//! Every fallible function returns a [`CharvalStatus`] and writes its result
//! through an out-pointer. On failure the message is kept per thread and can
//! be read with [`charval_last_error`]. Strings returned through out-pointers
//! are owned by the caller and released with [`charval_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use charval::catalog;
use charval::invariants;
use charval::permcore::{group_from_text, PermGroup};
use charval::symchar::{mn_value, Partition};
use charval::verify::{self, Subject, Theorem};
use charval::Error;

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharvalStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownName = 3,
    Parse = 4,
    OrderBound = 5,
    InvalidArgument = 6,
    OutOfRange = 7,
    Computation = 8,
    Panic = 9,
}

/// A finite permutation group.
pub struct CharvalGroup {
    name: String,
    group: PermGroup,
}

/// A character table together with its invariants.
pub struct CharvalTable {
    subject: Subject,
    seed: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> CharvalStatus {
    match e {
        Error::UnknownName(_) => CharvalStatus::UnknownName,
        Error::Parse { .. } => CharvalStatus::Parse,
        Error::OrderBoundExceeded(_) => CharvalStatus::OrderBound,
        Error::RepeatedPoint(_)
        | Error::PointOutOfRange { .. }
        | Error::DegreeMismatch(..)
        | Error::SizeMismatch { .. }
        | Error::InvalidPartition(_)
        | Error::Invalid(_) => CharvalStatus::InvalidArgument,
        _ => CharvalStatus::Computation,
    }
}

struct Failure(CharvalStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn guard(f: impl FnOnce() -> Outcome<()>) -> CharvalStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CharvalStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CharvalStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Outcome<&'a str> {
    if s.is_null() {
        return Err(Failure(CharvalStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(CharvalStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Outcome<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(CharvalStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(CharvalStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> Outcome<*mut c_char> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(CharvalStatus::Computation, "string contains NUL".into()))
}

fn json(value: &impl serde::Serialize) -> Outcome<String> {
    serde_json::to_string(value).map_err(|e| Failure(CharvalStatus::Computation, e.to_string()))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn charval_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn charval_status_message(status: CharvalStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CharvalStatus::Ok => c"ok",
        CharvalStatus::NullPointer => c"null pointer",
        CharvalStatus::InvalidUtf8 => c"invalid UTF-8",
        CharvalStatus::UnknownName => c"unknown group name",
        CharvalStatus::Parse => c"parse error",
        CharvalStatus::OrderBound => c"order bound exceeded",
        CharvalStatus::InvalidArgument => c"invalid argument",
        CharvalStatus::OutOfRange => c"index or value out of range",
        CharvalStatus::Computation => c"computation failed",
        CharvalStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

#[no_mangle]
pub extern "C" fn charval_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a catalog group by name, e.g. `"S4"` or `"dihedral(10)"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_group_from_catalog(
    name: *const c_char,
    out: *mut *mut CharvalGroup,
) -> CharvalStatus {
    guard(|| {
        let name = text(name, "name")?;
        let group = catalog::build(name)?;
        let g = Box::new(CharvalGroup {
            name: name.to_string(),
            group,
        });
        write_out(out, Box::into_raw(g))
    })
}

/// Parses a group file: a `degree N` line, then one generator per line in
/// cycle notation on points `1..=N`.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_group_from_text(
    source: *const c_char,
    max_order: usize,
    out: *mut *mut CharvalGroup,
) -> CharvalStatus {
    guard(|| {
        let source = text(source, "source")?;
        let group = group_from_text(source, max_order)?;
        let g = Box::new(CharvalGroup {
            name: "<text>".to_string(),
            group,
        });
        write_out(out, Box::into_raw(g))
    })
}

/// # Safety
/// `group` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_group_order(
    group: *const CharvalGroup,
    out: *mut usize,
) -> CharvalStatus {
    guard(|| {
        let g = handle(group, "group")?;
        write_out(out, g.group.order())
    })
}

/// # Safety
/// `group` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn charval_group_free(group: *mut CharvalGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Computes the character table and invariants of `group`.
///
/// # Safety
/// `group` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_table_compute(
    group: *const CharvalGroup,
    seed: u64,
    out: *mut *mut CharvalTable,
) -> CharvalStatus {
    guard(|| {
        let g = handle(group, "group")?;
        let subject = Subject::new(&g.name, &g.group, seed)?;
        write_out(out, Box::into_raw(Box::new(CharvalTable { subject, seed })))
    })
}

/// # Safety
/// `table` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn charval_table_free(table: *mut CharvalTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// `table` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_table_class_count(
    table: *const CharvalTable,
    out: *mut usize,
) -> CharvalStatus {
    guard(|| {
        let t = handle(table, "table")?;
        write_out(out, t.subject.analysis.table.class_count())
    })
}

/// # Safety
/// `table` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_table_degree(
    table: *const CharvalTable,
    row: usize,
    out: *mut u64,
) -> CharvalStatus {
    guard(|| {
        let t = &handle(table, "table")?.subject.analysis.table;
        let r = t
            .rows
            .get(row)
            .ok_or_else(|| Failure(CharvalStatus::OutOfRange, format!("row {row}")))?;
        write_out(out, r.degree)
    })
}

/// Writes `χ_row(class)` as an owned string such as `-1` or `z(5)^2 + z(5)^3`.
///
/// # Safety
/// `table` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_table_value(
    table: *const CharvalTable,
    row: usize,
    class: usize,
    out: *mut *mut c_char,
) -> CharvalStatus {
    guard(|| {
        let t = &handle(table, "table")?.subject.analysis.table;
        let v = t
            .rows
            .get(row)
            .and_then(|r| r.values.get(class))
            .ok_or_else(|| {
                Failure(CharvalStatus::OutOfRange, format!("entry ({row}, {class})"))
            })?;
        write_out(out, owned_string(v.to_string())?)
    })
}

/// The whole table as JSON.
///
/// # Safety
/// `table` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_table_json(
    table: *const CharvalTable,
    out: *mut *mut c_char,
) -> CharvalStatus {
    guard(|| {
        let t = handle(table, "table")?;
        let s = json(&t.subject.analysis.table.to_json())?;
        write_out(out, owned_string(s)?)
    })
}

/// The invariant report as JSON.
///
/// # Safety
/// `table` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_invariants_json(
    table: *const CharvalTable,
    out: *mut *mut c_char,
) -> CharvalStatus {
    guard(|| {
        let t = handle(table, "table")?;
        let report: &invariants::InvariantReport = &t.subject.analysis.report;
        write_out(out, owned_string(json(report)?)?)
    })
}

/// Runs a checker (`"a"` .. `"e"`, `"cd2"`, `"lemmas"` or `"all"`) and writes
/// the verdicts as a JSON array. `failures` receives the number of FAIL
/// verdicts and may be null.
///
/// # Safety
/// `table` must come from this library; `theorem` must be a NUL-terminated
/// string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_verify_json(
    table: *const CharvalTable,
    theorem: *const c_char,
    out: *mut *mut c_char,
    failures: *mut usize,
) -> CharvalStatus {
    guard(|| {
        let t = handle(table, "table")?;
        let theorem: Theorem = text(theorem, "theorem")?.parse()?;
        let verdicts = verify::run(theorem, &t.subject, t.seed)?;
        if !failures.is_null() {
            failures.write(verdicts.iter().filter(|v| v.is_fail()).count());
        }
        write_out(out, owned_string(json(&verdicts)?)?)
    })
}

/// `χ_λ(ρ)` for the symmetric group, both given as comma-separated parts.
/// The cycle type may be in any order.
///
/// # Safety
/// Both strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn charval_mn_value(
    partition: *const c_char,
    cycle_type: *const c_char,
    out: *mut i64,
) -> CharvalStatus {
    guard(|| {
        let lambda: Partition = text(partition, "partition")?.parse()?;
        let rho = text(cycle_type, "cycle type")?
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("`{t}` is not a part")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let v = mn_value(&lambda, &Partition::from_unsorted(rho))?;
        let v = i64::try_from(&v)
            .map_err(|_| Failure(CharvalStatus::OutOfRange, format!("{v} does not fit in 64 bits")))?;
        write_out(out, v)
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn charval_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
