//! C ABI for the `winset` library.
//!
//! Automata cross the boundary as opaque [`WinsetDfa`] handles. Every
//! fallible function returns a [`WinsetStatus`] and writes its result
//! through an out-pointer; on failure [`winset_last_error_message`] describes
//! the error. Strings returned by the library are freed with
//! [`winset_string_free`], handles with [`winset_dfa_free`]. Panics never
//! unwind into the caller; they surface as `WINSET_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use winset::automata::format::{parse_dfa, write_dfa};
use winset::automata::{equivalent, minimize, Dfa, StateId, Symbol};
use winset::gadgets::{chain_dfa, dyck_dfa, exact_k_dfa};
use winset::winset::{alice_wins, winning_dfa_with, BuildOptions, TargetSet, TurnWord};
use winset::{analysis::dedekind, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WinsetStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    /// A state, game-state or arithmetic limit was exceeded.
    ResourceLimit = 5,
    Internal = 6,
}

/// Opaque binary DFA.
pub struct WinsetDfa(Dfa);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> WinsetStatus {
    match err {
        Error::Parse { .. } => WinsetStatus::Parse,
        Error::CapExceeded { .. } | Error::TooManyStates { .. } | Error::Overflow(_) => {
            WinsetStatus::ResourceLimit
        }
        _ => WinsetStatus::InvalidArgument,
    }
}

struct Failure(WinsetStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(WinsetStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording its error and catching panics.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> WinsetStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            WinsetStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal error");
            WinsetStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(WinsetStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn dfa_arg<'a>(p: *const WinsetDfa, what: &str) -> Result<&'a Dfa, Failure> {
    p.as_ref().map(|d| &d.0).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_dfa(out: *mut *mut WinsetDfa, dfa: Dfa) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(WinsetDfa(dfa))));
    Ok(())
}

/// Message of the last failed call on this thread, or the empty string.
/// Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn winset_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a DFA in the text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn winset_dfa_parse(
    text: *const c_char,
    out: *mut *mut WinsetDfa,
) -> WinsetStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        put_dfa(out, parse_dfa(text)?.dfa)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `dfa` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn winset_dfa_free(dfa: *mut WinsetDfa) {
    if !dfa.is_null() {
        drop(Box::from_raw(dfa));
    }
}

/// Writes the text form of `dfa`; free it with [`winset_string_free`].
///
/// # Safety
/// `dfa` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn winset_dfa_to_text(
    dfa: *const WinsetDfa,
    out: *mut *mut c_char,
) -> WinsetStatus {
    guard(|| {
        let text = write_dfa(dfa_arg(dfa, "dfa")?);
        let c = CString::new(text).map_err(|e| Failure(WinsetStatus::Internal, e.to_string()))?;
        put(out, c.into_raw())
    })
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn winset_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `dfa` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn winset_dfa_state_count(
    dfa: *const WinsetDfa,
    out: *mut usize,
) -> WinsetStatus {
    guard(|| put(out, dfa_arg(dfa, "dfa")?.state_count()))
}

/// Membership of `word`, written with `0`/`1` or `A`/`B` (symbol 0 and 1).
///
/// # Safety
/// `dfa` must be a live handle, `word` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn winset_dfa_accepts(
    dfa: *const WinsetDfa,
    word: *const c_char,
    out: *mut bool,
) -> WinsetStatus {
    guard(|| {
        let d = dfa_arg(dfa, "dfa")?;
        let symbols = str_arg(word, "word")?
            .chars()
            .map(|c| match c {
                '0' | 'A' => Ok(0),
                '1' | 'B' => Ok(1),
                _ => Err(Failure(
                    WinsetStatus::InvalidArgument,
                    format!("unexpected letter {c:?}"),
                )),
            })
            .collect::<Result<Vec<Symbol>, _>>()?;
        put(out, d.accepts(&symbols))
    })
}

/// Minimal winning-set DFA of `dfa` (turn alphabet, `A` as symbol 0).
/// `max_game_states` caps the exploration; 0 selects the library default.
///
/// # Safety
/// `dfa` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn winset_winning_dfa(
    dfa: *const WinsetDfa,
    max_game_states: usize,
    out: *mut *mut WinsetDfa,
) -> WinsetStatus {
    guard(|| {
        let d = dfa_arg(dfa, "dfa")?;
        let mut options = BuildOptions::default();
        if max_game_states > 0 {
            options.max_game_states = max_game_states;
        }
        put_dfa(out, winning_dfa_with(d, &options)?.dfa)
    })
}

/// # Safety
/// `dfa` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn winset_dfa_minimize(
    dfa: *const WinsetDfa,
    out: *mut *mut WinsetDfa,
) -> WinsetStatus {
    guard(|| put_dfa(out, minimize(dfa_arg(dfa, "dfa")?)))
}

/// Language equivalence.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn winset_dfa_equivalent(
    a: *const WinsetDfa,
    b: *const WinsetDfa,
    out: *mut bool,
) -> WinsetStatus {
    guard(|| put(out, equivalent(dfa_arg(a, "a")?, dfa_arg(b, "b")?)))
}

/// DFA of the words with exactly `n` ones.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn winset_exact_k_dfa(n: usize, out: *mut *mut WinsetDfa) -> WinsetStatus {
    guard(|| put_dfa(out, exact_k_dfa(n)))
}

/// Chain automaton with an `m`-state tail and a `p`-state cycle.
///
/// # Safety
/// `finals` must point to `finals_len` readable values (or be null when
/// `finals_len` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn winset_chain_dfa(
    m: usize,
    p: usize,
    finals: *const u32,
    finals_len: usize,
    out: *mut *mut WinsetDfa,
) -> WinsetStatus {
    guard(|| {
        let finals: &[StateId] = if finals_len == 0 {
            &[]
        } else if finals.is_null() {
            return Err(null("finals"));
        } else {
            std::slice::from_raw_parts(finals, finals_len)
        };
        put_dfa(out, chain_dfa(m, p, finals)?)
    })
}

/// Dyck DFA truncated at balance `max_balance`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn winset_dyck_dfa(
    max_balance: usize,
    out: *mut *mut WinsetDfa,
) -> WinsetStatus {
    guard(|| put_dfa(out, dyck_dfa(max_balance)?))
}

/// Whether Alice wins turn order `turns` (over `A`/`B`) for the target set
/// given as space-separated binary words of equal length.
///
/// # Safety
/// `targets` and `turns` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn winset_alice_wins(
    targets: *const c_char,
    turns: *const c_char,
    out: *mut bool,
) -> WinsetStatus {
    guard(|| {
        let words: Vec<&str> = str_arg(targets, "targets")?.split_whitespace().collect();
        let turns: TurnWord = str_arg(turns, "turns")?.parse()?;
        // An empty target set has no word length of its own.
        let target = if words.is_empty() {
            TargetSet::empty(turns.len())
        } else {
            TargetSet::parse_words(words)?
        };
        put(out, alice_wins(&target, &turns)?)
    })
}

/// Number of antichains of subsets of an `n`-set, `n ≤ 6`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn winset_dedekind(n: usize, out: *mut u64) -> WinsetStatus {
    guard(|| put(out, dedekind(n)?))
}
