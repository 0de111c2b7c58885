use std::ffi::{CStr, CString};
use std::ptr;

use winset_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(winset_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn parse(text: &str) -> *mut WinsetDfa {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { winset_dfa_parse(c.as_ptr(), &mut out) },
        WinsetStatus::Ok
    );
    out
}

fn count(d: *const WinsetDfa) -> usize {
    let mut n = 0;
    assert_eq!(
        unsafe { winset_dfa_state_count(d, &mut n) },
        WinsetStatus::Ok
    );
    n
}

fn accepts(d: *const WinsetDfa, w: &str) -> bool {
    let c = CString::new(w).unwrap();
    let mut r = false;
    assert_eq!(
        unsafe { winset_dfa_accepts(d, c.as_ptr(), &mut r) },
        WinsetStatus::Ok
    );
    r
}

#[test]
fn winning_set_of_exact_one() {
    let mut d = ptr::null_mut();
    let mut w = ptr::null_mut();
    unsafe {
        assert_eq!(winset_exact_k_dfa(1, &mut d), WinsetStatus::Ok);
        assert_eq!(winset_winning_dfa(d, 0, &mut w), WinsetStatus::Ok);
    }
    assert_eq!(count(w), 5);
    // Alice needs the last move and Bob may move at most once
    assert!(accepts(w, "A"));
    assert!(accepts(w, "BA"));
    assert!(!accepts(w, "AB"));
    assert!(!accepts(w, "BBA"));
    unsafe {
        winset_dfa_free(d);
        winset_dfa_free(w);
    }
}

#[test]
fn text_round_trip_and_equivalence() {
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { winset_dyck_dfa(3, &mut d) }, WinsetStatus::Ok);
    let mut text = ptr::null_mut();
    assert_eq!(
        unsafe { winset_dfa_to_text(d, &mut text) },
        WinsetStatus::Ok
    );
    let owned = unsafe { CStr::from_ptr(text) }
        .to_str()
        .unwrap()
        .to_string();
    unsafe { winset_string_free(text) };
    let back = parse(&owned);
    let mut min = ptr::null_mut();
    let mut same = false;
    unsafe {
        assert_eq!(winset_dfa_minimize(back, &mut min), WinsetStatus::Ok);
        assert_eq!(winset_dfa_equivalent(d, min, &mut same), WinsetStatus::Ok);
    }
    assert!(same);
    assert!(count(min) <= count(d));
    unsafe {
        winset_dfa_free(d);
        winset_dfa_free(back);
        winset_dfa_free(min);
    }
}

#[test]
fn chain_finals() {
    let finals = [1u32];
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { winset_chain_dfa(3, 0, finals.as_ptr(), 1, &mut d) },
        WinsetStatus::Ok
    );
    assert_eq!(count(d), 3);
    assert!(accepts(d, "1"));
    unsafe { winset_dfa_free(d) };
}

#[test]
fn oracle_and_counting() {
    let targets = CString::new("00 11").unwrap();
    let mut won = false;
    for (turns, expected) in [("AA", true), ("BA", true), ("AB", false), ("BB", false)] {
        let t = CString::new(turns).unwrap();
        assert_eq!(
            unsafe { winset_alice_wins(targets.as_ptr(), t.as_ptr(), &mut won) },
            WinsetStatus::Ok
        );
        assert_eq!(won, expected, "{turns}");
    }
    let mut d = 0u64;
    assert_eq!(unsafe { winset_dedekind(4, &mut d) }, WinsetStatus::Ok);
    assert_eq!(d, 168);
}

#[test]
fn errors_are_reported() {
    let mut d = ptr::null_mut();
    let bad = CString::new("dfa 2 0\nt 0 5 0\n").unwrap();
    assert_eq!(
        unsafe { winset_dfa_parse(bad.as_ptr(), &mut d) },
        WinsetStatus::Parse
    );
    assert!(!last_error().is_empty());

    assert_eq!(
        unsafe { winset_dfa_parse(ptr::null(), &mut d) },
        WinsetStatus::NullPointer
    );

    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { winset_dfa_parse(invalid.as_ptr().cast(), &mut d) },
        WinsetStatus::InvalidUtf8
    );

    let mut n = 0u64;
    assert_eq!(
        unsafe { winset_dedekind(9, &mut n) },
        WinsetStatus::InvalidArgument
    );

    let mut e = ptr::null_mut();
    let mut w = ptr::null_mut();
    unsafe {
        assert_eq!(winset_exact_k_dfa(3, &mut e), WinsetStatus::Ok);
        assert_eq!(
            winset_winning_dfa(e, 2, &mut w),
            WinsetStatus::ResourceLimit
        );
        winset_dfa_free(e);
    }
    assert!(last_error().contains("cap"));

    let targets = CString::new("00 11").unwrap();
    let turns = CString::new("A").unwrap();
    let mut won = false;
    assert_eq!(
        unsafe { winset_alice_wins(targets.as_ptr(), turns.as_ptr(), &mut won) },
        WinsetStatus::InvalidArgument
    );
}

#[test]
fn header_declares_the_abi() {
    let header = include_str!("../include/winset.h");
    for name in [
        "WINSET_STATUS_OK",
        "WINSET_STATUS_RESOURCE_LIMIT",
        "typedef struct WinsetDfa WinsetDfa",
        "winset_dfa_parse",
        "winset_dfa_free",
        "winset_dfa_to_text",
        "winset_string_free",
        "winset_winning_dfa",
        "winset_alice_wins",
        "winset_last_error_message",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
