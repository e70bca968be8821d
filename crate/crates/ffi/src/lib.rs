//! C ABI for the series engine. Handles are opaque; structured data crosses
//! the boundary as JSON strings in the documented schemas. Every fallible
//! call returns a status code; the message for the most recent failure on
//! the calling thread is available via `eqc_last_error`.
//!
//! The committed header lives in `include/equichain.h`.

use equichain::asymptotics::asymptotic_profile;
use equichain::chain::ChainSpec;
use equichain::equivariant::{check_shape, equivariant_hilbert, verify_series};
use equichain::io;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

pub const EQC_OK: i32 = 0;
pub const EQC_ERR_NULL: i32 = 1;
pub const EQC_ERR_UTF8: i32 = 2;
pub const EQC_ERR_PARSE: i32 = 3;
pub const EQC_ERR_COMPUTE: i32 = 4;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&ch| ch != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(sanitized).unwrap());
}

fn classify(err: &equichain::Error) -> i32 {
    match err {
        equichain::Error::Parse(_) => EQC_ERR_PARSE,
        _ => EQC_ERR_COMPUTE,
    }
}

pub struct EqcChain(ChainSpec);
pub struct EqcSeries(equichain::birational::BiRational);

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, i32> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(EQC_ERR_NULL);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        EQC_ERR_UTF8
    })
}

fn write_json(v: &serde_json::Value, out: *mut *mut c_char) -> i32 {
    if out.is_null() {
        set_error("null output pointer");
        return EQC_ERR_NULL;
    }
    let text = serde_json::to_string(v).unwrap();
    let c = CString::new(text).unwrap();
    unsafe { *out = c.into_raw() };
    EQC_OK
}

/// Message for the most recent failure on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn eqc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by any `*_json` output parameter.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn eqc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a chain spec from its JSON form.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn eqc_chain_parse(json: *const c_char, out: *mut *mut EqcChain) -> i32 {
    if out.is_null() {
        set_error("null output pointer");
        return EQC_ERR_NULL;
    }
    let text = match read_str(json) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let value: serde_json::Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => {
            set_error(&format!("invalid JSON: {e}"));
            return EQC_ERR_PARSE;
        }
    };
    match io::chain_from_json(&value) {
        Ok(chain) => {
            *out = Box::into_raw(Box::new(EqcChain(chain)));
            EQC_OK
        }
        Err(e) => {
            set_error(&e.to_string());
            classify(&e)
        }
    }
}

/// # Safety
/// `chain` must come from `eqc_chain_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn eqc_chain_free(chain: *mut EqcChain) {
    if !chain.is_null() {
        drop(Box::from_raw(chain));
    }
}

/// Chain member at width `n`, as ideal JSON.
///
/// # Safety
/// `chain` must be a live handle; `json_out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqc_chain_materialize(
    chain: *const EqcChain,
    n: u32,
    json_out: *mut *mut c_char,
) -> i32 {
    let Some(chain) = chain.as_ref() else {
        set_error("null chain handle");
        return EQC_ERR_NULL;
    };
    match chain.0.materialize(n) {
        Ok(ideal) => write_json(&io::ideal_to_json(&ideal), json_out),
        Err(e) => {
            set_error(&e.to_string());
            classify(&e)
        }
    }
}

/// Bigraded series of the chain. With `verify_up_to > 0` the result is
/// cross-checked against the single-width oracle for widths `1..=verify_up_to`.
///
/// # Safety
/// `chain` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqc_equivariant_hilbert(
    chain: *const EqcChain,
    verify_up_to: u32,
    out: *mut *mut EqcSeries,
) -> i32 {
    let Some(chain) = chain.as_ref() else {
        set_error("null chain handle");
        return EQC_ERR_NULL;
    };
    if out.is_null() {
        set_error("null output pointer");
        return EQC_ERR_NULL;
    }
    let result = equivariant_hilbert(&chain.0)
        .and_then(|h| {
            check_shape(&h, chain.0.rows())?;
            if verify_up_to > 0 {
                verify_series(&chain.0, &h, verify_up_to)?;
            }
            Ok(h)
        });
    match result {
        Ok(h) => {
            *out = Box::into_raw(Box::new(EqcSeries(h)));
            EQC_OK
        }
        Err(e) => {
            set_error(&e.to_string());
            classify(&e)
        }
    }
}

/// # Safety
/// `series` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn eqc_series_free(series: *mut EqcSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// The series in its JSON form.
///
/// # Safety
/// `series` must be a live handle; `json_out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqc_series_to_json(
    series: *const EqcSeries,
    json_out: *mut *mut c_char,
) -> i32 {
    let Some(series) = series.as_ref() else {
        set_error("null series handle");
        return EQC_ERR_NULL;
    };
    write_json(&io::birational_to_json(&series.0), json_out)
}

/// Coefficient of `s^n`, as single-width series JSON.
///
/// # Safety
/// `series` must be a live handle; `json_out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqc_series_coeff(
    series: *const EqcSeries,
    n: u32,
    json_out: *mut *mut c_char,
) -> i32 {
    let Some(series) = series.as_ref() else {
        set_error("null series handle");
        return EQC_ERR_NULL;
    };
    match series.0.series_coeff(n as usize) {
        Ok(h) => write_json(&io::unirational_to_json(&h), json_out),
        Err(e) => {
            set_error(&e.to_string());
            classify(&e)
        }
    }
}

/// Asymptotic profile of the series, cross-checked over the width window
/// `lo..=hi`.
///
/// # Safety
/// `series` must be a live handle; `json_out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqc_asymptotic_profile(
    series: *const EqcSeries,
    lo: u32,
    hi: u32,
    json_out: *mut *mut c_char,
) -> i32 {
    let Some(series) = series.as_ref() else {
        set_error("null series handle");
        return EQC_ERR_NULL;
    };
    match asymptotic_profile(&series.0, (lo, hi)) {
        Ok(p) => write_json(&io::profile_to_json(&p), json_out),
        Err(e) => {
            set_error(&e.to_string());
            classify(&e)
        }
    }
}
