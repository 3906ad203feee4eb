//! Exercises the C ABI through the exported extern "C" functions exactly as
//! a foreign caller would: raw pointers, status codes, and manual frees.

use glq_capi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(ptr: *mut libc::c_char) -> String {
    assert!(!ptr.is_null());
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_owned();
    glq_string_free(ptr);
    s
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(glq_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn sampler_lifecycle_and_determinism() {
    unsafe {
        let u = c("1/2");
        let q = c("2");
        let draw = |seed: u64| -> Vec<String> {
            let mut handle: *mut GlqSampler = ptr::null_mut();
            let st = glq_sampler_new(u.as_ptr(), q.as_ptr(), seed, 0, 0, &mut handle);
            assert_eq!(st, GlqStatus::Ok);
            let mut lines = Vec::new();
            for _ in 0..20 {
                let mut out: *mut libc::c_char = ptr::null_mut();
                let st = glq_sampler_sample_json(handle, &mut out);
                assert_eq!(st, GlqStatus::Ok);
                lines.push(take_string(out));
            }
            glq_sampler_free(handle);
            lines
        };
        let a = draw(11);
        let b = draw(11);
        assert_eq!(a, b);
        for line in &a {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v["partition"].is_array());
            assert!(v["tableau"].is_array());
        }
    }
}

#[test]
fn sampler_rejects_bad_parameters() {
    unsafe {
        let mut handle: *mut GlqSampler = ptr::null_mut();
        let st = glq_sampler_new(c("0").as_ptr(), c("2").as_ptr(), 1, 0, 0, &mut handle);
        assert_eq!(st, GlqStatus::InvalidParameter);
        let st = glq_sampler_new(c("1/2").as_ptr(), c("1").as_ptr(), 1, 0, 0, &mut handle);
        assert_eq!(st, GlqStatus::InvalidParameter);
        let st = glq_sampler_new(ptr::null(), c("2").as_ptr(), 1, 0, 0, &mut handle);
        assert_eq!(st, GlqStatus::InvalidParameter);
        let st = glq_sampler_new(c("1/2").as_ptr(), c("2").as_ptr(), 1, 0, 0, ptr::null_mut());
        assert_eq!(st, GlqStatus::NullPointer);
        // freeing NULL is a no-op
        glq_sampler_free(ptr::null_mut());
        glq_string_free(ptr::null_mut());
    }
}

#[test]
fn measure_weight_and_enclosure() {
    unsafe {
        let mut out: *mut libc::c_char = ptr::null_mut();
        let st = glq_measure_weight(
            c("1/2").as_ptr(),
            c("2").as_ptr(),
            false,
            c("1").as_ptr(),
            &mut out,
        );
        assert_eq!(st, GlqStatus::Ok);
        assert_eq!(take_string(out), "1/2");

        // signed mode: (1) evaluates to u/(q+1) = 1/6
        let mut out: *mut libc::c_char = ptr::null_mut();
        let st = glq_measure_weight(
            c("1/2").as_ptr(),
            c("2").as_ptr(),
            true,
            c("1").as_ptr(),
            &mut out,
        );
        assert_eq!(st, GlqStatus::Ok);
        assert_eq!(take_string(out), "1/6");

        let mut lo: *mut libc::c_char = ptr::null_mut();
        let mut hi: *mut libc::c_char = ptr::null_mut();
        let st = glq_measure_enclosure(
            c("1/2").as_ptr(),
            c("2").as_ptr(),
            false,
            c("-").as_ptr(),
            c("1e-9").as_ptr(),
            &mut lo,
            &mut hi,
        );
        assert_eq!(st, GlqStatus::Ok);
        let lo = take_string(lo);
        let hi = take_string(hi);
        // endpoints are p/q rationals bracketing ~0.57757
        assert!(lo.contains('/') && hi.contains('/'));

        let mut out: *mut libc::c_char = ptr::null_mut();
        let st = glq_measure_weight(
            c("1/2").as_ptr(),
            c("2").as_ptr(),
            false,
            c("1,2").as_ptr(), // not weakly decreasing
            &mut out,
        );
        assert_eq!(st, GlqStatus::InvalidParameter);
    }
}

#[test]
fn verify_and_count_entry_points() {
    unsafe {
        assert_eq!(
            glq_verify_identity(c("sizegen").as_ptr(), c("2").as_ptr(), 10, 0),
            GlqStatus::Ok
        );
        assert_eq!(
            glq_verify_identity(c("interp").as_ptr(), c("3").as_ptr(), 10, 2),
            GlqStatus::Ok
        );
        assert_eq!(
            glq_verify_identity(c("nope").as_ptr(), c("2").as_ptr(), 10, 0),
            GlqStatus::InvalidParameter
        );

        let mut out: *mut libc::c_char = ptr::null_mut();
        let st = glq_unipotent_count(GlqGroupKind::Gl, 3, 2, &mut out);
        assert_eq!(st, GlqStatus::Ok);
        assert_eq!(take_string(out), "64");
        let mut out: *mut libc::c_char = ptr::null_mut();
        let st = glq_unipotent_count(GlqGroupKind::Unitary, 3, 2, &mut out);
        assert_eq!(st, GlqStatus::Ok);
        assert_eq!(take_string(out), "64");
        // non prime power
        let mut out: *mut libc::c_char = ptr::null_mut();
        let st = glq_unipotent_count(GlqGroupKind::Gl, 2, 6, &mut out);
        assert_eq!(st, GlqStatus::InvalidParameter);
    }
}

#[test]
fn census_json_and_budget() {
    unsafe {
        let mut out: *mut libc::c_char = ptr::null_mut();
        let st = glq_census_json(
            GlqGroupKind::Gl,
            2,
            2,
            c("fixed_dim").as_ptr(),
            0,
            2,
            &mut out,
        );
        assert_eq!(st, GlqStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["group"], "GL(2,2)");
        assert_eq!(v["counts"]["1"], 3);

        let mut out: *mut libc::c_char = ptr::null_mut();
        let st = glq_census_json(
            GlqGroupKind::Gl,
            3,
            3,
            c("fixed_dim").as_ptr(),
            10, // absurdly small budget
            1,
            &mut out,
        );
        assert_eq!(st, GlqStatus::BudgetExceeded);
    }
}
