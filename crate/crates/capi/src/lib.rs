//! C ABI for the partition-measure library: opaque sampler handles, exact
//! values as strings, and integer status codes.
//!
//! Conventions: every function that can fail returns a [`GlqStatus`];
//! outputs are written through out-pointers only on `Ok`. Strings produced
//! by this library (`char*` outputs) are NUL-terminated, UTF-8, and must be
//! released with [`glq_string_free`]. Handles must be released with their
//! dedicated free function. All parsing of rationals accepts the same
//! spellings as the CLI (`1/2`, `0.5`, `1e-9`).

use glq_core::error::Error;
use glq_core::exactnum::parse_rational;
use glq_core::measure::{self, MeasureParams, Mode};
use glq_core::oracle::{self, Statistic};
use glq_core::partition::Partition;
use glq_core::qseries::{self, Identity};
use glq_core::sampler::{Sampler, SamplerConfig};
use glq_core::theorems::{self, GroupKind, GroupSpec};
use libc::c_char;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlqStatus {
    Ok = 0,
    /// A parameter was outside its documented domain or failed to parse.
    InvalidParameter = 1,
    /// An exact randomized decision hit the refinement cap.
    RefinementExhausted = 2,
    /// A sampled partition outgrew the configured guard.
    GuardExceeded = 3,
    /// An enumeration would exceed the candidate budget.
    BudgetExceeded = 4,
    /// A required pointer argument was NULL.
    NullPointer = 5,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 6,
    /// The requested verification ran and did not hold.
    MismatchFound = 7,
    /// An unexpected internal failure (a bug; never expected).
    InternalError = 8,
}

/// Group families exposed through the counting entry points.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlqGroupKind {
    Gl = 0,
    Unitary = 1,
}

impl From<GlqGroupKind> for GroupKind {
    fn from(k: GlqGroupKind) -> GroupKind {
        match k {
            GlqGroupKind::Gl => GroupKind::Gl,
            GlqGroupKind::Unitary => GroupKind::U,
        }
    }
}

fn status_of(err: &Error) -> GlqStatus {
    match err {
        Error::RefinementExhausted { .. } => GlqStatus::RefinementExhausted,
        Error::GuardExceeded { .. } => GlqStatus::GuardExceeded,
        Error::BudgetExceeded { .. } => GlqStatus::BudgetExceeded,
        _ => GlqStatus::InvalidParameter,
    }
}

/// An owned sampling stream behind an opaque pointer.
pub struct GlqSampler {
    inner: Sampler,
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, GlqStatus> {
    if ptr.is_null() {
        return Err(GlqStatus::NullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| GlqStatus::InvalidUtf8)
}

fn write_string(out: *mut *mut c_char, s: String) -> GlqStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            GlqStatus::Ok
        }
        Err(_) => GlqStatus::InternalError,
    }
}

fn guarded(body: impl FnOnce() -> GlqStatus) -> GlqStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(GlqStatus::InternalError)
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn glq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string allocated by this library. NULL is ignored.
///
/// # Safety
/// `s` must have been returned by a `glq_*` function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn glq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a sampling stream for the measure with parameters `u`, `q`
/// (exact rationals as strings, `0 < u <= 1 < q`). The pair
/// `(seed, stream_id)` fixes the random byte stream; `max_size_guard`
/// bounds any single draw (0 selects the default guard).
///
/// # Safety
/// `u` and `q` must be NUL-terminated strings; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn glq_sampler_new(
    u: *const c_char,
    q: *const c_char,
    seed: u64,
    stream_id: u64,
    max_size_guard: u64,
    out: *mut *mut GlqSampler,
) -> GlqStatus {
    guarded(|| {
        if out.is_null() {
            return GlqStatus::NullPointer;
        }
        let parse = || -> Result<SamplerConfig, Error> {
            let u = parse_rational(read_str_err(u)?)?;
            let q = parse_rational(read_str_err(q)?)?;
            let params = MeasureParams::standard(u, q)?;
            let cfg = SamplerConfig::new(params, seed, stream_id)?;
            if max_size_guard > 0 {
                cfg.with_guard(max_size_guard)
            } else {
                Ok(cfg)
            }
        };
        match parse() {
            Ok(cfg) => {
                let handle = Box::new(GlqSampler {
                    inner: Sampler::new(cfg),
                });
                *out = Box::into_raw(handle);
                GlqStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Turns pointer/UTF-8 problems into `Error` so parse chains stay flat.
unsafe fn read_str_err<'a>(ptr: *const c_char) -> Result<&'a str, Error> {
    read_str(ptr).map_err(|s| Error::InvalidParameter(format!("bad string argument ({s:?})")))
}

/// Draws one partition and writes the sample record as a JSON line
/// (`{"partition":[...],"size":n,"k":...,"h":[...],"tableau":[[...]]}`).
///
/// # Safety
/// `sampler` must be a live handle from [`glq_sampler_new`]; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn glq_sampler_sample_json(
    sampler: *mut GlqSampler,
    out: *mut *mut c_char,
) -> GlqStatus {
    guarded(|| {
        if sampler.is_null() || out.is_null() {
            return GlqStatus::NullPointer;
        }
        let handle = &mut *sampler;
        match handle.inner.sample() {
            Ok(record) => write_string(out, record.to_jsonl()),
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a sampler handle. NULL is ignored.
///
/// # Safety
/// `sampler` must come from [`glq_sampler_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn glq_sampler_free(sampler: *mut GlqSampler) {
    if !sampler.is_null() {
        drop(Box::from_raw(sampler));
    }
}

/// Writes the exact rational weight `w(lambda)` of the measure (the factor
/// multiplying the infinite-product prefactor) as a `p/q` string.
/// `signed_mode` evaluates at `(-u, -q)`. The partition is comma-joined
/// parts or `-`.
///
/// # Safety
/// All pointers must be valid NUL-terminated strings / out-slots.
#[no_mangle]
pub unsafe extern "C" fn glq_measure_weight(
    u: *const c_char,
    q: *const c_char,
    signed_mode: bool,
    partition: *const c_char,
    out: *mut *mut c_char,
) -> GlqStatus {
    guarded(|| {
        if out.is_null() {
            return GlqStatus::NullPointer;
        }
        let work = || -> Result<String, Error> {
            let u = parse_rational(read_str_err(u)?)?;
            let q = parse_rational(read_str_err(q)?)?;
            let lambda = Partition::parse(read_str_err(partition)?)?;
            let mode = if signed_mode {
                Mode::Signed
            } else {
                Mode::Standard
            };
            let params = MeasureParams::new(u, q, mode)?;
            Ok(measure::normalized_weight(&lambda, &params).to_string())
        };
        match work() {
            Ok(s) => write_string(out, s),
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the enclosure `[lo, hi]` of the full measure value
/// `prefactor * w(lambda)` as two `p/q` strings, with prefactor width at
/// most `eps`.
///
/// # Safety
/// All pointers must be valid; `out_lo`/`out_hi` receive owned strings.
#[no_mangle]
pub unsafe extern "C" fn glq_measure_enclosure(
    u: *const c_char,
    q: *const c_char,
    signed_mode: bool,
    partition: *const c_char,
    eps: *const c_char,
    out_lo: *mut *mut c_char,
    out_hi: *mut *mut c_char,
) -> GlqStatus {
    guarded(|| {
        if out_lo.is_null() || out_hi.is_null() {
            return GlqStatus::NullPointer;
        }
        let work = || -> Result<(String, String), Error> {
            let u = parse_rational(read_str_err(u)?)?;
            let q = parse_rational(read_str_err(q)?)?;
            let lambda = Partition::parse(read_str_err(partition)?)?;
            let eps = parse_rational(read_str_err(eps)?)?;
            let mode = if signed_mode {
                Mode::Signed
            } else {
                Mode::Standard
            };
            let params = MeasureParams::new(u, q, mode)?;
            let enc = measure::measure_value(&lambda, &params, &eps)?;
            Ok((enc.lo().to_string(), enc.hi().to_string()))
        };
        match work() {
            Ok((lo, hi)) => {
                let st = write_string(out_lo, lo);
                if st != GlqStatus::Ok {
                    return st;
                }
                let st = write_string(out_hi, hi);
                if st != GlqStatus::Ok {
                    glq_string_free(*out_lo);
                    *out_lo = std::ptr::null_mut();
                }
                st
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Runs one named series identity (`sizegen`, `interp`, `hw`, `stong`,
/// `prodgl`) at truncation `degree` with parameter `k` where applicable.
/// Returns `Ok` when the identity holds, `MismatchFound` when it does not.
///
/// # Safety
/// `name` and `q` must be valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn glq_verify_identity(
    name: *const c_char,
    q: *const c_char,
    degree: usize,
    k: u32,
) -> GlqStatus {
    guarded(|| {
        let work = || -> Result<bool, Error> {
            let name = read_str_err(name)?;
            let q_str = read_str_err(q)?;
            let identity = match name {
                "sizegen" => Identity::SizeGen {
                    q: parse_rational(q_str)?,
                    degree,
                },
                "interp" => Identity::Interp {
                    k,
                    q: parse_rational(q_str)?,
                    degree,
                },
                "hw" => Identity::Hw {
                    k,
                    y: parse_rational(q_str)?.recip(),
                    degree,
                },
                "stong" => Identity::Stong {
                    q: parse_rational(q_str)?,
                    degree,
                },
                "prodgl" => Identity::ProdGl {
                    q: q_str.parse().map_err(|_| {
                        Error::InvalidParameter("prodgl requires an integer q".into())
                    })?,
                    degree,
                },
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown identity `{other}`"
                    )))
                }
            };
            Ok(qseries::verify_identity(&identity)?.pass)
        };
        match work() {
            Ok(true) => GlqStatus::Ok,
            Ok(false) => GlqStatus::MismatchFound,
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the unipotent count `q^(n(n-1))` of the group as a decimal
/// string.
///
/// # Safety
/// `out` must be a valid out-slot.
#[no_mangle]
pub unsafe extern "C" fn glq_unipotent_count(
    kind: GlqGroupKind,
    n: u32,
    q: u64,
    out: *mut *mut c_char,
) -> GlqStatus {
    guarded(|| {
        if out.is_null() {
            return GlqStatus::NullPointer;
        }
        match GroupSpec::new(kind.into(), n, q) {
            Ok(spec) => write_string(out, theorems::unipotent_count(&spec).to_string()),
            Err(e) => status_of(&e),
        }
    })
}

/// Runs an exhaustive census (`statistic` one of `fixed_dim`,
/// `unipotent_partition`, `nilpotent_rank`) and writes the table as a JSON
/// object `{"group":...,"statistic":...,"counts":{key: count}}`.
///
/// # Safety
/// `statistic` must be a valid NUL-terminated string; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn glq_census_json(
    kind: GlqGroupKind,
    n: u32,
    q: u64,
    statistic: *const c_char,
    budget: u64,
    workers: u32,
    out: *mut *mut c_char,
) -> GlqStatus {
    guarded(|| {
        if out.is_null() {
            return GlqStatus::NullPointer;
        }
        let work = || -> Result<String, Error> {
            let statistic: Statistic = read_str_err(statistic)?.parse()?;
            let spec = GroupSpec::new(kind.into(), n, q)?;
            let budget = if budget == 0 {
                oracle::DEFAULT_CENSUS_BUDGET
            } else {
                budget
            };
            let table = oracle::census(&spec, statistic, budget, workers.max(1) as usize)?;
            let counts: serde_json::Map<String, serde_json::Value> = table
                .counts
                .iter()
                .map(|(k, v)| (k.to_string(), serde_json::Value::from(*v)))
                .collect();
            Ok(serde_json::json!({
                "group": spec.to_string(),
                "statistic": statistic.to_string(),
                "counts": counts,
            })
            .to_string())
        };
        match work() {
            Ok(s) => write_string(out, s),
            Err(e) => status_of(&e),
        }
    })
}
