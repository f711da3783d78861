//! C interface to `threshold-spectra`.
//!
//! Graphs live behind an opaque [`TsGraph`] handle created by
//! [`ts_graph_parse`] or [`ts_graph_antiregular`] and released with
//! [`ts_graph_free`]. Every fallible call returns a [`TsStatus`]; on failure a
//! message is available from [`ts_last_error`] on the same thread. Vertex
//! indices are 1-based, as in the Rust API.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use threshold_spectra::eigen::{self, Spectrum};
use threshold_spectra::{analysis, Error, ThresholdGraph};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NumericError = 4,
    BufferTooSmall = 5,
    NotAvailable = 6,
    InvalidArgument = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct TsGraph {
    graph: ThresholdGraph,
    spectrum: OnceLock<Result<Spectrum, Error>>,
}

impl TsGraph {
    fn new(graph: ThresholdGraph) -> Box<Self> {
        Box::new(Self { graph, spectrum: OnceLock::new() })
    }

    fn spectrum(&self) -> Result<&Spectrum, Failure> {
        self.spectrum
            .get_or_init(|| eigen::eigenvalues(&self.graph.adjacency()))
            .as_ref()
            .map_err(|e| Failure(TsStatus::NumericError, e.to_string()))
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TsInertia {
    pub negatives: usize,
    pub zeros: usize,
    pub positives: usize,
}

/// Interval free of non-trivial eigenvalues and the order of the
/// anti-regular graph that produced it.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TsInterval {
    pub lo: f64,
    pub hi: f64,
    pub source_order: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TsBounds {
    /// `λ_max` is at least this value.
    pub lower_bound_lambda_max: f64,
    /// `λ_min` is at most this value.
    pub upper_bound_lambda_min: f64,
}

struct Failure(TsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NoConvergence | Error::NoPositiveEigenvalue => TsStatus::NumericError,
            Error::OrderTooSmall { .. } | Error::TooLarge { .. } => TsStatus::InvalidArgument,
            _ => TsStatus::ParseError,
        };
        Failure(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TsStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            TsStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(TsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn handle<'a>(g: *const TsGraph) -> Result<&'a TsGraph, Failure> {
    g.as_ref().ok_or_else(|| null("graph handle"))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

/// Copies `src` into `dst[..cap]`, reporting the required length in `needed`.
unsafe fn fill<T: Copy>(src: &[T], dst: *mut T, cap: usize, needed: *mut usize) -> Result<(), Failure> {
    if let Some(n) = needed.as_mut() {
        *n = src.len();
    }
    if cap < src.len() {
        return Err(Failure(TsStatus::BufferTooSmall, format!("buffer holds {cap}, need {}", src.len())));
    }
    if src.is_empty() {
        return Ok(());
    }
    if dst.is_null() {
        return Err(null("output buffer"));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len());
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn ts_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ts_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a creation string (`"0011"` or `"0^2 1^2"`).
///
/// # Safety
/// `text` must be NULL or a NUL-terminated string; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_parse(text: *const c_char, out: *mut *mut TsGraph) -> TsStatus {
    guard(|| {
        let slot = self::out(out, "out")?;
        *slot = ptr::null_mut();
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(TsStatus::InvalidUtf8, e.to_string()))?;
        let g: ThresholdGraph = s.parse()?;
        *slot = Box::into_raw(TsGraph::new(g));
        Ok(())
    })
}

/// The anti-regular graph on `n >= 2` vertices.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_antiregular(n: usize, out: *mut *mut TsGraph) -> TsStatus {
    guard(|| {
        let slot = self::out(out, "out")?;
        *slot = ptr::null_mut();
        let g = ThresholdGraph::antiregular(n).map_err(|e| Failure(TsStatus::InvalidArgument, e.to_string()))?;
        *slot = Box::into_raw(TsGraph::new(g));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_free(g: *mut TsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_order(g: *const TsGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.order())
}

/// Writes the expanded creation string plus a NUL into `buf`. `needed`
/// (optional) receives the length including the NUL.
///
/// # Safety
/// `buf` must be writable for `cap` bytes; `needed` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_to_string(
    g: *const TsGraph,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> TsStatus {
    guard(|| {
        let h = handle(g)?;
        let c = CString::new(h.graph.to_string()).expect("creation strings are ascii");
        let bytes: Vec<c_char> = c.as_bytes_with_nul().iter().map(|&b| b as c_char).collect();
        fill(&bytes, buf, cap, needed)
    })
}

/// Eigenvalues in ascending order; `cap` must be at least the order.
///
/// # Safety
/// `out` must be writable for `cap` doubles.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_eigenvalues(g: *const TsGraph, out: *mut f64, cap: usize) -> TsStatus {
    guard(|| {
        let s = handle(g)?.spectrum()?;
        fill(s.values(), out, cap, ptr::null_mut())
    })
}

/// Inertia counted from the computed spectrum.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_inertia(g: *const TsGraph, out: *mut TsInertia) -> TsStatus {
    guard(|| {
        let i = handle(g)?.spectrum()?.inertia();
        *self::out(out, "out")? = TsInertia { negatives: i.negatives, zeros: i.zeros, positives: i.positives };
        Ok(())
    })
}

/// Inertia predicted from the block structure.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_inertia_formula(g: *const TsGraph, out: *mut TsInertia) -> TsStatus {
    guard(|| {
        let i = analysis::inertia_formula(&handle(g)?.graph);
        *self::out(out, "out")? = TsInertia { negatives: i.negatives, zeros: i.zeros, positives: i.positives };
        Ok(())
    })
}

/// Largest eigenvalue below -1; `TS_STATUS_NOT_AVAILABLE` when none exists.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_mu_minus(g: *const TsGraph, out: *mut f64) -> TsStatus {
    guard(|| {
        let slot = self::out(out, "out")?;
        let m = handle(g)?.spectrum()?.mu_minus();
        *slot = m.ok_or_else(|| Failure(TsStatus::NotAvailable, "no eigenvalue below -1".into()))?;
        Ok(())
    })
}

/// Smallest positive eigenvalue.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_mu_plus(g: *const TsGraph, out: *mut f64) -> TsStatus {
    guard(|| {
        let slot = self::out(out, "out")?;
        *slot = handle(g)?.spectrum()?.mu_plus()?;
        Ok(())
    })
}

/// `[μ⁻(A_m), μ⁺(A_m)]` for the largest anti-regular subgraph `A_m`.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_free_interval(g: *const TsGraph, out: *mut TsInterval) -> TsStatus {
    guard(|| {
        let slot = self::out(out, "out")?;
        let fi = analysis::free_interval(&handle(g)?.graph)?;
        *slot = TsInterval { lo: fi.lo, hi: fi.hi, source_order: fi.source_order };
        Ok(())
    })
}

/// Closed-form bounds on the extreme eigenvalues.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_bounds(g: *const TsGraph, out: *mut TsBounds) -> TsStatus {
    guard(|| {
        let slot = self::out(out, "out")?;
        let b = analysis::spectral_bounds(&handle(g)?.graph);
        *slot = TsBounds {
            lower_bound_lambda_max: b.lower_bound_lambda_max,
            upper_bound_lambda_min: b.upper_bound_lambda_min,
        };
        Ok(())
    })
}

/// Vertices of `g` inducing its largest anti-regular subgraph `A_m`; `m` is
/// written to `len` even when the buffer is too small.
///
/// # Safety
/// `indices` must be writable for `cap` entries; `len` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_antiregular_subgraph(
    g: *const TsGraph,
    indices: *mut usize,
    cap: usize,
    len: *mut usize,
) -> TsStatus {
    guard(|| {
        let e = handle(g)?.graph.largest_antiregular_subgraph();
        fill(e.indices(), indices, cap, len)
    })
}

/// Positions of the vertices of `g` inside its smallest anti-regular
/// supergraph `A_N` (one per vertex of `g`); `N` is written to `host_order`.
///
/// # Safety
/// `indices` must be writable for `cap` entries; `host_order` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_antiregular_supergraph(
    g: *const TsGraph,
    indices: *mut usize,
    cap: usize,
    host_order: *mut usize,
) -> TsStatus {
    guard(|| {
        let e = handle(g)?.graph.smallest_antiregular_supergraph();
        if let Some(n) = host_order.as_mut() {
            *n = e.host().order();
        }
        fill(e.indices(), indices, cap, ptr::null_mut())
    })
}

/// Endpoints of the interval `[(-1-√2)/2, (-1+√2)/2]`.
///
/// # Safety
/// `lo` and `hi` must each be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ts_omega(lo: *mut f64, hi: *mut f64) {
    let (a, b) = analysis::omega();
    if let Some(p) = lo.as_mut() {
        *p = a;
    }
    if let Some(p) = hi.as_mut() {
        *p = b;
    }
}
