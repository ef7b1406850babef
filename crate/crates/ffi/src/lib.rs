//! C ABI over `fsk-core`.
//!
//! Every value crosses the boundary as an opaque heap handle owned by the
//! caller and released with the matching `*_free`. Every fallible function
//! returns an [`FskStatus`]; on failure `fsk_last_error()` describes it until
//! the next call on the same thread. Strings handed out are NUL-terminated
//! and released with `fsk_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fsk_core::fsk::{alpha, hom, is_morphism, lambda, rho};
use fsk_core::operads::{counit_at, h_colax};
use fsk_core::tamari::enumerate_tamari;
use fsk_core::{Error, FskMorphism, FskObject, LElement, Lbf, MembershipMode, MonotoneMap};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FskStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// Well-formed input violating a mathematical condition: a bad map,
    /// lbf or object, a map that is not a morphism, mismatched sizes.
    Invalid = 4,
    Precondition = 5,
    BufferTooSmall = 6,
    Internal = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FskMode {
    Direct = 0,
    ViaFactor = 1,
    ViaSearch = 2,
}

pub struct FskObjectHandle(FskObject);
pub struct FskMorphismHandle(FskMorphism);
pub struct FskLbfHandle(Lbf);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> FskStatus {
    match e {
        Error::Parse { .. } => FskStatus::Parse,
        Error::Precondition(_) | Error::NoAdjoint(_) => FskStatus::Precondition,
        Error::Internal(_) => FskStatus::Internal,
        _ => FskStatus::Invalid,
    }
}

struct Fail(FskStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> FskStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FskStatus::Ok,
        Ok(Err(Fail(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside fsk".into());
            FskStatus::Panic
        }
    }
}

unsafe fn arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(FskStatus::NullArgument, format!("{name} is null")))
}

unsafe fn out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| Fail(FskStatus::NullArgument, format!("{name} is null")))
}

unsafe fn text<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(FskStatus::NullArgument, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(FskStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn images<'a>(p: *const usize, len: usize) -> Result<&'a [usize], Fail> {
    if p.is_null() {
        return Err(Fail(FskStatus::NullArgument, "images is null".into()));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// The message for the last failure on this thread, or null. Owned by the
/// library; valid until the next call.
#[no_mangle]
pub extern "C" fn fsk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn fsk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- Tamari elements ----------------------------------------------------

/// Parses `0,1,0,3`.
#[no_mangle]
pub unsafe extern "C" fn fsk_lbf_parse(
    values: *const c_char,
    result: *mut *mut FskLbfHandle,
) -> FskStatus {
    guard(|| {
        let lbf = Lbf::parse(text(values, "values")?)?;
        *out(result, "result")? = boxed(FskLbfHandle(lbf));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_lbf_free(lbf: *mut FskLbfHandle) {
    if !lbf.is_null() {
        drop(Box::from_raw(lbf));
    }
}

#[no_mangle]
pub unsafe extern "C" fn fsk_lbf_to_string(
    lbf: *const FskLbfHandle,
    result: *mut *mut c_char,
) -> FskStatus {
    guard(|| {
        let s = arg(lbf, "lbf")?.0.to_string();
        *out(result, "result")? = c_string(s);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_lbf_join(
    a: *const FskLbfHandle,
    b: *const FskLbfHandle,
    result: *mut *mut FskLbfHandle,
) -> FskStatus {
    guard(|| {
        let j = arg(a, "a")?.0.join(&arg(b, "b")?.0)?;
        *out(result, "result")? = boxed(FskLbfHandle(j));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_lbf_meet(
    a: *const FskLbfHandle,
    b: *const FskLbfHandle,
    result: *mut *mut FskLbfHandle,
) -> FskStatus {
    guard(|| {
        let j = arg(a, "a")?.0.meet(&arg(b, "b")?.0)?;
        *out(result, "result")? = boxed(FskLbfHandle(j));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_lbf_leq(
    a: *const FskLbfHandle,
    b: *const FskLbfHandle,
    result: *mut bool,
) -> FskStatus {
    guard(|| {
        *out(result, "result")? = arg(a, "a")?.0.leq(&arg(b, "b")?.0)?;
        Ok(())
    })
}

/// `|Tam_m|`.
#[no_mangle]
pub unsafe extern "C" fn fsk_tamari_count(m: usize, result: *mut usize) -> FskStatus {
    guard(|| {
        if m == 0 {
            return Err(Fail(FskStatus::Invalid, "m must be positive".into()));
        }
        *out(result, "result")? = enumerate_tamari(m).len();
        Ok(())
    })
}

// ---- Objects ------------------------------------------------------------

/// Parses a word such as `((I X) X)`.
#[no_mangle]
pub unsafe extern "C" fn fsk_object_parse(
    word: *const c_char,
    result: *mut *mut FskObjectHandle,
) -> FskStatus {
    guard(|| {
        let o = FskObject::parse(text(word, "word")?)?;
        *out(result, "result")? = boxed(FskObjectHandle(o));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_object_free(o: *mut FskObjectHandle) {
    if !o.is_null() {
        drop(Box::from_raw(o));
    }
}

#[no_mangle]
pub unsafe extern "C" fn fsk_object_to_string(
    o: *const FskObjectHandle,
    result: *mut *mut c_char,
) -> FskStatus {
    guard(|| {
        let s = arg(o, "object")?.0.to_string();
        *out(result, "result")? = c_string(s);
        Ok(())
    })
}

/// `{"m":..,"u":[..],"s":[..]}`.
#[no_mangle]
pub unsafe extern "C" fn fsk_object_to_json(
    o: *const FskObjectHandle,
    result: *mut *mut c_char,
) -> FskStatus {
    guard(|| {
        let s = serde_json::to_string(&arg(o, "object")?.0).expect("serializable");
        *out(result, "result")? = c_string(s);
        Ok(())
    })
}

/// Number of leaves.
#[no_mangle]
pub unsafe extern "C" fn fsk_object_size(
    o: *const FskObjectHandle,
    result: *mut usize,
) -> FskStatus {
    guard(|| {
        *out(result, "result")? = arg(o, "object")?.0.m();
        Ok(())
    })
}

/// Number of `X` leaves.
#[no_mangle]
pub unsafe extern "C" fn fsk_object_grade(
    o: *const FskObjectHandle,
    result: *mut usize,
) -> FskStatus {
    guard(|| {
        *out(result, "result")? = arg(o, "object")?.0.grade();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_object_tensor(
    a: *const FskObjectHandle,
    b: *const FskObjectHandle,
    result: *mut *mut FskObjectHandle,
) -> FskStatus {
    guard(|| {
        let t = arg(a, "a")?.0.tensor(&arg(b, "b")?.0);
        *out(result, "result")? = boxed(FskObjectHandle(t));
        Ok(())
    })
}

// ---- Morphisms ----------------------------------------------------------

unsafe fn map_of(
    src: &FskObject,
    dst: &FskObject,
    p: *const usize,
    len: usize,
) -> Result<MonotoneMap, Fail> {
    if len != src.m() {
        return Err(Fail(
            FskStatus::Invalid,
            format!("{len} images for a source with {} leaves", src.m()),
        ));
    }
    Ok(MonotoneMap::new(images(p, len)?.to_vec(), dst.m())?)
}

/// Whether `images[0..len]` underlies a morphism `src -> dst`.
#[no_mangle]
pub unsafe extern "C" fn fsk_is_morphism(
    src: *const FskObjectHandle,
    dst: *const FskObjectHandle,
    images: *const usize,
    len: usize,
    mode: FskMode,
    result: *mut bool,
) -> FskStatus {
    guard(|| {
        let (s, d) = (&arg(src, "src")?.0, &arg(dst, "dst")?.0);
        let mode = match mode {
            FskMode::Direct => MembershipMode::Direct,
            FskMode::ViaFactor => MembershipMode::ViaFactor,
            FskMode::ViaSearch => MembershipMode::ViaSearch,
        };
        let verdict = match map_of(s, d, images, len) {
            Ok(map) => is_morphism(s, d, &map, mode),
            Err(Fail(FskStatus::Invalid, _)) => false,
            Err(e) => return Err(e),
        };
        *out(result, "result")? = verdict;
        Ok(())
    })
}

/// Fails with `FSK_STATUS_INVALID` if the map is not a morphism.
#[no_mangle]
pub unsafe extern "C" fn fsk_morphism_new(
    src: *const FskObjectHandle,
    dst: *const FskObjectHandle,
    images: *const usize,
    len: usize,
    result: *mut *mut FskMorphismHandle,
) -> FskStatus {
    guard(|| {
        let (s, d) = (&arg(src, "src")?.0, &arg(dst, "dst")?.0);
        let map = map_of(s, d, images, len)?;
        let f = FskMorphism::new(s.clone(), d.clone(), map)?;
        *out(result, "result")? = boxed(FskMorphismHandle(f));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_morphism_free(f: *mut FskMorphismHandle) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// `SRC -> DST ; IMAGES`.
#[no_mangle]
pub unsafe extern "C" fn fsk_morphism_to_string(
    f: *const FskMorphismHandle,
    result: *mut *mut c_char,
) -> FskStatus {
    guard(|| {
        let s = arg(f, "morphism")?.0.to_string();
        *out(result, "result")? = c_string(s);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_morphism_to_json(
    f: *const FskMorphismHandle,
    result: *mut *mut c_char,
) -> FskStatus {
    guard(|| {
        let s = serde_json::to_string(&arg(f, "morphism")?.0).expect("serializable");
        *out(result, "result")? = c_string(s);
        Ok(())
    })
}

/// Copies the underlying map into `buffer`. `len` receives the number of
/// images even when `capacity` is too small.
#[no_mangle]
pub unsafe extern "C" fn fsk_morphism_images(
    f: *const FskMorphismHandle,
    buffer: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> FskStatus {
    guard(|| {
        let values = arg(f, "morphism")?.0.map().images();
        *out(len, "len")? = values.len();
        if capacity < values.len() {
            return Err(Fail(
                FskStatus::BufferTooSmall,
                format!("need room for {} images", values.len()),
            ));
        }
        if buffer.is_null() {
            return Err(Fail(FskStatus::NullArgument, "buffer is null".into()));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buffer, values.len());
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_morphism_equal(
    f: *const FskMorphismHandle,
    g: *const FskMorphismHandle,
    result: *mut bool,
) -> FskStatus {
    guard(|| {
        *out(result, "result")? = arg(f, "f")?.0 == arg(g, "g")?.0;
        Ok(())
    })
}

/// `g ∘ f`.
#[no_mangle]
pub unsafe extern "C" fn fsk_morphism_compose(
    g: *const FskMorphismHandle,
    f: *const FskMorphismHandle,
    result: *mut *mut FskMorphismHandle,
) -> FskStatus {
    guard(|| {
        let h = arg(g, "g")?.0.after(&arg(f, "f")?.0)?;
        *out(result, "result")? = boxed(FskMorphismHandle(h));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_morphism_tensor(
    f: *const FskMorphismHandle,
    g: *const FskMorphismHandle,
    result: *mut *mut FskMorphismHandle,
) -> FskStatus {
    guard(|| {
        let h = arg(f, "f")?.0.tensor(&arg(g, "g")?.0);
        *out(result, "result")? = boxed(FskMorphismHandle(h));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_hom_count(
    src: *const FskObjectHandle,
    dst: *const FskObjectHandle,
    result: *mut usize,
) -> FskStatus {
    guard(|| {
        *out(result, "result")? = hom(&arg(src, "src")?.0, &arg(dst, "dst")?.0).len();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_alpha(
    a: *const FskObjectHandle,
    b: *const FskObjectHandle,
    c: *const FskObjectHandle,
    result: *mut *mut FskMorphismHandle,
) -> FskStatus {
    guard(|| {
        let f = alpha(&arg(a, "a")?.0, &arg(b, "b")?.0, &arg(c, "c")?.0);
        *out(result, "result")? = boxed(FskMorphismHandle(f));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_lambda(
    a: *const FskObjectHandle,
    result: *mut *mut FskMorphismHandle,
) -> FskStatus {
    guard(|| {
        let f = lambda(&arg(a, "a")?.0);
        *out(result, "result")? = boxed(FskMorphismHandle(f));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fsk_rho(
    a: *const FskObjectHandle,
    result: *mut *mut FskMorphismHandle,
) -> FskStatus {
    guard(|| {
        let f = rho(&arg(a, "a")?.0);
        *out(result, "result")? = boxed(FskMorphismHandle(f));
        Ok(())
    })
}

// ---- Operads ------------------------------------------------------------

/// The counit `H Q a -> a`.
#[no_mangle]
pub unsafe extern "C" fn fsk_counit(
    a: *const FskObjectHandle,
    result: *mut *mut FskMorphismHandle,
) -> FskStatus {
    guard(|| {
        let f = counit_at(&arg(a, "a")?.0)?;
        *out(result, "result")? = boxed(FskMorphismHandle(f));
        Ok(())
    })
}

/// `H(x ∘_i y) -> H(x) ∘_i H(y)`, elements written `t3` or `l0`, `i`
/// 1-based.
#[no_mangle]
pub unsafe extern "C" fn fsk_h_colax(
    x: *const c_char,
    i: usize,
    y: *const c_char,
    result: *mut *mut FskMorphismHandle,
) -> FskStatus {
    guard(|| {
        let x: LElement = text(x, "x")?.parse()?;
        let y: LElement = text(y, "y")?.parse()?;
        let f = h_colax(&x, i, &y)?;
        *out(result, "result")? = boxed(FskMorphismHandle(f));
        Ok(())
    })
}
