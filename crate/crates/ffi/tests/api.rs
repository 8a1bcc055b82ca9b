use std::ffi::{c_char, CStr, CString};
use std::ptr;

use steenrod_harmonics_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = steenrod_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn hilbert(kernel: *const SteenrodKernel) -> Vec<usize> {
    unsafe {
        let mut buf = vec![0usize; steenrod_kernel_len(kernel)];
        let mut written = 0;
        assert_eq!(steenrod_kernel_hilbert(kernel, buf.as_mut_ptr(), buf.len(), &mut written), SteenrodStatus::Ok);
        assert_eq!(written, buf.len());
        buf
    }
}

fn solve(kind: &str, n: usize, q: Option<&str>, cap: usize) -> Vec<usize> {
    let kind = c(kind);
    let q = q.map(c);
    unsafe {
        let mut fam = ptr::null_mut();
        let qp = q.as_ref().map_or(ptr::null(), |s| s.as_ptr());
        assert_eq!(steenrod_family_new(kind.as_ptr(), n, qp, &mut fam), SteenrodStatus::Ok);
        let mut ker = ptr::null_mut();
        assert_eq!(steenrod_kernel_solve(fam, cap, true, &mut ker), SteenrodStatus::Ok);
        let h = hilbert(ker);
        steenrod_kernel_free(ker);
        steenrod_family_free(fam);
        h
    }
}

#[test]
fn hilbert_series_of_standard_families() {
    assert_eq!(solve("classical", 3, None, 4), vec![1, 2, 2, 1, 0]);
    assert_eq!(solve("tilde", 2, None, 4), vec![1, 2, 1, 1, 0]);
    assert_eq!(solve("q-steenrod", 3, None, 4), vec![1, 2, 2, 1, 0]);
    assert_eq!(solve("q-steenrod", 3, Some("5/3"), 4), vec![1, 2, 2, 1, 0]);
}

#[test]
fn general_family_and_basis_strings() {
    let (a, b) = (c("1,2"), c("1,1"));
    unsafe {
        let mut fam = ptr::null_mut();
        assert_eq!(steenrod_family_general(a.as_ptr(), b.as_ptr(), &mut fam), SteenrodStatus::Ok);
        assert_eq!(steenrod_family_n_vars(fam), 2);
        let mut ker = ptr::null_mut();
        assert_eq!(steenrod_kernel_solve(fam, 2, false, &mut ker), SteenrodStatus::Ok);
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(steenrod_kernel_basis_element(ker, 0, 0, &mut s), SteenrodStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "1");
        steenrod_string_free(s);
        steenrod_kernel_free(ker);
        steenrod_family_free(fam);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut fam = ptr::null_mut();
        let kind = c("tilde");
        assert_eq!(steenrod_family_new(ptr::null(), 3, ptr::null(), &mut fam), SteenrodStatus::NullPointer);
        assert_eq!(steenrod_family_new(kind.as_ptr(), 0, ptr::null(), &mut fam), SteenrodStatus::InvalidArgument);
        let bad = c("q-steenrod");
        let q = c("x/y");
        assert_eq!(steenrod_family_new(bad.as_ptr(), 3, q.as_ptr(), &mut fam), SteenrodStatus::Parse);
        assert!(!last_error().is_empty());
        let (a, b) = (c("1,2"), c("1"));
        assert_eq!(steenrod_family_general(a.as_ptr(), b.as_ptr(), &mut fam), SteenrodStatus::InvalidArgument);

        assert_eq!(steenrod_family_new(kind.as_ptr(), 2, ptr::null(), &mut fam), SteenrodStatus::Ok);
        let mut ker = ptr::null_mut();
        assert_eq!(steenrod_kernel_solve(fam, 1000, true, &mut ker), SteenrodStatus::InvalidArgument);
        assert!(last_error().contains("1000"));
        assert_eq!(steenrod_kernel_solve(ptr::null(), 3, true, &mut ker), SteenrodStatus::NullPointer);
        steenrod_family_free(fam);

        let bytes = [0xffu8, 0];
        let mut regular = false;
        assert_eq!(steenrod_is_regular(bytes.as_ptr() as *const c_char, &mut regular), SteenrodStatus::InvalidUtf8);

        // Null handles are accepted by the release and query functions.
        steenrod_family_free(ptr::null_mut());
        steenrod_kernel_free(ptr::null_mut());
        steenrod_report_free(ptr::null_mut());
        steenrod_string_free(ptr::null_mut());
        assert_eq!(steenrod_kernel_len(ptr::null()), 0);
        assert!(!steenrod_report_passed(ptr::null()));
    }
}

#[test]
fn regularity() {
    let mut regular = false;
    for (a, expected) in [("1,1,1", true), ("1,-1", false), ("1/2,1/3,-5/6", false), ("2,3,-7", true)] {
        let a = c(a);
        assert_eq!(unsafe { steenrod_is_regular(a.as_ptr(), &mut regular) }, SteenrodStatus::Ok);
        assert_eq!(regular, expected);
    }
}

#[test]
fn experiments_render_like_the_command_line() {
    let cmd = c("hilbert");
    let fam = c("tilde");
    let format = c("text");
    unsafe {
        let mut rep = ptr::null_mut();
        let status = steenrod_experiment_run(
            cmd.as_ptr(), 3, fam.as_ptr(), ptr::null(), ptr::null(), ptr::null(), 1, -1, 0, &mut rep,
        );
        assert_eq!(status, SteenrodStatus::Ok);
        assert!(steenrod_report_passed(rep));
        let mut s = ptr::null_mut();
        assert_eq!(steenrod_report_render(rep, format.as_ptr(), &mut s), SteenrodStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_string();
        assert!(text.contains("H(t) = 1 + 3t + 3t^2 + 4t^3 + 2t^4 + 2t^5 + t^6"), "{text}");
        steenrod_string_free(s);
        steenrod_report_free(rep);

        let unknown = c("nope");
        let status = steenrod_experiment_run(
            unknown.as_ptr(), 3, ptr::null(), ptr::null(), ptr::null(), ptr::null(), 1, -1, 0, &mut rep,
        );
        assert_eq!(status, SteenrodStatus::Parse);
    }
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(steenrod_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
