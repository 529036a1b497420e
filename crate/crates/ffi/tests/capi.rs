use std::ffi::{c_char, CStr, CString};
use std::ptr;

use subdeg_ffi::*;

const SYM4: &str = "degree 4\ngen (1 2)\ngen (1 2 3 4)\n";

fn last_error() -> String {
    let mut buf = vec![0 as c_char; 256];
    let n = unsafe { sd_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert!(n > 0);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

fn parse(text: &str) -> *mut SdPermGroup {
    let spec = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sd_perm_group_parse(spec.as_ptr(), &mut g) }, SdStatus::SdOk);
    g
}

#[test]
fn perm_group_round_trip() {
    let g = parse(SYM4);
    let (mut degree, mut order, mut len) = (0usize, 0u64, 0usize);
    unsafe {
        assert_eq!(sd_perm_group_degree(g, &mut degree), SdStatus::SdOk);
        assert_eq!(sd_perm_group_order(g, &mut order), SdStatus::SdOk);
        assert_eq!(sd_perm_group_orbit_length(g, 3, &mut len), SdStatus::SdOk);
    }
    assert_eq!((degree, order, len), (4, 24, 4));
    let mut member = false;
    let images = [2u32, 1, 3, 4];
    assert_eq!(unsafe { sd_perm_group_contains(g, images.as_ptr(), 4, &mut member) }, SdStatus::SdOk);
    assert!(member);
    unsafe { sd_perm_group_free(g) };
}

#[test]
fn subdegrees_and_buffer_contract() {
    let g = parse("degree 5\ngen (1 2 3 4 5)\ngen (2 5)(3 4)\n");
    let mut buf = [0u64; 8];
    let mut len = 0usize;
    assert_eq!(unsafe { sd_perm_group_subdegrees(g, 1, buf.as_mut_ptr(), 8, &mut len) }, SdStatus::SdOk);
    assert_eq!(&buf[..len], &[1, 2, 2]);
    assert_eq!(unsafe { sd_perm_group_subdegrees(g, 1, buf.as_mut_ptr(), 1, &mut len) }, SdStatus::SdErrBufferTooSmall);
    assert_eq!(len, 3);
    assert_eq!(unsafe { sd_perm_group_orbit_length(g, 9, &mut len) }, SdStatus::SdErrInvalidArgument);
    assert!(last_error().contains("out of range"));
    unsafe { sd_perm_group_free(g) };
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("degree 3\ngen (1 2\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sd_perm_group_parse(bad.as_ptr(), &mut g) }, SdStatus::SdErrParse);
    assert!(g.is_null());
    assert!(last_error().contains("line 2"));
    let tampered = CString::new("degree 3\norder 5\ngen (1 2)\ngen (1 2 3)\n").unwrap();
    assert_eq!(unsafe { sd_perm_group_parse(tampered.as_ptr(), &mut g) }, SdStatus::SdErrParse);
    assert_eq!(unsafe { sd_perm_group_parse(ptr::null(), &mut g) }, SdStatus::SdErrNull);
    let mut order = 0u64;
    assert_eq!(unsafe { sd_perm_group_order(ptr::null(), &mut order) }, SdStatus::SdErrNull);
    unsafe { sd_perm_group_free(ptr::null_mut()) };
}

#[test]
fn matrix_group_orbits() {
    let spec = CString::new("field 3\ndim 2\ngen [[1,1],[0,1]]\ngen [[0,1],[2,0]]\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sd_mat_group_parse(spec.as_ptr(), &mut g) }, SdStatus::SdOk);
    let mut order = 0u64;
    assert_eq!(unsafe { sd_mat_group_order(g, &mut order) }, SdStatus::SdOk);
    assert_eq!(order, 24);
    let v = [1u32, 0];
    let mut len = 0usize;
    assert_eq!(unsafe { sd_mat_group_vec_orbit_length(g, v.as_ptr(), 2, &mut len) }, SdStatus::SdOk);
    assert_eq!(len, 8);
    let w = [7u32, 0];
    assert_eq!(unsafe { sd_mat_group_vec_orbit_length(g, w.as_ptr(), 2, &mut len) }, SdStatus::SdErrInvalidArgument);
    unsafe { sd_mat_group_free(g) };
}

#[test]
fn verify_through_the_abi() {
    let id = CString::new("ex3.1-p2").unwrap();
    let mut report: *mut c_char = ptr::null_mut();
    let mut exit = -1;
    assert_eq!(unsafe { sd_verify_case(id.as_ptr(), 1, ptr::null(), &mut report, &mut exit) }, SdStatus::SdOk);
    assert_eq!(exit, 0);
    let text = unsafe { CStr::from_ptr(report) }.to_str().unwrap().to_owned();
    unsafe { sd_string_free(report) };
    assert!(text.lines().next().unwrap().contains("\"record\":\"header\""));
    assert!(text.lines().last().unwrap().contains("\"record\":\"summary\""));
    let unknown = CString::new("no-such-case").unwrap();
    assert_eq!(
        unsafe { sd_verify_case(unknown.as_ptr(), 1, ptr::null(), &mut report, &mut exit) },
        SdStatus::SdErrInvalidArgument
    );
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/subdeg.h")).unwrap();
    for name in [
        "sd_last_error_message",
        "sd_perm_group_parse",
        "sd_perm_group_free",
        "sd_perm_group_degree",
        "sd_perm_group_order",
        "sd_perm_group_orbit_length",
        "sd_perm_group_contains",
        "sd_perm_group_subdegrees",
        "sd_mat_group_parse",
        "sd_mat_group_free",
        "sd_mat_group_order",
        "sd_mat_group_vec_orbit_length",
        "sd_verify_case",
        "sd_string_free",
        "typedef struct SdPermGroup SdPermGroup",
        "SD_ERR_BUFFER_TOO_SMALL",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
