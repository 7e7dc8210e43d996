use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use ke_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ke_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { ke_string_free(p) };
    s
}

fn collection(json: &str) -> *mut KeCollection {
    let mut c = ptr::null_mut();
    let st = unsafe { ke_collection_from_json(cstr(json).as_ptr(), &mut c) };
    assert_eq!(st, KeStatus::Ok, "{}", last_error());
    c
}

fn graph(json: &str) -> *mut KeGraph {
    let mut g = ptr::null_mut();
    let st = unsafe { ke_graph_from_json(cstr(json).as_ptr(), &mut g) };
    assert_eq!(st, KeStatus::Ok, "{}", last_error());
    g
}

#[test]
fn three_singletons() {
    let c = collection(r#"{"sets": [[1],[2],[3]]}"#);
    let (mut a, mut e, mut m, mut ke) = (0usize, 0usize, 0i64, true);
    unsafe {
        assert_eq!(ke_collection_alpha(c, &mut a), KeStatus::Ok);
        assert_eq!(ke_collection_e_value(c, &mut e), KeStatus::Ok);
        assert_eq!(ke_collection_compute_m(c, &mut m), KeStatus::Ok);
        assert_eq!(ke_collection_is_ke(c, &mut ke), KeStatus::Ok);
        ke_collection_free(c);
    }
    assert_eq!((a, e, m, ke), (1, 3, 1, false));
    assert_eq!(last_error(), "");
}

#[test]
fn from_sets_and_hke_methods() {
    let elements = [1u32, 2, 2, 3, 3, 4];
    let lengths = [2usize, 2, 2];
    let mut c = ptr::null_mut();
    unsafe {
        assert_eq!(
            ke_collection_from_sets(elements.as_ptr(), lengths.as_ptr(), 3, &mut c),
            KeStatus::Ok
        );
        let mut len = 0;
        assert_eq!(ke_collection_len(c, &mut len), KeStatus::Ok);
        assert_eq!(len, 3);
        for method in [
            KeHkeMethod::Brute,
            KeHkeMethod::Duality,
            KeHkeMethod::Existential,
        ] {
            let mut hke = false;
            assert_eq!(ke_collection_is_hke(c, method, &mut hke), KeStatus::Ok);
            assert!(hke);
        }
        let mut r = false;
        assert_eq!(ke_collection_is_realizable(c, &mut r), KeStatus::Ok);
        assert!(r);
        ke_collection_free(c);
    }
}

#[test]
fn error_codes() {
    let mut c = ptr::null_mut();
    unsafe {
        assert_eq!(
            ke_collection_from_json(cstr(r#"{"sets": []}"#).as_ptr(), &mut c),
            KeStatus::InvalidInput
        );
        assert!(last_error().starts_with("ParseError"));
        assert!(c.is_null());
        assert_eq!(
            ke_collection_from_json(ptr::null(), &mut c),
            KeStatus::NullPointer
        );

        let mixed = collection(r#"{"sets": [[1],[2,3]]}"#);
        let mut a = 0;
        assert_eq!(ke_collection_alpha(mixed, &mut a), KeStatus::NotRelevant);
        ke_collection_free(mixed);

        let uneven = collection(r#"{"sets": [[1,2],[2,3],[3,4],[5,6]]}"#);
        let mut m = 0;
        assert_eq!(
            ke_collection_compute_m(uneven, &mut m),
            KeStatus::HypothesisFails
        );
        assert_eq!(
            ke_collection_is_ke(uneven, ptr::null_mut()),
            KeStatus::NullPointer
        );
        ke_collection_free(uneven);

        let mut g = ptr::null_mut();
        assert_eq!(
            ke_graph_new(2, [1u32, 1].as_ptr(), 1, &mut g),
            KeStatus::InvalidInput
        );
        assert!(last_error().contains("SelfLoop"));
        assert_eq!(ke_graph_new(30, ptr::null(), 0, &mut g), KeStatus::Ok);
        let mut a = 0;
        if std::env::var_os("KE_MAX_N").is_none() {
            assert_eq!(ke_graph_alpha(g, &mut a), KeStatus::TooLarge);
        }
        ke_graph_free(g);

        let mut passed = false;
        assert_eq!(
            ke_stress(
                cstr("BOGUS").as_ptr(),
                ptr::null(),
                &mut passed,
                ptr::null_mut()
            ),
            KeStatus::UnknownTheorem
        );
        // freeing null is a no-op
        ke_collection_free(ptr::null_mut());
        ke_graph_free(ptr::null_mut());
        ke_string_free(ptr::null_mut());
    }
}

#[test]
fn seven_vertex_graph() {
    let g = graph(
        r#"{"n": 7, "edges": [[1,4],[1,5],[1,6],[1,7],[2,4],[3,6],[4,6],[4,7],[5,7],[6,7]]}"#,
    );
    let (mut a, mut m, mut ke) = (0, 0, true);
    let mut cert = ptr::null_mut();
    let mut omega = ptr::null_mut();
    unsafe {
        assert_eq!(ke_graph_alpha(g, &mut a), KeStatus::Ok);
        assert_eq!(ke_graph_mu(g, &mut m), KeStatus::Ok);
        assert_eq!(ke_graph_is_ke(g, &mut ke), KeStatus::Ok);
        assert_eq!(ke_graph_certificate_json(g, &mut cert), KeStatus::Ok);
        assert_eq!(ke_graph_omega_json(g, &mut omega), KeStatus::Ok);
        ke_graph_free(g);
    }
    assert_eq!((a, m, ke), (3, 3, false));
    assert_eq!(take_string(cert), "null");
    let omega: serde_json::Value = serde_json::from_str(&take_string(omega)).unwrap();
    assert!(omega["sets"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([1, 2, 3])));
}

#[test]
fn edge_list_and_certificate() {
    let mut g = ptr::null_mut();
    let mut cert = ptr::null_mut();
    unsafe {
        assert_eq!(
            ke_graph_from_edge_list(cstr("n 2\n1 2\n").as_ptr(), &mut g),
            KeStatus::Ok
        );
        assert_eq!(ke_graph_certificate_json(g, &mut cert), KeStatus::Ok);
        ke_graph_free(g);
    }
    let cert: serde_json::Value = serde_json::from_str(&take_string(cert)).unwrap();
    assert_eq!(cert["collection"]["sets"], serde_json::json!([[1]]));
}

#[test]
fn stress_through_the_boundary() {
    let config = cstr(r#"{"universe_max": 4, "graph_n_max": 4}"#);
    for id in ["EVEN", "DAM26"] {
        let mut passed = false;
        let mut report = ptr::null_mut();
        let st = unsafe { ke_stress(cstr(id).as_ptr(), config.as_ptr(), &mut passed, &mut report) };
        assert_eq!(st, KeStatus::Ok, "{}", last_error());
        assert!(passed);
        let text = take_string(report);
        let summary: serde_json::Value =
            serde_json::from_str(text.lines().last().unwrap()).unwrap();
        assert_eq!(summary["theorem_id"], id);
    }
    let mut passed = false;
    let bad = cstr(r#"{"bogus_field": 1}"#);
    let st = unsafe {
        ke_stress(
            cstr("EVEN").as_ptr(),
            bad.as_ptr(),
            &mut passed,
            ptr::null_mut(),
        )
    };
    assert_eq!(st, KeStatus::InvalidInput);
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/ke_ffi.h")
}

#[test]
fn header_declares_every_export() {
    let text = std::fs::read_to_string(header()).unwrap();
    for name in [
        "ke_last_error_message",
        "ke_string_free",
        "ke_collection_from_json",
        "ke_collection_from_sets",
        "ke_collection_free",
        "ke_collection_len",
        "ke_collection_alpha",
        "ke_collection_e_value",
        "ke_collection_is_ke",
        "ke_collection_is_hke",
        "ke_collection_compute_m",
        "ke_collection_is_realizable",
        "ke_graph_new",
        "ke_graph_from_json",
        "ke_graph_from_edge_list",
        "ke_graph_free",
        "ke_graph_alpha",
        "ke_graph_mu",
        "ke_graph_is_ke",
        "ke_graph_omega_json",
        "ke_graph_certificate_json",
        "ke_stress",
        "KE_STATUS_TOO_LARGE",
        "KE_HKE_METHOD_DUALITY",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
}

/// Compiles and runs a small C program against the header and the static
/// library, when a C compiler is available.
#[test]
fn c_program_links_and_runs() {
    let Some(cc) = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libke_ffi.a");
    assert!(
        lib.exists(),
        "static library not found at {}",
        lib.display()
    );

    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include <string.h>
#include "ke_ffi.h"

int main(void) {
    KeCollection *c = NULL;
    if (ke_collection_from_json("{\"sets\": [[1],[2],[3]]}", &c) != KE_STATUS_OK) return 10;
    int64_t m = 0;
    if (ke_collection_compute_m(c, &m) != KE_STATUS_OK || m != 1) return 11;
    ke_collection_free(c);

    uint32_t edges[] = {1, 2};
    KeGraph *g = NULL;
    if (ke_graph_new(2, edges, 1, &g) != KE_STATUS_OK) return 12;
    bool ke = false;
    if (ke_graph_is_ke(g, &ke) != KE_STATUS_OK || !ke) return 13;
    char *cert = NULL;
    if (ke_graph_certificate_json(g, &cert) != KE_STATUS_OK) return 14;
    printf("%s\n", cert);
    ke_string_free(cert);
    ke_graph_free(g);

    if (ke_collection_from_json("{", &c) != KE_STATUS_INVALID_INPUT) return 15;
    if (strlen(ke_last_error_message()) == 0) return 16;
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.path().join("smoke");
    let status = Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let cert = String::from_utf8(out.stdout).unwrap();
    assert!(cert.contains("\"sets\":[[1]]"), "{cert}");
}
