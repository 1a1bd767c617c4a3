use std::ffi::CStr;
use std::ptr;

use casimir_ffi::*;

fn last_error() -> String {
    let p = casimir_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn geometry_lifecycle_and_validation() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(casimir_geometry_new(4, 1.0, 1.01, &mut g), CASIMIR_OK);
        assert!(!g.is_null());
        let mut eta = 0.0;
        assert_eq!(casimir_geometry_eta(g, &mut eta), CASIMIR_OK);
        assert!((eta - 0.01 / 1.01f64.sqrt()).abs() < 1e-15);
        casimir_geometry_free(g);

        let mut bad = ptr::null_mut();
        assert_eq!(
            casimir_geometry_new(4, 2.0, 1.0, &mut bad),
            CASIMIR_ERR_INVALID_INPUT
        );
        assert!(bad.is_null());
        assert!(last_error().contains("require a < b"));

        assert_eq!(
            casimir_geometry_new(4, 1.0, 2.0, ptr::null_mut()),
            CASIMIR_ERR_NULL_POINTER
        );
        casimir_geometry_free(ptr::null_mut());
    }
}

#[test]
fn energy_routes_agree() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(casimir_geometry_from_eta(6, 0.05, &mut g), CASIMIR_OK);

        let mut closed = ptr::null_mut();
        assert_eq!(casimir_energy_closed_form(g, &mut closed), CASIMIR_OK);
        let mut numeric = ptr::null_mut();
        assert_eq!(
            casimir_energy_numeric(g, 1e-13, 1e-15, 40.0, 0, &mut numeric),
            CASIMIR_OK
        );

        let (mut ec, mut en) = (0.0, 0.0);
        assert_eq!(casimir_result_total(closed, &mut ec), CASIMIR_OK);
        assert_eq!(casimir_result_total(numeric, &mut en), CASIMIR_OK);
        assert!(ec < 0.0);
        assert!(((en - ec) / ec).abs() < 1e-9);

        let mut method = -1;
        assert_eq!(casimir_result_method(numeric, &mut method), CASIMIR_OK);
        assert_eq!(method, CASIMIR_METHOD_NUMERIC);
        let mut k = 0;
        assert_eq!(casimir_result_k_max(numeric, &mut k), CASIMIR_OK);
        assert!(k > 100);
        assert_eq!(casimir_result_k_max(closed, &mut k), CASIMIR_OK);
        assert_eq!(k, 0);
        let mut tail = -1.0;
        assert_eq!(
            casimir_result_truncation_estimate(numeric, &mut tail),
            CASIMIR_OK
        );
        assert!(tail >= 0.0 && tail <= 1e-14 * en.abs());

        let mut per_area = 0.0;
        assert_eq!(casimir_result_per_area(closed, &mut per_area), CASIMIR_OK);
        assert!(per_area < 0.0);

        casimir_result_free(closed);
        casimir_result_free(numeric);
        casimir_geometry_free(g);
    }
}

#[test]
fn energy_errors_map_to_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(casimir_geometry_new(12, 1.0, 1.01, &mut g), CASIMIR_OK);
        let mut r = ptr::null_mut();
        assert_eq!(
            casimir_energy_closed_form(g, &mut r),
            CASIMIR_ERR_UNSUPPORTED_DIMENSION
        );
        assert!(last_error().contains("closed form supports D in [4,11]"));
        assert!(r.is_null());
        casimir_geometry_free(g);

        assert_eq!(casimir_geometry_new(4, 1.0, 4.0, &mut g), CASIMIR_OK);
        assert_eq!(
            casimir_energy_closed_form(g, &mut r),
            CASIMIR_ERR_OUT_OF_REGIME
        );
        assert_eq!(
            casimir_energy_numeric(g, 1e-13, 1e-15, 10.0, 0, &mut r),
            CASIMIR_ERR_INVALID_INPUT
        );
        assert_eq!(
            casimir_energy_numeric(g, 1e-13, 1e-15, 40.0, 3, &mut r),
            CASIMIR_ERR_CONVERGENCE
        );
        casimir_geometry_free(g);

        assert_eq!(
            casimir_energy_plate_limit(ptr::null(), &mut r),
            CASIMIR_ERR_NULL_POINTER
        );
        let mut x = 0.0;
        assert_eq!(
            casimir_result_total(ptr::null(), &mut x),
            CASIMIR_ERR_NULL_POINTER
        );
    }
}

#[test]
fn roots_into_caller_buffer() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(casimir_geometry_new(3, 1.0, 2.0, &mut g), CASIMIR_OK);
        let mut buf = [0.0f64; 3];
        assert_eq!(
            casimir_find_roots(g, 0, 3, buf.as_mut_ptr(), buf.len()),
            CASIMIR_OK
        );
        for (i, r) in buf.iter().enumerate() {
            assert!((r - (i as f64 + 1.0) * std::f64::consts::PI).abs() < 1e-10);
        }
        assert_eq!(
            casimir_find_roots(g, 0, 5, buf.as_mut_ptr(), buf.len()),
            CASIMIR_ERR_BUFFER_TOO_SMALL
        );
        assert_eq!(
            casimir_find_roots(g, 0, 3, ptr::null_mut(), 3),
            CASIMIR_ERR_NULL_POINTER
        );
        casimir_geometry_free(g);
    }
}

#[test]
fn scalar_functions() {
    unsafe {
        let mut n = 0u64;
        assert_eq!(casimir_degeneracy(4, 3, &mut n), CASIMIR_OK);
        assert_eq!(n, 16);
        assert_eq!(casimir_degeneracy(2, 3, &mut n), CASIMIR_ERR_DOMAIN);

        let mut p = 0.0;
        assert_eq!(casimir_plate_limit(3, 1.0, &mut p), CASIMIR_OK);
        assert!((p + std::f64::consts::PI.powi(2) / 1440.0).abs() < 1e-15);

        let mut j = 0.0;
        assert_eq!(casimir_bessel_j(0.5, 1.0, &mut j), CASIMIR_OK);
        let expect = (2.0 / std::f64::consts::PI).sqrt() * 1f64.sin();
        assert!((j - expect).abs() < 1e-15);
        let mut y = 0.0;
        assert_eq!(casimir_bessel_y(0.0, 0.0, &mut y), CASIMIR_ERR_DOMAIN);
        assert_eq!(casimir_bessel_j(0.3, 1.0, &mut y), CASIMIR_ERR_DOMAIN);
    }
}

#[test]
fn status_names() {
    let name = |s| {
        unsafe { CStr::from_ptr(casimir_status_name(s)) }
            .to_str()
            .unwrap()
            .to_owned()
    };
    assert_eq!(name(CASIMIR_OK), "ok");
    assert_eq!(name(CASIMIR_ERR_ROOT_LOSS), "root loss");
    assert_eq!(name(99), "unknown status");
}

#[test]
fn header_declares_every_export() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/casimir.h")).unwrap();
    let source = std::fs::read_to_string(format!("{dir}/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .filter_map(|rest| rest.split('(').next())
        .collect();
    assert!(exports.len() >= 18);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(header.contains("typedef struct CasimirGeometry CasimirGeometry;"));
    assert!(header.contains("#define CASIMIR_ERR_CONVERGENCE 7"));
}
