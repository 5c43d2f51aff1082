use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use charval_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    charval_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = charval_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn table_of(name: &str) -> (*mut CharvalGroup, *mut CharvalTable) {
    let mut g = ptr::null_mut();
    assert_eq!(charval_group_from_catalog(cstr(name).as_ptr(), &mut g), CharvalStatus::Ok);
    let mut t = ptr::null_mut();
    assert_eq!(charval_table_compute(g, 0x5eed, &mut t), CharvalStatus::Ok);
    (g, t)
}

#[test]
fn s4_table_through_the_abi() {
    unsafe {
        let (g, t) = table_of("S4");
        let mut order = 0usize;
        assert_eq!(charval_group_order(g, &mut order), CharvalStatus::Ok);
        assert_eq!(order, 24);
        let mut k = 0usize;
        assert_eq!(charval_table_class_count(t, &mut k), CharvalStatus::Ok);
        assert_eq!(k, 5);
        let mut sum = 0u64;
        for row in 0..k {
            let mut d = 0u64;
            assert_eq!(charval_table_degree(t, row, &mut d), CharvalStatus::Ok);
            sum += d * d;
        }
        assert_eq!(sum, 24);
        let mut s = ptr::null_mut();
        assert_eq!(charval_table_value(t, 0, 0, &mut s), CharvalStatus::Ok);
        assert_eq!(take(s), "1");

        assert_eq!(charval_invariants_json(t, &mut s), CharvalStatus::Ok);
        let inv: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(inv["cv"], serde_json::json!(["-1", "0", "1", "2", "3"]));

        assert_eq!(charval_table_json(t, &mut s), CharvalStatus::Ok);
        let tab: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(tab["rows"].as_array().unwrap().len(), 5);

        let mut fails = 99usize;
        assert_eq!(
            charval_verify_json(t, cstr("all").as_ptr(), &mut s, &mut fails),
            CharvalStatus::Ok
        );
        let verdicts: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert!(!verdicts.as_array().unwrap().is_empty());
        assert_eq!(fails, 0);

        charval_table_free(t);
        charval_group_free(g);
    }
}

#[test]
fn irrational_values_are_strings() {
    unsafe {
        let (g, t) = table_of("cyclic(3)");
        let mut found = false;
        for row in 0..3 {
            for class in 0..3 {
                let mut s = ptr::null_mut();
                assert_eq!(charval_table_value(t, row, class, &mut s), CharvalStatus::Ok);
                found |= take(s).contains("z(3)");
            }
        }
        assert!(found);
        charval_table_free(t);
        charval_group_free(g);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            charval_group_from_catalog(cstr("nosuch").as_ptr(), &mut g),
            CharvalStatus::UnknownName
        );
        assert!(last_error().contains("nosuch"));
        assert!(g.is_null());

        assert_eq!(
            charval_group_from_catalog(ptr::null(), &mut g),
            CharvalStatus::NullPointer
        );
        assert_eq!(
            charval_group_from_text(cstr("degree 3\n(1 x)").as_ptr(), 100, &mut g),
            CharvalStatus::Parse
        );
        assert!(last_error().contains("line 2"));
        assert_eq!(
            charval_group_from_text(cstr("degree 7\n(1 2 3 4 5 6 7)\n(1 2)").as_ptr(), 100, &mut g),
            CharvalStatus::OrderBound
        );

        let (g, t) = table_of("D8");
        let mut s = ptr::null_mut();
        assert_eq!(charval_table_value(t, 9, 0, &mut s), CharvalStatus::OutOfRange);
        assert_eq!(
            charval_verify_json(t, cstr("z").as_ptr(), &mut s, ptr::null_mut()),
            CharvalStatus::InvalidArgument
        );
        assert_eq!(charval_table_class_count(t, ptr::null_mut()), CharvalStatus::NullPointer);
        // success clears the message
        let mut k = 0;
        assert_eq!(charval_table_class_count(t, &mut k), CharvalStatus::Ok);
        assert!(charval_last_error().is_null());
        charval_table_free(t);
        charval_group_free(g);
        charval_group_free(ptr::null_mut());
        charval_string_free(ptr::null_mut());
    }
}

#[test]
fn group_from_text_and_mn() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            charval_group_from_text(cstr("degree 3\n(1 2 3)\n(1 2)").as_ptr(), 100, &mut g),
            CharvalStatus::Ok
        );
        let mut order = 0;
        charval_group_order(g, &mut order);
        assert_eq!(order, 6);
        charval_group_free(g);

        let mut v = 0i64;
        assert_eq!(
            charval_mn_value(cstr("13,1,1").as_ptr(), cstr("2,2,11").as_ptr(), &mut v),
            CharvalStatus::Ok
        );
        assert_eq!(v, -1);
        assert_eq!(
            charval_mn_value(cstr("13,1,1").as_ptr(), cstr("8,4,2,2,2").as_ptr(), &mut v),
            CharvalStatus::InvalidArgument
        );
        assert!(last_error().contains("differs"));
        // the degree of (10,9,8,7,6) exceeds 2^63
        let ones = vec!["1"; 40].join(",");
        assert_eq!(
            charval_mn_value(cstr("10,9,8,7,6").as_ptr(), cstr(&ones).as_ptr(), &mut v),
            CharvalStatus::OutOfRange
        );
    }
}

#[test]
fn status_messages_are_static() {
    let msg = unsafe { CStr::from_ptr(charval_status_message(CharvalStatus::OrderBound)) };
    assert_eq!(msg.to_str().unwrap(), "order bound exceeded");
    let v = unsafe { CStr::from_ptr(charval_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/charval.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let mut count = 0;
    for line in src.lines() {
        if let Some(rest) = line.split("extern \"C\" fn ").nth(1) {
            let name = rest.split('(').next().unwrap();
            assert!(header.contains(&format!("{name}(")), "{name} missing from header");
            count += 1;
        }
    }
    assert!(count >= 15);
    assert!(header.contains("typedef struct CharvalTable CharvalTable;"));
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let probe = std::env::temp_dir().join(format!("charval_hdr_{}.c", std::process::id()));
    std::fs::write(
        &probe,
        "#include \"charval.h\"\nint main(void) { CharvalGroup *g = 0; \
         return charval_group_from_catalog(\"S4\", &g) == CHARVAL_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&probe)
        .status()
        .expect("a C compiler named cc");
    let _ = std::fs::remove_file(&probe);
    assert!(status.success());
}
