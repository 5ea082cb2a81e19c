use arctic_core::experiments::*;

#[test]
fn reports_do_not_depend_on_thread_count() {
    let run = || {
        (
            tiling_shape_convergence(&[8, 12], 6, 42).unwrap().to_csv(),
            asm_shape_convergence(&[8], 4, 42).unwrap().to_csv(),
            arctic_radius(&[10], 5, 42, None).unwrap().to_csv(),
        )
    };
    let parallel = run();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(run);
    assert_eq!(parallel, single);
}

#[test]
fn thresholds_are_declared_in_the_header() {
    let r = arctic_radius(&[10], 3, 1, Some(0.1)).unwrap();
    let csv = r.to_csv();
    let header: Vec<&str> = csv.lines().take_while(|l| l.starts_with('#')).collect();
    assert!(header.iter().any(|l| l.starts_with("# threshold radius_tol=0.05")));
    assert!(header.iter().any(|l| l.contains("eps=0.1")));
    let body = csv.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(body, "n,sample,radius,temperate_max,polar_min,r_in,r_out,inclusion");
}

#[test]
fn ldp_table_columns() {
    let t = ldp_row_check(3, 1).unwrap();
    assert_eq!(t.rows.len(), 3);
    for r in &t.rows {
        assert!(r.approx > 0.0 && r.approx <= 1.0);
        // approx = exp(-n^2 rate), so the error is the gap of the two logs over n^2
        assert!((r.normalized_error - (r.exact_f64.ln() - r.approx.ln()).abs() / 9.0).abs() < 1e-12);
    }
    assert!(ldp_row_check(7, 1).is_err());
}

#[test]
fn writes_csv_and_json() {
    let dir = std::env::temp_dir().join(format!("arctic-report-{}", std::process::id()));
    let r = tableau_arctic(&[4, 8], 5, 2).unwrap();
    let (csv, json) = r.write_to(&dir).unwrap();
    assert_eq!(std::fs::read_to_string(csv).unwrap(), r.to_csv());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v["id"], "tableau-arctic");
    std::fs::remove_dir_all(dir).unwrap();
}
