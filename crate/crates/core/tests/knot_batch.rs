use gtorsion::knots::{batch_screen, knot_obstruction_report, screen_csv, BatchEntry, KnotRecord, KnotReportOptions};
use gtorsion::polyring::IntLaurentPoly;

const TABLE: &str = "\
name,alexander,genus,fibered
# small knots
3_1,1 -1 1,1,true
4_1,1 -3 1,1,true
5_1,1 -1 1 -1 1,2,true
5_2,2 -3 2,1,false
6_1,2 -5 2,1,false
broken,1 2,,
7_1,t^6-t^5+t^4-t^3+t^2-t+1,3,true
";

#[test]
fn csv_batch_keeps_row_order_and_reports_errors() {
    let out = screen_csv(TABLE.as_bytes(), &KnotReportOptions::with_window(10));
    assert_eq!(out.len(), 7);
    let names: Vec<String> = out
        .iter()
        .map(|e| match e {
            BatchEntry::Report(r) => r.name.clone(),
            BatchEntry::Error { .. } => "error".into(),
        })
        .collect();
    assert_eq!(names, ["3_1", "4_1", "5_1", "5_2", "6_1", "error", "7_1"]);
    let json = serde_json::to_string(&out).unwrap();
    assert!(json.contains("\"kind\":\"error\""));
}

#[test]
fn batch_matches_single_reports() {
    let knots: Vec<KnotRecord> = [(2, 3), (2, 5), (3, 4), (2, 7), (3, 5)]
        .iter()
        .map(|&(p, q)| KnotRecord::torus(p, q).unwrap())
        .collect();
    let opts = KnotReportOptions::with_window(12);
    let batch = batch_screen(&knots, &opts);
    for (k, r) in knots.iter().zip(&batch) {
        let single = knot_obstruction_report(k, &opts);
        assert_eq!(serde_json::to_value(&single).unwrap(), serde_json::to_value(r).unwrap());
    }
}

// t(Δ) of an irreducible Alexander polynomial without positive real roots
// is a subset of what the report leaves open.
#[test]
fn excluded_values_avoid_torus_multiples() {
    for (p, q) in [(2u64, 3u64), (2, 5), (3, 4), (3, 5), (2, 9)] {
        let k = KnotRecord::torus(p, q).unwrap();
        let r = knot_obstruction_report(&k, &KnotReportOptions::with_window(20));
        // powers of the meridian-like elements of order p and q exist in the group
        for n in (1..=20).filter(|n| n % p == 0 || n % q == 0) {
            assert!(!r.excluded().contains(&n), "T({p},{q}) excludes {n}");
        }
    }
}

#[test]
fn unknot_has_no_constraint() {
    let r = knot_obstruction_report(&KnotRecord::unknot(), &KnotReportOptions::with_window(5));
    assert!(r.excluded().is_empty());
    assert_eq!(r.alexander, IntLaurentPoly::one());
}
