use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gtorsion::alexmod::{companion, tensor_alexander};
use gtorsion::groups::{t_window, FiniteGroup};
use gtorsion::knots::{knot_obstruction_report, KnotRecord, KnotReportOptions};
use gtorsion::polyring::{cyclotomic, factor, mahler_measure, resultant_with_cyclotomic, IntLaurentPoly};
use gtorsion::spectrum::{find_certificate, spectrum_window};

fn polynomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("polyring");
    for k in [30u64, 105, 210] {
        g.bench_with_input(BenchmarkId::new("factor_t^k-1", k), &k, |b, &k| {
            let h = IntLaurentPoly::t_pow_minus_one(k as usize);
            b.iter(|| factor(black_box(&h)).unwrap())
        });
    }
    let phi = cyclotomic(105);
    g.bench_function("resultant_phi105_phi35", |b| b.iter(|| resultant_with_cyclotomic(black_box(&phi), 35).unwrap()));
    let lehmer = IntLaurentPoly::from_coeffs(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    g.bench_function("mahler_lehmer", |b| b.iter(|| mahler_measure(black_box(&lehmer), 1e-12).unwrap()));
    g.finish();
}

fn spectra(c: &mut Criterion) {
    let mut g = c.benchmark_group("spectrum");
    let phi10 = cyclotomic(10);
    g.bench_function("certificate_phi10_5", |b| b.iter(|| find_certificate(black_box(&phi10), 5, 32).unwrap()));
    let phi21 = cyclotomic(21);
    g.bench_function("certificate_phi21_7", |b| b.iter(|| find_certificate(black_box(&phi21), 7, 48).unwrap()));
    g.bench_function("window_phi10_30", |b| b.iter(|| spectrum_window(black_box(&phi10), 30, 32, 64)));
    g.finish();
}

fn modules_and_knots(c: &mut Criterion) {
    let mut g = c.benchmark_group("alexmod");
    let s = companion(&cyclotomic(10)).unwrap();
    for m in [2u32, 3] {
        g.bench_with_input(BenchmarkId::new("tensor_phi10", m), &m, |b, &m| b.iter(|| tensor_alexander(&s, m).unwrap()));
    }
    let knot = KnotRecord::torus(3, 7).unwrap();
    g.bench_function("knot_report_T37", |b| {
        b.iter(|| knot_obstruction_report(black_box(&knot), &KnotReportOptions::with_window(20)))
    });
    g.finish();
}

fn groups(c: &mut Criterion) {
    let mut g = c.benchmark_group("groups");
    let d = FiniteGroup::dihedral(256).unwrap();
    let a = d.element_from_word("a").unwrap();
    g.bench_function("t_window_D512", |b| b.iter(|| t_window(black_box(&d), a, 64)));
    g.bench_function("classes_S6", |b| {
        b.iter(|| FiniteGroup::symmetric(6).unwrap().conjugacy_classes().classes.len())
    });
    g.finish();
}

criterion_group!(benches, polynomials, spectra, modules_and_knots, groups);
criterion_main!(benches);
