//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are always printed.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use gtorsion::alexmod::{companion, module_spectrum_membership, tensor_alexander, IntActionModule};
use gtorsion::groups::{corpus, gord2_characterization_check, t_window, FiniteGroup};
use gtorsion::knots::{
    branched_cover_order, knot_obstruction_report, torus_alexander, CoverOrder, KnotRecord, KnotReportOptions,
};
use gtorsion::polyring::number::divisors;
use gtorsion::polyring::{
    cyclotomic, has_positive_real_root, mahler_measure, multiplicative_composition, resultant, IntLaurentPoly,
};
use gtorsion::spectrum::{basic_obstructions, find_certificate, spectrum_window, Reason, SpectrumStatus};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($msg)+));
        }
    };
}

fn p(c: &[i64]) -> IntLaurentPoly {
    IntLaurentPoly::from_coeffs(c)
}

fn torus_identity() -> Check {
    let t25 = torus_alexander(2, 5).map_err(|e| e.to_string())?;
    ensure!(t25 == p(&[1, -1, 1, -1, 1]), "Δ(T(2,5)) = {t25}");
    ensure!(t25 == cyclotomic(10), "Δ(T(2,5)) != Φ10");
    let t37 = torus_alexander(3, 7).map_err(|e| e.to_string())?;
    ensure!(t37 == cyclotomic(21), "Δ(T(3,7)) = {t37}");
    Ok(())
}

fn cyclotomic_spectra() -> Check {
    for (q, prime) in [(2u64, 2u64), (3, 3), (4, 2), (5, 5), (7, 7), (8, 2), (9, 3)] {
        let h = cyclotomic(q);
        let r = spectrum_window(&h, 30, 4 * h.span() + 16, 64);
        for e in &r.entries {
            match &e.status {
                SpectrumStatus::Member(c) => {
                    ensure!(e.n % prime == 0, "Φ{q}: {} reported as member", e.n);
                    ensure!(c.verify() && c.n == e.n, "Φ{q}: bad certificate for {}", e.n);
                }
                SpectrumStatus::Excluded(_) => ensure!(e.n % prime != 0, "Φ{q}: {} excluded", e.n),
                SpectrumStatus::Unknown(note) => return Err(format!("Φ{q}: {} unknown ({note})", e.n)),
            }
        }
    }
    Ok(())
}

fn phi10_window() -> Check {
    let h = cyclotomic(10);
    let r = spectrum_window(&h, 10, 4 * 4 + 16, 64);
    ensure!(r.members() == vec![2, 4, 5, 6, 7, 8, 9, 10], "members {:?}", r.members());
    ensure!(r.excluded() == vec![1, 3], "excluded {:?}", r.excluded());
    let c2 = r.certificate(2).ok_or("no certificate for 2")?;
    let c5 = r.certificate(5).ok_or("no certificate for 5")?;
    ensure!(c2.verify() && c5.verify(), "certificate does not verify");
    ensure!(c2.degree() == 5, "certificate for 2 has degree {}", c2.degree());
    ensure!(c5.degree() == 8, "certificate for 5 has degree {}", c5.degree());
    let Some(SpectrumStatus::Excluded(reasons)) = r.entry(3).map(|e| &e.status) else {
        return Err("3 not excluded".into());
    };
    let pp2 = reasons.iter().any(|r| {
        matches!(r, Reason::PrimePower { k: 2, resultant, .. } if *resultant == BigInt::from(5))
    });
    ensure!(pp2, "3 lacks PRIME_POWER(2) with R_2 = 5: {reasons:?}");
    Ok(())
}

fn torus_3_7_screening() -> Check {
    let knot = KnotRecord::torus(3, 7).map_err(|e| e.to_string())?;
    let report = knot_obstruction_report(&knot, &KnotReportOptions::with_window(6));
    let excluded = report.excluded();
    for n in [2, 4, 5] {
        ensure!(excluded.contains(&n), "{n} not excluded: {excluded:?}");
    }
    for n in [3, 6] {
        ensure!(!excluded.contains(&n), "{n} excluded: {excluded:?}");
    }
    Ok(())
}

fn branched_covers() -> Check {
    let t23 = KnotRecord::torus(2, 3).map_err(|e| e.to_string())?;
    let t25 = KnotRecord::torus(2, 5).map_err(|e| e.to_string())?;
    for (knot, k, want) in [(&t23, 2u64, 3i64), (&t23, 3, 4), (&t25, 2, 5)] {
        let got = branched_cover_order(knot, k).map_err(|e| e.to_string())?;
        let direct = resultant(&knot.alexander, &IntLaurentPoly::t_pow_minus_one(k as usize)).map_err(|e| e.to_string())?;
        let direct = if direct < BigInt::from(0) { -direct } else { direct };
        ensure!(got.order() == Some(&BigInt::from(want)), "{} k={k}: {got:?}", knot.name);
        ensure!(direct == BigInt::from(want), "{} k={k}: |Res(Δ, t^k - 1)| = {direct}", knot.name);
    }
    let six = branched_cover_order(&t23, 6).map_err(|e| e.to_string())?;
    ensure!(matches!(six, CoverOrder::NotQhs { .. }), "T(2,3) k=6: {six:?}");
    Ok(())
}

fn module_member(h: &IntLaurentPoly, n: u64) -> Check {
    let module = IntActionModule::companion(h).map_err(|e| e.to_string())?;
    let mut v = vec![BigInt::from(0); module.dimension()];
    v[0] = BigInt::from(1);
    let m = module.element(v).map_err(|e| e.to_string())?;
    let out = module_spectrum_membership(&m, n, 4 * h.span() + 16).map_err(|e| e.to_string())?;
    let cert = out.certificate().ok_or(format!("{h}: no module certificate at {n}"))?;
    ensure!(cert.verify(&m) && cert.n == n, "{h}: module certificate does not verify");
    Ok(())
}

fn excluded_by_basic(h: &IntLaurentPoly, n: u64) -> bool {
    basic_obstructions(h).iter().any(|o| o.excludes(n))
}

fn realization_modules() -> Check {
    for n in [3u64, 5] {
        let h = p(&[1, n as i64 - 2, 1]);
        module_member(&h, n)?;
        for m in (1..2 * n).filter(|m| m % n != 0) {
            let by_divisibility = basic_obstructions(&h).iter().any(|o| {
                o.excludes(m) && matches!(&o.reason, Reason::Divisibility { modulus } if *modulus == BigInt::from(n))
            });
            ensure!(by_divisibility, "{h}: {m} not excluded via |h(1)| = {n}");
        }
    }
    let h = p(&[1, 2, 0, 1]);
    module_member(&h, 4)?;
    for m in [1, 2, 3, 5, 6, 7] {
        ensure!(excluded_by_basic(&h, m), "{h}: {m} not excluded");
    }
    Ok(())
}

/// `t^i mod h` for monic `h` of degree `d`, as length-`d` vectors.
fn power_residues(h: &[i64], top: usize) -> Vec<Vec<i64>> {
    let d = h.len() - 1;
    let mut out = Vec::with_capacity(top + 1);
    let mut cur = vec![0i64; d.max(1)];
    if d == 0 {
        return vec![vec![0]; top + 1];
    }
    cur[0] = 1;
    for _ in 0..=top {
        out.push(cur.clone());
        // multiply by t, reduce with t^d = -(h_0 + ... + h_{d-1} t^{d-1})
        let carry = cur[d - 1];
        for i in (1..d).rev() {
            cur[i] = cur[i - 1] - carry * h[i];
        }
        cur[0] = -carry * h[0];
    }
    out
}

/// Exhaustive: is there `f = Σ c_i t^i`, `c_i >= 0`, `deg f <= top`, `Σ c_i = n`, with `h | f`?
fn oracle(h: &[i64], n: u64, top: usize) -> bool {
    let res = power_residues(h, top);
    fn rec(res: &[Vec<i64>], i: usize, left: u64, acc: &mut Vec<i64>) -> bool {
        if left == 0 {
            return acc.iter().all(|&x| x == 0);
        }
        if i == res.len() {
            return false;
        }
        for c in (0..=left).rev() {
            for (a, r) in acc.iter_mut().zip(&res[i]) {
                *a += c as i64 * r;
            }
            let hit = rec(res, i + 1, left - c, acc);
            for (a, r) in acc.iter_mut().zip(&res[i]) {
                *a -= c as i64 * r;
            }
            if hit {
                return true;
            }
        }
        false
    }
    rec(&res, 0, n, &mut vec![0; res[0].len()])
}

fn brute_force_oracle() -> Check {
    ensure!(!oracle(&[1, 1], 1, 12) && oracle(&[1, 1], 2, 12), "oracle wrong on t + 1");
    ensure!(!oracle(&[1, -1, 1], 1, 12) && oracle(&[1, -1, 1], 2, 12), "oracle wrong on t^2 - t + 1");
    let mut seen = std::collections::BTreeSet::new();
    let (mut checked, mut members) = (0, 0);
    for deg in 0..=3usize {
        let lower = 5usize.pow(deg as u32);
        for code in 0..lower {
            let mut c: Vec<i64> = (0..deg).map(|i| (code / 5usize.pow(i as u32) % 5) as i64 - 2).collect();
            c.push(1);
            let h = p(&c).normalize();
            if h.is_zero() || !seen.insert(h.to_string()) {
                continue;
            }
            if has_positive_real_root(&h).map_err(|e| e.to_string())? {
                continue;
            }
            let dense: Vec<i64> = h.to_i64_coeffs().ok_or("coefficients overflow")?;
            for n in 1..=8u64 {
                let expected = oracle(&dense, n, 12);
                let got = find_certificate(&h, n, 12).map_err(|e| e.to_string())?;
                match got.certificate() {
                    Some(cert) => {
                        ensure!(cert.verify(), "{h}, n={n}: certificate does not verify");
                        ensure!(cert.degree() - cert.product.low_exponent() <= 12, "{h}, n={n}: degree too large");
                        ensure!(expected, "{h}, n={n}: certificate found but oracle has none");
                        members += 1;
                    }
                    None => ensure!(!expected, "{h}, n={n}: oracle finds a multiple, search does not"),
                }
                checked += 1;
            }
        }
    }
    ensure!(checked > 0 && members > 0 && members < checked, "degenerate run: {members}/{checked}");
    Ok(())
}

fn group_suite() -> Check {
    for m in 3..=12 {
        let g = FiniteGroup::metacyclic(m, 2).map_err(|e| e.to_string())?;
        let a = g.element_from_word("a").map_err(|e| e.to_string())?;
        let w = t_window(&g, a, 2 * m as u64);
        ensure!(w.gord == Some(2), "metacyclic({m},2): gord(a) = {:?}", w.gord);
        ensure!(g.element_order(a) == m as u64, "metacyclic({m},2): ord(a) = {}", g.element_order(a));
    }
    let groups = corpus();
    let mut two_groups = 0;
    for (name, g) in &groups {
        if g.order() <= 64 && g.order() > 1 && g.p_group_prime() == Some(2) {
            two_groups += 1;
            for x in (0..g.order()).filter(|&x| x != g.identity()) {
                let w = t_window(g, x, 32);
                ensure!(w.members.iter().all(|n| n % 2 == 0), "{name}: element {x} has window {:?}", w.members);
            }
        }
    }
    ensure!(two_groups > 0, "corpus has no 2-groups of order <= 64");
    for (name, g) in groups.iter().filter(|(_, g)| g.order() <= 512) {
        for x in 0..g.order() {
            let triple = gord2_characterization_check(g, x);
            ensure!(triple.agrees(), "{name}: element {x}: {triple:?}");
        }
    }
    Ok(())
}

fn tensor_check() -> Check {
    let h = p(&[1, -1, 1]);
    let s = companion(&h).map_err(|e| e.to_string())?;
    let got = tensor_alexander(&s, 2).map_err(|e| e.to_string())?;
    let want = &p(&[1, 1, 1]) * &p(&[-1, 1]).pow(2);
    ensure!(got == want, "tensor square gives {got}, expected {want}");
    let oracle = multiplicative_composition(&h, &h).map_err(|e| e.to_string())?;
    ensure!(oracle.is_doteq(&got), "eigenvalue products give {oracle}");
    Ok(())
}

fn random_poly(rng: &mut ChaCha8Rng, max_len: usize, range: i64) -> IntLaurentPoly {
    let len = rng.gen_range(1..=max_len);
    let low = rng.gen_range(-3..=3);
    let c: Vec<i64> = (0..len).map(|_| rng.gen_range(-range..=range)).collect();
    IntLaurentPoly::from_laurent(low, &c)
}

fn kernel_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut trips = 0;
    while trips < 10_000 {
        let a = random_poly(&mut rng, 8, 20);
        let b = random_poly(&mut rng, 6, 20);
        if b.is_zero() {
            continue;
        }
        let prod = &a * &b;
        let back = prod.divide_exact(&b).map_err(|e| format!("({a})*({b}) / ({b}): {e}"))?;
        ensure!(back == a, "({a})*({b}) / ({b}) = {back}");
        ensure!(prod.augmentation() == a.augmentation() * b.augmentation(), "ε not multiplicative on {a}, {b}");
        trips += 1;
    }
    for k in 1..=200u64 {
        let prod = divisors(k).into_iter().fold(IntLaurentPoly::one(), |acc, d| &acc * &cyclotomic(d));
        ensure!(prod == IntLaurentPoly::t_pow_minus_one(k as usize), "∏ Φ_d != t^{k} - 1");
    }
    for _ in 0..200 {
        let [f, g, h] = [0; 3].map(|_| {
            let len = rng.gen_range(2..=5);
            let c: Vec<i64> = (0..len).map(|_| rng.gen_range(-5..=5)).collect();
            p(&c)
        });
        if f.is_zero() || g.is_zero() || h.is_zero() {
            continue;
        }
        let lhs = resultant(&(&f * &g), &h).map_err(|e| e.to_string())?;
        let rhs = resultant(&f, &h).map_err(|e| e.to_string())? * resultant(&g, &h).map_err(|e| e.to_string())?;
        ensure!(lhs == rhs, "Res(fg, h) != Res(f, h) Res(g, h) for {f}, {g}, {h}");
    }
    for k in 1..=60u64 {
        let m = mahler_measure(&cyclotomic(k), 1e-12).map_err(|e| e.to_string())?;
        ensure!((m - 1.0).abs() <= 1e-9, "M(Φ{k}) = {m}");
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("torus knot Alexander polynomials", Duration::from_secs(1), torus_identity),
        ("cyclotomic spectra on [1,30]", Duration::from_secs(30), cyclotomic_spectra),
        ("Φ10 window", Duration::from_secs(5), phi10_window),
        ("T(3,7) screening", Duration::from_secs(5), torus_3_7_screening),
        ("branched cover orders", Duration::from_secs(1), branched_covers),
        ("realization modules", Duration::from_secs(5), realization_modules),
        ("brute-force oracle", Duration::from_secs(600), brute_force_oracle),
        ("finite-group suite", Duration::from_secs(120), group_suite),
        ("tensor square", Duration::from_secs(1), tensor_check),
        ("kernel properties", Duration::from_secs(120), kernel_properties),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > *budget {
                Err(format!("took {elapsed:.2?}, budget {budget:?}"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({elapsed:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
