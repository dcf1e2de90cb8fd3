//! Square-free decomposition of primitive integer polynomials (Yun).

use num_bigint::BigInt;

use super::dense;

/// For primitive `f` with positive leading coefficient, returns
/// `[(s_1, 1), (s_2, 2), ...]` with `f = ∏ s_i^i`, each `s_i` square-free,
/// primitive and pairwise coprime. Constant parts are omitted.
pub(crate) fn yun(f: &[BigInt]) -> Vec<(Vec<BigInt>, u32)> {
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let df = dense::derivative(f);
    let a0 = dense::gcd(f, &df);
    let mut b = dense::div_exact(f, &a0).expect("gcd divides f");
    let mut c = dense::div_exact(&df, &a0).expect("gcd divides f'");
    let mut d = dense::sub(&c, &dense::derivative(&b));
    let mut i = 1u32;
    while b.len() > 1 {
        let a = if d.is_empty() { dense::primitive(&b) } else { dense::primitive(&dense::gcd(&b, &d)) };
        if a.len() > 1 {
            out.push((a.clone(), i));
        }
        b = dense::div_exact(&b, &a).expect("square-free part divides");
        c = if d.is_empty() { Vec::new() } else { dense::div_exact(&d, &a).expect("yun step is exact") };
        d = dense::sub(&c, &dense::derivative(&b));
        i += 1;
    }
    out
}
