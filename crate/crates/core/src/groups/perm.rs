//! Permutations in cycle notation.

use super::GroupError;

/// Image array on `0..degree`.
pub type Perm = Vec<u16>;

/// Parses `"(1 2 3)(4 5)"`, points numbered from 1; `"()"` or `"e"` is the identity.
/// Points may be separated by spaces or commas.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm, GroupError> {
    let bad = |m: String| GroupError::InvalidPermutation(format!("{s:?}: {m}"));
    let mut perm: Perm = (0..degree as u16).collect();
    let t = s.trim();
    if t.is_empty() || t == "e" || t == "()" {
        return Ok(perm);
    }
    let mut rest = t;
    let mut seen = vec![false; degree];
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('".into()))?;
        let close = open.find(')').ok_or_else(|| bad("missing ')'".into()))?;
        let points: Vec<usize> = open[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|e| bad(format!("bad point '{x}': {e}"))))
            .collect::<Result<_, _>>()?;
        for &p in &points {
            if p == 0 || p > degree {
                return Err(bad(format!("point {p} outside 1..={degree}")));
            }
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(bad(format!("point {p} repeated")));
            }
        }
        for (i, &p) in points.iter().enumerate() {
            perm[p - 1] = (points[(i + 1) % points.len()] - 1) as u16;
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(perm)
}

/// Largest point mentioned in cycle notation.
pub fn max_point(s: &str) -> usize {
    s.split(|c: char| !c.is_ascii_digit()).filter_map(|x| x.parse().ok()).max().unwrap_or(0)
}

/// `(a * b)(x) = a(b(x))`.
pub fn compose(a: &[u16], b: &[u16]) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn invert(a: &[u16]) -> Perm {
    let mut out = vec![0u16; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u16;
    }
    out
}

pub fn is_bijection(a: &[u16]) -> bool {
    let mut seen = vec![false; a.len()];
    a.iter().all(|&x| (x as usize) < a.len() && !std::mem::replace(&mut seen[x as usize], true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_compose() {
        let a = parse_cycles("(1 2 3)", 3).unwrap();
        assert_eq!(a, vec![1, 2, 0]);
        let b = parse_cycles("(1,2)", 3).unwrap();
        assert_eq!(compose(&a, &b), vec![2, 1, 0]);
        assert_eq!(compose(&a, &invert(&a)), vec![0, 1, 2]);
        assert_eq!(parse_cycles("()", 2).unwrap(), vec![0, 1]);
        assert_eq!(parse_cycles("(2 5)(3 4)", 5).unwrap(), vec![0, 4, 3, 2, 1]);
        assert!(parse_cycles("(1 1)", 2).is_err());
        assert!(parse_cycles("(1 4)", 3).is_err());
        assert!(parse_cycles("1 2", 3).is_err());
        assert_eq!(max_point("(1 12)(3 4)"), 12);
    }
}
