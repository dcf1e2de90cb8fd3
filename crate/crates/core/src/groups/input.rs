use serde::Deserialize;

use super::group::FiniteGroup;
use super::GroupError;

/// Group description as read from JSON, e.g.
/// `{"kind": "permutation", "generators": ["(1 2 3)", "(1 2)"]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Permutation { generators: Vec<String> },
    Table { table: Vec<Vec<usize>> },
    Metacyclic { m: usize, s: usize },
    Cyclic { n: usize },
    Dihedral { n: usize },
    Dicyclic { n: usize },
    Heisenberg { p: usize },
    Symmetric { n: usize },
    Alternating { n: usize },
    DirectProduct { factors: Vec<GroupSpec> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Permutation { generators } => {
                let refs: Vec<&str> = generators.iter().map(String::as_str).collect();
                FiniteGroup::from_permutations(&refs)
            }
            GroupSpec::Table { table } => FiniteGroup::from_table(table.clone()),
            GroupSpec::Metacyclic { m, s } => FiniteGroup::metacyclic(*m, *s),
            GroupSpec::Cyclic { n } => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral { n } => FiniteGroup::dihedral(*n),
            GroupSpec::Dicyclic { n } => FiniteGroup::dicyclic(*n),
            GroupSpec::Heisenberg { p } => FiniteGroup::heisenberg(*p),
            GroupSpec::Symmetric { n } => FiniteGroup::symmetric(*n),
            GroupSpec::Alternating { n } => FiniteGroup::alternating(*n),
            GroupSpec::DirectProduct { factors } => {
                let mut acc = FiniteGroup::trivial();
                for f in factors {
                    acc = FiniteGroup::direct_product(&acc, &f.build()?)?;
                }
                Ok(acc)
            }
        }
    }
}

pub fn group_from_json(s: &str) -> Result<FiniteGroup, GroupError> {
    let spec: GroupSpec = serde_json::from_str(s).map_err(|e| GroupError::Json(e.to_string()))?;
    spec.build()
}

/// Named groups used by the test suites: orders up to 512.
pub fn corpus() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    let mut push = |name: String, g: Result<FiniteGroup, GroupError>| out.push((name, g.expect("corpus group")));
    for n in [1, 2, 3, 4, 5, 6, 8, 9, 12, 16, 27, 32, 64] {
        push(format!("C{n}"), FiniteGroup::cyclic(n));
    }
    for n in [3, 4, 5, 6, 8, 12, 16, 32, 128, 256] {
        push(format!("D{}", 2 * n), FiniteGroup::dihedral(n));
    }
    for n in [2, 3, 4, 8, 16] {
        push(format!("Dic{}", 4 * n), FiniteGroup::dicyclic(n));
    }
    for (m, s) in [(3, 4), (4, 4), (8, 2), (8, 4), (5, 4), (16, 4), (9, 6), (7, 8), (32, 2), (16, 8)] {
        push(format!("M({m},{s})"), FiniteGroup::metacyclic(m, s));
    }
    for p in [2, 3, 5, 7] {
        push(format!("Heis({p})"), FiniteGroup::heisenberg(p));
    }
    push("S3".into(), FiniteGroup::symmetric(3));
    push("S4".into(), FiniteGroup::symmetric(4));
    push("S5".into(), FiniteGroup::symmetric(5));
    push("A4".into(), FiniteGroup::alternating(4));
    push("A5".into(), FiniteGroup::alternating(5));
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let c4 = FiniteGroup::cyclic(4).unwrap();
    let q8 = FiniteGroup::quaternion();
    let d8 = FiniteGroup::dihedral(4).unwrap();
    let c2c2 = FiniteGroup::direct_product(&c2, &c2).unwrap();
    push("C2^2".into(), Ok(c2c2.clone()));
    let c2c2c2 = FiniteGroup::direct_product(&c2c2, &c2).unwrap();
    push("C2^3".into(), Ok(c2c2c2.clone()));
    push("C2^6".into(), FiniteGroup::direct_product(&c2c2c2, &c2c2c2));
    push("C4xC4".into(), FiniteGroup::direct_product(&c4, &c4));
    push("Q8xC2".into(), FiniteGroup::direct_product(&q8, &c2));
    push("D8xC2".into(), FiniteGroup::direct_product(&d8, &c2));
    push("Q8xQ8".into(), FiniteGroup::direct_product(&q8, &q8));
    push("D8xD8".into(), FiniteGroup::direct_product(&d8, &d8));
    push("D8xQ8".into(), FiniteGroup::direct_product(&d8, &q8));
    push("Q8xC4".into(), FiniteGroup::direct_product(&q8, &c4));
    push("S3xC3".into(), FiniteGroup::direct_product(&FiniteGroup::symmetric(3).unwrap(), &FiniteGroup::cyclic(3).unwrap()));
    push("S4xC2".into(), FiniteGroup::direct_product(&FiniteGroup::symmetric(4).unwrap(), &c2));
    push("Heis(2)xQ8xC4".into(), FiniteGroup::direct_product(&FiniteGroup::heisenberg(2).unwrap(), &FiniteGroup::direct_product(&q8, &c4).unwrap()));
    push("SmallPerm".into(), FiniteGroup::from_permutations(&["(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_specs() {
        let g = group_from_json(r#"{"kind": "permutation", "generators": ["(1 2 3)"]}"#).unwrap();
        assert_eq!(g.order(), 3);
        let g = group_from_json(r#"{"kind": "metacyclic", "m": 5, "s": 2}"#).unwrap();
        assert_eq!(g.order(), 10);
        let g = group_from_json(r#"{"kind": "table", "table": [[0, 1], [1, 0]]}"#).unwrap();
        assert_eq!(g.order(), 2);
        let g = group_from_json(r#"{"kind": "direct_product", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 3}]}"#)
            .unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert!(matches!(group_from_json(r#"{"kind": "nope"}"#), Err(GroupError::Json(_))));
    }

    #[test]
    fn corpus_orders() {
        let c = corpus();
        assert!(c.iter().all(|(_, g)| g.order() <= 512));
        assert!(c.iter().any(|(_, g)| g.order() == 512));
    }
}
