use std::collections::VecDeque;

use super::group::{Elem, FiniteGroup};
use super::window::t_window;
use super::GroupError;

/// Homomorphism determined by the images of the source generators.
#[derive(Debug, Clone)]
pub struct Homomorphism<'a> {
    pub source: &'a FiniteGroup,
    pub target: &'a FiniteGroup,
    map: Vec<Elem>,
}

impl<'a> Homomorphism<'a> {
    /// Extends the generator images along the Cayley graph and checks every
    /// edge, which is exactly the homomorphism condition.
    pub fn new(source: &'a FiniteGroup, target: &'a FiniteGroup, images: &[Elem]) -> Result<Self, GroupError> {
        let gens = source.generators();
        if images.len() != gens.len() {
            return Err(GroupError::NotAHomomorphism(format!(
                "{} images for {} generators",
                images.len(),
                gens.len()
            )));
        }
        if images.iter().any(|&x| x >= target.order()) {
            return Err(GroupError::NotAHomomorphism("image outside the target".into()));
        }
        let mut map = vec![usize::MAX; source.order()];
        map[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (&s, &img) in gens.iter().zip(images) {
                let y = source.mul(x, s);
                let fy = target.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return Err(GroupError::NotAHomomorphism(format!("inconsistent at element {y}")));
                }
            }
        }
        Ok(Homomorphism { source, target, map })
    }

    pub fn identity(g: &'a FiniteGroup) -> Self {
        Homomorphism { source: g, target: g, map: (0..g.order()).collect() }
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }
}

/// `t(g) ⊂ t(f(g))` on `1..=window`.
pub fn monotonicity_check(f: &Homomorphism<'_>, g: Elem, window: u64) -> bool {
    let src = t_window(f.source, g, window);
    let dst = t_window(f.target, f.apply(g), window);
    src.members.iter().all(|&n| dst.contains(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_and_trivial() {
        let d = FiniteGroup::metacyclic(5, 2).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let f = Homomorphism::new(&d, &c2, &[0, 1]).unwrap();
        for g in 0..d.order() {
            assert!(monotonicity_check(&f, g, 12));
        }
        let triv = FiniteGroup::trivial();
        let f = Homomorphism::new(&d, &triv, &[0, 0]).unwrap();
        assert!(monotonicity_check(&f, 3, 12));
        let id = Homomorphism::identity(&d);
        assert!(monotonicity_check(&id, 1, 12));
    }

    #[test]
    fn rejects_non_homomorphism() {
        let d = FiniteGroup::metacyclic(5, 2).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert!(matches!(Homomorphism::new(&d, &c2, &[1, 0]), Err(GroupError::NotAHomomorphism(_))));
        assert!(Homomorphism::new(&d, &c2, &[1]).is_err());
    }
}
