use std::collections::HashMap;

use serde::Serialize;

use super::group::{Elem, FiniteGroup};

/// Window membership of `t(g)` in a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumWindow {
    pub element: Elem,
    pub element_order: u64,
    pub window: u64,
    pub members: Vec<u64>,
    /// Least member in the window.
    pub gord: Option<u64>,
    /// `T_n = T_{n + period}` for every `n >= preperiod`, where `T_n` is the
    /// set of products of `n` conjugates of `g`.
    pub preperiod: Option<u64>,
    pub period: Option<u64>,
}

impl SpectrumWindow {
    pub fn contains(&self, n: u64) -> bool {
        self.members.binary_search(&n).is_ok()
    }

    /// Members are closed under addition inside the window.
    pub fn is_additively_closed(&self) -> bool {
        self.members.iter().all(|&a| {
            self.members.iter().all(|&b| a + b > self.window || self.contains(a + b))
        })
    }
}

const MAX_EXTRA_STEPS: u64 = 100_000;

/// `T_1 = C`, `T_{n+1} = T_n C` with `C` the class of `g`; `n ∈ t(g)` iff `1 ∈ T_n`.
/// Every `T_n` is a union of classes, so the iteration runs on class bitsets.
pub fn t_window(group: &FiniteGroup, g: Elem, window: u64) -> SpectrumWindow {
    let cc = group.conjugacy_classes();
    let nclasses = cc.classes.len();
    let words = nclasses.div_ceil(64);
    let c = &cc.classes[cc.class_of[g] as usize];
    // step[k]: classes met by (representative of class k) * C
    let step: Vec<Vec<u64>> = cc
        .classes
        .iter()
        .map(|cls| {
            let mut mask = vec![0u64; words];
            for &x in c {
                let k = cc.class_of[group.mul(cls[0], x)] as usize;
                mask[k / 64] |= 1 << (k % 64);
            }
            mask
        })
        .collect();
    let identity_class = cc.class_of[0] as usize;
    let mut t = vec![0u64; words];
    let gc = cc.class_of[g] as usize;
    t[gc / 64] |= 1 << (gc % 64);

    let mut seen: HashMap<Vec<u64>, u64> = HashMap::new();
    let mut history: Vec<bool> = Vec::new();
    let mut cycle = None;
    let mut n = 1u64;
    loop {
        if let Some(&first) = seen.get(&t) {
            cycle = Some((first, n - first));
            break;
        }
        seen.insert(t.clone(), n);
        history.push(t[identity_class / 64] >> (identity_class % 64) & 1 == 1);
        if n >= window && n >= MAX_EXTRA_STEPS {
            break;
        }
        let mut next = vec![0u64; words];
        for k in 0..nclasses {
            if t[k / 64] >> (k % 64) & 1 == 1 {
                for (w, m) in next.iter_mut().zip(&step[k]) {
                    *w |= m;
                }
            }
        }
        t = next;
        n += 1;
    }
    let member = |n: u64| -> bool {
        let idx = match cycle {
            Some((start, period)) if n >= start + period => start + (n - start) % period,
            _ => n,
        };
        history.get((idx - 1) as usize).copied().unwrap_or(false)
    };
    let members: Vec<u64> = (1..=window).filter(|&n| member(n)).collect();
    SpectrumWindow {
        element: g,
        element_order: group.element_order(g),
        window,
        gord: members.first().copied(),
        preperiod: cycle.map(|c| c.0),
        period: cycle.map(|c| c.1),
        members,
    }
}

/// The three equivalent conditions for generalized torsion order two, computed separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Gord2Triple {
    pub two_in_spectrum: bool,
    pub conjugate_to_inverse: bool,
    pub square_root_form: bool,
}

impl Gord2Triple {
    pub fn agrees(&self) -> bool {
        self.two_in_spectrum == self.conjugate_to_inverse && self.conjugate_to_inverse == self.square_root_form
    }
}

pub fn gord2_characterization_check(group: &FiniteGroup, g: Elem) -> Gord2Triple {
    // 2 ∈ t(g): g · x g x^-1 = 1 for some x, by direct scan
    let two_in_spectrum = (0..group.order()).any(|x| group.mul(g, group.conjugate(g, x)) == 0);
    let conjugate_to_inverse = group.are_conjugate(g, group.inv(g));
    // g = y x^-1 with y^2 = x^2, i.e. y = g x
    let square_root_form = (0..group.order()).any(|x| {
        let y = group.mul(g, x);
        group.mul(y, y) == group.mul(x, x)
    });
    Gord2Triple { two_in_spectrum, conjugate_to_inverse, square_root_form }
}

/// For a `p`-group: every non-identity element has window membership inside `pℕ`.
/// Returns the first offending element, if any.
pub fn p_group_check(group: &FiniteGroup, p: u64, window: u64) -> Result<(), Elem> {
    let cc = group.conjugacy_classes();
    for cls in &cc.classes {
        let g = cls[0];
        if g == 0 {
            continue;
        }
        if t_window(group, g, window).members.iter().any(|n| n % p != 0) {
            return Err(g);
        }
    }
    Ok(())
}
