use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::{self, Perm};
use super::GroupError;
use crate::config::{GROUP_ORDER_CAP, TABLE_ORDER_CAP};

/// Index of a group element; `0` is the identity.
pub type Elem = usize;

#[derive(Debug, Clone)]
enum Storage {
    Table(Vec<u16>),
    Perms { perms: Vec<Perm>, index: HashMap<Perm, u32> },
}

/// Partition of a group into conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub class_of: Vec<u32>,
    pub classes: Vec<Vec<Elem>>,
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    storage: Storage,
    inverse: Vec<u32>,
    generators: Vec<Elem>,
    labels: Vec<String>,
    classes: OnceLock<ConjugacyClasses>,
}

impl FiniteGroup {
    /// Builds a table from a trusted multiplication on `0..order`, identity `0`.
    pub(crate) fn from_fn(
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        generators: Vec<Elem>,
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::InvalidParameters("empty group".into()));
        }
        if order > TABLE_ORDER_CAP {
            return Err(GroupError::OrderCapExceeded { cap: TABLE_ORDER_CAP });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b) as u16);
            }
        }
        Self::with_table(order, table, generators, labels)
    }

    fn with_table(order: usize, table: Vec<u16>, generators: Vec<Elem>, labels: Vec<String>) -> Result<Self, GroupError> {
        let mut inverse = vec![u32::MAX; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            match row.iter().position(|&x| x == 0) {
                Some(b) => inverse[a] = b as u32,
                None => return Err(GroupError::InvalidTable(format!("element {a} has no inverse"))),
            }
        }
        let mut g = FiniteGroup {
            order,
            storage: Storage::Table(table),
            inverse,
            generators,
            labels,
            classes: OnceLock::new(),
        };
        if g.generators.is_empty() && order > 1 {
            g.generators = g.greedy_generators();
        }
        Ok(g)
    }

    /// Checks a user-supplied Cayley table: identity `0`, Latin square,
    /// inverses, and associativity (fully up to order 256, otherwise on 1000
    /// random triples).
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if n > TABLE_ORDER_CAP {
            return Err(GroupError::OrderCapExceeded { cap: TABLE_ORDER_CAP });
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!("row {a} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::InvalidTable(format!("row {a} is not a permutation of 0..{n}")));
                }
                table.push(x as u16);
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for a in 0..n {
                if std::mem::replace(&mut seen[table[a * n + b] as usize], true) {
                    return Err(GroupError::InvalidTable(format!("column {b} repeats an entry")));
                }
            }
        }
        for a in 0..n {
            if table[a] as usize != a || table[a * n] as usize != a {
                return Err(GroupError::InvalidTable("0 is not the identity".into()));
            }
        }
        let g = Self::with_table(n, table, Vec::new(), Vec::new())?;
        for a in 0..n {
            let b = g.inverse[a] as usize;
            if g.mul(b, a) != 0 {
                return Err(GroupError::InvalidTable(format!("left and right inverses of {a} differ")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(GroupError::InvalidTable(format!("not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..1000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(GroupError::InvalidTable(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
        Ok(g)
    }

    /// Closure of permutations given in cycle notation. Generators are labelled `g0, g1, ...`.
    pub fn from_permutations(generators: &[&str]) -> Result<Self, GroupError> {
        let degree = generators.iter().map(|s| perm::max_point(s)).max().unwrap_or(0).max(1);
        let perms = generators.iter().map(|s| perm::parse_cycles(s, degree)).collect::<Result<Vec<_>, _>>()?;
        Self::from_perm_arrays(perms)
    }

    pub fn from_perm_arrays(generators: Vec<Perm>) -> Result<Self, GroupError> {
        let degree = generators.first().map_or(1, Vec::len);
        if generators.iter().any(|g| g.len() != degree || !perm::is_bijection(g)) {
            return Err(GroupError::InvalidPermutation("generators must be bijections of one common degree".into()));
        }
        let id: Perm = (0..degree as u16).collect();
        let mut perms = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let p = perm::compose(&perms[i], g);
                if !index.contains_key(&p) {
                    if perms.len() >= GROUP_ORDER_CAP {
                        return Err(GroupError::OrderCapExceeded { cap: GROUP_ORDER_CAP });
                    }
                    index.insert(p.clone(), perms.len() as u32);
                    queue.push_back(perms.len());
                    perms.push(p);
                }
            }
        }
        let gen_idx: Vec<Elem> = generators.iter().map(|g| index[g] as usize).collect();
        let labels = (0..generators.len()).map(|i| format!("g{i}")).collect();
        let order = perms.len();
        if order <= TABLE_ORDER_CAP {
            let table = (0..order)
                .flat_map(|a| (0..order).map(move |b| (a, b)))
                .map(|(a, b)| index[&perm::compose(&perms[a], &perms[b])] as u16)
                .collect();
            return Self::with_table(order, table, gen_idx, labels);
        }
        let inverse = perms.iter().map(|p| index[&perm::invert(p)]).collect();
        Ok(FiniteGroup {
            order,
            storage: Storage::Perms { perms, index },
            inverse,
            generators: gen_idx,
            labels,
            classes: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.storage {
            Storage::Table(t) => t[a * self.order + b] as usize,
            Storage::Perms { perms, index } => index[&perm::compose(&perms[a], &perms[b])] as usize,
        }
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as usize
    }

    /// `x a x^-1`.
    pub fn conjugate(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Element named by a word in the generator labels, e.g. `"a b^-1 a^2"`
    /// or `"a*b"`; labels may also be juxtaposed when unambiguous. `"1"` and
    /// `"e"` name the identity, and a bare number is an element index prefixed by `#`.
    pub fn element_from_word(&self, word: &str) -> Result<Elem, GroupError> {
        let unknown = || GroupError::UnknownElement(word.to_string());
        let w = word.trim();
        if w == "1" || w == "e" || w.is_empty() {
            return Ok(0);
        }
        if let Some(idx) = w.strip_prefix('#') {
            let i: usize = idx.parse().map_err(|_| unknown())?;
            return if i < self.order { Ok(i) } else { Err(unknown()) };
        }
        let chars: Vec<char> = w.chars().collect();
        let mut pos = 0;
        let mut acc = 0;
        while pos < chars.len() {
            if chars[pos].is_whitespace() || chars[pos] == '*' || chars[pos] == '.' {
                pos += 1;
                continue;
            }
            let rest: String = chars[pos..].iter().collect();
            let (li, label) = self
                .labels
                .iter()
                .enumerate()
                .filter(|(_, l)| rest.starts_with(l.as_str()))
                .max_by_key(|(_, l)| l.len())
                .ok_or_else(unknown)?;
            pos += label.chars().count();
            let mut exp = 1i64;
            if chars.get(pos) == Some(&'^') {
                pos += 1;
                let start = pos;
                if chars.get(pos) == Some(&'-') {
                    pos += 1;
                }
                while chars.get(pos).is_some_and(char::is_ascii_digit) {
                    pos += 1;
                }
                exp = chars[start..pos].iter().collect::<String>().parse().map_err(|_| unknown())?;
            }
            acc = self.mul(acc, self.pow(self.generators[li], exp));
        }
        Ok(acc)
    }

    fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0usize];
        for cand in 1..self.order {
            if inside[cand] {
                continue;
            }
            gens.push(cand);
            // subgroup generated by gens: close under right multiplication
            let mut queue: VecDeque<Elem> = members.iter().copied().collect();
            while let Some(x) = queue.pop_front() {
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !inside[y] {
                        inside[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        gens
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let mut class_of = vec![u32::MAX; self.order];
            let mut classes = Vec::new();
            for start in 0..self.order {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                class_of[start] = id;
                let mut class = vec![start];
                let mut i = 0;
                while i < class.len() {
                    let x = class[i];
                    for &s in &self.generators {
                        let y = self.conjugate(x, s);
                        if class_of[y] == u32::MAX {
                            class_of[y] = id;
                            class.push(y);
                        }
                    }
                    i += 1;
                }
                class.sort_unstable();
                classes.push(class);
            }
            ConjugacyClasses { class_of, classes }
        })
    }

    /// Orbit search for `h = x g x^-1`, independent of the cached classes.
    pub fn are_conjugate(&self, g: Elem, h: Elem) -> bool {
        let mut seen = vec![false; self.order];
        seen[g] = true;
        let mut queue = VecDeque::from([g]);
        while let Some(x) = queue.pop_front() {
            if x == h {
                return true;
            }
            for &s in &self.generators {
                let y = self.conjugate(x, s);
                if !std::mem::replace(&mut seen[y], true) {
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Order as `p^k` when the group is a non-trivial `p`-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        crate::polyring::number::prime_power(self.order as u64).map(|(p, _)| p)
    }

    // Built-in families.

    pub fn trivial() -> Self {
        Self::from_fn(1, |_, _| 0, Vec::new(), Vec::new()).expect("order 1")
    }

    /// `C_n = <a>`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameters("cyclic group of order 0".into()));
        }
        let gens = if n > 1 { vec![1] } else { Vec::new() };
        let labels = if n > 1 { vec!["a".to_string()] } else { Vec::new() };
        Self::from_fn(n, |a, b| (a + b) % n, gens, labels)
    }

    /// `<a, b | a^m, b^s, b a b^-1 = a^-1>`, order `m s`; `a^i b^j` has index `j m + i`.
    pub fn metacyclic(m: usize, s: usize) -> Result<Self, GroupError> {
        if m == 0 || s < 2 || !s.is_multiple_of(2) {
            return Err(GroupError::InvalidParameters(format!("metacyclic({m}, {s}) needs m >= 1 and even s >= 2")));
        }
        let split = |x: usize| (x % m, x / m);
        let mul = |x: usize, y: usize| {
            let ((i, j), (k, l)) = (split(x), split(y));
            let k = if j % 2 == 1 { (m - k) % m } else { k };
            ((j + l) % s) * m + (i + k) % m
        };
        let (gens, labels) = if m > 1 {
            (vec![1, m], vec!["a".into(), "b".into()])
        } else {
            (vec![m], vec!["b".into()])
        };
        Self::from_fn(m * s, mul, gens, labels)
    }

    /// Dihedral group of order `2n`, rotation `a`, reflection `b`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        Self::metacyclic(n, 2)
    }

    /// `<a, x | a^{2n}, x^2 = a^n, x a x^-1 = a^-1>`, order `4n`.
    pub fn dicyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameters("dicyclic(0)".into()));
        }
        let m = 2 * n;
        let split = |x: usize| (x % m, x / m);
        let mul = |x: usize, y: usize| {
            let ((k, j), (l, i)) = (split(x), split(y));
            if j == 0 {
                i * m + (k + l) % m
            } else {
                let a = (k + m - l) % m;
                if i == 0 {
                    m + a
                } else {
                    (a + n) % m
                }
            }
        };
        Self::from_fn(4 * n, mul, vec![1, m], vec!["a".into(), "x".into()])
    }

    /// Quaternion group of order 8: `i = a`, `j = x`.
    pub fn quaternion() -> Self {
        Self::dicyclic(2).expect("order 8")
    }

    /// Upper unitriangular 3x3 matrices over `Z/p`, order `p^3`, generators `x`, `y`.
    pub fn heisenberg(p: usize) -> Result<Self, GroupError> {
        if p < 2 {
            return Err(GroupError::InvalidParameters("heisenberg needs p >= 2".into()));
        }
        let split = |v: usize| (v % p, (v / p) % p, v / (p * p));
        let mul = |u: usize, v: usize| {
            let ((a, b, c), (x, y, z)) = (split(u), split(v));
            (a + x) % p + ((b + y) % p) * p + ((c + z + a * y) % p) * p * p
        };
        Self::from_fn(p * p * p, mul, vec![1, p], vec!["x".into(), "y".into()])
    }

    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        match n {
            0 | 1 => Ok(Self::trivial()),
            2 => Self::from_permutations(&["(1 2)"]),
            _ => Self::from_permutations(&[&format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")), "(1 2)"]),
        }
    }

    pub fn alternating(n: usize) -> Result<Self, GroupError> {
        if n < 3 {
            return Ok(Self::trivial());
        }
        let gens: Vec<String> = (3..=n).map(|k| format!("(1 2 {k})")).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        Self::from_permutations(&refs)
    }

    /// `G x H`, with `(g, h)` at index `g |H| + h`; labels get suffixes `_1`, `_2`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self, GroupError> {
        let nh = h.order;
        let order = g.order.checked_mul(nh).ok_or(GroupError::OrderCapExceeded { cap: TABLE_ORDER_CAP })?;
        if order > TABLE_ORDER_CAP {
            return Err(GroupError::OrderCapExceeded { cap: TABLE_ORDER_CAP });
        }
        let mul = |x: usize, y: usize| g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
        let mut gens: Vec<Elem> = g.generators.iter().map(|&a| a * nh).collect();
        gens.extend(h.generators.iter().copied());
        let mut labels: Vec<String> = g.labels.iter().map(|l| format!("{l}_1")).collect();
        labels.extend(h.labels.iter().map(|l| format!("{l}_2")));
        if labels.len() != gens.len() {
            labels = (0..gens.len()).map(|i| format!("g{i}")).collect();
        }
        Self::from_fn(order, mul, gens, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_group(g: &FiniteGroup) {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(0, a), a);
            for b in 0..n.min(20) {
                for c in 0..n.min(20) {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn permutation_closure() {
        let d10 = FiniteGroup::from_permutations(&["(1 2 3 4 5)", "(2 5)(3 4)"]).unwrap();
        assert_eq!(d10.order(), 10);
        assert!(!d10.is_abelian());
        assert_eq!(FiniteGroup::from_permutations(&["()"]).unwrap().order(), 1);
        let c4 = FiniteGroup::from_permutations(&["(1 2 3 4)"]).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        assert_eq!(FiniteGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(FiniteGroup::alternating(5).unwrap().order(), 60);
        check_group(&d10);
    }

    #[test]
    fn large_permutation_group_uses_perm_storage() {
        let s7 = FiniteGroup::symmetric(7).unwrap();
        assert_eq!(s7.order(), 5040);
        let g = s7.generators()[0];
        assert_eq!(s7.element_order(g), 7);
        assert_eq!(s7.conjugacy_classes().classes.len(), 15);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(FiniteGroup::symmetric(8), Err(GroupError::OrderCapExceeded { .. })));
        assert!(matches!(FiniteGroup::cyclic(5000), Err(GroupError::OrderCapExceeded { .. })));
    }

    #[test]
    fn families() {
        let m = FiniteGroup::metacyclic(5, 2).unwrap();
        assert_eq!(m.order(), 10);
        let a = m.element_from_word("a").unwrap();
        let b = m.element_from_word("b").unwrap();
        assert_eq!(m.element_order(a), 5);
        assert_eq!(m.conjugate(a, b), m.inv(a));
        check_group(&m);
        assert_eq!(FiniteGroup::metacyclic(1, 2).unwrap().order(), 2);
        assert!(FiniteGroup::metacyclic(1, 2).unwrap().is_abelian());
        assert_eq!(FiniteGroup::metacyclic(4, 4).unwrap().order(), 16);
        assert!(FiniteGroup::metacyclic(4, 3).is_err());

        let q = FiniteGroup::quaternion();
        check_group(&q);
        let i = q.element_from_word("a").unwrap();
        let j = q.element_from_word("x").unwrap();
        assert_eq!(q.element_order(i), 4);
        assert_eq!(q.element_order(j), 4);
        assert_eq!(q.mul(i, i), q.mul(j, j));
        assert_eq!(q.conjugacy_classes().classes.len(), 5);

        let h = FiniteGroup::heisenberg(3).unwrap();
        check_group(&h);
        assert_eq!(h.conjugacy_classes().classes.len(), 11);
        let d = FiniteGroup::direct_product(&FiniteGroup::quaternion(), &FiniteGroup::cyclic(2).unwrap()).unwrap();
        assert_eq!(d.order(), 16);
        check_group(&d);
        assert_eq!(FiniteGroup::dihedral(4).unwrap().conjugacy_classes().classes.len(), 5);
    }

    #[test]
    fn words() {
        let m = FiniteGroup::metacyclic(5, 2).unwrap();
        let x = m.element_from_word("a b^-1 a^2").unwrap();
        let a = m.element_from_word("a").unwrap();
        let b = m.element_from_word("b").unwrap();
        assert_eq!(x, m.mul(m.mul(a, m.inv(b)), m.pow(a, 2)));
        assert_eq!(m.element_from_word("ab").unwrap(), m.mul(a, b));
        assert_eq!(m.element_from_word("e").unwrap(), 0);
        assert!(m.element_from_word("c").is_err());
        let p = FiniteGroup::from_permutations(&["(1 2 3)", "(1 2)"]).unwrap();
        assert_eq!(p.element_order(p.element_from_word("g0").unwrap()), 3);
        assert_eq!(p.element_from_word("#2").unwrap(), 2);
    }

    #[test]
    fn table_validation() {
        let z3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let g = FiniteGroup::from_table(z3).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.generators().len(), 1);
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        // Latin square that is not associative
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(bad), Err(GroupError::InvalidTable(_))));
    }
}
