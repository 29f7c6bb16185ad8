//! Finite groups as multiplication tables.
//!
//! Everything downstream (local groups of a complex of groups, coset
//! bijections of a covering) consumes a [`GroupTable`]: an indexed element
//! set with display names and a total multiplication map. Constructors cover
//! the groups that actually occur over our scwols: cyclic groups, direct
//! products, dihedral groups with canonical alternating-word element names,
//! and the spherical special subgroups determined by a bipartite graph.

use std::collections::BTreeSet;
use std::fmt;

use crate::complexes::BipartiteGraph;

/// Index of an element inside one [`GroupTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

/// What a table was built as; used for display and sanity checks only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Trivial,
    Cyclic(usize),
    Product,
    Dihedral { m: usize },
}

/// A finite group given by its full multiplication table.
///
/// Element 0 is always the identity. Tables are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    element_names: Vec<String>,
    mul_table: Vec<usize>,
    kind: GroupKind,
}

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("group axiom violated in table `{table}`: {detail}")]
    AxiomViolation { table: String, detail: String },
    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("word length {k} out of range 1..={m}")]
    WordLengthOutOfRange { k: usize, m: usize },
    #[error("elements {0:?} and {1:?} are not distinct generators of this dihedral table")]
    BadDihedralGenerators(Elem, Elem),
    #[error("no element named `{0}` in table `{1}`")]
    NoSuchElement(String, String),
    #[error("map is not a monomorphism: {0}")]
    NotAMonomorphism(String),
}

impl GroupTable {
    fn new(name: String, element_names: Vec<String>, mul_table: Vec<usize>, kind: GroupKind) -> Self {
        let t = GroupTable {
            name,
            element_names,
            mul_table,
            kind,
        };
        debug_assert!(t.check_axioms().is_ok());
        t
    }

    pub fn trivial() -> Self {
        GroupTable::new("1".into(), vec!["1".into()], vec![0], GroupKind::Trivial)
    }

    /// Cyclic group of order `n`; the generator is displayed as `gen_name`.
    pub fn cyclic(n: usize, gen_name: &str) -> Self {
        assert!(n >= 1);
        let element_names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => gen_name.to_string(),
                _ => format!("{}^{}", gen_name, k),
            })
            .collect();
        let mut mul_table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul_table[a * n + b] = (a + b) % n;
            }
        }
        let kind = if n == 1 { GroupKind::Trivial } else { GroupKind::Cyclic(n) };
        GroupTable::new(format!("Z{}", n), element_names, mul_table, kind)
    }

    /// Direct product with elementwise-commuting factors. Also returns the
    /// two factor embeddings.
    pub fn product(g1: &GroupTable, g2: &GroupTable) -> (Self, Monomorphism, Monomorphism) {
        let (n1, n2) = (g1.order(), g2.order());
        let n = n1 * n2;
        let idx = |a: usize, b: usize| a * n2 + b;
        let element_names = (0..n1)
            .flat_map(|a| {
                (0..n2).map(move |b| (a, b)).collect::<Vec<_>>()
            })
            .map(|(a, b)| match (a, b) {
                (0, 0) => "1".to_string(),
                (_, 0) => g1.element_names[a].clone(),
                (0, _) => g2.element_names[b].clone(),
                _ => format!("{}{}", g1.element_names[a], g2.element_names[b]),
            })
            .collect();
        let mut mul_table = vec![0; n * n];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        let p = g1.mul_table[a1 * n1 + a2];
                        let q = g2.mul_table[b1 * n2 + b2];
                        mul_table[idx(a1, b1) * n + idx(a2, b2)] = idx(p, q);
                    }
                }
            }
        }
        let table = GroupTable::new(
            format!("{} x {}", g1.name, g2.name),
            element_names,
            mul_table,
            GroupKind::Product,
        );
        let left = Monomorphism {
            map: (0..n1).map(|a| idx(a, 0)).collect(),
        };
        let right = Monomorphism {
            map: (0..n2).map(|b| idx(0, b)).collect(),
        };
        (table, left, right)
    }

    /// Dihedral group of order `2m` on two involutions whose product has
    /// order `m`. Elements are named by their alternating words in the two
    /// generators; the longest word is written starting with `first_gen`.
    pub fn dihedral(m: usize, first_gen: &str, second_gen: &str) -> Self {
        assert!(m >= 2);
        let n = 2 * m;
        // Realize elements as r^a s^e with r = xy, s = x, so
        // (a,e)*(b,f) = (a + (-1)^e b, e xor f).
        let code = |a: usize, e: usize| e * m + a;
        let mut mul_table = vec![0; n * n];
        for a in 0..m {
            for e in 0..2 {
                for b in 0..m {
                    for f in 0..2 {
                        let c = if e == 0 { (a + b) % m } else { (a + m - b % m) % m };
                        mul_table[code(a, e) * n + code(b, f)] = code(c, e ^ f);
                    }
                }
            }
        }
        // x = s = (0,1); y = s r = r^{-1} s = (m-1, 1).
        let x = code(0, 1);
        let y = code(m - 1, 1);
        let mut element_names = vec![String::new(); n];
        element_names[0] = "1".into();
        let mut word = 0usize; // current product
        let mut name = String::new();
        for k in 1..=m {
            let letter = if k % 2 == 1 { x } else { y };
            word = mul_table[word * n + letter];
            name.push_str(if k % 2 == 1 { first_gen } else { second_gen });
            element_names[word] = name.clone();
        }
        let mut word = 0usize;
        let mut name = String::new();
        for k in 1..m {
            let letter = if k % 2 == 1 { y } else { x };
            word = mul_table[word * n + letter];
            name.push_str(if k % 2 == 1 { second_gen } else { first_gen });
            element_names[word] = name.clone();
        }
        debug_assert!(element_names.iter().all(|s| !s.is_empty()));
        GroupTable::new(
            format!("D{}({},{})", m, first_gen, second_gen),
            element_names,
            mul_table,
            GroupKind::Dihedral { m },
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.element_names.len()
    }

    pub fn identity(&self) -> Elem {
        Elem(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order()).map(Elem)
    }

    pub fn element_name(&self, e: Elem) -> &str {
        &self.element_names[e.0]
    }

    pub fn element_by_name(&self, name: &str) -> Result<Elem, GroupError> {
        self.element_names
            .iter()
            .position(|n| n == name)
            .map(Elem)
            .ok_or_else(|| GroupError::NoSuchElement(name.into(), self.name.clone()))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul_table[a.0 * self.order() + b.0])
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.elements()
            .find(|&b| self.mul(a, b) == Elem(0))
            .expect("every element of a group table has an inverse")
    }

    /// Exhaustive group-axiom check: identity, inverses, associativity over
    /// all triples. Intended for tables of order at most 64.
    pub fn check_axioms(&self) -> Result<(), GroupError> {
        let n = self.order();
        let fail = |detail: String| {
            Err(GroupError::AxiomViolation {
                table: self.name.clone(),
                detail,
            })
        };
        if self.mul_table.len() != n * n {
            return fail("multiplication table has wrong size".into());
        }
        if self.mul_table.iter().any(|&v| v >= n) {
            return fail("multiplication table entry out of range".into());
        }
        for a in 0..n {
            if self.mul_table[a] != a || self.mul_table[a * n] != a {
                return fail(format!("element 0 is not an identity at {}", a));
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| self.mul_table[a * n + b] == 0) {
                return fail(format!("element {} has no inverse", a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = self.mul_table[self.mul_table[a * n + b] * n + c];
                    let right = self.mul_table[a * n + self.mul_table[b * n + c]];
                    if left != right {
                        return fail(format!("associativity fails on ({},{},{})", a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that `subset` is closed under multiplication and inverses and
    /// contains the identity.
    pub fn verify_subgroup(&self, subset: &[Elem]) -> Result<(), GroupError> {
        let set: BTreeSet<Elem> = subset.iter().copied().collect();
        if !set.contains(&Elem(0)) {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        for &a in &set {
            if !set.contains(&self.inv(a)) {
                return Err(GroupError::NotASubgroup(format!(
                    "inverse of {} missing",
                    self.element_name(a)
                )));
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup(format!(
                        "{} * {} escapes the subset",
                        self.element_name(a),
                        self.element_name(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// JSON export: element names plus the flattened multiplication table.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "elements": self.element_names,
            "mul": self.mul_table,
        })
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order())
    }
}

/// The alternating product of `k` letters `first second first ...`.
///
/// In a dihedral table of order `2m` the values for `k = 1..=m` together
/// with their mirror images exhaust the nontrivial elements, and only the
/// two words of length `m` coincide.
pub fn dihedral_word(
    table: &GroupTable,
    first: Elem,
    second: Elem,
    k: usize,
) -> Result<Elem, GroupError> {
    let m = match table.kind() {
        GroupKind::Dihedral { m } => *m,
        _ => table.order() / 2,
    };
    if k == 0 || k > m {
        return Err(GroupError::WordLengthOutOfRange { k, m });
    }
    if first == second
        || first == table.identity()
        || second == table.identity()
        || table.mul(first, first) != table.identity()
        || table.mul(second, second) != table.identity()
    {
        return Err(GroupError::BadDihedralGenerators(first, second));
    }
    let mut acc = table.identity();
    for step in 0..k {
        let letter = if step % 2 == 0 { first } else { second };
        acc = table.mul(acc, letter);
    }
    Ok(acc)
}

/// Left cosets `gH`, each sorted, listed by ascending canonical
/// representative (the least element index in the coset).
pub fn left_cosets(table: &GroupTable, subgroup: &[Elem]) -> Result<Vec<Vec<Elem>>, GroupError> {
    table.verify_subgroup(subgroup)?;
    let mut assigned = vec![false; table.order()];
    let mut cosets = Vec::new();
    for g in table.elements() {
        if assigned[g.0] {
            continue;
        }
        let mut coset: Vec<Elem> = subgroup.iter().map(|&h| table.mul(g, h)).collect();
        coset.sort();
        coset.dedup();
        for &e in &coset {
            assigned[e.0] = true;
        }
        cosets.push(coset);
    }
    Ok(cosets)
}

/// Index of the coset of `subgroup` containing `g`, relative to the
/// canonical order produced by [`left_cosets`].
pub fn coset_index(cosets: &[Vec<Elem>], g: Elem) -> usize {
    cosets
        .iter()
        .position(|c| c.contains(&g))
        .expect("cosets partition the group")
}

/// An injective homomorphism between two tables, stored as an element map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomorphism {
    pub map: Vec<usize>,
}

impl Monomorphism {
    pub fn apply(&self, e: Elem) -> Elem {
        Elem(self.map[e.0])
    }

    /// The unique map out of the trivial group.
    pub fn from_trivial() -> Self {
        Monomorphism { map: vec![0] }
    }

    pub fn identity(table: &GroupTable) -> Self {
        Monomorphism {
            map: (0..table.order()).collect(),
        }
    }

    /// Inclusion matching elements of `sub` to equally named elements of `sup`.
    pub fn by_names(sub: &GroupTable, sup: &GroupTable) -> Result<Self, GroupError> {
        let map = sub
            .elements()
            .map(|e| sup.element_by_name(sub.element_name(e)).map(|x| x.0))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomorphism { map })
    }

    /// Checks injectivity and that multiplication and identity are preserved.
    pub fn validate(&self, source: &GroupTable, target: &GroupTable) -> Result<(), GroupError> {
        if self.map.len() != source.order() {
            return Err(GroupError::NotAMonomorphism("domain size mismatch".into()));
        }
        if self.map.iter().any(|&v| v >= target.order()) {
            return Err(GroupError::NotAMonomorphism("image out of range".into()));
        }
        let mut seen = BTreeSet::new();
        for &v in &self.map {
            if !seen.insert(v) {
                return Err(GroupError::NotAMonomorphism("map is not injective".into()));
            }
        }
        if self.map[0] != 0 {
            return Err(GroupError::NotAMonomorphism("identity not preserved".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if self.apply(source.mul(a, b)) != target.mul(self.apply(a), self.apply(b)) {
                    return Err(GroupError::NotAMonomorphism(format!(
                        "multiplication not preserved on ({},{})",
                        source.element_name(a),
                        source.element_name(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `second` after `first`.
    pub fn compose(first: &Monomorphism, second: &Monomorphism) -> Monomorphism {
        Monomorphism {
            map: first.map.iter().map(|&v| second.map[v]).collect(),
        }
    }

    /// The image as a sorted element list in the target.
    pub fn image(&self) -> Vec<Elem> {
        let mut img: Vec<Elem> = self.map.iter().map(|&v| Elem(v)).collect();
        img.sort();
        img
    }

    /// Preimage of a target element, if it lies in the image.
    pub fn preimage(&self, e: Elem) -> Option<Elem> {
        self.map.iter().position(|&v| v == e.0).map(Elem)
    }
}

/// A subset `T` of the generating set with finite special subgroup, together
/// with the order of that subgroup.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SphericalSubset {
    Empty,
    /// A single generator, `x_i` or `y_j`.
    Single(String),
    /// An adjacent pair `(x_i, y_j)`.
    Pair(String, String),
}

impl SphericalSubset {
    pub fn order(&self, m: usize) -> usize {
        match self {
            SphericalSubset::Empty => 1,
            SphericalSubset::Single(_) => 2,
            SphericalSubset::Pair(_, _) => 2 * m,
        }
    }

    /// Proper containment of generator subsets.
    pub fn strictly_contains(&self, other: &SphericalSubset) -> bool {
        match (other, self) {
            (SphericalSubset::Empty, SphericalSubset::Single(_)) => true,
            (SphericalSubset::Empty, SphericalSubset::Pair(_, _)) => true,
            (SphericalSubset::Single(s), SphericalSubset::Pair(x, y)) => s == x || s == y,
            _ => false,
        }
    }

    pub fn label(&self) -> String {
        match self {
            SphericalSubset::Empty => "[]".into(),
            SphericalSubset::Single(s) => format!("[{}]", s),
            SphericalSubset::Pair(x, y) => format!("[{},{}]", x, y),
        }
    }
}

impl fmt::Display for SphericalSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All spherical subsets of the generating set determined by `graph`:
/// the empty set, one singleton per vertex, and one pair per edge.
pub fn spherical_subsets(graph: &BipartiteGraph) -> Vec<SphericalSubset> {
    let mut out = vec![SphericalSubset::Empty];
    for x in graph.left_names() {
        out.push(SphericalSubset::Single(x.to_string()));
    }
    for y in graph.right_names() {
        out.push(SphericalSubset::Single(y.to_string()));
    }
    for (i, j) in graph.edges() {
        out.push(SphericalSubset::Pair(
            graph.left_names()[i].clone(),
            graph.right_names()[j].clone(),
        ));
    }
    out
}

/// The special subgroup `W_T` as a table: trivial, cyclic of order 2, or
/// dihedral of order `2m`, with element names built from the generators.
pub fn special_subgroup(subset: &SphericalSubset, m: usize) -> GroupTable {
    match subset {
        SphericalSubset::Empty => GroupTable::trivial(),
        SphericalSubset::Single(s) => GroupTable::cyclic(2, s),
        SphericalSubset::Pair(x, y) => GroupTable::dihedral(m, x, y),
    }
}

/// Natural inclusion `W_{T'} -> W_T` for `T' ⊆ T`, matching generators by name.
pub fn special_inclusion(
    sub: &SphericalSubset,
    sup: &SphericalSubset,
    m: usize,
) -> Result<Monomorphism, GroupError> {
    let sub_table = special_subgroup(sub, m);
    let sup_table = special_subgroup(sup, m);
    let mono = Monomorphism::by_names(&sub_table, &sup_table)?;
    mono.validate(&sub_table, &sup_table)?;
    Ok(mono)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_cyclic_axioms() {
        GroupTable::trivial().check_axioms().unwrap();
        for n in 1..=8 {
            GroupTable::cyclic(n, "g").check_axioms().unwrap();
        }
    }

    #[test]
    fn dihedral_three_element_names() {
        let d = GroupTable::dihedral(3, "x", "y");
        d.check_axioms().unwrap();
        let mut names: Vec<&str> = d.elements().map(|e| d.element_name(e)).collect();
        names.sort();
        assert_eq!(names, vec!["1", "x", "xy", "xyx", "y", "yx"]);
    }

    #[test]
    fn dihedral_words_exhaust() {
        for m in 2..=6 {
            let d = GroupTable::dihedral(m, "x", "y");
            let x = d.element_by_name("x").unwrap();
            let y = d.element_by_name("y").unwrap();
            let mut seen = BTreeSet::new();
            seen.insert(d.identity());
            for k in 1..=m {
                let wxy = dihedral_word(&d, x, y, k).unwrap();
                let wyx = dihedral_word(&d, y, x, k).unwrap();
                if k < m {
                    assert_ne!(wxy, wyx, "m={} k={}", m, k);
                } else {
                    assert_eq!(wxy, wyx, "longest words must agree, m={}", m);
                }
                seen.insert(wxy);
                seen.insert(wyx);
            }
            assert_eq!(seen.len(), 2 * m);
        }
    }

    #[test]
    fn dihedral_word_k_one_is_first_generator() {
        let d = GroupTable::dihedral(4, "x", "y");
        let x = d.element_by_name("x").unwrap();
        let y = d.element_by_name("y").unwrap();
        assert_eq!(dihedral_word(&d, x, y, 1).unwrap(), x);
        assert!(dihedral_word(&d, x, y, 0).is_err());
        assert!(dihedral_word(&d, x, y, 5).is_err());
        assert!(dihedral_word(&d, x, x, 2).is_err());
    }

    #[test]
    fn cosets_of_reflection_in_dihedral_three() {
        let d = GroupTable::dihedral(3, "x", "y");
        let x = d.element_by_name("x").unwrap();
        let cosets = left_cosets(&d, &[d.identity(), x]).unwrap();
        let named: Vec<Vec<&str>> = cosets
            .iter()
            .map(|c| {
                let mut names: Vec<&str> = c.iter().map(|&e| d.element_name(e)).collect();
                names.sort();
                names
            })
            .collect();
        assert_eq!(named.len(), 3);
        assert!(named.contains(&vec!["1", "x"]));
        assert!(named.contains(&vec!["y", "yx"]));
        assert!(named.contains(&vec!["xy", "xyx"]));
    }

    #[test]
    fn coset_of_whole_group_is_single() {
        let d = GroupTable::dihedral(2, "x", "y");
        let all: Vec<Elem> = d.elements().collect();
        let cosets = left_cosets(&d, &all).unwrap();
        assert_eq!(cosets.len(), 1);
    }

    #[test]
    fn cosets_in_product_z2_z3() {
        let g1 = GroupTable::cyclic(2, "a");
        let g2 = GroupTable::cyclic(3, "b");
        let (prod, left, _right) = GroupTable::product(&g1, &g2);
        prod.check_axioms().unwrap();
        assert_eq!(prod.order(), 6);
        let factor: Vec<Elem> = left.image();
        let cosets = left_cosets(&prod, &factor).unwrap();
        assert_eq!(cosets.len(), 3);
        assert!(cosets.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn not_a_subgroup_is_rejected() {
        let d = GroupTable::dihedral(3, "x", "y");
        let x = d.element_by_name("x").unwrap();
        let y = d.element_by_name("y").unwrap();
        assert!(left_cosets(&d, &[d.identity(), x, y]).is_err());
        assert!(left_cosets(&d, &[x]).is_err());
    }

    #[test]
    fn product_factors_commute() {
        let g1 = GroupTable::cyclic(2, "a");
        let g2 = GroupTable::cyclic(4, "b");
        let (prod, left, right) = GroupTable::product(&g1, &g2);
        for a in g1.elements() {
            for b in g2.elements() {
                let ea = left.apply(a);
                let eb = right.apply(b);
                assert_eq!(prod.mul(ea, eb), prod.mul(eb, ea));
            }
        }
        left.validate(&g1, &prod).unwrap();
        right.validate(&g2, &prod).unwrap();
    }

    #[test]
    fn spherical_subsets_counts() {
        let k23 = BipartiteGraph::complete(2, 3);
        let subsets = spherical_subsets(&k23);
        assert_eq!(subsets.len(), 12); // 1 + 2 + 3 + 6
        let single = BipartiteGraph::complete(1, 1);
        assert_eq!(spherical_subsets(&single).len(), 4);
        let five_edges =
            BipartiteGraph::new(2, 3, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)]).unwrap();
        assert_eq!(spherical_subsets(&five_edges).len(), 1 + 2 + 3 + 5);
    }

    #[test]
    fn spherical_subset_orders() {
        let m = 5;
        assert_eq!(SphericalSubset::Empty.order(m), 1);
        assert_eq!(SphericalSubset::Single("x1".into()).order(m), 2);
        assert_eq!(
            SphericalSubset::Pair("x1".into(), "y2".into()).order(m),
            10
        );
    }

    #[test]
    fn special_inclusion_is_injective() {
        let sub = SphericalSubset::Single("x1".into());
        let sup = SphericalSubset::Pair("x1".into(), "y2".into());
        let mono = special_inclusion(&sub, &sup, 3).unwrap();
        let sub_t = special_subgroup(&sub, 3);
        let sup_t = special_subgroup(&sup, 3);
        let x_sub = sub_t.element_by_name("x1").unwrap();
        let x_sup = sup_t.element_by_name("x1").unwrap();
        assert_eq!(mono.apply(x_sub), x_sup);
    }

    #[test]
    fn monomorphism_composition_validates() {
        let e = SphericalSubset::Empty;
        let s = SphericalSubset::Single("y1".into());
        let p = SphericalSubset::Pair("x2".into(), "y1".into());
        let m = 4;
        let first = special_inclusion(&e, &s, m).unwrap();
        let second = special_inclusion(&s, &p, m).unwrap();
        let comp = Monomorphism::compose(&first, &second);
        comp.validate(&special_subgroup(&e, m), &special_subgroup(&p, m))
            .unwrap();
    }

    #[test]
    fn longest_word_is_central_for_m_four() {
        let d = GroupTable::dihedral(4, "x", "y");
        let w4 = dihedral_word(
            &d,
            d.element_by_name("x").unwrap(),
            d.element_by_name("y").unwrap(),
            4,
        )
        .unwrap();
        for g in d.elements() {
            assert_eq!(d.mul(w4, g), d.mul(g, w4));
        }
    }
}
