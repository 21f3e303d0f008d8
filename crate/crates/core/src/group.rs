//! Finite groups given by Cayley tables.
//!
//! Elements are dense indices `0..order` and the identity is always index 0.
//! Subgroups, cosets, double cosets, conjugation and quotients all work on
//! those indices.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest group order accepted by [`GroupTable::from_table`].
pub const MAX_ORDER: usize = 64;

/// A finite group as an indexed Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    name: String,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.name, self.order)
    }
}

impl GroupTable {
    /// Builds a group from a row-major table, `table[g * order + h] = g * h`.
    ///
    /// Checks that the table is a Latin square with identity 0 and that it
    /// is associative.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        Self::from_table_named(order, table, "G".to_string())
    }

    fn from_table_named(order: usize, table: Vec<usize>, name: String) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::GroupTooLarge(order));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        for g in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for h in 0..order {
                let r = table[g * order + h];
                let c = table[h * order + g];
                if row_seen[r] {
                    return Err(Error::InvalidTable(format!("row {g} repeats {r}")));
                }
                if col_seen[c] {
                    return Err(Error::InvalidTable(format!("column {g} repeats {c}")));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
            if table[g] != g || table[g * order] != g {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    let bc = table[b * order + c];
                    if table[ab * order + c] != table[a * order + bc] {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![0; order];
        for g in 0..order {
            inv[g] = (0..order).find(|&h| table[g * order + h] == 0).unwrap();
        }
        Ok(GroupTable {
            order,
            mul: table,
            inv,
            name,
        })
    }

    /// Cyclic group of order `n`, element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
        Self::from_table_named(n, table, format!("Z{n}"))
    }

    /// Dihedral group of order `2n`; index `k + n*s` stands for `r^k s^s`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTable("dihedral group needs n >= 1".into()));
        }
        let order = 2 * n;
        let mut table = vec![0; order * order];
        for a in 0..order {
            let (ka, sa) = (a % n, a / n);
            for b in 0..order {
                let (kb, sb) = (b % n, b / n);
                let k = if sa == 0 { (ka + kb) % n } else { (ka + n - kb) % n };
                table[a * order + b] = k + n * ((sa + sb) % 2);
            }
        }
        Self::from_table_named(order, table, format!("D{n}"))
    }

    /// Symmetric group on `n <= 4` points.
    ///
    /// Elements are permutations listed lexicographically by their image
    /// tuples (so the identity comes first). Products compose left to
    /// right: `(s * t)(x) = t(s(x))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 4 {
            return Err(Error::OutOfRange(format!("symmetric group S{n} not supported")));
        }
        let perms = permutations(n);
        let order = perms.len();
        let mut table = vec![0; order * order];
        for (a, s) in perms.iter().enumerate() {
            for (b, t) in perms.iter().enumerate() {
                let st: Vec<usize> = (0..n).map(|x| t[s[x]]).collect();
                table[a * order + b] = perms.iter().position(|p| *p == st).unwrap();
            }
        }
        Self::from_table_named(order, table, format!("S{n}"))
    }

    /// Direct product; the pair `(a, b)` has index `a * |B| + b`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<Self> {
        let order = a.order * b.order;
        if order > MAX_ORDER {
            return Err(Error::GroupTooLarge(order));
        }
        let mut table = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let first = a.mul(x / b.order, y / b.order);
                let second = b.mul(x % b.order, y % b.order);
                table[x * order + y] = first * b.order + second;
            }
        }
        Self::from_table_named(order, table, format!("{}x{}", a.name, b.name))
    }

    /// Looks up a catalog group: `Z<n>`, `D<n>`, `S<n>` (n <= 4), `V4`, and
    /// direct products written with `x`, e.g. `Z2xZ4`.
    pub fn catalog(name: &str) -> Result<Self> {
        let name = name.trim();
        if name.contains('x') {
            let mut parts = name.split('x');
            let first = parts.next().unwrap();
            let mut acc = Self::catalog(first)?;
            for part in parts {
                acc = Self::direct_product(&acc, &Self::catalog(part)?)?;
            }
            return Ok(acc);
        }
        if name == "V4" {
            let z2 = Self::cyclic(2)?;
            let mut v = Self::direct_product(&z2, &z2)?;
            v.name = "V4".to_string();
            return Ok(v);
        }
        let unknown = || Error::UnknownCatalog(name.to_string());
        let (kind, rest) = name.split_at(1.min(name.len()));
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match kind {
            "Z" if n >= 1 => Self::cyclic(n),
            "D" if n >= 1 => Self::dihedral(n),
            "S" => Self::symmetric(n),
            _ => Err(unknown()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Row-major Cayley table.
    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    pub fn check_index(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: g,
                order: self.order,
            })
        }
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|g| self.element_order(g))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `x^-1 * h * x`.
    pub fn conjugate(&self, h: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), h), x)
    }

    /// Smallest subgroup containing `generators`.
    pub fn subgroup_closure(&self, generators: &[usize]) -> Result<Subgroup> {
        for &g in generators {
            self.check_index(g)?;
        }
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elems = vec![0usize];
        let mut frontier: Vec<usize> = Vec::new();
        for &g in generators {
            if !member[g] {
                member[g] = true;
                elems.push(g);
                frontier.push(g);
            }
        }
        while let Some(x) = frontier.pop() {
            for i in 0..elems.len() {
                for y in [self.mul(elems[i], x), self.mul(x, elems[i])] {
                    if !member[y] {
                        member[y] = true;
                        elems.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        Ok(Subgroup::from_members(member))
    }

    /// Every subgroup, sorted by order and then by element list.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut found: Vec<Subgroup> = vec![Subgroup::trivial(self)];
        let mut i = 0;
        while i < found.len() {
            let base = found[i].elements().to_vec();
            for g in self.elements() {
                if found[i].contains(g) {
                    continue;
                }
                let mut gens = base.clone();
                gens.push(g);
                let s = self.subgroup_closure(&gens).unwrap();
                if !found.contains(&s) {
                    found.push(s);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.elements().cmp(b.elements())));
        found
    }

    fn check_subgroup(&self, k: &Subgroup) -> Result<()> {
        if k.parent_order() != self.order {
            return Err(Error::NotSubgroup(format!(
                "subgroup of a group of order {}, expected {}",
                k.parent_order(),
                self.order
            )));
        }
        Ok(())
    }

    /// Left cosets `gK`, each sorted, listed by their minimal element.
    pub fn left_cosets(&self, k: &Subgroup) -> Result<Vec<Vec<usize>>> {
        self.check_subgroup(k)?;
        let mut seen = vec![false; self.order];
        let mut cosets = Vec::new();
        for g in self.elements() {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = k.elements().iter().map(|&x| self.mul(g, x)).collect();
            coset.sort_unstable();
            for &x in &coset {
                seen[x] = true;
            }
            cosets.push(coset);
        }
        Ok(cosets)
    }

    /// Index of the left coset of `k` containing each element, with cosets
    /// numbered as in [`GroupTable::left_cosets`].
    pub fn left_coset_labels(&self, k: &Subgroup) -> Result<Vec<usize>> {
        let cosets = self.left_cosets(k)?;
        let mut label = vec![0; self.order];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                label[x] = i;
            }
        }
        Ok(label)
    }

    /// The double coset `H g K` as a sorted element list.
    pub fn double_coset(&self, h: &Subgroup, g: usize, k: &Subgroup) -> Vec<usize> {
        let mut member = vec![false; self.order];
        for &a in h.elements() {
            let ag = self.mul(a, g);
            for &b in k.elements() {
                member[self.mul(ag, b)] = true;
            }
        }
        (0..self.order).filter(|&x| member[x]).collect()
    }

    /// Partition of the group into `H`-`K` double cosets.
    pub fn double_cosets(&self, h: &Subgroup, k: &Subgroup) -> Result<DoubleCosetPartition> {
        self.check_subgroup(h)?;
        self.check_subgroup(k)?;
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        let mut representatives = Vec::new();
        for g in self.elements() {
            if class_of[g] != usize::MAX {
                continue;
            }
            let class = self.double_coset(h, g, k);
            for &x in &class {
                class_of[x] = classes.len();
            }
            representatives.push(g);
            classes.push(class);
        }
        Ok(DoubleCosetPartition {
            h: h.clone(),
            k: k.clone(),
            classes,
            representatives,
            class_of,
        })
    }

    /// `{x^-1 h x : h in H}`.
    pub fn conjugate_subgroup(&self, x: usize, h: &Subgroup) -> Result<Subgroup> {
        self.check_index(x)?;
        self.check_subgroup(h)?;
        let mut member = vec![false; self.order];
        for &a in h.elements() {
            member[self.conjugate(a, x)] = true;
        }
        Ok(Subgroup::from_members(member))
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        self.elements()
            .all(|x| n.elements().iter().all(|&a| n.contains(self.conjugate(a, x))))
    }

    /// Quotient by a normal subgroup together with the projection map.
    ///
    /// Cosets are numbered by their minimal element, so the coset `N` itself
    /// becomes the identity 0.
    pub fn quotient_group(&self, n: &Subgroup) -> Result<(GroupTable, Vec<usize>)> {
        self.check_subgroup(n)?;
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let cosets = self.left_cosets(n)?;
        let labels = self.left_coset_labels(n)?;
        let q = cosets.len();
        let mut table = vec![0; q * q];
        for (i, ci) in cosets.iter().enumerate() {
            for (j, cj) in cosets.iter().enumerate() {
                table[i * q + j] = labels[self.mul(ci[0], cj[0])];
            }
        }
        let name = format!("{}/N{}", self.name, n.len());
        Ok((Self::from_table_named(q, table, name)?, labels))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A subgroup of a parent group, stored as a sorted element list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
    position: Vec<usize>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl Subgroup {
    /// Validates that `elements` form a subgroup of `g`.
    pub fn new(g: &GroupTable, elements: &[usize]) -> Result<Self> {
        let mut member = vec![false; g.order()];
        for &x in elements {
            g.check_index(x)?;
            member[x] = true;
        }
        if !member[0] {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for a in 0..g.order() {
            if !member[a] {
                continue;
            }
            if !member[g.inv(a)] {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for b in 0..g.order() {
                if member[b] && !member[g.mul(a, b)] {
                    return Err(Error::NotSubgroup(format!("not closed: {a} * {b}")));
                }
            }
        }
        Ok(Self::from_members(member))
    }

    fn from_members(member: Vec<bool>) -> Self {
        let elements: Vec<usize> = (0..member.len()).filter(|&x| member[x]).collect();
        let mut position = vec![usize::MAX; member.len()];
        for (i, &x) in elements.iter().enumerate() {
            position[x] = i;
        }
        Subgroup { elements, position }
    }

    pub fn trivial(g: &GroupTable) -> Self {
        let mut member = vec![false; g.order()];
        member[0] = true;
        Self::from_members(member)
    }

    pub fn whole(g: &GroupTable) -> Self {
        Self::from_members(vec![true; g.order()])
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.position.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.position.len() && self.position[x] != usize::MAX
    }

    /// Position of `x` in the sorted element list.
    #[inline]
    pub fn position(&self, x: usize) -> Option<usize> {
        match self.position.get(x) {
            Some(&p) if p != usize::MAX => Some(p),
            _ => None,
        }
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let member = (0..self.parent_order())
            .map(|x| self.contains(x) && other.contains(x))
            .collect();
        Self::from_members(member)
    }

    /// The subgroup as a group in its own right, re-indexed by position.
    ///
    /// Returns the table and the embedding `position -> parent element`.
    pub fn as_group(&self, g: &GroupTable) -> Result<(GroupTable, Vec<usize>)> {
        let n = self.len();
        let mut table = vec![0; n * n];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                table[i * n + j] = self
                    .position(g.mul(a, b))
                    .ok_or_else(|| Error::NotSubgroup("not closed".into()))?;
            }
        }
        let name = format!("{}<{}>", g.name(), n);
        Ok((GroupTable::from_table_named(n, table, name)?, self.elements.clone()))
    }
}

/// `H`-`K` double cosets of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetPartition {
    pub h: Subgroup,
    pub k: Subgroup,
    /// Sorted element lists, one per double coset.
    pub classes: Vec<Vec<usize>>,
    /// Minimal element of each class.
    pub representatives: Vec<usize>,
    /// Class index of every group element.
    pub class_of: Vec<usize>,
}

impl DoubleCosetPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}
