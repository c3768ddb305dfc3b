//! Finite groups given by full multiplication tables.
//!
//! Everything is indexed arithmetic over element indices: subgroups are
//! sorted index sets, homomorphisms are image arrays, and all enumerations
//! (subgroups, double cosets, homomorphisisms, automorphisms) are exhaustive
//! within the configured order bound.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on group orders; everything stays in exhaustive regimes.
pub const DEFAULT_ORDER_BOUND: usize = 32;

/// Cap on generator-image searches (`|G|^k` candidates).
pub const DEFAULT_SEARCH_LIMIT: u128 = 4_000_000;

/// A finite group presented by its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    /// Row-major `order x order` table over element indices.
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    element_orders: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

/// Equality ignores the display label: two groups are equal iff they have
/// literally the same table and identity.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.identity == other.identity && self.table == other.table
    }
}
impl Eq for FiniteGroup {}

impl std::hash::Hash for FiniteGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.identity.hash(state);
        self.table.hash(state);
    }
}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    pub fn from_table(label: impl Into<String>, rows: &[Vec<usize>]) -> Result<Arc<Self>> {
        Self::from_table_bounded(label, rows, DEFAULT_ORDER_BOUND)
    }

    pub fn from_table_bounded(
        label: impl Into<String>,
        rows: &[Vec<usize>],
        bound: usize,
    ) -> Result<Arc<Self>> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::TableNotAGroup("empty table".into()));
        }
        if n > bound {
            return Err(Error::OrderBoundExceeded { order: n, bound });
        }
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::TableNotAGroup("table is not square".into()));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::TableNotAGroup(format!(
                        "entry {v} out of range for order {n}"
                    )));
                }
                table.push(v);
            }
        }
        Self::finish(label.into(), n, table)
    }

    /// Internal constructor for derived groups (Weyl quotients, pullback
    /// isotropy, span automorphism groups). Not subject to the order bound;
    /// still validates the axioms in debug builds.
    pub(crate) fn from_valid_table(label: String, n: usize, table: Vec<usize>) -> Arc<Self> {
        debug_assert!(Self::finish(label.clone(), n, table.clone()).is_ok());
        Self::finish(label, n, table).expect("caller guarantees a valid group table")
    }

    fn finish(label: String, n: usize, table: Vec<usize>) -> Result<Arc<Self>> {
        // identity
        let mut identity = None;
        for e in 0..n {
            if (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x) {
                identity = Some(e);
                break;
            }
        }
        let identity =
            identity.ok_or_else(|| Error::TableNotAGroup("no two-sided identity".into()))?;
        // inverses
        let mut inverses = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| table[x * n + y] == identity && table[y * n + x] == identity) {
                Some(y) => inverses[x] = y,
                None => {
                    return Err(Error::TableNotAGroup(format!("element {x} has no inverse")));
                }
            }
        }
        // associativity, by exhaustive loop
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::TableNotAGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut element_orders = vec![0usize; n];
        for x in 0..n {
            let mut p = x;
            let mut k = 1;
            while p != identity {
                p = table[p * n + x];
                k += 1;
            }
            element_orders[x] = k;
        }
        Ok(Arc::new(FiniteGroup {
            label,
            order: n,
            table,
            identity,
            inverses,
            element_orders,
        }))
    }

    pub fn trivial() -> Arc<Self> {
        Self::from_valid_table("C1".into(), 1, vec![0])
    }

    pub fn cyclic(n: usize) -> Result<Arc<Self>> {
        Self::cyclic_bounded(n, DEFAULT_ORDER_BOUND)
    }

    pub fn cyclic_bounded(n: usize, bound: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclic group of order 0".into()));
        }
        if n > bound {
            return Err(Error::OrderBoundExceeded { order: n, bound });
        }
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push((i + j) % n);
            }
        }
        Ok(Self::from_valid_table(format!("C{n}"), n, table))
    }

    /// Symmetric group on `n` letters, `n <= 4`. Elements are the
    /// permutations of `0..n` in lexicographic order; composition is
    /// `(p * q)(i) = p(q(i))`.
    pub fn symmetric(n: usize) -> Result<Arc<Self>> {
        if n == 0 || n > 4 {
            return Err(Error::UnknownPreset(format!(
                "S{n} (symmetric presets range over 1..=4)"
            )));
        }
        let perms = permutations_lex(n);
        let index: HashMap<Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let m = perms.len();
        let mut table = Vec::with_capacity(m * m);
        for p in &perms {
            for q in &perms {
                let composed: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
                table.push(index[&composed]);
            }
        }
        Ok(Self::from_valid_table(format!("S{n}"), m, table))
    }

    /// Dihedral group of order `2n` (named `D<2n>`), generated by a rotation
    /// `r` of order `n` and a reflection `s`. Element `i + n*j` is `r^i s^j`.
    pub fn dihedral(order: usize) -> Result<Arc<Self>> {
        Self::dihedral_bounded(order, DEFAULT_ORDER_BOUND)
    }

    pub fn dihedral_bounded(order: usize, bound: usize) -> Result<Arc<Self>> {
        if order % 2 != 0 || order == 0 {
            return Err(Error::UnknownPreset(format!("D{order} (order must be even)")));
        }
        if order > bound {
            return Err(Error::OrderBoundExceeded { order, bound });
        }
        let n = order / 2;
        let idx = |i: usize, j: usize| i + n * j;
        let mut table = vec![0usize; order * order];
        for a in 0..n {
            for b in 0..2 {
                for c in 0..n {
                    for d in 0..2 {
                        // (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
                        let rot = if b == 0 { (a + c) % n } else { (a + n - c % n) % n };
                        table[idx(a, b) * order + idx(c, d)] = idx(rot, (b + d) % 2);
                    }
                }
            }
        }
        Ok(Self::from_valid_table(format!("D{order}"), order, table))
    }

    /// Direct product, elements indexed by `a * |B| + b`.
    pub fn product(a: &Arc<Self>, b: &Arc<Self>) -> Result<Arc<Self>> {
        Self::product_bounded(a, b, DEFAULT_ORDER_BOUND)
    }

    pub fn product_bounded(a: &Arc<Self>, b: &Arc<Self>, bound: usize) -> Result<Arc<Self>> {
        let n = a.order * b.order;
        if n > bound {
            return Err(Error::OrderBoundExceeded { order: n, bound });
        }
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut table = vec![0usize; n * n];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        table[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
                    }
                }
            }
        }
        Ok(Self::from_valid_table(
            format!("{}x{}", a.label, b.label),
            n,
            table,
        ))
    }

    /// Parses a preset spec: `C<n>`, `S<n>`, `D<2n>`, or an `x`-separated
    /// product of presets, e.g. `C2xS3`.
    pub fn from_preset(spec: &str) -> Result<Arc<Self>> {
        Self::from_preset_bounded(spec, DEFAULT_ORDER_BOUND)
    }

    pub fn from_preset_bounded(spec: &str, bound: usize) -> Result<Arc<Self>> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Err(Error::UnknownPreset(String::new()));
        }
        let mut factors = spec.split('x');
        let mut acc = Self::atom_preset(factors.next().unwrap(), bound)?;
        for part in factors {
            let next = Self::atom_preset(part, bound)?;
            acc = Self::product_bounded(&acc, &next, bound)?;
        }
        Ok(acc)
    }

    fn atom_preset(part: &str, bound: usize) -> Result<Arc<Self>> {
        let part = part.trim();
        let (kind, digits) = part.split_at(1.min(part.len()));
        let n: usize = digits
            .parse()
            .map_err(|_| Error::UnknownPreset(part.to_string()))?;
        match kind {
            "C" | "c" => Self::cyclic_bounded(n, bound),
            "S" | "s" => {
                let g = Self::symmetric(n)?;
                if g.order > bound {
                    return Err(Error::OrderBoundExceeded { order: g.order, bound });
                }
                Ok(g)
            }
            "D" | "d" => Self::dihedral_bounded(n, bound),
            _ => Err(Error::UnknownPreset(part.to_string())),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g h g^{-1}`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v = self.element_orders.clone();
        v.sort_unstable();
        v
    }

    pub fn with_label(self: &Arc<Self>, label: impl Into<String>) -> Arc<Self> {
        let mut g = (**self).clone();
        g.label = label.into();
        Arc::new(g)
    }
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let mut i = n.saturating_sub(1);
        while i > 0 && current[i - 1] >= current[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while current[j] <= current[i - 1] {
            j -= 1;
        }
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// A subgroup of a fixed parent group, stored as a sorted index set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({:?} <= {})", self.elements, self.parent.label())
    }
}

impl Subgroup {
    pub fn new(parent: &Arc<FiniteGroup>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let sg = Subgroup { parent: parent.clone(), elements };
        if !sg.is_valid() {
            return Err(Error::NotASubgroup);
        }
        Ok(sg)
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Subgroup { parent: parent.clone(), elements: vec![parent.identity()] }
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Subgroup { parent: parent.clone(), elements: (0..parent.order()).collect() }
    }

    fn is_valid(&self) -> bool {
        let g = &self.parent;
        if !self.elements.contains(&g.identity()) {
            return false;
        }
        if self.elements.iter().any(|&x| x >= g.order()) {
            return false;
        }
        for &a in &self.elements {
            if self.elements.binary_search(&g.inv(a)).is_err() {
                return false;
            }
            for &b in &self.elements {
                if self.elements.binary_search(&g.mul(a, b)).is_err() {
                    return false;
                }
            }
        }
        true
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut elements: Vec<usize> =
            self.elements.iter().map(|&h| self.parent.conj(g, h)).collect();
        elements.sort_unstable();
        Subgroup { parent: self.parent.clone(), elements }
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if !Arc::ptr_eq(&self.parent, &other.parent) && self.parent != other.parent {
            return Err(Error::GroupMismatch);
        }
        let elements: Vec<usize> =
            self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Ok(Subgroup { parent: self.parent.clone(), elements })
    }

    /// The normalizer `N_G(H)` as a subgroup.
    pub fn normalizer(&self) -> Subgroup {
        let g = &self.parent;
        let elements: Vec<usize> = g
            .elements()
            .filter(|&x| self.conjugate_by(x).elements == self.elements)
            .collect();
        Subgroup { parent: g.clone(), elements }
    }

    /// Re-indexes the subgroup as a standalone group together with the
    /// embedding homomorphism into the parent.
    pub fn as_group(&self, label: impl Into<String>) -> (Arc<FiniteGroup>, GroupHom) {
        let n = self.order();
        let pos: HashMap<usize, usize> =
            self.elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = pos[&self.parent.mul(self.elements[i], self.elements[j])];
            }
        }
        let group = FiniteGroup::from_valid_table(label.into(), n, table);
        let embed = GroupHom {
            source: group.clone(),
            target: self.parent.clone(),
            images: self.elements.clone(),
        };
        (group, embed)
    }
}

/// Enumerates every subgroup of `g`, sorted by (order, element set).
pub fn all_subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    assert!(g.order() <= 64, "subgroup enumeration uses 64-bit masks");
    let mut seen: Vec<u64> = Vec::new();
    let mut frontier: Vec<u64> = Vec::new();
    let start = 1u64 << g.identity();
    seen.push(start);
    frontier.push(start);
    while let Some(mask) = frontier.pop() {
        for x in g.elements() {
            if mask & (1 << x) != 0 {
                continue;
            }
            let grown = close_mask(g, mask | (1 << x));
            if !seen.contains(&grown) {
                seen.push(grown);
                frontier.push(grown);
            }
        }
    }
    let mut subs: Vec<Subgroup> = seen
        .into_iter()
        .map(|mask| Subgroup {
            parent: g.clone(),
            elements: (0..g.order()).filter(|&i| mask & (1 << i) != 0).collect(),
        })
        .collect();
    subs.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    subs
}

fn close_mask(g: &FiniteGroup, mut mask: u64) -> u64 {
    loop {
        let mut next = mask;
        let members: Vec<usize> = (0..g.order()).filter(|&i| mask & (1 << i) != 0).collect();
        for &a in &members {
            for &b in &members {
                next |= 1 << g.mul(a, b);
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

/// One conjugacy class of subgroups: a distinguished representative (the
/// lexicographically minimal conjugate) plus every member.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
}

/// The complete subgroup lattice of a group, grouped into conjugacy classes
/// sorted by (subgroup order, canonical element set).
#[derive(Clone, Debug)]
pub struct SubgroupClasses {
    parent: Arc<FiniteGroup>,
    classes: Vec<SubgroupClass>,
    lookup: HashMap<Vec<usize>, (usize, usize)>,
}

impl SubgroupClasses {
    pub fn compute(g: &Arc<FiniteGroup>) -> Self {
        let subs = all_subgroups(g);
        let mut used = vec![false; subs.len()];
        let index_of: HashMap<&[usize], usize> =
            subs.iter().enumerate().map(|(i, s)| (s.elements(), i)).collect();
        let mut classes = Vec::new();
        for i in 0..subs.len() {
            if used[i] {
                continue;
            }
            let mut member_ids = vec![i];
            used[i] = true;
            // conjugation orbit
            let mut k = 0;
            while k < member_ids.len() {
                let cur = member_ids[k];
                for x in g.elements() {
                    let conj = subs[cur].conjugate_by(x);
                    let j = index_of[conj.elements()];
                    if !used[j] {
                        used[j] = true;
                        member_ids.push(j);
                    }
                }
                k += 1;
            }
            member_ids.sort_unstable();
            let members: Vec<Subgroup> = member_ids.iter().map(|&j| subs[j].clone()).collect();
            let representative = members
                .iter()
                .min_by(|a, b| a.elements.cmp(&b.elements))
                .unwrap()
                .clone();
            classes.push(SubgroupClass { representative, members });
        }
        classes.sort_by(|a, b| {
            (a.representative.order(), &a.representative.elements)
                .cmp(&(b.representative.order(), &b.representative.elements))
        });
        let mut lookup = HashMap::new();
        for (ci, class) in classes.iter().enumerate() {
            for (mi, member) in class.members.iter().enumerate() {
                lookup.insert(member.elements.clone(), (ci, mi));
            }
        }
        SubgroupClasses { parent: g.clone(), classes, lookup }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn total_subgroups(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }

    pub fn class_index_of(&self, sub: &Subgroup) -> Option<usize> {
        self.lookup.get(&sub.elements).map(|&(ci, _)| ci)
    }

    /// Class index of `sub` together with a conjugator `c` such that
    /// `c sub c^{-1}` equals the class representative.
    pub fn class_and_conjugator(&self, sub: &Subgroup) -> Option<(usize, usize)> {
        let &(ci, _) = self.lookup.get(&sub.elements)?;
        let rep = &self.classes[ci].representative;
        let c = self
            .parent
            .elements()
            .find(|&c| sub.conjugate_by(c).elements == rep.elements)?;
        Some((ci, c))
    }

    pub fn representative(&self, class: usize) -> &Subgroup {
        &self.classes[class].representative
    }
}

/// A homomorphism between finite groups, stored as the full image array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, {:?})",
            self.source.label(),
            self.target.label(),
            self.images
        )
    }
}

impl GroupHom {
    pub fn new(
        source: &Arc<FiniteGroup>,
        target: &Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<Self> {
        let hom = GroupHom { source: source.clone(), target: target.clone(), images };
        if !hom.is_valid() {
            return Err(Error::InvalidInput(format!(
                "image array is not a homomorphism {} -> {}",
                source.label(),
                target.label()
            )));
        }
        Ok(hom)
    }

    pub(crate) fn new_unchecked(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Self {
        let hom = GroupHom { source, target, images };
        debug_assert!(hom.is_valid());
        hom
    }

    fn is_valid(&self) -> bool {
        if self.images.len() != self.source.order() {
            return false;
        }
        if self.images.iter().any(|&y| y >= self.target.order()) {
            return false;
        }
        if self.images[self.source.identity()] != self.target.identity() {
            return false;
        }
        for a in self.source.elements() {
            for b in self.source.elements() {
                if self.images[self.source.mul(a, b)]
                    != self.target.mul(self.images[a], self.images[b])
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn identity(group: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            images: (0..group.order()).collect(),
        }
    }

    pub fn trivial(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            images: vec![target.identity(); source.order()],
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn compose(after: &GroupHom, before: &GroupHom) -> Result<GroupHom> {
        if before.target != after.source {
            return Err(Error::GroupMismatch);
        }
        Ok(GroupHom {
            source: before.source.clone(),
            target: after.target.clone(),
            images: before.images.iter().map(|&x| after.images[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.images.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &y in &self.images {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut images = vec![0usize; self.target.order()];
        for x in self.source.elements() {
            images[self.images[x]] = x;
        }
        Some(GroupHom { source: self.target.clone(), target: self.source.clone(), images })
    }

    pub fn image_subgroup(&self) -> Subgroup {
        let mut elements: Vec<usize> = self.images.clone();
        elements.sort_unstable();
        elements.dedup();
        Subgroup { parent: self.target.clone(), elements }
    }

    pub fn kernel(&self) -> Subgroup {
        let e = self.target.identity();
        let elements: Vec<usize> =
            self.source.elements().filter(|&x| self.images[x] == e).collect();
        Subgroup { parent: self.source.clone(), elements }
    }

    /// The hom `x -> t f(x) t^{-1}`.
    pub fn conjugated(&self, t: usize) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|&y| self.target.conj(t, y)).collect(),
        }
    }

    /// Canonical form of the post-conjugation class: the lexicographically
    /// minimal image array over conjugation by target elements.
    pub fn conjugacy_canonical(&self) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for t in self.target.elements() {
            let cand: Vec<usize> =
                self.images.iter().map(|&y| self.target.conj(t, y)).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
        best.unwrap()
    }

    pub fn is_conjugate_to(&self, other: &GroupHom) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.conjugacy_canonical() == other.conjugacy_canonical()
    }
}

/// A normalizer quotient `W_H G = N_G(H) / H` with its projection data.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub group: Arc<FiniteGroup>,
    pub normalizer: Subgroup,
    /// Coset representative in `N_G(H)` for each Weyl element.
    pub coset_reps: Vec<usize>,
    /// The quotient map: parent element index -> Weyl element (None outside N).
    projection: Vec<Option<usize>>,
}

impl WeylGroup {
    pub fn project(&self, g: usize) -> Option<usize> {
        self.projection[g]
    }
}

/// Computes `N_G(H)/H` together with the quotient map `N_G(H) -> W_H G`.
pub fn weyl_group(g: &Arc<FiniteGroup>, h: &Subgroup) -> Result<WeylGroup> {
    if h.parent() != g {
        return Err(Error::NotASubgroup);
    }
    let normalizer = h.normalizer();
    // cosets nH inside N, represented by minimal elements, in ascending order
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut coset_reps = Vec::new();
    for &n in normalizer.elements() {
        if coset_of[n] != usize::MAX {
            continue;
        }
        let w = coset_reps.len();
        coset_reps.push(n);
        for &x in h.elements() {
            coset_of[g.mul(n, x)] = w;
        }
    }
    let m = coset_reps.len();
    let mut table = vec![0usize; m * m];
    for a in 0..m {
        for b in 0..m {
            table[a * m + b] = coset_of[g.mul(coset_reps[a], coset_reps[b])];
        }
    }
    let label = format!("W[{}/{}]", g.label(), h.order());
    let group = FiniteGroup::from_valid_table(label, m, table);
    let projection: Vec<Option<usize>> = (0..g.order())
        .map(|x| {
            if normalizer.contains(x) {
                Some(coset_of[x])
            } else {
                None
            }
        })
        .collect();
    Ok(WeylGroup { group, normalizer, coset_reps, projection })
}

/// One `H g K` double coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub representative: usize,
    pub elements: Vec<usize>,
}

/// Partitions `G` into `H \ G / K` double cosets. Representatives are the
/// minimal elements of their classes, listed in ascending order.
pub fn double_cosets(g: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup) -> Result<Vec<DoubleCoset>> {
    if h.parent() != g || k.parent() != g {
        return Err(Error::NotASubgroup);
    }
    let mut assigned = vec![false; g.order()];
    let mut out = Vec::new();
    for rep in g.elements() {
        if assigned[rep] {
            continue;
        }
        let mut elements = Vec::new();
        for &a in h.elements() {
            for &b in k.elements() {
                let x = g.mul(g.mul(a, rep), b);
                if !assigned[x] {
                    assigned[x] = true;
                    elements.push(x);
                }
            }
        }
        elements.sort_unstable();
        out.push(DoubleCoset { representative: rep, elements });
    }
    Ok(out)
}

/// A post-conjugation class of homomorphisms.
#[derive(Clone, Debug)]
pub struct HomClass {
    pub representative: GroupHom,
    pub injective: bool,
    pub surjective: bool,
}

/// Enumerates all homomorphisms `H -> G` by generator-image backtracking.
pub fn all_homs(h: &Arc<FiniteGroup>, g: &Arc<FiniteGroup>) -> Result<Vec<GroupHom>> {
    all_homs_limited(h, g, DEFAULT_SEARCH_LIMIT)
}

pub fn all_homs_limited(
    h: &Arc<FiniteGroup>,
    g: &Arc<FiniteGroup>,
    limit: u128,
) -> Result<Vec<GroupHom>> {
    let gens = generating_sequence(h);
    let size = (g.order() as u128).checked_pow(gens.len() as u32).unwrap_or(u128::MAX);
    if size > limit {
        return Err(Error::SearchBoundExceeded { size, limit });
    }
    // express every element of H as parent * generator
    let words = word_tree(h, &gens);
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; h.order()];
    images[h.identity()] = g.identity();
    search_homs(h, g, &gens, &words, 0, &mut images, &mut out);
    out.sort_by(|a, b| a.images.cmp(&b.images));
    Ok(out)
}

/// A short generating sequence, greedily extending closures.
fn generating_sequence(h: &Arc<FiniteGroup>) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut mask = 1u64 << h.identity();
    for x in h.elements() {
        if mask & (1 << x) == 0 {
            gens.push(x);
            mask = close_mask(h, mask | (1 << x));
            if mask.count_ones() as usize == h.order() {
                break;
            }
        }
    }
    gens
}

/// For each element, how to reach it: `None` for the identity, otherwise
/// `(parent, generator_index)` with `elem = parent * gens[gi]`.
fn word_tree(h: &FiniteGroup, gens: &[usize]) -> Vec<Option<(usize, usize)>> {
    let mut words = vec![None; h.order()];
    let mut known = vec![false; h.order()];
    known[h.identity()] = true;
    let mut frontier = vec![h.identity()];
    let mut order_seen = vec![h.identity()];
    while let Some(x) = frontier.pop() {
        for (gi, &gen) in gens.iter().enumerate() {
            let y = h.mul(x, gen);
            if !known[y] {
                known[y] = true;
                words[y] = Some((x, gi));
                frontier.push(y);
                order_seen.push(y);
            }
        }
    }
    debug_assert!(known.iter().all(|&b| b));
    words
}

fn search_homs(
    h: &Arc<FiniteGroup>,
    g: &Arc<FiniteGroup>,
    gens: &[usize],
    words: &[Option<(usize, usize)>],
    depth: usize,
    images: &mut Vec<usize>,
    out: &mut Vec<GroupHom>,
) {
    if depth == gens.len() {
        // fill in all images via the word tree, then verify
        let mut full = images.clone();
        let mut gen_images = vec![0usize; gens.len()];
        for (gi, &gen) in gens.iter().enumerate() {
            gen_images[gi] = full[gen];
        }
        let mut pending: Vec<usize> = (0..h.order()).collect();
        // words form a tree rooted at the identity, so one pass in BFS
        // discovery order resolves everything; iterate until stable instead
        // of tracking that order explicitly.
        loop {
            let mut progressed = false;
            pending.retain(|&x| {
                if full[x] != usize::MAX {
                    return false;
                }
                if let Some((parent, gi)) = words[x] {
                    if full[parent] != usize::MAX {
                        full[x] = g.mul(full[parent], gen_images[gi]);
                        progressed = true;
                        return false;
                    }
                }
                true
            });
            if pending.is_empty() || !progressed {
                break;
            }
        }
        for a in h.elements() {
            for b in h.elements() {
                if full[h.mul(a, b)] != g.mul(full[a], full[b]) {
                    return;
                }
            }
        }
        out.push(GroupHom { source: h.clone(), target: g.clone(), images: full });
        return;
    }
    let gen = gens[depth];
    let gen_order = h.element_order(gen);
    for t in g.elements() {
        // the image's order must divide the generator's order
        if gen_order % g.element_order(t) != 0 {
            continue;
        }
        images[gen] = t;
        search_homs(h, g, gens, words, depth + 1, images, out);
    }
    images[gen] = usize::MAX;
}

/// One representative per post-conjugation class of homomorphisms `H -> G`,
/// sorted by canonical image array.
pub fn homs_up_to_conjugacy(
    h: &Arc<FiniteGroup>,
    g: &Arc<FiniteGroup>,
) -> Result<Vec<HomClass>> {
    homs_up_to_conjugacy_limited(h, g, DEFAULT_SEARCH_LIMIT)
}

pub fn homs_up_to_conjugacy_limited(
    h: &Arc<FiniteGroup>,
    g: &Arc<FiniteGroup>,
    limit: u128,
) -> Result<Vec<HomClass>> {
    let homs = all_homs_limited(h, g, limit)?;
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    let mut out = Vec::new();
    for hom in homs {
        let canon = hom.conjugacy_canonical();
        if seen.insert(canon.clone(), ()).is_none() {
            let representative =
                GroupHom { source: h.clone(), target: g.clone(), images: canon };
            let injective = representative.is_injective();
            let surjective = representative.is_surjective();
            out.push(HomClass { representative, injective, surjective });
        }
    }
    out.sort_by(|a, b| a.representative.images.cmp(&b.representative.images));
    Ok(out)
}

/// All automorphisms of `g` as image arrays, enumerated exhaustively.
pub fn automorphism_maps(g: &Arc<FiniteGroup>) -> Result<Vec<GroupHom>> {
    Ok(all_homs(g, g)?
        .into_iter()
        .filter(|h| h.is_bijective())
        .collect())
}

/// Searches for one isomorphism `a -> b`.
pub fn find_isomorphism(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Option<GroupHom> {
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return None;
    }
    if a.is_abelian() != b.is_abelian() {
        return None;
    }
    // generator-image backtracking, reusing the hom search with a bijectivity
    // filter; groups here are small enough that this is immediate.
    all_homs(a, b).ok()?.into_iter().find(|h| h.is_bijective())
}

pub fn are_isomorphic(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    a == b || find_isomorphism(a, b).is_some()
}

/// The automorphism group of `g`: `Aut(g)` tabulated as a group, its inner
/// automorphisms, and the outer classes (cosets of `Inn` in `Aut`).
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub group: Arc<FiniteGroup>,
    /// Element `i` of `group` acts on `g` by this permutation.
    pub maps: Vec<GroupHom>,
    pub inner: Subgroup,
    /// Outer classes as lists of `Aut` element indices; class 0 is `Inn`.
    pub outer_classes: Vec<Vec<usize>>,
}

pub fn automorphisms(g: &Arc<FiniteGroup>) -> Result<AutomorphismGroup> {
    automorphisms_bounded(g, DEFAULT_ORDER_BOUND)
}

pub fn automorphisms_bounded(g: &Arc<FiniteGroup>, bound: usize) -> Result<AutomorphismGroup> {
    let maps = automorphism_maps(g)?;
    let m = maps.len();
    if m > bound {
        return Err(Error::OrderBoundExceeded { order: m, bound });
    }
    let index: HashMap<&Vec<usize>, usize> =
        maps.iter().enumerate().map(|(i, h)| (&h.images, i)).collect();
    let mut table = vec![0usize; m * m];
    for (i, a) in maps.iter().enumerate() {
        for (j, b) in maps.iter().enumerate() {
            let composed: Vec<usize> = (0..g.order()).map(|x| a.images[b.images[x]]).collect();
            table[i * m + j] = index[&composed];
        }
    }
    let group = FiniteGroup::from_valid_table(format!("Aut({})", g.label()), m, table);
    let mut inner_ids: Vec<usize> = g
        .elements()
        .map(|t| {
            let images: Vec<usize> = (0..g.order()).map(|x| g.conj(t, x)).collect();
            index[&images]
        })
        .collect();
    inner_ids.sort_unstable();
    inner_ids.dedup();
    let inner = Subgroup::new(&group, inner_ids.clone())?;
    // cosets of Inn in Aut
    let mut used = vec![false; m];
    let mut outer_classes = Vec::new();
    for rep in 0..m {
        if used[rep] {
            continue;
        }
        let mut class: Vec<usize> = inner_ids.iter().map(|&i| group.mul(i, rep)).collect();
        class.sort_unstable();
        class.dedup();
        for &x in &class {
            used[x] = true;
        }
        outer_classes.push(class);
    }
    Ok(AutomorphismGroup { group, maps, inner, outer_classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(spec: &str) -> Arc<FiniteGroup> {
        FiniteGroup::from_preset(spec).unwrap()
    }

    #[test]
    fn presets_have_expected_orders() {
        assert_eq!(grp("C1").order(), 1);
        assert_eq!(grp("S3").order(), 6);
        assert_eq!(grp("S4").order(), 24);
        assert_eq!(grp("D8").order(), 8);
        assert_eq!(grp("C2xC2").order(), 4);
        assert_eq!(grp("C2xC2xC2").order(), 8);
        assert!(!grp("S3").is_abelian());
        assert!(grp("C2xC4").is_abelian());
    }

    #[test]
    fn order_bound_is_enforced() {
        assert!(matches!(
            FiniteGroup::from_preset("C33"),
            Err(Error::OrderBoundExceeded { order: 33, bound: 32 })
        ));
        assert!(FiniteGroup::from_preset_bounded("C33", 64).is_ok());
        assert!(matches!(
            FiniteGroup::from_preset("C4xC32"),
            Err(Error::OrderBoundExceeded { .. })
        ));
    }

    #[test]
    fn broken_associativity_is_rejected() {
        // 0 is an identity but the rest is garbage
        let rows = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        match FiniteGroup::from_table("bad", &rows) {
            Err(Error::TableNotAGroup(_)) => {}
            other => panic!("expected TableNotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn explicit_table_roundtrip() {
        let rows = vec![vec![0, 1], vec![1, 0]];
        let g = FiniteGroup::from_table("Z2", &rows).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn subgroup_counts_match_closure_enumeration() {
        // (group, total subgroups, conjugacy classes)
        let cases = [
            ("C2", 2, 2),
            ("C4", 3, 3),
            ("S3", 6, 4),
            ("C2xC2", 5, 5),
            ("D8", 10, 8),
            ("S4", 30, 11),
        ];
        for (spec, subs, classes) in cases {
            let g = grp(spec);
            let cl = SubgroupClasses::compute(&g);
            assert_eq!(cl.total_subgroups(), subs, "{spec} subgroup count");
            assert_eq!(cl.len(), classes, "{spec} class count");
        }
    }

    #[test]
    fn subgroup_classes_are_conjugation_stable() {
        for spec in ["C6", "S3", "D8", "C2xC2xC2", "D12", "S4"] {
            let g = grp(spec);
            let cl = SubgroupClasses::compute(&g);
            for class in cl.classes() {
                for member in &class.members {
                    for x in g.elements() {
                        let conj = member.conjugate_by(x);
                        assert_eq!(
                            cl.class_index_of(&conj),
                            cl.class_index_of(member),
                            "{spec}: conjugation must preserve the class"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_group_examples() {
        let s3 = grp("S3");
        let cl = SubgroupClasses::compute(&s3);
        // trivial subgroup: W = G
        let w = weyl_group(&s3, &Subgroup::trivial(&s3)).unwrap();
        assert_eq!(w.group.order(), 6);
        // order-2 subgroup of S3: normalizer is itself, W trivial
        let c2 = cl.classes().iter().find(|c| c.representative.order() == 2).unwrap();
        let w = weyl_group(&s3, &c2.representative).unwrap();
        assert_eq!(w.group.order(), 1);
        // C4 over C2: abelian, W = C4/C2 = C2
        let c4 = grp("C4");
        let c2_in_c4 = Subgroup::new(&c4, vec![0, 2]).unwrap();
        let w = weyl_group(&c4, &c2_in_c4).unwrap();
        assert_eq!(w.group.order(), 2);
    }

    #[test]
    fn weyl_order_is_normalizer_over_subgroup() {
        for spec in ["C6", "S3", "D8", "C2xC4"] {
            let g = grp(spec);
            for sub in all_subgroups(&g) {
                let w = weyl_group(&g, &sub).unwrap();
                assert_eq!(w.group.order(), w.normalizer.order() / sub.order());
            }
        }
    }

    #[test]
    fn double_coset_examples() {
        let s3 = grp("S3");
        let whole = Subgroup::whole(&s3);
        assert_eq!(double_cosets(&s3, &whole, &whole).unwrap().len(), 1);

        let triv = Subgroup::trivial(&s3);
        assert_eq!(double_cosets(&s3, &triv, &triv).unwrap().len(), 6);

        let cl = SubgroupClasses::compute(&s3);
        let c2 = &cl.classes().iter().find(|c| c.representative.order() == 2).unwrap().representative;
        let dcs = double_cosets(&s3, c2, c2).unwrap();
        let mut sizes: Vec<usize> = dcs.iter().map(|d| d.elements.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn double_cosets_partition_and_size_divisibility() {
        for spec in ["S3", "D8", "C6", "C2xC2"] {
            let g = grp(spec);
            let subs = all_subgroups(&g);
            for h in &subs {
                for k in &subs {
                    let dcs = double_cosets(&g, h, k).unwrap();
                    let total: usize = dcs.iter().map(|d| d.elements.len()).sum();
                    assert_eq!(total, g.order(), "double cosets cover G");
                    for d in &dcs {
                        // |HgK| = |H||K| / |H ∩ gKg^{-1}|
                        let gk = k.conjugate_by(d.representative);
                        let stab = h.intersection(&gk).unwrap();
                        assert_eq!(d.elements.len(), h.order() * k.order() / stab.order());
                        // closed under left H- and right K-multiplication
                        for &a in h.elements() {
                            for &x in &d.elements {
                                assert!(d.elements.binary_search(&g.mul(a, x)).is_ok());
                            }
                        }
                        for &b in k.elements() {
                            for &x in &d.elements {
                                assert!(d.elements.binary_search(&g.mul(x, b)).is_ok());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hom_class_examples() {
        let c2 = grp("C2");
        let c3 = grp("C3");
        let s3 = grp("S3");
        assert_eq!(homs_up_to_conjugacy(&c2, &c2).unwrap().len(), 2);
        assert_eq!(homs_up_to_conjugacy(&c2, &s3).unwrap().len(), 2);
        assert_eq!(homs_up_to_conjugacy(&c3, &c2).unwrap().len(), 1);
    }

    #[test]
    fn hom_classes_are_exhaustive_and_non_conjugate() {
        let specs = ["C2", "C3", "C4", "C2xC2", "S3", "C6", "D8", "C2xC2xC2", "C12"];
        for h_spec in specs {
            for g_spec in specs {
                let h = grp(h_spec);
                let g = grp(g_spec);
                if h.order() > 12 || g.order() > 12 {
                    continue;
                }
                let raw = all_homs(&h, &g).unwrap();
                let classes = homs_up_to_conjugacy(&h, &g).unwrap();
                // pairwise non-conjugate
                for i in 0..classes.len() {
                    for j in i + 1..classes.len() {
                        assert!(!classes[i]
                            .representative
                            .is_conjugate_to(&classes[j].representative));
                    }
                }
                // jointly exhaustive
                let canons: std::collections::HashSet<Vec<usize>> = classes
                    .iter()
                    .map(|c| c.representative.conjugacy_canonical())
                    .collect();
                for hom in &raw {
                    assert!(canons.contains(&hom.conjugacy_canonical()));
                }
            }
        }
    }

    #[test]
    fn automorphism_examples() {
        let aut = automorphisms(&grp("C2")).unwrap();
        assert_eq!(aut.group.order(), 1);
        assert_eq!(aut.outer_classes.len(), 1);

        let aut = automorphisms(&grp("C3")).unwrap();
        assert_eq!(aut.group.order(), 2);
        assert_eq!(aut.outer_classes.len(), 2);

        let aut = automorphisms(&grp("S3")).unwrap();
        assert_eq!(aut.group.order(), 6);
        assert_eq!(aut.inner.order(), 6);
        assert_eq!(aut.outer_classes.len(), 1);
    }

    #[test]
    fn automorphism_bound_errors() {
        // Aut(C2^3) = GL(3,2) has order 168, over the default bound
        let g = grp("C2xC2xC2");
        assert!(matches!(automorphisms(&g), Err(Error::OrderBoundExceeded { .. })));
        assert_eq!(automorphism_maps(&g).unwrap().len(), 168);
    }

    #[test]
    fn isomorphism_search_identifies_presets() {
        assert!(are_isomorphic(&grp("D6"), &grp("S3")));
        assert!(are_isomorphic(&grp("D12"), &grp("S3xC2")));
        assert!(!are_isomorphic(&grp("C4"), &grp("C2xC2")));
        assert!(!are_isomorphic(&grp("D8"), &grp("C8")));
    }

    #[test]
    fn subgroup_as_group_embeds() {
        let s3 = grp("S3");
        let cl = SubgroupClasses::compute(&s3);
        for class in cl.classes() {
            let (g, embed) = class.representative.as_group("H");
            assert_eq!(g.order(), class.representative.order());
            assert!(embed.is_injective());
            assert_eq!(embed.image_subgroup().elements(), class.representative.elements());
        }
    }
}
