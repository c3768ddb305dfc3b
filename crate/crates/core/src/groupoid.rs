//! Finite groupoids modeled skeletally: a groupoid is an ordered list of
//! group components, and a map is a component assignment plus one
//! homomorphism per source component, stored in post-conjugacy canonical
//! form. Natural isomorphism of functors collapses to literal equality of
//! these canonical forms.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{
    self, double_cosets, weyl_group, FiniteGroup, GroupHom, Subgroup, SubgroupClasses, WeylGroup,
};

/// A finite disjoint union of one-object group components. The empty
/// groupoid is allowed; a groupoid is connected iff it has exactly one
/// component.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroupoid {
    components: Vec<Arc<FiniteGroup>>,
    label: String,
}

impl fmt::Debug for FiniteGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroupoid({})", self.label)
    }
}

impl FiniteGroupoid {
    pub fn new(components: Vec<Arc<FiniteGroup>>) -> Self {
        let label = if components.is_empty() {
            "0".to_string()
        } else {
            components
                .iter()
                .map(|g| format!("B{}", g.label()))
                .collect::<Vec<_>>()
                .join("+")
        };
        FiniteGroupoid { components, label }
    }

    /// The one-component groupoid `BG`.
    pub fn connected(group: Arc<FiniteGroup>) -> Self {
        Self::new(vec![group])
    }

    /// The terminal groupoid, a single point.
    pub fn point() -> Self {
        Self::connected(FiniteGroup::trivial())
    }

    pub fn empty() -> Self {
        Self::new(Vec::new())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn components(&self) -> &[Arc<FiniteGroup>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Arc<FiniteGroup> {
        &self.components[i]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// The group of a connected groupoid.
    pub fn group(&self) -> Result<&Arc<FiniteGroup>> {
        if !self.is_connected() {
            return Err(Error::NotConnected(self.label.clone()));
        }
        Ok(&self.components[0])
    }

    pub fn disjoint_union(a: &FiniteGroupoid, b: &FiniteGroupoid) -> FiniteGroupoid {
        let mut components = a.components.clone();
        components.extend(b.components.iter().cloned());
        FiniteGroupoid::new(components)
    }

    pub fn max_component_order(&self) -> usize {
        self.components.iter().map(|g| g.order()).max().unwrap_or(0)
    }

    /// Searches for an equivalence to `other`: a bijection of components
    /// together with isomorphisms of the matched groups.
    pub fn find_isomorphism(&self, other: &FiniteGroupoid) -> Option<GroupoidMap> {
        if self.len() != other.len() {
            return None;
        }
        let n = self.len();
        let mut assignment = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut homs: Vec<Option<GroupHom>> = vec![None; n];
        fn backtrack(
            a: &FiniteGroupoid,
            b: &FiniteGroupoid,
            i: usize,
            assignment: &mut Vec<usize>,
            used: &mut Vec<bool>,
            homs: &mut Vec<Option<GroupHom>>,
        ) -> bool {
            if i == a.len() {
                return true;
            }
            for j in 0..b.len() {
                if used[j] {
                    continue;
                }
                if let Some(iso) = group::find_isomorphism(a.component(i), b.component(j)) {
                    assignment[i] = j;
                    used[j] = true;
                    homs[i] = Some(iso);
                    if backtrack(a, b, i + 1, assignment, used, homs) {
                        return true;
                    }
                    used[j] = false;
                    homs[i] = None;
                }
            }
            false
        }
        if !backtrack(self, other, 0, &mut assignment, &mut used, &mut homs) {
            return None;
        }
        Some(
            GroupoidMap::new(
                self.clone(),
                other.clone(),
                assignment,
                homs.into_iter().map(|h| h.unwrap()).collect(),
            )
            .expect("constructed data is a valid map"),
        )
    }

    pub fn is_isomorphic_to(&self, other: &FiniteGroupoid) -> bool {
        self == other || self.find_isomorphism(other).is_some()
    }
}

/// A map of finite groupoids. Two maps are equal iff they have the same
/// component assignment and componentwise conjugate homs; construction
/// canonicalizes each hom so equality is literal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupoidMap {
    source: FiniteGroupoid,
    target: FiniteGroupoid,
    assignment: Vec<usize>,
    homs: Vec<GroupHom>,
}

impl fmt::Debug for GroupoidMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupoidMap({} -> {})", self.source.label(), self.target.label())
    }
}

impl GroupoidMap {
    /// Builds a map and canonicalizes every component hom by
    /// post-conjugation.
    pub fn new(
        source: FiniteGroupoid,
        target: FiniteGroupoid,
        assignment: Vec<usize>,
        homs: Vec<GroupHom>,
    ) -> Result<Self> {
        if assignment.len() != source.len() || homs.len() != source.len() {
            return Err(Error::InvalidInput(
                "component assignment or hom list has wrong length".into(),
            ));
        }
        let mut canonical = Vec::with_capacity(homs.len());
        for (i, hom) in homs.into_iter().enumerate() {
            let j = assignment[i];
            if j >= target.len() {
                return Err(Error::InvalidInput(format!(
                    "component {i} assigned to missing target component {j}"
                )));
            }
            if hom.source() != source.component(i) || hom.target() != target.component(j) {
                return Err(Error::InvalidInput(format!(
                    "hom at component {i} does not match the assignment"
                )));
            }
            let images = hom.conjugacy_canonical();
            canonical.push(GroupHom::new_unchecked(
                source.component(i).clone(),
                target.component(j).clone(),
                images,
            ));
        }
        Ok(GroupoidMap { source, target, assignment, homs: canonical })
    }

    /// Builds a map without canonicalizing; for internal use where the
    /// literal hom matters (witnesses), not for identity comparison.
    pub(crate) fn new_literal(
        source: FiniteGroupoid,
        target: FiniteGroupoid,
        assignment: Vec<usize>,
        homs: Vec<GroupHom>,
    ) -> Self {
        GroupoidMap { source, target, assignment, homs }
    }

    pub fn identity(x: &FiniteGroupoid) -> Self {
        let assignment = (0..x.len()).collect();
        let homs = x.components().iter().map(GroupHom::identity).collect();
        GroupoidMap { source: x.clone(), target: x.clone(), assignment, homs }
    }

    /// The map `BH -> BG` induced by a single homomorphism.
    pub fn from_hom(hom: GroupHom) -> Self {
        let source = FiniteGroupoid::connected(hom.source().clone());
        let target = FiniteGroupoid::connected(hom.target().clone());
        GroupoidMap::new(source, target, vec![0], vec![hom])
            .expect("a single hom is a valid connected map")
    }

    /// The unique map to the point.
    pub fn to_point(x: &FiniteGroupoid) -> Self {
        let point = FiniteGroupoid::point();
        let homs = x
            .components()
            .iter()
            .map(|g| GroupHom::trivial(g, point.component(0)))
            .collect();
        GroupoidMap::new(x.clone(), point.clone(), vec![0; x.len()], homs)
            .expect("trivial homs form a valid map")
    }

    pub fn source(&self) -> &FiniteGroupoid {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroupoid {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn homs(&self) -> &[GroupHom] {
        &self.homs
    }

    pub fn hom(&self, i: usize) -> &GroupHom {
        &self.homs[i]
    }

    pub fn compose(after: &GroupoidMap, before: &GroupoidMap) -> Result<GroupoidMap> {
        if before.target != after.source {
            return Err(Error::InvalidInput(
                "groupoid maps are not composable: middle objects differ".into(),
            ));
        }
        let assignment: Vec<usize> =
            before.assignment.iter().map(|&j| after.assignment[j]).collect();
        let homs: Vec<GroupHom> = before
            .homs
            .iter()
            .enumerate()
            .map(|(i, h)| GroupHom::compose(&after.homs[before.assignment[i]], h))
            .collect::<Result<_>>()?;
        GroupoidMap::new(before.source.clone(), after.target.clone(), assignment, homs)
    }

    /// Full: every component hom is surjective on fundamental groups. This
    /// is membership in the coproduct completion of the full maps of
    /// connected groupoids.
    pub fn is_full(&self) -> bool {
        self.homs.iter().all(|h| h.is_surjective())
    }

    /// Faithful: every component hom is injective.
    pub fn is_faithful(&self) -> bool {
        self.homs.iter().all(|h| h.is_injective())
    }

    /// Fold: every component hom is an isomorphism onto its assigned target
    /// component (the map is cartesian over path components).
    pub fn is_fold(&self) -> bool {
        self.homs.iter().all(|h| h.is_bijective())
    }

    /// Equivalence: a fold that is also a bijection on components.
    pub fn is_equivalence(&self) -> bool {
        if !self.is_fold() || self.source.len() != self.target.len() {
            return false;
        }
        let mut seen = vec![false; self.target.len()];
        self.assignment.iter().all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    pub fn inverse_equivalence(&self) -> Option<GroupoidMap> {
        if !self.is_equivalence() {
            return None;
        }
        let n = self.source.len();
        let mut assignment = vec![0usize; n];
        let mut homs: Vec<Option<GroupHom>> = vec![None; n];
        for i in 0..n {
            let j = self.assignment[i];
            assignment[j] = i;
            homs[j] = Some(self.homs[i].inverse()?);
        }
        Some(
            GroupoidMap::new(
                self.target.clone(),
                self.source.clone(),
                assignment,
                homs.into_iter().map(|h| h.unwrap()).collect(),
            )
            .expect("inverse data is valid"),
        )
    }

    /// Serialized form used for deterministic ordering and hashing.
    pub fn canonical_key(&self) -> (Vec<usize>, Vec<Vec<usize>>) {
        (
            self.assignment.clone(),
            self.homs.iter().map(|h| h.images().to_vec()).collect(),
        )
    }
}

/// The image factorization `f = m ∘ e` with `e` full and `m` faithful. The
/// middle groupoid has one component per source component, the image group.
pub struct EpiMonoFactorization {
    pub middle: FiniteGroupoid,
    pub epi: GroupoidMap,
    pub mono: GroupoidMap,
}

pub fn epi_mono_factorize(f: &GroupoidMap) -> EpiMonoFactorization {
    let mut middle_components = Vec::new();
    let mut epi_homs = Vec::new();
    let mut mono_homs = Vec::new();
    for (i, hom) in f.homs().iter().enumerate() {
        let image = hom.image_subgroup();
        let (img_group, embed) = image.as_group(format!(
            "Im({}->{})",
            f.source().component(i).label(),
            f.target().component(f.assignment()[i]).label()
        ));
        // e: source component onto the image, index within the image ordering
        let positions: HashMap<usize, usize> = image
            .elements()
            .iter()
            .enumerate()
            .map(|(k, &x)| (x, k))
            .collect();
        let epi_images: Vec<usize> =
            hom.images().iter().map(|&y| positions[&y]).collect();
        let epi_hom =
            GroupHom::new_unchecked(f.source().component(i).clone(), img_group.clone(), epi_images);
        middle_components.push(img_group);
        epi_homs.push(epi_hom);
        mono_homs.push(embed);
    }
    let middle = FiniteGroupoid::new(middle_components);
    let epi = GroupoidMap::new(
        f.source().clone(),
        middle.clone(),
        (0..f.source().len()).collect(),
        epi_homs,
    )
    .expect("epi part is valid");
    let mono = GroupoidMap::new(
        middle.clone(),
        f.target().clone(),
        f.assignment().to_vec(),
        mono_homs,
    )
    .expect("mono part is valid");
    EpiMonoFactorization { middle, epi, mono }
}

/// One component of a homotopy pullback, remembering where it came from.
#[derive(Clone, Debug)]
pub struct PullbackComponent {
    /// Index of the source component of the first leg.
    pub left_component: usize,
    /// Index of the source component of the second leg.
    pub right_component: usize,
    /// Double coset representative in the shared target component.
    pub coset_rep: usize,
}

/// The homotopy pullback of `f : A -> X` and `g : B -> X`, with its two
/// projections and per-component provenance.
pub struct HomotopyPullback {
    pub groupoid: FiniteGroupoid,
    pub to_left: GroupoidMap,
    pub to_right: GroupoidMap,
    pub components: Vec<PullbackComponent>,
}

/// Computes the homotopy pullback. For connected legs `α : H -> G` and
/// `β : K -> G` the components are indexed by double cosets
/// `α(H) \ G / β(K)`; the component at representative `x` has isotropy
/// `{(h, k) : α(h) x = x β(k)}` with the evident projections. Multiple
/// source components distribute over matching target components, in
/// (left component, right component, coset representative) order.
pub fn homotopy_pullback(f: &GroupoidMap, g: &GroupoidMap) -> Result<HomotopyPullback> {
    if f.target() != g.target() {
        return Err(Error::InvalidInput(
            "pullback legs must share their target groupoid".into(),
        ));
    }
    let mut comps = Vec::new();
    let mut provenance = Vec::new();
    let mut left_homs = Vec::new();
    let mut right_homs = Vec::new();
    let mut left_assign = Vec::new();
    let mut right_assign = Vec::new();
    for (i, alpha) in f.homs().iter().enumerate() {
        for (j, beta) in g.homs().iter().enumerate() {
            if f.assignment()[i] != g.assignment()[j] {
                continue;
            }
            let ambient = f.target().component(f.assignment()[i]);
            let im_alpha = alpha.image_subgroup();
            let im_beta = beta.image_subgroup();
            for dc in double_cosets(ambient, &im_alpha, &im_beta)? {
                let x = dc.representative;
                let h_group = f.source().component(i);
                let k_group = g.source().component(j);
                // isotropy pairs (h, k) with α(h) x = x β(k)
                let mut pairs = Vec::new();
                for h in h_group.elements() {
                    let lhs = ambient.mul(alpha.apply(h), x);
                    for k in k_group.elements() {
                        if lhs == ambient.mul(x, beta.apply(k)) {
                            pairs.push((h, k));
                        }
                    }
                }
                let m = pairs.len();
                let pos: HashMap<(usize, usize), usize> =
                    pairs.iter().enumerate().map(|(p, &hk)| (hk, p)).collect();
                let mut table = vec![0usize; m * m];
                for (p, &(h1, k1)) in pairs.iter().enumerate() {
                    for (q, &(h2, k2)) in pairs.iter().enumerate() {
                        table[p * m + q] =
                            pos[&(h_group.mul(h1, h2), k_group.mul(k1, k2))];
                    }
                }
                let label = format!(
                    "P({}, {}; {})",
                    h_group.label(),
                    k_group.label(),
                    x
                );
                let isotropy = FiniteGroup::from_valid_table(label, m, table);
                let to_h: Vec<usize> = pairs.iter().map(|&(h, _)| h).collect();
                let to_k: Vec<usize> = pairs.iter().map(|&(_, k)| k).collect();
                left_homs.push(GroupHom::new_unchecked(
                    isotropy.clone(),
                    h_group.clone(),
                    to_h,
                ));
                right_homs.push(GroupHom::new_unchecked(
                    isotropy.clone(),
                    k_group.clone(),
                    to_k,
                ));
                left_assign.push(i);
                right_assign.push(j);
                comps.push(isotropy);
                provenance.push(PullbackComponent {
                    left_component: i,
                    right_component: j,
                    coset_rep: x,
                });
            }
        }
    }
    let groupoid = FiniteGroupoid::new(comps);
    let to_left =
        GroupoidMap::new(groupoid.clone(), f.source().clone(), left_assign, left_homs)?;
    let to_right =
        GroupoidMap::new(groupoid.clone(), g.source().clone(), right_assign, right_homs)?;
    Ok(HomotopyPullback { groupoid, to_left, to_right, components: provenance })
}

/// An object of the orbit category: a faithful connected map into the base,
/// recorded as (component, subgroup class representative).
#[derive(Clone, Debug)]
pub struct OrbitObject {
    pub component: usize,
    pub subgroup: Subgroup,
}

/// The orbit category of a finite groupoid: objects are faithful connected
/// maps `BH -> X` up to isomorphism; for `X = BG` these are conjugacy
/// classes of subgroups, morphisms `(BH -> BG) -> (BK -> BG)` are the
/// `H`-fixed cosets `gK`, and the automorphism group at `BH` is the Weyl
/// group `N_G(H)/H`.
pub struct OrbitCategory {
    base: FiniteGroupoid,
    objects: Vec<OrbitObject>,
    /// Subgroup classes per base component, shared with object indexing.
    component_classes: Vec<SubgroupClasses>,
    /// Object index from (component, class-within-component).
    object_index: HashMap<(usize, usize), usize>,
    /// Morphism coset representatives: morphisms[from][to] lists the minimal
    /// coset representatives g with g^{-1} H g ⊆ K.
    morphisms: Vec<Vec<Vec<usize>>>,
    /// Automorphism (Weyl) group per object.
    automorphisms: Vec<WeylGroup>,
}

impl OrbitCategory {
    pub fn compute(base: &FiniteGroupoid) -> Result<Self> {
        let mut objects = Vec::new();
        let mut component_classes = Vec::new();
        let mut object_index = HashMap::new();
        for (ci, comp) in base.components().iter().enumerate() {
            let classes = SubgroupClasses::compute(comp);
            for (si, class) in classes.classes().iter().enumerate() {
                object_index.insert((ci, si), objects.len());
                objects.push(OrbitObject {
                    component: ci,
                    subgroup: class.representative.clone(),
                });
            }
            component_classes.push(classes);
        }
        let n = objects.len();
        let mut morphisms = vec![vec![Vec::new(); n]; n];
        let mut automorphisms = Vec::with_capacity(n);
        for (a, obj_a) in objects.iter().enumerate() {
            automorphisms.push(weyl_group(
                base.component(obj_a.component),
                &obj_a.subgroup,
            )?);
            for (b, obj_b) in objects.iter().enumerate() {
                if obj_a.component != obj_b.component {
                    continue;
                }
                let g = base.component(obj_a.component);
                let h = &obj_a.subgroup;
                let k = &obj_b.subgroup;
                // fixed cosets gK with g^{-1} H g ⊆ K, by minimal representative
                let mut seen = vec![false; g.order()];
                let mut reps = Vec::new();
                for x in g.elements() {
                    if seen[x] {
                        continue;
                    }
                    for &kk in k.elements() {
                        seen[g.mul(x, kk)] = true;
                    }
                    let fixed = h
                        .elements()
                        .iter()
                        .all(|&hh| k.contains(g.mul(g.mul(g.inv(x), hh), x)));
                    if fixed {
                        reps.push(x);
                    }
                }
                morphisms[a][b] = reps;
            }
        }
        Ok(OrbitCategory {
            base: base.clone(),
            objects,
            component_classes,
            object_index,
            morphisms,
            automorphisms,
        })
    }

    pub fn base(&self) -> &FiniteGroupoid {
        &self.base
    }

    pub fn objects(&self) -> &[OrbitObject] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Morphism representatives between two objects (empty when the objects
    /// live over different components).
    pub fn morphism_reps(&self, from: usize, to: usize) -> &[usize] {
        &self.morphisms[from][to]
    }

    /// The automorphism group of an object, reported as its Weyl group;
    /// `weyl.group` is the finite group of self-maps.
    pub fn automorphism_group(&self, object: usize) -> &WeylGroup {
        &self.automorphisms[object]
    }

    pub fn subgroup_classes(&self, component: usize) -> &SubgroupClasses {
        &self.component_classes[component]
    }

    /// Locates the object of an arbitrary subgroup of a base component,
    /// together with a conjugator to the class representative.
    pub fn classify_subgroup(&self, component: usize, sub: &Subgroup) -> Option<(usize, usize)> {
        let (class, conj) = self.component_classes[component].class_and_conjugator(sub)?;
        let obj = self.object_index[&(component, class)];
        Some((obj, conj))
    }

    pub fn object_of_class(&self, component: usize, class: usize) -> usize {
        self.object_index[&(component, class)]
    }
}

/// Wide classes of groupoid maps used for span legs.
#[derive(Clone)]
pub enum LegClass {
    All,
    Full,
    Faithful,
    Fold,
    Iso,
    Custom(Arc<CustomLegClass>),
}

/// A user-supplied wide subcategory given by a predicate. `faithful_subset`
/// must be set when the predicate only admits faithful maps; hom-set
/// enumeration requires it.
pub struct CustomLegClass {
    pub name: String,
    pub faithful_subset: bool,
    pub admits: Box<dyn Fn(&GroupoidMap) -> bool + Send + Sync>,
}

impl fmt::Debug for LegClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LegClass({})", self.name())
    }
}

impl PartialEq for LegClass {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (LegClass::All, LegClass::All)
            | (LegClass::Full, LegClass::Full)
            | (LegClass::Faithful, LegClass::Faithful)
            | (LegClass::Fold, LegClass::Fold)
            | (LegClass::Iso, LegClass::Iso) => true,
            (LegClass::Custom(a), LegClass::Custom(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl LegClass {
    pub fn name(&self) -> &str {
        match self {
            LegClass::All => "all",
            LegClass::Full => "full",
            LegClass::Faithful => "faithful",
            LegClass::Fold => "fold",
            LegClass::Iso => "iso",
            LegClass::Custom(c) => &c.name,
        }
    }

    pub fn admits(&self, map: &GroupoidMap) -> bool {
        match self {
            LegClass::All => true,
            LegClass::Full => map.is_full(),
            LegClass::Faithful => map.is_faithful(),
            LegClass::Fold => map.is_fold(),
            LegClass::Iso => map.is_equivalence(),
            LegClass::Custom(c) => (c.admits)(map),
        }
    }

    /// Whether every admitted map is faithful (guarantees finite hom-sets).
    pub fn within_faithful(&self) -> bool {
        match self {
            LegClass::Faithful | LegClass::Fold | LegClass::Iso => true,
            LegClass::All | LegClass::Full => false,
            LegClass::Custom(c) => c.faithful_subset,
        }
    }

    pub fn parse(s: &str) -> Result<LegClass> {
        match s {
            "all" => Ok(LegClass::All),
            "full" => Ok(LegClass::Full),
            "faithful" => Ok(LegClass::Faithful),
            "fold" => Ok(LegClass::Fold),
            "iso" => Ok(LegClass::Iso),
            other => Err(Error::InvalidInput(format!("unknown leg class `{other}`"))),
        }
    }
}

/// Enumerates one representative per isomorphism class of maps `Y -> X` in
/// the requested class. Classes of maps are (assignment, componentwise
/// conjugacy classes); the stored canonical forms make representatives
/// directly comparable.
pub fn maps_up_to_iso(
    y: &FiniteGroupoid,
    x: &FiniteGroupoid,
    class: &LegClass,
) -> Result<Vec<GroupoidMap>> {
    // hom classes per (source component, target component)
    let mut hom_classes: Vec<Vec<Vec<GroupHom>>> = Vec::with_capacity(y.len());
    for src in y.components() {
        let mut row = Vec::with_capacity(x.len());
        for dst in x.components() {
            let classes = group::homs_up_to_conjugacy(src, dst)?;
            row.push(classes.into_iter().map(|c| c.representative).collect::<Vec<_>>());
        }
        hom_classes.push(row);
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; y.len()];
    let mut chosen: Vec<usize> = vec![0usize; y.len()];
    fn recurse(
        y: &FiniteGroupoid,
        x: &FiniteGroupoid,
        class: &LegClass,
        hom_classes: &[Vec<Vec<GroupHom>>],
        depth: usize,
        assignment: &mut Vec<usize>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<GroupoidMap>,
    ) {
        if depth == y.len() {
            let homs: Vec<GroupHom> = (0..y.len())
                .map(|i| hom_classes[i][assignment[i]][chosen[i]].clone())
                .collect();
            let map = GroupoidMap::new(y.clone(), x.clone(), assignment.clone(), homs)
                .expect("enumerated data is valid");
            if class.admits(&map) {
                out.push(map);
            }
            return;
        }
        for j in 0..x.len() {
            assignment[depth] = j;
            for c in 0..hom_classes[depth][j].len() {
                chosen[depth] = c;
                recurse(y, x, class, hom_classes, depth + 1, assignment, chosen, out);
            }
        }
        // the empty groupoid has one (empty) map; handled by depth == len
    }
    if y.is_empty() {
        let map = GroupoidMap::new(y.clone(), x.clone(), Vec::new(), Vec::new())?;
        if class.admits(&map) {
            out.push(map);
        }
        return Ok(out);
    }
    if x.is_empty() {
        return Ok(out);
    }
    recurse(y, x, class, &hom_classes, 0, &mut assignment, &mut chosen, &mut out);
    out.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    Ok(out)
}
