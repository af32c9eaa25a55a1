//! Module categories over a monoid in the structural duoidal base, with
//! equalizer hom objects, representable internal homs, the endomorphism end
//! of the forgetful functor, restriction along monoid morphisms, pairing of
//! module categories over a composite monoid, and the two-way passage between
//! bimonoid structures on a monoid and monoidal structures lifted to its
//! modules.
//!
//! The ambient carrier is [`ConcreteDuoidal`]: both tensors are the base
//! tensor and hom objects are structural. A module category over a monoid in
//! it *is* materialized as a genuine [`FinCat`]: the hom object from `(A, α)`
//! to `(B, β)` is the subobject of `[A, B]` carved out by equalizing
//! "precompose with the action" against "act after tensoring", and
//! composition and identities are the base category's operations factored
//! through those subobjects. The monoidal structure a bimonoid induces on
//! modules, by contrast, tensors arbitrary modules — carrier sizes multiply,
//! so no finite object list containing a carrier of size two or more closes
//! under it. That structure is therefore realized structurally as
//! [`LiftedMonoidalStructure`], an implementation of [`MonoidalOps`] whose
//! objects carry their own actions; it is checked at caller-supplied
//! witnesses by [`check_lifted_monoidal`] and can be materialized into a
//! table-backed [`MonoidalStructure`] by [`materialize_lifted`] whenever an
//! object list happens to be closed (for example subterminal carriers).
//!
//! Report identifiers `"(12)"` (hom subobjects cut out by the equalizer),
//! `"(13)"` (the comparison square for paired modules over a composite
//! monoid), and `"(15)"` (the counit recovering a monoid from the
//! endomorphisms of its regular module) are this tool's stable product
//! labels for those conditions.

use std::sync::Arc;

use crate::base::{
    associator, chain, equalizer, hom_action, hom_tensor_box, internal_hom, left_unitor,
    right_unitor, BaseKind, BaseMap, BaseValue, Equalizer, InternalHom,
};
use crate::cat::{tensor_categories, validate_category, FinCat, Mor, VFunctor};
use crate::concrete::ConcreteDuoidal;
use crate::duoidal::{mon_tensor, validate_bimonoid, Bimonoid, DuoidalOps};
use crate::error::{Error, Result};
use crate::monoidal::{MonoidalOps, MonoidalStructure, VMonoid};
use crate::par::scan;
use crate::report::{Check, CheckBuilder, Report};

fn idm(v: BaseValue) -> BaseMap {
    BaseMap::identity(v)
}

/// Converts the outcome of one witnessed instance into a counterexample:
/// `Ok(None)` passes, `Ok(Some(detail))` and construction failures are
/// recorded, budget exhaustion aborts the whole validation.
fn note(cb: &mut CheckBuilder, at: Vec<usize>, outcome: Result<Option<String>>) -> Result<()> {
    match outcome {
        Ok(None) => Ok(()),
        Ok(Some(detail)) => {
            cb.fail(at, detail);
            Ok(())
        }
        Err(e @ Error::Budget { .. }) => Err(e),
        Err(e) => {
            cb.fail(at, format!("construction failed: {e}"));
            Ok(())
        }
    }
}

/// The canonical composition pairing `[B,C] ⊗ [A,B] → [A,C]`, sending the
/// pair `(g, f)` to `g ∘ f` (outer map first, matching `compose`).
fn hom_compose(outer: &InternalHom, inner: &InternalHom, out: &InternalHom) -> Result<BaseMap> {
    if outer.y != inner.z || out.y != inner.y || out.z != outer.z {
        return Err(Error::Shape("hom composition endpoints do not line up".into()));
    }
    let src = outer.value.tensor(&inner.value)?;
    let mut images = Vec::with_capacity(src.size);
    for g in 0..outer.value.size {
        let gm = outer.point_to_map(&outer.value.generator_point(g)?)?;
        for f in 0..inner.value.size {
            let fm = inner.point_to_map(&inner.value.generator_point(f)?)?;
            images.push(out.map_to_point(&gm.compose(&fm)?)?);
        }
    }
    BaseMap::from_generator_images(src, out.value, &images)
}

// ---------------------------------------------------------------------------
// Representable internal homs
// ---------------------------------------------------------------------------

/// One verified entry of the internal-hom table of a monoidal structure: a
/// representing object with its evaluation morphism and, for every object
/// `x`, the two inverse transposition bijections.
#[derive(Clone, Debug)]
pub struct InternalHomEntry {
    pub y: usize,
    pub z: usize,
    /// The representing object `[y, z]`.
    pub hom_object: usize,
    /// The evaluation `[y,z] ⊗ y → z`.
    pub ev: Mor,
    /// Per object `x`: `C(x, [y,z]) → C(x⊗y, z)`, `f ↦ ev ∘ (f ⊗ 1)`.
    pub uncurry: Vec<BaseMap>,
    /// Per object `x`: the inverse of [`InternalHomEntry::uncurry`].
    pub curry: Vec<BaseMap>,
}

/// Searches for a representing object for maps into `z` after tensoring with
/// `y`: the first object (in index order) admitting an evaluation morphism
/// (in point order) whose transposition map is a bijection against *every*
/// object. Returns `Ok(None)` when no object represents the pair, which is
/// the verdict that the structure is not closed there.
pub fn internal_hom_search(
    ms: &MonoidalStructure,
    y: usize,
    z: usize,
) -> Result<Option<InternalHomEntry>> {
    let n = ms.object_count();
    'candidates: for h in 0..n {
        // A bijection needs equal point counts everywhere; this filter is
        // exact for sets and dimensions alike.
        for x in 0..n {
            let have = ms.cat.hom(x, h).point_count()?;
            let need = ms.cat.hom(ms.tensor_of(x, y), z).point_count()?;
            if have != need {
                continue 'candidates;
            }
        }
        'evaluations: for ev in ms.cat.all_mors(ms.tensor_of(h, y), z)? {
            let mut uncurry = Vec::with_capacity(n);
            let mut curry = Vec::with_capacity(n);
            for x in 0..n {
                let transpose = ms
                    .cat
                    .post_compose(ms.tensor_of(x, y), &ev)?
                    .compose(&ms.act_right(x, h, y)?)?;
                let Some(inverse) = transpose.invert() else {
                    continue 'evaluations;
                };
                uncurry.push(transpose);
                curry.push(inverse);
            }
            return Ok(Some(InternalHomEntry { y, z, hom_object: h, ev, uncurry, curry }));
        }
    }
    Ok(None)
}

/// The full internal-hom table of a monoidal structure: one search result per
/// ordered object pair, `None` marking the pairs at which the structure is
/// not closed.
#[derive(Debug)]
pub struct InternalHomTable {
    pub object_count: usize,
    /// Entry for the pair `(y, z)` at index `y * object_count + z`.
    pub entries: Vec<Option<InternalHomEntry>>,
}

impl InternalHomTable {
    pub fn entry(&self, y: usize, z: usize) -> Option<&InternalHomEntry> {
        self.entries[y * self.object_count + z].as_ref()
    }

    /// One check, failing at every pair that lacks a representing object.
    pub fn closedness_report(&self) -> Report {
        let mut cb = CheckBuilder::new("internal-hom-closedness");
        for (p, e) in self.entries.iter().enumerate() {
            if e.is_none() {
                cb.fail(
                    vec![p / self.object_count, p % self.object_count],
                    "no representing object",
                );
            }
        }
        Report::from_checks(vec![cb.finish()])
    }
}

/// Runs [`internal_hom_search`] for every ordered pair of objects.
pub fn internal_hom_table(ms: &MonoidalStructure) -> Result<InternalHomTable> {
    let n = ms.object_count();
    let searched: Vec<Result<Option<InternalHomEntry>>> =
        scan(n * n, |p| Some(internal_hom_search(ms, p / n, p % n)));
    let entries = searched.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(InternalHomTable { object_count: n, entries })
}

/// A representing object found among structural carriers: the carrier with
/// its evaluation map out of the product.
#[derive(Clone, Debug)]
pub struct ConcreteHomWitness {
    pub hom: BaseValue,
    /// `hom ⊗ y → z`.
    pub ev: BaseMap,
}

/// The transposition `[x, h] → [x⊗y, z]`, `f ↦ ev ∘ (f ⊗ 1)`, for a candidate
/// evaluation `ev: h⊗y → z` on structural carriers.
pub fn concrete_transpose(
    h: &BaseValue,
    ev: &BaseMap,
    x: &BaseValue,
    y: &BaseValue,
    z: &BaseValue,
) -> Result<BaseMap> {
    if ev.source != h.tensor(y)? || ev.target != *z {
        return Err(Error::Shape("evaluation endpoints do not match the candidate".into()));
    }
    let from = internal_hom(x, h)?;
    let to = internal_hom(&x.tensor(y)?, z)?;
    let mut images = Vec::with_capacity(from.value.size);
    for g in 0..from.value.size {
        let gm = from.point_to_map(&from.value.generator_point(g)?)?;
        images.push(to.map_to_point(&ev.compose(&gm.tensor(&idm(*y))?)?)?);
    }
    BaseMap::from_generator_images(from.value, to.value, &images)
}

/// [`internal_hom_search`] over structural carriers: candidate hom objects
/// are carriers of size `0..=max_size`, probed against the supplied carrier
/// list. The first carrier (in size order) with an evaluation (in point
/// order) whose transposition is a bijection at every probe wins; `Ok(None)`
/// reports that no carrier up to the size limit represents the pair.
pub fn concrete_internal_hom_search(
    kind: BaseKind,
    y: &BaseValue,
    z: &BaseValue,
    probes: &[BaseValue],
    max_size: usize,
) -> Result<Option<ConcreteHomWitness>> {
    'candidates: for size in 0..=max_size {
        let h = BaseValue::new(kind, size)?;
        for x in probes {
            let have = internal_hom(x, &h)?.value.point_count()?;
            let need = internal_hom(&x.tensor(y)?, z)?.value.point_count()?;
            if have != need {
                continue 'candidates;
            }
        }
        let out = internal_hom(&h.tensor(y)?, z)?;
        'evaluations: for evp in out.value.points()? {
            let ev = out.point_to_map(&evp)?;
            for x in probes {
                if concrete_transpose(&h, &ev, x, y, z)?.invert().is_none() {
                    continue 'evaluations;
                }
            }
            return Ok(Some(ConcreteHomWitness { hom: h, ev }));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Module objects
// ---------------------------------------------------------------------------

/// A right module over a monoid in the structural base: a carrier with an
/// action `carrier ⊗ M → carrier` satisfying the unit and associativity
/// action laws.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleObject {
    pub carrier: BaseValue,
    /// `carrier ⊗ M → carrier`.
    pub action: BaseMap,
}

impl ModuleObject {
    /// Wraps a carrier and action after verifying the module laws exactly.
    pub fn new(m: &VMonoid, carrier: BaseValue, action: BaseMap) -> Result<ModuleObject> {
        let obj = ModuleObject { carrier, action };
        let checks = module_object_checks(m, &obj)?;
        if let Some(bad) = checks.iter().find(|c| !c.ok) {
            return Err(Error::Precondition(format!(
                "action on a carrier of size {} fails {}",
                carrier.size, bad.id
            )));
        }
        Ok(obj)
    }
}

/// The monoid acting on itself by its multiplication.
pub fn regular_module(m: &VMonoid) -> ModuleObject {
    ModuleObject { carrier: m.carrier, action: m.mul.clone() }
}

fn check_module_shape(m: &VMonoid, obj: &ModuleObject) -> Result<()> {
    let expect_src = obj.carrier.tensor(&m.carrier)?;
    if obj.action.source != expect_src || obj.action.target != obj.carrier {
        return Err(Error::Shape(format!(
            "action endpoints {:?} -> {:?} do not match {:?} -> {:?}",
            obj.action.source, obj.action.target, expect_src, obj.carrier
        )));
    }
    Ok(())
}

/// The two action laws of a module object, as named checks with exact
/// counterexample details: acting by the unit is the unitor, and acting
/// twice equals acting by the product (through the associator).
pub fn module_object_checks(m: &VMonoid, obj: &ModuleObject) -> Result<Vec<Check>> {
    check_module_shape(m, obj)?;
    let a = obj.carrier;
    let id_a = idm(a);
    let id_m = idm(m.carrier);

    let mut unit_law = CheckBuilder::new("module-action-unit");
    let via_unit = obj.action.compose(&id_a.tensor(&m.unit)?)?;
    let unitor = right_unitor(&a)?;
    if via_unit != unitor {
        unit_law.fail(vec![], format!("{} vs {}", via_unit.describe(), unitor.describe()));
    }

    let mut assoc_law = CheckBuilder::new("module-action-associativity");
    let two_steps = obj.action.compose(&obj.action.tensor(&id_m)?)?;
    let one_step = chain(&[
        &associator(&a, &m.carrier, &m.carrier)?,
        &id_a.tensor(&m.mul)?,
        &obj.action,
    ])?;
    if two_steps != one_step {
        assoc_law.fail(vec![], format!("{} vs {}", two_steps.describe(), one_step.describe()));
    }

    Ok(vec![unit_law.finish(), assoc_law.finish()])
}

pub fn validate_module_object(m: &VMonoid, obj: &ModuleObject) -> Result<Report> {
    Ok(Report::from_checks(module_object_checks(m, obj)?))
}

/// A morphism of modules: a base map verified to intertwine the two actions.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMorphism {
    pub dom: ModuleObject,
    pub cod: ModuleObject,
    pub map: BaseMap,
}

impl ModuleMorphism {
    /// Wraps a base map after verifying `cod.action ∘ (map ⊗ 1) = map ∘
    /// dom.action` exactly. `monoid_carrier` is the carrier of the acting
    /// monoid.
    pub fn new(
        monoid_carrier: BaseValue,
        dom: ModuleObject,
        cod: ModuleObject,
        map: BaseMap,
    ) -> Result<ModuleMorphism> {
        if map.source != dom.carrier || map.target != cod.carrier {
            return Err(Error::Shape(format!(
                "map endpoints {:?} -> {:?} do not match the module carriers {:?} -> {:?}",
                map.source, map.target, dom.carrier, cod.carrier
            )));
        }
        let acted = cod.action.compose(&map.tensor(&idm(monoid_carrier))?)?;
        let mapped = map.compose(&dom.action)?;
        if acted != mapped {
            return Err(Error::Precondition(format!(
                "map does not intertwine the actions: {} vs {}",
                acted.describe(),
                mapped.describe()
            )));
        }
        Ok(ModuleMorphism { dom, cod, map })
    }
}

/// How many candidate actions a carrier admits: the number of points of
/// `[carrier ⊗ M, carrier]`, computed arithmetically so oversize carriers
/// are diagnosed before any value is built.
fn action_candidate_count(kind: BaseKind, carrier: usize, monoid: usize) -> Option<usize> {
    fn pow(b: usize, e: usize) -> Option<usize> {
        let mut acc: usize = 1;
        for _ in 0..e {
            acc = acc.checked_mul(b)?;
        }
        Some(acc)
    }
    match kind {
        BaseKind::FinSet => pow(carrier, carrier.checked_mul(monoid)?),
        BaseKind::FinVect(p) => {
            pow(p as usize, carrier.checked_mul(monoid)?.checked_mul(carrier)?)
        }
    }
}

/// Largest number of candidate actions (equivalently, points of the ambient
/// hom objects) that default enumeration will scan per carrier; beyond it,
/// callers supply explicit module objects.
pub const ACTION_ENUMERATION_BOUND: usize = 64;

/// Enumerates every module structure on the given carrier by scanning all
/// candidate action maps in their fixed point order and keeping exactly the
/// lawful ones.
pub fn enumerate_module_objects(
    d: &ConcreteDuoidal,
    m: &VMonoid,
    carrier: BaseValue,
) -> Result<Vec<ModuleObject>> {
    if carrier.kind != d.kind() || m.carrier.kind != d.kind() {
        return Err(Error::KindMismatch(
            "carrier and monoid must live in the ambient base".into(),
        ));
    }
    let count = action_candidate_count(d.kind(), carrier.size, m.carrier.size)
        .filter(|&c| c <= ACTION_ENUMERATION_BOUND)
        .ok_or_else(|| {
            Error::Precondition(format!(
                "candidate actions on a carrier of size {} over a monoid of size {} exceed \
                 the enumeration bound {}; supply explicit module objects",
                carrier.size, m.carrier.size, ACTION_ENUMERATION_BOUND
            ))
        })?;
    let ih = internal_hom(&carrier.tensor(&m.carrier)?, &carrier)?;
    let lawful: Vec<Result<ModuleObject>> = scan(count, |k| {
        let attempt = (|| -> Result<Option<ModuleObject>> {
            let action = ih.point_to_map(&ih.value.point(k)?)?;
            let obj = ModuleObject { carrier, action };
            if module_object_checks(m, &obj)?.iter().all(|c| c.ok) {
                Ok(Some(obj))
            } else {
                Ok(None)
            }
        })();
        match attempt {
            Ok(Some(obj)) => Some(Ok(obj)),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    });
    lawful.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Module categories
// ---------------------------------------------------------------------------

/// The category of modules over a fixed monoid, materialized as a genuine
/// enriched category: hom objects are the subobjects of the ambient homs
/// `[A, B]` cut out by the module-map equalizer, composition and identities
/// are the base operations factored through them. The forgetful functor is
/// carried structurally: on objects it reads off [`ModuleObject::carrier`],
/// on homs it is the stored equalizer inclusion.
pub struct ModuleCategory {
    pub duoidal: ConcreteDuoidal,
    pub monoid: VMonoid,
    pub objects: Vec<ModuleObject>,
    pub cat: Arc<FinCat>,
    homs: Vec<InternalHom>,
    equalizers: Vec<Equalizer>,
}

impl ModuleCategory {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// Index of an object equal to `obj` (carrier and action), if present.
    pub fn object_index(&self, obj: &ModuleObject) -> Option<usize> {
        self.objects.iter().position(|o| o == obj)
    }

    /// The ambient hom `[A_a, A_b]` the module hom embeds into.
    pub fn hom_table(&self, a: usize, b: usize) -> &InternalHom {
        &self.homs[a * self.object_count() + b]
    }

    pub fn hom_equalizer(&self, a: usize, b: usize) -> &Equalizer {
        &self.equalizers[a * self.object_count() + b]
    }

    /// The forgetful functor on homs: the inclusion of the module hom into
    /// the ambient hom `[A_a, A_b]`.
    pub fn inclusion(&self, a: usize, b: usize) -> &BaseMap {
        &self.hom_equalizer(a, b).incl
    }

    /// The bare base map a morphism of this category names.
    pub fn underlying_map(&self, f: &Mor) -> Result<BaseMap> {
        self.cat.check_mor(f)?;
        let ambient = self.inclusion(f.dom, f.cod).compose(&f.point)?;
        self.hom_table(f.dom, f.cod).point_to_map(&ambient)
    }

    /// Wraps a bare module map `A_a → A_b` as a morphism of this category,
    /// erroring if it is not a module map.
    pub fn as_morphism(&self, a: usize, b: usize, f: &BaseMap) -> Result<Mor> {
        let ambient = self.hom_table(a, b).map_to_point(f)?;
        let point = self.hom_equalizer(a, b).factorize(&ambient)?;
        Ok(Mor { dom: a, cod: b, point })
    }
}

/// The two parallel legs `[A, B] ⇉ [A⊗M, B]` whose equalizer is the module
/// hom: precomposition with the domain action, and the codomain action after
/// tensoring with the monoid.
fn module_hom_legs(
    m: &VMonoid,
    dom: &ModuleObject,
    cod: &ModuleObject,
    ambient: &InternalHom,
) -> Result<(InternalHom, BaseMap, BaseMap)> {
    let extended = internal_hom(&dom.carrier.tensor(&m.carrier)?, &cod.carrier)?;
    let precompose = hom_action(ambient, &extended, &dom.action, &idm(cod.carrier))?;
    let mut images = Vec::with_capacity(ambient.value.size);
    for g in 0..ambient.value.size {
        let gm = ambient.point_to_map(&ambient.value.generator_point(g)?)?;
        let acted = cod.action.compose(&gm.tensor(&idm(m.carrier))?)?;
        images.push(extended.map_to_point(&acted)?);
    }
    let act_after = BaseMap::from_generator_images(ambient.value, extended.value, &images)?;
    Ok((extended, precompose, act_after))
}

/// Builds the module category on an explicit object list. Objects are
/// shape-checked here; their laws are the business of
/// [`validate_module_category`], so corrupted inputs build (when the
/// factorizations still go through) and fail validation loudly.
pub fn module_category_from_objects(
    d: &ConcreteDuoidal,
    m: &VMonoid,
    objects: Vec<ModuleObject>,
) -> Result<ModuleCategory> {
    for obj in &objects {
        if obj.carrier.kind != d.kind() {
            return Err(Error::KindMismatch("object lives in the wrong base".into()));
        }
        check_module_shape(m, obj)?;
    }
    let n = objects.len();

    let built: Vec<Result<(InternalHom, Equalizer)>> = scan(n * n, |p| {
        let (a, b) = (p / n, p % n);
        Some((|| {
            let ambient = internal_hom(&objects[a].carrier, &objects[b].carrier)?;
            let (_, precompose, act_after) =
                module_hom_legs(m, &objects[a], &objects[b], &ambient)?;
            let eq = equalizer(&precompose, &act_after)?;
            Ok((ambient, eq))
        })())
    });
    let mut homs = Vec::with_capacity(n * n);
    let mut equalizers = Vec::with_capacity(n * n);
    for r in built {
        let (ambient, eq) = r?;
        homs.push(ambient);
        equalizers.push(eq);
    }

    let comps: Vec<Result<BaseMap>> = scan(n * n * n, |t| {
        let (a, b, c) = (t / (n * n), (t / n) % n, t % n);
        Some((|| {
            let pairing = hom_compose(&homs[b * n + c], &homs[a * n + b], &homs[a * n + c])?;
            let included =
                pairing.compose(&equalizers[b * n + c].incl.tensor(&equalizers[a * n + b].incl)?)?;
            equalizers[a * n + c].factorize(&included).map_err(|e| match e {
                budget @ Error::Budget { .. } => budget,
                other => Error::Precondition(format!(
                    "composition escapes the module homs at ({a},{b},{c}): {other}"
                )),
            })
        })())
    });
    let comp = comps.into_iter().collect::<Result<Vec<_>>>()?;

    let mut ident = Vec::with_capacity(n);
    for (a, obj) in objects.iter().enumerate() {
        let id_point = homs[a * n + a].map_to_point(&idm(obj.carrier))?;
        let point = equalizers[a * n + a].factorize(&id_point).map_err(|e| match e {
            budget @ Error::Budget { .. } => budget,
            other => Error::Precondition(format!(
                "the identity map is not a module map at {a}: {other}"
            )),
        })?;
        ident.push(point);
    }

    let labels = (0..n).map(|i| format!("m{i}")).collect();
    let hom_values = equalizers.iter().map(|e| e.value).collect();
    let cat = Arc::new(FinCat::new(d.kind(), labels, hom_values, comp, ident)?);
    Ok(ModuleCategory { duoidal: *d, monoid: m.clone(), objects, cat, homs, equalizers })
}

/// Default carrier list: every size whose candidate actions fit the
/// enumeration bound.
fn default_carriers(d: &ConcreteDuoidal, m: &VMonoid) -> Result<Vec<BaseValue>> {
    let mut out = Vec::new();
    for size in 0.. {
        let fits = action_candidate_count(d.kind(), size, m.carrier.size)
            .is_some_and(|c| c <= ACTION_ENUMERATION_BOUND);
        if !fits {
            break;
        }
        out.push(BaseValue::new(d.kind(), size)?);
    }
    Ok(out)
}

/// Builds the module category over `m` by enumerating every lawful module
/// structure on every carrier within the enumeration bound, and appending
/// the monoid's own regular module if its carrier lies beyond the bound.
/// Carriers whose ambient homs exceed the size budget surface as budget
/// errors; [`module_category_from_objects`] is the escape hatch.
pub fn build_module_category(d: &ConcreteDuoidal, m: &VMonoid) -> Result<ModuleCategory> {
    let mut objects = Vec::new();
    for carrier in default_carriers(d, m)? {
        objects.extend(enumerate_module_objects(d, m, carrier)?);
    }
    let regular = regular_module(m);
    if !objects.contains(&regular) && module_object_checks(m, &regular)?.iter().all(|c| c.ok) {
        objects.push(regular);
    }
    module_category_from_objects(d, m, objects)
}

/// How many ambient points the independent hom refiltering will scan per
/// pair before switching to the size-comparison argument.
const REFILTER_POINT_CAP: usize = 4096;

/// Checks a module category: the action laws of every object, that each hom
/// really is the subobject of module maps (inclusion monic, membership
/// recomputed independently), that composition and identities are the base
/// ones seen through the inclusions, the underlying category laws, and the
/// counit identity — the endomorphisms of the regular module recover the
/// monoid exactly.
pub fn validate_module_category(mc: &ModuleCategory) -> Result<Report> {
    let m = &mc.monoid;
    let n = mc.object_count();
    let kind = mc.duoidal.kind();

    let mut unit_law = CheckBuilder::new("module-action-unit");
    let mut assoc_law = CheckBuilder::new("module-action-associativity");
    for (i, obj) in mc.objects.iter().enumerate() {
        for c in module_object_checks(m, obj)? {
            if c.ok {
                continue;
            }
            let detail = c
                .counterexamples
                .first()
                .map(|x| x.detail.clone())
                .unwrap_or_else(|| "law fails".into());
            match c.id.as_str() {
                "module-action-unit" => unit_law.fail(vec![i], detail),
                _ => assoc_law.fail(vec![i], detail),
            }
        }
    }

    let mut subobject = CheckBuilder::new("module-hom-subobject").axiom("(12)");
    for a in 0..n {
        for b in 0..n {
            let incl = mc.inclusion(a, b);
            let monic = match kind {
                BaseKind::FinSet => {
                    let mut seen = std::collections::HashSet::new();
                    (0..incl.source.size).all(|k| seen.insert(incl.apply(k).unwrap_or(usize::MAX)))
                }
                BaseKind::FinVect(_) => incl.matrix()?.kernel_basis().cols == 0,
            };
            if !monic {
                subobject.fail(vec![a, b], "inclusion identifies distinct module maps");
            }
        }
    }

    let mut membership = CheckBuilder::new("module-hom-equalizer").axiom("(12)");
    for a in 0..n {
        for b in 0..n {
            let ambient = mc.hom_table(a, b);
            let eq = mc.hom_equalizer(a, b);
            let dom = &mc.objects[a];
            let cod = &mc.objects[b];
            let id_m = idm(m.carrier);
            let intertwines = |f: &BaseMap| -> Result<bool> {
                Ok(cod.action.compose(&f.tensor(&id_m)?)? == f.compose(&dom.action)?)
            };
            // Every member names a module map.
            for k in 0..eq.value.size {
                let f = ambient.point_to_map(&eq.incl.compose(&eq.value.generator_point(k)?)?)?;
                if !intertwines(&f)? {
                    membership.fail(vec![a, b, k], "hom member fails the module-map condition");
                }
            }
            // Completeness: nothing lawful was left out.
            if kind == BaseKind::FinSet && ambient.value.point_count()? <= REFILTER_POINT_CAP {
                let mut recomputed = Vec::new();
                for (idx, pt) in ambient.value.points()?.into_iter().enumerate() {
                    if intertwines(&ambient.point_to_map(&pt)?)? {
                        recomputed.push(idx);
                    }
                }
                let included: Vec<usize> =
                    (0..eq.value.size).map(|k| eq.incl.apply(k)).collect::<Result<_>>()?;
                if included != recomputed {
                    membership.fail(vec![a, b], "refiltered member set differs");
                }
            } else {
                let (_, precompose, act_after) = module_hom_legs(m, dom, cod, ambient)?;
                let again = equalizer(&precompose, &act_after)?;
                if again.value.size != eq.value.size {
                    membership.fail(vec![a, b], "recomputed solution space has a different size");
                }
            }
        }
    }

    let mut comp_forgets = CheckBuilder::new("module-composition-forgets");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let through_cat =
                    mc.inclusion(a, c).compose(mc.cat.comp_map(a, b, c))?;
                let pairing = hom_compose(
                    mc.hom_table(b, c),
                    mc.hom_table(a, b),
                    mc.hom_table(a, c),
                )?;
                let through_base =
                    pairing.compose(&mc.inclusion(b, c).tensor(mc.inclusion(a, b))?)?;
                if through_cat != through_base {
                    comp_forgets.fail(vec![a, b, c], "composition disagrees with the base");
                }
            }
        }
    }

    let mut id_forgets = CheckBuilder::new("module-identities-forget");
    for a in 0..n {
        let through_cat = mc.inclusion(a, a).compose(mc.cat.ident_point(a))?;
        let base_id = mc.hom_table(a, a).map_to_point(&idm(mc.objects[a].carrier))?;
        if through_cat != base_id {
            id_forgets.fail(vec![a], "identity point does not name the identity map");
        }
    }

    let mut counit = CheckBuilder::new("end-counit").axiom("(15)");
    match end_of_representable(mc) {
        Ok(end) => {
            if end.recovered.mul != m.mul || end.recovered.unit != m.unit {
                counit.fail(vec![], "endomorphism monoid does not transport back to the input");
            }
        }
        Err(e @ Error::Budget { .. }) => return Err(e),
        Err(e) => counit.fail(vec![], format!("end computation failed: {e}")),
    }

    let laws = Report::from_checks(vec![
        unit_law.finish(),
        assoc_law.finish(),
        subobject.finish(),
        membership.finish(),
        comp_forgets.finish(),
        id_forgets.finish(),
        counit.finish(),
    ]);
    Ok(Report::merge(vec![laws, validate_category(&mc.cat)?]))
}

// ---------------------------------------------------------------------------
// The end of the forgetful functor
// ---------------------------------------------------------------------------

/// The end of the forgetful functor, computed through its representing
/// object: the endomorphism monoid of the regular module, together with the
/// comparison isomorphism from the acting monoid.
#[derive(Debug)]
pub struct RecoveredEnd {
    /// Index of the regular module inside the category.
    pub representing: usize,
    /// The endomorphism carrier `hom((M,μ), (M,μ))`.
    pub carrier: BaseValue,
    /// Composition and identity of the category as a monoid on
    /// [`RecoveredEnd::carrier`].
    pub end_monoid: VMonoid,
    /// The comparison `M → carrier`, sending an element to left
    /// multiplication by it; invertible.
    pub iso: BaseMap,
    /// The endomorphism monoid transported back along the comparison; equal
    /// to the input monoid table for lawful inputs.
    pub recovered: VMonoid,
}

/// Computes the end of the forgetful functor through representability: finds
/// the regular module, factorizes curried multiplication into its
/// endomorphism hom, inverts the comparison, and transports composition and
/// identity back to the monoid carrier.
pub fn end_of_representable(mc: &ModuleCategory) -> Result<RecoveredEnd> {
    let m = &mc.monoid;
    let k = mc.object_index(&regular_module(m)).ok_or_else(|| {
        Error::Precondition(
            "representing object not found: the category does not contain the monoid acting \
             on itself"
                .into(),
        )
    })?;
    let eq = mc.hom_equalizer(k, k);
    let ambient = mc.hom_table(k, k);
    let curried_mul = ambient.curry(&m.carrier, &m.mul)?;
    let iso = eq.factorize(&curried_mul).map_err(|e| match e {
        budget @ Error::Budget { .. } => budget,
        other => Error::Precondition(format!(
            "left multiplications are not module endomorphisms: {other}"
        )),
    })?;
    let inverse = iso.invert().ok_or_else(|| {
        Error::Precondition("comparison to the endomorphism object is not invertible".into())
    })?;
    let comp = mc.cat.comp_map(k, k, k);
    let end_monoid = VMonoid {
        carrier: eq.value,
        mul: comp.clone(),
        unit: mc.cat.ident_point(k).clone(),
    };
    let recovered = VMonoid {
        carrier: m.carrier,
        mul: chain(&[&iso.tensor(&iso)?, comp, &inverse])?,
        unit: inverse.compose(mc.cat.ident_point(k))?,
    };
    Ok(RecoveredEnd { representing: k, carrier: eq.value, end_monoid, iso, recovered })
}

// ---------------------------------------------------------------------------
// Restriction along monoid morphisms
// ---------------------------------------------------------------------------

/// A morphism of monoids in the base, verified on construction.
#[derive(Clone, Debug)]
pub struct MonoidMorphism {
    pub src: VMonoid,
    pub tgt: VMonoid,
    pub map: BaseMap,
}

impl MonoidMorphism {
    pub fn new(src: VMonoid, tgt: VMonoid, map: BaseMap) -> Result<MonoidMorphism> {
        if map.source != src.carrier || map.target != tgt.carrier {
            return Err(Error::Shape("map endpoints do not match the monoid carriers".into()));
        }
        if map.compose(&src.mul)? != tgt.mul.compose(&map.tensor(&map)?)? {
            return Err(Error::Precondition(
                "map does not respect the multiplications".into(),
            ));
        }
        if map.compose(&src.unit)? != tgt.unit {
            return Err(Error::Precondition("map does not respect the units".into()));
        }
        Ok(MonoidMorphism { src, tgt, map })
    }
}

fn same_monoid(a: &VMonoid, b: &VMonoid) -> bool {
    a.carrier == b.carrier && a.mul == b.mul && a.unit == b.unit
}

/// The module obtained by acting through a monoid morphism into the acting
/// monoid: same carrier, action precomposed with the morphism.
pub fn restrict_module(obj: &ModuleObject, f: &MonoidMorphism) -> Result<ModuleObject> {
    let action = obj.action.compose(&idm(obj.carrier).tensor(&f.map)?)?;
    Ok(ModuleObject { carrier: obj.carrier, action })
}

/// Restriction along a monoid morphism `f: N → M`, as a functor from modules
/// over `M` to modules over `N`: objects keep their carriers and act through
/// `f`, morphisms are carried by the identity on their underlying maps.
pub fn mod_of_morphism(
    f: &MonoidMorphism,
    from: &ModuleCategory,
    to: &ModuleCategory,
) -> Result<VFunctor> {
    if !same_monoid(&f.tgt, &from.monoid) {
        return Err(Error::Precondition(
            "source category is not built over the morphism's target monoid".into(),
        ));
    }
    if !same_monoid(&f.src, &to.monoid) {
        return Err(Error::Precondition(
            "target category is not built over the morphism's source monoid".into(),
        ));
    }
    let n = from.object_count();
    let mut obj = Vec::with_capacity(n);
    for o in &from.objects {
        let restricted = restrict_module(o, f)?;
        let idx = to.object_index(&restricted).ok_or_else(|| {
            Error::Precondition(format!(
                "restricted module on a carrier of size {} is missing from the target category",
                o.carrier.size
            ))
        })?;
        obj.push(idx);
    }
    let mut hom = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let carried = to
                .hom_equalizer(obj[a], obj[b])
                .factorize(from.inclusion(a, b))
                .map_err(|e| match e {
                    budget @ Error::Budget { .. } => budget,
                    other => Error::Precondition(format!(
                        "a module map fails to restrict at ({a},{b}): {other}"
                    )),
                })?;
            hom.push(carried);
        }
    }
    VFunctor::new(from.cat.clone(), to.cat.clone(), obj, hom)
}

/// Checks that restriction commutes with the forgetful inclusions exactly:
/// restricting a morphism does not change its underlying map.
pub fn restriction_triangle_report(
    from: &ModuleCategory,
    to: &ModuleCategory,
    functor: &VFunctor,
) -> Result<Report> {
    let n = from.object_count();
    let mut triangle = CheckBuilder::new("restriction-forgets");
    for a in 0..n {
        for b in 0..n {
            let through = to
                .inclusion(functor.obj[a], functor.obj[b])
                .compose(functor.hom_map(a, b))?;
            if through != *from.inclusion(a, b) {
                triangle.fail(vec![a, b], "underlying map changed under restriction");
            }
        }
    }
    Ok(Report::from_checks(vec![triangle.finish()]))
}

// ---------------------------------------------------------------------------
// Pairing module categories over a composite monoid
// ---------------------------------------------------------------------------

/// The module obtained by tensoring a module over `M` with a module over
/// `N`: the product carrier acting through the interchange.
pub fn pair_module(
    d: &ConcreteDuoidal,
    x: &ModuleObject,
    y: &ModuleObject,
    m: &VMonoid,
    n: &VMonoid,
) -> Result<ModuleObject> {
    let action = chain(&[
        &d.gamma_arr(&x.carrier, &y.carrier, &m.carrier, &n.carrier)?,
        &x.action.tensor(&y.action)?,
    ])?;
    Ok(ModuleObject { carrier: x.carrier.tensor(&y.carrier)?, action })
}

/// The pairing functor from the product of module categories over `M` and
/// `N` to the modules over their composite monoid: pairs of modules go to
/// the paired module, pairs of morphisms to their tensor.
pub fn phi_monoidal(
    d: &ConcreteDuoidal,
    left: &ModuleCategory,
    right: &ModuleCategory,
    target: &ModuleCategory,
) -> Result<VFunctor> {
    let composite = mon_tensor(d, &left.monoid, &right.monoid)?;
    if !same_monoid(&composite, &target.monoid) {
        return Err(Error::Precondition(
            "target category is not built over the composite of the two monoids".into(),
        ));
    }
    let domain = Arc::new(tensor_categories(&left.cat, &right.cat)?);
    let (nl, nr) = (left.object_count(), right.object_count());
    let n = nl * nr;
    let mut obj = Vec::with_capacity(n);
    for i in 0..nl {
        for j in 0..nr {
            let paired =
                pair_module(d, &left.objects[i], &right.objects[j], &left.monoid, &right.monoid)?;
            let idx = target.object_index(&paired).ok_or_else(|| {
                Error::Precondition(format!(
                    "paired module at ({i},{j}) is missing from the composite category"
                ))
            })?;
            obj.push(idx);
        }
    }
    let mut hom = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let (i, j) = (p / nr, p % nr);
            let (k, l) = (q / nr, q % nr);
            let boxed = hom_tensor_box(
                left.hom_table(i, k),
                right.hom_table(j, l),
                target.hom_table(obj[p], obj[q]),
            )?;
            let included =
                boxed.compose(&left.inclusion(i, k).tensor(right.inclusion(j, l))?)?;
            let carried = target
                .hom_equalizer(obj[p], obj[q])
                .factorize(&included)
                .map_err(|e| match e {
                    budget @ Error::Budget { .. } => budget,
                    other => Error::Precondition(format!(
                        "a tensored module map escapes the composite homs at ({p},{q}): {other}"
                    )),
                })?;
            hom.push(carried);
        }
    }
    VFunctor::new(domain, target.cat.clone(), obj, hom)
}

/// The comparison square for the pairing functor: forgetting a paired
/// morphism equals tensoring the two forgotten maps, exactly, at every pair
/// of domain objects.
pub fn phi_square_report(
    left: &ModuleCategory,
    right: &ModuleCategory,
    target: &ModuleCategory,
    phi: &VFunctor,
) -> Result<Report> {
    let (nl, nr) = (left.object_count(), right.object_count());
    let n = nl * nr;
    let mut square = CheckBuilder::new("paired-module-comparison").axiom("(13)");
    for p in 0..n {
        for q in 0..n {
            let (i, j) = (p / nr, p % nr);
            let (k, l) = (q / nr, q % nr);
            let through_phi = target
                .inclusion(phi.obj[p], phi.obj[q])
                .compose(phi.hom_map(p, q))?;
            let boxed = hom_tensor_box(
                left.hom_table(i, k),
                right.hom_table(j, l),
                target.hom_table(phi.obj[p], phi.obj[q]),
            )?;
            let through_base =
                boxed.compose(&left.inclusion(i, k).tensor(right.inclusion(j, l))?)?;
            if through_phi != through_base {
                square.fail(vec![p, q], "square does not commute");
            }
        }
    }
    Ok(Report::from_checks(vec![square.finish()]))
}

// ---------------------------------------------------------------------------
// Lifting a bimonoid to a monoidal structure on modules
// ---------------------------------------------------------------------------

/// The tensor of two modules over a bimonoid: the product carrier, acting by
/// splitting the monoid element with the comultiplication, interchanging,
/// and acting on both factors. The result is verified to satisfy the module
/// laws; a failure means the bimonoid data is corrupt and is an error.
pub fn module_tensor(
    d: &ConcreteDuoidal,
    b: &Bimonoid<ConcreteDuoidal>,
    x: &ModuleObject,
    y: &ModuleObject,
) -> Result<ModuleObject> {
    let carrier = x.carrier.tensor(&y.carrier)?;
    let action = chain(&[
        &idm(carrier).tensor(&b.comul)?,
        &d.gamma_arr(&x.carrier, &y.carrier, &b.carrier, &b.carrier)?,
        &x.action.tensor(&y.action)?,
    ])?;
    ModuleObject::new(&b.monoid_part(), carrier, action).map_err(|e| match e {
        budget @ Error::Budget { .. } => budget,
        other => Error::Precondition(format!(
            "the tensored action violates the module laws (corrupt bimonoid data): {other}"
        )),
    })
}

/// The unit module of a lifted structure: the monoidal unit acting through
/// the counit.
pub fn module_unit(
    d: &ConcreteDuoidal,
    b: &Bimonoid<ConcreteDuoidal>,
) -> Result<ModuleObject> {
    let one = BaseValue::unit(d.kind());
    let action = chain(&[&idm(one).tensor(&b.counit)?, &d.mu_arr()?])?;
    ModuleObject::new(&b.monoid_part(), one, action).map_err(|e| match e {
        budget @ Error::Budget { .. } => budget,
        other => Error::Precondition(format!(
            "the unit action violates the module laws (corrupt bimonoid data): {other}"
        )),
    })
}

/// The monoidal structure a bimonoid induces on its modules, carried
/// structurally: objects are [`ModuleObject`]s, arrows are verified
/// [`ModuleMorphism`]s, the tensor is [`module_tensor`], the unit is
/// [`module_unit`], and the coherence isomorphisms are the base ones —
/// wrapped with an intertwining proof obligation that coassociativity and
/// the counit laws discharge. The forgetful comparison is the identity:
/// tensored carriers are literally tensors of carriers.
#[derive(Debug)]
pub struct LiftedMonoidalStructure {
    duoidal: ConcreteDuoidal,
    bimonoid: Bimonoid<ConcreteDuoidal>,
    unit_object: ModuleObject,
}

impl LiftedMonoidalStructure {
    pub fn duoidal(&self) -> &ConcreteDuoidal {
        &self.duoidal
    }

    pub fn bimonoid(&self) -> &Bimonoid<ConcreteDuoidal> {
        &self.bimonoid
    }

    /// The acting monoid, as a monoid in the base.
    pub fn monoid(&self) -> VMonoid {
        self.bimonoid.monoid_part()
    }
}

/// Builds the lifted structure after validating the bimonoid; a failing
/// bimonoid is refused outright.
pub fn lift_bimonoid_to_monoidal(
    d: &ConcreteDuoidal,
    b: &Bimonoid<ConcreteDuoidal>,
) -> Result<LiftedMonoidalStructure> {
    let report = validate_bimonoid(d, b)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "bimonoid axioms fail ({}); refusing to lift",
            report.failing_ids().join(", ")
        )));
    }
    let unit_object = module_unit(d, b)?;
    Ok(LiftedMonoidalStructure { duoidal: *d, bimonoid: b.clone(), unit_object })
}

impl MonoidalOps for LiftedMonoidalStructure {
    type Obj = ModuleObject;
    type Arr = ModuleMorphism;

    fn unit_obj(&self) -> ModuleObject {
        self.unit_object.clone()
    }
    fn tensor_obj(&self, a: &ModuleObject, b: &ModuleObject) -> Result<ModuleObject> {
        module_tensor(&self.duoidal, &self.bimonoid, a, b)
    }
    fn tensor_arr(&self, f: &ModuleMorphism, g: &ModuleMorphism) -> Result<ModuleMorphism> {
        let dom = self.tensor_obj(&f.dom, &g.dom)?;
        let cod = self.tensor_obj(&f.cod, &g.cod)?;
        ModuleMorphism::new(self.bimonoid.carrier, dom, cod, f.map.tensor(&g.map)?)
    }
    fn compose_arr(&self, g: &ModuleMorphism, f: &ModuleMorphism) -> Result<ModuleMorphism> {
        if f.cod != g.dom {
            return Err(Error::Shape("module morphisms do not meet".into()));
        }
        ModuleMorphism::new(self.bimonoid.carrier, f.dom.clone(), g.cod.clone(), g.map.compose(&f.map)?)
    }
    fn id_arr(&self, a: &ModuleObject) -> Result<ModuleMorphism> {
        ModuleMorphism::new(self.bimonoid.carrier, a.clone(), a.clone(), idm(a.carrier))
    }
    fn assoc_arr(
        &self,
        a: &ModuleObject,
        b: &ModuleObject,
        c: &ModuleObject,
    ) -> Result<ModuleMorphism> {
        let dom = self.tensor_obj(&self.tensor_obj(a, b)?, c)?;
        let cod = self.tensor_obj(a, &self.tensor_obj(b, c)?)?;
        ModuleMorphism::new(
            self.bimonoid.carrier,
            dom,
            cod,
            associator(&a.carrier, &b.carrier, &c.carrier)?,
        )
    }
    fn lunit_arr(&self, a: &ModuleObject) -> Result<ModuleMorphism> {
        let dom = self.tensor_obj(&self.unit_object, a)?;
        ModuleMorphism::new(self.bimonoid.carrier, dom, a.clone(), left_unitor(&a.carrier)?)
    }
    fn runit_arr(&self, a: &ModuleObject) -> Result<ModuleMorphism> {
        let dom = self.tensor_obj(a, &self.unit_object)?;
        ModuleMorphism::new(self.bimonoid.carrier, dom, a.clone(), right_unitor(&a.carrier)?)
    }
    fn invert_arr(&self, f: &ModuleMorphism) -> Result<Option<ModuleMorphism>> {
        match f.map.invert() {
            None => Ok(None),
            Some(inv) => Ok(Some(ModuleMorphism::new(
                self.bimonoid.carrier,
                f.cod.clone(),
                f.dom.clone(),
                inv,
            )?)),
        }
    }
    fn check_arr(&self, f: &ModuleMorphism, dom: &ModuleObject, cod: &ModuleObject) -> Result<()> {
        if f.dom != *dom || f.cod != *cod {
            return Err(Error::Shape("module morphism endpoints do not match".into()));
        }
        Ok(())
    }
    fn describe_arr(&self, f: &ModuleMorphism) -> String {
        f.map.describe()
    }
}

/// Replays the monoidal axioms of a lifted structure at the supplied witness
/// modules (the unit module is always added): witnesses and their tensors
/// satisfy the module laws, the coherence maps intertwine and are
/// invertible, the pentagon and triangle identities hold at every witness
/// tuple, and the forgetful comparison is the identity on carriers.
pub fn check_lifted_monoidal(
    l: &LiftedMonoidalStructure,
    witnesses: &[ModuleObject],
) -> Result<Report> {
    let vm = l.monoid();
    let mut probes: Vec<ModuleObject> = witnesses.to_vec();
    probes.push(l.unit_obj());
    let n = probes.len();

    let mut modules = CheckBuilder::new("lifted-witnesses-are-modules");
    for (i, w) in probes.iter().enumerate() {
        for c in module_object_checks(&vm, w)? {
            if !c.ok {
                modules.fail(vec![i], format!("fails {}", c.id));
            }
        }
    }

    let mut tensors = CheckBuilder::new("lifted-tensor-is-a-module");
    for i in 0..n {
        for j in 0..n {
            note(
                &mut tensors,
                vec![i, j],
                l.tensor_obj(&probes[i], &probes[j]).map(|_| None),
            )?;
        }
    }

    let mut strong = CheckBuilder::new("forgetful-strong-monoidal");
    if l.unit_obj().carrier != BaseValue::unit(l.duoidal.kind()) {
        strong.fail(vec![], "unit module does not lie over the base unit");
    }
    for i in 0..n {
        for j in 0..n {
            note(
                &mut strong,
                vec![i, j],
                (|| {
                    let t = l.tensor_obj(&probes[i], &probes[j])?;
                    let expected = probes[i].carrier.tensor(&probes[j].carrier)?;
                    Ok((t.carrier != expected)
                        .then(|| "tensored carrier is not the carrier tensor".to_string()))
                })(),
            )?;
        }
    }

    let mut coherent = CheckBuilder::new("lifted-coherence-intertwines");
    for i in 0..n {
        note(
            &mut coherent,
            vec![i],
            (|| {
                let lu = l.lunit_arr(&probes[i])?;
                let ru = l.runit_arr(&probes[i])?;
                if l.invert_arr(&lu)?.is_none() || l.invert_arr(&ru)?.is_none() {
                    return Ok(Some("unitor component is not invertible".to_string()));
                }
                Ok(None)
            })(),
        )?;
        for j in 0..n {
            for k in 0..n {
                note(
                    &mut coherent,
                    vec![i, j, k],
                    (|| {
                        let al = l.assoc_arr(&probes[i], &probes[j], &probes[k])?;
                        Ok(l
                            .invert_arr(&al)?
                            .is_none()
                            .then(|| "associator component is not invertible".to_string()))
                    })(),
                )?;
            }
        }
    }

    let mut pentagon = CheckBuilder::new("lifted-pentagon");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for w in 0..n {
                    note(
                        &mut pentagon,
                        vec![i, j, k, w],
                        (|| {
                            let (a, b, c, d2) = (&probes[i], &probes[j], &probes[k], &probes[w]);
                            let ab = l.tensor_obj(a, b)?;
                            let bc = l.tensor_obj(b, c)?;
                            let cd = l.tensor_obj(c, d2)?;
                            let two_steps = l.compose_arr(
                                &l.assoc_arr(a, b, &cd)?,
                                &l.assoc_arr(&ab, c, d2)?,
                            )?;
                            let three_steps = l.compose_arr(
                                &l.tensor_arr(&l.id_arr(a)?, &l.assoc_arr(b, c, d2)?)?,
                                &l.compose_arr(
                                    &l.assoc_arr(a, &bc, d2)?,
                                    &l.tensor_arr(&l.assoc_arr(a, b, c)?, &l.id_arr(d2)?)?,
                                )?,
                            )?;
                            Ok((two_steps != three_steps)
                                .then(|| "pentagon routes differ".to_string()))
                        })(),
                    )?;
                }
            }
        }
    }

    let mut triangle = CheckBuilder::new("lifted-triangle");
    for i in 0..n {
        for j in 0..n {
            note(
                &mut triangle,
                vec![i, j],
                (|| {
                    let (a, b) = (&probes[i], &probes[j]);
                    let via_assoc = l.compose_arr(
                        &l.tensor_arr(&l.id_arr(a)?, &l.lunit_arr(b)?)?,
                        &l.assoc_arr(a, &l.unit_obj(), b)?,
                    )?;
                    let direct = l.tensor_arr(&l.runit_arr(a)?, &l.id_arr(b)?)?;
                    Ok((via_assoc != direct).then(|| "triangle routes differ".to_string()))
                })(),
            )?;
        }
    }

    Ok(Report::from_checks(vec![
        modules.finish(),
        tensors.finish(),
        strong.finish(),
        coherent.finish(),
        pentagon.finish(),
        triangle.finish(),
    ]))
}

/// Materializes a lifted structure into a table-backed monoidal structure on
/// a module category whose object list is closed under the lifted tensor
/// (and contains the unit module); errors otherwise.
pub fn materialize_lifted(
    l: &LiftedMonoidalStructure,
    mc: &ModuleCategory,
) -> Result<MonoidalStructure> {
    if !same_monoid(&l.monoid(), &mc.monoid) {
        return Err(Error::Precondition(
            "the lifted structure and the category act through different monoids".into(),
        ));
    }
    let n = mc.object_count();
    let mut tensor_obj = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let t = l.tensor_obj(&mc.objects[a], &mc.objects[b])?;
            let idx = mc.object_index(&t).ok_or_else(|| {
                Error::Precondition(format!(
                    "object list is not closed under the lifted tensor at ({a},{b})"
                ))
            })?;
            tensor_obj.push(idx);
        }
    }
    let unit = mc.object_index(&l.unit_obj()).ok_or_else(|| {
        Error::Precondition("unit module is missing from the object list".into())
    })?;

    let mut tensor_hom = Vec::with_capacity(n * n * n * n);
    for p in 0..n * n {
        for q in 0..n * n {
            let (a, b) = (p / n, p % n);
            let (c, d2) = (q / n, q % n);
            let boxed = hom_tensor_box(
                mc.hom_table(a, c),
                mc.hom_table(b, d2),
                mc.hom_table(tensor_obj[p], tensor_obj[q]),
            )?;
            let included = boxed.compose(&mc.inclusion(a, c).tensor(mc.inclusion(b, d2))?)?;
            tensor_hom.push(mc.hom_equalizer(tensor_obj[p], tensor_obj[q]).factorize(&included)?);
        }
    }

    let mut assoc = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ab = tensor_obj[a * n + b];
                let bc = tensor_obj[b * n + c];
                let dom = tensor_obj[ab * n + c];
                let cod = tensor_obj[a * n + bc];
                let base = associator(
                    &mc.objects[a].carrier,
                    &mc.objects[b].carrier,
                    &mc.objects[c].carrier,
                )?;
                assoc.push(mc.as_morphism(dom, cod, &base)?);
            }
        }
    }
    let mut lunit = Vec::with_capacity(n);
    let mut runit = Vec::with_capacity(n);
    for a in 0..n {
        let carrier = &mc.objects[a].carrier;
        lunit.push(mc.as_morphism(tensor_obj[unit * n + a], a, &left_unitor(carrier)?)?);
        runit.push(mc.as_morphism(tensor_obj[a * n + unit], a, &right_unitor(carrier)?)?);
    }
    MonoidalStructure::new(mc.cat.clone(), tensor_obj, tensor_hom, unit, assoc, lunit, runit)
}

// ---------------------------------------------------------------------------
// Extracting the bimonoid back from a lifted structure
// ---------------------------------------------------------------------------

/// Recovers a bimonoid from the monoidal data of a lifted structure over
/// `m`: the comultiplication is read off the action of the tensored regular
/// module at the pair of units, the counit off the unit module's action.
/// The formula is the fixed composite
/// `M → 𝟏∗M → (M∘M)∗M → M∘M` (units into the tensor object, then its
/// action), and `M → 𝟏∗M → 𝟏` for the counit. Returns the recovered
/// bimonoid together with its axiom report; a failing report means the
/// supplied data was not a genuine lift.
pub fn extract_bimonoid_from_monoidal(
    d: &ConcreteDuoidal,
    m: &VMonoid,
    tensor_object: &ModuleObject,
    unit_object: &ModuleObject,
) -> Result<(Bimonoid<ConcreteDuoidal>, Report)> {
    let double = m.carrier.tensor(&m.carrier)?;
    if tensor_object.carrier != double {
        return Err(Error::Precondition(
            "tensor of the regular module does not lie over the double carrier; the \
             forgetful comparison is not the identity"
                .into(),
        ));
    }
    check_module_shape(m, tensor_object)?;
    if unit_object.carrier != BaseValue::unit(d.kind()) {
        return Err(Error::Precondition(
            "unit module does not lie over the monoidal unit".into(),
        ));
    }
    check_module_shape(m, unit_object)?;

    let into_left = left_unitor(&m.carrier)?
        .invert()
        .ok_or_else(|| Error::NotInvertible("unitor".into()))?;
    let both_units = m.unit.tensor(&m.unit)?.compose(&d.delta_arr()?)?;
    let comul = chain(&[
        &into_left,
        &both_units.tensor(&idm(m.carrier))?,
        &tensor_object.action,
    ])?;
    let counit = unit_object.action.compose(&into_left)?;
    let recovered = Bimonoid {
        carrier: m.carrier,
        mul: m.mul.clone(),
        unit: m.unit.clone(),
        comul,
        counit,
    };
    let report = validate_bimonoid(d, &recovered)?;
    Ok((recovered, report))
}

/// Extraction applied to a lifted structure itself: tensors the regular
/// module with itself and reads the bimonoid back off.
pub fn extract_from_lift(
    l: &LiftedMonoidalStructure,
) -> Result<(Bimonoid<ConcreteDuoidal>, Report)> {
    let vm = l.monoid();
    let reg = regular_module(&vm);
    let tensor_object = l.tensor_obj(&reg, &reg)?;
    extract_bimonoid_from_monoidal(&l.duoidal, &vm, &tensor_object, &l.unit_obj())
}

/// Searches for an isomorphism component between the tensors two lifted
/// structures assign to the same pair of modules: a base isomorphism of the
/// (shared) carrier intertwining both tensored actions. The identity is
/// tried first; otherwise every point of the ambient hom is scanned in point
/// order. `Ok(None)` means the two tensors are genuinely non-isomorphic at
/// this pair.
pub fn lifted_isomorphism_at(
    l1: &LiftedMonoidalStructure,
    l2: &LiftedMonoidalStructure,
    x: &ModuleObject,
    y: &ModuleObject,
) -> Result<Option<ModuleMorphism>> {
    if !same_monoid(&l1.monoid(), &l2.monoid()) {
        return Err(Error::Precondition("the two structures lift different monoids".into()));
    }
    let t1 = l1.tensor_obj(x, y)?;
    let t2 = l2.tensor_obj(x, y)?;
    let carrier = l1.bimonoid.carrier;
    if let Ok(found) = ModuleMorphism::new(carrier, t1.clone(), t2.clone(), idm(t1.carrier)) {
        return Ok(Some(found));
    }
    let ambient = internal_hom(&t1.carrier, &t2.carrier)?;
    for pt in ambient.value.points()? {
        let f = ambient.point_to_map(&pt)?;
        if f.invert().is_none() {
            continue;
        }
        if let Ok(found) = ModuleMorphism::new(carrier, t1.clone(), t2.clone(), f) {
            return Ok(Some(found));
        }
    }
    Ok(None)
}
