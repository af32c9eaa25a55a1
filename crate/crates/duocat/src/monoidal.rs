//! Monoidal structures on finite enriched categories: tensor functors with
//! coherence data, (lax) braidings, monoid and comonoid objects, the canonical
//! monoidal structure on hom objects, and convolution monoids.

use std::sync::Arc;

use crate::base::{
    associator as base_assoc, chain, left_unitor, pair_points, right_unitor, symmetry, BaseKind,
    BaseMap, BaseValue,
};
use crate::cat::{check_component_naturality, tensor_categories, FinCat, Mor, VFunctor};
use crate::error::{Error, Result};
use crate::report::{Check, CheckBuilder, Report};

// ---------------------------------------------------------------------------
// The abstract monoidal interface
// ---------------------------------------------------------------------------

/// Operations of a monoidal category, abstracted over the representation of
/// objects and arrows. Implemented by table-backed structures ([`MonoidalStructure`]),
/// by the base category itself ([`BaseOps`]), and by structural carriers whose
/// hom objects are too large to tabulate.
pub trait MonoidalOps {
    type Obj: Clone + PartialEq + std::fmt::Debug;
    type Arr: Clone + PartialEq;

    fn unit_obj(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;
    fn tensor_arr(&self, f: &Self::Arr, g: &Self::Arr) -> Result<Self::Arr>;
    /// `g ∘ f`.
    fn compose_arr(&self, g: &Self::Arr, f: &Self::Arr) -> Result<Self::Arr>;
    fn id_arr(&self, a: &Self::Obj) -> Result<Self::Arr>;
    /// `(a⊗b)⊗c → a⊗(b⊗c)`.
    fn assoc_arr(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Arr>;
    /// `I⊗a → a`.
    fn lunit_arr(&self, a: &Self::Obj) -> Result<Self::Arr>;
    /// `a⊗I → a`.
    fn runit_arr(&self, a: &Self::Obj) -> Result<Self::Arr>;
    fn invert_arr(&self, f: &Self::Arr) -> Result<Option<Self::Arr>>;
    /// Verifies an arrow has the stated endpoints.
    fn check_arr(&self, f: &Self::Arr, dom: &Self::Obj, cod: &Self::Obj) -> Result<()>;
    fn describe_arr(&self, f: &Self::Arr) -> String;

    fn assoc_inv_arr(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Arr> {
        self.invert_arr(&self.assoc_arr(a, b, c)?)?
            .ok_or_else(|| Error::NotInvertible("associator component".into()))
    }

    fn lunit_inv_arr(&self, a: &Self::Obj) -> Result<Self::Arr> {
        self.invert_arr(&self.lunit_arr(a)?)?
            .ok_or_else(|| Error::NotInvertible("left unitor component".into()))
    }

    fn runit_inv_arr(&self, a: &Self::Obj) -> Result<Self::Arr> {
        self.invert_arr(&self.runit_arr(a)?)?
            .ok_or_else(|| Error::NotInvertible("right unitor component".into()))
    }
}

/// A monoid living inside a monoidal category: carrier with multiplication
/// `carrier⊗carrier → carrier` and unit `I → carrier`.
#[derive(Clone, Debug)]
pub struct MonoidData<M: MonoidalOps + ?Sized> {
    pub carrier: M::Obj,
    pub mul: M::Arr,
    pub unit: M::Arr,
}

/// A comonoid: carrier with comultiplication `carrier → carrier⊗carrier` and
/// counit `carrier → I`.
#[derive(Clone, Debug)]
pub struct ComonoidData<M: MonoidalOps + ?Sized> {
    pub carrier: M::Obj,
    pub comul: M::Arr,
    pub counit: M::Arr,
}

/// Checks the monoid laws of `m` inside `ops`, returning one check per law
/// family. The failure coordinates are empty (the data is a single monoid, not
/// a table); details carry both sides.
pub fn monoid_law_checks<M: MonoidalOps + ?Sized>(
    ops: &M,
    m: &MonoidData<M>,
    id_prefix: &str,
) -> Result<Vec<Check>> {
    let a = &m.carrier;
    let aa = ops.tensor_obj(a, a)?;
    ops.check_arr(&m.mul, &aa, a)?;
    ops.check_arr(&m.unit, &ops.unit_obj(), a)?;
    let id_a = ops.id_arr(a)?;

    let mut assoc = CheckBuilder::new(&format!("{id_prefix}associativity"));
    let left_first = ops.compose_arr(&m.mul, &ops.tensor_arr(&m.mul, &id_a)?)?;
    let right_first = ops.compose_arr(
        &m.mul,
        &ops.compose_arr(&ops.tensor_arr(&id_a, &m.mul)?, &ops.assoc_arr(a, a, a)?)?,
    )?;
    if left_first != right_first {
        assoc.fail(
            vec![],
            format!(
                "{} vs {}",
                ops.describe_arr(&left_first),
                ops.describe_arr(&right_first)
            ),
        );
    }

    let mut units = CheckBuilder::new(&format!("{id_prefix}unit-laws"));
    let lu = ops.compose_arr(&m.mul, &ops.tensor_arr(&m.unit, &id_a)?)?;
    if lu != ops.lunit_arr(a)? {
        units.fail(vec![], format!("left unit gives {}", ops.describe_arr(&lu)));
    }
    let ru = ops.compose_arr(&m.mul, &ops.tensor_arr(&id_a, &m.unit)?)?;
    if ru != ops.runit_arr(a)? {
        units.fail(vec![], format!("right unit gives {}", ops.describe_arr(&ru)));
    }
    Ok(vec![assoc.finish(), units.finish()])
}

/// Dual of [`monoid_law_checks`] for comonoids.
pub fn comonoid_law_checks<M: MonoidalOps + ?Sized>(
    ops: &M,
    c: &ComonoidData<M>,
    id_prefix: &str,
) -> Result<Vec<Check>> {
    let a = &c.carrier;
    let aa = ops.tensor_obj(a, a)?;
    ops.check_arr(&c.comul, a, &aa)?;
    ops.check_arr(&c.counit, a, &ops.unit_obj())?;
    let id_a = ops.id_arr(a)?;

    let mut coassoc = CheckBuilder::new(&format!("{id_prefix}coassociativity"));
    let left_first = ops.compose_arr(
        &ops.assoc_arr(a, a, a)?,
        &ops.compose_arr(&ops.tensor_arr(&c.comul, &id_a)?, &c.comul)?,
    )?;
    let right_first = ops.compose_arr(&ops.tensor_arr(&id_a, &c.comul)?, &c.comul)?;
    if left_first != right_first {
        coassoc.fail(
            vec![],
            format!(
                "{} vs {}",
                ops.describe_arr(&left_first),
                ops.describe_arr(&right_first)
            ),
        );
    }

    let mut counits = CheckBuilder::new(&format!("{id_prefix}counit-laws"));
    let lu = ops.compose_arr(
        &ops.lunit_arr(a)?,
        &ops.compose_arr(&ops.tensor_arr(&c.counit, &id_a)?, &c.comul)?,
    )?;
    if lu != ops.id_arr(a)? {
        counits.fail(vec![], format!("left counit gives {}", ops.describe_arr(&lu)));
    }
    let ru = ops.compose_arr(
        &ops.runit_arr(a)?,
        &ops.compose_arr(&ops.tensor_arr(&id_a, &c.counit)?, &c.comul)?,
    )?;
    if ru != ops.id_arr(a)? {
        counits.fail(vec![], format!("right counit gives {}", ops.describe_arr(&ru)));
    }
    Ok(vec![coassoc.finish(), counits.finish()])
}

// ---------------------------------------------------------------------------
// The base category as a monoidal category
// ---------------------------------------------------------------------------

/// The enrichment base itself, viewed through [`MonoidalOps`]. Monoids in it
/// are ordinary monoids in sets / algebras over the field.
#[derive(Clone, Copy, Debug)]
pub struct BaseOps(pub BaseKind);

impl MonoidalOps for BaseOps {
    type Obj = BaseValue;
    type Arr = BaseMap;

    fn unit_obj(&self) -> BaseValue {
        BaseValue::unit(self.0)
    }
    fn tensor_obj(&self, a: &BaseValue, b: &BaseValue) -> Result<BaseValue> {
        a.tensor(b)
    }
    fn tensor_arr(&self, f: &BaseMap, g: &BaseMap) -> Result<BaseMap> {
        f.tensor(g)
    }
    fn compose_arr(&self, g: &BaseMap, f: &BaseMap) -> Result<BaseMap> {
        g.compose(f)
    }
    fn id_arr(&self, a: &BaseValue) -> Result<BaseMap> {
        Ok(BaseMap::identity(*a))
    }
    fn assoc_arr(&self, a: &BaseValue, b: &BaseValue, c: &BaseValue) -> Result<BaseMap> {
        base_assoc(a, b, c)
    }
    fn lunit_arr(&self, a: &BaseValue) -> Result<BaseMap> {
        left_unitor(a)
    }
    fn runit_arr(&self, a: &BaseValue) -> Result<BaseMap> {
        right_unitor(a)
    }
    fn invert_arr(&self, f: &BaseMap) -> Result<Option<BaseMap>> {
        Ok(f.invert())
    }
    fn check_arr(&self, f: &BaseMap, dom: &BaseValue, cod: &BaseValue) -> Result<()> {
        if f.source != *dom || f.target != *cod {
            return Err(Error::Shape(format!(
                "arrow endpoints {:?} -> {:?} do not match expected {:?} -> {:?}",
                f.source, f.target, dom, cod
            )));
        }
        Ok(())
    }
    fn describe_arr(&self, f: &BaseMap) -> String {
        f.describe()
    }
}

/// A monoid in the base category.
pub type VMonoid = MonoidData<BaseOps>;
/// A comonoid in the base category.
pub type VComonoid = ComonoidData<BaseOps>;

pub fn validate_vmonoid(kind: BaseKind, m: &VMonoid) -> Result<Report> {
    Ok(Report::from_checks(monoid_law_checks(&BaseOps(kind), m, "monoid-")?))
}

// ---------------------------------------------------------------------------
// Table-backed monoidal structures
// ---------------------------------------------------------------------------

/// A monoidal structure on a [`FinCat`]: a tensor functor from the product
/// category, a unit object, and per-tuple coherence isomorphisms.
#[derive(Clone, PartialEq, Debug)]
pub struct MonoidalStructure {
    pub cat: Arc<FinCat>,
    pub tensor: VFunctor,
    pub unit: usize,
    assoc: Vec<Mor>,
    lunit: Vec<Mor>,
    runit: Vec<Mor>,
}

impl MonoidalStructure {
    /// Assembles and shape-checks a monoidal structure. `tensor_obj` and
    /// `tensor_hom` are the object and hom tables of the tensor functor on
    /// the product category (pairs ordered row-major).
    pub fn new(
        cat: Arc<FinCat>,
        tensor_obj: Vec<usize>,
        tensor_hom: Vec<BaseMap>,
        unit: usize,
        assoc: Vec<Mor>,
        lunit: Vec<Mor>,
        runit: Vec<Mor>,
    ) -> Result<MonoidalStructure> {
        let n = cat.object_count();
        if unit >= n {
            return Err(Error::Shape("unit object out of range".into()));
        }
        let prod = Arc::new(tensor_categories(&cat, &cat)?);
        let tensor = VFunctor::new(prod, cat.clone(), tensor_obj, tensor_hom)?;
        let ms = MonoidalStructure { cat, tensor, unit, assoc, lunit, runit };
        if ms.assoc.len() != n * n * n {
            return Err(Error::Shape("one associator component per object triple required".into()));
        }
        if ms.lunit.len() != n || ms.runit.len() != n {
            return Err(Error::Shape("one unitor component per object required".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let m = ms.assoc_at(a, b, c);
                    let dom = ms.tensor_of(ms.tensor_of(a, b), c);
                    let cod = ms.tensor_of(a, ms.tensor_of(b, c));
                    if m.dom != dom || m.cod != cod {
                        return Err(Error::Shape(format!(
                            "associator component at ({a},{b},{c}) has wrong endpoints"
                        )));
                    }
                    ms.cat.check_mor(m)?;
                }
            }
        }
        for a in 0..n {
            let lm = &ms.lunit[a];
            if lm.dom != ms.tensor_of(unit, a) || lm.cod != a {
                return Err(Error::Shape(format!("left unitor at {a} has wrong endpoints")));
            }
            ms.cat.check_mor(lm)?;
            let rm = &ms.runit[a];
            if rm.dom != ms.tensor_of(a, unit) || rm.cod != a {
                return Err(Error::Shape(format!("right unitor at {a} has wrong endpoints")));
            }
            ms.cat.check_mor(rm)?;
        }
        Ok(ms)
    }

    pub fn object_count(&self) -> usize {
        self.cat.object_count()
    }

    pub fn tensor_of(&self, a: usize, b: usize) -> usize {
        self.tensor.obj[a * self.object_count() + b]
    }

    /// The hom-level tensor map `C(w,x) ⊗ C(y,z) → C(w⊗y, x⊗z)`.
    pub fn box_map(&self, w: usize, x: usize, y: usize, z: usize) -> &BaseMap {
        let n = self.object_count();
        self.tensor.hom_map(w * n + y, x * n + z)
    }

    pub fn assoc_at(&self, a: usize, b: usize, c: usize) -> &Mor {
        let n = self.object_count();
        &self.assoc[(a * n + b) * n + c]
    }

    pub fn lunit_at(&self, a: usize) -> &Mor {
        &self.lunit[a]
    }

    pub fn runit_at(&self, a: usize) -> &Mor {
        &self.runit[a]
    }

    /// Tensor of morphisms of the underlying category.
    pub fn tensor_mor(&self, f: &Mor, g: &Mor) -> Result<Mor> {
        let point = self
            .box_map(f.dom, f.cod, g.dom, g.cod)
            .compose(&pair_points(&f.point, &g.point)?)?;
        Ok(Mor { dom: self.tensor_of(f.dom, g.dom), cod: self.tensor_of(f.cod, g.cod), point })
    }

    /// `C(a,a') → C(a⊗b, a'⊗b)`, tensoring on the right with the identity.
    pub fn act_right(&self, a: usize, a2: usize, b: usize) -> Result<BaseMap> {
        let h = self.cat.hom(a, a2);
        chain(&[
            &right_unitor(&h)?.invert().expect("unitors are invertible"),
            &BaseMap::identity(h).tensor(self.cat.ident_point(b))?,
            self.box_map(a, a2, b, b),
        ])
    }

    /// `C(b,b') → C(a⊗b, a⊗b')`, tensoring on the left with the identity.
    pub fn act_left(&self, a: usize, b: usize, b2: usize) -> Result<BaseMap> {
        let h = self.cat.hom(b, b2);
        chain(&[
            &left_unitor(&h)?.invert().expect("unitors are invertible"),
            &self.cat.ident_point(a).tensor(&BaseMap::identity(h))?,
            self.box_map(a, a, b, b2),
        ])
    }
}

impl MonoidalOps for MonoidalStructure {
    type Obj = usize;
    type Arr = Mor;

    fn unit_obj(&self) -> usize {
        self.unit
    }
    fn tensor_obj(&self, a: &usize, b: &usize) -> Result<usize> {
        Ok(self.tensor_of(*a, *b))
    }
    fn tensor_arr(&self, f: &Mor, g: &Mor) -> Result<Mor> {
        self.tensor_mor(f, g)
    }
    fn compose_arr(&self, g: &Mor, f: &Mor) -> Result<Mor> {
        self.cat.compose_mor(g, f)
    }
    fn id_arr(&self, a: &usize) -> Result<Mor> {
        Ok(self.cat.id_mor(*a))
    }
    fn assoc_arr(&self, a: &usize, b: &usize, c: &usize) -> Result<Mor> {
        Ok(self.assoc_at(*a, *b, *c).clone())
    }
    fn lunit_arr(&self, a: &usize) -> Result<Mor> {
        Ok(self.lunit[*a].clone())
    }
    fn runit_arr(&self, a: &usize) -> Result<Mor> {
        Ok(self.runit[*a].clone())
    }
    fn invert_arr(&self, f: &Mor) -> Result<Option<Mor>> {
        self.cat.invert_mor(f)
    }
    fn check_arr(&self, f: &Mor, dom: &usize, cod: &usize) -> Result<()> {
        self.cat.check_mor(f)?;
        if f.dom != *dom || f.cod != *cod {
            return Err(Error::Shape(format!(
                "morphism endpoints {} -> {} do not match expected {} -> {}",
                f.dom, f.cod, dom, cod
            )));
        }
        Ok(())
    }
    fn describe_arr(&self, f: &Mor) -> String {
        f.point.describe()
    }
}

/// Checks a table-backed monoidal structure: tensor functoriality, enriched
/// naturality of the coherence families (variable by variable), their
/// invertibility, and the pentagon and triangle identities.
pub fn validate_monoidal(ms: &MonoidalStructure) -> Result<Report> {
    let n = ms.object_count();
    let cat = &ms.cat;
    let mut checks = Vec::new();

    checks.extend(crate::cat::validate_functor(&ms.tensor)?.checks);

    // Naturality of the associator, separately in each of the three slots
    // (joint enriched naturality is equivalent to slot-wise naturality).
    let mut nat_a = CheckBuilder::new("associator-naturality");
    for b in 0..n {
        for c in 0..n {
            check_component_naturality(
                cat,
                cat,
                |x| ms.tensor_of(ms.tensor_of(x, b), c),
                |x| ms.tensor_of(x, ms.tensor_of(b, c)),
                |x, x2| {
                    ms.act_right(ms.tensor_of(x, b), ms.tensor_of(x2, b), c)?
                        .compose(&ms.act_right(x, x2, b)?)
                },
                |x, x2| ms.act_right(x, x2, ms.tensor_of(b, c)),
                |x| Ok(ms.assoc_at(x, b, c).clone()),
                &mut nat_a,
            )?;
        }
    }
    for a in 0..n {
        for c in 0..n {
            check_component_naturality(
                cat,
                cat,
                |x| ms.tensor_of(ms.tensor_of(a, x), c),
                |x| ms.tensor_of(a, ms.tensor_of(x, c)),
                |x, x2| {
                    ms.act_right(ms.tensor_of(a, x), ms.tensor_of(a, x2), c)?
                        .compose(&ms.act_left(a, x, x2)?)
                },
                |x, x2| {
                    ms.act_left(a, ms.tensor_of(x, c), ms.tensor_of(x2, c))?
                        .compose(&ms.act_right(x, x2, c)?)
                },
                |x| Ok(ms.assoc_at(a, x, c).clone()),
                &mut nat_a,
            )?;
        }
    }
    for a in 0..n {
        for b in 0..n {
            check_component_naturality(
                cat,
                cat,
                |x| ms.tensor_of(ms.tensor_of(a, b), x),
                |x| ms.tensor_of(a, ms.tensor_of(b, x)),
                |x, x2| ms.act_left(ms.tensor_of(a, b), x, x2),
                |x, x2| {
                    ms.act_left(a, ms.tensor_of(b, x), ms.tensor_of(b, x2))?
                        .compose(&ms.act_left(b, x, x2)?)
                },
                |x| Ok(ms.assoc_at(a, b, x).clone()),
                &mut nat_a,
            )?;
        }
    }
    checks.push(nat_a.finish());

    let mut nat_l = CheckBuilder::new("left-unitor-naturality");
    check_component_naturality(
        cat,
        cat,
        |x| ms.tensor_of(ms.unit, x),
        |x| x,
        |x, x2| ms.act_left(ms.unit, x, x2),
        |x, x2| Ok(BaseMap::identity(cat.hom(x, x2))),
        |x| Ok(ms.lunit[x].clone()),
        &mut nat_l,
    )?;
    checks.push(nat_l.finish());

    let mut nat_r = CheckBuilder::new("right-unitor-naturality");
    check_component_naturality(
        cat,
        cat,
        |x| ms.tensor_of(x, ms.unit),
        |x| x,
        |x, x2| ms.act_right(x, x2, ms.unit),
        |x, x2| Ok(BaseMap::identity(cat.hom(x, x2))),
        |x| Ok(ms.runit[x].clone()),
        &mut nat_r,
    )?;
    checks.push(nat_r.finish());

    let mut inv = CheckBuilder::new("coherence-invertibility");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if cat.invert_mor(ms.assoc_at(a, b, c))?.is_none() {
                    inv.fail(vec![a, b, c], "associator component not invertible".to_string());
                }
            }
        }
    }
    for a in 0..n {
        if cat.invert_mor(&ms.lunit[a])?.is_none() {
            inv.fail(vec![a], "left unitor component not invertible".to_string());
        }
        if cat.invert_mor(&ms.runit[a])?.is_none() {
            inv.fail(vec![a], "right unitor component not invertible".to_string());
        }
    }
    checks.push(inv.finish());

    let mut pentagon = CheckBuilder::new("pentagon");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let route1 = cat.compose_mor(
                        ms.assoc_at(a, b, ms.tensor_of(c, d)),
                        ms.assoc_at(ms.tensor_of(a, b), c, d),
                    )?;
                    let step1 = ms.tensor_mor(ms.assoc_at(a, b, c), &cat.id_mor(d))?;
                    let step3 = ms.tensor_mor(&cat.id_mor(a), ms.assoc_at(b, c, d))?;
                    let route2 = cat.compose_mor(
                        &step3,
                        &cat.compose_mor(ms.assoc_at(a, ms.tensor_of(b, c), d), &step1)?,
                    )?;
                    if route1 != route2 {
                        pentagon.fail(
                            vec![a, b, c, d],
                            format!(
                                "{} vs {}",
                                route1.point.describe(),
                                route2.point.describe()
                            ),
                        );
                    }
                }
            }
        }
    }
    checks.push(pentagon.finish());

    let mut triangle = CheckBuilder::new("triangle");
    for a in 0..n {
        for b in 0..n {
            let via_assoc = cat.compose_mor(
                &ms.tensor_mor(&cat.id_mor(a), &ms.lunit[b])?,
                ms.assoc_at(a, ms.unit, b),
            )?;
            let direct = ms.tensor_mor(&ms.runit[a], &cat.id_mor(b))?;
            if via_assoc != direct {
                triangle.fail(
                    vec![a, b],
                    format!("{} vs {}", via_assoc.point.describe(), direct.point.describe()),
                );
            }
        }
    }
    checks.push(triangle.finish());

    Ok(Report::from_checks(checks))
}

// ---------------------------------------------------------------------------
// Braidings
// ---------------------------------------------------------------------------

/// A braiding on a monoidal structure. With `lax` set, components are not
/// required to be invertible; the hexagons and naturality still are.
#[derive(Clone, Debug)]
pub struct Braiding {
    pub components: Vec<Mor>,
    pub lax: bool,
}

impl Braiding {
    pub fn new(ms: &MonoidalStructure, components: Vec<Mor>, lax: bool) -> Result<Braiding> {
        let n = ms.object_count();
        if components.len() != n * n {
            return Err(Error::Shape("one braiding component per object pair required".into()));
        }
        for x in 0..n {
            for y in 0..n {
                let c = &components[x * n + y];
                if c.dom != ms.tensor_of(x, y) || c.cod != ms.tensor_of(y, x) {
                    return Err(Error::Shape(format!(
                        "braiding component at ({x},{y}) has wrong endpoints"
                    )));
                }
                ms.cat.check_mor(c)?;
            }
        }
        Ok(Braiding { components, lax })
    }

    pub fn at<'a>(&'a self, ms: &MonoidalStructure, x: usize, y: usize) -> &'a Mor {
        &self.components[x * ms.object_count() + y]
    }
}

/// Checks naturality (in a form valid for lax braidings), both hexagon
/// identities, and — unless lax — invertibility of the components.
pub fn validate_braiding(ms: &MonoidalStructure, br: &Braiding) -> Result<Report> {
    let n = ms.object_count();
    let cat = &ms.cat;
    let mut checks = Vec::new();

    // Joint naturality via hom objects: tensoring then post-composing with
    // the braiding equals swapping the hom factors, tensoring, and
    // pre-composing. Avoids inverse components entirely.
    let mut nat = CheckBuilder::new("braiding-naturality");
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = chain(&[
                        ms.box_map(w, x, y, z),
                        &cat.post_compose(ms.tensor_of(w, y), br.at(ms, x, z))?,
                    ])?;
                    let rhs = chain(&[
                        &symmetry(&cat.hom(w, x), &cat.hom(y, z))?,
                        ms.box_map(y, z, w, x),
                        &cat.pre_compose(br.at(ms, w, y), ms.tensor_of(z, x))?,
                    ])?;
                    if lhs != rhs {
                        nat.fail(
                            vec![w, x, y, z],
                            format!("{} vs {}", lhs.describe(), rhs.describe()),
                        );
                    }
                }
            }
        }
    }
    checks.push(nat.finish());

    let mut hex1 = CheckBuilder::new("hexagon-forward");
    let mut hex2 = CheckBuilder::new("hexagon-backward");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // (A⊗B)⊗C → B⊗(C⊗A): through c_{A,B⊗C} or in two steps.
                let through = cat.compose_mor(
                    ms.assoc_at(b, c, a),
                    &cat.compose_mor(br.at(ms, a, ms.tensor_of(b, c)), ms.assoc_at(a, b, c))?,
                )?;
                let stepwise = cat.compose_mor(
                    &ms.tensor_mor(&cat.id_mor(b), br.at(ms, a, c))?,
                    &cat.compose_mor(
                        ms.assoc_at(b, a, c),
                        &ms.tensor_mor(br.at(ms, a, b), &cat.id_mor(c))?,
                    )?,
                )?;
                if through != stepwise {
                    hex1.fail(
                        vec![a, b, c],
                        format!("{} vs {}", through.point.describe(), stepwise.point.describe()),
                    );
                }

                // A⊗(B⊗C) → (C⊗A)⊗B: through c_{A⊗B,C} or in two steps.
                let a_inv = |x: usize, y: usize, z: usize| -> Result<Mor> {
                    cat.invert_mor(ms.assoc_at(x, y, z))?
                        .ok_or_else(|| Error::NotInvertible("associator component".into()))
                };
                let through2 = cat.compose_mor(
                    &a_inv(c, a, b)?,
                    &cat.compose_mor(br.at(ms, ms.tensor_of(a, b), c), &a_inv(a, b, c)?)?,
                )?;
                let stepwise2 = cat.compose_mor(
                    &ms.tensor_mor(br.at(ms, a, c), &cat.id_mor(b))?,
                    &cat.compose_mor(
                        &a_inv(a, c, b)?,
                        &ms.tensor_mor(&cat.id_mor(a), br.at(ms, b, c))?,
                    )?,
                )?;
                if through2 != stepwise2 {
                    hex2.fail(
                        vec![a, b, c],
                        format!("{} vs {}", through2.point.describe(), stepwise2.point.describe()),
                    );
                }
            }
        }
    }
    checks.push(hex1.finish());
    checks.push(hex2.finish());

    if !br.lax {
        let mut inv = CheckBuilder::new("braiding-invertibility");
        for x in 0..n {
            for y in 0..n {
                if cat.invert_mor(br.at(ms, x, y))?.is_none() {
                    inv.fail(vec![x, y], "component not invertible".to_string());
                }
            }
        }
        checks.push(inv.finish());
    }

    Ok(Report::from_checks(checks))
}

// ---------------------------------------------------------------------------
// Monoidality of hom
// ---------------------------------------------------------------------------

/// The canonical monoidal structure on the hom functor: the tensor maps
/// `C(W,X) ⊗ C(Y,Z) → C(W⊗Y, X⊗Z)` together with the unit point
/// `I → C(I,I)`, verified against its two coherence axioms.
#[derive(Clone, Debug)]
pub struct HomMonoidalData {
    pub j: BaseMap,
}

/// Builds the hom monoidality data and verifies its axioms, plus the braided
/// compatibility square when a braiding is supplied. Fails with a
/// precondition error if any axiom fails (meaning `ms` was inconsistent).
pub fn hom_monoidal(ms: &MonoidalStructure, braiding: Option<&Braiding>) -> Result<HomMonoidalData> {
    let report = check_hom_monoidal(ms, braiding)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "hom monoidality axioms failed: {:?}",
            report.failing_ids()
        )));
    }
    Ok(HomMonoidalData { j: ms.cat.ident_point(ms.unit).clone() })
}

/// The checks behind [`hom_monoidal`], exposed for reporting.
pub fn check_hom_monoidal(ms: &MonoidalStructure, braiding: Option<&Braiding>) -> Result<Report> {
    let n = ms.object_count();
    let cat = &ms.cat;
    let j = cat.ident_point(ms.unit);
    let mut checks = Vec::new();

    let a_inv = |x: usize, y: usize, z: usize| -> Result<Mor> {
        cat.invert_mor(ms.assoc_at(x, y, z))?
            .ok_or_else(|| Error::NotInvertible("associator component".into()))
    };

    // Associativity axiom: tensor two hom factors then the third, or
    // reassociate and tensor the other way; transported along associators.
    let mut ax_a = CheckBuilder::new("hom-tensor-associativity");
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            let uw = ms.tensor_of(u, w);
                            let vx = ms.tensor_of(v, x);
                            let route1 = chain(&[
                                &ms.box_map(u, v, w, x).tensor(&BaseMap::identity(cat.hom(y, z)))?,
                                ms.box_map(uw, vx, y, z),
                                &cat.pre_compose(&a_inv(u, w, y)?, ms.tensor_of(vx, z))?,
                                &cat.post_compose(
                                    ms.tensor_of(u, ms.tensor_of(w, y)),
                                    ms.assoc_at(v, x, z),
                                )?,
                            ])?;
                            let route2 = chain(&[
                                &base_assoc(&cat.hom(u, v), &cat.hom(w, x), &cat.hom(y, z))?,
                                &BaseMap::identity(cat.hom(u, v)).tensor(ms.box_map(w, x, y, z))?,
                                ms.box_map(u, v, ms.tensor_of(w, y), ms.tensor_of(x, z)),
                            ])?;
                            if route1 != route2 {
                                ax_a.fail(
                                    vec![u, v, w, x, y, z],
                                    format!("{} vs {}", route1.describe(), route2.describe()),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    checks.push(ax_a.finish());

    // Unit axioms: tensoring with the identity of the unit object and
    // transporting along unitors is the base unitor.
    let mut ax_u = CheckBuilder::new("hom-tensor-unit-laws");
    for y in 0..n {
        for z in 0..n {
            let h = cat.hom(y, z);
            let l_inv = cat
                .invert_mor(&ms.lunit[y])?
                .ok_or_else(|| Error::NotInvertible("left unitor".into()))?;
            let left_route = chain(&[
                &j.tensor(&BaseMap::identity(h))?,
                ms.box_map(ms.unit, ms.unit, y, z),
                &cat.pre_compose(&l_inv, ms.tensor_of(ms.unit, z))?,
                &cat.post_compose(y, &ms.lunit[z])?,
            ])?;
            if left_route != left_unitor(&h)? {
                ax_u.fail(vec![y, z], format!("left: {}", left_route.describe()));
            }

            let r_inv = cat
                .invert_mor(&ms.runit[y])?
                .ok_or_else(|| Error::NotInvertible("right unitor".into()))?;
            let right_route = chain(&[
                &BaseMap::identity(h).tensor(j)?,
                ms.box_map(y, z, ms.unit, ms.unit),
                &cat.pre_compose(&r_inv, ms.tensor_of(z, ms.unit))?,
                &cat.post_compose(y, &ms.runit[z])?,
            ])?;
            if right_route != right_unitor(&h)? {
                ax_u.fail(vec![y, z], format!("right: {}", right_route.describe()));
            }
        }
    }
    checks.push(ax_u.finish());

    if let Some(br) = braiding {
        // Braided compatibility, in the lax-safe formulation: tensor then
        // post-compose with the braiding = swap factors, tensor, pre-compose.
        let mut sq = CheckBuilder::new("hom-tensor-braided-square");
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let lhs = chain(&[
                            ms.box_map(w, x, y, z),
                            &cat.post_compose(ms.tensor_of(w, y), br.at(ms, x, z))?,
                        ])?;
                        let rhs = chain(&[
                            &symmetry(&cat.hom(w, x), &cat.hom(y, z))?,
                            ms.box_map(y, z, w, x),
                            &cat.pre_compose(br.at(ms, w, y), ms.tensor_of(z, x))?,
                        ])?;
                        if lhs != rhs {
                            sq.fail(
                                vec![w, x, y, z],
                                format!("{} vs {}", lhs.describe(), rhs.describe()),
                            );
                        }
                    }
                }
            }
        }
        checks.push(sq.finish());
    }

    Ok(Report::from_checks(checks))
}

// ---------------------------------------------------------------------------
// Monoid and comonoid objects in a table-backed structure
// ---------------------------------------------------------------------------

pub type MonoidObj = MonoidData<MonoidalStructure>;
pub type ComonoidObj = ComonoidData<MonoidalStructure>;

pub fn validate_monoid(ms: &MonoidalStructure, m: &MonoidObj) -> Result<Report> {
    Ok(Report::from_checks(monoid_law_checks(ms, m, "monoid-")?))
}

pub fn validate_comonoid(ms: &MonoidalStructure, c: &ComonoidObj) -> Result<Report> {
    Ok(Report::from_checks(comonoid_law_checks(ms, c, "comonoid-")?))
}

/// The unit object with its canonical monoid structure (multiplication the
/// unitor, unit the identity).
pub fn unit_monoid(ms: &MonoidalStructure) -> MonoidObj {
    MonoidData {
        carrier: ms.unit,
        mul: ms.lunit[ms.unit].clone(),
        unit: ms.cat.id_mor(ms.unit),
    }
}

/// The unit object with its canonical comonoid structure.
pub fn unit_comonoid(ms: &MonoidalStructure) -> Result<ComonoidObj> {
    let comul = ms
        .cat
        .invert_mor(&ms.lunit[ms.unit])?
        .ok_or_else(|| Error::NotInvertible("left unitor at the unit object".into()))?;
    Ok(ComonoidData { carrier: ms.unit, comul, counit: ms.cat.id_mor(ms.unit) })
}

/// Exhaustively enumerates all monoid structures on `carrier`, bounded to
/// hom objects with at most 64 points.
pub fn enumerate_monoid_objects(ms: &MonoidalStructure, carrier: usize) -> Result<Vec<MonoidObj>> {
    let aa = ms.tensor_of(carrier, carrier);
    let mul_cands = ms.cat.all_mors(aa, carrier)?;
    let unit_cands = ms.cat.all_mors(ms.unit, carrier)?;
    if mul_cands.len() > 64 || unit_cands.len() > 64 {
        return Err(Error::Precondition(format!(
            "enumeration bounded to hom sizes <= 64, got {} and {}",
            mul_cands.len(),
            unit_cands.len()
        )));
    }
    let mut out = Vec::new();
    for mul in &mul_cands {
        for unit in &unit_cands {
            let cand = MonoidData { carrier, mul: mul.clone(), unit: unit.clone() };
            if monoid_law_checks(ms, &cand, "monoid-")?.iter().all(|c| c.ok) {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

/// Dual of [`enumerate_monoid_objects`].
pub fn enumerate_comonoid_objects(
    ms: &MonoidalStructure,
    carrier: usize,
) -> Result<Vec<ComonoidObj>> {
    let aa = ms.tensor_of(carrier, carrier);
    let comul_cands = ms.cat.all_mors(carrier, aa)?;
    let counit_cands = ms.cat.all_mors(carrier, ms.unit)?;
    if comul_cands.len() > 64 || counit_cands.len() > 64 {
        return Err(Error::Precondition(format!(
            "enumeration bounded to hom sizes <= 64, got {} and {}",
            comul_cands.len(),
            counit_cands.len()
        )));
    }
    let mut out = Vec::new();
    for comul in &comul_cands {
        for counit in &counit_cands {
            let cand = ComonoidData { carrier, comul: comul.clone(), counit: counit.clone() };
            if comonoid_law_checks(ms, &cand, "comonoid-")?.iter().all(|c| c.ok) {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Convolution monoids
// ---------------------------------------------------------------------------

/// The convolution monoid on the hom object `C(C, A)` of a comonoid `C` and a
/// monoid `A`: multiplication tensors two hom elements, pre-composes with the
/// comultiplication and post-composes with the multiplication; the unit is
/// the composite of counit and unit.
pub fn convolution_monoid(
    ms: &MonoidalStructure,
    c: &ComonoidObj,
    a: &MonoidObj,
) -> Result<VMonoid> {
    let carrier = ms.cat.hom(c.carrier, a.carrier);
    let mul = chain(&[
        ms.box_map(c.carrier, a.carrier, c.carrier, a.carrier),
        &ms.cat.pre_compose(&c.comul, ms.tensor_of(a.carrier, a.carrier))?,
        &ms.cat.post_compose(c.carrier, &a.mul)?,
    ])?;
    let unit = ms.cat.compose_mor(&a.unit, &c.counit)?.point;
    Ok(MonoidData { carrier, mul, unit })
}

/// Ready-made monoidal structures used throughout the test suites and the
/// command-line fixture catalog.
pub mod fixtures {
    use super::*;
    use crate::cat::{chain_category, discrete_category};

    /// The chain `0 ≤ … ≤ n-1` with tensor `min` and unit the top element: a
    /// skeletal model of subterminal finite sets under cartesian product.
    pub fn chain_min_monoidal(n: usize) -> Result<MonoidalStructure> {
        let cat = Arc::new(chain_category(n)?);
        build_poset_monoidal(cat, |a, b| a.min(b), n - 1)
    }

    pub fn build_poset_monoidal(
        cat: Arc<FinCat>,
        t: impl Fn(usize, usize) -> usize,
        unit: usize,
    ) -> Result<MonoidalStructure> {
        let n = cat.object_count();
        let mut tensor_obj = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                tensor_obj.push(t(a, b));
            }
        }
        let mut tensor_hom = Vec::with_capacity(n * n * n * n);
        for x in 0..n * n {
            for y in 0..n * n {
                let (a, b) = (x / n, x % n);
                let (c, d) = (y / n, y % n);
                let src = cat.hom(a, c).tensor(&cat.hom(b, d))?;
                let tgt = cat.hom(t(a, b), t(c, d));
                tensor_hom.push(BaseMap::from_table(src, tgt, vec![0; src.size])?);
            }
        }
        let mut assoc = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assoc.push(cat.id_mor(t(t(a, b), c)));
                }
            }
        }
        let lunit = (0..n).map(|a| cat.id_mor(a)).collect();
        let runit = (0..n).map(|a| cat.id_mor(a)).collect();
        MonoidalStructure::new(cat, tensor_obj, tensor_hom, unit, assoc, lunit, runit)
    }

    /// Discrete category on the elements of a finite group (or monoid), with
    /// tensor given by the group table and strict coherence. Over a vector
    /// base the diagonal homs are one-dimensional scalar lines.
    pub fn discrete_group_monoidal(
        base: BaseKind,
        table: &[Vec<usize>],
        unit: usize,
    ) -> Result<MonoidalStructure> {
        let m = table.len();
        let cat = Arc::new(discrete_category(base, m)?);
        let t = |a: usize, b: usize| table[a][b];
        let mut tensor_obj = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                tensor_obj.push(t(a, b));
            }
        }
        let mut tensor_hom = Vec::with_capacity(m * m * m * m);
        for x in 0..m * m {
            for y in 0..m * m {
                let (a, b) = (x / m, x % m);
                let (c, d) = (y / m, y % m);
                let src = cat.hom(a, c).tensor(&cat.hom(b, d))?;
                let tgt = cat.hom(t(a, b), t(c, d));
                tensor_hom.push(BaseMap::from_index_map(src, tgt, |i| i)?);
            }
        }
        let mut assoc = Vec::with_capacity(m * m * m);
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    assoc.push(cat.id_mor(t(t(a, b), c)));
                }
            }
        }
        let lunit = (0..m).map(|a| cat.id_mor(a)).collect();
        let runit = (0..m).map(|a| cat.id_mor(a)).collect();
        MonoidalStructure::new(cat, tensor_obj, tensor_hom, unit, assoc, lunit, runit)
    }

    /// The two-object lax-braided category {u, z}: `u` is the strict unit,
    /// `z⊗z = z`, and `hom(z,z) = {identity, e}` with `e` idempotent. The
    /// braiding component at (z,z) is `e`, which is not invertible.
    pub fn lax_idempotent_braided() -> Result<(MonoidalStructure, Braiding)> {
        let base = BaseKind::FinSet;
        let unit_v = BaseValue::unit(base);
        let h_zz = BaseValue::new(base, 2)?;
        let empty = BaseValue::new(base, 0)?;
        //  objects: 0 = u (unit), 1 = z
        let hom = vec![unit_v, empty, empty, h_zz];
        let idem = |g: usize, f: usize| if g == 0 && f == 0 { 0 } else { 1 };
        let mut comp = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let src = hom[b * 2 + c].tensor(&hom[a * 2 + b])?;
                    let tgt = hom[a * 2 + c];
                    let table: Vec<usize> = (0..src.size)
                        .map(|i| {
                            if a == 1 && b == 1 && c == 1 {
                                idem(i / 2, i % 2)
                            } else {
                                0
                            }
                        })
                        .collect();
                    comp.push(BaseMap::from_table(src, tgt, table)?);
                }
            }
        }
        let ident = vec![
            BaseMap::from_table(unit_v, unit_v, vec![0])?,
            BaseMap::from_table(unit_v, h_zz, vec![0])?,
        ];
        let cat = Arc::new(FinCat::new(base, vec!["u".into(), "z".into()], hom, comp, ident)?);

        let t = |a: usize, b: usize| a.max(b); // u⊗x = x, z⊗z = z
        let mut tensor_obj = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                tensor_obj.push(t(a, b));
            }
        }
        let mut tensor_hom = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                let (a, b) = (x / 2, x % 2);
                let (c, d) = (y / 2, y % 2);
                let src = cat.hom(a, c).tensor(&cat.hom(b, d))?;
                let tgt = cat.hom(t(a, b), t(c, d));
                // f⊗g := f∘g under the identification z⊗z = z; on the
                // two-point hom this is the commutative idempotent table.
                let table: Vec<usize> = (0..src.size)
                    .map(|i| {
                        if a == 1 && b == 1 {
                            // both factors are endo-homs of z
                            idem(i / 2, i % 2)
                        } else if a == 1 || b == 1 {
                            // one factor is the singleton hom of u
                            i
                        } else {
                            0
                        }
                    })
                    .collect();
                tensor_hom.push(BaseMap::from_table(src, tgt, table)?);
            }
        }
        let mut assoc = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    assoc.push(cat.id_mor(t(t(a, b), c)));
                }
            }
        }
        let lunit = (0..2).map(|a| cat.id_mor(a)).collect();
        let runit = (0..2).map(|a| cat.id_mor(a)).collect();
        let ms = MonoidalStructure::new(cat.clone(), tensor_obj, tensor_hom, 0, assoc, lunit, runit)?;

        let e_mor = Mor { dom: 1, cod: 1, point: BaseMap::from_table(unit_v, h_zz, vec![1])? };
        let components = vec![ms.cat.id_mor(0), ms.cat.id_mor(1), ms.cat.id_mor(1), e_mor];
        let br = Braiding::new(&ms, components, true)?;
        Ok((ms, br))
    }

    /// Z/2 as a discrete category over the scalar line in F_3, with a sign
    /// braiding: the component at (1,1) is the scalar -1.
    pub fn sign_braided_z2_line() -> Result<(MonoidalStructure, Braiding)> {
        let base = BaseKind::finvect(3)?;
        let table = vec![vec![0, 1], vec![1, 0]];
        let ms = discrete_group_monoidal(base, &table, 0)?;
        let minus_one = Mor {
            dom: 0,
            cod: 0,
            point: BaseMap::from_matrix(
                BaseValue::unit(base),
                ms.cat.hom(0, 0),
                crate::base::matrix::Matrix::from_vec(3, 1, 1, vec![2])?,
            )?,
        };
        let mut components = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                if x == 1 && y == 1 {
                    components.push(minus_one.clone());
                } else {
                    components.push(ms.cat.id_mor(ms.tensor_of(x, y)));
                }
            }
        }
        let br = Braiding::new(&ms, components, false)?;
        Ok((ms, br))
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::base::matrix::Matrix;

    #[test]
    fn chain_min_is_monoidal() {
        let ms = chain_min_monoidal(4).unwrap();
        assert!(crate::cat::validate_category(&ms.cat).unwrap().passed());
        assert!(validate_monoidal(&ms).unwrap().passed());
    }

    #[test]
    fn discrete_cyclic_group_is_strict_monoidal() {
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let ms = discrete_group_monoidal(BaseKind::FinSet, &table, 0).unwrap();
        assert!(validate_monoidal(&ms).unwrap().passed());
    }

    #[test]
    fn scalar_corrupted_associator_fails_pentagon() {
        let base = BaseKind::finvect(3).unwrap();
        let table = vec![vec![0, 1], vec![1, 0]];
        let mut ms = discrete_group_monoidal(base, &table, 0).unwrap();
        // Replace the (0,0,0) associator component by the scalar 2: still an
        // isomorphism and still natural (scalars are central), but the two
        // pentagon routes now differ (2·2 = 1 vs 2·2·2 = 2 in F_3).
        let two = Mor {
            dom: 0,
            cod: 0,
            point: BaseMap::from_matrix(
                BaseValue::unit(base),
                ms.cat.hom(0, 0),
                Matrix::from_vec(3, 1, 1, vec![2]).unwrap(),
            )
            .unwrap(),
        };
        ms.assoc[0] = two;
        let r = validate_monoidal(&ms).unwrap();
        assert!(!r.passed());
        let pent = r.check("pentagon").unwrap();
        assert!(!pent.ok);
        assert_eq!(pent.counterexamples[0].at, vec![0, 0, 0, 0]);
        // Naturality is unaffected by a central scalar.
        assert!(r.check("associator-naturality").unwrap().ok);
    }

    #[test]
    fn sign_braiding_is_braided_but_not_identity() {
        let (ms, br) = sign_braided_z2_line().unwrap();
        assert!(validate_monoidal(&ms).unwrap().passed());
        let r = validate_braiding(&ms, &br).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());
        assert_ne!(br.at(&ms, 1, 1), &ms.cat.id_mor(0));
    }

    #[test]
    fn broken_hexagon_is_caught() {
        let (ms, _) = sign_braided_z2_line().unwrap();
        // A braiding whose only -1 sits at (0,1) is not a bicharacter in the
        // first slot, so one hexagon fails.
        let base = BaseKind::finvect(3).unwrap();
        let minus_one = Mor {
            dom: 1,
            cod: 1,
            point: BaseMap::from_matrix(
                BaseValue::unit(base),
                ms.cat.hom(1, 1),
                Matrix::from_vec(3, 1, 1, vec![2]).unwrap(),
            )
            .unwrap(),
        };
        let mut components = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                if x == 1 && y == 1 {
                    components.push(ms.cat.id_mor(0));
                } else if x == 0 && y == 1 {
                    components.push(minus_one.clone());
                } else {
                    components.push(ms.cat.id_mor(ms.tensor_of(x, y)));
                }
            }
        }
        let br = Braiding::new(&ms, components, false).unwrap();
        let r = validate_braiding(&ms, &br).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn lax_idempotent_braiding_passes_hexagons_without_inverses() {
        let (ms, br) = lax_idempotent_braided().unwrap();
        assert!(crate::cat::validate_category(&ms.cat).unwrap().passed());
        assert!(validate_monoidal(&ms).unwrap().passed());
        let r = validate_braiding(&ms, &br).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());
        // The braiding component at (z,z) is genuinely non-invertible: the
        // same data fails when declared non-lax.
        let strict = Braiding { components: br.components.clone(), lax: false };
        let r2 = validate_braiding(&ms, &strict).unwrap();
        assert!(!r2.passed());
        assert_eq!(r2.failing_ids(), vec!["braiding-invertibility"]);
    }

    #[test]
    fn hom_monoidality_axioms_hold() {
        let ms = chain_min_monoidal(3).unwrap();
        assert!(hom_monoidal(&ms, None).is_ok());

        let table = vec![vec![0, 1], vec![1, 0]];
        let d = discrete_group_monoidal(BaseKind::FinSet, &table, 0).unwrap();
        let hm = hom_monoidal(&d, None).unwrap();
        // The unit point selects the identity at the unit object.
        assert_eq!(hm.j, *d.cat.ident_point(0));

        let (sms, sbr) = sign_braided_z2_line().unwrap();
        assert!(hom_monoidal(&sms, Some(&sbr)).is_ok());
    }

    #[test]
    fn unit_monoid_and_comonoid_validate() {
        let ms = chain_min_monoidal(3).unwrap();
        assert!(validate_monoid(&ms, &unit_monoid(&ms)).unwrap().passed());
        assert!(validate_comonoid(&ms, &unit_comonoid(&ms).unwrap()).unwrap().passed());

        let (sms, _) = sign_braided_z2_line().unwrap();
        assert!(validate_monoid(&sms, &unit_monoid(&sms)).unwrap().passed());
    }

    #[test]
    fn scalar_monoids_on_the_line_need_inverse_units() {
        let base = BaseKind::finvect(3).unwrap();
        let table = vec![vec![0, 1], vec![1, 0]];
        let ms = discrete_group_monoidal(base, &table, 0).unwrap();
        // Monoid structures on object 0: mul and unit are scalars (t, u)
        // with t·u = 1, so exactly the pairs (1,1) and (2,2).
        let monoids = enumerate_monoid_objects(&ms, 0).unwrap();
        assert_eq!(monoids.len(), 2);
        for m in &monoids {
            assert!(validate_monoid(&ms, m).unwrap().passed());
        }

        // A scalar monoid with mismatched unit fails the unit law.
        let unit_v = BaseValue::unit(base);
        let sc = |v: u32| Mor {
            dom: 0,
            cod: 0,
            point: BaseMap::from_matrix(
                unit_v,
                ms.cat.hom(0, 0),
                Matrix::from_vec(3, 1, 1, vec![v]).unwrap(),
            )
            .unwrap(),
        };
        let bad = MonoidObj { carrier: 0, mul: sc(2), unit: sc(1) };
        let r = validate_monoid(&ms, &bad).unwrap();
        assert!(!r.passed());
        assert_eq!(r.failing_ids(), vec!["monoid-unit-laws"]);
    }

    #[test]
    fn convolution_of_scalar_structures() {
        let base = BaseKind::finvect(3).unwrap();
        let table = vec![vec![0, 1], vec![1, 0]];
        let ms = discrete_group_monoidal(base, &table, 0).unwrap();
        let unit_v = BaseValue::unit(base);
        let sc = |v: u32| Mor {
            dom: 0,
            cod: 0,
            point: BaseMap::from_matrix(
                unit_v,
                ms.cat.hom(0, 0),
                Matrix::from_vec(3, 1, 1, vec![v]).unwrap(),
            )
            .unwrap(),
        };
        // Monoid (μ = 2, η = 2) and comonoid (δ = 2, ε = 2) on object 0.
        let a = MonoidObj { carrier: 0, mul: sc(2), unit: sc(2) };
        assert!(validate_monoid(&ms, &a).unwrap().passed());
        let c = ComonoidObj { carrier: 0, comul: sc(2), counit: sc(2) };
        assert!(validate_comonoid(&ms, &c).unwrap().passed());
        let conv = convolution_monoid(&ms, &c, &a).unwrap();
        assert!(validate_vmonoid(base, &conv).unwrap().passed());
        // Oracle: f ⋆ g = μ·f·g·δ = 4fg = fg, unit = η·ε = 4 = 1.
        assert_eq!(conv.mul.describe(), "matrix1x1[1]");
        assert_eq!(conv.unit.describe(), "matrix1x1[1]");
    }

    #[test]
    fn convolution_with_trivial_structures_is_trivial() {
        let ms = chain_min_monoidal(3).unwrap();
        let conv = convolution_monoid(&ms, &unit_comonoid(&ms).unwrap(), &unit_monoid(&ms)).unwrap();
        assert_eq!(conv.carrier.size, 1);
        assert!(validate_vmonoid(BaseKind::FinSet, &conv).unwrap().passed());
    }
}
