//! Duoidal structures: a pair of monoidal structures on one carrier linked by
//! a middle-of-four interchange, plus bimonoids and structured functors.
//!
//! Axiom identifiers in reports — "(3)" through "(6)" for the interchange
//! axioms and "(8)" through "(10)" for bimonoid compatibility — are this
//! tool's stable product labels for the corresponding diagrams.

use crate::cat::{check_component_naturality, Mor, VFunctor};
use crate::error::{Error, Result};
use crate::monoidal::{
    comonoid_law_checks, monoid_law_checks, Braiding, ComonoidData, MonoidData, MonoidalOps,
    MonoidalStructure,
};
use crate::par::{scan, unrank};
use crate::report::{CheckBuilder, Report};

// ---------------------------------------------------------------------------
// The abstract duoidal interface
// ---------------------------------------------------------------------------

/// Operations of a duoidal category: a horizontal monoidal structure (∗ with
/// unit J), a vertical one (∘ with unit 𝟏) on the same objects and arrows,
/// an interchange `γ: (A∘B)∗(C∘D) → (A∗C)∘(B∗D)`, and the unit-mixing maps
/// `μ: 𝟏∗𝟏 → 𝟏`, `τ: J → 𝟏`, `δ: J → J∘J`.
///
/// Implemented by table-backed [`DuoidalStructure`]s and by structural
/// carriers whose hom objects are never materialized.
pub trait DuoidalOps {
    type Obj: Clone + PartialEq + std::fmt::Debug;
    type Arr: Clone + PartialEq;
    type Hor: MonoidalOps<Obj = Self::Obj, Arr = Self::Arr>;
    type Vert: MonoidalOps<Obj = Self::Obj, Arr = Self::Arr>;

    fn hor(&self) -> &Self::Hor;
    fn vert(&self) -> &Self::Vert;
    fn gamma_arr(
        &self,
        a: &Self::Obj,
        b: &Self::Obj,
        c: &Self::Obj,
        d: &Self::Obj,
    ) -> Result<Self::Arr>;
    fn mu_arr(&self) -> Result<Self::Arr>;
    fn tau_arr(&self) -> Result<Self::Arr>;
    fn delta_arr(&self) -> Result<Self::Arr>;

    /// Composition, shared by both monoidal structures.
    fn compose(&self, g: &Self::Arr, f: &Self::Arr) -> Result<Self::Arr> {
        self.hor().compose_arr(g, f)
    }
}

/// A bimonoid in a duoidal category: a monoid for ∗ and a comonoid for ∘ on
/// the same carrier, compatible through the interchange.
#[derive(Clone, Debug)]
pub struct Bimonoid<D: DuoidalOps + ?Sized> {
    pub carrier: D::Obj,
    /// `carrier ∗ carrier → carrier`
    pub mul: D::Arr,
    /// `J → carrier`
    pub unit: D::Arr,
    /// `carrier → carrier ∘ carrier`
    pub comul: D::Arr,
    /// `carrier → 𝟏`
    pub counit: D::Arr,
}

impl<D: DuoidalOps + ?Sized> Bimonoid<D> {
    pub fn monoid_part(&self) -> MonoidData<D::Hor> {
        MonoidData { carrier: self.carrier.clone(), mul: self.mul.clone(), unit: self.unit.clone() }
    }

    pub fn comonoid_part(&self) -> ComonoidData<D::Vert> {
        ComonoidData {
            carrier: self.carrier.clone(),
            comul: self.comul.clone(),
            counit: self.counit.clone(),
        }
    }
}

/// Checks the monoid and comonoid laws of a bimonoid and the four
/// compatibility diagrams (8), both halves of (9), and (10).
pub fn validate_bimonoid<D: DuoidalOps + ?Sized>(d: &D, b: &Bimonoid<D>) -> Result<Report> {
    let h = d.hor();
    let v = d.vert();
    let a = &b.carrier;
    let mut checks = monoid_law_checks(h, &b.monoid_part(), "monoid-")?;
    checks.extend(comonoid_law_checks(v, &b.comonoid_part(), "comonoid-")?);

    let mut c8 = CheckBuilder::new("bimonoid-interchange").axiom("(8)");
    let lhs = d.compose(&b.comul, &b.mul)?;
    let rhs = d.compose(
        &v.tensor_arr(&b.mul, &b.mul)?,
        &d.compose(&d.gamma_arr(a, a, a, a)?, &h.tensor_arr(&b.comul, &b.comul)?)?,
    )?;
    if lhs != rhs {
        c8.fail(vec![], format!("{} vs {}", h.describe_arr(&lhs), h.describe_arr(&rhs)));
    }
    checks.push(c8.finish());

    let mut c9a = CheckBuilder::new("bimonoid-counit-respects-mul").axiom("(9)");
    let lhs = d.compose(&b.counit, &b.mul)?;
    let rhs = d.compose(&d.mu_arr()?, &h.tensor_arr(&b.counit, &b.counit)?)?;
    if lhs != rhs {
        c9a.fail(vec![], format!("{} vs {}", h.describe_arr(&lhs), h.describe_arr(&rhs)));
    }
    checks.push(c9a.finish());

    let mut c9b = CheckBuilder::new("bimonoid-comul-respects-unit").axiom("(9)");
    let lhs = d.compose(&b.comul, &b.unit)?;
    let rhs = d.compose(&v.tensor_arr(&b.unit, &b.unit)?, &d.delta_arr()?)?;
    if lhs != rhs {
        c9b.fail(vec![], format!("{} vs {}", h.describe_arr(&lhs), h.describe_arr(&rhs)));
    }
    checks.push(c9b.finish());

    let mut c10 = CheckBuilder::new("bimonoid-counit-of-unit").axiom("(10)");
    let lhs = d.compose(&b.counit, &b.unit)?;
    let rhs = d.tau_arr()?;
    if lhs != rhs {
        c10.fail(vec![], format!("{} vs {}", h.describe_arr(&lhs), h.describe_arr(&rhs)));
    }
    checks.push(c10.finish());

    Ok(Report::from_checks(checks))
}

/// The vertical tensor of two horizontal monoids is again a horizontal
/// monoid: multiplication routes through the interchange, the unit through δ.
pub fn mon_tensor<D: DuoidalOps + ?Sized>(
    d: &D,
    m: &MonoidData<D::Hor>,
    n: &MonoidData<D::Hor>,
) -> Result<MonoidData<D::Hor>> {
    let v = d.vert();
    let carrier = v.tensor_obj(&m.carrier, &n.carrier)?;
    let mul = d.compose(
        &v.tensor_arr(&m.mul, &n.mul)?,
        &d.gamma_arr(&m.carrier, &n.carrier, &m.carrier, &n.carrier)?,
    )?;
    let unit = d.compose(&v.tensor_arr(&m.unit, &n.unit)?, &d.delta_arr()?)?;
    Ok(MonoidData { carrier, mul, unit })
}

/// Dually, the horizontal tensor of two vertical comonoids is a vertical
/// comonoid, with the counit routed through μ.
pub fn comon_tensor<D: DuoidalOps + ?Sized>(
    d: &D,
    c: &ComonoidData<D::Vert>,
    e: &ComonoidData<D::Vert>,
) -> Result<ComonoidData<D::Vert>> {
    let h = d.hor();
    let carrier = h.tensor_obj(&c.carrier, &e.carrier)?;
    let comul = d.compose(
        &d.gamma_arr(&c.carrier, &c.carrier, &e.carrier, &e.carrier)?,
        &h.tensor_arr(&c.comul, &e.comul)?,
    )?;
    let counit = d.compose(&d.mu_arr()?, &h.tensor_arr(&c.counit, &e.counit)?)?;
    Ok(ComonoidData { carrier, comul, counit })
}

// ---------------------------------------------------------------------------
// Table-backed duoidal structures
// ---------------------------------------------------------------------------

/// Two table-backed monoidal structures on one carrier category, with the
/// interchange stored as a full component table so that structures not
/// arising from a braiding can be ingested from files.
#[derive(Clone, Debug)]
pub struct DuoidalStructure {
    pub horizontal: MonoidalStructure,
    pub vertical: MonoidalStructure,
    gamma: Vec<Mor>,
    pub mu: Mor,
    pub tau: Mor,
    pub delta: Mor,
}

impl DuoidalStructure {
    pub fn new(
        horizontal: MonoidalStructure,
        vertical: MonoidalStructure,
        gamma: Vec<Mor>,
        mu: Mor,
        tau: Mor,
        delta: Mor,
    ) -> Result<DuoidalStructure> {
        if horizontal.cat.as_ref() != vertical.cat.as_ref() {
            return Err(Error::Shape(
                "horizontal and vertical structures must share the carrier category".into(),
            ));
        }
        let n = horizontal.object_count();
        if gamma.len() != n * n * n * n {
            return Err(Error::Shape(
                "one interchange component per object quadruple required".into(),
            ));
        }
        let d = DuoidalStructure { horizontal, vertical, gamma, mu, tau, delta };
        let (h, v) = (&d.horizontal, &d.vertical);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for e in 0..n {
                        let g = d.gamma_at(a, b, c, e);
                        let dom = h.tensor_of(v.tensor_of(a, b), v.tensor_of(c, e));
                        let cod = v.tensor_of(h.tensor_of(a, c), h.tensor_of(b, e));
                        if g.dom != dom || g.cod != cod {
                            return Err(Error::Shape(format!(
                                "interchange component at ({a},{b},{c},{e}) has wrong endpoints"
                            )));
                        }
                        h.cat.check_mor(g)?;
                    }
                }
            }
        }
        let one = v.unit;
        let j = h.unit;
        h.cat.check_mor(&d.mu)?;
        if d.mu.dom != h.tensor_of(one, one) || d.mu.cod != one {
            return Err(Error::Shape("mu must map 1∗1 to 1".into()));
        }
        h.cat.check_mor(&d.tau)?;
        if d.tau.dom != j || d.tau.cod != one {
            return Err(Error::Shape("tau must map J to 1".into()));
        }
        h.cat.check_mor(&d.delta)?;
        if d.delta.dom != j || d.delta.cod != v.tensor_of(j, j) {
            return Err(Error::Shape("delta must map J to J∘J".into()));
        }
        Ok(d)
    }

    pub fn object_count(&self) -> usize {
        self.horizontal.object_count()
    }

    pub fn gamma_at(&self, a: usize, b: usize, c: usize, d: usize) -> &Mor {
        let n = self.object_count();
        &self.gamma[((a * n + b) * n + c) * n + d]
    }

    /// Replaces one interchange component; used to build corruption fixtures.
    pub fn set_gamma(&mut self, a: usize, b: usize, c: usize, d: usize, m: Mor) {
        let n = self.object_count();
        self.gamma[((a * n + b) * n + c) * n + d] = m;
    }
}

impl DuoidalOps for DuoidalStructure {
    type Obj = usize;
    type Arr = Mor;
    type Hor = MonoidalStructure;
    type Vert = MonoidalStructure;

    fn hor(&self) -> &MonoidalStructure {
        &self.horizontal
    }
    fn vert(&self) -> &MonoidalStructure {
        &self.vertical
    }
    fn gamma_arr(&self, a: &usize, b: &usize, c: &usize, d: &usize) -> Result<Mor> {
        Ok(self.gamma_at(*a, *b, *c, *d).clone())
    }
    fn mu_arr(&self) -> Result<Mor> {
        Ok(self.mu.clone())
    }
    fn tau_arr(&self) -> Result<Mor> {
        Ok(self.tau.clone())
    }
    fn delta_arr(&self) -> Result<Mor> {
        Ok(self.delta.clone())
    }
}

/// Exhaustively checks the duoidal axioms: enriched naturality of the
/// interchange in each of its four slots, the interchange-vs-associativity
/// diagrams (3) and (4), the unit diagrams (5) and (6), and the requirement
/// that (𝟏, μ, τ) is a horizontal monoid and (J, δ, τ) a vertical comonoid.
/// Assumes both monoidal structures pass their own validation.
pub fn validate_duoidal(d: &DuoidalStructure) -> Result<Report> {
    let n = d.object_count();
    let h = &d.horizontal;
    let v = &d.vertical;
    let cat = &h.cat;
    let mut checks = Vec::new();

    // --- interchange naturality, one slot at a time -----------------------
    let mut nat = CheckBuilder::new("interchange-naturality");
    for b in 0..n {
        for c in 0..n {
            for e in 0..n {
                // slot 1: A ↦ γ_{A,b,c,e}
                check_component_naturality(
                    cat,
                    cat,
                    |x| h.tensor_of(v.tensor_of(x, b), v.tensor_of(c, e)),
                    |x| v.tensor_of(h.tensor_of(x, c), h.tensor_of(b, e)),
                    |x, x2| {
                        h.act_right(v.tensor_of(x, b), v.tensor_of(x2, b), v.tensor_of(c, e))?
                            .compose(&v.act_right(x, x2, b)?)
                    },
                    |x, x2| {
                        v.act_right(h.tensor_of(x, c), h.tensor_of(x2, c), h.tensor_of(b, e))?
                            .compose(&h.act_right(x, x2, c)?)
                    },
                    |x| Ok(d.gamma_at(x, b, c, e).clone()),
                    &mut nat,
                )?;
                // slot 2: B ↦ γ_{b,B,c,e} (b plays A here)
                check_component_naturality(
                    cat,
                    cat,
                    |x| h.tensor_of(v.tensor_of(b, x), v.tensor_of(c, e)),
                    |x| v.tensor_of(h.tensor_of(b, c), h.tensor_of(x, e)),
                    |x, x2| {
                        h.act_right(v.tensor_of(b, x), v.tensor_of(b, x2), v.tensor_of(c, e))?
                            .compose(&v.act_left(b, x, x2)?)
                    },
                    |x, x2| {
                        v.act_left(h.tensor_of(b, c), h.tensor_of(x, e), h.tensor_of(x2, e))?
                            .compose(&h.act_right(x, x2, e)?)
                    },
                    |x| Ok(d.gamma_at(b, x, c, e).clone()),
                    &mut nat,
                )?;
                // slot 3: C ↦ γ_{b,c,C,e}
                check_component_naturality(
                    cat,
                    cat,
                    |x| h.tensor_of(v.tensor_of(b, c), v.tensor_of(x, e)),
                    |x| v.tensor_of(h.tensor_of(b, x), h.tensor_of(c, e)),
                    |x, x2| {
                        h.act_left(v.tensor_of(b, c), v.tensor_of(x, e), v.tensor_of(x2, e))?
                            .compose(&v.act_right(x, x2, e)?)
                    },
                    |x, x2| {
                        v.act_right(h.tensor_of(b, x), h.tensor_of(b, x2), h.tensor_of(c, e))?
                            .compose(&h.act_left(b, x, x2)?)
                    },
                    |x| Ok(d.gamma_at(b, c, x, e).clone()),
                    &mut nat,
                )?;
                // slot 4: D ↦ γ_{b,c,e,D}
                check_component_naturality(
                    cat,
                    cat,
                    |x| h.tensor_of(v.tensor_of(b, c), v.tensor_of(e, x)),
                    |x| v.tensor_of(h.tensor_of(b, e), h.tensor_of(c, x)),
                    |x, x2| {
                        h.act_left(v.tensor_of(b, c), v.tensor_of(e, x), v.tensor_of(e, x2))?
                            .compose(&v.act_left(e, x, x2)?)
                    },
                    |x, x2| {
                        v.act_left(h.tensor_of(b, e), h.tensor_of(c, x), h.tensor_of(c, x2))?
                            .compose(&h.act_left(c, x, x2)?)
                    },
                    |x| Ok(d.gamma_at(b, c, e, x).clone()),
                    &mut nat,
                )?;
            }
        }
    }
    checks.push(nat.finish());

    // --- (3): interchange against horizontal associativity ----------------
    let mut ax3 = CheckBuilder::new("interchange-star-associativity").axiom("(3)");
    let dims6 = vec![n; 6];
    let fails = scan(n.pow(6), |idx| {
        let t = unrank(idx, &dims6);
        let (a, b, c, e, f, g) = (t[0], t[1], t[2], t[3], t[4], t[5]);
        let ab = v.tensor_of(a, b);
        let cd = v.tensor_of(c, e);
        let ef = v.tensor_of(f, g);
        let ok = (|| -> Result<bool> {
            let top = h.assoc_at(ab, cd, ef);
            let right = cat.compose_mor(
                &d.gamma_arr(&a, &b, &h.tensor_of(c, f), &h.tensor_of(e, g))?,
                &cat.compose_mor(
                    &h.tensor_mor(&cat.id_mor(ab), d.gamma_at(c, e, f, g))?,
                    top,
                )?,
            )?;
            let left = cat.compose_mor(
                &v.tensor_mor(h.assoc_at(a, c, f), h.assoc_at(b, e, g))?,
                &cat.compose_mor(
                    d.gamma_at(h.tensor_of(a, c), h.tensor_of(b, e), f, g),
                    &h.tensor_mor(d.gamma_at(a, b, c, e), &cat.id_mor(ef))?,
                )?,
            )?;
            Ok(left == right)
        })()
        .expect("endpoints validated at construction");
        if ok {
            None
        } else {
            Some((t, "interchange incompatible with ∗-associativity".to_string()))
        }
    });
    ax3.extend_failures(fails);
    checks.push(ax3.finish());

    // --- (4): interchange against vertical associativity ------------------
    let mut ax4 = CheckBuilder::new("interchange-circ-associativity").axiom("(4)");
    let fails = scan(n.pow(6), |idx| {
        let t = unrank(idx, &dims6);
        let (a, b, c, e, f, g) = (t[0], t[1], t[2], t[3], t[4], t[5]);
        let ok = (|| -> Result<bool> {
            let top = h.tensor_mor(v.assoc_at(a, b, c), v.assoc_at(e, f, g))?;
            let right = cat.compose_mor(
                &v.tensor_mor(&cat.id_mor(h.tensor_of(a, e)), d.gamma_at(b, c, f, g))?,
                &cat.compose_mor(
                    &d.gamma_arr(&a, &v.tensor_of(b, c), &e, &v.tensor_of(f, g))?,
                    &top,
                )?,
            )?;
            let left = cat.compose_mor(
                v.assoc_at(h.tensor_of(a, e), h.tensor_of(b, f), h.tensor_of(c, g)),
                &cat.compose_mor(
                    &v.tensor_mor(d.gamma_at(a, b, e, f), &cat.id_mor(h.tensor_of(c, g)))?,
                    d.gamma_at(v.tensor_of(a, b), c, v.tensor_of(e, f), g),
                )?,
            )?;
            Ok(left == right)
        })()
        .expect("endpoints validated at construction");
        if ok {
            None
        } else {
            Some((t, "interchange incompatible with ∘-associativity".to_string()))
        }
    });
    ax4.extend_failures(fails);
    checks.push(ax4.finish());

    // --- (5): δ against the horizontal unitors ----------------------------
    let j = h.unit;
    let mut hl_inv = Vec::with_capacity(n);
    let mut hr_inv = Vec::with_capacity(n);
    let mut vl_inv = Vec::with_capacity(n);
    let mut vr_inv = Vec::with_capacity(n);
    for x in 0..n {
        hl_inv.push(
            cat.invert_mor(h.lunit_at(x))?
                .ok_or_else(|| Error::NotInvertible("horizontal left unitor".into()))?,
        );
        hr_inv.push(
            cat.invert_mor(h.runit_at(x))?
                .ok_or_else(|| Error::NotInvertible("horizontal right unitor".into()))?,
        );
        vl_inv.push(
            cat.invert_mor(v.lunit_at(x))?
                .ok_or_else(|| Error::NotInvertible("vertical left unitor".into()))?,
        );
        vr_inv.push(
            cat.invert_mor(v.runit_at(x))?
                .ok_or_else(|| Error::NotInvertible("vertical right unitor".into()))?,
        );
    }

    let mut ax5 = CheckBuilder::new("interchange-delta-units").axiom("(5)");
    for a in 0..n {
        for b in 0..n {
            let ab = v.tensor_of(a, b);
            let left_lhs = cat.compose_mor(
                d.gamma_at(j, j, a, b),
                &cat.compose_mor(&h.tensor_mor(&d.delta, &cat.id_mor(ab))?, &hl_inv[ab])?,
            )?;
            let left_rhs = v.tensor_mor(&hl_inv[a], &hl_inv[b])?;
            if left_lhs != left_rhs {
                ax5.fail(vec![a, b], "left δ-unit diagram failed".to_string());
            }
            let right_lhs = cat.compose_mor(
                d.gamma_at(a, b, j, j),
                &cat.compose_mor(&h.tensor_mor(&cat.id_mor(ab), &d.delta)?, &hr_inv[ab])?,
            )?;
            let right_rhs = v.tensor_mor(&hr_inv[a], &hr_inv[b])?;
            if right_lhs != right_rhs {
                ax5.fail(vec![a, b], "right δ-unit diagram failed".to_string());
            }
        }
    }
    checks.push(ax5.finish());

    // --- (6): μ against the vertical unitors ------------------------------
    let one = v.unit;
    let mut ax6 = CheckBuilder::new("interchange-mu-units").axiom("(6)");
    for a in 0..n {
        for b in 0..n {
            let ab = h.tensor_of(a, b);
            let left_lhs = cat.compose_mor(
                &v.tensor_mor(&d.mu, &cat.id_mor(ab))?,
                &cat.compose_mor(
                    d.gamma_at(one, a, one, b),
                    &h.tensor_mor(&vl_inv[a], &vl_inv[b])?,
                )?,
            )?;
            if left_lhs != vl_inv[ab] {
                ax6.fail(vec![a, b], "left μ-unit diagram failed".to_string());
            }
            let right_lhs = cat.compose_mor(
                &v.tensor_mor(&cat.id_mor(ab), &d.mu)?,
                &cat.compose_mor(
                    d.gamma_at(a, one, b, one),
                    &h.tensor_mor(&vr_inv[a], &vr_inv[b])?,
                )?,
            )?;
            if right_lhs != vr_inv[ab] {
                ax6.fail(vec![a, b], "right μ-unit diagram failed".to_string());
            }
        }
    }
    checks.push(ax6.finish());

    // --- unit monoid and counit comonoid ----------------------------------
    checks.extend(monoid_law_checks(
        h,
        &MonoidData { carrier: one, mul: d.mu.clone(), unit: d.tau.clone() },
        "unit-monoid-",
    )?);
    checks.extend(comonoid_law_checks(
        v,
        &ComonoidData { carrier: j, comul: d.delta.clone(), counit: d.tau.clone() },
        "unit-comonoid-",
    )?);

    Ok(Report::from_checks(checks))
}

/// Views a (possibly lax) braided monoidal structure as duoidal with
/// ∗ = ∘ = ⊗: the interchange is re-bracketing around a middle braiding, and
/// the unit maps are unitor data at the tensor unit. Errors if the braiding
/// fails its own validation.
pub fn from_braided(ms: &MonoidalStructure, br: &Braiding) -> Result<DuoidalStructure> {
    let braid_report = crate::monoidal::validate_braiding(ms, br)?;
    if !braid_report.passed() {
        return Err(Error::Precondition(format!(
            "braiding axioms failed: {:?}",
            braid_report.failing_ids()
        )));
    }
    let n = ms.object_count();
    let cat = &ms.cat;
    let a_inv = |x: usize, y: usize, z: usize| -> Result<Mor> {
        cat.invert_mor(ms.assoc_at(x, y, z))?
            .ok_or_else(|| Error::NotInvertible("associator component".into()))
    };
    let mut gamma = Vec::with_capacity(n * n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    // (A⊗B)⊗(C⊗E) → (A⊗C)⊗(B⊗E) via the middle braiding.
                    let steps = [
                        ms.assoc_at(a, b, ms.tensor_of(c, e)).clone(),
                        ms.tensor_mor(&cat.id_mor(a), &a_inv(b, c, e)?)?,
                        ms.tensor_mor(
                            &cat.id_mor(a),
                            &ms.tensor_mor(br.at(ms, b, c), &cat.id_mor(e))?,
                        )?,
                        ms.tensor_mor(&cat.id_mor(a), ms.assoc_at(c, b, e))?,
                        a_inv(a, c, ms.tensor_of(b, e))?,
                    ];
                    let mut acc = steps[0].clone();
                    for s in &steps[1..] {
                        acc = cat.compose_mor(s, &acc)?;
                    }
                    gamma.push(acc);
                }
            }
        }
    }
    let mu = ms.lunit_at(ms.unit).clone();
    let tau = cat.id_mor(ms.unit);
    let delta = cat
        .invert_mor(ms.lunit_at(ms.unit))?
        .ok_or_else(|| Error::NotInvertible("left unitor at the unit".into()))?;
    DuoidalStructure::new(ms.clone(), ms.clone(), gamma, mu, tau, delta)
}

// ---------------------------------------------------------------------------
// Structured functors between duoidal structures
// ---------------------------------------------------------------------------

/// How the vertical comparison maps of a structured functor are oriented.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FunctorMode {
    /// Both comparison families are lax: `F(A)∘'F(B) → F(A∘B)`.
    Duoidal,
    /// Horizontal lax, vertical oplax: `F(A∘B) → F(A)∘'F(B)`.
    Bimonoidal,
}

/// A functor between duoidal carriers together with horizontal comparison
/// maps (always lax) and vertical comparison maps whose direction depends on
/// the mode it is validated in.
#[derive(Clone, Debug)]
pub struct StructuredFunctorData {
    pub functor: VFunctor,
    /// `F(A) ∗' F(B) → F(A∗B)`, indexed by object pairs of the source.
    pub hor_tensor: Vec<Mor>,
    /// `J' → F(J)`.
    pub hor_unit: Mor,
    /// Duoidal mode: `F(A) ∘' F(B) → F(A∘B)`. Bimonoidal mode: the reverse.
    pub vert_tensor: Vec<Mor>,
    /// Duoidal mode: `𝟏' → F(𝟏)`. Bimonoidal mode: `F(𝟏) → 𝟏'`.
    pub vert_unit: Mor,
}

impl StructuredFunctorData {
    fn hor_at(&self, n: usize, a: usize, b: usize) -> &Mor {
        &self.hor_tensor[a * n + b]
    }
    fn vert_at(&self, n: usize, a: usize, b: usize) -> &Mor {
        &self.vert_tensor[a * n + b]
    }
}

/// Checks functoriality, the lax monoidal axioms of the horizontal
/// comparison, the lax or oplax axioms of the vertical comparison, enriched
/// naturality of both comparison families, and the four compatibility
/// squares with γ, μ, δ, τ.
pub fn validate_structured_functor(
    src: &DuoidalStructure,
    dst: &DuoidalStructure,
    f: &StructuredFunctorData,
    mode: FunctorMode,
) -> Result<Report> {
    let n = src.object_count();
    if f.functor.source.as_ref() != src.horizontal.cat.as_ref()
        || f.functor.target.as_ref() != dst.horizontal.cat.as_ref()
    {
        return Err(Error::Shape("functor endpoints do not match the duoidal carriers".into()));
    }
    if f.hor_tensor.len() != n * n || f.vert_tensor.len() != n * n {
        return Err(Error::Shape("one comparison component per object pair required".into()));
    }
    let fo = |a: usize| f.functor.obj[a];
    let cat2 = &dst.horizontal.cat;
    let mut checks = crate::cat::validate_functor(&f.functor)?.checks;

    // Shape checks for the comparison families.
    for a in 0..n {
        for b in 0..n {
            let hm = f.hor_at(n, a, b);
            if hm.dom != dst.horizontal.tensor_of(fo(a), fo(b))
                || hm.cod != fo(src.horizontal.tensor_of(a, b))
            {
                return Err(Error::Shape(format!(
                    "horizontal comparison at ({a},{b}) has wrong endpoints"
                )));
            }
            cat2.check_mor(hm)?;
            let vm = f.vert_at(n, a, b);
            let lax_dom = dst.vertical.tensor_of(fo(a), fo(b));
            let lax_cod = fo(src.vertical.tensor_of(a, b));
            let (want_dom, want_cod) = match mode {
                FunctorMode::Duoidal => (lax_dom, lax_cod),
                FunctorMode::Bimonoidal => (lax_cod, lax_dom),
            };
            if vm.dom != want_dom || vm.cod != want_cod {
                return Err(Error::Shape(format!(
                    "vertical comparison at ({a},{b}) has wrong endpoints"
                )));
            }
            cat2.check_mor(vm)?;
        }
    }
    cat2.check_mor(&f.hor_unit)?;
    if f.hor_unit.dom != dst.horizontal.unit || f.hor_unit.cod != fo(src.horizontal.unit) {
        return Err(Error::Shape("horizontal unit comparison has wrong endpoints".into()));
    }
    cat2.check_mor(&f.vert_unit)?;
    let (want_dom, want_cod) = match mode {
        FunctorMode::Duoidal => (dst.vertical.unit, fo(src.vertical.unit)),
        FunctorMode::Bimonoidal => (fo(src.vertical.unit), dst.vertical.unit),
    };
    if f.vert_unit.dom != want_dom || f.vert_unit.cod != want_cod {
        return Err(Error::Shape("vertical unit comparison has wrong endpoints".into()));
    }

    checks.extend(lax_monoidal_checks(
        &src.horizontal,
        &dst.horizontal,
        &f.functor,
        |a, b| f.hor_at(n, a, b),
        &f.hor_unit,
        "horizontal-comparison-",
    )?);

    match mode {
        FunctorMode::Duoidal => {
            checks.extend(lax_monoidal_checks(
                &src.vertical,
                &dst.vertical,
                &f.functor,
                |a, b| f.vert_at(n, a, b),
                &f.vert_unit,
                "vertical-comparison-",
            )?);
        }
        FunctorMode::Bimonoidal => {
            checks.extend(oplax_monoidal_checks(
                &src.vertical,
                &dst.vertical,
                &f.functor,
                |a, b| f.vert_at(n, a, b),
                &f.vert_unit,
                "vertical-comparison-",
            )?);
        }
    }

    // Compatibility with the interchange and unit-mixing maps.
    let h2 = &dst.horizontal;
    let v2 = &dst.vertical;
    let mut cg = CheckBuilder::new("comparison-interchange-compatibility");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    let (lhs, rhs) = match mode {
                        FunctorMode::Duoidal => {
                            // (FA∘'FB)∗'(FC∘'FE) → F((A∗C)∘(B∗E))
                            let lhs = cat2.compose_mor(
                                &f.functor.apply_mor(src.gamma_at(a, b, c, e))?,
                                &cat2.compose_mor(
                                    f.hor_at(n, src.vertical.tensor_of(a, b), src.vertical.tensor_of(c, e)),
                                    &h2.tensor_mor(f.vert_at(n, a, b), f.vert_at(n, c, e))?,
                                )?,
                            )?;
                            let rhs = cat2.compose_mor(
                                f.vert_at(n, src.horizontal.tensor_of(a, c), src.horizontal.tensor_of(b, e)),
                                &cat2.compose_mor(
                                    &v2.tensor_mor(f.hor_at(n, a, c), f.hor_at(n, b, e))?,
                                    dst.gamma_at(fo(a), fo(b), fo(c), fo(e)),
                                )?,
                            )?;
                            (lhs, rhs)
                        }
                        FunctorMode::Bimonoidal => {
                            // F(A∘B)∗'F(C∘E) → F(A∗C)∘'F(B∗E)
                            let lhs = cat2.compose_mor(
                                f.vert_at(n, src.horizontal.tensor_of(a, c), src.horizontal.tensor_of(b, e)),
                                &cat2.compose_mor(
                                    &f.functor.apply_mor(src.gamma_at(a, b, c, e))?,
                                    f.hor_at(n, src.vertical.tensor_of(a, b), src.vertical.tensor_of(c, e)),
                                )?,
                            )?;
                            let rhs = cat2.compose_mor(
                                &v2.tensor_mor(f.hor_at(n, a, c), f.hor_at(n, b, e))?,
                                &cat2.compose_mor(
                                    dst.gamma_at(fo(a), fo(b), fo(c), fo(e)),
                                    &h2.tensor_mor(f.vert_at(n, a, b), f.vert_at(n, c, e))?,
                                )?,
                            )?;
                            (lhs, rhs)
                        }
                    };
                    if lhs != rhs {
                        cg.fail(vec![a, b, c, e], "interchange compatibility failed".to_string());
                    }
                }
            }
        }
    }
    checks.push(cg.finish());

    let one_s = src.vertical.unit;
    let j_s = src.horizontal.unit;
    let mut cu = CheckBuilder::new("comparison-unit-compatibility");
    match mode {
        FunctorMode::Duoidal => {
            // μ: F(μ)∘φ_h∘(φ_v0 ∗' φ_v0) = φ_v0∘μ'
            let lhs = cat2.compose_mor(
                &f.functor.apply_mor(&src.mu)?,
                &cat2.compose_mor(
                    f.hor_at(n, one_s, one_s),
                    &h2.tensor_mor(&f.vert_unit, &f.vert_unit)?,
                )?,
            )?;
            let rhs = cat2.compose_mor(&f.vert_unit, &dst.mu)?;
            if lhs != rhs {
                cu.fail(vec![0], "μ compatibility failed".to_string());
            }
            // τ: F(τ)∘φ_h0 = φ_v0∘τ'
            let lhs = cat2.compose_mor(
                &f.functor.apply_mor(&src.tau)?,
                &f.hor_unit,
            )?;
            let rhs = cat2.compose_mor(&f.vert_unit, &dst.tau)?;
            if lhs != rhs {
                cu.fail(vec![1], "τ compatibility failed".to_string());
            }
            // δ: F(δ)∘φ_h0 = φ_v∘(φ_h0 ∘' φ_h0)∘δ'
            let lhs = cat2.compose_mor(
                &f.functor.apply_mor(&src.delta)?,
                &f.hor_unit,
            )?;
            let rhs = cat2.compose_mor(
                f.vert_at(n, j_s, j_s),
                &cat2.compose_mor(&v2.tensor_mor(&f.hor_unit, &f.hor_unit)?, &dst.delta)?,
            )?;
            if lhs != rhs {
                cu.fail(vec![2], "δ compatibility failed".to_string());
            }
        }
        FunctorMode::Bimonoidal => {
            // μ: μ'∘(ψ_v0 ∗' ψ_v0) = ψ_v0∘F(μ)∘φ_h
            let lhs = cat2.compose_mor(&dst.mu, &h2.tensor_mor(&f.vert_unit, &f.vert_unit)?)?;
            let rhs = cat2.compose_mor(
                &f.vert_unit,
                &cat2.compose_mor(
                    &f.functor.apply_mor(&src.mu)?,
                    f.hor_at(n, one_s, one_s),
                )?,
            )?;
            if lhs != rhs {
                cu.fail(vec![0], "μ compatibility failed".to_string());
            }
            // τ: ψ_v0∘F(τ)∘φ_h0 = τ'
            let lhs = cat2.compose_mor(
                &f.vert_unit,
                &cat2.compose_mor(
                    &f.functor.apply_mor(&src.tau)?,
                    &f.hor_unit,
                )?,
            )?;
            if lhs != dst.tau {
                cu.fail(vec![1], "τ compatibility failed".to_string());
            }
            // δ: ψ_v∘F(δ)∘φ_h0 = (φ_h0 ∘' φ_h0)∘δ'
            let lhs = cat2.compose_mor(
                f.vert_at(n, j_s, j_s),
                &cat2.compose_mor(
                    &f.functor.apply_mor(&src.delta)?,
                    &f.hor_unit,
                )?,
            )?;
            let rhs = cat2.compose_mor(&v2.tensor_mor(&f.hor_unit, &f.hor_unit)?, &dst.delta)?;
            if lhs != rhs {
                cu.fail(vec![2], "δ compatibility failed".to_string());
            }
        }
    }
    checks.push(cu.finish());

    Ok(Report::from_checks(checks))
}

/// Lax monoidal functor axioms for a comparison family `φ_{A,B}` and unit
/// comparison `φ0`, including enriched naturality of the family.
pub(crate) fn lax_monoidal_checks<'a>(
    src: &MonoidalStructure,
    dst: &MonoidalStructure,
    func: &VFunctor,
    phi: impl Fn(usize, usize) -> &'a Mor,
    phi0: &Mor,
    id_prefix: &str,
) -> Result<Vec<crate::report::Check>> {
    let n = src.object_count();
    let cat2 = &dst.cat;
    let fo = |a: usize| func.obj[a];
    let mut checks = Vec::new();

    let mut nat = CheckBuilder::new(&format!("{id_prefix}naturality"));
    for b in 0..n {
        check_component_naturality(
            &src.cat,
            cat2,
            |x| dst.tensor_of(fo(x), fo(b)),
            |x| fo(src.tensor_of(x, b)),
            |x, x2| dst.act_right(fo(x), fo(x2), fo(b))?.compose(func.hom_map(x, x2)),
            |x, x2| {
                func.hom_map(src.tensor_of(x, b), src.tensor_of(x2, b))
                    .compose(&src.act_right(x, x2, b)?)
            },
            |x| Ok(phi(x, b).clone()),
            &mut nat,
        )?;
        check_component_naturality(
            &src.cat,
            cat2,
            |x| dst.tensor_of(fo(b), fo(x)),
            |x| fo(src.tensor_of(b, x)),
            |x, x2| dst.act_left(fo(b), fo(x), fo(x2))?.compose(func.hom_map(x, x2)),
            |x, x2| {
                func.hom_map(src.tensor_of(b, x), src.tensor_of(b, x2))
                    .compose(&src.act_left(b, x, x2)?)
            },
            |x| Ok(phi(b, x).clone()),
            &mut nat,
        )?;
    }
    checks.push(nat.finish());

    let mut ax = CheckBuilder::new(&format!("{id_prefix}associativity"));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = cat2.compose_mor(
                    &func.apply_mor(src.assoc_at(a, b, c))?,
                    &cat2.compose_mor(
                        phi(src.tensor_of(a, b), c),
                        &dst.tensor_mor(phi(a, b), &cat2.id_mor(fo(c)))?,
                    )?,
                )?;
                let rhs = cat2.compose_mor(
                    phi(a, src.tensor_of(b, c)),
                    &cat2.compose_mor(
                        &dst.tensor_mor(&cat2.id_mor(fo(a)), phi(b, c))?,
                        dst.assoc_at(fo(a), fo(b), fo(c)),
                    )?,
                )?;
                if lhs != rhs {
                    ax.fail(vec![a, b, c], "comparison associativity failed".to_string());
                }
            }
        }
    }
    checks.push(ax.finish());

    let mut un = CheckBuilder::new(&format!("{id_prefix}unit-laws"));
    for a in 0..n {
        let lhs = cat2.compose_mor(
            &func.apply_mor(src.lunit_at(a))?,
            &cat2.compose_mor(
                phi(src.unit, a),
                &dst.tensor_mor(phi0, &cat2.id_mor(fo(a)))?,
            )?,
        )?;
        if lhs != *dst.lunit_at(fo(a)) {
            un.fail(vec![a], "left unit comparison failed".to_string());
        }
        let rhs = cat2.compose_mor(
            &func.apply_mor(src.runit_at(a))?,
            &cat2.compose_mor(
                phi(a, src.unit),
                &dst.tensor_mor(&cat2.id_mor(fo(a)), phi0)?,
            )?,
        )?;
        if rhs != *dst.runit_at(fo(a)) {
            un.fail(vec![a], "right unit comparison failed".to_string());
        }
    }
    checks.push(un.finish());

    Ok(checks)
}

/// Oplax monoidal functor axioms: the mirror image of
/// [`lax_monoidal_checks`] with comparison maps `ψ_{A,B}: F(A⊗B) → FA⊗'FB`.
fn oplax_monoidal_checks<'a>(
    src: &MonoidalStructure,
    dst: &MonoidalStructure,
    func: &VFunctor,
    psi: impl Fn(usize, usize) -> &'a Mor,
    psi0: &Mor,
    id_prefix: &str,
) -> Result<Vec<crate::report::Check>> {
    let n = src.object_count();
    let cat2 = &dst.cat;
    let fo = |a: usize| func.obj[a];
    let mut checks = Vec::new();

    let mut nat = CheckBuilder::new(&format!("{id_prefix}naturality"));
    for b in 0..n {
        check_component_naturality(
            &src.cat,
            cat2,
            |x| fo(src.tensor_of(x, b)),
            |x| dst.tensor_of(fo(x), fo(b)),
            |x, x2| {
                func.hom_map(src.tensor_of(x, b), src.tensor_of(x2, b))
                    .compose(&src.act_right(x, x2, b)?)
            },
            |x, x2| dst.act_right(fo(x), fo(x2), fo(b))?.compose(func.hom_map(x, x2)),
            |x| Ok(psi(x, b).clone()),
            &mut nat,
        )?;
        check_component_naturality(
            &src.cat,
            cat2,
            |x| fo(src.tensor_of(b, x)),
            |x| dst.tensor_of(fo(b), fo(x)),
            |x, x2| {
                func.hom_map(src.tensor_of(b, x), src.tensor_of(b, x2))
                    .compose(&src.act_left(b, x, x2)?)
            },
            |x, x2| dst.act_left(fo(b), fo(x), fo(x2))?.compose(func.hom_map(x, x2)),
            |x| Ok(psi(b, x).clone()),
            &mut nat,
        )?;
    }
    checks.push(nat.finish());

    let mut ax = CheckBuilder::new(&format!("{id_prefix}coassociativity"));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = cat2.compose_mor(
                    &dst.tensor_mor(&cat2.id_mor(fo(a)), psi(b, c))?,
                    &cat2.compose_mor(
                        psi(a, src.tensor_of(b, c)),
                        &func.apply_mor(src.assoc_at(a, b, c))?,
                    )?,
                )?;
                let rhs = cat2.compose_mor(
                    dst.assoc_at(fo(a), fo(b), fo(c)),
                    &cat2.compose_mor(
                        &dst.tensor_mor(psi(a, b), &cat2.id_mor(fo(c)))?,
                        psi(src.tensor_of(a, b), c),
                    )?,
                )?;
                if lhs != rhs {
                    ax.fail(vec![a, b, c], "comparison coassociativity failed".to_string());
                }
            }
        }
    }
    checks.push(ax.finish());

    let mut un = CheckBuilder::new(&format!("{id_prefix}counit-laws"));
    for a in 0..n {
        let lhs = cat2.compose_mor(
            dst.lunit_at(fo(a)),
            &cat2.compose_mor(
                &dst.tensor_mor(psi0, &cat2.id_mor(fo(a)))?,
                psi(src.unit, a),
            )?,
        )?;
        if lhs != func.apply_mor(src.lunit_at(a))? {
            un.fail(vec![a], "left counit comparison failed".to_string());
        }
        let rhs = cat2.compose_mor(
            dst.runit_at(fo(a)),
            &cat2.compose_mor(
                &dst.tensor_mor(&cat2.id_mor(fo(a)), psi0)?,
                psi(a, src.unit),
            )?,
        )?;
        if rhs != func.apply_mor(src.runit_at(a))? {
            un.fail(vec![a], "right counit comparison failed".to_string());
        }
    }
    checks.push(un.finish());

    Ok(checks)
}

/// Ready-made duoidal structures for tests and the fixture catalog.
pub mod fixtures {
    use std::sync::Arc;

    use super::*;
    use crate::base::{matrix::Matrix, BaseKind, BaseMap, BaseValue};
    use crate::cat::{monoid_category, FinCat};
    use crate::monoidal::fixtures::{
        chain_min_monoidal, discrete_group_monoidal, lax_idempotent_braided, sign_braided_z2_line,
    };

    /// Discrete duoidal structure on a finite abelian group: both tensors
    /// are the group operation and the interchange is the identity.
    pub fn duoidal_from_group(
        base: BaseKind,
        table: &[Vec<usize>],
        unit: usize,
    ) -> Result<DuoidalStructure> {
        let ms = discrete_group_monoidal(base, table, unit)?;
        let n = ms.object_count();
        let t = |a: usize, b: usize| ms.tensor_of(a, b);
        let mut gamma = Vec::with_capacity(n * n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let dom = t(t(a, b), t(c, d));
                        let cod = t(t(a, c), t(b, d));
                        if dom != cod {
                            return Err(Error::Precondition(
                                "identity interchange requires an abelian table".into(),
                            ));
                        }
                        gamma.push(ms.cat.id_mor(dom));
                    }
                }
            }
        }
        let mu = ms.lunit_at(unit).clone();
        let tau = ms.cat.id_mor(unit);
        let delta = ms
            .cat
            .invert_mor(ms.lunit_at(unit))?
            .expect("unitors of the discrete structure are identities");
        DuoidalStructure::new(ms.clone(), ms, gamma, mu, tau, delta)
    }

    /// The one-object trivial duoidal structure over a base.
    pub fn unit_duoidal(base: BaseKind) -> Result<DuoidalStructure> {
        duoidal_from_group(base, &[vec![0]], 0)
    }

    /// Delooping of a finite abelian group: one object whose endomorphisms
    /// are the group elements, both tensors given by the multiplication, and
    /// the identity braiding. Unlike the discrete fixtures its hom object has
    /// more than one point, so convolution over it genuinely quotients.
    pub fn delooped_group_duoidal(
        table: &[Vec<usize>],
        unit_elem: usize,
    ) -> Result<DuoidalStructure> {
        let m = table.len();
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != table[j][i] {
                    return Err(Error::Precondition(
                        "delooping needs a commutative table to tensor morphisms".into(),
                    ));
                }
            }
        }
        let cat = Arc::new(monoid_category(table, unit_elem)?);
        let hom = cat.hom(0, 0);
        let mut flat = Vec::with_capacity(m * m);
        for row in table {
            flat.extend_from_slice(row);
        }
        let tensor = BaseMap::from_table(hom.tensor(&hom)?, hom, flat)?;
        let ms = MonoidalStructure::new(
            cat.clone(),
            vec![0],
            vec![tensor],
            0,
            vec![cat.id_mor(0)],
            vec![cat.id_mor(0)],
            vec![cat.id_mor(0)],
        )?;
        let br = Braiding::new(&ms, vec![cat.id_mor(0)], false)?;
        from_braided(&ms, &br)
    }

    /// The chain with tensor `min`, viewed as duoidal via its (identity)
    /// symmetry: a skeletal stand-in for subterminal sets under product.
    pub fn chain_min_duoidal(n: usize) -> Result<DuoidalStructure> {
        let ms = chain_min_monoidal(n)?;
        let components = (0..n * n)
            .map(|i| ms.cat.id_mor(ms.tensor_of(i / n, i % n)))
            .collect();
        let br = Braiding::new(&ms, components, false)?;
        from_braided(&ms, &br)
    }

    /// Duoidal structure from the sign braiding on the Z/2-graded scalar
    /// lines over F_3: the interchange picks up -1 on odd-odd middles.
    pub fn sign_duoidal() -> Result<DuoidalStructure> {
        let (ms, br) = sign_braided_z2_line()?;
        from_braided(&ms, &br)
    }

    /// Duoidal structure from the lax idempotent braiding: its interchange
    /// at the (z,z) middle is not invertible.
    pub fn lax_idempotent_duoidal() -> Result<DuoidalStructure> {
        let (ms, br) = lax_idempotent_braided()?;
        from_braided(&ms, &br)
    }

    /// The scalar bimonoid on the even line of [`sign_duoidal`]: all four
    /// structure maps are the scalar 2 (so that 2·2 = 1 in F_3).
    pub fn sign_scalar_bimonoid(d: &DuoidalStructure) -> Result<Bimonoid<DuoidalStructure>> {
        let sc = scalar_endo(d, 0, 2)?;
        Ok(Bimonoid {
            carrier: 0,
            mul: sc.clone(),
            unit: sc.clone(),
            comul: sc.clone(),
            counit: sc,
        })
    }

    /// A scalar endomorphism-shaped morphism on a one-dimensional hom of a
    /// discrete scalar-line category.
    pub fn scalar_endo(d: &DuoidalStructure, obj: usize, v: u32) -> Result<Mor> {
        let cat = &d.horizontal.cat;
        let p = match cat.base {
            BaseKind::FinVect(p) => p,
            BaseKind::FinSet => return Err(Error::KindMismatch("scalar requires a vector base".into())),
        };
        Ok(Mor {
            dom: obj,
            cod: obj,
            point: BaseMap::from_matrix(
                crate::base::BaseValue::unit(cat.base),
                cat.hom(obj, obj),
                crate::base::matrix::Matrix::from_vec(p, 1, 1, vec![v])?,
            )?,
        })
    }

    /// The two-object chain enriched in vector spaces over F_3: `hom(0,1)` is
    /// a scalar line, `hom(1,0)` vanishes, composition is scalar
    /// multiplication, and the tensor is `max` with unit `0`, made duoidal via
    /// its identity symmetry. Unlike the thin chain, this carrier has
    /// distinct parallel arrows (the scalars `0 → 1`), so naturality of
    /// candidate coherence data has real content: a component family that is
    /// not constant along the chain fails the square at the arrow `0 → 1`
    /// even when every component is invertible.
    pub fn vect_chain_duoidal() -> Result<DuoidalStructure> {
        let base = BaseKind::FinVect(3);
        let line = BaseValue::unit(base);
        let hom_of = |a: usize, b: usize| -> Result<BaseValue> {
            BaseValue::new(base, usize::from(a <= b))
        };
        let mut hom = Vec::with_capacity(4);
        for a in 0..2 {
            for b in 0..2 {
                hom.push(hom_of(a, b)?);
            }
        }
        let zero_or_scalar = |src: BaseValue, tgt: BaseValue| -> Result<BaseMap> {
            if src.size == 1 && tgt.size == 1 {
                Ok(BaseMap::identity(line))
            } else {
                BaseMap::from_matrix(src, tgt, Matrix::zero(3, tgt.size, src.size))
            }
        };
        let mut comp = Vec::with_capacity(8);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let src = hom_of(b, c)?.tensor(&hom_of(a, b)?)?;
                    comp.push(zero_or_scalar(src, hom_of(a, c)?)?);
                }
            }
        }
        let ident = vec![BaseMap::identity(line), BaseMap::identity(line)];
        let cat = Arc::new(FinCat::new(
            base,
            vec!["0".into(), "1".into()],
            hom,
            comp,
            ident,
        )?);
        let t = |a: usize, b: usize| a.max(b);
        let mut tensor_obj = Vec::with_capacity(4);
        for a in 0..2 {
            for b in 0..2 {
                tensor_obj.push(t(a, b));
            }
        }
        let mut tensor_hom = Vec::with_capacity(16);
        for x in 0..4 {
            for y in 0..4 {
                let (a, b) = (x / 2, x % 2);
                let (c, d) = (y / 2, y % 2);
                let src = cat.hom(a, c).tensor(&cat.hom(b, d))?;
                tensor_hom.push(zero_or_scalar(src, cat.hom(t(a, b), t(c, d)))?);
            }
        }
        let assoc = (0..8)
            .map(|i| cat.id_mor(t(t(i / 4, (i / 2) % 2), i % 2)))
            .collect();
        let lunit = (0..2).map(|a| cat.id_mor(a)).collect();
        let runit = (0..2).map(|a| cat.id_mor(a)).collect();
        let ms =
            MonoidalStructure::new(cat.clone(), tensor_obj, tensor_hom, 0, assoc, lunit, runit)?;
        let components = (0..4).map(|i| ms.cat.id_mor(t(i / 2, i % 2))).collect();
        let br = Braiding::new(&ms, components, false)?;
        from_braided(&ms, &br)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::base::BaseKind;
    use crate::monoidal::validate_monoidal;

    #[test]
    fn chain_min_duoidal_passes() {
        let d = chain_min_duoidal(3).unwrap();
        assert!(validate_monoidal(&d.horizontal).unwrap().passed());
        let r = validate_duoidal(&d).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());
    }

    #[test]
    fn vect_chain_duoidal_passes_and_has_parallel_arrows() {
        let d = fixtures::vect_chain_duoidal().unwrap();
        assert!(validate_monoidal(&d.horizontal).unwrap().passed());
        let r = validate_duoidal(&d).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());
        // Three parallel arrows 0 → 1 (the scalars of F_3), none parallel
        // back: this is what separates the carrier from the thin chain.
        let cat = &d.horizontal.cat;
        assert_eq!(cat.all_mors(0, 1).unwrap().len(), 3);
        assert_eq!(cat.all_mors(1, 0).unwrap().len(), 1);
    }

    #[test]
    fn discrete_group_duoidal_passes() {
        let table = vec![vec![0, 1], vec![1, 0]];
        let d = duoidal_from_group(BaseKind::FinSet, &table, 0).unwrap();
        assert!(validate_duoidal(&d).unwrap().passed());

        let z3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let d3 = duoidal_from_group(BaseKind::FinSet, &z3, 0).unwrap();
        assert!(validate_duoidal(&d3).unwrap().passed());
    }

    #[test]
    fn sign_duoidal_passes_with_invertible_interchange() {
        let d = sign_duoidal().unwrap();
        let r = validate_duoidal(&d).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());
        // The braiding is symmetric, so every interchange component is
        // invertible; and the (1,1,1,1) component is genuinely -1.
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for e in 0..2 {
                        assert!(d
                            .horizontal
                            .cat
                            .invert_mor(d.gamma_at(a, b, c, e))
                            .unwrap()
                            .is_some());
                    }
                }
            }
        }
        assert_eq!(d.gamma_at(1, 1, 1, 1).point.describe(), "matrix1x1[2]");
    }

    #[test]
    fn lax_duoidal_passes_with_noninvertible_interchange() {
        let d = lax_idempotent_duoidal().unwrap();
        let r = validate_duoidal(&d).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());
        // γ at (z,z,z,z) contains the idempotent and is not invertible.
        assert!(d.horizontal.cat.invert_mor(d.gamma_at(1, 1, 1, 1)).unwrap().is_none());
    }

    #[test]
    fn corrupted_interchange_fails_axiom_3_with_tuple() {
        let mut d = sign_duoidal().unwrap();
        // Flip the sign of the single component γ(0,1,1,0).
        let wrong = scalar_endo(&d, 0, 1).unwrap();
        assert_ne!(&wrong, d.gamma_at(0, 1, 1, 0));
        d.set_gamma(0, 1, 1, 0, wrong);
        let r = validate_duoidal(&d).unwrap();
        assert!(!r.passed());
        let ax3 = r.check("interchange-star-associativity").unwrap();
        assert!(!ax3.ok);
        assert_eq!(ax3.axiom.as_deref(), Some("(3)"));
        assert_eq!(ax3.counterexamples[0].at.len(), 6);
    }

    #[test]
    fn corrupted_delta_fails_axiom_5() {
        let mut d = sign_duoidal().unwrap();
        d.delta = scalar_endo(&d, 0, 2).unwrap();
        let r = validate_duoidal(&d).unwrap();
        let ax5 = r.check("interchange-delta-units").unwrap();
        assert!(!ax5.ok);
        assert_eq!(ax5.axiom.as_deref(), Some("(5)"));
        assert_eq!(ax5.counterexamples[0].at, vec![0, 0]);
    }

    #[test]
    fn corrupted_mu_fails_axiom_6() {
        let mut d = sign_duoidal().unwrap();
        d.mu = scalar_endo(&d, 0, 2).unwrap();
        let r = validate_duoidal(&d).unwrap();
        let ax6 = r.check("interchange-mu-units").unwrap();
        assert!(!ax6.ok);
        assert_eq!(ax6.axiom.as_deref(), Some("(6)"));
    }

    #[test]
    fn scalar_bimonoid_passes_and_corruption_fails_axiom_8() {
        let d = sign_duoidal().unwrap();
        let b = sign_scalar_bimonoid(&d).unwrap();
        let r = validate_bimonoid(&d, &b).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());

        // δ = ε = 1 still satisfies the comonoid laws but breaks the
        // interchange compatibility (8): 1·2 ≠ 2²·1² in F_3.
        let mut bad = b.clone();
        bad.comul = scalar_endo(&d, 0, 1).unwrap();
        bad.counit = scalar_endo(&d, 0, 1).unwrap();
        let r2 = validate_bimonoid(&d, &bad).unwrap();
        assert!(!r2.passed());
        assert!(r2.check("comonoid-coassociativity").unwrap().ok);
        assert!(r2.check("comonoid-counit-laws").unwrap().ok);
        let c8 = r2.check("bimonoid-interchange").unwrap();
        assert!(!c8.ok);
        assert_eq!(c8.axiom.as_deref(), Some("(8)"));
        // (10) also fails: ε∘η = 2 but τ = 1.
        assert!(!r2.check("bimonoid-counit-of-unit").unwrap().ok);
    }

    #[test]
    fn unit_bimonoid_of_braided_duoidal_passes() {
        let d = chain_min_duoidal(3).unwrap();
        // A = 𝟏 = J with canonical structure: everything is the unit object.
        let j = d.horizontal.unit;
        let b = Bimonoid::<DuoidalStructure> {
            carrier: j,
            mul: d.mu.clone(),
            unit: d.tau.clone(),
            comul: d.delta.clone(),
            counit: d.tau.clone(),
        };
        assert!(validate_bimonoid(&d, &b).unwrap().passed());
    }

    #[test]
    fn mon_tensor_of_scalar_monoids_validates() {
        let d = sign_duoidal().unwrap();
        let b = sign_scalar_bimonoid(&d).unwrap();
        let m = b.monoid_part();
        let mn = mon_tensor(&d, &m, &m).unwrap();
        assert_eq!(mn.carrier, 0);
        // (2⊗2)·γ = 4 = 1 and (2⊗2)·δ = 1: the trivial monoid on the line.
        assert_eq!(mn.mul.point.describe(), "matrix1x1[1]");
        assert_eq!(mn.unit.point.describe(), "matrix1x1[1]");
        let checks = monoid_law_checks(d.hor(), &mn, "monoid-").unwrap();
        assert!(checks.iter().all(|c| c.ok));

        let c = b.comonoid_part();
        let ce = comon_tensor(&d, &c, &c).unwrap();
        let checks = comonoid_law_checks(d.vert(), &ce, "comonoid-").unwrap();
        assert!(checks.iter().all(|c| c.ok));
    }

    #[test]
    fn identity_functor_passes_both_modes() {
        let d = sign_duoidal().unwrap();
        let n = d.object_count();
        let cat = d.horizontal.cat.clone();
        let func = VFunctor::identity(cat.clone());
        let mut hor_tensor = Vec::new();
        for a in 0..n {
            for b in 0..n {
                hor_tensor.push(cat.id_mor(d.horizontal.tensor_of(a, b)));
            }
        }
        let data = StructuredFunctorData {
            functor: func,
            hor_tensor: hor_tensor.clone(),
            hor_unit: cat.id_mor(d.horizontal.unit),
            vert_tensor: hor_tensor,
            vert_unit: cat.id_mor(d.vertical.unit),
        };
        let r = validate_structured_functor(&d, &d, &data, FunctorMode::Duoidal).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());
        let r2 = validate_structured_functor(&d, &d, &data, FunctorMode::Bimonoidal).unwrap();
        assert!(r2.passed(), "{:?}", r2.failing_ids());
    }

    #[test]
    fn pointed_functor_agrees_with_bimonoid_validation() {
        let dst = sign_duoidal().unwrap();
        let base = BaseKind::finvect(3).unwrap();
        let src = unit_duoidal(base).unwrap();
        let b = sign_scalar_bimonoid(&dst).unwrap();

        let make = |bi: &Bimonoid<DuoidalStructure>| {
            let func = VFunctor::new(
                src.horizontal.cat.clone(),
                dst.horizontal.cat.clone(),
                vec![bi.carrier],
                vec![dst.horizontal.cat.ident_point(bi.carrier).clone()],
            )
            .unwrap();
            StructuredFunctorData {
                functor: func,
                hor_tensor: vec![bi.mul.clone()],
                hor_unit: bi.unit.clone(),
                vert_tensor: vec![bi.comul.clone()],
                vert_unit: bi.counit.clone(),
            }
        };

        let good = make(&b);
        let r = validate_structured_functor(&src, &dst, &good, FunctorMode::Bimonoidal).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());
        assert!(validate_bimonoid(&dst, &b).unwrap().passed());

        let mut bad_bim = b.clone();
        bad_bim.comul = scalar_endo(&dst, 0, 1).unwrap();
        bad_bim.counit = scalar_endo(&dst, 0, 1).unwrap();
        let bad = make(&bad_bim);
        let r2 = validate_structured_functor(&src, &dst, &bad, FunctorMode::Bimonoidal).unwrap();
        assert!(!r2.passed());
        assert!(!validate_bimonoid(&dst, &bad_bim).unwrap().passed());
    }

    #[test]
    fn group_homomorphism_is_a_duoidal_functor() {
        let z2 = vec![vec![0, 1], vec![1, 0]];
        let z4 = vec![
            vec![0, 1, 2, 3],
            vec![1, 2, 3, 0],
            vec![2, 3, 0, 1],
            vec![3, 0, 1, 2],
        ];
        let src = duoidal_from_group(BaseKind::FinSet, &z2, 0).unwrap();
        let dst = duoidal_from_group(BaseKind::FinSet, &z4, 0).unwrap();
        // x ↦ 2x embeds Z/2 into Z/4.
        let obj = vec![0, 2];
        let mut hom = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                hom.push(crate::base::BaseMap::from_index_map(
                    src.horizontal.cat.hom(a, b),
                    dst.horizontal.cat.hom(obj[a], obj[b]),
                    |i| i,
                ).unwrap());
            }
        }
        let func = VFunctor::new(
            src.horizontal.cat.clone(),
            dst.horizontal.cat.clone(),
            obj.clone(),
            hom,
        )
        .unwrap();
        let mut comparisons = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                comparisons.push(dst.horizontal.cat.id_mor(obj[src.horizontal.tensor_of(a, b)]));
            }
        }
        let data = StructuredFunctorData {
            functor: func,
            hor_tensor: comparisons.clone(),
            hor_unit: dst.horizontal.cat.id_mor(0),
            vert_tensor: comparisons,
            vert_unit: dst.horizontal.cat.id_mor(0),
        };
        let r = validate_structured_functor(&src, &dst, &data, FunctorMode::Duoidal).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());
    }

    #[test]
    fn unit_category_duoidal_is_fully_trivial() {
        let d = unit_duoidal(BaseKind::FinSet).unwrap();
        assert_eq!(d.object_count(), 1);
        assert!(validate_duoidal(&d).unwrap().passed());
    }
}
