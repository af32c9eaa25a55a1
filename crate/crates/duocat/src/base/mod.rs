//! Exact enrichment backends: finite sets with cartesian product, and
//! finite-dimensional vector spaces over a prime field with tensor product.
//!
//! Everything downstream — enriched categories, monoidal structures,
//! interchange validators, coend computations — is phrased in terms of the
//! [`BaseValue`]/[`BaseMap`] vocabulary defined here, so the two backends can
//! share every algorithm.
//!
//! Conventions fixed once and relied on everywhere:
//! - Finite-set elements are the indices `0..size`; vector-space bases are the
//!   standard basis `e_0..e_{dim-1}`.
//! - Tensor products order pairs lexicographically / row-major: the pair
//!   `(i, j)` with `i` from `A` and `j` from `B` sits at index `i*|B| + j`.
//!   Associators and unitors are therefore identity *tables*, but they are
//!   still materialized and threaded through every formula; the symmetry is a
//!   genuine non-identity permutation.
//! - Internal homs: for sets, the function `g: Y → Z` is the little-endian
//!   base-`|Z|` numeral with digit `i` equal to `g(i)`; for vector spaces,
//!   the matrix unit `y_j ↦ z_i` is the basis vector at index `i*dim(Y)+j`.
//! - Quotient classes are labeled by their smallest member, in ascending
//!   order, so constructed projections are canonical and reproducible.

pub mod matrix;

use crate::error::{check_size, checked_product, Error, Result};
use matrix::{is_prime, Matrix};

/// The enrichment base: plain finite sets, or vector spaces over F_p.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum BaseKind {
    FinSet,
    FinVect(u32),
}

impl BaseKind {
    pub fn finvect(p: u32) -> Result<BaseKind> {
        if !is_prime(p) || p > 257 {
            return Err(Error::BadModulus(p));
        }
        Ok(BaseKind::FinVect(p))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            BaseKind::FinSet => Ok(()),
            BaseKind::FinVect(p) => {
                BaseKind::finvect(*p)?;
                Ok(())
            }
        }
    }

    fn expect_same(&self, other: &BaseKind) -> Result<()> {
        if self != other {
            return Err(Error::KindMismatch(format!("{self:?} vs {other:?}")));
        }
        Ok(())
    }
}

/// An object of the base: a finite set of `size` elements, or a vector space
/// of dimension `size`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct BaseValue {
    pub kind: BaseKind,
    pub size: usize,
}

impl BaseValue {
    pub fn new(kind: BaseKind, size: usize) -> Result<BaseValue> {
        kind.validate()?;
        check_size(size)?;
        Ok(BaseValue { kind, size })
    }

    /// The monoidal unit: a one-element set / a one-dimensional space.
    pub fn unit(kind: BaseKind) -> BaseValue {
        BaseValue { kind, size: 1 }
    }

    pub fn tensor(&self, other: &BaseValue) -> Result<BaseValue> {
        self.kind.expect_same(&other.kind)?;
        let size = checked_product(&[self.size, other.size])?;
        BaseValue::new(self.kind, size)
    }

    /// Number of generalized elements (points `unit → self`): `size` for a
    /// set, `p^size` for a vector space.
    pub fn point_count(&self) -> Result<usize> {
        match self.kind {
            BaseKind::FinSet => Ok(self.size),
            BaseKind::FinVect(p) => {
                let mut n: usize = 1;
                for _ in 0..self.size {
                    n = n
                        .checked_mul(p as usize)
                        .ok_or_else(|| Error::Shape("point count overflow".into()))?;
                    check_size(n)?;
                }
                Ok(n)
            }
        }
    }

    /// All points `unit → self`, in a fixed order: element order for sets;
    /// for vector spaces, all coordinate vectors ordered as little-endian
    /// base-`p` numerals (point `k` has coordinate `i` equal to digit `i`).
    pub fn points(&self) -> Result<Vec<BaseMap>> {
        let n = self.point_count()?;
        check_size(n)?;
        (0..n).map(|k| self.point(k)).collect()
    }

    /// The `k`-th point in the order of [`BaseValue::points`].
    pub fn point(&self, k: usize) -> Result<BaseMap> {
        let unit = BaseValue::unit(self.kind);
        match self.kind {
            BaseKind::FinSet => {
                if k >= self.size {
                    return Err(Error::Shape(format!("point index {k} out of range {}", self.size)));
                }
                BaseMap::from_table(unit, *self, vec![k])
            }
            BaseKind::FinVect(p) => {
                let mut rem = k;
                let mut col = vec![0u32; self.size];
                for c in col.iter_mut() {
                    *c = (rem % p as usize) as u32;
                    rem /= p as usize;
                }
                if rem != 0 {
                    return Err(Error::Shape(format!("point index {k} out of range")));
                }
                let m = Matrix::from_vec(p, self.size, 1, col)?;
                Ok(BaseMap { source: unit, target: *self, data: MapData::Matrix(m) })
            }
        }
    }

    /// Index of a point in the order of [`BaseValue::points`]; inverse of
    /// [`BaseValue::point`].
    pub fn point_index(&self, point: &BaseMap) -> Result<usize> {
        if point.target != *self || point.source.size != 1 {
            return Err(Error::Shape("not a point of this value".into()));
        }
        match &point.data {
            MapData::Table(t) => Ok(t[0]),
            MapData::Matrix(m) => {
                let p = m.modulus() as usize;
                let mut idx = 0usize;
                for i in (0..self.size).rev() {
                    idx = idx * p + m.get(i, 0) as usize;
                }
                Ok(idx)
            }
        }
    }

    /// The generating family: every element for a set, the standard basis for
    /// a vector space. A map out of `self` is uniquely determined by its
    /// values on these, via [`BaseMap::from_generator_images`].
    pub fn generators(&self) -> Vec<usize> {
        (0..self.size).collect()
    }

    /// The `g`-th generator as a point (for sets this coincides with
    /// [`BaseValue::point`]; for vector spaces it is the basis vector `e_g`).
    pub fn generator_point(&self, g: usize) -> Result<BaseMap> {
        match self.kind {
            BaseKind::FinSet => self.point(g),
            BaseKind::FinVect(p) => {
                if g >= self.size {
                    return Err(Error::Shape(format!("generator {g} out of range {}", self.size)));
                }
                let mut col = vec![0u32; self.size];
                col[g] = 1;
                let m = Matrix::from_vec(p, self.size, 1, col)?;
                Ok(BaseMap { source: BaseValue::unit(self.kind), target: *self, data: MapData::Matrix(m) })
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum MapData {
    /// Total function table: entry `i` is the image of element `i`.
    Table(Vec<usize>),
    /// Matrix acting on column vectors: `rows = target.size`, `cols = source.size`.
    Matrix(Matrix),
}

/// A morphism of the base category between two [`BaseValue`]s.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct BaseMap {
    pub source: BaseValue,
    pub target: BaseValue,
    data: MapData,
}

impl BaseMap {
    pub fn from_table(source: BaseValue, target: BaseValue, table: Vec<usize>) -> Result<BaseMap> {
        if source.kind != BaseKind::FinSet || target.kind != BaseKind::FinSet {
            return Err(Error::KindMismatch("function tables require the finite-set base".into()));
        }
        if table.len() != source.size {
            return Err(Error::Shape(format!(
                "table length {} does not match source size {}",
                table.len(),
                source.size
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= target.size) {
            return Err(Error::Shape(format!("table entry {bad} out of range {}", target.size)));
        }
        Ok(BaseMap { source, target, data: MapData::Table(table) })
    }

    pub fn from_matrix(source: BaseValue, target: BaseValue, m: Matrix) -> Result<BaseMap> {
        let p = match (source.kind, target.kind) {
            (BaseKind::FinVect(p), BaseKind::FinVect(q)) if p == q => p,
            _ => return Err(Error::KindMismatch("matrix maps require a common prime field".into())),
        };
        if m.modulus() != p || m.rows != target.size || m.cols != source.size {
            return Err(Error::Shape(format!(
                "matrix {}x{} mod {} does not match map {} -> {} mod {}",
                m.rows,
                m.cols,
                m.modulus(),
                source.size,
                target.size,
                p
            )));
        }
        Ok(BaseMap { source, target, data: MapData::Matrix(m) })
    }

    /// Builds the map sending generator `g` of the source to generator
    /// `f(g)` of the target: the function itself for sets, the basis
    /// assignment extended linearly for vector spaces.
    pub fn from_index_map(
        source: BaseValue,
        target: BaseValue,
        f: impl Fn(usize) -> usize,
    ) -> Result<BaseMap> {
        source.kind.expect_same(&target.kind)?;
        match source.kind {
            BaseKind::FinSet => {
                let table = (0..source.size).map(&f).collect();
                BaseMap::from_table(source, target, table)
            }
            BaseKind::FinVect(p) => {
                let mut m = Matrix::zero(p, target.size, source.size);
                for j in 0..source.size {
                    let i = f(j);
                    if i >= target.size {
                        return Err(Error::Shape(format!("index {i} out of range {}", target.size)));
                    }
                    m.set(i, j, 1);
                }
                BaseMap::from_matrix(source, target, m)
            }
        }
    }

    /// Builds the map sending generator `g` of the source to the point
    /// `images[g]` of the target.
    pub fn from_generator_images(
        source: BaseValue,
        target: BaseValue,
        images: &[BaseMap],
    ) -> Result<BaseMap> {
        source.kind.expect_same(&target.kind)?;
        if images.len() != source.size {
            return Err(Error::Shape(format!(
                "{} generator images supplied for source of size {}",
                images.len(),
                source.size
            )));
        }
        match source.kind {
            BaseKind::FinSet => {
                let mut table = Vec::with_capacity(source.size);
                for img in images {
                    table.push(target.point_index(img)?);
                }
                BaseMap::from_table(source, target, table)
            }
            BaseKind::FinVect(p) => {
                let mut m = Matrix::zero(p, target.size, source.size);
                for (j, img) in images.iter().enumerate() {
                    if img.target != target || img.source.size != 1 {
                        return Err(Error::Shape("generator image is not a point of the target".into()));
                    }
                    let MapData::Matrix(col) = &img.data else {
                        return Err(Error::KindMismatch("expected a vector point".into()));
                    };
                    for i in 0..target.size {
                        m.set(i, j, col.get(i, 0));
                    }
                }
                BaseMap::from_matrix(source, target, m)
            }
        }
    }

    pub fn identity(v: BaseValue) -> BaseMap {
        match v.kind {
            BaseKind::FinSet => BaseMap {
                source: v,
                target: v,
                data: MapData::Table((0..v.size).collect()),
            },
            BaseKind::FinVect(p) => BaseMap {
                source: v,
                target: v,
                data: MapData::Matrix(Matrix::identity(p, v.size)),
            },
        }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && *self == BaseMap::identity(self.source)
    }

    pub fn data(&self) -> &MapData {
        &self.data
    }

    /// Applies a map of sets to an element index.
    pub fn apply(&self, i: usize) -> Result<usize> {
        match &self.data {
            MapData::Table(t) => t
                .get(i)
                .copied()
                .ok_or_else(|| Error::Shape(format!("element {i} out of range"))),
            MapData::Matrix(_) => {
                Err(Error::KindMismatch("element application requires a set map".into()))
            }
        }
    }

    /// The matrix of a linear map.
    pub fn matrix(&self) -> Result<&Matrix> {
        match &self.data {
            MapData::Matrix(m) => Ok(m),
            MapData::Table(_) => {
                Err(Error::KindMismatch("matrix view requires a linear map".into()))
            }
        }
    }

    /// Compact rendering for counterexample details.
    pub fn describe(&self) -> String {
        match &self.data {
            MapData::Table(t) => format!("table{t:?}"),
            MapData::Matrix(m) => format!("matrix{:?}x{:?}{:?}", m.rows, m.cols, m.entries()),
        }
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &BaseMap) -> Result<BaseMap> {
        if other.target != self.source {
            return Err(Error::Shape(format!(
                "cannot compose: inner target {:?} != outer source {:?}",
                other.target, self.source
            )));
        }
        let data = match (&self.data, &other.data) {
            (MapData::Table(f), MapData::Table(g)) => {
                MapData::Table(g.iter().map(|&x| f[x]).collect())
            }
            (MapData::Matrix(f), MapData::Matrix(g)) => MapData::Matrix(f.mul(g)?),
            _ => return Err(Error::KindMismatch("mixed map representations".into())),
        };
        Ok(BaseMap { source: other.source, target: self.target, data })
    }

    pub fn tensor(&self, other: &BaseMap) -> Result<BaseMap> {
        self.source.kind.expect_same(&other.source.kind)?;
        let source = self.source.tensor(&other.source)?;
        let target = self.target.tensor(&other.target)?;
        let data = match (&self.data, &other.data) {
            (MapData::Table(f), MapData::Table(g)) => {
                let dn = other.target.size;
                let mut t = Vec::with_capacity(source.size);
                for &fi in f {
                    for &gj in g {
                        t.push(fi * dn + gj);
                    }
                }
                MapData::Table(t)
            }
            (MapData::Matrix(f), MapData::Matrix(g)) => MapData::Matrix(f.kron(g)),
            _ => return Err(Error::KindMismatch("mixed map representations".into())),
        };
        Ok(BaseMap { source, target, data })
    }

    /// Two-sided inverse, if one exists.
    pub fn invert(&self) -> Option<BaseMap> {
        match &self.data {
            MapData::Table(t) => {
                if self.source.size != self.target.size {
                    return None;
                }
                let mut inv = vec![usize::MAX; self.target.size];
                for (i, &v) in t.iter().enumerate() {
                    if inv[v] != usize::MAX {
                        return None;
                    }
                    inv[v] = i;
                }
                if inv.contains(&usize::MAX) {
                    return None;
                }
                Some(BaseMap { source: self.target, target: self.source, data: MapData::Table(inv) })
            }
            MapData::Matrix(m) => {
                let inv = m.inverse()?;
                Some(BaseMap { source: self.target, target: self.source, data: MapData::Matrix(inv) })
            }
        }
    }

    pub fn is_surjective(&self) -> bool {
        match &self.data {
            MapData::Table(t) => {
                let mut hit = vec![false; self.target.size];
                for &v in t {
                    hit[v] = true;
                }
                hit.into_iter().all(|h| h)
            }
            MapData::Matrix(m) => m.rank() == self.target.size,
        }
    }

    /// A right inverse (section), canonical: smallest preimage per element for
    /// sets; the pseudo-solution with free variables zero for vector spaces.
    pub fn section(&self) -> Result<BaseMap> {
        if !self.is_surjective() {
            return Err(Error::NotInvertible("section requested for a non-surjective map".into()));
        }
        match &self.data {
            MapData::Table(t) => {
                let mut s = vec![usize::MAX; self.target.size];
                for (i, &v) in t.iter().enumerate() {
                    if s[v] == usize::MAX {
                        s[v] = i;
                    }
                }
                Ok(BaseMap { source: self.target, target: self.source, data: MapData::Table(s) })
            }
            MapData::Matrix(m) => {
                let p = m.modulus();
                let sol = m
                    .solve(&Matrix::identity(p, self.target.size))
                    .ok_or_else(|| Error::NotInvertible("no section found".into()))?;
                Ok(BaseMap { source: self.target, target: self.source, data: MapData::Matrix(sol) })
            }
        }
    }

    /// Difference `self - other` of parallel vector-space maps (used by
    /// kernel/cokernel computations); undefined for set maps.
    fn difference(&self, other: &BaseMap) -> Result<Matrix> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("maps are not parallel".into()));
        }
        match (&self.data, &other.data) {
            (MapData::Matrix(a), MapData::Matrix(b)) => a.sub(b),
            _ => Err(Error::KindMismatch("difference requires vector-space maps".into())),
        }
    }
}

/// Composes a path of maps listed in application order:
/// `chain([f, g, h]) = h ∘ g ∘ f`, matching the left-to-right reading of a
/// path `A →f B →g C →h D` in a diagram.
pub fn chain(maps: &[&BaseMap]) -> Result<BaseMap> {
    let Some((first, rest)) = maps.split_first() else {
        return Err(Error::Shape("empty composition chain".into()));
    };
    let mut acc = (*first).clone();
    for m in rest {
        acc = m.compose(&acc)?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Symmetric monoidal coherence maps
// ---------------------------------------------------------------------------

/// The symmetry `A ⊗ B → B ⊗ A`, swapping pair coordinates.
pub fn symmetry(a: &BaseValue, b: &BaseValue) -> Result<BaseMap> {
    let src = a.tensor(b)?;
    let tgt = b.tensor(a)?;
    let bs = b.size;
    let as_ = a.size;
    BaseMap::from_index_map(src, tgt, move |idx| {
        let i = idx / bs;
        let j = idx % bs;
        j * as_ + i
    })
}

/// The associator `(A ⊗ B) ⊗ C → A ⊗ (B ⊗ C)`. With lexicographic pair
/// indexing both sides flatten identically, so the underlying table is the
/// identity permutation — but callers still compose with it explicitly.
pub fn associator(a: &BaseValue, b: &BaseValue, c: &BaseValue) -> Result<BaseMap> {
    let src = a.tensor(b)?.tensor(c)?;
    let tgt = a.tensor(&b.tensor(c)?)?;
    BaseMap::from_index_map(src, tgt, |i| i)
}

/// Left unitor `I ⊗ A → A`.
pub fn left_unitor(a: &BaseValue) -> Result<BaseMap> {
    let unit = BaseValue::unit(a.kind);
    let src = unit.tensor(a)?;
    BaseMap::from_index_map(src, *a, |i| i)
}

/// Right unitor `A ⊗ I → A`.
pub fn right_unitor(a: &BaseValue) -> Result<BaseMap> {
    let unit = BaseValue::unit(a.kind);
    let src = a.tensor(&unit)?;
    BaseMap::from_index_map(src, *a, |i| i)
}

/// The middle-interchange map `(A⊗B)⊗(C⊗D) → (A⊗C)⊗(B⊗D)`, built from
/// associators and the symmetry of the middle two factors.
pub fn middle_interchange(
    a: &BaseValue,
    b: &BaseValue,
    c: &BaseValue,
    d: &BaseValue,
) -> Result<BaseMap> {
    let id_a = BaseMap::identity(*a);
    let id_d = BaseMap::identity(*d);
    // B⊗(C⊗D) → C⊗(B⊗D), swapping the first two factors.
    let swap_inner = chain(&[
        &associator(b, c, d)?.invert().expect("associators are invertible"),
        &symmetry(b, c)?.tensor(&id_d)?,
        &associator(c, b, d)?,
    ])?;
    chain(&[
        &associator(a, b, &c.tensor(d)?)?,
        &id_a.tensor(&swap_inner)?,
        &associator(a, c, &b.tensor(d)?)?.invert().expect("associators are invertible"),
    ])
}

/// Pairs two points `I → X`, `I → Y` into a point `I → X⊗Y`.
pub fn pair_points(p: &BaseMap, q: &BaseMap) -> Result<BaseMap> {
    let unit = BaseValue::unit(p.source.kind);
    if p.source != unit || q.source != unit {
        return Err(Error::Shape("pair_points expects points (maps out of the unit)".into()));
    }
    let lu = left_unitor(&unit)?;
    p.tensor(q)?.compose(&lu.invert().expect("unitors are invertible"))
}

// ---------------------------------------------------------------------------
// Coproducts
// ---------------------------------------------------------------------------

/// Finite coproduct (disjoint union / direct sum) with its injections.
pub struct Coproduct {
    pub value: BaseValue,
    pub injections: Vec<BaseMap>,
    offsets: Vec<usize>,
}

pub fn coproduct(kind: BaseKind, parts: &[BaseValue]) -> Result<Coproduct> {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut total = 0usize;
    for v in parts {
        kind.expect_same(&v.kind)?;
        offsets.push(total);
        total = total
            .checked_add(v.size)
            .ok_or_else(|| Error::Shape("coproduct size overflow".into()))?;
    }
    let value = BaseValue::new(kind, total)?;
    let injections = parts
        .iter()
        .zip(&offsets)
        .map(|(v, &off)| BaseMap::from_index_map(*v, value, move |i| off + i))
        .collect::<Result<Vec<_>>>()?;
    Ok(Coproduct { value, injections, offsets })
}

impl Coproduct {
    /// The unique map out of the coproduct restricting to `legs[i]` along the
    /// `i`-th injection.
    pub fn copair(&self, legs: &[BaseMap]) -> Result<BaseMap> {
        if legs.len() != self.injections.len() {
            return Err(Error::Shape("wrong number of coproduct legs".into()));
        }
        let Some(first) = legs.first() else {
            // Empty coproduct: the unique map out of the initial object.
            return BaseMap::from_index_map(self.value, self.value, |i| i);
        };
        let target = first.target;
        let mut images = Vec::with_capacity(self.value.size);
        for (leg, inj) in legs.iter().zip(&self.injections) {
            if leg.target != target || leg.source != inj.source {
                return Err(Error::Shape("coproduct leg has wrong endpoints".into()));
            }
            for g in 0..leg.source.size {
                let pt = leg.compose(&leg.source.generator_point(g)?)?;
                images.push(pt);
            }
        }
        BaseMap::from_generator_images(self.value, target, &images)
    }

    pub fn offset(&self, part: usize) -> usize {
        self.offsets[part]
    }
}

// ---------------------------------------------------------------------------
// Coequalizers
// ---------------------------------------------------------------------------

/// A computed coequalizer: the quotient object with its projection, able to
/// factor any cocone map through itself.
pub struct Coequalizer {
    pub value: BaseValue,
    pub proj: BaseMap,
    f: BaseMap,
    g: BaseMap,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as representative for canonical labels.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

pub fn coequalizer(f: &BaseMap, g: &BaseMap) -> Result<Coequalizer> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::Shape("coequalizer needs a parallel pair".into()));
    }
    match (&f.data, &g.data) {
        (MapData::Table(ft), MapData::Table(gt)) => {
            let n = f.target.size;
            let mut uf = UnionFind::new(n);
            for (a, b) in ft.iter().zip(gt) {
                uf.union(*a, *b);
            }
            // Classes ordered by smallest member.
            let mut class_of_root = std::collections::BTreeMap::new();
            for x in 0..n {
                let r = uf.find(x);
                let next = class_of_root.len();
                class_of_root.entry(r).or_insert(next);
            }
            let value = BaseValue::new(BaseKind::FinSet, class_of_root.len())?;
            let table: Vec<usize> = (0..n).map(|x| class_of_root[&uf.find(x)]).collect();
            let proj = BaseMap::from_table(f.target, value, table)?;
            Ok(Coequalizer { value, proj, f: f.clone(), g: g.clone() })
        }
        (MapData::Matrix(_), MapData::Matrix(_)) => {
            let d = f.difference(g)?;
            // Quotient by the column space of d. Row-reduce the transpose to
            // get a canonical basis of that span; coordinates at the non-pivot
            // ("free") positions survive to the quotient after reduction.
            let (r, pivots) = d.transpose().rref();
            let p = d.modulus();
            let dim_y = f.target.size;
            let free: Vec<usize> = (0..dim_y).filter(|c| !pivots.contains(c)).collect();
            let value = BaseValue::new(f.target.kind, free.len())?;
            let mut q = Matrix::zero(p, free.len(), dim_y);
            for (row, &fc) in free.iter().enumerate() {
                q.set(row, fc, 1);
                // Basis vector e_pc reduces by subtracting the RREF row with
                // pivot pc; what remains on the free coordinates is -row|free.
                for (i, &pc) in pivots.iter().enumerate() {
                    let v = r.get(i, fc);
                    if v != 0 {
                        q.set(row, pc, (p - v) % p);
                    }
                }
            }
            let proj = BaseMap::from_matrix(f.target, value, q)?;
            Ok(Coequalizer { value, proj, f: f.clone(), g: g.clone() })
        }
        _ => Err(Error::KindMismatch("mixed map representations".into())),
    }
}

impl Coequalizer {
    /// Factors `h` (with `h∘f = h∘g`) uniquely through the projection,
    /// erroring if `h` does not coequalize the pair.
    pub fn factorize(&self, h: &BaseMap) -> Result<BaseMap> {
        if h.source != self.proj.source {
            return Err(Error::Shape("cocone map has wrong source".into()));
        }
        if h.compose(&self.f)? != h.compose(&self.g)? {
            return Err(Error::Precondition("map does not coequalize the pair".into()));
        }
        let section = self.proj.section()?;
        let u = h.compose(&section)?;
        if u.compose(&self.proj)? != *h {
            return Err(Error::Precondition("factorization check failed".into()));
        }
        Ok(u)
    }
}

// ---------------------------------------------------------------------------
// Equalizers
// ---------------------------------------------------------------------------

/// A computed equalizer: the subobject with its inclusion, able to factor any
/// cone map through itself.
pub struct Equalizer {
    pub value: BaseValue,
    pub incl: BaseMap,
    f: BaseMap,
    g: BaseMap,
}

pub fn equalizer(f: &BaseMap, g: &BaseMap) -> Result<Equalizer> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::Shape("equalizer needs a parallel pair".into()));
    }
    match (&f.data, &g.data) {
        (MapData::Table(ft), MapData::Table(gt)) => {
            let members: Vec<usize> = (0..f.source.size).filter(|&x| ft[x] == gt[x]).collect();
            let value = BaseValue::new(BaseKind::FinSet, members.len())?;
            let incl = BaseMap::from_table(value, f.source, members)?;
            Ok(Equalizer { value, incl, f: f.clone(), g: g.clone() })
        }
        (MapData::Matrix(_), MapData::Matrix(_)) => {
            let d = f.difference(g)?;
            let k = d.kernel_basis();
            let value = BaseValue::new(f.source.kind, k.cols)?;
            let incl = BaseMap::from_matrix(value, f.source, k)?;
            Ok(Equalizer { value, incl, f: f.clone(), g: g.clone() })
        }
        _ => Err(Error::KindMismatch("mixed map representations".into())),
    }
}

impl Equalizer {
    /// Factors `h` (with `f∘h = g∘h`) uniquely through the inclusion,
    /// erroring if `h` does not equalize the pair.
    pub fn factorize(&self, h: &BaseMap) -> Result<BaseMap> {
        if h.target != self.incl.target {
            return Err(Error::Shape("cone map has wrong target".into()));
        }
        if self.f.compose(h)? != self.g.compose(h)? {
            return Err(Error::Precondition("map does not equalize the pair".into()));
        }
        match (&self.incl.data, &h.data) {
            (MapData::Table(inc), MapData::Table(ht)) => {
                let mut pos = std::collections::HashMap::new();
                for (i, &m) in inc.iter().enumerate() {
                    pos.insert(m, i);
                }
                let mut table = Vec::with_capacity(h.source.size);
                for &v in ht {
                    let Some(&i) = pos.get(&v) else {
                        return Err(Error::Precondition(
                            "cone map lands outside the equalizer".into(),
                        ));
                    };
                    table.push(i);
                }
                BaseMap::from_table(h.source, self.value, table)
            }
            (MapData::Matrix(k), MapData::Matrix(hm)) => {
                let u = k
                    .solve(hm)
                    .ok_or_else(|| Error::Precondition("cone map lands outside the kernel".into()))?;
                let cand = BaseMap::from_matrix(h.source, self.value, u)?;
                if self.incl.compose(&cand)? != *h {
                    return Err(Error::Precondition("factorization check failed".into()));
                }
                Ok(cand)
            }
            _ => Err(Error::KindMismatch("mixed map representations".into())),
        }
    }
}

// ---------------------------------------------------------------------------
// Internal homs
// ---------------------------------------------------------------------------

/// The internal hom `[Y, Z]` with its evaluation map `[Y,Z] ⊗ Y → Z` and the
/// currying bijection.
pub struct InternalHom {
    pub value: BaseValue,
    pub y: BaseValue,
    pub z: BaseValue,
    pub ev: BaseMap,
}

pub fn internal_hom(y: &BaseValue, z: &BaseValue) -> Result<InternalHom> {
    y.kind.expect_same(&z.kind)?;
    match y.kind {
        BaseKind::FinSet => {
            let mut size: usize = 1;
            for _ in 0..y.size {
                size = size
                    .checked_mul(z.size)
                    .ok_or_else(|| Error::Shape("internal hom size overflow".into()))?;
                check_size(size)?;
            }
            let value = BaseValue::new(BaseKind::FinSet, size)?;
            let src = value.tensor(y)?;
            // Function g is the little-endian base-|Z| numeral with digit i
            // equal to g(i); evaluation extracts digit i.
            let zs = z.size;
            let ys = y.size;
            let mut table = Vec::with_capacity(src.size);
            for gidx in 0..size {
                for i in 0..ys {
                    let digit = (gidx / zs.pow(i as u32)) % zs;
                    table.push(digit);
                }
            }
            let ev = BaseMap::from_table(src, *z, table)?;
            Ok(InternalHom { value, y: *y, z: *z, ev })
        }
        BaseKind::FinVect(p) => {
            let dim = checked_product(&[y.size, z.size])?;
            let value = BaseValue::new(y.kind, dim)?;
            let src = value.tensor(y)?;
            // Basis vector at index i*dim(Y)+j is the matrix unit y_j ↦ z_i;
            // evaluating it on y_k gives δ_{jk} · z_i.
            let mut ev_m = Matrix::zero(p, z.size, src.size);
            for i in 0..z.size {
                for j in 0..y.size {
                    let hom_idx = i * y.size + j;
                    let col = hom_idx * y.size + j;
                    ev_m.set(i, col, 1);
                }
            }
            let ev = BaseMap::from_matrix(src, *z, ev_m)?;
            Ok(InternalHom { value, y: *y, z: *z, ev })
        }
    }
}

impl InternalHom {
    /// Transposes `f: X ⊗ Y → Z` to `curry(f): X → [Y,Z]`.
    pub fn curry(&self, x: &BaseValue, f: &BaseMap) -> Result<BaseMap> {
        let expected_src = x.tensor(&self.y)?;
        if f.source != expected_src || f.target != self.z {
            return Err(Error::Shape("curry argument has wrong endpoints".into()));
        }
        match &f.data {
            MapData::Table(t) => {
                let zs = self.z.size;
                let ys = self.y.size;
                let mut table = Vec::with_capacity(x.size);
                for xi in 0..x.size {
                    let mut gidx = 0usize;
                    for i in (0..ys).rev() {
                        gidx = gidx * zs + t[xi * ys + i];
                    }
                    table.push(gidx);
                }
                BaseMap::from_table(*x, self.value, table)
            }
            MapData::Matrix(m) => {
                let p = m.modulus();
                let ys = self.y.size;
                let mut out = Matrix::zero(p, self.value.size, x.size);
                for xi in 0..x.size {
                    for i in 0..self.z.size {
                        for j in 0..ys {
                            out.set(i * ys + j, xi, m.get(i, xi * ys + j));
                        }
                    }
                }
                BaseMap::from_matrix(*x, self.value, out)
            }
        }
    }

    /// Inverse transpose: `uncurry(g) = ev ∘ (g ⊗ id_Y)`.
    pub fn uncurry(&self, g: &BaseMap) -> Result<BaseMap> {
        if g.target != self.value {
            return Err(Error::Shape("uncurry argument does not land in the hom object".into()));
        }
        self.ev.compose(&g.tensor(&BaseMap::identity(self.y))?)
    }

    /// Converts a point `unit → [Y,Z]` into the bare map `Y → Z` it names.
    pub fn point_to_map(&self, point: &BaseMap) -> Result<BaseMap> {
        let named = self.uncurry(point)?;
        let lu = left_unitor(&self.y)?;
        let inv = lu.invert().expect("unitors are invertible");
        named.compose(&inv)
    }

    /// Converts a bare map `Y → Z` into its naming point `unit → [Y,Z]`.
    pub fn map_to_point(&self, f: &BaseMap) -> Result<BaseMap> {
        if f.source != self.y || f.target != self.z {
            return Err(Error::Shape("map has wrong endpoints for this hom object".into()));
        }
        let lu = left_unitor(&self.y)?;
        let unit = BaseValue::unit(self.y.kind);
        self.curry(&unit, &f.compose(&lu)?)
    }
}

/// The functorial action `[u, w]: [Y,Z] → [Y',Z']` sending `g ↦ w ∘ g ∘ u`,
/// for `u: Y' → Y` and `w: Z → Z'`.
pub fn hom_action(
    hom_src: &InternalHom,
    hom_tgt: &InternalHom,
    u: &BaseMap,
    w: &BaseMap,
) -> Result<BaseMap> {
    if u.target != hom_src.y || u.source != hom_tgt.y {
        return Err(Error::Shape("contravariant leg has wrong endpoints".into()));
    }
    if w.source != hom_src.z || w.target != hom_tgt.z {
        return Err(Error::Shape("covariant leg has wrong endpoints".into()));
    }
    let mut images = Vec::with_capacity(hom_src.value.size);
    for g in 0..hom_src.value.size {
        let gp = hom_src.value.generator_point(g)?;
        let gm = hom_src.point_to_map(&gp)?;
        let moved = w.compose(&gm)?.compose(u)?;
        images.push(hom_tgt.map_to_point(&moved)?);
    }
    BaseMap::from_generator_images(hom_src.value, hom_tgt.value, &images)
}

/// The canonical monoidality map `[A,B] ⊗ [C,D] → [A⊗C, B⊗D]` sending the
/// pair `(g, h)` to `g ⊗ h`.
pub fn hom_tensor_box(
    hom_ab: &InternalHom,
    hom_cd: &InternalHom,
    hom_out: &InternalHom,
) -> Result<BaseMap> {
    if hom_out.y != hom_ab.y.tensor(&hom_cd.y)? || hom_out.z != hom_ab.z.tensor(&hom_cd.z)? {
        return Err(Error::Shape("output hom has wrong endpoints".into()));
    }
    let src = hom_ab.value.tensor(&hom_cd.value)?;
    let mut images = Vec::with_capacity(src.size);
    for g in 0..hom_ab.value.size {
        let gm = hom_ab.point_to_map(&hom_ab.value.generator_point(g)?)?;
        for h in 0..hom_cd.value.size {
            let hm = hom_cd.point_to_map(&hom_cd.value.generator_point(h)?)?;
            images.push(hom_out.map_to_point(&gm.tensor(&hm)?)?);
        }
    }
    BaseMap::from_generator_images(src, hom_out.value, &images)
}
