//! The base category as a duoidal carrier: both tensors are the base tensor,
//! the interchange is the middle symmetry, and hom objects are structural
//! values rather than tabulated hom sets. Carriers here scale to anything the
//! size budget allows, which is where set-level and linear-algebra examples
//! of bimonoids and convolution live.

use crate::base::{
    internal_hom, left_unitor, middle_interchange, BaseKind, BaseMap, BaseValue, InternalHom,
};
use crate::base::matrix::Matrix;
use crate::duoidal::{Bimonoid, DuoidalOps};
use crate::error::{Error, Result};
use crate::monoidal::{BaseOps, ComonoidData, MonoidData, VComonoid, VMonoid};
use crate::par::{scan, unrank};

/// The base category with ∗ = ∘ = ⊗ and the interchange
/// `(A⊗B)⊗(C⊗D) → (A⊗C)⊗(B⊗D)` swapping the middle factors.
#[derive(Clone, Copy, Debug)]
pub struct ConcreteDuoidal {
    ops: BaseOps,
}

impl ConcreteDuoidal {
    pub fn new(kind: BaseKind) -> ConcreteDuoidal {
        ConcreteDuoidal { ops: BaseOps(kind) }
    }

    pub fn kind(&self) -> BaseKind {
        self.ops.0
    }
}

impl DuoidalOps for ConcreteDuoidal {
    type Obj = BaseValue;
    type Arr = BaseMap;
    type Hor = BaseOps;
    type Vert = BaseOps;

    fn hor(&self) -> &BaseOps {
        &self.ops
    }
    fn vert(&self) -> &BaseOps {
        &self.ops
    }
    fn gamma_arr(
        &self,
        a: &BaseValue,
        b: &BaseValue,
        c: &BaseValue,
        d: &BaseValue,
    ) -> Result<BaseMap> {
        middle_interchange(a, b, c, d)
    }
    fn mu_arr(&self) -> Result<BaseMap> {
        left_unitor(&BaseValue::unit(self.kind()))
    }
    fn tau_arr(&self) -> Result<BaseMap> {
        Ok(BaseMap::identity(BaseValue::unit(self.kind())))
    }
    fn delta_arr(&self) -> Result<BaseMap> {
        let lu = left_unitor(&BaseValue::unit(self.kind()))?;
        lu.invert().ok_or_else(|| Error::NotInvertible("unitor at the unit".into()))
    }
}

// ---------------------------------------------------------------------------
// Monoids and comonoids on concrete carriers
// ---------------------------------------------------------------------------

/// A finite monoid presented by its multiplication table, as a monoid object
/// in finite sets. Entry `table[i][j]` is the product `i·j`.
pub fn set_monoid(table: &[Vec<usize>], unit_elem: usize) -> Result<VMonoid> {
    let n = table.len();
    let carrier = BaseValue::new(BaseKind::FinSet, n)?;
    let mut flat = Vec::with_capacity(n * n);
    for row in table {
        if row.len() != n {
            return Err(Error::Shape("multiplication table must be square".into()));
        }
        flat.extend_from_slice(row);
    }
    let mul = BaseMap::from_table(carrier.tensor(&carrier)?, carrier, flat)?;
    let unit = carrier.point(unit_elem)?;
    Ok(MonoidData { carrier, mul, unit })
}

/// The canonical comonoid on a finite set: the diagonal and the unique map
/// to the point. In a cartesian base this is the only comonoid structure.
pub fn set_comonoid(carrier: BaseValue) -> Result<VComonoid> {
    if carrier.kind != BaseKind::FinSet {
        return Err(Error::KindMismatch("diagonal comonoid requires a set carrier".into()));
    }
    let comul =
        BaseMap::from_index_map(carrier, carrier.tensor(&carrier)?, |i| i * carrier.size + i)?;
    let counit = BaseMap::from_table(carrier, BaseValue::unit(carrier.kind), vec![0; carrier.size])?;
    Ok(ComonoidData { carrier, comul, counit })
}

/// Every monoid in finite sets extends to a bimonoid for the cartesian
/// duoidal structure, using the diagonal comonoid.
pub fn cartesian_bimonoid(m: &VMonoid) -> Result<Bimonoid<ConcreteDuoidal>> {
    let c = set_comonoid(m.carrier)?;
    Ok(Bimonoid {
        carrier: m.carrier,
        mul: m.mul.clone(),
        unit: m.unit.clone(),
        comul: c.comul,
        counit: c.counit,
    })
}

/// The group algebra of a finite group over F_p with its group-like
/// coalgebra structure: basis vectors are group elements, Δ(g) = g⊗g,
/// ε(g) = 1.
pub fn group_algebra_bimonoid(
    p: u32,
    table: &[Vec<usize>],
    unit_elem: usize,
) -> Result<Bimonoid<ConcreteDuoidal>> {
    let n = table.len();
    let carrier = BaseValue::new(BaseKind::finvect(p)?, n)?;
    let square = carrier.tensor(&carrier)?;
    let unit_v = BaseValue::unit(carrier.kind);

    let mut mul_m = Matrix::zero(p, n, n * n);
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Shape("multiplication table must be square".into()));
        }
        for (j, &k) in row.iter().enumerate() {
            if k >= n {
                return Err(Error::Shape("table entry out of range".into()));
            }
            mul_m.set(k, i * n + j, 1);
        }
    }
    let mul = BaseMap::from_matrix(square, carrier, mul_m)?;

    let mut unit_m = Matrix::zero(p, n, 1);
    unit_m.set(unit_elem, 0, 1);
    let unit = BaseMap::from_matrix(unit_v, carrier, unit_m)?;

    let mut comul_m = Matrix::zero(p, n * n, n);
    for i in 0..n {
        comul_m.set(i * n + i, i, 1);
    }
    let comul = BaseMap::from_matrix(carrier, square, comul_m)?;

    let mut counit_m = Matrix::zero(p, 1, n);
    for j in 0..n {
        counit_m.set(0, j, 1);
    }
    let counit = BaseMap::from_matrix(carrier, unit_v, counit_m)?;

    Ok(Bimonoid { carrier, mul, unit, comul, counit })
}

// ---------------------------------------------------------------------------
// Convolution on internal homs
// ---------------------------------------------------------------------------

/// The convolution monoid on the internal hom from a comonoid to a monoid:
/// multiplication splits the argument with the comultiplication, applies both
/// stored maps through the middle interchange, and multiplies the results;
/// the unit is the constant map through the counit and unit.
pub fn concrete_convolution_monoid(
    d: &ConcreteDuoidal,
    c: &VComonoid,
    a: &VMonoid,
) -> Result<(InternalHom, VMonoid)> {
    let ih = internal_hom(&c.carrier, &a.carrier)?;
    let h = ih.value;
    let hh = h.tensor(&h)?;

    let split = BaseMap::identity(hh).tensor(&c.comul)?;
    let regroup = d.gamma_arr(&h, &h, &c.carrier, &c.carrier)?;
    let evaluate = ih.ev.tensor(&ih.ev)?;
    let body = a.mul.compose(&evaluate.compose(&regroup.compose(&split)?)?)?;
    let mul = ih.curry(&hh, &body)?;

    let unit_v = BaseValue::unit(h.kind);
    let constant = a.unit.compose(&c.counit.compose(&left_unitor(&c.carrier)?)?)?;
    let unit = ih.curry(&unit_v, &constant)?;

    Ok((ih, MonoidData { carrier: h, mul, unit }))
}

// ---------------------------------------------------------------------------
// Linearization of set-level structures
// ---------------------------------------------------------------------------

/// Sends a finite set to the F_p vector space on its elements.
pub fn linearize_value(p: u32, v: &BaseValue) -> Result<BaseValue> {
    if v.kind != BaseKind::FinSet {
        return Err(Error::KindMismatch("linearization starts from a set".into()));
    }
    BaseValue::new(BaseKind::finvect(p)?, v.size)
}

/// Sends a map of finite sets to the linear map perm-matrix-style: the basis
/// vector at `j` goes to the basis vector at `f(j)`. This is strong monoidal
/// for the lexicographic pairing on both sides.
pub fn linearize_map(p: u32, f: &BaseMap) -> Result<BaseMap> {
    let src = linearize_value(p, &f.source)?;
    let tgt = linearize_value(p, &f.target)?;
    let mut m = Matrix::zero(p, tgt.size, src.size);
    for j in 0..src.size {
        m.set(f.apply(j)?, j, 1);
    }
    BaseMap::from_matrix(src, tgt, m)
}

/// Linearizes a set-level bimonoid into the corresponding linear bimonoid
/// over F_p by extending all four structure maps linearly.
pub fn linearize_bimonoid(
    p: u32,
    b: &Bimonoid<ConcreteDuoidal>,
) -> Result<Bimonoid<ConcreteDuoidal>> {
    Ok(Bimonoid {
        carrier: linearize_value(p, &b.carrier)?,
        mul: linearize_map(p, &b.mul)?,
        unit: linearize_map(p, &b.unit)?,
        comul: linearize_map(p, &b.comul)?,
        counit: linearize_map(p, &b.counit)?,
    })
}

// ---------------------------------------------------------------------------
// Enumeration of small monoids
// ---------------------------------------------------------------------------

/// Enumerates every monoid structure on the set `{0, …, n-1}` as a
/// multiplication table with its unit element, without identifying
/// isomorphic copies. The unit's row and column are forced, so only the
/// remaining (n-1)² entries are searched.
pub fn enumerate_set_monoids(n: usize) -> Result<Vec<(Vec<Vec<usize>>, usize)>> {
    if n == 0 || n > 4 {
        return Err(Error::Precondition(
            "monoid enumeration is supported for 1 to 4 elements".into(),
        ));
    }
    let mut found = Vec::new();
    let free = n - 1;
    let cells = free * free;
    let total = n.pow(cells as u32);
    let dims = vec![n; cells];
    for e in 0..n {
        let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
        let mut tables = scan(total, |idx| {
            let fill = unrank(idx, &dims);
            let mut t = vec![vec![0usize; n]; n];
            for (x, v) in t[e].iter_mut().enumerate() {
                *v = x;
            }
            for (x, row) in t.iter_mut().enumerate() {
                row[e] = x;
            }
            for (k, &v) in fill.iter().enumerate() {
                t[others[k / free]][others[k % free]] = v;
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if t[t[x][y]][z] != t[x][t[y][z]] {
                            return None;
                        }
                    }
                }
            }
            Some(t)
        });
        found.extend(tables.drain(..).map(|t| (t, e)));
    }
    Ok(found)
}

/// Whether a monoid table describes a group: every element has a two-sided
/// inverse.
pub fn table_is_group(table: &[Vec<usize>], unit_elem: usize) -> bool {
    let n = table.len();
    (0..n).all(|x| (0..n).any(|y| table[x][y] == unit_elem && table[y][x] == unit_elem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::symmetry;
    use crate::duoidal::validate_bimonoid;
    use crate::monoidal::validate_vmonoid;

    fn z2_table() -> Vec<Vec<usize>> {
        vec![vec![0, 1], vec![1, 0]]
    }

    #[test]
    fn cartesian_bimonoids_validate() {
        let d = ConcreteDuoidal::new(BaseKind::FinSet);
        let z2 = cartesian_bimonoid(&set_monoid(&z2_table(), 0).unwrap()).unwrap();
        let r = validate_bimonoid(&d, &z2).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());

        // The absorbing monoid (min with top element 1) is not a group but
        // is still a perfectly good cartesian bimonoid.
        let absorbing = vec![vec![0, 0], vec![0, 1]];
        let m = set_monoid(&absorbing, 1).unwrap();
        let b = cartesian_bimonoid(&m).unwrap();
        assert!(validate_bimonoid(&d, &b).unwrap().passed());
        assert!(!table_is_group(&absorbing, 1));
        assert!(table_is_group(&z2_table(), 0));
    }

    #[test]
    fn broken_diagonal_fails_counit_laws() {
        let d = ConcreteDuoidal::new(BaseKind::FinSet);
        let mut b = cartesian_bimonoid(&set_monoid(&z2_table(), 0).unwrap()).unwrap();
        // Pair every element with the constant 0 instead of with itself.
        b.comul = BaseMap::from_index_map(b.carrier, b.carrier.tensor(&b.carrier).unwrap(), |i| {
            i * b.carrier.size
        })
        .unwrap();
        let r = validate_bimonoid(&d, &b).unwrap();
        assert!(!r.passed());
        assert!(!r.check("comonoid-counit-laws").unwrap().ok);
        // Coassociativity alone cannot see the corruption.
        assert!(r.check("comonoid-coassociativity").unwrap().ok);
    }

    #[test]
    fn group_algebra_is_a_bimonoid() {
        let d = ConcreteDuoidal::new(BaseKind::finvect(2).unwrap());
        let b = group_algebra_bimonoid(2, &z2_table(), 0).unwrap();
        let r = validate_bimonoid(&d, &b).unwrap();
        assert!(r.passed(), "{:?}", r.failing_ids());

        // Killing the counit keeps (8) and half of (9) but breaks the counit
        // law and the unit compatibility (10).
        let mut bad = b.clone();
        bad.counit = BaseMap::from_matrix(
            b.carrier,
            BaseValue::unit(b.carrier.kind),
            Matrix::zero(2, 1, 2),
        )
        .unwrap();
        let r2 = validate_bimonoid(&d, &bad).unwrap();
        assert!(!r2.passed());
        assert!(!r2.check("comonoid-counit-laws").unwrap().ok);
        assert!(!r2.check("bimonoid-counit-of-unit").unwrap().ok);
        assert!(r2.check("bimonoid-interchange").unwrap().ok);
        assert!(r2.check("bimonoid-counit-respects-mul").unwrap().ok);
    }

    #[test]
    fn set_convolution_is_the_pointwise_product() {
        let d = ConcreteDuoidal::new(BaseKind::FinSet);
        let c = set_comonoid(BaseValue::new(BaseKind::FinSet, 3).unwrap()).unwrap();
        let a = set_monoid(&z2_table(), 0).unwrap();
        let (ih, conv) = concrete_convolution_monoid(&d, &c, &a).unwrap();
        assert_eq!(conv.carrier.size, 8);
        assert!(validate_vmonoid(BaseKind::FinSet, &conv).unwrap().passed());

        // Independent oracle: multiply functions value by value.
        let hsize = conv.carrier.size;
        let mut expected = Vec::with_capacity(hsize * hsize);
        for i in 0..hsize {
            for j in 0..hsize {
                let f = ih.point_to_map(&conv.carrier.point(i).unwrap()).unwrap();
                let g = ih.point_to_map(&conv.carrier.point(j).unwrap()).unwrap();
                let mut table = Vec::new();
                for x in 0..c.carrier.size {
                    table.push(z2_table()[f.apply(x).unwrap()][g.apply(x).unwrap()]);
                }
                let product = BaseMap::from_table(c.carrier, a.carrier, table).unwrap();
                let point = ih.map_to_point(&product).unwrap();
                expected.push(conv.carrier.point_index(&point).unwrap());
            }
        }
        let oracle =
            BaseMap::from_table(conv.carrier.tensor(&conv.carrier).unwrap(), conv.carrier, expected)
                .unwrap();
        assert_eq!(conv.mul, oracle);

        // The unit names the constant-identity function.
        let const_unit =
            BaseMap::from_table(c.carrier, a.carrier, vec![0; c.carrier.size]).unwrap();
        assert_eq!(conv.unit, ih.map_to_point(&const_unit).unwrap());
    }

    #[test]
    fn group_algebra_convolution_matches_the_double_loop() {
        let d = ConcreteDuoidal::new(BaseKind::finvect(2).unwrap());
        let b = group_algebra_bimonoid(2, &z2_table(), 0).unwrap();
        let c = b.comonoid_part();
        let a = b.monoid_part();
        let (ih, conv) = concrete_convolution_monoid(&d, &c, &a).unwrap();
        assert_eq!(conv.carrier.size, 4);
        assert!(validate_vmonoid(d.kind(), &conv).unwrap().passed());

        // Oracle on endomorphisms f, g of the group algebra: since the
        // comultiplication is group-like, (f ∗ g)(x) = f(x)·g(x) on basis
        // vectors, with · the group-algebra product
        // (a0, a1)·(b0, b1) = (a0b0 + a1b1, a0b1 + a1b0).
        let points = conv.carrier.points().unwrap();
        for fp in &points {
            for gp in &points {
                let f = ih.point_to_map(fp).unwrap();
                let g = ih.point_to_map(gp).unwrap();
                let mut m = Matrix::zero(2, 2, 2);
                for x in 0..2 {
                    let (a0, a1) = (f.matrix().unwrap().get(0, x), f.matrix().unwrap().get(1, x));
                    let (b0, b1) = (g.matrix().unwrap().get(0, x), g.matrix().unwrap().get(1, x));
                    m.set(0, x, (a0 * b0 + a1 * b1) % 2);
                    m.set(1, x, (a0 * b1 + a1 * b0) % 2);
                }
                let product = BaseMap::from_matrix(c.carrier, a.carrier, m).unwrap();
                let actual = conv
                    .mul
                    .compose(&crate::base::pair_points(fp, gp).unwrap())
                    .unwrap();
                assert_eq!(actual, ih.map_to_point(&product).unwrap());
            }
        }

        // Hand-computed sample: the basis swap σ convolved with itself is
        // the map sending both basis vectors to the group unit.
        let swap = BaseMap::from_matrix(
            c.carrier,
            a.carrier,
            Matrix::from_vec(2, 2, 2, vec![0, 1, 1, 0]).unwrap(),
        )
        .unwrap();
        let swap_pt = ih.map_to_point(&swap).unwrap();
        let result = conv.mul.compose(&crate::base::pair_points(&swap_pt, &swap_pt).unwrap()).unwrap();
        let const_e = BaseMap::from_matrix(
            c.carrier,
            a.carrier,
            Matrix::from_vec(2, 2, 2, vec![1, 1, 0, 0]).unwrap(),
        )
        .unwrap();
        assert_eq!(result, ih.map_to_point(&const_e).unwrap());
    }

    #[test]
    fn convolution_of_commutative_structures_is_commutative() {
        // Cocommutative comonoid + commutative monoid ⇒ commutative
        // convolution, in both bases.
        let d = ConcreteDuoidal::new(BaseKind::FinSet);
        let c = set_comonoid(BaseValue::new(BaseKind::FinSet, 3).unwrap()).unwrap();
        let a = set_monoid(&z2_table(), 0).unwrap();
        let (_, conv) = concrete_convolution_monoid(&d, &c, &a).unwrap();
        let swap = symmetry(&conv.carrier, &conv.carrier).unwrap();
        assert_eq!(conv.mul.compose(&swap).unwrap(), conv.mul);

        let dv = ConcreteDuoidal::new(BaseKind::finvect(2).unwrap());
        let b = group_algebra_bimonoid(2, &z2_table(), 0).unwrap();
        let (_, convv) =
            concrete_convolution_monoid(&dv, &b.comonoid_part(), &b.monoid_part()).unwrap();
        let swapv = symmetry(&convv.carrier, &convv.carrier).unwrap();
        assert_eq!(convv.mul.compose(&swapv).unwrap(), convv.mul);
    }

    #[test]
    fn linearization_preserves_bimonoid_verdicts() {
        let ds = ConcreteDuoidal::new(BaseKind::FinSet);
        let dv = ConcreteDuoidal::new(BaseKind::finvect(3).unwrap());

        let good = cartesian_bimonoid(&set_monoid(&z2_table(), 0).unwrap()).unwrap();
        assert!(validate_bimonoid(&ds, &good).unwrap().passed());
        let lin = linearize_bimonoid(3, &good).unwrap();
        assert!(validate_bimonoid(&dv, &lin).unwrap().passed());

        // A corrupted comultiplication fails the same named check before and
        // after linearization.
        let mut bad = good.clone();
        bad.comul = BaseMap::from_index_map(
            bad.carrier,
            bad.carrier.tensor(&bad.carrier).unwrap(),
            |i| i * bad.carrier.size,
        )
        .unwrap();
        let rs = validate_bimonoid(&ds, &bad).unwrap();
        let rv = validate_bimonoid(&dv, &linearize_bimonoid(3, &bad).unwrap()).unwrap();
        assert!(!rs.passed() && !rv.passed());
        assert_eq!(rs.failing_ids(), rv.failing_ids());
    }

    #[test]
    fn monoid_enumeration_matches_known_counts() {
        assert_eq!(enumerate_set_monoids(1).unwrap().len(), 1);
        // Hand count on two elements: with either unit the single free cell
        // can take either value, and both choices are associative.
        assert_eq!(enumerate_set_monoids(2).unwrap().len(), 4);

        // Independent oracle on three elements: scan all 3^9 raw tables for
        // associativity plus a two-sided identity (units are unique, so
        // counting tables equals counting (table, unit) pairs).
        let dims = vec![3usize; 9];
        let mut oracle = 0usize;
        for idx in 0..3usize.pow(9) {
            let flat = unrank(idx, &dims);
            let t = |x: usize, y: usize| flat[x * 3 + y];
            let assoc = (0..27).all(|k| {
                let (x, y, z) = (k / 9, (k / 3) % 3, k % 3);
                t(t(x, y), z) == t(x, t(y, z))
            });
            let unital = (0..3).any(|e| (0..3).all(|x| t(e, x) == x && t(x, e) == x));
            if assoc && unital {
                oracle += 1;
            }
        }
        let enumerated = enumerate_set_monoids(3).unwrap();
        assert_eq!(enumerated.len(), oracle);
        // Every enumerated table really is a monoid with the stated unit.
        for (t, e) in &enumerated {
            let m = set_monoid(t, *e).unwrap();
            assert!(validate_vmonoid(BaseKind::FinSet, &m).unwrap().passed());
        }
        // Groups among them: on 2 elements only Z/2; on 3 only Z/3.
        let groups2: Vec<_> = enumerate_set_monoids(2)
            .unwrap()
            .into_iter()
            .filter(|(t, e)| table_is_group(t, *e))
            .collect();
        assert_eq!(groups2.len(), 2);
        let groups3 = enumerate_set_monoids(3)
            .unwrap()
            .into_iter()
            .filter(|(t, e)| table_is_group(t, *e))
            .count();
        assert_eq!(groups3, 3);
    }
}
