//! Graded Hopf algebras spanned by isomorphism classes of set systems.
//!
//! Degree `n` has one basis vector per class on `n` elements satisfying the
//! flavor's predicate, listed in increasing [`CanonicalCode`] order. The
//! product is the disjoint union and the coproduct sums restrictions to a
//! subset tensored with restrictions to its complement. Four-term flavors
//! are quotients of their plain flavor by the span of all four-term
//! combinations; everything is computed with exact rationals.

use alloc::collections::{btree_map, BTreeMap};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::is_binary;
use crate::moves::{four_term, BinaryCheck};
use crate::qlinalg::Rref;
use crate::setsystem::{CanonicalCode, SetSystem};
use crate::Rational;

/// Largest degree enumerated exhaustively.
pub const MAX_ENUM_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    /// All proper set systems.
    S,
    /// Binary delta-matroids.
    B,
    /// Even binary delta-matroids.
    Be,
    /// Binary delta-matroids with `∅` feasible.
    K,
    /// Even binary delta-matroids with `∅` feasible.
    Ke,
    FB,
    FBe,
    FK,
    FKe,
}

impl Flavor {
    pub const ALL: [Flavor; 9] = [
        Flavor::S,
        Flavor::B,
        Flavor::Be,
        Flavor::K,
        Flavor::Ke,
        Flavor::FB,
        Flavor::FBe,
        Flavor::FK,
        Flavor::FKe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::S => "S",
            Flavor::B => "B",
            Flavor::Be => "Be",
            Flavor::K => "K",
            Flavor::Ke => "Ke",
            Flavor::FB => "FB",
            Flavor::FBe => "FBe",
            Flavor::FK => "FK",
            Flavor::FKe => "FKe",
        }
    }

    pub fn from_name(name: &str) -> Option<Flavor> {
        Flavor::ALL.into_iter().find(|f| f.name() == name)
    }

    /// The flavor whose basis this one uses.
    pub fn plain(self) -> Flavor {
        match self {
            Flavor::FB => Flavor::B,
            Flavor::FBe => Flavor::Be,
            Flavor::FK => Flavor::K,
            Flavor::FKe => Flavor::Ke,
            other => other,
        }
    }

    pub fn is_four_term(self) -> bool {
        self != self.plain()
    }

    /// Whether `s` belongs to the basis of this flavor (up to isomorphism).
    pub fn admits(self, s: &SetSystem) -> bool {
        let (even, empty) = match self.plain() {
            Flavor::S => return true,
            Flavor::B => (false, false),
            Flavor::Be => (true, false),
            Flavor::K => (false, true),
            _ => (true, true),
        };
        (!empty || s.contains_empty()) && (!even || s.is_even()) && is_binary(s)
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub flavor: Flavor,
    pub degree: usize,
    pub codes: Vec<CanonicalCode>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn index_of(&self, code: &CanonicalCode) -> Option<usize> {
        self.codes.binary_search(code).ok()
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_ENUM_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            max: MAX_ENUM_DEGREE,
        });
    }
    Ok(())
}

/// All classes on `n` elements admitted by `flavor`, found by filtering every
/// nonempty family of subsets.
pub fn enumerate_basis(flavor: Flavor, n: usize) -> Result<GradedBasis> {
    check_degree(n)?;
    let flavor = flavor.plain();
    let mut codes = Vec::new();
    for family in 1..1u64 << (1u32 << n) {
        let s = SetSystem::from_family_bits(n, &[family])?;
        if flavor.admits(&s) {
            codes.push(s.canonical_form()?);
        }
    }
    codes.sort_unstable();
    codes.dedup();
    Ok(GradedBasis {
        flavor,
        degree: n,
        codes,
    })
}

/// Sparse combination of classes of one degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedVector {
    terms: BTreeMap<CanonicalCode, Rational>,
}

impl GradedVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis_vector(code: CanonicalCode) -> Self {
        let mut v = Self::new();
        v.add_term(code, Rational::one());
        v
    }

    pub fn add_term(&mut self, code: CanonicalCode, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(code.clone())
            .or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&code);
        }
    }

    pub fn coefficient(&self, code: &CanonicalCode) -> Rational {
        self.terms.get(code).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalCode, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the terms; `None` for the zero vector.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(CanonicalCode::n)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::new();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Dense coordinates over `basis`; errors if a term lies outside it.
    pub fn coordinates(&self, basis: &GradedBasis) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); basis.len()];
        for (code, c) in &self.terms {
            let i = basis.index_of(code).ok_or(Error::OutsideFlavor {
                flavor: basis.flavor.name(),
                degree: code.n(),
            })?;
            out[i] = c.clone();
        }
        Ok(out)
    }
}

impl core::ops::AddAssign<&GradedVector> for GradedVector {
    fn add_assign(&mut self, rhs: &GradedVector) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

/// Sparse element of the tensor square.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorVector {
    terms: BTreeMap<(CanonicalCode, CanonicalCode), Rational>,
}

impl TensorVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: CanonicalCode, right: CanonicalCode, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, left: &CanonicalCode, right: &CanonicalCode) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(CanonicalCode, CanonicalCode), &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The same element with tensor factors swapped.
    pub fn swapped(&self) -> Self {
        let mut out = Self::new();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Drops the terms `1 ⊗ x` and `x ⊗ 1`.
    pub fn reduced(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((l, r), _)| l.n() > 0 && r.n() > 0)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

/// Sum over all subsets `U` of `[D|U] ⊗ [D|E∖U]`.
pub fn coproduct(s: &SetSystem, check: BinaryCheck) -> Result<TensorVector> {
    check.check(s)?;
    let full = s.full_mask();
    let mut out = TensorVector::new();
    for u in 0..=full {
        if u & !full != 0 {
            continue;
        }
        let left = s.restrict(u)?.canonical_form()?;
        let right = s.restrict(full & !u)?.canonical_form()?;
        out.add_term(left, right, Rational::one());
    }
    Ok(out)
}

/// Class of the disjoint union.
pub fn product_code(a: &CanonicalCode, b: &CanonicalCode) -> Result<CanonicalCode> {
    a.to_set_system()
        .product(&b.to_set_system())?
        .canonical_form()
}

/// Dimensions of a four-term quotient in one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientDims {
    pub quotient_dim: usize,
    pub relation_rank: usize,
}

/// One row of the primitive-dimension table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub flavor: Flavor,
    pub computed: [usize; 2],
    pub expected: [usize; 2],
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Report {
    pub rows: Vec<TableRow>,
}

/// Published primitive dimensions in degrees 1 and 2.
pub const TABLE1_EXPECTED: [(Flavor, [usize; 2]); 8] = [
    (Flavor::B, [3, 5]),
    (Flavor::Be, [2, 2]),
    (Flavor::FB, [3, 4]),
    (Flavor::FBe, [2, 2]),
    (Flavor::K, [2, 3]),
    (Flavor::Ke, [1, 1]),
    (Flavor::FK, [2, 3]),
    (Flavor::FKe, [1, 1]),
];

impl Table1Report {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(TableRow::matches)
    }
}

impl fmt::Display for Table1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "flavor  n=1  n=2  expected  status")?;
        for row in &self.rows {
            writeln!(
                f,
                "{:<6}  {:>3}  {:>3}  {:>3},{:<3}   {}",
                row.flavor.name(),
                row.computed[0],
                row.computed[1],
                row.expected[0],
                row.expected[1],
                if row.matches() { "PASS" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Quotient of one degree: the relation row space and, for every basis
/// vector, its class in quotient coordinates.
#[derive(Debug, Clone)]
struct Quotient {
    relations: Rref,
    classes: Vec<Vec<Rational>>,
}

impl Quotient {
    fn dim(&self) -> usize {
        self.relations.cols() - self.relations.rank()
    }
}

/// Caching engine for bases, coproducts, and quotients up to
/// [`MAX_ENUM_DEGREE`].
#[derive(Debug, Default)]
pub struct HopfEngine {
    bases: BTreeMap<(Flavor, usize), GradedBasis>,
    coproducts: BTreeMap<CanonicalCode, TensorVector>,
    quotients: BTreeMap<(Flavor, usize), Quotient>,
}

impl HopfEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Basis of the plain flavor underlying `flavor`.
    pub fn basis(&mut self, flavor: Flavor, n: usize) -> Result<&GradedBasis> {
        check_degree(n)?;
        let key = (flavor.plain(), n);
        if let btree_map::Entry::Vacant(slot) = self.bases.entry(key) {
            slot.insert(enumerate_basis(key.0, n)?);
        }
        Ok(&self.bases[&key])
    }

    pub fn basis_dim(&mut self, flavor: Flavor, n: usize) -> Result<usize> {
        Ok(self.basis(flavor, n)?.len())
    }

    fn require_binary(flavor: Flavor) -> Result<()> {
        if flavor.plain() == Flavor::S {
            return Err(Error::WrongFlavor(
                "the coalgebra structure needs a binary flavor",
            ));
        }
        Ok(())
    }

    pub fn coproduct(&mut self, code: &CanonicalCode) -> Result<&TensorVector> {
        if !self.coproducts.contains_key(code) {
            let t = coproduct(&code.to_set_system(), BinaryCheck::Enforce)?;
            self.coproducts.insert(code.clone(), t);
        }
        Ok(&self.coproducts[code])
    }

    /// Four-term combinations of every basis element and ordered pair, as
    /// coordinate rows over the basis.
    pub fn relation_rows(&mut self, flavor: Flavor, n: usize) -> Result<Vec<Vec<Rational>>> {
        Self::require_binary(flavor)?;
        let basis = self.basis(flavor, n)?.clone();
        let mut rows = Vec::new();
        for code in &basis.codes {
            let s = code.to_set_system();
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    let combo = four_term(&s, a, b, BinaryCheck::Enforce)?;
                    let mut v = GradedVector::new();
                    for (sign, t) in &combo.terms {
                        v.add_term(t.canonical_form()?, Rational::from_integer((*sign).into()));
                    }
                    if !v.is_zero() {
                        rows.push(v.coordinates(&basis)?);
                    }
                }
            }
        }
        Ok(rows)
    }

    fn quotient(&mut self, flavor: Flavor, n: usize) -> Result<&Quotient> {
        Self::require_binary(flavor)?;
        let key = (flavor, n);
        if !self.quotients.contains_key(&key) {
            let dim = self.basis_dim(flavor, n)?;
            let rows = if flavor.is_four_term() {
                self.relation_rows(flavor, n)?
            } else {
                Vec::new()
            };
            let relations = Rref::new(rows, dim);
            let classes = (0..dim)
                .map(|i| {
                    let mut e = vec![Rational::zero(); dim];
                    e[i] = Rational::one();
                    relations.quotient_coords(&e)
                })
                .collect();
            self.quotients.insert(key, Quotient { relations, classes });
        }
        Ok(&self.quotients[&key])
    }

    pub fn four_term_quotient(&mut self, flavor: Flavor, n: usize) -> Result<QuotientDims> {
        if !flavor.is_four_term() {
            return Err(Error::WrongFlavor("four-term quotients need an F flavor"));
        }
        let q = self.quotient(flavor, n)?;
        Ok(QuotientDims {
            quotient_dim: q.dim(),
            relation_rank: q.relations.rank(),
        })
    }

    /// Reduced coproduct of every degree-`n` basis vector, in coordinates of
    /// `⊕_{0<k<n} Q_k ⊗ Q_{n-k}` where `Q` is the (possibly trivial) quotient.
    fn reduced_coproduct_images(&mut self, flavor: Flavor, n: usize) -> Result<Vec<Vec<Rational>>> {
        let mut offsets = Vec::with_capacity(n);
        let mut width = 0;
        for k in 1..n {
            offsets.push(width);
            width += self.quotient(flavor, k)?.dim() * self.quotient(flavor, n - k)?.dim();
        }
        let codes = self.basis(flavor, n)?.codes.clone();
        let mut images = Vec::with_capacity(codes.len());
        for code in &codes {
            let reduced = self.coproduct(code)?.reduced();
            let mut img = vec![Rational::zero(); width];
            for ((l, r), c) in reduced.terms() {
                let (k, m) = (l.n(), r.n());
                let li = self
                    .basis(flavor, k)?
                    .index_of(l)
                    .ok_or(Error::OutsideFlavor {
                        flavor: flavor.name(),
                        degree: k,
                    })?;
                let ri = self
                    .basis(flavor, m)?
                    .index_of(r)
                    .ok_or(Error::OutsideFlavor {
                        flavor: flavor.name(),
                        degree: m,
                    })?;
                let lq = self.quotient(flavor, k)?.classes[li].clone();
                let rq = &self.quotient(flavor, m)?.classes[ri];
                let base = offsets[k - 1];
                for (i, x) in lq.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in rq.iter().enumerate() {
                        if !y.is_zero() {
                            img[base + i * rq.len() + j] += c * x * y;
                        }
                    }
                }
            }
            images.push(img);
        }
        Ok(images)
    }

    /// Primitive dimension in degree `n`. For four-term flavors the relation
    /// span is first checked to be a coideal in this degree.
    pub fn primitive_dim(&mut self, flavor: Flavor, n: usize) -> Result<usize> {
        Self::require_binary(flavor)?;
        if n == 0 {
            return Ok(0);
        }
        let images = self.reduced_coproduct_images(flavor, n)?;
        let q = self.quotient(flavor, n)?;
        let width = images.first().map_or(0, Vec::len);
        let combine = |coeffs: &[Rational]| {
            let mut out = vec![Rational::zero(); width];
            for (c, img) in coeffs.iter().zip(&images) {
                if c.is_zero() {
                    continue;
                }
                for (o, x) in out.iter_mut().zip(img) {
                    *o += c * x;
                }
            }
            out
        };
        for rel in q.relations.rows() {
            if combine(rel).iter().any(|x| !x.is_zero()) {
                return Err(Error::CoidealViolation { degree: n });
            }
        }
        let reps: Vec<Vec<Rational>> = q
            .relations
            .free_columns()
            .into_iter()
            .map(|c| images[c].clone())
            .collect();
        let dim = q.dim();
        Ok(dim - Rref::new(reps, width).rank())
    }

    /// Same as [`Self::primitive_dim`] but only for four-term flavors.
    pub fn quotient_primitive_dim(&mut self, flavor: Flavor, n: usize) -> Result<usize> {
        if !flavor.is_four_term() {
            return Err(Error::WrongFlavor("quotient dimensions need an F flavor"));
        }
        self.primitive_dim(flavor, n)
    }

    /// Dimension of the span of products of positive-degree elements.
    pub fn decomposable_dim(&mut self, flavor: Flavor, n: usize) -> Result<usize> {
        check_degree(n)?;
        let mut rows = Vec::new();
        for k in 1..n {
            let left = self.basis(flavor, k)?.codes.clone();
            let right = self.basis(flavor, n - k)?.codes.clone();
            for x in &left {
                for y in &right {
                    let xy = product_code(x, y)?;
                    let i = self
                        .basis(flavor, n)?
                        .index_of(&xy)
                        .ok_or(Error::OutsideFlavor {
                            flavor: flavor.name(),
                            degree: n,
                        })?;
                    if flavor.plain() == Flavor::S {
                        let mut e = vec![Rational::zero(); self.basis_dim(flavor, n)?];
                        e[i] = Rational::one();
                        rows.push(e);
                    } else {
                        rows.push(self.quotient(flavor, n)?.classes[i].clone());
                    }
                }
            }
        }
        let width = if flavor.plain() == Flavor::S {
            self.basis_dim(flavor, n)?
        } else {
            self.quotient(flavor, n)?.dim()
        };
        Ok(Rref::new(rows, width).rank())
    }

    /// Dimension of the degree-`n` piece: the basis size, or the quotient
    /// dimension for four-term flavors.
    pub fn dim(&mut self, flavor: Flavor, n: usize) -> Result<usize> {
        if flavor.is_four_term() {
            Ok(self.four_term_quotient(flavor, n)?.quotient_dim)
        } else {
            self.basis_dim(flavor, n)
        }
    }

    pub fn table1_report(&mut self) -> Result<Table1Report> {
        let mut rows = Vec::with_capacity(TABLE1_EXPECTED.len());
        for (flavor, expected) in TABLE1_EXPECTED {
            let computed = [
                self.primitive_dim(flavor, 1)?,
                self.primitive_dim(flavor, 2)?,
            ];
            rows.push(TableRow {
                flavor,
                computed,
                expected,
            });
        }
        Ok(Table1Report { rows })
    }
}
