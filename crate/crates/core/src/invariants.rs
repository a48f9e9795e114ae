//! Invariants of binary delta-matroids: Tutte-type recursions, four-term
//! checks of functionals, the Conway weight system and convolution
//! logarithms.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hopf::{product_code, Flavor, HopfEngine};
use crate::moves::{four_term, BinaryCheck, FourTermCombination};
use crate::qlinalg::solve_affine;
use crate::setsystem::{CanonicalCode, ElementRole, SetSystem};
use crate::Rational;

/// Specialized values of the four recursion parameters: `x` and `y` weight
/// deletion and contraction of an ordinary element, `z` deletion of a loop
/// and `w` contraction of a coloop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteParams {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub w: Rational,
}

impl TutteParams {
    pub fn new(x: Rational, y: Rational, z: Rational, w: Rational) -> Self {
        Self { x, y, z, w }
    }

    pub fn ones() -> Self {
        let one = Rational::one();
        Self::new(one.clone(), one.clone(), one.clone(), one)
    }

    /// Both orders on the class `{∅, {1}, {1,2}}` agree iff this vanishes.
    pub fn two_element_obstruction(&self) -> Rational {
        &self.x * &self.x + &self.y * &self.w - &self.x * &self.z - &self.y * &self.y
    }
}

/// Which element the recursion removes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    Lowest,
    Highest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteEval {
    pub value: Rational,
    /// Whether every removal order gives the same value; `None` when not audited.
    pub order_independent: Option<bool>,
}

/// Largest ground set for which the audit tries all removal orders.
pub const MAX_AUDIT_ELEMENTS: usize = 6;

fn tutte_step<F>(s: &SetSystem, e: usize, p: &TutteParams, mut rec: F) -> Result<Rational>
where
    F: FnMut(&SetSystem) -> Result<Rational>,
{
    Ok(match s.element_role(e)? {
        ElementRole::Ordinary => &p.x * rec(&s.delete(e)?)? + &p.y * rec(&s.contract(e)?)?,
        ElementRole::Loop => &p.z * rec(&s.delete(e)?)?,
        ElementRole::Coloop => &p.w * rec(&s.contract(e)?)?,
    })
}

fn tutte_fixed(s: &SetSystem, p: &TutteParams, pivot: Pivot) -> Result<Rational> {
    if s.n() == 0 {
        return Ok(Rational::one());
    }
    let e = match pivot {
        Pivot::Lowest => 0,
        Pivot::Highest => s.n() - 1,
    };
    tutte_step(s, e, p, |t| tutte_fixed(t, p, pivot))
}

/// Every value reachable by some removal order.
pub fn tutte_values_all_orders(s: &SetSystem, p: &TutteParams) -> Result<BTreeSet<Rational>> {
    if s.n() > MAX_AUDIT_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            n: s.n(),
            bound: MAX_AUDIT_ELEMENTS,
        });
    }
    fn go(s: &SetSystem, p: &TutteParams) -> Result<BTreeSet<Rational>> {
        if s.n() == 0 {
            return Ok(BTreeSet::from([Rational::one()]));
        }
        let mut out = BTreeSet::new();
        for e in 0..s.n() {
            let combos: Vec<Rational> = match s.element_role(e)? {
                ElementRole::Ordinary => {
                    let del = go(&s.delete(e)?, p)?;
                    let con = go(&s.contract(e)?, p)?;
                    del.iter()
                        .flat_map(|d| con.iter().map(move |c| &p.x * d + &p.y * c))
                        .collect()
                }
                ElementRole::Loop => go(&s.delete(e)?, p)?.iter().map(|d| &p.z * d).collect(),
                ElementRole::Coloop => go(&s.contract(e)?, p)?.iter().map(|c| &p.w * c).collect(),
            };
            out.extend(combos);
        }
        Ok(out)
    }
    go(s, p)
}

/// Evaluates the recursion with a fixed pivot rule; with `audit` set, also
/// reports whether all removal orders agree (ground sets up to
/// [`MAX_AUDIT_ELEMENTS`]).
pub fn tutte_eval_ordered(
    s: &SetSystem,
    p: &TutteParams,
    pivot: Pivot,
    audit: bool,
) -> Result<TutteEval> {
    let value = tutte_fixed(s, p, pivot)?;
    let order_independent = if audit {
        Some(tutte_values_all_orders(s, p)?.len() == 1)
    } else {
        None
    };
    Ok(TutteEval {
        value,
        order_independent,
    })
}

/// A value table on isomorphism classes of degree `0..=max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    pub flavor: Flavor,
    pub values: BTreeMap<CanonicalCode, Rational>,
    pub multiplicative: bool,
}

impl Functional {
    /// Evaluates `value` on every basis class of `flavor` up to `max_degree`.
    pub fn tabulate<F>(
        engine: &mut HopfEngine,
        flavor: Flavor,
        max_degree: usize,
        multiplicative: bool,
        mut value: F,
    ) -> Result<Self>
    where
        F: FnMut(&SetSystem) -> Rational,
    {
        let mut values = BTreeMap::new();
        for n in 0..=max_degree {
            for code in &engine.basis(flavor, n)?.codes {
                values.insert(code.clone(), value(&code.to_set_system()));
            }
        }
        Ok(Self {
            flavor,
            values,
            multiplicative,
        })
    }

    pub fn value(&self, code: &CanonicalCode) -> Result<&Rational> {
        self.values.get(code).ok_or(Error::MissingValue)
    }

    pub fn value_of(&self, s: &SetSystem) -> Result<&Rational> {
        self.value(&s.canonical_form()?)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.values.keys().map(CanonicalCode::n).max()
    }
}

/// The affine space of functionals satisfying the recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteSolutionSpace {
    pub particular: Functional,
    /// Directions along which solutions may move, indexed like `particular`.
    pub kernel: Vec<BTreeMap<CanonicalCode, Rational>>,
}

impl TutteSolutionSpace {
    pub fn dim(&self) -> usize {
        self.kernel.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TutteSolution {
    Solved(TutteSolutionSpace),
    Infeasible,
}

/// Solves for functionals on binary classes of degree `≤ n_max` with
/// `f(unit) = 1` satisfying the recursion at every element of every class.
pub fn tutte_solve(
    engine: &mut HopfEngine,
    n_max: usize,
    p: &TutteParams,
) -> Result<TutteSolution> {
    let mut classes: Vec<CanonicalCode> = Vec::new();
    for n in 0..=n_max {
        classes.extend(engine.basis(Flavor::B, n)?.codes.iter().cloned());
    }
    let index: BTreeMap<&CanonicalCode, usize> =
        classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let unknowns = classes.len();
    let find = |s: &SetSystem| -> Result<usize> {
        let c = s.canonical_form()?;
        index.get(&c).copied().ok_or(Error::OutsideFlavor {
            flavor: "B",
            degree: c.n(),
        })
    };
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut unit_row = vec![Rational::zero(); unknowns];
    unit_row[find(&SetSystem::unit())?] = Rational::one();
    rows.push(unit_row);
    rhs.push(Rational::one());
    for (i, code) in classes.iter().enumerate() {
        let s = code.to_set_system();
        for e in 0..s.n() {
            let mut row = vec![Rational::zero(); unknowns];
            row[i] += Rational::one();
            match s.element_role(e)? {
                ElementRole::Ordinary => {
                    row[find(&s.delete(e)?)?] -= &p.x;
                    row[find(&s.contract(e)?)?] -= &p.y;
                }
                ElementRole::Loop => row[find(&s.delete(e)?)?] -= &p.z,
                ElementRole::Coloop => row[find(&s.contract(e)?)?] -= &p.w,
            }
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }
    let Some(sol) = solve_affine(&rows, &rhs, unknowns) else {
        return Ok(TutteSolution::Infeasible);
    };
    let to_map = |v: Vec<Rational>| classes.iter().cloned().zip(v).collect::<BTreeMap<_, _>>();
    Ok(TutteSolution::Solved(TutteSolutionSpace {
        particular: Functional {
            flavor: Flavor::B,
            values: to_map(sol.particular),
            multiplicative: false,
        },
        kernel: sol.kernel.into_iter().map(to_map).collect(),
    }))
}

/// A class and pair on which a functional breaks the four-term relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub system: SetSystem,
    pub a: usize,
    pub b: usize,
    pub combination: FourTermCombination,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FourTermCheck {
    Holds,
    Counterexample(Box<Counterexample>),
}

impl FourTermCheck {
    pub fn holds(&self) -> bool {
        matches!(self, FourTermCheck::Holds)
    }
}

/// Checks `f(D) − f(D'_ab) − f(D̃_ab) + f(D̃'_ab) = 0` over every basis class
/// of degree `n` (in canonical order) and every ordered pair `(a, b)`.
pub fn functional_4t_check(
    engine: &mut HopfEngine,
    f: &Functional,
    n: usize,
) -> Result<FourTermCheck> {
    let codes = engine.basis(f.flavor, n)?.codes.clone();
    for code in codes {
        let s = code.to_set_system();
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let combination = four_term(&s, a, b, BinaryCheck::Enforce)?;
                let mut value = Rational::zero();
                for (sign, t) in &combination.terms {
                    value += Rational::from_integer((*sign).into()) * f.value_of(t)?;
                }
                if !value.is_zero() {
                    return Ok(FourTermCheck::Counterexample(Box::new(Counterexample {
                        system: s,
                        a,
                        b,
                        combination,
                        value,
                    })));
                }
            }
        }
    }
    Ok(FourTermCheck::Holds)
}

/// 1 iff the whole ground set is feasible.
pub fn conway_w(s: &SetSystem) -> u8 {
    u8::from(s.contains_full())
}

pub fn conway_functional(engine: &mut HopfEngine, max_degree: usize) -> Result<Functional> {
    Functional::tabulate(engine, Flavor::B, max_degree, true, |s| {
        Rational::from_integer(conway_w(s).into())
    })
}

/// Checks `f(unit) = 1` and `f(xy) = f(x) f(y)` for all basis classes with
/// total degree up to `max_degree`.
pub fn check_multiplicative(
    engine: &mut HopfEngine,
    f: &Functional,
    max_degree: usize,
) -> Result<()> {
    let unit = SetSystem::unit().canonical_form()?;
    if !f.multiplicative || !f.value(&unit)?.is_one() {
        return Err(Error::NotMultiplicative);
    }
    for n in 2..=max_degree {
        for k in 1..=n / 2 {
            let left = engine.basis(f.flavor, k)?.codes.clone();
            let right = engine.basis(f.flavor, n - k)?.codes.clone();
            for x in &left {
                for y in &right {
                    if f.value(&product_code(x, y)?)? != &(f.value(x)? * f.value(y)?) {
                        return Err(Error::NotMultiplicative);
                    }
                }
            }
        }
    }
    Ok(())
}

/// `log f = Σ_k (−1)^(k−1) (f − ε)^{*k} / k` on every class of degree up
/// to `max_degree`, convolution taken through the coproduct.
pub fn convolution_log(
    engine: &mut HopfEngine,
    f: &Functional,
    max_degree: usize,
) -> Result<Functional> {
    check_multiplicative(engine, f, max_degree)?;
    let mut classes = Vec::new();
    for n in 0..=max_degree {
        classes.extend(engine.basis(f.flavor, n)?.codes.iter().cloned());
    }
    let g: BTreeMap<CanonicalCode, Rational> = classes
        .iter()
        .map(|c| {
            Ok((
                c.clone(),
                if c.n() == 0 {
                    Rational::zero()
                } else {
                    f.value(c)?.clone()
                },
            ))
        })
        .collect::<Result<_>>()?;
    let mut log: BTreeMap<CanonicalCode, Rational> = g.clone();
    let mut power = g.clone();
    for k in 2..=max_degree {
        let mut next = BTreeMap::new();
        for c in &classes {
            let mut acc = Rational::zero();
            for ((l, r), coeff) in engine.coproduct(c)?.terms() {
                let (pl, gr) = (&power[l], &g[r]);
                if !pl.is_zero() && !gr.is_zero() {
                    acc += coeff * pl * gr;
                }
            }
            next.insert(c.clone(), acc);
        }
        power = next;
        let scale = Rational::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, k.into());
        for (c, v) in &power {
            *log.get_mut(c).expect("same classes") += &scale * v;
        }
    }
    Ok(Functional {
        flavor: f.flavor,
        values: log,
        multiplicative: false,
    })
}
