//! Algebras, coalgebras, their (co)actions and the morphism predicates.

use crate::error::{Error, Result};
use crate::id;
use crate::linmap::LinMap;
use crate::report::Report;
use crate::scalar::Scalar;

fn expect_shape<T: Scalar>(what: &'static str, m: &LinMap<T>, cod: usize, dom: usize) -> Result<()> {
    if m.shape() != (cod, dom) {
        return Err(Error::shape(what, m.shape(), (cod, dom)));
    }
    Ok(())
}

/// A unit `η: 1 → A` and a multiplication `μ: A⊗A → A`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraData<T> {
    dim: usize,
    unit: LinMap<T>,
    mult: LinMap<T>,
}

impl<T: Scalar> AlgebraData<T> {
    pub fn new(unit: LinMap<T>, mult: LinMap<T>) -> Result<Self> {
        let dim = unit.cod();
        expect_shape("algebra unit", &unit, dim, 1)?;
        expect_shape("algebra multiplication", &mult, dim, dim * dim)?;
        Ok(AlgebraData { dim, unit, mult })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &LinMap<T> {
        &self.unit
    }

    pub fn mult(&self) -> &LinMap<T> {
        &self.mult
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        AlgebraData::new(id(1), id(1)).expect("ground algebra")
    }

    /// The tensor product algebra, multiplying factorwise.
    pub fn tensor(&self, other: &AlgebraData<T>) -> Self {
        let (a, b) = (self.dim, other.dim);
        let mult = comp![tens![self.mult, other.mult], tens![id(a), LinMap::flip(b, a), id(b)]];
        AlgebraData::new(tens![self.unit, other.unit], mult).expect("tensor algebra")
    }
}

/// A counit `ε: C → 1` and a comultiplication `δ: C → C⊗C`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoalgebraData<T> {
    dim: usize,
    counit: LinMap<T>,
    comult: LinMap<T>,
}

impl<T: Scalar> CoalgebraData<T> {
    pub fn new(counit: LinMap<T>, comult: LinMap<T>) -> Result<Self> {
        let dim = counit.dom();
        expect_shape("coalgebra counit", &counit, 1, dim)?;
        expect_shape("coalgebra comultiplication", &comult, dim * dim, dim)?;
        Ok(CoalgebraData { dim, counit, comult })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &LinMap<T> {
        &self.counit
    }

    pub fn comult(&self) -> &LinMap<T> {
        &self.comult
    }

    pub fn ground() -> Self {
        CoalgebraData::new(id(1), id(1)).expect("ground coalgebra")
    }

    pub fn tensor(&self, other: &CoalgebraData<T>) -> Self {
        let (a, b) = (self.dim, other.dim);
        let comult = comp![tens![id(a), LinMap::flip(a, b), id(b)], tens![self.comult, other.comult]];
        CoalgebraData::new(tens![self.counit, other.counit], comult).expect("tensor coalgebra")
    }
}

pub fn check_algebra<T: Scalar>(a: &AlgebraData<T>) -> Report {
    let n = a.dim;
    let mut r = Report::new("algebra");
    r.eq(
        "associativity",
        &comp![a.mult, tens![a.mult, id(n)]],
        &comp![a.mult, tens![id(n), a.mult]],
    );
    r.eq("left unit", &comp![a.mult, tens![a.unit, id(n)]], &id(n));
    r.eq("right unit", &comp![a.mult, tens![id(n), a.unit]], &id(n));
    r
}

pub fn check_coalgebra<T: Scalar>(c: &CoalgebraData<T>) -> Report {
    let n = c.dim;
    let mut r = Report::new("coalgebra");
    r.eq(
        "coassociativity",
        &comp![tens![c.comult, id(n)], c.comult],
        &comp![tens![id(n), c.comult], c.comult],
    );
    r.eq("left counit", &comp![tens![c.counit, id(n)], c.comult], &id(n));
    r.eq("right counit", &comp![tens![id(n), c.counit], c.comult], &id(n));
    r
}

pub fn check_algebra_morphism<T: Scalar>(
    f: &LinMap<T>,
    src: &AlgebraData<T>,
    dst: &AlgebraData<T>,
) -> Result<Report> {
    expect_shape("algebra morphism", f, dst.dim, src.dim)?;
    let mut r = Report::new("algebra morphism");
    r.eq("preserves unit", &comp![f, src.unit], &dst.unit);
    r.eq(
        "preserves multiplication",
        &comp![f, src.mult],
        &comp![dst.mult, tens![f, f]],
    );
    Ok(r)
}

pub fn check_coalgebra_morphism<T: Scalar>(
    f: &LinMap<T>,
    src: &CoalgebraData<T>,
    dst: &CoalgebraData<T>,
) -> Result<Report> {
    expect_shape("coalgebra morphism", f, dst.dim, src.dim)?;
    let mut r = Report::new("coalgebra morphism");
    r.eq("preserves counit", &comp![dst.counit, f], &src.counit);
    r.eq(
        "preserves comultiplication",
        &comp![dst.comult, f],
        &comp![tens![f, f], src.comult],
    );
    Ok(r)
}

/// `f ∧ g = μ_A ∘ (f⊗g) ∘ δ_C`.
pub fn convolution<T: Scalar>(
    f: &LinMap<T>,
    g: &LinMap<T>,
    c: &CoalgebraData<T>,
    a: &AlgebraData<T>,
) -> Result<LinMap<T>> {
    expect_shape("convolution", f, a.dim, c.dim)?;
    expect_shape("convolution", g, a.dim, c.dim)?;
    Ok(comp![a.mult, tens![f, g], c.comult])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionSide {
    LeftModule,
    RightModule,
    LeftComodule,
    RightComodule,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Over<T> {
    Algebra(AlgebraData<T>),
    Coalgebra(CoalgebraData<T>),
}

impl<T: Scalar> Over<T> {
    fn dim(&self) -> usize {
        match self {
            Over::Algebra(a) => a.dim,
            Over::Coalgebra(c) => c.dim,
        }
    }
}

/// A module or comodule structure on a space of dimension `carrier`.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionData<T> {
    carrier: usize,
    structure: LinMap<T>,
    side: ActionSide,
    over: Over<T>,
}

impl<T: Scalar> ActionData<T> {
    pub fn new(carrier: usize, structure: LinMap<T>, side: ActionSide, over: Over<T>) -> Result<Self> {
        let k = over.dim();
        let (cod, dom) = match (side, &over) {
            (ActionSide::LeftModule | ActionSide::RightModule, Over::Algebra(_)) => (carrier, k * carrier),
            (ActionSide::LeftComodule | ActionSide::RightComodule, Over::Coalgebra(_)) => (k * carrier, carrier),
            _ => {
                return Err(Error::IncompatibleActions(format!(
                    "{side:?} needs {}",
                    if matches!(side, ActionSide::LeftModule | ActionSide::RightModule) {
                        "an algebra"
                    } else {
                        "a coalgebra"
                    }
                )))
            }
        };
        expect_shape("action", &structure, cod, dom)?;
        Ok(ActionData {
            carrier,
            structure,
            side,
            over,
        })
    }

    pub fn left_module(a: &AlgebraData<T>, carrier: usize, structure: LinMap<T>) -> Result<Self> {
        Self::new(carrier, structure, ActionSide::LeftModule, Over::Algebra(a.clone()))
    }

    pub fn right_module(a: &AlgebraData<T>, carrier: usize, structure: LinMap<T>) -> Result<Self> {
        Self::new(carrier, structure, ActionSide::RightModule, Over::Algebra(a.clone()))
    }

    pub fn left_comodule(c: &CoalgebraData<T>, carrier: usize, structure: LinMap<T>) -> Result<Self> {
        Self::new(carrier, structure, ActionSide::LeftComodule, Over::Coalgebra(c.clone()))
    }

    pub fn right_comodule(c: &CoalgebraData<T>, carrier: usize, structure: LinMap<T>) -> Result<Self> {
        Self::new(carrier, structure, ActionSide::RightComodule, Over::Coalgebra(c.clone()))
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn structure(&self) -> &LinMap<T> {
        &self.structure
    }

    pub fn side(&self) -> ActionSide {
        self.side
    }
}

/// The (co)associativity and (co)unit laws of an action.
pub fn check_action<T: Scalar>(act: &ActionData<T>) -> Report {
    let m = act.carrier;
    let s = &act.structure;
    let mut r = Report::new(format!("{:?}", act.side));
    match (&act.over, act.side) {
        (Over::Algebra(a), ActionSide::LeftModule) => {
            let k = a.dim;
            r.eq(
                "action associativity",
                &comp![s, tens![a.mult, id(m)]],
                &comp![s, tens![id(k), s]],
            );
            r.eq("action unit", &comp![s, tens![a.unit, id(m)]], &id(m));
        }
        (Over::Algebra(a), ActionSide::RightModule) => {
            let k = a.dim;
            r.eq(
                "action associativity",
                &comp![s, tens![s, id(k)]],
                &comp![s, tens![id(m), a.mult]],
            );
            r.eq("action unit", &comp![s, tens![id(m), a.unit]], &id(m));
        }
        (Over::Coalgebra(c), ActionSide::LeftComodule) => {
            let k = c.dim;
            r.eq(
                "coaction coassociativity",
                &comp![tens![c.comult, id(m)], s],
                &comp![tens![id(k), s], s],
            );
            r.eq("coaction counit", &comp![tens![c.counit, id(m)], s], &id(m));
        }
        (Over::Coalgebra(c), ActionSide::RightComodule) => {
            let k = c.dim;
            r.eq(
                "coaction coassociativity",
                &comp![tens![s, id(k)], s],
                &comp![tens![id(m), c.comult], s],
            );
            r.eq("coaction counit", &comp![tens![id(m), c.counit], s], &id(m));
        }
        _ => unreachable!("validated in ActionData::new"),
    }
    r
}

/// Whether `f: src → dst` commutes with the two actions.
pub fn check_linearity<T: Scalar>(f: &LinMap<T>, src: &ActionData<T>, dst: &ActionData<T>) -> Result<Report> {
    if src.side != dst.side || src.over != dst.over {
        return Err(Error::IncompatibleActions(format!(
            "{:?} against {:?}",
            src.side, dst.side
        )));
    }
    expect_shape("linearity", f, dst.carrier, src.carrier)?;
    let k = src.over.dim();
    let (lhs, rhs) = match src.side {
        ActionSide::LeftModule => (comp![f, src.structure], comp![dst.structure, tens![id(k), f]]),
        ActionSide::RightModule => (comp![f, src.structure], comp![dst.structure, tens![f, id(k)]]),
        ActionSide::LeftComodule => (comp![dst.structure, f], comp![tens![id(k), f], src.structure]),
        ActionSide::RightComodule => (comp![dst.structure, f], comp![tens![f, id(k)], src.structure]),
    };
    let name = match src.side {
        ActionSide::LeftModule | ActionSide::RightModule => "linearity",
        ActionSide::LeftComodule | ActionSide::RightComodule => "colinearity",
    };
    let mut r = Report::new(name);
    r.eq(name, &lhs, &rhs);
    Ok(r)
}
