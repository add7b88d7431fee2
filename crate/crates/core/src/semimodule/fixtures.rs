//! Small named semimodules over the group presets and the non-negative integers.

use std::sync::Arc;

use super::Semimodule;
use crate::error::{Error, Result};
use crate::monoid::FinMonoid;
use crate::presets::{self, extend_group_action};
use crate::semiring::Semiring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// `ℤ_n` over the non-negative integers.
    Cyclic { n: usize },
    /// Two-element semilattice on which every nonzero element acts as the
    /// identity, over the named preset.
    TrivialBoolean { preset: String },
    /// `ℤ_p` over the group semiring of S2, with `s` acting trivially or as `-1`.
    S2Cyclic { p: usize, twisted: bool },
    /// `ℤ_p` over the group semiring of S3, trivial or sign representation.
    S3Cyclic { p: usize, sign: bool },
    /// `(ℤ_p)²` over the group semiring of S3 with `(12) ↦ [[0,1],[1,0]]` and
    /// `(23) ↦ [[1,-1],[0,-1]]`.
    S3TwoDim { p: usize },
    /// Two-element semilattice over the `e, θ` semiring with `θ` acting as zero.
    KlHatBooleanZero,
    /// `ℤ_p` over the `e, θ` semiring, with `θ` acting as `0` or as `2`.
    KlHatCyclic { p: usize, theta_zero: bool },
}

pub fn module_fixture(kind: &Fixture) -> Result<Semimodule> {
    match kind {
        Fixture::Cyclic { n } => cyclic_module(*n),
        Fixture::TrivialBoolean { preset } => {
            trivial_boolean(Arc::new(presets::preset(preset)?))
        }
        Fixture::S2Cyclic { p, twisted } => s2_cyclic(*p, *twisted),
        Fixture::S3Cyclic { p, sign } => s3_cyclic(*p, *sign),
        Fixture::S3TwoDim { p } => s3_two_dim(*p),
        Fixture::KlHatBooleanZero => kl_hat_boolean_zero(),
        Fixture::KlHatCyclic { p, theta_zero } => kl_hat_cyclic(*p, *theta_zero),
    }
}

fn check_modulus(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("modulus must be at least 2, got {p}")));
    }
    Ok(())
}

fn scalar(p: usize, c: usize) -> Vec<usize> {
    (0..p).map(|x| x * c % p).collect()
}

pub fn cyclic_module(n: usize) -> Result<Semimodule> {
    let r = Arc::new(Semiring::Based(presets::z_nonneg()));
    let monoid = FinMonoid::cyclic(n)?;
    Semimodule::new_validated(r, monoid, vec![(0..n).collect()])
}

/// The Boolean semilattice `{0, 1}` with every basis element (based case) or
/// every nonzero element (finite case) acting as the identity.
pub fn trivial_boolean(r: Arc<Semiring>) -> Result<Semimodule> {
    let actions = match r.as_ref() {
        Semiring::Based(b) => vec![vec![0, 1]; b.rank()],
        Semiring::Finite(f) => (0..f.size())
            .map(|a| if a == f.zero() { vec![0, 0] } else { vec![0, 1] })
            .collect(),
    };
    Semimodule::new_validated(r, FinMonoid::boolean(), actions)
}

fn group_module(
    group: presets::GroupTable,
    monoid: FinMonoid,
    generators: Vec<(&str, Vec<usize>)>,
) -> Result<Semimodule> {
    let gens = generators
        .into_iter()
        .map(|(name, map)| (group.index_of(name).expect("generator name"), map))
        .collect::<Vec<_>>();
    let actions = extend_group_action(&group, &gens, monoid.size())?;
    let r = Arc::new(Semiring::Based(presets::group_semiring(&group)));
    Semimodule::new_validated(r, monoid, actions)
}

pub fn s2_cyclic(p: usize, twisted: bool) -> Result<Semimodule> {
    check_modulus(p)?;
    let s = if twisted { scalar(p, p - 1) } else { scalar(p, 1) };
    group_module(presets::s2_group(), FinMonoid::cyclic(p)?, vec![("s", s)])
}

pub fn s3_cyclic(p: usize, sign: bool) -> Result<Semimodule> {
    check_modulus(p)?;
    let c = if sign { p - 1 } else { 1 };
    group_module(
        presets::s3_group(),
        FinMonoid::cyclic(p)?,
        vec![("(12)", scalar(p, c)), ("(23)", scalar(p, c))],
    )
}

/// The vector `(a, b)` has index `a + p·b`.
pub fn s3_two_dim(p: usize) -> Result<Semimodule> {
    check_modulus(p)?;
    let z = FinMonoid::cyclic(p)?;
    let monoid = z.product(&z);
    let matrix = |m: [[usize; 2]; 2]| -> Vec<usize> {
        (0..p * p)
            .map(|v| {
                let (a, b) = (v % p, v / p);
                let a2 = (m[0][0] * a + m[0][1] * b) % p;
                let b2 = (m[1][0] * a + m[1][1] * b) % p;
                a2 + p * b2
            })
            .collect()
    };
    let s = matrix([[0, 1], [1, 0]]);
    let t = matrix([[1, p - 1], [0, p - 1]]);
    group_module(presets::s3_group(), monoid, vec![("(12)", s), ("(23)", t)])
}

pub fn kl_hat_boolean_zero() -> Result<Semimodule> {
    let r = Arc::new(Semiring::Based(presets::kl_hat_s2()));
    Semimodule::new_validated(r, FinMonoid::boolean(), vec![vec![0, 1], vec![0, 0]])
}

pub fn kl_hat_cyclic(p: usize, theta_zero: bool) -> Result<Semimodule> {
    check_modulus(p)?;
    let r = Arc::new(Semiring::Based(presets::kl_hat_s2()));
    let theta = if theta_zero { scalar(p, 0) } else { scalar(p, 2) };
    Semimodule::new_validated(r, FinMonoid::cyclic(p)?, vec![scalar(p, 1), theta])
}
