//! Named example structures. Every entry ships as a `.homdef` file under
//! `catalog/`; generated entries must match their file byte for byte.

use crate::bialgebra::{free_nc, group_algebra, matrix_coords, conjugation_subst, HomBialgebra};
use crate::error::{Error, Result};
use crate::homdef::{parse_definition, Definition};
use crate::linear::LinearMap;
use crate::scalar::Scalar;
use crate::sigma::q_witt_algebra;

macro_rules! shipped {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../catalog/", $name, ".homdef")))),*]
    };
}

pub const SHIPPED: &[(&str, &str)] = shipped!(
    "hom_assoc_3d",
    "hom_assoc_3d_untwisted",
    "hom_lie_3d",
    "hom_lie_3d_untwisted",
    "sl2_deformation",
    "jackson_sl2",
    "q_witt_w3",
    "group_z3",
    "group_z3_square",
    "free_nc_1_2",
    "free_nc_2_2",
    "free_nc_2_2_swap",
    "matrix_coords_2_1",
    "matrix_coords_2_1_conjugated",
);

pub fn names() -> impl Iterator<Item = &'static str> {
    SHIPPED.iter().map(|(n, _)| *n)
}

pub fn load(name: &str) -> Result<Definition> {
    let (_, text) = SHIPPED.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::Unknown { kind: "catalog entry", name: name.to_string() })?;
    parse_definition(text)
}

pub fn all() -> Vec<Definition> {
    names().map(|n| load(n).expect("shipped catalog entries parse")).collect()
}

pub fn bialgebras() -> Vec<HomBialgebra> {
    all()
        .into_iter()
        .filter_map(|d| match d {
            Definition::Bialgebra(b) => Some(b),
            _ => None,
        })
        .collect()
}

fn swap2() -> LinearMap {
    LinearMap::from_rows(vec![vec![Scalar::zero(), Scalar::one()], vec![Scalar::one(), Scalar::zero()]])
}

/// Entries built in code rather than written by hand.
pub fn generate(name: &str) -> Option<Result<Definition>> {
    let named = |r: Result<HomBialgebra>, n: &str| {
        r.map(|mut h| {
            h.name = n.to_string();
            Definition::Bialgebra(h)
        })
    };
    Some(match name {
        "q_witt_w3" => q_witt_algebra(3).map(Definition::Algebra),
        "group_z3" => named(group_algebra(3, 1).and_then(|h| h.as_unital_counital()), name),
        "group_z3_square" => named(group_algebra(3, 2), name),
        "free_nc_1_2" => named(free_nc(1, 2, None).and_then(|h| h.as_unital_counital()), name),
        "free_nc_2_2" => named(free_nc(2, 2, None).and_then(|h| h.as_unital_counital()), name),
        "free_nc_2_2_swap" => named(free_nc(2, 2, Some(&swap2())), name),
        "matrix_coords_2_1" => named(matrix_coords(2, 1, None).and_then(|h| h.as_unital_counital()), name),
        "matrix_coords_2_1_conjugated" => {
            let p = LinearMap::from_rows(vec![vec![Scalar::one(), Scalar::one()], vec![Scalar::zero(), Scalar::one()]]);
            let pinv = LinearMap::from_rows(vec![vec![Scalar::one(), -Scalar::one()], vec![Scalar::zero(), Scalar::one()]]);
            named(matrix_coords(2, 1, Some(&conjugation_subst(&p, &pinv))), name)
        }
        _ => return None,
    })
}

/// Parameterized constructions exposed on the command line.
pub fn construct(name: &str, args: &[i64], endo: Option<&LinearMap>) -> Result<Definition> {
    let arg = |i: usize, what: &str| -> Result<usize> {
        let v = *args.get(i).ok_or_else(|| Error::condition(format!("{name} needs <{what}>")))?;
        usize::try_from(v).map_err(|_| Error::condition(format!("<{what}> must be nonnegative")))
    };
    let cap = |i: usize| -> Result<usize> {
        let c = arg(i, "cap")?;
        if c < 1 {
            return Err(Error::condition("cap must be at least 1"));
        }
        Ok(c)
    };
    match name {
        "group_algebra" => {
            if endo.is_some() {
                return Err(Error::condition("group_algebra takes an exponent, not an endomorphism file"));
            }
            let h = group_algebra(arg(0, "order")?, args.get(1).map_or(Ok(1), |_| arg(1, "exponent"))?)?;
            Ok(Definition::Bialgebra(unital_if_possible(h)))
        }
        "free_nc" => Ok(Definition::Bialgebra(unital_if_possible(free_nc(arg(0, "variables")?, cap(1)?, endo)?))),
        "matrix_coords" => Ok(Definition::Bialgebra(unital_if_possible(matrix_coords(arg(0, "size")?, cap(1)?, endo)?))),
        "q_witt" => Ok(Definition::Algebra(q_witt_algebra(arg(0, "window")? as i64)?)),
        "q_virasoro" => Ok(Definition::Algebra(crate::sigma::q_virasoro_algebra(arg(0, "window")? as i64, Scalar::one())?)),
        _ => load(name),
    }
}

fn unital_if_possible(h: HomBialgebra) -> HomBialgebra {
    h.as_unital_counital().unwrap_or(h)
}
