//! Named ideals and map pairs used by tests, benches and the CLI.

use crate::cremona::CremonaMap;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::polyring::{parse_ring, Ring};

fn build(ring: &str, gens: &str) -> Ideal {
    let ring = parse_ring(ring).expect("fixture ring");
    Ideal::parse(&ring, gens).expect("fixture ideal")
}

/// Products of three of the four variables: the six coordinate lines of `P^3`.
pub fn tetrahedron() -> Ideal {
    build("QQ[x,y,z,w]", "yzw, xzw, xyw, xyz")
}

/// Stanley-Reisner ideal of the pentagon: products of non-adjacent vertices.
pub fn pentagon() -> Ideal {
    build("QQ[x1,x2,x3,x4,x5]", "x1x3, x1x4, x2x4, x2x5, x3x5")
}

/// 2x2 minors of the 2x3 Hankel matrix: the twisted cubic.
pub fn hankel() -> Ideal {
    build("QQ[x0,x1,x2,x3]", "x0x2-x1^2, x0x3-x1x2, x1x3-x2^2")
}

/// Kernel of `x,y,z,w -> s^4, s^3t, st^3, t^4`.
pub fn macaulay_curve() -> Ideal {
    build("QQ[x,y,z,w]", "yz-xw, z^3-yw^2, y^3-x^2z, xz^2-y^2w")
}

/// Three coordinate points of the plane.
pub fn three_points() -> Ideal {
    build("QQ[x,y,z]", "xy, xz, yz")
}

/// `(x^d, x^{d-1}y, y^{d-1}z)`.
pub fn binomial_family(d: u32) -> Ideal {
    build("QQ[x,y,z]", &format!("x^{d}, x^{}y, y^{}z", d - 1, d - 1))
}

/// Base ideal of the polar map of `x(xz + y^2)`.
pub fn dolgachev() -> Ideal {
    build("QQ[x,y,z]", "2xz+y^2, xy, x^2")
}

/// Quadrics in five variables whose map has the largest possible inverse degree.
pub fn quadric_chain() -> Ideal {
    build("QQ[X,Y,W,Z,U]", "X^2, XY, WX+Y^2, ZX+W^2, UX+Z^2")
}

fn pair(ring: &Ring, f: &str, g: &str) -> Result<(CremonaMap, CremonaMap)> {
    Ok((CremonaMap::parse(ring, f)?, CremonaMap::parse(ring, g)?))
}

/// `(x^d, x^{d-1}y, y^{d-1}z)` and its inverse `(u v^{d-1}, v^d, w u^{d-1})`.
pub fn binomial_family_map(d: u32) -> Result<(CremonaMap, CremonaMap)> {
    let r = parse_ring("QQ[x,y,z]")?;
    pair(
        &r,
        &format!("x^{d}, x^{}y, y^{}z", d - 1, d - 1),
        &format!("xy^{}, y^{d}, zx^{}", d - 1, d - 1),
    )
}

pub fn dolgachev_map() -> Result<(CremonaMap, CremonaMap)> {
    let r = parse_ring("QQ[x,y,z]")?;
    pair(&r, "2xz+y^2, xy, x^2", "2z^2, 2yz, xz-y^2")
}

/// The tetrahedral map, its own inverse.
pub fn tetrahedral_map() -> Result<(CremonaMap, CremonaMap)> {
    let r = parse_ring("QQ[x,y,z,w]")?;
    pair(&r, "yzw, xzw, xyw, xyz", "yzw, xzw, xyw, xyz")
}

pub fn plane_quadratic_map() -> Result<(CremonaMap, CremonaMap)> {
    let r = parse_ring("QQ[x,y,z]")?;
    pair(&r, "yz, xz, xy", "yz, xz, xy")
}
