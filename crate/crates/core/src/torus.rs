//! Character varieties of torus knots `T(m, n)` with group `⟨a, b | aᵐ = bⁿ⟩`,
//! in coordinates `x = tr a`, `y = tr b`, `z = tr ab⁻¹`.
//!
//! Besides the abelian component, every component is a line `x = x₀, y = y₀`
//! with `Φ_m(x₀) = Φ_n(y₀) = 0` or `Ψ_m(x₀) = Ψ_n(y₀) = 0`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::algebra::bipoly::{BiPoly, BiRing};
use crate::algebra::ext_field::ExtField;
use crate::algebra::factor::{roots_over_closure, squarefree_part, ExtFieldElem};
use crate::algebra::integers::ZZ;
use crate::algebra::poly::{PolyRing, UniPoly};
use crate::algebra::resultant::discriminant_uni;
use crate::algebra::ring::Ring;
use crate::algebra::text::format_unipoly;
use crate::algebra::zpoly::{self, ZPoly};
use crate::algebra::PrimeField;
use crate::chebyshev::{self, Kind};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    pub m: u64,
    pub n: u64,
}

impl TorusKnot {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m < 2 || n <= m {
            return Err(Error::Invalid(format!("T({m},{n}): need 2 <= m < n")));
        }
        if m.gcd(&n) != 1 {
            return Err(Error::Invalid(format!("T({m},{n}): m and n must be coprime")));
        }
        Ok(TorusKnot { m, n })
    }

    /// `(m−1)(n−1)/2 + 1`
    pub fn component_count(&self) -> u64 {
        (self.m - 1) * (self.n - 1) / 2 + 1
    }

    /// Components with irreducible characters after reduction mod `p`, when `p ∣ mn`:
    /// `(m−1)(n′+1)/2` for `n = p^r n′` (and symmetrically when `p ∣ m`).
    pub fn collapsed_count(&self, p: u64) -> u64 {
        let (rn, n1) = crate::algebra::primes::split_prime_power(self.n, p);
        let (rm, m1) = crate::algebra::primes::split_prime_power(self.m, p);
        match (rm, rn) {
            (0, 0) => (self.m - 1) * (self.n - 1) / 2,
            (0, _) => (self.m - 1) * (n1 + 1) / 2,
            _ => (self.n - 1) * (m1 + 1) / 2,
        }
    }
}

impl std::fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T({},{})", self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    Abelian,
    Phi,
    Psi,
}

/// A trace value: the `index`-th root of an irreducible integer polynomial, or an element of 𝔽̄_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coordinate {
    Algebraic { minpoly: ZPoly, index: usize },
    Finite(ExtFieldElem),
}

impl Coordinate {
    fn to_json(&self) -> Value {
        match self {
            Coordinate::Algebraic { minpoly, index } => json!({"minpoly": format_unipoly(minpoly, "u"), "index": index}),
            Coordinate::Finite(e) => json!({"value": e.to_string(), "field_degree": e.k}),
        }
    }

    pub fn prime_value(&self) -> Option<u64> {
        match self {
            Coordinate::Finite(e) => e.as_prime(),
            Coordinate::Algebraic { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusComponent {
    pub kind: ComponentKind,
    /// `None` on the abelian component.
    pub coords: Option<(Coordinate, Coordinate)>,
    /// Characteristic-zero components (indices into that set) reducing onto this one.
    pub merged: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusComponentSet {
    pub knot: TorusKnot,
    pub characteristic: u64,
    /// The abelian component first.
    pub components: Vec<TorusComponent>,
}

impl TorusComponentSet {
    pub fn nonabelian(&self) -> impl Iterator<Item = &TorusComponent> {
        self.components.iter().filter(|c| c.kind != ComponentKind::Abelian)
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut v = json!({"index": i, "kind": format!("{:?}", c.kind), "merged": c.merged});
                if let Some((x, y)) = &c.coords {
                    v["x"] = x.to_json();
                    v["y"] = y.to_json();
                }
                v
            })
            .collect();
        json!({
            "knot": self.knot.to_string(),
            "characteristic": self.characteristic,
            "component_count": self.components.len(),
            "components": comps,
        })
    }
}

/// Roots of `Φ_k` or `Ψ_k` over ℚ̄ as (irreducible factor, index).
fn roots_char0(kind: Kind, k: u64) -> Result<Vec<(ZPoly, usize)>> {
    let (_, factors) = zpoly::factor(&chebyshev::get(kind, k as i64)?)?;
    Ok(factors.into_iter().flat_map(|(f, _)| (0..f.degree().unwrap_or(0)).map(move |i| (f.clone(), i))).collect())
}

/// Images mod `p` of [`roots_char0`], aligned entry by entry: the roots of each
/// rational factor are sent, in order, to the roots of its reduction, each
/// repeated according to multiplicity.
fn roots_mod_p(kind: Kind, k: u64, fp: PrimeField) -> Result<Vec<ExtFieldElem>> {
    let (_, factors) = zpoly::factor(&chebyshev::get(kind, k as i64)?)?;
    let mut out = Vec::new();
    for (f, _) in factors {
        let g = zpoly::reduce(&f, fp);
        let cr = roots_over_closure(fp, &g, g.degree().unwrap_or(0))?;
        for (r, mult) in cr.roots {
            out.extend(std::iter::repeat_n(r, mult));
        }
    }
    Ok(out)
}

fn check_characteristic(characteristic: u64) -> Result<Option<PrimeField>> {
    match characteristic {
        0 => Ok(None),
        p => PrimeField::new(p).map(Some),
    }
}

/// Components over ℚ̄ (`characteristic = 0`) or over 𝔽̄_p.
pub fn torus_components(k: &TorusKnot, characteristic: u64) -> Result<TorusComponentSet> {
    let fp = check_characteristic(characteristic)?;
    let mut char0 = Vec::new();
    for kind in [Kind::Phi, Kind::Psi] {
        let xs = roots_char0(kind, k.m)?;
        let ys = roots_char0(kind, k.n)?;
        for x in &xs {
            for y in &ys {
                char0.push((kind, x.clone(), y.clone()));
            }
        }
    }
    let abelian = |merged| TorusComponent { kind: ComponentKind::Abelian, coords: None, merged };
    let kind_of = |kind| if kind == Kind::Phi { ComponentKind::Phi } else { ComponentKind::Psi };
    let Some(fp) = fp else {
        let mut components = vec![abelian(vec![0])];
        for (i, (kind, (fx, ix), (fy, iy))) in char0.into_iter().enumerate() {
            components.push(TorusComponent {
                kind: kind_of(kind),
                coords: Some((Coordinate::Algebraic { minpoly: fx, index: ix }, Coordinate::Algebraic { minpoly: fy, index: iy })),
                merged: vec![i + 1],
            });
        }
        return Ok(TorusComponentSet { knot: *k, characteristic, components });
    };
    let mut components = vec![abelian(vec![0])];
    let mut slot: BTreeMap<(ExtFieldElem, ExtFieldElem), usize> = BTreeMap::new();
    let mut i = 0;
    for kind in [Kind::Phi, Kind::Psi] {
        let xs = roots_mod_p(kind, k.m, fp)?;
        let ys = roots_mod_p(kind, k.n, fp)?;
        for x in &xs {
            for y in &ys {
                i += 1;
                let key = (x.clone(), y.clone());
                match slot.get(&key) {
                    Some(&j) => components[j].merged.push(i),
                    None => {
                        slot.insert(key, components.len());
                        components.push(TorusComponent {
                            kind: kind_of(kind),
                            coords: Some((Coordinate::Finite(x.clone()), Coordinate::Finite(y.clone()))),
                            merged: vec![i],
                        });
                    }
                }
            }
        }
    }
    debug_assert_eq!(i, char0.len());
    Ok(TorusComponentSet { knot: *k, characteristic, components })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collapse {
    pub count_char0: usize,
    pub count_char_p: usize,
    /// For each component mod `p`, the characteristic-zero components it absorbs.
    pub merges: Vec<Vec<usize>>,
}

/// Non-abelian components before and after reduction mod `p`.
pub fn torus_collapse_mod_p(k: &TorusKnot, p: u64) -> Result<Collapse> {
    PrimeField::new(p)?;
    let c0 = torus_components(k, 0)?;
    let cp = torus_components(k, p)?;
    Ok(Collapse {
        count_char0: c0.nonabelian().count(),
        count_char_p: cp.nonabelian().count(),
        merges: cp.nonabelian().map(|c| c.merged.clone()).collect(),
    })
}

/// `disc_z(x² + y² + z² − xyz − 4)` in `ℤ[x, y]` (with `x`, `y` in the `t`, `x` slots).
pub fn abelian_discriminant() -> Result<BiPoly<BigInt>> {
    let br = BiRing::new(ZZ);
    let (x, y) = (br.t(), br.x());
    let zr = PolyRing::new(br.clone());
    let c0 = br.sub(&br.add(&br.mul(&x, &x), &br.mul(&y, &y)), &br.from_int(4));
    let q = zr.from_coeffs(vec![c0, br.neg(&br.mul(&x, &y)), br.one()]);
    discriminant_uni(&zr, &q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contact {
    Transverse,
    Tangent,
}

/// Why the contact is tangent: on the abelian curve `x = Ψ_{2n}(τ)`, `y = Ψ_{2m}(τ)`
/// both derivatives vanish at every parameter `τ` over the intersection point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyCertificate {
    /// Squarefree polynomial in `τ` whose roots are the parameters over the point.
    pub parameter_poly: String,
    pub dx_vanishes: bool,
    pub dy_vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianIntersection {
    pub contact: Contact,
    pub points: usize,
    /// `z² − x₀y₀ z + (x₀² + y₀² − 4)`, with the known values substituted.
    pub quadratic: String,
    /// The `z` values when they can be written down: minimal polynomials over ℚ or 𝔽_p-elements.
    pub z_values: Vec<String>,
    pub certificate: Option<TangencyCertificate>,
}

impl AbelianIntersection {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "contact": format!("{:?}", self.contact),
            "points": self.points,
            "quadratic": self.quadratic,
            "z": self.z_values,
        });
        if let Some(c) = &self.certificate {
            v["certificate"] = json!({"parameter_poly": c.parameter_poly, "dx_vanishes": c.dx_vanishes, "dy_vanishes": c.dy_vanishes});
        }
        v
    }
}

fn coordinate_text(c: &Coordinate, name: &str) -> String {
    match c {
        Coordinate::Algebraic { minpoly, .. } if minpoly.degree() == Some(1) => {
            let v = -minpoly.coeffs()[0].clone();
            format!("{v}")
        }
        Coordinate::Algebraic { .. } => name.to_string(),
        Coordinate::Finite(e) => format!("({e})"),
    }
}

/// Intersection of a non-abelian component with the abelian one.
pub fn abelian_intersection_torus(k: &TorusKnot, component: &TorusComponent, characteristic: u64) -> Result<AbelianIntersection> {
    let fp = check_characteristic(characteristic)?;
    let Some((x0, y0)) = &component.coords else {
        return Err(Error::Invalid("the abelian component meets itself".into()));
    };
    let (xs, ys) = (coordinate_text(x0, "x0"), coordinate_text(y0, "y0"));
    let quadratic = format!("z^2 - {xs}*{ys}*z + {xs}^2 + {ys}^2 - 4");
    let Some(fp) = fp else {
        // traces of non-central finite-order elements are never ±2 in characteristic 0
        let mut z_values = Vec::new();
        if let (Coordinate::Algebraic { minpoly: fx, .. }, Coordinate::Algebraic { minpoly: fy, .. }) = (x0, y0) {
            if fx.degree() == Some(1) && fy.degree() == Some(1) {
                let (a, b) = (-fx.coeffs()[0].clone(), -fy.coeffs()[0].clone());
                let q = PolyRing::new(ZZ).from_coeffs(vec![&a * &a + &b * &b - 4, -(&a * &b), BigInt::from(1)]);
                for (f, _) in zpoly::factor(&q)?.1 {
                    z_values.push(format_unipoly(&f, "z"));
                }
            }
        }
        return Ok(AbelianIntersection { contact: Contact::Transverse, points: 2, quadratic, z_values, certificate: None });
    };
    let p = fp.p();
    let is_pm2 = |c: &Coordinate| c.prime_value().filter(|&v| v == 2 || v == p - 2);
    let (Coordinate::Finite(ex), Coordinate::Finite(ey)) = (x0, y0) else {
        return Err(Error::Invalid("component coordinates do not match the characteristic".into()));
    };
    let mut z_values = Vec::new();
    if let (Some(a), Some(b)) = (ex.as_prime(), ey.as_prime()) {
        let pr = PolyRing::new(fp);
        let q = pr.from_coeffs(vec![(a * a % p + b * b % p + p * 4 - 4) % p, (p - a * b % p) % p, 1]);
        let cr = roots_over_closure(fp, &q, 2)?;
        for (z, mult) in cr.roots {
            for _ in 0..mult {
                z_values.push(z.to_string());
            }
        }
        z_values.dedup();
    }
    let (sx, sy) = (is_pm2(x0), is_pm2(y0));
    if sx.is_none() && sy.is_none() {
        return Ok(AbelianIntersection { contact: Contact::Transverse, points: 2, quadratic, z_values, certificate: None });
    }
    // the double root z = x₀y₀/2; with y₀ = ±2 it is ±x₀ and lives in x₀'s field
    if z_values.is_empty() {
        let (other, sign) = match (sx, sy) {
            (_, Some(v)) => (ex, v),
            (Some(v), _) => (ey, v),
            _ => unreachable!(),
        };
        let coords = if sign == 2 { other.coords.clone() } else { other.coords.iter().map(|&c| (p - c) % p).collect() };
        z_values.push(ExtFieldElem { p, k: other.k, coords }.to_string());
    }
    let certificate = tangency_certificate(k, ex, ey, fp)?;
    Ok(AbelianIntersection { contact: Contact::Tangent, points: 1, quadratic, z_values, certificate: Some(certificate) })
}

fn tangency_certificate(k: &TorusKnot, x0: &ExtFieldElem, y0: &ExtFieldElem, fp: PrimeField) -> Result<TangencyCertificate> {
    let field = ExtField::canonical(fp, x0.k.max(y0.k));
    let lift = |e: &ExtFieldElem| -> Vec<u64> {
        match e.as_prime() {
            Some(a) => field.embed(a),
            None => e.coords.clone(),
        }
    };
    let fr = PolyRing::new(field.clone());
    let to_field = |f: &ZPoly| fr.from_coeffs(zpoly::reduce(f, fp).coeffs().iter().map(|&c| field.embed(c)).collect());
    let psi_x = to_field(&chebyshev::psi(2 * k.n as i64)?);
    let psi_y = to_field(&chebyshev::psi(2 * k.m as i64)?);
    let gx = fr.sub(&psi_x, &fr.constant(lift(x0)));
    let gy = fr.sub(&psi_y, &fr.constant(lift(y0)));
    let g = squarefree_part(&fr, &fr.gcd(&gx, &gy))?;
    let vanishes = |d: &UniPoly<Vec<u64>>| d.is_zero() || fr.rem(d, &g).is_zero();
    let dx_vanishes = g.deg() > 0 && vanishes(&fr.derivative(&psi_x));
    let dy_vanishes = g.deg() > 0 && vanishes(&fr.derivative(&psi_y));
    let text = fr
        .monic(&g)
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !field.is_zero(c))
        .map(|(i, c)| {
            let c = ExtFieldElem { p: fp.p(), k: field.k(), coords: c.clone() };
            match i {
                0 => format!("({c})"),
                1 => format!("({c})*tau"),
                _ => format!("({c})*tau^{i}"),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(TangencyCertificate { parameter_poly: text, dx_vanishes, dy_vanishes })
}
