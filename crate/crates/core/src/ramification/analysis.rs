//! Comparison of a curve over 𝔽_p with its baseline over ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::bifactor::factor_bi_fp;
use crate::algebra::bipoly::{BiPoly, BiRing};
use crate::algebra::factor::{roots_over_closure, squarefree_part};
use crate::algebra::integers::ZZ;
use crate::algebra::poly::PolyRing;
use crate::algebra::prime_field::PrimeField;
use crate::algebra::primes::{is_prime_u64, split_prime_power};
use crate::algebra::text::{format_bipoly, format_unipoly};
use crate::algebra::zpoly::{self, lift_symmetric};
use crate::error::{Error, Result};
use crate::knots::{alexander_poly, character_curve, presentation_for, AlexanderPoly, Catalog, TwoBridgeFraction};

use super::candidates::{candidate_primes, Candidates};
use super::infinity::{points_at_infinity, InfinityPoint};
use super::singular::{singular_points_fp, singular_points_q, RationalSingular};
use super::Config;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct YCounts {
    pub y_triv: u64,
    pub y_ab: u64,
    pub y_nab: u64,
}

fn determinant_u64(delta: &AlexanderPoly) -> Result<u64> {
    let d = delta.determinant();
    let d = d.to_u64().ok_or_else(|| Error::Capacity(format!("determinant {d} does not fit in 64 bits")))?;
    if d % 2 == 0 {
        return Err(Error::Invalid(format!("even determinant {d}")));
    }
    Ok(d)
}

/// Sizes of the trivial, abelian and non-abelian parts of the character variety
/// at `t = 0`, from the determinant and checked against the roots of `P(0, x)`
/// other than `x = 2`.
pub fn y_decomposition_counts(f: &BiPoly<BigInt>, delta: &AlexanderPoly, characteristic: u64) -> Result<YCounts> {
    let det = determinant_u64(delta)?;
    let p0 = BiRing::new(ZZ).eval_t(f, &BigInt::zero());
    if p0.is_zero() {
        return Err(Error::Structural("P(0, x) vanishes identically".into()));
    }
    let (y_ab, roots) = if characteristic == 0 {
        let zr = PolyRing::new(ZZ);
        let sq = zpoly::squarefree_part(&p0)?;
        let at2 = zr.eval(&p0, &BigInt::from(2)).is_zero();
        ((det - 1) / 2, sq.deg() as u64 - at2 as u64)
    } else {
        let fp = PrimeField::new(characteristic)?;
        let (_, m) = split_prime_power(det, characteristic);
        let pr = PolyRing::new(fp);
        let red = zpoly::reduce(&p0, fp);
        if red.is_zero() {
            return Err(Error::Structural(format!("P(0, x) vanishes mod {characteristic}")));
        }
        let sq = squarefree_part(&pr, &red)?;
        let at2 = pr.eval(&red, &2) == 0;
        ((m - 1) / 2, sq.deg() as u64 - at2 as u64)
    };
    if y_ab != roots {
        return Err(Error::Consistency(format!(
            "determinant predicts {y_ab} abelian points, P(0, x) has {roots} roots other than 2 (characteristic {characteristic})"
        )));
    }
    Ok(YCounts { y_triv: 1, y_ab, y_nab: 0 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangencyRoot {
    pub t: String,
    /// Conjugate roots described by this entry.
    pub count: usize,
    pub multiplicity: usize,
}

/// Roots of `P(t, 2)`: where the curve meets the abelian line `x = 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tangency {
    pub characteristic: u64,
    pub polynomial: String,
    pub degree: usize,
    pub roots: Vec<TangencyRoot>,
}

impl Tangency {
    /// `deg − #distinct roots`; unaffected by roots escaping to infinity.
    pub fn excess(&self) -> usize {
        self.degree - self.roots.iter().map(|r| r.count).sum::<usize>()
    }

    pub fn tangent_roots(&self) -> impl Iterator<Item = &TangencyRoot> {
        self.roots.iter().filter(|r| r.multiplicity >= 2)
    }
}

pub fn abelian_tangency(f: &BiPoly<BigInt>, characteristic: u64, k_max: usize) -> Result<Tangency> {
    let q = BiRing::new(ZZ).eval_x(f, &BigInt::from(2));
    let vanishes = || Error::Structural(format!("x - 2 divides P in characteristic {characteristic}"));
    if characteristic == 0 {
        if q.is_zero() {
            return Err(vanishes());
        }
        let mut roots = Vec::new();
        if q.deg() > 0 {
            for (g, m) in zpoly::factor(&q)?.1 {
                let t = if g.deg() == 1 {
                    BigRational::new(-g.coeffs()[0].clone(), g.coeffs()[1].clone()).to_string()
                } else {
                    format!("root of {}", format_unipoly(&g, "t"))
                };
                roots.push(TangencyRoot { t, count: g.deg() as usize, multiplicity: m });
            }
        }
        let degree = q.deg().max(0) as usize;
        return Ok(Tangency { characteristic, polynomial: format_unipoly(&q, "t"), degree, roots });
    }
    let fp = PrimeField::new(characteristic)?;
    let red = zpoly::reduce(&q, fp);
    if red.is_zero() {
        return Err(vanishes());
    }
    let mut roots = Vec::new();
    if red.deg() > 0 {
        let cr = roots_over_closure(fp, &red, k_max)?;
        for (e, m) in cr.roots {
            roots.push(TangencyRoot { t: e.to_string(), count: 1, multiplicity: m });
        }
        for (g, m) in cr.residual {
            let t = format!("root of {}", format_unipoly(&lift_symmetric(&g, fp.p()), "t"));
            roots.push(TangencyRoot { t, count: g.deg() as usize, multiplicity: m });
        }
    }
    let polynomial = format_unipoly(&lift_symmetric(&red, fp.p()), "t");
    Ok(Tangency { characteristic, polynomial, degree: red.deg().max(0) as usize, roots })
}

/// A way in which the curve mod `p` differs from the curve over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Phenomenon {
    ComponentChange { from: usize, to: usize },
    NewSingularPoint { point: String },
    PointCollapse { set: String, from: u64, to: u64 },
    AbelianTangency { point: String, multiplicity: usize },
}

impl fmt::Display for Phenomenon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phenomenon::ComponentChange { from, to } => write!(f, "component change: {from} -> {to}"),
            Phenomenon::NewSingularPoint { point } => write!(f, "new singular point {point}"),
            Phenomenon::PointCollapse { set, from, to } => write!(f, "point collapse in {set}: {from} -> {to}"),
            Phenomenon::AbelianTangency { point, multiplicity } => write!(f, "abelian tangency at {point}, multiplicity {multiplicity}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub p: u64,
    pub phenomena: Vec<Phenomenon>,
    pub evidence: Vec<String>,
}

/// The curve over ℚ, against which reductions are compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Baseline {
    pub components: usize,
    /// `catalog` or `heuristic`.
    pub components_source: String,
    pub singular: RationalSingular,
    pub infinity: Vec<InfinityPoint>,
    pub y_counts: YCounts,
    pub tangency: Tangency,
}

impl Baseline {
    pub fn to_json(&self) -> Value {
        json!({
            "components": self.components,
            "components_source": self.components_source,
            "singular_points": self.singular.to_json(),
            "infinity": serde_json::to_value(&self.infinity).expect("serializable"),
            "y_counts": serde_json::to_value(self.y_counts).expect("serializable"),
            "abelian_tangency": serde_json::to_value(&self.tangency).expect("serializable"),
        })
    }
}

/// Smallest factor count over five primes above 10⁴; an upper bound for the
/// number of components over ℚ that is attained at most primes.
pub fn heuristic_components(f: &BiPoly<BigInt>, cfg: &Config) -> Result<usize> {
    let mut best = usize::MAX;
    let mut q = 10_001u64;
    let mut used = 0;
    while used < 5 {
        q += 2;
        if !is_prime_u64(q) {
            continue;
        }
        let fp = PrimeField::new(q)?;
        let r = zpoly::reduce_bivar(f, fp);
        if r.total_degree() != f.total_degree() {
            continue;
        }
        let (_, fs) = factor_bi_fp(fp, &r, cfg.degree_bound)?;
        best = best.min(fs.iter().map(|(_, m)| m).sum());
        used += 1;
    }
    Ok(best)
}

/// Everything needed to analyze primes for one knot.
#[derive(Clone, Debug)]
pub struct KnotContext {
    pub name: String,
    pub curve: BiPoly<BigInt>,
    pub delta: AlexanderPoly,
    pub baseline: Baseline,
    pub candidates: Candidates,
    pub config: Config,
}

impl KnotContext {
    /// `components` comes from a catalog when known; otherwise it is estimated.
    pub fn new(name: &str, curve: BiPoly<BigInt>, delta: AlexanderPoly, components: Option<usize>, config: &Config) -> Result<Self> {
        let (components, components_source) = match components {
            Some(c) => (c, "catalog".to_string()),
            None => (heuristic_components(&curve, config)?, "heuristic".to_string()),
        };
        let baseline = Baseline {
            components,
            components_source,
            singular: singular_points_q(&curve)?,
            infinity: points_at_infinity(&curve, 0)?,
            y_counts: y_decomposition_counts(&curve, &delta, 0)?,
            tangency: abelian_tangency(&curve, 0, config.k_max)?,
        };
        let candidates = candidate_primes(&curve, &delta, config)?;
        Ok(KnotContext { name: name.to_string(), curve, delta, baseline, candidates, config: config.clone() })
    }

    /// A catalog name or fraction (`8_9`, `7/25`), or any two-bridge fraction.
    pub fn for_knot(key: &str, config: &Config) -> Result<Self> {
        if let Some(e) = Catalog::builtin().find(key) {
            let pres = e.presentation()?;
            let curve = character_curve(&pres)?;
            return KnotContext::new(&e.name, curve.p, alexander_poly(&pres)?, Some(e.components), config);
        }
        let f = TwoBridgeFraction::parse(key)?;
        let pres = presentation_for(&f);
        let curve = character_curve(&pres)?;
        KnotContext::new(&f.to_string(), curve.p, alexander_poly(&pres)?, None, config)
    }

    pub fn curve_text(&self) -> String {
        format_bipoly(&self.curve, ["t", "x"])
    }
}

/// Compare the reduction mod `p` with the baseline.
pub fn analyze_prime(ctx: &KnotContext, p: u64) -> Result<PrimeReport> {
    let fp = PrimeField::new(p)?;
    let cfg = &ctx.config;
    let base = &ctx.baseline;
    let fb = zpoly::reduce_bivar(&ctx.curve, fp);
    let mut phenomena = Vec::new();
    let mut evidence = Vec::new();

    let (_, factors) = factor_bi_fp(fp, &fb, cfg.degree_bound)?;
    let count: usize = factors.iter().map(|(_, m)| m).sum();
    let shape: Vec<String> = factors
        .iter()
        .map(|(g, m)| {
            let d = format!("({},{})", g.deg_t().unwrap_or(0), g.deg_x().unwrap_or(0));
            if *m > 1 {
                format!("{d}^{m}")
            } else {
                d
            }
        })
        .collect();
    evidence.push(format!(
        "P mod {p} has {count} irreducible factor(s) of bidegree {} against {} over Q ({})",
        shape.join(" "),
        base.components,
        base.components_source
    ));
    if count != base.components {
        phenomena.push(Phenomenon::ComponentChange { from: base.components, to: count });
    }

    match singular_points_fp(fp, &fb, cfg.k_max) {
        Ok(s) => {
            evidence.push(format!(
                "{} singular point(s) mod {p}{}, {} over Q",
                s.count(),
                if s.complete() { "" } else { " (some beyond k_max)" },
                base.singular.count()
            ));
            for orbit in &s.orbits {
                let new = match base.singular.reduces_to(orbit, p) {
                    Some(old) => !old,
                    None => {
                        evidence.push(format!("reduction of the rational singular locus is undefined mod {p}; {} not classified", orbit.describe(p)));
                        false
                    }
                };
                if !new {
                    continue;
                }
                // where split components cross; accounted for by the component change
                let on = factors.iter().filter(|(g, _)| orbit.lies_on(fp, g)).count();
                if count != base.components && on >= 2 {
                    let where_ = if orbit.points.is_empty() {
                        orbit.describe(p)
                    } else {
                        orbit.points.iter().map(|pt| pt.label()).collect::<Vec<_>>().join(", ")
                    };
                    evidence.push(format!("{where_} lie(s) on {on} components mod {p}"));
                    continue;
                }
                if orbit.points.is_empty() {
                    phenomena.push(Phenomenon::NewSingularPoint { point: orbit.describe(p) });
                }
                for pt in &orbit.points {
                    evidence.push(format!("singular point {} of multiplicity {}, tangent cone {}", pt.label(), pt.multiplicity, pt.tangent_cone));
                    phenomena.push(Phenomenon::NewSingularPoint { point: pt.label() });
                }
            }
        }
        Err(Error::NotSquarefree) => evidence.push(format!("P mod {p} is not squarefree; singular points not computed")),
        Err(e) => return Err(e),
    }

    let y = y_decomposition_counts(&ctx.curve, &ctx.delta, p)?;
    evidence.push(format!("Y^ab has {} point(s) mod {p}, {} over Q", y.y_ab, base.y_counts.y_ab));
    if y.y_ab != base.y_counts.y_ab {
        phenomena.push(Phenomenon::PointCollapse { set: "Y^ab".into(), from: base.y_counts.y_ab, to: y.y_ab });
    }

    match abelian_tangency(&ctx.curve, p, cfg.k_max) {
        Ok(t) => {
            let roots: Vec<String> = t.roots.iter().map(|r| format!("{}^{}", r.t, r.multiplicity)).collect();
            evidence.push(format!("P(t,2) mod {p} = {}; roots {}", t.polynomial, if roots.is_empty() { "none".into() } else { roots.join(", ") }));
            if t.excess() > base.tangency.excess() {
                for r in t.tangent_roots() {
                    phenomena.push(Phenomenon::AbelianTangency { point: format!("({},2)", r.t), multiplicity: r.multiplicity });
                }
            }
        }
        Err(Error::Structural(msg)) => evidence.push(msg),
        Err(e) => return Err(e),
    }
    Ok(PrimeReport { p, phenomena, evidence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn ctx(name: &str) -> &'static KnotContext {
        static CTXS: OnceLock<Vec<KnotContext>> = OnceLock::new();
        let all = CTXS.get_or_init(|| {
            ["4_1", "6_1", "7_4", "8_9", "11/23", "3_1"].iter().map(|k| KnotContext::for_knot(k, &Config::default()).unwrap()).collect()
        });
        all.iter().find(|c| c.name == name).unwrap()
    }

    #[test]
    fn y_counts() {
        let c = ctx("6_1");
        assert_eq!(y_decomposition_counts(&c.curve, &c.delta, 3).unwrap().y_ab, 0);
        assert_eq!(y_decomposition_counts(&c.curve, &c.delta, 0).unwrap().y_ab, 4);
        let c = ctx("8_9");
        assert_eq!(y_decomposition_counts(&c.curve, &c.delta, 5).unwrap().y_ab, 0);
        let c = ctx("4_1");
        assert_eq!(y_decomposition_counts(&c.curve, &c.delta, 0).unwrap(), YCounts { y_triv: 1, y_ab: 2, y_nab: 0 });
    }

    #[test]
    fn stevedore_tangency() {
        let c = ctx("6_1");
        let t0 = abelian_tangency(&c.curve, 0, 6).unwrap();
        assert_eq!(t0.polynomial, "(-2)*t^2 + 9");
        assert!(t0.roots.iter().all(|r| r.multiplicity == 1));
        let t3 = abelian_tangency(&c.curve, 3, 6).unwrap();
        assert_eq!(t3.roots, [TangencyRoot { t: "0".into(), count: 1, multiplicity: 2 }]);
        let line = crate::algebra::text::parse_bipoly("(x - 2)*(x + t)", ["t", "x"]).unwrap();
        assert!(matches!(abelian_tangency(&line, 0, 6), Err(Error::Structural(_))));
    }

    #[test]
    fn figure_eight_at_five_and_seven() {
        let r = analyze_prime(ctx("4_1"), 5).unwrap();
        assert!(r.phenomena.contains(&Phenomenon::NewSingularPoint { point: "(0,2)".into() }));
        assert!(r.phenomena.contains(&Phenomenon::PointCollapse { set: "Y^ab".into(), from: 2, to: 0 }));
        assert!(r.phenomena.iter().any(|p| matches!(p, Phenomenon::AbelianTangency { .. })));
        assert!(analyze_prime(ctx("4_1"), 7).unwrap().phenomena.is_empty());
    }

    #[test]
    fn eight_nine_splits_mod_seven() {
        let r = analyze_prime(ctx("8_9"), 7).unwrap();
        assert_eq!(r.phenomena, [Phenomenon::ComponentChange { from: 1, to: 2 }]);
    }
}
