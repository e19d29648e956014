//! Hyperelliptic curve models y^2 = f(x).
//!
//! A curve is a squarefree right-hand side of degree >= 3 over a field
//! context; its genus is floor((deg f - 1) / 2). The branch divisor
//! consists of the roots of f over a splitting extension plus the point at
//! infinity when deg f is odd, 2g + 2 points in total.

use std::fmt;

use crate::error::{Error, Result};
use crate::ff::{Embedding, FieldCtx, Fq};
use crate::upoly::{embedding, Poly};
use crate::SearchOptions;

/// A point of the projective line over some field context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Finite(Fq),
    Infinity,
}

impl ProjPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Fq> {
        match self {
            ProjPoint::Finite(v) => Some(v),
            ProjPoint::Infinity => None,
        }
    }

    /// Homogeneous coordinates (x : z).
    pub fn homogeneous(&self, ctx: &FieldCtx) -> (Fq, Fq) {
        match self {
            ProjPoint::Finite(v) => (v.clone(), ctx.one()),
            ProjPoint::Infinity => (ctx.one(), ctx.zero()),
        }
    }

    /// Image under a ring embedding; infinity maps to infinity.
    pub fn lift(&self, emb: &Embedding) -> Result<ProjPoint> {
        Ok(match self {
            ProjPoint::Finite(v) => ProjPoint::Finite(emb.apply(v)?),
            ProjPoint::Infinity => ProjPoint::Infinity,
        })
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    /// Finite points in coordinate order, infinity last.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (ProjPoint::Finite(a), ProjPoint::Finite(b)) => a.cmp(b),
            (ProjPoint::Finite(_), ProjPoint::Infinity) => std::cmp::Ordering::Less,
            (ProjPoint::Infinity, ProjPoint::Finite(_)) => std::cmp::Ordering::Greater,
            (ProjPoint::Infinity, ProjPoint::Infinity) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(v) => write!(f, "{v}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// Cross-ratio (a, b; c, d) of four distinct points, computed in
/// homogeneous coordinates so that infinity needs no special casing.
pub fn cross_ratio(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint, ctx: &FieldCtx) -> Result<Fq> {
    let (xa, za) = a.homogeneous(ctx);
    let (xb, zb) = b.homogeneous(ctx);
    let (xc, zc) = c.homogeneous(ctx);
    let (xd, zd) = d.homogeneous(ctx);
    let det = |x1: &Fq, z1: &Fq, x2: &Fq, z2: &Fq| x1.mul(z2).sub(&x2.mul(z1));
    let num = det(&xa, &za, &xc, &zc).mul(&det(&xb, &zb, &xd, &zd));
    let den = det(&xa, &za, &xd, &zd).mul(&det(&xb, &zb, &xc, &zc));
    num.div(&den)
}

/// Hyperelliptic model y^2 = f(x) with squarefree f of degree >= 3.
#[derive(Clone, PartialEq, Eq)]
pub struct HyperCurve {
    f: Poly,
    genus: usize,
}

impl fmt::Debug for HyperCurve {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "y^2 = {} (genus {})", self.f, self.genus)
    }
}

impl fmt::Display for HyperCurve {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "y^2 = {}", self.f)
    }
}

impl HyperCurve {
    /// Validates squarefreeness and the degree bound, and computes the
    /// genus floor((deg f - 1) / 2).
    pub fn new(f: Poly) -> Result<HyperCurve> {
        let d = match f.degree() {
            None => return Err(Error::DegreeTooSmall(0)),
            Some(d) if d < 3 => return Err(Error::DegreeTooSmall(d)),
            Some(d) => d,
        };
        if !f.is_squarefree()? {
            return Err(Error::NotSquarefree);
        }
        Ok(HyperCurve { f, genus: (d - 1) / 2 })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.f.ctx()
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Infinity ramifies exactly when deg f is odd.
    pub fn branches_at_infinity(&self) -> bool {
        self.f.deg() % 2 == 1
    }

    /// Base change along a ring embedding.
    pub fn lift(&self, emb: &Embedding) -> Result<HyperCurve> {
        HyperCurve::new(self.f.lift(emb)?)
    }

    /// The 2g + 2 branch points over a splitting extension of the base
    /// field, together with that extension. The extension degree is capped
    /// by `opts.max_ext` counted over the prime field.
    pub fn branch_divisor(&self, opts: &SearchOptions) -> Result<(BranchDivisor, FieldCtx)> {
        let rel_cap = opts.max_ext / self.ctx().degree();
        if rel_cap == 0 {
            return Err(Error::BoundExceeded(format!(
                "base field degree {} already exceeds max_ext {}",
                self.ctx().degree(),
                opts.max_ext
            )));
        }
        let split = self.f.splitting_context(rel_cap)?;
        let lifted = if split == *self.ctx() {
            self.f.clone()
        } else {
            self.f.lift(&embedding(self.ctx(), &split)?)?
        };
        let mut finite = lifted.linear_roots()?;
        finite.sort();
        let divisor = BranchDivisor {
            finite_points: finite,
            includes_infinity: self.branches_at_infinity(),
        };
        debug_assert_eq!(divisor.len(), 2 * self.genus + 2);
        Ok((divisor, split))
    }
}

/// The branch locus of a hyperelliptic cover on the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDivisor {
    /// Distinct roots of f over the splitting context, sorted.
    pub finite_points: Vec<Fq>,
    /// True exactly for odd-degree models.
    pub includes_infinity: bool,
}

impl BranchDivisor {
    pub fn len(&self) -> usize {
        self.finite_points.len() + usize::from(self.includes_infinity)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All branch points as projective points, finite ones first (sorted),
    /// then infinity.
    pub fn points(&self) -> Vec<ProjPoint> {
        let mut out: Vec<ProjPoint> =
            self.finite_points.iter().cloned().map(ProjPoint::Finite).collect();
        if self.includes_infinity {
            out.push(ProjPoint::Infinity);
        }
        out
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        match p {
            ProjPoint::Infinity => self.includes_infinity,
            ProjPoint::Finite(v) => self.finite_points.binary_search(v).is_ok(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldCtx {
        FieldCtx::prime_field(p).unwrap()
    }

    #[test]
    fn genus_from_degree() {
        let f11 = fp(11);
        let c = HyperCurve::new(Poly::from_i64_coeffs(&f11, &[1, 0, 0, 0, 1, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.genus(), 3); // y^2 = x^8 + x^4 + 1
        let f19 = fp(19);
        let c = HyperCurve::new(Poly::from_i64_coeffs(&f19, &[1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.genus(), 2); // y^2 = x^5 + 1
        // (x - 1)^2 (x + 1) has a repeated root.
        let f7 = fp(7);
        let bad = Poly::from_i64_coeffs(&f7, &[1, -1, -1, 1]);
        assert_eq!(HyperCurve::new(bad), Err(Error::NotSquarefree));
        assert_eq!(
            HyperCurve::new(Poly::from_i64_coeffs(&f7, &[1, 0, 1])),
            Err(Error::DegreeTooSmall(2))
        );
    }

    #[test]
    fn branch_divisor_counts() {
        let opts = SearchOptions::default();
        let f11 = fp(11);
        // Even degree: 8 finite branch points, no infinity.
        let c = HyperCurve::new(Poly::from_i64_coeffs(&f11, &[1, 0, 0, 0, 1, 0, 0, 0, 1])).unwrap();
        let (b, split) = c.branch_divisor(&opts).unwrap();
        assert_eq!(b.finite_points.len(), 8);
        assert!(!b.includes_infinity);
        assert_eq!(split.degree(), 2); // 12th roots of unity live in F_121
        // Odd degree: 5 finite plus infinity.
        let c = HyperCurve::new(Poly::from_i64_coeffs(&f11, &[1, 0, 0, 0, 0, 1])).unwrap();
        let (b, _) = c.branch_divisor(&opts).unwrap();
        assert_eq!(b.finite_points.len(), 5);
        assert!(b.includes_infinity);
        assert_eq!(b.len(), 2 * c.genus() + 2);
        // Degree 3: 4 branch points in total (2g + 2 with g = 1).
        let f7 = fp(7);
        let c = HyperCurve::new(Poly::from_i64_coeffs(&f7, &[0, -1, 0, 1])).unwrap();
        let (b, _) = c.branch_divisor(&opts).unwrap();
        assert_eq!(b.len(), 4);
    }

    #[test]
    fn cross_ratio_with_infinity() {
        let f7 = fp(7);
        // (0, 1; -1, inf) = (0 - (-1)) / (1 - (-1)) = 1/2 = 4 mod 7.
        let cr = cross_ratio(
            &ProjPoint::Finite(f7.zero()),
            &ProjPoint::Finite(f7.one()),
            &ProjPoint::Finite(f7.from_i64(-1)),
            &ProjPoint::Infinity,
            &f7,
        )
        .unwrap();
        assert_eq!(cr, f7.from_u64(4));
    }
}
