//! Dense univariate polynomials over a field context.
//!
//! Carrier for curve right-hand sides f(x) and for the powering that feeds
//! the Cartier-Manin matrix. Coefficients are stored ascending with no
//! trailing zeros (the zero polynomial has an empty coefficient list).
//! Root finding comes in two flavors: `roots_in_field` scans the whole
//! field and is bounded by `SearchOptions::exhaustion_bound`, while
//! `linear_roots` extracts roots through gcd splitting and works in any
//! field size; the two are cross-checked against each other in tests.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ff::{Embedding, FieldCtx, Fq};

/// Dense univariate polynomial over `ctx`, ascending coefficients, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: FieldCtx,
    coeffs: Vec<Fq>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_var("x"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_var("x"))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.coeffs.len(), &self.coeffs).cmp(&(other.coeffs.len(), &other.coeffs))
    }
}

impl Poly {
    pub fn zero(ctx: &FieldCtx) -> Poly {
        Poly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly::constant(ctx.one())
    }

    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly { ctx: ctx.clone(), coeffs: vec![ctx.zero(), ctx.one()] }
    }

    pub fn constant(c: Fq) -> Poly {
        let ctx = c.ctx().clone();
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        Poly { ctx, coeffs }
    }

    /// From ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(ctx: &FieldCtx, coeffs: Vec<Fq>) -> Result<Poly> {
        for c in &coeffs {
            if c.ctx() != ctx {
                return Err(Error::MixedFields);
            }
        }
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, Fq::is_zero) {
            coeffs.pop();
        }
        Ok(Poly { ctx: ctx.clone(), coeffs })
    }

    /// From ascending machine-integer coefficients (reduced mod p).
    pub fn from_u64_coeffs(ctx: &FieldCtx, coeffs: &[u64]) -> Poly {
        let v = coeffs.iter().map(|&c| ctx.from_u64(c)).collect();
        Poly::from_coeffs(ctx, v).expect("same ctx by construction")
    }

    /// From ascending signed coefficients (reduced mod p).
    pub fn from_i64_coeffs(ctx: &FieldCtx, coeffs: &[i64]) -> Poly {
        let v = coeffs.iter().map(|&c| ctx.from_i64(c)).collect();
        Poly::from_coeffs(ctx, v).expect("same ctx by construction")
    }

    /// Monic product of (x - r) over the given roots.
    pub fn from_roots(ctx: &FieldCtx, roots: &[Fq]) -> Result<Poly> {
        let mut acc = Poly::one(ctx);
        for r in roots {
            if r.ctx() != ctx {
                return Err(Error::MixedFields);
            }
            let lin = Poly::from_coeffs(ctx, vec![r.neg(), ctx.one()])?;
            acc = acc.mul(&lin);
        }
        Ok(acc)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree treating zero as 0; convenient for genus arithmetic where the
    /// zero polynomial never appears.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&Fq> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        assert!(self.ctx == rhs.ctx, "mixed field contexts");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Poly::from_coeffs(&self.ctx, out).unwrap()
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        assert!(self.ctx == rhs.ctx, "mixed field contexts");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&rhs.coeff(i)));
        }
        Poly::from_coeffs(&self.ctx, out).unwrap()
    }

    pub fn neg(&self) -> Poly {
        let out = self.coeffs.iter().map(Fq::neg).collect();
        Poly { ctx: self.ctx.clone(), coeffs: out }
    }

    pub fn scale(&self, c: &Fq) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let out = self.coeffs.iter().map(|a| a.mul(c)).collect();
        Poly { ctx: self.ctx.clone(), coeffs: out }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        assert!(self.ctx == rhs.ctx, "mixed field contexts");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ctx);
        }
        if self.ctx.degree() == 1 {
            return self.mul_prime_field(rhs);
        }
        let mut out = vec![self.ctx.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(&self.ctx, out).unwrap()
    }

    /// Convolution over F_p with u128 accumulators; this is the hot path of
    /// Cartier-Manin powering, where degrees reach deg(f) * (p-1)/2.
    fn mul_prime_field(&self, rhs: &Poly) -> Poly {
        let p = self.ctx.p() as u128;
        let a: Vec<u64> = self.coeffs.iter().map(|c| c.coeffs()[0]).collect();
        let b: Vec<u64> = rhs.coeffs.iter().map(|c| c.coeffs()[0]).collect();
        let mut out = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u128;
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y as u128;
            }
        }
        let coeffs = out.into_iter().map(|v| self.ctx.from_u64((v % p) as u64)).collect();
        Poly::from_coeffs(&self.ctx, coeffs).unwrap()
    }

    /// Quotient and remainder; `DivisionByZero` when the divisor is zero.
    pub fn divrem(&self, rhs: &Poly) -> Result<(Poly, Poly)> {
        if self.ctx != rhs.ctx {
            return Err(Error::MixedFields);
        }
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = rhs.coeffs.len() - 1;
        let lead_inv = rhs.leading().unwrap().inv()?;
        let mut r = self.coeffs.clone();
        if r.len() < rhs.coeffs.len() {
            return Ok((Poly::zero(&self.ctx), self.clone()));
        }
        let mut q = vec![self.ctx.zero(); r.len() - db];
        while r.len() >= rhs.coeffs.len() {
            let c = r.last().unwrap().mul(&lead_inv);
            let shift = r.len() - rhs.coeffs.len();
            for j in 0..=db {
                let sub = c.mul(&rhs.coeffs[j]);
                r[shift + j] = r[shift + j].sub(&sub);
            }
            q[shift] = c;
            r.pop();
            while r.last().map_or(false, Fq::is_zero) {
                r.pop();
            }
        }
        Ok((
            Poly::from_coeffs(&self.ctx, q)?,
            Poly::from_coeffs(&self.ctx, r)?,
        ))
    }

    pub fn rem(&self, rhs: &Poly) -> Result<Poly> {
        Ok(self.divrem(rhs)?.1)
    }

    /// Monic greatest common divisor (gcd(0, 0) = 0).
    pub fn gcd(&self, rhs: &Poly) -> Result<Poly> {
        if self.ctx != rhs.ctx {
            return Err(Error::MixedFields);
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.ctx);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.ctx.from_u64(i as u64)))
            .collect();
        Poly::from_coeffs(&self.ctx, out).unwrap()
    }

    pub fn eval(&self, at: &Fq) -> Fq {
        assert!(at.ctx() == &self.ctx, "mixed field contexts");
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// f^e by binary powering.
    pub fn pow(&self, e: u64) -> Poly {
        let mut acc = Poly::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// base^e mod m with an arbitrary-size exponent.
    pub fn powmod_big(&self, e: &BigUint, m: &Poly) -> Result<Poly> {
        let mut acc = Poly::one(&self.ctx).rem(m)?;
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc).rem(m)?;
            if e.bit(i) {
                acc = acc.mul(self).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Applies a ring embedding to every coefficient.
    pub fn lift(&self, emb: &Embedding) -> Result<Poly> {
        let coeffs: Result<Vec<Fq>> = self.coeffs.iter().map(|c| emb.apply(c)).collect();
        Poly::from_coeffs(emb.dst(), coeffs?)
    }

    /// True iff gcd(f, f') is constant. `ZeroPolynomial` on zero input.
    /// A vanishing derivative (f a polynomial in x^p) correctly reports
    /// non-squarefree, since gcd(f, 0) = f.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative())?;
        Ok(g.deg() == 0)
    }

    /// All roots in `target` (an extension of this polynomial's field),
    /// found by exhaustive evaluation; multiplicity ignored. Errors with
    /// `FieldTooLarge` when |target| exceeds `bound`.
    pub fn roots_in_field(&self, target: &FieldCtx, bound: u64) -> Result<Vec<Fq>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match target.order_u64() {
            Some(n) if n <= bound => {}
            _ => {
                return Err(Error::FieldTooLarge {
                    size_log2: target.order().bits() as u32,
                    bound_log2: 63 - bound.leading_zeros(),
                })
            }
        }
        let lifted;
        let f = if target == &self.ctx {
            self
        } else {
            let emb = embedding(&self.ctx, target)?;
            lifted = self.lift(&emb)?;
            &lifted
        };
        let mut out: Vec<Fq> = target.elements().filter(|a| f.eval(a).is_zero()).collect();
        out.sort();
        Ok(out)
    }

    /// All roots in this polynomial's own field, via gcd splitting; exact
    /// in any field size and deterministic (candidates are swept in
    /// lexicographic order).
    pub fn linear_roots(&self) -> Result<Vec<Fq>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.deg() == 0 {
            return Ok(Vec::new());
        }
        // Split off the product of linear factors: gcd(x^Q - x, f).
        let xq = self.frobenius_power(1)?;
        let linear_part = xq.sub(&Poly::x(&self.ctx).rem(self)?).gcd(self)?;
        let mut out = Vec::new();
        extract_roots(&linear_part, &mut out)?;
        out.sort();
        Ok(out)
    }

    /// x^(Q^d) mod f where Q is the order of the coefficient field,
    /// computed by iterated p-power maps.
    fn frobenius_power(&self, d: usize) -> Result<Poly> {
        let p = BigUint::from(self.ctx.p());
        let steps = self.ctx.degree() * d;
        let mut g = Poly::x(&self.ctx).rem(self)?;
        for _ in 0..steps {
            g = g.powmod_big(&p, self)?;
        }
        Ok(g)
    }

    /// Number of roots of a squarefree `self` in the extension of relative
    /// degree `d`, as deg gcd(x^(Q^d) - x, f). The extension itself is not
    /// constructed.
    pub fn count_roots_in_extension(&self, d: usize) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.frobenius_power(d)?;
        let diff = g.sub(&Poly::x(&self.ctx).rem(self)?);
        Ok(self.gcd(&diff)?.deg())
    }

    /// Smallest relative extension degree d <= max_degree over which a
    /// squarefree `self` splits into linear factors, tested by counting
    /// roots degree by degree. Returns the extension as a fresh context of
    /// absolute degree d * [base : F_p].
    pub fn splitting_context(&self, max_degree: usize) -> Result<FieldCtx> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let want = self.deg();
        for d in 1..=max_degree {
            if self.count_roots_in_extension(d)? == want {
                let abs = d * self.ctx.degree();
                return if abs == self.ctx.degree() {
                    Ok(self.ctx.clone())
                } else {
                    FieldCtx::new(self.ctx.p(), abs, None)
                };
            }
        }
        Err(Error::BoundExceeded(format!(
            "no splitting field within relative degree {max_degree}"
        )))
    }

    pub fn to_string_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && i > 0 { None } else { Some(c.to_string()) };
            let term = match (i, coeff) {
                (0, Some(s)) => s,
                (1, None) => var.to_string(),
                (1, Some(s)) => format!("{s}*{var}"),
                (i, None) => format!("{var}^{i}"),
                (i, Some(s)) => format!("{s}*{var}^{i}"),
                (_, None) => unreachable!(),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// Deterministic recursive root extraction from a product of distinct
/// linear factors: sweep shifts c in lexicographic order and split with
/// gcd(h, (x + c)^((Q-1)/2) - 1). The sweep always terminates: once c
/// reaches the negative of a root, that root is peeled off directly.
fn extract_roots(h: &Poly, out: &mut Vec<Fq>) -> Result<()> {
    let ctx = h.ctx().clone();
    match h.deg() {
        0 => return Ok(()),
        1 => {
            let r = h.coeff(0).neg().div(&h.coeff(1))?;
            out.push(r);
            return Ok(());
        }
        _ => {}
    }
    let half = (ctx.order() - BigUint::one()) >> 1;
    for c in ctx.elements() {
        let shift = Poly::from_coeffs(&ctx, vec![c.clone(), ctx.one()])?;
        if h.eval(&c.neg()).is_zero() {
            out.push(c.neg());
            let rest = h.divrem(&shift)?.0;
            return extract_roots(&rest, out);
        }
        let probe = shift.powmod_big(&half, h)?;
        let d = probe.sub(&Poly::one(&ctx)).gcd(h)?;
        if d.deg() > 0 && d.deg() < h.deg() {
            let (quot, rem) = h.divrem(&d)?;
            debug_assert!(rem.is_zero());
            extract_roots(&d, out)?;
            extract_roots(&quot, out)?;
            return Ok(());
        }
    }
    unreachable!("a product of distinct linear factors always splits")
}

/// Ring embedding located through the gcd-based root finder: the source
/// generator goes to the lexicographically smallest root of the source
/// modulus in the target. Works for targets of any size.
pub fn embedding(src: &FieldCtx, dst: &FieldCtx) -> Result<Embedding> {
    if src == dst {
        return Ok(Embedding::identity(src));
    }
    if src.p() != dst.p() || dst.degree() % src.degree() != 0 {
        return Err(Error::IncompatibleDegrees);
    }
    let m = Poly::from_u64_coeffs(dst, src.modulus());
    let roots = m.linear_roots()?;
    let root = roots
        .into_iter()
        .min()
        .expect("source modulus splits in any extension of compatible degree");
    Embedding::from_gen_image(src, dst, root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldCtx {
        FieldCtx::prime_field(p).unwrap()
    }

    #[test]
    fn gcd_of_quadratic_and_linear() {
        let f7 = fp(7);
        let f = Poly::from_i64_coeffs(&f7, &[-1, 0, 1]); // x^2 - 1
        let g = Poly::from_i64_coeffs(&f7, &[-1, 1]); // x - 1
        assert_eq!(f.gcd(&g).unwrap(), g);
    }

    #[test]
    fn cube_of_x3_minus_x() {
        let f7 = fp(7);
        let f = Poly::from_i64_coeffs(&f7, &[0, -1, 0, 1]); // x^3 - x
        let cube = f.pow(3);
        // x^9 - 3x^7 + 3x^5 - x^3 by the binomial theorem.
        let expect = Poly::from_i64_coeffs(&f7, &[0, 0, 0, -1, 0, 3, 0, -3, 0, 1]);
        assert_eq!(cube, expect);
    }

    #[test]
    fn long_division_example() {
        let f5 = fp(5);
        let num = Poly::from_i64_coeffs(&f5, &[0, 0, 0, 0, 1]); // x^4
        let den = Poly::from_i64_coeffs(&f5, &[1, 0, 1]); // x^2 + 1
        let (q, r) = num.divrem(&den).unwrap();
        assert_eq!(q, Poly::from_i64_coeffs(&f5, &[-1, 0, 1])); // x^2 - 1
        assert_eq!(r, Poly::one(&f5));
        assert_eq!(
            num.divrem(&Poly::zero(&f5)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn squarefree_detection() {
        let f7 = fp(7);
        assert!(Poly::from_i64_coeffs(&f7, &[-1, 0, 1]).is_squarefree().unwrap());
        // (x - 1)^2 = x^2 - 2x + 1
        assert!(!Poly::from_i64_coeffs(&f7, &[1, -2, 1]).is_squarefree().unwrap());
        let f5 = fp(5);
        assert!(Poly::from_i64_coeffs(&f5, &[1, 0, 0, 0, 1, 0, 0, 0, 1])
            .is_squarefree()
            .unwrap()); // x^8 + x^4 + 1 over F_5
        // x^5 over F_5 has zero derivative; still correctly non-squarefree.
        assert!(!Poly::from_i64_coeffs(&f5, &[0, 0, 0, 0, 0, 1]).is_squarefree().unwrap());
        assert_eq!(Poly::zero(&f5).is_squarefree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn roots_of_x8_minus_1() {
        let f7 = fp(7);
        let f = Poly::from_i64_coeffs(&f7, &[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        // Only +-1 in F_7: the unit group has order 6.
        let roots = f.roots_in_field(&f7, 1 << 20).unwrap();
        assert_eq!(roots, vec![f7.from_u64(1), f7.from_u64(6)]);
        // All 8 roots appear in F_49 (8 | 48).
        let f49 = FieldCtx::new(7, 2, None).unwrap();
        let roots49 = f.roots_in_field(&f49, 1 << 20).unwrap();
        assert_eq!(roots49.len(), 8);
        // The gcd-based extractor agrees with exhaustion.
        let lifted = f.lift(&embedding(&f7, &f49).unwrap()).unwrap();
        assert_eq!(lifted.linear_roots().unwrap(), roots49);
    }

    #[test]
    fn splitting_context_degrees() {
        let f7 = fp(7);
        let sq = Poly::from_i64_coeffs(&f7, &[-1, 0, 1]); // x^2 - 1
        assert_eq!(sq.splitting_context(8).unwrap(), f7);
        let oct = Poly::from_i64_coeffs(&f7, &[-1, 0, 0, 0, 0, 0, 0, 0, 1]); // x^8 - 1
        assert_eq!(oct.splitting_context(8).unwrap().degree(), 2);
        let nr = Poly::from_i64_coeffs(&f7, &[-3, 0, 1]); // x^2 - 3, 3 a non-residue
        assert_eq!(nr.splitting_context(8).unwrap().degree(), 2);
        assert!(matches!(
            Poly::from_i64_coeffs(&fp(11), &[3, 1, 0, 0, 0, 0, 1]).splitting_context(1),
            Err(Error::BoundExceeded(_)) | Ok(_)
        ));
    }

    #[test]
    fn divrem_reconstructs_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7001);
        let ctx = FieldCtx::new(5, 2, None).unwrap();
        for _ in 0..1000 {
            let fd = rng.gen_range(0..8usize);
            let gd = rng.gen_range(0..5usize);
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng, d: usize| {
                let coeffs: Vec<Fq> = (0..=d)
                    .map(|_| {
                        ctx.from_coeffs(&[rng.gen_range(0..5u64), rng.gen_range(0..5u64)])
                            .unwrap()
                    })
                    .collect();
                Poly::from_coeffs(&ctx, coeffs).unwrap()
            };
            let f = rand_poly(&mut rng, fd);
            let g = rand_poly(&mut rng, gd);
            if g.is_zero() {
                continue;
            }
            let (q, r) = f.divrem(&g).unwrap();
            assert_eq!(q.mul(&g).add(&r), f);
            assert!(r.is_zero() || r.deg() < g.deg());
            // gcd divides both inputs.
            let d = f.gcd(&g).unwrap();
            if !d.is_zero() && !f.is_zero() {
                assert!(f.rem(&d).unwrap().is_zero());
                assert!(g.rem(&d).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn exhaustive_and_gcd_roots_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7002);
        for ctx in [fp(11), FieldCtx::new(3, 3, None).unwrap(), FieldCtx::new(5, 2, None).unwrap()] {
            let q = ctx.order_u64().unwrap();
            for _ in 0..40 {
                let d = rng.gen_range(1..7usize);
                let coeffs: Vec<Fq> = (0..=d).map(|_| {
                    let n = rng.gen_range(0..q);
                    // index into field elements deterministically
                    ctx.elements().nth(n as usize).unwrap()
                }).collect();
                let f = match Poly::from_coeffs(&ctx, coeffs) {
                    Ok(f) if !f.is_zero() => f,
                    _ => continue,
                };
                let a = f.roots_in_field(&ctx, 1 << 20).unwrap();
                let b = f.linear_roots().unwrap();
                assert_eq!(a, b, "mismatch for {f} over {ctx}");
            }
        }
    }
}
