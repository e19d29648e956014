//! Exact arithmetic in F_p (p an odd prime) and explicit extensions F_{p^k}.
//!
//! An extension is represented as F_p[x]/(m(x)) for a monic irreducible
//! modulus m of degree k; elements are coordinate vectors in the power basis
//! of x. All choices are deterministic: when no modulus is supplied the
//! lexicographically smallest monic irreducible is generated, square roots
//! return the lexicographically smaller of the two candidates, and
//! embeddings send the source generator to the lexicographically smallest
//! root of the source modulus in the target field. Everything is exact
//! integer arithmetic; there is no floating point in this crate.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest admissible characteristic (exclusive). Products of two residues
/// must fit in u64 without overflow.
pub const MAX_PRIME: u64 = 1 << 31;

/// Hard cap on extension degrees; all desk-scale work stays far below it.
pub const MAX_DEGREE: usize = 32;

#[derive(Debug)]
struct CtxData {
    p: u64,
    k: usize,
    /// Monic modulus, ascending coefficients, length k + 1.
    modulus: Vec<u64>,
}

/// Arithmetic context for F_{p^k}. Cheap to clone (shared handle) and
/// immutable after construction, so freely shareable across threads.
#[derive(Clone)]
pub struct FieldCtx(Arc<CtxData>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.k == other.0.k
                && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx({self})")
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{} (modulus {})", self.0.p, self.0.k, poly_str(&self.0.modulus))
        }
    }
}

fn poly_str(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}*x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}*x^{i}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

impl FieldCtx {
    /// Builds the arithmetic context for F_{p^k}.
    ///
    /// `p` must be an odd prime below 2^31 and `k >= 1`. For `k >= 2` the
    /// modulus, when supplied, must be monic of degree k and irreducible
    /// over F_p; when omitted, the lexicographically smallest monic
    /// irreducible (comparing ascending coefficient vectors) is generated,
    /// so identical inputs always yield identical fields.
    pub fn new(p: u64, k: usize, modulus: Option<&[u64]>) -> Result<FieldCtx> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if p < 2 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= MAX_PRIME {
            return Err(Error::RangeViolation(format!("p = {p} exceeds 2^31 - 1")));
        }
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(k));
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k + 1 {
                    return Err(Error::BadModulus(format!(
                        "expected degree {k}, got coefficient list of length {}",
                        m.len()
                    )));
                }
                let m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if m[k] != 1 {
                    return Err(Error::BadModulus("modulus is not monic".to_string()));
                }
                if k >= 2 && !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => {
                if k == 1 {
                    vec![0, 1] // x
                } else {
                    smallest_irreducible(p, k)
                }
            }
        };
        Ok(FieldCtx(Arc::new(CtxData { p, k, modulus })))
    }

    /// The prime field F_p.
    pub fn prime_field(p: u64) -> Result<FieldCtx> {
        FieldCtx::new(p, 1, None)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Extension degree over F_p.
    pub fn degree(&self) -> usize {
        self.0.k
    }

    /// Ascending coefficients of the monic modulus (length degree + 1).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Field order p^k.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.0.p).pow(self.0.k as u32)
    }

    /// Field order as u64 when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        let mut n: u64 = 1;
        for _ in 0..self.0.k {
            n = n.checked_mul(self.0.p)?;
        }
        Some(n)
    }

    pub fn zero(&self) -> Fq {
        Fq { ctx: self.clone(), coeffs: vec![0; self.0.k] }
    }

    pub fn one(&self) -> Fq {
        self.from_u64(1)
    }

    /// Constant element (reduced mod p).
    pub fn from_u64(&self, c: u64) -> Fq {
        let mut coeffs = vec![0; self.0.k];
        coeffs[0] = c % self.0.p;
        Fq { ctx: self.clone(), coeffs }
    }

    /// Constant element from a signed integer.
    pub fn from_i64(&self, c: i64) -> Fq {
        let p = self.0.p as i64;
        self.from_u64(c.rem_euclid(p) as u64)
    }

    /// Element from a coordinate vector (entries reduced mod p, length
    /// must be at most the degree; missing high coordinates are zero).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fq> {
        if coeffs.len() > self.0.k {
            return Err(Error::BadModulus(format!(
                "coordinate vector of length {} in a degree-{} extension",
                coeffs.len(),
                self.0.k
            )));
        }
        let mut v = vec![0; self.0.k];
        for (i, &c) in coeffs.iter().enumerate() {
            v[i] = c % self.0.p;
        }
        Ok(Fq { ctx: self.clone(), coeffs: v })
    }

    /// The class of x in F_p[x]/(m). For k = 1 this is the reduction of x
    /// modulo the linear modulus, i.e. a constant.
    pub fn generator(&self) -> Fq {
        if self.0.k == 1 {
            // x = -m[0] mod (x + m[0])
            let c = (self.0.p - self.0.modulus[0] % self.0.p) % self.0.p;
            self.from_u64(c)
        } else {
            let mut coeffs = vec![0; self.0.k];
            coeffs[1] = 1;
            Fq { ctx: self.clone(), coeffs }
        }
    }

    /// All field elements in lexicographic coordinate order (c_0 first).
    pub fn elements(&self) -> Elements {
        Elements { ctx: self.clone(), next: Some(vec![0; self.0.k]) }
    }

    fn assert_same(&self, other: &FieldCtx) {
        assert!(self == other, "mixed field contexts: {self} vs {other}");
    }
}

/// Iterator over all elements of a field in lexicographic coordinate order.
pub struct Elements {
    ctx: FieldCtx,
    next: Option<Vec<u64>>,
}

impl Iterator for Elements {
    type Item = Fq;

    fn next(&mut self) -> Option<Fq> {
        let cur = self.next.take()?;
        let out = Fq { ctx: self.ctx.clone(), coeffs: cur.clone() };
        // Odometer with the last coordinate fastest: that is exactly
        // ascending lexicographic order on (c_0, ..., c_{k-1}).
        let p = self.ctx.p();
        let mut cur = cur;
        for i in (0..cur.len()).rev() {
            cur[i] += 1;
            if cur[i] < p {
                self.next = Some(cur);
                return Some(out);
            }
            cur[i] = 0;
        }
        self.next = None;
        Some(out)
    }
}

/// An element of F_{p^k}: coordinates in the power basis, reduced into [0, p).
///
/// Arithmetic operators panic when the operands belong to different
/// contexts; public entry points that may legitimately receive values from
/// different fields check first and return `Error::MixedFields`.
#[derive(Clone)]
pub struct Fq {
    ctx: FieldCtx,
    coeffs: Vec<u64>,
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.coeffs == other.coeffs
    }
}
impl Eq for Fq {}

impl PartialOrd for Fq {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fq {
    /// Lexicographic order on coordinate vectors; total within one field.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert!(self.ctx == other.ctx);
        self.coeffs.cmp(&other.coeffs)
    }
}

impl std::hash::Hash for Fq {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.p().hash(state);
        self.ctx.degree().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.degree() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "[")?;
            for (i, c) in self.coeffs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")
        }
    }
}

impl Fq {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// Coordinates in the power basis, ascending, reduced into [0, p).
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// The constant value when this element lies in the prime field.
    pub fn as_prime_value(&self) -> Option<u64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Fq) -> Fq {
        self.ctx.assert_same(&rhs.ctx);
        let p = self.ctx.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Fq { ctx: self.ctx.clone(), coeffs }
    }

    pub fn sub(&self, rhs: &Fq) -> Fq {
        self.ctx.assert_same(&rhs.ctx);
        let p = self.ctx.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Fq { ctx: self.ctx.clone(), coeffs }
    }

    pub fn neg(&self) -> Fq {
        let p = self.ctx.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        Fq { ctx: self.ctx.clone(), coeffs }
    }

    pub fn mul(&self, rhs: &Fq) -> Fq {
        self.ctx.assert_same(&rhs.ctx);
        let p = self.ctx.p();
        let k = self.ctx.degree();
        if k == 1 {
            return Fq {
                ctx: self.ctx.clone(),
                coeffs: vec![self.coeffs[0] * rhs.coeffs[0] % p],
            };
        }
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        // Reduce modulo the monic modulus.
        let m = self.ctx.modulus();
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                if m[j] != 0 {
                    let sub = c * m[j] % p;
                    prod[i - k + j] = (prod[i - k + j] + p - sub) % p;
                }
            }
        }
        prod.truncate(k);
        Fq { ctx: self.ctx.clone(), coeffs: prod }
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    pub fn inv(&self) -> Result<Fq> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.ctx.p();
        if self.ctx.degree() == 1 {
            return Ok(Fq {
                ctx: self.ctx.clone(),
                coeffs: vec![mod_inv(self.coeffs[0], p)],
            });
        }
        // Extended Euclid in F_p[x] against the modulus.
        let (g, u) = rp_ext_gcd(&rp_trim(self.coeffs.clone()), self.ctx.modulus(), p);
        debug_assert_eq!(g.len(), 1, "modulus must be irreducible");
        let scale = mod_inv(g[0], p);
        let mut coeffs = vec![0; self.ctx.degree()];
        for (i, &c) in u.iter().enumerate() {
            coeffs[i] = c * scale % p;
        }
        Ok(Fq { ctx: self.ctx.clone(), coeffs })
    }

    pub fn div(&self, rhs: &Fq) -> Result<Fq> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Binary powering with a machine-word exponent.
    pub fn pow(&self, mut e: u64) -> Fq {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Binary powering with an arbitrary-size exponent. Extension orders
    /// p^k - 1 overflow u64 already at modest parameters, so character and
    /// square-root computations route through this.
    pub fn pow_big(&self, e: &BigUint) -> Fq {
        let mut acc = self.ctx.one();
        if e.is_zero() {
            return acc;
        }
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc);
            if e.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }

    /// Quadratic character: 0 for zero, 1 for nonzero squares, -1 otherwise.
    pub fn chi(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let e = (self.ctx.order() - BigUint::one()) >> 1;
        let v = self.pow_big(&e);
        if v.is_one() {
            1
        } else {
            -1
        }
    }

    pub fn is_square(&self) -> bool {
        self.chi() >= 0
    }

    /// Square root via Tonelli-Shanks. Returns the lexicographically
    /// smaller of the two roots; `None` when the element is not a square.
    pub fn sqrt(&self) -> Option<Fq> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.chi() != 1 {
            return None;
        }
        let q1 = self.ctx.order() - BigUint::one();
        let r = if (q1.clone() >> 1u32).bit(0) {
            // q == 3 mod 4: direct exponentiation.
            let e = (self.ctx.order() + BigUint::one()) >> 2;
            self.pow_big(&e)
        } else {
            self.tonelli_shanks(&q1)
        };
        debug_assert_eq!(r.mul(&r), *self);
        let rn = r.neg();
        Some(if r <= rn { r } else { rn })
    }

    fn tonelli_shanks(&self, q1: &BigUint) -> Fq {
        let mut s = 0u32;
        let mut t = q1.clone();
        while !t.bit(0) {
            t >>= 1;
            s += 1;
        }
        let z = nonresidue(&self.ctx);
        let mut m = s;
        let mut c = z.pow_big(&t);
        let mut u = self.pow_big(&t);
        let mut r = self.pow_big(&((&t + BigUint::one()) >> 1));
        while !u.is_one() {
            let mut i = 0u32;
            let mut probe = u.clone();
            while !probe.is_one() {
                probe = probe.mul(&probe);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = b.mul(&b);
            }
            m = i;
            c = b.mul(&b);
            u = u.mul(&c);
            r = r.mul(&b);
        }
        r
    }
}

/// First element in lexicographic order with quadratic character -1.
fn nonresidue(ctx: &FieldCtx) -> Fq {
    for a in ctx.elements() {
        if a.chi() == -1 {
            return a;
        }
    }
    unreachable!("every field of odd order has a nonresidue")
}

// --- ring embeddings -------------------------------------------------------

/// A ring embedding F_{p^k} -> F_{p^n} with k | n, determined by the image
/// of the source power-basis generator.
#[derive(Clone, Debug)]
pub struct Embedding {
    src: FieldCtx,
    dst: FieldCtx,
    gen_image: Fq,
}

impl Embedding {
    /// Identity embedding of a field into itself.
    pub fn identity(ctx: &FieldCtx) -> Embedding {
        Embedding { src: ctx.clone(), dst: ctx.clone(), gen_image: ctx.generator() }
    }

    /// Builds an embedding from a precomputed generator image; verifies the
    /// image is a root of the source modulus in the target field.
    pub fn from_gen_image(src: &FieldCtx, dst: &FieldCtx, gen_image: Fq) -> Result<Embedding> {
        if src.p() != dst.p() || dst.degree() % src.degree() != 0 {
            return Err(Error::IncompatibleDegrees);
        }
        if gen_image.ctx() != dst {
            return Err(Error::MixedFields);
        }
        let val = eval_base_poly(src.modulus(), &gen_image, dst);
        if !val.is_zero() {
            return Err(Error::BadModulus(
                "generator image is not a root of the source modulus".to_string(),
            ));
        }
        Ok(Embedding { src: src.clone(), dst: dst.clone(), gen_image })
    }

    /// Deterministic embedding located by exhausting the target field for
    /// roots of the source modulus and taking the lexicographically
    /// smallest. Intended for small targets; larger targets are served by
    /// the gcd-based root finder in `upoly`.
    pub fn new_exhaustive(src: &FieldCtx, dst: &FieldCtx, bound: u64) -> Result<Embedding> {
        if src.p() != dst.p() || dst.degree() % src.degree() != 0 {
            return Err(Error::IncompatibleDegrees);
        }
        if src == dst {
            return Ok(Embedding::identity(src));
        }
        match dst.order_u64() {
            Some(n) if n <= bound => {}
            _ => {
                return Err(Error::FieldTooLarge {
                    size_log2: dst.order().bits() as u32,
                    bound_log2: 63 - bound.leading_zeros(),
                })
            }
        }
        let root = dst
            .elements()
            .find(|cand| eval_base_poly(src.modulus(), cand, dst).is_zero())
            .expect("source modulus must split in a compatible extension");
        Ok(Embedding { src: src.clone(), dst: dst.clone(), gen_image: root })
    }

    pub fn src(&self) -> &FieldCtx {
        &self.src
    }

    pub fn dst(&self) -> &FieldCtx {
        &self.dst
    }

    /// Image of one element.
    pub fn apply(&self, a: &Fq) -> Result<Fq> {
        if a.ctx() != &self.src {
            return Err(Error::MixedFields);
        }
        Ok(eval_base_poly(a.coeffs(), &self.gen_image, &self.dst))
    }
}

/// Evaluates a polynomial with F_p coefficients at a point of `ctx`.
fn eval_base_poly(coeffs: &[u64], at: &Fq, ctx: &FieldCtx) -> Fq {
    let mut acc = ctx.zero();
    for &c in coeffs.iter().rev() {
        acc = acc.mul(at);
        if c != 0 {
            acc = acc.add(&ctx.from_u64(c));
        }
    }
    acc
}

// --- primality and raw F_p[x] helpers --------------------------------------

/// Deterministic trial-division primality test; sufficient for p < 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Extended Euclid on integers.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of non-unit");
    t0.rem_euclid(p as i128) as u64
}

fn rp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rp_trim(out)
}

/// Remainder of `a` modulo monic `m`.
fn rp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for j in 0..dm {
                let sub = c * m[j] % p;
                r[shift + j] = (r[shift + j] + p - sub) % p;
            }
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn rp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let b = rp_trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    let mut r: Vec<u64> = rp_trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while r.len() >= b.len() {
        let c = *r.last().unwrap() * lead_inv % p;
        let shift = r.len() - b.len();
        q[shift] = c;
        for j in 0..=db {
            let sub = c * b[j] % p;
            r[shift + j] = (r[shift + j] + p - sub) % p;
        }
        // The leading term cancels by construction of c.
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    (rp_trim(q), r)
}

fn rp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = rp_trim(a.to_vec());
    let mut r1 = rp_trim(b.to_vec());
    while !r1.is_empty() {
        let (_, r) = rp_divrem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    if let Some(&lead) = r0.last() {
        if lead != 1 {
            let inv = mod_inv(lead, p);
            for c in &mut r0 {
                *c = *c * inv % p;
            }
        }
    }
    r0
}

/// Extended gcd returning (g, u) with u*a == g (mod m).
fn rp_ext_gcd(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r0 = rp_trim(m.to_vec());
    let mut r1 = rp_trim(a.to_vec());
    let mut t0: Vec<u64> = Vec::new();
    let mut t1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = rp_divrem(&r0, &r1, p);
        let qt1 = rp_mul(&q, &t1, p);
        let mut nt = vec![0u64; t0.len().max(qt1.len())];
        for (i, c) in nt.iter_mut().enumerate() {
            let x = t0.get(i).copied().unwrap_or(0);
            let y = qt1.get(i).copied().unwrap_or(0);
            *c = (x + p - y) % p;
        }
        let nt = rp_trim(nt);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = nt;
    }
    (r0, t0)
}

/// x^(p^d) mod m for d = 1..=steps, returned as the ladder of intermediate
/// values (index d-1 holds x^(p^d) mod m).
fn frobenius_ladder(m: &[u64], p: u64, steps: usize) -> Vec<Vec<u64>> {
    let x = vec![0u64, 1];
    let mut g = rp_rem(&x, m, p);
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        g = rp_powmod(&g, p, m, p);
        out.push(g.clone());
    }
    out
}

/// base^e mod monic m over F_p.
fn rp_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rp_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rp_rem(&rp_mul(&acc, &b, p), m, p);
        }
        b = rp_rem(&rp_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Irreducibility over F_p of a monic polynomial of degree k >= 2:
/// x^(p^k) == x (mod m), and gcd(x^(p^(k/l)) - x, m) = 1 for every prime
/// l dividing k.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    let ladder = frobenius_ladder(m, p, k);
    // x^(p^k) == x mod m
    let x = rp_rem(&[0, 1], m, p);
    if ladder[k - 1] != x {
        return false;
    }
    for l in prime_divisors(k as u64) {
        let d = k / l as usize;
        let diff = rp_sub(&ladder[d - 1], &x, p);
        let g = rp_gcd(&diff, m, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn rp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, c) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *c = (x + p - y) % p;
    }
    rp_trim(out)
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest monic irreducible of degree k over F_p, comparing ascending
/// coefficient vectors (c_0, ..., c_{k-1}) lexicographically.
fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    let mut low = vec![0u64; k];
    loop {
        let mut m = low.clone();
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
        // Lexicographic successor: bump the last coordinate first.
        let mut i = k;
        loop {
            assert!(i > 0, "no irreducible of degree {k} over F_{p}?");
            i -= 1;
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> FieldCtx {
        FieldCtx::prime_field(7).unwrap()
    }

    #[test]
    fn make_field_validates() {
        assert!(FieldCtx::prime_field(7).is_ok());
        assert_eq!(FieldCtx::new(2, 1, None), Err(Error::EvenCharacteristic));
        assert_eq!(FieldCtx::new(9, 1, None), Err(Error::NotPrime(9)));
        assert_eq!(FieldCtx::new(3, 2, Some(&[0, 0, 1])), Err(Error::ReducibleModulus));
        // x^2 + 1 is irreducible mod 3 (-1 is a non-residue).
        let f9 = FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f9.order_u64(), Some(9));
    }

    #[test]
    fn generated_modulus_is_deterministic_and_minimal() {
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]); // x^2 + 1
        let f9b = FieldCtx::new(3, 2, None).unwrap();
        assert_eq!(f9, f9b);
        let f49 = FieldCtx::new(7, 2, None).unwrap();
        assert_eq!(f49.modulus(), &[1, 0, 1]); // -1 non-residue mod 7
    }

    #[test]
    fn inverse_in_f7() {
        let f = f7();
        let a = f.from_u64(3);
        assert_eq!(a.inv().unwrap(), f.from_u64(5)); // 3 * 5 = 15 = 1 mod 7
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn sqrt_in_f7() {
        let f = f7();
        // 3^2 = 2 and 4^2 = 2; the smaller root is returned.
        assert_eq!(f.from_u64(2).sqrt(), Some(f.from_u64(3)));
        // 3 is a non-residue mod 7 (squares are 1, 2, 4).
        assert_eq!(f.from_u64(3).sqrt(), None);
        assert_eq!(f.zero().sqrt(), Some(f.zero()));
    }

    #[test]
    fn sqrt_counts_match_theory() {
        // Squares (including 0) number (q + 1) / 2.
        for ctx in [
            FieldCtx::prime_field(7).unwrap(),
            FieldCtx::prime_field(11).unwrap(),
            FieldCtx::new(3, 2, None).unwrap(),
            FieldCtx::new(5, 3, None).unwrap(),
            FieldCtx::new(7, 2, None).unwrap(),
        ] {
            let q = ctx.order_u64().unwrap();
            let mut n_squares = 0u64;
            for a in ctx.elements() {
                match a.sqrt() {
                    Some(r) => {
                        assert_eq!(r.mul(&r), a);
                        n_squares += 1;
                    }
                    None => assert_eq!(a.chi(), -1),
                }
            }
            assert_eq!(n_squares, (q + 1) / 2, "field {ctx}");
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_prime_field() {
        for ctx in [FieldCtx::new(3, 2, None).unwrap(), FieldCtx::new(5, 2, None).unwrap(), FieldCtx::new(3, 4, None).unwrap()] {
            let p = ctx.p();
            let mut fixed = 0u64;
            for a in ctx.elements() {
                let fa = a.pow(p);
                // Additivity spot check against a shifted element.
                let b = a.add(&ctx.one());
                assert_eq!(b.pow(p), fa.add(&ctx.one().pow(p)));
                if fa == a {
                    fixed += 1;
                }
            }
            assert_eq!(fixed, p, "Frobenius must fix exactly F_p inside {ctx}");
        }
    }

    #[test]
    fn embedding_is_a_ring_hom() {
        let f7 = f7();
        let f49 = FieldCtx::new(7, 2, None).unwrap();
        let emb = Embedding::new_exhaustive(&f7, &f49, 1 << 20).unwrap();
        // The prime subfield is fixed pointwise.
        assert_eq!(emb.apply(&f7.from_u64(5)).unwrap(), f49.from_u64(5));
        assert_eq!(emb.apply(&f7.zero()).unwrap(), f49.zero());
        assert_eq!(emb.apply(&f7.one()).unwrap(), f49.one());
        for a in f7.elements() {
            for b in f7.elements() {
                let lhs = emb.apply(&a.mul(&b)).unwrap();
                let rhs = emb.apply(&a).unwrap().mul(&emb.apply(&b).unwrap());
                assert_eq!(lhs, rhs);
                let lhs = emb.apply(&a.add(&b)).unwrap();
                let rhs = emb.apply(&a).unwrap().add(&emb.apply(&b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn embedding_picks_lex_smallest_root() {
        let f9 = FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap();
        let f81 = FieldCtx::new(3, 4, None).unwrap();
        let emb = Embedding::new_exhaustive(&f9, &f81, 1 << 20).unwrap();
        // Collect both roots of x^2 + 1 in F_81 by exhaustion and compare.
        let roots: Vec<Fq> = f81
            .elements()
            .filter(|c| c.mul(c).add(&f81.one()).is_zero())
            .collect();
        assert_eq!(roots.len(), 2);
        let min = roots.iter().min().unwrap();
        assert_eq!(&emb.apply(&f9.generator()).unwrap(), min);
    }

    #[test]
    #[should_panic(expected = "mixed field contexts")]
    fn mixed_field_arithmetic_panics() {
        let a = FieldCtx::prime_field(7).unwrap().one();
        let b = FieldCtx::prime_field(11).unwrap().one();
        let _ = a.add(&b);
    }

    #[test]
    fn element_order_is_lexicographic() {
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        let all: Vec<Fq> = f9.elements().collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0].coeffs(), &[0, 0]);
        assert_eq!(all[1].coeffs(), &[0, 1]);
        assert_eq!(all[3].coeffs(), &[1, 0]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }
}
