//! Small finite fields `GF(p^f)` with `q <= 1024`, and the projective line.
//!
//! An element is its coefficient vector over `GF(p)` in the polynomial basis,
//! packed as the integer `sum c_i p^i`. That integer order is the enumeration
//! order used everywhere.

use crate::error::{Error, Result};
use crate::arith::prime_factors;

pub const MAX_FIELD_SIZE: usize = 1024;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: usize,
    f: usize,
    q: usize,
    /// Monic, low degree first, length `f + 1`.
    modulus: Vec<usize>,
    primitive: usize,
    exp: Vec<usize>,
    log: Vec<usize>,
}

fn poly_trim(a: &mut Vec<usize>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo monic `m` over `GF(p)`.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().expect("non-empty");
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Monic polynomial of degree `deg` whose lower coefficients, read low degree
/// first as base-`p` digits with `c_0` most significant, spell `index`.
fn monic_from_index(mut index: usize, deg: usize, p: usize) -> Vec<usize> {
    let mut coeffs = vec![0; deg + 1];
    for i in (0..deg).rev() {
        coeffs[i] = index % p;
        index /= p;
    }
    coeffs[deg] = 1;
    coeffs
}

fn is_irreducible(m: &[usize], p: usize) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d as u32) {
            let divisor = monic_from_index(idx, d, p);
            if poly_rem(m, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Field of size `q`, a prime power at most 1024.
    pub fn new(q: usize) -> Result<Self> {
        if !(2..=MAX_FIELD_SIZE).contains(&q) {
            return Err(Error::InvalidParameter(format!(
                "field size {q} outside 2..={MAX_FIELD_SIZE}"
            )));
        }
        let factors = prime_factors(q as u64);
        if factors.len() != 1 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        let p = factors[0] as usize;
        let f = q.ilog(p) as usize;

        // Smallest monic irreducible, coefficients compared low degree first.
        let modulus = (0..p.pow(f as u32))
            .map(|i| monic_from_index(i, f, p))
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree");

        let mut field = FiniteField {
            p,
            f,
            q,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let primitive = (1..q)
            .find(|&a| field.slow_order(a) == q - 1)
            .expect("the multiplicative group is cyclic");
        for r in prime_factors((q - 1) as u64) {
            assert_ne!(field.slow_pow(primitive, (q - 1) / r as usize), 1);
        }
        field.primitive = primitive;
        field.exp = Vec::with_capacity(q - 1);
        field.log = vec![usize::MAX; q];
        let mut x = 1;
        for i in 0..q - 1 {
            field.exp.push(x);
            field.log[x] = i;
            x = field.slow_mul(x, primitive);
        }
        Ok(field)
    }

    fn to_poly(&self, mut a: usize) -> Vec<usize> {
        let mut c = Vec::with_capacity(self.f);
        for _ in 0..self.f {
            c.push(a % self.p);
            a /= self.p;
        }
        poly_trim(&mut c);
        c
    }

    fn from_poly(&self, c: &[usize]) -> usize {
        c.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    fn slow_mul(&self, a: usize, b: usize) -> usize {
        let prod = poly_mul(&self.to_poly(a), &self.to_poly(b), self.p);
        self.from_poly(&poly_rem(&prod, &self.modulus, self.p))
    }

    fn slow_pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| self.slow_mul(acc, a))
    }

    fn slow_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.slow_mul(x, a);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.f
    }

    pub fn size(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn primitive_element(&self) -> usize {
        self.primitive
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.f {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.f {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)])
    }

    /// `beta^i` for the stored primitive element `beta`.
    pub fn primitive_power(&self, i: usize) -> usize {
        self.exp[i % (self.q - 1)]
    }
}

/// Points `[x : 1]` labelled by the field element `x`, then infinity `[1 : 0]`
/// labelled `q`.
#[derive(Clone, Debug)]
pub struct ProjectiveLine {
    field: FiniteField,
}

impl ProjectiveLine {
    pub fn new(field: FiniteField) -> Self {
        ProjectiveLine { field }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.field.size() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn infinity(&self) -> usize {
        self.field.size()
    }

    /// Label of the point spanned by the row vector `(x, y) != (0, 0)`.
    pub fn point(&self, x: usize, y: usize) -> usize {
        match self.field.inv(y) {
            Some(yi) => self.field.mul(x, yi),
            None => self.infinity(),
        }
    }

    /// Image of `point` under the row-vector action of `[[a, b], [c, d]]`.
    pub fn apply(&self, point: usize, [a, b, c, d]: [usize; 4]) -> usize {
        let fld = &self.field;
        let (x, y) = if point == self.infinity() { (1, 0) } else { (point, 1) };
        let nx = fld.add(fld.mul(x, a), fld.mul(y, c));
        let ny = fld.add(fld.mul(x, b), fld.mul(y, d));
        self.point(nx, ny)
    }
}
