//! The cyclic group `G = <g>` of order m, its total order `1 < g < ... < g^(m-1)`,
//! and the group algebra `A = F_p[Z_m]`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::{PrimeField, Scalar};
use crate::report::Report;

/// Default cap on the number of scalars a single dense object may hold.
pub const DEFAULT_ENTRY_LIMIT: u128 = 10_000_000;

/// `g^exp`, with `exp` reduced mod m.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct GroupElt(pub(crate) usize);

impl GroupElt {
    pub const IDENTITY: GroupElt = GroupElt(0);

    pub fn exp(self) -> usize {
        self.0
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "g"),
            e => write!(f, "g^{e}"),
        }
    }
}

/// Element of `A`; `coeffs[i]` is the coefficient of `g^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElt {
    coeffs: Vec<Scalar>,
}

impl AlgElt {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, x: GroupElt) -> Scalar {
        self.coeffs[x.0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero `(g^i, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (GroupElt, Scalar)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (GroupElt(i), c))
    }
}

impl fmt::Display for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (x, c) in self.support() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c == Scalar::ONE {
                write!(f, "{x}")?;
            } else {
                write!(f, "{c}*{x}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Group order, field, and the precomputed Q-membership table.
#[derive(Clone, Debug)]
pub struct GroupCtx {
    order: usize,
    field: PrimeField,
    // q_table[x * m + y] = x ∈ Q(y)
    q_table: Vec<bool>,
    entry_limit: u128,
}

impl PartialEq for GroupCtx {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.field == other.field
    }
}

impl Eq for GroupCtx {}

impl GroupCtx {
    /// Validates that `p` is an odd prime dividing `order`.
    pub fn new(order: usize, p: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if !(order as u64).is_multiple_of(p) {
            return Err(Error::CharDoesNotDivideOrder { p, order: order as u64 });
        }
        let mut q_table = vec![false; order * order];
        for x in 0..order {
            for y in 0..order {
                // x ∈ Q(y)  iff  x·y < y  in the total order
                q_table[x * order + y] = (x + y) % order < y;
            }
        }
        Ok(Self {
            order,
            field,
            q_table,
            entry_limit: DEFAULT_ENTRY_LIMIT,
        })
    }

    /// Replaces the resource guard limit (`u128::MAX` disables it).
    pub fn with_entry_limit(mut self, limit: u128) -> Self {
        self.entry_limit = limit;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn entry_limit(&self) -> u128 {
        self.entry_limit
    }

    /// Refuses dense objects with more than the configured number of scalars.
    pub fn guard(&self, entries: u128) -> Result<()> {
        if entries > self.entry_limit {
            Err(Error::ResourceGuard {
                entries,
                limit: self.entry_limit,
            })
        } else {
            Ok(())
        }
    }

    /// `m^n`, checked against the guard after scaling by `width`.
    pub fn tuple_count(&self, n: usize, width: usize) -> Result<usize> {
        let count = (self.order as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        self.guard(count.saturating_mul(width as u128))?;
        Ok(count as usize)
    }

    pub fn elt(&self, exp: i64) -> GroupElt {
        GroupElt(exp.rem_euclid(self.order as i64) as usize)
    }

    pub fn g(&self) -> GroupElt {
        self.elt(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElt> {
        (0..self.order).map(GroupElt)
    }

    pub fn mul(&self, x: GroupElt, y: GroupElt) -> GroupElt {
        GroupElt((x.0 + y.0) % self.order)
    }

    pub fn inv(&self, x: GroupElt) -> GroupElt {
        GroupElt((self.order - x.0) % self.order)
    }

    pub fn pow(&self, x: GroupElt, k: usize) -> GroupElt {
        GroupElt((x.0 * (k % self.order)) % self.order)
    }

    /// Is `x ∈ Q(y)`, i.e. `x·y < y`.
    pub fn in_q(&self, x: GroupElt, y: GroupElt) -> bool {
        self.q_table[x.0 * self.order + y.0]
    }

    /// The set `Q(x)` in increasing order.
    pub fn q_set(&self, x: GroupElt) -> Vec<GroupElt> {
        self.elements().filter(|&y| self.in_q(x, y)).collect()
    }

    // --- the algebra A ---

    fn check(&self, a: &AlgElt) -> Result<()> {
        if a.coeffs.len() == self.order {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn alg_from(&self, coeffs: Vec<Scalar>) -> Result<AlgElt> {
        let a = AlgElt { coeffs };
        self.check(&a)?;
        Ok(a)
    }

    pub fn alg_from_ints(&self, coeffs: &[i64]) -> Result<AlgElt> {
        self.alg_from(coeffs.iter().map(|&c| self.field.elem(c)).collect())
    }

    pub fn zero(&self) -> AlgElt {
        AlgElt {
            coeffs: vec![Scalar::ZERO; self.order],
        }
    }

    pub fn one(&self) -> AlgElt {
        self.monomial(GroupElt::IDENTITY, Scalar::ONE)
    }

    pub fn monomial(&self, x: GroupElt, c: Scalar) -> AlgElt {
        let mut a = self.zero();
        a.coeffs[x.0] = c;
        a
    }

    /// `[x]_g = 1 + g + ... + g^(i-1)` for `x = g^i`; zero for `x = 1`.
    pub fn bracket_int(&self, x: GroupElt) -> AlgElt {
        let mut a = self.zero();
        for c in &mut a.coeffs[..x.0] {
            *c = Scalar::ONE;
        }
        a
    }

    /// The norm element `T = 1 + g + ... + g^(m-1)`.
    pub fn norm_t(&self) -> AlgElt {
        AlgElt {
            coeffs: vec![Scalar::ONE; self.order],
        }
    }

    pub fn add(&self, a: &AlgElt, b: &AlgElt) -> Result<AlgElt> {
        self.check(a)?;
        self.check(b)?;
        Ok(AlgElt {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.field.add(x, y))
                .collect(),
        })
    }

    pub fn sub(&self, a: &AlgElt, b: &AlgElt) -> Result<AlgElt> {
        self.check(a)?;
        self.check(b)?;
        Ok(AlgElt {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.field.sub(x, y))
                .collect(),
        })
    }

    pub fn scale(&self, a: &AlgElt, c: Scalar) -> Result<AlgElt> {
        self.check(a)?;
        Ok(AlgElt {
            coeffs: a.coeffs.iter().map(|&x| self.field.mul(x, c)).collect(),
        })
    }

    /// Product in `A` (cyclic convolution).
    pub fn mul_alg(&self, a: &AlgElt, b: &AlgElt) -> Result<AlgElt> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for (x, ca) in a.support() {
            for (y, cb) in b.support() {
                let k = (x.0 + y.0) % self.order;
                out.coeffs[k] = self.field.mul_add(out.coeffs[k], ca, cb);
            }
        }
        Ok(out)
    }

    /// `x · a` for a group element `x` (a cyclic shift of coefficients).
    pub fn shift(&self, a: &AlgElt, x: GroupElt) -> AlgElt {
        let m = self.order;
        let mut out = self.zero();
        for (i, &c) in a.coeffs.iter().enumerate() {
            out.coeffs[(i + x.0) % m] = c;
        }
        out
    }

    /// `(g - 1) · a`
    pub fn mul_gm1(&self, a: &AlgElt) -> Result<AlgElt> {
        self.check(a)?;
        self.sub(&self.shift(a, self.g()), a)
    }

    /// `a += c · x`
    pub fn add_monomial(&self, a: &mut AlgElt, x: GroupElt, c: Scalar) {
        a.coeffs[x.0] = self.field.add(a.coeffs[x.0], c);
    }

    /// Augmentation: the sum of the coefficients.
    pub fn epsilon(&self, a: &AlgElt) -> Scalar {
        a.coeffs.iter().fold(Scalar::ZERO, |acc, &c| self.field.add(acc, c))
    }

    /// `β¹(g^i) = ε[g^i]_g = i mod p`.
    pub fn beta1(&self, x: GroupElt) -> Scalar {
        self.field.from_u64(x.0 as u64)
    }

    /// The coefficient `a(i_1, ..., i_k)` of the comparison map `s`:
    /// `a(i) = g^(m-1-i)` and `a(i_1..i_{k+1}) = a(i_1..i_k) · g^(m-(i_{k+1}+k+1))`.
    pub fn a_coeff(&self, tuple: &[usize]) -> Result<GroupElt> {
        let (&first, rest) = tuple.split_first().ok_or(Error::EmptyTuple)?;
        let m = self.order as i64;
        let mut acc = self.elt(m - 1 - first as i64);
        for (k, &i) in rest.iter().enumerate() {
            // rest[k] is i_{k+2}; the exponent uses the preceding length k+1
            let len = k as i64 + 1;
            acc = self.mul(acc, self.elt(m - (i as i64 + len + 1)));
        }
        Ok(acc)
    }

    // --- identity suites ---

    /// Exhaustive check of the pairwise and triple Q-set rules.
    pub fn verify_q_lemmas(&self) -> Report {
        let mut report = Report::new("q_lemmas");
        let one = GroupElt::IDENTITY;
        for x in self.elements() {
            report.check(!self.in_q(one, x) && !self.in_q(x, one), || {
                (format!("x={x}"), "1 ∉ Q(x), x ∉ Q(1)".into(), "violated".into())
            });
            if x != one {
                report.check(self.in_q(self.inv(x), x), || {
                    (format!("x={x}"), "x⁻¹ ∈ Q(x)".into(), "violated".into())
                });
            }
            for y in self.elements() {
                report.check(self.in_q(x, y) == self.in_q(y, x), || {
                    (format!("x={x}, y={y}"), "symmetric".into(), "asymmetric".into())
                });
                report.check(self.in_q(x, y) == (x.0 + y.0 >= self.order), || {
                    (format!("x={x}, y={y}"), "i+j >= m".into(), "mismatch".into())
                });
                for z in self.elements() {
                    let xy = self.mul(x, y);
                    let yz = self.mul(y, z);
                    let xq = self.in_q(x, y);
                    let yq = self.in_q(y, z);
                    let lhs = self.in_q(xy, z);
                    let rhs = self.in_q(x, yz);
                    let ok = match (xq, yq) {
                        (true, true) if xy != one && yz != one => lhs == rhs,
                        (true, true) if xy == one && yz != one => !rhs,
                        (true, true) => true,
                        (false, true) => lhs && !rhs,
                        (false, false) => lhs == rhs,
                        (true, false) => true,
                    };
                    report.check(ok, || {
                        (
                            format!("x={x}, y={y}, z={z}"),
                            "propagation rule".into(),
                            format!("xy∈Q(z)={lhs}, x∈Q(yz)={rhs}"),
                        )
                    });
                }
            }
        }
        report
    }

    /// `x[y]_g - [xy]_g + [x]_g` is `T` when `x ∈ Q(y)` and zero otherwise.
    pub fn verify_telescope(&self) -> Report {
        let mut report = Report::new("telescope");
        let t = self.norm_t();
        for x in self.elements() {
            for y in self.elements() {
                let lhs = self.shift(&self.bracket_int(y), x);
                let lhs = self.sub(&lhs, &self.bracket_int(self.mul(x, y))).unwrap();
                let lhs = self.add(&lhs, &self.bracket_int(x)).unwrap();
                let expected = if self.in_q(x, y) { t.clone() } else { self.zero() };
                report.check(lhs == expected, || {
                    (format!("x={x}, y={y}"), expected.to_string(), lhs.to_string())
                });
            }
        }
        report
    }

    /// The shift identities satisfied by `a(i_1..i_k)`, for every tuple with
    /// `k <= max_k`.
    pub fn verify_a_shift(&self, max_k: usize) -> Report {
        let mut report = Report::new("a_shift");
        let m = self.order;
        let g = self.g();
        let a = |t: &[usize]| self.a_coeff(t).unwrap();
        let eq = |report: &mut Report, label: &str, t: &[usize], l: GroupElt, r: GroupElt| {
            report.check(l == r, || (format!("{label} at {t:?}"), r.to_string(), l.to_string()));
        };
        for k in 1..=max_k {
            for tuple in crate::complexes::tuples(m, k) {
                let t = tuple.as_slice();
                let with = |pos: usize, v: usize| {
                    let mut u = t.to_vec();
                    u[pos] = v;
                    u
                };
                // a(0, ..) g = a(m-1, ..)
                if t[0] == 0 {
                    eq(&mut report, "a(0,..)g", t, self.mul(a(t), g), a(&with(0, m - 1)));
                } else {
                    eq(&mut report, "a(i,..)g", t, self.mul(a(t), g), a(&with(0, t[0] - 1)));
                }
                for j in 0..k.saturating_sub(1) {
                    let (ij, ij1) = (t[j], t[j + 1]);
                    let set2 = |u: usize, v: usize| {
                        let mut w = t.to_vec();
                        w[j] = u;
                        w[j + 1] = v;
                        w
                    };
                    eq(&mut report, "swap ends", t, a(&set2(m - 1, 0)), a(&set2(0, m - 1)));
                    if ij >= 1 {
                        eq(&mut report, "lower j", t, a(&set2(ij - 1, 0)), a(&with(j + 1, m - 1)));
                    }
                    if ij1 >= 1 {
                        eq(&mut report, "lower j+1", t, a(&set2(0, ij1 - 1)), a(&with(j, m - 1)));
                    }
                    if ij >= 1 && ij1 >= 1 {
                        eq(
                            &mut report,
                            "e_j vs e_j+1",
                            t,
                            a(&with(j, ij - 1)),
                            a(&with(j + 1, ij1 - 1)),
                        );
                    }
                }
                let last = k - 1;
                eq(
                    &mut report,
                    "wrap last",
                    t,
                    a(&with(last, m - 1)),
                    self.mul(a(&with(last, 0)), g),
                );
                if t[last] >= 1 {
                    eq(
                        &mut report,
                        "lower last",
                        t,
                        a(&with(last, t[last] - 1)),
                        self.mul(a(t), g),
                    );
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: usize, p: u64) -> GroupCtx {
        GroupCtx::new(m, p).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            GroupCtx::new(4, 3),
            Err(Error::CharDoesNotDivideOrder { p: 3, order: 4 })
        );
        assert_eq!(GroupCtx::new(4, 2), Err(Error::NotOddPrime(2)));
        assert_eq!(GroupCtx::new(9, 9), Err(Error::NotOddPrime(9)));
        assert!(GroupCtx::new(10, 5).is_ok());
    }

    #[test]
    fn group_mul_examples() {
        let c = ctx(3, 3);
        assert_eq!(c.mul(c.elt(1), c.elt(2)), GroupElt::IDENTITY);
        assert_eq!(c.mul(GroupElt::IDENTITY, c.g()), c.g());
        let c = ctx(9, 3);
        assert_eq!(c.mul(c.elt(5), c.elt(7)), c.elt(3));
    }

    #[test]
    fn q_sets_at_order_three() {
        let c = ctx(3, 3);
        assert!(c.q_set(c.elt(0)).is_empty());
        assert_eq!(c.q_set(c.elt(1)), vec![c.elt(2)]);
        assert_eq!(c.q_set(c.elt(2)), vec![c.elt(1), c.elt(2)]);
    }

    #[test]
    fn bracket_int_and_norm() {
        let c = ctx(3, 3);
        assert_eq!(c.bracket_int(c.g()), c.one());
        assert_eq!(c.bracket_int(GroupElt::IDENTITY), c.zero());
        assert_eq!(c.bracket_int(c.elt(2)), c.alg_from_ints(&[1, 1, 0]).unwrap());
        assert_eq!(c.norm_t(), c.alg_from_ints(&[1, 1, 1]).unwrap());
        assert_eq!(c.mul_gm1(&c.norm_t()).unwrap(), c.zero());
        assert_eq!(c.epsilon(&c.norm_t()), Scalar::ZERO);
    }

    #[test]
    fn algebra_arithmetic() {
        let c = ctx(3, 3);
        let gm1_x = c.mul_gm1(&c.bracket_int(c.elt(2))).unwrap();
        assert_eq!(gm1_x, c.alg_from_ints(&[-1, 0, 1]).unwrap());
        let a = c.alg_from_ints(&[2, 0, 1]).unwrap();
        assert_eq!(c.mul_alg(&a, &c.one()).unwrap(), a);
        assert_eq!(c.mul_alg(&c.norm_t(), &c.norm_t()).unwrap(), c.zero());
        let c9 = ctx(9, 3);
        assert_eq!(c9.add(&a, &c9.one()), Err(Error::ContextMismatch));
    }

    #[test]
    fn epsilon_examples() {
        let c = ctx(3, 3);
        for x in c.elements() {
            assert_eq!(c.epsilon(&c.monomial(x, Scalar::ONE)), Scalar::ONE);
        }
        assert_eq!(c.epsilon(&c.bracket_int(c.elt(2))), Scalar(2));
    }

    #[test]
    fn beta1_is_additive() {
        let c = ctx(3, 3);
        assert_eq!(c.beta1(c.elt(2)), Scalar(2));
        assert_eq!(c.beta1(GroupElt::IDENTITY), Scalar::ZERO);
        for (m, p) in [(9, 3), (10, 5), (5, 5)] {
            let c = ctx(m, p);
            let f = c.field();
            for x in c.elements() {
                assert_eq!(c.beta1(x), c.epsilon(&c.bracket_int(x)));
                for y in c.elements() {
                    assert_eq!(c.beta1(c.mul(x, y)), f.add(c.beta1(x), c.beta1(y)));
                }
            }
        }
    }

    #[test]
    fn a_coeff_examples() {
        let c = ctx(3, 3);
        assert_eq!(c.a_coeff(&[0]).unwrap(), c.elt(2));
        assert_eq!(c.a_coeff(&[0, 0]).unwrap(), GroupElt::IDENTITY);
        assert_eq!(c.mul(c.a_coeff(&[0]).unwrap(), c.g()), c.a_coeff(&[2]).unwrap());
        assert_eq!(c.a_coeff(&[]), Err(Error::EmptyTuple));
    }

    #[test]
    fn identity_suites() {
        for (m, p) in [(3, 3), (9, 3)] {
            let c = ctx(m, p);
            assert!(c.verify_q_lemmas().passed());
            assert!(c.verify_telescope().passed());
            assert!(c.verify_a_shift(3).passed());
        }
    }
}
