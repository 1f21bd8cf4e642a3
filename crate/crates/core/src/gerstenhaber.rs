//! The Gerstenhaber bracket on `H^{*+1}(G, K) ⊗ A`, computed three ways:
//!
//! * [`closed_bracket`]: `[β^n⊗x, β^k⊗y] = (φ(n,y) - φ(k,x)) β^{n+k-1}⊗xy`,
//! * [`transferred_bracket`]: the γ-formula on cochains of `C ⊗ A`,
//! * [`oracle_bracket`]: `ψ`, the Hochschild bracket, `φ`, then `s ⊗ id`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::comparison::{beta_n, beta_value, s_tensor, s_value_with};
use crate::complexes::{hoch_bracket, hoch_diff, phi, psi, GroupCochain, HochCochain, TensorCochain};
use crate::error::{Error, Result};
use crate::group_algebra::{AlgElt, GroupCtx, GroupElt};
use crate::modp::Scalar;
use crate::report::Report;

/// `coeff · β^degree ⊗ exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BasisClass {
    pub degree: usize,
    pub exp: GroupElt,
    pub coeff: Scalar,
}

impl BasisClass {
    /// `β^n ⊗ g^i`.
    pub fn new(ctx: &GroupCtx, degree: usize, exp: i64) -> Self {
        Self {
            degree,
            exp: ctx.elt(exp),
            coeff: Scalar::ONE,
        }
    }

    pub fn with_coeff(mut self, coeff: Scalar) -> Self {
        self.coeff = coeff;
        self
    }
}

impl fmt::Display for BasisClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff != Scalar::ONE {
            write!(f, "{}*", self.coeff)?;
        }
        write!(f, "β^{}⊗{}", self.degree, self.exp)
    }
}

/// A finite sum of basis classes, keyed by `(degree, exponent)` with no zero
/// coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedElt {
    terms: BTreeMap<(usize, usize), Scalar>,
}

impl GradedElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_class(ctx: &GroupCtx, c: BasisClass) -> Self {
        let mut out = Self::zero();
        out.add_term(ctx, c);
        out
    }

    /// `a ⊗ (class of degree n)`, one term per nonzero coefficient of `a`.
    pub fn from_alg(ctx: &GroupCtx, degree: usize, a: &AlgElt) -> Self {
        let mut out = Self::zero();
        for (x, c) in a.support() {
            out.add_term(
                ctx,
                BasisClass {
                    degree,
                    exp: x,
                    coeff: c,
                },
            );
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing `(degree, exponent)` order.
    pub fn terms(&self) -> impl Iterator<Item = BasisClass> + '_ {
        self.terms.iter().map(|(&(degree, exp), &coeff)| BasisClass {
            degree,
            exp: GroupElt(exp),
            coeff,
        })
    }

    pub fn add_term(&mut self, ctx: &GroupCtx, c: BasisClass) {
        if c.coeff.is_zero() {
            return;
        }
        let key = (c.degree, c.exp.exp());
        let v = ctx
            .field()
            .add(self.terms.get(&key).copied().unwrap_or(Scalar::ZERO), c.coeff);
        if v.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    pub fn add(&self, ctx: &GroupCtx, other: &Self) -> Self {
        let mut out = self.clone();
        for c in other.terms() {
            out.add_term(ctx, c);
        }
        out
    }

    pub fn scale(&self, ctx: &GroupCtx, s: Scalar) -> Self {
        let mut out = Self::zero();
        for mut c in self.terms() {
            c.coeff = ctx.field().mul(c.coeff, s);
            out.add_term(ctx, c);
        }
        out
    }
}

impl fmt::Display for GradedElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn sign(ctx: &GroupCtx, e: i64) -> Scalar {
    ctx.field().sign(e)
}

/// `(-1)^{(n-1)(k-1)}` with the degree shift, so degree 0 counts as odd.
fn koszul(ctx: &GroupCtx, n: usize, k: usize) -> Scalar {
    sign(ctx, (n as i64 - 1) * (k as i64 - 1))
}

/// `φ(β^n, x)`: `β^1(x)` for odd `n`, zero for even `n`.
pub fn varphi(ctx: &GroupCtx, n: usize, x: GroupElt) -> Scalar {
    if n % 2 == 1 {
        ctx.beta1(x)
    } else {
        Scalar::ZERO
    }
}

/// `[D_i, D_j] = (j - i) D_{i+j}`, as `(coefficient, exponent)`.
pub fn witt_bracket(ctx: &GroupCtx, i: i64, j: i64) -> (Scalar, GroupElt) {
    (ctx.field().elem(j - i), ctx.elt(i + j))
}

pub fn closed_bracket(ctx: &GroupCtx, a: BasisClass, b: BasisClass) -> GradedElt {
    if a.degree + b.degree == 0 {
        return GradedElt::zero();
    }
    let f = ctx.field();
    let c = f.sub(varphi(ctx, a.degree, b.exp), varphi(ctx, b.degree, a.exp));
    GradedElt::from_class(
        ctx,
        BasisClass {
            degree: a.degree + b.degree - 1,
            exp: ctx.mul(a.exp, b.exp),
            coeff: f.mul(c, f.mul(a.coeff, b.coeff)),
        },
    )
}

/// Bilinear extension of [`closed_bracket`].
pub fn closed_bracket_graded(ctx: &GroupCtx, a: &GradedElt, b: &GradedElt) -> GradedElt {
    let mut out = GradedElt::zero();
    for x in a.terms() {
        for y in b.terms() {
            out = out.add(ctx, &closed_bracket(ctx, x, y));
        }
    }
    out
}

/// The Hochschild cochain `ψ(c · β^n ⊗ x)`.
pub fn hochschild_rep(ctx: &GroupCtx, a: BasisClass) -> Result<HochCochain> {
    let beta = beta_n(ctx, a.degree)?;
    let t = TensorCochain::pure(ctx, &beta, &ctx.monomial(a.exp, a.coeff))?;
    Ok(psi(ctx, &t))
}

/// The class in `H^n ⊗ A` of a cocycle of `C ⊗ A`.
pub fn class_of(ctx: &GroupCtx, c: &TensorCochain) -> Result<GradedElt> {
    Ok(GradedElt::from_alg(ctx, c.degree(), &s_tensor(ctx, c)?))
}

/// Computes the bracket on the Hochschild side and transfers the result back.
pub fn oracle_bracket(ctx: &GroupCtx, a: BasisClass, b: BasisClass) -> Result<GradedElt> {
    if a.degree + b.degree == 0 {
        return Ok(GradedElt::zero());
    }
    ctx.tuple_count(a.degree + b.degree - 1, ctx.order())?;
    let f = hochschild_rep(ctx, a)?;
    let h = hochschild_rep(ctx, b)?;
    class_of(ctx, &phi(ctx, &hoch_bracket(ctx, &f, &h)?))
}

fn check_gamma_args(n: usize, k: usize, slot: usize) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::DegreeTooLow {
            what: "gamma",
            min: 1,
            degree: n.min(k),
        });
    }
    if slot == 0 || slot > n {
        return Err(Error::SlotOutOfRange { slot, degree: n });
    }
    Ok(())
}

/// `γ_i(x_1..x_{n+k-1}) = α(x_1..x_{i-1}, x_i⋯x_{i+k-1} y, x_{i+k}..) · β(x_i..x_{i+k-1})`
/// for cochains given by their values.
pub fn gamma_i_value<FA, FB>(
    ctx: &GroupCtx,
    (n, alpha): (usize, &FA),
    (k, beta): (usize, &FB),
    y: GroupElt,
    slot: usize,
    tuple: &[GroupElt],
) -> Scalar
where
    FA: Fn(&[GroupElt]) -> Scalar + ?Sized,
    FB: Fn(&[GroupElt]) -> Scalar + ?Sized,
{
    debug_assert_eq!(tuple.len(), n + k - 1);
    let (lo, hi) = (slot - 1, slot - 1 + k);
    let b = beta(&tuple[lo..hi]);
    if b.is_zero() {
        return b;
    }
    let prod = tuple[lo..hi].iter().fold(y, |acc, &x| ctx.mul(acc, x));
    let mut inner = Vec::with_capacity(n);
    inner.extend_from_slice(&tuple[..lo]);
    inner.push(prod);
    inner.extend_from_slice(&tuple[hi..]);
    ctx.field().mul(alpha(&inner), b)
}

/// `γ^{(β,y)}_α = Σ_i (-1)^{(k-1)(i-1)} γ_i`, evaluated at one tuple.
pub fn gamma_value<FA, FB>(
    ctx: &GroupCtx,
    (n, alpha): (usize, &FA),
    (k, beta): (usize, &FB),
    y: GroupElt,
    tuple: &[GroupElt],
) -> Scalar
where
    FA: Fn(&[GroupElt]) -> Scalar + ?Sized,
    FB: Fn(&[GroupElt]) -> Scalar + ?Sized,
{
    let f = ctx.field();
    (1..=n).fold(Scalar::ZERO, |acc, i| {
        let s = sign(ctx, (k as i64 - 1) * (i as i64 - 1));
        f.mul_add(acc, s, gamma_i_value(ctx, (n, alpha), (k, beta), y, i, tuple))
    })
}

pub fn gamma_i(
    ctx: &GroupCtx,
    alpha: &GroupCochain,
    beta: &GroupCochain,
    y: GroupElt,
    slot: usize,
) -> Result<GroupCochain> {
    let (n, k) = (alpha.degree(), beta.degree());
    check_gamma_args(n, k, slot)?;
    let fa = |t: &[GroupElt]| alpha.at(ctx, t);
    let fb = |t: &[GroupElt]| beta.at(ctx, t);
    GroupCochain::from_fn(ctx, n + k - 1, |t| gamma_i_value(ctx, (n, &fa), (k, &fb), y, slot, t))
}

pub fn gamma(ctx: &GroupCtx, alpha: &GroupCochain, beta: &GroupCochain, y: GroupElt) -> Result<GroupCochain> {
    let (n, k) = (alpha.degree(), beta.degree());
    check_gamma_args(n, k, 1)?;
    let fa = |t: &[GroupElt]| alpha.at(ctx, t);
    let fb = |t: &[GroupElt]| beta.at(ctx, t);
    GroupCochain::from_fn(ctx, n + k - 1, |t| gamma_value(ctx, (n, &fa), (k, &fb), y, t))
}

/// `s(γ^{(β^k,y)}_{β^n})` without materializing any cochain.
pub fn s_gamma_basis(ctx: &GroupCtx, n: usize, k: usize, y: GroupElt) -> Result<Scalar> {
    check_gamma_args(n, k, 1)?;
    let b = |t: &[GroupElt]| beta_value(ctx, t);
    s_value_with(ctx, n + k - 1, |t| gamma_value(ctx, (n, &b), (k, &b), y, t))
}

/// `(γ^{(β,y)}_α - (-1)^{(n-1)(k-1)} γ^{(α,x)}_β) ⊗ xy` for `a = α⊗x`,
/// `b = β⊗y` with `α, β` the scaled basis cocycles.
pub fn transferred_bracket(ctx: &GroupCtx, a: BasisClass, b: BasisClass) -> Result<TensorCochain> {
    if a.degree == 0 || b.degree == 0 {
        return Err(Error::DegreeTooLow {
            what: "transferred_bracket",
            min: 1,
            degree: 0,
        });
    }
    let alpha = beta_n(ctx, a.degree)?.scale(ctx, a.coeff);
    let beta = beta_n(ctx, b.degree)?.scale(ctx, b.coeff);
    let left = gamma(ctx, &alpha, &beta, b.exp)?;
    let right = gamma(ctx, &beta, &alpha, a.exp)?;
    let c = left.sub(ctx, &right.scale(ctx, koszul(ctx, a.degree, b.degree)))?;
    TensorCochain::pure(ctx, &c, &ctx.monomial(ctx.mul(a.exp, b.exp), Scalar::ONE))
}

/// Expected `s(γ)` entry: `β(gy)` for odd/odd, `β(y)` for odd/even, zero when
/// the first degree is even.
pub fn s_gamma_expected(ctx: &GroupCtx, n: usize, k: usize, y: GroupElt) -> Scalar {
    match (n % 2, k % 2) {
        (1, 1) => ctx.beta1(ctx.mul(ctx.g(), y)),
        (1, 0) => ctx.beta1(y),
        _ => Scalar::ZERO,
    }
}

/// The `⊞` product `(β^n⊗x) ⊞ (β^k⊗y) = β^{n+k-1}⊗xy` on odd labels, and
/// whether `φ` is additive on the pair.
pub fn wittype_data(ctx: &GroupCtx, a: BasisClass, b: BasisClass) -> Result<(BasisClass, bool)> {
    for c in [a, b] {
        if c.degree % 2 == 0 {
            return Err(Error::EvenDegreeOperand("wittype_data"));
        }
    }
    let product = BasisClass {
        degree: a.degree + b.degree - 1,
        exp: ctx.mul(a.exp, b.exp),
        coeff: Scalar::ONE,
    };
    let lhs = varphi(ctx, product.degree, product.exp);
    let rhs = ctx
        .field()
        .add(varphi(ctx, a.degree, a.exp), varphi(ctx, b.degree, b.exp));
    Ok((product, lhs == rhs))
}

/// All `β^n ⊗ g^i` with `n` in `degrees`.
pub fn basis(ctx: &GroupCtx, degrees: std::ops::RangeInclusive<usize>) -> Vec<BasisClass> {
    degrees
        .flat_map(|n| ctx.elements().map(move |x| (n, x)))
        .map(|(degree, exp)| BasisClass {
            degree,
            exp,
            coeff: Scalar::ONE,
        })
        .collect()
}

fn pair_label(a: BasisClass, b: BasisClass) -> String {
    format!("[{a}, {b}]")
}

/// Closed form against the oracle and, when both degrees are positive, the
/// class of the transferred cochain.
pub fn check_routes(ctx: &GroupCtx, a: BasisClass, b: BasisClass, report: &mut Report) -> Result<()> {
    let closed = closed_bracket(ctx, a, b);
    let oracle = oracle_bracket(ctx, a, b)?;
    report.check(closed == oracle, || {
        (
            format!("oracle {}", pair_label(a, b)),
            closed.to_string(),
            oracle.to_string(),
        )
    });
    if a.degree > 0 && b.degree > 0 {
        let t = transferred_bracket(ctx, a, b)?;
        let transferred = class_of(ctx, &t)?;
        report.check(closed == transferred, || {
            (
                format!("transferred {}", pair_label(a, b)),
                closed.to_string(),
                transferred.to_string(),
            )
        });
    }
    Ok(())
}

/// Three-route agreement on every pair `(c β^n⊗x, c' β^k⊗y)` with degrees in
/// `degrees` and all coefficients `c, c' ∈ F_p`.
pub fn verify_oracle_exhaustive(ctx: &GroupCtx, degrees: std::ops::RangeInclusive<usize>) -> Result<Report> {
    let mut report = Report::new("oracle_equivalence");
    let classes = basis(ctx, degrees);
    for &a in &classes {
        for &b in &classes {
            for ca in ctx.field().elements() {
                for cb in ctx.field().elements() {
                    check_routes(ctx, a.with_coeff(ca), b.with_coeff(cb), &mut report)?;
                }
            }
        }
    }
    Ok(report)
}

/// Three-route agreement on `samples` random basis pairs with degrees in
/// `1..=max_degree` and random nonzero coefficients.
pub fn verify_oracle_random<R: Rng + ?Sized>(
    ctx: &GroupCtx,
    max_degree: usize,
    samples: usize,
    rng: &mut R,
) -> Result<Report> {
    let mut report = Report::new("oracle_equivalence_random");
    let m = ctx.order() as i64;
    let p = ctx.p();
    let draw = |rng: &mut R| {
        BasisClass::new(ctx, rng.random_range(1..=max_degree), rng.random_range(0..m))
            .with_coeff(Scalar(rng.random_range(1..p)))
    };
    for _ in 0..samples {
        let a = draw(rng);
        let b = draw(rng);
        check_routes(ctx, a, b, &mut report)?;
    }
    Ok(report)
}

/// `s(γ^{(β^k,y)}_{β^n})` against the four-entry table, `1 <= n, k <= max`.
pub fn verify_gamma_table(ctx: &GroupCtx, max: usize) -> Result<Report> {
    let mut report = Report::new("gamma_table");
    for n in 1..=max {
        for k in 1..=max {
            for y in ctx.elements() {
                let got = s_gamma_basis(ctx, n, k, y)?;
                let expected = s_gamma_expected(ctx, n, k, y);
                report.check(got == expected, || {
                    (format!("n={n}, k={k}, y={y}"), expected.to_string(), got.to_string())
                });
            }
        }
    }
    Ok(report)
}

/// Degree-(1,1) brackets against `[D_i, D_j] = (j - i) D_{i+j}`, through the
/// closed form and the oracle.
pub fn verify_witt(ctx: &GroupCtx) -> Result<Report> {
    let mut report = Report::new("witt");
    let m = ctx.order() as i64;
    for i in 0..m {
        for j in 0..m {
            let (c, e) = witt_bracket(ctx, i, j);
            let expected = GradedElt::from_class(
                ctx,
                BasisClass {
                    degree: 1,
                    exp: e,
                    coeff: c,
                },
            );
            let (a, b) = (BasisClass::new(ctx, 1, i), BasisClass::new(ctx, 1, j));
            let closed = closed_bracket(ctx, a, b);
            let oracle = oracle_bracket(ctx, a, b)?;
            report.check(closed == expected && oracle == expected, || {
                (
                    format!("(i,j)=({i},{j})"),
                    expected.to_string(),
                    format!("{closed} / {oracle}"),
                )
            });
        }
    }
    Ok(report)
}

/// `[β^1⊗g^i, β^n⊗g^j]` is `(j - i) β^n⊗g^{i+j}` for odd `n` (adjoint module)
/// and `j β^n⊗g^{i+j}` for even `n` (standard module).
pub fn verify_module_structure(ctx: &GroupCtx, n: usize) -> Result<Report> {
    let mut report = Report::new(format!("module_structure_n{n}"));
    let m = ctx.order() as i64;
    let f = ctx.field();
    for i in 0..m {
        for j in 0..m {
            let c = if n % 2 == 1 { f.elem(j - i) } else { f.elem(j) };
            let expected = GradedElt::from_class(
                ctx,
                BasisClass {
                    degree: n,
                    exp: ctx.elt(i + j),
                    coeff: c,
                },
            );
            let (a, b) = (BasisClass::new(ctx, 1, i), BasisClass::new(ctx, n, j));
            let closed = closed_bracket(ctx, a, b);
            let oracle = oracle_bracket(ctx, a, b)?;
            report.check(closed == expected && oracle == expected, || {
                (
                    format!("(i,j)=({i},{j})"),
                    expected.to_string(),
                    format!("{closed} / {oracle}"),
                )
            });
        }
    }
    Ok(report)
}

/// Under `β^{2r+1}⊗g^i ↦ D_i⊗t^r`, the odd part matches `W ⊗ K[t]`:
/// `[D_i⊗t^r, D_j⊗t^s] = (j - i) D_{i+j}⊗t^{r+s}`, for `r, s <= max_r`.
pub fn verify_odd_iso(ctx: &GroupCtx, max_r: usize) -> Result<Report> {
    let mut report = Report::new("odd_iso");
    let m = ctx.order() as i64;
    for r in 0..=max_r {
        for s in 0..=max_r {
            for i in 0..m {
                for j in 0..m {
                    let (c, e) = witt_bracket(ctx, i, j);
                    let degree = 2 * (r + s) + 1;
                    let expected = GradedElt::from_class(
                        ctx,
                        BasisClass {
                            degree,
                            exp: e,
                            coeff: c,
                        },
                    );
                    let a = BasisClass::new(ctx, 2 * r + 1, i);
                    let b = BasisClass::new(ctx, 2 * s + 1, j);
                    let closed = closed_bracket(ctx, a, b);
                    let oracle = oracle_bracket(ctx, a, b)?;
                    report.check(closed == expected && oracle == expected, || {
                        (
                            format!("r={r}, s={s}, (i,j)=({i},{j})"),
                            expected.to_string(),
                            format!("{closed} / {oracle}"),
                        )
                    });
                }
            }
        }
    }
    Ok(report)
}

/// `⊞` closure and `φ`-additivity on all odd labels of degree `<= max_degree`.
pub fn verify_wittype(ctx: &GroupCtx, max_degree: usize) -> Result<Report> {
    let mut report = Report::new("wittype");
    let odd: Vec<BasisClass> = basis(ctx, 1..=max_degree)
        .into_iter()
        .filter(|c| c.degree % 2 == 1)
        .collect();
    let unit = BasisClass::new(ctx, 1, 0);
    for &a in &odd {
        let (u, _) = wittype_data(ctx, unit, a)?;
        report.check(u == a, || (format!("unit ⊞ {a}"), a.to_string(), u.to_string()));
        for &b in &odd {
            let (prod, additive) = wittype_data(ctx, a, b)?;
            report.check(additive && prod.degree % 2 == 1, || {
                (format!("{a} ⊞ {b}"), "additive, odd".into(), prod.to_string())
            });
        }
    }
    Ok(report)
}

/// `[a, b] = -(-1)^{(n-1)(k-1)} [b, a]` on all basis pairs of degree `<= max`.
pub fn verify_antisymmetry(ctx: &GroupCtx, max: usize) -> Report {
    let mut report = Report::new("antisymmetry");
    let classes = basis(ctx, 0..=max);
    for &a in &classes {
        for &b in &classes {
            let lhs = closed_bracket(ctx, a, b);
            let s = ctx.field().neg(koszul(ctx, a.degree, b.degree));
            let rhs = closed_bracket(ctx, b, a).scale(ctx, s);
            report.check(lhs == rhs, || (pair_label(a, b), rhs.to_string(), lhs.to_string()));
        }
    }
    report
}

/// Brackets of two even-degree classes vanish.
pub fn verify_even_abelian(ctx: &GroupCtx, max: usize) -> Report {
    let mut report = Report::new("even_abelian");
    let even: Vec<BasisClass> = basis(ctx, 0..=max).into_iter().filter(|c| c.degree % 2 == 0).collect();
    for &a in &even {
        for &b in &even {
            let v = closed_bracket(ctx, a, b);
            report.check(v.is_zero(), || (pair_label(a, b), "0".into(), v.to_string()));
        }
    }
    report
}

/// Graded Jacobi on all basis triples with total degree `<= max_total`, with
/// `|a| = deg a - 1`.
pub fn verify_jacobi(ctx: &GroupCtx, max_total: usize) -> Report {
    let mut report = Report::new("jacobi");
    let classes = basis(ctx, 0..=max_total);
    let shifted = |c: &BasisClass| c.degree as i64 - 1;
    let br = |x: BasisClass, y: &GradedElt| closed_bracket_graded(ctx, &GradedElt::from_class(ctx, x), y);
    for &a in &classes {
        for &b in &classes {
            if a.degree + b.degree > max_total {
                continue;
            }
            for &c in &classes {
                if a.degree + b.degree + c.degree > max_total {
                    continue;
                }
                let (da, db, dc) = (shifted(&a), shifted(&b), shifted(&c));
                let t1 = br(a, &closed_bracket(ctx, b, c)).scale(ctx, sign(ctx, da * dc));
                let t2 = br(b, &closed_bracket(ctx, c, a)).scale(ctx, sign(ctx, db * da));
                let t3 = br(c, &closed_bracket(ctx, a, b)).scale(ctx, sign(ctx, dc * db));
                let sum = t1.add(ctx, &t2).add(ctx, &t3);
                report.check(sum.is_zero(), || {
                    (format!("({a}, {b}, {c})"), "0".into(), sum.to_string())
                });
            }
        }
    }
    report
}

/// `δ[f,h] = [f,δh] + (-1)^{k-1}[δf,h]` for random Hochschild cochains,
/// `k = deg h`, degrees `<= max_degree`.
pub fn verify_leibniz<R: Rng + ?Sized>(
    ctx: &GroupCtx,
    max_degree: usize,
    trials: usize,
    rng: &mut R,
) -> Result<Report> {
    let mut report = Report::new("leibniz");
    for n in 0..=max_degree {
        for k in 0..=max_degree {
            for _ in 0..trials {
                let f = HochCochain::random(ctx, n, rng)?;
                let h = HochCochain::random(ctx, k, rng)?;
                let lhs = hoch_diff(ctx, &hoch_bracket(ctx, &f, &h)?)?;
                let r1 = hoch_bracket(ctx, &f, &hoch_diff(ctx, &h)?)?;
                let r2 = hoch_bracket(ctx, &hoch_diff(ctx, &f)?, &h)?;
                let rhs = r1.add(ctx, &r2.scale(ctx, sign(ctx, k as i64 - 1)))?;
                // two 0-cochains bracket to a zero of nominal degree 0
                let ok = if rhs.degree() == lhs.degree() {
                    rhs == lhs
                } else {
                    rhs.is_zero() && lhs.is_zero()
                };
                report.check(ok, || {
                    (format!("deg f={n}, deg h={k}"), "equal".into(), "differ".into())
                });
            }
        }
    }
    Ok(report)
}
