//! Closed-form E-polynomials of SL2 character varieties and of the strata
//! of the corresponding representation varieties.
//!
//! Every family is described by its representation variety `Rep`, the
//! reducible locus `Rep^red ⊂ Rep`, and the GIT quotient `X = Rep // SL2`.
//! The irreducible part of `X` is a principal `PGL2`-quotient, so
//! `E(X^irr) = (E(Rep) - E(Rep^red)) / (q^3 - q)`.

use std::fmt;

use num_bigint::BigInt;

use crate::engine::{self, SurfaceSpec};
use crate::polyring::PolyError;
use crate::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharVarError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("inconsistent formulas: {0}")]
    NotDivisible(#[from] PolyError),
}

type Result<T> = std::result::Result<T, CharVarError>;

/// Group and parabolic data whose character variety is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharVarQuery {
    /// Free group on `n` generators.
    FreeGroup(u32),
    /// Free group on `n` generators plus `s` loops with holonomy in `[J+]`.
    FreeParabolic(u32, u32),
    /// Free abelian group of rank `n`.
    Abelian(u32),
    /// Closed surface group of genus `g`.
    Surface(u32),
    /// Genus `g` surface with `r_plus` J+, `r_minus` J- and `t` -Id punctures.
    ParabolicSurface { genus: u32, r_plus: u32, r_minus: u32, t: u32 },
}

impl CharVarQuery {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CharVarQuery::FreeGroup(0) | CharVarQuery::FreeParabolic(0, _) | CharVarQuery::Abelian(0) => {
                Err(CharVarError::InvalidQuery("rank must be at least 1".into()))
            }
            CharVarQuery::Surface(0) | CharVarQuery::ParabolicSurface { genus: 0, .. } => {
                Err(CharVarError::InvalidQuery("genus must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// Reduces to the family whose formulas apply: no J+ loops means a plain
    /// free group, and an untwisted surface with no Jordan punctures is closed.
    pub fn canonical(&self) -> CharVarQuery {
        match *self {
            CharVarQuery::FreeParabolic(n, 0) => CharVarQuery::FreeGroup(n),
            CharVarQuery::ParabolicSurface { genus, r_plus: 0, r_minus: 0, t } if t % 2 == 0 => {
                CharVarQuery::Surface(genus)
            }
            q => q,
        }
    }
}

impl fmt::Display for CharVarQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharVarQuery::FreeGroup(n) => write!(f, "free group F_{n}"),
            CharVarQuery::FreeParabolic(n, s) => write!(f, "free group F_{n} with {s} J+ loops"),
            CharVarQuery::Abelian(n) => write!(f, "abelian group Z^{n}"),
            CharVarQuery::Surface(g) => write!(f, "surface group of genus {g}"),
            CharVarQuery::ParabolicSurface { genus, r_plus, r_minus, t } => write!(
                f,
                "genus {genus} surface with r+={r_plus} r-={r_minus} t={t}"
            ),
        }
    }
}

fn q() -> Poly {
    Poly::q()
}

fn qm() -> Poly {
    Poly::q_minus_one()
}

fn qp() -> Poly {
    Poly::q_plus_one()
}

fn sl2() -> Poly {
    Poly::sl2_class()
}

fn int(n: i64) -> Poly {
    Poly::from_int(n)
}

fn two_pow(k: u32) -> Poly {
    Poly::constant(BigInt::from(2).pow(k))
}

fn pw(p: &Poly, k: u32) -> Poly {
    p.pow(k)
}

fn sign(k: u32) -> Poly {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn half(p: &Poly) -> Result<Poly> {
    Ok(p.div_int(2)?)
}

fn product(factors: &[&Poly]) -> Poly {
    factors.iter().fold(Poly::one(), |acc, f| &acc * *f)
}

/// E-polynomials of the five strata of `Rep(F_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGroupStrata {
    /// Stratum `X^ν` (hat).
    pub nu: Poly,
    /// Stratum `X^δ` (hat).
    pub delta: Poly,
    /// Central tuples, all entries `±Id`.
    pub iota: Poly,
    /// Stratum `X^ρ` (tilde).
    pub rho: Poly,
    /// Irreducible tuples.
    pub irr: Poly,
}

impl FreeGroupStrata {
    pub fn reducible(&self) -> Poly {
        &(&(&self.nu + &self.delta) + &self.iota) + &self.rho
    }

    pub fn total(&self) -> Poly {
        &self.reducible() + &self.irr
    }
}

/// `ν`, `δ`, `ι`, `ρ` strata for `n` generators; the `ρ` stratum carries the
/// factor `q^rho_exp - q`.
fn reducible_strata(n: u32, rho_exp: u32) -> Result<(Poly, Poly, Poly, Poly)> {
    let c = sl2();
    let two_n = two_pow(n);
    let nu = product(&[&two_n, &qp(), &(&pw(&q(), n) - &int(1))]);
    let delta = &half(&(&c * &(&pw(&qm(), n - 1) + &pw(&qp(), n - 1))))? - &(&two_n * &pw(&q(), 2));
    let iota = two_n.clone();
    let rho_num = product(&[&c, &(&pw(&qm(), n) - &two_n), &(&pw(&q(), rho_exp) - &q())]);
    let rho = rho_num.exact_div(&(&qm() * &q()))?;
    Ok((nu, delta, iota, rho))
}

/// Strata of `Rep(F_n)`, with the irreducible stratum as printed.
pub fn free_group_strata(n: u32) -> Result<FreeGroupStrata> {
    CharVarQuery::FreeGroup(n).validate()?;
    let c = sl2();
    let two_n = two_pow(n);
    let (nu, delta, iota, rho) = reducible_strata(n, n)?;
    let irr = &(&(&(&two_n * &pw(&q(), 2))
        - &half(&(&c * &(&pw(&qp(), n - 1) + &pw(&qm(), n - 1))))?)
        - &(&(&(&(&two_n * &q()) + &(&pw(&qm(), n) * &pw(&q(), n))) - &(&pw(&qm(), n) * &q()) - &two_n) * &qp()))
        - &two_n
        + pw(&c, n);
    Ok(FreeGroupStrata { nu, delta, iota, rho, irr })
}

/// Whether the five free-group strata add up to `(q^3 - q)^n`.
pub fn free_group_reconstruction(n: u32) -> Result<bool> {
    Ok(free_group_strata(n)?.total() == pw(&sl2(), n))
}

fn surface_rep(g: u32) -> Result<Poly> {
    let two = two_pow(2 * g - 1);
    let qq = pw(&q(), 2 * g - 1);
    let a = product(&[&two, &pw(&qm(), 2 * g - 1), &qp(), &qq]);
    let b = product(&[&two, &pw(&qp(), 2 * g - 1), &qm(), &qq]);
    let c2 = product(&[&pw(&qp(), 2 * g - 1), &pw(&qm(), 2), &qq]);
    let d2 = product(&[&pw(&qm(), 2 * g - 1), &qp(), &(&q() - &int(3)), &qq]);
    let e = &(&q() + &qq) * &pw(&(&qm() * &qp()), 2 * g - 1);
    Ok(&(&(&a + &b) + &half(&(&c2 + &d2))?) + &e)
}

fn surface_char(g: u32) -> Result<Poly> {
    let k = 2 * g - 2;
    let first = product(&[
        &(&(&(&(&two_pow(2 * g) + &(&int(2) * &pw(&qm(), k))) + &q()) - &int(1)) * &pw(&q(), k)
            + &(&(&pw(&q(), 2) + &(&int(2) * &pw(&qm(), k))) + &q())),
        &pw(&qp(), k),
    ]);
    let second = &(&(&(&(&two_pow(2 * g) - &int(1)) * &pw(&qm(), k)) - &(&pw(&qm(), k) * &q()))
        - &two_pow(2 * g + 1))
        * &pw(&q(), k);
    let third = &pw(&qm(), 2 * g - 1) * &q();
    half(&(&(&first + &second) + &third))
}

/// `((1 - q)^s - 1)/q + 1`, the alternating sum `Σ_{k=1}^{s-1} (-1)^(k+1) (q-1)^(s-k)` up to sign.
fn pi_bracket(s: u32) -> Result<Poly> {
    let one_minus_q = &int(1) - &q();
    Ok(&(&pw(&one_minus_q, s) - &int(1)).exact_div(&q())? + &int(1))
}

fn parabolic_reducible_rep(g: u32, s: u32) -> Result<Poly> {
    let nu = product(&[&two_pow(2 * g), &sign(s), &qp(), &pw(&q(), 2 * g), &pi_bracket(s)?]);
    let rho = product(&[
        &(&two_pow(2 * g) - &pw(&qm(), 2 * g)),
        &pw(&qm(), s),
        &qp(),
        &pw(&q(), 2 * g - 1),
    ]);
    Ok(&nu - &rho)
}

fn parabolic_reducible_quotient(g: u32, s: u32) -> Result<Poly> {
    let nu = product(&[&two_pow(2 * g), &pw(&q(), 2 * g), &sign(s), &pi_bracket(s)?]).exact_div(&qm())?;
    let rho = product(&[
        &(&two_pow(2 * g) - &pw(&qm(), 2 * g)),
        &pw(&qm(), s - 1),
        &pw(&q(), 2 * g - 2),
    ]);
    Ok(&nu - &rho)
}

fn parabolic_untwisted_char(g: u32, r: u32) -> Result<Poly> {
    let qq = pw(&q(), 2 * g - 2);
    let n = 2 * g + r - 2;
    let first = &pw(&(&qm() * &qp()), n) * &qq;
    let second = product(&[
        &sign(r),
        &two_pow(2 * g),
        &qm(),
        &qq,
        &(&int(1) - &pw(&(&int(1) - &q()), r - 1)),
    ]);
    let third = product(&[&pw(&qm(), n), &qq, &(&(&two_pow(2 * g) + &q()) - &int(3))]);
    let fourth = product(&[&sign(r), &pw(&qp(), n), &qq, &(&(&two_pow(2 * g) + &q()) - &int(1))]);
    Ok(&(&first + &second) + &half(&(&third + &fourth))?)
}

fn parabolic_twisted_char(g: u32, r: u32) -> Poly {
    let qq = pw(&q(), 2 * g - 2);
    let n = 2 * g + r - 2;
    let first = product(&[&-sign(r), &two_pow(2 * g - 1), &pw(&qp(), n), &qq]);
    let bracket = &(&pw(&qp(), n) + &two_pow(2 * g - 1)) - &int(1);
    let second = product(&[&pw(&qm(), n), &qq, &bracket]);
    let mut e = &first + &second;
    if r == 0 {
        e += &pw(&(&qm() * &qp()), 2 * g - 2);
    }
    e
}

fn surface_spec(genus: u32, r_plus: u32, r_minus: u32, t: u32) -> SurfaceSpec {
    SurfaceSpec::with_counts(genus, r_plus as usize, r_minus as usize, t as usize)
}

fn is_twisted(r_minus: u32, t: u32) -> bool {
    (r_minus + t) % 2 == 1
}

/// E-polynomial of the representation variety, when the family has one.
pub fn e_rep(query: &CharVarQuery) -> Result<Option<Poly>> {
    query.validate()?;
    Ok(match query.canonical() {
        CharVarQuery::FreeGroup(n) => Some(pw(&sl2(), n)),
        CharVarQuery::FreeParabolic(n, s) => Some(&pw(&sl2(), n) * &pw(&(&qm() * &qp()), s)),
        CharVarQuery::Abelian(_) => None,
        CharVarQuery::Surface(g) => Some(surface_rep(g)?),
        CharVarQuery::ParabolicSurface { genus, r_plus, r_minus, t } => Some(
            engine::closed_form(&surface_spec(genus, r_plus, r_minus, t))
                .map_err(|e| CharVarError::InvalidQuery(e.to_string()))?,
        ),
    })
}

/// E-polynomial of the reducible locus of the representation variety.
pub fn e_reducible_rep(query: &CharVarQuery) -> Result<Option<Poly>> {
    query.validate()?;
    Ok(match query.canonical() {
        CharVarQuery::FreeGroup(n) => Some(free_group_strata(n)?.reducible()),
        CharVarQuery::Surface(g) => {
            let (nu, delta, iota, rho) = reducible_strata(2 * g, 2 * g - 1)?;
            Some(&(&(&nu + &delta) + &iota) + &rho)
        }
        CharVarQuery::FreeParabolic(n, s) => {
            let nu = product(&[&two_pow(n), &qp(), &pw(&q(), n), &pw(&qm(), s)]);
            let rho = product(&[&qp(), &(&pw(&qm(), n) - &two_pow(n)), &pw(&q(), n), &pw(&qm(), s)]);
            Some(&nu + &rho)
        }
        CharVarQuery::Abelian(_) => None,
        CharVarQuery::ParabolicSurface { genus, r_plus, r_minus, t } => {
            if is_twisted(r_minus, t) {
                Some(Poly::zero())
            } else {
                Some(parabolic_reducible_rep(genus, r_plus + r_minus)?)
            }
        }
    })
}

/// E-polynomial of the GIT quotient of the reducible locus.
pub fn e_reducible_quotient(query: &CharVarQuery) -> Result<Poly> {
    query.validate()?;
    let abelian = |n: u32| half(&(&pw(&qm(), n) + &pw(&qp(), n)));
    match query.canonical() {
        CharVarQuery::FreeGroup(n) | CharVarQuery::Abelian(n) => abelian(n),
        CharVarQuery::Surface(g) => abelian(2 * g),
        CharVarQuery::FreeParabolic(n, s) => Ok(product(&[
            &(&two_pow(n) + &pw(&qm(), n - 1)),
            &pw(&qm(), s),
            &pw(&q(), n - 1),
        ])),
        CharVarQuery::ParabolicSurface { genus, r_plus, r_minus, t } => {
            if is_twisted(r_minus, t) {
                Ok(Poly::zero())
            } else {
                parabolic_reducible_quotient(genus, r_plus + r_minus)
            }
        }
    }
}

/// `E(X^irr) = (E(Rep) - E(Rep^red)) / (q^3 - q)`; zero for abelian groups.
pub fn e_irreducible_quotient(query: &CharVarQuery) -> Result<Poly> {
    match (e_rep(query)?, e_reducible_rep(query)?) {
        (Some(rep), Some(red)) => Ok((&rep - &red).exact_div(&sl2())?),
        _ => Ok(Poly::zero()),
    }
}

/// Closed-form E-polynomial of the character variety.
pub fn e_char(query: &CharVarQuery) -> Result<Poly> {
    query.validate()?;
    match query.canonical() {
        CharVarQuery::FreeGroup(n) => {
            let a = &(&pw(&qp(), n - 1) * &q()) + &(&pw(&qm(), n - 1) * &q());
            Ok(&(&half(&a)? - &(&pw(&qm(), n - 1) * &pw(&q(), n - 1))) + &pw(&sl2(), n - 1))
        }
        CharVarQuery::FreeParabolic(n, s) => Ok(&product(&[&two_pow(n), &pw(&qm(), s), &pw(&q(), n - 1)])
            + &(&pw(&sl2(), n - 1) * &pw(&(&qm() * &qp()), s))),
        CharVarQuery::Abelian(n) => half(&(&pw(&qm(), n) + &pw(&qp(), n))),
        CharVarQuery::Surface(g) => surface_char(g),
        CharVarQuery::ParabolicSurface { genus, r_plus, r_minus, t } => {
            let r = r_plus + r_minus;
            if is_twisted(r_minus, t) {
                Ok(parabolic_twisted_char(genus, r))
            } else {
                parabolic_untwisted_char(genus, r)
            }
        }
    }
}

/// `E(X) = E(X^red) + E(X^irr)`.
pub fn consistency_check(query: &CharVarQuery) -> Result<bool> {
    let total = e_char(query)?;
    let red = e_reducible_quotient(query)?;
    let irr = e_irreducible_quotient(query)?;
    Ok(total == &red + &irr)
}

/// Closed-form E-polynomials split by stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharVarReport {
    pub query: CharVarQuery,
    pub e_char: Poly,
    pub reducible: Poly,
    pub irreducible: Poly,
    pub consistent: bool,
}

pub fn report(query: &CharVarQuery) -> Result<CharVarReport> {
    let e = e_char(query)?;
    let reducible = e_reducible_quotient(query)?;
    let irreducible = e_irreducible_quotient(query)?;
    let consistent = e == &reducible + &irreducible;
    Ok(CharVarReport { query: *query, e_char: e, reducible, irreducible, consistent })
}
