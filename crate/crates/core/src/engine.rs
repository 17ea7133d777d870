//! Evaluation of the reduced TQFT on a parabolic surface, and the closed
//! form it is checked against.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::generators::{self, RANK};
use crate::polyring::PolyError;
use crate::{CoreMatrix, CoreVector, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("closed form is only stated for genus >= 1 (got {0})")]
    UnsupportedGenus(u32),
    #[error("normalization failed: {0}")]
    NotDivisible(#[from] PolyError),
    #[error("state vector keeps a (q - 1)/(q + 1) denominator")]
    ResidualDenominator,
    #[error("unknown tube label {0:?}")]
    UnknownLabel(String),
    #[error("unknown puncture class {0:?} (expected id, negid, jplus or jminus)")]
    UnknownPuncture(String),
    #[error("bad multiplicity in {0:?}")]
    BadMultiplicity(String),
}

/// Holonomy class prescribed at a puncture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PunctureClass {
    Id,
    NegId,
    JPlus,
    JMinus,
}

impl PunctureClass {
    pub const ALL: [PunctureClass; 4] =
        [PunctureClass::Id, PunctureClass::NegId, PunctureClass::JPlus, PunctureClass::JMinus];

    pub fn token(self) -> &'static str {
        match self {
            PunctureClass::Id => "id",
            PunctureClass::NegId => "negid",
            PunctureClass::JPlus => "jplus",
            PunctureClass::JMinus => "jminus",
        }
    }

    /// Reduced tube matrix of this puncture.
    pub fn tube(self) -> &'static CoreMatrix {
        match self {
            PunctureClass::Id => generators::rz_id(),
            PunctureClass::NegId => generators::rz_negid(),
            PunctureClass::JPlus => generators::rz_jplus(),
            PunctureClass::JMinus => generators::rz_jminus(),
        }
    }
}

impl fmt::Display for PunctureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for PunctureClass {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, EngineError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "id" => Ok(PunctureClass::Id),
            "negid" | "-id" => Ok(PunctureClass::NegId),
            "jplus" | "j+" => Ok(PunctureClass::JPlus),
            "jminus" | "j-" => Ok(PunctureClass::JMinus),
            _ => Err(EngineError::UnknownPuncture(s.trim().to_string())),
        }
    }
}

/// Parses `jplus,jminus*2,negid` into a puncture multiset.
pub fn parse_punctures(s: &str) -> Result<Vec<PunctureClass>, EngineError> {
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (name, k) = match tok.split_once('*') {
            Some((name, k)) => {
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| EngineError::BadMultiplicity(tok.to_string()))?;
                (name, k)
            }
            None => (tok, 1),
        };
        let class: PunctureClass = name.parse()?;
        out.extend(std::iter::repeat_n(class, k));
    }
    Ok(out)
}

/// Closed orientable surface of genus `g` with prescribed puncture classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub punctures: Vec<PunctureClass>,
}

impl SurfaceSpec {
    pub fn new(genus: u32, punctures: Vec<PunctureClass>) -> Self {
        Self { genus, punctures }
    }

    pub fn closed(genus: u32) -> Self {
        Self::new(genus, Vec::new())
    }

    /// Spec with `r_plus` J+, `r_minus` J- and `t` -Id punctures.
    pub fn with_counts(genus: u32, r_plus: usize, r_minus: usize, t: usize) -> Self {
        let mut punctures = vec![PunctureClass::JPlus; r_plus];
        punctures.extend(std::iter::repeat_n(PunctureClass::JMinus, r_minus));
        punctures.extend(std::iter::repeat_n(PunctureClass::NegId, t));
        Self::new(genus, punctures)
    }

    fn count(&self, c: PunctureClass) -> usize {
        self.punctures.iter().filter(|&&p| p == c).count()
    }

    /// Number of punctures `s`.
    pub fn s(&self) -> usize {
        self.punctures.len()
    }

    pub fn r_plus(&self) -> usize {
        self.count(PunctureClass::JPlus)
    }

    pub fn r_minus(&self) -> usize {
        self.count(PunctureClass::JMinus)
    }

    /// Number of `-Id` punctures.
    pub fn t(&self) -> usize {
        self.count(PunctureClass::NegId)
    }

    /// Number of Jordan-type punctures.
    pub fn r(&self) -> usize {
        self.r_plus() + self.r_minus()
    }

    /// `(-1)^(r_minus + t)`.
    pub fn sigma_sign(&self) -> i32 {
        if (self.r_minus() + self.t()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether the closed form covers this spec.
    pub fn is_validated(&self) -> bool {
        self.genus >= 1
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.punctures.iter().map(|p| p.token()).collect();
        write!(f, "g={} punctures={{{}}}", self.genus, names.join(","))
    }
}

/// Unnormalized state `Ẑ(L_λs)···Ẑ(L_λ1) Ẑ(L)^g e_1`.
pub fn state_vector(spec: &SurfaceSpec) -> CoreVector {
    let mut v = CoreVector::basis(RANK, 0);
    for _ in 0..spec.genus {
        v = generators::rz_genus().mul_vec(&v);
    }
    for p in &spec.punctures {
        v = p.tube().mul_vec(&v);
    }
    v
}

/// K-theory Hodge class of the parabolic representation variety, computed
/// by composing tube matrices.
pub fn evaluate(spec: &SurfaceSpec) -> Result<Poly, EngineError> {
    let v = state_vector(spec);
    if !v.is_denominator_free() {
        return Err(EngineError::ResidualDenominator);
    }
    let top = v[0].clone().into_laurent()?;
    let norm = Poly::sl2_class().pow(spec.genus + spec.s() as u32);
    Ok(top.exact_div(&norm)?)
}

fn pow_u(base: &Poly, e: i64) -> Poly {
    base.pow(u32::try_from(e).expect("non-negative exponent"))
}

fn int(n: BigInt) -> Poly {
    Poly::constant(n)
}

/// Closed-form Hodge class, for genus at least 1.
pub fn closed_form(spec: &SurfaceSpec) -> Result<Poly, EngineError> {
    let g = spec.genus;
    if g == 0 {
        return Err(EngineError::UnsupportedGenus(g));
    }
    let g = i64::from(g);
    let r = spec.r() as i64;
    let q = Poly::q();
    let qm = Poly::q_minus_one();
    let qp = Poly::q_plus_one();
    let q2m = &qm * &qp;
    let four_g = int(BigInt::from(2).pow(2 * g as u32));
    let two_g1 = int(BigInt::from(2).pow(2 * g as u32 - 1));
    let qpow = pow_u(&q, 2 * g - 1);
    let r_sign = if r % 2 == 0 { Poly::one() } else { -Poly::one() };

    let mut e = if spec.sigma_sign() == 1 {
        let first = &pow_u(&q2m, 2 * g + r - 1) * &qpow;
        let second = &(&(&pow_u(&qm, 2 * g + r - 1) * &qpow) * &qp) * &(&(&four_g + &q) - &Poly::from_int(3));
        let third = &(&(&(&r_sign * &pow_u(&qp, 2 * g + r - 1)) * &qpow) * &qm)
            * &(&(&four_g + &q) - &Poly::one());
        &first + &(&second + &third).div_int(2)?
    } else {
        let bracket = &(&pow_u(&qp, 2 * g + r - 2) + &two_g1) - &Poly::one();
        let first = &(&(&pow_u(&qm, 2 * g + r - 1) * &qp) * &qpow) * &bracket;
        let second = &(&(&(-&r_sign * &two_g1) * &pow_u(&qp, 2 * g + r - 1)) * &qm) * &qpow;
        &first + &second
    };
    if r == 0 {
        e += &(&q * &pow_u(&q2m, 2 * g - 1));
    }
    Ok(e)
}

/// Tube labels accepted by [`compose_word`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TubeLabel {
    Genus,
    Puncture(PunctureClass),
}

impl TubeLabel {
    pub fn matrix(self) -> &'static CoreMatrix {
        match self {
            TubeLabel::Genus => generators::rz_genus(),
            TubeLabel::Puncture(p) => p.tube(),
        }
    }
}

impl FromStr for TubeLabel {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, EngineError> {
        match s.trim() {
            "L" => Ok(TubeLabel::Genus),
            "L_Id" => Ok(TubeLabel::Puncture(PunctureClass::Id)),
            "L_NegId" => Ok(TubeLabel::Puncture(PunctureClass::NegId)),
            "L_JPlus" => Ok(TubeLabel::Puncture(PunctureClass::JPlus)),
            "L_JMinus" => Ok(TubeLabel::Puncture(PunctureClass::JMinus)),
            other => Err(EngineError::UnknownLabel(other.to_string())),
        }
    }
}

/// Product of the reduced tube matrices of `word`; the last label acts first.
pub fn compose_word<S: AsRef<str>>(word: &[S]) -> Result<CoreMatrix, EngineError> {
    let labels = word
        .iter()
        .map(|w| w.as_ref().parse::<TubeLabel>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(labels
        .iter()
        .fold(CoreMatrix::identity(RANK), |acc, l| acc.mul_mat(l.matrix())))
}
