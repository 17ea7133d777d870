//! The 8-generator core submodule: generator order, the constant generator
//! matrices, the measure map, and the identities tying them together.

use std::fmt;
use std::sync::OnceLock;

use serde_json::{json, Map, Value};

use crate::matrix::MatrixError;
use crate::{CoreMatrix, CoreVector, LocalizedScalar, Matrix, Poly, QMatrix};

/// Rank of the core submodule.
pub const RANK: usize = 8;

/// Core generators in matrix row/column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `T_1`
    Id,
    /// `T_{-1}`
    NegId,
    /// `T_+`
    Plus,
    /// `T_-`
    Minus,
    /// `T_Bt`
    Bt,
    /// `S_2`
    S2,
    /// `S_{-2}`
    SNeg2,
    /// `S_2 ⊗ S_{-2}`
    S2SNeg2,
}

impl Generator {
    pub const ALL: [Generator; RANK] = [
        Generator::Id,
        Generator::NegId,
        Generator::Plus,
        Generator::Minus,
        Generator::Bt,
        Generator::S2,
        Generator::SNeg2,
        Generator::S2SNeg2,
    ];

    /// 0-based row/column index.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Id => "T_1",
            Generator::NegId => "T_-1",
            Generator::Plus => "T_+",
            Generator::Minus => "T_-",
            Generator::Bt => "T_Bt",
            Generator::S2 => "S_2",
            Generator::SNeg2 => "S_-2",
            Generator::S2SNeg2 => "S_2*S_-2",
        }
    }

    /// Basis vector of this generator.
    pub fn unit(self) -> CoreVector {
        CoreVector::basis(RANK, self.index())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("P is not invertible: {0}")]
    SingularP(MatrixError),
}

fn literal(rows: &[[&str; RANK]; RANK]) -> CoreMatrix {
    let rows: Vec<&[&str]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::parse_rows(&rows).expect("constant matrix literal parses")
}

fn q_literal(rows: &[[&str; RANK]; RANK]) -> QMatrix {
    let rows: Vec<&[&str]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::parse_rows(&rows).expect("constant matrix literal parses")
}

/// `q^3 - q`, the class of SL2.
pub fn sl2() -> LocalizedScalar {
    LocalizedScalar::from_poly(Poly::sl2_class())
}

macro_rules! cached {
    ($(#[$doc:meta])* $name:ident: $ty:ty = $init:expr) => {
        $(#[$doc])*
        pub fn $name() -> &'static $ty {
            static CELL: OnceLock<$ty> = OnceLock::new();
            CELL.get_or_init(|| $init)
        }
    };
}

cached!(
    /// `η = tr_! ∘ tr^*` on the core submodule.
    eta: CoreMatrix = literal(&ETA)
);

cached!(
    /// Inverse of [`eta`] over the localized ring.
    eta_inv: CoreMatrix = eta().inverse().expect("eta is invertible")
);

cached!(
    /// Involution swapping `T_1 ↔ T_-1`, `T_+ ↔ T_-`, `S_2 ↔ S_-2`.
    sigma: CoreMatrix = {
        let mut m = CoreMatrix::zero(RANK);
        for (from, to) in [(0, 1), (1, 0), (2, 3), (3, 2), (4, 4), (5, 6), (6, 5), (7, 7)] {
            m.set(to, from, LocalizedScalar::one());
        }
        m
    }
);

cached!(
    /// Genus tube `Z(L)`.
    z_genus: CoreMatrix = literal(&Z_GENUS).scale(&sl2().pow(2))
);

cached!(
    /// `M` with `(q^3 - q) M = η^{-1} Z(L)`.
    m_matrix: CoreMatrix = literal(&M)
);

cached!(
    /// Puncture tube `Z(L_[J+])`.
    z_jplus: CoreMatrix = {
        let pre = &sl2() * &"q^2 - 1".parse::<LocalizedScalar>().expect("literal");
        literal(&Z_JPLUS).scale(&pre)
    }
);

cached!(
    /// Reduced puncture tube `Ẑ(L_[J+]) = Z(L_[J+]) η^{-1}`.
    rz_jplus: CoreMatrix = literal(&RZ_JPLUS).scale(&sl2())
);

cached!(
    /// Reduced puncture tube `Ẑ(L_[J-])`.
    rz_jminus: CoreMatrix = literal(&RZ_JMINUS).scale(&sl2())
);

cached!(
    /// Reduced genus tube `Ẑ(L) = Z(L) η^{-1}`.
    rz_genus: CoreMatrix = z_genus().mul_mat(eta_inv())
);

cached!(
    /// `Ẑ(L_Id) = (q^3 - q) Id`.
    rz_id: CoreMatrix = CoreMatrix::identity(RANK).scale(&sl2())
);

cached!(
    /// `Ẑ(L_-Id) = (q^3 - q) σ`.
    rz_negid: CoreMatrix = sigma().scale(&sl2())
);

cached!(
    /// Change of basis `P` diagonalizing `Ẑ(L_[J+])`.
    p_matrix: QMatrix = q_literal(&P)
);

cached!(
    /// Eigenvalues of `Ẑ(L_[J+])` as a diagonal matrix.
    d_matrix: QMatrix = {
        let c = sl2().to_rational();
        let d = ["q^2 - 1", "-q - 1", "-q - 1", "-q - 1", "q - 1", "q - 1", "q - 1", "0"]
            .map(|s| &c * &s.parse().expect("literal"));
        QMatrix::diagonal(&d)
    }
);

/// Measure of each generator: `(1, 1, 1, 1, q - 2, -1, -1, -1)`.
pub fn measure_values() -> [LocalizedScalar; RANK] {
    ["1", "1", "1", "1", "q - 2", "-1", "-1", "-1"].map(|s| s.parse().expect("literal"))
}

/// Pushforward to a point: the linear functional `μ`.
pub fn measure(v: &CoreVector) -> LocalizedScalar {
    measure_values().iter().zip(v.coords()).map(|(m, x)| m * x).sum()
}

/// `T_1 + T_-1 + T_+ + T_- + T_Bt`, the unit class over the piecewise quotient.
pub fn unit_class() -> CoreVector {
    Generator::ALL[..5].iter().fold(CoreVector::zero(RANK), |acc, g| acc.add(&g.unit()))
}

/// Checks `P D P^{-1} = Ẑ(L_[J+])` over the rational localized ring.
pub fn diag_check() -> Result<bool, CoreError> {
    let p = p_matrix();
    let p_inv = p.inverse().map_err(CoreError::SingularP)?;
    let lhs = p.mul_mat(d_matrix()).mul_mat(&p_inv);
    Ok(lhs == rz_jplus().to_rational())
}

/// One named structural identity and whether it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub pass: bool,
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, if self.pass { "PASS" } else { "FAIL" })
    }
}

pub fn check_eta_inverse() -> bool {
    let id = CoreMatrix::identity(RANK);
    eta().mul_mat(eta_inv()) == id && eta_inv().mul_mat(eta()) == id
}

pub fn check_m_identity() -> bool {
    m_matrix().scale(&sl2()) == eta_inv().mul_mat(z_genus())
}

pub fn check_jplus_reduction() -> bool {
    *rz_jplus() == z_jplus().mul_mat(eta_inv())
}

pub fn check_jminus() -> bool {
    *rz_jminus() == sigma().mul_mat(rz_jplus())
}

pub fn check_commutativity() -> bool {
    let (l, j, s) = (rz_genus(), rz_jplus(), sigma());
    l.commutes_with(j) && l.commutes_with(s) && j.commutes_with(s)
}

pub fn check_measure_unit() -> bool {
    measure(&eta().mul_vec(&unit_class())) == sl2()
}

pub fn check_denominator_free() -> bool {
    [rz_jplus(), rz_jminus(), z_genus(), m_matrix(), rz_genus()]
        .iter()
        .all(|m| m.is_denominator_free())
}

/// Every structural identity between the constant matrices.
pub fn identity_checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck { name: "eta·eta_inv = eta_inv·eta = I", pass: check_eta_inverse() },
        IdentityCheck { name: "(q^3-q)·M = eta_inv·Z(L)", pass: check_m_identity() },
        IdentityCheck { name: "rz_jplus = z_jplus·eta_inv", pass: check_jplus_reduction() },
        IdentityCheck { name: "rz_jminus = sigma·rz_jplus", pass: check_jminus() },
        IdentityCheck { name: "P·D·P^-1 = rz_jplus", pass: diag_check().unwrap_or(false) },
        IdentityCheck { name: "Z(L)·eta_inv, rz_jplus, sigma commute", pass: check_commutativity() },
        IdentityCheck { name: "measure(eta·unit) = q^3-q", pass: check_measure_unit() },
        IdentityCheck {
            name: "rz_jplus, rz_jminus, z_genus, m, Z(L)·eta_inv denominator-free",
            pass: check_denominator_free(),
        },
    ]
}

/// Named matrices in dump order.
pub fn named_matrices() -> Vec<(&'static str, &'static CoreMatrix)> {
    vec![
        ("eta", eta()),
        ("eta_inv", eta_inv()),
        ("z_genus", z_genus()),
        ("m", m_matrix()),
        ("z_jplus", z_jplus()),
        ("rz_jplus", rz_jplus()),
        ("rz_jminus", rz_jminus()),
        ("sigma", sigma()),
        ("rz_genus", rz_genus()),
    ]
}

/// JSON dump: each matrix as an 8×8 array of polynomial strings, plus the
/// identity verdicts under `"identities"`.
pub fn matrices_json() -> Value {
    let mut obj = Map::new();
    for (name, m) in named_matrices() {
        obj.insert(name.to_string(), json!(m.to_strings()));
    }
    let checks: Vec<String> = identity_checks().iter().map(ToString::to_string).collect();
    obj.insert("identities".to_string(), json!(checks));
    Value::Object(obj)
}

/// Parses a matrix from its JSON dump form.
pub fn matrix_from_json(v: &Value) -> Option<CoreMatrix> {
    let rows = v.as_array()?;
    let parsed = rows
        .iter()
        .map(|r| {
            r.as_array()?
                .iter()
                .map(|e| e.as_str()?.parse().ok())
                .collect::<Option<Vec<LocalizedScalar>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    (parsed.iter().all(|r| r.len() == parsed.len())).then(|| Matrix::from_rows(parsed))
}

// Z(L) without its (q^3 - q)^2 prefactor.
const Z_GENUS: [[&str; RANK]; RANK] = [
    ["q + 4", "1", "q^2 - 2*q - 3", "q^2 + 3*q", "q^3 - 2*q^2 - 3*q - 2", "-q^2 - 4*q - 1", "2*q^2 - 7*q - 1", "-5*q - 1"],
    ["1", "q + 4", "q^2 + 3*q", "q^2 - 2*q - 3", "q^3 - 2*q^2 - 3*q - 2", "2*q^2 - 7*q - 1", "-q^2 - 4*q - 1", "-5*q - 1"],
    ["q^2 - 2*q - 3", "q^2 + 3*q", "q^4 + q^3 + 3*q + 3", "q^4 - 3*q^2 - 6*q", "q^5 - 2*q^4 - 3*q^3 + q^2 + 3*q", "-q^4 + 2*q^3 - 4*q^2 + 3*q", "-q^4 - q^3 - 4*q^2 + 6*q", "-2*q^3 - q^2 + 3*q"],
    ["q^2 + 3*q", "q^2 - 2*q - 3", "q^4 - 3*q^2 - 6*q", "q^4 + q^3 + 3*q + 3", "q^5 - 2*q^4 - 3*q^3 + q^2 + 3*q", "-q^4 - q^3 - 4*q^2 + 6*q", "-q^4 + 2*q^3 - 4*q^2 + 3*q", "-2*q^3 - q^2 + 3*q"],
    ["q^2 + 1", "q^2 + 1", "q^4 - 2*q^2", "q^4 - 2*q^2", "q^5 - 2*q^4 - q^3 + 2*q^2 - 2", "-q^4 - q^3 + q^2 - q - 1", "-q^4 - q^3 + q^2 - q - 1", "-2*q^3 + q^2 - 2*q - 1"],
    ["0", "3*q", "3*q^2", "-3*q", "-3*q^2", "4*q^3 - 6*q^2", "-4*q^2", "-3*q^2"],
    ["3*q", "0", "-3*q", "3*q^2", "-3*q^2", "-4*q^2", "4*q^3 - 6*q^2", "-3*q^2"],
    ["q", "q", "q^3", "q^3", "q^4 - 2*q^3 - q^2 - 2*q", "-q^3 - q^2 - q", "-q^3 - q^2 - q", "q^3 - 2*q^2 - q"],
];

const M: [[&str; RANK]; RANK] = [
    ["q^4 + 4*q^3 - q^2 - 4*q", "q^3 - q", "q^5 - 2*q^4 - 4*q^3 + 2*q^2 + 3*q", "q^5 + 3*q^4 - q^3 - 3*q^2", "q^6 - 2*q^5 - 4*q^4 + 3*q^2 + 2*q", "-q^5 - 4*q^4 + 4*q^2 + q", "2*q^5 - 7*q^4 - 3*q^3 + 7*q^2 + q", "-5*q^4 - q^3 + 5*q^2 + q"],
    ["q^3 - q", "q^4 + 4*q^3 - q^2 - 4*q", "q^5 + 3*q^4 - q^3 - 3*q^2", "q^5 - 2*q^4 - 4*q^3 + 2*q^2 + 3*q", "q^6 - 2*q^5 - 4*q^4 + 3*q^2 + 2*q", "2*q^5 - 7*q^4 - 3*q^3 + 7*q^2 + q", "-q^5 - 4*q^4 + 4*q^2 + q", "-5*q^4 - q^3 + 5*q^2 + q"],
    ["q^3 - 2*q^2 - 3*q", "q^3 + 3*q^2", "q^5 + q^4 + 3*q^2 + 3*q", "q^5 - 3*q^3 - 6*q^2", "q^6 - 2*q^5 - 3*q^4 + q^3 + 3*q^2", "-q^5 + 2*q^4 - 4*q^3 + 3*q^2", "-q^5 - q^4 - 4*q^3 + 6*q^2", "-2*q^4 - q^3 + 3*q^2"],
    ["q^3 + 3*q^2", "q^3 - 2*q^2 - 3*q", "q^5 - 3*q^3 - 6*q^2", "q^5 + q^4 + 3*q^2 + 3*q", "q^6 - 2*q^5 - 3*q^4 + q^3 + 3*q^2", "-q^5 - q^4 - 4*q^3 + 6*q^2", "-q^5 + 2*q^4 - 4*q^3 + 3*q^2", "-2*q^4 - q^3 + 3*q^2"],
    ["q^3", "q^3", "q^5 - 3*q^3", "q^5 - 3*q^3", "q^6 - 2*q^5 - 2*q^4 + 4*q^3 + q^2", "-q^5 - q^4 + 2*q^3", "-q^5 - q^4 + 2*q^3", "-2*q^4"],
    ["-3*q", "3*q^2", "3*q^3 + 3*q", "-6*q^2", "-3*q^3 + 3*q^2", "4*q^4 - 6*q^3 + 4*q^2", "-8*q^3 + 6*q^2", "-3*q^3 + 3*q^2"],
    ["3*q^2", "-3*q", "-6*q^2", "3*q^3 + 3*q", "-3*q^3 + 3*q^2", "-8*q^3 + 6*q^2", "4*q^4 - 6*q^3 + 4*q^2", "-3*q^3 + 3*q^2"],
    ["-1", "-1", "2*q^2", "2*q^2", "-4*q^2 + 2", "-2*q^2 + q + 1", "-2*q^2 + q + 1", "q^4 - 2*q^2 + 2*q + 1"],
];

const ETA: [[&str; RANK]; RANK] = [
    ["1", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "q^2 - 1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "q^2 - 1", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "q^2", "0", "0", "q"],
    ["0", "0", "0", "0", "0", "q^2", "q", "0"],
    ["0", "0", "0", "0", "0", "q", "q^2", "0"],
    ["0", "0", "0", "0", "q", "0", "0", "q^2"],
];

// Z(L_[J+]) without its (q^2 - 1)(q^3 - q) prefactor.
const Z_JPLUS: [[&str; RANK]; RANK] = [
    ["0", "0", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "1", "0", "0", "0", "0"],
    ["1", "0", "q - 2", "q", "q^2 - 2*q", "-q", "-q", "-q"],
    ["0", "1", "q", "q - 2", "q^2 - 2*q", "-q", "-q", "-q"],
    ["0", "0", "q", "q", "q^2 - 2*q", "-q", "-q", "0"],
    ["0", "0", "0", "0", "0", "0", "q", "0"],
    ["0", "0", "0", "0", "0", "q", "0", "0"],
    ["0", "0", "0", "0", "q", "0", "0", "0"],
];

// Reduced Z(L_[J+]) without its (q^3 - q) prefactor.
const RZ_JPLUS: [[&str; RANK]; RANK] = [
    ["0", "0", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "1", "0", "0", "0", "0"],
    ["q^2 - 1", "0", "q - 2", "q", "(q - 1)^2", "-q + 1", "-q + 1", "-2*q + 2"],
    ["0", "q^2 - 1", "q", "q - 2", "(q - 1)^2", "-q + 1", "-q + 1", "-2*q + 2"],
    ["0", "0", "q", "q", "q^2 - 2*q", "-q + 1", "-q + 1", "-q + 2"],
    ["0", "0", "0", "0", "0", "-1", "q", "0"],
    ["0", "0", "0", "0", "0", "q", "-1", "0"],
    ["0", "0", "0", "0", "q", "0", "0", "-1"],
];

// Reduced Z(L_[J-]) without its (q^3 - q) prefactor.
const RZ_JMINUS: [[&str; RANK]; RANK] = [
    ["0", "0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "1", "0", "0", "0", "0", "0"],
    ["0", "q^2 - 1", "q", "q - 2", "(q - 1)^2", "-q + 1", "-q + 1", "-2*q + 2"],
    ["q^2 - 1", "0", "q - 2", "q", "(q - 1)^2", "-q + 1", "-q + 1", "-2*q + 2"],
    ["0", "0", "q", "q", "q^2 - 2*q", "-q + 1", "-q + 1", "-q + 2"],
    ["0", "0", "0", "0", "0", "q", "-1", "0"],
    ["0", "0", "0", "0", "0", "-1", "q", "0"],
    ["0", "0", "0", "0", "q", "0", "0", "-1"],
];

const P: [[&str; RANK]; RANK] = [
    ["1", "1", "0", "0", "1", "0", "0", "1"],
    ["1", "0", "1", "0", "0", "1", "0", "1"],
    ["q^2 - 1", "-q - 1", "0", "0", "q - 1", "0", "0", "0"],
    ["q^2 - 1", "0", "-q - 1", "0", "0", "q - 1", "0", "0"],
    ["q^2", "q/(q - 1)", "q/(q - 1)", "0", "0", "0", "1", "1"],
    ["0", "0", "0", "1", "q/2", "q/2", "q/2 - 3/2", "0"],
    ["0", "0", "0", "-1", "q/2", "q/2", "q/2 - 3/2", "0"],
    ["q", "-q/(q - 1)", "-q/(q - 1)", "0", "0", "0", "1", "q"],
];
