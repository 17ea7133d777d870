//! Brute-force counts of surface-group representations into `SL2(F_p)`.
//!
//! For a polynomial-count variety the E-polynomial at `q = p` equals the
//! number of `F_p`-points, which gives independent ground truth for the
//! engine.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::engine::{PunctureClass, SurfaceSpec};

/// Primes the oracle supports.
pub const SUPPORTED_PRIMES: [u32; 3] = [3, 5, 7];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("characteristic {0} is excluded: Id = -Id")]
    BadCharacteristic(u32),
    #[error("unsupported prime {0} (expected one of 3, 5, 7)")]
    UnsupportedPrime(u32),
}

/// `SL2(F_p)` with a full multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    p: u32,
    elements: Vec<[u32; 4]>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    neg_identity: usize,
}

impl FiniteGroup {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Matrix `[[a, b], [c, d]]` of element `i`, entries in `0..p`.
    pub fn element(&self, i: usize) -> [u32; 4] {
        self.elements[i]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order() + y] as usize
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn neg_identity(&self) -> usize {
        self.neg_identity
    }

    pub fn trace(&self, x: usize) -> u32 {
        let [a, _, _, d] = self.elements[x];
        (a + d) % self.p
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        self.mul(self.mul(xy, self.inv(x)), self.inv(y))
    }
}

fn check_prime(p: u32) -> Result<(), OracleError> {
    if p == 2 {
        return Err(OracleError::BadCharacteristic(p));
    }
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(OracleError::UnsupportedPrime(p));
    }
    Ok(())
}

/// Enumerates `SL2(F_p)` for `p ∈ {3, 5, 7}`.
pub fn build_group(p: u32) -> Result<FiniteGroup, OracleError> {
    check_prime(p)?;
    let code = |m: [u32; 4]| ((m[0] * p + m[1]) * p + m[2]) * p + m[3];
    let mut elements = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 1 {
                        elements.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let mut index = vec![u32::MAX; (p * p * p * p) as usize];
    for (i, &m) in elements.iter().enumerate() {
        index[code(m) as usize] = i as u32;
    }
    let n = elements.len();
    let mut mul = vec![0u32; n * n];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            let prod = [
                (x[0] * y[0] + x[1] * y[2]) % p,
                (x[0] * y[1] + x[1] * y[3]) % p,
                (x[2] * y[0] + x[3] * y[2]) % p,
                (x[2] * y[1] + x[3] * y[3]) % p,
            ];
            mul[i * n + j] = index[code(prod) as usize];
        }
    }
    let inv = elements
        .iter()
        .map(|&[a, b, c, d]| index[code([d, (p - b) % p, (p - c) % p, a]) as usize])
        .collect();
    let identity = index[code([1, 0, 0, 1]) as usize] as usize;
    let neg_identity = index[code([p - 1, 0, 0, p - 1]) as usize] as usize;
    Ok(FiniteGroup { p, elements, mul, inv, identity, neg_identity })
}

/// Integer-valued function on group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<BigInt>,
}

impl ClassFunction {
    pub fn new(values: Vec<BigInt>) -> Self {
        Self { values }
    }

    /// Point mass at element `x`.
    pub fn delta(g: &FiniteGroup, x: usize) -> Self {
        let mut values = vec![BigInt::zero(); g.order()];
        values[x] = BigInt::from(1);
        Self { values }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn at(&self, x: usize) -> &BigInt {
        &self.values[x]
    }

    pub fn sum(&self) -> BigInt {
        self.values.iter().sum()
    }

    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|v| !v.is_zero()).count()
    }

    /// Whether `f(y x y^-1) = f(x)` for all `x, y`.
    pub fn is_conjugation_invariant(&self, g: &FiniteGroup) -> bool {
        (0..g.order()).all(|y| {
            (0..g.order()).all(|x| self.values[g.mul(g.mul(y, x), g.inv(y))] == self.values[x])
        })
    }
}

/// `N(z) = #{(A, B) : A B A^-1 B^-1 = z}`.
pub fn commutator_distribution(g: &FiniteGroup) -> ClassFunction {
    let mut counts = vec![0u64; g.order()];
    for a in 0..g.order() {
        for b in 0..g.order() {
            counts[g.commutator(a, b)] += 1;
        }
    }
    ClassFunction::new(counts.into_iter().map(BigInt::from).collect())
}

/// `(f ∗ h)(z) = Σ_{xy = z} f(x) h(y)`.
pub fn convolve(g: &FiniteGroup, f: &ClassFunction, h: &ClassFunction) -> ClassFunction {
    let mut out = vec![BigInt::zero(); g.order()];
    for (x, fx) in f.values.iter().enumerate() {
        if fx.is_zero() {
            continue;
        }
        for (y, hy) in h.values.iter().enumerate() {
            if hy.is_zero() {
                continue;
            }
            out[g.mul(x, y)] += fx * hy;
        }
    }
    ClassFunction::new(out)
}

/// Indicator of the `F_p`-points of a complex conjugacy class.
pub fn class_indicator(g: &FiniteGroup, c: PunctureClass) -> ClassFunction {
    let p = g.p();
    let member = |x: usize| match c {
        PunctureClass::Id => x == g.identity(),
        PunctureClass::NegId => x == g.neg_identity(),
        PunctureClass::JPlus => g.trace(x) == 2 && x != g.identity(),
        PunctureClass::JMinus => g.trace(x) == p - 2 && x != g.neg_identity(),
    };
    ClassFunction::new((0..g.order()).map(|x| BigInt::from(u8::from(member(x)))).collect())
}

struct Prepared {
    group: FiniteGroup,
    commutators: ClassFunction,
}

fn prepared(p: u32) -> Result<&'static Prepared, OracleError> {
    check_prime(p)?;
    static CELLS: [OnceLock<Prepared>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = SUPPORTED_PRIMES.iter().position(|&x| x == p).expect("checked prime");
    Ok(CELLS[slot].get_or_init(|| {
        let group = build_group(p).expect("checked prime");
        let commutators = commutator_distribution(&group);
        Prepared { group, commutators }
    }))
}

/// Number of representations of the punctured surface group into `SL2(F_p)`
/// with the prescribed puncture classes.
pub fn count(spec: &SurfaceSpec, p: u32) -> Result<BigInt, OracleError> {
    let Prepared { group, commutators } = prepared(p)?;
    let mut f = ClassFunction::delta(group, group.identity());
    for _ in 0..spec.genus {
        f = convolve(group, &f, commutators);
    }
    for &c in &spec.punctures {
        f = convolve(group, &f, &class_indicator(group, c));
    }
    Ok(f.at(group.identity()).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(build_group(3).unwrap().order(), 24);
        assert_eq!(build_group(5).unwrap().order(), 120);
        assert_eq!(build_group(7).unwrap().order(), 336);
        assert_eq!(build_group(2).unwrap_err(), OracleError::BadCharacteristic(2));
        assert_eq!(build_group(11).unwrap_err(), OracleError::UnsupportedPrime(11));
    }

    #[test]
    fn group_axioms() {
        let g = build_group(5).unwrap();
        let n = g.order();
        for i in 0..n {
            assert_eq!(g.mul(i, g.identity()), i);
            assert_eq!(g.mul(g.identity(), i), i);
            assert_eq!(g.mul(i, g.inv(i)), g.identity());
        }
        for (a, b, c) in [(1, 2, 3), (17, 44, 101), (119, 0, 58), (7, 7, 7)] {
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
        assert_eq!(g.mul(g.neg_identity(), g.neg_identity()), g.identity());
    }

    #[test]
    fn commutator_counts() {
        let g = build_group(3).unwrap();
        let n = commutator_distribution(&g);
        assert_eq!(n.at(g.identity()), &BigInt::from(168));
        assert_eq!(n.at(g.neg_identity()), &BigInt::from(24));
        let unipotent = class_indicator(&g, PunctureClass::JPlus);
        for x in 0..g.order() {
            if !unipotent.at(x).is_zero() {
                assert!(n.at(x).is_zero());
            }
        }
        assert_eq!(n.sum(), BigInt::from(24 * 24));
        assert!(n.is_conjugation_invariant(&g));
    }

    #[test]
    fn convolution_identities() {
        let g = build_group(3).unwrap();
        let n = commutator_distribution(&g);
        let e = ClassFunction::delta(&g, g.identity());
        assert_eq!(convolve(&g, &n, &e), n);
        let (a, b) = (5, 11);
        assert_eq!(
            convolve(&g, &ClassFunction::delta(&g, a), &ClassFunction::delta(&g, b)),
            ClassFunction::delta(&g, g.mul(a, b))
        );
    }

    #[test]
    fn genus_two_matches_direct_enumeration() {
        let g = build_group(3).unwrap();
        let n = commutator_distribution(&g);
        let nn = convolve(&g, &n, &n);
        let mut direct = 0u64;
        let comms: Vec<usize> = (0..g.order() * g.order())
            .map(|k| g.commutator(k / g.order(), k % g.order()))
            .collect();
        let mut by_value = vec![0u64; g.order()];
        for &c in &comms {
            by_value[c] += 1;
        }
        for &c in &comms {
            direct += by_value[g.inv(c)];
        }
        assert_eq!(nn.at(g.identity()), &BigInt::from(direct));
    }

    #[test]
    fn indicators() {
        for p in [3, 5] {
            let g = build_group(p).unwrap();
            let size = (p * p - 1) as usize;
            for c in [PunctureClass::JPlus, PunctureClass::JMinus] {
                let ind = class_indicator(&g, c);
                assert_eq!(ind.support_size(), size);
                assert_eq!(ind.sum(), BigInt::from(size));
                assert!(ind.is_conjugation_invariant(&g));
            }
            assert_eq!(class_indicator(&g, PunctureClass::NegId).support_size(), 1);
            assert_eq!(class_indicator(&g, PunctureClass::Id).support_size(), 1);
        }
    }

    #[test]
    fn anchor_counts() {
        let closed = SurfaceSpec::closed(1);
        assert_eq!(count(&closed, 3).unwrap(), BigInt::from(168));
        assert_eq!(count(&closed, 5).unwrap(), BigInt::from(1080));
        assert_eq!(count(&SurfaceSpec::with_counts(1, 0, 0, 1), 3).unwrap(), BigInt::from(24));
        assert_eq!(count(&SurfaceSpec::with_counts(1, 1, 0, 0), 3).unwrap(), BigInt::from(0));
        assert_eq!(count(&SurfaceSpec::closed(0), 3).unwrap(), BigInt::from(1));
        assert_eq!(count(&closed, 2), Err(OracleError::BadCharacteristic(2)));
    }
}
