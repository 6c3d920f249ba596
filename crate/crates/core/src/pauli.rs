//! Symplectic representation and algebra of Pauli strings.
//!
//! A Pauli string on n qubits is stored as a pair of length-n bit vectors:
//! qubit k carries I/X/Y/Z for (x, z) = (0,0)/(1,0)/(1,1)/(0,1). Products
//! and commutation checks are word-parallel XOR/AND/popcount; the phase of a
//! product is tracked separately and folded into coefficients, so terms
//! themselves stay canonical and hashable.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::bits::BitVec;
use crate::COEFF_CUTOFF;

/// Single-qubit Pauli operator label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliOp {
    I,
    X,
    Y,
    Z,
}

/// Power of the imaginary unit attached to a Pauli product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    PlusOne,
    PlusI,
    MinusOne,
    MinusI,
}

impl Phase {
    fn from_exponent(k: u32) -> Self {
        match k % 4 {
            0 => Phase::PlusOne,
            1 => Phase::PlusI,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self {
            Phase::PlusOne => Complex64::new(1.0, 0.0),
            Phase::PlusI => Complex64::new(0.0, 1.0),
            Phase::MinusOne => Complex64::new(-1.0, 0.0),
            Phase::MinusI => Complex64::new(0.0, -1.0),
        }
    }
}

/// A phaseless Pauli string in binary symplectic form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliTerm {
    // ordering fields: z before x so term iteration sorts on (z, x)
    z: BitVec,
    x: BitVec,
}

impl PauliTerm {
    pub fn identity(n_qubits: usize) -> Self {
        PauliTerm {
            z: BitVec::zeros(n_qubits),
            x: BitVec::zeros(n_qubits),
        }
    }

    pub fn from_bits(x: BitVec, z: BitVec) -> Self {
        debug_assert_eq!(x.len(), z.len());
        PauliTerm { z, x }
    }

    pub fn from_ops(n_qubits: usize, ops: &[(usize, PauliOp)]) -> Self {
        let mut t = PauliTerm::identity(n_qubits);
        for &(q, op) in ops {
            t.set_op(q, op);
        }
        t
    }

    /// Single Z on one qubit.
    pub fn single_z(n_qubits: usize, q: usize) -> Self {
        PauliTerm::from_ops(n_qubits, &[(q, PauliOp::Z)])
    }

    /// Single X on one qubit.
    pub fn single_x(n_qubits: usize, q: usize) -> Self {
        PauliTerm::from_ops(n_qubits, &[(q, PauliOp::X)])
    }

    pub fn n_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn op_at(&self, q: usize) -> PauliOp {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => PauliOp::I,
            (true, false) => PauliOp::X,
            (true, true) => PauliOp::Y,
            (false, true) => PauliOp::Z,
        }
    }

    pub fn set_op(&mut self, q: usize, op: PauliOp) {
        let (x, z) = match op {
            PauliOp::I => (false, false),
            PauliOp::X => (true, false),
            PauliOp::Y => (true, true),
            PauliOp::Z => (false, true),
        };
        self.x.set(q, x);
        self.z.set(q, z);
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of non-identity sites.
    pub fn weight(&self) -> usize {
        let mut support = self.x.clone();
        support.xor_assign(&self.z);
        // X^Z leaves Y sites zero; add them back
        support.count_ones() + self.x.and_count(&self.z)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n_qubits())
            .filter(|&q| self.op_at(q) != PauliOp::I)
            .collect()
    }

    /// True iff the string commutes with `other` (symplectic inner product
    /// ⟨x1,z2⟩ + ⟨z1,x2⟩ even).
    pub fn commutes(&self, other: &PauliTerm) -> Result<bool> {
        if self.n_qubits() != other.n_qubits() {
            return Err(Error::validation(format!(
                "qubit count mismatch: {} vs {}",
                self.n_qubits(),
                other.n_qubits()
            )));
        }
        Ok(self.x.and_parity(&other.z) == self.z.and_parity(&other.x))
    }

    /// Product of two strings; the bits XOR and the accumulated power of i
    /// is returned as a phase. `mul(a, a)` is the identity with phase +1.
    pub fn mul(&self, other: &PauliTerm) -> Result<(Phase, PauliTerm)> {
        if self.n_qubits() != other.n_qubits() {
            return Err(Error::validation(format!(
                "qubit count mismatch: {} vs {}",
                self.n_qubits(),
                other.n_qubits()
            )));
        }
        let x3 = self.x.xor(&other.x);
        let z3 = self.z.xor(&other.z);
        // writing each string as i^{|x∧z|}·X^x Z^z, the product picks up
        // (-1)^{|z1∧x2|} from commuting Z^z1 past X^x2
        let k = self.x.and_count(&self.z) as u32
            + other.x.and_count(&other.z) as u32
            + 2 * self.z.and_count(&other.x) as u32
            + 4
            - (x3.and_count(&z3) as u32 % 4);
        Ok((Phase::from_exponent(k), PauliTerm { z: z3, x: x3 }))
    }

    /// Copy of the string restricted to the qubits where `keep` is true,
    /// reindexed in order.
    pub fn filtered(&self, keep: impl Fn(usize) -> bool + Copy) -> PauliTerm {
        PauliTerm {
            z: self.z.filtered(keep),
            x: self.x.filtered(keep),
        }
    }
}

impl fmt::Display for PauliTerm {
    /// Letters over {I,X,Y,Z} with qubit 0 rightmost.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in (0..self.n_qubits()).rev() {
            let c = match self.op_at(q) {
                PauliOp::I => 'I',
                PauliOp::X => 'X',
                PauliOp::Y => 'Y',
                PauliOp::Z => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Weighted sum of Pauli strings.
#[derive(Clone, Debug)]
pub struct PauliSum {
    n_qubits: usize,
    terms: HashMap<PauliTerm, Complex64>,
}

/// Operator census over all strings of a sum; the per-kind counts satisfy
/// n_x + n_y + n_z + n_id == n_strings * n_qubits.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PauliStats {
    pub n_strings: usize,
    pub n_x: usize,
    pub n_y: usize,
    pub n_z: usize,
    pub n_id: usize,
    pub pct_x: f64,
    pub pct_y: f64,
    pub pct_z: f64,
    pub pct_id: f64,
}

impl PauliSum {
    pub fn new(n_qubits: usize) -> Self {
        PauliSum {
            n_qubits,
            terms: HashMap::new(),
        }
    }

    pub fn identity_times(n_qubits: usize, c: Complex64) -> Self {
        let mut s = PauliSum::new(n_qubits);
        s.terms.insert(PauliTerm::identity(n_qubits), c);
        s
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &PauliTerm) -> Complex64 {
        self.terms.get(t).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn add_scaled(&mut self, c: Complex64, t: &PauliTerm) -> Result<()> {
        if t.n_qubits() != self.n_qubits {
            return Err(Error::validation(format!(
                "term on {} qubits added to sum on {}",
                t.n_qubits(),
                self.n_qubits
            )));
        }
        *self.terms.entry(t.clone()).or_insert(Complex64::new(0.0, 0.0)) += c;
        Ok(())
    }

    pub fn add_sum_scaled(&mut self, c: Complex64, other: &PauliSum) -> Result<()> {
        for (t, w) in &other.terms {
            self.add_scaled(c * w, t)?;
        }
        Ok(())
    }

    /// Drop terms with |coefficient| below the cutoff. Idempotent.
    pub fn simplify(&mut self) {
        self.terms.retain(|_, c| c.norm() >= COEFF_CUTOFF);
    }

    /// Terms in (z_bits, x_bits) lexicographic order; the canonical order for
    /// output, synthesis, and golden tests.
    pub fn sorted_terms(&self) -> Vec<(&PauliTerm, Complex64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(t, &c)| (t, c)).collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PauliTerm, &Complex64)> {
        self.terms.iter()
    }

    /// Largest imaginary part over all coefficients; Hermitian sums of
    /// phaseless strings have real coefficients.
    pub fn max_imag(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.im.abs())
            .fold(0.0, f64::max)
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&mut self, c: Complex64) {
        for w in self.terms.values_mut() {
            *w *= c;
        }
    }

    /// Product of two sums, distributing term by term with phases folded
    /// into coefficients.
    pub fn mul(&self, other: &PauliSum) -> Result<PauliSum> {
        let mut out = PauliSum::new(self.n_qubits);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (phase, t) = a.mul(b)?;
                out.add_scaled(ca * cb * phase.to_complex(), &t)?;
            }
        }
        Ok(out)
    }

    pub fn stats(&self) -> Result<PauliStats> {
        if self.terms.is_empty() {
            return Err(Error::validation("census of an empty sum".into()));
        }
        let (mut n_x, mut n_y, mut n_z) = (0usize, 0usize, 0usize);
        for t in self.terms.keys() {
            let y = t.x_bits().and_count(t.z_bits());
            n_x += t.x_bits().count_ones() - y;
            n_z += t.z_bits().count_ones() - y;
            n_y += y;
        }
        let n_strings = self.terms.len();
        let total = n_strings * self.n_qubits;
        let n_id = total - n_x - n_y - n_z;
        let pct = |k: usize| (10000.0 * k as f64 / total as f64).round() / 100.0;
        Ok(PauliStats {
            n_strings,
            n_x,
            n_y,
            n_z,
            n_id,
            pct_x: pct(n_x),
            pct_y: pct(n_y),
            pct_z: pct(n_z),
            pct_id: pct(n_id),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_qubit_products() {
        let x = PauliTerm::single_x(1, 0);
        let y = PauliTerm::from_ops(1, &[(0, PauliOp::Y)]);
        let z = PauliTerm::single_z(1, 0);
        // X * Y = iZ
        let (ph, t) = x.mul(&y).unwrap();
        assert_eq!(ph, Phase::PlusI);
        assert_eq!(t, z);
        // Y * X = -iZ
        let (ph, t) = y.mul(&x).unwrap();
        assert_eq!(ph, Phase::MinusI);
        assert_eq!(t, z);
        // Z * X = iY
        let (ph, t) = z.mul(&x).unwrap();
        assert_eq!(ph, Phase::PlusI);
        assert_eq!(t, y);
        // X * X = I
        let (ph, t) = x.mul(&x).unwrap();
        assert_eq!(ph, Phase::PlusOne);
        assert!(t.is_identity());
        // Y * Y = I
        let (ph, _) = y.mul(&y).unwrap();
        assert_eq!(ph, Phase::PlusOne);
    }

    #[test]
    fn factorwise_product() {
        // (X⊗Z) * (Y⊗Z) = iZ⊗I, qubit 1 leftmost in the notation
        let a = PauliTerm::from_ops(2, &[(1, PauliOp::X), (0, PauliOp::Z)]);
        let b = PauliTerm::from_ops(2, &[(1, PauliOp::Y), (0, PauliOp::Z)]);
        let (ph, t) = a.mul(&b).unwrap();
        assert_eq!(ph, Phase::PlusI);
        assert_eq!(t, PauliTerm::from_ops(2, &[(1, PauliOp::Z)]));
        assert_eq!(t.to_string(), "ZI");
    }

    #[test]
    fn commutation_examples() {
        let xx = PauliTerm::from_ops(2, &[(0, PauliOp::X), (1, PauliOp::X)]);
        let zz = PauliTerm::from_ops(2, &[(0, PauliOp::Z), (1, PauliOp::Z)]);
        assert!(xx.commutes(&zz).unwrap());
        let x0 = PauliTerm::single_x(1, 0);
        let z0 = PauliTerm::single_z(1, 0);
        assert!(!x0.commutes(&z0).unwrap());
        assert!(x0.commutes(&PauliTerm::identity(1)).unwrap());
    }

    #[test]
    fn size_mismatch_rejected() {
        let a = PauliTerm::identity(2);
        let b = PauliTerm::identity(3);
        assert!(a.mul(&b).is_err());
        assert!(a.commutes(&b).is_err());
        let mut s = PauliSum::new(2);
        assert!(s.add_scaled(c(1.0, 0.0), &b).is_err());
    }

    #[test]
    fn cancellation_removes_term() {
        let mut s = PauliSum::new(2);
        let t = PauliTerm::from_ops(2, &[(0, PauliOp::X)]);
        s.add_scaled(c(0.25, 0.0), &t).unwrap();
        s.add_scaled(c(-0.25, 0.0), &t).unwrap();
        s.simplify();
        assert_eq!(s.n_terms(), 0);
    }

    #[test]
    fn simplify_idempotent() {
        let mut s = PauliSum::new(2);
        s.add_scaled(c(1e-13, 0.0), &PauliTerm::single_z(2, 0)).unwrap();
        s.add_scaled(c(0.5, 0.0), &PauliTerm::single_z(2, 1)).unwrap();
        s.simplify();
        assert_eq!(s.n_terms(), 1);
        let again = {
            let mut t = s.clone();
            t.simplify();
            t
        };
        assert_eq!(again.n_terms(), s.n_terms());
    }

    #[test]
    fn census_single_term() {
        let mut s = PauliSum::new(2);
        s.add_scaled(c(1.0, 0.0), &PauliTerm::from_ops(2, &[(1, PauliOp::Z)]))
            .unwrap();
        let st = s.stats().unwrap();
        assert_eq!(st.n_strings, 1);
        assert_eq!(st.n_z, 1);
        assert_eq!(st.n_id, 1);
        assert_eq!(st.n_x + st.n_y + st.n_z + st.n_id, st.n_strings * 2);
        assert_eq!(st.pct_z, 50.0);
        assert!(PauliSum::new(2).stats().is_err());
    }

    #[test]
    fn weight_counts_y_sites() {
        let t = PauliTerm::from_ops(4, &[(0, PauliOp::Y), (2, PauliOp::X), (3, PauliOp::Z)]);
        assert_eq!(t.weight(), 3);
        assert_eq!(t.support(), vec![0, 2, 3]);
        assert_eq!(t.to_string(), "ZXIY");
    }

    #[test]
    fn sorted_terms_deterministic() {
        let mut s = PauliSum::new(3);
        for q in [2, 0, 1] {
            s.add_scaled(c(1.0, 0.0), &PauliTerm::single_z(3, q)).unwrap();
            s.add_scaled(c(1.0, 0.0), &PauliTerm::single_x(3, q)).unwrap();
        }
        let order: Vec<String> = s.sorted_terms().iter().map(|(t, _)| t.to_string()).collect();
        let mut expect = order.clone();
        expect.sort();
        // all x-only terms (z = 0) precede z-carrying terms
        assert!(order.iter().position(|t| t == "IIZ").unwrap() > 2);
        assert_eq!(order.len(), 6);
        assert_eq!(expect.len(), 6);
    }
}
