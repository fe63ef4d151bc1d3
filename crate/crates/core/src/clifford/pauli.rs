use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `±` a tensor product of `I/X/Y/Z`, stored in binary symplectic form.
///
/// Qubit `k` carries `X` for `(x, z) = (1, 0)`, `Z` for `(0, 1)` and `Y` for
/// `(1, 1)`. Only the Hermitian signs `±1` are representable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: Vec<bool>,
    z: Vec<bool>,
    negative: bool,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self {
            x: vec![false; n],
            z: vec![false; n],
            negative: false,
        }
    }

    pub fn from_bits(x: Vec<bool>, z: Vec<bool>, negative: bool) -> Self {
        assert_eq!(x.len(), z.len(), "x and z parts must have equal length");
        Self { x, z, negative }
    }

    pub fn single_x(n: usize, k: usize) -> Self {
        let mut p = Self::identity(n);
        p.x[k] = true;
        p
    }

    pub fn single_z(n: usize, k: usize) -> Self {
        let mut p = Self::identity(n);
        p.z[k] = true;
        p
    }

    pub fn zz(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.z[i] = true;
        p.z[j] = true;
        p
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &[bool] {
        &self.x
    }

    pub fn z_bits(&self) -> &[bool] {
        &self.z
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn negated(&self) -> Self {
        Self {
            negative: !self.negative,
            ..self.clone()
        }
    }

    pub(crate) fn x_mut(&mut self) -> &mut [bool] {
        &mut self.x
    }

    pub(crate) fn z_mut(&mut self) -> &mut [bool] {
        &mut self.z
    }

    pub(crate) fn flip_sign(&mut self) {
        self.negative = !self.negative;
    }

    pub fn is_identity(&self) -> bool {
        !self.x.iter().chain(&self.z).any(|&b| b)
    }

    /// Symplectic inner product is zero.
    pub fn commutes_with(&self, other: &PauliOperator) -> bool {
        let mut parity = false;
        for k in 0..self.num_qubits() {
            parity ^= (self.x[k] & other.z[k]) ^ (self.z[k] & other.x[k]);
        }
        !parity
    }

    /// Same Pauli string, ignoring sign.
    pub fn same_string(&self, other: &PauliOperator) -> bool {
        self.x == other.x && self.z == other.z
    }

    /// Product `self · other`.
    ///
    /// Fails for anticommuting factors, whose product carries an imaginary
    /// phase and is not Hermitian.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::invalid("Pauli operators act on different qubit counts"));
        }
        let mut phase = 2 * (self.negative as i32 + other.negative as i32);
        for k in 0..self.num_qubits() {
            phase += phase_exponent(self.x[k], self.z[k], other.x[k], other.z[k]);
        }
        let phase = phase.rem_euclid(4);
        if phase % 2 == 1 {
            return Err(Error::Internal(
                "product of Pauli operators has an imaginary phase".into(),
            ));
        }
        Ok(PauliOperator {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a ^ b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a ^ b).collect(),
            negative: phase == 2,
        })
    }
}

/// Power of `i` picked up when multiplying single-qubit Paulis `(x1,z1)·(x2,z2)`.
pub(crate) fn phase_exponent(x1: bool, z1: bool, x2: bool, z2: bool) -> i32 {
    let (x2, z2) = (x2 as i32, z2 as i32);
    match (x1, z1) {
        (false, false) => 0,
        (true, true) => z2 - x2,
        (true, false) => z2 * (2 * x2 - 1),
        (false, true) => x2 * (1 - 2 * z2),
    }
}

impl fmt::Display for PauliOperator {
    /// `"+XIZ"` style, qubit 0 leftmost.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        for k in 0..self.num_qubits() {
            let c = match (self.x[k], self.z[k]) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOperator({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let mut x = Vec::with_capacity(body.len());
        let mut z = Vec::with_capacity(body.len());
        for c in body.chars() {
            let (xb, zb) = match c {
                'I' => (false, false),
                'X' => (true, false),
                'Y' => (true, true),
                'Z' => (false, true),
                _ => return Err(Error::parse(format!("bad Pauli character {c:?} in {s:?}"))),
            };
            x.push(xb);
            z.push(zb);
        }
        Ok(Self { x, z, negative })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn display_round_trip() {
        for s in ["+XIZ", "-YYI", "+I"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("XZ").to_string(), "+XZ");
        assert!("XQ".parse::<PauliOperator>().is_err());
    }

    #[test]
    fn commutation() {
        assert!(!p("X").commutes_with(&p("Z")));
        assert!(p("XX").commutes_with(&p("ZZ")));
        assert!(p("ZZI").commutes_with(&p("IIX")));
        assert!(!p("ZZI").commutes_with(&p("IXI")));
    }

    #[test]
    fn products_track_signs() {
        // XX · ZZ = (XZ)⊗(XZ) = (-iY)⊗(-iY) = -YY
        assert_eq!(p("XX").multiply(&p("ZZ")).unwrap(), p("-YY"));
        assert_eq!(p("ZZ").multiply(&p("XX")).unwrap(), p("-YY"));
        assert_eq!(p("-ZI").multiply(&p("ZZ")).unwrap(), p("-IZ"));
        assert_eq!(p("YY").multiply(&p("YY")).unwrap(), p("II"));
        assert!(p("X").multiply(&p("Z")).is_err());
    }
}
