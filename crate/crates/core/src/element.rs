//! Group elements: permutations, or pairs (v, q) living in a semidirect
//! product of a finite abelian translation part with a permutation group
//! acting through matrices over Z/mZ.

use std::fmt;

use crate::perm::Perm;

/// An element of a semidirect product `(Z/mZ)^r . Q`, stored self-contained:
/// the translation part `v`, the acting permutation `q`, and the matrix by
/// which `q` acts on the translation module. The matrix is determined by `q`
/// through the action homomorphism; carrying it in the element makes
/// multiplication a pure function of its two operands.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SdElement {
    pub modulus: u32,
    pub v: Vec<u32>,
    pub q: Perm,
    /// Row-major r x r matrix over Z/mZ; row i gives the coefficients of the
    /// image of coordinate i.
    pub mat: Vec<u32>,
}

impl SdElement {
    pub fn rank(&self) -> usize {
        self.v.len()
    }

    pub fn identity_like(&self) -> SdElement {
        let r = self.rank();
        SdElement {
            modulus: self.modulus,
            v: vec![0; r],
            q: Perm::identity(self.q.degree()),
            mat: identity_matrix(r),
        }
    }

    fn mat_apply(&self, v: &[u32], out: &mut [u32]) {
        let r = self.rank();
        let m = self.modulus as u64;
        for i in 0..r {
            let mut acc = 0u64;
            for j in 0..r {
                acc += (self.mat[i * r + j] as u64) * (v[j] as u64) % m;
            }
            out[i] = (acc % m) as u32;
        }
    }

    /// `(v1, q1)(v2, q2) = (v1 + q1.v2, q1 q2)`.
    pub fn compose_into(&self, other: &SdElement, out: &mut SdElement) {
        debug_assert_eq!(self.modulus, other.modulus);
        debug_assert_eq!(self.rank(), other.rank());
        let r = self.rank();
        let m = self.modulus as u64;
        self.mat_apply(&other.v, &mut out.v);
        for i in 0..r {
            out.v[i] = ((out.v[i] as u64 + self.v[i] as u64) % m) as u32;
        }
        self.q.compose_into(&other.q, &mut out.q);
        for i in 0..r {
            for j in 0..r {
                let mut acc = 0u64;
                for k in 0..r {
                    acc += (self.mat[i * r + k] as u64) * (other.mat[k * r + j] as u64) % m;
                }
                out.mat[i * r + j] = (acc % m) as u32;
            }
        }
        out.modulus = self.modulus;
    }

    pub fn inverse(&self) -> SdElement {
        // The matrix has finite order; iterate to find mat^(ord-1).
        let r = self.rank();
        let id = identity_matrix(r);
        let mut inv_mat = id.clone();
        let mut cur = self.mat.clone();
        while cur != id {
            inv_mat = mat_mul(&inv_mat, &self.mat, r, self.modulus);
            cur = mat_mul(&cur, &self.mat, r, self.modulus);
        }
        let mut v = vec![0u32; r];
        let m = self.modulus as u64;
        for i in 0..r {
            let mut acc = 0u64;
            for j in 0..r {
                acc += (inv_mat[i * r + j] as u64) * (self.v[j] as u64) % m;
            }
            v[i] = ((m - acc % m) % m) as u32;
        }
        SdElement {
            modulus: self.modulus,
            v,
            q: self.q.inverse(),
            mat: inv_mat,
        }
    }
}

pub(crate) fn identity_matrix(r: usize) -> Vec<u32> {
    let mut mat = vec![0u32; r * r];
    for i in 0..r {
        mat[i * r + i] = 1;
    }
    mat
}

pub(crate) fn mat_mul(a: &[u32], b: &[u32], r: usize, modulus: u32) -> Vec<u32> {
    let m = modulus as u64;
    let mut out = vec![0u32; r * r];
    for i in 0..r {
        for j in 0..r {
            let mut acc = 0u64;
            for k in 0..r {
                acc += (a[i * r + k] as u64) * (b[k * r + j] as u64) % m;
            }
            out[i * r + j] = (acc % m) as u32;
        }
    }
    out
}

impl fmt::Display for SdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.v.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "; {}]", self.q)
    }
}

/// One element of a finite group, in one of the two supported kinds.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    Perm(Perm),
    Sd(SdElement),
}

/// The kind and degree/shape of an element; all elements of one group must
/// share it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementShape {
    Perm { degree: usize },
    Sd { modulus: u32, rank: usize, degree: usize },
}

impl fmt::Display for ElementShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementShape::Perm { degree } => write!(f, "perm/{}", degree),
            ElementShape::Sd {
                modulus,
                rank,
                degree,
            } => write!(f, "sd/{}^{}:{}", modulus, rank, degree),
        }
    }
}

impl GroupElement {
    pub fn shape(&self) -> ElementShape {
        match self {
            GroupElement::Perm(p) => ElementShape::Perm { degree: p.degree() },
            GroupElement::Sd(s) => ElementShape::Sd {
                modulus: s.modulus,
                rank: s.rank(),
                degree: s.q.degree(),
            },
        }
    }

    pub fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(Perm::identity(p.degree())),
            GroupElement::Sd(s) => GroupElement::Sd(s.identity_like()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Perm(p) => p.is_identity(),
            GroupElement::Sd(s) => {
                s.v.iter().all(|&x| x == 0)
                    && s.q.is_identity()
                    && s.mat == identity_matrix(s.rank())
            }
        }
    }

    /// Composition into a preallocated scratch element of the same shape.
    pub fn compose_into(&self, other: &GroupElement, out: &mut GroupElement) {
        match (self, other, out) {
            (GroupElement::Perm(a), GroupElement::Perm(b), GroupElement::Perm(c)) => {
                a.compose_into(b, c)
            }
            (GroupElement::Sd(a), GroupElement::Sd(b), GroupElement::Sd(c)) => a.compose_into(b, c),
            _ => panic!("composing elements of different kinds"),
        }
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let mut out = self.identity_like();
        self.compose_into(other, &mut out);
        out
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(p.inverse()),
            GroupElement::Sd(s) => GroupElement::Sd(s.inverse()),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{}", p),
            GroupElement::Sd(s) => write!(f, "{}", s),
        }
    }
}

impl From<Perm> for GroupElement {
    fn from(p: Perm) -> Self {
        GroupElement::Perm(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn sd(modulus: u32, v: Vec<u32>, q: Perm, mat: Vec<u32>) -> SdElement {
        SdElement { modulus, v, q, mat }
    }

    #[test]
    fn semidirect_multiplication_rule() {
        // (Z/3)^2 with the coordinate swap acting.
        let swap = parse_cycles(2, "(1 2)").unwrap();
        let id2 = Perm::identity(2);
        let a = sd(3, vec![1, 0], swap.clone(), vec![0, 1, 1, 0]);
        let b = sd(3, vec![0, 2], id2.clone(), identity_matrix(2));
        // (v1 + q1.v2, q1 q2) = ((1,0) + (2,0), swap) = ((0,0), swap)
        let ab = {
            let mut out = a.identity_like();
            a.compose_into(&b, &mut out);
            out
        };
        assert_eq!(ab.v, vec![0, 0]);
        assert_eq!(ab.q, swap);
    }

    #[test]
    fn semidirect_inverse() {
        let swap = parse_cycles(2, "(1 2)").unwrap();
        let a = sd(3, vec![1, 2], swap, vec![0, 1, 1, 0]);
        let inv = a.inverse();
        let mut out = a.identity_like();
        a.compose_into(&inv, &mut out);
        assert!(GroupElement::Sd(out).is_identity());
        let mut out2 = a.identity_like();
        inv.compose_into(&a, &mut out2);
        assert!(GroupElement::Sd(out2).is_identity());
    }

    #[test]
    fn display_forms() {
        let p = GroupElement::Perm(parse_cycles(4, "(1 2)(3 4)").unwrap());
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        let s = GroupElement::Sd(sd(3, vec![1, 0, 2], Perm::identity(4), identity_matrix(3)));
        assert_eq!(s.to_string(), "[1,0,2; ()]");
    }
}
