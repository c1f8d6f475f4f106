//! Dense small matrices over a finite ring, plus the packed fixed-width
//! encoding that makes ten-million-element closures affordable.

use crate::rings::{Elem, FiniteRing, RingKind};
use crate::Error;
use std::hash::{BuildHasherDefault, Hash, Hasher};

pub const MAX_DIM: usize = 7;

/// Row-major `dim x dim` matrix; entries are canonical ring residues.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mat {
    pub dim: u8,
    e: [Elem; MAX_DIM * MAX_DIM],
}

impl Mat {
    pub fn zero(dim: usize) -> Mat {
        assert!((1..=MAX_DIM).contains(&dim));
        Mat {
            dim: dim as u8,
            e: [0; MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(ring: FiniteRing, dim: usize) -> Mat {
        let mut m = Mat::zero(dim);
        for i in 0..dim {
            m.set(i, i, ring.one());
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.e[r * self.dim as usize + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.e[r * self.dim as usize + c] = v;
    }

    pub fn is_identity(&self, ring: FiniteRing) -> bool {
        *self == Mat::identity(ring, self.dim as usize)
    }

    /// Diagonal all ones and everything below zero.
    pub fn is_upper_unitriangular(&self, ring: FiniteRing) -> bool {
        let d = self.dim as usize;
        for i in 0..d {
            if self.get(i, i) != ring.one() {
                return false;
            }
            for j in 0..i {
                if self.get(i, j) != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, ring: FiniteRing, other: &Mat) -> Mat {
        debug_assert_eq!(self.dim, other.dim);
        let d = self.dim as usize;
        let mut out = Mat::zero(d);
        match ring.kind() {
            RingKind::Zmod(n) => {
                let n = n as u64;
                for i in 0..d {
                    for j in 0..d {
                        let mut acc: u64 = 0;
                        for k in 0..d {
                            acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                        }
                        out.set(i, j, (acc % n) as Elem);
                    }
                }
            }
            RingKind::Dual(p) => {
                let p64 = p as u64;
                for i in 0..d {
                    for j in 0..d {
                        let mut c0: u64 = 0;
                        let mut c1: u64 = 0;
                        for k in 0..d {
                            let a = self.get(i, k);
                            let b = other.get(k, j);
                            let (a0, a1) = ((a % p) as u64, (a / p) as u64);
                            let (b0, b1) = ((b % p) as u64, (b / p) as u64);
                            c0 += a0 * b0;
                            c1 += a0 * b1 + a1 * b0;
                        }
                        out.set(i, j, (c0 % p64) as Elem + p * ((c1 % p64) as Elem));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, ring: FiniteRing, other: &Mat) -> Mat {
        debug_assert_eq!(self.dim, other.dim);
        let d = self.dim as usize;
        let mut out = Mat::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set(i, j, ring.add(self.get(i, j), other.get(i, j)));
            }
        }
        out
    }

    pub fn scale(&self, ring: FiniteRing, s: Elem) -> Mat {
        let d = self.dim as usize;
        let mut out = Mat::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set(i, j, ring.mul(s, self.get(i, j)));
            }
        }
        out
    }

    pub fn det(&self, ring: FiniteRing) -> Elem {
        let d = self.dim as usize;
        let rows: Vec<usize> = (0..d).collect();
        let cols: Vec<usize> = (0..d).collect();
        det_minor(self, ring, &rows, &cols)
    }

    /// Inverse via the adjugate; fails when det is not a unit.
    pub fn inverse(&self, ring: FiniteRing) -> Result<Mat, Error> {
        let d = self.dim as usize;
        let det = self.det(ring);
        let det_inv = ring
            .inv(det)
            .ok_or_else(|| Error::Domain(format!("matrix determinant {det} is not a unit")))?;
        let mut out = Mat::zero(d);
        let all: Vec<usize> = (0..d).collect();
        for i in 0..d {
            for j in 0..d {
                let rows: Vec<usize> = all.iter().copied().filter(|&r| r != j).collect();
                let cols: Vec<usize> = all.iter().copied().filter(|&c| c != i).collect();
                let mut cof = det_minor(self, ring, &rows, &cols);
                if (i + j) % 2 == 1 {
                    cof = ring.neg(cof);
                }
                out.set(i, j, ring.mul(det_inv, cof));
            }
        }
        Ok(out)
    }

    /// [a, b] = a b a^{-1} b^{-1}.
    pub fn commutator(ring: FiniteRing, a: &Mat, b: &Mat) -> Result<Mat, Error> {
        let ai = a.inverse(ring)?;
        let bi = b.inverse(ring)?;
        Ok(a.mul(ring, b).mul(ring, &ai).mul(ring, &bi))
    }

    /// Left conjugate g self g^{-1}.
    pub fn conjugate_by(&self, ring: FiniteRing, g: &Mat) -> Result<Mat, Error> {
        let gi = g.inverse(ring)?;
        Ok(g.mul(ring, self).mul(ring, &gi))
    }

    pub fn entries(&self) -> impl Iterator<Item = Elem> + '_ {
        let d = self.dim as usize;
        (0..d * d).map(move |k| self.e[k])
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        let d = self.dim as usize;
        (0..d)
            .map(|i| (0..d).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

fn det_minor(m: &Mat, ring: FiniteRing, rows: &[usize], cols: &[usize]) -> Elem {
    if rows.is_empty() {
        return ring.one();
    }
    if rows.len() == 1 {
        return m.get(rows[0], cols[0]);
    }
    let sub_rows = &rows[1..];
    let mut acc = ring.zero();
    for (k, &c) in cols.iter().enumerate() {
        let a = m.get(rows[0], c);
        if a == 0 {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let mut term = ring.mul(a, det_minor(m, ring, sub_rows, &sub_cols));
        if k % 2 == 1 {
            term = ring.neg(term);
        }
        acc = ring.add(acc, term);
    }
    acc
}

/// Fixed-width bit packing of a matrix into 256 bits.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Codec {
    pub dim: u8,
    pub bits: u32,
}

impl Codec {
    pub fn new(ring: FiniteRing, dim: usize) -> Codec {
        let size = ring.size().max(2);
        let bits = 32 - (size - 1).leading_zeros();
        assert!(
            dim * dim * bits as usize <= 256,
            "matrix does not fit the packed encoding: dim {dim}, {bits} bits per entry"
        );
        Codec {
            dim: dim as u8,
            bits,
        }
    }

    pub fn pack(&self, m: &Mat) -> Packed {
        debug_assert_eq!(m.dim, self.dim);
        let d = self.dim as usize;
        let mut w = [0u64; 4];
        let mut pos = 0usize;
        for k in 0..d * d {
            let v = m.e[k] as u64;
            let word = pos / 64;
            let off = pos % 64;
            w[word] |= v << off;
            let spill = 64 - off;
            if (self.bits as usize) > spill {
                w[word + 1] |= v >> spill;
            }
            pos += self.bits as usize;
        }
        Packed(w)
    }

    pub fn unpack(&self, p: &Packed) -> Mat {
        let d = self.dim as usize;
        let mask = if self.bits == 64 {
            u64::MAX
        } else {
            (1u64 << self.bits) - 1
        };
        let mut m = Mat::zero(d);
        let mut pos = 0usize;
        for k in 0..d * d {
            let word = pos / 64;
            let off = pos % 64;
            let mut v = p.0[word] >> off;
            let spill = 64 - off;
            if (self.bits as usize) > spill {
                v |= p.0[word + 1] << spill;
            }
            m.e[k] = (v & mask) as Elem;
            pos += self.bits as usize;
        }
        m
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Packed(pub [u64; 4]);

impl Hash for Packed {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for w in self.0 {
            state.write_u64(w);
        }
    }
}

/// Multiplicative word hasher; the default SipHash dominates closure time
/// at 10^7 members, this does not.
#[derive(Default)]
pub struct FxHasher {
    hash: u64,
}

const FX_SEED: u64 = 0x51_7c_c1_b7_27_22_0a_95;

impl Hasher for FxHasher {
    fn finish(&self) -> u64 {
        self.hash
    }

    fn write(&mut self, bytes: &[u8]) {
        for chunk in bytes.chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            self.write_u64(u64::from_le_bytes(buf));
        }
    }

    fn write_u64(&mut self, v: u64) {
        self.hash = (self.hash.rotate_left(5) ^ v).wrapping_mul(FX_SEED);
    }
}

pub type FxBuild = BuildHasherDefault<FxHasher>;
