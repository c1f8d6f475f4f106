//! Finite matrix-group machinery: exhaustive closures, normal closures,
//! mixed commutator subgroups, congruence filtering, reduction and centers.
//!
//! The closure BFS packs matrices into 256-bit keys and thins its multiplier
//! list lazily: a candidate generator joins the multiplier list only when it
//! is not already a known member. The final member set is exactly the
//! requested (normal) closure; the thinned list is just a smaller generating
//! set for it discovered along the way.

use crate::chevgen::Representation;
use crate::mat::{Codec, FxBuild, Mat, Packed};
use crate::rings::{quotient_map, Elem, FiniteRing, IdealHandle};
use crate::Error;
use rayon::prelude::*;
use std::collections::HashSet;
use std::io::{Read, Write};

pub const DEFAULT_BUDGET: usize = 20_000_000;

pub struct SubgroupSet {
    pub ring: FiniteRing,
    pub codec: Codec,
    members: HashSet<Packed, FxBuild>,
    order: Vec<Packed>,
    /// Thinned multiplier list; generates the member set.
    pub gens: Vec<Mat>,
    pub label: String,
}

impl std::fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SubgroupSet({}, {} members)",
            self.label,
            self.order.len()
        )
    }
}

impl SubgroupSet {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.members.contains(&self.codec.pack(m))
    }

    pub fn contains_packed(&self, p: &Packed) -> bool {
        self.members.contains(p)
    }

    pub fn packed(&self) -> &[Packed] {
        &self.order
    }

    pub fn iter_mats(&self) -> impl Iterator<Item = Mat> + '_ {
        self.order.iter().map(move |p| self.codec.unpack(p))
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        assert_eq!(
            self.codec, other.codec,
            "subset check across representations"
        );
        self.len() <= other.len() && self.order.iter().all(|p| other.members.contains(p))
    }

    pub fn same_members(&self, other: &SubgroupSet) -> bool {
        self.len() == other.len() && self.is_subset_of(other)
    }

    /// First member of self missing from other, for failure witnesses.
    pub fn witness_not_in(&self, other: &SubgroupSet) -> Option<Mat> {
        self.order
            .iter()
            .find(|p| !other.members.contains(p))
            .map(|p| self.codec.unpack(p))
    }

    fn from_parts(
        ring: FiniteRing,
        codec: Codec,
        order: Vec<Packed>,
        gens: Vec<Mat>,
        label: String,
    ) -> SubgroupSet {
        let members: HashSet<Packed, FxBuild> = order.iter().copied().collect();
        assert_eq!(members.len(), order.len());
        SubgroupSet {
            ring,
            codec,
            members,
            order,
            gens,
            label,
        }
    }

    /// Exhaustive product-closure check for small sets, sampled otherwise.
    pub fn check_is_group(&self, rep: &Representation) -> bool {
        let r = self.ring;
        if !self.contains(&rep.identity()) {
            return false;
        }
        let mats: Vec<Mat> = self.iter_mats().collect();
        if mats.len() <= 300 {
            for a in &mats {
                for b in &mats {
                    if !self.contains(&a.mul(r, b)) {
                        return false;
                    }
                }
            }
            true
        } else {
            let mut state = 0x2545f4914f6cdd1du64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state as usize
            };
            for _ in 0..2000 {
                let a = &mats[next() % mats.len()];
                let b = &mats[next() % mats.len()];
                if !self.contains(&a.mul(r, b)) {
                    return false;
                }
            }
            true
        }
    }
}

struct Bfs<'a> {
    rep: &'a Representation,
    codec: Codec,
    members: HashSet<Packed, FxBuild>,
    order: Vec<Packed>,
    mult: Vec<Mat>,
    mult_mark: Vec<usize>,
    conj: Vec<(Mat, Mat)>,
    conj_mark: Vec<usize>,
    budget: usize,
}

impl<'a> Bfs<'a> {
    fn new(rep: &'a Representation, conjugators: &[Mat], budget: usize) -> Result<Bfs<'a>, Error> {
        let codec = rep.codec;
        let mut members: HashSet<Packed, FxBuild> = HashSet::default();
        let mut order = Vec::new();
        let id = codec.pack(&rep.identity());
        members.insert(id);
        order.push(id);
        let mut conj = Vec::new();
        for c in conjugators {
            let inv = c.inverse(rep.ring)?;
            conj.push((*c, inv));
        }
        let conj_mark = vec![0; conj.len()];
        Ok(Bfs {
            rep,
            codec,
            members,
            order,
            mult: Vec::new(),
            mult_mark: Vec::new(),
            conj,
            conj_mark,
            budget,
        })
    }

    fn insert(&mut self, p: Packed) -> bool {
        if self.members.insert(p) {
            self.order.push(p);
            true
        } else {
            false
        }
    }

    fn offer_generator(&mut self, g: &Mat) {
        let p = self.codec.pack(g);
        if self.members.contains(&p) {
            return;
        }
        self.insert(p);
        self.mult.push(*g);
        self.mult_mark.push(0);
    }

    fn check_budget(&self) -> Result<(), Error> {
        if self.order.len() > self.budget {
            return Err(Error::Budget {
                frontier: self.order.len(),
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Saturate under the registered multipliers only.
    fn saturate_mult(&mut self) -> Result<(), Error> {
        loop {
            let mut any = false;
            for gi in 0..self.mult.len() {
                let from = self.mult_mark[gi];
                let to = self.order.len();
                if from == to {
                    continue;
                }
                any = true;
                let ring = self.rep.ring;
                let codec = self.codec;
                let g = self.mult[gi];
                let batch: Vec<Packed> = self.order[from..to]
                    .par_iter()
                    .map(|p| codec.pack(&codec.unpack(p).mul(ring, &g)))
                    .collect();
                for p in batch {
                    self.insert(p);
                }
                self.mult_mark[gi] = to;
                self.check_budget()?;
            }
            if !any {
                return Ok(());
            }
        }
    }

    /// Close under all registered operations. Multiplication is saturated
    /// before each conjugation pass, and genuinely new conjugates are
    /// absorbed one at a time with full re-saturation in between: after the
    /// first absorption most of a conjugation batch lands inside the grown
    /// group, so each surviving multiplier at least doubles the member set
    /// and the multiplier list stays logarithmic in the group order.
    fn saturate(&mut self) -> Result<(), Error> {
        loop {
            self.saturate_mult()?;
            for ci in 0..self.conj.len() {
                let from = self.conj_mark[ci];
                let to = self.order.len();
                if from == to {
                    continue;
                }
                let ring = self.rep.ring;
                let codec = self.codec;
                let (c, c_inv) = self.conj[ci];
                let batch: Vec<Packed> = self.order[from..to]
                    .par_iter()
                    .map(|p| codec.pack(&c.mul(ring, &codec.unpack(p)).mul(ring, &c_inv)))
                    .collect();
                self.conj_mark[ci] = to;
                for p in batch {
                    if self.members.contains(&p) {
                        continue;
                    }
                    let m = codec.unpack(&p);
                    self.insert(p);
                    self.mult.push(m);
                    self.mult_mark.push(0);
                    self.saturate_mult()?;
                }
                self.check_budget()?;
            }
            let done = self.order.len();
            if self.mult_mark.iter().all(|&m| m == done)
                && self.conj_mark.iter().all(|&m| m == done)
            {
                break;
            }
        }
        Ok(())
    }

    fn finish(self, label: String) -> SubgroupSet {
        SubgroupSet {
            ring: self.rep.ring,
            codec: self.codec,
            members: self.members,
            order: self.order,
            gens: self.mult,
            label,
        }
    }
}

fn bfs_closure(
    rep: &Representation,
    gens: &[Mat],
    conjugators: &[Mat],
    label: &str,
    budget: usize,
) -> Result<SubgroupSet, Error> {
    let mut bfs = Bfs::new(rep, conjugators, budget)?;
    for g in gens {
        bfs.offer_generator(g);
        bfs.saturate()?;
    }
    bfs.saturate()?;
    Ok(bfs.finish(label.to_string()))
}

/// The subgroup generated by gens.
pub fn closure(
    rep: &Representation,
    gens: &[Mat],
    label: &str,
    budget: usize,
) -> Result<SubgroupSet, Error> {
    bfs_closure(rep, gens, &[], label, budget)
}

/// The smallest subgroup containing gens and stable under conjugation by
/// every conjugator (hence by the whole group the conjugators generate).
pub fn normal_closure(
    rep: &Representation,
    gens: &[Mat],
    conjugators: &[Mat],
    label: &str,
    budget: usize,
) -> Result<SubgroupSet, Error> {
    bfs_closure(rep, gens, conjugators, label, budget)
}

/// Deduplicated commutators [h, k] over full generator lists, given with
/// their inverses so no adjugate inversion runs in the hot loop.
pub fn pairwise_commutators(
    rep: &Representation,
    gens_h: &[(Mat, Mat)],
    gens_k: &[(Mat, Mat)],
) -> Vec<Mat> {
    let ring = rep.ring;
    let codec = rep.codec;
    let packed: Vec<(Packed, Mat)> = gens_h
        .par_iter()
        .flat_map_iter(|(h, h_inv)| {
            gens_k.iter().map(move |(k, k_inv)| {
                let com = h.mul(ring, k).mul(ring, h_inv).mul(ring, k_inv);
                (codec.pack(&com), com)
            })
        })
        .collect();
    let mut seen: HashSet<Packed, FxBuild> = HashSet::default();
    let id = codec.pack(&rep.identity());
    seen.insert(id);
    let mut out = Vec::new();
    for (p, m) in packed {
        if seen.insert(p) {
            out.push(m);
        }
    }
    out
}

/// [H, K] as the normal closure of generator commutators. Sound when the
/// conjugators generate a group that normalizes both H and K and contains
/// them; the caller guarantees that.
pub fn commutator_subgroup(
    rep: &Representation,
    gens_h: &[(Mat, Mat)],
    gens_k: &[(Mat, Mat)],
    conjugators: &[Mat],
    label: &str,
    budget: usize,
) -> Result<SubgroupSet, Error> {
    let seeds = pairwise_commutators(rep, gens_h, gens_k);
    normal_closure(rep, &seeds, conjugators, label, budget)
}

/// The ideal generated by the entries of g - 1.
pub fn level(ring: FiniteRing, g: &Mat) -> IdealHandle {
    let id = Mat::identity(ring, g.dim as usize);
    let diffs: Vec<Elem> = g
        .entries()
        .zip(id.entries())
        .map(|(a, b)| ring.sub(a, b))
        .collect();
    IdealHandle::generated_by(ring, &diffs)
}

fn level_within(ring: FiniteRing, g: &Mat, ideal: &IdealHandle) -> bool {
    let id = Mat::identity(ring, g.dim as usize);
    let ok = g
        .entries()
        .zip(id.entries())
        .all(|(a, b)| ideal.contains(ring.sub(a, b)));
    ok
}

/// Members of the ambient group congruent to the identity mod I.
pub fn congruence_subgroup(ambient: &SubgroupSet, ideal: &IdealHandle) -> SubgroupSet {
    let ring = ambient.ring;
    let codec = ambient.codec;
    let order: Vec<Packed> = ambient
        .order
        .iter()
        .filter(|p| level_within(ring, &codec.unpack(p), ideal))
        .copied()
        .collect();
    SubgroupSet::from_parts(
        ring,
        codec,
        order,
        Vec::new(),
        format!("{} cap G(level {})", ambient.label, ideal.label()),
    )
}

/// Entrywise reduction of a matrix along R -> R/I.
pub fn reduce_mat(map: &crate::rings::QuotientMap, g: &Mat) -> Mat {
    let d = g.dim as usize;
    let mut out = Mat::zero(d);
    for i in 0..d {
        for j in 0..d {
            out.set(i, j, map.apply(g.get(i, j)));
        }
    }
    out
}

/// Members commuting with every generator of the ambient group.
pub fn center(ambient: &SubgroupSet) -> SubgroupSet {
    let ring = ambient.ring;
    let codec = ambient.codec;
    let gens: Vec<Mat> = ambient.gens.clone();
    let order: Vec<Packed> = ambient
        .order
        .iter()
        .filter(|p| {
            let m = codec.unpack(p);
            gens.iter().all(|g| m.mul(ring, g) == g.mul(ring, &m))
        })
        .copied()
        .collect();
    SubgroupSet::from_parts(
        ring,
        codec,
        order,
        Vec::new(),
        format!("Z({})", ambient.label),
    )
}

/// Full preimage in the ambient group of the center of its image mod I.
pub fn full_congruence_subgroup(
    rep: &Representation,
    ambient: &SubgroupSet,
    ideal: &IdealHandle,
) -> SubgroupSet {
    let map = quotient_map(ideal);
    let ring_q = map.quotient;
    let codec_q = Codec::new(ring_q, rep.dim);
    // image of the ambient group mod I, with the reduced thinned generators
    let gens_q: Vec<Mat> = ambient.gens.iter().map(|g| reduce_mat(&map, g)).collect();
    let mut image: HashSet<Packed, FxBuild> = HashSet::default();
    let reduced: Vec<Packed> = ambient
        .order
        .iter()
        .map(|p| codec_q.pack(&reduce_mat(&map, &ambient.codec.unpack(p))))
        .collect();
    for p in &reduced {
        image.insert(*p);
    }
    // center of the image: commutes with every reduced generator
    let central: HashSet<Packed, FxBuild> = image
        .iter()
        .filter(|p| {
            let m = codec_q.unpack(p);
            gens_q.iter().all(|g| m.mul(ring_q, g) == g.mul(ring_q, &m))
        })
        .copied()
        .collect();
    let order: Vec<Packed> = ambient
        .order
        .iter()
        .zip(reduced.iter())
        .filter(|(_, rq)| central.contains(rq))
        .map(|(p, _)| *p)
        .collect();
    SubgroupSet::from_parts(
        ambient.ring,
        ambient.codec,
        order,
        Vec::new(),
        format!("C({}, {})", ambient.label, ideal.label()),
    )
}

/// Factor a unipotent element as a product of root unipotents over the
/// positive roots in increasing height. Coefficients are read off at the
/// per-root pivot entries; the peeled residual must come back to the
/// identity, which certifies the factorization independently.
pub fn factor_unipotent(rep: &Representation, u: &Mat) -> Result<Vec<(usize, Elem)>, Error> {
    let ring = rep.ring;
    if !u.is_upper_unitriangular(ring) {
        return Err(Error::Domain("element is not upper unitriangular".into()));
    }
    let mut residual = *u;
    let mut coeffs = Vec::new();
    for k in rep.system.positive_order() {
        let (r, c, sign) = rep.system.pivot(k);
        let entry = residual.get(r, c);
        let t = if sign == 1 { entry } else { ring.neg(entry) };
        coeffs.push((k, t));
        residual = rep.x(k, ring.neg(t)).mul(ring, &residual);
    }
    if !residual.is_identity(ring) {
        return Err(Error::Domain(
            "unipotent factorization did not terminate at the identity".into(),
        ));
    }
    // re-multiplication cross-check
    let mut prod = rep.identity();
    for &(k, t) in &coeffs {
        prod = prod.mul(ring, &rep.x(k, t));
    }
    if prod != *u {
        return Err(Error::Domain(
            "unipotent factorization failed re-multiplication".into(),
        ));
    }
    Ok(coeffs)
}

/// Exact checks of the five commutator identities on pseudo-random words in
/// the elementary generators.
pub fn check_commutator_identities(
    rep: &Representation,
    trials: usize,
    seed: u64,
) -> Result<(), String> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let ring = rep.ring;
    let nroots = rep.system.roots().len();
    let random_word = |rng: &mut rand_chacha::ChaCha8Rng| -> (Mat, Mat) {
        let mut m = rep.identity();
        let mut inv = rep.identity();
        for _ in 0..5 {
            let alpha = rng.gen_range(0..nroots);
            let xi = rng.gen_range(0..ring.size());
            m = m.mul(ring, &rep.x(alpha, xi));
            inv = rep.x(alpha, ring.neg(xi)).mul(ring, &inv);
        }
        (m, inv)
    };
    let com = |a: &(Mat, Mat), b: &(Mat, Mat)| -> Mat {
        a.0.mul(ring, &b.0).mul(ring, &a.1).mul(ring, &b.1)
    };
    let conj = |a: &(Mat, Mat), b: &(Mat, Mat)| -> (Mat, Mat) {
        (
            a.0.mul(ring, &b.0).mul(ring, &a.1),
            a.0.mul(ring, &b.1).mul(ring, &a.1),
        )
    };
    let mul = |a: &(Mat, Mat), b: &(Mat, Mat)| -> (Mat, Mat) {
        (a.0.mul(ring, &b.0), b.1.mul(ring, &a.1))
    };
    let invert = |a: &(Mat, Mat)| -> (Mat, Mat) { (a.1, a.0) };
    for trial in 0..trials {
        let x = random_word(&mut rng);
        let y = random_word(&mut rng);
        let z = random_word(&mut rng);
        // C1: [x, yz] = [x,y] (y [x,z] y^-1)
        if com(&x, &mul(&y, &z)) != com(&x, &y).mul(ring, &conj(&y, &com_pair(ring, &x, &z)).0) {
            return Err(format!("C1 failed on trial {trial}"));
        }
        // C2: [xy, z] = (x [y,z] x^-1) [x,z]
        if com(&mul(&x, &y), &z) != conj(&x, &com_pair(ring, &y, &z)).0.mul(ring, &com(&x, &z)) {
            return Err(format!("C2 failed on trial {trial}"));
        }
        // C3: [x, y z y^-1] = y [y^-1 x y, z] y^-1
        let lhs = com(&x, &conj(&y, &z));
        let rhs = conj(&y, &com_pair(ring, &conj(&invert(&y), &x), &z)).0;
        if lhs != rhs {
            return Err(format!("C3 failed on trial {trial}"));
        }
        // C4: [y x y^-1, z] = y [x, y^-1 z y] y^-1
        let lhs = com(&conj(&y, &x), &z);
        let rhs = conj(&y, &com_pair(ring, &x, &conj(&invert(&y), &z))).0;
        if lhs != rhs {
            return Err(format!("C4 failed on trial {trial}"));
        }
        // C5: [y, x] = [x, y]^-1
        if com(&y, &x) != com(&x, &y).inverse(ring).map_err(|e| e.to_string())? {
            return Err(format!("C5 failed on trial {trial}"));
        }
    }
    Ok(())
}

fn com_pair(ring: FiniteRing, a: &(Mat, Mat), b: &(Mat, Mat)) -> (Mat, Mat) {
    let c = a.0.mul(ring, &b.0).mul(ring, &a.1).mul(ring, &b.1);
    let ci = b.0.mul(ring, &a.0).mul(ring, &b.1).mul(ring, &a.1);
    (c, ci)
}

const CACHE_MAGIC: u32 = 0x4348_4556;

/// Binary dump: 16-byte header (magic, dim, pad, ring size, member count),
/// then gens count, packed gens, packed members, trailing checksum.
pub fn dump_subgroup<W: Write>(set: &SubgroupSet, w: &mut W) -> Result<(), Error> {
    let mut check = Checksum::new();
    let put_u64 = |w: &mut W, check: &mut Checksum, v: u64| -> Result<(), Error> {
        check.feed(v);
        w.write_all(&v.to_le_bytes())?;
        Ok(())
    };
    w.write_all(&CACHE_MAGIC.to_le_bytes())?;
    w.write_all(&[set.codec.dim, 0])?;
    w.write_all(&(set.ring.size() as u16).to_le_bytes())?;
    w.write_all(&(set.order.len() as u64).to_le_bytes())?;
    check.feed(set.codec.dim as u64);
    check.feed(set.ring.size() as u64);
    check.feed(set.order.len() as u64);
    put_u64(w, &mut check, set.gens.len() as u64)?;
    for g in &set.gens {
        for word in set.codec.pack(g).0 {
            put_u64(w, &mut check, word)?;
        }
    }
    for p in &set.order {
        for word in p.0 {
            put_u64(w, &mut check, word)?;
        }
    }
    w.write_all(&check.value().to_le_bytes())?;
    Ok(())
}

pub fn load_subgroup<R: Read>(
    ring: FiniteRing,
    dim: usize,
    label: &str,
    r: &mut R,
) -> Result<SubgroupSet, Error> {
    let mut check = Checksum::new();
    let mut buf4 = [0u8; 4];
    r.read_exact(&mut buf4)?;
    if u32::from_le_bytes(buf4) != CACHE_MAGIC {
        return Err(Error::Corrupt("bad magic".into()));
    }
    let mut buf2 = [0u8; 2];
    r.read_exact(&mut buf2)?;
    let file_dim = buf2[0];
    r.read_exact(&mut buf2)?;
    let file_size = u16::from_le_bytes(buf2);
    if file_dim as usize != dim || file_size as u32 != ring.size() {
        return Err(Error::Corrupt(format!(
            "cache is for dim {file_dim}, ring size {file_size}; wanted dim {dim}, ring size {}",
            ring.size()
        )));
    }
    let mut buf8 = [0u8; 8];
    let mut get_u64 = |r: &mut R, check: &mut Checksum| -> Result<u64, Error> {
        r.read_exact(&mut buf8)?;
        let v = u64::from_le_bytes(buf8);
        check.feed(v);
        Ok(v)
    };
    let mut head_buf = [0u8; 8];
    r.read_exact(&mut head_buf)?;
    let count = u64::from_le_bytes(head_buf) as usize;
    check.feed(file_dim as u64);
    check.feed(file_size as u64);
    check.feed(count as u64);
    let gens_count = get_u64(r, &mut check)? as usize;
    let codec = Codec::new(ring, dim);
    let mut gens = Vec::with_capacity(gens_count);
    for _ in 0..gens_count {
        let mut words = [0u64; 4];
        for w in &mut words {
            *w = get_u64(r, &mut check)?;
        }
        gens.push(codec.unpack(&Packed(words)));
    }
    let mut order = Vec::with_capacity(count);
    for _ in 0..count {
        let mut words = [0u64; 4];
        for w in &mut words {
            *w = get_u64(r, &mut check)?;
        }
        order.push(Packed(words));
    }
    let mut tail = [0u8; 8];
    r.read_exact(&mut tail)?;
    if u64::from_le_bytes(tail) != check.value() {
        return Err(Error::Corrupt("checksum mismatch".into()));
    }
    Ok(SubgroupSet::from_parts(
        ring,
        codec,
        order,
        gens,
        label.to_string(),
    ))
}

struct Checksum {
    state: u64,
}

impl Checksum {
    fn new() -> Checksum {
        Checksum {
            state: 0xcbf2_9ce4_8422_2325,
        }
    }

    fn feed(&mut self, v: u64) {
        self.state = (self.state.rotate_left(7) ^ v).wrapping_mul(0x1000_0000_01b3);
    }

    fn value(&self) -> u64 {
        self.state
    }
}
