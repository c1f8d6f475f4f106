//! Root systems A2, A3, C2, G2 with length classes and structure constants.
//!
//! The constant table is not copied from any published basis convention.
//! Instead, a concrete faithful integer representation is built from seed
//! matrices for the fundamental roots (SL_{l+1} for A_l, Sp_4 for C2, the
//! 7-dimensional representation for G2), root vectors are propagated along
//! Weyl reflections, and the constants are fitted so that the commutator
//! formula holds exactly in that representation. The fit is verified
//! exhaustively over four prime fields before the table is accepted.

use crate::mat::Mat;
use crate::rings::FiniteRing;
use crate::Error;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub const MAX_RANK: usize = 3;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SystemKind {
    A2,
    A3,
    C2,
    G2,
}

impl SystemKind {
    pub fn parse(s: &str) -> Result<SystemKind, Error> {
        match s {
            "A2" => Ok(SystemKind::A2),
            "A3" => Ok(SystemKind::A3),
            "C2" => Ok(SystemKind::C2),
            "G2" => Ok(SystemKind::G2),
            _ => Err(Error::Parse(format!(
                "unknown root system {s:?} (expected A2, A3, C2 or G2)"
            ))),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SystemKind::A2 => "A2",
            SystemKind::A3 => "A3",
            SystemKind::C2 => "C2",
            SystemKind::G2 => "G2",
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            SystemKind::A3 => 3,
            _ => 2,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SystemKind::A2 => 3,
            SystemKind::A3 => 4,
            SystemKind::C2 => 4,
            SystemKind::G2 => 7,
        }
    }

    /// cartan[i][k] is the pairing of alpha_k against the coroot of alpha_i,
    /// so the reflection in alpha_i sends gamma to
    /// gamma - (sum_k gamma_k cartan[i][k]) alpha_i.
    fn cartan(&self) -> Vec<Vec<i64>> {
        match self {
            SystemKind::A2 => vec![vec![2, -1], vec![-1, 2]],
            SystemKind::A3 => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            SystemKind::C2 => vec![vec![2, -2], vec![-1, 2]],
            SystemKind::G2 => vec![vec![2, -3], vec![-1, 2]],
        }
    }

    /// Symmetrizer making d_i * cartan[i][j] the inner product matrix.
    fn symmetrizer(&self) -> Vec<i64> {
        match self {
            SystemKind::A2 => vec![1, 1],
            SystemKind::A3 => vec![1, 1, 1],
            SystemKind::C2 => vec![1, 2],
            SystemKind::G2 => vec![1, 3],
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Root {
    pub coords: [i32; MAX_RANK],
}

impl Root {
    pub fn fundamental(i: usize) -> Root {
        let mut coords = [0; MAX_RANK];
        coords[i] = 1;
        Root { coords }
    }

    pub fn neg(&self) -> Root {
        let mut coords = [0; MAX_RANK];
        for (c, s) in coords.iter_mut().zip(self.coords) {
            *c = -s;
        }
        Root { coords }
    }

    pub fn add(&self, other: &Root) -> Root {
        let mut coords = [0; MAX_RANK];
        for (c, (a, b)) in coords.iter_mut().zip(self.coords.iter().zip(other.coords)) {
            *c = a + b;
        }
        Root { coords }
    }

    pub fn scaled(&self, s: i32) -> Root {
        let mut coords = [0; MAX_RANK];
        for (c, v) in coords.iter_mut().zip(self.coords) {
            *c = s * v;
        }
        Root { coords }
    }

    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.height() > 0
    }

    pub fn label(&self, rank: usize) -> String {
        let parts: Vec<String> = self.coords[..rank].iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LengthClass {
    Short,
    Long,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rank2Kind {
    A1xA1,
    A2,
    C2,
    G2,
}

impl Rank2Kind {
    pub fn label(&self) -> &'static str {
        match self {
            Rank2Kind::A1xA1 => "A1xA1",
            Rank2Kind::A2 => "A2",
            Rank2Kind::C2 => "C2",
            Rank2Kind::G2 => "G2",
        }
    }
}

/// One factor of the commutator-formula product: the root i*alpha + j*beta
/// carries coefficient n * xi^i * eta^j.
#[derive(Clone, Copy, Debug)]
pub struct Slot {
    pub i: u32,
    pub j: u32,
    pub root: usize,
    pub n: i64,
}

/// Integer matrices for the representation over Z.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IMat {
    pub dim: usize,
    e: [[i64; 7]; 7],
}

impl IMat {
    pub fn zero(dim: usize) -> IMat {
        IMat {
            dim,
            e: [[0; 7]; 7],
        }
    }

    pub fn identity(dim: usize) -> IMat {
        let mut m = IMat::zero(dim);
        for i in 0..dim {
            m.e[i][i] = 1;
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.e[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.e[r][c] = v;
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        let d = self.dim;
        let mut out = IMat::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.e[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    out.e[i][j] += a * other.e[k][j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IMat) -> IMat {
        let d = self.dim;
        let mut out = IMat::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.e[i][j] = self.e[i][j] + other.e[i][j];
            }
        }
        out
    }

    pub fn scale(&self, s: i64) -> IMat {
        let d = self.dim;
        let mut out = IMat::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.e[i][j] = s * self.e[i][j];
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|row| row.iter().all(|&v| v == 0))
    }

    /// Halve every entry; panics on odd entries (construction-time guard).
    fn halved(&self) -> IMat {
        let d = self.dim;
        let mut out = IMat::zero(d);
        for i in 0..d {
            for j in 0..d {
                assert!(self.e[i][j] % 2 == 0, "root vector square has odd entry");
                out.e[i][j] = self.e[i][j] / 2;
            }
        }
        out
    }

    pub fn to_mat(&self, ring: FiniteRing) -> Mat {
        let d = self.dim;
        let mut m = Mat::zero(d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, ring.from_int(self.e[i][j]));
            }
        }
        m
    }
}

pub struct RootSystem {
    pub kind: SystemKind,
    pub rank: usize,
    pub dim: usize,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    long: Vec<bool>,
    c1: Vec<IMat>,
    c2: Vec<IMat>,
    constants: HashMap<(usize, usize), Vec<Slot>>,
    pivots: HashMap<usize, (usize, usize, i64)>,
}

impl RootSystem {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn neg_index(&self, idx: usize) -> usize {
        self.index[&self.roots[idx].neg()]
    }

    pub fn length_class(&self, idx: usize) -> LengthClass {
        if self.long[idx] {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    pub fn fundamentals(&self) -> Vec<usize> {
        (0..self.rank)
            .map(|i| self.index[&Root::fundamental(i)])
            .collect()
    }

    /// Positive roots in increasing height, ties by table index.
    pub fn positive_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.roots.len())
            .filter(|&k| self.roots[k].is_positive())
            .collect();
        idx.sort_by_key(|&k| (self.roots[k].height(), k));
        idx
    }

    /// First coefficient-one entry of the root vector; the peeling anchor
    /// for unipotent factorization.
    pub fn pivot(&self, idx: usize) -> (usize, usize, i64) {
        self.pivots[&idx]
    }

    pub fn rep_c1(&self, idx: usize) -> &IMat {
        &self.c1[idx]
    }

    pub fn rep_c2(&self, idx: usize) -> &IMat {
        &self.c2[idx]
    }

    pub fn root_sum(&self, a: usize, b: usize) -> Option<usize> {
        self.root_index(&self.roots[a].add(&self.roots[b]))
    }

    /// The ordered factor list of the commutator formula for the pair, empty
    /// when the commutator is the identity. None iff a and b are opposite.
    pub fn slots(&self, a: usize, b: usize) -> Option<&[Slot]> {
        self.constants.get(&(a, b)).map(|v| v.as_slice())
    }

    pub fn structure_constant(&self, a: usize, b: usize, i: u32, j: u32) -> Result<i64, Error> {
        if i < 1 || j < 1 {
            return Err(Error::Domain("structure constants need i, j >= 1".into()));
        }
        let slots = self
            .constants
            .get(&(a, b))
            .ok_or_else(|| Error::Domain("no commutator formula for opposite roots".into()))?;
        slots
            .iter()
            .find(|s| s.i == i && s.j == j)
            .map(|s| s.n)
            .ok_or_else(|| {
                Error::Domain(format!(
                    "{}*{} + {}*{} is not a root",
                    i,
                    self.roots[a].label(self.rank),
                    j,
                    self.roots[b].label(self.rank)
                ))
            })
    }

    /// The rank-2 subsystem generated by two non-proportional roots:
    /// closure of {a, b} and negatives under root addition.
    pub fn rank2_subsystem(&self, a: usize, b: usize) -> Result<Rank2Kind, Error> {
        if a == b || self.neg_index(a) == b {
            return Err(Error::Domain(
                "rank-2 subsystem needs non-proportional roots".into(),
            ));
        }
        let mut members = vec![a, self.neg_index(a), b, self.neg_index(b)];
        loop {
            let mut grew = false;
            let snapshot = members.clone();
            for &x in &snapshot {
                for &y in &snapshot {
                    if let Some(s) = self.root_sum(x, y) {
                        if !members.contains(&s) {
                            members.push(s);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        match members.len() {
            4 => Ok(Rank2Kind::A1xA1),
            6 => Ok(Rank2Kind::A2),
            8 => Ok(Rank2Kind::C2),
            12 => Ok(Rank2Kind::G2),
            n => Err(Error::Domain(format!("unexpected rank-2 closure size {n}"))),
        }
    }

    /// TSV dump of the constant table: alpha, beta, i, j, N.
    pub fn constants_tsv(&self) -> String {
        let mut out = String::from("alpha\tbeta\ti\tj\tN\n");
        let mut keys: Vec<&(usize, usize)> = self.constants.keys().collect();
        keys.sort();
        for &&(a, b) in &keys {
            for s in &self.constants[&(a, b)] {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    self.roots[a].label(self.rank),
                    self.roots[b].label(self.rank),
                    s.i,
                    s.j,
                    s.n
                ));
            }
        }
        out
    }
}

static CACHE: Lazy<Mutex<HashMap<SystemKind, Arc<RootSystem>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub fn roots_of(kind: SystemKind) -> Arc<RootSystem> {
    let mut cache = CACHE.lock().unwrap();
    if let Some(sys) = cache.get(&kind) {
        return Arc::clone(sys);
    }
    let sys = Arc::new(build(kind));
    cache.insert(kind, Arc::clone(&sys));
    sys
}

fn reflect(kind: SystemKind, cartan: &[Vec<i64>], i: usize, gamma: &Root) -> Root {
    let rank = kind.rank();
    let pairing: i64 = (0..rank)
        .map(|k| gamma.coords[k] as i64 * cartan[i][k])
        .sum();
    let mut out = *gamma;
    out.coords[i] -= pairing as i32;
    out
}

fn enumerate_roots(kind: SystemKind) -> Vec<Root> {
    let cartan = kind.cartan();
    let rank = kind.rank();
    let mut set: Vec<Root> = (0..rank).map(Root::fundamental).collect();
    let mut queue = set.clone();
    while let Some(g) = queue.pop() {
        for i in 0..rank {
            let r = reflect(kind, &cartan, i, &g);
            if !set.contains(&r) {
                set.push(r);
                queue.push(r);
            }
            let n = g.neg();
            if !set.contains(&n) {
                set.push(n);
                queue.push(n);
            }
        }
    }
    set.sort_by_key(|r| (r.height(), r.coords));
    set
}

fn norm_sq(kind: SystemKind, r: &Root) -> i64 {
    let cartan = kind.cartan();
    let d = kind.symmetrizer();
    let rank = kind.rank();
    let mut acc = 0i64;
    for i in 0..rank {
        for (j, row) in cartan[i].iter().enumerate().take(rank) {
            acc += r.coords[i] as i64 * r.coords[j] as i64 * d[i] * row;
        }
    }
    acc
}

/// Seed root vectors (e, f) for each fundamental root.
fn seeds(kind: SystemKind) -> Vec<(IMat, IMat)> {
    let dim = kind.dim();
    let unit = |entries: &[(usize, usize, i64)]| {
        let mut m = IMat::zero(dim);
        for &(r, c, v) in entries {
            m.set(r, c, v);
        }
        m
    };
    match kind {
        SystemKind::A2 | SystemKind::A3 => (0..kind.rank())
            .map(|i| (unit(&[(i, i + 1, 1)]), unit(&[(i + 1, i, 1)])))
            .collect(),
        SystemKind::C2 => vec![
            // short alpha_1 and long alpha_2 in the weight basis e1,e2,-e2,-e1
            (unit(&[(0, 1, 1), (2, 3, 1)]), unit(&[(1, 0, 1), (3, 2, 1)])),
            (unit(&[(1, 2, 1)]), unit(&[(2, 1, 1)])),
        ],
        SystemKind::G2 => vec![
            // short alpha_1 in the 7-dim weight basis
            (
                unit(&[(0, 1, 1), (2, 3, 1), (3, 4, 2), (5, 6, 1)]),
                unit(&[(1, 0, 1), (3, 2, 2), (4, 3, 1), (6, 5, 1)]),
            ),
            (unit(&[(1, 2, 1), (4, 5, 1)]), unit(&[(2, 1, 1), (5, 4, 1)])),
        ],
    }
}

/// x_gamma(1) over Z from a nilpotent root vector: 1 + e + e^2/2, and the
/// guard that the cubic term vanishes so the exponential is polynomial.
fn unipotent_z(e: &IMat, s: i64) -> IMat {
    let sq = e.mul(e);
    assert!(sq.mul(e).is_zero(), "root vector is not 3-step nilpotent");
    IMat::identity(e.dim)
        .add(&e.scale(s))
        .add(&sq.halved().scale(s * s))
}

fn build(kind: SystemKind) -> RootSystem {
    let rank = kind.rank();
    let dim = kind.dim();
    let roots = enumerate_roots(kind);
    let expected = match kind {
        SystemKind::A2 => 6,
        SystemKind::A3 => 12,
        SystemKind::C2 => 8,
        SystemKind::G2 => 12,
    };
    assert_eq!(
        roots.len(),
        expected,
        "reflection closure size for {}",
        kind.label()
    );
    let index: HashMap<Root, usize> = roots.iter().enumerate().map(|(k, r)| (*r, k)).collect();

    let min_norm = roots.iter().map(|r| norm_sq(kind, r)).min().unwrap();
    let long: Vec<bool> = roots.iter().map(|r| norm_sq(kind, r) > min_norm).collect();

    // Propagate root vectors from the seeds along Weyl reflections; pairs
    // (gamma, -gamma) always travel together under the same w so that the
    // opposite vectors stay aligned.
    let cartan = kind.cartan();
    let seed = seeds(kind);
    let mut weyl: Vec<(IMat, IMat)> = Vec::new();
    for (e, f) in &seed {
        let w = unipotent_z(e, 1)
            .mul(&unipotent_z(f, -1))
            .mul(&unipotent_z(e, 1));
        let w_inv = unipotent_z(e, -1)
            .mul(&unipotent_z(f, 1))
            .mul(&unipotent_z(e, -1));
        assert!(w.mul(&w_inv) == IMat::identity(dim));
        weyl.push((w, w_inv));
    }
    let mut vectors: HashMap<Root, IMat> = HashMap::new();
    let mut queue: Vec<Root> = Vec::new();
    for (i, (e, f)) in seed.iter().enumerate() {
        let a = Root::fundamental(i);
        vectors.insert(a, *e);
        vectors.insert(a.neg(), *f);
        queue.push(a);
    }
    while let Some(g) = queue.pop() {
        for (i, (w, w_inv)) in weyl.iter().enumerate().take(rank) {
            let d = reflect(kind, &cartan, i, &g);
            if vectors.contains_key(&d) {
                continue;
            }
            let eg = vectors[&g];
            let ef = vectors[&g.neg()];
            vectors.insert(d, w.mul(&eg).mul(w_inv));
            vectors.insert(d.neg(), w.mul(&ef).mul(w_inv));
            queue.push(d);
        }
    }
    assert_eq!(
        vectors.len(),
        roots.len(),
        "root vector propagation incomplete"
    );

    let c1: Vec<IMat> = roots.iter().map(|r| vectors[r]).collect();
    let c2: Vec<IMat> = c1
        .iter()
        .map(|e| {
            let sq = e.mul(e);
            assert!(sq.mul(e).is_zero());
            sq.halved()
        })
        .collect();

    let mut pivots = HashMap::new();
    for (k, r) in roots.iter().enumerate() {
        if !r.is_positive() {
            continue;
        }
        let mut found = None;
        'outer: for row in 0..dim {
            for col in 0..dim {
                let v = c1[k].get(row, col);
                if v == 1 || v == -1 {
                    found = Some((row, col, v));
                    break 'outer;
                }
            }
        }
        pivots.insert(
            k,
            found.expect("every positive root vector has a unit entry"),
        );
    }

    let constants = fit_constants(kind, &roots, &index, &c1, &c2);
    let sys = RootSystem {
        kind,
        rank,
        dim,
        roots,
        index,
        long,
        c1,
        c2,
        constants,
        pivots,
    };
    for p in [5u32, 11, 13] {
        verify_table(&sys, p);
    }
    sys
}

fn x_over(ring: FiniteRing, c1: &Mat, c2: &Mat, xi: u32) -> Mat {
    let id = Mat::identity(ring, c1.dim as usize);
    id.add(ring, &c1.scale(ring, xi))
        .add(ring, &c2.scale(ring, ring.mul(xi, xi)))
}

fn commutator_x(ring: FiniteRing, ca: (&Mat, &Mat), cb: (&Mat, &Mat), xi: u32, eta: u32) -> Mat {
    let a = x_over(ring, ca.0, ca.1, xi);
    let b = x_over(ring, cb.0, cb.1, eta);
    let ai = x_over(ring, ca.0, ca.1, ring.neg(xi));
    let bi = x_over(ring, cb.0, cb.1, ring.neg(eta));
    a.mul(ring, &b).mul(ring, &ai).mul(ring, &bi)
}

fn slot_shape(roots: &[Root], index: &HashMap<Root, usize>, a: usize, b: usize) -> Vec<Slot> {
    let mut slots = Vec::new();
    for i in 1..=3i32 {
        for j in 1..=3i32 {
            let cand = roots[a].scaled(i).add(&roots[b].scaled(j));
            if let Some(&k) = index.get(&cand) {
                slots.push(Slot {
                    i: i as u32,
                    j: j as u32,
                    root: k,
                    n: 0,
                });
            }
        }
    }
    // fixed product order: increasing height of the target root, ties by (i, j)
    slots.sort_by_key(|s| (roots[s.root].height(), s.i, s.j));
    slots
}

fn fit_constants(
    kind: SystemKind,
    roots: &[Root],
    index: &HashMap<Root, usize>,
    c1: &[IMat],
    c2: &[IMat],
) -> HashMap<(usize, usize), Vec<Slot>> {
    let ring = FiniteRing::zmod(7);
    let c1m: Vec<Mat> = c1.iter().map(|m| m.to_mat(ring)).collect();
    let c2m: Vec<Mat> = c2.iter().map(|m| m.to_mat(ring)).collect();
    // x_gamma(n) for candidate constants n in -3..=3
    let cand_vals: Vec<i64> = (-3..=3).collect();
    let xg: Vec<Vec<Mat>> = (0..roots.len())
        .map(|k| {
            cand_vals
                .iter()
                .map(|&n| x_over(ring, &c1m[k], &c2m[k], ring.from_int(n)))
                .collect()
        })
        .collect();
    let id = Mat::identity(ring, kind.dim());

    let mut out = HashMap::new();
    for a in 0..roots.len() {
        for b in 0..roots.len() {
            if a == b || roots[a] == roots[b].neg() {
                continue;
            }
            let shape = slot_shape(roots, index, a, b);
            if shape.is_empty() {
                let com = commutator_x(ring, (&c1m[a], &c2m[a]), (&c1m[b], &c2m[b]), 1, 1);
                assert_eq!(com, id, "commutator without target roots must vanish");
                out.insert((a, b), shape);
                continue;
            }
            // brute-force fit, first at (1,1), survivors checked on all pairs
            let mut survivors: Vec<Vec<i64>> = Vec::new();
            let target = commutator_x(ring, (&c1m[a], &c2m[a]), (&c1m[b], &c2m[b]), 1, 1);
            let mut assignment = vec![0usize; shape.len()];
            loop {
                let mut prod = id;
                for (s, &ci) in shape.iter().zip(assignment.iter()) {
                    prod = prod.mul(ring, &xg[s.root][ci]);
                }
                if prod == target {
                    survivors.push(assignment.iter().map(|&ci| cand_vals[ci]).collect());
                }
                // odometer over candidate indices
                let mut pos = 0;
                loop {
                    if pos == assignment.len() {
                        break;
                    }
                    assignment[pos] += 1;
                    if assignment[pos] < cand_vals.len() {
                        break;
                    }
                    assignment[pos] = 0;
                    pos += 1;
                }
                if pos == assignment.len() {
                    break;
                }
            }
            survivors.retain(|vals| {
                let slots: Vec<Slot> = shape
                    .iter()
                    .zip(vals.iter())
                    .map(|(s, &n)| Slot { n, ..*s })
                    .collect();
                verify_pair(ring, &c1m, &c2m, a, b, &slots)
            });
            assert_eq!(
                survivors.len(),
                1,
                "structure constant fit for {} pair {:?},{:?} found {} solutions",
                kind.label(),
                roots[a],
                roots[b],
                survivors.len()
            );
            let slots: Vec<Slot> = shape
                .iter()
                .zip(survivors[0].iter())
                .map(|(s, &n)| Slot { n, ..*s })
                .collect();
            out.insert((a, b), slots);
        }
    }
    out
}

/// Exhaustive commutator-formula check for one ordered pair over one ring.
fn verify_pair(
    ring: FiniteRing,
    c1m: &[Mat],
    c2m: &[Mat],
    a: usize,
    b: usize,
    slots: &[Slot],
) -> bool {
    let dim = c1m[a].dim as usize;
    let id = Mat::identity(ring, dim);
    for xi in ring.elements() {
        for eta in ring.elements() {
            let com = commutator_x(ring, (&c1m[a], &c2m[a]), (&c1m[b], &c2m[b]), xi, eta);
            let mut prod = id;
            for s in slots {
                let mut coef = ring.from_int(s.n);
                for _ in 0..s.i {
                    coef = ring.mul(coef, xi);
                }
                for _ in 0..s.j {
                    coef = ring.mul(coef, eta);
                }
                prod = prod.mul(ring, &x_over(ring, &c1m[s.root], &c2m[s.root], coef));
            }
            if com != prod {
                return false;
            }
        }
    }
    true
}

fn verify_table(sys: &RootSystem, p: u32) {
    let ring = FiniteRing::zmod(p);
    let c1m: Vec<Mat> = sys.c1.iter().map(|m| m.to_mat(ring)).collect();
    let c2m: Vec<Mat> = sys.c2.iter().map(|m| m.to_mat(ring)).collect();
    for (&(a, b), slots) in &sys.constants {
        assert!(
            verify_pair(ring, &c1m, &c2m, a, b, slots),
            "constant table fails over Z/{p} for pair ({a},{b})"
        );
    }
}
