//! The lattice of full algebraic sets and the dual lattice of W-polynomials
//! over a finite `K`, with exhaustive checks of the duality between them.
//!
//! Subsets of `K` are bitmasks over the enumeration order, so `|K| <= 64`.

use crate::algset::minimal_polynomial;
use crate::error::{Error, Result};
use crate::eval::evaluate;
use crate::ring::{Elem, OreContext};
use crate::skewpoly::SkewPoly;
use std::collections::HashMap;
use std::sync::Arc;

pub type Mask = u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeKind {
    /// Full sets ordered by inclusion.
    Full,
    /// W-polynomials, `f <= h` when `h` right-divides `f`.
    Wedderburn,
}

/// An element adjoined to make a lattice bounded. Never needed on a finite
/// `K`, which is always algebraic, but kept explicit in the data structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Marker {
    AdjoinedTop,
    AdjoinedBottom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Set(Mask),
    Poly(SkewPoly),
    Marker(Marker),
}

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    pub kind: LatticeKind,
    pub ctx: Arc<OreContext>,
    pub universe: Vec<Elem>,
    pub nodes: Vec<Node>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

/// Closure of every subset of a small finite `K`, indexed by mask.
pub struct ClosureTable {
    pub universe: Vec<Elem>,
    closure: Vec<Mask>,
}

impl ClosureTable {
    pub fn new(ctx: &Arc<OreContext>) -> Result<Self> {
        let universe = ctx.enumerate()?;
        if universe.len() > 16 {
            return Err(Error::CapabilityMissing("closure tables are limited to |K| <= 16".into()));
        }
        let closure = (0..1u64 << universe.len())
            .map(|m| {
                let f = minimal_polynomial(ctx, &elements(&universe, m)).poly;
                roots_mask(&f, &universe)
            })
            .collect();
        Ok(ClosureTable { universe, closure })
    }

    pub fn closure(&self, m: Mask) -> Mask {
        self.closure[m as usize]
    }

    pub fn is_full(&self, m: Mask) -> bool {
        self.closure(m) == m
    }

    pub fn rank(&self, ctx: &Arc<OreContext>, m: Mask) -> usize {
        minimal_polynomial(ctx, &elements(&self.universe, m)).rank()
    }
}

pub fn elements(universe: &[Elem], m: Mask) -> Vec<Elem> {
    universe.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, e)| e.clone()).collect()
}

pub fn mask_of(universe: &[Elem], xs: &[Elem]) -> Mask {
    xs.iter().fold(0, |m, x| m | 1 << universe.iter().position(|u| u == x).expect("element of K"))
}

fn roots_mask(f: &SkewPoly, universe: &[Elem]) -> Mask {
    let ctx = f.context();
    universe.iter().enumerate().filter(|(_, a)| ctx.is_zero(&evaluate(f, a))).fold(0, |m, (i, _)| m | 1 << i)
}

/// Canonical node order: by rank, then lexicographically on the sorted
/// element lists.
fn full_sets_sorted(table: &ClosureTable) -> Vec<Mask> {
    let mut full: Vec<Mask> = (0..1u64 << table.universe.len()).filter(|&m| table.is_full(m)).collect();
    full.sort_by_key(|&m| {
        let mut els = elements(&table.universe, m);
        els.sort();
        (m.count_ones(), els)
    });
    full
}

impl FiniteLattice {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    pub fn label(&self, i: usize) -> String {
        match &self.nodes[i] {
            Node::Set(m) => {
                let els: Vec<String> = elements(&self.universe, *m).iter().map(|e| self.ctx.fmt(e)).collect();
                format!("{{{}}}", els.join(","))
            }
            Node::Poly(p) => p.to_string(),
            Node::Marker(Marker::AdjoinedTop) => "TOP".into(),
            Node::Marker(Marker::AdjoinedBottom) => "BOTTOM".into(),
        }
    }

    /// Rank of a set node or degree of a polynomial node.
    pub fn dimension(&self, i: usize) -> usize {
        match &self.nodes[i] {
            Node::Set(m) => minimal_polynomial(&self.ctx, &elements(&self.universe, *m)).rank(),
            Node::Poly(p) => p.deg(),
            Node::Marker(_) => 0,
        }
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(i, j)))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(j, i)))
    }

    /// Whether `j` covers `i`.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j) && (0..self.len()).all(|k| k == i || k == j || !(self.leq(i, k) && self.leq(k, j)))
    }

    /// Covering pairs `(lower, upper)`, the edges of the Hasse diagram.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| self.covers(i, j)).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph lattice {\n");
        for i in 0..self.len() {
            s += &format!("  n{i} [label=\"{}\"];\n", self.label(i));
        }
        for (i, j) in self.hasse_edges() {
            s += &format!("  n{i} -> n{j};\n");
        }
        s + "}\n"
    }

    /// Appends an explicit top or bottom marker.
    pub fn augment(&mut self, marker: Marker) {
        let n = self.len();
        self.nodes.push(Node::Marker(marker));
        for (i, row) in self.leq.iter_mut().enumerate() {
            row.push(marker == Marker::AdjoinedTop || i == n);
        }
        let mut last: Vec<bool> = (0..n).map(|_| marker == Marker::AdjoinedBottom).collect();
        last.push(true);
        self.leq.push(last);
        let (meet, join) = tables_from_order(&self.leq);
        self.meet = meet;
        self.join = join;
    }

    /// Violations of: partial order axioms, meet and join being the true
    /// glb and lub, and the modular law on all triples.
    pub fn verify(&self) -> Vec<String> {
        let n = self.len();
        let mut v = Vec::new();
        for i in 0..n {
            if !self.leq(i, i) {
                v.push(format!("not reflexive at {}", self.label(i)));
            }
            for j in 0..n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    v.push(format!("not antisymmetric: {} {}", self.label(i), self.label(j)));
                }
                for k in 0..n {
                    if self.leq(i, j) && self.leq(j, k) && !self.leq(i, k) {
                        v.push(format!("not transitive: {} {} {}", self.label(i), self.label(j), self.label(k)));
                    }
                }
                let (m, jn) = (self.meet(i, j), self.join(i, j));
                let glb = self.leq(m, i) && self.leq(m, j) && (0..n).all(|k| !(self.leq(k, i) && self.leq(k, j)) || self.leq(k, m));
                let lub = self.leq(i, jn) && self.leq(j, jn) && (0..n).all(|k| !(self.leq(i, k) && self.leq(j, k)) || self.leq(jn, k));
                if !glb {
                    v.push(format!("meet of {} and {} is not the glb", self.label(i), self.label(j)));
                }
                if !lub {
                    v.push(format!("join of {} and {} is not the lub", self.label(i), self.label(j)));
                }
            }
        }
        v.extend(self.modularity_violations());
        v
    }

    /// `a <= c` implies `a ∨ (b ∧ c) = (a ∨ b) ∧ c`.
    pub fn modularity_violations(&self) -> Vec<String> {
        let n = self.len();
        let mut v = Vec::new();
        for a in 0..n {
            for c in 0..n {
                if !self.leq(a, c) {
                    continue;
                }
                for b in 0..n {
                    if self.join(a, self.meet(b, c)) != self.meet(self.join(a, b), c) {
                        v.push(format!("modular law fails for {}, {}, {}", self.label(a), self.label(b), self.label(c)));
                    }
                }
            }
        }
        v
    }
}

/// Meet and join tables derived from the order alone.
fn tables_from_order(leq: &[Vec<bool>]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = leq.len();
    let extreme = |i: usize, j: usize, lower: bool| -> usize {
        let bounds: Vec<usize> =
            (0..n).filter(|&k| if lower { leq[k][i] && leq[k][j] } else { leq[i][k] && leq[j][k] }).collect();
        *bounds
            .iter()
            .find(|&&k| bounds.iter().all(|&o| if lower { leq[o][k] } else { leq[k][o] }))
            .expect("bounded lattice")
    };
    let meet = (0..n).map(|i| (0..n).map(|j| extreme(i, j, true)).collect()).collect();
    let join = (0..n).map(|i| (0..n).map(|j| extreme(i, j, false)).collect()).collect();
    (meet, join)
}

/// Full algebraic sets of a finite `K`: meet is intersection and join is
/// the closure of the union.
pub fn build_full_lattice(ctx: &Arc<OreContext>) -> Result<FiniteLattice> {
    let table = ClosureTable::new(ctx)?;
    build_full_lattice_with(ctx, &table)
}

pub fn build_full_lattice_with(ctx: &Arc<OreContext>, table: &ClosureTable) -> Result<FiniteLattice> {
    let sets = full_sets_sorted(table);
    let index: HashMap<Mask, usize> = sets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let n = sets.len();
    let leq = (0..n).map(|i| (0..n).map(|j| sets[i] & !sets[j] == 0).collect()).collect();
    let lookup = |m: Mask| -> usize { *index.get(&m).expect("intersections and closures of full sets are full") };
    let meet = (0..n).map(|i| (0..n).map(|j| lookup(sets[i] & sets[j])).collect()).collect();
    let join = (0..n).map(|i| (0..n).map(|j| lookup(table.closure(sets[i] | sets[j]))).collect()).collect();
    Ok(FiniteLattice {
        kind: LatticeKind::Full,
        ctx: ctx.clone(),
        universe: table.universe.clone(),
        nodes: sets.into_iter().map(Node::Set).collect(),
        leq,
        meet,
        join,
    })
}

/// W-polynomials over a finite `K`, i.e. the minimal polynomials of all
/// subsets: meet is llcm and join is rgcd.
pub fn build_w_lattice(ctx: &Arc<OreContext>) -> Result<FiniteLattice> {
    let table = ClosureTable::new(ctx)?;
    build_w_lattice_with(ctx, &table)
}

pub fn build_w_lattice_with(ctx: &Arc<OreContext>, table: &ClosureTable) -> Result<FiniteLattice> {
    let polys: Vec<SkewPoly> =
        full_sets_sorted(table).iter().map(|&m| minimal_polynomial(ctx, &elements(&table.universe, m)).poly).collect();
    let index: HashMap<SkewPoly, usize> = polys.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let n = polys.len();
    let lookup = |p: SkewPoly| -> Result<usize> {
        index.get(&p).copied().ok_or_else(|| Error::Precondition(format!("{p} is not a W-polynomial node")))
    };
    let mut leq = vec![vec![false; n]; n];
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = polys[i].right_divisible_by(&polys[j])?;
            let (g, l) = polys[i].rgcd_llcm(&polys[j])?;
            meet[i][j] = lookup(l)?;
            join[i][j] = lookup(g)?;
        }
    }
    Ok(FiniteLattice {
        kind: LatticeKind::Wedderburn,
        ctx: ctx.clone(),
        universe: table.universe.clone(),
        nodes: polys.into_iter().map(Node::Poly).collect(),
        leq,
        meet,
        join,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualityReport {
    pub full_nodes: usize,
    pub w_nodes: usize,
    pub intervals_checked: usize,
    pub violations: Vec<String>,
}

impl DualityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All monic polynomials of degree at most `n` with coefficients in `universe`.
pub fn monic_polynomials(ctx: &Arc<OreContext>, universe: &[Elem], n: usize) -> Vec<SkewPoly> {
    let mut out = vec![SkewPoly::one(ctx)];
    let mut lower: Vec<Vec<Elem>> = vec![vec![]];
    for d in 1..=n {
        let mut next = Vec::new();
        for tail in &lower {
            for c in universe {
                let mut v = tail.clone();
                v.push(c.clone());
                next.push(v);
            }
        }
        for coeffs in &next {
            let mut c = coeffs.clone();
            c.push(ctx.one());
            out.push(SkewPoly::new(ctx, c));
        }
        lower = next;
        debug_assert_eq!(lower.len(), universe.len().pow(d as u32));
    }
    out
}

/// Checks that `Δ -> f_Δ` and `f -> V(f)` are mutually inverse
/// order-reversing bijections exchanging meets and joins, that rank and
/// degree are the dimension functions, the atoms and coatoms, and that each
/// interval `[f, h]` of `W` is exactly the set of monic `g` with
/// `Rf ⊆ Rg ⊆ Rh`.
pub fn duality_check(full: &FiniteLattice, w: &FiniteLattice) -> Result<DualityReport> {
    let ctx = &full.ctx;
    let universe = &full.universe;
    let mut rep = DualityReport { full_nodes: full.len(), w_nodes: w.len(), ..Default::default() };
    let v = &mut rep.violations;
    let set_of = |i: usize| match full.nodes[i] {
        Node::Set(m) => m,
        _ => unreachable!(),
    };
    let poly_of = |i: usize| match &w.nodes[i] {
        Node::Poly(p) => p.clone(),
        _ => unreachable!(),
    };
    let w_index: HashMap<SkewPoly, usize> = (0..w.len()).map(|i| (poly_of(i), i)).collect();
    let f_index: HashMap<Mask, usize> = (0..full.len()).map(|i| (set_of(i), i)).collect();
    if full.len() != w.len() {
        v.push(format!("{} full sets but {} W-polynomials", full.len(), w.len()));
    }

    // Δ -> f_Δ and f -> V(f)
    let mut phi = vec![usize::MAX; full.len()];
    for (i, slot) in phi.iter_mut().enumerate() {
        let f = minimal_polynomial(ctx, &elements(universe, set_of(i))).poly;
        match w_index.get(&f) {
            Some(&j) => *slot = j,
            None => v.push(format!("f of {} is not a node of W", full.label(i))),
        }
    }
    let mut psi = vec![usize::MAX; w.len()];
    for (j, slot) in psi.iter_mut().enumerate() {
        match f_index.get(&roots_mask(&poly_of(j), universe)) {
            Some(&i) => *slot = i,
            None => v.push(format!("V({}) is not a full set node", w.label(j))),
        }
    }
    if !v.is_empty() {
        return Ok(rep);
    }
    for i in 0..full.len() {
        if psi[phi[i]] != i {
            v.push(format!("V(f_Δ) != Δ for {}", full.label(i)));
        }
    }
    for j in 0..w.len() {
        if phi[psi[j]] != j {
            v.push(format!("f_V(f) != f for {}", w.label(j)));
        }
    }

    for a in 0..full.len() {
        for b in 0..full.len() {
            let (fa, fb) = (phi[a], phi[b]);
            if full.leq(a, b) != w.leq(fb, fa) {
                v.push(format!("order not reversed on {} {}", full.label(a), full.label(b)));
            }
            if phi[full.meet(a, b)] != w.join(fa, fb) || phi[full.join(a, b)] != w.meet(fa, fb) {
                v.push(format!("meet/join not exchanged on {} {}", full.label(a), full.label(b)));
            }
            let (ra, rb) = (full.dimension(a), full.dimension(b));
            if full.dimension(full.join(a, b)) + full.dimension(full.meet(a, b)) != ra + rb {
                v.push(format!("rank is not a dimension function on {} {}", full.label(a), full.label(b)));
            }
            let (da, db) = (w.dimension(fa), w.dimension(fb));
            if w.dimension(w.join(fa, fb)) + w.dimension(w.meet(fa, fb)) != da + db {
                v.push(format!("degree is not a dimension function on {} {}", w.label(fa), w.label(fb)));
            }
            if full.covers(a, b) && full.dimension(b) != full.dimension(a) + 1 {
                v.push(format!("rank jumps along the edge {} < {}", full.label(a), full.label(b)));
            }
        }
    }

    // atoms are the singletons, coatoms of W the monic linear polynomials
    let bottom = full.bottom().expect("finite lattice has a bottom");
    let mut atoms: Vec<Mask> = (0..full.len()).filter(|&i| full.covers(bottom, i)).map(set_of).collect();
    atoms.sort();
    let singletons: Vec<Mask> = (0..universe.len()).map(|i| 1 << i).collect();
    if atoms != singletons {
        v.push("atoms of F are not exactly the singletons".into());
    }
    let top = w.top().expect("finite lattice has a top");
    let mut coatoms: Vec<SkewPoly> = (0..w.len()).filter(|&j| w.covers(j, top)).map(poly_of).collect();
    let mut linear: Vec<SkewPoly> = universe.iter().map(|a| SkewPoly::linear(ctx, a)).collect();
    coatoms.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    linear.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    if coatoms != linear || !w.nodes[top].eq(&Node::Poly(SkewPoly::one(ctx))) {
        v.push("maximal W-polynomials below 1 are not exactly the monic linear polynomials".into());
    }

    // intervals against all monic divisors of the bottom element f_K
    let bottom_w = w.bottom().expect("finite lattice has a bottom");
    let fk = poly_of(bottom_w);
    let divisors: Vec<SkewPoly> = monic_polynomials(ctx, universe, fk.deg())
        .into_iter()
        .filter(|g| fk.right_divisible_by(g).unwrap_or(false))
        .collect();
    let divides: Vec<Vec<bool>> = (0..w.len())
        .map(|j| divisors.iter().map(|g| poly_of(j).right_divisible_by(g).unwrap_or(false)).collect())
        .collect();
    let h_divides: Vec<Vec<bool>> = (0..w.len())
        .map(|h| divisors.iter().map(|g| g.right_divisible_by(&poly_of(h)).unwrap_or(false)).collect())
        .collect();
    for f in 0..w.len() {
        for h in 0..w.len() {
            if !w.leq(f, h) {
                continue;
            }
            rep.intervals_checked += 1;
            let mut interval: Vec<SkewPoly> = (0..w.len()).filter(|&g| w.leq(f, g) && w.leq(g, h)).map(poly_of).collect();
            let mut between: Vec<SkewPoly> =
                (0..divisors.len()).filter(|&k| divides[f][k] && h_divides[h][k]).map(|k| divisors[k].clone()).collect();
            interval.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
            between.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
            if interval != between {
                v.push(format!("interval [{}, {}] differs from the submodules of Rh/Rf", w.label(f), w.label(h)));
            }
        }
    }
    Ok(rep)
}

/// The intersection of full sets has minimal polynomial the rgcd of theirs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    pub rgcd: SkewPoly,
    pub intersection_minpoly: SkewPoly,
    pub all_full: bool,
}

/// Both sides without asserting anything, for full or non-full sets.
pub fn intersection_report(ctx: &Arc<OreContext>, sets: &[Vec<Elem>], domain: Option<&[Elem]>) -> Result<IntersectionReport> {
    let Some((first, rest)) = sets.split_first() else {
        return Err(Error::Precondition("need at least one set".into()));
    };
    let mut g = minimal_polynomial(ctx, first).poly;
    let mut inter = first.clone();
    let mut all_full = crate::algset::is_full(ctx, first, domain)?;
    for s in rest {
        g = g.rgcd(&minimal_polynomial(ctx, s).poly)?;
        inter.retain(|x| s.contains(x));
        all_full &= crate::algset::is_full(ctx, s, domain)?;
    }
    Ok(IntersectionReport { rgcd: g, intersection_minpoly: minimal_polynomial(ctx, &inter).poly, all_full })
}

/// The rgcd of the minimal polynomials of full sets, checked against the
/// minimal polynomial of their intersection.
pub fn intersection_minpoly(ctx: &Arc<OreContext>, sets: &[Vec<Elem>], domain: Option<&[Elem]>) -> Result<SkewPoly> {
    let r = intersection_report(ctx, sets, domain)?;
    if !r.all_full {
        return Err(Error::NotFull);
    }
    assert_eq!(r.rgcd, r.intersection_minpoly, "intersection of full sets");
    Ok(r.rgcd)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModularLawReport {
    pub triples: usize,
    pub dependent_points: usize,
    pub violations: Vec<String>,
}

/// For full `Γ`, `Π` and `Δ ⊆ Γ`: each `x` in `Γ` that is P-dependent on
/// `Π ∪ Δ` is P-dependent on `(Γ ∩ Π) ∪ Δ`.
pub fn modular_law_check(table: &ClosureTable, gamma: Mask, pi: Mask, delta: Mask) -> Result<ModularLawReport> {
    if !table.is_full(gamma) || !table.is_full(pi) {
        return Err(Error::NotFull);
    }
    if delta & !gamma != 0 {
        return Err(Error::Precondition("Δ must be contained in Γ".into()));
    }
    let mut rep = ModularLawReport { triples: 1, ..Default::default() };
    let big = table.closure(pi | delta);
    let small = table.closure((gamma & pi) | delta);
    for i in 0..table.universe.len() {
        let bit = 1 << i;
        if gamma & bit != 0 && big & bit != 0 {
            rep.dependent_points += 1;
            if small & bit == 0 {
                rep.violations.push(format!("element {i} of Γ={gamma:#b}, Π={pi:#b}, Δ={delta:#b}"));
            }
        }
    }
    Ok(rep)
}

/// Runs the check over every valid triple.
pub fn modular_law_exhaustive(table: &ClosureTable) -> ModularLawReport {
    let full: Vec<Mask> = (0..1u64 << table.universe.len()).filter(|&m| table.is_full(m)).collect();
    let mut total = ModularLawReport::default();
    for &gamma in &full {
        for &pi in &full {
            // all subsets of gamma
            let mut delta = gamma;
            loop {
                let r = modular_law_check(table, gamma, pi, delta).expect("valid triple");
                total.triples += 1;
                total.dependent_points += r.dependent_points;
                total.violations.extend(r.violations);
                if delta == 0 {
                    break;
                }
                delta = (delta - 1) & gamma;
            }
        }
    }
    total
}
