//! PD codes with explicit crossing signs, braid closures, linking numbers
//! and writhe.
//!
//! Arc convention: arcs split at *every* crossing, so each arc label appears
//! in exactly two crossing slots (crossingless unknot components carry a
//! single arc that appears in none). Crossing slots are listed
//! counterclockwise starting from the incoming under-strand arc. With that
//! anchoring the Kauffman A-smoothing always joins slots (0,1) and (2,3),
//! independently of the crossing sign.

use super::{BraidWord, LinkError};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// One crossing: four arc labels counterclockwise from the incoming
/// under-strand, plus an explicit sign (+1 = right-handed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub arcs: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    /// Arc entering the crossing on the under-strand.
    pub fn under_in(&self) -> usize {
        self.arcs[0]
    }

    /// One arc of the over-strand (the over-strand occupies slots 1 and 3).
    pub fn over_arc(&self) -> usize {
        self.arcs[1]
    }
}

/// A link diagram as a list of signed crossings plus the partition of arcs
/// into oriented closed components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PDCode {
    crossings: Vec<Crossing>,
    components: Vec<Vec<usize>>,
}

impl PDCode {
    /// Build and validate a PD code. `components` must partition the arc set;
    /// every arc in a crossing must appear exactly twice over all crossings.
    pub fn new(crossings: Vec<Crossing>, components: Vec<Vec<usize>>) -> Result<Self, LinkError> {
        for c in &crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(LinkError::BadSign(c.sign as i64));
            }
        }
        let mut mult: HashMap<usize, usize> = HashMap::new();
        for c in &crossings {
            for &a in &c.arcs {
                *mult.entry(a).or_insert(0) += 1;
            }
        }
        for (&a, &m) in &mult {
            if m != 2 {
                return Err(LinkError::ArcMultiplicity(a, m));
            }
        }
        let mut seen: HashMap<usize, ()> = HashMap::new();
        for comp in &components {
            if comp.is_empty() {
                return Err(LinkError::BadComponents);
            }
            for &a in comp {
                if seen.insert(a, ()).is_some() {
                    return Err(LinkError::BadComponents);
                }
            }
        }
        // every crossing arc must belong to some component, and lone arcs
        // (crossingless unknots) must be singletons
        for (&a, _) in &mult {
            if !seen.contains_key(&a) {
                return Err(LinkError::BadComponents);
            }
        }
        for comp in &components {
            for &a in comp {
                if !mult.contains_key(&a) && comp.len() != 1 {
                    return Err(LinkError::BadComponents);
                }
            }
        }
        Ok(PDCode {
            crossings,
            components,
        })
    }

    /// The crossingless diagram of `n` unknots.
    pub fn unlink(n: usize) -> Self {
        PDCode {
            crossings: Vec::new(),
            components: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// The zero-crossing unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Number of components with no crossings at all.
    pub fn crossingless_component_count(&self) -> usize {
        let comp_of = self.component_of_arc();
        let mut with_crossing = vec![false; self.components.len()];
        for c in &self.crossings {
            for &a in &c.arcs {
                with_crossing[comp_of[&a]] = true;
            }
        }
        with_crossing.iter().filter(|b| !**b).count()
    }

    fn component_of_arc(&self) -> HashMap<usize, usize> {
        let mut map = HashMap::new();
        for (i, comp) in self.components.iter().enumerate() {
            for &a in comp {
                map.insert(a, i);
            }
        }
        map
    }

    /// Sum of all crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Linking number of components `i` and `j`: half the sum of signs of
    /// the crossings between them. `i == j` is rejected; self-linking needs
    /// an explicit framing (see [`LinkingMatrix`]).
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, LinkError> {
        let n = self.components.len();
        if i >= n {
            return Err(LinkError::ComponentOutOfRange(i));
        }
        if j >= n {
            return Err(LinkError::ComponentOutOfRange(j));
        }
        if i == j {
            return Err(LinkError::SelfLinkingWithoutFraming);
        }
        let comp_of = self.component_of_arc();
        let mut sum: i64 = 0;
        for c in &self.crossings {
            let cu = comp_of[&c.under_in()];
            let co = comp_of[&c.over_arc()];
            if (cu, co) == (i, j) || (cu, co) == (j, i) {
                sum += c.sign as i64;
            }
        }
        if sum % 2 != 0 {
            return Err(LinkError::OddCrossingSum);
        }
        Ok(sum / 2)
    }

    /// The same diagram with component `i` reversed: every crossing between
    /// `i` and another component flips sign. Self-crossings of `i` and all
    /// other crossings are unchanged (bracket evaluation ignores
    /// orientation, so arc slots are left as stored).
    pub fn with_component_reversed(&self, i: usize) -> Result<Self, LinkError> {
        if i >= self.components.len() {
            return Err(LinkError::ComponentOutOfRange(i));
        }
        let comp_of = self.component_of_arc();
        let mut crossings = self.crossings.clone();
        for c in &mut crossings {
            let cu = comp_of[&c.under_in()];
            let co = comp_of[&c.over_arc()];
            if (cu == i) ^ (co == i) {
                c.sign = -c.sign;
            }
        }
        Ok(PDCode {
            crossings,
            components: self.components.clone(),
        })
    }

    /// Linking matrix with the blackboard framing (writhe of each component's
    /// self-crossings) on the diagonal.
    pub fn linking_matrix(&self) -> Result<LinkingMatrix, LinkError> {
        let n = self.components.len();
        let comp_of = self.component_of_arc();
        let mut entries = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let lk = self.linking_number(i, j)?;
                entries[i][j] = lk;
                entries[j][i] = lk;
            }
        }
        for c in &self.crossings {
            let cu = comp_of[&c.under_in()];
            let co = comp_of[&c.over_arc()];
            if cu == co {
                entries[cu][cu] += c.sign as i64;
            }
        }
        Ok(LinkingMatrix {
            size: n,
            entries,
            framed: true,
        })
    }
}

/// Symmetric integer matrix of pairwise linking numbers; the diagonal holds
/// self-linking integers and is only meaningful when `framed` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingMatrix {
    size: usize,
    entries: Vec<Vec<i64>>,
    framed: bool,
}

impl LinkingMatrix {
    pub fn new(entries: Vec<Vec<i64>>, framed: bool) -> Result<Self, LinkError> {
        let size = entries.len();
        for row in &entries {
            if row.len() != size {
                return Err(LinkError::BadComponents);
            }
        }
        for i in 0..size {
            for j in 0..size {
                if i != j && entries[i][j] != entries[j][i] {
                    return Err(LinkError::BadComponents);
                }
            }
        }
        Ok(LinkingMatrix {
            size,
            entries,
            framed,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<i64, LinkError> {
        if i >= self.size || j >= self.size {
            return Err(LinkError::ComponentOutOfRange(i.max(j)));
        }
        if i == j && !self.framed {
            return Err(LinkError::SelfLinkingWithoutFraming);
        }
        Ok(self.entries[i][j])
    }
}

/// Trace closure of a braid word. Crossing count equals letter count; the
/// component partition is given by the cycles of the strand permutation.
pub fn braid_closure(b: &BraidWord) -> PDCode {
    let n = b.strand_count();
    let letters = b.letters();

    // arc ids: 0..n-1 are the bottom arcs, two fresh ids per crossing
    let mut next_arc = n;
    let mut current: Vec<usize> = (0..n).collect();
    let mut crossings: Vec<Crossing> = Vec::with_capacity(letters.len());

    for &l in letters {
        let i = l.unsigned_abs() as usize - 1;
        let (left, right) = (current[i], current[i + 1]);
        let out_left = next_arc;
        let out_right = next_arc + 1;
        next_arc += 2;
        let c = if l > 0 {
            // left strand over: under-strand enters at SE (= right incoming)
            Crossing {
                arcs: [right, out_right, out_left, left],
                sign: 1,
            }
        } else {
            // right strand over: under-strand enters at SW (= left incoming)
            Crossing {
                arcs: [left, right, out_right, out_left],
                sign: -1,
            }
        };
        crossings.push(c);
        current[i] = out_left;
        current[i + 1] = out_right;
    }

    // closure: identify the top arc at position j with bottom arc j
    let mut uf = UnionFind::new(next_arc);
    for (j, &top) in current.iter().enumerate() {
        uf.union(j, top);
    }
    let mut canon: HashMap<usize, usize> = HashMap::new();
    let relabel = |a: usize, canon: &mut HashMap<usize, usize>, uf: &mut UnionFind| {
        let r = uf.find(a);
        let next = canon.len();
        *canon.entry(r).or_insert(next)
    };
    for c in &mut crossings {
        for slot in &mut c.arcs {
            *slot = relabel(*slot, &mut canon, &mut uf);
        }
    }
    // strands that never cross survive as crossingless unknot components
    let mut lone: Vec<usize> = Vec::new();
    for j in 0..n {
        let r = uf.find(j);
        if !canon.contains_key(&r) {
            let next = canon.len();
            canon.insert(r, next);
            lone.push(next);
        }
    }

    // orient: successor map from incoming arc to outgoing arc at each crossing
    let mut next_of: HashMap<usize, usize> = HashMap::new();
    for c in &crossings {
        let [a, b2, c2, d] = c.arcs;
        next_of.insert(a, c2);
        if c.sign > 0 {
            next_of.insert(d, b2);
        } else {
            next_of.insert(b2, d);
        }
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut visited: HashMap<usize, ()> = HashMap::new();
    let arc_count = canon.len();
    for start in 0..arc_count {
        if visited.contains_key(&start) || !next_of.contains_key(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut a = start;
        loop {
            if visited.insert(a, ()).is_some() {
                break;
            }
            comp.push(a);
            a = next_of[&a];
            if a == start {
                break;
            }
        }
        components.push(comp);
    }
    for a in lone {
        components.push(vec![a]);
    }

    PDCode {
        crossings,
        components,
    }
}

/// Distant union of two diagrams: arcs of `b` are shifted past those of `a`.
pub fn disjoint_union(a: &PDCode, b: &PDCode) -> PDCode {
    let mut max_arc = 0usize;
    for c in &a.crossings {
        for &x in &c.arcs {
            max_arc = max_arc.max(x + 1);
        }
    }
    for comp in &a.components {
        for &x in comp {
            max_arc = max_arc.max(x + 1);
        }
    }
    let shift = max_arc;
    let mut crossings = a.crossings.clone();
    for c in &b.crossings {
        crossings.push(Crossing {
            arcs: [
                c.arcs[0] + shift,
                c.arcs[1] + shift,
                c.arcs[2] + shift,
                c.arcs[3] + shift,
            ],
            sign: c.sign,
        });
    }
    let mut components = a.components.clone();
    for comp in &b.components {
        components.push(comp.iter().map(|&x| x + shift).collect());
    }
    PDCode {
        crossings,
        components,
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    /// Returns true if `a` and `b` were already in the same set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return true;
        }
        self.parent[ra] = rb;
        false
    }
}
