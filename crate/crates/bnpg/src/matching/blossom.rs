//! Maximum-weight matching in general graphs: Edmonds' blossom method
//! driven by the primal-dual scheme, following Joris van Rantwijk's
//! reference implementation (and through it Galil's 1986 survey). Runs in
//! O(V^3).
//!
//! Vertex duals are stored doubled so every quantity stays integral for
//! integer weights; `slack` below is therefore twice the true slack.

use std::cmp::max;

/// Marker for "no vertex / no endpoint / no edge" in the index arrays.
pub(crate) const UNMATCHED: usize = usize::MAX;

const NONE: usize = usize::MAX;

/// Computes a maximum-weight matching over `edges` on vertices
/// `0..node_count`; with `max_cardinality` only maximum-cardinality
/// matchings compete. Returns `mate`, where `mate[v]` is `v`'s partner or
/// [`UNMATCHED`].
pub(crate) fn max_weight_matching(
    node_count: usize,
    edges: &[(usize, usize, i64)],
    max_cardinality: bool,
) -> Vec<usize> {
    if node_count == 0 || edges.is_empty() {
        return vec![UNMATCHED; node_count];
    }
    let mut solver = Solver::new(node_count, edges, max_cardinality);
    solver.run();
    // Translate mate from remote endpoints to partner vertices.
    (0..node_count)
        .map(|v| {
            if solver.mate[v] == NONE {
                UNMATCHED
            } else {
                solver.endpoint[solver.mate[v]]
            }
        })
        .collect()
}

// Vertices are 0..nvertex; non-trivial blossoms take ids
// nvertex..2*nvertex. Edge k has endpoints 2k and 2k+1; endpoint p lives at
// vertex endpoint[p] and its twin is p ^ 1. Labels: 0 free, 1 S, 2 T; bit 4
// is a traceback breadcrumb.
struct Solver<'a> {
    nvertex: usize,
    edges: &'a [(usize, usize, i64)],
    max_cardinality: bool,
    /// Vertex of each edge endpoint; fixed.
    endpoint: Vec<usize>,
    /// Incident edge endpoints (remote ends) per vertex; fixed.
    neighbend: Vec<Vec<usize>>,
    /// Remote endpoint of the matched edge per vertex, or NONE.
    mate: Vec<usize>,
    /// Label per top-level blossom (and per T-blossom interior vertex).
    label: Vec<usize>,
    /// Remote endpoint of the labeling edge.
    labelend: Vec<usize>,
    /// Top-level blossom containing each vertex.
    inblossom: Vec<usize>,
    /// Immediate parent blossom, or NONE at top level.
    blossomparent: Vec<usize>,
    /// Ordered sub-blossoms, base first.
    blossomchilds: Vec<Vec<usize>>,
    /// Base vertex per blossom.
    blossombase: Vec<usize>,
    /// Connecting edge endpoints between consecutive sub-blossoms.
    blossomendps: Vec<Vec<usize>>,
    /// Least-slack edge to an S-blossom, per vertex/blossom.
    bestedge: Vec<usize>,
    /// Least-slack edge lists per non-trivial top-level S-blossom.
    blossombestedges: Vec<Vec<usize>>,
    unusedblossoms: Vec<usize>,
    /// 2*u(v) for vertices, z(b) for blossoms.
    dualvar: Vec<i64>,
    /// Edges known to have zero slack.
    allowedge: Vec<bool>,
    /// Newly labeled S-vertices awaiting a scan.
    queue: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(node_count: usize, edges: &'a [(usize, usize, i64)], max_cardinality: bool) -> Self {
        let nvertex = node_count;
        let nedge = edges.len();
        let mut maxweight = 0;
        for &(i, j, wt) in edges {
            assert!(i != j && i < nvertex && j < nvertex, "bad edge ({i},{j})");
            maxweight = max(maxweight, wt);
        }
        let endpoint = (0..2 * nedge)
            .map(|p| if p % 2 == 0 { edges[p / 2].0 } else { edges[p / 2].1 })
            .collect();
        let mut neighbend = vec![vec![]; nvertex];
        for (k, &(i, j, _)) in edges.iter().enumerate() {
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }
        let mut blossombase: Vec<usize> = (0..nvertex).collect();
        blossombase.extend(vec![NONE; nvertex]);
        let mut dualvar = vec![maxweight; nvertex];
        dualvar.extend(vec![0; nvertex]);
        Solver {
            nvertex,
            edges,
            max_cardinality,
            endpoint,
            neighbend,
            mate: vec![NONE; nvertex],
            label: vec![0; 2 * nvertex],
            labelend: vec![NONE; 2 * nvertex],
            inblossom: (0..nvertex).collect(),
            blossomparent: vec![NONE; 2 * nvertex],
            blossomchilds: vec![vec![]; 2 * nvertex],
            blossombase,
            blossomendps: vec![vec![]; 2 * nvertex],
            bestedge: vec![NONE; 2 * nvertex],
            blossombestedges: vec![vec![]; 2 * nvertex],
            unusedblossoms: (nvertex..2 * nvertex).collect(),
            dualvar,
            allowedge: vec![false; nedge],
            queue: vec![],
        }
    }

    /// 2 * slack of edge k (valid only across top-level blossoms).
    fn slack(&self, k: usize) -> i64 {
        let (i, j, wt) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2 * wt
    }

    fn blossom_leaves(&self, b: usize) -> Vec<usize> {
        let mut leaves = vec![];
        if b < self.nvertex {
            leaves.push(b);
        } else {
            for &t in &self.blossomchilds[b] {
                if t < self.nvertex {
                    leaves.push(t);
                } else {
                    leaves.extend(self.blossom_leaves(t));
                }
            }
        }
        leaves
    }

    /// Labels the top-level blossom of `w` with `t`, reached via remote
    /// endpoint `p`; S-blossoms enqueue their vertices, T-blossoms
    /// immediately label their base's mate S.
    fn assign_label(&mut self, w: usize, t: usize, p: usize) {
        let b = self.inblossom[w];
        assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            let leaves = self.blossom_leaves(b);
            self.queue.extend(leaves);
        } else if t == 2 {
            let base = self.blossombase[b];
            assert!(self.mate[base] != NONE);
            let mbase = self.mate[base];
            let ep = self.endpoint[mbase];
            self.assign_label(ep, 1, mbase ^ 1);
        }
    }

    /// Traces back from S-vertices `v` and `w`; returns the base of the new
    /// blossom they close, or NONE if the paths reach distinct roots (an
    /// augmenting path exists).
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = vec![];
        let mut base = NONE;
        let mut v = v;
        let mut w = w;
        while v != NONE || w != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            assert!(self.label[b] == 1);
            path.push(b);
            self.label[b] = 5;
            assert_eq!(self.labelend[b], self.mate[self.blossombase[b]]);
            if self.labelend[b] == NONE {
                // Reached a single vertex; stop tracing this side.
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                assert!(self.label[b] == 2);
                assert!(self.labelend[b] != NONE);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    /// Closes the odd cycle through edge `k` into a fresh S-blossom rooted
    /// at `base`, absorbing the sub-blossoms on both traceback paths.
    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];

        let b = self.unusedblossoms.pop().expect("free blossom id");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;

        self.blossomchilds[b] = vec![];
        self.blossomendps[b] = vec![];
        while bv != bb {
            self.blossomparent[bv] = b;
            self.blossomchilds[b].push(bv);
            self.blossomendps[b].push(self.labelend[bv]);
            assert!(
                self.label[bv] == 2
                    || (self.label[bv] == 1
                        && self.labelend[bv] == self.mate[self.blossombase[bv]])
            );
            assert!(self.labelend[bv] != NONE);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        self.blossomchilds[b].push(bb);
        self.blossomchilds[b].reverse();
        self.blossomendps[b].reverse();
        self.blossomendps[b].push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            self.blossomchilds[b].push(bw);
            self.blossomendps[b].push(self.labelend[bw] ^ 1);
            assert!(
                self.label[bw] == 2
                    || (self.label[bw] == 1
                        && self.labelend[bw] == self.mate[self.blossombase[bw]])
            );
            assert!(self.labelend[bw] != NONE);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }

        assert!(self.label[bb] == 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0;

        for v in self.blossom_leaves(b) {
            if self.label[self.inblossom[v]] == 2 {
                // Former T-vertices become S-vertices; scan them.
                self.queue.push(v);
            }
            self.inblossom[v] = b;
        }

        // Merge least-slack edge lists of the children.
        let mut bestedgeto = vec![NONE; 2 * self.nvertex];
        for child_ix in 0..self.blossomchilds[b].len() {
            let bv = self.blossomchilds[b][child_ix];
            let nblists: Vec<Vec<usize>> = if self.blossombestedges[bv].is_empty() {
                self.blossom_leaves(bv)
                    .into_iter()
                    .map(|v| self.neighbend[v].iter().map(|p| p / 2).collect())
                    .collect()
            } else {
                vec![self.blossombestedges[bv].clone()]
            };
            for nblist in nblists {
                for k in nblist {
                    let (i0, j0, _) = self.edges[k];
                    let j = if self.inblossom[j0] == b { i0 } else { j0 };
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == NONE || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.blossombestedges[bv] = vec![];
            self.bestedge[bv] = NONE;
        }
        self.blossombestedges[b] = bestedgeto.into_iter().filter(|&k| k != NONE).collect();
        self.bestedge[b] = NONE;
        for ix in 0..self.blossombestedges[b].len() {
            let k = self.blossombestedges[b][ix];
            if self.bestedge[b] == NONE || self.slack(k) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k;
            }
        }
    }

    /// Dissolves top-level blossom `b`, promoting its children; during a
    /// stage a T-blossom's children are relabeled along the path from the
    /// entry child to the base.
    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for s in self.blossomchilds[b].clone() {
            self.blossomparent[s] = NONE;
            if s < self.nvertex {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                for v in self.blossom_leaves(s) {
                    self.inblossom[v] = s;
                }
            }
        }

        if !endstage && self.label[b] == 2 {
            assert!(self.labelend[b] != NONE);
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let mut j = self.blossomchilds[b]
                .iter()
                .position(|&r| r == entrychild)
                .expect("entry child present") as i32;
            let jstep: i32;
            let endptrick: usize;
            if j & 1 != 0 {
                j -= self.blossomchilds[b].len() as i32;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }

            let mut p = self.labelend[b];
            while j != 0 {
                // Relabel the T-sub-blossom.
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = wrap_index(&self.blossomendps[b], j - endptrick as i32) ^ endptrick ^ 1;
                self.label[self.endpoint[q]] = 0;
                let ep = self.endpoint[p ^ 1];
                self.assign_label(ep, 2, p);
                // The path edges had zero slack when the blossom formed.
                self.allowedge[wrap_index(&self.blossomendps[b], j - endptrick as i32) / 2] = true;
                j += jstep;
                p = wrap_index(&self.blossomendps[b], j - endptrick as i32) ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }

            // Relabel the base sub-blossom in place (its mate stays S).
            let bv = wrap_index(&self.blossomchilds[b], j);
            self.label[self.endpoint[p ^ 1]] = 2;
            self.label[bv] = 2;
            self.labelend[self.endpoint[p ^ 1]] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;

            // Remaining sub-blossoms keep label 0 unless reached from
            // outside; those get label T now.
            j += jstep;
            while wrap_index(&self.blossomchilds[b], j) != entrychild {
                let bv = wrap_index(&self.blossomchilds[b], j);
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let mut v = NONE;
                for leaf in self.blossom_leaves(bv) {
                    v = leaf;
                    if self.label[leaf] != 0 {
                        break;
                    }
                }
                if v != NONE && self.label[v] != 0 {
                    assert_eq!(self.label[v], 2);
                    assert_eq!(self.inblossom[v], bv);
                    self.label[v] = 0;
                    self.label[self.endpoint[self.mate[self.blossombase[bv]]]] = 0;
                    let lblend = self.labelend[v];
                    self.assign_label(v, 2, lblend);
                }
                j += jstep;
            }
        }

        self.label[b] = NONE;
        self.labelend[b] = NONE;
        self.blossombase[b] = NONE;
        self.bestedge[b] = NONE;
        self.blossomchilds[b] = vec![];
        self.blossomendps[b] = vec![];
        self.blossombestedges[b] = vec![];
        self.unusedblossoms.push(b);
    }

    /// Swaps matched/unmatched edges along the path inside blossom `b` from
    /// vertex `v` to the base, then rotates the child list so `v` becomes
    /// the base.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t != NONE && t >= self.nvertex {
            self.augment_blossom(t, v);
        }
        let i = self
            .blossomchilds[b]
            .iter()
            .position(|&r| r == t)
            .expect("child present");
        let mut j = i as i32;
        let jstep: i32;
        let endptrick: usize;
        if i & 1 != 0 {
            j -= self.blossomchilds[b].len() as i32;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while j != 0 {
            j += jstep;
            let mut t = wrap_index(&self.blossomchilds[b], j);
            let p = wrap_index(&self.blossomendps[b], j - endptrick as i32) ^ endptrick;
            if t != NONE && t >= self.nvertex {
                let ep = self.endpoint[p];
                self.augment_blossom(t, ep);
            }
            j += jstep;
            t = wrap_index(&self.blossomchilds[b], j);
            if t != NONE && t >= self.nvertex {
                let ep = self.endpoint[p ^ 1];
                self.augment_blossom(t, ep);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        rotate(&mut self.blossomchilds[b], i);
        rotate(&mut self.blossomendps[b], i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        assert_eq!(self.blossombase[b], v);
    }

    /// Augments along the path through zero-slack edge `k` joining two
    /// S-vertices in different trees.
    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for &(start, start_p) in &[(v, 2 * k + 1), (w, 2 * k)] {
            let mut s = start;
            let mut p = start_p;
            loop {
                let bs = self.inblossom[s];
                assert!(self.label[bs] == 1);
                assert_eq!(self.labelend[bs], self.mate[self.blossombase[bs]]);
                if bs != NONE && bs >= self.nvertex {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    // Reached a single vertex; this side is done.
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                assert!(self.label[bt] == 2);
                assert!(self.labelend[bt] != NONE);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                assert_eq!(self.blossombase[bt], t);
                if bt != NONE && bt >= self.nvertex {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    /// Dual-feasibility certificate: nonnegative slacks, tight matched
    /// edges, zero duals on exposed vertices, full blossoms with positive
    /// duals.
    #[cfg(debug_assertions)]
    fn verify_optimum(&self) {
        let vdualoffset = if self.max_cardinality {
            max(0, -self.dualvar[..self.nvertex].iter().copied().min().unwrap())
        } else {
            0
        };
        for k in 0..self.edges.len() {
            let (i, j, wt) = self.edges[k];
            let mut s = self.dualvar[i] + self.dualvar[j] - 2 * wt;
            let mut iblossoms = vec![i];
            let mut jblossoms = vec![j];
            while self.blossomparent[*iblossoms.last().unwrap()] != NONE {
                let last = *iblossoms.last().unwrap();
                iblossoms.push(self.blossomparent[last]);
            }
            while self.blossomparent[*jblossoms.last().unwrap()] != NONE {
                let last = *jblossoms.last().unwrap();
                jblossoms.push(self.blossomparent[last]);
            }
            iblossoms.reverse();
            jblossoms.reverse();
            for (&bi, &bj) in iblossoms.iter().zip(jblossoms.iter()) {
                if bi != bj {
                    break;
                }
                s += 2 * self.dualvar[bi];
            }
            assert!(s >= 0, "negative slack on edge {k}");
            if self.mate[i] / 2 == k || self.mate[j] / 2 == k {
                assert!(self.mate[i] / 2 == k && self.mate[j] / 2 == k);
                assert_eq!(s, 0, "matched edge {k} not tight");
            }
        }
        for v in 0..self.nvertex {
            assert!(
                self.mate[v] != NONE || self.dualvar[v] + vdualoffset == 0,
                "exposed vertex {v} with positive dual"
            );
        }
        for b in self.nvertex..2 * self.nvertex {
            if self.blossomparent[b] == NONE && self.blossombase[b] != NONE && self.dualvar[b] > 0
            {
                assert!(self.blossomendps[b].len() % 2 == 1);
                for (ix, &p) in self.blossomendps[b].iter().enumerate() {
                    if ix % 2 == 1 {
                        assert_eq!(self.mate[self.endpoint[p]], p ^ 1);
                        assert_eq!(self.mate[self.endpoint[p ^ 1]], p);
                    }
                }
            }
        }
    }

    fn run(&mut self) {
        let nedge = self.edges.len();
        let mut kslack = 0i64;
        for _stage in 0..self.nvertex {
            // Each stage hunts for one augmenting path.
            self.label = vec![0; 2 * self.nvertex];
            self.bestedge = vec![NONE; 2 * self.nvertex];
            for b in self.nvertex..2 * self.nvertex {
                self.blossombestedges[b] = vec![];
            }
            self.allowedge = vec![false; nedge];
            self.queue = vec![];
            for v in 0..self.nvertex {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == 0 {
                    self.assign_label(v, 1, NONE);
                }
            }
            let mut augmented = false;
            loop {
                // Substage: grow the forest along allowable edges; if stuck,
                // shift duals to create new allowable edges.
                while !self.queue.is_empty() && !augmented {
                    let v = self.queue.pop().unwrap();
                    assert!(self.label[self.inblossom[v]] == 1);
                    for p in self.neighbend[v].clone() {
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        if !self.allowedge[k] {
                            kslack = self.slack(k);
                            if kslack <= 0 {
                                self.allowedge[k] = true;
                            }
                        }
                        if self.allowedge[k] {
                            if self.label[self.inblossom[w]] == 0 {
                                self.assign_label(w, 2, p ^ 1);
                            } else if self.label[self.inblossom[w]] == 1 {
                                let base = self.scan_blossom(v, w);
                                if base != NONE {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if self.label[w] == 0 {
                                assert!(self.label[self.inblossom[w]] == 2);
                                self.label[w] = 2;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == 1 {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == NONE
                                || kslack < self.slack(self.bestedge[b])
                            {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == 0
                            && (self.bestedge[w] == NONE
                                || kslack < self.slack(self.bestedge[w]))
                        {
                            self.bestedge[w] = k;
                        }
                    }
                }
                if augmented {
                    break;
                }

                // Dual update: pick the binding constraint.
                let mut deltatype = -1;
                let mut delta = 0;
                let mut deltaedge = 0;
                let mut deltablossom = 0;
                if !self.max_cardinality {
                    deltatype = 1;
                    delta = self.dualvar[..self.nvertex].iter().copied().min().unwrap();
                }
                // delta2: least slack to a free vertex.
                for v in 0..self.nvertex {
                    if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != NONE {
                        let d = self.slack(self.bestedge[v]);
                        if deltatype == -1 || d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }
                // delta3: half the least slack between S-blossoms.
                for b in 0..2 * self.nvertex {
                    if self.blossomparent[b] == NONE
                        && self.label[b] == 1
                        && self.bestedge[b] != NONE
                    {
                        let d = self.slack(self.bestedge[b]) / 2;
                        if deltatype == -1 || d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }
                // delta4: smallest dual of a T-blossom.
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != NONE
                        && self.blossomparent[b] == NONE
                        && self.label[b] == 2
                        && (deltatype == -1 || self.dualvar[b] < delta)
                    {
                        delta = self.dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if deltatype == -1 {
                    // Max-cardinality optimum reached; final cleanup update.
                    assert!(self.max_cardinality);
                    deltatype = 1;
                    delta = max(
                        0,
                        self.dualvar[..self.nvertex].iter().copied().min().unwrap(),
                    );
                }

                for v in 0..self.nvertex {
                    match self.label[self.inblossom[v]] {
                        0 => {}
                        1 => self.dualvar[v] -= delta,
                        2 => self.dualvar[v] += delta,
                        other => panic!("unexpected vertex label {other}"),
                    }
                }
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != NONE && self.blossomparent[b] == NONE {
                        match self.label[b] {
                            0 => {}
                            1 => self.dualvar[b] += delta,
                            2 => self.dualvar[b] -= delta,
                            other => panic!("unexpected blossom label {other}"),
                        }
                    }
                }

                match deltatype {
                    1 => break, // optimum reached
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (mut i, j, _) = self.edges[deltaedge];
                        if self.label[self.inblossom[i]] == 0 {
                            i = j;
                        }
                        assert!(self.label[self.inblossom[i]] == 1);
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _, _) = self.edges[deltaedge];
                        assert!(self.label[self.inblossom[i]] == 1);
                        self.queue.push(i);
                    }
                    4 => self.expand_blossom(deltablossom, false),
                    other => panic!("unexpected delta type {other}"),
                }
            }

            if !augmented {
                break;
            }

            // Expand S-blossoms whose dual dropped to zero.
            for b in self.nvertex..2 * self.nvertex {
                if self.blossomparent[b] == NONE
                    && self.blossombase[b] != NONE
                    && self.label[b] == 1
                    && self.dualvar[b] == 0
                {
                    self.expand_blossom(b, true);
                }
            }
        }

        #[cfg(debug_assertions)]
        self.verify_optimum();

        for v in 0..self.nvertex {
            debug_assert!(
                self.mate[v] == NONE || self.mate[self.endpoint[self.mate[v]]] == self.mate[v] ^ 1
            );
        }
    }
}

/// Python-style `v[split:] + v[:split]` in place.
fn rotate(v: &mut Vec<usize>, split: usize) {
    v.rotate_left(split);
}

/// Python-style indexing where negative indices count from the back.
fn wrap_index(v: &[usize], index: i32) -> usize {
    if index >= 0 {
        v[index as usize]
    } else {
        v[v.len() - (-index) as usize]
    }
}
