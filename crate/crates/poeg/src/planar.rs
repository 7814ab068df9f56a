//! Planarity testing via the left-right criterion.
//!
//! Two phases over a DFS orientation: first compute lowpoints and nesting
//! depths, then process outgoing edges in nesting order while maintaining a
//! stack of conflict pairs of return-edge intervals. The graph is planar iff
//! no pair of return edges is forced onto the same side from both sides.
//! The dense-graph rejection m > 3n - 6 runs first, so the main algorithm
//! only ever sees O(n) edges.

use crate::graph::Graph;
use serde::Serialize;

/// Planarity verdict. Witness emission is off by default; the verdict is
/// the contract, witnesses are diagnostics.
#[derive(Clone, Debug, Serialize)]
pub struct PlanarityResult {
    pub planar: bool,
    pub witness: Option<PlanarityWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub enum PlanarityWitness {
    /// Clockwise adjacency lists of an embedding.
    Embedding(Vec<Vec<usize>>),
    /// Branch vertices of a K5 or K33 subdivision.
    KuratowskiSubdivision(Vec<usize>),
}

pub fn is_planar(g: &Graph) -> PlanarityResult {
    PlanarityResult {
        planar: lr_planar(g),
        witness: None,
    }
}

type EdgeId = usize;
const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct ConflictPair {
    l: Interval,
    r: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.l, &mut self.r);
    }
}

struct Lr {
    // oriented edges
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    ref_: Vec<Option<EdgeId>>,
    lowpt_edge: Vec<Option<EdgeId>>,
    stack_bottom: Vec<usize>,

    height: Vec<usize>,
    parent_edge: Vec<Option<EdgeId>>,
    out: Vec<Vec<EdgeId>>,

    stack: Vec<ConflictPair>,
}

impl Lr {
    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.l.low, p.r.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("conflict pair with two empty intervals"),
        }
    }

    fn conflicting(&self, i: &Interval, b: EdgeId) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }
}

fn lr_planar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    let m = g.edge_count();
    if m > 3 * n - 6 {
        return false;
    }

    // adjacency with undirected edge ids
    let edges = g.edges();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (pid, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, pid));
        adj[v].push((u, pid));
    }

    let mut lr = Lr {
        src: Vec::with_capacity(m),
        dst: Vec::with_capacity(m),
        lowpt: Vec::with_capacity(m),
        lowpt2: Vec::with_capacity(m),
        nesting_depth: Vec::with_capacity(m),
        ref_: Vec::with_capacity(m),
        lowpt_edge: Vec::with_capacity(m),
        stack_bottom: Vec::with_capacity(m),
        height: vec![NONE; n],
        parent_edge: vec![None; n],
        out: vec![Vec::new(); n],
        stack: Vec::new(),
    };

    // Phase 1: DFS orientation, lowpoints, nesting depth.
    let mut oriented = vec![false; m];
    let mut roots = Vec::new();
    for s in 0..n {
        if lr.height[s] != NONE {
            continue;
        }
        roots.push(s);
        lr.height[s] = 0;
        // frame: (vertex, next adjacency index)
        let mut frames: Vec<(usize, usize)> = vec![(s, 0)];
        while let Some(&(v, idx)) = frames.last() {
            if idx < adj[v].len() {
                frames.last_mut().unwrap().1 += 1;
                let (w, pid) = adj[v][idx];
                if oriented[pid] {
                    continue;
                }
                oriented[pid] = true;
                let e = lr.src.len();
                lr.src.push(v);
                lr.dst.push(w);
                lr.lowpt.push(lr.height[v]);
                lr.lowpt2.push(lr.height[v]);
                lr.nesting_depth.push(0);
                lr.ref_.push(None);
                lr.lowpt_edge.push(None);
                lr.stack_bottom.push(0);
                lr.out[v].push(e);
                if lr.height[w] == NONE {
                    // tree edge; finish when w's subtree completes
                    lr.parent_edge[w] = Some(e);
                    lr.height[w] = lr.height[v] + 1;
                    frames.push((w, 0));
                } else {
                    // back edge
                    lr.lowpt[e] = lr.height[w];
                    finish_edge(&mut lr, v, e);
                }
            } else {
                frames.pop();
                if let Some(e) = lr.parent_edge[v] {
                    let src = lr.src[e];
                    finish_edge(&mut lr, src, e);
                }
            }
        }
    }

    // Phase 2: nesting order, then the left-right test.
    for v in 0..n {
        lr.out[v].sort_by_key(|&e| lr.nesting_depth[e]);
    }

    for &s in &roots {
        if !dfs_testing(&mut lr, s) {
            return false;
        }
    }
    true
}

fn finish_edge(lr: &mut Lr, v: usize, e: EdgeId) {
    lr.nesting_depth[e] = 2 * lr.lowpt[e] + usize::from(lr.lowpt2[e] < lr.height[v]);
    if let Some(pe) = lr.parent_edge[v] {
        if lr.lowpt[e] < lr.lowpt[pe] {
            lr.lowpt2[pe] = lr.lowpt[pe].min(lr.lowpt2[e]);
            lr.lowpt[pe] = lr.lowpt[e];
        } else if lr.lowpt[e] > lr.lowpt[pe] {
            lr.lowpt2[pe] = lr.lowpt2[pe].min(lr.lowpt[e]);
        } else {
            lr.lowpt2[pe] = lr.lowpt2[pe].min(lr.lowpt2[e]);
        }
    }
}

fn dfs_testing(lr: &mut Lr, root: usize) -> bool {
    // frame: (vertex, next out-edge index, edge awaiting post-processing)
    struct Frame {
        v: usize,
        idx: usize,
        pending: Option<(usize, EdgeId)>,
    }
    let mut frames = vec![Frame {
        v: root,
        idx: 0,
        pending: None,
    }];
    while !frames.is_empty() {
        let fi = frames.len() - 1;
        let v = frames[fi].v;
        if let Some((i, ei)) = frames[fi].pending.take() {
            if !integrate_edge(lr, v, i, ei) {
                return false;
            }
        }
        let i = frames[fi].idx;
        if i < lr.out[v].len() {
            let ei = lr.out[v][i];
            frames[fi].idx += 1;
            lr.stack_bottom[ei] = lr.stack.len();
            let w = lr.dst[ei];
            if lr.parent_edge[w] == Some(ei) {
                // tree edge: recurse, then integrate
                frames[fi].pending = Some((i, ei));
                frames.push(Frame {
                    v: w,
                    idx: 0,
                    pending: None,
                });
            } else {
                // back edge
                lr.lowpt_edge[ei] = Some(ei);
                lr.stack.push(ConflictPair {
                    l: Interval::default(),
                    r: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
                if !integrate_edge(lr, v, i, ei) {
                    return false;
                }
            }
        } else {
            frames.pop();
            if let Some(e) = lr.parent_edge[v] {
                let u = lr.src[e];
                remove_back_edges(lr, u);
                if lr.lowpt[e] < lr.height[u] {
                    let top = lr.stack.last().expect("return edge implies conflict pair");
                    let hl = top.l.high;
                    let hr = top.r.high;
                    lr.ref_[e] = match (hl, hr) {
                        (Some(l), Some(r)) => {
                            if lr.lowpt[l] > lr.lowpt[r] {
                                Some(l)
                            } else {
                                Some(r)
                            }
                        }
                        (Some(l), None) => Some(l),
                        _ => hr,
                    };
                }
            }
        }
    }
    true
}

/// The `lowpt[ei] < height[v]` step after an outgoing edge is fully
/// processed: first edge donates its lowpoint edge to the parent, later
/// edges add their constraints.
fn integrate_edge(lr: &mut Lr, v: usize, i: usize, ei: EdgeId) -> bool {
    if lr.lowpt[ei] >= lr.height[v] {
        return true;
    }
    if i == 0 {
        if let Some(pe) = lr.parent_edge[v] {
            lr.lowpt_edge[pe] = lr.lowpt_edge[ei];
        }
        true
    } else {
        let pe = lr.parent_edge[v].expect("non-root with constraints");
        add_constraints(lr, ei, pe)
    }
}

fn add_constraints(lr: &mut Lr, ei: EdgeId, e: EdgeId) -> bool {
    let mut p = ConflictPair::default();
    // merge return edges of ei into p.r
    loop {
        let mut q = lr
            .stack
            .pop()
            .expect("return edge of ei left a conflict pair");
        if !q.l.is_empty() {
            q.swap();
        }
        if !q.l.is_empty() {
            return false; // interleaving on both sides
        }
        let q_low = q.r.low.expect("non-empty interval has a low edge");
        if lr.lowpt[q_low] > lr.lowpt[e] {
            if p.r.is_empty() {
                p.r.high = q.r.high;
            } else {
                lr.ref_[p.r.low.unwrap()] = q.r.high;
            }
            p.r.low = q.r.low;
        } else {
            // aligns with the parent's lowpoint edge
            lr.ref_[q_low] = lr.lowpt_edge[e];
        }
        if lr.stack.len() <= lr.stack_bottom[ei] {
            break;
        }
    }
    // merge conflicting return edges of earlier siblings into p.l
    while let Some(top) = lr.stack.last() {
        if !(lr.conflicting(&top.l, ei) || lr.conflicting(&top.r, ei)) {
            break;
        }
        let mut q = lr.stack.pop().unwrap();
        if lr.conflicting(&q.r, ei) {
            q.swap();
        }
        if lr.conflicting(&q.r, ei) {
            return false; // interleaving on both sides
        }
        if let Some(lo) = p.r.low {
            lr.ref_[lo] = q.r.high;
        }
        if q.r.low.is_some() {
            p.r.low = q.r.low;
        }
        if p.l.is_empty() {
            p.l.high = q.l.high;
        } else {
            lr.ref_[p.l.low.unwrap()] = q.l.high;
        }
        p.l.low = q.l.low;
    }
    if !(p.l.is_empty() && p.r.is_empty()) {
        lr.stack.push(p);
    }
    true
}

fn remove_back_edges(lr: &mut Lr, u: usize) {
    // drop entire conflict pairs returning exactly to u
    while let Some(top) = lr.stack.last() {
        if lr.lowest(top) == lr.height[u] {
            lr.stack.pop();
        } else {
            break;
        }
    }
    // trim the next pair's intervals of edges returning to u
    if let Some(mut p) = lr.stack.pop() {
        while let Some(h) = p.l.high {
            if lr.dst[h] == u {
                p.l.high = lr.ref_[h];
            } else {
                break;
            }
        }
        if p.l.high.is_none() && p.l.low.is_some() {
            lr.ref_[p.l.low.unwrap()] = p.r.low;
            p.l.low = None;
        }
        while let Some(h) = p.r.high {
            if lr.dst[h] == u {
                p.r.high = lr.ref_[h];
            } else {
                break;
            }
        }
        if p.r.high.is_none() && p.r.low.is_some() {
            lr.ref_[p.r.low.unwrap()] = p.l.low;
            p.r.low = None;
        }
        lr.stack.push(p);
    }
}
