//! Integral maximum flow by capacity scaling: for `Δ = 2^k, …, 1` Dinic's
//! blocking flows are run on the residual edges of capacity at least `Δ`.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: u64,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    original: Vec<u64>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { edges: Vec::new(), adj: vec![Vec::new(); nodes], original: Vec::new() }
    }

    /// Adds `from → to` and returns its edge id.
    pub fn add_edge(&mut self, from: usize, to: usize, cap: u64) -> usize {
        let id = self.edges.len();
        self.edges.push(Edge { to, cap });
        self.edges.push(Edge { to: from, cap: 0 });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        self.original.push(cap);
        self.original.push(0);
        id
    }

    pub fn flow_on(&self, edge: usize) -> u64 {
        self.original[edge] - self.edges[edge].cap
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> u128 {
        let max_cap = self.original.iter().copied().max().unwrap_or(0);
        if max_cap == 0 || s == t {
            return 0;
        }
        let mut delta = 1u64 << (63 - max_cap.leading_zeros());
        let mut total: u128 = 0;
        loop {
            while let Some(level) = self.levels(s, t, delta) {
                let mut next = vec![0usize; self.adj.len()];
                loop {
                    let f = self.push(s, t, u64::MAX, delta, &level, &mut next);
                    if f == 0 {
                        break;
                    }
                    total += f as u128;
                }
            }
            if delta == 1 {
                return total;
            }
            delta >>= 1;
        }
    }

    fn levels(&self, s: usize, t: usize, delta: u64) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.adj.len()];
        level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &e in &self.adj[v] {
                let Edge { to, cap } = self.edges[e];
                if cap >= delta && level[to] == u32::MAX {
                    level[to] = level[v] + 1;
                    q.push_back(to);
                }
            }
        }
        (level[t] != u32::MAX).then_some(level)
    }

    fn push(&mut self, v: usize, t: usize, limit: u64, delta: u64, level: &[u32], next: &mut [usize]) -> u64 {
        if v == t {
            return limit;
        }
        while next[v] < self.adj[v].len() {
            let e = self.adj[v][next[v]];
            let Edge { to, cap } = self.edges[e];
            if cap >= delta && level[to] == level[v] + 1 {
                let f = self.push(to, t, limit.min(cap), delta, level, next);
                if f > 0 {
                    self.edges[e].cap -= f;
                    self.edges[e ^ 1].cap += f;
                    return f;
                }
            }
            next[v] += 1;
        }
        0
    }

    /// Nodes reachable from `s` through edges with positive residual capacity.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &e in &self.adj[v] {
                let Edge { to, cap } = self.edges[e];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    q.push_back(to);
                }
            }
        }
        seen
    }
}
