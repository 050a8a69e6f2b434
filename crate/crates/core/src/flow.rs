//! Dinic max-flow over i128 capacities, used by the exact densest-subgraph
//! feasibility test.

pub struct Dinic {
    n: usize,
    // arcs stored as (to, cap); reverse arc at index ^ 1
    to: Vec<u32>,
    cap: Vec<i128>,
    head: Vec<Vec<u32>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    pub fn new(n: usize) -> Self {
        Dinic {
            n,
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); n],
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, c: i128) {
        let id = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap.push(c);
        self.to.push(u as u32);
        self.cap.push(0);
        self.head[u].push(id);
        self.head[v].push(id + 1);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = std::collections::VecDeque::from([s]);
        self.level[s] = 0;
        while let Some(u) = queue.pop_front() {
            for &id in &self.head[u] {
                let v = self.to[id as usize] as usize;
                if self.cap[id as usize] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, f: i128) -> i128 {
        if u == t {
            return f;
        }
        while self.iter[u] < self.head[u].len() {
            let id = self.head[u][self.iter[u]] as usize;
            let v = self.to[id] as usize;
            if self.cap[id] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[id]));
                if d > 0 {
                    self.cap[id] -= d;
                    self.cap[id ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let mut flow = 0i128;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i128::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual graph (call after
    /// `max_flow`); the source side of a minimum cut.
    pub fn min_cut_source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for &id in &self.head[u] {
                let v = self.to[id as usize] as usize;
                if self.cap[id as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}
