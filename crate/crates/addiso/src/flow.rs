//! Dinic max-flow on a small directed graph, used for vertex cuts in Cayley
//! graphs.

const INF: i64 = i64::MAX / 4;

pub(crate) struct FlowNet {
    n: usize,
    to: Vec<u32>,
    cap: Vec<i64>,
    adj: Vec<Vec<u32>>,
    level: Vec<i32>,
    it: Vec<usize>,
}

impl FlowNet {
    pub(crate) fn new(n: usize) -> FlowNet {
        FlowNet {
            n,
            to: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); n],
            level: vec![-1; n],
            it: vec![0; n],
        }
    }

    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: i64) {
        let id = self.to.len() as u32;
        self.to.push(to as u32);
        self.cap.push(cap);
        self.to.push(from as u32);
        self.cap.push(0);
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
    }

    fn bfs(&mut self, src: usize, sink: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = std::collections::VecDeque::new();
        self.level[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &id in &self.adj[v] {
                let w = self.to[id as usize] as usize;
                if self.cap[id as usize] > 0 && self.level[w] < 0 {
                    self.level[w] = self.level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[sink] >= 0
    }

    fn dfs(&mut self, v: usize, sink: usize, pushed: i64) -> i64 {
        if v == sink {
            return pushed;
        }
        while self.it[v] < self.adj[v].len() {
            let id = self.adj[v][self.it[v]] as usize;
            let w = self.to[id] as usize;
            if self.cap[id] > 0 && self.level[w] == self.level[v] + 1 {
                let got = self.dfs(w, sink, pushed.min(self.cap[id]));
                if got > 0 {
                    self.cap[id] -= got;
                    self.cap[id ^ 1] += got;
                    return got;
                }
            }
            self.it[v] += 1;
        }
        0
    }

    /// Max flow from `src` to `sink`, giving up early once `cutoff` is
    /// reached (the exact value no longer matters to a minimizing caller).
    pub(crate) fn max_flow(&mut self, src: usize, sink: usize, cutoff: i64) -> i64 {
        let mut flow = 0;
        while flow < cutoff && self.bfs(src, sink) {
            self.it.iter_mut().for_each(|i| *i = 0);
            loop {
                let got = self.dfs(src, sink, INF);
                if got == 0 {
                    break;
                }
                flow += got;
                if flow >= cutoff {
                    break;
                }
            }
        }
        flow
    }

    /// Nodes reachable from `src` in the residual graph. Only meaningful
    /// after a run of `max_flow` that was not cut off.
    pub(crate) fn residual_reachable(&self, src: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        seen[src] = true;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &id in &self.adj[v] {
                let w = self.to[id as usize] as usize;
                if self.cap[id as usize] > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }
}

pub(crate) fn infinite_cap() -> i64 {
    INF
}
