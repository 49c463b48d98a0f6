//! Disjoint-set forest with undo, used by the subset enumerators so that a
//! depth-first walk over edge subsets can add an edge and later take it back.

#[derive(Clone, Debug)]
pub(crate) struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
    // (absorbed root, surviving root) for each successful union
    history: Vec<Option<(usize, usize)>>,
}

impl RollbackDsu {
    pub fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Joins the sets of `a` and `b`; returns false when they were already
    /// joined. Every call pushes one history entry, successful or not.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        self.history.push(Some((rb, ra)));
        true
    }

    pub fn undo(&mut self) {
        if let Some(Some((child, root))) = self.history.pop() {
            self.parent[child] = child;
            self.size[root] -= self.size[child];
            self.components += 1;
        }
    }
}

/// Plain union-find with path halving for one-shot component counts.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[rb] = ra;
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}
