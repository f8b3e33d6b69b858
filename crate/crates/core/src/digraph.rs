//! Strongly connected components of small dense digraphs.

use alloc::vec;
use alloc::vec::Vec;

/// Adjacency-list digraph on vertices `0..n`. Parallel edges are irrelevant
/// for connectivity and are not stored.
#[derive(Debug, Clone)]
pub struct Digraph {
    succ: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { succ: vec![Vec::new(); n] }
    }

    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::new(n);
        for i in 0..n {
            for j in 0..n {
                if edge(i, j) {
                    g.succ[i].push(j);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, from: usize, to: usize) {
        if !self.succ[from].contains(&to) {
            self.succ[from].push(to);
        }
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.succ[from].contains(&to)
    }

    /// Tarjan's algorithm, iterative. Components come out in reverse
    /// topological order of the condensation.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        const UNSEEN: usize = usize::MAX;
        let n = self.len();
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps = Vec::new();
        let mut next = 0;
        // (vertex, position in its successor list)
        let mut call: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            call.push((root, 0));
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&(v, pos)) = call.last() {
                if let Some(&w) = self.succ[v].get(pos) {
                    if let Some(top) = call.last_mut() {
                        top.1 += 1;
                    }
                    if index[w] == UNSEEN {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        while let Some(w) = stack.pop() {
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        comps
    }

    /// Component id per vertex, using the order of
    /// [`strongly_connected_components`](Self::strongly_connected_components).
    pub fn component_ids(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let comps = self.strongly_connected_components();
        let mut id = vec![0; self.len()];
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                id[v] = c;
            }
        }
        (comps, id)
    }

    /// True when the component lies on a cycle: more than one vertex, or a
    /// self-loop.
    pub fn is_cyclic_component(&self, comp: &[usize]) -> bool {
        comp.len() > 1 || self.has_edge(comp[0], comp[0])
    }

    pub fn is_acyclic(&self) -> bool {
        self.strongly_connected_components().iter().all(|c| !self.is_cyclic_component(c))
    }

    /// Vertices reachable from `start` (including `start`).
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut todo = vec![start];
        seen[start] = true;
        while let Some(v) = todo.pop() {
            for &w in &self.succ[v] {
                if !seen[w] {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
        seen
    }

    pub fn reversed(&self) -> Digraph {
        let mut r = Digraph::new(self.len());
        for v in 0..self.len() {
            for &w in &self.succ[v] {
                r.succ[w].push(v);
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycles_and_a_tail() {
        let mut g = Digraph::new(5);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 2);
        g.add_edge(3, 4);
        let mut comps = g.strongly_connected_components();
        comps.sort();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(!g.is_acyclic());
    }

    #[test]
    fn self_loop_is_cyclic() {
        let mut g = Digraph::new(1);
        assert!(g.is_acyclic());
        g.add_edge(0, 0);
        assert!(!g.is_acyclic());
    }
}
