//! Exact-cover backtracking shared by every enumerator in the crate.
//!
//! Items are either *required* (covered exactly once) or *optional* (covered at
//! most once). The search branches on the uncovered required item with the
//! fewest available options. Once every required item is covered, all
//! pairwise-disjoint subsets of the remaining available options are emitted,
//! so optional-only options are enumerated too.

use crate::exec::Exec;

/// Below this many tasks the parallel driver keeps expanding the frontier.
const FRONTIER_TARGET: usize = 64;
const FRONTIER_MAX_DEPTH: usize = 4;

#[derive(Debug, Clone)]
pub struct CoverProblem {
    n_items: usize,
    options: Vec<Vec<usize>>,
    required: Vec<bool>,
    item_options: Vec<Vec<usize>>,
}

enum Pick {
    Dead,
    Done,
    Item(usize),
}

#[derive(Clone)]
struct State {
    covered: Vec<bool>,
    chosen: Vec<usize>,
}

impl CoverProblem {
    /// `options[o]` lists the items option `o` covers. Items must be `< n_items`
    /// and distinct within an option.
    pub fn new(n_items: usize, options: Vec<Vec<usize>>, required: Vec<bool>) -> Self {
        assert_eq!(required.len(), n_items);
        let mut item_options = vec![Vec::new(); n_items];
        for (o, items) in options.iter().enumerate() {
            for &it in items {
                item_options[it].push(o);
            }
        }
        CoverProblem {
            n_items,
            options,
            required,
            item_options,
        }
    }

    pub fn n_items(&self) -> usize {
        self.n_items
    }

    pub fn options(&self) -> &[Vec<usize>] {
        &self.options
    }

    fn available(&self, covered: &[bool], o: usize) -> bool {
        self.options[o].iter().all(|&it| !covered[it])
    }

    fn pick(&self, covered: &[bool]) -> Pick {
        let mut best: Option<(usize, usize)> = None;
        for item in 0..self.n_items {
            if !self.required[item] || covered[item] {
                continue;
            }
            let count = self.item_options[item]
                .iter()
                .filter(|&&o| self.available(covered, o))
                .count();
            if count == 0 {
                return Pick::Dead;
            }
            if best.is_none_or(|(_, c)| count < c) {
                best = Some((item, count));
                if count == 1 {
                    break;
                }
            }
        }
        match best {
            Some((item, _)) => Pick::Item(item),
            None => Pick::Done,
        }
    }

    fn apply(&self, st: &mut State, o: usize) {
        for &it in &self.options[o] {
            st.covered[it] = true;
        }
        st.chosen.push(o);
    }

    fn undo(&self, st: &mut State, o: usize) {
        for &it in &self.options[o] {
            st.covered[it] = false;
        }
        st.chosen.pop();
    }

    fn search<A, V>(&self, st: &mut State, acc: &mut A, visit: &V)
    where
        V: Fn(&mut A, &[usize]),
    {
        match self.pick(&st.covered) {
            Pick::Dead => {}
            Pick::Item(item) => {
                for idx in 0..self.item_options[item].len() {
                    let o = self.item_options[item][idx];
                    if !self.available(&st.covered, o) {
                        continue;
                    }
                    self.apply(st, o);
                    self.search(st, acc, visit);
                    self.undo(st, o);
                }
            }
            Pick::Done => {
                let free: Vec<usize> = (0..self.options.len())
                    .filter(|&o| self.available(&st.covered, o))
                    .collect();
                self.free_subsets(st, &free, 0, acc, visit);
            }
        }
    }

    fn free_subsets<A, V>(&self, st: &mut State, free: &[usize], from: usize, acc: &mut A, visit: &V)
    where
        V: Fn(&mut A, &[usize]),
    {
        visit(acc, &st.chosen);
        for p in from..free.len() {
            let o = free[p];
            if !self.available(&st.covered, o) {
                continue;
            }
            self.apply(st, o);
            self.free_subsets(st, free, p + 1, acc, visit);
            self.undo(st, o);
        }
    }

    /// Expands the search tree breadth-first into independent task prefixes,
    /// preserving the sequential visiting order.
    fn frontier(&self) -> Vec<Vec<usize>> {
        let mut tasks: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..FRONTIER_MAX_DEPTH {
            if tasks.len() >= FRONTIER_TARGET {
                break;
            }
            let mut next = Vec::new();
            let mut grew = false;
            for prefix in tasks {
                let st = self.state_for(&prefix);
                match self.pick(&st.covered) {
                    Pick::Item(item) => {
                        grew = true;
                        for &o in &self.item_options[item] {
                            if self.available(&st.covered, o) {
                                let mut p = prefix.clone();
                                p.push(o);
                                next.push(p);
                            }
                        }
                    }
                    Pick::Dead => grew = true,
                    Pick::Done => next.push(prefix),
                }
            }
            tasks = next;
            if !grew {
                break;
            }
        }
        tasks
    }

    fn state_for(&self, prefix: &[usize]) -> State {
        let mut st = State {
            covered: vec![false; self.n_items],
            chosen: Vec::with_capacity(self.n_items),
        };
        for &o in prefix {
            self.apply(&mut st, o);
        }
        st
    }

    /// Folds `visit` over every solution. Under [`Exec::Parallel`] the tree is
    /// split into subtrees whose accumulators are merged in sequential order.
    pub fn fold<A, I, V, M>(&self, exec: Exec, init: I, visit: V, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        V: Fn(&mut A, &[usize]) + Sync + Send,
        M: Fn(A, A) -> A,
    {
        if !exec.is_parallel() {
            let mut acc = init();
            let mut st = self.state_for(&[]);
            self.search(&mut st, &mut acc, &visit);
            return acc;
        }
        let tasks = self.frontier();
        let parts = exec.map(tasks, |prefix| {
            let mut acc = init();
            let mut st = self.state_for(&prefix);
            self.search(&mut st, &mut acc, &visit);
            acc
        });
        parts.into_iter().fold(init(), merge)
    }

    /// All solutions, each sorted ascending, the list sorted lexicographically.
    pub fn solutions(&self, exec: Exec) -> Vec<Vec<usize>> {
        let mut all = self.fold(
            exec,
            Vec::new,
            |acc: &mut Vec<Vec<usize>>, chosen| {
                let mut s = chosen.to_vec();
                s.sort_unstable();
                acc.push(s);
            },
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        );
        all.sort();
        all
    }

    pub fn count(&self, exec: Exec) -> u128 {
        self.fold(exec, || 0u128, |acc, _| *acc += 1, |a, b| a + b)
    }
}
