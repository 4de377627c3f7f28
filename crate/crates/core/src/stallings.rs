//! Stallings automata for finitely generated subgroups of a free group.
//!
//! Folding tracks, on every edge, an element of the free group on the input
//! generators (its "label"). Along any closed walk at the base the product
//! of labels maps onto the word read by the walk, which is how each basis
//! word gets an expression over the generators it came from.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

use crate::words::Word;

pub const DEFAULT_COSET_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StallingsError {
    #[error("coset enumeration exceeded the cap of {cap} cosets")]
    IndexCapExceeded { cap: usize },
}

/// Coset cap from `FTFA_COSET_CAP`, falling back to [`DEFAULT_COSET_CAP`].
pub fn default_coset_cap() -> usize {
    std::env::var("FTFA_COSET_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_COSET_CAP)
}

/// Folded, cored, base-pointed automaton with canonically numbered states.
///
/// State 0 is the base. Edges are stored once, with a positive letter;
/// reading an edge backwards reads the inverse letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automaton {
    rank: usize,
    states: usize,
    edges: Vec<(usize, i32, usize)>,
    fwd: Vec<Vec<Option<usize>>>,
    bwd: Vec<Vec<Option<usize>>>,
}

/// Spanning-tree basis of an automaton and its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeBasisData {
    pub basis_words: Vec<Word>,
    /// Word read along the spanning tree from the base to each state.
    pub spanning_tree: Vec<Word>,
    /// Expression of each basis word over the generators the automaton was
    /// folded from.
    pub generator_expressions: Vec<Word>,
    edge_basis: Vec<Option<usize>>,
}

#[derive(Serialize)]
struct AutomatonDump {
    rank: usize,
    states: usize,
    base: usize,
    transitions: Vec<(usize, i32, usize)>,
}

impl Automaton {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_states(&self) -> usize {
        self.states
    }

    pub fn base(&self) -> usize {
        0
    }

    /// Stored edges `(from, positive letter, to)`.
    pub fn edges(&self) -> &[(usize, i32, usize)] {
        &self.edges
    }

    /// Rank of the recognised subgroup, `|E| - |V| + 1`.
    pub fn subgroup_rank(&self) -> usize {
        if self.edges.is_empty() {
            0
        } else {
            self.edges.len() + 1 - self.states
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge read from `state` by the signed letter, with `true` when read forwards.
    fn step_edge(&self, state: usize, letter: i32) -> Option<(usize, bool)> {
        let a = letter.unsigned_abs() as usize - 1;
        if a >= self.rank {
            return None;
        }
        if letter > 0 {
            self.fwd[state][a].map(|e| (e, true))
        } else {
            self.bwd[state][a].map(|e| (e, false))
        }
    }

    pub fn step(&self, state: usize, letter: i32) -> Option<usize> {
        self.step_edge(state, letter).map(|(e, f)| {
            let (s, _, t) = self.edges[e];
            if f {
                t
            } else {
                s
            }
        })
    }

    /// Reads `w` from `start`, returning the end state if the walk exists.
    pub fn walk(&self, start: usize, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(start, |s, &l| self.step(s, l))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.walk(0, w) == Some(0)
    }

    /// Spanning-tree basis with each basis word as its own expression.
    pub fn spanning_basis(&self) -> FreeBasisData {
        let mut data = bfs_basis(self, None);
        data.generator_expressions = (1..=data.basis_words.len() as i32)
            .map(Word::letter)
            .collect();
        data
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(AutomatonDump {
            rank: self.rank,
            states: self.states,
            base: 0,
            transitions: self.edges.clone(),
        })
        .expect("automaton dump is always serialisable")
    }
}

impl FreeBasisData {
    pub fn rank(&self) -> usize {
        self.basis_words.len()
    }
}

/// Expression of `w` over the basis symbols, or `None` when `w` is not accepted.
pub fn rewrite(data: &FreeBasisData, a: &Automaton, w: &Word) -> Option<Word> {
    let mut state = 0;
    let mut out = Vec::new();
    for &l in w.letters() {
        let (e, forward) = a.step_edge(state, l)?;
        let (s, _, t) = a.edges[e];
        state = if forward { t } else { s };
        if let Some(j) = data.edge_basis[e] {
            let g = j as i32 + 1;
            out.push(if forward { g } else { -g });
        }
    }
    (state == 0).then(|| Word::from_letters(out))
}

/// Folds the subgroup generated by `generators` inside the free group of rank `n`.
///
/// Panics if a generator uses a letter beyond `n`.
pub fn fold(n: usize, generators: &[Word]) -> (Automaton, FreeBasisData) {
    let mut g = RawGraph::new(n);
    for (i, w) in generators.iter().enumerate() {
        assert!(
            w.max_index() <= n,
            "generator {i} uses letters beyond rank {n}"
        );
        if w.is_identity() {
            continue;
        }
        g.add_petal(w, Word::letter(i as i32 + 1));
    }
    g.fold_all();
    g.core();
    g.canonical(true)
}

/// Automaton of the intersection of the recognised subgroups.
pub fn multi_pullback(automata: &[&Automaton]) -> Automaton {
    let (first, rest) = automata
        .split_first()
        .expect("multi_pullback needs at least one automaton");
    rest.iter()
        .fold((*first).clone(), |acc, b| pullback(&acc, b))
}

fn pullback(a: &Automaton, b: &Automaton) -> Automaton {
    assert_eq!(a.rank, b.rank, "pullback of automata over different ranks");
    let n = a.rank;
    let mut g = RawGraph::new(n);
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    index.insert((0, 0), 0);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some((p, q)) = queue.pop_front() {
        let from = index[&(p, q)];
        // positive letters add edges; inverse letters only discover states,
        // whose own positive edges are added when they are processed
        for letter in (1..=n as i32).flat_map(|x| [x, -x]) {
            let (Some(p2), Some(q2)) = (a.step(p, letter), b.step(q, letter)) else {
                continue;
            };
            let to = *index.entry((p2, q2)).or_insert_with(|| {
                queue.push_back((p2, q2));
                g.add_vertex()
            });
            if letter > 0 {
                g.add_edge(from, letter, to, Word::identity());
            }
        }
    }
    g.core();
    g.canonical(false).0
}

#[derive(Debug, Clone)]
struct RawEdge {
    from: usize,
    letter: i32,
    to: usize,
    label: Word,
    alive: bool,
}

/// Mutable labelled graph used while folding and coring.
struct RawGraph {
    n: usize,
    edges: Vec<RawEdge>,
    adj: Vec<Vec<usize>>,
    alive: Vec<bool>,
}

impl RawGraph {
    fn new(n: usize) -> Self {
        RawGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new()],
            alive: vec![true],
        }
    }

    fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.alive.push(true);
        self.adj.len() - 1
    }

    fn add_edge(&mut self, from: usize, letter: i32, to: usize, label: Word) {
        debug_assert!(letter > 0);
        let id = self.edges.len();
        self.edges.push(RawEdge {
            from,
            letter,
            to,
            label,
            alive: true,
        });
        self.adj[from].push(id);
        if to != from {
            self.adj[to].push(id);
        }
    }

    /// Adds a closed path at the base reading `w`, its last edge labelled `g`.
    fn add_petal(&mut self, w: &Word, g: Word) {
        let letters = w.letters();
        let mut cur = 0;
        for (pos, &l) in letters.iter().enumerate() {
            let last = pos + 1 == letters.len();
            let next = if last { 0 } else { self.add_vertex() };
            let label = if last { g.clone() } else { Word::identity() };
            if l > 0 {
                self.add_edge(cur, l, next, label);
            } else {
                self.add_edge(next, -l, cur, label.inverse());
            }
            cur = next;
        }
    }

    /// Multiplies the labels around vertex `v` by `c` (outgoing on the
    /// left, incoming by `c⁻¹` on the right).
    fn gauge(&mut self, v: usize, c: &Word) {
        if c.is_identity() {
            return;
        }
        let ci = c.inverse();
        for &e in &self.adj[v] {
            let edge = &mut self.edges[e];
            if !edge.alive {
                continue;
            }
            let mut lab = edge.label.clone();
            if edge.from == v {
                lab = c.concat(&lab);
            }
            if edge.to == v {
                lab = lab.concat(&ci);
            }
            edge.label = lab;
        }
    }

    fn kill_edge(&mut self, e: usize) {
        self.edges[e].alive = false;
        let (f, t) = (self.edges[e].from, self.edges[e].to);
        self.adj[f].retain(|&x| x != e);
        if t != f {
            self.adj[t].retain(|&x| x != e);
        }
    }

    /// Moves every edge of `w2` onto `w1` and deletes `w2`.
    fn merge(&mut self, w1: usize, w2: usize) {
        let moved = std::mem::take(&mut self.adj[w2]);
        for e in moved {
            let edge = &mut self.edges[e];
            if !edge.alive {
                continue;
            }
            let was_incident = edge.from == w1 || edge.to == w1;
            if edge.from == w2 {
                edge.from = w1;
            }
            if edge.to == w2 {
                edge.to = w1;
            }
            if !was_incident {
                self.adj[w1].push(e);
            }
        }
        self.alive[w2] = false;
    }

    /// Finds two edges at `v` reading the same signed letter.
    fn find_clash(&self, v: usize) -> Option<(usize, usize, bool)> {
        // slot 2(a-1) for a, 2(a-1)+1 for a⁻¹
        let mut seen = vec![usize::MAX; 2 * self.n];
        for &e in &self.adj[v] {
            let edge = &self.edges[e];
            if !edge.alive {
                continue;
            }
            let base = 2 * (edge.letter as usize - 1);
            for (slot, here) in [(base, edge.from == v), (base + 1, edge.to == v)] {
                if !here {
                    continue;
                }
                let other = seen[slot];
                if other != usize::MAX && other != e {
                    return Some((other, e, slot == base));
                }
                seen[slot] = e;
            }
        }
        None
    }

    fn fold_all(&mut self) {
        let mut work: Vec<usize> = (0..self.adj.len()).collect();
        while let Some(v) = work.pop() {
            if !self.alive[v] {
                continue;
            }
            let Some((e1, e2, outgoing)) = self.find_clash(v) else {
                continue;
            };
            let (mut e1, mut e2) = (e1, e2);
            let far = |g: &Self, e: usize| {
                if outgoing {
                    g.edges[e].to
                } else {
                    g.edges[e].from
                }
            };
            if far(self, e2) == 0 {
                std::mem::swap(&mut e1, &mut e2);
            }
            let w1 = far(self, e1);
            let w2 = far(self, e2);
            if w1 != w2 {
                let p1 = self.edges[e1].label.clone();
                let p2 = self.edges[e2].label.clone();
                let c = if outgoing {
                    p1.inverse().concat(&p2)
                } else {
                    p1.concat(&p2.inverse())
                };
                self.gauge(w2, &c);
                debug_assert_eq!(self.edges[e1].label, self.edges[e2].label);
                self.kill_edge(e2);
                self.merge(w1, w2);
                work.push(w1);
            } else {
                self.kill_edge(e2);
            }
            work.push(if self.alive[v] { v } else { w1 });
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v]
            .iter()
            .map(|&e| {
                let edge = &self.edges[e];
                if edge.from == edge.to {
                    2
                } else {
                    1
                }
            })
            .sum()
    }

    /// Removes hanging trees away from the base.
    fn core(&mut self) {
        let mut work: Vec<usize> = (1..self.adj.len()).filter(|&v| self.alive[v]).collect();
        while let Some(v) = work.pop() {
            if v == 0 || !self.alive[v] || self.degree(v) > 1 {
                continue;
            }
            let incident = self.adj[v].clone();
            for e in incident {
                let other = if self.edges[e].from == v {
                    self.edges[e].to
                } else {
                    self.edges[e].from
                };
                self.kill_edge(e);
                work.push(other);
            }
            self.alive[v] = false;
        }
    }

    /// Relabels the component of the base in BFS order and reads off the
    /// spanning-tree basis.
    fn canonical(&self, with_labels: bool) -> (Automaton, FreeBasisData) {
        let n = self.n;
        let letter_edge = |v: usize, l: i32| -> Option<usize> {
            self.adj[v].iter().copied().find(|&e| {
                let edge = &self.edges[e];
                edge.alive
                    && edge.letter == l.abs()
                    && if l > 0 { edge.from == v } else { edge.to == v }
            })
        };
        let mut order = vec![usize::MAX; self.adj.len()];
        let mut visit = vec![0usize];
        order[0] = 0;
        let mut head = 0;
        while head < visit.len() {
            let v = visit[head];
            head += 1;
            for a in 1..=n as i32 {
                for l in [a, -a] {
                    if let Some(e) = letter_edge(v, l) {
                        let edge = &self.edges[e];
                        let w = if l > 0 { edge.to } else { edge.from };
                        if order[w] == usize::MAX {
                            order[w] = visit.len();
                            visit.push(w);
                        }
                    }
                }
            }
        }
        let states = visit.len();
        let mut edges: Vec<(usize, i32, usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.alive && order[e.from] != usize::MAX)
            .map(|(id, e)| (order[e.from], e.letter, order[e.to], id))
            .collect();
        edges.sort();
        let mut fwd = vec![vec![None; n]; states];
        let mut bwd = vec![vec![None; n]; states];
        for (i, &(f, l, t, _)) in edges.iter().enumerate() {
            fwd[f][l as usize - 1] = Some(i);
            bwd[t][l as usize - 1] = Some(i);
        }
        let automaton = Automaton {
            rank: n,
            states,
            edges: edges.iter().map(|&(f, l, t, _)| (f, l, t)).collect(),
            fwd,
            bwd,
        };
        let labels: Option<Vec<Word>> = with_labels.then(|| {
            edges
                .iter()
                .map(|&(.., id)| self.edges[id].label.clone())
                .collect()
        });
        let data = bfs_basis(&automaton, labels.as_deref());
        (automaton, data)
    }
}

/// BFS spanning tree from the base; non-tree edges in discovery order give
/// the basis `T(from)·a·T(to)⁻¹`.
fn bfs_basis(a: &Automaton, labels: Option<&[Word]>) -> FreeBasisData {
    let states = a.states;
    let mut tree: Vec<Option<Word>> = vec![None; states];
    let mut path: Vec<Word> = vec![Word::identity(); states];
    let mut tree_edge = vec![false; a.edges.len()];
    let mut edge_basis = vec![None; a.edges.len()];
    let mut basis_words = Vec::new();
    let mut exprs = Vec::new();
    tree[0] = Some(Word::identity());
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for l in (1..=a.rank as i32).flat_map(|x| [x, -x]) {
            let Some((e, forward)) = a.step_edge(v, l) else {
                continue;
            };
            let (s, letter, t) = a.edges[e];
            let w = if forward { t } else { s };
            if tree[w].is_none() {
                let tv = tree[v].as_ref().expect("visited");
                tree[w] = Some(tv.concat(&Word::letter(l)));
                if let Some(labels) = labels {
                    let lab = if forward {
                        labels[e].clone()
                    } else {
                        labels[e].inverse()
                    };
                    path[w] = path[v].concat(&lab);
                }
                tree_edge[e] = true;
                queue.push_back(w);
            } else if !tree_edge[e] && edge_basis[e].is_none() {
                edge_basis[e] = Some(basis_words.len());
                let ts = tree[s].as_ref().expect("visited");
                let tt = tree[t].as_ref().expect("visited");
                basis_words.push(ts.concat(&Word::letter(letter)).concat(&tt.inverse()));
                let expr = match labels {
                    Some(labels) => path[s].concat(&labels[e]).concat(&path[t].inverse()),
                    None => Word::identity(),
                };
                exprs.push(expr);
            }
        }
    }
    FreeBasisData {
        basis_words,
        spanning_tree: tree.into_iter().map(|t| t.expect("connected")).collect(),
        generator_expressions: exprs,
        edge_basis,
    }
}

/// Finite coset graph of a normal finite-index subgroup and its tree basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierResult {
    /// Coset representatives; entry 0 is the identity.
    pub reps: Vec<Word>,
    /// `table[i][j]` is the coset of `reps[i]·v_{j+1}`.
    pub table: Vec<Vec<usize>>,
    pub basis: Vec<Word>,
}

impl SchreierResult {
    pub fn index(&self) -> usize {
        self.reps.len()
    }
}

/// Schreier basis of the subgroup `K` of the free group on `r` symbols
/// described by `in_subgroup`.
///
/// `K` must be normal of finite index; enumeration stops with
/// [`StallingsError::IndexCapExceeded`] after `cap` cosets.
pub fn schreier_basis<F>(
    r: usize,
    in_subgroup: F,
    cap: usize,
) -> Result<SchreierResult, StallingsError>
where
    F: Fn(&Word) -> bool,
{
    enumerate_cosets(
        r,
        cap,
        |w, reps| {
            reps.iter()
                .position(|z| in_subgroup(&w.concat(&z.inverse())))
        },
        |_| {},
    )
}

/// Like [`schreier_basis`], with cosets told apart by a key function
/// (`key(u) == key(w)` iff `K·u = K·w`).
pub fn schreier_basis_keyed<F, K>(
    r: usize,
    key: F,
    cap: usize,
) -> Result<SchreierResult, StallingsError>
where
    F: Fn(&Word) -> K,
    K: Hash + Eq,
{
    let keys: std::cell::RefCell<HashMap<K, usize>> = Default::default();
    enumerate_cosets(
        r,
        cap,
        |w, _| keys.borrow().get(&key(w)).copied(),
        |z| {
            let mut k = keys.borrow_mut();
            let next = k.len();
            k.insert(key(z), next);
        },
    )
}

fn enumerate_cosets<L, N>(
    r: usize,
    cap: usize,
    mut lookup: L,
    mut on_new: N,
) -> Result<SchreierResult, StallingsError>
where
    L: FnMut(&Word, &[Word]) -> Option<usize>,
    N: FnMut(&Word),
{
    let mut reps = vec![Word::identity()];
    on_new(&reps[0]);
    let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; r]];
    let mut tree: Vec<Vec<bool>> = vec![vec![false; r]];
    let mut head = 0;
    while head < reps.len() {
        let i = head;
        head += 1;
        for j in 0..r {
            let v = j as i32 + 1;
            for l in [v, -v] {
                if l > 0 && table[i][j].is_some() {
                    continue;
                }
                if l < 0 && table.iter().any(|row| row[j] == Some(i)) {
                    continue;
                }
                let w = reps[i].concat(&Word::letter(l));
                let target = match lookup(&w, &reps) {
                    Some(t) => t,
                    None => {
                        if reps.len() >= cap {
                            return Err(StallingsError::IndexCapExceeded { cap });
                        }
                        on_new(&w);
                        reps.push(w);
                        table.push(vec![None; r]);
                        tree.push(vec![false; r]);
                        let t = reps.len() - 1;
                        if l > 0 {
                            tree[i][j] = true;
                        } else {
                            tree[t][j] = true;
                        }
                        t
                    }
                };
                if l > 0 {
                    table[i][j] = Some(target);
                } else {
                    table[target][j] = Some(i);
                }
            }
        }
    }
    let table: Vec<Vec<usize>> = table
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|t| t.expect("coset table is complete"))
                .collect()
        })
        .collect();
    let mut basis = Vec::new();
    for (i, row) in table.iter().enumerate() {
        for (j, &t) in row.iter().enumerate() {
            if !tree[i][j] {
                basis.push(
                    reps[i]
                        .concat(&Word::letter(j as i32 + 1))
                        .concat(&reps[t].inverse()),
                );
            }
        }
    }
    Ok(SchreierResult { reps, table, basis })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    fn gens(ss: &[&str]) -> Vec<Word> {
        ss.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn fold_cycle_and_loop() {
        let (a, data) = fold(2, &gens(&["xxxx", "y"]));
        assert_eq!(a.num_states(), 4);
        assert_eq!(a.edges().len(), 5);
        assert_eq!(a.subgroup_rank(), 2);
        assert_eq!(data.rank(), 2);
        assert!(a.edges().contains(&(0, 2, 0)));
        assert!(a.accepts(&w("xxxxyXXXX")));
        assert!(!a.accepts(&w("xx")));
    }

    #[test]
    fn fold_duplicates() {
        let (a, data) = fold(2, &gens(&["x", "x"]));
        assert_eq!(a.num_states(), 1);
        assert_eq!(a.edges(), &[(0, 1, 0)]);
        assert_eq!(data.basis_words, vec![w("x")]);
    }

    #[test]
    fn fold_rank_two() {
        let (a, data) = fold(2, &gens(&["xy", "yx"]));
        assert_eq!(a.subgroup_rank(), 2);
        assert_eq!(data.rank(), 2);
    }

    #[test]
    fn expressions_round_trip() {
        let g = gens(&["xyX", "xxY", "yyxY", "Xyx"]);
        let (_, data) = fold(2, &g);
        for (u, e) in data.basis_words.iter().zip(&data.generator_expressions) {
            assert_eq!(&e.substitute(&g).unwrap(), u);
        }
    }

    #[test]
    fn rewrite_examples() {
        let (a, data) = fold(2, &gens(&["xx", "y"]));
        assert_eq!(data.basis_words, gens(&["xx", "y"]));
        let got = rewrite(&data, &a, &w("xxyxx")).unwrap();
        assert_eq!(got, Word::from_letters([1, 2, 1]));
        assert_eq!(rewrite(&data, &a, &w("x")), None);
        assert_eq!(
            rewrite(&data, &a, &Word::identity()),
            Some(Word::identity())
        );
    }

    #[test]
    fn pullback_examples() {
        let (a, _) = fold(2, &gens(&["xxxx", "y"]));
        let (b, _) = fold(2, &gens(&["xy", "yx"]));
        assert!(multi_pullback(&[&a, &b]).is_trivial());
        assert_eq!(multi_pullback(&[&a, &a]), a);

        let (c, _) = fold(2, &gens(&["xxxxyy", "xy"]));
        let (d, _) = fold(2, &gens(&["yxxxxyy", "yx"]));
        let p = multi_pullback(&[&c, &d]);
        assert!(p.accepts(&w("YYXXXyxxxxyy")));
        assert!(!p.is_trivial());
    }

    #[test]
    fn schreier_examples() {
        let even = |u: &Word| u.exponent_vector(2).0[1] % 2 == 0;
        let res = schreier_basis(2, even, 100).unwrap();
        assert_eq!(res.index(), 2);
        assert_eq!(res.basis, vec![w("x"), w("yxY"), w("yy")]);

        let res = schreier_basis(1, |_| true, 100).unwrap();
        assert_eq!(res.index(), 1);
        assert_eq!(res.basis, vec![Word::letter(1)]);

        let zero = |u: &Word| u.exponent_vector(2).0[1] == 0;
        assert_eq!(
            schreier_basis(2, zero, 50),
            Err(StallingsError::IndexCapExceeded { cap: 50 })
        );
    }

    #[test]
    fn keyed_matches_plain() {
        let key = |u: &Word| u.exponent_vector(2).0[0].rem_euclid(3);
        let test = |u: &Word| u.exponent_vector(2).0[0] % 3 == 0;
        let a = schreier_basis_keyed(2, key, 100).unwrap();
        let b = schreier_basis(2, test, 100).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis.len(), 1 + 3);
    }
}
