//! Stallings graphs of finitely generated subgroups of a free group.
//!
//! A subgroup `⟨w₁, …, w_m⟩` is first drawn as a bouquet of labelled loops at
//! a base vertex, one loop per generator. Folding identifies equally labelled
//! edges that share an endpoint until the labelling is deterministic in both
//! directions; trimming then removes hanging trees. The resulting core graph
//! is a canonical representative of the subgroup: a reduced word lies in the
//! subgroup iff it reads a closed path at the base, and the rank of the
//! subgroup is `E − V + 1`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::words::{Alphabet, Letter, Word};
use crate::{Error, Result};

/// A directed edge read as `label` from `source` to `target`, and as
/// `label⁻¹` from `target` to `source`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupGraph {
    alphabet: Alphabet,
    vertex_count: usize,
    edges: Vec<Edge>,
    base: usize,
    folded: bool,
}

impl SubgroupGraph {
    pub fn new(alphabet: Alphabet, vertex_count: usize, edges: Vec<Edge>, base: usize) -> Result<Self> {
        if base >= vertex_count {
            return Err(Error::GeneratorOutOfRange {
                index: base,
                rank: vertex_count,
            });
        }
        for e in &edges {
            if e.label >= alphabet.rank() {
                return Err(Error::GeneratorOutOfRange {
                    index: e.label,
                    rank: alphabet.rank(),
                });
            }
            let v = e.source.max(e.target);
            if v >= vertex_count {
                return Err(Error::GeneratorOutOfRange {
                    index: v,
                    rank: vertex_count,
                });
            }
        }
        Ok(SubgroupGraph {
            alphabet,
            vertex_count,
            edges,
            base,
            folded: false,
        })
    }

    /// One loop per nontrivial generator, all based at vertex 0.
    pub fn bouquet(alphabet: &Alphabet, gens: &[Word]) -> Result<Self> {
        let mut vertex_count = 1;
        let mut edges = Vec::new();
        for word in gens {
            alphabet.check(word)?;
            let n = word.len();
            for (i, letter) in word.letters().iter().enumerate() {
                let from = if i == 0 { 0 } else { vertex_count + i - 1 };
                let to = if i + 1 == n { 0 } else { vertex_count + i };
                edges.push(oriented(from, to, *letter));
            }
            vertex_count += n.saturating_sub(1);
        }
        Ok(SubgroupGraph {
            alphabet: alphabet.clone(),
            vertex_count,
            edges,
            base: 0,
            folded: false,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn is_folded(&self) -> bool {
        self.folded
    }

    /// First Betti number `E − V + 1` of a connected graph.
    pub fn rank(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertex_count)
    }

    /// No vertex has two outgoing or two incoming edges with the same label.
    pub fn is_deterministic(&self) -> bool {
        let mut seen = BTreeMap::new();
        self.edges.iter().all(|e| {
            seen.insert((e.source, e.label, true), ()).is_none()
                && seen.insert((e.target, e.label, false), ()).is_none()
        })
    }

    /// Folds until deterministic. Only the component of the base survives,
    /// renumbered breadth-first from the base (which becomes vertex 0).
    pub fn fold(&self) -> SubgroupGraph {
        let mut folder = Folder::new(self.vertex_count);
        for e in &self.edges {
            folder.add_edge(e.source, e.target, e.label);
        }
        let mut edges = Vec::new();
        for v in 0..self.vertex_count {
            if folder.find(v) != v {
                continue;
            }
            let forward: Vec<(usize, usize)> = folder.adj[v]
                .iter()
                .filter(|((_, fwd), _)| *fwd)
                .map(|(&(label, _), &t)| (label, t))
                .collect();
            for (label, t) in forward {
                let target = folder.find(t);
                edges.push(Edge {
                    source: v,
                    target,
                    label,
                });
            }
        }
        let base = folder.find(self.base);
        relabel(&self.alphabet, self.vertex_count, &edges, base, true)
    }

    /// Iteratively deletes non-base vertices of degree at most one.
    pub fn trim(&self) -> SubgroupGraph {
        let mut degree = alloc::vec![0usize; self.vertex_count];
        let mut incident: Vec<Vec<usize>> = alloc::vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            degree[e.source] += 1;
            degree[e.target] += 1;
            incident[e.source].push(i);
            if e.target != e.source {
                incident[e.target].push(i);
            }
        }
        let mut alive_edge = alloc::vec![true; self.edges.len()];
        let mut alive_vertex = alloc::vec![true; self.vertex_count];
        let mut queue: Vec<usize> = (0..self.vertex_count)
            .filter(|&v| v != self.base && degree[v] <= 1)
            .collect();
        while let Some(v) = queue.pop() {
            if !alive_vertex[v] {
                continue;
            }
            alive_vertex[v] = false;
            for &i in &incident[v] {
                if !alive_edge[i] {
                    continue;
                }
                alive_edge[i] = false;
                let e = self.edges[i];
                let other = if e.source == v { e.target } else { e.source };
                degree[other] -= 1;
                if other != self.base && alive_vertex[other] && degree[other] <= 1 {
                    queue.push(other);
                }
            }
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .zip(&alive_edge)
            .filter(|(_, &alive)| alive)
            .map(|(e, _)| *e)
            .collect();
        relabel(&self.alphabet, self.vertex_count, &edges, self.base, self.folded)
    }
}

fn oriented(from: usize, to: usize, letter: Letter) -> Edge {
    if letter.inverted {
        Edge {
            source: to,
            target: from,
            label: letter.generator,
        }
    } else {
        Edge {
            source: from,
            target: to,
            label: letter.generator,
        }
    }
}

/// Keeps the base component and renumbers it breadth-first from the base,
/// visiting neighbours by label, outgoing before incoming. On a folded graph
/// this numbering is canonical.
fn relabel(alphabet: &Alphabet, vertex_count: usize, edges: &[Edge], base: usize, folded: bool) -> SubgroupGraph {
    let mut adj: Vec<Vec<(usize, bool, usize)>> = alloc::vec![Vec::new(); vertex_count];
    for e in edges {
        adj[e.source].push((e.label, false, e.target));
        adj[e.target].push((e.label, true, e.source));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut new_id = alloc::vec![usize::MAX; vertex_count];
    new_id[base] = 0;
    let mut next = 1;
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        for &(_, _, u) in &adj[v] {
            if new_id[u] == usize::MAX {
                new_id[u] = next;
                next += 1;
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<Edge> = edges
        .iter()
        .filter(|e| new_id[e.source] != usize::MAX)
        .map(|e| Edge {
            source: new_id[e.source],
            target: new_id[e.target],
            label: e.label,
        })
        .collect();
    out.sort_unstable_by_key(|e| (e.source, e.label, e.target));
    SubgroupGraph {
        alphabet: alphabet.clone(),
        vertex_count: next,
        edges: out,
        base: 0,
        folded,
    }
}

/// Union–find over vertices; each class keeps one neighbour per
/// (label, direction). A second neighbour under the same key schedules a
/// merge of the two neighbours.
struct Folder {
    parent: Vec<usize>,
    size: Vec<usize>,
    adj: Vec<BTreeMap<(usize, bool), usize>>,
    pending: Vec<(usize, usize)>,
}

impl Folder {
    fn new(n: usize) -> Self {
        Folder {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
            adj: alloc::vec![BTreeMap::new(); n],
            pending: Vec::new(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn insert(&mut self, v: usize, key: (usize, bool), target: usize) {
        let v = self.find(v);
        match self.adj[v].get(&key) {
            Some(&existing) => self.pending.push((existing, target)),
            None => {
                self.adj[v].insert(key, target);
            }
        }
    }

    fn add_edge(&mut self, source: usize, target: usize, label: usize) {
        self.insert(source, (label, true), target);
        self.insert(target, (label, false), source);
        self.drain();
    }

    fn drain(&mut self) {
        while let Some((a, b)) = self.pending.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (big, small) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
            self.parent[small] = big;
            self.size[big] += self.size[small];
            let moved = core::mem::take(&mut self.adj[small]);
            for (key, t) in moved {
                self.insert(big, key, t);
            }
        }
    }
}

const NONE: usize = usize::MAX;

/// A finitely generated subgroup, stored as its folded core graph together
/// with the generating words it was built from.
#[derive(Debug, Clone)]
pub struct SubgroupHandle {
    graph: SubgroupGraph,
    generators: Vec<Word>,
    /// `outgoing[v * rank + g]`: target of the `g`-edge leaving `v`, or `NONE`.
    outgoing: Vec<usize>,
    incoming: Vec<usize>,
}

impl SubgroupHandle {
    /// Bouquet, fold, trim.
    pub fn from_words(alphabet: &Alphabet, gens: &[Word]) -> Result<Self> {
        let graph = SubgroupGraph::bouquet(alphabet, gens)?.fold().trim();
        let rank = alphabet.rank();
        let mut outgoing = alloc::vec![NONE; graph.vertex_count * rank];
        let mut incoming = alloc::vec![NONE; graph.vertex_count * rank];
        for e in &graph.edges {
            outgoing[e.source * rank + e.label] = e.target;
            incoming[e.target * rank + e.label] = e.source;
        }
        Ok(SubgroupHandle {
            graph,
            generators: gens.to_vec(),
            outgoing,
            incoming,
        })
    }

    pub fn graph(&self) -> &SubgroupGraph {
        &self.graph
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.graph.alphabet
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    /// The vertex reached from `v` by reading `letter`, if any.
    pub fn step(&self, v: usize, letter: Letter) -> Option<usize> {
        let k = self.alphabet().rank();
        let table = if letter.inverted { &self.incoming } else { &self.outgoing };
        match table[v * k + letter.generator] {
            NONE => None,
            u => Some(u),
        }
    }

    /// Membership by reading `w` from the base.
    pub fn contains(&self, w: &Word) -> Result<bool> {
        self.alphabet().check(w)?;
        let mut v = self.graph.base;
        for &letter in w.letters() {
            match self.step(v, letter) {
                Some(u) => v = u,
                None => return Ok(false),
            }
        }
        Ok(v == self.graph.base)
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> Result<bool> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Equality of subgroups, decided by walking both core graphs in lockstep
/// from their bases.
pub fn subgroup_equal(a: &SubgroupHandle, b: &SubgroupHandle) -> Result<bool> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let n = a.graph.vertex_count;
    if n != b.graph.vertex_count || a.graph.edges.len() != b.graph.edges.len() {
        return Ok(false);
    }
    let k = a.alphabet().rank();
    let mut map = alloc::vec![NONE; n];
    let mut used = alloc::vec![false; n];
    map[a.graph.base] = b.graph.base;
    used[b.graph.base] = true;
    let mut queue = VecDeque::from([a.graph.base]);
    while let Some(v) = queue.pop_front() {
        let w = map[v];
        for g in 0..k {
            for letter in [Letter::pos(g), Letter::neg(g)] {
                match (a.step(v, letter), b.step(w, letter)) {
                    (None, None) => {}
                    (Some(v2), Some(w2)) => {
                        if map[v2] == NONE {
                            if used[w2] {
                                return Ok(false);
                            }
                            map[v2] = w2;
                            used[w2] = true;
                            queue.push_back(v2);
                        } else if map[v2] != w2 {
                            return Ok(false);
                        }
                    }
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}
