//! Labeled forests, their generators and matchings.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::{Error, Result};

/// Vertex masks are `u64`, so forests are capped at 64 vertices.
pub const MAX_VERTICES: usize = 64;

/// An acyclic simple graph on vertices `0..vertex_count`.
///
/// Edges are stored normalized (`u < v`) and sorted lexicographically; the
/// position of an edge in [`Forest::edges`] is its edge index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// A set of pairwise disjoint edges, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Wraps edges already normalized `u < v`; sorts them.
    pub(crate) fn from_edges(mut edges: Vec<(usize, usize)>) -> Matching {
        edges.sort_unstable();
        Matching { edges }
    }

    /// Bitmask of the vertices covered by the matching.
    pub fn vertex_mask(&self) -> u64 {
        self.edges.iter().fold(0, |m, &(u, v)| m | 1 << u | 1 << v)
    }
}

impl Forest {
    /// Builds a forest, rejecting self-loops, duplicate edges, cycles and
    /// out-of-range labels.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooLarge { got: vertex_count, max: MAX_VERTICES });
        }
        let mut parent: Vec<usize> = (0..vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut normalized = Vec::new();
        for (a, b) in edges {
            for label in [a, b] {
                if label >= vertex_count {
                    return Err(Error::LabelOutOfRange { label, vertex_count });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if normalized.contains(&(u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(Error::Cycle(u, v));
            }
            parent[ru] = rv;
            normalized.push((u, v));
        }
        normalized.sort_unstable();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Forest { vertex_count, edges: normalized, adjacency })
    }

    pub fn empty() -> Self {
        Forest { vertex_count: 0, edges: Vec::new(), adjacency: Vec::new() }
    }

    /// Path on `n` vertices (the `A_n` Dynkin diagram).
    pub fn path(n: usize) -> Result<Self> {
        Forest::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// One vertex of degree `n − 1` joined to `n − 1` leaves.
    pub fn star(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!("star needs n >= 2, got {n}")));
        }
        Forest::new(n, (1..n).map(|i| (0, i)))
    }

    /// Simply-laced Dynkin diagram `A_n` (n ≥ 1), `D_n` (n ≥ 4) or `E_n`
    /// (n ∈ {6, 7, 8}).
    ///
    /// `D_n` is the path `0 – 1 – … – (n−3)` with leaves `n−2` and `n−1`
    /// attached to vertex 0. `E_n` is the path `0 – … – (n−2)` with leaf
    /// `n−1` attached to vertex 2.
    pub fn dynkin(family: char, n: usize) -> Result<Self> {
        match family.to_ascii_uppercase() {
            'A' if n >= 1 => Forest::path(n),
            'D' if n >= 4 => {
                let path = (1..n - 2).map(|i| (i - 1, i));
                Forest::new(n, path.chain([(0, n - 2), (0, n - 1)]))
            }
            'E' if (6..=8).contains(&n) => {
                let path = (1..n - 1).map(|i| (i - 1, i));
                Forest::new(n, path.chain([(2, n - 1)]))
            }
            _ => Err(Error::InvalidFamily(format!("{family}{n}"))),
        }
    }

    /// Uniform random recursive tree on `n` vertices, randomly relabeled.
    pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        Forest::random_forest(n, 1.0, rng)
    }

    /// Random recursive tree in which each edge is kept with probability
    /// `keep`, then randomly relabeled.
    pub fn random_forest<R: Rng + ?Sized>(n: usize, keep: f64, rng: &mut R) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut edges = Vec::new();
        for i in 1..n {
            let j = rng.gen_range(0..i);
            if rng.gen_bool(keep.clamp(0.0, 1.0)) {
                edges.push((perm[i], perm[j]));
            }
        }
        Forest::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced forest on the vertices not in `removed`, relabeled to
    /// `0..` in the order of the surviving labels.
    pub fn remove_vertices(&self, removed: &[usize]) -> Forest {
        let mut new_label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for (v, slot) in new_label.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_label[u] != usize::MAX && new_label[v] != usize::MAX)
            .map(|&(u, v)| (new_label[u], new_label[v]));
        Forest::new(next, edges).expect("induced subgraph of a forest is a forest")
    }

    /// Subforest induced on `keep` (relabeled in the order given by `keep`
    /// after sorting).
    pub fn induced(&self, keep: &[usize]) -> Forest {
        let removed: Vec<usize> = (0..self.vertex_count).filter(|v| !keep.contains(v)).collect();
        self.remove_vertices(&removed)
    }

    /// Maps every vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Forest> {
        let n = self.vertex_count;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::NotAPermutation(n));
            }
            seen[p] = true;
        }
        Forest::new(n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// `self ⊔ other`, with `other`'s labels shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Forest) -> Result<Forest> {
        let shift = self.vertex_count;
        let edges = self.edges.iter().copied().chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Forest::new(shift + other.vertex_count, edges)
    }

    /// Lowest-labeled vertex of degree 1.
    pub fn first_leaf(&self) -> Option<usize> {
        (0..self.vertex_count).find(|&v| self.degree(v) == 1)
    }

    /// All matchings, the empty one included, in lexicographic order of
    /// their sorted edge lists.
    pub fn matchings(&self) -> Vec<Matching> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.extend_matchings(0, 0, &mut current, &mut out);
        out.sort();
        out
    }

    fn extend_matchings(&self, from: usize, used: u64, current: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        out.push(Matching { edges: current.clone() });
        for i in from..self.edges.len() {
            let (u, v) = self.edges[i];
            if used & (1 << u | 1 << v) == 0 {
                current.push((u, v));
                self.extend_matchings(i + 1, used | 1 << u | 1 << v, current, out);
                current.pop();
            }
        }
    }

    /// Number of matchings of each size `0..=V/2`.
    /// Computed by a tree DP, so it stays cheap where enumerating the
    /// matchings would not.
    pub fn matching_size_counts(&self) -> Vec<u64> {
        fn mul(a: &[u64], b: &[u64]) -> Vec<u64> {
            let mut out = vec![0u64; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        }
        fn add_shifted(acc: &mut Vec<u64>, p: &[u64]) {
            if acc.len() < p.len() + 1 {
                acc.resize(p.len() + 1, 0);
            }
            for (k, c) in p.iter().enumerate() {
                acc[k + 1] += c;
            }
        }
        let mut total = vec![1u64];
        let mut seen = vec![false; self.vertex_count];
        for root in 0..self.vertex_count {
            if seen[root] {
                continue;
            }
            // DFS preorder, then fold children into parents in reverse.
            let mut order = Vec::new();
            let mut parent = vec![usize::MAX; self.vertex_count];
            let mut stack = vec![root];
            seen[root] = true;
            while let Some(v) = stack.pop() {
                order.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = v;
                        stack.push(w);
                    }
                }
            }
            // free[v]: matchings of the subtree with v unmatched; all[v]: any.
            let mut free: Vec<Vec<u64>> = vec![vec![1]; self.vertex_count];
            let mut all: Vec<Vec<u64>> = vec![vec![1]; self.vertex_count];
            for &v in order.iter().rev() {
                let children: Vec<usize> = self.adjacency[v].iter().copied().filter(|&w| parent[w] == v).collect();
                let mut f = vec![1u64];
                for &c in &children {
                    f = mul(&f, &all[c]);
                }
                let mut a = f.clone();
                for &c in &children {
                    let mut rest = free[c].clone();
                    for &d in children.iter().filter(|&&d| d != c) {
                        rest = mul(&rest, &all[d]);
                    }
                    add_shifted(&mut a, &rest);
                }
                free[v] = f;
                all[v] = a;
            }
            total = mul(&total, &all[root]);
        }
        total.resize(self.vertex_count / 2 + 1, 0);
        total
    }

    /// The perfect matching, if any. In a forest it is unique: the edge at a
    /// leaf is forced, so repeatedly peel leaves together with their
    /// neighbors.
    pub fn perfect_matching(&self) -> Option<Matching> {
        let n = self.vertex_count;
        let mut alive = vec![true; n];
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut edges = Vec::new();
        let mut remaining = n;
        while remaining > 0 {
            let v = (0..n).find(|&v| alive[v] && degree[v] <= 1)?;
            if degree[v] == 0 {
                return None;
            }
            let w = *self.adjacency[v].iter().find(|&&w| alive[w])?;
            for x in [v, w] {
                alive[x] = false;
                for &y in &self.adjacency[x] {
                    if alive[y] {
                        degree[y] -= 1;
                    }
                }
            }
            remaining -= 2;
            edges.push((v.min(w), v.max(w)));
        }
        edges.sort_unstable();
        Some(Matching { edges })
    }

    /// Serializes in the line format accepted by [`Forest::from_str`].
    pub fn to_text(&self) -> String {
        let mut s = format!("v {}\n", self.vertex_count);
        for &(u, v) in &self.edges {
            s.push_str(&format!("e {u} {v}\n"));
        }
        s
    }

    /// Parses either a named shorthand (`dynkin:E8`, `star:6`, `path:9`,
    /// `random:V:SEED`) or the line format.
    pub fn parse_source(source: &str) -> Result<Forest> {
        match Forest::from_shorthand(source.trim()) {
            Some(result) => result,
            None => source.parse(),
        }
    }

    /// Recognizes a named shorthand; `None` if `name` is not one.
    pub fn from_shorthand(name: &str) -> Option<Result<Forest>> {
        let bad = || Error::InvalidFamily(name.to_string());
        let number = |s: &str| s.parse::<usize>().map_err(|_| bad());
        if let Some(rest) = name.strip_prefix("dynkin:") {
            let mut chars = rest.chars();
            let family = chars.next();
            return Some(match family {
                Some(f) => number(chars.as_str()).and_then(|n| Forest::dynkin(f, n)),
                None => Err(bad()),
            });
        }
        if let Some(rest) = name.strip_prefix("star:") {
            return Some(number(rest).and_then(Forest::star));
        }
        if let Some(rest) = name.strip_prefix("path:") {
            return Some(number(rest).and_then(|n| if n == 0 { Err(bad()) } else { Forest::path(n) }));
        }
        if let Some(rest) = name.strip_prefix("random:") {
            use rand::SeedableRng;
            let parsed = rest
                .split_once(':')
                .ok_or_else(bad)
                .and_then(|(n, seed)| Ok((number(n)?, seed.parse::<u64>().map_err(|_| bad())?)));
            return Some(parsed.and_then(|(n, seed)| {
                let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
                Forest::random_tree(n, &mut rng)
            }));
        }
        None
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(text: &str) -> Result<Forest> {
        let mut vertex_count = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: &str| Error::Syntax { line: lineno, message: message.to_string() };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse =
                |s: &str| s.parse::<usize>().map_err(|_| syntax(&format!("expected a nonnegative integer, got {s:?}")));
            match fields.as_slice() {
                ["v", n] => {
                    if vertex_count.is_some() {
                        return Err(syntax("duplicate \"v\" line"));
                    }
                    vertex_count = Some(parse(n)?);
                }
                ["e", u, v] => {
                    if vertex_count.is_none() {
                        return Err(syntax("\"e\" line before \"v\" line"));
                    }
                    edges.push((parse(u)?, parse(v)?));
                }
                _ => return Err(syntax(&format!("unrecognized line {line:?}"))),
            }
        }
        let vertex_count = vertex_count.ok_or(Error::Syntax { line: 0, message: "missing \"v\" line".into() })?;
        Forest::new(vertex_count, edges)
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest(V={}, edges={:?})", self.vertex_count, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_matchings(f: &Forest) -> Vec<Vec<(usize, usize)>> {
        let m = f.edge_count();
        let mut out = Vec::new();
        for subset in 0u64..1 << m {
            let chosen: Vec<(usize, usize)> = (0..m).filter(|i| subset >> i & 1 == 1).map(|i| f.edges()[i]).collect();
            let mut covered = 0u64;
            let disjoint = chosen.iter().all(|&(u, v)| {
                let ok = covered & (1 << u | 1 << v) == 0;
                covered |= 1 << u | 1 << v;
                ok
            });
            if disjoint {
                out.push(chosen);
            }
        }
        out.sort();
        out
    }

    fn isomorphic(a: &Forest, b: &Forest) -> bool {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        a.vertex_count() == b.vertex_count()
            && a.edge_count() == b.edge_count()
            && permutations(a.vertex_count()).iter().any(|p| a.relabel(p).unwrap() == *b)
    }

    #[test]
    fn parses_line_format() {
        let f: Forest = "v 2\ne 0 1".parse().unwrap();
        assert_eq!(f.vertex_count(), 2);
        assert_eq!(f.edges(), &[(0, 1)]);
        let single: Forest = "# comment\nv 1\n".parse().unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert!(single.edges().is_empty());
    }

    #[test]
    fn parse_errors() {
        assert_eq!("v 3\ne 0 1\ne 1 2\ne 2 0".parse::<Forest>(), Err(Error::Cycle(0, 2)));
        assert!(matches!("v 2\ne 0 2".parse::<Forest>(), Err(Error::LabelOutOfRange { label: 2, .. })));
        assert_eq!("v 2\ne 0 1\ne 1 0".parse::<Forest>(), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!("e 0 1\nv 2".parse::<Forest>(), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!("v x".parse::<Forest>(), Err(Error::Syntax { .. })));
        assert!(matches!("".parse::<Forest>(), Err(Error::Syntax { .. })));
    }

    #[test]
    fn shorthand() {
        assert_eq!(Forest::parse_source("path:9").unwrap(), Forest::dynkin('A', 9).unwrap());
        assert_eq!(Forest::parse_source("dynkin:E8").unwrap().vertex_count(), 8);
        assert_eq!(Forest::parse_source("star:6").unwrap().degree(0), 5);
        assert!(Forest::parse_source("dynkin:E9").is_err());
        assert!(Forest::parse_source("star:x").is_err());
        let a = Forest::parse_source("random:10:7").unwrap();
        assert_eq!(a, Forest::parse_source("random:10:7").unwrap());
        assert_eq!(a.edge_count(), 9);
    }

    #[test]
    fn dynkin_shapes() {
        let a2 = Forest::dynkin('A', 2).unwrap();
        assert_eq!(a2.edge_count(), 1);
        let d4 = Forest::dynkin('D', 4).unwrap();
        assert_eq!(d4.degree_sequence(), vec![1, 1, 1, 3]);
        for n in 4..=10 {
            let d = Forest::dynkin('D', n).unwrap();
            assert!(d.is_connected());
            let mut expected = vec![1, 1, 1];
            expected.extend(std::iter::repeat_n(2, n - 4));
            expected.push(3);
            assert_eq!(d.degree_sequence(), expected);
        }
        for n in 6..=8 {
            let e = Forest::dynkin('E', n).unwrap();
            assert!(e.is_connected());
            assert_eq!(e.edge_count(), n - 1);
            // throwing away the D4 (branch vertex and its neighbors) leaves A1 ⊔ A_{n-5}
            let center = (0..n).find(|&v| e.degree(v) == 3).unwrap();
            let mut removed = vec![center];
            removed.extend_from_slice(e.neighbors(center));
            let rest = e.remove_vertices(&removed);
            let mut sizes: Vec<usize> = rest.components().iter().map(Vec::len).collect();
            sizes.sort_unstable();
            let mut expected = vec![1, n - 5];
            expected.sort_unstable();
            assert_eq!(sizes, expected);
            assert_eq!(rest.edge_count(), n - 6);
        }
        let e6 = Forest::dynkin('E', 6).unwrap();
        assert_eq!(e6.remove_vertices(&[1, 2, 3, 5]).edge_count(), 0);
        assert!(Forest::dynkin('D', 3).is_err());
        assert!(Forest::dynkin('E', 9).is_err());
        assert!(Forest::dynkin('A', 0).is_err());
        assert!(Forest::dynkin('B', 3).is_err());
    }

    #[test]
    fn stars() {
        assert!(isomorphic(&Forest::star(2).unwrap(), &Forest::dynkin('A', 2).unwrap()));
        assert!(isomorphic(&Forest::star(3).unwrap(), &Forest::dynkin('A', 3).unwrap()));
        assert!(isomorphic(&Forest::star(4).unwrap(), &Forest::dynkin('D', 4).unwrap()));
        assert!(Forest::star(1).is_err());
    }

    #[test]
    fn vertex_removal() {
        let a3 = Forest::path(3).unwrap();
        assert_eq!(a3.remove_vertices(&[0]), Forest::path(2).unwrap());
        assert_eq!(a3.remove_vertices(&[0, 1]), Forest::path(1).unwrap());
        assert_eq!(a3.remove_vertices(&[0, 1, 2]), Forest::empty());
        // relative order preserved
        let d4 = Forest::dynkin('D', 4).unwrap();
        assert_eq!(d4.remove_vertices(&[2]).edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn relabeling() {
        let a3 = Forest::path(3).unwrap();
        assert_eq!(a3.relabel(&[0, 1, 2]).unwrap(), a3);
        assert_eq!(a3.relabel(&[2, 1, 0]).unwrap(), a3);
        let a2 = Forest::path(2).unwrap();
        assert_eq!(a2.relabel(&[1, 0]).unwrap(), a2);
        assert_eq!(a3.relabel(&[0, 0, 1]), Err(Error::NotAPermutation(3)));
        assert_eq!(a3.relabel(&[0, 1]), Err(Error::NotAPermutation(3)));
    }

    #[test]
    fn matching_enumeration() {
        let a2 = Forest::path(2).unwrap();
        let m = a2.matchings();
        assert_eq!(m.len(), 2);
        assert!(m[0].is_empty());
        assert_eq!(m[1].edges(), &[(0, 1)]);
        assert_eq!(Forest::dynkin('D', 4).unwrap().matchings().len(), 4);
        assert_eq!(Forest::path(4).unwrap().matchings().len(), 5);
        for f in [Forest::path(7).unwrap(), Forest::dynkin('E', 8).unwrap(), Forest::star(6).unwrap()] {
            let ours: Vec<Vec<(usize, usize)>> = f.matchings().iter().map(|m| m.edges().to_vec()).collect();
            assert_eq!(ours, brute_force_matchings(&f));
        }
        assert_eq!(Forest::empty().matchings().len(), 1);
    }

    #[test]
    fn perfect_matchings() {
        assert_eq!(Forest::path(2).unwrap().perfect_matching().unwrap().edges(), &[(0, 1)]);
        assert!(Forest::path(3).unwrap().perfect_matching().is_none());
        assert!(Forest::dynkin('D', 4).unwrap().perfect_matching().is_none());
        assert!(Forest::dynkin('E', 8).unwrap().perfect_matching().is_some());
        assert!(Forest::dynkin('E', 7).unwrap().perfect_matching().is_none());
        assert_eq!(Forest::empty().perfect_matching(), Some(Matching::default()));
    }

    #[test]
    fn text_round_trip() {
        let e7 = Forest::dynkin('E', 7).unwrap();
        assert_eq!(e7.to_text().parse::<Forest>().unwrap(), e7);
    }
}
