//! Simplified Whitehead graphs with articulation-point and Hamiltonicity
//! analysis, Whitehead automorphisms (relabelings and multiplier moves),
//! cyclic-length minimization, and the primitivity decision procedure.

use std::collections::BTreeSet;
use std::fmt;

use crate::autos::{Automorphism, ElementaryAut};
use crate::words::{reduce_push, Letter, Rank, Sign, Word, WordError};

/// Largest rank the default Hamiltonicity search accepts (12 vertices).
pub const HAMILTONIAN_RANK_BUDGET: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WhiteheadError {
    RankMismatch { left: u32, right: u32 },
    RankBelowTwo { rank: u32 },
    RankBudgetExceeded { rank: u32, limit: u32 },
    PermutationInvalid,
    MultiplierMissing,
    MultiplierInverseInSet,
    NotPrimitive,
    Internal(&'static str),
    Word(WordError),
}

impl fmt::Display for WhiteheadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WhiteheadError::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            WhiteheadError::RankBelowTwo { rank } => {
                write!(f, "rank {rank} has too few vertices for a spanning cycle")
            }
            WhiteheadError::RankBudgetExceeded { rank, limit } => {
                write!(f, "rank {rank} exceeds the search budget (limit {limit})")
            }
            WhiteheadError::PermutationInvalid => {
                write!(f, "permutation data is not a bijection on the generators")
            }
            WhiteheadError::MultiplierMissing => {
                write!(f, "multiplier letter must belong to its own letter set")
            }
            WhiteheadError::MultiplierInverseInSet => {
                write!(f, "the multiplier's inverse may not belong to the letter set")
            }
            WhiteheadError::NotPrimitive => write!(f, "word is not primitive"),
            WhiteheadError::Internal(what) => write!(f, "internal invariant broken: {what}"),
            WhiteheadError::Word(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for WhiteheadError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            WhiteheadError::Word(e) => Some(e),
            _ => None,
        }
    }
}

impl From<WordError> for WhiteheadError {
    fn from(e: WordError) -> WhiteheadError {
        WhiteheadError::Word(e)
    }
}

fn vertex_of(l: Letter) -> usize {
    (2 * (l.gen() - 1)) as usize + usize::from(l.sign() == Sign::Minus)
}

fn letter_of(v: usize) -> Letter {
    let gen = (v / 2 + 1) as u32;
    let sign = if v.is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
    Letter::new(gen, sign).expect("vertex indices map to positive generators")
}

/// The simplified Whitehead graph of a reduced word: one vertex per letter
/// `x_i^{±1}`, and an edge `{a, b⁻¹}` for every length-2 subword `ab` of
/// the linear word. Simple graph; loops are impossible on reduced input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadGraph {
    rank: Rank,
    edges: BTreeSet<(usize, usize)>,
}

pub fn whitehead_graph(w: &Word) -> WhiteheadGraph {
    let mut edges = BTreeSet::new();
    for pair in w.letters().windows(2) {
        let u = vertex_of(pair[0]);
        let v = vertex_of(pair[1].inverse());
        debug_assert_ne!(u, v, "a loop would need an unreduced pair");
        edges.insert((u.min(v), u.max(v)));
    }
    WhiteheadGraph {
        rank: w.rank(),
        edges,
    }
}

impl WhiteheadGraph {
    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Vertices are indexed `0..2n` in letter order: `x1, x1⁻¹, x2, …`.
    pub fn vertex_count(&self) -> usize {
        2 * self.rank.get() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_of_letter(l: Letter) -> usize {
        vertex_of(l)
    }

    pub fn letter_of_vertex(&self, v: usize) -> Option<Letter> {
        (v < self.vertex_count()).then(|| letter_of(v))
    }

    pub fn has_edge(&self, a: Letter, b: Letter) -> bool {
        let (u, v) = (vertex_of(a), vertex_of(b));
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Edges as letter pairs, each pair and the list itself in letter order.
    pub fn edges_as_letters(&self) -> Vec<(Letter, Letter)> {
        self.edges
            .iter()
            .map(|&(a, b)| (letter_of(a), letter_of(b)))
            .collect()
    }

    /// Sorted adjacency lists over the `0..2n` vertex indexing.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|p| p[0] < p[1])));
        adj
    }

    /// No isolated vertices.
    pub fn is_spanning(&self) -> bool {
        let mut touched = vec![false; self.vertex_count()];
        for &(a, b) in &self.edges {
            touched[a] = true;
            touched[b] = true;
        }
        touched.into_iter().all(|t| t)
    }

    /// Connectivity over all `2n` vertices (so any isolated vertex makes a
    /// nonempty graph disconnected).
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let n = adj.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// True iff deleting some vertex (with its edges) strictly increases
    /// the number of connected components.
    pub fn has_cut_vertex(&self) -> bool {
        let adj = self.adjacency();
        let n = adj.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        (0..n).any(|s| {
            disc[s] == usize::MAX
                && articulation_dfs(&adj, s, usize::MAX, &mut disc, &mut low, &mut timer)
        })
    }

    /// Search for a spanning simple cycle; `None` means none exists. Ranks
    /// above [`HAMILTONIAN_RANK_BUDGET`] are refused here; use the
    /// unbudgeted variant to override.
    pub fn is_hamiltonian(&self) -> Result<Option<Vec<Letter>>, WhiteheadError> {
        if self.rank.get() > HAMILTONIAN_RANK_BUDGET {
            return Err(WhiteheadError::RankBudgetExceeded {
                rank: self.rank.get(),
                limit: HAMILTONIAN_RANK_BUDGET,
            });
        }
        self.is_hamiltonian_unbudgeted()
    }

    pub fn is_hamiltonian_unbudgeted(&self) -> Result<Option<Vec<Letter>>, WhiteheadError> {
        // A simple cycle needs at least 3 vertices, so rank 1 (two
        // vertices) can never carry one.
        if self.rank.get() < 2 {
            return Err(WhiteheadError::RankBelowTwo {
                rank: self.rank.get(),
            });
        }
        let adj = self.adjacency();
        let n = adj.len();
        if adj.iter().any(|nb| nb.len() < 2) || !self.is_connected() {
            return Ok(None);
        }
        let mut path = vec![0usize];
        let mut visited = vec![false; n];
        visited[0] = true;
        if extend_cycle(&adj, &mut path, &mut visited) {
            Ok(Some(path.into_iter().map(letter_of).collect()))
        } else {
            Ok(None)
        }
    }

    /// Edge-set inclusion of `self` in `other` (same rank required).
    pub fn subgraph_of(&self, other: &WhiteheadGraph) -> Result<bool, WhiteheadError> {
        if self.rank != other.rank {
            return Err(WhiteheadError::RankMismatch {
                left: self.rank.get(),
                right: other.rank.get(),
            });
        }
        Ok(self.edges.is_subset(&other.edges))
    }

    /// Check that `cycle` lists every vertex exactly once and that each
    /// consecutive pair (wrapping around) is an edge of this graph.
    pub fn validates_hamiltonian_cycle(&self, cycle: &[Letter]) -> bool {
        let n = self.vertex_count();
        if cycle.len() != n || n < 3 {
            return false;
        }
        if cycle.iter().any(|l| l.gen() > self.rank.get()) {
            return false;
        }
        let verts: Vec<usize> = cycle.iter().map(|&l| vertex_of(l)).collect();
        if verts.iter().collect::<BTreeSet<_>>().len() != n {
            return false;
        }
        (0..n).all(|i| {
            let (a, b) = (verts[i], verts[(i + 1) % n]);
            self.edges.contains(&(a.min(b), a.max(b)))
        })
    }
}

fn articulation_dfs(
    adj: &[Vec<usize>],
    u: usize,
    parent: usize,
    disc: &mut [usize],
    low: &mut [usize],
    timer: &mut usize,
) -> bool {
    disc[u] = *timer;
    low[u] = *timer;
    *timer += 1;
    let mut children = 0;
    let mut found = false;
    for &v in &adj[u] {
        if disc[v] == usize::MAX {
            children += 1;
            found |= articulation_dfs(adj, v, u, disc, low, timer);
            low[u] = low[u].min(low[v]);
            if parent != usize::MAX && low[v] >= disc[u] {
                found = true;
            }
        } else if v != parent {
            low[u] = low[u].min(disc[v]);
        }
    }
    if parent == usize::MAX && children > 1 {
        found = true;
    }
    found
}

fn extend_cycle(adj: &[Vec<usize>], path: &mut Vec<usize>, visited: &mut [bool]) -> bool {
    let cur = *path.last().expect("path starts nonempty");
    if path.len() == adj.len() {
        return adj[cur].binary_search(&0).is_ok();
    }
    for &next in &adj[cur] {
        if !visited[next] {
            visited[next] = true;
            path.push(next);
            if extend_cycle(adj, path, visited) {
                return true;
            }
            path.pop();
            visited[next] = false;
        }
    }
    false
}

/// The machine-checkable payload of a [`NonPrimCert`]: either an explicit
/// spanning cycle or the triple of graph facts it abbreviates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoConnectedWitness {
    HamiltonianCycle(Vec<Letter>),
    Report {
        spanning: bool,
        connected: bool,
        cut_vertex_free: bool,
    },
}

/// A sound certificate that a word is **not** primitive: the Whitehead
/// graph of its cyclic core touches every vertex, is connected, and has no
/// cut vertex.
///
/// The graph criterion is only valid for cyclically reduced words
/// (conjugating a primitive can make its linear graph 2-connected:
/// x1·(x1x2x1x2²)·x1⁻¹ is primitive yet its own graph is a spanning
/// 4-cycle plus a chord). Primitivity is a conjugacy invariant, so the
/// certificate reduces to the core and its verdict carries back to `word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonPrimCert {
    pub word: Word,
    pub witness: TwoConnectedWitness,
}

impl NonPrimCert {
    /// Recheck the stored witness against a freshly built graph of the
    /// cyclic core of the stored word.
    pub fn verify(&self) -> bool {
        let g = whitehead_graph(&cyclic_reduce(&self.word).0);
        match &self.witness {
            TwoConnectedWitness::HamiltonianCycle(cycle) => g.validates_hamiltonian_cycle(cycle),
            TwoConnectedWitness::Report {
                spanning,
                connected,
                cut_vertex_free,
            } => {
                *spanning
                    && *connected
                    && *cut_vertex_free
                    && g.is_spanning()
                    && g.is_connected()
                    && !g.has_cut_vertex()
            }
        }
    }
}

/// If the Whitehead graph of the word's cyclic core spans, is connected,
/// and has no cut vertex, package that as a certificate of
/// non-primitivity (with a Hamiltonian cycle when one is affordable to
/// find). `None` implies nothing about the word.
pub fn nonprimitivity_certificate(w: &Word) -> Option<NonPrimCert> {
    let g = whitehead_graph(&cyclic_reduce(w).0);
    if !g.is_spanning() || !g.is_connected() || g.has_cut_vertex() {
        return None;
    }
    let report = TwoConnectedWitness::Report {
        spanning: true,
        connected: true,
        cut_vertex_free: true,
    };
    let witness = match g.is_hamiltonian() {
        Ok(Some(cycle)) => TwoConnectedWitness::HamiltonianCycle(cycle),
        Ok(None) | Err(_) => report,
    };
    Some(NonPrimCert {
        word: w.clone(),
        witness,
    })
}

/// A Whitehead automorphism: either a relabeling (permute the generators
/// and invert a subset) or a multiplier move `(a, S)` with `a ∈ S`,
/// `a⁻¹ ∉ S`, sending each letter `ℓ ∉ {a, a⁻¹}` to `a^{-[ℓ⁻¹∈S]} ℓ a^{[ℓ∈S]}`
/// and fixing `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadAut {
    rank: Rank,
    kind: AutKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum AutKind {
    TypeI { perm: Vec<u32>, invert: Vec<bool> },
    TypeII { multiplier: Letter, set: BTreeSet<Letter> },
}

impl WhiteheadAut {
    /// Relabeling: `x_i ↦ x_{perm[i−1]}` inverted where `invert[i−1]`.
    pub fn type_i(rank: Rank, perm: Vec<u32>, invert: Vec<bool>) -> Result<WhiteheadAut, WhiteheadError> {
        let n = rank.get() as usize;
        if perm.len() != n || invert.len() != n {
            return Err(WhiteheadError::PermutationInvalid);
        }
        let mut seen = vec![false; n];
        for &img in &perm {
            if img == 0 || img as usize > n || seen[img as usize - 1] {
                return Err(WhiteheadError::PermutationInvalid);
            }
            seen[img as usize - 1] = true;
        }
        Ok(WhiteheadAut {
            rank,
            kind: AutKind::TypeI { perm, invert },
        })
    }

    pub fn type_ii(
        rank: Rank,
        multiplier: Letter,
        set: BTreeSet<Letter>,
    ) -> Result<WhiteheadAut, WhiteheadError> {
        for l in set.iter().chain([&multiplier]) {
            if l.gen() > rank.get() {
                return Err(WhiteheadError::Word(WordError::LetterOutOfRank {
                    gen: l.gen(),
                    rank: rank.get(),
                }));
            }
        }
        if !set.contains(&multiplier) {
            return Err(WhiteheadError::MultiplierMissing);
        }
        if set.contains(&multiplier.inverse()) {
            return Err(WhiteheadError::MultiplierInverseInSet);
        }
        Ok(WhiteheadAut {
            rank,
            kind: AutKind::TypeII { multiplier, set },
        })
    }

    pub fn identity(rank: Rank) -> WhiteheadAut {
        let n = rank.get() as usize;
        WhiteheadAut {
            rank,
            kind: AutKind::TypeI {
                perm: (1..=rank.get()).collect(),
                invert: vec![false; n],
            },
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_type_i(&self) -> bool {
        matches!(self.kind, AutKind::TypeI { .. })
    }

    pub fn is_type_ii(&self) -> bool {
        matches!(self.kind, AutKind::TypeII { .. })
    }

    pub fn apply(&self, w: &Word) -> Result<Word, WhiteheadError> {
        if w.rank() != self.rank {
            return Err(WhiteheadError::RankMismatch {
                left: self.rank.get(),
                right: w.rank().get(),
            });
        }
        match &self.kind {
            AutKind::TypeI { perm, invert } => {
                // Bijective on letters, so reducedness is preserved as is.
                let letters = w
                    .letters()
                    .iter()
                    .map(|l| {
                        let i = (l.gen() - 1) as usize;
                        let sign = if invert[i] { l.sign().flipped() } else { l.sign() };
                        Letter::new(perm[i], sign).expect("permutation images are valid generators")
                    })
                    .collect();
                Ok(Word::from_reduced_unchecked(self.rank, letters))
            }
            AutKind::TypeII { multiplier, set } => {
                let a = *multiplier;
                let mut out: Vec<Letter> = Vec::with_capacity(3 * w.len());
                for &l in w.letters() {
                    if l == a || l == a.inverse() {
                        reduce_push(&mut out, l);
                        continue;
                    }
                    if set.contains(&l.inverse()) {
                        reduce_push(&mut out, a.inverse());
                    }
                    reduce_push(&mut out, l);
                    if set.contains(&l) {
                        reduce_push(&mut out, a);
                    }
                }
                Ok(Word::from_reduced_unchecked(self.rank, out))
            }
        }
    }

    pub fn inverse(&self) -> WhiteheadAut {
        match &self.kind {
            AutKind::TypeI { perm, invert } => {
                let n = perm.len();
                let mut q = vec![0u32; n];
                let mut qi = vec![false; n];
                for i in 0..n {
                    q[perm[i] as usize - 1] = (i + 1) as u32;
                    qi[perm[i] as usize - 1] = invert[i];
                }
                WhiteheadAut {
                    rank: self.rank,
                    kind: AutKind::TypeI { perm: q, invert: qi },
                }
            }
            AutKind::TypeII { multiplier, set } => {
                let a = *multiplier;
                let mut s = set.clone();
                s.remove(&a);
                s.insert(a.inverse());
                WhiteheadAut {
                    rank: self.rank,
                    kind: AutKind::TypeII {
                        multiplier: a.inverse(),
                        set: s,
                    },
                }
            }
        }
    }
}

impl fmt::Display for WhiteheadAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AutKind::TypeI { perm, invert } => {
                write!(f, "I(")?;
                for i in 0..perm.len() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    let sign = if invert[i] { Sign::Minus } else { Sign::Plus };
                    let img = Letter::new(perm[i], sign).expect("valid permutation image");
                    write!(f, "x{}->{img}", i + 1)?;
                }
                write!(f, ")")
            }
            AutKind::TypeII { multiplier, set } => {
                write!(f, "II({multiplier} | {{")?;
                for (i, l) in set.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{l}")?;
                }
                write!(f, "}})")
            }
        }
    }
}

fn all_letters(rank: Rank) -> Vec<Letter> {
    (1..=rank.get())
        .flat_map(|g| {
            [
                Letter::new(g, Sign::Plus).expect("positive generator index"),
                Letter::new(g, Sign::Minus).expect("positive generator index"),
            ]
        })
        .collect()
}

fn next_permutation(p: &mut [u32]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every Whitehead automorphism of the given rank, in a fixed order: all
/// `n!·2ⁿ` relabelings first (permutations lexicographic, inversion masks
/// ascending, so the identity leads), then the multiplier moves by
/// multiplier in letter order and letter-set mask ascending. The trivial
/// multiplier move `S = {a}` is skipped; the count of multiplier moves is
/// `2n·(2^{2n−2} − 1)`.
pub fn enumerate_whitehead_autos(rank: Rank) -> Vec<WhiteheadAut> {
    let n = rank.get() as usize;
    let mut out = Vec::new();
    let mut perm: Vec<u32> = (1..=rank.get()).collect();
    loop {
        for mask in 0u64..1 << n {
            let invert: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            out.push(WhiteheadAut {
                rank,
                kind: AutKind::TypeI {
                    perm: perm.clone(),
                    invert,
                },
            });
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let all = all_letters(rank);
    for &a in &all {
        let others: Vec<Letter> = all
            .iter()
            .copied()
            .filter(|&l| l != a && l != a.inverse())
            .collect();
        for mask in 1u64..1 << others.len() {
            let mut set: BTreeSet<Letter> = BTreeSet::new();
            set.insert(a);
            for (j, &l) in others.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    set.insert(l);
                }
            }
            out.push(WhiteheadAut {
                rank,
                kind: AutKind::TypeII { multiplier: a, set },
            });
        }
    }
    out
}

/// Split `w` as `conjugator · core · conjugator⁻¹` with the core
/// cyclically reduced, by peeling matched end pairs.
pub fn cyclic_reduce(w: &Word) -> (Word, Word) {
    let letters = w.letters();
    let mut i = 0;
    let mut j = letters.len();
    while j - i >= 2 && letters[i].is_inverse_of(letters[j - 1]) {
        i += 1;
        j -= 1;
    }
    let core = Word::from_reduced_unchecked(w.rank(), letters[i..j].to_vec());
    let conjugator = Word::from_reduced_unchecked(w.rank(), letters[..i].to_vec());
    (core, conjugator)
}

/// Greedy descent on cyclic length: while some Whitehead automorphism
/// strictly shortens the cyclic core, apply the best one (first in
/// enumeration order on ties). Returns the final word — the exact result
/// of replaying the trace on the input — whose cyclic core has minimal
/// length in the automorphism orbit.
pub fn minimize(w: &Word) -> (Word, Vec<WhiteheadAut>) {
    let autos = enumerate_whitehead_autos(w.rank());
    let mut cur = w.clone();
    let mut trace = Vec::new();
    loop {
        let cur_len = cyclic_reduce(&cur).0.len();
        if cur_len == 0 {
            break;
        }
        let mut best: Option<(usize, usize, Word)> = None;
        for (i, aut) in autos.iter().enumerate() {
            let img = aut
                .apply(&cur)
                .expect("enumerated automorphisms share the word's rank");
            let len = cyclic_reduce(&img).0.len();
            if len < cur_len && best.as_ref().is_none_or(|&(b, _, _)| len < b) {
                best = Some((len, i, img));
            }
        }
        match best {
            Some((_, i, img)) => {
                trace.push(autos[i].clone());
                cur = img;
            }
            None => break,
        }
    }
    (cur, trace)
}

/// A word is primitive iff its minimized cyclic core is a single letter.
/// The empty word is not primitive.
pub fn is_primitive(w: &Word) -> bool {
    if w.is_empty() {
        return false;
    }
    let (m, _) = minimize(w);
    cyclic_reduce(&m).0.len() == 1
}

/// For primitive `w`, an automorphism σ with `σ(x1) = w` exactly, assembled
/// from a relabeling onto the minimized letter, the conjugation recovered
/// by cyclic reduction, and the inverted minimization trace.
pub fn carrier_automorphism(w: &Word) -> Result<Automorphism, WhiteheadError> {
    if !is_primitive(w) {
        return Err(WhiteheadError::NotPrimitive);
    }
    let rank = w.rank();
    let (m, trace) = minimize(w);
    let (core, conj) = cyclic_reduce(&m);
    debug_assert_eq!(core.len(), 1);
    let l = core.letters()[0];

    let mut factors: Vec<ElementaryAut> = Vec::new();
    let x1 = Letter::new(1, Sign::Plus).expect("generator 1");
    if l != x1 {
        let mut perm: Vec<u32> = (1..=rank.get()).collect();
        perm.swap(0, (l.gen() - 1) as usize);
        let mut invert = vec![false; rank.get() as usize];
        invert[0] = l.sign() == Sign::Minus;
        factors.push(ElementaryAut::Whitehead(WhiteheadAut::type_i(
            rank, perm, invert,
        )?));
    }
    if !conj.is_empty() {
        factors.push(ElementaryAut::Inner(conj));
    }
    factors.extend(
        trace
            .iter()
            .rev()
            .map(|aut| ElementaryAut::Whitehead(aut.inverse())),
    );

    let sigma = Automorphism::from_factors(rank, factors)
        .map_err(|_| WhiteheadError::Internal("carrier factors share the input's rank"))?;
    let image = sigma
        .apply(&Word::generator(rank, 1)?)
        .map_err(|_| WhiteheadError::Internal("carrier image replay"))?;
    if image != *w {
        return Err(WhiteheadError::Internal(
            "carrier automorphism fails to reproduce its word",
        ));
    }
    Ok(sigma)
}
