//! Finite automata over convolution alphabets.
//!
//! Transition tables are sparse: each state stores explicit `(symbol, target)`
//! entries plus an optional *default* target that stands for every symbol
//! without an explicit entry. A missing entry and no default means reject.
//! This keeps product alphabets with thousands of columns workable without
//! materializing full rows, while complement and minimization still treat the
//! automaton as complete.
//!
//! Determinization propagates defaults through the subset construction, and
//! minimization runs Moore partition refinement against a virtual dead state,
//! so every operation is exact over the declared alphabet.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use crate::alphabet::{ConvAlphabet, Symbol};
use crate::error::{Error, Result};

pub type StateId = u32;

/// A finite automaton (NFA or DFA) over a [`ConvAlphabet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fsa {
    alphabet: ConvAlphabet,
    num_states: u32,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
    /// Per state, sorted by (symbol, target), deduplicated.
    trans: Vec<Vec<(Symbol, StateId)>>,
    /// Per state, the target for all symbols without an explicit entry.
    defaults: Vec<Option<StateId>>,
    deterministic: bool,
}

/// Incremental construction of an [`Fsa`].
#[derive(Debug)]
pub struct FsaBuilder {
    alphabet: ConvAlphabet,
    num_states: u32,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
    trans: Vec<Vec<(Symbol, StateId)>>,
    defaults: Vec<Option<StateId>>,
}

impl FsaBuilder {
    pub fn new(alphabet: ConvAlphabet) -> Self {
        FsaBuilder {
            alphabet,
            num_states: 0,
            initial: Vec::new(),
            accepting: Vec::new(),
            trans: Vec::new(),
            defaults: Vec::new(),
        }
    }

    pub fn add_state(&mut self) -> StateId {
        let id = self.num_states;
        self.num_states += 1;
        self.accepting.push(false);
        self.trans.push(Vec::new());
        self.defaults.push(None);
        id
    }

    pub fn add_states(&mut self, n: usize) -> StateId {
        let first = self.num_states;
        for _ in 0..n {
            self.add_state();
        }
        first
    }

    pub fn mark_initial(&mut self, q: StateId) {
        if !self.initial.contains(&q) {
            self.initial.push(q);
        }
    }

    pub fn mark_accepting(&mut self, q: StateId, acc: bool) {
        self.accepting[q as usize] = acc;
    }

    pub fn add_transition(&mut self, src: StateId, sym: Symbol, dst: StateId) {
        debug_assert!((sym as usize) < self.alphabet.len());
        self.trans[src as usize].push((sym, dst));
    }

    pub fn set_default(&mut self, src: StateId, dst: StateId) {
        self.defaults[src as usize] = Some(dst);
    }

    pub fn build(mut self) -> Fsa {
        let mut deterministic = self.initial.len() == 1;
        for row in &mut self.trans {
            row.sort_unstable();
            row.dedup();
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                deterministic = false;
            }
        }
        self.initial.sort_unstable();
        Fsa {
            alphabet: self.alphabet,
            num_states: self.num_states,
            initial: self.initial,
            accepting: self.accepting,
            trans: self.trans,
            defaults: self.defaults,
            deterministic,
        }
    }
}

impl Fsa {
    /// The automaton of the empty language.
    pub fn empty_language(alphabet: ConvAlphabet) -> Fsa {
        let mut b = FsaBuilder::new(alphabet);
        let q = b.add_state();
        b.mark_initial(q);
        b.build()
    }

    /// The automaton accepting every word over the alphabet.
    pub fn all_words(alphabet: ConvAlphabet) -> Fsa {
        let mut b = FsaBuilder::new(alphabet);
        let q = b.add_state();
        b.mark_initial(q);
        b.mark_accepting(q, true);
        b.set_default(q, q);
        b.build()
    }

    /// The automaton accepting exactly the given word.
    pub fn singleton(alphabet: ConvAlphabet, word: &[Symbol]) -> Fsa {
        let mut b = FsaBuilder::new(alphabet);
        let first = b.add_states(word.len() + 1);
        b.mark_initial(first);
        b.mark_accepting(first + word.len() as StateId, true);
        for (i, &sym) in word.iter().enumerate() {
            b.add_transition(first + i as StateId, sym, first + i as StateId + 1);
        }
        b.build()
    }

    pub fn alphabet(&self) -> &ConvAlphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states as usize
    }

    pub fn initial_states(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q as usize]
    }

    pub fn is_deterministic(&self) -> bool {
        self.deterministic
    }

    pub fn transitions(&self, q: StateId) -> &[(Symbol, StateId)] {
        &self.trans[q as usize]
    }

    pub fn default_target(&self, q: StateId) -> Option<StateId> {
        self.defaults[q as usize]
    }

    pub fn num_transitions(&self) -> usize {
        self.trans.iter().map(Vec::len).sum()
    }

    /// All targets reachable from `q` on `sym`, honoring the default.
    pub fn moves<'a>(&'a self, q: StateId, sym: Symbol) -> impl Iterator<Item = StateId> + 'a {
        let row = &self.trans[q as usize];
        let lo = row.partition_point(|&(s, _)| s < sym);
        let hi = row[lo..].partition_point(|&(s, _)| s == sym) + lo;
        let explicit = &row[lo..hi];
        let fallback = if explicit.is_empty() {
            self.defaults[q as usize]
        } else {
            None
        };
        explicit.iter().map(|&(_, t)| t).chain(fallback)
    }

    /// Deterministic single step; `None` rejects.
    pub fn step(&self, q: StateId, sym: Symbol) -> Option<StateId> {
        debug_assert!(self.deterministic);
        self.moves(q, sym).next()
    }

    /// Runs the automaton on a word.
    pub fn accepts(&self, word: &[Symbol]) -> bool {
        if self.deterministic {
            let mut q = match self.initial.first() {
                Some(&q) => q,
                None => return false,
            };
            for &sym in word {
                match self.step(q, sym) {
                    Some(next) => q = next,
                    None => return false,
                }
            }
            return self.accepting[q as usize];
        }
        let mut cur: Vec<StateId> = self.initial.clone();
        for &sym in word {
            let mut next: Vec<StateId> = Vec::new();
            for &q in &cur {
                next.extend(self.moves(q, sym));
            }
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                return false;
            }
            cur = next;
        }
        cur.iter().any(|&q| self.accepting[q as usize])
    }

    /// States reachable from the initial set along explicit and default edges.
    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states as usize];
        let mut queue: VecDeque<StateId> = VecDeque::new();
        for &q in &self.initial {
            if !seen[q as usize] {
                seen[q as usize] = true;
                queue.push_back(q);
            }
        }
        while let Some(q) = queue.pop_front() {
            let push = |t: StateId, seen: &mut Vec<bool>, queue: &mut VecDeque<StateId>| {
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    queue.push_back(t);
                }
            };
            for &(_, t) in &self.trans[q as usize] {
                push(t, &mut seen, &mut queue);
            }
            if self.default_is_live(q) {
                push(self.defaults[q as usize].unwrap(), &mut seen, &mut queue);
            }
        }
        seen
    }

    /// Number of distinct symbols with an explicit entry on `q`.
    fn distinct_explicit(&self, q: StateId) -> usize {
        let mut distinct = 0usize;
        let mut prev = None;
        for &(s, _) in &self.trans[q as usize] {
            if prev != Some(s) {
                distinct += 1;
                prev = Some(s);
            }
        }
        distinct
    }

    /// Whether the default edge of `q` covers at least one symbol.
    fn default_is_live(&self, q: StateId) -> bool {
        self.defaults[q as usize].is_some() && self.distinct_explicit(q) < self.alphabet.len()
    }

    /// States from which an accepting state is reachable.
    fn co_accessible(&self) -> Vec<bool> {
        let n = self.num_states as usize;
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for q in 0..self.num_states {
            for &(_, t) in &self.trans[q as usize] {
                rev[t as usize].push(q);
            }
            if self.default_is_live(q) {
                rev[self.defaults[q as usize].unwrap() as usize].push(q);
            }
        }
        let mut seen = vec![false; n];
        let mut queue: VecDeque<StateId> = VecDeque::new();
        for q in 0..self.num_states {
            if self.accepting[q as usize] {
                seen[q as usize] = true;
                queue.push_back(q);
            }
        }
        while let Some(q) = queue.pop_front() {
            for &p in &rev[q as usize] {
                if !seen[p as usize] {
                    seen[p as usize] = true;
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// True iff the accepted language is empty.
    pub fn is_empty(&self) -> bool {
        let seen = self.reachable();
        !(0..self.num_states as usize).any(|q| seen[q] && self.accepting[q])
    }

    /// Subset construction. Defaults survive: a subset's default target is the
    /// set of member defaults, applied to every symbol no member lists.
    pub fn determinize(&self) -> Fsa {
        if self.deterministic {
            return self.clone();
        }
        let mut b = FsaBuilder::new(self.alphabet.clone());
        let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
        let mut queue: VecDeque<Vec<StateId>> = VecDeque::new();

        let mut start = self.initial.clone();
        start.sort_unstable();
        start.dedup();
        let q0 = b.add_state();
        b.mark_initial(q0);
        b.mark_accepting(q0, start.iter().any(|&q| self.accepting[q as usize]));
        ids.insert(start.clone(), q0);
        queue.push_back(start);

        while let Some(subset) = queue.pop_front() {
            let src = ids[&subset];
            // union of explicit symbols across the subset
            let mut symbols: Vec<Symbol> = subset
                .iter()
                .flat_map(|&q| self.trans[q as usize].iter().map(|&(s, _)| s))
                .collect();
            symbols.sort_unstable();
            symbols.dedup();

            let default_set: Vec<StateId> = {
                let mut d: Vec<StateId> = subset
                    .iter()
                    .filter_map(|&q| self.defaults[q as usize])
                    .collect();
                d.sort_unstable();
                d.dedup();
                d
            };

            let intern = |set: Vec<StateId>,
                              b: &mut FsaBuilder,
                              queue: &mut VecDeque<Vec<StateId>>,
                              ids: &mut HashMap<Vec<StateId>, StateId>|
             -> StateId {
                match ids.entry(set) {
                    Entry::Occupied(e) => *e.get(),
                    Entry::Vacant(e) => {
                        let id = b.add_state();
                        b.mark_accepting(id, e.key().iter().any(|&q| self.accepting[q as usize]));
                        queue.push_back(e.key().clone());
                        e.insert(id);
                        id
                    }
                }
            };

            for sym in symbols {
                let mut target: Vec<StateId> = Vec::new();
                for &q in &subset {
                    target.extend(self.moves(q, sym));
                }
                target.sort_unstable();
                target.dedup();
                if target.is_empty() {
                    continue;
                }
                let dst = intern(target, &mut b, &mut queue, &mut ids);
                b.add_transition(src, sym, dst);
            }
            if !default_set.is_empty() {
                let dst = intern(default_set, &mut b, &mut queue, &mut ids);
                b.set_default(src, dst);
            }
        }
        b.build()
    }

    /// Minimal complete DFA in canonical form: Moore partition refinement
    /// against a virtual dead state, BFS state numbering, and the default
    /// target of each state rewritten to its most frequent successor (ties to
    /// the smallest id). Two automata with the same language produce
    /// identical results.
    pub fn determinize_minimize(&self) -> Fsa {
        let dfa = self.determinize();
        dfa.minimize_dfa()
    }

    fn minimize_dfa(&self) -> Fsa {
        debug_assert!(self.deterministic);
        let n = self.num_states as usize;
        let virt = n; // virtual dead state: rejects, loops on every symbol
        let mut block: Vec<u32> = (0..=n)
            .map(|q| if q < n && self.accepting[q] { 1 } else { 0 })
            .collect();
        let mut num_blocks = 0u32;
        loop {
            // signature: (old block, default block, explicit entries that
            // disagree with the default block); entries agreeing with the
            // default are dropped so states with different explicit/default
            // splits but the same successor function compare equal
            let mut sigs: HashMap<(u32, u32, Vec<(Symbol, u32)>), u32> = HashMap::new();
            let mut next_block = vec![0u32; n + 1];
            for q in 0..=n {
                let (def_block, entries) = if q == virt {
                    (block[virt], Vec::new())
                } else {
                    let def = self.defaults[q].map(|d| block[d as usize]).unwrap_or(block[virt]);
                    let entries: Vec<(Symbol, u32)> = self.trans[q]
                        .iter()
                        .map(|&(s, t)| (s, block[t as usize]))
                        .filter(|&(_, bt)| bt != def)
                        .collect();
                    (def, entries)
                };
                let key = (block[q], def_block, entries);
                let next = sigs.len() as u32;
                let id = *sigs.entry(key).or_insert(next);
                next_block[q] = id;
            }
            let new_count = sigs.len() as u32;
            block = next_block;
            if new_count == num_blocks {
                break;
            }
            num_blocks = new_count;
        }

        // representative per block, smallest original id
        let mut rep: Vec<usize> = vec![usize::MAX; num_blocks as usize];
        for q in (0..=n).rev() {
            rep[block[q] as usize] = q;
        }

        // full successor function of a block: all explicit entries plus the
        // default slotted at the first uncovered symbol (successors with
        // later first occurrences only repeat targets already listed)
        let full_fn = |b: u32| -> (Vec<(Symbol, u32)>, u32, Option<Symbol>) {
            let r = rep[b as usize];
            if r == virt {
                return (Vec::new(), b, Some(0));
            }
            let def = self.defaults[r].map(|d| block[d as usize]).unwrap_or(block[virt]);
            let entries: Vec<(Symbol, u32)> = self.trans[r]
                .iter()
                .map(|&(s, t)| (s, block[t as usize]))
                .collect();
            let mut expect: Symbol = 0;
            for &(s, _) in &entries {
                if s > expect {
                    break;
                }
                expect = s + 1;
            }
            let gap = if (expect as usize) < self.alphabet.len() {
                Some(expect)
            } else {
                None
            };
            (entries, def, gap)
        };

        // BFS numbering over the full successor function in symbol order;
        // independent of how the input split its rows between explicit
        // entries and the default, so equal languages number identically
        let start_block = if self.initial.is_empty() {
            block[virt]
        } else {
            block[self.initial[0] as usize]
        };
        let mut order: HashMap<u32, StateId> = HashMap::new();
        let mut bfs: Vec<u32> = Vec::new();
        order.insert(start_block, 0);
        bfs.push(start_block);
        let mut head = 0usize;
        while head < bfs.len() {
            let b = bfs[head];
            head += 1;
            let (entries, def, gap) = full_fn(b);
            let mut visit: Vec<(Symbol, u32)> = entries;
            if let Some(g) = gap {
                visit.push((g, def));
                visit.sort_unstable_by_key(|&(s, _)| s);
            }
            for (_, tb) in visit {
                if let Entry::Vacant(e) = order.entry(tb) {
                    e.insert(bfs.len() as StateId);
                    bfs.push(tb);
                }
            }
        }

        let mut bb = FsaBuilder::new(self.alphabet.clone());
        bb.add_states(bfs.len());
        bb.mark_initial(0);
        for (i, &b) in bfs.iter().enumerate() {
            let r = rep[b as usize];
            bb.mark_accepting(i as StateId, r != virt && self.accepting[r]);
            let (entries, def, gap) = full_fn(b);

            // canonical default: the most frequent successor, ties to the
            // smallest new id
            let uncovered = self.alphabet.len() - entries.len();
            let mut counts: HashMap<StateId, usize> = HashMap::new();
            if uncovered > 0 {
                *counts.entry(order[&def]).or_insert(0) += uncovered;
            }
            for &(_, tb) in &entries {
                *counts.entry(order[&tb]).or_insert(0) += 1;
            }
            let (&best, _) = counts
                .iter()
                .min_by_key(|&(&t, &c)| (std::cmp::Reverse(c), t))
                .unwrap();
            bb.set_default(i as StateId, best);
            for &(s, tb) in &entries {
                let nt = order[&tb];
                if nt != best {
                    bb.add_transition(i as StateId, s, nt);
                }
            }
            if uncovered > 0 && order[&def] != best {
                // uncovered symbols no longer ride the default; list them
                let covered: Vec<Symbol> = entries.iter().map(|&(s, _)| s).collect();
                let mut ci = 0usize;
                for s in 0..self.alphabet.len() as Symbol {
                    if ci < covered.len() && covered[ci] == s {
                        ci += 1;
                        continue;
                    }
                    bb.add_transition(i as StateId, s, order[&def]);
                }
            }
        }
        bb.build()
    }

    fn check_same_alphabet(&self, other: &Fsa) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                "operands read different alphabets".into(),
            ));
        }
        Ok(())
    }

    /// Product automaton accepting the intersection.
    pub fn intersect(&self, other: &Fsa) -> Result<Fsa> {
        self.check_same_alphabet(other)?;
        let mut b = FsaBuilder::new(self.alphabet.clone());
        let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut queue: VecDeque<(StateId, StateId)> = VecDeque::new();
        for &p in &self.initial {
            for &q in &other.initial {
                if let Entry::Vacant(e) = ids.entry((p, q)) {
                    let id = b.add_state();
                    b.mark_initial(id);
                    b.mark_accepting(id, self.accepting[p as usize] && other.accepting[q as usize]);
                    e.insert(id);
                    queue.push_back((p, q));
                }
            }
        }
        while let Some((p, q)) = queue.pop_front() {
            let src = ids[&(p, q)];
            let mut symbols: Vec<Symbol> = self.trans[p as usize]
                .iter()
                .map(|&(s, _)| s)
                .chain(other.trans[q as usize].iter().map(|&(s, _)| s))
                .collect();
            symbols.sort_unstable();
            symbols.dedup();
            let link = |sym: Option<Symbol>, tp: StateId, tq: StateId, b: &mut FsaBuilder, queue: &mut VecDeque<(StateId, StateId)>, ids: &mut HashMap<(StateId, StateId), StateId>| {
                let dst = match ids.entry((tp, tq)) {
                    Entry::Occupied(e) => *e.get(),
                    Entry::Vacant(e) => {
                        let id = b.add_state();
                        b.mark_accepting(
                            id,
                            self.accepting[tp as usize] && other.accepting[tq as usize],
                        );
                        e.insert(id);
                        queue.push_back((tp, tq));
                        id
                    }
                };
                match sym {
                    Some(s) => b.add_transition(src, s, dst),
                    None => b.set_default(src, dst),
                }
            };
            for sym in symbols {
                let rs: Vec<StateId> = self.moves(p, sym).collect();
                let qs: Vec<StateId> = other.moves(q, sym).collect();
                for &tp in &rs {
                    for &tq in &qs {
                        link(Some(sym), tp, tq, &mut b, &mut queue, &mut ids);
                    }
                }
            }
            if let (Some(dp), Some(dq)) = (self.defaults[p as usize], other.defaults[q as usize]) {
                link(None, dp, dq, &mut b, &mut queue, &mut ids);
            }
        }
        Ok(b.build())
    }

    /// Disjoint-union NFA accepting the union.
    pub fn union(&self, other: &Fsa) -> Result<Fsa> {
        self.check_same_alphabet(other)?;
        let mut b = FsaBuilder::new(self.alphabet.clone());
        let off = self.num_states;
        b.add_states((self.num_states + other.num_states) as usize);
        for q in 0..self.num_states {
            b.mark_accepting(q, self.accepting[q as usize]);
            for &(s, t) in &self.trans[q as usize] {
                b.add_transition(q, s, t);
            }
            if let Some(d) = self.defaults[q as usize] {
                b.set_default(q, d);
            }
        }
        for q in 0..other.num_states {
            b.mark_accepting(off + q, other.accepting[q as usize]);
            for &(s, t) in &other.trans[q as usize] {
                b.add_transition(off + q, s, off + t);
            }
            if let Some(d) = other.defaults[q as usize] {
                b.set_default(off + q, off + d);
            }
        }
        for &q in &self.initial {
            b.mark_initial(q);
        }
        for &q in &other.initial {
            b.mark_initial(off + q);
        }
        Ok(b.build())
    }

    /// Complement relative to all words over the alphabet.
    pub fn complement(&self) -> Fsa {
        let dfa = self.determinize();
        let mut b = FsaBuilder::new(dfa.alphabet.clone());
        b.add_states(dfa.num_states as usize + 1);
        let sink = dfa.num_states;
        if let Some(&q0) = dfa.initial.first() {
            b.mark_initial(q0);
        } else {
            b.mark_initial(sink);
        }
        for q in 0..dfa.num_states {
            b.mark_accepting(q, !dfa.accepting[q as usize]);
            for &(s, t) in &dfa.trans[q as usize] {
                b.add_transition(q, s, t);
            }
            b.set_default(q, dfa.defaults[q as usize].unwrap_or(sink));
        }
        b.mark_accepting(sink, true);
        b.set_default(sink, sink);
        b.build()
    }

    /// A word accepted by exactly one of the two automata, if any.
    ///
    /// Decides equivalence as emptiness of the symmetric difference, run as a
    /// lazy breadth-first search over determinized subset pairs.
    pub fn difference_witness(&self, other: &Fsa) -> Result<Option<Vec<Symbol>>> {
        self.check_same_alphabet(other)?;
        type Subset = Vec<StateId>;
        let acc = |fsa: &Fsa, s: &Subset| s.iter().any(|&q| fsa.accepting[q as usize]);

        let start_a: Subset = self.initial.clone();
        let start_b: Subset = other.initial.clone();
        let mut ids: HashMap<(Subset, Subset), u32> = HashMap::new();
        // (parent id, symbol leading here)
        let mut trace: Vec<(u32, Symbol)> = Vec::new();
        let mut pairs: Vec<(Subset, Subset)> = Vec::new();

        if acc(self, &start_a) != acc(other, &start_b) {
            return Ok(Some(Vec::new()));
        }
        ids.insert((start_a.clone(), start_b.clone()), 0);
        trace.push((u32::MAX, 0));
        pairs.push((start_a, start_b));
        let mut head = 0usize;
        while head < pairs.len() {
            let (sa, sb) = pairs[head].clone();
            let cur = head as u32;
            head += 1;

            let mut symbols: Vec<Symbol> = sa
                .iter()
                .flat_map(|&q| self.trans[q as usize].iter().map(|&(s, _)| s))
                .chain(
                    sb.iter()
                        .flat_map(|&q| other.trans[q as usize].iter().map(|&(s, _)| s)),
                )
                .collect();
            symbols.sort_unstable();
            symbols.dedup();

            // a representative symbol outside every explicit list, if one exists
            let mut rest: Option<Symbol> = None;
            let mut expect: Symbol = 0;
            for &s in &symbols {
                if s > expect {
                    break;
                }
                expect = s + 1;
            }
            if (expect as usize) < self.alphabet.len() {
                rest = Some(expect);
            }

            let step = |fsa: &Fsa, set: &Subset, sym: Symbol| -> Subset {
                let mut out: Subset = set.iter().flat_map(|&q| fsa.moves(q, sym)).collect();
                out.sort_unstable();
                out.dedup();
                out
            };

            for sym in symbols.into_iter().chain(rest) {
                let na = step(self, &sa, sym);
                let nb = step(other, &sb, sym);
                if acc(self, &na) != acc(other, &nb) {
                    let mut word = vec![sym];
                    let mut at = cur;
                    while at != 0 {
                        let (p, s) = trace[at as usize];
                        word.push(s);
                        at = p;
                    }
                    word.reverse();
                    return Ok(Some(word));
                }
                if let Entry::Vacant(e) = ids.entry((na.clone(), nb.clone())) {
                    e.insert(pairs.len() as u32);
                    trace.push((cur, sym));
                    pairs.push((na, nb));
                }
            }
        }
        Ok(None)
    }

    /// True iff both automata accept the same language.
    pub fn equivalent(&self, other: &Fsa) -> Result<bool> {
        Ok(self.difference_witness(other)?.is_none())
    }

    /// The unique accepted word.
    ///
    /// Trims the automaton to accessible and co-accessible states, then walks
    /// levels: in the trimmed automaton of a one-word language every state
    /// sits at a single depth with a single live symbol, so any branch or any
    /// extension past an accepting state proves a second member.
    pub fn unique_member(&self) -> Result<Vec<Symbol>> {
        let reach = self.reachable();
        let co = self.co_accessible();
        let live = |q: StateId| reach[q as usize] && co[q as usize];
        if !(0..self.num_states).any(|q| live(q) && self.accepting[q as usize]) {
            return Err(Error::EmptyLanguage);
        }
        let mut cur: Vec<StateId> = self.initial.iter().copied().filter(|&q| live(q)).collect();
        cur.sort_unstable();
        cur.dedup();
        let mut word: Vec<Symbol> = Vec::new();
        loop {
            if word.len() > self.num_states as usize {
                // a live cycle pumps more members
                return Err(Error::AmbiguousLanguage);
            }
            let accepting_here = cur.iter().any(|&q| self.accepting[q as usize]);
            // collect distinct live out-symbols
            let mut label: Option<Symbol> = None;
            let mut multiple = false;
            for &q in &cur {
                for &(s, t) in &self.trans[q as usize] {
                    if !live(t) {
                        continue;
                    }
                    match label {
                        None => label = Some(s),
                        Some(l) if l != s => multiple = true,
                        _ => {}
                    }
                }
                if self.default_is_live(q) && live(self.defaults[q as usize].unwrap()) {
                    // the default edge carries every unlisted symbol
                    let covered = self.distinct_explicit(q);
                    if self.alphabet.len() - covered >= 2 {
                        multiple = true;
                    } else {
                        // exactly one gap symbol
                        let mut expect: Symbol = 0;
                        for &(s, _) in &self.trans[q as usize] {
                            if s > expect {
                                break;
                            }
                            expect = s + 1;
                        }
                        match label {
                            None => label = Some(expect),
                            Some(l) if l != expect => multiple = true,
                            _ => {}
                        }
                    }
                }
            }
            if accepting_here {
                if label.is_some() {
                    return Err(Error::AmbiguousLanguage);
                }
                return Ok(word);
            }
            if multiple {
                return Err(Error::AmbiguousLanguage);
            }
            let sym = label.ok_or(Error::EmptyLanguage)?;
            let mut next: Vec<StateId> = cur
                .iter()
                .flat_map(|&q| self.moves(q, sym))
                .filter(|&t| live(t))
                .collect();
            next.sort_unstable();
            next.dedup();
            cur = next;
            word.push(sym);
        }
    }

    /// Counts accepted words of each length `0..=max_len`. Requires a
    /// deterministic automaton.
    pub fn count_words(&self, max_len: usize) -> Vec<BigUint> {
        debug_assert!(self.deterministic);
        let n = self.num_states as usize;
        let mut cur: Vec<BigUint> = vec![BigUint::ZERO; n];
        if let Some(&q0) = self.initial.first() {
            cur[q0 as usize] = BigUint::from(1u32);
        }
        let accept_mass = |v: &[BigUint]| -> BigUint {
            let mut total = BigUint::ZERO;
            for (q, c) in v.iter().enumerate() {
                if self.accepting[q] {
                    total += c;
                }
            }
            total
        };
        let mut out = vec![accept_mass(&cur)];
        for _ in 0..max_len {
            let mut next: Vec<BigUint> = vec![BigUint::ZERO; n];
            for q in 0..n {
                if cur[q] == BigUint::ZERO {
                    continue;
                }
                for &(_, t) in &self.trans[q] {
                    next[t as usize] += &cur[q];
                }
                if let Some(d) = self.defaults[q] {
                    let covered = self.trans[q].len();
                    let mass = self.alphabet.len() - covered;
                    if mass > 0 {
                        next[d as usize] += &cur[q] * BigUint::from(mass as u64);
                    }
                }
            }
            out.push(accept_mass(&next));
            cur = next;
        }
        out
    }

    /// Enumerates accepted words in length-lexicographic order, up to
    /// `max_len` and at most `cap` words. Walks every alphabet symbol, so
    /// only suitable for small alphabets.
    pub fn enumerate_words(&self, max_len: usize, cap: usize) -> Vec<Vec<Symbol>> {
        let dfa = if self.deterministic {
            self.clone()
        } else {
            self.determinize()
        };
        let co = dfa.co_accessible();
        let mut out = Vec::new();
        let mut layer: Vec<(StateId, Vec<Symbol>)> = Vec::new();
        if let Some(&q0) = dfa.initial.first() {
            if co[q0 as usize] {
                layer.push((q0, Vec::new()));
            }
        }
        for _ in 0..=max_len {
            for (q, w) in &layer {
                if dfa.accepting[*q as usize] {
                    out.push(w.clone());
                    if out.len() >= cap {
                        return out;
                    }
                }
            }
            let mut next = Vec::new();
            for (q, w) in &layer {
                for sym in 0..dfa.alphabet.len() as Symbol {
                    if let Some(t) = dfa.step(*q, sym) {
                        if co[t as usize] {
                            let mut w2 = w.clone();
                            w2.push(sym);
                            next.push((t, w2));
                        }
                    }
                }
            }
            layer = next;
            if layer.is_empty() {
                break;
            }
        }
        out
    }

    /// Relabels every symbol through a bijection onto a new alphabet of the
    /// same size. Used for track permutations.
    pub fn map_symbols(&self, new_alphabet: ConvAlphabet, f: impl Fn(Symbol) -> Symbol) -> Fsa {
        debug_assert_eq!(new_alphabet.len(), self.alphabet.len());
        let mut b = FsaBuilder::new(new_alphabet);
        b.add_states(self.num_states as usize);
        for &q in &self.initial {
            b.mark_initial(q);
        }
        for q in 0..self.num_states {
            b.mark_accepting(q, self.accepting[q as usize]);
            for &(s, t) in &self.trans[q as usize] {
                b.add_transition(q, f(s), t);
            }
            if let Some(d) = self.defaults[q as usize] {
                b.set_default(q, d);
            }
        }
        b.build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn ab() -> ConvAlphabet {
        ConvAlphabet::single(Alphabet::new(["a", "b"]).unwrap())
    }

    /// NFA for "contains the symbol a" over {a, b}, with spare states.
    fn contains_a_nfa() -> Fsa {
        let mut b = FsaBuilder::new(ab());
        let q0 = b.add_state();
        let q1 = b.add_state();
        let q2 = b.add_state(); // redundant copy of q1
        let _dead = b.add_state();
        b.mark_initial(q0);
        b.mark_accepting(q1, true);
        b.mark_accepting(q2, true);
        for s in 0..2 {
            b.add_transition(q0, s, q0);
            b.add_transition(q1, s, q1);
            b.add_transition(q2, s, q2);
        }
        b.add_transition(q0, 0, q1);
        b.add_transition(q0, 0, q2);
        b.build()
    }

    #[test]
    fn determinize_minimize_contains_a() {
        let min = contains_a_nfa().determinize_minimize();
        assert_eq!(min.num_states(), 2);
        assert!(min.accepts(&[1, 1, 0, 1]));
        assert!(!min.accepts(&[1, 1]));
        assert!(!min.accepts(&[]));
        // compare against exhaustive enumeration up to length 8
        let words = min.enumerate_words(8, usize::MAX);
        let nfa = contains_a_nfa();
        let mut expect = Vec::new();
        let mut layer: Vec<Vec<Symbol>> = vec![vec![]];
        for _ in 0..=8 {
            for w in &layer {
                if nfa.accepts(w) {
                    expect.push(w.clone());
                }
            }
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..2 {
                    let mut v = w.clone();
                    v.push(s);
                    next.push(v);
                }
            }
            layer = next;
        }
        let cut: Vec<_> = words.into_iter().filter(|w| w.len() <= 8).collect();
        assert_eq!(cut, expect);
    }

    #[test]
    fn sigma_star_with_redundant_states_minimizes_to_one() {
        let mut b = FsaBuilder::new(ab());
        let q0 = b.add_state();
        let q1 = b.add_state();
        let q2 = b.add_state();
        b.mark_initial(q0);
        for q in [q0, q1, q2] {
            b.mark_accepting(q, true);
        }
        b.add_transition(q0, 0, q1);
        b.add_transition(q0, 1, q2);
        b.add_transition(q1, 0, q0);
        b.add_transition(q1, 1, q2);
        b.add_transition(q2, 0, q1);
        b.add_transition(q2, 1, q0);
        let min = b.build().determinize_minimize();
        assert_eq!(min.num_states(), 1);
        assert!(min.equivalent(&Fsa::all_words(ab())).unwrap());
    }

    #[test]
    fn minimization_is_idempotent_and_language_preserving() {
        let nfa = contains_a_nfa();
        let min = nfa.determinize_minimize();
        assert!(min.equivalent(&nfa).unwrap());
        let again = min.determinize_minimize();
        assert_eq!(min, again);
    }

    #[test]
    fn boolean_algebra_on_toy_language() {
        let l = contains_a_nfa();
        let inter = l.intersect(&l.complement()).unwrap();
        assert!(inter.is_empty());
        let u = Fsa::empty_language(ab()).union(&l).unwrap();
        assert!(u.equivalent(&l).unwrap());
    }

    #[test]
    fn unreachable_accepting_state_is_empty() {
        let mut b = FsaBuilder::new(ab());
        let q0 = b.add_state();
        let q1 = b.add_state();
        b.mark_initial(q0);
        b.mark_accepting(q1, true);
        b.add_transition(q1, 0, q0);
        let fsa = b.build();
        assert!(fsa.is_empty());
    }

    #[test]
    fn equivalence_detects_one_extra_word() {
        let l = contains_a_nfa();
        let extra = Fsa::singleton(ab(), &[1, 1]);
        let both = l.union(&extra).unwrap();
        assert!(!both.equivalent(&l).unwrap());
        let w = l.difference_witness(&both).unwrap().unwrap();
        assert_eq!(w, vec![1, 1]);
    }

    #[test]
    fn unique_member_cases() {
        let one = Fsa::singleton(ab(), &[0, 1, 1]);
        assert_eq!(one.unique_member().unwrap(), vec![0, 1, 1]);
        assert!(matches!(
            Fsa::empty_language(ab()).unique_member(),
            Err(Error::EmptyLanguage)
        ));
        assert!(matches!(
            Fsa::all_words(ab()).unique_member(),
            Err(Error::AmbiguousLanguage)
        ));
        let two = Fsa::singleton(ab(), &[0]).union(&Fsa::singleton(ab(), &[1])).unwrap();
        assert!(matches!(two.unique_member(), Err(Error::AmbiguousLanguage)));
    }

    #[test]
    fn count_words_matches_enumeration() {
        let min = contains_a_nfa().determinize_minimize();
        let counts = min.count_words(6);
        let words = min.enumerate_words(6, usize::MAX);
        for len in 0..=6usize {
            let n = words.iter().filter(|w| w.len() == len).count();
            assert_eq!(counts[len], BigUint::from(n));
        }
    }

    #[test]
    fn random_boolean_algebra_agrees_with_membership() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let alpha = ab();
        let mut rng = StdRng::seed_from_u64(0xCA71E);
        for _ in 0..40 {
            let mut mk = || {
                let mut b = FsaBuilder::new(alpha.clone());
                let n = rng.random_range(1..=6u32);
                b.add_states(n as usize);
                b.mark_initial(rng.random_range(0..n));
                for q in 0..n {
                    b.mark_accepting(q, rng.random_bool(0.4));
                    for s in 0..2 {
                        for _ in 0..rng.random_range(0..=2) {
                            b.add_transition(q, s, rng.random_range(0..n));
                        }
                    }
                }
                b.build()
            };
            let x = mk();
            let y = mk();
            let inter = x.intersect(&y).unwrap();
            let uni = x.union(&y).unwrap();
            let comp = x.complement();
            let mut layer: Vec<Vec<Symbol>> = vec![vec![]];
            for _ in 0..=7 {
                for w in &layer {
                    let (mx, my) = (x.accepts(w), y.accepts(w));
                    assert_eq!(inter.accepts(w), mx && my);
                    assert_eq!(uni.accepts(w), mx || my);
                    assert_eq!(comp.accepts(w), !mx);
                }
                let mut next = Vec::new();
                for w in &layer {
                    for s in 0..2 {
                        let mut v = w.clone();
                        v.push(s);
                        next.push(v);
                    }
                }
                layer = next;
            }
        }
    }
}
