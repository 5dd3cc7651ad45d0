//! Test-only oracles for subgroup membership that do not use folding.
//!
//! `nielsen_reduce` searches Nielsen transformations that never increase the
//! total length until it reaches a set satisfying the Nielsen conditions
//! N0–N2, checked by definition. For such a set every reduced product of `n`
//! factors has length at least `n`, so enumerating products of at most `L`
//! factors finds every subgroup element of length at most `L`.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use shapestab_core::{Letter, Word};

pub fn signed(set: &[Word]) -> Vec<Word> {
    set.iter().flat_map(|u| [u.clone(), u.inverse()]).collect()
}

pub fn is_nielsen_reduced(set: &[Word]) -> bool {
    let all = signed(set);
    if all.iter().any(Word::is_identity) {
        return false;
    }
    for a in &all {
        for b in &all {
            let ab = a.multiply(b);
            if ab.is_identity() {
                continue;
            }
            if ab.len() < a.len() || ab.len() < b.len() {
                return false;
            }
            for c in &all {
                if b.multiply(c).is_identity() {
                    continue;
                }
                let abc = ab.multiply(c);
                if abc.len() as i64 <= a.len() as i64 - b.len() as i64 + c.len() as i64 {
                    return false;
                }
            }
        }
    }
    true
}

fn canonical(set: Vec<Word>) -> Vec<Word> {
    let mut out: Vec<Word> = set
        .into_iter()
        .filter(|u| !u.is_identity())
        .map(|u| {
            let inv = u.inverse();
            if inv < u {
                inv
            } else {
                u
            }
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn total(set: &[Word]) -> usize {
    set.iter().map(Word::len).sum()
}

fn moves(set: &[Word]) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    for i in 0..set.len() {
        for j in 0..set.len() {
            if i == j {
                continue;
            }
            for u in [set[i].clone(), set[i].inverse()] {
                for v in [set[j].clone(), set[j].inverse()] {
                    for replacement in [u.multiply(&v), v.multiply(&u)] {
                        let mut next = set.to_vec();
                        next[i] = replacement;
                        out.push(canonical(next));
                    }
                }
            }
        }
    }
    out
}

/// A Nielsen-reduced generating set of `⟨gens⟩`.
pub fn nielsen_reduce(gens: &[Word]) -> Vec<Word> {
    let mut current = canonical(gens.to_vec());
    'outer: loop {
        if let Some(shorter) = moves(&current).into_iter().find(|m| total(m) < total(&current)) {
            current = shorter;
            continue;
        }
        // Explore the length-preserving component for a reduced set or an
        // exit to a shorter one.
        let level = total(&current);
        let mut seen = HashSet::from([current.clone()]);
        let mut queue = VecDeque::from([current.clone()]);
        while let Some(state) = queue.pop_front() {
            if is_nielsen_reduced(&state) {
                return state;
            }
            for m in moves(&state) {
                if total(&m) < level {
                    current = m;
                    continue 'outer;
                }
                if total(&m) == level && seen.insert(m.clone()) {
                    queue.push_back(m);
                }
            }
        }
        panic!("no Nielsen-reduced set reachable from {gens:?}");
    }
}

/// Every reduced product of at most `max_factors` elements of `set^±`.
pub fn products(set: &[Word], max_factors: usize) -> HashSet<Word> {
    let symbols = signed(set);
    let mut all = HashSet::from([Word::identity()]);
    let mut layer = HashSet::from([Word::identity()]);
    for _ in 0..max_factors {
        layer = layer
            .iter()
            .flat_map(|w| symbols.iter().map(move |s| w.multiply(s)))
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

/// Elements of `⟨gens⟩` of length at most `max_len`.
pub fn short_elements(gens: &[Word], max_len: usize) -> HashSet<Word> {
    let basis = nielsen_reduce(gens);
    products(&basis, max_len)
        .into_iter()
        .filter(|w| w.len() <= max_len)
        .collect()
}

/// All reduced words of length at most `max_len`.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..rank {
                for letter in [Letter::pos(g), Letter::neg(g)] {
                    if w.last() == Some(&letter.inverse()) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(letter);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned().map(Word::reduce));
        layer = next;
    }
    out
}
