// SPDX-License-Identifier: Apache-2.0

//! A small Aho-Corasick automaton with sparse transitions.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

const ROOT: u32 = 0;

#[derive(Debug, Clone, Default)]
struct State {
    // Sorted by byte.
    next: Vec<(u8, u32)>,
    fail: u32,
    // Nearest state on the failure chain (itself included) that ends a pattern.
    output: Option<u32>,
    pattern: Option<u32>,
}

impl State {
    #[inline]
    fn goto(&self, byte: u8) -> Option<u32> {
        self.next.binary_search_by_key(&byte, |&(b, _)| b).ok().map(|idx| self.next[idx].1)
    }
}

/// Multi-pattern matcher over byte strings, each pattern tagged with an id.
#[derive(Debug, Clone)]
pub struct AcAutomaton {
    states: Vec<State>,
}

/// A position in the automaton after feeding some prefix of the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AcState(u32);

impl AcState {
    pub(crate) const ROOT: AcState = AcState(ROOT);
}

impl AcAutomaton {
    pub fn new<'p>(patterns: impl IntoIterator<Item = (u32, &'p [u8])>) -> Self {
        let mut states = alloc::vec![State::default()];
        for (id, pattern) in patterns {
            let mut s = ROOT;
            for &byte in pattern {
                s = match states[s as usize].goto(byte) {
                    Some(t) => t,
                    None => {
                        let t = states.len() as u32;
                        states.push(State::default());
                        let next = &mut states[s as usize].next;
                        let at = next.partition_point(|&(b, _)| b < byte);
                        next.insert(at, (byte, t));
                        t
                    }
                };
            }
            // First id wins for duplicate patterns.
            states[s as usize].pattern.get_or_insert(id);
        }

        let mut queue = VecDeque::new();
        states[0].output = states[0].pattern.map(|_| ROOT);
        for &(_, t) in &states[0].next {
            queue.push_back(t);
        }
        while let Some(s) = queue.pop_front() {
            let s = s as usize;
            let own = states[s].pattern.map(|_| s as u32);
            let fail_output = states[states[s].fail as usize].output;
            states[s].output = own.or(fail_output);
            for idx in 0..states[s].next.len() {
                let (byte, t) = states[s].next[idx];
                let mut f = states[s].fail;
                let target = loop {
                    if s != 0 {
                        if let Some(g) = states[f as usize].goto(byte) {
                            break g;
                        }
                    }
                    if f == ROOT {
                        break ROOT;
                    }
                    f = states[f as usize].fail;
                };
                states[t as usize].fail = if s == 0 { ROOT } else { target };
                queue.push_back(t);
            }
        }
        AcAutomaton { states }
    }

    pub fn start(&self) -> AcState {
        AcState(ROOT)
    }

    #[inline]
    pub fn step(&self, state: AcState, byte: u8) -> AcState {
        let mut s = state.0;
        loop {
            if let Some(t) = self.states[s as usize].goto(byte) {
                return AcState(t);
            }
            if s == ROOT {
                return AcState(ROOT);
            }
            s = self.states[s as usize].fail;
        }
    }

    pub fn feed(&self, mut state: AcState, bytes: &[u8]) -> AcState {
        for &b in bytes {
            state = self.step(state, b);
        }
        state
    }

    /// Id of the longest pattern ending at the current input position, if any.
    #[inline]
    pub fn longest_match(&self, state: AcState) -> Option<u32> {
        let out = self.states[state.0 as usize].output?;
        self.states[out as usize].pattern
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }
}
