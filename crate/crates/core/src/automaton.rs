//! Fuzzy finite automata in linear representation `(sigma, {delta_x}, tau)`.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::fuzmat::{Factorization, FuzzyMatrix, FuzzyVector, QuasiOrderMatrix};
use crate::lattice::{LatticeSpec, Value};

/// Default bound on the number of nodes of a word tree `1 + m + .. + m^k`.
pub const DEFAULT_WORD_CAP: u64 = 1_000_000;

/// Default bound on `n^(|u|+1)` for path enumeration.
pub const DEFAULT_PATH_CAP: u64 = 1_000_000;

/// A word over an automaton's alphabet, stored as letter indices.
///
/// Words order shortlex: shorter first, then lexicographically by letter index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `x`.
    pub fn append(&self, x: usize) -> Word {
        let mut v = self.0.clone();
        v.push(x);
        Word(v)
    }

    /// `x` followed by `self`.
    pub fn prepend(&self, x: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(x);
        v.extend_from_slice(&self.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Outcome of a bounded equivalence check.
#[derive(Debug, Clone, PartialEq)]
pub enum Equivalence {
    Equal,
    /// Shortlex-first word on which the behaviors differ.
    Witness {
        word: Word,
        left: Value,
        right: Value,
    },
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

/// Number of words of length at most `k` over `m` letters, saturating.
pub fn word_tree_size(m: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut level: u128 = 1;
    for _ in 0..=k {
        total = total.saturating_add(level);
        level = level.saturating_mul(m as u128);
    }
    total
}

fn check_word_cap(m: usize, k: usize, cap: u64) -> Result<()> {
    let requested = word_tree_size(m, k);
    if requested > cap as u128 {
        return Err(Error::WordCapExceeded { requested, cap });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyAutomaton {
    lattice: LatticeSpec,
    alphabet: Vec<String>,
    sigma: FuzzyVector,
    delta: Vec<FuzzyMatrix>,
    tau: FuzzyVector,
}

impl FuzzyAutomaton {
    /// `delta[x]` is the transition matrix of `alphabet[x]`.
    pub fn new(
        alphabet: Vec<String>,
        sigma: FuzzyVector,
        delta: Vec<FuzzyMatrix>,
        tau: FuzzyVector,
    ) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = HashSet::new();
        for s in &alphabet {
            if !seen.insert(s.as_str()) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        if delta.len() != alphabet.len() {
            return Err(Error::DimensionMismatch {
                op: "automaton alphabet",
                left: (1, alphabet.len()),
                right: (1, delta.len()),
            });
        }
        let lattice = sigma.lattice();
        let n = sigma.len();
        let lattices = std::iter::once(tau.lattice()).chain(delta.iter().map(|d| d.lattice()));
        for other in lattices {
            if other != lattice {
                return Err(Error::LatticeMismatch {
                    op: "automaton",
                    left: lattice,
                    right: other,
                });
            }
        }
        if tau.len() != n {
            return Err(Error::DimensionMismatch {
                op: "automaton terminal vector",
                left: (1, n),
                right: (tau.len(), 1),
            });
        }
        for d in &delta {
            if d.shape() != (n, n) {
                return Err(Error::DimensionMismatch {
                    op: "automaton transition matrix",
                    left: (n, n),
                    right: d.shape(),
                });
            }
        }
        Ok(FuzzyAutomaton {
            lattice,
            alphabet,
            sigma,
            delta,
            tau,
        })
    }

    pub fn lattice(&self) -> LatticeSpec {
        self.lattice
    }

    pub fn states(&self) -> usize {
        self.sigma.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn letters(&self) -> usize {
        self.alphabet.len()
    }

    pub fn sigma(&self) -> &FuzzyVector {
        &self.sigma
    }

    pub fn tau(&self) -> &FuzzyVector {
        &self.tau
    }

    pub fn delta(&self, x: usize) -> &FuzzyMatrix {
        &self.delta[x]
    }

    pub fn transitions(&self) -> &[FuzzyMatrix] {
        &self.delta
    }

    pub fn symbol_index(&self, symbol: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    pub fn word<S: AsRef<str>>(&self, symbols: &[S]) -> Result<Word> {
        symbols
            .iter()
            .map(|s| self.symbol_index(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Symbols separated by spaces; `ε` for the empty word.
    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "ε".to_string();
        }
        word.letters()
            .iter()
            .map(|&x| {
                self.alphabet
                    .get(x)
                    .cloned()
                    .unwrap_or_else(|| format!("#{x}"))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn check_word(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|&&x| x >= self.letters()) {
            Some(&x) => Err(Error::UnknownSymbol(format!("#{x}"))),
            None => Ok(()),
        }
    }

    /// `sigma . delta_{x1} . .. . delta_{xs} . tau`.
    pub fn behavior(&self, word: &Word) -> Result<Value> {
        self.check_word(word)?;
        let mut state = self.sigma.clone();
        for &x in word.letters() {
            state = state.mul_mat(&self.delta[x])?;
        }
        state.dot(&self.tau)
    }

    /// Behavior as the join over every state sequence of the tensor chain
    /// `sigma(a0) (x) delta(a0, x1, a1) (x) .. (x) tau(ak)`.
    ///
    /// Enumerates `n^(|u|+1)` sequences; refuses when that exceeds `cap`.
    pub fn behavior_paths(&self, word: &Word, cap: u64) -> Result<Value> {
        self.check_word(word)?;
        let n = self.states();
        let requested = (n as u128)
            .checked_pow(word.len() as u32 + 1)
            .unwrap_or(u128::MAX);
        if requested > cap as u128 {
            return Err(Error::PathCapExceeded { requested, cap });
        }
        let l = self.lattice;
        let letters = word.letters();
        let mut best = 0.0;
        let mut path = vec![0usize; letters.len() + 1];
        loop {
            let mut v = self.sigma.get(path[0]);
            for (t, &x) in letters.iter().enumerate() {
                v = l.tensor(v, self.delta[x].get(path[t], path[t + 1]));
            }
            v = l.tensor(v, self.tau.get(path[letters.len()]));
            best = l.join(best, v);

            // odometer increment over A^{k+1}
            let mut pos = path.len();
            loop {
                if pos == 0 {
                    return Ok(best);
                }
                pos -= 1;
                path[pos] += 1;
                if path[pos] < n {
                    break;
                }
                path[pos] = 0;
            }
        }
    }

    fn same_signature(&self, other: &FuzzyAutomaton) -> Result<()> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch {
                op: "k_equivalent",
                left: self.lattice,
                right: other.lattice,
            });
        }
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    /// Compares behaviors on every word of length at most `k`, breadth-first in
    /// shortlex order, and reports the first difference.
    pub fn k_equivalent(&self, other: &FuzzyAutomaton, k: usize, cap: u64) -> Result<Equivalence> {
        self.same_signature(other)?;
        check_word_cap(self.letters(), k, cap)?;
        let l = self.lattice;
        let mut frontier = vec![(Word::empty(), self.sigma.clone(), other.sigma.clone())];
        for depth in 0..=k {
            for (word, a, b) in &frontier {
                let left = a.dot(&self.tau)?;
                let right = b.dot(&other.tau)?;
                if !l.value_eq(left, right) {
                    return Ok(Equivalence::Witness {
                        word: word.clone(),
                        left,
                        right,
                    });
                }
            }
            if depth == k {
                break;
            }
            let mut next = Vec::with_capacity(frontier.len() * self.letters());
            for (word, a, b) in &frontier {
                for x in 0..self.letters() {
                    next.push((
                        word.append(x),
                        a.mul_mat(&self.delta[x])?,
                        b.mul_mat(&other.delta[x])?,
                    ));
                }
            }
            frontier = next;
        }
        Ok(Equivalence::Equal)
    }

    /// The row automaton on the distinct rows of `q`:
    /// `sigma . Q_c`, `Q_r . delta_x . Q_c`, `Q_r . tau`.
    pub fn row_automaton(&self, q: &QuasiOrderMatrix) -> Result<FuzzyAutomaton> {
        self.check_order(q.matrix())?;
        let (q_r, q_c) = q.rows_cols()?;
        self.collapse(&q_c, &q_r)
    }

    /// The automaton of an `r`-factorization `Q = L . R`:
    /// `sigma . L`, `R . delta_x . L`, `R . tau`.
    ///
    /// `L . R` must be a quasi-order of order `n`.
    pub fn factor_automaton(&self, f: &Factorization) -> Result<FuzzyAutomaton> {
        let q = f.product();
        self.check_order(&q)?;
        QuasiOrderMatrix::new(q)?;
        self.collapse(f.left(), f.right())
    }

    fn check_order(&self, q: &FuzzyMatrix) -> Result<()> {
        if q.lattice() != self.lattice {
            return Err(Error::LatticeMismatch {
                op: "row_automaton",
                left: self.lattice,
                right: q.lattice(),
            });
        }
        let n = self.states();
        if q.shape() != (n, n) {
            return Err(Error::DimensionMismatch {
                op: "row_automaton",
                left: (n, n),
                right: q.shape(),
            });
        }
        Ok(())
    }

    fn collapse(&self, left: &FuzzyMatrix, right: &FuzzyMatrix) -> Result<FuzzyAutomaton> {
        let sigma = self.sigma.mul_mat(left)?;
        let tau = right.mul_vec(&self.tau)?;
        let delta = self
            .delta
            .iter()
            .map(|d| right.mul(d)?.mul(left))
            .collect::<Result<Vec<_>>>()?;
        FuzzyAutomaton::new(self.alphabet.clone(), sigma, delta, tau)
    }

    /// `tau_u = delta_u . tau` for every `|u| <= k`, filled level by level with
    /// `tau_{xu} = delta_x . tau_u`.
    ///
    /// With `dedup`, a vector equal to one already produced is dropped together
    /// with its subtree; its descendants repeat those of the earlier copy, which
    /// sits at the same depth or shallower.
    pub fn tau_family(&self, k: usize, dedup: bool, cap: u64) -> Result<Vec<(Word, FuzzyVector)>> {
        check_word_cap(self.letters(), k, cap)?;
        self.family(k, dedup, &self.tau, |x, u: &Word, v: &FuzzyVector| {
            Ok((u.prepend(x), self.delta[x].mul_vec(v)?))
        })
    }

    /// `sigma_u = sigma . delta_u` for every `|u| <= k`, with
    /// `sigma_{ux} = sigma_u . delta_x`. See [`tau_family`](Self::tau_family).
    pub fn sigma_family(
        &self,
        k: usize,
        dedup: bool,
        cap: u64,
    ) -> Result<Vec<(Word, FuzzyVector)>> {
        check_word_cap(self.letters(), k, cap)?;
        self.family(k, dedup, &self.sigma, |x, u: &Word, v: &FuzzyVector| {
            Ok((u.append(x), v.mul_mat(&self.delta[x])?))
        })
    }

    fn family<F>(
        &self,
        k: usize,
        dedup: bool,
        root: &FuzzyVector,
        extend: F,
    ) -> Result<Vec<(Word, FuzzyVector)>>
    where
        F: Fn(usize, &Word, &FuzzyVector) -> Result<(Word, FuzzyVector)>,
    {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let key = |v: &FuzzyVector| -> Vec<u64> {
            v.entries().iter().map(|e| (e + 0.0).to_bits()).collect()
        };
        if dedup {
            seen.insert(key(root));
        }
        let mut out = vec![(Word::empty(), root.clone())];
        let mut level_start = 0;
        for _ in 0..k {
            let level_end = out.len();
            for idx in level_start..level_end {
                for x in 0..self.letters() {
                    let (w, v) = extend(x, &out[idx].0, &out[idx].1)?;
                    if dedup && !seen.insert(key(&v)) {
                        continue;
                    }
                    out.push((w, v));
                }
            }
            if out.len() == level_end {
                break;
            }
            level_start = level_end;
        }
        Ok(out)
    }
}
