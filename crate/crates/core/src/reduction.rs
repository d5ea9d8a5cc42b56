//! The four `k`-reduction procedures.
//!
//! * right invariant: `Q_0 = tau/tau`, `Q_{t+1} = Q_t /\ /\_x (delta_x . Q_t)/delta_x`
//! * left invariant: `P_0 = sigma\sigma`, `P_{t+1} = P_t /\ /\_x delta_x\(P_t . delta_x)`
//! * weakly right invariant: `/\_{|u| <= k} tau_u/tau_u`
//! * weakly left invariant: `/\_{|u| <= k} sigma_u\sigma_u`
//!
//! The row automaton of the `k`-th matrix agrees with the original automaton on
//! all words of length at most `k`. For the first two, once two consecutive
//! members coincide the sequence is constant and the reduction is exact.

use std::fmt;
use std::str::FromStr;

use crate::automaton::{Equivalence, FuzzyAutomaton, DEFAULT_WORD_CAP};
use crate::error::{Error, Result};
use crate::fuzmat::{Factorization, FuzzyMatrix, QuasiOrderMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Right invariant sequence.
    Ri,
    /// Left invariant sequence.
    Li,
    /// Weakly right invariant matrix.
    Wri,
    /// Weakly left invariant matrix.
    Wli,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Ri, Method::Li, Method::Wri, Method::Wli];

    pub fn name(self) -> &'static str {
        match self {
            Method::Ri => "ri",
            Method::Li => "li",
            Method::Wri => "wri",
            Method::Wli => "wli",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            Method::Ri | Method::Wri => Direction::Right,
            Method::Li | Method::Wli => Direction::Left,
        }
    }

    pub fn is_weak(self) -> bool {
        matches!(self, Method::Wri | Method::Wli)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMethod(pub String);

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown method {:?} (expected ri, li, wri or wli)",
            self.0
        )
    }
}

impl std::error::Error for UnknownMethod {}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ri" => Ok(Method::Ri),
            "li" => Ok(Method::Li),
            "wri" => Ok(Method::Wri),
            "wli" => Ok(Method::Wli),
            _ => Err(UnknownMethod(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Right,
    Left,
}

/// Members `M_0, .., M_j` of a right or left invariant sequence.
///
/// When `stabilized_at == Some(s)` the list ends at `M_s` and every later
/// member equals it.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantSequence {
    members: Vec<QuasiOrderMatrix>,
    stabilized_at: Option<usize>,
}

impl InvariantSequence {
    pub fn members(&self) -> &[QuasiOrderMatrix] {
        &self.members
    }

    pub fn stabilized_at(&self) -> Option<usize> {
        self.stabilized_at
    }

    /// `M_t`, if it was computed or is implied by stabilization.
    pub fn member(&self, t: usize) -> Option<&QuasiOrderMatrix> {
        match self.members.get(t) {
            Some(m) => Some(m),
            None if self.stabilized_at.is_some() => self.members.last(),
            None => None,
        }
    }

    pub fn last(&self) -> &QuasiOrderMatrix {
        self.members.last().expect("a sequence has at least M_0")
    }

    pub fn d_sequence(&self) -> Vec<usize> {
        self.members.iter().map(QuasiOrderMatrix::d).collect()
    }
}

fn internal(what: &str) -> impl FnOnce(Error) -> Error + '_ {
    move |e| Error::Internal(format!("{what}: {e}"))
}

fn invariant_step(
    a: &FuzzyAutomaton,
    direction: Direction,
    m: &FuzzyMatrix,
) -> Result<FuzzyMatrix> {
    let mut next = m.clone();
    for d in a.transitions() {
        let term = match direction {
            Direction::Right => d.mul(m)?.left_residual(d)?,
            Direction::Left => d.right_residual(&m.mul(d)?)?,
        };
        next.meet_assign(&term)?;
    }
    Ok(next)
}

/// Computes `M_0 .. M_k`, plus `M_{k+1}` to detect stabilization at `s = k`.
/// Stops early at the first `s` with `M_s = M_{s+1}`.
pub fn invariant_sequence(
    a: &FuzzyAutomaton,
    direction: Direction,
    k: usize,
) -> Result<InvariantSequence> {
    let first = match direction {
        Direction::Right => a.tau().left_residual(a.tau())?,
        Direction::Left => a.sigma().right_residual(a.sigma())?,
    };
    let mut members = vec![QuasiOrderMatrix::new(first).map_err(internal("M_0"))?];
    let mut stabilized_at = None;
    for t in 0..=k {
        let current = members[t].matrix();
        let next = invariant_step(a, direction, current)?;
        if next.approx_eq(current)? {
            stabilized_at = Some(t);
            break;
        }
        if t == k {
            break;
        }
        members.push(QuasiOrderMatrix::new(next).map_err(internal("sequence member"))?);
    }
    Ok(InvariantSequence {
        members,
        stabilized_at,
    })
}

/// `Q_0 .. Q_k` of the right invariant sequence.
pub fn ri_sequence(a: &FuzzyAutomaton, k: usize) -> Result<InvariantSequence> {
    invariant_sequence(a, Direction::Right, k)
}

/// `P_0 .. P_k` of the left invariant sequence.
pub fn li_sequence(a: &FuzzyAutomaton, k: usize) -> Result<InvariantSequence> {
    invariant_sequence(a, Direction::Left, k)
}

/// Iterates the invariant sequence for at most `max_steps` successor
/// computations and returns the greatest invariant quasi-order if the
/// sequence stabilized within that budget.
pub fn greatest_invariant(
    a: &FuzzyAutomaton,
    direction: Direction,
    max_steps: usize,
) -> Result<Option<QuasiOrderMatrix>> {
    if max_steps == 0 {
        return Ok(None);
    }
    let seq = invariant_sequence(a, direction, max_steps - 1)?;
    Ok(seq.stabilized_at.map(|_| seq.last().clone()))
}

/// Infimum of `tau_u/tau_u` (right) or `sigma_u\sigma_u` (left) over `|u| <= k`.
///
/// Repeated vectors are residuated once.
pub fn weak_invariant(
    a: &FuzzyAutomaton,
    direction: Direction,
    k: usize,
    word_cap: u64,
) -> Result<QuasiOrderMatrix> {
    let family = match direction {
        Direction::Right => a.tau_family(k, true, word_cap)?,
        Direction::Left => a.sigma_family(k, true, word_cap)?,
    };
    let mut acc: Option<FuzzyMatrix> = None;
    for (_, v) in &family {
        let r = match direction {
            Direction::Right => v.left_residual(v)?,
            Direction::Left => v.right_residual(v)?,
        };
        match acc.as_mut() {
            Some(m) => m.meet_assign(&r)?,
            None => acc = Some(r),
        }
    }
    let m = acc.expect("family contains the empty word");
    QuasiOrderMatrix::new(m).map_err(internal("weak invariant"))
}

/// `Q^_k`, the weakly right invariant `k`-th matrix.
pub fn wri_matrix(a: &FuzzyAutomaton, k: usize, word_cap: u64) -> Result<QuasiOrderMatrix> {
    weak_invariant(a, Direction::Right, k, word_cap)
}

/// `P^_k`, the weakly left invariant `k`-th matrix.
pub fn wli_matrix(a: &FuzzyAutomaton, k: usize, word_cap: u64) -> Result<QuasiOrderMatrix> {
    weak_invariant(a, Direction::Left, k, word_cap)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReduceOptions {
    /// Shrink further with a greedy `r`-factorization of the chosen matrix.
    pub factorize: bool,
    /// Bound on word-tree nodes for weak families and the equivalence check.
    pub word_cap: u64,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions {
            factorize: false,
            word_cap: DEFAULT_WORD_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub method: Method,
    pub k: usize,
    /// `d(M_t)` per computed member (right/left), or the single `d` (weak).
    pub d_sequence: Vec<usize>,
    pub stabilized_at: Option<usize>,
    pub original_states: usize,
    pub reduced_states: usize,
    pub equivalence_checked_to: usize,
    /// Inner dimension of the factorization, when one was requested.
    pub factorized: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reduction {
    pub automaton: FuzzyAutomaton,
    /// The quasi-order the automaton was collapsed with.
    pub matrix: QuasiOrderMatrix,
    pub report: ReductionReport,
}

/// Reduces `a` with the `k`-th matrix of `method` and checks the result is
/// `k`-equivalent to `a`. A failed check is reported as
/// [`Error::EquivalenceCheckFailed`] and indicates a bug.
pub fn reduce(
    a: &FuzzyAutomaton,
    method: Method,
    k: usize,
    opts: &ReduceOptions,
) -> Result<Reduction> {
    let (matrix, d_sequence, stabilized_at) = if method.is_weak() {
        let m = weak_invariant(a, method.direction(), k, opts.word_cap)?;
        let d = vec![m.d()];
        (m, d, None)
    } else {
        let seq = invariant_sequence(a, method.direction(), k)?;
        let d = seq.d_sequence();
        (seq.last().clone(), d, seq.stabilized_at())
    };

    let (automaton, factorized) = if opts.factorize {
        let f = Factorization::of_quasi_order(&matrix)?;
        (a.factor_automaton(&f)?, Some(f.rank()))
    } else {
        (a.row_automaton(&matrix)?, None)
    };

    if let Equivalence::Witness { word, .. } = a.k_equivalent(&automaton, k, opts.word_cap)? {
        return Err(Error::EquivalenceCheckFailed {
            k,
            word: a.format_word(&word),
        });
    }

    let report = ReductionReport {
        method,
        k,
        d_sequence,
        stabilized_at,
        original_states: a.states(),
        reduced_states: automaton.states(),
        equivalence_checked_to: k,
        factorized,
    };
    Ok(Reduction {
        automaton,
        matrix,
        report,
    })
}
