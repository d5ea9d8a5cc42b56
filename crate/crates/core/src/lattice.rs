//! Truth-value algebras.
//!
//! Every degree is an `f64` in `[0, 1]`. A [`LatticeSpec`] picks one of four
//! linearly ordered complete residuated lattices on that carrier and owns the
//! comparison tolerance, so all ordering and equality tests in the crate go
//! through [`LatticeSpec::leq`] and [`LatticeSpec::value_eq`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A membership degree.
pub type Value = f64;

/// Default comparison tolerance for the real-valued structures.
pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    /// Two-element Boolean algebra.
    Boolean,
    /// Minimum t-norm.
    Godel,
    /// Łukasiewicz t-norm `max(0, a + b - 1)`.
    Lukasiewicz,
    /// Product t-norm.
    Product,
}

impl LatticeKind {
    pub const ALL: [LatticeKind; 4] = [
        LatticeKind::Boolean,
        LatticeKind::Godel,
        LatticeKind::Lukasiewicz,
        LatticeKind::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::Boolean => "boolean",
            LatticeKind::Godel => "godel",
            LatticeKind::Lukasiewicz => "lukasiewicz",
            LatticeKind::Product => "product",
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownLattice(pub String);

impl fmt::Display for UnknownLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown lattice {:?} (expected boolean, godel, lukasiewicz or product)",
            self.0
        )
    }
}

impl std::error::Error for UnknownLattice {}

impl FromStr for LatticeKind {
    type Err = UnknownLattice;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "boolean" | "bool" => Ok(LatticeKind::Boolean),
            "godel" | "gödel" => Ok(LatticeKind::Godel),
            "lukasiewicz" | "łukasiewicz" => Ok(LatticeKind::Lukasiewicz),
            "product" | "goguen" => Ok(LatticeKind::Product),
            _ => Err(UnknownLattice(s.to_string())),
        }
    }
}

/// One complete residuated lattice on `[0, 1]` (or `{0, 1}`) plus the
/// tolerance used when comparing its values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    kind: LatticeKind,
    epsilon: f64,
}

impl LatticeSpec {
    /// Boolean lattices must use `epsilon == 0`; the others need a finite
    /// positive tolerance.
    pub fn new(kind: LatticeKind, epsilon: f64) -> Result<Self> {
        let ok = match kind {
            LatticeKind::Boolean => epsilon == 0.0,
            _ => epsilon.is_finite() && epsilon > 0.0,
        };
        if !ok {
            return Err(Error::InvalidEpsilon {
                kind: kind.name(),
                epsilon,
            });
        }
        Ok(LatticeSpec { kind, epsilon })
    }

    /// The lattice with its default tolerance (0 for Boolean, 1e-9 otherwise).
    pub fn with_default_epsilon(kind: LatticeKind) -> Self {
        let epsilon = match kind {
            LatticeKind::Boolean => 0.0,
            _ => DEFAULT_EPSILON,
        };
        LatticeSpec { kind, epsilon }
    }

    pub fn boolean() -> Self {
        Self::with_default_epsilon(LatticeKind::Boolean)
    }

    pub fn godel() -> Self {
        Self::with_default_epsilon(LatticeKind::Godel)
    }

    pub fn lukasiewicz() -> Self {
        Self::with_default_epsilon(LatticeKind::Lukasiewicz)
    }

    pub fn product() -> Self {
        Self::with_default_epsilon(LatticeKind::Product)
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn zero(&self) -> Value {
        0.0
    }

    pub fn one(&self) -> Value {
        1.0
    }

    pub fn is_valid(&self, v: Value) -> bool {
        match self.kind {
            LatticeKind::Boolean => v == 0.0 || v == 1.0,
            _ => (0.0..=1.0).contains(&v),
        }
    }

    pub fn check(&self, v: Value) -> Result<Value> {
        if self.is_valid(v) {
            // normalizes -0.0
            Ok(v + 0.0)
        } else {
            Err(Error::InvalidValue {
                value: v,
                lattice: *self,
            })
        }
    }

    #[inline]
    pub fn join(&self, a: Value, b: Value) -> Value {
        a.max(b)
    }

    #[inline]
    pub fn meet(&self, a: Value, b: Value) -> Value {
        a.min(b)
    }

    /// The lattice multiplication.
    #[inline]
    pub fn tensor(&self, a: Value, b: Value) -> Value {
        match self.kind {
            LatticeKind::Boolean | LatticeKind::Godel => a.min(b),
            LatticeKind::Lukasiewicz => {
                // lo - (1 - hi): exact when hi = 1, symmetric in a and b
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                (lo - (1.0 - hi)).max(0.0)
            }
            LatticeKind::Product => a * b,
        }
    }

    /// The residuum `a -> b`: the largest `c` with `tensor(a, c) <= b`.
    ///
    /// Branches compare exactly; the tolerance only applies in `leq`/`value_eq`.
    #[inline]
    pub fn residuum(&self, a: Value, b: Value) -> Value {
        match self.kind {
            LatticeKind::Boolean | LatticeKind::Godel => {
                if a <= b {
                    1.0
                } else {
                    b
                }
            }
            LatticeKind::Lukasiewicz => (b + (1.0 - a)).min(1.0),
            LatticeKind::Product => {
                if a <= b {
                    1.0
                } else {
                    b / a
                }
            }
        }
    }

    /// `a <= b` up to epsilon.
    #[inline]
    pub fn leq(&self, a: Value, b: Value) -> bool {
        a <= b + self.epsilon
    }

    /// `|a - b| <= epsilon`.
    #[inline]
    pub fn value_eq(&self, a: Value, b: Value) -> bool {
        (a - b).abs() <= self.epsilon
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.epsilon > 0.0 {
            write!(f, " (eps {:e})", self.epsilon)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(step_count: usize) -> Vec<f64> {
        (0..=step_count)
            .map(|i| i as f64 / step_count as f64)
            .collect()
    }

    fn real_lattices() -> [LatticeSpec; 3] {
        [
            LatticeSpec::godel(),
            LatticeSpec::lukasiewicz(),
            LatticeSpec::product(),
        ]
    }

    #[test]
    fn epsilon_rules() {
        assert!(LatticeSpec::new(LatticeKind::Boolean, 0.0).is_ok());
        assert!(LatticeSpec::new(LatticeKind::Boolean, 1e-9).is_err());
        assert!(LatticeSpec::new(LatticeKind::Godel, 0.0).is_err());
        assert!(LatticeSpec::new(LatticeKind::Product, f64::NAN).is_err());
        assert!(LatticeSpec::new(LatticeKind::Lukasiewicz, 1e-6).is_ok());
    }

    #[test]
    fn join_meet_examples() {
        let g = LatticeSpec::godel();
        assert_eq!(g.join(0.0, 0.42), 0.42);
        assert_eq!(g.join(0.3, 0.7), 0.7);
        assert_eq!(LatticeSpec::boolean().join(1.0, 1.0), 1.0);
        assert_eq!(g.meet(1.0, 0.42), 0.42);
        assert_eq!(g.meet(0.3, 0.7), 0.3);
        assert_eq!(g.meet(0.0, 1.0), 0.0);
    }

    #[test]
    fn tensor_examples() {
        for l in LatticeKind::ALL.map(LatticeSpec::with_default_epsilon) {
            for x in [0.0, 1.0] {
                assert_eq!(l.tensor(1.0, x), x);
            }
        }
        for l in real_lattices() {
            assert_eq!(l.tensor(1.0, 0.35), 0.35);
        }
        let luk = LatticeSpec::lukasiewicz();
        assert!(luk.value_eq(luk.tensor(0.6, 0.7), 0.3));
        assert_eq!(LatticeSpec::product().tensor(0.5, 0.5), 0.25);
    }

    // sup{c on a fine grid : a (x) c <= b}, independent of the closed forms
    fn residuum_by_search(l: &LatticeSpec, a: f64, b: f64) -> f64 {
        grid(10_000)
            .into_iter()
            .filter(|&c| l.leq(l.tensor(a, c), b))
            .fold(0.0, f64::max)
    }

    #[test]
    fn residuum_examples() {
        for l in LatticeKind::ALL.map(LatticeSpec::with_default_epsilon) {
            for a in [0.0, 1.0] {
                assert_eq!(l.residuum(a, 1.0), 1.0);
                assert_eq!(l.residuum(1.0, a), a);
            }
        }
        let p = LatticeSpec::product();
        let luk = LatticeSpec::lukasiewicz();
        assert!((residuum_by_search(&p, 0.8, 0.2) - 0.25).abs() < 1e-4);
        assert!((residuum_by_search(&luk, 0.8, 0.2) - 0.4).abs() < 1e-4);
        assert!(p.value_eq(p.residuum(0.8, 0.2), 0.25));
        assert!(luk.value_eq(luk.residuum(0.8, 0.2), 0.4));
        // 0/0 never happens
        assert_eq!(p.residuum(0.0, 0.0), 1.0);
    }

    #[test]
    fn residuum_matches_grid_search() {
        for l in real_lattices() {
            for &a in &grid(10) {
                for &b in &grid(10) {
                    let found = residuum_by_search(&l, a, b);
                    assert!(
                        (found - l.residuum(a, b)).abs() < 2e-4,
                        "{l} {a}->{b}: {found} vs {}",
                        l.residuum(a, b)
                    );
                }
            }
        }
    }

    #[test]
    fn comparisons() {
        let g = LatticeSpec::godel();
        assert!(g.value_eq(0.3, 0.3));
        assert!(g.leq(0.3, 0.7));
        assert!(!g.leq(0.7, 0.3));
        assert!(g.value_eq(0.1 + 0.2, 0.3));
        let b = LatticeSpec::boolean();
        assert!(!b.value_eq(0.0, 1.0));
    }

    #[test]
    fn adjunction_on_grid() {
        for l in LatticeKind::ALL.map(LatticeSpec::with_default_epsilon) {
            let g = if l.kind() == LatticeKind::Boolean {
                grid(1)
            } else {
                grid(20)
            };
            for &a in &g {
                for &b in &g {
                    for &c in &g {
                        assert_eq!(
                            l.leq(l.tensor(a, b), c),
                            l.leq(a, l.residuum(b, c)),
                            "{l}: a={a} b={b} c={c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn parse_kind() {
        assert_eq!("Godel".parse::<LatticeKind>(), Ok(LatticeKind::Godel));
        assert_eq!("product".parse::<LatticeKind>(), Ok(LatticeKind::Product));
        assert!("heyting".parse::<LatticeKind>().is_err());
    }

    #[test]
    fn invalid_values() {
        assert!(LatticeSpec::boolean().check(0.5).is_err());
        assert!(LatticeSpec::godel().check(1.5).is_err());
        assert!(LatticeSpec::godel().check(-0.1).is_err());
        assert!(LatticeSpec::godel().check(f64::NAN).is_err());
        assert_eq!(LatticeSpec::godel().check(-0.0).unwrap().to_bits(), 0);
    }
}
