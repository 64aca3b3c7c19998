use std::fmt;

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// The memoized count families. Insertions are fixed per family (see
/// [`CountKind::insertion_powers`]); other insertions are reached by
/// linearity, so keys carry only degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CountKind {
    /// `n_b(mu1, mu2)`, `mu_i` in `H^4`.
    N1B,
    /// `n_b(psi mu)`, `mu` in `H^4`.
    N1C,
    /// `n_b(psi mu1, mu2)`, `mu1` in `H^2`, `mu2` in `H^4`.
    N1D,
    /// `n_b(psi^2 mu)`, `mu` in `H^2`.
    N1E,
    /// `n_b(psi^2, mu)`, `mu` in `H^4`.
    N1F,
    /// `n_b(psi^3)`.
    N1G,
    /// `integral (c1^2 - c2)` over the family of rational curves.
    Gamma1,
    /// Two components, `mu` in `H^4` on the second.
    N2A,
    /// Two components, node on a divisor `mu`.
    N2B,
    /// Two components, `psi` at the node on the second.
    N2C,
    /// Two components, `psi mu` on the second, `mu` in `H^2`.
    N2D,
    /// Two components, `psi^2` on the second.
    N2E,
    Gamma2,
    /// Excess correction for [`CountKind::N2B`], divisor insertion.
    CorrC2,
    /// Chains of three components.
    M3,
    /// `integral (2 c2 - c1^2)` over the family of rational curves.
    Chern,
}

impl CountKind {
    pub fn arity(self) -> usize {
        use CountKind::*;
        match self {
            N1B | N1C | N1D | N1E | N1F | N1G | Gamma1 | Chern => 1,
            N2A | N2B | N2C | N2D | N2E | Gamma2 | CorrC2 => 2,
            M3 => 3,
        }
    }

    /// H-powers of the insertion slots.
    pub fn insertion_powers(self) -> &'static [u32] {
        use CountKind::*;
        match self {
            N1B => &[2, 2],
            N1C | N1F | N2A => &[2],
            N1D => &[1, 2],
            N1E | N2B | N2D | CorrC2 => &[1],
            N1G | Gamma1 | N2C | N2E | Gamma2 | M3 | Chern => &[],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CountKey {
    kind: CountKind,
    degrees: [u32; 3],
}

impl CountKey {
    pub fn new(kind: CountKind, degrees: &[u32]) -> Result<Self> {
        if degrees.len() != kind.arity() || degrees.contains(&0) {
            return Err(Error::Domain(format!(
                "bad degrees {degrees:?} for {kind:?}"
            )));
        }
        let mut padded = [0; 3];
        padded[..degrees.len()].copy_from_slice(degrees);
        Ok(CountKey {
            kind,
            degrees: padded,
        })
    }

    pub(super) fn one(kind: CountKind, d: u32) -> Self {
        CountKey {
            kind,
            degrees: [d, 0, 0],
        }
    }

    pub(super) fn two(kind: CountKind, d1: u32, d2: u32) -> Self {
        CountKey {
            kind,
            degrees: [d1, d2, 0],
        }
    }

    pub(super) fn three(kind: CountKind, d1: u32, d2: u32, d3: u32) -> Self {
        CountKey {
            kind,
            degrees: [d1, d2, d3],
        }
    }

    pub fn kind(&self) -> CountKind {
        self.kind
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees[..self.kind.arity()]
    }

    pub fn total_degree(&self) -> u32 {
        self.degrees.iter().sum()
    }
}

impl fmt::Display for CountKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees: Vec<String> = self.degrees().iter().map(u32::to_string).collect();
        write!(f, "{:?}({})", self.kind, degrees.join(","))
    }
}

/// Shared cache of exact count values. Safe to share between threads; a
/// key may be written more than once only with the same value.
#[derive(Debug, Default)]
pub struct MemoStore {
    map: DashMap<CountKey, Rational>,
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &CountKey) -> Option<Rational> {
        self.map.get(key).map(|v| v.value().clone())
    }

    pub fn insert(&self, key: CountKey, value: Rational) -> Result<()> {
        match self.map.entry(key) {
            dashmap::Entry::Occupied(existing) => {
                if existing.get() != &value {
                    return Err(Error::MemoConflict(key.to_string()));
                }
            }
            dashmap::Entry::Vacant(slot) => {
                slot.insert(value);
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// All entries, sorted by key.
    pub fn entries(&self) -> Vec<(CountKey, Rational)> {
        let mut out: Vec<_> = self
            .map
            .iter()
            .map(|e| (*e.key(), e.value().clone()))
            .collect();
        out.sort_by_key(|a| a.0);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn key_arity_is_checked() {
        assert!(CountKey::new(CountKind::M3, &[1, 2, 3]).is_ok());
        assert!(CountKey::new(CountKind::M3, &[1, 2]).is_err());
        assert!(CountKey::new(CountKind::N2A, &[1, 0]).is_err());
        let k = CountKey::new(CountKind::N2B, &[2, 5]).unwrap();
        assert_eq!(k.degrees(), &[2, 5]);
        assert_eq!(k.total_degree(), 7);
        assert_eq!(k.to_string(), "N2B(2,5)");
        assert_eq!(CountKind::N1D.insertion_powers(), &[1, 2]);
    }

    #[test]
    fn write_once_semantics() {
        let memo = MemoStore::new();
        let k = CountKey::new(CountKind::Chern, &[3]).unwrap();
        assert!(memo.get(&k).is_none());
        memo.insert(k, int(24)).unwrap();
        memo.insert(k, int(24)).unwrap();
        assert_eq!(memo.get(&k), Some(int(24)));
        assert!(matches!(
            memo.insert(k, int(25)),
            Err(Error::MemoConflict(_))
        ));
        assert_eq!(memo.len(), 1);
    }
}
