//! Resource caps shared by every enumerating operation.
//!
//! Defaults can be lowered or raised through the environment
//! (`VARKIT_MAX_GROUP`, `VARKIT_MAX_DEGREE`, `VARKIT_MAX_ASSIGN`,
//! `VARKIT_MAX_AMBIENT`); [`Limits::lowered`] applies caller overrides that
//! may only tighten a cap.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_GROUP: usize = 20_000;
pub const DEFAULT_MAX_DEGREE: usize = 6;
pub const DEFAULT_MAX_ASSIGN: u64 = 10_000_000;
pub const DEFAULT_MAX_AMBIENT: usize = 100_000;

/// Number of truncated monomials allowed in a Magnus expansion: the size of
/// the 3-letter series at cutoff 6.
const MAGNUS_TERM_BUDGET: u128 = 1093;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest finite group a closure may enumerate.
    pub max_group: usize,
    /// Largest multilinear degree (ambient dimension n!).
    pub max_degree: usize,
    /// Largest number of variable assignments an exhaustive check may visit.
    pub max_assign: u64,
    /// Largest ambient dimension of a coordinate space.
    pub max_ambient: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group: DEFAULT_MAX_GROUP,
            max_degree: DEFAULT_MAX_DEGREE,
            max_assign: DEFAULT_MAX_ASSIGN,
            max_ambient: DEFAULT_MAX_AMBIENT,
        }
    }
}

fn env_or<T: std::str::FromStr>(key: &str, default: T) -> T {
    std::env::var(key)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

impl Limits {
    /// Defaults overridden by `VARKIT_*` environment variables.
    pub fn from_env() -> Self {
        let d = Limits::default();
        Limits {
            max_group: env_or("VARKIT_MAX_GROUP", d.max_group),
            max_degree: env_or("VARKIT_MAX_DEGREE", d.max_degree),
            max_assign: env_or("VARKIT_MAX_ASSIGN", d.max_assign),
            max_ambient: env_or("VARKIT_MAX_AMBIENT", d.max_ambient),
        }
    }

    /// Applies overrides that can only lower the current caps.
    pub fn lowered(mut self, max_group: Option<usize>, max_degree: Option<usize>, max_assign: Option<u64>) -> Self {
        if let Some(g) = max_group {
            self.max_group = self.max_group.min(g);
        }
        if let Some(n) = max_degree {
            self.max_degree = self.max_degree.min(n);
        }
        if let Some(a) = max_assign {
            self.max_assign = self.max_assign.min(a);
        }
        self
    }

    /// Largest Magnus cutoff for `letters` generators: 8 for up to two
    /// letters, 6 for three, and beyond that the largest cutoff whose series
    /// stays within the three-letter budget.
    pub fn magnus_cutoff_cap(&self, letters: u32) -> u32 {
        match letters {
            0..=2 => 8,
            3 => 6,
            k => {
                let k = k as u128;
                let mut d = 0u32;
                let mut total = 1u128;
                let mut block = 1u128;
                loop {
                    block *= k;
                    if total + block > MAGNUS_TERM_BUDGET {
                        return d.max(1);
                    }
                    total += block;
                    d += 1;
                }
            }
        }
    }

    pub(crate) fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::cap("multilinear degree", n as u128, self.max_degree as u128));
        }
        Ok(())
    }

    pub(crate) fn check_assignments(&self, count: u128) -> Result<()> {
        if count > self.max_assign as u128 {
            return Err(Error::cap("variable assignments", count, self.max_assign as u128));
        }
        Ok(())
    }
}

/// Ambient-dimension cap used by the exact linear algebra, read once.
pub(crate) fn max_ambient() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| Limits::from_env().max_ambient)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_only_lower() {
        let l = Limits::default().lowered(Some(50_000), Some(4), None);
        assert_eq!(l.max_group, DEFAULT_MAX_GROUP);
        assert_eq!(l.max_degree, 4);
        assert_eq!(l.max_assign, DEFAULT_MAX_ASSIGN);
    }

    #[test]
    fn magnus_caps() {
        let l = Limits::default();
        assert_eq!(l.magnus_cutoff_cap(2), 8);
        assert_eq!(l.magnus_cutoff_cap(3), 6);
        // 1 + 4 + 16 + 64 + 256 = 341 <= 1093 < 341 + 1024
        assert_eq!(l.magnus_cutoff_cap(4), 4);
    }
}
