//! Local expansions of the basic kernels `π·cot(πs)`, `ψ(−s)+γ` and
//! `ψ^(p−1)(−s)/(p−1)!`, and residue ledgers for kernel × rational base
//! function pairs whose total residue must vanish.

mod kernels;
mod ledger;

pub use kernels::{
    eval_kernel, expand_kernel, loglog_slope, polygamma_reflected, truncation_errors, validate_expansion, KernelKind,
    DEFAULT_ORDER, DEFAULT_RADII,
};
pub use ledger::{even_weight_ledger, odd_weight_ledger, residue_sum_check, LedgerVariant};

use crate::scalar::Real;

/// Truncated Laurent expansion `Σ_{j=lowest}^{K} c_j (s − center)^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalExpansion<T> {
    pub kind: KernelKind,
    /// Expansion point (`n` or `−n`).
    pub center: i64,
    /// Polygamma order, 0 for the other kernels.
    pub p: u32,
    /// Most negative power.
    pub lowest_order: i32,
    /// Truncation order `K`.
    pub order: u32,
    /// Coefficients for powers `lowest_order..=K`.
    pub coefficients: Vec<T>,
}

impl<T: Real> LocalExpansion<T> {
    /// Coefficient of `(s − center)^power`, zero outside the stored range.
    pub fn coefficient(&self, power: i32) -> Option<&T> {
        if power < self.lowest_order {
            return None;
        }
        self.coefficients.get((power - self.lowest_order) as usize)
    }

    /// `(power, coefficient)` pairs in increasing power.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &T)> {
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.lowest_order + i as i32, c))
    }

    /// Value at `s = center + offset`.
    pub fn eval(&self, offset: &T) -> T {
        let bits = offset.precision();
        let mut acc = T::zero(bits);
        for c in self.coefficients.iter().rev() {
            acc = acc * offset + c;
        }
        acc * offset.powi(self.lowest_order)
    }
}

/// Residue contributions at `1..=N`, `−1..=−N`, `±a` (combined) and `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueLedger<T> {
    pub positive_residues: Vec<T>,
    pub negative_residues: Vec<T>,
    pub pole_at_a: T,
    pub pole_at_zero: T,
    /// Certified bound on the series inside `pole_at_a`.
    pub series_bound: T,
}

impl<T: Real> ResidueLedger<T> {
    pub fn n_max(&self) -> usize {
        self.positive_residues.len()
    }

    /// Signed sum of every contribution with the integer poles cut at `n`.
    pub fn truncated_total(&self, n: usize) -> T {
        let n = n.min(self.n_max());
        let mut total = self.pole_at_a.clone() + &self.pole_at_zero;
        for (p, q) in self.positive_residues[..n].iter().zip(&self.negative_residues[..n]) {
            total += p.clone() + q;
        }
        total
    }
}

#[cfg(test)]
mod tests;
