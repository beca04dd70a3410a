// SPDX-License-Identifier: Apache-2.0

//! Diagonal Hamiltonian of an open Ising chain, its spectrum and the oracle
//! masks that mark one eigenvalue.
//!
//! Energies are kept as exact integers in units of the coupling `ε`. Basis
//! index `i` encodes a configuration bitwise: bit `b` is spin `b + 1`, with a
//! clear bit meaning spin up (`+1`) and a set bit spin down (`-1`).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_SPINS: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IsingChain {
    spins: u32,
    epsilon: f64,
}

impl IsingChain {
    pub fn new(spins: u32) -> Result<Self> {
        Self::with_cap(spins, DEFAULT_MAX_SPINS)
    }

    /// Builds a chain accepting up to `cap` spins instead of the default 24.
    pub fn with_cap(spins: u32, cap: u32) -> Result<Self> {
        // usize indices must hold 2^n
        let cap = cap.min(usize::BITS - 2);
        if !(2..=cap).contains(&spins) {
            return Err(Error::Size { n: spins, cap });
        }
        Ok(Self { spins, epsilon: 1.0 })
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::Domain {
                name: "epsilon",
                value: epsilon,
                domain: "(0, inf)",
            });
        }
        self.epsilon = epsilon;
        Ok(self)
    }

    pub fn spins(&self) -> u32 {
        self.spins
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `2^n`.
    pub fn dimension(&self) -> usize {
        1usize << self.spins
    }
}

/// The `2^n` diagonal entries `H_ii / ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyDiagonal {
    chain: IsingChain,
    values: Vec<i32>,
}

impl EnergyDiagonal {
    pub fn chain(&self) -> &IsingChain {
        &self.chain
    }

    pub fn spins(&self) -> u32 {
        self.chain.spins
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    /// Eigenvalue in units of `ε`.
    pub lambda: i64,
    pub degeneracy: usize,
    #[serde(skip)]
    pub marked_indices: Vec<usize>,
}

/// Distinct eigenvalues in ascending order with their degeneracies.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergySpectrum {
    chain: IsingChain,
    entries: Vec<SpectrumEntry>,
}

impl EnergySpectrum {
    pub fn chain(&self) -> &IsingChain {
        &self.chain
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn get(&self, lambda: i64) -> Option<&SpectrumEntry> {
        self.entries
            .binary_search_by_key(&lambda, |e| e.lambda)
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn degeneracy(&self, lambda: i64) -> usize {
        self.get(lambda).map_or(0, |e| e.degeneracy)
    }

    pub fn eigenvalues(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().map(|e| e.lambda)
    }
}

/// Basis states whose energy equals the searched eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMask {
    spins: u32,
    marked: Vec<usize>,
}

impl OracleMask {
    /// Builds a mask from explicit indices. Indices are sorted and deduplicated.
    pub fn from_indices(spins: u32, mut marked: Vec<usize>) -> Result<Self> {
        let dim = 1usize
            .checked_shl(spins)
            .ok_or(Error::Size { n: spins, cap: usize::BITS - 2 })?;
        marked.sort_unstable();
        marked.dedup();
        if let Some(&i) = marked.last() {
            if i >= dim {
                return Err(Error::InvalidArgument(format!(
                    "index {i} out of range for {spins} spins"
                )));
            }
        }
        Ok(Self { spins, marked })
    }

    pub fn spins(&self) -> u32 {
        self.spins
    }

    pub fn dimension(&self) -> usize {
        1usize << self.spins
    }

    /// Sorted ascending.
    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    pub fn len(&self) -> usize {
        self.marked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marked.is_empty()
    }

    /// Whether the mask defines a nontrivial search (`1 ≤ |marked| < 2^n`).
    pub fn is_searchable(&self) -> bool {
        !self.marked.is_empty() && self.marked.len() < self.dimension()
    }
}

/// Energy of configuration `index`, in units of `ε`.
pub fn configuration_energy(spins: u32, index: usize) -> i32 {
    // neighbouring bits equal => aligned bond => -1
    let flips = (index ^ (index >> 1)) & ((1usize << (spins - 1)) - 1);
    let anti = flips.count_ones() as i32;
    let bonds = spins as i32 - 1;
    -(bonds - 2 * anti)
}

pub fn build_diagonal(chain: &IsingChain) -> EnergyDiagonal {
    let values = (0..chain.dimension())
        .map(|i| configuration_energy(chain.spins, i))
        .collect();
    EnergyDiagonal { chain: *chain, values }
}

/// Builds the same diagonal as [`build_diagonal`] from the tensor-product
/// form `-Σ_p I^{⊗p} ⊗ (s⊗s) ⊗ I^{⊗(n-p-2)}`, one Kronecker product of
/// diagonals per bond.
pub fn build_diagonal_tensor(chain: &IsingChain) -> EnergyDiagonal {
    const SIGMA_Z: [i32; 2] = [1, -1];
    const IDENTITY: [i32; 2] = [1, 1];
    let bond = kron(&SIGMA_Z, &SIGMA_Z);
    let n = chain.spins as usize;
    let mut total = vec![0i32; chain.dimension()];
    for p in 0..n - 1 {
        let mut term = vec![1i32];
        for _ in 0..p {
            term = kron(&term, &IDENTITY);
        }
        term = kron(&term, &bond);
        for _ in 0..n - p - 2 {
            term = kron(&term, &IDENTITY);
        }
        for (acc, t) in total.iter_mut().zip(&term) {
            *acc -= t;
        }
    }
    EnergyDiagonal { chain: *chain, values: total }
}

fn kron(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| x * y)).collect()
}

pub fn spectrum(diagonal: &EnergyDiagonal) -> EnergySpectrum {
    let mut groups: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for (i, &e) in diagonal.values.iter().enumerate() {
        groups.entry(e).or_default().push(i);
    }
    let entries = groups
        .into_iter()
        .map(|(lambda, marked_indices)| SpectrumEntry {
            lambda: lambda as i64,
            degeneracy: marked_indices.len(),
            marked_indices,
        })
        .collect();
    EnergySpectrum { chain: diagonal.chain, entries }
}

pub fn oracle_mask(diagonal: &EnergyDiagonal, lambda: i64) -> Result<OracleMask> {
    let marked: Vec<usize> = diagonal
        .values
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e as i64 == lambda)
        .map(|(i, _)| i)
        .collect();
    if marked.is_empty() {
        return Err(Error::NotEigenvalue { n: diagonal.spins(), lambda });
    }
    Ok(OracleMask { spins: diagonal.spins(), marked })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(n: u32) -> EnergyDiagonal {
        build_diagonal(&IsingChain::new(n).unwrap())
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn two_and_three_spins() {
        assert_eq!(diag(2).values(), &[-1, 1, 1, -1]);
        assert_eq!(diag(3).values(), &[-2, 0, 2, 0, 0, 2, 0, -2]);
    }

    #[test]
    fn eight_spin_ground_pair() {
        assert_eq!(diag(8).values().iter().filter(|&&e| e == -7).count(), 2);
    }

    #[test]
    fn table_degeneracies() {
        let s8 = spectrum(&diag(8));
        assert_eq!(s8.degeneracy(-3), 42);
        let s12 = spectrum(&diag(12));
        assert_eq!(s12.degeneracy(-5), 330);
        let s2 = spectrum(&diag(2));
        let got: Vec<_> = s2.entries().iter().map(|e| (e.lambda, e.degeneracy)).collect();
        assert_eq!(got, vec![(-1, 2), (1, 2)]);
    }

    #[test]
    fn degeneracy_matches_binomial_oracle() {
        for n in 2..=12u32 {
            let spec = spectrum(&diag(n));
            let total: usize = spec.entries().iter().map(|e| e.degeneracy).sum();
            assert_eq!(total, 1 << n);
            for k in 0..n as i64 {
                let lambda = -(n as i64 - 1 - 2 * k);
                let expect = 2 * binomial(n as u64 - 1, k as u64);
                assert_eq!(spec.degeneracy(lambda) as u64, expect, "n={n} k={k}");
                assert_eq!(spec.degeneracy(lambda), spec.degeneracy(-lambda));
            }
        }
    }

    #[test]
    fn tensor_form_agrees() {
        for n in 2..=12 {
            let chain = IsingChain::new(n).unwrap();
            assert_eq!(build_diagonal(&chain), build_diagonal_tensor(&chain), "n={n}");
        }
    }

    #[test]
    fn diagonal_entries_have_chain_parity() {
        for n in 2..=10u32 {
            let d = diag(n);
            assert_eq!(d.len(), 1 << n);
            for &e in d.values() {
                let k = (n as i32 - 1 + e) / 2;
                assert!((0..n as i32).contains(&k));
                assert_eq!(-(n as i32 - 1 - 2 * k), e);
            }
        }
    }

    #[test]
    fn masks() {
        assert_eq!(oracle_mask(&diag(2), -1).unwrap().marked(), &[0, 3]);
        assert_eq!(oracle_mask(&diag(12), -11).unwrap().marked(), &[0, 4095]);
        assert_eq!(
            oracle_mask(&diag(8), 8),
            Err(Error::NotEigenvalue { n: 8, lambda: 8 })
        );
    }

    #[test]
    fn marked_indices_sorted() {
        let spec = spectrum(&diag(9));
        for e in spec.entries() {
            assert!(e.marked_indices.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(e.marked_indices.len(), e.degeneracy);
        }
    }

    #[test]
    fn size_cap() {
        assert_eq!(IsingChain::new(1), Err(Error::Size { n: 1, cap: 24 }));
        assert!(IsingChain::new(25).is_err());
        assert!(IsingChain::with_cap(25, 26).is_ok());
        assert!(IsingChain::new(2).unwrap().with_epsilon(-1.0).is_err());
    }
}
