//! Schur-Weyl bookkeeping for N qubits: spin sectors, multiplicity
//! dimensions, parameter counts and Clebsch-Gordan tables.
//!
//! All spins are carried as doubled integers (`two_j`, `two_m`) so that
//! half-integer values stay exact and can be used as map keys. The m index
//! inside any spin-j space always runs descending, `m = j, j-1, ..., -j`;
//! every module in the crate relies on that single convention.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::linalg::RMat;
use nalgebra::DVector;

/// One total-spin sector of the N-qubit decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinSector {
    /// Twice the total spin j.
    pub two_j: u32,
    /// Dimension 2j + 1 of the spin space.
    pub dim_spin: usize,
    /// Dimension of the multiplicity space attached to this sector.
    pub dim_mult: u64,
}

/// Immutable sector list for N qubits, ascending in `two_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinStructure {
    n_qubits: usize,
    sectors: Vec<SpinSector>,
}

pub fn binomial(n: u64, k: i64) -> u64 {
    if k < 0 || k as u64 > n {
        return 0;
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Multiplicity dimension dim(K_j) for spin `two_j / 2` on `n` qubits.
pub fn multiplicity_dim(n: usize, two_j: u32) -> u64 {
    let half = (n as i64 - two_j as i64) / 2;
    binomial(n as u64, half) - binomial(n as u64, half - 1)
}

impl SpinStructure {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn sectors(&self) -> &[SpinSector] {
        &self.sectors
    }

    pub fn num_sectors(&self) -> usize {
        self.sectors.len()
    }

    /// Index of the sector with the given `two_j`, if listed.
    pub fn sector_index(&self, two_j: u32) -> Option<usize> {
        // sectors start at parity(N) and step by 2
        if two_j as usize > self.n_qubits || two_j % 2 != (self.n_qubits % 2) as u32 {
            return None;
        }
        Some((two_j as usize - self.n_qubits % 2) / 2)
    }

    pub fn sector(&self, two_j: u32) -> Option<&SpinSector> {
        self.sector_index(two_j).map(|i| &self.sectors[i])
    }

    /// Sector of maximal spin j = N/2 (the symmetric subspace).
    pub fn top_sector(&self) -> &SpinSector {
        self.sectors.last().expect("structure has at least one sector")
    }

    /// Number of real parameters of a PI Hermitian operator, `sum (2j+1)^2`.
    pub fn pi_parameter_count(&self) -> u64 {
        self.sectors
            .iter()
            .map(|s| (s.dim_spin * s.dim_spin) as u64)
            .sum()
    }
}

/// Builds the sector list for `n_qubits` from the binomial multiplicity formula.
pub fn build_structure(n_qubits: usize) -> Result<SpinStructure> {
    if n_qubits == 0 {
        return Err(Error::invalid("n_qubits must be at least 1"));
    }
    let start = (n_qubits % 2) as u32;
    let sectors: Vec<SpinSector> = (start..=n_qubits as u32)
        .step_by(2)
        .map(|two_j| SpinSector {
            two_j,
            dim_spin: two_j as usize + 1,
            dim_mult: multiplicity_dim(n_qubits, two_j),
        })
        .collect();
    debug_assert!(sectors.iter().all(|s| s.dim_mult >= 1));
    Ok(SpinStructure { n_qubits, sectors })
}

/// Exact number of real parameters of a PI PPT mixture on `n_qubits` qubits.
///
/// One symmetrised PPT operator per cut size k = 1..N'/2, each PI within its
/// two sides, contributes `C(k+3,3) * C(N-k+3,3)` parameters. The total grows
/// as O(N^7).
pub fn pmix_parameter_count(n_qubits: usize) -> Result<u64> {
    if n_qubits < 2 {
        return Err(Error::invalid("PPT mixtures need at least 2 qubits"));
    }
    let n_prime = if n_qubits % 2 == 0 { n_qubits } else { n_qubits - 1 };
    let count = |m: usize| binomial(m as u64 + 3, 3);
    Ok((1..=n_prime / 2)
        .map(|k| count(k) * count(n_qubits - k))
        .sum())
}

/// Clebsch-Gordan table for coupling spins `two_j_a/2` and `two_j_b/2`.
///
/// For every admissible total spin the table holds the real matrix of
/// coefficients `<j_a m_a; j_b m_b | j m>` with rows indexed by the product
/// pair `(m_a, m_b)` (m_a-major, both descending) and columns by m
/// (descending). Stacking the per-j blocks side by side gives a real
/// orthogonal change of basis of the product space.
#[derive(Debug, Clone)]
pub struct CgTable {
    pub two_j_a: u32,
    pub two_j_b: u32,
    blocks: BTreeMap<u32, RMat>,
}

impl CgTable {
    pub fn product_dim(&self) -> usize {
        (self.two_j_a as usize + 1) * (self.two_j_b as usize + 1)
    }

    /// Admissible total `two_j` values, ascending.
    pub fn total_two_js(&self) -> impl Iterator<Item = u32> + '_ {
        self.blocks.keys().copied()
    }

    /// Coefficient matrix for one total spin; rows = product pairs, cols = m descending.
    pub fn block(&self, two_j: u32) -> Option<&RMat> {
        self.blocks.get(&two_j)
    }

    /// Row index of the product pair `(two_m_a, two_m_b)`.
    pub fn row_index(&self, two_m_a: i32, two_m_b: i32) -> usize {
        let ia = ((self.two_j_a as i32 - two_m_a) / 2) as usize;
        let ib = ((self.two_j_b as i32 - two_m_b) / 2) as usize;
        ia * (self.two_j_b as usize + 1) + ib
    }

    /// Single coefficient `<j_a m_a; j_b m_b | j m>`.
    pub fn coefficient(&self, two_m_a: i32, two_m_b: i32, two_j: u32, two_m: i32) -> f64 {
        match self.blocks.get(&two_j) {
            Some(b) => {
                let col = ((two_j as i32 - two_m) / 2) as usize;
                b[(self.row_index(two_m_a, two_m_b), col)]
            }
            None => 0.0,
        }
    }

    /// All blocks concatenated column-wise (ascending total j); orthogonal.
    pub fn stacked(&self) -> RMat {
        let dim = self.product_dim();
        let mut out = RMat::zeros(dim, dim);
        let mut col = 0;
        for b in self.blocks.values() {
            out.view_mut((0, col), (dim, b.ncols())).copy_from(b);
            col += b.ncols();
        }
        out
    }
}

fn doubled_ms(two_j: u32) -> impl Iterator<Item = i32> {
    // m = j, j-1, ..., -j in doubled units
    (0..=two_j).map(move |i| two_j as i32 - 2 * i as i32)
}

/// Lowering amplitude `sqrt(j(j+1) - m(m-1))` in doubled units.
fn lowering_amp(two_j: u32, two_m: i32) -> f64 {
    let tj = two_j as i64;
    let tm = two_m as i64;
    ((tj * (tj + 2) - tm * (tm - 2)) as f64 / 4.0).sqrt()
}

fn build_cg(two_j_a: u32, two_j_b: u32) -> CgTable {
    let d_b = two_j_b as usize + 1;
    let dim = (two_j_a as usize + 1) * d_b;
    let row = |two_m_a: i32, two_m_b: i32| -> usize {
        let ia = ((two_j_a as i32 - two_m_a) / 2) as usize;
        let ib = ((two_j_b as i32 - two_m_b) / 2) as usize;
        ia * d_b + ib
    };

    // Lowers a vector expanded over product pairs by J- = J-_a + J-_b.
    let lower = |v: &DVector<f64>| -> DVector<f64> {
        let mut out = DVector::zeros(dim);
        for two_m_a in doubled_ms(two_j_a) {
            for two_m_b in doubled_ms(two_j_b) {
                let c = v[row(two_m_a, two_m_b)];
                if c == 0.0 {
                    continue;
                }
                if two_m_a > -(two_j_a as i32) {
                    out[row(two_m_a - 2, two_m_b)] += c * lowering_amp(two_j_a, two_m_a);
                }
                if two_m_b > -(two_j_b as i32) {
                    out[row(two_m_a, two_m_b - 2)] += c * lowering_amp(two_j_b, two_m_b);
                }
            }
        }
        out
    };

    let two_j_max = two_j_a + two_j_b;
    let two_j_min = two_j_a.abs_diff(two_j_b);
    let mut blocks: BTreeMap<u32, RMat> = BTreeMap::new();

    // Descend over total spins; each new highest-weight vector is the
    // one-dimensional orthogonal complement of the already-built |j', m = j>
    // states inside the m = j weight space.
    let mut two_j = two_j_max;
    loop {
        let mut top = DVector::zeros(dim);
        if two_j == two_j_max {
            top[row(two_j_a as i32, two_j_b as i32)] = 1.0;
        } else {
            // Seed at maximal m_a (Condon-Shortley sign anchor).
            let two_m_a_max = (two_j_a as i32).min(two_j as i32 + two_j_b as i32);
            top[row(two_m_a_max, two_j as i32 - two_m_a_max)] = 1.0;
            // Two Gram-Schmidt passes against the higher-j states at this m.
            for _ in 0..2 {
                for (&prev_two_j, block) in blocks.iter() {
                    let col = ((prev_two_j - two_j) / 2) as usize;
                    let overlap = block.column(col).dot(&top);
                    top -= block.column(col) * overlap;
                }
                let norm = top.norm();
                top /= norm;
            }
            if top[row(two_m_a_max, two_j as i32 - two_m_a_max)] < 0.0 {
                top = -top;
            }
        }

        let mut block = RMat::zeros(dim, two_j as usize + 1);
        block.set_column(0, &top);
        let mut current = top;
        for (col, two_m) in doubled_ms(two_j).enumerate().skip(1) {
            current = lower(&current) / lowering_amp(two_j, two_m + 2);
            block.set_column(col, &current);
        }
        blocks.insert(two_j, block);

        if two_j == two_j_min {
            break;
        }
        two_j -= 2;
    }

    let table = CgTable { two_j_a, two_j_b, blocks };
    debug_assert!(selection_rule_holds(&table));
    table
}

// Structural zero outside m_a + m_b = m.
fn selection_rule_holds(t: &CgTable) -> bool {
    for (&two_j, block) in &t.blocks {
        for two_m_a in doubled_ms(t.two_j_a) {
            for two_m_b in doubled_ms(t.two_j_b) {
                for (col, two_m) in doubled_ms(two_j).enumerate() {
                    let c = block[(t.row_index(two_m_a, two_m_b), col)];
                    if two_m_a + two_m_b != two_m && c.abs() > 1e-13 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

type CgCache = RwLock<HashMap<(u32, u32), Arc<CgTable>>>;

fn cg_cache() -> &'static CgCache {
    static CACHE: OnceLock<CgCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Clebsch-Gordan table for `(two_j_a, two_j_b)`, computed once per pair by
/// ladder recursion (Condon-Shortley phases) and cached process-wide.
pub fn cg_table(two_j_a: u32, two_j_b: u32) -> Arc<CgTable> {
    if let Some(t) = cg_cache().read().unwrap().get(&(two_j_a, two_j_b)) {
        return Arc::clone(t);
    }
    let table = Arc::new(build_cg(two_j_a, two_j_b));
    cg_cache()
        .write()
        .unwrap()
        .entry((two_j_a, two_j_b))
        .or_insert(table)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn structure_three_qubits() {
        let s = build_structure(3).unwrap();
        assert_eq!(s.n_qubits(), 3);
        let sectors = s.sectors();
        assert_eq!(sectors.len(), 2);
        assert_eq!((sectors[0].two_j, sectors[0].dim_mult), (1, 2));
        assert_eq!((sectors[1].two_j, sectors[1].dim_mult), (3, 1));
    }

    #[test]
    fn structure_single_qubit() {
        let s = build_structure(1).unwrap();
        assert_eq!(s.sectors().len(), 1);
        assert_eq!(s.sectors()[0].two_j, 1);
        assert_eq!(s.sectors()[0].dim_mult, 1);
        assert_eq!(s.pi_parameter_count(), 4);
    }

    #[test]
    fn structure_four_qubits() {
        let s = build_structure(4).unwrap();
        let dims: Vec<(u32, u64)> = s.sectors().iter().map(|x| (x.two_j, x.dim_mult)).collect();
        assert_eq!(dims, vec![(0, 2), (2, 3), (4, 1)]);
        let total: u64 = s
            .sectors()
            .iter()
            .map(|x| x.dim_spin as u64 * x.dim_mult)
            .sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn zero_qubits_rejected() {
        assert!(build_structure(0).is_err());
    }

    #[test]
    fn completeness_and_parameter_count_up_to_twelve() {
        for n in 1..=12usize {
            let s = build_structure(n).unwrap();
            let total: u64 = s
                .sectors()
                .iter()
                .map(|x| x.dim_spin as u64 * x.dim_mult)
                .sum();
            assert_eq!(total, 1u64 << n, "completeness at N={n}");
            assert_eq!(
                s.pi_parameter_count(),
                binomial(n as u64 + 3, 3),
                "parameter count at N={n}"
            );
            assert_eq!(s.top_sector().dim_mult, 1);
        }
    }

    #[test]
    fn pi_parameter_count_examples() {
        assert_eq!(build_structure(3).unwrap().pi_parameter_count(), 20);
        assert_eq!(build_structure(10).unwrap().pi_parameter_count(), 286);
    }

    #[test]
    fn pmix_parameter_count_examples() {
        assert_eq!(pmix_parameter_count(2).unwrap(), 16);
        assert_eq!(pmix_parameter_count(3).unwrap(), 80);
        assert_eq!(pmix_parameter_count(4).unwrap(), 480);
        assert!(pmix_parameter_count(1).is_err());
    }

    #[test]
    fn cg_half_half() {
        // 1/2 x 1/2: singlet and triplet
        let t = cg_table(1, 1);
        let s = 1.0 / 2.0f64.sqrt();
        assert_abs_diff_eq!(t.coefficient(1, -1, 2, 0), s, epsilon = 1e-14);
        assert_abs_diff_eq!(t.coefficient(1, -1, 0, 0), s, epsilon = 1e-14);
        assert_abs_diff_eq!(t.coefficient(-1, 1, 0, 0), -s, epsilon = 1e-14);
        assert_abs_diff_eq!(t.coefficient(1, 1, 2, 2), 1.0, epsilon = 1e-14);

        let u = t.stacked();
        let gram = u.transpose() * &u;
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(gram[(i, j)], expect, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn cg_coupling_with_spin_zero_is_identity() {
        for two_j_a in [0u32, 1, 2, 5] {
            let t = cg_table(two_j_a, 0);
            let b = t.block(two_j_a).unwrap();
            let dim = two_j_a as usize + 1;
            for r in 0..dim {
                for c in 0..dim {
                    let expect = if r == c { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(b[(r, c)], expect, epsilon = 1e-14);
                }
            }
        }
    }

    #[test]
    fn cg_orthogonality_small_spins() {
        for two_j_a in 0..=10u32 {
            for two_j_b in 0..=10u32 {
                let t = cg_table(two_j_a, two_j_b);
                let u = t.stacked();
                let gram = u.transpose() * &u;
                let dim = t.product_dim();
                let mut worst = 0.0f64;
                for i in 0..dim {
                    for j in 0..dim {
                        let expect = if i == j { 1.0 } else { 0.0 };
                        worst = worst.max((gram[(i, j)] - expect).abs());
                    }
                }
                assert!(
                    worst <= 1e-12,
                    "orthogonality defect {worst:.2e} for ({two_j_a},{two_j_b})"
                );
            }
        }
    }

    #[test]
    fn cg_matches_known_one_half_values() {
        // 1 x 1/2 from standard tables
        let t = cg_table(2, 1);
        assert_abs_diff_eq!(
            t.coefficient(2, -1, 3, 1),
            (1.0f64 / 3.0).sqrt(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            t.coefficient(0, 1, 3, 1),
            (2.0f64 / 3.0).sqrt(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            t.coefficient(2, -1, 1, 1),
            (2.0f64 / 3.0).sqrt(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            t.coefficient(0, 1, 1, 1),
            -(1.0f64 / 3.0).sqrt(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn branching_multiplicities_sum_to_parent() {
        // dim K_j(N) = sum over triangle-compatible (j_k, j_kbar) of products
        for n in 2..=12usize {
            for k in 1..n {
                let left = build_structure(k).unwrap();
                let right = build_structure(n - k).unwrap();
                let parent = build_structure(n).unwrap();
                for sector in parent.sectors() {
                    let mut total = 0u64;
                    for a in left.sectors() {
                        for b in right.sectors() {
                            let lo = a.two_j.abs_diff(b.two_j);
                            let hi = a.two_j + b.two_j;
                            if sector.two_j >= lo && sector.two_j <= hi {
                                total += a.dim_mult * b.dim_mult;
                            }
                        }
                    }
                    assert_eq!(
                        total, sector.dim_mult,
                        "branching mismatch N={n} k={k} two_j={}",
                        sector.two_j
                    );
                }
            }
        }
    }
}
