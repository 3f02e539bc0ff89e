//! Weight, diagram, tableau and Gelfand-Tsetlin combinatorics for `gl(M,N)`:
//! hook Young diagrams, the tableau basis of polynomial simple modules,
//! classical characters, branching sets, lowest weights of duals, and the
//! semi-infinite tableaux indexing asymptotic module bases.

use std::collections::BTreeMap;
use std::fmt;

/// Cap on the number of diagram cells accepted by enumeration routines.
pub const DEFAULT_CELL_CAP: usize = 64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum YoungError {
    NotDominant(Weight),
    CellCapExceeded { cells: usize, cap: usize },
    LevelOutOfRange(usize),
    EmptyWeightSpace,
}

impl fmt::Display for YoungError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YoungError::NotDominant(w) => write!(f, "weight {w} is not dominant"),
            YoungError::CellCapExceeded { cells, cap } => {
                write!(f, "diagram has {cells} cells, cap is {cap}")
            }
            YoungError::LevelOutOfRange(k) => write!(f, "level {k} out of range"),
            YoungError::EmptyWeightSpace => write!(f, "required weight space is zero"),
        }
    }
}

impl std::error::Error for YoungError {}

/// The `(M_k, N_k)` profile of level `k` in the subalgebra chain
/// `gl(1,0) < gl(2,0) < ... < gl(M,0) < gl(M,1) < ... < gl(M,N)`.
pub fn level_profile(m: usize, _n: usize, k: usize) -> (usize, usize) {
    if k <= m {
        (k, 0)
    } else {
        (m, k - m)
    }
}

/// An integer weight of `gl(M,N)` in the epsilon-coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    m: usize,
    n: usize,
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(m: usize, n: usize, coords: Vec<i64>) -> Weight {
        assert_eq!(coords.len(), m + n, "weight length must be M+N");
        Weight { m, n, coords }
    }

    pub fn zero(m: usize, n: usize) -> Weight {
        Weight::new(m, n, vec![0; m + n])
    }

    /// `eps_i`, 1-based.
    pub fn eps(m: usize, n: usize, i: usize) -> Weight {
        let mut w = Weight::zero(m, n);
        w.coords[i - 1] = 1;
        w
    }

    /// The fundamental weight `varpi_r`.
    pub fn fundamental(m: usize, n: usize, r: usize) -> Weight {
        let mut w = Weight::zero(m, n);
        if r <= m {
            for j in 0..r {
                w.coords[j] = 1;
            }
        } else {
            for j in r..(m + n) {
                w.coords[j] = -1;
            }
        }
        w
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!((self.m, self.n), (other.m, other.n));
        Weight::new(
            self.m,
            self.n,
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!((self.m, self.n), (other.m, other.n));
        Weight::new(
            self.m,
            self.n,
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.m, self.n, self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::new(self.m, self.n, self.coords.iter().map(|a| a * k).collect())
    }

    /// The bilinear form `(eps_i, eps_j) = delta_{ij} d_i`.
    pub fn pair(&self, other: &Weight) -> i64 {
        assert_eq!((self.m, self.n), (other.m, other.n));
        self.coords
            .iter()
            .zip(&other.coords)
            .enumerate()
            .map(|(i, (a, b))| {
                let d = if i < self.m { 1 } else { -1 };
                a * b * d
            })
            .sum()
    }

    pub fn ht(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Parity of the weight: the mod-2 sum of its odd coordinates.
    pub fn parity_is_odd(&self) -> bool {
        self.coords[self.m..].iter().sum::<i64>() % 2 != 0
    }

    /// Dominance for the hook-diagram combinatorics:
    /// coordinates nonnegative, weakly decreasing off the `M`-boundary, and
    /// the hook condition on the odd part.
    pub fn is_dominant(&self) -> bool {
        let mn = self.m + self.n;
        if self.coords.iter().any(|&c| c < 0) {
            return false;
        }
        for i in 1..mn {
            if i == self.m {
                continue;
            }
            if self.coords[i - 1] < self.coords[i] {
                return false;
            }
        }
        for j in 1..=self.n {
            if self.coords[self.m + j - 1] > 0 && self.coords[self.m - 1] < j as i64 {
                return false;
            }
        }
        true
    }

    /// Whether `self` lies in the nonnegative root cone: all partial sums of
    /// coordinates nonnegative and the total zero.
    pub fn in_positive_root_cone(&self) -> bool {
        let mut acc = 0i64;
        for (idx, c) in self.coords.iter().enumerate() {
            acc += c;
            if idx + 1 < self.coords.len() && acc < 0 {
                return false;
            }
        }
        acc == 0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A hook Young diagram, stored as weakly decreasing row lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Diagram {
    rows: Vec<usize>,
}

impl Diagram {
    pub fn new(mut rows: Vec<usize>) -> Diagram {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        assert!(
            rows.windows(2).all(|w| w[0] >= w[1]),
            "row lengths must be weakly decreasing"
        );
        Diagram { rows }
    }

    pub fn rectangle(height: usize, width: usize) -> Diagram {
        if width == 0 {
            Diagram::new(vec![])
        } else {
            Diagram::new(vec![width; height])
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    pub fn col_height(&self, j: usize) -> usize {
        self.rows.iter().take_while(|&&len| len >= j).count()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.row_len(i) >= j
    }

    /// Row-major list of cells (1-based).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.cell_count());
        for (i, len) in self.rows.iter().enumerate() {
            for j in 1..=*len {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// The hook constraint for `gl(M,N)`: no cell at `(M+1, N+1)`.
    pub fn fits_hook(&self, m: usize, n: usize) -> bool {
        self.row_len(m + 1) <= n
    }
}

/// Bijection from dominant weights to hook diagrams: rows `1..=M` have
/// length `lambda_i`; column `j <= N` extends `lambda_{M+j}` cells below
/// row `M`.
pub fn diagram_of(lambda: &Weight) -> Result<Diagram, YoungError> {
    if !lambda.is_dominant() {
        return Err(YoungError::NotDominant(lambda.clone()));
    }
    let m = lambda.m();
    let n = lambda.n();
    // depth below row M of column j
    let max_depth = (1..=n).map(|j| lambda.coord(m + j)).max().unwrap_or(0) as usize;
    let mut rows = Vec::new();
    for i in 1..=m {
        rows.push(lambda.coord(i) as usize);
    }
    for extra in 1..=max_depth {
        // row M+extra contains columns j with lambda_{M+j} >= extra
        let len = (1..=n)
            .take_while(|&j| lambda.coord(m + j) >= extra as i64)
            .count();
        rows.push(len);
    }
    Ok(Diagram::new(rows))
}

/// Inverse of [`diagram_of`].
pub fn weight_of_diagram(m: usize, n: usize, diagram: &Diagram) -> Weight {
    assert!(diagram.fits_hook(m, n), "diagram violates the hook condition");
    let mut coords = vec![0i64; m + n];
    for i in 1..=m {
        coords[i - 1] = diagram.row_len(i) as i64;
    }
    for j in 1..=n {
        let c = diagram.col_height(j) as i64;
        coords[m + j - 1] = (c - m as i64).max(0);
    }
    Weight::new(m, n, coords)
}

/// A filling of a hook diagram by indices of `I = {1..M+N}` subject to
/// the semistandard conditions: weakly increasing along rows and columns,
/// entries `<= M` strict down columns, entries `> M` strict along rows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tableau {
    m: usize,
    n: usize,
    diagram: Diagram,
    entries: Vec<usize>,
}

impl Tableau {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        let cells = self.diagram.cells();
        let pos = cells
            .iter()
            .position(|&c| c == (i, j))
            .expect("cell not in diagram");
        self.entries[pos]
    }

    /// Content weight: the sum of `eps_{f(cell)}` over all cells.
    pub fn content(&self) -> Weight {
        let mut coords = vec![0i64; self.m + self.n];
        for e in &self.entries {
            coords[e - 1] += 1;
        }
        Weight::new(self.m, self.n, coords)
    }

    /// Checks T1-T3 for a candidate filling.
    pub fn is_valid(m: usize, diagram: &Diagram, entries: &[usize]) -> bool {
        let cells = diagram.cells();
        let index = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
        for (pos, &(i, j)) in cells.iter().enumerate() {
            let v = entries[pos];
            if j > 1 {
                let left = entries[index(i, j - 1).unwrap()];
                if v < left || (left > m && v == left) {
                    return false;
                }
            }
            if i > 1 {
                if let Some(up_pos) = index(i - 1, j) {
                    let up = entries[up_pos];
                    if v < up || (up <= m && v == up) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Enumerates all tableaux of the given shape at level `(m, n)`, in
/// lexicographic order of the row-major entry sequence.
pub fn enumerate_tableaux(m: usize, n: usize, diagram: &Diagram) -> Result<Vec<Tableau>, YoungError> {
    enumerate_tableaux_capped(m, n, diagram, DEFAULT_CELL_CAP)
}

pub fn enumerate_tableaux_capped(
    m: usize,
    n: usize,
    diagram: &Diagram,
    cap: usize,
) -> Result<Vec<Tableau>, YoungError> {
    let cells = diagram.cells();
    if cells.len() > cap {
        return Err(YoungError::CellCapExceeded {
            cells: cells.len(),
            cap,
        });
    }
    let alphabet = m + n;
    let mut out = Vec::new();
    let mut entries: Vec<usize> = Vec::with_capacity(cells.len());
    // positions of the left and up neighbors for each cell
    let index_of: BTreeMap<(usize, usize), usize> = cells
        .iter()
        .enumerate()
        .map(|(pos, &c)| (c, pos))
        .collect();
    fn rec(
        m: usize,
        alphabet: usize,
        cells: &[(usize, usize)],
        index_of: &BTreeMap<(usize, usize), usize>,
        entries: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if entries.len() == cells.len() {
            out.push(entries.clone());
            return;
        }
        let (i, j) = cells[entries.len()];
        let mut lo = 1usize;
        if j > 1 {
            let left = entries[index_of[&(i, j - 1)]];
            lo = lo.max(if left > m { left + 1 } else { left });
        }
        if i > 1 {
            if let Some(&up_pos) = index_of.get(&(i - 1, j)) {
                let up = entries[up_pos];
                lo = lo.max(if up <= m { up + 1 } else { up });
            }
        }
        for v in lo..=alphabet {
            entries.push(v);
            rec(m, alphabet, cells, index_of, entries, out);
            entries.pop();
        }
    }
    let mut raw = Vec::new();
    rec(m, alphabet, &cells, &index_of, &mut entries, &mut raw);
    for e in raw {
        debug_assert!(Tableau::is_valid(m, diagram, &e));
        out.push(Tableau {
            m,
            n,
            diagram: diagram.clone(),
            entries: e,
        });
    }
    Ok(out)
}

/// The classical character of `L(lambda)`: weight multiplicities summed
/// over the tableau basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    pub m: usize,
    pub n: usize,
    pub multiplicities: BTreeMap<Vec<i64>, i64>,
}

impl Character {
    pub fn dimension(&self) -> i64 {
        self.multiplicities.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        self.multiplicities.get(w.coords()).copied().unwrap_or(0)
    }
}

pub fn character(lambda: &Weight) -> Result<Character, YoungError> {
    let diagram = diagram_of(lambda)?;
    let tabs = enumerate_tableaux(lambda.m(), lambda.n(), &diagram)?;
    let mut multiplicities: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for t in &tabs {
        *multiplicities
            .entry(t.content().coords().to_vec())
            .or_insert(0) += 1;
    }
    Ok(Character {
        m: lambda.m(),
        n: lambda.n(),
        multiplicities,
    })
}

/// A Gelfand-Tsetlin pattern: one dominant weight per level of the chain,
/// the top level being the highest weight itself.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GTPattern {
    pub levels: Vec<Weight>,
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.levels.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

/// Restriction of a tableau to the level-`k` alphabet, as a weight of
/// `gl(M_k, N_k)`.
fn level_weight(t: &Tableau, k: usize) -> Weight {
    let (mk, nk) = level_profile(t.m(), t.n(), k);
    let cells = t.diagram().cells();
    // entries weakly increase along rows, so cells with entry <= k form
    // row prefixes
    let nrows = t.diagram().rows().len();
    let mut rows = vec![0usize; nrows];
    for (pos, &(i, _)) in cells.iter().enumerate() {
        if t.entries()[pos] <= k {
            rows[i - 1] += 1;
        }
    }
    let sub = Diagram::new(rows);
    weight_of_diagram(mk, nk, &sub)
}

/// The tableau-to-pattern bijection.
pub fn tableau_to_gt(t: &Tableau) -> GTPattern {
    let levels = (1..=(t.m() + t.n())).map(|k| level_weight(t, k)).collect();
    GTPattern { levels }
}

/// Inverse bijection: the entry at a cell is the first level whose diagram
/// contains it.
pub fn gt_to_tableau(m: usize, n: usize, p: &GTPattern) -> Result<Tableau, YoungError> {
    let top = p.levels.last().ok_or(YoungError::LevelOutOfRange(0))?;
    let diagram = diagram_of(&lift_weight(m, n, top))?;
    let level_diagrams: Vec<Diagram> = p
        .levels
        .iter()
        .map(diagram_of)
        .collect::<Result<_, _>>()?;
    let mut entries = Vec::new();
    for (i, j) in diagram.cells() {
        let k = level_diagrams
            .iter()
            .position(|d| d.contains(i, j))
            .ok_or(YoungError::LevelOutOfRange(0))?
            + 1;
        entries.push(k);
    }
    Ok(Tableau {
        m,
        n,
        diagram,
        entries,
    })
}

/// Reinterprets a level weight inside the full `gl(M,N)` lattice.
pub fn lift_weight(m: usize, n: usize, w: &Weight) -> Weight {
    let mut coords = vec![0i64; m + n];
    for (idx, c) in w.coords().iter().enumerate() {
        // level coordinates occupy the first M_k even and first N_k odd slots
        if idx < w.m() {
            coords[idx] = *c;
        } else {
            coords[m + (idx - w.m())] = *c;
        }
    }
    Weight::new(m, n, coords)
}

/// All Gelfand-Tsetlin patterns over `lambda`, ordered by their tableaux.
pub fn gt_patterns(lambda: &Weight) -> Result<Vec<GTPattern>, YoungError> {
    let diagram = diagram_of(lambda)?;
    let tabs = enumerate_tableaux(lambda.m(), lambda.n(), &diagram)?;
    Ok(tabs.iter().map(tableau_to_gt).collect())
}

/// The branching set `S_k(lambda)`: level-`(k-1)` weights reachable by
/// restricting tableaux at level `k`. Returned sorted and deduplicated;
/// the construction is multiplicity-free as a set.
pub fn branching(m: usize, n: usize, lambda: &Weight, k: usize) -> Result<Vec<Weight>, YoungError> {
    if k < 2 || k > m + n {
        return Err(YoungError::LevelOutOfRange(k));
    }
    let (mk, nk) = level_profile(m, n, k);
    assert_eq!((lambda.m(), lambda.n()), (mk, nk), "weight/level mismatch");
    let diagram = diagram_of(lambda)?;
    let tabs = enumerate_tableaux(mk, nk, &diagram)?;
    let mut out: Vec<Weight> = Vec::new();
    for t in &tabs {
        let w = level_weight(t, k - 1);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out.sort();
    Ok(out)
}

/// Lowest weight `lambda_b` of `L(lambda)`, from the row/column profile of
/// the diagram: `r_i' = max(r_i - N, 0)` reversed on the even slots, column
/// heights reversed on the odd slots.
pub fn lowest_weight(lambda: &Weight) -> Result<Weight, YoungError> {
    let diagram = diagram_of(lambda)?;
    let m = lambda.m();
    let n = lambda.n();
    let mut coords = vec![0i64; m + n];
    for i in 1..=m {
        let r = diagram.row_len(m + 1 - i) as i64;
        coords[i - 1] = (r - n as i64).max(0);
    }
    for j in 1..=n {
        coords[m + j - 1] = diagram.col_height(n + 1 - j) as i64;
    }
    Ok(Weight::new(m, n, coords))
}

/// Highest weight of the dual module: `-lambda_b`.
pub fn dual_highest(lambda: &Weight) -> Result<Weight, YoungError> {
    Ok(lowest_weight(lambda)?.neg())
}

/// Report of the weight-multiplicity stabilization check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub reference_level: usize,
    pub reference_multiplicity: i64,
    pub checked_levels: Vec<(usize, i64)>,
    pub pass: bool,
}

/// Verifies `dim L(k varpi_r)_{k varpi_r - beta} = dim L(rl varpi_r)_{rl
/// varpi_r - beta}` for `k` in `[rl, rl+3]`, given that the weight space at
/// level `l` is nonzero.
pub fn stabilization_check(
    m: usize,
    n: usize,
    r: usize,
    beta: &Weight,
    l: usize,
) -> Result<StabilizationReport, YoungError> {
    assert!(r >= 1 && r <= m, "stabilization applies to r <= M");
    let mult_at = |k: usize| -> Result<i64, YoungError> {
        let lam = Weight::fundamental(m, n, r).scale(k as i64);
        let target = lam.sub(beta);
        Ok(character(&lam)?.multiplicity(&target))
    };
    if mult_at(l)? == 0 {
        return Err(YoungError::EmptyWeightSpace);
    }
    let base = r * l;
    let reference = mult_at(base)?;
    let mut checked = Vec::new();
    let mut pass = true;
    for k in base..=(base + 3) {
        let mk = mult_at(k)?;
        if mk != reference {
            pass = false;
        }
        checked.push((k, mk));
    }
    Ok(StabilizationReport {
        reference_level: base,
        reference_multiplicity: reference,
        checked_levels: checked,
        pass,
    })
}

/// A semi-infinite tableau of node `r` at depth `k`, stored by its window.
///
/// For `r <= M` the window is an `r x k` rectangle tableau `g`, the full map
/// being `f(i,j) = g(i, j+k+1)` for `-k <= j <= -1` and `f(i,j) = i` for
/// `j < -k`. For `r > M` the window is a `k x (M+N-r)` rectangle tableau
/// with tail rows `f(i,j) = r+j` for `i > k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SemiInfiniteTableau {
    pub r: usize,
    pub k: usize,
    pub window: Tableau,
}

impl SemiInfiniteTableau {
    /// Value of the full map, `r <= M` variant (`j < 0`).
    pub fn value_even(&self, i: usize, j: i64) -> usize {
        assert!(j < 0 && i >= 1 && i <= self.r);
        let col = j + self.k as i64 + 1;
        if col < 1 {
            i
        } else {
            self.window.entry(i, col as usize)
        }
    }

    /// Value of the full map, `r > M` variant (`j >= 1`).
    pub fn value_odd(&self, i: usize, j: usize) -> usize {
        if i <= self.k {
            self.window.entry(i, j)
        } else {
            self.r + j
        }
    }

    /// Stable key identifying the tableau inside the union over all depths:
    /// the list of non-frozen entries.
    pub fn stable_key(&self, m: usize) -> Vec<(usize, i64, usize)> {
        let mut out = Vec::new();
        if self.r <= m {
            for i in 1..=self.r {
                for j in -(self.k as i64)..0 {
                    let v = self.value_even(i, j);
                    if v != i {
                        out.push((i, j, v));
                    }
                }
            }
        } else {
            let width = self.window.diagram().row_len(1);
            for i in 1..=self.k {
                for j in 1..=width {
                    let v = self.value_odd(i, j);
                    if v != self.r + j {
                        out.push((i, j as i64, v));
                    }
                }
            }
        }
        out
    }
}

/// Enumerates the depth-`k` slice of semi-infinite tableaux at node `r`.
pub fn semi_infinite_tableaux(
    m: usize,
    n: usize,
    r: usize,
    k: usize,
) -> Result<Vec<SemiInfiniteTableau>, YoungError> {
    assert!(r >= 1 && r < m + n, "r must be a Dynkin node");
    let windows = if r <= m {
        enumerate_tableaux(m, n, &Diagram::rectangle(r, k))?
    } else {
        enumerate_tableaux(m, n, &Diagram::rectangle(k, m + n - r))?
    };
    Ok(windows
        .into_iter()
        .map(|window| SemiInfiniteTableau { r, k, window })
        .collect())
}

/// Enumerates all dominant weights of height at most `max_ht`.
pub fn dominant_weights_up_to(m: usize, n: usize, max_ht: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut coords = vec![0i64; m + n];
    fn rec(m: usize, n: usize, pos: usize, left: i64, coords: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if pos == m + n {
            let w = Weight::new(m, n, coords.clone());
            if w.is_dominant() {
                out.push(w);
            }
            return;
        }
        for v in 0..=left {
            coords[pos] = v;
            rec(m, n, pos + 1, left - v, coords, out);
        }
        coords[pos] = 0;
    }
    rec(m, n, 0, max_ht, &mut coords, &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w21(coords: [i64; 3]) -> Weight {
        Weight::new(2, 1, coords.to_vec())
    }

    #[test]
    fn dominance_examples() {
        assert!(w21([2, 0, 0]).is_dominant());
        // eps_3 alone fails the hook condition
        assert!(!w21([0, 0, 1]).is_dominant());
        assert!(Weight::zero(2, 1).is_dominant());
    }

    #[test]
    fn diagram_rectangle_for_k_varpi_r() {
        // k varpi_r with r <= M is the r x k rectangle
        for (m, n, r, k) in [(2usize, 1usize, 2usize, 3usize), (2, 2, 1, 4)] {
            let lam = Weight::fundamental(m, n, r).scale(k as i64);
            let d = diagram_of(&lam).unwrap();
            assert_eq!(d, Diagram::rectangle(r, k));
        }
        assert_eq!(
            diagram_of(&Weight::zero(2, 1)).unwrap(),
            Diagram::new(vec![])
        );
    }

    #[test]
    fn diagram_roundtrip_exhaustive() {
        for lam in dominant_weights_up_to(2, 2, 6) {
            let d = diagram_of(&lam).unwrap();
            assert_eq!(weight_of_diagram(2, 2, &d), lam, "roundtrip for {lam}");
        }
    }

    #[test]
    fn tableau_counts() {
        // (1,2): a column of height k has exactly 2k+1 tableaux
        for k in 1..=6usize {
            let d = Diagram::rectangle(k, 1);
            let tabs = enumerate_tableaux(1, 2, &d).unwrap();
            assert_eq!(tabs.len(), 2 * k + 1, "column height {k}");
        }
        // (2,1): the 2 x k rectangle has exactly 4 tableaux for every k
        for k in 1..=6usize {
            let d = Diagram::rectangle(2, k);
            let tabs = enumerate_tableaux(2, 1, &d).unwrap();
            assert_eq!(tabs.len(), 4, "rectangle width {k}");
        }
        // empty diagram: one empty tableau
        let tabs = enumerate_tableaux(2, 1, &Diagram::new(vec![])).unwrap();
        assert_eq!(tabs.len(), 1);
        assert!(tabs[0].entries().is_empty());
    }

    #[test]
    fn character_examples() {
        // chi(V) = sum over basis indices
        let c = character(&Weight::eps(2, 1, 1)).unwrap();
        assert_eq!(c.dimension(), 3);
        for i in 1..=3 {
            assert_eq!(c.multiplicity(&Weight::eps(2, 1, i)), 1);
        }
        let c0 = character(&Weight::zero(2, 1)).unwrap();
        assert_eq!(c0.dimension(), 1);
        assert_eq!(c0.multiplicity(&Weight::zero(2, 1)), 1);
        // dim L(k varpi_2) = 4 for k <= 5 at (2,1)
        for k in 1..=5 {
            let lam = Weight::fundamental(2, 1, 2).scale(k);
            assert_eq!(character(&lam).unwrap().dimension(), 4);
        }
    }

    #[test]
    fn character_highest_weight_multiplicity_one() {
        for lam in dominant_weights_up_to(2, 1, 4) {
            let c = character(&lam).unwrap();
            assert_eq!(c.multiplicity(&lam), 1, "highest weight of {lam}");
        }
    }

    #[test]
    fn gt_patterns_for_two_eps1() {
        let pats = gt_patterns(&w21([2, 0, 0])).unwrap();
        assert_eq!(pats.len(), 5);
        let as_tuples: Vec<(Vec<i64>, Vec<i64>)> = pats
            .iter()
            .map(|p| {
                (
                    p.levels[0].coords().to_vec(),
                    p.levels[1].coords().to_vec(),
                )
            })
            .collect();
        let expect = [
            (vec![2], vec![2, 0]),
            (vec![1], vec![2, 0]),
            (vec![1], vec![1, 0]),
            (vec![0], vec![2, 0]),
            (vec![0], vec![1, 0]),
        ];
        for e in &expect {
            assert!(as_tuples.contains(e), "missing pattern {e:?}");
        }
        // (0, 0, 2eps1) is not permitted
        assert!(!as_tuples.contains(&(vec![0], vec![0, 0])));
        for p in &pats {
            assert_eq!(p.levels[2], w21([2, 0, 0]));
        }
    }

    #[test]
    fn gt_patterns_classical_interlacing() {
        // N = 0 reproduces the interlacing condition
        let lam = Weight::new(3, 0, vec![3, 1, 0]);
        for p in gt_patterns(&lam).unwrap() {
            for k in 2..=3usize {
                let upper = &p.levels[k - 1];
                let lower = &p.levels[k - 2];
                for i in 1..k {
                    assert!(upper.coord(i) >= lower.coord(i));
                    assert!(lower.coord(i) >= upper.coord(i + 1));
                }
            }
        }
    }

    #[test]
    fn gt_tableau_roundtrip() {
        let lam = w21([2, 0, 0]);
        let d = diagram_of(&lam).unwrap();
        for t in enumerate_tableaux(2, 1, &d).unwrap() {
            let p = tableau_to_gt(&t);
            let back = gt_to_tableau(2, 1, &p).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn pattern_count_equals_dimension() {
        for (m, n) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
            for lam in dominant_weights_up_to(m, n, 4) {
                let pats = gt_patterns(&lam).unwrap();
                let dim = character(&lam).unwrap().dimension();
                assert_eq!(pats.len() as i64, dim, "({m},{n}) {lam}");
            }
        }
    }

    #[test]
    fn branching_examples() {
        // S_3(2 eps_1) at level (2,0), cross-checked by projecting the
        // five Gelfand-Tsetlin patterns onto their middle level
        let s3 = branching(2, 1, &w21([2, 0, 0]), 3).unwrap();
        let coords: Vec<Vec<i64>> = s3.iter().map(|w| w.coords().to_vec()).collect();
        assert_eq!(coords, vec![vec![1, 0], vec![2, 0]]);
        let mut projected: Vec<Vec<i64>> = gt_patterns(&w21([2, 0, 0]))
            .unwrap()
            .iter()
            .map(|p| p.levels[1].coords().to_vec())
            .collect();
        projected.sort();
        projected.dedup();
        assert_eq!(coords, projected);
        // S_2 from level (2,0) down to (1,0)
        let s2 = branching(2, 1, &Weight::new(2, 0, vec![2, 0]), 2).unwrap();
        let coords: Vec<Vec<i64>> = s2.iter().map(|w| w.coords().to_vec()).collect();
        assert_eq!(coords, vec![vec![0], vec![1], vec![2]]);
        // S_k(0) = {0}
        let s = branching(2, 1, &Weight::zero(2, 1), 3).unwrap();
        assert_eq!(s, vec![Weight::zero(2, 0)]);
    }

    #[test]
    fn lowest_weight_examples() {
        assert_eq!(lowest_weight(&w21([1, 0, 0])).unwrap(), w21([0, 0, 1]));
        assert_eq!(lowest_weight(&w21([2, 0, 0])).unwrap(), w21([0, 1, 1]));
        // additivity fails: (2 eps1)_b != 2 (eps1)_b
        assert_ne!(
            lowest_weight(&w21([2, 0, 0])).unwrap(),
            lowest_weight(&w21([1, 0, 0])).unwrap().scale(2)
        );
        // N = 0: reversal
        let lam = Weight::new(3, 0, vec![3, 1, 0]);
        assert_eq!(
            lowest_weight(&lam).unwrap(),
            Weight::new(3, 0, vec![0, 1, 3])
        );
        assert_eq!(dual_highest(&w21([1, 0, 0])).unwrap(), w21([0, 0, -1]));
    }

    #[test]
    fn dual_character_negation() {
        // the character of L(-lambda_b) is the negated character of L(lambda)
        let lam = w21([2, 0, 0]);
        let c = character(&lam).unwrap();
        let dual_lam = dual_highest(&lam).unwrap();
        // -lambda_b is not dominant; compare multisets by negating weights of L(lambda)
        let negated: BTreeMap<Vec<i64>, i64> = c
            .multiplicities
            .iter()
            .map(|(w, m)| (w.iter().map(|x| -x).collect(), *m))
            .collect();
        // highest weight of the dual appears with multiplicity 1
        assert_eq!(negated.get(dual_lam.coords()).copied(), Some(1));
        assert_eq!(c.dimension(), negated.values().sum::<i64>());
    }

    #[test]
    fn stabilization_examples() {
        // r = 1: all weight multiplicities of L(k varpi_1) are 1
        for k in 1..=4i64 {
            let lam = Weight::fundamental(2, 1, 1).scale(k);
            let c = character(&lam).unwrap();
            assert!(c.multiplicities.values().all(|&m| m == 1), "k = {k}");
        }
        // (2,1), r = 2, beta = alpha_2, l = 1: multiplicities agree for k = 2..5
        let beta = Weight::eps(2, 1, 2).sub(&Weight::eps(2, 1, 3));
        let rep = stabilization_check(2, 1, 2, &beta, 1).unwrap();
        assert!(rep.pass);
        // beta = 0: always multiplicity 1
        let rep = stabilization_check(2, 1, 2, &Weight::zero(2, 1), 1).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.reference_multiplicity, 1);
    }

    #[test]
    fn semi_infinite_counts_and_chain() {
        // |B_k^{(2)}| = 4 for gl(2,1) at every depth
        for k in 1..=4usize {
            let tabs = semi_infinite_tableaux(2, 1, 2, k).unwrap();
            assert_eq!(tabs.len(), 4, "depth {k}");
        }
        // chain embedding B_1 subset B_2 via stable keys
        let keys1: Vec<_> = semi_infinite_tableaux(2, 1, 2, 1)
            .unwrap()
            .iter()
            .map(|t| t.stable_key(2))
            .collect();
        let keys2: Vec<_> = semi_infinite_tableaux(2, 1, 2, 2)
            .unwrap()
            .iter()
            .map(|t| t.stable_key(2))
            .collect();
        for k1 in &keys1 {
            assert!(keys2.contains(k1));
        }
        // the frozen tableau f_0 is always present
        assert!(keys1.contains(&Vec::new()));
        // odd node: gl(1,2) with r = 2
        for k in 1..=4usize {
            let tabs = semi_infinite_tableaux(1, 2, 2, k).unwrap();
            assert_eq!(tabs.len(), 2 * k + 1, "odd depth {k}");
        }
    }
}
