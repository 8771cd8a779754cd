//! Dodgson scores through the typed integer program of Bartholdi, Tovey and
//! Trick, solved by an exact depth-first branch and bound.
//!
//! Voters sharing a preference order are merged into one type `i` with
//! multiplicity `N_i`. The variable `x[i][j]` counts type-`i` voters in which
//! the target is lifted by `j` positions (`j = 0` means untouched). The program
//! minimizes `Σ j·x[i][j]` subject to `Σ_j x[i][j] = N_i` and, for every
//! opponent `y`, `Σ e[i][j][y]·x[i][j] >= d_y`.
//!
//! Every unit of lift moves the target past exactly one opponent, so the sum of
//! the outstanding deficits is a lower bound on the remaining cost. That bound
//! drives the pruning.

use std::collections::HashSet;

use crate::election::{condorcet_winner, Alt, Election, PreferenceOrder};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceType {
    pub index: usize,
    pub order: PreferenceOrder,
    pub multiplicity: u64,
}

#[derive(Clone, Debug)]
pub struct DodgsonProgram {
    pub target: Alt,
    pub n: usize,
    pub types: Vec<PreferenceType>,
    /// `max_lift[i]` = 0-based position of the target in type `i`.
    pub max_lift: Vec<usize>,
    /// `deficits[y]`; zero for the target itself.
    pub deficits: Vec<u64>,
    m: usize,
}

impl DodgsonProgram {
    pub fn m(&self) -> usize {
        self.m
    }

    /// `e_{i,j,y}`: lifting the target by `j` in type `i` moves it past `y`.
    pub fn gain(&self, i: usize, j: usize, y: Alt) -> bool {
        let order = &self.types[i].order;
        let pos = self.max_lift[i];
        if j > pos || y == self.target {
            return false;
        }
        let py = order.position(y);
        py < pos && py >= pos - j
    }

    /// Supports the target needs to win against `y` by a strict majority.
    pub fn majority_threshold(&self) -> u64 {
        self.n as u64 / 2 + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DodgsonSolution {
    /// `lifts[i][j] = x_{i,j}` for `j` in `0..=max_lift[i]`.
    pub lifts: Vec<Vec<u64>>,
    pub score: u64,
}

impl DodgsonSolution {
    /// Checks every constraint of the program and the objective value.
    pub fn satisfies(&self, p: &DodgsonProgram) -> bool {
        if self.lifts.len() != p.types.len() {
            return false;
        }
        for (i, x) in self.lifts.iter().enumerate() {
            if x.len() != p.max_lift[i] + 1 || x.iter().sum::<u64>() != p.types[i].multiplicity {
                return false;
            }
        }
        for y in 0..p.m() {
            let got: u64 = self
                .lifts
                .iter()
                .enumerate()
                .flat_map(|(i, x)| x.iter().enumerate().map(move |(j, &c)| (i, j, c)))
                .filter(|&(i, j, _)| p.gain(i, j, y))
                .map(|(_, _, c)| c)
                .sum();
            if got < p.deficits[y] {
                return false;
            }
        }
        let obj: u64 = self
            .lifts
            .iter()
            .flat_map(|x| x.iter().enumerate().map(|(j, &c)| j as u64 * c))
            .sum();
        obj == self.score
    }

    /// Applies the lifts to the voters of `e`, type by type in voter order.
    pub fn apply(&self, e: &Election, p: &DodgsonProgram) -> Result<Election> {
        let mut remaining: Vec<Vec<u64>> = self.lifts.clone();
        let mut voters = Vec::with_capacity(e.n());
        for v in e.voters() {
            let i = p
                .types
                .iter()
                .position(|t| &t.order == v)
                .ok_or_else(|| Error::invalid("voter not covered by the program"))?;
            let j = (1..remaining[i].len()).rev().find(|&j| remaining[i][j] > 0).unwrap_or(0);
            if j > 0 {
                remaining[i][j] -= 1;
            }
            let pos = v.position(p.target);
            voters.push(v.lift(pos, pos - j));
        }
        e.with_voters(voters)
    }
}

pub fn build_program(e: &Election, target: Alt) -> Result<DodgsonProgram> {
    let m = e.m();
    if target >= m {
        return Err(Error::invalid(format!("target {target} out of range 0..{m}")));
    }
    let mut types: Vec<PreferenceType> = Vec::new();
    for v in e.voters() {
        match types.iter_mut().find(|t| &t.order == v) {
            Some(t) => t.multiplicity += 1,
            None => types.push(PreferenceType {
                index: types.len(),
                order: v.clone(),
                multiplicity: 1,
            }),
        }
    }
    let max_lift = types.iter().map(|t| t.order.position(target)).collect();
    let w = e.majority_matrix();
    let need = e.n() as u64 / 2 + 1;
    let deficits = (0..m)
        .map(|y| if y == target { 0 } else { need.saturating_sub(w.wins(target, y)) })
        .collect();
    Ok(DodgsonProgram {
        target,
        n: e.n(),
        types,
        max_lift,
        deficits,
        m,
    })
}

/// Optimal value of the program together with a witness.
pub fn solve_program(p: &DodgsonProgram) -> Result<DodgsonSolution> {
    let t = p.types.len();
    let m = p.m();
    // avail[i][y]: voters of types i.. in which y sits above the target
    let mut avail = vec![vec![0u64; m]; t + 1];
    for i in (0..t).rev() {
        for y in 0..m {
            avail[i][y] = avail[i + 1][y] + if p.gain(i, p.max_lift[i], y) { p.types[i].multiplicity } else { 0 };
        }
    }
    let mut search = Search {
        p,
        avail,
        deficits: p.deficits.clone(),
        current: p.max_lift.iter().map(|&l| vec![0; l + 1]).collect(),
        best: None,
    };
    search.type_level(0, 0);
    search
        .best
        .ok_or_else(|| Error::Infeasible("no lift assignment meets every deficit".into()))
}

struct Search<'a> {
    p: &'a DodgsonProgram,
    avail: Vec<Vec<u64>>,
    deficits: Vec<u64>,
    current: Vec<Vec<u64>>,
    best: Option<DodgsonSolution>,
}

impl Search<'_> {
    fn bound_ok(&self, cost: u64) -> bool {
        let lb = cost + self.deficits.iter().sum::<u64>();
        self.best.as_ref().is_none_or(|b| lb < b.score)
    }

    fn type_level(&mut self, i: usize, cost: u64) {
        if !self.bound_ok(cost) {
            return;
        }
        if i == self.p.types.len() {
            if self.deficits.iter().all(|&d| d == 0) {
                self.best = Some(DodgsonSolution {
                    lifts: self.current.clone(),
                    score: cost,
                });
            }
            return;
        }
        let n_i = self.p.types[i].multiplicity;
        self.lift_level(i, self.p.max_lift[i], n_i, cost);
    }

    /// Chooses `x[i][j]` for the current `j`, then recurses to `j - 1`.
    fn lift_level(&mut self, i: usize, j: usize, left: u64, cost: u64) {
        if j == 0 {
            self.current[i][0] = left;
            self.type_level(i + 1, cost);
            self.current[i][0] = 0;
            return;
        }
        // with `left` voters each lifted at most `j`, can the deficits still be met?
        let p = self.p;
        let feasible = (0..p.m()).all(|y| {
            let here = if p.gain(i, j, y) { left } else { 0 };
            self.deficits[y] <= self.avail[i + 1][y] + here
        });
        if !feasible || !self.bound_ok(cost) {
            return;
        }
        let passed: Vec<Alt> = (0..p.m()).filter(|&y| p.gain(i, j, y)).collect();
        for count in (0..=left).rev() {
            let saved: Vec<u64> = passed.iter().map(|&y| self.deficits[y]).collect();
            for &y in &passed {
                self.deficits[y] = self.deficits[y].saturating_sub(count);
            }
            self.current[i][j] = count;
            self.lift_level(i, j - 1, left - count, cost + count * j as u64);
            self.current[i][j] = 0;
            for (&y, d) in passed.iter().zip(saved) {
                self.deficits[y] = d;
            }
        }
    }
}

/// Minimum number of adjacent swaps making `target` the Condorcet winner.
pub fn dodgson_score(e: &Election, target: Alt) -> Result<(u64, DodgsonSolution)> {
    let program = build_program(e, target)?;
    let solution = solve_program(&program)?;
    Ok((solution.score, solution))
}

pub fn dodgson_decision(e: &Election, target: Alt, k: u64) -> Result<bool> {
    match dodgson_score(e, target) {
        Ok((s, _)) => Ok(s <= k),
        Err(Error::Infeasible(_)) => Ok(false),
        Err(err) => Err(err),
    }
}

/// Size limits of the swap-graph search.
#[derive(Clone, Copy, Debug)]
pub struct BfsLimits {
    /// Bound on `n · m`.
    pub max_cells: usize,
    pub max_k: u64,
}

impl Default for BfsLimits {
    fn default() -> Self {
        BfsLimits { max_cells: 16, max_k: 8 }
    }
}

/// Breadth-first search over profiles reachable by arbitrary adjacent swaps.
/// Returns the fewest swaps making `target` the Condorcet winner, or `None`
/// if that takes more than `k_cap` swaps.
pub fn dodgson_bruteforce(e: &Election, target: Alt, k_cap: u64) -> Result<Option<u64>> {
    dodgson_bruteforce_with_limits(e, target, k_cap, BfsLimits::default())
}

pub fn dodgson_bruteforce_with_limits(
    e: &Election,
    target: Alt,
    k_cap: u64,
    limits: BfsLimits,
) -> Result<Option<u64>> {
    let (n, m) = (e.n(), e.m());
    if target >= m {
        return Err(Error::invalid(format!("target {target} out of range 0..{m}")));
    }
    if n * m > limits.max_cells {
        return Err(Error::capacity("n*m", (n * m) as u64, limits.max_cells as u64));
    }
    if k_cap > limits.max_k {
        return Err(Error::capacity("swap cap", k_cap, limits.max_k));
    }
    if condorcet_winner(e) == Some(target) {
        return Ok(Some(0));
    }
    let start: Vec<u8> = e.voters().iter().flat_map(|v| v.ranking().iter().map(|&c| c as u8)).collect();
    let mut seen = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    for depth in 1..=k_cap {
        let mut next = Vec::new();
        for state in &frontier {
            for v in 0..n {
                for pos in 0..m - 1 {
                    let mut s = state.clone();
                    s.swap(v * m + pos, v * m + pos + 1);
                    if seen.insert(s.clone()) {
                        if is_condorcet_winner(&s, n, m, target) {
                            return Ok(Some(depth));
                        }
                        next.push(s);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(None)
}

fn is_condorcet_winner(profile: &[u8], n: usize, m: usize, c: Alt) -> bool {
    let mut support = vec![0usize; m];
    for v in 0..n {
        let row = &profile[v * m..(v + 1) * m];
        let pos = row.iter().position(|&x| x as usize == c).expect("permutation");
        for &y in &row[pos + 1..] {
            support[y as usize] += 1;
        }
    }
    (0..m).all(|y| y == c || 2 * support[y] > n)
}
