//! Exact solvers for four bribery flavors under positional scoring rules.
//!
//! * unit-cost and priced bribery: a bribed voter may be rewritten freely;
//! * swap bribery: each voter charges per adjacent swap of two alternatives;
//! * shift bribery: only swaps that move `p` upwards are allowed.
//!
//! All solvers return a minimum-cost [`BriberyPlan`] within the budget, or
//! `None` when no plan of cost at most the budget makes `p` win.

use std::collections::HashSet;

use itertools::Itertools;

use crate::election::{scores, Alt, Election, PreferenceOrder, Rule, ScoringVector, WinnerMode};
use crate::error::{Error, Result};

/// Largest `m` for which per-voter target orders are enumerated.
pub const DEFAULT_ORDER_LIMIT: usize = 6;
/// Largest `n` for which voter subsets are enumerated.
pub const DEFAULT_SUBSET_LIMIT: usize = 20;

/// Who has to win, under which rule and tie semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Goal {
    pub rule: Rule,
    pub p: Alt,
    pub mode: WinnerMode,
}

impl Goal {
    pub fn new(rule: Rule, p: Alt) -> Self {
        Goal {
            rule,
            p,
            mode: WinnerMode::CoWinner,
        }
    }

    pub fn with_mode(mut self, mode: WinnerMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn is_met(&self, e: &Election) -> Result<bool> {
        let s = scores(e, &self.rule.scoring_vector(e.m())?)?;
        Ok(self.mode.is_winner(&s, self.p))
    }

    fn check(&self, e: &Election) -> Result<ScoringVector> {
        if self.p >= e.m() {
            return Err(Error::invalid(format!("alternative {} out of range", self.p)));
        }
        self.rule.scoring_vector(e.m())
    }
}

/// Price of swapping two adjacent alternatives for one voter; symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapPrices {
    m: usize,
    price: Vec<u64>,
}

impl SwapPrices {
    pub fn unit(m: usize) -> Self {
        let mut price = vec![1; m * m];
        for c in 0..m {
            price[c * m + c] = 0;
        }
        SwapPrices { m, price }
    }

    /// From a full `m×m` matrix; must be symmetric. The diagonal is ignored.
    pub fn from_matrix(rows: &[Vec<u64>]) -> Result<Self> {
        let m = rows.len();
        let mut price = vec![0; m * m];
        for (a, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::Dimension { expected: m, got: row.len() });
            }
            for (b, &x) in row.iter().enumerate() {
                if a != b {
                    if rows[b][a] != x {
                        return Err(Error::invalid(format!("swap price of ({a},{b}) is not symmetric")));
                    }
                    price[a * m + b] = x;
                }
            }
        }
        Ok(SwapPrices { m, price })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn price(&self, a: Alt, b: Alt) -> u64 {
        self.price[a * self.m + b]
    }
}

/// `rho[t]` = cost of shifting `p` up by `t` positions; `rho[0] = 0`,
/// nondecreasing, one entry per reachable position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftPrices(Vec<u64>);

impl ShiftPrices {
    pub fn new(rho: Vec<u64>) -> Result<Self> {
        if rho.first() != Some(&0) {
            return Err(Error::invalid("shift prices must start with rho(0) = 0"));
        }
        if rho.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::invalid("shift prices must be nondecreasing"));
        }
        Ok(ShiftPrices(rho))
    }

    /// `rho(t) = t` for a voter ranking `p` at 0-based position `pos`.
    pub fn linear(pos: usize) -> Self {
        ShiftPrices((0..=pos as u64).collect())
    }

    pub fn max_shift(&self) -> usize {
        self.0.len() - 1
    }

    pub fn cost(&self, t: usize) -> u64 {
        self.0[t]
    }
}

/// Budget and per-voter prices for unit-cost or priced bribery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BriberyBudget {
    pub budget: u64,
    /// `None` means every voter costs 1.
    pub prices: Option<Vec<u64>>,
}

impl BriberyBudget {
    pub fn unit(budget: u64) -> Self {
        BriberyBudget { budget, prices: None }
    }

    pub fn priced(budget: u64, prices: Vec<u64>) -> Self {
        BriberyBudget {
            budget,
            prices: Some(prices),
        }
    }

    fn price(&self, v: usize) -> u64 {
        self.prices.as_ref().map_or(1, |p| p[v])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VoterAction {
    Unchanged,
    NewOrder(PreferenceOrder),
    Swaps(Vec<(Alt, Alt)>),
    Shift(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BriberyPlan {
    pub actions: Vec<VoterAction>,
    pub cost: u64,
    pub election: Election,
}

/// Executes the swaps in order. Each pair must be adjacent when its turn comes.
pub fn apply_swap_sequence(
    order: &PreferenceOrder,
    seq: &[(Alt, Alt)],
    prices: &SwapPrices,
) -> Result<(PreferenceOrder, u64)> {
    let mut r = order.ranking().to_vec();
    let mut pos: Vec<usize> = (0..r.len()).map(|c| order.position(c)).collect();
    let mut cost = 0u64;
    for (index, &(a, b)) in seq.iter().enumerate() {
        if a >= r.len() || b >= r.len() || a == b || pos[a].abs_diff(pos[b]) != 1 {
            return Err(Error::NonAdjacentSwap { index });
        }
        let (i, j) = (pos[a], pos[b]);
        r.swap(i, j);
        pos[a] = j;
        pos[b] = i;
        cost = cost.checked_add(prices.price(a, b)).ok_or(Error::Overflow("swap cost"))?;
    }
    Ok((PreferenceOrder::from_ranking_unchecked(r), cost))
}

/// Cheapest swap cost turning `order` into `target`: every discordant pair is
/// swapped exactly once.
pub fn min_cost_to_target(order: &PreferenceOrder, target: &PreferenceOrder, prices: &SwapPrices) -> Result<u64> {
    let m = order.len();
    if target.len() != m || prices.m() != m {
        return Err(Error::Dimension { expected: m, got: target.len() });
    }
    let mut cost = 0u64;
    for a in 0..m {
        for b in a + 1..m {
            if order.prefers(a, b) != target.prefers(a, b) {
                cost += prices.price(a, b);
            }
        }
    }
    Ok(cost)
}

/// Bubble-sort sequence from `order` to `target`; swaps each discordant pair once.
pub fn swap_sequence_to_target(order: &PreferenceOrder, target: &PreferenceOrder) -> Vec<(Alt, Alt)> {
    let mut cur = order.ranking().to_vec();
    let mut seq = Vec::new();
    for i in 0..cur.len() {
        let want = target.at(i);
        let mut pos = cur.iter().position(|&c| c == want).expect("same alternatives");
        while pos > i {
            seq.push((cur[pos - 1], want));
            cur.swap(pos - 1, pos);
            pos -= 1;
        }
    }
    seq
}

fn contribution(order: &PreferenceOrder, sv: &ScoringVector) -> Vec<u64> {
    let mut c = vec![0; order.len()];
    for (pos, &a) in order.ranking().iter().enumerate() {
        c[a] = sv.points(pos);
    }
    c
}

struct VoterOption {
    cost: u64,
    contrib: Vec<u64>,
    action: VoterAction,
    order: PreferenceOrder,
}

/// Picks one option per voter minimizing total cost such that `p` wins.
/// Options of each voter must be sorted by cost.
struct OptionSearch<'a> {
    options: &'a [Vec<VoterOption>],
    p: Alt,
    mode: WinnerMode,
    budget: u64,
    // suffix_gap[v][c]: Σ over voters v.. of min over options of (contrib[c] - contrib[p])
    suffix_gap: Vec<Vec<i64>>,
    chosen: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl<'a> OptionSearch<'a> {
    fn new(options: &'a [Vec<VoterOption>], m: usize, p: Alt, mode: WinnerMode, budget: u64) -> Self {
        let n = options.len();
        let mut suffix_gap = vec![vec![0i64; m]; n + 1];
        for v in (0..n).rev() {
            for c in 0..m {
                let g = options[v]
                    .iter()
                    .map(|o| o.contrib[c] as i64 - o.contrib[p] as i64)
                    .min()
                    .unwrap_or(0);
                suffix_gap[v][c] = suffix_gap[v + 1][c] + g;
            }
        }
        OptionSearch {
            options,
            p,
            mode,
            budget,
            suffix_gap,
            chosen: vec![0; n],
            best: None,
        }
    }

    fn run(mut self) -> Option<(u64, Vec<usize>)> {
        let m = self.suffix_gap[0].len();
        let mut totals = vec![0u64; m];
        self.dfs(0, 0, &mut totals);
        self.best
    }

    fn dfs(&mut self, v: usize, cost: u64, totals: &mut [u64]) {
        if cost > self.budget || self.best.as_ref().is_some_and(|(b, _)| cost >= *b) {
            return;
        }
        let p = self.p;
        let slack = match self.mode {
            WinnerMode::CoWinner => 0,
            WinnerMode::Unique => -1,
        };
        for c in 0..totals.len() {
            if c != p && totals[c] as i64 - totals[p] as i64 + self.suffix_gap[v][c] > slack {
                return;
            }
        }
        if v == self.options.len() {
            // the bound above is exact once every voter is fixed
            self.best = Some((cost, self.chosen.clone()));
            return;
        }
        for i in 0..self.options[v].len() {
            let o = &self.options[v][i];
            let oc = o.cost;
            for (t, x) in totals.iter_mut().zip(&o.contrib) {
                *t += x;
            }
            self.chosen[v] = i;
            self.dfs(v + 1, cost + oc, totals);
            let o = &self.options[v][i];
            for (t, x) in totals.iter_mut().zip(&o.contrib) {
                *t -= x;
            }
        }
    }
}

/// Drops options with an identical contribution vector, keeping the cheapest,
/// and options weakly dominated by a cheaper-or-equal one.
fn prune_options(mut opts: Vec<VoterOption>, p: Alt) -> Vec<VoterOption> {
    opts.sort_by(|a, b| a.cost.cmp(&b.cost).then_with(|| a.order.cmp(&b.order)));
    let mut seen = HashSet::new();
    opts.retain(|o| seen.insert(o.contrib.clone()));
    let dominates = |a: &VoterOption, b: &VoterOption| {
        a.cost <= b.cost
            && a.contrib[p] >= b.contrib[p]
            && a.contrib.iter().zip(&b.contrib).enumerate().all(|(c, (x, y))| c == p || x <= y)
    };
    let mut kept: Vec<VoterOption> = Vec::new();
    for o in opts {
        // sorted by cost, so only earlier options can dominate
        if !kept.iter().any(|k| dominates(k, &o)) {
            kept.push(o);
        }
    }
    kept
}

fn finish_plan(e: &Election, options: &[Vec<VoterOption>], cost: u64, chosen: &[usize]) -> Result<BriberyPlan> {
    let mut actions = Vec::with_capacity(e.n());
    let mut voters = Vec::with_capacity(e.n());
    for (v, &i) in chosen.iter().enumerate() {
        let o = &options[v][i];
        voters.push(o.order.clone());
        actions.push(if &o.order == e.voter(v) && o.cost == 0 {
            VoterAction::Unchanged
        } else {
            o.action.clone()
        });
    }
    Ok(BriberyPlan {
        actions,
        cost,
        election: e.with_voters(voters)?,
    })
}

pub fn swap_bribery(e: &Election, goal: Goal, prices: &[SwapPrices], budget: u64) -> Result<Option<BriberyPlan>> {
    swap_bribery_with_limit(e, goal, prices, budget, DEFAULT_ORDER_LIMIT)
}

pub fn swap_bribery_with_limit(
    e: &Election,
    goal: Goal,
    prices: &[SwapPrices],
    budget: u64,
    limit_m: usize,
) -> Result<Option<BriberyPlan>> {
    let sv = goal.check(e)?;
    let m = e.m();
    if m > limit_m {
        return Err(Error::capacity("number of alternatives", m as u64, limit_m as u64));
    }
    if prices.len() != e.n() {
        return Err(Error::Dimension { expected: e.n(), got: prices.len() });
    }
    let all_orders: Vec<PreferenceOrder> = (0..m)
        .permutations(m)
        .map(PreferenceOrder::from_ranking_unchecked)
        .collect();
    let mut options = Vec::with_capacity(e.n());
    for (v, order) in e.voters().iter().enumerate() {
        let mut opts = Vec::with_capacity(all_orders.len());
        for t in &all_orders {
            let cost = min_cost_to_target(order, t, &prices[v])?;
            opts.push(VoterOption {
                cost,
                contrib: contribution(t, &sv),
                action: VoterAction::Swaps(swap_sequence_to_target(order, t)),
                order: t.clone(),
            });
        }
        options.push(prune_options(opts, goal.p));
    }
    let found = OptionSearch::new(&options, m, goal.p, goal.mode, budget).run();
    found
        .map(|(cost, chosen)| finish_plan(e, &options, cost, &chosen))
        .transpose()
}

pub fn shift_bribery(e: &Election, goal: Goal, prices: &[ShiftPrices], budget: u64) -> Result<Option<BriberyPlan>> {
    let sv = goal.check(e)?;
    if prices.len() != e.n() {
        return Err(Error::Dimension { expected: e.n(), got: prices.len() });
    }
    let mut options = Vec::with_capacity(e.n());
    for (v, order) in e.voters().iter().enumerate() {
        let pos = order.position(goal.p);
        if prices[v].max_shift() != pos {
            return Err(Error::invalid(format!(
                "voter {v}: shift prices cover {} shifts but p can move {pos}",
                prices[v].max_shift()
            )));
        }
        let opts = (0..=pos)
            .map(|t| {
                let target = order.lift(pos, pos - t);
                VoterOption {
                    cost: prices[v].cost(t),
                    contrib: contribution(&target, &sv),
                    action: VoterAction::Shift(t),
                    order: target,
                }
            })
            .collect();
        options.push(prune_options(opts, goal.p));
    }
    let found = OptionSearch::new(&options, e.m(), goal.p, goal.mode, budget).run();
    found
        .map(|(cost, chosen)| finish_plan(e, &options, cost, &chosen))
        .transpose()
}

/// Unit-cost bribery (`prices: None`) or priced bribery. Voter subsets are
/// tried cheapest first; bribed voters put `p` on top and the remaining
/// positions are filled by an exact search that keeps every rival below `p`.
pub fn unit_or_priced_bribery(e: &Election, goal: Goal, budget: &BriberyBudget) -> Result<Option<BriberyPlan>> {
    unit_or_priced_bribery_with_limits(e, goal, budget, DEFAULT_ORDER_LIMIT, DEFAULT_SUBSET_LIMIT)
}

pub fn unit_or_priced_bribery_with_limits(
    e: &Election,
    goal: Goal,
    budget: &BriberyBudget,
    limit_m: usize,
    limit_n: usize,
) -> Result<Option<BriberyPlan>> {
    let sv = goal.check(e)?;
    let (m, n, p) = (e.m(), e.n(), goal.p);
    if let Some(pr) = &budget.prices {
        if pr.len() != n {
            return Err(Error::Dimension { expected: n, got: pr.len() });
        }
    }
    if m > limit_m {
        return Err(Error::capacity("number of alternatives", m as u64, limit_m as u64));
    }
    let voter_contrib: Vec<Vec<u64>> = e.voters().iter().map(|v| contribution(v, &sv)).collect();

    // candidate subsets, cheapest first
    let mut subsets: Vec<(u64, Vec<usize>)> = Vec::new();
    if budget.prices.is_none() {
        let max = (budget.budget.min(n as u64)) as usize;
        let count: u128 = (0..=max).map(|s| crate::control::binomial(n, s)).sum();
        if count > 1u128 << limit_n {
            return Err(Error::capacity("voter subsets", count, 1u128 << limit_n));
        }
        for s in 0..=max {
            subsets.extend((0..n).combinations(s).map(|c| (s as u64, c)));
        }
    } else {
        if n > limit_n {
            return Err(Error::capacity("number of voters", n as u64, limit_n as u64));
        }
        for mask in 0u64..1 << n {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let cost: u64 = members.iter().map(|&v| budget.price(v)).sum();
            if cost <= budget.budget {
                subsets.push((cost, members));
            }
        }
        subsets.sort();
    }

    let rivals: Vec<Alt> = (0..m).filter(|&c| c != p).collect();
    let rest_points: Vec<u64> = sv.alpha()[1..].to_vec();
    let slack = i64::from(goal.mode == WinnerMode::Unique);
    let mut memo = HashSet::new();
    for (cost, bribed) in subsets {
        let mut base = vec![0u64; m];
        let mut is_bribed = vec![false; n];
        for &v in &bribed {
            is_bribed[v] = true;
        }
        for v in (0..n).filter(|&v| !is_bribed[v]) {
            for (b, x) in base.iter_mut().zip(&voter_contrib[v]) {
                *b += x;
            }
        }
        let p_total = base[p] + bribed.len() as u64 * sv.points(0);
        // cap[i]: points rival i may still receive from bribed voters
        let caps: Vec<i64> = rivals
            .iter()
            .map(|&c| p_total as i64 - base[c] as i64 - slack)
            .collect();
        if let Some(fill) = fill_rivals(&caps, bribed.len(), &rest_points, &mut memo) {
            let mut voters = e.voters().to_vec();
            let mut actions = vec![VoterAction::Unchanged; n];
            for (&v, assignment) in bribed.iter().zip(fill) {
                // assignment[i] = position (1..m) given to rivals[i]
                let mut ranking = vec![p; m];
                for (i, &pos) in assignment.iter().enumerate() {
                    ranking[pos] = rivals[i];
                }
                let order = PreferenceOrder::from_ranking_unchecked(ranking);
                actions[v] = VoterAction::NewOrder(order.clone());
                voters[v] = order;
            }
            return Ok(Some(BriberyPlan {
                actions,
                cost,
                election: e.with_voters(voters)?,
            }));
        }
    }
    Ok(None)
}

/// Assigns the positions `1..m` to the rivals for each of `count` bribed
/// voters so that no rival exceeds its cap. Rival slots are interchangeable
/// for the search, so failures are memoized on the sorted caps.
fn fill_rivals(caps: &[i64], count: usize, points: &[u64], memo: &mut HashSet<(usize, Vec<i64>)>) -> Option<Vec<Vec<usize>>> {
    if caps.iter().any(|&c| c < 0) {
        return None;
    }
    if count == 0 {
        return Some(Vec::new());
    }
    let per_voter: u64 = points.iter().sum();
    if caps.iter().sum::<i64>() < (count as u64 * per_voter) as i64 {
        return None;
    }
    let mut key_caps = caps.to_vec();
    key_caps.sort_unstable();
    let key = (count, key_caps);
    if memo.contains(&key) {
        return None;
    }
    let r = caps.len();
    // largest points first to the rivals with the most room
    let mut by_room: Vec<usize> = (0..r).collect();
    by_room.sort_by_key(|&i| std::cmp::Reverse(caps[i]));
    for perm in (0..r).permutations(r) {
        // perm[j] = index into by_room receiving points[j]
        let mut next = caps.to_vec();
        let mut assignment = vec![0usize; r];
        for (j, &slot) in perm.iter().enumerate() {
            let i = by_room[slot];
            next[i] -= points[j] as i64;
            assignment[i] = j + 1;
        }
        if let Some(mut rest) = fill_rivals(&next, count - 1, points, memo) {
            rest.insert(0, assignment);
            return Some(rest);
        }
    }
    memo.insert(key);
    None
}

/// Re-validates a plan: the resulting orders follow from the actions, the
/// cost matches, and `p` wins.
pub fn plan_is_valid(e: &Election, goal: Goal, plan: &BriberyPlan) -> Result<bool> {
    if plan.actions.len() != e.n() || plan.election.n() != e.n() {
        return Ok(false);
    }
    for (v, a) in plan.actions.iter().enumerate() {
        let before = e.voter(v);
        let after = plan.election.voter(v);
        let ok = match a {
            VoterAction::Unchanged => before == after,
            VoterAction::NewOrder(o) => o == after,
            VoterAction::Swaps(seq) => {
                match apply_swap_sequence(before, seq, &SwapPrices::unit(e.m())) {
                    Ok((o, _)) => &o == after,
                    Err(_) => false,
                }
            }
            VoterAction::Shift(t) => {
                let pos = before.position(goal.p);
                *t <= pos && &before.lift(pos, pos - t) == after
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    goal.is_met(&plan.election)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn swap_sequences() {
        let o = PreferenceOrder::new(vec![0, 1, 2]).unwrap();
        let unit = SwapPrices::unit(3);
        assert_eq!(apply_swap_sequence(&o, &[], &unit).unwrap(), (o.clone(), 0));
        let (r, c) = apply_swap_sequence(&o, &[(0, 1), (0, 2), (1, 2)], &unit).unwrap();
        assert_eq!(r.ranking(), &[2, 1, 0]);
        assert_eq!(c, 3);
        assert_eq!(
            apply_swap_sequence(&o, &[(0, 1), (1, 2), (0, 1)], &unit),
            Err(Error::NonAdjacentSwap { index: 1 })
        );
    }

    #[test]
    fn bubble_sequence_matches_closed_form() {
        let prices = SwapPrices::from_matrix(&[vec![0, 2, 5], vec![2, 0, 1], vec![5, 1, 0]]).unwrap();
        let o = PreferenceOrder::new(vec![0, 1, 2]).unwrap();
        let t = PreferenceOrder::new(vec![2, 0, 1]).unwrap();
        let seq = swap_sequence_to_target(&o, &t);
        let (r, c) = apply_swap_sequence(&o, &seq, &prices).unwrap();
        assert_eq!(r, t);
        assert_eq!(c, min_cost_to_target(&o, &t, &prices).unwrap());
        assert_eq!(c, 6);
        assert_eq!(min_cost_to_target(&o, &o, &prices).unwrap(), 0);
    }

    #[test]
    fn asymmetric_prices_rejected() {
        assert!(SwapPrices::from_matrix(&[vec![0, 1], vec![2, 0]]).is_err());
        assert!(ShiftPrices::new(vec![1, 2]).is_err());
        assert!(ShiftPrices::new(vec![0, 3, 2]).is_err());
    }

    #[test]
    fn already_winning_costs_nothing() {
        let e = fixtures::kemeny_example();
        let goal = Goal::new(Rule::Borda, 0);
        let plan = swap_bribery(&e, goal, &vec![SwapPrices::unit(4); 3], 0).unwrap().unwrap();
        assert_eq!(plan.cost, 0);
        assert!(plan.actions.iter().all(|a| *a == VoterAction::Unchanged));
        let plan = unit_or_priced_bribery(&e, goal, &BriberyBudget::unit(0)).unwrap().unwrap();
        assert_eq!(plan.cost, 0);
    }

    #[test]
    fn plurality_unit_bribery_on_figure_one() {
        // plurality: a1 2, a3 1; a4 needs two bribed voters to beat a1
        let e = fixtures::kemeny_example();
        let goal = Goal::new(Rule::Plurality, 3).with_mode(WinnerMode::Unique);
        assert!(unit_or_priced_bribery(&e, goal, &BriberyBudget::unit(1)).unwrap().is_none());
        let plan = unit_or_priced_bribery(&e, goal, &BriberyBudget::unit(2)).unwrap().unwrap();
        assert_eq!(plan.cost, 2);
        assert!(plan_is_valid(&e, goal, &plan).unwrap());
        let plan = unit_or_priced_bribery(&e, goal, &BriberyBudget::unit(3)).unwrap().unwrap();
        assert_eq!(plan.cost, 2);
    }

    #[test]
    fn priced_bribery_prefers_cheap_voters() {
        let e = fixtures::kemeny_example();
        let goal = Goal::new(Rule::Plurality, 2).with_mode(WinnerMode::Unique);
        // a3 needs one of the a1 voters; voter 1 is cheaper
        let plan = unit_or_priced_bribery(&e, goal, &BriberyBudget::priced(10, vec![5, 3, 9]))
            .unwrap()
            .unwrap();
        assert_eq!(plan.cost, 3);
        assert!(matches!(plan.actions[1], VoterAction::NewOrder(_)));
        assert!(unit_or_priced_bribery(&e, goal, &BriberyBudget::priced(2, vec![5, 3, 9]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn shift_single_voter() {
        let e = Election::from_rankings(3, &[&[1, 0, 2]]).unwrap();
        let goal = Goal::new(Rule::Plurality, 0);
        let prices = vec![ShiftPrices::new(vec![0, 4]).unwrap()];
        assert!(shift_bribery(&e, goal, &prices, 3).unwrap().is_none());
        let plan = shift_bribery(&e, goal, &prices, 4).unwrap().unwrap();
        assert_eq!(plan.cost, 4);
        assert_eq!(plan.actions, vec![VoterAction::Shift(1)]);
        assert!(plan_is_valid(&e, goal, &plan).unwrap());
        let wrong = vec![ShiftPrices::new(vec![0, 1, 2]).unwrap()];
        assert!(shift_bribery(&e, goal, &wrong, 4).is_err());
    }

    #[test]
    fn swap_bribery_capacity() {
        let e = Election::new(7, vec![PreferenceOrder::identity(7)]).unwrap();
        let r = swap_bribery(&e, Goal::new(Rule::Borda, 6), &[SwapPrices::unit(7)], 100);
        assert!(r.unwrap_err().is_capacity());
    }
}
