//! Naive reference implementations used to cross-check the solvers.
#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use csc_core::bribery::{Goal, SwapPrices};
use csc_core::circuit::{Circuit, GateKind};
use csc_core::{Election, PreferenceOrder, Rule, WinnerMode};
use itertools::Itertools;
use rand::Rng;

pub fn discordant_pairs(a: &[usize], b: &[usize]) -> u64 {
    let pos = |r: &[usize], c: usize| r.iter().position(|&x| x == c).unwrap();
    let m = a.len();
    let mut d = 0;
    for x in 0..m {
        for y in x + 1..m {
            if (pos(a, x) < pos(a, y)) != (pos(b, x) < pos(b, y)) {
                d += 1;
            }
        }
    }
    d
}

pub fn kemeny_score(e: &Election, ranking: &[usize]) -> u64 {
    e.voters().iter().map(|v| discordant_pairs(v.ranking(), ranking)).sum()
}

pub fn condorcet(e: &Election) -> Option<usize> {
    let m = e.m();
    (0..m).find(|&c| {
        (0..m).filter(|&d| d != c).all(|d| {
            let ahead = e.voters().iter().filter(|v| v.prefers(c, d)).count();
            2 * ahead > e.n()
        })
    })
}

/// Utility first strictly rises, then strictly falls along the axis.
pub fn single_peaked(e: &Election, axis: &[usize]) -> bool {
    e.voters().iter().all(|v| {
        let u: Vec<usize> = axis.iter().map(|&c| axis.len() - v.position(c)).collect();
        let top = (0..u.len()).max_by_key(|&i| u[i]).unwrap();
        u[..=top].windows(2).all(|w| w[0] < w[1]) && u[top..].windows(2).all(|w| w[0] > w[1])
    })
}

pub fn points(rule: Rule, m: usize, pos: usize) -> u64 {
    match rule {
        Rule::Plurality => u64::from(pos == 0),
        Rule::Approval(d) => u64::from(pos < d),
        Rule::Borda => (m - 1 - pos) as u64,
    }
}

pub fn wins(rankings: &[Vec<usize>], m: usize, goal: Goal) -> bool {
    let mut s = vec![0u64; m];
    for r in rankings {
        for (pos, &c) in r.iter().enumerate() {
            s[c] += points(goal.rule, m, pos);
        }
    }
    (0..m).filter(|&c| c != goal.p).all(|c| match goal.mode {
        WinnerMode::CoWinner => s[c] <= s[goal.p],
        WinnerMode::Unique => s[c] < s[goal.p],
    })
}

pub fn swap_cost(from: &[usize], to: &[usize], prices: &SwapPrices) -> u64 {
    let pos = |r: &[usize], c: usize| r.iter().position(|&x| x == c).unwrap();
    let m = from.len();
    let mut cost = 0;
    for x in 0..m {
        for y in x + 1..m {
            if (pos(from, x) < pos(from, y)) != (pos(to, x) < pos(to, y)) {
                cost += prices.price(x, y);
            }
        }
    }
    cost
}

/// Minimum total swap cost over every joint choice of target orders.
pub fn swap_bribery_oracle(e: &Election, goal: Goal, prices: &[SwapPrices]) -> Option<u64> {
    let m = e.m();
    let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    let costs: Vec<Vec<u64>> = e
        .voters()
        .iter()
        .zip(prices)
        .map(|(v, pr)| perms.iter().map(|t| swap_cost(v.ranking(), t, pr)).collect())
        .collect();
    let mut best: Option<u64> = None;
    for choice in (0..e.n()).map(|_| 0..perms.len()).multi_cartesian_product() {
        let cost: u64 = choice.iter().enumerate().map(|(v, &i)| costs[v][i]).sum();
        if best.is_some_and(|b| cost >= b) {
            continue;
        }
        let profile: Vec<Vec<usize>> = choice.iter().map(|&i| perms[i].clone()).collect();
        if wins(&profile, m, goal) {
            best = Some(cost);
        }
    }
    best
}

/// Minimum total shift cost, `rho[v][t]` for shifting voter `v` by `t`.
pub fn shift_bribery_oracle(e: &Election, goal: Goal, rho: &[Vec<u64>]) -> Option<u64> {
    let m = e.m();
    let mut best: Option<u64> = None;
    for choice in rho.iter().map(|r| 0..r.len()).multi_cartesian_product() {
        let cost: u64 = choice.iter().enumerate().map(|(v, &t)| rho[v][t]).sum();
        let profile: Vec<Vec<usize>> = e
            .voters()
            .iter()
            .zip(&choice)
            .map(|(v, &t)| {
                let mut r = v.ranking().to_vec();
                let pos = v.position(goal.p);
                r.remove(pos);
                r.insert(pos - t, goal.p);
                r
            })
            .collect();
        if wins(&profile, m, goal) && best.is_none_or(|b| cost < b) {
            best = Some(cost);
        }
    }
    best
}

/// Minimum price of a voter set that can be rewritten arbitrarily to make `p` win.
pub fn priced_bribery_oracle(e: &Election, goal: Goal, price: &[u64]) -> Option<u64> {
    let (m, n) = (e.m(), e.n());
    let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    let mut best: Option<u64> = None;
    for mask in 0u32..1 << n {
        let bribed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let cost: u64 = bribed.iter().map(|&v| price[v]).sum();
        if best.is_some_and(|b| cost >= b) {
            continue;
        }
        let feasible = bribed
            .iter()
            .map(|_| 0..perms.len())
            .multi_cartesian_product()
            .any(|choice| {
                let mut profile: Vec<Vec<usize>> = e.voters().iter().map(|v| v.ranking().to_vec()).collect();
                for (&v, &i) in bribed.iter().zip(&choice) {
                    profile[v] = perms[i].clone();
                }
                wins(&profile, m, goal)
            });
        let feasible = feasible || (bribed.is_empty() && {
            let profile: Vec<Vec<usize>> = e.voters().iter().map(|v| v.ranking().to_vec()).collect();
            wins(&profile, m, goal)
        });
        if feasible {
            best = Some(cost);
        }
    }
    best
}

/// Dijkstra over the graph of orders joined by adjacent swaps.
pub fn permutation_graph_distance(from: &[usize], to: &[usize], prices: &SwapPrices) -> u64 {
    let mut dist: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut heap = BinaryHeap::new();
    dist.insert(from.to_vec(), 0);
    heap.push(Reverse((0u64, from.to_vec())));
    while let Some(Reverse((d, cur))) = heap.pop() {
        if cur == to {
            return d;
        }
        if dist.get(&cur).is_some_and(|&x| x < d) {
            continue;
        }
        for i in 0..cur.len() - 1 {
            let mut next = cur.clone();
            next.swap(i, i + 1);
            let nd = d + prices.price(cur[i], cur[i + 1]);
            if dist.get(&next).is_none_or(|&x| nd < x) {
                dist.insert(next.clone(), nd);
                heap.push(Reverse((nd, next)));
            }
        }
    }
    unreachable!("permutation graph is connected")
}

/// Recursive evaluation straight from the gate list.
pub fn eval_circuit(c: &Circuit, assignment: &[bool]) -> bool {
    fn go(c: &Circuit, g: usize, a: &[bool]) -> bool {
        let gate = &c.gates()[g];
        let vals: Vec<bool> = gate.inputs.iter().map(|&i| go(c, i, a)).collect();
        let t = vals.iter().filter(|&&b| b).count();
        match gate.kind {
            GateKind::Input(x) => a[x],
            GateKind::Not => !vals[0],
            GateKind::And2 | GateKind::AndBig => t == vals.len(),
            GateKind::Or2 | GateKind::OrBig => t > 0,
            GateKind::Maj => t * 2 > vals.len(),
        }
    }
    go(c, c.output(), assignment)
}

/// First weight-`k` row of the full truth table, rows ordered by their
/// sorted true-variable lists.
pub fn truth_table_wcs(c: &Circuit, k: usize) -> Option<Vec<usize>> {
    let n = c.num_vars();
    let mut hits: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|bits| bits.count_ones() as usize == k)
        .filter(|bits| {
            let a: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            eval_circuit(c, &a)
        })
        .map(|bits| (0..n).filter(|i| bits >> i & 1 == 1).collect())
        .collect();
    hits.sort();
    hits.into_iter().next()
}

/// Accepted ballots by scanning all subsets; smallest first, then lexicographic.
pub fn mab_oracle(m: usize, ballots: &[Vec<usize>], agenda: &[usize], size: Option<usize>, unanimous: bool) -> Option<Vec<usize>> {
    let mut hits: Vec<Vec<usize>> = Vec::new();
    for bits in 0u32..1 << m {
        let q: Vec<usize> = (0..m).filter(|i| bits >> i & 1 == 1).collect();
        if size.is_some_and(|s| s != q.len()) || !agenda.iter().all(|a| q.contains(a)) {
            continue;
        }
        let acc = ballots
            .iter()
            .filter(|b| 2 * q.iter().filter(|x| b.contains(x)).count() > q.len())
            .count();
        let ok = if unanimous { acc == ballots.len() } else { 2 * acc > ballots.len() };
        if ok {
            hits.push(q);
        }
    }
    hits.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    hits.into_iter().next()
}

pub fn random_order(r: &mut impl Rng, m: usize) -> PreferenceOrder {
    use rand::seq::SliceRandom;
    let mut v: Vec<usize> = (0..m).collect();
    v.shuffle(r);
    PreferenceOrder::new(v).unwrap()
}

pub fn random_election(r: &mut impl Rng, m: usize, n: usize) -> Election {
    Election::new(m, (0..n).map(|_| random_order(r, m)).collect()).unwrap()
}

pub fn random_swap_prices(r: &mut impl Rng, m: usize) -> SwapPrices {
    let mut rows = vec![vec![0u64; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let p = r.gen_range(1..=5);
            rows[a][b] = p;
            rows[b][a] = p;
        }
    }
    SwapPrices::from_matrix(&rows).unwrap()
}

/// Random circuit over `n` variables listing gates in topological order.
pub fn random_circuit(r: &mut impl Rng, n: usize) -> Circuit {
    use csc_core::circuit::CircuitBuilder;
    let mut b = CircuitBuilder::new(n);
    let mut ids: Vec<usize> = (0..n).map(|x| b.input(x)).collect();
    let extra = r.gen_range(1..=n + 6);
    for _ in 0..extra {
        let pick = |r: &mut dyn rand::RngCore, ids: &[usize]| ids[r.gen_range(0..ids.len())];
        let (kind, fan) = match r.gen_range(0..7) {
            0 => (GateKind::Not, 1),
            1 => (GateKind::And2, 2),
            2 => (GateKind::Or2, 2),
            3 => (GateKind::AndBig, r.gen_range(1..=4)),
            4 => (GateKind::OrBig, r.gen_range(1..=4)),
            _ => (GateKind::Maj, r.gen_range(1..=5)),
        };
        let inputs: Vec<usize> = (0..fan).map(|_| pick(r, &ids)).collect();
        ids.push(b.gate(kind, inputs));
    }
    let out = *ids.last().unwrap();
    b.finish(out).unwrap()
}
