//! Constructive control by deleting voters under d-Approval (CCDV).
//!
//! Deleting a voter who approves `p` never helps `p`, so only voters that
//! approve some *relevant* rival are worth deleting. Relevant rivals are those
//! `p` still has to catch up with; every one of them needs at least one
//! deletion, and one deletion lowers at most `d` scores, hence `|R| <= d·k` for
//! any yes-instance. Voters approving the same subset of `R` are
//! interchangeable, so [`ccdv_fpt`] only guesses how many to delete per class.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::election::{Alt, Election, WinnerMode};
use crate::error::{Error, Result};

pub const DEFAULT_SUBSET_LIMIT: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApprovalView {
    pub d: usize,
    /// Approved alternatives of each voter, ascending.
    pub approves: Vec<Vec<Alt>>,
    pub scores: Vec<u64>,
}

pub fn approval_view(e: &Election, d: usize) -> Result<ApprovalView> {
    if d == 0 || d >= e.m() {
        return Err(Error::invalid(format!("approval depth {d} outside 1..{}", e.m())));
    }
    let mut scores = vec![0u64; e.m()];
    let approves = e
        .voters()
        .iter()
        .map(|v| {
            let mut top: Vec<Alt> = v.ranking()[..d].to_vec();
            top.sort_unstable();
            for &c in &top {
                scores[c] += 1;
            }
            top
        })
        .collect();
    Ok(ApprovalView { d, approves, scores })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControlInstance {
    pub election: Election,
    pub d: usize,
    pub p: Alt,
    pub k: usize,
    pub mode: WinnerMode,
}

impl ControlInstance {
    pub fn new(election: Election, d: usize, p: Alt, k: usize) -> Result<Self> {
        if p >= election.m() {
            return Err(Error::invalid(format!("alternative {p} out of range")));
        }
        if d == 0 || d >= election.m() {
            return Err(Error::invalid(format!("approval depth {d} outside 1..{}", election.m())));
        }
        if k > election.n() {
            return Err(Error::invalid(format!("budget {k} exceeds the {} voters", election.n())));
        }
        Ok(ControlInstance {
            election,
            d,
            p,
            k,
            mode: WinnerMode::CoWinner,
        })
    }

    pub fn with_mode(mut self, mode: WinnerMode) -> Self {
        self.mode = mode;
        self
    }
}

/// Voters approving the same relevant rivals (and the same `p` flag).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoterClass {
    pub approved_relevant: Vec<Alt>,
    pub approves_p: bool,
    /// Ascending voter indices.
    pub voters: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelevanceSplit {
    pub scores: Vec<u64>,
    pub irrelevant: Vec<Alt>,
    pub relevant: Vec<Alt>,
    /// `V_p`: voters approving `p`.
    pub approvers_of_p: Vec<usize>,
    /// `V_R`: voters approving some relevant rival but not `p`.
    pub relevant_voters: Vec<usize>,
    /// Partition of `V_p ∪ V_R`, ordered by key.
    pub classes: Vec<VoterClass>,
}

impl RelevanceSplit {
    /// Classes a deletion may draw from (those not approving `p`).
    pub fn deletable_classes(&self) -> impl Iterator<Item = &VoterClass> {
        self.classes.iter().filter(|c| !c.approves_p)
    }
}

/// A rival is relevant when `p` does not yet win against it: `s(c) > s(p)` for
/// co-winners, `s(c) >= s(p)` for a unique winner.
pub fn relevance_split(e: &Election, d: usize, p: Alt, mode: WinnerMode) -> Result<RelevanceSplit> {
    if p >= e.m() {
        return Err(Error::invalid(format!("alternative {p} out of range")));
    }
    let view = approval_view(e, d)?;
    Ok(split_from_view(&view, p, mode))
}

fn split_from_view(view: &ApprovalView, p: Alt, mode: WinnerMode) -> RelevanceSplit {
    let s = &view.scores;
    let is_relevant = |c: Alt| {
        c != p
            && match mode {
                WinnerMode::CoWinner => s[c] > s[p],
                WinnerMode::Unique => s[c] >= s[p],
            }
    };
    let m = s.len();
    let relevant: Vec<Alt> = (0..m).filter(|&c| is_relevant(c)).collect();
    let irrelevant: Vec<Alt> = (0..m).filter(|&c| c != p && !is_relevant(c)).collect();

    let mut approvers_of_p = Vec::new();
    let mut relevant_voters = Vec::new();
    let mut classes: BTreeMap<(Vec<Alt>, bool), Vec<usize>> = BTreeMap::new();
    for (v, approved) in view.approves.iter().enumerate() {
        let approves_p = approved.contains(&p);
        let rel: Vec<Alt> = approved.iter().copied().filter(|&c| is_relevant(c)).collect();
        if approves_p {
            approvers_of_p.push(v);
        } else if !rel.is_empty() {
            relevant_voters.push(v);
        } else {
            continue;
        }
        classes.entry((rel, approves_p)).or_default().push(v);
    }
    let classes = classes
        .into_iter()
        .map(|((approved_relevant, approves_p), voters)| VoterClass {
            approved_relevant,
            approves_p,
            voters,
        })
        .collect();
    RelevanceSplit {
        scores: s.clone(),
        irrelevant,
        relevant,
        approvers_of_p,
        relevant_voters,
        classes,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedInstance {
    pub election: Election,
    /// Original indices of the surviving voters.
    pub kept: Vec<usize>,
}

/// Removes voters who approve only irrelevant alternatives, recomputing the
/// split until nothing changes.
pub fn reduce_instance(e: &Election, d: usize, p: Alt, mode: WinnerMode) -> Result<ReducedInstance> {
    let mut current = e.clone();
    let mut kept: Vec<usize> = (0..e.n()).collect();
    loop {
        let view = approval_view(&current, d)?;
        let split = split_from_view(&view, p, mode);
        let keep: Vec<usize> = (0..current.n())
            .filter(|&v| {
                view.approves[v]
                    .iter()
                    .any(|&c| c == p || split.relevant.binary_search(&c).is_ok())
            })
            .collect();
        if keep.len() == current.n() || keep.is_empty() {
            return Ok(ReducedInstance { election: current, kept });
        }
        current = current.restrict_voters(&keep)?;
        kept = keep.iter().map(|&i| kept[i]).collect();
    }
}

fn wins_after(scores: &[u64], view: &ApprovalView, deleted: &[usize], p: Alt, mode: WinnerMode) -> bool {
    if deleted.len() >= view.approves.len() {
        // deleting every voter is never a witness
        return false;
    }
    let mut s = scores.to_vec();
    for &v in deleted {
        for &c in &view.approves[v] {
            s[c] -= 1;
        }
    }
    mode.is_winner(&s, p)
}

/// Class-enumeration algorithm. Returns the deleted voters (ascending) of the
/// lexicographically first per-class deletion-count vector that makes `p` win.
pub fn ccdv_fpt(inst: &ControlInstance) -> Result<Option<Vec<usize>>> {
    let e = &inst.election;
    let view = approval_view(e, inst.d)?;
    if inst.mode.is_winner(&view.scores, inst.p) {
        return Ok(Some(Vec::new()));
    }
    let split = split_from_view(&view, inst.p, inst.mode);
    if split.relevant.len() > inst.d * inst.k {
        return Ok(None);
    }
    let classes: Vec<&VoterClass> = split.deletable_classes().collect();
    let mut counts = vec![0usize; classes.len()];
    let mut scores = view.scores.clone();
    let found = enumerate_counts(&classes, &view, inst, 0, inst.k, &mut counts, &mut scores, e.n());
    Ok(found.then(|| {
        let mut deleted: Vec<usize> = classes
            .iter()
            .zip(&counts)
            .flat_map(|(c, &k)| c.voters[..k].iter().copied())
            .collect();
        deleted.sort_unstable();
        deleted
    }))
}

#[allow(clippy::too_many_arguments)]
fn enumerate_counts(
    classes: &[&VoterClass],
    view: &ApprovalView,
    inst: &ControlInstance,
    idx: usize,
    budget: usize,
    counts: &mut [usize],
    scores: &mut [u64],
    remaining_voters: usize,
) -> bool {
    if idx == classes.len() {
        return remaining_voters > 0 && inst.mode.is_winner(scores, inst.p);
    }
    let class = classes[idx];
    let max = budget.min(class.voters.len());
    for count in 0..=max {
        if count > 0 {
            for &c in &view.approves[class.voters[count - 1]] {
                scores[c] -= 1;
            }
        }
        counts[idx] = count;
        if enumerate_counts(classes, view, inst, idx + 1, budget - count, counts, scores, remaining_voters - count) {
            return true;
        }
    }
    for &v in &class.voters[..max] {
        for &c in &view.approves[v] {
            scores[c] += 1;
        }
    }
    counts[idx] = 0;
    false
}

/// Exhaustive search over all deletion sets of size at most `k`, smallest
/// first and lexicographic within a size.
pub fn ccdv_bruteforce(inst: &ControlInstance) -> Result<Option<Vec<usize>>> {
    ccdv_bruteforce_with_limit(inst, DEFAULT_SUBSET_LIMIT)
}

pub fn ccdv_bruteforce_with_limit(inst: &ControlInstance, limit: u128) -> Result<Option<Vec<usize>>> {
    let n = inst.election.n();
    let total: u128 = (0..=inst.k.min(n)).map(|s| binomial(n, s)).sum();
    if total > limit {
        return Err(Error::capacity("deletion subsets", total, limit));
    }
    let view = approval_view(&inst.election, inst.d)?;
    for size in 0..=inst.k.min(n) {
        for subset in (0..n).combinations(size) {
            if wins_after(&view.scores, &view, &subset, inst.p, inst.mode) {
                return Ok(Some(subset));
            }
        }
    }
    Ok(None)
}

/// Whether deleting exactly these voters makes `p` win.
pub fn is_control_witness(inst: &ControlInstance, deleted: &[usize]) -> Result<bool> {
    let view = approval_view(&inst.election, inst.d)?;
    let mut seen = vec![false; inst.election.n()];
    for &v in deleted {
        if v >= seen.len() || seen[v] {
            return Ok(false);
        }
        seen[v] = true;
    }
    Ok(deleted.len() <= inst.k && wins_after(&view.scores, &view, deleted, inst.p, inst.mode))
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{scoring_winners, ScoringVector};
    use crate::fixtures;

    #[test]
    fn approval_tallies() {
        let e = fixtures::kemeny_example();
        let v = approval_view(&e, 2).unwrap();
        assert_eq!(v.scores, vec![2, 3, 1, 0]);
        let plur = approval_view(&e, 1).unwrap();
        let s = scoring_winners(&e, &ScoringVector::plurality(4)).unwrap();
        assert_eq!(plur.scores, s.scores);
        assert!(approval_view(&e, 0).is_err());
        assert!(approval_view(&e, 4).is_err());

        let u = Election::from_rankings(4, &[&[2, 0, 1, 3], &[2, 0, 1, 3], &[2, 0, 1, 3]]).unwrap();
        assert_eq!(approval_view(&u, 2).unwrap().scores, vec![3, 0, 3, 0]);
    }

    #[test]
    fn figure_one_split() {
        let e = fixtures::kemeny_example();
        let s = relevance_split(&e, 2, 0, WinnerMode::CoWinner).unwrap();
        assert_eq!(s.relevant, vec![1]);
        assert_eq!(s.irrelevant, vec![2, 3]);
        assert_eq!(s.approvers_of_p, vec![0, 1]);
        assert_eq!(s.relevant_voters, vec![2]);
        assert_eq!(s.deletable_classes().count(), 1);
        let u = relevance_split(&e, 2, 0, WinnerMode::Unique).unwrap();
        assert_eq!(u.relevant, vec![1]);
    }

    #[test]
    fn strict_leader_has_no_relevant_rivals() {
        let e = fixtures::kemeny_example();
        let s = relevance_split(&e, 2, 1, WinnerMode::Unique).unwrap();
        assert!(s.relevant.is_empty());
        let inst = ControlInstance::new(e, 2, 1, 0).unwrap();
        assert_eq!(ccdv_fpt(&inst).unwrap(), Some(vec![]));
    }

    #[test]
    fn zero_budget_loser() {
        let e = fixtures::kemeny_example();
        let inst = ControlInstance::new(e.clone(), 2, 2, 0).unwrap();
        assert_eq!(ccdv_fpt(&inst).unwrap(), None);
        assert_eq!(ccdv_bruteforce(&inst).unwrap(), None);
        // a1 (score 2) vs a2 (score 3): deleting voter 2 levels them
        let inst = ControlInstance::new(e, 2, 0, 1).unwrap();
        assert_eq!(ccdv_fpt(&inst).unwrap(), Some(vec![2]));
        assert_eq!(ccdv_bruteforce(&inst).unwrap(), Some(vec![2]));
        let unique = inst.clone().with_mode(WinnerMode::Unique);
        assert_eq!(ccdv_fpt(&unique).unwrap(), None);
        assert_eq!(ccdv_bruteforce(&unique).unwrap(), None);
    }

    #[test]
    fn reduction_drops_voters_of_irrelevant_alternatives() {
        // p = 0; voter 3 approves only {3, 4}, both irrelevant
        let e = Election::from_rankings(
            5,
            &[&[0, 1, 2, 3, 4], &[1, 2, 0, 3, 4], &[1, 0, 2, 3, 4], &[3, 4, 0, 1, 2]],
        )
        .unwrap();
        let r = reduce_instance(&e, 2, 0, WinnerMode::CoWinner).unwrap();
        assert_eq!(r.kept, vec![0, 1, 2]);
        let again = reduce_instance(&r.election, 2, 0, WinnerMode::CoWinner).unwrap();
        assert_eq!(again.election, r.election);
        for k in 0..=3 {
            let before = ControlInstance::new(e.clone(), 2, 0, k).unwrap();
            let after = ControlInstance::new(r.election.clone(), 2, 0, k.min(3)).unwrap();
            assert_eq!(
                ccdv_bruteforce(&before).unwrap().is_some(),
                ccdv_bruteforce(&after).unwrap().is_some()
            );
        }
        let clean = fixtures::kemeny_example();
        assert_eq!(reduce_instance(&clean, 2, 0, WinnerMode::CoWinner).unwrap().election, clean);
    }

    #[test]
    fn deleting_everyone_is_not_a_witness() {
        // p = 2 is never approved with d = 1; its rivals can only reach 0 by deleting all
        let e = Election::from_rankings(3, &[&[0, 1, 2], &[1, 0, 2]]).unwrap();
        let inst = ControlInstance::new(e, 1, 2, 2).unwrap();
        assert_eq!(ccdv_bruteforce(&inst).unwrap(), None);
        assert_eq!(ccdv_fpt(&inst).unwrap(), None);
    }

    #[test]
    fn oracle_capacity() {
        let e = Election::new(3, vec![crate::PreferenceOrder::identity(3); 30]).unwrap();
        let inst = ControlInstance::new(e, 1, 2, 10).unwrap();
        assert!(ccdv_bruteforce_with_limit(&inst, 1000).unwrap_err().is_capacity());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(12, 3), 220);
        assert_eq!(binomial(3, 4), 0);
    }
}
