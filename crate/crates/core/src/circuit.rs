//! Boolean circuits with small, large and majority gates, weighted circuit
//! satisfiability, and the majoritywise accepted ballot problem (MAB).
//!
//! Circuit text format, one item per line, `#` starts a comment:
//!
//! ```text
//! vars 3
//! 0 INPUT 0
//! 1 INPUT 1
//! 2 INPUT 2
//! 3 MAJ 0 1 2
//! OUTPUT 3
//! ```
//!
//! Gates are numbered `0, 1, 2, ...` in the order listed and may only read
//! earlier gates. `INPUT` takes a variable index below `vars`.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::control::binomial;
use crate::error::{Error, Result};

pub const DEFAULT_WCS_LIMIT: u128 = 10_000_000;
pub const DEFAULT_MAB_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GateKind {
    Input(usize),
    Not,
    And2,
    Or2,
    AndBig,
    OrBig,
    Maj,
}

impl GateKind {
    pub fn is_large(self) -> bool {
        matches!(self, GateKind::AndBig | GateKind::OrBig | GateKind::Maj)
    }

    fn name(self) -> &'static str {
        match self {
            GateKind::Input(_) => "INPUT",
            GateKind::Not => "NOT",
            GateKind::And2 => "AND2",
            GateKind::Or2 => "OR2",
            GateKind::AndBig => "ANDBIG",
            GateKind::OrBig => "ORBIG",
            GateKind::Maj => "MAJ",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate {
    pub kind: GateKind,
    pub inputs: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    num_vars: usize,
    gates: Vec<Gate>,
    output: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircuitMetrics {
    pub weft: usize,
    pub depth: usize,
}

impl Circuit {
    /// Validates fan-in and that every gate reads only earlier gates.
    pub fn new(num_vars: usize, gates: Vec<Gate>, output: usize) -> Result<Self> {
        for (id, g) in gates.iter().enumerate() {
            let fan_in = g.inputs.len();
            let ok = match g.kind {
                GateKind::Input(x) => {
                    if x >= num_vars {
                        return Err(Error::invalid(format!("gate {id}: variable {x} not declared")));
                    }
                    fan_in == 0
                }
                GateKind::Not => fan_in == 1,
                GateKind::And2 | GateKind::Or2 => (1..=2).contains(&fan_in),
                GateKind::AndBig | GateKind::OrBig | GateKind::Maj => fan_in >= 1,
            };
            if !ok {
                return Err(Error::invalid(format!("gate {id}: fan-in {fan_in} not allowed for {}", g.kind.name())));
            }
            if let Some(&bad) = g.inputs.iter().find(|&&i| i >= id) {
                return Err(Error::invalid(format!("gate {id} reads gate {bad}, which is not listed before it")));
            }
        }
        if output >= gates.len() {
            return Err(Error::invalid(format!("output gate {output} does not exist")));
        }
        Ok(Circuit { num_vars, gates, output })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// `assignment[x]` is the value of variable `x`.
    pub fn evaluate(&self, assignment: &[bool]) -> Result<bool> {
        if assignment.len() != self.num_vars {
            return Err(Error::Dimension {
                expected: self.num_vars,
                got: assignment.len(),
            });
        }
        let mut val: Vec<bool> = Vec::with_capacity(self.output + 1);
        for g in &self.gates[..=self.output] {
            let mut ins = g.inputs.iter().map(|&i| val[i]);
            let v = match g.kind {
                GateKind::Input(x) => assignment[x],
                GateKind::Not => !val[g.inputs[0]],
                GateKind::And2 | GateKind::AndBig => ins.all(|b| b),
                GateKind::Or2 | GateKind::OrBig => ins.any(|b| b),
                GateKind::Maj => 2 * ins.filter(|&b| b).count() > g.inputs.len(),
            };
            val.push(v);
        }
        Ok(val[self.output])
    }

    /// Evaluates with the listed variables true and all others false.
    pub fn evaluate_set(&self, true_vars: &[usize]) -> Result<bool> {
        let mut a = vec![false; self.num_vars];
        for &x in true_vars {
            if x >= self.num_vars {
                return Err(Error::invalid(format!("variable {x} not declared")));
            }
            a[x] = true;
        }
        self.evaluate(&a)
    }

    /// Longest input-to-output path, counting large gates (weft) and all
    /// non-input gates (depth).
    pub fn metrics(&self) -> CircuitMetrics {
        let mut weft = vec![0usize; self.gates.len()];
        let mut depth = vec![0usize; self.gates.len()];
        for (id, g) in self.gates.iter().enumerate() {
            if let GateKind::Input(_) = g.kind {
                continue;
            }
            weft[id] = g.inputs.iter().map(|&i| weft[i]).max().unwrap_or(0) + usize::from(g.kind.is_large());
            depth[id] = g.inputs.iter().map(|&i| depth[i]).max().unwrap_or(0) + 1;
        }
        CircuitMetrics {
            weft: weft[self.output],
            depth: depth[self.output],
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vars {}\n", self.num_vars);
        for (id, g) in self.gates.iter().enumerate() {
            write!(s, "{id} {}", g.kind.name()).unwrap();
            if let GateKind::Input(x) = g.kind {
                write!(s, " {x}").unwrap();
            }
            for i in &g.inputs {
                write!(s, " {i}").unwrap();
            }
            s.push('\n');
        }
        writeln!(s, "OUTPUT {}", self.output).unwrap();
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, column: usize, message: String| Error::Parse { line, column, message };
        let mut num_vars = None;
        let mut gates = Vec::new();
        let mut output = None;
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let body = raw.split('#').next().unwrap();
            let toks: Vec<(usize, &str)> = tokens(body);
            let Some(&(col, head)) = toks.first() else { continue };
            let num = |(c, t): (usize, &str)| -> Result<usize> {
                t.parse().map_err(|_| err(line, c, format!("expected a number, found `{t}`")))
            };
            match head {
                "vars" => {
                    if num_vars.is_some() || !gates.is_empty() {
                        return Err(err(line, col, "`vars` must come first and only once".into()));
                    }
                    if toks.len() != 2 {
                        return Err(err(line, col, "expected `vars N`".into()));
                    }
                    num_vars = Some(num(toks[1])?);
                }
                "OUTPUT" => {
                    if toks.len() != 2 || output.is_some() {
                        return Err(err(line, col, "expected a single `OUTPUT gid`".into()));
                    }
                    output = Some(num(toks[1])?);
                }
                _ => {
                    let Some(nv) = num_vars else {
                        return Err(err(line, col, "`vars N` must be declared first".into()));
                    };
                    if output.is_some() {
                        return Err(err(line, col, "gate after OUTPUT".into()));
                    }
                    let id = num(toks[0])?;
                    if id != gates.len() {
                        return Err(err(line, col, format!("expected gate id {}, found {id}", gates.len())));
                    }
                    let Some(&(kc, kind)) = toks.get(1) else {
                        return Err(err(line, col, "missing gate kind".into()));
                    };
                    let mut args = toks[2..].iter().map(|&t| num(t)).collect::<Result<Vec<_>>>()?;
                    let kind = match kind {
                        "INPUT" => {
                            if args.len() != 1 {
                                return Err(err(line, kc, "INPUT takes one variable index".into()));
                            }
                            if args[0] >= nv {
                                return Err(err(line, toks[2].0, format!("variable {} not declared", args[0])));
                            }
                            GateKind::Input(args.pop().unwrap())
                        }
                        "NOT" => GateKind::Not,
                        "AND2" => GateKind::And2,
                        "OR2" => GateKind::Or2,
                        "ANDBIG" => GateKind::AndBig,
                        "ORBIG" => GateKind::OrBig,
                        "MAJ" => GateKind::Maj,
                        other => return Err(err(line, kc, format!("unknown gate kind `{other}`"))),
                    };
                    gates.push(Gate { kind, inputs: args });
                }
            }
        }
        let output = output.ok_or_else(|| err(text.lines().count().max(1), 1, "missing OUTPUT line".into()))?;
        Circuit::new(num_vars.unwrap_or(0), gates, output)
    }
}

/// Whitespace-separated tokens with 1-based columns.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Incremental construction helper; gate ids are returned as they are added.
#[derive(Clone, Debug, Default)]
pub struct CircuitBuilder {
    num_vars: usize,
    gates: Vec<Gate>,
}

impl CircuitBuilder {
    pub fn new(num_vars: usize) -> Self {
        CircuitBuilder {
            num_vars,
            gates: Vec::new(),
        }
    }

    pub fn gate(&mut self, kind: GateKind, inputs: Vec<usize>) -> usize {
        self.gates.push(Gate { kind, inputs });
        self.gates.len() - 1
    }

    pub fn input(&mut self, x: usize) -> usize {
        self.gate(GateKind::Input(x), vec![])
    }

    pub fn finish(self, output: usize) -> Result<Circuit> {
        Circuit::new(self.num_vars, self.gates, output)
    }
}

/// First weight-`k` satisfying assignment, as the ascending list of true
/// variables, in lexicographic order of that list.
pub fn wcs_solve(c: &Circuit, k: usize) -> Result<Option<Vec<usize>>> {
    wcs_solve_with_limit(c, k, DEFAULT_WCS_LIMIT)
}

pub fn wcs_solve_with_limit(c: &Circuit, k: usize, limit: u128) -> Result<Option<Vec<usize>>> {
    let n = c.num_vars();
    let count = binomial(n, k);
    if count > limit {
        return Err(Error::capacity("weight-k assignments", count, limit));
    }
    let mut a = vec![false; n];
    for set in (0..n).combinations(k) {
        for &x in &set {
            a[x] = true;
        }
        let sat = c.evaluate(&a)?;
        for &x in &set {
            a[x] = false;
        }
        if sat {
            return Ok(Some(set));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MabInstance {
    m: usize,
    ballots: Vec<Vec<usize>>,
    agenda: Vec<usize>,
}

impl MabInstance {
    /// Proposals are `0..m`; ballots and agenda are deduplicated and sorted.
    pub fn new(m: usize, ballots: Vec<Vec<usize>>, agenda: Vec<usize>) -> Result<Self> {
        if m > 64 {
            return Err(Error::capacity("number of proposals", m as u64, 64u64));
        }
        let clean = |mut s: Vec<usize>| -> Result<Vec<usize>> {
            if let Some(&bad) = s.iter().find(|&&p| p >= m) {
                return Err(Error::invalid(format!("proposal {bad} outside 0..{m}")));
            }
            s.sort_unstable();
            s.dedup();
            Ok(s)
        };
        Ok(MabInstance {
            m,
            ballots: ballots.into_iter().map(clean).collect::<Result<_>>()?,
            agenda: clean(agenda)?,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ballots(&self) -> &[Vec<usize>] {
        &self.ballots
    }

    pub fn agenda(&self) -> &[usize] {
        &self.agenda
    }

    /// Does the ballot `q` pass: more than half (or all, if unanimous) of the
    /// voters share more than half of `q`.
    pub fn accepts(&self, q: &[usize], unanimous: bool) -> bool {
        let qm = mask(q);
        let accepting = self
            .ballots
            .iter()
            .filter(|b| 2 * (mask(b) & qm).count_ones() as usize > q.len())
            .count();
        if unanimous {
            accepting == self.ballots.len()
        } else {
            2 * accepting > self.ballots.len()
        }
    }
}

impl MabInstance {
    /// Text form: `proposals m`, then optional `agenda ...`, then one
    /// `ballot ...` line per voter listing proposal indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut m = None;
        let mut agenda = Vec::new();
        let mut ballots = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let toks = tokens(raw.split('#').next().unwrap());
            let Some(&(col, head)) = toks.first() else { continue };
            let err = |column: usize, message: String| Error::Parse { line, column, message };
            let nums = toks[1..]
                .iter()
                .map(|&(c, t)| t.parse::<usize>().map_err(|_| err(c, format!("expected a number, found `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            match head {
                "proposals" if m.is_none() && nums.len() == 1 => m = Some(nums[0]),
                "agenda" if m.is_some() && ballots.is_empty() => agenda = nums,
                "ballot" if m.is_some() => ballots.push(nums),
                _ => return Err(err(col, format!("unexpected `{head}` line"))),
            }
        }
        let m = m.ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: "missing `proposals m` line".into(),
        })?;
        MabInstance::new(m, ballots, agenda)
    }

    pub fn to_text(&self) -> String {
        let join = |s: &[usize]| s.iter().map(|p| format!(" {p}")).collect::<String>();
        let mut s = format!("proposals {}\n", self.m);
        if !self.agenda.is_empty() {
            writeln!(s, "agenda{}", join(&self.agenda)).unwrap();
        }
        for b in &self.ballots {
            writeln!(s, "ballot{}", join(b)).unwrap();
        }
        s
    }
}

fn mask(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |m, &p| m | 1 << p)
}

/// Smallest, then lexicographically first, accepted ballot containing the
/// agenda. With `size` given only ballots of exactly that size are tried.
pub fn mab_solve(inst: &MabInstance, size: Option<usize>, unanimous: bool) -> Result<Option<Vec<usize>>> {
    mab_solve_with_limit(inst, size, unanimous, DEFAULT_MAB_LIMIT)
}

pub fn mab_solve_with_limit(
    inst: &MabInstance,
    size: Option<usize>,
    unanimous: bool,
    limit_m: usize,
) -> Result<Option<Vec<usize>>> {
    let m = inst.m();
    if m > limit_m {
        return Err(Error::capacity("number of proposals", m as u64, limit_m as u64));
    }
    let agenda = inst.agenda();
    let free: Vec<usize> = (0..m).filter(|p| agenda.binary_search(p).is_err()).collect();
    let sizes = match size {
        Some(s) if s < agenda.len() || s > m => return Ok(None),
        Some(s) => s..=s,
        None => agenda.len()..=m,
    };
    for s in sizes {
        for extra in free.iter().copied().combinations(s - agenda.len()) {
            let mut q: Vec<usize> = agenda.iter().copied().chain(extra).collect();
            q.sort_unstable();
            if inst.accepts(&q, unanimous) {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

/// Circuit over one variable per proposal whose weight-`k` satisfying
/// assignments are exactly the accepted ballots of size `k` containing the
/// agenda.
///
/// A voter with ballot `B` accepts a size-`k` ballot iff it shares at least
/// `t = k/2 + 1` proposals with it. A MAJ gate over the `b = |B|` proposal
/// variables is padded with constants so that its threshold becomes `t`:
/// `b - 2t + 1` true inputs if `b >= 2t - 1`, else `2t - 1 - b` false inputs.
pub fn mab_to_majority_circuit(inst: &MabInstance, k: usize, unanimous: bool) -> Result<Circuit> {
    let m = inst.m();
    if m == 0 || k == 0 {
        return Err(Error::invalid("encoding needs at least one proposal and k >= 1"));
    }
    if inst.ballots().is_empty() {
        return Err(Error::invalid("encoding needs at least one voter"));
    }
    let mut b = CircuitBuilder::new(m);
    let vars: Vec<usize> = (0..m).map(|p| b.input(p)).collect();
    let not0 = b.gate(GateKind::Not, vec![vars[0]]);
    let falsum = b.gate(GateKind::And2, vec![vars[0], not0]);
    let verum = b.gate(GateKind::Not, vec![falsum]);
    let t = k / 2 + 1;
    let mut voters = Vec::with_capacity(inst.ballots().len());
    for ballot in inst.ballots() {
        let mut ins: Vec<usize> = ballot.iter().map(|&p| vars[p]).collect();
        let bl = ins.len();
        if bl >= 2 * t - 1 {
            ins.extend(std::iter::repeat_n(verum, bl + 1 - 2 * t));
        } else {
            ins.extend(std::iter::repeat_n(falsum, 2 * t - 1 - bl));
        }
        voters.push(b.gate(GateKind::Maj, ins));
    }
    let mut out = b.gate(if unanimous { GateKind::AndBig } else { GateKind::Maj }, voters);
    for &q in inst.agenda() {
        out = b.gate(GateKind::And2, vec![out, vars[q]]);
    }
    b.finish(out)
}
