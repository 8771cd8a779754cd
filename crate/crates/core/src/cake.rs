//! Cake cutting on `[0, 1]` with piecewise-polynomial value densities.
//!
//! Values are exact rationals. Cut queries are exact when the cut point is
//! rational (constant pieces, or linear pieces whose root is rational);
//! otherwise the smallest point of a fixed dyadic grid whose value reaches the
//! target is returned, within [`cut_tolerance`] of it.
//!
//! Density text format: a `player` line opens each player's density, followed
//! by `piece l r c0 c1 ...` lines giving `f(t) = c0 + c1 t + ...` on `[l, r)`.
//! Numbers are integers or fractions `p/q`; `#` starts a comment.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::circuit::tokens;
use crate::error::{Error, Result};

pub type Q = BigRational;

pub const MAX_DEGREE: usize = 3;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Largest gap between a bisected cut's value and the requested value.
pub fn cut_tolerance() -> Q {
    Q::new(BigInt::one(), BigInt::from(10u64.pow(13)))
}

/// Fairness slack used when some cut was not exact.
pub fn fairness_epsilon() -> Q {
    Q::new(BigInt::one(), BigInt::from(10u64.pow(9)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub lo: Q,
    pub hi: Q,
    /// `coeffs[i]` multiplies `t^i`.
    pub coeffs: Vec<Q>,
}

impl Segment {
    pub fn new(lo: Q, hi: Q, coeffs: Vec<Q>) -> Self {
        Segment { lo, hi, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval(&self, t: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * t + c)
    }

    fn antiderivative(&self, t: &Q) -> Q {
        let mut acc = Q::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = (acc + c / Q::from_integer(BigInt::from(i + 1))) * t;
        }
        acc
    }

    /// Integral over `[x, y]`, both inside the segment.
    pub fn mass(&self, x: &Q, y: &Q) -> Q {
        self.antiderivative(y) - self.antiderivative(x)
    }

    fn is_nonnegative(&self) -> bool {
        if self.eval(&self.lo).is_negative() || self.eval(&self.hi).is_negative() {
            return false;
        }
        let c = |i: usize| self.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
        match self.degree() {
            2 => {
                let r = -c(1) / (c(2) * q(2, 1));
                !(r > self.lo && r < self.hi && self.eval(&r).is_negative())
            }
            3 => {
                // f' = 3c3 t^2 + 2c2 t + c1, roots p ± s·sqrt(disc)
                let (a, b) = (c(3) * q(3, 1), c(2) * q(2, 1));
                let disc = &b * &b - q(4, 1) * &a * c(1);
                if disc.is_negative() {
                    return true;
                }
                let p = -&b / (q(2, 1) * &a);
                let s = Q::one() / (q(2, 1) * &a);
                for sign in [Q::one(), -Q::one()] {
                    let root = Surd {
                        a: p.clone(),
                        b: &s * &sign,
                    };
                    let inside = root.sub_rational(&self.lo).sign(&disc) == Ordering::Greater
                        && root.sub_rational(&self.hi).sign(&disc) == Ordering::Less;
                    if inside && root.eval_poly(&self.coeffs, &disc).sign(&disc) == Ordering::Less {
                        return false;
                    }
                }
                true
            }
            _ => true,
        }
    }
}

/// `a + b·sqrt(d)` for a fixed `d >= 0`.
#[derive(Clone, Debug)]
struct Surd {
    a: Q,
    b: Q,
}

impl Surd {
    fn sub_rational(&self, x: &Q) -> Surd {
        Surd {
            a: &self.a - x,
            b: self.b.clone(),
        }
    }

    fn mul(&self, o: &Surd, d: &Q) -> Surd {
        Surd {
            a: &self.a * &o.a + &self.b * &o.b * d,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    fn eval_poly(&self, coeffs: &[Q], d: &Q) -> Surd {
        coeffs.iter().rev().fold(
            Surd {
                a: Q::zero(),
                b: Q::zero(),
            },
            |acc, c| {
                let mut r = acc.mul(self, d);
                r.a += c;
                r
            },
        )
    }

    fn sign(&self, d: &Q) -> Ordering {
        let sa = self.a.cmp(&Q::zero());
        if d.is_zero() || self.b.is_zero() {
            return sa;
        }
        let sb = self.b.cmp(&Q::zero());
        if sa != Ordering::Less && sb != Ordering::Less {
            return Ordering::Greater;
        }
        if sa != Ordering::Greater && sb != Ordering::Greater {
            return Ordering::Less;
        }
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * d;
        if sa == Ordering::Greater {
            lhs.cmp(&rhs)
        } else {
            rhs.cmp(&lhs)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Density {
    segments: Vec<Segment>,
}

impl Density {
    /// Segments must tile `[0, 1]` in order, have degree at most
    /// [`MAX_DEGREE`], be nonnegative and integrate to exactly 1.
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::invalid("density needs at least one piece"));
        }
        let mut at = Q::zero();
        for (i, s) in segments.iter().enumerate() {
            if s.lo != at || s.hi <= s.lo {
                return Err(Error::invalid(format!("piece {i} does not continue the partition of [0,1] at {at}")));
            }
            if s.coeffs.is_empty() || s.degree() > MAX_DEGREE {
                return Err(Error::invalid(format!("piece {i}: degree must be between 0 and {MAX_DEGREE}")));
            }
            if !s.is_nonnegative() {
                return Err(Error::invalid(format!("piece {i}: density is negative somewhere")));
            }
            at = s.hi.clone();
        }
        if !at.is_one() {
            return Err(Error::invalid(format!("pieces end at {at}, not 1")));
        }
        let total: Q = segments.iter().map(|s| s.mass(&s.lo, &s.hi)).sum();
        if !total.is_one() {
            return Err(Error::invalid(format!("density integrates to {total}, not 1")));
        }
        Ok(Density { segments })
    }

    pub fn uniform() -> Self {
        Density {
            segments: vec![Segment::new(Q::zero(), Q::one(), vec![Q::one()])],
        }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn max_degree(&self) -> usize {
        self.segments.iter().map(Segment::degree).max().unwrap_or(0)
    }

    /// Value of `[a, b]`.
    pub fn value_between(&self, a: &Q, b: &Q) -> Q {
        let mut total = Q::zero();
        for s in &self.segments {
            let x = a.max(&s.lo);
            let y = b.min(&s.hi);
            if x < y {
                total += s.mass(x, y);
            }
        }
        total
    }
}

/// Finitely many disjoint intervals, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Piece {
    intervals: Vec<(Q, Q)>,
}

impl Piece {
    pub fn new(mut intervals: Vec<(Q, Q)>) -> Result<Self> {
        for (l, r) in &intervals {
            if l.is_negative() || r > &Q::one() || l > r {
                return Err(Error::invalid(format!("interval [{l}, {r}] is not inside [0,1]")));
            }
        }
        intervals.sort();
        if intervals.windows(2).any(|w| w[0].1 > w[1].0) {
            return Err(Error::invalid("intervals of a piece overlap"));
        }
        Ok(Piece { intervals })
    }

    pub fn interval(l: Q, r: Q) -> Result<Self> {
        Piece::new(vec![(l, r)])
    }

    pub fn whole() -> Self {
        Piece {
            intervals: vec![(Q::zero(), Q::one())],
        }
    }

    pub fn intervals(&self) -> &[(Q, Q)] {
        &self.intervals
    }

    pub fn union(&self, other: &Piece) -> Result<Piece> {
        Piece::new(self.intervals.iter().chain(&other.intervals).cloned().collect())
    }
}

pub fn measure(f: &Density, x: &Piece) -> Q {
    x.intervals.iter().map(|(l, r)| f.value_between(l, r)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub point: Q,
    /// Whether `[a, point]` has exactly the requested value.
    pub exact: bool,
}

/// Smallest `x >= a` with value of `[a, x]` equal to `v`, see the module docs
/// for inexact cases.
pub fn cut_query(f: &Density, a: &Q, v: &Q) -> Result<Cut> {
    if a.is_negative() || a > &Q::one() {
        return Err(Error::invalid(format!("cut start {a} outside [0,1]")));
    }
    let available = f.value_between(a, &Q::one());
    if v.is_negative() || v > &available {
        return Err(Error::invalid(format!("cut value {v} outside [0, {available}]")));
    }
    if v.is_zero() {
        return Ok(Cut {
            point: a.clone(),
            exact: true,
        });
    }
    let mut acc = Q::zero();
    for seg in &f.segments {
        if seg.hi <= *a {
            continue;
        }
        let s = a.max(&seg.lo).clone();
        let w = seg.mass(&s, &seg.hi);
        if &acc + &w < *v {
            acc += w;
            continue;
        }
        let need = v - &acc;
        return Ok(cut_in_segment(seg, &s, &need));
    }
    unreachable!("v is at most the value of [a, 1]")
}

fn cut_in_segment(seg: &Segment, s: &Q, need: &Q) -> Cut {
    let c = |i: usize| seg.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
    match seg.degree() {
        0 => {
            return Cut {
                point: s + need / c(0),
                exact: true,
            }
        }
        1 => {
            // c1/2 x^2 + c0 x - k = 0 with k = c0 s + c1/2 s^2 + need
            let (c0, c1) = (c(0), c(1));
            let k = &c0 * s + &c1 * s * s / q(2, 1) + need;
            let disc = &c0 * &c0 + q(2, 1) * &c1 * &k;
            if let Some(root) = rational_sqrt(&disc) {
                return Cut {
                    point: (root - c0) / c1,
                    exact: true,
                };
            }
        }
        _ => {}
    }
    grid_cut(seg, s, need)
}

fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Q::new(rn, rd))
}

/// Smallest point of the grid `s + i·(hi - s)/2^depth` reaching `need`; the
/// grid is fine enough that its value overshoots by at most the tolerance.
fn grid_cut(seg: &Segment, s: &Q, need: &Q) -> Cut {
    let width = &seg.hi - s;
    let bound_t = seg.lo.abs().max(seg.hi.abs());
    let mut max_density = Q::zero();
    let mut pow = Q::one();
    for c in &seg.coeffs {
        max_density += c.abs() * &pow;
        pow *= &bound_t;
    }
    let tol = cut_tolerance();
    let mut depth = 0u32;
    let mut cells = BigInt::one();
    while &width * &max_density > &tol * Q::from_integer(cells.clone()) && depth < 256 {
        depth += 1;
        cells <<= 1;
    }
    let step = &width / Q::from_integer(cells.clone());
    let (mut lo, mut hi) = (BigInt::zero(), cells);
    let at = |i: &BigInt| s + &step * Q::from_integer(i.clone());
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if seg.mass(s, &at(&mid)) >= *need {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let point = at(&hi);
    let exact = seg.mass(s, &point) == *need;
    Cut { point, exact }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub pieces: Vec<Piece>,
    pub gamma: usize,
    pub delta: usize,
    /// All cut points are exact, so fairness is checked without slack.
    pub exact: bool,
}

impl Division {
    pub fn new(pieces: Vec<Piece>, gamma: usize, delta: usize, exact: bool) -> Result<Self> {
        let n = pieces.len();
        let total: usize = pieces.iter().map(|p| p.intervals.len()).sum();
        if total > gamma * n {
            return Err(Error::invalid(format!("{total} intervals exceed gamma·n = {}", gamma * n)));
        }
        if let Some(i) = pieces.iter().position(|p| p.intervals.len() > delta) {
            return Err(Error::invalid(format!("player {i} receives more than {delta} intervals")));
        }
        let mut all: Vec<&(Q, Q)> = pieces.iter().flat_map(|p| &p.intervals).collect();
        all.sort();
        if all.windows(2).any(|w| w[0].1 > w[1].0) {
            return Err(Error::invalid("pieces of different players overlap"));
        }
        Ok(Division {
            pieces,
            gamma,
            delta,
            exact,
        })
    }

    pub fn n(&self) -> usize {
        self.pieces.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FairnessReport {
    /// `values[p][j]`: how much player `p` values the piece of player `j`.
    pub values: Vec<Vec<Q>>,
    pub proportional: bool,
    pub envy_free: bool,
    /// Every player values its own piece at exactly `1/n`.
    pub equitable: bool,
    /// All players value their own pieces equally.
    pub equal_values: bool,
    pub epsilon: Q,
}

pub fn check_fairness(div: &Division, densities: &[Density]) -> Result<FairnessReport> {
    let n = div.n();
    if densities.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: densities.len(),
        });
    }
    let eps = if div.exact { Q::zero() } else { fairness_epsilon() };
    let values: Vec<Vec<Q>> = densities
        .iter()
        .map(|f| div.pieces.iter().map(|x| measure(f, x)).collect())
        .collect();
    let share = q(1, n as i64);
    let own = |p: usize| &values[p][p];
    let proportional = (0..n).all(|p| own(p) >= &(&share - &eps));
    let envy_free = (0..n).all(|p| (0..n).all(|j| own(p) >= &(&values[p][j] - &eps)));
    let equitable = (0..n).all(|p| (own(p) - &share).abs() <= eps);
    let equal_values = (0..n).all(|p| (own(p) - own(0)).abs() <= eps);
    Ok(FairnessReport {
        values,
        proportional,
        envy_free,
        equitable,
        equal_values,
        epsilon: eps,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Welfare {
    Utilitarian,
    Egalitarian,
}

pub fn welfare(div: &Division, densities: &[Density], kind: Welfare) -> Result<Q> {
    if densities.len() != div.n() {
        return Err(Error::Dimension {
            expected: div.n(),
            got: densities.len(),
        });
    }
    let own = densities.iter().zip(&div.pieces).map(|(f, x)| measure(f, x));
    Ok(match kind {
        Welfare::Utilitarian => own.sum(),
        Welfare::Egalitarian => own.min().unwrap_or_else(Q::zero),
    })
}

/// Player 0 halves the cake by its own measure; player 1 picks the half it
/// values more, the left one on ties.
pub fn cut_and_choose(f0: &Density, f1: &Density) -> Result<Division> {
    let cut = cut_query(f0, &Q::zero(), &q(1, 2))?;
    let left = Piece::interval(Q::zero(), cut.point.clone())?;
    let right = Piece::interval(cut.point, Q::one())?;
    let pieces = if measure(f1, &left) >= measure(f1, &right) {
        vec![right, left]
    } else {
        vec![left, right]
    };
    Division::new(pieces, 1, 1, cut.exact)
}

/// The first remaining player marks a piece of value `1/n` from the left end;
/// every later player who values it above `1/n` trims it back to `1/n`; the
/// last one to trim leaves with it. The final player takes the rest.
pub fn last_diminisher(densities: &[Density]) -> Result<Division> {
    let n = densities.len();
    if n < 2 {
        return Err(Error::invalid("last diminisher needs at least two players"));
    }
    let share = q(1, n as i64);
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut pieces = vec![Piece::default(); n];
    let mut a = Q::zero();
    let mut exact = true;
    let mark = |f: &Density, a: &Q| -> Result<Cut> {
        if f.value_between(a, &Q::one()) <= share {
            Ok(Cut {
                point: Q::one(),
                exact: true,
            })
        } else {
            cut_query(f, a, &share)
        }
    };
    while remaining.len() > 1 {
        let first = mark(&densities[remaining[0]], &a)?;
        exact &= first.exact;
        let mut x = first.point;
        let mut holder = 0;
        for (idx, &p) in remaining.iter().enumerate().skip(1) {
            if densities[p].value_between(&a, &x) > share {
                let c = cut_query(&densities[p], &a, &share)?;
                exact &= c.exact;
                if c.point < x {
                    x = c.point;
                }
                holder = idx;
            }
        }
        let p = remaining.remove(holder);
        pieces[p] = Piece::interval(a.clone(), x.clone())?;
        a = x;
    }
    pieces[remaining[0]] = Piece::interval(a, Q::one())?;
    Division::new(pieces, 1, 1, exact)
}

pub fn parse_densities(text: &str) -> Result<Vec<Density>> {
    let mut players: Vec<Vec<Segment>> = Vec::new();
    let mut starts = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let toks = tokens(raw.split('#').next().unwrap());
        let Some(&(col, head)) = toks.first() else { continue };
        let err = |column: usize, message: String| Error::Parse { line, column, message };
        match head {
            "player" => {
                if toks.len() != 1 {
                    return Err(err(toks[1].0, "unexpected token after `player`".into()));
                }
                players.push(Vec::new());
                starts.push(line);
            }
            "piece" => {
                let Some(segs) = players.last_mut() else {
                    return Err(err(col, "`piece` before any `player`".into()));
                };
                if toks.len() < 4 {
                    return Err(err(col, "expected `piece l r c0 [c1 ...]`".into()));
                }
                let nums = toks[1..]
                    .iter()
                    .map(|&(c, t)| parse_rational(t).ok_or_else(|| err(c, format!("expected a rational, found `{t}`"))))
                    .collect::<Result<Vec<Q>>>()?;
                segs.push(Segment::new(nums[0].clone(), nums[1].clone(), nums[2..].to_vec()));
            }
            other => return Err(err(col, format!("unknown keyword `{other}`"))),
        }
    }
    if players.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no player found".into(),
        });
    }
    players
        .into_iter()
        .zip(starts)
        .map(|(segs, line)| {
            Density::new(segs).map_err(|e| Error::Parse {
                line,
                column: 1,
                message: e.to_string(),
            })
        })
        .collect()
}

pub fn parse_rational(t: &str) -> Option<Q> {
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (t.parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!d.is_zero()).then(|| Q::new(n, d))
}

pub fn densities_to_text(densities: &[Density]) -> String {
    let mut s = String::new();
    for f in densities {
        s.push_str("player\n");
        for seg in &f.segments {
            write!(s, "piece {} {}", seg.lo, seg.hi).unwrap();
            for c in &seg.coeffs {
                write!(s, " {c}").unwrap();
            }
            s.push('\n');
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(lo: Q, hi: Q, c: &[Q]) -> Segment {
        Segment::new(lo, hi, c.to_vec())
    }

    fn ramp() -> Density {
        Density::new(vec![seg(q(0, 1), q(1, 1), &[q(0, 1), q(2, 1)])]).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(Density::new(vec![seg(q(0, 1), q(1, 1), &[q(2, 1)])]).is_err());
        assert!(Density::new(vec![seg(q(0, 1), q(1, 2), &[q(2, 1)])]).is_err());
        assert!(Density::new(vec![seg(q(0, 1), q(1, 1), &[q(3, 2), q(-1, 1)])]).is_ok());
        assert!(Density::new(vec![seg(q(0, 1), q(1, 1), &[q(2, 1), q(-2, 1)])]).is_ok());
        assert!(Density::new(vec![seg(q(0, 1), q(1, 1), &[q(3, 1), q(-4, 1)])]).is_err());
        // 12(t - 1/2)^2 dips to 0 in the middle; integral 1
        assert!(Density::new(vec![seg(q(0, 1), q(1, 1), &[q(3, 1), q(-12, 1), q(12, 1)])]).is_ok());
        let quartic = seg(q(0, 1), q(1, 1), &[q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 1)]);
        assert!(Density::new(vec![quartic]).is_err());
    }

    #[test]
    fn cubic_positivity_uses_interior_extrema() {
        // (t - 1/2)^2 (t + 1) touches 0 at 1/2
        let touch = seg(q(0, 1), q(1, 1), &[q(1, 4), q(-3, 4), q(0, 1), q(1, 1)]);
        assert!(touch.is_nonnegative());
        let dip = seg(q(0, 1), q(1, 1), &[q(24, 100), q(-3, 4), q(0, 1), q(1, 1)]);
        assert!(!dip.is_nonnegative());
        // extrema at (3 ± sqrt 3)/6
        let low = seg(q(0, 1), q(1, 1), &[q(1, 10), q(-3, 1), q(9, 1), q(-6, 1)]);
        assert!(low.eval(&q(211, 1000)).is_negative());
        assert!(!low.is_nonnegative());
        let high = seg(q(0, 1), q(1, 1), &[q(1, 1), q(-3, 1), q(9, 1), q(-6, 1)]);
        assert!(high.is_nonnegative());
    }

    #[test]
    fn measures() {
        let u = Density::uniform();
        assert_eq!(measure(&u, &Piece::whole()), q(1, 1));
        assert_eq!(measure(&u, &Piece::default()), q(0, 1));
        let x = Piece::new(vec![(q(0, 1), q(1, 4)), (q(1, 2), q(3, 4))]).unwrap();
        assert_eq!(measure(&u, &x), q(1, 2));
        assert_eq!(measure(&ramp(), &Piece::interval(q(0, 1), q(1, 2)).unwrap()), q(1, 4));
        assert!(Piece::new(vec![(q(0, 1), q(1, 2)), (q(1, 4), q(3, 4))]).is_err());
    }

    #[test]
    fn cuts() {
        let u = Density::uniform();
        assert_eq!(cut_query(&u, &q(1, 3), &q(0, 1)).unwrap().point, q(1, 3));
        assert_eq!(
            cut_query(&u, &q(0, 1), &q(1, 3)).unwrap(),
            Cut {
                point: q(1, 3),
                exact: true
            }
        );
        assert_eq!(cut_query(&ramp(), &q(0, 1), &q(1, 4)).unwrap().point, q(1, 2));
        assert!(cut_query(&u, &q(1, 2), &q(3, 4)).is_err());
        // ramp from 0 to 1/3 has no rational cut: sqrt(1/3)
        let c = cut_query(&ramp(), &q(0, 1), &q(1, 3)).unwrap();
        assert!(!c.exact);
        let got = ramp().value_between(&q(0, 1), &c.point);
        assert!(got >= q(1, 3) && got - q(1, 3) <= cut_tolerance());
    }

    #[test]
    fn cut_skips_zero_density_gap() {
        let f = Density::new(vec![
            seg(q(0, 1), q(1, 2), &[q(2, 1)]),
            seg(q(1, 2), q(3, 4), &[q(0, 1)]),
            seg(q(3, 4), q(1, 1), &[q(0, 1)]),
        ])
        .unwrap();
        assert_eq!(cut_query(&f, &q(0, 1), &q(1, 1)).unwrap().point, q(1, 2));
        assert_eq!(cut_query(&f, &q(1, 2), &q(0, 1)).unwrap().point, q(1, 2));
    }

    #[test]
    fn protocols_on_uniform() {
        let u = Density::uniform();
        let d = cut_and_choose(&u, &u).unwrap();
        let r = check_fairness(&d, &[u.clone(), u.clone()]).unwrap();
        assert!(r.proportional && r.envy_free && r.equitable && r.equal_values);
        assert_eq!(r.values[0][0], q(1, 2));
        let d = last_diminisher(&[u.clone(), u.clone(), u.clone()]).unwrap();
        assert_eq!(d.pieces[0].intervals(), &[(q(0, 1), q(1, 3))]);
        assert_eq!(d.pieces[1].intervals(), &[(q(1, 3), q(2, 3))]);
        let r = check_fairness(&d, &[u.clone(), u.clone(), u.clone()]).unwrap();
        assert!(r.proportional && r.envy_free && r.equitable);
    }

    #[test]
    fn welfare_values() {
        let u = Density::uniform();
        let fs = [u.clone(), u.clone()];
        let all_to_one = Division::new(vec![Piece::whole(), Piece::default()], 1, 1, true).unwrap();
        assert_eq!(welfare(&all_to_one, &fs, Welfare::Utilitarian).unwrap(), q(1, 1));
        assert_eq!(welfare(&all_to_one, &fs, Welfare::Egalitarian).unwrap(), q(0, 1));
        let single = Division::new(vec![Piece::whole()], 1, 1, true).unwrap();
        let r = check_fairness(&single, &[u]).unwrap();
        assert!(r.proportional && r.envy_free && r.equitable);
        assert!(Division::new(vec![Piece::whole(), Piece::whole()], 1, 1, true).is_err());
    }

    #[test]
    fn text_round_trip() {
        let text = "player\npiece 0 1 1\nplayer\npiece 0 1/2 1/2 1\npiece 1/2 1 5/4\n";
        let fs = parse_densities(text).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(densities_to_text(&fs), text);
        assert!(matches!(parse_densities("piece 0 1 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_densities("player\npiece 0 1 2\n"), Err(Error::Parse { line: 1, .. })));
    }
}
