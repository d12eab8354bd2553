use std::fmt;
use std::str::FromStr;

use super::amalgam::{protrudes, End};
use super::border::{border_decomposition, sub_ribbon, Side};
use crate::diagrams::{Cell, Composition, SkewShape, Step};
use crate::error::{Result, SkewError};

/// `α ∩ₘ β`.
pub fn m_intersect(alpha: &Composition, beta: &Composition, m: usize) -> Result<Composition> {
    let undefined = || SkewError::IntersectionUndefined(format!("{alpha} ∩{m} {beta}"));
    if m == 0 || alpha.is_empty() || beta.is_empty() || m > alpha.len() || m > beta.len() {
        return Err(undefined());
    }
    let a = alpha.parts();
    let b = beta.parts();
    let omega = if m == 1 {
        Composition::new(vec![a[a.len() - 1].min(b[0])])?
    } else {
        // First row from β, last row from α, the middle rows shared by both.
        let mut parts = vec![b[0]];
        parts.extend_from_slice(&a[a.len() - m + 1..]);
        if parts[1..m - 1] != b[1..m - 1] {
            return Err(undefined());
        }
        Composition::new(parts)?
    };
    let (ra, rb) = (SkewShape::from_ribbon(alpha), SkewShape::from_ribbon(beta));
    if !protrudes(&ra, &omega, End::Top) || !protrudes(&rb, &omega, End::Bottom) {
        return Err(undefined());
    }
    if &omega == alpha || &omega == beta {
        return Err(SkewError::TrivialIntersection(format!("{alpha} ∩{m} {beta} = {omega}")));
    }
    Ok(omega)
}

/// `α ∪ₘ β = α ⨿ω β` with `ω = α ∩ₘ β`.
pub fn m_union(alpha: &Composition, beta: &Composition, m: usize) -> Result<Composition> {
    let omega = m_intersect(alpha, beta, m)?;
    Ok(glue_ribbons(alpha, beta, omega.weight()))
}

/// Ribbon `α` followed by the cells of `β` past its first `w` cells.
fn glue_ribbons(alpha: &Composition, beta: &Composition, w: usize) -> Composition {
    let mut steps = alpha.steps();
    steps.extend_from_slice(&beta.steps()[w - 1..]);
    Composition::from_steps(&steps)
}

/// The ribbon staircase `ε^k_m(α)`.
pub fn staircase(alpha: &Composition, m: usize, k: usize) -> Result<Composition> {
    if m >= alpha.len() {
        return Err(SkewError::IntersectionUndefined(format!("depth {m} needs ℓ(α) > {m}")));
    }
    let omega = m_intersect(alpha, alpha, m)?;
    if k == 0 {
        return Ok(Composition::empty());
    }
    let mut acc = alpha.clone();
    for _ in 1..k {
        acc = glue_ribbons(&acc, alpha, omega.weight());
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NestLetter {
    Dot,
    Open,
    Close,
    Bar,
}

impl NestLetter {
    fn symbol(self) -> char {
        match self {
            NestLetter::Dot => '.',
            NestLetter::Open => '(',
            NestLetter::Close => ')',
            NestLetter::Bar => '|',
        }
    }

    fn mirror(self) -> NestLetter {
        match self {
            NestLetter::Open => NestLetter::Close,
            NestLetter::Close => NestLetter::Open,
            other => other,
        }
    }
}

/// A word over `. ( ) |` with balanced, properly nested parentheses.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nesting(Vec<NestLetter>);

impl Nesting {
    pub fn new(word: Vec<NestLetter>) -> Result<Self> {
        let mut depth = 0usize;
        for &l in &word {
            match l {
                NestLetter::Open => depth += 1,
                NestLetter::Close => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| SkewError::InvalidNesting("unmatched ')'".into()))?
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(SkewError::InvalidNesting("unmatched '('".into()));
        }
        Ok(Nesting(word))
    }

    pub fn dots(len: usize) -> Self {
        Nesting(vec![NestLetter::Dot; len])
    }

    pub fn letters(&self) -> &[NestLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `𝒩*`: the word read backwards.
    ///
    /// Reading backwards turns each `(` into a `)` and vice versa.
    pub fn reverse(&self) -> Nesting {
        Nesting(self.0.iter().rev().map(|l| l.mirror()).collect())
    }

    /// Parenthesis pairs `(i, j)` and bar positions `i`, 1-based.
    fn pieces(&self) -> (Vec<(usize, usize)>, Vec<usize>) {
        let mut pairs = Vec::new();
        let mut bars = Vec::new();
        let mut open = Vec::new();
        for (idx, &l) in self.0.iter().enumerate() {
            let pos = idx + 1;
            match l {
                NestLetter::Open => open.push(pos),
                NestLetter::Close => pairs.push((open.pop().expect("validated"), pos)),
                NestLetter::Bar => bars.push(pos),
                NestLetter::Dot => {}
            }
        }
        pairs.sort();
        (pairs, bars)
    }

    /// All valid nestings of the given length.
    pub fn all(len: usize) -> Vec<Nesting> {
        let letters = [NestLetter::Dot, NestLetter::Open, NestLetter::Close, NestLetter::Bar];
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(len);
        fn go(len: usize, depth: usize, letters: &[NestLetter; 4], word: &mut Vec<NestLetter>, out: &mut Vec<Nesting>) {
            if word.len() == len {
                if depth == 0 {
                    out.push(Nesting(word.clone()));
                }
                return;
            }
            if depth > len - word.len() {
                return;
            }
            for &l in letters {
                let next = match l {
                    NestLetter::Open => depth + 1,
                    NestLetter::Close if depth == 0 => continue,
                    NestLetter::Close => depth - 1,
                    _ => depth,
                };
                word.push(l);
                go(len, next, letters, word, out);
                word.pop();
            }
        }
        go(len, 0, &letters, &mut word, &mut out);
        out
    }
}

impl fmt::Display for Nesting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.symbol()).collect();
        f.write_str(&s)
    }
}

impl FromStr for Nesting {
    type Err = SkewError;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '.' => Ok(NestLetter::Dot),
                '(' => Ok(NestLetter::Open),
                ')' => Ok(NestLetter::Close),
                '|' => Ok(NestLetter::Bar),
                other => Err(SkewError::InvalidNesting(format!("unknown letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Nesting::new(word)
    }
}

/// `(ε^k_m(α), 𝒩)_side`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StaircasePresentation {
    pub alpha: Composition,
    pub m: usize,
    pub k: usize,
    pub nesting: Nesting,
    pub side: Side,
}

impl StaircasePresentation {
    /// The partner presentation with the reversed nesting.
    pub fn reversed(&self) -> StaircasePresentation {
        StaircasePresentation { nesting: self.nesting.reverse(), ..self.clone() }
    }

    /// Content intervals (relative to the staircase) of the ribbons other than the staircase.
    fn inner_intervals(&self, alpha_len: usize, omega_len: usize) -> Vec<(usize, usize)> {
        let shift = alpha_len - omega_len;
        let (pairs, bars) = self.nesting.pieces();
        let mut out: Vec<(usize, usize)> =
            pairs.iter().map(|&(i, j)| (i * shift, (j - 1) * shift + alpha_len - 1)).collect();
        out.extend(bars.iter().map(|&i| (i * shift, (i - 1) * shift + alpha_len - 1)));
        out
    }
}

impl fmt::Display for StaircasePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Se => "se",
            Side::Nw => "nw",
        };
        write!(f, "(ε^{}_{}({}), \"{}\")_{}", self.k, self.m, self.alpha, self.nesting, side)
    }
}

/// Cells of the ribbon `theta` with its southwesternmost cell at the origin.
fn ribbon_cells(theta: &Composition) -> Vec<Cell> {
    let mut cells = vec![(0i64, 0i64)];
    let (mut r, mut c) = (0, 0);
    for s in theta.steps() {
        match s {
            Step::Right => c += 1,
            Step::Up => r -= 1,
        }
        cells.push((r, c));
    }
    cells
}

/// The diagram whose `side` decomposition is `theta` plus ribbons on the given
/// content intervals of `theta`.
fn assemble(theta: &Composition, intervals: &[(usize, usize)], side: Side) -> Result<SkewShape> {
    let mut mult = vec![1i64; theta.weight()];
    for &(p, q) in intervals {
        for m in &mut mult[p..=q] {
            *m += 1;
        }
    }
    let d = match side {
        Side::Se => -1,
        Side::Nw => 1,
    };
    let cells = ribbon_cells(theta)
        .into_iter()
        .zip(mult)
        .flat_map(|((r, c), m)| (0..m).map(move |t| (r + t * d, c + t * d)));
    SkewShape::from_cells(cells).map_err(|e| SkewError::InvalidNesting(format!("not a skew diagram: {e}")))
}

/// Intervals with their ribbons as a sorted multiset, for comparison.
fn signature(intervals: &[(usize, usize)], ribbons: &[Composition]) -> Vec<(usize, usize, Composition)> {
    let mut sig: Vec<_> = intervals.iter().zip(ribbons).map(|(&(p, q), r)| (p, q, r.clone())).collect();
    sig.sort();
    sig
}

/// The diagram `(ε^k_m(α), 𝒩)_side`.
pub fn build_from_staircase(p: &StaircasePresentation) -> Result<SkewShape> {
    if p.k == 0 || p.nesting.len() + 1 != p.k {
        return Err(SkewError::InvalidNesting(format!("nesting length {} needs height {}", p.nesting.len(), p.nesting.len() + 1)));
    }
    let theta = staircase(&p.alpha, p.m, p.k)?;
    let omega = m_intersect(&p.alpha, &p.alpha, p.m)?;
    let intervals = p.inner_intervals(p.alpha.weight(), omega.weight());
    let shape = assemble(&theta, &intervals, p.side)?;
    // The border decomposition of the result must be exactly the prescribed one.
    let pi = border_decomposition(&shape, p.side).map_err(|e| SkewError::InvalidNesting(e.to_string()))?;
    let got: Vec<(usize, usize)> = pi.intervals()[1..].iter().map(|&(a, b)| (a as usize, b as usize)).collect();
    let expected_ribbons: Vec<Composition> = intervals.iter().map(|&(a, b)| sub_ribbon(&theta, a, b)).collect();
    if pi.ribbon(0) != &theta
        || signature(&got, &pi.ribbons()[1..]) != signature(&intervals, &expected_ribbons)
    {
        return Err(SkewError::InvalidNesting(format!("{} does not decompose as prescribed", p.nesting)));
    }
    Ok(shape)
}

/// A staircase presentation of `d` on the given side, with the lexicographically
/// least `(α, m)` among those that exist.
pub fn detect_staircase(d: &SkewShape, side: Side) -> Option<StaircasePresentation> {
    let pi = border_decomposition(d, side).ok()?;
    if pi.is_empty() {
        return None;
    }
    let theta = pi.ribbon(0).clone();
    let n = theta.weight();
    let steps = theta.steps();
    let mut best: Option<StaircasePresentation> = None;
    for len in 1..=n {
        let alpha = Composition::from_steps(&steps[..len - 1]);
        for m in 1..alpha.len() {
            if let Some(p) = try_presentation(d, &pi, &theta, &alpha, m, side) {
                let key = (&p.alpha, p.m);
                if best.as_ref().is_none_or(|b| key < (&b.alpha, b.m)) {
                    best = Some(p);
                }
            }
        }
    }
    best
}

fn try_presentation(
    d: &SkewShape,
    pi: &super::border::OutsideDecomposition,
    theta: &Composition,
    alpha: &Composition,
    m: usize,
    side: Side,
) -> Option<StaircasePresentation> {
    let omega = m_intersect(alpha, alpha, m).ok()?;
    let (a, w, n) = (alpha.weight(), omega.weight(), theta.weight());
    let shift = a - w;
    if n < a || (n - w) % shift != 0 {
        return None;
    }
    let k = (n - w) / shift;
    if &staircase(alpha, m, k).ok()? != theta {
        return None;
    }
    let mut word = vec![NestLetter::Dot; k - 1];
    let mut place = |pos: usize, letter: NestLetter| -> Option<()> {
        let slot = word.get_mut(pos.checked_sub(1)?)?;
        if *slot != NestLetter::Dot {
            return None;
        }
        *slot = letter;
        Some(())
    };
    for (idx, ribbon) in pi.ribbons().iter().enumerate().skip(1) {
        let (p, q) = pi.interval(idx);
        let (p, q) = (p as usize, q as usize);
        if ribbon == &omega && p % shift == 0 && q + 1 == p + w && p >= shift {
            // Intersection of copies i and i+1 starts where copy i+1 does.
            place(p / shift, NestLetter::Bar)?;
        } else if p % shift == 0 && q + 1 >= a && (q + 1 - a) % shift == 0 {
            let i = p / shift;
            let j = (q + 1 - a) / shift + 1;
            if j <= i || ribbon != &staircase(alpha, m, j - i).ok()? {
                return None;
            }
            place(i, NestLetter::Open)?;
            place(j, NestLetter::Close)?;
        } else {
            return None;
        }
    }
    let nesting = Nesting::new(word).ok()?;
    let p = StaircasePresentation { alpha: alpha.clone(), m, k, nesting, side };
    (build_from_staircase(&p).ok()? == *d).then_some(p)
}

/// The depth `m′ = |α ∩ₘ α| − (m − 1)` of the conjugate presentation.
pub fn conjugate_depth(alpha: &Composition, m: usize) -> Result<usize> {
    let omega = m_intersect(alpha, alpha, m)?;
    Ok(omega.weight() + 1 - m)
}

/// Conjugate of a ribbon.
pub fn ribbon_transpose(alpha: &Composition) -> Composition {
    SkewShape::from_ribbon(alpha).transpose().to_ribbon().expect("transpose of a ribbon is a ribbon")
}

/// Nestings of length `len` whose extra ribbons have at most `budget` cells in total,
/// for a staircase with copy shift `shift` and intersection size `w`.
fn nestings_within(len: usize, shift: usize, w: usize, budget: usize) -> Vec<Nesting> {
    struct Search {
        len: usize,
        shift: usize,
        w: usize,
        word: Vec<NestLetter>,
        open: Vec<usize>,
        out: Vec<Nesting>,
    }
    impl Search {
        fn go(&mut self, budget: usize) {
            let pos = self.word.len() + 1;
            if self.word.len() == self.len {
                if self.open.is_empty() {
                    self.out.push(Nesting(self.word.clone()));
                }
                return;
            }
            if self.open.len() > self.len - self.word.len() {
                return;
            }
            self.word.push(NestLetter::Dot);
            self.go(budget);
            self.word.pop();
            if budget >= self.w {
                self.word.push(NestLetter::Bar);
                self.go(budget - self.w);
                self.word.pop();
            }
            // The cheapest ribbon an open parenthesis can close into.
            if budget >= self.shift + self.w {
                self.word.push(NestLetter::Open);
                self.open.push(pos);
                self.go(budget);
                self.open.pop();
                self.word.pop();
            }
            if let Some(&i) = self.open.last() {
                let cost = (pos - i) * self.shift + self.w;
                if cost <= budget {
                    self.word.push(NestLetter::Close);
                    self.open.pop();
                    self.go(budget - cost);
                    self.open.push(i);
                    self.word.pop();
                }
            }
        }
    }
    let mut search = Search { len, shift, w, word: Vec::new(), open: Vec::new(), out: Vec::new() };
    search.go(budget);
    search.out
}

/// All valid presentations whose diagram has at most `max_cells` cells.
pub fn all_presentations(max_cells: usize, side: Side) -> Vec<(StaircasePresentation, SkewShape)> {
    let mut out = Vec::new();
    for a in 2..=max_cells {
        for alpha in Composition::all(a) {
            for m in 1..alpha.len() {
                let Ok(omega) = m_intersect(&alpha, &alpha, m) else { continue };
                let w = omega.weight();
                let shift = a - w;
                for k in 1.. {
                    let theta_len = k * shift + w;
                    if theta_len > max_cells {
                        break;
                    }
                    for nesting in nestings_within(k - 1, shift, w, max_cells - theta_len) {
                        let p = StaircasePresentation { alpha: alpha.clone(), m, k, nesting, side };
                        if let Ok(d) = build_from_staircase(&p) {
                            out.push((p, d));
                        }
                    }
                }
            }
        }
    }
    out
}
