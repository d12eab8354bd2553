use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use super::EquivalenceClass;
use crate::diagrams::{enumerate_all, enumerate_connected, Composition, SkewShape};
use crate::invariants::fingerprint;
use crate::ops::{
    amalgamated_compose, build_from_staircase, check_hypotheses, compose_alpha_d, compose_d_beta, detect_staircase,
    protrusion, End, Side,
};
use crate::symfunc::SchurVector;

/// A rewrite that always produces a skew-equivalent diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Generator {
    /// `D ↦ D*`.
    Rotation,
    /// `α∘D ↦ α′∘D` for equivalent ribbons `α ∼ α′`.
    OuterRibbon,
    /// `D∘α ↦ D′∘α` for equivalent diagrams `D ∼ D′`.
    InnerDiagram,
    /// `D∘α ↦ D∘α′` for equivalent ribbons.
    InnerRibbon,
    /// `α∘D ↦ α∘D*`.
    RotateFactor,
    /// `α∘ωD ↦ α′∘ωD` for equivalent ribbons.
    AmalgamatedRibbon,
    /// `α∘ωD ↦ α∘ω*D*`.
    AmalgamatedRotation,
    /// A ribbon staircase presentation with its nesting reversed.
    NestingReversal,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Generator::Rotation => "rotation",
            Generator::OuterRibbon => "outer-ribbon",
            Generator::InnerDiagram => "inner-diagram",
            Generator::InnerRibbon => "inner-ribbon",
            Generator::RotateFactor => "rotate-factor",
            Generator::AmalgamatedRibbon => "amalgamated-ribbon",
            Generator::AmalgamatedRotation => "amalgamated-rotation",
            Generator::NestingReversal => "nesting-reversal",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairExplanation {
    pub left: String,
    pub right: String,
    /// Generators leading from `left` to `right`; `None` when unexplained.
    pub path: Option<Vec<Generator>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassExplanation {
    pub pairs: Vec<PairExplanation>,
}

impl ClassExplanation {
    pub fn fully_explained(&self) -> bool {
        self.pairs.iter().all(|p| p.path.is_some())
    }

    pub fn unexplained(&self) -> impl Iterator<Item = &PairExplanation> {
        self.pairs.iter().filter(|p| p.path.is_none())
    }
}

/// Breadth-first search over generator rewrites for diagrams of one size.
pub struct Explainer {
    n: usize,
    /// Search depth in generator applications.
    pub depth: usize,
    /// `X ↦ [(α, D)]` with `X = α∘D`.
    outer: HashMap<SkewShape, Vec<(Composition, SkewShape)>>,
    /// `X ↦ [(D, β)]` with `X = D∘β`.
    inner: HashMap<SkewShape, Vec<(SkewShape, Composition)>>,
    /// `X ↦ [(α, D, ω)]` with `X = α∘ωD` and the separation hypotheses holding.
    amalgamated: HashMap<SkewShape, Vec<(Composition, SkewShape, Composition)>>,
    /// Small diagrams grouped by fingerprint.
    small_classes: HashMap<SkewShape, Vec<SkewShape>>,
    ribbon_partners: HashMap<Composition, Vec<Composition>>,
}

fn compositions_of_len(k: usize, len: usize) -> impl Iterator<Item = Composition> {
    Composition::all(k).into_iter().filter(move |c| c.len() == len)
}

impl Explainer {
    /// Precomputes the factorizations of diagrams with `n` cells. Amalgamated
    /// factorizations use base diagrams of at most `max_base` cells.
    pub fn new(n: usize, max_base: usize) -> Self {
        let mut outer: HashMap<SkewShape, Vec<(Composition, SkewShape)>> = HashMap::new();
        let mut inner: HashMap<SkewShape, Vec<(SkewShape, Composition)>> = HashMap::new();
        let mut small_classes = HashMap::new();
        for k in 2..=n / 2 {
            if !n.is_multiple_of(k) {
                continue;
            }
            let m = n / k;
            let bases = enumerate_all(m);
            let ribbons = Composition::all(k);
            for d in &bases {
                for a in &ribbons {
                    let x = compose_alpha_d(a, d);
                    if x.is_connected() {
                        outer.entry(x).or_default().push((a.clone(), d.clone()));
                    }
                    let y = compose_d_beta(d, a);
                    if y.is_connected() {
                        inner.entry(y).or_default().push((d.clone(), a.clone()));
                    }
                }
            }
            let mut by_fp: HashMap<SchurVector, Vec<SkewShape>> = HashMap::new();
            for d in bases {
                by_fp.entry(fingerprint(&d)).or_default().push(d);
            }
            for class in by_fp.into_values().filter(|c| c.len() > 1) {
                for d in &class {
                    small_classes.insert(d.clone(), class.clone());
                }
            }
        }
        let mut amalgamated: HashMap<SkewShape, Vec<(Composition, SkewShape, Composition)>> = HashMap::new();
        for m in 2..=max_base.min(n.saturating_sub(1)) {
            for d in enumerate_connected(m) {
                for omega in protrusion(&d, End::Top) {
                    if !check_hypotheses(&d, &omega).holds() {
                        continue;
                    }
                    let w = omega.weight();
                    // |α|·m − (|α| − ℓ(α))·w = n.
                    for k in 2..=n {
                        if k * (m - w) + w > n {
                            break;
                        }
                        let rest = n - k * (m - w);
                        if !rest.is_multiple_of(w) || rest / w > k || rest / w == 0 {
                            continue;
                        }
                        for a in compositions_of_len(k, rest / w) {
                            if let Ok(x) = amalgamated_compose(&a, &d, &omega) {
                                amalgamated.entry(x).or_default().push((a, d.clone(), omega.clone()));
                            }
                        }
                    }
                }
            }
        }
        Explainer { n, depth: 2, outer, inner, amalgamated, small_classes, ribbon_partners: HashMap::new() }
    }

    /// Ribbons equivalent to `alpha`, other than `alpha` itself.
    fn partners(&mut self, alpha: &Composition) -> Vec<Composition> {
        if let Some(v) = self.ribbon_partners.get(alpha) {
            return v.clone();
        }
        let target = fingerprint(&SkewShape::from_ribbon(alpha));
        let mut parts = alpha.parts().to_vec();
        parts.sort_unstable();
        let mut out = Vec::new();
        loop {
            let c = Composition::new(parts.clone()).expect("positive parts");
            if &c != alpha && fingerprint(&SkewShape::from_ribbon(&c)) == target {
                out.push(c);
            }
            if !next_permutation(&mut parts) {
                break;
            }
        }
        self.ribbon_partners.insert(alpha.clone(), out.clone());
        out
    }

    /// All one-step rewrites of `x`.
    pub fn neighbors(&mut self, x: &SkewShape) -> Vec<(Generator, SkewShape)> {
        let mut out = vec![(Generator::Rotation, x.rotate180())];
        for (a, d) in self.outer.get(x).cloned().unwrap_or_default() {
            for b in self.partners(&a) {
                out.push((Generator::OuterRibbon, compose_alpha_d(&b, &d)));
            }
            out.push((Generator::RotateFactor, compose_alpha_d(&a, &d.rotate180())));
        }
        for (d, a) in self.inner.get(x).cloned().unwrap_or_default() {
            for b in self.partners(&a) {
                out.push((Generator::InnerRibbon, compose_d_beta(&d, &b)));
            }
            for e in self.small_classes.get(&d).cloned().unwrap_or_default() {
                out.push((Generator::InnerDiagram, compose_d_beta(&e, &a)));
            }
        }
        for (a, d, omega) in self.amalgamated.get(x).cloned().unwrap_or_default() {
            for b in self.partners(&a) {
                if let Ok(y) = amalgamated_compose(&b, &d, &omega) {
                    out.push((Generator::AmalgamatedRibbon, y));
                }
            }
            if let Ok(y) = amalgamated_compose(&a, &d.rotate180(), &omega.reverse()) {
                out.push((Generator::AmalgamatedRotation, y));
            }
        }
        for side in [Side::Se, Side::Nw] {
            if let Some(p) = detect_staircase(x, side) {
                if let Ok(y) = build_from_staircase(&p.reversed()) {
                    out.push((Generator::NestingReversal, y));
                }
            }
        }
        out.retain(|(_, y)| y != x && y.size() == self.n);
        out
    }

    /// Diagrams reachable from `x` within `depth` rewrites, with a shortest path to each.
    pub fn reachable(&mut self, x: &SkewShape) -> HashMap<SkewShape, Vec<Generator>> {
        let mut seen: HashMap<SkewShape, Vec<Generator>> = HashMap::new();
        seen.insert(x.clone(), Vec::new());
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(y) = queue.pop_front() {
            let path = seen[&y].clone();
            if path.len() == self.depth {
                continue;
            }
            for (g, z) in self.neighbors(&y) {
                if !seen.contains_key(&z) {
                    let mut p = path.clone();
                    p.push(g);
                    seen.insert(z.clone(), p);
                    queue.push_back(z);
                }
            }
        }
        seen
    }

    pub fn explain(&mut self, members: &[SkewShape]) -> ClassExplanation {
        let reach: Vec<HashMap<SkewShape, Vec<Generator>>> = members.iter().map(|m| self.reachable(m)).collect();
        let mut pairs = Vec::new();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let path = reach[i].get(&members[j]).cloned().or_else(|| {
                    reach[j].get(&members[i]).map(|p| p.iter().rev().copied().collect())
                });
                pairs.push(PairExplanation {
                    left: members[i].to_compact(),
                    right: members[j].to_compact(),
                    path,
                });
            }
        }
        ClassExplanation { pairs }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return false };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Links the members of a class by generator rewrites, two applications deep.
pub fn explain_by_generators(class: &EquivalenceClass) -> ClassExplanation {
    let mut e = Explainer::new(class.cells, 6);
    e.explain(&class.members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_pair() {
        let d: SkewShape = "3,1/".parse().unwrap();
        let mut e = Explainer::new(d.size(), 4);
        let ex = e.explain(&[d.clone(), d.rotate180()]);
        assert_eq!(ex.pairs[0].path, Some(vec![Generator::Rotation]));
    }

    #[test]
    fn permutations() {
        let mut v = vec![1, 1, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 3);
    }
}
