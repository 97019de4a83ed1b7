//! The alcove picture for `n = 3`: one triangle per element of length at
//! most `3m`, shaded when its Demazure operator vanishes at the root of
//! unity, with the top-length traces labeled by their quantum binomial.
//!
//! Coordinates are floating point, used only for drawing.

use std::f64::consts::PI;
use std::fmt::Write;

use nilcox::affine::{abi_triples, abi_word, AbiTriple, Word};
use nilcox::algebra::Engine;
use nilcox::demazure::{xi_binomial, xi_closed_formula};
use nilcox::exactnum::{Cyclotomic, CyclotomicField};
use nilcox::Result;
use num_traits::ToPrimitive;

const SIDE: f64 = 40.0;
const MARGIN: f64 = 20.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Identity,
    Vanishing,
    /// Length `3m` with a nonzero operator.
    Trace,
    Plain,
}

impl Kind {
    fn class(self) -> &'static str {
        match self {
            Kind::Identity => "identity",
            Kind::Vanishing => "vanishing",
            Kind::Trace => "trace",
            Kind::Plain => "plain",
        }
    }

    fn fill(self) -> &'static str {
        match self {
            Kind::Vanishing => "#8fb4e3",
            Kind::Trace => "#fff3c4",
            Kind::Identity | Kind::Plain => "#ffffff",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Alcove {
    pub triple: Option<AbiTriple>,
    pub length: usize,
    pub kind: Kind,
    pub vertices: [(f64, f64); 3],
    pub label: Option<String>,
    /// `|Xi| / m^2` for trace alcoves.
    pub magnitude: Option<f64>,
}

/// Vertex `j` of the fundamental alcove lies opposite the wall of `s_j`.
fn fundamental() -> [(f64, f64); 3] {
    [(0.0, 0.0), (SIDE, 0.0), (SIDE / 2.0, -SIDE * 3f64.sqrt() / 2.0)]
}

fn reflect(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let t = ((p.0 - a.0) * dx + (p.1 - a.1) * dy) / (dx * dx + dy * dy);
    let foot = (a.0 + t * dx, a.1 + t * dy);
    (2.0 * foot.0 - p.0, 2.0 * foot.1 - p.1)
}

/// `w s_i` is the neighbour of `w` across its wall of type `i`.
fn place(word: &Word) -> [(f64, f64); 3] {
    let mut v = fundamental();
    for &i in word.letters() {
        let i = i as usize;
        v[i] = reflect(v[i], v[(i + 1) % 3], v[(i + 2) % 3]);
    }
    v
}

fn abs_value(c: &Cyclotomic) -> f64 {
    let n = c.conductor() as f64;
    let (mut re, mut im) = (0.0, 0.0);
    for (k, q) in c.coeffs().iter().enumerate() {
        let q = q.to_f64().unwrap_or(0.0);
        let t = 2.0 * PI * k as f64 / n;
        re += q * t.cos();
        im += q * t.sin();
    }
    re.hypot(im)
}

fn binomial_label(big: usize, small: usize) -> String {
    if small == 0 || small == big {
        "1".to_string()
    } else if small == 1 || small + 1 == big {
        format!("[{big}]")
    } else {
        format!("[{big},{small}]")
    }
}

pub fn alcoves(m: usize) -> Result<Vec<Alcove>> {
    let engine = Engine::new(CyclotomicField::new(3, m), 3, m)?;
    let top = 3 * m;
    let mut out = vec![Alcove {
        triple: None,
        length: 0,
        kind: Kind::Identity,
        vertices: fundamental(),
        label: None,
        magnitude: None,
    }];
    for d in 1..=top {
        for t in abi_triples(d, 3) {
            let word = abi_word(t, 3)?;
            let vanishing = engine.is_zero(&engine.word_operator(&word));
            let mut alcove = Alcove {
                triple: Some(t),
                length: d,
                kind: if vanishing { Kind::Vanishing } else { Kind::Plain },
                vertices: place(&word),
                label: None,
                magnitude: None,
            };
            if d == top && !vanishing {
                alcove.kind = Kind::Trace;
                alcove.label = xi_binomial(t.a, m).map(|(big, small)| binomial_label(big, small));
                alcove.magnitude = Some(abs_value(&xi_closed_formula(t.a, m)) / (m * m) as f64);
            }
            out.push(alcove);
        }
    }
    Ok(out)
}

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

pub fn render(m: usize, alcoves: &[Alcove]) -> String {
    let xs = alcoves.iter().flat_map(|a| a.vertices.iter().map(|v| v.0));
    let ys = alcoves.iter().flat_map(|a| a.vertices.iter().map(|v| v.1));
    let (x0, x1) = xs.fold((f64::MAX, f64::MIN), |(lo, hi), x| (lo.min(x), hi.max(x)));
    let (y0, y1) = ys.fold((f64::MAX, f64::MIN), |(lo, hi), y| (lo.min(y), hi.max(y)));
    let (w, h) = (x1 - x0 + 2.0 * MARGIN, y1 - y0 + 2.0 * MARGIN);
    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        num(w),
        num(h),
        num(x0 - MARGIN),
        num(y0 - MARGIN),
        num(w),
        num(h)
    )
    .unwrap();
    writeln!(s, "<title>Alcoves of length at most {} for m = {m}</title>", 3 * m).unwrap();
    writeln!(s, r##"<g stroke="#444444" stroke-width="0.6">"##).unwrap();
    for a in alcoves {
        let pts: Vec<String> = a.vertices.iter().map(|v| format!("{},{}", num(v.0), num(v.1))).collect();
        let id = a.triple.map(|t| t.to_string()).unwrap_or_else(|| "e".to_string());
        let mut attrs = format!(r#"class="{}" data-element="{id}" data-length="{}""#, a.kind.class(), a.length);
        if let Some(mag) = a.magnitude {
            write!(attrs, r#" data-magnitude="{mag:.4}""#).unwrap();
        }
        writeln!(s, r#"<polygon {attrs} fill="{}" points="{}"/>"#, a.kind.fill(), pts.join(" ")).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, r#"<g font-family="serif" font-size="9" text-anchor="middle" dominant-baseline="middle">"#).unwrap();
    for a in alcoves {
        let text = match (&a.label, a.kind) {
            (Some(l), _) => l.clone(),
            (None, Kind::Identity) => "e".to_string(),
            _ => continue,
        };
        let cx = a.vertices.iter().map(|v| v.0).sum::<f64>() / 3.0;
        let cy = a.vertices.iter().map(|v| v.1).sum::<f64>() / 3.0;
        writeln!(s, r#"<text x="{}" y="{}">{text}</text>"#, num(cx), num(cy)).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, "</svg>").unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbours_share_an_edge() {
        let e = place(&Word::empty());
        let s1 = place(&Word(vec![1]));
        assert_eq!(e[0], s1[0]);
        assert_eq!(e[2], s1[2]);
        assert!((s1[1].0 - e[1].0).hypot(s1[1].1 - e[1].1) > SIDE);
        assert!(((s1[1].0 - s1[0].0).hypot(s1[1].1 - s1[0].1) - SIDE).abs() < 1e-9);
    }

    #[test]
    fn distinct_elements_get_distinct_alcoves() {
        let all = alcoves(2).unwrap();
        let mut centers: Vec<(i64, i64)> = all
            .iter()
            .map(|a| {
                let cx = a.vertices.iter().map(|v| v.0).sum::<f64>() / 3.0;
                let cy = a.vertices.iter().map(|v| v.1).sum::<f64>() / 3.0;
                ((cx * 100.0).round() as i64, (cy * 100.0).round() as i64)
            })
            .collect();
        let total = centers.len();
        centers.sort();
        centers.dedup();
        assert_eq!(centers.len(), total);
    }

    #[test]
    fn m2_has_twelve_traces_and_six_vanishing_at_the_top() {
        let all = alcoves(2).unwrap();
        let top: Vec<_> = all.iter().filter(|a| a.length == 6).collect();
        assert_eq!(top.len(), 18);
        assert_eq!(top.iter().filter(|a| a.kind == Kind::Trace).count(), 12);
        assert_eq!(top.iter().filter(|a| a.kind == Kind::Vanishing).count(), 6);
        assert_eq!(all[0].kind, Kind::Identity);
    }

    #[test]
    fn labels_at_m3() {
        let all = alcoves(3).unwrap();
        let labels: Vec<&str> = all.iter().filter_map(|a| a.label.as_deref()).collect();
        assert!(labels.contains(&"1"));
        assert!(labels.contains(&"[2]"));
    }
}
