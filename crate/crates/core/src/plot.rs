//! Static plots: framed dot grids in SVG or plain text.
//!
//! Columns are positions, increasing to the right; rows are values,
//! increasing upward. Highlights are shaded rectangles, one per highlight:
//! a window shades its positions × its value range, an entry set shades its
//! rectangular hull.

use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::intervals::{window, IntervalWindow};
use crate::perm::{EntryRef, Permutation, RectHull};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotFormat {
    Svg,
    Ascii,
}

impl FromStr for PlotFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(PlotFormat::Svg),
            "ascii" => Ok(PlotFormat::Ascii),
            _ => Err(Error::BadArguments(format!("unknown plot format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Highlight {
    Window(IntervalWindow),
    Entries(Vec<EntryRef>),
}

#[derive(Debug, Clone)]
pub struct PlotSpec {
    perm: Permutation,
    highlights: Vec<Highlight>,
    pub format: PlotFormat,
    /// SVG pixels per cell.
    pub cell_size: u32,
}

impl PlotSpec {
    pub fn new(perm: Permutation, format: PlotFormat) -> Self {
        PlotSpec {
            perm,
            highlights: Vec::new(),
            format,
            cell_size: 24,
        }
    }

    /// Shades positions `i..=j` over the values they take.
    pub fn highlight_window(&mut self, i: usize, j: usize) -> Result<&mut Self> {
        let w = window(&self.perm, i, j)?;
        self.highlights.push(Highlight::Window(w));
        Ok(self)
    }

    pub fn highlight_entries(&mut self, entries: Vec<EntryRef>) -> Result<&mut Self> {
        self.perm.rect_hull(&entries)?;
        self.highlights.push(Highlight::Entries(entries));
        Ok(self)
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn highlights(&self) -> &[Highlight] {
        &self.highlights
    }

    fn boxes(&self) -> Vec<RectHull> {
        self.highlights
            .iter()
            .map(|h| match h {
                Highlight::Window(w) => RectHull {
                    pmin: w.i,
                    pmax: w.j,
                    vmin: w.vmin,
                    vmax: w.vmax,
                },
                Highlight::Entries(es) => self.perm.rect_hull(es).expect("validated on insertion"),
            })
            .collect()
    }

    pub fn render(&self) -> String {
        match self.format {
            PlotFormat::Svg => self.svg(),
            PlotFormat::Ascii => self.ascii(),
        }
    }

    fn svg(&self) -> String {
        let n = self.perm.len() as u32;
        let c = self.cell_size.max(4);
        let margin = c / 2;
        let side = n * c + 2 * margin;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
        );
        for b in self.boxes() {
            let x = margin + (b.pmin as u32 - 1) * c;
            let y = margin + (n - b.vmax as u32) * c;
            let w = (b.pmax - b.pmin + 1) as u32 * c;
            let h = (b.vmax - b.vmin + 1) as u32 * c;
            let _ = writeln!(
                s,
                r##"  <rect class="highlight" x="{x}" y="{y}" width="{w}" height="{h}" fill="#c8c8c8"/>"##
            );
        }
        for k in 1..n {
            let t = margin + k * c;
            let end = margin + n * c;
            let _ = writeln!(
                s,
                r##"  <line class="grid" x1="{t}" y1="{margin}" x2="{t}" y2="{end}" stroke="#e0e0e0"/>"##
            );
            let _ = writeln!(
                s,
                r##"  <line class="grid" x1="{margin}" y1="{t}" x2="{end}" y2="{t}" stroke="#e0e0e0"/>"##
            );
        }
        let _ = writeln!(
            s,
            r#"  <rect class="frame" x="{margin}" y="{margin}" width="{w}" height="{w}" fill="none" stroke="black"/>"#,
            w = n * c
        );
        let r = (c as f64 * 0.2).max(1.5);
        for e in self.perm.entries() {
            let cx = margin as f64 + (e.position as f64 - 0.5) * c as f64;
            let cy = margin as f64 + (n as f64 - e.value as f64 + 0.5) * c as f64;
            let _ = writeln!(
                s,
                r#"  <circle class="entry" cx="{cx}" cy="{cy}" r="{r}" fill="black"/>"#
            );
        }
        s.push_str("</svg>\n");
        s
    }

    fn ascii(&self) -> String {
        let n = self.perm.len();
        let boxes = self.boxes();
        let mut s = String::new();
        for v in (1..=n).rev() {
            let row: Vec<&str> = (1..=n)
                .map(|p| {
                    let e = EntryRef { position: p, value: v };
                    if self.perm.value_at(p) == v {
                        "*"
                    } else if boxes.iter().any(|b| b.contains(e)) {
                        ":"
                    } else {
                        "."
                    }
                })
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn ascii_has_one_mark_per_line() {
        let out = PlotSpec::new(p("2413"), PlotFormat::Ascii).render();
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines.iter().all(|l| l.matches('*').count() == 1));
        assert_eq!(lines[0], ". * . .");
        assert_eq!(lines[3], ". . * .");
    }

    #[test]
    fn svg_highlight_geometry() {
        let mut spec = PlotSpec::new(p("52413"), PlotFormat::Svg);
        spec.cell_size = 10;
        spec.highlight_window(2, 5).unwrap();
        let out = spec.render();
        assert_eq!(out.matches(r#"class="highlight""#).count(), 1);
        assert_eq!(out.matches(r#"class="entry""#).count(), 5);
        // columns 2..5, rows 1..4, margin 5
        assert!(out.contains(r#"x="15" y="15" width="40" height="40""#), "{out}");
    }

    #[test]
    fn singleton_svg() {
        let out = PlotSpec::new(p("1"), PlotFormat::Svg).render();
        assert_eq!(out.matches("<circle").count(), 1);
        assert_eq!(out.matches(r#"class="frame""#).count(), 1);
    }

    #[test]
    fn highlight_validation() {
        let mut spec = PlotSpec::new(p("2413"), PlotFormat::Ascii);
        assert!(spec.highlight_window(3, 5).is_err());
        assert!(spec
            .highlight_entries(vec![EntryRef { position: 1, value: 1 }])
            .is_err());
        spec.highlight_entries(vec![
            EntryRef { position: 1, value: 2 },
            EntryRef { position: 3, value: 1 },
        ])
        .unwrap();
        let out = spec.render();
        assert_eq!(out.lines().nth(2).unwrap(), "* : : .");
    }
}
