use std::fmt;
use std::str::FromStr;

use crate::geometry::{Layout, Rect, Surface};
use crate::graph::vertex;
use crate::rational::decimal;

use super::{drect, ConstructError};

/// Hand-made layouts for graphs outside every parametrised construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedLayout {
    /// `D^2_9` on the plane.
    D2_9,
    /// `D^2_10` on a `7/2 x 9/2` torus.
    D2_10Torus,
}

impl FixedLayout {
    pub const ALL: [FixedLayout; 2] = [FixedLayout::D2_9, FixedLayout::D2_10Torus];

    pub fn name(self) -> &'static str {
        match self {
            FixedLayout::D2_9 => "D2_9",
            FixedLayout::D2_10Torus => "D2_10_torus",
        }
    }
}

impl fmt::Display for FixedLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixedLayout {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixedLayout::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ConstructError::UnknownFixed(s.to_string()))
    }
}

pub fn fixed_layout(which: FixedLayout) -> Result<Layout, ConstructError> {
    match which {
        FixedLayout::D2_9 => {
            // (x0, x1, y0, y1)
            let coords = [
                ("0", "1.5", "0", "0.75"),
                ("1.5", "2.25", "0.75", "2.25"),
                ("2.25", "3", "2.25", "3.75"),
                ("0", "0.75", "3.75", "5.25"),
                ("0.75", "2.25", "5.25", "6"),
                ("2.25", "3", "0", "1.5"),
                ("0", "0.75", "1.5", "3"),
                ("1.5", "2.25", "3", "4.5"),
                ("2.25", "3", "4.5", "6"),
            ];
            let rects = coords
                .iter()
                .enumerate()
                .map(|(k, (x0, x1, y0, y1))| drect(vertex(k + 1), x0, x1, y0, y1))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Layout::plane(rects))
        }
        FixedLayout::D2_10Torus => {
            let (w, h) = (decimal("3.5"), decimal("4.5"));
            // (x0, x1, y0, y1); v7 wraps horizontally.
            let coords = [
                ("0.5", "1.5", "0", "1"),
                ("1.5", "2.5", "1", "2"),
                ("2.5", "3.5", "2", "3"),
                ("0", "1", "3", "4"),
                ("1", "2", "4", "4.5"),
                ("2", "3", "0", "0.5"),
                ("3", "4", "0.5", "1.5"),
                ("0.5", "1.5", "1.5", "2.5"),
                ("1.5", "2.5", "2.5", "3.5"),
                ("2.5", "3.5", "3.5", "4.5"),
            ];
            let rects = coords
                .iter()
                .enumerate()
                .map(|(k, (x0, x1, y0, y1))| {
                    let (x0, x1, y0, y1) = (decimal(x0), decimal(x1), decimal(y0), decimal(y1));
                    Rect::torus(vertex(k + 1), x0.clone(), &x1 - &x0, y0.clone(), &y1 - &y0, &w, &h)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Layout::new(Surface::torus(w, h), rects))
        }
    }
}
