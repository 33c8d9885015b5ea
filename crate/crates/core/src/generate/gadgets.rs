use std::fmt;
use std::str::FromStr;

use crate::detect::{template, PairRole, StructureKind};
use crate::error::{BpdError, Result};
use crate::graph::{Color, ColoredGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    Variable,
    Clause,
    Lc,
    Lo,
    Iiz,
    Hourglass,
    AlternatingCycle(usize),
}

impl FromStr for GadgetKind {
    type Err = BpdError;

    /// Accepts `variable`, `clause`, `lc`, `lo`, `iiz`, `hourglass` and
    /// `alternating_cycle:<len>` (or `alternating_cycle(<len>)`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || BpdError::Precondition(format!("unknown gadget `{s}`"));
        Ok(match s {
            "variable" => GadgetKind::Variable,
            "clause" => GadgetKind::Clause,
            "lc" => GadgetKind::Lc,
            "lo" => GadgetKind::Lo,
            "iiz" => GadgetKind::Iiz,
            "hourglass" => GadgetKind::Hourglass,
            _ => {
                let rest = s.strip_prefix("alternating_cycle").ok_or_else(bad)?;
                let len = rest
                    .strip_prefix(':')
                    .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
                    .ok_or_else(bad)?;
                GadgetKind::AlternatingCycle(len.parse().map_err(|_| bad())?)
            }
        })
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetKind::Variable => write!(f, "variable"),
            GadgetKind::Clause => write!(f, "clause"),
            GadgetKind::Lc => write!(f, "lc"),
            GadgetKind::Lo => write!(f, "lo"),
            GadgetKind::Iiz => write!(f, "iiz"),
            GadgetKind::Hourglass => write!(f, "hourglass"),
            GadgetKind::AlternatingCycle(n) => write!(f, "alternating_cycle:{n}"),
        }
    }
}

/// Fixture graphs.
///
/// * variable: center 0, blue leaves 1..=4, red leaves 5..=8.
/// * clause: `a^1..a^3` = 0..3, `b^1..b^3` = 3..6, `w^1..w^4` = 6..10.
/// * lc, lo, iiz, hourglass: witness order `u, v, w, z[, z2]` with `{u, v}` blue.
/// * alternating cycle: vertices in cycle order, edge `{0, 1}` blue.
pub fn gadget(kind: GadgetKind) -> Result<ColoredGraph> {
    match kind {
        GadgetKind::Variable => {
            let mut e = Vec::new();
            for i in 1..=4 {
                e.push((0, i, Color::Blue));
                e.push((0, i + 4, Color::Red));
            }
            ColoredGraph::from_edges(9, e)
        }
        GadgetKind::Clause => {
            let mut e = Vec::new();
            for x in 3..10 {
                for y in (x + 1)..10 {
                    e.push((x, y, Color::Blue));
                }
            }
            for p in 0..3 {
                for x in 3..10 {
                    let c = if x == p + 3 { Color::Blue } else { Color::Red };
                    e.push((p, x, c));
                }
            }
            ColoredGraph::from_edges(10, e)
        }
        GadgetKind::Lc => pattern(StructureKind::LCDiamond, 4),
        GadgetKind::Lo => pattern(StructureKind::LODiamond, 4),
        GadgetKind::Iiz => pattern(StructureKind::IIZDiamond, 4),
        GadgetKind::Hourglass => pattern(StructureKind::CCHourglass, 5),
        GadgetKind::AlternatingCycle(len) => {
            if len < 4 || len % 2 == 1 {
                return Err(BpdError::Precondition(format!(
                    "alternating cycle needs an even length of at least 4, got {len}"
                )));
            }
            let e = (0..len).map(|i| {
                let c = if i % 2 == 0 { Color::Blue } else { Color::Red };
                (i, (i + 1) % len, c)
            });
            ColoredGraph::from_edges(len, e)
        }
    }
}

fn pattern(kind: StructureKind, n: usize) -> Result<ColoredGraph> {
    let e = template(kind).iter().filter_map(|&(i, j, role)| match role {
        PairRole::Same => Some((i, j, Color::Blue)),
        PairRole::Other => Some((i, j, Color::Red)),
        PairRole::Absent => None,
    });
    ColoredGraph::from_edges(n, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect;

    #[test]
    fn fixtures() {
        let v = gadget(GadgetKind::Variable).unwrap();
        assert_eq!((v.n(), v.m(), detect::count_bicolored_p3(&v)), (9, 8, 16));

        let c = gadget(GadgetKind::Clause).unwrap();
        assert_eq!((c.n(), c.m()), (10, 42));
        let (clique, _) = c.induced_subgraph(&(3..10).collect::<Vec<_>>()).unwrap();
        assert_eq!(clique.m_blue(), 21);
        assert_eq!(clique.m_red(), 0);

        for (kind, sk) in [
            (GadgetKind::Lc, StructureKind::LCDiamond),
            (GadgetKind::Lo, StructureKind::LODiamond),
            (GadgetKind::Iiz, StructureKind::IIZDiamond),
            (GadgetKind::Hourglass, StructureKind::CCHourglass),
        ] {
            let g = gadget(kind).unwrap();
            assert!(detect::first_pattern(&g, sk).is_some(), "{kind}");
        }
        assert!(gadget(GadgetKind::AlternatingCycle(7)).is_err());
    }

    #[test]
    fn parse_names() {
        for s in ["variable", "clause", "lc", "lo", "iiz", "hourglass", "alternating_cycle:6"] {
            assert_eq!(s.parse::<GadgetKind>().unwrap().to_string(), s);
        }
        assert_eq!(
            "alternating_cycle(8)".parse::<GadgetKind>().unwrap(),
            GadgetKind::AlternatingCycle(8)
        );
        assert!("square".parse::<GadgetKind>().is_err());
    }
}
