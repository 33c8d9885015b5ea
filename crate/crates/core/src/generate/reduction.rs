use serde::Serialize;

use crate::error::{BpdError, Result};
use crate::graph::{Color, ColoredGraph};
use crate::kernel::Instance;

use super::sat::CnfFormula;

/// Vertex ids of one variable gadget: a center with four blue (`t`) and four
/// red (`f`) leaves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariableLayout {
    pub center: usize,
    pub t: [usize; 4],
    pub f: [usize; 4],
}

/// Vertex ids of one clause gadget. `a[p]` is shared with a leaf of the
/// variable gadget of the `p`-th literal; `occurrence[p]` says which one (1..=4).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseLayout {
    pub literals: [i32; 3],
    pub occurrence: [usize; 3],
    pub a: [usize; 3],
    pub b: [usize; 3],
    pub w: [usize; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionLayout {
    pub variables: Vec<VariableLayout>,
    pub clauses: Vec<ClauseLayout>,
    pub k: i64,
}

/// Builds the BPD instance of a (3,4)-CNF formula.
///
/// Variable `i` (0-based) owns ids `9i..9i+9` in the order center, `t^1..t^4`,
/// `f^1..f^4`. Clause `j` then owns seven ids: `b^1..b^3`, `w^1..w^4`. The
/// budget is `4|X| + 14|C|`; the formula is satisfiable iff the instance is a
/// yes-instance.
pub fn reduce_sat_to_bpd(f: &CnfFormula) -> Result<(Instance, ReductionLayout)> {
    f.validate()?;
    let nx = f.num_vars;
    let variables: Vec<VariableLayout> = (0..nx)
        .map(|i| {
            let base = 9 * i;
            VariableLayout {
                center: base,
                t: [base + 1, base + 2, base + 3, base + 4],
                f: [base + 5, base + 6, base + 7, base + 8],
            }
        })
        .collect();

    let mut edges = Vec::with_capacity(8 * nx + 42 * f.clauses.len());
    for v in &variables {
        edges.extend(v.t.iter().map(|&t| (v.center, t, Color::Blue)));
        edges.extend(v.f.iter().map(|&x| (v.center, x, Color::Red)));
    }

    let mut seen = vec![0usize; nx + 1];
    let mut clauses = Vec::with_capacity(f.clauses.len());
    for (j, lits) in f.clauses.iter().enumerate() {
        let base = 9 * nx + 7 * j;
        let b = [base, base + 1, base + 2];
        let w = [base + 3, base + 4, base + 5, base + 6];
        let mut occurrence = [0usize; 3];
        let mut a = [0usize; 3];
        for p in 0..3 {
            let var = lits[p].unsigned_abs() as usize;
            seen[var] += 1;
            occurrence[p] = seen[var];
            let gadget = &variables[var - 1];
            let leaves = if lits[p] > 0 { &gadget.t } else { &gadget.f };
            a[p] = leaves[occurrence[p] - 1];
        }
        let clique: Vec<usize> = b.iter().chain(&w).copied().collect();
        for (i, &x) in clique.iter().enumerate() {
            for &y in &clique[i + 1..] {
                edges.push((x, y, Color::Blue));
            }
        }
        for p in 0..3 {
            for &x in &clique {
                let c = if x == b[p] { Color::Blue } else { Color::Red };
                edges.push((a[p], x, c));
            }
        }
        clauses.push(ClauseLayout {
            literals: *lits,
            occurrence,
            a,
            b,
            w,
        });
    }

    let nc = f.clauses.len();
    let g = ColoredGraph::from_edges(9 * nx + 7 * nc, edges)?;
    let k = (4 * nx + 14 * nc) as i64;
    if g.m() != 8 * nx + 42 * nc {
        return Err(BpdError::Internal(format!(
            "reduction produced {} edges, expected {}",
            g.m(),
            8 * nx + 42 * nc
        )));
    }
    // w and b vertices see six clique neighbors and three A vertices.
    let bound = if nc > 0 { 9 } else { 8 };
    if g.max_degree() > bound {
        return Err(BpdError::Internal(format!(
            "reduction has maximum degree {}",
            g.max_degree()
        )));
    }
    Ok((
        Instance::new(g, k),
        ReductionLayout {
            variables,
            clauses,
            k,
        },
    ))
}
