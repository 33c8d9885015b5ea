use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{BpdError, Result};

/// Occurrence limit per variable.
pub const MAX_OCCURRENCES: usize = 4;

/// A 3-CNF formula. Literals are DIMACS-style: `+i` / `-i` for variable `i`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    /// Builds a formula and checks that every clause has three distinct
    /// variables and every variable occurs in at most four clauses.
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<CnfFormula> {
        let f = CnfFormula { num_vars, clauses };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let mut occ = vec![0usize; self.num_vars + 1];
        for (j, clause) in self.clauses.iter().enumerate() {
            for (p, &lit) in clause.iter().enumerate() {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > self.num_vars {
                    return Err(BpdError::Formula(format!(
                        "clause {} has literal {lit} outside 1..={}",
                        j + 1,
                        self.num_vars
                    )));
                }
                if clause[..p].iter().any(|&l| l.unsigned_abs() as usize == var) {
                    return Err(BpdError::Formula(format!(
                        "clause {} uses variable {var} twice",
                        j + 1
                    )));
                }
                occ[var] += 1;
            }
        }
        if let Some(var) = (1..=self.num_vars).find(|&v| occ[v] > MAX_OCCURRENCES) {
            return Err(BpdError::Formula(format!(
                "variable {var} occurs in {} clauses, at most {MAX_OCCURRENCES} allowed",
                occ[var]
            )));
        }
        Ok(())
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&lit| {
                let value = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            writeln!(out, "{} {} {} 0", c[0], c[1], c[2]).unwrap();
        }
        out
    }
}

/// Parses DIMACS CNF. Comment lines start with `c`; a line `%` ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        let err = |msg: String| BpdError::Parse { line: line_no, msg };
        if line.starts_with('p') {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 || f[1] != "cnf" || header.is_some() {
                return Err(err(format!("bad problem line `{line}`")));
            }
            let v = f[2].parse().map_err(|_| err(format!("bad variable count `{}`", f[2])))?;
            let c = f[3].parse().map_err(|_| err(format!("bad clause count `{}`", f[3])))?;
            header = Some((v, c));
            continue;
        }
        if header.is_none() {
            return Err(err("clause before `p cnf` line".into()));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| err(format!("bad literal `{tok}`")))?;
            if lit == 0 {
                let clause: [i32; 3] = current.as_slice().try_into().map_err(|_| {
                    err(format!("clause with {} literals, expected 3", current.len()))
                })?;
                clauses.push(clause);
                current.clear();
            } else {
                current.push(lit);
            }
        }
    }
    let (num_vars, num_clauses) = header.ok_or_else(|| BpdError::Parse {
        line: 0,
        msg: "missing `p cnf` line".into(),
    })?;
    if !current.is_empty() {
        return Err(BpdError::Parse {
            line: 0,
            msg: "last clause is not terminated by 0".into(),
        });
    }
    if clauses.len() != num_clauses {
        return Err(BpdError::Parse {
            line: 0,
            msg: format!("header declares {num_clauses} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(num_vars, clauses)
}

/// Exhaustive satisfiability check over all `2^n` assignments.
pub fn sat_brute_force(f: &CnfFormula) -> bool {
    assert!(f.num_vars <= 30, "too many variables for exhaustive search");
    let mut assignment = vec![false; f.num_vars];
    (0u64..1 << f.num_vars).any(|mask| {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> i & 1 == 1;
        }
        f.evaluate(&assignment)
    })
}

/// A random formula with `num_clauses` clauses over three distinct variables
/// each, respecting the occurrence limit. Restarts when the limit leaves fewer
/// than three usable variables; `None` after 1000 failed attempts.
pub fn random_formula(num_vars: usize, num_clauses: usize, seed: u64) -> Option<CnfFormula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if 3 * num_clauses > MAX_OCCURRENCES * num_vars {
        return None;
    }
    'attempt: for _ in 0..1000 {
        let mut occ = vec![0usize; num_vars + 1];
        let mut clauses = Vec::with_capacity(num_clauses);
        for _ in 0..num_clauses {
            let open: Vec<usize> = (1..=num_vars).filter(|&v| occ[v] < MAX_OCCURRENCES).collect();
            if open.len() < 3 {
                continue 'attempt;
            }
            let picked: Vec<usize> = open
                .choose_multiple_weighted(&mut rng, 3, |&v| (MAX_OCCURRENCES - occ[v]) as f64)
                .unwrap()
                .copied()
                .collect();
            let mut clause = [0i32; 3];
            for (slot, &v) in clause.iter_mut().zip(&picked) {
                occ[v] += 1;
                *slot = if rng.gen_bool(0.5) { v as i32 } else { -(v as i32) };
            }
            clauses.push(clause);
        }
        return Some(CnfFormula::new(num_vars, clauses).expect("generated formula is valid"));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_examples() {
        let padded = CnfFormula::new(3, vec![[1, 2, 3]]).unwrap();
        assert!(sat_brute_force(&padded));
        let two = CnfFormula::new(3, vec![[1, 2, 3], [-1, -2, -3]]).unwrap();
        assert!(sat_brute_force(&two));
        let mut all = Vec::new();
        for mask in 0..8 {
            let s = |b: i32, v: i32| if mask >> b & 1 == 1 { -v } else { v };
            all.push([s(0, 1), s(1, 2), s(2, 3)]);
        }
        let unsat = CnfFormula {
            num_vars: 3,
            clauses: all,
        };
        assert!(unsat.validate().is_err());
        assert!(!sat_brute_force(&unsat));
    }

    #[test]
    fn dimacs_roundtrip_and_errors() {
        let f = parse_dimacs("c example\np cnf 4 2\n1 -2 3 0\n-1 2\n4 0\n").unwrap();
        assert_eq!(f.clauses, vec![[1, -2, 3], [-1, 2, 4]]);
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
        for bad in [
            "p cnf 3 1\n1 2 0\n",
            "p cnf 3 1\n1 1 2 0\n",
            "p cnf 3 1\n1 2 4 0\n",
            "1 2 3 0\n",
            "p cnf 3 2\n1 2 3 0\n",
        ] {
            assert!(parse_dimacs(bad).is_err(), "{bad:?}");
        }
        let five = "p cnf 7 5\n1 2 3 0\n1 4 5 0\n1 6 7 0\n1 2 4 0\n-1 3 5 0\n";
        assert!(matches!(parse_dimacs(five), Err(BpdError::Formula(_))));
    }

    #[test]
    fn random_formulas_are_valid_and_deterministic() {
        for seed in 0..50 {
            let a = random_formula(6, 8, seed).unwrap();
            assert_eq!(Some(a.clone()), random_formula(6, 8, seed));
            a.validate().unwrap();
        }
        assert!(random_formula(3, 5, 0).is_none());
        assert!(random_formula(3, 4, 0).is_some());
    }
}
