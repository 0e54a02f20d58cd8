//! Exhaustive identity checking over all assignments.
//!
//! Terms are compiled into a hash-consed DAG of binary operations. Variables
//! are enumerated in mixed-radix order, first variable most significant, and
//! each node is re-evaluated only when the last variable it depends on changes.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{eval, Identity, Term};
use crate::error::{Error, Result};
use crate::lattice::FinLattice;

pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub budget: u128,
    /// Restrict the guard variable to join-irreducibles and test only `lhs <= rhs`.
    pub prune: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: DEFAULT_BUDGET,
            prune: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// `(variable, element)` in the identity's declared variable order.
    pub assignment: Vec<(String, usize)>,
    pub lhs: usize,
    pub rhs: usize,
}

impl Counterexample {
    /// Re-evaluates both sides; true iff they still differ.
    pub fn replay(&self, l: &FinLattice, id: &Identity) -> Result<bool> {
        let asg: HashMap<String, usize> = self.assignment.iter().cloned().collect();
        let lhs = eval(&id.lhs, l, &asg)?;
        let rhs = eval(&id.rhs, l, &asg)?;
        Ok(lhs != rhs && lhs == self.lhs && rhs == self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Counterexample>,
    /// Size of the assignment space searched.
    pub space: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    Var(usize),
    Join(u32, u32),
    Meet(u32, u32),
}

struct Compiled {
    nodes: Vec<Node>,
    /// Nodes whose last variable is `k`, in topological order.
    by_level: Vec<Vec<u32>>,
    lhs: u32,
    rhs: u32,
}

struct Compiler {
    nodes: Vec<Node>,
    level: Vec<usize>,
    memo: HashMap<Node, u32>,
    var_pos: HashMap<String, usize>,
}

impl Compiler {
    fn add(&mut self, node: Node) -> u32 {
        if let Some(&i) = self.memo.get(&node) {
            return i;
        }
        let level = match node {
            Node::Var(k) => k,
            Node::Join(a, b) | Node::Meet(a, b) => {
                self.level[a as usize].max(self.level[b as usize])
            }
        };
        let i = self.nodes.len() as u32;
        self.nodes.push(node);
        self.level.push(level);
        self.memo.insert(node, i);
        i
    }

    fn term(&mut self, t: &Term) -> Result<u32> {
        match t {
            Term::Var(v) => {
                let k = *self
                    .var_pos
                    .get(v)
                    .ok_or_else(|| Error::UnboundVariable(v.clone()))?;
                Ok(self.add(Node::Var(k)))
            }
            Term::Join(ts) | Term::Meet(ts) => {
                let is_join = matches!(t, Term::Join(_));
                let mut acc = self.term(&ts[0])?;
                for s in &ts[1..] {
                    let b = self.term(s)?;
                    acc = self.add(if is_join {
                        Node::Join(acc, b)
                    } else {
                        Node::Meet(acc, b)
                    });
                }
                Ok(acc)
            }
        }
    }
}

fn compile(id: &Identity, order: &[String]) -> Result<Compiled> {
    let mut c = Compiler {
        nodes: Vec::new(),
        level: Vec::new(),
        memo: HashMap::new(),
        var_pos: order
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect(),
    };
    // Variable nodes first so that each level starts by reading its variable.
    for k in 0..order.len() {
        c.add(Node::Var(k));
    }
    let lhs = c.term(&id.lhs)?;
    let rhs = c.term(&id.rhs)?;
    let mut by_level = vec![Vec::new(); order.len()];
    for (i, &lv) in c.level.iter().enumerate() {
        by_level[lv].push(i as u32);
    }
    Ok(Compiled {
        nodes: c.nodes,
        by_level,
        lhs,
        rhs,
    })
}

struct Search<'a> {
    l: &'a FinLattice,
    code: &'a Compiled,
    only_leq: bool,
}

impl Search<'_> {
    fn eval_level(&self, k: usize, vals: &mut [u32], choice: &[u32]) {
        for &i in &self.code.by_level[k] {
            vals[i as usize] = match self.code.nodes[i as usize] {
                Node::Var(v) => choice[v],
                Node::Join(a, b) => self
                    .l
                    .join(vals[a as usize] as usize, vals[b as usize] as usize)
                    as u32,
                Node::Meet(a, b) => self
                    .l
                    .meet(vals[a as usize] as usize, vals[b as usize] as usize)
                    as u32,
            };
        }
    }

    fn fails(&self, vals: &[u32]) -> bool {
        let (a, b) = (
            vals[self.code.lhs as usize] as usize,
            vals[self.code.rhs as usize] as usize,
        );
        if self.only_leq {
            !self.l.leq(a, b)
        } else {
            a != b
        }
    }

    /// First failing assignment (lexicographic) extending `choice[..k]`.
    fn dfs(&self, k: usize, vals: &mut [u32], choice: &mut [u32]) -> bool {
        if k == choice.len() {
            return self.fails(vals);
        }
        for v in 0..self.l.len() as u32 {
            choice[k] = v;
            self.eval_level(k, vals, choice);
            if self.dfs(k + 1, vals, choice) {
                return true;
            }
        }
        false
    }

    fn branch(&self, first: usize, nvars: usize) -> Option<Vec<u32>> {
        let mut vals = vec![0u32; self.code.nodes.len()];
        let mut choice = vec![0u32; nvars];
        choice[0] = first as u32;
        self.eval_level(0, &mut vals, &choice);
        self.dfs(1, &mut vals, &mut choice).then_some(choice)
    }
}

/// Checks `id` on every assignment, without pruning.
pub fn check_identity(l: &FinLattice, id: &Identity, budget: u128) -> Result<Verdict> {
    check_identity_with(
        l,
        id,
        &CheckOptions {
            budget,
            prune: false,
        },
    )
}

pub fn check_identity_with(l: &FinLattice, id: &Identity, opts: &CheckOptions) -> Result<Verdict> {
    let prune = opts.prune && id.guard.is_some();
    let mut order = id.vars.clone();
    if prune {
        let g = id.guard.as_ref().unwrap();
        order.retain(|v| v != g);
        order.insert(0, g.clone());
    }
    let n = l.len() as u128;
    let first_domain: Vec<usize> = if prune {
        l.join_irreducibles()
    } else {
        (0..l.len()).collect()
    };
    let space = (1..order.len()).fold(first_domain.len() as u128, |acc, _| acc.saturating_mul(n));
    if space > opts.budget {
        return Err(Error::BudgetExceeded {
            needed: space,
            budget: opts.budget,
        });
    }
    let code = compile(id, &order)?;
    let search = Search {
        l,
        code: &code,
        only_leq: prune,
    };
    let found = first_domain
        .par_iter()
        .find_map_first(|&v0| search.branch(v0, order.len()));
    let witness = found.map(|choice| {
        let by_name: HashMap<&str, usize> = order
            .iter()
            .zip(&choice)
            .map(|(v, &c)| (v.as_str(), c as usize))
            .collect();
        let assignment: Vec<(String, usize)> = id
            .vars
            .iter()
            .map(|v| (v.clone(), by_name[v.as_str()]))
            .collect();
        let asg: HashMap<String, usize> = assignment.iter().cloned().collect();
        Counterexample {
            lhs: eval(&id.lhs, l, &asg).expect("all variables bound"),
            rhs: eval(&id.rhs, l, &asg).expect("all variables bound"),
            assignment,
        }
    });
    Ok(Verdict {
        holds: witness.is_none(),
        witness,
        space,
    })
}
