use std::collections::BTreeMap;

use crate::linear::{unflatten, Rational, Vector};

type Evaluator<'a> = Box<dyn Fn(&[Vector]) -> Vector + Sync + 'a>;

/// One multilinear residual. Slots are laid out variable by variable: a
/// variable of multiplicity `d` owns `d` consecutive slots.
pub struct Clause<'a> {
    label: String,
    variables: Vec<(&'static str, usize)>,
    eval: Evaluator<'a>,
}

impl<'a> Clause<'a> {
    pub fn new<F>(label: impl Into<String>, variables: &[(&'static str, usize)], eval: F) -> Self
    where
        F: Fn(&[Vector]) -> Vector + Sync + 'a,
    {
        Clause { label: label.into(), variables: variables.to_vec(), eval: Box::new(eval) }
    }

    /// Shorthand for a clause whose variables each occur once.
    pub fn linear<F>(label: impl Into<String>, names: &[&'static str], eval: F) -> Self
    where
        F: Fn(&[Vector]) -> Vector + Sync + 'a,
    {
        let variables: Vec<_> = names.iter().map(|n| (*n, 1)).collect();
        Clause::new(label, &variables, eval)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn variables(&self) -> &[(&'static str, usize)] {
        &self.variables
    }

    pub fn slot_count(&self) -> usize {
        self.variables.iter().map(|(_, d)| d).sum()
    }

    /// Evaluates on one vector per slot.
    pub fn eval_slots(&self, slots: &[Vector]) -> Vector {
        (self.eval)(slots)
    }

    /// Evaluates the unpolarized residual: one vector per variable, copied
    /// into each of its occurrences.
    pub fn eval_raw(&self, values: &[Vector]) -> Vector {
        assert_eq!(values.len(), self.variables.len(), "one value per variable");
        let mut slots = Vec::with_capacity(self.slot_count());
        for (value, (_, d)) in values.iter().zip(&self.variables) {
            for _ in 0..*d {
                slots.push(value.clone());
            }
        }
        (self.eval)(&slots)
    }

    /// Slot names such as `x1, x2, y` used in reports.
    pub fn slot_names(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, d) in &self.variables {
            if *d == 1 {
                out.push((*name).to_string());
            } else {
                out.extend((1..=*d).map(|k| format!("{name}{k}")));
            }
        }
        out
    }

    fn groups(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        self.variables
            .iter()
            .map(|(_, d)| {
                let g = (start, *d);
                start += d;
                g
            })
            .collect()
    }
}

/// A failing clause at its lexicographically first failing basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub clause: String,
    pub slots: Vec<String>,
    pub witness: Vec<usize>,
    pub residual: Vector,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// All slot rearrangements that permute occurrences within each variable.
fn group_permutations(groups: &[(usize, usize)], slots: usize) -> Vec<Vec<usize>> {
    let mut acc: Vec<Vec<usize>> = vec![(0..slots).collect()];
    for &(start, d) in groups {
        if d < 2 {
            continue;
        }
        let local = permutations(d);
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for base in &acc {
            for p in &local {
                let mut q = base.clone();
                for (k, &pk) in p.iter().enumerate() {
                    q[start + k] = base[start + pk];
                }
                next.push(q);
            }
        }
        acc = next;
    }
    acc
}

fn sorted_within_groups(tuple: &[usize], groups: &[(usize, usize)]) -> bool {
    groups.iter().all(|&(start, d)| tuple[start..start + d].windows(2).all(|w| w[0] <= w[1]))
}

/// Polarized residual of `clause` at a basis tuple: the sum over all ways of
/// distributing each variable's basis vectors among its occurrences.
pub fn polarized_residual(clause: &Clause, dim: usize, tuple: &[usize]) -> Vector {
    let groups = clause.groups();
    let perms = group_permutations(&groups, tuple.len());
    polarized_with(clause, dim, tuple, &perms)
}

fn polarized_with(clause: &Clause, dim: usize, tuple: &[usize], perms: &[Vec<usize>]) -> Vector {
    let mut counts: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for p in perms {
        let t: Vec<usize> = p.iter().map(|&k| tuple[k]).collect();
        *counts.entry(t).or_insert(0) += 1;
    }
    let mut total = Vector::zeros(dim);
    for (t, count) in counts {
        let slots: Vec<Vector> = t.iter().map(|&i| Vector::basis(dim, i)).collect();
        let value = clause.eval_slots(&slots);
        total.add_scaled(&Rational::int(count), &value);
    }
    total
}

/// Finds the lexicographically first basis tuple at which the polarized
/// residual of `clause` is nonzero.
///
/// The polarized residual is symmetric within each variable's slots, so the
/// first failing tuple is always sorted within groups and only those tuples
/// need evaluating.
pub fn first_failure(clause: &Clause, dim: usize) -> Option<Failure> {
    let n = clause.slot_count();
    let groups = clause.groups();
    let perms = group_permutations(&groups, n);
    let total = dim.checked_pow(n as u32).expect("tuple count fits in usize");
    let mut tuple = vec![0; n];
    for flat in 0..total {
        unflatten(dim, flat, &mut tuple);
        if !sorted_within_groups(&tuple, &groups) {
            continue;
        }
        let residual = polarized_with(clause, dim, &tuple, &perms);
        if !residual.is_zero() {
            return Some(Failure {
                clause: clause.label().to_string(),
                slots: clause.slot_names(),
                witness: tuple,
                residual,
            });
        }
    }
    None
}

/// Runs the clauses in order and returns the first failure.
pub fn decide(clauses: &[Clause], dim: usize) -> Option<Failure> {
    clauses.iter().find_map(|c| first_failure(c, dim))
}
