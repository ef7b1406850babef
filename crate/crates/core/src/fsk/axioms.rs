//! The five skew monoidal axioms, checked as equalities of morphisms over
//! every tuple of objects up to a leaf budget.

use serde::Serialize;

use super::morphism::{alpha, lambda, rho, FskMorphism};
use super::object::FskObject;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: &'static str,
    pub tuples: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn id(o: &FskObject) -> FskMorphism {
    FskMorphism::identity(o)
}

/// Every object with between 1 and `max` leaves, by leaf count.
fn objects_up_to(max: usize) -> Vec<Vec<FskObject>> {
    (0..=max)
        .map(|m| {
            if m == 0 {
                Vec::new()
            } else {
                FskObject::enumerate(m)
            }
        })
        .collect()
}

/// Tuples of `arity` objects whose leaf counts sum to at most `budget`.
fn tuples(by_size: &[Vec<FskObject>], arity: usize, budget: usize) -> Vec<Vec<FskObject>> {
    if arity == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for size in 1..=budget.saturating_sub(arity - 1) {
        for rest in tuples(by_size, arity - 1, budget - size) {
            for o in &by_size[size] {
                let mut t = vec![o.clone()];
                t.extend(rest.iter().cloned());
                out.push(t);
            }
        }
    }
    out
}

fn check<F>(axiom: &'static str, all: Vec<Vec<FskObject>>, sides: F) -> Result<AxiomReport>
where
    F: Fn(&[FskObject]) -> Result<(FskMorphism, FskMorphism)>,
{
    let mut failures = Vec::new();
    for t in &all {
        let (lhs, rhs) = sides(t)?;
        if lhs != rhs {
            let names: Vec<String> = t.iter().map(ToString::to_string).collect();
            failures.push(format!("{}: {lhs} vs {rhs}", names.join(", ")));
        }
    }
    Ok(AxiomReport {
        axiom,
        tuples: all.len(),
        failures,
    })
}

/// Checks every axiom instance whose objects have at most `max_leaves`
/// leaves in total.
pub fn check_skew_axioms(max_leaves: usize) -> Result<Vec<AxiomReport>> {
    let by_size = objects_up_to(max_leaves);
    let i = FskObject::unit();
    let mut reports = Vec::new();

    // λ_{xy} ∘ α_{I,x,y} = λ_x ⊗ 1_y
    reports.push(check("al", tuples(&by_size, 2, max_leaves), |t| {
        let (x, y) = (&t[0], &t[1]);
        let lhs = lambda(&x.tensor(y)).after(&alpha(&i, x, y))?;
        Ok((lhs, lambda(x).tensor(&id(y))))
    })?);

    // α_{x,y,I} ∘ ρ_{xy} = 1_x ⊗ ρ_y
    reports.push(check("ar", tuples(&by_size, 2, max_leaves), |t| {
        let (x, y) = (&t[0], &t[1]);
        let lhs = alpha(x, y, &i).after(&rho(&x.tensor(y)))?;
        Ok((lhs, id(x).tensor(&rho(y))))
    })?);

    // λ_I ∘ ρ_I = 1_I
    reports.push(check("lr", vec![Vec::new()], |_| {
        Ok((lambda(&i).after(&rho(&i))?, id(&i)))
    })?);

    // (1_x ⊗ λ_y) ∘ α_{x,I,y} ∘ (ρ_x ⊗ 1_y) = 1_{xy}
    reports.push(check("alr", tuples(&by_size, 2, max_leaves), |t| {
        let (x, y) = (&t[0], &t[1]);
        let lhs = id(x)
            .tensor(&lambda(y))
            .after(&alpha(x, &i, y))?
            .after(&rho(x).tensor(&id(y)))?;
        Ok((lhs, id(&x.tensor(y))))
    })?);

    // (1_w ⊗ α_{x,y,z}) ∘ α_{w,xy,z} ∘ (α_{w,x,y} ⊗ 1_z) = α_{w,x,yz} ∘ α_{wx,y,z}
    reports.push(check("pentagon", tuples(&by_size, 4, max_leaves), |t| {
        let (w, x, y, z) = (&t[0], &t[1], &t[2], &t[3]);
        let lhs = id(w)
            .tensor(&alpha(x, y, z))
            .after(&alpha(w, &x.tensor(y), z))?
            .after(&alpha(w, x, y).tensor(&id(z)))?;
        let rhs = alpha(w, x, &y.tensor(z)).after(&alpha(&w.tensor(x), y, z))?;
        Ok((lhs, rhs))
    })?);

    Ok(reports)
}
