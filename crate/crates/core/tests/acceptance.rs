//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::time::{Duration, Instant};

use fsk_core::fsk::criteria::{
    is_fsk_injection, is_fsk_injection_by_search, is_fsk_surjection, is_fsk_surjection_by_search,
    is_shrink, is_swell, is_tamari,
};
use fsk_core::fsk::{
    alpha, check_skew_axioms, compose, dual_object, factor_injection, factor_surjection, hom,
    is_morphism, lambda, rho,
};
use fsk_core::operads::{
    counit_at, h_colax, h_of, initial_in_grade, l_substitute, q_of, s_substitute_objects,
    terminal_in_grade,
};
use fsk_core::tamari::{base_change_inj, base_change_surj, enumerate_tamari};
use fsk_core::{
    BracketTree, FskMorphism, FskObject, LElement, Lbf, MembershipMode, MonotoneMap, Rbf, Word,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn obj(word: &str) -> FskObject {
    FskObject::parse(word).unwrap()
}

fn lbf(values: &[usize]) -> Lbf {
    Lbf::new(values.to_vec()).unwrap()
}

fn id(o: &FskObject) -> FskMorphism {
    FskMorphism::identity(o)
}

fn objects(max: usize) -> Vec<(usize, Vec<FskObject>)> {
    (1..=max).map(|m| (m, FskObject::enumerate(m))).collect()
}

/// Every monotone map `ord dom -> ord cod`, bottom-preserving or not.
fn all_monotone(dom: usize, cod: usize) -> Vec<MonotoneMap> {
    fn go(dom: usize, cod: usize, cur: &mut Vec<usize>, out: &mut Vec<MonotoneMap>) {
        if cur.len() == dom {
            out.push(MonotoneMap::new(cur.clone(), cod).unwrap());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..cod {
            cur.push(v);
            go(dom, cod, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(dom, cod, &mut Vec::new(), &mut out);
    out
}

fn all_trees(n: usize) -> Vec<BracketTree> {
    if n == 1 {
        return vec![BracketTree::Leaf];
    }
    let mut out = Vec::new();
    for k in 1..n {
        for l in all_trees(k) {
            for r in all_trees(n - k) {
                out.push(BracketTree::node(l.clone(), r.clone()));
            }
        }
    }
    out
}

fn catalan(n: usize) -> usize {
    let mut c = 1;
    for k in 0..n {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

fn c1_tamari_counts() -> Outcome {
    let start = Instant::now();
    let expected = [1, 1, 2, 5, 14, 42, 132, 429];
    for (m, &want) in (1..=8).zip(&expected) {
        let got = enumerate_tamari(m).len();
        ensure(got == want && want == catalan(m - 1), || {
            format!("|Tam_{m}| = {got}, expected {want}")
        })?;
    }
    let figure: Vec<Lbf> = [
        [0, 0, 0, 3],
        [0, 0, 2, 3],
        [0, 1, 0, 3],
        [0, 1, 1, 3],
        [0, 1, 2, 3],
    ]
    .iter()
    .map(|v| lbf(v))
    .collect();
    ensure(enumerate_tamari(4) == figure, || {
        "Tam_4 differs from the figure".into()
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "counts 1..429 for m=1..8, Tam_4 matches, {elapsed:.2?}"
    ))
}

fn c2_bracketing() -> Outcome {
    let word: Word = "((X (( X X) X)) X)".parse().map_err(|e| format!("{e}"))?;
    let got = word.shape().to_lbf();
    ensure(got == lbf(&[0, 1, 1, 0, 4]), || format!("got {got}"))?;
    let mut checked = 0;
    for m in 1..=8 {
        let trees = all_trees(m);
        let lbfs = enumerate_tamari(m);
        ensure(trees.len() == lbfs.len(), || {
            format!("size mismatch at m={m}")
        })?;
        for t in &trees {
            ensure(t.to_lbf().to_tree() == *t, || {
                format!("tree {t} does not round-trip")
            })?;
        }
        for l in &lbfs {
            ensure(l.to_tree().to_lbf() == *l, || {
                format!("lbf {l} does not round-trip")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "(x0((x1x2)x3))x4 -> 0,1,1,0,4; {checked} round trips for m<=8"
    ))
}

fn c3_adjoints() -> Outcome {
    let mut checked = 0;
    for dom in 1..=7 {
        for cod in 1..=7 {
            for phi in all_monotone(dom, cod) {
                checked += 1;
                let star = phi.right_adjoint();
                ensure(star.is_ok() == (phi.apply(0) == 0), || {
                    format!("{phi}: adjoint existence wrong")
                })?;
                let Ok(star) = star else { continue };
                for j in 0..cod {
                    let max = (0..dom).filter(|&i| phi.apply(i) <= j).max().unwrap();
                    ensure(star.apply(j) == max, || format!("{phi}: φ*({j}) wrong"))?;
                }
                let lower = phi.second_right_adjoint();
                let exists = dom == 1 || phi.apply(1) != 0;
                ensure(lower.is_ok() == exists, || {
                    format!("{phi}: φ_* existence wrong")
                })?;
                let Ok(lower) = lower else { continue };
                let ext = |i: usize| if i == dom { cod } else { phi.apply(i) };
                let iterated = star.right_adjoint().map_err(|e| format!("{phi}: {e}"))?;
                for i in 0..dom {
                    let case = if ext(i) < ext(i + 1) {
                        ext(i + 1) - 1
                    } else {
                        ext(i) - 1
                    };
                    ensure(lower.apply(i) == case, || {
                        format!("{phi}: case formula at {i}")
                    })?;
                    ensure(lower.apply(i) == iterated.apply(i), || {
                        format!("{phi}: iterated adjoint at {i}")
                    })?;
                }
            }
        }
    }
    Ok(format!("{checked} monotone maps, dom, cod <= 7"))
}

fn c4_base_change() -> Outcome {
    let mut checked = 0;
    for m in 1..=6 {
        for n in 1..=m {
            for sigma in MonotoneMap::enumerate_surjections(m, n) {
                let star = sigma.right_adjoint().unwrap();
                for l in enumerate_tamari(n) {
                    let ls = base_change_surj(&sigma, &l).map_err(|e| e.to_string())?;
                    for j in 0..n {
                        ensure(ls.get(star.apply(j)) == star.apply(l.get(j)), || {
                            format!("ℓ^σσ* != σ*ℓ for σ={sigma}, ℓ={l}")
                        })?;
                        ensure(sigma.apply(ls.get(star.apply(j))) == l.get(j), || {
                            format!("σℓ^σσ* != ℓ for σ={sigma}, ℓ={l}")
                        })?;
                    }
                    checked += 1;
                }
            }
            for delta in MonotoneMap::enumerate_injections(n, m) {
                for l in enumerate_tamari(n) {
                    let r = l.to_rbf();
                    let rd: Rbf = base_change_inj(&delta, &r).map_err(|e| e.to_string())?;
                    for j in 0..n {
                        ensure(rd.get(delta.apply(j)) == delta.apply(r.get(j)), || {
                            format!("r^δδ != δr for δ={delta}, r={r}")
                        })?;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (map, element) pairs, m <= 6"))
}

/// Every triple checked by criterion 5 with source `a`: (triples, morphisms).
fn criteria_from(a: &FskObject, all: &[(usize, Vec<FskObject>)]) -> Result<(usize, usize), String> {
    let modes = [
        MembershipMode::Direct,
        MembershipMode::ViaFactor,
        MembershipMode::ViaSearch,
    ];
    let (mut triples, mut morphisms) = (0, 0);
    for (n, dsts) in all {
        let maps = MonotoneMap::enumerate_bottom_preserving(a.m(), *n);
        for b in dsts.iter().filter(|b| b.grade() == a.grade()) {
            for f in &maps {
                triples += 1;
                ensure(
                    is_fsk_surjection(a, b, f) == is_fsk_surjection_by_search(a, b, f),
                    || format!("surjection criterion disagrees on {a} -> {b} ; {f}"),
                )?;
                ensure(
                    is_fsk_injection(a, b, f) == is_fsk_injection_by_search(a, b, f),
                    || format!("injection criterion disagrees on {a} -> {b} ; {f}"),
                )?;
                let verdicts = modes.map(|mode| is_morphism(a, b, f, mode));
                ensure(verdicts.iter().all(|&v| v == verdicts[0]), || {
                    format!("modes disagree on {a} -> {b} ; {f}: {verdicts:?}")
                })?;
                morphisms += usize::from(verdicts[0]);
            }
        }
    }
    Ok((triples, morphisms))
}

fn c5_criteria() -> Outcome {
    let start = Instant::now();
    let all = objects(5);
    let (mut triples, mut morphisms) = (0, 0);
    for a in all.iter().flat_map(|(_, o)| o) {
        let (t, m) = criteria_from(a, &all)?;
        triples += t;
        morphisms += m;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{triples} triples, {morphisms} morphisms, zero disagreements, {elapsed:.2?}"
    ))
}

fn c6_factorizations() -> Outcome {
    let all = objects(5);
    let (mut surjections, mut injections) = (0, 0);
    for (m, srcs) in &all {
        for (n, dsts) in &all {
            let maps = MonotoneMap::enumerate_bottom_preserving(*m, *n);
            for a in srcs {
                for b in dsts.iter().filter(|b| b.grade() == a.grade()) {
                    for map in &maps {
                        if is_fsk_surjection(a, b, map) {
                            surjections += 1;
                            check_surjection(a, b, map)?;
                        }
                        if is_fsk_injection(a, b, map) {
                            injections += 1;
                            check_injection(a, b, map)?;
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{surjections} Fsk-surjections, {injections} Fsk-injections, extremal middles and recomposition confirmed"
    ))
}

fn check_surjection(a: &FskObject, b: &FskObject, sigma: &MonotoneMap) -> Result<(), String> {
    let f = FskMorphism::new(a.clone(), b.clone(), sigma.clone()).map_err(|e| e.to_string())?;
    let factors = factor_surjection(&f).map_err(|e| e.to_string())?;
    let candidates: Vec<Lbf> = enumerate_tamari(a.m())
        .into_iter()
        .filter(|s2| {
            a.s().leq(s2).unwrap() && is_shrink(&a.with_bracketing(s2.clone()).unwrap(), b, sigma)
        })
        .collect();
    let best = factors.max_middle.s();
    ensure(candidates.contains(best), || {
        format!("{f}: S ∨ T^σ is not a witness")
    })?;
    ensure(candidates.iter().all(|c| c.leq(best).unwrap()), || {
        format!("{f}: S ∨ T^σ is not greatest")
    })?;
    let via_max = compose(
        &FskMorphism::new(factors.max_middle.clone(), b.clone(), sigma.clone())
            .map_err(|e| e.to_string())?,
        &FskMorphism::new(
            a.clone(),
            factors.max_middle.clone(),
            MonotoneMap::identity(a.m()),
        )
        .map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let via_alt = compose(
        &FskMorphism::new(
            factors.alt_middle.clone(),
            b.clone(),
            MonotoneMap::identity(b.m()),
        )
        .map_err(|e| e.to_string())?,
        &FskMorphism::new(a.clone(), factors.alt_middle.clone(), sigma.clone())
            .map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    ensure(via_max == f && via_alt == f, || {
        format!("{f}: factors do not recompose")
    })
}

fn check_injection(a: &FskObject, b: &FskObject, delta: &MonotoneMap) -> Result<(), String> {
    let f = FskMorphism::new(a.clone(), b.clone(), delta.clone()).map_err(|e| e.to_string())?;
    let factors = factor_injection(&f).map_err(|e| e.to_string())?;
    let candidates: Vec<Lbf> = enumerate_tamari(b.m())
        .into_iter()
        .filter(|s2| {
            s2.leq(b.s()).unwrap() && is_swell(a, &b.with_bracketing(s2.clone()).unwrap(), delta)
        })
        .collect();
    let least = factors.min_middle.s();
    ensure(candidates.contains(least), || {
        format!("{f}: T^δ ∧ S is not a witness")
    })?;
    ensure(candidates.iter().all(|c| least.leq(c).unwrap()), || {
        format!("{f}: T^δ ∧ S is not least")
    })?;
    let via_min = compose(
        &FskMorphism::new(
            factors.min_middle.clone(),
            b.clone(),
            MonotoneMap::identity(b.m()),
        )
        .map_err(|e| e.to_string())?,
        &FskMorphism::new(a.clone(), factors.min_middle.clone(), delta.clone())
            .map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let via_alt = compose(
        &FskMorphism::new(factors.alt_middle.clone(), b.clone(), delta.clone())
            .map_err(|e| e.to_string())?,
        &FskMorphism::new(
            a.clone(),
            factors.alt_middle.clone(),
            MonotoneMap::identity(a.m()),
        )
        .map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    ensure(via_min == f && via_alt == f, || {
        format!("{f}: factors do not recompose")
    })
}

fn c7_non_coherence() -> Outcome {
    let ii = obj("(I I)");
    let maps: Vec<Vec<usize>> = hom(&ii, &ii)
        .iter()
        .map(|f| f.map().images().to_vec())
        .collect();
    ensure(maps == vec![vec![0, 0], vec![0, 1]], || {
        format!("hom(II, II) = {maps:?}")
    })?;
    let i = FskObject::unit();
    let round = compose(&rho(&i), &lambda(&i)).map_err(|e| e.to_string())?;
    ensure(
        round.map().images() == [0, 0] && !round.is_identity(),
        || format!("ρ∘λ = {round}"),
    )?;
    Ok("hom(II, II) = {id, ρ∘λ = [0,0]}, ρ∘λ != id".into())
}

fn c8_axioms() -> Outcome {
    let reports = check_skew_axioms(8).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for r in &reports {
        ensure(r.holds(), || {
            format!("{} fails: {}", r.axiom, r.failures[0])
        })?;
        parts.push(format!("{} {}", r.axiom, r.tuples));
    }
    let pentagon = reports.iter().find(|r| r.axiom == "pentagon").unwrap();
    ensure(pentagon.tuples >= 100, || {
        "pentagon covers too few tuples".into()
    })?;
    Ok(format!("all commute up to 8 leaves ({})", parts.join(", ")))
}

fn c9_initial_terminal() -> Outcome {
    let mut checked = 0;
    for (_, objs) in objects(6) {
        for a in objs.iter().filter(|a| a.grade() <= 3) {
            let g = a.grade();
            let from = hom(&initial_in_grade(g), a).len();
            let to = hom(a, &terminal_in_grade(g)).len();
            ensure(from == 1 && to == 1, || format!("{a}: {from} in, {to} out"))?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} objects, one morphism in and one out each"
    ))
}

fn c10_adjunction() -> Outcome {
    let all = objects(6);
    let mut pairs = 0;
    for k in 0..=3 {
        for x in LElement::all(k) {
            let hx = h_of(&x);
            for (_, objs) in &all {
                for a in objs.iter().filter(|a| a.grade() == k) {
                    let size = hom(&hx, a).len();
                    let expected = usize::from(x.leq(&q_of(a)));
                    ensure(size == expected, || {
                        format!("|hom(H{x}, {a})| = {size}, expected {expected}")
                    })?;
                    pairs += 1;
                }
            }
        }
    }
    let mut counits = 0;
    for (_, objs) in &all {
        for a in objs {
            let c = counit_at(a).map_err(|e| e.to_string())?;
            ensure(c.classify().is_fsk_injection, || format!("counit at {a}"))?;
            counits += 1;
        }
    }
    Ok(format!(
        "{pairs} (x, a) pairs; {counits} counits, all Fsk-injections"
    ))
}

fn c11_lbc() -> Outcome {
    let x = FskObject::generator();
    let mut identities = 0;
    for k in 0..=4 {
        for y in LElement::all(k) {
            let f = h_colax(&LElement::t(2), 1, &y).map_err(|e| e.to_string())?;
            ensure(f.is_identity(), || format!("Γ(t2, 1, {y}) = {f}"))?;
            identities += 1;
        }
    }
    let a = h_colax(&LElement::t(2), 2, &LElement::t(2)).map_err(|e| e.to_string())?;
    ensure(a == alpha(&x, &x, &x), || format!("Γ(t2, 2, t2) = {a}"))?;
    let r = h_colax(&LElement::t(2), 2, &LElement::ell(0)).map_err(|e| e.to_string())?;
    ensure(r == rho(&x), || format!("Γ(t2, 2, l0) = {r}"))?;

    let mut exist = 0;
    for n in 1..=3 {
        for p in LElement::all(n) {
            for i in 1..=n {
                for k in 0..=3 {
                    for y in LElement::all(k) {
                        h_colax(&p, i, &y).map_err(|e| format!("Γ({p}, {i}, {y}): {e}"))?;
                        exist += 1;
                    }
                }
            }
        }
    }
    let xx = x.tensor(&x);
    let lower = h_colax(&LElement::t(3), 2, &LElement::t(2)).map_err(|e| e.to_string())?;
    ensure(lower == alpha(&x, &x, &x).tensor(&id(&x)), || {
        format!("Γ(t3, 2, t2) = {lower}")
    })?;
    let upper = h_colax(&LElement::t(2), 2, &LElement::t(3)).map_err(|e| e.to_string())?;
    let around = alpha(&x, &xx, &x)
        .after(&lower)
        .map_err(|e| e.to_string())?;
    ensure(upper == around, || {
        format!("coassociativity square: {upper} vs {around}")
    })?;
    Ok(format!(
        "{identities} LBC identities, α and ρ recovered, {exist} components exist, coassociativity square commutes"
    ))
}

fn c12_worked_composite() -> Outcome {
    let x = FskObject::generator();
    let i = FskObject::unit();
    let ix = i.tensor(&x);
    let ixx = ix.tensor(&x);
    let source = h_of(&LElement::ell(4));
    ensure(source == obj("((((I X) X) X) X)"), || {
        format!("Hl4 = {source}")
    })?;
    let target = s_substitute_objects(
        &h_of(&LElement::ell(2)),
        &[h_of(&LElement::t(2)), h_of(&LElement::ell(2))],
    )
    .map_err(|e| e.to_string())?;
    ensure(target.to_string() == "((I (X X)) ((I X) X))", || {
        format!("target {target}")
    })?;

    let s1 = rho(&ixx).tensor(&id(&x)).tensor(&id(&x));
    let s2 = alpha(&ixx, &i, &x).tensor(&id(&x));
    let s3 = alpha(&i, &x, &x).tensor(&id(&ix)).tensor(&id(&x));
    let s4 = alpha(&i.tensor(&x.tensor(&x)), &ix, &x);
    let mut chain = vec![source.to_string()];
    let mut composite = s1.clone();
    chain.push(composite.dst().to_string());
    for step in [&s2, &s3, &s4] {
        composite = step.after(&composite).map_err(|e| e.to_string())?;
        chain.push(composite.dst().to_string());
    }
    ensure(
        composite.src() == &source && composite.dst() == &target,
        || format!("chain ends at {}", composite.dst()),
    )?;
    let all = hom(&source, &target);
    ensure(all.len() == 1, || format!("hom has {} elements", all.len()))?;
    let counit = counit_at(&target).map_err(|e| e.to_string())?;
    ensure(composite == all[0] && composite == counit, || {
        format!("composite {composite} vs unique {}", all[0])
    })?;
    Ok(format!("{}; map {}", chain.join(" -> "), composite.map()))
}

fn c13_operad_laws() -> Outcome {
    let elems = |max: usize| -> Vec<LElement> { (0..=max).flat_map(LElement::all).collect() };
    /// Tuples of length `len` whose arities sum to at most `budget`.
    fn tuples(pool: &[LElement], len: usize, budget: usize) -> Vec<Vec<LElement>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for &e in pool.iter().filter(|e| e.arity() <= budget) {
            for rest in tuples(pool, len - 1, budget - e.arity()) {
                let mut t = vec![e];
                t.extend(rest);
                out.push(t);
            }
        }
        out
    }
    let sub = |x: &LElement, xs: &[LElement]| l_substitute(x, xs).map_err(|e| e.to_string());
    let mut assoc = 0;
    let pool = elems(5);
    for x in elems(5).into_iter().filter(|x| x.arity() >= 1) {
        for ys in tuples(&pool, x.arity(), 5) {
            let mid: usize = ys.iter().map(LElement::arity).sum();
            for zs in tuples(&pool, mid, 5) {
                let left = sub(&sub(&x, &ys)?, &zs)?;
                let mut offset = 0;
                let mut inner = Vec::new();
                for y in &ys {
                    inner.push(sub(y, &zs[offset..offset + y.arity()])?);
                    offset += y.arity();
                }
                let right = sub(&x, &inner)?;
                ensure(left == right, || {
                    format!("associativity fails at {x}, {ys:?}, {zs:?}")
                })?;
                assoc += 1;
            }
        }
    }
    let unit = LElement::unit();
    for x in &pool {
        ensure(sub(&unit, &[*x])? == *x, || format!("t1({x}) != {x}"))?;
        ensure(sub(x, &vec![unit; x.arity()])? == *x, || {
            format!("{x}(t1..) != {x}")
        })?;
    }

    let mut q_checks = 0;
    let small: Vec<FskObject> = objects(2).into_iter().flat_map(|(_, o)| o).collect();
    for (_, gs) in objects(3) {
        for g in gs {
            for fs in tuples_of(&small, g.grade()) {
                let total: usize = g.m() + fs.iter().map(FskObject::m).sum::<usize>();
                if total > 8 {
                    continue;
                }
                let lhs = q_of(&s_substitute_objects(&g, &fs).map_err(|e| e.to_string())?);
                let qs: Vec<LElement> = fs.iter().map(q_of).collect();
                let rhs = sub(&q_of(&g), &qs)?;
                ensure(lhs == rhs, || format!("Q not operadic at {g} with {fs:?}"))?;
                q_checks += 1;
            }
        }
    }
    Ok(format!(
        "{assoc} associativity instances, unit laws on {} elements, {q_checks} Q substitutions",
        pool.len()
    ))
}

fn tuples_of(pool: &[FskObject], len: usize) -> Vec<Vec<FskObject>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in tuples_of(pool, len - 1) {
        for e in pool {
            let mut t = vec![e.clone()];
            t.extend(rest.iter().cloned());
            out.push(t);
        }
    }
    out
}

fn c14_duality() -> Outcome {
    let all = objects(5);
    let mut objects_checked = 0;
    for (_, objs) in &all {
        for a in objs {
            ensure(dual_object(&dual_object(a)) == *a, || {
                format!("dual not involutive at {a}")
            })?;
            objects_checked += 1;
        }
    }
    let mut morphisms = 0;
    for (_, srcs) in &all {
        for (_, dsts) in &all {
            for a in srcs {
                for b in dsts.iter().filter(|b| b.grade() == a.grade()) {
                    for f in hom(a, b) {
                        let d = f.dual();
                        ensure(d.dual() == f, || format!("dual not involutive at {f}"))?;
                        let (c, e) = (f.classify(), d.classify());
                        ensure(
                            c.is_fsk_surjection == e.is_fsk_injection
                                && c.is_fsk_injection == e.is_fsk_surjection
                                && c.is_shrink == e.is_swell
                                && c.is_swell == e.is_shrink
                                && c.is_tamari == e.is_tamari,
                            || format!("flags not swapped: {f} vs {d}"),
                        )?;
                        ensure(is_tamari(d.src(), d.dst(), d.map()) == c.is_tamari, || {
                            format!("Tamari flag at {d}")
                        })?;
                        morphisms += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{objects_checked} objects, {morphisms} morphisms"))
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("Tamari counts", c1_tamari_counts),
        ("bracketing correspondence", c2_bracketing),
        ("adjoint formulas", c3_adjoints),
        (
            "base change along surjections and injections",
            c4_base_change,
        ),
        ("criterion equivalences", c5_criteria),
        ("factorization extremality", c6_factorizations),
        ("non-coherence witness", c7_non_coherence),
        ("skew monoidal axioms", c8_axioms),
        (
            "initial and terminal objects per grade",
            c9_initial_terminal,
        ),
        ("H -| Q adjunction and counit", c10_adjunction),
        ("LBC property and structure maps", c11_lbc),
        ("worked substitution composite", c12_worked_composite),
        ("L operad laws and Q", c13_operad_laws),
        ("duality", c14_duality),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{elapsed:.2?}]", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
