//! One line per acceptance criterion. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semiexp::elliptic::{chiswell_build, iso_check, EllipticTree};
use semiexp::embed::zeiger_embed;
use semiexp::holonomy::{h_table, holonomy_table};
use semiexp::length::{
    check_length_axioms, dedekind_forward, dedekind_inverse, j_height_function, ClassPoset,
};
use semiexp::monoid::is_aperiodic_morphism;
use semiexp::rhodes::{burnside_identity_check, chain_product, zeiger_encode};
use semiexp::seqmap::SequentialMap;
use semiexp::tree::build_uniform_tree;
use semiexp::wreath::{
    ell_to_sequential, enumerate_ell, pointed_wreath_tree, transformation_closure,
    wreath_elements, PointedComponent,
};
use semiexp::{fixtures, AdjoinedMonoid, ExpansionError, FiniteMonoid, LengthTable, Phi3Monoid, RhodesMonoid};

type Outcome = Result<String, String>;

const SEED: u64 = 0x5eed;

fn bases() -> Vec<(&'static str, AdjoinedMonoid)> {
    fixtures::all()
        .into_iter()
        .map(|(name, m)| (name, AdjoinedMonoid::new(&m).expect("fixtures coordinatize")))
        .collect()
}

fn full(name: &str, b: &AdjoinedMonoid) -> Result<RhodesMonoid, String> {
    RhodesMonoid::full(b).map_err(|e| format!("{name}: {e}"))
}

fn tables(name: &str, b: &AdjoinedMonoid, rh: &RhodesMonoid) -> Result<Vec<(&'static str, LengthTable)>, String> {
    let hol = holonomy_table(rh, b, &j_height_function(b.green())).map_err(|e| format!("{name}: {e}"))?;
    Ok(vec![("H", h_table(rh, b)), ("holonomy", hol)])
}

fn length_axioms() -> Outcome {
    let mut checked = 0;
    for (name, b) in bases() {
        let rh = full(name, &b)?;
        for (kind, d) in tables(name, &b, &rh)? {
            let report = check_length_axioms(&d, rh.monoid(), kind == "H");
            if let Some((axiom, w)) = report.failures.first() {
                return Err(format!("{name} {kind}: {} fails at {w:?}", axiom.name()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} tables"))
}

fn chiswell_round_trip() -> Outcome {
    let mut strong = 0;
    let mut weak = 0;
    for (name, b) in bases() {
        let rh = full(name, &b)?;
        let zero = holonomy_table(&rh, &b, &vec![0; b.monoid().size()]).map_err(|e| e.to_string())?;
        let mut all = tables(name, &b, &rh)?;
        all.push(("zero", zero));
        for (kind, d) in all {
            let ch = chiswell_build(rh.monoid(), &d).map_err(|e| format!("{name} {kind}: {e}"))?;
            if ch.chi().d_chi() != d {
                return Err(format!("{name} {kind}: D_chi differs"));
            }
            let strict = check_length_axioms(&d, rh.monoid(), true).is_ok();
            if strict != ch.chi().is_strongly_faithful() {
                return Err(format!("{name} {kind}: strict {strict} but strongly faithful {}", !strict));
            }
            if strict {
                strong += 1;
            } else {
                weak += 1;
            }
        }
    }
    let (m, chi) = ella_tree();
    let c2 = PointedComponent { size: 2, point: 0, generators: vec![vec![1, 0]] };
    let pw = pointed_wreath_tree(&[c2.clone(), c2]).map_err(|e| e.to_string())?;
    for (label, m, d) in [("ella", m, chi.d_chi()), ("C2 wr C2", pw.monoid, pw.chi.d_chi())] {
        let ch = chiswell_build(&m, &d).map_err(|e| format!("{label}: {e}"))?;
        if ch.chi().d_chi() != d {
            return Err(format!("{label}: D_chi differs"));
        }
        let strict = check_length_axioms(&d, &m, true).is_ok();
        if strict != ch.chi().is_strongly_faithful() {
            return Err(format!("{label}: strict {strict} but strongly faithful {}", !strict));
        }
        if strict {
            strong += 1;
        } else {
            weak += 1;
        }
    }
    Ok(format!("{strong} strict, {weak} non-strict"))
}

fn ella_tree() -> (FiniteMonoid, EllipticTree) {
    let m = fixtures::ella();
    let ut = build_uniform_tree(&[2, 2]).unwrap();
    let maps: Vec<Vec<usize>> = m
        .elements()
        .map(|x| m.name(x).bytes().map(|c| (c - b'1') as usize).collect())
        .collect();
    let chi = EllipticTree::from_leaf_action(ut.tree().clone(), &ut.leaves(), 0, &maps, &m)
        .expect("ella acts elliptically");
    (m, chi)
}

fn reversed(n: usize) -> Vec<usize> {
    std::iter::once(0).chain((1..n).rev()).collect()
}

fn isometry_uniqueness() -> Outcome {
    let mut trees: Vec<(String, FiniteMonoid, EllipticTree)> = Vec::new();
    let (m, chi) = ella_tree();
    trees.push(("ella relabeled".into(), m.clone(), chi.relabeled(&reversed(chi.tree().len())).unwrap()));
    trees.push(("ella".into(), m, chi));
    let c2 = PointedComponent { size: 2, point: 0, generators: vec![vec![1, 0]] };
    let c3 = PointedComponent { size: 3, point: 1, generators: vec![vec![1, 2, 0], vec![0, 0, 0]] };
    for (label, parts) in [("C2 wr C2", vec![c2.clone(), c2.clone()]), ("C3 wr C2", vec![c2, c3])] {
        let pw = pointed_wreath_tree(&parts).map_err(|e| e.to_string())?;
        trees.push((label.into(), pw.monoid, pw.chi));
    }
    for (name, b) in bases() {
        let rh = full(name, &b)?;
        let ch = chiswell_build(rh.monoid(), &h_table(&rh, &b)).map_err(|e| e.to_string())?;
        let moved = ch.chi().relabeled(&reversed(ch.tree().len())).unwrap();
        trees.push((format!("{name} H-tree"), rh.monoid().clone(), moved));
    }
    for (label, m, chi) in &trees {
        let rebuilt = chiswell_build(m, &chi.d_chi()).map_err(|e| format!("{label}: {e}"))?;
        match iso_check(chi, rebuilt.chi()) {
            Ok(Some(_)) => {}
            other => return Err(format!("{label}: {other:?}")),
        }
    }
    Ok(format!("{} trees", trees.len()))
}

fn zeiger_embedding() -> Outcome {
    let mut perms = Vec::new();
    for (name, b) in bases() {
        let z = zeiger_embed(&b).map_err(|e| format!("{name}: {e}"))?;
        let report = z.verify(false);
        for (check, r) in &report.checks {
            if let Err(w) = r {
                return Err(format!("{name} {check}: {w}"));
            }
        }
        let n: usize = report.permutation_counts.iter().map(|&(_, c)| c).sum();
        if n > 0 {
            perms.push(format!("{name} {n}"));
        }
    }
    Ok(format!("nontrivial permutations: {}", perms.join(", ")))
}

fn recovery() -> Outcome {
    let mut sizes = Vec::new();
    for (name, b) in bases() {
        let z = zeiger_embed(&b).map_err(|e| format!("{name}: {e}"))?;
        match z.verify(true).get("recover") {
            Some(Ok(())) => sizes.push(z.rh.len()),
            Some(Err(w)) => return Err(format!("{name}: {w}")),
            None => return Err(format!("{name}: recovery not run")),
        }
    }
    Ok(format!("|Rh_Y| = {sizes:?}"))
}

// heaviest chain to the top by walking every chain
fn heaviest_chain(poset: &ClassPoset, w: &[u64], c: usize) -> u64 {
    let up = (0..poset.len())
        .filter(|&d| poset.below(c, d))
        .map(|d| heaviest_chain(poset, w, d))
        .max()
        .unwrap_or(0);
    w[c] + up
}

fn dedekind() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut runs = 0;
    for (name, b) in bases() {
        let poset = ClassPoset::from_green(b.green());
        for _ in 0..100 {
            let mut h = vec![0u64; poset.len()];
            for &c in poset.top_down() {
                if c == poset.top() {
                    continue;
                }
                let floor = (0..poset.len()).filter(|&d| poset.below(c, d)).map(|d| h[d]).max().unwrap_or(0);
                h[c] = floor + rng.gen_range(0..4);
            }
            let w = dedekind_inverse(&poset, &h).map_err(|e| format!("{name}: {e}"))?;
            let back = dedekind_forward(&poset, &w).map_err(|e| format!("{name}: {e}"))?;
            if back != h {
                return Err(format!("{name}: h {h:?} comes back as {back:?}"));
            }
            if let Some(c) = (0..poset.len()).find(|&c| heaviest_chain(&poset, &w, c) != h[c]) {
                return Err(format!("{name}: chain oracle disagrees at class {c}"));
            }
            if dedekind_inverse(&poset, &back).map_err(|e| e.to_string())? != w {
                return Err(format!("{name}: weights {w:?} do not round trip"));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} random functions, seed {SEED:#x}"))
}

fn expansion_properties() -> Outcome {
    let mut phi_sizes = Vec::new();
    for (name, b) in bases() {
        for (kind, rh) in [("Rh", full(name, &b)?), ("Rh_Y", RhodesMonoid::cut_to_generators(&b))] {
            let (r, m) = (rh.monoid(), b.monoid());
            let eta = rh.eta();
            if !is_aperiodic_morphism(r, m, &eta).map_err(|e| format!("{name} {kind}: {e}"))? {
                return Err(format!("{name} {kind}: eta not aperiodic"));
            }
            if let Some(s) = r.elements().find(|&s| r.is_idempotent(s) != m.is_idempotent(eta[s])) {
                return Err(format!("{name} {kind}: idempotents not reflected at {}", rh.chain(s).display(m)));
            }
        }
        let phi = Phi3Monoid::cut_to_generators(&fixture(name));
        phi.check_eta().map_err(|e| format!("{name} Phi3: {e}"))?;
        if !is_aperiodic_morphism(phi.monoid(), phi.base(), phi.eta()).map_err(|e| e.to_string())? {
            return Err(format!("{name} Phi3: eta not aperiodic"));
        }
        let above = phi.j_above_counts();
        if above.iter().any(|&k| k == 0 || k > phi.len()) {
            return Err(format!("{name} Phi3: bad J-above counts"));
        }
        phi_sizes.push(phi.len());
    }
    Ok(format!("|Phi3_Y| = {phi_sizes:?}"))
}

fn fixture(name: &str) -> FiniteMonoid {
    fixtures::all().into_iter().find(|(n, _)| *n == name).unwrap().1
}

fn submonoids_of_t2() -> Vec<Vec<Vec<usize>>> {
    let maps = [vec![0, 1], vec![1, 0], vec![0, 0], vec![1, 1]];
    let mut out: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    for mask in 0..16u32 {
        let gens: Vec<Vec<usize>> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| maps[i].clone()).collect();
        out.insert(transformation_closure(2, &gens));
    }
    out.into_iter().collect()
}

fn example_ella() -> Outcome {
    let (m, chi) = ella_tree();
    let names: BTreeSet<&str> = m.elements().map(|x| m.name(x)).collect();
    let expected: BTreeSet<&str> = ["1234", "2244", "3434", "3444", "4444"].into();
    if names != expected {
        return Err(format!("closure gives {names:?}"));
    }
    if !chi.is_faithful() {
        return Err("action not faithful".into());
    }
    chi.validate(&m).map_err(|e| e.to_string())?;
    if chi.base_ray() != vec![0, 1, 3] {
        return Err(format!("base ray {:?}", chi.base_ray()));
    }
    let ut = build_uniform_tree(&[2, 2]).unwrap();
    let sizes = ut.sizes().to_vec();
    let ell: Vec<SequentialMap> = enumerate_ell(ut.tree()).iter().map(|f| ell_to_sequential(&ut, f)).collect();
    let subs = submonoids_of_t2();
    let mut cards = BTreeSet::new();
    for m1 in &subs {
        for m2 in &subs {
            let built = wreath_elements(&sizes, &[m1.clone(), m2.clone()]);
            if built.len() != m2.len() * m2.len() * m1.len() {
                return Err(format!("|M2 o M1| = {} for |M1| = {}, |M2| = {}", built.len(), m1.len(), m2.len()));
            }
            if let Some(x) = built.iter().find(|x| !ell.contains(x)) {
                return Err(format!("{x:?} is not elliptic"));
            }
            cards.insert(built.len());
        }
    }
    if cards.contains(&5) || (1..=4).any(|a| (1..=4).any(|b| a * a * b == 5)) {
        return Err("a wreath product of submonoids has 5 elements".into());
    }
    let image: BTreeSet<_> = m.elements().map(|x| format!("{:?}", ell_to_sequential(&ut, chi.action(x)))).collect();
    if image.len() != 5 {
        return Err("sequential image is not injective".into());
    }
    Ok(format!("{} submonoids of T2, wreath sizes {cards:?}", subs.len()))
}

fn burnside() -> Outcome {
    let cases = [("rectangular band", 1, 1), ("flip-flop", 1, 1), ("trivial", 1, 1), ("C3", 1, 3)];
    for (name, p, q) in cases {
        let b = AdjoinedMonoid::new(&fixture(name)).unwrap();
        let rh = RhodesMonoid::cut_to_generators(&b);
        let report = burnside_identity_check(&b, &rh, p, q).map_err(|e| format!("{name}: {e}"))?;
        if let Some(w) = report.witness {
            return Err(format!("{name}: fails at {}", rh.chain(w).display(b.monoid())));
        }
    }
    let b = AdjoinedMonoid::new(&fixtures::c3()).unwrap();
    match burnside_identity_check(&b, &RhodesMonoid::cut_to_generators(&b), 1, 1) {
        Err(ExpansionError::BurnsideBase { witness }) => {
            Ok(format!("C3 with x^2 = x rejected at {}", b.monoid().name(witness)))
        }
        other => Err(format!("C3 with x^2 = x: {other:?}")),
    }
}

fn zeiger_encoding() -> Outcome {
    let mut spliced = 0;
    for (name, b) in bases() {
        let rh = full(name, &b)?;
        let (m, green, rees) = (b.monoid(), b.green(), b.rees());
        let codes: BTreeSet<Vec<usize>> = rh.chains().iter().map(|c| zeiger_encode(m, rees, c)).collect();
        if codes.len() != rh.len() {
            return Err(format!("{name}: encoding not injective"));
        }
        for long in rh.chains() {
            let long_code = zeiger_encode(m, rees, long);
            for k in 0..=long.len() {
                let short = long.truncate(k);
                for tau in rh.chains() {
                    let st = chain_product(m, green, &short, tau);
                    if !green.r_eq(short.leftmost(), st.leftmost()) {
                        continue;
                    }
                    let mut expected = zeiger_encode(m, rees, &st);
                    expected.extend_from_slice(&long_code[k + 1..]);
                    let got = zeiger_encode(m, rees, &chain_product(m, green, long, tau));
                    if got != expected {
                        return Err(format!(
                            "{name}: splice fails for {} over {} times {}",
                            long.display(m),
                            short.display(m),
                            tau.display(m)
                        ));
                    }
                    spliced += 1;
                }
            }
        }
    }
    Ok(format!("{spliced} splice triples"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("length axioms", length_axioms),
        ("Chiswell round trip", chiswell_round_trip),
        ("isometry uniqueness", isometry_uniqueness),
        ("Zeiger embedding", zeiger_embedding),
        ("recovery", recovery),
        ("Dedekind inversion", dedekind),
        ("expansion properties", expansion_properties),
        ("ella example", example_ella),
        ("Burnside identity", burnside),
        ("Zeiger encoding", zeiger_encoding),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(witness) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {witness}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
