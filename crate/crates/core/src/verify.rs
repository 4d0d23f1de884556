//! Table verification: the catalog checked against the classifier, random
//! conjugates, the factor swap, the abstract-type oracle and the adjoint
//! decompositions. Randomized checks fan out over rayon; every trial is
//! seeded independently, so results do not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{abstract_type_of, representative_of, AbstractSolvableType, Branch, Catalog, ClassLabel};
use crate::classify::{classify, classify_span};
use crate::conjugacy::{factor_swap_subalgebra, random_inner, random_scalar, InnerAutomorphism};
use crate::lie::{Element, Subalgebra};
use crate::modulerep::{adjoint_decompose, Sl2Triple};
use crate::scalar::Scalar;

/// Failures kept per check; the count is always exact.
const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub complexity: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { trials: 200, seed: 0, complexity: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        CheckOutcome { name: name.into(), passed: 0, total: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(failure());
        }
    }

    fn absorb(&mut self, results: Vec<Result<(), String>>) {
        for r in results {
            let ok = r.is_ok();
            self.record(ok, || r.err().unwrap_or_default());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: Vec<CheckOutcome>,
    /// Class and family names present in the catalog, by dimension.
    pub families_by_dim: BTreeMap<usize, Vec<String>>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::ok)
    }
}

/// Family names of every class, by dimension, with parameters dropped.
pub fn expected_families() -> BTreeMap<usize, BTreeSet<String>> {
    let set = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    BTreeMap::from([
        (0, set(&["0"])),
        (1, set(&["J1", "J2", "J3", "J4", "J5", "J6", "J7", "J8"])),
        (2, set(&["K1^1", "K1^2", "K1^3", "K1^4", "K2^1", "K2^2", "K2^3", "K2^4", "K2^5"])),
        (3, set(&["L2^1", "L3^1", "L3^2", "L3,0^1", "L3,0^2", "L3,0^3", "L3,0^4", "L4^1", "A1^1", "A1^2", "A1^3"])),
        (4, set(&["M8^1", "(A1⊕J)^1", "(A1⊕J)^2", "(A1⊕J)^3", "(A1⊕J)^4"])),
        (5, set(&["(A1⊕K2)^1", "(A1⊕K2)^2"])),
        (6, set(&["so(4)"])),
    ])
}

pub fn families_by_dim(catalog: &Catalog) -> BTreeMap<usize, BTreeSet<String>> {
    let mut out: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    for e in &catalog.entries {
        out.entry(e.label.dim()).or_default().insert(e.label.family_key());
    }
    out
}

struct Prepared {
    label: ClassLabel,
    subalgebra: Option<Subalgebra>,
}

fn prepare(catalog: &Catalog) -> Vec<Prepared> {
    catalog
        .entries
        .iter()
        .map(|e| Prepared { label: e.label.clone(), subalgebra: e.subalgebra().ok() })
        .collect()
}

fn automorphisms(cfg: &VerifyConfig, count: usize) -> Vec<InnerAutomorphism> {
    (0..count as u64)
        .map(|k| random_inner(cfg.seed.wrapping_add(k), cfg.complexity.max(1)).expect("complexity is positive"))
        .collect()
}

pub fn verify_tables(catalog: &Catalog, cfg: VerifyConfig) -> VerifyReport {
    let entries = prepare(catalog);
    let phis = automorphisms(&cfg, cfg.trials);
    let checks = vec![
        check_self_classification(&entries),
        check_family_sets(catalog),
        check_round_trips(&entries, &phis),
        check_separation(&entries),
        check_swap_pairing(&entries),
        check_nonexistence(&entries, &cfg),
        check_adjoint_decompositions(&phis[..phis.len().min(50)]),
        check_abstract_types(&entries, &phis),
    ];
    let families_by_dim = families_by_dim(catalog).into_iter().map(|(d, s)| (d, s.into_iter().collect())).collect();
    VerifyReport { config: cfg, checks, families_by_dim }
}

fn check_self_classification(entries: &[Prepared]) -> CheckOutcome {
    let mut out = CheckOutcome::new("catalog self-classification");
    let results: Vec<Result<(), String>> = entries
        .par_iter()
        .map(|e| {
            let s = e.subalgebra.as_ref().ok_or_else(|| format!("{}: generators do not span a subalgebra", e.label))?;
            match classify(s) {
                Ok(l) if l == e.label => Ok(()),
                Ok(l) => Err(format!("{}: representative classifies as {l}", e.label)),
                Err(err) => Err(format!("{}: {err}", e.label)),
            }
        })
        .collect();
    out.absorb(results);
    out
}

fn check_family_sets(catalog: &Catalog) -> CheckOutcome {
    let mut out = CheckOutcome::new("class counts per dimension");
    let found = families_by_dim(catalog);
    for (dim, expected) in expected_families() {
        let got = found.get(&dim).cloned().unwrap_or_default();
        out.record(got == expected, || {
            let missing: Vec<_> = expected.difference(&got).collect();
            let extra: Vec<_> = got.difference(&expected).collect();
            format!("dim {dim}: missing {missing:?}, unexpected {extra:?}")
        });
    }
    out
}

fn check_round_trips(entries: &[Prepared], phis: &[InnerAutomorphism]) -> CheckOutcome {
    let mut out = CheckOutcome::new("conjugation round-trip");
    let pairs: Vec<(&Prepared, &Subalgebra, usize)> = entries
        .iter()
        .filter_map(|e| e.subalgebra.as_ref().map(|s| (e, s)))
        .flat_map(|(e, s)| (0..phis.len()).map(move |k| (e, s, k)))
        .collect();
    let results: Vec<Result<(), String>> = pairs
        .par_iter()
        .map(|(e, s, k)| {
            let image = phis[*k].apply_subalgebra(s);
            match classify(&image) {
                Ok(l) if l == e.label => Ok(()),
                Ok(l) => Err(format!("{} under trial {k}: classifies as {l}", e.label)),
                Err(err) => Err(format!("{} under trial {k}: {err}", e.label)),
            }
        })
        .collect();
    out.absorb(results);
    out
}

fn check_separation(entries: &[Prepared]) -> CheckOutcome {
    let mut out = CheckOutcome::new("pairwise separation");
    let classified: Vec<Option<ClassLabel>> =
        entries.par_iter().map(|e| e.subalgebra.as_ref().and_then(|s| classify(s).ok())).collect();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            let same_label = entries[i].label == entries[j].label;
            let (a, b) = (&classified[i], &classified[j]);
            let ok = a.is_some() && b.is_some() && (a == b) == same_label;
            out.record(ok, || format!("{} vs {}: classified as {a:?} and {b:?}", entries[i].label, entries[j].label));
        }
    }
    out
}

fn check_swap_pairing(entries: &[Prepared]) -> CheckOutcome {
    let mut out = CheckOutcome::new("factor swap pairing");
    let mut moved = false;
    for e in entries {
        let Some(s) = &e.subalgebra else {
            out.record(false, || format!("{}: no subalgebra", e.label));
            continue;
        };
        let got = classify(&factor_swap_subalgebra(s));
        let expected = e.label.swapped();
        moved |= expected != e.label;
        out.record(got.as_ref() == Ok(&expected), || format!("{}: swap classifies as {got:?}, expected {expected}", e.label));
    }
    out.record(moved, || "the swap fixes every class, so it looks inner".into());
    out
}

fn check_nonexistence(entries: &[Prepared], cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("non-existence guards");
    for e in entries {
        let Some(s) = &e.subalgebra else { continue };
        if s.is_solvable() && s.dim() > 0 {
            let t = abstract_type_of(s);
            let forbidden = matches!(t, Ok(AbstractSolvableType::L1) | Ok(AbstractSolvableType::L5));
            out.record(!forbidden, || format!("{}: realizes {t:?}", e.label));
        }
        out.record(!(s.is_solvable() && s.dim() >= 5), || format!("{}: solvable of dimension {}", e.label, s.dim()));
    }
    for branch in [Branch::One, Branch::Two] {
        let label = ClassLabel::L3 { a: Scalar::frac(-1, 4), branch };
        out.record(representative_of(&label).is_err(), || format!("{label} has a representative"));
    }
    for (t, ok) in torus_grid(cfg.seed) {
        out.record(ok, || format!("torus element {t} gives a forbidden class"));
    }
    out
}

/// Over a grid of `t = p h1 + q h2 + r x1 + s x2`, the action on `⟨x1, x2⟩`
/// keeps both lines and the span never lands in `L3(-1/4)`.
pub fn torus_grid(seed: u64) -> Vec<(Element, bool)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<Scalar> = ["0", "1", "-1", "2", "-2", "1/2", "3", "i", "-i", "1+i", "2-3i"]
        .iter()
        .map(|t| t.parse().expect("literal"))
        .collect();
    let mut out = Vec::new();
    for p in &values {
        for q in &values {
            if p.is_zero() && q.is_zero() {
                continue;
            }
            let t = Element::h1().scale(p)
                + Element::h2().scale(q)
                + Element::x1().scale(&random_scalar(&mut rng, 5))
                + Element::x2().scale(&random_scalar(&mut rng, 5));
            let split = [Element::x1(), Element::x2()].iter().all(|n| {
                let b = t.bracket(n);
                b.is_zero() || Subalgebra::span_close(&[n.clone()]).expect("line").contains(&b)
            });
            let label = classify_span(&[Element::x1(), Element::x2(), t.clone()]);
            let forbidden = match &label {
                Ok(ClassLabel::L3 { a, .. }) => *a == Scalar::frac(-1, 4),
                Ok(_) => false,
                Err(_) => true,
            };
            out.push((t, split && !forbidden));
        }
    }
    out
}

fn check_adjoint_decompositions(phis: &[InnerAutomorphism]) -> CheckOutcome {
    let mut out = CheckOutcome::new("adjoint decompositions");
    let expected = [(1, vec![2, 0, 0, 0]), (2, vec![2, 0, 0, 0]), (3, vec![2, 2])];
    for (index, summands) in expected {
        let label = ClassLabel::A1 { index };
        let s = representative_of(&label).expect("A1 is constructible").subalgebra().expect("closed");
        let decompose = |s: &Subalgebra| Sl2Triple::from_subalgebra(s).and_then(|t| adjoint_decompose(&t)).map(|d| d.summands);
        let got = decompose(&s);
        out.record(got.as_ref() == Ok(&summands), || format!("{label}: {got:?}"));
        let results: Vec<Result<(), String>> = phis
            .par_iter()
            .enumerate()
            .map(|(k, phi)| {
                let got = decompose(&phi.apply_subalgebra(&s));
                if got.as_ref() == Ok(&summands) {
                    Ok(())
                } else {
                    Err(format!("{label} under trial {k}: {got:?}"))
                }
            })
            .collect();
        out.absorb(results);
    }
    out
}

fn check_abstract_types(entries: &[Prepared], phis: &[InnerAutomorphism]) -> CheckOutcome {
    let mut out = CheckOutcome::new("abstract type oracle");
    let solvable: Vec<(&Prepared, &Subalgebra)> = entries
        .iter()
        .filter(|e| e.label.is_solvable() && e.label.dim() > 0)
        .filter_map(|e| e.subalgebra.as_ref().map(|s| (e, s)))
        .collect();
    let agree = |label: &ClassLabel, s: &Subalgebra| -> Result<(), String> {
        let got = abstract_type_of(s).map_err(|err| format!("{label}: {err}"))?;
        let implied = classify(s).map_err(|err| format!("{label}: {err}"))?.abstract_type();
        if implied.as_ref() == Some(&got) {
            Ok(())
        } else {
            Err(format!("{label}: oracle says {got}, classifier implies {implied:?}"))
        }
    };
    out.absorb(solvable.par_iter().map(|(e, s)| agree(&e.label, s)).collect());
    let results: Vec<Result<(), String>> = (0..phis.len())
        .into_par_iter()
        .map(|k| {
            let (e, s) = solvable[k % solvable.len()];
            agree(&e.label, &phis[k].apply_subalgebra(s))
        })
        .collect();
    out.absorb(results);
    out
}
