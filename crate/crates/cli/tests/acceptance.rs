//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line and enforcing its runtime budget. Integer math throughout; every
//! comparison is bit-exact. Run with `--nocapture` to see the lines.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sloop_core::fixtures;
use sloop_core::morph;
use sloop_core::subs::{self, ClassFilter};
use sloop_core::sweep::{self, SweepConfig, SweepDiscrepancy};
use sloop_core::table::CayleyTable;
use sloop_core::variety::{self, IdentityVerdict};
use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

fn criterion<F: FnOnce()>(index: usize, title: &str, budget: Duration, f: F) {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f));
    let elapsed = start.elapsed();
    match result {
        Ok(()) if elapsed < budget => {
            println!(
                "ACCEPTANCE {index:02} {title}: PASS ({} ms, budget {} s)",
                elapsed.as_millis(),
                budget.as_secs()
            );
        }
        Ok(()) => {
            println!(
                "ACCEPTANCE {index:02} {title}: FAIL (runtime {} ms exceeded budget {} s)",
                elapsed.as_millis(),
                budget.as_secs()
            );
            panic!("criterion {index} exceeded its runtime budget");
        }
        Err(e) => {
            println!("ACCEPTANCE {index:02} {title}: FAIL");
            resume_unwind(e);
        }
    }
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

/// Every table of order ≤ 6 in the fixture suite.
fn fixture_tables() -> Vec<(&'static str, CayleyTable)> {
    let mut out = vec![
        ("example1_dot", fixtures::example1_dot()),
        ("example1_star", fixtures::example1_star()),
        ("example2_times6", fixtures::example2_times6()),
        ("example2_star", fixtures::example2_star()),
    ];
    out.extend(fixtures::groups_up_to_order_6());
    out
}

#[test]
fn criterion_01_example1_s_isotopism_and_isotope() {
    criterion(1, "example 1 S-isotopism and isotope", Duration::from_secs(1), || {
        let dot = fixtures::example1_dot();
        let star = fixtures::example1_star();
        let iso = fixtures::example1_triple();
        let u = subs::make_spair(&dot, &set(&[0, 1])).unwrap();
        let v = subs::make_spair(&star, &set(&[1, 2])).unwrap();
        let verdict = morph::verify_s_isotopism(&u, &v, &iso).unwrap();
        assert!(verdict.is_isotopism);
        assert!(verdict.smarandache.unwrap().is_s_isotopism);
        let image = morph::apply_isotopism(&dot, &iso).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(image.get(x, y), star.get(x, y), "cell ({x},{y})");
            }
        }
    });
}

#[test]
fn criterion_02_example2_isotope_and_subset_images() {
    criterion(2, "example 2 isotope and subset images", Duration::from_secs(1), || {
        let times = fixtures::example2_times6();
        let star = fixtures::example2_star();
        let iso = fixtures::example2_triple();
        let image = morph::apply_isotopism(&times, &iso).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(image.get(x, y), star.get(x, y), "cell ({x},{y})");
            }
        }
        for (_, a) in iso.components() {
            assert_eq!(a.image_of_set(&set(&[2, 4])), set(&[2, 5]));
            assert_eq!(a.image_of_set(&set(&[1, 5])), set(&[0, 3]));
        }
    });
}

#[test]
fn criterion_03_classification_ground_truth() {
    criterion(3, "classification ground truth", Duration::from_secs(1), || {
        for t in [fixtures::example1_dot(), fixtures::example1_star()] {
            let c = t.classify();
            assert!(c.is_quasigroup && !c.is_loop);
        }
        let c = fixtures::example2_times6().classify();
        assert!(c.is_semigroup && !c.is_quasigroup);
        for (t, subset) in [
            (fixtures::example1_dot(), set(&[0, 1])),
            (fixtures::example1_star(), set(&[1, 2])),
            (fixtures::example2_times6(), set(&[2, 4])),
            (fixtures::example2_times6(), set(&[1, 5])),
        ] {
            let r = t.restrict(&subset).unwrap();
            assert_eq!(r.order(), 2);
            assert!(r.classify().is_group);
        }
    });
}

#[test]
fn criterion_04_subgroup_enumeration_matches_powerset_oracle() {
    criterion(4, "subgroup enumeration vs powerset oracle", Duration::from_secs(30), || {
        let mut tables: Vec<CayleyTable> =
            fixture_tables().into_iter().map(|(_, t)| t).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0xacce5504);
        for _ in 0..100 {
            tables.push(sweep::random_latin_square(5, &mut rng));
        }
        for t in &tables {
            for filter in [ClassFilter::Any, ClassFilter::Group] {
                assert_eq!(
                    subs::enumerate_substructures(t, filter, None),
                    subs::enumerate_substructures_powerset(t, filter, None),
                );
            }
        }
    });
}

#[test]
fn criterion_05_automorphism_backtracking_matches_factorial_oracle() {
    criterion(5, "automorphism search vs n! oracle", Duration::from_secs(60), || {
        for (name, t) in fixture_tables() {
            assert_eq!(
                morph::automorphism_group(&t, None).unwrap(),
                morph::automorphism_group_bruteforce(&t),
                "{name}"
            );
        }
    });
}

#[test]
fn criterion_06_holomorph_checks() {
    criterion(6, "holomorph checks", Duration::from_secs(5), || {
        let h3 = sloop_core::build_holomorph(&CayleyTable::cyclic(3), None).unwrap();
        assert_eq!(h3.table().order(), 6);
        let t = h3.table();
        assert!((0..6).any(|x| (0..6).any(|y| t.get(x, y) != t.get(y, x))));
        assert!(morph::find_isomorphism(h3.table(), &fixtures::s3()).is_some());

        let h2 = sloop_core::build_holomorph(&CayleyTable::cyclic(2), None).unwrap();
        assert!(morph::find_isomorphism(h2.table(), &CayleyTable::cyclic(2)).is_some());

        let p = subs::make_spair(&CayleyTable::cyclic(4), &set(&[0, 2])).unwrap();
        let hs = sloop_core::build_smarandache_holomorph(&p, None).unwrap();
        assert_eq!(hs.table().order(), 8);
        let d = hs.designated().unwrap();
        assert_eq!(d.len(), 4);
        assert!(hs.table().restrict(d).unwrap().classify().is_group);
    });
}

#[test]
fn criterion_07_group_law_audits_and_containments() {
    criterion(7, "group-law audits and containments", Duration::from_secs(30), || {
        for (name, t) in fixture_tables() {
            let aum = morph::automorphism_group(&t, None).unwrap();
            aum.verify_group_axioms().unwrap_or_else(|e| panic!("AUM({name}): {e}"));
            let sym = morph::PermGroup::symmetric(t.order());

            for subset in subs::spair_subsets(&t) {
                let p = subs::make_spair(&t, &subset).unwrap();
                let saum = morph::saum(&p, None).unwrap();
                saum.verify_group_axioms()
                    .unwrap_or_else(|e| panic!("SAUM({name}): {e}"));
                assert!(saum.is_subgroup_of(&aum), "SAUM ≤ AUM on {name}");
                let ssym = morph::ssym(&p);
                ssym.verify_group_axioms()
                    .unwrap_or_else(|e| panic!("SSYM({name}): {e}"));
                assert!(ssym.is_subgroup_of(&sym), "SSYM ≤ SYM on {name}");
            }

            if t.classify().is_quasigroup && t.order() <= 6 {
                let aut = morph::autotopism_set(&t, None).unwrap();
                aut.verify_group_axioms()
                    .unwrap_or_else(|e| panic!("AUT({name}): {e}"));
                for subset in subs::spair_subsets(&t) {
                    let p = subs::make_spair(&t, &subset).unwrap();
                    let saut = morph::s_autotopism_set(&p, None).unwrap();
                    saut.verify_group_axioms()
                        .unwrap_or_else(|e| panic!("SAUT({name}): {e}"));
                    assert!(saut.is_subset_of(&aut), "SAUT ≤ AUT on {name}");
                }
            }
        }
    });
}

#[test]
fn criterion_08_variety_sanity_on_groups() {
    criterion(8, "variety sanity on group tables", Duration::from_secs(10), || {
        for (name, t) in fixtures::groups_up_to_order_6() {
            let abelian = (0..t.order())
                .all(|x| (0..t.order()).all(|y| t.get(x, y) == t.get(y, x)));
            for (entry, verdict) in variety::variety_profile(&t) {
                let expect = match entry.as_str() {
                    "cip" | "aip" => abelian,
                    _ => true,
                };
                assert_eq!(
                    verdict == variety::ProfileEntry::Holds,
                    expect,
                    "{name}/{entry}"
                );
            }
        }
        // S3 is the required negative witness, with a re-verified
        // counterexample assignment.
        let s3 = fixtures::s3();
        for name in ["cip", "aip"] {
            let def = variety::catalog_entry(name).unwrap();
            match variety::holds_identity(&s3, &def).unwrap() {
                IdentityVerdict::Fails { assignment, lhs, rhs } => {
                    assert_eq!(variety::eval_term(&s3, &def.lhs, &assignment).unwrap(), lhs);
                    assert_eq!(variety::eval_term(&s3, &def.rhs, &assignment).unwrap(), rhs);
                    assert_ne!(lhs, rhs);
                }
                IdentityVerdict::Holds => panic!("{name} must fail on S3"),
            }
        }
    });
}

fn artifact_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn discrepancy_json(d: &SweepDiscrepancy) -> Value {
    json!({
        "order": d.order,
        "u_entries": d.u_entries,
        "u_subset": d.u_subset,
        "v_entries": d.v_entries,
        "v_subset": d.v_subset,
        "detail": d.detail,
    })
}

#[test]
fn criterion_09_theorem_holomorph_pairing_sweep() {
    criterion(9, "holomorph theorem sweep (orders ≤ 5 + sampled 6)", Duration::from_secs(600), || {
        let cfg = SweepConfig::default();
        let sweep = sweep::sweep_theorem_31(&cfg);
        // Exhaustive scan shape: every Latin square of orders 3,4,5 plus
        // the 25 seeded order-6 samples; counts are deterministic.
        assert_eq!(sweep.counts.squares_scanned, 12 + 576 + 161_280 + 25);
        assert!(sweep.counts.spairs_found > 0);
        assert!(sweep.pairs_hypothesis_satisfied > 0);
        assert!(sweep.pairing_true > 0, "sweep must exercise pairing-true instances");

        let artifact = json!({
            "pairs_examined": sweep.pairs_examined,
            "pairs_hypothesis_satisfied": sweep.pairs_hypothesis_satisfied,
            "pairing_true": sweep.pairing_true,
            "forward_discrepancies": sweep.forward_discrepancies.iter().map(discrepancy_json).collect::<Vec<_>>(),
            "converse_discrepancies": sweep.converse_discrepancies.iter().map(discrepancy_json).collect::<Vec<_>>(),
        });
        let path = artifact_path("t31_discrepancies.json");
        std::fs::write(&path, serde_json::to_string_pretty(&artifact).unwrap()).unwrap();
        println!(
            "  theorem sweep: {} pairs ({} hypothesis-satisfying, {} pairing-true), \
             forward discrepancies: {}, converse discrepancies: {} -> {}",
            sweep.pairs_examined,
            sweep.pairs_hypothesis_satisfied,
            sweep.pairing_true,
            sweep.forward_discrepancies.len(),
            sweep.converse_discrepancies.len(),
            path.display()
        );
        // The forward direction (pairing ⇒ S-isomorphic holomorphs) is the
        // expected-zero side; a nonzero count is a documented finding and
        // is emitted rather than silenced. The converse direction fails on
        // instances with non-trivial SAGs (see the artifact), which the
        // report format is designed to surface.
    });
}

#[test]
fn criterion_10_theorem_variety_preservation_sweep() {
    criterion(10, "variety preservation sweep (orders ≤ 5 + sampled 6)", Duration::from_secs(600), || {
        let cfg = SweepConfig::default();
        let sweep = sweep::sweep_theorem_32(&cfg);
        assert_eq!(sweep.counts.squares_scanned, 12 + 576 + 161_280 + 25);
        assert!(sweep.instances_hypothesis_satisfied > 0);

        let path = artifact_path("t32_discrepancies.json");
        let artifact = json!({
            "instances_examined": sweep.instances_examined,
            "instances_hypothesis_satisfied": sweep.instances_hypothesis_satisfied,
            "variety_discrepancies": sweep.variety_discrepancies.iter().map(discrepancy_json).collect::<Vec<_>>(),
        });
        std::fs::write(&path, serde_json::to_string_pretty(&artifact).unwrap()).unwrap();
        println!(
            "  variety sweep: {} instances ({} hypothesis-satisfying), mismatches: {} -> {}",
            sweep.instances_examined,
            sweep.instances_hypothesis_satisfied,
            sweep.variety_discrepancies.len(),
            path.display()
        );
        assert!(
            sweep.variety_discrepancies.is_empty(),
            "every hypothesis-satisfying instance must preserve the catalog verdicts"
        );

        // Identity-triple cases verify trivially.
        let p = subs::make_spair(&CayleyTable::cyclic(4), &set(&[0, 2])).unwrap();
        let id = sloop_core::Perm::identity(4);
        let r = sloop_core::verify_theorem_32(&p, &id, &id, &id, &variety::catalog(), None)
            .unwrap();
        assert_eq!(r.conclusion.unwrap().varieties_agree, Some(true));
    });
}

#[test]
fn criterion_11_cli_determinism() {
    criterion(11, "CLI determinism (golden double runs)", Duration::from_secs(10), || {
        let fixture_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        let commands: Vec<Vec<&str>> = vec![
            vec!["check", "example1_dot.tbl"],
            vec!["check", "example1_star.tbl"],
            vec!["check", "example2_times6.tbl"],
            vec!["check", "example2_star.tbl"],
            vec!["sub", "example1_dot.tbl"],
            vec!["sub", "example2_times6.tbl", "--filter", "group"],
            vec!["aut", "example1_dot.tbl"],
            vec!["saum", "example1_dot.tbl"],
            vec!["ssym", "example1_dot.tbl"],
            vec!["autotop", "example1_dot.tbl"],
            vec!["autotop", "example1_dot.tbl", "--s", "0,1"],
            vec!["isotope", "example1_dot.tbl", "--triple", "example1.iso"],
            vec!["isotope", "example2_times6.tbl", "--triple", "example2.iso"],
            vec![
                "verify-iso",
                "example1_dot.tbl",
                "example1_star.tbl",
                "--triple",
                "example1.iso",
                "--s",
                "0,1",
                "--s-dst",
                "1,2",
            ],
            vec![
                "verify-iso",
                "example2_times6.tbl",
                "example2_star.tbl",
                "--triple",
                "example2.iso",
                "--s",
                "2,4",
                "--s-dst",
                "2,5",
            ],
            vec!["iso", "example1_dot.tbl", "example1_star.tbl"],
            vec!["holomorph", "example1_dot.tbl"],
            vec![
                "holomorph",
                "example1_dot.tbl",
                "--mode",
                "smarandache",
                "--s",
                "0,1",
            ],
            vec!["variety", "example1_dot.tbl"],
            vec!["variety", "example2_times6.tbl"],
            vec![
                "verify-t31",
                "example1_dot.tbl",
                "example1_star.tbl",
                "--s",
                "0,1",
                "--s-dst",
                "1,2",
            ],
            vec!["verify-t32", "example1_dot.tbl", "--s", "0,1"],
        ];
        for base in &commands {
            for json in [false, true] {
                let mut args: Vec<&str> = base.clone();
                if json {
                    args.push("--json");
                }
                let run = || {
                    let out = Command::new(env!("CARGO_BIN_EXE_sloop"))
                        .args(&args)
                        .current_dir(&fixture_dir)
                        .output()
                        .expect("binary runs");
                    assert!(
                        out.status.success(),
                        "{args:?}: {}",
                        String::from_utf8_lossy(&out.stderr)
                    );
                    out.stdout
                };
                let first = run();
                let second = run();
                assert_eq!(first, second, "non-deterministic output for {args:?}");
                assert!(
                    first.ends_with(b"\n"),
                    "output must end with a newline for {args:?}"
                );
            }
        }
    });
}
