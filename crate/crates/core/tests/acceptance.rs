//! Acceptance gate: one line per criterion, each with its runtime limit.
//! Exits nonzero if any criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vpbraid::brunnian::{is_brunnian, verify_brunnian_samples, BrunnianStatus};
use vpbraid::cabling::{cabled_relators, verify_cabled_relators, verify_cabling, verify_lemma_commuting};
use vpbraid::milnor::check_theta_simplicial;
use vpbraid::oracle::{abelianization, rep, triviality, verify_rep_welldef, Verdict};
use vpbraid::presentation::{canonical_relator, vb_relators, vp_presentation};
use vpbraid::simplicial::{verify_relator_images, verify_simplicial_identities, MapKind};
use vpbraid::suite::SuiteReport;
use vpbraid::{Alphabet, Budget, Word};

/// Relator counts of `VP_3`, `VP_4`, `VP_5` after deduplication, as computed
/// by [`brute_force_relator_count`] and frozen.
const FROZEN_RELATOR_COUNTS: [(usize, usize); 3] = [(3, 6), (4, 36), (5, 120)];

type Token = (usize, usize, i8);

fn inverse(w: &[Token]) -> Vec<Token> {
    w.iter().rev().map(|&(i, j, e)| (i, j, -e)).collect()
}

/// Every index tuple of both relation families, written out letter by
/// letter, then identified up to rotation and inversion.
fn brute_force_relator_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut raw: Vec<Vec<Token>> = Vec::new();
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            if [k, l].iter().all(|x| *x != i && *x != j) {
                raw.push(vec![(i, j, 1), (k, l, 1), (i, j, -1), (k, l, -1)]);
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i != j && j != k && i != k {
                    raw.push(vec![
                        (k, i, 1),
                        (k, j, 1),
                        (i, j, 1),
                        (k, i, -1),
                        (k, j, -1),
                        (i, j, -1),
                    ]);
                }
            }
        }
    }
    let mut classes = BTreeSet::new();
    for w in raw {
        let inv = inverse(&w);
        let key = (0..w.len())
            .flat_map(|s| {
                let a: Vec<Token> = w[s..].iter().chain(&w[..s]).copied().collect();
                let b: Vec<Token> = inv[s..].iter().chain(&inv[..s]).copied().collect();
                [a, b]
            })
            .min()
            .expect("nonempty");
        classes.insert(key);
    }
    classes.len()
}

struct Gate {
    failures: usize,
    verdicts: Vec<Verdict>,
}

impl Gate {
    fn criterion(
        &mut self,
        id: usize,
        title: &str,
        limit: Duration,
        f: impl FnOnce(&mut Vec<Verdict>) -> Result<String, String>,
    ) {
        let t0 = Instant::now();
        let outcome = f(&mut self.verdicts);
        let dt = t0.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if dt <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            self.failures += 1;
        }
        println!(
            "criterion {id:>2} {} {title}: {detail} [{:.2} s, limit {} s]",
            if ok { "PASS" } else { "FAIL" },
            dt.as_secs_f64(),
            limit.as_secs()
        );
    }
}

fn clean(report: &SuiteReport, allow_unknown: bool, verdicts: &mut Vec<Verdict>) -> Result<String, String> {
    let s = report.summary();
    verdicts.extend(report.checks.iter().map(|c| c.verdict.clone()));
    if s.proven_nontrivial > 0 {
        let first = report
            .checks
            .iter()
            .find(|c| c.verdict.is_nontrivial())
            .map(|c| c.id.clone());
        return Err(format!("{} refuted, first {first:?}", s.proven_nontrivial));
    }
    if !allow_unknown && s.unknown > 0 {
        let first = report
            .checks
            .iter()
            .find(|c| c.verdict.is_unknown())
            .map(|c| c.id.clone());
        return Err(format!("{} unknown, first {first:?}", s.unknown));
    }
    Ok(format!(
        "{} checks, {} proven, {} unknown, {} free",
        s.total, s.proven_trivial, s.unknown, s.free
    ))
}

fn err(e: vpbraid::Error) -> String {
    format!("error: {e}")
}

fn main() {
    let budget = Budget::default();
    let secs = Duration::from_secs;
    let mut gate = Gate {
        failures: 0,
        verdicts: Vec::new(),
    };

    gate.criterion(1, "presentation facts", secs(1), |_| {
        let p2 = vp_presentation(2).map_err(err)?;
        if p2.generators.len() != 2 || !p2.relators.is_empty() {
            return Err("VP_2 is not free of rank 2".into());
        }
        for n in 2..=8 {
            let g = vp_presentation(n).map_err(err)?.generators.len();
            if g != n * (n - 1) {
                return Err(format!("VP_{n} has {g} generators"));
            }
        }
        for (n, frozen) in FROZEN_RELATOR_COUNTS {
            let got = vp_presentation(n).map_err(err)?.relators.len();
            let oracle = brute_force_relator_count(n);
            if got != oracle || got != frozen {
                return Err(format!("VP_{n}: {got} relators, oracle {oracle}, frozen {frozen}"));
            }
        }
        Ok("rank-2 free VP_2, n(n-1) generators to n = 8, relator counts 6/36/120".into())
    });

    gate.criterion(2, "representation well-definedness", secs(30), |vs| {
        let report = verify_rep_welldef(6).map_err(err)?;
        for n in 3..=6 {
            let rels: HashSet<Word> = vb_relators(n).map_err(err)?.iter().map(canonical_relator).collect();
            for i in 1..n - 1 {
                let t = format!("r[{i}] r[{}] s[{i}] r[{}]^-1 r[{i}]^-1 s[{}]^-1", i + 1, i + 1, i + 1);
                let w = Word::parse(Alphabet::Braid(n), &t).map_err(err)?;
                if !rels.contains(&canonical_relator(&w)) {
                    return Err(format!("VB_{n} lacks {t}"));
                }
                if !rep(&w).map_err(err)?.is_identity() {
                    return Err(format!("{t} acts nontrivially"));
                }
            }
        }
        clean(&report, false, vs)
    });

    gate.criterion(3, "simplicial identities, n <= 5", secs(300), |vs| {
        clean(&verify_simplicial_identities(5, budget).map_err(err)?, false, vs)
    });

    gate.criterion(4, "degeneracy images of relators, n <= 4", secs(300), |vs| {
        clean(
            &verify_relator_images(4, &[MapKind::Degeneracy], budget).map_err(err)?,
            false,
            vs,
        )
    });

    gate.criterion(5, "cabling agreement and reconstruction, n <= 6", secs(120), |vs| {
        let report = verify_cabling(6, budget).map_err(err)?;
        for n in 2..=6 {
            for id in [format!("l[1,{n}] from a"), format!("l[{n},1] from b")] {
                let c = report
                    .checks
                    .iter()
                    .find(|c| c.id == id)
                    .ok_or(format!("missing {id}"))?;
                if c.free != Some(true) {
                    return Err(format!("{id} is not free"));
                }
            }
        }
        clean(&report, false, vs)
    });

    gate.criterion(6, "commuting rules among cabling elements, n <= 6", secs(120), |vs| {
        clean(&verify_lemma_commuting(6, budget).map_err(err)?, false, vs)
    });

    gate.criterion(7, "cabled relators of VP_5", secs(120), |vs| {
        let c = cabled_relators(4).map_err(err)?;
        for r in &c.relators {
            if r.alphabet() != Alphabet::Lambda(5) {
                return Err(format!("{r} is not in VP_5"));
            }
            if abelianization(r).iter().any(|&e| e != 0) || !rep(r).map_err(err)?.is_identity() {
                return Err(format!("{r} is refuted by an invariant"));
            }
        }
        clean(&verify_cabled_relators(4, budget).map_err(err)?, true, vs)
    });

    gate.criterion(8, "Milnor map simpliciality, dimension <= 4", secs(180), |vs| {
        clean(&check_theta_simplicial(4, budget).map_err(err)?, true, vs)
    });

    gate.criterion(9, "Brunnian samples, n in {3, 4}", secs(300), |vs| {
        let run = verify_brunnian_samples(&[3, 4], 20, 4, budget).map_err(err)?;
        for n in [3, 4] {
            let k = run.samples.iter().filter(|s| s.n == n).count();
            if k < 20 {
                return Err(format!("only {k} samples for n = {n}"));
            }
        }
        if let Some(s) = run.samples.iter().find(|s| !s.abelianization_zero) {
            return Err(format!("VP{} seed {} has nonzero abelianization", s.n, s.seed));
        }
        let l12 = is_brunnian(&Word::lambda(3, 1, 2).map_err(err)?, budget).map_err(err)?;
        if l12.overall != (BrunnianStatus::NotBrunnian { witness_face: 2 }) {
            return Err(format!("l[1,2] in VP_3: {:?}", l12.overall));
        }
        vs.extend(l12.faces.iter().map(|(_, v)| v.clone()));
        clean(&run.report, true, vs).map(|d| format!("{d}; l[1,2] refuted at d2"))
    });

    gate.criterion(10, "prover soundness", secs(60), |vs| {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..200 {
            let n = rng.gen_range(2..=4);
            let a = Alphabet::Lambda(n);
            let letters = (0..rng.gen_range(0..=8)).map(|_| {
                let g = rng.gen_range(0..a.rank());
                vpbraid::Letter::new(g, rng.gen_bool(0.5))
            });
            let w = Word::from_letters(a, letters.collect::<Vec<_>>()).map_err(err)?;
            let r = Word::lambda(n, 1, 2).map_err(err)?;
            let u = w.multiply(&r).and_then(|x| x.multiply(&w.invert())).map_err(err)?;
            vs.push(triviality(&u, budget).map_err(err)?);
            let c = w.commutator(&r).map_err(err)?;
            vs.push(triviality(&c, budget).map_err(err)?);
        }
        let trivial: Vec<&Verdict> = vs.iter().filter(|v| v.is_trivial()).collect();
        let refuted: Vec<&Verdict> = vs.iter().filter(|v| v.is_nontrivial()).collect();
        let bad_t = trivial.iter().filter(|v| !v.replay()).count();
        let bad_n = refuted.iter().filter(|v| !v.replay()).count();
        if bad_t + bad_n > 0 || refuted.is_empty() {
            return Err(format!(
                "{bad_t} traces and {bad_n} witnesses fail to replay of {} and {}",
                trivial.len(),
                refuted.len()
            ));
        }
        Ok(format!(
            "{} traces and {} witnesses replay",
            trivial.len(),
            refuted.len()
        ))
    });

    if gate.failures > 0 {
        println!("{} criteria failed", gate.failures);
        std::process::exit(1);
    }
    println!("all criteria passed");
}
