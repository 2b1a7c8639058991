use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use tangential::jet::{rational, MapGerm, Multidegree, TruncatedPoly, VarSet};

use crate::config::RunConfig;
use crate::output::emit;
use crate::CliError;

#[derive(Debug, Default, Serialize)]
struct Failures {
    ring: usize,
    leibniz: usize,
    chain_rule: usize,
    functoriality: usize,
}

#[derive(Debug, Serialize)]
struct SelfcheckReport {
    seed: u64,
    cap: u32,
    samples: usize,
    failures: Failures,
}

fn jet(rng: &mut ChaCha8Rng, vars: VarSet, cap: u32, terms: usize, lo: u32, hi: u32) -> TruncatedPoly {
    let n = rng.gen_range(0..=terms);
    let terms: Vec<_> = (0..n)
        .map(|_| {
            let deg = rng.gen_range(lo..=hi) as u16;
            let mut exps = vec![0u16; vars.arity()];
            let mut left = deg;
            for e in exps.iter_mut().take(vars.arity() - 1) {
                *e = rng.gen_range(0..=left);
                left -= *e;
            }
            *exps.last_mut().expect("nonempty") = left;
            (Multidegree::new(vars, &exps), rational(rng.gen_range(-5..=5), rng.gen_range(1..=4)))
        })
        .collect();
    TruncatedPoly::from_terms(vars, cap, terms)
}

pub fn run(cfg: &RunConfig, samples: usize) -> Result<ExitCode, CliError> {
    let cap = cfg.cap.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut fails = Failures::default();
    for _ in 0..samples {
        let (p, q, r) = (
            jet(&mut rng, VarSet::Source, cap, 4, 0, cap),
            jet(&mut rng, VarSet::Source, cap, 4, 0, cap),
            jet(&mut rng, VarSet::Source, cap, 4, 0, cap),
        );
        let ring = p.add(&q)? == q.add(&p)?
            && p.mul(&q)? == q.mul(&p)?
            && p.mul(&q)?.mul(&r)? == p.mul(&q.mul(&r)?)?
            && p.mul(&q.add(&r)?)? == p.mul(&q)?.add(&p.mul(&r)?)?;
        fails.ring += usize::from(!ring);

        let var = rng.gen_range(0..2);
        let lhs = p.mul(&q)?.derive(var)?;
        let rhs = p.derive(var)?.mul(&q)?.add(&p.mul(&q.derive(var)?)?)?;
        fails.leibniz += usize::from(lhs.jet(cap - 1) != rhs.jet(cap - 1));

        let f = MapGerm::new((0..3).map(|_| jet(&mut rng, VarSet::Source, cap, 3, 1, 3)).collect())?;
        let g = jet(&mut rng, VarSet::Target, cap, 4, 0, 4);
        let lhs = g.compose(f.components())?.derive(var)?;
        let mut rhs = TruncatedPoly::zero(VarSet::Source, cap);
        for (i, fi) in f.components().iter().enumerate() {
            rhs = rhs.add(&g.derive(i)?.compose(f.components())?.mul(&fi.derive(var)?)?)?;
        }
        fails.chain_rule += usize::from(lhs.jet(cap - 1) != rhs.jet(cap - 1));

        let h = jet(&mut rng, VarSet::Target, cap, 3, 0, 3);
        let product = g.mul(&h)?.compose(f.components())? == g.compose(f.components())?.mul(&h.compose(f.components())?)?;
        fails.functoriality += usize::from(!product);
    }
    let clean = fails.ring + fails.leibniz + fails.chain_rule + fails.functoriality == 0;
    emit(&SelfcheckReport { seed: cfg.seed, cap, samples, failures: fails }, cfg.format)?;
    Ok(ExitCode::from(if clean { 0 } else { 3 }))
}
