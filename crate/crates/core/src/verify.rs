//! Seeded verification suites. Each suite checks one family of identities on
//! exhaustive enumerations or on a random rational corpus and reports one
//! entry per identity and size.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::freeness::{Letter, Scenario, Word};
use crate::limits::{Kind, Limits};
use crate::partitions::{self, interleave, kreweras, validate_ncl, NcPartition};
use crate::rational::{self, frac, int, Rational};
use crate::transforms::{
    cumulant_via_classes_with, cumulant_via_trees_with, cumulants_to_moments, eval_bicolor,
    free_additive, free_multiplicative_with, moments_to_cumulants, moments_to_tcoeffs, ncls_weight,
    tcoeffs_to_moments, verify_t_multiplicativity_with, CumulantSequence, MomentSequence,
};
use crate::trees;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Counts,
    Kreweras,
    Transforms,
    Classes,
    Trees,
    Freeness,
    Bridge,
    Theorem,
    Fixtures,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Counts,
        Suite::Kreweras,
        Suite::Transforms,
        Suite::Classes,
        Suite::Trees,
        Suite::Freeness,
        Suite::Bridge,
        Suite::Theorem,
        Suite::Fixtures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Kreweras => "kreweras",
            Suite::Transforms => "transforms",
            Suite::Classes => "classes",
            Suite::Trees => "trees",
            Suite::Freeness => "freeness",
            Suite::Bridge => "bridge",
            Suite::Theorem => "theorem",
            Suite::Fixtures => "fixtures",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Deliberate corruptions, used to check that the suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Fault {
    /// Merge the first two blocks of every Kreweras complement.
    Kreweras,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub order: usize,
    pub seed: u64,
    pub corpus: usize,
    pub limits: Limits,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            order: 6,
            seed: 0,
            corpus: 12,
            limits: Limits::default(),
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub suite: Suite,
    pub name: String,
    /// The identity being checked, in words.
    pub anchor: String,
    pub parameters: Value,
    pub pass: bool,
    /// Present on failure: the offending object and both computed values.
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suites: Vec<Suite>,
    pub order: usize,
    pub seed: u64,
    pub corpus: usize,
    pub passed: bool,
    pub failures: usize,
    pub entries: Vec<Entry>,
}

/// Random rationals `p/q` with `|p| <= 6`, `1 <= q <= 5`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=5))
}

/// `count` moment sequences of the given order with nonzero first moment.
pub fn moment_corpus(seed: u64, count: usize, order: usize) -> Vec<MomentSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut v: Vec<Rational> = (0..order).map(|_| random_rational(&mut rng)).collect();
            while v[0].is_zero() {
                v[0] = random_rational(&mut rng);
            }
            MomentSequence::new(v)
        })
        .collect()
}

/// Two algebras `X`, `Y` with seeded cumulants and nonzero first cumulant.
pub fn random_scenario(seed: u64, order: usize, limits: &Limits) -> Result<Scenario> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_f4ee);
    let mut algebras = BTreeMap::new();
    for id in ["X", "Y"] {
        let mut v: Vec<Rational> = (0..order).map(|_| random_rational(&mut rng)).collect();
        while v[0].is_zero() {
            v[0] = random_rational(&mut rng);
        }
        algebras.insert(id.to_string(), CumulantSequence::new(v));
    }
    Scenario::with_limits(algebras, limits.clone())
}

fn r(x: &Rational) -> Value {
    Value::String(rational::format(x))
}

fn rs(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(r).collect())
}

struct Sink<'a> {
    suite: Suite,
    entries: &'a mut Vec<Entry>,
}

impl Sink<'_> {
    fn push(&mut self, name: &str, anchor: &str, parameters: Value, witness: Option<Value>) {
        self.entries.push(Entry {
            suite: self.suite,
            name: name.to_string(),
            anchor: anchor.to_string(),
            parameters,
            pass: witness.is_none(),
            witness,
        });
    }
}

const NC_COUNTS: [usize; 12] = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012];
const NCL_COUNTS: [usize; 9] = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586];
const BICOLOR_COUNTS: [usize; 7] = [1, 2, 7, 30, 143, 728, 3876];

fn count_entry(
    sink: &mut Sink,
    kind: &str,
    n: usize,
    expected: usize,
    got: Result<usize>,
) -> Result<()> {
    let got = got?;
    let witness = (got != expected).then(|| json!({"expected": expected, "got": got}));
    sink.push(
        &format!("count {kind}"),
        "enumeration sizes match the Catalan, large Schroeder and bicolor tree tables",
        json!({"kind": kind, "n": n}),
        witness,
    );
    Ok(())
}

fn suite_counts(sink: &mut Sink, cfg: &VerifyConfig) -> Result<()> {
    let l = &cfg.limits;
    let upto = |kind: Kind, table: usize| 1..=table.min(l.cap(kind));
    for n in upto(Kind::Nc, 10) {
        count_entry(
            sink,
            "nc",
            n,
            NC_COUNTS[n - 1],
            partitions::enumerate_nc_with(n, l).map(|v| v.len()),
        )?;
    }
    for n in upto(Kind::Ncl, NCL_COUNTS.len()) {
        count_entry(
            sink,
            "ncl",
            n,
            NCL_COUNTS[n - 1],
            partitions::enumerate_ncl_with(n, l).map(|v| v.len()),
        )?;
    }
    for n in upto(Kind::Ncs, 5) {
        count_entry(
            sink,
            "ncs",
            n,
            NC_COUNTS[n - 1],
            partitions::enumerate_ncs_with(n, l).map(|v| v.len()),
        )?;
    }
    for n in upto(Kind::Ncls, 5) {
        count_entry(
            sink,
            "ncls",
            n,
            BICOLOR_COUNTS[n - 1],
            partitions::enumerate_ncls_with(n, l).map(|v| v.len()),
        )?;
    }
    for n in upto(Kind::Trees, 10) {
        let expected = if n == 1 { 1 } else { NC_COUNTS[n - 2] };
        count_entry(
            sink,
            "trees",
            n,
            expected,
            trees::enumerate_planar_trees_with(n, l).map(|v| v.len()),
        )?;
    }
    for n in upto(Kind::Bicolor, 7) {
        count_entry(
            sink,
            "bicolor-elementary",
            n,
            n,
            trees::enumerate_bicolor_elementary(n).map(|v| v.len()),
        )?;
    }
    for n in upto(Kind::Bicolor, 5) {
        count_entry(
            sink,
            "bicolor",
            n,
            BICOLOR_COUNTS[n - 1],
            trees::enumerate_bicolor_with(n, l).map(|v| v.len()),
        )?;
    }
    Ok(())
}

fn corrupt(kr: NcPartition, fault: Option<Fault>) -> NcPartition {
    match fault {
        Some(Fault::Kreweras) if kr.num_blocks() >= 2 => {
            let mut raw = kr.to_raw().blocks;
            let second = raw.remove(1);
            raw[0].extend(second);
            // merging two blocks may cross; fall back to the full block then
            partitions::validate_nc(kr.n(), &raw).unwrap_or_else(|_| NcPartition::one(kr.n()))
        }
        _ => kr,
    }
}

fn suite_kreweras(sink: &mut Sink, cfg: &VerifyConfig) -> Result<()> {
    let top = 8.min(cfg.limits.cap(Kind::Nc));
    for n in 1..=top {
        let all = partitions::enumerate_nc_with(n, &cfg.limits)?;
        let witness = all.iter().find_map(|g| {
            let kr = corrupt(kreweras(g), cfg.fault);
            (g.num_blocks() + kr.num_blocks() != n + 1).then(|| {
                json!({"gamma": g.to_raw(), "kreweras": kr.to_raw(),
                       "blocks": g.num_blocks() + kr.num_blocks(), "expected": n + 1})
            })
        });
        sink.push(
            "block count",
            "a non-crossing partition and its Kreweras complement have n+1 blocks in total",
            json!({"n": n}),
            witness,
        );
    }
    for n in 1..=top.min(6) {
        let all = partitions::enumerate_nc_with(n, &cfg.limits)?;
        let mut witness = None;
        'outer: for g in all.iter() {
            let kr = corrupt(kreweras(g), cfg.fault);
            if interleave(g, &kr).is_err() {
                witness = Some(
                    json!({"gamma": g.to_raw(), "kreweras": kr.to_raw(), "reason": "crossing"}),
                );
                break;
            }
            for s in all.iter() {
                if interleave(g, s).is_ok() && !s.refines(&kr) {
                    witness = Some(json!({"gamma": g.to_raw(), "kreweras": kr.to_raw(),
                                          "larger": s.to_raw()}));
                    break 'outer;
                }
            }
        }
        sink.push(
            "maximality",
            "the Kreweras complement is the largest partition of the interleaved copy keeping the union non-crossing",
            json!({"n": n}),
            witness,
        );
    }
    Ok(())
}

fn suite_transforms(sink: &mut Sink, cfg: &VerifyConfig) -> Result<()> {
    let order = cfg.order.max(8);
    for (i, m) in moment_corpus(cfg.seed, cfg.corpus, order)
        .iter()
        .enumerate()
    {
        let k = moments_to_cumulants(m);
        let back = cumulants_to_moments(&k);
        sink.push(
            "moment-cumulant roundtrip",
            "moments to free cumulants and back is the identity",
            json!({"sample": i, "order": order}),
            (&back != m)
                .then(|| json!({"moments": rs(m.values()), "roundtrip": rs(back.values())})),
        );
        let t = moments_to_tcoeffs(m)?;
        let back = tcoeffs_to_moments(&t)?;
        sink.push(
            "moment-t roundtrip",
            "moments to t-coefficients and back is the identity",
            json!({"sample": i, "order": order}),
            (&back != m)
                .then(|| json!({"moments": rs(m.values()), "roundtrip": rs(back.values())})),
        );
    }
    Ok(())
}

type CumulantRoute = fn(&crate::transforms::TCoeffSequence, usize, &Limits) -> Result<Rational>;

fn cumulant_route(
    sink: &mut Sink,
    cfg: &VerifyConfig,
    name: &str,
    anchor: &str,
    route: CumulantRoute,
) -> Result<()> {
    for (i, m) in moment_corpus(cfg.seed, cfg.corpus, cfg.order)
        .iter()
        .enumerate()
    {
        let k = moments_to_cumulants(m);
        let t = moments_to_tcoeffs(m)?;
        for n in 1..=cfg.order {
            let got = route(&t, n, &cfg.limits)?;
            sink.push(
                name,
                anchor,
                json!({"sample": i, "n": n}),
                (&got != k.kappa(n)).then(|| {
                    json!({"moments": rs(m.values()), "expected": r(k.kappa(n)), "got": r(&got)})
                }),
            );
        }
    }
    Ok(())
}

fn suite_freeness(sink: &mut Sink, cfg: &VerifyConfig) -> Result<()> {
    let s = random_scenario(cfg.seed, cfg.order, &cfg.limits)?;
    let (kx, ky) = (&s.algebras()["X"], &s.algebras()["Y"]);
    let max_len = cfg.order.min(cfg.limits.cap(Kind::Word));

    let report = s.freeness_vanishing_suite(max_len)?;
    sink.push(
        "mixed vanishing",
        "mixed t-coefficients and mixed free cumulants of free generators vanish",
        json!({"max_len": max_len, "words": report.words_checked}),
        (!report.passed).then(|| json!({"counterexamples": report.counterexamples})),
    );

    let n = cfg.order.min(5);
    let via_words = moments_to_cumulants(&s.sum_moments("X", "Y", n)?);
    let additive = free_additive(&kx.truncate(n), &ky.truncate(n))?;
    sink.push(
        "sum route",
        "cumulants of X+Y from word moments equal the sum of cumulants",
        json!({"order": n}),
        (via_words != additive)
            .then(|| json!({"words": rs(via_words.values()), "additive": rs(additive.values())})),
    );

    let via_words = s.product_moments("X", "Y", n)?;
    let kxy = (1..=n)
        .map(|j| free_multiplicative_with(kx, ky, j, &cfg.limits))
        .collect::<Result<Vec<_>>>()?;
    let via_convolution = cumulants_to_moments(&CumulantSequence::new(kxy));
    sink.push(
        "product route",
        "moments of XY from alternating words equal the multiplicative convolution",
        json!({"order": n}),
        (via_words != via_convolution)
            .then(|| json!({"words": rs(via_words.values()), "convolution": rs(via_convolution.values())})),
    );

    let scales = [int(2), int(-1), frac(1, 3)];
    for len in 1..=max_len.min(4) {
        let mut witness = None;
        'words: for mask in 0u32..(1 << len) {
            let letters: Vec<Letter> = (0..len)
                .map(|i| Letter::unit(if mask & (1 << i) != 0 { "Y" } else { "X" }))
                .collect();
            let base = s.mixed_tcoeff(&Word::new(letters.clone())?)?;
            for c in &scales {
                for pos in 0..len {
                    let mut scaled = letters.clone();
                    scaled[pos].scale = c.clone();
                    let w = Word::new(scaled)?;
                    let got = s.mixed_tcoeff(&w)?;
                    let expected = if pos == 0 { &base * c } else { base.clone() };
                    if got != expected {
                        witness = Some(
                            json!({"word": w.to_string(), "expected": r(&expected), "got": r(&got)}),
                        );
                        break 'words;
                    }
                }
            }
        }
        sink.push(
            "scaling law",
            "t-coefficients are linear in the first letter and invariant under scaling the others",
            json!({"len": len}),
            witness,
        );
    }

    let m = cumulants_to_moments(kx);
    let t = moments_to_tcoeffs(&m)?;
    for len in 1..=max_len {
        let w = Word::new(vec![Letter::unit("X"); len])?;
        let (phi, tw) = (s.mixed_moment(&w)?, s.mixed_tcoeff(&w)?);
        let ok = &phi == m.m(len) && &tw == t.t(len - 1);
        sink.push(
            "single algebra",
            "word functionals on powers of one generator match the single-variable transforms",
            json!({"len": len}),
            (!ok).then(|| {
                json!({"moment": r(&phi), "expected_moment": r(m.m(len)),
                       "tcoeff": r(&tw), "expected_tcoeff": r(t.t(len - 1))})
            }),
        );
    }
    Ok(())
}

fn suite_bridge(sink: &mut Sink, cfg: &VerifyConfig) -> Result<()> {
    let top = cfg.order.min(cfg.limits.cap(Kind::Ncls));
    let corpus = moment_corpus(cfg.seed, 2 * cfg.corpus.div_ceil(2).max(1), top.max(1));
    for n in 1..=top {
        let members = partitions::enumerate_ncls_with(n, &cfg.limits)?;
        let mut witness = None;
        for pi in members.iter() {
            let b = trees::lambda(pi)?;
            if &trees::lambda_inv(&b) != pi {
                witness = Some(json!({"pi": pi.to_raw(), "reason": "roundtrip"}));
                break;
            }
        }
        sink.push(
            "lambda roundtrip",
            "the bicolor tree bijection inverts on every linked partition with parity-split components",
            json!({"n": n}),
            witness,
        );
        for (i, pair) in corpus.chunks(2).enumerate() {
            let (mx, my) = (&pair[0], &pair[1]);
            let (tx, ty) = (moments_to_tcoeffs(mx)?, moments_to_tcoeffs(my)?);
            let mut witness = None;
            let mut total = Rational::zero();
            for pi in members.iter() {
                let w = ncls_weight(pi, &tx, &ty)?;
                let e = eval_bicolor(&trees::lambda(pi)?, &tx, &ty)?;
                if w != e {
                    witness = Some(json!({"pi": pi.to_raw(), "weight": r(&w), "tree": r(&e)}));
                    break;
                }
                total += w;
            }
            if witness.is_none() {
                let kxy = free_multiplicative_with(
                    &moments_to_cumulants(mx),
                    &moments_to_cumulants(my),
                    n,
                    &cfg.limits,
                )?;
                if kxy != total {
                    witness = Some(json!({"weights": r(&total), "cumulant": r(&kxy)}));
                }
            }
            sink.push(
                "weights",
                "linked-partition t-weights equal bicolor tree values and sum to the product cumulant",
                json!({"n": n, "pair": i}),
                witness,
            );
        }
    }
    Ok(())
}

fn theorem_entry(
    sink: &mut Sink,
    cfg: &VerifyConfig,
    label: Value,
    mx: &MomentSequence,
    my: &MomentSequence,
) -> Result<()> {
    let report = verify_t_multiplicativity_with(mx, my, cfg.order, &cfg.limits)?;
    let witness = (!report.passed).then(|| {
        json!({"t_x": rs(report.t_x.values()), "t_y": rs(report.t_y.values()),
               "via_cumulants": rs(report.via_cumulants.values()),
               "via_convolution": rs(report.via_convolution.values())})
    });
    sink.push(
        "t multiplicativity",
        "the t-series of a product of free elements is the product of their t-series",
        json!({"case": label, "order": cfg.order}),
        witness,
    );
    Ok(())
}

fn suite_theorem(sink: &mut Sink, cfg: &VerifyConfig) -> Result<()> {
    let order = cfg.order;
    cfg.limits.check(Kind::Theorem, order)?;
    let catalan = MomentSequence::new(NC_COUNTS[..order].iter().map(|&c| int(c as i64)).collect());
    let mut k = vec![int(0); order];
    k[0] = int(2);
    if order > 1 {
        k[1] = int(1);
    }
    let shifted = cumulants_to_moments(&CumulantSequence::new(k));
    theorem_entry(
        sink,
        cfg,
        json!("free poisson x shifted semicircle"),
        &catalan,
        &shifted,
    )?;
    let report = verify_t_multiplicativity_with(&catalan, &shifted, order, &cfg.limits)?;
    let expected = [int(2), frac(5, 2), frac(3, 8)];
    let got = &report.via_cumulants.values()[..order.min(3)];
    sink.push(
        "worked product",
        "t(XY) begins 2, 5/2, 3/8 for the free Poisson and shifted semicircle pair, by both routes",
        json!({"order": order}),
        (got != &expected[..got.len()] || report.via_convolution.values()[..got.len()] != *got)
            .then(|| json!({"via_cumulants": rs(got), "via_convolution": rs(&report.via_convolution.values()[..got.len()])})),
    );
    let corpus = moment_corpus(cfg.seed, 2 * cfg.corpus.div_ceil(2).max(1), order);
    for (i, pair) in corpus.chunks(2).enumerate() {
        theorem_entry(sink, cfg, json!(i), &pair[0], &pair[1])?;
    }
    Ok(())
}

fn suite_fixtures(sink: &mut Sink) -> Result<()> {
    let pi = validate_ncl(
        12,
        &[
            vec![1, 4, 6, 9],
            vec![2, 3],
            vec![4, 5],
            vec![6, 7, 8],
            vec![10, 11],
            vec![11, 12],
        ],
    )?;
    let params = json!({"pi": pi.to_raw()});
    let c = pi.connected_components().to_raw().blocks;
    let expected_c = vec![vec![1, 4, 5, 6, 7, 8, 9], vec![2, 3], vec![10, 11, 12]];
    sink.push(
        "connected components",
        "components of the twelve-point example",
        params.clone(),
        (c != expected_c).then(|| json!({"expected": expected_c, "got": c})),
    );
    let ext: Vec<Vec<usize>> = pi
        .exterior_blocks()
        .iter()
        .map(|b| b.elements().to_vec())
        .collect();
    let expected_ext = vec![vec![1, 4, 6, 9], vec![10, 11]];
    sink.push(
        "exterior blocks",
        "exterior blocks of the twelve-point example",
        params.clone(),
        (ext != expected_ext).then(|| json!({"expected": expected_ext, "got": ext})),
    );
    let s: Vec<usize> = pi.non_minimal_elements().into_iter().collect();
    let expected_s = vec![3, 5, 7, 8, 9, 12];
    sink.push(
        "non-minimal elements",
        "elements of the twelve-point example that start no block",
        params,
        (s != expected_s).then(|| json!({"expected": expected_s, "got": s})),
    );

    let m = MomentSequence::from_ints(&[1, 2, 5, 14, 42]);
    let k = moments_to_cumulants(&m);
    sink.push(
        "free poisson cumulants",
        "Catalan moments have all free cumulants equal to 1",
        json!({"moments": rs(m.values())}),
        (k != CumulantSequence::from_ints(&[1, 1, 1, 1, 1]))
            .then(|| json!({"got": rs(k.values())})),
    );
    let t = moments_to_tcoeffs(&m)?;
    let expected_t = [int(1), int(1), int(0), int(0), int(0)];
    sink.push(
        "free poisson t-coefficients",
        "Catalan moments have t-coefficients 1, 1, 0, 0, 0",
        json!({"moments": rs(m.values())}),
        (t.values() != expected_t).then(|| json!({"got": rs(t.values())})),
    );
    let t = moments_to_tcoeffs(&MomentSequence::from_ints(&[2, 5, 14, 42]))?;
    let expected_t = [int(2), frac(1, 2), frac(-1, 8)];
    sink.push(
        "shifted semicircle t-coefficients",
        "cumulants 2, 1, 0, ... give t-coefficients 2, 1/2, -1/8",
        json!({"cumulants": ["2", "1", "0", "0"]}),
        (t.values()[..3] != expected_t).then(|| json!({"got": rs(t.values())})),
    );
    Ok(())
}

/// Runs the given suites. Errors are reserved for bad configurations (limits,
/// orders); identity failures are reported as failing entries.
pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> Result<VerificationReport> {
    if cfg.order == 0 {
        return Err(Error::EmptyGroundSet);
    }
    cfg.limits.check(Kind::Theorem, cfg.order)?;
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    let mut entries = Vec::new();
    for &suite in &suites {
        let mut sink = Sink {
            suite,
            entries: &mut entries,
        };
        match suite {
            Suite::Counts => suite_counts(&mut sink, cfg)?,
            Suite::Kreweras => suite_kreweras(&mut sink, cfg)?,
            Suite::Transforms => suite_transforms(&mut sink, cfg)?,
            Suite::Classes => cumulant_route(
                &mut sink,
                cfg,
                "cumulant via classes",
                "the n-th free cumulant is the sum of t-weights over connected linked partitions",
                cumulant_via_classes_with,
            )?,
            Suite::Trees => cumulant_route(
                &mut sink,
                cfg,
                "cumulant via trees",
                "the n-th free cumulant is the sum of planar tree evaluations on n vertices",
                cumulant_via_trees_with,
            )?,
            Suite::Freeness => suite_freeness(&mut sink, cfg)?,
            Suite::Bridge => suite_bridge(&mut sink, cfg)?,
            Suite::Theorem => suite_theorem(&mut sink, cfg)?,
            Suite::Fixtures => suite_fixtures(&mut sink)?,
        }
    }
    entries.sort_by(|a, b| {
        (a.suite, &a.name, a.parameters.to_string()).cmp(&(
            b.suite,
            &b.name,
            b.parameters.to_string(),
        ))
    });
    let failures = entries.iter().filter(|e| !e.pass).count();
    Ok(VerificationReport {
        suites,
        order: cfg.order,
        seed: cfg.seed,
        corpus: cfg.corpus,
        passed: failures == 0,
        failures,
        entries,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Result<VerificationReport> {
    run(&Suite::ALL, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            order: 4,
            corpus: 3,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn corpus_is_seeded() {
        assert_eq!(moment_corpus(7, 5, 4), moment_corpus(7, 5, 4));
        assert_ne!(moment_corpus(7, 5, 4), moment_corpus(8, 5, 4));
        assert!(moment_corpus(1, 50, 3).iter().all(|m| !m.m(1).is_zero()));
    }

    #[test]
    fn every_suite_passes() {
        let report = run_all(&small()).unwrap();
        let failing: Vec<_> = report.entries.iter().filter(|e| !e.pass).collect();
        assert!(failing.is_empty(), "{failing:#?}");
        for s in Suite::ALL {
            assert!(
                report.entries.iter().any(|e| e.suite == s),
                "{s} has no entries"
            );
        }
    }

    #[test]
    fn fault_is_caught() {
        let cfg = VerifyConfig {
            fault: Some(Fault::Kreweras),
            ..small()
        };
        let report = run(&[Suite::Kreweras], &cfg).unwrap();
        assert!(!report.passed);
        let e = report.entries.iter().find(|e| !e.pass).unwrap();
        assert!(e.witness.as_ref().unwrap().get("gamma").is_some());
    }

    #[test]
    fn deterministic() {
        let a = serde_json::to_string(&run_all(&small()).unwrap()).unwrap();
        let b = serde_json::to_string(&run_all(&small()).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn order_over_cap() {
        let cfg = VerifyConfig {
            order: 7,
            ..small()
        };
        assert!(matches!(run_all(&cfg), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
