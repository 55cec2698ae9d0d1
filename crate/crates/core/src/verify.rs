//! Verification suites with machine-readable reports.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::edge::{crosses, Edge};
use crate::error::{Error, Result};
use crate::plucker::{verify_short_plucker, ClusterState, PluckerLabel};
use crate::quantum::{compatibility_check, l_entry, quantum_mutate, verify_quantum_plucker, verify_quasi_commute};
use crate::quiver::{build_exchange_quiver, flip_commutes_with_mutation};
use crate::sample::{random_case, random_descriptor, SampleConfig};
use crate::triangulation::{BaseFamily, TriangulationDesc};

const LEAPFROG_GOLDEN: &str = include_str!("../tests/golden/leapfrog.txt");
const THINNED_FOUNTAIN_GOLDEN: &str = include_str!("../tests/golden/thinned_fountain.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Figures,
    Compat,
    Quantum,
    Flips,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "figures" => Suite::Figures,
            "compat" => Suite::Compat,
            "quantum" => Suite::Quantum,
            "flips" => Suite::Flips,
            "all" => Suite::All,
            _ => return Err(Error::InvalidDescriptor(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub window: (i64, i64),
    /// Index range `[-range, range]` for exhaustive sweeps.
    pub range: i64,
    /// Random cases per randomized check.
    pub cases: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { window: (-5, 5), range: 4, cases: 50, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub millis: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// Parses golden arrow files: `#` comments, then one `(u,v)->(x,y)` per line.
pub fn parse_arrows(text: &str) -> Result<BTreeSet<(Edge, Edge)>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (u, v) = l.split_once("->").ok_or_else(|| Error::InvalidDescriptor(l.to_string()))?;
            Ok((u.trim().parse()?, v.trim().parse()?))
        })
        .collect()
}

/// Golden arrows of the leapfrog quiver on `[-6,7]`.
pub fn leapfrog_golden_arrows() -> BTreeSet<(Edge, Edge)> {
    parse_arrows(LEAPFROG_GOLDEN).expect("golden file parses")
}

/// Golden arrows of the thinned fountain quiver on `[-6,7]`.
pub fn thinned_fountain_golden_arrows() -> BTreeSet<(Edge, Edge)> {
    parse_arrows(THINNED_FOUNTAIN_GOLDEN).expect("golden file parses")
}

/// The fountain at 0
/// with both fans thinned out near 0.
pub fn thinned_fountain() -> TriangulationDesc {
    let e = |l, r| Edge::new(l, r).expect("arc");
    TriangulationDesc::new(
        BaseFamily::Fountain { vertex: 0 },
        [e(-4, 0), e(-3, 0), e(0, 2), e(0, 4), e(0, 6)].into(),
        [e(-4, -2), e(-5, -2), e(1, 3), e(3, 5), e(5, 7)].into(),
    )
    .expect("thinned fountain is valid")
}

/// Arrow set of a window quiver; multiplicities other than 1 are reported as
/// repeated failures by the caller.
pub fn arrow_set(t: &TriangulationDesc, a: i64, b: i64) -> Result<BTreeSet<(Edge, Edge)>> {
    Ok(build_exchange_quiver(t, a, b)?.arrows().into_iter().filter(|x| x.2 == 1).map(|(u, v, _)| (u, v)).collect())
}

/// All `i<k<j<l` in `[lo, hi]`.
pub fn ordered_quadruples(lo: i64, hi: i64) -> impl Iterator<Item = [i64; 4]> {
    (lo..=hi).flat_map(move |i| {
        (i + 1..=hi).flat_map(move |k| (k + 1..=hi).flat_map(move |j| (j + 1..=hi).map(move |l| [i, k, j, l])))
    })
}

/// All labels `i<j` in `[lo, hi]`.
pub fn labels_in(lo: i64, hi: i64) -> Vec<PluckerLabel> {
    (lo..=hi).flat_map(|i| (i + 1..=hi).map(move |j| PluckerLabel::new(i, j).expect("ordered"))).collect()
}

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<(usize, Option<String>)>) {
        let start = Instant::now();
        let (passed, cases, detail) = match f() {
            Ok((cases, None)) => (true, cases, None),
            Ok((cases, Some(d))) => (false, cases, Some(d)),
            Err(err) => (false, 0, Some(err.to_string())),
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            cases,
            millis: start.elapsed().as_millis(),
            detail,
        });
    }
}

fn figures(r: &mut Runner) {
    r.check("leapfrog quiver golden arrows", || {
        let got = arrow_set(&TriangulationDesc::leapfrog(0), -6, 7)?;
        Ok((1, (got != leapfrog_golden_arrows()).then(|| "leapfrog arrows differ from the golden set".into())))
    });
    r.check("thinned fountain quiver golden arrows", || {
        let t = thinned_fountain();
        let got = arrow_set(&t, -6, 7)?;
        let comps = build_exchange_quiver(&t, -6, 7)?.connected_components().len();
        let detail = if got != thinned_fountain_golden_arrows() {
            Some("fountain arrows differ from the golden set".into())
        } else if comps != 2 {
            Some(format!("{comps} components"))
        } else {
            None
        };
        Ok((1, detail))
    });
}

fn compat(r: &mut Runner, o: &VerifyOptions) {
    r.check("compatibility on base families", || {
        let (a, b) = o.window;
        for t in [TriangulationDesc::fountain(0), TriangulationDesc::leapfrog(0), TriangulationDesc::split(-1, 2)] {
            if !compatibility_check(&t, (a, b))? {
                return Ok((3, Some(format!("{:?}", t.base()))));
            }
        }
        Ok((3, None))
    });
    r.check("compatibility on random descriptors", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
        for n in 0..o.cases {
            let t = random_descriptor(&mut rng, &SampleConfig::default());
            if !compatibility_check(&t, o.window)? {
                return Ok((n + 1, Some(serde_json::to_string(&t).unwrap_or_default())));
            }
        }
        Ok((o.cases, None))
    });
}

fn quantum(r: &mut Runner, o: &VerifyOptions) {
    let (lo, hi) = (-o.range, o.range);
    r.check("short plucker relations", || {
        let mut n = 0;
        for [i, k, j, l] in ordered_quadruples(lo, hi) {
            n += 1;
            if !verify_short_plucker(i, k, j, l)? {
                return Ok((n, Some(format!("{i},{k},{j},{l}"))));
            }
        }
        Ok((n, None))
    });
    r.check("quantum plucker relations", || {
        let mut n = 0;
        for [i, k, j, l] in ordered_quadruples(lo, hi) {
            n += 1;
            if !verify_quantum_plucker(i, k, j, l)? {
                return Ok((n, Some(format!("{i},{k},{j},{l}"))));
            }
        }
        Ok((n, None))
    });
    r.check("quasi-commutation table", || {
        let labels = labels_in(lo, hi);
        let mut n = 0;
        for &x in &labels {
            for &y in &labels {
                n += 1;
                let ok = if crosses(x.edge()?, y.edge()?) {
                    matches!(l_entry(x, y), Err(Error::NotQuasiCommuting(..)))
                        && matches!(verify_quasi_commute(x, y), Err(Error::NotQuasiCommuting(..)))
                } else {
                    l_entry(x, y)? == verify_quasi_commute(x, y)?
                };
                if !ok {
                    return Ok((n, Some(format!("{x} {y}"))));
                }
            }
        }
        Ok((n, None))
    });
    r.check("quantum mutation certificates", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
        for n in 0..o.cases {
            let (t, e) = random_case(&mut rng, &SampleConfig::default());
            let m = quantum_mutate(&t, e)?;
            if m.new_label != t.flip(e)?.1.into() || !m.certificate.verifies() {
                return Ok((n + 1, Some(format!("{e}"))));
            }
        }
        Ok((o.cases, None))
    });
}

fn flips(r: &mut Runner, o: &VerifyOptions) {
    let (a, b) = (-12, 12);
    r.check("flip involution and validity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
        for n in 0..o.cases {
            let (t, e) = random_case(&mut rng, &SampleConfig::default());
            let (u, f) = t.flip(e)?;
            let (back, g) = u.flip(f)?;
            if g != e || back.arcs_in_window(a, b)? != t.arcs_in_window(a, b)? || !u.validate_window(a, b)? {
                return Ok((n + 1, Some(format!("{e}"))));
            }
        }
        Ok((o.cases, None))
    });
    r.check("exchange relations", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
        for n in 0..o.cases {
            let (t, e) = random_case(&mut rng, &SampleConfig::default());
            let (_, rel) = ClusterState::new(t).exchange_flip(e)?;
            if !rel.holds() {
                return Ok((n + 1, Some(rel.to_string())));
            }
        }
        Ok((o.cases, None))
    });
    r.check("flip and mutation commute", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
        let mut n = 0;
        for _ in 0..o.cases {
            let (t, e) = random_case(&mut rng, &SampleConfig::default());
            match flip_commutes_with_mutation(&t, e, a, b)? {
                Some(true) => n += 1,
                Some(false) => return Ok((n + 1, Some(format!("{e}")))),
                None => {}
            }
        }
        Ok((n, None))
    });
}

pub fn run_suite(suite: Suite, o: &VerifyOptions) -> Report {
    let mut r = Runner { checks: Vec::new() };
    match suite {
        Suite::Figures => figures(&mut r),
        Suite::Compat => compat(&mut r, o),
        Suite::Quantum => quantum(&mut r, o),
        Suite::Flips => flips(&mut r, o),
        Suite::All => {
            figures(&mut r);
            compat(&mut r, o);
            quantum(&mut r, o);
            flips(&mut r, o);
        }
    }
    let passed = r.checks.iter().all(|c| c.passed);
    Report { suite, passed, checks: r.checks }
}
