//! Seeded random descriptors for property tests and verification sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::edge::Edge;
use crate::triangulation::{BaseFamily, TriangulationDesc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Leapfrog,
    Fountain,
    Split,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [FamilyKind::Leapfrog, FamilyKind::Fountain, FamilyKind::Split];
}

#[derive(Clone, Debug)]
pub struct SampleConfig {
    pub families: Vec<FamilyKind>,
    /// Upper bound on the number of random flips applied to the base.
    pub max_flips: usize,
    /// Special vertices are drawn from here and flips stay inside it.
    pub region: (i64, i64),
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { families: FamilyKind::ALL.to_vec(), max_flips: 6, region: (-4, 4) }
    }
}

pub fn random_base<R: Rng + ?Sized>(rng: &mut R, kind: FamilyKind, region: (i64, i64)) -> BaseFamily {
    let (a, b) = region;
    let mid_lo = a + (b - a) / 4;
    let mid_hi = b - (b - a) / 4;
    match kind {
        FamilyKind::Leapfrog => BaseFamily::Leapfrog { center: rng.gen_range(mid_lo..=mid_hi) },
        FamilyKind::Fountain => BaseFamily::Fountain { vertex: rng.gen_range(mid_lo..=mid_hi) },
        FamilyKind::Split => {
            let l = rng.gen_range(mid_lo..mid_hi);
            let r = rng.gen_range(l + 1..=mid_hi.max(l + 1));
            BaseFamily::Split { l, r }
        }
    }
}

/// Mutable arcs of `t` with both endpoints in `region`.
pub fn mutable_arcs(t: &TriangulationDesc, region: (i64, i64)) -> Vec<Edge> {
    t.arcs_in_window(region.0, region.1)
        .map(|arcs| arcs.into_iter().filter(|e| !t.is_frozen(*e)).collect())
        .unwrap_or_default()
}

/// Applies `count` flips of uniformly chosen mutable arcs inside `region`.
pub fn random_flips<R: Rng + ?Sized>(
    rng: &mut R,
    t: &TriangulationDesc,
    count: usize,
    region: (i64, i64),
) -> TriangulationDesc {
    let mut t = t.clone();
    for _ in 0..count {
        let Some(&e) = mutable_arcs(&t, region).choose(rng) else { break };
        t = t.flip(e).expect("mutable realized arc is flippable").0;
    }
    t
}

/// A base from `cfg.families` perturbed by up to `cfg.max_flips` random flips.
pub fn random_descriptor<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig) -> TriangulationDesc {
    let kind = *cfg.families.choose(rng).expect("at least one family");
    let base = random_base(rng, kind, cfg.region);
    let t = TriangulationDesc::from_base(base).expect("sampled base is valid");
    let flips = rng.gen_range(0..=cfg.max_flips);
    random_flips(rng, &t, flips, cfg.region)
}

/// A random descriptor together with one of its mutable arcs in the region.
pub fn random_case<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig) -> (TriangulationDesc, Edge) {
    loop {
        let t = random_descriptor(rng, cfg);
        if let Some(&e) = mutable_arcs(&t, cfg.region).choose(rng) {
            return (t, e);
        }
    }
}
