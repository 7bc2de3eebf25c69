//! Bounded flatness checking for finite distributive lattices.
//!
//! A finite model `D` is scanned over every pair of parallel term tuples
//! `alpha, beta : m -> n` within the given arity bounds and every point
//! `d` in `D^m` equalizing them. Each such instance must admit a witness:
//! a morphism `gamma : k -> m` with `alpha . gamma = beta . gamma` as
//! normal forms and a point `d'` with `gamma(d') = d`. A missing witness
//! refutes flatness outright; a full sweep only ever certifies "flat up
//! to bounds", since the defining condition quantifies over all arities.
//!
//! Instances are scanned from the top of the lattice downward (elements
//! ordered by descending two-valued weight), so a failure of the
//! disjunction property surfaces as the classical counterexample
//! `alpha = x0 v x1`, `beta = 1` at the first offending pair.

use rayon::prelude::*;

use crate::cube::{self, CubeMorphism};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_free, FiniteLattice, LatticeElement};

/// Arity bounds for the search: tuples `alpha, beta` have up to `n_max`
/// components over up to `m_max` generators, and witnesses are searched up
/// to `k_max` generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub n_max: usize,
    pub m_max: usize,
    pub k_max: usize,
}

impl Bounds {
    pub fn new(n_max: usize, m_max: usize, k_max: usize) -> Self {
        Bounds {
            n_max,
            m_max,
            k_max,
        }
    }
}

/// An equalized pair: `alpha(d) = beta(d)` componentwise in `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessInstance {
    pub alpha: CubeMorphism,
    pub beta: CubeMorphism,
    /// Element ids of `D`, one per generator of the tuples.
    pub point: Vec<usize>,
}

/// A witness: `alpha . gamma = beta . gamma` and `gamma(lift) = point`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessWitness {
    pub gamma: CubeMorphism,
    pub lift: Vec<usize>,
}

impl FlatnessWitness {
    /// Re-check the witness against its instance.
    pub fn validate(&self, lattice: &FiniteLattice, instance: &FlatnessInstance) -> Result<()> {
        let ag = instance.alpha.compose(&self.gamma)?;
        let bg = instance.beta.compose(&self.gamma)?;
        if ag != bg {
            return Err(Error::input(format!(
                "witness fails: {ag} differs from {bg}"
            )));
        }
        let lifted = self.gamma.evaluate(lattice, &self.lift)?;
        if lifted != instance.point {
            return Err(Error::input(format!(
                "witness fails: gamma maps {:?} to {lifted:?}, not {:?}",
                self.lift, instance.point
            )));
        }
        Ok(())
    }
}

/// Outcome of the disjunction-property scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DisjunctionOutcome {
    Pass,
    /// `a v b = 1` with neither side equal to 1.
    Counterexample {
        a: usize,
        b: usize,
    },
}

/// Scan all pairs for `a v b = 1` with `a, b != 1`; this is a necessary
/// condition for flatness and a fast pre-filter.
pub fn check_disjunction_property(lattice: &FiniteLattice) -> DisjunctionOutcome {
    let top = lattice.top_id();
    for a in 0..lattice.len() {
        for b in 0..lattice.len() {
            if lattice.join(a, b) == top && a != top && b != top {
                return DisjunctionOutcome::Counterexample { a, b };
            }
        }
    }
    DisjunctionOutcome::Pass
}

/// Outcome of the bounded flatness sweep. Inhabitedness and transitivity
/// hold for every lattice (any point is inhabited, and two points combine
/// into a longer tuple), so only the freeness clause is searched.
#[derive(Debug, Clone)]
pub enum FlatnessOutcome {
    FlatUpToBounds {
        bounds: Bounds,
        instances_checked: usize,
    },
    Refuted {
        bounds: Bounds,
        counterexample: FlatnessInstance,
    },
}

impl FlatnessOutcome {
    pub fn is_flat_up_to_bounds(&self) -> bool {
        matches!(self, FlatnessOutcome::FlatUpToBounds { .. })
    }
}

/// Elements of the free lattice on `m` generators ordered from the top of
/// the lattice downward: descending two-valued weight, canonical order as
/// the tie-break.
fn elements_top_down(m: usize) -> Result<Vec<LatticeElement>> {
    let mut elems = enumerate_free(m)?;
    elems.sort_by(|a, b| b.weight().cmp(&a.weight()).then_with(|| a.cmp(b)));
    Ok(elems)
}

/// Precomputed tables for one (k, m) witness layer: for each candidate
/// gamma, which element pairs of the free lattice on `m` generators it
/// equalizes, and which points of `D^m` it can hit.
struct GammaLayer {
    gammas: Vec<CubeMorphism>,
    /// per gamma: kernel[a * elems + b] says substitution merges elements a, b
    kernels: Vec<Vec<bool>>,
    /// per gamma, per encoded point of D^m: the least preimage tuple
    images: Vec<Vec<Option<Vec<usize>>>>,
    /// per encoded point: the gammas (canonical order) whose image hits it
    by_point: Vec<Vec<u32>>,
}

fn encode_point(point: &[usize], base: usize) -> usize {
    point.iter().fold(0, |acc, &v| acc * base + v)
}

fn all_points(size: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(size.pow(len as u32));
    let mut cur = vec![0usize; len];
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < size {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Candidate gammas for one layer may be numerous; refuse clearly past the
/// desk-scale budget rather than thrash.
const LAYER_BUDGET: usize = 2_000_000;

fn build_layer(
    lattice: &FiniteLattice,
    elems_m: &[LatticeElement],
    m: usize,
    k: usize,
) -> Result<GammaLayer> {
    let gamma_count = cube::hom_count(k, m)?;
    if gamma_count > LAYER_BUDGET {
        return Err(Error::capacity(format!(
            "witness layer k = {k} has {gamma_count} candidate maps over m = {m}; lower k_max"
        )));
    }
    let gammas = cube::enumerate_hom(k, m)?;
    let point_count = lattice.len().pow(m as u32);
    let lifts = all_points(lattice.len(), k);
    let mut kernels = Vec::with_capacity(gammas.len());
    let mut images = Vec::with_capacity(gammas.len());
    let mut by_point: Vec<Vec<u32>> = vec![Vec::new(); point_count];
    for (g, gamma) in gammas.iter().enumerate() {
        // substituted normal forms per element; only their equalities matter
        let mapped: Vec<LatticeElement> = elems_m
            .iter()
            .map(|e| e.substitute(gamma.components(), k))
            .collect::<Result<_>>()?;
        let n_el = elems_m.len();
        let mut kernel = vec![false; n_el * n_el];
        for a in 0..n_el {
            for b in 0..n_el {
                kernel[a * n_el + b] = mapped[a] == mapped[b];
            }
        }
        kernels.push(kernel);
        let mut image: Vec<Option<Vec<usize>>> = vec![None; point_count];
        for lift in &lifts {
            let hit = gamma.evaluate(lattice, lift)?;
            let code = encode_point(&hit, lattice.len());
            if image[code].is_none() {
                image[code] = Some(lift.clone());
                by_point[code].push(g as u32);
            }
        }
        images.push(image);
    }
    Ok(GammaLayer {
        gammas,
        kernels,
        images,
        by_point,
    })
}

/// Layers built on demand: chains never need the deepest layer, and it can
/// be expensive.
struct LazyLayers<'a> {
    lattice: &'a FiniteLattice,
    elems: Vec<LatticeElement>,
    m: usize,
    cells: Vec<std::sync::OnceLock<std::result::Result<GammaLayer, String>>>,
}

impl<'a> LazyLayers<'a> {
    fn new(lattice: &'a FiniteLattice, elems: Vec<LatticeElement>, m: usize, k_max: usize) -> Self {
        LazyLayers {
            lattice,
            elems,
            m,
            cells: (0..=k_max).map(|_| std::sync::OnceLock::new()).collect(),
        }
    }

    fn get(&self, k: usize) -> Result<&GammaLayer> {
        let cell = &self.cells[k];
        let built = cell.get_or_init(|| {
            build_layer(self.lattice, &self.elems, self.m, k).map_err(|e| e.to_string())
        });
        match built {
            Ok(layer) => Ok(layer),
            Err(msg) => Err(Error::capacity(msg.clone())),
        }
    }
}

/// Search layers for a witness for one instance: increasing k, gammas
/// canonically within a layer, the least lift per hit point.
fn find_witness(
    layers: &LazyLayers<'_>,
    alpha_idx: &[usize],
    beta_idx: &[usize],
    point_code: usize,
) -> Result<Option<FlatnessWitness>> {
    let n_el = layers.elems.len();
    for k in 0..layers.cells.len() {
        let layer = layers.get(k)?;
        for &g in &layer.by_point[point_code] {
            let kernel = &layer.kernels[g as usize];
            let merges = alpha_idx
                .iter()
                .zip(beta_idx)
                .all(|(&a, &b)| kernel[a * n_el + b]);
            if !merges {
                continue;
            }
            let lift = layer.images[g as usize][point_code]
                .clone()
                .expect("indexed by hit point");
            return Ok(Some(FlatnessWitness {
                gamma: layer.gammas[g as usize].clone(),
                lift,
            }));
        }
    }
    Ok(None)
}

/// Exhaustively check the freeness clause within bounds. Reports the first
/// witnessless instance in scan order (top-down over tuple pairs, ascending
/// over points), or success. The scan over pairs is fanned out across
/// threads; the least-indexed counterexample is reported either way.
pub fn check_flatness_bounded(lattice: &FiniteLattice, bounds: Bounds) -> Result<FlatnessOutcome> {
    let size = lattice.len();
    // the image tables index D^m densely; keep that desk-scale
    let point_budget = 1usize << 20;
    if size.pow(bounds.m_max as u32) > point_budget {
        return Err(Error::capacity(format!(
            "|D|^m_max = {}^{} exceeds the point budget; lower m_max",
            size, bounds.m_max
        )));
    }
    if bounds.m_max > 4 || bounds.k_max > 4 {
        return Err(Error::capacity(
            "m_max and k_max are capped at 4 (free-lattice enumeration)".to_string(),
        ));
    }
    let mut instances_checked = 0usize;
    for m in 0..=bounds.m_max {
        let elems_m = enumerate_free(m)?;
        let scan = elements_top_down(m)?;
        let canon_index: Vec<usize> = scan
            .iter()
            .map(|e| elems_m.binary_search(e).expect("same carrier"))
            .collect();
        let layers = LazyLayers::new(lattice, elems_m.clone(), m, bounds.k_max);
        let points = all_points(size, m);
        for n in 1..=bounds.n_max {
            // all ordered component tuples of length n over the top-down order
            let tuples = all_points(scan.len(), n);
            // unordered pairs of distinct tuples, scan order
            let mut pair_list: Vec<(usize, usize)> = Vec::new();
            for a in 0..tuples.len() {
                for b in (a + 1)..tuples.len() {
                    pair_list.push((a, b));
                }
            }
            let eval_tables: Vec<Vec<usize>> = elems_m
                .iter()
                .map(|e| {
                    points
                        .iter()
                        .map(|p| e.evaluate(lattice, p).expect("arity matches"))
                        .collect()
                })
                .collect();
            let hits: Vec<Result<(usize, Option<FlatnessInstance>)>> = pair_list
                .par_iter()
                .map(|&(a, b)| {
                    let alpha_idx: Vec<usize> = tuples[a].iter().map(|&i| canon_index[i]).collect();
                    let beta_idx: Vec<usize> = tuples[b].iter().map(|&i| canon_index[i]).collect();
                    let mut equalized_count = 0usize;
                    for (p_i, point) in points.iter().enumerate() {
                        let equalized = alpha_idx
                            .iter()
                            .zip(&beta_idx)
                            .all(|(&ai, &bi)| eval_tables[ai][p_i] == eval_tables[bi][p_i]);
                        if !equalized {
                            continue;
                        }
                        equalized_count += 1;
                        if find_witness(&layers, &alpha_idx, &beta_idx, p_i)?.is_none() {
                            let alpha = CubeMorphism::new(
                                m,
                                alpha_idx.len(),
                                alpha_idx.iter().map(|&i| elems_m[i].clone()).collect(),
                            )
                            .expect("valid components");
                            let beta = CubeMorphism::new(
                                m,
                                beta_idx.len(),
                                beta_idx.iter().map(|&i| elems_m[i].clone()).collect(),
                            )
                            .expect("valid components");
                            // present the pair with the smaller tuple first
                            let (alpha, beta) = order_pair(alpha, beta);
                            return Ok((
                                equalized_count,
                                Some(FlatnessInstance {
                                    alpha,
                                    beta,
                                    point: point.clone(),
                                }),
                            ));
                        }
                    }
                    Ok((equalized_count, None))
                })
                .collect();
            // deterministic merge: the first pair in scan order wins
            for hit in hits {
                let (count, hit) = hit?;
                instances_checked += count;
                if let Some(counterexample) = hit {
                    return Ok(FlatnessOutcome::Refuted {
                        bounds,
                        counterexample,
                    });
                }
            }
        }
    }
    Ok(FlatnessOutcome::FlatUpToBounds {
        bounds,
        instances_checked,
    })
}

/// Counterexamples read better with the lattice-smaller tuple first.
fn order_pair(alpha: CubeMorphism, beta: CubeMorphism) -> (CubeMorphism, CubeMorphism) {
    let weight = |m: &CubeMorphism| -> u32 { m.components().iter().map(|e| e.weight()).sum() };
    if (weight(&alpha), alpha.clone()) <= (weight(&beta), beta.clone()) {
        (alpha, beta)
    } else {
        (beta, alpha)
    }
}

/// The constructive witness for a chain: sort the point, remove duplicates
/// and extremal values, re-expand with a projection-or-constant tuple, and
/// precompose with the cumulative-join map so that equalized tuples stay
/// equal as normal forms.
pub fn linear_order_witness(
    lattice: &FiniteLattice,
    instance: &FlatnessInstance,
) -> Result<FlatnessWitness> {
    let m = instance.alpha.src();
    if instance.point.len() != m {
        return Err(Error::input(
            "point length does not match tuple arity".to_string(),
        ));
    }
    let av = instance.alpha.evaluate(lattice, &instance.point)?;
    let bv = instance.beta.evaluate(lattice, &instance.point)?;
    if av != bv {
        return Err(Error::input(
            "instance hypothesis fails: tuples differ at the point".to_string(),
        ));
    }
    let witness = chain_witness_for_point(lattice, &instance.point)?;
    witness.validate(lattice, instance)?;
    Ok(witness)
}

/// The chain construction depends on the point alone: the same witness
/// works for every tuple pair equalized there.
pub fn chain_witness_for_point(
    lattice: &FiniteLattice,
    point: &[usize],
) -> Result<FlatnessWitness> {
    if !lattice.is_chain() {
        return Err(Error::input(
            "the constructive witness applies to chains only".to_string(),
        ));
    }
    let m = point.len();
    // d' = sorted distinct values of the point
    let mut lift: Vec<usize> = point.to_vec();
    lift.sort_by(|&a, &b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if lattice.leq(a, b) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    lift.dedup();
    let k = lift.len();
    // gamma1 : k -> m re-expands the lift to the point; extremal values go
    // to the constants so that constant components of alpha and beta are
    // matched exactly
    let gamma1_comps: Vec<LatticeElement> = point
        .iter()
        .map(|&v| {
            if v == lattice.bot_id() {
                Ok(LatticeElement::bot(k))
            } else if v == lattice.top_id() {
                Ok(LatticeElement::top(k))
            } else {
                let pos = lift.iter().position(|&u| u == v).expect("value in lift");
                LatticeElement::generator(k, pos)
            }
        })
        .collect::<Result<_>>()?;
    let gamma1 = CubeMorphism::new(k, m, gamma1_comps)?;
    // gamma2 : k -> k takes cumulative joins; on the sorted lift it is the
    // identity, and it forces every substituted term into a chain
    let gamma2_comps: Vec<LatticeElement> = (0..k)
        .map(|i| {
            let mut acc = LatticeElement::bot(k);
            for j in 0..=i {
                acc = acc.join(&LatticeElement::generator(k, j)?);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let gamma2 = CubeMorphism::new(k, k, gamma2_comps)?;
    let gamma = gamma1.compose(&gamma2)?;
    Ok(FlatnessWitness { gamma, lift })
}

/// A reusable witness search over one model and one generator arity; the
/// tables shared by `check_flatness_bounded` are built once and queried
/// per instance. Useful for cross-checking individual instances against
/// the chain construction.
pub struct WitnessSearcher<'a> {
    m: usize,
    layers: LazyLayers<'a>,
}

impl<'a> WitnessSearcher<'a> {
    pub fn new(lattice: &'a FiniteLattice, m: usize, k_max: usize) -> Result<Self> {
        Ok(WitnessSearcher {
            m,
            layers: LazyLayers::new(lattice, enumerate_free(m)?, m, k_max),
        })
    }

    /// First witness in the canonical search order, if any.
    pub fn search(&self, instance: &FlatnessInstance) -> Result<Option<FlatnessWitness>> {
        if instance.alpha.src() != self.m || instance.beta.src() != self.m {
            return Err(Error::input(format!(
                "searcher is built for {}-generator tuples",
                self.m
            )));
        }
        let to_idx = |mor: &CubeMorphism| -> Result<Vec<usize>> {
            mor.components()
                .iter()
                .map(|c| {
                    self.layers
                        .elems
                        .binary_search(c)
                        .map_err(|_| Error::input("component is not in canonical form".to_string()))
                })
                .collect()
        };
        let alpha_idx = to_idx(&instance.alpha)?;
        let beta_idx = to_idx(&instance.beta)?;
        let code = encode_point(&instance.point, self.layers.lattice.len());
        find_witness(&self.layers, &alpha_idx, &beta_idx, code)
    }
}

/// Every instance within bounds, for cross-checking the generic search
/// against the chain construction.
pub fn enumerate_instances(
    lattice: &FiniteLattice,
    bounds: Bounds,
) -> Result<Vec<FlatnessInstance>> {
    let size = lattice.len();
    let mut out = Vec::new();
    for m in 0..=bounds.m_max {
        let scan = elements_top_down(m)?;
        let points = all_points(size, m);
        for n in 1..=bounds.n_max {
            let tuples = all_points(scan.len(), n);
            for a in 0..tuples.len() {
                for b in (a + 1)..tuples.len() {
                    let alpha = CubeMorphism::new(
                        m,
                        n,
                        tuples[a].iter().map(|&i| scan[i].clone()).collect(),
                    )?;
                    let beta = CubeMorphism::new(
                        m,
                        n,
                        tuples[b].iter().map(|&i| scan[i].clone()).collect(),
                    )?;
                    for point in &points {
                        if alpha.evaluate(lattice, point)? == beta.evaluate(lattice, point)? {
                            out.push(FlatnessInstance {
                                alpha: alpha.clone(),
                                beta: beta.clone(),
                                point: point.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
