use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{
    bell_state, spin_projectors, BellKind, BellLabel, Direction, StateVector, MAX_QUBITS,
};
use crate::rng::Seed;
use crate::spacetime::SpacetimeLabel;

fn default_label() -> BellKind {
    BellKind::PsiMinus
}

/// One step of a swapping experiment. Particles are named by arbitrary
/// integer ids; a particle must be prepared before it can be measured.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum TimelineAction {
    PreparePair {
        a: usize,
        b: usize,
        #[serde(default = "default_label")]
        label: BellKind,
    },
    BellMeasure {
        a: usize,
        b: usize,
    },
    LocalMeasure {
        particle: usize,
        direction: Direction,
    },
    Postselect {
        label: BellKind,
    },
}

/// An action tagged with the spacetime label where/when it happens.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimelineEvent {
    pub at: SpacetimeLabel,
    pub action: TimelineAction,
}

/// An ordered event list with nondecreasing times.
///
/// The causal order recorded here affects only the event log, never the
/// quantum statistics: measurements on disjoint particles commute, so any
/// sequence order samples the same joint distribution. That order
/// independence is exactly what the delayed-choice runs demonstrate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<TimelineEvent>", into = "Vec<TimelineEvent>")]
pub struct Timeline {
    events: Vec<TimelineEvent>,
}

impl TryFrom<Vec<TimelineEvent>> for Timeline {
    type Error = Error;
    fn try_from(events: Vec<TimelineEvent>) -> Result<Self> {
        Timeline::new(events)
    }
}

impl From<Timeline> for Vec<TimelineEvent> {
    fn from(timeline: Timeline) -> Self {
        timeline.events
    }
}

impl Timeline {
    pub fn new(events: Vec<TimelineEvent>) -> Result<Self> {
        let mut prepared: BTreeMap<usize, ()> = BTreeMap::new();
        let mut last_time = f64::NEG_INFINITY;
        let mut qubits = 0usize;
        let mut seen_bell_measure = false;
        for (index, event) in events.iter().enumerate() {
            let t = event.at.time();
            if t < last_time {
                return Err(Error::MalformedTimeline {
                    index,
                    reason: format!("time {t} decreases below {last_time}"),
                });
            }
            last_time = t;
            match &event.action {
                TimelineAction::PreparePair { a, b, .. } => {
                    if a == b {
                        return Err(Error::MalformedTimeline {
                            index,
                            reason: format!("pair ({a},{b}) must name two particles"),
                        });
                    }
                    for p in [a, b] {
                        if prepared.insert(*p, ()).is_some() {
                            return Err(Error::MalformedTimeline {
                                index,
                                reason: format!("particle {p} prepared twice"),
                            });
                        }
                    }
                    qubits += 2;
                    if qubits > MAX_QUBITS {
                        return Err(Error::CapacityExceeded {
                            requested: qubits,
                            limit: MAX_QUBITS,
                        });
                    }
                }
                TimelineAction::BellMeasure { a, b } => {
                    if a == b {
                        return Err(Error::MalformedTimeline {
                            index,
                            reason: format!("pair ({a},{b}) must name two particles"),
                        });
                    }
                    for p in [a, b] {
                        if !prepared.contains_key(p) {
                            return Err(Error::UnpreparedParticle { particle: *p });
                        }
                    }
                    seen_bell_measure = true;
                }
                TimelineAction::LocalMeasure { particle, .. } => {
                    if !prepared.contains_key(particle) {
                        return Err(Error::UnpreparedParticle {
                            particle: *particle,
                        });
                    }
                }
                TimelineAction::Postselect { .. } => {
                    if !seen_bell_measure {
                        return Err(Error::MalformedTimeline {
                            index,
                            reason: "postselect without a preceding bell_measure".into(),
                        });
                    }
                }
            }
        }
        Ok(Timeline { events })
    }

    pub fn events(&self) -> &[TimelineEvent] {
        &self.events
    }
}

/// Mean of a ±1 product with its binomial standard error.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CorrelationEstimate {
    pub samples: u64,
    pub mean: f64,
    pub standard_error: f64,
}

impl CorrelationEstimate {
    fn from_counts(agree: u64, disagree: u64) -> Self {
        let samples = agree + disagree;
        if samples == 0 {
            return CorrelationEstimate {
                samples: 0,
                mean: 0.0,
                standard_error: 0.0,
            };
        }
        let n = samples as f64;
        let mean = (agree as f64 - disagree as f64) / n;
        let standard_error = ((1.0 - mean * mean).max(0.0) / n).sqrt();
        CorrelationEstimate {
            samples,
            mean,
            standard_error,
        }
    }
}

/// Outcome-product statistics for one pair of locally measured particles.
#[derive(Debug, Clone, Serialize)]
pub struct PairCorrelation {
    pub particles: (usize, usize),
    /// Over postselected runs only.
    pub conditional: CorrelationEstimate,
    /// Over all runs; with postselection in play this shows the rescrambled
    /// (uncorrelated) ensemble.
    pub unconditional: CorrelationEstimate,
    /// Conditioned on each inner Bell outcome, in [`BellKind::ALL`] order.
    pub by_inner_outcome: [CorrelationEstimate; 4],
}

#[derive(Debug, Clone, Serialize)]
pub struct TimelineStats {
    pub runs: u64,
    pub kept_runs: u64,
    /// Counts of the four outcomes of the postselection-bound Bell
    /// measurement (the first one, if no postselect event exists).
    pub inner_counts: [u64; 4],
    pub correlations: Vec<PairCorrelation>,
}

/// One logged event of one run.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub run_id: u64,
    pub event_index: usize,
    pub at: SpacetimeLabel,
    pub action: String,
    pub outcome: String,
}

#[derive(Debug, Clone)]
pub struct TimelineOutcome {
    pub stats: TimelineStats,
    /// Per-run records for the first `log_runs` runs.
    pub log: Vec<RunRecord>,
}

struct Plan {
    /// particle id → qubit slot, in preparation order.
    slots: BTreeMap<usize, usize>,
    /// Event index of the Bell measurement whose outcome postselection
    /// filters on (first postselect's binding, else the first measurement).
    tracked_measure: Option<usize>,
    /// Particle ids of local measurements, in event order.
    local_particles: Vec<usize>,
}

fn plan(timeline: &Timeline) -> Plan {
    let mut slots = BTreeMap::new();
    let mut next = 0usize;
    let mut first_bell = None;
    let mut bound_bell = None;
    let mut last_bell = None;
    let mut local_particles = Vec::new();
    for (index, event) in timeline.events.iter().enumerate() {
        match &event.action {
            TimelineAction::PreparePair { a, b, .. } => {
                slots.insert(*a, next);
                slots.insert(*b, next + 1);
                next += 2;
            }
            TimelineAction::BellMeasure { .. } => {
                first_bell.get_or_insert(index);
                last_bell = Some(index);
            }
            TimelineAction::LocalMeasure { particle, .. } => {
                local_particles.push(*particle);
            }
            TimelineAction::Postselect { .. } => {
                if bound_bell.is_none() {
                    bound_bell = last_bell;
                }
            }
        }
    }
    Plan {
        slots,
        tracked_measure: bound_bell.or(first_bell),
        local_particles,
    }
}

/// Move `front` slots to the head of the register, keeping the rest in
/// relative order. Returns (permutation, inverse).
fn front_permutation(n: usize, front: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut permutation = vec![usize::MAX; n];
    for (target, &slot) in front.iter().enumerate() {
        permutation[slot] = target;
    }
    let mut next = front.len();
    for slot in 0..n {
        if permutation[slot] == usize::MAX {
            permutation[slot] = next;
            next += 1;
        }
    }
    let mut inverse = vec![0usize; n];
    for (slot, &pos) in permutation.iter().enumerate() {
        inverse[pos] = slot;
    }
    (permutation, inverse)
}

struct RunResult {
    kept: bool,
    tracked_outcome: Option<usize>,
    local_outcomes: Vec<i8>,
    records: Option<Vec<(usize, String)>>,
}

fn action_text(action: &TimelineAction) -> String {
    match action {
        TimelineAction::PreparePair { a, b, label } => {
            format!("prepare_pair({a};{b};{})", label.symbol())
        }
        TimelineAction::BellMeasure { a, b } => format!("bell_measure({a};{b})"),
        TimelineAction::LocalMeasure {
            particle,
            direction,
        } => {
            let [x, y, z] = direction.components();
            format!("local_measure({particle};{x:.6};{y:.6};{z:.6})")
        }
        TimelineAction::Postselect { label } => format!("postselect({})", label.symbol()),
    }
}

fn run_once(timeline: &Timeline, plan: &Plan, seed: Seed, record: bool) -> Result<RunResult> {
    let mut rng = seed.rng();
    let mut state: Option<StateVector> = None;
    let mut kept = true;
    let mut tracked_outcome = None;
    let mut last_bell_outcome: Option<usize> = None;
    let mut local_outcomes = Vec::with_capacity(plan.local_particles.len());
    let mut records = record.then(Vec::new);

    let bell_states: Vec<StateVector> = BellKind::ALL
        .iter()
        .map(|&kind| bell_state(BellLabel::standard(kind)))
        .collect();

    for (index, event) in timeline.events.iter().enumerate() {
        let mut outcome_text = String::new();
        match &event.action {
            TimelineAction::PreparePair { label, .. } => {
                let pair = bell_state(BellLabel::standard(*label));
                state = Some(match state.take() {
                    None => pair,
                    Some(existing) => crate::hilbert::tensor(&existing, &pair)?,
                });
            }
            TimelineAction::BellMeasure { a, b } => {
                let current = state.take().expect("validated: particles prepared");
                let n = current.num_qubits();
                let (perm, inverse) =
                    front_permutation(n, &[plan.slots[a], plan.slots[b]]);
                let fronted = current.permute_subsystems(&perm)?;
                let rest = fronted.dim() / 4;

                let mut residuals: Vec<Vec<Complex64>> = Vec::with_capacity(4);
                let mut probabilities = [0.0f64; 4];
                for (k, bell) in bell_states.iter().enumerate() {
                    let mut reduced = vec![Complex64::new(0.0, 0.0); rest];
                    for (pair_bits, coeff) in bell.amplitudes().iter().enumerate() {
                        if coeff.norm_sqr() == 0.0 {
                            continue;
                        }
                        let conj = coeff.conj();
                        for (r, slot) in reduced.iter_mut().enumerate() {
                            *slot += conj * fronted.amplitude(pair_bits * rest + r);
                        }
                    }
                    probabilities[k] = reduced.iter().map(|c| c.norm_sqr()).sum();
                    residuals.push(reduced);
                }
                let outcome = sample_index(&probabilities, &mut rng);
                let p = probabilities[outcome];
                let scale = Complex64::new(1.0 / p.sqrt(), 0.0);
                let mut amps = vec![Complex64::new(0.0, 0.0); fronted.dim()];
                for (pair_bits, coeff) in bell_states[outcome].amplitudes().iter().enumerate() {
                    for (r, resid) in residuals[outcome].iter().enumerate() {
                        amps[pair_bits * rest + r] = coeff * resid * scale;
                    }
                }
                let collapsed = StateVector::from_amplitudes(amps)?;
                state = Some(collapsed.permute_subsystems(&inverse)?);
                last_bell_outcome = Some(outcome);
                if plan.tracked_measure == Some(index) {
                    tracked_outcome = Some(outcome);
                }
                outcome_text = BellKind::ALL[outcome].symbol().to_string();
            }
            TimelineAction::LocalMeasure {
                particle,
                direction,
            } => {
                let current = state.take().expect("validated: particle prepared");
                let n = current.num_qubits();
                let (perm, inverse) = front_permutation(n, &[plan.slots[particle]]);
                let fronted = current.permute_subsystems(&perm)?;
                let rest = fronted.dim() / 2;
                let projectors = spin_projectors(*direction);

                let mut branches: Vec<Vec<Complex64>> = Vec::with_capacity(2);
                let mut probabilities = [0.0f64; 2];
                for (k, projector) in projectors.iter().enumerate() {
                    let mut amps = vec![Complex64::new(0.0, 0.0); fronted.dim()];
                    for row in 0..2 {
                        for col in 0..2 {
                            let p = projector.entry(row, col);
                            if p.norm_sqr() == 0.0 {
                                continue;
                            }
                            for r in 0..rest {
                                amps[row * rest + r] += p * fronted.amplitude(col * rest + r);
                            }
                        }
                    }
                    probabilities[k] = amps.iter().map(|c| c.norm_sqr()).sum();
                    branches.push(amps);
                }
                let outcome = sample_index(&probabilities, &mut rng);
                let scale = Complex64::new(1.0 / probabilities[outcome].sqrt(), 0.0);
                let amps: Vec<Complex64> =
                    branches[outcome].iter().map(|c| c * scale).collect();
                let collapsed = StateVector::from_amplitudes(amps)?;
                state = Some(collapsed.permute_subsystems(&inverse)?);
                let value: i8 = if outcome == 0 { 1 } else { -1 };
                local_outcomes.push(value);
                outcome_text = format!("{value:+}");
            }
            TimelineAction::Postselect { label } => {
                let matched = last_bell_outcome == Some(label.index());
                kept &= matched;
                outcome_text = if matched { "keep" } else { "drop" }.to_string();
            }
        }
        if let Some(records) = records.as_mut() {
            records.push((index, outcome_text));
        }
    }

    Ok(RunResult {
        kept,
        tracked_outcome,
        local_outcomes,
        records,
    })
}

fn sample_index(probabilities: &[f64], rng: &mut impl Rng) -> usize {
    let total: f64 = probabilities.iter().sum();
    let mut draw = rng.gen::<f64>() * total;
    for (k, &p) in probabilities.iter().enumerate() {
        if draw < p {
            return k;
        }
        draw -= p;
    }
    probabilities.len() - 1
}

#[derive(Default, Clone)]
struct PairCounts {
    // [inner outcome 0..4, 4 = untracked][agree, disagree]
    by_inner: [[u64; 2]; 5],
    kept: [u64; 2],
}

#[derive(Default, Clone)]
struct Accumulator {
    runs: u64,
    kept_runs: u64,
    inner_counts: [u64; 4],
    pairs: Vec<PairCounts>,
}

impl Accumulator {
    fn new(num_pairs: usize) -> Self {
        Accumulator {
            pairs: vec![PairCounts::default(); num_pairs],
            ..Default::default()
        }
    }

    fn absorb_run(&mut self, result: &RunResult, pair_indices: &[(usize, usize)]) {
        self.runs += 1;
        if result.kept {
            self.kept_runs += 1;
        }
        if let Some(outcome) = result.tracked_outcome {
            self.inner_counts[outcome] += 1;
        }
        for (slot, &(i, j)) in pair_indices.iter().enumerate() {
            let product = result.local_outcomes[i] * result.local_outcomes[j];
            let bucket = usize::from(product < 0);
            let inner = result.tracked_outcome.unwrap_or(4);
            self.pairs[slot].by_inner[inner][bucket] += 1;
            if result.kept {
                self.pairs[slot].kept[bucket] += 1;
            }
        }
    }

    fn merge(&mut self, other: &Accumulator) {
        self.runs += other.runs;
        self.kept_runs += other.kept_runs;
        for (a, b) in self.inner_counts.iter_mut().zip(&other.inner_counts) {
            *a += b;
        }
        for (a, b) in self.pairs.iter_mut().zip(&other.pairs) {
            for (x, y) in a.by_inner.iter_mut().zip(&b.by_inner) {
                x[0] += y[0];
                x[1] += y[1];
            }
            a.kept[0] += b.kept[0];
            a.kept[1] += b.kept[1];
        }
    }
}

/// Execute a timeline `runs` times with independent child seeds and gather
/// outcome statistics. Event records are kept for the first `log_runs` runs.
pub fn run_timeline(
    timeline: &Timeline,
    runs: u64,
    seed: Seed,
    log_runs: u64,
) -> Result<TimelineOutcome> {
    let plan = plan(timeline);

    // Unordered particle pairs among the locally measured ones, in event
    // order of the measurements.
    let mut pair_indices: Vec<(usize, usize)> = Vec::new();
    let mut pair_particles: Vec<(usize, usize)> = Vec::new();
    for i in 0..plan.local_particles.len() {
        for j in (i + 1)..plan.local_particles.len() {
            pair_indices.push((i, j));
            pair_particles.push((plan.local_particles[i], plan.local_particles[j]));
        }
    }

    const SHARD: u64 = 4096;
    let shard_count = runs.div_ceil(SHARD);
    let shards: Vec<Result<(Accumulator, Vec<RunRecord>)>> = (0..shard_count)
        .into_par_iter()
        .map(|shard| {
            let mut acc = Accumulator::new(pair_indices.len());
            let mut log = Vec::new();
            let lo = shard * SHARD;
            let hi = ((shard + 1) * SHARD).min(runs);
            for run_id in lo..hi {
                let record = run_id < log_runs;
                let result = run_once(timeline, &plan, seed.child(run_id), record)?;
                acc.absorb_run(&result, &pair_indices);
                if let Some(records) = &result.records {
                    for (event_index, outcome) in records {
                        let event = &timeline.events[*event_index];
                        log.push(RunRecord {
                            run_id,
                            event_index: *event_index,
                            at: event.at,
                            action: action_text(&event.action),
                            outcome: outcome.clone(),
                        });
                    }
                }
            }
            Ok((acc, log))
        })
        .collect();

    let mut total = Accumulator::new(pair_indices.len());
    let mut log = Vec::new();
    for shard in shards {
        let (acc, records) = shard?;
        total.merge(&acc);
        log.extend(records);
    }

    let has_postselect = timeline
        .events
        .iter()
        .any(|e| matches!(e.action, TimelineAction::Postselect { .. }));
    if has_postselect && total.kept_runs == 0 && runs > 0 {
        return Err(Error::EmptyPostselection { probability: 0.0 });
    }

    let correlations = total
        .pairs
        .iter()
        .zip(&pair_particles)
        .map(|(counts, &particles)| {
            let mut all = [0u64; 2];
            let mut by_inner = [CorrelationEstimate::from_counts(0, 0); 4];
            for (inner, bucket) in counts.by_inner.iter().enumerate() {
                all[0] += bucket[0];
                all[1] += bucket[1];
                if inner < 4 {
                    by_inner[inner] = CorrelationEstimate::from_counts(bucket[0], bucket[1]);
                }
            }
            PairCorrelation {
                particles,
                conditional: if has_postselect {
                    CorrelationEstimate::from_counts(counts.kept[0], counts.kept[1])
                } else {
                    CorrelationEstimate::from_counts(all[0], all[1])
                },
                unconditional: CorrelationEstimate::from_counts(all[0], all[1]),
                by_inner_outcome: by_inner,
            }
        })
        .collect();

    Ok(TimelineOutcome {
        stats: TimelineStats {
            runs: total.runs,
            kept_runs: if has_postselect {
                total.kept_runs
            } else {
                total.runs
            },
            inner_counts: total.inner_counts,
            correlations,
        },
        log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::singlet_correlation;

    fn at(t: f64) -> SpacetimeLabel {
        SpacetimeLabel::new(0.0, 0.0, 0.0, t).unwrap()
    }

    fn swap_timeline(delayed: bool, a: Direction, b: Direction) -> Timeline {
        let prepare = vec![
            TimelineEvent {
                at: at(0.0),
                action: TimelineAction::PreparePair {
                    a: 1,
                    b: 2,
                    label: BellKind::PsiMinus,
                },
            },
            TimelineEvent {
                at: at(0.0),
                action: TimelineAction::PreparePair {
                    a: 3,
                    b: 4,
                    label: BellKind::PsiMinus,
                },
            },
        ];
        let locals = vec![
            TimelineEvent {
                at: at(if delayed { 1.0 } else { 2.0 }),
                action: TimelineAction::LocalMeasure {
                    particle: 1,
                    direction: a,
                },
            },
            TimelineEvent {
                at: at(if delayed { 1.0 } else { 2.0 }),
                action: TimelineAction::LocalMeasure {
                    particle: 4,
                    direction: b,
                },
            },
        ];
        let bell = TimelineEvent {
            at: at(if delayed { 2.0 } else { 1.0 }),
            action: TimelineAction::BellMeasure { a: 2, b: 3 },
        };
        let post = TimelineEvent {
            at: at(3.0),
            action: TimelineAction::Postselect {
                label: BellKind::PsiMinus,
            },
        };
        let mut events = prepare;
        if delayed {
            events.extend(locals);
            events.push(bell);
        } else {
            events.push(bell);
            events.extend(locals);
        }
        events.push(post);
        Timeline::new(events).unwrap()
    }

    #[test]
    fn conditional_correlation_matches_singlet_law() {
        let a = Direction::Z;
        let b = Direction::normalized(1.0, 0.0, 1.0).unwrap();
        let timeline = swap_timeline(false, a, b);
        let outcome = run_timeline(&timeline, 40_000, Seed(11), 0).unwrap();
        let expected = singlet_correlation(a, b);
        let pair = &outcome.stats.correlations[0];
        assert!(
            (pair.conditional.mean - expected).abs() < 0.03,
            "conditional {} vs {}",
            pair.conditional.mean,
            expected
        );
        // Unconditioned outer pairs are rescrambled to zero correlation.
        assert!(pair.unconditional.mean.abs() < 0.03);
        // All four inner outcomes occur with probability ~1/4.
        for &count in &outcome.stats.inner_counts {
            let freq = count as f64 / 40_000.0;
            assert!((freq - 0.25).abs() < 0.02);
        }
    }

    #[test]
    fn delayed_choice_reordering_is_statistically_invisible() {
        let a = Direction::Z;
        let b = Direction::normalized(1.0, 1.0, 0.0).unwrap();
        let early = run_timeline(&swap_timeline(false, a, b), 30_000, Seed(21), 0).unwrap();
        let late = run_timeline(&swap_timeline(true, a, b), 30_000, Seed(22), 0).unwrap();
        let (ce, cl) = (
            early.stats.correlations[0].conditional,
            late.stats.correlations[0].conditional,
        );
        let combined = (ce.standard_error.powi(2) + cl.standard_error.powi(2)).sqrt();
        assert!(
            (ce.mean - cl.mean).abs() < 3.0 * combined,
            "{} vs {} (3se = {})",
            ce.mean,
            cl.mean,
            3.0 * combined
        );
    }

    #[test]
    fn impossible_postselection_errors() {
        // A Ψ− pair measured in the Bell basis always yields Ψ−, so keeping
        // Φ+ filters out every run.
        let events = vec![
            TimelineEvent {
                at: at(0.0),
                action: TimelineAction::PreparePair {
                    a: 1,
                    b: 2,
                    label: BellKind::PsiMinus,
                },
            },
            TimelineEvent {
                at: at(1.0),
                action: TimelineAction::BellMeasure { a: 1, b: 2 },
            },
            TimelineEvent {
                at: at(2.0),
                action: TimelineAction::Postselect {
                    label: BellKind::PhiPlus,
                },
            },
        ];
        let timeline = Timeline::new(events).unwrap();
        assert!(matches!(
            run_timeline(&timeline, 500, Seed(3), 0),
            Err(Error::EmptyPostselection { .. })
        ));
    }

    #[test]
    fn unprepared_particle_is_rejected() {
        let events = vec![
            TimelineEvent {
                at: at(0.0),
                action: TimelineAction::PreparePair {
                    a: 1,
                    b: 2,
                    label: BellKind::PsiMinus,
                },
            },
            TimelineEvent {
                at: at(1.0),
                action: TimelineAction::LocalMeasure {
                    particle: 9,
                    direction: Direction::Z,
                },
            },
        ];
        assert!(matches!(
            Timeline::new(events),
            Err(Error::UnpreparedParticle { particle: 9 })
        ));
    }

    #[test]
    fn decreasing_times_are_rejected() {
        let events = vec![
            TimelineEvent {
                at: at(1.0),
                action: TimelineAction::PreparePair {
                    a: 1,
                    b: 2,
                    label: BellKind::PsiMinus,
                },
            },
            TimelineEvent {
                at: at(0.5),
                action: TimelineAction::LocalMeasure {
                    particle: 1,
                    direction: Direction::Z,
                },
            },
        ];
        assert!(matches!(
            Timeline::new(events),
            Err(Error::MalformedTimeline { .. })
        ));
    }

    #[test]
    fn timeline_json_roundtrip() {
        let timeline = swap_timeline(true, Direction::Z, Direction::X);
        let json = serde_json::to_string(&timeline).unwrap();
        assert!(json.starts_with('['));
        let back: Timeline = serde_json::from_str(&json).unwrap();
        assert_eq!(back, timeline);
    }

    #[test]
    fn seeded_runs_reproduce() {
        let timeline = swap_timeline(false, Direction::Z, Direction::X);
        let one = run_timeline(&timeline, 2_000, Seed(5), 4).unwrap();
        let two = run_timeline(&timeline, 2_000, Seed(5), 4).unwrap();
        assert_eq!(one.stats.inner_counts, two.stats.inner_counts);
        assert_eq!(
            one.stats.correlations[0].conditional.mean,
            two.stats.correlations[0].conditional.mean
        );
        assert_eq!(one.log.len(), two.log.len());
    }
}
