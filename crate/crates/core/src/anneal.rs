//! Metropolis search over closed/open splits maximizing `Π(K) = ‖b(I)‖₁`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{betti, BettiVector};
use crate::complex::DeltaComplex;
use crate::error::{Error, Result};
use crate::fusion::{dichotomy_from, flip_moves, DichotomyRecord, FusionReport, MoveKind, SplitPair};

/// Inverse temperature growing linearly from `start` to `end` over the run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BetaSchedule {
    pub start: f64,
    pub end: f64,
}

impl Default for BetaSchedule {
    fn default() -> Self {
        Self { start: 0.1, end: 5.0 }
    }
}

impl BetaSchedule {
    pub fn beta(&self, step: usize, steps: usize) -> f64 {
        if steps <= 1 {
            return self.start;
        }
        let t = step as f64 / (steps - 1) as f64;
        self.start + t * (self.end - self.start)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceEntry {
    pub step: usize,
    /// `Π` of the current state after the accept/reject decision.
    pub pi: u64,
    pub move_kind: MoveKind,
    pub cell: crate::complex::Cell,
    pub accepted: bool,
    /// Whether the proposed state kept `K` closed and `U` open.
    pub sound: bool,
    pub dichotomy: DichotomyRecord,
}

impl TraceEntry {
    /// `step,pi,move_kind,cell,accepted` with the cell's labels space-separated.
    pub fn csv_line(&self) -> String {
        let labels: Vec<String> = self.cell.labels().iter().map(u32::to_string).collect();
        format!(
            "{},{},{},{},{}",
            self.step,
            self.pi,
            self.move_kind.as_str(),
            labels.join(" "),
            self.accepted
        )
    }
}

pub const CSV_HEADER: &str = "step,pi,move_kind,cell,accepted";

#[derive(Clone, Debug)]
pub struct AnnealOutcome {
    pub best: SplitPair,
    pub best_pi: u64,
    pub initial_pi: u64,
    pub trace: Vec<TraceEntry>,
}

impl AnnealOutcome {
    pub fn trace_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for e in &self.trace {
            out.push_str(&e.csv_line());
            out.push('\n');
        }
        out
    }
}

struct State {
    split: SplitPair,
    bk: BettiVector,
    bu: BettiVector,
    pi: u64,
}

impl State {
    fn new(split: SplitPair, bg: &BettiVector) -> Result<Self> {
        let bk = betti(&split.k())?;
        let bu = betti(&split.u())?;
        let pi = FusionReport::from_vectors(bg, &bk, &bu).interface_norm();
        Ok(Self { split, bk, bu, pi })
    }
}

/// Starts from `K = G`, where `Π = 0`.
pub fn anneal_search(
    g: &DeltaComplex,
    steps: usize,
    schedule: BetaSchedule,
    seed: u64,
) -> Result<AnnealOutcome> {
    let mask = vec![true; g.len()];
    anneal_from(SplitPair::from_mask(g.clone(), mask)?, steps, schedule, seed)
}

pub fn anneal_from(
    initial: SplitPair,
    steps: usize,
    schedule: BetaSchedule,
    seed: u64,
) -> Result<AnnealOutcome> {
    if !(schedule.start.is_finite() && schedule.end.is_finite()) {
        return Err(Error::InvalidParameter("beta schedule must be finite".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bg = betti(initial.g())?;
    let mut cur = State::new(initial, &bg)?;
    let initial_pi = cur.pi;
    let mut best = (cur.split.clone(), cur.pi);
    let mut trace = Vec::with_capacity(steps);
    for step in 0..steps {
        let moves = flip_moves(&cur.split);
        if moves.is_empty() {
            break;
        }
        let mv = &moves[rng.gen_range(0..moves.len())];
        let next = State::new(cur.split.apply(mv), &bg)?;
        let sound = next.split.is_sound();
        let dichotomy = dichotomy_from(
            &cur.split,
            mv,
            &(cur.bk.clone(), cur.bu.clone()),
            &(next.bk.clone(), next.bu.clone()),
        );
        let beta = schedule.beta(step, steps);
        let accepted = next.pi >= cur.pi || {
            let drop = (cur.pi - next.pi) as f64;
            rng.gen::<f64>() < (-beta * drop).exp()
        };
        if accepted {
            cur = next;
            if cur.pi > best.1 {
                best = (cur.split.clone(), cur.pi);
            }
        }
        trace.push(TraceEntry {
            step,
            pi: cur.pi,
            move_kind: mv.kind,
            cell: mv.cell.clone(),
            accepted,
            sound,
            dichotomy,
        });
    }
    Ok(AnnealOutcome {
        best: best.0,
        best_pi: best.1,
        initial_pi,
        trace,
    })
}
