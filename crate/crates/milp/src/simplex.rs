//! Bounded-variable revised simplex with Dantzig pricing and a Bland's-rule
//! fallback once the objective stalls.
//!
//! The solver works on an equality form `A x + s = b` where every constraint
//! row receives a slack variable whose bounds encode the row sense. Bounds on
//! structural variables are handled directly (no bound rows). Phase 1 drives
//! basic variables into their bounds by minimizing total infeasibility from
//! an arbitrary starting basis, which doubles as the warm-start path for
//! branch and bound.

use crate::lu::{Eta, LuFactors};
use crate::model::{CmpOp, Model, Sense, Solution, SolveStatus};

pub const FEAS_TOL: f64 = 1e-7;
pub const INT_TOL: f64 = 1e-6;
const DUAL_TOL: f64 = 1e-9;
const PIV_SKIP: f64 = 1e-9;
const RATIO_TIE: f64 = 1e-9;
const REFACTOR_EVERY: usize = 64;

const ST_BASIC: u8 = 0;
const ST_LOWER: u8 = 1;
const ST_UPPER: u8 = 2;
const ST_FREE: u8 = 3;

const NO_SLOT: u32 = u32::MAX;

/// Snapshot of a simplex basis, reusable to warm-start a related solve.
#[derive(Clone, Debug)]
pub struct Basis {
    basic: Vec<u32>,
    state: Vec<u8>,
}

/// Computational form of a model: scaled equality system with slack columns.
pub(crate) struct LpForm {
    pub m: usize,
    pub n_struct: usize,
    pub n: usize,
    cols: Vec<Vec<(u32, f64)>>,
    /// scaled default bounds (structurals then slacks)
    lo: Vec<f64>,
    hi: Vec<f64>,
    /// scaled costs, minimize orientation
    cost: Vec<f64>,
    b: Vec<f64>,
    row_scale: Vec<f64>,
    col_scale: Vec<f64>,
    maximize: bool,
}

/// Round a positive scale factor to the nearest power of two so that scaling
/// introduces no rounding error.
fn pow2_scale(raw: f64) -> f64 {
    if !raw.is_finite() || raw <= 0.0 {
        return 1.0;
    }
    let e = raw.log2().round().clamp(-40.0, 40.0) as i32;
    f64::powi(2.0, e)
}

impl LpForm {
    pub fn build(model: &Model) -> LpForm {
        let m = model.num_constraints();
        let n_struct = model.num_vars();
        let n = n_struct + m;
        let maximize = model.sense == Sense::Maximize;

        let mut cols: Vec<Vec<(u32, f64)>> = vec![Vec::new(); n];
        for (i, c) in model.constraints().iter().enumerate() {
            for &(v, a) in &c.terms {
                if a != 0.0 {
                    cols[v.0].push((i as u32, a));
                }
            }
            cols[n_struct + i].push((i as u32, 1.0));
        }

        // equilibrate rows then columns, powers of two so it is exact
        let mut row_scale = vec![1.0f64; m];
        for (i, c) in model.constraints().iter().enumerate() {
            let mx = c
                .terms
                .iter()
                .map(|&(_, a)| a.abs())
                .fold(0.0f64, f64::max);
            if mx > 0.0 {
                row_scale[i] = pow2_scale(1.0 / mx);
            }
        }
        let mut col_scale = vec![1.0f64; n];
        for (j, col) in cols.iter().enumerate() {
            let mx = col
                .iter()
                .map(|&(r, a)| (a * row_scale[r as usize]).abs())
                .fold(0.0f64, f64::max);
            if mx > 0.0 {
                col_scale[j] = pow2_scale(1.0 / mx);
            }
        }
        for (j, col) in cols.iter_mut().enumerate() {
            for e in col.iter_mut() {
                e.1 *= row_scale[e.0 as usize] * col_scale[j];
            }
        }

        let mut lo = vec![0.0f64; n];
        let mut hi = vec![0.0f64; n];
        for (j, v) in model.vars().iter().enumerate() {
            lo[j] = v.lower / col_scale[j];
            hi[j] = v.upper / col_scale[j];
        }
        for (i, c) in model.constraints().iter().enumerate() {
            let j = n_struct + i;
            let (l, h) = match c.op {
                CmpOp::Le => (0.0, f64::INFINITY),
                CmpOp::Ge => (f64::NEG_INFINITY, 0.0),
                CmpOp::Eq => (0.0, 0.0),
            };
            lo[j] = l / col_scale[j];
            hi[j] = h / col_scale[j];
        }

        let mut cost = vec![0.0f64; n];
        for &(v, c) in &model.objective {
            cost[v.0] += if maximize { -c } else { c } * col_scale[v.0];
        }

        let b = model
            .constraints()
            .iter()
            .enumerate()
            .map(|(i, c)| c.rhs * row_scale[i])
            .collect();

        LpForm { m, n_struct, n, cols, lo, hi, cost, b, row_scale, col_scale, maximize }
    }

    /// Scale caller-provided structural bounds into working arrays.
    fn scaled_bounds(&self, lo_s: &[f64], hi_s: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        for j in 0..self.n_struct {
            lo[j] = lo_s[j] / self.col_scale[j];
            hi[j] = hi_s[j] / self.col_scale[j];
        }
        (lo, hi)
    }
}

pub(crate) struct LpOutcome {
    pub status: SolveStatus,
    /// unscaled structural values
    pub values: Vec<f64>,
    /// unscaled duals, d(obj)/d(rhs) convention
    pub duals: Vec<f64>,
    pub iterations: usize,
    pub basis: Basis,
}

enum PhaseEnd {
    Done,
    Unbounded,
    NoProgress,
    IterLimit,
}

struct Solver<'a> {
    f: &'a LpForm,
    lo: Vec<f64>,
    hi: Vec<f64>,
    basic: Vec<u32>,
    pos: Vec<u32>,
    state: Vec<u8>,
    xb: Vec<f64>,
    lu: LuFactors,
    etas: Vec<Eta>,
    // scratch buffers
    w: Vec<f64>,
    row_buf: Vec<f64>,
    y: Vec<f64>,
    slot_buf: Vec<f64>,
    cb: Vec<f64>,
    iterations: usize,
    max_iterations: usize,
    bland: bool,
    stall: usize,
    stall_limit: usize,
    best_metric: f64,
}

enum Step {
    Flip { q: usize, t: f64, sigma: f64 },
    Pivot { q: usize, t: f64, sigma: f64, slot: usize, to_upper: bool },
    Unbounded,
    Stuck,
}

impl<'a> Solver<'a> {
    fn new(f: &'a LpForm, lo: Vec<f64>, hi: Vec<f64>, warm: Option<&Basis>) -> Option<Solver<'a>> {
        let (m, n) = (f.m, f.n);
        let (basic, state) = match warm {
            Some(b) if b.basic.len() == m && b.state.len() == n => {
                (b.basic.clone(), b.state.clone())
            }
            _ => Self::slack_basis(f, &lo, &hi),
        };
        let mut s = Solver {
            f,
            lo,
            hi,
            basic,
            pos: vec![NO_SLOT; n],
            state,
            xb: vec![0.0; m],
            lu: LuFactors::factorize(0, &[])?,
            etas: Vec::new(),
            w: vec![0.0; m],
            row_buf: vec![0.0; m],
            y: vec![0.0; m],
            slot_buf: vec![0.0; m],
            cb: vec![0.0; m],
            iterations: 0,
            max_iterations: 200 * (m + n) + 20_000,
            bland: false,
            stall: 0,
            stall_limit: 2 * (m + n),
            best_metric: f64::INFINITY,
        };
        s.normalize_states();
        if !s.refactor() {
            // singular warm basis: fall back to the slack basis
            let (basic, state) = Self::slack_basis(f, &s.lo, &s.hi);
            s.basic = basic;
            s.state = state;
            s.pos = vec![NO_SLOT; f.n];
            s.normalize_states();
            if !s.refactor() {
                return None;
            }
        }
        s.compute_xb();
        Some(s)
    }

    fn slack_basis(f: &LpForm, lo: &[f64], hi: &[f64]) -> (Vec<u32>, Vec<u8>) {
        let basic: Vec<u32> = (0..f.m).map(|i| (f.n_struct + i) as u32).collect();
        let mut state = vec![ST_LOWER; f.n];
        for j in 0..f.n {
            state[j] = Self::nearest_bound_state(lo[j], hi[j]);
        }
        for i in 0..f.m {
            state[f.n_struct + i] = ST_BASIC;
        }
        (basic, state)
    }

    fn nearest_bound_state(lo: f64, hi: f64) -> u8 {
        match (lo.is_finite(), hi.is_finite()) {
            (true, true) => {
                if lo.abs() <= hi.abs() {
                    ST_LOWER
                } else {
                    ST_UPPER
                }
            }
            (true, false) => ST_LOWER,
            (false, true) => ST_UPPER,
            (false, false) => ST_FREE,
        }
    }

    /// Repair nonbasic states that became inconsistent with updated bounds.
    fn normalize_states(&mut self) {
        for j in 0..self.f.n {
            if self.state[j] == ST_BASIC {
                continue;
            }
            let (lo, hi) = (self.lo[j], self.hi[j]);
            let ok = match self.state[j] {
                ST_LOWER => lo.is_finite(),
                ST_UPPER => hi.is_finite(),
                ST_FREE => lo <= 0.0 && hi >= 0.0,
                _ => false,
            };
            if !ok {
                self.state[j] = Self::nearest_bound_state(lo, hi);
            }
        }
        // rebuild pos from basic list
        for p in self.pos.iter_mut() {
            *p = NO_SLOT;
        }
        for (slot, &col) in self.basic.iter().enumerate() {
            self.pos[col as usize] = slot as u32;
            self.state[col as usize] = ST_BASIC;
        }
    }

    fn refactor(&mut self) -> bool {
        let cols: Vec<&[(u32, f64)]> = self
            .basic
            .iter()
            .map(|&c| self.f.cols[c as usize].as_slice())
            .collect();
        match LuFactors::factorize(self.f.m, &cols) {
            Some(lu) => {
                self.lu = lu;
                self.etas.clear();
                true
            }
            None => false,
        }
    }

    fn nb_value(&self, j: usize) -> f64 {
        match self.state[j] {
            ST_LOWER => self.lo[j],
            ST_UPPER => self.hi[j],
            _ => 0.0,
        }
    }

    fn compute_xb(&mut self) {
        self.row_buf.copy_from_slice(&self.f.b);
        for j in 0..self.f.n {
            if self.state[j] == ST_BASIC {
                continue;
            }
            let v = self.nb_value(j);
            if v != 0.0 {
                for &(r, a) in &self.f.cols[j] {
                    self.row_buf[r as usize] -= a * v;
                }
            }
        }
        self.lu.ftran(&mut self.row_buf, &mut self.xb);
        for eta in &self.etas {
            eta.apply_ftran(&mut self.xb);
        }
    }

    fn ftran_col(&mut self, j: usize) {
        for v in self.row_buf.iter_mut() {
            *v = 0.0;
        }
        for &(r, a) in &self.f.cols[j] {
            self.row_buf[r as usize] = a;
        }
        self.lu.ftran(&mut self.row_buf, &mut self.w);
        for eta in &self.etas {
            eta.apply_ftran(&mut self.w);
        }
    }

    fn btran_costs(&mut self) {
        self.slot_buf.copy_from_slice(&self.cb);
        for eta in self.etas.iter().rev() {
            eta.apply_btran(&mut self.slot_buf);
        }
        let mut scratch = std::mem::take(&mut self.row_buf);
        self.lu.btran(&self.slot_buf, &mut self.y, &mut scratch);
        self.row_buf = scratch;
    }

    fn infeasibility(&self) -> f64 {
        let mut total = 0.0;
        for (slot, &col) in self.basic.iter().enumerate() {
            let j = col as usize;
            let x = self.xb[slot];
            total += (self.lo[j] - x).max(0.0).max(x - self.hi[j]).max(0.0);
        }
        total
    }

    fn phase1_costs(&mut self) -> bool {
        let mut any = false;
        for slot in 0..self.f.m {
            let j = self.basic[slot] as usize;
            let x = self.xb[slot];
            self.cb[slot] = if x < self.lo[j] - FEAS_TOL {
                any = true;
                -1.0
            } else if x > self.hi[j] + FEAS_TOL {
                any = true;
                1.0
            } else {
                0.0
            };
        }
        any
    }

    fn phase2_costs(&mut self) {
        for slot in 0..self.f.m {
            self.cb[slot] = self.f.cost[self.basic[slot] as usize];
        }
    }

    /// Pick the entering variable. `phase2` controls whether structural costs
    /// apply. Returns (var, direction).
    fn price(&self, phase2: bool) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64, f64)> = None;
        for j in 0..self.f.n {
            let st = self.state[j];
            if st == ST_BASIC {
                continue;
            }
            if self.lo[j] == self.hi[j] {
                continue; // fixed, cannot move
            }
            let base_cost = if phase2 { self.f.cost[j] } else { 0.0 };
            let mut rc = base_cost;
            for &(r, a) in &self.f.cols[j] {
                rc -= self.y[r as usize] * a;
            }
            let (eligible, sigma) = match st {
                ST_LOWER => (rc < -DUAL_TOL, 1.0),
                ST_UPPER => (rc > DUAL_TOL, -1.0),
                ST_FREE => (rc.abs() > DUAL_TOL, if rc < 0.0 { 1.0 } else { -1.0 }),
                _ => (false, 1.0),
            };
            if !eligible {
                continue;
            }
            if self.bland {
                return Some((j, sigma));
            }
            let score = rc.abs();
            match best {
                Some((_, _, s)) if s >= score => {}
                _ => best = Some((j, sigma, score)),
            }
        }
        best.map(|(j, sigma, _)| (j, sigma))
    }

    /// Ratio test for entering variable `q` moving in direction `sigma`.
    fn ratio(&self, q: usize, sigma: f64, phase2: bool) -> Step {
        let mut t_best = f64::INFINITY;
        let mut leave: Option<(usize, bool, f64)> = None; // slot, hits_upper, |w|
        for slot in 0..self.f.m {
            let wv = self.w[slot];
            if wv.abs() <= PIV_SKIP {
                continue;
            }
            let j = self.basic[slot] as usize;
            let dx = -sigma * wv;
            let x = self.xb[slot];
            let (lo, hi) = (self.lo[j], self.hi[j]);
            let cand: Option<(f64, bool)> = if !phase2 && x < lo - FEAS_TOL {
                // infeasible below: blocks only when moving up through its lower bound
                if dx > 0.0 {
                    Some(((lo - x) / dx, false))
                } else {
                    None
                }
            } else if !phase2 && x > hi + FEAS_TOL {
                if dx < 0.0 {
                    Some(((hi - x) / dx, true))
                } else {
                    None
                }
            } else if dx > 0.0 {
                hi.is_finite().then(|| (((hi - x) / dx).max(0.0), true))
            } else {
                lo.is_finite().then(|| (((x - lo) / -dx).max(0.0), false))
            };
            let Some((t, hits_upper)) = cand else { continue };
            let t = t.max(0.0);
            if t < t_best - RATIO_TIE {
                t_best = t;
                leave = Some((slot, hits_upper, wv.abs()));
            } else if t < t_best + RATIO_TIE {
                if let Some((ls, _, lw)) = leave {
                    let better = if self.bland {
                        (self.basic[slot] as usize) < (self.basic[ls] as usize)
                    } else {
                        wv.abs() > lw
                    };
                    if better {
                        t_best = t.min(t_best);
                        leave = Some((slot, hits_upper, wv.abs()));
                    }
                } else {
                    t_best = t;
                    leave = Some((slot, hits_upper, wv.abs()));
                }
            }
        }
        // bound flip of the entering variable itself
        let span = self.hi[q] - self.lo[q];
        let t_own = if span.is_finite() { span } else { f64::INFINITY };
        if t_own < t_best - RATIO_TIE {
            return Step::Flip { q, t: t_own, sigma };
        }
        match leave {
            Some((slot, to_upper, _)) => Step::Pivot { q, t: t_best, sigma, slot, to_upper },
            None => {
                if t_own.is_finite() {
                    Step::Flip { q, t: t_own, sigma }
                } else if phase2 {
                    Step::Unbounded
                } else {
                    Step::Stuck
                }
            }
        }
    }

    fn apply_move(&mut self, t: f64, sigma: f64) {
        if t == 0.0 {
            return;
        }
        for slot in 0..self.f.m {
            let wv = self.w[slot];
            if wv.abs() > PIV_SKIP {
                self.xb[slot] -= sigma * t * wv;
            }
        }
    }

    fn run_phase(&mut self, phase2: bool) -> PhaseEnd {
        self.bland = false;
        self.stall = 0;
        self.best_metric = f64::INFINITY;
        loop {
            if self.iterations >= self.max_iterations {
                return PhaseEnd::IterLimit;
            }
            if phase2 {
                self.phase2_costs();
            } else if !self.phase1_costs() {
                return PhaseEnd::Done; // feasible
            }
            self.btran_costs();
            let Some((q, sigma)) = self.price(phase2) else {
                return if phase2 { PhaseEnd::Done } else { PhaseEnd::NoProgress };
            };
            self.ftran_col(q);
            let step = self.ratio(q, sigma, phase2);
            self.iterations += 1;
            match step {
                Step::Flip { q, t, sigma } => {
                    self.apply_move(t, sigma);
                    self.state[q] = if self.state[q] == ST_LOWER { ST_UPPER } else { ST_LOWER };
                }
                Step::Pivot { q, t, sigma, slot, to_upper } => {
                    let start = self.nb_value(q);
                    self.apply_move(t, sigma);
                    let leaving = self.basic[slot] as usize;
                    self.state[leaving] = if to_upper { ST_UPPER } else { ST_LOWER };
                    self.pos[leaving] = NO_SLOT;
                    self.basic[slot] = q as u32;
                    self.pos[q] = slot as u32;
                    self.state[q] = ST_BASIC;
                    self.xb[slot] = start + sigma * t;
                    if self.w[slot].abs() <= PIV_SKIP {
                        // pivot too small to update stably: refactor instead
                        if !self.refactor() {
                            return PhaseEnd::NoProgress;
                        }
                        self.compute_xb();
                    } else {
                        self.etas.push(Eta::from_column(slot, &self.w));
                        if self.etas.len() >= REFACTOR_EVERY {
                            if !self.refactor() {
                                return PhaseEnd::NoProgress;
                            }
                            self.compute_xb();
                        }
                    }
                }
                Step::Unbounded => return PhaseEnd::Unbounded,
                Step::Stuck => return PhaseEnd::NoProgress,
            }
            // stall bookkeeping drives the anti-cycling fallback
            let metric = if phase2 { self.objective_scaled() } else { self.infeasibility() };
            if metric < self.best_metric - 1e-10 {
                self.best_metric = metric;
                self.stall = 0;
                self.bland = false;
            } else {
                self.stall += 1;
                if self.stall > self.stall_limit {
                    self.bland = true;
                }
            }
        }
    }

    fn objective_scaled(&self) -> f64 {
        let mut obj = 0.0;
        for (slot, &col) in self.basic.iter().enumerate() {
            obj += self.f.cost[col as usize] * self.xb[slot];
        }
        for j in 0..self.f.n {
            if self.state[j] != ST_BASIC {
                let v = self.nb_value(j);
                if v != 0.0 {
                    obj += self.f.cost[j] * v;
                }
            }
        }
        obj
    }

    fn extract(&mut self, status: SolveStatus) -> LpOutcome {
        let f = self.f;
        let mut values = vec![0.0; f.n_struct];
        if status == SolveStatus::Optimal {
            for j in 0..f.n_struct {
                let v = if self.state[j] == ST_BASIC {
                    self.xb[self.pos[j] as usize]
                } else {
                    self.nb_value(j)
                };
                values[j] = v * f.col_scale[j];
            }
        }
        let mut duals = vec![0.0; f.m];
        if status == SolveStatus::Optimal {
            self.phase2_costs();
            self.btran_costs();
            for i in 0..f.m {
                let d = self.y[i] * f.row_scale[i];
                duals[i] = if f.maximize { -d } else { d };
            }
        }
        LpOutcome {
            status,
            values,
            duals,
            iterations: self.iterations,
            basis: Basis { basic: self.basic.clone(), state: self.state.clone() },
        }
    }
}

/// Solve the LP given by `form` with structural bounds `lo`/`hi` (unscaled).
/// Binary variables are treated as continuous within their bounds.
pub(crate) fn solve_form(
    form: &LpForm,
    lo: &[f64],
    hi: &[f64],
    warm: Option<&Basis>,
) -> LpOutcome {
    for j in 0..form.n_struct {
        if lo[j] > hi[j] {
            return LpOutcome {
                status: SolveStatus::Infeasible,
                values: vec![0.0; form.n_struct],
                duals: vec![0.0; form.m],
                iterations: 0,
                basis: Basis { basic: Vec::new(), state: Vec::new() },
            };
        }
    }
    let (slo, shi) = form.scaled_bounds(lo, hi);
    let attempt = |warm: Option<&Basis>| -> Option<LpOutcome> {
        let mut s = Solver::new(form, slo.clone(), shi.clone(), warm)?;
        let end = s.run_phase(false);
        match end {
            PhaseEnd::Done => {}
            PhaseEnd::NoProgress => {
                return Some(s.extract(if s.infeasibility() > FEAS_TOL * (form.m as f64).max(1.0) {
                    SolveStatus::Infeasible
                } else {
                    SolveStatus::NumericalFailure
                }))
            }
            PhaseEnd::IterLimit => return Some(s.extract(SolveStatus::NumericalFailure)),
            PhaseEnd::Unbounded => unreachable!("phase 1 cannot be unbounded"),
        }
        let end = s.run_phase(true);
        let status = match end {
            PhaseEnd::Done => SolveStatus::Optimal,
            PhaseEnd::Unbounded => SolveStatus::Unbounded,
            PhaseEnd::NoProgress | PhaseEnd::IterLimit => SolveStatus::NumericalFailure,
        };
        Some(s.extract(status))
    };

    let out = attempt(warm);
    match out {
        Some(o) => {
            // a warm start that ends infeasible or unstable gets one cold retry
            if warm.is_some()
                && matches!(o.status, SolveStatus::Infeasible | SolveStatus::NumericalFailure)
            {
                attempt(None).unwrap_or(o)
            } else {
                o
            }
        }
        None => LpOutcome {
            status: SolveStatus::NumericalFailure,
            values: vec![0.0; form.n_struct],
            duals: vec![0.0; form.m],
            iterations: 0,
            basis: Basis { basic: Vec::new(), state: Vec::new() },
        },
    }
}

/// Solve a pure linear program. Returns an optimal basic solution with
/// per-constraint duals, or the infeasible/unbounded status. Deterministic
/// for a fixed model ordering.
pub fn solve_lp(model: &Model) -> Solution {
    match model.validate() {
        Ok(()) => {}
        Err(_) => return Solution::failed(SolveStatus::NumericalFailure, model.num_vars()),
    }
    let form = LpForm::build(model);
    let lo: Vec<f64> = model.vars().iter().map(|v| v.lower).collect();
    let hi: Vec<f64> = model.vars().iter().map(|v| v.upper).collect();
    let out = solve_form(&form, &lo, &hi, None);
    lp_outcome_to_solution(model, out)
}

pub(crate) fn lp_outcome_to_solution(model: &Model, out: LpOutcome) -> Solution {
    let objective = if out.status == SolveStatus::Optimal {
        model.objective_value(&out.values)
    } else {
        f64::NAN
    };
    Solution {
        status: out.status,
        objective,
        duals: (out.status == SolveStatus::Optimal).then_some(out.duals),
        values: out.values,
        best_bound: objective,
        iterations: out.iterations,
        nodes: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{CmpOp, Model, Sense};

    #[test]
    fn min_with_lower_bound_row() {
        // min x s.t. x >= 3; dual of the bound row is 1
        let mut m = Model::new();
        let x = m.add_continuous("x", f64::NEG_INFINITY, f64::INFINITY).unwrap();
        m.add_constraint("lb", vec![(x, 1.0)], CmpOp::Ge, 3.0).unwrap();
        m.set_objective(Sense::Minimize, vec![(x, 1.0)]);
        let s = solve_lp(&m);
        assert_eq!(s.status, SolveStatus::Optimal);
        assert!((s.values[0] - 3.0).abs() < 1e-9);
        assert!((s.objective - 3.0).abs() < 1e-9);
        assert!((s.duals.as_ref().unwrap()[0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn max_over_simplex() {
        // max 2x + y s.t. x + y <= 1, x,y >= 0 -> x=1, value 2
        let mut m = Model::new();
        let x = m.add_continuous("x", 0.0, f64::INFINITY).unwrap();
        let y = m.add_continuous("y", 0.0, f64::INFINITY).unwrap();
        m.add_constraint("cap", vec![(x, 1.0), (y, 1.0)], CmpOp::Le, 1.0).unwrap();
        m.set_objective(Sense::Maximize, vec![(x, 2.0), (y, 1.0)]);
        let s = solve_lp(&m);
        assert_eq!(s.status, SolveStatus::Optimal);
        assert!((s.objective - 2.0).abs() < 1e-9);
        assert!((s.values[0] - 1.0).abs() < 1e-9);
        assert!(s.values[1].abs() < 1e-9);
    }

    #[test]
    fn infeasible_detected() {
        let mut m = Model::new();
        let x = m.add_continuous("x", 0.0, 1.0).unwrap();
        m.add_constraint("c", vec![(x, 1.0)], CmpOp::Ge, 2.0).unwrap();
        m.set_objective(Sense::Minimize, vec![(x, 1.0)]);
        assert_eq!(solve_lp(&m).status, SolveStatus::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let mut m = Model::new();
        let x = m.add_continuous("x", 0.0, f64::INFINITY).unwrap();
        m.set_objective(Sense::Maximize, vec![(x, 1.0)]);
        assert_eq!(solve_lp(&m).status, SolveStatus::Unbounded);
    }

    #[test]
    fn equality_and_free_vars() {
        // min 2a + 3b s.t. a + b = 4, a - b = 0 -> a=b=2, obj 10
        let mut m = Model::new();
        let a = m.add_continuous("a", f64::NEG_INFINITY, f64::INFINITY).unwrap();
        let b = m.add_continuous("b", f64::NEG_INFINITY, f64::INFINITY).unwrap();
        m.add_constraint("sum", vec![(a, 1.0), (b, 1.0)], CmpOp::Eq, 4.0).unwrap();
        m.add_constraint("diff", vec![(a, 1.0), (b, -1.0)], CmpOp::Eq, 0.0).unwrap();
        m.set_objective(Sense::Minimize, vec![(a, 2.0), (b, 3.0)]);
        let s = solve_lp(&m);
        assert_eq!(s.status, SolveStatus::Optimal);
        assert!((s.objective - 10.0).abs() < 1e-9);
    }

    #[test]
    fn beale_cycling_example_terminates() {
        // classic degenerate LP that cycles under naive Dantzig pricing
        let mut m = Model::new();
        let x1 = m.add_continuous("x1", 0.0, f64::INFINITY).unwrap();
        let x2 = m.add_continuous("x2", 0.0, f64::INFINITY).unwrap();
        let x3 = m.add_continuous("x3", 0.0, f64::INFINITY).unwrap();
        let x4 = m.add_continuous("x4", 0.0, f64::INFINITY).unwrap();
        m.add_constraint(
            "r1",
            vec![(x1, 0.25), (x2, -60.0), (x3, -1.0 / 25.0), (x4, 9.0)],
            CmpOp::Le,
            0.0,
        )
        .unwrap();
        m.add_constraint(
            "r2",
            vec![(x1, 0.5), (x2, -90.0), (x3, -1.0 / 50.0), (x4, 3.0)],
            CmpOp::Le,
            0.0,
        )
        .unwrap();
        m.add_constraint("r3", vec![(x3, 1.0)], CmpOp::Le, 1.0).unwrap();
        m.set_objective(
            Sense::Minimize,
            vec![(x1, -0.75), (x2, 150.0), (x3, -0.02), (x4, 6.0)],
        );
        let s = solve_lp(&m);
        assert_eq!(s.status, SolveStatus::Optimal);
        assert!((s.objective - (-0.05)).abs() < 1e-9, "obj {}", s.objective);
    }

    #[test]
    fn boxed_variables_and_flips() {
        // max x + y with -1 <= x <= 2, 0 <= y <= 3, x + y <= 4
        let mut m = Model::new();
        let x = m.add_continuous("x", -1.0, 2.0).unwrap();
        let y = m.add_continuous("y", 0.0, 3.0).unwrap();
        m.add_constraint("c", vec![(x, 1.0), (y, 1.0)], CmpOp::Le, 4.0).unwrap();
        m.set_objective(Sense::Maximize, vec![(x, 1.0), (y, 1.0)]);
        let s = solve_lp(&m);
        assert_eq!(s.status, SolveStatus::Optimal);
        assert!((s.objective - 4.0).abs() < 1e-9);
    }
}
