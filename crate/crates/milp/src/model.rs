//! Model types: variables, linear constraints, objective, solutions.

use std::fmt;

/// Handle to a variable in a [`Model`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub usize);

/// Handle to a constraint in a [`Model`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ConId(pub usize);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarKind {
    Continuous,
    Binary,
}

#[derive(Clone, Debug)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CmpOp {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<(VarId, f64)>,
    pub op: CmpOp,
    pub rhs: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// A linear expression `sum(coef * var) + constant`.
#[derive(Clone, Debug, Default)]
pub struct LinExpr {
    pub terms: Vec<(VarId, f64)>,
    pub constant: f64,
}

impl LinExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        LinExpr { terms: vec![(v, 1.0)], constant: 0.0 }
    }

    pub fn term(mut self, v: VarId, coef: f64) -> Self {
        self.terms.push((v, coef));
        self
    }

    pub fn with_constant(mut self, c: f64) -> Self {
        self.constant = c;
        self
    }

    pub fn add(&mut self, v: VarId, coef: f64) {
        self.terms.push((v, coef));
    }

    pub fn eval(&self, values: &[f64]) -> f64 {
        self.constant + self.terms.iter().map(|&(v, c)| c * values[v.0]).sum::<f64>()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModelError {
    UnknownVariable(usize),
    DuplicateTerm { constraint: String, var: usize },
    NonFiniteCoefficient { location: String },
    InvalidBounds { var: String, lower: f64, upper: f64 },
    BinaryBounds { var: String },
    UnboundedProductOperand { var: String },
    ExpectedBinary { var: String },
    ExpectedContinuous { var: String },
    NonPositiveBigM(f64),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::UnknownVariable(i) => write!(f, "reference to undeclared variable index {i}"),
            ModelError::DuplicateTerm { constraint, var } => {
                write!(f, "constraint '{constraint}' references variable {var} more than once")
            }
            ModelError::NonFiniteCoefficient { location } => {
                write!(f, "non-finite coefficient in {location}")
            }
            ModelError::InvalidBounds { var, lower, upper } => {
                write!(f, "variable '{var}' has invalid bounds [{lower}, {upper}]")
            }
            ModelError::BinaryBounds { var } => {
                write!(f, "binary variable '{var}' must have bounds within [0, 1]")
            }
            ModelError::UnboundedProductOperand { var } => {
                write!(f, "product linearization requires finite bounds on '{var}'")
            }
            ModelError::ExpectedBinary { var } => write!(f, "variable '{var}' must be binary"),
            ModelError::ExpectedContinuous { var } => {
                write!(f, "variable '{var}' must be continuous")
            }
            ModelError::NonPositiveBigM(m) => write!(f, "big-M value must be positive, got {m}"),
        }
    }
}

impl std::error::Error for ModelError {}

/// A registered complementarity pair: at integral solutions exactly one of
/// `var_expr`, `slack_expr` is zero, enforced through the indicator `delta`.
#[derive(Clone, Debug)]
pub struct CompPair {
    pub var_expr: LinExpr,
    pub slack_expr: LinExpr,
    pub delta: VarId,
    pub big_m: f64,
}

/// A registered product linearization: `product = bin * cont` at integral points.
#[derive(Clone, Debug)]
pub struct ProductLink {
    pub product: VarId,
    pub bin: VarId,
    pub cont: VarId,
}

/// Warning emitted when an expression sits close to its big-M cap,
/// which signals that M was chosen too small.
#[derive(Clone, Debug)]
pub struct BigMFlag {
    pub pair: usize,
    pub var_side: bool,
    pub value: f64,
    pub big_m: f64,
}

/// A mixed-integer linear model: variables with bounds, linear constraints
/// and a linear objective.
#[derive(Clone, Debug, Default)]
pub struct Model {
    vars: Vec<Variable>,
    cons: Vec<Constraint>,
    pub sense: Sense,
    pub objective: Vec<(VarId, f64)>,
    pub objective_offset: f64,
    comp_pairs: Vec<CompPair>,
    products: Vec<ProductLink>,
}

impl Default for Sense {
    fn default() -> Self {
        Sense::Minimize
    }
}

impl Model {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.cons.len()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.cons
    }

    pub fn var(&self, id: VarId) -> &Variable {
        &self.vars[id.0]
    }

    pub fn constraint(&self, id: ConId) -> &Constraint {
        &self.cons[id.0]
    }

    pub fn comp_pairs(&self) -> &[CompPair] {
        &self.comp_pairs
    }

    pub fn products(&self) -> &[ProductLink] {
        &self.products
    }

    pub fn binaries(&self) -> impl Iterator<Item = VarId> + '_ {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, v)| v.kind == VarKind::Binary)
            .map(|(i, _)| VarId(i))
    }

    pub fn has_binaries(&self) -> bool {
        self.vars.iter().any(|v| v.kind == VarKind::Binary)
    }

    pub fn add_continuous(
        &mut self,
        name: impl Into<String>,
        lower: f64,
        upper: f64,
    ) -> Result<VarId, ModelError> {
        let name = name.into();
        if !(lower <= upper) || lower.is_nan() || upper.is_nan() {
            return Err(ModelError::InvalidBounds { var: name, lower, upper });
        }
        self.vars.push(Variable { name, kind: VarKind::Continuous, lower, upper });
        Ok(VarId(self.vars.len() - 1))
    }

    pub fn add_binary(&mut self, name: impl Into<String>) -> VarId {
        self.vars.push(Variable {
            name: name.into(),
            kind: VarKind::Binary,
            lower: 0.0,
            upper: 1.0,
        });
        VarId(self.vars.len() - 1)
    }

    /// Tighten or relax bounds of an existing variable. Binary variables keep
    /// their bounds within [0, 1].
    pub fn set_bounds(&mut self, v: VarId, lower: f64, upper: f64) -> Result<(), ModelError> {
        let var = &mut self.vars[v.0];
        if !(lower <= upper) || lower.is_nan() || upper.is_nan() {
            return Err(ModelError::InvalidBounds { var: var.name.clone(), lower, upper });
        }
        if var.kind == VarKind::Binary && (lower < -0.0 || upper > 1.0) {
            return Err(ModelError::BinaryBounds { var: var.name.clone() });
        }
        var.lower = lower;
        var.upper = upper;
        Ok(())
    }

    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        terms: Vec<(VarId, f64)>,
        op: CmpOp,
        rhs: f64,
    ) -> Result<ConId, ModelError> {
        let name = name.into();
        let mut seen = vec![false; self.vars.len()];
        for &(v, c) in &terms {
            if v.0 >= self.vars.len() {
                return Err(ModelError::UnknownVariable(v.0));
            }
            if !c.is_finite() {
                return Err(ModelError::NonFiniteCoefficient { location: name });
            }
            if seen[v.0] {
                return Err(ModelError::DuplicateTerm { constraint: name, var: v.0 });
            }
            seen[v.0] = true;
        }
        if !rhs.is_finite() {
            return Err(ModelError::NonFiniteCoefficient { location: name });
        }
        self.cons.push(Constraint { name, terms, op, rhs });
        Ok(ConId(self.cons.len() - 1))
    }

    pub fn set_objective(&mut self, sense: Sense, terms: Vec<(VarId, f64)>) {
        self.sense = sense;
        self.objective = terms;
    }

    pub fn set_objective_offset(&mut self, offset: f64) {
        self.objective_offset = offset;
    }

    /// Linearize the product `bin * cont` with an auxiliary variable.
    ///
    /// With `B = max(|lower|, |upper|)` of the continuous operand, the four
    /// inequalities `-B*z <= p <= B*z` and `cont - B*(1-z) <= p <= cont + B*(1-z)`
    /// pin `p = bin * cont` at every integral solution.
    pub fn add_product(&mut self, bin: VarId, cont: VarId) -> Result<VarId, ModelError> {
        let bv = &self.vars[bin.0];
        if bv.kind != VarKind::Binary {
            return Err(ModelError::ExpectedBinary { var: bv.name.clone() });
        }
        let cv = &self.vars[cont.0];
        if cv.kind != VarKind::Continuous {
            return Err(ModelError::ExpectedContinuous { var: cv.name.clone() });
        }
        if !cv.lower.is_finite() || !cv.upper.is_finite() {
            return Err(ModelError::UnboundedProductOperand { var: cv.name.clone() });
        }
        let b = cv.lower.abs().max(cv.upper.abs());
        let base = format!("prod({},{})", bv.name, cv.name);
        let p = self.add_continuous(base.clone(), -b, b)?;
        // p - B z <= 0 and p + B z >= 0
        self.add_constraint(format!("{base}:ub0"), vec![(p, 1.0), (bin, -b)], CmpOp::Le, 0.0)?;
        self.add_constraint(format!("{base}:lb0"), vec![(p, 1.0), (bin, b)], CmpOp::Ge, 0.0)?;
        // p - cont + B z <= B and p - cont - B z >= -B
        self.add_constraint(
            format!("{base}:ub1"),
            vec![(p, 1.0), (cont, -1.0), (bin, b)],
            CmpOp::Le,
            b,
        )?;
        self.add_constraint(
            format!("{base}:lb1"),
            vec![(p, 1.0), (cont, -1.0), (bin, -b)],
            CmpOp::Ge,
            -b,
        )?;
        self.products.push(ProductLink { product: p, bin, cont });
        Ok(p)
    }

    /// Enforce `var_expr * slack_expr = 0` for two expressions that are
    /// nonnegative at feasibility, via a binary indicator and big-M rows.
    pub fn add_complementarity(
        &mut self,
        var_expr: LinExpr,
        slack_expr: LinExpr,
        big_m: f64,
    ) -> Result<VarId, ModelError> {
        if !(big_m > 0.0) || !big_m.is_finite() {
            return Err(ModelError::NonPositiveBigM(big_m));
        }
        let idx = self.comp_pairs.len();
        let delta = self.add_binary(format!("delta{idx}"));
        // var_expr <= M * delta
        let mut t = var_expr.terms.clone();
        t.push((delta, -big_m));
        self.add_constraint(format!("comp{idx}:var"), t, CmpOp::Le, -var_expr.constant)?;
        // slack_expr <= M * (1 - delta)
        let mut t = slack_expr.terms.clone();
        t.push((delta, big_m));
        self.add_constraint(
            format!("comp{idx}:slack"),
            t,
            CmpOp::Le,
            big_m - slack_expr.constant,
        )?;
        self.comp_pairs.push(CompPair { var_expr, slack_expr, delta, big_m });
        Ok(delta)
    }

    /// Structural validation of the whole model.
    pub fn validate(&self) -> Result<(), ModelError> {
        for v in &self.vars {
            if !(v.lower <= v.upper) {
                return Err(ModelError::InvalidBounds {
                    var: v.name.clone(),
                    lower: v.lower,
                    upper: v.upper,
                });
            }
            if v.kind == VarKind::Binary && (v.lower < 0.0 || v.upper > 1.0) {
                return Err(ModelError::BinaryBounds { var: v.name.clone() });
            }
        }
        for &(v, c) in &self.objective {
            if v.0 >= self.vars.len() {
                return Err(ModelError::UnknownVariable(v.0));
            }
            if !c.is_finite() {
                return Err(ModelError::NonFiniteCoefficient { location: "objective".into() });
            }
        }
        Ok(())
    }

    pub fn objective_value(&self, values: &[f64]) -> f64 {
        self.objective_offset
            + self.objective.iter().map(|&(v, c)| c * values[v.0]).sum::<f64>()
    }

    /// Largest constraint or bound violation of an assignment.
    pub fn max_violation(&self, values: &[f64]) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, v) in self.vars.iter().enumerate() {
            worst = worst.max(v.lower - values[i]).max(values[i] - v.upper);
        }
        for c in &self.cons {
            let lhs: f64 = c.terms.iter().map(|&(v, k)| k * values[v.0]).sum();
            let viol = match c.op {
                CmpOp::Le => lhs - c.rhs,
                CmpOp::Ge => c.rhs - lhs,
                CmpOp::Eq => (lhs - c.rhs).abs(),
            };
            worst = worst.max(viol);
        }
        worst
    }

    /// Whether all binary variables sit within `tol` of an integer.
    pub fn is_integral(&self, values: &[f64], tol: f64) -> bool {
        self.binaries()
            .all(|v| (values[v.0] - values[v.0].round()).abs() <= tol)
    }

    /// Scan a solution for complementarity expressions near their big-M cap.
    pub fn audit_big_m(&self, values: &[f64]) -> Vec<BigMFlag> {
        let mut flags = Vec::new();
        for (i, pair) in self.comp_pairs.iter().enumerate() {
            let threshold = pair.big_m * (1.0 - 1e-3);
            let v = pair.var_expr.eval(values);
            if v >= threshold {
                flags.push(BigMFlag { pair: i, var_side: true, value: v, big_m: pair.big_m });
            }
            let s = pair.slack_expr.eval(values);
            if s >= threshold {
                flags.push(BigMFlag { pair: i, var_side: false, value: s, big_m: pair.big_m });
            }
        }
        flags
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
    LimitHit,
    NumericalFailure,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Unbounded => "unbounded",
            SolveStatus::LimitHit => "limit-hit",
            SolveStatus::NumericalFailure => "numerical-failure",
        };
        s.fmt(f)
    }
}

/// Result of an LP or MIP solve.
#[derive(Clone, Debug)]
pub struct Solution {
    pub status: SolveStatus,
    pub objective: f64,
    /// One value per model variable; meaningful when an incumbent exists.
    pub values: Vec<f64>,
    /// Per-constraint duals, present for pure LP solves at optimality.
    /// Sign convention: dual = d(objective)/d(rhs).
    pub duals: Option<Vec<f64>>,
    /// Best proven bound on the objective (equals `objective` at optimality).
    pub best_bound: f64,
    pub iterations: usize,
    pub nodes: usize,
}

impl Solution {
    pub fn failed(status: SolveStatus, n: usize) -> Self {
        Solution {
            status,
            objective: f64::NAN,
            values: vec![0.0; n],
            duals: None,
            best_bound: f64::NAN,
            iterations: 0,
            nodes: 0,
        }
    }
}
