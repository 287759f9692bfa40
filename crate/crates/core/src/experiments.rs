//! Parameter-sweep engine and the preset catalog of named,
//! deterministic experiments.
//!
//! A [`SimulationPlan`] bundles a topology, couplings, a time grid, and
//! a backend choice; [`run_plan`] turns it into a [`ChargeTimeSeries`].
//! Sweeps run the Cartesian product of axis values, reporting per-point
//! failures without aborting the rest. Everything here is `f64`-concrete
//! and deterministic: no randomness anywhere in the pipeline.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::evolution::{sample_trajectory, uncharged_state, EvolutionBackend};
use crate::hamiltonian::{battery_hamiltonian, driver_hamiltonian, ModelKind};
use crate::metrics::{battery_levels, ChargeTimeSeries};
use crate::topology::{
    self, closed_chain, cube_extension_12, cuboctahedron_12, icosahedron_12, open_chain,
    supercube, SpinTopology,
};
use crate::{Krylov, Params, Real};

/// Uniform sample grid over `[0, t_max]`, endpoints included.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct TimeGrid {
    pub t_max: Real,
    pub samples: usize,
}

impl TimeGrid {
    pub fn validate(&self) -> Result<()> {
        if self.samples < 2 {
            return Err(Error::domain(format!(
                "time grid needs at least 2 samples, got {}",
                self.samples
            )));
        }
        if !(self.t_max > 0.0) {
            return Err(Error::domain(format!(
                "time grid needs t_max > 0, got {}",
                self.t_max
            )));
        }
        Ok(())
    }

    pub fn times(&self) -> Vec<Real> {
        let last = (self.samples - 1) as Real;
        (0..self.samples)
            .map(|k| self.t_max * (k as Real) / last)
            .collect()
    }
}

/// Everything needed to produce one trajectory.
#[derive(Clone, Debug, PartialEq)]
pub struct SimulationPlan {
    pub topology: SpinTopology,
    pub params: Params,
    pub model_kind: ModelKind,
    pub time_grid: TimeGrid,
    pub backend: EvolutionBackend,
    pub krylov: Krylov,
}

impl SimulationPlan {
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.model_kind.check(&self.params)?;
        self.time_grid.validate()?;
        self.krylov.validate()?;
        Ok(())
    }

    fn label(&self) -> String {
        format!("{} on {}", self.model_kind.label(), self.topology.name())
    }
}

/// Run one plan: assemble the driver, evolve from the uncharged state,
/// and fill every metric column.
pub fn run_plan(plan: &SimulationPlan) -> Result<ChargeTimeSeries<Real>> {
    plan.validate()?;
    let n = plan.topology.n();
    let h = driver_hamiltonian(&plan.topology, &plan.params);
    let hb = battery_hamiltonian(n, &plan.params);
    let levels = battery_levels(&hb)?;
    let ground = levels.iter().copied().fold(Real::INFINITY, Real::min);
    let psi0 = uncharged_state::<Real>(n);
    let times = plan.time_grid.times();
    let traj = sample_trajectory(&h, &psi0, &times, plan.backend, &plan.krylov).map_err(|e| {
        match e {
            Error::Convergence(msg) => Error::Convergence(format!("{}: {msg}", plan.label())),
            other => other,
        }
    })?;
    let mut energy = Vec::with_capacity(times.len());
    let mut ergotropy = Vec::with_capacity(times.len());
    for psi in &traj {
        // <H_B> against the diagonal battery levels, O(dim) per sample.
        let e = psi
            .amplitudes()
            .iter()
            .zip(levels.iter())
            .map(|(a, &l)| a.norm_sqr() * l)
            .sum::<Real>();
        energy.push(e);
        ergotropy.push(e - ground);
    }
    ChargeTimeSeries::new(times, energy, ergotropy)
}

/// Model parameter a sweep may vary.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SweepParam {
    ExchangeJ,
    DeltaXy,
    DeltaZ,
    Dmi,
    Omega,
    Omega0,
    Lambda,
}

impl SweepParam {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "J" => Ok(SweepParam::ExchangeJ),
            "delta" => Ok(SweepParam::DeltaXy),
            "Delta" => Ok(SweepParam::DeltaZ),
            "D" => Ok(SweepParam::Dmi),
            "Omega" => Ok(SweepParam::Omega),
            "omega0" => Ok(SweepParam::Omega0),
            "lambda" | "λ" => Ok(SweepParam::Lambda),
            other => Err(Error::domain(format!(
                "unknown sweep parameter `{other}` (expected J, delta, Delta, D, Omega, omega0, or lambda)"
            ))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SweepParam::ExchangeJ => "J",
            SweepParam::DeltaXy => "delta",
            SweepParam::DeltaZ => "Delta",
            SweepParam::Dmi => "D",
            SweepParam::Omega => "Omega",
            SweepParam::Omega0 => "omega0",
            SweepParam::Lambda => "lambda",
        }
    }

    pub fn apply(self, params: &mut Params, value: Real) {
        match self {
            SweepParam::ExchangeJ => params.j = value,
            SweepParam::DeltaXy => params.delta_xy = value,
            SweepParam::DeltaZ => params.delta_z = value,
            SweepParam::Dmi => params.dmi = value,
            SweepParam::Omega => params.omega = value,
            SweepParam::Omega0 => params.omega0 = value,
            SweepParam::Lambda => params.lambda = value,
        }
    }
}

/// One sweep axis: a parameter and the values it takes.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepAxis {
    pub param: SweepParam,
    pub values: Vec<Real>,
}

/// A base plan plus axes; the sweep runs the Cartesian product.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub base: SimulationPlan,
    pub axes: Vec<SweepAxis>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        for axis in &self.axes {
            if axis.values.is_empty() {
                return Err(Error::domain(format!(
                    "sweep axis `{}` has no values",
                    axis.param.label()
                )));
            }
        }
        Ok(())
    }
}

/// One point of a sweep: the assignments applied to the base plan.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepPoint {
    pub assignments: Vec<(SweepParam, Real)>,
}

impl SweepPoint {
    /// Human-readable label, e.g. `D=1.7, lambda=0.5`.
    pub fn label(&self) -> String {
        self.assignments
            .iter()
            .map(|(p, v)| format!("{}={}", p.label(), v))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Filesystem-safe label, e.g. `D=1.7_lambda=0.5`.
    pub fn file_label(&self) -> String {
        self.assignments
            .iter()
            .map(|(p, v)| format!("{}={}", p.label(), v))
            .collect::<Vec<_>>()
            .join("_")
    }

    pub fn plan(&self, base: &SimulationPlan) -> SimulationPlan {
        let mut plan = base.clone();
        for (param, value) in &self.assignments {
            param.apply(&mut plan.params, *value);
        }
        plan
    }
}

/// Enumerate the Cartesian product of the axes, outermost axis first.
pub fn sweep_points(spec: &SweepSpec) -> Vec<SweepPoint> {
    let mut points = vec![SweepPoint {
        assignments: Vec::new(),
    }];
    for axis in &spec.axes {
        let mut next = Vec::with_capacity(points.len() * axis.values.len());
        for point in &points {
            for &v in &axis.values {
                let mut assignments = point.assignments.clone();
                assignments.push((axis.param, v));
                next.push(SweepPoint { assignments });
            }
        }
        points = next;
    }
    points
}

/// Run every point of a sweep. Failures are reported per point; the
/// remaining points still run.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<(SweepPoint, Result<ChargeTimeSeries<Real>>)>> {
    spec.validate()?;
    let points = sweep_points(spec);
    let mut out = Vec::with_capacity(points.len());
    for point in points {
        let result = run_plan(&point.plan(&spec.base));
        out.push((point, result));
    }
    Ok(out)
}

/// A named catalog entry: either a single plan or a sweep.
#[derive(Clone, Debug)]
pub enum PresetSpec {
    Plan(SimulationPlan),
    Sweep(SweepSpec),
}

/// Catalog entry with the figure panels it reproduces.
#[derive(Clone, Debug)]
pub struct Preset {
    pub name: String,
    pub summary: String,
    pub figures: Vec<u32>,
    pub spec: PresetSpec,
}

impl Preset {
    fn plan(name: impl Into<String>, summary: impl Into<String>, figures: &[u32], plan: SimulationPlan) -> Self {
        Preset {
            name: name.into(),
            summary: summary.into(),
            figures: figures.to_vec(),
            spec: PresetSpec::Plan(plan),
        }
    }

    fn sweep(name: impl Into<String>, summary: impl Into<String>, figures: &[u32], sweep: SweepSpec) -> Self {
        Preset {
            name: name.into(),
            summary: summary.into(),
            figures: figures.to_vec(),
            spec: PresetSpec::Sweep(sweep),
        }
    }
}

/// Grid step shared by all 8-qubit presets (pi/400), chosen so that the
/// Ising full-charge landmark t = pi/2 is an exact grid point.
fn ising_grid() -> TimeGrid {
    TimeGrid {
        t_max: PI,
        samples: 401,
    }
}

fn xxz_grid() -> TimeGrid {
    TimeGrid {
        t_max: 3.0 * PI,
        samples: 1201,
    }
}

fn twelve_qubit_grid() -> TimeGrid {
    TimeGrid {
        t_max: 3.0 * PI,
        samples: 301,
    }
}

fn ising_plan(topology: SpinTopology, dmi: Real, lambda: Real) -> SimulationPlan {
    SimulationPlan {
        topology,
        params: Params::ising(1.0, dmi, lambda),
        model_kind: ModelKind::Ising,
        time_grid: ising_grid(),
        backend: EvolutionBackend::Auto,
        krylov: Krylov::default(),
    }
}

fn xxz_plan(topology: SpinTopology, j: Real, dmi: Real, lambda: Real) -> SimulationPlan {
    SimulationPlan {
        topology,
        params: Params::xxz(j, 2.0, dmi, lambda),
        model_kind: ModelKind::Xxz,
        time_grid: xxz_grid(),
        backend: EvolutionBackend::Auto,
        krylov: Krylov::default(),
    }
}

fn xxz_12_plan(topology: SpinTopology, dmi: Real) -> SimulationPlan {
    SimulationPlan {
        topology,
        params: Params::xxz(1.0, 2.0, dmi, 0.0),
        model_kind: ModelKind::Xxz,
        time_grid: twelve_qubit_grid(),
        backend: EvolutionBackend::Auto,
        krylov: Krylov {
            subspace_dim: 48,
            step_size: 0.25,
            tolerance: 1e-10,
        },
    }
}

fn eight_qubit_topologies() -> [(&'static str, SpinTopology); 3] {
    [
        ("open", open_chain(8).expect("n = 8 is valid")),
        ("closed", closed_chain(8).expect("n = 8 is valid")),
        ("supercube", supercube()),
    ]
}

/// The full preset registry, in deterministic order.
pub fn preset_catalog() -> Vec<Preset> {
    let mut out = Vec::new();

    // Single-plan presets: Ising, D in {0, 5, 10}, lambda in {0, 0.5, 1}.
    for (tag, topo) in eight_qubit_topologies() {
        for d in [0.0, 5.0, 10.0] {
            for l in [0.0, 0.5, 1.0] {
                out.push(Preset::plan(
                    format!("ising-{tag}-D{d}-λ{l}"),
                    format!("Ising chain on {tag}, D = {d}, lambda = {l}"),
                    if d == 0.0 { &[2, 3] } else { &[4, 5] },
                    ising_plan(topo.clone(), d, l),
                ));
            }
        }
    }

    // Single-plan presets: XXZ (Delta = 2), D in {0, 1.7}.
    for (tag, topo) in eight_qubit_topologies() {
        for d in [0.0, 1.7] {
            for l in [0.0, 0.5, 1.0] {
                out.push(Preset::plan(
                    format!("xxz-{tag}-D{d}-λ{l}"),
                    format!("XXZ chain on {tag}, D = {d}, lambda = {l}"),
                    &[6, 7],
                    xxz_plan(topo.clone(), 1.0, d, l),
                ));
            }
        }
    }

    // Off-resonance coupling for the supercube optimum.
    out.push(Preset::plan(
        "xxz-supercube-J3-D1.7-λ0",
        "XXZ supercube off the J = 1 resonance (J = 3, D = 1.7)",
        &[8],
        xxz_plan(supercube(), 3.0, 1.7, 0.0),
    ));

    // Diagonal-augmented supercubes at the optimum couplings.
    for (topo_name, summary) in [
        ("supercube-body2", "two cross-body diagonals added"),
        ("supercube-body4", "all four body diagonals added"),
        ("supercube-facetop", "top-face diagonals added"),
        ("supercube-faceall", "all face diagonals added"),
        ("supercube-body4-faceall", "all body and face diagonals added"),
    ] {
        let topo = topology::by_name(topo_name).expect("catalog topology");
        out.push(Preset::plan(
            format!("xxz-{topo_name}-D1.7-λ0"),
            format!("XXZ supercube with {summary} (J = 1, D = 1.7)"),
            &[9],
            xxz_plan(topo, 1.0, 1.7, 0.0),
        ));
    }

    // Twelve-qubit geometries.
    out.push(Preset::plan(
        "xxz-cube-extension-D1.7",
        "XXZ on two face-sharing cubes (12 qubits, J = 1, D = 1.7)",
        &[10],
        xxz_12_plan(cube_extension_12(), 1.7),
    ));
    out.push(Preset::plan(
        "xxz-cuboctahedron-D1.94",
        "XXZ on the cuboctahedron skeleton (12 qubits, J = 1, D = 1.94)",
        &[10],
        xxz_12_plan(cuboctahedron_12(), 1.94),
    ));
    out.push(Preset::plan(
        "xxz-icosahedron-D2.06",
        "XXZ on the icosahedron skeleton (12 qubits, J = 1, D = 2.06)",
        &[10],
        xxz_12_plan(icosahedron_12(), 2.06),
    ));

    // Sweep presets.
    for (tag, topo) in eight_qubit_topologies() {
        out.push(Preset::sweep(
            format!("ising-{tag}-λ-sweep"),
            format!("Ising on {tag}, lambda in {{0, 0.5, 1}} at D = 0"),
            &[2, 3],
            SweepSpec {
                base: ising_plan(topo.clone(), 0.0, 0.0),
                axes: vec![SweepAxis {
                    param: SweepParam::Lambda,
                    values: vec![0.0, 0.5, 1.0],
                }],
            },
        ));
        out.push(Preset::sweep(
            format!("ising-{tag}-D-sweep"),
            format!("Ising on {tag}, D in {{0, 5, 10}} at lambda = 0"),
            &[4, 5],
            SweepSpec {
                base: ising_plan(topo.clone(), 0.0, 0.0),
                axes: vec![SweepAxis {
                    param: SweepParam::Dmi,
                    values: vec![0.0, 5.0, 10.0],
                }],
            },
        ));
        out.push(Preset::sweep(
            format!("xxz-{tag}-D-sweep"),
            format!("XXZ on {tag}, D in {{0, 1.7}} at lambda = 0"),
            &[6, 7],
            SweepSpec {
                base: xxz_plan(topo.clone(), 1.0, 0.0, 0.0),
                axes: vec![SweepAxis {
                    param: SweepParam::Dmi,
                    values: vec![0.0, 1.7],
                }],
            },
        ));
        out.push(Preset::sweep(
            format!("xxz-{tag}-λ-sweep-D1.7"),
            format!("XXZ on {tag}, lambda in {{0, 0.5, 1}} at D = 1.7"),
            &[6, 7],
            SweepSpec {
                base: xxz_plan(topo.clone(), 1.0, 1.7, 0.0),
                axes: vec![SweepAxis {
                    param: SweepParam::Lambda,
                    values: vec![0.0, 0.5, 1.0],
                }],
            },
        ));
    }
    out.push(Preset::sweep(
        "xxz-supercube-D-scan",
        "XXZ supercube, D scan bracketing the optimum at J = 1",
        &[8],
        SweepSpec {
            base: xxz_plan(supercube(), 1.0, 0.0, 0.0),
            axes: vec![SweepAxis {
                param: SweepParam::Dmi,
                values: vec![0.0, 0.5, 1.0, 1.7, 2.5],
            }],
        },
    ));
    out.push(Preset::sweep(
        "xxz-supercube-J-scan",
        "XXZ supercube, J scan at D = 1.7",
        &[8],
        SweepSpec {
            base: xxz_plan(supercube(), 1.0, 1.7, 0.0),
            axes: vec![SweepAxis {
                param: SweepParam::ExchangeJ,
                values: vec![0.5, 1.0, 2.0, 3.0],
            }],
        },
    ));

    out
}

/// Paper figure panels the registry must cover (checked by tests).
pub const FIGURE_LIST: [u32; 9] = [2, 3, 4, 5, 6, 7, 8, 9, 10];

/// Accept the ASCII alias `lambda` for the `λ` used in canonical names.
fn normalize_preset_name(name: &str) -> String {
    name.replace("lambda", "λ")
}

/// All canonical preset names, in catalog order.
pub fn preset_names() -> Vec<String> {
    preset_catalog().into_iter().map(|p| p.name).collect()
}

/// Look up a preset by name (unicode λ or ASCII `lambda`).
pub fn find_preset(name: &str) -> Result<Preset> {
    let wanted = normalize_preset_name(name);
    preset_catalog()
        .into_iter()
        .find(|p| p.name == wanted)
        .ok_or_else(|| Error::UnknownName {
            kind: "preset",
            name: name.to_string(),
            listing: preset_names().join("\n"),
        })
}
