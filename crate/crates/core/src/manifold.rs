//! Chart-based representation of compact Lipschitz manifolds.
//!
//! A manifold is a finite atlas of bi-Lipschitz charts from ambient space
//! onto open boxes or balls in chart coordinates. Charts are graph-style
//! (one ambient coordinate block solved over the others) restricted so that
//! slopes stay bounded, which makes the declared Lipschitz constants
//! explicit and verifiable by sampling. The square boundary carries
//! arc-length corner charts and is the standing example of a manifold that
//! is Lipschitz but not differentiable.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::matrixset::Matrix;

/// Ambient distance below which a point counts as lying on the manifold.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

pub type PointFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;
pub type PredFn = Arc<dyn Fn(&[f64]) -> bool + Send + Sync>;
pub type JacFn = Arc<dyn Fn(&[f64]) -> Matrix + Send + Sync>;
pub type DistFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Open region of chart coordinates.
#[derive(Clone, Debug)]
pub enum Codomain {
    Box(Vec<(f64, f64)>),
    Ball { center: Vec<f64>, radius: f64 },
    Product(Vec<Codomain>),
}

impl Codomain {
    pub fn dim(&self) -> usize {
        match self {
            Codomain::Box(b) => b.len(),
            Codomain::Ball { center, .. } => center.len(),
            Codomain::Product(parts) => parts.iter().map(Codomain::dim).sum(),
        }
    }

    pub fn contains(&self, v: &[f64]) -> bool {
        match self {
            Codomain::Box(b) => v
                .iter()
                .zip(b.iter())
                .all(|(x, &(lo, hi))| *x > lo && *x < hi),
            Codomain::Ball { center, radius } => {
                let d2: f64 = v
                    .iter()
                    .zip(center.iter())
                    .map(|(x, c)| (x - c) * (x - c))
                    .sum();
                d2 < radius * radius
            }
            Codomain::Product(parts) => {
                let mut off = 0;
                parts.iter().all(|p| {
                    let k = p.dim();
                    let ok = p.contains(&v[off..off + k]);
                    off += k;
                    ok
                })
            }
        }
    }

    /// Distance from `v` to the boundary (0 outside).
    pub fn margin(&self, v: &[f64]) -> f64 {
        match self {
            Codomain::Box(b) => b
                .iter()
                .zip(v.iter())
                .map(|(&(lo, hi), &x)| (x - lo).min(hi - x))
                .fold(f64::INFINITY, f64::min)
                .max(0.0),
            Codomain::Ball { center, radius } => {
                let d: f64 = v
                    .iter()
                    .zip(center.iter())
                    .map(|(x, c)| (x - c) * (x - c))
                    .sum::<f64>()
                    .sqrt();
                (radius - d).max(0.0)
            }
            Codomain::Product(parts) => {
                let mut off = 0;
                let mut m = f64::INFINITY;
                for p in parts {
                    let k = p.dim();
                    m = m.min(p.margin(&v[off..off + k]));
                    off += k;
                }
                m
            }
        }
    }

    pub fn volume(&self) -> f64 {
        match self {
            Codomain::Box(b) => b.iter().map(|&(lo, hi)| hi - lo).product(),
            Codomain::Ball { center, radius } => {
                // unit-ball volumes for the dimensions used here
                let d = center.len();
                let unit = match d {
                    1 => 2.0,
                    2 => PI,
                    3 => 4.0 * PI / 3.0,
                    _ => PI.powi(d as i32 / 2) / (1..=d / 2).map(|k| k as f64).product::<f64>(),
                };
                unit * radius.powi(d as i32)
            }
            Codomain::Product(parts) => parts.iter().map(Codomain::volume).product(),
        }
    }

    /// Axis-aligned bounding box.
    fn bounding_box(&self) -> Vec<(f64, f64)> {
        match self {
            Codomain::Box(b) => b.clone(),
            Codomain::Ball { center, radius } => center
                .iter()
                .map(|&c| (c - radius, c + radius))
                .collect(),
            Codomain::Product(parts) => {
                let mut out = Vec::new();
                for p in parts {
                    out.extend(p.bounding_box());
                }
                out
            }
        }
    }

    /// Regular centered grid of step `h` restricted to the open region.
    pub fn grid(&self, h: f64) -> Vec<Vec<f64>> {
        let bb = self.bounding_box();
        let dim = bb.len();
        let mut axes: Vec<Vec<f64>> = Vec::with_capacity(dim);
        for &(lo, hi) in bb.iter() {
            let width = hi - lo;
            let k = (width / h).floor() as usize;
            let mut ticks = Vec::with_capacity(k + 1);
            if k == 0 {
                ticks.push(0.5 * (lo + hi));
            } else {
                let start = lo + 0.5 * (width - (k - 1) as f64 * h);
                for i in 0..k {
                    ticks.push(start + i as f64 * h);
                }
            }
            axes.push(ticks);
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; dim];
        'outer: loop {
            let p: Vec<f64> = idx.iter().enumerate().map(|(a, &i)| axes[a][i]).collect();
            if self.contains(&p) {
                out.push(p);
            }
            for a in 0..dim {
                idx[a] += 1;
                if idx[a] < axes[a].len() {
                    continue 'outer;
                }
                idx[a] = 0;
            }
            break;
        }
        out
    }
}

/// Bi-Lipschitz chart from an open neighborhood on the manifold onto an open
/// region of chart coordinates.
#[derive(Clone)]
pub struct Chart {
    pub name: String,
    forward: PointFn,
    inverse: PointFn,
    /// Jacobian of the inverse map (ambient_dim x d), where defined.
    inverse_jacobian: Option<JacFn>,
    /// Differentiability test for the inverse map in chart coordinates.
    inverse_differentiable: Option<PredFn>,
    domain_test: PredFn,
    pub codomain: Codomain,
    pub lip_forward: f64,
    pub lip_inverse: f64,
}

impl Chart {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        forward: PointFn,
        inverse: PointFn,
        inverse_jacobian: Option<JacFn>,
        inverse_differentiable: Option<PredFn>,
        domain_test: PredFn,
        codomain: Codomain,
        lip_forward: f64,
        lip_inverse: f64,
    ) -> Self {
        Self {
            name: name.into(),
            forward,
            inverse,
            inverse_jacobian,
            inverse_differentiable,
            domain_test,
            codomain,
            lip_forward,
            lip_inverse,
        }
    }

    pub fn forward(&self, u: &[f64]) -> Vec<f64> {
        (self.forward)(u)
    }

    pub fn inverse(&self, v: &[f64]) -> Vec<f64> {
        (self.inverse)(v)
    }

    pub fn contains(&self, u: &[f64]) -> bool {
        (self.domain_test)(u)
    }

    pub fn inverse_jacobian_fn(&self) -> Option<JacFn> {
        self.inverse_jacobian.clone()
    }

    pub fn inverse_differentiable_fn(&self) -> Option<PredFn> {
        self.inverse_differentiable.clone()
    }

    pub fn dim(&self) -> usize {
        self.codomain.dim()
    }
}

/// Compact Lipschitz manifold with a finite atlas.
#[derive(Clone)]
pub struct LipschitzManifold {
    pub name: String,
    pub ambient_dim: usize,
    pub intrinsic_dim: usize,
    charts: Vec<Chart>,
    /// Ambient distance estimate to the manifold, used by the membership test.
    distance: DistFn,
}

impl LipschitzManifold {
    pub fn new(
        name: impl Into<String>,
        ambient_dim: usize,
        intrinsic_dim: usize,
        charts: Vec<Chart>,
        distance: DistFn,
    ) -> Self {
        assert!(!charts.is_empty(), "atlas must be non-empty");
        Self {
            name: name.into(),
            ambient_dim,
            intrinsic_dim,
            charts,
            distance,
        }
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }

    pub fn distance_to(&self, u: &[f64]) -> f64 {
        (self.distance)(u)
    }

    pub fn is_member(&self, u: &[f64]) -> bool {
        self.distance_to(u) <= MEMBERSHIP_TOL
    }

    /// `max` over charts of `Lip(psi) + Lip(psi^-1)`; finite because the
    /// atlas is finite.
    pub fn lip_m(&self) -> f64 {
        self.charts
            .iter()
            .map(|c| c.lip_forward + c.lip_inverse)
            .fold(0.0, f64::max)
    }

    /// All charts whose domain contains `u`. Errors if `u` is off the
    /// manifold or uncovered (an atlas bug).
    pub fn charts_containing(&self, u: &[f64]) -> Result<Vec<&Chart>> {
        let dist = self.distance_to(u);
        if dist > MEMBERSHIP_TOL {
            return Err(Error::NotOnManifold { dist });
        }
        let found: Vec<&Chart> = self.charts.iter().filter(|c| c.contains(u)).collect();
        if found.is_empty() {
            return Err(Error::NoChart);
        }
        Ok(found)
    }

    /// Deterministic quasi-uniform sample of about `n_points` ambient points:
    /// each chart codomain is gridded, mapped through the inverse, and the
    /// union deduplicated; the grid step is calibrated so the deduplicated
    /// count lands within 5% of the request. The grids are centered and
    /// seed-independent; the seed parameter is accepted for interface
    /// uniformity with the sampled estimators.
    pub fn sample(&self, n_points: usize, _seed: u64) -> Vec<Vec<f64>> {
        assert!(n_points >= 1);
        let d = self.intrinsic_dim as f64;
        let total_vol: f64 = self.charts.iter().map(|c| c.codomain.volume()).sum();
        let max_lip_f = self
            .charts
            .iter()
            .map(|c| c.lip_forward)
            .fold(1.0, f64::max);

        let mut h = (total_vol / n_points as f64).powf(1.0 / d);
        let mut best: Option<Vec<Vec<f64>>> = None;
        let mut best_err = usize::MAX;
        for _ in 0..24 {
            let pts = self.sample_with_step(h, max_lip_f);
            let err = pts.len().abs_diff(n_points);
            if err < best_err {
                best_err = err;
                best = Some(pts.clone());
            }
            if (err as f64) <= 0.04 * n_points as f64 {
                break;
            }
            let count = pts.len().max(1) as f64;
            h *= (count / n_points as f64).powf(1.0 / d).clamp(0.6, 1.6);
        }
        best.unwrap()
    }

    fn sample_with_step(&self, h: f64, max_lip_f: f64) -> Vec<Vec<f64>> {
        let dedup_r = 0.45 * h / max_lip_f;
        let mut kept: Vec<Vec<f64>> = Vec::new();
        let mut grid: std::collections::HashMap<Vec<i64>, Vec<usize>> =
            std::collections::HashMap::new();
        let cell = dedup_r.max(1e-12);
        for chart in self.charts.iter() {
            for v in chart.codomain.grid(h) {
                let u = chart.inverse(&v);
                let key: Vec<i64> = u.iter().map(|&x| (x / cell).floor() as i64).collect();
                let mut dup = false;
                'nb: for delta in neighbor_offsets(u.len()) {
                    let nk: Vec<i64> = key.iter().zip(delta.iter()).map(|(k, d)| k + d).collect();
                    if let Some(ids) = grid.get(&nk) {
                        for &id in ids {
                            let d2: f64 = kept[id]
                                .iter()
                                .zip(u.iter())
                                .map(|(a, b)| (a - b) * (a - b))
                                .sum();
                            if d2 < dedup_r * dedup_r {
                                dup = true;
                                break 'nb;
                            }
                        }
                    }
                }
                if !dup {
                    grid.entry(key).or_default().push(kept.len());
                    kept.push(u);
                }
            }
        }
        kept
    }

    /// Product manifold `M x A` for an open box `A`; charts are the products
    /// of `M`'s charts with the identity on `A`.
    pub fn product_with_open_set(&self, open_box: &[(f64, f64)]) -> LipschitzManifold {
        let n = self.ambient_dim;
        let k = open_box.len();
        let box_owned: Vec<(f64, f64)> = open_box.to_vec();
        let charts = self
            .charts
            .iter()
            .map(|c| {
                let fwd = c.forward.clone();
                let inv = c.inverse.clone();
                let dom = c.domain_test.clone();
                let jac = c.inverse_jacobian.clone();
                let diff = c.inverse_differentiable.clone();
                let codomain = Codomain::Product(vec![
                    c.codomain.clone(),
                    Codomain::Box(box_owned.clone()),
                ]);
                let d = c.dim();
                let bx = box_owned.clone();
                Chart::new(
                    format!("{}*box", c.name),
                    Arc::new(move |uy: &[f64]| {
                        let mut out = fwd(&uy[..n]);
                        out.extend_from_slice(&uy[n..]);
                        out
                    }),
                    Arc::new(move |vy: &[f64]| {
                        let mut out = inv(&vy[..d]);
                        out.extend_from_slice(&vy[d..]);
                        out
                    }),
                    jac.map(|j| -> JacFn {
                        Arc::new(move |vy: &[f64]| {
                            let base = j(&vy[..d]);
                            let mut out = DMatrix::zeros(n + k, d + k);
                            out.view_mut((0, 0), (n, d)).copy_from(base.as_dmatrix());
                            for a in 0..k {
                                out[(n + a, d + a)] = 1.0;
                            }
                            Matrix::from_dmatrix(out).expect("finite block Jacobian")
                        })
                    }),
                    diff.map(|p| -> PredFn { Arc::new(move |vy: &[f64]| p(&vy[..d])) }),
                    Arc::new(move |uy: &[f64]| {
                        dom(&uy[..n])
                            && uy[n..]
                                .iter()
                                .zip(bx.iter())
                                .all(|(y, &(lo, hi))| *y > lo && *y < hi)
                    }),
                    codomain,
                    c.lip_forward.max(1.0),
                    c.lip_inverse.max(1.0),
                )
            })
            .collect();
        let dist = self.distance.clone();
        let bx = box_owned.clone();
        LipschitzManifold::new(
            format!("{}*box", self.name),
            n + k,
            self.intrinsic_dim + k,
            charts,
            Arc::new(move |uy: &[f64]| {
                let dm = dist(&uy[..n]);
                let db = uy[n..]
                    .iter()
                    .zip(bx.iter())
                    .map(|(y, &(lo, hi))| {
                        if *y <= lo {
                            lo - *y
                        } else if *y >= hi {
                            *y - hi
                        } else {
                            0.0
                        }
                    })
                    .fold(0.0f64, f64::max);
                dm.max(db)
            }),
        )
    }
}

fn neighbor_offsets(dim: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        let mut next = Vec::with_capacity(out.len() * 3);
        for base in &out {
            for d in [-1i64, 0, 1] {
                let mut b = base.clone();
                b.push(d);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

/// Registered built-in manifolds.
pub fn builtin(name: &str) -> Result<LipschitzManifold> {
    match name {
        "circle" => Ok(circle()),
        "sphere" => Ok(sphere()),
        "square_boundary" => Ok(square_boundary()),
        "torus" => Ok(torus()),
        other => Err(Error::UnknownManifold(other.to_string())),
    }
}

pub fn builtin_names() -> &'static [&'static str] {
    &["circle", "sphere", "square_boundary", "torus"]
}

/// Half-width of the graph-chart codomains on the circle.
pub const CIRCLE_CHART_HALF_WIDTH: f64 = 0.8;
/// Radius of the graph-chart codomain disks on the sphere. Chosen so that
/// every point whose two free coordinates have squared norm up to 0.846 is
/// still inside a chart; the six-chart cover then has generous overlap.
pub const SPHERE_CHART_RADIUS: f64 = 0.92;

/// Unit circle in the plane: four graph charts, each solving one coordinate
/// over the other on |t| < 0.8 where slopes stay below 4/3.
pub fn circle() -> LipschitzManifold {
    let b = CIRCLE_CHART_HALF_WIDTH;
    let lip_inverse = (1.0 + (b / (1.0 - b * b).sqrt()).powi(2)).sqrt(); // = 5/3
    let mut charts = Vec::new();
    for (free, sign) in [(0usize, 1.0f64), (0, -1.0), (1, 1.0), (1, -1.0)] {
        let solved = 1 - free;
        charts.push(Chart::new(
            format!(
                "graph_u{}={}sqrt",
                solved + 1,
                if sign > 0.0 { "+" } else { "-" }
            ),
            Arc::new(move |u: &[f64]| vec![u[free]]),
            Arc::new(move |v: &[f64]| {
                let t = v[0];
                let mut u = [0.0; 2];
                u[free] = t;
                u[solved] = sign * (1.0 - t * t).sqrt();
                u.to_vec()
            }),
            Some(Arc::new(move |v: &[f64]| {
                let t = v[0];
                let w = (1.0 - t * t).sqrt();
                let mut col = [0.0; 2];
                col[free] = 1.0;
                col[solved] = -sign * t / w;
                Matrix::from_rows(2, 1, &col).expect("finite chart slope")
            }) as JacFn),
            None, // smooth on the whole codomain
            Arc::new(move |u: &[f64]| u[free].abs() < b && sign * u[solved] > 0.0),
            Codomain::Box(vec![(-b, b)]),
            1.0,
            lip_inverse,
        ));
    }
    LipschitzManifold::new(
        "circle",
        2,
        1,
        charts,
        Arc::new(|u: &[f64]| ((u[0] * u[0] + u[1] * u[1]).sqrt() - 1.0).abs()),
    )
}

/// Unit sphere in three-space: six hemisphere graph charts over disks of
/// radius [`SPHERE_CHART_RADIUS`].
pub fn sphere() -> LipschitzManifold {
    let rho = SPHERE_CHART_RADIUS;
    let lip_inverse = 1.0 / (1.0 - rho * rho).sqrt();
    let mut charts = Vec::new();
    for solved in 0usize..3 {
        let free: [usize; 2] = match solved {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        for sign in [1.0f64, -1.0] {
            charts.push(Chart::new(
                format!("graph_u{}{}", solved + 1, if sign > 0.0 { "+" } else { "-" }),
                Arc::new(move |u: &[f64]| vec![u[free[0]], u[free[1]]]),
                Arc::new(move |v: &[f64]| {
                    let w = (1.0 - v[0] * v[0] - v[1] * v[1]).sqrt();
                    let mut u = [0.0; 3];
                    u[free[0]] = v[0];
                    u[free[1]] = v[1];
                    u[solved] = sign * w;
                    u.to_vec()
                }),
                Some(Arc::new(move |v: &[f64]| {
                    let w = (1.0 - v[0] * v[0] - v[1] * v[1]).sqrt();
                    let mut jac = DMatrix::zeros(3, 2);
                    jac[(free[0], 0)] = 1.0;
                    jac[(free[1], 1)] = 1.0;
                    jac[(solved, 0)] = -sign * v[0] / w;
                    jac[(solved, 1)] = -sign * v[1] / w;
                    Matrix::from_dmatrix(jac).expect("finite chart slope")
                }) as JacFn),
                None,
                Arc::new(move |u: &[f64]| {
                    sign * u[solved] > 0.0
                        && u[free[0]] * u[free[0]] + u[free[1]] * u[free[1]] < rho * rho
                }),
                Codomain::Ball {
                    center: vec![0.0, 0.0],
                    radius: rho,
                },
                1.0,
                lip_inverse,
            ));
        }
    }
    LipschitzManifold::new(
        "sphere",
        3,
        2,
        charts,
        Arc::new(|u: &[f64]| (u.iter().map(|x| x * x).sum::<f64>().sqrt() - 1.0).abs()),
    )
}

/// Boundary of the square [-1, 1]^2: four edge charts and four arc-length
/// corner charts. The corner charts are the genuinely nonsmooth case: the
/// inverse parametrization has a kink at the corner.
pub fn square_boundary() -> LipschitzManifold {
    let mut charts = Vec::new();
    let edge_half = 0.9;
    // Edge charts: (axis held at +-1, free coordinate in (-0.9, 0.9)).
    for (fixed_axis, fixed_val) in [(0usize, 1.0f64), (0, -1.0), (1, 1.0), (1, -1.0)] {
        let free_axis = 1 - fixed_axis;
        charts.push(Chart::new(
            format!("edge_u{}={}", fixed_axis + 1, fixed_val),
            Arc::new(move |u: &[f64]| vec![u[free_axis]]),
            Arc::new(move |v: &[f64]| {
                let mut u = [0.0; 2];
                u[fixed_axis] = fixed_val;
                u[free_axis] = v[0];
                u.to_vec()
            }),
            Some(Arc::new(move |_v: &[f64]| {
                let mut col = [0.0; 2];
                col[free_axis] = 1.0;
                Matrix::from_rows(2, 1, &col).expect("constant edge slope")
            }) as JacFn),
            None,
            Arc::new(move |u: &[f64]| {
                (u[fixed_axis] - fixed_val).abs() <= MEMBERSHIP_TOL
                    && u[free_axis].abs() < edge_half
            }),
            Codomain::Box(vec![(-edge_half, edge_half)]),
            1.0,
            1.0,
        ));
    }
    // Corner charts: arc-length across each corner, t in (-0.8, 0.8).
    // At corner (cx, cy): t <= 0 walks along the edge where the coordinate
    // `enter` varies; t >= 0 walks along the edge where `exit` varies.
    let corner_half = 0.8;
    for (cx, cy) in [(1.0f64, 1.0f64), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
        let corner = [cx, cy];
        charts.push(Chart::new(
            format!("corner_({cx},{cy})"),
            Arc::new(move |u: &[f64]| {
                // Side where x = cx: parameter is how far y sits short of cy.
                if (u[0] - corner[0]).abs() <= MEMBERSHIP_TOL {
                    vec![-(corner[1] - u[1]).abs()]
                } else {
                    vec![(corner[0] - u[0]).abs()]
                }
            }),
            Arc::new(move |v: &[f64]| {
                let t = v[0];
                if t <= 0.0 {
                    vec![corner[0], corner[1] - corner[1].signum() * (-t)]
                } else {
                    vec![corner[0] - corner[0].signum() * t, corner[1]]
                }
            }),
            Some(Arc::new(move |v: &[f64]| {
                let t = v[0];
                let col = if t <= 0.0 {
                    [0.0, corner[1].signum()]
                } else {
                    [-corner[0].signum(), 0.0]
                };
                Matrix::from_rows(2, 1, &col).expect("constant corner slope")
            }) as JacFn),
            Some(Arc::new(|v: &[f64]| v[0] != 0.0) as PredFn),
            Arc::new(move |u: &[f64]| {
                let on_x_side = (u[0] - corner[0]).abs() <= MEMBERSHIP_TOL
                    && (corner[1] - u[1]).abs() < corner_half
                    && corner[1] * u[1] > 0.0;
                let on_y_side = (u[1] - corner[1]).abs() <= MEMBERSHIP_TOL
                    && (corner[0] - u[0]).abs() < corner_half
                    && corner[0] * u[0] > 0.0;
                on_x_side || on_y_side
            }),
            Codomain::Box(vec![(-corner_half, corner_half)]),
            // Chord-to-arc ratio across a right-angle corner reaches sqrt(2).
            std::f64::consts::SQRT_2,
            1.0,
        ));
    }
    LipschitzManifold::new(
        "square_boundary",
        2,
        1,
        charts,
        Arc::new(|u: &[f64]| (u[0].abs().max(u[1].abs()) - 1.0).abs()),
    )
}

/// Torus of radii R = 2, r = 1/2 around the z axis: sixteen angular charts
/// over overlapping windows.
pub fn torus() -> LipschitzManifold {
    const R: f64 = 2.0;
    const RT: f64 = 0.5;
    let half = 1.1; // window half-width in each angle
    let mut charts = Vec::new();
    for it in 0..4 {
        for ip in 0..4 {
            let theta0 = it as f64 * PI / 2.0;
            let phi0 = ip as f64 * PI / 2.0;
            charts.push(Chart::new(
                format!("angles_({it},{ip})"),
                Arc::new(move |u: &[f64]| {
                    let theta = u[1].atan2(u[0]);
                    let rho = (u[0] * u[0] + u[1] * u[1]).sqrt();
                    let phi = u[2].atan2(rho - R);
                    vec![wrap_angle(theta - theta0), wrap_angle(phi - phi0)]
                }),
                Arc::new(move |v: &[f64]| {
                    let theta = theta0 + v[0];
                    let phi = phi0 + v[1];
                    let rho = R + RT * phi.cos();
                    vec![rho * theta.cos(), rho * theta.sin(), RT * phi.sin()]
                }),
                Some(Arc::new(move |v: &[f64]| {
                    let theta = theta0 + v[0];
                    let phi = phi0 + v[1];
                    let rho = R + RT * phi.cos();
                    let jac = DMatrix::from_row_slice(
                        3,
                        2,
                        &[
                            -rho * theta.sin(),
                            -RT * phi.sin() * theta.cos(),
                            rho * theta.cos(),
                            -RT * phi.sin() * theta.sin(),
                            0.0,
                            RT * phi.cos(),
                        ],
                    );
                    Matrix::from_dmatrix(jac).expect("finite torus slope")
                }) as JacFn),
                None,
                Arc::new(move |u: &[f64]| {
                    let theta = u[1].atan2(u[0]);
                    let rho = (u[0] * u[0] + u[1] * u[1]).sqrt();
                    let phi = u[2].atan2(rho - R);
                    wrap_angle(theta - theta0).abs() < half && wrap_angle(phi - phi0).abs() < half
                }),
                Codomain::Box(vec![(-half, half), (-half, half)]),
                2.6,
                2.6,
            ));
        }
    }
    LipschitzManifold::new(
        "torus",
        3,
        2,
        charts,
        Arc::new(|u: &[f64]| {
            let rho = (u[0] * u[0] + u[1] * u[1]).sqrt();
            (((rho - R) * (rho - R) + u[2] * u[2]).sqrt() - RT).abs()
        }),
    )
}

fn wrap_angle(a: f64) -> f64 {
    let mut x = a % (2.0 * PI);
    if x > PI {
        x -= 2.0 * PI;
    } else if x < -PI {
        x += 2.0 * PI;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn builtin_registry() {
        let c = builtin("circle").unwrap();
        assert_eq!((c.intrinsic_dim, c.ambient_dim, c.charts().len()), (1, 2, 4));
        let s = builtin("sphere").unwrap();
        assert_eq!((s.intrinsic_dim, s.ambient_dim, s.charts().len()), (2, 3, 6));
        let q = builtin("square_boundary").unwrap();
        assert_eq!((q.intrinsic_dim, q.ambient_dim, q.charts().len()), (1, 2, 8));
        let t = builtin("torus").unwrap();
        assert_eq!((t.intrinsic_dim, t.ambient_dim), (2, 3));
        assert!(builtin("nope").is_err());
    }

    #[test]
    fn lip_m_values() {
        let c = builtin("circle").unwrap();
        assert_relative_eq!(c.lip_m(), 1.0 + 5.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn charts_containing_examples() {
        let c = builtin("circle").unwrap();
        let found = c.charts_containing(&[1.0, 0.0]).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].name.contains("u1=+"));

        let s = builtin("sphere").unwrap();
        let found = s.charts_containing(&[0.0, 0.0, 1.0]).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].name, "graph_u3+");

        let q = builtin("square_boundary").unwrap();
        let found = q.charts_containing(&[1.0, 1.0]).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].name.starts_with("corner_(1,1)"));

        assert!(matches!(
            c.charts_containing(&[2.0, 0.0]),
            Err(Error::NotOnManifold { .. })
        ));
    }

    #[test]
    fn corner_chart_round_trip_across_kink() {
        let q = builtin("square_boundary").unwrap();
        let chart = q
            .charts()
            .iter()
            .find(|c| c.name.starts_with("corner_(1,1)"))
            .unwrap();
        for &t in &[-0.7, -0.3, 0.0, 0.4, 0.79] {
            let u = chart.inverse(&[t]);
            assert!(q.is_member(&u), "corner image {u:?} off the square");
            let back = chart.forward(&u);
            assert_relative_eq!(back[0], t, epsilon = 1e-12);
        }
    }

    #[test]
    fn sampling_counts_and_membership() {
        let c = builtin("circle").unwrap();
        let pts = c.sample(4, 7);
        assert_eq!(pts.len(), 4);
        for p in &pts {
            assert!(c.distance_to(p) <= MEMBERSHIP_TOL);
        }

        let q = builtin("square_boundary").unwrap();
        let pts = q.sample(8, 11);
        assert_eq!(pts.len(), 8);
        for p in &pts {
            assert!(q.distance_to(p) <= MEMBERSHIP_TOL);
        }
    }

    #[test]
    fn sphere_sampling_hits_request_within_tolerance() {
        let s = builtin("sphere").unwrap();
        let pts = s.sample(1000, 3);
        assert!(
            (pts.len() as i64 - 1000).unsigned_abs() as f64 <= 50.0,
            "got {} points",
            pts.len()
        );
        for p in &pts {
            assert!(s.distance_to(p) <= MEMBERSHIP_TOL);
        }
    }

    #[test]
    fn product_manifold_shape() {
        let c = builtin("circle").unwrap();
        let p = c.product_with_open_set(&[(-1.0, 1.0)]);
        assert_eq!((p.intrinsic_dim, p.ambient_dim), (2, 3));
        let s = builtin("sphere").unwrap();
        let p2 = s.product_with_open_set(&[(0.0, 1.0), (0.0, 1.0)]);
        assert_eq!(p2.intrinsic_dim, 4);

        // chart round trip through the product
        let chart = &p.charts()[0];
        let v = [0.3, 0.25];
        let u = chart.inverse(&v);
        assert_eq!(u.len(), 3);
        let back = chart.forward(&u);
        assert_relative_eq!(back[0], v[0], epsilon = 1e-12);
        assert_relative_eq!(back[1], v[1], epsilon = 1e-12);
    }
}
