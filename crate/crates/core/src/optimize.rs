//! Small derivative-free minimizers used by the discord engines.

/// Axis-aligned box for the simplex search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub lo: [f64; 2],
    pub hi: [f64; 2],
}

impl Bounds {
    /// Mirrors each coordinate back into the box.
    fn reflect(&self, mut p: [f64; 2]) -> [f64; 2] {
        for (k, v) in p.iter_mut().enumerate() {
            let (lo, hi) = (self.lo[k], self.hi[k]);
            let width = hi - lo;
            if width <= 0.0 {
                *v = lo;
                continue;
            }
            // Mirror at most a couple of times; steps never exceed the box width by much.
            for _ in 0..4 {
                if *v < lo {
                    *v = 2.0 * lo - *v;
                } else if *v > hi {
                    *v = 2.0 * hi - *v;
                } else {
                    break;
                }
            }
            *v = v.clamp(lo, hi);
        }
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexResult {
    pub point: [f64; 2],
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Nelder–Mead descent in two dimensions, confined to `bounds` by reflection.
///
/// Stops when the spread of objective values across the simplex drops below
/// `ftol` or after `max_iter` iterations.
pub fn nelder_mead_2d<F>(f: F, start: [f64; 2], step: [f64; 2], bounds: Bounds, ftol: f64, max_iter: usize) -> SimplexResult
where
    F: Fn([f64; 2]) -> f64,
{
    const ALPHA: f64 = 1.0;
    const GAMMA: f64 = 2.0;
    const RHO: f64 = 0.5;
    const SIGMA: f64 = 0.5;

    let eval = |p: [f64; 2]| {
        let p = bounds.reflect(p);
        (p, f(p))
    };
    let start = bounds.reflect(start);
    let mut simplex = [
        eval(start),
        eval([start[0] + step[0], start[1]]),
        eval([start[0], start[1] + step[1]]),
    ];

    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        if simplex[2].1 - simplex[0].1 < ftol {
            converged = true;
            break;
        }
        iterations += 1;

        let centroid = [
            0.5 * (simplex[0].0[0] + simplex[1].0[0]),
            0.5 * (simplex[0].0[1] + simplex[1].0[1]),
        ];
        let worst = simplex[2];
        let along = |t: f64| [centroid[0] + t * (worst.0[0] - centroid[0]), centroid[1] + t * (worst.0[1] - centroid[1])];

        let reflected = eval(along(-ALPHA));
        if reflected.1 < simplex[0].1 {
            let expanded = eval(along(-GAMMA));
            simplex[2] = if expanded.1 < reflected.1 { expanded } else { reflected };
            continue;
        }
        if reflected.1 < simplex[1].1 {
            simplex[2] = reflected;
            continue;
        }
        let contracted = if reflected.1 < worst.1 {
            eval(along(-RHO * ALPHA))
        } else {
            eval(along(RHO))
        };
        if contracted.1 < worst.1.min(reflected.1) {
            simplex[2] = contracted;
            continue;
        }
        let best = simplex[0].0;
        for vertex in simplex.iter_mut().skip(1) {
            *vertex = eval([
                best[0] + SIGMA * (vertex.0[0] - best[0]),
                best[1] + SIGMA * (vertex.0[1] - best[1]),
            ]);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    SimplexResult {
        point: simplex[0].0,
        value: simplex[0].1,
        iterations,
        converged,
    }
}

/// Golden-section search for a minimum of `f` on `[a, b]`, to bracket width `tol`.
pub fn golden_section<F>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    // Each step shrinks the bracket by 0.618; 200 steps reach any f64 resolution.
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}
