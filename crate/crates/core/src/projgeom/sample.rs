//! Deterministic sampling of generic configurations of each type.
//!
//! Every sample is drawn from a ChaCha8 stream seeded with the caller's
//! 64-bit seed. A draft configuration records which of its points are meant
//! to be collinear or conconic; it is accepted only if no other collinear
//! triple or conconic sextuple occurs, otherwise the stream is advanced and
//! the draft is rebuilt. Sweeps derive per-sample seeds with [`split_seed`].

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::config::Config;
use super::conic::{on_common_conic_unchecked, Conic};
use super::point::{collinear_any, incident, ProjLine, ProjPoint};
use crate::error::{input, Error, Result};
use crate::exactalg::Scalar;

/// Rejection bound used by [`sample_generic`].
pub const MAX_ATTEMPTS: usize = 1000;

/// The SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for sample `index` of type `type_id` in a sweep driven by `seed`.
pub fn split_seed(seed: u64, type_id: u8, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(((type_id as u64) << 32) | index))
}

/// A configuration under construction together with its intended special positions.
struct Draft<F> {
    points: Vec<ProjPoint<F>>,
    /// Index sets meant to be collinear.
    lines: Vec<Vec<usize>>,
    /// Index sets meant to lie on one nondegenerate conic.
    conics: Vec<Vec<usize>>,
    comp_lines: Vec<ProjLine<F>>,
    comp_conics: Vec<Conic<F>>,
    whole_plane: bool,
}

impl<F: Scalar> Draft<F> {
    fn new() -> Self {
        Draft { points: Vec::new(), lines: Vec::new(), conics: Vec::new(), comp_lines: Vec::new(), comp_conics: Vec::new(), whole_plane: false }
    }

    fn push(&mut self, p: ProjPoint<F>) -> usize {
        self.points.push(p);
        self.points.len() - 1
    }

    fn push_all(&mut self, ps: impl IntoIterator<Item = ProjPoint<F>>) -> Vec<usize> {
        ps.into_iter().map(|p| self.push(p)).collect()
    }

    fn on_intended_line(&self, idx: &[usize]) -> bool {
        self.lines.iter().any(|l| idx.iter().all(|i| l.contains(i)))
    }

    fn is_generic(&self) -> bool {
        let n = self.points.len();
        for i in 0..n {
            for j in 0..i {
                if self.points[i] == self.points[j] {
                    return false;
                }
            }
        }
        for t in (0..n).combinations(3) {
            let collinear = collinear_any(&self.points[t[0]], &self.points[t[1]], &self.points[t[2]]);
            if collinear != self.on_intended_line(&t) {
                return false;
            }
        }
        for s in (0..n).combinations(6) {
            let forced = self.lines.iter().any(|l| s.iter().filter(|i| l.contains(i)).count() >= 4)
                || self.conics.iter().any(|c| s.iter().all(|i| c.contains(i)))
                || self
                    .lines
                    .iter()
                    .tuple_combinations()
                    .any(|(a, b)| s.iter().all(|i| a.contains(i) || b.contains(i)));
            let pts: Vec<_> = s.iter().map(|&i| self.points[i].clone()).collect();
            if on_common_conic_unchecked(&pts) != forced {
                return false;
            }
        }
        for c in &self.conics {
            let five: Vec<_> = c.iter().take(5).map(|&i| self.points[i].clone()).collect();
            match Conic::through(&five) {
                Ok(q) if !q.is_degenerate() && c.iter().all(|&i| q.contains(&self.points[i])) => {}
                _ => return false,
            }
        }
        let on_component = |p: &ProjPoint<F>| {
            self.comp_lines.iter().any(|l| incident(p, l)) || self.comp_conics.iter().any(|c| c.contains(p))
        };
        if self.points.iter().any(on_component) {
            return false;
        }
        if self.comp_lines.len() == 2 && self.comp_lines[0] == self.comp_lines[1] {
            return false;
        }
        self.comp_conics.iter().all(|c| !c.is_degenerate())
    }

    fn into_config(self, type_id: u8) -> Result<Config<F>> {
        if self.whole_plane {
            return Ok(Config::whole_plane());
        }
        Config::new(self.points, self.comp_lines, self.comp_conics, Some(type_id))
    }
}

struct Gen<'a, F> {
    rng: &'a mut ChaCha8Rng,
    _f: std::marker::PhantomData<F>,
}

impl<F: Scalar> Gen<'_, F> {
    fn triple(&mut self) -> [F; 3] {
        [F::sample(self.rng), F::sample(self.rng), F::sample(self.rng)]
    }

    fn point(&mut self) -> Result<ProjPoint<F>> {
        ProjPoint::new(self.triple())
    }

    fn points(&mut self, k: usize) -> Result<Vec<ProjPoint<F>>> {
        (0..k).map(|_| self.point()).collect()
    }

    fn line(&mut self) -> Result<ProjLine<F>> {
        ProjLine::new(self.triple())
    }

    fn on_line(&mut self, l: &ProjLine<F>, k: usize) -> Result<Vec<ProjPoint<F>>> {
        (0..k)
            .map(|_| {
                let (s, t) = (F::sample(self.rng), F::sample(self.rng));
                l.point_at(&s, &t)
            })
            .collect()
    }

    /// Extra points on the conic, each the second intersection with a random line through `base`.
    fn on_conic(&mut self, c: &Conic<F>, base: &ProjPoint<F>, k: usize) -> Result<Vec<ProjPoint<F>>> {
        (0..k)
            .map(|_| {
                let w = self.point()?;
                c.second_intersection(base, &w)
            })
            .collect()
    }

    /// Six or more points on a nondegenerate conic: five random points fix the conic.
    fn conic_points(&mut self, k: usize) -> Result<(Conic<F>, Vec<ProjPoint<F>>)> {
        let mut pts = self.points(5)?;
        let c = Conic::through(&pts)?;
        let extra = self.on_conic(&c, &pts[0], k - 5)?;
        pts.extend(extra);
        Ok((c, pts))
    }
}

fn collinear_block<F: Scalar>(d: &mut Draft<F>, g: &mut Gen<'_, F>, k: usize) -> Result<ProjLine<F>> {
    let l = g.line()?;
    let idx = d.push_all(g.on_line(&l, k)?);
    d.lines.push(idx);
    Ok(l)
}

/// Two lines meeting at a point `X` of the configuration, with `extra` more points on each.
fn crossing_pair<F: Scalar>(d: &mut Draft<F>, g: &mut Gen<'_, F>, extra: usize) -> Result<()> {
    let (l1, l2) = (g.line()?, g.line()?);
    let x = d.push(l1.meet(&l2)?);
    let mut a = vec![x];
    a.extend(d.push_all(g.on_line(&l1, extra)?));
    let mut b = vec![x];
    b.extend(d.push_all(g.on_line(&l2, extra)?));
    d.lines.push(a);
    d.lines.push(b);
    Ok(())
}

fn build<F: Scalar>(type_id: u8, variant: bool, g: &mut Gen<'_, F>) -> Result<Draft<F>> {
    let mut d = Draft::new();
    match type_id {
        1..=3 => {
            d.push_all(g.points(type_id as usize)?);
        }
        4..=10 => {
            collinear_block(&mut d, g, type_id as usize)?;
        }
        12 => {
            if variant {
                collinear_block(&mut d, g, 3)?;
                d.push(g.point()?);
            } else {
                d.push_all(g.points(4)?);
            }
        }
        13..=16 => {
            collinear_block(&mut d, g, type_id as usize - 9)?;
            d.push(g.point()?);
        }
        18 => {
            d.push_all(g.points(5)?);
        }
        19..=21 => {
            collinear_block(&mut d, g, type_id as usize - 15)?;
            d.push_all(g.points(2)?);
        }
        23 => {
            collinear_block(&mut d, g, 3)?;
            collinear_block(&mut d, g, 3)?;
        }
        24 => {
            let (_, pts) = g.conic_points(6)?;
            let idx = d.push_all(pts);
            d.conics.push(idx);
        }
        25 => crossing_pair(&mut d, g, 3)?,
        26 => {
            d.push_all(g.points(6)?);
        }
        27 | 28 => {
            collinear_block(&mut d, g, type_id as usize - 23)?;
            collinear_block(&mut d, g, 3)?;
        }
        30 => {
            collinear_block(&mut d, g, 4)?;
            collinear_block(&mut d, g, 4)?;
        }
        32 => {
            let (_, pts) = g.conic_points(7)?;
            let idx = d.push_all(pts);
            d.conics.push(idx);
        }
        34 => {
            collinear_block(&mut d, g, 4)?;
            d.push_all(g.points(3)?);
        }
        35 => {
            collinear_block(&mut d, g, 3)?;
            collinear_block(&mut d, g, 3)?;
            d.push(g.point()?);
        }
        36 => {
            let (_, pts) = g.conic_points(6)?;
            let idx = d.push_all(pts);
            d.conics.push(idx);
            d.push(g.point()?);
        }
        37 => {
            crossing_pair(&mut d, g, 3)?;
            d.push(g.point()?);
        }
        38 => {
            // Four base points and a line; two conics of the pencil through the
            // base points cut the line in pairs {P1, P2} and {P3, P4}.
            let base = g.points(4)?;
            let l = g.line()?;
            let on = g.on_line(&l, 3)?;
            let (p1, p3, w) = (&on[0], &on[1], &on[2]);
            let quad = |p: &ProjPoint<F>| -> Result<(ProjPoint<F>, ProjPoint<F>)> {
                let mut five = base.clone();
                five.push(p.clone());
                let c = Conic::through(&five)?;
                if c.is_degenerate() || c.is_tangent(&l)? {
                    return input("degenerate or tangent conic");
                }
                Ok((p.clone(), c.second_intersection(p, w)?))
            };
            let (a1, a2) = quad(p1)?;
            let (b1, b2) = quad(p3)?;
            let bi = d.push_all(base);
            let li = d.push_all([a1, a2, b1, b2]);
            d.lines.push(li.clone());
            d.conics.push(bi.iter().copied().chain([li[0], li[1]]).collect());
            d.conics.push(bi.iter().copied().chain([li[2], li[3]]).collect());
        }
        39 => {
            // Triangle ABC; two points on AB, two on BC, one on AC fix a conic
            // whose second point on AC completes the configuration.
            let tri = g.points(3)?;
            let (a, b, c) = (&tri[0], &tri[1], &tri[2]);
            let (ab, bc, ac) = (a.join(b)?, b.join(c)?, a.join(c)?);
            let mut five = g.on_line(&ab, 2)?;
            five.extend(g.on_line(&bc, 2)?);
            five.extend(g.on_line(&ac, 1)?);
            let q = Conic::through(&five)?;
            if q.is_tangent(&ac)? {
                return input("tangent conic");
            }
            let sixth = q.second_intersection(&five[4], a)?;
            let vi = d.push_all(tri.clone());
            let oi = d.push_all(five.into_iter().chain([sixth]));
            d.lines.push(vec![vi[0], vi[1], oi[0], oi[1]]);
            d.lines.push(vec![vi[1], vi[2], oi[2], oi[3]]);
            d.lines.push(vec![vi[0], vi[2], oi[4], oi[5]]);
            d.conics.push(oi);
        }
        40 => {
            // The ten pairwise intersections of five lines.
            let ls: Vec<ProjLine<F>> = (0..5).map(|_| g.line()).collect::<Result<_>>()?;
            let mut on: Vec<Vec<usize>> = vec![Vec::new(); 5];
            for (i, j) in (0..5).tuple_combinations() {
                let k = d.push(ls[i].meet(&ls[j])?);
                on[i].push(k);
                on[j].push(k);
            }
            d.lines = on;
        }
        11 => d.comp_lines.push(g.line()?),
        17 | 22 => {
            d.comp_lines.push(g.line()?);
            d.push_all(g.points(if type_id == 17 { 1 } else { 2 })?);
        }
        29 => {
            d.comp_lines.push(g.line()?);
            collinear_block(&mut d, g, 3)?;
        }
        31 => {
            d.comp_lines.push(g.line()?);
            d.comp_lines.push(g.line()?);
        }
        33 => {
            let (c, _) = g.conic_points(5)?;
            d.comp_conics.push(c);
        }
        41 => {
            d.comp_lines.push(g.line()?);
            d.push_all(g.points(3)?);
        }
        42 => d.whole_plane = true,
        _ => return input(format!("type id {type_id} outside 1..=42")),
    }
    Ok(d)
}

/// A generic configuration of the given type, deterministic in `(type_id, F, seed)`.
///
/// Type 12 alternates by seed parity between four points in general position
/// (even seeds) and three collinear points plus one more (odd seeds).
pub fn sample_generic<F: Scalar>(type_id: u8, seed: u64) -> Result<Config<F>> {
    sample_generic_bounded(type_id, seed, MAX_ATTEMPTS)
}

pub fn sample_generic_bounded<F: Scalar>(type_id: u8, seed: u64, max_attempts: usize) -> Result<Config<F>> {
    if !(1..=42).contains(&type_id) {
        return input(format!("type id {type_id} outside 1..=42"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Gen { rng: &mut rng, _f: std::marker::PhantomData };
    for _ in 0..max_attempts {
        if let Ok(d) = build(type_id, seed % 2 == 1, &mut g) {
            if d.is_generic() {
                return d.into_config(type_id);
            }
        }
    }
    Err(Error::FieldTooSmall { type_id, attempts: max_attempts })
}
