//! Brute-force orbit oracle.
//!
//! Everything here works straight from the definitions: enumerate words of
//! `Γ` in a box `|m|, |n|, |k| ≤ N`, move a compact coordinate box by each
//! word and see whether it comes back to itself. None of it consults the
//! determinant criterion in [`crate::properness`], so the two can be checked
//! against each other.
//!
//! A point `(g1, g2)ΔG` of `G×G/ΔG` is identified with `g1·g2⁻¹ ∈ G`, so
//! `w` acts by `x ↦ ρ(w)·x·ρ'(w)⁻¹`.

use rayon::prelude::*;

use crate::error::{DeformError, Result};
use crate::heis::HeisPoint;
use crate::homs::{GammaWord, HeisHom};
use crate::linalg::Mat2;
use crate::properness::HomPair;
use crate::scalar::{Scalar, Sign, Tolerance};

/// The box `{[x, y, z] : |x|, |y|, |z| ≤ radius}` in bracket coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordBox<S> {
    pub radius: S,
}

/// Which kind of contact between a translate and the box is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contact {
    /// `w·B ∩ B ≠ ∅` for the closed box.
    Closed,
    /// The interiors overlap. Equivalent for deciding proper discontinuity,
    /// but ignores translates that only touch the box along its boundary.
    Interior,
}

impl Contact {
    pub fn as_str(self) -> &'static str {
        match self {
            Contact::Closed => "closed",
            Contact::Interior => "interior",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeVerdict {
    Stable,
    Growing,
    Inconclusive,
}

impl ProbeVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ProbeVerdict::Stable => "stable",
            ProbeVerdict::Growing => "growing",
            ProbeVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeConfig<S> {
    pub radius: S,
    pub n_list: Vec<i64>,
    pub contact: Contact,
    /// Maximum number of witness words kept in the report.
    pub witness_cap: usize,
}

impl<S: Scalar> Default for ProbeConfig<S> {
    fn default() -> Self {
        Self {
            radius: S::from_i64(2),
            n_list: vec![8, 12, 16, 20],
            contact: Contact::Interior,
            witness_cap: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport<S> {
    pub radius: S,
    pub contact: Contact,
    pub n_list: Vec<i64>,
    /// `counts[i]`: words with `max_coord ≤ n_list[i]` whose translate meets the box.
    pub counts: Vec<u64>,
    pub verdict: ProbeVerdict,
    /// The `witness_cap` intersecting words farthest from the identity, in
    /// lexicographic order.
    pub witnesses: Vec<GammaWord>,
}

impl<S: Scalar> CoordBox<S> {
    pub fn new(radius: S) -> Self {
        Self { radius }
    }

    pub fn contains(&self, x: &HeisPoint<S>) -> bool {
        [&x.a, &x.b, &x.c].iter().all(|v| v.abs() <= self.radius)
    }
}

/// `x ↦ ρ(w)·x·ρ'(w)⁻¹`, in closed form.
pub fn action<S: Scalar>(p: &HomPair<S>, w: &GammaWord, x: &HeisPoint<S>) -> HeisPoint<S> {
    let g = p.rho().apply(w);
    let h = p.rho_prime().apply(w);
    act_with(&g, &h, x)
}

fn act_with<S: Scalar>(g: &HeisPoint<S>, h: &HeisPoint<S>, x: &HeisPoint<S>) -> HeisPoint<S> {
    // [x + p − p', y + q − q', z + (r − r') + p·y − q'·x − p·q' + p'·q']
    HeisPoint::new(
        x.a.clone() + &g.a - &h.a,
        x.b.clone() + &g.b - &h.b,
        x.c.clone() + &g.c - &h.c + &(g.a.clone() * &x.b)
            - &(h.b.clone() * &x.a)
            - &(g.a.clone() * &h.b)
            + &(h.a.clone() * &h.b),
    )
}

/// Whether `w·B ∩ B ≠ ∅`, decided exactly.
///
/// The first two coordinates of the action are translations, which confine
/// `(x, y)` to a sub-rectangle of the box. The third is `z + f(x, y)` with
/// `f` affine, and `z` ranges over `[−R, R]`, so the translate meets the box
/// iff the range of `f` over that rectangle meets `[−2R, 2R]`.
pub fn intersects_box<S: Scalar>(p: &HomPair<S>, w: &GammaWord, bx: &CoordBox<S>) -> bool {
    meets_box(p, w, bx, Contact::Closed)
}

/// Whether the interiors of `w·B` and `B` overlap.
pub fn overlaps_interior<S: Scalar>(p: &HomPair<S>, w: &GammaWord, bx: &CoordBox<S>) -> bool {
    meets_box(p, w, bx, Contact::Interior)
}

pub fn meets_box<S: Scalar>(
    p: &HomPair<S>,
    w: &GammaWord,
    bx: &CoordBox<S>,
    contact: Contact,
) -> bool {
    let within = |lhs: &S, rhs: &S| match contact {
        Contact::Closed => lhs <= rhs,
        Contact::Interior => lhs < rhs,
    };
    let (m, n) = (S::from_i64(w.m), S::from_i64(w.n));
    let (a, a_prime) = (p.a(), p.a_prime());
    // torus part first: it is cheap and rejects most words
    let row = |i: usize| {
        (a.0[i][0].clone() - &a_prime.0[i][0]) * &m + &((a.0[i][1].clone() - &a_prime.0[i][1]) * &n)
    };
    let (dp, dq) = (row(0), row(1));
    let r = &bx.radius;
    let two_r = r.clone() + r;
    if !within(&dp.abs(), &two_r) || !within(&dq.abs(), &two_r) {
        return false;
    }
    let g = p.rho().apply(w);
    let h = p.rho_prime().apply(w);
    let span = |d: &S| {
        let neg_r = -r.clone();
        // x ∈ [−R, R] and x + d ∈ [−R, R]
        if *d > S::zero() {
            (neg_r, r.clone() - d)
        } else {
            (neg_r - d, r.clone())
        }
    };
    let (x_lo, x_hi) = span(&dp);
    let (y_lo, y_hi) = span(&dq);
    let constant = g.c.clone() - &h.c - &(g.a.clone() * &h.b) + &(h.a.clone() * &h.b);
    let (ymin, ymax) = ordered(g.a.clone() * &y_lo, g.a.clone() * &y_hi);
    let (xmin, xmax) = ordered(-(h.b.clone() * &x_lo), -(h.b.clone() * &x_hi));
    let f_min = constant.clone() + &ymin + &xmin;
    let f_max = constant + &ymax + &xmax;
    // on the open rectangle f takes values strictly between its extremes,
    // unless it is constant there
    within(&f_min, &two_r) && within(&-two_r, &f_max)
}

fn ordered<S: Scalar>(u: S, v: S) -> (S, S) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Counts, for each `N` in the config, the words in the word box of size
/// `N` whose translate of the coordinate box meets the box.
///
/// Work is split over the first word coordinate and run on the current
/// rayon pool; the report does not depend on how it is split.
pub fn properness_probe<S: Scalar>(p: &HomPair<S>, config: &ProbeConfig<S>) -> ProbeReport<S> {
    let mut n_list = config.n_list.clone();
    n_list.sort_unstable();
    n_list.dedup();
    let top = n_list.last().copied().unwrap_or(0).max(0);
    let bx = CoordBox::new(config.radius.clone());
    let contact = config.contact;

    let hits: Vec<GammaWord> = (-top..=top)
        .into_par_iter()
        .flat_map_iter(|m| {
            let bx = &bx;
            (-top..=top).flat_map(move |n| {
                (-top..=top)
                    .map(move |k| GammaWord::new(m, n, k))
                    .filter(move |w| meets_box(p, w, bx, contact))
            })
        })
        .collect();

    let counts = n_list
        .iter()
        .map(|&bound| hits.iter().filter(|w| w.max_coord() <= bound).count() as u64)
        .collect::<Vec<_>>();
    let verdict = classify_counts(&counts);

    let mut witnesses = hits;
    witnesses.sort_unstable_by(|u, v| v.max_coord().cmp(&u.max_coord()).then(u.cmp(v)));
    witnesses.truncate(config.witness_cap);
    witnesses.sort_unstable();

    ProbeReport {
        radius: config.radius.clone(),
        contact: config.contact,
        n_list,
        counts,
        verdict,
        witnesses,
    }
}

/// Stable when the counts agree over the upper half of the list, growing
/// when they increase strictly throughout.
pub fn classify_counts(counts: &[u64]) -> ProbeVerdict {
    if counts.is_empty() {
        return ProbeVerdict::Inconclusive;
    }
    let upper = &counts[counts.len() / 2..];
    if upper.windows(2).all(|w| w[0] == w[1]) {
        ProbeVerdict::Stable
    } else if counts.windows(2).all(|w| w[0] < w[1]) {
        ProbeVerdict::Growing
    } else {
        ProbeVerdict::Inconclusive
    }
}

/// Nontrivial words in the box of size `bound` that fix some point.
///
/// `x` is fixed by `w` iff `x⁻¹ρ(w)x = ρ'(w)`. Two elements of `G` are
/// conjugate iff their `(a, b)` parts agree and, when that common part is
/// zero, their central parts agree as well.
pub fn freeness_probe<S: Scalar>(p: &HomPair<S>, bound: i64, tol: Tolerance) -> Vec<GammaWord> {
    let bound = bound.max(0);
    let diff = p.torus_matrix();
    let diff = &diff;
    let mut out: Vec<GammaWord> = (-bound..=bound)
        .into_par_iter()
        .flat_map_iter(|m| {
            (-bound..=bound).flat_map(move |n| {
                (-bound..=bound)
                    .map(move |k| GammaWord::new(m, n, k))
                    .filter(move |w| !w.is_identity() && has_fixed_point(p, diff, w, tol))
            })
        })
        .collect();
    out.sort_unstable();
    out
}

fn has_fixed_point<S: Scalar>(
    p: &HomPair<S>,
    diff: &Mat2<S>,
    w: &GammaWord,
    tol: Tolerance,
) -> bool {
    // the (a, b) parts are linear in (m, n); compare them before building the images
    if !torus_image_vanishes(diff, w, tol) {
        return false;
    }
    let g = p.rho().apply(w);
    let h = p.rho_prime().apply(w);
    let same = |u: &S, v: &S| (u.clone() - v).sign(tol) == Sign::Zero;
    if !same(&g.a, &h.a) || !same(&g.b, &h.b) {
        return false;
    }
    let central = g.a.sign(tol) == Sign::Zero && g.b.sign(tol) == Sign::Zero;
    !central || same(&g.c, &h.c)
}

fn torus_image_vanishes<S: Scalar>(a: &Mat2<S>, w: &GammaWord, tol: Tolerance) -> bool {
    let (m, n) = (S::from_i64(w.m), S::from_i64(w.n));
    a.apply([&m, &n]).iter().all(|x| x.is_zero_at(tol))
}

/// Nontrivial words in the box of size `bound` mapped to the identity.
/// Exact scalars only: a float image is never reliably equal to `e`.
pub fn kernel_probe<S: Scalar>(rho: &HeisHom<S>, bound: i64) -> Result<Vec<GammaWord>> {
    if !S::EXACT {
        return Err(DeformError::InexactKernelSearch);
    }
    let bound = bound.max(0);
    let a = rho.a_matrix();
    let a = &a;
    let mut out: Vec<GammaWord> = (-bound..=bound)
        .into_par_iter()
        .flat_map_iter(|m| {
            (-bound..=bound).flat_map(move |n| {
                (-bound..=bound)
                    .map(move |k| GammaWord::new(m, n, k))
                    .filter(move |w| {
                        !w.is_identity()
                            && torus_image_vanishes(a, w, Tolerance(0.0))
                            && rho.apply(w).is_identity()
                    })
            })
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type P = HeisPoint<Rational>;
    type H = HeisHom<Rational>;

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    fn unit_box() -> CoordBox<Rational> {
        CoordBox::new(q(1, 1))
    }

    #[test]
    fn action_examples() {
        let p = HomPair::<Rational>::inclusion_trivial();
        for w in GammaWord::box_iter(2) {
            assert_eq!(action(&p, &w, &P::identity()), w.to_point());
        }
        let x = P::new(q(1, 2), q(-3, 1), q(7, 5));
        assert_eq!(action(&p, &GammaWord::IDENTITY, &x), x);
    }

    #[test]
    fn intersects_box_examples() {
        let p = HomPair::<Rational>::inclusion_trivial();
        assert!(intersects_box(&p, &GammaWord::IDENTITY, &unit_box()));
        assert!(!intersects_box(&p, &GammaWord::new(3, 0, 0), &unit_box()));
        assert!(intersects_box(&p, &GammaWord::new(2, 0, 0), &unit_box()));
        let diag = HomPair::new(H::inclusion(), H::inclusion());
        for k in -50..=50 {
            assert!(intersects_box(&diag, &GammaWord::new(0, 0, k), &unit_box()));
        }
    }

    #[test]
    fn probe_on_standard_and_diagonal_actions() {
        let config = ProbeConfig::default();
        let report = properness_probe(&HomPair::<Rational>::inclusion_trivial(), &config);
        assert_eq!(report.verdict, ProbeVerdict::Stable);
        let diag = properness_probe(&HomPair::new(H::inclusion(), H::inclusion()), &config);
        assert_eq!(diag.verdict, ProbeVerdict::Growing);
        for (n, count) in diag.n_list.iter().zip(&diag.counts) {
            assert!(*count > 2 * *n as u64);
        }
    }

    #[test]
    fn classify_rules() {
        assert_eq!(classify_counts(&[5, 9, 11, 11]), ProbeVerdict::Stable);
        assert_eq!(classify_counts(&[5, 9, 11, 12]), ProbeVerdict::Growing);
        assert_eq!(classify_counts(&[5, 5, 11, 12]), ProbeVerdict::Inconclusive);
        assert_eq!(classify_counts(&[]), ProbeVerdict::Inconclusive);
    }

    #[test]
    fn freeness_examples() {
        let tol = Tolerance::DEFAULT;
        assert!(freeness_probe(&HomPair::<Rational>::inclusion_trivial(), 4, tol).is_empty());
        let diag = HomPair::new(H::inclusion(), H::inclusion());
        assert_eq!(freeness_probe(&diag, 3, tol).len(), 7 * 7 * 7 - 1);
        // same torus image on γ1 only
        let p = HomPair::new(
            H::new(P::from_ints(1, 0, 0), P::from_ints(0, 1, 0)),
            H::new(P::from_ints(1, 0, 5), P::from_ints(0, 0, 0)),
        );
        let found = freeness_probe(&p, 4, tol);
        let expected: Vec<GammaWord> = GammaWord::box_iter(4)
            .filter(|w| !w.is_identity())
            .filter(|w| {
                let (g, h) = (p.rho().apply(w), p.rho_prime().apply(w));
                g.a == h.a && g.b == h.b && (g.a != q(0, 1) || g.b != q(0, 1) || g.c == h.c)
            })
            .collect();
        assert_eq!(found, expected);
        assert!(found.iter().all(|w| w.n == 0 && w.m != 0));
    }

    #[test]
    fn kernel_examples() {
        let flat = H::new(P::from_ints(1, 2, 0), P::from_ints(2, 4, 0));
        assert!(kernel_probe(&flat, 3).unwrap().contains(&GammaWord::CENTER));
        assert!(kernel_probe(&H::inclusion(), 4).unwrap().is_empty());
        let float = HeisHom::<f64>::inclusion();
        assert_eq!(
            kernel_probe(&float, 2),
            Err(DeformError::InexactKernelSearch)
        );
    }

    fn shrinking_fiber(c: Rational) -> HomPair<Rational> {
        HomPair::new(
            H::new(P::new(q(2, 1), c.clone(), q(0, 1)), P::from_ints(1, 2, 0)),
            H::new(P::new(q(1, 1), c, q(0, 1)), P::from_ints(0, 1, 0)),
        )
    }

    #[test]
    fn shrinking_fiber_probe_by_contact_kind() {
        let interior = properness_probe(&shrinking_fiber(q(1, 2)), &ProbeConfig::default());
        assert_eq!(interior.verdict, ProbeVerdict::Stable);
        assert_eq!(interior.counts, vec![336, 351, 351, 351]);
        // translates touching the box along a face keep turning up until N = 18
        let closed = ProbeConfig {
            contact: Contact::Closed,
            ..ProbeConfig::default()
        };
        let closed = properness_probe(&shrinking_fiber(q(1, 2)), &closed);
        assert_eq!(closed.counts, vec![542, 597, 615, 617]);
        assert_eq!(closed.verdict, ProbeVerdict::Growing);
    }

    #[test]
    fn tangent_translate_is_closed_contact_only() {
        let p = HomPair::<Rational>::inclusion_trivial();
        let w = GammaWord::new(2, 0, 0);
        assert!(intersects_box(&p, &w, &unit_box()));
        assert!(!overlaps_interior(&p, &w, &unit_box()));
        assert!(overlaps_interior(&p, &GammaWord::new(1, 1, 0), &unit_box()));
    }

    #[test]
    fn box_test_agrees_with_dense_sampling() {
        let p = shrinking_fiber(q(1, 4));
        let bx = CoordBox::new(q(1, 1));
        // a grid hit proves intersection; no hit on a fine grid with a
        // closed-form miss is consistent
        for w in GammaWord::box_iter(2) {
            let steps = 3;
            let mut hit = false;
            for i in -steps..=steps {
                for j in -steps..=steps {
                    for k in -steps..=steps {
                        let x = P::new(q(i, steps), q(j, steps), q(k, steps));
                        if bx.contains(&action(&p, &w, &x)) {
                            hit = true;
                        }
                    }
                }
            }
            if hit {
                assert!(intersects_box(&p, &w, &bx), "{w:?}");
            }
        }
    }

    #[test]
    fn report_is_independent_of_thread_count() {
        let p = shrinking_fiber(q(0, 1));
        let config = ProbeConfig {
            n_list: vec![4, 6, 8],
            ..ProbeConfig::default()
        };
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let wide = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let a = single.install(|| properness_probe(&p, &config));
        let b = wide.install(|| properness_probe(&p, &config));
        assert_eq!(a, b);
    }
}
