//! Randomized algebraic laws: ring axioms for the polynomial arithmetic,
//! bracket identities for the Schouten calculus, chart round trips, and
//! basis independence of the assembled rank.

use proptest::prelude::*;

use delpezzo::blowup::{vanishing_bivector_subspace, vanishing_vector_subspace};
use delpezzo::calculus::{lie_bracket, schouten_pi_f, schouten_pi_v, BivectorField, VectorField};
use delpezzo::charts::{
    bivector_from_coeffs, charts_of, is_global_bivector, transform_bivector, transform_vector,
    vector_from_coeffs,
};
use delpezzo::cohomology::{assemble_in_bases, exact_rank};
use delpezzo::{LaurentMonomial, RatLaurent, Rational, SurfaceKind, SurfaceSpec, Var};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    arb_rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn arb_laurent() -> impl Strategy<Value = RatLaurent> {
    prop::collection::vec(((-3i64..=4, -3i64..=4), arb_rational()), 0..6)
        .prop_map(RatLaurent::from_terms)
}

fn arb_poly() -> impl Strategy<Value = RatLaurent> {
    prop::collection::vec(((0i64..=4, 0i64..=4), arb_rational()), 0..6)
        .prop_map(RatLaurent::from_terms)
}

fn arb_vector_field() -> impl Strategy<Value = VectorField> {
    (arb_poly(), arb_poly()).prop_map(|(f, g)| VectorField::new(f, g))
}

fn arb_bivector_field() -> impl Strategy<Value = BivectorField> {
    arb_poly().prop_map(BivectorField::new)
}

fn arb_monomial() -> impl Strategy<Value = LaurentMonomial> {
    (arb_nonzero_rational(), -2i64..=2, -2i64..=2)
        .prop_map(|(c, i, j)| LaurentMonomial::new(c, i, j))
}

proptest! {
    #[test]
    fn ring_axioms(p in arb_laurent(), q in arb_laurent(), r in arb_laurent()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, RatLaurent::zero());
        prop_assert_eq!(&p * &RatLaurent::one(), p.clone());
    }

    #[test]
    fn leibniz_rule(p in arb_laurent(), q in arb_laurent()) {
        for var in [Var::X, Var::W] {
            let lhs = (&p * &q).partial(var);
            let rhs = &(&p.partial(var) * &q) + &(&p * &q.partial(var));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn eval_is_a_ring_morphism(
        p in arb_laurent(),
        q in arb_laurent(),
        x in arb_nonzero_rational(),
        w in arb_nonzero_rational(),
    ) {
        let ev = |r: &RatLaurent| r.eval(&x, &w).unwrap();
        prop_assert_eq!(ev(&(&p * &q)), &ev(&p) * &ev(&q));
        prop_assert_eq!(ev(&(&p + &q)), &ev(&p) + &ev(&q));
    }

    #[test]
    fn substitution_composes(
        p in arb_laurent(),
        phi_x in arb_monomial(),
        phi_w in arb_monomial(),
        psi_x in arb_monomial(),
        psi_w in arb_monomial(),
    ) {
        // psi applied to the image monomials of phi.
        let compose = |m: &LaurentMonomial| {
            let image = RatLaurent::monomial(m.coeff().clone(), m.exp_x(), m.exp_w())
                .substitute(&psi_x, &psi_w);
            let ((i, j), c) = image.terms().next().expect("monomial image of a monomial");
            LaurentMonomial::new(c.clone(), i, j)
        };
        let lhs = p.substitute(&phi_x, &phi_w).substitute(&psi_x, &psi_w);
        let rhs = p.substitute(&compose(&phi_x), &compose(&phi_w));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_roundtrip(p in arb_laurent()) {
        let parsed: RatLaurent = p.to_string().parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn schouten_is_bilinear(
        pi1 in arb_bivector_field(),
        pi2 in arb_bivector_field(),
        v1 in arb_vector_field(),
        v2 in arb_vector_field(),
        c in arb_rational(),
    ) {
        let lhs = schouten_pi_v(&pi1.add(&pi2.scale(&c)), &v1);
        let rhs = schouten_pi_v(&pi1, &v1).add(&schouten_pi_v(&pi2, &v1).scale(&c));
        prop_assert_eq!(lhs.h, rhs.h);

        let lhs = schouten_pi_v(&pi1, &v1.add(&v2.scale(&c)));
        let rhs = schouten_pi_v(&pi1, &v1).add(&schouten_pi_v(&pi1, &v2).scale(&c));
        prop_assert_eq!(lhs.h, rhs.h);
    }

    #[test]
    fn graded_leibniz_in_the_function_slot(
        pi in arb_bivector_field(),
        v in arb_vector_field(),
        phi in arb_poly(),
    ) {
        // [pi, phi v] = phi [pi, v] + v ^ X_phi.
        let phi_v = VectorField::new(&phi * &v.f, &phi * &v.g);
        let lhs = schouten_pi_v(&pi, &phi_v);
        let x_phi = schouten_pi_f(&pi, &phi);
        let wedge = BivectorField::new(&(&v.f * &x_phi.g) - &(&v.g * &x_phi.f));
        let rhs = BivectorField::new(&(&phi * &schouten_pi_v(&pi, &v).h) + &wedge.h);
        prop_assert_eq!(lhs.h, rhs.h);
    }

    #[test]
    fn d_pi_squared_vanishes_on_functions(
        pi in arb_bivector_field(),
        phi in arb_poly(),
    ) {
        let twice = schouten_pi_v(&pi, &schouten_pi_f(&pi, &phi));
        prop_assert!(twice.is_zero());
    }

    #[test]
    fn lie_bracket_antisymmetry_and_jacobi(
        u in arb_vector_field(),
        v in arb_vector_field(),
        t in arb_vector_field(),
    ) {
        let vu = lie_bracket(&v, &u);
        let uv = lie_bracket(&u, &v);
        prop_assert_eq!(vu.f, -&uv.f.clone());
        prop_assert_eq!(vu.g, -&uv.g.clone());

        let jacobi = lie_bracket(&u, &lie_bracket(&v, &t))
            .add(&lie_bracket(&v, &lie_bracket(&t, &u)))
            .add(&lie_bracket(&t, &lie_bracket(&u, &v)));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn chart_round_trips(
        f in arb_laurent(),
        g in arb_laurent(),
        h in arb_laurent(),
    ) {
        let v = VectorField::new(f, g);
        let pi = BivectorField::new(h);
        for kind in [SurfaceKind::P2, SurfaceKind::P1xP1] {
            for a in charts_of(kind) {
                for b in charts_of(kind) {
                    let v_back = transform_vector(kind, b, a, &transform_vector(kind, a, b, &v));
                    prop_assert_eq!(&v_back.f, &v.f);
                    prop_assert_eq!(&v_back.g, &v.g);
                    let p_back =
                        transform_bivector(kind, b, a, &transform_bivector(kind, a, b, &pi));
                    prop_assert_eq!(&p_back.h, &pi.h);
                }
            }
        }
    }

    #[test]
    fn global_sections_are_closed_under_the_bracket(
        pi_coeffs in prop::collection::vec(arb_rational(), 10),
        v_coeffs in prop::collection::vec(arb_rational(), 8),
    ) {
        let pi = bivector_from_coeffs(SurfaceKind::P2, &pi_coeffs);
        let v = vector_from_coeffs(SurfaceKind::P2, &v_coeffs);
        prop_assert!(is_global_bivector(SurfaceKind::P2, &schouten_pi_v(&pi, &v)));
    }

    #[test]
    fn p1xp1_global_sections_closed(
        pi_coeffs in prop::collection::vec(arb_rational(), 9),
        v_coeffs in prop::collection::vec(arb_rational(), 6),
    ) {
        let pi = bivector_from_coeffs(SurfaceKind::P1xP1, &pi_coeffs);
        let v = vector_from_coeffs(SurfaceKind::P1xP1, &v_coeffs);
        prop_assert!(is_global_bivector(SurfaceKind::P1xP1, &schouten_pi_v(&pi, &v)));
    }
}

/// Naive rational Gaussian elimination, written independently of the
/// production Bareiss path.
fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for e in &mut m[rank] {
            *e = &*e * &inv;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (e, p) in row.iter_mut().zip(&pivot_row) {
                    *e = &*e - &(&factor * p);
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[test]
fn exact_rank_matches_naive_elimination_on_random_matrices() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_5eed);
    for _ in 0..1000 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m: Vec<Vec<Rational>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
                    .collect()
            })
            .collect();
        assert_eq!(delpezzo::linalg::exact_rank(&m), naive_rank(&m));
    }
}

fn unit_basis(dim: usize) -> Vec<Vec<Rational>> {
    (0..dim)
        .map(|i| {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::one();
            v
        })
        .collect()
}

fn random_invertible(rng: &mut impl rand::Rng, n: usize) -> Vec<Vec<Rational>> {
    loop {
        let m: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Rational::from_int(rng.gen_range(-3..=3)))
                    .collect()
            })
            .collect();
        if delpezzo::linalg::exact_rank(&m) == n {
            return m;
        }
    }
}

fn rnd_coeffs(rng: &mut impl rand::Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
        .collect()
}

/// Random invertible change of basis applied to both sides leaves the
/// rank of the assembled matrix unchanged.
#[test]
fn rank_is_basis_independent() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xbead);

    let change = |basis: &[Vec<Rational>], t: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        t.iter()
            .map(|coeffs| {
                let mut v = vec![Rational::zero(); basis[0].len()];
                for (c, b) in coeffs.iter().zip(basis) {
                    for (o, e) in v.iter_mut().zip(b) {
                        *o = &*o + &(c * e);
                    }
                }
                v
            })
            .collect()
    };

    // P2 and P1xP1 in the monomial bases.
    for (kind, d1, d2) in [(SurfaceKind::P2, 8, 10), (SurfaceKind::P1xP1, 6, 9)] {
        for _ in 0..10 {
            let pi = rnd_coeffs(&mut rng, d2);
            let cols = unit_basis(d1);
            let rows = unit_basis(d2);
            let baseline = exact_rank(&assemble_in_bases(kind, &pi, &cols, &rows));
            let new_cols = change(&cols, &random_invertible(&mut rng, d1));
            let new_rows = change(&rows, &random_invertible(&mut rng, d2));
            let transformed = exact_rank(&assemble_in_bases(kind, &pi, &new_cols, &new_rows));
            assert_eq!(baseline, transformed);
        }
    }

    // Blow-ups in the vanishing-subspace bases.
    for r in 1..=3usize {
        let surface = SurfaceSpec::blowup_standard(r).unwrap();
        let cfg = surface.blowup_config().unwrap();
        let bivectors = vanishing_bivector_subspace(cfg).unwrap();
        let vectors = vanishing_vector_subspace(cfg).unwrap();
        for _ in 0..10 {
            let pi_ambient = bivectors.ambient_vector(&rnd_coeffs(&mut rng, bivectors.dim()));
            let baseline = exact_rank(&assemble_in_bases(
                SurfaceKind::P2,
                &pi_ambient,
                vectors.basis(),
                bivectors.basis(),
            ));
            let new_cols = change(vectors.basis(), &random_invertible(&mut rng, vectors.dim()));
            let new_rows = change(
                bivectors.basis(),
                &random_invertible(&mut rng, bivectors.dim()),
            );
            let transformed = exact_rank(&assemble_in_bases(
                SurfaceKind::P2,
                &pi_ambient,
                &new_cols,
                &new_rows,
            ));
            assert_eq!(baseline, transformed, "B{r}");
        }
    }
}
