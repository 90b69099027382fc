mod common;

use common::*;
use instanton_quiver::charge_one::{from_skew_form, region_of};
use instanton_quiver::pencil::Certificate;
use instanton_quiver::quiver::subrep::sampled_subreps;
use instanton_quiver::stability::{
    stability_region_charge1, verify_theta_eps_charge2, ThetaEpsCheck,
};
use instanton_quiver::{
    classify, is_stable_charge1, normal_form, Answer, Charge1Family, Charge1Kind, DimVector,
    LinearPencil, Mode, ProbeConfig, QuadricMembership, QuiverRep, Rational, RationalMatrix,
    Region, Sampler, SkewForm, StabilityParam, StabilityVerdict, SubrepSearch,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| qq(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec(rational(), rows * cols)
        .prop_map(move |data| RationalMatrix::new(rows, cols, data).unwrap())
}

/// Low-rank matrices are rare under independent entries, so build some as
/// products of thin factors.
fn any_rank_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=5, 1usize..=5, 0usize..=5).prop_flat_map(|(r, c, k)| {
        (matrix(r, k), matrix(k, c)).prop_map(move |(a, b)| {
            if k == 0 {
                RationalMatrix::zeros(r, c)
            } else {
                &a * &b
            }
        })
    })
}

fn skew_form() -> impl Strategy<Value = SkewForm> {
    proptest::array::uniform6(rational()).prop_filter_map("nonzero", |c| SkewForm::new(c).ok())
}

fn family() -> impl Strategy<Value = Charge1Family> {
    prop_oneof![
        Just(Charge1Family::LocallyFree),
        Just(Charge1Family::GloballySurjectiveRank2),
        Just(Charge1Family::GloballyInjectiveRank2),
        Just(Charge1Family::DoublyDegenerate),
    ]
}

fn gauge(s: &mut Sampler, d: DimVector) -> [RationalMatrix; 3] {
    [
        s.invertible_matrix(d.s_minus1),
        s.invertible_matrix(d.s0),
        s.invertible_matrix(d.s1),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn skew_determinant_is_pfaffian_squared(f in skew_form()) {
        let m = f.matrix();
        let pf = m.pfaffian4().unwrap();
        prop_assert_eq!(&pf, &f.pfaffian());
        prop_assert_eq!(m.determinant().unwrap(), &pf * &pf);
        prop_assert_eq!(cofactor_det(&rows_of(&m)), &pf * &pf);
        prop_assert!([0, 2, 4].contains(&m.rank()));
        prop_assert_eq!(m.rank(), rank_of(&m));
    }

    #[test]
    fn rank_agrees_with_oracle_and_transpose(m in any_rank_matrix()) {
        prop_assert_eq!(m.rank(), rank_of(&m));
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_basis_is_a_basis_of_the_kernel(m in any_rank_matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(k.len(), m.cols() - m.rank());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        if !k.is_empty() {
            prop_assert_eq!(rank(&k), k.len());
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion(m in matrix(4, 4)) {
        prop_assert_eq!(m.determinant().unwrap(), cofactor_det(&rows_of(&m)));
        if let Ok(inv) = m.inverse() {
            prop_assert_eq!(&m * &inv, RationalMatrix::identity(4));
        } else {
            prop_assert!(cofactor_det(&rows_of(&m)).is_zero());
        }
    }

    #[test]
    fn pencil_evaluation_is_linear(
        coeff in proptest::array::uniform4(matrix(3, 2)),
        l in proptest::array::uniform4(rational()),
        u in proptest::array::uniform4(rational()),
    ) {
        let p = LinearPencil::new(coeff).unwrap();
        let sum: Vec<Rational> = l.iter().zip(&u).map(|(a, b)| a + b).collect();
        prop_assert_eq!(p.evaluate(&sum), &p.evaluate(&l) + &p.evaluate(&u));
    }

    #[test]
    fn surjective_questions_are_transposed_injective_questions(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (rows, cols) = (1 + s.index(2), 3 + s.index(2));
        let k = s.index(4);
        let p = LinearPencil::new(std::array::from_fn(|_| s.matrix_of_rank(rows, cols, k.min(rows)))).unwrap();
        let cfg = ProbeConfig::with_seed(seed);
        prop_assert_eq!(
            p.is_surjective_everywhere(&cfg).unwrap(),
            p.transpose().is_injective_everywhere(&cfg).unwrap()
        );
        prop_assert_eq!(
            p.fail_locus_codim_at_least_2(Mode::Surjective, &cfg),
            p.transpose().fail_locus_codim_at_least_2(Mode::Injective, &cfg)
        );
    }

    #[test]
    fn negative_pencil_verdicts_carry_verifiable_certificates(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (rows, cols) = (2 + s.index(3), 1 + s.index(2));
        let p = LinearPencil::new(std::array::from_fn(|_| {
            let rank = s.index(cols + 1);
            s.matrix_of_rank(rows, cols, rank)
        }))
        .unwrap();
        let cfg = ProbeConfig::with_seed(seed);
        for (v, mode) in [
            (p.is_injective_everywhere(&cfg).unwrap(), Mode::Injective),
            (p.fail_locus_codim_at_least_2(Mode::Injective, &cfg), Mode::Injective),
        ] {
            if v.answer == Answer::No {
                prop_assert!(v.certificate.is_some());
                prop_assert!(v.verify(&p, mode));
                if let Some(Certificate::Point(l)) = &v.certificate {
                    prop_assert!(rank_of(&p.evaluate(l)) < cols);
                }
            }
        }
    }

    #[test]
    fn relations_are_gauge_invariant(fam in family(), seed in any::<u64>(), break_it in any::<bool>()) {
        let mut s = Sampler::new(seed);
        let mut r = fam.sample(&mut s);
        if break_it {
            let mut f = r.f().clone();
            f[s.index(4)][(s.index(4), 0)] += s.nonzero_rational();
            r = QuiverRep::new(r.dim(), f, r.g().clone()).unwrap();
        }
        let [a, b, c] = gauge(&mut s, r.dim());
        let moved = r.gauge_act(&a, &b, &c).unwrap();
        prop_assert_eq!(moved.relations_hold(), r.relations_hold());
        prop_assert_eq!(moved.check_relations().holds(), r.check_relations().holds());
    }

    #[test]
    fn normal_form_is_constant_on_gauge_orbits(f in skew_form(), seed in any::<u64>()) {
        let r = from_skew_form(&f);
        let mut s = Sampler::new(seed);
        for _ in 0..5 {
            let [a, b, c] = gauge(&mut s, r.dim());
            prop_assert_eq!(normal_form(&r.gauge_act(&a, &b, &c).unwrap()).unwrap(), f.clone());
        }
    }

    #[test]
    fn off_quadric_iff_rank_four_iff_globally_injective(f in skew_form()) {
        let r = from_skew_form(&f);
        let full = f.matrix().rank() == 4;
        prop_assert_eq!(full, f.quadric_membership() == QuadricMembership::OffQuadric);
        prop_assert_eq!(full, r.globally_injective(&ProbeConfig::default()).answer == Answer::Yes);
    }

    #[test]
    fn verdict_is_scale_invariant(fam in family(), seed in any::<u64>(), a in rational(), g in rational()) {
        let r = fam.sample(&mut Sampler::new(seed));
        let theta = StabilityParam::new(a, g, 1);
        let base = is_stable_charge1(&r, &theta).unwrap();
        for l in [q(2), qq(1, 3), q(7)] {
            let scaled = is_stable_charge1(&r, &theta.scaled(&l)).unwrap();
            prop_assert_eq!(
                std::mem::discriminant(&scaled),
                std::mem::discriminant(&base)
            );
        }
        prop_assert!(theta.theta_dot(&DimVector::instanton(1)).is_zero());
    }

    #[test]
    fn unstable_certificates_destabilize(fam in family(), seed in any::<u64>(), a in rational(), g in rational()) {
        let r = fam.sample(&mut Sampler::new(seed));
        let theta = StabilityParam::new(a.clone(), g.clone(), 1);
        if let StabilityVerdict::Unstable(d) = is_stable_charge1(&r, &theta).unwrap() {
            prop_assert!(theta_dot(1, &a, &g, d) > Rational::zero());
            prop_assert!(brute_subreps_charge1(&r).contains(&d));
        }
    }

    #[test]
    fn regions_lie_in_the_open_fourth_quadrant(fam in family(), seed in any::<u64>()) {
        let r = fam.sample(&mut Sampler::new(seed));
        let region = stability_region_charge1(&r).unwrap();
        for sector in &region.sectors {
            for ray in [&sector.start, &sector.end] {
                prop_assert!(ray.alpha() >= Rational::zero() && ray.gamma() <= Rational::zero());
            }
            let p = sector.interior_point();
            prop_assert!(p.in_open_fourth_quadrant());
            let theta = StabilityParam::new(p.alpha(), p.gamma(), 1);
            prop_assert_eq!(is_stable_charge1(&r, &theta).unwrap(), StabilityVerdict::Stable);
        }
    }

    #[test]
    fn wall_value_of_rank_two_reps(seed in any::<u64>(), a in rational(), g in rational()) {
        let r = Charge1Family::GloballySurjectiveRank2.sample(&mut Sampler::new(seed));
        let d = DimVector::new(1, 2, 1);
        prop_assert!(brute_subreps_charge1(&r).contains(&d));
        let theta = StabilityParam::new(a.clone(), g.clone(), 1);
        prop_assert_eq!(theta.theta_dot(&d), (a + g) / q(2));
    }

    #[test]
    fn hom_space_contains_identity(fam in family(), seed in any::<u64>()) {
        let r = fam.sample(&mut Sampler::new(seed));
        prop_assert!(r.hom_space_dim(&r) >= 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sampled_witnesses_reverify(seed in any::<u64>(), a in 0usize..=2, b in 1usize..=4, c in 0usize..=2) {
        let mut s = Sampler::new(seed);
        let d = DimVector::new(a, b, c);
        // Random f with g = 0 satisfies the relations for any dimensions.
        let f = std::array::from_fn(|_| s.matrix(b, a));
        let g = std::array::from_fn(|_| RationalMatrix::zeros(c, b));
        let r = QuiverRep::new(d, f, g).unwrap();
        for (dim, w) in sampled_subreps(&r, SubrepSearch::Sampled { samples: 4, seed }) {
            prop_assert_eq!(w.dim, dim);
            prop_assert!(w.verify(&r));
        }
    }

    #[test]
    fn elementary_dimension_facts(seed in any::<u64>(), a in 1usize..=3, b in 1usize..=6, c in 0usize..=3) {
        let mut s = Sampler::new(seed);
        let f = std::array::from_fn(|_| s.matrix(b, a));
        let g = std::array::from_fn(|_| RationalMatrix::zeros(c, b));
        let r = QuiverRep::new(DimVector::new(a, b, c), f, g).unwrap();
        let cfg = ProbeConfig::with_seed(seed);
        if r.locally_injective(&cfg).is_affirmative() {
            prop_assert!(b > a);
        }
        if r.globally_injective(&cfg).is_affirmative() {
            prop_assert!(b >= a + 3);
        }
    }
}

#[test]
fn charge1_pencil_verdicts_match_ranks() {
    let cfg = ProbeConfig::default();
    let mut s = Sampler::new(11);
    for k in 0..1000 {
        let r = Charge1Family::ALL[k % 4].sample(&mut s);
        let (m, _) = m_and_n(&r);
        let rk = rank(&m);
        let inj = r.eta_pencil().is_injective_everywhere(&cfg).unwrap();
        let codim = r
            .eta_pencil()
            .fail_locus_codim_at_least_2(Mode::Injective, &cfg);
        assert_eq!(inj.answer == Answer::Yes, rk == 4);
        assert_eq!(codim.answer == Answer::Yes, rk >= 2);
        assert!(inj.is_exact() && codim.is_exact());
    }
}

#[test]
fn generated_instantons_satisfy_elementary_facts() {
    let cfg = ProbeConfig::default();
    for (n, seeds) in [(1usize, 0..20u64), (2, 0..3)] {
        for seed in seeds {
            let m =
                instanton_quiver::generate_instanton(n, instanton_quiver::InstantonKind::Any, seed)
                    .unwrap();
            let r = m.functor_f();
            let d = r.dim();
            assert!(r.locally_injective(&cfg).is_affirmative());
            assert!(r.globally_surjective(&cfg).is_affirmative());
            assert!(d.s0 > d.s_minus1);
            if m.diagnose(seed)
                .unwrap()
                .alpha_injective_everywhere
                .is_affirmative()
            {
                assert!(d.s0 >= d.s1 + 3);
            }
            assert_eq!(r.hom_space_dim(&r), 1);
            assert_eq!(instanton_quiver::Monad::from_rep(&r).unwrap(), m);
        }
    }
}

#[test]
fn locally_free_charge1_subreps_are_exactly_0b1() {
    let mut s = Sampler::new(12);
    let want: std::collections::BTreeSet<_> = (0..=4).map(|b| DimVector::new(0, b, 1)).collect();
    for _ in 0..100 {
        let r = Charge1Family::LocallyFree.sample(&mut s);
        assert_eq!(
            instanton_quiver::all_subrep_dimvectors_charge1(&r).unwrap(),
            want
        );
    }
}

#[test]
fn theta_eps_holds_at_one_hundredth() {
    assert_eq!(
        verify_theta_eps_charge2(&qq(1, 100)).unwrap(),
        ThetaEpsCheck::Holds
    );
}

fn grid_points() -> Vec<(Rational, Rational)> {
    [(1, -3), (3, -1), (2, -2), (1, 2), (-2, -1)]
        .into_iter()
        .map(|(a, g)| (q(a), q(g)))
        .collect()
}

#[test]
fn classify_agrees_with_stability_on_the_grid() {
    for fam in Charge1Family::ALL {
        let r = fam.representative();
        for (a, g) in grid_points() {
            let theta = StabilityParam::new(a.clone(), g.clone(), 1);
            let class = classify(&r, &theta).unwrap();
            let stable = is_stable_charge1(&r, &theta).unwrap().is_stable();
            let named = matches!(
                class.kind,
                Charge1Kind::LocallyFreeInstanton
                    | Charge1Kind::NonLocallyFreeInstanton
                    | Charge1Kind::PerverseDual
            );
            assert_eq!(named, stable, "{fam:?} at ({a}, {g})");
            assert_eq!(class.region, region_of(&a, &g));
            let pf_nonzero = fam == Charge1Family::LocallyFree;
            let lf_here = class.kind == Charge1Kind::LocallyFreeInstanton;
            assert_eq!(lf_here, pf_nonzero && class.region != Region::OutsideQ4);
        }
    }
}

#[test]
fn duality_exchanges_the_degenerate_cells() {
    let gs = Charge1Family::GloballySurjectiveRank2.representative();
    let gi = gs.dual();
    for (a, g) in grid_points() {
        let here = classify(&gs, &StabilityParam::new(a.clone(), g.clone(), 1)).unwrap();
        // Dualizing swaps the roles of α and γ up to sign: (α, γ) -> (-γ, -α).
        let there = classify(&gi, &StabilityParam::new(-g.clone(), -a.clone(), 1)).unwrap();
        let swapped = match here.kind {
            Charge1Kind::NonLocallyFreeInstanton => Charge1Kind::PerverseDual,
            Charge1Kind::PerverseDual => Charge1Kind::NonLocallyFreeInstanton,
            k => k,
        };
        assert_eq!(there.kind, swapped, "at ({a}, {g})");
    }
    let one = Rational::one();
    assert_eq!(
        classify(&gi, &StabilityParam::new(q(3), -one, 1))
            .unwrap()
            .kind,
        Charge1Kind::PerverseDual
    );
}
