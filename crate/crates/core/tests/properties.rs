use std::sync::{Arc, OnceLock};

use gaugeforge::bernoulli::{conditional_exact, LatticePoint};
use gaugeforge::exact_algebra::{CyclotomicInt, Representation};
use gaugeforge::extension::WGroup;
use gaugeforge::gauge::{Connection, GaugeTransformation};
use gaugeforge::graph_space::{automorphism_group, fundamental_cycles, Space};
use gaugeforge::perm_group::PermutationGroup;
use gaugeforge::quantizer::{
    amplitude_1d_dp, amplitude_1d_dp_with_rule, amplitude_graph_dp, graph_pattern, interference_pattern_with,
    GraphModel, LocalRule1D, Source,
};
use gaugeforge::seeded_rng;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

const SPACES: [Space; 10] = [
    Space::Dimer,
    Space::Triangle,
    Space::Polygon(5),
    Space::Tetrahedron,
    Space::Octahedron,
    Space::Hexahedron,
    Space::Icosahedron,
    Space::Dodecahedron,
    Space::Buckyball,
    Space::ToricSquare(3),
];

fn aut_groups() -> &'static Vec<PermutationGroup> {
    static GROUPS: OnceLock<Vec<PermutationGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| SPACES.iter().map(|s| automorphism_group(&s.graph()).unwrap()).collect())
}

#[test]
fn orbit_stabilizer_on_every_catalog_point() {
    for (space, g) in SPACES.iter().zip(aut_groups()) {
        for x in 0..g.degree() {
            let orbit = g.orbit(x).unwrap().len();
            let stab = g.stabilizer(x).unwrap().order();
            assert_eq!(orbit * stab, g.order(), "{space} at {x}");
        }
    }
}

fn cyclotomic(modulus: usize) -> impl Strategy<Value = CyclotomicInt> {
    prop::collection::vec(-50i64..=50, modulus)
        .prop_map(move |c| CyclotomicInt::from_coeffs(modulus, c.into_iter().map(BigInt::from).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn compose_is_associative(which in 0..SPACES.len(), a in any::<prop::sample::Index>(),
                              b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let g = &aut_groups()[which];
        let [a, b, c] = [a, b, c].map(|i| g.element(i.index(g.order())));
        let left = a.compose(b).unwrap().compose(c).unwrap();
        let right = a.compose(&b.compose(c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn norm_embeds_nonnegative(z in (1usize..=12).prop_flat_map(cyclotomic)) {
        let n = (&z * &z.conj()).embed(1);
        prop_assert!(n.re >= -1e-9 * (1.0 + n.re.abs()));
        prop_assert!(n.im.abs() <= 1e-9 * (1.0 + n.re.abs()));
        prop_assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn gauge_transformations_keep_inversion_symmetry_and_curvature(which in 0..SPACES.len(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let graph = Arc::new(SPACES[which].graph());
        let h = Arc::new(PermutationGroup::symmetric(3));
        let c = Connection::random(Arc::clone(&graph), Arc::clone(&h), &mut rng);
        let u = GaugeTransformation::random(graph.vertex_count(), &h, &mut rng);
        let moved = c.gauge_transform(&u).unwrap();
        for &(x, y) in graph.edges() {
            prop_assert_eq!(moved.value(y, x).unwrap(), h.inv(moved.value(x, y).unwrap()));
        }
        for cycle in fundamental_cycles(&graph).unwrap() {
            prop_assert_eq!(moved.curvature_class(&cycle).unwrap(), c.curvature_class(&cycle).unwrap());
            let mut back = vec![cycle[0]];
            back.extend(cycle[1..].iter().rev());
            prop_assert_eq!(c.holonomy(&back).unwrap(), h.inv(c.holonomy(&cycle).unwrap()));
        }
    }

    #[test]
    fn extension_action_axiom(k in -2i64..=2, m in 0i64..=1, seed in any::<u64>()) {
        let g = automorphism_group(&Space::Polygon(4).graph()).unwrap();
        let w = WGroup::with_km(g, PermutationGroup::symmetric(3), k, m).unwrap();
        let mut rng = seeded_rng(seed);
        let (u, v) = (w.random_element(&mut rng), w.random_element(&mut rng));
        let sigma = w.random_configuration(&mut rng);
        prop_assert_eq!(w.act(&sigma, &w.mul(&u, &v)), w.act(&w.act(&sigma, &u), &v));
    }

    #[test]
    fn equivalence_map_is_injective(k in -2i64..=2, k2 in -2i64..=2, seed in any::<u64>()) {
        let g = automorphism_group(&Space::Triangle.graph()).unwrap();
        let c3 = PermutationGroup::cyclic(3);
        let a = WGroup::with_km(g.clone(), c3.clone(), k, 1).unwrap();
        let b = WGroup::with_km(g, c3, k2, 1).unwrap();
        let mut rng = seeded_rng(seed);
        let (u, v) = (a.random_element(&mut rng), a.random_element(&mut rng));
        let (ku, kv) = (a.equivalence_map(&b, &u).unwrap(), a.equivalence_map(&b, &v).unwrap());
        prop_assert_eq!(u == v, ku == kv);
        prop_assert_eq!(b.equivalence_map(&a, &ku).unwrap(), u);
    }

    #[test]
    fn line_dp_is_linear(
        sources in prop::collection::vec((-5i64..=5, 0usize..6), 1..4),
        t in 0u64..10,
    ) {
        let m = 6;
        let sources: Vec<Source> = sources.into_iter().map(|(x, p)| Source::new(x, p)).collect();
        let all = amplitude_1d_dp(&sources, t, m).unwrap();
        for x in all.positions() {
            let mut sum = CyclotomicInt::zero(m);
            for s in &sources {
                sum = &sum + &amplitude_1d_dp(&[*s], t, m).unwrap().get(x);
            }
            prop_assert_eq!(all.get(x), sum);
        }
    }

    #[test]
    fn gauge_shift_leaves_pattern_unchanged(c in 0usize..4, t in 1u64..12, phase in 0usize..4) {
        let rule = LocalRule1D::free(4);
        let sources = [Source::new(-2, 0), Source::new(3, phase)];
        let shifted = rule.gauge_shifted(c);
        let a = amplitude_1d_dp_with_rule(&sources, t, &rule).unwrap();
        let b = amplitude_1d_dp_with_rule(&sources, t, &shifted).unwrap();
        for x in a.positions() {
            prop_assert_eq!(b.get(x), a.get(x).shift((c as u64 * t) as i64));
        }
        match (interference_pattern_with(&sources, t, &rule, 1), interference_pattern_with(&sources, t, &shifted, 1)) {
            (Ok(p), Ok(q)) => {
                for (r, s) in p.rows.iter().zip(&q.rows) {
                    prop_assert!(r.squared.value_eq(&s.squared));
                }
            }
            (p, q) => prop_assert_eq!(p.is_err(), q.is_err()),
        }
    }

    #[test]
    fn conditional_law_is_a_distribution(big_t in 1u64..40, x_steps in 0u64..40) {
        let x_steps = x_steps % (big_t + 1);
        let big_x = 2 * x_steps as i64 - big_t as i64;
        let end = LatticePoint::new(big_x, big_t);
        for t in 0..=big_t {
            let total: BigRational = (-(t as i64)..=t as i64)
                .step_by(2)
                .map(|x| conditional_exact(LatticePoint::new(x, t), end).unwrap_or_else(|_| BigRational::zero()))
                .sum();
            prop_assert_eq!(total, BigRational::one());
            let mirror = LatticePoint::new(-big_x, big_t);
            for x in (-(t as i64)..=t as i64).step_by(2) {
                prop_assert_eq!(
                    conditional_exact(LatticePoint::new(x, t), end).ok(),
                    conditional_exact(LatticePoint::new(-x, t), mirror).ok()
                );
            }
        }
    }
}

#[test]
fn graph_pattern_is_normalised_and_symmetric() {
    let graph = Arc::new(Space::Dodecahedron.graph());
    let gamma = Arc::new(PermutationGroup::from_spec("C2xC3").unwrap());
    let model = GraphModel::from_orbit_values(Arc::clone(&graph), Arc::clone(&gamma), 0, &[4]).unwrap();
    let rep = Representation::character(&gamma, 6, &[3, 2]).unwrap();
    let amps = amplitude_graph_dp(&model, &[(0, 0)], 5).unwrap();
    let pattern = graph_pattern(&amps, &rep, 1).unwrap();
    assert_eq!(pattern.rows.len(), 20);
    let sum: f64 = pattern.rows.iter().map(|r| r.probability).sum();
    assert!((sum - 1.0).abs() < 1e-12);
    // vertices at equal distance from the source share a probability
    let stab = automorphism_group(&graph).unwrap().stabilizer(0).unwrap();
    for g in stab.elements() {
        for x in 0..20 {
            assert_eq!(pattern.rows[x].squared, pattern.rows[g.apply(x)].squared);
        }
    }
    // a character of order 2 can cancel paths exactly
    let sign = Representation::character(&gamma, 2, &[1, 0]).unwrap();
    let model = GraphModel::from_orbit_values(graph, Arc::clone(&gamma), 0, &[1]).unwrap();
    let amps = amplitude_graph_dp(&model, &[(0, 0)], 2).unwrap();
    let pattern = graph_pattern(&amps, &sign, 1).unwrap();
    let zeros = pattern.rows.iter().filter(|r| r.probability == 0.0).count();
    assert!(zeros > 0);
}
