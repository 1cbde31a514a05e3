mod common;

use corado::bergman::{
    bergman_fan, fans_equal, is_strict_gammoid, is_transversal,
    stable_intersection_with_hyperplanes, BergmanFan, StableIntersection,
};
use corado::chow::{
    degree, degree_via_intersection, dhr_witness, independent_transversal_avoiding,
    independent_transversal_extending, monomial_basis, product_class, relative_nested_quotient,
    BergmanClass, SimplicialMonomial,
};
use corado::enumerate::loopless_matroids;
use corado::io::{parse_matroid, render_matroid};
use corado::ops::{intersect_all, intersection, principal_truncation, union};
use corado::rado::{
    build_g, corado, corado_target, has_independent_transversal, rado_matroid, transversal_matroid,
};
use corado::{Error, GroundSet, Matroid, SetSystem, Subset};

use common::*;

fn sub(m: &Matroid, labels: &[&str]) -> Subset {
    m.ground().subset(labels).unwrap()
}

fn system(m: &Matroid, members: &[&[&str]]) -> SetSystem {
    SetSystem::from_labels(m.ground().clone(), members).unwrap()
}

fn basis_strings(m: &Matroid) -> Vec<String> {
    m.bases().iter().map(|&b| labels(m, b)).collect()
}

#[test]
fn graph_matroid_rank_and_closures() {
    let m = example_graph();
    assert_eq!(m.rank(), 4);
    assert_eq!(m.bases().len(), 16);
    assert_eq!(m.rank_of(sub(&m, &["2", "3", "4"])), 2);
    assert_eq!(m.closure(sub(&m, &["1", "3"])), sub(&m, &["1", "3", "5"]));
    assert!(m.circuits().contains(&sub(&m, &["1", "3", "5"])));
    assert!(m.loops().is_empty());
    assert_eq!(m.dual().rank(), 3);
    for s in Subset::full(7).subsets() {
        assert_eq!(m.rank_of(s), rank_oracle(&m, s), "rank of {s:?}");
    }
}

#[test]
fn truncation_at_closure_drops_rank() {
    let m = example_graph();
    let f = m.closure(sub(&m, &["2", "3", "4"]));
    assert_eq!(principal_truncation(&m, f).unwrap().rank(), 3);
}

#[test]
fn graph_corado_both_routes() {
    let m = example_graph();
    let a = example_system(&m);
    let c = corado(&m, &a).unwrap();
    assert_eq!(basis_strings(&c), ["17", "27", "37", "47", "57", "67"]);

    let h1 = Matroid::hyperplane(m.ground().clone(), a.members()[0]).unwrap();
    let h2 = Matroid::hyperplane(m.ground().clone(), a.members()[1]).unwrap();
    assert_eq!(h1.rank(), 6);
    assert_eq!(intersect_all(&m, [&h1, &h2]).unwrap(), c);

    let dual_union = union(&union(&m.dual(), &h1.dual()).unwrap(), &h2.dual()).unwrap();
    assert_eq!(dual_union, c.dual());
}

#[test]
fn graph_rado_matroid_and_auxiliary_graph() {
    let m = example_graph();
    let a = example_system(&m);
    let graph = build_g(&a).unwrap();
    let right: Vec<&str> = graph.right().labels().iter().map(String::as_str).collect();
    assert_eq!(
        right,
        ["1^", "2^", "3^", "4^", "5^", "6^", "7^", "A1", "A2"]
    );
    assert_eq!(graph.edges().len(), 7 + 5);

    let target = corado_target(&m, &a).unwrap();
    assert_eq!((target.len(), target.rank()), (9, 5));
    let r = rado_matroid(&graph, &target).unwrap();
    assert_eq!(r.rank(), 5);
    assert!(r.is_basis(sub(&m, &["1", "2", "3", "5", "6"])));
}

#[test]
fn graph_transversals() {
    let m = example_graph();
    let a = example_system(&m);
    let w = has_independent_transversal(&a, &m).unwrap().unwrap();
    assert!(m.is_independent(w.iter().copied().collect()));
    assert_eq!(labels(&m, w.iter().copied().collect()), "24");

    let avoid4 = independent_transversal_avoiding(&m, &a, 3)
        .unwrap()
        .unwrap();
    assert_eq!(labels(&m, avoid4.iter().copied().collect()), "26");

    let twice = system(&m, &[&["1"], &["1"]]);
    assert_eq!(has_independent_transversal(&twice, &m).unwrap(), None);
    let single = system(&m, &[&["5"]]);
    assert_eq!(
        independent_transversal_avoiding(&m, &single, 4).unwrap(),
        None
    );

    let tm = transversal_matroid(&a).unwrap();
    assert_eq!(tm.rank(), 2);
    assert_eq!(tm.bases().len(), 1);
}

#[test]
fn graph_presentations() {
    let m = example_graph();
    assert_eq!(is_strict_gammoid(&m).unwrap(), None);
    assert_eq!(is_transversal(&m.dual()).unwrap(), None);
}

#[test]
fn graph_fan_and_product() {
    let m = example_graph();
    let a = example_system(&m);
    let c = corado(&m, &a).unwrap();
    match stable_intersection_with_hyperplanes(&m, &a).unwrap() {
        StableIntersection::Fan(f) => assert!(fans_equal(&f, &bergman_fan(&c).unwrap()).unwrap()),
        StableIntersection::Vanished => panic!("intersection vanished"),
    }
    assert_eq!(product_class(&m, &a).unwrap(), BergmanClass::Matroid(c));

    let three = system(&m, &[&["2", "3", "4"], &["4", "6"], &["5", "6", "7"]]);
    let d = degree(&m, &three).unwrap();
    assert_eq!(d, degree_via_intersection(&m, &three).unwrap());
    assert_eq!(d, 1);
    assert_eq!(dhr_witness(&m, &three), None);
}

#[test]
fn uniform_cases() {
    let g3 = g(3);
    let u23 = Matroid::uniform(2, g3.clone()).unwrap();
    let u13 = Matroid::uniform(1, g3.clone()).unwrap();
    let u33 = Matroid::free(g3.clone());
    assert_eq!(u13.dual(), u23);
    assert_eq!(u23.flats().len(), 5);

    let h_all = Matroid::hyperplane(g3.clone(), g3.full()).unwrap();
    assert_eq!(h_all, u23);
    assert_eq!(intersection(&u23, &h_all).unwrap(), u13);
    assert_eq!(intersection(&u23, &u33).unwrap(), u23);
    assert_eq!(
        union(&u23, &Matroid::uniform(0, g3.clone()).unwrap()).unwrap(),
        u23
    );

    let hs = Matroid::hyperplane(g3.clone(), Subset::from_indices([0, 1])).unwrap();
    assert_eq!(basis_strings(&hs), ["13", "23"]);
    assert_eq!(hs.coloops(), Subset::singleton(2));

    let g2 = g(2);
    let u12 = Matroid::uniform(1, g2.clone()).unwrap();
    assert_eq!(union(&u12, &u12).unwrap(), Matroid::free(g2));
}

#[test]
fn truncation_definitions() {
    let u23 = Matroid::uniform(2, g(3)).unwrap();
    let t = principal_truncation(&u23, Subset::singleton(0)).unwrap();
    assert_eq!(basis_strings(&t), ["2", "3"]);
    assert_eq!(
        principal_truncation(&u23, Subset::full(3)).unwrap().rank(),
        1
    );
    assert_eq!(
        principal_truncation(&u23, Subset::EMPTY),
        Err(Error::EmptyFlat)
    );
}

#[test]
fn corado_on_free_matroids() {
    let u33 = Matroid::free(g(3));
    let a = system(&u33, &[&["1", "2"], &["1", "3"]]);
    assert_eq!(
        corado(&u33, &a).unwrap(),
        Matroid::uniform(1, g(3)).unwrap()
    );
    assert_eq!(corado(&u33, &SetSystem::empty(g(3))).unwrap(), u33);
    assert_eq!(degree(&u33, &a).unwrap(), 1);

    let b = system(&u33, &[&["1", "2"], &["1", "2"]]);
    assert_eq!(degree(&u33, &b).unwrap(), 0);
    assert_eq!(dhr_witness(&u33, &b), Some(vec![0, 1]));
    let low = system(&u33, &[&["1"], &["1", "2", "3"]]);
    assert_eq!(dhr_witness(&u33, &low), Some(vec![0]));
}

#[test]
fn vanishing_products() {
    let u22 = Matroid::free(g(2));
    let a = system(&u22, &[&["1"], &["1"]]);
    assert_eq!(product_class(&u22, &a).unwrap(), BergmanClass::Zero);
    assert_eq!(
        stable_intersection_with_hyperplanes(&u22, &a).unwrap(),
        StableIntersection::Vanished
    );
    assert!(intersection_oracle(
        &u22,
        &Matroid::hyperplane(g(2), Subset::singleton(0)).unwrap()
    )
    .loops()
    .contains(0));
}

#[test]
fn free_matroid_monomials() {
    let u33 = Matroid::free(g(3));
    let one = monomial_basis(&u33, 1).unwrap();
    let shown: Vec<String> = one.iter().map(|m| m.format(u33.ground())).collect();
    assert_eq!(shown, ["h{1,2}", "h{1,3}", "h{2,3}", "h{1,2,3}"]);
    let two = monomial_basis(&u33, 2).unwrap();
    assert_eq!(two.len(), 1);
    assert_eq!(two[0].format(u33.ground()), "h{1,2,3}^2");
    assert_eq!(
        monomial_basis(&u33, 0).unwrap(),
        vec![SimplicialMonomial::one()]
    );

    let top = SimplicialMonomial::new(&u33, vec![Subset::full(3)], vec![1]).unwrap();
    assert_eq!(
        relative_nested_quotient(&u33, &top).unwrap(),
        Matroid::uniform(2, g(3)).unwrap()
    );
    let u55 = Matroid::free(g(5));
    let sq = SimplicialMonomial::new(&u55, vec![Subset::full(5)], vec![2]).unwrap();
    assert_eq!(
        relative_nested_quotient(&u55, &sq).unwrap(),
        Matroid::uniform(3, g(5)).unwrap()
    );
}

#[test]
fn monomial_counts_match_chain_oracle() {
    for n in 1..=4 {
        for m in loopless_matroids(n).unwrap() {
            for c in 0..m.rank() {
                assert_eq!(
                    monomial_basis(&m, c).unwrap().len(),
                    monomial_count_oracle(&m, c),
                    "{:?} in degree {c}",
                    m.format_bases()
                );
            }
        }
    }
}

#[test]
fn linear_quotient_is_truncation() {
    for m in loopless_matroids(4).unwrap() {
        for f in m.flats() {
            if m.rank_of(f) < 2 {
                continue;
            }
            let mono = SimplicialMonomial::new(&m, vec![f], vec![1]).unwrap();
            assert_eq!(
                relative_nested_quotient(&m, &mono).unwrap(),
                principal_truncation(&m, f).unwrap()
            );
        }
    }
}

#[test]
fn bergman_fans_separate_loopless_matroids() {
    for n in 1..=5 {
        let ms = loopless_matroids(n).unwrap();
        let fans: Vec<BergmanFan> = ms.iter().map(|m| bergman_fan(m).unwrap()).collect();
        for i in 0..fans.len() {
            for j in 0..fans.len() {
                assert_eq!(fans_equal(&fans[i], &fans[j]).unwrap(), i == j);
            }
        }
    }
}

#[test]
fn fan_shapes() {
    let u23 = Matroid::uniform(2, g(3)).unwrap();
    let f = bergman_fan(&u23).unwrap();
    assert_eq!(f.ray_flats().len(), 3);
    assert_eq!(f.maximal_cones().len(), 3);

    let u14 = Matroid::uniform(1, g(4)).unwrap();
    let f = bergman_fan(&u14).unwrap();
    assert_eq!(f.maximal_cones().len(), 1);
    assert!(f.maximal_cones()[0].is_empty());

    let scaled = BergmanFan::from_ray_cones(
        g(3),
        &[
            vec![vec![2, 0, 0]],
            vec![vec![0, 3, 0]],
            vec![vec![5, 5, 7]],
        ],
    )
    .unwrap();
    assert!(fans_equal(&scaled, &bergman_fan(&u23).unwrap()).unwrap());
}

#[test]
fn uniform_presentations() {
    for n in 0..=5 {
        for k in 0..=n {
            let u = Matroid::uniform(k, g(n)).unwrap();
            let p = is_transversal(&u)
                .unwrap()
                .expect("uniform matroids are transversal");
            assert_eq!(p.len(), k);
            if k > 0 || n == 0 {
                assert!(is_strict_gammoid(&u).unwrap().is_some());
            }
        }
    }
}

#[test]
fn transversal_matroid_small() {
    let y = g(3);
    let a = SetSystem::new(
        y.clone(),
        vec![Subset::from_indices([0, 1]), Subset::from_indices([1, 2])],
    )
    .unwrap();
    let t = transversal_matroid(&a).unwrap();
    assert_eq!((t.len(), t.rank(), t.bases().len()), (2, 2, 1));
    let b = SetSystem::new(y, vec![Subset::singleton(0), Subset::singleton(0)]).unwrap();
    let t = transversal_matroid(&b).unwrap();
    assert_eq!(t.rank(), 1);
    assert_eq!(t.circuits(), vec![Subset::full(2)]);
}

#[test]
fn extending_transversal_separates_coloop_example() {
    let m = Matroid::from_bases(
        g(3),
        [Subset::from_indices([0, 1]), Subset::from_indices([0, 2])],
    )
    .unwrap();
    let a = system(&m, &[&["2", "3"]]);
    assert!(dhr_witness(&m, &a).is_some());
    assert_eq!(degree(&m, &a).unwrap(), 0);
    for e in 0..3 {
        assert!(independent_transversal_avoiding(&m, &a, e)
            .unwrap()
            .is_some());
    }
    assert_eq!(independent_transversal_extending(&m, &a, 1).unwrap(), None);
    assert!(independent_transversal_extending(&m, &a, 0)
        .unwrap()
        .is_some());
}

#[test]
fn rendering_round_trips_graph_matroid() {
    let m = example_graph();
    assert_eq!(parse_matroid(&render_matroid(&m)).unwrap(), m);
    let u = parse_matroid(r#"{"type":"uniform","k":1,"ground":["1","2"]}"#).unwrap();
    assert_eq!(
        u,
        Matroid::uniform(1, GroundSet::numbered(2).unwrap()).unwrap()
    );
}
