mod common;

use common::*;
use simplex_walk::*;

#[test]
fn clique_counts() {
    let k = karate();
    assert_eq!(k.counts(), vec![34, 78, 45, 11, 2]);
    assert_eq!(k.top_dim(), Some(4));
}

#[test]
fn chain_identities_hold() {
    let k = karate();
    for n in 1..=3 {
        assert!(verify_chain_identities(&k, n).unwrap().all_hold(), "n={n}");
    }
}

#[test]
fn lower_adjacency_is_symmetric_and_contains_upper() {
    let k = karate();
    for n in 1..=3 {
        let lower = k.adjacency(n, Adjacency::Lower).unwrap();
        let upper = k.adjacency(n, Adjacency::Upper).unwrap();
        for i in 0..k.count(n) {
            assert!(!lower.get(i, i));
            for &j in upper.neighbors(i) {
                assert!(lower.get(i, j) && lower.get(j, i));
            }
        }
    }
}

#[test]
fn betti_numbers() {
    let k = karate();
    assert_eq!(
        betti_number::<f64>(&k, 0, DEFAULT_KERNEL_TOLERANCE).unwrap(),
        1
    );
    // Euler characteristic agrees with the alternating Betti sum.
    let chi: i64 = k
        .counts()
        .iter()
        .enumerate()
        .map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum();
    let betti: i64 = (0..=4)
        .map(|n| {
            let b = betti_number::<f64>(&k, n, DEFAULT_KERNEL_TOLERANCE).unwrap() as i64;
            if n % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .sum();
    assert_eq!(chi, betti);
}

#[test]
fn modularity_of_reference_partitions() {
    let k = karate();
    let p1 = CommunityPartition::new(&k, 1, karate_edge_partition(&k)).unwrap();
    let q1 = simplicial_modularity::<f64>(&k, 1, &p1).unwrap();
    assert_eq!(q1.m_n, 1056);
    assert!((q1.q - 0.434).abs() <= 0.001, "{}", q1.q);

    let p2 = CommunityPartition::new(&k, 2, karate_triangle_partition()).unwrap();
    let q2 = simplicial_modularity::<f64>(&k, 2, &p2).unwrap();
    assert!((q2.q - 0.515).abs() <= 0.001, "{}", q2.q);

    let tetra = karate_tetrahedron_partition(&k);
    assert_eq!(tetra[0].len(), 9);
    let p3 = CommunityPartition::new(&k, 3, tetra).unwrap();
    assert!(simplicial_modularity::<f64>(&k, 3, &p3).unwrap().q.abs() <= 1e-9);

    let p4 = CommunityPartition::new(&k, 4, vec![k.simplices(4).to_vec()]).unwrap();
    assert!(simplicial_modularity::<f64>(&k, 4, &p4).unwrap().q.abs() <= 1e-9);
}

#[test]
fn triangle_detection_reproduces_the_reference() {
    let k = karate();
    let detection = detect_communities::<f64>(&k, 2, &DetectOptions::default()).unwrap();
    let reference = CommunityPartition::new(&k, 2, karate_triangle_partition()).unwrap();
    assert!(detection.partition.same_communities(&reference));
    assert_eq!(detection.rounds[0].start, s(&[1, 2, 3]));
}

#[test]
fn triangle_detection_agrees_across_estimators() {
    let k = karate();
    let finite = detect_communities::<f64>(&k, 2, &DetectOptions::default()).unwrap();
    let options = DetectOptions {
        estimator: Estimator::Spectral,
        ..Default::default()
    };
    let spectral = detect_communities::<f64>(&k, 2, &options).unwrap();
    assert!(finite.partition.same_communities(&spectral.partition));
}

#[test]
fn edge_detection_places_listed_cross_edges() {
    let k = karate();
    let detection = detect_communities::<f64>(&k, 1, &DetectOptions::default()).unwrap();
    let p = &detection.partition;
    let label = |a, b| p.label(&s(&[a, b])).unwrap();
    let first = label(1, 2);
    let second = label(33, 34);
    assert_ne!(first, second);
    for (a, b) in [(1, 32), (2, 31), (3, 10), (3, 28), (3, 29)] {
        assert_eq!(label(a, b), first, "({a},{b})");
    }
    for (a, b) in [(3, 33), (9, 31), (9, 33), (9, 34), (14, 34), (20, 34)] {
        assert_eq!(label(a, b), second, "({a},{b})");
    }
}

#[test]
fn symmetry_between_down_and_up_communities() {
    let k = karate();
    for n in 0..=3 {
        let report = verify_symmetry(&k, n).unwrap();
        assert!(report.holds, "n={n}");
    }
}

#[test]
fn walk_norm_over_a_hundred_steps() {
    let k = karate();
    let w = Walk::new(WalkSpace::new(&k, 1).unwrap());
    for arc in [0, 17, 500, 1055] {
        let psi = QuantumState::basis(w.dim(), arc).unwrap();
        let out = w.evolve(&psi, 100);
        assert!((out.norm_sqr() - 1.0).abs() < 1e-9);
    }
}
