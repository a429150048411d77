use genus_core::embed_oracle::{
    build_named_graph, enumerate_distribution, Multigraph, DEFAULT_BUDGET,
};
use genus_core::graphfam::{genus_poly, GraphFamily, NamedFamily};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn named(f: GraphFamily, n: u32) -> Multigraph {
    build_named_graph(NamedFamily::new(f, n).unwrap()).unwrap()
}

fn canonical_edges(g: &Multigraph) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    e.sort_unstable();
    e
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn oracle_agrees_with_formulas() {
    let cases = [
        (GraphFamily::L, 1..=6),
        (GraphFamily::CL, 3..=6),
        (GraphFamily::ML, 3..=6),
        (GraphFamily::RL, 1..=4),
    ];
    for (f, ns) in cases {
        for n in ns {
            let fam = NamedFamily::new(f, n).unwrap();
            let oracle = enumerate_distribution(&named(f, n), DEFAULT_BUDGET).unwrap();
            assert_eq!(oracle, genus_poly(fam).unwrap(), "{fam}");
        }
    }
}

#[test]
fn builders_are_cubic() {
    for (f, n) in [
        (GraphFamily::L, 1),
        (GraphFamily::L, 5),
        (GraphFamily::CL, 4),
        (GraphFamily::ML, 5),
        (GraphFamily::RL, 3),
    ] {
        let g = named(f, n);
        assert!(g.degrees().iter().all(|&d| d == 3), "{f}_{n}");
    }
    let prism = named(GraphFamily::CL, 3);
    assert_eq!((prism.vertex_count(), prism.edges().len()), (6, 9));
    let dipole = named(GraphFamily::L, 1);
    assert_eq!(canonical_edges(&dipole), vec![(0, 1); 3]);
}

#[test]
fn moebius_three_is_k33() {
    let ml = named(GraphFamily::ML, 3);
    let k33: Vec<(usize, usize)> = {
        let mut e: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        e.sort_unstable();
        e
    };
    let iso = permutations(6)
        .into_iter()
        .any(|p| canonical_edges(&ml.relabeled(&p).unwrap()) == k33);
    assert!(iso);
}

#[test]
fn relabeling_does_not_change_distribution() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (f, n) in [
        (GraphFamily::L, 4),
        (GraphFamily::CL, 4),
        (GraphFamily::ML, 4),
        (GraphFamily::RL, 2),
    ] {
        let g = named(f, n);
        let base = enumerate_distribution(&g, DEFAULT_BUDGET).unwrap();
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
            perm.shuffle(&mut rng);
            let h = g.relabeled(&perm).unwrap();
            assert_eq!(
                enumerate_distribution(&h, DEFAULT_BUDGET).unwrap(),
                base,
                "{f}_{n} under {perm:?}"
            );
        }
    }
}

/// Random connected multigraph: a spanning tree plus extra edges, loops
/// and parallels allowed.
fn random_multigraph(rng: &mut impl Rng) -> Multigraph {
    let v = rng.gen_range(1..=5);
    let mut edges: Vec<(usize, usize)> = (1..v).map(|i| (rng.gen_range(0..i), i)).collect();
    for _ in 0..rng.gen_range(0..=4) {
        edges.push((rng.gen_range(0..v), rng.gen_range(0..v)));
    }
    Multigraph::new(v, edges).unwrap()
}

#[test]
fn totals_equal_rotation_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let g = random_multigraph(&mut rng);
        if g.rotation_count() > 1 << 18 {
            continue;
        }
        let d = enumerate_distribution(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(d.total(), BigUint::from(g.rotation_count()), "{g:?}");
    }
}

#[test]
fn thread_count_does_not_change_result() {
    let g = named(GraphFamily::L, 8);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| enumerate_distribution(&g, DEFAULT_BUDGET).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(8));
    assert_eq!(
        one,
        genus_poly(NamedFamily::new(GraphFamily::L, 8).unwrap()).unwrap()
    );
}

#[test]
fn degenerate_two_rung_cases_match() {
    // CL_2: doubled rails; ML_2: K4. The builders stop at n = 3, so these
    // are written out by hand.
    let cl2 = Multigraph::new(4, vec![(0, 2), (1, 3), (0, 1), (0, 1), (2, 3), (2, 3)]).unwrap();
    let ml2 = Multigraph::new(4, vec![(0, 2), (1, 3), (0, 1), (2, 3), (1, 2), (3, 0)]).unwrap();
    for (g, f) in [(cl2, GraphFamily::CL), (ml2, GraphFamily::ML)] {
        let formula = genus_poly(NamedFamily::new(f, 2).unwrap()).unwrap();
        assert_eq!(
            enumerate_distribution(&g, DEFAULT_BUDGET).unwrap(),
            formula,
            "{f}_2"
        );
    }
}
