use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use icircular::c1p::{brute_force_circular_ones, has_circular_ones};
use icircular::icirc::{brute_force_i_circular, has_i_circular};
use icircular::splitgraph::{
    brute_force_semi_transitive, is_semi_transitive_split, kp_decision, sg_from_matrix,
    split_partition, verify_orientation, DEFAULT_MAX_EDGES,
};
use icircular::verify::random_matrices;
use icircular::wordrep::{find_representing_word, word_represents};
use icircular::{BinaryMatrix, Error, Graph, Orientation};

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut b = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if bits >> b & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            b += 1;
        }
    }
    g
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..1u64 << (n * (n - 1) / 2)).map(move |bits| graph_from_bits(n, bits))
}

fn wheel(rim: usize) -> Graph {
    let mut g = Graph::new(rim + 1).unwrap();
    for v in 1..=rim {
        g.add_edge(v, v % rim + 1).unwrap();
        g.add_edge(v, rim + 1).unwrap();
    }
    g
}

/// Straight from the definition: acyclic, and every directed path whose
/// ends are joined by an arc induces a transitive tournament.
fn naive_semi_transitive(o: &Orientation) -> bool {
    let n = o.graph().vertex_count();
    fn walk(o: &Orientation, n: usize, path: &mut Vec<usize>, ok: &mut bool) {
        let last = *path.last().unwrap();
        for next in 1..=n {
            if !*ok || !o.has_arc(last, next) {
                continue;
            }
            if path.contains(&next) {
                *ok = false;
                return;
            }
            path.push(next);
            if path.len() >= 4 && o.has_arc(path[0], next) {
                let transitive = (0..path.len())
                    .all(|i| (i + 1..path.len()).all(|j| o.has_arc(path[i], path[j])));
                if !transitive {
                    *ok = false;
                }
            }
            walk(o, n, path, ok);
            path.pop();
        }
    }
    let mut ok = true;
    for start in 1..=n {
        walk(o, n, &mut vec![start], &mut ok);
    }
    ok
}

#[test]
fn orientation_checker_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let n = rng.gen_range(2..=7);
        let g = graph_from_bits(n, rng.gen());
        let arcs: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| if rng.gen() { (u, v) } else { (v, u) })
            .collect();
        let o = Orientation::from_arcs(g, &arcs).unwrap();
        let witness = verify_orientation(&o);
        assert_eq!(witness.is_none(), naive_semi_transitive(&o), "{arcs:?}");
        if let Some(w) = witness {
            assert!(w.check(&o));
        }
    }
}

#[test]
fn small_graphs_are_semi_transitive() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let o = brute_force_semi_transitive(&g, DEFAULT_MAX_EDGES)
                .unwrap()
                .unwrap_or_else(|| panic!("no orientation for\n{g}"));
            assert!(verify_orientation(&o).is_none());
            assert!(naive_semi_transitive(&o));
        }
    }
}

/// On six vertices the wheel `W5` is the only graph that is not
/// word-representable, and it has 6!/10 = 72 labellings.
#[test]
fn six_vertex_obstructions_are_wheels() {
    let w5 = wheel(5);
    let mut bad = 0;
    for g in all_graphs(6) {
        let found = brute_force_semi_transitive(&g, DEFAULT_MAX_EDGES).unwrap();
        if found.is_none() {
            assert!(g.is_isomorphic(&w5), "unexpected obstruction\n{g}");
            bad += 1;
        }
    }
    assert_eq!(bad, 72);
}

#[test]
fn orientation_guard() {
    let k9 = Graph::complete(9).unwrap();
    assert!(matches!(
        brute_force_semi_transitive(&k9, 30),
        Err(Error::Guard { .. })
    ));
    assert!(brute_force_semi_transitive(&k9, 36).unwrap().is_some());
}

#[test]
fn words_for_graphs_up_to_four_vertices() {
    for n in 1..=4 {
        for g in all_graphs(n) {
            let w = find_representing_word(&g, 3).unwrap_or_else(|| panic!("no word for\n{g}"));
            assert!(w.len() <= 3 * n);
            assert!(word_represents(&w, &g).unwrap());
            if let Some(sg) = split_partition(&g) {
                assert!(is_semi_transitive_split(&sg).verdict);
            }
        }
    }
}

fn naive_is_split(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..1u64 << n).any(|clique| {
        let members =
            |inside: bool| (1..=n).filter(move |&v| (clique >> (v - 1) & 1 == 1) == inside);
        let k: Vec<usize> = members(true).collect();
        let i: Vec<usize> = members(false).collect();
        k.iter()
            .all(|&u| k.iter().all(|&v| u == v || g.has_edge(u, v)))
            && i.iter().all(|&u| i.iter().all(|&v| !g.has_edge(u, v)))
    })
}

#[test]
fn split_recognition_matches_subset_search() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let sg = split_partition(&g);
            assert_eq!(sg.is_some(), naive_is_split(&g), "\n{g}");
        }
    }
}

#[test]
fn split_verdicts_match_orientation_search_on_wider_matrices() {
    for m in random_matrices(3, 5, 400, 11)
        .into_iter()
        .chain(random_matrices(4, 4, 400, 12))
    {
        if m.rows().iter().any(|&r| r == m.full_row()) {
            continue;
        }
        let sg = sg_from_matrix(&m).unwrap();
        let cert = is_semi_transitive_split(&sg);
        let oracle = brute_force_semi_transitive(sg.graph(), DEFAULT_MAX_EDGES)
            .unwrap()
            .is_some();
        assert_eq!(cert.verdict, oracle, "\n{m}");
        let kp = kp_decision(&m).unwrap().is_some();
        assert_eq!(kp, has_i_circular(&m).is_some(), "\n{m}");
    }
}

#[test]
fn recognizers_match_brute_force_on_wide_matrices() {
    for m in random_matrices(6, 8, 1500, 3) {
        assert_eq!(
            has_circular_ones(&m).is_some(),
            brute_force_circular_ones(&m).unwrap().is_some(),
            "\n{m}"
        );
        assert_eq!(
            has_i_circular(&m).is_some(),
            brute_force_i_circular(&m).unwrap().is_some(),
            "\n{m}"
        );
    }
    let wide = BinaryMatrix::zeros(1, 10).unwrap();
    assert!(matches!(
        brute_force_circular_ones(&wide),
        Err(Error::Guard { .. })
    ));
}
