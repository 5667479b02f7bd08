use super::*;
use crate::graph::{build_graph, path};
use crate::indep::DEFAULT_COLUMN_CAP as CAP;
use crate::rational::{int, ratio};

fn p4() -> Graph {
    path(4)
}

fn k3() -> Graph {
    Graph::complete(3)
}

fn p4_parts() -> Partition {
    Partition::full(4, vec![vec![0, 3], vec![1, 2]]).unwrap()
}

fn example_one() -> (Graph, Graph) {
    let mut edges: Vec<[usize; 2]> = Vec::new();
    for v in 0..6 {
        edges.push([v, 6]);
        edges.push([v, 7]);
    }
    edges.extend([[0, 1], [2, 3], [6, 7]]);
    let g1 = build_graph(8, &edges).unwrap();
    let g2 = g1.complement();
    (g1, g2)
}

fn w(v: &[u64]) -> WeightVector {
    WeightVector::new(v.to_vec())
}

#[test]
fn alpha_examples() {
    let (_, g2) = example_one();
    assert_eq!(alpha_w(&g2, &WeightVector::ones(8)).unwrap().value, int(4));
    assert_eq!(alpha_w(&k3(), &w(&[2, 5, 1])).unwrap().value, int(5));
    let r = alpha_w(&p4(), &WeightVector::ones(4)).unwrap();
    assert_eq!(r.value, int(2));
    assert_eq!(r.witness, Some(Witness::Set(VertexSet::from([0, 2]))));
}

#[test]
fn gamma_examples() {
    assert_eq!(gamma_w(&k3(), &w(&[2, 5, 1])).unwrap().value, int(5));
    assert_eq!(
        gamma_w(&p4(), &WeightVector::ones(4)).unwrap().value,
        int(2)
    );
    let t = gamma_tilde(&p4()).unwrap();
    assert_eq!(t.value, int(2));
    assert_eq!(t.witness, Some(Witness::Function(vec![0, 1, 1, 0])));
}

#[test]
fn gamma_tilde_isolated_vertex() {
    let g = build_graph(3, &[[0, 1]]).unwrap();
    assert_eq!(gamma_tilde(&g), Err(Error::Infeasible { row: 2 }));
}

#[test]
fn joint_independence_examples() {
    let g = p4();
    let h = g.complement();
    assert_eq!(
        alpha_cap_w(&g, &h, &WeightVector::ones(4), CAP)
            .unwrap()
            .value,
        int(1)
    );
    let ww = w(&[3, 1, 4, 1]);
    assert_eq!(
        alpha_cap_w(&g, &g, &ww, CAP).unwrap().value,
        alpha_w(&g, &ww).unwrap().value
    );
    let e = Graph::empty(3);
    assert_eq!(
        alpha_cap_w(&e, &e, &WeightVector::ones(3), CAP)
            .unwrap()
            .value,
        int(3)
    );
}

#[test]
fn fractional_joint_independence_examples() {
    let g = p4();
    let h = g.complement();
    let r = alpha_cap_star_w(&g, &h, &WeightVector::ones(4), CAP).unwrap();
    assert_eq!(r.value, int(2));
    assert_eq!(r.witness, Some(Witness::Fractional(vec![ratio(1, 2); 4])));

    let (g1, g2) = example_one();
    let r = alpha_cap_star_w(&g1, &g2, &WeightVector::ones(8), CAP).unwrap();
    assert_eq!(r.value, int(2));
    let quarter = vec![ratio(1, 4); 8];
    assert!(in_independence_polytope(&g1, &quarter, CAP).unwrap());
    assert!(in_independence_polytope(&g2, &quarter, CAP).unwrap());

    let k2 = Graph::complete(2);
    assert_eq!(
        alpha_cap_star_w(&k2, &k2, &WeightVector::ones(2), CAP)
            .unwrap()
            .value,
        int(1)
    );
}

#[test]
fn independence_polytope_membership() {
    let g = p4();
    assert!(in_independence_polytope(&g, &vec![ratio(1, 2); 4], CAP).unwrap());
    assert!(!in_independence_polytope(&g, &[int(1), int(1), int(0), int(0)], CAP).unwrap());
    assert!(!in_independence_polytope(&g, &[int(-1), int(0), int(0), int(0)], CAP).unwrap());
    // triangle: 1/2 each satisfies edge constraints but not the clique constraint
    assert!(!in_independence_polytope(&k3(), &vec![ratio(1, 2); 3], CAP).unwrap());
}

#[test]
fn collective_domination_examples() {
    let g = p4();
    let h = g.complement();
    let ones = WeightVector::ones(4);
    assert_eq!(gamma_cup_w(&g, &h, &ones).unwrap().value, int(2));
    assert_eq!(
        gamma_cup_w(&g, &g, &ones).unwrap().value,
        gamma_w(&g, &ones).unwrap().value
    );
    let a = Partition::full(4, vec![vec![0, 1], vec![2, 3]])
        .unwrap()
        .partition_graph()
        .unwrap();
    let b = Partition::full(4, vec![vec![0, 2], vec![1], vec![3]])
        .unwrap()
        .partition_graph()
        .unwrap();
    assert_eq!(
        gamma_cup_w(&a, &b, &ones).unwrap().value,
        alpha_cap_w(&a, &b, &ones, CAP).unwrap().value
    );
}

#[test]
fn mismatched_vertex_counts() {
    assert!(matches!(
        gamma_cup_w(&p4(), &k3(), &WeightVector::ones(4)),
        Err(Error::Model(_))
    ));
}

#[test]
fn nu_examples() {
    let ones4 = WeightVector::ones(4);
    let r = nu_w(&p4(), &p4_parts(), &ones4, CAP).unwrap();
    assert_eq!(r.value, int(2));
    assert_eq!(r.witness, Some(Witness::Set(VertexSet::from([0, 2]))));
    let singles = Partition::singletons(3);
    assert_eq!(
        nu_w(&k3(), &singles, &WeightVector::ones(3), CAP)
            .unwrap()
            .value,
        int(1)
    );
    assert_eq!(
        nu_w(&p4(), &p4_parts(), &WeightVector::zeros(4), CAP)
            .unwrap()
            .value,
        int(0)
    );
}

#[test]
fn nu_star_examples() {
    let ones4 = WeightVector::ones(4);
    let r = nu_star_w(&p4(), &p4_parts(), &ones4, CAP).unwrap();
    assert_eq!(r.result.value, int(2));
    let r = nu_star_w(
        &k3(),
        &Partition::singletons(3),
        &WeightVector::ones(3),
        CAP,
    )
    .unwrap();
    assert_eq!(r.result.value, int(1));
    assert_eq!(r.lp.dual(), &[int(1), int(0), int(0), int(0)]);
    let one = Graph::empty(1);
    let r = nu_star_w(&one, &Partition::singletons(1), &w(&[5]), CAP).unwrap();
    assert_eq!(r.result.value, int(5));
}

#[test]
fn vertex_form_agrees_on_examples() {
    let ones4 = WeightVector::ones(4);
    assert_eq!(
        nu_star_vertex_form(&p4(), &p4_parts(), &ones4, CAP).unwrap(),
        int(2)
    );
    assert_eq!(
        nu_star_vertex_form(
            &k3(),
            &Partition::singletons(3),
            &WeightVector::ones(3),
            CAP
        )
        .unwrap(),
        int(1)
    );
}

#[test]
fn gamma_partition_examples() {
    let r = gamma_w_partition(&k3(), &Partition::singletons(3), &WeightVector::ones(3)).unwrap();
    assert_eq!(r.value, int(1));
    let ones4 = WeightVector::ones(4);
    let r = gamma_w_partition(&p4(), &p4_parts(), &ones4).unwrap();
    assert_eq!(r.value, int(2));
    let h = p4_parts().partition_graph().unwrap();
    assert_eq!(gamma_cup_w(&p4(), &h, &ones4).unwrap().value, r.value);
}

#[test]
fn tau_examples() {
    let r = tau_w(&k3(), &Partition::singletons(3), &WeightVector::ones(3)).unwrap();
    assert_eq!(r.value, ratio(1, 2));
    assert_eq!(
        tau_w(&p4(), &p4_parts(), &WeightVector::zeros(4))
            .unwrap()
            .value,
        int(0)
    );
    // f = 1 on vertices 1 and 2 dominates P4 on its own: 0 + 2/2.
    let r = tau_w(&p4(), &p4_parts(), &WeightVector::ones(4)).unwrap();
    assert_eq!(r.value, int(1));
}

#[test]
fn condition_checker_examples() {
    let rep = check_theorem_conditions(&p4(), &p4_parts(), CAP).unwrap();
    assert_eq!(rep.subsets.len(), 3);
    let gammas: Vec<(Vec<usize>, u64)> = rep
        .subsets
        .iter()
        .map(|s| (s.blocks.clone(), s.gamma))
        .collect();
    assert_eq!(gammas, vec![(vec![0], 2), (vec![0, 1], 2), (vec![1], 1)]);
    assert!(rep.fractional_hypothesis);
    assert!(rep.fractional_it_exists);
    assert!(rep.it_exists);

    let k2 = Graph::complete(2);
    let one_block = Partition::full(2, vec![vec![0, 1]]).unwrap();
    let rep = check_theorem_conditions(&k2, &one_block, CAP).unwrap();
    assert!(rep.fractional_hypothesis);
    assert!(rep.it_exists);

    let rep = check_theorem_conditions(&k3(), &Partition::singletons(3), CAP).unwrap();
    assert!(!rep.fractional_hypothesis);
    let tight = rep.fractional_tightest.unwrap();
    assert_eq!(tight.blocks, vec![0, 1, 2]);
    assert_eq!(tight.fractional_slack(), -2);
    assert!(!rep.it_exists);
    assert!(!rep.fractional_it_exists);
    // singleton parts of K3: each G[V_i] is one isolated vertex
    assert!(rep
        .subsets
        .iter()
        .filter(|s| s.blocks.len() == 1)
        .all(|s| s.gamma_tilde.is_none()));
}

#[test]
fn evaluate_checks_requirements() {
    let inst = Instance::new(p4());
    assert_eq!(
        evaluate(ParamKind::NuW, &inst, CAP),
        Err(Error::Missing("parts"))
    );
    assert_eq!(
        evaluate(ParamKind::GammaCupW, &inst, CAP),
        Err(Error::Missing("edges2"))
    );
    let inst = inst.with_weights(WeightVector::zeros(4));
    assert_eq!(
        evaluate(ParamKind::AlphaW, &inst, CAP).unwrap().value,
        int(0)
    );
}

#[test]
fn kind_names_round_trip() {
    for k in ParamKind::ALL {
        assert_eq!(k.name().parse::<ParamKind>().unwrap(), k);
    }
    assert!("alpha".parse::<ParamKind>().is_err());
}

#[test]
fn result_json_shape() {
    let r = tau_w(&k3(), &Partition::singletons(3), &WeightVector::ones(3)).unwrap();
    let j = r.to_json();
    assert_eq!(j["kind"], "tau_w");
    assert_eq!(j["value"], "1/2");
    assert_eq!(j["witness"]["first"], serde_json::json!([0, 0, 0]));
}
