use simac::charpoly::{demazure_op, rat};
use simac::weylchar::{BaseSource, Engine};
use simac::{RootSystem, Weight};

fn engine(t: &str, source: BaseSource) -> Engine {
    Engine::new(RootSystem::new(t.parse().unwrap()), source)
}

// fundamental local Weyl modules in these cases are the fundamental
// representations, so the dimension is the Weyl dimension
#[test]
fn fundamental_dimensions_from_difference_equations() {
    let cases = [("A3", 1, 4), ("A3", 2, 6), ("A3", 3, 4), ("B3", 1, 7), ("C3", 1, 6), ("D4", 1, 8)];
    for (t, node, dim) in cases {
        let en = engine(t, BaseSource::Eigen);
        let rs = en.root_system();
        let l = Weight::fundamental(rs.rank(), node);
        for w in rs.minimal_coset_reps(&l).unwrap() {
            let g = en.genweyl_char(&w, &l).unwrap();
            assert_eq!(g.dimension(), rat(dim), "{t} {node} {}", rs.reduced_word_string(&w));
            assert!(g.is_graded_character());
            assert_eq!(g.cyclic_coefficient(), rat(1));
        }
    }
}

#[test]
fn a3_base_agrees_with_oracle() {
    let en = engine("A3", BaseSource::Auto);
    en.cross_check_base(&Weight(vec![1, 0, 0])).unwrap();
}

#[test]
fn top_character_is_weyl_invariant() {
    for t in ["A2", "C2"] {
        let en = engine(t, BaseSource::Oracle);
        let rs = en.root_system();
        for l in [Weight(vec![1, 0]), Weight(vec![0, 1]), Weight(vec![1, 1])] {
            let d = en.genweyl_char(&rs.longest_element(), &l).unwrap().value;
            for i in 1..=rs.rank() {
                assert_eq!(demazure_op(rs, i, &d), d, "{t} {l} D_{i}");
            }
        }
    }
}

#[test]
fn twisted_character_is_extremal_for_a1() {
    let en = engine("A1", BaseSource::Oracle);
    let rs = en.root_system();
    for k in 1..=3 {
        let l = Weight(vec![k]);
        let chi = en.twisted_euler_char(&rs.simple_reflection(1), &l, 12).unwrap();
        let lw = en.lambda_w(&l, &rs.simple_reflection(1)).unwrap();
        assert_eq!(lw, Weight(vec![k - 1]));
        assert_eq!(chi.poly().coeff(0, &Weight(vec![-k])), rat(1));
    }
}
