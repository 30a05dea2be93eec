use std::sync::Arc;

use straightlab::dk::{class_group, dold_kan_maps, induced_chain_map, main_invariant, normalized_chains, uct_sequence};
use straightlab::sset::{enumerate_maps, homotopy_classes, named_set, SimplicialSet};

fn set(name: &str, cutoff: usize) -> Arc<SimplicialSet> {
    Arc::new(named_set(name, cutoff).unwrap())
}

#[test]
fn boundaries_square_to_zero() {
    for name in ["point", "delta3", "boundary3", "polygon5", "delta1*delta1", "boundary2*delta1", "nerve:Z3", "enerve:Z2", "nerve:S3", "polygon3+nerve:Z2"] {
        let c = normalized_chains(&named_set(name, 4).unwrap());
        for n in 2..=c.top() {
            assert!(c.boundary(n - 1).checked_mul(&c.boundary(n)).unwrap().is_zero(), "{name}, degree {n}");
        }
    }
}

#[test]
fn induced_chain_maps_are_functorial() {
    for (a, b, c) in [
        ("delta1", "boundary2", "nerve:Z2"),
        ("boundary2", "polygon3", "nerve:Z3"),
        ("delta2", "delta1", "polygon3"),
        ("polygon3", "delta1*delta1", "delta1"),
    ] {
        let (sa, sb, sc) = (set(a, 4), set(b, 4), set(c, 4));
        let first = enumerate_maps(&sa, &sb).unwrap();
        let second = enumerate_maps(&sb, &sc).unwrap();
        for s in first.iter().step_by(3) {
            for t in second.iter().step_by(5) {
                let composite = induced_chain_map(&s.then(t).unwrap());
                let product = induced_chain_map(s).then(&induced_chain_map(t)).unwrap();
                assert_eq!(composite.matrices(), product.matrices(), "{a} -> {b} -> {c}");
            }
        }
    }
}

#[test]
fn main_invariant_is_constant_on_homotopy_classes() {
    for (u, v) in [("polygon3", "nerve:Z2"), ("polygon3", "nerve:Z3"), ("delta1", "nerve:Z2"), ("boundary2", "nerve:Z3")] {
        let (us, vs) = (set(u, 3), set(v, 3));
        let h = homotopy_classes(&us, &vs).unwrap();
        let invariants: Vec<_> = h.maps().iter().map(|s| main_invariant(s).unwrap().1).collect();
        let group = class_group(&normalized_chains(&us), &normalized_chains(&vs)).unwrap();
        for i in 0..invariants.len() {
            for j in 0..invariants.len() {
                let same = group.group().elem_eq(&invariants[i], &invariants[j]);
                assert_eq!(same, h.class_of(i) == h.class_of(j), "{u} -> {v}: maps {i}, {j}");
            }
        }
    }
}

#[test]
fn map_space_classes_match_the_main_invariant() {
    for (u, v) in [("polygon3", "nerve:Z2"), ("delta2", "nerve:Z2"), ("boundary2", "nerve:Z3")] {
        let (us, vs) = (set(u, 4), set(v, 4));
        let dk = dold_kan_maps(&us, &vs).unwrap();
        assert!(dk.bijective);
        for s in enumerate_maps(&us, &vs).unwrap() {
            let through_maps = dk.class_of(&dk.space.of_map(&s)).unwrap();
            let (_, direct) = main_invariant(&s).unwrap();
            assert!(dk.classes.group().elem_eq(&through_maps, &direct), "{u} -> {v}");
        }
    }
}

#[test]
fn class_groups_are_stable_under_a_larger_cutoff() {
    for u in ["point", "delta1", "polygon3", "boundary2", "delta2"] {
        for v in ["nerve:Z2", "nerve:Z3", "enerve:Z2"] {
            let us = set(u, 3);
            let d = us.top() + 1;
            let (low, high) = (set(v, d), set(v, d + 1));
            let (c, dl, dh) = (normalized_chains(&us), normalized_chains(&low), normalized_chains(&high));
            let (gl, gh) = (class_group(&c, &dl).unwrap(), class_group(&c, &dh).unwrap());
            assert_eq!(gl.group().describe(), gh.group().describe(), "{u} -> {v}");
            let (ul, uh) = (uct_sequence(&c, &dl).unwrap(), uct_sequence(&c, &dh).unwrap());
            assert!(ul.report.holds() && uh.report.holds());
            assert_eq!(ul.ext_part.describe(), uh.ext_part.describe());
            assert_eq!(ul.hom_part.describe(), uh.hom_part.describe());
            let (ml, mh) = (enumerate_maps(&us, &low).unwrap(), enumerate_maps(&us, &high).unwrap());
            assert_eq!(ml.len(), mh.len());
            for (a, b) in ml.iter().zip(&mh) {
                let (ga, xa) = main_invariant(a).unwrap();
                let (gb, xb) = main_invariant(b).unwrap();
                assert_eq!(ga.group().invariant_coords(&xa), gb.group().invariant_coords(&xb), "{u} -> {v}");
            }
        }
    }
}
