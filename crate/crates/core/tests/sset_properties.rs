use std::sync::Arc;

use straightlab::sset::{
    enumerate_maps, homotopy_classes, kan_filler, named_set, pairing, product, projections, Simplex, SimplicialMap,
    SimplicialSet,
};

fn set(name: &str, cutoff: usize) -> Arc<SimplicialSet> {
    Arc::new(named_set(name, cutoff).unwrap())
}

/// `d_i ∘ s = s ∘ d_i` on every nondegenerate simplex of the source.
fn commutes_with_faces(s: &SimplicialMap) -> bool {
    let (u, v) = (s.source(), s.target());
    (1..=u.top()).all(|n| {
        (0..u.count(n)).all(|x| {
            let top = Simplex::nondegenerate(n, x);
            (0..=n).all(|i| v.face(s.image(n, x), i) == s.apply(&u.face(&top, i)))
        })
    })
}

#[test]
fn enumerated_maps_are_simplicial() {
    for (u, v) in [
        ("delta2", "delta1"),
        ("boundary2", "polygon3"),
        ("polygon3", "nerve:Z2"),
        ("delta2", "nerve:Z3"),
        ("delta1*delta1", "delta1"),
        ("delta2", "enerve:Z2"),
    ] {
        let maps = enumerate_maps(&set(u, 4), &set(v, 4)).unwrap();
        assert!(!maps.is_empty());
        assert!(maps.iter().all(commutes_with_faces), "{u} -> {v}");
    }
}

#[test]
fn products_classify_pairs_of_maps() {
    for t in ["delta0", "delta1", "boundary2"] {
        for (a, b) in [("delta1", "delta1"), ("boundary2", "delta1"), ("polygon3", "delta0")] {
            let (ts, as_, bs) = (set(t, 3), set(a, 3), set(b, 3));
            let p = Arc::new(product(&as_, &bs).unwrap());
            let (p1, p2) = projections(&p).unwrap();
            let into_product = enumerate_maps(&ts, &p).unwrap();
            let left = enumerate_maps(&ts, &as_).unwrap();
            let right = enumerate_maps(&ts, &bs).unwrap();
            assert_eq!(into_product.len(), left.len() * right.len(), "{t} -> {a} x {b}");
            for f in &left {
                for g in &right {
                    let h = pairing(f, g, &p).unwrap();
                    assert_eq!(h.then(&p1).unwrap().images(), f.images());
                    assert_eq!(h.then(&p2).unwrap().images(), g.images());
                    assert!(into_product.iter().any(|k| k.images() == h.images()));
                }
            }
        }
    }
}

#[test]
fn fillers_agree_on_the_boundary() {
    for w in ["enerve:Z2", "enerve:Z3"] {
        let ws = set(w, 4);
        for n in 1..=3 {
            let simplex = set(&format!("delta{n}"), 4);
            let top = Simplex::nondegenerate(n, 0);
            for q in enumerate_maps(&set(&format!("boundary{n}"), 4), &ws).unwrap() {
                let filled = kan_filler(&ws, &q).unwrap();
                for i in 0..=n {
                    // faces of the top simplex index the same (n-1)-simplices in both sets
                    let face = simplex.face(&top, i);
                    assert_eq!(ws.face(filled.image(n, 0), i), q.apply(&face), "{w}, n = {n}, d{i}");
                }
            }
        }
    }
}

#[test]
fn homotopy_classes_are_stable_under_a_larger_cutoff() {
    for u in ["delta0", "delta1", "polygon3", "boundary2"] {
        for g in ["Z2", "Z3"] {
            let us = set(u, 3);
            let name = format!("nerve:{g}");
            let low = homotopy_classes(&us, &set(&name, us.top() + 1)).unwrap();
            let high = homotopy_classes(&us, &set(&name, us.top() + 2)).unwrap();
            assert_eq!(low.maps().len(), high.maps().len());
            assert_eq!(low.class_labels(), high.class_labels(), "{u} -> {name}");
        }
    }
}
