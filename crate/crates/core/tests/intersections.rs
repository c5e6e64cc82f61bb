use ncsphere_core::relspan::{intersect_equal, Field, SphereClass, SpherePresentation};

fn sphere(field: Field, class: SphereClass, d: usize) -> SpherePresentation {
    SpherePresentation::sphere(field, class, d, 3).unwrap()
}

fn check(field: Field, a: SphereClass, b: SphereClass, expected: SphereClass, d: usize) {
    let started = std::time::Instant::now();
    let exp = sphere(field, expected, d);
    let v = intersect_equal(&sphere(field, a, 3), &sphere(field, b, 3), &exp, 4).unwrap();
    assert!(v.holds(), "{} fails at {:?}", exp, v.first_failure());
    let union = sphere(field, a, 3).union(&sphere(field, b, 3)).unwrap();
    let rels_union = union.relations();
    let rels_exp = exp.relations();
    for (id, d) in &v.forward {
        let target = &rels_exp.iter().find(|r| &r.id == id).unwrap().combo;
        assert!(d.certificate().unwrap().verify(&union, target), "{id}");
    }
    for (id, d) in &v.backward {
        let target = &rels_union.iter().find(|r| &r.id == id).unwrap().combo;
        assert!(d.certificate().unwrap().verify(&exp, target), "{id}");
    }
    eprintln!("{exp}: {:?}", started.elapsed());
}

#[test]
fn real_intersections() {
    use SphereClass::*;
    check(Field::Real, Classical, Twisted, Classical, 1);
    check(Field::Real, Classical, TwistedHalf, Classical, 2);
    check(Field::Real, Half, Twisted, Twisted, 2);
    check(Field::Real, Half, TwistedHalf, Half, 2);
}

#[test]
fn complex_intersections() {
    use SphereClass::*;
    check(Field::Complex, Classical, Twisted, Classical, 1);
    check(Field::Complex, Classical, TwistedHalf, Classical, 2);
    check(Field::Complex, Half, Twisted, Twisted, 2);
    check(Field::Complex, Half, TwistedHalf, Half, 2);
}
