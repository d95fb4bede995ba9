//! Family graphs rebuilt from named vertices and compared with `generate`.

use std::collections::BTreeSet;

use chromatic_curling::families::{generate, Family, FamilySpec};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum V {
    Rim(usize),
    Outer(usize),
    Centre,
}

/// Edge set written out by name, 1-indexed, indices taken mod n.
fn named_edges(family: Family, n: usize) -> BTreeSet<(V, V)> {
    let idx = |i: usize| (i + n - 1) % n + 1;
    let v = |i: usize| V::Rim(idx(i));
    let u = |i: usize| V::Outer(idx(i));
    let mut e = BTreeSet::new();
    let mut add = |a: V, b: V| {
        e.insert(if a < b { (a, b) } else { (b, a) });
    };

    let rim_cycle = !matches!(family, Family::Path);
    let outer_cycle = matches!(
        family,
        Family::DoubleWheel | Family::ClosedHelm | Family::Djembe | Family::ClosedSunflower | Family::Antiprism | Family::Blossom
    );
    let hub_rim = !matches!(family, Family::Path | Family::Cycle | Family::Antiprism);
    let hub_outer = matches!(family, Family::DoubleWheel | Family::Flower | Family::Djembe | Family::Blossom);
    let pendant = matches!(family, Family::Helm | Family::ClosedHelm | Family::Flower | Family::Djembe);
    let petal = matches!(family, Family::Sunflower | Family::ClosedSunflower | Family::Antiprism | Family::Blossom);

    for i in 1..=n {
        if family == Family::Path {
            if i < n {
                add(V::Rim(i), V::Rim(i + 1));
            }
            continue;
        }
        if rim_cycle {
            add(v(i), v(i + 1));
        }
        if outer_cycle {
            add(u(i), u(i + 1));
        }
        if hub_rim {
            add(V::Centre, v(i));
        }
        if hub_outer {
            add(V::Centre, u(i));
        }
        if pendant {
            add(u(i), v(i));
        }
        if petal {
            add(u(i), v(i - 1));
            add(u(i), v(i));
        }
    }
    e
}

fn index(v: V, n: usize, total: usize) -> usize {
    match v {
        V::Rim(i) => i - 1,
        V::Outer(i) => n + i - 1,
        V::Centre => total - 1,
    }
}

const CYCLIC: [Family; 11] = [
    Family::Cycle,
    Family::Wheel,
    Family::DoubleWheel,
    Family::Helm,
    Family::ClosedHelm,
    Family::Flower,
    Family::Djembe,
    Family::Sunflower,
    Family::ClosedSunflower,
    Family::Antiprism,
    Family::Blossom,
];

#[test]
fn generated_graphs_match_named_construction() {
    for family in Family::ALL {
        for n in family.min_order()..=30 {
            let g = generate(FamilySpec::new(family, n).unwrap()).unwrap();
            let total = family.vertex_count(n);
            assert_eq!(g.vertex_count(), total);
            let mut expected: Vec<(usize, usize)> = named_edges(family, n)
                .into_iter()
                .map(|(a, b)| {
                    let (x, y) = (index(a, n, total), index(b, n, total));
                    (x.min(y), x.max(y))
                })
                .collect();
            expected.sort_unstable();
            assert_eq!(g.edges(), expected.as_slice(), "{family} n={n}");
        }
    }
}

#[test]
fn edge_counts() {
    let per_n = |f: Family| match f {
        Family::Cycle => 1,
        Family::Wheel => 2,
        Family::Helm => 3,
        Family::DoubleWheel | Family::ClosedHelm | Family::Flower | Family::Sunflower | Family::Antiprism => 4,
        Family::Djembe | Family::ClosedSunflower => 5,
        Family::Blossom => 6,
        Family::Path => unreachable!(),
    };
    for family in CYCLIC {
        for n in 3..=30 {
            let g = generate(FamilySpec::new(family, n).unwrap()).unwrap();
            assert_eq!(g.edge_count(), per_n(family) * n, "{family} n={n}");
        }
    }
    for n in 1..=30 {
        let g = generate(FamilySpec::new(Family::Path, n).unwrap()).unwrap();
        assert_eq!(g.edge_count(), n - 1);
    }
}

#[test]
fn connected_and_regular_where_expected() {
    for family in Family::ALL {
        for n in family.min_order()..=30 {
            let g = generate(FamilySpec::new(family, n).unwrap()).unwrap();
            assert!(g.is_connected(), "{family} n={n}");
            if matches!(family, Family::Cycle | Family::Antiprism) {
                assert!(g.is_regular());
                assert_eq!(g.degree(0), if family == Family::Cycle { 2 } else { 4 });
            }
        }
    }
}

#[test]
fn below_minimum_order_is_rejected() {
    for family in CYCLIC {
        assert!(FamilySpec::new(family, 2).is_err());
    }
    assert!(FamilySpec::new(Family::Path, 0).is_err());
}
