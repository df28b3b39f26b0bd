use proptest::prelude::*;
use toric3::plumbing::Plumbing;
use toric3::render::{render_cone_svg, render_plumbing_svg, RenderOptions};
use toric3::MomentCone;

fn rays(svg: &str) -> usize {
    let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    doc.descendants().filter(|n| n.attribute("class") == Some("ray")).count()
}

#[test]
fn examples_are_well_formed() {
    let o = RenderOptions::default();
    for (r1, r2, w) in [((1, 0), (0, 1), 0), ((1, 0), (0, 1), 1), ((1, 0), (-1, 0), 0), ((2, 1), (2, 1), 3)] {
        assert_eq!(rays(&render_cone_svg(&MomentCone::from_coords(r1, r2, w).unwrap(), &o)), 2);
    }
    let p = Plumbing::validate([0, 0, 0, 0]).unwrap();
    assert_eq!(rays(&render_plumbing_svg(&p, &o)), 4);
}

proptest! {
    #[test]
    fn cones_render_two_rays(x1 in -30i64..30, y1 in -30i64..30, x2 in -30i64..30, y2 in -30i64..30,
                             w in 0u64..3, size in 64u32..800, labels: bool) {
        if let Ok(c) = MomentCone::from_coords((x1, y1), (x2, y2), w) {
            let o = RenderOptions::new(size, f64::from(size) / 3.0, labels).unwrap();
            let svg = render_cone_svg(&c, &o);
            prop_assert_eq!(rays(&svg), 2);
            prop_assert_eq!(svg, render_cone_svg(&c, &o));
        }
    }

    #[test]
    fn fans_render_n_rays(chain in prop::collection::vec(-5i64..4, 2..8)) {
        if let Ok(p) = Plumbing::validate(chain.iter().copied()) {
            let svg = render_plumbing_svg(&p, &RenderOptions::default());
            prop_assert_eq!(rays(&svg), chain.len());
        }
    }
}
