//! Ready-made scenes: one per contour type, plus a combined one holding
//! all of them.

use std::f64::consts::FRAC_PI_2;

use super::scene::Scene;
use crate::geometry::{Point, Rect};
use crate::mover::{ContainmentPolicy, WorkArea};
use crate::shapes::{
    ContourResize, ControlStub, CornerStyle, GraphObject, NCircle, NRing, RectCorners, RectEightNode, RectFull,
    RectSolidMove, RectTiled, RegularPolygon, ScrewNut, Shape, SizeLimits,
};

/// `(name, description)` of every single-type scene, in order.
pub const CASES: [(&str, &str); 12] = [
    ("rect-squares", "rectangle with shifted corner squares"),
    ("rect-circles", "rectangle with corner circles"),
    ("rect-eight", "eight-node rectangles in all four resize modes"),
    ("graph", "graph moved by its nodes"),
    ("polygons", "regular polygons moved by an inscribed circle"),
    ("solid-move", "rectangles moved by any inner point"),
    ("tiled", "rectangles covered by standalone square nodes"),
    ("screw-nut", "hexagonal nut moved by six trapezoids"),
    ("rect-full", "rectangle with corners, border strips and interior"),
    ("circle", "circle resized by any border point"),
    ("ring", "ring resized by either border"),
    ("control", "control stand-in grabbed by its border"),
];

pub const GALLERY: &str = "gallery";

const CASE_WORK: WorkArea = WorkArea {
    width: 640,
    height: 480,
};

fn rc(l: i32, t: i32, w: i32, h: i32) -> Rect {
    Rect::new(l, t, w, h)
}

fn p(x: i32, y: i32) -> Point {
    Point::new(x, y)
}

fn rect_squares(r: Rect) -> Shape {
    RectCorners::new(r, 60, 40, CornerStyle::ShiftedSquares).unwrap().into()
}

fn rect_circles(r: Rect) -> Shape {
    RectCorners::new(r, 60, 40, CornerStyle::CornerCircles).unwrap().into()
}

fn rect_eight(r: Rect, mode: ContourResize) -> Shape {
    RectEightNode::new(r, 60, 40, mode).unwrap().into()
}

fn graph(origin: Point) -> Shape {
    let offsets = [(0, 40), (70, 0), (150, 30), (120, 110), (40, 120)];
    let points = offsets.iter().map(|&(x, y)| p(origin.x + x, origin.y + y)).collect();
    let colors = ["#d04040", "#40a040", "#4060d0", "#d0a020", "#a040c0"];
    GraphObject::new(
        points,
        vec![8, 10, 12, 9, 7],
        colors.iter().map(|c| c.to_string()).collect(),
        vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)],
    )
    .unwrap()
    .into()
}

fn polygon(c: Point, r: i32, n: usize) -> Shape {
    RegularPolygon::new(c, r, n, FRAC_PI_2).unwrap().into()
}

fn solid(r: Rect) -> Shape {
    RectSolidMove::new(r).unwrap().into()
}

fn tiled(r: Rect) -> Shape {
    RectTiled::new(r).unwrap().into()
}

fn nut(c: Point) -> Shape {
    ScrewNut::new(c, 30, 70, 0.0).unwrap().into()
}

fn full(r: Rect) -> Shape {
    RectFull::new(r, 60, 40).unwrap().into()
}

fn circle(c: Point) -> Shape {
    NCircle::new(c, 100, 7, 10, 20).unwrap().into()
}

fn ring(c: Point) -> Shape {
    NRing::new(c, 50, 100, 6, 10).unwrap().into()
}

fn control(id: &str, r: Rect, mode: ContourResize) -> Shape {
    ControlStub::new(id, r, mode, SizeLimits::new(250, 500, 80, 240)).unwrap().into()
}

fn case_objects(index: usize) -> Vec<Shape> {
    match index {
        0 => vec![rect_squares(rc(200, 160, 220, 140))],
        1 => vec![rect_circles(rc(200, 160, 220, 140))],
        2 => vec![
            rect_eight(rc(60, 60, 200, 120), ContourResize::Any),
            rect_eight(rc(360, 60, 200, 120), ContourResize::NS),
            rect_eight(rc(60, 280, 200, 120), ContourResize::WE),
            rect_eight(rc(360, 280, 200, 120), ContourResize::None),
        ],
        3 => vec![graph(p(220, 160))],
        4 => vec![
            polygon(p(140, 200), 60, 3),
            polygon(p(320, 200), 60, 4),
            polygon(p(500, 200), 60, 6),
        ],
        5 => vec![solid(rc(60, 80, 300, 90)), solid(rc(440, 80, 90, 300))],
        6 => vec![tiled(rc(60, 80, 300, 70)), tiled(rc(440, 80, 70, 300))],
        7 => vec![nut(p(320, 240))],
        8 => vec![full(rc(180, 140, 280, 200))],
        9 => vec![circle(p(320, 240))],
        10 => vec![ring(p(320, 240))],
        11 => vec![
            control("listInfo", rc(60, 60, 250, 80), ContourResize::Any),
            control("listNS", rc(340, 60, 250, 80), ContourResize::NS),
            control("listWE", rc(60, 300, 250, 80), ContourResize::WE),
            control("listFixed", rc(340, 300, 250, 80), ContourResize::None),
        ],
        _ => unreachable!("twelve cases"),
    }
}

/// Scene for the case at `index` (0-based, see [`CASES`]).
pub fn case_scene_at(index: usize) -> Option<Scene> {
    (index < CASES.len()).then(|| Scene::new(CASE_WORK, ContainmentPolicy::default(), case_objects(index)))
}

pub fn case_scene(name: &str) -> Option<Scene> {
    if name == GALLERY {
        return Some(gallery_scene());
    }
    CASES.iter().position(|(n, _)| *n == name).and_then(case_scene_at)
}

/// One object of each type on a single surface. The control is inserted
/// in front of everything else.
pub fn gallery_scene() -> Scene {
    let mut objects = vec![
        rect_squares(rc(40, 40, 160, 100)),
        rect_circles(rc(240, 40, 160, 100)),
        rect_eight(rc(440, 40, 160, 100), ContourResize::Any),
        graph(p(660, 30)),
        polygon(p(1000, 110), 50, 3),
        solid(rc(40, 200, 200, 80)),
        tiled(rc(280, 210, 220, 60)),
        nut(p(610, 290)),
        full(rc(740, 220, 180, 120)),
        circle(p(150, 540)),
        ring(p(430, 540)),
    ];
    objects.insert(0, control("listInfo", rc(700, 460, 250, 80), ContourResize::Any));
    Scene::new(
        WorkArea::new(1200, 760),
        ContainmentPolicy::default(),
        objects,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moveable::Moveable;
    use crate::trace::scene::{load_scene, save_scene};

    #[test]
    fn every_case_round_trips() {
        for (i, (name, _)) in CASES.iter().enumerate() {
            let s = case_scene(name).unwrap();
            assert_eq!(s, case_scene_at(i).unwrap());
            let text = save_scene(&s);
            assert_eq!(save_scene(&load_scene(&text).unwrap()), text, "{name}");
        }
        assert!(case_scene("nope").is_none());
    }

    #[test]
    fn gallery_holds_all_cases() {
        let g = gallery_scene();
        assert_eq!(g.to_mover().len(), 12);
        assert!(g.objects[0].is_control());
        let mut tags: Vec<_> = g.objects.iter().map(|s| s.type_tag()).collect();
        tags.sort_unstable();
        tags.dedup();
        assert_eq!(tags.len(), 11);
    }

    #[test]
    fn gallery_objects_are_apart_and_inside() {
        let g = gallery_scene();
        let boxes: Vec<_> = g.objects.iter().map(|s| s.define_contour().bounding_box()).collect();
        for (i, a) in boxes.iter().enumerate() {
            assert!(a.min.x >= 0 && a.min.y >= 0 && a.max.x <= g.work.width && a.max.y <= g.work.height, "{i}");
            for (j, b) in boxes.iter().enumerate().skip(i + 1) {
                let apart = a.max.x < b.min.x || b.max.x < a.min.x || a.max.y < b.min.y || b.max.y < a.min.y;
                assert!(apart, "objects {i} and {j} overlap");
            }
        }
    }
}
