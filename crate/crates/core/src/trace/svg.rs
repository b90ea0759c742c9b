//! Deterministic SVG snapshots: a shapes layer, then an optional contour
//! layer. Output depends only on the scene, so equal scenes give equal bytes.

use std::fmt::Write;

use super::scene::Scene;
use crate::contour::RenderPrimitive;
use crate::geometry::Point;
use crate::shapes::Glyph;

const BACKGROUND: &str = "white";

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn points(vs: &[Point]) -> String {
    vs.iter()
        .map(|p| format!("{},{}", p.x, p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

fn ring_path(vs: &[Point]) -> String {
    let mut d = String::new();
    for (i, p) in vs.iter().enumerate() {
        let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, p.x, p.y);
    }
    d.push('Z');
    d
}

fn circle_path(c: Point, r: i32) -> String {
    format!(
        "M{} {} a{r} {r} 0 1 0 {} 0 a{r} {r} 0 1 0 {} 0 Z",
        c.x - r,
        c.y,
        2 * r,
        -2 * r
    )
}

fn glyph(out: &mut String, g: &Glyph) {
    let _ = match g {
        Glyph::Rect { rect, label } => {
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
                rect.left, rect.top, rect.width, rect.height
            );
            match label {
                Some(l) => writeln!(
                    out,
                    r#"<text x="{}" y="{}" stroke="none" fill="black" font-size="12">{}</text>"#,
                    rect.left + 6,
                    rect.top + 16,
                    escape(l)
                ),
                None => Ok(()),
            }
        }
        Glyph::Polygon { vertices } => {
            writeln!(out, r#"<polygon points="{}"/>"#, points(vertices))
        }
        Glyph::HollowPolygon { outer, inner } => writeln!(
            out,
            r#"<path fill-rule="evenodd" d="{} {}"/>"#,
            ring_path(outer),
            ring_path(inner)
        ),
        Glyph::Circle { center, radius } => writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{radius}"/>"#,
            center.x, center.y
        ),
        Glyph::Annulus {
            center,
            inner,
            outer,
        } => writeln!(
            out,
            r#"<path fill-rule="evenodd" d="{} {}"/>"#,
            circle_path(*center, *outer),
            circle_path(*center, *inner)
        ),
        Glyph::Segment { from, to } => writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            from.x, from.y, to.x, to.y
        ),
        Glyph::Disc {
            center,
            radius,
            color,
        } => writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{radius}" fill="{}"/>"#,
            center.x,
            center.y,
            escape(color)
        ),
    };
}

fn fill(background_fill: bool) -> &'static str {
    if background_fill {
        BACKGROUND
    } else {
        "none"
    }
}

fn primitive(out: &mut String, p: &RenderPrimitive) {
    let _ = match p {
        RenderPrimitive::Line { from, to } => writeln!(
            out,
            r#"<line class="connection" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            from.x, from.y, to.x, to.y
        ),
        RenderPrimitive::Square {
            center,
            half_side,
            background_fill,
        } => writeln!(
            out,
            r#"<rect class="node" x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
            center.x - half_side,
            center.y - half_side,
            2 * half_side,
            2 * half_side,
            fill(*background_fill)
        ),
        RenderPrimitive::Circle {
            center,
            radius,
            background_fill,
        } => writeln!(
            out,
            r#"<circle class="node" cx="{}" cy="{}" r="{radius}" fill="{}"/>"#,
            center.x,
            center.y,
            fill(*background_fill)
        ),
        RenderPrimitive::Polygon {
            vertices,
            background_fill,
        } => writeln!(
            out,
            r#"<polygon class="node" points="{}" fill="{}"/>"#,
            points(vertices),
            fill(*background_fill)
        ),
    };
}

/// Render both layers from pre-computed lists.
pub fn emit_layers(
    width: i32,
    height: i32,
    glyphs: &[Glyph],
    contours: Option<&[RenderPrimitive]>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="{width}" height="{height}" fill="{BACKGROUND}"/>"#);
    out.push_str("<g id=\"shapes\" fill=\"#dde6f0\" stroke=\"#24466e\" stroke-width=\"1\">\n");
    for g in glyphs {
        glyph(&mut out, g);
    }
    out.push_str("</g>\n");
    if let Some(prims) = contours {
        out.push_str("<g id=\"contours\" fill=\"none\" stroke=\"#d02020\" stroke-width=\"1\">\n");
        for p in prims {
            primitive(&mut out, p);
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// Objects are drawn back to front, so the highest-priority object ends on top.
pub fn emit_svg(scene: &Scene, show_contours: bool) -> String {
    let glyphs: Vec<Glyph> = scene.objects.iter().rev().flat_map(|s| s.glyphs()).collect();
    let contours = show_contours.then(|| scene.to_mover().draw_contours());
    emit_layers(scene.work.width, scene.work.height, &glyphs, contours.as_deref())
}
