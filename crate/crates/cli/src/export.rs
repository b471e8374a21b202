use std::io::Write;

use haff::fragment::{orbits, shells};
use haff::rootsystem::cartesian;
use haff::{Error, Fragment, GoldenInt, GroupId, OmegaVector};
use serde::{Deserialize, Serialize};

const CART_NAMES: [&str; 4] = ["x", "y", "z", "w"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FragmentDoc {
    pub group: String,
    pub n: u32,
    pub points: Vec<PointDoc>,
    pub orbits: Vec<OrbitDoc>,
    pub shells: Vec<ShellDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    /// `[a, b]` per coordinate, meaning `a + b tau`.
    pub omega: Vec<[i64; 2]>,
    pub cart: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitDoc {
    pub dominant: Vec<[i64; 2]>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShellDoc {
    /// Squared norm `(a + b tau) / den`.
    pub norm_num: [i64; 2],
    pub norm_den: i64,
    pub count: usize,
}

pub fn pairs(coords: &[GoldenInt]) -> Vec<[i64; 2]> {
    coords.iter().map(|g| [g.a, g.b]).collect()
}

/// Cleans `-0.0` so output does not depend on the sign of a zero.
fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn fixed(x: f64) -> String {
    let s = format!("{:.12}", clean(x));
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn cart_of(v: &OmegaVector, normalize: bool) -> Vec<f64> {
    cartesian(v, normalize).into_iter().map(clean).collect()
}

pub fn fragment_doc(f: &Fragment, normalize: bool) -> FragmentDoc {
    FragmentDoc {
        group: f.group.name().to_string(),
        n: f.n,
        points: f
            .points
            .iter()
            .map(|v| PointDoc {
                omega: pairs(&v.coords),
                cart: cart_of(v, normalize),
            })
            .collect(),
        orbits: orbits(f)
            .into_iter()
            .map(|o| OrbitDoc {
                dominant: pairs(&o.dominant.coords),
                size: o.size,
            })
            .collect(),
        shells: shells(f)
            .into_iter()
            .map(|s| ShellDoc {
                norm_num: [s.norm_sq.numer().a, s.norm_sq.numer().b],
                norm_den: s.norm_sq.denom(),
                count: s.members.len(),
            })
            .collect(),
    }
}

pub fn csv_header(group: GroupId) -> Vec<String> {
    let k = group.rank();
    let mut h: Vec<String> = (1..=k).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    // A2 is planar like H2; the others live in R^k
    let dims = if group == GroupId::A2 { 2 } else { k };
    h.extend(CART_NAMES[..dims].iter().map(|s| s.to_string()));
    h
}

pub fn write_csv<W: Write>(f: &Fragment, normalize: bool, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header(f.group))?;
    for v in &f.points {
        let mut row: Vec<String> = v
            .coords
            .iter()
            .flat_map(|g| [g.a.to_string(), g.b.to_string()])
            .collect();
        row.extend(cartesian(v, normalize).into_iter().map(fixed));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub const SVG_SIZE: f64 = 1000.0;
pub const SVG_OUTER_RADIUS: f64 = 450.0;
pub const SVG_DOT_RADIUS: f64 = 4.0;

const PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

/// Planar plot of an `H2` fragment, one colour per shell.
pub fn fragment_svg(f: &Fragment, normalize: bool) -> Result<String, Error> {
    if f.group != GroupId::H2 {
        return Err(Error::UnsupportedGroup {
            group: f.group,
            reason: "svg output is planar",
        });
    }
    let shells = shells(f);
    let outer = shells
        .last()
        .and_then(|s| s.members.first())
        .map(|v| {
            let c = cartesian(v, normalize);
            c[0].hypot(c[1])
        })
        .unwrap_or(0.0);
    let scale = if outer > 0.0 { SVG_OUTER_RADIUS / outer } else { 0.0 };
    let mid = SVG_SIZE / 2.0;

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\">\n"
    ));
    s.push_str(&format!(
        "<rect width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" fill=\"white\"/>\n"
    ));
    s.push_str(&format!("<g id=\"{}-n{}\">\n", f.group.name(), f.n));
    for (i, shell) in shells.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        for v in &shell.members {
            let c = cartesian(v, normalize);
            let (cx, cy) = (mid + scale * c[0], mid - scale * c[1]);
            s.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"{SVG_DOT_RADIUS}\" fill=\"{colour}\"/>\n",
                fixed_short(cx),
                fixed_short(cy)
            ));
        }
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

fn fixed_short(x: f64) -> String {
    format!("{:.3}", clean(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use haff::fragment::generate;

    #[test]
    fn headers() {
        assert_eq!(csv_header(GroupId::H2).join(","), "a1,b1,a2,b2,x,y");
        assert_eq!(
            csv_header(GroupId::H4).join(","),
            "a1,b1,a2,b2,a3,b3,a4,b4,x,y,z,w"
        );
    }

    #[test]
    fn fixed_cleans_negative_zero() {
        assert_eq!(fixed(-0.0), "0.000000000000");
        assert_eq!(fixed(-1e-15), "0.000000000000");
        assert_eq!(fixed(-0.5), "-0.500000000000");
    }

    #[test]
    fn svg_outer_shell_on_radius() {
        let f = generate(GroupId::H2, 2).unwrap();
        let svg = fragment_svg(&f, true).unwrap();
        assert_eq!(svg.matches("<circle").count(), 61);
        // the centre dot and one outer dot at 450 px from it
        assert!(svg.contains("cx=\"500.000\" cy=\"500.000\""));
        let max_r = svg
            .lines()
            .filter(|l| l.starts_with("<circle"))
            .map(|l| {
                let num = |key: &str| -> f64 {
                    let i = l.find(key).unwrap() + key.len();
                    l[i..].split('"').next().unwrap().parse().unwrap()
                };
                (num("cx=\"") - 500.0).hypot(num("cy=\"") - 500.0)
            })
            .fold(0.0, f64::max);
        assert!((max_r - SVG_OUTER_RADIUS).abs() < 1e-2, "{max_r}");
        assert!(fragment_svg(&generate(GroupId::H3, 1).unwrap(), true).is_err());
    }

    #[test]
    fn doc_round_trips() {
        let f = generate(GroupId::H3, 1).unwrap();
        let doc = fragment_doc(&f, true);
        let text = serde_json::to_string(&doc).unwrap();
        let back: FragmentDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(doc.points.len(), 31);
    }
}
