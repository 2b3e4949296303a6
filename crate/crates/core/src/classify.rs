//! Decision procedures for the homogeneity and Koszul-type properties of Brauer graph algebras.

use num_integer::Integer;
use serde::Serialize;

use crate::graph::{BrauerGraph, Family, GraphError};
use crate::oracle::FieldKind;
use crate::presentation::{Homogeneity, Presentation};

/// Which of the two 2-d-homogeneity conditions holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TwoDCondition {
    /// `val·m = d` at every vertex.
    AllWeightsD,
    /// A truncated edge, not `A₂`, no two truncated successors, `val·m ∈ {1, d}`.
    Truncated,
    Neither,
}

/// Multiplicities along the path when the graph is `A_n`.
fn path_mults(g: &BrauerGraph) -> Option<Vec<u32>> {
    g.path_order().map(|order| order.into_iter().map(|v| g.multiplicity(v)).collect())
}

/// Index (1 to 6) of the quadratic family containing `g`.
pub fn quadratic_family(g: &BrauerGraph) -> Option<u8> {
    let ones = |xs: &[u32]| xs.iter().all(|&m| m == 1);
    match g.recognize_family() {
        Family::A(n) => {
            let m = path_mults(g)?;
            let (first, last, inner) = (m[0], m[n - 1], &m[1..n - 1]);
            if n == 2 && ones(&m) && g.has_trivial_quantizer() {
                Some(1)
            } else if first == 2 && last == 2 && ones(inner) {
                Some(2)
            } else if n >= 3 && ones(inner) && ((first == 2 && last == 1) || (first == 1 && last == 2)) {
                Some(3)
            } else if n >= 4 && ones(&m) && g.has_trivial_quantizer() {
                Some(4)
            } else {
                None
            }
        }
        Family::ATilde(n) if n >= 1 && (0..g.num_vertices()).all(|v| g.multiplicity(v) == 1) => Some(5),
        Family::Loop if g.multiplicity(0) == 1 => Some(6),
        _ => None,
    }
}

pub fn quadratic_family_check(g: &BrauerGraph) -> bool {
    quadratic_family(g).is_some()
}

/// A star with `n` edges, `n | d-1`, centre multiplicity `(d-1)/n`, outer multiplicities one.
pub fn d_homog_star_check(g: &BrauerGraph, d: usize) -> bool {
    if d < 3 {
        return false;
    }
    let n = g.num_edges();
    if !(d - 1).is_multiple_of(n) {
        return false;
    }
    g.star_centers().into_iter().any(|c| {
        g.multiplicity(c) as usize == (d - 1) / n && (0..g.num_vertices()).all(|v| v == c || g.multiplicity(v) == 1)
    })
}

/// Some half-edge on a truncated edge whose rotation successor is a different truncated edge.
pub fn truncated_successors(g: &BrauerGraph) -> Option<(usize, usize)> {
    g.half_edges().find_map(|h| {
        let s = g.next(h).edge;
        (s != h.edge && g.edge_is_truncated(h.edge) && g.edge_is_truncated(s)).then_some((h.edge, s))
    })
}

fn is_a2_shape(g: &BrauerGraph) -> bool {
    g.num_edges() == 1 && !g.is_loop(0)
}

pub fn two_d_conditions(g: &BrauerGraph, d: usize) -> TwoDCondition {
    if d < 3 {
        return TwoDCondition::Neither;
    }
    let weights: Vec<usize> = (0..g.num_vertices()).map(|v| g.weight(v)).collect();
    if weights.iter().all(|&w| w == d) {
        return TwoDCondition::AllWeightsD;
    }
    if g.has_truncated_edge()
        && !is_a2_shape(g)
        && truncated_successors(g).is_none()
        && weights.iter().all(|&w| w == 1 || w == d)
    {
        return TwoDCondition::Truncated;
    }
    TwoDCondition::Neither
}

/// 2-d-homogeneity of a star read off its multiplicities.
pub fn star_2d_corollary(g: &BrauerGraph, d: usize) -> Result<bool, GraphError> {
    let Some(&c) = g.star_centers().first() else {
        return Err(GraphError::Hypothesis("the graph is not a star".into()));
    };
    let n = g.num_edges();
    if !d.is_multiple_of(n) || g.multiplicity(c) as usize != d / n {
        return Ok(false);
    }
    let outer: Vec<usize> = g.rotation(c).iter().map(|h| g.vertex_of(h.opposite())).collect();
    let m = |i: usize| g.multiplicity(outer[i % n]) as usize;
    Ok((0..n).all(|i| (m(i) == 1 || m(i) == d) && (m(i) * m(i + 1) == d || m(i) * m(i + 1) == d * d)))
}

/// 2-d-homogeneity of `A_n` read off its multiplicities.
pub fn a_n_2d_corollary(g: &BrauerGraph, d: usize) -> Result<bool, GraphError> {
    let m = path_mults(g).ok_or_else(|| GraphError::Hypothesis("the graph is not a path".into()))?;
    let n = m.len();
    if n < 3 || !d.is_multiple_of(2) {
        return Ok(false);
    }
    let d32 = d as u32;
    let (first, last) = (m[0], m[n - 1]);
    let ends_ok = [first, last].iter().all(|&x| x == 1 || x == d32) && (n != 3 || first == d32 || last == d32);
    Ok(ends_ok && m[1..n - 1].iter().all(|&x| x == d32 / 2))
}

/// How the field hypotheses stand for a nontrivial quantizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldStatus {
    TrivialQuantizer,
    ValencyAtMostTwo,
    RootsAvailable,
    Conditional,
}

/// Whether the quantizer can be ignored over `field`.
pub fn field_status(g: &BrauerGraph, field: FieldKind) -> FieldStatus {
    if g.has_trivial_quantizer() {
        return FieldStatus::TrivialQuantizer;
    }
    let vals: Vec<usize> = (0..g.num_vertices()).map(|v| g.valency(v)).collect();
    if vals.iter().all(|&v| v <= 2) {
        return FieldStatus::ValencyAtMostTwo;
    }
    let k = vals.iter().copied().max().unwrap_or(1);
    if let FieldKind::Prime(p) = field {
        let exponent = (k * k * (k - 1) / 2) as u64;
        // every element has an exponent-th root iff the power map is a bijection
        if vals.iter().all(|&v| v == 1 || v == k) && (p == 2 || exponent.gcd(&(p - 1)) == 1) {
            return FieldStatus::RootsAvailable;
        }
    }
    FieldStatus::Conditional
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: bool,
    pub reason: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
}

fn verdict(value: bool, reason: impl Into<String>, witness: Vec<String>) -> Verdict {
    Verdict { value, reason: reason.into(), witness }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulReport {
    pub homogeneity: Homogeneity,
    pub quadratic: Verdict,
    pub koszul: Verdict,
    /// `Some(d)` when d-Koszul for `d ≥ 3`.
    pub d_koszul: Option<usize>,
    pub d_koszul_verdict: Verdict,
    /// Ext algebra generated in degrees 0, 1 and 2.
    pub ext_generated_012: Verdict,
    /// The graded K₂ label; absent when the algebra is not length graded.
    pub k2: Option<Verdict>,
    pub two_d_homogeneous: Option<usize>,
    pub two_d_determined: Verdict,
    pub two_d_koszul: Verdict,
    pub length_graded: bool,
    pub field: FieldStatus,
    pub conditional: bool,
}

impl KoszulReport {
    pub fn is_koszul(&self) -> bool {
        self.koszul.value
    }

    pub fn is_k2(&self) -> bool {
        self.ext_generated_012.value
    }

    pub fn is_2d_determined(&self) -> bool {
        self.two_d_determined.value
    }

    pub fn is_2d_koszul(&self) -> bool {
        self.two_d_koszul.value
    }

    pub fn to_json(&self, explain: bool) -> serde_json::Value {
        let flag = |v: &Verdict| {
            if explain {
                serde_json::to_value(v).expect("serializable")
            } else {
                serde_json::Value::Bool(v.value)
            }
        };
        let mut out = serde_json::json!({
            "homogeneity": homogeneity_label(self.homogeneity),
            "quadratic": flag(&self.quadratic),
            "koszul": flag(&self.koszul),
            "d_koszul": self.d_koszul,
            "ext_generated_in_degrees_0_1_2": flag(&self.ext_generated_012),
            "k2": self.k2.as_ref().map(flag),
            "two_d_homogeneous": self.two_d_homogeneous,
            "two_d_determined": flag(&self.two_d_determined),
            "two_d_koszul": flag(&self.two_d_koszul),
            "length_graded": self.length_graded,
            "conditional": self.conditional,
        });
        if explain {
            out["d_koszul_verdict"] = flag(&self.d_koszul_verdict);
            out["field"] = serde_json::to_value(self.field).expect("serializable");
            if self.conditional {
                out["note"] = "conditional on field hypotheses".into();
            }
        }
        out
    }
}

pub fn homogeneity_label(h: Homogeneity) -> String {
    match h {
        Homogeneity::Quadratic => "quadratic".into(),
        Homogeneity::DHomogeneous(d) => format!("{d}-homogeneous"),
        Homogeneity::TwoDHomogeneous(d) => format!("2-{d}-homogeneous"),
        Homogeneity::Inhomogeneous => "inhomogeneous".into(),
    }
}

pub fn koszul_report(g: &BrauerGraph, field: FieldKind) -> KoszulReport {
    let homogeneity = Presentation::new(g).homogeneity();
    let truncated = g.truncated_edges();
    let nontruncated: Vec<usize> = (0..g.num_edges()).filter(|&e| !g.edge_is_truncated(e)).collect();
    let ids = |es: &[usize]| es.iter().map(|&e| g.edge_id(e).to_string()).collect::<Vec<_>>();
    let first = |es: &[usize]| ids(&es[..es.len().min(1)]);
    let mixed = !truncated.is_empty() && !nontruncated.is_empty();
    let mixed_witness = || {
        let mut w = first(&truncated);
        w.extend(first(&nontruncated));
        w
    };

    let is_quadratic = homogeneity == Homogeneity::Quadratic;
    let quadratic = match quadratic_family(g) {
        Some(k) if is_quadratic => verdict(true, format!("minimal relations all have length 2; graph lies in quadratic family {k}"), Vec::new()),
        _ if is_quadratic => verdict(true, "minimal relations all have length 2", Vec::new()),
        _ => verdict(false, format!("minimal relations are {}", homogeneity_label(homogeneity)), Vec::new()),
    };

    let a2 = is_a2_shape(g);
    let koszul = if !is_quadratic {
        verdict(false, "Koszul algebras are quadratic", Vec::new())
    } else if a2 {
        verdict(true, "quadratic on a single edge", Vec::new())
    } else if truncated.is_empty() {
        verdict(true, "quadratic with no truncated edges", Vec::new())
    } else {
        verdict(false, "quadratic but a truncated edge makes the resolution of its simple nonlinear", first(&truncated))
    };

    let d_koszul = match homogeneity {
        Homogeneity::DHomogeneous(d) => Some(d),
        _ => None,
    };
    let d_koszul_verdict = match d_koszul {
        Some(d) => verdict(true, format!("{d}-homogeneous, hence {d}-Koszul"), Vec::new()),
        None => verdict(false, "not d-homogeneous for any d >= 3", Vec::new()),
    };

    let ext_generated_012 = if mixed {
        verdict(false, "truncated and nontruncated edges both occur", mixed_witness())
    } else if truncated.is_empty() {
        verdict(true, "no truncated edges", Vec::new())
    } else {
        verdict(true, "every edge is truncated", Vec::new())
    };
    let length_graded = g.is_length_graded();
    let k2 = length_graded.then(|| Verdict { reason: format!("length graded; {}", ext_generated_012.reason), ..ext_generated_012.clone() });

    let two_d_homogeneous = match homogeneity {
        Homogeneity::TwoDHomogeneous(d) => Some(d),
        _ => None,
    };
    let two_d_determined = match two_d_homogeneous {
        None => verdict(false, "not 2-d-homogeneous", Vec::new()),
        Some(d) if truncated.is_empty() => verdict(true, format!("2-{d}-homogeneous with no truncated edges"), Vec::new()),
        Some(d) => verdict(false, format!("2-{d}-homogeneous with a truncated edge"), first(&truncated)),
    };
    let two_d_koszul = Verdict { reason: two_d_determined.reason.clone(), ..two_d_determined.clone() };

    let field = field_status(g, field);
    KoszulReport {
        homogeneity,
        quadratic,
        koszul,
        d_koszul,
        d_koszul_verdict,
        ext_generated_012,
        k2,
        two_d_homogeneous,
        two_d_determined,
        two_d_koszul,
        length_graded,
        field,
        conditional: field == FieldStatus::Conditional,
    }
}
