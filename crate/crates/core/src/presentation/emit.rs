//! Text, LaTeX and JSON output of the full presentation.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

use super::relations::{involution_minor, qdet_relation, quadratic_relations, RelTerm, Relation, MINOR_MAX_N};

/// Which `τ`-part a printed coefficient carries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum OutCoeff {
    Formal { int: i64, qexp: i64, tauexp: Vec<i64> },
    Concrete { int: i64, qexp: i64, zeta: i64 },
}

impl OutCoeff {
    fn int(&self) -> i64 {
        match self {
            OutCoeff::Formal { int, .. } | OutCoeff::Concrete { int, .. } => *int,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub n: usize,
    /// Exponents `t` with `τ_p = ζ_n^{t_p}`; `None` keeps `τ` formal.
    pub tau: Option<Vec<i64>>,
    pub relations: Vec<Relation>,
    pub determinant: Relation,
    /// `(i, j, terms)` with `u_ij* = Σ terms`, in the untwisted algebra.
    pub involution: Vec<(usize, usize, Vec<RelTerm>)>,
}

pub fn emit_presentation(n: usize, tau: Option<&[i64]>) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::Invalid(format!("n must be at least 2, got {n}")));
    }
    if let Some(t) = tau {
        if t.len() != n - 1 {
            return Err(Error::Mismatch(format!("{} τ exponents for n = {n}", t.len())));
        }
    }
    let involution = if n <= MINOR_MAX_N {
        let mut v = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                v.push((i, j, involution_minor(n, i, j)?));
            }
        }
        v
    } else {
        Vec::new()
    };
    Ok(Presentation {
        n,
        tau: tau.map(|t| t.iter().map(|x| x.rem_euclid(n as i64)).collect()),
        relations: quadratic_relations(n),
        determinant: qdet_relation(n),
        involution,
    })
}

enum Style {
    Text,
    Latex,
}

impl Presentation {
    pub fn relation_count(&self) -> usize {
        self.relations.len() + 1
    }

    fn coeffs(&self, t: &RelTerm) -> Vec<OutCoeff> {
        match &self.tau {
            None => t
                .coeff
                .monomials()
                .into_iter()
                .map(|m| OutCoeff::Formal { int: m.coeff, qexp: m.qexp, tauexp: m.tauexp })
                .collect(),
            Some(tt) => t
                .coeff
                .specialize_monomials(tt)
                .into_iter()
                .map(|(c, a, k)| OutCoeff::Concrete { int: c, qexp: a, zeta: k })
                .collect(),
        }
    }

    fn json_side(&self, side: &[RelTerm]) -> Value {
        let mut out = Vec::new();
        for t in side {
            for c in self.coeffs(t) {
                out.push(json!({ "coeff": c, "word": t.word.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>() }));
            }
        }
        Value::Array(out)
    }

    fn json_relation(&self, r: &Relation) -> Value {
        json!({
            "kind": r.kind.map(|k| k.name()).unwrap_or("determinant"),
            "indices": r.indices,
            "lhs": self.json_side(&r.lhs),
            "rhs": self.json_side(&r.rhs),
        })
    }

    pub fn to_json(&self) -> Value {
        let mut rels: Vec<Value> = self.relations.iter().map(|r| self.json_relation(r)).collect();
        rels.push(self.json_relation(&self.determinant));
        let inv: Vec<Value> = self
            .involution
            .iter()
            .map(|(i, j, terms)| json!({ "entry": [i, j], "terms": self.json_side(terms) }))
            .collect();
        json!({
            "n": self.n,
            "tau": self.tau,
            "generator": "v",
            "relation_count": self.relation_count(),
            "relations": rels,
            "involution_untwisted": inv,
        })
    }

    /// Exponent mod `n` in `(−n/2, n/2]`.
    fn symmetric(&self, e: i64) -> i64 {
        let n = self.n as i64;
        let e = e.rem_euclid(n);
        if 2 * e > n {
            e - n
        } else {
            e
        }
    }

    fn factors(&self, c: &OutCoeff, style: &Style) -> Vec<String> {
        let mut f = Vec::new();
        if c.int().abs() != 1 {
            f.push(c.int().abs().to_string());
        }
        let power = |base: String, e: i64| match (style, e) {
            (_, 1) => base,
            (Style::Text, e) => format!("{base}^{e}"),
            (Style::Latex, e) => format!("{base}^{{{e}}}"),
        };
        let qexp = match c {
            OutCoeff::Formal { qexp, .. } | OutCoeff::Concrete { qexp, .. } => *qexp,
        };
        if qexp != 0 {
            f.push(power("q".into(), qexp));
        }
        match c {
            OutCoeff::Formal { tauexp, .. } => {
                for (p, &e) in tauexp.iter().enumerate() {
                    if e != 0 {
                        let base = match style {
                            Style::Text => format!("τ{}", p + 1),
                            Style::Latex => format!("\\tau_{{{}}}", p + 1),
                        };
                        f.push(power(base, self.symmetric(e)));
                    }
                }
            }
            OutCoeff::Concrete { zeta, .. } if *zeta != 0 => {
                let base = match style {
                    Style::Text => format!("ζ{}", self.n),
                    Style::Latex => format!("\\zeta_{{{}}}", self.n),
                };
                f.push(power(base, self.symmetric(*zeta)));
            }
            OutCoeff::Concrete { .. } => {}
        }
        f
    }

    fn word(&self, w: &[(usize, usize)], letter: &str, style: &Style) -> Vec<String> {
        w.iter()
            .map(|&(i, j)| match style {
                Style::Text => format!("{letter}{i}{j}"),
                Style::Latex => format!("{letter}_{{{i}{j}}}"),
            })
            .collect()
    }

    fn side(&self, side: &[RelTerm], letter: &str, style: &Style) -> String {
        let mut out = String::new();
        for t in side {
            let mut cs = self.coeffs(t);
            cs.sort_by_key(|c| match c {
                OutCoeff::Formal { qexp, .. } | OutCoeff::Concrete { qexp, .. } => -qexp,
            });
            if cs.is_empty() {
                continue;
            }
            let word = self.word(&t.word, letter, style);
            let (negative, mut parts) = if cs.len() == 1 {
                (cs[0].int() < 0, self.factors(&cs[0], style))
            } else {
                let inner: Vec<String> = cs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| {
                        let sign = match (k, c.int() < 0) {
                            (0, true) => "-",
                            (0, false) => "",
                            (_, true) => " - ",
                            (_, false) => " + ",
                        };
                        let body = self.factors(c, style);
                        let body = if body.is_empty() { "1".to_string() } else { body.join(" ") };
                        format!("{sign}{body}")
                    })
                    .collect();
                (false, vec![format!("({})", inner.concat())])
            };
            if parts.is_empty() && word.is_empty() {
                parts.push("1".into());
            }
            parts.extend(word);
            let sep = match (out.is_empty(), negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            out.push_str(sep);
            out.push_str(&parts.join(" "));
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    fn render(&self, style: Style) -> String {
        let mut lines = Vec::new();
        let tau = match &self.tau {
            None => "formal τ".to_string(),
            Some(t) => format!("τ_p = ζ{}^t_p, t = {t:?}", self.n),
        };
        let eq = |r: &Relation, letter: &str| format!("{} = {}", self.side(&r.lhs, letter, &style), self.side(&r.rhs, letter, &style));
        match style {
            Style::Text => {
                lines.push(format!("C[SU_q^τ({})], {tau}, {} relations", self.n, self.relation_count()));
                for r in &self.relations {
                    lines.push(format!("[{}] {}", r.kind.map(|k| k.name()).unwrap_or(""), eq(r, "v")));
                }
                lines.push(format!("[determinant] {}", eq(&self.determinant, "v")));
                if !self.involution.is_empty() {
                    lines.push("untwisted involution:".into());
                    for (i, j, terms) in &self.involution {
                        lines.push(format!("u{i}{j}* = {}", self.side(terms, "u", &style)));
                    }
                }
            }
            Style::Latex => {
                lines.push("\\begin{align*}".into());
                let all: Vec<&Relation> = self.relations.iter().chain(std::iter::once(&self.determinant)).collect();
                for (k, r) in all.iter().enumerate() {
                    let end = if k + 1 < all.len() || !self.involution.is_empty() { " \\\\" } else { "" };
                    lines.push(format!("{}{end}", eq(r, "v").replacen(" = ", " &= ", 1)));
                }
                for (k, (i, j, terms)) in self.involution.iter().enumerate() {
                    let end = if k + 1 < self.involution.len() { " \\\\" } else { "" };
                    lines.push(format!("u_{{{i}{j}}}^* &= {}{end}", self.side(terms, "u", &style)));
                }
                lines.push("\\end{align*}".into());
            }
        }
        lines.join("\n")
    }

    pub fn to_text(&self) -> String {
        self.render(Style::Text)
    }

    pub fn to_latex(&self) -> String {
        self.render(Style::Latex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_trivial_tau() {
        let p = emit_presentation(2, Some(&[0])).unwrap();
        let text = p.to_text();
        assert!(text.contains("[row] v11 v12 = q v12 v11"), "{text}");
        assert!(text.contains("[cross] v11 v22 - v22 v11 = (q - q^-1) v12 v21"), "{text}");
        assert!(text.contains("u11* = u22"), "{text}");
        assert!(text.contains("[determinant] v11 v22 - q v12 v21 = 1"), "{text}");
    }

    #[test]
    fn su2_minus_one() {
        let p = emit_presentation(2, Some(&[1])).unwrap();
        let text = p.to_text();
        assert!(text.contains("[determinant] v11 v22 + q v12 v21 = 1"), "{text}");
        assert!(text.contains("[row] v11 v12 = -q v12 v11"), "{text}");
        let j = p.to_json();
        let det = &j["relations"][6];
        assert_eq!(det["kind"], "determinant");
        assert_eq!(det["lhs"][1]["coeff"], serde_json::json!({"int": 1, "qexp": 1, "zeta": 0}));
        assert_eq!(det["rhs"][0]["word"], serde_json::json!([]));
    }

    #[test]
    fn formal_output() {
        let p = emit_presentation(3, None).unwrap();
        assert_eq!(p.relation_count(), 37);
        assert_eq!(p.to_json()["relations"].as_array().unwrap().len(), 37);
        let text = p.to_text();
        assert!(text.contains("τ1"));
        assert!(text.contains("u22* = u11 u33 - q u13 u31"), "{text}");
        let latex = p.to_latex();
        assert!(latex.starts_with("\\begin{align*}") && latex.ends_with("\\end{align*}"));
        assert!(latex.contains("\\tau_{1}"));
        assert!(emit_presentation(3, Some(&[1])).is_err());
    }
}
