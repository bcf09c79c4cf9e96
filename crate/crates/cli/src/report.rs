//! The versioned analysis report. Serialization is canonical: serializing a
//! deserialized report reproduces the original bytes.

use serde::{Deserialize, Serialize};
use symrep::reduce::{basis_to_strings, AnalysisReport, LittleWeyl, ReflectionSubgroup};

use crate::spec_file::SpecFile;

/// Bumped whenever a field is added, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema_version: u32,
    pub input: SpecFile,
    pub dim_v: u64,
    pub rk_s: usize,
    pub c_s: usize,
    pub mf: bool,
    /// Rows of the reduced row echelon basis of a*, entries as `p` or `p/q`.
    pub a_star_basis: Vec<Vec<String>>,
    pub levi_l: String,
    pub a_rank: usize,
    pub sp_factors: Vec<usize>,
    pub gamma: GammaBlock,
    pub little_weyl: LittleWeylBlock,
    pub isotropy: IsotropyBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStep>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric_verification: Option<NumericBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaBlock {
    pub order: usize,
    pub reflection_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupBlock {
    pub order: usize,
    pub degrees: Vec<usize>,
}

impl From<&ReflectionSubgroup> for SubgroupBlock {
    fn from(g: &ReflectionSubgroup) -> Self {
        SubgroupBlock { order: g.order(), degrees: g.degrees.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LittleWeylBlock {
    /// `exact`, `ambiguous` or `unknown`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    /// Degrees of the basic invariants of W_V on a*.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
    /// Invariant dimensions of C[V]^G used for the match, degree 0 upwards.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<SubgroupBlock>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&LittleWeyl> for LittleWeylBlock {
    fn from(lw: &LittleWeyl) -> Self {
        let mut b = LittleWeylBlock {
            status: lw.status().to_string(),
            order: None,
            degrees: None,
            hilbert: None,
            candidates: None,
            reason: None,
        };
        match lw {
            LittleWeyl::Exact { group, hilbert, .. } => {
                b.order = Some(group.order());
                b.degrees = Some(group.degrees.clone());
                b.hilbert = Some(hilbert.clone());
            }
            LittleWeyl::Unknown { candidates, reason } => {
                b.candidates = Some(candidates.iter().map(SubgroupBlock::from).collect());
                b.reason = Some(reason.clone());
            }
            LittleWeyl::Ambiguous { candidates, hilbert, .. } => {
                b.candidates = Some(candidates.iter().map(SubgroupBlock::from).collect());
                b.hilbert = Some(hilbert.clone());
            }
        }
        b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsotropyBlock {
    pub dim_h: i64,
    pub levi_type: String,
    pub a_rank: usize,
    /// The labels `2mᵢ − 1` of the symplectic factors of H.
    pub parts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceStep {
    pub chi: Vec<i64>,
    pub delta_u: usize,
    pub m_type: String,
    pub dim_s: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericBlock {
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckResult {
    pub name: String,
    /// Absent for checks that compare exact data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Report {
    pub fn new(input: &SpecFile, dim_v: u64, r: &AnalysisReport, with_trace: bool) -> Self {
        let trace = with_trace.then(|| {
            r.trace
                .iter()
                .map(|s| TraceStep {
                    chi: s.chosen_chi.coords().to_vec(),
                    delta_u: s.delta_u.len(),
                    m_type: s.levi.type_string(),
                    dim_s: s.s_weights.total(),
                })
                .collect()
        });
        Report {
            schema_version: SCHEMA_VERSION,
            input: input.clone(),
            dim_v,
            rk_s: r.rk_s,
            c_s: r.c_s,
            mf: r.mf,
            a_star_basis: basis_to_strings(&r.a_star_basis),
            levi_l: r.levi_l.type_string(),
            a_rank: r.a_rank,
            sp_factors: r.sp_factor_sizes.clone(),
            gamma: GammaBlock { order: r.gamma.order(), reflection_count: r.gamma.reflection_count() },
            little_weyl: LittleWeylBlock::from(&r.little_weyl),
            isotropy: IsotropyBlock {
                dim_h: r.isotropy.dim_h,
                levi_type: r.isotropy.levi_type.clone(),
                a_rank: r.isotropy.a_rank,
                parts: r.isotropy.sp_parts.clone(),
            },
            trace,
            numeric_verification: None,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<24}{v}\n"));
        line("schema_version", self.schema_version.to_string());
        line("group", group_string(&self.input));
        line("dim V", self.dim_v.to_string());
        line("rk_s", self.rk_s.to_string());
        line("c_s", self.c_s.to_string());
        line("multiplicity free", self.mf.to_string());
        let basis: Vec<String> = self.a_star_basis.iter().map(|r| format!("({})", r.join(", "))).collect();
        line("a* basis", if basis.is_empty() { "-".to_string() } else { basis.join(" ") });
        line("Levi L", self.levi_l.clone());
        line("A rank", self.a_rank.to_string());
        line("Sp factors", format!("{:?}", self.sp_factors));
        line("Gamma", format!("order {}, {} reflections", self.gamma.order, self.gamma.reflection_count));
        let lw = &self.little_weyl;
        let mut w = lw.status.clone();
        if let Some(o) = lw.order {
            w.push_str(&format!(", order {o}"));
        }
        if let Some(d) = &lw.degrees {
            w.push_str(&format!(", degrees {d:?}"));
        }
        if let Some(c) = &lw.candidates {
            w.push_str(&format!(", {} candidates", c.len()));
        }
        if let Some(r) = &lw.reason {
            w.push_str(&format!(" ({r})"));
        }
        line("W_V", w);
        let iso = &self.isotropy;
        line("isotropy H", format!("dim {}, Levi {}, A rank {}, Sp parts {:?}", iso.dim_h, iso.levi_type, iso.a_rank, iso.parts));
        if let Some(trace) = &self.trace {
            for (i, s) in trace.iter().enumerate() {
                line(
                    &format!("step {}", i + 1),
                    format!("chi {:?}, |Delta_u| {}, M {}, dim S {}", s.chi, s.delta_u, s.m_type, s.dim_s),
                );
            }
        }
        if let Some(nv) = &self.numeric_verification {
            line("verification", format!("seed {}, {} samples, {}", nv.seed, nv.samples, verdict(nv.passed)));
            for c in &nv.checks {
                let res = c.max_residual.map_or(String::new(), |r| format!(" residual {r:.3e}"));
                let tol = c.tolerance.map_or(String::new(), |t| format!(" (tol {t:.0e})"));
                let det = c.detail.as_ref().map_or(String::new(), |d| format!(" {d}"));
                line(&format!("  {}", c.name), format!("{}{res}{tol}{det}", verdict(c.passed)));
            }
        }
        out
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn group_string(f: &SpecFile) -> String {
    let mut parts: Vec<String> = f.group.simple.iter().map(|(l, r)| format!("{l}{r}")).collect();
    if f.group.central_torus_rank > 0 {
        parts.push(format!("T{}", f.group.central_torus_rank));
    }
    if parts.is_empty() {
        "trivial".to_string()
    } else {
        parts.join(" x ")
    }
}
