//! The full analysis pipeline: reduction, rank and complexity, the
//! centralizer Levi L, Γ, the little Weyl group and the isotropy shape.

use std::collections::BTreeSet;

use super::little_weyl::{determine_little_weyl, LittleWeyl};
use super::{run_reduction_from, ReduceError, ReductionStep, TerminalData};
use crate::budget::Budget;
use crate::reps::SympRepSpec;
use crate::rootdata::subspace::canonical_basis;
use crate::rootdata::{subspace_normalizer, RootDatum, SubspaceGroupData, WeylElement};
use crate::weight::{RatVec, WeightVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub budget: Budget,
    /// Starting degree for Hilbert matching.
    pub hilbert_degree: usize,
    /// Overrides the deterministic choice at the first reduction step.
    pub first_choice: Option<WeightVec>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { budget: Budget::default(), hilbert_degree: 8, first_choice: None }
    }
}

/// Generic isotropy group H with `(L,L) ⊆ H₀ ⊆ L`, `L/H₀ = A` and
/// `H = H₀ × Sp_{2m₁−1} × …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropyShape {
    pub dim_h: i64,
    pub levi_type: String,
    pub a_rank: usize,
    /// The labels `2mᵢ − 1`.
    pub sp_parts: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub rk_s: usize,
    pub c_s: usize,
    pub mf: bool,
    pub a_star_basis: Vec<RatVec>,
    pub levi_l: RootDatum,
    pub a_rank: usize,
    pub sp_factor_sizes: Vec<usize>,
    pub gamma: SubspaceGroupData,
    pub little_weyl: LittleWeyl,
    pub isotropy: IsotropyShape,
    pub trace: Vec<ReductionStep>,
    pub terminal: TerminalData,
}

/// The Levi with roots `{α : ⟨a, α^∨⟩ = 0 for all a ∈ a*}`.
pub fn centralizer_levi(datum: &RootDatum, a_star_basis: &[RatVec]) -> RootDatum {
    datum.subsystem(&datum.roots_orthogonal_to(a_star_basis))
}

fn root_set(d: &RootDatum) -> BTreeSet<WeightVec> {
    d.positive_roots().iter().map(|r| r.vector.clone()).collect()
}

pub fn isotropy_shape(levi_l: &RootDatum, td: &TerminalData) -> IsotropyShape {
    let sp: usize = td.sp_factor_sizes.iter().map(|m| 2 * m).sum();
    IsotropyShape {
        dim_h: levi_l.group_dim() as i64 - td.a_rank as i64 - sp as i64,
        levi_type: levi_l.type_string(),
        a_rank: td.a_rank,
        sp_parts: td.sp_factor_sizes.iter().map(|m| 2 * m - 1).collect(),
    }
}

/// Some `w ∈ W` with `w·span(a) = span(b)`.
pub fn conjugating_element(
    datum: &RootDatum,
    a: &[RatVec],
    b: &[RatVec],
    cap: usize,
) -> Result<Option<WeylElement>, ReduceError> {
    let n = datum.ambient_dim();
    let target = canonical_basis(b, n);
    let a = canonical_basis(a, n);
    if a.len() != target.len() {
        return Ok(None);
    }
    Ok(datum.enumerate_weyl(cap)?.into_iter().find(|w| {
        let image: Vec<RatVec> = a.iter().map(|v| w.matrix.apply_rat(v)).collect();
        canonical_basis(&image, n) == target
    }))
}

pub fn analyze(spec: &SympRepSpec, opts: &AnalyzeOptions) -> Result<AnalysisReport, ReduceError> {
    let datum = spec.datum();
    let (trace, terminal) = run_reduction_from(spec, opts.first_choice.as_ref(), &opts.budget)?;
    let levi_l = centralizer_levi(datum, &terminal.a_star_basis);
    let (l_roots, m_roots) = (root_set(&levi_l), root_set(&terminal.terminal_group));
    if !m_roots.is_subset(&l_roots) || l_roots.len() != m_roots.len() {
        return Err(ReduceError::Defect(format!(
            "centralizer of a* is {} but the terminal group is {}",
            levi_l.type_string(),
            terminal.terminal_group.type_string()
        )));
    }
    let gamma = subspace_normalizer(datum, &terminal.a_star_basis, opts.budget.weyl_cap)?;
    let mf = terminal.c == 0;
    let little_weyl = determine_little_weyl(spec, mf, &gamma, opts.hilbert_degree, &opts.budget)?;
    let isotropy = isotropy_shape(&levi_l, &terminal);
    Ok(AnalysisReport {
        rk_s: terminal.a_rank,
        c_s: terminal.c,
        mf,
        a_star_basis: terminal.a_star_basis.clone(),
        levi_l,
        a_rank: terminal.a_rank,
        sp_factor_sizes: terminal.sp_factor_sizes.clone(),
        gamma,
        little_weyl,
        isotropy,
        trace,
        terminal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Letter;

    fn spec(factors: &[(Letter, usize)], central: usize, summands: &[(&[i64], u64)]) -> SympRepSpec {
        let d = RootDatum::new(factors, central).unwrap();
        let s: Vec<_> = summands.iter().map(|(w, k)| (WeightVec::new(w.to_vec()), *k)).collect();
        SympRepSpec::new(d, &s).unwrap()
    }

    fn wv_order(r: &AnalysisReport) -> Option<usize> {
        match &r.little_weyl {
            LittleWeyl::Exact { group, .. } => Some(group.order()),
            _ => None,
        }
    }

    #[test]
    fn sp4_standard() {
        let r = analyze(&spec(&[(Letter::C, 2)], 0, &[(&[1, 0], 1)]), &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.rk_s, r.c_s, r.mf), (0, 0, true));
        assert_eq!(wv_order(&r), Some(1));
        assert_eq!(r.isotropy.dim_h, 6);
        assert_eq!(r.isotropy.sp_parts, vec![3]);
    }

    #[test]
    fn binary_cubics() {
        let r = analyze(&spec(&[(Letter::A, 1)], 0, &[(&[3], 1)]), &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.rk_s, r.c_s, r.mf), (1, 0, true));
        assert_eq!(wv_order(&r), Some(2));
        match &r.little_weyl {
            LittleWeyl::Exact { group, hilbert, .. } => {
                assert_eq!(group.degrees, vec![2]);
                assert_eq!(hilbert, &vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_standards_of_sl2() {
        let r = analyze(&spec(&[(Letter::A, 1)], 0, &[(&[1], 2)]), &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.rk_s, r.c_s), (1, 0));
        assert_eq!(r.gamma.order(), 2);
        assert_eq!(wv_order(&r), Some(1));
        assert_eq!(r.levi_l.type_string(), "T1");
        assert_eq!(r.isotropy.dim_h, 0);
    }

    #[test]
    fn cotangent_adjoint_is_not_mf() {
        let r = analyze(&spec(&[(Letter::A, 1)], 0, &[(&[2], 2)]), &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.rk_s, r.c_s, r.mf), (1, 1, false));
        match &r.little_weyl {
            LittleWeyl::Unknown { candidates, .. } => assert_eq!(candidates.len(), 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sl3_std_dual() {
        let r = analyze(&spec(&[(Letter::A, 2)], 0, &[(&[1, 0], 1), (&[0, 1], 1)]), &AnalyzeOptions::default())
            .unwrap();
        assert_eq!((r.rk_s, r.c_s, r.gamma.order()), (1, 0, 1));
        assert_eq!(r.levi_l.rank(), 1);
        assert_eq!(wv_order(&r), Some(1));
    }

    #[test]
    fn trivial_action_has_full_isotropy() {
        let r = analyze(&spec(&[(Letter::A, 1)], 0, &[(&[0], 4)]), &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.rk_s, r.c_s), (0, 2));
        assert_eq!(r.isotropy.dim_h, 3);
    }

    #[test]
    fn conjugacy_of_lines() {
        let d = RootDatum::new(&[(Letter::A, 2)], 0).unwrap();
        let q = |v: &[i64]| -> RatVec { v.iter().map(|&x| x.into()).collect() };
        let w = conjugating_element(&d, &[q(&[1, 0])], &[q(&[0, -1])], 100).unwrap();
        assert!(w.is_some());
        let w = conjugating_element(&d, &[q(&[1, 0])], &[q(&[1, 1])], 100).unwrap();
        assert!(w.is_none());
    }
}
