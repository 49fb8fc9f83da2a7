use std::fmt;

use super::{psi_report, thresholds, PsiReport};
use crate::permgroup::PermGroup;

/// Which alternative of the solvability trichotomy a group falls into.
///
/// Alternatives are tried in order and the first that holds is reported.
/// `Unclassified` means the hypothesis holds but none of the alternatives
/// do, i.e. a counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem6Case {
    /// Sylow `p` cyclic and normal.
    Case1,
    /// Sylow `q` cyclic, `q`-nilpotent and `G'' <= Z(G)`.
    Case2,
    /// Sylow `p` cyclic, `p`-nilpotent and `G'' <= Z(G)`.
    Case3,
    HypothesisNotMet,
    Unclassified,
}

impl fmt::Display for Theorem6Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem6Case::Case1 => "case1",
            Theorem6Case::Case2 => "case2",
            Theorem6Case::Case3 => "case3",
            Theorem6Case::HypothesisNotMet => "hypothesis_not_met",
            Theorem6Case::Unclassified => "unclassified",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub label: String,
    pub solvable: bool,
    /// `|G|, |G'|, |G''|, ...` up to the first repeat (or 1).
    pub derived_orders: Vec<u64>,
    pub center_order: u64,
    /// `G'' <= Z(G)`
    pub second_derived_central: bool,
    /// Sylow subgroup for the largest prime `p` is cyclic.
    pub sylow_p_cyclic: bool,
    pub sylow_p_normal: bool,
    /// The Sylow `p`-subgroup has a cyclic subgroup of index `p`.
    pub sylow_has_cyclic_index_p: bool,
    /// Sylow subgroup for the smallest prime `q` is cyclic.
    pub sylow_q_cyclic: bool,
    pub q_nilpotent: bool,
    pub p_nilpotent: bool,
    pub theorem6_hypothesis: bool,
    pub theorem6_case: Theorem6Case,
}

impl StructureReport {
    pub fn derived_length(&self) -> Option<usize> {
        self.solvable.then(|| self.derived_orders.len() - 1)
    }

    /// The first alternative of the trichotomy that holds, regardless of the
    /// hypothesis.
    pub fn first_case(&self) -> Option<Theorem6Case> {
        if self.sylow_p_cyclic && self.sylow_p_normal {
            Some(Theorem6Case::Case1)
        } else if self.sylow_q_cyclic && self.q_nilpotent && self.second_derived_central {
            Some(Theorem6Case::Case2)
        } else if self.sylow_p_cyclic && self.p_nilpotent && self.second_derived_central {
            Some(Theorem6Case::Case3)
        } else {
            None
        }
    }

    /// Every conclusion of the trichotomy result: solvable, Sylow `p` has a cyclic
    /// subgroup of index `p`, and one of the three alternatives.
    pub fn theorem6_conclusions_hold(&self) -> bool {
        self.solvable && self.sylow_has_cyclic_index_p && self.first_case().is_some()
    }
}

/// Computes every structural flag the solvability results mention.
pub fn structure_report(g: &PermGroup) -> StructureReport {
    let report = psi_report(g);
    structure_report_with(g, &report)
}

pub(crate) fn structure_report_with(g: &PermGroup, r: &PsiReport) -> StructureReport {
    let series = g.derived_series();
    let derived_orders: Vec<u64> = series.iter().map(PermGroup::order).collect();
    let solvable = *derived_orders.last().unwrap() == 1;
    let second_derived_central = match series.get(2) {
        Some(g2) => g.is_central(g2).expect("derived subgroups lie in G"),
        // G' trivial, or G = G' (then G'' = G)
        None => series.len() < 2 || series[1].order() == 1 || g.is_abelian(),
    };
    let center_order = g.center().order();

    let (mut sylow_p_cyclic, mut sylow_p_normal, mut sylow_has_cyclic_index_p) = (true, true, true);
    let (mut sylow_q_cyclic, mut q_nilpotent, mut p_nilpotent) = (true, true, true);
    if let (Some(q), Some(p)) = (r.q, r.p) {
        let sp = g.sylow_subgroup(p).expect("p divides |G|");
        sylow_p_cyclic = sp.is_cyclic();
        sylow_p_normal = g.is_normal(&sp).expect("Sylow subgroup lies in G");
        sylow_has_cyclic_index_p = sp
            .has_cyclic_subgroup_of_index_p(p)
            .expect("Sylow subgroup is a p-group");
        sylow_q_cyclic = g.sylow_subgroup(q).expect("q divides |G|").is_cyclic();
        q_nilpotent = g.is_q_nilpotent(q).expect("q divides |G|");
        p_nilpotent = g.is_q_nilpotent(p).expect("p divides |G|");
    }

    let theorem6_hypothesis = thresholds::theorem6(r).is_some_and(|t| thresholds::meets(r, &t));
    let mut s = StructureReport {
        label: r.label.clone(),
        solvable,
        derived_orders,
        center_order,
        second_derived_central,
        sylow_p_cyclic,
        sylow_p_normal,
        sylow_has_cyclic_index_p,
        sylow_q_cyclic,
        q_nilpotent,
        p_nilpotent,
        theorem6_hypothesis,
        theorem6_case: Theorem6Case::HypothesisNotMet,
    };
    if theorem6_hypothesis {
        s.theorem6_case = s.first_case().unwrap_or(Theorem6Case::Unclassified);
    }
    s
}
