use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::group::PermGroup;
use crate::subdegree::{max_coprime_set, neumann_check, weiss_check, CoprimeClique, SuborbitProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeissVerdict {
    Pass,
    Fail,
    NotApplicable,
}

impl WeissVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            WeissVerdict::Pass => "pass",
            WeissVerdict::Fail => "fail",
            WeissVerdict::NotApplicable => "not-applicable",
        }
    }
}

/// Per-group verification record. Field order is the serialized key order.
///
/// The analysis fields are `None` for intransitive groups; the three
/// verdicts are asserted only for primitive groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimeReport {
    pub name: String,
    pub degree: usize,
    pub order: String,
    pub transitive: bool,
    pub primitive: bool,
    pub rank: Option<usize>,
    pub subdegrees: Option<Vec<usize>>,
    pub distinct_nontrivial_subdegrees: Option<Vec<usize>>,
    pub max_coprime_clique: Option<Vec<u64>>,
    pub clique_size: Option<usize>,
    pub weiss_ok: WeissVerdict,
    pub neumann_ok: Option<bool>,
    pub theorem_ok: Option<bool>,
    pub skipped_checks: Vec<String>,
}

pub const CSV_HEADER: [&str; 14] = [
    "name",
    "degree",
    "order",
    "transitive",
    "primitive",
    "rank",
    "subdegrees",
    "distinct_nontrivial_subdegrees",
    "max_coprime_clique",
    "clique_size",
    "weiss_ok",
    "neumann_ok",
    "theorem_ok",
    "skipped_checks",
];

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or(String::new(), |v| v.to_string())
}

impl CoprimeReport {
    /// A primitive group failing one of the asserted properties.
    pub fn is_violation(&self) -> bool {
        self.primitive
            && (self.theorem_ok == Some(false)
                || self.neumann_ok == Some(false)
                || self.weiss_ok == WeissVerdict::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// CSV cells in header order; lists are space-separated within a cell.
    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.name.clone(),
            self.degree.to_string(),
            self.order.clone(),
            self.transitive.to_string(),
            self.primitive.to_string(),
            opt(&self.rank),
            self.subdegrees.as_deref().map_or(String::new(), join),
            self.distinct_nontrivial_subdegrees.as_deref().map_or(String::new(), join),
            self.max_coprime_clique.as_deref().map_or(String::new(), join),
            opt(&self.clique_size),
            self.weiss_ok.as_str().to_string(),
            opt(&self.neumann_ok),
            opt(&self.theorem_ok),
            join(&self.skipped_checks),
        ]
    }

    pub fn to_csv(reports: &[CoprimeReport]) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for r in reports {
            w.write_record(r.csv_record()).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

/// A report plus the intermediate objects it was built from.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub report: CoprimeReport,
    pub profile: Option<SuborbitProfile>,
    pub clique: Option<CoprimeClique>,
}

pub fn analyze(group: &PermGroup, point: usize) -> CoprimeReport {
    analyze_full(group, point).report
}

pub fn analyze_full(group: &PermGroup, point: usize) -> Analysis {
    let name = group.label().unwrap_or("unnamed").to_string();
    let order = group.order();
    let transitive = group.is_transitive();
    let primitive = transitive && group.is_primitive();
    let mut skipped = Vec::new();
    let mut report = CoprimeReport {
        name,
        degree: group.degree(),
        order: order.to_string(),
        transitive,
        primitive,
        rank: None,
        subdegrees: None,
        distinct_nontrivial_subdegrees: None,
        max_coprime_clique: None,
        clique_size: None,
        weiss_ok: WeissVerdict::NotApplicable,
        neumann_ok: None,
        theorem_ok: None,
        skipped_checks: Vec::new(),
    };
    if !transitive {
        for check in ["subdegrees", "weiss", "neumann", "theorem"] {
            skipped.push(format!("{check}:intransitive"));
        }
        report.skipped_checks = skipped;
        return Analysis {
            report,
            profile: None,
            clique: None,
        };
    }
    let profile = match group.subdegrees(point) {
        Ok(p) => p,
        Err(e) => {
            skipped.push(format!("subdegrees:{}", e.to_string().replace(' ', "-")));
            report.skipped_checks = skipped;
            return Analysis {
                report,
                profile: None,
                clique: None,
            };
        }
    };
    let clique = max_coprime_set(&profile);
    report.rank = Some(profile.rank());
    report.subdegrees = Some(profile.subdegrees());
    report.distinct_nontrivial_subdegrees = Some(profile.distinct_nontrivial());
    report.max_coprime_clique = Some(clique.values.clone());
    report.clique_size = Some(clique.size());

    if primitive {
        let n = group.degree() as u64;
        let cyclic_prime = is_prime(n) && order == n.into();
        report.weiss_ok = if cyclic_prime {
            skipped.push("weiss:cyclic-prime-order".to_string());
            WeissVerdict::NotApplicable
        } else if weiss_check(&profile) {
            WeissVerdict::Pass
        } else {
            WeissVerdict::Fail
        };
        report.neumann_ok = Some(neumann_check(&profile, &clique));
        report.theorem_ok = Some(clique.size() <= 2);
    } else {
        for check in ["weiss", "neumann", "theorem"] {
            skipped.push(format!("{check}:imprimitive"));
        }
    }
    report.skipped_checks = skipped;
    Analysis {
        report,
        profile: Some(profile),
        clique: Some(clique),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alternating, cyclic, dihedral};

    #[test]
    fn imprimitive_has_null_theorem() {
        let r = analyze(&dihedral(4).unwrap(), 0);
        assert!(r.transitive && !r.primitive);
        assert_eq!(r.theorem_ok, None);
        assert_eq!(r.neumann_ok, None);
        assert_eq!(r.weiss_ok, WeissVerdict::NotApplicable);
        assert_eq!(r.subdegrees, Some(vec![1, 1, 2]));
        assert!(!r.is_violation());
    }

    #[test]
    fn cyclic_prime_is_exempt_from_weiss() {
        let r = analyze(&cyclic(5).unwrap(), 0);
        assert!(r.primitive);
        assert_eq!(r.rank, Some(5));
        assert_eq!(r.subdegrees, Some(vec![1; 5]));
        assert_eq!(r.clique_size, Some(0));
        assert_eq!(r.weiss_ok, WeissVerdict::NotApplicable);
        assert_eq!(r.theorem_ok, Some(true));
        assert_eq!(r.neumann_ok, Some(true));
    }

    #[test]
    fn intransitive_report() {
        let g = PermGroup::new(4, vec![crate::Permutation::parse_cycles("(1,2)", 4).unwrap()])
            .unwrap()
            .with_label("c2");
        let r = analyze(&g, 0);
        assert!(!r.transitive);
        assert_eq!(r.rank, None);
        assert_eq!(r.skipped_checks.len(), 4);
    }

    #[test]
    fn json_key_order() {
        let r = analyze(&alternating(5).unwrap(), 0);
        let json = r.to_json();
        let positions: Vec<usize> = CSV_HEADER
            .iter()
            .map(|k| json.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(json.contains("\"weiss_ok\": \"pass\""));
        assert!(!json.contains('\r'));
    }

    #[test]
    fn csv_lists_are_space_separated() {
        let r = analyze(&alternating(5).unwrap().with_label("a,5"), 0);
        let csv = CoprimeReport::to_csv(&[r]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(
            lines.next().unwrap(),
            "\"a,5\",5,60,true,true,2,1 4,4,4,1,pass,true,true,"
        );
    }
}
