use aenergy_core::bounds::SLACK_TOL;
use aenergy_core::{BoundId, Evaluation};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

/// Instances with `|margin|` below this count as near-equality candidates.
pub const NEAR_EQUALITY: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub alpha: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundStats {
    pub count: usize,
    pub applicable: usize,
    pub min_slack: Option<f64>,
    pub argmin_graph6: Option<String>,
    pub argmin_alpha: Option<f64>,
    pub violations: Vec<Violation>,
    pub near_equality: usize,
    pub equality_cases: usize,
}

impl BoundStats {
    fn new() -> Self {
        BoundStats {
            count: 0,
            applicable: 0,
            min_slack: None,
            argmin_graph6: None,
            argmin_alpha: None,
            violations: Vec::new(),
            near_equality: 0,
            equality_cases: 0,
        }
    }

    fn merge(&mut self, other: BoundStats) {
        self.count += other.count;
        self.applicable += other.applicable;
        if let Some(s) = other.min_slack {
            if self.min_slack.is_none_or(|cur| s < cur) {
                self.min_slack = other.min_slack;
                self.argmin_graph6 = other.argmin_graph6;
                self.argmin_alpha = other.argmin_alpha;
            }
        }
        self.violations.extend(other.violations);
        self.near_equality += other.near_equality;
        self.equality_cases += other.equality_cases;
    }
}

/// Per-bound aggregate of a sweep, kept in the order bounds were requested.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    entries: Vec<(BoundId, BoundStats)>,
}

impl VerificationReport {
    pub fn new(ids: &[BoundId]) -> Self {
        VerificationReport { entries: ids.iter().map(|&id| (id, BoundStats::new())).collect() }
    }

    pub fn record(&mut self, graph6: &str, alpha: f64, ev: &Evaluation) {
        let Some((_, s)) = self.entries.iter_mut().find(|(id, _)| *id == ev.id()) else {
            return;
        };
        s.count += 1;
        let Some(margin) = ev.margin() else { return };
        s.applicable += 1;
        if s.min_slack.is_none_or(|cur| margin < cur) {
            s.min_slack = Some(margin);
            s.argmin_graph6 = Some(graph6.to_string());
            s.argmin_alpha = Some(alpha);
        }
        if margin < -SLACK_TOL {
            s.violations.push(Violation { graph6: graph6.to_string(), alpha, margin });
        }
        if margin.abs() < NEAR_EQUALITY {
            s.near_equality += 1;
        }
        if ev.gap().is_some_and(|g| g <= super::EQUALITY_TOL * (1.0 + ev.magnitude())) {
            s.equality_cases += 1;
        }
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for ((id, mine), (oid, theirs)) in self.entries.iter_mut().zip(other.entries) {
            debug_assert_eq!(*id, oid);
            mine.merge(theirs);
        }
    }

    pub fn stats(&self, id: BoundId) -> Option<&BoundStats> {
        self.entries.iter().find(|(i, _)| *i == id).map(|(_, s)| s)
    }

    pub fn entries(&self) -> impl Iterator<Item = (BoundId, &BoundStats)> {
        self.entries.iter().map(|(id, s)| (*id, s))
    }

    pub fn violations(&self) -> impl Iterator<Item = (BoundId, &Violation)> {
        self.entries.iter().flat_map(|(id, s)| s.violations.iter().map(move |v| (*id, v)))
    }

    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "bound_id",
            "count",
            "applicable",
            "min_slack",
            "argmin_graph6",
            "argmin_alpha",
            "violations",
            "near_equality",
            "equality_cases",
        ])
        .expect("in-memory write");
        let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
        for (id, s) in self.entries() {
            w.write_record([
                id.as_str().to_string(),
                s.count.to_string(),
                s.applicable.to_string(),
                opt(s.min_slack),
                s.argmin_graph6.clone().unwrap_or_default(),
                opt(s.argmin_alpha),
                s.violations.len().to_string(),
                s.near_equality.to_string(),
                s.equality_cases.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8")
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (id, s) in &self.entries {
            map.serialize_entry(id.as_str(), s)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use aenergy_core::bounds::evaluate_graph;
    use aenergy_core::FamilySpec;

    #[test]
    fn record_and_serialize() {
        let mut r = VerificationReport::new(&[BoundId::UbT31, BoundId::LbT41]);
        let k2 = FamilySpec::Path(2).generate().unwrap();
        for a in [0.2, 0.4] {
            r.record("A_", a, &evaluate_graph(&k2, a, BoundId::UbT31).unwrap());
        }
        r.record("A_", 0.5, &evaluate_graph(&k2, 0.5, BoundId::SpreadL28).unwrap());
        let s = r.stats(BoundId::UbT31).unwrap();
        assert_eq!((s.count, s.applicable, s.equality_cases), (2, 2, 2));
        assert_eq!(r.stats(BoundId::LbT41).unwrap().count, 0);
        assert!(r.stats(BoundId::SpreadL28).is_none());

        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 2);
        assert_eq!(v["UB_T31"]["argmin_graph6"], "A_");
        assert_eq!(v["LB_T41"]["min_slack"], serde_json::Value::Null);
        assert!(v["UB_T31"]["violations"].as_array().unwrap().is_empty());

        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.lines().nth(1).unwrap().starts_with("UB_T31,2,2,"));
    }

    #[test]
    fn merge_keeps_first_minimum() {
        let mut a = VerificationReport::new(&[BoundId::UbT31]);
        let mut b = a.clone();
        let k2 = FamilySpec::Path(2).generate().unwrap();
        let ev = evaluate_graph(&k2, 0.3, BoundId::UbT31).unwrap();
        a.record("first", 0.3, &ev);
        b.record("second", 0.3, &ev);
        a.merge(b);
        let s = a.stats(BoundId::UbT31).unwrap();
        assert_eq!(s.argmin_graph6.as_deref(), Some("first"));
        assert_eq!(s.count, 2);
    }
}
