use serde::{Deserialize, Serialize};

use super::compile::RelativeFibrationDescriptor;
use crate::brieskorn::milnor_numbers;
use crate::cycle_graph::{monodromy_matrix, DimMode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn violations(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Rechecks every descriptor invariant from scratch; never fails, lists
/// violations instead.
pub fn validate_fibration(d: &RelativeFibrationDescriptor) -> ValidationReport {
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        })
    };
    let (up, down) = &d.monodromy_pair;
    let (page_up, page_down) = &d.page_pair;
    let mu = milnor_numbers(d.p, d.q).mu;
    let nd = d.dashed_handles.len() as i64;

    check(
        "equal word lengths",
        up.len() == down.len(),
        format!("{} upstairs, {} downstairs", up.len(), down.len()),
    );

    let ns = d.solid_count as i64;
    check(
        "word length law",
        up.len() as i64 == mu + nd + ns && down.len() as i64 == mu + nd + ns,
        format!("(p-1)(q-1) = {mu}, dashed = {nd}, solid = {ns}, length = {}", up.len()),
    );

    check(
        "word modes",
        up.graph().mode() == DimMode::Sphere
            && down.graph().mode() == DimMode::Curve
            && (up.graph().p(), up.graph().q()) == (d.p, d.q)
            && (down.graph().p(), down.graph().q()) == (d.p, d.q),
        format!(
            "sphere word on ({},{}), curve word on ({},{})",
            up.graph().p(),
            up.graph().q(),
            down.graph().p(),
            down.graph().q()
        ),
    );

    let mut mismatched = Vec::new();
    for (k, (a, b)) in up.letters().iter().zip(down.letters()).enumerate() {
        match (up.letter_class(*a), down.letter_class(*b)) {
            (Ok(x), Ok(y)) if x == y => {}
            _ => mismatched.push(k),
        }
    }
    check(
        "suspension correspondence",
        mismatched.is_empty(),
        if mismatched.is_empty() {
            "every upstairs letter is the suspension of its downstairs letter".into()
        } else {
            format!("letters at positions {mismatched:?} differ")
        },
    );

    let mut bad_spheres = Vec::new();
    for (k, &l) in up.letters().iter().enumerate() {
        match up.letter_class(l).and_then(|c| up.graph().pairing(&c, &c)) {
            Ok(-2) => {}
            Ok(s) => bad_spheres.push(format!("{} ({s})", up.letter_name(l))),
            Err(_) => bad_spheres.push(format!("position {k} (undefined)")),
        }
    }
    check(
        "sphere letters are -2 spheres",
        bad_spheres.is_empty(),
        if bad_spheres.is_empty() {
            "all upstairs letters have self-pairing -2".into()
        } else {
            format!("self-pairing differs from -2: {}", bad_spheres.join(", "))
        },
    );

    let r = d.punctures as i64;
    let want_down = d.p as i64 + d.q as i64 - (d.p * d.q) as i64 - r - nd;
    let want_up = 1 + mu - r + 2 * nd;
    check(
        "euler characteristic bookkeeping",
        page_down.euler_characteristic == want_down
            && page_up.euler_characteristic == want_up
            && page_up.handles as i64 == 2 * nd
            && page_up.punctures == d.punctures
            && page_down.punctures == d.punctures,
        format!(
            "curve page {} (expected {want_down}), sphere page {} (expected {want_up}), {} upstairs 2-handles",
            page_down.euler_characteristic, page_up.euler_characteristic, page_up.handles
        ),
    );

    for (name, word, stored) in [
        ("upstairs monodromy preserves form", up, &d.monodromy_matrices.0),
        ("downstairs monodromy preserves form", down, &d.monodromy_matrices.1),
    ] {
        match monodromy_matrix(word) {
            Ok(m) => {
                let preserved = word.graph().form().preserved_by(&m);
                check(
                    name,
                    preserved && m == *stored,
                    match (preserved, m == *stored) {
                        (true, true) => "M^T Q M = Q".into(),
                        (false, _) => "M^T Q M differs from Q".into(),
                        (true, false) => "stored matrix differs from the word's product".into(),
                    },
                );
            }
            Err(e) => check(name, false, e.to_string()),
        }
    }

    ValidationReport { checks }
}
