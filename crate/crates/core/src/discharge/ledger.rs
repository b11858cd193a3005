//! Charge ledgers: one discharging case each, as plain data.
//!
//! ```text
//! case cc6-K3 variant cc6
//! initial -1
//! gain 1/3 x 3 via R1 one from each neighbouring face
//! expect 0
//! require nonneg
//! end
//! ```
//!
//! `checkpoint <p/q>` pins the running total at that point, `expect` pins
//! the final value, and `role` tags the vertices the case is about.
//! A `transfer` block names one rule application seen from both ends:
//!
//! ```text
//! transfer cc6-face-to-triangle
//! via R1a
//! from cc6-f6 -1/3
//! to cc6-K3 1/3
//! end
//! ```

use crate::discharge::spec::{Rule, Variant};
use crate::error::{Error, Result};
use crate::fixture::{blocks, Line};
use crate::rational::{fmt_q, int, parse_rational, Rational};

pub const ROLES: [&str; 4] = ["full", "heavy", "needy", "precolored"];

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub rule: Rule,
    pub amount: Rational,
    pub multiplicity: u32,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Step {
    Gain(Entry),
    Checkpoint(Rational),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChargeLedger {
    pub name: String,
    pub variant: Variant,
    pub initial: Rational,
    pub steps: Vec<Step>,
    pub expect: Option<Rational>,
    pub require_nonneg: bool,
    pub roles: Vec<String>,
}

impl ChargeLedger {
    pub fn entries(&self) -> impl Iterator<Item = &Entry> {
        self.steps.iter().filter_map(|s| match s {
            Step::Gain(e) => Some(e),
            Step::Checkpoint(_) => None,
        })
    }

    pub fn entries_mut(&mut self) -> impl Iterator<Item = &mut Entry> {
        self.steps.iter_mut().filter_map(|s| match s {
            Step::Gain(e) => Some(e),
            Step::Checkpoint(_) => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transfer {
    pub name: String,
    pub rule: Rule,
    pub from: (String, Rational),
    pub to: (String, Rational),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct LedgerSet {
    pub cases: Vec<ChargeLedger>,
    pub transfers: Vec<Transfer>,
}

fn rational_at(line: &Line, i: usize, what: &str) -> Result<Rational> {
    let tok = line.tokens.get(i).ok_or_else(|| Error::parse(line.number, format!("missing {what}")))?;
    parse_rational(tok).map_err(|e| Error::parse(line.number, e.to_string()))
}

fn rule_at(line: &Line, i: usize) -> Result<Rule> {
    let tok = line.tokens.get(i).ok_or_else(|| Error::parse(line.number, "missing rule"))?;
    tok.parse().map_err(|e: Error| Error::parse(line.number, e.to_string()))
}

pub fn parse_ledgers(text: &str) -> Result<LedgerSet> {
    let mut set = LedgerSet::default();
    for b in blocks(text)? {
        match b.kind.as_str() {
            "case" => {
                let h = &b.header;
                if h.tokens.len() != 4 || h.tokens[2] != "variant" {
                    return Err(Error::parse(h.number, "expected `case <name> variant <v>`"));
                }
                let variant: Variant = h.tokens[3].parse().map_err(|e: Error| Error::parse(h.number, e.to_string()))?;
                let mut initial = None;
                let mut led = ChargeLedger {
                    name: b.name().to_owned(),
                    variant,
                    initial: int(0),
                    steps: Vec::new(),
                    expect: None,
                    require_nonneg: false,
                    roles: Vec::new(),
                };
                for line in &b.body {
                    match line.keyword() {
                        "initial" => initial = Some(rational_at(line, 1, "initial charge")?),
                        "gain" => {
                            if line.tokens.get(2).map(String::as_str) != Some("x")
                                || line.tokens.get(4).map(String::as_str) != Some("via")
                            {
                                return Err(Error::parse(line.number, "expected `gain <p/q> x <count> via <rule>`"));
                            }
                            led.steps.push(Step::Gain(Entry {
                                amount: rational_at(line, 1, "amount")?,
                                multiplicity: line.arg(3, "count")?,
                                rule: rule_at(line, 5)?,
                                note: line.tokens[6..].join(" "),
                            }));
                        }
                        "checkpoint" => led.steps.push(Step::Checkpoint(rational_at(line, 1, "checkpoint")?)),
                        "expect" => led.expect = Some(rational_at(line, 1, "expected value")?),
                        "require" => {
                            if line.tokens[1..] != ["nonneg"] {
                                return Err(Error::parse(line.number, "only `require nonneg` is supported"));
                            }
                            led.require_nonneg = true;
                        }
                        "role" => {
                            for r in &line.tokens[1..] {
                                if !ROLES.contains(&r.as_str()) {
                                    return Err(Error::parse(line.number, format!("unknown role `{r}`")));
                                }
                                led.roles.push(r.clone());
                            }
                        }
                        kw => return Err(Error::parse(line.number, format!("unknown keyword `{kw}`"))),
                    }
                }
                led.initial = initial.ok_or_else(|| Error::parse(h.number, "missing `initial`"))?;
                if set.cases.iter().any(|c| c.name == led.name) {
                    return Err(Error::parse(h.number, format!("duplicate case `{}`", led.name)));
                }
                set.cases.push(led);
            }
            "transfer" => {
                let (mut rule, mut from, mut to) = (None, None, None);
                for line in &b.body {
                    match line.keyword() {
                        "via" => rule = Some(rule_at(line, 1)?),
                        kw @ ("from" | "to") => {
                            let case: String = line.arg(1, "case")?;
                            let side = Some((case, rational_at(line, 2, "amount")?));
                            if kw == "from" {
                                from = side;
                            } else {
                                to = side;
                            }
                        }
                        kw => return Err(Error::parse(line.number, format!("unknown keyword `{kw}`"))),
                    }
                }
                let missing = |w: &str| Error::parse(b.header.number, format!("transfer without `{w}`"));
                set.transfers.push(Transfer {
                    name: b.name().to_owned(),
                    rule: rule.ok_or_else(|| missing("via"))?,
                    from: from.ok_or_else(|| missing("from"))?,
                    to: to.ok_or_else(|| missing("to"))?,
                });
            }
            other => return Err(Error::parse(b.header.number, format!("unknown block `{other}`"))),
        }
    }
    Ok(set)
}

/// initial + Σ amount·multiplicity.
pub fn evaluate_ledger(l: &ChargeLedger) -> Result<Rational> {
    let mut total = l.initial;
    for e in l.entries() {
        if !l.variant.allows(e.rule) {
            return Err(Error::Ledger { case: l.name.clone(), msg: format!("rule {} is not a {} rule", e.rule, l.variant) });
        }
        total += e.amount * int(e.multiplicity as i64);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseOutcome {
    pub name: String,
    pub value: Rational,
    pub failures: Vec<String>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_ledger(l: &ChargeLedger) -> Result<CaseOutcome> {
    let value = evaluate_ledger(l)?;
    let mut failures = Vec::new();
    let mut running = l.initial;
    for s in &l.steps {
        match s {
            Step::Gain(e) => running += e.amount * int(e.multiplicity as i64),
            Step::Checkpoint(c) if *c != running => {
                failures.push(format!("running total {} where {} was recorded", fmt_q(&running), fmt_q(c)));
            }
            Step::Checkpoint(_) => {}
        }
    }
    if let Some(x) = l.expect {
        if x != value {
            failures.push(format!("final {} where {} was recorded", fmt_q(&value), fmt_q(&x)));
        }
    }
    if l.require_nonneg && value < int(0) {
        failures.push(format!("final charge {} is negative", fmt_q(&value)));
    }
    Ok(CaseOutcome { name: l.name.clone(), value, failures })
}

/// Both ends exist, each books the amount under the rule, and nothing is
/// created or lost.
pub fn check_transfer(set: &LedgerSet, t: &Transfer) -> Vec<String> {
    let mut failures = Vec::new();
    for (case, amount) in [&t.from, &t.to] {
        match set.cases.iter().find(|c| &c.name == case) {
            None => failures.push(format!("no case `{case}`")),
            Some(c) => {
                if !c.entries().any(|e| e.rule == t.rule && e.amount == *amount) {
                    failures.push(format!("`{case}` books no {} under {}", fmt_q(amount), t.rule));
                }
            }
        }
    }
    if t.from.1 + t.to.1 != int(0) {
        failures.push(format!("{} sent, {} received", fmt_q(&-t.from.1), fmt_q(&t.to.1)));
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    const K3: &str = "case t variant cc6\ninitial -1\ngain 1/3 x 3 via R1\nexpect 0\nrequire nonneg\nend\n";

    #[test]
    fn evaluates() {
        let set = parse_ledgers(K3).unwrap();
        let out = check_ledger(&set.cases[0]).unwrap();
        assert_eq!(out.value, int(0));
        assert!(out.passed());
    }

    #[test]
    fn foreign_rule() {
        let set = parse_ledgers(&K3.replace("R1", "R0")).unwrap();
        assert!(matches!(evaluate_ledger(&set.cases[0]), Err(Error::Ledger { .. })));
    }

    #[test]
    fn checkpoints_and_signs() {
        let text = "case t variant cc7\ninitial 2\ngain -3/8 x 6 via R1c\ncheckpoint -1/4\nend\n";
        let set = parse_ledgers(text).unwrap();
        let out = check_ledger(&set.cases[0]).unwrap();
        assert_eq!(out.value, q(-1, 4));
        assert!(out.passed());
        let set = parse_ledgers(&text.replace("end", "require nonneg\nend")).unwrap();
        assert!(!check_ledger(&set.cases[0]).unwrap().passed());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_ledgers("case t variant cc6\nend\n"), Err(Error::Parse { line: 1, .. })));
        let bad = "case t variant cc6\ninitial 0\ngain 1/3 3 via R1\nend\n";
        assert!(matches!(parse_ledgers(bad), Err(Error::Parse { line: 3, .. })));
        assert!(parse_ledgers("case t variant c9\ninitial 0\nend\n").is_err());
        assert!(parse_ledgers("case t variant cc6\ninitial 0\nrole lazy\nend\n").is_err());
    }
}
