//! Structured checker verdicts.
//!
//! Every checker returns a [`ConditionReport`]: a named condition, a
//! pass/fail verdict, the witnesses (generator description plus the nonzero
//! symbolic defect) that caused a failure, and free-form notes for caveats.
//! The invariant `pass <=> witnesses is empty` is enforced by construction.

use std::fmt;

/// Names of the checkable conditions, used in reports and on the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    /// The square-zero block identities of the endomorphism.
    J2,
    S1,
    S2,
    S3,
    S4,
    /// Direct integrability defect on generator sections.
    Eq32,
    /// Route agreement between the direct test and S1-S4.
    Prop1,
    /// Hitchin pair conditions (closed, nondegenerate, commuting, twisted closed).
    Hitchin,
    /// IM-form conditions on the cotangent algebroid.
    ImForm,
    /// Equivalence of the IM-form verdict for the dual endomorphism with S2.
    ImIffS2,
    /// Koszul-bracket Leibniz rule.
    Leibniz,
    /// Twist identity `sigma = -a* omega` for a nondegenerate bivector.
    Twist,
    /// Two-route symplectic+subtangent characterization.
    SympSub,
    /// Contraction identity relating torsion to the twisted form.
    Eq319,
    /// S1 equivalent to closedness of the inverse 2-form.
    S1IffClosed,
    /// S2 equivalent to the Hitchin-pair conditions on the inverse 2-form.
    S2IffHitchin,
    /// Multiplicativity of a groupoid 2-form or (1,1)-tensor.
    Mult,
    /// Groupoid axioms as polynomial-map identities.
    Axioms,
    /// 2-form compatibility of target/source with the twist.
    T4II,
    /// Generalized subtangent map conditions for (t, s).
    T4III,
    /// Groupoid Hitchin pair equivalent to S2.
    T3,
}

impl CheckName {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::J2 => "J2",
            CheckName::S1 => "S1",
            CheckName::S2 => "S2",
            CheckName::S3 => "S3",
            CheckName::S4 => "S4",
            CheckName::Eq32 => "EQ32",
            CheckName::Prop1 => "PROP1",
            CheckName::Hitchin => "HITCHIN",
            CheckName::ImForm => "IMFORM",
            CheckName::ImIffS2 => "IM",
            CheckName::Leibniz => "LEIBNIZ",
            CheckName::Twist => "TWIST",
            CheckName::SympSub => "SYMPSUB",
            CheckName::Eq319 => "EQ319",
            CheckName::S1IffClosed => "S1CLOSED",
            CheckName::S2IffHitchin => "S2HITCHIN",
            CheckName::Mult => "MULT",
            CheckName::Axioms => "AXIOMS",
            CheckName::T4II => "T4II",
            CheckName::T4III => "T4III",
            CheckName::T3 => "T3",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One failure: which generators produced it and the nonzero defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub generators: String,
    pub defect: String,
}

/// Verdict of one checker run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    condition: CheckName,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
}

impl ConditionReport {
    pub fn new(condition: CheckName) -> Self {
        ConditionReport { condition, witnesses: Vec::new(), notes: Vec::new() }
    }

    pub fn condition(&self) -> CheckName {
        self.condition
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn add_witness(&mut self, generators: impl Into<String>, defect: impl Into<String>) {
        self.witnesses.push(Witness { generators: generators.into(), defect: defect.into() });
    }

    pub fn add_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Record a sub-verdict in the notes, keeping this report's own verdict
    /// driven solely by its witnesses.
    pub fn note_verdict(&mut self, label: &str, passed: bool) {
        self.add_note(format!("{label}: {}", if passed { "pass" } else { "fail" }));
    }

    /// Fold another report in as evidence: its witnesses become witnesses
    /// here (prefixed), so a failing part fails the whole.
    pub fn absorb(&mut self, part: &ConditionReport) {
        for w in &part.witnesses {
            self.witnesses.push(Witness {
                generators: format!("{}: {}", part.condition, w.generators),
                defect: w.defect.clone(),
            });
        }
        for n in &part.notes {
            self.notes.push(format!("{}: {}", part.condition, n));
        }
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.condition, if self.passed() { "PASS" } else { "FAIL" })?;
        for w in &self.witnesses {
            writeln!(f, "  witness [{}]: {}", w.generators, w.defect)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {}", n)?;
        }
        Ok(())
    }
}
