"""Strict positive definiteness diagnostics on complex spheres.

Strict positive definiteness of an expansion with nonnegative coefficients
is governed by the set of index differences carrying positive mass,
``{m - n : a_{m,n} > 0}``: the kernel is strictly positive definite exactly
when that set intersects every arithmetic progression of the integers.

A truncated sequence can only ever witness failures of this condition: a
progression missed within the truncation certifies a violation relative to
the available support, while meeting every progression up to some modulus
is merely consistency, never a proof. The verdicts here are labeled
accordingly, and the class-transfer helper only consumes evidence that was
supplied to it; it never upgrades "consistent" to "strict".
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .sequences import ComplexSchoenbergSequence

__all__ = [
    "SupportPattern",
    "SpdReport",
    "ClassEvidence",
    "ClassImplication",
    "support_pattern",
    "check_progressions",
    "transfer_class",
]

DEFAULT_THRESHOLD = 1e-12


@dataclass(frozen=True)
class SupportPattern:
    """Index differences m - n carrying coefficient mass above a threshold."""

    diffs: frozenset
    threshold: float
    truncation: int

    def to_dict(self) -> dict:
        return {
            "diffs": sorted(self.diffs),
            "threshold": self.threshold,
            "truncation": self.truncation,
        }


@dataclass(frozen=True)
class SpdReport:
    """Progression verdicts for one support pattern.

    ``hits[k][r]`` says whether the support meets residue r modulo k.
    ``summary`` is one of ``"consistent-with-SPD"`` (all progressions met up
    to ``max_modulus``; not a proof), ``"violates-at-(k,r)"`` (a certified
    miss relative to the truncated support), or ``"inconclusive"`` (empty
    pattern).
    """

    max_modulus: int
    hits: dict
    violations: tuple
    summary: str
    transfer_notes: tuple = ()

    @property
    def certified_violation(self) -> bool:
        return bool(self.violations)

    def to_dict(self) -> dict:
        return {
            "max_modulus": self.max_modulus,
            "hits": {str(k): list(v) for k, v in self.hits.items()},
            "violations": [list(v) for v in self.violations],
            "summary": self.summary,
            "transfer_notes": list(self.transfer_notes),
        }


@dataclass(frozen=True)
class ClassEvidence:
    """Membership evidence for one positive definiteness class.

    ``space`` is "complex" (sphere parameter ``dim`` = q) or "real"
    (``dim`` = d). ``member`` / ``strict`` are True, False or None for
    unknown; evidence is consumed, never derived, by the transfer rules.
    """

    space: str
    dim: int
    member: bool | None = None
    strict: bool | None = None
    source: str = ""

    def describe(self) -> str:
        where = (
            f"complex sphere (q={self.dim})"
            if self.space == "complex"
            else f"real sphere S^{self.dim}"
        )
        parts = []
        if self.member is not None:
            parts.append(("member" if self.member else "non-member"))
        if self.strict is not None:
            parts.append("strictly PD" if self.strict else "not strictly PD")
        return f"{' and '.join(parts) or 'no information'} on the {where}"


@dataclass(frozen=True)
class ClassImplication:
    rule: str
    premises: tuple
    conclusion: ClassEvidence

    @property
    def statement(self) -> str:
        return f"[{self.rule}] {' + '.join(self.premises)} => {self.conclusion.describe()}"

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "premises": list(self.premises),
            "conclusion": self.conclusion.describe(),
        }


def support_pattern(
    seq: ComplexSchoenbergSequence, threshold: float = DEFAULT_THRESHOLD
) -> SupportPattern:
    """Extract the difference set of the coefficients above ``threshold``.

    Requires a mass-valid sequence; the diagnostics are statements about
    nonnegative expansions and are meaningless otherwise.
    """
    if not seq.valid_mass:
        raise ValueError("support_pattern requires a mass-valid sequence")
    return SupportPattern(
        diffs=frozenset(seq.diagonals(threshold)),
        threshold=threshold,
        truncation=seq.max_degree,
    )


def check_progressions(pattern: SupportPattern, max_modulus: int | None = None) -> SpdReport:
    """Test the difference set against every progression of modulus <= K.

    A missed progression is a certified failure witness relative to the
    truncated support; an all-pass is reported as consistency only.
    """
    if max_modulus is None:
        max_modulus = max(pattern.truncation, 1)
    if max_modulus < 1:
        raise ValueError("max_modulus must be >= 1")
    diffs = pattern.diffs
    hits = {}
    violations = []
    for k in range(1, max_modulus + 1):
        residues_hit = [False] * k
        for x in diffs:
            residues_hit[x % k] = True
        hits[k] = tuple(residues_hit)
        for r, ok in enumerate(residues_hit):
            if not ok:
                violations.append((k, r))
    if not diffs:
        summary = "inconclusive"
    elif violations:
        k, r = violations[0]
        summary = f"violates-at-({k},{r})"
    else:
        summary = "consistent-with-SPD"
    return SpdReport(
        max_modulus=max_modulus,
        hits=hits,
        violations=tuple(violations),
        summary=summary,
    )


def transfer_class(
    seq_q: ComplexSchoenbergSequence,
    verdicts: SpdReport,
    q_prime: int,
    q_prime_member: bool | None = None,
    strict_at_q: bool | None = None,
    real_evidence: ClassEvidence | None = None,
) -> tuple[ClassImplication, ...]:
    """Deductions linking positive definiteness classes across dimensions.

    The rules applied, each purely propositional:

    * strict membership at q plus membership at q' gives strict membership
      at q';
    * membership-without-strictness at q plus membership at q' gives
      membership-without-strictness at q';
    * membership at q plus strictness of the composed real restriction at
      any real dimension gives strictness of that restriction on the real
      sphere of dimension 2q - 1;
    * strict membership at q plus membership of the composed real
      restriction at real dimension d gives strictness at that same d.

    Evidence handling: membership at q is read off ``seq_q.valid_mass``;
    strictness at q defaults to False when ``verdicts`` certifies a
    violation and to unknown otherwise, overridable through
    ``strict_at_q`` when outside evidence exists. Membership at q' < q
    follows from class nesting; for q' > q it must be supplied. Rules whose
    premises are unknown are simply not emitted.
    """
    if q_prime < 2:
        raise ValueError("q_prime must be >= 2")
    member_q = bool(seq_q.valid_mass)
    strict_q = strict_at_q
    if strict_q is None and verdicts.certified_violation:
        strict_q = False
    if q_prime_member is None and q_prime <= seq_q.q and member_q:
        q_prime_member = True

    implications = []
    premise_q_member = f"positive definite on the complex sphere (q={seq_q.q})"
    if strict_q is True and q_prime_member:
        implications.append(
            ClassImplication(
                rule="strict-transfer-complex",
                premises=(
                    f"strictly positive definite on the complex sphere (q={seq_q.q})",
                    f"positive definite on the complex sphere (q={q_prime})",
                ),
                conclusion=ClassEvidence(
                    "complex", q_prime, member=True, strict=True, source="transfer"
                ),
            )
        )
    if strict_q is False and member_q and q_prime_member:
        implications.append(
            ClassImplication(
                rule="non-strict-transfer-complex",
                premises=(
                    premise_q_member + ", not strictly",
                    f"positive definite on the complex sphere (q={q_prime})",
                ),
                conclusion=ClassEvidence(
                    "complex", q_prime, member=True, strict=False, source="transfer"
                ),
            )
        )
    if real_evidence is not None:
        if real_evidence.space != "real":
            raise ValueError("real_evidence must concern a real sphere")
        if member_q and real_evidence.strict:
            implications.append(
                ClassImplication(
                    rule="real-strictness-lifts",
                    premises=(
                        premise_q_member,
                        "composed restriction strictly positive definite "
                        f"on S^{real_evidence.dim}",
                    ),
                    conclusion=ClassEvidence(
                        "real",
                        2 * seq_q.q - 1,
                        member=True,
                        strict=True,
                        source="transfer",
                    ),
                )
            )
        if strict_q is True and real_evidence.member:
            implications.append(
                ClassImplication(
                    rule="complex-strictness-descends",
                    premises=(
                        f"strictly positive definite on the complex sphere (q={seq_q.q})",
                        f"composed restriction positive definite on S^{real_evidence.dim}",
                    ),
                    conclusion=ClassEvidence(
                        "real",
                        real_evidence.dim,
                        member=True,
                        strict=True,
                        source="transfer",
                    ),
                )
            )
    return tuple(implications)


def report_with_notes(report: SpdReport, implications) -> SpdReport:
    """Copy of a report carrying the implication statements as notes."""
    return replace(report, transfer_notes=tuple(i.statement for i in implications))
