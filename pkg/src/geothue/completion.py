"""Completion toward a geodesically perfect system.

Instead of orienting equations by a reduction order, unresolved critical
pairs contribute either a length-reducing rule or a length-preserving
equation.  Work proceeds in phases: every pair of a phase is resolved
against the system as it stood when the phase began, and the rules
gathered during the phase only take effect in the next one.  This makes
the trace independent of pair enumeration order.

A pair already seen in an earlier phase (same superposition, same rules,
same positions) is never resolved twice.  The run stops successfully the
first time a phase contributes nothing new; the result need not be
finite in general, so both a phase budget and a rule budget apply.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from .confluence import CriticalPair, critical_pairs, sp_equivalent
from .rewriting import reduce_lr_trace
from .systems import Rule, RuleKind, RewriteSystem, preserving, reducing
from .words import Word

DEFAULT_MAX_PHASES = 32
DEFAULT_MAX_RULES = 10 ** 4


class ResolutionAction(enum.Enum):
    JOINED = "joined"
    SP_EQUIVALENT = "sp-equivalent"
    ADD_REDUCING = "add-reducing"
    ADD_PRESERVING = "add-preserving"


@dataclass(frozen=True)
class Resolution:
    """Outcome of resolving one critical pair.

    chain lists the words of the derivation certificate: from the normal
    form of x up through x to the superposition z, then down through y to
    the normal form of y.  Each adjacent pair is one rewrite step.
    """

    pair: CriticalPair
    action: ResolutionAction
    x_hat: Word
    y_hat: Word
    rule: Optional[Rule]
    chain: Tuple[Word, ...]

    def to_dict(self, alphabet):
        return {
            "pair": self.pair.to_dict(alphabet),
            "action": self.action.value,
            "x_hat": alphabet.format(self.x_hat),
            "y_hat": alphabet.format(self.y_hat),
            "rule": ([alphabet.format(self.rule.lhs), alphabet.format(self.rule.rhs),
                      self.rule.kind.value] if self.rule else None),
            "chain": [alphabet.format(w) for w in self.chain],
        }


def _trace_words(start: Word, system: RewriteSystem) -> List[Word]:
    final, steps = reduce_lr_trace(start, system)
    words = [before for before, _pos, _rule in steps]
    words.append(final)
    return words


def resolve_pair(pair: CriticalPair, system: RewriteSystem,
                 max_nodes: Optional[int] = None) -> Resolution:
    """Normalize both sides and classify what, if anything, must be added."""
    x_seq = _trace_words(pair.x, system)
    y_seq = _trace_words(pair.y, system)
    x_hat, y_hat = x_seq[-1], y_seq[-1]
    chain = tuple(reversed(x_seq)) + (pair.z,) + tuple(y_seq)
    if x_hat == y_hat:
        return Resolution(pair, ResolutionAction.JOINED, x_hat, y_hat, None, chain)
    if len(x_hat) == len(y_hat):
        if sp_equivalent(x_hat, y_hat, system, max_nodes=max_nodes):
            return Resolution(pair, ResolutionAction.SP_EQUIVALENT,
                              x_hat, y_hat, None, chain)
        return Resolution(pair, ResolutionAction.ADD_PRESERVING, x_hat, y_hat,
                          preserving(x_hat, y_hat), chain)
    if len(x_hat) > len(y_hat):
        rule = reducing(x_hat, y_hat)
    else:
        rule = reducing(y_hat, x_hat)
    return Resolution(pair, ResolutionAction.ADD_REDUCING, x_hat, y_hat, rule, chain)


class CompletionStatus(enum.Enum):
    COMPLETED = "completed"
    PHASE_LIMIT = "phase-limit"
    RULE_LIMIT = "rule-limit"


@dataclass
class PhaseStats:
    index: int
    new_pairs: int
    added_reducing: int
    added_preserving: int  # counted as unordered equations
    total_rules: int

    def to_dict(self):
        return {"index": self.index, "new_pairs": self.new_pairs,
                "added_reducing": self.added_reducing,
                "added_preserving": self.added_preserving,
                "total_rules": self.total_rules}


@dataclass
class CompletionResult:
    system: RewriteSystem
    status: CompletionStatus
    phases: Tuple[PhaseStats, ...]
    certificates: Tuple[Resolution, ...]

    def to_dict(self, alphabet=None):
        alphabet = alphabet or self.system.alphabet
        return {
            "status": self.status.value,
            "phases": [p.to_dict() for p in self.phases],
            "rules": len(self.system.rules),
            "certificates": [c.to_dict(alphabet) for c in self.certificates],
        }


def _signature(pair: CriticalPair):
    return (pair.z, pair.rule1.key, pair.rule2.key, pair.pos1, pair.pos2)


def kb_complete(system: RewriteSystem,
                max_phases: int = DEFAULT_MAX_PHASES,
                max_rules: int = DEFAULT_MAX_RULES,
                include_same_rule_overlaps: bool = False,
                max_nodes: Optional[int] = 10 ** 6) -> CompletionResult:
    """Run phases until one adds nothing, or a budget is hit."""
    current = system
    seen: Set[Tuple] = set()
    phases: List[PhaseStats] = []
    certificates: List[Resolution] = []

    for index in range(1, max_phases + 1):
        fresh = [p for p in critical_pairs(current, include_same_rule_overlaps)
                 if _signature(p) not in seen]
        for p in fresh:
            seen.add(_signature(p))
        added: List[Rule] = []
        added_keys = {r.key for r in current.rules}
        n_red = n_pres = 0
        for pair in fresh:
            res = resolve_pair(pair, current, max_nodes=max_nodes)
            rule = res.rule
            if rule is None:
                continue
            mirror_key = (rule.mirror().key
                          if rule.kind is RuleKind.PRESERVING else None)
            if rule.key in added_keys or mirror_key in added_keys:
                continue
            added_keys.add(rule.key)
            if mirror_key is not None:
                added_keys.add(mirror_key)
                n_pres += 1
            else:
                n_red += 1
            added.append(rule)
            certificates.append(res)
        if added:
            current = current.with_rules(added)
        phases.append(PhaseStats(index, len(fresh), n_red, n_pres,
                                 len(current.rules)))
        if not added:
            return CompletionResult(current, CompletionStatus.COMPLETED,
                                    tuple(phases), tuple(certificates))
        if len(current.rules) > max_rules:
            return CompletionResult(current, CompletionStatus.RULE_LIMIT,
                                    tuple(phases), tuple(certificates))
    return CompletionResult(current, CompletionStatus.PHASE_LIMIT,
                            tuple(phases), tuple(certificates))
