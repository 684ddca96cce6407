"""Rules, rewrite systems, and their file format.

A system splits into reducing rules (|lhs| > |rhs|) and preserving rules
(|lhs| = |rhs|).  Preserving rules are symmetric: the constructor inserts
the mirror of any one-directional entry right after it, unless the
system is explicitly built with symmetrize=False (used only for the
direction-only amalgam variant; such systems record sp_symmetric=False).

An optional inverse pairing turns the system into a group system; the
constructor then insists that x x^-1 -> 1 and x^-1 x -> 1 are present
for every letter.

File format (one directive per line, '#' starts a comment):

    alphabet a b c
    inverse a A
    rule a d d -> a b      # reducing, or directed preserving (auto-symmetrized)
    rule a b <-> b a       # preserving
    rule a A -> .          # "." denotes the empty word
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .errors import FormatError, StructureError
from .words import EMPTY, Alphabet, Word, lenlex_key


class RuleKind(enum.Enum):
    REDUCING = "reducing"
    PRESERVING = "preserving"


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word
    kind: RuleKind

    def __post_init__(self):
        if not self.lhs:
            raise StructureError("rule with empty lhs")
        if self.kind is RuleKind.REDUCING:
            if len(self.lhs) <= len(self.rhs):
                raise StructureError(
                    f"reducing rule needs |lhs| > |rhs|: {self.lhs} -> {self.rhs}")
        else:
            if len(self.lhs) != len(self.rhs):
                raise StructureError(
                    f"preserving rule needs |lhs| = |rhs|: {self.lhs} <-> {self.rhs}")
            if self.lhs == self.rhs:
                raise StructureError("preserving rule with lhs = rhs")

    @property
    def key(self):
        return (self.lhs, self.rhs, self.kind.value)

    def mirror(self) -> "Rule":
        if self.kind is not RuleKind.PRESERVING:
            raise StructureError("only preserving rules have mirrors")
        return Rule(self.rhs, self.lhs, RuleKind.PRESERVING)


def reducing(lhs: Sequence[int], rhs: Sequence[int]) -> Rule:
    return Rule(tuple(lhs), tuple(rhs), RuleKind.REDUCING)


def preserving(lhs: Sequence[int], rhs: Sequence[int]) -> Rule:
    return Rule(tuple(lhs), tuple(rhs), RuleKind.PRESERVING)


class RewriteSystem:
    def __init__(
        self,
        alphabet: Alphabet,
        rules: Iterable[Rule],
        inverse_pairing: Optional[Dict[int, int]] = None,
        symmetrize: bool = True,
    ):
        self.alphabet = alphabet
        n = len(alphabet)
        red = []
        pres = []
        seen = set()

        def add(rule: Rule):
            if rule.key in seen:
                return
            for s in rule.lhs + rule.rhs:
                if not 0 <= s < n:
                    raise StructureError(f"rule symbol {s} outside alphabet")
            seen.add(rule.key)
            if rule.kind is RuleKind.REDUCING:
                red.append(rule)
            else:
                pres.append(rule)

        for rule in rules:
            add(rule)
            if rule.kind is RuleKind.PRESERVING and symmetrize:
                add(rule.mirror())

        self.reducing = tuple(red)
        self.preserving = tuple(pres)
        self.sp_symmetric = symmetrize
        if symmetrize:
            keys = {(r.lhs, r.rhs) for r in self.preserving}
            assert all((r.rhs, r.lhs) in keys for r in self.preserving)

        if inverse_pairing is not None:
            pairing = dict(inverse_pairing)
            for x, y in pairing.items():
                if pairing.get(y) != x:
                    raise StructureError("inverse pairing is not an involution")
                if not (0 <= x < n and 0 <= y < n):
                    raise StructureError("inverse pairing outside alphabet")
            have = {r.lhs for r in self.reducing if r.rhs == EMPTY}
            for x, y in pairing.items():
                if (x, y) not in have:
                    raise StructureError(
                        f"group system missing rule {alphabet.name(x)} {alphabet.name(y)} -> .")
        self.inverse_pairing = dict(inverse_pairing) if inverse_pairing is not None else None

    @property
    def rules(self) -> Tuple[Rule, ...]:
        return self.reducing + self.preserving

    @property
    def is_group_system(self) -> bool:
        return self.inverse_pairing is not None

    def inverse_word(self, word: Word) -> Word:
        if self.inverse_pairing is None:
            raise StructureError("system has no inverse pairing")
        inv = self.inverse_pairing
        return tuple(inv[s] for s in reversed(word))

    @cached_property
    def reducing_by_last(self):
        """Reducing rules grouped by the last symbol of the lhs, in rule order."""
        table: Dict[int, list] = {}
        for rule in self.reducing:
            table.setdefault(rule.lhs[-1], []).append(rule)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def preserving_map(self):
        """lhs -> tuple of rhs over the preserving rules as stored."""
        table: Dict[Word, list] = {}
        for rule in self.preserving:
            table.setdefault(rule.lhs, []).append(rule.rhs)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def reducing_map(self):
        table: Dict[Word, list] = {}
        for rule in self.reducing:
            table.setdefault(rule.lhs, []).append(rule.rhs)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def max_lhs(self) -> int:
        return max((len(r.lhs) for r in self.rules), default=0)

    def with_rules(self, extra: Iterable[Rule]) -> "RewriteSystem":
        return RewriteSystem(
            self.alphabet,
            self.rules + tuple(extra),
            inverse_pairing=self.inverse_pairing,
            symmetrize=self.sp_symmetric,
        )

    def has_rule(self, rule: Rule) -> bool:
        return rule.key in {r.key for r in self.rules}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RewriteSystem)
            and self.alphabet == other.alphabet
            and self.reducing == other.reducing
            and self.preserving == other.preserving
            and self.inverse_pairing == other.inverse_pairing
            and self.sp_symmetric == other.sp_symmetric
        )

    def __repr__(self):
        return (f"RewriteSystem({len(self.alphabet)} letters, "
                f"{len(self.reducing)} reducing, {len(self.preserving)} preserving)")


class RuleSource:
    """Bounded enumerator of rules; the seam for infinite-alphabet systems.

    Implementations yield, for a bound n, every rule with |lhs| <= n in
    the standard order: length-lexicographic on lhs, ties broken
    length-lexicographically on rhs.
    """

    def rules_upto(self, n: int) -> Tuple[Rule, ...]:
        raise NotImplementedError


class FiniteRuleSource(RuleSource):
    def __init__(self, system: RewriteSystem):
        self.system = system

    def rules_upto(self, n: int) -> Tuple[Rule, ...]:
        picked = [r for r in self.system.rules if len(r.lhs) <= n]
        picked.sort(key=lambda r: (lenlex_key(r.lhs), lenlex_key(r.rhs)))
        return tuple(picked)

    def system_upto(self, n: int) -> RewriteSystem:
        return RewriteSystem(
            self.system.alphabet,
            self.rules_upto(n),
            inverse_pairing=None,
            symmetrize=self.system.sp_symmetric,
        )


# ---------------------------------------------------------------------------
# file format


def _parse_side(tokens, alphabet: Alphabet, line_no: int) -> Word:
    if tokens == ["."]:
        return EMPTY
    out = []
    for tok in tokens:
        if tok == ".":
            raise FormatError('"." must stand alone', line_no)
        try:
            if tok in alphabet:
                out.append(alphabet.id(tok))
            else:
                if not all(c in alphabet for c in tok):
                    raise FormatError(f"unknown letter {tok!r}", line_no)
                out.extend(alphabet.id(c) for c in tok)
        except FormatError:
            raise
    return tuple(out)


def parse_system(text: str) -> RewriteSystem:
    names: list = []
    inverse_lines = []
    rule_lines = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "alphabet":
            names.extend(tokens[1:])
        elif head == "inverse":
            if len(tokens) != 3:
                raise FormatError("inverse needs exactly two letters", line_no)
            inverse_lines.append((tokens[1], tokens[2], line_no))
        elif head == "rule":
            rule_lines.append((tokens[1:], line_no))
        else:
            raise FormatError(f"unknown directive {head!r}", line_no)

    alphabet = Alphabet(names)
    pairing: Dict[int, int] = {}
    for x, y, line_no in inverse_lines:
        if x not in alphabet or y not in alphabet:
            raise FormatError(f"inverse uses unknown letter", line_no)
        a, b = alphabet.id(x), alphabet.id(y)
        if pairing.get(a, b) != b or pairing.get(b, a) != a:
            raise FormatError("conflicting inverse lines", line_no)
        pairing[a] = b
        pairing[b] = a

    rules = []
    for tokens, line_no in rule_lines:
        arrow = None
        for cand in ("<->", "->"):
            if cand in tokens:
                arrow = cand
                break
        if arrow is None:
            raise FormatError("rule line without -> or <->", line_no)
        i = tokens.index(arrow)
        lhs = _parse_side(tokens[:i], alphabet, line_no)
        rhs = _parse_side(tokens[i + 1:], alphabet, line_no)
        if not lhs:
            raise FormatError("rule with empty lhs", line_no)
        if arrow == "<->":
            if len(lhs) != len(rhs):
                raise FormatError("<-> rule must preserve length", line_no)
            rules.append(preserving(lhs, rhs))
        elif len(lhs) > len(rhs):
            rules.append(reducing(lhs, rhs))
        elif len(lhs) == len(rhs):
            rules.append(preserving(lhs, rhs))
        else:
            raise FormatError("length-increasing rule not allowed here", line_no)

    pairing_arg = pairing if pairing else None
    try:
        return RewriteSystem(alphabet, rules, inverse_pairing=pairing_arg)
    except StructureError as exc:
        raise FormatError(str(exc)) from exc


def format_system(system: RewriteSystem) -> str:
    alphabet = system.alphabet
    lines = ["alphabet " + " ".join(alphabet.names)]
    if system.inverse_pairing:
        for x in sorted(system.inverse_pairing):
            y = system.inverse_pairing[x]
            if x <= y:
                lines.append(f"inverse {alphabet.name(x)} {alphabet.name(y)}")
    for rule in system.reducing:
        lines.append(f"rule {alphabet.format(rule.lhs)} -> {alphabet.format(rule.rhs)}")
    emitted = set()
    for rule in system.preserving:
        if (rule.rhs, rule.lhs) in emitted and system.sp_symmetric:
            continue
        emitted.add((rule.lhs, rule.rhs))
        arrow = "<->" if system.sp_symmetric else "->"
        lines.append(f"rule {alphabet.format(rule.lhs)} {arrow} {alphabet.format(rule.rhs)}")
    return "\n".join(lines) + "\n"


def load_system(path) -> RewriteSystem:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_system(fh.read())


def save_system(system: RewriteSystem, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_system(system))


def parse_rule_pairs(text: str):
    """Relaxed loader for raw (lhs, rhs) pairs, e.g. for weight search.

    Accepts the system file syntax but drops every Thue constraint:
    length-increasing '->' lines are allowed and '<->' lines contribute
    both directions.  Returns (alphabet, tuple of (lhs, rhs) pairs).
    """
    names: list = []
    pair_lines = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "alphabet":
            names.extend(tokens[1:])
        elif tokens[0] == "inverse":
            continue
        elif tokens[0] == "rule":
            pair_lines.append((tokens[1:], line_no))
        else:
            raise FormatError(f"unknown directive {tokens[0]!r}", line_no)
    alphabet = Alphabet(names)
    pairs = []
    for tokens, line_no in pair_lines:
        arrow = "<->" if "<->" in tokens else "->"
        if arrow not in tokens:
            raise FormatError("rule line without -> or <->", line_no)
        i = tokens.index(arrow)
        lhs = _parse_side(tokens[:i], alphabet, line_no)
        rhs = _parse_side(tokens[i + 1:], alphabet, line_no)
        pairs.append((lhs, rhs))
        if arrow == "<->":
            pairs.append((rhs, lhs))
    return alphabet, tuple(pairs)
