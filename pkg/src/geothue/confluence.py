"""Critical pairs, the geodesically-perfect criterion, and word problems
for preperfect systems.

A critical pair comes from two rule applications covering a word z with
overlapping spans, the first rule always length-reducing.  The pair
passes the perfectness criterion when some reducing descendants of its
two sides have equal length and are connected by preserving rules alone;
a system is certified geodesically perfect when every pair passes.

By default a rule overlapping a shifted copy of itself is not treated as
critical; include_same_rule_overlaps=True switches to the classical
enumeration where it is.  Distinct rules sharing a left-hand side always
produce the pair of their right-hand sides.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import ResourceLimitError
from .oracle import class_closure
from .systems import Rule, RuleKind, RewriteSystem
from .words import EMPTY, Word, lenlex_key

DEFAULT_MAX_NODES = 10 ** 6


class OverlapKind(enum.Enum):
    LEFT_OVERLAP = "left-overlap"
    RIGHT_OVERLAP = "right-overlap"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class CriticalPair:
    z: Word
    x: Word
    y: Word
    rule1: Rule
    rule2: Rule
    pos1: int
    pos2: int
    kind: OverlapKind

    def to_dict(self, alphabet):
        return {
            "z": alphabet.format(self.z),
            "x": alphabet.format(self.x),
            "y": alphabet.format(self.y),
            "rule1": [alphabet.format(self.rule1.lhs), alphabet.format(self.rule1.rhs)],
            "rule2": [alphabet.format(self.rule2.lhs), alphabet.format(self.rule2.rhs)],
            "pos1": self.pos1,
            "pos2": self.pos2,
            "kind": self.kind.value,
        }


def iter_critical_pairs(system: RewriteSystem,
                        include_same_rule_overlaps: bool = False):
    """Deduplicated critical pairs in a deterministic enumeration order.

    Rules are indexed by their left-hand side prefixes and suffixes so
    only genuinely overlapping rule pairs are visited.
    """
    rules = system.rules
    by_prefix: Dict[Word, List[Rule]] = {}
    by_suffix: Dict[Word, List[Rule]] = {}
    by_lhs: Dict[Word, List[Rule]] = {}
    for rule in rules:
        lhs = rule.lhs
        by_lhs.setdefault(lhs, []).append(rule)
        for k in range(1, len(lhs) + 1):
            by_prefix.setdefault(lhs[:k], []).append(rule)
            by_suffix.setdefault(lhs[len(lhs) - k:], []).append(rule)
    lhs_lengths = sorted({len(l) for l in by_lhs})
    rules_of_len: Dict[int, List[Rule]] = {}
    for rule in rules:
        rules_of_len.setdefault(len(rule.lhs), []).append(rule)
    seen = set()

    def fresh(z, x, y, r1, r2):
        key = (x, y, z, r1.key, r2.key)
        if key in seen:
            return False
        seen.add(key)
        return True

    for r1 in system.reducing:
        l1, rh1 = r1.lhs, r1.rhs
        L1 = len(l1)
        # rule1 span starts at 0, rule2 span ends at |z|
        for k in range(1, L1 + 1):
            for r2 in by_prefix.get(l1[L1 - k:], ()):
                l2, rh2 = r2.lhs, r2.rhs
                L2 = len(l2)
                pos1, pos2 = 0, L1 - k
                same = r1.key == r2.key
                if same and (pos1 == pos2 or not include_same_rule_overlaps):
                    continue
                z = l1 + l2[k:]
                x = rh1 + l2[k:]
                y = z[:pos2] + rh2 + z[pos2 + L2:]
                kind = OverlapKind.INCLUSION if k == L1 or k == L2 \
                    else OverlapKind.LEFT_OVERLAP
                if fresh(z, x, y, r1, r2):
                    yield CriticalPair(z, x, y, r1, r2, pos1, pos2, kind)
        # rule2 span starts at 0, rule1 span ends at |z|
        for k in range(1, L1 + 1):
            for r2 in by_suffix.get(l1[:k], ()):
                l2, rh2 = r2.lhs, r2.rhs
                L2 = len(l2)
                pos1, pos2 = L2 - k, 0
                same = r1.key == r2.key
                if same and (pos1 == pos2 or not include_same_rule_overlaps):
                    continue
                z = l2 + l1[k:]
                y = rh2 + l1[k:]
                x = z[:pos1] + rh1 + z[pos1 + L1:]
                kind = OverlapKind.INCLUSION if k == L1 or k == L2 \
                    else OverlapKind.RIGHT_OVERLAP
                if fresh(z, x, y, r1, r2):
                    yield CriticalPair(z, x, y, r1, r2, pos1, pos2, kind)
        # rule2 strictly inside rule1
        for p in range(1, L1 - 1):
            for L2 in lhs_lengths:
                if p + L2 >= L1:
                    break
                for r2 in by_lhs.get(l1[p:p + L2], ()):
                    y = l1[:p] + r2.rhs + l1[p + L2:]
                    if fresh(l1, rh1, y, r1, r2):
                        yield CriticalPair(l1, rh1, y, r1, r2, 0, p,
                                           OverlapKind.INCLUSION)
        # rule1 strictly inside rule2
        for L2 in lhs_lengths:
            if L2 < L1 + 2:
                continue
            for r2 in rules_of_len[L2]:
                l2, rh2 = r2.lhs, r2.rhs
                for p in range(1, L2 - L1):
                    if l2[p:p + L1] == l1:
                        x = l2[:p] + rh1 + l2[p + L1:]
                        if fresh(l2, x, rh2, r1, r2):
                            yield CriticalPair(l2, x, rh2, r1, r2, p, 0,
                                               OverlapKind.INCLUSION)


def critical_pairs(system: RewriteSystem,
                   include_same_rule_overlaps: bool = False) -> Tuple[CriticalPair, ...]:
    """All critical pairs, deduplicated, sorted by (|z|, z, rule order)."""
    rule_index = {r.key: i for i, r in enumerate(system.rules)}
    out = list(iter_critical_pairs(system, include_same_rule_overlaps))
    out.sort(key=lambda cp: (len(cp.z), cp.z, rule_index[cp.rule1.key],
                             rule_index[cp.rule2.key], cp.pos1, cp.pos2))
    return tuple(out)


def _sp_step_map(system: RewriteSystem) -> Dict[Word, Tuple[Word, ...]]:
    """Undirected preserving steps, also covering symmetrize=False systems."""
    table: Dict[Word, List[Word]] = {}
    for rule in system.preserving:
        table.setdefault(rule.lhs, []).append(rule.rhs)
        if not system.sp_symmetric:
            table.setdefault(rule.rhs, []).append(rule.lhs)
    return {k: tuple(dict.fromkeys(v)) for k, v in table.items()}


def _sp_neighbors(word: Word, smap, lengths):
    n = len(word)
    for L in lengths:
        if L > n:
            break
        for i in range(n - L + 1):
            rhss = smap.get(word[i:i + L])
            if rhss:
                for rhs in rhss:
                    yield word[:i] + rhs + word[i + L:]


def sp_equivalent(u: Word, v: Word, system: RewriteSystem,
                  max_nodes: Optional[int] = None) -> bool:
    """Connectivity under preserving rules only; lengths must agree."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return False
    if u == v:
        return True
    smap = _sp_step_map(system)
    if not smap:
        return False
    lengths = sorted({len(k) for k in smap})
    seen = {u}
    frontier = [u]
    while frontier:
        nxt = []
        for w in frontier:
            for child in _sp_neighbors(w, smap, lengths):
                if child == v:
                    return True
                if child not in seen:
                    if max_nodes is not None and len(seen) >= max_nodes:
                        raise ResourceLimitError(
                            "sp_equivalent exceeded its node budget", cap=max_nodes)
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt
    return False


def descendant_closure(word: Word, system: RewriteSystem,
                       kind: Optional[RuleKind] = None,
                       max_nodes: int = DEFAULT_MAX_NODES) -> FrozenSet[Word]:
    """Everything reachable by forward steps (the word included)."""
    if kind is RuleKind.REDUCING:
        pool = system.reducing
    elif kind is RuleKind.PRESERVING:
        pool = system.preserving
    else:
        pool = system.rules
    table: Dict[Word, List[Word]] = {}
    for rule in pool:
        table.setdefault(rule.lhs, []).append(rule.rhs)
    smap = {k: tuple(dict.fromkeys(v)) for k, v in table.items()}
    lengths = sorted({len(k) for k in smap})
    w = tuple(word)
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for child in _sp_neighbors(v, smap, lengths):
                if child not in seen:
                    if len(seen) >= max_nodes:
                        raise ResourceLimitError(
                            "descendant closure exceeded its node budget", cap=max_nodes)
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt
    return frozenset(seen)


@dataclass
class FailedPair:
    pair: CriticalPair
    descendants_x: FrozenSet[Word]
    descendants_y: FrozenSet[Word]

    def to_dict(self, alphabet):
        return {
            "pair": self.pair.to_dict(alphabet),
            "descendants_x": sorted(alphabet.format(w) for w in self.descendants_x),
            "descendants_y": sorted(alphabet.format(w) for w in self.descendants_y),
        }


@dataclass
class GpVerdict:
    holds: bool
    pairs_checked: int
    witness: Optional[FailedPair]

    def to_dict(self, alphabet):
        return {
            "holds": self.holds,
            "pairs_checked": self.pairs_checked,
            "witness": self.witness.to_dict(alphabet) if self.witness else None,
        }


class _SpClasses:
    """Connected components under preserving steps, ids cached globally."""

    def __init__(self, system: RewriteSystem, max_nodes: int):
        self.smap = _sp_step_map(system)
        self.lengths = sorted({len(k) for k in self.smap})
        self.max_nodes = max_nodes
        self.ids: Dict[Word, int] = {}
        self.next_id = 0

    def class_id(self, word: Word) -> int:
        got = self.ids.get(word)
        if got is not None:
            return got
        cid = self.next_id
        self.next_id += 1
        self.ids[word] = cid
        frontier = [word]
        while frontier:
            nxt = []
            for w in frontier:
                for child in _sp_neighbors(w, self.smap, self.lengths):
                    if child not in self.ids:
                        if len(self.ids) >= self.max_nodes:
                            raise ResourceLimitError(
                                "preserving-class closure exceeded its node budget",
                                cap=self.max_nodes)
                        self.ids[child] = cid
                        nxt.append(child)
            frontier = nxt
        return cid


def check_geodesically_perfect(system: RewriteSystem,
                               include_same_rule_overlaps: bool = False,
                               max_nodes: int = DEFAULT_MAX_NODES) -> GpVerdict:
    """Decide the critical-pair criterion over full reducing-descendant sets."""
    pairs = iter_critical_pairs(system, include_same_rule_overlaps)
    rdesc_cache: Dict[Word, FrozenSet[Word]] = {}
    rmap: Dict[Word, List[Word]] = {}
    for rule in system.reducing:
        rmap.setdefault(rule.lhs, []).append(rule.rhs)
    rmap = {k: tuple(v) for k, v in rmap.items()}
    rlengths = sorted({len(k) for k in rmap})
    classes = _SpClasses(system, max_nodes)

    def rdesc(w: Word) -> FrozenSet[Word]:
        got = rdesc_cache.get(w)
        if got is not None:
            return got
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for v in frontier:
                for child in _sp_neighbors(v, rmap, rlengths):
                    if child not in seen:
                        if len(seen) >= max_nodes:
                            raise ResourceLimitError(
                                "descendant closure exceeded its node budget",
                                cap=max_nodes)
                        seen.add(child)
                        nxt.append(child)
            frontier = nxt
        result = frozenset(seen)
        rdesc_cache[w] = result
        return result

    verdict_cache: Dict[Tuple[Word, Word], bool] = {}
    checked = 0
    for pair in pairs:
        checked += 1
        key = (pair.x, pair.y)
        ok = verdict_cache.get(key)
        if ok is None:
            dx = rdesc(pair.x)
            dy = rdesc(pair.y)
            ok = False
            by_len: Dict[int, set] = {}
            for w in dx:
                by_len.setdefault(len(w), set()).add(w)
            for w in dy:
                bucket = by_len.get(len(w))
                if bucket is None:
                    continue
                if w in bucket:
                    ok = True
                    break
                cid = classes.class_id(w)
                if any(classes.class_id(c) == cid for c in bucket):
                    ok = True
                    break
            verdict_cache[key] = ok
            verdict_cache[(pair.y, pair.x)] = ok
        if not ok:
            return GpVerdict(False, checked, FailedPair(pair, rdesc(pair.x), rdesc(pair.y)))
    return GpVerdict(True, checked, None)


def preperfect_wp(u: Word, v: Word, system: RewriteSystem,
                  max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    """Joinability of full descendant closures; sound word problem test
    for preperfect (and geodesically perfect) systems."""
    du = descendant_closure(u, system, None, max_nodes)
    dv = descendant_closure(v, system, None, max_nodes)
    return not du.isdisjoint(dv)


def geodesics_of(word: Word, system: RewriteSystem,
                 max_nodes: int = DEFAULT_MAX_NODES) -> FrozenSet[Word]:
    """Minimal-length words in the descendant closure."""
    closure = descendant_closure(word, system, None, max_nodes)
    best = min(len(w) for w in closure)
    return frozenset(w for w in closure if len(w) == best)


class GeodesicCheckStatus(enum.Enum):
    CONSISTENT = "consistent-up-to"
    COUNTEREXAMPLE = "counterexample"
    UNDECIDED = "undecided"


@dataclass
class GeodesicCheck:
    status: GeodesicCheckStatus
    max_len: int
    counterexample: Optional[Tuple[Word, Word]] = None  # (irreducible, shorter equal word)

    def to_dict(self, alphabet):
        ce = None
        if self.counterexample:
            ce = [alphabet.format(self.counterexample[0]),
                  alphabet.format(self.counterexample[1])]
        return {"status": self.status.value, "max_len": self.max_len,
                "counterexample": ce}


def geodesic_bounded_check(system: RewriteSystem, max_len: int,
                           slack: Optional[int] = None,
                           max_nodes: int = DEFAULT_MAX_NODES) -> GeodesicCheck:
    """Semi-test of the geodesic property.

    Every reducing-irreducible word up to max_len is compared against the
    bounded class closure: a strictly shorter member refutes geodesy.
    Capped closures downgrade a clean sweep to undecided.
    """
    rmap = {r.lhs for r in system.reducing}
    rlengths = sorted({len(l) for l in rmap})

    def irreducible(w: Word) -> bool:
        n = len(w)
        for L in rlengths:
            if L > n:
                break
            for i in range(n - L + 1):
                if w[i:i + L] in rmap:
                    return False
        return True

    all_complete = True
    for w in system.alphabet.words_upto(max_len):
        if not irreducible(w):
            continue
        s = slack if slack is not None else 2 * len(w) + 4
        closure = class_closure(w, system, max_length=len(w) + s, max_nodes=max_nodes)
        shorter = [m for m in closure.members if len(m) < len(w)]
        if shorter:
            shortest = min(shorter, key=lenlex_key)
            return GeodesicCheck(GeodesicCheckStatus.COUNTEREXAMPLE, max_len,
                                 (w, shortest))
        if not closure.complete:
            all_complete = False
    if all_complete:
        return GeodesicCheck(GeodesicCheckStatus.CONSISTENT, max_len)
    return GeodesicCheck(GeodesicCheckStatus.UNDECIDED, max_len)
