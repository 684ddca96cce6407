"""One-step rewriting, the linear left-to-right reducer, Thue resolution,
and the Dehn-style word problem.

reduce_lr is the performance-critical entry point: it runs the
stack-and-stream algorithm (irreducible prefix as a stack, pending
letters re-scanned after each contraction), which is linear in |w| for a
fixed system.  The traced variant recomputes the same reduction naively
and is meant for short words only.
"""

from __future__ import annotations

import warnings
from typing import Iterable, List, Optional, Tuple

from .errors import AlphabetError, PreconditionError, ResourceLimitError
from .systems import Rule, RuleKind, RewriteSystem, reducing, preserving
from .words import EMPTY, Alphabet, Word


def _check_symbols(word: Word, system: RewriteSystem) -> None:
    if word and not (0 <= min(word) and max(word) < len(system.alphabet)):
        raise AlphabetError("word uses symbols outside the system alphabet")


def apply_rule(word: Word, pos: int, rule: Rule) -> Word:
    L = len(rule.lhs)
    if word[pos:pos + L] != rule.lhs:
        raise PreconditionError(f"rule does not match at position {pos}")
    return word[:pos] + rule.rhs + word[pos + L:]


def _picked_rules(system: RewriteSystem, kind: Optional[RuleKind]):
    if kind is None:
        return system.rules
    if kind is RuleKind.REDUCING:
        return system.reducing
    return system.preserving


def redexes(word: Word, system: RewriteSystem, kind: Optional[RuleKind] = None):
    """All (pos, rule) matches, by rule order then position."""
    out = []
    n = len(word)
    for rule in _picked_rules(system, kind):
        lhs = rule.lhs
        L = len(lhs)
        for i in range(n - L + 1):
            if word[i:i + L] == lhs:
                out.append((i, rule))
    return out


def is_irreducible(word: Word, system: RewriteSystem, kind: Optional[RuleKind] = RuleKind.REDUCING) -> bool:
    n = len(word)
    for rule in _picked_rules(system, kind):
        lhs = rule.lhs
        L = len(lhs)
        for i in range(n - L + 1):
            if word[i:i + L] == lhs:
                return False
    return True


def successors(word: Word, system: RewriteSystem, kind: Optional[RuleKind] = None) -> Tuple[Word, ...]:
    """One-step successors, deduplicated, in rule-then-position order."""
    seen = dict()
    for pos, rule in redexes(word, system, kind):
        v = word[:pos] + rule.rhs + word[pos + len(rule.lhs):]
        if v not in seen:
            seen[v] = None
    return tuple(seen.keys())


def reduce_lr(word: Word, system: RewriteSystem) -> Word:
    """Reduce with S_R only, leftmost reduction point, first rule wins."""
    word = tuple(word)
    _check_symbols(word, system)
    by_last = system.reducing_by_last
    if not by_last:
        return word
    u: List[int] = []
    append = u.append
    pending: List[int] = []
    pop = pending.pop
    i = 0
    n = len(word)
    get = by_last.get
    while True:
        if pending:
            x = pop()
        elif i < n:
            x = word[i]
            i += 1
        else:
            break
        cands = get(x)
        if cands is None:
            append(x)
            continue
        lu = len(u)
        for rule in cands:
            lhs = rule.lhs
            k = len(lhs) - 1
            if k > lu:
                continue
            ok = True
            for j in range(1, k + 1):
                if u[lu - j] != lhs[k - j]:
                    ok = False
                    break
            if ok:
                del u[lu - k:]
                rhs = rule.rhs
                if rhs:
                    pending.extend(reversed(rhs))
                break
        else:
            append(x)
    return tuple(u)


def reduce_lr_trace(word: Word, system: RewriteSystem):
    """Same reduction as reduce_lr, returning every intermediate step.

    Steps are (word_before, pos, rule); quadratic, use on short words.
    The reduction point is the earliest end position of any reducing
    match; ties between rules ending there go to system rule order.
    """
    w = tuple(word)
    _check_symbols(w, system)
    steps = []
    rules = system.reducing
    while True:
        fired = None
        n = len(w)
        for end in range(1, n + 1):
            for rule in rules:
                L = len(rule.lhs)
                if L <= end and w[end - L:end] == rule.lhs:
                    fired = (end - L, rule)
                    break
            if fired:
                break
        if fired is None:
            return w, steps
        pos, rule = fired
        steps.append((w, pos, rule))
        w = w[:pos] + rule.rhs + w[pos + len(rule.lhs):]


def reduce_random(word: Word, system: RewriteSystem, rng, kind: Optional[RuleKind] = RuleKind.REDUCING) -> Word:
    """Maximal reduction applying a uniformly random redex each step."""
    w = tuple(word)
    _check_symbols(w, system)
    while True:
        hits = redexes(w, system, kind)
        if not hits:
            return w
        pos, rule = hits[rng.randrange(len(hits))]
        w = w[:pos] + rule.rhs + w[pos + len(rule.lhs):]


def thue_resolution(alphabet: Alphabet, pairs: Iterable[Tuple[Word, Word]],
                    inverse_pairing=None, symmetrize: bool = True) -> RewriteSystem:
    """Orient arbitrary (lhs, rhs) pairs into a Thue system.

    The symmetric closure of the pairs is taken and every
    length-increasing direction is dropped: longer side -> shorter side
    becomes a reducing rule, equal lengths become a preserving rule.
    Trivial pairs (lhs = rhs) vanish.
    """
    rules = []
    for lhs, rhs in pairs:
        lhs, rhs = tuple(lhs), tuple(rhs)
        if len(lhs) > len(rhs):
            rules.append(reducing(lhs, rhs))
        elif len(lhs) < len(rhs):
            rules.append(reducing(rhs, lhs))
        elif lhs != rhs:
            rules.append(preserving(lhs, rhs))
    return RewriteSystem(alphabet, rules, inverse_pairing=inverse_pairing,
                         symmetrize=symmetrize)


def dehn_wp(word: Word, system: RewriteSystem, max_nodes: int = 10 ** 6) -> bool:
    """True iff some S_R reduction sequence reaches the empty word.

    Exhaustive search over reducing descendants, so it is a sound word
    problem test exactly when the system is confluent on the class of
    the empty word (Dehn systems).  Warns when preserving rules exist,
    since they are ignored here.
    """
    if system.preserving:
        warnings.warn("dehn_wp ignores the preserving rules of this system",
                      stacklevel=2)
    w = tuple(word)
    if w == EMPTY:
        return True
    seen = {w}
    frontier = [w]
    rmap = system.reducing_map
    lengths = sorted({len(l) for l in rmap})
    while frontier:
        nxt = []
        for v in frontier:
            n = len(v)
            for L in lengths:
                if L > n:
                    break
                for i in range(n - L + 1):
                    rhss = rmap.get(v[i:i + L])
                    if not rhss:
                        continue
                    for rhs in rhss:
                        child = v[:i] + rhs + v[i + L:]
                        if child == EMPTY:
                            return True
                        if child not in seen:
                            if len(seen) >= max_nodes:
                                raise ResourceLimitError(
                                    "dehn_wp exceeded its node budget", cap=max_nodes)
                            seen.add(child)
                            nxt.append(child)
        frontier = nxt
    return False
