"""Pregroups and the rewriting systems of their universal groups.

A pregroup here is a finite set with identity, involution, and a partial
multiplication satisfying the five Stallings conditions.  Two Thue
systems present the universal group: one over all elements with the
identity as an ordinary letter, one over the non-identity elements with
an inverse pairing.  Reduced sequences represent universal-group
elements; two reduced sequences represent the same element exactly when
a chain of adjacent-pair interleavings connects them, which gives the
word problem test at the bottom of this module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import FormatError, PreconditionError, ResourceLimitError, StructureError
from .systems import RewriteSystem, preserving, reducing
from .words import Alphabet

Seq = Tuple[str, ...]


class Pregroup:
    """Finite partial multiplication table with identity and involution.

    Products implied by the identity and inverse laws are materialized at
    construction; explicit entries contradicting them are rejected.
    """

    __slots__ = ("elements", "eps", "inv", "mult", "index", "_right", "_left")

    def __init__(self, elements: Sequence[str], eps: str,
                 inv: Dict[str, str], mult: Dict[Tuple[str, str], str]):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise StructureError("duplicate element names")
        known = set(elements)
        if eps not in known:
            raise StructureError(f"identity {eps!r} is not an element")
        inv = dict(inv)
        inv.setdefault(eps, eps)
        for a in elements:
            b = inv.get(a)
            if b is None:
                raise StructureError(f"no inverse declared for {a!r}")
            if b not in known:
                raise StructureError(f"inverse of {a!r} is unknown name {b!r}")
            if inv.get(b) != a:
                raise StructureError(f"involution broken at {a!r}/{b!r}")
        if inv[eps] != eps:
            raise StructureError("identity must be self-inverse")

        table: Dict[Tuple[str, str], str] = {}

        def put(a, b, c, why):
            old = table.get((a, b))
            if old is not None and old != c:
                raise StructureError(
                    f"conflicting products {a!r}*{b!r}: {old!r} vs {c!r} ({why})")
            table[(a, b)] = c

        for a in elements:
            put(eps, a, a, "identity law")
            put(a, eps, a, "identity law")
            put(a, inv[a], eps, "inverse law")
            put(inv[a], a, eps, "inverse law")
        for (a, b), c in mult.items():
            if a not in known or b not in known or c not in known:
                raise StructureError(f"product entry {a!r}*{b!r}={c!r} uses unknown name")
            put(a, b, c, "explicit entry")

        self.elements = elements
        self.eps = eps
        self.inv = inv
        self.mult = table
        self.index = {a: i for i, a in enumerate(elements)}
        right: Dict[str, List[str]] = {a: [] for a in elements}
        left: Dict[str, List[str]] = {a: [] for a in elements}
        for (a, b) in table:
            right[a].append(b)
            left[b].append(a)
        order = self.index
        self._right = {a: tuple(sorted(bs, key=order.__getitem__))
                       for a, bs in right.items()}
        self._left = {b: tuple(sorted(as_, key=order.__getitem__))
                      for b, as_ in left.items()}

    def defined(self, a: str, b: str) -> bool:
        return (a, b) in self.mult

    def prod(self, a: str, b: str) -> str:
        c = self.mult.get((a, b))
        if c is None:
            raise PreconditionError(f"product {a!r}*{b!r} is not defined")
        return c

    def inverse(self, a: str) -> str:
        return self.inv[a]

    def right_factors(self, a: str) -> Tuple[str, ...]:
        """b such that a*b is defined, in element order."""
        return self._right[a]

    def left_factors(self, b: str) -> Tuple[str, ...]:
        return self._left[b]

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return (f"Pregroup({len(self.elements)} elements, "
                f"{len(self.mult)} defined products)")


@dataclass
class AxiomCheck:
    ok: bool
    counterexample: Optional[Tuple[str, ...]] = None

    def to_dict(self):
        return {"ok": self.ok,
                "counterexample": list(self.counterexample) if self.counterexample else None}


@dataclass
class AxiomReport:
    p1: AxiomCheck
    p2: AxiomCheck
    p3: AxiomCheck
    p4: AxiomCheck
    p5: AxiomCheck

    @property
    def ok(self) -> bool:
        return all(c.ok for c in (self.p1, self.p2, self.p3, self.p4, self.p5))

    def to_dict(self):
        return {"ok": self.ok,
                "p1": self.p1.to_dict(), "p2": self.p2.to_dict(),
                "p3": self.p3.to_dict(), "p4": self.p4.to_dict(),
                "p5": self.p5.to_dict()}


def check_axioms(P: Pregroup) -> AxiomReport:
    """Verify the five conditions, reporting the first counterexample each."""
    eps, inv, mult = P.eps, P.inv, P.mult

    p1 = AxiomCheck(True)
    for a in P.elements:
        if mult.get((eps, a)) != a or mult.get((a, eps)) != a:
            p1 = AxiomCheck(False, (a,))
            break

    p2 = AxiomCheck(True)
    for a in P.elements:
        if mult.get((a, inv[a])) != eps or mult.get((inv[a], a)) != eps:
            p2 = AxiomCheck(False, (a,))
            break

    p3 = AxiomCheck(True)
    for (a, b), c in mult.items():
        if mult.get((inv[b], inv[a])) != inv[c]:
            p3 = AxiomCheck(False, (a, b))
            break

    # associativity where both sides are grounded in defined pairs
    p4 = AxiomCheck(True)
    for (a, b), ab in mult.items():
        if not p4.ok:
            break
        for c in P.right_factors(b):
            bc = mult[(b, c)]
            lhs = mult.get((ab, c))
            rhs = mult.get((a, bc))
            if (lhs is None) != (rhs is None) or (lhs is not None and lhs != rhs):
                p4 = AxiomCheck(False, (a, b, c))
                break

    # one of the two outer triples must associate
    p5 = AxiomCheck(True)
    for (a, b), ab in mult.items():
        if not p5.ok:
            break
        for c in P.right_factors(b):
            if not p5.ok:
                break
            bc = mult[(b, c)]
            for d in P.right_factors(c):
                cd = mult[(c, d)]
                abc = (ab, c) in mult or (a, bc) in mult
                bcd = (bc, d) in mult or (b, cd) in mult
                if not (abc or bcd):
                    p5 = AxiomCheck(False, (a, b, c, d))
                    break

    return AxiomReport(p1, p2, p3, p4, p5)


def universal_system(P: Pregroup) -> RewriteSystem:
    """Thue system over all elements, the identity kept as a letter.

    Reducing rules erase the identity letter and contract every defined
    product.  Preserving rules interleave adjacent letters through any
    mediating element.
    """
    alphabet = Alphabet(P.elements)
    w = alphabet.word
    rules = [reducing(w(P.eps), ())]
    for (a, b), c in sorted(P.mult.items(), key=lambda kv: (P.index[kv[0][0]],
                                                            P.index[kv[0][1]])):
        rules.append(reducing(w(f"{a} {b}"), w(c)))
    for a in P.elements:
        for b in P.elements:
            for c in P.right_factors(a):
                if not P.defined(P.inv[c], b):
                    continue
                lhs = w(f"{a} {b}")
                rhs = w(f"{P.prod(a, c)} {P.prod(P.inv[c], b)}")
                if lhs != rhs:
                    rules.append(preserving(lhs, rhs))
    return RewriteSystem(alphabet, rules)


def universal_system_prime(P: Pregroup) -> RewriteSystem:
    """Thue system over the non-identity elements, with inverse pairing.

    All rule sides avoid the identity letter, so the system is a group
    presentation system: cancellations, contractions of defined products
    with non-trivial result, and identity-free interleavings.
    """
    gamma = tuple(a for a in P.elements if a != P.eps)
    alphabet = Alphabet(gamma)
    w = alphabet.word
    pairing = {alphabet.id(a): alphabet.id(P.inv[a]) for a in gamma}
    rules = []
    for a in gamma:
        rules.append(reducing(w(f"{a} {P.inv[a]}"), ()))
    for (a, b), c in sorted(P.mult.items(), key=lambda kv: (P.index[kv[0][0]],
                                                            P.index[kv[0][1]])):
        if a == P.eps or b == P.eps or c == P.eps:
            continue
        rules.append(reducing(w(f"{a} {b}"), w(c)))
    for a in gamma:
        for b in gamma:
            for c in P.right_factors(a):
                if c == P.eps or c == P.inv[a] or c == b:
                    continue
                if not P.defined(P.inv[c], b):
                    continue
                ac, cb = P.prod(a, c), P.prod(P.inv[c], b)
                if ac == P.eps or cb == P.eps:
                    continue
                lhs = w(f"{a} {b}")
                rhs = w(f"{ac} {cb}")
                if lhs != rhs:
                    rules.append(preserving(lhs, rhs))
    return RewriteSystem(alphabet, rules, inverse_pairing=pairing)


def p_reduce(seq: Iterable[str], P: Pregroup) -> Seq:
    """Contract adjacent defined products left to right, drop identities."""
    out: List[str] = []
    mult = P.mult
    for a in seq:
        if a not in P.index:
            raise PreconditionError(f"unknown element {a!r}")
        out.append(a)
        while len(out) >= 2:
            c = mult.get((out[-2], out[-1]))
            if c is None:
                break
            out[-2:] = [c]
    return tuple(a for a in out if a != P.eps)


def is_reduced(seq: Sequence[str], P: Pregroup) -> bool:
    if any(a == P.eps for a in seq):
        return False
    return all(not P.defined(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def reduce_random_seq(seq: Sequence[str], P: Pregroup, rng) -> Seq:
    """Contract random defined adjacent pairs until none remain."""
    out = [a for a in seq]
    while True:
        spots = [i for i in range(len(out) - 1) if P.defined(out[i], out[i + 1])]
        if not spots:
            break
        i = rng.choice(spots)
        out[i:i + 2] = [P.prod(out[i], out[i + 1])]
    return tuple(a for a in out if a != P.eps)


def _slide_neighbors(seq: Seq, P: Pregroup):
    # sliding a mediator across a pair keeps the sequence reduced, so no
    # re-checking is needed here
    for i in range(len(seq) - 1):
        a, b = seq[i], seq[i + 1]
        for c in P.right_factors(a):
            if c == P.eps:
                continue
            if not P.defined(P.inv[c], b):
                continue
            yield seq[:i] + (P.prod(a, c), P.prod(P.inv[c], b)) + seq[i + 2:]


def interleave_equivalent(u: Sequence[str], v: Sequence[str], P: Pregroup,
                          max_nodes: int = 10 ** 6) -> bool:
    """Connectivity of two reduced sequences under mediator slides."""
    u, v = tuple(u), tuple(v)
    if not is_reduced(u, P) or not is_reduced(v, P):
        raise PreconditionError("interleave check requires reduced sequences")
    if len(u) != len(v):
        return False
    if u == v:
        return True
    front_u, seen_u = [u], {u}
    front_v, seen_v = [v], {v}
    while front_u and front_v:
        # advance the smaller frontier
        if len(front_u) > len(front_v):
            front_u, seen_u, front_v, seen_v = front_v, seen_v, front_u, seen_u
        nxt = []
        for w in front_u:
            for child in _slide_neighbors(w, P):
                if child in seen_v:
                    return True
                if child not in seen_u:
                    if len(seen_u) + len(seen_v) >= max_nodes:
                        raise ResourceLimitError(
                            "interleave search exceeded its node budget",
                            cap=max_nodes)
                    seen_u.add(child)
                    nxt.append(child)
        front_u = nxt
        if not nxt:
            break
    return False


def up_wp(u: Sequence[str], v: Sequence[str], P: Pregroup,
          max_nodes: int = 10 ** 6) -> bool:
    """Word problem of the universal group on arbitrary element sequences."""
    ru = p_reduce(u, P)
    rv = p_reduce(v, P)
    if len(ru) != len(rv):
        return False
    return interleave_equivalent(ru, rv, P, max_nodes=max_nodes)


def _iso_signature(P: Pregroup, a: str):
    return (a == P.eps, P.inv[a] == a,
            len(P.right_factors(a)), len(P.left_factors(a)))


def table_isomorphic(P: Pregroup, Q: Pregroup) -> bool:
    """Existence of a bijection matching identity, inverses, and the table."""
    if len(P) != len(Q):
        return False
    if P.elements == Q.elements and P.eps == Q.eps and P.inv == Q.inv \
            and P.mult == Q.mult:
        return True
    sig_p = {a: _iso_signature(P, a) for a in P.elements}
    sig_q = {b: _iso_signature(Q, b) for b in Q.elements}
    if sorted(sig_p.values()) != sorted(sig_q.values()):
        return False
    candidates = {a: tuple(b for b in Q.elements if sig_q[b] == sig_p[a])
                  for a in P.elements}
    order = sorted(P.elements, key=lambda a: len(candidates[a]))
    mapping: Dict[str, str] = {}
    used = set()

    def consistent(a: str, b: str) -> bool:
        if Q.inv[b] != mapping.get(P.inv[a], Q.inv[b]):
            return False
        for x, fx in mapping.items():
            for (l, r) in ((a, x), (x, a), (a, a)):
                fl = b if l == a else mapping[l]
                fr = b if r == a else mapping[r]
                c = P.mult.get((l, r))
                fc = Q.mult.get((fl, fr))
                if (c is None) != (fc is None):
                    return False
                if c is not None:
                    img = mapping.get(c, b if c == a else None)
                    if img is not None and img != fc:
                        return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            # full table check under the completed bijection
            for (x, y), z in P.mult.items():
                if Q.mult.get((mapping[x], mapping[y])) != mapping[z]:
                    return False
            return len(P.mult) == len(Q.mult)
        a = order[k]
        if a in mapping:  # placed together with its inverse earlier
            return extend(k + 1)
        for b in candidates[a]:
            if b in used:
                continue
            if not consistent(a, b):
                continue
            mapping[a] = b
            used.add(b)
            ia, ib = P.inv[a], Q.inv[b]
            forced_inv = ia not in mapping
            if forced_inv:
                if ib in used:
                    mapping.pop(a)
                    used.discard(b)
                    continue
                mapping[ia] = ib
                used.add(ib)
            if extend(k + 1):
                return True
            if forced_inv:
                mapping.pop(ia)
                used.discard(ib)
            mapping.pop(a)
            used.discard(b)
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# file format

def parse_pregroup(text: str) -> Pregroup:
    """Parse the line format: elements, eps, inv, mult directives."""
    elements: Optional[Tuple[str, ...]] = None
    eps: Optional[str] = None
    inv: Dict[str, str] = {}
    mult: Dict[Tuple[str, str], str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        if head == "pregroup":
            continue
        if head == "elements":
            if elements is not None:
                raise FormatError("duplicate elements line", line=lineno)
            elements = tuple(parts[1:])
            if not elements:
                raise FormatError("elements line needs at least one name", line=lineno)
        elif head == "eps":
            if len(parts) != 2:
                raise FormatError("eps line needs exactly one name", line=lineno)
            eps = parts[1]
        elif head == "inv":
            if len(parts) != 3:
                raise FormatError("inv line needs two names", line=lineno)
            a, b = parts[1], parts[2]
            for x, y in ((a, b), (b, a)):
                if inv.get(x, y) != y:
                    raise FormatError(f"conflicting inverse for {x!r}", line=lineno)
                inv[x] = y
        elif head == "mult":
            if len(parts) != 5 or parts[3] != "=":
                raise FormatError("mult line must read: mult a b = c",
                                  line=lineno)
            key = (parts[1], parts[2])
            if mult.get(key, parts[4]) != parts[4]:
                raise FormatError(f"conflicting product for {key}", line=lineno)
            mult[key] = parts[4]
        else:
            raise FormatError(f"unknown directive {head!r}", line=lineno)
    if elements is None:
        raise FormatError("missing elements line")
    if eps is None:
        raise FormatError("missing eps line")
    try:
        return Pregroup(elements, eps, inv, mult)
    except StructureError as exc:
        raise FormatError(str(exc)) from exc


def format_pregroup(P: Pregroup) -> str:
    """Inverse of parse_pregroup; entries implied by identity and inverse
    laws are left out."""
    lines = ["pregroup", "elements " + " ".join(P.elements), f"eps {P.eps}"]
    done = set()
    for a in P.elements:
        if a == P.eps or a in done:
            continue
        b = P.inv[a]
        done.add(a)
        done.add(b)
        lines.append(f"inv {a} {b}")
    for (a, b), c in sorted(P.mult.items(), key=lambda kv: (P.index[kv[0][0]],
                                                            P.index[kv[0][1]])):
        if a == P.eps or b == P.eps or b == P.inv[a]:
            continue
        lines.append(f"mult {a} {b} = {c}")
    return "\n".join(lines) + "\n"


def load_pregroup(path) -> Pregroup:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_pregroup(fh.read())


def save_pregroup(P: Pregroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_pregroup(P))
