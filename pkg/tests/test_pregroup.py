import random

import pytest

from geothue.errors import FormatError, PreconditionError, StructureError
from geothue.pregroup import (Pregroup, check_axioms, format_pregroup,
                              interleave_equivalent, is_reduced, p_reduce,
                              parse_pregroup, reduce_random_seq,
                              table_isomorphic, universal_system,
                              universal_system_prime, up_wp)

Z4_TEXT = """
elements 1 a a2 a3
eps 1
inv a a3
inv a2 a2
mult a a = a2
mult a a2 = a3
mult a2 a = a3
mult a2 a3 = a
mult a3 a2 = a
mult a3 a3 = a2
"""


def z4():
    return parse_pregroup(Z4_TEXT)


def free_pregroup():
    # ranked-free pregroup on one generator: only inverse products defined
    return parse_pregroup("""
    elements 1 x X
    eps 1
    inv x X
    """)


def test_parse_materializes_identity_and_inverses():
    P = z4()
    assert P.prod("1", "a") == "a"
    assert P.prod("a", "a3") == "1"
    assert P.inverse("a2") == "a2"
    assert P.defined("a", "a")
    assert not free_pregroup().defined("x", "x")


def test_prod_undefined_raises():
    with pytest.raises(PreconditionError):
        free_pregroup().prod("x", "x")


def test_conflicting_table_rejected():
    # a * a must be 1 since a is its own inverse
    with pytest.raises(FormatError):
        parse_pregroup("""
        elements 1 a
        eps 1
        inv a a
        mult a a = a
        """)
    with pytest.raises(StructureError):
        Pregroup(("1", "a"), "1", {"a": "a"}, {("a", "a"): "a"})


def test_axioms_pass_on_fixtures(amalgam_pregroup, hnn_pregroup):
    assert check_axioms(z4()).ok
    assert check_axioms(amalgam_pregroup).ok
    assert check_axioms(hnn_pregroup).ok


def test_axiom_p4_failure_detected():
    # c*c defined, (cc)c and c(cc) both undefined: associativity P4 breaks
    P = parse_pregroup("""
    elements 1 c C d
    eps 1
    inv c C
    inv d d
    mult c c = d
    """)
    rep = check_axioms(P)
    assert not rep.ok
    assert not rep.p4.ok


def test_format_parse_roundtrip(amalgam_pregroup, hnn_pregroup):
    for P in (z4(), amalgam_pregroup, hnn_pregroup):
        Q = parse_pregroup(format_pregroup(P))
        assert Q.elements == P.elements
        assert Q.eps == P.eps
        assert Q.inv == P.inv
        assert Q.mult == P.mult


def test_universal_system_shapes(amalgam_pregroup):
    S = universal_system(amalgam_pregroup)
    ab = S.alphabet
    assert ab.names == amalgam_pregroup.elements
    eps = amalgam_pregroup.eps
    assert any(r.lhs == (ab.id(eps),) and r.rhs == () for r in S.reducing)
    # every defined product appears as a two letter rule
    for (x, y), z in amalgam_pregroup.mult.items():
        assert any(r.lhs == (ab.id(x), ab.id(y)) for r in S.reducing)


def test_universal_system_prime_excludes_eps(amalgam_pregroup):
    S = universal_system_prime(amalgam_pregroup)
    assert amalgam_pregroup.eps not in S.alphabet.names
    assert S.inverse_pairing is not None
    for r in S.reducing:
        assert len(r.lhs) == 2 and len(r.rhs) <= 1


def test_p_reduce_contracts_to_reduced(amalgam_pregroup):
    P = amalgam_pregroup
    out = p_reduce(["r", "r"], P)
    assert out == ("r2",)
    assert p_reduce(["r", "r3"], P) == ()
    assert is_reduced(out, P)
    # mixed-factor sequences with no defined products stay put
    mixed = ("r", "s")
    assert p_reduce(mixed, P) == mixed


def test_p_reduce_drops_eps_letters(amalgam_pregroup):
    P = amalgam_pregroup
    assert p_reduce(["1", "r", "1"], P) == ("r",)
    assert p_reduce(["1"], P) == ()


def test_p_reduce_cascade(amalgam_pregroup):
    # r * (r3 s) exposes a second contraction after the first one fires
    P = amalgam_pregroup
    assert p_reduce(["r", "r", "r2", "s"], P) == ("s",)


def test_reduce_random_always_maximal(amalgam_pregroup):
    P = amalgam_pregroup
    rng = random.Random(5)
    for _ in range(50):
        seq = [rng.choice(P.elements) for _ in range(rng.randrange(9))]
        out = reduce_random_seq(seq, P, rng)
        assert is_reduced(out, P)


def test_interleave_equivalent_basic(amalgam_pregroup):
    P = amalgam_pregroup
    # r2 lies in both factors, so it slides across the factor boundary
    u = ("s", "r")
    shifted = (P.prod("s", "r2"), P.prod(P.inverse("r2"), "r"))
    assert shifted == ("s4", "r3")
    assert is_reduced(u, P) and is_reduced(shifted, P)
    assert interleave_equivalent(u, shifted, P)
    assert interleave_equivalent(shifted, u, P)
    assert not interleave_equivalent(u, ("s2", "r"), P)


def test_interleave_requires_reduced(amalgam_pregroup):
    with pytest.raises(PreconditionError):
        interleave_equivalent(("r", "r"), ("r2",), amalgam_pregroup)


def test_up_wp_accepts_unreduced_inputs(amalgam_pregroup):
    P = amalgam_pregroup
    assert up_wp(("r", "r", "s"), ("r2", "s"), P)
    assert up_wp(("r", "r3"), (), P)
    assert not up_wp(("r",), ("s",), P)


def test_table_isomorphic_invariant_under_renaming(amalgam_pregroup):
    P = amalgam_pregroup
    sub = {"r": "u", "r2": "u2", "r3": "u3",
           "s": "v", "s2": "v2", "s4": "v4", "s5": "v5"}
    lines = []
    for line in format_pregroup(P).splitlines():
        head, *rest = line.split()
        lines.append(" ".join([head] + [sub.get(t, t) for t in rest]))
    renamed = parse_pregroup("\n".join(lines))
    assert table_isomorphic(P, renamed)
    assert table_isomorphic(renamed, P)


def test_table_isomorphic_rejects_different_tables():
    P = z4()
    # Klein four group table over the same carrier size
    Q = parse_pregroup("""
    elements 1 a b c
    eps 1
    inv a a
    inv b b
    inv c c
    mult a b = c
    mult b a = c
    mult a c = b
    mult c a = b
    mult b c = a
    mult c b = a
    """)
    assert check_axioms(Q).ok
    assert not table_isomorphic(P, Q)


def test_table_isomorphic_identity(hnn_pregroup):
    assert table_isomorphic(hnn_pregroup, hnn_pregroup)
