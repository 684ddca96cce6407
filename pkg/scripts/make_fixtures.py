"""Regenerate everything under fixtures/.

Literal systems are written as text; everything derived from a finite
group goes through the builders so the files always match the code.
Run from the repository root:

    python scripts/make_fixtures.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from geothue import builders, groups
from geothue.pregroup import save_pregroup
from geothue.systems import save_system

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"

GEOPER_S = """\
# Geodesic system with no finite geodesically perfect completion
# over this alphabet.
alphabet a b c d e
rule a d d -> a b
rule a d d -> a c
rule b d d -> e b
rule c d d -> e c
"""

GEOPER_T = GEOPER_S + """\
rule b <-> c
"""

GPEX = """\
# Geodesically perfect under the strict overlap reading only; the
# relaxed reading trips over the self-overlap of dd -> f.
alphabet a b c d e f
rule d d -> f
rule a f <-> a b
rule a f <-> a c
rule b f <-> e b
rule c f <-> e c
"""

Z2Z2 = """\
# Free product of two copies of Z/2; Dehn rules only.
alphabet a b
inverse a a
inverse b b
rule a a -> .
rule b b -> .
"""

Z2Z2_GROUP = """\
# The same free product presented as a group system with formal
# inverse letters.  Completion needs two phases to discover A <-> a
# and B <-> b.
alphabet a A b B
inverse a A
inverse b B
rule a a -> .
rule a A -> .
rule A a -> .
rule b b -> .
rule b B -> .
rule B b -> .
"""

Z2_CONVERGENT = """\
# Convergent (ordered, non-symmetric) program for Z x Z: cancellations
# plus commutations that push x-letters to the left.  Read this with
# parse_rule_program, not parse_system.
alphabet x X y Y
rule x X -> .
rule X x -> .
rule y Y -> .
rule Y y -> .
rule y x -> x y
rule Y x -> x Y
rule y X -> X y
rule Y X -> X Y
"""


def write(path: pathlib.Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT)}")


def main() -> None:
    FIX.mkdir(exist_ok=True)

    write(FIX / "geoper_S.rws", GEOPER_S)
    write(FIX / "geoper_T.rws", GEOPER_T)
    write(FIX / "gpex.rws", GPEX)
    write(FIX / "z2z2.rws", Z2Z2)
    write(FIX / "z2z2_group.rws", Z2Z2_GROUP)
    write(FIX / "z2_convergent.rules", Z2_CONVERGENT)

    tits = builders.build_tits_system(builders.CoxeterMatrix(((1, 3), (3, 1))))
    save_system(tits, FIX / "tits_d3.rws")
    print("wrote fixtures/tits_d3.rws")

    free_ab = builders.build_graph_group(builders.CommutationGraph(("a", "b"), ()))
    save_system(free_ab, FIX / "free_ab.rws")
    print("wrote fixtures/free_ab.rws")

    z2_graph = builders.build_graph_group(
        builders.CommutationGraph(("a", "b"), (("a", "b"),)))
    save_system(z2_graph, FIX / "z2_graph.rws")
    print("wrote fixtures/z2_graph.rws")

    # Finite groups and gluing data for the amalgam and HNN examples.
    am = builders.example_amalgam()
    hn = builders.example_hnn()
    groups.save_group(am.A, FIX / "z4.grp")
    groups.save_group(am.B, FIX / "z6.grp")
    groups.save_group(am.H, FIX / "z2h.grp")
    groups.save_group(hn.G, FIX / "s3.grp")
    with open(FIX / "amalgam_a.map", "w", encoding="utf-8") as fh:
        fh.write(groups.format_map(am.embA.map))
    with open(FIX / "amalgam_b.map", "w", encoding="utf-8") as fh:
        fh.write(groups.format_map(am.embB.map))
    with open(FIX / "hnn_emb.map", "w", encoding="utf-8") as fh:
        fh.write(groups.format_map(hn.embA.map))
    with open(FIX / "hnn_phi.map", "w", encoding="utf-8") as fh:
        fh.write(groups.format_map(hn.phi.map))
    for name in ("z4.grp", "z6.grp", "z2h.grp", "s3.grp",
                 "amalgam_a.map", "amalgam_b.map", "hnn_emb.map",
                 "hnn_phi.map"):
        print(f"wrote fixtures/{name}")

    P_am = builders.build_amalgam_pregroup(am.A, am.B, am.embA, am.embB)
    save_pregroup(P_am, FIX / "amalgam_z4z6.pg")
    print(f"wrote fixtures/amalgam_z4z6.pg ({len(P_am.elements)} elements)")

    P_hnn = builders.build_hnn_pregroup(hn.G, hn.embA, hn.embB, hn.phi)
    save_pregroup(P_hnn, FIX / "hnn_s3.pg")
    print(f"wrote fixtures/hnn_s3.pg ({len(P_hnn.elements)} elements)")


if __name__ == "__main__":
    main()
