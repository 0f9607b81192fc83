# # Building the chain and checking regularity
#
# Starting from the empty set and repeatedly adding alpha of the current stage
# gives the canonical chain. It is the one family that satisfies all four
# regularity conditions and covers the whole ground set.

from zermelo import ChoiceFunction, GroundSet, build_chain, verify_regular
from zermelo.sets import SubsetFamily

g = GroundSet(["a", "b", "c"])
phi = ChoiceFunction.seeded(g, 5)
chain = build_chain(g, phi)
for k, stage in enumerate(chain.stages):
    print(k, stage)

report = verify_regular(chain.family(), phi)
print(report.summary())

# Families that break a condition come back with a witness.

min_rule = ChoiceFunction.min(g)
for labels in (["a", "ab"], ["", "ab"], ["", "a", "b"]):
    fam = SubsetFamily(g, [g.subset(x) for x in labels])
    rep = verify_regular(fam, min_rule)
    print(fam, "->", rep.failed())
    for cond in rep.conditions:
        if cond.passed is False:
            shown = ", ".join(str(w) for w in cond.witness) or cond.note
            print("   ", cond.name, "->", shown)
