# # Any two regular families are comparable
#
# For regular families under the same rule, one is always an initial segment
# of the other. `compare_regular` names which.

import itertools

from zermelo import ChoiceFunction, GroundSet, compare_regular
from zermelo.oracle import enumerate_regular_families

g = GroundSet(["a", "b", "c"])
phi = ChoiceFunction.seeded(g, 11)
fams = enumerate_regular_families(g, phi)

for left, right in itertools.product(fams[1:3], fams[2:]):
    verdict = compare_regular(left, right, phi)
    print(f"{str(left):24s} vs {str(right):24s} {verdict.relation.value}")
    print("    agreement core:", verdict.core)
