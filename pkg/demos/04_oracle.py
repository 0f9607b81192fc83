# # Brute force: every candidate family
#
# Up to four atoms we can afford to test all 2^(2^n) families of subsets.
# Exactly n+1 of them are regular, and they are the prefixes of the chain.

from zermelo import ChoiceFunction, GroundSet, build_chain
from zermelo.oracle import maximality_check, run_oracle, union_of_all_regular

g = GroundSet(["a", "b", "c"])
phi = ChoiceFunction.min(g)
run = run_oracle(g, phi)

print("candidates:", run.candidate_count)
print("regular:   ", len(run.regular_families))
print("rejected by first failing condition:", dict(run.rejected))
for fam in run.regular_families:
    print("   ", fam)

q = union_of_all_regular(run)
print("union of all regular families equals the chain:", q == build_chain(g, phi).family())

# A proper prefix is not maximal; adding one more stage keeps it regular.

report = maximality_check(run.regular_families[1], phi)
print(report.message)
