# # Choice functions and the alpha operator
#
# Everything starts from a ground set of labelled atoms and a rule that picks
# one element out of every nonempty subset.

from zermelo import ChoiceFunction, GroundSet, alpha
from zermelo.choice import random_table

g = GroundSet(["a", "b", "c", "d"])

# Three kinds of rule ship with the package. `min` takes the lowest index,
# `seeded` hashes the subset mask with a 64-bit seed, and `table` is explicit.

rules = {
    "min": ChoiceFunction.min(g),
    "seeded(42)": ChoiceFunction.seeded(g, 42),
    "table(7)": random_table(g, 7),
}

s = g.subset(["b", "c", "d"])
for name, phi in rules.items():
    print(f"{name:12s} picks {g.label(phi(s))} from {s}")

# alpha(X) picks from the complement of X, so it always names a fresh atom.

phi = rules["min"]
x = g.subset(["a", "c"])
print(f"alpha({x}) = {g.label(alpha(phi, x))}")

# A hand-written table must cover every nonempty subset and pick a member.

xy = GroundSet(["x", "y"])
table = ChoiceFunction.from_table(xy, {xy.subset("x"): "x", xy.subset("y"): "y", xy.full: "y"})
print(table.describe())
