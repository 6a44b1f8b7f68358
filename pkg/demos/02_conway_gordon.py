# K6 drawn with its vertices on a circle: every over/under choice links an odd number of triangle pairs.
import random

import numpy as np

from linkless import complete_graph, conway_gordon_sum, convex_diagram, crossing_change, disjoint_cycle_pairs, linking_number

k6 = complete_graph(6)
d = convex_diagram(k6)                  # lex rule: the smaller chord passes over
print(len(d.crossings), "crossings")     # one per 4 points on the circle

pairs = disjoint_cycle_pairs(k6)
lk = np.array([int(linking_number(d, a, b)) for a, b in pairs])
for (a, b), v in zip(pairs, lk):
    print(a, b, v)
print("sum mod 2:", lk.sum() % 2)

# flip one crossing: two terms change, the parity does not
flipped = crossing_change(d, 0)
lk2 = np.array([int(linking_number(flipped, a, b)) for a, b in pairs])
print("changed pairs:", np.flatnonzero(lk != lk2), "sum mod 2:", lk2.sum() % 2)

# random assignments
rng = random.Random(0)
sums = [int(conway_gordon_sum(convex_diagram(k6, assignment=[rng.choice("ab") for _ in range(15)])))
        for _ in range(1000)]
print("1000 random diagrams, distinct sums:", set(sums))
