"""
Legendrian (tb, rot) bookkeeping and tau lower bounds
=====================================================

Start from a Legendrian diagram of the pattern Q with tb = 2, rot = 0,
stabilize it until tb = 0, iterate it, and plug in a Legendrian right-handed
trefoil. The inequality tb + |rot| <= 2 tau - 1 then bounds tau below.
"""

from concordium import fixtures
from concordium.legendrian import (
    FrontDiagram,
    front_tb_rot,
    iterate_pattern,
    legendrian_satellite,
    ray_criterion,
    stabilize_many,
    tau_lower_bound_from_legendrian,
)

Q = fixtures.pattern_Q()
print("Q                 :", Q)
print("iterates distinct :", ray_criterion(Q))

# Two positive stabilizations bring tb down to zero, which is what the
# Legendrian self-satellite needs.
Q2 = stabilize_many(Q, "++")
print("stabilized        :", (Q2.tb, Q2.rot))

trefoil = fixtures.trefoil_legendrian()
for i in range(1, 8):
    k = legendrian_satellite(iterate_pattern(Q2, i), trefoil)
    print(f"i={i}: Q'^i(K) has tb={k.tb}, rot={k.rot}; tau(Q^i(RHT)) >= {tau_lower_bound_from_legendrian(k)}")

# tb and rot of an explicit front: the max-tb right-handed trefoil has four
# cusps (two traversed up, two down) and three positive crossings.
front = FrontDiagram(("L_up", "L_down", "R_up", "R_down", "X+", "X+", "X+"))
print("trefoil front     :", front_tb_rot(front))
