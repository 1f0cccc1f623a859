"""Watch min-variant truncated payoffs converge to energy levels.

In the k-step truncated game the horizon is fixed; giving Player 1 the
extra right to shorten it caps every value at zero, makes the iteration
monotone, and drives the values, on Player 0's energy winning region, down
to exactly the negated least progress measure.  Elsewhere they sink
without bound.  The first arena is everywhere winning (after reweighting
by its value -1), the second has a losing vertex and shows the divergence.
"""

from fractions import Fraction

from mpgsolver import (least_sepm, min_ttpg, min_ttpg_fixpoint, parse_arena,
                       reweight)

WINNING = """
v A 1
v B 0
v C 1
v D 0
v E 0
v F 1
v G 0
e A B 3
e B C 3
e C D -5
e D A -5
e E A 0
e E C 0
e E F 0
e E G 0
e F G -5
e G F 3
"""

MIXED = """
# the minimizer owns p and pumps its negative loop; q loops at zero
v p 1
v q 1
e p p -1
e p q -3
e q q 0
"""


def main():
    arena = reweight(parse_arena(WINNING), Fraction(-1))
    f, k_reached, table = min_ttpg_fixpoint(arena, keep_history=True)
    print("reweighted 7-vertex arena, rows of the min-variant iteration:")
    print("      " + " ".join("%4s" % n for n in arena.names))
    for k, row in enumerate(table.rows):
        print("k=%-3d " % k + " ".join("%4d" % x for x in row))
    print("stationary and equal to -f* from k = %d on" % k_reached)
    print("least measure f*:", least_sepm(arena).values)

    mixed = parse_arena(MIXED)
    table = min_ttpg(mixed, 8)
    print("\nmixed arena: p loses the energy game, q wins")
    for k, row in enumerate(table.rows):
        print("k=%-3d p=%-4d q=%d" % (k, row[0], row[1]))
    f, k_reached, _ = min_ttpg_fixpoint(mixed)
    print("fixpoint on the winning region at k = %d; p is top: %s"
          % (k_reached, f.is_top(0)))


if __name__ == "__main__":
    main()
