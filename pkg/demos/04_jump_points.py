# Jump points: where a map crosses the diagonal upward.  Every gap between
# adjacent non-consecutive fixed points holds exactly one, and the jump
# tuple pins an idempotent down completely.

from endochain import (
    enumerate_idempotents_by_jumps, gap_jump_point, jump_points, k_minus, k_plus,
    no_jump_idempotent_count, parse_endo, segment_classify,
)

# the two near-identity maps jump right at the disturbed point
print("k_plus(6,2) =", k_plus(6, 2), " jumps:", jump_points(k_plus(6, 2)))
print("k_minus(6,2) =", k_minus(6, 2), " jumps:", jump_points(k_minus(6, 2)))

# one jump per fixed gap, found directly
eps = parse_endo("1,1,1,3,5,5")
print()
print("eps =", eps, " fixed gaps (1,3) and (3,5)")
print("jump in gap 0:", gap_jump_point(eps, 0))
print("jump in gap 1:", gap_jump_point(eps, 1), " (consecutive with the first)")

# between adjacent jumps an idempotent clamps onto one fixed block
big = parse_endo("0,0,3,3,4,4,7,7")
print()
print("big =", big, " jumps:", jump_points(big))
seg = segment_classify(big, 2, 6)
print("segment on [2,5]:", seg.tag, f"block [{seg.k},{seg.ell}]")

# idempotents sharing a jump set form a semiring; the jump-free ones
# are the clamps onto an interval, counted by binom(n+1, 2)
group = enumerate_idempotents_by_jumps(6, (3, 4))
print()
print("idempotents of the 6-chain with jumps {3,4}:")
for m in group:
    print("  ", m)
for n in range(1, 8):
    free = enumerate_idempotents_by_jumps(n, ())
    print(f"jump-free idempotents at n={n}: {len(free)} = binom({n + 1},2) =",
          no_jump_idempotent_count(n))
