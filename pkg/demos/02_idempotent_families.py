# Idempotents with a prescribed fixed-point set form a semiring whose order
# is the product of the gaps between consecutive fixed points.

from endochain import (
    cayley_tables, compose, enumerate_id_family, id_family_order, ideal_check,
    is_idempotent, parse_endo,
)

# all idempotents of the 7-chain fixing exactly {1, 5}
fam = enumerate_id_family(7, (1, 5))
print("members with fixed set {1,5}:")
for m in fam.members:
    print("  ", m)
print("order formula:", id_family_order(7, (1, 5)))

# the family's Cayley tables: sums climb the chain, products keep the left factor
ct = cayley_tables(list(fam.members))
print()
print(ct.render_text())
print()
print("closed under both operations:", ct.closed)

# the family is an ideal among all maps fixing the same points
rep = ideal_check(7, (1, 5))
print("ideal check:", rep.status, f"({rep.instances} products checked)")

# but products ACROSS families need not stay idempotent
alpha = parse_endo("1,1,5,5,5,5,5,5")   # fixes {1,5}
beta = parse_endo("2,2,2,5,5,5,5,5")    # fixes {2,5}
prod = compose(alpha, beta)
print()
print(f"{alpha} * {beta} = {prod}; idempotent? {is_idempotent(prod)}")

# two idempotents that multiply out of the idempotent set entirely
x, y = parse_endo("0,0,2"), parse_endo("0,1,1")
print(f"{x} * {y} = {compose(x, y)}; idempotent? {is_idempotent(compose(x, y))}")
