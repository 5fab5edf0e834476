# Powers of every element reach a unique idempotent; grouping by that
# idempotent partitions the whole semiring into classes that are themselves
# semirings, with orders given by products of Catalan numbers.

from endochain import (
    catalan, class_of, class_order, class_order_printed, congruence_counterexample,
    equivalent, mixed_type_product_probe, parse_endo, type_of,
    validate_noncongruence_triple,
)

eps = parse_endo("2,2,2,5,5,5,5")
alpha = parse_endo("2,2,2,4,5,5,5")
print("alpha ~ eps:", equivalent(alpha, eps))

# the type of a class: fixed blocks of the idempotent plus one jump per gap
td = type_of(eps)
print("type:", td)

# every member fixes the blocks and avoids the diagonal elsewhere;
# each diagonal-free run of length p contributes catalan(p) choices
rep = class_of(eps)
print(f"class of {eps}: {rep.order_bruteforce} members")
for m in rep.members:
    print("  ", m)
print("order formula:", rep.order_formula, " closure:", rep.closure_ok)
print("catalan numbers:", [catalan(p) for p in range(8)])

# a class where the uncorrected printed formula overcounts
eps2 = parse_endo("1,1,1,5,5,5,5")
td2 = type_of(eps2)
print()
print(f"class of {eps2}: brute force {class_of(eps2).order_bruteforce},",
      f"formula {class_order(td2)}, printed variant {class_order_printed(td2)}")

# same fixed points, different jumps: the product can gain NEW fixed points
w = next(
    w for w in mixed_type_product_probe(7)
    if str(w.alpha) == "2,2,2,4,5,5,5" and str(w.beta) == "2,2,2,2,3,5,5"
)
print()
print(f"{w.alpha} * {w.beta} = {w.product}; new fixed points {w.new_fixed}")

# consequence: the class equivalence is not a multiplicative congruence
triple = congruence_counterexample(3)
valid, ag, bg = validate_noncongruence_triple(*triple)
a, b, g = triple
print()
print(f"smallest counterexample (n=3): alpha={a} beta={b} gamma={g}")
print(f"alpha~beta but alpha*gamma={ag} !~ beta*gamma={bg} (valid: {valid})")
