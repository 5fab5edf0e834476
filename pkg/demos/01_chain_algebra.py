# Basics: monotone self-maps of the chain {0..n-1} as semiring elements.
# Addition is pointwise max, multiplication is left-to-right composition.

from endochain import (
    Endo, add, compose, constant, fixed_points, identity, is_idempotent,
    jump_points, omega, parse_endo, power,
)

# an endomorphism is just its image tuple; literals use the comma form
a = parse_endo("2,2,2,4,5,5,5")
print("a       =", a)
print("a(3)    =", a(3))          # maps are callable
print("n       =", a.n)

# the two semiring operations
b = Endo([1, 1, 1, 3, 5, 5, 6])
print("a + b   =", add(a, b))     # pointwise join, same as a + b
print("a * b   =", compose(a, b)) # first a, then b, same as a * b
print("b * a   =", compose(b, a)) # composition is not commutative

# identity and constants are the obvious idempotents
i = identity(7)
k2 = constant(7, 2)
print("a * i   =", a * i)
print("a * k2  =", a * k2)        # constants absorb on the right

# powers of any element stabilize to an idempotent (the semigroup is aperiodic)
print("a^2     =", power(a, 2))
om = omega(a)
print("omega(a) =", om.endo, " reached at exponent", om.index)
print("idempotent?", is_idempotent(a), "->", is_idempotent(om.endo))

# the geometry of a map: where it crosses the diagonal
print("fixed points of a:", fixed_points(a))
print("jump points of a: ", jump_points(a))
print("identity has no jumps:", jump_points(i))
