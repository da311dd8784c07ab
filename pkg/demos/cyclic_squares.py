"""Squares of binary cyclic codes via sums of defining sets.

For n = 7 the chain <x^4+x^2+x+1> -> <x+1> -> F_2^7 gives a Z_8-additive
cyclic code whose Gray image is linear and quasi-cyclic of index 4.  For
n = 125 every chain stabilises by the second level, while n = 343 needs
three.
"""

from zgray import CyclicContext, brute_force_linear, gray_image, stabilization_level
from zgray.cyclic import cyclic_nested, cyclotomic_cosets, poly_str
from zgray.gray import quasi_cyclic_index_check

ctx = CyclicContext(7)
for k, spec in enumerate(ctx.chain({1, 2, 4}, 3), 1):
    print(f"C{k}: g = {spec.pretty():14s} dimension {spec.dimension}")
image = gray_image(cyclic_nested({1, 2, 4}, 3, ctx))
print(f"image linear {brute_force_linear(image)}, quasi-cyclic {quasi_cyclic_index_check(image)}")

ctx = CyclicContext(125, large=True)
for r in ctx.structure.representatives:
    print(f"n=125 coset {r:3d}: size {len(ctx.structure.coset(r)):3d}, "
          f"minimal polynomial {poly_str(ctx.minimal_polynomial(r))}")
print("n=125 worst stabilisation level:",
      max(stabilization_level(I, 125) for I in cyclotomic_cosets(125).all_unions() if I))
c1 = cyclotomic_cosets(343).coset(1)
print(f"n=343: |C_1| = {len(c1)}, stabilisation level {stabilization_level(c1, 343)}")
