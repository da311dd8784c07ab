"""Linear Gray images from nested Reed-Muller chains.

R(0,m) + 2 R(1,m) + 4 R(2,m) has a linear image because each layer squares
into the next.  The odd chain at l = 3 is rejected: R(3,6)^2 = R(6,6) is the
whole space and does not fit inside R(5,6).
"""

from zgray import brute_force_linear, gray_image, nested_code, rm_chain
from zgray.nested import ChainNotClosed

for kind, param in [("low-order", 3), ("low-order", 4), ("even", 2), ("odd", 2)]:
    spec = rm_chain(kind, param)
    code = nested_code(spec)
    dims = [layer.dimension for layer in spec.layers]
    print(f"{kind:9s} {param}: layer dims {dims}, |C| = 2^{code.log_cardinality}, "
          f"image linear: {brute_force_linear(gray_image(code))}")

try:
    rm_chain("odd", 3)
except ChainNotClosed as e:
    print("odd 3:", e)
