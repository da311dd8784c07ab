"""The octacode over Z_4 and its Gray image, the Nordstrom-Robinson code.

The image is a nonlinear binary (16, 256, 6) code.  Both linearity tests
find a failing pair, while the cheaper Schur-chain test cannot decide.
"""

from zgray import decide, gray_image, linear_by_decomposition, min_hamming_distance, min_lee_distance
from zgray.linearity import nonlinear_by_schur_witness, replay_witness
from zgray.tables import octacode

code = octacode()
image = gray_image(code)
print(f"|O| = {len(code)}, image length {image.length}, {len(image)} words")
print(f"d_Lee = {min_lee_distance(code)}, d_H = {min_hamming_distance(code)}")

print("Schur-chain witness:", nonlinear_by_schur_witness(code))
verdict = linear_by_decomposition(code)
c, d = verdict.witness
print(f"verdict {verdict.verdict}, first failing pair c={c.entries} d={d.entries}")

c, d = (0, 0, 0, 1, 2, 3, 1, 1), (0, 1, 0, 0, 1, 2, 3, 1)
prod = tuple(2 * (a & b) % 4 for a, b in zip(c, d))
print(f"2(c & d) = {prod} in O? {not replay_witness(code, c, d)}")
print("decide():", decide(code).verdict)
